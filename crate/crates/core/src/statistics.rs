//! Descent statistics attached to the boxes of a ribbon diagram.
//!
//! For box `k` of `I` sitting in cell `(row, col)`:
//!
//! | statistic | `k` a descent  | `k` not a descent |
//! |-----------|----------------|-------------------|
//! | `v`       | `t^row`        | `q^col`           |
//! | `ṽ`       | `t_row`        | `q_col`           |
//! | `u`       | `q^col`        | `t^row`           |
//! | `e`       | `t^row - 1`    | `q^col - 1`       |
//!
//! with `row = 1 + d(I,k)` and `col = k - d(I,k)`.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::algebra::{MultiPoly, Var};
use crate::compositions::Composition;

/// Single-parameter `(q, t)` or multiparameter `(q_1, .., t_1, ..)` alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Single,
    Multi,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Single => "single",
            Mode::Multi => "multi",
        }
    }
}

/// `t^i` or `t_i` depending on the mode.
pub fn t_power(i: usize, mode: Mode) -> MultiPoly {
    match mode {
        Mode::Single => MultiPoly::var_pow(Var::T, i as u32),
        Mode::Multi => MultiPoly::var(Var::t(i as u32)),
    }
}

/// `q^j` or `q_j` depending on the mode.
pub fn q_power(j: usize, mode: Mode) -> MultiPoly {
    match mode {
        Mode::Single => MultiPoly::var_pow(Var::Q, j as u32),
        Mode::Multi => MultiPoly::var(Var::q(j as u32)),
    }
}

fn cell(i: &Composition, k: usize) -> (usize, usize) {
    let d = i.d_unchecked(k);
    (1 + d, k - d)
}

/// `v(I,k)` (single) or `ṽ(I,k)` (multi), for `1 <= k <= n - 1`.
pub fn v(i: &Composition, k: usize, mode: Mode) -> MultiPoly {
    let (row, col) = cell(i, k);
    if i.is_descent(k) {
        t_power(row, mode)
    } else {
        q_power(col, mode)
    }
}

/// `u(I,k)`: `q^{k-d}` on descents, `t^{1+d}` elsewhere.
pub fn u(i: &Composition, k: usize) -> MultiPoly {
    let (row, col) = cell(i, k);
    if i.is_descent(k) {
        q_power(col, Mode::Single)
    } else {
        t_power(row, Mode::Single)
    }
}

/// `e(J,k) = v(J,k) - 1`.
pub fn e(j: &Composition, k: usize) -> MultiPoly {
    &v(j, k, Mode::Single) - &MultiPoly::one()
}

/// Indeterminates occurring in degree-`n` objects of the given mode.
pub fn variables(n: usize, mode: Mode) -> Vec<Var> {
    match mode {
        Mode::Single => vec![Var::Q, Var::T],
        Mode::Multi => {
            let m = n.saturating_sub(1) as u32;
            (1..=m).map(Var::q).chain((1..=m).map(Var::t)).collect()
        }
    }
}

/// Specialization `q_j -> q^j`, `t_j -> t^j` (index 0 untouched).
pub fn to_single_parameter(var: Var) -> Option<MultiPoly> {
    use crate::algebra::Family;
    match var.family {
        Family::Q if var.index > 0 => Some(MultiPoly::var_pow(Var::Q, var.index)),
        Family::T if var.index > 0 => Some(MultiPoly::var_pow(Var::T, var.index)),
        _ => None,
    }
}
