//! Laurent polynomials in a single variable, used for the `t = 1/q` substitution.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{MultiPoly, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    pub var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        Self { var, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { var: self.var, terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// True when every exponent is at least `k`.
    pub fn divisible_by_power(&self, k: i64) -> bool {
        self.min_exponent().is_none_or(|m| m >= k)
    }
}

/// Maps `q^a t^b` to `q^(a-b)`.
pub fn to_laurent(p: &MultiPoly) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(Var::Q);
    for (m, c) in p.terms() {
        let mut exp = 0i64;
        for &(v, e) in m.pairs() {
            match v {
                Var::Q => exp += e as i64,
                Var::T => exp -= e as i64,
                _ => return Err(Error::NotBivariate(p.to_text())),
            }
        }
        out.add_term(exp, c.clone());
    }
    Ok(out)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let name = self.var.name();
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs} ")?;
                    }
                    if e == 1 {
                        write!(f, "{name}")?
                    } else {
                        write!(f, "{name}^{e}")?
                    }
                }
            }
        }
        Ok(())
    }
}
