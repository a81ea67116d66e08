//! Named checks runnable over a range of degrees.

use std::ops::RangeInclusive;

use clap::ValueEnum;
use serde_json::json;

use crate::compositions::canonical_order;
use crate::error::Result;
use crate::kostka;
use crate::ncsf::{self, at_qt, change_basis, htilde, htilde_lambda, s_basis, Basis};
use crate::product_rule;
use crate::qsym;
use crate::report::{CheckReport, Method};
use crate::statistics::Mode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Check {
    Eq4,
    Eq5,
    Eq5Printed,
    Det,
    Blocks,
    Column,
    Monomial,
    Specialize,
    Lattice,
    LambdaConsistency,
    Duality,
    ClosedForm,
    DenominatorPairs,
    DegreeBalance,
    Triangular,
    Factorize,
    Product,
}

/// Largest `|I| + n` covered by the product check.
pub const PRODUCT_BOUND: usize = 6;

impl Check {
    pub fn name(self) -> String {
        self.to_possible_value().expect("named variant").get_name().to_string()
    }

    /// Checks run when none are requested. The printed-exponent variant of the
    /// product identity is excluded since it is expected to fail.
    pub fn defaults() -> Vec<Check> {
        Check::value_variants().iter().copied().filter(|c| *c != Check::Eq5Printed).collect()
    }

    /// Degrees on which the check is defined.
    pub fn domain(self) -> RangeInclusive<usize> {
        match self {
            Check::Eq4 | Check::Eq5 | Check::Monomial | Check::Specialize | Check::Lattice => 1..=12,
            Check::LambdaConsistency | Check::Factorize => 1..=12,
            Check::Eq5Printed => 1..=12,
            Check::Product => 1..=PRODUCT_BOUND - 1,
            _ => 2..=12,
        }
    }

    /// Degrees used when no range is given.
    pub fn default_range(self) -> RangeInclusive<usize> {
        match self {
            Check::Eq4 | Check::Eq5 | Check::Specialize => 1..=7,
            Check::Eq5Printed => 3..=3,
            Check::Det | Check::Duality => 2..=7,
            Check::Blocks | Check::Column | Check::DenominatorPairs => 2..=8,
            Check::Monomial => 1..=6,
            Check::Lattice | Check::LambdaConsistency => 1..=6,
            Check::ClosedForm => 2..=4,
            Check::DegreeBalance | Check::Triangular => 2..=6,
            Check::Factorize => 1..=5,
            Check::Product => 1..=PRODUCT_BOUND - 1,
        }
    }

    /// Checks that depend on the single/multi choice.
    pub fn uses_mode(self) -> bool {
        matches!(self, Check::Det | Check::Triangular | Check::Monomial)
    }
}

/// Runs one check at one degree. Mode-dependent checks run in both modes when
/// `mode` is `None`. Degrees outside the domain yield no reports.
pub fn run(check: Check, n: usize, mode: Option<Mode>, seed: u64) -> Result<Vec<CheckReport>> {
    if !check.domain().contains(&n) {
        return Ok(Vec::new());
    }
    if check.uses_mode() {
        let modes = mode.map_or_else(|| vec![Mode::Single, Mode::Multi], |m| vec![m]);
        return modes.into_iter().map(|m| run_with_mode(check, n, m, seed)).collect();
    }
    Ok(vec![match check {
        Check::Eq4 => kostka::symmetry_eq4(n),
        Check::Eq5 => kostka::product_identity_eq5(n),
        Check::Eq5Printed => kostka::product_identity_eq5_printed(n),
        Check::Blocks => kostka::block_check(n)?,
        Check::Column => kostka::column_check(n)?,
        Check::Specialize => specialize_check(n),
        Check::Lattice => lattice_check(n),
        Check::LambdaConsistency => lambda_check(n),
        Check::Duality => qsym::duality_check(n, seed)?,
        Check::ClosedForm => qsym::closed_form_check(n)?,
        Check::DenominatorPairs => qsym::denominator_pairs_check(n)?,
        Check::DegreeBalance => qsym::degree_balance_check(n)?,
        Check::Factorize => factorize_check(n),
        Check::Product => product_rule::verify_product_range(n, PRODUCT_BOUND, seed)?,
        Check::Det | Check::Triangular | Check::Monomial => unreachable!("mode-dependent"),
    }])
}

fn run_with_mode(check: Check, n: usize, mode: Mode, seed: u64) -> Result<CheckReport> {
    match check {
        Check::Det => kostka::det_check(n, mode, seed),
        Check::Triangular => kostka::triangular_products(n, mode, seed),
        Check::Monomial => Ok(kostka::monomiality_check(n, mode)),
        _ => unreachable!("mode-independent"),
    }
}

/// `H̃_J(0,1) = S^J` and `H̃_J(1,0) = S^{conj J}`.
pub fn specialize_check(n: usize) -> CheckReport {
    let mut rep = CheckReport::new("specialize", n, Some(Mode::Single), Method::Symbolic);
    for j in canonical_order(n) {
        let h = htilde(&j, Mode::Single);
        let a = h.specialize(at_qt(0, 1));
        rep.record(a == s_basis(&j), || json!({ "J": j, "at": "q=0,t=1", "got": a.to_text() }));
        let b = h.specialize(at_qt(1, 0));
        rep.record(b == s_basis(&j.conjugate()), || json!({ "J": j, "at": "q=1,t=0", "got": b.to_text() }));
    }
    rep
}

/// `q^{binom(l(J),2)} H̃_J(q, 1/q) ≡ R_J mod qL` for all `J`.
pub fn lattice_check(n: usize) -> CheckReport {
    let mut rep = CheckReport::new("lattice", n, Some(Mode::Single), Method::Symbolic);
    for j in canonical_order(n) {
        let l = ncsf::lattice_congruence(&j);
        rep.record(l.holds, || json!({ "J": j, "exponent": l.exponent, "offending": l.offending }));
    }
    rep
}

/// The closed-form `Λ` expansion converts back to `H̃_J`.
pub fn lambda_check(n: usize) -> CheckReport {
    let mut rep = CheckReport::new("lambda-consistency", n, Some(Mode::Single), Method::Symbolic);
    for j in canonical_order(n) {
        let back = change_basis(&htilde_lambda(&j), Basis::R);
        let h = htilde(&j, Mode::Single);
        rep.record(back == h, || json!({ "J": j, "from_lambda": back.to_text(), "direct": h.to_text() }));
    }
    rep
}

/// `H̃_J(A; Q, 1)` factors into one-row pieces on shifted `q` windows.
pub fn factorize_check(n: usize) -> CheckReport {
    let mut rep = CheckReport::new("factorize", n, Some(Mode::Multi), Method::Symbolic);
    for j in canonical_order(n) {
        let (lhs, rhs) = ncsf::t_one_factorization(&j);
        rep.record(lhs == rhs, || json!({ "J": j, "lhs": lhs.to_text(), "rhs": rhs.to_text() }));
    }
    rep
}
