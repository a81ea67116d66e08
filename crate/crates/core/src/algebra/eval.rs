//! Seeded exact rational sample points for polynomial identity testing.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{MultiPoly, Var};
use super::rational::FactoredRational;
use crate::error::{Error, Result};

/// Default magnitude bound for sampled numerators and denominators.
pub const POINT_BOUND: i64 = 1 << 31;

const MAX_ATTEMPTS: usize = 64;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PointAssignment {
    values: BTreeMap<Var, BigRational>,
}

impl PointAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, x: BigRational) -> Self {
        self.values.insert(v, x);
        self
    }

    pub fn set(&mut self, v: Var, x: BigRational) {
        self.values.insert(v, x);
    }

    pub fn get(&self, v: Var) -> Option<BigRational> {
        self.values.get(&v).cloned()
    }

    pub fn lookup(&self) -> impl Fn(Var) -> Option<BigRational> + Copy + '_ {
        move |v| self.values.get(&v).cloned()
    }

    pub fn eval_poly(&self, p: &MultiPoly) -> Result<BigRational> {
        p.eval(self.lookup())
    }

    pub fn eval_rational(&self, r: &FactoredRational) -> Result<BigRational> {
        r.eval(self.lookup())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &BigRational)> {
        self.values.iter()
    }
}

/// Deterministic generator of sample points.
pub struct PointSampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        Self::with_bound(seed, POINT_BOUND)
    }

    pub fn with_bound(seed: u64, bound: i64) -> Self {
        assert!(bound >= 2, "sample bound too small");
        Self { rng: ChaCha8Rng::seed_from_u64(seed), bound }
    }

    pub fn rational(&mut self) -> BigRational {
        let num = self.rng.gen_range(1 - self.bound..self.bound);
        let den = self.rng.gen_range(1..self.bound);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// A point on `vars` at which none of `guards` vanishes.
    pub fn point(&mut self, vars: &[Var], guards: &[MultiPoly]) -> Result<PointAssignment> {
        for _ in 0..MAX_ATTEMPTS {
            let mut pt = PointAssignment::new();
            for &v in vars {
                pt.set(v, self.rational());
            }
            let ok = guards
                .iter()
                .all(|g| pt.eval_poly(g).map(|x| x != BigRational::from_integer(0.into())).unwrap_or(false));
            if ok {
                return Ok(pt);
            }
        }
        Err(Error::SamplingExhausted(MAX_ATTEMPTS))
    }
}
