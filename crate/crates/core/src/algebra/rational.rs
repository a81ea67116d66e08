//! Rational functions whose denominators are products of binomials.
//!
//! Every denominator produced in this crate is a product of factors
//! `(t_a - q_b)`, `(t_a - z_k)`, `(t_a - 1)`, `(1 - q_b)` or, in single-parameter
//! form, `(t^i - q^j)`. Keeping those factors symbolic avoids multivariate gcds:
//! sums are formed over the least common multiple of the factor multisets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::linalg::Ring;
use super::poly::{Family, Monomial, MultiPoly, PolyTerm, Var};
use crate::error::{Error, Result};

/// `plus - minus` for two distinct monomials, in canonical orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// Builds `plus - minus`; the flag reports whether the canonical form is
    /// the negative of the requested one.
    pub fn new(plus: Monomial, minus: Monomial) -> Result<(Self, bool)> {
        if plus == minus {
            return Err(Error::ZeroBinomial);
        }
        let has = |m: &Monomial, f: Family| m.family_degree(f) > 0;
        // q-side subtracted, t-side in front, lex order as tie-break.
        let keep = match (has(&plus, Family::Q), has(&minus, Family::Q)) {
            (false, true) => true,
            (true, false) => false,
            _ => match (has(&plus, Family::T), has(&minus, Family::T)) {
                (true, false) => true,
                (false, true) => false,
                _ => plus > minus,
            },
        };
        Ok(if keep { (Self { plus, minus }, false) } else { (Self { plus: minus, minus: plus }, true) })
    }

    /// `(t_a - q_b)` style difference of two variables (or 1 when `None`).
    pub fn of_vars(plus: Option<Var>, minus: Option<Var>) -> Result<(Self, bool)> {
        let m = |v: Option<Var>| v.map_or_else(Monomial::one, Monomial::var);
        Self::new(m(plus), m(minus))
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn to_poly(&self) -> MultiPoly {
        &MultiPoly::monomial(self.plus.clone()) - &MultiPoly::monomial(self.minus.clone())
    }

    pub fn variables(&self) -> Vec<Var> {
        self.plus.pairs().iter().chain(self.minus.pairs()).map(|&(v, _)| v).collect()
    }

    pub fn to_text(&self) -> String {
        format!("{} - {}", self.plus.to_text(), self.minus.to_text())
    }

    pub fn to_latex(&self) -> String {
        format!("{}-{}", self.plus.to_latex(), self.minus.to_latex())
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `num / prod(den)` with `den` a multiset of binomials.
#[derive(Clone, Debug, Default)]
pub struct FactoredRational {
    num: MultiPoly,
    den: BTreeMap<Binomial, u32>,
}

impl FactoredRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        Self { num, den: BTreeMap::new() }
    }

    pub fn new(num: MultiPoly, den: impl IntoIterator<Item = Binomial>) -> Self {
        let mut out = Self::from_poly(num);
        for b in den {
            *out.den.entry(b).or_default() += 1;
        }
        if out.num.is_zero() {
            out.den.clear();
        }
        out
    }

    /// `1 / (plus - minus)`.
    pub fn inverse_binomial(plus: Monomial, minus: Monomial) -> Result<Self> {
        let (b, flipped) = Binomial::new(plus, minus)?;
        let num = if flipped { MultiPoly::constant(-1) } else { MultiPoly::one() };
        Ok(Self::new(num, [b]))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<Binomial, u32> {
        &self.den
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = &Binomial> {
        self.den.iter().flat_map(|(b, &k)| std::iter::repeat_n(b, k as usize))
    }

    pub fn denominator_poly(&self) -> MultiPoly {
        product_of(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        Self { num: &self.num * p, den: self.den.clone() }.normalized()
    }

    /// Numerator over the given common denominator, which must be a multiple
    /// of this denominator.
    pub fn numerator_over(&self, common: &BTreeMap<Binomial, u32>) -> MultiPoly {
        let mut extra = BTreeMap::new();
        for (b, &k) in common {
            let have = self.den.get(b).copied().unwrap_or(0);
            assert!(have <= k, "common denominator is not a multiple");
            if k > have {
                extra.insert(b.clone(), k - have);
            }
        }
        debug_assert!(self.den.keys().all(|b| common.contains_key(b)));
        &self.num * &product_of(&extra)
    }

    /// Cancels denominator factors that divide the numerator.
    pub fn reduced(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = BTreeMap::new();
        for (b, &k) in &self.den {
            let bp = b.to_poly();
            let mut left = k;
            while left > 0 {
                match num.try_div(&bp) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.insert(b.clone(), left);
            }
        }
        Self { num, den }
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
        }
        self
    }

    pub fn eval(&self, value: impl Fn(Var) -> Option<BigRational> + Copy) -> Result<BigRational> {
        let mut d = BigRational::from_integer(BigInt::from(1));
        for (b, &k) in &self.den {
            let v = b.to_poly().eval(value)?;
            if Zero::is_zero(&v) {
                return Err(Error::VanishingDenominator);
            }
            d *= num_traits::pow(v, k as usize);
        }
        Ok(self.num.eval(value)? / d)
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars = self.num.variables();
        vars.extend(self.den.keys().flat_map(Binomial::variables));
        vars.sort();
        vars.dedup();
        vars
    }

    fn render(&self, latex: bool) -> String {
        let num = if latex { self.num.to_latex() } else { self.num.to_text() };
        if self.den.is_empty() {
            return num;
        }
        let mut ordered: Vec<(&Binomial, &u32)> = self.den.iter().collect();
        ordered.sort_by(|a, b| (a.0.plus.pairs(), a.0.minus.pairs()).cmp(&(b.0.plus.pairs(), b.0.minus.pairs())));
        let factors: Vec<String> = ordered
            .into_iter()
            .map(|(b, &k)| {
                let body = if latex { b.to_latex() } else { b.to_text() };
                match k {
                    1 => format!("({body})"),
                    k if latex => format!("({body})^{{{k}}}"),
                    k => format!("({body})^{k}"),
                }
            })
            .collect();
        if latex {
            format!("\\frac{{{num}}}{{{}}}", factors.join(""))
        } else {
            let num = if self.num.num_terms() > 1 { format!("({num})") } else { num };
            format!("{num}/{}", factors.join(""))
        }
    }

    pub fn to_text(&self) -> String {
        self.render(false)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    pub fn to_json(&self) -> RationalJson {
        let first_negative = self.num.to_json().first().is_some_and(|t| t.coeff.starts_with('-'));
        let (sign, numerator) = if first_negative { (-1, -&self.num) } else { (1, self.num.clone()) };
        RationalJson {
            sign,
            numerator: numerator.to_json(),
            denominator: self
                .den
                .iter()
                .map(|(b, &mult)| DenominatorFactor { factor: b.plus.to_text() + "-" + &b.minus.to_text(), mult })
                .collect(),
        }
    }
}

fn product_of(den: &BTreeMap<Binomial, u32>) -> MultiPoly {
    den.iter().fold(MultiPoly::one(), |acc, (b, &k)| &acc * &b.to_poly().pow(k))
}

fn lcm(a: &BTreeMap<Binomial, u32>, b: &BTreeMap<Binomial, u32>) -> BTreeMap<Binomial, u32> {
    let mut out = a.clone();
    for (f, &k) in b {
        let slot = out.entry(f.clone()).or_default();
        *slot = (*slot).max(k);
    }
    out
}

/// JSON form: `{sign, numerator, denominator: [{factor: "t^2-q", mult: 1}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub sign: i32,
    pub numerator: Vec<PolyTerm>,
    pub denominator: Vec<DenominatorFactor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenominatorFactor {
    pub factor: String,
    pub mult: u32,
}

impl Serialize for FactoredRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl PartialEq for FactoredRational {
    /// Equality by cross-multiplication over the common denominator.
    fn eq(&self, other: &Self) -> bool {
        let common = lcm(&self.den, &other.den);
        self.numerator_over(&common) == other.numerator_over(&common)
    }
}

impl PartialEq<MultiPoly> for FactoredRational {
    fn eq(&self, other: &MultiPoly) -> bool {
        self.num == other * &self.denominator_poly()
    }
}

impl From<MultiPoly> for FactoredRational {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for FactoredRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Add<&FactoredRational> for &FactoredRational {
    type Output = FactoredRational;
    fn add(self, rhs: &FactoredRational) -> FactoredRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let common = lcm(&self.den, &rhs.den);
        let num = &self.numerator_over(&common) + &rhs.numerator_over(&common);
        FactoredRational { num, den: common }.normalized()
    }
}

impl Sub for FactoredRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self + &(-rhs)
    }
}

impl Mul for FactoredRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul<&FactoredRational> for &FactoredRational {
    type Output = FactoredRational;
    fn mul(self, rhs: &FactoredRational) -> FactoredRational {
        let mut den = self.den.clone();
        for (b, &k) in &rhs.den {
            *den.entry(b.clone()).or_default() += k;
        }
        FactoredRational { num: &self.num * &rhs.num, den }.normalized()
    }
}

impl Neg for FactoredRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { num: -self.num, den: self.den }
    }
}

impl Ring for FactoredRational {
    fn zero() -> Self {
        FactoredRational::zero()
    }
    fn one() -> Self {
        FactoredRational::one()
    }
    fn is_zero(&self) -> bool {
        FactoredRational::is_zero(self)
    }
}

/// Sign of the leading displayed coefficient, as used in reports.
pub fn leading_sign(p: &MultiPoly) -> i32 {
    match p.to_json().first() {
        Some(t) if t.coeff.starts_with('-') => -1,
        Some(_) => 1,
        None => 0,
    }
}
