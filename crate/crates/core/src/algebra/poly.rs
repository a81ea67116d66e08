//! Sparse multivariate polynomials with big-integer coefficients.
//!
//! Variables come from three indexed families `q_i`, `t_i`, `z_i`. Index 0 in
//! the `q` and `t` families stands for the plain single-parameter variables
//! `q` and `t`; `z_0` is the constant 1 and is never a variable.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under the lexicographic
//! monomial order, so equality is structural and the leading term is the last
//! key. Exact division relies on that order being multiplicative.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Q,
    T,
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub const Q: Var = Var { family: Family::Q, index: 0 };
    pub const T: Var = Var { family: Family::T, index: 0 };

    pub fn q(index: u32) -> Self {
        Var { family: Family::Q, index }
    }

    pub fn t(index: u32) -> Self {
        Var { family: Family::T, index }
    }

    /// `z_k` for `k >= 1`.
    pub fn z(index: u32) -> Self {
        assert!(index >= 1, "z_0 is the constant 1, not a variable");
        Var { family: Family::Z, index }
    }

    pub fn name(&self) -> String {
        let letter = match self.family {
            Family::Q => 'q',
            Family::T => 't',
            Family::Z => 'z',
        };
        if self.index == 0 {
            letter.to_string()
        } else {
            format!("{letter}_{}", self.index)
        }
    }

    fn latex(&self) -> String {
        let letter = match self.family {
            Family::Q => 'q',
            Family::T => 't',
            Family::Z => 'z',
        };
        match self.index {
            0 => letter.to_string(),
            i if i < 10 => format!("{letter}_{i}"),
            i => format!("{letter}_{{{i}}}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParsePoly { text: s.to_string(), reason: "bad variable".into() };
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('q') => Family::Q,
            Some('t') => Family::T,
            Some('z') => Family::Z,
            _ => return Err(err()),
        };
        let rest: String = chars.collect();
        let index = if rest.is_empty() {
            0
        } else {
            let digits = rest.strip_prefix('_').ok_or_else(err)?;
            digits.trim_matches(|c| c == '{' || c == '}').parse().map_err(|_| err())?
        };
        if family == Family::Z && index == 0 {
            return Err(err());
        }
        Ok(Var { family, index })
    }
}

/// A power product; exponents are positive and variables strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn family_degree(&self, family: Family) -> u32 {
        self.0.iter().filter(|(v, _)| v.family == family).map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    pub fn pow(&self, k: u32) -> Self {
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).filter(|&(_, e)| e > 0).collect())
    }

    fn display_factors(&self) -> Vec<(Var, u32)> {
        // Plain q, t read as t^a q^b; indexed families as q_i ... t_j ... z_k.
        let mut f = self.0.clone();
        if f.iter().all(|(v, _)| v.index == 0) {
            f.sort_by_key(|(v, _)| match v.family {
                Family::T => 0,
                Family::Q => 1,
                Family::Z => 2,
            });
        }
        f
    }

    pub fn to_text(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        let factors = self.display_factors();
        let plain = factors.iter().all(|(v, _)| v.index == 0);
        let rendered: Vec<String> =
            factors.iter().map(|&(v, e)| if e == 1 { v.name() } else { format!("{}^{e}", v.name()) }).collect();
        rendered.join(if plain { "" } else { " " })
    }

    pub fn to_latex(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        let factors = self.display_factors();
        let plain = factors.iter().all(|(v, _)| v.index == 0);
        let rendered: Vec<String> =
            factors.iter().map(|&(v, e)| if e == 1 { v.latex() } else { format!("{}^{{{e}}}", v.latex()) }).collect();
        rendered.join(if plain { "" } else { "\\," })
    }
}

impl Ord for Monomial {
    /// Lexicographic order with `q_0 > q_1 > ... > t_0 > ... > z_1 > ...`.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        for (x, y) in a.iter().zip(b.iter()) {
            match x.0.cmp(&y.0) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match x.1.cmp(&y.1) {
                    Ordering::Equal => {}
                    o => return o,
                },
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    /// `t^e` style single power.
    pub fn var_pow(v: Var, e: u32) -> Self {
        Self::term(1, Monomial::from_pairs([(v, e)]))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// `Some(m)` when the polynomial is exactly one monomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    /// `Some(c)` for constants (including zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.terms.keys().flat_map(|m| m.pairs().iter().map(|&(v, _)| v)).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &Self, c: &BigInt, m: &Monomial) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Quotient when `divisor` divides `self` exactly, `None` otherwise.
    pub fn try_div(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm)?;
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let neg = -&qc;
            rem.add_scaled(divisor, &neg, &qm);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.try_div(divisor).ok_or(Error::InexactDivision)
    }

    /// Replaces each variable for which `rule` returns `Some`.
    pub fn substitute(&self, rule: impl Fn(Var) -> Option<MultiPoly>) -> Self {
        let mut cache: BTreeMap<(Var, u32), MultiPoly> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Self::constant(c.clone());
            for &(v, e) in m.pairs() {
                match rule(v) {
                    Some(image) => {
                        let power = cache.entry((v, e)).or_insert_with(|| image.pow(e));
                        acc = &acc * power;
                    }
                    None => kept.push((v, e)),
                }
                if acc.is_zero() {
                    break;
                }
            }
            let kept = Monomial(kept);
            for (am, ac) in acc.terms {
                out.add_term(am.mul(&kept), ac);
            }
        }
        out
    }

    /// Renames variables; the map must be injective on the variables present.
    pub fn rename(&self, rule: impl Fn(Var) -> Var) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (rule(v), e))), c.clone())),
        )
    }

    /// Exact evaluation; `value` must assign every variable present.
    pub fn eval(&self, value: impl Fn(Var) -> Option<BigRational>) -> Result<BigRational> {
        let mut powers: BTreeMap<(Var, u32), BigRational> = BTreeMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut acc = BigRational::from_integer(c.clone());
            for &(v, e) in m.pairs() {
                if let std::collections::btree_map::Entry::Vacant(slot) = powers.entry((v, e)) {
                    let x = value(v).ok_or_else(|| Error::ParsePoly {
                        text: v.name(),
                        reason: "variable has no assigned value".into(),
                    })?;
                    slot.insert(num_traits::pow(x, e as usize));
                }
                acc *= &powers[&(v, e)];
            }
            total += acc;
        }
        Ok(total)
    }

    /// Terms sorted for display: `t`-heavy first, then by degree.
    fn display_order(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|(a, _), (b, _)| {
            b.family_degree(Family::T).cmp(&a.family_degree(Family::T)).then(b.degree().cmp(&a.degree())).then(b.cmp(a))
        });
        items
    }

    fn render(&self, mono: impl Fn(&Monomial) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push(' ');
                }
                out.push_str(&mono(m));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        self.render(Monomial::to_text)
    }

    pub fn to_latex(&self) -> String {
        self.render(Monomial::to_latex)
    }

    pub fn to_json(&self) -> Vec<PolyTerm> {
        self.display_order()
            .into_iter()
            .map(|(m, c)| PolyTerm {
                coeff: c.to_string(),
                exps: m.pairs().iter().map(|&(v, e)| (v.name(), e)).collect(),
            })
            .collect()
    }

    pub fn from_json(terms: &[PolyTerm]) -> Result<Self> {
        let mut p = Self::zero();
        for t in terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::ParsePoly { text: t.coeff.clone(), reason: "bad coefficient".into() })?;
            let pairs = t.exps.iter().map(|(name, &e)| Ok((name.parse::<Var>()?, e))).collect::<Result<Vec<_>>>()?;
            p.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(p)
    }
}

/// JSON form of one term: `{"coeff": "-3", "exps": {"q_1": 2}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub coeff: String,
    pub exps: BTreeMap<String, u32>,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<PolyTerm>::deserialize(d)?;
        MultiPoly::from_json(&terms).map_err(serde::de::Error::custom)
    }
}

impl From<Monomial> for MultiPoly {
    fn from(m: Monomial) -> Self {
        MultiPoly::monomial(m)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (small, big) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = MultiPoly::zero();
        for (m, c) in &small.terms {
            out.add_scaled(big, c, m);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses sums of monomial terms such as `"-t^{2}q^3 + 2 q_1 t_2 - 1"`.
    /// Factors may be juxtaposed, or separated by spaces, `*` or `\,`.
    fn from_str(s: &str) -> Result<Self> {
        Parser { src: s, chars: s.chars().collect(), pos: 0 }.poly()
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn fail(&self, reason: &str) -> Error {
        Error::ParsePoly { text: self.src.to_string(), reason: format!("{reason} at {}", self.pos) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            if c.is_whitespace() || c == '*' {
                self.pos += 1;
            } else if c == '\\' && self.chars.get(self.pos + 1) == Some(&',') {
                self.pos += 2;
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<u64> {
        let braced = self.peek() == Some('{');
        if braced {
            self.pos += 1;
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        if braced {
            if self.peek() != Some('}') {
                return None;
            }
            self.pos += 1;
        }
        text.parse().ok()
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.fail("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = BigInt::one();
            match self.peek() {
                None => break,
                Some('+') => self.pos += 1,
                Some('-') => {
                    sign = -sign;
                    self.pos += 1;
                }
                Some(_) if first => {}
                Some(_) => return Err(self.fail("expected + or -")),
            }
            first = false;
            self.skip_ws();
            let (c, m) = self.term()?;
            out.add_term(m, sign * c);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(BigInt, Monomial)> {
        let mut coeff = BigInt::one();
        let mut saw_any = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let text: String = self.chars[start..self.pos].iter().collect();
            coeff = text.parse().map_err(|_| self.fail("bad coefficient"))?;
            saw_any = true;
        }
        let mut pairs = Vec::new();
        loop {
            self.skip_ws();
            let family = match self.peek() {
                Some('q') => Family::Q,
                Some('t') => Family::T,
                Some('z') => Family::Z,
                _ => break,
            };
            self.pos += 1;
            let mut index = 0;
            if self.peek() == Some('_') {
                self.pos += 1;
                index = self.number().ok_or_else(|| self.fail("bad index"))? as u32;
            }
            if family == Family::Z && index == 0 {
                return Err(self.fail("z needs a positive index"));
            }
            let mut exp = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                exp = self.number().ok_or_else(|| self.fail("bad exponent"))? as u32;
            }
            pairs.push((Var { family, index }, exp));
            saw_any = true;
        }
        if !saw_any {
            return Err(self.fail("expected a term"));
        }
        Ok((coeff, Monomial::from_pairs(pairs)))
    }
}

/// Parses a polynomial literal, panicking on malformed input. Test helper.
pub fn poly(s: &str) -> MultiPoly {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
