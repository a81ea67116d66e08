//! Quasi-symmetric Macdonald functions `G̃_I = Σ_J g̃_{IJ} F_J`, the dual basis
//! of `H̃_J` under `<R_I, F_J> = δ_{IJ}`, and their cleared forms
//! `P̃_I = D_I G̃_I`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::algebra::{
    fraction_free_inverse, integer_rows, Binomial, FactoredRational, Matrix, Monomial, MultiPoly, PointSampler, Render,
    Ring, Var,
};
use crate::compositions::{canonical_order, Cell, Composition};
use crate::error::{Error, Result};
use crate::kostka::{kostka_matrix, LabeledMatrix};
use crate::ncsf::{Basis, NcsfElement};
use crate::par;
use crate::report::{CheckReport, Method};
use crate::statistics::{self, Mode};

/// A homogeneous quasi-symmetric function in the fundamental basis.
#[derive(Clone, Debug, PartialEq)]
pub struct QsymElement<C = MultiPoly> {
    degree: usize,
    terms: BTreeMap<Composition, C>,
}

impl<C: Ring> QsymElement<C> {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, j: Composition, c: C) {
        assert_eq!(j.size(), self.degree, "term of the wrong degree");
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&j) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(j, merged);
        }
    }

    pub fn coeff(&self, j: &Composition) -> C {
        self.terms.get(j).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &C)> {
        self.terms.iter()
    }

    /// `<h, g>` with `<R_I, F_J> = δ_{IJ}`; `h` must be in the R basis.
    pub fn pair(&self, h: &NcsfElement<C>) -> C {
        assert_eq!(h.basis(), Basis::R, "pairing needs an R-basis element");
        h.terms().fold(C::zero(), |acc, (i, c)| acc + c.clone() * self.coeff(i))
    }
}

impl<C: Ring + Render> QsymElement<C> {
    fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (j, c)) in self.terms.iter().enumerate() {
            let text = if latex { c.to_latex() } else { c.to_text() };
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !c.is_compound() => (true, rest.to_string()),
                _ => (false, text),
            };
            if idx > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            if body != "1" {
                out.push_str(&if c.is_compound() { format!("({body})") } else { body });
                out.push(' ');
            }
            if latex {
                out.push_str(&format!("F_{{{}}}", j.label()));
            } else {
                out.push_str(&format!("F_{}", j.label()));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        self.render(false)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }
}

impl<C: Serialize> Serialize for QsymElement<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a, C> {
            composition: &'a Composition,
            coeff: &'a C,
        }
        let mut st = s.serialize_struct("QsymElement", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("basis", "F")?;
        let terms: Vec<Term<'_, C>> =
            self.terms.iter().map(|(composition, coeff)| Term { composition, coeff }).collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `D_I = ∏_{(i,j) ∈ Diagr(L)} (t^i - q^j)` where `I = L'` or `I = L''`.
#[derive(Clone, Debug, PartialEq)]
pub struct Denominator {
    pub composition: Composition,
    pub parent: Composition,
    pub factors: Vec<(Cell, Binomial)>,
}

impl Denominator {
    pub fn to_poly(&self) -> MultiPoly {
        self.factors.iter().fold(MultiPoly::one(), |acc, (_, b)| &acc * &b.to_poly())
    }

    pub fn multiset(&self) -> BTreeMap<Binomial, u32> {
        let mut out = BTreeMap::new();
        for (_, b) in &self.factors {
            *out.entry(b.clone()).or_default() += 1;
        }
        out
    }

    /// Factors in ribbon order, e.g. `(t - q)(t - q^2)`.
    pub fn to_text(&self) -> String {
        self.factors.iter().map(|(_, b)| format!("({})", b.to_text())).collect()
    }

    pub fn to_latex(&self) -> String {
        self.factors.iter().map(|(_, b)| format!("({})", b.to_latex())).collect()
    }

    pub fn to_json(&self) -> Value {
        let factors: Vec<Value> = self
            .multiset()
            .iter()
            .map(|(b, m)| json!({ "factor": format!("{}-{}", b.plus().to_text(), b.minus().to_text()), "mult": m }))
            .collect();
        json!({ "composition": self.composition, "parent": self.parent, "factors": factors })
    }
}

pub fn denominator(i: &Composition) -> Result<Denominator> {
    let parent = i.parent()?;
    let factors = parent
        .cells()
        .into_iter()
        .map(|c| {
            let plus = Monomial::from_pairs([(Var::T, c.row as u32)]);
            let minus = Monomial::from_pairs([(Var::Q, c.col as u32)]);
            // t^i = q^j never happens for i, j >= 1.
            let (b, _) = Binomial::new(plus, minus).expect("distinct monomials");
            (c, b)
        })
        .collect();
    Ok(Denominator { composition: i.clone(), parent, factors })
}

/// `(-1)^{l(I)-l(J)} ∏_{k ∉ Des(J)} u(I,k)`, the numerator of `g̃_{IJ}`.
pub fn ptilde_coeff(i: &Composition, j: &Composition) -> Result<MultiPoly> {
    if i.size() != j.size() {
        return Err(Error::SizeMismatch(i.size(), j.size()));
    }
    Ok(numerator(i, j))
}

fn numerator(i: &Composition, j: &Composition) -> MultiPoly {
    let mono = j.non_descents().iter().fold(MultiPoly::one(), |acc, &k| &acc * &statistics::u(i, k));
    if (i.len() + j.len()) % 2 == 1 {
        -mono
    } else {
        mono
    }
}

/// `g̃_{IJ} = (-1)^{l(I)-l(J)} ∏_{k ∉ Des(J)} u(I,k) / D_I`.
pub fn gtilde_coeff(i: &Composition, j: &Composition) -> Result<FactoredRational> {
    let num = ptilde_coeff(i, j)?;
    Ok(FactoredRational::new(num, expand(&denominator(i)?.multiset())))
}

fn expand(den: &BTreeMap<Binomial, u32>) -> Vec<Binomial> {
    den.iter().flat_map(|(b, &k)| std::iter::repeat_n(b.clone(), k as usize)).collect()
}

/// `P̃_I = Σ_J (-1)^{l(I)-l(J)} (∏_{k ∉ Des(J)} u(I,k)) F_J`.
pub fn ptilde(i: &Composition) -> QsymElement {
    let mut out = QsymElement::zero(i.size());
    for j in canonical_order(i.size()) {
        let c = numerator(i, &j);
        out.add_term(j, c);
    }
    out
}

pub fn gtilde(i: &Composition) -> Result<QsymElement<FactoredRational>> {
    let den = expand(&denominator(i)?.multiset());
    let mut out = QsymElement::zero(i.size());
    for (j, c) in ptilde(i).terms {
        out.add_term(j, FactoredRational::new(c, den.iter().cloned()));
    }
    Ok(out)
}

/// Coefficient of `F_J` in `P̃_I` at row `J`, column `I`.
pub fn ptilde_matrix(n: usize) -> LabeledMatrix {
    let order = canonical_order(n);
    let rows = par::map(&order, |j| order.iter().map(|i| numerator(i, j)).collect());
    LabeledMatrix::new(n, Mode::Single, Matrix::from_rows(rows))
}

pub const DUALITY_SYMBOLIC_LIMIT: usize = 4;
pub const DUALITY_POINTS: usize = 5;

/// `(g̃_{IJ}) = (k̃_{IJ})^{-1}`, i.e. `Σ_I g̃_{I'I} k̃_{IJ} = δ_{I'J}`. Rows of
/// `g̃` are cleared by `D_{I'}`, so the check reads `Σ_I P_{I'I} k̃_{IJ} = δ D_{I'}`.
pub fn duality_check(n: usize, seed: u64) -> Result<CheckReport> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let order = canonical_order(n);
    // p[I'][I] = numerator of g̃_{I'I}; k[I][J] = k̃_{IJ} = K_n(J,I).
    let p = Matrix::from_rows(par::map(&order, |a| order.iter().map(|i| numerator(a, i)).collect()));
    let k = kostka_matrix(n, Mode::Single).entries.transpose();
    let dens: Vec<MultiPoly> = order.iter().map(|i| denominator(i).map(|d| d.to_poly())).collect::<Result<_>>()?;
    if n <= DUALITY_SYMBOLIC_LIMIT {
        let mut rep = CheckReport::new("duality", n, Some(Mode::Single), Method::Symbolic);
        let prod = p.mul(&k);
        for (r, a) in order.iter().enumerate() {
            for (c, j) in order.iter().enumerate() {
                let expected = if r == c { dens[r].clone() } else { MultiPoly::zero() };
                let got = &prod[(r, c)];
                rep.record(*got == expected, || json!({ "I": a, "J": j, "residual": (got - &expected).to_text() }));
            }
        }
        return Ok(rep);
    }
    let mut rep = CheckReport::new("duality", n, Some(Mode::Single), Method::Points { seed, count: DUALITY_POINTS });
    let mut sampler = PointSampler::new(seed);
    for _ in 0..DUALITY_POINTS {
        let pt = sampler.point(&[Var::Q, Var::T], &dens)?;
        // diag(a) P and K diag(b) are integral; their product is diag(a) D diag(b).
        let (pi, a) = integer_rows(&p.try_map(|x| pt.eval_poly(x))?);
        let (kt, b) = integer_rows(&k.transpose().try_map(|x| pt.eval_poly(x))?);
        let prod = pi.mul(&kt.transpose());
        for (r, i) in order.iter().enumerate() {
            let dr = pt.eval_poly(&dens[r])?;
            for (c, j) in order.iter().enumerate() {
                let got = BigRational::new(prod[(r, c)].clone(), &a[r] * &b[c]);
                let expected = if r == c { dr.clone() } else { BigRational::from_integer(BigInt::from(0)) };
                rep.record(
                    got == expected,
                    || json!({ "I": i, "J": j, "value": got.to_string(), "expected": expected.to_string() }),
                );
            }
        }
    }
    Ok(rep)
}

/// `g̃_{I'I}` against the exact inverse of `(k̃_{IJ})`, entry by entry.
pub fn closed_form_check(n: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("closed-form", n, Some(Mode::Single), Method::Symbolic);
    let order = canonical_order(n);
    let k = kostka_matrix(n, Mode::Single).entries.transpose();
    let (d, inv) = fraction_free_inverse(&k)?;
    for (r, a) in order.iter().enumerate() {
        let den = denominator(a)?.to_poly();
        for (c, i) in order.iter().enumerate() {
            // numerator / D_{I'} = inv / d
            let lhs = &numerator(a, i) * &d;
            let rhs = &inv[(r, c)] * &den;
            rep.record(
                lhs == rhs,
                || json!({ "I": a, "J": i, "closed_form": gtilde_coeff(a, i).map(|g| g.to_text()).ok() }),
            );
        }
    }
    Ok(rep)
}

/// `D_{L'} = D_{L''}` for every `L` of size `n - 1`.
pub fn denominator_pairs_check(n: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("denominator-pairs", n, Some(Mode::Single), Method::Symbolic);
    for l in canonical_order(n - 1) {
        let a = denominator(&l.grow_last())?;
        let b = denominator(&l.append_one())?;
        rep.record(a.multiset() == b.multiset(), || json!({ "L": l, "D'": a.to_text(), "D''": b.to_text() }));
    }
    Ok(rep)
}

/// Every `P̃` coefficient is `±` a monomial whose degree does not exceed `deg D_I`.
pub fn degree_balance_check(n: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("degree-balance", n, Some(Mode::Single), Method::Symbolic);
    for i in canonical_order(n) {
        let dd = denominator(&i)?.to_poly().total_degree();
        for (j, c) in ptilde(&i).terms() {
            let signed_monomial =
                c.num_terms() == 1 && c.terms().next().is_some_and(|(_, x)| num_traits::One::is_one(x.magnitude()));
            rep.record(signed_monomial && c.total_degree() <= dd, || json!({ "I": i, "J": j, "coeff": c.to_text() }));
        }
    }
    Ok(rep)
}
