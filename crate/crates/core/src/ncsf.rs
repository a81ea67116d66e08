//! Noncommutative symmetric functions in the ribbon (`R`), complete (`S`) and
//! elementary (`Λ`) bases, the generic kernel `K_n(A;Z)`, and the
//! noncommutative Macdonald functions `H̃_J`.

use std::collections::BTreeMap;

use clap::ValueEnum;
use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::{to_laurent, LaurentPoly, MultiPoly, PointAssignment, Render, Ring, Var};
use crate::compositions::{canonical_order, Composition};
use crate::error::Result;
use crate::statistics::{self, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, ValueEnum)]
pub enum Basis {
    #[value(name = "r")]
    R,
    #[value(name = "s")]
    S,
    #[value(name = "lambda")]
    Lambda,
}

impl Basis {
    fn symbol(self, latex: bool) -> &'static str {
        match (self, latex) {
            (Basis::R, _) => "R_",
            (Basis::S, _) => "S^",
            (Basis::Lambda, false) => "Λ^",
            (Basis::Lambda, true) => "\\Lambda^",
        }
    }
}

/// A homogeneous element of degree `n` expanded in one basis.
#[derive(Clone, Debug, PartialEq)]
pub struct NcsfElement<C = MultiPoly> {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Composition, C>,
}

impl<C: Ring> NcsfElement<C> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        Self { degree, basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(i: Composition, basis: Basis) -> Self {
        let mut out = Self::zero(i.size(), basis);
        out.terms.insert(i, C::one());
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical composition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: &Composition) -> C {
        self.terms.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, i: Composition, c: C) {
        assert_eq!(i.size(), self.degree, "term of the wrong degree");
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&i) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(i, merged);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.degree, self.basis), (other.degree, other.basis), "incompatible elements");
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (i, x) in &self.terms {
            out.add_term(i.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> NcsfElement<D> {
        let mut out = NcsfElement::zero(self.degree, self.basis);
        for (i, c) in &self.terms {
            out.add_term(i.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> Result<D>) -> Result<NcsfElement<D>> {
        let mut out = NcsfElement::zero(self.degree, self.basis);
        for (i, c) in &self.terms {
            out.add_term(i.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Coefficients listed in canonical order, zeros included.
    pub fn dense(&self) -> Vec<C> {
        canonical_order(self.degree).iter().map(|i| self.coeff(i)).collect()
    }
}

impl NcsfElement<MultiPoly> {
    /// Coefficient-wise variable substitution.
    pub fn specialize(&self, rule: impl Fn(Var) -> Option<MultiPoly> + Copy) -> Self {
        self.map_coeffs(|c| c.substitute(rule))
    }

    pub fn eval(&self, pt: &PointAssignment) -> Result<NcsfElement<BigRational>> {
        self.try_map_coeffs(|c| pt.eval_poly(c))
    }
}

impl<C: Ring + Render> NcsfElement<C> {
    fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let sym = self.basis.symbol(latex);
        let mut out = String::new();
        for (idx, (i, c)) in self.terms.iter().enumerate() {
            let label = if latex { format!("{{{}}}", i.label()) } else { i.label() };
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
            if !c.is_unit() && body != "1" {
                if c.is_compound() {
                    out.push_str(&format!("({body})"));
                } else {
                    out.push_str(&body);
                }
                out.push(' ');
            }
            out.push_str(sym);
            out.push_str(&label);
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

#[derive(Serialize)]
struct TermJson<'a, C> {
    composition: &'a Composition,
    coeff: &'a C,
}

impl<C: Serialize> Serialize for NcsfElement<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NcsfElement", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("basis", &self.basis)?;
        let terms: Vec<TermJson<'_, C>> =
            self.terms.iter().map(|(composition, coeff)| TermJson { composition, coeff }).collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `R_I R_K = R_{I·K} + R_{I⊙K}`, extended bilinearly.
pub fn ribbon_product<C: Ring>(a: &NcsfElement<C>, b: &NcsfElement<C>) -> NcsfElement<C> {
    assert!(a.basis == Basis::R && b.basis == Basis::R, "ribbon product needs R-basis inputs");
    let mut out = NcsfElement::zero(a.degree + b.degree, Basis::R);
    for (i, x) in &a.terms {
        for (k, y) in &b.terms {
            let c = x.clone() * y.clone();
            if i.is_empty() || k.is_empty() {
                out.add_term(i.concat(k), c);
            } else {
                out.add_term(i.concat(k), c.clone());
                out.add_term(i.near_concat(k), c);
            }
        }
    }
    out
}

/// `S^I = Σ_{Des(K) ⊆ Des(I)} R_K`.
pub fn s_basis<C: Ring>(i: &Composition) -> NcsfElement<C> {
    let n = i.size();
    let mut out = NcsfElement::zero(n, Basis::R);
    let full = i.code();
    let mut sub = full;
    loop {
        out.add_term(Composition::from_code(n, sub).expect("submask"), C::one());
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full;
    }
    out
}

/// `Λ^I = Λ^{i_1} ⋯ Λ^{i_r}` with `Λ^m = R_{1^m}`, in the R basis.
pub fn lambda_basis<C: Ring>(i: &Composition) -> NcsfElement<C> {
    i.parts().iter().fold(NcsfElement::basis_element(Composition::empty(), Basis::R), |acc, &m| {
        ribbon_product(&acc, &NcsfElement::basis_element(Composition::column(m), Basis::R))
    })
}

/// Image in the R basis of a single basis element.
pub fn basis_in_r<C: Ring>(i: &Composition, basis: Basis) -> NcsfElement<C> {
    match basis {
        Basis::R => NcsfElement::basis_element(i.clone(), Basis::R),
        Basis::S => s_basis(i),
        Basis::Lambda => lambda_basis(i),
    }
}

/// Converts between bases. Going into R expands each basis element; leaving R
/// peels off leading terms of the unitriangular images.
pub fn change_basis<C: Ring>(e: &NcsfElement<C>, target: Basis) -> NcsfElement<C> {
    if e.basis == target {
        return e.clone();
    }
    let mut in_r = NcsfElement::zero(e.degree, Basis::R);
    if e.basis == Basis::R {
        in_r = e.clone();
    } else {
        for (i, c) in &e.terms {
            in_r = in_r.add(&basis_in_r::<C>(i, e.basis).scale(c));
        }
    }
    if target == Basis::R {
        return in_r;
    }
    // S^I = R_I + (R_K, Des(K) ⊊ Des(I)): peel the largest code first.
    // Λ^I = R_{conj I} + (R_K, Des(K) ⊋ Des(conj I)): peel the smallest code first.
    let mut out = NcsfElement::zero(e.degree, target);
    let mut rest = in_r;
    while let Some((lead, c)) = match target {
        Basis::S => rest.terms.iter().next_back(),
        _ => rest.terms.iter().next(),
    }
    .map(|(i, c)| (i.clone(), c.clone()))
    {
        let key = match target {
            Basis::S => lead,
            _ => lead.conjugate(),
        };
        rest = rest.add(&basis_in_r::<C>(&key, target).scale(&(-c.clone())));
        out.add_term(key, c);
    }
    out
}

/// `z_1, ..., z_{n-1}`; `z_0 = 1` is implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct ZSequence(Vec<MultiPoly>);

impl ZSequence {
    pub fn new(values: Vec<MultiPoly>) -> Self {
        Self(values)
    }

    /// Independent indeterminates `z_1..z_{n-1}`.
    pub fn symbolic(n: usize) -> Self {
        Self((1..n).map(|k| MultiPoly::var(Var::z(k as u32))).collect())
    }

    /// `Z(J) = (ṽ(J,1), ..., ṽ(J,n-1))`, or its single-parameter image.
    pub fn for_composition(j: &Composition, mode: Mode) -> Self {
        Self((1..j.size()).map(|k| statistics::v(j, k, mode)).collect())
    }

    /// `z_k`, with `z_0 = 1`.
    pub fn get(&self, k: usize) -> MultiPoly {
        if k == 0 {
            MultiPoly::one()
        } else {
            self.0[k - 1].clone()
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `K_n(A;Z) = Σ_{|I|=n} (∏_{d ∈ Des(I)} z_d) R_I`.
pub fn generic_kernel(n: usize, z: &ZSequence) -> NcsfElement {
    assert!(n >= 1, "kernel degree must be positive");
    assert!(z.len() + 1 >= n, "Z sequence too short for degree {n}");
    let mut out = NcsfElement::zero(n, Basis::R);
    for i in canonical_order(n) {
        let c = i.descent_set().iter().fold(MultiPoly::one(), |acc, &d| &acc * &z.get(d));
        out.add_term(i, c);
    }
    out
}

/// Coefficient of `R_I` in `H̃_J`, i.e. `k̃_{IJ} = ∏_{k ∈ Des(I)} v(J,k)`.
pub fn htilde_coeff(i: &Composition, j: &Composition, mode: Mode) -> MultiPoly {
    i.descent_set().iter().fold(MultiPoly::one(), |acc, &k| &acc * &statistics::v(j, k, mode))
}

/// `H̃_J` in the R basis.
pub fn htilde(j: &Composition, mode: Mode) -> NcsfElement {
    let mut out = NcsfElement::zero(j.size(), Basis::R);
    for i in canonical_order(j.size()) {
        let c = htilde_coeff(&i, j, mode);
        out.add_term(i, c);
    }
    out
}

/// `H̃_J = Σ_K (∏_{k ∉ Des(K)} e(J,k)) Λ^K`, single-parameter.
pub fn htilde_lambda(j: &Composition) -> NcsfElement {
    let mut out = NcsfElement::zero(j.size(), Basis::Lambda);
    for k in canonical_order(j.size()) {
        let c = k.non_descents().iter().fold(MultiPoly::one(), |acc, &b| &acc * &statistics::e(j, b));
        out.add_term(k, c);
    }
    out
}

/// The closed-form `Λ` expansion with each coefficient kept as its list of
/// `e(J,k)` factors, longest compositions first.
pub fn htilde_lambda_factored(j: &Composition) -> Vec<(Composition, Vec<MultiPoly>)> {
    let mut terms: Vec<(Composition, Vec<MultiPoly>)> = canonical_order(j.size())
        .into_iter()
        .map(|k| {
            let factors = k.non_descents().iter().map(|&b| statistics::e(j, b)).collect();
            (k, factors)
        })
        .collect();
    terms.sort_by_key(|(k, _)| std::cmp::Reverse(k.len()));
    terms
}

/// Renders `htilde_lambda_factored` as `Λ^1111 + (q - 1) Λ^211 + ...`.
pub fn render_lambda_factored(terms: &[(Composition, Vec<MultiPoly>)], latex: bool) -> String {
    let parts: Vec<String> = terms
        .iter()
        .filter(|(_, f)| f.iter().all(|p| !p.is_zero()))
        .map(|(k, factors)| {
            let coeff: String = factors
                .iter()
                .map(|p| {
                    let v = p + &MultiPoly::one();
                    let m =
                        v.as_monomial().map_or_else(|| p.to_text(), |m| if latex { m.to_latex() } else { m.to_text() });
                    if latex {
                        format!("({m}-1)")
                    } else {
                        format!("({m} - 1)")
                    }
                })
                .collect();
            if latex {
                format!("{coeff}\\Lambda^{{{}}}", k.label())
            } else if coeff.is_empty() {
                format!("Λ^{}", k.label())
            } else {
                format!("{coeff} Λ^{}", k.label())
            }
        })
        .collect();
    parts.join(if latex { "+" } else { " + " })
}

/// Substitutes integer values for `q` and `t`.
pub fn at_qt(q: i64, t: i64) -> impl Fn(Var) -> Option<MultiPoly> + Copy {
    move |v| match v {
        Var::Q => Some(MultiPoly::constant(q)),
        Var::T => Some(MultiPoly::constant(t)),
        _ => None,
    }
}

/// Outcome of the `t = 1/q` lattice congruence for one `H̃_J`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LatticeReport {
    pub composition: Composition,
    pub exponent: i64,
    pub holds: bool,
    pub offending: Option<Composition>,
    #[serde(skip)]
    pub coefficients: Vec<(Composition, LaurentPoly)>,
}

/// Checks `q^e H̃_J(A;q,1/q) ≡ R_J (mod qL)` for a given normalizing exponent.
pub fn lattice_congruence_with_exponent(j: &Composition, exponent: i64) -> LatticeReport {
    let h = htilde(j, Mode::Single);
    let mut coefficients = Vec::new();
    let mut offending = None;
    for i in canonical_order(j.size()) {
        let lp = to_laurent(&h.coeff(&i)).expect("single-parameter coefficient").shift(exponent);
        let ok = if &i == j { lp.divisible_by_power(0) && lp.coeff(0) == 1.into() } else { lp.divisible_by_power(1) };
        if !ok && offending.is_none() {
            offending = Some(i.clone());
        }
        coefficients.push((i, lp));
    }
    LatticeReport { composition: j.clone(), exponent, holds: offending.is_none(), offending, coefficients }
}

/// Lattice congruence with the normalizer `q^{binom(l(J),2)}`.
pub fn lattice_congruence(j: &Composition) -> LatticeReport {
    let l = j.len() as i64;
    lattice_congruence_with_exponent(j, l * (l - 1) / 2)
}

/// `H̃_J` with every `t_j -> 1`, and the product of one-row factors
/// `H̃_{(j_1)} ⋯ H̃_{(j_r)}` whose `q`-windows start at the first column of
/// each row of the ribbon of `J`.
pub fn t_one_factorization(j: &Composition) -> (NcsfElement, NcsfElement) {
    let t_to_one = |v: Var| (v.family == crate::algebra::Family::T).then(MultiPoly::one);
    let lhs = htilde(j, Mode::Multi).specialize(t_to_one);
    let mut rhs = NcsfElement::basis_element(Composition::empty(), Basis::R);
    let mut start_col = 1u32;
    for &part in j.parts() {
        let shift = start_col - 1;
        let factor = htilde(&Composition::row(part), Mode::Multi)
            .map_coeffs(|c| c.rename(|v| Var { index: v.index + shift, ..v }));
        rhs = ribbon_product(&rhs, &factor);
        start_col += part as u32 - 1;
    }
    (lhs, rhs)
}
