//! Multiplication of `H̃_I` by the generic kernel:
//! `H̃_I K_n(A;Z) = Σ_J φ(J', r, c) H̃_J`.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use serde_json::json;

use crate::algebra::{Binomial, FactoredRational, MultiPoly, PointSampler, Var};
use crate::compositions::{canonical_order, Cell, Composition};
use crate::error::{Error, Result};
use crate::ncsf::{generic_kernel, htilde, ribbon_product, NcsfElement, ZSequence};
use crate::par;
use crate::report::{CheckReport, Method};
use crate::statistics::Mode;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FilledBox {
    pub index: usize,
    pub cell: Cell,
    pub factor: FactoredRational,
}

/// The filling of one continuation diagram.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FillingReport {
    pub continuation: Composition,
    pub restriction: Composition,
    pub anchor: Cell,
    pub boxes: Vec<FilledBox>,
    pub phi: FactoredRational,
}

impl FillingReport {
    /// `φ` with numerator and denominator kept as products of box factors.
    pub fn factored(&self, latex: bool) -> String {
        let render = |p: &MultiPoly| {
            let binomial = match p.terms().collect::<Vec<_>>()[..] {
                [(a, ca), (b, cb)] if ca.is_one() && (-cb).is_one() => Some((a, b)),
                [(a, ca), (b, cb)] if cb.is_one() && (-ca).is_one() => Some((b, a)),
                _ => None,
            };
            match binomial {
                Some((plus, minus)) if latex => format!("({}-{})", plus.to_latex(), minus.to_latex()),
                Some((plus, minus)) => format!("({} - {})", plus.to_text(), minus.to_text()),
                None if p.num_terms() > 1 => format!("({})", if latex { p.to_latex() } else { p.to_text() }),
                None => {
                    if latex {
                        p.to_latex()
                    } else {
                        p.to_text()
                    }
                }
            }
        };
        let num: Vec<String> =
            self.boxes.iter().map(|b| b.factor.numerator()).filter(|p| !p.is_one()).map(render).collect();
        let den: Vec<String> = self
            .boxes
            .iter()
            .flat_map(|b| b.factor.denominator_factors())
            .map(|d| format!("({})", if latex { d.to_latex() } else { d.to_text() }))
            .collect();
        let num = if num.is_empty() { "1".to_string() } else { num.concat() };
        match (den.is_empty(), latex) {
            (true, _) => num,
            (false, true) => format!("\\frac{{{num}}}{{{}}}", den.concat()),
            (false, false) => format!("{num}/{}", den.concat()),
        }
    }

    /// Box indices drawn on the grid spanned by the filling, then one line per box.
    pub fn diagram(&self) -> String {
        let rows = self.boxes.iter().map(|b| b.cell.row).max().unwrap_or(0);
        let cols = self.boxes.iter().map(|b| b.cell.col).max().unwrap_or(0);
        let (r0, c0) = (self.anchor.row, self.anchor.col);
        let mut out = format!(
            "J = {}  J' = {}  anchor ({},{})\n",
            self.continuation, self.restriction, self.anchor.row, self.anchor.col
        );
        for r in r0..=rows {
            let line: Vec<String> = (c0..=cols)
                .map(|c| {
                    self.boxes
                        .iter()
                        .find(|b| b.cell.row == r && b.cell.col == c)
                        .map_or(".".to_string(), |b| b.index.to_string())
                })
                .collect();
            out.push_str("  ");
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        for b in &self.boxes {
            out.push_str(&format!("  box {} at ({},{}): {}\n", b.index, b.cell.row, b.cell.col, b.factor));
        }
        out.push_str(&format!("  phi = {}\n", self.phi));
        out
    }
}

fn binomial(plus: MultiPoly, minus: Var) -> (Binomial, bool) {
    let mono = plus.as_monomial().cloned().expect("monomial numerator side");
    Binomial::new(mono, crate::algebra::Monomial::var(minus)).expect("distinct sides")
}

/// `(a) / (t_i - q_j)` with the denominator in canonical orientation.
fn over(num: MultiPoly, den: (Binomial, bool)) -> FactoredRational {
    let (b, flipped) = den;
    FactoredRational::new(if flipped { -num } else { num }, [b])
}

/// `φ(J', r, c)` with all box factors.
pub fn filling(jp: &Composition, r: usize, c: usize, z: &ZSequence) -> FillingReport {
    assert!(r >= 1 && c >= 1, "anchor must lie in the first quadrant");
    let n = jp.size() - 1;
    assert!(z.len() + 1 >= n, "Z sequence too short");
    let t = |i: usize| Var::t(i as u32);
    let q = |j: usize| Var::q(j as u32);
    let mut boxes = Vec::with_capacity(n + 1);
    let mut cell = Cell { row: r, col: c };
    boxes.push(FilledBox { index: 0, cell, factor: over(MultiPoly::one(), binomial(MultiPoly::var(t(r)), q(c))) });
    for k in 1..=n {
        let below = jp.is_descent(k);
        cell =
            if below { Cell { row: cell.row + 1, col: cell.col } } else { Cell { row: cell.row, col: cell.col + 1 } };
        let ti = MultiPoly::var(t(cell.row));
        let qj = MultiPoly::var(q(cell.col));
        let zk = z.get(k - 1);
        let num = if below { &zk - &qj } else { &ti - &zk };
        let factor = if k == n { FactoredRational::from_poly(num) } else { over(num, binomial(ti, q(cell.col))) };
        boxes.push(FilledBox { index: k, cell, factor });
    }
    let phi = boxes.iter().fold(FactoredRational::one(), |acc, b| &acc * &b.factor);
    FillingReport { continuation: jp.clone(), restriction: jp.clone(), anchor: Cell { row: r, col: c }, boxes, phi }
}

pub fn phi(jp: &Composition, r: usize, c: usize, z: &ZSequence) -> FactoredRational {
    filling(jp, r, c, z).phi
}

/// The `2^n` continuations `J` of `I` by `n` boxes, each with `J'` and its filling.
pub fn expand_product(i: &Composition, n: usize, z: &ZSequence) -> Result<Vec<FillingReport>> {
    if i.is_empty() {
        return Err(Error::TooSmall { n: 0, min: 1 });
    }
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    let anchor = *i.cells().last().expect("nonempty");
    let m = i.size();
    let mut out = Vec::with_capacity(1 << n);
    for k in canonical_order(n) {
        for j in [i.concat(&k), i.near_concat(&k)] {
            // J' keeps the descents of J at positions m..m+n-1, shifted to 1..n.
            let des: Vec<usize> = j.descent_set().into_iter().filter(|&d| d >= m).map(|d| d - m + 1).collect();
            let jp = Composition::from_descents(&des, n + 1)?;
            let mut rep = filling(&jp, anchor.row, anchor.col, z);
            rep.continuation = j;
            out.push(rep);
        }
    }
    out.sort_by(|a, b| a.continuation.cmp(&b.continuation));
    Ok(out)
}

/// `Σ_J φ H̃_J` in the R basis.
pub fn product_rhs(terms: &[FillingReport]) -> NcsfElement<FactoredRational> {
    let degree = terms[0].continuation.size();
    let mut acc = NcsfElement::zero(degree, crate::ncsf::Basis::R);
    for t in terms {
        let h = htilde(&t.continuation, Mode::Multi).map_coeffs(|c| FactoredRational::from_poly(c.clone()));
        acc = acc.add(&h.scale(&t.phi));
    }
    acc
}

/// `H̃_I K_n(A;Z)` via ribbon multiplication.
pub fn product_lhs(i: &Composition, n: usize, z: &ZSequence) -> NcsfElement {
    ribbon_product(&htilde(i, Mode::Multi), &generic_kernel(n, z))
}

pub const PRODUCT_SYMBOLIC_LIMIT: usize = 5;
pub const PRODUCT_POINTS: usize = 3;

/// Compares both sides of the multiplication rule with symbolic `z_1..z_{n-1}`.
/// Small cases compare rational functions; larger ones evaluate both sides at
/// seeded points without forming the right-hand side symbolically.
pub fn verify_product(i: &Composition, n: usize, seed: u64) -> Result<CheckReport> {
    let z = ZSequence::symbolic(n);
    let terms = expand_product(i, n, &z)?;
    let lhs = product_lhs(i, n, &z);
    let total = i.size() + n;
    let name = "product";
    if total <= PRODUCT_SYMBOLIC_LIMIT {
        let rhs = product_rhs(&terms);
        let mut rep = CheckReport::new(name, n, Some(Mode::Multi), Method::Symbolic);
        for j in canonical_order(total) {
            let a = FactoredRational::from_poly(lhs.coeff(&j));
            let b = rhs.coeff(&j);
            rep.record(a == b, || json!({ "I": i, "R": j, "lhs": a.to_text(), "rhs": b.reduced().to_text() }));
        }
        return Ok(rep.with_data(json!({ "I": i })));
    }
    let hs: Vec<NcsfElement> = par::map(&terms, |t| htilde(&t.continuation, Mode::Multi));
    let mut vars: BTreeSet<Var> = BTreeSet::new();
    let mut guards: BTreeSet<Binomial> = BTreeSet::new();
    for t in &terms {
        guards.extend(t.phi.denominator_factors().cloned());
        vars.extend(t.phi.variables());
    }
    for e in hs.iter().chain([&lhs]) {
        for (_, c) in e.terms() {
            vars.extend(c.variables());
        }
    }
    let guards: Vec<MultiPoly> = guards.iter().map(Binomial::to_poly).collect();
    let vars: Vec<Var> = vars.into_iter().collect();
    let order = canonical_order(total);
    let mut rep = CheckReport::new(name, n, Some(Mode::Multi), Method::Points { seed, count: PRODUCT_POINTS });
    let mut sampler = PointSampler::new(seed);
    for _ in 0..PRODUCT_POINTS {
        let pt = sampler.point(&vars, &guards)?;
        let phis = terms.iter().map(|t| pt.eval_rational(&t.phi)).collect::<Result<Vec<_>>>()?;
        let hvals = par::map(&hs, |h| h.eval(&pt));
        let hvals = hvals.into_iter().collect::<Result<Vec<_>>>()?;
        for j in &order {
            let a = pt.eval_poly(&lhs.coeff(j))?;
            let b =
                phis.iter().zip(&hvals).fold(BigRational::from_integer(0.into()), |acc, (p, h)| acc + p * h.coeff(j));
            rep.record(a == b, || json!({ "I": i, "R": j, "lhs": a.to_string(), "rhs": b.to_string() }));
        }
    }
    Ok(rep.with_data(json!({ "I": i })))
}

/// Runs `verify_product` for every `I` with `|I| + n <= bound`.
pub fn verify_product_range(n: usize, bound: usize, seed: u64) -> Result<CheckReport> {
    let mut out = CheckReport::new("product", n, Some(Mode::Multi), Method::Symbolic);
    let (mut symbolic, mut sampled) = (Vec::new(), Vec::new());
    for m in 1..=bound.saturating_sub(n) {
        for i in canonical_order(m) {
            let rep = verify_product(&i, n, seed)?;
            if rep.method == Method::Symbolic {
                symbolic.push(i);
            } else {
                out.method = rep.method.clone();
                sampled.push(i);
            }
            out = out.merge(rep);
        }
    }
    Ok(out.with_data(json!({ "bound": bound, "symbolic": symbolic, "sampled": sampled })))
}
