//! Exact arithmetic: sparse polynomials, Laurent polynomials, factored
//! rational functions, fraction-free linear algebra and seeded evaluation.

pub mod eval;
pub mod laurent;
pub mod linalg;
pub mod modular;
pub mod poly;
pub mod rational;

pub use eval::{PointAssignment, PointSampler};
pub use laurent::{to_laurent, LaurentPoly};
pub use linalg::{bareiss_det, fraction_free_inverse, integer_rows, inverse, rational_det, ExactDiv, Matrix, Ring};
pub use modular::modular_det;
pub use poly::{Family, Monomial, MultiPoly, Var};
pub use rational::{Binomial, FactoredRational};

/// Text and LaTeX rendering of coefficients inside larger expressions.
pub trait Render {
    fn to_text(&self) -> String;
    fn to_latex(&self) -> String;
    /// Whether the rendering needs parentheses when used as a factor.
    fn is_compound(&self) -> bool;
    fn is_unit(&self) -> bool;
}

impl Render for MultiPoly {
    fn to_text(&self) -> String {
        MultiPoly::to_text(self)
    }
    fn to_latex(&self) -> String {
        MultiPoly::to_latex(self)
    }
    fn is_compound(&self) -> bool {
        self.num_terms() > 1
    }
    fn is_unit(&self) -> bool {
        self.is_one()
    }
}

impl Render for FactoredRational {
    fn to_text(&self) -> String {
        FactoredRational::to_text(self)
    }
    fn to_latex(&self) -> String {
        FactoredRational::to_latex(self)
    }
    fn is_compound(&self) -> bool {
        self.numerator().num_terms() > 1 && self.denominator().is_empty()
    }
    fn is_unit(&self) -> bool {
        self.as_poly().is_some_and(MultiPoly::is_one)
    }
}

impl Render for num_rational::BigRational {
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn to_latex(&self) -> String {
        if self.is_integer() {
            self.to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
    fn is_compound(&self) -> bool {
        false
    }
    fn is_unit(&self) -> bool {
        num_traits::One::is_one(self)
    }
}
