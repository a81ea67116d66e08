//! Exact computations with noncommutative and quasi-symmetric Macdonald
//! functions: the (q,t)-Kostka matrices, the `H̃_J` expansions in the ribbon,
//! complete and elementary bases, the dual quasi-symmetric basis, and the
//! multiplication rule by the generic kernel. All arithmetic is over the
//! integers and rationals; [`verify`] runs the identity checks.

pub mod algebra;
pub mod compositions;
pub mod error;
pub mod kostka;
pub mod ncsf;
mod par;
pub mod product_rule;
pub mod qsym;
pub mod report;
pub mod statistics;
pub mod verify;

pub use compositions::{canonical_order, Cell, Composition};
pub use error::{Error, Result};
