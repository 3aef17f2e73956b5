//! Exact computations around the associated graded ring of a local ring
//! presented by polynomial generators at the origin: tangent cones via
//! Mora's algorithm, the `t`-deformation to the tangent cone, dual graphs
//! and connectedness in codimension `s`, Hilbert series and
//! Hilbert-Samuel data, and the numerical checks built on them.

pub mod basis;
pub mod cli;
pub mod deform;
pub mod error;
pub mod hilbert;
pub mod monideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod spectrum;
pub mod verify;

pub use basis::{BasisStatus, Ideal};
pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use poly::Polynomial;
pub use ring::{Ring, RingRef};
pub use scalar::{CoefficientField, Scalar};
