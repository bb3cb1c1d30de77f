//! Truncated multivariate q-series and the product and sum builders used on
//! the generating-function side of every identity.

mod assign;
mod eulerian;
mod monomial;
mod poly;
mod product;
mod truncated;

pub mod builders;

pub use assign::{ColorAssignment, Subst};
pub use eulerian::{descent_set_counts, eulerian, eulerian_bar, eulerian_poly, MAX_EULERIAN_N};
pub use monomial::{ColorIndex, Monomial, Var};
pub use poly::Poly;
pub use product::{pochhammer, pochhammer_inverse, pochhammer_multi};
pub use truncated::{geometric_inverse, Caps, Series};
