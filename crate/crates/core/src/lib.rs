//! Exact computer algebra for the extended genus-zero operad: the ring `R` and its
//! truncations, the ring `R[t0]` with its products `·` and `⊙` and involution `ι`,
//! the super endomorphism operad, and the extended cyclic operad over a pluggable
//! base, together with checkers for the identities relating them.

pub mod base_algebra;
pub mod basis;
pub mod error;
pub mod linalg;
pub mod mtilde;
pub mod perm;
pub mod poly;
pub mod report;
pub mod ring_r;
pub mod rt0;
pub mod super_operad;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial, Scalar};
pub use ring_r::{RElement, RdElement};
pub use rt0::RT0Element;
