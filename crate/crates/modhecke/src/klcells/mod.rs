//! Generic Hecke algebra in the `T~` basis, Kazhdan-Lusztig basis for a positive
//! weight function, structure constants, the a-function, Lusztig's ring `J` and
//! checks of the properties P2-P8, P15'.

mod basis;
mod hecke;
mod jring;
mod props;

pub use basis::{kl_basis, KlData, KlOptions, STRUCTURE_CAP};
pub use hecke::{HeckeAlgebra, HeckeElement};
pub use jring::{determinant, JElement, JRing};
pub use props::{check_all, check_property, Property, PropertyResult};

use crate::laurent::LaurentError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KlError {
    #[error("weights {0:?} are not a weight function for this group")]
    InvalidWeight(Vec<u32>),
    #[error("weights {0:?} must be strictly positive")]
    NonPositiveWeight(Vec<u32>),
    #[error("group of order {size} exceeds the structure-constant cap {cap}; use force")]
    GroupTooLarge { size: usize, cap: usize },
    #[error("order is not a linear extension of the Bruhat order")]
    InvalidLinearization,
    #[error("property {property} fails at {witness:?}")]
    PropertyFailure { property: String, witness: Vec<usize> },
    #[error("diagnostic: {0}")]
    Diagnostic(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}
