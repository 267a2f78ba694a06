//! Exact computations with sheets of reductive Lie algebras: classification
//! tables, explicit `sl_2`-triples, Hitchin base dimensions, spectral data,
//! orbit-method multiplicities and real forms.
//!
//! All arithmetic is exact. Matrix entries and polynomial coefficients are
//! rationals or polynomials over the rationals in one parameter `t`.

pub mod error;
pub mod fixtures;
pub mod hitchin;
pub mod liealg;
pub mod matrix;
pub mod multiplicity;
pub mod partitions;
pub mod realforms;
pub mod ring;
pub mod sheets;
pub mod spectral;
pub mod triples;

pub use error::{AtlasError, Result};
pub use liealg::{ClassicalForm, FormSymmetry, LieAlgebraModel};
pub use matrix::{Matrix, PolyMatrix, RationalMatrix};
pub use partitions::{MultiplicityProfile, Partition};
pub use realforms::{RealFormLabel, RealSheetReport};
pub use ring::{GcdDomain, Poly, QPoly, Rational, Ring};
pub use sheets::{GroupKind, GroupOrder, LeviClass, LeviLabel, NilpotentOrbit, SheetDescriptor};
pub use spectral::{GradedPolynomial, SheetBasePoint};
pub use triples::{JordanBasisPlan, Sl2Triple};
