//! Exact computer algebra for forest and grove polynomials.
//!
//! * [`ring`]: sparse polynomials over `Z[b]`.
//! * [`forest`]: indexed forests (the Thompson monoid).
//! * [`operators`]: divided differences, Bergeron-Sottile maps, quasisymmetric
//!   divided differences and the grove extractors.
//! * [`schubert`]: permutations, Schubert and Grothendieck polynomials.
//! * [`bases`]: forest, grove and multi-fundamental polynomials and the
//!   expansion engines.
//! * [`verify`]: the relation suites behind `grove verify`.
//! * [`json`]: the versioned JSON schemas.

pub mod bases;
pub mod error;
pub mod forest;
pub mod json;
pub mod operators;
pub mod ring;
pub mod schubert;
pub mod verify;

pub use error::{Error, Result};
pub use forest::{Composition, ExtractorWord, IndexedForest, Side, TrimmingWord};
pub use ring::{BetaCoeff, BetaPolynomial, Monomial};
pub use schubert::Permutation;
