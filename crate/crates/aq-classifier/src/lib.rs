//! Exact combinatorial classifier for the irreducible unitary representations
//! of SO0(2, m) with nonzero relative Lie algebra cohomology.
//!
//! Everything is computed over exact integers and rationals: the root datum
//! of so(m+2, C) with its compact/noncompact split ([`roots`]), a
//! deterministic Fourier-Motzkin feasibility solver ([`feasibility`]), the
//! enumeration of realizable sign classes ([`parabolic`]), per-class
//! attributes such as discreteness, Hodge type and lowest K-type
//! ([`classify`]), and the bigraded Poincaré polynomials of the associated
//! compact duals ([`cohomology`]). [`record`] serializes the results
//! (schema "aq-classifier/1") and [`verify`] cross-checks every computation
//! against independent oracles and hard-coded reference tables
//! ([`mod@reference`]).

pub mod classify;
pub mod cohomology;
pub mod error;
pub mod feasibility;
pub mod parabolic;
pub mod poset;
pub mod record;
pub mod reference;
pub mod roots;
pub mod verify;

pub use classify::{counts_closed_form, Counts};
pub use cohomology::{BigradedPoly, YqDescriptor, YqKind};
pub use error::Error;
pub use feasibility::{feasible_witness, minimal_support_witness, LinearSystem};
pub use parabolic::{enumerate_classes, grid_oracle, induced_class, ParabolicClass};
pub use record::{build_records, ClassRecord, SCHEMA};
pub use roots::{build_root_data, pairing, CVector, Family, HermitianRootData, Root};
