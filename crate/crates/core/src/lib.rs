//! Nakayama algebras given by Kupisch series: homological invariants,
//! syzygy filtrations, the reverse construction, and exhaustive search for
//! higher Auslander algebras.

pub mod algebra;
pub mod catalog;
pub mod dim;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod filtration;
pub mod homology;
pub mod reverse;
pub mod text;
pub mod verify;

pub use algebra::{canonical_cyclic, validate, Algebra, Shape, UniserialModule};
pub use dim::Dim;
pub use enumeration::{
    catalog, expected_spectrum, find_higher_auslander, iterate_cyclic, spectrum, CatalogRecord,
    SearchConfig,
};
pub use error::{Error, Result};
pub use families::{cover, Family};
pub use filtration::{b_filtration, base_set, epsilon, epsilon_chain, socle_set};
pub use homology::{HomologicalSummary, RelationSystem};
pub use reverse::{cycle_orderings, defect_vector, necklace_count, reverse_chain, reverse_epsilon};
pub use text::{format_algebra, parse_algebra};
