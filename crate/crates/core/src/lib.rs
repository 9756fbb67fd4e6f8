//! Atom-bond sum connectivity (ABS) index of simple graphs, its extremal
//! families, isomorph-free enumeration of small connected graphs, and an
//! engine that checks extremal claims exhaustively and by closed form.

pub mod abs;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod numfmt;
pub mod verify;

pub use abs::{abs_from_degree_pairs, abs_index, degree_pair_multiset, edge_weight, EdgeWeightTable};
pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm, CanonicalLabeling};
pub use enumerate::{count, enumerate, EnumMode, EnumSpec, MAX_ENUM_ORDER};
pub use error::{Error, Result};
pub use families::{KappaXY, PartSizes, SixPart, SixPartShape};
pub use graph::Graph;
pub use invariants::ClassConstraint;
