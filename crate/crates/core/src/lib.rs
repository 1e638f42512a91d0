//! Boolean clonoids: sets of Boolean functions closed under composition
//! with a clone on the right and a clone on the left.
//!
//! The crate provides exact truth-table functions ([`boolfn`]), labeled
//! posets and their homomorphisms ([`kposet`]), Post's lattice of clones
//! ([`postlattice`]), the minor quasi-order induced by a clone
//! ([`minorder`]) and the clonoid engine: closures, stability checks and
//! enumerations ([`clonoid_engine`]).

pub mod boolfn;
pub mod class;
pub mod clonoid_engine;
pub mod compose;
pub mod error;
pub mod fnset;
pub mod golden;
pub mod kposet;
pub mod minorder;
pub mod postlattice;

pub use boolfn::{ArgMap, BoolFn, R2Set, Range2, Rank, MAX_ARITY};
pub use class::{ClassAtom, ClassExpr};
pub use error::{Error, Result};
pub use fnset::FnSet;
pub use kposet::{HomMode, LabeledPoset, Poset};
pub use minorder::{class_label, label_leq, leq_minor_bruteforce, minor_poset, MinorClassLabel};
pub use postlattice::{clone_leq, CloneId};
