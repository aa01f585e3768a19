//! Classification of equivariant real vector bundles over a circle.
//!
//! A finite group `G` acts on the circle through an orthogonal representation
//! `ρ: G → O(2)`. With `H = ker ρ`, bundles split into isotypical pieces indexed
//! by `G`-orbits of real irreducible characters of `H`, and each piece is a
//! commutative semigroup with an explicit presentation. This crate computes
//! those presentations, isomorphism-class counts and the triviality of every
//! generator, entirely in exact arithmetic.
//!
//! Layers, bottom-up:
//! - [`group`]: explicit permutation groups, subgroups, conjugacy classes.
//! - [`characters`]: character tables over a prime field, real irreducibles
//!   with their ℝ/ℂ/ℍ type, restriction, induction and extension counting.
//! - [`circle`]: exact `O(2)` arithmetic and circle actions.
//! - [`classifier`]: the per-orbit classification pipeline.
//! - [`verify`]: invariant suites used by tests and the self-check command.

pub mod catalog;
pub mod characters;
pub mod circle;
pub mod classifier;
pub mod error;
pub mod field;
pub mod group;
pub mod linalg;
pub mod verify;

pub use characters::{CharacterTable, ClassFunction, RealIrreducible, RealType, TableCache};
pub use circle::{Angle, CircleAction, ImageKind, OrthogonalElement, SpecialPoint};
pub use classifier::{classify, Case, IsotypicalClass, Report, SemigroupPresentation};
pub use error::{Error, Result};
pub use field::FieldContext;
pub use group::{FiniteGroup, Permutation, Subgroup};
