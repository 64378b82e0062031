//! Difunctional binary relations on `{1..n}` under the diamond product
//! `α ⋄ β = {(x, y) : xα = βy ≠ ∅}`, which makes them an inverse semigroup
//! `D_n`. The crate covers the relation algebra, the J-class and ideal
//! structure of `D_n`, and the rank (minimum generating-set size) of every
//! ideal: closed formulas, the explicit generating sets behind the upper
//! bound, and the necessary-element checks behind the lower bound.

pub mod combinatorics;
pub mod error;
pub mod generators;
pub mod relations;
pub mod semigroup;

pub use combinatorics::BigCount;
pub use error::{Error, Result, MAX_N};
pub use relations::{BinaryRelation, DifunRelation, Mask, RelationParams, SetPartition};
pub use semigroup::{ClosureResult, ElementSet, Green, PrincipalFactor};
