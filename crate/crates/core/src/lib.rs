//! Finite topological spaces measured by furtherness.
//!
//! A space on at most 64 points is stored as the minimal open set `U_x` of
//! each point. Furtherness `Ψ(x, y)` counts how many single-point
//! enlargements of open sets it takes, starting at `U_x`, to swallow `y`. It
//! recovers the topology through balls, and gives every subset a center and
//! a radius.
//!
//! ```
//! use finspace::{FinSpace, PointSet};
//!
//! let x = FinSpace::from_minimal_basis(
//!     ["a", "b", "c"],
//!     vec![PointSet::singleton(0), PointSet::from_iter([0, 1]), PointSet::from_iter([0, 1, 2])],
//! )
//! .unwrap();
//! assert_eq!(x.furtherness(0, 2), 2);
//! assert_eq!(x.furtherness(2, 0), 0);
//! ```

pub mod balls;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod furtherness;
pub mod io;
pub mod matrix;
pub mod order;
pub mod point_set;
pub mod regions;
pub mod space;
pub mod verify;

pub use balls::{generate_topology, BallQuery, Direction};
pub use dot::{export_dot, DotMode};
pub use enumerate::{all_spaces_up_to, enumerate_topologies, random_space};
pub use error::{Error, Result};
pub use furtherness::{ChainWitness, FurtherValue};
pub use io::{parse_space, serialize_space, DocumentError, SpaceDocument};
pub use matrix::{FurtherMatrix, MatrixReport, PointReport};
pub use order::{product, product_furtherness, product_furtherness_nfold, BeatPoints, Preorder, QuotientResult, SpaceMap};
pub use point_set::PointSet;
pub use regions::{LargestBall, QuasiReport, RegionReport, UnionAnalysis, UnionCase};
pub use space::{FinSpace, OpenFamily};
