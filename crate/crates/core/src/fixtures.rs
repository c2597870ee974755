//! Small named spaces used throughout the tests and documentation.

use crate::point_set::PointSet;
use crate::space::FinSpace;

/// Builds a point set from indices.
pub fn set(indices: &[usize]) -> PointSet {
    indices.iter().copied().collect()
}

/// `{1,2,3}` with opens `{∅, {1,2}, X}`.
pub fn e1() -> FinSpace {
    FinSpace::from_open_sets(["1", "2", "3"], &[set(&[]), set(&[0, 1]), set(&[0, 1, 2])])
        .expect("valid fixture")
}

/// `{a,b,c,d}` with opens `{∅, X, {a}, {d}, {a,b}, {a,d}, {a,b,d}}`.
pub fn e2() -> FinSpace {
    FinSpace::from_open_sets(
        ["a", "b", "c", "d"],
        &[
            set(&[]),
            set(&[0, 1, 2, 3]),
            set(&[0]),
            set(&[3]),
            set(&[0, 1]),
            set(&[0, 3]),
            set(&[0, 1, 3]),
        ],
    )
    .expect("valid fixture")
}

/// Sierpinski space `{a,b}` with opens `{∅, {a}, X}`.
pub fn sierpinski() -> FinSpace {
    FinSpace::from_open_sets(["a", "b"], &[set(&[]), set(&[0]), set(&[0, 1])])
        .expect("valid fixture")
}

/// Sierpinski space on `{x,y}` with opens `{∅, {x}, Y}`.
pub fn sierpinski_xy() -> FinSpace {
    FinSpace::from_open_sets(["x", "y"], &[set(&[]), set(&[0]), set(&[0, 1])])
        .expect("valid fixture")
}

/// `{a,b,c,d}` with opens
/// `{∅, {a}, {c}, {a,c}, {a,b}, {c,d}, {a,b,c}, {a,c,d}, X}`: two disjoint
/// Sierpinski spaces `a < b` and `c < d`.
pub fn q1() -> FinSpace {
    FinSpace::from_open_sets(
        ["a", "b", "c", "d"],
        &[
            set(&[]),
            set(&[0]),
            set(&[2]),
            set(&[0, 2]),
            set(&[0, 1]),
            set(&[2, 3]),
            set(&[0, 1, 2]),
            set(&[0, 2, 3]),
            set(&[0, 1, 2, 3]),
        ],
    )
    .expect("valid fixture")
}

/// The chain `x < y < z` (opens `∅, {x}, {x,y}, X`).
pub fn chain3() -> FinSpace {
    FinSpace::from_minimal_basis(["x", "y", "z"], vec![set(&[0]), set(&[0, 1]), set(&[0, 1, 2])])
        .expect("valid fixture")
}
