//! Generating spaces: exhaustive enumeration of labeled topologies and
//! seeded random sampling.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::point_set::{PointSet, MAX_POINTS};
use crate::space::FinSpace;

/// Largest size accepted by [`enumerate_topologies`].
pub const MAX_ENUMERATION_SIZE: usize = 5;

/// `a, b, c, ...` for up to 26 points, `p0, p1, ...` beyond that.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| char::from(b'a' + i as u8).to_string()).collect()
    } else {
        (0..n).map(|i| format!("p{i}")).collect()
    }
}

/// Every labeled topology on `n` points, each exactly once.
///
/// Walks all relations on the off-diagonal pairs in increasing bitmask order
/// and keeps the transitive ones; the relation `y ≤ x` becomes `y ∈ U_x`.
pub fn enumerate_topologies(n: usize, t0_only: bool) -> Result<Topologies> {
    if n == 0 || n > MAX_ENUMERATION_SIZE {
        return Err(Error::SizeTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    Ok(Topologies {
        labels: default_labels(n),
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
        t0_only,
    })
}

pub struct Topologies {
    labels: Vec<String>,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    t0_only: bool,
}

impl Topologies {
    fn decode(&self, mask: u64) -> Option<Vec<PointSet>> {
        let n = self.labels.len();
        let mut basis: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (k, &(x, y)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                basis[x].insert(y);
            }
        }
        for x in 0..n {
            for y in basis[x] {
                if !basis[y].is_subset(basis[x]) {
                    return None;
                }
                if self.t0_only && y != x && basis[y].contains(x) {
                    return None;
                }
            }
        }
        Some(basis)
    }
}

impl Iterator for Topologies {
    type Item = FinSpace;

    fn next(&mut self) -> Option<FinSpace> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if let Some(basis) = self.decode(mask) {
                return Some(FinSpace::from_parts(self.labels.clone(), basis));
            }
        }
        None
    }
}

/// All labeled topologies on `1..=max_n` points.
pub fn all_spaces_up_to(max_n: usize, t0_only: bool) -> Result<Vec<FinSpace>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_topologies(n, t0_only)?);
    }
    Ok(out)
}

/// A pseudo-random space on `n` points, fully determined by `(n, seed)`.
///
/// The stream is ChaCha8 seeded with `seed` through `seed_from_u64`. One
/// draw `k = next_u32() % 5` fixes the density; then for each ordered pair
/// `(x, y)` with `x ≠ y`, in row-major order, `y` is put below `x` when
/// `next_u32() % 8 < k`. The relation is closed transitively and read as
/// minimal open sets `U_x = {y | y ≤ x}`.
pub fn random_space(n: usize, seed: u64) -> Result<FinSpace> {
    if n == 0 {
        return Err(Error::NoPoints);
    }
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.next_u32() % 5;
    let mut basis: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
    for x in 0..n {
        for y in 0..n {
            if x != y && rng.next_u32() % 8 < k {
                basis[x].insert(y);
            }
        }
    }
    // Warshall: if z ∈ U_x then U_z ⊆ U_x
    for z in 0..n {
        for x in 0..n {
            if basis[x].contains(z) {
                basis[x] = basis[x].union(basis[z]);
            }
        }
    }
    FinSpace::from_minimal_basis(default_labels(n), basis)
}
