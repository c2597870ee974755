//! Forward and backward balls and the topologies they generate.

use crate::error::{Error, Result};
use crate::point_set::PointSet;
use crate::space::{FinSpace, OpenFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `B⁺(x,n) = {y | Ψ(x,y) < n}`
    Forward,
    /// `B⁻(x,n) = {y | Ψ(y,x) < n}`
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BallQuery {
    pub center: usize,
    pub radius: u32,
    pub direction: Direction,
}

impl BallQuery {
    pub fn forward(center: usize, radius: u32) -> Self {
        BallQuery {
            center,
            radius,
            direction: Direction::Forward,
        }
    }

    pub fn backward(center: usize, radius: u32) -> Self {
        BallQuery {
            center,
            radius,
            direction: Direction::Backward,
        }
    }
}

/// Topology generated by a family of subsets: the coarsest topology in which
/// every member is open.
///
/// Each point gets the intersection of the generators that contain it as
/// its minimal neighbourhood; the opens are all unions of those.
pub fn generate_topology(n: usize, generators: impl IntoIterator<Item = PointSet>) -> OpenFamily {
    let full = PointSet::full(n);
    let mut basis = vec![full; n];
    for g in generators {
        for x in g {
            basis[x] = basis[x].intersection(g);
        }
    }
    // union-closure of the neighbourhoods; they are nested by construction
    let labels = (0..n).map(|i| i.to_string()).collect();
    FinSpace::from_parts(labels, basis).open_family()
}

impl FinSpace {
    pub fn ball(&self, q: BallQuery) -> Result<PointSet> {
        if q.radius == 0 {
            return Err(Error::ZeroRadius);
        }
        Ok(self.ball_unchecked(q))
    }

    /// Like [`FinSpace::ball`] but radius 0 yields the empty set.
    pub(crate) fn ball_unchecked(&self, q: BallQuery) -> PointSet {
        (0..self.n())
            .filter(|&y| {
                let d = match q.direction {
                    Direction::Forward => self.furtherness(q.center, y),
                    Direction::Backward => self.furtherness(y, q.center),
                };
                d < q.radius
            })
            .collect()
    }

    /// All balls of one direction with radii `1..=n`.
    pub fn balls(&self, direction: Direction) -> Vec<PointSet> {
        let n = self.n() as u32;
        (0..self.n())
            .flat_map(|c| {
                (1..=n).map(move |r| BallQuery {
                    center: c,
                    radius: r,
                    direction,
                })
            })
            .map(|q| self.ball_unchecked(q))
            .collect()
    }

    pub fn ball_topology(&self, direction: Direction) -> OpenFamily {
        generate_topology(self.n(), self.balls(direction))
    }

    /// Balls `{y | max(Ψ(x,y), Ψ(y,x)) < r}` for all centers and radii `1..=n`.
    pub fn symmetrized_balls(&self) -> Vec<PointSet> {
        let n = self.n() as u32;
        let mut out = Vec::new();
        for c in 0..self.n() {
            for r in 1..=n {
                out.push(
                    (0..self.n())
                        .filter(|&y| self.symmetrized_furtherness(c, y) < r)
                        .collect(),
                );
            }
        }
        out
    }

    pub fn symmetrized_topology(&self) -> OpenFamily {
        generate_topology(self.n(), self.symmetrized_balls())
    }
}
