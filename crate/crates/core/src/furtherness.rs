//! The furtherness function.
//!
//! `Ψ(x, y)` is the least position at which `y` shows up in a saturated
//! chain of open sets starting at `U_x`. Two routes are provided: the closed
//! form `|U_[y] \ U_[x]|` counted over classes of topologically
//! indistinguishable points, and a breadth-first search over the cover graph
//! of the open-set lattice that follows the chain definition directly.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

use crate::point_set::PointSet;
use crate::space::FinSpace;

/// A furtherness value: a whole number, or infinity for queries against the
/// empty set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FurtherValue {
    Finite(u32),
    Infinity,
}

impl FurtherValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            FurtherValue::Finite(v) => Some(v),
            FurtherValue::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == FurtherValue::Infinity
    }
}

impl From<u32> for FurtherValue {
    fn from(v: u32) -> Self {
        FurtherValue::Finite(v)
    }
}

impl Add for FurtherValue {
    type Output = FurtherValue;

    fn add(self, rhs: FurtherValue) -> FurtherValue {
        match (self, rhs) {
            (FurtherValue::Finite(a), FurtherValue::Finite(b)) => FurtherValue::Finite(a + b),
            _ => FurtherValue::Infinity,
        }
    }
}

impl fmt::Display for FurtherValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FurtherValue::Finite(v) => write!(f, "{v}"),
            FurtherValue::Infinity => f.write_str("∞"),
        }
    }
}

/// Finite values serialize as numbers, infinity as the string `"infinity"`.
impl Serialize for FurtherValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FurtherValue::Finite(v) => s.serialize_u32(*v),
            FurtherValue::Infinity => s.serialize_str("infinity"),
        }
    }
}

/// A saturated chain of open sets `U_0 ⊂ U_1 ⊂ ... ⊂ U_k` with `U_0 = U_x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainWitness {
    pub chain: Vec<PointSet>,
}

impl ChainWitness {
    /// Number of cover steps.
    pub fn steps(&self) -> usize {
        self.chain.len().saturating_sub(1)
    }

    pub fn last(&self) -> PointSet {
        *self.chain.last().expect("chains are never empty")
    }

    /// Position of the first set containing `y`.
    pub fn position_of(&self, y: usize) -> Option<usize> {
        self.chain.iter().position(|s| s.contains(y))
    }
}

impl FinSpace {
    /// `Ψ(x, y) = |U_[y] \ U_[x]|`, counting classes of points that share a
    /// minimal open set.
    #[inline]
    pub fn furtherness(&self, x: usize, y: usize) -> u32 {
        self.min_open(y)
            .difference(self.min_open(x))
            .intersection(self.class_representatives())
            .len() as u32
    }

    /// Open sets that cover `u` in the lattice of opens.
    ///
    /// Every cover has the form `u ∪ U_a` for some `a ∉ u`; such a candidate
    /// `v` is a cover iff `u ∪ U_b = v` for every `b ∈ v \ u`.
    pub fn open_covers(&self, u: PointSet) -> Vec<PointSet> {
        let mut out: Vec<PointSet> = Vec::new();
        for a in u.complement(self.n()) {
            let v = u.union(self.min_open(a));
            if out.contains(&v) {
                continue;
            }
            if v.difference(u)
                .iter()
                .all(|b| u.union(self.min_open(b)) == v)
            {
                out.push(v);
            }
        }
        out.sort_by(PointSet::canonical_cmp);
        out
    }

    /// Searches the cover graph from `U_x` for the first level holding a set
    /// that contains `y`. Returns that level and a chain reaching it.
    pub fn furtherness_oracle(&self, x: usize, y: usize) -> (u32, ChainWitness) {
        let start = self.min_open(x);
        let chain = self
            .shortest_chain(start, |s| s.contains(y))
            .expect("every saturated chain ends at the whole space");
        ((chain.steps()) as u32, chain)
    }

    /// A shortest saturated chain from `U_x` to the open set `target`, if
    /// `target` is open and contains `U_x`.
    pub fn chain_to(&self, x: usize, target: PointSet) -> Option<ChainWitness> {
        let start = self.min_open(x);
        if !start.is_subset(target) || !self.is_open(target) {
            return None;
        }
        self.shortest_chain(start, |s| s == target)
    }

    fn shortest_chain(
        &self,
        start: PointSet,
        goal: impl Fn(PointSet) -> bool,
    ) -> Option<ChainWitness> {
        let mut parent: HashMap<PointSet, PointSet> = HashMap::new();
        let mut seen: HashSet<PointSet> = HashSet::from([start]);
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            frontier.sort_by(PointSet::canonical_cmp);
            if let Some(&hit) = frontier.iter().find(|&&s| goal(s)) {
                let mut chain = vec![hit];
                let mut cur = hit;
                while let Some(&p) = parent.get(&cur) {
                    chain.push(p);
                    cur = p;
                }
                chain.reverse();
                return Some(ChainWitness { chain });
            }
            let mut next = Vec::new();
            for &u in &frontier {
                for v in self.open_covers(u) {
                    if seen.insert(v) {
                        parent.insert(v, u);
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        None
    }

    /// Every maximal nested sequence around `x`: all saturated chains of
    /// opens from `U_x` up to the whole space. Exponential in general; meant
    /// for small spaces.
    pub fn nested_sequences(&self, x: usize) -> Vec<ChainWitness> {
        let mut out = Vec::new();
        let mut chain = vec![self.min_open(x)];
        self.extend_chains(&mut chain, &mut out);
        out
    }

    fn extend_chains(&self, chain: &mut Vec<PointSet>, out: &mut Vec<ChainWitness>) {
        let top = *chain.last().unwrap();
        let covers = self.open_covers(top);
        if covers.is_empty() {
            out.push(ChainWitness {
                chain: chain.clone(),
            });
            return;
        }
        for v in covers {
            chain.push(v);
            self.extend_chains(chain, out);
            chain.pop();
        }
    }

    /// `Ψ(x, B) = min_{b ∈ B} Ψ(x, b)`, infinite for empty `B`.
    pub fn furtherness_to_set(&self, x: usize, b: PointSet) -> FurtherValue {
        b.iter()
            .map(|y| self.furtherness(x, y))
            .min()
            .map_or(FurtherValue::Infinity, FurtherValue::Finite)
    }

    /// `Ψ(A, B) = min_{a ∈ A} Ψ(a, B)`, infinite when either side is empty.
    pub fn set_furtherness(&self, a: PointSet, b: PointSet) -> FurtherValue {
        a.iter()
            .map(|x| self.furtherness_to_set(x, b))
            .min()
            .unwrap_or(FurtherValue::Infinity)
    }

    /// `max{Ψ(x,y), Ψ(y,x)}`.
    pub fn symmetrized_furtherness(&self, x: usize, y: usize) -> u32 {
        self.furtherness(x, y).max(self.furtherness(y, x))
    }
}
