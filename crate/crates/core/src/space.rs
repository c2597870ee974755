//! Finite spaces stored through their minimal open sets.
//!
//! A finite topology is determined by the smallest open neighbourhood `U_x`
//! of each point: the opens are exactly the unions of those sets. [`FinSpace`]
//! keeps only that basis and derives everything else on demand.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::point_set::{PointSet, MAX_POINTS};

/// A finite topological space.
///
/// Immutable once built. Invariants: `x ∈ U_x` for every point, and
/// `y ∈ U_x` implies `U_y ⊆ U_x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSpace {
    labels: Vec<String>,
    basis: Vec<PointSet>,
    // lowest-index point of each class of points sharing a minimal open set
    reps: PointSet,
}

impl std::fmt::Debug for FinSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for (i, l) in self.labels.iter().enumerate() {
            m.entry(l, &self.format_set(self.basis[i]));
        }
        m.finish()
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::NoPoints);
    }
    if labels.len() > MAX_POINTS {
        return Err(Error::TooManyPoints(labels.len()));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn check_range(set: PointSet, n: usize) -> Result<()> {
    match set.difference(PointSet::full(n)).first() {
        Some(index) => Err(Error::OutOfRange { index, n }),
        None => Ok(()),
    }
}

fn collect_labels<I, S>(labels: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    labels.into_iter().map(Into::into).collect()
}

impl FinSpace {
    /// Builds a space from its full list of open sets.
    ///
    /// The family must already contain `∅` and `X` and be closed under
    /// pairwise union and intersection; the first offending pair in canonical
    /// order is reported otherwise.
    pub fn from_open_sets<I, S>(labels: I, opens: &[PointSet]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels = collect_labels(labels);
        check_labels(&labels)?;
        let n = labels.len();
        for &s in opens {
            check_range(s, n)?;
        }
        let full = PointSet::full(n);
        let family = OpenFamily::new(n, opens.iter().copied());
        if !family.contains(PointSet::EMPTY) || !family.contains(full) {
            return Err(Error::MissingEmptyOrFull);
        }
        let members: HashSet<PointSet> = family.iter().collect();
        let sets = family.sets();
        for (i, &a) in sets.iter().enumerate() {
            for &b in &sets[i + 1..] {
                let pair = || (format_with(&labels, a), format_with(&labels, b));
                if !members.contains(&a.union(b)) {
                    let (left, right) = pair();
                    return Err(Error::NotClosedUnderUnion { left, right });
                }
                if !members.contains(&a.intersection(b)) {
                    let (left, right) = pair();
                    return Err(Error::NotClosedUnderIntersection { left, right });
                }
            }
        }
        let basis = (0..n)
            .map(|x| {
                sets.iter()
                    .filter(|s| s.contains(x))
                    .fold(full, |acc, &s| acc.intersection(s))
            })
            .collect();
        Ok(Self::from_parts(labels, basis))
    }

    /// Builds a space directly from one minimal open set per point.
    pub fn from_minimal_basis<I, S>(labels: I, basis: Vec<PointSet>) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels = collect_labels(labels);
        check_labels(&labels)?;
        let n = labels.len();
        if basis.len() != n {
            return Err(Error::BasisLength {
                expected: n,
                got: basis.len(),
            });
        }
        for &u in &basis {
            check_range(u, n)?;
        }
        for x in 0..n {
            if !basis[x].contains(x) {
                return Err(Error::PointNotInOwnBasis(labels[x].clone()));
            }
        }
        for x in 0..n {
            for y in basis[x] {
                if !basis[y].is_subset(basis[x]) {
                    return Err(Error::BasisNotNested {
                        x: labels[x].clone(),
                        y: labels[y].clone(),
                    });
                }
            }
        }
        Ok(Self::from_parts(labels, basis))
    }

    /// Assembles a space whose basis is already known to be valid.
    pub(crate) fn from_parts(labels: Vec<String>, basis: Vec<PointSet>) -> Self {
        debug_assert_eq!(labels.len(), basis.len());
        let mut reps = PointSet::EMPTY;
        for x in 0..basis.len() {
            if (0..x).all(|y| basis[y] != basis[x]) {
                reps.insert(x);
            }
        }
        FinSpace {
            labels,
            basis,
            reps,
        }
    }

    /// The discrete space on the given labels.
    pub fn discrete<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels = collect_labels(labels);
        let basis = (0..labels.len()).map(PointSet::singleton).collect();
        Self::from_minimal_basis(labels, basis)
    }

    /// The indiscrete space on the given labels.
    pub fn indiscrete<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels = collect_labels(labels);
        let basis = vec![PointSet::full(labels.len()); labels.len()];
        Self::from_minimal_basis(labels, basis)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn full(&self) -> PointSet {
        PointSet::full(self.n())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves a list of labels into a point set.
    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointSet> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect()
    }

    pub fn set_labels(&self, set: PointSet) -> Vec<&str> {
        set.iter().map(|i| self.labels[i].as_str()).collect()
    }

    /// Renders a set as `{a,b}`.
    pub fn format_set(&self, set: PointSet) -> String {
        format_with(&self.labels, set)
    }

    /// The minimal open set `U_x`.
    #[inline]
    pub fn min_open(&self, x: usize) -> PointSet {
        self.basis[x]
    }

    pub fn basis(&self) -> &[PointSet] {
        &self.basis
    }

    /// One point from each class of points with equal minimal open sets
    /// (the lowest index in the class).
    #[inline]
    pub fn class_representatives(&self) -> PointSet {
        self.reps
    }

    /// Every open set, in canonical order.
    pub fn open_family(&self) -> OpenFamily {
        let mut seen: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
        let mut stack = vec![PointSet::EMPTY];
        while let Some(s) = stack.pop() {
            for x in s.complement(self.n()) {
                let t = s.union(self.basis[x]);
                if seen.insert(t) {
                    stack.push(t);
                }
            }
        }
        OpenFamily::new(self.n(), seen)
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.basis[x].is_subset(s))
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(s.complement(self.n()))
    }

    pub fn is_clopen(&self, s: PointSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    /// The smallest open set containing `a`, i.e. the union of the `U_x`
    /// over its members.
    pub fn minimal_open(&self, a: PointSet) -> Result<PointSet> {
        if a.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(self.minimal_open_unchecked(a))
    }

    #[inline]
    pub(crate) fn minimal_open_unchecked(&self, a: PointSet) -> PointSet {
        a.iter()
            .fold(PointSet::EMPTY, |acc, x| acc.union(self.basis[x]))
    }

    /// `{y | U_y ∩ A ≠ ∅}`.
    pub fn closure(&self, a: PointSet) -> PointSet {
        (0..self.n())
            .filter(|&y| self.basis[y].intersects(a))
            .collect()
    }

    /// `{x ∈ A | U_x ⊆ A}`.
    pub fn interior(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| self.basis[x].is_subset(a)).collect()
    }

    pub fn boundary(&self, a: PointSet) -> PointSet {
        self.closure(a).difference(self.interior(a))
    }

    /// The space whose opens are the closed sets of `self`.
    pub fn opposite(&self) -> FinSpace {
        let basis = (0..self.n())
            .map(|x| self.closure(PointSet::singleton(x)))
            .collect();
        Self::from_parts(self.labels.clone(), basis)
    }

    /// The subspace on `y`, with points kept in their original order.
    pub fn subspace(&self, y: PointSet) -> Result<FinSpace> {
        if y.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_range(y, self.n())?;
        let kept: Vec<usize> = y.iter().collect();
        let reindex = |s: PointSet| -> PointSet {
            kept.iter()
                .enumerate()
                .filter(|&(_, &old)| s.contains(old))
                .map(|(new, _)| new)
                .collect()
        };
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let basis = kept
            .iter()
            .map(|&i| reindex(self.basis[i].intersection(y)))
            .collect();
        Ok(Self::from_parts(labels, basis))
    }

    /// Whether distinct points have distinct minimal open sets.
    pub fn is_t0(&self) -> bool {
        self.reps.len() == self.n()
    }

    /// Same space with its labels replaced.
    pub fn relabeled<I, S>(&self, labels: I) -> Result<FinSpace>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::from_minimal_basis(labels, self.basis.clone())
    }
}

pub(crate) fn format_with(labels: &[String], set: PointSet) -> String {
    let inner: Vec<&str> = set.iter().map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

/// A deduplicated family of open sets in canonical order: ascending
/// cardinality, then lexicographic on index lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenFamily {
    n: usize,
    sets: Vec<PointSet>,
}

impl OpenFamily {
    pub fn new<I: IntoIterator<Item = PointSet>>(n: usize, sets: I) -> Self {
        let mut sets: Vec<PointSet> = sets.into_iter().collect();
        sets.sort_by(PointSet::canonical_cmp);
        sets.dedup();
        OpenFamily { n, sets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn contains(&self, s: PointSet) -> bool {
        self.sets
            .binary_search_by(|probe| probe.canonical_cmp(&s))
            .is_ok()
    }

    /// Contains `∅` and the full set and is closed under pairwise union and
    /// intersection.
    pub fn is_topology(&self) -> bool {
        if !self.contains(PointSet::EMPTY) || !self.contains(PointSet::full(self.n)) {
            return false;
        }
        let members: HashSet<PointSet> = self.iter().collect();
        self.sets.iter().all(|&a| {
            self.sets.iter().all(|&b| {
                members.contains(&a.union(b)) && members.contains(&a.intersection(b))
            })
        })
    }

    pub fn is_subfamily_of(&self, other: &OpenFamily) -> bool {
        self.iter().all(|s| other.contains(s))
    }
}
