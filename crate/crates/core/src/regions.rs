//! Centers and radii of subsets.
//!
//! The center of `A` is the set of its points furthest from `∂A`, and the
//! radius is that furtherness. Quasi-centers measure against the complement
//! instead of the boundary. All argmax sets keep every maximizer.

use crate::balls::{BallQuery, Direction};
use crate::error::{Error, Result};
use crate::furtherness::FurtherValue;
use crate::point_set::PointSet;
use crate::space::FinSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RegionReport {
    pub subset: PointSet,
    pub boundary: PointSet,
    pub interior: PointSet,
    pub center: PointSet,
    pub radius: FurtherValue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuasiReport {
    pub subset: PointSet,
    pub quasi_center: PointSet,
    pub quasi_radius: FurtherValue,
}

/// Which union result produced the prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnionCase {
    /// Two sets, unequal radii, the larger one keeps part of its center.
    LargerKeepsCenter,
    /// Two sets of equal radius, some center point survives.
    EqualKeepsCenter,
    /// Two sets, unequal radii, the larger center is entirely lost.
    LargerLosesCenter,
    /// Two sets of equal radius, both centers entirely lost.
    EqualLosesCenter,
    /// Any number of sets, some maximal-radius center survives.
    General,
    /// Any number of sets other than two, no center survives.
    FallbackDirect,
}

impl UnionCase {
    /// Short tag used in reports.
    pub fn tag(self) -> &'static str {
        match self {
            UnionCase::LargerKeepsCenter => "larger-keeps-center",
            UnionCase::EqualKeepsCenter => "equal-keeps-center",
            UnionCase::LargerLosesCenter => "larger-loses-center",
            UnionCase::EqualLosesCenter => "equal-loses-center",
            UnionCase::General => "general",
            UnionCase::FallbackDirect => "fallback-direct",
        }
    }

    /// Cases where the prediction is exact.
    pub fn predicts(self) -> bool {
        matches!(
            self,
            UnionCase::LargerKeepsCenter | UnionCase::EqualKeepsCenter | UnionCase::General
        )
    }

    /// Cases where the union's radius must drop below the maximum.
    pub fn strict_decrease(self) -> bool {
        matches!(self, UnionCase::LargerLosesCenter | UnionCase::EqualLosesCenter)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionAnalysis {
    pub inputs: Vec<RegionReport>,
    /// Center points of each input that the other boundaries pull below its
    /// radius: `{a ∈ Cent(A_j) | Ψ(a, ∂A_i) < rad(A_j) for some i ≠ j}`.
    pub tilde_sets: Vec<PointSet>,
    /// Inputs of maximal radius keeping part of their center.
    pub dominant: Vec<usize>,
    pub max_radius: FurtherValue,
    pub predicted_center: Option<PointSet>,
    pub predicted_radius: Option<FurtherValue>,
    pub case: UnionCase,
    pub direct: RegionReport,
}

impl UnionAnalysis {
    /// Whether the direct computation agrees with every claim the case makes.
    pub fn consistent(&self) -> bool {
        if self.direct.radius > self.max_radius {
            return false;
        }
        if self.case.predicts()
            && (self.predicted_center != Some(self.direct.center)
                || self.predicted_radius != Some(self.direct.radius))
        {
            return false;
        }
        if self.case.strict_decrease() && self.direct.radius >= self.max_radius {
            return false;
        }
        true
    }
}

/// One radius-maximal forward ball inside a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LargestBall {
    pub center: usize,
    pub radius: u32,
    pub ball: PointSet,
    /// Strictly contained in another returned ball.
    pub contained_in_other: bool,
}

/// Points of `a` maximizing `score`, with the maximum. Empty input gives
/// `(∅, ∞)`.
fn argmax(a: PointSet, score: impl Fn(usize) -> FurtherValue) -> (PointSet, FurtherValue) {
    let mut best = None;
    let mut center = PointSet::EMPTY;
    for x in a {
        let s = score(x);
        match best {
            Some(b) if s < b => {}
            Some(b) if s == b => center.insert(x),
            _ => {
                best = Some(s);
                center = PointSet::singleton(x);
            }
        }
    }
    (center, best.unwrap_or(FurtherValue::Infinity))
}

impl FinSpace {
    pub fn region_report(&self, a: PointSet) -> RegionReport {
        let boundary = self.boundary(a);
        let interior = self.interior(a);
        let (center, radius) = argmax(a, |x| self.furtherness_to_set(x, boundary));
        RegionReport {
            subset: a,
            boundary,
            interior,
            center,
            radius,
        }
    }

    pub fn radius(&self, a: PointSet) -> FurtherValue {
        self.region_report(a).radius
    }

    pub fn quasi_report(&self, a: PointSet) -> QuasiReport {
        let complement = a.complement(self.n());
        let (quasi_center, quasi_radius) = argmax(a, |x| self.furtherness_to_set(x, complement));
        QuasiReport {
            subset: a,
            quasi_center,
            quasi_radius,
        }
    }

    /// `A ∩ cl(B) = ∅` and `cl(A) ∩ B = ∅`.
    pub fn are_separated(&self, a: PointSet, b: PointSet) -> bool {
        !a.intersects(self.closure(b)) && !self.closure(a).intersects(b)
    }

    /// Predicts the center and radius of a union of pairwise separated,
    /// nonempty, nonclopen subsets from those of the pieces, alongside the
    /// direct computation.
    pub fn union_analysis(&self, subsets: &[PointSet]) -> Result<UnionAnalysis> {
        if subsets.is_empty() {
            return Err(Error::PreconditionViolated("no subsets given".into()));
        }
        for (i, &s) in subsets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::PreconditionViolated(format!("subset #{i} is empty")));
            }
            if !s.within(self.n()) {
                return Err(Error::PreconditionViolated(format!(
                    "subset #{i} has points out of range"
                )));
            }
            if self.is_clopen(s) {
                return Err(Error::PreconditionViolated(format!(
                    "subset #{i} {} is clopen",
                    self.format_set(s)
                )));
            }
        }
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if !self.are_separated(subsets[i], subsets[j]) {
                    return Err(Error::PreconditionViolated(format!(
                        "subsets #{i} {} and #{j} {} are not separated",
                        self.format_set(subsets[i]),
                        self.format_set(subsets[j])
                    )));
                }
            }
        }

        let inputs: Vec<RegionReport> = subsets.iter().map(|&s| self.region_report(s)).collect();
        let tilde_sets: Vec<PointSet> = inputs
            .iter()
            .enumerate()
            .map(|(j, rj)| {
                rj.center
                    .iter()
                    .filter(|&a| {
                        inputs.iter().enumerate().any(|(i, ri)| {
                            i != j && self.furtherness_to_set(a, ri.boundary) < rj.radius
                        })
                    })
                    .collect()
            })
            .collect();
        let max_radius = inputs.iter().map(|r| r.radius).max().expect("nonempty");
        let dominant: Vec<usize> = (0..inputs.len())
            .filter(|&j| {
                inputs[j].radius == max_radius
                    && !inputs[j].center.difference(tilde_sets[j]).is_empty()
            })
            .collect();
        let survivors = dominant.iter().fold(PointSet::EMPTY, |acc, &j| {
            acc.union(inputs[j].center.difference(tilde_sets[j]))
        });

        let equal_pair = inputs.len() == 2 && inputs[0].radius == inputs[1].radius;
        let case = match (inputs.len(), survivors.is_empty()) {
            (2, false) if equal_pair => UnionCase::EqualKeepsCenter,
            (2, false) => UnionCase::LargerKeepsCenter,
            (2, true) if equal_pair => UnionCase::EqualLosesCenter,
            (2, true) => UnionCase::LargerLosesCenter,
            (_, false) => UnionCase::General,
            (_, true) => UnionCase::FallbackDirect,
        };
        let (predicted_center, predicted_radius) = if survivors.is_empty() {
            (None, None)
        } else {
            (Some(survivors), Some(max_radius))
        };
        let union = subsets.iter().fold(PointSet::EMPTY, |acc, &s| acc.union(s));
        Ok(UnionAnalysis {
            inputs,
            tilde_sets,
            dominant,
            max_radius,
            predicted_center,
            predicted_radius,
            case,
            direct: self.region_report(union),
        })
    }

    /// Largest `n` with `B⁺(x, n) ⊆ A`, which is `Ψ(x, Aᶜ)`. Zero means no
    /// forward ball around `x` fits inside `A`.
    pub fn largest_contained_radius(&self, x: usize, a: PointSet) -> FurtherValue {
        self.furtherness_to_set(x, a.complement(self.n()))
    }

    /// The radius-maximal forward balls contained in a nonempty proper
    /// subset: one entry per quasi-center point, at the quasi-radius. When
    /// the quasi-radius is 0 no ball fits and the listed balls are empty.
    pub fn largest_forward_balls(&self, a: PointSet) -> Result<Vec<LargestBall>> {
        if a.is_empty() || a == self.full() || !a.within(self.n()) {
            return Err(Error::EmptyOrFullSubset);
        }
        let q = self.quasi_report(a);
        let radius = q.quasi_radius.finite().expect("proper subset has finite quasi-radius");
        let mut out: Vec<LargestBall> = q
            .quasi_center
            .iter()
            .map(|c| LargestBall {
                center: c,
                radius,
                ball: self.ball_unchecked(BallQuery {
                    center: c,
                    radius,
                    direction: Direction::Forward,
                }),
                contained_in_other: false,
            })
            .collect();
        let balls: Vec<PointSet> = out.iter().map(|b| b.ball).collect();
        for entry in &mut out {
            entry.contained_in_other = balls.iter().any(|&o| entry.ball.is_proper_subset(o));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e1, e2, q1, set};
    use FurtherValue::{Finite, Infinity};

    #[test]
    fn region_examples() {
        let r = e1().region_report(set(&[1, 2]));
        assert_eq!((r.center, r.radius), (set(&[1, 2]), Finite(0)));
        let r = e2().region_report(set(&[0, 2]));
        assert_eq!((r.center, r.radius), (set(&[0]), Finite(1)));
        assert_eq!(r.boundary, set(&[1, 2]));
        let r = q1().region_report(set(&[0, 1]));
        assert_eq!((r.center, r.radius), (set(&[0, 1]), Infinity));
        let r = e2().region_report(PointSet::EMPTY);
        assert_eq!((r.center, r.radius), (PointSet::EMPTY, Infinity));
    }

    #[test]
    fn quasi_examples() {
        // Ψ(a,{c,d}) = min(1,2) = 1 and Ψ(b,{c,d}) = min(1,2) = 1
        let q = q1().quasi_report(set(&[0, 1]));
        assert_eq!((q.quasi_center, q.quasi_radius), (set(&[0, 1]), Finite(1)));
        let x = e2();
        let q = x.quasi_report(x.full());
        assert_eq!((q.quasi_center, q.quasi_radius), (x.full(), Infinity));
        let q = x.quasi_report(set(&[0]));
        assert_eq!((q.quasi_center, q.quasi_radius), (set(&[0]), Finite(1)));
        let q = x.quasi_report(PointSet::EMPTY);
        assert_eq!(q.quasi_radius, Infinity);
    }

    #[test]
    fn separation() {
        let x = e2();
        assert!(x.are_separated(set(&[3]), set(&[1])));
        assert!(!x.are_separated(set(&[0]), set(&[1])));
        assert!(x.are_separated(set(&[0]), PointSet::EMPTY));
    }

    #[test]
    fn union_larger_loses_center() {
        let u = e2().union_analysis(&[set(&[3]), set(&[1])]).unwrap();
        assert_eq!(u.case, UnionCase::LargerLosesCenter);
        assert_eq!(u.inputs[0].radius, Finite(3));
        assert_eq!(u.tilde_sets[0], set(&[3]));
        assert_eq!(u.direct.radius, Finite(2));
        assert_eq!(u.direct.center, set(&[3]));
        assert!(u.predicted_center.is_none());
        assert!(u.consistent());
    }

    #[test]
    fn union_equal_keeps_center() {
        let u = q1().union_analysis(&[set(&[1]), set(&[3])]).unwrap();
        assert_eq!(u.case, UnionCase::EqualKeepsCenter);
        assert_eq!(u.predicted_center, Some(set(&[1, 3])));
        assert_eq!(u.predicted_radius, Some(Finite(0)));
        assert_eq!(u.tilde_sets, vec![PointSet::EMPTY, PointSet::EMPTY]);
        assert_eq!(u.direct.center, set(&[1, 3]));
        assert!(u.consistent());
    }

    #[test]
    fn union_single_subset() {
        let x = e2();
        let a = set(&[0, 2]);
        let u = x.union_analysis(&[a]).unwrap();
        let r = x.region_report(a);
        assert_eq!(u.case, UnionCase::General);
        assert_eq!(u.predicted_center, Some(r.center));
        assert_eq!(u.predicted_radius, Some(r.radius));
    }

    #[test]
    fn union_preconditions() {
        let x = e2();
        assert!(matches!(
            x.union_analysis(&[set(&[0]), set(&[1])]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            x.union_analysis(&[x.full()]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            x.union_analysis(&[PointSet::EMPTY]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(x.union_analysis(&[]).is_err());
    }

    #[test]
    fn largest_balls() {
        let b = q1().largest_forward_balls(set(&[0, 1])).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!((b[0].center, b[0].radius, b[0].ball), (0, 1, set(&[0])));
        assert_eq!((b[1].center, b[1].radius, b[1].ball), (1, 1, set(&[0, 1])));
        assert!(b[0].contained_in_other);
        assert!(!b[1].contained_in_other);

        let b = e2().largest_forward_balls(set(&[0])).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!((b[0].center, b[0].radius, b[0].ball), (0, 1, set(&[0])));

        // {d} = U_d is an open singleton
        let b = e2().largest_forward_balls(set(&[3])).unwrap();
        assert_eq!((b[0].center, b[0].radius, b[0].ball), (3, 1, set(&[3])));

        assert_eq!(
            e2().largest_forward_balls(PointSet::EMPTY).unwrap_err(),
            Error::EmptyOrFullSubset
        );
        assert_eq!(
            e2().largest_forward_balls(e2().full()).unwrap_err(),
            Error::EmptyOrFullSubset
        );
    }
}
