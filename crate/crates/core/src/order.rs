//! Specialization preorder, Kolmogorov quotient, beat points, maps between
//! spaces and products.

use crate::error::{Error, Result};
use crate::point_set::{PointSet, MAX_POINTS};
use crate::space::FinSpace;

/// `x ≤ y ⟺ Ψ(y, x) = 0 ⟺ x ∈ U_y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Preorder {
    // below[y] = {x | x ≤ y}
    below: Vec<PointSet>,
}

impl Preorder {
    pub fn n(&self) -> usize {
        self.below.len()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    /// `{x | x ≤ y}`.
    pub fn down_set(&self, y: usize) -> PointSet {
        self.below[y]
    }

    /// `{y | x ≤ y}`.
    pub fn up_set(&self, x: usize) -> PointSet {
        (0..self.n()).filter(|&y| self.leq(x, y)).collect()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n()).all(|x| self.leq(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n()).all(|z| self.below[z].iter().all(|y| self.below[y].is_subset(self.below[z])))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n()).all(|x| {
            (0..self.n()).all(|y| x == y || !(self.leq(x, y) && self.leq(y, x)))
        })
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly in between, ordered
    /// by `(x, y)`. Meaningful as a Hasse diagram when the order is
    /// antisymmetric.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let lt = |a: usize, b: usize| a != b && self.leq(a, b) && !self.leq(b, a);
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// The T₀ quotient of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientResult {
    pub space: FinSpace,
    /// Class index of each original point.
    pub class_of: Vec<usize>,
    /// Lowest-index member of each class.
    pub representatives: Vec<usize>,
}

impl QuotientResult {
    pub fn members(&self, class: usize) -> PointSet {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == class)
            .map(|(x, _)| x)
            .collect()
    }
}

/// A function between the points of two spaces.
#[derive(Clone, Debug)]
pub struct SpaceMap<'a> {
    domain: &'a FinSpace,
    codomain: &'a FinSpace,
    image: Vec<usize>,
}

impl<'a> SpaceMap<'a> {
    pub fn new(domain: &'a FinSpace, codomain: &'a FinSpace, image: Vec<usize>) -> Result<Self> {
        if image.len() != domain.n() {
            return Err(Error::MapArity {
                expected: domain.n(),
                got: image.len(),
            });
        }
        if let Some(&index) = image.iter().find(|&&y| y >= codomain.n()) {
            return Err(Error::OutOfRange {
                index,
                n: codomain.n(),
            });
        }
        Ok(SpaceMap {
            domain,
            codomain,
            image,
        })
    }

    pub fn identity(space: &'a FinSpace) -> Self {
        SpaceMap {
            domain: space,
            codomain: space,
            image: (0..space.n()).collect(),
        }
    }

    pub fn domain(&self) -> &FinSpace {
        self.domain
    }

    pub fn codomain(&self) -> &FinSpace {
        self.codomain
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `Ψ_X(x,y) = 0 ⟹ Ψ_Y(f x, f y) = 0` for all `x, y`.
    pub fn is_continuous(&self) -> bool {
        let n = self.domain.n();
        (0..n).all(|x| {
            self.domain.min_open(x).iter().all(|y| {
                self.codomain.furtherness(self.apply(x), self.apply(y)) == 0
            })
        })
    }

    /// `Ψ_X(a,b) = Ψ_Y(f a, f b)` for all `a, b`.
    pub fn is_furtherness_preserving(&self) -> bool {
        let n = self.domain.n();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.domain.furtherness(a, b)
                    == self.codomain.furtherness(self.apply(a), self.apply(b))
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// Down and up beat points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BeatPoints {
    pub down: PointSet,
    pub up: PointSet,
}

impl BeatPoints {
    pub fn all(&self) -> PointSet {
        self.down.union(self.up)
    }
}

impl FinSpace {
    pub fn specialization_preorder(&self) -> Preorder {
        Preorder {
            below: (0..self.n())
                .map(|y| (0..self.n()).filter(|&x| self.furtherness(y, x) == 0).collect())
                .collect(),
        }
    }

    /// Identifies points with `Ψ(x,y) = Ψ(y,x) = 0`. Classes are numbered by
    /// their lowest member; a class is labelled by its members joined with
    /// `~`.
    pub fn kolmogorov_quotient(&self) -> QuotientResult {
        let n = self.n();
        let mut class_of = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(x);
            for y in x..n {
                if self.furtherness(x, y) == 0 && self.furtherness(y, x) == 0 {
                    class_of[y] = c;
                }
            }
        }
        let classes = representatives.len();
        let labels: Vec<String> = (0..classes)
            .map(|c| {
                (0..n)
                    .filter(|&x| class_of[x] == c)
                    .map(|x| self.label(x))
                    .collect::<Vec<_>>()
                    .join("~")
            })
            .collect();
        // U_[x] = {[y] | Ψ(x,y) = 0}
        let basis = representatives
            .iter()
            .map(|&r| {
                (0..n)
                    .filter(|&y| self.furtherness(r, y) == 0)
                    .map(|y| class_of[y])
                    .collect()
            })
            .collect();
        QuotientResult {
            space: FinSpace::from_parts(labels, basis),
            class_of,
            representatives,
        }
    }

    /// Beat points read off zero furtherness.
    ///
    /// `x` is a down beat point when exactly one `y ≠ x` has `Ψ(x,y) = 0`
    /// with no `z ∉ {x,y}` satisfying `Ψ(x,z) = Ψ(z,y) = 0`; up beat points
    /// are the dual with arguments swapped. In a T₀ space this says the set
    /// strictly below (above) `x` has a maximum (minimum).
    pub fn beat_points(&self) -> BeatPoints {
        let n = self.n();
        let zero = |a: usize, b: usize| self.furtherness(a, b) == 0;
        let is_beat = |x: usize, rel: &dyn Fn(usize, usize) -> bool| {
            let mut count = 0;
            for y in (0..n).filter(|&y| y != x && rel(x, y)) {
                let between = (0..n).any(|z| z != x && z != y && rel(x, z) && rel(z, y));
                if !between {
                    count += 1;
                }
            }
            count == 1
        };
        let down_rel = |a: usize, b: usize| zero(a, b);
        let up_rel = |a: usize, b: usize| zero(b, a);
        BeatPoints {
            down: (0..n).filter(|&x| is_beat(x, &down_rel)).collect(),
            up: (0..n).filter(|&x| is_beat(x, &up_rel)).collect(),
        }
    }

    /// Quotients to T₀, then strips beat points one at a time (lowest index
    /// first) until none remain.
    pub fn core(&self) -> FinSpace {
        let mut space = self.kolmogorov_quotient().space;
        while let Some(x) = space.beat_points().all().first() {
            let mut keep = space.full();
            keep.remove(x);
            space = space.subspace(keep).expect("a beat point is never the only point");
        }
        space
    }

    /// Whether the space is T₀ and has no beat points.
    pub fn is_minimal_finite(&self) -> bool {
        self.is_t0() && self.beat_points().all().is_empty()
    }
}

/// Product of finitely many spaces. Points are tuples in row-major order
/// (the last factor varies fastest); labels are the coordinates joined by
/// commas.
pub fn product(spaces: &[&FinSpace]) -> Result<FinSpace> {
    if spaces.is_empty() {
        return Err(Error::EmptyInput);
    }
    let total = spaces.iter().try_fold(1usize, |acc, s| acc.checked_mul(s.n()));
    match total {
        Some(t) if t <= MAX_POINTS => {}
        Some(t) => return Err(Error::TooManyPoints(t)),
        None => return Err(Error::TooManyPoints(usize::MAX)),
    }
    let mut labels = vec![String::new()];
    let mut basis = vec![PointSet::EMPTY];
    let mut width = 1;
    for (k, s) in spaces.iter().enumerate() {
        let mut next_labels = Vec::with_capacity(labels.len() * s.n());
        let mut next_basis = Vec::with_capacity(labels.len() * s.n());
        for (l, &u) in labels.iter().zip(&basis) {
            for x in 0..s.n() {
                next_labels.push(if k == 0 {
                    s.label(x).to_string()
                } else {
                    format!("{l},{}", s.label(x))
                });
                let set = if k == 0 {
                    s.min_open(x)
                } else {
                    u.iter()
                        .flat_map(|i| s.min_open(x).iter().map(move |j| i * s.n() + j))
                        .collect()
                };
                next_basis.push(set);
            }
        }
        labels = next_labels;
        basis = next_basis;
        width *= s.n();
    }
    debug_assert_eq!(width, labels.len());
    if spaces.len() > 1 && labels.iter().collect::<std::collections::HashSet<_>>().len() != labels.len() {
        // labels containing commas can collide; fall back to bracketed tuples
        let dims: Vec<usize> = spaces.iter().map(|s| s.n()).collect();
        labels = (0..width)
            .map(|mut idx| {
                let mut parts = vec![String::new(); dims.len()];
                for k in (0..dims.len()).rev() {
                    parts[k] = spaces[k].label(idx % dims[k]).to_string();
                    idx /= dims[k];
                }
                format!("({})", parts.join(","))
            })
            .collect();
    }
    FinSpace::from_minimal_basis(labels, basis)
}

/// Row-major index of a coordinate tuple in [`product`].
pub fn product_index(spaces: &[&FinSpace], coords: &[usize]) -> usize {
    spaces
        .iter()
        .zip(coords)
        .fold(0, |acc, (s, &c)| acc * s.n() + c)
}

/// Number of classes inside `U_x`, i.e. `|U_[x]|` in the quotient.
pub fn quotient_open_size(space: &FinSpace, x: usize) -> u32 {
    space
        .min_open(x)
        .intersection(space.class_representatives())
        .len() as u32
}

/// `Ψ_{X×Y}((a,b),(c,d)) = Ψ_X(a,c)|U_[d]| + Ψ_Y(b,d)|U_[c]| − Ψ_X(a,c)Ψ_Y(b,d)`.
pub fn product_furtherness(
    x: &FinSpace,
    y: &FinSpace,
    (a, b): (usize, usize),
    (c, d): (usize, usize),
) -> u32 {
    let p = x.furtherness(a, c);
    let q = y.furtherness(b, d);
    p * quotient_open_size(y, d) + q * quotient_open_size(x, c) - p * q
}

/// Furtherness on an n-fold product from the factors alone:
/// `|∏ U_[b_i] \ ∏ U_[a_i]|`, counted over quotient classes.
pub fn product_furtherness_nfold(spaces: &[&FinSpace], a: &[usize], b: &[usize]) -> u64 {
    assert_eq!(spaces.len(), a.len());
    assert_eq!(spaces.len(), b.len());
    let mut whole = 1u64;
    let mut shared = 1u64;
    for ((s, &ai), &bi) in spaces.iter().zip(a).zip(b) {
        let reps = s.class_representatives();
        let ub = s.min_open(bi).intersection(reps);
        whole *= ub.len() as u64;
        shared *= ub.intersection(s.min_open(ai)).len() as u64;
    }
    whole - shared
}
