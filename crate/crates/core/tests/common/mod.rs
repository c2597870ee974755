//! Brute-force reference implementations used to cross-check the library.
//!
//! Everything here works on plain `u64` bitmasks and explicit open families,
//! and shares no algorithm with the crate: opens are built as all unions of
//! basis sets, furtherness is a breadth-first search over covers found by
//! comparing every pair of opens, topologies are generated by a naive
//! union/intersection fixpoint.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use finspace::FinSpace;

pub const INF: u32 = u32::MAX;

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn sub(a: u64, b: u64) -> bool {
    a & !b == 0
}

pub fn members(s: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| s >> i & 1 == 1)
}

/// Every family of subsets of an `n`-point set that contains ∅ and X and is
/// closed under pairwise union and intersection. Feasible for `n ≤ 4`.
pub fn family_topologies(n: usize) -> Vec<Vec<u64>> {
    let x = full(n);
    let middle: Vec<u64> = (1..x).collect();
    let mut out = Vec::new();
    for pick in 0u64..(1u64 << middle.len()) {
        let mut fam = vec![0, x];
        fam.extend(members(pick).map(|i| middle[i]));
        let set: BTreeSet<u64> = fam.iter().copied().collect();
        let closed = fam
            .iter()
            .all(|&a| fam.iter().all(|&b| set.contains(&(a | b)) && set.contains(&(a & b))));
        if closed {
            out.push(set.into_iter().collect());
        }
    }
    out
}

/// Whether no two points lie in exactly the same opens.
pub fn family_is_t0(n: usize, opens: &[u64]) -> bool {
    (0..n).all(|a| {
        (a + 1..n).all(|b| opens.iter().any(|&o| (o >> a & 1) != (o >> b & 1)))
    })
}

/// Smallest family containing the generators, ∅ and X, closed under ∪ and ∩.
pub fn generate_fixpoint(n: usize, generators: &[u64]) -> Vec<u64> {
    let mut set: BTreeSet<u64> = generators.iter().copied().collect();
    set.insert(0);
    set.insert(full(n));
    loop {
        let cur: Vec<u64> = set.iter().copied().collect();
        let before = set.len();
        for &a in &cur {
            for &b in &cur {
                set.insert(a | b);
                set.insert(a & b);
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

/// A finite space held as its explicit open family, with furtherness
/// computed by search.
pub struct Naive {
    pub n: usize,
    pub opens: Vec<u64>,
    /// `covers[i]`: indices of the opens covering `opens[i]`.
    pub covers: Vec<Vec<usize>>,
    pub psi: Vec<Vec<u32>>,
}

impl Naive {
    pub fn from_opens(n: usize, opens: &[u64]) -> Self {
        let opens: Vec<u64> = opens.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let covers: Vec<Vec<usize>> = (0..opens.len())
            .map(|i| {
                (0..opens.len())
                    .filter(|&j| {
                        let (u, v) = (opens[i], opens[j]);
                        u != v
                            && sub(u, v)
                            && !opens.iter().any(|&w| w != u && w != v && sub(u, w) && sub(w, v))
                    })
                    .collect()
            })
            .collect();
        let mut me = Naive {
            n,
            opens,
            covers,
            psi: Vec::new(),
        };
        me.psi = (0..n)
            .map(|x| (0..n).map(|y| me.search(x, y)).collect())
            .collect();
        me
    }

    /// Opens of a library space, rebuilt as all unions of its basis sets.
    pub fn of(space: &FinSpace) -> Self {
        let n = space.n();
        let basis: Vec<u64> = space.basis().iter().map(|b| b.bits()).collect();
        let opens: Vec<u64> = (0u64..(1u64 << n))
            .map(|pick| members(pick).fold(0, |acc, i| acc | basis[i]))
            .collect();
        Naive::from_opens(n, &opens)
    }

    pub fn min_open(&self, x: usize) -> u64 {
        self.opens
            .iter()
            .filter(|&&o| o >> x & 1 == 1)
            .fold(full(self.n), |acc, &o| acc & o)
    }

    pub fn is_open(&self, s: u64) -> bool {
        self.opens.contains(&s)
    }

    pub fn is_closed(&self, s: u64) -> bool {
        self.is_open(full(self.n) & !s)
    }

    pub fn interior(&self, a: u64) -> u64 {
        self.opens.iter().filter(|&&o| sub(o, a)).fold(0, |acc, &o| acc | o)
    }

    pub fn closure(&self, a: u64) -> u64 {
        let x = full(self.n);
        x & !self.interior(x & !a)
    }

    pub fn boundary(&self, a: u64) -> u64 {
        self.closure(a) & !self.interior(a)
    }

    /// Fewest cover steps from U_x to an open containing y.
    fn search(&self, x: usize, y: usize) -> u32 {
        let start = self.opens.iter().position(|&o| o == self.min_open(x)).unwrap();
        let mut dist = vec![INF; self.opens.len()];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            if self.opens[i] >> y & 1 == 1 {
                return dist[i];
            }
            for &j in &self.covers[i] {
                if dist[j] == INF {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        unreachable!("X contains every point")
    }

    pub fn to_set(&self, x: usize, s: u64) -> u32 {
        members(s).map(|y| self.psi[x][y]).min().unwrap_or(INF)
    }

    /// Argmax of `Ψ(a, target)` over `a ∈ within`.
    pub fn argmax(&self, within: u64, target: u64) -> (u64, u32) {
        let best = members(within).map(|a| self.to_set(a, target)).max();
        match best {
            None => (0, INF),
            Some(b) => (
                members(within).filter(|&a| self.to_set(a, target) == b).fold(0, |acc, a| acc | 1 << a),
                b,
            ),
        }
    }

    /// (center, radius) from the definitions.
    pub fn region(&self, a: u64) -> (u64, u32) {
        self.argmax(a, self.boundary(a))
    }

    pub fn quasi(&self, a: u64) -> (u64, u32) {
        self.argmax(a, full(self.n) & !a)
    }

    pub fn forward_ball(&self, x: usize, r: u32) -> u64 {
        (0..self.n).filter(|&y| self.psi[x][y] < r).fold(0, |acc, y| acc | 1 << y)
    }

    pub fn backward_ball(&self, x: usize, r: u32) -> u64 {
        (0..self.n).filter(|&y| self.psi[y][x] < r).fold(0, |acc, y| acc | 1 << y)
    }

    /// Opens of the opposite topology: complements of the opens.
    pub fn opposite_opens(&self) -> Vec<u64> {
        let x = full(self.n);
        let mut v: Vec<u64> = self.opens.iter().map(|&o| x & !o).collect();
        v.sort_unstable();
        v
    }

    /// Every maximal chain of opens starting at U_x, each step a cover.
    pub fn maximal_chains(&self, x: usize) -> Vec<Vec<u64>> {
        let start = self.opens.iter().position(|&o| o == self.min_open(x)).unwrap();
        let mut out = Vec::new();
        let mut path = vec![start];
        self.walk(&mut path, &mut out);
        out
    }

    fn walk(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<u64>>) {
        let last = *path.last().unwrap();
        if self.covers[last].is_empty() {
            out.push(path.iter().map(|&i| self.opens[i]).collect());
            return;
        }
        for &j in &self.covers[last] {
            path.push(j);
            self.walk(path, out);
            path.pop();
        }
    }

    /// Opens of the subspace on `y`, re-indexed to `0..|y|`.
    pub fn subspace(&self, y: u64) -> Naive {
        let pts: Vec<usize> = members(y).collect();
        let squeeze = |s: u64| -> u64 {
            pts.iter()
                .enumerate()
                .filter(|&(_, &p)| s >> p & 1 == 1)
                .fold(0, |acc, (i, _)| acc | 1 << i)
        };
        let opens: Vec<u64> = self.opens.iter().map(|&o| squeeze(o & y)).collect();
        Naive::from_opens(pts.len(), &opens)
    }
}

/// Re-indexes `a ⊆ y` into the subspace numbering of `y`.
pub fn squeeze(y: u64, a: u64) -> u64 {
    members(y)
        .enumerate()
        .filter(|&(_, p)| a >> p & 1 == 1)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Product opens by definition: a set is open iff it is the union of the
/// open rectangles it contains. Points are numbered row-major.
pub fn product_opens(x: &Naive, y: &Naive) -> Vec<u64> {
    let (n, m) = (x.n, y.n);
    let rect = |u: u64, v: u64| -> u64 {
        let mut s = 0;
        for i in members(u) {
            for j in members(v) {
                s |= 1 << (i * m + j);
            }
        }
        s
    };
    let rects: Vec<u64> = x
        .opens
        .iter()
        .flat_map(|&u| y.opens.iter().map(move |&v| (u, v)))
        .map(|(u, v)| rect(u, v))
        .collect();
    (0u64..(1u64 << (n * m)))
        .filter(|&s| rects.iter().filter(|&&r| sub(r, s)).fold(0, |acc, &r| acc | r) == s)
        .collect()
}

/// Continuity by definition: preimages of opens are open.
pub fn continuous(dom: &Naive, cod: &Naive, f: &[usize]) -> bool {
    cod.opens.iter().all(|&v| {
        let pre = (0..dom.n).filter(|&p| v >> f[p] & 1 == 1).fold(0, |acc, p| acc | 1 << p);
        dom.is_open(pre)
    })
}

/// All maps from `n` points to `m` points.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let total = m.pow(n as u32);
    (0..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = code % m;
                    code /= m;
                    d
                })
                .collect()
        })
        .collect()
}

/// Specialization order of a T0 space from its opens: `a ≤ b` iff every open
/// containing `b` contains `a`.
pub fn leq(t: &Naive, a: usize, b: usize) -> bool {
    t.opens.iter().all(|&o| o >> b & 1 == 0 || o >> a & 1 == 1)
}

/// T0 and no beat points, read off the order directly: a point is a down
/// (up) beat point when the points strictly below (above) it have a maximum
/// (minimum).
pub fn is_minimal_naive(t: &Naive) -> bool {
    let n = t.n;
    if !family_is_t0(n, &t.opens) {
        return false;
    }
    (0..n).all(|x| {
        let below: Vec<usize> = (0..n).filter(|&y| y != x && leq(t, y, x)).collect();
        let above: Vec<usize> = (0..n).filter(|&y| y != x && leq(t, x, y)).collect();
        let has_max = below.iter().any(|&m| below.iter().all(|&y| leq(t, y, m)));
        let has_min = above.iter().any(|&m| above.iter().all(|&y| leq(t, m, y)));
        !has_max && !has_min
    })
}
