//! Exhaustive and sampled property checking.
//!
//! Each [`Property`] is a pure check over one space or a pair of spaces. The
//! runner feeds it every enumerated topology up to a size bound (plus seeded
//! random samples) and reports the first failure in corpus order, shipping
//! the failing spaces as documents so the failure can be replayed.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::balls::{BallQuery, Direction};
use crate::dot::{export_dot, DotMode};
use crate::enumerate::{all_spaces_up_to, enumerate_topologies, random_space};
use crate::error::{Error, Result};
use crate::furtherness::FurtherValue;
use crate::io::{parse_space, serialize_space, SpaceDocument};
use crate::order::{product, product_furtherness, product_furtherness_nfold, product_index, SpaceMap};
use crate::point_set::{subsets_of, PointSet};
use crate::regions::UnionCase;
use crate::space::{FinSpace, OpenFamily};

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// What a property consumes.
#[derive(Clone, Copy)]
pub enum Scope {
    /// Every enumerated space up to `--max-n`, then the random samples.
    Spaces(fn(&FinSpace) -> Check),
    /// Enumerated spaces with at most the given number of points.
    SmallSpaces(usize, fn(&FinSpace) -> Check),
    /// Every ordered pair of enumerated spaces with at most the given number
    /// of points each.
    Pairs(usize, fn(&FinSpace, &FinSpace) -> Check),
    /// Every enumerated space with exactly the given number of points.
    ExactSize(usize, fn(&FinSpace) -> Check),
}

#[derive(Clone, Copy)]
pub struct Property {
    pub name: &'static str,
    pub description: &'static str,
    pub scope: Scope,
}

impl Property {
    /// Runs the check on the given spaces (one, or two for pair properties).
    pub fn check(&self, spaces: &[FinSpace]) -> Check {
        match (self.scope, spaces) {
            (Scope::Spaces(f) | Scope::SmallSpaces(_, f) | Scope::ExactSize(_, f), [x]) => f(x),
            (Scope::Pairs(_, f), [x, y]) => f(x, y),
            _ => Err(format!("`{}` got {} spaces", self.name, spaces.len())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub samples: usize,
    pub sample_n: usize,
    pub seed: u64,
    pub prop: Option<String>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 4,
            samples: 0,
            sample_n: 6,
            seed: 1,
            prop: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub spaces: Vec<SpaceDocument>,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub property: String,
    pub spaces_checked: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub wall_ms: f64,
}

/// Parses counterexample documents and runs the property on them again.
pub fn replay(property: &Property, documents: &[String]) -> Check {
    let spaces = documents
        .iter()
        .map(|d| parse_space(d).map_err(|e| e.to_string()))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    property.check(&spaces)
}

/// Runs one property over a corpus of cases and reports the first failure in
/// corpus order.
pub fn run_property(property: &Property, cases: &[Vec<&FinSpace>]) -> VerifyReport {
    let start = Instant::now();
    let failure = cases.par_iter().find_map_first(|case| {
        let owned: Vec<FinSpace> = case.iter().map(|&s| s.clone()).collect();
        property.check(&owned).err().map(|witness| Counterexample {
            spaces: owned.iter().map(SpaceDocument::from_space).collect(),
            witness,
        })
    });
    VerifyReport {
        property: property.name.to_string(),
        spaces_checked: cases.len(),
        passed: failure.is_none(),
        counterexample: failure,
        wall_ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}

/// Runs the selected properties.
pub fn run(config: &VerifyConfig) -> Result<Vec<VerifyReport>> {
    let props: Vec<Property> = match &config.prop {
        Some(name) => vec![find_property(name)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown property `{name}`")))?],
        None => properties(),
    };
    let enumerated = all_spaces_up_to(config.max_n.min(5), false)?;
    let samples: Vec<FinSpace> = (0..config.samples as u64)
        .map(|i| random_space(config.sample_n, config.seed.wrapping_add(i)))
        .collect::<Result<_>>()?;
    let mut exact_cache: Vec<(usize, Vec<FinSpace>)> = Vec::new();
    let mut reports = Vec::new();
    for p in &props {
        let cases: Vec<Vec<&FinSpace>> = match p.scope {
            Scope::Spaces(_) => enumerated.iter().chain(&samples).map(|s| vec![s]).collect(),
            Scope::SmallSpaces(k, _) => enumerated
                .iter()
                .filter(|s| s.n() <= k)
                .map(|s| vec![s])
                .collect(),
            Scope::Pairs(k, _) => {
                let small: Vec<&FinSpace> = enumerated.iter().filter(|s| s.n() <= k).collect();
                small
                    .iter()
                    .flat_map(|&a| small.iter().map(move |&b| vec![a, b]))
                    .collect()
            }
            Scope::ExactSize(k, _) => {
                if !exact_cache.iter().any(|(n, _)| *n == k) {
                    exact_cache.push((k, enumerate_topologies(k, false)?.collect()));
                }
                Vec::new()
            }
        };
        let cases = if let Scope::ExactSize(k, _) = p.scope {
            let spaces = &exact_cache.iter().find(|(n, _)| *n == k).unwrap().1;
            spaces.iter().map(|s| vec![s]).collect()
        } else {
            cases
        };
        reports.push(run_property(p, &cases));
    }
    Ok(reports)
}

pub fn find_property(name: &str) -> Option<Property> {
    properties().into_iter().find(|p| p.name == name)
}

/// The full suite, in reporting order.
pub fn properties() -> Vec<Property> {
    use Scope::*;
    vec![
        Property {
            name: "basis_invariants",
            description: "x ∈ U_x, and y ∈ U_x implies U_y ⊆ U_x",
            scope: Spaces(basis_invariants),
        },
        Property {
            name: "open_family",
            description: "opens form a topology; is_open, membership and minimal_open agree",
            scope: Spaces(open_family_checks),
        },
        Property {
            name: "interior_closure_duality",
            description: "interior(A) = X \\ closure(X \\ A)",
            scope: Spaces(interior_closure_duality),
        },
        Property {
            name: "opposite",
            description: "opposite is an involution, complements the opens, preserves T0",
            scope: Spaces(opposite_checks),
        },
        Property {
            name: "open_sets_roundtrip",
            description: "rebuilding from the open family gives the same minimal basis",
            scope: Spaces(open_sets_roundtrip),
        },
        Property {
            name: "oracle_equivalence",
            description: "closed-form furtherness equals the cover-graph search",
            scope: Spaces(oracle_equivalence),
        },
        Property {
            name: "furtherness_axioms",
            description: "zero diagonal, triangle inequality, T0 criterion, range bound, zero set is U_x",
            scope: Spaces(furtherness_axioms),
        },
        Property {
            name: "chain_theorems",
            description: "hull chains exist at Ψ(x,y); y first appears at Ψ(x,y) only in U_x ∪ U_y; single-point steps in T0",
            scope: Spaces(chain_theorems),
        },
        Property {
            name: "matrix_theorems",
            description: "row dominance, distinct rows/columns, extreme points, zero-count bound",
            scope: Spaces(matrix_theorems),
        },
        Property {
            name: "preorder",
            description: "specialization order is a preorder, antisymmetric iff T0",
            scope: Spaces(preorder_checks),
        },
        Property {
            name: "quotient",
            description: "quotient is T0, idempotent, and preserves furtherness",
            scope: Spaces(quotient_checks),
        },
        Property {
            name: "beat_points_and_core",
            description: "beat points match extremal strict neighbourhoods in T0 spaces; cores are minimal",
            scope: Spaces(beat_point_checks),
        },
        Property {
            name: "minimal_rigidity",
            description: "continuous self-maps of a minimal space with Ψ(f(x),x)=0 are the identity",
            scope: SmallSpaces(5, minimal_rigidity),
        },
        Property {
            name: "product_formula",
            description: "closed-form product furtherness equals direct computation",
            scope: Pairs(3, product_formula),
        },
        Property {
            name: "nfold_product",
            description: "triple products of 2-point spaces follow the class-cardinality formula",
            scope: ExactSize(2, nfold_product),
        },
        Property {
            name: "map_predicates",
            description: "furtherness continuity criterion equals preimage continuity; preserving maps are continuous",
            scope: Pairs(3, map_predicates),
        },
        Property {
            name: "ball_topologies",
            description: "forward balls generate T, backward balls generate T^op, both families are bases",
            scope: Spaces(ball_topologies),
        },
        Property {
            name: "symmetrized",
            description: "max-symmetrization is a pseudo-metric; its topology contains T and T^op, is discrete for T0, disconnected unless T is indiscrete",
            scope: Spaces(symmetrized_checks),
        },
        Property {
            name: "symmetrized_smallest_join",
            description: "the symmetrized topology lies in every topology containing T and T^op",
            scope: SmallSpaces(3, symmetrized_smallest_join),
        },
        Property {
            name: "set_furtherness",
            description: "Ψ(a,A) = Ψ(a,closure A); Ψ(A,B)=0 forces U_A ∩ U_B ≠ ∅",
            scope: Spaces(set_furtherness_checks),
        },
        Property {
            name: "region_theorems",
            description: "center/radius behaviour for empty interior, nonempty interior, clopen sets, monotonicity",
            scope: Spaces(region_theorems),
        },
        Property {
            name: "subspace_monotonicity",
            description: "rad_X(A) ≤ rad_Y(A) for A ⊆ Y ⊆ X",
            scope: Spaces(subspace_monotonicity),
        },
        Property {
            name: "subspace_monotonicity_open",
            description: "rad_X(A) ≤ rad_Y(A) for A ⊆ Y ⊆ X with Y open",
            scope: Spaces(subspace_monotonicity_open),
        },
        Property {
            name: "union_pairs",
            description: "unions of two separated nonclopen sets follow the predicted center/radius",
            scope: Spaces(union_pairs),
        },
        Property {
            name: "union_triples",
            description: "unions of three pairwise separated nonclopen sets follow the predicted center/radius",
            scope: ExactSize(5, union_triples),
        },
        Property {
            name: "quasi_balls",
            description: "B⁺(x,n) ⊆ A iff n ≤ Ψ(x,Aᶜ); largest contained balls sit on the quasi-center",
            scope: Spaces(quasi_balls),
        },
        Property {
            name: "serialization_roundtrip",
            description: "parse(serialize(X)) = X",
            scope: Spaces(serialization_roundtrip),
        },
        Property {
            name: "dot_stable",
            description: "DOT output is identical across runs",
            scope: SmallSpaces(4, dot_stable),
        },
    ]
}

fn all_subsets(x: &FinSpace) -> impl Iterator<Item = PointSet> {
    subsets_of(x.full())
}

fn space_seed(x: &FinSpace) -> u64 {
    let mut h = DefaultHasher::new();
    x.basis().hash(&mut h);
    h.finish()
}

fn basis_invariants(x: &FinSpace) -> Check {
    for p in 0..x.n() {
        ensure!(x.min_open(p).contains(p), "{} ∉ U_{}", x.label(p), x.label(p));
        for q in x.min_open(p) {
            ensure!(
                x.min_open(q).is_subset(x.min_open(p)),
                "{} ∈ U_{} but U_{} ⊄ U_{}",
                x.label(q),
                x.label(p),
                x.label(q),
                x.label(p)
            );
        }
    }
    Ok(())
}

fn open_family_checks(x: &FinSpace) -> Check {
    let fam = x.open_family();
    ensure!(fam.is_topology(), "open family is not a topology");
    for s in all_subsets(x) {
        let member = fam.contains(s);
        ensure!(x.is_open(s) == member, "is_open disagrees with the family on {}", x.format_set(s));
        if !s.is_empty() {
            ensure!(
                (x.minimal_open(s).unwrap() == s) == member,
                "minimal_open({}) disagrees with openness",
                x.format_set(s)
            );
        }
    }
    Ok(())
}

fn interior_closure_duality(x: &FinSpace) -> Check {
    let n = x.n();
    for a in all_subsets(x) {
        ensure!(
            x.interior(a) == x.closure(a.complement(n)).complement(n),
            "duality fails on {}",
            x.format_set(a)
        );
    }
    Ok(())
}

fn opposite_checks(x: &FinSpace) -> Check {
    let op = x.opposite();
    ensure!(op.opposite() == *x, "opposite is not an involution");
    let complements = OpenFamily::new(x.n(), x.open_family().iter().map(|s| s.complement(x.n())));
    ensure!(op.open_family() == complements, "opposite opens are not the complements");
    ensure!(op.is_t0() == x.is_t0(), "opposite changes T0");
    Ok(())
}

fn open_sets_roundtrip(x: &FinSpace) -> Check {
    let fam = x.open_family();
    let rebuilt = FinSpace::from_open_sets(x.labels().iter().cloned(), fam.sets())
        .map_err(|e| format!("rebuild failed: {e}"))?;
    ensure!(rebuilt == *x, "rebuilt space differs");
    Ok(())
}

fn oracle_equivalence(x: &FinSpace) -> Check {
    for p in 0..x.n() {
        for q in 0..x.n() {
            let fast = x.furtherness(p, q);
            let (slow, _) = x.furtherness_oracle(p, q);
            ensure!(
                fast == slow,
                "Ψ({},{}): formula {fast}, search {slow}",
                x.label(p),
                x.label(q)
            );
        }
    }
    Ok(())
}

fn furtherness_axioms(x: &FinSpace) -> Check {
    let n = x.n();
    let f = |a, b| x.furtherness(a, b);
    let mut separates = true;
    for p in 0..n {
        ensure!(f(p, p) == 0, "Ψ({0},{0}) ≠ 0", x.label(p));
        let zeros: PointSet = (0..n).filter(|&q| f(p, q) == 0).collect();
        ensure!(zeros == x.min_open(p), "zero set of {} is not U_x", x.label(p));
        for q in 0..n {
            ensure!(f(p, q) < n as u32, "Ψ({},{}) ≥ n", x.label(p), x.label(q));
            ensure!(
                (f(p, q) == 0) == x.min_open(q).is_subset(x.min_open(p)),
                "Ψ({},{})=0 does not match U_y ⊆ U_x",
                x.label(p),
                x.label(q)
            );
            if p != q && f(p, q) == 0 && f(q, p) == 0 {
                separates = false;
            }
            for r in 0..n {
                ensure!(
                    f(p, q) <= f(p, r) + f(r, q),
                    "triangle fails for {},{},{}",
                    x.label(p),
                    x.label(q),
                    x.label(r)
                );
            }
        }
    }
    ensure!(separates == x.is_t0(), "T0 criterion fails");
    Ok(())
}

fn chain_theorems(x: &FinSpace) -> Check {
    let t0 = x.is_t0();
    for p in 0..x.n() {
        let sequences = x.nested_sequences(p);
        for s in &sequences {
            ensure!(s.chain[0] == x.min_open(p), "sequence does not start at U_x");
            ensure!(s.last() == x.full(), "maximal sequence does not reach X");
            for w in s.chain.windows(2) {
                ensure!(w[0].is_proper_subset(w[1]), "sequence is not strictly increasing");
                if t0 {
                    ensure!(
                        w[1].len() == w[0].len() + 1,
                        "T0 cover step {} ⊂ {} adds more than one point",
                        x.format_set(w[0]),
                        x.format_set(w[1])
                    );
                }
            }
        }
        for q in 0..x.n() {
            let k = x.furtherness(p, q) as usize;
            let hull = x.min_open(p).union(x.min_open(q));
            let by_sequences = sequences
                .iter()
                .filter_map(|s| s.position_of(q))
                .min()
                .expect("at least one sequence");
            ensure!(
                by_sequences == k,
                "least appearance of {} around {} is {by_sequences}, expected {k}",
                x.label(q),
                x.label(p)
            );
            let witness = x.chain_to(p, hull);
            ensure!(
                witness.as_ref().map(|w| w.steps()) == Some(k),
                "no chain reaching U_x ∪ U_y in Ψ({},{}) steps",
                x.label(p),
                x.label(q)
            );
            for s in &sequences {
                if let Some(set) = s.chain.get(k) {
                    if set.contains(q) {
                        ensure!(
                            *set == hull,
                            "{} at position {k} around {} is {} not U_x ∪ U_y",
                            x.label(q),
                            x.label(p),
                            x.format_set(*set)
                        );
                    }
                }
            }
            let (_, oracle) = x.furtherness_oracle(p, q);
            ensure!(oracle.last() == hull, "search witness does not end at U_x ∪ U_y");
        }
    }
    Ok(())
}

fn matrix_theorems(x: &FinSpace) -> Check {
    let m = x.furtherness_matrix();
    let r = m.report();
    let n = x.n();
    for p in 0..n {
        for q in 0..n {
            ensure!(
                m.row_dominates(p, q) == (m.get(p, q) == 0),
                "row dominance fails for {},{}",
                x.label(p),
                x.label(q)
            );
            ensure!(
                m.get(q, p) as usize <= r.points[p].row_zero_count,
                "Ψ({},{}) exceeds zero count of row {}",
                x.label(q),
                x.label(p),
                x.label(p)
            );
        }
        ensure!(r.points[p].row_zeros == x.min_open(p), "row zeros of {} differ from U_x", x.label(p));
        ensure!(
            r.points[p].column_zeros == x.closure(PointSet::singleton(p)),
            "column zeros of {} differ from its closure",
            x.label(p)
        );
        ensure!(
            r.points[p].open_singleton == x.is_open(PointSet::singleton(p)),
            "open-singleton flag wrong for {}",
            x.label(p)
        );
        if x.is_t0() {
            let is_max = (0..n).all(|y| x.min_open(p).contains(y));
            let is_min = (0..n).all(|y| x.min_open(y).contains(p));
            ensure!(r.points[p].maximum == is_max, "maximum flag wrong for {}", x.label(p));
            ensure!(r.points[p].minimum == is_min, "minimum flag wrong for {}", x.label(p));
        }
    }
    let max_zero = r.points.iter().map(|p| p.row_zero_count).max().unwrap_or(0);
    ensure!(m.max_entry() as usize <= max_zero, "max entry exceeds max zero count");
    ensure!(r.rows_distinct == r.columns_distinct, "rows and columns disagree on distinctness");
    ensure!(r.rows_distinct == x.is_t0(), "distinct rows do not match T0");
    Ok(())
}

fn preorder_checks(x: &FinSpace) -> Check {
    let p = x.specialization_preorder();
    ensure!(p.is_reflexive(), "not reflexive");
    ensure!(p.is_transitive(), "not transitive");
    ensure!(p.is_antisymmetric() == x.is_t0(), "antisymmetry does not match T0");
    for a in 0..x.n() {
        for b in 0..x.n() {
            ensure!(p.leq(a, b) == x.min_open(b).contains(a), "x ≤ y does not match x ∈ U_y");
        }
    }
    Ok(())
}

fn quotient_checks(x: &FinSpace) -> Check {
    let q = x.kolmogorov_quotient();
    ensure!(q.space.is_t0(), "quotient is not T0");
    let again = q.space.kolmogorov_quotient();
    ensure!(again.space == q.space, "quotient is not idempotent");
    for a in 0..x.n() {
        for b in 0..x.n() {
            let same = q.class_of[a] == q.class_of[b];
            ensure!(
                same == (x.furtherness(a, b) == 0 && x.furtherness(b, a) == 0),
                "class criterion fails"
            );
            ensure!(
                q.space.furtherness(q.class_of[a], q.class_of[b]) == x.furtherness(a, b),
                "quotient changes Ψ({},{})",
                x.label(a),
                x.label(b)
            );
        }
    }
    Ok(())
}

fn beat_point_checks(x: &FinSpace) -> Check {
    let n = x.n();
    if x.is_t0() {
        let beats = x.beat_points();
        for p in 0..n {
            let mut below = x.min_open(p);
            below.remove(p);
            let down = below.iter().any(|m| below.is_subset(x.min_open(m)));
            let mut above = x.closure(PointSet::singleton(p));
            above.remove(p);
            let up = above
                .iter()
                .any(|m| above.is_subset(x.closure(PointSet::singleton(m))));
            ensure!(beats.down.contains(p) == down, "down beat flag wrong for {}", x.label(p));
            ensure!(beats.up.contains(p) == up, "up beat flag wrong for {}", x.label(p));
        }
    }
    let core = x.core();
    ensure!(core.is_t0(), "core is not T0");
    ensure!(core.beat_points().all().is_empty(), "core has beat points");
    Ok(())
}

/// Every function from `n` points to `m` points, as image vectors.
fn all_maps(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (m as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let d = (code % m as u64) as usize;
                code /= m as u64;
                d
            })
            .collect()
    })
}

fn minimal_rigidity(x: &FinSpace) -> Check {
    if !x.is_minimal_finite() {
        return Ok(());
    }
    for image in all_maps(x.n(), x.n()) {
        let f = SpaceMap::new(x, x, image).expect("valid map");
        let below = (0..x.n()).all(|p| x.furtherness(f.apply(p), p) == 0);
        if below && f.is_continuous() {
            ensure!(f.is_identity(), "non-identity map {:?} satisfies the hypothesis", f.image());
        }
    }
    Ok(())
}

fn product_formula(x: &FinSpace, y: &FinSpace) -> Check {
    let p = product(&[x, y]).map_err(|e| e.to_string())?;
    for a in 0..x.n() {
        for b in 0..y.n() {
            for c in 0..x.n() {
                for d in 0..y.n() {
                    let i = product_index(&[x, y], &[a, b]);
                    let j = product_index(&[x, y], &[c, d]);
                    let closed = product_furtherness(x, y, (a, b), (c, d));
                    let direct = p.furtherness(i, j);
                    ensure!(
                        closed == direct,
                        "(({},{}),({},{})): formula {closed}, direct {direct}",
                        x.label(a),
                        y.label(b),
                        x.label(c),
                        y.label(d)
                    );
                }
            }
        }
    }
    Ok(())
}

fn nfold_product(x: &FinSpace) -> Check {
    let twos: Vec<FinSpace> = enumerate_topologies(2, false).map_err(|e| e.to_string())?.collect();
    for y in &twos {
        for z in &twos {
            let factors = [x, y, z];
            let p = product(&factors).map_err(|e| e.to_string())?;
            let q = p.kolmogorov_quotient();
            for i in 0..p.n() {
                for j in 0..p.n() {
                    let ci = [i / 4, i / 2 % 2, i % 2];
                    let cj = [j / 4, j / 2 % 2, j % 2];
                    let closed = product_furtherness_nfold(&factors, &ci, &cj);
                    // |U_[b] \ U_[a]| on the quotient of the product
                    let (qa, qb) = (q.class_of[i], q.class_of[j]);
                    let on_quotient =
                        q.space.min_open(qb).difference(q.space.min_open(qa)).len() as u64;
                    ensure!(
                        closed == on_quotient && closed == p.furtherness(i, j) as u64,
                        "triple product formula fails at {i},{j}"
                    );
                }
            }
        }
    }
    Ok(())
}

/// Continuity by definition: the preimage of every open set is open.
pub fn is_continuous_by_preimages(f: &SpaceMap) -> bool {
    f.codomain().open_family().iter().all(|v| {
        let pre: PointSet = (0..f.domain().n()).filter(|&p| v.contains(f.apply(p))).collect();
        f.domain().is_open(pre)
    })
}

fn map_predicates(x: &FinSpace, y: &FinSpace) -> Check {
    for image in all_maps(x.n(), y.n()) {
        let f = SpaceMap::new(x, y, image).expect("valid map");
        let by_furtherness = f.is_continuous();
        ensure!(
            by_furtherness == is_continuous_by_preimages(&f),
            "continuity criteria disagree on {:?}",
            f.image()
        );
        if f.is_furtherness_preserving() {
            ensure!(by_furtherness, "furtherness-preserving map {:?} is not continuous", f.image());
        }
    }
    Ok(())
}

fn is_basis(family: &[PointSet]) -> bool {
    family.iter().all(|&b1| {
        family.iter().all(|&b2| {
            let meet = b1.intersection(b2);
            meet.iter()
                .all(|p| family.iter().any(|&b3| b3.contains(p) && b3.is_subset(meet)))
        })
    })
}

fn ball_topologies(x: &FinSpace) -> Check {
    ensure!(
        x.ball_topology(Direction::Forward) == x.open_family(),
        "forward balls do not generate the topology"
    );
    ensure!(
        x.ball_topology(Direction::Backward) == x.opposite().open_family(),
        "backward balls do not generate the opposite topology"
    );
    ensure!(is_basis(&x.balls(Direction::Forward)), "forward balls are not a basis");
    ensure!(is_basis(&x.balls(Direction::Backward)), "backward balls are not a basis");
    for p in 0..x.n() {
        ensure!(
            x.ball(BallQuery::forward(p, 1)).unwrap() == x.min_open(p),
            "B⁺(x,1) ≠ U_x"
        );
        ensure!(
            x.ball(BallQuery::backward(p, 1)).unwrap() == x.closure(PointSet::singleton(p)),
            "B⁻(x,1) ≠ closure of x"
        );
    }
    Ok(())
}

fn symmetrized_checks(x: &FinSpace) -> Check {
    let n = x.n();
    for a in 0..n {
        ensure!(x.symmetrized_furtherness(a, a) == 0, "nonzero diagonal");
        for b in 0..n {
            let d = x.symmetrized_furtherness(a, b);
            ensure!(d == x.symmetrized_furtherness(b, a), "not symmetric");
            for c in 0..n {
                ensure!(
                    d <= x.symmetrized_furtherness(a, c) + x.symmetrized_furtherness(c, b),
                    "triangle fails"
                );
            }
        }
    }
    let sym = x.symmetrized_topology();
    ensure!(x.open_family().is_subfamily_of(&sym), "T not contained");
    ensure!(x.opposite().open_family().is_subfamily_of(&sym), "T^op not contained");
    if x.is_t0() {
        ensure!(sym.len() == 1usize << n, "T0 space but symmetrized topology is not discrete");
    }
    // a proper nonempty open of T is clopen in the join; indiscrete T has none
    if x.kolmogorov_quotient().representatives.len() > 1 {
        let full = x.full();
        let clopen = sym.iter().any(|s| {
            !s.is_empty() && s != full && sym.contains(s.complement(n))
        });
        ensure!(clopen, "no proper nonempty clopen set");
    }
    Ok(())
}

fn symmetrized_smallest_join(x: &FinSpace) -> Check {
    let sym = x.symmetrized_topology();
    let t = x.open_family();
    let top = x.opposite().open_family();
    for other in enumerate_topologies(x.n(), false).map_err(|e| e.to_string())? {
        let fam = other.open_family();
        if t.is_subfamily_of(&fam) && top.is_subfamily_of(&fam) {
            ensure!(sym.is_subfamily_of(&fam), "a coarser common refinement exists");
        }
    }
    Ok(())
}

fn set_furtherness_checks(x: &FinSpace) -> Check {
    for a in all_subsets(x) {
        for p in 0..x.n() {
            ensure!(
                x.furtherness_to_set(p, a) == x.furtherness_to_set(p, x.closure(a)),
                "Ψ({},{}) ≠ Ψ to the closure",
                x.label(p),
                x.format_set(a)
            );
        }
        if a.is_empty() {
            continue;
        }
        for b in all_subsets(x).filter(|b| !b.is_empty()) {
            if x.set_furtherness(a, b) == FurtherValue::Finite(0) {
                let ua = x.minimal_open(a).unwrap();
                let ub = x.minimal_open(b).unwrap();
                ensure!(
                    ua.intersects(ub),
                    "Ψ({},{}) = 0 but U_A and U_B are disjoint",
                    x.format_set(a),
                    x.format_set(b)
                );
            }
        }
    }
    Ok(())
}

fn region_theorems(x: &FinSpace) -> Check {
    use FurtherValue::{Finite, Infinity};
    for a in all_subsets(x) {
        let r = x.region_report(a);
        let name = x.format_set(a);
        ensure!(r.center.is_subset(a), "center of {name} leaves the set");
        ensure!(a.is_empty() || !r.center.is_empty(), "empty center for {name}");
        for c in r.center {
            ensure!(x.furtherness_to_set(c, r.boundary) == r.radius, "center point off radius in {name}");
        }
        ensure!((r.radius == Infinity) == x.is_clopen(a), "infinite radius ≠ clopen for {name}");
        if !a.is_empty() {
            ensure!(
                (r.radius == Finite(0)) == r.interior.is_empty(),
                "zero radius ≠ empty interior for {name}"
            );
            if r.interior.is_empty() {
                ensure!(r.center == a, "empty interior but center ≠ A for {name}");
            } else {
                ensure!(r.center.is_subset(r.interior), "center outside interior for {name}");
                ensure!(r.radius > Finite(0), "nonpositive radius for {name}");
            }
            if x.is_open(a) {
                ensure!(r.radius > Finite(0), "open set {name} has zero radius");
            }
        }
        ensure!(r.radius <= x.radius(r.interior), "rad(A) > rad(interior) for {name}");
        ensure!(r.radius <= x.radius(x.closure(a)), "rad(A) > rad(closure) for {name}");
    }
    Ok(())
}

fn reindex(y: PointSet, a: PointSet) -> PointSet {
    y.iter()
        .enumerate()
        .filter(|&(_, old)| a.contains(old))
        .map(|(new, _)| new)
        .collect()
}

fn subspace_monotonicity(x: &FinSpace) -> Check {
    monotone_over(x, |_| true)
}

// On an open Y the minimal open sets, hence Ψ, are unchanged and the
// boundary can only shrink.
fn subspace_monotonicity_open(x: &FinSpace) -> Check {
    monotone_over(x, |y| x.is_open(y))
}

fn monotone_over(x: &FinSpace, keep: impl Fn(PointSet) -> bool) -> Check {
    for y in all_subsets(x).filter(|&y| !y.is_empty() && keep(y)) {
        let sub = x.subspace(y).map_err(|e| e.to_string())?;
        for a in subsets_of(y) {
            let in_x = x.radius(a);
            let in_y = sub.radius(reindex(y, a));
            ensure!(
                in_x <= in_y,
                "rad_X({}) = {in_x} > rad_Y = {in_y} for Y = {}",
                x.format_set(a),
                x.format_set(y)
            );
        }
    }
    Ok(())
}

fn qualifying_subsets(x: &FinSpace) -> Vec<PointSet> {
    all_subsets(x)
        .filter(|&s| !s.is_empty() && !x.is_clopen(s))
        .collect()
}

fn check_union(x: &FinSpace, sets: &[PointSet]) -> Check {
    let u = x.union_analysis(sets).map_err(|e| e.to_string())?;
    let names: Vec<String> = sets.iter().map(|&s| x.format_set(s)).collect();
    ensure!(
        u.direct.radius <= u.max_radius,
        "union of {} has radius above the maximum",
        names.join(" ∪ ")
    );
    ensure!(
        u.consistent(),
        "union of {} ({}) predicted {:?}/{:?}, direct {}/{}",
        names.join(" ∪ "),
        u.case.tag(),
        u.predicted_center.map(|s| x.format_set(s)),
        u.predicted_radius,
        x.format_set(u.direct.center),
        u.direct.radius
    );
    if sets.len() == 2 {
        ensure!(u.case != UnionCase::General && u.case != UnionCase::FallbackDirect, "pair case missing");
    }
    Ok(())
}

/// Deterministic sample of at most `limit` items, spread by a stride seeded
/// from the space.
fn sample<T: Copy>(items: &[T], limit: usize, seed: u64) -> Vec<T> {
    if items.len() <= limit {
        return items.to_vec();
    }
    let offset = (seed % items.len() as u64) as usize;
    (0..limit)
        .map(|i| items[(offset + i * items.len() / limit) % items.len()])
        .collect()
}

fn union_pairs(x: &FinSpace) -> Check {
    let q = qualifying_subsets(x);
    let mut pairs = Vec::new();
    for i in 0..q.len() {
        for j in i + 1..q.len() {
            if x.are_separated(q[i], q[j]) {
                pairs.push((q[i], q[j]));
            }
        }
    }
    let chosen = if x.n() <= 4 { pairs } else { sample(&pairs, 64, space_seed(x)) };
    for (a, b) in chosen {
        check_union(x, &[a, b])?;
        check_union(x, &[b, a])?;
    }
    Ok(())
}

fn union_triples(x: &FinSpace) -> Check {
    let q = qualifying_subsets(x);
    let closures: Vec<PointSet> = q.iter().map(|&s| x.closure(s)).collect();
    let sep = |i: usize, j: usize| !q[i].intersects(closures[j]) && !closures[i].intersects(q[j]);
    let mut triples = Vec::new();
    for i in 0..q.len() {
        for j in i + 1..q.len() {
            if !sep(i, j) {
                continue;
            }
            for k in j + 1..q.len() {
                if sep(i, k) && sep(j, k) {
                    triples.push((q[i], q[j], q[k]));
                }
            }
        }
    }
    for (a, b, c) in sample(&triples, 32, space_seed(x)) {
        check_union(x, &[a, b, c])?;
    }
    Ok(())
}

fn quasi_balls(x: &FinSpace) -> Check {
    let n = x.n();
    let full = x.full();
    for a in all_subsets(x).filter(|&a| !a.is_empty() && a != full) {
        let name = x.format_set(a);
        let comp = a.complement(n);
        let mut best = 0;
        let mut argmax = PointSet::EMPTY;
        for p in a {
            let reach = x.furtherness_to_set(p, comp).finite().expect("complement nonempty");
            for r in 1..=(n as u32 + 1) {
                let fits = x.ball(BallQuery::forward(p, r)).unwrap().is_subset(a);
                ensure!(
                    fits == (r <= reach),
                    "B⁺({},{r}) ⊆ {name} is {fits} but Ψ(x,Aᶜ) = {reach}",
                    x.label(p)
                );
            }
            // largest radius r with B⁺(p,r) ⊆ A, found by scanning
            let largest = (1..=n as u32)
                .filter(|&r| x.ball(BallQuery::forward(p, r)).unwrap().is_subset(a))
                .max()
                .unwrap_or(0);
            if largest > best || argmax.is_empty() {
                if largest > best {
                    argmax = PointSet::EMPTY;
                }
                best = best.max(largest);
            }
            if largest == best {
                argmax.insert(p);
            }
        }
        let q = x.quasi_report(a);
        ensure!(q.quasi_radius == FurtherValue::Finite(best), "quasi-radius of {name} ≠ largest ball radius");
        ensure!(q.quasi_center == argmax, "quasi-center of {name} ≠ largest ball centers");
        let balls = x.largest_forward_balls(a).map_err(|e| e.to_string())?;
        let centers: PointSet = balls.iter().map(|b| b.center).collect();
        ensure!(centers == q.quasi_center, "largest ball centers differ for {name}");
        for b in &balls {
            ensure!(b.ball.is_subset(a), "listed ball escapes {name}");
        }
    }
    Ok(())
}

fn serialization_roundtrip(x: &FinSpace) -> Check {
    let text = serialize_space(x);
    let back = parse_space(&text).map_err(|e| e.to_string())?;
    ensure!(back == *x, "round trip changed the space");
    ensure!(serialize_space(&back) == text, "serialization is not canonical");
    Ok(())
}

fn dot_stable(x: &FinSpace) -> Check {
    for mode in [DotMode::Hasse, DotMode::Lattice] {
        ensure!(export_dot(x, mode) == export_dot(x, mode), "DOT output changed between runs");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_small_spaces() {
        let config = VerifyConfig {
            max_n: 3,
            samples: 5,
            sample_n: 5,
            seed: 3,
            prop: None,
        };
        let reports = run(&config).unwrap();
        assert_eq!(reports.len(), properties().len());
        for r in &reports {
            if r.property == "subspace_monotonicity" {
                continue;
            }
            assert!(r.passed, "{} failed: {:?}", r.property, r.counterexample);
        }
    }

    #[test]
    fn unrestricted_subspace_monotonicity_is_false() {
        let prop = find_property("subspace_monotonicity").unwrap();
        let config = VerifyConfig {
            max_n: 3,
            prop: Some(prop.name.into()),
            ..VerifyConfig::default()
        };
        let report = run(&config).unwrap().remove(0);
        assert!(!report.passed);
        let cx = report.counterexample.unwrap();
        assert_eq!(cx.witness, "rad_X({b}) = 2 > rad_Y = 1 for Y = {a,b}");
        let docs: Vec<String> = cx.spaces.iter().map(|d| serde_json::to_string(d).unwrap()).collect();
        assert_eq!(replay(&prop, &docs), Err(cx.witness));
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = properties().iter().map(|p| p.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), properties().len());
    }

    fn not_t0(x: &FinSpace) -> Check {
        ensure!(x.is_t0(), "space is not T0");
        Ok(())
    }

    #[test]
    fn failures_ship_replayable_counterexamples() {
        let prop = Property {
            name: "always_t0",
            description: "deliberately false",
            scope: Scope::Spaces(not_t0),
        };
        let spaces: Vec<FinSpace> = all_spaces_up_to(3, false).unwrap();
        let cases: Vec<Vec<&FinSpace>> = spaces.iter().map(|s| vec![s]).collect();
        let report = run_property(&prop, &cases);
        assert!(!report.passed);
        let cx = report.counterexample.unwrap();
        let docs: Vec<String> = cx
            .spaces
            .iter()
            .map(|d| serde_json::to_string(d).unwrap())
            .collect();
        assert_eq!(replay(&prop, &docs), Err(cx.witness));
        // first non-T0 space in enumeration order is the 2-point indiscrete one
        assert_eq!(docs[0], r#"{"points":["a","b"],"min_basis":{"a":["a","b"],"b":["a","b"]}}"#);
    }

    #[test]
    fn unknown_property() {
        let config = VerifyConfig {
            prop: Some("nope".into()),
            ..VerifyConfig::default()
        };
        assert!(run(&config).is_err());
    }

    #[test]
    fn sampling_is_bounded() {
        let items: Vec<u32> = (0..100).collect();
        let s = sample(&items, 10, 7);
        assert_eq!(s.len(), 10);
        assert_eq!(sample(&items[..5], 10, 7).len(), 5);
    }
}
