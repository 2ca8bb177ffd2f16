//! Shape recovery from spectra: asymptotic signatures, database lookup and
//! the integer systems of the leaf-decorated families.

use std::collections::BTreeSet;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cospectral::SignatureDatabase;
use crate::graph::{BoundarySpec, CanonicalLabel, Family};
use crate::spectra::{quantum_spectrum, total_length_estimate, SpectrumError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InverseError {
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("need at least {need} eigenvalues, got {got}")]
    TooFewEigenvalues { got: usize, need: usize },
    #[error("edge length must be positive and finite, got {0}")]
    BadLength(f64),
    #[error("tail fraction must lie in (0, 1], got {0}")]
    BadTailFraction(f64),
    #[error("cluster tolerance must be positive, got {0}")]
    BadDelta(f64),
    #[error("cluster near offset {offset:.6} spans {spread:.3e} > 3 delta = {:.3e}; clusters are unresolved", 3.0 * delta)]
    Ambiguous {
        offset: f64,
        spread: f64,
        delta: f64,
    },
    #[error("database is empty")]
    EmptyDatabase,
    #[error("{0} is not a finite number")]
    NotFinite(f64),
}

/// Points of t = sqrt(lambda) l mod 2 pi that stay together in the tail.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cluster {
    /// Mean offset in [0, 2 pi).
    pub offset: f64,
    /// Members per 2 pi window, rounded.
    pub count: usize,
    pub mean_count: f64,
    /// Circular extent of the members.
    pub spread: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticSignature {
    pub l: f64,
    pub delta: f64,
    pub clusters: Vec<Cluster>,
    pub gl_estimate: f64,
    /// cos(offset) for clusters away from 0 and pi, repeated by count.
    pub alphas: Vec<f64>,
    /// Mean of the counts at offsets 0 and pi.
    pub e_estimate: i64,
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Clusters the tail of an eigenvalue list (ascending, with multiplicity).
///
/// `delta` defaults to 4 pi / k0 with k0 the index where the tail starts.
pub fn extract_signature(
    eigs: &[f64],
    l: f64,
    tail_fraction: f64,
    delta: Option<f64>,
) -> Result<AsymptoticSignature, InverseError> {
    const NEED: usize = 200;
    if eigs.len() < NEED {
        return Err(InverseError::TooFewEigenvalues {
            got: eigs.len(),
            need: NEED,
        });
    }
    if !(l > 0.0 && l.is_finite()) {
        return Err(InverseError::BadLength(l));
    }
    if !(tail_fraction > 0.0 && tail_fraction <= 1.0) {
        return Err(InverseError::BadTailFraction(tail_fraction));
    }
    let gl_estimate = total_length_estimate(eigs)?;
    let n = eigs.len();
    let start = n - ((n as f64 * tail_fraction).round() as usize).clamp(1, n);
    let delta = delta.unwrap_or(4.0 * PI / (start + 1) as f64);
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(InverseError::BadDelta(delta));
    }
    let ts: Vec<f64> = eigs[start..]
        .iter()
        .map(|x| x.max(0.0).sqrt() * l)
        .collect();

    // whole 2 pi windows inside the tail
    let first_window = (ts[0] / TAU).ceil();
    let last_window = (ts[ts.len() - 1] / TAU).floor();
    let windows = (last_window - first_window).max(0.0);
    let in_window = |t: f64| windows >= 1.0 && t >= first_window * TAU && t < last_window * TAU;

    let mut points: Vec<(f64, bool)> = ts
        .iter()
        .map(|&t| (t.rem_euclid(TAU), in_window(t)))
        .collect();
    points.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut groups: Vec<Vec<(f64, bool)>> = Vec::new();
    for &pt in &points {
        match groups.last_mut() {
            Some(g) if pt.0 - g[g.len() - 1].0 <= delta => g.push(pt),
            _ => groups.push(vec![pt]),
        }
    }
    if groups.len() > 1 {
        let wrap = points[0].0 + TAU - points[points.len() - 1].0;
        if wrap <= delta {
            let first = groups.remove(0);
            groups
                .last_mut()
                .expect("at least one group")
                .extend(first.into_iter().map(|(t, w)| (t + TAU, w)));
        }
    }

    let mut clusters = Vec::new();
    for g in &groups {
        let lo = g[0].0;
        let hi = g[g.len() - 1].0;
        let spread = hi - lo;
        let mean = g.iter().map(|p| p.0).sum::<f64>() / g.len() as f64;
        let offset = mean.rem_euclid(TAU);
        if spread > 3.0 * delta {
            return Err(InverseError::Ambiguous {
                offset,
                spread,
                delta,
            });
        }
        let members = if windows >= 1.0 {
            g.iter().filter(|p| p.1).count() as f64 / windows
        } else {
            g.len() as f64
        };
        clusters.push(Cluster {
            offset,
            count: members.round() as usize,
            mean_count: members,
            spread,
        });
    }
    clusters.sort_by(|a, b| a.offset.total_cmp(&b.offset));

    let near = |c: &Cluster, x: f64| circular_distance(c.offset, x) <= delta;
    let lattice: usize = clusters
        .iter()
        .filter(|c| near(c, 0.0) || near(c, PI))
        .map(|c| c.count)
        .sum();
    let alphas = clusters
        .iter()
        .filter(|c| !(near(c, 0.0) || near(c, PI)))
        .flat_map(|c| std::iter::repeat_n(c.offset.cos(), c.count))
        .collect();
    Ok(AsymptoticSignature {
        l,
        delta,
        clusters,
        gl_estimate,
        alphas,
        e_estimate: (lattice as f64 / 2.0).round() as i64,
    })
}

/// Default cluster tolerance for [`identify_graph`]; the match tolerance in
/// sqrt(lambda) is 10 delta / l.
pub const IDENTIFY_DELTA: f64 = 1e-9;

/// Runs of equal values within `tol`: (first value, run length).
fn group(xs: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &x in xs {
        match out.last_mut() {
            Some((v, m)) if (x - *v).abs() <= tol => *m += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Database graphs whose Neumann zero-potential spectrum agrees with the
/// first `k_match` input eigenvalues: equal multiplicities and sqrt(lambda)
/// within 10 delta / l. The last group may be cut short by `k_match`.
pub fn identify_graph(
    eigs: &[f64],
    l: f64,
    db: &SignatureDatabase,
    k_match: usize,
    delta: f64,
) -> Result<Vec<CanonicalLabel>, InverseError> {
    if db.is_empty() {
        return Err(InverseError::EmptyDatabase);
    }
    if !(l > 0.0 && l.is_finite()) {
        return Err(InverseError::BadLength(l));
    }
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(InverseError::BadDelta(delta));
    }
    let k = k_match.min(eigs.len());
    if k == 0 {
        return Err(InverseError::TooFewEigenvalues { got: 0, need: 1 });
    }
    let tol = 10.0 * delta / l;
    let mut input: Vec<f64> = eigs[..k].iter().map(|x| x.max(0.0).sqrt()).collect();
    input.sort_by(f64::total_cmp);
    let want = group(&input, tol);

    let labels: Vec<&CanonicalLabel> = db.graphs().map(|(_, l)| l).collect();
    let mut hits: Vec<CanonicalLabel> = labels
        .par_iter()
        .filter_map(|label| {
            let g = label.to_graph();
            if g.g() == 0 {
                return None;
            }
            let s = quantum_spectrum(&g, &BoundarySpec::neumann(), l, k).ok()?;
            let got = group(&s.sqrt_eigenvalues(), tol);
            let matches = got.len() == want.len()
                && got.iter().zip(&want).enumerate().all(|(i, (a, b))| {
                    (a.0 - b.0).abs() <= tol && (a.1 == b.1 || (i + 1 == want.len() && a.1 >= b.1))
                });
            matches.then(|| (*label).clone())
        })
        .collect();
    hits.sort();
    hits.dedup();
    Ok(hits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    DoubleStar,
    Caterpillar,
    DecoratedTriangle,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::DoubleStar => "double-star",
            FamilyKind::Caterpillar => "caterpillar",
            FamilyKind::DecoratedTriangle => "decorated-triangle",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "double-star" => Ok(FamilyKind::DoubleStar),
            "caterpillar" => Ok(FamilyKind::Caterpillar),
            "decorated-triangle" => Ok(FamilyKind::DecoratedTriangle),
            _ => Err(format!("unknown family {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    NoSolution,
    Unique,
    /// Several solutions, all giving isomorphic graphs.
    MultipleIsomorphic,
    MultipleNonisomorphic,
}

/// Parameter tuples solving a family's system. Tuples are normalized:
/// m <= n for double stars, m1 <= m3 for caterpillars and ascending for
/// decorated triangles. For decorated triangles `ordered` also counts the
/// distinct orderings of each tuple.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilySolution {
    pub family: FamilyKind,
    pub solutions: Vec<Vec<usize>>,
    pub ordered: usize,
    pub classification: Classification,
}

impl FamilySolution {
    fn new(family: FamilyKind, solutions: Vec<Vec<usize>>, ordered: usize) -> Self {
        let classes: BTreeSet<String> = solutions
            .iter()
            .map(|t| isomorphism_class(family, t))
            .collect();
        let classification = match (ordered, classes.len()) {
            (0, _) => Classification::NoSolution,
            (1, _) => Classification::Unique,
            (_, 1) => Classification::MultipleIsomorphic,
            _ => Classification::MultipleNonisomorphic,
        };
        FamilySolution {
            family,
            solutions,
            ordered,
            classification,
        }
    }

    /// The solutions as family members. Members with more than 16 vertices
    /// cannot be built as [`crate::graph::Graph`] values.
    pub fn graphs(&self) -> Vec<Family> {
        self.solutions
            .iter()
            .map(|t| build(self.family, t))
            .collect()
    }
}

fn build(family: FamilyKind, t: &[usize]) -> Family {
    match family {
        FamilyKind::DoubleStar => Family::DoubleStar(t[0], t[1]),
        FamilyKind::Caterpillar => Family::Caterpillar(t[0], t[1], t[2]),
        FamilyKind::DecoratedTriangle => Family::DecoratedTriangle(t[0], t[1], t[2]),
    }
}

/// Equal strings iff the family members are isomorphic, for any size.
///
/// Double stars and caterpillars are trees and get their AHU code. In a
/// decorated triangle the triangle is the only cycle and every permutation of
/// its vertices is a symmetry of the cycle, so the sorted degree triple is a
/// complete invariant.
fn isomorphism_class(family: FamilyKind, t: &[usize]) -> String {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 3];
    let link = |adj: &mut Vec<Vec<usize>>, a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    let leaves = |adj: &mut Vec<Vec<usize>>, at: usize, count: usize| {
        for _ in 0..count {
            adj.push(Vec::new());
            let v = adj.len() - 1;
            link(adj, at, v);
        }
    };
    match family {
        FamilyKind::DecoratedTriangle => {
            let mut sorted = t.to_vec();
            sorted.sort_unstable();
            return format!("{sorted:?}");
        }
        FamilyKind::DoubleStar => {
            adj.truncate(2);
            link(&mut adj, 0, 1);
            leaves(&mut adj, 0, t[0] - 1);
            leaves(&mut adj, 1, t[1] - 1);
        }
        FamilyKind::Caterpillar => {
            link(&mut adj, 0, 1);
            link(&mut adj, 1, 2);
            leaves(&mut adj, 0, t[0] - 1);
            leaves(&mut adj, 1, t[1] - 2);
            leaves(&mut adj, 2, t[2] - 1);
        }
    }
    tree_code(&adj)
}

/// AHU code of a tree, rooted at its center (minimum over two centers).
fn tree_code(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(adj, w, v))
            .collect();
        kids.sort_unstable();
        format!("({})", kids.concat())
    }
    layer
        .iter()
        .map(|&c| encode(adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rat(n: usize) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Double stars with m + n = s - 1 and m n = 1 / c2. A pair and its swap
/// are the same graph and are reported once.
pub fn solve_double_star(s: usize, c2: &BigRational) -> FamilySolution {
    let mut sols = Vec::new();
    if c2.is_positive() && *c2 <= BigRational::one() && s >= 3 {
        let prod = c2.recip();
        if prod.is_integer() {
            let sum = s - 1;
            for m in 1..=sum / 2 {
                let n = sum - m;
                if m * n > 1 && rat(m * n) == prod {
                    sols.push(vec![m, n]);
                }
            }
        }
    }
    let ordered = sols.len();
    FamilySolution::new(FamilyKind::DoubleStar, sols, ordered)
}

/// Caterpillars with m1 + m2 + m3 = s and (m1 + m3) / (m1 m2 m3) = c2.
/// A triple and its reversal are the same graph and are reported once.
pub fn solve_caterpillar(s: usize, c2: &BigRational) -> FamilySolution {
    let mut sols = Vec::new();
    for m1 in 1..s {
        for m3 in m1..s {
            if m1 + m3 + 2 > s {
                break;
            }
            let m2 = s - m1 - m3;
            if BigRational::new(BigInt::from(m1 + m3), BigInt::from(m1 * m2 * m3)) == *c2 {
                sols.push(vec![m1, m2, m3]);
            }
        }
    }
    let ordered = sols.len();
    FamilySolution::new(FamilyKind::Caterpillar, sols, ordered)
}

/// Decorated triangles with m1 + m2 + m3 = s and m1 m2 m3 = 2 / tau_prod.
pub fn solve_decorated_triangle(s: usize, tau_prod: &BigRational) -> FamilySolution {
    let mut sols = Vec::new();
    let mut ordered = 0;
    if tau_prod.is_positive() {
        let prod = BigRational::from(BigInt::from(2)) / tau_prod;
        if prod.is_integer() {
            for m1 in 2..s {
                for m2 in 2..s {
                    if m1 + m2 + 2 > s {
                        break;
                    }
                    let m3 = s - m1 - m2;
                    if rat(m1 * m2 * m3) == prod {
                        ordered += 1;
                        if m1 <= m2 && m2 <= m3 {
                            sols.push(vec![m1, m2, m3]);
                        }
                    }
                }
            }
        }
    }
    FamilySolution::new(FamilyKind::DecoratedTriangle, sols, ordered)
}

/// Best rational approximation with bounded denominator, and its distance
/// from the input.
#[derive(Clone, Debug, PartialEq)]
pub struct Approximation {
    pub value: BigRational,
    pub error: f64,
}

impl Serialize for Approximation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Approximation", 2)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.serialize_field("error", &self.error)?;
        st.end()
    }
}

/// Closest fraction to `x` with denominator at most `max_den`, from the
/// continued-fraction convergents and the last semiconvergent.
pub fn rationalize(x: f64, max_den: u64) -> Result<Approximation, InverseError> {
    let exact = BigRational::from_float(x).ok_or(InverseError::NotFinite(x))?;
    let max_den = BigInt::from(max_den.max(1));
    if exact.denom() <= &max_den {
        return Ok(Approximation {
            value: exact,
            error: 0.0,
        });
    }
    // convergents p/q of the continued fraction of exact
    let (mut p0, mut q0, mut p1, mut q1) =
        (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let (mut n, mut d) = (exact.numer().clone(), exact.denom().clone());
    loop {
        let a = n.div_floor(&d);
        let q2 = &q0 + &a * &q1;
        if q2 > max_den {
            break;
        }
        let p2 = &p0 + &a * &p1;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let r = &n - &a * &d;
        (n, d) = (d, r);
    }
    // largest semiconvergent still within the bound
    let k = (&max_den - &q0).div_floor(&q1);
    let semi = BigRational::new(&p0 + &k * &p1, &q0 + &k * &q1);
    let conv = BigRational::new(p1, q1);
    let err = |r: &BigRational| (r - &exact).abs();
    let value = if err(&semi) < err(&conv) { semi } else { conv };
    let error = err(&value).to_f64().unwrap_or(f64::INFINITY);
    Ok(Approximation { value, error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_label;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rationalize_examples() {
        assert_eq!(rationalize(0.41666667, 100).unwrap().value, q(5, 12));
        assert_eq!(rationalize(0.0625, 1000).unwrap().value, q(1, 16));
        let half = rationalize(0.3333333, 2).unwrap();
        assert_eq!(half.value, q(1, 2));
        assert!((half.error - 0.1666667).abs() < 1e-6);
        assert_eq!(rationalize(-0.75, 10).unwrap().value, q(-3, 4));
        assert!(rationalize(f64::NAN, 10).is_err());
    }

    #[test]
    fn double_star_examples() {
        let s = solve_double_star(5, &q(1, 4));
        assert_eq!(
            (s.solutions.clone(), s.classification),
            (vec![vec![2, 2]], Classification::Unique)
        );
        let s = solve_double_star(6, &q(1, 6));
        assert_eq!(
            (s.solutions.clone(), s.classification),
            (vec![vec![2, 3]], Classification::Unique)
        );
        assert_eq!(
            solve_double_star(6, &q(1, 5)).classification,
            Classification::NoSolution
        );
        assert_eq!(
            solve_double_star(6, &q(2, 11)).classification,
            Classification::NoSolution
        );
    }

    #[test]
    fn caterpillar_examples() {
        let s = solve_caterpillar(7, &q(5, 12));
        assert_eq!(s.solutions, vec![vec![2, 2, 3]]);
        assert_eq!(s.classification, Classification::Unique);
        let s = solve_caterpillar(20, &q(1, 16));
        assert_eq!(
            s.solutions,
            vec![vec![2, 16, 2], vec![2, 10, 8], vec![8, 4, 8]]
        );
        assert_eq!(s.classification, Classification::MultipleNonisomorphic);
        assert_eq!(
            solve_caterpillar(6, &q(1, 1)).classification,
            Classification::NoSolution
        );
        assert_eq!(
            solve_caterpillar(4, &q(1, 1)).solutions,
            vec![vec![1, 2, 1]]
        );
    }

    #[test]
    fn isomorphism_classes_agree_with_canonical_labels() {
        let mut tuples: Vec<(FamilyKind, Vec<usize>)> = Vec::new();
        for a in 1..=6 {
            for b in 1..=6 {
                if a * b > 1 {
                    tuples.push((FamilyKind::DoubleStar, vec![a, b]));
                }
                for c in 1..=5 {
                    if b >= 2 {
                        tuples.push((FamilyKind::Caterpillar, vec![a, b, c]));
                    }
                    if a >= 2 && b >= 2 && c >= 2 {
                        tuples.push((FamilyKind::DecoratedTriangle, vec![a, b, c]));
                    }
                }
            }
        }
        for (f, t) in &tuples {
            for (h, u) in &tuples {
                if f != h {
                    continue;
                }
                let same_class = isomorphism_class(*f, t) == isomorphism_class(*h, u);
                let gt = canonical_label(&build(*f, t).build().unwrap());
                let gu = canonical_label(&build(*h, u).build().unwrap());
                assert_eq!(same_class, gt == gu, "{f} {t:?} {u:?}");
            }
        }
    }

    #[test]
    fn triangle_examples() {
        let s = solve_decorated_triangle(9, &q(2, 27));
        assert_eq!(
            (s.solutions.clone(), s.classification),
            (vec![vec![3, 3, 3]], Classification::Unique)
        );
        let s = solve_decorated_triangle(10, &q(1, 18));
        assert_eq!(s.solutions, vec![vec![3, 3, 4]]);
        assert_eq!(
            (s.ordered, s.classification),
            (3, Classification::MultipleIsomorphic)
        );
        let s = solve_decorated_triangle(14, &q(1, 36));
        assert_eq!(s.solutions, vec![vec![2, 6, 6], vec![3, 3, 8]]);
        assert_eq!(s.classification, Classification::MultipleNonisomorphic);
    }

    #[test]
    fn signature_of_path() {
        let g = Family::Path(3).build().unwrap();
        let s = quantum_spectrum(&g, &BoundarySpec::neumann(), 1.0, 400).unwrap();
        let sig = extract_signature(&s.eigenvalues(), 1.0, 0.5, None).unwrap();
        assert_eq!(sig.clusters.len(), 4, "{sig:?}");
        for w in [0.0, PI / 2.0, PI, 1.5 * PI] {
            assert!(sig
                .clusters
                .iter()
                .any(|c| circular_distance(c.offset, w) < 1e-9));
        }
        assert!(sig.clusters.iter().all(|c| c.count == 1));
        assert!((sig.gl_estimate - 2.0).abs() < 0.01);
        assert!(extract_signature(&s.eigenvalues()[..100], 1.0, 0.5, None).is_err());
    }

    #[test]
    fn signature_of_double_star() {
        let g = Family::DoubleStar(2, 3).build().unwrap();
        let s = quantum_spectrum(&g, &BoundarySpec::dirichlet(&g), 1.0, 400).unwrap();
        let sig = extract_signature(&s.eigenvalues(), 1.0, 0.5, None).unwrap();
        assert_eq!(sig.e_estimate, 2);
        let theta = (1.0 / 6f64.sqrt()).acos();
        for w in [theta, PI - theta, PI + theta, TAU - theta] {
            let c = sig
                .clusters
                .iter()
                .find(|c| circular_distance(c.offset, w) < 1e-9)
                .unwrap();
            assert_eq!(c.count, 1);
        }
    }

    #[test]
    fn merged_clusters_are_ambiguous() {
        // sqrt(lambda) on a fine uniform grid fills the circle
        let eigs: Vec<f64> = (1..=400).map(|k| (0.05 * k as f64).powi(2)).collect();
        let err = extract_signature(&eigs, 1.0, 0.5, Some(0.2)).unwrap_err();
        assert!(matches!(err, InverseError::Ambiguous { .. }));
    }
}
