//! Closed-form spectra of equilateral quantum graphs with zero potential.
//!
//! With e = g - p + r and P the pencil polynomial of the interior subgraph,
//! the characteristic function is s^e P(c) where s = sin(t)/sqrt(lambda),
//! c = cos(t) and t = sqrt(lambda) l. Its zeros, with orders, are
//!
//! * t = 0 (lambda = 0): order m_P(1), since c - 1 vanishes to first order
//!   in lambda there and s does not vanish;
//! * t in pi Z, t > 0: order e + 2 m_P(cos t), since s has a simple zero and
//!   c -+ 1 a double zero in t;
//! * cos t = alpha for a root alpha of P in (-1, 1): order m_P(alpha).
//!
//! Each window [2 pi k, 2 pi (k + 1)) therefore holds exactly 2g eigenvalues.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::exactpoly::{isolate_real_roots, laplacian_pencil_poly, IntPoly, PolyError, RootSet};
use crate::graph::{BoundarySpec, Graph, GraphError};

use std::f64::consts::{PI, TAU};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("edge length must be positive and finite, got {0}")]
    BadLength(f64),
    #[error("eigenvalue count must be at least 1")]
    ZeroCount,
    #[error("negative multiplicity {multiplicity} at t = {t}")]
    NegativeMultiplicity { t: f64, multiplicity: i64 },
    #[error("need at least {need} eigenvalues, got {got}")]
    TooFewEigenvalues { got: usize, need: usize },
    #[error("eigenvalue {index} is negative or not finite")]
    BadEigenvalue { index: usize },
    #[error("vertex {vertex} has degree {degree} but {interior} interior neighbours")]
    DegreeBelowInterior {
        vertex: usize,
        degree: usize,
        interior: usize,
    },
}

/// Where an eigenvalue comes from in the factorization s^e P(c).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Branch {
    /// lambda = 0.
    ZeroMode,
    /// cos t = alpha_root with t = 2 pi k + theta (sign +1) or
    /// t = 2 pi (k + 1) - theta (sign -1), theta = arccos alpha in (0, pi).
    Cos { root: usize, sign: i8, k: u64 },
    /// t = k pi with P(+-1) != 0: only the sine factor vanishes.
    Sin { k: u64 },
    /// t = k pi with P(cos t) = 0: sine and cosine factors both vanish.
    Lattice { k: u64 },
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::ZeroMode => f.write_str("zero"),
            Branch::Cos { root, sign, k } => {
                write!(f, "cos:{root}:{}:{k}", if *sign > 0 { '+' } else { '-' })
            }
            Branch::Sin { k } => write!(f, "sin:{k}"),
            Branch::Lattice { k } => write!(f, "lattice:{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub lambda: f64,
    pub sqrt_lambda: f64,
    pub multiplicity: usize,
    pub branch: Branch,
}

/// Distinct eigenvalues in ascending order; multiplicities sum to at least
/// `requested`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumSlice {
    pub entries: Vec<SpectrumEntry>,
    pub l: f64,
    pub requested: usize,
}

impl SpectrumSlice {
    /// The first `requested` eigenvalues, repeated by multiplicity.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.expanded(|e| e.lambda)
    }

    /// Square roots of [`Self::eigenvalues`].
    pub fn sqrt_eigenvalues(&self) -> Vec<f64> {
        self.expanded(|e| e.sqrt_lambda)
    }

    fn expanded(&self, f: impl Fn(&SpectrumEntry) -> f64) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(f(e), e.multiplicity))
            .take(self.requested)
            .collect()
    }

    /// Columns index, lambda, sqrt_lambda, multiplicity, branch.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,lambda,sqrt_lambda,multiplicity,branch\n");
        for (i, e) in self.entries.iter().enumerate() {
            let _ = writeln!(
                out,
                "{i},{:.16e},{:.16e},{},{}",
                e.lambda, e.sqrt_lambda, e.multiplicity, e.branch
            );
        }
        out
    }
}

/// Root of the pencil polynomial strictly inside (-1, 1).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InteriorRoot {
    pub alpha: f64,
    pub theta: f64,
    pub multiplicity: usize,
}

/// Everything the closed form needs about (G, boundary conditions).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralData {
    pub g: usize,
    /// Exponent of the sine factor, g - p + r.
    pub e: i64,
    pub pencil: IntPoly,
    pub roots: RootSet,
    /// Multiplicity of P at z = 1 and z = -1.
    pub at_one: usize,
    pub at_minus_one: usize,
    /// Ascending in theta, i.e. descending in alpha.
    pub interior: Vec<InteriorRoot>,
}

impl SpectralData {
    pub fn new(g: &Graph, bc: &BoundarySpec) -> Result<Self, SpectrumError> {
        if g.g() == 0 {
            return Err(SpectrumError::NoEdges);
        }
        if !g.is_connected() {
            return Err(SpectrumError::Disconnected);
        }
        let sub = g.interior_subgraph(bc)?;
        let pencil = laplacian_pencil_poly(&sub.graph, &sub.degrees)?;
        let e = g.g() as i64 - g.p() as i64 + bc.r() as i64;
        Self::from_pencil(pencil, g.g(), e)
    }

    /// Data for the graph obtained from `interior` by hanging
    /// `degrees[v] - deg(v)` Dirichlet leaves on each vertex v. Only the
    /// interior has to fit in a [`Graph`], so leaf-decorated graphs with more
    /// than 16 vertices are covered.
    pub fn with_dirichlet_leaves(
        interior: &Graph,
        degrees: &[usize],
    ) -> Result<Self, SpectrumError> {
        if !interior.is_connected() {
            return Err(SpectrumError::Disconnected);
        }
        let mut leaves = 0;
        for v in 0..interior.p() {
            let own = interior.degree(v);
            let degree = degrees.get(v).copied().unwrap_or(0);
            if degree < own {
                return Err(SpectrumError::DegreeBelowInterior {
                    vertex: v,
                    degree,
                    interior: own,
                });
            }
            leaves += degree - own;
        }
        let g = interior.g() + leaves;
        if g == 0 {
            return Err(SpectrumError::NoEdges);
        }
        let pencil = laplacian_pencil_poly(interior, degrees)?;
        let e = interior.g() as i64 - interior.p() as i64 + leaves as i64;
        Self::from_pencil(pencil, g, e)
    }

    fn from_pencil(pencil: IntPoly, g: usize, e: i64) -> Result<Self, SpectrumError> {
        let one = BigRational::from(BigInt::from(1));
        let roots = isolate_real_roots(&pencil, &-one.clone(), &one)?;
        let at_one = roots.multiplicity_at(&one);
        let at_minus_one = roots.multiplicity_at(&-one.clone());
        let mut interior: Vec<InteriorRoot> = roots
            .iter()
            .filter(|r| !(r.is_exact() && (r.lo == one || r.lo == -one.clone())))
            .map(|r| InteriorRoot {
                alpha: r.approx,
                theta: r.approx.acos(),
                multiplicity: r.multiplicity,
            })
            .collect();
        interior.sort_by(|a, b| a.theta.total_cmp(&b.theta));
        Ok(SpectralData {
            g,
            e,
            pencil,
            roots,
            at_one,
            at_minus_one,
            interior,
        })
    }

    /// Order of the zero at t = k pi, k >= 1.
    fn lattice_multiplicity(&self, k: u64) -> i64 {
        let m = if k.is_multiple_of(2) {
            self.at_one
        } else {
            self.at_minus_one
        };
        self.e + 2 * m as i64
    }

    fn lattice_entry(&self, k: u64, l: f64) -> Result<Option<SpectrumEntry>, SpectrumError> {
        let t = k as f64 * PI;
        let m = self.lattice_multiplicity(k);
        if m < 0 {
            return Err(SpectrumError::NegativeMultiplicity { t, multiplicity: m });
        }
        let p_vanishes = if k.is_multiple_of(2) {
            self.at_one
        } else {
            self.at_minus_one
        } > 0;
        Ok((m > 0).then(|| {
            entry(
                t,
                l,
                m as usize,
                if p_vanishes {
                    Branch::Lattice { k }
                } else {
                    Branch::Sin { k }
                },
            )
        }))
    }
}

fn entry(t: f64, l: f64, multiplicity: usize, branch: Branch) -> SpectrumEntry {
    let sqrt_lambda = t / l;
    SpectrumEntry {
        lambda: sqrt_lambda * sqrt_lambda,
        sqrt_lambda,
        multiplicity,
        branch,
    }
}

fn check_length(l: f64) -> Result<(), SpectrumError> {
    if l > 0.0 && l.is_finite() {
        Ok(())
    } else {
        Err(SpectrumError::BadLength(l))
    }
}

/// The first `count` eigenvalues (with multiplicity) for zero potential.
pub fn quantum_spectrum(
    g: &Graph,
    bc: &BoundarySpec,
    l: f64,
    count: usize,
) -> Result<SpectrumSlice, SpectrumError> {
    check_length(l)?;
    if count == 0 {
        return Err(SpectrumError::ZeroCount);
    }
    let data = SpectralData::new(g, bc)?;
    spectrum_from_data(&data, l, count)
}

pub fn spectrum_from_data(
    data: &SpectralData,
    l: f64,
    count: usize,
) -> Result<SpectrumSlice, SpectrumError> {
    let mut entries = Vec::new();
    let mut total = 0usize;
    if data.at_one > 0 {
        entries.push(entry(0.0, l, data.at_one, Branch::ZeroMode));
        total += data.at_one;
    }
    let mut window = 0u64;
    while total < count {
        let base = window as f64 * TAU;
        let mut push = |e: SpectrumEntry, entries: &mut Vec<SpectrumEntry>| {
            total += e.multiplicity;
            entries.push(e);
        };
        if window > 0 {
            if let Some(e) = data.lattice_entry(2 * window, l)? {
                push(e, &mut entries);
            }
        }
        for (i, r) in data.interior.iter().enumerate() {
            let b = Branch::Cos {
                root: i,
                sign: 1,
                k: window,
            };
            push(entry(base + r.theta, l, r.multiplicity, b), &mut entries);
        }
        if let Some(e) = data.lattice_entry(2 * window + 1, l)? {
            push(e, &mut entries);
        }
        for (i, r) in data.interior.iter().enumerate().rev() {
            let b = Branch::Cos {
                root: i,
                sign: -1,
                k: window,
            };
            push(
                entry(base + TAU - r.theta, l, r.multiplicity, b),
                &mut entries,
            );
        }
        window += 1;
    }
    // trim whole entries beyond the requested count
    let mut seen = 0;
    let keep = entries
        .iter()
        .take_while(|e| {
            let before = seen;
            seen += e.multiplicity;
            before < count
        })
        .count();
    entries.truncate(keep);
    Ok(SpectrumSlice {
        entries,
        l,
        requested: count,
    })
}

/// A family sqrt(lambda) = offset + period * k + o(1), k = 0, 1, ...,
/// repeated `count` times.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticSequence {
    /// In [0, period).
    pub offset: f64,
    pub period: f64,
    pub count: usize,
    /// cos(offset l) for sequences coming from a pencil root.
    pub alpha: Option<f64>,
}

/// Subsequences of sqrt-eigenvalues, sorted by (period, offset).
///
/// Each root alpha in (-1, 1) gives offsets theta/l and (2 pi - theta)/l at
/// period 2 pi/l; for alpha = 0 these interleave into one sequence of
/// period pi/l. The lattice orders a at even and b at odd multiples of pi
/// give min(a, b) sequences of period pi/l and the excess at period 2 pi/l.
pub fn asymptotic_sequences(
    g: &Graph,
    bc: &BoundarySpec,
    l: f64,
) -> Result<Vec<AsymptoticSequence>, SpectrumError> {
    check_length(l)?;
    let data = SpectralData::new(g, bc)?;
    let (half, full) = (PI / l, TAU / l);
    let mut out = Vec::new();
    let zero = data
        .roots
        .iter()
        .find(|r| r.is_exact() && r.lo == BigRational::from(BigInt::from(0)));
    for r in &data.interior {
        if zero.is_some() && r.alpha == 0.0 {
            out.push(AsymptoticSequence {
                offset: half / 2.0,
                period: half,
                count: r.multiplicity,
                alpha: Some(0.0),
            });
            continue;
        }
        for offset in [r.theta / l, (TAU - r.theta) / l] {
            out.push(AsymptoticSequence {
                offset,
                period: full,
                count: r.multiplicity,
                alpha: Some(r.alpha),
            });
        }
    }
    let (a, b) = (data.lattice_multiplicity(2), data.lattice_multiplicity(1));
    for (t, m) in [(0.0, a), (PI, b)] {
        if m < 0 {
            return Err(SpectrumError::NegativeMultiplicity { t, multiplicity: m });
        }
    }
    let shared = a.min(b) as usize;
    if shared > 0 {
        out.push(AsymptoticSequence {
            offset: 0.0,
            period: half,
            count: shared,
            alpha: None,
        });
    }
    if a > b {
        out.push(AsymptoticSequence {
            offset: 0.0,
            period: full,
            count: (a - b) as usize,
            alpha: Some(1.0),
        });
    } else if b > a {
        out.push(AsymptoticSequence {
            offset: half,
            period: full,
            count: (b - a) as usize,
            alpha: Some(-1.0),
        });
    }
    out.sort_by(|x, y| {
        x.period
            .total_cmp(&y.period)
            .then(x.offset.total_cmp(&y.offset))
    });
    Ok(out)
}

/// Total length g l from the Weyl law lambda_k ~ (pi k / (g l))^2, as the
/// mean of pi k / sqrt(lambda_k) over the top tenth of indices.
pub fn total_length_estimate(eigs: &[f64]) -> Result<f64, SpectrumError> {
    const NEED: usize = 50;
    if eigs.len() < NEED {
        return Err(SpectrumError::TooFewEigenvalues {
            got: eigs.len(),
            need: NEED,
        });
    }
    if let Some(index) = eigs.iter().position(|x| !(x.is_finite() && *x >= 0.0)) {
        return Err(SpectrumError::BadEigenvalue { index });
    }
    let n = eigs.len();
    let start = n - n / 10;
    let estimates: Vec<f64> = (start..n)
        .map(|i| PI * (i + 1) as f64 / eigs[i].sqrt())
        .collect();
    Ok(estimates.iter().sum::<f64>() / estimates.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn sqrt_mults(g: &Graph, bc: &BoundarySpec, k: usize) -> Vec<(f64, usize)> {
        quantum_spectrum(g, bc, 1.0, k)
            .unwrap()
            .entries
            .iter()
            .map(|e| (e.sqrt_lambda, e.multiplicity))
            .collect()
    }

    fn assert_close(got: &[(f64, usize)], want: &[(f64, usize)]) {
        assert!(got.len() >= want.len(), "{got:?}");
        for (g, w) in got.iter().zip(want) {
            assert!(
                (g.0 - w.0).abs() < 1e-12 && g.1 == w.1,
                "{got:?} vs {want:?}"
            );
        }
    }

    #[test]
    fn dirichlet_leaves_match_built_graph() {
        for f in [
            Family::Caterpillar(2, 3, 4),
            Family::DecoratedTriangle(2, 3, 3),
            Family::DoubleStar(1, 4),
        ] {
            let g = f.build().unwrap();
            let bc = BoundarySpec::dirichlet(&g);
            let sub = g.interior_subgraph(&bc).unwrap();
            let from_leaves =
                SpectralData::with_dirichlet_leaves(&sub.graph, &sub.degrees).unwrap();
            assert_eq!(from_leaves, SpectralData::new(&g, &bc).unwrap(), "{f}");
        }
        let p2 = Family::Path(2).build().unwrap();
        assert!(matches!(
            SpectralData::with_dirichlet_leaves(&p2, &[0, 1]),
            Err(SpectrumError::DegreeBelowInterior { vertex: 0, .. })
        ));
    }

    #[test]
    fn path3_is_an_interval() {
        let g = Family::Path(3).build().unwrap();
        let got = sqrt_mults(&g, &BoundarySpec::neumann(), 8);
        let want: Vec<_> = (0..8).map(|k| (k as f64 * PI / 2.0, 1)).collect();
        assert_close(&got, &want);
    }

    #[test]
    fn triangle_is_a_circle() {
        let g = Family::Cycle(3).build().unwrap();
        let got = sqrt_mults(&g, &BoundarySpec::neumann(), 9);
        let want = [
            (0.0, 1),
            (TAU / 3.0, 2),
            (2.0 * TAU / 3.0, 2),
            (TAU, 2),
            (4.0 * TAU / 3.0, 2),
        ];
        assert_close(&got, &want);
    }

    #[test]
    fn star_neumann_and_dirichlet() {
        let g = Family::Star(4).build().unwrap();
        let got = sqrt_mults(&g, &BoundarySpec::neumann(), 7);
        let want = [(0.0, 1), (PI / 2.0, 2), (PI, 1), (1.5 * PI, 2), (TAU, 1)];
        assert_close(&got, &want);
        let got = sqrt_mults(&g, &BoundarySpec::dirichlet(&g), 8);
        let want = [(PI / 2.0, 1), (PI, 2), (1.5 * PI, 1), (TAU, 2)];
        assert_close(&got, &want);
    }

    #[test]
    fn p4_dirichlet() {
        let g = Family::DoubleStar(2, 2).build().unwrap();
        let got = sqrt_mults(&g, &BoundarySpec::dirichlet(&g), 10);
        let want: Vec<_> = (1..=10).map(|k| (k as f64 * PI / 3.0, 1)).collect();
        assert_close(&got, &want);
    }

    #[test]
    fn single_edge_dirichlet() {
        let g = Family::Path(2).build().unwrap();
        let got = sqrt_mults(&g, &BoundarySpec::dirichlet(&g), 6);
        let want: Vec<_> = (1..=6).map(|k| (k as f64 * PI, 1)).collect();
        assert_close(&got, &want);
    }

    #[test]
    fn count_and_trim() {
        let g = Family::Cycle(3).build().unwrap();
        let s = quantum_spectrum(&g, &BoundarySpec::neumann(), 2.0, 4).unwrap();
        assert_eq!(s.entries.len(), 3);
        assert_eq!(s.eigenvalues().len(), 4);
        assert!((s.sqrt_eigenvalues()[1] - PI / 3.0).abs() < 1e-12);
        assert!(s.to_csv().starts_with("index,lambda"));
    }

    #[test]
    fn errors() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(
            quantum_spectrum(&k1, &BoundarySpec::neumann(), 1.0, 5),
            Err(SpectrumError::NoEdges)
        );
        let g = Family::Path(3).build().unwrap();
        assert!(quantum_spectrum(&g, &BoundarySpec::neumann(), 0.0, 5).is_err());
        assert!(quantum_spectrum(&g, &BoundarySpec::neumann(), 1.0, 0).is_err());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            quantum_spectrum(&two, &BoundarySpec::neumann(), 1.0, 5),
            Err(SpectrumError::Disconnected)
        );
        assert!(total_length_estimate(&[1.0; 10]).is_err());
    }

    #[test]
    fn sequences_for_trees_and_stars() {
        let tree = Family::Caterpillar(2, 3, 2).build().unwrap();
        let seqs = asymptotic_sequences(&tree, &BoundarySpec::neumann(), 1.0).unwrap();
        let lattice: Vec<_> = seqs.iter().filter(|s| s.alpha.is_none()).collect();
        assert_eq!(lattice.len(), 1);
        assert_eq!(
            (lattice[0].offset, lattice[0].period, lattice[0].count),
            (0.0, PI, 1)
        );

        let ds = Family::DoubleStar(2, 3).build().unwrap();
        let seqs = asymptotic_sequences(&ds, &BoundarySpec::dirichlet(&ds), 1.0).unwrap();
        let theta = (1.0 / 6f64.sqrt()).acos();
        let mut offsets: Vec<f64> = seqs
            .iter()
            .filter(|s| s.period == TAU)
            .map(|s| s.offset)
            .collect();
        offsets.sort_by(f64::total_cmp);
        let want = [theta, PI - theta, PI + theta, TAU - theta];
        for (o, w) in offsets.iter().zip(want) {
            assert!((o - w).abs() < 1e-12);
        }
        let e: usize = seqs
            .iter()
            .filter(|s| s.alpha.is_none())
            .map(|s| s.count)
            .sum();
        assert_eq!(e, 2);
    }

    #[test]
    fn weyl_estimate() {
        let g = Family::Path(3).build().unwrap();
        let s = quantum_spectrum(&g, &BoundarySpec::neumann(), 1.0, 500).unwrap();
        let est = total_length_estimate(&s.eigenvalues()).unwrap();
        assert!((est - 2.0).abs() < 0.01, "{est}");
        let c = Family::Cycle(3).build().unwrap();
        let s = quantum_spectrum(&c, &BoundarySpec::neumann(), 1.0, 500).unwrap();
        let est = total_length_estimate(&s.eigenvalues()).unwrap();
        assert!((est - 3.0).abs() < 0.01, "{est}");
    }
}
