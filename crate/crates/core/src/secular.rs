//! Numerical eigenvalues from the secular determinant.
//!
//! Every edge carries y_j = a_j s + b_j c, where s and c are the fundamental
//! solutions of -y'' + q y = lambda y on [0, l]. Vertex conditions are linear
//! in (a, b); stacking one row per scalar condition gives a square matrix of
//! size 2g whose determinant vanishes exactly on the spectrum.

use std::f64::consts::PI;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{BoundarySpec, Condition, Graph, GraphError};
use crate::spectra::{quantum_spectrum, SpectrumError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SecularError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("invalid potential: {0}")]
    Potential(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("{rows} conditions for {g} edges")]
    ConditionCount { rows: usize, g: usize },
    #[error("edge length must be positive and finite, got {0}")]
    BadLength(f64),
    #[error("invalid scan range [{0}, {1}]")]
    BadRange(f64, f64),
    #[error("grid step must be positive, got {0}")]
    BadStep(f64),
    #[error("scan missed {missed} closed-form eigenvalue(s), first at sqrt(lambda) = {first}")]
    GridTooCoarse { missed: usize, first: f64 },
}

/// Piecewise-constant potential, identical on every edge, in the edge's
/// own coordinate x in [0, l].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PiecewisePotential {
    /// (width as a fraction of l, value)
    pieces: Vec<(f64, f64)>,
}

impl PiecewisePotential {
    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    pub fn constant(q: f64) -> Self {
        PiecewisePotential {
            pieces: vec![(1.0, q)],
        }
    }

    pub fn new(pieces: Vec<(f64, f64)>) -> Result<Self, SecularError> {
        if pieces.is_empty() {
            return Err(SecularError::Potential("no pieces".into()));
        }
        if let Some((w, q)) = pieces
            .iter()
            .find(|(w, q)| !(*w > 0.0 && w.is_finite() && q.is_finite()))
        {
            return Err(SecularError::Potential(format!("bad piece ({w}, {q})")));
        }
        let total: f64 = pieces.iter().map(|p| p.0).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(SecularError::Potential(format!("widths sum to {total}")));
        }
        Ok(PiecewisePotential { pieces })
    }

    /// Like [`Self::new`], but the pieces must read the same reversed.
    pub fn symmetric(pieces: Vec<(f64, f64)>) -> Result<Self, SecularError> {
        let pot = Self::new(pieces)?;
        if !pot.is_symmetric() {
            return Err(SecularError::Potential("pieces are not palindromic".into()));
        }
        Ok(pot)
    }

    pub fn pieces(&self) -> &[(f64, f64)] {
        &self.pieces
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.pieces.len();
        (0..n / 2).all(|i| self.pieces[i] == self.pieces[n - 1 - i])
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(|p| p.1 == 0.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.pieces.iter().map(|p| p.1.abs()).fold(0.0, f64::max)
    }

    /// Same potential plus a constant.
    pub fn shifted(&self, q0: f64) -> Self {
        PiecewisePotential {
            pieces: self.pieces.iter().map(|&(w, q)| (w, q + q0)).collect(),
        }
    }
}

impl Default for PiecewisePotential {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for PiecewisePotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("piecewise:")?;
        for (i, (w, q)) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}:{q}")?;
        }
        Ok(())
    }
}

fn parse_number(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((a, b)) => Some(a.trim().parse::<f64>().ok()? / b.trim().parse::<f64>().ok()?),
        None => s.trim().parse().ok(),
    }
}

/// `piecewise:w1:q1,w2:q2,...`; widths may be written as fractions `1/4`.
/// The word `zero` is accepted for q = 0.
impl FromStr for PiecewisePotential {
    type Err = SecularError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "zero" {
            return Ok(Self::zero());
        }
        let body = s
            .trim()
            .strip_prefix("piecewise:")
            .ok_or_else(|| SecularError::Potential(format!("expected piecewise:..., got {s:?}")))?;
        let pieces = body
            .split(',')
            .map(|piece| {
                let (w, q) = piece.split_once(':')?;
                Some((parse_number(w)?, parse_number(q)?))
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| SecularError::Potential(format!("cannot parse {s:?}")))?;
        Self::new(pieces)
    }
}

/// s, s', c, c' at x = l.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FundamentalValues {
    pub s: f64,
    pub ds: f64,
    pub c: f64,
    pub dc: f64,
}

impl FundamentalValues {
    pub fn wronskian(&self) -> f64 {
        self.c * self.ds - self.dc * self.s
    }
}

/// Propagates (y, y') across each piece and composes the 2x2 transfers.
pub fn transfer_eval(pot: &PiecewisePotential, lambda: f64, l: f64) -> FundamentalValues {
    // columns: (c, c') and (s, s')
    let mut m = [[1.0, 0.0], [0.0, 1.0]];
    for &(frac, q) in &pot.pieces {
        let w = frac * l;
        let k2 = lambda - q;
        let step = if k2 > 0.0 {
            let k = k2.sqrt();
            let (sn, cs) = (k * w).sin_cos();
            [[cs, sn / k], [-k * sn, cs]]
        } else if k2 < 0.0 {
            let k = (-k2).sqrt();
            let (sh, ch) = ((k * w).sinh(), (k * w).cosh());
            [[ch, sh / k], [k * sh, ch]]
        } else {
            [[1.0, w], [0.0, 1.0]]
        };
        m = [
            [
                step[0][0] * m[0][0] + step[0][1] * m[1][0],
                step[0][0] * m[0][1] + step[0][1] * m[1][1],
            ],
            [
                step[1][0] * m[0][0] + step[1][1] * m[1][0],
                step[1][0] * m[0][1] + step[1][1] * m[1][1],
            ],
        ];
    }
    FundamentalValues {
        c: m[0][0],
        dc: m[1][0],
        s: m[0][1],
        ds: m[1][1],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum End {
    Tail,
    Head,
}

#[derive(Clone, Copy, Debug)]
enum Term {
    Value(usize, End),
    Slope(usize, End),
}

/// Vertex conditions as signed sums of end values and slopes.
#[derive(Clone, Debug)]
pub struct SecularSystem {
    g: usize,
    rows: Vec<Vec<(f64, Term)>>,
}

impl SecularSystem {
    pub fn new(graph: &Graph, bc: &BoundarySpec) -> Result<Self, SecularError> {
        bc.validate(graph)?;
        let edges = graph.edges();
        let g = edges.len();
        if g == 0 {
            return Err(SecularError::NoEdges);
        }
        let mut rows = Vec::with_capacity(2 * g);
        for v in 0..graph.p() {
            let incident: Vec<(usize, End)> = edges
                .iter()
                .enumerate()
                .filter_map(|(j, &(a, b))| match () {
                    _ if a == v => Some((j, End::Tail)),
                    _ if b == v => Some((j, End::Head)),
                    _ => None,
                })
                .collect();
            let Some(&(j0, end0)) = incident.first() else {
                continue;
            };
            if incident.len() == 1 && bc.condition(v) == Condition::Dirichlet {
                rows.push(vec![(1.0, Term::Value(j0, end0))]);
                continue;
            }
            for &(j, end) in &incident[1..] {
                rows.push(vec![
                    (1.0, Term::Value(j, end)),
                    (-1.0, Term::Value(j0, end0)),
                ]);
            }
            // outward derivatives sum to zero
            rows.push(
                incident
                    .iter()
                    .map(|&(j, end)| match end {
                        End::Tail => (1.0, Term::Slope(j, end)),
                        End::Head => (-1.0, Term::Slope(j, end)),
                    })
                    .collect(),
            );
        }
        if rows.len() != 2 * g {
            return Err(SecularError::ConditionCount {
                rows: rows.len(),
                g,
            });
        }
        Ok(SecularSystem { g, rows })
    }

    pub fn size(&self) -> usize {
        2 * self.g
    }

    /// Columns are the s-coefficients a_0..a_{g-1}, then the c-coefficients.
    pub fn matrix(&self, fv: &FundamentalValues) -> DMatrix<f64> {
        let g = self.g;
        let mut m = DMatrix::zeros(2 * g, 2 * g);
        for (i, row) in self.rows.iter().enumerate() {
            for &(sign, term) in row {
                let (j, a, b) = match term {
                    Term::Value(j, End::Tail) => (j, 0.0, 1.0),
                    Term::Value(j, End::Head) => (j, fv.s, fv.c),
                    Term::Slope(j, End::Tail) => (j, 1.0, 0.0),
                    Term::Slope(j, End::Head) => (j, fv.ds, fv.dc),
                };
                m[(i, j)] += sign * a;
                m[(i, g + j)] += sign * b;
            }
        }
        m
    }

    /// Matrix with every row scaled to unit Euclidean norm.
    pub fn scaled_matrix(&self, fv: &FundamentalValues) -> DMatrix<f64> {
        let mut m = self.matrix(fv);
        for mut row in m.row_iter_mut() {
            let n = row.norm();
            if n > 0.0 {
                row /= n;
            }
        }
        m
    }

    /// det of the row-scaled matrix, i.e. det divided by the product of row
    /// norms.
    pub fn scaled_det(&self, fv: &FundamentalValues) -> f64 {
        self.scaled_matrix(fv).lu().determinant()
    }

    pub fn smallest_singular_value(&self, fv: &FundamentalValues) -> f64 {
        self.scaled_matrix(fv)
            .singular_values()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn build_secular_matrix(
    graph: &Graph,
    bc: &BoundarySpec,
    pot: &PiecewisePotential,
    lambda: f64,
    l: f64,
) -> Result<DMatrix<f64>, SecularError> {
    check_length(l)?;
    let sys = SecularSystem::new(graph, bc)?;
    Ok(sys.matrix(&transfer_eval(pot, lambda, l)))
}

fn check_length(l: f64) -> Result<(), SecularError> {
    if l > 0.0 && l.is_finite() {
        Ok(())
    } else {
        Err(SecularError::BadLength(l))
    }
}

/// Zeros of |scaled det| at or below this count as eigenvalues.
pub const DET_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootKind {
    SignChange,
    /// Local minimum of |det| reaching the tolerance without a sign change.
    EvenCandidate,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootKind::SignChange => "sign-change",
            RootKind::EvenCandidate => "even-candidate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRoot {
    pub lambda: f64,
    /// Bracket in lambda.
    pub lo: f64,
    pub hi: f64,
    /// |scaled det| at `lambda`.
    pub residual: f64,
    pub kind: RootKind,
}

impl ScanRoot {
    /// sign(lambda) sqrt|lambda|.
    pub fn x(&self) -> f64 {
        to_x(self.lambda)
    }
}

fn to_x(lambda: f64) -> f64 {
    lambda.signum() * lambda.abs().sqrt()
}

fn to_lambda(x: f64) -> f64 {
    x * x.abs()
}

/// Default grid spacing in sqrt(lambda): a small fraction of the mean gap
/// pi/(g l) between distinct eigenvalues.
pub fn default_step(g: usize, l: f64) -> f64 {
    PI / (32.0 * g.max(1) as f64 * l)
}

/// Locates eigenvalues in `[lo, hi]` (in lambda) on a uniform grid in
/// x = sign(lambda) sqrt|lambda|. For a nonzero potential and lo <= 0 the
/// window is widened down to -max|q| - 1.
pub fn scan_eigenvalues(
    graph: &Graph,
    bc: &BoundarySpec,
    pot: &PiecewisePotential,
    l: f64,
    range: (f64, f64),
    step: Option<f64>,
) -> Result<Vec<ScanRoot>, SecularError> {
    check_length(l)?;
    let (mut lo, hi) = range;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(SecularError::BadRange(lo, hi));
    }
    let sys = SecularSystem::new(graph, bc)?;
    let step = step.unwrap_or_else(|| default_step(graph.g(), l));
    if !(step > 0.0 && step.is_finite()) {
        return Err(SecularError::BadStep(step));
    }
    if !pot.is_zero() && lo <= 0.0 {
        lo = lo.min(-pot.max_abs() - 1.0);
    }
    let det = |x: f64| sys.scaled_det(&transfer_eval(pot, to_lambda(x), l));
    let sigma = |x: f64| sys.smallest_singular_value(&transfer_eval(pot, to_lambda(x), l));

    let (x_lo, x_hi) = (to_x(lo), to_x(hi));
    // one step below a zero lower bound so a root at lambda = 0 is bracketed
    let x0 = if lo == 0.0 { -step } else { x_lo };
    let n = ((x_hi - x0) / step).ceil().max(1.0) as usize;
    let xs: Vec<f64> = (0..=n).map(|i| (x0 + i as f64 * step).min(x_hi)).collect();
    let ds: Vec<f64> = xs.par_iter().map(|&x| det(x)).collect();

    // a root at an endpoint may bisect to just outside it; near lambda = 0
    // det is linear in lambda, so the slack is measured in lambda
    let slack = |t: f64| 1e-12 * t.abs().max(1.0);
    let snap = |x: f64| {
        let lambda = to_lambda(x);
        (lambda >= lo - slack(lo) && lambda <= hi + slack(hi)).then(|| x.clamp(x_lo, x_hi))
    };
    let mut roots: Vec<ScanRoot> = Vec::new();
    let push = |x: f64, bracket: (f64, f64), kind: RootKind, roots: &mut Vec<ScanRoot>| {
        if let Some(x) = snap(x) {
            roots.push(ScanRoot {
                lambda: to_lambda(x),
                lo: to_lambda(bracket.0),
                hi: to_lambda(bracket.1),
                residual: det(x).abs(),
                kind,
            });
        }
    };

    for i in 0..n {
        let (a, b) = (xs[i], xs[i + 1]);
        let (da, db) = (ds[i], ds[i + 1]);
        if da == 0.0 {
            let before = if i > 0 { ds[i - 1] } else { da };
            let kind = if before * db < 0.0 {
                RootKind::SignChange
            } else {
                RootKind::EvenCandidate
            };
            push(a, (a, a), kind, &mut roots);
            continue;
        }
        if da * db < 0.0 {
            let (mut u, mut v, mut du) = (a, b, da);
            loop {
                let m = 0.5 * (u + v);
                if m <= u || m >= v || v - u <= 1e-13 * v.abs().max(1.0) {
                    break;
                }
                let dm = det(m);
                if dm == 0.0 {
                    u = m;
                    v = m;
                    break;
                }
                if (dm < 0.0) == (du < 0.0) {
                    u = m;
                    du = dm;
                } else {
                    v = m;
                }
            }
            let x = if det(u).abs() <= det(v).abs() { u } else { v };
            push(x, (u, v), RootKind::SignChange, &mut roots);
        }
    }

    // even-order zeros: local minima of |det| that do not straddle a sign change
    for i in 1..n {
        let (dl, dm, dr) = (ds[i - 1].abs(), ds[i].abs(), ds[i + 1].abs());
        if !(dm <= dl && dm <= dr) || ds[i - 1] * ds[i + 1] < 0.0 || ds[i] == 0.0 {
            continue;
        }
        if ds[i - 1] * ds[i] < 0.0 || ds[i] * ds[i + 1] < 0.0 {
            continue;
        }
        // |det| is unimodal around an even zero; sigma_min is sharper but only
        // near the zero, where the vanishing singular value is the smallest
        let rough = golden_min(&|x| det(x).abs(), xs[i - 1], xs[i + 1]);
        let w = 1e-6 * rough.abs().max(1.0);
        let x = golden_min(&sigma, rough - w, rough + w);
        let r = det(x).abs();
        if r > DET_TOL {
            continue;
        }
        let near_sign_change = roots
            .iter()
            .any(|s| s.kind == RootKind::SignChange && (to_x(s.lambda) - x).abs() < 1e-6);
        if !near_sign_change {
            push(
                x,
                (xs[i - 1], xs[i + 1]),
                RootKind::EvenCandidate,
                &mut roots,
            );
        }
    }
    roots.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    roots.dedup_by(|b, a| (b.x() - a.x()).abs() < 1e-9);
    Ok(roots)
}

fn golden_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if b - a <= 1e-15 * b.abs().max(1.0) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        c
    } else {
        d
    }
}

/// Columns lambda, det_residual, kind.
pub fn roots_to_csv(roots: &[ScanRoot]) -> String {
    let mut out = String::from("lambda,det_residual,kind\n");
    for r in roots {
        let _ = writeln!(out, "{:.16e},{:.16e},{}", r.lambda, r.residual, r.kind);
    }
    out
}

/// Outcome of comparing a zero-potential scan with the closed form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossCheck {
    pub closed_form: usize,
    pub matched: usize,
    /// sqrt(lambda) of closed-form eigenvalues with no scan root nearby.
    pub missed: Vec<f64>,
    /// sqrt(lambda) of sign changes with no closed-form eigenvalue nearby.
    pub extra_sign_changes: Vec<f64>,
    pub even_candidates: usize,
}

/// Scans with q = 0 over sqrt(lambda) in [0, sqrt_max) and matches every
/// distinct closed-form eigenvalue there within `tol` in sqrt(lambda).
pub fn cross_validate(
    graph: &Graph,
    bc: &BoundarySpec,
    l: f64,
    sqrt_max: f64,
    tol: f64,
) -> Result<CrossCheck, SecularError> {
    let mut count = 64;
    let closed: Vec<f64> = loop {
        let s = quantum_spectrum(graph, bc, l, count)?;
        if s.entries.last().is_some_and(|e| e.sqrt_lambda >= sqrt_max) {
            break s
                .entries
                .iter()
                .map(|e| e.sqrt_lambda)
                .filter(|&x| x < sqrt_max)
                .collect();
        }
        count *= 2;
    };
    let roots = scan_eigenvalues(
        graph,
        bc,
        &PiecewisePotential::zero(),
        l,
        (0.0, sqrt_max * sqrt_max),
        None,
    )?;
    let xs: Vec<(f64, RootKind)> = roots.iter().map(|r| (r.x(), r.kind)).collect();
    let mut missed = Vec::new();
    for &c in &closed {
        if !xs.iter().any(|(x, _)| (x - c).abs() <= tol) {
            missed.push(c);
        }
    }
    let extra_sign_changes = xs
        .iter()
        .filter(|(x, k)| *k == RootKind::SignChange && !closed.iter().any(|c| (x - c).abs() <= tol))
        .map(|(x, _)| *x)
        .collect();
    Ok(CrossCheck {
        closed_form: closed.len(),
        matched: closed.len() - missed.len(),
        missed,
        extra_sign_changes,
        even_candidates: xs
            .iter()
            .filter(|(_, k)| *k == RootKind::EvenCandidate)
            .count(),
    })
}

/// Like [`cross_validate`], failing when a closed-form eigenvalue is missed.
pub fn validate_scan(
    graph: &Graph,
    bc: &BoundarySpec,
    l: f64,
    sqrt_max: f64,
    tol: f64,
) -> Result<CrossCheck, SecularError> {
    let check = cross_validate(graph, bc, l, sqrt_max, tol)?;
    if let Some(&first) = check.missed.first() {
        return Err(SecularError::GridTooCoarse {
            missed: check.missed.len(),
            first,
        });
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn free_fundamental_solutions() {
        let fv = transfer_eval(&PiecewisePotential::zero(), 4.0, 1.3);
        assert!((fv.s - (2.6f64).sin() / 2.0).abs() < 1e-14);
        assert!((fv.c - (2.6f64).cos()).abs() < 1e-14);
        assert!((fv.wronskian() - 1.0).abs() < 1e-13);
        let shifted = transfer_eval(&PiecewisePotential::constant(1.5), 5.5, 1.3);
        assert!((shifted.s - fv.s).abs() < 1e-14 && (shifted.dc - fv.dc).abs() < 1e-14);
        let z = transfer_eval(&PiecewisePotential::zero(), 0.0, 2.0);
        assert_eq!((z.s, z.ds, z.c, z.dc), (2.0, 1.0, 1.0, 0.0));
        let neg = transfer_eval(&PiecewisePotential::zero(), -1.0, 1.0);
        assert!((neg.s - 1f64.sinh()).abs() < 1e-14);
    }

    #[test]
    fn potential_parsing() {
        let p: PiecewisePotential = "piecewise:1/4:0,0.5:5,1/4:0".parse().unwrap();
        assert!(p.is_symmetric());
        assert_eq!(p.max_abs(), 5.0);
        assert!("piecewise:0.5:1".parse::<PiecewisePotential>().is_err());
        assert!(PiecewisePotential::symmetric(vec![(0.5, 1.0), (0.5, 0.0)]).is_err());
        assert!("zero".parse::<PiecewisePotential>().unwrap().is_zero());
    }

    #[test]
    fn interval_of_length_two() {
        let g = Family::Path(3).build().unwrap();
        let bc = BoundarySpec::neumann();
        let pot = PiecewisePotential::zero();
        let at = |x: f64| {
            build_secular_matrix(&g, &bc, &pot, x * x, 1.0)
                .unwrap()
                .determinant()
        };
        assert!(at(PI / 2.0).abs() < 1e-12);
        assert!(at(PI / 4.0).abs() > 1e-3);
    }

    #[test]
    fn k4_has_twelve_rows() {
        let g = Family::Complete(4).build().unwrap();
        let m = build_secular_matrix(
            &g,
            &BoundarySpec::neumann(),
            &PiecewisePotential::zero(),
            1.0,
            1.0,
        )
        .unwrap();
        assert_eq!(m.shape(), (12, 12));
    }

    #[test]
    fn triangle_scan_flags_double_roots() {
        let g = Family::Cycle(3).build().unwrap();
        let roots = scan_eigenvalues(
            &g,
            &BoundarySpec::neumann(),
            &PiecewisePotential::zero(),
            1.0,
            (0.0, 49.0),
            None,
        )
        .unwrap();
        let got: Vec<(f64, RootKind)> = roots.iter().map(|r| (r.x(), r.kind)).collect();
        let want = [0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0, 2.0 * PI];
        assert_eq!(got.len(), want.len(), "{got:?}");
        for ((x, kind), w) in got.iter().zip(want) {
            assert!((x - w).abs() < 1e-8, "{got:?}");
            if w > 0.0 {
                assert_eq!(*kind, RootKind::EvenCandidate);
            }
        }
    }

    #[test]
    fn dirichlet_star_scan() {
        let g = Family::Star(4).build().unwrap();
        let bc = BoundarySpec::dirichlet(&g);
        let roots =
            scan_eigenvalues(&g, &bc, &PiecewisePotential::zero(), 1.0, (0.0, 80.0), None).unwrap();
        for r in &roots {
            let k = r.x() / (PI / 2.0);
            assert!((k - k.round()).abs() < 1e-8);
            let odd = k.round() as i64 % 2 == 1;
            let want = if odd {
                RootKind::SignChange
            } else {
                RootKind::EvenCandidate
            };
            assert_eq!(r.kind, want, "{roots:?}");
        }
        assert_eq!(roots.len(), 5);
    }

    #[test]
    fn cross_validation_small() {
        let g = Family::Star(4).build().unwrap();
        let c = validate_scan(&g, &BoundarySpec::neumann(), 1.0, 4.0 * PI, 1e-8).unwrap();
        assert_eq!(c.matched, c.closed_form);
        assert!(c.extra_sign_changes.is_empty());
    }

    #[test]
    fn zero_eigenvalue_found_for_any_labeling() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4)]).unwrap();
        let h = crate::graph::canonical_label(&g).to_graph();
        for graph in [g, h] {
            let roots = scan_eigenvalues(
                &graph,
                &BoundarySpec::neumann(),
                &PiecewisePotential::zero(),
                1.0,
                (0.0, 1.0),
                None,
            )
            .unwrap();
            assert_eq!(roots.first().map(|r| r.lambda), Some(0.0), "{roots:?}");
        }
    }
}
