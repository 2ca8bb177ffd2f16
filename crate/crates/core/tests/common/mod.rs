//! Reference implementations used as oracles by the integration tests. They
//! are deliberately naive and share no code with the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// Adjacency as an edge list on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simple {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Simple {
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let mut a = vec![vec![false; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = true;
            a[v][u] = true;
        }
        a
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let a = self.matrix();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.n {
                if a[v][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

pub fn from_library(g: &specgraph_core::graph::Graph) -> Simple {
    Simple {
        n: g.p(),
        edges: g.edges(),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically smallest upper-triangle bit string over all relabelings.
pub fn brute_canonical(g: &Simple) -> Vec<bool> {
    brute_canonical_with(g, &permutations(g.n))
}

pub fn brute_canonical_with(g: &Simple, perms: &[Vec<usize>]) -> Vec<bool> {
    let a = g.matrix();
    let mut best: Option<Vec<bool>> = None;
    for p in perms {
        let mut bits = Vec::with_capacity(g.n * (g.n - 1) / 2);
        for j in 1..g.n {
            for i in 0..j {
                bits.push(a[p[i]][p[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
    }
    best.unwrap_or_default()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, by exhausting all labeled graphs.
pub fn connected_classes(n: usize) -> Vec<Simple> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut classes: BTreeMap<Vec<bool>, Simple> = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if edges.len() + 1 < n {
            continue;
        }
        let g = Simple { n, edges };
        if g.connected() {
            classes.entry(brute_canonical_with(&g, &perms)).or_insert(g);
        }
    }
    classes.into_values().collect()
}

/// All labeled trees on n >= 2 vertices from Prüfer sequences, reduced to
/// one per isomorphism class by AHU codes.
pub fn tree_classes(n: usize) -> Vec<Simple> {
    if n == 1 {
        return vec![Simple {
            n: 1,
            edges: vec![],
        }];
    }
    if n == 2 {
        return vec![Simple {
            n: 2,
            edges: vec![(0, 1)],
        }];
    }
    let mut classes: BTreeMap<String, Simple> = BTreeMap::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let t = prufer_decode(&seq, n);
        classes.entry(ahu(&t)).or_insert(t);
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
        seq[i] += 1;
    }
    classes.into_values().collect()
}

fn prufer_decode(seq: &[usize], n: usize) -> Simple {
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Simple { n, edges }
}

/// Center-rooted AHU code of a tree.
pub fn ahu(t: &Simple) -> String {
    let a = t.matrix();
    let n = t.n;
    let mut deg = t.degrees();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    while alive.len() > 2 {
        let leaves: Vec<usize> = alive.iter().copied().filter(|&v| deg[v] <= 1).collect();
        for v in leaves {
            alive.remove(&v);
            for w in 0..n {
                if a[v][w] {
                    deg[w] = deg[w].saturating_sub(1);
                }
            }
        }
    }
    fn code(a: &[Vec<bool>], v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = (0..a.len())
            .filter(|&w| a[v][w] && Some(w) != parent)
            .map(|w| code(a, w, Some(v)))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    alive.iter().map(|&c| code(&a, c, None)).min().unwrap()
}

/// Integer polynomial, ascending coefficients, no trailing zeros.
pub type Poly = Vec<i128>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn add_into(acc: &mut Poly, p: &Poly, sign: i128) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i] += sign * c;
    }
}

/// det of a matrix of polynomials by the Leibniz formula, skipping zero
/// entries.
pub fn leibniz(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let mut acc: Poly = vec![];
    let mut used = vec![false; n];
    let mut perm = Vec::with_capacity(n);
    fn rec(
        m: &[Vec<Poly>],
        row: usize,
        used: &mut [bool],
        perm: &mut Vec<usize>,
        prod: Poly,
        acc: &mut Poly,
    ) {
        let n = m.len();
        if row == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            add_into(acc, &prod, if inversions % 2 == 0 { 1 } else { -1 });
            return;
        }
        for col in 0..n {
            if used[col] || m[row][col].is_empty() {
                continue;
            }
            used[col] = true;
            perm.push(col);
            rec(m, row + 1, used, perm, mul(&prod, &m[row][col]), acc);
            perm.pop();
            used[col] = false;
        }
    }
    rec(m, 0, &mut used, &mut perm, vec![1], &mut acc);
    trim(acc)
}

/// det(z diag(degrees) - A) for the subgraph on `keep`.
pub fn pencil(g: &Simple, keep: &[usize], degrees: &[usize]) -> Poly {
    let a = g.matrix();
    let m: Vec<Vec<Poly>> = keep
        .iter()
        .enumerate()
        .map(|(i, &u)| {
            keep.iter()
                .map(|&v| {
                    if u == v {
                        trim(vec![0, degrees[i] as i128])
                    } else if a[u][v] {
                        vec![-1]
                    } else {
                        vec![]
                    }
                })
                .collect()
        })
        .collect();
    leibniz(&m)
}

/// Neumann pencil: every vertex kept, true degrees.
pub fn neumann_pencil(g: &Simple) -> Poly {
    let keep: Vec<usize> = (0..g.n).collect();
    pencil(g, &keep, &g.degrees())
}

/// det(zI - A).
pub fn adjacency_charpoly(g: &Simple) -> Poly {
    let keep: Vec<usize> = (0..g.n).collect();
    pencil(g, &keep, &vec![1; g.n])
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Primitive part with positive leading coefficient: equal for two
/// polynomials iff their monic forms agree.
pub fn primitive(p: &Poly) -> Poly {
    let g = p.iter().fold(0, |acc, &c| gcd(acc, c));
    let s = if p.last().copied().unwrap_or(1) < 0 {
        -1
    } else {
        1
    };
    p.iter().map(|c| s * c / g).collect()
}

pub fn parse_poly(s: &str) -> Poly {
    let p: specgraph_core::exactpoly::IntPoly = s.parse().unwrap();
    p.coeffs()
        .iter()
        .map(|c| c.to_string().parse().unwrap())
        .collect()
}

pub fn to_library(p: &Poly) -> specgraph_core::exactpoly::IntPoly {
    specgraph_core::exactpoly::IntPoly::from_coeffs(
        p.iter().map(|&c| num_bigint::BigInt::from(c)).collect(),
    )
}

/// Neumann spectrum of an interval of length `len`: (sqrt lambda, multiplicity).
pub fn interval(len: f64, terms: usize) -> Vec<(f64, usize)> {
    (0..terms)
        .map(|k| (k as f64 * std::f64::consts::PI / len, 1))
        .collect()
}

/// Spectrum of a circle of circumference `len`.
pub fn circle(len: f64, terms: usize) -> Vec<(f64, usize)> {
    let mut out = vec![(0.0, 1)];
    out.extend((1..terms).map(|k| (2.0 * std::f64::consts::PI * k as f64 / len, 2)));
    out
}

/// Neumann star with `leaves` edges of length l, by separation of variables:
/// symmetric modes sin(sqrt(lambda) l) = 0, antisymmetric modes
/// cos(sqrt(lambda) l) = 0 with multiplicity leaves - 1.
pub fn star(leaves: usize, l: f64, terms: usize) -> Vec<(f64, usize)> {
    let pi = std::f64::consts::PI;
    let mut out = Vec::new();
    for k in 0..terms {
        out.push((k as f64 * pi / l, 1));
        if leaves >= 2 {
            out.push(((k as f64 + 0.5) * pi / l, leaves - 1));
        }
    }
    out
}

/// Keep the leading entries whose multiplicities cover `count`.
pub fn cover(list: &[(f64, usize)], count: usize) -> Vec<(f64, usize)> {
    let mut total = 0;
    let mut out = Vec::new();
    for &(x, m) in list {
        if total >= count {
            break;
        }
        out.push((x, m));
        total += m;
    }
    out
}
