mod common;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use specgraph_core::cospectral::neumann_pencil;
use specgraph_core::exactpoly::{
    adjacency_charpoly, bareiss_det, isolate_real_roots, laplacian_pencil_poly, monic,
    square_free_decomposition, IntPoly,
};
use specgraph_core::graph::Graph;

fn small(p: &IntPoly) -> common::Poly {
    p.coeffs()
        .iter()
        .map(|c| c.to_string().parse().unwrap())
        .collect()
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Random connected graph: a random spanning tree plus random extra edges.
fn connected_strategy(min_p: usize, max_p: usize) -> impl Strategy<Value = Graph> {
    (min_p..=max_p).prop_flat_map(|p| {
        let parents: Vec<BoxedStrategy<usize>> = (1..p).map(|i| (0..i).boxed()).collect();
        let extra = proptest::collection::vec(any::<u8>(), p * p);
        (Just(p), parents, extra).prop_map(|(p, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &u)| (u, i + 1))
                .collect();
            for j in 0..p {
                for i in 0..j {
                    if extra[i * p + j] < 64 && !edges.contains(&(i, j)) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(p, &edges).unwrap()
        })
    })
}

/// Eigenvalues of D^{-1/2} A D^{-1/2}, the roots of det(zD - A).
fn normalized_spectrum(g: &Graph) -> Vec<f64> {
    let d = g.degrees();
    let m = DMatrix::from_fn(g.p(), g.p(), |i, j| {
        if g.has_edge(i, j) {
            1.0 / ((d[i] * d[j]) as f64).sqrt()
        } else {
            0.0
        }
    });
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[test]
fn known_pencils() {
    let k13 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    // det(zD - A) worked by hand: 3z^4 - 3z^2 and 16z^4 - 16z^2
    assert_eq!(small(&neumann_pencil(&k13).unwrap()), vec![0, 0, -3, 0, 3]);
    assert_eq!(small(&neumann_pencil(&c4).unwrap()), vec![0, 0, -16, 0, 16]);
    assert_eq!(
        monic(&neumann_pencil(&k13).unwrap()),
        monic(&neumann_pencil(&c4).unwrap())
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pencil_matches_leibniz(
        g in connected_strategy(1, 7),
        keep_mask in any::<u8>(),
        degrees in proptest::collection::vec(1usize..6, 7),
    ) {
        let keep: Vec<usize> = (0..g.p()).filter(|v| keep_mask >> v & 1 == 1).collect();
        let sub = g.induced(&keep);
        let degrees = &degrees[..keep.len()];
        let lib = laplacian_pencil_poly(&sub, degrees).unwrap();
        let oracle = common::pencil(&common::from_library(&g), &keep, degrees);
        if keep.is_empty() {
            prop_assert_eq!(small(&lib), vec![1]);
        } else {
            prop_assert_eq!(small(&lib), oracle);
        }
        prop_assert_eq!(
            small(&adjacency_charpoly(&g)),
            common::adjacency_charpoly(&common::from_library(&g))
        );
    }

    #[test]
    fn bareiss_matches_leibniz(
        n in 1usize..7,
        entries in proptest::collection::vec(-5i64..=5, 36),
    ) {
        let m: Vec<Vec<BigInt>> =
            (0..n).map(|i| (0..n).map(|j| BigInt::from(entries[i * 6 + j])).collect()).collect();
        let oracle: Vec<Vec<common::Poly>> = (0..n)
            .map(|i| (0..n).map(|j| common::trim(vec![entries[i * 6 + j] as i128])).collect())
            .collect();
        let want = common::leibniz(&oracle).first().copied().unwrap_or(0);
        prop_assert_eq!(bareiss_det(&m), BigInt::from(want));
    }

    #[test]
    fn pencil_vanishes_at_one_and_at_minus_one_iff_bipartite(g in connected_strategy(2, 9)) {
        let p = neumann_pencil(&g).unwrap();
        prop_assert_eq!(p.eval(&rat(1)), rat(0));
        prop_assert_eq!(p.eval(&rat(-1)) == rat(0), g.is_bipartite());
    }

    #[test]
    fn isolated_roots_match_numeric_eigenvalues(g in connected_strategy(2, 7)) {
        let p = neumann_pencil(&g).unwrap();
        let roots = isolate_real_roots(&p, &rat(-1), &rat(1)).unwrap();
        prop_assert_eq!(roots.total_multiplicity(), g.p());
        let expanded: Vec<f64> = roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.approx, r.multiplicity))
            .collect();
        for (a, b) in expanded.iter().zip(normalized_spectrum(&g)) {
            prop_assert!((a - b).abs() < 1e-8, "{} vs {}", a, b);
        }
        for r in roots.iter() {
            prop_assert!(r.lo <= r.hi);
        }
    }

    #[test]
    fn square_free_parts_account_for_degree(g in connected_strategy(2, 8)) {
        let p = neumann_pencil(&g).unwrap();
        let parts = square_free_decomposition(&p);
        let total: usize = parts.iter().map(|(f, m)| f.degree().unwrap() * m).sum();
        prop_assert_eq!(total, g.p());
        let roots = isolate_real_roots(&p, &rat(-1), &rat(1)).unwrap();
        let max_mult = roots.iter().map(|r| r.multiplicity).max().unwrap();
        prop_assert_eq!(parts.iter().map(|(_, m)| *m).max().unwrap(), max_mult);
    }
}
