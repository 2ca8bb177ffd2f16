//! Exact determinants of linear pencils.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{IntPoly, PolyError, RatPoly};
use crate::graph::Graph;

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if let Some(small) = to_i128(m) {
        if let Some(d) = bareiss_i128(small) {
            return BigInt::from(d);
        }
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn to_i128(m: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    m.iter()
        .map(|row| row.iter().map(|x| x.to_i64().map(i128::from)).collect())
        .collect()
}

/// `None` on overflow.
fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i][j].checked_mul(a[k][k])?;
                let y = a[i][k].checked_mul(a[k][j])?;
                a[i][j] = x.checked_sub(y)? / prev;
            }
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

/// Determinant of a square matrix whose entries have degree at most 1,
/// by evaluation at z = 0..=n and exact interpolation.
pub fn det_via_interpolation(entries: &[Vec<IntPoly>]) -> Result<IntPoly, PolyError> {
    let n = entries.len();
    for (row, r) in entries.iter().enumerate() {
        if r.len() != n {
            return Err(PolyError::NotSquare {
                row,
                len: r.len(),
                n,
            });
        }
        for (col, e) in r.iter().enumerate() {
            if e.degree().is_some_and(|d| d > 1) {
                return Err(PolyError::DegreeTooHigh { row, col });
            }
        }
    }
    let values: Vec<BigInt> = (0..=n)
        .map(|z| {
            let z = BigInt::from(z);
            let m: Vec<Vec<BigInt>> = entries
                .iter()
                .map(|r| r.iter().map(|e| e.eval_int(&z)).collect())
                .collect();
            bareiss_det(&m)
        })
        .collect();
    Ok(interpolate(&values))
}

/// Polynomial through (k, values[k]) for k = 0..len, which must be integral.
fn interpolate(values: &[BigInt]) -> IntPoly {
    // Newton divided differences at nodes 0, 1, ..., n
    let mut dd: Vec<BigRational> = values.iter().cloned().map(BigRational::from).collect();
    let n = dd.len();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from(BigInt::from(level));
        }
    }
    let mut acc = RatPoly::zero();
    for i in (0..n).rev() {
        // acc = acc * (z - i) + dd[i]
        let factor = RatPoly::from_coeffs(vec![
            BigRational::from(BigInt::from(-(i as i64))),
            BigRational::one(),
        ]);
        acc = &(&acc * &factor) + &RatPoly::from_coeffs(vec![dd[i].clone()]);
    }
    IntPoly::from_coeffs(
        acc.coeffs()
            .iter()
            .map(|c| {
                assert!(
                    c.is_integer(),
                    "determinant of an integer pencil is integral"
                );
                c.to_integer()
            })
            .collect(),
    )
}

/// det(z D - A) for the graph `sub` with the given diagonal degrees.
pub fn laplacian_pencil_poly(sub: &Graph, degrees: &[usize]) -> Result<IntPoly, PolyError> {
    let p = sub.p();
    if degrees.len() != p {
        return Err(PolyError::LengthMismatch {
            got: degrees.len(),
            expected: p,
        });
    }
    if let Some(vertex) = degrees.iter().position(|&d| d == 0) {
        return Err(PolyError::ZeroDegree { vertex });
    }
    let entries: Vec<Vec<IntPoly>> = (0..p)
        .map(|i| {
            (0..p)
                .map(|j| match (i == j, sub.has_edge(i, j)) {
                    (true, _) => IntPoly::linear(0, degrees[i] as i64),
                    (false, true) => IntPoly::from_i64s(&[-1]),
                    (false, false) => IntPoly::zero(),
                })
                .collect()
        })
        .collect();
    det_via_interpolation(&entries)
}

/// det(z I - A).
pub fn adjacency_charpoly(g: &Graph) -> IntPoly {
    let ones = vec![1; g.p()];
    laplacian_pencil_poly(g, &ones).expect("unit degrees are valid")
}
