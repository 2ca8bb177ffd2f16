//! Real-root isolation with Sturm sequences and square-free decomposition.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{IntPoly, PolyError, RatPoly};

/// Isolating intervals are refined to at most this width.
const WIDTH_BITS: u32 = 48;

/// One distinct real root. `lo == hi` marks an exactly known rational root;
/// otherwise the root lies in the open interval (lo, hi).
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
    pub approx: f64,
}

impl IsolatedRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl Serialize for IsolatedRoot {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IsolatedRoot", 4)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.serialize_field("approx", &self.approx)?;
        st.end()
    }
}

/// Distinct real roots in ascending order.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct RootSet {
    pub roots: Vec<IsolatedRoot>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IsolatedRoot> {
        self.roots.iter()
    }

    /// Multiplicity of the exact root `r`, 0 if `r` is not an exact root.
    pub fn multiplicity_at(&self, r: &BigRational) -> usize {
        self.roots
            .iter()
            .find(|x| x.is_exact() && &x.lo == r)
            .map_or(0, |x| x.multiplicity)
    }
}

/// Yun's algorithm: monic square-free `a_i` with p = c * prod a_i^i.
/// Constant factors are omitted.
pub fn square_free_decomposition(p: &IntPoly) -> Vec<(RatPoly, usize)> {
    let f = p.to_rat();
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Sturm chain as primitive integer polynomials (positive scalings).
fn sturm_chain(q: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![q.to_rat(), q.to_rat().derivative()];
    while !chain[chain.len() - 1].is_zero() {
        let k = chain.len();
        let r = chain[k - 2].div_rem(&chain[k - 1]).1;
        chain.push(-&r);
    }
    chain.pop();
    chain.iter().map(RatPoly::to_primitive_int).collect()
}

fn variations(chain: &[IntPoly], x: &BigRational) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in chain {
        let sign = s.sign_at(x);
        if sign == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && sign != last {
            count += 1;
        }
        last = sign;
    }
    count
}

/// Distinct roots of the chain's leading polynomial in (a, b].
fn count(chain: &[IntPoly], a: &BigRational, b: &BigRational) -> usize {
    variations(chain, a) - variations(chain, b)
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from(BigInt::from(2))
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// All distinct real roots of `p` in the closed interval [lo, hi], with
/// multiplicities.
pub fn isolate_real_roots(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<RootSet, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if lo > hi {
        return Ok(RootSet::default());
    }
    let factors: Vec<(IntPoly, usize)> = square_free_decomposition(p)
        .into_iter()
        .map(|(a, i)| (a.to_primitive_int(), i))
        .collect();
    let mut square_free = factors
        .iter()
        .fold(IntPoly::from_i64s(&[1]), |acc, (a, _)| &acc * a);

    let mut roots = Vec::new();
    // z = +-1 symbolically
    for r in [-1i64, 1] {
        let rq = BigRational::from(BigInt::from(r));
        if &rq < lo || &rq > hi {
            continue;
        }
        let (mut rest, mut m) = (p.clone(), 0);
        while let Some(next) = rest.deflate(&BigInt::from(r)) {
            rest = next;
            m += 1;
        }
        if m > 0 {
            square_free = square_free
                .deflate(&BigInt::from(r))
                .expect("a root of p is a root of its square-free part");
            roots.push(IsolatedRoot {
                lo: rq.clone(),
                hi: rq,
                multiplicity: m,
                approx: r as f64,
            });
        }
    }

    if square_free.degree().unwrap_or(0) > 0 {
        let chain = sturm_chain(&square_free);
        let multiplicity = |at: &dyn Fn(&IntPoly) -> bool| -> usize {
            factors
                .iter()
                .find(|(a, _)| at(a))
                .map(|(_, i)| *i)
                .expect("every root of the square-free part belongs to one factor")
        };
        let exact = |x: BigRational, roots: &mut Vec<IsolatedRoot>| {
            let m = multiplicity(&|a: &IntPoly| a.sign_at(&x) == Ordering::Equal);
            roots.push(IsolatedRoot {
                approx: to_f64(&x),
                lo: x.clone(),
                hi: x,
                multiplicity: m,
            });
        };
        if square_free.sign_at(lo) == Ordering::Equal {
            exact(lo.clone(), &mut roots);
        }
        let width = BigRational::new(BigInt::one(), BigInt::one() << WIDTH_BITS);
        let mut stack = vec![(lo.clone(), hi.clone(), count(&chain, lo, hi))];
        while let Some((a, b, n)) = stack.pop() {
            match n {
                0 => {}
                1 => {
                    if square_free.sign_at(&b) == Ordering::Equal {
                        exact(b, &mut roots);
                        continue;
                    }
                    let sb = square_free.sign_at(&b);
                    let (mut a, mut b) = (a, b);
                    let mut hit = None;
                    while &b - &a > width {
                        let m = midpoint(&a, &b);
                        match square_free.sign_at(&m) {
                            Ordering::Equal => {
                                hit = Some(m);
                                break;
                            }
                            s if s == sb => b = m,
                            _ => a = m,
                        }
                    }
                    if let Some(m) = hit {
                        exact(m, &mut roots);
                        continue;
                    }
                    let m = multiplicity(&|f: &IntPoly| count(&sturm_chain(f), &a, &b) == 1);
                    roots.push(IsolatedRoot {
                        approx: to_f64(&midpoint(&a, &b)),
                        lo: a,
                        hi: b,
                        multiplicity: m,
                    });
                }
                _ => {
                    let m = midpoint(&a, &b);
                    let left = count(&chain, &a, &m);
                    stack.push((m.clone(), b, n - left));
                    stack.push((a, m, left));
                }
            }
        }
    }
    roots.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(RootSet { roots })
}
