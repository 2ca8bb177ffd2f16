//! Constructors for the named graph families.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

/// A parametrized graph family member.
///
/// For the leaf-decorated families the interior vertices come first
/// (indices 0, 1[, 2]) and the leaves follow; interior degrees equal the
/// parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// `Star(p)` is K_{1,p-1}: one centre and p - 1 leaves.
    Star(usize),
    Complete(usize),
    /// Adjacent interior vertices of degrees m and n.
    DoubleStar(usize, usize),
    /// Interior path v1 v2 v3 with degrees m1, m2, m3.
    Caterpillar(usize, usize, usize),
    /// Triangle whose vertices have degrees m1, m2, m3.
    DecoratedTriangle(usize, usize, usize),
}

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::FamilyParams(msg.into())
}

/// Append `count` leaves hanging off `at`.
fn add_leaves(edges: &mut Vec<(usize, usize)>, next: &mut usize, at: usize, count: usize) {
    for _ in 0..count {
        edges.push((at, *next));
        *next += 1;
    }
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Path(p) => {
                let edges: Vec<_> = (1..p).map(|v| (v - 1, v)).collect();
                Graph::from_edges(p, &edges)
            }
            Family::Cycle(p) => {
                if p < 3 {
                    return Err(bad(format!("cycle needs p >= 3, got {p}")));
                }
                let edges: Vec<_> = (0..p).map(|v| (v, (v + 1) % p)).collect();
                Graph::from_edges(p, &edges)
            }
            Family::Star(p) => {
                if p < 2 {
                    return Err(bad(format!("star needs p >= 2, got {p}")));
                }
                let edges: Vec<_> = (1..p).map(|v| (0, v)).collect();
                Graph::from_edges(p, &edges)
            }
            Family::Complete(p) => {
                let mut edges = Vec::new();
                for u in 0..p {
                    for v in u + 1..p {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(p, &edges)
            }
            Family::DoubleStar(m, n) => {
                if m < 1 || n < 1 || m * n <= 1 {
                    return Err(bad(format!(
                        "double star needs m, n >= 1 and mn > 1, got ({m}, {n})"
                    )));
                }
                let mut edges = vec![(0, 1)];
                let mut next = 2;
                add_leaves(&mut edges, &mut next, 0, m - 1);
                add_leaves(&mut edges, &mut next, 1, n - 1);
                Graph::from_edges(next, &edges)
            }
            Family::Caterpillar(m1, m2, m3) => {
                if m1 < 1 || m3 < 1 || m2 < 2 {
                    return Err(bad(format!(
                        "caterpillar needs m1, m3 >= 1 and m2 >= 2, got ({m1}, {m2}, {m3})"
                    )));
                }
                let mut edges = vec![(0, 1), (1, 2)];
                let mut next = 3;
                add_leaves(&mut edges, &mut next, 0, m1 - 1);
                add_leaves(&mut edges, &mut next, 1, m2 - 2);
                add_leaves(&mut edges, &mut next, 2, m3 - 1);
                Graph::from_edges(next, &edges)
            }
            Family::DecoratedTriangle(m1, m2, m3) => {
                if m1 < 2 || m2 < 2 || m3 < 2 {
                    return Err(bad(format!(
                        "decorated triangle needs every m >= 2, got ({m1}, {m2}, {m3})"
                    )));
                }
                let mut edges = vec![(0, 1), (1, 2), (0, 2)];
                let mut next = 3;
                add_leaves(&mut edges, &mut next, 0, m1 - 2);
                add_leaves(&mut edges, &mut next, 1, m2 - 2);
                add_leaves(&mut edges, &mut next, 2, m3 - 2);
                Graph::from_edges(next, &edges)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(p) => write!(f, "path:{p}"),
            Family::Cycle(p) => write!(f, "cycle:{p}"),
            Family::Star(p) => write!(f, "star:{p}"),
            Family::Complete(p) => write!(f, "complete:{p}"),
            Family::DoubleStar(m, n) => write!(f, "double-star:{m},{n}"),
            Family::Caterpillar(a, b, c) => write!(f, "caterpillar:{a},{b},{c}"),
            Family::DecoratedTriangle(a, b, c) => write!(f, "decorated-triangle:{a},{b},{c}"),
        }
    }
}

/// Parses the `kind:a,b,c` form used on the command line.
impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("expected kind:params, got {s:?}")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|e| bad(format!("{s:?}: {e}")))?;
        let arity = |k: usize| -> Result<(), GraphError> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(bad(format!(
                    "{kind} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let fam = match kind {
            "path" => arity(1).map(|_| Family::Path(nums[0])),
            "cycle" => arity(1).map(|_| Family::Cycle(nums[0])),
            "star" => arity(1).map(|_| Family::Star(nums[0])),
            "complete" => arity(1).map(|_| Family::Complete(nums[0])),
            "double-star" => arity(2).map(|_| Family::DoubleStar(nums[0], nums[1])),
            "caterpillar" => arity(3).map(|_| Family::Caterpillar(nums[0], nums[1], nums[2])),
            "decorated-triangle" => {
                arity(3).map(|_| Family::DecoratedTriangle(nums[0], nums[1], nums[2]))
            }
            other => Err(bad(format!("unknown family {other:?}"))),
        }?;
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_label;

    #[test]
    fn small_identities() {
        let p4 = Family::Path(4).build().unwrap();
        let ds = Family::DoubleStar(2, 2).build().unwrap();
        assert_eq!(canonical_label(&ds), canonical_label(&p4));

        let c3 = Family::Cycle(3).build().unwrap();
        let tri = Family::DecoratedTriangle(2, 2, 2).build().unwrap();
        assert_eq!(tri, c3);
    }

    #[test]
    fn counts_over_parameter_grid() {
        for m in 1..=7 {
            for n in 1..=7 {
                if m * n <= 1 {
                    assert!(Family::DoubleStar(m, n).build().is_err());
                    continue;
                }
                let g = Family::DoubleStar(m, n).build().unwrap();
                assert_eq!((g.p(), g.g()), (m + n, m + n - 1));
                assert_eq!((g.degree(0), g.degree(1)), (m, n));
            }
        }
        for m1 in 1..=5 {
            for m2 in 2..=5 {
                for m3 in 1..=5 {
                    let g = Family::Caterpillar(m1, m2, m3).build().unwrap();
                    assert_eq!(g.g(), m1 + m2 + m3 - 2);
                    assert_eq!(g.p(), m1 + m2 + m3 - 1);
                    assert_eq!(g.degrees()[..3], [m1, m2, m3]);
                    assert!(g.is_tree());
                }
            }
        }
        for m1 in 2..=5 {
            for m2 in 2..=5 {
                for m3 in 2..=5 {
                    let g = Family::DecoratedTriangle(m1, m2, m3).build().unwrap();
                    assert_eq!(g.g(), m1 + m2 + m3 - 3);
                    assert_eq!(g.degrees()[..3], [m1, m2, m3]);
                }
            }
        }
        assert!(Family::Caterpillar(1, 1, 1).build().is_err());
        assert!(Family::DecoratedTriangle(1, 2, 2).build().is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["double-star:2,3", "cycle:3", "caterpillar:2,2,3", "star:4"] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert!("double-star:2".parse::<Family>().is_err());
        assert!("blob:2".parse::<Family>().is_err());
    }
}
