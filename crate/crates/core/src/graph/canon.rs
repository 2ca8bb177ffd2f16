//! Canonical labeling by individualization and refinement.
//!
//! The search tree starts from the equitable refinement of the unit
//! partition. Each node individualizes one vertex of the first non-singleton
//! cell and refines again; leaves are discrete partitions, i.e. vertex
//! orders. The canonical order is the leaf whose relabeled upper triangle is
//! smallest. Automorphisms found between equivalent leaves prune the tree in
//! two ways: a jump back to the common ancestor with the earlier equivalent
//! leaf, and orbit pruning among siblings using automorphisms that fix the
//! current path pointwise.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{graph6, Graph};

/// graph6 bytes of the canonical relabeling. Equal labels iff isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalLabel(String);

impl CanonicalLabel {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::parse_graph6(&self.0).expect("canonical labels are valid graph6")
    }
}

impl fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalLabel({})", self.0)
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_label(g: &Graph) -> CanonicalLabel {
    CanonicalLabel(graph6::write_graph6(&canonical_form(g)))
}

/// `g` relabeled into canonical order.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_order(g))
}

/// Vertex order (old indices) of the canonical relabeling.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.p();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(vec![(0..n).collect()], &mut Vec::new());
    search.best.expect("search reaches at least one leaf").order
}

/// Upper triangle in graph6 bit order, first bit most significant.
fn encode(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

fn mask(cell: &[usize]) -> u16 {
    cell.iter().fold(0u16, |m, &v| m | 1 << v)
}

/// Equitable refinement: split cells by neighbour counts into each splitter
/// cell until stable. Sub-cells are ordered by ascending count, which keeps
/// the result independent of vertex names.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = mask(&cells[s]);
            let mut split_any = false;
            let mut next = Vec::with_capacity(cells.len() + 1);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbors(v) & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                split_any |= keyed[0].0 != keyed[keyed.len() - 1].0;
            }
            if split_any {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

struct Leaf {
    code: u128,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

impl Search<'_> {
    /// Returns `Some(depth)` when the subtree below `depth` is known to be
    /// redundant and the search should resume at that depth.
    fn visit(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            return self.leaf(order, path);
        };

        let n = self.g.p();
        let mut orbit: Vec<usize> = (0..n).collect();
        for gamma in &self.automorphisms {
            if path.iter().all(|&v| gamma[v] == v) {
                for (v, &image) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut orbit, v), find(&mut orbit, image));
                    if a != b {
                        orbit[a.max(b)] = a.min(b);
                    }
                }
            }
        }

        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        let mut members = cells[target].clone();
        members.sort_unstable();
        for v in members {
            let root = find(&mut orbit, v);
            if explored.iter().any(|&w| find(&mut orbit, w) == root) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            explored.push(v);
            if let Some(to) = jump {
                if to < depth {
                    return Some(to);
                }
            }
            // automorphisms found below may now fix this path
            for gamma in &self.automorphisms {
                if path.iter().all(|&u| gamma[u] == u) {
                    for (u, &image) in gamma.iter().enumerate() {
                        let (a, b) = (find(&mut orbit, u), find(&mut orbit, image));
                        if a != b {
                            orbit[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
        }
        None
    }

    fn leaf(&mut self, order: Vec<usize>, path: &[usize]) -> Option<usize> {
        let code = encode(self.g, &order);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                code,
                order: order.clone(),
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                code,
                order,
                path: path.to_vec(),
            });
            self.first = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("best set with first");
        for earlier in [first, best] {
            if earlier.code == code {
                let mut gamma = vec![0; order.len()];
                for (a, b) in earlier.order.iter().zip(&order) {
                    gamma[*a] = *b;
                }
                let to = common_prefix(&earlier.path, path);
                self.automorphisms.push(gamma);
                return Some(to);
            }
        }
        if code < best.code {
            self.best = Some(Leaf {
                code,
                order,
                path: path.to_vec(),
            });
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn path_relabelings_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_label(&a), canonical_label(&b));
    }

    #[test]
    fn star_and_path_differ() {
        let star = Family::Star(4).build().unwrap();
        let p4 = Family::Path(4).build().unwrap();
        assert_ne!(canonical_label(&star), canonical_label(&p4));
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for p in [8, 12, 16] {
            let k = Family::Complete(p).build().unwrap();
            assert_eq!(canonical_form(&k), k);
            let c = Family::Cycle(p).build().unwrap();
            let label = canonical_label(&c);
            assert_eq!(label.to_graph().g(), p);
        }
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let g = Graph::from_edges(6, &[(0, 3), (3, 5), (5, 1), (1, 4), (4, 2), (2, 0), (0, 5)])
            .unwrap();
        let c = canonical_form(&g);
        assert_eq!(canonical_form(&c), c);
    }
}
