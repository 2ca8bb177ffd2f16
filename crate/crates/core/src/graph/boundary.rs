//! Pendant-vertex boundary conditions and the interior subgraph they induce.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// y'(0) = 0 at the pendant end.
    Neumann,
    /// y(0) = 0 at the pendant end.
    Dirichlet,
}

/// Condition per pendant vertex. Pendant vertices not listed are Neumann.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundarySpec {
    conditions: BTreeMap<usize, Condition>,
}

impl BoundarySpec {
    /// Neumann at every pendant vertex.
    pub fn neumann() -> Self {
        Self::default()
    }

    /// Dirichlet at every pendant vertex of `g`.
    pub fn dirichlet(g: &Graph) -> Self {
        Self {
            conditions: g
                .pendant_vertices()
                .into_iter()
                .map(|v| (v, Condition::Dirichlet))
                .collect(),
        }
    }

    /// Dirichlet at the listed vertices, which must all be pendant in `g`.
    pub fn with_dirichlet(g: &Graph, vertices: &[usize]) -> Result<Self, GraphError> {
        let mut spec = Self::default();
        for &v in vertices {
            spec.set(g, v, Condition::Dirichlet)?;
        }
        Ok(spec)
    }

    pub fn set(&mut self, g: &Graph, v: usize, c: Condition) -> Result<(), GraphError> {
        if v >= g.p() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                p: g.p(),
            });
        }
        if g.degree(v) != 1 {
            return Err(GraphError::NotPendant(v));
        }
        self.conditions.insert(v, c);
        Ok(())
    }

    /// Condition at pendant vertex `v`.
    pub fn condition(&self, v: usize) -> Condition {
        self.conditions
            .get(&v)
            .copied()
            .unwrap_or(Condition::Neumann)
    }

    pub fn dirichlet_vertices(&self) -> Vec<usize> {
        self.conditions
            .iter()
            .filter(|(_, c)| **c == Condition::Dirichlet)
            .map(|(v, _)| *v)
            .collect()
    }

    /// Number of Dirichlet pendant vertices.
    pub fn r(&self) -> usize {
        self.dirichlet_vertices().len()
    }

    /// Checks that every listed vertex is pendant in `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        for &v in self.conditions.keys() {
            if v >= g.p() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    p: g.p(),
                });
            }
            if g.degree(v) != 1 {
                return Err(GraphError::NotPendant(v));
            }
        }
        Ok(())
    }
}

/// The graph left after deleting Dirichlet pendant vertices, with each
/// surviving vertex's degree measured in the original graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorSubgraph {
    pub graph: Graph,
    pub degrees: Vec<usize>,
    /// Original index of each surviving vertex.
    pub vertices: Vec<usize>,
}

impl Graph {
    pub fn interior_subgraph(&self, bc: &BoundarySpec) -> Result<InteriorSubgraph, GraphError> {
        bc.validate(self)?;
        let removed = bc.dirichlet_vertices();
        let vertices: Vec<usize> = (0..self.p()).filter(|v| !removed.contains(v)).collect();
        Ok(InteriorSubgraph {
            graph: self.induced(&vertices),
            degrees: vertices.iter().map(|&v| self.degree(v)).collect(),
            vertices,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn double_star_interior_is_p2() {
        let g = Family::DoubleStar(3, 4).build().unwrap();
        let sub = g.interior_subgraph(&BoundarySpec::dirichlet(&g)).unwrap();
        assert_eq!(sub.graph.edges(), vec![(0, 1)]);
        assert_eq!(sub.degrees, vec![3, 4]);
    }

    #[test]
    fn caterpillar_interior_is_p3() {
        let g = Family::Caterpillar(2, 3, 4).build().unwrap();
        let sub = g.interior_subgraph(&BoundarySpec::dirichlet(&g)).unwrap();
        assert_eq!(sub.graph.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(sub.degrees, vec![2, 3, 4]);
    }

    #[test]
    fn neumann_keeps_everything() {
        let g = Family::Star(5).build().unwrap();
        let sub = g.interior_subgraph(&BoundarySpec::neumann()).unwrap();
        assert_eq!(sub.graph, g);
        assert_eq!(sub.degrees, g.degrees());
    }

    #[test]
    fn recorded_degrees_dominate() {
        let g = Family::Caterpillar(3, 4, 2).build().unwrap();
        let bc = BoundarySpec::with_dirichlet(&g, &[3, 5, 7]).unwrap();
        let sub = g.interior_subgraph(&bc).unwrap();
        for (i, &v) in sub.vertices.iter().enumerate() {
            let lost = bc.dirichlet_vertices().iter().any(|&d| g.has_edge(v, d));
            assert!(sub.degrees[i] >= sub.graph.degree(i));
            assert_eq!(sub.degrees[i] == sub.graph.degree(i), !lost);
        }
    }

    #[test]
    fn errors() {
        let p2 = Family::Path(2).build().unwrap();
        let sub = p2.interior_subgraph(&BoundarySpec::dirichlet(&p2)).unwrap();
        assert_eq!(sub.graph.p(), 0);
        let c3 = Family::Cycle(3).build().unwrap();
        assert_eq!(
            BoundarySpec::with_dirichlet(&c3, &[0]),
            Err(GraphError::NotPendant(0))
        );
    }
}
