//! Connected graphs and trees up to isomorphism.
//!
//! Small orders are enumerated over all labeled graphs and deduplicated by
//! canonical label. Larger orders extend every class of the previous order
//! by one vertex joined to each nonempty neighbour set and keep the
//! canonically new results. Every connected graph has a non-cut vertex, so
//! extending connected graphs reaches all connected graphs; every tree has a
//! leaf, so extending trees by a leaf reaches all trees.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{canonical_form, canonical_label, CanonicalLabel, Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    AllConnected,
    TreesOnly,
}

impl GraphClass {
    pub fn max_p(self) -> usize {
        match self {
            GraphClass::AllConnected => 8,
            GraphClass::TreesOnly => 10,
        }
    }

    pub fn enumerate(self, p: usize) -> Result<Vec<Graph>, GraphError> {
        match self {
            GraphClass::AllConnected => enumerate_connected(p),
            GraphClass::TreesOnly => enumerate_trees(p),
        }
    }
}

const LABELED_LIMIT: usize = 6;

/// One canonical representative per isomorphism class of connected graphs
/// on `p` vertices, sorted by canonical label.
pub fn enumerate_connected(p: usize) -> Result<Vec<Graph>, GraphError> {
    if !(1..=8).contains(&p) {
        return Err(GraphError::Range {
            what: "p",
            value: p,
            range: "1..=8",
        });
    }
    if p <= LABELED_LIMIT {
        return Ok(labeled_connected(p));
    }
    let parents = enumerate_connected(p - 1)?;
    Ok(augment(&parents, |_| (1u16..1 << (p - 1)).collect()))
}

/// One canonical representative per tree isomorphism class on `p` vertices.
pub fn enumerate_trees(p: usize) -> Result<Vec<Graph>, GraphError> {
    if !(1..=10).contains(&p) {
        return Err(GraphError::Range {
            what: "p",
            value: p,
            range: "1..=10",
        });
    }
    if p == 1 {
        return Ok(vec![Graph::empty(1)?]);
    }
    let parents = enumerate_trees(p - 1)?;
    Ok(augment(&parents, |parent| {
        (0..parent.p()).map(|v| 1u16 << v).collect()
    }))
}

pub(crate) fn labeled_connected(p: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..p).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    let classes: BTreeMap<CanonicalLabel, Graph> = (0..total)
        .into_par_iter()
        .filter_map(|bits| {
            let mut g = Graph::empty(p).expect("1 <= p <= 6");
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    g.set_edge(i, j);
                }
            }
            g.is_connected().then(|| {
                let c = canonical_form(&g);
                (canonical_label(&c), c)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    classes.into_values().collect()
}

/// Extend each parent by a new vertex adjacent to each given neighbour mask.
fn augment<F>(parents: &[Graph], masks: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> Vec<u16> + Sync,
{
    let found: Vec<(CanonicalLabel, Graph)> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let n = parent.p();
            masks(parent).into_iter().map(move |mask| {
                let mut rows = parent.rows().to_vec();
                rows.push(mask);
                for (v, row) in rows.iter_mut().enumerate().take(n) {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << n;
                    }
                }
                let child = canonical_form(&Graph::from_rows(n + 1, &rows));
                (canonical_label(&child), child)
            })
        })
        .collect();
    let classes: BTreeMap<CanonicalLabel, Graph> = found.into_iter().collect();
    classes.into_values().collect()
}
