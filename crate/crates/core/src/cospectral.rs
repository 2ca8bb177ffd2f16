//! Signature database: graphs grouped by (p, g, monic Neumann pencil).

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{
    adjacency_charpoly, laplacian_pencil_poly, monic, IntPoly, PolyError, RatPoly,
};
use crate::graph::{canonical_label, parse_graph6, CanonicalLabel, Graph, GraphClass, GraphError};

pub const DB_FORMAT: &str = "specgraph-signature-db";
pub const DB_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CospectralError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("graph {0} is disconnected")]
    Disconnected(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("database version {found} is not supported (expected {DB_VERSION})")]
    Version { found: u32 },
    #[error("line {line}: graph {graph} does not have the key it is stored under")]
    KeyMismatch { line: usize, graph: String },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignatureKey {
    pub p: usize,
    pub g: usize,
    pub monic: RatPoly,
}

/// The Neumann pencil det(zD - A) of a connected graph. A single vertex
/// has degree 0; following the usual convention for isolated vertices its
/// normalized adjacency is [1], giving z - 1.
pub fn neumann_pencil(g: &Graph) -> Result<IntPoly, CospectralError> {
    if !g.is_connected() {
        return Err(CospectralError::Disconnected(g.to_string()));
    }
    if g.p() == 1 {
        return Ok(IntPoly::from_i64s(&[-1, 1]));
    }
    Ok(laplacian_pencil_poly(g, &g.degrees())?)
}

pub fn signature(g: &Graph) -> Result<SignatureKey, CospectralError> {
    Ok(SignatureKey {
        p: g.p(),
        g: g.g(),
        monic: monic(&neumann_pencil(g)?)?,
    })
}

/// Enumeration parameters a database was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Provenance {
    pub class: GraphClassTag,
    pub p_min: usize,
    pub p_max: usize,
}

/// Serializable mirror of [`GraphClass`] with a total order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClassTag {
    AllConnected,
    TreesOnly,
}

impl From<GraphClass> for GraphClassTag {
    fn from(c: GraphClass) -> Self {
        match c {
            GraphClass::AllConnected => GraphClassTag::AllConnected,
            GraphClass::TreesOnly => GraphClassTag::TreesOnly,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    provenance: Vec<Provenance>,
}

#[derive(Serialize, Deserialize)]
struct Record {
    p: usize,
    g: usize,
    monic: RatPoly,
    graphs: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SignatureDatabase {
    buckets: BTreeMap<SignatureKey, BTreeSet<CanonicalLabel>>,
    provenance: BTreeSet<Provenance>,
}

impl SignatureDatabase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, g: &Graph) -> Result<SignatureKey, CospectralError> {
        let key = signature(g)?;
        self.buckets
            .entry(key.clone())
            .or_default()
            .insert(canonical_label(g));
        Ok(key)
    }

    /// Multiset union of buckets and provenance.
    pub fn merge(&mut self, other: SignatureDatabase) {
        for (k, labels) in other.buckets {
            self.buckets.entry(k).or_default().extend(labels);
        }
        self.provenance.extend(other.provenance);
    }

    pub fn buckets(&self) -> impl Iterator<Item = (&SignatureKey, &BTreeSet<CanonicalLabel>)> {
        self.buckets.iter()
    }

    pub fn get(&self, key: &SignatureKey) -> Option<&BTreeSet<CanonicalLabel>> {
        self.buckets.get(key)
    }

    pub fn bucket_count(&self) -> usize {
        self.buckets.len()
    }

    pub fn graph_count(&self) -> usize {
        self.buckets.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    pub fn provenance(&self) -> impl Iterator<Item = &Provenance> {
        self.provenance.iter()
    }

    /// All stored graphs, ordered by key then label.
    pub fn graphs(&self) -> impl Iterator<Item = (&SignatureKey, &CanonicalLabel)> {
        self.buckets
            .iter()
            .flat_map(|(k, ls)| ls.iter().map(move |l| (k, l)))
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<(), CospectralError> {
        let header = Header {
            format: DB_FORMAT.into(),
            version: DB_VERSION,
            provenance: self.provenance.iter().copied().collect(),
        };
        writeln!(
            w,
            "{}",
            serde_json::to_string(&header).expect("header serializes")
        )?;
        for (key, labels) in &self.buckets {
            let rec = Record {
                p: key.p,
                g: key.g,
                monic: key.monic.clone(),
                graphs: labels.iter().map(|l| l.as_str().to_owned()).collect(),
            };
            writeln!(
                w,
                "{}",
                serde_json::to_string(&rec).expect("record serializes")
            )?;
        }
        Ok(())
    }

    /// Reads one or more concatenated databases. Every stored graph's key is
    /// recomputed and must match its record.
    pub fn read_jsonl<R: BufRead>(r: R) -> Result<Self, CospectralError> {
        let mut db = SignatureDatabase::new();
        let mut seen_header = false;
        for (i, line) in r.lines().enumerate() {
            let line_no = i + 1;
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |msg: String| CospectralError::Format { line: line_no, msg };
            let value: serde_json::Value =
                serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
            if value.get("format").is_some() {
                let h: Header = serde_json::from_value(value).map_err(|e| bad(e.to_string()))?;
                if h.format != DB_FORMAT {
                    return Err(bad(format!("unknown format {:?}", h.format)));
                }
                if h.version != DB_VERSION {
                    return Err(CospectralError::Version { found: h.version });
                }
                db.provenance.extend(h.provenance);
                seen_header = true;
                continue;
            }
            if !seen_header {
                return Err(bad("record before header".into()));
            }
            let rec: Record = serde_json::from_value(value).map_err(|e| bad(e.to_string()))?;
            let key = SignatureKey {
                p: rec.p,
                g: rec.g,
                monic: rec.monic,
            };
            for s in rec.graphs {
                let g = parse_graph6(&s).map_err(|e| bad(e.to_string()))?;
                let label = canonical_label(&g);
                if signature(&g)? != key {
                    return Err(CospectralError::KeyMismatch {
                        line: line_no,
                        graph: s,
                    });
                }
                db.buckets.entry(key.clone()).or_default().insert(label);
            }
        }
        if !seen_header {
            return Err(CospectralError::Format {
                line: 0,
                msg: "missing header".into(),
            });
        }
        Ok(db)
    }

    pub fn save(&self, path: &Path) -> Result<(), CospectralError> {
        let mut w = BufWriter::new(File::create(path)?);
        self.write_jsonl(&mut w)?;
        w.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, CospectralError> {
        Self::read_jsonl(BufReader::new(File::open(path)?))
    }
}

/// Signatures of every class-`class` graph with p_min <= p <= p_max.
pub fn build_database(
    p_min: usize,
    p_max: usize,
    class: GraphClass,
) -> Result<SignatureDatabase, CospectralError> {
    if p_min == 0 || p_min > p_max || p_max > class.max_p() {
        return Err(GraphError::Range {
            what: "p",
            value: if p_min == 0 { 0 } else { p_max },
            range: match class {
                GraphClass::AllConnected => "1..=8",
                GraphClass::TreesOnly => "1..=10",
            },
        }
        .into());
    }
    let mut db = SignatureDatabase::new();
    for p in p_min..=p_max {
        let graphs = class.enumerate(p)?;
        let keyed = graphs
            .par_iter()
            .map(|g| Ok((signature(g)?, canonical_label(g))))
            .collect::<Result<Vec<_>, CospectralError>>()?;
        for (k, l) in keyed {
            db.buckets.entry(k).or_default().insert(l);
        }
    }
    db.provenance.insert(Provenance {
        class: class.into(),
        p_min,
        p_max,
    });
    Ok(db)
}

/// Buckets holding at least two graphs, in key order.
pub fn find_mates(db: &SignatureDatabase) -> Vec<(SignatureKey, Vec<CanonicalLabel>)> {
    db.buckets
        .iter()
        .filter(|(_, ls)| ls.len() >= 2)
        .map(|(k, ls)| (k.clone(), ls.iter().cloned().collect()))
        .collect()
}

/// Nonisomorphic pairs on `p` vertices with equal adjacency characteristic
/// polynomials.
pub fn adjacency_cospectral_pairs(
    p: usize,
    class: GraphClass,
) -> Result<Vec<(CanonicalLabel, CanonicalLabel)>, CospectralError> {
    let limit = match class {
        GraphClass::AllConnected => 7,
        GraphClass::TreesOnly => 8,
    };
    if p > limit {
        return Err(GraphError::Range {
            what: "p",
            value: p,
            range: if limit == 7 { "1..=7" } else { "1..=8" },
        }
        .into());
    }
    let graphs = class.enumerate(p)?;
    let keyed: Vec<(IntPoly, CanonicalLabel)> = graphs
        .par_iter()
        .map(|g| (adjacency_charpoly(g), canonical_label(g)))
        .collect();
    let mut groups: BTreeMap<Vec<String>, Vec<CanonicalLabel>> = BTreeMap::new();
    for (poly, label) in keyed {
        let key = poly.coeffs().iter().map(|c| c.to_string()).collect();
        groups.entry(key).or_default().push(label);
    }
    let mut pairs = Vec::new();
    for mut labels in groups.into_values() {
        labels.sort();
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                pairs.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    pairs.sort();
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn key_of(f: Family) -> SignatureKey {
        signature(&f.build().unwrap()).unwrap()
    }

    #[test]
    fn star_and_square_differ_only_in_g() {
        let star = key_of(Family::Star(4));
        let square = key_of(Family::Cycle(4));
        assert_eq!(star.monic, square.monic);
        assert_eq!(star.monic, monic(&"z^4 - z^2".parse().unwrap()).unwrap());
        assert_eq!((star.p, star.g, square.g), (4, 3, 4));
        assert_ne!(star, square);
        let p3 = key_of(Family::Path(3));
        assert_eq!(p3.monic, monic(&"z^3 - z".parse().unwrap()).unwrap());
    }

    #[test]
    fn single_vertex_signature() {
        let k1 = Graph::empty(1).unwrap();
        let key = signature(&k1).unwrap();
        assert_eq!(key.monic.degree(), Some(1));
        assert!(signature(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn small_database_round_trip() {
        let db = build_database(1, 4, GraphClass::AllConnected).unwrap();
        assert_eq!(db.graph_count(), 10);
        assert!(find_mates(&db).is_empty());
        let mut buf = Vec::new();
        db.write_jsonl(&mut buf).unwrap();
        let back = SignatureDatabase::read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(back, db);
        // concatenation merges
        let mut twice = buf.clone();
        twice.extend_from_slice(&buf);
        assert_eq!(SignatureDatabase::read_jsonl(twice.as_slice()).unwrap(), db);
    }

    #[test]
    fn corrupt_files_are_rejected() {
        let db = build_database(3, 3, GraphClass::AllConnected).unwrap();
        let mut buf = Vec::new();
        db.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let bumped = text.replace("\"version\":1", "\"version\":2");
        assert!(matches!(
            SignatureDatabase::read_jsonl(bumped.as_bytes()),
            Err(CospectralError::Version { found: 2 })
        ));
        let headless: String = text.lines().skip(1).collect::<Vec<_>>().join("\n");
        assert!(SignatureDatabase::read_jsonl(headless.as_bytes()).is_err());
        // swap the graph lists of the two records
        let mut lines: Vec<serde_json::Value> = text
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        let first = lines[1]["graphs"].clone();
        lines[1]["graphs"] = lines[2]["graphs"].clone();
        lines[2]["graphs"] = first;
        let swapped: String = lines.iter().map(|v| format!("{v}\n")).collect();
        assert!(matches!(
            SignatureDatabase::read_jsonl(swapped.as_bytes()),
            Err(CospectralError::KeyMismatch { line: 2, .. })
        ));
    }

    #[test]
    fn range_checks() {
        assert!(build_database(1, 9, GraphClass::AllConnected).is_err());
        assert!(build_database(0, 3, GraphClass::TreesOnly).is_err());
        assert!(adjacency_cospectral_pairs(8, GraphClass::AllConnected).is_err());
        assert!(adjacency_cospectral_pairs(7, GraphClass::TreesOnly)
            .unwrap()
            .is_empty());
    }
}
