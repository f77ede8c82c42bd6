//! JSON interchange format for diagrams.
//!
//! ```json
//! {"kind":"jacobi",
//!  "vertices":[{"id":0,"class":"univalent"},{"id":3,"class":"trivalent","orient":[1,3,5]}],
//!  "edges":[{"id":0,"from":0,"to":3,"number":2}],
//!  "univalent_order":[0]}
//! ```
//!
//! Half-edge `2 * edge_id` is the `from` end of an edge, `2 * edge_id + 1`
//! its `to` end. Jacobi vertices are `univalent` or `trivalent`; BCR
//! vertices and edges are `internal` or `external`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::bcr::{validate_bcr, BcrDiagram, BcrGraph, EdgeClass, VertexClass};
use super::jacobi::JacobiDiagram;
use super::DiagramError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiagramFile {
    pub kind: String,
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub univalent_order: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexEntry {
    pub id: u64,
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orient: Option<[u64; 3]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EdgeEntry {
    pub id: u64,
    pub from: u64,
    pub to: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub number: Option<u32>,
}

#[derive(Clone, Debug)]
pub enum AnyDiagram {
    Jacobi(JacobiDiagram),
    Bcr(BcrDiagram),
}

fn fmt_err(msg: impl Into<String>) -> DiagramError {
    DiagramError::Format(msg.into())
}

pub fn jacobi_to_file(d: &JacobiDiagram) -> DiagramFile {
    let u = d.univalent_count();
    let mut vertices: Vec<VertexEntry> = (0..u)
        .map(|v| VertexEntry {
            id: v as u64,
            class: "univalent".into(),
            orient: None,
        })
        .collect();
    for (i, o) in d.orientations().iter().enumerate() {
        vertices.push(VertexEntry {
            id: (u + i) as u64,
            class: "trivalent".into(),
            orient: Some(o.map(|h| h as u64)),
        });
    }
    let nums = d.numbering();
    let edges = d
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &[a, b])| EdgeEntry {
            id: e as u64,
            from: a as u64,
            to: b as u64,
            class: None,
            number: nums.map(|n| n[e]),
        })
        .collect();
    DiagramFile {
        kind: "jacobi".into(),
        vertices,
        edges,
        univalent_order: Some((0..u as u64).collect()),
    }
}

pub fn bcr_to_file(d: &BcrDiagram) -> DiagramFile {
    let g = d.graph();
    let cls = |internal: bool| if internal { "internal" } else { "external" }.to_string();
    DiagramFile {
        kind: "bcr".into(),
        vertices: g
            .vertices
            .iter()
            .enumerate()
            .map(|(v, c)| VertexEntry {
                id: v as u64,
                class: cls(*c == VertexClass::Internal),
                orient: None,
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| EdgeEntry {
                id: i as u64,
                from: e.from as u64,
                to: e.to as u64,
                class: Some(cls(e.class == EdgeClass::Internal)),
                number: None,
            })
            .collect(),
        univalent_order: None,
    }
}

pub fn to_json(d: &AnyDiagram) -> String {
    let f = match d {
        AnyDiagram::Jacobi(j) => jacobi_to_file(j),
        AnyDiagram::Bcr(b) => bcr_to_file(b),
    };
    serde_json::to_string(&f).expect("serializable")
}

pub fn parse(text: &str) -> Result<AnyDiagram, DiagramError> {
    let f: DiagramFile = serde_json::from_str(text).map_err(|e| fmt_err(e.to_string()))?;
    from_file(&f)
}

pub fn from_file(f: &DiagramFile) -> Result<AnyDiagram, DiagramError> {
    match f.kind.as_str() {
        "jacobi" => jacobi_from_file(f).map(AnyDiagram::Jacobi),
        "bcr" => bcr_from_file(f).map(AnyDiagram::Bcr),
        k => Err(fmt_err(format!("unknown kind {k:?}"))),
    }
}

fn index_of(
    ids: impl Iterator<Item = u64>,
    what: &str,
) -> Result<HashMap<u64, usize>, DiagramError> {
    let mut m = HashMap::new();
    for (i, id) in ids.enumerate() {
        if m.insert(id, i).is_some() {
            return Err(fmt_err(format!("duplicate {what} id {id}")));
        }
    }
    Ok(m)
}

fn jacobi_from_file(f: &DiagramFile) -> Result<JacobiDiagram, DiagramError> {
    let mut uni = Vec::new();
    let mut tri = Vec::new();
    for v in &f.vertices {
        match v.class.as_str() {
            "univalent" => uni.push(v),
            "trivalent" => tri.push(v),
            c => return Err(fmt_err(format!("unknown vertex class {c:?}"))),
        }
    }
    index_of(f.vertices.iter().map(|v| v.id), "vertex")?;
    let order: Vec<u64> = match &f.univalent_order {
        Some(o) => o.clone(),
        None => uni.iter().map(|v| v.id).collect(),
    };
    let mut sorted_order = order.clone();
    sorted_order.sort_unstable();
    let mut uni_ids: Vec<u64> = uni.iter().map(|v| v.id).collect();
    uni_ids.sort_unstable();
    if sorted_order != uni_ids {
        return Err(DiagramError::BadOrder(
            "univalent_order must list every univalent vertex exactly once".into(),
        ));
    }
    let mut vmap: HashMap<u64, usize> = HashMap::new();
    for (i, id) in order.iter().enumerate() {
        vmap.insert(*id, i);
    }
    for (i, v) in tri.iter().enumerate() {
        vmap.insert(v.id, order.len() + i);
    }
    let emap = index_of(f.edges.iter().map(|e| e.id), "edge")?;
    let mut edges = Vec::with_capacity(f.edges.len());
    for (i, e) in f.edges.iter().enumerate() {
        let a = *vmap
            .get(&e.from)
            .ok_or(DiagramError::VertexOutOfRange {
                edge: i,
                vertex: e.from as usize,
            })?;
        let b = *vmap
            .get(&e.to)
            .ok_or(DiagramError::VertexOutOfRange {
                edge: i,
                vertex: e.to as usize,
            })?;
        edges.push([a, b]);
    }
    let orientation = if tri.iter().all(|v| v.orient.is_some()) {
        let mut out = Vec::with_capacity(tri.len());
        for (i, v) in tri.iter().enumerate() {
            let mut o = [0usize; 3];
            for (j, &h) in v.orient.unwrap().iter().enumerate() {
                let e = *emap
                    .get(&(h / 2))
                    .ok_or(DiagramError::BadOrientation(order.len() + i))?;
                o[j] = 2 * e + (h % 2) as usize;
            }
            out.push(o);
        }
        Some(out)
    } else if tri.iter().any(|v| v.orient.is_some()) {
        return Err(fmt_err(
            "either all or no trivalent vertices carry an orientation",
        ));
    } else {
        None
    };
    let d = JacobiDiagram::new(order.len(), tri.len(), edges, orientation)?;
    let nums: Vec<Option<u32>> = f.edges.iter().map(|e| e.number).collect();
    if nums.iter().all(|n| n.is_some()) && !nums.is_empty() {
        d.with_numbering(nums.into_iter().map(|n| n.unwrap()).collect())
    } else if nums.iter().any(|n| n.is_some()) {
        Err(DiagramError::BadNumbering(
            "some edges are unnumbered".into(),
        ))
    } else {
        Ok(d)
    }
}

fn bcr_from_file(f: &DiagramFile) -> Result<BcrDiagram, DiagramError> {
    let vmap = index_of(f.vertices.iter().map(|v| v.id), "vertex")?;
    let class = |s: &str| match s {
        "internal" => Ok(true),
        "external" => Ok(false),
        c => Err(fmt_err(format!("unknown class {c:?}"))),
    };
    let mut g = BcrGraph::default();
    for v in &f.vertices {
        g.add_vertex(if class(&v.class)? {
            VertexClass::Internal
        } else {
            VertexClass::External
        });
    }
    for (i, e) in f.edges.iter().enumerate() {
        let a = *vmap
            .get(&e.from)
            .ok_or(DiagramError::VertexOutOfRange {
                edge: i,
                vertex: e.from as usize,
            })?;
        let b = *vmap
            .get(&e.to)
            .ok_or(DiagramError::VertexOutOfRange {
                edge: i,
                vertex: e.to as usize,
            })?;
        let c = e
            .class
            .as_deref()
            .ok_or_else(|| fmt_err("bcr edges need a class"))?;
        g.add_edge(
            a,
            b,
            if class(c)? {
                EdgeClass::Internal
            } else {
                EdgeClass::External
            },
        );
    }
    validate_bcr(g)
}
