use super::{boundary_label, Edge, ElectricalNetwork};
use crate::error::{Error, Result};
use crate::exactla::{fmt_rational, parse_rational};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// On-disk shape of a network. Boundary vertices are `"b1".."bn"`, weights
/// are `"p/q"` strings and rotations list edge ids counterclockwise.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NetworkDoc {
    pub n: usize,
    #[serde(default)]
    pub internal: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
    #[serde(default)]
    pub rotations: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EdgeDoc {
    pub id: String,
    pub ends: [String; 2],
    pub weight: String,
}

impl ElectricalNetwork {
    pub fn from_doc(doc: &NetworkDoc) -> Result<Self> {
        let n = doc.n;
        let mut index = HashMap::new();
        for (j, name) in doc.internal.iter().enumerate() {
            index.insert(name.as_str(), n + j);
        }
        let lookup = |name: &str| -> Result<usize> {
            if let Some(i) = boundary_label(name) {
                if (1..=n).contains(&i) {
                    return Ok(i - 1);
                }
            }
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Malformed(format!("unknown vertex {name:?}")))
        };
        let mut edges = Vec::with_capacity(doc.edges.len());
        let mut edge_pos = HashMap::new();
        for e in &doc.edges {
            let a = lookup(&e.ends[0])?;
            let b = lookup(&e.ends[1])?;
            let weight = parse_rational(&e.weight)?;
            edge_pos.insert(e.id.as_str(), edges.len());
            edges.push(Edge {
                id: e.id.clone(),
                ends: (a, b),
                weight,
            });
        }
        let mut rotations = vec![Vec::new(); n + doc.internal.len()];
        for (name, ids) in &doc.rotations {
            let v = lookup(name)?;
            rotations[v] = ids
                .iter()
                .map(|id| {
                    edge_pos.get(id.as_str()).copied().ok_or_else(|| {
                        Error::Malformed(format!("rotation of {name} names unknown edge {id:?}"))
                    })
                })
                .collect::<Result<_>>()?;
        }
        ElectricalNetwork::new(n, doc.internal.clone(), edges, rotations)
    }

    pub fn to_doc(&self) -> NetworkDoc {
        let edges = self
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                id: e.id.clone(),
                ends: [self.vertex_name(e.ends.0), self.vertex_name(e.ends.1)],
                weight: fmt_rational(&e.weight),
            })
            .collect();
        let rotations = (0..self.vertex_count())
            .filter(|&v| !self.rotation(v).is_empty())
            .map(|v| {
                let ids = self
                    .rotation(v)
                    .iter()
                    .map(|&e| self.edges()[e].id.clone())
                    .collect();
                (self.vertex_name(v), ids)
            })
            .collect();
        NetworkDoc {
            n: self.n(),
            internal: self.internal().to_vec(),
            edges,
            rotations,
            colors: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: NetworkDoc =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("network documents always serialize")
    }
}
