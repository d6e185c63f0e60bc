use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub name: String,
    #[serde(default)]
    pub framing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    pub marked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("marked arrow `{0}` must join framing vertices")]
    MarkedInternal(String),
}

/// Finite quiver. Vertex and arrow order is significant: it fixes the
/// canonical ordering of paths and cyclic words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    vidx: HashMap<String, usize>,
    aidx: HashMap<String, usize>,
}

impl Quiver {
    /// `vertices` are `(name, is_framing)`, `arrows` are `(name, src, tgt, marked)`.
    pub fn new(vertices: &[(&str, bool)], arrows: &[(&str, &str, &str, bool)]) -> Result<Self, QuiverError> {
        let mut q = Quiver { vertices: vec![], arrows: vec![], vidx: HashMap::new(), aidx: HashMap::new() };
        for (n, f) in vertices {
            q.add_vertex(n, *f)?;
        }
        for (n, s, t, m) in arrows {
            q.add_arrow(n, s, t, *m)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, name: &str, framing: bool) -> Result<usize, QuiverError> {
        if self.vidx.contains_key(name) {
            return Err(QuiverError::DuplicateVertex(name.into()));
        }
        self.vertices.push(Vertex { name: name.into(), framing });
        self.vidx.insert(name.into(), self.vertices.len() - 1);
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, src: &str, tgt: &str, marked: bool) -> Result<usize, QuiverError> {
        if self.aidx.contains_key(name) {
            return Err(QuiverError::DuplicateArrow(name.into()));
        }
        let s = self.vertex(src)?;
        let t = self.vertex(tgt)?;
        if marked && !(self.vertices[s].framing && self.vertices[t].framing) {
            return Err(QuiverError::MarkedInternal(name.into()));
        }
        self.arrows.push(Arrow { name: name.into(), src: s, tgt: t, marked });
        self.aidx.insert(name.into(), self.arrows.len() - 1);
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex(&self, name: &str) -> Result<usize, QuiverError> {
        self.vidx.get(name).copied().ok_or_else(|| QuiverError::UnknownVertex(name.into()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize, QuiverError> {
        self.aidx.get(name).copied().ok_or_else(|| QuiverError::UnknownArrow(name.into()))
    }

    pub fn arrow_names(&self) -> Vec<&str> {
        self.arrows.iter().map(|a| a.name.as_str()).collect()
    }

    pub fn is_framing(&self, v: usize) -> bool {
        self.vertices[v].framing
    }

    /// Internal (non-framing) vertices in declared order.
    pub fn internal_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| !self.vertices[v].framing).collect()
    }

    /// The full subquiver on internal vertices, dropping framing nodes and every arrow touching them.
    pub fn unframed(&self) -> Quiver {
        let mut q = Quiver { vertices: vec![], arrows: vec![], vidx: HashMap::new(), aidx: HashMap::new() };
        for v in &self.vertices {
            if !v.framing {
                q.add_vertex(&v.name, false).unwrap();
            }
        }
        for a in &self.arrows {
            let (s, t) = (&self.vertices[a.src], &self.vertices[a.tgt]);
            if !s.framing && !t.framing {
                q.add_arrow(&a.name, &s.name, &t.name, a.marked).unwrap();
            }
        }
        q
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            vertices: self.vertices.iter().map(|v| v.name.clone()).collect(),
            framing: self.vertices.iter().filter(|v| v.framing).map(|v| v.name.clone()).collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    src: self.vertices[a.src].name.clone(),
                    tgt: self.vertices[a.tgt].name.clone(),
                    marked: a.marked,
                })
                .collect(),
        }
    }

    pub fn from_json(j: &QuiverJson) -> Result<Self, QuiverError> {
        let mut q = Quiver { vertices: vec![], arrows: vec![], vidx: HashMap::new(), aidx: HashMap::new() };
        for v in &j.vertices {
            q.add_vertex(v, j.framing.contains(v))?;
        }
        for a in &j.arrows {
            q.add_arrow(&a.name, &a.src, &a.tgt, a.marked)?;
        }
        Ok(q)
    }

    /// Graphviz rendering; framing nodes are boxes and marked arrows dashed.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{}\" {{\n", name);
        for v in &self.vertices {
            let shape = if v.framing { "box" } else { "circle" };
            s.push_str(&format!("  \"{}\" [shape={}];\n", v.name, shape));
        }
        for a in &self.arrows {
            let style = if a.marked { ", style=dashed, color=red" } else { "" };
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"{}];\n",
                self.vertices[a.src].name, self.vertices[a.tgt].name, a.name, style
            ));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub src: String,
    pub tgt: String,
    #[serde(default)]
    pub marked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub framing: Vec<String>,
    pub arrows: Vec<ArrowJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_arrows() {
        assert_eq!(
            Quiver::new(&[("0", false)], &[("a", "0", "1", false)]),
            Err(QuiverError::UnknownVertex("1".into()))
        );
        assert_eq!(
            Quiver::new(&[("0", false)], &[("a", "0", "0", false), ("a", "0", "0", false)]),
            Err(QuiverError::DuplicateArrow("a".into()))
        );
        assert_eq!(
            Quiver::new(&[("0", false)], &[("a", "0", "0", true)]),
            Err(QuiverError::MarkedInternal("a".into()))
        );
    }

    #[test]
    fn json_round_trip_and_unframed() {
        let q = Quiver::new(
            &[("0", false), ("inf", true)],
            &[("B", "0", "0", false), ("I", "inf", "0", false), ("J", "0", "inf", false), ("A_f", "inf", "inf", true)],
        )
        .unwrap();
        let j = serde_json::to_string(&q.to_json()).unwrap();
        let back = Quiver::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, q);
        let u = q.unframed();
        assert_eq!(u.arrow_names(), vec!["B"]);
        assert!(q.to_dot("t").contains("style=dashed"));
    }
}
