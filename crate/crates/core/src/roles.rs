use std::collections::BTreeMap;

use crate::graph::Vertex;

/// One role label per vertex. Because every vertex carries exactly one
/// label, the roles partition the vertex set by construction.
///
/// Labels are colon-separated paths such as `original:3`,
/// `clause:2:lit:1:a` or `pendant`. The first segment is the role kind.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexRoleMap {
    labels: Vec<String>,
}

impl VertexRoleMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends the label for the next vertex id. Reductions allocate vertices
    /// and labels in lockstep.
    pub fn push(&mut self, label: impl Into<String>) -> Vertex {
        self.labels.push(label.into());
        self.labels.len()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v - 1]
    }

    /// Role kind: the first `:`-separated segment of the label.
    pub fn kind(&self, v: Vertex) -> &str {
        self.label(v).split(':').next().unwrap_or("")
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &str)> {
        self.labels.iter().enumerate().map(|(i, l)| (i + 1, l.as_str()))
    }

    /// Vertex with exactly this label, if any.
    pub fn find(&self, label: &str) -> Option<Vertex> {
        self.iter().find(|&(_, l)| l == label).map(|(v, _)| v)
    }

    pub fn vertices_of_kind(&self, kind: &str) -> Vec<Vertex> {
        self.iter()
            .filter(|&(v, _)| self.kind(v) == kind)
            .map(|(v, _)| v)
            .collect()
    }

    /// Vertices grouped by role kind.
    pub fn groups(&self) -> BTreeMap<&str, Vec<Vertex>> {
        let mut out: BTreeMap<&str, Vec<Vertex>> = BTreeMap::new();
        for (v, _) in self.iter() {
            out.entry(self.kind(v)).or_default().push(v);
        }
        out
    }
}
