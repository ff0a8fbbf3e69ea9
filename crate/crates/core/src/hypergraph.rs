//! Hypergraphs with an indexed edge multiset.
//!
//! Vertices are positive integer labels. Edges are identified by their
//! position in the edge list, never by their vertex set, so parallel edges
//! stay distinguishable. Subhypergraphs keep the parent's vertex labels and
//! record, per edge, the parent edge it was cut from.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::IncidenceGraph;

/// A vertex label.
pub type Vertex = u32;

/// Position of an edge in its hypergraph's edge list (0-based).
///
/// Displayed 1-based as `e<i>`, which is how edges appear in every text
/// format of this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn from_number(number: usize) -> Option<EdgeId> {
        number.checked_sub(1).map(EdgeId)
    }

    /// The 1-based edge number.
    pub fn number(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.number())
    }
}

/// An incident vertex/edge pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    pub vertex: Vertex,
    pub edge: EdgeId,
}

impl Flag {
    pub fn new(vertex: Vertex, edge: EdgeId) -> Self {
        Flag { vertex, edge }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("hypergraph has no vertices")]
    NoVertices,
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(Vertex),
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: EdgeId },
    #[error("edge {edge} contains unknown vertex {vertex}")]
    UnknownVertex { edge: EdgeId, vertex: Vertex },
    #[error("edge {edge} lists vertex {vertex} twice")]
    RepeatedVertex { edge: EdgeId, vertex: Vertex },
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("cannot induce on an empty vertex set")]
    EmptyKeepSet,
    #[error("vertex {0} is not in the hypergraph")]
    NotAVertex(Vertex),
}

/// A finite hypergraph: a non-empty vertex set and an ordered list of
/// non-empty edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    vertices: Vec<Vertex>,
    edges: Vec<Vec<Vertex>>,
}

/// A subhypergraph together with the parent edge behind each of its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubHypergraph {
    pub hypergraph: Hypergraph,
    pub parent_edges: Vec<EdgeId>,
}

/// Vertex classes of a hypergraph and the edges living in each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Sorted vertex classes, ordered by their smallest vertex.
    pub classes: Vec<Vec<Vertex>>,
    /// Edge indices whose vertices lie in the matching class.
    pub edges: Vec<Vec<EdgeId>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: Vertex) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&v).is_ok())
    }
}

impl Hypergraph {
    /// Builds a hypergraph on the given vertex labels. Edge vertex lists may
    /// come in any order; they are stored sorted.
    pub fn new<I>(vertices: I, edges: Vec<Vec<Vertex>>) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort_unstable();
        if vs.is_empty() {
            return Err(HypergraphError::NoVertices);
        }
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateLabel(w[0]));
        }
        let mut stored = Vec::with_capacity(edges.len());
        for (j, mut e) in edges.into_iter().enumerate() {
            let id = EdgeId(j);
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge { edge: id });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex { edge: id, vertex: w[0] });
            }
            if let Some(&x) = e.iter().find(|x| vs.binary_search(x).is_err()) {
                return Err(HypergraphError::UnknownVertex { edge: id, vertex: x });
            }
            stored.push(e);
        }
        Ok(Hypergraph { vertices: vs, edges: stored })
    }

    /// A hypergraph on vertices `1..=n`.
    pub fn with_order(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self, HypergraphError> {
        Self::new(1..=n as Vertex, edges)
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge(&self, id: EdgeId) -> &[Vertex] {
        &self.edges[id.0]
    }

    pub fn has_edge(&self, id: EdgeId) -> bool {
        id.0 < self.edges.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of `v` in the sorted vertex list.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn is_incident(&self, v: Vertex, e: EdgeId) -> bool {
        self.has_edge(e) && self.edges[e.0].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            for v in e {
                deg[self.vertices.binary_search(v).unwrap()] += 1;
            }
        }
        deg
    }

    pub fn incident_edges(&self, v: Vertex) -> Vec<EdgeId> {
        self.edge_ids().filter(|&e| self.is_incident(v, e)).collect()
    }

    pub fn neighbours(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .flat_map(|e| e.iter().copied())
            .filter(|&w| w != v)
            .collect()
    }

    /// All flags, edge by edge.
    pub fn flags(&self) -> impl Iterator<Item = Flag> + '_ {
        self.edges.iter().enumerate().flat_map(|(j, e)| e.iter().map(move |&v| Flag::new(v, EdgeId(j))))
    }

    pub fn flag_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn incidence_graph(&self) -> IncidenceGraph {
        IncidenceGraph::new(self)
    }

    /// The subhypergraph induced by `keep`: each edge is intersected with
    /// `keep` and edges that become empty are dropped.
    pub fn induced_subhypergraph(&self, keep: &[Vertex]) -> Result<SubHypergraph, HypergraphError> {
        let mut keep: Vec<Vertex> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(HypergraphError::EmptyKeepSet);
        }
        if let Some(&v) = keep.iter().find(|&&v| !self.contains_vertex(v)) {
            return Err(HypergraphError::NotAVertex(v));
        }
        let mut edges = Vec::new();
        let mut parent_edges = Vec::new();
        for (j, e) in self.edges.iter().enumerate() {
            let cut: Vec<Vertex> = e.iter().copied().filter(|v| keep.binary_search(v).is_ok()).collect();
            if !cut.is_empty() {
                edges.push(cut);
                parent_edges.push(EdgeId(j));
            }
        }
        Ok(SubHypergraph { hypergraph: Hypergraph { vertices: keep, edges }, parent_edges })
    }

    /// `H \ S`: the subhypergraph induced by the complement of `remove`.
    pub fn delete_vertices(&self, remove: &[Vertex]) -> Result<SubHypergraph, HypergraphError> {
        let keep: Vec<Vertex> = self.vertices.iter().copied().filter(|v| !remove.contains(v)).collect();
        self.induced_subhypergraph(&keep)
    }

    /// `H - E'`: same vertices, listed edges dropped.
    pub fn remove_edges(&self, drop: &[EdgeId]) -> Result<SubHypergraph, HypergraphError> {
        if let Some(bad) = drop.iter().find(|e| !self.has_edge(**e)) {
            return Err(HypergraphError::EdgeOutOfRange(bad.number()));
        }
        let mut edges = Vec::new();
        let mut parent_edges = Vec::new();
        for (j, e) in self.edges.iter().enumerate() {
            if !drop.contains(&EdgeId(j)) {
                edges.push(e.clone());
                parent_edges.push(EdgeId(j));
            }
        }
        Ok(SubHypergraph { hypergraph: Hypergraph { vertices: self.vertices.clone(), edges }, parent_edges })
    }

    /// A copy with extra edges appended after the existing ones.
    pub fn with_extra_edges(&self, extra: &[Vec<Vertex>]) -> Result<Hypergraph, HypergraphError> {
        let mut edges = self.edges.clone();
        edges.extend(extra.iter().cloned());
        Hypergraph::new(self.vertices.iter().copied(), edges)
    }

    /// Connected components, computed on the incidence graph. Isolated
    /// vertices form singleton classes.
    pub fn connected_components(&self) -> Components {
        let inc = self.incidence_graph();
        let labels = inc.graph().component_labels();
        let nv = self.order();
        let mut class_index = vec![usize::MAX; labels.iter().max().map_or(0, |m| m + 1)];
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            let l = labels[i];
            if class_index[l] == usize::MAX {
                class_index[l] = classes.len();
                classes.push(Vec::new());
            }
            classes[class_index[l]].push(v);
        }
        let mut edges = vec![Vec::new(); classes.len()];
        for j in 0..self.size() {
            let l = labels[nv + j];
            edges[class_index[l]].push(EdgeId(j));
        }
        Components { classes, edges }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count() == 1
    }

    /// Serializes to the `hg` text format. Vertex labels are renumbered
    /// `1..=n` in increasing order; for hypergraphs whose labels already
    /// are `1..=n` this is the identity.
    pub fn to_text(&self) -> String {
        let mut out = format!("hg {} {}\n", self.order(), self.size());
        for e in &self.edges {
            let line: Vec<String> =
                e.iter().map(|v| (self.vertices.binary_search(v).unwrap() + 1).to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Hypergraph {
    /// Compact form `<V={1,2,3}; {1,2},{2,3}>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<V={}; ", set_string(&self.vertices))?;
        let es: Vec<String> = self.edges.iter().map(|e| set_string(e)).collect();
        write!(f, "{}>", es.join(","))
    }
}

pub(crate) fn set_string(vs: &[Vertex]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}
