//! Vertex cuts and their structural checks.

use thiserror::Error;

use crate::hypergraph::{set_string, EdgeId, Hypergraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CutError {
    #[error("a vertex cut must be a non-empty proper subset of the vertices")]
    BadSize,
    #[error("vertex {0} is not in the hypergraph")]
    NotAVertex(Vertex),
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("removing {0} leaves the hypergraph connected")]
    NotACut(String),
    #[error("cut {set} violates the cut lemma: {detail}")]
    Lemma { set: String, detail: String },
}

/// A vertex cut `S` of a connected hypergraph with the components of
/// `H \ S` and the data the reduction rules need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCut {
    set: Vec<Vertex>,
    components: Vec<Vec<Vertex>>,
    minimal: bool,
    degrees: Vec<usize>,
    pair_edges: Vec<EdgeId>,
}

fn disconnects(h: &Hypergraph, set: &[Vertex]) -> bool {
    set.len() + 2 <= h.order()
        && h.delete_vertices(set).map(|s| s.hypergraph.connected_components().count() >= 2).unwrap_or(false)
}

impl VertexCut {
    /// Validates `set` as a vertex cut of the connected hypergraph `h` and
    /// checks the structural lemma for it.
    pub fn new(h: &Hypergraph, set: &[Vertex]) -> Result<Self, CutError> {
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.is_empty() || set.len() >= h.order() {
            return Err(CutError::BadSize);
        }
        if let Some(&v) = set.iter().find(|&&v| !h.contains_vertex(v)) {
            return Err(CutError::NotAVertex(v));
        }
        if !h.is_connected() {
            return Err(CutError::Disconnected);
        }
        if !disconnects(h, &set) {
            return Err(CutError::NotACut(set_string(&set)));
        }
        let components = h.delete_vertices(&set).expect("proper subset").hypergraph.connected_components().classes;
        let minimal = (1..(1u64 << set.len()) - 1).all(|mask| {
            let sub: Vec<Vertex> =
                set.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            !disconnects(h, &sub)
        });
        let degrees = set.iter().map(|&v| h.degree(v)).collect();
        let pair_edges =
            if set.len() >= 2 { h.edge_ids().filter(|&e| h.edge(e) == set.as_slice()).collect() } else { Vec::new() };
        let cut = VertexCut { set, components, minimal, degrees, pair_edges };
        cut.check_lemma(h)?;
        Ok(cut)
    }

    fn check_lemma(&self, h: &Hypergraph) -> Result<(), CutError> {
        let fail = |detail: String| Err(CutError::Lemma { set: set_string(&self.set), detail });
        let class_of = |x: Vertex| self.components.iter().position(|c| c.binary_search(&x).is_ok());
        for e in h.edge_ids() {
            let edge = h.edge(e);
            if !edge.iter().any(|x| self.contains(*x)) {
                continue;
            }
            let mut met: Vec<usize> = edge.iter().filter_map(|&x| class_of(x)).collect();
            met.sort_unstable();
            met.dedup();
            if met.len() > 1 {
                return fail(format!("edge {e} meets {} components", met.len()));
            }
        }
        if self.minimal {
            let k = self.components.len();
            for &v in &self.set {
                let touched: std::collections::BTreeSet<usize> =
                    h.neighbours(v).into_iter().filter_map(class_of).collect();
                if touched.len() != k {
                    return fail(format!("vertex {v} is adjacent to {} of {k} components", touched.len()));
                }
                let inside_s =
                    h.incident_edges(v).into_iter().filter(|&e| h.edge(e).iter().all(|x| self.contains(*x))).count();
                let d = h.degree(v) - inside_s;
                if k < 2 || k > d {
                    return fail(format!("{k} components but vertex {v} has {d} edges leaving S"));
                }
            }
        }
        Ok(())
    }

    /// The cut vertices, sorted.
    pub fn set(&self) -> &[Vertex] {
        &self.set
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.set.binary_search(&v).is_ok()
    }

    /// Components of `H \ S`, each sorted, ordered by least vertex.
    pub fn components(&self) -> &[Vec<Vertex>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Degrees in `H` of the cut vertices, in the order of [`set`](Self::set).
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn all_degree_two(&self) -> bool {
        self.degrees.iter().all(|&d| d == 2)
    }

    /// Edges equal to `S` (empty for single-vertex cuts).
    pub fn pair_edges(&self) -> &[EdgeId] {
        &self.pair_edges
    }
}

/// All vertex cuts with at most `max_size` vertices of a connected
/// hypergraph, smaller cuts first, each size in lexicographic order.
pub fn find_vertex_cuts(h: &Hypergraph, max_size: usize) -> Vec<VertexCut> {
    let mut out = Vec::new();
    if !h.is_connected() {
        return out;
    }
    let vs = h.vertices();
    if max_size >= 1 {
        for &v in vs {
            if disconnects(h, &[v]) {
                out.push(VertexCut::new(h, &[v]).expect("checked cut"));
            }
        }
    }
    if max_size >= 2 {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if disconnects(h, &[u, v]) {
                    out.push(VertexCut::new(h, &[u, v]).expect("checked cut"));
                }
            }
        }
    }
    out
}
