//! Plain undirected graphs and the incidence graph of a hypergraph.

use crate::hypergraph::{EdgeId, Flag, Hypergraph, Vertex};

/// Undirected graph on nodes `0..n` with indexed edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<(usize, usize)>>,
    ends: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], ends: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Adds an edge and returns its index.
    pub fn add_edge(&mut self, a: usize, b: usize) -> usize {
        assert!(a < self.adj.len() && b < self.adj.len(), "node out of range");
        assert_ne!(a, b, "loops are not allowed");
        let id = self.ends.len();
        self.adj[a].push((b, id));
        self.adj[b].push((a, id));
        self.ends.push((a, b));
        id
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, edge: usize) -> (usize, usize) {
        self.ends[edge]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node].len()
    }

    /// `(neighbour, edge index)` pairs.
    pub fn incident(&self, node: usize) -> &[(usize, usize)] {
        &self.adj[node]
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.ends.iter().all(|&(a, b)| seen.insert((a.min(b), a.max(b))))
    }

    /// Component label per node; labels are assigned in order of first node.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &(y, _) in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        label
    }
}

/// The bipartite incidence graph: node `i < n` is the i-th vertex of the
/// hypergraph (a v-vertex), node `n + j` is edge `j` (an e-vertex). Graph
/// edge `t` is the flag `flags[t]`.
#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    graph: Graph,
    vertices: Vec<Vertex>,
    edge_count: usize,
    flags: Vec<Flag>,
}

impl IncidenceGraph {
    pub fn new(h: &Hypergraph) -> Self {
        let nv = h.order();
        let mut graph = Graph::new(nv + h.size());
        let mut flags = Vec::with_capacity(h.flag_count());
        for f in h.flags() {
            let vi = h.position(f.vertex).expect("edge vertices belong to the hypergraph");
            graph.add_edge(vi, nv + f.edge.0);
            flags.push(f);
        }
        IncidenceGraph { graph, vertices: h.vertices().to_vec(), edge_count: h.size(), flags }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn v_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn e_count(&self) -> usize {
        self.edge_count
    }

    pub fn v_node(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn e_node(&self, e: EdgeId) -> usize {
        self.vertices.len() + e.0
    }

    pub fn is_v_node(&self, node: usize) -> bool {
        node < self.vertices.len()
    }

    pub fn vertex_of(&self, node: usize) -> Vertex {
        self.vertices[node]
    }

    pub fn edge_of(&self, node: usize) -> EdgeId {
        EdgeId(node - self.vertices.len())
    }
}
