//! Closed trails, Euler families, and the incidence graphs of trail families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::hypergraph::{EdgeId, Flag, Hypergraph, Vertex};

/// A closed trail `v0 e1 v1 ... v(k-1) ek v0`.
///
/// `edges[i]` joins `anchors[i]` and `anchors[(i + 1) % k]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClosedTrail {
    anchors: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

/// An open trail `v0 e1 v1 ... ek vk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenTrail {
    anchors: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrailViolation {
    #[error("trail has {0} edges; a closed trail needs at least 2")]
    TooShort(usize),
    #[error("anchor and edge sequences differ in length")]
    Shape,
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("consecutive anchors both equal {vertex} at edge {edge}")]
    RepeatedAnchor { vertex: Vertex, edge: EdgeId },
    #[error("vertex {vertex} is not in edge {edge}")]
    NotIncident { vertex: Vertex, edge: EdgeId },
    #[error("edge {0} is traversed more than once")]
    RepeatedEdge(EdgeId),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrailError {
    #[error("edge {0} is shared by two trails")]
    SharedEdge(EdgeId),
    #[error("vertex {0} is not an anchor of both trails")]
    NotShared(Vertex),
    #[error("flag ({vertex}, {edge}) is not a flag of the hypergraph")]
    BadFlag { vertex: Vertex, edge: EdgeId },
    #[error("edge {edge} has degree {degree} in the subgraph, expected 2")]
    EdgeDegree { edge: EdgeId, degree: usize },
    #[error("vertex {vertex} has odd degree {degree} in the subgraph")]
    OddVertex { vertex: Vertex, degree: usize },
}

impl ClosedTrail {
    /// Wraps raw sequences without checking them against any hypergraph;
    /// see [`validate_trail`].
    pub fn from_parts(anchors: Vec<Vertex>, edges: Vec<EdgeId>) -> Self {
        ClosedTrail { anchors, edges }
    }

    /// Builds a trail from 1-based edge numbers, e.g. `(&[1, 2], &[1, 2])`
    /// for `1 e1 2 e2`.
    pub fn from_numbers(anchors: &[Vertex], edge_numbers: &[usize]) -> Self {
        let edges = edge_numbers.iter().map(|&n| EdgeId::from_number(n).expect("edge numbers start at 1")).collect();
        ClosedTrail { anchors: anchors.to_vec(), edges }
    }

    pub fn anchors(&self) -> &[Vertex] {
        &self.anchors
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn anchor_set(&self) -> BTreeSet<Vertex> {
        self.anchors.iter().copied().collect()
    }

    /// True when no anchor repeats.
    pub fn is_cycle(&self) -> bool {
        self.anchor_set().len() == self.anchors.len()
    }

    /// The anchor flags `(v_{i-1}, e_i), (v_i, e_i)`.
    pub fn flags(&self) -> Vec<Flag> {
        let k = self.edges.len();
        let mut out = Vec::with_capacity(2 * k);
        for i in 0..k {
            out.push(Flag::new(self.anchors[i], self.edges[i]));
            out.push(Flag::new(self.anchors[(i + 1) % k], self.edges[i]));
        }
        out
    }

    pub fn reversed(&self) -> ClosedTrail {
        let k = self.anchors.len();
        if k == 0 {
            return self.clone();
        }
        let anchors = std::iter::once(self.anchors[0]).chain(self.anchors[1..].iter().rev().copied()).collect();
        let edges = self.edges.iter().rev().copied().collect();
        ClosedTrail { anchors, edges }
    }

    /// Rotation starting at position `start`.
    pub fn rotated(&self, start: usize) -> ClosedTrail {
        let mut anchors = self.anchors.clone();
        let mut edges = self.edges.clone();
        anchors.rotate_left(start);
        edges.rotate_left(start);
        ClosedTrail { anchors, edges }
    }

    /// Rotation starting at the first occurrence of `v`.
    pub fn starting_at(&self, v: Vertex) -> Option<ClosedTrail> {
        self.anchors.iter().position(|&a| a == v).map(|p| self.rotated(p))
    }

    /// Canonical representative among all rotations and both directions:
    /// the least anchor comes first and the interleaved sequence is
    /// lexicographically least.
    pub fn canonical(&self) -> ClosedTrail {
        let Some(&least) = self.anchors.iter().min() else {
            return self.clone();
        };
        let mut best: Option<ClosedTrail> = None;
        for dir in [self.clone(), self.reversed()] {
            for (p, &a) in dir.anchors.iter().enumerate() {
                if a != least {
                    continue;
                }
                let cand = dir.rotated(p);
                if best.as_ref().is_none_or(|b| cand.interleaved_cmp(b).is_lt()) {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    fn interleaved_cmp(&self, other: &ClosedTrail) -> std::cmp::Ordering {
        let a = self.anchors.iter().zip(&self.edges);
        let b = other.anchors.iter().zip(&other.edges);
        a.cmp(b)
    }

    /// The open trail obtained by deleting the edge at position `i`; it runs
    /// from `anchors[i + 1]` around to `anchors[i]`.
    pub fn open_at(&self, i: usize) -> OpenTrail {
        let rot = self.rotated((i + 1) % self.len());
        let mut edges = rot.edges;
        edges.pop();
        OpenTrail { anchors: rot.anchors, edges }
    }
}

impl fmt::Display for ClosedTrail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, e) in self.anchors.iter().zip(&self.edges) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{a} {e}")?;
        }
        Ok(())
    }
}

impl OpenTrail {
    pub fn from_parts(anchors: Vec<Vertex>, edges: Vec<EdgeId>) -> Self {
        assert_eq!(anchors.len(), edges.len() + 1, "open trail shape");
        OpenTrail { anchors, edges }
    }

    pub fn single(from: Vertex, edge: EdgeId, to: Vertex) -> Self {
        OpenTrail { anchors: vec![from, to], edges: vec![edge] }
    }

    pub fn anchors(&self) -> &[Vertex] {
        &self.anchors
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn start(&self) -> Vertex {
        self.anchors[0]
    }

    pub fn end(&self) -> Vertex {
        *self.anchors.last().unwrap()
    }

    pub fn reversed(&self) -> OpenTrail {
        OpenTrail {
            anchors: self.anchors.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
        }
    }

    /// Closes `self` (from `a` to `b`) with `back` (from `b` to `a`).
    pub fn close_with(&self, back: &OpenTrail) -> ClosedTrail {
        assert_eq!(self.end(), back.start(), "trails must meet");
        assert_eq!(back.end(), self.start(), "trails must meet");
        let mut anchors = self.anchors[..self.anchors.len() - 1].to_vec();
        anchors.extend_from_slice(&back.anchors[..back.anchors.len() - 1]);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&back.edges);
        ClosedTrail { anchors, edges }
    }

    pub fn map_edges(&self, f: impl Fn(EdgeId) -> EdgeId) -> OpenTrail {
        OpenTrail { anchors: self.anchors.clone(), edges: self.edges.iter().map(|&e| f(e)).collect() }
    }
}

/// Checks every closed-trail invariant against `h`.
pub fn validate_trail(h: &Hypergraph, t: &ClosedTrail) -> Result<(), TrailViolation> {
    let k = t.edges.len();
    if t.anchors.len() != k {
        return Err(TrailViolation::Shape);
    }
    if k < 2 {
        return Err(TrailViolation::TooShort(k));
    }
    let mut seen = BTreeSet::new();
    for i in 0..k {
        let e = t.edges[i];
        let (a, b) = (t.anchors[i], t.anchors[(i + 1) % k]);
        if !h.has_edge(e) {
            return Err(TrailViolation::UnknownEdge(e));
        }
        if a == b {
            return Err(TrailViolation::RepeatedAnchor { vertex: a, edge: e });
        }
        for v in [a, b] {
            if !h.is_incident(v, e) {
                return Err(TrailViolation::NotIncident { vertex: v, edge: e });
            }
        }
        if !seen.insert(e) {
            return Err(TrailViolation::RepeatedEdge(e));
        }
    }
    Ok(())
}

/// A family of closed trails jointly meant to traverse every edge once.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EulerFamily {
    pub trails: Vec<ClosedTrail>,
    /// Claims that every vertex is an anchor of exactly one trail.
    pub spanning: bool,
}

impl EulerFamily {
    pub fn new(trails: Vec<ClosedTrail>) -> Self {
        EulerFamily { trails, spanning: false }
    }

    /// Canonical trails, sorted.
    pub fn canonical(&self) -> EulerFamily {
        let mut trails: Vec<ClosedTrail> = self.trails.iter().map(ClosedTrail::canonical).collect();
        trails.sort();
        EulerFamily { trails, spanning: self.spanning }
    }
}

/// The incidence graph of a family of edge-disjoint trails, stored as its
/// flag set. Its node set is implied: every anchor and edge occurs in a flag.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TrailGraph {
    flags: BTreeSet<Flag>,
}

impl TrailGraph {
    pub fn from_flags(flags: impl IntoIterator<Item = Flag>) -> Self {
        TrailGraph { flags: flags.into_iter().collect() }
    }

    pub fn flags(&self) -> &BTreeSet<Flag> {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn vertex_degrees(&self) -> BTreeMap<Vertex, usize> {
        let mut d = BTreeMap::new();
        for f in &self.flags {
            *d.entry(f.vertex).or_insert(0) += 1;
        }
        d
    }

    pub fn edge_degrees(&self) -> BTreeMap<EdgeId, usize> {
        let mut d = BTreeMap::new();
        for f in &self.flags {
            *d.entry(f.edge).or_insert(0) += 1;
        }
        d
    }

    /// Number of connected components (isolated nodes do not exist here).
    pub fn component_count(&self) -> usize {
        let adj = Adjacency::new(&self.flags);
        adj.components().len()
    }
}

/// Union of the incidence graphs of pairwise edge-disjoint trails.
pub fn family_incidence_graph(trails: &[ClosedTrail]) -> Result<TrailGraph, TrailError> {
    let mut owner: BTreeMap<EdgeId, usize> = BTreeMap::new();
    let mut flags = BTreeSet::new();
    for (i, t) in trails.iter().enumerate() {
        for &e in t.edges() {
            if let Some(&j) = owner.get(&e) {
                if j != i {
                    return Err(TrailError::SharedEdge(e));
                }
            }
            owner.insert(e, i);
        }
        flags.extend(t.flags());
    }
    Ok(TrailGraph { flags })
}

/// Joins two edge-disjoint closed trails at a common anchor.
pub fn concatenate(t1: &ClosedTrail, t2: &ClosedTrail, at: Vertex) -> Result<ClosedTrail, TrailError> {
    let e1: BTreeSet<EdgeId> = t1.edges().iter().copied().collect();
    if let Some(&e) = t2.edges().iter().find(|e| e1.contains(e)) {
        return Err(TrailError::SharedEdge(e));
    }
    let a = t1.starting_at(at).ok_or(TrailError::NotShared(at))?;
    let b = t2.starting_at(at).ok_or(TrailError::NotShared(at))?;
    let mut anchors = a.anchors;
    anchors.extend(b.anchors);
    let mut edges = a.edges;
    edges.extend(b.edges);
    Ok(ClosedTrail { anchors, edges })
}

/// Node of an incidence graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum Node {
    V(Vertex),
    E(EdgeId),
}

/// Mutable adjacency of a flag set with deterministic (sorted) neighbour
/// order.
pub(crate) struct Adjacency {
    adj: BTreeMap<Node, BTreeSet<Node>>,
}

impl Adjacency {
    pub(crate) fn new(flags: &BTreeSet<Flag>) -> Self {
        let mut adj: BTreeMap<Node, BTreeSet<Node>> = BTreeMap::new();
        for f in flags {
            adj.entry(Node::V(f.vertex)).or_default().insert(Node::E(f.edge));
            adj.entry(Node::E(f.edge)).or_default().insert(Node::V(f.vertex));
        }
        Adjacency { adj }
    }

    /// Removes and returns the least remaining neighbour edge at `x`.
    pub(crate) fn take_min(&mut self, x: Node) -> Option<Node> {
        let y = *self.adj.get(&x)?.iter().next()?;
        self.adj.get_mut(&x).unwrap().remove(&y);
        self.adj.get_mut(&y).unwrap().remove(&x);
        Some(y)
    }

    /// Least node that still has an edge.
    pub(crate) fn first_active(&self) -> Option<Node> {
        self.adj.iter().find(|(_, n)| !n.is_empty()).map(|(&x, _)| x)
    }

    /// Node sets of the connected components.
    pub(crate) fn components(&self) -> Vec<BTreeSet<Node>> {
        let mut seen: BTreeSet<Node> = BTreeSet::new();
        let mut out = Vec::new();
        for &s in self.adj.keys() {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &y in &self.adj[&x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Converts a closed node walk `v0 e1 v1 ... ek` (starting at a v-node,
/// closing edge implicit) into a closed trail.
pub(crate) fn trail_from_nodes(nodes: &[Node]) -> ClosedTrail {
    let start = nodes.iter().position(|n| matches!(n, Node::V(_))).expect("walk has a vertex");
    let mut rot = nodes.to_vec();
    rot.rotate_left(start);
    let mut anchors = Vec::with_capacity(rot.len() / 2);
    let mut edges = Vec::with_capacity(rot.len() / 2);
    for (i, n) in rot.iter().enumerate() {
        match (i % 2, n) {
            (0, Node::V(v)) => anchors.push(*v),
            (1, Node::E(e)) => edges.push(*e),
            _ => panic!("walk does not alternate between vertices and edges"),
        }
    }
    ClosedTrail { anchors, edges }
}

/// One closed trail per connected component of an even subgraph `g` of the
/// incidence graph of `h`.
///
/// Every edge of `h` must have degree exactly 2 in `g` and every vertex
/// even degree. The family is marked spanning when every vertex of `h` has
/// positive degree.
pub fn family_from_even_subgraph(h: &Hypergraph, g: &TrailGraph) -> Result<EulerFamily, TrailError> {
    for f in g.flags() {
        if !h.is_incident(f.vertex, f.edge) {
            return Err(TrailError::BadFlag { vertex: f.vertex, edge: f.edge });
        }
    }
    let edeg = g.edge_degrees();
    for e in h.edge_ids() {
        let d = edeg.get(&e).copied().unwrap_or(0);
        if d != 2 {
            return Err(TrailError::EdgeDegree { edge: e, degree: d });
        }
    }
    let vdeg = g.vertex_degrees();
    if let Some((&v, &d)) = vdeg.iter().find(|(_, &d)| d % 2 == 1) {
        return Err(TrailError::OddVertex { vertex: v, degree: d });
    }
    let spanning = h.vertices().iter().all(|v| vdeg.contains_key(v));

    let mut adj = Adjacency::new(g.flags());
    let mut trails = Vec::new();
    while let Some(start) = adj.first_active() {
        // Hierholzer: the component's Euler circuit from its least vertex.
        let mut stack = vec![start];
        let mut circuit = Vec::new();
        while let Some(&x) = stack.last() {
            match adj.take_min(x) {
                Some(y) => stack.push(y),
                None => circuit.push(stack.pop().unwrap()),
            }
        }
        circuit.reverse();
        circuit.pop();
        trails.push(trail_from_nodes(&circuit));
    }
    Ok(EulerFamily { trails, spanning })
}
