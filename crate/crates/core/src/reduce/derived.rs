//! Hypergraphs derived from a vertex cut.

use std::fmt;

use thiserror::Error;

use crate::hypergraph::{EdgeId, Hypergraph, Vertex};
use crate::reduce::cuts::VertexCut;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DerivedKind {
    /// A component of `H \ S`.
    Component,
    /// The component plus `S`, with the edges of `H` inside that set.
    SComponent,
    /// The S-component plus `|S|/2` copies of the edge `S`.
    Star,
    /// The S-component plus two copies of the edge `S`.
    DoubleStar,
    /// The S-component without the smaller vertex of `S`.
    MinusU,
    /// The S-component without the larger vertex of `S`.
    MinusV,
}

impl DerivedKind {
    /// Name of the derived hypergraph for component `i` (0-based).
    pub fn label(self, i: usize) -> String {
        let i = i + 1;
        match self {
            DerivedKind::Component => format!("H{i}"),
            DerivedKind::SComponent => format!("H{i}'"),
            DerivedKind::Star => format!("H{i}*"),
            DerivedKind::DoubleStar => format!("H{i}**"),
            DerivedKind::MinusU => format!("H{i}'-u"),
            DerivedKind::MinusV => format!("H{i}'-v"),
        }
    }
}

/// Where an edge of a derived hypergraph comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeOrigin {
    Parent(EdgeId),
    /// An added copy of the edge `S`.
    Synthetic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedHypergraph {
    pub kind: DerivedKind,
    pub component: usize,
    pub hypergraph: Hypergraph,
    pub origin: Vec<EdgeOrigin>,
}

impl DerivedHypergraph {
    pub fn label(&self) -> String {
        self.kind.label(self.component)
    }

    pub fn parent_edge(&self, e: EdgeId) -> Option<EdgeId> {
        match self.origin[e.0] {
            EdgeOrigin::Parent(p) => Some(p),
            EdgeOrigin::Synthetic => None,
        }
    }

    /// `|V| + |E|`.
    pub fn weight(&self) -> usize {
        self.hypergraph.order() + self.hypergraph.size()
    }
}

impl fmt::Display for DerivedHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.label(), self.hypergraph)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeriveError {
    #[error("S*-components need |S| even, but |S| = {0}")]
    OddCut(usize),
    #[error("{kind:?} needs |S| = 2, but |S| = {size}")]
    NotAPair { kind: DerivedKind, size: usize },
    #[error("cut has no component {0}")]
    NoComponent(usize),
}

/// The derived hypergraph of `kind` for component `i` of `H \ S`.
pub fn derive(h: &Hypergraph, cut: &VertexCut, i: usize, kind: DerivedKind) -> Result<DerivedHypergraph, DeriveError> {
    let class = cut.components().get(i).ok_or(DeriveError::NoComponent(i))?;
    let s = cut.set();
    let build =
        |hypergraph: Hypergraph, origin: Vec<EdgeOrigin>| DerivedHypergraph { kind, component: i, hypergraph, origin };
    if kind == DerivedKind::Component {
        let sub = h.induced_subhypergraph(class).expect("component is non-empty");
        let origin = sub.parent_edges.iter().map(|&e| EdgeOrigin::Parent(e)).collect();
        return Ok(build(sub.hypergraph, origin));
    }
    if matches!(kind, DerivedKind::DoubleStar | DerivedKind::MinusU | DerivedKind::MinusV) && s.len() != 2 {
        return Err(DeriveError::NotAPair { kind, size: s.len() });
    }
    if kind == DerivedKind::Star && s.len() % 2 == 1 {
        return Err(DeriveError::OddCut(s.len()));
    }

    let mut vertices: Vec<Vertex> = class.clone();
    vertices.extend_from_slice(s);
    vertices.sort_unstable();
    let inside = |e: &[Vertex]| e.iter().all(|x| vertices.binary_search(x).is_ok());
    let mut edges = Vec::new();
    let mut origin = Vec::new();
    for e in h.edge_ids() {
        if inside(h.edge(e)) {
            edges.push(h.edge(e).to_vec());
            origin.push(EdgeOrigin::Parent(e));
        }
    }
    let copies = match kind {
        DerivedKind::Star => s.len() / 2,
        DerivedKind::DoubleStar => 2,
        _ => 0,
    };
    for _ in 0..copies {
        edges.push(s.to_vec());
        origin.push(EdgeOrigin::Synthetic);
    }
    let sc = Hypergraph::new(vertices.iter().copied(), edges).expect("edges lie inside the vertex set");
    match kind {
        DerivedKind::MinusU | DerivedKind::MinusV => {
            let drop = if kind == DerivedKind::MinusU { s[0] } else { s[1] };
            let sub = sc.delete_vertices(&[drop]).expect("component is non-empty");
            let origin = sub.parent_edges.iter().map(|e| origin[e.0]).collect();
            Ok(build(sub.hypergraph, origin))
        }
        _ => Ok(build(sc, origin)),
    }
}

/// Every derived hypergraph the cut supports, component by component.
pub fn derived_hypergraphs(h: &Hypergraph, cut: &VertexCut) -> Vec<DerivedHypergraph> {
    let mut kinds = vec![DerivedKind::Component, DerivedKind::SComponent];
    if cut.size().is_multiple_of(2) {
        kinds.push(DerivedKind::Star);
    }
    if cut.size() == 2 {
        kinds.extend([DerivedKind::DoubleStar, DerivedKind::MinusU, DerivedKind::MinusV]);
    }
    let mut out = Vec::new();
    for i in 0..cut.component_count() {
        for &k in &kinds {
            out.push(derive(h, cut, i, k).expect("kind is supported by the cut"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::with_order(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn s_components_of_shared_vertex_triangles() {
        let g = h(5, &[&[1, 2], &[2, 3], &[1, 3], &[3, 4], &[4, 5], &[3, 5]]);
        let cut = VertexCut::new(&g, &[3]).unwrap();
        let d = derive(&g, &cut, 0, DerivedKind::SComponent).unwrap();
        assert_eq!(d.hypergraph, h(3, &[&[1, 2], &[2, 3], &[1, 3]]));
        assert_eq!(
            d.origin,
            vec![EdgeOrigin::Parent(EdgeId(0)), EdgeOrigin::Parent(EdgeId(1)), EdgeOrigin::Parent(EdgeId(2))]
        );
        assert_eq!(derive(&g, &cut, 0, DerivedKind::Star), Err(DeriveError::OddCut(1)));
        let d2 = derive(&g, &cut, 1, DerivedKind::Component).unwrap();
        assert_eq!(d2.hypergraph.vertices(), &[4, 5]);
        assert_eq!(d2.hypergraph.edges(), &[vec![4], vec![4, 5], vec![5]]);
    }

    #[test]
    fn star_adds_one_pair_copy() {
        // S = {1, 3}; component {2} with edges {1,2}, {2,3}; other component {4}.
        let g = h(4, &[&[1, 2], &[2, 3], &[1, 4], &[3, 4]]);
        let cut = VertexCut::new(&g, &[1, 3]).unwrap();
        let d = derive(&g, &cut, 0, DerivedKind::Star).unwrap();
        assert_eq!(d.hypergraph.edges(), &[vec![1, 2], vec![2, 3], vec![1, 3]]);
        assert_eq!(d.origin[2], EdgeOrigin::Synthetic);
        let dd = derive(&g, &cut, 0, DerivedKind::DoubleStar).unwrap();
        assert_eq!(dd.hypergraph.size(), 4);
    }

    #[test]
    fn pair_edges_in_every_s_component() {
        let g = h(4, &[&[1, 2], &[2, 4], &[1, 3], &[3, 4], &[1, 4]]);
        let cut = VertexCut::new(&g, &[1, 4]).unwrap();
        for i in 0..2 {
            let d = derive(&g, &cut, i, DerivedKind::SComponent).unwrap();
            assert!(d.origin.contains(&EdgeOrigin::Parent(EdgeId(4))));
        }
        let mu = derive(&g, &cut, 0, DerivedKind::MinusU).unwrap();
        assert_eq!(mu.hypergraph.vertices(), &[2, 4]);
        assert_eq!(mu.hypergraph.edges(), &[vec![2], vec![2, 4], vec![4]]);
        assert_eq!(derived_hypergraphs(&g, &cut).len(), 12);
    }
}
