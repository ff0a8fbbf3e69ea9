//! Independent witness checking.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::hypergraph::{EdgeId, Hypergraph, Vertex};
use crate::solver::Mode;
use crate::trail::{validate_trail, EulerFamily, TrailViolation};

/// The failed clause, naming the offending trail (1-based), edge or vertex.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("trail {trail}: {violation}")]
    InvalidTrail { trail: usize, violation: TrailViolation },
    #[error("edge-disjointness: edge {edge} is traversed by trails {first} and {second}")]
    SharedEdge { edge: EdgeId, first: usize, second: usize },
    #[error("anchor-disjointness: vertex {vertex} is an anchor of trails {first} and {second}")]
    SharedAnchor { vertex: Vertex, first: usize, second: usize },
    #[error("coverage: edge {0} is not traversed")]
    Untraversed(EdgeId),
    #[error("spanning: vertex {0} is not an anchor")]
    Unanchored(Vertex),
    #[error("tour: expected exactly one trail, found {0}")]
    NotATour(usize),
}

pub fn verify_witness(h: &Hypergraph, w: &EulerFamily, mode: Mode, spanning: bool) -> Result<(), Violation> {
    for (i, t) in w.trails.iter().enumerate() {
        validate_trail(h, t).map_err(|violation| Violation::InvalidTrail { trail: i + 1, violation })?;
    }
    let mut edge_owner: BTreeMap<EdgeId, usize> = BTreeMap::new();
    let mut anchor_owner: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, t) in w.trails.iter().enumerate() {
        for &e in t.edges() {
            if let Some(&j) = edge_owner.get(&e) {
                return Err(Violation::SharedEdge { edge: e, first: j + 1, second: i + 1 });
            }
            edge_owner.insert(e, i);
        }
        for &v in t.anchors() {
            match anchor_owner.get(&v) {
                Some(&j) if j != i => return Err(Violation::SharedAnchor { vertex: v, first: j + 1, second: i + 1 }),
                _ => {
                    anchor_owner.insert(v, i);
                }
            }
        }
    }
    if let Some(e) = h.edge_ids().find(|e| !edge_owner.contains_key(e)) {
        return Err(Violation::Untraversed(e));
    }
    if spanning {
        if let Some(&v) = h.vertices().iter().find(|v| !anchor_owner.contains_key(v)) {
            return Err(Violation::Unanchored(v));
        }
    }
    if mode == Mode::Tour && w.trails.len() != 1 {
        return Err(Violation::NotATour(w.trails.len()));
    }
    Ok(())
}
