//! Building a witness for `H` from witnesses of derived hypergraphs.
//!
//! Every part contributes the flags of its trails on edges of `H` that are
//! not equal to `S`. When `S` is a pair, a cycle of a part traversing one
//! edge equal to `S` instead contributes its `u`-`v` path. Paths are closed
//! in pairs, an odd one out is closed with an edge equal to `S`, and the
//! remaining such edges are paired into 2-cycles. The resulting even
//! subgraph is split into closed trails and checked against `H`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cycles::{cycle_decomposition, PairContext, SType};
use crate::hypergraph::{EdgeId, Flag, Hypergraph};
use crate::oracle::verify::{verify_witness, Violation};
use crate::reduce::cuts::VertexCut;
use crate::reduce::derived::DerivedHypergraph;
use crate::reduce::normalize::{normalize_cycle_decomposition, NormalizeError};
use crate::solver::Mode;
use crate::trail::{family_from_even_subgraph, EulerFamily, OpenTrail, TrailError, TrailGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AssemblyError {
    #[error("witness for {label} is invalid: {violation}")]
    Part { label: String, violation: Violation },
    #[error("normalizing the witness for {label}: {error}")]
    Normalize { label: String, error: NormalizeError },
    #[error("{label} has {count} cycles with one edge equal to S after normalization")]
    ManyPaths { label: String, count: usize },
    #[error("edge {edge} is used by parts {first} and {second}")]
    Overlap { edge: EdgeId, first: String, second: String },
    #[error("{paths} u-v paths cannot be closed with {pair_edges} edges equal to S")]
    PathParity { paths: usize, pair_edges: usize },
    #[error(transparent)]
    Trail(#[from] TrailError),
    #[error("assembled witness is invalid: {0}")]
    Invalid(Violation),
}

/// A derived hypergraph together with a witness found for it.
#[derive(Clone, Copy, Debug)]
pub struct Part<'a> {
    pub derived: &'a DerivedHypergraph,
    pub witness: &'a EulerFamily,
}

#[derive(Default)]
struct Collector {
    flags: Vec<Flag>,
    owner: BTreeMap<EdgeId, String>,
}

impl Collector {
    fn claim(&mut self, edge: EdgeId, label: &str) -> Result<(), AssemblyError> {
        match self.owner.get(&edge) {
            Some(first) if first != label => {
                Err(AssemblyError::Overlap { edge, first: first.clone(), second: label.to_string() })
            }
            _ => {
                self.owner.insert(edge, label.to_string());
                Ok(())
            }
        }
    }

    fn add_path(&mut self, path: &OpenTrail, label: &str) -> Result<(), AssemblyError> {
        for (i, &e) in path.edges().iter().enumerate() {
            self.claim(e, label)?;
            self.flags.push(Flag::new(path.anchors()[i], e));
            self.flags.push(Flag::new(path.anchors()[i + 1], e));
        }
        Ok(())
    }
}

/// Combines witnesses of derived hypergraphs of `cut` into a spanning
/// family (or tour) of `h`, verified before it is returned.
pub fn assemble_witness(
    h: &Hypergraph,
    cut: &VertexCut,
    parts: &[Part<'_>],
    mode: Mode,
) -> Result<EulerFamily, AssemblyError> {
    let pair_edges = cut.pair_edges();
    let is_pair = |e: EdgeId| pair_edges.contains(&e);
    let mut out = Collector::default();
    let mut paths: Vec<OpenTrail> = Vec::new();

    for part in parts {
        let d = part.derived;
        let label = d.label();
        verify_witness(&d.hypergraph, part.witness, Mode::Family, true)
            .map_err(|violation| AssemblyError::Part { label: label.clone(), violation })?;
        let lift = |e: EdgeId| d.parent_edge(e).filter(|&p| !is_pair(p));
        let s = cut.set();
        let has_pair = s.len() == 2
            && s.iter().all(|&x| d.hypergraph.contains_vertex(x))
            && d.hypergraph.edge_ids().any(|e| d.hypergraph.edge(e) == s);
        if !has_pair {
            for t in &part.witness.trails {
                for f in t.flags() {
                    if let Some(p) = lift(f.edge) {
                        out.claim(p, &label)?;
                        out.flags.push(Flag::new(f.vertex, p));
                    }
                }
            }
            continue;
        }

        let ctx = PairContext::new(&d.hypergraph, s).expect("S lies in the part");
        let dec = cycle_decomposition(&part.witness.trails)?;
        let dec = normalize_cycle_decomposition(&d.hypergraph, s, &dec)
            .map_err(|error| AssemblyError::Normalize { label: label.clone(), error })?;
        let mut found = 0;
        for c in &dec.cycles {
            let ty = ctx.s_type(c);
            if ty.b == 0 {
                for f in c.flags() {
                    let p = lift(f.edge).expect("edges off S come from the parent");
                    out.claim(p, &label)?;
                    out.flags.push(Flag::new(f.vertex, p));
                }
            } else if ty == SType::new(2, 1, 1) {
                found += 1;
                let at = c.edges().iter().position(|&e| ctx.is_pair_edge(e)).expect("one edge equal to S");
                let mut path = c.open_at(at);
                if path.start() != ctx.u() {
                    path = path.reversed();
                }
                let lifted = path.map_edges(|e| lift(e).expect("path edges come from the parent"));
                paths.push(lifted);
            }
        }
        if found > 1 {
            return Err(AssemblyError::ManyPaths { label, count: found });
        }
    }

    if paths.len() % 2 != pair_edges.len() % 2 || (paths.len() % 2 == 1 && pair_edges.is_empty()) {
        return Err(AssemblyError::PathParity { paths: paths.len(), pair_edges: pair_edges.len() });
    }
    let mut spare: &[EdgeId] = pair_edges;
    let mut rest: &[OpenTrail] = &paths;
    if paths.len() % 2 == 1 {
        let (u, v) = (cut.set()[0], cut.set()[1]);
        out.add_path(&paths[0], "paths")?;
        out.add_path(&OpenTrail::single(v, pair_edges[0], u), "paths")?;
        spare = &pair_edges[1..];
        rest = &paths[1..];
    }
    for two in rest.chunks(2) {
        out.add_path(&two[0], "paths")?;
        out.add_path(&two[1].reversed(), "paths")?;
    }
    for two in spare.chunks(2) {
        let (u, v) = (cut.set()[0], cut.set()[1]);
        out.add_path(&OpenTrail::single(u, two[0], v), "paths")?;
        out.add_path(&OpenTrail::single(v, two[1], u), "paths")?;
    }

    let family = family_from_even_subgraph(h, &TrailGraph::from_flags(out.flags))?;
    verify_witness(h, &family, mode, true).map_err(AssemblyError::Invalid)?;
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Vertex;
    use crate::reduce::derived::{derive, DerivedKind};
    use crate::solver::decide_spanning_euler_family;

    fn h(n: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::with_order(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn solve(d: &DerivedHypergraph) -> EulerFamily {
        decide_spanning_euler_family(&d.hypergraph).unwrap().witness.unwrap()
    }

    #[test]
    fn two_triangles_at_a_vertex() {
        let g = h(5, &[&[1, 2], &[2, 3], &[1, 3], &[3, 4], &[4, 5], &[3, 5]]);
        let cut = VertexCut::new(&g, &[3]).unwrap();
        let ds: Vec<_> = (0..2).map(|i| derive(&g, &cut, i, DerivedKind::SComponent).unwrap()).collect();
        let ws: Vec<_> = ds.iter().map(solve).collect();
        let parts: Vec<_> = ds.iter().zip(&ws).map(|(derived, witness)| Part { derived, witness }).collect();
        let w = assemble_witness(&g, &cut, &parts, Mode::Tour).unwrap();
        assert_eq!(w.trails.len(), 1);
        assert_eq!(w.trails[0].len(), 6);
    }

    #[test]
    fn star_parts_join_through_the_pair() {
        // A 4-cycle 1-3-2-4 cut at {1, 2}.
        let g = h(4, &[&[1, 3], &[2, 3], &[1, 4], &[2, 4]]);
        let cut = VertexCut::new(&g, &[1, 2]).unwrap();
        let ds: Vec<_> = (0..2).map(|i| derive(&g, &cut, i, DerivedKind::Star).unwrap()).collect();
        let ws: Vec<_> = ds.iter().map(solve).collect();
        let parts: Vec<_> = ds.iter().zip(&ws).map(|(derived, witness)| Part { derived, witness }).collect();
        let w = assemble_witness(&g, &cut, &parts, Mode::Tour).unwrap();
        assert_eq!(w.trails[0].len(), 4);
    }

    #[test]
    fn bad_part_witness_is_reported() {
        let g = h(4, &[&[1, 3], &[2, 3], &[1, 4], &[2, 4]]);
        let cut = VertexCut::new(&g, &[1, 2]).unwrap();
        let d = derive(&g, &cut, 0, DerivedKind::Star).unwrap();
        let empty = EulerFamily::new(Vec::new());
        let err = assemble_witness(&g, &cut, &[Part { derived: &d, witness: &empty }], Mode::Family).unwrap_err();
        assert!(matches!(err, AssemblyError::Part { .. }));
    }
}
