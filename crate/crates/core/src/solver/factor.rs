//! Parity-interval degree-constrained subgraphs via a gadget reduction to
//! perfect matching.
//!
//! Every node `x` of degree `d` with allowed degrees `{lo, lo+2, ..., hi}`
//! becomes `d` outer nodes (one per incident edge) and `d - lo` core nodes,
//! each core node adjacent to every outer node, plus `(hi - lo) / 2`
//! disjoint core-core edges. Every original edge `xy` becomes a path
//! `outer_x - a - b - outer_y`. If `a b` is matched the edge is left out;
//! otherwise both ends are matched outward and the edge is chosen. A
//! perfect matching exists iff some subgraph meets all constraints.

use thiserror::Error;

use crate::graph::Graph;
use crate::solver::matching::{is_perfect, maximum_matching};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("node {node}: allowed degrees {lo}..{hi} are not a parity interval within degree {degree}")]
    Malformed { node: usize, lo: usize, hi: usize, degree: usize },
    #[error("expected {expected} degree bounds, got {got}")]
    BoundCount { expected: usize, got: usize },
}

/// A graph with an allowed degree set `{lo, lo+2, ..., hi}` per node.
#[derive(Clone, Debug)]
pub struct DegreeConstraintProblem {
    graph: Graph,
    bounds: Vec<(usize, usize)>,
}

impl DegreeConstraintProblem {
    pub fn new(graph: Graph, bounds: Vec<(usize, usize)>) -> Result<Self, FactorError> {
        if bounds.len() != graph.node_count() {
            return Err(FactorError::BoundCount { expected: graph.node_count(), got: bounds.len() });
        }
        for (node, &(lo, hi)) in bounds.iter().enumerate() {
            let degree = graph.degree(node);
            if lo > hi || hi > degree || (hi - lo) % 2 != 0 {
                return Err(FactorError::Malformed { node, lo, hi, degree });
            }
        }
        Ok(DegreeConstraintProblem { graph, bounds })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn bounds(&self) -> &[(usize, usize)] {
        &self.bounds
    }

    /// Whether a chosen edge set meets every constraint.
    pub fn admits(&self, chosen: &[usize]) -> bool {
        let mut deg = vec![0; self.graph.node_count()];
        for &e in chosen {
            let (a, b) = self.graph.ends(e);
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.iter().zip(&self.bounds).all(|(&d, &(lo, hi))| d >= lo && d <= hi && (d - lo) % 2 == 0)
    }
}

/// Edge indices of a subgraph meeting every degree constraint, or `None`.
pub fn parity_factor_subgraph(p: &DegreeConstraintProblem) -> Option<Vec<usize>> {
    let g = &p.graph;
    let mut gadget = Graph::new(0);
    let mut nodes = 0usize;
    let mut fresh = |count: usize| {
        let start = nodes;
        nodes += count;
        start..nodes
    };

    // outer[x][i]: outer node for the i-th incident edge of x.
    let mut outer: Vec<Vec<usize>> = Vec::with_capacity(g.node_count());
    let mut cores: Vec<std::ops::Range<usize>> = Vec::with_capacity(g.node_count());
    for x in 0..g.node_count() {
        let d = g.degree(x);
        let (lo, _) = p.bounds[x];
        outer.push(fresh(d).collect());
        cores.push(fresh(d - lo));
    }
    let connectors: Vec<(usize, usize)> = (0..g.edge_count())
        .map(|_| {
            let r = fresh(2);
            (r.start, r.start + 1)
        })
        .collect();

    gadget = Graph::new(nodes.max(gadget.node_count()));
    for x in 0..g.node_count() {
        let (lo, hi) = p.bounds[x];
        for c in cores[x].clone() {
            for &o in &outer[x] {
                gadget.add_edge(o, c);
            }
        }
        let core: Vec<usize> = cores[x].clone().collect();
        for pair in core.chunks(2).take((hi - lo) / 2) {
            gadget.add_edge(pair[0], pair[1]);
        }
    }
    let mut slot = vec![0usize; g.node_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let (ca, cb) = connectors[e];
        let oa = outer[a][slot[a]];
        let ob = outer[b][slot[b]];
        slot[a] += 1;
        slot[b] += 1;
        gadget.add_edge(oa, ca);
        gadget.add_edge(ca, cb);
        gadget.add_edge(cb, ob);
    }

    let mate = maximum_matching(&gadget);
    if !is_perfect(&mate) {
        return None;
    }
    let chosen: Vec<usize> =
        connectors.iter().enumerate().filter(|(_, &(ca, cb))| mate[ca] != Some(cb)).map(|(e, _)| e).collect();
    debug_assert!(p.admits(&chosen));
    Some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_two_factor() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let p = DegreeConstraintProblem::new(g, vec![(2, 2); 4]).unwrap();
        assert_eq!(parity_factor_subgraph(&p), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn single_edge_cannot_reach_degree_two() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        assert_eq!(
            DegreeConstraintProblem::new(g.clone(), vec![(2, 2); 2]),
            Err(FactorError::Malformed { node: 0, lo: 2, hi: 2, degree: 1 })
        );
        let p = DegreeConstraintProblem::new(g, vec![(1, 1), (0, 0)]).unwrap();
        assert_eq!(parity_factor_subgraph(&p), None);
    }

    #[test]
    fn zero_allowed() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let p = DegreeConstraintProblem::new(g, vec![(0, 2); 3]).unwrap();
        let chosen = parity_factor_subgraph(&p).unwrap();
        assert!(p.admits(&chosen));
    }

    #[test]
    fn malformed_parity() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(DegreeConstraintProblem::new(g, vec![(0, 1), (0, 2), (0, 2)]).is_err());
    }

    impl PartialEq for DegreeConstraintProblem {
        fn eq(&self, other: &Self) -> bool {
            self.graph == other.graph && self.bounds == other.bounds
        }
    }
}
