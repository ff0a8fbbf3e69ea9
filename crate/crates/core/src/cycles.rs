//! Cycle decompositions of trail families and S-types of closed trails
//! relative to a vertex pair.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::hypergraph::{EdgeId, Hypergraph, Vertex};
use crate::trail::{family_incidence_graph, trail_from_nodes, Adjacency, ClosedTrail, TrailError, TrailGraph};

/// A family of pairwise edge-disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycleDecomposition {
    pub cycles: Vec<ClosedTrail>,
}

impl CycleDecomposition {
    pub fn graph(&self) -> TrailGraph {
        family_incidence_graph(&self.cycles).expect("cycles of a decomposition are edge-disjoint")
    }

    /// Types of all cycles, in order.
    pub fn s_types(&self, ctx: &PairContext) -> Vec<SType> {
        self.cycles.iter().map(|c| ctx.s_type(c)).collect()
    }

    /// Indices of cycles traversing an edge that meets component `i`.
    pub fn members(&self, ctx: &PairContext, i: usize) -> Vec<usize> {
        (0..self.cycles.len()).filter(|&c| ctx.components_touched(&self.cycles[c]).contains(&i)).collect()
    }

    /// Number of cycles meeting component `i` that require completion.
    pub fn requiring_completion(&self, ctx: &PairContext, i: usize) -> usize {
        self.members(ctx, i).into_iter().filter(|&c| ctx.s_type(&self.cycles[c]).requires_completion()).count()
    }

    pub fn count_of(&self, ctx: &PairContext, ty: SType) -> usize {
        self.cycles.iter().filter(|c| ctx.s_type(c) == ty).count()
    }
}

/// Decomposes the incidence graph of edge-disjoint closed trails into
/// cycles.
///
/// Cycles are peeled off by walking from the least active node, always
/// taking the least unused neighbour, until the walk revisits a node on
/// its own stack. The result is sorted in canonical form.
pub fn cycle_decomposition(trails: &[ClosedTrail]) -> Result<CycleDecomposition, TrailError> {
    let g = family_incidence_graph(trails)?;
    Ok(decompose_graph(&g))
}

/// Cycle decomposition of an even trail graph.
pub fn decompose_graph(g: &TrailGraph) -> CycleDecomposition {
    let mut adj = Adjacency::new(g.flags());
    let mut cycles = Vec::new();
    while let Some(start) = adj.first_active() {
        let mut stack = vec![start];
        loop {
            let cur = *stack.last().unwrap();
            let Some(next) = adj.take_min(cur) else {
                debug_assert_eq!(stack.len(), 1, "graph is not even");
                break;
            };
            if let Some(p) = stack.iter().position(|&x| x == next) {
                cycles.push(trail_from_nodes(&stack[p..]).canonical());
                stack.truncate(p + 1);
            } else {
                stack.push(next);
            }
        }
    }
    cycles.sort();
    CycleDecomposition { cycles }
}

/// The S-type `(a, b, c)` of a closed trail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SType {
    /// Traversals of vertices of S.
    pub a: usize,
    /// Traversed edges equal to S.
    pub b: usize,
    /// Components of `H \ S` met by a traversed edge.
    pub c: usize,
}

impl SType {
    pub const fn new(a: usize, b: usize, c: usize) -> Self {
        SType { a, b, c }
    }

    /// The six types a cycle can have.
    pub const CYCLE_TYPES: [SType; 6] = [
        SType::new(0, 0, 1),
        SType::new(1, 0, 1),
        SType::new(2, 0, 1),
        SType::new(2, 0, 2),
        SType::new(2, 1, 1),
        SType::new(2, 2, 0),
    ];

    pub fn requires_completion(self) -> bool {
        self == SType::new(2, 0, 2) || self == SType::new(2, 1, 1)
    }

    pub fn is_cycle_type(self) -> bool {
        SType::CYCLE_TYPES.contains(&self)
    }
}

impl fmt::Display for SType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("expected a set of two distinct vertices, got {0:?}")]
    NotAPair(Vec<Vertex>),
    #[error("vertex {0} is not in the hypergraph")]
    UnknownVertex(Vertex),
}

/// A vertex pair `S = {u, v}` with a fixed numbering of the components of
/// `H \ S`, used to classify trails.
#[derive(Clone, Debug)]
pub struct PairContext {
    u: Vertex,
    v: Vertex,
    classes: Vec<Vec<Vertex>>,
    vertex_class: BTreeMap<Vertex, usize>,
    edge_class: Vec<Option<usize>>,
    pair_edges: Vec<EdgeId>,
}

impl PairContext {
    pub fn new(h: &Hypergraph, s: &[Vertex]) -> Result<Self, PairError> {
        let mut s = s.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != 2 {
            return Err(PairError::NotAPair(s));
        }
        for &x in &s {
            if !h.contains_vertex(x) {
                return Err(PairError::UnknownVertex(x));
            }
        }
        let (u, v) = (s[0], s[1]);
        let classes = if h.order() > 2 {
            h.delete_vertices(&s).expect("S is a proper subset").hypergraph.connected_components().classes
        } else {
            Vec::new()
        };
        let mut vertex_class = BTreeMap::new();
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                vertex_class.insert(x, i);
            }
        }
        let edge_class = h.edges().iter().map(|e| e.iter().find_map(|x| vertex_class.get(x).copied())).collect();
        let pair_edges = h.edge_ids().filter(|&e| h.edge(e) == [u, v]).collect();
        Ok(PairContext { u, v, classes, vertex_class, edge_class, pair_edges })
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn contains(&self, x: Vertex) -> bool {
        x == self.u || x == self.v
    }

    /// Components of `H \ S`.
    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn component_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of_vertex(&self, x: Vertex) -> Option<usize> {
        self.vertex_class.get(&x).copied()
    }

    /// The component an edge meets; `None` for edges inside S.
    pub fn class_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.edge_class[e.0]
    }

    /// The edges equal to S.
    pub fn pair_edges(&self) -> &[EdgeId] {
        &self.pair_edges
    }

    pub fn is_pair_edge(&self, e: EdgeId) -> bool {
        self.pair_edges.binary_search(&e).is_ok()
    }

    pub fn components_touched(&self, t: &ClosedTrail) -> BTreeSet<usize> {
        t.edges().iter().filter_map(|&e| self.class_of_edge(e)).collect()
    }

    pub fn s_type(&self, t: &ClosedTrail) -> SType {
        SType {
            a: t.anchors().iter().filter(|&&x| self.contains(x)).count(),
            b: t.edges().iter().filter(|&&e| self.is_pair_edge(e)).count(),
            c: self.components_touched(t).len(),
        }
    }
}

/// S-type of a trail in `h` with respect to the pair `s`.
pub fn s_type(h: &Hypergraph, s: &[Vertex], t: &ClosedTrail) -> Result<SType, PairError> {
    Ok(PairContext::new(h, s)?.s_type(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Flag;
    use crate::trail::validate_trail;

    fn h(n: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::with_order(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn t(anchors: &[Vertex], edges: &[usize]) -> ClosedTrail {
        ClosedTrail::from_numbers(anchors, edges)
    }

    #[test]
    fn cycles_stay_cycles() {
        let c = t(&[1, 2], &[1, 2]);
        assert_eq!(cycle_decomposition(std::slice::from_ref(&c)).unwrap().cycles, vec![c.canonical()]);
        let tri = t(&[1, 2, 3], &[1, 2, 3]);
        assert_eq!(cycle_decomposition(std::slice::from_ref(&tri)).unwrap().cycles, vec![tri.canonical()]);
    }

    #[test]
    fn figure_eight_splits_into_two_cycles() {
        // 1 e1 2 e2 1 e3 2 e4 1 on four parallel edges {1,2}.
        let fig8 = t(&[1, 2, 1, 2], &[1, 2, 3, 4]);
        let d = cycle_decomposition(&[fig8]).unwrap();
        assert_eq!(d.cycles.len(), 2);
        let a = t(&[1, 2], &[1, 2]).canonical();
        let b = t(&[1, 2], &[3, 4]).canonical();
        assert!(d.cycles.contains(&a) && d.cycles.contains(&b));
    }

    /// All cycle decompositions of a flag set, by exhaustive search: the
    /// least remaining flag lies on exactly one cycle of any decomposition,
    /// so branch over every simple cycle through it.
    fn all_decompositions(flags: &BTreeSet<Flag>) -> Vec<Vec<BTreeSet<Flag>>> {
        let Some(&first) = flags.iter().next() else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        for cycle in cycles_through(flags, first) {
            let rest: BTreeSet<Flag> = flags.difference(&cycle).copied().collect();
            for mut d in all_decompositions(&rest) {
                d.push(cycle.clone());
                d.sort();
                out.push(d);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Simple cycles through `start` in the bipartite graph given by `flags`.
    fn cycles_through(flags: &BTreeSet<Flag>, start: Flag) -> Vec<BTreeSet<Flag>> {
        // Walk from the vertex end of `start` back to its edge end.
        #[allow(clippy::too_many_arguments)]
        fn dfs(
            flags: &BTreeSet<Flag>,
            at_vertex: Option<Vertex>,
            at_edge: Option<EdgeId>,
            target: EdgeId,
            seen_v: &mut Vec<Vertex>,
            seen_e: &mut Vec<EdgeId>,
            path: &mut Vec<Flag>,
            out: &mut Vec<BTreeSet<Flag>>,
        ) {
            if let Some(v) = at_vertex {
                let next: Vec<Flag> = flags.iter().filter(|f| f.vertex == v && !path.contains(f)).copied().collect();
                for f in next {
                    if f.edge == target && path.len() >= 2 {
                        let mut c: BTreeSet<Flag> = path.iter().copied().collect();
                        c.insert(f);
                        out.push(c);
                    } else if f.edge != target && !seen_e.contains(&f.edge) {
                        seen_e.push(f.edge);
                        path.push(f);
                        dfs(flags, None, Some(f.edge), target, seen_v, seen_e, path, out);
                        path.pop();
                        seen_e.pop();
                    }
                }
            } else if let Some(e) = at_edge {
                let next: Vec<Flag> = flags.iter().filter(|f| f.edge == e && !path.contains(f)).copied().collect();
                for f in next {
                    if !seen_v.contains(&f.vertex) {
                        seen_v.push(f.vertex);
                        path.push(f);
                        dfs(flags, Some(f.vertex), None, target, seen_v, seen_e, path, out);
                        path.pop();
                        seen_v.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        let mut path = vec![start];
        dfs(
            flags,
            Some(start.vertex),
            None,
            start.edge,
            &mut vec![start.vertex],
            &mut vec![start.edge],
            &mut path,
            &mut out,
        );
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn figure_eight_oracle() {
        let fig8 = t(&[1, 2, 1, 2], &[1, 2, 3, 4]);
        let g = family_incidence_graph(std::slice::from_ref(&fig8)).unwrap();
        let all = all_decompositions(g.flags());
        // Three pairings of the four parallel edges.
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|d| d.len() == 2 && d.iter().all(|c| c.len() == 4)));
        let got = cycle_decomposition(&[fig8]).unwrap();
        let mut got_sets: Vec<BTreeSet<Flag>> = got.cycles.iter().map(|c| c.flags().into_iter().collect()).collect();
        got_sets.sort();
        assert!(all.contains(&got_sets));
        let expected: Vec<BTreeSet<Flag>> = {
            let mut v: Vec<BTreeSet<Flag>> =
                [t(&[1, 2], &[1, 2]), t(&[1, 2], &[3, 4])].iter().map(|c| c.flags().into_iter().collect()).collect();
            v.sort();
            v
        };
        assert_eq!(got_sets, expected);
    }

    #[test]
    fn decomposer_output_is_one_of_the_enumerated_decompositions() {
        // Bowtie with a doubled wing: enough structure for several answers.
        let g = h(5, &[&[1, 2], &[2, 3], &[1, 3], &[1, 4], &[4, 5], &[1, 5], &[1, 2], &[1, 2]]);
        let tour = t(&[1, 2, 3, 1, 4, 5, 1, 2], &[1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(validate_trail(&g, &tour), Ok(()));
        let tg = family_incidence_graph(std::slice::from_ref(&tour)).unwrap();
        let all = all_decompositions(tg.flags());
        assert!(all.len() > 1);
        let got = cycle_decomposition(&[tour]).unwrap();
        let mut got_sets: Vec<BTreeSet<Flag>> = got.cycles.iter().map(|c| c.flags().into_iter().collect()).collect();
        got_sets.sort();
        assert!(all.contains(&got_sets));
    }

    #[test]
    fn decomposition_is_equivalent_and_made_of_cycles() {
        let b = h(5, &[&[1, 2], &[2, 3], &[1, 3], &[1, 4], &[4, 5], &[1, 5]]);
        let tour = t(&[1, 2, 3, 1, 4, 5], &[1, 2, 3, 4, 5, 6]);
        assert_eq!(validate_trail(&b, &tour), Ok(()));
        let d = cycle_decomposition(std::slice::from_ref(&tour)).unwrap();
        assert_eq!(d.cycles.len(), 2);
        assert!(d.cycles.iter().all(|c| c.is_cycle() && validate_trail(&b, c).is_ok()));
        assert_eq!(d.graph(), family_incidence_graph(&[tour]).unwrap());
    }

    #[test]
    fn s_type_examples() {
        // S = {1, 2}; edges e1 = e2 = {1,2}.
        let d = h(3, &[&[1, 2], &[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(s_type(&d, &[1, 2], &t(&[1, 2], &[1, 2])).unwrap(), SType::new(2, 2, 0));
        // u e1 w e2 v e3 u, w in the only component, e3 = {u, v}.
        let g = h(3, &[&[1, 3], &[3, 2], &[1, 2]]);
        assert_eq!(s_type(&g, &[1, 2], &t(&[1, 3, 2], &[1, 2, 3])).unwrap(), SType::new(2, 1, 1));
        // A cycle away from S.
        let far = h(5, &[&[1, 3], &[2, 3], &[3, 4], &[4, 5], &[3, 5]]);
        assert_eq!(s_type(&far, &[1, 2], &t(&[3, 4, 5], &[3, 4, 5])).unwrap(), SType::new(0, 0, 1));
        assert!(matches!(s_type(&g, &[1], &t(&[1, 3], &[1, 2])), Err(PairError::NotAPair(_))));
    }

    #[test]
    fn pair_context_components() {
        // Two triangles on {1,2,3} and {1,2,4}: S = {1,2} splits 3 from 4.
        let g = h(4, &[&[1, 3], &[2, 3], &[1, 4], &[2, 4], &[1, 2]]);
        let ctx = PairContext::new(&g, &[2, 1]).unwrap();
        assert_eq!(ctx.component_count(), 2);
        assert_eq!(ctx.class_of_edge(EdgeId(0)), Some(0));
        assert_eq!(ctx.class_of_edge(EdgeId(3)), Some(1));
        assert_eq!(ctx.class_of_edge(EdgeId(4)), None);
        assert_eq!(ctx.pair_edges(), &[EdgeId(4)]);
        let c = t(&[1, 3, 2, 4], &[1, 2, 4, 3]);
        assert_eq!(ctx.s_type(&c), SType::new(2, 0, 2));
        assert!(ctx.s_type(&c).requires_completion());
    }
}
