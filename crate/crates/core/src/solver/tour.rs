//! Exact search for (spanning) Euler tours.
//!
//! A tour corresponds to choosing, for every edge, the two vertices it is
//! entered and left through, such that every vertex gets even degree
//! (positive when spanning) and the chosen pairs form a connected graph.
//! Edges are branched on in ascending size, anchor pairs in lexicographic
//! order, so the first tour found is deterministic.

use crate::hypergraph::{EdgeId, Flag, Hypergraph};
use crate::solver::{decide_euler_family, decide_spanning_euler_family, Decision, NoReason, SolveError};
use crate::trail::{family_from_even_subgraph, EulerFamily, TrailGraph};

pub(crate) fn decide_tour(h: &Hypergraph, spanning: bool) -> Result<Decision, SolveError> {
    if !h.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if h.size() == 0 {
        return Ok(Decision::no(NoReason::NoEdges));
    }
    let family = if spanning { decide_spanning_euler_family(h)? } else { decide_euler_family(h)? };
    if !family.is_yes() {
        return Ok(family);
    }
    // A single closed trail found by the family solver already is a tour.
    if family.witness.as_ref().is_some_and(|w| w.trails.len() == 1) {
        return Ok(family);
    }
    let mut search = Search::new(h, spanning);
    if !search.run(0) {
        return Ok(Decision::no(NoReason::SearchExhausted));
    }
    let flags = search.order.iter().zip(&search.chosen).flat_map(|(&e, &(a, b))| {
        let edge = h.edge(e);
        [Flag::new(edge[a], e), Flag::new(edge[b], e)]
    });
    let g = TrailGraph::from_flags(flags);
    let mut w = family_from_even_subgraph(h, &g)?;
    debug_assert_eq!(w.trails.len(), 1);
    w.spanning = spanning;
    Ok(Decision::yes(EulerFamily { trails: w.trails, spanning }))
}

/// Backtracking state. Vertices are positions in `h.vertices()`.
struct Search {
    spanning: bool,
    order: Vec<EdgeId>,
    chosen: Vec<(usize, usize)>,
    /// Edge vertex lists as positions.
    members: Vec<Vec<usize>>,
    degree: Vec<usize>,
    unassigned: Vec<usize>,
    uf: UnionFind,
}

impl Search {
    fn new(h: &Hypergraph, spanning: bool) -> Self {
        let mut order: Vec<EdgeId> = h.edge_ids().collect();
        order.sort_by_key(|&e| (h.edge(e).len(), e));
        let members: Vec<Vec<usize>> =
            order.iter().map(|&e| h.edge(e).iter().map(|&v| h.position(v).unwrap()).collect()).collect();
        let unassigned = h.degrees();
        let uf = UnionFind::new(&unassigned);
        Search { spanning, order, chosen: Vec::new(), members, degree: vec![0; h.order()], unassigned, uf }
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let size = self.members[depth].len();
        for a in 0..size {
            for b in a + 1..size {
                if self.try_pair(depth, a, b) {
                    return true;
                }
            }
        }
        false
    }

    fn try_pair(&mut self, depth: usize, a: usize, b: usize) -> bool {
        let (x, y) = (self.members[depth][a], self.members[depth][b]);
        self.degree[x] += 1;
        self.degree[y] += 1;
        let undo = self.uf.union(x, y);
        let mut ok = true;
        for i in 0..self.members[depth].len() {
            let z = self.members[depth][i];
            self.unassigned[z] -= 1;
            if self.unassigned[z] == 0 {
                let r = self.uf.find(z);
                self.uf.open[r] -= 1;
                let d = self.degree[z];
                if d % 2 == 1 || (self.spanning && d == 0) {
                    ok = false;
                }
            }
        }
        if ok {
            // A finished component that does not hold every edge can never
            // merge with the rest.
            let m = self.order.len();
            for &z in &self.members[depth] {
                let r = self.uf.find(z);
                if self.uf.open[r] == 0 && self.uf.edges[r] > 0 && self.uf.edges[r] < m {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            self.chosen.push((a, b));
            if self.run(depth + 1) {
                return true;
            }
            self.chosen.pop();
        }
        for i in (0..self.members[depth].len()).rev() {
            let z = self.members[depth][i];
            if self.unassigned[z] == 0 {
                let r = self.uf.find(z);
                self.uf.open[r] += 1;
            }
            self.unassigned[z] += 1;
        }
        self.uf.undo(undo);
        self.degree[x] -= 1;
        self.degree[y] -= 1;
        false
    }
}

/// Union-find with undo (union by size, no path compression), tracking
/// per root the number of vertices with unassigned edges and the number
/// of chosen pairs.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    open: Vec<usize>,
    edges: Vec<usize>,
}

enum Undo {
    Same(usize),
    Merged { child: usize, root: usize },
}

impl UnionFind {
    fn new(unassigned: &[usize]) -> Self {
        let n = unassigned.len();
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            open: unassigned.iter().map(|&u| usize::from(u > 0)).collect(),
            edges: vec![0; n],
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> Undo {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            self.edges[rx] += 1;
            return Undo::Same(rx);
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        self.open[rx] += self.open[ry];
        self.edges[rx] += self.edges[ry] + 1;
        Undo::Merged { child: ry, root: rx }
    }

    fn undo(&mut self, u: Undo) {
        match u {
            Undo::Same(r) => self.edges[r] -= 1,
            Undo::Merged { child, root } => {
                self.parent[child] = child;
                self.size[root] -= self.size[child];
                self.open[root] -= self.open[child];
                self.edges[root] -= self.edges[child] + 1;
            }
        }
    }
}
