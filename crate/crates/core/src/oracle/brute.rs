//! Exhaustive ground truth.
//!
//! Every admissible subgraph of the incidence graph gives each edge degree
//! exactly 2, so it is fixed by one anchor pair per edge. The oracle walks
//! the product of those choices in lexicographic order (edge 1 slowest)
//! and stops at the first accepted assignment.

use thiserror::Error;

use crate::hypergraph::{Flag, Hypergraph};
use crate::solver::{Decision, Mode, NoReason};
use crate::trail::{family_from_even_subgraph, EulerFamily, TrailGraph};

/// Largest total edge size the oracle accepts.
pub const FLAG_BUDGET: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("hypergraph has {flags} flags; the oracle budget is {budget}")]
    OverBudget { flags: usize, budget: usize },
}

pub fn brute_force_decide(h: &Hypergraph, mode: Mode, spanning: bool) -> Result<Decision, OracleError> {
    let flags = h.flag_count();
    if flags > FLAG_BUDGET {
        return Err(OracleError::OverBudget { flags, budget: FLAG_BUDGET });
    }
    let m = h.size();
    if m == 0 {
        return Ok(match mode {
            Mode::Tour => Decision::no(NoReason::NoEdges),
            Mode::Family if spanning => Decision::no(NoReason::Exhausted),
            Mode::Family => Decision::yes(EulerFamily { trails: Vec::new(), spanning: false }),
        });
    }
    let pairs: Vec<Vec<(usize, usize)>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut p = Vec::new();
            for a in 0..e.len() {
                for b in a + 1..e.len() {
                    p.push((e[a], e[b]));
                }
            }
            p.into_iter().map(|(x, y)| (x as usize, y as usize)).collect()
        })
        .collect();
    if pairs.iter().any(Vec::is_empty) {
        return Ok(Decision::no(NoReason::Exhausted));
    }
    let index: std::collections::HashMap<usize, usize> =
        h.vertices().iter().enumerate().map(|(i, &v)| (v as usize, i)).collect();
    let n = h.order();
    let mut choice = vec![0usize; m];
    loop {
        if accepts(n, &index, &pairs, &choice, mode, spanning) {
            let g = TrailGraph::from_flags(h.edge_ids().flat_map(|e| {
                let (x, y) = pairs[e.0][choice[e.0]];
                [Flag::new(x as u32, e), Flag::new(y as u32, e)]
            }));
            let mut w = family_from_even_subgraph(h, &g).expect("accepted subgraph is even");
            w.spanning = spanning;
            return Ok(Decision::yes(w));
        }
        // Odometer, last edge fastest.
        let mut j = m;
        loop {
            if j == 0 {
                return Ok(Decision::no(NoReason::Exhausted));
            }
            j -= 1;
            choice[j] += 1;
            if choice[j] < pairs[j].len() {
                break;
            }
            choice[j] = 0;
        }
    }
}

fn accepts(
    n: usize,
    index: &std::collections::HashMap<usize, usize>,
    pairs: &[Vec<(usize, usize)>],
    choice: &[usize],
    mode: Mode,
    spanning: bool,
) -> bool {
    let mut deg = vec![0usize; n];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (p, &c) in pairs.iter().zip(choice) {
        let (x, y) = p[c];
        let (i, j) = (index[&x], index[&y]);
        deg[i] += 1;
        deg[j] += 1;
        adj[i].push(j);
        adj[j].push(i);
    }
    if deg.iter().any(|&d| d % 2 == 1 || (spanning && d == 0)) {
        return false;
    }
    if mode == Mode::Family {
        return true;
    }
    // Connectivity of the vertices that carry edges.
    let start = deg.iter().position(|&d| d > 0).expect("at least one edge");
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..n).all(|i| deg[i] == 0 || seen[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Vertex;

    fn h(n: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::with_order(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn yes(g: &Hypergraph, mode: Mode, spanning: bool) -> bool {
        brute_force_decide(g, mode, spanning).unwrap().is_yes()
    }

    #[test]
    fn triangle() {
        let g = h(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(yes(&g, Mode::Family, true));
        assert!(yes(&g, Mode::Tour, true));
    }

    #[test]
    fn two_triple_edges() {
        let g = h(3, &[&[1, 2, 3], &[1, 2, 3]]);
        assert!(!yes(&g, Mode::Family, true));
        assert!(yes(&g, Mode::Family, false));
    }

    #[test]
    fn doubled_edge() {
        let g = h(2, &[&[1, 2], &[1, 2]]);
        assert!(yes(&g, Mode::Family, true));
        assert!(yes(&g, Mode::Tour, true));
    }

    #[test]
    fn budget() {
        let big: Vec<Vec<Vertex>> = (0..13).map(|_| vec![1, 2]).collect();
        let g = Hypergraph::with_order(2, big).unwrap();
        assert!(matches!(brute_force_decide(&g, Mode::Family, true), Err(OracleError::OverBudget { flags: 26, .. })));
    }

    #[test]
    fn no_edges() {
        let g = h(1, &[]);
        assert!(yes(&g, Mode::Family, false));
        assert!(!yes(&g, Mode::Family, true));
        assert!(!yes(&g, Mode::Tour, false));
    }
}
