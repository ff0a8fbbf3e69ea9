//! Rewriting cycle decompositions so that every component of `H \ S`
//! meets at most one cycle that requires completion, and at most one cycle
//! traverses exactly one edge equal to `S`.
//!
//! Both rewrites recombine the `u`-`v` halves of two cycles; the union of
//! flags never changes, so the result decomposes the same subgraph.

use thiserror::Error;

use crate::cycles::{cycle_decomposition, CycleDecomposition, PairContext, PairError, SType};
use crate::hypergraph::{EdgeId, Hypergraph, Vertex};
use crate::trail::{validate_trail, ClosedTrail, OpenTrail, TrailError, TrailViolation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormalizeError {
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error("cycle {index}: {violation}")]
    InvalidCycle { index: usize, violation: TrailViolation },
    #[error("cycle {0} repeats an anchor")]
    NotACycle(usize),
    #[error(transparent)]
    Trail(#[from] TrailError),
    #[error("edge {0} is not covered by the decomposition")]
    Uncovered(EdgeId),
    #[error("vertex {0} is not an anchor of the decomposition")]
    Unanchored(Vertex),
    #[error("two cycles with one edge equal to S lie in the same component")]
    SameComponent,
}

const TWO_ONE_ONE: SType = SType::new(2, 1, 1);

/// The two `u`-`v` halves of a cycle through both vertices of S, each
/// running from `u` to `v`, tagged with the component it meets (`None`
/// for a single edge equal to S).
fn halves(ctx: &PairContext, c: &ClosedTrail) -> [(Option<usize>, OpenTrail); 2] {
    let r = c.starting_at(ctx.u()).expect("cycle passes through u");
    let j = r.anchors().iter().position(|&x| x == ctx.v()).expect("cycle passes through v");
    let a = r.anchors();
    let e = r.edges();
    let first = OpenTrail::from_parts(a[..=j].to_vec(), e[..j].to_vec());
    let mut back_anchors = a[j..].to_vec();
    back_anchors.push(ctx.u());
    let second = OpenTrail::from_parts(back_anchors, e[j..].to_vec()).reversed();
    let owner = |t: &OpenTrail| t.edges().iter().find_map(|&e| ctx.class_of_edge(e));
    [(owner(&first), first), (owner(&second), second)]
}

fn split_by_owner(ctx: &PairContext, c: &ClosedTrail, j: usize) -> (OpenTrail, OpenTrail) {
    let [(o1, t1), (_, t2)] = halves(ctx, c);
    if o1 == Some(j) {
        (t1, t2)
    } else {
        (t2, t1)
    }
}

fn cycles_of(t: &ClosedTrail) -> Vec<ClosedTrail> {
    cycle_decomposition(std::slice::from_ref(t)).expect("a single trail is edge-disjoint").cycles
}

fn check(h: &Hypergraph, c: &CycleDecomposition) -> Result<(), NormalizeError> {
    for (index, cycle) in c.cycles.iter().enumerate() {
        validate_trail(h, cycle).map_err(|violation| NormalizeError::InvalidCycle { index, violation })?;
        if !cycle.is_cycle() {
            return Err(NormalizeError::NotACycle(index));
        }
    }
    let g = crate::trail::family_incidence_graph(&c.cycles)?;
    let covered = g.edge_degrees();
    if let Some(e) = h.edge_ids().find(|e| !covered.contains_key(e)) {
        return Err(NormalizeError::Uncovered(e));
    }
    let anchored = g.vertex_degrees();
    if let Some(&v) = h.vertices().iter().find(|v| !anchored.contains_key(v)) {
        return Err(NormalizeError::Unanchored(v));
    }
    Ok(())
}

/// Normalizes a spanning cycle decomposition of `h` relative to the pair
/// `s`.
///
/// First, while some component meets two cycles requiring completion,
/// the two are recombined through that component. Then, while two cycles
/// traverse exactly one edge equal to S, their component halves are joined
/// and the two single edges form a 2-cycle. The input is returned as is
/// when nothing needs rewriting.
pub fn normalize_cycle_decomposition(
    h: &Hypergraph,
    s: &[Vertex],
    c: &CycleDecomposition,
) -> Result<CycleDecomposition, NormalizeError> {
    let ctx = PairContext::new(h, s)?;
    check(h, c)?;
    let mut cycles = c.cycles.clone();
    let mut changed = false;

    while let Some((j, p, q)) = (0..ctx.component_count()).find_map(|j| {
        let mut hit = (0..cycles.len()).filter(|&x| {
            ctx.s_type(&cycles[x]).requires_completion() && ctx.components_touched(&cycles[x]).contains(&j)
        });
        Some((j, hit.next()?, hit.next()?))
    }) {
        let (x, x_rest) = split_by_owner(&ctx, &cycles[p], j);
        let (y, y_rest) = split_by_owner(&ctx, &cycles[q], j);
        let mut fresh = cycles_of(&x.close_with(&y.reversed()));
        fresh.extend(cycles_of(&x_rest.close_with(&y_rest.reversed())));
        cycles.remove(q);
        cycles.remove(p);
        cycles.extend(fresh);
        cycles.sort();
        changed = true;
    }

    loop {
        let single: Vec<usize> = (0..cycles.len()).filter(|&x| ctx.s_type(&cycles[x]) == TWO_ONE_ONE).collect();
        if single.len() < 2 {
            break;
        }
        let (p, q) = (single[0], single[1]);
        let [a1, a2] = halves(&ctx, &cycles[p]);
        let [b1, b2] = halves(&ctx, &cycles[q]);
        let (path_a, edge_a) = if a1.0.is_some() { (a1, a2) } else { (a2, a1) };
        let (path_b, edge_b) = if b1.0.is_some() { (b1, b2) } else { (b2, b1) };
        if path_a.0 == path_b.0 {
            return Err(NormalizeError::SameComponent);
        }
        let joined = path_a.1.close_with(&path_b.1.reversed());
        let pair = edge_a.1.close_with(&edge_b.1.reversed());
        cycles.remove(q);
        cycles.remove(p);
        cycles.push(joined.canonical());
        cycles.push(pair.canonical());
        cycles.sort();
        changed = true;
    }

    if !changed {
        return Ok(c.clone());
    }
    Ok(CycleDecomposition { cycles })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::with_order(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn t(anchors: &[Vertex], edges: &[usize]) -> ClosedTrail {
        ClosedTrail::from_numbers(anchors, edges).canonical()
    }

    fn rc(ctx: &PairContext, c: &CycleDecomposition) -> Vec<usize> {
        (0..ctx.component_count()).map(|j| c.requiring_completion(ctx, j)).collect()
    }

    #[test]
    fn two_crossing_cycles_are_recombined() {
        // S = {1, 2}; component A = {3, 4}, component B = {5, 6}.
        let g = h(6, &[&[1, 3], &[2, 3, 4], &[1, 5], &[2, 5, 6], &[1, 4], &[2, 4], &[1, 6], &[2, 6]]);
        let c = CycleDecomposition { cycles: vec![t(&[1, 3, 2, 5], &[1, 2, 4, 3]), t(&[1, 4, 2, 6], &[5, 6, 8, 7])] };
        let ctx = PairContext::new(&g, &[1, 2]).unwrap();
        assert_eq!(rc(&ctx, &c), vec![2, 2]);
        let n = normalize_cycle_decomposition(&g, &[1, 2], &c).unwrap();
        assert_eq!(rc(&ctx, &n), vec![0, 0]);
        assert_eq!(n.graph(), c.graph());
        assert_eq!(n.cycles, vec![t(&[1, 3, 2, 4], &[1, 2, 6, 5]), t(&[1, 5, 2, 6], &[3, 4, 8, 7])]);
    }

    #[test]
    fn single_edge_cycles_are_paired() {
        // Two pair edges, one path through each component.
        let g = h(4, &[&[1, 2], &[1, 2], &[1, 3], &[2, 3], &[1, 4], &[2, 4]]);
        let c = CycleDecomposition { cycles: vec![t(&[1, 2, 3], &[1, 4, 3]), t(&[1, 2, 4], &[2, 6, 5])] };
        let n = normalize_cycle_decomposition(&g, &[1, 2], &c).unwrap();
        let ctx = PairContext::new(&g, &[1, 2]).unwrap();
        assert_eq!(n.count_of(&ctx, TWO_ONE_ONE), 0);
        assert_eq!(n.count_of(&ctx, SType::new(2, 2, 0)), 1);
        assert_eq!(n.count_of(&ctx, SType::new(2, 0, 2)), 1);
    }

    #[test]
    fn already_normal_is_unchanged() {
        let g = h(4, &[&[1, 3], &[2, 3], &[1, 4], &[2, 4]]);
        let c = CycleDecomposition { cycles: vec![t(&[1, 3, 2, 4], &[1, 2, 4, 3])] };
        assert_eq!(normalize_cycle_decomposition(&g, &[1, 2], &c).unwrap(), c);
    }

    #[test]
    fn rejects_partial_cover() {
        let g = h(4, &[&[1, 3], &[2, 3], &[1, 4], &[2, 4], &[3, 4]]);
        let c = CycleDecomposition { cycles: vec![t(&[1, 3, 2, 4], &[1, 2, 4, 3])] };
        assert_eq!(normalize_cycle_decomposition(&g, &[1, 2], &c), Err(NormalizeError::Uncovered(EdgeId(4))));
    }
}
