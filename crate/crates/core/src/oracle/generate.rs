//! Seeded random hypergraphs with optional planted vertex cuts.
//!
//! The generator draws from xoshiro256++ seeded through `seed_from_u64`,
//! so a seed reproduces the same hypergraph everywhere. Every part is made
//! connected by first laying down a chain of edges that each add at least
//! one new vertex. Vertex labels are shuffled and edges permuted at the
//! end, so the planted structure does not sit at fixed positions.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use thiserror::Error;

use crate::hypergraph::{Hypergraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    Uniform,
    /// Two parts sharing one vertex.
    Glued1Cut,
    /// `parts` parts sharing a pair `{u, v}`, plus `parallel` edges `{u, v}`.
    Glued2Cut {
        parts: usize,
        parallel: usize,
    },
    /// Two sides joined only through `cut_size` vertices of degree 2.
    Deg2Cut {
        cut_size: usize,
    },
}

/// Vertex, edge and edge-size ranges apply per part for the glued and
/// cut structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorParams {
    pub seed: u64,
    pub n: RangeInclusive<usize>,
    pub m: RangeInclusive<usize>,
    pub edge_size: RangeInclusive<usize>,
    pub structure: Structure,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("empty {0} range")]
    EmptyRange(&'static str),
    #[error("unsatisfiable parameters: {0}")]
    Unsatisfiable(String),
}

type Rng = Xoshiro256PlusPlus;

pub fn random_hypergraph(p: &GeneratorParams) -> Result<Hypergraph, GenError> {
    for (name, r) in [("vertex count", &p.n), ("edge count", &p.m), ("edge size", &p.edge_size)] {
        if r.is_empty() {
            return Err(GenError::EmptyRange(name));
        }
    }
    if *p.edge_size.start() == 0 {
        return Err(GenError::Unsatisfiable("edges must be non-empty".into()));
    }
    let mut rng = Rng::seed_from_u64(p.seed);
    let (n, mut edges) = match p.structure {
        Structure::Uniform => {
            let n = draw(&mut rng, &p.n);
            (n, part(&mut rng, n, p)?)
        }
        Structure::Glued1Cut => glued(&mut rng, p, 1, 2, 0)?,
        Structure::Glued2Cut { parts, parallel } => {
            if parts < 2 {
                return Err(GenError::Unsatisfiable("a 2-cut needs at least two parts".into()));
            }
            glued(&mut rng, p, 2, parts, parallel)?
        }
        Structure::Deg2Cut { cut_size } => deg2_cut(&mut rng, p, cut_size)?,
    };
    let mut labels: Vec<Vertex> = (1..=n as Vertex).collect();
    labels.shuffle(&mut rng);
    for e in &mut edges {
        for v in e.iter_mut() {
            *v = labels[*v as usize];
        }
    }
    edges.shuffle(&mut rng);
    Ok(Hypergraph::with_order(n, edges).expect("generated edges are valid"))
}

fn draw(rng: &mut Rng, r: &RangeInclusive<usize>) -> usize {
    rng.random_range(r.clone())
}

/// A connected hypergraph on local vertices `0..n` with edge count drawn
/// from the parameters.
fn part(rng: &mut Rng, n: usize, p: &GeneratorParams) -> Result<Vec<Vec<Vertex>>, GenError> {
    if n <= 1 {
        return Ok(Vec::new());
    }
    let smin = (*p.edge_size.start()).min(n);
    let smax = (*p.edge_size.end()).min(n);
    if smax < 2 {
        return Err(GenError::Unsatisfiable(format!("edges of size {smax} cannot connect {n} vertices")));
    }
    let need = (n - 1).div_ceil(smax - 1);
    let lo = (*p.m.start()).max(need);
    if lo > *p.m.end() {
        return Err(GenError::Unsatisfiable(format!("{n} vertices need at least {need} edges")));
    }
    let m = rng.random_range(lo..=*p.m.end());

    let mut order: Vec<Vertex> = (0..n as Vertex).collect();
    order.shuffle(rng);
    let mut covered = vec![order[0]];
    let mut uncovered: Vec<Vertex> = order[1..].to_vec();
    let mut edges = Vec::with_capacity(m);
    while !uncovered.is_empty() {
        let left = m - edges.len();
        let r = uncovered.len();
        let s = rng.random_range(smin.max(2)..=smax);
        let forced = r.saturating_sub((left - 1) * (smax - 1));
        let fresh = (s - 1).max(forced).min(r).min(smax - 1);
        let mut edge = vec![covered[rng.random_range(0..covered.len())]];
        for _ in 0..fresh {
            edge.push(uncovered.pop().unwrap());
        }
        let mut others: Vec<Vertex> = covered.iter().copied().filter(|v| !edge.contains(v)).collect();
        others.shuffle(rng);
        let extra = (s - 1 - fresh.min(s - 1)).min(others.len());
        edge.extend(&others[..extra]);
        covered.extend(&edge[1..1 + fresh]);
        edges.push(edge);
    }
    while edges.len() < m {
        let s = rng.random_range(smin..=smax);
        let mut vs: Vec<Vertex> = (0..n as Vertex).collect();
        vs.shuffle(rng);
        vs.truncate(s);
        edges.push(vs);
    }
    Ok(edges)
}

/// Parts glued on the shared local vertices `0..shared`; parts are placed
/// after one another with their own vertices shifted.
fn glued(
    rng: &mut Rng,
    p: &GeneratorParams,
    shared: usize,
    parts: usize,
    parallel: usize,
) -> Result<(usize, Vec<Vec<Vertex>>), GenError> {
    let min_part = shared + 1;
    if *p.n.end() < min_part {
        return Err(GenError::Unsatisfiable(format!("parts need at least {min_part} vertices")));
    }
    let n_range = (*p.n.start()).max(min_part)..=*p.n.end();
    let mut total = shared;
    let mut edges = Vec::new();
    for _ in 0..parts {
        let k = draw(rng, &n_range);
        let mut local = None;
        for _ in 0..100 {
            let candidate = part(rng, k, p)?;
            // Edges equal to the shared pair are added only on purpose.
            if shared < 2 || !candidate.iter().any(|e| e.len() == 2 && e.contains(&0) && e.contains(&1)) {
                local = Some(candidate);
                break;
            }
        }
        let local = local.ok_or_else(|| GenError::Unsatisfiable("could not avoid edges on the shared pair".into()))?;
        let offset = (total - shared) as Vertex;
        for e in local {
            edges.push(e.into_iter().map(|v| if (v as usize) < shared { v } else { v + offset }).collect());
        }
        total += k - shared;
    }
    for _ in 0..parallel {
        edges.push(vec![0, 1]);
    }
    Ok((total, edges))
}

/// Two sides whose only links are `cut` vertices, each lying in exactly
/// one edge into either side.
fn deg2_cut(rng: &mut Rng, p: &GeneratorParams, cut: usize) -> Result<(usize, Vec<Vec<Vertex>>), GenError> {
    if cut == 0 {
        return Err(GenError::Unsatisfiable("cut size must be positive".into()));
    }
    let na = draw(rng, &p.n);
    let nb = draw(rng, &p.n);
    if na == 0 || nb == 0 {
        return Err(GenError::Unsatisfiable("each side needs a vertex".into()));
    }
    let mut edges = Vec::new();
    let a_edges = part(rng, na, p)?;
    edges.extend(a_edges);
    let b_edges = part(rng, nb, p)?;
    edges.extend(b_edges.into_iter().map(|e| e.into_iter().map(|v| v + na as Vertex).collect()));
    let cut_vertices: Vec<Vertex> = (0..cut).map(|i| (na + nb + i) as Vertex).collect();
    for (start, size) in [(0, na), (na, nb)] {
        let mut groups: Vec<Vec<Vertex>> = Vec::new();
        for &x in &cut_vertices {
            if !groups.is_empty() && rng.random_bool(0.5) {
                let g = rng.random_range(0..groups.len());
                groups[g].push(x);
            } else {
                groups.push(vec![x]);
            }
        }
        for g in groups {
            let s = draw(rng, &p.edge_size);
            let t = s.saturating_sub(g.len()).clamp(1, size);
            let mut side: Vec<Vertex> = (start as Vertex..(start + size) as Vertex).collect();
            side.shuffle(rng);
            let mut e = g;
            e.extend(&side[..t]);
            edges.push(e);
        }
    }
    Ok((na + nb + cut, edges))
}
