use proptest::prelude::*;

use hypereuler::cycles::{cycle_decomposition, PairContext, SType};
use hypereuler::format::{format_witness, parse_hypergraph, parse_witness};
use hypereuler::oracle::{random_hypergraph, verify_witness, GeneratorParams, Structure};
use hypereuler::reduce::{decide_reduced, find_vertex_cuts, normalize_cycle_decomposition, VertexCut};
use hypereuler::solver::decide_direct;
use hypereuler::trail::{ClosedTrail, EulerFamily};
use hypereuler::{Hypergraph, Mode};

fn structure() -> impl Strategy<Value = Structure> {
    prop_oneof![
        Just(Structure::Uniform),
        Just(Structure::Glued1Cut),
        (2usize..=3, 0usize..=3).prop_map(|(parts, parallel)| Structure::Glued2Cut { parts, parallel }),
        (1usize..=4).prop_map(|cut_size| Structure::Deg2Cut { cut_size }),
    ]
}

fn params(max_n: usize) -> impl Strategy<Value = GeneratorParams> {
    (any::<u64>(), structure()).prop_map(move |(seed, structure)| {
        let (n, m) = match structure {
            Structure::Uniform => (3..=max_n, 2..=max_n + 2),
            _ => (2..=max_n / 2, 1..=4),
        };
        GeneratorParams { seed, n, m, edge_size: 2..=3, structure }
    })
}

fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    params(max_n).prop_filter_map("generator rejected the parameters", |p| random_hypergraph(&p).ok())
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Family), Just(Mode::Tour)]
}

/// A spanning witness of `h`, when one exists.
fn witness(h: &Hypergraph, mode: Mode) -> Option<EulerFamily> {
    decide_direct(h, mode, true).unwrap().witness
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generator_is_deterministic(p in params(8)) {
        prop_assert_eq!(random_hypergraph(&p), random_hypergraph(&p));
    }

    #[test]
    fn text_round_trip(h in hypergraph(8)) {
        prop_assert_eq!(parse_hypergraph(&h.to_text()).unwrap(), h);
    }

    #[test]
    fn witness_text_round_trip(h in hypergraph(8), mode in mode()) {
        if let Some(w) = witness(&h, mode) {
            let back = parse_witness(&format_witness(&w)).unwrap();
            prop_assert!(verify_witness(&h, &back, mode, true).is_ok());
        }
    }

    #[test]
    fn dropped_trail_is_rejected(h in hypergraph(8), mode in mode(), pick in any::<prop::sample::Index>()) {
        let Some(mut w) = witness(&h, mode) else { return Ok(()) };
        prop_assume!(!w.trails.is_empty());
        w.trails.remove(pick.index(w.trails.len()));
        prop_assert!(verify_witness(&h, &w, mode, true).is_err());
    }

    #[test]
    fn duplicated_trail_is_rejected(h in hypergraph(8), mode in mode(), pick in any::<prop::sample::Index>()) {
        let Some(mut w) = witness(&h, mode) else { return Ok(()) };
        prop_assume!(!w.trails.is_empty());
        let t = w.trails[pick.index(w.trails.len())].clone();
        w.trails.push(t);
        prop_assert!(verify_witness(&h, &w, Mode::Family, false).is_err());
    }

    #[test]
    fn foreign_anchor_is_rejected(h in hypergraph(8), mode in mode(), pick in any::<prop::sample::Index>()) {
        let Some(mut w) = witness(&h, mode) else { return Ok(()) };
        prop_assume!(!w.trails.is_empty());
        let i = pick.index(w.trails.len());
        let t = &w.trails[i];
        let e = t.edges()[0];
        let Some(&x) = h.vertices().iter().find(|&&x| !h.is_incident(x, e)) else { return Ok(()) };
        let mut anchors = t.anchors().to_vec();
        anchors[0] = x;
        w.trails[i] = ClosedTrail::from_parts(anchors, t.edges().to_vec());
        prop_assert!(verify_witness(&h, &w, Mode::Family, false).is_err());
    }

    #[test]
    fn found_cuts_satisfy_the_lemma(h in hypergraph(10)) {
        for c in find_vertex_cuts(&h, 2) {
            prop_assert!(c.component_count() >= 2);
            // Edges off the cut never join two components.
            let rest = h.delete_vertices(c.set()).unwrap();
            for e in rest.hypergraph.edges() {
                let owners: std::collections::BTreeSet<usize> = e
                    .iter()
                    .map(|&x| c.components().iter().position(|cl| cl.contains(&x)).unwrap())
                    .collect();
                prop_assert!(owners.len() <= 1);
            }
            if c.is_minimal() {
                for &x in c.set() {
                    for cl in c.components() {
                        prop_assert!(cl.iter().any(|y| h.neighbours(x).contains(y)));
                    }
                }
            }
            prop_assert!(VertexCut::new(&h, c.set()).is_ok());
        }
    }

    #[test]
    fn normalization_invariants(h in hypergraph(8), mode in mode()) {
        let Some(w) = witness(&h, mode) else { return Ok(()) };
        let dec = cycle_decomposition(&w.trails).unwrap();
        for cut in find_vertex_cuts(&h, 2).into_iter().filter(|c| c.size() == 2) {
            let ctx = PairContext::new(&h, cut.set()).unwrap();
            let out = normalize_cycle_decomposition(&h, cut.set(), &dec).unwrap();
            prop_assert_eq!(out.graph(), dec.graph());
            for j in 0..ctx.component_count() {
                prop_assert!(out.requiring_completion(&ctx, j) <= 1);
            }
            prop_assert_eq!(out.count_of(&ctx, SType::new(2, 1, 1)), cut.pair_edges().len() % 2);
            prop_assert!(out.cycles.iter().all(|c| ctx.s_type(c).is_cycle_type()));
            prop_assert_eq!(normalize_cycle_decomposition(&h, cut.set(), &out).unwrap(), out.clone());
        }
    }

    #[test]
    fn reducer_agrees_with_direct(h in hypergraph(8), mode in mode()) {
        let (d, _) = decide_reduced(&h, mode).unwrap();
        prop_assert_eq!(d.is_yes(), decide_direct(&h, mode, true).unwrap().is_yes());
        if let Some(w) = &d.witness {
            prop_assert!(verify_witness(&h, w, mode, true).is_ok());
        }
    }
}
