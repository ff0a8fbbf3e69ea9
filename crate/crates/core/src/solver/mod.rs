//! Direct decision procedures for (spanning) Euler families and tours.

pub mod factor;
pub mod matching;
pub mod tour;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::hypergraph::{set_string, EdgeId, Hypergraph, Vertex};
use crate::trail::{family_from_even_subgraph, EulerFamily, TrailError, TrailGraph};

use factor::{parity_factor_subgraph, DegreeConstraintProblem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Family,
    Tour,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Family => "family",
            Mode::Tour => "tour",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_yes() { "YES" } else { "NO" })
    }
}

/// A failed clause of the necessary conditions for a spanning Euler family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// (i) every edge has at least two vertices.
    SmallEdge { edge: EdgeId, size: usize },
    /// (ii) every vertex has degree at least two.
    LowDegree { vertex: Vertex, degree: usize },
    /// (iii) `2 <= |V| <= |E|`.
    Counts { vertices: usize, edges: usize },
    /// (iv) more than `k` vertices of degree `k` share the same `k` edges.
    Crowded { edges: Vec<EdgeId>, vertices: Vec<Vertex> },
}

impl Condition {
    pub fn clause(&self) -> &'static str {
        match self {
            Condition::SmallEdge { .. } => "i",
            Condition::LowDegree { .. } => "ii",
            Condition::Counts { .. } => "iii",
            Condition::Crowded { .. } => "iv",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "necessary condition ({}): ", self.clause())?;
        match self {
            Condition::SmallEdge { edge, size } => write!(f, "edge {edge} has {size} vertex"),
            Condition::LowDegree { vertex, degree } => write!(f, "vertex {vertex} has degree {degree}"),
            Condition::Counts { vertices, edges } => write!(f, "|V|={vertices}, |E|={edges}"),
            Condition::Crowded { edges, vertices } => {
                let es: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
                write!(f, "vertices {} all lie in exactly {{{}}}", set_string(vertices), es.join(","))
            }
        }
    }
}

/// Why a decision came out NO.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NoReason {
    Necessary(Condition),
    /// No subgraph of the incidence graph meets the degree constraints.
    NoFactor,
    /// The tour search tried every anchor-pair assignment.
    SearchExhausted,
    /// Tours need a connected hypergraph (or all edges in one component).
    Disconnected,
    /// A closed trail needs at least two edges.
    NoEdges,
    /// An edge with fewer than two vertices can never be traversed.
    Untraversable(EdgeId),
    /// The brute-force enumeration found nothing.
    Exhausted,
    /// A component of a disconnected hypergraph failed.
    Component {
        index: usize,
        reason: Box<NoReason>,
    },
    /// A cut theorem rejected the instance.
    Cut {
        rule: &'static str,
        set: Vec<Vertex>,
    },
}

impl NoReason {
    /// Short machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            NoReason::Necessary(c) => match c {
                Condition::SmallEdge { .. } => "necessary-i",
                Condition::LowDegree { .. } => "necessary-ii",
                Condition::Counts { .. } => "necessary-iii",
                Condition::Crowded { .. } => "necessary-iv",
            },
            NoReason::NoFactor => "no-factor",
            NoReason::SearchExhausted => "search-exhausted",
            NoReason::Disconnected => "disconnected",
            NoReason::NoEdges => "no-edges",
            NoReason::Untraversable(_) => "untraversable-edge",
            NoReason::Exhausted => "oracle-exhausted",
            NoReason::Component { reason, .. } => reason.code(),
            NoReason::Cut { rule, .. } => rule,
        }
    }
}

impl fmt::Display for NoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoReason::Necessary(c) => write!(f, "{c}"),
            NoReason::NoFactor => f.write_str("no degree-constrained subgraph of the incidence graph"),
            NoReason::SearchExhausted => f.write_str("search exhausted"),
            NoReason::Disconnected => f.write_str("edges lie in more than one component"),
            NoReason::NoEdges => f.write_str("no edges to traverse"),
            NoReason::Untraversable(e) => write!(f, "edge {e} has fewer than two vertices"),
            NoReason::Exhausted => f.write_str("no admissible anchor assignment"),
            NoReason::Component { index, reason } => write!(f, "component {}: {reason}", index + 1),
            NoReason::Cut { rule, set } => write!(f, "{rule} at S={}", set_string(set)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub witness: Option<EulerFamily>,
    pub reason: Option<NoReason>,
}

impl Decision {
    pub fn yes(witness: EulerFamily) -> Self {
        Decision { verdict: Verdict::Yes, witness: Some(witness), reason: None }
    }

    pub fn no(reason: NoReason) -> Self {
        Decision { verdict: Verdict::No, witness: None, reason: Some(reason) }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict.is_yes()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("hypergraph is disconnected; decide its components separately")]
    Disconnected,
    #[error("internal error building a witness: {0}")]
    Witness(#[from] TrailError),
}

/// Checks clauses (i) to (iv) in order and reports the first failure.
///
/// Clause (iv) is checked exactly: a vertex of degree `k` lies in the
/// intersection of a `k`-set of edges only when that set is its own
/// incidence set, so it suffices to group vertices by incidence set.
pub fn check_necessary_conditions(h: &Hypergraph) -> Result<(), Condition> {
    check_basic_conditions(h)?;
    let mut groups: BTreeMap<Vec<EdgeId>, Vec<Vertex>> = BTreeMap::new();
    for &v in h.vertices() {
        groups.entry(h.incident_edges(v)).or_default().push(v);
    }
    for (edges, vertices) in groups {
        if edges.len() >= 2 && vertices.len() > edges.len() {
            return Err(Condition::Crowded { edges, vertices });
        }
    }
    Ok(())
}

/// Clauses (i) to (iii) only.
pub fn check_basic_conditions(h: &Hypergraph) -> Result<(), Condition> {
    for e in h.edge_ids() {
        let size = h.edge(e).len();
        if size < 2 {
            return Err(Condition::SmallEdge { edge: e, size });
        }
    }
    for (&v, &d) in h.vertices().iter().zip(&h.degrees()) {
        if d < 2 {
            return Err(Condition::LowDegree { vertex: v, degree: d });
        }
    }
    if h.order() < 2 || h.order() > h.size() {
        return Err(Condition::Counts { vertices: h.order(), edges: h.size() });
    }
    Ok(())
}

/// The parity-factor instance on the incidence graph: e-vertices need
/// degree exactly 2, v-vertices an even degree, positive if `spanning`.
/// `None` when some vertex or edge cannot meet its bound at all.
fn incidence_problem(
    h: &Hypergraph,
    spanning: bool,
) -> Option<(DegreeConstraintProblem, Vec<crate::hypergraph::Flag>)> {
    let inc = h.incidence_graph();
    let mut g = Graph::new(inc.graph().node_count());
    for &(a, b) in inc.graph().edges() {
        g.add_edge(a, b);
    }
    let mut bounds = Vec::with_capacity(g.node_count());
    for d in h.degrees() {
        let hi = d - d % 2;
        let lo = if spanning { 2 } else { 0 };
        if lo > hi {
            return None;
        }
        bounds.push((lo, hi));
    }
    for e in h.edges() {
        if e.len() < 2 {
            return None;
        }
        bounds.push((2, 2));
    }
    let p = DegreeConstraintProblem::new(g, bounds).expect("bounds are parity intervals");
    Some((p, inc.flags().to_vec()))
}

fn decide_family(h: &Hypergraph, spanning: bool) -> Result<Decision, SolveError> {
    if !h.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if spanning {
        if let Err(c) = check_basic_conditions(h) {
            return Ok(Decision::no(NoReason::Necessary(c)));
        }
    } else if let Some(e) = h.edge_ids().find(|&e| h.edge(e).len() < 2) {
        return Ok(Decision::no(NoReason::Untraversable(e)));
    }
    let Some((p, flags)) = incidence_problem(h, spanning) else {
        return Ok(Decision::no(NoReason::NoFactor));
    };
    match parity_factor_subgraph(&p) {
        None => Ok(Decision::no(NoReason::NoFactor)),
        Some(chosen) => {
            let g = TrailGraph::from_flags(chosen.into_iter().map(|t| flags[t]));
            let mut w = family_from_even_subgraph(h, &g)?;
            w.spanning = spanning;
            Ok(Decision::yes(w))
        }
    }
}

/// Spanning Euler family of a connected hypergraph.
pub fn decide_spanning_euler_family(h: &Hypergraph) -> Result<Decision, SolveError> {
    decide_family(h, true)
}

/// Euler family (not necessarily spanning) of a connected hypergraph.
pub fn decide_euler_family(h: &Hypergraph) -> Result<Decision, SolveError> {
    decide_family(h, false)
}

/// Spanning Euler tour of a connected hypergraph.
pub fn decide_spanning_euler_tour(h: &Hypergraph) -> Result<Decision, SolveError> {
    tour::decide_tour(h, true)
}

/// Euler tour (not necessarily spanning) of a connected hypergraph.
pub fn decide_euler_tour(h: &Hypergraph) -> Result<Decision, SolveError> {
    tour::decide_tour(h, false)
}

/// Decides any hypergraph by splitting it into connected components.
pub fn decide_direct(h: &Hypergraph, mode: Mode, spanning: bool) -> Result<Decision, SolveError> {
    let comps = h.connected_components();
    if comps.count() == 1 {
        return match (mode, spanning) {
            (Mode::Family, true) => decide_spanning_euler_family(h),
            (Mode::Family, false) => decide_euler_family(h),
            (Mode::Tour, true) => decide_spanning_euler_tour(h),
            (Mode::Tour, false) => decide_euler_tour(h),
        };
    }
    match mode {
        Mode::Tour if spanning => Ok(Decision::no(NoReason::Disconnected)),
        Mode::Tour => {
            let with_edges: Vec<usize> = (0..comps.count()).filter(|&i| !comps.edges[i].is_empty()).collect();
            match with_edges.as_slice() {
                [] => Ok(Decision::no(NoReason::NoEdges)),
                [i] => {
                    let sub = h.induced_subhypergraph(&comps.classes[*i]).expect("class is non-empty");
                    let d = decide_euler_tour(&sub.hypergraph)?;
                    Ok(lift_decision(d, &sub.parent_edges, false, *i))
                }
                _ => Ok(Decision::no(NoReason::Disconnected)),
            }
        }
        Mode::Family => {
            let mut trails = Vec::new();
            for (i, class) in comps.classes.iter().enumerate() {
                let sub = h.induced_subhypergraph(class).expect("class is non-empty");
                let d = decide_family(&sub.hypergraph, spanning)?;
                let d = lift_decision(d, &sub.parent_edges, spanning, i);
                match d.witness {
                    Some(w) => trails.extend(w.trails),
                    None => return Ok(d),
                }
            }
            Ok(Decision::yes(EulerFamily { trails, spanning }))
        }
    }
}

/// Renames edge ids of a subhypergraph decision back to the parent.
pub(crate) fn lift_decision(d: Decision, parent_edges: &[EdgeId], spanning: bool, index: usize) -> Decision {
    match d.witness {
        Some(w) => {
            let trails = w
                .trails
                .iter()
                .map(|t| {
                    crate::trail::ClosedTrail::from_parts(
                        t.anchors().to_vec(),
                        t.edges().iter().map(|e| parent_edges[e.0]).collect(),
                    )
                })
                .collect();
            Decision::yes(EulerFamily { trails, spanning })
        }
        None => Decision::no(NoReason::Component { index, reason: Box::new(d.reason.expect("NO carries a reason")) }),
    }
}
