//! Deciding spanning Euler families and tours by splitting along vertex
//! cuts of size one and two, with the direct solver at the leaves.
//!
//! Rules are tried in a fixed order:
//!
//! 1. `split`: a disconnected input is decided per component (families)
//!    or rejected (tours).
//! 2. `precheck`: edge sizes, minimum degree, and `|V| <= |E|`.
//! 3. `cut-vertex`: the least cut vertex. One of degree 2 is rejected
//!    outright (`deg2-cut-odd`).
//! 4. `deg2-cut`: the first minimal 2-cut whose vertices both have degree 2.
//!    For tours this only rejects; on a pass the next rule runs.
//! 5. `2cut-even` / `2cut-odd`: the first 2-cut, by parity of the number
//!    of edges equal to it.
//! 6. `direct`.
//!
//! 2-cuts are ordered by the total size of their S-components, then by
//! the cut itself. Every derived hypergraph has fewer vertices than its
//! parent, so the recursion ends. Results are memoized per hypergraph and
//! mode.

pub mod assemble;
pub mod cuts;
pub mod derived;
pub mod normalize;
pub mod subset;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::hypergraph::{set_string, Hypergraph, Vertex};
use crate::solver::{
    check_basic_conditions, decide_direct, lift_decision, Decision, Mode, NoReason, SolveError, Verdict,
};
use crate::trail::EulerFamily;

pub use assemble::{assemble_witness, AssemblyError, Part};
pub use cuts::{find_vertex_cuts, CutError, VertexCut};
pub use derived::{derive, derived_hypergraphs, DeriveError, DerivedHypergraph, DerivedKind, EdgeOrigin};
pub use normalize::{normalize_cycle_decomposition, NormalizeError};
pub use subset::{feasible_subset, Capabilities, SubsetChoice, Theorem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
    #[error(transparent)]
    Derive(#[from] DeriveError),
    #[error("{0}")]
    Invariant(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    Split,
    Precheck(&'static str),
    CutVertex(Vertex),
    Deg2Cut(Vec<Vertex>),
    TwoCut { theorem: Theorem, set: Vec<Vertex>, choice: Option<SubsetChoice> },
    Direct,
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Split => "split",
            Rule::Precheck(_) => "precheck",
            Rule::CutVertex(_) => "cut-vertex",
            Rule::Deg2Cut(_) => "deg2-cut",
            Rule::TwoCut { theorem, .. } => theorem.rule_name(),
            Rule::Direct => "direct",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Split | Rule::Direct => f.write_str(self.name()),
            Rule::Precheck(clause) => write!(f, "precheck ({clause})"),
            Rule::CutVertex(v) => write!(f, "cut-vertex S={{{v}}}"),
            Rule::Deg2Cut(s) => write!(f, "deg2-cut S={}", set_string(s)),
            Rule::TwoCut { theorem, set, choice } => {
                write!(f, "{} S={}", theorem.rule_name(), set_string(set))?;
                match choice {
                    Some(c) => write!(f, " subset={c}"),
                    None => f.write_str(" no subset"),
                }
            }
        }
    }
}

/// One decision in the reduction tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceNode {
    pub hypergraph: Hypergraph,
    pub mode: Mode,
    pub rule: Rule,
    pub verdict: Verdict,
    /// Sub-decisions, labelled by the derived hypergraph or component.
    pub children: Vec<(String, Arc<TraceNode>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub root: Arc<TraceNode>,
}

impl ReductionTrace {
    /// Names of all rules applied anywhere in the tree.
    pub fn rules_used(&self) -> BTreeSet<&'static str> {
        let mut out = BTreeSet::new();
        let mut stack = vec![&self.root];
        while let Some(n) = stack.pop() {
            out.insert(n.rule.name());
            stack.extend(n.children.iter().map(|(_, c)| c));
        }
        out
    }

    fn write_node(f: &mut fmt::Formatter<'_>, label: &str, n: &TraceNode, depth: usize) -> fmt::Result {
        let verdict = if n.verdict.is_yes() { "YES" } else { "NO" };
        writeln!(f, "{:indent$}{label}{} [{}] -> {verdict}  {}", "", n.rule, n.mode, n.hypergraph, indent = 2 * depth)?;
        for (l, c) in &n.children {
            Self::write_node(f, &format!("{l}: "), c, depth + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Self::write_node(f, "", &self.root, 0)
    }
}

#[derive(Clone, Debug)]
struct Outcome {
    decision: Decision,
    node: Arc<TraceNode>,
}

/// Decides whether `h` has a spanning Euler family (or tour), reducing
/// along vertex cuts, and returns the reduction tree.
pub fn decide_reduced(h: &Hypergraph, mode: Mode) -> Result<(Decision, ReductionTrace), ReduceError> {
    let mut r = Reducer::default();
    let o = r.decide(h, mode)?;
    Ok((o.decision, ReductionTrace { root: o.node }))
}

#[derive(Default)]
struct Reducer {
    memo: HashMap<(Hypergraph, Mode), Outcome>,
}

struct Step {
    rule: Rule,
    decision: Decision,
    children: Vec<(String, Arc<TraceNode>)>,
}

fn cut_no(rule: &'static str, set: &[Vertex]) -> Decision {
    Decision::no(NoReason::Cut { rule, set: set.to_vec() })
}

impl Reducer {
    fn decide(&mut self, h: &Hypergraph, mode: Mode) -> Result<Outcome, ReduceError> {
        let key = (h.clone(), mode);
        if let Some(o) = self.memo.get(&key) {
            return Ok(o.clone());
        }
        let step = self.step(h, mode)?;
        let node = Arc::new(TraceNode {
            hypergraph: h.clone(),
            mode,
            rule: step.rule,
            verdict: step.decision.verdict,
            children: step.children,
        });
        let o = Outcome { decision: step.decision, node };
        self.memo.insert(key, o.clone());
        Ok(o)
    }

    fn step(&mut self, h: &Hypergraph, mode: Mode) -> Result<Step, ReduceError> {
        let comps = h.connected_components();
        if comps.count() >= 2 {
            return self.split(h, mode, &comps.classes);
        }
        if let Err(c) = check_basic_conditions(h) {
            return Ok(Step {
                rule: Rule::Precheck(c.clause()),
                decision: Decision::no(NoReason::Necessary(c)),
                children: vec![],
            });
        }
        let cuts = find_vertex_cuts(h, 2);
        if let Some(cut) = cuts.iter().find(|c| c.size() == 1) {
            let v = cut.set()[0];
            if h.degree(v) == 2 {
                return Ok(Step {
                    rule: Rule::Deg2Cut(vec![v]),
                    decision: cut_no("deg2-cut-odd", cut.set()),
                    children: vec![],
                });
            }
            return self.cut_vertex(h, mode, cut);
        }

        let mut pairs: Vec<(usize, &VertexCut)> = Vec::new();
        for cut in cuts.iter().filter(|c| c.size() == 2) {
            let mut weight = 0;
            for i in 0..cut.component_count() {
                weight += derive(h, cut, i, DerivedKind::SComponent)?.weight();
            }
            pairs.push((weight, cut));
        }
        pairs.sort_by(|a, b| (a.0, a.1.set()).cmp(&(b.0, b.1.set())));

        let mut children = Vec::new();
        if let Some(&(_, cut)) = pairs.iter().find(|(_, c)| c.is_minimal() && c.all_degree_two()) {
            if cut.component_count() != 2 {
                return Err(ReduceError::Invariant(format!(
                    "degree-2 cut {} has {} components",
                    set_string(cut.set()),
                    cut.component_count()
                )));
            }
            let mut stars = Vec::new();
            for i in 0..2 {
                let d = derive(h, cut, i, DerivedKind::Star)?;
                let o = self.decide(&d.hypergraph, mode)?;
                children.push((d.label(), o.node.clone()));
                stars.push((d, o.decision));
            }
            let all = stars.iter().all(|(_, dec)| dec.is_yes());
            if !all {
                return Ok(Step {
                    rule: Rule::Deg2Cut(cut.set().to_vec()),
                    decision: cut_no("deg2-cut", cut.set()),
                    children,
                });
            }
            if mode == Mode::Family {
                let parts: Vec<Part<'_>> = stars
                    .iter()
                    .map(|(d, dec)| Part { derived: d, witness: dec.witness.as_ref().expect("YES has a witness") })
                    .collect();
                let w = assemble_witness(h, cut, &parts, mode)?;
                return Ok(Step { rule: Rule::Deg2Cut(cut.set().to_vec()), decision: Decision::yes(w), children });
            }
        }

        if let Some(&(_, cut)) = pairs.first() {
            return self.two_cut(h, mode, cut, children);
        }
        let decision = decide_direct(h, mode, true)?;
        Ok(Step { rule: Rule::Direct, decision, children })
    }

    fn split(&mut self, h: &Hypergraph, mode: Mode, classes: &[Vec<Vertex>]) -> Result<Step, ReduceError> {
        if mode == Mode::Tour {
            return Ok(Step { rule: Rule::Split, decision: Decision::no(NoReason::Disconnected), children: vec![] });
        }
        let mut children = Vec::new();
        let mut trails = Vec::new();
        for (i, class) in classes.iter().enumerate() {
            let sub = h.induced_subhypergraph(class).expect("class is non-empty");
            let o = self.decide(&sub.hypergraph, mode)?;
            children.push((format!("C{}", i + 1), o.node.clone()));
            let d = lift_decision(o.decision, &sub.parent_edges, true, i);
            match d.witness {
                Some(w) => trails.extend(w.trails),
                None => return Ok(Step { rule: Rule::Split, decision: d, children }),
            }
        }
        Ok(Step { rule: Rule::Split, decision: Decision::yes(EulerFamily { trails, spanning: true }), children })
    }

    fn cut_vertex(&mut self, h: &Hypergraph, mode: Mode, cut: &VertexCut) -> Result<Step, ReduceError> {
        let rule = Rule::CutVertex(cut.set()[0]);
        let mut children = Vec::new();
        let mut chosen: Vec<(DerivedHypergraph, Decision)> = Vec::new();
        let mut any_s = false;
        for i in 0..cut.component_count() {
            let d = derive(h, cut, i, DerivedKind::SComponent)?;
            let o = self.decide(&d.hypergraph, mode)?;
            children.push((d.label(), o.node.clone()));
            if o.decision.is_yes() {
                any_s = true;
                chosen.push((d, o.decision));
                continue;
            }
            if mode == Mode::Tour {
                return Ok(Step { rule, decision: cut_no("cut-vertex", cut.set()), children });
            }
            let d = derive(h, cut, i, DerivedKind::Component)?;
            let o = self.decide(&d.hypergraph, mode)?;
            children.push((d.label(), o.node.clone()));
            if !o.decision.is_yes() {
                return Ok(Step { rule, decision: cut_no("cut-vertex", cut.set()), children });
            }
            chosen.push((d, o.decision));
        }
        if !any_s {
            return Ok(Step { rule, decision: cut_no("cut-vertex", cut.set()), children });
        }
        let parts: Vec<Part<'_>> = chosen
            .iter()
            .map(|(d, dec)| Part { derived: d, witness: dec.witness.as_ref().expect("YES has a witness") })
            .collect();
        let w = assemble_witness(h, cut, &parts, mode)?;
        Ok(Step { rule, decision: Decision::yes(w), children })
    }

    fn two_cut(
        &mut self,
        h: &Hypergraph,
        mode: Mode,
        cut: &VertexCut,
        mut children: Vec<(String, Arc<TraceNode>)>,
    ) -> Result<Step, ReduceError> {
        let theorem = Theorem::new(cut.pair_edges().len(), mode);
        let mut caps = vec![Capabilities::default(); cut.component_count()];
        let mut found: HashMap<(usize, DerivedKind), (DerivedHypergraph, Decision)> = HashMap::new();
        for (i, cap) in caps.iter_mut().enumerate() {
            for &kind in theorem.kinds() {
                let d = derive(h, cut, i, kind)?;
                let o = self.decide(&d.hypergraph, mode)?;
                children.push((d.label(), o.node.clone()));
                cap.set(kind, o.decision.is_yes());
                found.insert((i, kind), (d, o.decision));
            }
        }
        let choice = feasible_subset(&caps, theorem);
        let set = cut.set().to_vec();
        let Some(choice) = choice else {
            let rule = Rule::TwoCut { theorem, set: set.clone(), choice: None };
            return Ok(Step { rule, decision: cut_no(theorem.rule_name(), &set), children });
        };
        let parts: Vec<Part<'_>> = choice
            .parts
            .iter()
            .enumerate()
            .map(|(i, &kind)| {
                let (d, dec) = &found[&(i, kind)];
                Part { derived: d, witness: dec.witness.as_ref().expect("chosen parts are YES") }
            })
            .collect();
        let w = assemble_witness(h, cut, &parts, mode)?;
        let rule = Rule::TwoCut { theorem, set, choice: Some(choice) };
        Ok(Step { rule, decision: Decision::yes(w), children })
    }
}
