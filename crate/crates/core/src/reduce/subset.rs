//! Choosing the component subsets the 2-cut theorems quantify over.

use std::fmt;

use crate::reduce::derived::DerivedKind;
use crate::solver::Mode;

/// Which 2-cut characterization applies: parity of the number of edges
/// equal to `S`, and the mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    EvenFamily,
    EvenTour,
    OddFamily,
    OddTour,
}

impl Theorem {
    pub fn new(pair_edges: usize, mode: Mode) -> Self {
        match (pair_edges.is_multiple_of(2), mode) {
            (true, Mode::Family) => Theorem::EvenFamily,
            (true, Mode::Tour) => Theorem::EvenTour,
            (false, Mode::Family) => Theorem::OddFamily,
            (false, Mode::Tour) => Theorem::OddTour,
        }
    }

    pub fn is_even(self) -> bool {
        matches!(self, Theorem::EvenFamily | Theorem::EvenTour)
    }

    pub fn rule_name(self) -> &'static str {
        if self.is_even() {
            "2cut-even"
        } else {
            "2cut-odd"
        }
    }

    /// The derived hypergraphs whose decisions the theorem reads.
    pub fn kinds(self) -> &'static [DerivedKind] {
        use DerivedKind::*;
        match self {
            Theorem::EvenFamily => &[Star, SComponent, Component, MinusU, MinusV],
            Theorem::EvenTour => &[Star, SComponent, DoubleStar],
            Theorem::OddFamily => &[SComponent, Component, Star],
            Theorem::OddTour => &[SComponent, Star],
        }
    }
}

/// Which derived hypergraphs of one component admit a spanning family
/// (or tour). Kinds that were not decided read as `false`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Capabilities {
    pub component: bool,
    pub s_component: bool,
    pub star: bool,
    pub double_star: bool,
    pub minus_u: bool,
    pub minus_v: bool,
}

impl Capabilities {
    pub fn get(&self, kind: DerivedKind) -> bool {
        match kind {
            DerivedKind::Component => self.component,
            DerivedKind::SComponent => self.s_component,
            DerivedKind::Star => self.star,
            DerivedKind::DoubleStar => self.double_star,
            DerivedKind::MinusU => self.minus_u,
            DerivedKind::MinusV => self.minus_v,
        }
    }

    pub fn set(&mut self, kind: DerivedKind, value: bool) {
        let slot = match kind {
            DerivedKind::Component => &mut self.component,
            DerivedKind::SComponent => &mut self.s_component,
            DerivedKind::Star => &mut self.star,
            DerivedKind::DoubleStar => &mut self.double_star,
            DerivedKind::MinusU => &mut self.minus_u,
            DerivedKind::MinusV => &mut self.minus_v,
        };
        *slot = value;
    }

    fn first_of(&self, kinds: &[DerivedKind]) -> Option<DerivedKind> {
        kinds.iter().copied().find(|&k| self.get(k))
    }
}

/// A subset satisfying a 2-cut theorem, with the derived hypergraph used
/// for every component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetChoice {
    /// The index set (0-based components).
    pub subset: Vec<usize>,
    /// Component whose S-component closes the construction.
    pub closing: Option<usize>,
    /// Components contributing the `u`-deleted and `v`-deleted parts when
    /// the subset is empty and no S-component works.
    pub ends: Option<(usize, usize)>,
    pub parts: Vec<DerivedKind>,
}

impl fmt::Display for SubsetChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.subset.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))?;
        if let Some(l) = self.closing {
            write!(f, " closing={}", l + 1)?;
        }
        if let Some((s, t)) = self.ends {
            write!(f, " ends={},{}", s + 1, t + 1)?;
        }
        Ok(())
    }
}

/// Pads `forced` to the required parity with the smallest component
/// outside it satisfying `extra`.
fn pad(forced: Vec<usize>, odd: bool, extra: impl Fn(usize) -> bool, k: usize) -> Option<Vec<usize>> {
    let mut set = forced;
    if (set.len() % 2 == 1) != odd {
        let add = (0..k).find(|&i| !set.contains(&i) && extra(i))?;
        set.push(add);
        set.sort_unstable();
    }
    Some(set)
}

/// Finds a subset witnessing the theorem, or `None` if none exists.
///
/// Components that fail every option outside the subset must be in it;
/// the remaining freedom is resolved towards the smallest indices.
pub fn feasible_subset(caps: &[Capabilities], theorem: Theorem) -> Option<SubsetChoice> {
    use DerivedKind::*;
    let k = caps.len();
    let (inside, outside): (DerivedKind, &[DerivedKind]) = match theorem {
        Theorem::EvenFamily => (Star, &[SComponent, Component, MinusU, MinusV]),
        Theorem::EvenTour => (Star, &[SComponent, DoubleStar]),
        Theorem::OddFamily => (SComponent, &[Component, Star]),
        Theorem::OddTour => (SComponent, &[Star]),
    };
    let forced: Vec<usize> = (0..k).filter(|&i| caps[i].first_of(outside).is_none()).collect();
    if forced.iter().any(|&i| !caps[i].get(inside)) {
        return None;
    }
    let fill = |subset: Vec<usize>, closing: Option<usize>, ends: Option<(usize, usize)>| {
        let parts = (0..k)
            .map(|i| {
                if subset.contains(&i) {
                    inside
                } else if closing == Some(i) {
                    SComponent
                } else if let Some((s, t)) = ends.filter(|&(s, t)| i == s || i == t) {
                    if i == s {
                        MinusU
                    } else {
                        debug_assert_eq!(i, t);
                        MinusV
                    }
                } else {
                    caps[i].first_of(outside).expect("component outside the subset has an option")
                }
            })
            .collect();
        SubsetChoice { subset, closing, ends, parts }
    };

    if !theorem.is_even() {
        let subset = pad(forced, true, |i| caps[i].s_component, k)?;
        let closing = subset.first().copied();
        return Some(fill(subset, closing, None));
    }
    if !forced.is_empty() {
        let subset = pad(forced, false, |i| caps[i].star, k)?;
        return Some(fill(subset, None, None));
    }
    if let Some(l) = (0..k).find(|&i| caps[i].s_component) {
        return Some(fill(Vec::new(), Some(l), None));
    }
    if theorem == Theorem::EvenFamily {
        for s in 0..k {
            for t in 0..k {
                if s != t && caps[s].minus_u && caps[t].minus_v {
                    return Some(fill(Vec::new(), None, Some((s, t))));
                }
            }
        }
    }
    let stars: Vec<usize> = (0..k).filter(|&i| caps[i].star).take(2).collect();
    if stars.len() == 2 {
        return Some(fill(stars, None, None));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps(spec: &[&str]) -> Vec<Capabilities> {
        spec.iter()
            .map(|s| Capabilities {
                component: s.contains('c'),
                s_component: s.contains('p'),
                star: s.contains('*'),
                double_star: s.contains('d'),
                minus_u: s.contains('u'),
                minus_v: s.contains('v'),
            })
            .collect()
    }

    /// Every subset of the right parity, checked clause by clause.
    fn exists(caps: &[Capabilities], th: Theorem) -> bool {
        let k = caps.len();
        (0u32..1 << k).any(|mask| {
            let inn = |i: usize| mask >> i & 1 == 1;
            let size = mask.count_ones() as usize;
            match th {
                Theorem::EvenFamily => {
                    size.is_multiple_of(2)
                        && (0..k).all(|i| {
                            if inn(i) {
                                caps[i].star
                            } else {
                                caps[i].s_component || caps[i].component || caps[i].minus_u || caps[i].minus_v
                            }
                        })
                        && (size > 0
                            || caps.iter().any(|c| c.s_component)
                            || (0..k).any(|s| (0..k).any(|t| s != t && caps[s].minus_u && caps[t].minus_v)))
                }
                Theorem::EvenTour => {
                    size.is_multiple_of(2)
                        && (0..k)
                            .all(|i| if inn(i) { caps[i].star } else { caps[i].s_component || caps[i].double_star })
                        && (size > 0 || caps.iter().any(|c| c.s_component))
                }
                Theorem::OddFamily => {
                    size % 2 == 1
                        && (0..k).all(|i| if inn(i) { caps[i].s_component } else { caps[i].component || caps[i].star })
                }
                Theorem::OddTour => {
                    size % 2 == 1 && (0..k).all(|i| if inn(i) { caps[i].s_component } else { caps[i].star })
                }
            }
        })
    }

    #[test]
    fn forced_components_padded() {
        let c = caps(&["*", "*p", "p"]);
        let got = feasible_subset(&c, Theorem::EvenFamily).unwrap();
        assert_eq!(got.subset, vec![0, 1]);
        assert_eq!(got.parts, vec![Star, Star, SComponent]);
    }

    use DerivedKind::*;

    #[test]
    fn empty_subset_with_ends() {
        let c = caps(&["uc", "v"]);
        let got = feasible_subset(&c, Theorem::EvenFamily).unwrap();
        assert!(got.subset.is_empty());
        assert_eq!(got.ends, Some((0, 1)));
        assert_eq!(got.parts, vec![MinusU, MinusV]);
        assert_eq!(feasible_subset(&caps(&["c", "c"]), Theorem::EvenFamily), None);
    }

    #[test]
    fn odd_needs_an_s_component() {
        assert_eq!(feasible_subset(&caps(&["c", "*"]), Theorem::OddFamily), None);
        let got = feasible_subset(&caps(&["*", "p*"]), Theorem::OddTour).unwrap();
        assert_eq!(got.subset, vec![1]);
        assert_eq!(got.closing, Some(1));
    }

    #[test]
    fn agrees_with_enumeration() {
        let letters = ['c', 'p', '*', 'd', 'u', 'v'];
        for th in [Theorem::EvenFamily, Theorem::EvenTour, Theorem::OddFamily, Theorem::OddTour] {
            for k in 2..=3usize {
                for code in 0u64..1 << (6 * k) {
                    if k == 3 && code % 7 != 0 {
                        continue;
                    }
                    let c: Vec<Capabilities> = (0..k)
                        .map(|i| {
                            let bits = code >> (6 * i) & 63;
                            let s: String = (0..6).filter(|b| bits >> b & 1 == 1).map(|b| letters[b]).collect();
                            caps(&[s.as_str()])[0]
                        })
                        .collect();
                    let got = feasible_subset(&c, th);
                    assert_eq!(got.is_some(), exists(&c, th), "{th:?} {c:?}");
                    if let Some(choice) = got {
                        for (i, &kind) in choice.parts.iter().enumerate() {
                            assert!(c[i].get(kind), "{th:?} {c:?} {choice:?}");
                        }
                    }
                }
            }
        }
    }
}
