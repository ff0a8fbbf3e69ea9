//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(V^3)).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A maximum matching as a mate array: `mate[x] == Some(y)` iff `xy` is
/// matched.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.node_count();
    let mut mate = vec![NONE; n];
    // Greedy start; augmentation fixes whatever it gets wrong.
    for x in 0..n {
        if mate[x] == NONE {
            if let Some(&(y, _)) = g.incident(x).iter().find(|&&(y, _)| mate[y] == NONE) {
                mate[x] = y;
                mate[y] = x;
            }
        }
    }
    let mut search = Search::new(n);
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(g, &mut mate, root) {
                augment(&mut mate, &search.parent, end);
            }
        }
    }
    mate.into_iter().map(|m| (m != NONE).then_some(m)).collect()
}

pub fn matching_size(mate: &[Option<usize>]) -> usize {
    mate.iter().filter(|m| m.is_some()).count() / 2
}

pub fn is_perfect(mate: &[Option<usize>]) -> bool {
    mate.iter().all(Option::is_some)
}

fn augment(mate: &mut [usize], parent: &[usize], mut v: usize) {
    while v != NONE {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
}

struct Search {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// BFS over alternating trees from `root`; returns the free endpoint of
    /// an augmenting path, with `parent` describing the path.
    fn find_augmenting_path(&mut self, g: &Graph, mate: &mut [usize], root: usize) -> Option<usize> {
        let n = g.node_count();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in g.incident(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    // Odd cycle: contract the blossom.
                    let cur = self.lca(mate, v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let m = mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_matching(g: &Graph, mate: &[Option<usize>]) {
        for (x, m) in mate.iter().enumerate() {
            if let Some(y) = *m {
                assert_eq!(mate[y], Some(x));
                assert!(g.incident(x).iter().any(|&(z, _)| z == y));
            }
        }
    }

    #[test]
    fn path_of_four() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let m = maximum_matching(&g);
        check_matching(&g, &m);
        assert_eq!(matching_size(&m), 2);
        assert!(is_perfect(&m));
    }

    #[test]
    fn triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(matching_size(&maximum_matching(&g)), 1);
    }

    #[test]
    fn blossom_needed() {
        // A 5-cycle with a pendant at every other vertex; greedy from 0
        // takes 0-1 and must be repaired through the odd cycle.
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (3, 6), (4, 7)]);
        let m = maximum_matching(&g);
        check_matching(&g, &m);
        assert_eq!(matching_size(&m), 4);
    }

    #[test]
    fn petersen_is_perfectly_matchable() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::from_edges(10, &edges);
        let m = maximum_matching(&g);
        check_matching(&g, &m);
        assert!(is_perfect(&m));
    }
}
