//! Exact maximum clique: Bron-Kerbosch with pivoting, pruned by a greedy
//! colouring bound.

use super::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    /// Size of the largest clique found.
    pub size: usize,
    /// One clique of that size, ascending vertex labels.
    pub witness: Vec<usize>,
    /// False when the node budget ran out; `size` is then a lower bound.
    pub exact: bool,
    pub nodes: u64,
}

struct Search<'a> {
    adj: &'a [Vec<u64>],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn members(set: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in set.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            out.push(w * 64 + b);
            bits &= bits - 1;
        }
    }
    out
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

impl Search<'_> {
    /// Colours used by greedy sequential colouring of the subgraph on `p`.
    fn colour_bound(&self, p: &[u64]) -> usize {
        let mut uncoloured = p.to_vec();
        let mut colours = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colours += 1;
            let mut candidates = uncoloured.clone();
            while let Some(v) = members(&candidates).first().copied() {
                uncoloured[v / 64] &= !(1 << (v % 64));
                candidates[v / 64] &= !(1 << (v % 64));
                for (c, a) in candidates.iter_mut().zip(&self.adj[v]) {
                    *c &= !a;
                }
            }
        }
        colours
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: Vec<u64>, mut x: Vec<u64>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        // every R is a clique; keeping the largest seen makes an exhausted
        // search still report a valid lower bound
        if r.len() > self.best.len() {
            self.best = r.clone();
        }
        if p.iter().all(|&w| w == 0) {
            return;
        }
        if r.len() + self.colour_bound(&p) <= self.best.len() {
            return;
        }
        let union: Vec<u64> = p.iter().zip(&x).map(|(a, b)| a | b).collect();
        let pivot = members(&union)
            .into_iter()
            .max_by_key(|&u| (count(&and(&p, &self.adj[u])), std::cmp::Reverse(u)))
            .expect("P is nonempty");
        let branch: Vec<u64> = p
            .iter()
            .zip(&self.adj[pivot])
            .map(|(a, b)| a & !b)
            .collect();
        for v in members(&branch) {
            r.push(v);
            let np = and(&p, &self.adj[v]);
            let nx = and(&x, &self.adj[v]);
            self.expand(r, np, nx);
            r.pop();
            if self.exhausted {
                return;
            }
            p[v / 64] &= !(1 << (v % 64));
            x[v / 64] |= 1 << (v % 64);
        }
    }
}

/// Exact clique number `omega(G)` within `budget` search nodes.
///
/// Vertices are searched in descending degree order (ties by index), so
/// the result and witness are deterministic.
pub fn clique_number(g: &SimpleGraph, budget: u64) -> CliqueResult {
    let n = g.n();
    if n == 0 {
        return CliqueResult {
            size: 0,
            witness: vec![],
            exact: true,
            nodes: 0,
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    // position -> original label; relabel so bit order follows the search order
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let h = g.relabel(&pos);
    let adj: Vec<Vec<u64>> = (0..n).map(|i| h.row(i).to_vec()).collect();
    let words = adj[0].len();
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut search = Search {
        adj: &adj,
        best: vec![],
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.expand(&mut Vec::new(), all, vec![0; words]);
    let mut witness: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    CliqueResult {
        size: witness.len(),
        witness,
        exact: !search.exhausted,
        nodes: search.nodes,
    }
}
