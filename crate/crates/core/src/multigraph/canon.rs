//! Canonical labeling of small multigraphs.
//!
//! The canonical form of a graph is the lexicographically greatest byte
//! string obtainable over all vertex orderings, where placing a vertex at
//! position `p` appends the segment
//! `[mult(p, 0), mult(p, 1), ..., mult(p, p-1), loops(p)]`.
//! The string determines the adjacency structure completely, so two graphs
//! share a canonical form iff they are isomorphic (loops and multiplicities
//! respected). The maximum is found by an exhaustive ordering search pruned
//! against the best string found so far, seeded with the identity ordering;
//! candidates are tried in decreasing segment order so the incumbent is
//! strong early. Degree-skewed graphs prune almost immediately and the
//! symmetric ones explored here stay within their automorphism count.

use super::Multigraph;
use crate::error::{Error, Result};

/// Default vertex bound for canonicalization.
pub const DEFAULT_CANON_BOUND: usize = 12;

const MAX_N: usize = 16;

/// Canonical byte string identifying a multigraph's isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(Vec<u8>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

struct Adjacency {
    n: usize,
    mult: [[u8; MAX_N]; MAX_N],
    loops: [u8; MAX_N],
}

impl Adjacency {
    fn from_edges(n: usize, edges: &[(usize, usize)], bound: usize) -> Result<Adjacency> {
        if n > bound || n > MAX_N {
            return Err(Error::capacity(format!(
                "canonical labeling supports at most {} vertices, got {n}",
                bound.min(MAX_N)
            )));
        }
        let mut adj = Adjacency {
            n,
            mult: [[0u8; MAX_N]; MAX_N],
            loops: [0u8; MAX_N],
        };
        for &(u, v) in edges {
            if u == v {
                adj.loops[u] = adj.loops[u]
                    .checked_add(1)
                    .ok_or_else(|| Error::capacity("loop multiplicity exceeds 255"))?;
            } else {
                adj.mult[u][v] = adj.mult[u][v]
                    .checked_add(1)
                    .ok_or_else(|| Error::capacity("edge multiplicity exceeds 255"))?;
                adj.mult[v][u] = adj.mult[u][v];
            }
        }
        Ok(adj)
    }

    fn encoding_len(&self) -> usize {
        // Position p contributes p multiplicities plus the loop byte.
        self.n * (self.n + 1) / 2
    }

    /// Encoding under a fixed ordering: `order[p]` is the vertex placed at
    /// position `p`.
    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.encoding_len());
        for (p, &v) in order.iter().enumerate() {
            for &w in &order[..p] {
                out.push(self.mult[v][w]);
            }
            out.push(self.loops[v]);
        }
        out
    }
}

struct Search<'a> {
    adj: &'a Adjacency,
    best: Vec<u8>,
    /// In check-only mode the search stops as soon as any ordering beats the
    /// identity encoding.
    check_only: bool,
    beaten: bool,
}

impl Search<'_> {
    fn run(&mut self) {
        let mut order: Vec<usize> = Vec::with_capacity(self.adj.n);
        let mut used = [false; MAX_N];
        self.dfs(&mut order, &mut used, 0);
    }

    fn dfs(&mut self, order: &mut Vec<usize>, used: &mut [bool; MAX_N], offset: usize) {
        let n = self.adj.n;
        let p = order.len();
        if p == n {
            return;
        }
        // Candidate segments for every unused vertex, best first.
        let mut cands: Vec<(Vec<u8>, usize)> = Vec::with_capacity(n - p);
        for v in 0..n {
            if used[v] {
                continue;
            }
            let mut seg = Vec::with_capacity(p + 1);
            for &w in order.iter() {
                seg.push(self.adj.mult[v][w]);
            }
            seg.push(self.adj.loops[v]);
            cands.push((seg, v));
        }
        cands.sort_by(|a, b| b.0.cmp(&a.0));

        let seg_len = p + 1;
        for (seg, v) in cands {
            use std::cmp::Ordering::*;
            match seg.as_slice().cmp(&self.best[offset..offset + seg_len]) {
                Less => break, // remaining candidates are no better
                Greater => {
                    if self.check_only {
                        self.beaten = true;
                        return;
                    }
                    // This branch dominates the incumbent: rewrite the tail
                    // and let the (descending) recursion rebuild it greedily.
                    self.best.truncate(offset);
                    self.best.extend_from_slice(&seg);
                    self.best
                        .resize(self.adj.encoding_len(), 0);
                    self.rebuild_tail(order, used, v, offset + seg_len);
                    // After the rebuild the incumbent matches some extension
                    // of this branch; re-run it as an Equal branch to explore
                    // alternatives below it.
                    used[v] = true;
                    order.push(v);
                    self.dfs(order, used, offset + seg_len);
                    order.pop();
                    used[v] = false;
                    if self.beaten {
                        return;
                    }
                }
                Equal => {
                    used[v] = true;
                    order.push(v);
                    self.dfs(order, used, offset + seg_len);
                    order.pop();
                    used[v] = false;
                    if self.beaten {
                        return;
                    }
                }
            }
        }
    }

    /// Greedy completion used when a branch first exceeds the incumbent: fix
    /// `v` at the current position and extend by locally maximal segments,
    /// writing the result into `best`. The subsequent Equal-mode exploration
    /// of the same branch finds anything lexicographically above this.
    fn rebuild_tail(
        &mut self,
        order: &mut Vec<usize>,
        used: &mut [bool; MAX_N],
        v: usize,
        mut offset: usize,
    ) {
        let n = self.adj.n;
        order.push(v);
        used[v] = true;
        let check = order.len();
        while order.len() < n {
            let p = order.len();
            let mut best_seg: Option<(Vec<u8>, usize)> = None;
            for w in 0..n {
                if used[w] {
                    continue;
                }
                let mut seg = Vec::with_capacity(p + 1);
                for &x in order.iter() {
                    seg.push(self.adj.mult[w][x]);
                }
                seg.push(self.adj.loops[w]);
                if best_seg.as_ref().map_or(true, |(b, _)| seg > *b) {
                    best_seg = Some((seg, w));
                }
            }
            let (seg, w) = best_seg.unwrap();
            self.best[offset..offset + seg.len()].copy_from_slice(&seg);
            offset += seg.len();
            order.push(w);
            used[w] = true;
        }
        while order.len() > check {
            let w = order.pop().unwrap();
            used[w] = false;
        }
        order.pop();
        used[v] = false;
    }
}

fn canonical_encoding(adj: &Adjacency) -> Vec<u8> {
    let identity: Vec<usize> = (0..adj.n).collect();
    let mut search = Search {
        adj,
        best: adj.encode(&identity),
        check_only: false,
        beaten: false,
    };
    search.run();
    search.best
}

/// Canonical key with the default vertex bound.
pub fn canonical_key(g: &Multigraph) -> Result<CanonKey> {
    canonical_key_bounded(g, DEFAULT_CANON_BOUND)
}

/// Canonical key with an explicit vertex bound (still capped at 16).
pub fn canonical_key_bounded(g: &Multigraph, bound: usize) -> Result<CanonKey> {
    let adj = Adjacency::from_edges(g.vertex_count(), g.edges(), bound)?;
    let mut bytes = Vec::with_capacity(adj.encoding_len() + 1);
    bytes.push(adj.n as u8);
    bytes.extend_from_slice(&canonical_encoding(&adj));
    Ok(CanonKey(bytes))
}

/// True iff the graph's identity labeling is its canonical labeling, i.e.
/// the identity encoding is lexicographically maximal. The search aborts at
/// the first ordering that beats it.
pub fn is_canonical(n: usize, edges: &[(usize, usize)], bound: usize) -> Result<bool> {
    let adj = Adjacency::from_edges(n, edges, bound)?;
    let identity: Vec<usize> = (0..adj.n).collect();
    let mut search = Search {
        adj: &adj,
        best: adj.encode(&identity),
        check_only: true,
        beaten: false,
    };
    search.run();
    Ok(!search.beaten)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::shapes;

    #[test]
    fn key_encodes_vertex_count() {
        let k1 = canonical_key(&Multigraph::empty(1)).unwrap();
        let k2 = canonical_key(&Multigraph::empty(2)).unwrap();
        assert_ne!(k1, k2);
    }

    #[test]
    fn is_canonical_agrees_with_key_comparison() {
        // For every labeling of the paw, is_canonical must hold exactly when
        // the identity encoding equals the canonical encoding.
        let paw = shapes::paw();
        let adj = Adjacency::from_edges(paw.vertex_count(), paw.edges(), 12).unwrap();
        let canon = canonical_encoding(&adj);
        let mut perms = vec![vec![0usize, 1, 2, 3]];
        // A few fixed relabelings, including one that should be canonical.
        perms.push(vec![1, 2, 3, 0]);
        perms.push(vec![3, 2, 1, 0]);
        perms.push(vec![2, 0, 3, 1]);
        for perm in perms {
            let h = paw.permute(&perm).unwrap();
            let hadj = Adjacency::from_edges(h.vertex_count(), h.edges(), 12).unwrap();
            let identity: Vec<usize> = (0..4).collect();
            let same = hadj.encode(&identity) == canon;
            assert_eq!(
                is_canonical(h.vertex_count(), h.edges(), 12).unwrap(),
                same,
                "perm {perm:?}"
            );
        }
    }

    #[test]
    fn exactly_one_labeling_is_canonical() {
        // Over all 24 labelings of the paw, the canonical filter accepts a
        // single labeled graph (several permutations may map to it).
        let paw = shapes::paw();
        let mut accepted = std::collections::BTreeSet::new();
        let mut perm = [0usize, 1, 2, 3];
        heap_permutations(&mut perm, &mut |p: &[usize]| {
            let h = paw.permute(p).unwrap();
            if is_canonical(h.vertex_count(), h.edges(), 12).unwrap() {
                accepted.insert(h.edges().to_vec());
            }
        });
        assert_eq!(accepted.len(), 1);
    }

    fn heap_permutations(items: &mut [usize], visit: &mut impl FnMut(&[usize])) {
        fn inner(k: usize, items: &mut [usize], visit: &mut impl FnMut(&[usize])) {
            if k <= 1 {
                visit(items);
                return;
            }
            for i in 0..k {
                inner(k - 1, items, visit);
                if k % 2 == 0 {
                    items.swap(i, k - 1);
                } else {
                    items.swap(0, k - 1);
                }
            }
        }
        inner(items.len(), items, visit);
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        // C12 is vertex-transitive; the pruned search must still finish
        // promptly and agree across rotations.
        let c12 = shapes::cycle(12);
        let key = canonical_key_bounded(&c12, 12).unwrap();
        let rot: Vec<usize> = (0..12).map(|v| (v + 5) % 12).collect();
        assert_eq!(
            canonical_key_bounded(&c12.permute(&rot).unwrap(), 12).unwrap(),
            key
        );
    }
}
