//! Labeled multigraphs with loops and parallel edges.
//!
//! This is the object of deletion and contraction: a vertex count plus a
//! multiset of unordered endpoint pairs. Values are immutable after
//! construction; every operation returns a fresh graph with edges stored
//! normalized (`u <= v`) and sorted, so structural equality is equality of
//! the normalized representation.

mod canon;

pub use canon::{canonical_key, canonical_key_bounded, is_canonical, CanonKey, DEFAULT_CANON_BOUND};

use crate::error::{Error, Result};
use std::fmt;

/// Unordered edge, normalized to `u <= v`. A loop has `u == v`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

/// Classification of an edge under deletion-contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Bridge,
    Loop,
    Ordinary,
}

/// A maximal chain through degree-2 vertices.
///
/// Open ears run between two distinct endpoints; a component that is a bare
/// cycle (every vertex of degree 2) is reported once as a closed chain with
/// `closed = true` and equal endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ear {
    pub endpoints: (usize, usize),
    /// Vertex walk from `endpoints.0` to `endpoints.1` (inclusive).
    pub vertices: Vec<usize>,
    /// Edges along the walk, normalized.
    pub edges: Vec<Edge>,
    pub closed: bool,
}

impl Ear {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

fn norm(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut es: Vec<Edge> = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            es.push(norm(u, v));
        }
        es.sort_unstable();
        Ok(Multigraph {
            vertex_count,
            edges: es,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&norm(u, v)).is_ok()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let e = norm(u, v);
        self.edges.iter().filter(|&&f| f == e).count()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1]) && self.edges.iter().all(|&(u, v)| u != v)
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.multiplicity(v, v)
    }

    /// Degree with loops counting twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.vertex_count];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v && b != v {
                    Some(b)
                } else if b == v && a != v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let comps = self.component_ids();
        comps.iter().all(|&c| c == 0)
    }

    /// Component id per vertex, numbered by first appearance.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut dsu = Dsu::new(self.vertex_count);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        let mut ids = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = dsu.find(v);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            ids[v] = ids[r];
        }
        ids
    }

    pub fn component_count(&self) -> usize {
        if self.vertex_count == 0 {
            return 0;
        }
        *self.component_ids().iter().max().unwrap() + 1
    }

    /// Connected components as standalone graphs with compacted indices.
    pub fn components(&self) -> Vec<Multigraph> {
        let ids = self.component_ids();
        let count = self.component_count();
        let mut vertex_map = vec![usize::MAX; self.vertex_count];
        let mut sizes = vec![0usize; count];
        for v in 0..self.vertex_count {
            vertex_map[v] = sizes[ids[v]];
            sizes[ids[v]] += 1;
        }
        let mut edge_lists: Vec<Vec<Edge>> = vec![Vec::new(); count];
        for &(u, v) in &self.edges {
            edge_lists[ids[u]].push(norm(vertex_map[u], vertex_map[v]));
        }
        sizes
            .into_iter()
            .zip(edge_lists)
            .map(|(n, mut es)| {
                es.sort_unstable();
                Multigraph {
                    vertex_count: n,
                    edges: es,
                }
            })
            .collect()
    }

    fn edge_index(&self, e: Edge) -> Result<usize> {
        self.edges
            .binary_search(&norm(e.0, e.1))
            .map_err(|_| Error::domain(format!("edge ({}, {}) not in graph", e.0, e.1)))
    }

    /// Removes one copy of `e`.
    pub fn delete_edge(&self, e: Edge) -> Result<Multigraph> {
        let idx = self.edge_index(e)?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Contracts one copy of `e`, identifying its endpoints. Other edges
    /// between the endpoints become loops. Contracting a loop is a domain
    /// error; loops are deleted with a `y` factor, never contracted.
    ///
    /// The larger endpoint index is merged onto the smaller and indices are
    /// compacted, so the result is deterministic.
    pub fn contract_edge(&self, e: Edge) -> Result<Multigraph> {
        let idx = self.edge_index(e)?;
        let (u, v) = self.edges[idx];
        if u == v {
            return Err(Error::domain("cannot contract a loop"));
        }
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i == idx {
                continue;
            }
            let a = if a == v { u } else { a };
            let b = if b == v { u } else { b };
            edges.push(norm(a, b));
        }
        // Compact indices: shift everything above v down by one.
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|(a, b)| norm(shift(a), shift(b)))
            .collect();
        edges.sort_unstable();
        Ok(Multigraph {
            vertex_count: self.vertex_count - 1,
            edges,
        })
    }

    /// Replaces one copy of `e = (u, v)` by a path `u - w - v` through a new
    /// vertex `w`.
    pub fn subdivide_edge(&self, e: Edge) -> Result<Multigraph> {
        let idx = self.edge_index(e)?;
        let (u, v) = self.edges[idx];
        if u == v {
            return Err(Error::domain("cannot subdivide a loop"));
        }
        let w = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        edges.push(norm(u, w));
        edges.push(norm(v, w));
        edges.sort_unstable();
        Ok(Multigraph {
            vertex_count: self.vertex_count + 1,
            edges,
        })
    }

    /// Drops the listed vertices with all incident edges and compacts
    /// indices.
    pub fn without_vertices(&self, drop: &[usize]) -> Multigraph {
        let mut keep = vec![true; self.vertex_count];
        for &v in drop {
            keep[v] = false;
        }
        let mut map = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            if keep[v] {
                map[v] = next;
                next += 1;
            }
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| norm(map[u], map[v]))
            .collect();
        edges.sort_unstable();
        Multigraph {
            vertex_count: next,
            edges,
        }
    }

    /// Identifies vertex `b` with vertex `a` (no edge removed); edges between
    /// them become loops.
    pub fn identify(&self, a: usize, b: usize) -> Result<Multigraph> {
        if a >= self.vertex_count || b >= self.vertex_count || a == b {
            return Err(Error::domain("identify needs two distinct vertices"));
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let shift = |w: usize| {
            let w = if w == b { a } else { w };
            if w > b {
                w - 1
            } else {
                w
            }
        };
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|&(u, v)| norm(shift(u), shift(v)))
            .collect();
        edges.sort_unstable();
        Ok(Multigraph {
            vertex_count: self.vertex_count - 1,
            edges,
        })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Multigraph> {
        if perm.len() != self.vertex_count {
            return Err(Error::domain("permutation length mismatch"));
        }
        let mut seen = vec![false; self.vertex_count];
        for &p in perm {
            if p >= self.vertex_count || seen[p] {
                return Err(Error::domain("not a permutation"));
            }
            seen[p] = true;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|&(u, v)| norm(perm[u], perm[v]))
            .collect();
        edges.sort_unstable();
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Complement of a simple graph.
    pub fn complement(&self) -> Result<Multigraph> {
        if !self.is_simple() {
            return Err(Error::domain("complement is defined for simple graphs"));
        }
        let mut edges = Vec::new();
        for u in 0..self.vertex_count {
            for v in (u + 1)..self.vertex_count {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Classifies every edge position as Bridge, Loop, or Ordinary.
    pub fn classify_edges(&self) -> Vec<EdgeClass> {
        let bridges = self.bridge_flags();
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                if u == v {
                    EdgeClass::Loop
                } else if bridges[i] {
                    EdgeClass::Bridge
                } else {
                    EdgeClass::Ordinary
                }
            })
            .collect()
    }

    /// Bridge flag per edge index, via DFS low-link. Parallel edges are
    /// never bridges because only the tree-edge copy is skipped.
    fn bridge_flags(&self) -> Vec<bool> {
        let n = self.vertex_count;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (neighbor, edge idx)
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                continue;
            }
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut bridges = vec![false; self.edges.len()];
        let mut timer = 0usize;
        // Iterative DFS: (vertex, parent edge idx, next adjacency index).
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, pe, ref mut next)) = stack.last_mut() {
                if *next < adj[v].len() {
                    let (to, ei) = adj[v][*next];
                    *next += 1;
                    if ei == pe {
                        continue;
                    }
                    if disc[to] == usize::MAX {
                        disc[to] = timer;
                        low[to] = timer;
                        timer += 1;
                        stack.push((to, ei, 0));
                    } else {
                        low[v] = low[v].min(disc[to]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (parent, _, _)) = stack.last_mut() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            bridges[pe] = true;
                        }
                    }
                }
            }
        }
        bridges
    }

    /// Biconnected components of a connected graph, as standalone graphs
    /// with compacted indices. Bridges appear as single-edge blocks and each
    /// loop forms its own block, so the blocks partition the edge multiset.
    pub fn block_decompose(&self) -> Result<Vec<Multigraph>> {
        if !self.is_connected() {
            return Err(Error::domain("block decomposition needs a connected graph"));
        }
        let n = self.vertex_count;
        let mut blocks_edges: Vec<Vec<Edge>> = Vec::new();
        for &(u, v) in &self.edges {
            if u == v {
                blocks_edges.push(vec![(u, v)]);
            }
        }
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                continue;
            }
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<usize> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, pe, ref mut next)) = stack.last_mut() {
                if *next < adj[v].len() {
                    let (to, ei) = adj[v][*next];
                    *next += 1;
                    if ei == pe {
                        continue;
                    }
                    if disc[to] == usize::MAX {
                        edge_stack.push(ei);
                        disc[to] = timer;
                        low[to] = timer;
                        timer += 1;
                        stack.push((to, ei, 0));
                    } else if disc[to] < disc[v] {
                        edge_stack.push(ei);
                        low[v] = low[v].min(disc[to]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (parent, _, _)) = stack.last_mut() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            // Pop one block: everything above the tree edge
                            // (parent, v).
                            let mut es = Vec::new();
                            while let Some(&top) = edge_stack.last() {
                                es.push(self.edges[top]);
                                edge_stack.pop();
                                if top == pe {
                                    break;
                                }
                            }
                            blocks_edges.push(es);
                        }
                    }
                }
            }
        }
        Ok(blocks_edges.into_iter().map(induced_block).collect())
    }

    /// All maximal chains whose internal vertices have degree exactly 2.
    ///
    /// Conventions for corner cases:
    /// - A component that is a bare cycle (or a lone loop) is reported once
    ///   as a closed chain with `closed = true`.
    /// - A chain whose two boundary edges land on the same anchor vertex is
    ///   trimmed by its lexicographically larger boundary edge so the
    ///   reported ear has distinct endpoints.
    /// - Edges with no degree-2 endpoint are 1-ears.
    pub fn find_ears(&self) -> Vec<Ear> {
        let deg = self.degrees();
        let n = self.vertex_count;
        let chain_vertex =
            |v: usize| -> bool { deg[v] == 2 && self.loop_count(v) == 0 };
        let mut ears: Vec<Ear> = Vec::new();

        // Lone loops on vertices of degree 2 form closed length-1 chains.
        for v in 0..n {
            if deg[v] == 2 && self.loop_count(v) == 1 {
                ears.push(Ear {
                    endpoints: (v, v),
                    vertices: vec![v, v],
                    edges: vec![(v, v)],
                    closed: true,
                });
            }
        }

        // Multiset adjacency with edge identities for walking.
        let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (other, edge idx)
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                continue;
            }
            incident[u].push((v, i));
            incident[v].push((u, i));
        }
        for lst in &mut incident {
            lst.sort_unstable();
        }

        let mut visited_chain = vec![false; n];
        let mut used_edge = vec![false; self.edges.len()];

        // Walk a chain starting from anchor -> first (a non-chain vertex
        // stepping into a chain vertex), collecting until a non-chain vertex
        // or a revisit.
        let mut walk = |anchor: usize, first: (usize, usize), used_edge: &mut Vec<bool>, visited_chain: &mut Vec<bool>| -> Ear {
            let mut vertices = vec![anchor];
            let mut edges = Vec::new();
            let (mut cur, mut via) = first;
            edges.push(self.edges[via]);
            used_edge[via] = true;
            loop {
                vertices.push(cur);
                if !chain_vertex(cur) {
                    break;
                }
                visited_chain[cur] = true;
                let (nxt, ei) = incident[cur]
                    .iter()
                    .copied()
                    .find(|&(_, ei)| ei != via)
                    .expect("degree-2 vertex has a second edge");
                edges.push(self.edges[ei]);
                used_edge[ei] = true;
                via = ei;
                cur = nxt;
            }
            Ear {
                endpoints: (anchor, *vertices.last().unwrap()),
                vertices,
                edges,
                closed: false,
            }
        };

        // Chains anchored at non-chain vertices.
        for v in 0..n {
            if chain_vertex(v) {
                continue;
            }
            for idx in 0..incident[v].len() {
                let (to, ei) = incident[v][idx];
                if used_edge[ei] || !chain_vertex(to) {
                    continue;
                }
                let mut ear = walk(v, (to, ei), &mut used_edge, &mut visited_chain);
                if ear.endpoints.0 == ear.endpoints.1 {
                    // Chain closes back on its anchor: trim the larger
                    // boundary edge to keep the endpoints distinct.
                    let first = ear.edges.first().unwrap();
                    let last = ear.edges.last().unwrap();
                    if first <= last {
                        ear.edges.pop();
                        ear.vertices.pop();
                    } else {
                        ear.edges.remove(0);
                        ear.vertices.remove(0);
                        ear.vertices.reverse();
                        ear.edges.reverse();
                    }
                    ear.endpoints = (ear.vertices[0], *ear.vertices.last().unwrap());
                }
                normalize_ear(&mut ear);
                ears.push(ear);
            }
        }

        // Chain components never touching a non-chain vertex are bare
        // cycles.
        for v in 0..n {
            if !chain_vertex(v) || visited_chain[v] {
                continue;
            }
            let mut vertices = vec![v];
            let mut edges = Vec::new();
            visited_chain[v] = true;
            let (mut cur, mut via) = incident[v][0];
            edges.push(self.edges[via]);
            while cur != v {
                visited_chain[cur] = true;
                vertices.push(cur);
                let (nxt, ei) = incident[cur]
                    .iter()
                    .copied()
                    .find(|&(_, ei)| ei != via)
                    .expect("degree-2 vertex has a second edge");
                edges.push(self.edges[ei]);
                via = ei;
                cur = nxt;
            }
            vertices.push(v);
            ears.push(Ear {
                endpoints: (v, v),
                vertices,
                edges,
                closed: true,
            });
        }

        // 1-ears: non-loop edges with neither endpoint on a chain.
        for &(u, v) in &self.edges {
            if u != v && !chain_vertex(u) && !chain_vertex(v) {
                ears.push(Ear {
                    endpoints: (u.min(v), u.max(v)),
                    vertices: vec![u.min(v), u.max(v)],
                    edges: vec![norm(u, v)],
                    closed: false,
                });
            }
        }

        ears.sort_by(|a, b| {
            (a.endpoints, a.len(), &a.edges).cmp(&(b.endpoints, b.len(), &b.edges))
        });
        ears
    }

    /// Parses the edge-list format: first line `n m`, then `m` lines `u v`
    /// with 0-based indices; loops as `u u`; duplicate lines encode parallel
    /// edges; lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::parse("empty edge list"))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .ok_or_else(|| Error::parse("missing vertex count"))?
            .parse()
            .map_err(|_| Error::parse(format!("bad vertex count in header '{header}'")))?;
        let m: usize = it
            .next()
            .ok_or_else(|| Error::parse("missing edge count"))?
            .parse()
            .map_err(|_| Error::parse(format!("bad edge count in header '{header}'")))?;
        if it.next().is_some() {
            return Err(Error::parse(format!("trailing tokens in header '{header}'")));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .ok_or_else(|| Error::parse(format!("bad edge line '{line}'")))?
                .parse()
                .map_err(|_| Error::parse(format!("bad edge line '{line}'")))?;
            let v: usize = it
                .next()
                .ok_or_else(|| Error::parse(format!("bad edge line '{line}'")))?
                .parse()
                .map_err(|_| Error::parse(format!("bad edge line '{line}'")))?;
            if it.next().is_some() {
                return Err(Error::parse(format!("trailing tokens in edge line '{line}'")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::parse(format!(
                "header declares {m} edges but {} edge lines found",
                edges.len()
            )));
        }
        Multigraph::new(n, edges)
    }

    /// Renders the edge-list format accepted by `parse_edge_list`.
    pub fn to_edge_list_string(&self) -> String {
        let mut s = format!("{} {}\n", self.vertex_count, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Compact one-line rendering of the edge multiset.
    pub fn edge_summary(&self) -> String {
        if self.edges.is_empty() {
            return format!("n={} (no edges)", self.vertex_count);
        }
        self.edges
            .iter()
            .map(|&(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Multigraph(n={}, m={}: {})",
            self.vertex_count,
            self.edges.len(),
            self.edge_summary()
        )
    }
}

/// Builds a standalone block from an edge list over original labels.
fn induced_block(edges: Vec<Edge>) -> Multigraph {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let map = |w: usize| verts.binary_search(&w).unwrap();
    let mut es: Vec<Edge> = edges.iter().map(|&(u, v)| norm(map(u), map(v))).collect();
    es.sort_unstable();
    Multigraph {
        vertex_count: verts.len(),
        edges: es,
    }
}

fn normalize_ear(ear: &mut Ear) {
    if ear.endpoints.0 > ear.endpoints.1 {
        ear.vertices.reverse();
        ear.edges.reverse();
        ear.endpoints = (ear.endpoints.1, ear.endpoints.0);
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns true if the union merged two components.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Common small graphs used throughout the tests and families.
pub mod shapes {
    use super::Multigraph;

    pub fn single_vertex() -> Multigraph {
        Multigraph::empty(1)
    }

    pub fn k2() -> Multigraph {
        Multigraph::new(2, [(0, 1)]).unwrap()
    }

    /// Cycle on `n >= 1` vertices; `n = 1` is a loop, `n = 2` a parallel
    /// pair.
    pub fn cycle(n: usize) -> Multigraph {
        assert!(n >= 1);
        if n == 1 {
            return Multigraph::new(1, [(0, 0)]).unwrap();
        }
        Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Two vertices joined by `m >= 1` parallel edges.
    pub fn multiedge(m: usize) -> Multigraph {
        assert!(m >= 1);
        Multigraph::new(2, std::iter::repeat((0, 1)).take(m)).unwrap()
    }

    /// Path with `k >= 1` edges.
    pub fn path(k: usize) -> Multigraph {
        assert!(k >= 1);
        Multigraph::new(k + 1, (0..k).map(|i| (i, i + 1))).unwrap()
    }

    pub fn star(leaves: usize) -> Multigraph {
        Multigraph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn complete(n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Multigraph::new(n, edges).unwrap()
    }

    /// Triangle with one pendant edge.
    pub fn paw() -> Multigraph {
        Multigraph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::shapes::*;
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn delete_examples() {
        let g = cycle(3).delete_edge((0, 1)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(canonical_key(&g).unwrap(), canonical_key(&path(2)).unwrap());

        let g = multiedge(3).delete_edge((0, 1)).unwrap();
        assert_eq!(g, multiedge(2));

        let g = Multigraph::new(1, [(0, 0)]).unwrap().delete_edge((0, 0)).unwrap();
        assert_eq!(g, Multigraph::empty(1));

        assert!(cycle(3).delete_edge((0, 3)).is_err());
    }

    #[test]
    fn contract_examples() {
        let g = cycle(3).contract_edge((0, 1)).unwrap();
        assert_eq!(g, multiedge(2));

        let g = k2().contract_edge((0, 1)).unwrap();
        assert_eq!(g, Multigraph::empty(1));

        let g = multiedge(2).contract_edge((0, 1)).unwrap();
        assert_eq!(g, Multigraph::new(1, [(0, 0)]).unwrap());

        assert!(Multigraph::new(1, [(0, 0)])
            .unwrap()
            .contract_edge((0, 0))
            .is_err());
    }

    #[test]
    fn delete_contract_counts() {
        let g = paw();
        for &e in g.edges() {
            let d = g.delete_edge(e).unwrap();
            assert_eq!(d.edge_count(), g.edge_count() - 1);
            assert_eq!(d.vertex_count(), g.vertex_count());
            if e.0 != e.1 {
                let c = g.contract_edge(e).unwrap();
                assert_eq!(c.edge_count(), g.edge_count() - 1);
                assert_eq!(c.vertex_count(), g.vertex_count() - 1);
            }
        }
    }

    /// Brute-force bridge test: an edge is a bridge iff its removal
    /// disconnects the component containing it.
    fn brute_bridges(g: &Multigraph) -> Vec<bool> {
        g.edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                if u == v {
                    return false;
                }
                let mut edges = g.edges().to_vec();
                edges.remove(i);
                let h = Multigraph::new(g.vertex_count(), edges).unwrap();
                h.component_ids()[u] != h.component_ids()[v]
            })
            .collect()
    }

    #[test]
    fn classify_paw() {
        let g = paw();
        let classes = g.classify_edges();
        let brute = brute_bridges(&g);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let expect = if brute[i] {
                EdgeClass::Bridge
            } else {
                EdgeClass::Ordinary
            };
            assert_eq!(classes[i], expect, "edge ({u},{v})");
        }
        // The pendant edge (0,3) is the unique bridge.
        let bridge_edges: Vec<Edge> = g
            .edges()
            .iter()
            .zip(&classes)
            .filter(|(_, c)| **c == EdgeClass::Bridge)
            .map(|(&e, _)| e)
            .collect();
        assert_eq!(bridge_edges, vec![(0, 3)]);
    }

    #[test]
    fn classify_cycle_and_loop() {
        assert!(cycle(5)
            .classify_edges()
            .iter()
            .all(|c| *c == EdgeClass::Ordinary));
        let g = Multigraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(g.classify_edges(), vec![EdgeClass::Loop]);
    }

    #[test]
    fn classify_matches_brute_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let g = random_connected_multigraph(&mut rng, 6, 10);
            let classes = g.classify_edges();
            let brute = brute_bridges(&g);
            for i in 0..g.edge_count() {
                let expect = if g.edges()[i].0 == g.edges()[i].1 {
                    EdgeClass::Loop
                } else if brute[i] {
                    EdgeClass::Bridge
                } else {
                    EdgeClass::Ordinary
                };
                assert_eq!(classes[i], expect, "{g} edge {i}");
            }
        }
    }

    #[test]
    fn blocks_of_paw() {
        let blocks = paw().block_decompose().unwrap();
        let mut keys: Vec<CanonKey> = blocks.iter().map(|b| canonical_key(b).unwrap()).collect();
        keys.sort();
        let mut expect = vec![
            canonical_key(&cycle(3)).unwrap(),
            canonical_key(&k2()).unwrap(),
        ];
        expect.sort();
        assert_eq!(keys, expect);
    }

    #[test]
    fn blocks_of_two_connected_graph() {
        let blocks = cycle(6).block_decompose().unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0], cycle(6));
    }

    #[test]
    fn blocks_partition_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let g = random_connected_multigraph(&mut rng, 7, 12);
            let blocks = g.block_decompose().unwrap();
            let total: usize = blocks.iter().map(|b| b.edge_count()).sum();
            assert_eq!(total, g.edge_count(), "{g}");
            // Bridge edges correspond exactly to K2 blocks.
            let bridge_count = g
                .classify_edges()
                .iter()
                .filter(|c| **c == EdgeClass::Bridge)
                .count();
            let k2_blocks = blocks
                .iter()
                .filter(|b| b.vertex_count() == 2 && b.edge_count() == 1)
                .count();
            assert_eq!(bridge_count, k2_blocks, "{g}");
        }
    }

    #[test]
    fn blocks_reject_disconnected() {
        let g = Multigraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(g.block_decompose().is_err());
    }

    fn theta123() -> Multigraph {
        // Vertices 0,1 joined by paths of lengths 1, 2 (via 2), 3 (via 3,4).
        Multigraph::new(5, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn ears_of_theta() {
        let ears = theta123().find_ears();
        let open: Vec<&Ear> = ears.iter().filter(|e| !e.closed).collect();
        assert_eq!(open.len(), 3);
        let mut lens: Vec<usize> = open.iter().map(|e| e.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 2, 3]);
        for e in open {
            assert_eq!(e.endpoints, (0, 1));
        }
    }

    #[test]
    fn ears_of_bare_cycle() {
        let ears = cycle(4).find_ears();
        assert_eq!(ears.len(), 1);
        assert!(ears[0].closed);
        assert_eq!(ears[0].len(), 4);
    }

    #[test]
    fn ears_of_paw() {
        let ears = paw().find_ears();
        assert_eq!(ears.len(), 2);
        // Pendant 1-ear.
        assert_eq!(ears[0].endpoints, (0, 3));
        assert_eq!(ears[0].len(), 1);
        // The two triangle edges not incident to the trimmed boundary form a
        // 2-ear anchored at the degree-3 vertex.
        assert_eq!(ears[1].len(), 2);
        assert!(!ears[1].closed);
        assert_ne!(ears[1].endpoints.0, ears[1].endpoints.1);
        let triangle_edges = [(0usize, 1usize), (1, 2), (0, 2)];
        assert!(ears[1].edges.iter().all(|e| triangle_edges.contains(e)));
    }

    #[test]
    fn ear_internal_vertices_have_degree_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..40 {
            let g = random_connected_multigraph(&mut rng, 7, 11);
            for ear in g.find_ears() {
                if ear.closed {
                    continue;
                }
                for &v in &ear.vertices[1..ear.vertices.len() - 1] {
                    assert_eq!(g.degree(v), 2, "{g} ear {ear:?}");
                }
            }
        }
    }

    #[test]
    fn canonical_key_examples() {
        // All 4! labelings of C4 share a key.
        let base = cycle(4);
        let key = canonical_key(&base).unwrap();
        let mut perm = [0usize, 1, 2, 3];
        let mut count = 0;
        permutohedron_heap(&mut perm, &mut |p: &[usize]| {
            let g = base.permute(p).unwrap();
            assert_eq!(canonical_key(&g).unwrap(), key);
            count += 1;
        });
        assert_eq!(count, 24);

        // Path vs star on 4 vertices differ.
        assert_ne!(
            canonical_key(&path(3)).unwrap(),
            canonical_key(&star(3)).unwrap()
        );

        // All labelings of the paw share a key.
        let base = paw();
        let key = canonical_key(&base).unwrap();
        let mut perm = [0usize, 1, 2, 3];
        permutohedron_heap(&mut perm, &mut |p: &[usize]| {
            assert_eq!(canonical_key(&base.permute(p).unwrap()).unwrap(), key);
        });
    }

    /// Minimal Heap's algorithm so the tests need no external crate.
    fn permutohedron_heap(items: &mut [usize], visit: &mut impl FnMut(&[usize])) {
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
    fn canonical_key_invariant_under_random_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let graphs = vec![
            theta123(),
            paw(),
            complete(5),
            random_connected_multigraph(&mut rng, 8, 12),
            random_connected_multigraph(&mut rng, 9, 13),
        ];
        for g in graphs {
            let key = canonical_key(&g).unwrap();
            let n = g.vertex_count();
            for _ in 0..200 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_key(&g.permute(&perm).unwrap()).unwrap(), key);
            }
        }
    }

    #[test]
    fn canonical_key_bound() {
        let g = cycle(13);
        assert!(matches!(
            canonical_key(&g),
            Err(crate::error::Error::Capacity(_))
        ));
        assert!(canonical_key_bounded(&g, 13).is_ok());
        // Cycles are cheap even at the default bound.
        assert!(canonical_key(&cycle(12)).is_ok());
    }

    #[test]
    fn canonical_key_distinguishes_multiplicities() {
        assert_ne!(
            canonical_key(&multiedge(2)).unwrap(),
            canonical_key(&multiedge(3)).unwrap()
        );
        let loop1 = Multigraph::new(1, [(0, 0)]).unwrap();
        let loop2 = Multigraph::new(1, [(0, 0), (0, 0)]).unwrap();
        assert_ne!(canonical_key(&loop1).unwrap(), canonical_key(&loop2).unwrap());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# a paw with a loop\n5 6\n0 1\n1 2\n0 2\n0 3\n3 3\n3 4\n";
        let g = Multigraph::parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.loop_count(3), 1);
        let round = Multigraph::parse_edge_list(&g.to_edge_list_string()).unwrap();
        assert_eq!(g, round);
    }

    #[test]
    fn edge_list_errors() {
        assert!(Multigraph::parse_edge_list("").is_err());
        assert!(Multigraph::parse_edge_list("2 1\n0 5\n").is_err());
        assert!(Multigraph::parse_edge_list("2 2\n0 1\n").is_err());
        assert!(Multigraph::parse_edge_list("2 x\n0 1\n").is_err());
    }

    #[test]
    fn subdivide_and_identify() {
        let g = cycle(3).subdivide_edge((0, 1)).unwrap();
        assert_eq!(canonical_key(&g).unwrap(), canonical_key(&cycle(4)).unwrap());
        let h = path(2).identify(0, 2).unwrap();
        assert_eq!(canonical_key(&h).unwrap(), canonical_key(&multiedge(2)).unwrap());
    }

    #[test]
    fn complement_of_simple_graph() {
        let g = path(3); // complement of P4 is P4
        let c = g.complement().unwrap();
        assert_eq!(canonical_key(&c).unwrap(), canonical_key(&path(3)).unwrap());
        assert!(multiedge(2).complement().is_err());
    }

    pub(crate) fn random_connected_multigraph(
        rng: &mut ChaCha8Rng,
        max_n: usize,
        max_m: usize,
    ) -> Multigraph {
        use rand::Rng;
        let n = rng.gen_range(1..=max_n);
        let mut edges: Vec<(usize, usize)> = Vec::new();
        // Random spanning tree first.
        for v in 1..n {
            edges.push((rng.gen_range(0..v), v));
        }
        let extra = rng.gen_range(0..=(max_m.saturating_sub(edges.len())));
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            if rng.gen_bool(0.12) {
                edges.push((u, u));
            } else {
                edges.push((u, rng.gen_range(0..n)));
            }
        }
        Multigraph::new(n, edges).unwrap()
    }
}
