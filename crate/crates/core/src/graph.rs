//! Simple undirected graphs stored as adjacency bitsets, plus vertex
//! multiplication (blow-ups) by composition vectors.

use crate::error::{Error, Result};
use crate::exact::matrix::IntMatrix;
use std::fmt;
use std::str::FromStr;

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset per row; optional labels are carried for
/// human-readable output and never participate in equality.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, bits: vec![0; n * words], labels: None }
    }

    /// Build a graph from an explicit edge list. Rejects loops, out-of-range
    /// endpoints, and duplicate edges so catalog definitions stay honest.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            if g.has_edge(u, v) {
                return Err(Error::InvalidEdge { u, v, reason: "duplicate edge".into() });
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for &w in &[u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidEdge { u, v, reason: "self-loop".into() });
        }
        Ok(())
    }

    /// Set or clear an edge without existence checks (endpoints must be valid).
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (wu, bu) = (v / 64, v % 64);
        let (wv, bv) = (u / 64, u % 64);
        if present {
            self.bits[u * self.words + wu] |= 1 << bu;
            self.bits[v * self.words + wv] |= 1 << bv;
        } else {
            self.bits[u * self.words + wu] &= !(1 << bu);
            self.bits[v * self.words + wv] &= !(1 << bv);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        total as usize / 2
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, u: usize) -> usize {
        let row = &self.bits[u * self.words..(u + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, u: usize) -> String {
        match &self.labels {
            Some(ls) => ls[u].clone(),
            None => format!("v{}", u + 1),
        }
    }

    /// Breadth-first connectivity. The one-vertex graph is connected; the
    /// empty graph on zero vertices is treated as connected vacuously.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Adjacency matrix over the integers.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| i64::from(self.has_edge(i, j)))
    }

    /// Rank of the adjacency matrix over the rationals (exact).
    pub fn adjacency_rank(&self) -> usize {
        self.adjacency_matrix().rank()
    }

    /// New graph with one edge removed; the edge must exist.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent { u, v });
        }
        let mut g = self.clone();
        g.set_edge(u, v, false);
        Ok(g)
    }

    /// Rotate the edges `v1 u` to `v2 u` for every `u` in `targets`.
    ///
    /// Preconditions: every target is adjacent to `v1`, non-adjacent to `v2`,
    /// and distinct from `v2`; `targets` is non-empty and duplicate-free.
    pub fn rotate_edges(&self, v1: usize, v2: usize, targets: &[usize]) -> Result<Graph> {
        self.check_pair(v1, v2)?;
        if targets.is_empty() {
            return Err(Error::RotationPrecondition("empty target set".into()));
        }
        let mut g = self.clone();
        let mut seen = vec![false; self.n];
        for &u in targets {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u, order: self.n });
            }
            if seen[u] {
                return Err(Error::RotationPrecondition(format!("duplicate target {u}")));
            }
            seen[u] = true;
            if u == v2 {
                return Err(Error::RotationPrecondition("target equals destination vertex".into()));
            }
            if !self.has_edge(v1, u) {
                return Err(Error::RotationPrecondition(format!(
                    "target {u} is not a neighbor of {v1}"
                )));
            }
            if self.has_edge(v2, u) {
                return Err(Error::RotationPrecondition(format!(
                    "target {u} is already a neighbor of {v2}"
                )));
            }
            g.set_edge(v1, u, false);
            g.set_edge(v2, u, true);
        }
        Ok(g)
    }

    /// Vertex multiplication: replace vertex `i` by an independent set of
    /// `m[i]` copies, joining copies exactly when the originals are adjacent.
    ///
    /// Vertices of the result are ordered block by block: all copies of
    /// vertex 0 first, then vertex 1, and so on, copy index ascending.
    pub fn blow_up(&self, m: &CompositionVector) -> Result<Graph> {
        if m.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: m.len() });
        }
        let offsets = m.offsets();
        let total = m.total();
        let mut g = Graph::new(total);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    continue;
                }
                for a in offsets[u]..offsets[u + 1] {
                    for b in offsets[v]..offsets[v + 1] {
                        g.set_edge(a, b, true);
                    }
                }
            }
        }
        if self.labels.is_some() {
            let mut labels = Vec::with_capacity(total);
            for u in 0..self.n {
                for copy in 0..m.parts()[u] {
                    if m.parts()[u] == 1 {
                        labels.push(self.label(u));
                    } else {
                        labels.push(format!("{}.{}", self.label(u), copy + 1));
                    }
                }
            }
            g.labels = Some(labels);
        }
        Ok(g)
    }

    /// Relabeled copy: vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: perm.len() });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n {
                return Err(Error::VertexOutOfRange { vertex: p, order: self.n });
            }
            if seen[p] {
                return Err(Error::InvalidArgument("permutation has a repeated image".into()));
            }
            seen[p] = true;
        }
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        if let Some(ls) = &self.labels {
            let mut labels = vec![String::new(); self.n];
            for u in 0..self.n {
                labels[perm[u]] = ls[u].clone();
            }
            g.labels = Some(labels);
        }
        Ok(g)
    }

    /// Subgraph induced by `verts` (order of `verts` fixes the new labeling).
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<Graph> {
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u, order: self.n });
            }
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if u == v {
                    return Err(Error::InvalidArgument("repeated vertex in subgraph".into()));
                }
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Does the graph contain a clique on `q` vertices?
    ///
    /// Backtracking over candidate sets ordered by degree; exact for any size,
    /// intended for small graphs.
    pub fn contains_clique(&self, q: usize) -> bool {
        self.find_clique(q).is_some()
    }

    /// A clique on `q` vertices if one exists (vertex list as certificate).
    pub fn find_clique(&self, q: usize) -> Option<Vec<usize>> {
        if q == 0 {
            return Some(Vec::new());
        }
        if q > self.n {
            return None;
        }
        // Vertices of degree < q-1 can never participate.
        let mut order: Vec<usize> = (0..self.n).filter(|&u| self.degree(u) >= q - 1).collect();
        order.sort_by_key(|&u| std::cmp::Reverse(self.degree(u)));
        let mut chosen = Vec::with_capacity(q);
        if self.extend_clique(&order, q, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn extend_clique(&self, candidates: &[usize], q: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == q {
            return true;
        }
        let need = q - chosen.len();
        for (idx, &u) in candidates.iter().enumerate() {
            if candidates.len() - idx < need {
                return false;
            }
            let next: Vec<usize> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&v| self.has_edge(u, v))
                .collect();
            chosen.push(u);
            if self.extend_clique(&next, q, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Brute-force isomorphism test (degree-pruned backtracking).
    ///
    /// Exponential in the worst case; refuses graphs above 12 vertices.
    pub fn is_isomorphic_to(&self, other: &Graph) -> Result<bool> {
        const MAX: usize = 12;
        if self.n > MAX || other.n > MAX {
            return Err(Error::OrderTooLarge { n: self.n.max(other.n), max: MAX });
        }
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let mut da = self.degrees();
        let mut db = other.degrees();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return Ok(false);
        }
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        Ok(self.extend_iso(other, 0, &mut image, &mut used))
    }

    fn extend_iso(
        &self,
        other: &Graph,
        u: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if u == self.n {
            return true;
        }
        for w in 0..self.n {
            if used[w] || self.degree(u) != other.degree(w) {
                continue;
            }
            let consistent =
                (0..u).all(|p| self.has_edge(u, p) == other.has_edge(w, image[p]));
            if !consistent {
                continue;
            }
            image[u] = w;
            used[w] = true;
            if self.extend_iso(other, u + 1, image, used) {
                return true;
            }
            used[w] = false;
            image[u] = usize::MAX;
        }
        false
    }

    /// All automorphisms as permutation vectors (`perm[i]` = image of `i`).
    ///
    /// Brute-force backtracking; refuses graphs above 10 vertices.
    pub fn automorphisms(&self) -> Result<Vec<Vec<usize>>> {
        const MAX: usize = 10;
        if self.n > MAX {
            return Err(Error::OrderTooLarge { n: self.n, max: MAX });
        }
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.collect_autos(0, &mut image, &mut used, &mut out);
        Ok(out)
    }

    fn collect_autos(
        &self,
        u: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if u == self.n {
            out.push(image.clone());
            return;
        }
        for w in 0..self.n {
            if used[w] || self.degree(u) != self.degree(w) {
                continue;
            }
            if !(0..u).all(|p| self.has_edge(u, p) == self.has_edge(w, image[p])) {
                continue;
            }
            image[u] = w;
            used[w] = true;
            self.collect_autos(u + 1, image, used, out);
            used[w] = false;
            image[u] = usize::MAX;
        }
    }
}

/// Multiplicities for a blow-up: one strictly positive part per base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositionVector {
    parts: Vec<usize>,
}

impl CompositionVector {
    pub fn new(parts: Vec<usize>) -> Result<CompositionVector> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!("part {} is zero", pos + 1)));
        }
        Ok(CompositionVector { parts })
    }

    pub fn ones(len: usize) -> CompositionVector {
        CompositionVector { parts: vec![1; len] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Prefix offsets: block `i` of the blow-up is `offsets[i]..offsets[i+1]`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        off.push(0);
        for &p in &self.parts {
            acc += p;
            off.push(acc);
        }
        off
    }

    /// Composition obtained by relabeling base vertices with `perm`
    /// (`perm[i]` = image of vertex `i`).
    pub fn permuted(&self, perm: &[usize]) -> Result<CompositionVector> {
        if perm.len() != self.parts.len() {
            return Err(Error::LengthMismatch { expected: self.parts.len(), got: perm.len() });
        }
        let mut out = vec![0usize; self.parts.len()];
        for (i, &p) in perm.iter().enumerate() {
            if p >= out.len() || out[p] != 0 {
                return Err(Error::InvalidArgument("invalid permutation".into()));
            }
            out[p] = self.parts[i];
        }
        CompositionVector::new(out)
    }

    /// Are two compositions equal up to an automorphism of `base`?
    pub fn equivalent_under(&self, other: &CompositionVector, base: &Graph) -> Result<bool> {
        if self.len() != other.len() || base.n() != self.len() {
            return Ok(false);
        }
        for auto in base.automorphisms()? {
            if &self.permuted(&auto)? == other {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl fmt::Display for CompositionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for CompositionVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<CompositionVector> {
        let parts: Result<Vec<usize>> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(format!("bad part `{t}`")))
            })
            .collect();
        CompositionVector::new(parts?)
    }
}
