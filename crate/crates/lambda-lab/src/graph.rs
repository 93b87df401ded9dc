//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` bitset per vertex, which keeps contraction,
//! deletion, and the connectivity sweeps word-parallel. Every operation
//! returns a new value; certificates hold many intermediate graphs at once,
//! so nothing here mutates in place.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap of the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// Index of a vertex, dense in `0..vertex_count` and stable for the lifetime
/// of the owning [`Graph`] value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(usize);

impl VertexId {
    pub const fn new(index: usize) -> Self {
        VertexId(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered vertex pair with distinct endpoints, stored low-high.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    a: VertexId,
    b: VertexId,
}

impl EdgeRef {
    pub fn new(u: VertexId, v: VertexId) -> Result<Self> {
        if u == v {
            return Err(Error::LoopEdge { vertex: u.index() });
        }
        Ok(if u < v {
            EdgeRef { a: u, b: v }
        } else {
            EdgeRef { a: v, b: u }
        })
    }

    /// Endpoints with known-distinct indices.
    pub(crate) fn between(u: usize, v: usize) -> Self {
        debug_assert_ne!(u, v);
        EdgeRef {
            a: VertexId(u.min(v)),
            b: VertexId(u.max(v)),
        }
    }

    /// The smaller endpoint.
    pub fn a(self) -> VertexId {
        self.a
    }

    /// The larger endpoint.
    pub fn b(self) -> VertexId {
        self.b
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }
}

impl fmt::Debug for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a.0, self.b.0)
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a.0, self.b.0)
    }
}

/// Iterator over the set bit positions of a word.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

pub(crate) fn mask_of(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple graph: no loops, no parallel edges, vertices `0..n`.
///
/// Each vertex carries a provenance label: the bitset of root-graph vertices
/// that were merged into it by contractions, carried through deletions.
/// Labels do not take part in equality or hashing.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Vec<u64>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            labels: (0..n).map(|v| 1u64 << v).collect(),
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge { vertex: u });
            }
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = mask_of(n);
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    /// Internal fast path: adjacency rows are trusted to be symmetric and
    /// loop-free. Labels are reset to the identity.
    pub(crate) fn from_bitsets(n: usize, adj: Vec<u64>) -> Self {
        debug_assert!(n <= MAX_VERTICES && adj.len() == n);
        #[cfg(debug_assertions)]
        for v in 0..n {
            debug_assert_eq!(adj[v] & !mask_of(n), 0);
            debug_assert_eq!(adj[v] >> v & 1, 0, "loop at {v}");
            for u in BitIter(adj[v]) {
                debug_assert_ne!(adj[u] >> v & 1, 0, "asymmetric at {u},{v}");
            }
        }
        Graph {
            n,
            adj,
            labels: (0..n).map(|v| 1u64 << v).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        v.index() < self.n
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u.index() < self.n && v.index() < self.n && self.adj[u.index()] >> v.index() & 1 == 1
    }

    /// Looks an edge up by endpoint indices, failing if it is absent.
    pub fn edge(&self, u: usize, v: usize) -> Result<EdgeRef> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge { vertex: u });
        }
        if self.adj[u] >> v & 1 == 0 {
            return Err(Error::EdgeNotPresent { a: u.min(v), b: u.max(v) });
        }
        Ok(EdgeRef::between(u, v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        assert!(v.index() < self.n, "vertex {v} out of range");
        self.adj[v.index()].count_ones() as usize
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        assert!(v.index() < self.n, "vertex {v} out of range");
        BitIter(self.adj[v.index()]).map(VertexId)
    }

    /// All edges in lexicographic order of their (low, high) endpoints.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] & !mask_of(u + 1)) {
                out.push(EdgeRef::between(u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// Provenance bitset of `v`: the root-graph vertices merged into it.
    pub fn label(&self, v: VertexId) -> u64 {
        assert!(v.index() < self.n, "vertex {v} out of range");
        self.labels[v.index()]
    }

    pub(crate) fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn adj_slice(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn full_mask(&self) -> u64 {
        mask_of(self.n)
    }

    /// FNV-1a over vertex count and adjacency; identifies the graph value a
    /// derived object (for example a cycle set) was computed from.
    pub fn fingerprint(&self) -> u64 {
        let mut h = 0xcbf29ce484222325u64;
        let mut eat = |x: u64| {
            for i in 0..8 {
                h ^= (x >> (8 * i)) & 0xff;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        eat(self.n as u64);
        for &row in &self.adj {
            eat(row);
        }
        h
    }

    /// Contracts edge `e`, suppressing the loop and any parallel edges.
    ///
    /// The merged vertex keeps the smaller of the two old indices; vertices
    /// above the larger index shift down by one, so the result is dense. The
    /// returned map records where every old vertex went and which new vertex
    /// is the merge.
    pub fn contract_edge(&self, e: EdgeRef) -> Result<(Graph, ContractionMap)> {
        let (u, v) = (e.a().index(), e.b().index());
        if v >= self.n || self.adj[u] >> v & 1 == 0 {
            return Err(Error::EdgeNotPresent { a: u, b: v });
        }
        let map: Vec<VertexId> = (0..self.n)
            .map(|w| {
                if w == v {
                    VertexId(u)
                } else if w > v {
                    VertexId(w - 1)
                } else {
                    VertexId(w)
                }
            })
            .collect();
        let m = self.n - 1;
        let mut adj = vec![0u64; m];
        for w in 0..self.n {
            let nw = map[w].index();
            for x in BitIter(self.adj[w]) {
                let nx = map[x].index();
                if nw != nx {
                    adj[nw] |= 1 << nx;
                    adj[nx] |= 1 << nw;
                }
            }
        }
        let mut labels = vec![0u64; m];
        for w in 0..self.n {
            labels[map[w].index()] |= self.labels[w];
        }
        let contracted = Graph { n: m, adj, labels };
        let map = ContractionMap {
            edge: e,
            merged: VertexId(u),
            map,
        };
        Ok((contracted, map))
    }

    /// Induced subgraph on the complement of `drop`, densely re-indexed in
    /// increasing order of the surviving old indices. Labels carry over, so
    /// provenance survives the re-indexing.
    pub fn delete_vertices(&self, drop: &[VertexId]) -> Result<Graph> {
        let mut drop_mask = 0u64;
        for &v in drop {
            if v.index() >= self.n {
                return Err(Error::UnknownVertex { vertex: v.index() });
            }
            drop_mask |= 1 << v.index();
        }
        Ok(self.delete_mask(drop_mask))
    }

    pub(crate) fn delete_mask(&self, drop_mask: u64) -> Graph {
        let keep = self.full_mask() & !drop_mask;
        let survivors: Vec<usize> = BitIter(keep).collect();
        let m = survivors.len();
        let mut adj = vec![0u64; m];
        for (i, &ov) in survivors.iter().enumerate() {
            let row = self.adj[ov] & keep;
            for (j, &ow) in survivors.iter().enumerate() {
                if row >> ow & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        let labels = survivors.iter().map(|&ov| self.labels[ov]).collect();
        Graph { n: m, adj, labels }
    }
}

/// Record of one edge contraction: the old edge, the old-to-new vertex map,
/// and the merged vertex (the only new vertex with two preimages).
#[derive(Clone, Debug)]
pub struct ContractionMap {
    edge: EdgeRef,
    merged: VertexId,
    map: Vec<VertexId>,
}

impl ContractionMap {
    pub fn edge(&self) -> EdgeRef {
        self.edge
    }

    pub fn merged(&self) -> VertexId {
        self.merged
    }

    /// Where old vertex `v` ended up.
    pub fn image_of(&self, v: VertexId) -> VertexId {
        self.map[v.index()]
    }

    /// Old vertices mapping to `w`: two for the merged vertex, one otherwise.
    pub fn preimages(&self, w: VertexId) -> Vec<VertexId> {
        self.map
            .iter()
            .enumerate()
            .filter(|(_, &img)| img == w)
            .map(|(v, _)| VertexId(v))
            .collect()
    }

    pub fn map(&self) -> &[VertexId] {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn prism() -> Graph {
        Graph::new(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(
            Graph::new(3, &[(1, 1)]),
            Err(Error::LoopEdge { vertex: 1 })
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::empty(65),
            Err(Error::TooManyVertices { n: 65, max: 64 })
        ));
    }

    #[test]
    fn sixty_four_vertices_is_fine() {
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.degree(VertexId::new(63)), 63);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn contract_k4_edge_gives_k3() {
        let g = k(4);
        let e = g.edge(0, 1).unwrap();
        let (h, map) = g.contract_edge(e).unwrap();
        assert_eq!(h, k(3));
        assert_eq!(map.merged(), VertexId::new(0));
        assert_eq!(map.preimages(VertexId::new(0)), vec![VertexId::new(0), VertexId::new(1)]);
    }

    #[test]
    fn contract_prism_vertical_edge() {
        let g = prism();
        let (h, map) = g.contract_edge(g.edge(0, 3).unwrap()).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 8);
        // merged vertex keeps index 0 and now sees the old 1, 2, 4, 5
        let m = map.merged();
        assert_eq!(m, VertexId::new(0));
        assert_eq!(h.degree(m), 4);
        assert_eq!(h.label(m), 0b001001);
    }

    #[test]
    fn contract_prism_triangle_edge() {
        let g = prism();
        let (h, _) = g.contract_edge(g.edge(0, 1).unwrap()).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 7);
    }

    #[test]
    fn contract_path_edge() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let (h, _) = g.contract_edge(g.edge(0, 1).unwrap()).unwrap();
        assert_eq!(h, Graph::new(2, &[(0, 1)]).unwrap());
    }

    #[test]
    fn contract_missing_edge_fails() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let e = EdgeRef::new(VertexId::new(0), VertexId::new(2)).unwrap();
        assert!(matches!(
            g.contract_edge(e),
            Err(Error::EdgeNotPresent { a: 0, b: 2 })
        ));
    }

    #[test]
    fn delete_two_from_k5_gives_k3() {
        let g = k(5);
        let h = g
            .delete_vertices(&[VertexId::new(4), VertexId::new(1)])
            .unwrap();
        assert_eq!(h, k(3));
        // survivors 0,2,3 in order; labels point back at the originals
        assert_eq!(h.label(VertexId::new(1)), 1 << 2);
        assert_eq!(h.label(VertexId::new(2)), 1 << 3);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = prism();
        assert_eq!(g.delete_vertices(&[]).unwrap(), g);
    }

    #[test]
    fn delete_unknown_vertex_fails() {
        let g = k(3);
        assert!(matches!(
            g.delete_vertices(&[VertexId::new(7)]),
            Err(Error::UnknownVertex { vertex: 7 })
        ));
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::new(4, &[(2, 3), (0, 2), (0, 1)]).unwrap();
        let es: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|e| (e.a().index(), e.b().index()))
            .collect();
        assert_eq!(es, vec![(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn contraction_edge_count_identity_on_samples() {
        // |E(G)| - |E(G/e)| = (#triangles through e) + 1
        for g in [k(5), prism(), Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap()] {
            for e in g.edges() {
                let common = (g.adj_bits(e.a().index()) & g.adj_bits(e.b().index())).count_ones() as usize;
                let (h, _) = g.contract_edge(e).unwrap();
                assert_eq!(g.edge_count() - h.edge_count(), common + 1);
            }
        }
    }
}
