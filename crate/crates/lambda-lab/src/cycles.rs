//! Induced (chordless) cycles, the nonseparating filter defining `C(G)`,
//! the graph characteristic `Λ(G) = |C(G)| − |E(G)| + |V(G)|`, and the
//! cycle-space span check.
//!
//! Enumeration walks every vertex subset and keeps those inducing a
//! connected 2-regular subgraph. That is exponential in the vertex count by
//! construction, so it is gated at [`MAX_ENUMERATION_VERTICES`]; everything
//! this crate verifies lives far below that bound.

use std::collections::BTreeSet;

use crate::connectivity::{is_connected, mask_connected};
use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::{BitIter, EdgeRef, Graph, VertexId};

/// Subset enumeration refuses graphs above this many vertices.
pub const MAX_ENUMERATION_VERTICES: usize = 25;

/// An induced cycle, stored as its canonical traversal: the smallest vertex
/// first, proceeding toward its smaller cycle-neighbor. Two cycles are equal
/// exactly when they are the same cycle of the same graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl std::fmt::Debug for Cycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cycle{:?}", self.vertices.iter().map(|v| v.index()).collect::<Vec<_>>())
    }
}

fn canonicalize(seq: &[usize]) -> Vec<usize> {
    let len = seq.len();
    let min_pos = (0..len).min_by_key(|&i| seq[i]).expect("nonempty");
    let succ = seq[(min_pos + 1) % len];
    let pred = seq[(min_pos + len - 1) % len];
    let mut out = Vec::with_capacity(len);
    if succ <= pred {
        out.extend((0..len).map(|i| seq[(min_pos + i) % len]));
    } else {
        out.extend((0..len).map(|i| seq[(min_pos + len - i) % len]));
    }
    out
}

impl Cycle {
    /// Canonicalizes an explicit traversal order. The sequence must list at
    /// least three distinct vertices; adjacency is a property of a graph and
    /// is checked by [`Cycle::is_valid_in`].
    pub fn from_sequence(seq: &[VertexId]) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::InvalidParameter {
                reason: format!("a cycle needs at least 3 vertices, got {}", seq.len()),
            });
        }
        let raw: Vec<usize> = seq.iter().map(|v| v.index()).collect();
        if raw.iter().collect::<BTreeSet<_>>().len() != raw.len() {
            return Err(Error::InvalidParameter {
                reason: "cycle sequence repeats a vertex".into(),
            });
        }
        Ok(Cycle {
            vertices: canonicalize(&raw).into_iter().map(VertexId::new).collect(),
        })
    }

    fn from_mask(g: &Graph, mask: u64) -> Self {
        // mask induces a connected 2-regular subgraph: walk it once
        let start = mask.trailing_zeros() as usize;
        let mut seq = Vec::with_capacity(mask.count_ones() as usize);
        seq.push(start);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let mut it = BitIter(g.adj_bits(cur) & mask);
            let first = it.next().expect("2-regular");
            let second = it.next().expect("2-regular");
            let next = if first == prev { second } else { first };
            if next == start {
                break;
            }
            seq.push(next);
            prev = cur;
            cur = next;
        }
        Cycle {
            vertices: canonicalize(&seq).into_iter().map(VertexId::new).collect(),
        }
    }

    /// Vertices in canonical traversal order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, v| m | 1 << v.index())
    }

    /// Vertex indices sorted ascending; this is the JSON form, and because
    /// the cycle is induced it identifies the cycle completely.
    pub fn sorted_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.vertices.iter().map(|v| v.index()).collect();
        v.sort_unstable();
        v
    }

    /// The cycle's edges in traversal order.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let len = self.vertices.len();
        (0..len)
            .map(|i| EdgeRef::between(self.vertices[i].index(), self.vertices[(i + 1) % len].index()))
            .collect()
    }

    /// True iff consecutive vertices are adjacent in `g` and no chord exists.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let len = self.vertices.len();
        if self.vertices.iter().any(|v| v.index() >= g.vertex_count()) {
            return false;
        }
        for i in 0..len {
            for j in i + 1..len {
                let adjacent = g.has_edge(self.vertices[i], self.vertices[j]);
                let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                if adjacent != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

/// A duplicate-free set of cycles together with the fingerprint of the graph
/// they were enumerated from.
#[derive(Clone, Debug)]
pub struct CycleSet {
    cycles: BTreeSet<Cycle>,
    fingerprint: u64,
}

impl CycleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn contains(&self, c: &Cycle) -> bool {
        self.cycles.contains(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter()
    }

    /// Fingerprint of the owning graph value.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
}

impl<'a> IntoIterator for &'a CycleSet {
    type Item = &'a Cycle;
    type IntoIter = std::collections::btree_set::Iter<'a, Cycle>;

    fn into_iter(self) -> Self::IntoIter {
        self.cycles.iter()
    }
}

fn assert_enumerable(g: &Graph) {
    assert!(
        g.vertex_count() <= MAX_ENUMERATION_VERTICES,
        "cycle enumeration is exponential; refusing {} > {} vertices",
        g.vertex_count(),
        MAX_ENUMERATION_VERTICES
    );
}

/// All chordless cycles of `g`, in canonical form.
pub fn induced_cycles(g: &Graph) -> CycleSet {
    assert_enumerable(g);
    let n = g.vertex_count();
    let adj = g.adj_slice();
    let mut cycles = BTreeSet::new();
    'subsets: for mask in 0..1u64 << n {
        if mask.count_ones() < 3 {
            continue;
        }
        for v in BitIter(mask) {
            if (adj[v] & mask).count_ones() != 2 {
                continue 'subsets;
            }
        }
        if mask_connected(adj, mask) {
            cycles.insert(Cycle::from_mask(g, mask));
        }
    }
    CycleSet {
        cycles,
        fingerprint: g.fingerprint(),
    }
}

/// Whether deleting the cycle's vertices leaves `g` connected. An empty
/// remainder counts as connected, so a Hamiltonian chordless cycle is
/// nonseparating.
pub fn is_nonseparating(g: &Graph, c: &Cycle) -> Result<bool> {
    if !c.is_valid_in(g) {
        return Err(Error::CycleNotInGraph);
    }
    Ok(mask_connected(g.adj_slice(), g.full_mask() & !c.vertex_mask()))
}

/// `C(G)`: the induced nonseparating cycles of `g`.
pub fn nonseparating_induced_cycles(g: &Graph) -> CycleSet {
    assert_enumerable(g);
    let adj = g.adj_slice();
    let full = g.full_mask();
    let all = induced_cycles(g);
    let cycles = all
        .cycles
        .into_iter()
        .filter(|c| mask_connected(adj, full & !c.vertex_mask()))
        .collect();
    CycleSet {
        cycles,
        fingerprint: g.fingerprint(),
    }
}

/// The characteristic record: `lambda = |C(G)| − |E(G)| + |V(G)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Characteristic {
    pub lambda: i64,
    pub cycle_count: usize,
    pub edge_count: usize,
    pub vertex_count: usize,
}

pub fn characteristic(g: &Graph) -> Characteristic {
    let cycle_count = nonseparating_induced_cycles(g).len();
    let edge_count = g.edge_count();
    let vertex_count = g.vertex_count();
    Characteristic {
        lambda: cycle_count as i64 - edge_count as i64 + vertex_count as i64,
        cycle_count,
        edge_count,
        vertex_count,
    }
}

/// Result of the cycle-space span check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankCheck {
    /// Whether `C(G)` spans the whole cycle space.
    pub spans: bool,
    /// GF(2) rank of the edge-incidence vectors of `C(G)`.
    pub rank: usize,
    /// The cycle-space rank `|E| − |V| + 1` of the connected graph.
    pub expected: usize,
}

/// Ranks the edge-incidence vectors of `C(G)` over GF(2) and compares with
/// the cycle-space rank `|E| − |V| + 1`.
pub fn cycle_space_rank_check(g: &Graph) -> Result<RankCheck> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let edges = g.edges();
    let index_of = |e: &EdgeRef| edges.binary_search(e).expect("edge of g");
    let words = edges.len().div_ceil(64).max(1);
    let rows: Vec<Vec<u64>> = nonseparating_induced_cycles(g)
        .iter()
        .map(|c| {
            let mut row = vec![0u64; words];
            for e in c.edges() {
                let i = index_of(&e);
                row[i / 64] |= 1 << (i % 64);
            }
            row
        })
        .collect();
    let rank = gf2::rank(rows, edges.len());
    // the cycle space of a connected graph on n >= 1 vertices has rank
    // m - n + 1; the 0-vertex graph has the trivial space
    let expected = if g.vertex_count() == 0 {
        0
    } else {
        edges.len() + 1 - g.vertex_count()
    };
    Ok(RankCheck {
        spans: rank == expected,
        rank,
        expected,
    })
}
