//! Test-corpus generation: named families, exhaustive labeled catalogs of
//! 3-connected graphs, and seeded random 3-connected graphs grown from a
//! wheel by edge additions and vertex splits (which stay inside the class by
//! Tutte's wheel theorem; each output is re-checked anyway).

use crate::connectivity::is_three_connected;
use crate::error::{Error, Result};
use crate::graph::{mask_of, Graph, MAX_VERTICES};

/// A named graph family with its parameters.
///
/// Vertex numbering per family:
/// - `Complete(n)`: plain `K_n`.
/// - `Wheel(n)`: `n` vertices total; hub `0`, rim cycle `1..n-1`.
/// - `Prism`: top triangle `0,1,2`, bottom triangle `3,4,5`, vertical edges
///   `i-(i+3)`.
/// - `Cube`: vertices are the 3-bit strings `0..8`, edges between Hamming
///   distance 1.
/// - `CompleteBipartite(a, b)`: left side `0..a`, right side `a..a+b`.
/// - `Petersen`: outer pentagon `0..5`, spokes `i-(i+5)`, inner pentagram.
/// - `CompleteMinusEdge(n)`: `K_n` without the edge `(n-2)-(n-1)`.
/// - `CliqueSumChain(r)`: `r` copies of `K_4` sharing the triangle `0,1,2`,
///   apex vertices `3..3+r`.
/// - `Dodecahedron`: outer 10-cycle `0..10`, spokes `i-(10+i)`, inner
///   vertices `10+i` joined at distance two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Wheel(usize),
    Prism,
    Cube,
    CompleteBipartite(usize, usize),
    Petersen,
    CompleteMinusEdge(usize),
    CliqueSumChain(usize),
    Dodecahedron,
}

pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Complete(n) => {
            if n > MAX_VERTICES {
                return Err(Error::InfeasibleParameters {
                    reason: format!("complete({n}) exceeds {MAX_VERTICES} vertices"),
                });
            }
            Graph::complete(n)
        }
        FamilySpec::Wheel(n) => {
            if !(4..=MAX_VERTICES).contains(&n) {
                return Err(Error::InfeasibleParameters {
                    reason: format!("wheel({n}) needs 4..={MAX_VERTICES} vertices"),
                });
            }
            let rim = n - 1;
            let mut edges = Vec::with_capacity(2 * rim);
            for i in 1..=rim {
                edges.push((0, i));
                edges.push((i, 1 + i % rim));
            }
            Graph::new(n, &edges)
        }
        FamilySpec::Prism => Graph::new(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        ),
        FamilySpec::Cube => {
            let mut edges = Vec::new();
            for u in 0..8usize {
                for b in 0..3 {
                    let v = u ^ (1 << b);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(8, &edges)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 || a + b > MAX_VERTICES {
                return Err(Error::InfeasibleParameters {
                    reason: format!("complete-bipartite({a},{b}) is out of range"),
                });
            }
            let mut edges = Vec::with_capacity(a * b);
            for u in 0..a {
                for v in a..a + b {
                    edges.push((u, v));
                }
            }
            Graph::new(a + b, &edges)
        }
        FamilySpec::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((i + 5, 5 + (i + 2) % 5));
            }
            Graph::new(10, &edges)
        }
        FamilySpec::CompleteMinusEdge(n) => {
            if !(3..=MAX_VERTICES).contains(&n) {
                return Err(Error::InfeasibleParameters {
                    reason: format!("complete-minus-edge({n}) needs 3..={MAX_VERTICES} vertices"),
                });
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if (u, v) != (n - 2, n - 1) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges)
        }
        FamilySpec::CliqueSumChain(r) => {
            if r == 0 || r + 3 > MAX_VERTICES {
                return Err(Error::InfeasibleParameters {
                    reason: format!("clique-sum-chain({r}) is out of range"),
                });
            }
            let mut edges = vec![(0, 1), (0, 2), (1, 2)];
            for apex in 3..3 + r {
                edges.push((0, apex));
                edges.push((1, apex));
                edges.push((2, apex));
            }
            Graph::new(3 + r, &edges)
        }
        FamilySpec::Dodecahedron => {
            let mut edges = Vec::new();
            for i in 0..10 {
                edges.push((i, (i + 1) % 10));
                edges.push((i, 10 + i));
                edges.push((10 + i, 10 + (i + 2) % 10));
            }
            Graph::new(20, &edges)
        }
    }
}

/// Lexicographic edge order of the labeled complete graph on `n` vertices.
pub fn lex_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    edges
}

/// Builds the graph selected by `mask` over [`lex_edges`]`(n)` and returns
/// it only if it is 3-connected. Bit `m-1-k` of the mask selects edge `k`,
/// so ascending masks stream edge sets in lexicographic order of their
/// characteristic vectors.
pub fn catalog_candidate(n: usize, mask: u64, edges: &[(usize, usize)]) -> Option<Graph> {
    let m = edges.len();
    let mut adj = vec![0u64; n];
    for (k, &(u, v)) in edges.iter().enumerate() {
        if mask >> (m - 1 - k) & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    // 3-connectivity needs minimum degree 3
    if adj.iter().any(|a| (a.count_ones() as usize) < 3) {
        return None;
    }
    let g = Graph::from_bitsets(n, adj);
    is_three_connected(&g).then_some(g)
}

/// Streams every 3-connected graph on `n` labeled vertices exactly once, in
/// lexicographic order of the edge-set characteristic vector. No isomorphism
/// reduction is applied. Supported for `4 <= n <= 8`; at `n = 8` a full pass
/// visits 2^28 edge sets, so wire it behind an explicit opt-in.
pub fn exhaustive_catalog(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(4..=8).contains(&n) {
        return Err(Error::CatalogRange { n });
    }
    let edges = lex_edges(n);
    let end = 1u64 << edges.len();
    Ok((0..end).filter_map(move |mask| catalog_candidate(n, mask, &edges)))
}

/// Deterministic SplitMix64 stream; the generator must reproduce bit-exact
/// graphs from a seed across platforms and releases, so no external RNG.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw below `bound` (> 0).
    fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Grows a seeded random 3-connected graph on `n` vertices with roughly
/// `m_target` edges: start from a wheel, split vertices of degree at least 4
/// until the vertex count is reached (each side keeping degree at least 3),
/// then add random edges up to the target. The result is verified
/// 3-connected before it is returned.
pub fn random_3_connected(n: usize, m_target: usize, seed: u64) -> Result<Graph> {
    if !(4..=MAX_VERTICES).contains(&n) {
        return Err(Error::InfeasibleParameters {
            reason: format!("need 4..={MAX_VERTICES} vertices, got {n}"),
        });
    }
    if 2 * m_target < 3 * n {
        return Err(Error::InfeasibleParameters {
            reason: format!("{m_target} edges cannot give minimum degree 3 on {n} vertices"),
        });
    }
    if m_target > n * (n - 1) / 2 {
        return Err(Error::InfeasibleParameters {
            reason: format!("{m_target} edges exceed the simple-graph maximum on {n} vertices"),
        });
    }
    let mut rng = SplitMix64(seed);
    // wheel size: small enough that the wheel alone cannot overshoot m_target
    let w = if n == 4 {
        4
    } else {
        let cap = n.min(2 + m_target.saturating_sub(n)).max(5);
        5 + rng.below((cap - 4) as u64) as usize
    };
    let mut cur = make_family(&FamilySpec::Wheel(w))?;
    while cur.vertex_count() < n {
        let splittable: Vec<usize> = (0..cur.vertex_count())
            .filter(|&v| cur.adj_bits(v).count_ones() >= 4)
            .collect();
        if splittable.is_empty() {
            // make a vertex splittable first
            cur = add_random_missing_edge(&cur, &mut rng)?;
            continue;
        }
        let v = splittable[rng.below(splittable.len() as u64) as usize];
        cur = split_vertex(&cur, v, &mut rng);
    }
    while cur.edge_count() < m_target && !cur.is_complete() {
        cur = add_random_missing_edge(&cur, &mut rng)?;
    }
    if !is_three_connected(&cur) {
        return Err(Error::InfeasibleParameters {
            reason: "generator produced a non-3-connected graph".into(),
        });
    }
    Ok(cur)
}

fn add_random_missing_edge(g: &Graph, rng: &mut SplitMix64) -> Result<Graph> {
    let n = g.vertex_count();
    let mut missing = Vec::new();
    for u in 0..n {
        let non = !g.adj_bits(u) & mask_of(n) & !mask_of(u + 1);
        for v in crate::graph::BitIter(non) {
            missing.push((u, v));
        }
    }
    if missing.is_empty() {
        return Err(Error::InfeasibleParameters {
            reason: "no edge left to add".into(),
        });
    }
    let (u, v) = missing[rng.below(missing.len() as u64) as usize];
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (e.a().index(), e.b().index()))
        .collect();
    edges.push((u, v));
    Graph::new(n, &edges)
}

/// Splits `v` (of degree >= 4) into `v` and a fresh last vertex, joined by an
/// edge, distributing the old neighbors so both sides keep degree >= 3.
fn split_vertex(g: &Graph, v: usize, rng: &mut SplitMix64) -> Graph {
    let n = g.vertex_count();
    let mut nbrs: Vec<usize> = crate::graph::BitIter(g.adj_bits(v)).collect();
    // Fisher-Yates with the seeded stream
    for i in (1..nbrs.len()).rev() {
        let j = rng.below((i + 1) as u64) as usize;
        nbrs.swap(i, j);
    }
    let keep = 2 + rng.below((nbrs.len() - 3) as u64) as usize;
    let fresh = n;
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (e.a().index(), e.b().index()))
        .filter(|&(a, b)| a != v && b != v)
        .collect();
    for (i, &w) in nbrs.iter().enumerate() {
        if i < keep {
            edges.push((v, w));
        } else {
            edges.push((fresh, w));
        }
    }
    edges.push((v, fresh));
    Graph::new(n + 1, &edges).expect("split stays in range")
}
