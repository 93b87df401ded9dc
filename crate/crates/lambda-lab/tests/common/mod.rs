//! Independent oracles for differential testing. Everything here works on
//! plain adjacency matrices with list-based search, sharing no code with the
//! bitset implementations it checks.

#![allow(dead_code)]
// oracle code stays deliberately plain: index loops over a matrix
#![allow(clippy::needless_range_loop)]
#![allow(clippy::manual_is_multiple_of)]

use std::collections::BTreeSet;

use lambda_lab::graph::{Graph, VertexId};

pub type Matrix = Vec<Vec<bool>>;

pub fn to_matrix(g: &Graph) -> Matrix {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for e in g.edges() {
        let (a, b) = (e.a().index(), e.b().index());
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

pub fn from_matrix(m: &Matrix) -> Graph {
    let n = m.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if m[i][j] {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("matrix within range")
}

fn dfs_reach(m: &Matrix, alive: &[bool], start: usize, seen: &mut Vec<bool>) {
    seen[start] = true;
    for next in 0..m.len() {
        if alive[next] && m[start][next] && !seen[next] {
            dfs_reach(m, alive, next, seen);
        }
    }
}

/// Connectivity of the subgraph induced by `alive`; empty counts as connected.
pub fn oracle_connected(m: &Matrix, alive: &[bool]) -> bool {
    let Some(start) = (0..m.len()).find(|&v| alive[v]) else {
        return true;
    };
    let mut seen = vec![false; m.len()];
    dfs_reach(m, alive, start, &mut seen);
    (0..m.len()).all(|v| !alive[v] || seen[v])
}

fn connected_without(m: &Matrix, removed: &[usize]) -> bool {
    let mut alive = vec![true; m.len()];
    for &r in removed {
        alive[r] = false;
    }
    oracle_connected(m, &alive)
}

/// Deletion-based 3-connectivity, checked subset by subset.
pub fn oracle_three_connected(m: &Matrix) -> bool {
    let n = m.len();
    if !connected_without(m, &[]) {
        return false;
    }
    for a in 0..n {
        if !connected_without(m, &[a]) {
            return false;
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if !connected_without(m, &[a, b]) {
                return false;
            }
        }
    }
    true
}

fn chordless(m: &Matrix, path: &[usize]) -> bool {
    let len = path.len();
    for i in 0..len {
        for j in i + 1..len {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if !consecutive && m[path[i]][path[j]] {
                return false;
            }
        }
    }
    true
}

fn cycle_dfs(m: &Matrix, start: usize, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
    let last = *path.last().unwrap();
    for next in 0..m.len() {
        if !m[last][next] {
            continue;
        }
        if next == start {
            if path.len() >= 3 && path[1] < *path.last().unwrap() && chordless(m, path) {
                let mut key = path.clone();
                key.sort_unstable();
                out.insert(key);
            }
        } else if next > start && !path.contains(&next) {
            path.push(next);
            cycle_dfs(m, start, path, out);
            path.pop();
        }
    }
}

/// Chordless cycles by path extension, as sorted vertex sets (an induced
/// cycle is determined by its vertex set).
pub fn oracle_chordless_cycles(m: &Matrix) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for start in 0..m.len() {
        let mut path = vec![start];
        cycle_dfs(m, start, &mut path, &mut out);
    }
    out
}

/// Chordless cycles whose deletion leaves the rest connected.
pub fn oracle_nonseparating_cycles(m: &Matrix) -> BTreeSet<Vec<usize>> {
    oracle_chordless_cycles(m)
        .into_iter()
        .filter(|cycle| connected_without(m, cycle))
        .collect()
}

pub fn oracle_lambda(m: &Matrix) -> i64 {
    let cycles = oracle_nonseparating_cycles(m).len() as i64;
    let edges: usize = (0..m.len()).map(|i| m[i].iter().filter(|&&b| b).count()).sum::<usize>() / 2;
    cycles - edges as i64 + m.len() as i64
}

/// Exhaustive partition search for a `K_k` model: vertices are assigned to
/// one of `k` parts or left out, parts numbered by first use; a leaf is a
/// model when all `k` parts are nonempty, connected, and pairwise joined.
fn partition_dfs(m: &Matrix, assign: &mut Vec<usize>, v: usize, used: usize, k: usize) -> bool {
    let n = m.len();
    if v == n {
        if used != k {
            return false;
        }
        for part in 1..=k {
            let alive: Vec<bool> = (0..n).map(|w| assign[w] == part).collect();
            if alive.iter().all(|&b| !b) || !oracle_connected(m, &alive) {
                return false;
            }
        }
        for a in 1..=k {
            for b in a + 1..=k {
                let joined = (0..n).any(|x| {
                    assign[x] == a && (0..n).any(|y| assign[y] == b && m[x][y])
                });
                if !joined {
                    return false;
                }
            }
        }
        return true;
    }
    // leave v out
    assign[v] = 0;
    if partition_dfs(m, assign, v + 1, used, k) {
        return true;
    }
    // put v in an existing part or open the next one
    let limit = (used + 1).min(k);
    for part in 1..=limit {
        assign[v] = part;
        if partition_dfs(m, assign, v + 1, used.max(part), k) {
            return true;
        }
    }
    assign[v] = 0;
    false
}

pub fn oracle_has_minor(m: &Matrix, k: usize) -> bool {
    if k == 0 || k > m.len() {
        return k == 0;
    }
    let mut assign = vec![0usize; m.len()];
    partition_dfs(m, &mut assign, 0, 0, k)
}

/// Largest `k` with a `K_k` model, by ascending exhaustive search.
pub fn oracle_hadwiger(m: &Matrix) -> usize {
    let mut h = 1;
    while h < m.len() && oracle_has_minor(m, h + 1) {
        h += 1;
    }
    h
}

/// Contraction on the adjacency matrix: row/column `v` ORs into `u`, loops
/// cleared, then `v` is dropped with the tail shifted down.
pub fn oracle_contract(m: &Matrix, u: usize, v: usize) -> Matrix {
    assert!(m[u][v]);
    let n = m.len();
    let mut merged = m.clone();
    for w in 0..n {
        merged[u][w] = merged[u][w] || merged[v][w];
        merged[w][u] = merged[w][u] || merged[w][v];
    }
    merged[u][u] = false;
    let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
    keep.iter()
        .map(|&a| keep.iter().map(|&b| a != b && merged[a][b]).collect())
        .collect()
}

/// Independent graph6 encoder over the adjacency matrix.
pub fn reference_graph6(m: &Matrix) -> String {
    let n = m.len();
    let mut bits: Vec<bool> = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(m[i][j]);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    if n <= 62 {
        s.push((n as u8 + 63) as char);
    } else {
        s.push('~');
        s.push((((n >> 12) & 63) as u8 + 63) as char);
        s.push((((n >> 6) & 63) as u8 + 63) as char);
        s.push(((n & 63) as u8 + 63) as char);
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - i);
            }
        }
        s.push((v + 63) as char);
    }
    s
}

/// Sorted-vertex-set view of a cycle set, for comparison with oracles.
pub fn cycle_sets(cs: &lambda_lab::cycles::CycleSet) -> BTreeSet<Vec<usize>> {
    cs.iter().map(|c| c.sorted_indices()).collect()
}

pub fn vid(indices: &[usize]) -> Vec<VertexId> {
    indices.iter().map(|&i| VertexId::new(i)).collect()
}
