//! Exact Hadwiger numbers by exhaustive search for complete-minor models.
//!
//! A model of `K_n` in a host graph is a family of `n` disjoint nonempty
//! vertex sets, each inducing a connected subgraph, with an edge of the host
//! between every pair. The search places branch sets one at a time in a
//! fixed order — roots strictly increasing across sets, connected supersets
//! enumerated smallest-vertex-first — so the first model found is
//! deterministic. Exhaustive failure of the search is the certificate that
//! no model exists.

use crate::connectivity::mask_connected;
use crate::error::{Error, Result};
use crate::graph::{mask_of, BitIter, Graph, VertexId};
use crate::structure::{clique_sum, TriangleGluing};

/// Default vertex cap for the minor search; override with `LAMBDA_LAB_MAX_N`.
pub const DEFAULT_HADWIGER_CAP: usize = 16;

/// Current vertex cap for Hadwiger searches.
pub fn hadwiger_cap() -> usize {
    std::env::var("LAMBDA_LAB_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_HADWIGER_CAP)
}

/// A witness that `K_n` is a minor: `n` branch sets, disjoint, connected,
/// pairwise joined by an edge of the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    branch_sets: Vec<Vec<VertexId>>,
}

impl MinorModel {
    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn branch_sets(&self) -> &[Vec<VertexId>] {
        &self.branch_sets
    }

    fn from_masks(masks: &[u64]) -> Self {
        MinorModel {
            branch_sets: masks
                .iter()
                .map(|&m| BitIter(m).map(VertexId::new).collect())
                .collect(),
        }
    }
}

/// Standalone validity check, independent of how a model was produced.
pub fn validate_minor_model(g: &Graph, model: &MinorModel) -> bool {
    let full = g.full_mask();
    let masks: Vec<u64> = model
        .branch_sets
        .iter()
        .map(|set| set.iter().fold(0u64, |m, v| m | 1 << v.index()))
        .collect();
    let mut seen = 0u64;
    for (set, &mask) in model.branch_sets.iter().zip(&masks) {
        if set.is_empty() || mask & !full != 0 || mask & seen != 0 {
            return false;
        }
        if mask.count_ones() as usize != set.len() {
            return false;
        }
        if !mask_connected(g.adj_slice(), mask) {
            return false;
        }
        seen |= mask;
    }
    for i in 0..masks.len() {
        let nbrs = BitIter(masks[i]).fold(0u64, |m, v| m | g.adj_bits(v));
        for &other in &masks[i + 1..] {
            if nbrs & other == 0 {
                return false;
            }
        }
    }
    true
}

struct ModelSearch<'a> {
    adj: &'a [u64],
    full: u64,
    order: usize,
    sets: Vec<u64>,
    nbrs: Vec<u64>,
    used: u64,
}

impl ModelSearch<'_> {
    fn place_next(&mut self, root_floor: usize) -> bool {
        let level = self.sets.len();
        if level == self.order {
            return true;
        }
        let free = self.full & !self.used;
        if (free.count_ones() as usize) < self.order - level {
            return false;
        }
        // every finished set must still reach the free region
        if !self.nbrs.iter().all(|&nb| nb & free != 0) {
            return false;
        }
        for root in BitIter(free & !mask_of(root_floor)) {
            // the root is the set's minimum, so smaller free vertices stay out
            let allowed = free & !mask_of(root);
            let ext = self.adj[root] & allowed;
            if self.grow(1 << root, self.adj[root], ext, 0, allowed) {
                return true;
            }
        }
        false
    }

    fn grow(&mut self, set: u64, set_nbrs: u64, ext: u64, banned: u64, allowed: u64) -> bool {
        if self.sets.iter().all(|&t| set_nbrs & t != 0) {
            let root = set.trailing_zeros() as usize;
            self.sets.push(set);
            self.nbrs.push(set_nbrs);
            self.used |= set;
            if self.place_next(root + 1) {
                return true;
            }
            self.used &= !set;
            self.nbrs.pop();
            self.sets.pop();
        }
        let mut banned = banned;
        let mut rest = ext;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let vb = 1u64 << v;
            rest &= rest - 1;
            let bigger = set | vb;
            let bigger_nbrs = set_nbrs | self.adj[v];
            let ext2 = (rest | (self.adj[v] & allowed)) & !bigger & !banned;
            if self.grow(bigger, bigger_nbrs, ext2, banned, allowed) {
                return true;
            }
            banned |= vb;
        }
        false
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    let cap = hadwiger_cap();
    if g.vertex_count() > cap {
        return Err(Error::HadwigerCapExceeded {
            n: g.vertex_count(),
            cap,
        });
    }
    Ok(())
}

/// Searches for a `K_n` model in `g`. Returns the first model in the fixed
/// search order, or `None` after exhausting the space.
pub fn has_clique_minor(g: &Graph, n: usize) -> Result<Option<MinorModel>> {
    if n == 0 {
        return Err(Error::InvalidParameter {
            reason: "minor order must be at least 1".into(),
        });
    }
    check_cap(g)?;
    if n > g.vertex_count() {
        return Ok(None);
    }
    let mut search = ModelSearch {
        adj: g.adj_slice(),
        full: g.full_mask(),
        order: n,
        sets: Vec::with_capacity(n),
        nbrs: Vec::with_capacity(n),
        used: 0,
    };
    if search.place_next(0) {
        let model = MinorModel::from_masks(&search.sets);
        debug_assert!(validate_minor_model(g, &model));
        Ok(Some(model))
    } else {
        Ok(None)
    }
}

/// The Hadwiger number with a witness model.
#[derive(Clone, Debug)]
pub struct HadwigerResult {
    pub h: usize,
    pub witness: MinorModel,
}

/// A maximum clique of `g` as a bitset; deterministic for a fixed graph.
fn max_clique_mask(adj: &[u64], full: u64) -> u64 {
    fn dfs(adj: &[u64], current: u64, cand: u64, best: &mut u64) {
        if current.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        if cand == 0 {
            *best = current;
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let vb = 1u64 << v;
        dfs(adj, current | vb, cand & adj[v], best);
        dfs(adj, current, cand & !vb, best);
    }
    let mut best = 0u64;
    dfs(adj, 0, full, &mut best);
    best
}

/// Exact Hadwiger number: climbs from a maximum-clique lower bound until the
/// model search fails, which certifies the value by exhaustiveness.
pub fn hadwiger_number(g: &Graph) -> Result<HadwigerResult> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter {
            reason: "Hadwiger number needs at least one vertex".into(),
        });
    }
    check_cap(g)?;
    let clique = max_clique_mask(g.adj_slice(), g.full_mask());
    let mut k = (clique.count_ones() as usize).max(1);
    let mut witness = has_clique_minor(g, k)?.expect("a clique of size k is a K_k model");
    while k < g.vertex_count() {
        match has_clique_minor(g, k + 1)? {
            Some(better) => {
                witness = better;
                k += 1;
            }
            None => break,
        }
    }
    Ok(HadwigerResult { h: k, witness })
}

/// Outcome of checking that a clique-sum does not raise the Hadwiger number
/// beyond its factors.
#[derive(Clone, Debug)]
pub struct CliqueSumCheck {
    pub holds: bool,
    pub h_sum: usize,
    pub h_left: usize,
    pub h_right: usize,
}

/// Glues `g1` and `g2` along the given triangles and compares `h` of the sum
/// with `max(h(g1), h(g2))`.
pub fn clique_sum_hadwiger_check(
    g1: &Graph,
    g2: &Graph,
    gluing: &TriangleGluing,
) -> Result<CliqueSumCheck> {
    let glued = clique_sum(g1, g2, gluing)?;
    let h_left = hadwiger_number(g1)?.h;
    let h_right = hadwiger_number(g2)?.h;
    let h_sum = hadwiger_number(&glued)?.h;
    Ok(CliqueSumCheck {
        holds: h_sum == h_left.max(h_right),
        h_sum,
        h_left,
        h_right,
    })
}
