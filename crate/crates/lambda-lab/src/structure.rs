//! Structural procedures on 3-connected graphs: separating-triangle
//! decomposition into clique-sum factors, the search for an edge whose
//! contraction keeps both 3-connectivity and the Hadwiger number, and the
//! lift that carries every induced nonseparating cycle of a contracted graph
//! back to one of the original graph.

use std::collections::BTreeMap;

use crate::connectivity::{components, is_connected, is_three_connected, mask_connected};
use crate::cycles::{is_nonseparating, nonseparating_induced_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::{BitIter, ContractionMap, EdgeRef, Graph, VertexId};
use crate::minors::{hadwiger_number, HadwigerResult};

/// All triangles of `g` as ordered vertex triples, lexicographically.
pub fn triangles(g: &Graph) -> Vec<[VertexId; 3]> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in BitIter(g.adj_bits(a)).filter(|&b| b > a) {
            let common = g.adj_bits(a) & g.adj_bits(b);
            for c in BitIter(common).filter(|&c| c > b) {
                out.push([VertexId::new(a), VertexId::new(b), VertexId::new(c)]);
            }
        }
    }
    out
}

/// Triangles whose vertex deletion disconnects `g`.
pub fn separating_triangles(g: &Graph) -> Vec<[VertexId; 3]> {
    let full = g.full_mask();
    triangles(g)
        .into_iter()
        .filter(|t| {
            let drop = t.iter().fold(0u64, |m, v| m | 1 << v.index());
            !mask_connected(g.adj_slice(), full & !drop)
        })
        .collect()
}

/// Triangles containing both endpoints of `e`; one per common neighbor.
pub fn triangles_through_edge(g: &Graph, e: EdgeRef) -> Result<Vec<[VertexId; 3]>> {
    let (u, v) = (e.a(), e.b());
    if !g.has_edge(u, v) {
        return Err(Error::EdgeNotPresent { a: u.index(), b: v.index() });
    }
    Ok(BitIter(g.adj_bits(u.index()) & g.adj_bits(v.index()))
        .map(|c| {
            let mut t = [u, v, VertexId::new(c)];
            t.sort();
            t
        })
        .collect())
}

/// One clique-sum factor: a component of `g − T` together with `T` and all
/// edges of `g` into it, densely re-indexed, plus the map back into `g`.
#[derive(Clone, Debug)]
pub struct Factor {
    pub graph: Graph,
    /// Factor vertex index to parent vertex.
    pub vertex_map: Vec<VertexId>,
}

/// Decomposition of a graph at a separating triangle: one factor per
/// component of `g − T`, ordered by each component's smallest vertex.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub triangle: [VertexId; 3],
    pub factors: Vec<Factor>,
}

fn triangle_mask(g: &Graph, t: [VertexId; 3]) -> Result<u64> {
    let [a, b, c] = t;
    let distinct = a != b && b != c && a != c;
    if !distinct || !g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c) {
        return Err(Error::NotATriangle {
            a: a.index(),
            b: b.index(),
            c: c.index(),
        });
    }
    Ok(t.iter().fold(0u64, |m, v| m | 1 << v.index()))
}

pub fn decompose_at_triangle(g: &Graph, t: [VertexId; 3]) -> Result<Decomposition> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let tmask = triangle_mask(g, t)?;
    let rest = g.delete_mask(tmask);
    // rest is indexed over survivors in increasing order; translate back
    let survivors: Vec<usize> = BitIter(g.full_mask() & !tmask).collect();
    let comps = components(&rest);
    if comps.len() < 2 {
        let [a, b, c] = t;
        return Err(Error::TriangleNotSeparating {
            a: a.index(),
            b: b.index(),
            c: c.index(),
        });
    }
    let factors = comps
        .into_iter()
        .map(|comp| {
            let mut keep = tmask;
            for v in comp {
                keep |= 1 << survivors[v.index()];
            }
            let vertex_map: Vec<VertexId> = BitIter(keep).map(VertexId::new).collect();
            let graph = g.delete_mask(g.full_mask() & !keep);
            Factor { graph, vertex_map }
        })
        .collect();
    Ok(Decomposition {
        triangle: t,
        factors,
    })
}

/// A correspondence between a triangle of the left summand and a triangle of
/// the right summand, position by position.
#[derive(Clone, Copy, Debug)]
pub struct TriangleGluing {
    pub left: [VertexId; 3],
    pub right: [VertexId; 3],
}

/// The clique-sum of `g1` and `g2` along the glued triangles. Left vertices
/// keep their indices; unglued right vertices follow in increasing order.
pub fn clique_sum(g1: &Graph, g2: &Graph, gluing: &TriangleGluing) -> Result<Graph> {
    triangle_mask(g1, gluing.left).map_err(|_| Error::InvalidGluing {
        reason: format!(
            "left vertices {:?} do not induce a triangle",
            gluing.left.map(|v| v.index())
        ),
    })?;
    triangle_mask(g2, gluing.right).map_err(|_| Error::InvalidGluing {
        reason: format!(
            "right vertices {:?} do not induce a triangle",
            gluing.right.map(|v| v.index())
        ),
    })?;
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let mut right_map = vec![usize::MAX; n2];
    for (i, v) in gluing.right.iter().enumerate() {
        right_map[v.index()] = gluing.left[i].index();
    }
    let mut next = n1;
    for slot in right_map.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = g1
        .edges()
        .iter()
        .map(|e| (e.a().index(), e.b().index()))
        .collect();
    for e in g2.edges() {
        edges.push((right_map[e.a().index()], right_map[e.b().index()]));
    }
    Graph::new(next, &edges)
}

/// Finds the first edge (in lexicographic order) whose contraction keeps the
/// graph 3-connected with the same Hadwiger number. Returns that edge and
/// the Hadwiger result of `g` itself.
///
/// Exhausting all edges without a hit would falsify the contraction lemma;
/// it is reported as [`Error::NoContractibleEdge`], never swallowed.
pub fn find_contractible_edge(g: &Graph) -> Result<(EdgeRef, HadwigerResult)> {
    if !is_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    if g.is_complete() {
        return Err(Error::GraphIsComplete);
    }
    let h = hadwiger_number(g)?;
    for e in g.edges() {
        let (contracted, _) = g.contract_edge(e)?;
        if is_three_connected(&contracted) && hadwiger_number(&contracted)?.h == h.h {
            return Ok((e, h));
        }
    }
    Err(Error::NoContractibleEdge)
}

/// The lift table mapping every cycle of `C(G/e)` to a cycle of `C(G)`.
#[derive(Clone, Debug)]
pub struct CycleLift {
    edge: EdgeRef,
    merged: VertexId,
    entries: BTreeMap<Cycle, Cycle>,
}

impl CycleLift {
    /// The contracted edge in the source graph.
    pub fn edge(&self) -> EdgeRef {
        self.edge
    }

    /// The merged vertex of the contracted graph.
    pub fn merged(&self) -> VertexId {
        self.merged
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, c: &Cycle) -> Option<&Cycle> {
        self.entries.get(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Cycle, &Cycle)> {
        self.entries.iter()
    }

    /// The image of the lift as a list of cycles of the source graph.
    pub fn image(&self) -> Vec<&Cycle> {
        self.entries.values().collect()
    }
}

/// Pushes a cycle of `g` through a contraction map: vertices are renamed,
/// the merged pair collapses, and the result is canonicalized. `None` when
/// the image degenerates below three vertices or is not a simple cycle
/// (which happens only if the cycle visits both endpoints non-consecutively,
/// impossible for chordless cycles).
pub fn reduce_cycle(c: &Cycle, map: &ContractionMap) -> Option<Cycle> {
    let mut seq: Vec<usize> = c.vertices().iter().map(|v| map.image_of(*v).index()).collect();
    // collapse the merged pair when consecutive (cyclically)
    let len = seq.len();
    let mut collapsed: Vec<usize> = Vec::with_capacity(len);
    for i in 0..len {
        if seq[i] == seq[(i + 1) % len] {
            continue;
        }
        collapsed.push(seq[i]);
    }
    seq = collapsed;
    if seq.len() < 3 {
        return None;
    }
    let mut sorted = seq.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != seq.len() {
        return None;
    }
    Cycle::from_sequence(&seq.iter().map(|&v| VertexId::new(v)).collect::<Vec<_>>()).ok()
}

fn lift_candidate(g: &Graph, seq: &[VertexId]) -> Result<Cycle> {
    let cycle = Cycle::from_sequence(seq)?;
    if !cycle.is_valid_in(g) {
        return Err(Error::LiftValidation {
            reason: format!("candidate {cycle:?} is not an induced cycle of the host"),
        });
    }
    Ok(cycle)
}

/// Builds the lift of `C(G/e)` into `C(G)` for a 3-connected `g`.
///
/// A cycle avoiding the merged vertex lifts to itself. A cycle through the
/// merged vertex becomes a path between two vertices `x, y` once the merged
/// vertex is removed; whichever endpoint of `e` sees both `x` and `y` closes
/// the path, and if neither does, both endpoints are inserted. When both
/// endpoints of `e` see both `x` and `y`, the first choice is repaired to
/// the second if its cycle separates the host.
///
/// Every lifted cycle is verified to be induced and nonseparating, to reduce
/// back to its source, and to avoid every triangle through `e`; failures
/// surface as errors because they would contradict the lifting lemma.
pub fn cycle_lift(g: &Graph, e: EdgeRef) -> Result<CycleLift> {
    if !is_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    let (contracted, map) = g.contract_edge(e)?;
    let merged = map.merged();
    let (u, v) = (e.a(), e.b());
    let targets = nonseparating_induced_cycles(&contracted);
    let mut entries = BTreeMap::new();
    let mut image_masks: Vec<u64> = Vec::with_capacity(targets.len());

    for c in targets.iter() {
        let lifted = if c.vertex_mask() >> merged.index() & 1 == 0 {
            // untouched by the contraction: same vertices, new names
            let seq: Vec<VertexId> = c
                .vertices()
                .iter()
                .map(|w| {
                    let pre = map.preimages(*w);
                    debug_assert_eq!(pre.len(), 1);
                    pre[0]
                })
                .collect();
            let cycle = lift_candidate(g, &seq)?;
            if !is_nonseparating(g, &cycle)? {
                return Err(Error::LiftValidation {
                    reason: format!("untouched cycle {cycle:?} separates the host"),
                });
            }
            cycle
        } else {
            // rotate so the merged vertex is first, then drop it: a path
            let verts = c.vertices();
            let pos = verts.iter().position(|w| *w == merged).expect("merged in cycle");
            let mut path: Vec<VertexId> = Vec::with_capacity(verts.len() - 1);
            for i in 1..verts.len() {
                let w = verts[(pos + i) % verts.len()];
                let pre = map.preimages(w);
                debug_assert_eq!(pre.len(), 1);
                path.push(pre[0]);
            }
            let x = *path.first().expect("path has endpoints");
            let y = *path.last().expect("path has endpoints");
            let u_sees_both = g.has_edge(u, x) && g.has_edge(u, y);
            let v_sees_both = g.has_edge(v, x) && g.has_edge(v, y);
            let close_with = |w: VertexId| -> Vec<VertexId> {
                let mut seq = path.clone();
                seq.push(w);
                seq
            };
            let candidates: Vec<Vec<VertexId>> = if u_sees_both && v_sees_both {
                vec![close_with(u), close_with(v)]
            } else if u_sees_both {
                vec![close_with(u)]
            } else if v_sees_both {
                vec![close_with(v)]
            } else if g.has_edge(u, x) && g.has_edge(v, y) {
                // x .. y, then v, then u closes back to x
                let mut seq = path.clone();
                seq.push(v);
                seq.push(u);
                vec![seq]
            } else if g.has_edge(v, x) && g.has_edge(u, y) {
                let mut seq = path.clone();
                seq.push(u);
                seq.push(v);
                vec![seq]
            } else {
                return Err(Error::LiftValidation {
                    reason: format!(
                        "path endpoints {x}, {y} fail to attach to the contracted edge {e}"
                    ),
                });
            };
            let mut chosen = None;
            for seq in &candidates {
                let cycle = lift_candidate(g, seq)?;
                if is_nonseparating(g, &cycle)? {
                    chosen = Some(cycle);
                    break;
                }
            }
            chosen.ok_or_else(|| Error::LiftValidation {
                reason: format!(
                    "every closure of the path through {x}..{y} separates the host (edge {e})"
                ),
            })?
        };

        let reduced = reduce_cycle(&lifted, &map);
        if reduced.as_ref() != Some(c) {
            return Err(Error::LiftValidation {
                reason: format!("lift of {c:?} does not contract back to its source"),
            });
        }
        image_masks.push(lifted.vertex_mask());
        if entries.insert(c.clone(), lifted).is_some() {
            unreachable!("targets are a set");
        }
    }

    // injectivity, and no lifted cycle is a triangle through e
    let mut seen = std::collections::BTreeSet::new();
    for lifted in entries.values() {
        if !seen.insert(lifted.clone()) {
            return Err(Error::LiftValidation {
                reason: format!("lift collision at {lifted:?}"),
            });
        }
        if lifted.len() == 3 {
            let m = lifted.vertex_mask();
            if m >> u.index() & 1 == 1 && m >> v.index() & 1 == 1 {
                return Err(Error::LiftValidation {
                    reason: format!("lifted triangle {lifted:?} uses the contracted edge"),
                });
            }
        }
    }

    Ok(CycleLift {
        edge: e,
        merged,
        entries,
    })
}
