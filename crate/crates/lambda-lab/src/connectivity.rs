//! Connectivity predicates, including the deletion-based 3-connectivity test:
//! a graph is 3-connected when removing any vertex set of size at most two
//! leaves it connected. The empty graph counts as connected, which keeps the
//! cycle bookkeeping for the smallest complete graphs consistent.

use crate::graph::{BitIter, Graph, VertexId};

/// A vertex set of size at most two whose deletion disconnects the graph.
/// An empty witness means the graph was disconnected to begin with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutWitness {
    pub vertices: Vec<VertexId>,
}

/// Vertices reachable from `start` inside `allowed`, as a bitset.
pub(crate) fn reachable(adj: &[u64], allowed: u64, start: usize) -> u64 {
    debug_assert_ne!(allowed >> start & 1, 0);
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in BitIter(frontier) {
            next |= adj[v];
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Whether the vertices of `mask` induce a connected subgraph. The empty
/// mask counts as connected.
pub(crate) fn mask_connected(adj: &[u64], mask: u64) -> bool {
    mask == 0 || reachable(adj, mask, mask.trailing_zeros() as usize) == mask
}

pub fn is_connected(g: &Graph) -> bool {
    mask_connected(g.adj_slice(), g.full_mask())
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut left = g.full_mask();
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let comp = reachable(g.adj_slice(), left, start);
        out.push(BitIter(comp).map(VertexId::new).collect());
        left &= !comp;
    }
    out
}

/// Searches for a smallest vertex set of size at most two whose deletion
/// disconnects `g`. `None` means `g` is 3-connected.
pub fn three_connectivity_witness(g: &Graph) -> Option<CutWitness> {
    let adj = g.adj_slice();
    let full = g.full_mask();
    if !mask_connected(adj, full) {
        return Some(CutWitness { vertices: vec![] });
    }
    let n = g.vertex_count();
    for v in 0..n {
        if !mask_connected(adj, full & !(1 << v)) {
            return Some(CutWitness { vertices: vec![VertexId::new(v)] });
        }
    }
    for v in 0..n {
        for w in v + 1..n {
            if !mask_connected(adj, full & !(1 << v) & !(1 << w)) {
                return Some(CutWitness {
                    vertices: vec![VertexId::new(v), VertexId::new(w)],
                });
            }
        }
    }
    None
}

pub fn is_three_connected(g: &Graph) -> bool {
    three_connectivity_witness(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn connectivity_basics() {
        assert!(is_connected(&Graph::empty(0).unwrap()));
        assert!(is_connected(&Graph::empty(1).unwrap()));
        assert!(!is_connected(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap()));
        assert!(is_connected(&Graph::complete(5).unwrap()));
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let comps = components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], vec![VertexId::new(0), VertexId::new(1), VertexId::new(2)]);
        assert_eq!(comps[1], vec![VertexId::new(3), VertexId::new(4)]);
    }

    #[test]
    fn components_of_connected_graph() {
        let g = Graph::complete(4).unwrap();
        assert_eq!(components(&g), vec![g.vertices().collect::<Vec<_>>()]);
    }

    #[test]
    fn k5_minus_e_loses_its_triangle() {
        // missing edge 3-4; deleting the common triangle isolates 3 and 4
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                if (u, v) != (3, 4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(5, &edges).unwrap();
        let h = g
            .delete_vertices(&[VertexId::new(0), VertexId::new(1), VertexId::new(2)])
            .unwrap();
        let comps = components(&h);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn small_complete_graphs_are_three_connected() {
        for n in 1..=4 {
            assert!(is_three_connected(&Graph::complete(n).unwrap()), "K_{n}");
        }
    }

    #[test]
    fn cycle_c5_has_a_nonadjacent_cut_pair() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let w = three_connectivity_witness(&g).unwrap();
        assert_eq!(w.vertices.len(), 2);
        assert!(!g.has_edge(w.vertices[0], w.vertices[1]));
        // deterministic: first pair in lexicographic order
        assert_eq!(w.vertices, vec![VertexId::new(0), VertexId::new(2)]);
    }

    #[test]
    fn prism_is_three_connected() {
        let g = Graph::new(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(is_three_connected(&g));
    }

    #[test]
    fn disconnected_graph_has_empty_witness() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(three_connectivity_witness(&g).unwrap().vertices, vec![]);
    }

    #[test]
    fn cut_vertex_is_found_first() {
        // two triangles sharing vertex 2
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let w = three_connectivity_witness(&g).unwrap();
        assert_eq!(w.vertices, vec![VertexId::new(2)]);
    }
}
