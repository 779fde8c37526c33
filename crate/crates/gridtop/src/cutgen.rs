//! Generators for cut complexes and total cut complexes of a graph.
//!
//! For a graph G on vertex set V and an integer k:
//!
//! - the **total cut complex** has one facet `V ∖ S` for every independent
//!   set S of size k;
//! - the **cut complex** has one facet `V ∖ S` for every size-k subset S
//!   whose induced subgraph is disconnected.
//!
//! Both live on the universe V with the graph's labels. When no qualifying
//! set S exists the result is the void complex. Membership tests avoid
//! materializing the complex, and the link of a face in either complex is
//! again a complex of the same kind on a smaller graph — that reduction is
//! exposed as [`cut_link`].

use crate::bits;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The total cut complex of `g` for parameter `k`.
///
/// `k = 0` is allowed: the empty set is independent, so the result is the
/// full simplex on V (for the empty graph, the `{∅}` complex). `k = 1` gives
/// the boundary of the simplex whenever the graph has a vertex.
///
/// # Errors
/// Capacity error if `k` exceeds 64 (never for real graphs).
pub fn total_cut_complex(g: &Graph, k: usize) -> Result<SimplicialComplex> {
    let facets = g
        .enumerate_independent_sets(k)
        .into_iter()
        .map(|s| g.vertex_set() & !s)
        .collect();
    SimplicialComplex::from_facets(g.labels().to_vec(), facets)
}

/// The cut complex of `g` for parameter `k`.
///
/// # Errors
/// Rejects `k < 2`: disconnectedness of smaller sets is not meaningful.
pub fn cut_complex(g: &Graph, k: usize) -> Result<SimplicialComplex> {
    if k < 2 {
        return Err(Error::domain(format!(
            "cut complexes require k >= 2, got {k}"
        )));
    }
    let facets = g
        .enumerate_disconnected_sets(k)
        .into_iter()
        .map(|s| g.vertex_set() & !s)
        .collect();
    SimplicialComplex::from_facets(g.labels().to_vec(), facets)
}

/// Is `face` a face of the total cut complex of `g` without building it?
///
/// Holds exactly when the complement of `face` contains an independent set
/// of size `k`.
pub fn is_total_cut_face(g: &Graph, k: usize, face: u64) -> Result<bool> {
    check_subset(g, face)?;
    let rest = g.vertex_set() & !face;
    Ok(any_k_subset(g, rest, k, &|g, s| g.is_independent(s)))
}

/// Is `face` a face of the cut complex of `g` without building it?
pub fn is_cut_face(g: &Graph, k: usize, face: u64) -> Result<bool> {
    if k < 2 {
        return Err(Error::domain(format!(
            "cut complexes require k >= 2, got {k}"
        )));
    }
    check_subset(g, face)?;
    let rest = g.vertex_set() & !face;
    Ok(any_k_subset(g, rest, k, &|g, s| {
        !g.is_connected_subset(s).expect("nonempty candidate")
    }))
}

/// Link of a vertex set inside the total cut or cut complex, computed by the
/// graph-level reduction: if `w` is a face, the link equals the same kind of
/// complex of `g ∖ w` (embedded back into V); if not, the link is void.
///
/// The resulting complex keeps the full universe V so it can be compared
/// directly with [`SimplicialComplex::link`].
pub fn cut_link(g: &Graph, k: usize, w: u64, total: bool) -> Result<SimplicialComplex> {
    let is_face = if total {
        is_total_cut_face(g, k, w)?
    } else {
        is_cut_face(g, k, w)?
    };
    if !is_face {
        return SimplicialComplex::void(g.labels().to_vec());
    }
    let h = g.induced_subgraph(g.vertex_set() & !w)?;
    let small = if total {
        total_cut_complex(&h, k)?
    } else {
        cut_complex(&h, k)?
    };
    small.embed_into(g.labels())
}

fn check_subset(g: &Graph, face: u64) -> Result<()> {
    if face & !g.vertex_set() != 0 {
        let v = bits::max(face & !g.vertex_set());
        return Err(Error::VertexOutOfRange(v, g.n()));
    }
    Ok(())
}

/// Does `pool` contain a size-`k` subset satisfying `pred`?
fn any_k_subset(g: &Graph, pool: u64, k: usize, pred: &dyn Fn(&Graph, u64) -> bool) -> bool {
    fn rec(
        g: &Graph,
        verts: &[usize],
        k: usize,
        start: usize,
        acc: u64,
        pred: &dyn Fn(&Graph, u64) -> bool,
    ) -> bool {
        if k == 0 {
            return pred(g, acc);
        }
        if start + k > verts.len() {
            return false;
        }
        for i in start..=verts.len() - k {
            if rec(g, verts, k - 1, i + 1, acc | bits::bit(verts[i]), pred) {
                return true;
            }
        }
        false
    }
    let verts = bits::to_vec(pool);
    if k > verts.len() {
        return false;
    }
    rec(g, &verts, k, 0, 0, pred)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{graph_g1, graph_g2, mask1};
    use crate::graph::{make_family, make_grid, GridFamily};
    use proptest::prelude::*;

    #[test]
    fn total_cut_complex_of_g1() {
        let g = graph_g1();
        let k = total_cut_complex(&g, 3).unwrap();
        let expect = SimplicialComplex::from_labeled_facets(
            g.labels().to_vec(),
            &[
                &["1", "4", "6"],
                &["2", "3", "6"],
                &["2", "4", "5"],
                &["2", "4", "6"],
            ],
        )
        .unwrap();
        assert!(k.equals(&expect));
    }

    #[test]
    fn cut_complex_of_g2_is_pentagon() {
        let g = graph_g2();
        let k = cut_complex(&g, 3).unwrap();
        let expect = SimplicialComplex::from_labeled_facets(
            g.labels().to_vec(),
            &[
                &["1", "2"],
                &["2", "3"],
                &["3", "4"],
                &["4", "5"],
                &["1", "5"],
            ],
        )
        .unwrap();
        assert!(k.equals(&expect));
        assert!(cut_complex(&g, 1).is_err());
    }

    #[test]
    fn degenerate_parameters() {
        let g = graph_g1();
        // k = 0: the unique empty independent set leaves the full simplex.
        let k0 = total_cut_complex(&g, 0).unwrap();
        assert_eq!(k0.facets(), &[g.vertex_set()]);
        // k = 1: boundary of the simplex.
        let k1 = total_cut_complex(&g, 1).unwrap();
        assert_eq!(k1.facet_count(), 6);
        assert!(k1.is_pure());
        assert_eq!(k1.dimension().unwrap(), 4);
        // Single vertex, k = 1: only the empty face remains.
        let one = Graph::numbered(1).unwrap();
        let k = total_cut_complex(&one, 1).unwrap();
        assert_eq!(k.facets(), &[0]);
        // k beyond the independence number: void.
        assert!(total_cut_complex(&g, 6).unwrap().is_void());
    }

    #[test]
    fn total_and_plain_cut_agree_at_two() {
        // Complement of a 2-set is a facet in both complexes exactly when the
        // pair is a non-edge.
        for (rows, cols) in [(2, 3), (2, 4), (3, 3)] {
            let g = make_grid(rows, cols).unwrap();
            let a = total_cut_complex(&g, 2).unwrap();
            let b = cut_complex(&g, 2).unwrap();
            assert!(a.equals(&b));
        }
    }

    #[test]
    fn membership_without_materializing() {
        let g = graph_g1();
        assert!(is_total_cut_face(&g, 3, mask1(&[2, 4])).unwrap());
        assert!(!is_total_cut_face(&g, 3, g.vertex_set()).unwrap());
        let k = total_cut_complex(&g, 3).unwrap();
        for f in 0..1u64 << 6 {
            assert_eq!(is_total_cut_face(&g, 3, f).unwrap(), k.is_face(f));
        }
        let g2 = graph_g2();
        let c = cut_complex(&g2, 3).unwrap();
        for f in 0..1u64 << 5 {
            assert_eq!(is_cut_face(&g2, 3, f).unwrap(), c.is_face(f));
        }
    }

    #[test]
    fn grid_2x3_total_cut_facets() {
        let g = make_grid(2, 3).unwrap();
        let k = total_cut_complex(&g, 3).unwrap();
        let expect = SimplicialComplex::from_labeled_facets(
            g.labels().to_vec(),
            &[&["b1", "a2", "b3"], &["a1", "b2", "a3"]],
        )
        .unwrap();
        assert!(k.equals(&expect));
    }

    #[test]
    fn cut_link_matches_complex_link() {
        let g = make_grid(2, 4).unwrap();
        let k = total_cut_complex(&g, 3).unwrap();
        let w = k.mask_from_labels(&["a1", "b2"]).unwrap();
        assert!(k.is_face(w));
        let via_graph = cut_link(&g, 3, w, true).unwrap();
        let via_complex = k.link(w).unwrap();
        assert!(via_graph.equals(&via_complex));
        // A non-face yields the void complex rather than an error.
        let nonface = g.vertex_set();
        assert!(cut_link(&g, 3, nonface, true).unwrap().is_void());
    }

    #[test]
    fn family_base_case_identity() {
        // The 3×2 grid is the 2×3 grid transposed, so their complexes agree
        // after matching labels by position.
        let a = total_cut_complex(&make_grid(3, 2).unwrap(), 3).unwrap();
        let b = total_cut_complex(&make_grid(2, 3).unwrap(), 3).unwrap();
        assert_eq!(a.facet_count(), b.facet_count());
        assert_eq!(
            a.face_census()
                .unwrap()
                .iter()
                .map(|&(_, c)| c)
                .collect::<Vec<_>>(),
            b.face_census()
                .unwrap()
                .iter()
                .map(|&(_, c)| c)
                .collect::<Vec<_>>()
        );

        let g32 = make_family(GridFamily::G3xn, 2).unwrap();
        assert_eq!(total_cut_complex(&g32, 3).unwrap().facet_count(), 2);
    }

    proptest! {
        /// Facet complements of the total cut complex are exactly the size-k
        /// independent sets, rebuilt here by brute force.
        #[test]
        fn facets_complement_independent_sets(
            edges in proptest::collection::vec((0usize..7, 0usize..7), 0..12),
            k in 1usize..4,
        ) {
            let mut g = Graph::numbered(7).unwrap();
            for (u, v) in edges {
                if u != v {
                    g.add_edge(u, v).unwrap();
                }
            }
            let kk = total_cut_complex(&g, k).unwrap();
            let mut expect: Vec<u64> = Vec::new();
            for s in 0..1u64 << 7 {
                if s.count_ones() as usize == k && g.is_independent(s) {
                    expect.push(g.vertex_set() & !s);
                }
            }
            expect.sort_unstable();
            // Complements of distinct k-sets are distinct (n − k)-sets, and
            // none contains another, so they are exactly the facets.
            prop_assert_eq!(kk.facets(), &expect[..]);
        }
    }
}
