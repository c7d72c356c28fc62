//! Structural invariants: product edge counts, commutativity, witness
//! validity, and invariance of the lid property under color permutation.

use lidcolor::{
    cartesian_product, chi_lid_exact, lid_report, tensor_product, Bipartiteness, Coloring, Graph,
};
use proptest::prelude::*;

/// Arbitrary simple graph on 1..=max_n vertices with independent edges.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(proptest::bool::ANY, len).prop_map(move |mask| {
            let mut g = Graph::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask[i] {
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

proptest! {
    // |E(G □ H)| = |V(G)||E(H)| + |V(H)||E(G)|
    #[test]
    fn cartesian_edge_count(g in arb_graph(6), h in arb_graph(6)) {
        let (prod, _) = cartesian_product(&g, &h);
        prop_assert_eq!(
            prod.num_edges(),
            g.num_vertices() * h.num_edges() + h.num_vertices() * g.num_edges()
        );
    }

    // |E(G × H)| = 2|E(G)||E(H)|
    #[test]
    fn tensor_edge_count(g in arb_graph(6), h in arb_graph(6)) {
        let (prod, _) = tensor_product(&g, &h);
        prop_assert_eq!(prod.num_edges(), 2 * g.num_edges() * h.num_edges());
    }

    // Swapping the factors transposes the labeling but preserves adjacency.
    #[test]
    fn products_commute_up_to_transposition(g in arb_graph(5), h in arb_graph(5)) {
        for build in [cartesian_product, tensor_product] {
            let (gh, lab_gh) = build(&g, &h);
            let (hg, lab_hg) = build(&h, &g);
            prop_assert_eq!(gh.num_edges(), hg.num_edges());
            for (x, y) in gh.edges() {
                let (ux, vx) = lab_gh.pair(x);
                let (uy, vy) = lab_gh.pair(y);
                prop_assert!(hg.has_edge(lab_hg.flat(vx, ux), lab_hg.flat(vy, uy)));
            }
        }
    }

    // Whichever way bipartiteness is decided, the returned witness checks out.
    #[test]
    fn bipartiteness_witness_is_valid(g in arb_graph(8)) {
        match g.is_bipartite() {
            Bipartiteness::Bipartite(sides) => {
                prop_assert_eq!(sides.len(), g.num_vertices());
                for (u, v) in g.edges() {
                    prop_assert!(sides[u] <= 1 && sides[v] <= 1);
                    prop_assert_ne!(sides[u], sides[v]);
                }
            }
            Bipartiteness::OddClosedWalk(walk) => {
                prop_assert!(walk.len() >= 4);
                prop_assert_eq!(walk.first(), walk.last());
                // k+1 entries traverse k edges; k must be odd.
                prop_assert_eq!(walk.len() % 2, 0);
                for w in walk.windows(2) {
                    prop_assert!(g.has_edge(w[0], w[1]));
                }
            }
        }
    }

    // A tensor product is connected exactly when both factors are connected
    // and at least one contains an odd cycle.
    #[test]
    fn tensor_connectivity(g in arb_graph(6), h in arb_graph(6)) {
        prop_assume!(g.is_connected() && h.is_connected());
        prop_assume!(g.num_edges() >= 1 && h.num_edges() >= 1);
        let (prod, _) = tensor_product(&g, &h);
        let expected = !g.is_bipartite().is_bipartite() || !h.is_bipartite().is_bipartite();
        prop_assert_eq!(prod.is_connected(), expected);
    }

    // Either bipartite factor makes the tensor product bipartite.
    #[test]
    fn tensor_inherits_bipartiteness(g in arb_graph(6), h in arb_graph(6)) {
        prop_assume!(g.is_bipartite().is_bipartite() || h.is_bipartite().is_bipartite());
        let (prod, _) = tensor_product(&g, &h);
        prop_assert!(prod.is_bipartite().is_bipartite());
    }

    // Being locally identifying depends only on the color classes, not on
    // which labels they carry: any relabeling preserves the full report.
    #[test]
    fn lid_survives_color_permutation(g in arb_graph(7), salt in proptest::collection::vec(0usize..64, 8)) {
        let solved = chi_lid_exact(&g).unwrap();
        let m = solved.value as usize;
        let mut perm: Vec<u32> = (1..=m as u32).collect();
        for i in (1..m).rev() {
            perm.swap(i, salt[i % salt.len()] % (i + 1));
        }
        let relabeled = Coloring::from_fn(g.num_vertices(), |v| {
            perm[(solved.certificate.color(v) - 1) as usize]
        });
        let before = lid_report(&g, &solved.certificate).unwrap();
        let after = lid_report(&g, &relabeled).unwrap();
        prop_assert!(after.is_lid());
        prop_assert_eq!(after.colors_used, before.colors_used);
        prop_assert_eq!(after.twin_edges, before.twin_edges);
    }
}

/// The one-vertex graph is the unit of the Cartesian product and annihilates
/// all edges in the tensor product.
#[test]
fn one_vertex_factor() {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
    let unit = Graph::new(1);
    let (cart, _) = cartesian_product(&g, &unit);
    assert_eq!(cart.edges(), g.edges());
    let (tens, _) = tensor_product(&g, &unit);
    assert_eq!(tens.num_edges(), 0);
}
