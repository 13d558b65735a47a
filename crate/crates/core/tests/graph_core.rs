mod common;

use nkd_core::census::connected_graphs_up_to;
use nkd_core::graph::families::{self, FamilyError};
use nkd_core::graph::io::{read_edge_list, read_graph6, write_edge_list, write_graph6, DecodeError};
use nkd_core::structure::{components, is_factor_critical};
use nkd_core::{Graph, GraphError, VertexSet};
use proptest::prelude::*;

#[test]
fn build_examples() {
    let k4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
    assert_eq!(k4.edge_count(), 6);
    assert_eq!(k4, Graph::complete(4));
    assert_eq!(Graph::new(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
    assert!(matches!(Graph::new(2, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(..))));
    let err = Graph::new(3, [(0, 5)]).unwrap_err();
    assert!(err.to_string().contains("(0, 5)"));
}

#[test]
fn vertex_deletion_examples() {
    let (k3, map) = Graph::complete(4).delete_vertices(&VertexSet::new(4, [0]).unwrap()).unwrap();
    assert_eq!(k3, Graph::complete(3));
    assert_eq!(map, vec![1, 2, 3]);
    let (c5, _) = Graph::cycle(5).delete_vertices(&VertexSet::empty()).unwrap();
    assert_eq!(c5, Graph::cycle(5));
    let side = VertexSet::new(6, [0, 1, 2]).unwrap();
    let (rest, map) = Graph::complete_bipartite(3, 3).delete_vertices(&side).unwrap();
    assert_eq!(rest, Graph::empty(3));
    assert_eq!(map, vec![3, 4, 5]);
}

#[test]
fn edge_and_cone_examples() {
    assert_eq!(Graph::complete(3).cone(), Graph::complete(4));
    assert_eq!(Graph::complete(2).delete_edge(0, 1).unwrap(), Graph::empty(2));
    let chord = Graph::cycle(4).add_edge(0, 2).unwrap();
    assert_eq!(chord.edge_count(), 5);
    assert!(chord.has_edge(2, 0));
    assert_eq!(Graph::cycle(4).add_edge(0, 1), Err(GraphError::EdgePresent(0, 1)));
    assert_eq!(Graph::cycle(4).delete_edge(0, 2), Err(GraphError::EdgeAbsent(0, 2)));
}

#[test]
fn family_sizes() {
    let b = families::blowup_bipartite(1, 1).unwrap();
    assert_eq!((b.graph.order(), b.graph.edge_count()), (12, 36));
    assert_eq!(b.distinguished_vertices, vec![0, 1, 2]);
    assert_eq!(families::blowup_bipartite(2, 1).unwrap().graph.order(), 15);
    assert_eq!(families::blowup_bipartite(1, 2).unwrap().graph.order(), 18);
    assert!(matches!(families::blowup_bipartite(0, 1), Err(FamilyError::TooSmall { .. })));
    assert!(families::blowup_bipartite(1, 0).is_err());

    let h = families::cliques_plus_edge(2, 1).unwrap();
    assert_eq!((h.graph.order(), h.graph.edge_count()), (8, 7));
    assert_eq!(h.distinguished_edge, Some((6, 7)));
    assert_eq!(families::cliques_plus_edge(1, 1).unwrap().graph.order(), 5);
    assert_eq!(families::cliques_plus_edge(2, 2).unwrap().graph.order(), 12);

    let c = families::cliques_plus_edge_cone(2, 1).unwrap();
    assert_eq!((c.graph.order(), c.graph.edge_count()), (9, 15));
    assert_eq!(c.graph.degree(8), 8);
    assert_eq!(families::cliques_plus_edge_cone(1, 1).unwrap().graph.order(), 6);

    let g = families::gadget_chain(2).unwrap();
    assert_eq!((g.graph.order(), g.graph.edge_count()), (12, 23));
    assert_eq!(families::gadget_chain(1).unwrap().graph.order(), 7);
    assert!(families::gadget_chain(0).is_err());
}

#[test]
fn gadget_chain_endpoint_degree() {
    for copies in 1..=4 {
        let fam = families::gadget_chain(copies).unwrap();
        let (u, v) = fam.distinguished_edge.unwrap();
        assert_eq!(fam.graph.degree(u), 2 * copies + 1);
        assert_eq!(fam.graph.degree(v), 2 * copies + 1);
    }
}

#[test]
fn cliques_plus_edge_structure() {
    for d in 1..=3 {
        for m in 1..=2 {
            let fam = families::cliques_plus_edge(d, m).unwrap();
            let mut profile = components(&fam.graph);
            profile.fill_factor_critical(&fam.graph);
            assert_eq!(profile.odd_count(), d);
            let even: Vec<_> = profile.components.iter().filter(|c| !c.odd).collect();
            assert_eq!(even.len(), 1);
            let (u, v) = fam.distinguished_edge.unwrap();
            assert_eq!(even[0].vertices.members(), &[u, v]);
            for c in profile.components.iter().filter(|c| c.odd) {
                assert_eq!(c.factor_critical, Some(true));
                assert!(is_factor_critical(&fam.graph.induced(&c.vertices).unwrap()));
            }
        }
    }
}

#[test]
fn io_examples() {
    let star = read_graph6("D?{").unwrap();
    assert_eq!(star.order(), 5);
    assert_eq!(star.degree(4), 4);
    assert_eq!(write_graph6(&star).unwrap(), "D?{");
    assert_eq!(read_edge_list("2 1\n0 1\n").unwrap(), Graph::complete(2));
    let err = read_graph6("D?").unwrap_err();
    assert!(matches!(err, DecodeError::Truncated { .. }));
    assert!(err.to_string().contains("byte offset"));
}

#[test]
fn census_round_trip() {
    for g in connected_graphs_up_to(6) {
        assert_eq!(read_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
        assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}

proptest! {
    #[test]
    fn cone_counts(g in common::arb_graph(0, 12)) {
        let c = g.cone();
        prop_assert_eq!(c.order(), g.order() + 1);
        prop_assert_eq!(c.edge_count(), g.edge_count() + g.order());
        prop_assert_eq!(c.degree(g.order()), g.order());
    }

    #[test]
    fn io_round_trip(g in common::arb_graph(0, 20)) {
        let g6 = write_graph6(&g).unwrap();
        let back = read_graph6(&g6).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back).unwrap(), g6);
        let el = write_edge_list(&g);
        prop_assert_eq!(read_edge_list(&el).unwrap(), g);
    }

    #[test]
    fn deletion_relabels_consistently(g in common::arb_graph(1, 10), mask in any::<u16>()) {
        let set = VertexSet::from_mask(u64::from(mask) & ((1u64 << g.order()) - 1));
        let (rest, map) = g.delete_vertices(&set).unwrap();
        prop_assert_eq!(rest.order(), g.order() - set.len());
        for (i, &old) in map.iter().enumerate() {
            prop_assert!(!set.contains(old));
            for (j, &old2) in map.iter().enumerate() {
                if i != j {
                    prop_assert_eq!(rest.has_edge(i, j), g.has_edge(old, old2));
                }
            }
        }
    }

    #[test]
    fn edge_toggle_round_trip(g in common::arb_graph(2, 9), a in 0usize..9, b in 0usize..9) {
        let (u, v) = (a % g.order(), b % g.order());
        prop_assume!(u != v);
        if g.has_edge(u, v) {
            let h = g.delete_edge(u, v).unwrap();
            prop_assert_eq!(h.edge_count() + 1, g.edge_count());
            prop_assert_eq!(h.add_edge(u, v).unwrap(), g);
        } else {
            let h = g.add_edge(u, v).unwrap();
            prop_assert_eq!(h.delete_edge(v, u).unwrap(), g);
        }
    }
}
