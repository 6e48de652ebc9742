mod common;

use common::*;
use proptest::prelude::*;
use simdim::metric::{bfs, UNREACHABLE};
use simdim::products::*;
use simdim::resolving::{is_generator, min_generator};
use simdim::{Graph, GraphFamily, MetricSelector};

#[test]
fn corona_of_path_and_triangle() {
    let p = corona(&Graph::path(4).unwrap(), &Graph::cycle(3).unwrap()).unwrap();
    assert_eq!(p.graph.order(), 16);
    assert_eq!(p.graph.edge_count(), 3 + 4 * (3 + 3));
    for i in 0..4 {
        let deg_g = if i == 0 || i == 3 { 1 } else { 2 };
        assert_eq!(p.graph.degree(i), deg_g + 3);
    }
    assert_eq!(p.layout.locate(4), CoronaVertex::Copy(0, 0));
    assert_eq!(p.layout.locate(15), CoronaVertex::Copy(3, 2));
    assert_eq!(p.layout.locate(2), CoronaVertex::Root(2));
}

#[test]
fn join_of_two_isolated_vertices() {
    let j = join(&Graph::empty(1).unwrap(), &Graph::empty(1).unwrap()).unwrap();
    assert_eq!(j.order(), 2);
    assert!(j.has_edge(0, 1));
}

#[test]
fn names() {
    let g = Graph::path(2).unwrap().with_name("A");
    let h = Graph::path(2).unwrap().with_name("B");
    assert_eq!(corona(&g, &h).unwrap().graph.name(), "A⊙B");
    assert_eq!(corona_named(&g, &h, Naming::Ascii).unwrap().graph.name(), "A_odot_B");
    assert_eq!(join_named(&g, &h, Naming::Ascii).unwrap().name(), "A_plus_B");
}

#[test]
fn order_limit() {
    assert!(corona(&Graph::path(8).unwrap(), &Graph::path(8).unwrap()).is_err());
    assert!(corona(&Graph::path(8).unwrap(), &Graph::path(7).unwrap()).is_ok());
}

#[test]
fn family_products_pair_every_member() {
    let gs = GraphFamily::new(vec![Graph::path(3).unwrap(), Graph::cycle(3).unwrap()]).unwrap();
    let hs =
        GraphFamily::new(vec![Graph::path(2).unwrap(), Graph::empty(2).unwrap(), Graph::complete(2).unwrap()]).unwrap();
    let (fam, layout) = family_corona(&gs, &hs).unwrap();
    assert_eq!(fam.len(), 6);
    assert_eq!(fam.order(), layout.order());
    assert_eq!(family_join(&gs, &hs).unwrap().len(), 6);
}

#[test]
fn lifted_basis_generates_the_corona() {
    let h = GraphFamily::singleton(Graph::cycle(5).unwrap());
    let (_, w) = min_generator(&h, MetricSelector::ADJACENCY).unwrap();
    let g = GraphFamily::singleton(Graph::path(3).unwrap());
    let (fam, layout) = family_corona(&g, &h).unwrap();
    assert!(is_generator(&fam, MetricSelector::Full, &layout.lift(&w)).unwrap());
    assert_eq!(layout.project(1, &layout.lift(&w)), w);
    assert!(layout.project_roots(&layout.lift(&w)).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn corona_structure(seed in any::<u64>(), n in 1usize..=5, nh in 1usize..=5) {
        let mut r = rng(seed);
        let g = Graph::random_connected_with(n, 0.5, &mut r).unwrap();
        let h = Graph::random_with(nh, 0.5, &mut r).unwrap();
        let p = corona(&g, &h).unwrap();
        let l = p.layout;
        prop_assert_eq!(p.graph.order(), n * (1 + nh));
        prop_assert_eq!(p.graph.edge_count(), g.edge_count() + n * (h.edge_count() + nh));
        for i in 0..n {
            prop_assert_eq!(p.graph.degree(l.root(i)), g.degree(i) + nh);
            let dg = bfs(&g, i);
            let dp = bfs(&p.graph, l.copy(i, 0));
            for j in 0..n {
                for a in 0..nh {
                    let expect = if i == j {
                        if h.has_edge(0, a) || a == 0 { u32::from(a != 0) } else { 2 }
                    } else {
                        dg[j] + 2
                    };
                    prop_assert_eq!(dp[l.copy(j, a)], expect);
                }
            }
        }
    }

    #[test]
    fn join_structure(seed in any::<u64>(), n in 1usize..=6, nh in 1usize..=6) {
        let mut r = rng(seed);
        let g = Graph::random_with(n, 0.4, &mut r).unwrap();
        let h = Graph::random_with(nh, 0.4, &mut r).unwrap();
        let j = join(&g, &h).unwrap();
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + n * nh);
        for u in 0..n + nh {
            let d = bfs(&j, u);
            prop_assert!(d.iter().all(|&x| x != UNREACHABLE && x <= 2));
        }
        let back = j.induced((1 << n) - 1);
        prop_assert_eq!(back.rows(), g.rows());
    }
}
