use k3w_core::fermat::{line_graph, surface_lines};
use k3w_core::golay::build_golay;
use k3w_core::graph::{canonical_label, invariants, isomorphism, verify_isomorphism, IsoResult, SimpleGraph};
use k3w_core::kummer::{build_structure, curve_graph};
use k3w_core::leech::{minimal_shell, orthogonal_roots, root_incidence};
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn graphs() -> Vec<(&'static str, SimpleGraph)> {
    let lines = surface_lines().unwrap().lines;
    let fermat = SimpleGraph::from_adjacency(&line_graph(&lines)).unwrap();
    let code = build_golay().unwrap();
    let roots = orthogonal_roots(&minimal_shell(&code).unwrap()).unwrap();
    let inc = root_incidence(&roots).unwrap();
    let leech = SimpleGraph::new(roots.len(), inc.edges()).unwrap();
    let s = build_structure().unwrap();
    let kummer = SimpleGraph::from_adjacency(&curve_graph(&s).unwrap().adjacency).unwrap();
    vec![("fermat", fermat), ("leech", leech), ("kummer", kummer)]
}

#[test]
fn three_graphs_are_pairwise_isomorphic() {
    let gs = graphs();
    let t = std::time::Instant::now();
    let forms: Vec<_> = gs.iter().map(|(_, g)| canonical_label(g)).collect();
    eprintln!("canonical forms in {:?}; leaves {:?}", t.elapsed(), forms.iter().map(|f| f.leaves_visited).collect::<Vec<_>>());
    for (name, g) in &gs {
        assert_eq!(g.vertex_count(), 112, "{name}");
        assert_eq!(g.edges().len(), 1680, "{name}");
    }
    assert_eq!(invariants(&gs[0].1), invariants(&gs[1].1));
    assert_eq!(forms[0].edges, forms[1].edges);
    assert_eq!(forms[0].edges, forms[2].edges);
    for i in 1..3 {
        match isomorphism(&gs[0].1, &gs[i].1).unwrap() {
            IsoResult::Isomorphic { map } => assert!(verify_isomorphism(&gs[0].1, &gs[i].1, &map)),
            r => panic!("{r:?}"),
        }
    }
}

#[test]
fn canonical_form_survives_relabeling() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for (name, g) in graphs() {
        let base = canonical_label(&g).edges;
        for _ in 0..100 {
            let mut p: Vec<usize> = (0..112).collect();
            p.shuffle(&mut rng);
            assert_eq!(canonical_label(&g.permuted(&p).unwrap()).edges, base, "{name}");
        }
    }
}

#[test]
fn one_edge_swap_breaks_isomorphism() {
    let gs = graphs();
    let g = &gs[0].1;
    let mut e = g.edges().to_vec();
    let (u, v) = e.remove(0);
    let w = (0..112).find(|&w| w != u && w != v && !g.has_edge(u, w)).unwrap();
    e.push((u, w));
    let h = SimpleGraph::new(112, e).unwrap();
    assert!(matches!(isomorphism(g, &h).unwrap(), IsoResult::NotIsomorphic { .. }));
}
