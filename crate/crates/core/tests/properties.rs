use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tpaths::closure::{c_close, closed_partition, ClosureSystem};
use tpaths::duality::{brute_force_max_packing, mader_bound, mader_min, obstructive_components, t_partitions};
use tpaths::menger::{cut_join, cut_meet, is_orthogonal, lambda, max_disjoint_paths, min_cut_largest, min_cut_smallest, pym_merge};
use tpaths::multigraph::{eulerian_decomposition, random_inner_eulerian, ContractionFamily, EulerPart, SizeBounds};
use tpaths::packing::{pack_by_removal, solve, terminal_lambdas, tight_cut, TightCut};
use tpaths::waves::{is_wave, large_wave, wave_elimination, Wave};
use tpaths::{Cut, EdgeSet, Multigraph, Path, PathSystem, TerminalSet, VertexId, VertexSet};

const SMALL: SizeBounds = SizeBounds {
    max_vertices: 6,
    max_edges: 9,
};

/// Any loopless multigraph with a terminal mask; parity unrestricted.
fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = (Multigraph, TerminalSet)> {
    (2..=max_n)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec((0..n, 1..n), 0..=max_m), any::<u32>()))
        .prop_map(|(n, pairs, mask)| {
            let mut g = Multigraph::new();
            let vs: Vec<VertexId> = (0..n).map(|i| g.add_vertex(&format!("v{i}")).unwrap()).collect();
            for (i, k) in pairs {
                g.push_edge(vs[i], vs[(i + k) % n]).unwrap();
            }
            let t = TerminalSet::new(&g, vs.iter().copied().filter(|v| mask >> v.0 & 1 == 1)).unwrap();
            (g, t)
        })
}

fn arb_eulerian() -> impl Strategy<Value = (Multigraph, TerminalSet)> {
    any::<u64>().prop_map(|seed| random_inner_eulerian(seed, SMALL))
}

fn subset(g: &Multigraph, mask: u32) -> VertexSet {
    g.vertices().filter(|v| mask >> v.0 & 1 == 1).collect()
}

fn all_subsets(vs: &[VertexId]) -> impl Iterator<Item = VertexSet> + '_ {
    (0u32..1 << vs.len()).map(move |m| (0..vs.len()).filter(|i| m >> i & 1 == 1).map(|i| vs[i]).collect())
}

fn random_st_paths(g: &Multigraph, s: VertexId, t: VertexId, rng: &mut ChaCha8Rng) -> PathSystem {
    let mut used = EdgeSet::new();
    let mut paths = Vec::new();
    for _ in 0..g.degree(s) {
        let mut cur = Path::trivial(s);
        let mut stuck = false;
        while cur.last() != t && !stuck {
            let v = cur.last();
            let mut es: Vec<_> = g
                .incident(v)
                .filter(|e| !used.contains(e) && !cur.vertices.contains(&g.other_end(*e, v).unwrap()))
                .collect();
            es.shuffle(rng);
            match es.first() {
                Some(e) => {
                    cur.vertices.push(g.other_end(*e, v).unwrap());
                    cur.edges.push(*e);
                }
                None => stuck = true,
            }
        }
        if !stuck {
            used.extend(cur.edges.iter().copied());
            paths.push(cur);
        }
    }
    PathSystem::new(paths)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn handshake((g, _) in arb_graph(6, 12), mask in any::<u32>()) {
        let x = subset(&g, mask);
        let degrees: usize = x.iter().map(|v| g.degree(*v)).sum();
        let d = g.boundary_degree(&x).unwrap();
        prop_assert_eq!(degrees, 2 * g.inner_edges(&x).len() + d);
        let odd = x.iter().filter(|v| g.degree(**v) % 2 == 1).count();
        prop_assert_eq!(d % 2, odd % 2);
    }

    #[test]
    fn contraction_keeps_boundaries((g, _) in arb_graph(6, 12), part_mask in any::<u32>(), y_mask in any::<u32>()) {
        let part = subset(&g, part_mask | 1);
        let root = *part.first().unwrap();
        let mut family = ContractionFamily::default();
        family.insert(root, part.clone());
        let h = g.contract(&family).unwrap();
        let y = subset(&h, y_mask);
        let mut expanded = y.clone();
        if y.contains(&root) {
            expanded.extend(part.iter().copied());
        }
        prop_assert_eq!(h.boundary(&y).unwrap(), g.boundary(&expanded).unwrap());
    }

    #[test]
    fn euler_parts_partition_edges((g, t) in arb_eulerian()) {
        let parts = eulerian_decomposition(&g, &t).unwrap();
        let mut seen = EdgeSet::new();
        for part in &parts {
            for e in part.edge_set() {
                prop_assert!(seen.insert(e));
            }
            let p = part.path();
            prop_assert!(p.check(&g).is_ok() || matches!(part, EulerPart::Cycle(_)));
            if let EulerPart::TPath(p) = part {
                prop_assert!(p.is_t_path(&g, &t));
            }
        }
        prop_assert_eq!(seen, g.edge_set());
        for x in t.iter().filter(|x| g.degree(*x) == 1) {
            let e = g.incident(x).next().unwrap();
            prop_assert!(parts.iter().any(|p| matches!(p, EulerPart::TPath(_)) && p.edge_set().contains(&e)));
        }
    }

    #[test]
    fn deleting_a_t_path_keeps_parity((g, t) in arb_eulerian()) {
        for p in solve(&g, &t).unwrap().paths.iter() {
            prop_assert!(g.without_edges(&p.edge_set()).is_inner_eulerian(&t).is_ok());
        }
    }

    #[test]
    fn max_flow_equals_min_cut((g, _) in arb_graph(6, 10), a_mask in 1u32..64, b_mask in 1u32..64) {
        let a = subset(&g, a_mask);
        let b: VertexSet = subset(&g, b_mask).difference(&a).copied().collect();
        prop_assume!(!a.is_empty() && !b.is_empty());
        let flow = max_disjoint_paths(&g, &a, &b).unwrap();
        let free: Vec<VertexId> = g.vertices().filter(|v| !a.contains(v) && !b.contains(v)).collect();
        let best = all_subsets(&free)
            .map(|extra| {
                let side: VertexSet = a.union(&extra).copied().collect();
                g.boundary_degree(&side).unwrap()
            })
            .min()
            .unwrap();
        prop_assert_eq!(flow.value(), best);
        prop_assert!(is_orthogonal(&flow.cut.edges, &flow.paths));
        for p in flow.paths.iter() {
            prop_assert_eq!(p.edges.iter().filter(|e| flow.cut.edges.contains(e)).count(), 1);
        }
    }

    #[test]
    fn minimum_cuts_form_a_lattice((g, _) in arb_graph(6, 10)) {
        let vs: Vec<VertexId> = g.vertices().collect();
        let (a, b) = (VertexSet::from([vs[0]]), VertexSet::from([vs[1]]));
        let l = lambda(&g, &a, &b).unwrap();
        let small = min_cut_smallest(&g, &a, &b).unwrap();
        let large = min_cut_largest(&g, &a, &b).unwrap();
        let cuts: Vec<Cut> = all_subsets(&vs[2..])
            .map(|extra| a.union(&extra).copied().collect::<VertexSet>())
            .filter(|side| g.boundary_degree(side).unwrap() == l)
            .map(|side| Cut::of_side(&g, side).unwrap())
            .collect();
        for c in &cuts {
            prop_assert!(small.side.is_subset(&c.side) && c.side.is_subset(&large.side));
            prop_assert_eq!(&cut_meet(&g, &a, &b, c, c).unwrap().side, &c.side);
        }
        for c1 in cuts.iter().take(4) {
            for c2 in cuts.iter().take(4) {
                let m = cut_meet(&g, &a, &b, c1, c2).unwrap();
                let j = cut_join(&g, &a, &b, c1, c2).unwrap();
                prop_assert_eq!(&m.side, &cut_meet(&g, &a, &b, c2, c1).unwrap().side);
                prop_assert_eq!(&j.side, &cut_join(&g, &a, &b, c2, c1).unwrap().side);
                prop_assert_eq!(&cut_meet(&g, &a, &b, c1, &j).unwrap().side, &c1.side);
                prop_assert_eq!(&cut_join(&g, &a, &b, c1, &m).unwrap().side, &c1.side);
                for c3 in cuts.iter().take(3) {
                    let left = cut_meet(&g, &a, &b, &m, c3).unwrap();
                    let right = cut_meet(&g, &a, &b, c1, &cut_meet(&g, &a, &b, c2, c3).unwrap()).unwrap();
                    prop_assert_eq!(left.side, right.side);
                }
            }
        }
    }

    #[test]
    fn pym_merge_containments((g, _) in arb_graph(6, 10), seed in any::<u64>()) {
        let vs: Vec<VertexId> = g.vertices().collect();
        let (s, t) = (vs[0], vs[1]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_st_paths(&g, s, t, &mut rng);
        let q = random_st_paths(&g, s, t, &mut rng);
        let r = pym_merge(&g, s, t, &p, &q).unwrap();
        prop_assert!(r.is_edge_disjoint());
        prop_assert!(r.iter().all(|x| x.check(&g).is_ok() && x.first() == s && x.last() == t));
        prop_assert!(r.delta_at(&g, s).is_superset(&p.delta_at(&g, s)));
        prop_assert!(r.delta_at(&g, t).is_superset(&q.delta_at(&g, t)));
    }

    #[test]
    fn minimum_cuts_admit_waves((g, t) in arb_eulerian()) {
        for s in t.iter() {
            let flow = max_disjoint_paths(&g, &VertexSet::from([s]), &t.others(s)).unwrap();
            if flow.value() == 0 {
                continue;
            }
            let paths = flow
                .paths
                .iter()
                .map(|p| {
                    let i = p.edges.iter().position(|e| flow.cut.edges.contains(e)).unwrap();
                    p.truncate_after_edge(i)
                })
                .collect();
            let w = Wave { root: s, paths, cut: flow.cut.clone() };
            prop_assert!(is_wave(&g, &t, s, &w));
        }
    }

    #[test]
    fn large_wave_is_a_fixpoint((g, t) in arb_eulerian()) {
        for s in t.iter() {
            let w = large_wave(&g, &t, s, None).unwrap();
            prop_assert!(is_wave(&g, &t, s, &w));
            let h = g.contract_set(s, &w.cut.side).unwrap();
            let th = TerminalSet::new(&h, t.iter()).unwrap();
            prop_assert!(large_wave(&h, &th, s, None).unwrap().is_trivial());
        }
    }

    #[test]
    fn seeded_wave_keeps_seed_edges((g, t) in arb_eulerian(), k in 0usize..4) {
        for s in t.iter() {
            let flow = max_disjoint_paths(&g, &VertexSet::from([s]), &t.others(s)).unwrap();
            let seed: PathSystem = flow.paths.iter().take(k).cloned().collect();
            let w = large_wave(&g, &t, s, Some(&seed)).unwrap();
            prop_assert!(w.paths.delta_at(&g, s).is_superset(&seed.delta_at(&g, s)));
        }
    }

    #[test]
    fn elimination_keeps_inner_boundaries((g, t) in arb_eulerian(), mask in any::<u32>()) {
        let order: Vec<VertexId> = t.iter().collect();
        let record = wave_elimination(&g, &t, &order).unwrap();
        let h = &record.result;
        prop_assert!(h.is_inner_eulerian(&t).is_ok());
        let x: VertexSet = subset(h, mask).into_iter().filter(|v| !t.contains(*v)).collect();
        prop_assert_eq!(h.boundary(&x).unwrap(), g.boundary(&x).unwrap());
        for (s, l) in terminal_lambdas(h, &t).unwrap() {
            prop_assert_eq!(l, h.degree(s));
        }
    }

    #[test]
    fn solve_count_and_coverage((g, t) in arb_eulerian()) {
        let cert = solve(&g, &t).unwrap();
        let sum: usize = terminal_lambdas(&g, &t).unwrap().values().sum();
        prop_assert_eq!(2 * cert.paths.len(), sum);
        let spanned: EdgeSet = g.edges().filter(|(_, [a, b])| t.contains(*a) && t.contains(*b)).map(|(e, _)| e).collect();
        let order: Vec<VertexId> = t.iter().collect();
        let eliminated = wave_elimination(&g.without_edges(&spanned), &t, &order).unwrap().result;
        let used = cert.paths.edge_set();
        for x in t.iter() {
            prop_assert!(eliminated.boundary(&VertexSet::from([x])).unwrap().is_subset(&used));
        }
    }

    #[test]
    fn removal_recursion_matches_solve((g, t) in arb_eulerian()) {
        let order: Vec<VertexId> = t.iter().collect();
        let h = wave_elimination(&g, &t, &order).unwrap().result;
        let removed = pack_by_removal(&h, &t).unwrap();
        prop_assert!(removed.is_edge_disjoint());
        prop_assert!(removed.iter().all(|p| p.is_t_path(&h, &t)));
        prop_assert_eq!(removed.len(), solve(&h, &t).unwrap().paths.len());
    }

    #[test]
    fn tight_cuts_are_orthogonal((g, t) in arb_eulerian()) {
        for s in t.iter() {
            let b = t.others(s);
            let flow = max_disjoint_paths(&g, &VertexSet::from([s]), &b).unwrap();
            if flow.value() != g.degree(s) {
                continue;
            }
            for e in g.edge_ids().filter(|e| g.other_end(*e, s).is_none()) {
                if let TightCut::Tight(c) = tight_cut(&g, s, &b, e).unwrap() {
                    prop_assert!(c.edges.contains(&e));
                    prop_assert!(is_orthogonal(&c.edges, &flow.paths));
                    prop_assert_eq!(c.edges.len(), g.degree(s));
                }
            }
        }
    }

    #[test]
    fn weak_and_strong_mader_duality((g, t) in arb_graph(6, 9)) {
        prop_assume!(t.len() >= 2);
        let best = brute_force_max_packing(&g, &t).unwrap().len() as i64;
        for a in t_partitions(&g, &t) {
            prop_assert!(mader_bound(&g, &t, &a).unwrap().floor().to_integer() >= best);
            for c in obstructive_components(&g, &t, &a).unwrap().components {
                prop_assert_eq!(c.obstructive, c.obstructive_extended);
            }
        }
        prop_assert_eq!(mader_min(&g, &t).unwrap().0.floor().to_integer(), best);
    }

    #[test]
    fn closed_pieces_form_a_boolean_algebra((g, t) in arb_eulerian()) {
        let order: Vec<VertexId> = t.iter().collect();
        let h = wave_elimination(&g, &t, &order).unwrap().result;
        let sys = ClosureSystem::build(&h, &t).unwrap();
        let pieces = closed_partition(&sys);
        for mask in 0u32..(1 << pieces.len().min(5)) {
            let union: EdgeSet = pieces.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).flat_map(|(_, p)| p.iter().copied()).collect();
            let complement: EdgeSet = sys.edges.difference(&union).copied().collect();
            prop_assert_eq!(&c_close(&sys, &union).unwrap(), &union);
            prop_assert_eq!(&c_close(&sys, &complement).unwrap(), &complement);
        }
        let mut all = Vec::new();
        for piece in &pieces {
            let sub = h.edge_subgraph(piece);
            prop_assert!(sub.is_inner_eulerian(&t).is_ok());
            for (x, l) in terminal_lambdas(&sub, &t).unwrap() {
                prop_assert_eq!(l, sub.degree(x));
            }
            all.extend(solve(&sub, &t).unwrap().paths.paths);
        }
        let united = PathSystem::new(all);
        prop_assert!(united.is_edge_disjoint());
        prop_assert!(united.iter().all(|p| p.is_t_path(&h, &t)));
        for x in t.iter() {
            prop_assert_eq!(united.delta_at(&h, x), h.boundary(&VertexSet::from([x])).unwrap());
        }
    }

    #[test]
    fn cli_round_trip(seed in any::<u64>()) {
        let (g, t) = random_inner_eulerian(seed, SMALL);
        let dir = tempfile::tempdir().unwrap();
        let graph = dir.path().join("g.txt");
        std::fs::write(&graph, tpaths::multigraph::write_graph(&g, &t)).unwrap();
        let (mut cert, mut err) = (Vec::new(), Vec::new());
        prop_assert_eq!(tpaths::cli::run(["tpaths", "pack", "--certify", graph.to_str().unwrap()], &mut cert, &mut err), 0);
        let file = dir.path().join("c.json");
        std::fs::write(&file, &cert).unwrap();
        let mut out = Vec::new();
        prop_assert_eq!(tpaths::cli::run(["tpaths", "verify", graph.to_str().unwrap(), file.to_str().unwrap()], &mut out, &mut err), 0);
    }
}
