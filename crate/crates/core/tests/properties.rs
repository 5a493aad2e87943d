use std::collections::BTreeSet;

use proptest::prelude::*;
use soficlab::corpus;
use soficlab::covers::{fischer_cover, is_synchronizing_word, synchronizing_words};
use soficlab::dynamics::{entropy_and_growth, omega_level, quantized_maps, spectral_radius, check_lpc_pointwise};
use soficlab::equivalence::{
    all_unlabeled_isomorphisms, compose_vertex_maps, is_unlabeled_automorphism, labeled_isomorphism,
    lpc_word_bijection, unlabeled_isomorphism, verify_witness,
};
use soficlab::fsg::{build_fsg, build_fsg_from_presentation, FollowerSetGraph};
use soficlab::graph::{Edge, LabeledGraph, Vertex};
use soficlab::language::{
    enumerate_allowable, enumerate_layers, follower_classes_bruteforce, minimal_basis, ForbiddenSet,
};
use soficlab::sampling::{all_words, digits, permute_symbols};
use soficlab::{is_allowable, LanguageSpec, Symbol, Word};

fn word(ids: &[u32]) -> Word {
    Word::from_ids(ids)
}

/// `(d, forbidden words)` with `d ∈ {2, 3}` and words of length 2 to 4.
fn raw_spec() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (2usize..=3).prop_flat_map(|d| {
        (Just(d), prop::collection::vec(prop::collection::vec(0..d as u32, 2..=4), 1..=4))
    })
}

fn make(d: usize, words: &[Vec<u32>]) -> LanguageSpec {
    LanguageSpec::finite_type(digits(d), words.iter().map(|w| word(w))).unwrap()
}

fn k_of(spec: &LanguageSpec) -> usize {
    spec.language_type().and_then(|t| t.k()).unwrap_or(0)
}

/// Labels of the `n`-step paths from the root, layer by layer.
fn path_layers(g: &FollowerSetGraph, n: usize) -> Vec<Vec<Word>> {
    let gr = g.graph();
    let mut cur = vec![(Word::empty(), g.root().unwrap())];
    let mut out = Vec::new();
    for _ in 0..=n {
        out.push(cur.iter().map(|(w, _)| w.clone()).collect());
        cur = cur.iter().flat_map(|(w, v)| gr.out_edges(*v).map(move |(_, e)| (w.prepend(e.label), e.dst))).collect();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factors_of_allowable_words_are_allowable((d, ws) in raw_spec(), mu in prop::collection::vec(0u32..3, 0..9)) {
        let spec = make(d, &ws);
        let mu = word(&mu.into_iter().map(|s| s % d as u32).collect::<Vec<_>>());
        if is_allowable(&spec, &mu).unwrap() {
            for start in 0..=mu.len() {
                for len in 0..=mu.len() - start {
                    prop_assert!(is_allowable(&spec, &mu.factor(start, len)).unwrap());
                }
            }
        }
    }

    #[test]
    fn basis_is_idempotent((d, ws) in raw_spec()) {
        let fs = ForbiddenSet::new(ws.iter().map(|w| word(w))).unwrap();
        let once = minimal_basis(&fs);
        let twice = minimal_basis(&once);
        prop_assert_eq!(twice.words(), once.words());
        prop_assert!(d >= 2);
    }

    #[test]
    fn growth_is_bounded_by_d((d, ws) in raw_spec()) {
        let layers = enumerate_layers(&make(d, &ws), 8);
        for n in 0..8 {
            prop_assert!(layers[n + 1].len() <= d * layers[n].len());
        }
    }

    #[test]
    fn oracle_partition_matches_vertices((d, ws) in raw_spec()) {
        let spec = make(d, &ws);
        let g = build_fsg(&spec).unwrap();
        let brute = follower_classes_bruteforce(&spec, k_of(&spec)).unwrap();
        prop_assert_eq!(brute.len(), g.vertex_count());
        prop_assert_eq!(g.vertex_partition(), brute);
    }

    #[test]
    fn path_labels_are_the_allowable_words((d, ws) in raw_spec()) {
        let spec = make(d, &ws);
        let g = build_fsg(&spec).unwrap();
        let n = if d == 2 { 10 } else { 8 };
        let layers = enumerate_layers(&spec, n);
        for (i, paths) in path_layers(&g, n).into_iter().enumerate() {
            let set: BTreeSet<Word> = paths.iter().cloned().collect();
            prop_assert_eq!(set.len(), paths.len(), "two paths share a label at length {}", i);
            prop_assert_eq!(&set, &layers[i]);
        }
    }

    #[test]
    fn omega_stabilizes_at_the_type((d, ws) in raw_spec()) {
        let spec = make(d, &ws);
        let k = k_of(&spec);
        // Levels only form a tower when every word extends on the left, i.e. no
        // vertex of the graph is a dead end.
        let g = build_fsg(&spec).unwrap();
        prop_assume!((0..g.vertex_count()).all(|v| g.graph().out_edges(v).next().is_some()));
        let a = omega_level(&spec, k, k + 2).unwrap();
        let b = omega_level(&spec, k + 2, k + 2).unwrap();
        prop_assert!(b.theta_well_defined && b.theta_onto);
        prop_assert_eq!(a.classes, b.classes);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn backends_agree_on_membership((d, ws) in raw_spec()) {
        let spec = make(d, &ws);
        let g = build_fsg(&spec).unwrap();
        let pres = LanguageSpec::from_presentation(g.graph().clone()).unwrap();
        let max = (2 * (k_of(&spec) + 2)).min(if d == 2 { 12 } else { 8 });
        for n in 0..=max {
            for w in all_words(d, n) {
                prop_assert_eq!(is_allowable(&spec, &w).unwrap(), is_allowable(&pres, &w).unwrap());
            }
        }
    }

    #[test]
    fn presentation_builder_is_idempotent(
        n in 1usize..=4,
        edges in prop::collection::vec((0usize..4, 0usize..4, 0u32..2), 1..10),
    ) {
        let vertices: Vec<Vertex> = (0..n).map(|i| Vertex::new(format!("v{i}"))).collect();
        let edges: BTreeSet<(usize, usize, u32)> = edges.into_iter().map(|(a, b, l)| (a % n, b % n, l)).collect();
        let edges = edges.into_iter().map(|(src, dst, l)| Edge { src, dst, label: Symbol(l) }).collect();
        let p = LabeledGraph::new(digits(2), vertices, edges).unwrap();
        let Ok(once) = build_fsg_from_presentation(&p) else { return Ok(()) };
        let twice = build_fsg_from_presentation(once.graph()).unwrap();
        prop_assert!(labeled_isomorphism(&once, &twice).is_some());
        prop_assert!(once.same_structure(&twice));
        let pres = LanguageSpec::from_presentation(p.clone()).unwrap();
        for len in 0..=6 {
            prop_assert_eq!(once.words_from_root(len).unwrap(), enumerate_allowable(&pres, len));
        }
    }

    #[test]
    fn witnesses_are_sound_and_symmetric(
        (d, ws) in raw_spec(),
        (d2, ws2) in raw_spec(),
        perm in Just(vec![0u32, 1, 2]).prop_shuffle(),
    ) {
        let spec = make(d, &ws);
        let perm: Vec<Symbol> = perm.into_iter().filter(|&s| (s as usize) < d).map(Symbol).collect();
        let renamed = permute_symbols(&spec, &perm).unwrap();
        let other = make(d2, &ws2);
        let (g, h, o) = (build_fsg(&spec).unwrap(), build_fsg(&renamed).unwrap(), build_fsg(&other).unwrap());

        let w = labeled_isomorphism(&g, &h);
        prop_assert!(w.is_some(), "a renamed language is labeled isomorphic");
        verify_witness(&g, &h, w.as_ref().unwrap()).unwrap();
        prop_assert!(unlabeled_isomorphism(&g, &h).is_some());

        let fwd = unlabeled_isomorphism(&g, &o);
        let back = unlabeled_isomorphism(&o, &g);
        prop_assert_eq!(fwd.is_some(), back.is_some());
        if labeled_isomorphism(&g, &o).is_some() {
            prop_assert!(fwd.is_some());
        }
        if let (Some(f), Some(b)) = (fwd, back) {
            verify_witness(&g, &o, &f).unwrap();
            verify_witness(&o, &g, &b).unwrap();
            prop_assert!(is_unlabeled_automorphism(g.graph(), &compose_vertex_maps(&f.vertex_map, &b.vertex_map)));
            prop_assert!(is_unlabeled_automorphism(o.graph(), &compose_vertex_maps(&b.vertex_map, &f.vertex_map)));
        }
    }

    #[test]
    fn word_bijections_are_bijections((d, ws) in raw_spec()) {
        let spec = make(d, &ws);
        let renamed = permute_symbols(&spec, &(0..d as u32).rev().map(Symbol).collect::<Vec<_>>()).unwrap();
        let (g, h) = (build_fsg(&spec).unwrap(), build_fsg(&renamed).unwrap());
        let w = unlabeled_isomorphism(&g, &h).unwrap();
        let max = if d == 2 { 10 } else { 7 };
        for n in 0..=max {
            let f = lpc_word_bijection(&w, &g, &h, n).unwrap();
            let image: BTreeSet<&Word> = f.values().collect();
            prop_assert_eq!(image.len(), f.len());
            prop_assert_eq!(image.into_iter().cloned().collect::<BTreeSet<_>>(), enumerate_allowable(&renamed, n));
        }
    }

    #[test]
    fn synchronizing_words_stay_synchronizing(
        (d, ws) in raw_spec(),
        prefixes in prop::collection::vec(prop::collection::vec(0u32..3, 1..5), 8),
    ) {
        let spec = make(d, &ws);
        let g = build_fsg(&spec).unwrap();
        for w in synchronizing_words(g.graph()).unwrap().values() {
            for u in &prefixes {
                let u = word(&u.iter().map(|s| s % d as u32).collect::<Vec<_>>());
                let uw = w.after(&u);
                if is_allowable(&spec, &uw).unwrap() {
                    prop_assert!(is_synchronizing_word(g.graph(), &uw).unwrap().synchronizing);
                }
            }
        }
    }

    #[test]
    fn cover_keeps_the_entropy((d, ws) in raw_spec()) {
        let g = build_fsg(&make(d, &ws)).unwrap();
        let cover = fischer_cover(&g).unwrap();
        if cover.irreducibility.irreducible {
            let (a, _, _) = spectral_radius(&g.graph().adjacency());
            let (b, _, _) = spectral_radius(&cover.graph.adjacency());
            prop_assert!((a.log2() - b.log2()).abs() < 1e-9, "{} vs {}", a, b);
        }
    }

    #[test]
    fn support_masks_stratify_the_vertices((d, ws) in raw_spec()) {
        let g = build_fsg(&make(d, &ws)).unwrap();
        let q = quantized_maps(&g);
        let root = g.root().unwrap();
        prop_assert_eq!(q.q_support[root].supp().len(), d);
        let strata = q.strata();
        let mut seen: Vec<usize> = strata.values().flatten().copied().collect();
        seen.sort();
        prop_assert_eq!(seen, (0..g.vertex_count()).collect::<Vec<_>>());
    }
}

fn bundled_pairs() -> Vec<(FollowerSetGraph, FollowerSetGraph)> {
    let b = |s: &LanguageSpec| build_fsg(s).unwrap();
    let mut out = vec![(build_fsg_from_presentation(&corpus::even_shift()).unwrap(), b(&corpus::sft_001()))];
    for (l, m) in [corpus::not_same_sft(), corpus::counter1(), corpus::counter2()] {
        out.push((b(&l), b(&m)));
    }
    out
}

/// Every bijection of `0..n` fixing `fixed`.
fn bijections(n: usize, fixed: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out.retain(|m| m[fixed] == fixed);
    out
}

#[test]
fn pointwise_conjugacy_matches_the_witnesses() {
    for (g1, g2) in bundled_pairs() {
        let witnesses: BTreeSet<Vec<usize>> =
            all_unlabeled_isomorphisms(&g1, &g2).into_iter().map(|w| w.vertex_map).collect();
        assert!(!witnesses.is_empty());
        let (r1, r2) = (g1.root().unwrap(), g2.root().unwrap());
        assert_eq!(r1, r2, "roots come first in both graphs");
        for map in bijections(g1.vertex_count(), r1) {
            let holds = check_lpc_pointwise(&g1, &g2, &map).unwrap().holds;
            assert_eq!(holds, witnesses.contains(&map), "{map:?}");
        }
    }
}

#[test]
fn growth_ratio_tracks_entropy_on_irreducible_examples() {
    let mut graphs = vec![
        build_fsg_from_presentation(&corpus::even_shift()).unwrap(),
        build_fsg(&corpus::golden_mean()).unwrap(),
        build_fsg(&corpus::sft_00()).unwrap(),
        build_fsg(&corpus::first()).unwrap(),
        build_fsg(&corpus::sft_001()).unwrap(),
    ];
    graphs.retain(|g| fischer_cover(g).unwrap().irreducibility.irreducible);
    assert!(graphs.len() >= 3);
    for g in graphs {
        let r = entropy_and_growth(&g, 40).unwrap();
        assert!((r.ratio_estimate.unwrap() - r.entropy).abs() <= 0.05, "{r:?}");
    }
}

#[test]
fn sampled_type1_pairs_respect_injectivity_hypothesis() {
    // Two symbols: every type-1 pair that is unlabeled isomorphic is labeled isomorphic.
    let specs: Vec<LanguageSpec> = (0..16u64).map(|m| soficlab::sampling::type1_from_mask(2, m).unwrap()).collect();
    let graphs: Vec<FollowerSetGraph> = specs.iter().map(|s| build_fsg(s).unwrap()).collect();
    for a in &graphs {
        for b in &graphs {
            if unlabeled_isomorphism(a, b).is_some() {
                assert!(labeled_isomorphism(a, b).is_some());
            }
        }
    }
}
