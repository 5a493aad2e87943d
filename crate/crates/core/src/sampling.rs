//! Random forbidden sets and the randomized property suites run by
//! `soficlab examples --seed S`.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::equivalence::{follower_injective_on_symbols, labeled_isomorphism, lift_unlabeled_to_labeled, unlabeled_isomorphism};
use crate::error::Result;
use crate::fsg::{build_fsg, FollowerSetGraph};
use crate::language::{enumerate_layers, follower_classes_bruteforce, Alphabet, LanguageSpec, Symbol, Word};

pub fn digits(d: usize) -> Alphabet {
    Alphabet::new((0..d).map(|i| i.to_string())).expect("digit tokens are distinct")
}

/// All words of length `n` over `d` symbols, in lexicographic order.
pub fn all_words(d: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        out = out.iter().flat_map(|w| (0..d as u32).map(move |s| w.append(Symbol(s)))).collect();
    }
    out
}

/// The type-1 language forbidding the 2-words selected by the bits of `mask`
/// (bit `i` selects `all_words(d, 2)[i]`).
pub fn type1_from_mask(d: usize, mask: u64) -> Result<LanguageSpec> {
    let words = all_words(d, 2).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, w)| w);
    LanguageSpec::finite_type(digits(d), words)
}

/// A random type-1 language: each 2-word is forbidden with probability `p`.
pub fn random_type1(rng: &mut impl Rng, d: usize, p: f64) -> Result<LanguageSpec> {
    let words = all_words(d, 2).into_iter().filter(|_| rng.gen_bool(p));
    LanguageSpec::finite_type(digits(d), words)
}

/// A random finite-type language on `d` symbols with between one and four
/// forbidden words of length `2..=max_len`.
pub fn random_finite_type(rng: &mut impl Rng, d: usize, max_len: usize) -> Result<LanguageSpec> {
    let count = rng.gen_range(1..=4);
    let words: Vec<Word> = (0..count)
        .map(|_| {
            let len = rng.gen_range(2..=max_len);
            Word::new((0..len).map(|_| Symbol(rng.gen_range(0..d as u32))).collect())
        })
        .collect();
    LanguageSpec::finite_type(digits(d), words)
}

/// The same language with symbol `i` renamed to `perm[i]`.
pub fn permute_symbols(spec: &LanguageSpec, perm: &[Symbol]) -> Result<LanguageSpec> {
    let fs = spec.forbidden_set().expect("finite-type language");
    let words = fs.words().iter().map(|w| w.map_symbols(|s| perm[s.index()]));
    LanguageSpec::finite_type(spec.alphabet().clone(), words)
}

pub fn random_permutation(rng: &mut impl Rng, d: usize) -> Vec<Symbol> {
    let mut perm: Vec<Symbol> = (0..d as u32).map(Symbol).collect();
    perm.shuffle(rng);
    perm
}

/// Totals of the type-1 lifting suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LiftSuiteReport {
    /// Pairs found unlabeled-isomorphic with a symbol-injective first graph.
    pub injective_pairs: usize,
    /// Unlabeled-isomorphic pairs on two symbols without the injectivity check.
    pub two_symbol_pairs: usize,
    pub violations: Vec<String>,
}

fn describe(spec: &LanguageSpec) -> String {
    let fs = spec.forbidden_set().expect("finite-type language");
    let words: Vec<String> = fs.words().iter().map(|w| spec.format_word(w)).collect();
    format!("d={} {{{}}}", spec.alphabet().len(), words.join(","))
}

fn check_pair(a: &(LanguageSpec, FollowerSetGraph), b: &(LanguageSpec, FollowerSetGraph), report: &mut Vec<String>) -> Result<bool> {
    let Some(w) = unlabeled_isomorphism(&a.1, &b.1) else {
        return Ok(false);
    };
    if lift_unlabeled_to_labeled(&a.1, &b.1, &w)?.is_none() {
        report.push(format!("{} vs {}: unlabeled isomorphic but no lift", describe(&a.0), describe(&b.0)));
    }
    Ok(true)
}

/// Graph fingerprint used to skip pairs that cannot be isomorphic.
fn bucket_key(g: &FollowerSetGraph) -> (usize, usize, Vec<(usize, usize)>) {
    let gr = g.graph();
    let mut deg: Vec<(usize, usize)> = (0..gr.vertex_count()).map(|v| (gr.out_degree(v), gr.in_degree(v))).collect();
    deg.sort();
    (gr.vertex_count(), gr.edges().len(), deg)
}

/// Checks that unlabeled isomorphism of type-1 follower set graphs lifts to
/// a labeled one, when the first language separates its symbols, and on two
/// symbols unconditionally. Pairs come from every type-1 language on two and
/// three symbols, `samples` random languages on four symbols, and random
/// symbol permutations of each.
pub fn lift_suite(seed: u64, samples: usize) -> Result<LiftSuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LiftSuiteReport::default();
    for d in 2..=4usize {
        let mut pool = Vec::new();
        if d < 4 {
            for mask in 0..1u64 << (d * d) {
                pool.push(type1_from_mask(d, mask)?);
            }
        } else {
            for _ in 0..samples {
                let p = rng.gen_range(0.1..0.6);
                pool.push(random_type1(&mut rng, d, p)?);
            }
        }
        let extra: Vec<LanguageSpec> = pool
            .iter()
            .map(|s| permute_symbols(s, &random_permutation(&mut rng, d)))
            .collect::<Result<_>>()?;
        pool.extend(extra);
        let mut buckets: BTreeMap<_, Vec<(LanguageSpec, FollowerSetGraph)>> = BTreeMap::new();
        for spec in pool {
            let g = build_fsg(&spec)?;
            buckets.entry(bucket_key(&g)).or_default().push((spec, g));
        }
        for bucket in buckets.values() {
            for (i, a) in bucket.iter().enumerate() {
                let injective = follower_injective_on_symbols(&a.1);
                if !injective && d != 2 {
                    continue;
                }
                for b in &bucket[i..] {
                    if check_pair(a, b, &mut report.violations)? {
                        if injective {
                            report.injective_pairs += 1;
                        } else {
                            report.two_symbol_pairs += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleSuiteReport {
    pub specs: usize,
    pub violations: Vec<String>,
}

/// Compares the follower set graph of random finite-type languages
/// (`d ≤ 3`, `k ≤ 3`) against brute-force follower classes and against
/// direct enumeration of allowable words up to length `max_n`.
pub fn oracle_suite(seed: u64, count: usize, max_n: usize) -> Result<OracleSuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = OracleSuiteReport::default();
    while report.specs < count {
        let d = rng.gen_range(2..=3);
        let spec = random_finite_type(&mut rng, d, 4)?;
        let Some(k) = spec.language_type().and_then(|t| t.k()) else {
            continue;
        };
        report.specs += 1;
        let g = build_fsg(&spec)?;
        if g.vertex_partition() != follower_classes_bruteforce(&spec, k)? {
            report.violations.push(format!("{}: partition differs", describe(&spec)));
        }
        let layers = enumerate_layers(&spec, max_n);
        let gr = g.graph();
        let mut paths = vec![(Word::empty(), g.root()?)];
        for (n, layer) in layers.iter().enumerate() {
            let labels: BTreeSet<Word> = paths.iter().map(|(w, _)| w.clone()).collect();
            if labels.len() != paths.len() || labels != *layer {
                report.violations.push(format!("{}: words of length {n} differ", describe(&spec)));
                break;
            }
            paths = paths.iter().flat_map(|(w, v)| gr.out_edges(*v).map(move |(_, e)| (w.prepend(e.label), e.dst))).collect();
        }
        if labeled_isomorphism(&g, &g).is_none() {
            report.violations.push(format!("{}: no identity witness", describe(&spec)));
        }
    }
    Ok(report)
}
