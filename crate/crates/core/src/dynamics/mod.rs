//! Quantized dynamics on follower sets: the levels `Ω_l` with their
//! connecting maps, the partial maps `φ_i`, support masks, a direct check of
//! local piecewise conjugacy, word growth and entropy, and periodic points.

pub mod fock;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fsg::{FollowerSetGraph, TruthTable};
use crate::language::{enumerate_layers, is_allowable, partition_by_key, LanguageSpec, LanguageType, Symbol, Word, WordPartition};

pub use fock::{verify_fock_relations, FockReport, RelationCheck, RelationStatus, TruncatedFock};

/// Largest number of words an `Ω_l` computation will enumerate.
pub const MAX_OMEGA_WORDS: usize = 1 << 20;

/// The classes of `∼_l` on allowable words of length at most `length_cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPartition {
    pub level: usize,
    pub length_cap: usize,
    pub classes: WordPartition,
    /// `theta[c]` is the class at level `l − 1` containing class `c`; absent at level 0.
    pub theta: Option<Vec<usize>>,
    pub theta_well_defined: bool,
    pub theta_onto: bool,
}

impl OmegaPartition {
    pub fn class_of(&self, w: &Word) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(w).is_ok())
    }
}

fn omega_classes(spec: &LanguageSpec, words: &[Word], l: usize) -> Result<WordPartition> {
    let prefixes: Vec<Word> = enumerate_layers(spec, l).pop().unwrap_or_default().into_iter().collect();
    let keyed = words
        .iter()
        .map(|mu| {
            let key = prefixes.iter().map(|w| is_allowable(spec, &mu.after(w))).collect::<Result<Vec<bool>>>()?;
            Ok((mu.clone(), key))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(partition_by_key(keyed))
}

/// Partitions `B_{≤L}` by `μ ∼_l ν ⇔ {w ∈ B_l : wμ allowable} = {w ∈ B_l : wν allowable}`
/// and, for `l ≥ 1`, computes the connecting map to level `l − 1`.
pub fn omega_level(spec: &LanguageSpec, l: usize, length_cap: usize) -> Result<OmegaPartition> {
    if length_cap < l {
        return Err(Error::InvalidArgument(format!("length cap {length_cap} is below level {l}")));
    }
    let words: Vec<Word> = enumerate_layers(spec, length_cap).into_iter().flatten().collect();
    if words.len() > MAX_OMEGA_WORDS {
        return Err(Error::ResourceLimit(format!("B_≤{length_cap} has more than {MAX_OMEGA_WORDS} words")));
    }
    let classes = omega_classes(spec, &words, l)?;
    let mut out =
        OmegaPartition { level: l, length_cap, classes, theta: None, theta_well_defined: true, theta_onto: true };
    if l > 0 {
        let lower = omega_classes(spec, &words, l - 1)?;
        let find = |w: &Word| lower.iter().position(|c| c.binary_search(w).is_ok()).expect("same word set");
        let mut theta = Vec::with_capacity(out.classes.len());
        for c in &out.classes {
            let t = find(&c[0]);
            out.theta_well_defined &= c.iter().all(|w| find(w) == t);
            theta.push(t);
        }
        out.theta_onto = (0..lower.len()).all(|t| theta.contains(&t));
        out.theta = Some(theta);
    }
    Ok(out)
}

/// First level `l ≤ max_level` whose partition of `B_{≤L}` agrees with level
/// `l + 1`; `None` reports "not stabilized".
pub fn omega_stabilization(spec: &LanguageSpec, max_level: usize, length_cap: usize) -> Result<Option<usize>> {
    let words: Vec<Word> = enumerate_layers(spec, length_cap).into_iter().flatten().collect();
    if words.len() > MAX_OMEGA_WORDS {
        return Err(Error::ResourceLimit(format!("B_≤{length_cap} has more than {MAX_OMEGA_WORDS} words")));
    }
    let mut prev = omega_classes(spec, &words, 0)?;
    for l in 0..max_level {
        let next = omega_classes(spec, &words, l + 1)?;
        if next == prev {
            return Ok(Some(l));
        }
        prev = next;
    }
    Ok(None)
}

/// A choice of symbols `m_1 … m_d`, bit `i` set when symbol `i` is in the support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportMask {
    bits: Vec<bool>,
}

impl SupportMask {
    pub fn new(bits: Vec<bool>) -> Self {
        SupportMask { bits }
    }

    pub fn from_symbols(d: usize, symbols: impl IntoIterator<Item = Symbol>) -> Self {
        let mut bits = vec![false; d];
        for s in symbols {
            bits[s.index()] = true;
        }
        SupportMask { bits }
    }

    /// The mask with index `m = Σ m_i 2^{i−1}`.
    pub fn from_index(d: usize, m: u64) -> Self {
        SupportMask { bits: (0..d).map(|i| m >> i & 1 == 1).collect() }
    }

    pub fn index(&self) -> u64 {
        self.bits.iter().enumerate().map(|(i, b)| u64::from(*b) << i).sum()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn supp(&self) -> Vec<Symbol> {
        self.bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| Symbol(i as u32)).collect()
    }

    pub fn is_zero(&self) -> bool {
        !self.bits.contains(&true)
    }
}

impl fmt::Display for SupportMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for b in &self.bits {
            write!(f, "{}", u8::from(*b))?;
        }
        write!(f, "]")
    }
}

/// The partial maps `φ_i` on vertices and the support mask of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantizedMaps {
    /// `phi[i][v]` is the target of the `i`-labeled edge leaving `v`.
    pub phi: Vec<Vec<Option<usize>>>,
    pub q_support: Vec<SupportMask>,
}

impl QuantizedMaps {
    /// Vertices grouped by support-mask index.
    pub fn strata(&self) -> std::collections::BTreeMap<u64, Vec<usize>> {
        let mut out = std::collections::BTreeMap::<u64, Vec<usize>>::new();
        for (v, m) in self.q_support.iter().enumerate() {
            out.entry(m.index()).or_default().push(v);
        }
        out
    }
}

pub fn quantized_maps(g: &FollowerSetGraph) -> QuantizedMaps {
    let gr = g.graph();
    let d = gr.alphabet().len();
    let phi = gr.alphabet().symbols().map(|s| (0..gr.vertex_count()).map(|v| gr.successor(v, s)).collect()).collect();
    let q_support = (0..gr.vertex_count()).map(|v| SupportMask::from_symbols(d, gr.out_labels(v))).collect();
    QuantizedMaps { phi, q_support }
}

/// Outcome of [`check_lpc_pointwise`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpcCheck {
    pub holds: bool,
    /// For each vertex, the label bijection `π_v` when one exists.
    pub bijections: Vec<Option<Vec<(Symbol, Symbol)>>>,
    pub failures: Vec<usize>,
}

/// Checks local piecewise conjugacy along `vertex_map` with singleton
/// neighbourhoods: each vertex needs a bijection `π_v` of its out-labels onto
/// those of its image with `map(φ_i(v)) = ψ_{π_v(i)}(map(v))`.
pub fn check_lpc_pointwise(g1: &FollowerSetGraph, g2: &FollowerSetGraph, vertex_map: &[usize]) -> Result<LpcCheck> {
    let (a, b) = (g1.graph(), g2.graph());
    let n = a.vertex_count();
    let mut seen = vec![false; b.vertex_count()];
    if b.vertex_count() != n || vertex_map.len() != n || vertex_map.iter().any(|&w| w >= n || std::mem::replace(&mut seen[w], true))
    {
        return Err(Error::InvalidWitness("vertex map is not a bijection".into()));
    }
    let mut bijections = Vec::with_capacity(n);
    let mut failures = Vec::new();
    for v in 0..n {
        let w = vertex_map[v];
        let mut mine: Vec<(usize, Symbol)> = a.out_edges(v).map(|(_, e)| (vertex_map[e.dst], e.label)).collect();
        let mut theirs: Vec<(usize, Symbol)> = b.out_edges(w).map(|(_, e)| (e.dst, e.label)).collect();
        mine.sort();
        theirs.sort();
        let targets_match = mine.len() == theirs.len() && mine.iter().zip(&theirs).all(|(x, y)| x.0 == y.0);
        if targets_match {
            bijections.push(Some(mine.iter().zip(&theirs).map(|(x, y)| (x.1, y.1)).collect()));
        } else {
            bijections.push(None);
            failures.push(v);
        }
    }
    Ok(LpcCheck { holds: failures.is_empty(), bijections, failures })
}

/// Word counts and entropy of a follower set graph.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    /// `counts[n] = |B_n|` for `n = 0..=N`.
    pub counts: Vec<BigUint>,
    pub spectral_radius: f64,
    /// `log2` of the spectral radius; `-∞` when the language is finite.
    pub entropy: f64,
    /// `log2(|B_N| / |B_{N−1}|)`, when both are nonzero.
    pub ratio_estimate: Option<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Counts `n`-step paths from the empty class and estimates the spectral
/// radius of the adjacency matrix by power iteration.
pub fn entropy_and_growth(g: &FollowerSetGraph, n_max: usize) -> Result<GrowthReport> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let gr = g.graph();
    let root = g.root()?;
    let n = gr.vertex_count();
    let mut cur = vec![BigUint::zero(); n];
    cur[root] = BigUint::from(1u32);
    let mut counts = vec![BigUint::from(1u32)];
    for _ in 0..n_max {
        let mut next = vec![BigUint::zero(); n];
        for e in gr.edges() {
            if !cur[e.src].is_zero() {
                next[e.dst] += &cur[e.src];
            }
        }
        counts.push(next.iter().sum());
        cur = next;
    }
    let (rho, iterations, converged) = spectral_radius(&gr.adjacency());
    let entropy = if rho == 0.0 { f64::NEG_INFINITY } else { rho.log2() };
    let ratio_estimate = big_ratio(&counts[n_max], &counts[n_max - 1]).map(f64::log2);
    Ok(GrowthReport { counts, spectral_radius: rho, entropy, ratio_estimate, iterations, converged })
}

fn big_ratio(num: &BigUint, den: &BigUint) -> Option<f64> {
    if num.is_zero() || den.is_zero() {
        return None;
    }
    let shift = num.bits().max(den.bits()).saturating_sub(900);
    Some((num >> shift).to_f64()? / (den >> shift).to_f64()?)
}

const POWER_TOL: f64 = 1e-12;
const POWER_CAP: usize = 100_000;

/// Spectral radius of a nonnegative matrix via power iteration on `A + I`
/// (which is aperiodic with spectral radius `ρ(A) + 1`), from the all-ones vector.
pub fn spectral_radius(a: &[Vec<u64>]) -> (f64, usize, bool) {
    let n = a.len();
    if is_nilpotent(a) {
        return (0.0, 0, true);
    }
    let mut v = vec![1.0f64; n];
    let mut lambda = 0.0f64;
    for it in 1..=POWER_CAP {
        let mut w = v.clone();
        for (i, row) in a.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if *c != 0 {
                    w[i] += *c as f64 * v[j];
                }
            }
        }
        let norm: f64 = w.iter().sum();
        let next = norm / v.iter().sum::<f64>();
        for x in &mut w {
            *x /= norm;
        }
        v = w;
        if (next - lambda).abs() <= POWER_TOL * next {
            return (next - 1.0, it, true);
        }
        lambda = next;
    }
    (lambda - 1.0, POWER_CAP, false)
}

/// No cycles in the underlying graph.
fn is_nilpotent(a: &[Vec<u64>]) -> bool {
    let n = a.len();
    let mut indeg: Vec<usize> = (0..n).map(|j| (0..n).filter(|i| a[*i][j] != 0).count()).collect();
    let mut stack: Vec<usize> = (0..n).filter(|j| indeg[*j] == 0).collect();
    let mut removed = 0;
    while let Some(i) = stack.pop() {
        removed += 1;
        for j in 0..n {
            if a[i][j] != 0 {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    stack.push(j);
                }
            }
        }
    }
    removed == n
}

/// Largest `d^n` the periodic-point count will enumerate.
pub const MAX_PERIODIC_WORDS: u64 = 1 << 24;

/// Number of points of period `n` of the two-sided shift of a finite-type
/// language: words `w` of length `n` whose repetition `w^r` is allowable,
/// with `r = ⌈(n + k + 1)/n⌉`.
pub fn periodic_points_finite_type(spec: &LanguageSpec, n: usize) -> Result<u64> {
    let fs = spec
        .forbidden_set()
        .ok_or_else(|| Error::UnsupportedBackend("periodic points are counted only at finite type".into()))?;
    if n == 0 {
        return Err(Error::InvalidArgument("period must be positive".into()));
    }
    let d = spec.alphabet().len() as u64;
    let total = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(d).filter(|t| *t <= MAX_PERIODIC_WORDS));
    let total = total.ok_or_else(|| Error::ResourceLimit(format!("{d}^{n} words exceed {MAX_PERIODIC_WORDS}")))?;
    let k = match fs.language_type() {
        LanguageType::Free => return Ok(total),
        LanguageType::Finite(k) => k,
    };
    let r = (n + k + 1).div_ceil(n);
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let w: Vec<Symbol> = (0..n)
            .map(|_| {
                let s = Symbol((c % d) as u32);
                c /= d;
                s
            })
            .collect();
        let repeated = Word::new(w.iter().cycle().take(n * r).copied().collect());
        if !fs.forbids(&repeated) {
            count += 1;
        }
    }
    Ok(count)
}

/// Adjacency matrix of the edge shift of a language of type at most 1: the
/// type-1 truth table with the row and column of the empty word removed.
/// Entry `(i, j)` is 1 when `ji` is allowable.
pub fn edge_shift_adjacency(spec: &LanguageSpec) -> Result<Vec<Vec<u64>>> {
    match spec.language_type() {
        None => return Err(Error::UnsupportedBackend("edge shifts need a forbidden set".into())),
        Some(LanguageType::Finite(k)) if k > 1 => {
            return Err(Error::InvalidArgument(format!("language has type {k}, not at most 1")))
        }
        _ => {}
    }
    let t = TruthTable::build(spec, 1)?;
    let d = spec.alphabet().len();
    // Rows 1..=d are the single symbols in order.
    Ok((1..=d).map(|i| (1..=d).map(|j| u64::from(t.cell(i, j))).collect()).collect())
}

/// Trace of `a^n`, exact.
pub fn trace_of_power(a: &[Vec<u64>], n: usize) -> BigUint {
    let m = a.len();
    let to_big = |x: &Vec<Vec<u64>>| -> Vec<Vec<BigUint>> {
        x.iter().map(|r| r.iter().map(|c| BigUint::from(*c)).collect()).collect()
    };
    let base = to_big(&a.to_vec());
    let mut p: Vec<Vec<BigUint>> =
        (0..m).map(|i| (0..m).map(|j| BigUint::from(u32::from(i == j))).collect()).collect();
    for _ in 0..n {
        p = (0..m)
            .map(|i| (0..m).map(|j| (0..m).map(|l| &p[i][l] * &base[l][j]).sum()).collect())
            .collect();
    }
    (0..m).map(|i| p[i][i].clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::equivalence::unlabeled_isomorphism;
    use crate::fsg::{build_fsg, build_fsg_from_presentation};
    use crate::language::{enumerate_allowable, follower_classes_bruteforce};

    #[test]
    fn omega_at_type_matches_truth_table_rows() {
        let spec = corpus::sft_001();
        let o = omega_level(&spec, 2, 3).unwrap();
        assert_eq!(o.classes.len(), 3);
        assert!(o.theta_well_defined && o.theta_onto);
        // Restricted to length ≤ 2 the classes are the rows of the table.
        let oracle = follower_classes_bruteforce(&spec, 2).unwrap();
        let short: WordPartition = o
            .classes
            .iter()
            .map(|c| c.iter().filter(|w| w.len() <= 3).cloned().collect())
            .collect();
        assert_eq!(short, oracle);
    }

    #[test]
    fn level_zero_is_one_class() {
        let o = omega_level(&corpus::first(), 0, 3).unwrap();
        assert_eq!(o.classes.len(), 1);
        assert!(o.theta.is_none());
    }

    #[test]
    fn omega_stabilizes_at_the_type() {
        let spec = corpus::first();
        let short = |o: OmegaPartition| -> WordPartition {
            o.classes.iter().map(|c| c.iter().filter(|w| w.len() <= 3).cloned().collect()).collect()
        };
        let a = short(omega_level(&spec, 2, 4).unwrap());
        let b = short(omega_level(&spec, 4, 4).unwrap());
        assert_eq!(a, b);
        assert_eq!(omega_stabilization(&spec, 6, 5).unwrap(), Some(2));
    }

    #[test]
    fn even_shift_levels_stabilize_at_its_follower_sets() {
        let spec = LanguageSpec::from_presentation(corpus::even_shift()).unwrap();
        let counts: Vec<usize> = (0..5).map(|l| omega_level(&spec, l, 8).unwrap().classes.len()).collect();
        assert_eq!(counts, [1, 2, 3, 3, 3]);
        assert_eq!(omega_stabilization(&spec, 6, 8).unwrap(), Some(2));
    }

    #[test]
    fn masks() {
        let m = SupportMask::from_index(3, 0b101);
        assert_eq!(m.supp(), vec![Symbol(0), Symbol(2)]);
        assert_eq!(m.index(), 5);
        assert_eq!(m.to_string(), "[101]");
        assert!(SupportMask::from_index(2, 0).is_zero());
    }

    #[test]
    fn even_shift_supports() {
        let g = build_fsg_from_presentation(&corpus::even_shift()).unwrap();
        let q = quantized_maps(&g);
        let f1 = g.vertex_by_id("F(1)").unwrap();
        let f01 = g.vertex_by_id("F(01)").unwrap();
        assert_eq!(q.q_support[f1].to_string(), "[11]");
        assert_eq!(q.q_support[f01].to_string(), "[10]");
        assert_eq!(q.q_support[g.root().unwrap()].to_string(), "[11]");
    }

    #[test]
    fn first_example_phi() {
        let g = build_fsg(&corpus::first()).unwrap();
        let q = quantized_maps(&g);
        let f10 = g.vertex_by_id("F(10)").unwrap();
        assert_eq!(q.phi[0][f10], g.vertex_by_id("F(01)"));
        assert_eq!(q.phi[1][f10], None);
        let strata = q.strata();
        assert_eq!(strata.values().map(Vec::len).sum::<usize>(), g.vertex_count());
    }

    #[test]
    fn ring_maps_are_total() {
        let g = build_fsg(&corpus::full(3)).unwrap();
        let q = quantized_maps(&g);
        assert_eq!(q.q_support[0].index(), 7);
        assert!(q.phi.iter().all(|p| p == &vec![Some(0)]));
    }

    #[test]
    fn lpc_pointwise_on_even_vs_001() {
        let e = build_fsg_from_presentation(&corpus::even_shift()).unwrap();
        let m = build_fsg(&corpus::sft_001()).unwrap();
        let w = unlabeled_isomorphism(&e, &m).unwrap();
        let c = check_lpc_pointwise(&e, &m, &w.vertex_map).unwrap();
        assert!(c.holds);
        let f01 = e.vertex_by_id("F(01)").unwrap();
        assert_eq!(c.bijections[f01], Some(vec![(Symbol(0), Symbol(1))]));

        let id = check_lpc_pointwise(&e, &e, &[0, 1, 2]).unwrap();
        assert!(id.holds);
        assert!(id.bijections.iter().flatten().all(|b| b.iter().all(|(x, y)| x == y)));

        let root = e.root().unwrap();
        let f1 = e.vertex_by_id("F(1)").unwrap();
        let mut swapped = w.vertex_map.clone();
        swapped.swap(root, f1);
        assert!(!check_lpc_pointwise(&e, &m, &swapped).unwrap().holds);
        assert!(check_lpc_pointwise(&e, &m, &[0, 0, 1]).is_err());
    }

    #[test]
    fn golden_mean_growth() {
        let g = build_fsg(&corpus::golden_mean()).unwrap();
        let r = entropy_and_growth(&g, 40).unwrap();
        let fib: Vec<u64> = r.counts[1..5].iter().map(|c| c.to_u64().unwrap()).collect();
        assert_eq!(fib, [2, 3, 5, 8]);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((r.entropy - phi.log2()).abs() < 1e-9);
        assert!((r.ratio_estimate.unwrap() - r.entropy).abs() < 0.05);
        assert!(r.converged);
    }

    #[test]
    fn even_and_001_grow_alike() {
        let e = build_fsg_from_presentation(&corpus::even_shift()).unwrap();
        let m = build_fsg(&corpus::sft_001()).unwrap();
        let (a, b) = (entropy_and_growth(&e, 12).unwrap(), entropy_and_growth(&m, 12).unwrap());
        assert_eq!(a.counts, b.counts);
        assert!((a.entropy - b.entropy).abs() < 1e-9);
        let spec = corpus::sft_001();
        for n in 0..=12 {
            assert_eq!(b.counts[n], BigUint::from(enumerate_allowable(&spec, n).len()));
        }
    }

    #[test]
    fn ring_growth() {
        let g = build_fsg(&corpus::full(3)).unwrap();
        let r = entropy_and_growth(&g, 6).unwrap();
        assert_eq!(r.counts[6], BigUint::from(729u32));
        assert!((r.entropy - 3f64.log2()).abs() < 1e-9);
    }

    #[test]
    fn finite_language_has_no_entropy() {
        let spec = LanguageSpec::from_strs(&["0", "1"], &["00", "01", "10", "11"]).unwrap();
        let r = entropy_and_growth(&build_fsg(&spec).unwrap(), 3).unwrap();
        assert_eq!(r.entropy, f64::NEG_INFINITY);
        assert_eq!(r.ratio_estimate, None);
    }

    #[test]
    fn periodic_points() {
        let gm = corpus::golden_mean();
        assert_eq!(periodic_points_finite_type(&gm, 1).unwrap(), 1);
        assert_eq!(periodic_points_finite_type(&gm, 2).unwrap(), 3);
        assert_eq!(periodic_points_finite_type(&corpus::sft_001(), 1).unwrap(), 2);
        let a = edge_shift_adjacency(&gm).unwrap();
        assert_eq!(a, vec![vec![1, 1], vec![1, 0]]);
        for n in 1..=8 {
            assert_eq!(BigUint::from(periodic_points_finite_type(&gm, n).unwrap()), trace_of_power(&a, n));
        }
        let pres = LanguageSpec::from_presentation(corpus::even_shift()).unwrap();
        assert!(matches!(periodic_points_finite_type(&pres, 2), Err(Error::UnsupportedBackend(_))));
    }
}
