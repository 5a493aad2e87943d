//! The creation operators `T_i e_μ = e_{iμ}` compressed to words of length at
//! most `N`, and an exact check of their relations.
//!
//! Compression only loses information at the top layer: `T_i` sends `e_μ` with
//! `|μ| = N` to zero. Each relation is therefore compared on the columns where
//! every word involved fits, and the report says which layers those are.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::language::{enumerate_layers, LanguageSpec, Symbol, Word};

/// Largest truncated basis the checker accepts.
pub const MAX_FOCK_BASIS: usize = 2000;

/// Above this many symbols the `2^d` support projections are not enumerated.
pub const MAX_MASK_SYMBOLS: usize = 20;

/// Sparse integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    cols: Vec<BTreeMap<usize, i64>>,
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        Mat { cols: vec![BTreeMap::new(); n] }
    }

    pub fn identity(n: usize) -> Self {
        Mat { cols: (0..n).map(|j| BTreeMap::from([(j, 1)])).collect() }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.cols[col].get(&row).copied().unwrap_or(0)
    }

    pub fn set(&mut self, row: usize, col: usize, v: i64) {
        if v == 0 {
            self.cols[col].remove(&row);
        } else {
            self.cols[col].insert(row, v);
        }
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, i64> {
        &self.cols[j]
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let cols = other
            .cols
            .iter()
            .map(|c| {
                let mut out = BTreeMap::new();
                for (k, v) in c {
                    for (i, a) in &self.cols[*k] {
                        *out.entry(*i).or_insert(0) += a * v;
                    }
                }
                out.retain(|_, x| *x != 0);
                out
            })
            .collect();
        Mat { cols }
    }

    fn combine(&self, other: &Mat, sign: i64) -> Mat {
        let mut out = self.clone();
        for (j, c) in other.cols.iter().enumerate() {
            for (i, v) in c {
                let x = out.get(*i, j) + sign * v;
                out.set(*i, j, x);
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.combine(other, -1)
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.dim());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                out.cols[*i].insert(j, *v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn nonzero_entries(&self) -> Vec<(usize, usize, i64)> {
        let mut out: Vec<_> =
            self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, *v))).collect();
        out.sort();
        out
    }

    pub fn agrees_on(&self, other: &Mat, cols: impl IntoIterator<Item = usize>) -> bool {
        cols.into_iter().all(|j| self.cols[j] == other.cols[j])
    }

    /// At most one nonzero per row and per column, all equal to 1.
    pub fn is_partial_permutation(&self) -> bool {
        let mut rows = vec![false; self.dim()];
        self.cols.iter().all(|c| {
            c.len() <= 1 && c.iter().all(|(i, v)| *v == 1 && !std::mem::replace(&mut rows[*i], true))
        })
    }
}

/// `T_1, …, T_d` on the span of `B_{≤N}`.
#[derive(Clone, Debug)]
pub struct TruncatedFock {
    pub n: usize,
    pub basis: Vec<Word>,
    index: HashMap<Word, usize>,
    layer_of: Vec<usize>,
    pub t: Vec<Mat>,
    pub p_empty: Mat,
}

impl TruncatedFock {
    pub fn build(spec: &LanguageSpec, n: usize) -> Result<Self> {
        let layers = enumerate_layers(spec, n);
        let basis: Vec<Word> = layers.iter().flatten().cloned().collect();
        if basis.len() > MAX_FOCK_BASIS {
            return Err(Error::ResourceLimit(format!(
                "B_≤{n} has {} words, more than {MAX_FOCK_BASIS}",
                basis.len()
            )));
        }
        let index: HashMap<Word, usize> = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let layer_of = basis.iter().map(Word::len).collect();
        let dim = basis.len();
        let t = spec
            .alphabet()
            .symbols()
            .map(|s| {
                let mut m = Mat::zero(dim);
                for (j, mu) in basis.iter().enumerate() {
                    if let Some(&i) = index.get(&mu.prepend(s)) {
                        m.set(i, j, 1);
                    }
                }
                m
            })
            .collect();
        let mut p_empty = Mat::zero(dim);
        p_empty.set(0, 0, 1);
        Ok(TruncatedFock { n, basis, index, layer_of, t, p_empty })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// `T_μ = T_{μ_k} ⋯ T_{μ_1}` for `μ` printed as `μ_k … μ_1`.
    pub fn t_word(&self, mu: &Word) -> Mat {
        mu.symbols().iter().fold(Mat::identity(self.dim()), |acc, s| acc.mul(&self.t[s.index()]))
    }

    /// `T_μ^* T_μ`.
    pub fn source_projection(&self, mu: &Word) -> Mat {
        let t = self.t_word(mu);
        t.transpose().mul(&t)
    }

    /// Basis indices of words with length at most `l`.
    pub fn columns_up_to(&self, l: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(move |j| self.layer_of[*j] <= l)
    }

    fn words_up_to(&self, l: usize) -> impl Iterator<Item = &Word> + '_ {
        self.basis.iter().filter(move |w| w.len() <= l)
    }

    fn diagonal(&self, keep: impl Fn(&Word) -> bool) -> Mat {
        let mut m = Mat::zero(self.dim());
        for (j, w) in self.basis.iter().enumerate() {
            if keep(w) {
                m.set(j, j, 1);
            }
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationStatus {
    Passed,
    Failed,
    Skipped,
}

impl fmt::Display for RelationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationStatus::Passed => "pass",
            RelationStatus::Failed => "FAIL",
            RelationStatus::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub statement: &'static str,
    /// Where the comparison is exact, e.g. "columns |ν| ≤ 4".
    pub scope: String,
    pub instances: usize,
    pub status: RelationStatus,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug)]
pub struct FockReport {
    pub n: usize,
    pub dim: usize,
    pub checks: Vec<RelationCheck>,
    pub warnings: Vec<String>,
}

impl FockReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != RelationStatus::Failed)
    }

    pub fn check(&self, name: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = format!("truncation N = {}, dimension {}\n", self.n, self.dim);
        for c in &self.checks {
            out.push_str(&format!(
                "{:<12} {:<8} {:>6} instances  {}  [{}]\n",
                c.name, c.status, c.instances, c.statement, c.scope
            ));
            if let Some(x) = &c.counterexample {
                out.push_str(&format!("             counterexample: {x}\n"));
            }
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

struct Checker<'a> {
    spec: &'a LanguageSpec,
    checks: Vec<RelationCheck>,
}

impl Checker<'_> {
    fn show(&self, w: &Word) -> String {
        self.spec.alphabet().display_word(w)
    }

    fn record(
        &mut self,
        name: &'static str,
        statement: &'static str,
        scope: String,
        cases: impl IntoIterator<Item = (bool, String)>,
    ) {
        let mut instances = 0;
        let mut counterexample = None;
        for (ok, label) in cases {
            instances += 1;
            if !ok && counterexample.is_none() {
                counterexample = Some(label);
            }
        }
        let status = match (instances, &counterexample) {
            (0, _) => RelationStatus::Skipped,
            (_, Some(_)) => RelationStatus::Failed,
            _ => RelationStatus::Passed,
        };
        self.checks.push(RelationCheck { name, statement, scope, instances, status, counterexample });
    }
}

/// Builds the truncated operators and checks their relations exactly.
pub fn verify_fock_relations(spec: &LanguageSpec, n: usize) -> Result<FockReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("truncation must be at least 2".into()));
    }
    let f = TruncatedFock::build(spec, n)?;
    let dim = f.dim();
    let d = spec.alphabet().len();
    let allowable = |w: &Word| f.index_of(w).is_some();
    let mut warnings = Vec::new();
    let mut c = Checker { spec, checks: Vec::new() };
    let words: Vec<Word> = f.basis.clone();
    let symbols: Vec<Symbol> = spec.alphabet().symbols().collect();

    c.record(
        "T_i",
        "each T_i is a partial permutation",
        "whole space".into(),
        symbols.iter().map(|s| (f.t[s.index()].is_partial_permutation(), c.spec.alphabet().token(*s).to_string())),
    );

    // T_μ*T_μ projects onto span{e_ν : μν allowable}.
    let cases: Vec<(bool, String)> = words
        .iter()
        .map(|mu| {
            let p = f.source_projection(mu);
            let expected = f.diagonal(|nu| allowable(&nu.after(mu)));
            let exact = f.columns_up_to(n - mu.len());
            let ok = p.agrees_on(&expected, exact) && p.mul(&p) == p && p.transpose() == p;
            (ok, format!("μ = {}", c.show(mu)))
        })
        .collect();
    c.record("source", "T_μ*T_μ = projection onto span{e_ν : μν ∈ Λ*}", "columns |μ| + |ν| ≤ N".into(), cases);

    // T_ν T_ν* projects onto span{e_{νμ}}.
    let cases: Vec<(bool, String)> = words
        .iter()
        .map(|nu| {
            let t = f.t_word(nu);
            let p = t.mul(&t.transpose());
            let expected = f.diagonal(|w| w.starts_with(nu));
            (p == expected, format!("ν = {}", c.show(nu)))
        })
        .collect();
    c.record("range", "T_νT_ν* = projection onto span{e_νμ}", "whole space".into(), cases);

    // equal lengths: T_μ*T_ν = 0 iff μ ≠ ν.
    let mut cases = Vec::new();
    for mu in &words {
        let tm = f.t_word(mu).transpose();
        for nu in words.iter().filter(|w| w.len() == mu.len()) {
            let zero = tm.mul(&f.t_word(nu)).is_zero();
            cases.push((zero == (mu != nu), format!("μ = {}, ν = {}", c.show(mu), c.show(nu))));
        }
    }
    c.record("orthogonal", "|μ| = |ν|: T_μ*T_ν = 0 ⇔ μ ≠ ν", "whole space".into(), cases);

    // source projections commute with source and range projections.
    let sources: Vec<Mat> = words.iter().map(|w| f.source_projection(w)).collect();
    let ranges: Vec<Mat> = words
        .iter()
        .map(|w| {
            let t = f.t_word(w);
            t.mul(&t.transpose())
        })
        .collect();
    let mut cases = Vec::new();
    for (i, a) in sources.iter().enumerate() {
        for (j, b) in sources.iter().enumerate() {
            let ok = a.mul(b) == b.mul(a) && a.mul(&ranges[j]) == ranges[j].mul(a);
            cases.push((ok, format!("μ = {}, ν = {}", c.show(&words[i]), c.show(&words[j]))));
        }
    }
    c.record("commute", "T_μ*T_μ commutes with T_ν*T_ν and T_νT_ν*", "whole space".into(), cases);

    // T_μ*T_μ T_i = T_i T_{μi}*T_{μi}.
    let mut cases = Vec::new();
    for mu in f.words_up_to(n - 1) {
        for s in &symbols {
            let mui = mu.append(*s);
            let lhs = f.source_projection(mu).mul(&f.t[s.index()]);
            let rhs = f.t[s.index()].mul(&f.source_projection(&mui));
            cases.push((lhs == rhs, format!("μ = {}, i = {}", c.show(mu), spec.alphabet().token(*s))));
        }
    }
    c.record("shift", "T_μ*T_μ·T_i = T_i·T_{μi}*T_{μi}", "whole space, |μ| ≤ N − 1".into(), cases);

    // Σ T_iT_i* + P_∅ = I.
    let sum = symbols.iter().fold(f.p_empty.clone(), |acc, s| {
        let t = &f.t[s.index()];
        acc.add(&t.mul(&t.transpose()))
    });
    let ok = sum.agrees_on(&Mat::identity(dim), f.columns_up_to(n - 1));
    c.record("sum", "Σ T_iT_i* + P_∅ = I", format!("columns |ν| ≤ {}", n - 1), [(ok, "sum".to_string())]);

    // T_μ P_∅ T_ν* is the matrix unit at (μ, ν).
    let mut cases = Vec::new();
    let ts: Vec<Mat> = words.iter().map(|w| f.t_word(w)).collect();
    for (i, tm) in ts.iter().enumerate() {
        let left = tm.mul(&f.p_empty);
        for (j, tn) in ts.iter().enumerate() {
            let m = left.mul(&tn.transpose());
            cases.push((m.nonzero_entries() == vec![(i, j, 1)], format!("μ = {}, ν = {}", c.show(&words[i]), c.show(&words[j]))));
        }
    }
    c.record("matrix-unit", "T_μP_∅T_ν* = rank-one e_ν ↦ e_μ", "whole space".into(), cases);

    // Q-projection identity.
    if d > MAX_MASK_SYMBOLS {
        warnings.push(format!("{d} symbols: the 2^{d} support projections were not enumerated"));
        c.record("Q", "T_μ*T_μ = T_μ*T_μ·Σ_{[m]≥1} Q_[m]", "not enumerated".into(), []);
    } else {
        let id = Mat::identity(dim);
        let proj: Vec<Mat> = symbols.iter().map(|s| f.source_projection(&Word::new(vec![*s]))).collect();
        let mut q_sum = Mat::zero(dim);
        for m in 1u64..(1 << d) {
            let q = (0..d).fold(id.clone(), |acc, i| {
                if m >> i & 1 == 1 {
                    acc.mul(&proj[i])
                } else {
                    acc.mul(&id.sub(&proj[i]))
                }
            });
            q_sum = q_sum.add(&q);
        }
        let exact: Vec<usize> = f.columns_up_to(n - 1).collect();
        let cases: Vec<(bool, String)> = words
            .iter()
            .zip(&sources)
            .filter(|(mu, _)| !mu.is_empty())
            .map(|(mu, p)| {
                let ok = p.mul(&q_sum).agrees_on(p, exact.iter().copied())
                    && q_sum.mul(p).agrees_on(p, exact.iter().copied());
                (ok, format!("μ = {}", c.show(mu)))
            })
            .collect();
        c.record("Q", "T_μ*T_μ = T_μ*T_μ·Σ_{[m]≥1} Q_[m]", format!("columns |ν| ≤ {}", n - 1), cases);
    }

    // Covariance a T_i = T_i α_i(a) for a = T_μ*T_μ.
    let mut cases = Vec::new();
    for (mu, a) in words.iter().zip(&sources).filter(|(mu, _)| mu.len() + 2 <= n) {
        for s in &symbols {
            let t = &f.t[s.index()];
            let alpha = t.transpose().mul(a).mul(t);
            cases.push((a.mul(t) == t.mul(&alpha), format!("μ = {}, i = {}", c.show(mu), spec.alphabet().token(*s))));
        }
    }
    c.record("covariance", "a·T_i = T_i·α_i(a), a = T_μ*T_μ", format!("whole space, |μ| ≤ {}", n - 2), cases);

    Ok(FockReport { n, dim, checks: c.checks, warnings })
}
