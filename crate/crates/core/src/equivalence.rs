//! Labeled and unlabeled isomorphism of follower set graphs.
//!
//! A labeled isomorphism is a vertex bijection together with one global symbol
//! bijection; it exists iff the two languages agree up to renaming symbols.
//! An unlabeled isomorphism only matches the underlying multigraphs, pairing
//! out-edges vertex by vertex; it exists iff the quantized dynamics are
//! locally piecewise conjugate.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fsg::FollowerSetGraph;
use crate::graph::LabeledGraph;
use crate::language::{Symbol, Word};

/// Upper bound on the number of words a single `f_n` table may hold.
pub const MAX_BIJECTION_WORDS: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// `symbol_map[i]` is the image of symbol `i`.
    Labeled { symbol_map: Vec<Symbol> },
    /// `edge_map[e]` is the index of the image of edge `e`.
    Unlabeled { edge_map: Vec<usize> },
}

/// An isomorphism certificate from a first graph onto a second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub vertex_map: Vec<usize>,
    pub kind: WitnessKind,
}

impl IsoWitness {
    pub fn is_labeled(&self) -> bool {
        matches!(self.kind, WitnessKind::Labeled { .. })
    }

    pub fn symbol_map(&self) -> Option<&[Symbol]> {
        match &self.kind {
            WitnessKind::Labeled { symbol_map } => Some(symbol_map),
            WitnessKind::Unlabeled { .. } => None,
        }
    }

    /// An edge-level bijection. Labeled witnesses send each edge to the edge
    /// with the mapped endpoints and label.
    pub fn edge_map(&self, g1: &LabeledGraph, g2: &LabeledGraph) -> Result<Vec<usize>> {
        match &self.kind {
            WitnessKind::Unlabeled { edge_map } => Ok(edge_map.clone()),
            WitnessKind::Labeled { symbol_map } => {
                let mut used = vec![false; g2.edges().len()];
                let mut out = Vec::with_capacity(g1.edges().len());
                for e in g1.edges() {
                    let (s, d, l) = (self.vertex_map[e.src], self.vertex_map[e.dst], symbol_map[e.label.index()]);
                    let j = (0..g2.edges().len())
                        .find(|&j| !used[j] && g2.edges()[j] == crate::graph::Edge { src: s, dst: d, label: l })
                        .ok_or_else(|| Error::InvalidWitness("labeled witness misses an edge".into()))?;
                    used[j] = true;
                    out.push(j);
                }
                Ok(out)
            }
        }
    }

    /// The bijection of out-labels at vertex `v` induced by the witness.
    pub fn label_bijection(&self, g1: &LabeledGraph, g2: &LabeledGraph, v: usize) -> Result<Vec<(Symbol, Symbol)>> {
        let em = self.edge_map(g1, g2)?;
        let mut pairs: Vec<(Symbol, Symbol)> =
            g1.out_edges(v).map(|(i, e)| (e.label, g2.edges()[em[i]].label)).collect();
        pairs.sort();
        Ok(pairs)
    }

    /// Reverse witness from the second graph onto the first.
    pub fn inverse(&self, g1: &LabeledGraph) -> IsoWitness {
        let mut vertex_map = vec![0; self.vertex_map.len()];
        for (v, w) in self.vertex_map.iter().enumerate() {
            vertex_map[*w] = v;
        }
        let kind = match &self.kind {
            WitnessKind::Labeled { symbol_map } => {
                let mut inv = vec![Symbol(0); symbol_map.len()];
                for (i, s) in symbol_map.iter().enumerate() {
                    inv[s.index()] = Symbol(i as u32);
                }
                WitnessKind::Labeled { symbol_map: inv }
            }
            WitnessKind::Unlabeled { edge_map } => {
                let mut inv = vec![0; g1.edges().len()];
                for (e, f) in edge_map.iter().enumerate() {
                    inv[*f] = e;
                }
                WitnessKind::Unlabeled { edge_map: inv }
            }
        };
        IsoWitness { vertex_map, kind }
    }

    pub fn to_document(&self, g1: &FollowerSetGraph, g2: &FollowerSetGraph) -> WitnessDocument {
        let (a, b) = (g1.graph(), g2.graph());
        let vertex_map = self
            .vertex_map
            .iter()
            .enumerate()
            .map(|(v, w)| (a.vertex(v).id.clone(), b.vertex(*w).id.clone()))
            .collect();
        let (kind, symbol_map, edge_map) = match &self.kind {
            WitnessKind::Labeled { symbol_map } => (
                "labeled",
                Some(
                    symbol_map
                        .iter()
                        .enumerate()
                        .map(|(i, s)| {
                            (a.alphabet().token(Symbol(i as u32)).to_string(), b.alphabet().token(*s).to_string())
                        })
                        .collect(),
                ),
                None,
            ),
            WitnessKind::Unlabeled { edge_map } => {
                let show = |g: &LabeledGraph, i: usize| {
                    let e = &g.edges()[i];
                    [g.vertex(e.src).id.clone(), g.alphabet().token(e.label).to_string(), g.vertex(e.dst).id.clone()]
                };
                let pairs = edge_map.iter().enumerate().map(|(i, j)| EdgePair { from: show(a, i), to: show(b, *j) });
                ("unlabeled", None, Some(pairs.collect()))
            }
        };
        WitnessDocument { kind: kind.into(), vertex_map, symbol_map, edge_map }
    }
}

/// JSON form of a witness, with vertices named by id and symbols by token.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessDocument {
    pub kind: String,
    pub vertex_map: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol_map: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_map: Option<Vec<EdgePair>>,
}

/// An edge `[src, label, dst]` and its image.
#[derive(Clone, Debug, Serialize)]
pub struct EdgePair {
    pub from: [String; 3],
    pub to: [String; 3],
}

fn pinned_roots(g1: &FollowerSetGraph, g2: &FollowerSetGraph) -> Option<(usize, usize)> {
    g1.empty_class_vertex().zip(g2.empty_class_vertex())
}

/// Checks a witness edge by edge, independently of how it was found.
pub fn verify_witness(g1: &FollowerSetGraph, g2: &FollowerSetGraph, w: &IsoWitness) -> Result<()> {
    let (a, b) = (g1.graph(), g2.graph());
    let bad = |m: &str| Err(Error::InvalidWitness(m.to_string()));
    let n = a.vertex_count();
    if b.vertex_count() != n || w.vertex_map.len() != n {
        return bad("vertex counts differ");
    }
    if !is_permutation(&w.vertex_map, n) {
        return bad("vertex map is not a bijection");
    }
    if let Some((r1, r2)) = pinned_roots(g1, g2) {
        if w.vertex_map[r1] != r2 {
            return bad("empty class is not fixed");
        }
    }
    if a.edges().len() != b.edges().len() {
        return bad("edge counts differ");
    }
    match &w.kind {
        WitnessKind::Labeled { symbol_map } => {
            let d = a.alphabet().len();
            if b.alphabet().len() != d || symbol_map.len() != d {
                return bad("alphabet sizes differ");
            }
            if !is_permutation(&symbol_map.iter().map(|s| s.index()).collect::<Vec<_>>(), d) {
                return bad("symbol map is not a bijection");
            }
            let mut mapped: Vec<(usize, Symbol, usize)> = a
                .edges()
                .iter()
                .map(|e| (w.vertex_map[e.src], symbol_map[e.label.index()], w.vertex_map[e.dst]))
                .collect();
            let mut target: Vec<(usize, Symbol, usize)> = b.edges().iter().map(|e| (e.src, e.label, e.dst)).collect();
            mapped.sort();
            target.sort();
            if mapped != target {
                return bad("edges are not carried onto edges");
            }
        }
        WitnessKind::Unlabeled { edge_map } => {
            if edge_map.len() != a.edges().len() || !is_permutation(edge_map, b.edges().len()) {
                return bad("edge map is not a bijection");
            }
            for (e, f) in a.edges().iter().zip(edge_map) {
                let f = &b.edges()[*f];
                if f.src != w.vertex_map[e.src] || f.dst != w.vertex_map[e.dst] {
                    return bad("edge map does not respect endpoints");
                }
            }
        }
    }
    Ok(())
}

fn is_permutation(map: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    map.len() == n && map.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

// ---------------------------------------------------------------------------
// Labeled search

#[derive(Clone)]
struct LabeledState {
    pi: Vec<Option<Symbol>>,
    pinv: Vec<Option<Symbol>>,
    vmap: Vec<Option<usize>>,
    vinv: Vec<Option<usize>>,
}

impl LabeledState {
    fn bind_vertex(&mut self, v: usize, w: usize) -> bool {
        match (self.vmap[v], self.vinv[w]) {
            (Some(x), _) => x == w,
            (None, Some(_)) => false,
            (None, None) => {
                self.vmap[v] = Some(w);
                self.vinv[w] = Some(v);
                true
            }
        }
    }

    fn bind_symbol(&mut self, s: Symbol, r: Symbol) -> bool {
        match (self.pi[s.index()], self.pinv[r.index()]) {
            (Some(x), _) => x == r,
            (None, Some(_)) => false,
            (None, None) => {
                self.pi[s.index()] = Some(r);
                self.pinv[r.index()] = Some(s);
                true
            }
        }
    }
}

/// Out-edges grouped by label: `targets[v][s]` lists the targets of `s`-edges at `v`.
fn targets_by_label(g: &LabeledGraph) -> Vec<BTreeMap<Symbol, Vec<usize>>> {
    let mut t = vec![BTreeMap::<Symbol, Vec<usize>>::new(); g.vertex_count()];
    for e in g.edges() {
        t[e.src].entry(e.label).or_default().push(e.dst);
    }
    t
}

struct LabeledSearch<'a> {
    g1: &'a FollowerSetGraph,
    g2: &'a FollowerSetGraph,
    t1: Vec<BTreeMap<Symbol, Vec<usize>>>,
    t2: Vec<BTreeMap<Symbol, Vec<usize>>>,
    order: Vec<usize>,
    limit: usize,
    found: Vec<IsoWitness>,
}

impl LabeledSearch<'_> {
    /// Applies forced consequences; false on contradiction.
    fn propagate(&self, st: &mut LabeledState) -> bool {
        loop {
            let mut changed = false;
            for &v in &self.order {
                let Some(w) = st.vmap[v] else { continue };
                let (out1, out2) = (&self.t1[v], &self.t2[w]);
                if out1.len() != out2.len() {
                    return false;
                }
                for (s, ts1) in out1 {
                    let Some(r) = st.pi[s.index()] else { continue };
                    let Some(ts2) = out2.get(&r) else { return false };
                    if ts1.len() != ts2.len() {
                        return false;
                    }
                    if ts1.len() == 1 {
                        let fresh = st.vmap[ts1[0]].is_none();
                        if !st.bind_vertex(ts1[0], ts2[0]) {
                            return false;
                        }
                        changed |= fresh;
                    }
                }
                for r in out2.keys() {
                    if let Some(s) = st.pinv[r.index()] {
                        if !out1.contains_key(&s) {
                            return false;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&mut self, mut st: LabeledState) {
        if self.found.len() >= self.limit || !self.propagate(&mut st) {
            return;
        }
        // Branch on an unassigned label at a mapped vertex.
        for &v in &self.order {
            let Some(w) = st.vmap[v] else { continue };
            let open = self.t1[v].keys().find(|s| st.pi[s.index()].is_none()).copied();
            if let Some(s) = open {
                let choices: Vec<Symbol> =
                    self.t2[w].keys().filter(|r| st.pinv[r.index()].is_none()).copied().collect();
                for r in choices {
                    let mut next = st.clone();
                    next.bind_symbol(s, r);
                    self.search(next);
                }
                return;
            }
        }
        // Otherwise map the next unmapped vertex.
        if let Some(&v) = self.order.iter().find(|&&v| st.vmap[v].is_none()) {
            for w in 0..self.g2.vertex_count() {
                if st.vinv[w].is_none() {
                    let mut next = st.clone();
                    next.bind_vertex(v, w);
                    self.search(next);
                }
            }
            return;
        }
        // Complete the symbol map on symbols labeling no edge.
        let mut spare = (0..st.pinv.len()).filter(|r| st.pinv[*r].is_none());
        let symbol_map: Vec<Symbol> = st
            .pi
            .iter()
            .map(|s| s.unwrap_or_else(|| Symbol(spare.next().expect("alphabets have equal size") as u32)))
            .collect();
        let vertex_map = st.vmap.iter().map(|v| v.expect("all vertices mapped")).collect();
        let w = IsoWitness { vertex_map, kind: WitnessKind::Labeled { symbol_map } };
        if verify_witness(self.g1, self.g2, &w).is_ok() && !self.found.contains(&w) {
            self.found.push(w);
        }
    }
}

fn labeled_search(
    g1: &FollowerSetGraph,
    g2: &FollowerSetGraph,
    seed: Option<&[usize]>,
    limit: usize,
) -> Vec<IsoWitness> {
    let (a, b) = (g1.graph(), g2.graph());
    let d = a.alphabet().len();
    if b.alphabet().len() != d || a.vertex_count() != b.vertex_count() || a.edges().len() != b.edges().len() {
        return Vec::new();
    }
    let n = a.vertex_count();
    let mut st = LabeledState { pi: vec![None; d], pinv: vec![None; d], vmap: vec![None; n], vinv: vec![None; n] };
    if let Some((r1, r2)) = pinned_roots(g1, g2) {
        st.bind_vertex(r1, r2);
    }
    if let Some(seed) = seed {
        for (v, w) in seed.iter().enumerate() {
            if !st.bind_vertex(v, *w) {
                return Vec::new();
            }
        }
    }
    let mut s = LabeledSearch {
        g1,
        g2,
        t1: targets_by_label(a),
        t2: targets_by_label(b),
        order: a.bfs_order(g1.empty_class_vertex()),
        limit,
        found: Vec::new(),
    };
    s.search(st);
    s.found
}

/// A labeled isomorphism, if one exists.
pub fn labeled_isomorphism(g1: &FollowerSetGraph, g2: &FollowerSetGraph) -> Option<IsoWitness> {
    labeled_search(g1, g2, None, 1).pop()
}

/// Every labeled isomorphism.
pub fn all_labeled_isomorphisms(g1: &FollowerSetGraph, g2: &FollowerSetGraph) -> Vec<IsoWitness> {
    labeled_search(g1, g2, None, usize::MAX)
}

// ---------------------------------------------------------------------------
// Unlabeled search

struct UnlabeledSearch<'a> {
    c1: Vec<Vec<u64>>,
    c2: Vec<Vec<u64>>,
    sig1: Vec<(usize, usize, u64)>,
    sig2: Vec<(usize, usize, u64)>,
    order: Vec<usize>,
    g1: &'a LabeledGraph,
    g2: &'a LabeledGraph,
    limit: usize,
    found: Vec<IsoWitness>,
}

impl UnlabeledSearch<'_> {
    fn consistent(&self, vmap: &[Option<usize>], v: usize, w: usize) -> bool {
        if self.c1[v][v] != self.c2[w][w] {
            return false;
        }
        vmap.iter().enumerate().all(|(u, m)| match m {
            Some(x) => self.c1[v][u] == self.c2[w][*x] && self.c1[u][v] == self.c2[*x][w],
            None => true,
        })
    }

    fn search(&mut self, depth: usize, vmap: &mut Vec<Option<usize>>, used: &mut Vec<bool>, fixed: &[Option<usize>]) {
        if self.found.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            let vertex_map: Vec<usize> = vmap.iter().map(|v| v.expect("complete")).collect();
            let edge_map = pair_edges(self.g1, self.g2, &vertex_map);
            self.found.push(IsoWitness { vertex_map, kind: WitnessKind::Unlabeled { edge_map } });
            return;
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match fixed[v] {
            Some(w) => vec![w],
            None => (0..self.c2.len()).collect(),
        };
        for w in candidates {
            if used[w] || self.sig1[v] != self.sig2[w] || !self.consistent(vmap, v, w) {
                continue;
            }
            vmap[v] = Some(w);
            used[w] = true;
            self.search(depth + 1, vmap, used, fixed);
            vmap[v] = None;
            used[w] = false;
        }
    }
}

/// Pairs the parallel edges between mapped endpoints in label order.
fn pair_edges(g1: &LabeledGraph, g2: &LabeledGraph, vertex_map: &[usize]) -> Vec<usize> {
    let mut buckets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut idx: Vec<usize> = (0..g2.edges().len()).collect();
    idx.sort_by_key(|&j| g2.edges()[j].label);
    for j in idx {
        let e = &g2.edges()[j];
        buckets.entry((e.src, e.dst)).or_default().push(j);
    }
    for b in buckets.values_mut() {
        b.reverse();
    }
    let mut order: Vec<usize> = (0..g1.edges().len()).collect();
    order.sort_by_key(|&i| g1.edges()[i].label);
    let mut edge_map = vec![0; g1.edges().len()];
    for i in order {
        let e = &g1.edges()[i];
        let key = (vertex_map[e.src], vertex_map[e.dst]);
        edge_map[i] = buckets.get_mut(&key).and_then(Vec::pop).expect("edge counts agree");
    }
    edge_map
}

fn unlabeled_search(
    g1: &FollowerSetGraph,
    g2: &FollowerSetGraph,
    fixed_pairs: &[(usize, usize)],
    limit: usize,
) -> Vec<IsoWitness> {
    let (a, b) = (g1.graph(), g2.graph());
    let n = a.vertex_count();
    if b.vertex_count() != n || a.edges().len() != b.edges().len() {
        return Vec::new();
    }
    let sig = |g: &LabeledGraph, c: &Vec<Vec<u64>>| -> Vec<(usize, usize, u64)> {
        (0..g.vertex_count()).map(|v| (g.out_degree(v), g.in_degree(v), c[v][v])).collect()
    };
    let (c1, c2) = (a.adjacency(), b.adjacency());
    let mut fixed = vec![None; n];
    if let Some((r1, r2)) = pinned_roots(g1, g2) {
        fixed[r1] = Some(r2);
    }
    for &(v, w) in fixed_pairs {
        fixed[v] = Some(w);
    }
    let mut s = UnlabeledSearch {
        sig1: sig(a, &c1),
        sig2: sig(b, &c2),
        c1,
        c2,
        order: a.bfs_order(g1.empty_class_vertex()),
        g1: a,
        g2: b,
        limit,
        found: Vec::new(),
    };
    let mut sorted1 = s.sig1.clone();
    let mut sorted2 = s.sig2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return Vec::new();
    }
    s.search(0, &mut vec![None; n], &mut vec![false; n], &fixed);
    s.found
}

/// An isomorphism of the underlying unlabeled multigraphs, if one exists.
pub fn unlabeled_isomorphism(g1: &FollowerSetGraph, g2: &FollowerSetGraph) -> Option<IsoWitness> {
    unlabeled_search(g1, g2, &[], 1).pop()
}

/// Every unlabeled isomorphism, one per vertex bijection (parallel edges are
/// paired in label order).
pub fn all_unlabeled_isomorphisms(g1: &FollowerSetGraph, g2: &FollowerSetGraph) -> Vec<IsoWitness> {
    unlabeled_search(g1, g2, &[], usize::MAX)
}

// ---------------------------------------------------------------------------
// Word bijections

/// The table of `f_n`: each allowable word of length `n` is traced as a path
/// from the empty class and relabeled edge by edge through the witness.
pub fn lpc_word_bijection(
    w: &IsoWitness,
    g1: &FollowerSetGraph,
    g2: &FollowerSetGraph,
    n: usize,
) -> Result<BTreeMap<Word, Word>> {
    verify_witness(g1, g2, w)?;
    let (a, b) = (g1.graph(), g2.graph());
    let em = w.edge_map(a, b)?;
    let root = g1.root()?;
    let mut layer: Vec<(Word, Word, usize)> = vec![(Word::empty(), Word::empty(), root)];
    for _ in 0..n {
        let mut next = Vec::new();
        for (mu, image, v) in &layer {
            for (i, e) in a.out_edges(*v) {
                next.push((mu.prepend(e.label), image.prepend(b.edges()[em[i]].label), e.dst));
            }
        }
        if next.len() > MAX_BIJECTION_WORDS {
            return Err(Error::ResourceLimit(format!("f_{n} would list more than {MAX_BIJECTION_WORDS} words")));
        }
        layer = next;
    }
    let mut map = BTreeMap::new();
    for (mu, image, _) in layer {
        if map.insert(mu, image).is_some() {
            return Err(Error::InvalidArgument("first graph is not resolving".into()));
        }
    }
    Ok(map)
}

/// Whether the single-symbol words lie in pairwise distinct vertices.
pub fn follower_injective_on_symbols(g: &FollowerSetGraph) -> bool {
    let mut seen = Vec::new();
    for s in g.alphabet().symbols() {
        let w = Word::new(vec![s]);
        let v = g
            .vertex_of(&w)
            .or_else(|| g.graph().vertices().iter().position(|v| v.words.contains(&w)));
        match v {
            Some(v) if !seen.contains(&v) => seen.push(v),
            _ => return false,
        }
    }
    true
}

/// A labeled isomorphism with the given vertex map, if one exists.
pub fn lift_vertex_map(g1: &FollowerSetGraph, g2: &FollowerSetGraph, vertex_map: &[usize]) -> Option<IsoWitness> {
    labeled_search(g1, g2, Some(vertex_map), 1).pop()
}

/// Tries to turn an unlabeled witness into a labeled one, first with the
/// witness's own vertex map and then with any vertex map at all. `None` means
/// no unlabeled isomorphism lifts.
pub fn lift_unlabeled_to_labeled(
    g1: &FollowerSetGraph,
    g2: &FollowerSetGraph,
    w: &IsoWitness,
) -> Result<Option<IsoWitness>> {
    verify_witness(g1, g2, w)?;
    if let Some(l) = lift_vertex_map(g1, g2, &w.vertex_map) {
        return Ok(Some(l));
    }
    // The vertex map of a labeled isomorphism is itself an unlabeled
    // isomorphism, so searching all labeled ones covers every witness.
    Ok(labeled_isomorphism(g1, g2))
}

/// Composition `second ∘ first` of vertex maps.
pub fn compose_vertex_maps(first: &[usize], second: &[usize]) -> Vec<usize> {
    first.iter().map(|v| second[*v]).collect()
}

/// Whether `vertex_map` preserves edge multiplicities of `g`.
pub fn is_unlabeled_automorphism(g: &LabeledGraph, vertex_map: &[usize]) -> bool {
    let c = g.adjacency();
    let n = g.vertex_count();
    is_permutation(vertex_map, n)
        && (0..n).all(|u| (0..n).all(|v| c[u][v] == c[vertex_map[u]][vertex_map[v]]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fsg::{build_fsg, build_fsg_from_presentation};
    use crate::language::{enumerate_allowable, LanguageSpec};

    fn fsg(spec: &LanguageSpec) -> FollowerSetGraph {
        build_fsg(spec).unwrap()
    }

    fn even() -> FollowerSetGraph {
        build_fsg_from_presentation(&corpus::even_shift()).unwrap()
    }

    fn ids(g: &FollowerSetGraph, w: &IsoWitness, h: &FollowerSetGraph) -> Vec<(String, String)> {
        w.vertex_map
            .iter()
            .enumerate()
            .map(|(v, x)| (g.graph().vertex(v).id.clone(), h.graph().vertex(*x).id.clone()))
            .collect()
    }

    #[test]
    fn identity_is_a_labeled_witness() {
        let g = fsg(&corpus::first());
        let w = labeled_isomorphism(&g, &g).unwrap();
        assert_eq!(w.vertex_map, (0..5).collect::<Vec<_>>());
        assert_eq!(w.symbol_map().unwrap(), &[Symbol(0), Symbol(1)]);
        verify_witness(&g, &g, &w).unwrap();
    }

    #[test]
    fn even_shift_and_001_are_not_labeled_isomorphic() {
        let (e, m) = (even(), fsg(&corpus::sft_001()));
        assert!(labeled_isomorphism(&e, &m).is_none());
        let w = unlabeled_isomorphism(&e, &m).unwrap();
        verify_witness(&e, &m, &w).unwrap();
        assert_eq!(
            ids(&e, &w, &m),
            [("F(∅)", "F(∅)"), ("F(1)", "F(1)"), ("F(01)", "F(01)")].map(|(a, b)| (a.to_string(), b.to_string()))
        );
    }

    #[test]
    fn even_shift_word_bijection() {
        let (e, m) = (even(), fsg(&corpus::sft_001()));
        let w = unlabeled_isomorphism(&e, &m).unwrap();
        let sp = corpus::sft_001();
        let word = |s: &str| sp.parse_word(s).unwrap();
        let f4 = lpc_word_bijection(&w, &e, &m, 4).unwrap();
        assert_eq!(f4[&word("0010")], word("1010"));
        let f1 = lpc_word_bijection(&w, &e, &m, 1).unwrap();
        let f3 = lpc_word_bijection(&w, &e, &m, 3).unwrap();
        let split = f3[&word("010")].after(&f1[&word("0")]);
        assert_eq!(split, word("0010"));
        assert_ne!(f4[&word("0010")], split);

        let f0 = lpc_word_bijection(&w, &e, &m, 0).unwrap();
        assert_eq!(f0.into_iter().collect::<Vec<_>>(), vec![(Word::empty(), Word::empty())]);
    }

    #[test]
    fn not_same_sft_pair() {
        let (l, m) = corpus::not_same_sft();
        let (gl, gm) = (fsg(&l), fsg(&m));
        assert_eq!((gl.vertex_count(), gl.edge_count()), (4, 12));
        assert!(labeled_isomorphism(&gl, &gm).is_none());
        assert!(unlabeled_isomorphism(&gl, &gm).is_some());
        assert!(!follower_injective_on_symbols(&gl));
    }

    #[test]
    fn counter1_has_one_witness_that_does_not_lift() {
        let (l, m) = corpus::counter1();
        let (gl, gm) = (fsg(&l), fsg(&m));
        let all = all_unlabeled_isomorphisms(&gl, &gm);
        assert_eq!(all.len(), 1);
        assert!(lift_unlabeled_to_labeled(&gl, &gm, &all[0]).unwrap().is_none());
    }

    #[test]
    fn counter2_has_two_witnesses_neither_lifts() {
        let (l, m) = corpus::counter2();
        let (gl, gm) = (fsg(&l), fsg(&m));
        let all = all_unlabeled_isomorphisms(&gl, &gm);
        assert_eq!(all.len(), 2);
        for w in &all {
            verify_witness(&gl, &gm, w).unwrap();
            assert!(lift_vertex_map(&gl, &gm, &w.vertex_map).is_none());
            assert!(lift_unlabeled_to_labeled(&gl, &gm, w).unwrap().is_none());
        }
    }

    #[test]
    fn ring_and_golden_mean_differ() {
        let ring = fsg(&corpus::full(2));
        let gm = fsg(&corpus::golden_mean());
        assert!(unlabeled_isomorphism(&ring, &gm).is_none());
        assert!(follower_injective_on_symbols(&gm));
        assert!(!follower_injective_on_symbols(&ring));
    }

    #[test]
    fn degenerate_type1_graphs_lift_under_swap() {
        let specs = corpus::degenerate_type1();
        let swapped = |i: usize| specs[[0, 1, 3, 2][i]].clone();
        for (i, spec) in specs.iter().enumerate() {
            let (a, b) = (fsg(spec), fsg(&swapped(i)));
            let w = unlabeled_isomorphism(&a, &b).unwrap();
            let lifted = lift_unlabeled_to_labeled(&a, &b, &w).unwrap().unwrap();
            verify_witness(&a, &b, &lifted).unwrap();
        }
    }

    #[test]
    fn relabeled_type1_language_round_trips() {
        let a = LanguageSpec::from_strs(&["0", "1", "2"], &["12", "21"]).unwrap();
        let b = LanguageSpec::from_strs(&["0", "1", "2"], &["20", "02"]).unwrap();
        let (ga, gb) = (fsg(&a), fsg(&b));
        assert!(follower_injective_on_symbols(&ga));
        let w = unlabeled_isomorphism(&ga, &gb).unwrap();
        let l = lift_unlabeled_to_labeled(&ga, &gb, &w).unwrap().unwrap();
        // The permutation must carry 1,2 onto 2,0 in some order and fix nothing else.
        let pi = l.symbol_map().unwrap();
        assert_eq!(pi[0], Symbol(1));
        let back = l.inverse(ga.graph());
        verify_witness(&gb, &ga, &back).unwrap();
    }

    #[test]
    fn invalid_witness_is_rejected() {
        let (e, m) = (even(), fsg(&corpus::sft_001()));
        let mut w = unlabeled_isomorphism(&e, &m).unwrap();
        w.vertex_map.swap(1, 2);
        assert!(matches!(lift_unlabeled_to_labeled(&e, &m, &w), Err(Error::InvalidWitness(_))));
    }

    #[test]
    fn f_n_is_a_bijection_onto_b_n() {
        let (e, m) = (even(), fsg(&corpus::sft_001()));
        let w = unlabeled_isomorphism(&e, &m).unwrap();
        let sp = corpus::sft_001();
        for n in 0..=10 {
            let f = lpc_word_bijection(&w, &e, &m, n).unwrap();
            let image: std::collections::BTreeSet<Word> = f.values().cloned().collect();
            assert_eq!(image.len(), f.len());
            assert_eq!(image, enumerate_allowable(&sp, n));
        }
    }

    #[test]
    fn symmetric_witnesses_compose_to_automorphisms() {
        let (l, m) = corpus::counter2();
        let (gl, gm) = (fsg(&l), fsg(&m));
        let fwd = unlabeled_isomorphism(&gl, &gm).unwrap();
        let back = unlabeled_isomorphism(&gm, &gl).unwrap();
        assert!(is_unlabeled_automorphism(gl.graph(), &compose_vertex_maps(&fwd.vertex_map, &back.vertex_map)));
        assert!(is_unlabeled_automorphism(gm.graph(), &compose_vertex_maps(&back.vertex_map, &fwd.vertex_map)));
    }
}
