//! Follower set graphs.
//!
//! The follower set of an allowable word `μ` is `F(μ) = {w : wμ allowable}`.
//! The follower set graph has one vertex per distinct follower set and an
//! `i`-labeled edge `F(μ) → F(iμ)` whenever `iμ` is allowable.
//!
//! Two builders are provided. For a finite forbidden set the classes are read
//! off a finite truth table (words of length at most `k` tested against each
//! other). For a labeled-graph presentation the classes are the states of the
//! minimized subset automaton started from the set of all vertices.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::automaton::{moore_refine, SubsetAutomaton, MAX_SUBSET_STATES};
use crate::error::{Error, Result};
use crate::graph::{Edge, GraphDocument, GraphMeta, LabeledGraph, Presentation, Vertex};
use crate::language::{
    enumerate_layers, Alphabet, Backend, Convention, ForbiddenSet, LanguageSpec, LanguageType, Symbol, Word,
    WordPartition,
};

/// A labeled, resolving, follower-separated graph whose vertices are
/// follower-set classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FollowerSetGraph {
    graph: LabeledGraph,
    empty_class: Option<usize>,
    meta: GraphMeta,
}

impl FollowerSetGraph {
    /// Wraps a graph without checking the structural invariants; see [`validate_fsg`].
    pub fn from_parts(graph: LabeledGraph, empty_class: Option<usize>, meta: GraphMeta) -> Self {
        FollowerSetGraph { graph, empty_class, meta }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.graph.alphabet()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edges().len()
    }

    /// The vertex holding `F(∅)`, when recorded.
    pub fn empty_class_vertex(&self) -> Option<usize> {
        self.empty_class
    }

    pub fn root(&self) -> Result<usize> {
        self.empty_class
            .ok_or_else(|| Error::InvalidArgument("graph does not record its empty-class vertex".into()))
    }

    pub fn meta(&self) -> &GraphMeta {
        &self.meta
    }

    /// The vertex `F(μ)`: the end of the path labeled `μ` from the empty class.
    pub fn vertex_of(&self, mu: &Word) -> Option<usize> {
        let mut v = self.empty_class?;
        for s in mu.path_order() {
            v = self.graph.successor(v, s)?;
        }
        Some(v)
    }

    pub fn vertex_by_id(&self, id: &str) -> Option<usize> {
        self.graph.vertex_index(id)
    }

    /// Member words of every vertex, as a partition.
    pub fn vertex_partition(&self) -> WordPartition {
        let mut p: WordPartition = self
            .graph
            .vertices()
            .iter()
            .map(|v| {
                let mut w = v.words.clone();
                w.sort();
                w
            })
            .filter(|c| !c.is_empty())
            .collect();
        p.sort_by(|a, b| a[0].cmp(&b[0]));
        p
    }

    /// Labels of all `n`-step paths starting at the empty class.
    pub fn words_from_root(&self, n: usize) -> Result<std::collections::BTreeSet<Word>> {
        Ok(self.graph.path_words_from(&[self.root()?], n))
    }

    /// Reorders vertices breadth first from the empty class with edges visited
    /// by increasing label.
    pub fn canonicalized(&self) -> FollowerSetGraph {
        let order = self.graph.bfs_order(self.empty_class);
        let graph = self.graph.permuted(&order);
        let empty_class = self.empty_class.map(|r| order.iter().position(|v| *v == r).unwrap_or(0));
        FollowerSetGraph { graph, empty_class, meta: self.meta.clone() }
    }

    /// Equality of the canonical edge structure, ignoring vertex names and words.
    pub fn same_structure(&self, other: &FollowerSetGraph) -> bool {
        let a = self.canonicalized();
        let b = other.canonicalized();
        a.alphabet() == b.alphabet()
            && a.vertex_count() == b.vertex_count()
            && a.empty_class == b.empty_class
            && a.graph.edges() == b.graph.edges()
    }

    pub fn to_document(&self, convention: Convention) -> GraphDocument {
        GraphDocument::from_graph(&self.graph, self.empty_class, &self.meta, convention)
    }

    pub fn to_json(&self, convention: Convention) -> String {
        self.to_document(convention).to_json()
    }

    pub fn from_json(text: &str, convention: Convention) -> Result<Self> {
        let (graph, root, meta) = GraphDocument::from_json(text)?.into_graph(convention)?;
        Ok(FollowerSetGraph { graph, empty_class: root, meta })
    }

    pub fn to_dot(&self, name: &str, convention: Convention) -> String {
        self.graph.to_dot(name, self.empty_class, convention)
    }
}

/// The table of the finite-type construction. Rows and columns are indexed by
/// the allowable words of length at most `k` in shortlex order (so the empty
/// word comes first); cell `(μ_i, μ_j)` records whether `μ_j μ_i` is allowable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    words: Vec<Word>,
    cells: Vec<Vec<bool>>,
}

impl TruthTable {
    pub fn build(spec: &LanguageSpec, k: usize) -> Result<Self> {
        let fs = spec
            .forbidden_set()
            .ok_or_else(|| Error::UnsupportedBackend("truth tables need a finite forbidden set".into()))?;
        let words: Vec<Word> = enumerate_layers(spec, k).into_iter().flatten().collect();
        let cells = words
            .iter()
            .map(|row| words.iter().map(|col| !fs.forbids(&row.after(col))).collect())
            .collect();
        Ok(TruthTable { words, cells })
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.cells[i]
    }

    pub fn cell(&self, row: usize, col: usize) -> bool {
        self.cells[row][col]
    }

    /// Plain-text rendering with `#` for forbidden concatenations.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        let names: Vec<String> = self.words.iter().map(|w| alphabet.display_word(w)).collect();
        let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(1);
        let mut out = format!("{:width$} |", "");
        for n in &names {
            let _ = write!(out, " {n:>width$}");
        }
        out.push('\n');
        for (i, n) in names.iter().enumerate() {
            let _ = write!(out, "{n:>width$} |");
            for c in &self.cells[i] {
                let _ = write!(out, " {:>width$}", if *c { "." } else { "#" });
            }
            out.push('\n');
        }
        out
    }
}

/// Builds the follower set graph of the language of any backend.
pub fn build_fsg(spec: &LanguageSpec) -> Result<FollowerSetGraph> {
    match spec.backend() {
        Backend::Forbidden(_) => build_fsg_for_spec(spec),
        Backend::Presentation(p) => {
            let mut g = build_fsg_from_presentation(p)?;
            g.meta.dropped_symbols = spec.dropped_symbols().to_vec();
            Ok(g)
        }
    }
}

/// The finite-type construction from a forbidden set.
pub fn build_fsg_finite_type(fs: &ForbiddenSet, alphabet: &Alphabet) -> Result<FollowerSetGraph> {
    if alphabet.is_empty() {
        return Err(Error::InvalidArgument("alphabet is empty".into()));
    }
    let spec = LanguageSpec::finite_type(alphabet.clone(), fs.words().iter().cloned())?;
    build_fsg_for_spec(&spec)
}

fn build_fsg_for_spec(spec: &LanguageSpec) -> Result<FollowerSetGraph> {
    let fs = spec.forbidden_set().expect("caller checked the backend");
    let alphabet = spec.alphabet().clone();
    let mut meta = GraphMeta {
        k: None,
        dropped_symbols: spec.dropped_symbols().to_vec(),
        source: Some("forbidden-set".into()),
    };

    let k = match fs.language_type() {
        LanguageType::Free => {
            // Single vertex with one loop per symbol.
            let mut words = vec![Word::empty()];
            words.extend(alphabet.symbols().map(|s| Word::new(vec![s])));
            let vertex = Vertex { id: "F(∅)".into(), words };
            let edges = alphabet.symbols().map(|s| Edge { src: 0, dst: 0, label: s }).collect();
            let graph = LabeledGraph::new(alphabet, vec![vertex], edges)?;
            return Ok(FollowerSetGraph { graph, empty_class: Some(0), meta });
        }
        LanguageType::Finite(k) => k,
    };
    meta.k = Some(k);

    let table = TruthTable::build(spec, k)?;
    let mut row_node: HashMap<&[bool], usize> = HashMap::new();
    let mut nodes: Vec<Vec<Word>> = Vec::new();
    for (i, w) in table.words().iter().enumerate() {
        let fresh = nodes.len();
        let n = *row_node.entry(table.row(i)).or_insert(fresh);
        if n == fresh {
            nodes.push(Vec::new());
        }
        nodes[n].push(w.clone());
    }

    // Words of length k + 1 join the class of their leftmost k symbols.
    for node in &mut nodes {
        let extra: Vec<Word> = node
            .iter()
            .filter(|w| w.len() == k)
            .flat_map(|w| alphabet.symbols().map(move |s| w.append(s)))
            .filter(|w| !fs.forbids(w))
            .collect();
        node.extend(extra);
        node.sort();
    }

    let node_of: HashMap<&Word, usize> =
        nodes.iter().enumerate().flat_map(|(n, ws)| ws.iter().map(move |w| (w, n))).collect();
    let mut edges = Vec::new();
    for (n, ws) in nodes.iter().enumerate() {
        let base = ws.iter().find(|w| w.len() <= k).expect("every class has a word of length at most k");
        for s in alphabet.symbols() {
            if let Some(&t) = node_of.get(&base.prepend(s)) {
                edges.push(Edge { src: n, dst: t, label: s });
            }
        }
    }

    let root = node_of[&Word::empty()];
    let vertices = nodes
        .into_iter()
        .map(|words| Vertex { id: format!("F({})", alphabet.display_word(&words[0])), words })
        .collect();
    let graph = LabeledGraph::new(alphabet, vertices, edges)?;
    Ok(FollowerSetGraph { graph, empty_class: Some(root), meta }.canonicalized())
}

/// Follower set graph of the language presented by `p` (all finite path
/// labels). Vertices carry their shortlex-least representative word.
pub fn build_fsg_from_presentation(p: &Presentation) -> Result<FollowerSetGraph> {
    let spec = LanguageSpec::from_presentation(p.clone())?;
    let p = match spec.backend() {
        Backend::Presentation(g) => g,
        Backend::Forbidden(_) => unreachable!(),
    };
    let alphabet = p.alphabet().clone();
    let d = alphabet.len();
    let all: Vec<usize> = (0..p.vertex_count()).collect();
    let sa = SubsetAutomaton::explore(p, vec![all], MAX_SUBSET_STATES)?;
    let block = moore_refine(sa.len(), d, |q, i| sa.transitions[q][i]);
    let blocks = block.iter().max().map_or(0, |m| m + 1);

    let mut reps: Vec<Option<Word>> = vec![None; blocks];
    let mut first_state = vec![usize::MAX; blocks];
    for (q, b) in block.iter().enumerate() {
        if first_state[*b] == usize::MAX {
            first_state[*b] = q;
        }
        let r = &sa.representatives[q];
        if reps[*b].as_ref().is_none_or(|cur| r < cur) {
            reps[*b] = Some(r.clone());
        }
    }
    let mut edges = Vec::new();
    for (b, &q) in first_state.iter().enumerate() {
        for (i, t) in sa.transitions[q].iter().enumerate() {
            if let Some(t) = t {
                edges.push(Edge { src: b, dst: block[*t], label: Symbol(i as u32) });
            }
        }
    }
    let vertices = reps
        .into_iter()
        .map(|r| {
            let r = r.expect("every block has a state");
            Vertex { id: format!("F({})", alphabet.display_word(&r)), words: vec![r] }
        })
        .collect();
    let graph = LabeledGraph::new(alphabet, vertices, edges)?;
    let meta = GraphMeta {
        k: None,
        dropped_symbols: spec.dropped_symbols().to_vec(),
        source: Some("presentation".into()),
    };
    Ok(FollowerSetGraph { graph, empty_class: Some(block[0]), meta }.canonicalized())
}

/// Adds a fresh symbol `zeta` with an edge from every vertex to the empty class.
pub fn augment_with_zeta(g: &FollowerSetGraph, zeta: &str) -> Result<FollowerSetGraph> {
    let root = g.root()?;
    let (alphabet, z) = g.alphabet().with_token(zeta)?;
    let mut edges = g.graph.edges().to_vec();
    edges.extend((0..g.vertex_count()).map(|v| Edge { src: v, dst: root, label: z }));
    edges.sort_by_key(|e| (e.src, e.label, e.dst));
    let graph = g.graph.with_edges(alphabet, edges);
    let mut meta = g.meta.clone();
    meta.source = Some(format!("{}+augmented", meta.source.as_deref().unwrap_or("graph")));
    Ok(FollowerSetGraph { graph, empty_class: Some(root), meta })
}

/// Outcome of [`validate_fsg`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// `(vertex, label)` pairs with more than one out-edge.
    pub resolving_violations: Vec<(usize, Symbol)>,
    /// Pairs of distinct vertices with identical follower languages.
    pub indistinguishable_pairs: Vec<(usize, usize)>,
    pub root_recorded: bool,
    pub unreachable: Vec<usize>,
}

impl ValidationReport {
    pub fn resolving(&self) -> bool {
        self.resolving_violations.is_empty()
    }

    pub fn follower_separated(&self) -> bool {
        self.indistinguishable_pairs.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.resolving() && self.follower_separated() && self.root_recorded && self.unreachable.is_empty()
    }

    pub fn render(&self, g: &FollowerSetGraph) -> String {
        let gr = g.graph();
        let id = |v: usize| gr.vertex(v).id.clone();
        let mut out = String::new();
        let _ = writeln!(out, "resolving: {}", self.resolving());
        for (v, s) in &self.resolving_violations {
            let _ = writeln!(out, "  {} emits several edges labeled {}", id(*v), gr.alphabet().token(*s));
        }
        let _ = writeln!(out, "follower-separated: {}", self.follower_separated());
        for (a, b) in &self.indistinguishable_pairs {
            let _ = writeln!(out, "  {} and {} have the same follower set", id(*a), id(*b));
        }
        let _ = writeln!(out, "empty class recorded: {}", self.root_recorded);
        let _ = writeln!(out, "all vertices reachable: {}", self.unreachable.is_empty());
        for v in &self.unreachable {
            let _ = writeln!(out, "  {} is unreachable", id(*v));
        }
        let _ = writeln!(out, "verdict: {}", if self.passed() { "pass" } else { "fail" });
        out
    }
}

/// Checks the structural invariants of a follower set graph.
pub fn validate_fsg(g: &FollowerSetGraph) -> ValidationReport {
    let gr = g.graph();
    let mut report = ValidationReport { root_recorded: g.empty_class.is_some(), ..Default::default() };

    let mut count: BTreeMap<(usize, Symbol), usize> = BTreeMap::new();
    for e in gr.edges() {
        *count.entry((e.src, e.label)).or_default() += 1;
    }
    report.resolving_violations = count.into_iter().filter(|(_, c)| *c > 1).map(|(k, _)| k).collect();

    // Follower languages of single vertices, compared through the subset automaton.
    let n = gr.vertex_count();
    let starts: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    match SubsetAutomaton::explore(gr, starts, MAX_SUBSET_STATES) {
        Ok(sa) => {
            let block = moore_refine(sa.len(), gr.alphabet().len(), |q, i| sa.transitions[q][i]);
            let state_of = |v: usize| sa.states.iter().position(|s| s == &vec![v]).expect("start state");
            for a in 0..n {
                for b in a + 1..n {
                    if block[state_of(a)] == block[state_of(b)] {
                        report.indistinguishable_pairs.push((a, b));
                    }
                }
            }
        }
        Err(_) => report.indistinguishable_pairs.push((usize::MAX, usize::MAX)),
    }

    if let Some(root) = g.empty_class {
        let seen = gr.reachable_from(root);
        report.unreachable = (0..n).filter(|v| !seen.contains(v)).collect();
    }
    report
}
