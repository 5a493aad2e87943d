//! Synchronizing words, intrinsically synchronizing vertices and Fischer covers.
//!
//! A word `w` is synchronizing for a labeled graph when every path labeled `w`
//! ends at the same vertex. In a follower set graph the terminal vertices of
//! synchronizing words span the Fischer cover whenever the language is
//! irreducible.

use std::collections::{BTreeMap, BTreeSet};

use crate::automaton::{SubsetAutomaton, MAX_SUBSET_STATES};
use crate::equivalence::IsoWitness;
use crate::error::{Error, Result};
use crate::fsg::FollowerSetGraph;
use crate::graph::{Edge, LabeledGraph};
use crate::language::Word;

/// Note attached to covers of languages that are not shown to be irreducible.
pub const REDUCIBLE_NOTE: &str = "minimal synchronizing subgraph (Fischer cover only if irreducible)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynchronizationReport {
    pub word: Word,
    pub synchronizing: bool,
    /// Terminal vertices of all paths labeled `word`.
    pub terminal_set: Vec<usize>,
    pub terminal_vertex: Option<usize>,
    /// Two paths labeled `word` ending at distinct vertices, as vertex
    /// sequences from start to end, when the word is not synchronizing.
    pub witness_paths: Option<(Vec<usize>, Vec<usize>)>,
}

/// Decides whether every path labeled `w` ends at the same vertex.
pub fn is_synchronizing_word(g: &LabeledGraph, w: &Word) -> Result<SynchronizationReport> {
    g.alphabet().check_word(w)?;
    let steps: Vec<_> = w.path_order().collect();
    let mut layers = vec![(0..g.vertex_count()).collect::<Vec<_>>()];
    for s in &steps {
        let next = g.step_set(layers.last().expect("nonempty"), *s);
        layers.push(next);
    }
    let end = layers.last().expect("nonempty").clone();
    if end.is_empty() {
        return Err(Error::WordNotAllowable(g.alphabet().display_word(w)));
    }
    let synchronizing = end.len() == 1;
    let witness_paths = (!synchronizing).then(|| (trace_back(g, &layers, &steps, end[0]), trace_back(g, &layers, &steps, end[1])));
    Ok(SynchronizationReport {
        word: w.clone(),
        synchronizing,
        terminal_vertex: synchronizing.then(|| end[0]),
        terminal_set: end,
        witness_paths,
    })
}

fn trace_back(g: &LabeledGraph, layers: &[Vec<usize>], steps: &[crate::language::Symbol], end: usize) -> Vec<usize> {
    let mut path = vec![end];
    let mut cur = end;
    for j in (0..steps.len()).rev() {
        let prev = g
            .edges()
            .iter()
            .find(|e| e.dst == cur && e.label == steps[j] && layers[j].binary_search(&e.src).is_ok())
            .expect("every vertex of a layer has a predecessor in the previous one")
            .src;
        path.push(prev);
        cur = prev;
    }
    path.reverse();
    path
}

/// For every vertex reachable as the single end of a synchronizing word, the
/// shortlex-least such word.
pub fn synchronizing_words(g: &LabeledGraph) -> Result<BTreeMap<usize, Word>> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let sa = SubsetAutomaton::explore(g, vec![all], MAX_SUBSET_STATES)?;
    let mut out = BTreeMap::new();
    for (state, rep) in sa.states.iter().zip(&sa.representatives) {
        if let [v] = state[..] {
            out.entry(v).and_modify(|w: &mut Word| *w = w.clone().min(rep.clone())).or_insert_with(|| rep.clone());
        }
    }
    Ok(out)
}

/// Vertices that are the follower sets of intrinsically synchronizing words.
pub fn intrinsically_synchronizing_vertices(g: &FollowerSetGraph) -> Result<BTreeSet<usize>> {
    Ok(synchronizing_words(g.graph())?.into_keys().collect())
}

/// Strong connectivity of the underlying directed graph.
pub fn is_irreducible(g: &LabeledGraph) -> Result<bool> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Degenerate("graph has no vertices".into()));
    }
    if g.reachable_from(0).len() != n {
        return Ok(false);
    }
    let reversed: Vec<Edge> = g.edges().iter().map(|e| Edge { src: e.dst, dst: e.src, label: e.label }).collect();
    let r = g.with_edges(g.alphabet().clone(), reversed);
    Ok(r.reachable_from(0).len() == n)
}

/// The synchronizing subgraph of a follower set graph.
#[derive(Clone, Debug)]
pub struct FischerCover {
    pub graph: LabeledGraph,
    /// Vertices of the source graph kept in the cover, in cover order.
    pub vertices: Vec<usize>,
    pub irreducibility: IrreducibilityReport,
    /// Set when the language is not shown to be irreducible.
    pub note: Option<&'static str>,
}

/// Language-level irreducibility: the synchronizing subgraph must be strongly
/// connected and present the same words as the whole graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub cover_strongly_connected: bool,
    /// Word lengths compared, `0..=bound`.
    pub bound: usize,
    /// First length at which the word sets differ.
    pub first_difference: Option<usize>,
    /// The comparison ran out of new subset pairs before reaching `bound`, so
    /// "no difference" holds for words of every length.
    pub exact: bool,
    pub irreducible: bool,
}

/// Default comparison length for covers: `2|V| + 2`. It is a heuristic bound.
pub fn default_language_bound(g: &LabeledGraph) -> usize {
    2 * g.vertex_count() + 2
}

/// Shortest length `≤ bound` at which the two graphs present different path
/// labels, with a flag telling whether the search closed before the bound.
///
/// Breadth-first search over pairs of reachable vertex sets: a word is a path
/// label exactly when its reachable set is nonempty.
fn compare_languages(a: &LabeledGraph, b: &LabeledGraph, bound: usize) -> Result<(Option<usize>, bool)> {
    if a.alphabet().len() != b.alphabet().len() {
        return Err(Error::AlphabetMismatch("graphs have alphabets of different sizes".into()));
    }
    let start = ((0..a.vertex_count()).collect::<Vec<_>>(), (0..b.vertex_count()).collect::<Vec<_>>());
    if start.0.is_empty() != start.1.is_empty() {
        return Ok((Some(0), true));
    }
    let mut seen: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    seen.insert(start.clone());
    let mut layer = vec![start];
    for n in 1..=bound {
        let mut next = Vec::new();
        for (sa, sb) in &layer {
            for s in a.alphabet().symbols() {
                let pair = (a.step_set(sa, s), b.step_set(sb, s));
                match (pair.0.is_empty(), pair.1.is_empty()) {
                    (true, true) => {}
                    (false, false) => {
                        if seen.insert(pair.clone()) {
                            next.push(pair);
                        }
                    }
                    _ => return Ok((Some(n), true)),
                }
            }
        }
        if seen.len() > MAX_SUBSET_STATES {
            return Err(Error::ResourceLimit(format!("more than {MAX_SUBSET_STATES} subset pairs")));
        }
        if next.is_empty() {
            return Ok((None, true));
        }
        layer = next;
    }
    Ok((None, false))
}

/// First length `≤ bound` at which the two graphs present different words.
pub fn first_language_difference(a: &LabeledGraph, b: &LabeledGraph, bound: usize) -> Result<Option<usize>> {
    Ok(compare_languages(a, b, bound)?.0)
}

pub fn fischer_cover(g: &FollowerSetGraph) -> Result<FischerCover> {
    fischer_cover_with_bound(g, default_language_bound(g.graph()))
}

pub fn fischer_cover_with_bound(g: &FollowerSetGraph, bound: usize) -> Result<FischerCover> {
    let keep: Vec<usize> = intrinsically_synchronizing_vertices(g)?.into_iter().collect();
    if keep.is_empty() {
        return Err(Error::Degenerate("no vertex is reached by a synchronizing word".into()));
    }
    let graph = g.graph().induced_subgraph(&keep);
    let cover_strongly_connected = is_irreducible(&graph)?;
    let (first_difference, exact) = compare_languages(&graph, g.graph(), bound)?;
    let irreducible = cover_strongly_connected && first_difference.is_none();
    let irreducibility = IrreducibilityReport { cover_strongly_connected, bound, first_difference, exact, irreducible };
    Ok(FischerCover { graph, vertices: keep, irreducibility, note: (!irreducible).then_some(REDUCIBLE_NOTE) })
}

/// Image of the subgraph of `g1` induced on `vertices` under an isomorphism
/// onto `g2`: mapped vertices, and for each kept edge its image edge.
pub fn transport_subgraph(
    g1: &FollowerSetGraph,
    g2: &FollowerSetGraph,
    w: &IsoWitness,
    vertices: &[usize],
) -> Result<LabeledGraph> {
    crate::equivalence::verify_witness(g1, g2, w)?;
    let (a, b) = (g1.graph(), g2.graph());
    let em = w.edge_map(a, b)?;
    let image: Vec<usize> = vertices.iter().map(|v| w.vertex_map[*v]).collect();
    let pos = |v: usize| image.iter().position(|x| *x == v).expect("endpoint kept");
    let mut edges: Vec<Edge> = a
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| vertices.contains(&e.src) && vertices.contains(&e.dst))
        .map(|(i, _)| {
            let f = &b.edges()[em[i]];
            Edge { src: pos(f.src), dst: pos(f.dst), label: f.label }
        })
        .collect();
    edges.sort_by_key(|e| (e.src, e.label, e.dst));
    let vertices = image.iter().map(|v| b.vertex(*v).clone()).collect();
    LabeledGraph::new(b.alphabet().clone(), vertices, edges)
}
