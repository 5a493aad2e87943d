//! Edge-labeled directed multigraphs, their JSON document form and DOT export.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::language::{Alphabet, Convention, Symbol, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    /// Representative words attached to the vertex; may be empty.
    pub words: Vec<Word>,
}

impl Vertex {
    pub fn new(id: impl Into<String>) -> Self {
        Vertex { id: id.into(), words: Vec::new() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: Symbol,
}

/// A finite directed multigraph whose edges carry symbols of an alphabet.
///
/// Paths are read right to left: the path labeled `iμ` is the path labeled
/// `μ` followed by an `i`-edge leaving its terminal vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    alphabet: Alphabet,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

/// A labeled graph used as the description of a sofic language.
pub type Presentation = LabeledGraph;

impl LabeledGraph {
    pub fn new(alphabet: Alphabet, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        let mut ids = BTreeSet::new();
        for v in &vertices {
            if !ids.insert(v.id.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate vertex id {:?}", v.id)));
            }
            for w in &v.words {
                alphabet.check_word(w)?;
            }
        }
        for e in &edges {
            if e.src >= vertices.len() || e.dst >= vertices.len() {
                return Err(Error::InvalidArgument(format!("edge {e:?} references a missing vertex")));
            }
            if !alphabet.contains(e.label) {
                return Err(Error::AlphabetMismatch(format!("edge label id {} outside alphabet", e.label.0)));
            }
        }
        Ok(LabeledGraph { alphabet, vertices, edges })
    }

    /// Builds a graph from printed tokens, vertex ids and `(src, dst, label)` triples.
    pub fn from_triples(tokens: &[&str], vertex_ids: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let alphabet = Alphabet::new(tokens.iter().copied())?;
        let vertices: Vec<Vertex> = vertex_ids.iter().map(|id| Vertex::new(*id)).collect();
        let find = |id: &str| {
            vertex_ids
                .iter()
                .position(|v| *v == id)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown vertex {id:?}")))
        };
        let edges = edges
            .iter()
            .map(|(s, d, l)| {
                let label = alphabet
                    .symbol(l)
                    .ok_or_else(|| Error::AlphabetMismatch(format!("unknown label {l:?}")))?;
                Ok(Edge { src: find(s)?, dst: find(d)?, label })
            })
            .collect::<Result<Vec<_>>>()?;
        LabeledGraph::new(alphabet, vertices, edges)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    /// Out-edges of `v` with their edge indices.
    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = (usize, &Edge)> + '_ {
        self.edges.iter().enumerate().filter(move |(_, e)| e.src == v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.src == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.dst == v).count()
    }

    pub fn out_labels(&self, v: usize) -> BTreeSet<Symbol> {
        self.out_edges(v).map(|(_, e)| e.label).collect()
    }

    /// Target of the first `s`-labeled edge leaving `v`.
    pub fn successor(&self, v: usize, s: Symbol) -> Option<usize> {
        self.edges.iter().find(|e| e.src == v && e.label == s).map(|e| e.dst)
    }

    /// Targets of `s`-labeled edges leaving any vertex of `set`, sorted.
    pub fn step_set(&self, set: &[usize], s: Symbol) -> Vec<usize> {
        let mut mark = vec![false; self.vertices.len()];
        for v in set {
            mark[*v] = true;
        }
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| e.label == s && mark[e.src])
            .map(|e| e.dst)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Terminal vertices of all paths labeled `w` starting anywhere.
    pub fn reach_set(&self, w: &Word) -> Vec<usize> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        self.reach_set_from(&all, w)
    }

    pub fn reach_set_from(&self, start: &[usize], w: &Word) -> Vec<usize> {
        let mut cur = start.to_vec();
        for s in w.path_order() {
            if cur.is_empty() {
                break;
            }
            cur = self.step_set(&cur, s);
        }
        cur
    }

    pub fn is_resolving(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert((e.src, e.label)))
    }

    /// Adjacency counts, `a[u][v]` = number of edges `u → v`.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.vertices.len();
        let mut a = vec![vec![0u64; n]; n];
        for e in &self.edges {
            a[e.src][e.dst] += 1;
        }
        a
    }

    /// The labeled subgraph induced on `keep` (in the given order).
    pub fn induced_subgraph(&self, keep: &[usize]) -> LabeledGraph {
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let vertices = keep.iter().map(|v| self.vertices[*v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| Some(Edge { src: *pos.get(&e.src)?, dst: *pos.get(&e.dst)?, label: e.label }))
            .collect();
        LabeledGraph { alphabet: self.alphabet.clone(), vertices, edges }
    }

    pub(crate) fn relabel(&self, alphabet: Alphabet, f: impl Fn(Symbol) -> Symbol) -> LabeledGraph {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { id: v.id.clone(), words: v.words.iter().map(|w| w.map_symbols(&f)).collect() })
            .collect();
        let edges = self.edges.iter().map(|e| Edge { label: f(e.label), ..*e }).collect();
        LabeledGraph { alphabet, vertices, edges }
    }

    pub(crate) fn with_edges(&self, alphabet: Alphabet, edges: Vec<Edge>) -> LabeledGraph {
        LabeledGraph { alphabet, vertices: self.vertices.clone(), edges }
    }

    /// Reorders vertices so that `order[i]` becomes vertex `i`; edges are
    /// sorted by `(src, label, dst)`.
    pub(crate) fn permuted(&self, order: &[usize]) -> LabeledGraph {
        let mut pos = vec![usize::MAX; self.vertices.len()];
        for (i, v) in order.iter().enumerate() {
            pos[*v] = i;
        }
        let vertices = order.iter().map(|v| self.vertices[*v].clone()).collect();
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge { src: pos[e.src], dst: pos[e.dst], label: e.label })
            .collect();
        edges.sort_by_key(|e| (e.src, e.label, e.dst));
        LabeledGraph { alphabet: self.alphabet.clone(), vertices, edges }
    }

    /// Breadth-first order from `root`, visiting out-edges by increasing
    /// label; unreachable vertices follow in index order.
    pub fn bfs_order(&self, root: Option<usize>) -> Vec<usize> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let starts: Vec<usize> = root.into_iter().chain(0..n).collect();
        for start in starts {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                let mut outs: Vec<&Edge> = self.edges.iter().filter(|e| e.src == v).collect();
                outs.sort_by_key(|e| (e.label, e.dst));
                for e in outs {
                    if !seen[e.dst] {
                        seen[e.dst] = true;
                        queue.push_back(e.dst);
                    }
                }
            }
        }
        order
    }

    /// Vertices reachable from `root` along edges.
    pub fn reachable_from(&self, root: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([root]);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for e in self.edges.iter().filter(|e| e.src == v) {
                if seen.insert(e.dst) {
                    queue.push_back(e.dst);
                }
            }
        }
        seen
    }

    /// All labels of paths with `n` edges, starting anywhere.
    pub fn path_words(&self, n: usize) -> BTreeSet<Word> {
        let start: Vec<usize> = (0..self.vertices.len()).collect();
        self.path_words_from(&start, n)
    }

    /// Labels of `n`-edge paths starting in `start`.
    pub fn path_words_from(&self, start: &[usize], n: usize) -> BTreeSet<Word> {
        let mut layer: Vec<(Word, Vec<usize>)> = vec![(Word::empty(), start.to_vec())];
        for _ in 0..n {
            let mut next = Vec::new();
            for (w, set) in &layer {
                for s in self.alphabet.symbols() {
                    let t = self.step_set(set, s);
                    if !t.is_empty() {
                        next.push((w.prepend(s), t));
                    }
                }
            }
            layer = next;
        }
        layer.into_iter().map(|(w, _)| w).collect()
    }

    pub fn to_dot(&self, name: &str, root: Option<usize>, convention: Convention) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
        for (i, v) in self.vertices.iter().enumerate() {
            let label = if v.words.is_empty() {
                v.id.clone()
            } else {
                v.words
                    .iter()
                    .map(|w| self.alphabet.display_word(&convention.orient(w.clone())))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let shape = if root == Some(i) { ", shape=doublecircle" } else { "" };
            let _ = writeln!(out, "  n{i} [label=\"{}\"{shape}];", escape(&label));
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.src, e.dst, escape(self.alphabet.token(e.label)));
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Extra information recorded alongside a graph document.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dropped_symbols: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl GraphMeta {
    fn is_empty(&self) -> bool {
        self == &GraphMeta::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub src: String,
    pub dst: String,
    pub label: String,
}

/// The JSON document form of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub alphabet: Vec<String>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub empty_class_vertex: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<GraphMeta>,
}

impl GraphDocument {
    pub fn from_graph(g: &LabeledGraph, root: Option<usize>, meta: &GraphMeta, convention: Convention) -> Self {
        let a = &g.alphabet;
        GraphDocument {
            alphabet: a.tokens().to_vec(),
            vertices: g
                .vertices
                .iter()
                .map(|v| VertexDoc {
                    id: v.id.clone(),
                    words: (!v.words.is_empty())
                        .then(|| v.words.iter().map(|w| a.format_word(&convention.orient(w.clone()))).collect()),
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    src: g.vertices[e.src].id.clone(),
                    dst: g.vertices[e.dst].id.clone(),
                    label: a.token(e.label).to_string(),
                })
                .collect(),
            empty_class_vertex: root.map(|r| g.vertices[r].id.clone()),
            meta: (!meta.is_empty()).then(|| meta.clone()),
        }
    }

    /// Returns the graph, the recorded empty-class vertex, and the metadata.
    pub fn into_graph(self, convention: Convention) -> Result<(LabeledGraph, Option<usize>, GraphMeta)> {
        let alphabet = Alphabet::new(self.alphabet)?;
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for v in self.vertices {
            let words = v
                .words
                .unwrap_or_default()
                .iter()
                .map(|w| alphabet.parse_word(w).map(|w| convention.orient(w)))
                .collect::<Result<Vec<_>>>()?;
            vertices.push(Vertex { id: v.id, words });
        }
        let find = |id: &str| {
            vertices
                .iter()
                .position(|v| v.id == id)
                .ok_or_else(|| Error::InvalidArgument(format!("edge references unknown vertex {id:?}")))
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let label = alphabet
                .symbol(&e.label)
                .ok_or_else(|| Error::AlphabetMismatch(format!("unknown edge label {:?}", e.label)))?;
            edges.push(Edge { src: find(&e.src)?, dst: find(&e.dst)?, label });
        }
        let root = self.empty_class_vertex.as_deref().map(find).transpose()?;
        let g = LabeledGraph::new(alphabet, vertices, edges)?;
        Ok((g, root, self.meta.unwrap_or_default()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
