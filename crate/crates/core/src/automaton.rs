//! Subset construction over labeled graphs and Moore partition refinement.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::language::{Symbol, Word};

/// Hard cap on the number of subset states explored.
pub const MAX_SUBSET_STATES: usize = 1 << 20;

/// The reachable part of the subset automaton of a labeled graph.
///
/// State `E` moves under symbol `i` to the set of targets of `i`-edges whose
/// source lies in `E`; the empty set is discarded.
#[derive(Clone, Debug)]
pub struct SubsetAutomaton {
    pub states: Vec<Vec<usize>>,
    /// `transitions[q][i]` is the state reached from `q` under symbol `i`.
    pub transitions: Vec<Vec<Option<usize>>>,
    /// Shortlex-least word reaching each state from one of the start states.
    pub representatives: Vec<Word>,
}

impl SubsetAutomaton {
    /// Explores breadth first from `starts`, one word length at a time.
    pub fn explore(g: &LabeledGraph, starts: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let d = g.alphabet().len();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut states = Vec::new();
        let mut representatives = Vec::new();
        for s in starts {
            if s.is_empty() || index.contains_key(&s) {
                continue;
            }
            index.insert(s.clone(), states.len());
            states.push(s);
            representatives.push(Word::empty());
        }
        let mut transitions: Vec<Vec<Option<usize>>> = Vec::new();
        let mut frontier: Vec<usize> = (0..states.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &q in &frontier {
                let mut row = vec![None; d];
                for (i, slot) in row.iter_mut().enumerate() {
                    let s = Symbol(i as u32);
                    let target = g.step_set(&states[q], s);
                    if target.is_empty() {
                        continue;
                    }
                    let candidate = representatives[q].prepend(s);
                    let t = match index.get(&target) {
                        Some(&t) => {
                            // Same-level discoveries keep the least representative.
                            if next.contains(&t) && candidate < representatives[t] {
                                representatives[t] = candidate;
                            }
                            t
                        }
                        None => {
                            if states.len() >= cap {
                                return Err(Error::ResourceLimit(format!(
                                    "subset construction exceeded {cap} states"
                                )));
                            }
                            let t = states.len();
                            index.insert(target.clone(), t);
                            states.push(target);
                            representatives.push(candidate);
                            next.push(t);
                            t
                        }
                    };
                    *slot = Some(t);
                }
                debug_assert_eq!(transitions.len(), q);
                transitions.push(row);
            }
            frontier = next;
        }
        Ok(SubsetAutomaton { states, transitions, representatives })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

/// Moore refinement of a deterministic partial automaton in which every state
/// accepts. Two states end in the same block iff they admit the same set of
/// label sequences. Blocks are numbered by first occurrence in state order.
pub fn moore_refine(n: usize, labels: usize, delta: impl Fn(usize, usize) -> Option<usize>) -> Vec<usize> {
    let mut block = vec![0usize; n];
    let mut count = usize::from(n > 0);
    loop {
        let mut ids: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
        let mut next = vec![0usize; n];
        for q in 0..n {
            let sig = (block[q], (0..labels).map(|i| delta(q, i).map(|t| block[t])).collect::<Vec<_>>());
            let fresh = ids.len();
            next[q] = *ids.entry(sig).or_insert(fresh);
        }
        let new_count = ids.len();
        block = next;
        if new_count == count {
            return block;
        }
        count = new_count;
    }
}
