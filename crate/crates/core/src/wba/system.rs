//! States and weighted transitions shared by the Büchi and Muller flavours.

use std::fmt::{self, Write as _};

use crate::buchi::{Alphabet, LassoRun, Transition, TransitionSystem, EXPLORE_LIMIT};
use crate::error::{Error, Result};
use crate::format::RawAutomaton;
use crate::graph::Explored;
use crate::omega::LassoWord;
use crate::valuation::ValuationStructure;

use super::product::{ProductEdge, ProductGraph};

/// A transition `(from, letter, to)` carrying a weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedTransition<W> {
    pub from: usize,
    pub letter: usize,
    pub to: usize,
    pub weight: W,
}

impl<W> WeightedTransition<W> {
    pub fn new(from: usize, letter: usize, to: usize, weight: W) -> Self {
        WeightedTransition { from, letter, to, weight }
    }

    pub fn unweighted(&self) -> Transition {
        Transition::new(self.from, self.letter, self.to)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct WeightedSystem<W> {
    pub alphabet: Alphabet,
    pub states: Vec<String>,
    pub initial: Vec<usize>,
    /// Sorted, no exact duplicates; parallel transitions with different
    /// weights are kept.
    pub trans: Vec<WeightedTransition<W>>,
    pub out: Vec<Vec<usize>>,
}

impl<W: Clone + Ord + fmt::Display> WeightedSystem<W> {
    pub fn build(alphabet: Alphabet, states: Vec<String>, mut initial: Vec<usize>, mut trans: Vec<WeightedTransition<W>>) -> Result<Self> {
        let n = states.len();
        let mut seen = std::collections::HashSet::new();
        if let Some(s) = states.iter().find(|s| !seen.insert(*s)) {
            return Err(Error::input(format!("state `{s}` declared twice")));
        }
        initial.sort_unstable();
        initial.dedup();
        if let Some(q) = initial.iter().find(|&&q| q >= n) {
            return Err(Error::input(format!("initial state index {q} out of range")));
        }
        if let Some(t) = trans.iter().find(|t| t.from >= n || t.to >= n || t.letter >= alphabet.len()) {
            return Err(Error::input(format!("transition ({}, {}, {}) refers to an unknown state or letter", t.from, t.letter, t.to)));
        }
        trans.sort();
        trans.dedup();
        let mut out = vec![Vec::new(); n];
        for (i, t) in trans.iter().enumerate() {
            out[t.from].push(i);
        }
        Ok(WeightedSystem { alphabet, states, initial, trans, out })
    }

    /// Reads states, letters and weighted transitions from a parsed file.
    pub fn from_raw<S: ValuationStructure<Weight = W>>(structure: &S, raw: &RawAutomaton) -> Result<Self> {
        let (ts, _) = TransitionSystem::from_raw(raw)?;
        let mut trans = Vec::with_capacity(raw.trans.len());
        for rt in &raw.trans {
            let Some(text) = &rt.weight else {
                return Err(Error::parse(rt.line, 1, "weighted transitions are written `trans: from letter to weight`"));
            };
            let weight = structure.parse_weight(text).map_err(|e| Error::parse(rt.line, 1, e.to_string()))?;
            let from = ts.state_index(&rt.from).expect("interned");
            let to = ts.state_index(&rt.to).expect("interned");
            let letter = ts.alphabet().index_of(&rt.letter).expect("interned");
            trans.push(WeightedTransition::new(from, letter, to, weight));
        }
        Self::build(ts.alphabet().clone(), ts.states().to_vec(), ts.initial().to_vec(), trans)
    }

    pub fn has_parallel(&self) -> bool {
        self.trans.windows(2).any(|p| p[0].unweighted() == p[1].unweighted())
    }

    /// The transition system with weights dropped. Without parallel
    /// transitions, transition `i` here is transition `i` there.
    pub fn underlying(&self) -> TransitionSystem {
        let trans = self.trans.iter().map(WeightedTransition::unweighted).collect();
        TransitionSystem::build(self.alphabet.clone(), self.states.clone(), self.initial.clone(), trans)
            .expect("a valid weighted system has a valid underlying system")
            .0
    }

    /// First weighted transition with the same endpoints and letter.
    pub fn lift(&self, t: Transition) -> usize {
        self.trans.partition_point(|u| u.unweighted() < t)
    }

    pub fn explore(&self, w: &LassoWord<usize>) -> Result<Explored<(usize, usize), usize>> {
        if let Some(a) = w.prefix().iter().chain(w.period()).find(|&&a| a >= self.alphabet.len()) {
            return Err(Error::input(format!("letter index {a} outside the alphabet")));
        }
        let roots = self.initial.iter().map(|&q| (q, 0));
        Explored::explore(roots, EXPLORE_LIMIT, |&(q, pos)| {
            let a = *w.at(pos);
            let next = w.next_pos(pos);
            self.out[q].iter().filter(|&&t| self.trans[t].letter == a).map(|&t| (t, (self.trans[t].to, next))).collect()
        })
        .ok_or_else(|| Error::Resource("product of automaton and word is too large".into()))
    }

    pub fn product_graph(&self, w: &LassoWord<usize>, accepting: impl Fn(usize) -> bool) -> Result<ProductGraph<W>> {
        let x = self.explore(w)?;
        let mut edges = Vec::new();
        for (v, es) in x.edges.iter().enumerate() {
            for &(t, u) in es {
                edges.push(ProductEdge { from: v, to: u, transition: t, weight: self.trans[t].weight.clone() });
            }
        }
        let acc = x.nodes.iter().map(|&(q, _)| accepting(q)).collect();
        ProductGraph::from_parts(x.nodes.clone(), x.roots.clone(), acc, edges)
    }

    pub fn is_run_on(&self, run: &LassoRun, w: &LassoWord<usize>) -> bool {
        if run.prefix().iter().chain(run.period()).any(|&t| t >= self.trans.len()) {
            return false;
        }
        if !self.initial.contains(&self.trans[*run.at(0)].from) {
            return false;
        }
        let (p, l) = crate::omega::common_shape([run, w]);
        (0..p + l + 1).all(|i| {
            let t = &self.trans[*run.at(i)];
            t.letter == *w.at(i) && t.to == self.trans[*run.at(i + 1)].from
        })
    }

    pub fn weights(&self, run: &LassoRun) -> Result<LassoWord<W>> {
        if let Some(t) = run.prefix().iter().chain(run.period()).find(|&&t| t >= self.trans.len()) {
            return Err(Error::input(format!("transition index {t} out of range")));
        }
        Ok(run.map(|&t| self.trans[t].weight.clone()))
    }

    pub fn inf_states(&self, run: &LassoRun) -> std::collections::BTreeSet<usize> {
        run.canonical().period().iter().map(|&t| self.trans[t].from).collect()
    }

    pub fn state_list(&self, qs: impl IntoIterator<Item = usize>) -> String {
        qs.into_iter().map(|q| self.states[q].as_str()).collect::<Vec<_>>().join(" ")
    }

    /// Everything but the acceptance line.
    pub fn fmt_head(&self, header: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "structure: {header}");
        let _ = writeln!(s, "alphabet: {}", self.alphabet.letters().join(" "));
        let _ = writeln!(s, "states: {}", self.states.join(" "));
        let _ = writeln!(s, "initial: {}", self.state_list(self.initial.iter().copied()));
        s
    }

    pub fn fmt_trans(&self) -> String {
        let mut s = String::new();
        for t in &self.trans {
            let _ = writeln!(s, "trans: {} {} {} {}", self.states[t.from], self.alphabet.name(t.letter), self.states[t.to], t.weight);
        }
        s
    }
}
