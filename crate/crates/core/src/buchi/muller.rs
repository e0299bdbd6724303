use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{BuchiAutomaton, LassoRun, Transition, TransitionSystem, EXPLORE_LIMIT};
use crate::error::{Error, Result};
use crate::format::{parse_raw, RawAutomaton};
use crate::graph::{nontrivial_components, tarjan_scc, Explored};
use crate::omega::LassoWord;

/// Largest strongly connected component whose subsets are enumerated when
/// converting Büchi acceptance to Muller acceptance.
const SUBSET_CAP: usize = 20;

/// A Muller automaton `(Q, I, T, 𝓕)`.
#[derive(Clone, Debug)]
pub struct MullerAutomaton {
    ts: TransitionSystem,
    acc_sets: Vec<BTreeSet<usize>>,
}

impl MullerAutomaton {
    pub fn new(ts: TransitionSystem, acc_sets: impl IntoIterator<Item = BTreeSet<usize>>) -> Result<MullerAutomaton> {
        let mut sets: Vec<BTreeSet<usize>> = acc_sets.into_iter().collect();
        if sets.iter().flatten().any(|&q| q >= ts.num_states()) {
            return Err(Error::input("accepting set mentions an unknown state"));
        }
        sets.sort();
        sets.dedup();
        Ok(MullerAutomaton { ts, acc_sets: sets })
    }

    pub fn system(&self) -> &TransitionSystem {
        &self.ts
    }

    pub fn acc_sets(&self) -> &[BTreeSet<usize>] {
        &self.acc_sets
    }

    pub fn accepts(&self, w: &LassoWord<String>) -> Result<Option<LassoRun>> {
        let w = self.ts.alphabet().encode(w)?;
        self.accepts_indices(&w)
    }

    /// An accepting run whose loop visits exactly the states of some member
    /// of `𝓕`. Evaluated directly on the product with the word.
    pub fn accepts_indices(&self, w: &LassoWord<usize>) -> Result<Option<LassoRun>> {
        let g = self.ts.word_product(w)?;
        for set in &self.acc_sets {
            if set.is_empty() {
                continue;
            }
            let inside: Vec<bool> = g.nodes.iter().map(|(q, _)| set.contains(q)).collect();
            let succ: Vec<Vec<usize>> = g
                .edges
                .iter()
                .enumerate()
                .map(|(v, es)| if inside[v] { es.iter().map(|&(_, u)| u).filter(|&u| inside[u]).collect() } else { Vec::new() })
                .collect();
            let comp = tarjan_scc(g.nodes.len(), &succ);
            let nontrivial = nontrivial_components(&succ, &comp);
            let mut members: Vec<Vec<usize>> = vec![Vec::new(); nontrivial.len()];
            for v in (0..g.nodes.len()).filter(|&v| inside[v]) {
                members[comp[v]].push(v);
            }
            for (c, vs) in members.iter().enumerate() {
                if !nontrivial[c] {
                    continue;
                }
                let states: BTreeSet<usize> = vs.iter().map(|&v| g.nodes[v].0).collect();
                if states != *set {
                    continue;
                }
                // A closed walk from vs[0] through one vertex per state.
                let start = vs[0];
                let mut stops: Vec<usize> = Vec::new();
                for &q in set {
                    stops.push(*vs.iter().find(|&&v| g.nodes[v].0 == q).unwrap());
                }
                stops.push(start);
                let mut cycle = Vec::new();
                let mut at = start;
                for &target in &stops {
                    if target == at && !cycle.is_empty() {
                        continue;
                    }
                    cycle.extend(walk(&g, at, target, |u| comp[u] == c && inside[u]));
                    at = target;
                }
                let path = g.path_to(start);
                return Ok(Some(LassoWord::from_parts(path, cycle).expect("closed walk is nonempty")));
            }
        }
        Ok(None)
    }

    /// Replays `run` on `w` and checks the loop's state set against `𝓕`.
    pub fn is_accepting_run(&self, run: &LassoRun, w: &LassoWord<usize>) -> bool {
        self.ts.is_run_on(run, w) && self.acc_sets.contains(&self.ts.inf_states(run))
    }

    /// Guess-the-set-and-breakpoint conversion to Büchi acceptance.
    pub fn to_buchi(&self) -> Result<BuchiAutomaton> {
        muller_to_buchi(self)
    }

    pub(crate) fn from_raw(raw: &RawAutomaton) -> Result<MullerAutomaton> {
        if raw.accepting.is_some() {
            return Err(Error::parse(1, 1, "`accepting:` belongs to Büchi automata"));
        }
        if let Some(t) = raw.trans.iter().find(|t| t.weight.is_some()) {
            return Err(Error::parse(t.line, 1, "unexpected weight in an unweighted automaton"));
        }
        let (ts, _) = TransitionSystem::from_raw(raw)?;
        let sets = raw.accsets.iter().flatten().map(|s| s.iter().map(|n| ts.state_index(n).unwrap()).collect::<BTreeSet<_>>()).collect::<Vec<_>>();
        MullerAutomaton::new(ts, sets)
    }

    pub(crate) fn fmt_accsets(&self) -> String {
        let sets: Vec<String> = self
            .acc_sets
            .iter()
            .map(|s| format!("{{{}}}", s.iter().map(|&q| self.ts.states()[q].as_str()).collect::<Vec<_>>().join(" ")))
            .collect();
        sets.join(" ")
    }
}

/// Shortest walk from `from` to `to` (nonempty when `from == to`) inside `allowed`.
fn walk(g: &Explored<(usize, usize), usize>, from: usize, to: usize, allowed: impl Fn(usize) -> bool) -> Vec<usize> {
    if from == to {
        return g.cycle_through(from, allowed).expect("nontrivial component has a cycle");
    }
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.nodes.len()];
    let mut queue = std::collections::VecDeque::from([from]);
    let mut seen = vec![false; g.nodes.len()];
    seen[from] = true;
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for (k, &(_, w)) in g.edges[u].iter().enumerate() {
            if allowed(w) && !seen[w] {
                seen[w] = true;
                prev[w] = Some((u, k));
                queue.push_back(w);
            }
        }
    }
    let mut labels = Vec::new();
    let mut x = to;
    while x != from {
        let (p, k) = prev[x].expect("target lies in the same component");
        labels.push(g.edges[p][k].0);
        x = p;
    }
    labels.reverse();
    labels
}

impl FromStr for MullerAutomaton {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MullerAutomaton::from_raw(&parse_raw(s, &[])?)
    }
}

impl fmt::Display for MullerAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ts.fmt_body(f)?;
        writeln!(f, "accsets: {}", self.fmt_accsets())?;
        for t in self.ts.transitions() {
            writeln!(f, "{}", self.ts.fmt_transition(t))?;
        }
        Ok(())
    }
}

/// Whether the subgraph induced by `set` is strongly connected and has an edge.
fn is_cycle_set(set: &[usize], succ: &[Vec<usize>]) -> bool {
    let inside = |q: usize| set.binary_search(&q).is_ok();
    let reach = |edges: &dyn Fn(usize) -> Vec<usize>| {
        let mut seen = vec![set[0]];
        let mut stack = vec![set[0]];
        while let Some(q) = stack.pop() {
            for r in edges(q) {
                if inside(r) && !seen.contains(&r) {
                    seen.push(r);
                    stack.push(r);
                }
            }
        }
        seen.len() == set.len()
    };
    let has_edge = set.iter().any(|&q| succ[q].iter().any(|&r| inside(r)));
    let fwd = |q: usize| succ[q].clone();
    let bwd = |q: usize| (0..succ.len()).filter(|&p| succ[p].contains(&q)).collect();
    has_edge && reach(&fwd) && reach(&bwd)
}

pub(crate) fn buchi_to_muller(a: &BuchiAutomaton) -> Result<MullerAutomaton> {
    let ts = a.system();
    let n = ts.num_states();
    let succ: Vec<Vec<usize>> = (0..n).map(|q| ts.out(q).iter().map(|&t| ts.transitions()[t].to).collect()).collect();
    let comp = tarjan_scc(n, &succ);
    let mut sets = Vec::new();
    let count = comp.iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..count {
        let members: Vec<usize> = (0..n).filter(|&q| comp[q] == c).collect();
        if !members.iter().any(|&q| a.is_accepting(q)) {
            continue;
        }
        if members.len() > SUBSET_CAP {
            return Err(Error::Resource(format!("component of {} states is too large for Muller conversion", members.len())));
        }
        for mask in 1u64..(1 << members.len()) {
            let set: Vec<usize> = (0..members.len()).filter(|&i| mask >> i & 1 == 1).map(|i| members[i]).collect();
            if set.iter().any(|&q| a.is_accepting(q)) && is_cycle_set(&set, &succ) {
                sets.push(set.into_iter().collect());
            }
        }
    }
    MullerAutomaton::new(ts.clone(), sets)
}

/// Büchi automaton with states `Q ∪ (Q × 𝓕 × 2^Q)`: a run guesses the final
/// set, stays inside it, and accepts whenever every state of the set has been
/// seen since the last breakpoint.
pub fn muller_to_buchi(m: &MullerAutomaton) -> Result<BuchiAutomaton> {
    let ts = m.system();
    let n = ts.num_states();
    if n > 64 {
        return Err(Error::Resource("Muller to Büchi conversion supports at most 64 states".into()));
    }
    let sets: Vec<u64> = m.acc_sets().iter().filter(|s| !s.is_empty()).map(|s| s.iter().fold(0u64, |acc, &q| acc | 1 << q)).collect();
    // None: still guessing; Some((i, seen)): committed to set i.
    type Node = (usize, Option<(usize, u64)>);
    let reset = |seen: u64, set: u64| if seen == set { 0 } else { seen };
    let enter = |q: usize| -> Vec<Node> {
        let mut v = vec![(q, None)];
        for (i, &s) in sets.iter().enumerate() {
            if s >> q & 1 == 1 {
                v.push((q, Some((i, reset(1 << q, s)))));
            }
        }
        v
    };
    let roots: Vec<Node> = ts.initial().iter().flat_map(|&q| enter(q)).collect();
    let g = Explored::explore(roots, EXPLORE_LIMIT, |&(q, tag)| {
        let mut succ = Vec::new();
        for &t in ts.out(q) {
            let t = ts.transitions()[t];
            match tag {
                None => succ.extend(enter(t.to).into_iter().map(|v| (t.letter, v))),
                Some((i, seen)) => {
                    if sets[i] >> t.to & 1 == 1 {
                        succ.push((t.letter, (t.to, Some((i, reset(seen | 1 << t.to, sets[i]))))));
                    }
                }
            }
        }
        succ
    })
    .ok_or_else(|| Error::Resource("Muller to Büchi conversion too large".into()))?;
    let names = g
        .nodes
        .iter()
        .map(|(q, tag)| match tag {
            None => ts.states()[*q].clone(),
            Some((i, seen)) => format!("{}.F{}.{:x}", ts.states()[*q], i, seen),
        })
        .collect();
    let trans = g.edges.iter().enumerate().flat_map(|(v, es)| es.iter().map(move |&(l, w)| Transition::new(v, l, w))).collect();
    let acc = (0..g.nodes.len()).filter(|&v| matches!(g.nodes[v].1, Some((_, 0))));
    BuchiAutomaton::new(ts.alphabet().clone(), names, g.roots.clone(), acc, trans)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> LassoWord<String> {
        s.parse().unwrap()
    }

    #[test]
    fn no_accepting_states_gives_no_sets() {
        let a = BuchiAutomaton::from_names(&["a"], &["q"], &[], &[("q", "a", "q")]).unwrap();
        assert!(a.to_muller().unwrap().acc_sets().is_empty());
        assert!(a.to_muller().unwrap().to_buchi().unwrap().is_empty());
    }

    #[test]
    fn single_loop() {
        let a = BuchiAutomaton::from_names(&["a"], &["q"], &["q"], &[("q", "a", "q")]).unwrap();
        let m = a.to_muller().unwrap();
        assert_eq!(m.acc_sets(), &[BTreeSet::from([0])]);
        assert!(m.accepts(&word("(a)")).unwrap().is_some());
        assert!(m.to_buchi().unwrap().accepts(&word("(a)")).unwrap().is_some());
    }

    #[test]
    fn exact_set_semantics() {
        // Accepting set {p, q}: the run must alternate forever.
        let m: MullerAutomaton = "alphabet: a b\ninitial: p\naccsets: {p q}\ntrans: p a p\ntrans: p b q\ntrans: q a p\n".parse().unwrap();
        let w = m.system().alphabet().encode(&word("(a b)")).unwrap();
        let run = m.accepts_indices(&w).unwrap().unwrap();
        assert!(m.is_accepting_run(&run, &w));
        assert!(m.accepts(&word("(a)")).unwrap().is_none());
        let b = m.to_buchi().unwrap();
        assert!(b.accepts(&word("(a b)")).unwrap().is_some());
        assert!(b.accepts(&word("a b (a)")).unwrap().is_none());
        let again: MullerAutomaton = m.to_string().parse().unwrap();
        assert_eq!(again.to_string(), m.to_string());
    }
}
