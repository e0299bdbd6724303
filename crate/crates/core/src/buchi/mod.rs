//! Unweighted Büchi and Muller automata over explicit alphabets.
//!
//! States and letters are dense indices; names are kept for printing and for
//! the text format. Transitions are a sorted set, so a transition is also
//! identified by its index in [`TransitionSystem::transitions`].

mod complement;
mod muller;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::format::{parse_raw, RawAutomaton};
use crate::graph::Explored;
use crate::omega::LassoWord;

pub use complement::DEFAULT_COMPLEMENT_CAP;
pub use muller::{muller_to_buchi, MullerAutomaton};

/// Node budget for explicit explorations before giving up with a resource error.
pub(crate) const EXPLORE_LIMIT: usize = 2_000_000;

/// A finite alphabet with named letters.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    letters: Vec<String>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Result<Alphabet> {
        let mut a = Alphabet::default();
        for l in letters {
            let l = l.into();
            if a.index.contains_key(&l) {
                return Err(Error::input(format!("letter `{l}` declared twice")));
            }
            a.index.insert(l.clone(), a.letters.len());
            a.letters.push(l);
        }
        Ok(a)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.letters[i]
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn index_of(&self, letter: &str) -> Option<usize> {
        self.index.get(letter).copied()
    }

    /// Translates a word over letter names into letter indices.
    pub fn encode(&self, w: &LassoWord<String>) -> Result<LassoWord<usize>> {
        let idx = |l: &String| self.index_of(l).ok_or_else(|| Error::input(format!("letter `{l}` is not in the alphabet")));
        let prefix = w.prefix().iter().map(idx).collect::<Result<Vec<_>>>()?;
        let period = w.period().iter().map(idx).collect::<Result<Vec<_>>>()?;
        LassoWord::from_parts(prefix, period)
    }

    pub fn decode(&self, w: &LassoWord<usize>) -> LassoWord<String> {
        w.map(|&i| self.letters[i].clone())
    }

    /// Same letters in the same order.
    pub fn same_as(&self, other: &Alphabet) -> bool {
        self.letters == other.letters
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Alphabet {}

/// A transition `(from, letter, to)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub from: usize,
    pub letter: usize,
    pub to: usize,
}

impl Transition {
    pub fn new(from: usize, letter: usize, to: usize) -> Transition {
        Transition { from, letter, to }
    }
}

/// A run on a lasso word, as a lasso of transition indices.
pub type LassoRun = LassoWord<usize>;

/// States, initial states and transitions; shared by both acceptance kinds.
#[derive(Clone, Debug)]
pub struct TransitionSystem {
    alphabet: Alphabet,
    states: Vec<String>,
    initial: Vec<usize>,
    transitions: Vec<Transition>,
    out: Vec<Vec<usize>>,
}

impl TransitionSystem {
    /// Validates and sorts. Returns the permutation applied to `transitions`
    /// (`perm[new] = old`) so callers can carry per-transition data along.
    pub(crate) fn build(
        alphabet: Alphabet,
        states: Vec<String>,
        mut initial: Vec<usize>,
        transitions: Vec<Transition>,
    ) -> Result<(TransitionSystem, Vec<usize>)> {
        let n = states.len();
        let mut seen = std::collections::HashSet::new();
        for s in &states {
            if !seen.insert(s) {
                return Err(Error::input(format!("state `{s}` declared twice")));
            }
        }
        initial.sort_unstable();
        initial.dedup();
        if let Some(&q) = initial.iter().find(|&&q| q >= n) {
            return Err(Error::input(format!("initial state index {q} out of range")));
        }
        for t in &transitions {
            if t.from >= n || t.to >= n || t.letter >= alphabet.len() {
                return Err(Error::input(format!("transition {t:?} refers to an unknown state or letter")));
            }
        }
        let mut perm: Vec<usize> = (0..transitions.len()).collect();
        perm.sort_by_key(|&i| transitions[i]);
        perm.dedup_by_key(|i| transitions[*i]);
        let transitions: Vec<Transition> = perm.iter().map(|&i| transitions[i]).collect();
        let mut out = vec![Vec::new(); n];
        for (i, t) in transitions.iter().enumerate() {
            out[t.from].push(i);
        }
        Ok((TransitionSystem { alphabet, states, initial, transitions, out }, perm))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Indices of the transitions leaving `q`.
    pub fn out(&self, q: usize) -> &[usize] {
        &self.out[q]
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    /// At most one initial state and one successor per state and letter.
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() <= 1
            && self.out.iter().all(|ts| {
                let mut letters: Vec<usize> = ts.iter().map(|&t| self.transitions[t].letter).collect();
                let before = letters.len();
                letters.dedup();
                letters.len() == before
            })
    }

    /// The product of the automaton with the positions `0..|p|+|q|` of `w`,
    /// explored from the initial vertices. Edge labels are transition indices.
    pub(crate) fn word_product(&self, w: &LassoWord<usize>) -> Result<Explored<(usize, usize), usize>> {
        let roots = self.initial.iter().map(|&q| (q, 0));
        Explored::explore(roots, EXPLORE_LIMIT, |&(q, pos)| {
            let a = *w.at(pos);
            let next = w.next_pos(pos);
            self.out[q]
                .iter()
                .filter(|&&t| self.transitions[t].letter == a)
                .map(|&t| (t, (self.transitions[t].to, next)))
                .collect()
        })
        .ok_or_else(|| Error::Resource("product of automaton and word is too large".into()))
    }

    /// Checks that `run` is a run on `w`: starts initial, transitions match
    /// consecutively and read the letters of `w`.
    pub fn is_run_on(&self, run: &LassoRun, w: &LassoWord<usize>) -> bool {
        if run.period().iter().chain(run.prefix()).any(|&t| t >= self.transitions.len()) {
            return false;
        }
        if !self.initial.contains(&self.transitions[*run.at(0)].from) {
            return false;
        }
        let (p, l) = crate::omega::common_shape([run, w]);
        (0..p + l + 1).all(|i| {
            let t = self.transitions[*run.at(i)];
            t.letter == *w.at(i) && t.to == self.transitions[*run.at(i + 1)].from
        })
    }

    /// States occurring infinitely often on a run: sources in its loop.
    pub fn inf_states(&self, run: &LassoRun) -> BTreeSet<usize> {
        run.canonical().period().iter().map(|&t| self.transitions[t].from).collect()
    }

    fn fmt_body(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet: {}", self.alphabet.letters.join(" "))?;
        writeln!(f, "states: {}", self.states.join(" "))?;
        writeln!(f, "initial: {}", self.initial.iter().map(|&q| self.states[q].as_str()).collect::<Vec<_>>().join(" "))
    }

    pub(crate) fn fmt_transition(&self, t: &Transition) -> String {
        format!("trans: {} {} {}", self.states[t.from], self.alphabet.letters[t.letter], self.states[t.to])
    }

    /// Builds states, letters and transitions from a parsed file.
    pub(crate) fn from_raw(raw: &RawAutomaton) -> Result<(TransitionSystem, Vec<usize>)> {
        let mut states = raw.states.clone();
        let mut state_ix: HashMap<String, usize> = HashMap::new();
        for (i, s) in states.iter().enumerate() {
            if state_ix.insert(s.clone(), i).is_some() {
                return Err(Error::parse(1, 1, format!("state `{s}` declared twice")));
            }
        }
        let mut intern = |s: &str, states: &mut Vec<String>| -> usize {
            *state_ix.entry(s.to_string()).or_insert_with(|| {
                states.push(s.to_string());
                states.len() - 1
            })
        };
        let declared = raw.alphabet.is_some();
        let mut letters = raw.alphabet.clone().unwrap_or_default();
        let mut trans = Vec::new();
        for rt in &raw.trans {
            let a = match letters.iter().position(|l| *l == rt.letter) {
                Some(a) => a,
                None if declared => {
                    return Err(Error::parse(rt.line, 1, format!("letter `{}` is not in the declared alphabet", rt.letter)));
                }
                None => {
                    letters.push(rt.letter.clone());
                    letters.len() - 1
                }
            };
            let p = intern(&rt.from, &mut states);
            let q = intern(&rt.to, &mut states);
            trans.push(Transition::new(p, a, q));
        }
        let initial = raw.initial.iter().map(|s| intern(s, &mut states)).collect();
        if raw.accepting.is_some() && raw.accsets.is_some() {
            return Err(Error::parse(1, 1, "a file has either `accepting:` or `accsets:`, not both"));
        }
        for s in raw.accepting.iter().flatten().chain(raw.accsets.iter().flatten().flatten()) {
            intern(s, &mut states);
        }
        let alphabet = Alphabet::new(letters).map_err(|e| Error::parse(1, 1, e.to_string()))?;
        TransitionSystem::build(alphabet, states, initial, trans)
    }
}

/// A nondeterministic Büchi automaton `(Q, I, T, F)`.
#[derive(Clone, Debug)]
pub struct BuchiAutomaton {
    ts: TransitionSystem,
    accepting: Vec<bool>,
}

/// Two distinct accepting runs on one word.
#[derive(Clone, Debug)]
pub struct AmbiguityWitness {
    pub word: LassoWord<usize>,
    pub runs: (LassoRun, LassoRun),
}

impl BuchiAutomaton {
    pub fn new(
        alphabet: Alphabet,
        states: Vec<String>,
        initial: Vec<usize>,
        accepting: impl IntoIterator<Item = usize>,
        transitions: Vec<Transition>,
    ) -> Result<BuchiAutomaton> {
        let (ts, _) = TransitionSystem::build(alphabet, states, initial, transitions)?;
        BuchiAutomaton::from_system(ts, accepting)
    }

    pub(crate) fn from_system(ts: TransitionSystem, accepting: impl IntoIterator<Item = usize>) -> Result<BuchiAutomaton> {
        let mut acc = vec![false; ts.num_states()];
        for q in accepting {
            *acc.get_mut(q).ok_or_else(|| Error::input(format!("accepting state index {q} out of range")))? = true;
        }
        Ok(BuchiAutomaton { ts, accepting: acc })
    }

    /// Builds from `(from, letter, to)` name triples; states are numbered in
    /// order of first appearance among `initial`, `accepting` and the
    /// transitions.
    pub fn from_names(letters: &[&str], initial: &[&str], accepting: &[&str], trans: &[(&str, &str, &str)]) -> Result<BuchiAutomaton> {
        let mut text = format!("alphabet: {}\n", letters.join(" "));
        text += &format!("initial: {}\naccepting: {}\n", initial.join(" "), accepting.join(" "));
        for (p, a, q) in trans {
            text += &format!("trans: {p} {a} {q}\n");
        }
        text.parse()
    }

    pub fn system(&self) -> &TransitionSystem {
        &self.ts
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.ts.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.ts.num_states()
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.ts.transitions
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.accepting.len()).filter(|&q| self.accepting[q])
    }

    /// An accepting run on `w`, if one exists.
    pub fn accepts(&self, w: &LassoWord<String>) -> Result<Option<LassoRun>> {
        let w = self.ts.alphabet.encode(w)?;
        self.accepts_indices(&w)
    }

    /// [`accepts`](Self::accepts) for a word already over letter indices.
    pub fn accepts_indices(&self, w: &LassoWord<usize>) -> Result<Option<LassoRun>> {
        let g = self.ts.word_product(w)?;
        Ok(g.accepting_lasso(|&(q, _)| self.accepting[q]).map(|(path, cycle)| LassoWord::from_parts(path, cycle).expect("cycles are nonempty")))
    }

    /// Replays `run` on `w` and checks that its loop visits `F`.
    pub fn is_accepting_run(&self, run: &LassoRun, w: &LassoWord<usize>) -> bool {
        self.ts.is_run_on(run, w) && self.ts.inf_states(run).iter().any(|&q| self.accepting[q])
    }

    /// A word in the language, or `None` if it is empty.
    pub fn witness(&self) -> Option<LassoWord<usize>> {
        let g = Explored::explore(self.ts.initial.iter().copied(), usize::MAX, |&q| {
            self.ts.out[q].iter().map(|&t| (self.ts.transitions[t].letter, self.ts.transitions[t].to)).collect()
        })?;
        let (path, cycle) = g.accepting_lasso(|&q| self.accepting[q])?;
        Some(LassoWord::new(path, cycle).expect("cycles are nonempty"))
    }

    pub fn is_empty(&self) -> bool {
        self.witness().is_none()
    }

    /// Two-phase product: `ℒ(result) = ℒ(self) ∩ ℒ(other)`.
    pub fn intersect(&self, other: &BuchiAutomaton) -> Result<BuchiAutomaton> {
        if !self.alphabet().same_as(other.alphabet()) {
            return Err(Error::input("intersection needs identical alphabets"));
        }
        let (a, b) = (&self.ts, &other.ts);
        let roots = a.initial.iter().flat_map(|&p| b.initial.iter().map(move |&q| (p, q, 0u8)));
        let g = Explored::explore(roots, EXPLORE_LIMIT, |&(p, q, phase)| {
            let next_phase = match phase {
                0 if self.accepting[p] => 1,
                1 if other.accepting[q] => 0,
                ph => ph,
            };
            let mut succ = Vec::new();
            for &s in &a.out[p] {
                let ts = a.transitions[s];
                for &t in &b.out[q] {
                    let tt = b.transitions[t];
                    if ts.letter == tt.letter {
                        succ.push((ts.letter, (ts.to, tt.to, next_phase)));
                    }
                }
            }
            succ
        })
        .ok_or_else(|| Error::Resource("intersection product too large".into()))?;
        let names = g.nodes.iter().map(|&(p, q, ph)| format!("{}.{}.{}", a.states[p], b.states[q], ph + 1)).collect();
        let trans = g.edges.iter().enumerate().flat_map(|(v, es)| es.iter().map(move |&(l, w)| Transition::new(v, l, w))).collect();
        let acc = g.nodes.iter().enumerate().filter(|(_, &(p, _, ph))| ph == 0 && self.accepting[p]).map(|(v, _)| v);
        BuchiAutomaton::new(self.alphabet().clone(), names, g.roots.clone(), acc, trans)
    }

    /// Rank-based complement; fails when `|Q| > cap`.
    pub fn complement(&self, cap: usize) -> Result<BuchiAutomaton> {
        complement::complement(self, cap)
    }

    /// `None` when every word has at most one accepting run, else a word with
    /// two distinct accepting runs.
    pub fn check_ambiguity(&self) -> Option<AmbiguityWitness> {
        let ts = &self.ts;
        // (p1, p2, diverged, phase): phase 0 waits for component 1 to accept,
        // phase 1 for component 2.
        let roots = ts.initial.iter().flat_map(|&p| ts.initial.iter().map(move |&q| (p, q, p != q, 0u8)));
        let g = Explored::explore(roots, EXPLORE_LIMIT, |&(p, q, d, phase)| {
            let next_phase = match phase {
                0 if self.accepting[p] => 1,
                1 if self.accepting[q] => 0,
                ph => ph,
            };
            let mut succ = Vec::new();
            for &s in &ts.out[p] {
                for &t in &ts.out[q] {
                    let (ts_, tt) = (ts.transitions[s], ts.transitions[t]);
                    if ts_.letter == tt.letter {
                        succ.push(((s, t), (ts_.to, tt.to, d || s != t, next_phase)));
                    }
                }
            }
            succ
        })?;
        let (path, cycle) = g.accepting_lasso(|&(p, _, d, ph)| d && ph == 0 && self.accepting[p])?;
        let word = LassoWord::new(
            path.iter().map(|&(s, _)| ts.transitions[s].letter).collect(),
            cycle.iter().map(|&(s, _)| ts.transitions[s].letter).collect(),
        )
        .expect("cycles are nonempty");
        let run = |k: usize| {
            let pick = |&(s, t): &(usize, usize)| if k == 0 { s } else { t };
            LassoWord::from_parts(path.iter().map(pick).collect(), cycle.iter().map(pick).collect()).expect("cycles are nonempty")
        };
        Some(AmbiguityWitness { word, runs: (run(0), run(1)) })
    }

    /// Same transition system with `𝓕` = the state sets of cycles that meet `F`.
    pub fn to_muller(&self) -> Result<MullerAutomaton> {
        muller::buchi_to_muller(self)
    }

    /// Drops states that are unreachable or cannot reach an accepting cycle.
    pub fn trim(&self) -> BuchiAutomaton {
        let ts = &self.ts;
        let n = ts.num_states();
        let succ: Vec<Vec<usize>> = (0..n).map(|q| ts.out[q].iter().map(|&t| ts.transitions[t].to).collect()).collect();
        let comp = crate::graph::tarjan_scc(n, &succ);
        let nontrivial = crate::graph::nontrivial_components(&succ, &comp);
        let mut reach = vec![false; n];
        let mut stack: Vec<usize> = ts.initial.clone();
        for &q in &stack {
            reach[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &r in &succ[q] {
                if !reach[r] {
                    reach[r] = true;
                    stack.push(r);
                }
            }
        }
        let mut pred = vec![Vec::new(); n];
        for (q, rs) in succ.iter().enumerate() {
            for &r in rs {
                pred[r].push(q);
            }
        }
        let mut live = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&q| self.accepting[q] && nontrivial[comp[q]]).collect();
        for &q in &stack {
            live[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &pred[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        let keep: Vec<usize> = (0..n).filter(|&q| reach[q] && live[q]).collect();
        let mut new_ix = vec![usize::MAX; n];
        for (i, &q) in keep.iter().enumerate() {
            new_ix[q] = i;
        }
        let trans = ts
            .transitions
            .iter()
            .filter(|t| new_ix[t.from] != usize::MAX && new_ix[t.to] != usize::MAX)
            .map(|t| Transition::new(new_ix[t.from], t.letter, new_ix[t.to]))
            .collect();
        BuchiAutomaton::new(
            ts.alphabet.clone(),
            keep.iter().map(|&q| ts.states[q].clone()).collect(),
            ts.initial.iter().filter(|&&q| new_ix[q] != usize::MAX).map(|&q| new_ix[q]).collect(),
            keep.iter().enumerate().filter(|(_, &q)| self.accepting[q]).map(|(i, _)| i),
            trans,
        )
        .expect("trimming keeps a valid automaton")
    }

    pub(crate) fn from_raw(raw: &RawAutomaton) -> Result<BuchiAutomaton> {
        if raw.accsets.is_some() {
            return Err(Error::parse(1, 1, "`accsets:` belongs to Muller automata"));
        }
        if let Some(t) = raw.trans.iter().find(|t| t.weight.is_some()) {
            return Err(Error::parse(t.line, 1, "unexpected weight in an unweighted automaton"));
        }
        let (ts, _) = TransitionSystem::from_raw(raw)?;
        let acc = raw.accepting.iter().flatten().map(|s| ts.state_index(s).unwrap()).collect::<Vec<_>>();
        BuchiAutomaton::from_system(ts, acc)
    }
}

impl FromStr for BuchiAutomaton {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BuchiAutomaton::from_raw(&parse_raw(s, &[])?)
    }
}

impl fmt::Display for BuchiAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ts.fmt_body(f)?;
        let acc: Vec<&str> = self.accepting_states().map(|q| self.ts.states[q].as_str()).collect();
        writeln!(f, "accepting: {}", acc.join(" "))?;
        for t in &self.ts.transitions {
            writeln!(f, "{}", self.ts.fmt_transition(t))?;
        }
        Ok(())
    }
}

/// Free-function form of [`BuchiAutomaton::accepts`].
pub fn accepts(a: &BuchiAutomaton, w: &LassoWord<String>) -> Result<Option<LassoRun>> {
    a.accepts(w)
}

/// A witness word, or `None` when the language is empty.
pub fn is_empty(a: &BuchiAutomaton) -> Option<LassoWord<usize>> {
    a.witness()
}

pub fn product_intersection(a: &BuchiAutomaton, b: &BuchiAutomaton) -> Result<BuchiAutomaton> {
    a.intersect(b)
}

pub fn complement(a: &BuchiAutomaton, cap: usize) -> Result<BuchiAutomaton> {
    a.complement(cap)
}

pub fn check_ambiguity(a: &BuchiAutomaton) -> Option<AmbiguityWitness> {
    a.check_ambiguity()
}

pub fn buchi_to_muller(a: &BuchiAutomaton) -> Result<MullerAutomaton> {
    a.to_muller()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> LassoWord<String> {
        s.parse().unwrap()
    }

    /// Accepts words with infinitely many `a`.
    pub(crate) fn inf_a() -> BuchiAutomaton {
        BuchiAutomaton::from_names(&["a", "b"], &["p"], &["q"], &[("p", "a", "q"), ("p", "b", "p"), ("q", "a", "q"), ("q", "b", "p")]).unwrap()
    }

    #[test]
    fn single_loop() {
        let a = BuchiAutomaton::from_names(&["a"], &["q"], &["q"], &[("q", "a", "q")]).unwrap();
        let run = a.accepts(&word("(a)")).unwrap().unwrap();
        assert_eq!(run.canonical().period(), &[0]);
        assert!(matches!(a.accepts(&word("(b)")), Err(Error::Input(_))));
        assert_eq!(a.witness().unwrap(), LassoWord::periodic(vec![0]).unwrap());
    }

    #[test]
    fn infinitely_many_a() {
        let a = inf_a();
        assert!(a.accepts(&word("a b (b)")).unwrap().is_none());
        let w = word("b (a b)");
        let run = a.accepts(&w).unwrap().unwrap();
        assert!(a.is_accepting_run(&run, &a.alphabet().encode(&w).unwrap()));
    }

    #[test]
    fn empty_when_no_accepting() {
        let a = BuchiAutomaton::from_names(&["a"], &["q"], &[], &[("q", "a", "q")]).unwrap();
        assert!(a.is_empty());
        let ab = BuchiAutomaton::from_names(&["a", "b"], &["p"], &["p"], &[("p", "a", "q"), ("q", "b", "p")]).unwrap();
        let w = ab.witness().unwrap();
        assert!(w.omega_eq(&LassoWord::periodic(vec![0, 1]).unwrap()));
    }

    #[test]
    fn intersection_of_disjoint_is_empty() {
        let fin_a = BuchiAutomaton::from_names(&["a", "b"], &["p"], &["q"], &[("p", "a", "p"), ("p", "b", "p"), ("p", "b", "q"), ("q", "b", "q")]).unwrap();
        assert!(inf_a().intersect(&fin_a).unwrap().is_empty());
        assert!(!inf_a().intersect(&inf_a()).unwrap().is_empty());
    }

    #[test]
    fn ambiguity() {
        let det = inf_a();
        assert!(det.system().is_deterministic());
        assert!(det.check_ambiguity().is_none());
        let two = BuchiAutomaton::from_names(&["a"], &["p", "q"], &["p", "q"], &[("p", "a", "p"), ("q", "a", "q")]).unwrap();
        let wit = two.check_ambiguity().unwrap();
        assert!(wit.word.omega_eq(&LassoWord::periodic(vec![0]).unwrap()));
        assert!(two.is_accepting_run(&wit.runs.0, &wit.word));
        assert!(two.is_accepting_run(&wit.runs.1, &wit.word));
        assert!(!wit.runs.0.omega_eq(&wit.runs.1));
    }

    #[test]
    fn text_round_trip() {
        let a = inf_a();
        let b: BuchiAutomaton = a.to_string().parse().unwrap();
        assert_eq!(a.to_string(), b.to_string());
        assert!("alphabet: a\ntrans: p b p\n".parse::<BuchiAutomaton>().is_err());
    }

    #[test]
    fn trim_drops_dead_states() {
        let a = BuchiAutomaton::from_names(&["a"], &["p"], &["p"], &[("p", "a", "p"), ("p", "a", "dead")]).unwrap();
        assert_eq!(a.trim().num_states(), 1);
    }
}
