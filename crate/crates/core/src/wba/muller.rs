//! Weighted automata with Muller acceptance, and conversions to and from
//! Büchi acceptance that keep the behavior.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::buchi::{muller_to_buchi, Alphabet, LassoRun, MullerAutomaton, Transition, TransitionSystem};
use crate::error::{Error, Result};
use crate::format::{parse_raw, RawAutomaton};
use crate::omega::LassoWord;
use crate::valuation::ValuationStructure;

use super::nivat::{recompose_with, NivatTriple};
use super::{SolverOptions, WeightedBuchiAutomaton, WeightedSystem, WeightedTransition};

/// `(Q, I, T, 𝓕, wt)`: a run accepts when the set of states it visits
/// infinitely often belongs to `𝓕`.
#[derive(Clone, Debug)]
pub struct WeightedMullerAutomaton<S: ValuationStructure> {
    structure: S,
    sys: WeightedSystem<S::Weight>,
    acc_sets: Vec<BTreeSet<usize>>,
    buchi: OnceLock<std::result::Result<WeightedBuchiAutomaton<S>, Error>>,
}

impl<S: ValuationStructure> WeightedMullerAutomaton<S> {
    pub fn new(
        structure: S,
        alphabet: Alphabet,
        states: Vec<String>,
        initial: Vec<usize>,
        acc_sets: impl IntoIterator<Item = BTreeSet<usize>>,
        transitions: Vec<WeightedTransition<S::Weight>>,
    ) -> Result<Self> {
        for t in &transitions {
            structure.check_weight(&t.weight)?;
        }
        let sys = WeightedSystem::build(alphabet, states, initial, transitions)?;
        Self::from_system(structure, sys, acc_sets)
    }

    fn from_system(structure: S, sys: WeightedSystem<S::Weight>, acc_sets: impl IntoIterator<Item = BTreeSet<usize>>) -> Result<Self> {
        let mut sets: Vec<BTreeSet<usize>> = acc_sets.into_iter().collect();
        if sets.iter().flatten().any(|&q| q >= sys.states.len()) {
            return Err(Error::input("accepting set mentions an unknown state"));
        }
        sets.sort();
        sets.dedup();
        Ok(WeightedMullerAutomaton { structure, sys, acc_sets: sets, buchi: OnceLock::new() })
    }

    pub fn structure(&self) -> &S {
        &self.structure
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.sys.alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.sys.states
    }

    pub fn initial(&self) -> &[usize] {
        &self.sys.initial
    }

    pub fn transitions(&self) -> &[WeightedTransition<S::Weight>] {
        &self.sys.trans
    }

    pub fn acc_sets(&self) -> &[BTreeSet<usize>] {
        &self.acc_sets
    }

    /// The automaton with weights dropped.
    pub fn underlying(&self) -> MullerAutomaton {
        MullerAutomaton::new(self.sys.underlying(), self.acc_sets.clone()).expect("same states")
    }

    pub fn is_accepting_run(&self, run: &LassoRun, w: &LassoWord<usize>) -> bool {
        self.sys.is_run_on(run, w) && self.acc_sets.contains(&self.sys.inf_states(run))
    }

    pub fn run_weight(&self, run: &LassoRun) -> Result<S::Value> {
        let ws = self.sys.weights(run)?;
        self.structure.val_lasso(ws.prefix(), ws.period())
    }

    /// Some accepting run on `w`. With parallel transitions, the one taken
    /// is the first in transition order.
    pub fn accepting_run(&self, w: &LassoWord<usize>) -> Result<Option<LassoRun>> {
        let m = self.underlying();
        let Some(run) = m.accepts_indices(w)? else { return Ok(None) };
        let ts = m.system().transitions();
        Ok(Some(run.map(|&t| self.sys.lift(ts[t]))))
    }

    /// The value of one accepting run, or `𝟘`. This is the behavior when
    /// every word has at most one accepting run.
    pub fn behavior_unambiguous(&self, w: &LassoWord<usize>) -> Result<S::Value> {
        match self.accepting_run(w)? {
            Some(run) => self.run_weight(&run),
            None => Ok(self.structure.zero()),
        }
    }

    /// The behavior in general, through the equivalent Büchi automaton.
    pub fn behavior(&self, w: &LassoWord<String>, opts: &SolverOptions) -> Result<S::Value> {
        self.to_buchi()?.behavior(w, opts)
    }

    /// Cached [`weighted_muller_to_buchi`].
    pub fn to_buchi(&self) -> Result<&WeightedBuchiAutomaton<S>> {
        self.buchi.get_or_init(|| weighted_muller_to_buchi(self)).as_ref().map_err(Clone::clone)
    }

    pub fn parse(structure: S, text: &str) -> Result<Self> {
        let raw = parse_raw(text, &["structure"])?;
        if let Some(h) = raw.header("structure") {
            if h.trim() != structure.header() {
                return Err(Error::parse(raw.header_line("structure"), 1, format!("file is for `{h}`, expected `{}`", structure.header())));
            }
        }
        Self::from_raw(structure, &raw)
    }

    pub(crate) fn from_raw(structure: S, raw: &RawAutomaton) -> Result<Self> {
        if raw.accepting.is_some() {
            return Err(Error::parse(1, 1, "`accepting:` belongs to Büchi automata"));
        }
        let sys = WeightedSystem::from_raw(&structure, raw)?;
        let ix = |n: &String| sys.states.iter().position(|x| x == n).expect("interned");
        let sets: Vec<BTreeSet<usize>> = raw.accsets.iter().flatten().map(|s| s.iter().map(ix).collect()).collect();
        Self::from_system(structure, sys, sets)
    }
}

impl<S: ValuationStructure> fmt::Display for WeightedMullerAutomaton<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sys.fmt_head(&self.structure.header()))?;
        let sets: Vec<String> = self.acc_sets.iter().map(|s| format!("{{{}}}", self.sys.state_list(s.iter().copied()))).collect();
        writeln!(f, "accsets: {}", sets.join(" "))?;
        f.write_str(&self.sys.fmt_trans())
    }
}

/// Same states and weights; `𝓕` is the family of state sets of cycles that
/// meet an accepting state.
pub fn weighted_buchi_to_muller<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> Result<WeightedMullerAutomaton<S>> {
    let m = a.underlying().to_muller()?;
    WeightedMullerAutomaton::from_system(a.structure().clone(), a.system().clone(), m.acc_sets().to_vec())
}

/// Decomposes into a Muller language over transitions, converts that
/// language to Büchi acceptance and recomposes. The conversion can make the
/// language ambiguous, which is rejected for non-idempotent structures.
pub fn weighted_muller_to_buchi<S: ValuationStructure>(m: &WeightedMullerAutomaton<S>) -> Result<WeightedBuchiAutomaton<S>> {
    let ts = &m.sys.trans;
    let gamma = Alphabet::new((0..ts.len()).map(|i| format!("t{i}")))?;
    let trans = ts.iter().enumerate().map(|(i, t)| Transition::new(t.from, i, t.to)).collect();
    let (sys, _) = TransitionSystem::build(gamma.clone(), m.sys.states.clone(), m.sys.initial.clone(), trans)?;
    let lang = MullerAutomaton::new(sys, m.acc_sets.clone())?;
    let language = muller_to_buchi(&lang)?;
    let triple = NivatTriple::new(
        m.sys.alphabet.clone(),
        gamma,
        ts.iter().map(|t| t.letter).collect(),
        ts.iter().map(|t| Some(t.weight.clone())).collect(),
        language,
    )?;
    recompose_with(&triple, m.structure.clone(), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{Disc, DiscWeight, Q};

    fn dw(c: i64, d: i64) -> DiscWeight {
        DiscWeight::new(Q::from_integer(c.into()), Q::new(1.into(), d.into()))
    }

    /// Accepts words with finitely many `b`: `𝓕 = {{p}}` where `b` leads to
    /// `q` and `a` to `p`.
    fn fin_b() -> WeightedMullerAutomaton<Disc> {
        let alphabet = Alphabet::new(["a", "b"]).unwrap();
        let trans = vec![
            WeightedTransition::new(0, 0, 0, dw(1, 2)),
            WeightedTransition::new(0, 1, 1, dw(4, 2)),
            WeightedTransition::new(1, 0, 0, dw(2, 2)),
            WeightedTransition::new(1, 1, 1, dw(4, 2)),
        ];
        WeightedMullerAutomaton::new(Disc, alphabet, vec!["p".into(), "q".into()], vec![0], [BTreeSet::from([0])], trans).unwrap()
    }

    #[test]
    fn muller_to_buchi_keeps_values() {
        let m = fin_b();
        let b = m.to_buchi().unwrap();
        for s in ["(a)", "b (a)", "(b)", "a b (a b)", "b b a (a)"] {
            let w: LassoWord<String> = s.parse().unwrap();
            let wi = m.alphabet().encode(&w).unwrap();
            assert_eq!(b.behavior(&w, &SolverOptions::default()).unwrap(), m.behavior_unambiguous(&wi).unwrap(), "{s}");
        }
    }

    #[test]
    fn buchi_to_muller_keeps_values() {
        let text = "structure: disc\ninitial: p\naccepting: q\ntrans: p a p (1,1/2)\ntrans: p b q (2,1/2)\ntrans: q a p (0,1/2)\ntrans: q b q (3,1/3)\n";
        let a = WeightedBuchiAutomaton::parse(Disc, text).unwrap();
        let m = weighted_buchi_to_muller(&a).unwrap();
        let back = WeightedMullerAutomaton::parse(Disc, &m.to_string()).unwrap();
        assert_eq!(back.acc_sets(), m.acc_sets());
        for s in ["(a)", "(b)", "(a b)", "a (b b a)"] {
            let w: LassoWord<String> = s.parse().unwrap();
            let wi = a.alphabet().encode(&w).unwrap();
            assert_eq!(a.behavior(&w, &SolverOptions::default()).unwrap(), m.behavior_unambiguous(&wi).unwrap(), "{s}");
        }
    }
}
