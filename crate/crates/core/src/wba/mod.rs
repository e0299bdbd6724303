//! Weighted Büchi automata and their behavior on lasso words.
//!
//! The behavior of `𝒜` on `w` is the monoid sum of `val(wt(ρ))` over the
//! accepting runs `ρ` on `w`. When at most one run accepts, that is one
//! valuation of one lasso. Otherwise the runs are the accepting paths of a
//! finite graph, the product of `𝒜` with the positions of `w`, and each
//! shipped structure has an exact solver for its sum over that graph.

mod any;
mod disc;
mod energy;
mod muller;
mod nivat;
mod product;
mod ratio;
mod system;

use std::fmt;
use std::sync::OnceLock;

use crate::buchi::{Alphabet, AmbiguityWitness, BuchiAutomaton, LassoRun, TransitionSystem};
use crate::error::{Error, Result};
use crate::format::{parse_raw, RawAutomaton};
use crate::omega::LassoWord;
use crate::valuation::ValuationStructure;

pub use any::AnyWba;
pub use muller::{weighted_buchi_to_muller, weighted_muller_to_buchi, WeightedMullerAutomaton};
pub use nivat::{decompose, recompose, NivatTriple};
pub use product::{ProductEdge, ProductGraph};
pub use system::WeightedTransition;

pub(crate) use disc::solve_disc;
pub(crate) use energy::solve_energy;
pub(crate) use ratio::solve_ratio;
pub(crate) use system::WeightedSystem;

/// Knobs for the product-graph solvers.
#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Tolerance for approximate numeric output. The shipped solvers are
    /// exact; this only matters for custom structures.
    pub eps: f64,
    /// `B` in the energy budget `B·|V|·Wmax`.
    pub energy_bound: u32,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { eps: 1e-9, energy_bound: 4 }
    }
}

/// A weighted Büchi automaton `(Q, I, T, F, wt)` over a valuation structure.
///
/// Transitions may be parallel: the same `(p, a, q)` with two weights counts
/// as two transitions and yields two runs.
#[derive(Clone, Debug)]
pub struct WeightedBuchiAutomaton<S: ValuationStructure> {
    structure: S,
    sys: WeightedSystem<S::Weight>,
    accepting: Vec<bool>,
    ambiguity: OnceLock<Option<AmbiguityWitness>>,
}

impl<S: ValuationStructure> WeightedBuchiAutomaton<S> {
    pub fn new(
        structure: S,
        alphabet: Alphabet,
        states: Vec<String>,
        initial: Vec<usize>,
        accepting: impl IntoIterator<Item = usize>,
        transitions: Vec<WeightedTransition<S::Weight>>,
    ) -> Result<Self> {
        for t in &transitions {
            structure.check_weight(&t.weight)?;
        }
        let sys = WeightedSystem::build(alphabet, states, initial, transitions)?;
        Self::from_system(structure, sys, accepting)
    }

    pub(crate) fn from_system(structure: S, sys: WeightedSystem<S::Weight>, accepting: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut acc = vec![false; sys.states.len()];
        for q in accepting {
            *acc.get_mut(q).ok_or_else(|| Error::input(format!("accepting state index {q} out of range")))? = true;
        }
        Ok(WeightedBuchiAutomaton { structure, sys, accepting: acc, ambiguity: OnceLock::new() })
    }

    /// Builds from names; states are numbered in order of first mention.
    pub fn from_names(structure: S, letters: &[&str], initial: &[&str], accepting: &[&str], trans: &[(&str, &str, &str, S::Weight)]) -> Result<Self> {
        let alphabet = Alphabet::new(letters.iter().copied())?;
        let mut states: Vec<String> = Vec::new();
        let ix = |s: &str, states: &mut Vec<String>| match states.iter().position(|x| x == s) {
            Some(i) => i,
            None => {
                states.push(s.to_string());
                states.len() - 1
            }
        };
        let init: Vec<usize> = initial.iter().map(|s| ix(s, &mut states)).collect();
        let acc: Vec<usize> = accepting.iter().map(|s| ix(s, &mut states)).collect();
        let mut ts = Vec::new();
        for (p, a, q, w) in trans {
            let letter = alphabet.index_of(a).ok_or_else(|| Error::input(format!("letter `{a}` is not in the alphabet")))?;
            let (p, q) = (ix(p, &mut states), ix(q, &mut states));
            ts.push(WeightedTransition::new(p, letter, q, w.clone()));
        }
        Self::new(structure, alphabet, states, init, acc, ts)
    }

    /// Puts a weight on every transition of an unweighted automaton.
    pub fn from_buchi(structure: S, a: &BuchiAutomaton, mut weight: impl FnMut(usize) -> S::Weight) -> Result<Self> {
        let ts = a.system();
        let trans = ts.transitions().iter().enumerate().map(|(i, t)| WeightedTransition::new(t.from, t.letter, t.to, weight(i))).collect();
        Self::new(structure, ts.alphabet().clone(), ts.states().to_vec(), ts.initial().to_vec(), a.accepting_states(), trans)
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

    pub fn num_states(&self) -> usize {
        self.sys.states.len()
    }

    pub fn initial(&self) -> &[usize] {
        &self.sys.initial
    }

    pub fn transitions(&self) -> &[WeightedTransition<S::Weight>] {
        &self.sys.trans
    }

    /// Indices of the transitions leaving `q`.
    pub fn out(&self, q: usize) -> &[usize] {
        &self.sys.out[q]
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.accepting.len()).filter(|&q| self.accepting[q])
    }

    pub(crate) fn system(&self) -> &WeightedSystem<S::Weight> {
        &self.sys
    }

    /// The automaton with weights dropped.
    pub fn underlying(&self) -> BuchiAutomaton {
        BuchiAutomaton::from_system(self.sys.underlying(), self.accepting_states()).expect("same states")
    }

    /// Whether two transitions differ only in their weight.
    pub fn has_parallel_transitions(&self) -> bool {
        self.sys.has_parallel()
    }

    /// An unweighted automaton whose states are "the transition just taken",
    /// so that its runs match the runs here one to one even with parallel
    /// transitions. Returns it with the map from its transitions to ours.
    fn edge_automaton(&self) -> (BuchiAutomaton, Vec<usize>) {
        let sys = &self.sys;
        let k = sys.initial.len();
        let mut states: Vec<String> = sys.initial.iter().map(|&q| format!("i{q}")).collect();
        states.extend((0..sys.trans.len()).map(|t| format!("e{t}")));
        let mut trans = Vec::new();
        let from_state = |src: usize, q: usize, trans: &mut Vec<crate::buchi::Transition>| {
            for &t in &sys.out[q] {
                trans.push(crate::buchi::Transition::new(src, sys.trans[t].letter, k + t));
            }
        };
        for (i, &q) in sys.initial.iter().enumerate() {
            from_state(i, q, &mut trans);
        }
        for (t, wt) in sys.trans.iter().enumerate() {
            from_state(k + t, wt.to, &mut trans);
        }
        let accepting: Vec<usize> = (0..sys.trans.len()).filter(|&t| self.accepting[sys.trans[t].to]).map(|t| k + t).collect();
        let (ts, _) = TransitionSystem::build(sys.alphabet.clone(), states, (0..k).collect(), trans).expect("edge automaton is well formed");
        let back = ts.transitions().iter().map(|t| t.to - k).collect();
        (BuchiAutomaton::from_system(ts, accepting).expect("in range"), back)
    }

    /// `None` if every word has at most one accepting run; otherwise a word
    /// with two, as runs over [`Self::transitions`]. Cached.
    pub fn check_ambiguity(&self) -> Option<&AmbiguityWitness> {
        self.ambiguity
            .get_or_init(|| {
                if self.sys.has_parallel() {
                    let (e, back) = self.edge_automaton();
                    e.check_ambiguity().map(|w| AmbiguityWitness {
                        word: w.word,
                        runs: (w.runs.0.map(|&t| back[t]), w.runs.1.map(|&t| back[t])),
                    })
                } else {
                    self.underlying().check_ambiguity()
                }
            })
            .as_ref()
    }

    pub fn is_unambiguous(&self) -> bool {
        self.check_ambiguity().is_none()
    }

    /// Some accepting run on `w`, if any.
    pub fn accepting_run(&self, w: &LassoWord<usize>) -> Result<Option<LassoRun>> {
        let x = self.sys.explore(w)?;
        Ok(x.accepting_lasso(|&(q, _)| self.accepting[q]).map(|(p, c)| LassoWord::new(p, c).expect("cycles are nonempty")))
    }

    pub fn is_run_on(&self, run: &LassoRun, w: &LassoWord<usize>) -> bool {
        self.sys.is_run_on(run, w)
    }

    pub fn is_accepting_run(&self, run: &LassoRun, w: &LassoWord<usize>) -> bool {
        self.is_run_on(run, w) && self.sys.inf_states(run).iter().any(|&q| self.accepting[q])
    }

    /// `val` of the weights along a run.
    pub fn run_weight(&self, run: &LassoRun) -> Result<S::Value> {
        let ws = self.sys.weights(run)?;
        self.structure.val_lasso(ws.prefix(), ws.period())
    }

    /// The product with the positions of `w`; vertex `(q, i)` is accepting
    /// iff `q` is.
    pub fn product_graph(&self, w: &LassoWord<usize>) -> Result<ProductGraph<S::Weight>> {
        self.sys.product_graph(w, |q| self.accepting[q])
    }

    pub fn behavior(&self, w: &LassoWord<String>, opts: &SolverOptions) -> Result<S::Value> {
        self.behavior_indices(&self.alphabet().encode(w)?, opts)
    }

    pub fn behavior_indices(&self, w: &LassoWord<usize>, opts: &SolverOptions) -> Result<S::Value> {
        match self.check_ambiguity() {
            None => match self.accepting_run(w)? {
                Some(run) => self.run_weight(&run),
                None => Ok(self.structure.zero()),
            },
            Some(witness) => {
                let g = self.product_graph(w)?;
                self.structure.solve_product(&g, opts).unwrap_or_else(|| {
                    Err(Error::Ambiguous { witness: self.alphabet().decode(&witness.word).to_string() })
                })
            }
        }
    }

    /// Parses the text format; a `structure:` header, if present, must match.
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
        if raw.accsets.is_some() {
            return Err(Error::parse(1, 1, "`accsets:` belongs to Muller automata"));
        }
        let sys = WeightedSystem::from_raw(&structure, raw)?;
        let acc: Vec<usize> = raw.accepting.iter().flatten().map(|s| sys.states.iter().position(|x| x == s).expect("interned")).collect();
        Self::from_system(structure, sys, acc)
    }
}

impl<S: ValuationStructure> fmt::Display for WeightedBuchiAutomaton<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sys.fmt_head(&self.structure.header()))?;
        writeln!(f, "accepting: {}", self.sys.state_list(self.accepting_states()))?;
        f.write_str(&self.sys.fmt_trans())
    }
}

/// Compares two automata on `samples` random lassos drawn from `seed`.
/// Returns the first word where the behaviors differ, with both values.
pub fn equiv_sample<S: ValuationStructure>(
    a: &WeightedBuchiAutomaton<S>,
    b: &WeightedBuchiAutomaton<S>,
    samples: usize,
    seed: u64,
    opts: &SolverOptions,
) -> Result<Option<(LassoWord<String>, S::Value, S::Value)>> {
    if !a.alphabet().same_as(b.alphabet()) {
        return Err(Error::input("the automata have different alphabets"));
    }
    for w in crate::omega::sample_lassos(a.alphabet().len(), samples, seed) {
        let (x, y) = (a.behavior_indices(&w, opts)?, b.behavior_indices(&w, opts)?);
        if x != y {
            return Ok(Some((a.alphabet().decode(&w), x, y)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{Bit, Disc, DiscWeight, Energy, EnergyWeight, ExtReal, Ratio, RatioWeight};

    fn lasso(s: &str) -> LassoWord<String> {
        s.parse().unwrap()
    }

    fn dw(c: i64) -> DiscWeight {
        DiscWeight::new(crate::valuation::Q::from_integer(c.into()), crate::valuation::Q::new(1.into(), 2.into()))
    }

    fn two_loops() -> WeightedBuchiAutomaton<Ratio> {
        WeightedBuchiAutomaton::from_names(
            Ratio,
            &["a"],
            &["q"],
            &["q"],
            &[("q", "a", "q", RatioWeight::ints(1, 1)), ("q", "a", "q", RatioWeight::ints(3, 1))],
        )
        .unwrap()
    }

    #[test]
    fn parallel_loops_are_ambiguous() {
        let a = two_loops();
        assert_eq!(a.transitions().len(), 2);
        assert!(a.underlying().check_ambiguity().is_none());
        let w = a.check_ambiguity().unwrap();
        assert_ne!(w.runs.0, w.runs.1);
        assert_eq!(a.behavior(&lasso("(a)"), &SolverOptions::default()).unwrap(), ExtReal::int(3));
    }

    #[test]
    fn unambiguous_path_uses_the_run() {
        let a = WeightedBuchiAutomaton::from_names(
            Ratio,
            &["a", "b"],
            &["p"],
            &["p"],
            &[("p", "a", "q", RatioWeight::ints(1, 1)), ("q", "b", "p", RatioWeight::ints(3, 1))],
        )
        .unwrap();
        assert!(a.is_unambiguous());
        let o = SolverOptions::default();
        assert_eq!(a.behavior(&lasso("(a b)"), &o).unwrap(), ExtReal::int(2));
        assert_eq!(a.behavior(&lasso("(a)"), &o).unwrap(), ExtReal::NegInf);
        let run = a.accepting_run(&a.alphabet().encode(&lasso("(a b)")).unwrap()).unwrap().unwrap();
        assert!(a.is_accepting_run(&run, &a.alphabet().encode(&lasso("(a b)")).unwrap()));
    }

    #[test]
    fn text_round_trip() {
        let text = "structure: disc\nalphabet: a b\nstates: p\ninitial: p\naccepting: p\ntrans: p a p (1,1/2)\ntrans: p b p (2, 1/2)\n";
        let a = WeightedBuchiAutomaton::parse(Disc, text).unwrap();
        let b = WeightedBuchiAutomaton::parse(Disc, &a.to_string()).unwrap();
        assert_eq!(a.transitions(), b.transitions());
        assert_eq!(a.behavior(&lasso("(a)"), &SolverOptions::default()).unwrap(), ExtReal::int(2));
        assert!(WeightedBuchiAutomaton::parse(Ratio, text).is_err());
        assert!(matches!(WeightedBuchiAutomaton::parse(Disc, "trans: p a p"), Err(Error::Parse { .. })));
    }

    #[test]
    fn ambiguous_disc_and_energy_use_solvers() {
        let d = WeightedBuchiAutomaton::from_names(
            Disc,
            &["a"],
            &["q"],
            &["q"],
            &[("q", "a", "q", dw(1)), ("q", "a", "q", dw(3))],
        )
        .unwrap();
        assert_eq!(d.behavior(&lasso("(a)"), &SolverOptions::default()).unwrap(), ExtReal::int(2));
        let e = WeightedBuchiAutomaton::from_names(
            Energy::new(1),
            &["a"],
            &["q"],
            &["q"],
            &[("q", "a", "q", EnergyWeight(vec![-1])), ("q", "a", "q", EnergyWeight(vec![0]))],
        )
        .unwrap();
        assert_eq!(e.behavior(&lasso("(a)"), &SolverOptions::default()).unwrap(), Bit(true));
    }

    #[test]
    fn sampled_equivalence() {
        let a = two_loops();
        let b = WeightedBuchiAutomaton::from_names(Ratio, &["a"], &["q"], &["q"], &[("q", "a", "q", RatioWeight::ints(3, 1))]).unwrap();
        assert!(equiv_sample(&a, &b, 20, 7, &SolverOptions::default()).unwrap().is_none());
        let c = WeightedBuchiAutomaton::from_names(Ratio, &["a"], &["q"], &["q"], &[("q", "a", "q", RatioWeight::ints(1, 1))]).unwrap();
        assert!(equiv_sample(&a, &c, 20, 7, &SolverOptions::default()).unwrap().is_some());
    }
}
