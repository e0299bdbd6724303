//! WAL and eWAL sentences to weighted Büchi automata, through a Nivat
//! triple whose language is defined by `Φ`.

use crate::buchi::Alphabet;
use crate::error::{Error, Result};
use crate::mso::{compile_mso_capped, track_alphabet, MsoFormula, DEFAULT_STATE_CAP};
use crate::omega::LassoWord;
use crate::valuation::ValuationStructure;
use crate::wba::{recompose, NivatTriple, SolverOptions, WeightedBuchiAutomaton};

use super::phi::{GammaLetters, PhiBuilder};
use super::{Ewal, Wal};

/// Largest eWAL prefix compiled unless raised.
pub const DEFAULT_PREFIX_CAP: usize = 4;

#[derive(Clone, Debug)]
pub struct CompileOptions {
    /// Most `join` variables accepted; each doubles `Γ`.
    pub prefix_cap: usize,
    /// Verify that the language of `Φ` has one word over `Γ` per word over `Σ`.
    pub check_h_unambiguity: bool,
    /// Build `Φ_Y` by the plain induction even for assignment-free parts.
    pub literal: bool,
    /// Cap on states of the intermediate automata of the MSO compiler.
    pub state_cap: usize,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions { prefix_cap: DEFAULT_PREFIX_CAP, check_h_unambiguity: true, literal: false, state_cap: DEFAULT_STATE_CAP }
    }
}

/// The result of compiling a sentence.
#[derive(Clone, Debug)]
pub struct CompiledWal<S: ValuationStructure> {
    /// `Φ`, over `Σ × Δ` (plus one track per `join` variable for eWAL).
    pub beta: MsoFormula,
    pub triple: NivatTriple<S::Weight>,
    pub wba: WeightedBuchiAutomaton<S>,
}

impl<S: ValuationStructure> CompiledWal<S> {
    pub fn behavior(&self, w: &LassoWord<String>, opts: &SolverOptions) -> Result<S::Value> {
        self.wba.behavior(w, opts)
    }
}

fn check_letters<W: Clone + Ord>(phi: &Wal<W>, sigma: &Alphabet) -> Result<()> {
    match phi.letters_used().into_iter().find(|a| sigma.index_of(a).is_none()) {
        Some(a) => Err(Error::input(format!("`P_{a}` names a letter outside the alphabet"))),
        None => Ok(()),
    }
}

fn build<S: ValuationStructure>(
    body: &Wal<S::Weight>,
    prefix: &[crate::mso::Var],
    sigma: &Alphabet,
    structure: S,
    one: &S::Weight,
    opts: &CompileOptions,
) -> Result<CompiledWal<S>> {
    check_letters(body, sigma)?;
    let consts: Vec<S::Weight> = body.constants().into_iter().collect();
    let letters = GammaLetters::new(sigma, consts.len(), 0);
    let beta = PhiBuilder::new(&letters, &consts, !opts.literal).phi(body)?;
    // The join variables become tracks of the letters.
    let language = compile_mso_capped(&beta, &letters.alphabet()?, prefix, opts.state_cap)?.trim();
    let gamma = track_alphabet(&letters.alphabet()?, prefix.len())?;
    let all = letters.all();
    let k = prefix.len();
    let h = (0..gamma.len()).map(|c| all[c >> k].0).collect();
    let g = (0..gamma.len()).map(|c| all[c >> k].1.map(|i| consts[i].clone())).collect();
    let triple = NivatTriple::new(sigma.clone(), gamma, h, g, language)?;
    if k == 0 && opts.check_h_unambiguity {
        if let Some(w) = triple.h_unambiguity_check() {
            return Err(Error::internal(format!("two encodings of {} satisfy Φ", sigma.decode(&w))));
        }
    }
    let wba = recompose(&triple, structure, one)?;
    Ok(CompiledWal { beta, triple, wba })
}

/// Compiles a WAL sentence over `sigma`. Undefined positions get `one`.
pub fn compile_wal<S: ValuationStructure>(
    phi: &Wal<S::Weight>,
    sigma: &Alphabet,
    structure: S,
    one: &S::Weight,
    opts: &CompileOptions,
) -> Result<CompiledWal<S>> {
    if let Some(x) = phi.free_vars().first() {
        return Err(Error::input(format!("`{x}` is free; only sentences can be compiled")));
    }
    build(phi, &[], sigma, structure, one, opts)
}

/// Compiles an eWAL sentence `⊔𝒱.φ`: the language pairs each word with an
/// assignment of `𝒱` and the value `φ` takes under it, and the recomposed
/// automaton sums over assignments.
pub fn compile_ewal<S: ValuationStructure>(
    psi: &Ewal<S::Weight>,
    sigma: &Alphabet,
    structure: S,
    one: &S::Weight,
    opts: &CompileOptions,
) -> Result<CompiledWal<S>> {
    if let Some(x) = psi.free_vars().first() {
        return Err(Error::input(format!("`{x}` is free; only sentences can be compiled")));
    }
    if psi.prefix.len() > opts.prefix_cap {
        return Err(Error::Resource(format!("{} join variables, cap is {}", psi.prefix.len(), opts.prefix_cap)));
    }
    build(&psi.body, &psi.prefix, sigma, structure, one, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mso::VarAssignment;
    use crate::valuation::{Disc, Ratio, RatioWeight};
    use crate::wal::{parse_ewal, parse_wal, proper_value, reference_aux_semantics};

    const COSTS: &str = "meet x. (P_a(x) => x |-> (1,1)) /\\ (P_b(x) => x |-> (3,1))";

    fn check_against_reference(text: &str, letters: &[&str], words: &[&str], literal: bool) {
        let phi = parse_wal(text, &Ratio).unwrap();
        let sigma = Alphabet::new(letters.iter().copied()).unwrap();
        let one = RatioWeight::ints(0, 1);
        let opts = CompileOptions { literal, ..Default::default() };
        let c = compile_wal(&phi, &sigma, Ratio, &one, &opts).unwrap();
        for s in words {
            let w: LassoWord<String> = s.parse().unwrap();
            let aux = reference_aux_semantics(&phi, &w, &VarAssignment::new(), 3).unwrap();
            let expect = proper_value(&Ratio, &aux, &one).unwrap();
            assert_eq!(c.behavior(&w, &SolverOptions::default()).unwrap(), expect, "{text} on {s}");
        }
    }

    #[test]
    fn costs_example() {
        let words = ["(a b)", "(a)", "(b)", "(c)", "a (b)", "(a b c)", "c c (a)"];
        check_against_reference(COSTS, &["a", "b", "c"], &words, false);
    }

    #[test]
    fn literal_and_shortcut_agree() {
        let words = ["(a)", "(b)", "a (b)", "b (a)", "(a b)"];
        for f in ["meet x. P_a(x) => x |-> (2,1)", "meet x. meet y. (x < y /\\ P_a(x)) => y |-> (1,1)", "(meet x. P_a(x)) /\\ meet y. y |-> (1,1)"] {
            check_against_reference(f, &["a", "b"], &words, true);
            check_against_reference(f, &["a", "b"], &words, false);
        }
    }

    #[test]
    fn discounted_constant() {
        let phi = parse_wal("meet x. x |-> (4,1/2)", &Disc).unwrap();
        let sigma = Alphabet::new(["a"]).unwrap();
        let c = compile_wal(&phi, &sigma, Disc, &Disc.default_one(), &CompileOptions::default()).unwrap();
        let w: LassoWord<String> = "(a)".parse().unwrap();
        assert_eq!(c.behavior(&w, &SolverOptions::default()).unwrap().to_string(), "8");
    }

    #[test]
    fn joins_take_the_best_assignment() {
        // Pick one position to cost 5, everything else costs 1: the
        // supremum of the ratio is 1 whichever position is picked.
        let e = parse_ewal("join y. meet x. (x = y => x |-> (5,1)) /\\ (!(x = y) => x |-> (1,1))", &Ratio).unwrap();
        let sigma = Alphabet::new(["a"]).unwrap();
        let c = compile_ewal(&e, &sigma, Ratio, &RatioWeight::ints(0, 1), &CompileOptions::default()).unwrap();
        let w: LassoWord<String> = "(a)".parse().unwrap();
        assert_eq!(c.behavior(&w, &SolverOptions::default()).unwrap().to_string(), "1");
        let cap = CompileOptions { prefix_cap: 0, ..Default::default() };
        assert!(matches!(compile_ewal(&e, &sigma, Ratio, &RatioWeight::ints(0, 1), &cap), Err(Error::Resource(_))));
    }

    #[test]
    fn open_formulas_are_rejected() {
        let phi = parse_wal("x |-> (1,1)", &Ratio).unwrap();
        let sigma = Alphabet::new(["a"]).unwrap();
        assert!(compile_wal(&phi, &sigma, Ratio, &RatioWeight::ints(0, 1), &CompileOptions::default()).is_err());
        let phi = parse_wal("meet x. P_z(x)", &Ratio).unwrap();
        assert!(compile_wal(&phi, &sigma, Ratio, &RatioWeight::ints(0, 1), &CompileOptions::default()).is_err());
    }
}
