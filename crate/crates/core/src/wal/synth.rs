//! From weighted Büchi automata back to formulas.

use crate::error::{Error, Result};
use crate::mso::{MsoFormula, Var};
use crate::valuation::ValuationStructure;
use crate::wba::WeightedBuchiAutomaton;

use super::{w_translate, Ewal, Wal};

/// `β(X1, …, Xm)`: the sets `Xi`, one per transition in
/// [`WeightedBuchiAutomaton::transitions`] order, describe an accepting run.
/// Returns the formula and the variables.
pub fn run_formula<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> (MsoFormula, Vec<Var>) {
    let ts = a.transitions();
    let vars: Vec<Var> = (1..=ts.len()).map(|i| Var::second(&format!("X{i}"))).collect();
    let (x, y, z) = (Var::first("x"), Var::first("y"), Var::first("z"));
    let at = |i: usize, p: &Var| MsoFormula::member(&vars[i], p);
    let any_of = |is: Vec<usize>, p: &Var| MsoFormula::any(is.into_iter().map(|i| at(i, p)));

    // Each position is in exactly one set, and its letter matches.
    let one_each = MsoFormula::forall(
        &x,
        MsoFormula::any((0..ts.len()).map(|i| {
            let others = (0..ts.len()).filter(|&j| j != i).map(|j| MsoFormula::not(at(j, &x)));
            MsoFormula::all([at(i, &x), MsoFormula::letter(a.alphabet().name(ts[i].letter), &x)].into_iter().chain(others))
        })),
    );
    let first = MsoFormula::not(MsoFormula::exists(&z, MsoFormula::less(&z, &x)));
    let starts = MsoFormula::forall(&x, MsoFormula::implies(first, any_of((0..ts.len()).filter(|&i| a.initial().contains(&ts[i].from)).collect(), &x)));
    let succ = MsoFormula::and(
        MsoFormula::less(&x, &y),
        MsoFormula::not(MsoFormula::exists(&z, MsoFormula::and(MsoFormula::less(&x, &z), MsoFormula::less(&z, &y)))),
    );
    let chained = MsoFormula::all((0..ts.len()).map(|i| {
        let next = any_of((0..ts.len()).filter(|&j| ts[j].from == ts[i].to).collect(), &y);
        MsoFormula::forall(&x, MsoFormula::forall(&y, MsoFormula::implies(MsoFormula::and(succ.clone(), at(i, &x)), next)))
    }));
    let accepting: Vec<usize> = (0..ts.len()).filter(|&i| a.is_accepting(ts[i].to)).collect();
    let recurrent = MsoFormula::forall(&x, MsoFormula::exists(&y, MsoFormula::and(MsoFormula::less(&x, &y), any_of(accepting, &y))));
    (MsoFormula::all([one_each, starts, chained, recurrent]), vars)
}

/// `⊓x. ⋀i (Xi(x) ⇒ x ↦ wt(ti))`.
fn weights_of<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>, vars: &[Var]) -> Wal<S::Weight> {
    let x = Var::first("x");
    let parts = a.transitions().iter().zip(vars).map(|(t, v)| Wal::implies(Wal::member(v, &x), Wal::assign(&x, t.weight.clone())));
    Wal::meet_all(&x, Wal::meet_list(parts))
}

/// A WAL sentence with the behavior of an unambiguous automaton:
/// `W(∃X̄.β) ⊓ ⊓X̄.(W(β) ⇒ weights)`.
pub fn wba_to_wal<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> Result<Wal<S::Weight>> {
    if let Some(w) = a.check_ambiguity() {
        return Err(Error::Ambiguous { witness: a.alphabet().decode(&w.word).to_string() });
    }
    let (beta, vars) = run_formula(a);
    let some_run = vars.iter().rev().fold(beta.clone(), |f, v| MsoFormula::exists(v, f));
    let each = vars.iter().rev().fold(Wal::implies(w_translate(&beta), weights_of(a, &vars)), |f, v| Wal::meet_all(v, f));
    Ok(Wal::meet(w_translate(&some_run), each))
}

/// An eWAL sentence with the behavior of any automaton: a join over the
/// run descriptions, `⊔X̄.(W(β) ⊓ weights)`. Descriptions that are not runs
/// give `⊥`, which adds `𝟘`.
pub fn wba_to_ewal<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> Result<Ewal<S::Weight>> {
    let (beta, vars) = run_formula(a);
    let body = Wal::meet(w_translate(&beta), weights_of(a, &vars));
    Ewal::new(vars, body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buchi::Alphabet;
    use crate::mso::{satisfies_mso, VarAssignment};
    use crate::omega::{LassoWord, PositionSet};
    use crate::valuation::{Ratio, RatioWeight};
    use crate::wal::{compile_ewal, compile_wal, CompileOptions};
    use crate::wba::SolverOptions;

    fn rw(a: i64, b: i64) -> RatioWeight {
        RatioWeight::ints(a, b)
    }

    fn two_loops() -> WeightedBuchiAutomaton<Ratio> {
        WeightedBuchiAutomaton::from_names(Ratio, &["a"], &["p"], &["p"], &[("p", "a", "p", rw(1, 1)), ("p", "a", "p", rw(3, 1))]).unwrap()
    }

    fn a_then_b() -> WeightedBuchiAutomaton<Ratio> {
        WeightedBuchiAutomaton::from_names(
            Ratio,
            &["a", "b"],
            &["p"],
            &["q"],
            &[("p", "a", "p", rw(2, 1)), ("p", "b", "q", rw(1, 1)), ("q", "b", "q", rw(5, 1))],
        )
        .unwrap()
    }

    #[test]
    fn run_formula_recognizes_runs() {
        let a = a_then_b();
        let (beta, _) = run_formula(&a);
        let w: LassoWord<String> = "a (b)".parse().unwrap();
        let set = |p: Vec<bool>, q: Vec<bool>| PositionSet::new(p, q).unwrap();
        let good = VarAssignment::new().with_set("X1", set(vec![true], vec![false])).with_set("X2", set(vec![false, true], vec![false])).with_set("X3", set(vec![false, false], vec![true]));
        assert!(satisfies_mso(&beta, &w, &good).unwrap());
        let bad = VarAssignment::new().with_set("X1", set(vec![true], vec![false])).with_set("X2", set(vec![false], vec![true])).with_set("X3", PositionSet::empty());
        assert!(!satisfies_mso(&beta, &w, &bad).unwrap());
    }

    #[test]
    fn ewal_of_ambiguous_automaton() {
        let a = two_loops();
        let e = wba_to_ewal(&a).unwrap();
        let c = compile_ewal(&e, a.alphabet(), Ratio, &rw(0, 1), &CompileOptions::default()).unwrap();
        let w: LassoWord<String> = "(a)".parse().unwrap();
        let opts = SolverOptions::default();
        assert_eq!(c.behavior(&w, &opts).unwrap(), a.behavior(&w, &opts).unwrap());
        assert!(wba_to_wal(&a).is_err());
    }

    #[test]
    fn wal_of_unambiguous_automaton() {
        let a = a_then_b();
        let phi = wba_to_wal(&a).unwrap();
        let sigma = Alphabet::new(["a", "b"]).unwrap();
        let c = compile_wal(&phi, &sigma, Ratio, &rw(0, 1), &CompileOptions::default()).unwrap();
        let opts = SolverOptions::default();
        for s in ["(a)", "(b)", "a (b)", "a a (b)", "(a b)", "b (a)"] {
            let w: LassoWord<String> = s.parse().unwrap();
            assert_eq!(c.behavior(&w, &opts).unwrap(), a.behavior(&w, &opts).unwrap(), "{s}");
        }
    }
}
