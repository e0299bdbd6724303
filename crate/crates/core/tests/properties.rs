//! Randomized invariants.

use proptest::prelude::*;

use walkit::buchi::{Alphabet, BuchiAutomaton, Transition};
use walkit::mso::{Var, VarAssignment};
use walkit::omega::{sample_lassos, PartialLassoValue};
use walkit::valuation::{Bit, Disc, DiscWeight, Energy, EnergyWeight, ExtReal, Ratio, RatioWeight, ValuationStructure, Q};
use walkit::wal::{compile_wal, parse_wal, proper_value, reference_aux_semantics, CompileOptions, Wal, DEFAULT_UNROLL_BOUND};
use walkit::wba::{SolverOptions, WeightedBuchiAutomaton, WeightedTransition};
use walkit::LassoWord;

fn lasso<T: std::fmt::Debug + Clone + Eq>(item: impl Strategy<Value = T> + Clone) -> impl Strategy<Value = LassoWord<T>> {
    (prop::collection::vec(item.clone(), 0..4), prop::collection::vec(item, 1..5)).prop_map(|(p, l)| LassoWord::from_parts(p, l).unwrap())
}

fn partial() -> impl Strategy<Value = PartialLassoValue<u8>> {
    prop_oneof![
        1 => Just(PartialLassoValue::Bottom),
        12 => lasso(prop::option::of(0u8..2)).prop_map(PartialLassoValue::from_lasso),
    ]
}

fn rw() -> impl Strategy<Value = RatioWeight> {
    (-5i64..=5, 0i64..=4).prop_map(|(r, c)| RatioWeight::ints(r, c))
}

fn dw() -> impl Strategy<Value = DiscWeight> {
    (0i64..=5, 1i64..=4).prop_map(|(c, d)| DiscWeight::new(Q::from_integer(c.into()), Q::new(d.into(), 4.into())))
}

fn ew() -> impl Strategy<Value = EnergyWeight> {
    prop::collection::vec(-3i64..=3, 2).prop_map(EnergyWeight)
}

fn ext() -> impl Strategy<Value = ExtReal> {
    prop_oneof![
        1 => Just(ExtReal::PosInf),
        1 => Just(ExtReal::NegInf),
        6 => (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ExtReal::frac(n, d)),
    ]
}

fn unrolled<S: ValuationStructure>(s: &S, p: &[S::Weight], l: &[S::Weight]) -> bool {
    let base = s.val_lasso(p, l).unwrap();
    let pl: Vec<_> = p.iter().chain(l).cloned().collect();
    let ll: Vec<_> = l.iter().chain(l).cloned().collect();
    s.val_lasso(&pl, l).unwrap() == base && s.val_lasso(p, &ll).unwrap() == base
}

fn monoid_laws<S: ValuationStructure>(s: &S, a: &S::Value, b: &S::Value, c: &S::Value) -> bool {
    s.add(a, b) == s.add(b, a)
        && s.add(&s.add(a, b), c) == s.add(a, &s.add(b, c))
        && s.add(a, &s.zero()) == *a
        && (!s.idempotent() || s.add(a, a) == *a)
}

/// A small automaton over `{a, b}` from raw integers.
fn automaton() -> impl Strategy<Value = (usize, Vec<usize>, Vec<bool>, Vec<(usize, usize, usize)>)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(0..n, 1..=2),
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec((0..n, 0usize..2, 0..n), 1..=8),
        )
    })
}

fn buchi(n: usize, init: &[usize], acc: &[bool], trans: &[(usize, usize, usize)]) -> BuchiAutomaton {
    BuchiAutomaton::new(
        Alphabet::new(["a", "b"]).unwrap(),
        (0..n).map(|q| format!("q{q}")).collect(),
        init.to_vec(),
        (0..n).filter(|&q| acc[q]),
        trans.iter().map(|&(p, a, q)| Transition::new(p, a, q)).collect(),
    )
    .unwrap()
}

fn wal_leaf() -> impl Strategy<Value = Wal<RatioWeight>> {
    let var = prop_oneof![Just("x"), Just("y")].prop_map(Var::first);
    prop_oneof![
        (prop_oneof![Just("a"), Just("b")], var.clone()).prop_map(|(a, x)| Wal::letter(a, &x)),
        (var.clone(), var.clone()).prop_map(|(x, y)| Wal::less(&x, &y)),
        (var.clone(), var.clone()).prop_map(|(x, y)| Wal::eq(&x, &y)),
        var.clone().prop_map(|x| Wal::member(&Var::second("X"), &x)),
        (var, rw()).prop_map(|(x, w)| Wal::assign(&x, w)),
    ]
}

fn wal_over(leaf: impl Strategy<Value = Wal<RatioWeight>> + 'static, binders: Vec<Var>) -> impl Strategy<Value = Wal<RatioWeight>> {
    leaf.prop_recursive(4, 24, 2, move |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Wal::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Wal::meet(a, b)),
            (prop::sample::select(binders.clone()), inner).prop_map(|(x, a)| Wal::meet_all(&x, a)),
        ]
    })
}

fn wal() -> impl Strategy<Value = Wal<RatioWeight>> {
    wal_over(wal_leaf(), vec![Var::first("x"), Var::first("y"), Var::second("X")])
}

/// Sentences without `meet X.`, closed by `meet` over whatever is left free.
fn sentence() -> impl Strategy<Value = Wal<RatioWeight>> {
    let var = prop_oneof![Just("x"), Just("y")].prop_map(Var::first);
    let leaf = prop_oneof![
        (prop_oneof![Just("a"), Just("b")], var.clone()).prop_map(|(a, x)| Wal::letter(a, &x)),
        (var.clone(), var.clone()).prop_map(|(x, y)| Wal::less(&x, &y)),
        (var, prop_oneof![Just(RatioWeight::ints(1, 1)), Just(RatioWeight::ints(3, 2))]).prop_map(|(x, w)| Wal::assign(&x, w)),
    ];
    wal_over(leaf, vec![Var::first("x"), Var::first("y")])
        .prop_map(|phi| phi.free_vars().iter().fold(phi.clone(), |acc, x| Wal::meet_all(x, acc)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compiled_sentences_match_the_reference(phi in sentence()) {
        let sigma = Alphabet::new(["a", "b"]).unwrap();
        let one = RatioWeight::ints(0, 1);
        let c = compile_wal(&phi, &sigma, Ratio, &one, &CompileOptions::default()).unwrap();
        for w in sample_lassos(2, 6, 5) {
            let w = sigma.decode(&w);
            let aux = reference_aux_semantics(&phi, &w, &VarAssignment::new(), DEFAULT_UNROLL_BOUND).map_err(|e| TestCaseError::fail(format!("{phi} on {w}: {e}")))?;
            let want = proper_value(&Ratio, &aux, &one).unwrap();
            prop_assert_eq!(c.behavior(&w, &SolverOptions::default()).unwrap(), want, "{} on {}", phi, w);
        }
    }
}

proptest! {
    #[test]
    fn merge_laws(u in partial(), v in partial(), w in partial()) {
        let uv = u.merge_with(&v);
        prop_assert_eq!(&uv, &v.merge_with(&u));
        prop_assert_eq!(uv.merge_with(&w), u.merge_with(&v.merge_with(&w)));
        prop_assert_eq!(u.merge_with(&PartialLassoValue::top()), u.clone());
        prop_assert_eq!(u.merge_with(&u), u.clone());
        prop_assert!(u.merge_with(&PartialLassoValue::Bottom).is_bottom());
        if !u.is_bottom() && !v.is_bottom() {
            prop_assert_eq!(u.compatible(&v), !uv.is_bottom());
        }
    }

    #[test]
    fn update_defines_one_position(u in lasso(prop::option::of(0u8..2)), i in 0usize..12, x in 0u8..2) {
        let u = PartialLassoValue::from_lasso(u);
        let v = u.update(i, x);
        prop_assert_eq!(v.get(i), Some(&x));
        for j in (0..12).filter(|&j| j != i) {
            prop_assert_eq!(v.get(j), u.get(j));
        }
    }

    #[test]
    fn lasso_reshape_and_text(w in lasso(prop_oneof![Just("a".to_string()), Just("b".to_string())]), p in 0usize..4, k in 1usize..3) {
        let r = w.reshape(w.prefix().len() + p, w.period().len() * k);
        prop_assert!(w.omega_eq(&r));
        prop_assert_eq!(w.canonical(), r.canonical());
        prop_assert!(w.canonical().is_canonical());
        let back: LassoWord<String> = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w.canonical());
    }

    #[test]
    fn ratio_unrolling(p in prop::collection::vec(rw(), 0..4), l in prop::collection::vec(rw(), 1..5)) {
        prop_assert!(unrolled(&Ratio, &p, &l));
    }

    #[test]
    fn disc_unrolling(p in prop::collection::vec(dw(), 0..4), l in prop::collection::vec(dw(), 1..5)) {
        prop_assert!(unrolled(&Disc, &p, &l));
    }

    #[test]
    fn energy_unrolling(p in prop::collection::vec(ew(), 0..4), l in prop::collection::vec(ew(), 1..5)) {
        prop_assert!(unrolled(&Energy::new(2), &p, &l));
    }

    #[test]
    fn monoids(a in ext(), b in ext(), c in ext(), x: bool, y: bool, z: bool) {
        prop_assert!(monoid_laws(&Ratio, &a, &b, &c));
        prop_assert!(monoid_laws(&Disc, &a, &b, &c));
        prop_assert!(monoid_laws(&Energy::new(1), &Bit(x), &Bit(y), &Bit(z)));
    }

    #[test]
    fn muller_conversion_keeps_the_language((n, init, acc, trans) in automaton()) {
        let a = buchi(n, &init, &acc, &trans);
        let m = a.to_muller().unwrap();
        let back = m.to_buchi().unwrap();
        for w in sample_lassos(2, 12, 7) {
            let x = a.accepts_indices(&w).unwrap().is_some();
            prop_assert_eq!(m.accepts_indices(&w).unwrap().is_some(), x);
            prop_assert_eq!(back.accepts_indices(&w).unwrap().is_some(), x);
        }
    }

    #[test]
    fn ambiguity_witnesses_replay((n, init, acc, trans) in automaton()) {
        let a = buchi(n, &init, &acc, &trans);
        match a.check_ambiguity() {
            Some(wit) => {
                prop_assert!(a.is_accepting_run(&wit.runs.0, &wit.word));
                prop_assert!(a.is_accepting_run(&wit.runs.1, &wit.word));
                prop_assert!(!wit.runs.0.omega_eq(&wit.runs.1));
            }
            None => {
                for w in sample_lassos(2, 12, 11) {
                    if let Some(run) = a.accepts_indices(&w).unwrap() {
                        prop_assert!(a.is_accepting_run(&run, &w));
                    }
                }
            }
        }
        if init.len() == 1 && a.system().is_deterministic() {
            prop_assert!(a.check_ambiguity().is_none());
        }
    }

    #[test]
    fn weighted_text_round_trip((n, init, acc, trans) in automaton(), ws in prop::collection::vec(rw(), 8)) {
        let t: Vec<_> = trans.iter().zip(&ws).map(|(&(p, x, q), w)| WeightedTransition::new(p, x, q, w.clone())).collect();
        let a = WeightedBuchiAutomaton::new(
            Ratio,
            Alphabet::new(["a", "b"]).unwrap(),
            (0..n).map(|q| format!("q{q}")).collect(),
            init.clone(),
            (0..n).filter(|&q| acc[q]),
            t,
        ).unwrap();
        let text = a.to_string();
        let b = WeightedBuchiAutomaton::parse(Ratio, &text).unwrap();
        prop_assert_eq!(b.to_string(), text);
        let opts = SolverOptions::default();
        for w in sample_lassos(2, 8, 3) {
            prop_assert_eq!(a.behavior_indices(&w, &opts).unwrap(), b.behavior_indices(&w, &opts).unwrap());
        }
    }

    #[test]
    fn wal_text_round_trip(phi in wal()) {
        let text = phi.to_string();
        let back = parse_wal(&text, &Ratio).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back.free_vars(), phi.free_vars());
        prop_assert_eq!(back.constants(), phi.constants());
    }
}
