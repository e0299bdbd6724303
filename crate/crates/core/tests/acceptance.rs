//! One test per acceptance criterion. Each prints a single
//! `criterion N: PASS|FAIL ...` line before asserting, so
//! `cargo test --test acceptance -- --nocapture` reads as a report.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use walkit::buchi::{Alphabet, BuchiAutomaton, Transition};
use walkit::mso::VarAssignment;
use walkit::omega::{sample_lassos, PartialLassoValue};
use walkit::valuation::{Bit, Disc, DiscWeight, Energy, EnergyWeight, ExtReal, Ratio, RatioWeight, ValuationStructure, Q};
use walkit::wal::{
    compile_ewal, compile_wal, parse_ewal, parse_wal, proper_value, reference_aux_semantics, wba_to_ewal, wba_to_wal, CompileOptions,
    DEFAULT_UNROLL_BOUND,
};
use walkit::wba::{decompose, recompose, weighted_buchi_to_muller, weighted_muller_to_buchi, AnyWba, ProductGraph, SolverOptions, WeightedBuchiAutomaton};
use walkit::LassoWord;

const SEED: u64 = 20240601;
const LASSOS: usize = 20;

fn report(n: u32, ok: bool, detail: &str, elapsed: Duration, limit: Duration) {
    let ok = ok && elapsed < limit;
    println!(
        "criterion {n}: {} {detail} ({:.2}s, limit {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    assert!(ok, "criterion {n} failed: {detail}");
}

fn corpus_dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(sub)
}

fn corpus_files(sub: &str, ext: &str) -> Vec<(String, String)> {
    let mut files: Vec<_> = std::fs::read_dir(corpus_dir(sub))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| (p.file_stem().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect()
}

fn corpus_wbas() -> Vec<(String, AnyWba)> {
    corpus_files("wba", "wba").into_iter().map(|(name, text)| (name, AnyWba::parse(&text, None).unwrap().0)).collect()
}

macro_rules! each {
    ($any:expr, $a:ident => $body:expr) => {
        match $any {
            AnyWba::Ratio($a) => $body,
            AnyWba::Disc($a) => $body,
            AnyWba::Energy($a) => $body,
        }
    };
}

fn samples<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> Vec<LassoWord<String>> {
    sample_lassos(a.alphabet().len(), LASSOS, SEED).iter().map(|w| a.alphabet().decode(w)).collect()
}

/// First sampled word where `f` disagrees with `a`, as text.
fn first_difference<S: ValuationStructure>(
    a: &WeightedBuchiAutomaton<S>,
    mut f: impl FnMut(&LassoWord<String>) -> walkit::Result<S::Value>,
) -> Option<String> {
    let opts = SolverOptions::default();
    for w in samples(a) {
        let x = a.behavior(&w, &opts).unwrap();
        match f(&w) {
            Ok(y) if y == x => {}
            Ok(y) => return Some(format!("{w}: {x} vs {y}")),
            Err(e) => return Some(format!("{w}: {e}")),
        }
    }
    None
}

// ---------------------------------------------------------------- 1

fn partial(prefix: &[Option<char>], period: &[Option<char>]) -> PartialLassoValue<char> {
    PartialLassoValue::from_lasso(LassoWord::new(prefix.to_vec(), period.to_vec()).unwrap())
}

fn random_partial(rng: &mut ChaCha8Rng) -> PartialLassoValue<char> {
    if rng.gen_ratio(1, 20) {
        return PartialLassoValue::Bottom;
    }
    let p = rng.gen_range(0..=3);
    let l = rng.gen_range(1..=4);
    let mut pick = |n: usize| -> Vec<Option<char>> {
        (0..n)
            .map(|_| match rng.gen_range(0..4) {
                0 => Some('a'),
                1 => Some('b'),
                _ => None,
            })
            .collect()
    };
    let (prefix, period) = (pick(p), pick(l));
    partial(&prefix, &period)
}

#[test]
fn criterion_1_merging() {
    let start = Instant::now();
    let (a, b) = (Some('a'), Some('b'));
    let u1 = partial(&[], &[a]);
    let u2 = partial(&[], &[None, a]);
    let u3 = partial(&[], &[b, None]);
    let mut ok = u1.merge_with(&u2) == partial(&[], &[a])
        && u2.merge_with(&u3) == partial(&[], &[b, a])
        && u1.merge_with(&u3).is_bottom()
        && u1.compatible(&u2)
        && u2.compatible(&u3)
        && !u1.compatible(&u3);

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let top = PartialLassoValue::top();
    for _ in 0..500 {
        let (u, v, w) = (random_partial(&mut rng), random_partial(&mut rng), random_partial(&mut rng));
        let uv = u.merge_with(&v);
        ok &= uv == v.merge_with(&u);
        ok &= uv.merge_with(&w) == u.merge_with(&v.merge_with(&w));
        ok &= u.merge_with(&top) == u;
        ok &= u.merge_with(&u) == u;
        ok &= u.merge_with(&PartialLassoValue::Bottom).is_bottom();
        // Absorption: merging with something already contained changes nothing.
        if !uv.is_bottom() {
            ok &= uv.merge_with(&u) == uv;
        }
        ok &= uv.is_bottom() != u.compatible(&v) || u.is_bottom() || v.is_bottom();
    }
    report(1, ok, "example merges and 500 random merge-law checks", start.elapsed(), Duration::from_secs(1));
}

// ---------------------------------------------------------------- 2

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn qf(x: &Q) -> f64 {
    x.to_f64().unwrap()
}

fn ext_close(exact: &ExtReal, approx: f64, tol: f64) -> bool {
    match exact {
        ExtReal::PosInf => approx == f64::INFINITY,
        ExtReal::NegInf => approx == f64::NEG_INFINITY,
        ExtReal::Finite(x) => (qf(x) - approx).abs() <= tol,
    }
}

fn unroll_invariant<S: ValuationStructure>(s: &S, prefix: &[S::Weight], period: &[S::Weight]) -> bool {
    let base = s.val_lasso(prefix, period).unwrap();
    let longer: Vec<_> = prefix.iter().chain(period).cloned().collect();
    let doubled: Vec<_> = period.iter().chain(period).cloned().collect();
    s.val_lasso(&longer, period).unwrap() == base && s.val_lasso(prefix, &doubled).unwrap() == base
}

/// limsup of partial ratios, read off the last half of `n` positions.
/// Finite values here stay below 40 in magnitude, so anything past 1000
/// stands for an infinity.
fn simulate_ratio(prefix: &[RatioWeight], period: &[RatioWeight], n: usize) -> f64 {
    let (mut r, mut c) = (0f64, 0f64);
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        let w = if i < prefix.len() { &prefix[i] } else { &period[(i - prefix.len()) % period.len()] };
        r += qf(&w.reward);
        c += qf(&w.cost);
        if i >= n / 2 && c > 0.0 {
            best = best.max(r / c);
        }
    }
    if best > 1e3 {
        f64::INFINITY
    } else if best < -1e3 {
        f64::NEG_INFINITY
    } else {
        best
    }
}

/// Partial discounted sums, run until the remaining tail is provably below
/// `1e-10` and for at least 200 terms.
fn simulate_disc(prefix: &[DiscWeight], period: &[DiscWeight]) -> f64 {
    let cmax = prefix.iter().chain(period).map(|w| qf(&w.cost)).fold(0f64, f64::max);
    let dmax = prefix.iter().chain(period).map(|w| qf(&w.discount)).fold(0f64, f64::max);
    let (mut sum, mut factor) = (0f64, 1f64);
    let mut i = 0;
    loop {
        let w = if i < prefix.len() { &prefix[i] } else { &period[(i - prefix.len()) % period.len()] };
        sum += factor * qf(&w.cost);
        factor *= qf(&w.discount);
        i += 1;
        if i >= 200 && factor * cmax / (1.0 - dmax) < 1e-10 {
            return sum;
        }
    }
}

fn simulate_energy(prefix: &[EnergyWeight], period: &[EnergyWeight], passes: usize) -> Bit {
    let mut level = vec![0i64; period[0].0.len()];
    for w in prefix.iter().chain(period.iter().cycle().take(passes * period.len())) {
        for (l, z) in level.iter_mut().zip(&w.0) {
            *l += z;
        }
        if level.iter().any(|l| *l < 0) {
            return Bit(false);
        }
    }
    Bit(true)
}

fn shape(rng: &mut ChaCha8Rng) -> (usize, usize) {
    (rng.gen_range(0..=3), rng.gen_range(1..=4))
}

#[test]
fn criterion_2_valuations() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = Vec::new();
    for k in 0..200 {
        let (p, l) = shape(&mut rng);
        // A fifth of the instances have a free loop, to reach the frozen-denominator cases.
        let free_loop = k % 5 == 0;
        let mut gen = |n: usize, free: bool| -> Vec<RatioWeight> {
            (0..n).map(|_| RatioWeight::ints(rng.gen_range(-5..=5), if free { 0 } else { rng.gen_range(0..=5) })).collect()
        };
        let prefix = gen(p, false);
        let period = gen(l, free_loop);
        let exact = Ratio.val_lasso(&prefix, &period).unwrap();
        let sim = simulate_ratio(&prefix, &period, 100_000);
        if !ext_close(&exact, sim, 1e-3) || !unroll_invariant(&Ratio, &prefix, &period) {
            bad.push(format!("ratio {prefix:?} {period:?}: {exact} vs {sim}"));
        }
    }
    for _ in 0..200 {
        let (p, l) = shape(&mut rng);
        let mut gen = |n: usize| -> Vec<DiscWeight> {
            (0..n).map(|_| DiscWeight::new(q(rng.gen_range(0..=5)), Q::new(rng.gen_range(1..=99).into(), 100.into()))).collect()
        };
        let prefix = gen(p);
        let period = gen(l);
        let exact = Disc.val_lasso(&prefix, &period).unwrap();
        let sim = simulate_disc(&prefix, &period);
        if !ext_close(&exact, sim, 1e-9) || !unroll_invariant(&Disc, &prefix, &period) {
            bad.push(format!("disc {prefix:?} {period:?}: {exact} vs {sim}"));
        }
    }
    for _ in 0..200 {
        let (p, l) = shape(&mut rng);
        let dim = rng.gen_range(1..=3);
        let s = Energy::new(dim);
        let mut gen = |n: usize| -> Vec<EnergyWeight> { (0..n).map(|_| EnergyWeight((0..dim).map(|_| rng.gen_range(-3..=3)).collect())).collect() };
        let prefix = gen(p);
        let period = gen(l);
        let exact = s.val_lasso(&prefix, &period).unwrap();
        let sim = simulate_energy(&prefix, &period, 100);
        if exact != sim || !unroll_invariant(&s, &prefix, &period) {
            bad.push(format!("energy {prefix:?} {period:?}: {exact} vs {sim}"));
        }
    }
    let detail = match bad.first() {
        None => "600 lassos agree with simulation and are unroll-invariant".to_string(),
        Some(b) => format!("{} mismatches, first {b}", bad.len()),
    };
    report(2, bad.is_empty(), &detail, start.elapsed(), Duration::from_secs(10));
}

// ---------------------------------------------------------------- 3

fn nivat_round_trip<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> Result<(), String> {
    let t = decompose(a).map_err(|e| e.to_string())?;
    let back = recompose(&t, a.structure().clone(), &a.structure().default_one()).map_err(|e| e.to_string())?;
    if let Some(d) = first_difference(a, |w| back.behavior(w, &SolverOptions::default())) {
        return Err(d);
    }
    if a.is_unambiguous() {
        if let Some(w) = t.h_unambiguity_check() {
            return Err(format!("not h-unambiguous on {}", a.alphabet().decode(&w)));
        }
    }
    Ok(())
}

#[test]
fn criterion_3_nivat() {
    let start = Instant::now();
    let corpus = corpus_wbas();
    let kinds: std::collections::BTreeSet<String> = corpus.iter().map(|(_, a)| a.kind().to_string()).collect();
    let mut bad = Vec::new();
    let mut unambiguous = 0;
    for (name, a) in &corpus {
        let r = each!(a, a => { unambiguous += a.is_unambiguous() as usize; nivat_round_trip(a) });
        if let Err(e) = r {
            bad.push(format!("{name}: {e}"));
        }
    }
    let ok = bad.is_empty() && corpus.len() >= 10 && kinds.len() >= 3 && unambiguous > 0;
    let detail = format!("{} automata over {kinds:?}, {unambiguous} unambiguous; {bad:?}", corpus.len());
    report(3, ok, &detail, start.elapsed(), Duration::from_secs(30));
}

// ---------------------------------------------------------------- 4

fn muller_round_trip<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> Result<(), String> {
    let m = weighted_buchi_to_muller(a).map_err(|e| e.to_string())?;
    if let Some(d) = first_difference(a, |w| m.behavior(w, &SolverOptions::default())) {
        return Err(format!("as Muller: {d}"));
    }
    let back = weighted_muller_to_buchi(&m).map_err(|e| e.to_string())?;
    if let Some(d) = first_difference(a, |w| back.behavior(w, &SolverOptions::default())) {
        return Err(format!("back to Büchi: {d}"));
    }
    Ok(())
}

#[test]
fn criterion_4_muller() {
    let start = Instant::now();
    let corpus = corpus_wbas();
    let bad: Vec<String> = corpus
        .iter()
        .filter_map(|(name, a)| each!(a, a => muller_round_trip(a)).err().map(|e| format!("{name}: {e}")))
        .collect();
    let detail = format!("{} automata; {bad:?}", corpus.len());
    report(4, bad.is_empty(), &detail, start.elapsed(), Duration::from_secs(60));
}

// ---------------------------------------------------------------- 5

fn wal_round_trip<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> Result<(), String> {
    let phi = wba_to_wal(a).map_err(|e| e.to_string())?;
    let c = compile_wal(&phi, a.alphabet(), a.structure().clone(), &a.structure().default_one(), &CompileOptions::default())
        .map_err(|e| e.to_string())?;
    match first_difference(a, |w| c.behavior(w, &SolverOptions::default())) {
        Some(d) => Err(d),
        None => Ok(()),
    }
}

struct FormulaFile {
    name: String,
    structure: String,
    alphabet: Vec<String>,
    one: Option<String>,
    body: String,
}

fn corpus_formulas() -> Vec<FormulaFile> {
    corpus_files("wal", "wal")
        .into_iter()
        .map(|(name, text)| {
            let mut f = FormulaFile { name, structure: String::new(), alphabet: Vec::new(), one: None, body: String::new() };
            for line in text.lines().map(|l| l.split(';').next().unwrap().trim()) {
                if let Some(v) = line.strip_prefix("structure:") {
                    f.structure = v.trim().to_string();
                } else if let Some(v) = line.strip_prefix("alphabet:") {
                    f.alphabet = v.split_whitespace().map(str::to_string).collect();
                } else if let Some(v) = line.strip_prefix("one:") {
                    f.one = Some(v.trim().to_string());
                } else {
                    f.body += line;
                    f.body.push('\n');
                }
            }
            f
        })
        .collect()
}

fn one_of<S: ValuationStructure>(s: &S, f: &FormulaFile) -> S::Weight {
    f.one.as_deref().map_or_else(|| s.default_one(), |t| s.parse_weight(t).unwrap())
}

/// Compiled behavior against the reference evaluator on sampled lassos.
fn wal_against_reference<S: ValuationStructure>(s: S, f: &FormulaFile) -> Result<(), String> {
    let phi = parse_wal(&f.body, &s).map_err(|e| e.to_string())?;
    let sigma = Alphabet::new(f.alphabet.iter().map(String::as_str)).unwrap();
    let one = one_of(&s, f);
    let c = compile_wal(&phi, &sigma, s.clone(), &one, &CompileOptions::default()).map_err(|e| e.to_string())?;
    for w in sample_lassos(sigma.len(), LASSOS, SEED) {
        let w = sigma.decode(&w);
        let aux = reference_aux_semantics(&phi, &w, &VarAssignment::new(), DEFAULT_UNROLL_BOUND).map_err(|e| e.to_string())?;
        let want = proper_value(&s, &aux, &one).unwrap();
        let got = c.behavior(&w, &SolverOptions::default()).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("{w}: compiled {got}, reference {want}"));
        }
    }
    Ok(())
}

#[test]
fn criterion_5_unambiguous_direction() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut automata = 0;
    for (name, a) in corpus_wbas() {
        if !each!(&a, a => a.is_unambiguous()) {
            continue;
        }
        automata += 1;
        if let Err(e) = each!(&a, a => wal_round_trip(a)) {
            bad.push(format!("{name}: {e}"));
        }
    }
    let mut sentences = 0;
    for f in corpus_formulas() {
        if f.body.contains("join") {
            continue;
        }
        sentences += 1;
        let r = match f.structure.as_str() {
            "ratio" => wal_against_reference(Ratio, &f),
            "disc" => wal_against_reference(Disc, &f),
            e => wal_against_reference(Energy::new(e.trim_start_matches("energy").parse().unwrap_or(1)), &f),
        };
        if let Err(e) = r {
            bad.push(format!("{}: {e}", f.name));
        }
    }
    let detail = format!("{automata} unambiguous automata, {sentences} sentences; {bad:?}");
    report(5, bad.is_empty() && automata >= 6 && sentences >= 6, &detail, start.elapsed(), Duration::from_secs(300));
}

// ---------------------------------------------------------------- 6

fn ewal_round_trip<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> Result<(), String> {
    let psi = wba_to_ewal(a).map_err(|e| e.to_string())?;
    let opts = CompileOptions { prefix_cap: psi.prefix.len(), ..CompileOptions::default() };
    let c = compile_ewal(&psi, a.alphabet(), a.structure().clone(), &a.structure().default_one(), &opts).map_err(|e| e.to_string())?;
    match first_difference(a, |w| c.behavior(w, &SolverOptions::default())) {
        Some(d) => Err(d),
        None => Ok(()),
    }
}

#[test]
fn criterion_6_nondeterministic_direction() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut names = Vec::new();
    for (name, a) in corpus_wbas() {
        names.push(name.clone());
        if let Err(e) = each!(&a, a => ewal_round_trip(a)) {
            bad.push(format!("{name}: {e}"));
        }
    }
    // The two-loop automaton takes the better loop.
    let text = std::fs::read_to_string(corpus_dir("wba").join("ratio_two_loops.wba")).unwrap();
    let a = WeightedBuchiAutomaton::parse(Ratio, &text).unwrap();
    let psi = wba_to_ewal(&a).unwrap();
    let c = compile_ewal(&psi, a.alphabet(), Ratio, &Ratio.default_one(), &CompileOptions::default()).unwrap();
    let three = c.behavior(&"(a)".parse().unwrap(), &SolverOptions::default()).unwrap();
    let ok = bad.is_empty() && names.len() >= 6 && three == ExtReal::int(3);
    let detail = format!("{} automata, two loops on (a) = {three}; {bad:?}", names.len());
    report(6, ok, &detail, start.elapsed(), Duration::from_secs(300));
}

// ---------------------------------------------------------------- 7

fn formula(name: &str) -> FormulaFile {
    corpus_formulas().into_iter().find(|f| f.name == name).unwrap()
}

#[test]
fn criterion_7_worked_examples() {
    let start = Instant::now();
    let opts = SolverOptions::default();

    // Letter costs a ↦ (1,1), b ↦ (3,1), c ↦ 𝟙 = (0,1): on a periodic word the
    // ratio is the mean over one period.
    let costs = formula("costs");
    let sigma = Alphabet::new(costs.alphabet.iter().map(String::as_str)).unwrap();
    let phi = parse_wal(&costs.body, &Ratio).unwrap();
    let c = compile_wal(&phi, &sigma, Ratio, &one_of(&Ratio, &costs), &CompileOptions::default()).unwrap();
    let mean = |period: &[&str]| {
        let total: i64 = period.iter().map(|l| match *l {
            "a" => 1,
            "b" => 3,
            _ => 0,
        }).sum();
        ExtReal::Finite(Q::new(total.into(), (period.len() as i64).into()))
    };
    let ab = c.behavior(&"(a b)".parse().unwrap(), &opts).unwrap();
    let abc = c.behavior(&"(a b c)".parse().unwrap(), &opts).unwrap();
    let costs_ok = ab == ExtReal::int(2) && ab == mean(&["a", "b"]) && abc == mean(&["a", "b", "c"]);

    // Bellman: V = min(5 + V/2, 2 + 3V/4). Each stationary choice has value
    // c/(1-d); the fixed point is the one satisfying the equation.
    let choices = [(q(5), Q::new(1.into(), 2.into())), (q(2), Q::new(3.into(), 4.into()))];
    let bellman = |v: &Q| choices.iter().map(|(c, d)| c + d * v).min().unwrap();
    let stationary: Vec<Q> = choices.iter().map(|(c, d)| c / (Q::one() - d)).collect();
    let fixed: Vec<&Q> = stationary.iter().filter(|v| bellman(v) == **v).collect();
    // Brute force over periodic X of period at most 3.
    let mut brute: Option<ExtReal> = None;
    for len in 1..=3usize {
        for mask in 0..(1u32 << len) {
            let period: Vec<DiscWeight> = (0..len)
                .map(|i| {
                    let (c, d) = &choices[if mask >> i & 1 == 1 { 0 } else { 1 }];
                    DiscWeight::new(c.clone(), d.clone())
                })
                .collect();
            let v = Disc.val_lasso(&[], &period).unwrap();
            brute = Some(match brute {
                Some(b) if b <= v => b,
                _ => v,
            });
        }
    }
    let sched = formula("cheapest_schedule");
    let sigma = Alphabet::new(sched.alphabet.iter().map(String::as_str)).unwrap();
    let psi = parse_ewal(&sched.body, &Disc).unwrap();
    let c = compile_ewal(&psi, &sigma, Disc, &one_of(&Disc, &sched), &CompileOptions::default()).unwrap();
    let eight = c.behavior(&"(a)".parse().unwrap(), &opts).unwrap();
    let sched_ok = fixed.len() == 1
        && ExtReal::Finite(fixed[0].clone()) == eight
        && brute.as_ref() == Some(&eight)
        && eight == ExtReal::int(8);

    let detail = format!("costs on (a b) = {ab}, (a b c) = {abc}; schedule on (a) = {eight}, Bellman {fixed:?}, brute force {brute:?}");
    report(7, costs_ok && sched_ok, &detail, start.elapsed(), Duration::from_secs(300));
}

// ---------------------------------------------------------------- 8

fn random_dba(rng: &mut ChaCha8Rng) -> (usize, Vec<bool>, Vec<(usize, usize, usize)>) {
    let n = rng.gen_range(1..=5);
    let accepting: Vec<bool> = (0..n).map(|q| q == 0 || rng.gen_bool(0.4)).collect();
    let mut trans = Vec::new();
    for p in 0..n {
        for a in 0..2 {
            if rng.gen_bool(0.85) {
                trans.push((p, a, rng.gen_range(0..n)));
            }
        }
    }
    (n, accepting, trans)
}

fn build(n: usize, initial: Vec<usize>, accepting: &[bool], trans: &[(usize, usize, usize)]) -> BuchiAutomaton {
    BuchiAutomaton::new(
        Alphabet::new(["a", "b"]).unwrap(),
        (0..n).map(|q| format!("q{q}")).collect(),
        initial,
        (0..n).filter(|&q| accepting[q]),
        trans.iter().map(|&(p, a, q)| Transition::new(p, a, q)).collect(),
    )
    .unwrap()
}

/// Walks a run by hand: consecutive transitions chain, letters match, the
/// first source is initial and some loop transition enters an accepting state.
fn replays(a: &BuchiAutomaton, run: &LassoWord<usize>, w: &LassoWord<usize>) -> bool {
    let ts = a.transitions();
    let p = run.prefix().len().max(w.prefix().len());
    let l = num_integer::lcm(run.period().len(), w.period().len());
    let step = |i: usize| ts.get(*run.at(i));
    let Some(first) = step(0) else { return false };
    if !a.system().initial().contains(&first.from) {
        return false;
    }
    let chained = (0..p + l).all(|i| match (step(i), step(i + 1)) {
        (Some(t), Some(u)) => t.letter == *w.at(i) && t.to == u.from,
        _ => false,
    });
    chained && (p..p + l).any(|i| a.is_accepting(ts[*run.at(i)].to))
}

#[test]
fn criterion_8_ambiguity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut false_positives = 0;
    let mut dets = 0;
    while dets < 20 {
        let (n, acc, trans) = random_dba(&mut rng);
        let a = build(n, vec![0], &acc, &trans);
        assert!(a.system().is_deterministic());
        dets += 1;
        false_positives += a.check_ambiguity().is_some() as usize;
    }
    let mut ambiguous = 0;
    let mut bad = Vec::new();
    while ambiguous < 10 {
        let (n, acc, mut trans) = random_dba(&mut rng);
        if build(n, vec![0], &acc, &trans).is_empty() {
            continue;
        }
        let a = if ambiguous % 2 == 0 {
            // Two disjoint copies, both initial.
            let copy: Vec<_> = trans.iter().map(|&(p, x, q)| (p + n, x, q + n)).collect();
            trans.extend(copy);
            let acc2: Vec<bool> = acc.iter().chain(&acc).copied().collect();
            build(2 * n, vec![0, n], &acc2, &trans)
        } else {
            // A twin of the initial state: every transition into it also
            // enters the twin, which has the same successors.
            let mut extra: Vec<_> = trans.iter().filter(|t| t.2 == 0).map(|&(p, x, _)| (p, x, n)).collect();
            extra.extend(trans.iter().filter(|t| t.0 == 0).map(|&(_, x, q)| (n, x, q)));
            trans.extend(extra);
            let mut acc2 = acc.clone();
            acc2.push(acc[0]);
            let a = build(n + 1, vec![0], &acc2, &trans);
            // Only automata where some accepting run passes through state 0
            // after the start are ambiguous; skip the others.
            if a.check_ambiguity().is_none() {
                continue;
            }
            a
        };
        ambiguous += 1;
        match a.check_ambiguity() {
            None => bad.push(format!("missed ambiguity in automaton {ambiguous}")),
            Some(wit) => {
                let (r1, r2) = &wit.runs;
                if !replays(&a, r1, &wit.word) || !replays(&a, r2, &wit.word) || r1.omega_eq(r2) {
                    bad.push(format!("witness {ambiguous} does not replay"));
                }
            }
        }
    }
    let ok = false_positives == 0 && bad.is_empty();
    let detail = format!("{false_positives} false positives on {dets} deterministic automata; {ambiguous} ambiguous automata {bad:?}");
    report(8, ok, &detail, start.elapsed(), Duration::from_secs(5));
}

// ---------------------------------------------------------------- 9

/// A chain of small dense clusters. Costs are positive, so the best value is
/// the best simple-cycle ratio inside a reachable cluster that holds an
/// accepting vertex, and there are few enough simple cycles to list.
fn random_graph(rng: &mut ChaCha8Rng) -> (usize, Vec<usize>, Vec<usize>, Vec<(usize, usize, RatioWeight)>) {
    let target = rng.gen_range(1..=400);
    let mut bounds = vec![0];
    while *bounds.last().unwrap() < target {
        let size = rng.gen_range(1..=6).min(target - bounds.last().unwrap());
        bounds.push(bounds.last().unwrap() + size);
    }
    let clusters = bounds.len() - 1;
    let n = *bounds.last().unwrap();
    let mut edges = Vec::new();
    let weight = |rng: &mut ChaCha8Rng| RatioWeight::ints(rng.gen_range(-10..=10), rng.gen_range(1..=10));
    for c in 0..clusters {
        let (lo, hi) = (bounds[c], bounds[c + 1]);
        for u in lo..hi {
            for v in lo..hi {
                if rng.gen_bool(0.45) {
                    edges.push((u, v, weight(rng)));
                }
            }
        }
        // Occasionally a parallel edge.
        if rng.gen_bool(0.2) {
            let (u, v) = (rng.gen_range(lo..hi), rng.gen_range(lo..hi));
            edges.push((u, v, weight(rng)));
        }
        // Forward links only, so clusters are the components.
        for _ in 0..rng.gen_range(0..=2) {
            if c + 1 < clusters {
                let d = rng.gen_range(c + 1..clusters);
                edges.push((rng.gen_range(lo..hi), rng.gen_range(bounds[d]..bounds[d + 1]), weight(rng)));
            }
        }
    }
    let initial: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..n)).collect();
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.15)).collect();
    (n, initial, accepting, edges)
}

/// Components by mutual reachability, then every simple cycle listed from
/// its smallest vertex.
fn brute_force(n: usize, initial: &[usize], accepting: &[usize], edges: &[(usize, usize, RatioWeight)]) -> ExtReal {
    let reach_from = |s: usize| {
        let mut seen = vec![false; n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for (a, b, _) in edges {
                if *a == u && !seen[*b] {
                    seen[*b] = true;
                    stack.push(*b);
                }
            }
        }
        seen
    };
    let reach: Vec<Vec<bool>> = (0..n).map(reach_from).collect();
    let reachable: Vec<bool> = (0..n).map(|v| initial.iter().any(|&i| reach[i][v])).collect();
    let same = |u: usize, v: usize| reach[u][v] && reach[v][u];
    let good = |u: usize| reachable[u] && accepting.iter().any(|&f| same(u, f));

    let mut best = ExtReal::NegInf;
    fn dfs(
        start: usize,
        u: usize,
        on_path: &mut Vec<bool>,
        sums: (Q, Q),
        edges: &[(usize, usize, RatioWeight)],
        ok: &dyn Fn(usize) -> bool,
        best: &mut ExtReal,
    ) {
        for (a, b, w) in edges {
            if *a != u || *b < start || !ok(*b) {
                continue;
            }
            let s = (&sums.0 + &w.reward, &sums.1 + &w.cost);
            if *b == start {
                let r = ExtReal::Finite(&s.0 / &s.1);
                if r > *best {
                    *best = r;
                }
            } else if !on_path[*b] {
                on_path[*b] = true;
                dfs(start, *b, on_path, s, edges, ok, best);
                on_path[*b] = false;
            }
        }
    }
    for s in (0..n).filter(|&s| good(s)) {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let ok = |v: usize| same(s, v);
        dfs(s, s, &mut on_path, (Q::zero(), Q::zero()), edges, &ok, &mut best);
    }
    best
}

#[test]
fn criterion_9_ratio_solver() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = Vec::new();
    let mut largest = 0;
    let mut finite = 0;
    for k in 0..50 {
        let (n, initial, accepting, edges) = random_graph(&mut rng);
        largest = largest.max(n);
        let want = brute_force(n, &initial, &accepting, &edges);
        finite += want.is_finite() as usize;
        let g = ProductGraph::new(n, initial, accepting, edges).unwrap();
        let got = Ratio.solve_product(&g, &SolverOptions::default()).unwrap().unwrap();
        if got != want {
            bad.push(format!("graph {k}: solver {got}, brute force {want}"));
        }
    }
    let ok = bad.is_empty() && largest <= 400;
    let detail = format!("50 graphs up to {largest} vertices, {finite} with a finite value; {bad:?}");
    report(9, ok, &detail, start.elapsed(), Duration::from_secs(30));
}
