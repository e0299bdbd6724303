//! Splitting a weighted automaton into a relabelling, a weight map and a
//! plain Büchi language over transitions, and putting such a triple back
//! together.

use std::collections::HashMap;
use std::fmt;

use crate::buchi::{Alphabet, BuchiAutomaton, Transition, TransitionSystem, EXPLORE_LIMIT};
use crate::error::{Error, Result};
use crate::format::parse_raw;
use crate::graph::Explored;
use crate::omega::LassoWord;
use crate::valuation::ValuationStructure;

use super::{WeightedBuchiAutomaton, WeightedSystem, WeightedTransition};

/// `(h, g, ℒ)`: `h : Γ → Σ`, `g : Γ → M ∪ {#}` and a Büchi language over `Γ`.
/// `g[γ] == None` stands for `#`, which becomes the default weight on
/// recomposition.
#[derive(Clone, Debug)]
pub struct NivatTriple<W> {
    pub sigma: Alphabet,
    pub gamma: Alphabet,
    pub h: Vec<usize>,
    pub g: Vec<Option<W>>,
    pub language: BuchiAutomaton,
}

impl<W: Clone + fmt::Display> NivatTriple<W> {
    pub fn new(sigma: Alphabet, gamma: Alphabet, h: Vec<usize>, g: Vec<Option<W>>, language: BuchiAutomaton) -> Result<Self> {
        if h.len() != gamma.len() || g.len() != gamma.len() {
            return Err(Error::input("h and g must have one entry per letter of Γ"));
        }
        if let Some(a) = h.iter().find(|&&a| a >= sigma.len()) {
            return Err(Error::input(format!("h maps to letter index {a} outside Σ")));
        }
        if !language.alphabet().same_as(&gamma) {
            return Err(Error::input("the language must be over Γ"));
        }
        Ok(NivatTriple { sigma, gamma, h, g, language })
    }

    /// A word over `Σ` with two accepting words of `ℒ` that map to it under
    /// `h`, or `None` if `h` is injective on `ℒ`.
    pub fn h_unambiguity_check(&self) -> Option<LassoWord<usize>> {
        let ts = self.language.system();
        let acc = |q: usize| self.language.is_accepting(q);
        // (p1, p2, diverged, phase), as in the plain ambiguity check but
        // comparing images under h.
        let roots = ts.initial().iter().flat_map(|&p| ts.initial().iter().map(move |&q| (p, q, false, 0u8)));
        let g = Explored::explore(roots, EXPLORE_LIMIT, |&(p, q, d, phase)| {
            let next_phase = match phase {
                0 if acc(p) => 1,
                1 if acc(q) => 0,
                ph => ph,
            };
            let mut succ = Vec::new();
            for &s in ts.out(p) {
                for &t in ts.out(q) {
                    let (x, y) = (ts.transitions()[s], ts.transitions()[t]);
                    if self.h[x.letter] == self.h[y.letter] {
                        succ.push((self.h[x.letter], (x.to, y.to, d || x.letter != y.letter, next_phase)));
                    }
                }
            }
            succ
        })?;
        let (path, cycle) = g.accepting_lasso(|&(p, _, d, ph)| d && ph == 0 && acc(p))?;
        Some(LassoWord::new(path, cycle).expect("cycles are nonempty"))
    }

    /// The triple in the text format: the language automaton plus `sigma:`,
    /// `map:` lines `γ h(γ) g(γ)` and a `structure:` header.
    pub fn to_text(&self, header: &str) -> String {
        let mut s = format!("structure: {header}\nsigma: {}\n", self.sigma.letters().join(" "));
        for (c, (&a, w)) in self.h.iter().zip(&self.g).enumerate() {
            let w = w.as_ref().map_or("#".to_string(), |w| w.to_string());
            s.push_str(&format!("map: {} {} {}\n", self.gamma.name(c), self.sigma.name(a), w));
        }
        s.push_str(&self.language.to_string());
        s
    }

    /// Reads [`Self::to_text`] output.
    pub fn parse<S: ValuationStructure<Weight = W>>(structure: &S, text: &str) -> Result<Self> {
        let raw = parse_raw(text, &["structure", "sigma", "map"])?;
        let sigma_line = raw.header_line("sigma");
        let sigma = Alphabet::new(raw.header("sigma").ok_or_else(|| Error::parse(1, 1, "missing `sigma:` line"))?.split_whitespace())
            .map_err(|e| Error::parse(sigma_line, 1, e.to_string()))?;
        let language = BuchiAutomaton::from_raw(&raw)?;
        let gamma = language.alphabet().clone();
        let mut h = vec![None; gamma.len()];
        let mut g = vec![None; gamma.len()];
        for (k, v, line) in &raw.headers {
            if k != "map" {
                continue;
            }
            let toks: Vec<&str> = v.split_whitespace().collect();
            if toks.len() < 3 {
                return Err(Error::parse(*line, 1, "map lines are written `map: γ a weight`"));
            }
            let c = gamma.index_of(toks[0]).ok_or_else(|| Error::parse(*line, 1, format!("`{}` is not a letter of the language", toks[0])))?;
            let a = sigma.index_of(toks[1]).ok_or_else(|| Error::parse(*line, 1, format!("`{}` is not in sigma", toks[1])))?;
            let w = toks[2..].join(" ");
            h[c] = Some(a);
            g[c] = if w == "#" { None } else { Some(structure.parse_weight(&w).map_err(|e| Error::parse(*line, 1, e.to_string()))?) };
        }
        let h = h
            .into_iter()
            .enumerate()
            .map(|(c, a)| a.ok_or_else(|| Error::parse(1, 1, format!("no map line for `{}`", gamma.name(c)))))
            .collect::<Result<Vec<_>>>()?;
        NivatTriple::new(sigma, gamma, h, g, language)
    }
}

/// Letters of `Γ` are the transitions of `a`, named `t0, t1, …`, with `h`
/// and `g` reading off letter and weight; `ℒ` is `a` relabelled.
pub fn decompose<S: ValuationStructure>(a: &WeightedBuchiAutomaton<S>) -> Result<NivatTriple<S::Weight>> {
    let ts = a.transitions();
    let gamma = Alphabet::new((0..ts.len()).map(|i| format!("t{i}")))?;
    let h = ts.iter().map(|t| t.letter).collect();
    let g = ts.iter().map(|t| Some(t.weight.clone())).collect();
    let trans = ts.iter().enumerate().map(|(i, t)| Transition::new(t.from, i, t.to)).collect();
    let (sys, _) = TransitionSystem::build(gamma.clone(), a.states().to_vec(), a.initial().to_vec(), trans)?;
    let language = BuchiAutomaton::from_system(sys, a.accepting_states())?;
    NivatTriple::new(a.alphabet().clone(), gamma, h, g, language)
}

/// States `(p, γ)`: in `p`, having last read `γ`. Starting pairs use the
/// least letter of `Γ` by name. Only the reachable part is built.
///
/// Fails with [`Error::Ambiguous`] when the structure's sum is not
/// idempotent and `ℒ` is ambiguous, since runs would then be double counted.
pub fn recompose<S: ValuationStructure>(t: &NivatTriple<S::Weight>, structure: S, one: &S::Weight) -> Result<WeightedBuchiAutomaton<S>> {
    structure.check_weight(one)?;
    recompose_with(t, structure, Some(one))
}

pub(crate) fn recompose_with<S: ValuationStructure>(t: &NivatTriple<S::Weight>, structure: S, one: Option<&S::Weight>) -> Result<WeightedBuchiAutomaton<S>> {
    if !structure.idempotent() {
        if let Some(w) = t.language.check_ambiguity() {
            return Err(Error::Ambiguous { witness: t.gamma.decode(&w.word).to_string() });
        }
    }
    let weight = |c: usize| -> Result<S::Weight> {
        match (&t.g[c], one) {
            (Some(w), _) => {
                structure.check_weight(w)?;
                Ok(w.clone())
            }
            (None, Some(o)) => Ok(o.clone()),
            (None, None) => Err(Error::input(format!("letter `{}` has weight # and no default weight was given", t.gamma.name(c)))),
        }
    };
    let ts = t.language.system();
    let Some(g0) = (0..t.gamma.len()).min_by(|&x, &y| t.gamma.name(x).cmp(t.gamma.name(y))) else {
        return WeightedBuchiAutomaton::new(structure, t.sigma.clone(), Vec::new(), Vec::new(), [], Vec::new());
    };
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut intern = |pair: (usize, usize), pairs: &mut Vec<(usize, usize)>| {
        *index.entry(pair).or_insert_with(|| {
            pairs.push(pair);
            pairs.len() - 1
        })
    };
    let initial: Vec<usize> = ts.initial().iter().map(|&p| intern((p, g0), &mut pairs)).collect();
    let mut trans = Vec::new();
    let mut next = 0;
    while next < pairs.len() {
        let (p, _) = pairs[next];
        for &i in ts.out(p) {
            let tr = ts.transitions()[i];
            let to = intern((tr.to, tr.letter), &mut pairs);
            trans.push(WeightedTransition::new(next, t.h[tr.letter], to, weight(tr.letter)?));
        }
        next += 1;
        if pairs.len() > EXPLORE_LIMIT {
            return Err(Error::Resource("recomposed automaton is too large".into()));
        }
    }
    let states = pairs.iter().map(|&(p, c)| format!("{}.{}", ts.states()[p], t.gamma.name(c))).collect();
    let accepting: Vec<usize> = (0..pairs.len()).filter(|&i| t.language.is_accepting(pairs[i].0)).collect();
    let sys = WeightedSystem::build(t.sigma.clone(), states, initial, trans)?;
    WeightedBuchiAutomaton::from_system(structure, sys, accepting)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{ExtReal, Ratio, RatioWeight};
    use crate::wba::SolverOptions;

    fn lasso(s: &str) -> LassoWord<String> {
        s.parse().unwrap()
    }

    #[test]
    fn round_trip_keeps_behavior() {
        let a = WeightedBuchiAutomaton::from_names(
            Ratio,
            &["a", "b"],
            &["p"],
            &["q"],
            &[("p", "a", "q", RatioWeight::ints(1, 1)), ("q", "b", "p", RatioWeight::ints(3, 1)), ("q", "a", "q", RatioWeight::ints(5, 2))],
        )
        .unwrap();
        let t = decompose(&a).unwrap();
        assert_eq!(t.gamma.len(), 3);
        assert!(t.h_unambiguity_check().is_none());
        let b = recompose(&t, Ratio, &RatioWeight::ints(0, 1)).unwrap();
        let o = SolverOptions::default();
        for w in ["(a b)", "a (a)", "(a a b)", "(b)"] {
            assert_eq!(a.behavior(&lasso(w), &o).unwrap(), b.behavior(&lasso(w), &o).unwrap(), "{w}");
        }
        let text = t.to_text("ratio");
        let back = NivatTriple::parse(&Ratio, &text).unwrap();
        assert_eq!(back.h, t.h);
        assert_eq!(back.g, t.g);
    }

    #[test]
    fn identity_triple_gives_the_default_everywhere() {
        let sigma = Alphabet::new(["a", "b"]).unwrap();
        let lang = BuchiAutomaton::from_names(&["a", "b"], &["q"], &["q"], &[("q", "a", "q"), ("q", "b", "q")]).unwrap();
        let t = NivatTriple::new(sigma.clone(), sigma, vec![0, 1], vec![None, None], lang).unwrap();
        let b = recompose(&t, Ratio, &RatioWeight::ints(2, 1)).unwrap();
        let o = SolverOptions::default();
        assert_eq!(b.behavior(&lasso("a (b a)"), &o).unwrap(), ExtReal::int(2));
    }

    #[test]
    fn collapsing_h_is_detected() {
        let sigma = Alphabet::new(["a"]).unwrap();
        let gamma = Alphabet::new(["x", "y"]).unwrap();
        let lang = BuchiAutomaton::from_names(&["x", "y"], &["q"], &["q"], &[("q", "x", "q"), ("q", "y", "q")]).unwrap();
        let t: NivatTriple<RatioWeight> = NivatTriple::new(sigma, gamma, vec![0, 0], vec![None, None], lang).unwrap();
        assert!(t.h_unambiguity_check().is_some());
    }
}
