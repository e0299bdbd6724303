//! From a WAL formula to an MSO formula over `Σ × Δ` whose models are the
//! words paired with an encoding of the formula's auxiliary value.
//!
//! `Φ_Y(ζ)` is built by induction on `ζ`, with the set variable `Y` holding
//! the domain of the partial word produced by `ζ`. Positions outside the
//! domain carry `#`.

use std::collections::HashMap;

use crate::buchi::Alphabet;
use crate::error::{Error, Result};
use crate::mso::{MsoFormula, Order, Var};

use super::{Wal, WalNode};

/// Names and projections of the letters of `Γ = Σ × Δ × 2^k`. `Δ` is the
/// list of constants followed by `#`; `k = 0` for plain WAL.
#[derive(Clone, Debug)]
pub(crate) struct GammaLetters {
    sigma: Alphabet,
    consts: usize,
    tracks: usize,
}

impl GammaLetters {
    pub fn new(sigma: &Alphabet, consts: usize, tracks: usize) -> Self {
        GammaLetters { sigma: sigma.clone(), consts, tracks }
    }

    /// All letters as `(a, b, bits)` with `b == None` for `#`, in alphabet order.
    pub fn all(&self) -> Vec<(usize, Option<usize>, usize)> {
        let mut out = Vec::new();
        for a in 0..self.sigma.len() {
            for b in (0..self.consts).map(Some).chain([None]) {
                for u in 0..1usize << self.tracks {
                    out.push((a, b, u));
                }
            }
        }
        out
    }

    pub fn name(&self, (a, b, u): (usize, Option<usize>, usize)) -> String {
        let mut s = format!("{}_{}", self.sigma.name(a), b.map_or("#".to_string(), |k| k.to_string()));
        if self.tracks > 0 {
            s.push('_');
            s.extend((0..self.tracks).map(|j| if u >> j & 1 == 1 { '1' } else { '0' }));
        }
        s
    }

    pub fn alphabet(&self) -> Result<Alphabet> {
        Alphabet::new(self.all().into_iter().map(|l| self.name(l)))
    }

    /// Names of the letters whose components pass the filters.
    fn matching(&self, a: Option<usize>, b: Option<Option<usize>>, bit: Option<usize>) -> Vec<String> {
        self.all()
            .into_iter()
            .filter(|&(x, y, u)| a.is_none_or(|a| a == x) && b.is_none_or(|b| b == y) && bit.is_none_or(|j| u >> j & 1 == 1))
            .map(|l| self.name(l))
            .collect()
    }

    fn letter_index(&self, a: &str) -> Result<usize> {
        self.sigma.index_of(a).ok_or_else(|| Error::input(format!("letter `{a}` is not in the alphabet")))
    }

    /// `Γ` letters at `x` whose weight component is `#`.
    pub fn undefined_at(&self, x: &Var) -> MsoFormula {
        MsoFormula::letters(self.matching(None, Some(None), None), x)
    }
}

pub(crate) struct PhiBuilder<'a, W> {
    letters: &'a GammaLetters,
    consts: &'a [W],
    /// Compile assignment-free subformulas as their MSO reading.
    shortcut: bool,
    counter: usize,
    memo: HashMap<(*const WalNode<W>, Var), MsoFormula>,
    // Keeps memoized nodes alive so their addresses stay unique.
    keep: Vec<Wal<W>>,
    y: Var,
}

impl<'a, W: Clone + Ord> PhiBuilder<'a, W> {
    pub fn new(letters: &'a GammaLetters, consts: &'a [W], shortcut: bool) -> Self {
        PhiBuilder { letters, consts, shortcut, counter: 0, memo: HashMap::new(), keep: Vec::new(), y: Var::generated(0, Order::First) }
    }

    fn fresh(&mut self) -> Var {
        self.counter += 1;
        Var::generated(self.counter, Order::Second)
    }

    /// `Y(∅)`, i.e. `∀y.¬Y(y)`.
    fn empty(&self, set: &Var) -> MsoFormula {
        MsoFormula::forall(&self.y, MsoFormula::not(MsoFormula::member(set, &self.y)))
    }

    fn subset(&self, a: &Var, b: &Var) -> MsoFormula {
        MsoFormula::forall(&self.y, MsoFormula::implies(MsoFormula::member(a, &self.y), MsoFormula::member(b, &self.y)))
    }

    fn letter(&self, a: &str, x: &Var) -> Result<MsoFormula> {
        let a = self.letters.letter_index(a)?;
        Ok(MsoFormula::letters(self.letters.matching(Some(a), None, None), x))
    }

    /// The MSO reading of an assignment-free formula.
    fn boolean(&self, z: &Wal<W>) -> Result<MsoFormula> {
        Ok(match z.node() {
            WalNode::Letter(a, x) => self.letter(a, x)?,
            WalNode::Eq(x, y) => MsoFormula::eq(x, y),
            WalNode::Less(x, y) => MsoFormula::less(x, y),
            WalNode::In(s, x) => MsoFormula::member(s, x),
            WalNode::Assign(..) => return Err(Error::internal("assignment in an assignment-free formula")),
            WalNode::Implies(a, b) => MsoFormula::implies(self.boolean(a)?, self.boolean(b)?),
            WalNode::Meet(a, b) => MsoFormula::and(self.boolean(a)?, self.boolean(b)?),
            WalNode::MeetAll(x, a) => MsoFormula::forall(x, self.boolean(a)?),
        })
    }

    /// `Φ_Y(ζ)`.
    pub fn phi_y(&mut self, z: &Wal<W>, set: &Var) -> Result<MsoFormula> {
        let key = (z.ptr(), set.clone());
        if let Some(f) = self.memo.get(&key) {
            return Ok(f.clone());
        }
        let f = if self.shortcut && !z.has_assignment() {
            MsoFormula::and(self.boolean(z)?, self.empty(set))
        } else {
            match z.node() {
                WalNode::Letter(a, x) => MsoFormula::and(self.letter(a, x)?, self.empty(set)),
                WalNode::Eq(x, y) => MsoFormula::and(MsoFormula::eq(x, y), self.empty(set)),
                WalNode::Less(x, y) => MsoFormula::and(MsoFormula::less(x, y), self.empty(set)),
                WalNode::In(s, x) => MsoFormula::and(MsoFormula::member(s, x), self.empty(set)),
                WalNode::Assign(x, m) => {
                    let k = self.consts.iter().position(|c| c == m).ok_or_else(|| Error::internal("constant missing from Δ"))?;
                    let labelled = MsoFormula::letters(self.letters.matching(None, Some(Some(k)), None), x);
                    let only_x = MsoFormula::forall(&self.y, MsoFormula::iff(MsoFormula::member(set, &self.y), MsoFormula::eq(x, &self.y)));
                    MsoFormula::and(labelled, only_x)
                }
                WalNode::Implies(a, b) => {
                    let zv = self.fresh();
                    let pa = self.phi_y(a, &zv)?;
                    let kappa = MsoFormula::exists(&zv, MsoFormula::and(pa, self.empty(&zv)));
                    let pb = self.phi_y(b, set)?;
                    MsoFormula::or(MsoFormula::and(kappa.clone(), pb), MsoFormula::and(MsoFormula::not(kappa), self.empty(set)))
                }
                WalNode::Meet(a, b) => {
                    let (y1, y2) = (self.fresh(), self.fresh());
                    let pa = self.phi_y(a, &y1)?;
                    let pb = self.phi_y(b, &y2)?;
                    let y = &self.y;
                    let union = MsoFormula::forall(
                        y,
                        MsoFormula::iff(MsoFormula::member(set, y), MsoFormula::or(MsoFormula::member(&y1, y), MsoFormula::member(&y2, y))),
                    );
                    MsoFormula::exists(&y1, MsoFormula::exists(&y2, MsoFormula::all([pa, pb, union])))
                }
                WalNode::MeetAll(x, a) => {
                    let (yp, zv) = (self.fresh(), self.fresh());
                    let inner = self.phi_y(a, &yp)?;
                    // ξ(S) = ∀x.∃Y'.(Φ_Y'(ζ') ∧ Y' ⊆ S)
                    let xi = |s: &Var, this: &Self| MsoFormula::forall(x, MsoFormula::exists(&yp, MsoFormula::and(inner.clone(), this.subset(&yp, s))));
                    let minimal = MsoFormula::forall(&zv, MsoFormula::implies(xi(&zv, self), self.subset(set, &zv)));
                    MsoFormula::and(xi(set, self), minimal)
                }
            }
        };
        self.memo.insert(key, f.clone());
        self.keep.push(z.clone());
        Ok(f)
    }

    /// `Φ(ζ) = ∃Y.(Φ_Y(ζ) ∧ ∀y.(Y(y) ∨ #(y)))`.
    pub fn phi(&mut self, z: &Wal<W>) -> Result<MsoFormula> {
        let set = self.fresh();
        let body = self.phi_y(z, &set)?;
        let outside = MsoFormula::forall(&self.y, MsoFormula::or(MsoFormula::member(&set, &self.y), self.letters.undefined_at(&self.y)));
        Ok(MsoFormula::exists(&set, MsoFormula::and(body, outside)))
    }
}

/// `Φ(ζ)` over `Σ × Δ` with `Δ = consts ∪ {#}`, following the induction
/// literally. Letters of `Σ × Δ` are named `a_k` for the `k`-th constant and
/// `a_#` for `#`.
pub fn phi_construction<W: Clone + Ord>(zeta: &Wal<W>, sigma: &Alphabet, consts: &[W]) -> Result<MsoFormula> {
    let letters = GammaLetters::new(sigma, consts.len(), 0);
    PhiBuilder::new(&letters, consts, false).phi(zeta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mso::compile_mso;
    use crate::omega::LassoWord;
    use crate::valuation::{Ratio, RatioWeight};
    use crate::wal::parse_wal;

    /// Checks that the models of `Φ(ζ)` over `(a, labels)` lassos are
    /// exactly the expected labellings, by brute force over label choices.
    fn models(text: &str, sigma: &[&str], word: &LassoWord<String>, frees: &[(&str, usize)]) -> Vec<Vec<Option<usize>>> {
        let z = parse_wal(text, &Ratio).unwrap();
        let consts: Vec<RatioWeight> = z.constants().into_iter().collect();
        let sigma = Alphabet::new(sigma.iter().copied()).unwrap();
        let f = phi_construction(&z, &sigma, &consts).unwrap();
        let gl = GammaLetters::new(&sigma, consts.len(), 0);
        let gamma = gl.alphabet().unwrap();
        let fv: Vec<Var> = frees.iter().map(|(x, _)| Var::first(x)).collect();
        let a = compile_mso(&f, &gamma, &fv).unwrap();
        let w = sigma.encode(word).unwrap();
        let reach = frees.iter().map(|&(_, i)| i + 1).max().unwrap_or(0);
        let w = w.reshape(w.prefix().len().max(reach), w.period().len());
        let n = w.shape_len();
        let d = consts.len() + 1;
        let mut out = Vec::new();
        // Labels are constant along the period so positions 0..n suffice.
        for code in 0..d.pow(n as u32) {
            let labels: Vec<Option<usize>> = (0..n).map(|i| code / d.pow(i as u32) % d).map(|k| (k < consts.len()).then_some(k)).collect();
            let letter = |i: usize| {
                let b = labels[i];
                gamma.index_of(&gl.name((*w.at(i), b, 0))).unwrap()
            };
            let p = w.prefix().len();
            let gw = LassoWord::new((0..p).map(letter).collect(), (p..n).map(letter).collect()).unwrap();
            let mut sigma_v = crate::mso::VarAssignment::new();
            for (x, i) in frees {
                sigma_v = sigma_v.with_position(x, *i);
            }
            let enc = crate::mso::encode_assignment(&gw, &sigma_v, &fv).unwrap();
            if a.accepts_indices(&enc).unwrap().is_some() {
                out.push(labels);
            }
        }
        out
    }

    #[test]
    fn assignment_labels_one_position() {
        let w: LassoWord<String> = "a a (a a a)".parse().unwrap();
        let m = models("x |-> (1,1)", &["a"], &w, &[("x", 1)]);
        assert_eq!(m, vec![vec![None, Some(0), None]]);
    }

    #[test]
    fn merging_a_value_with_itself() {
        let w: LassoWord<String> = "a (a a)".parse().unwrap();
        let once = models("x |-> (1,1)", &["a"], &w, &[("x", 1)]);
        let twice = models("(x |-> (1,1)) /\\ (x |-> (1,1))", &["a"], &w, &[("x", 1)]);
        assert_eq!(once, twice);
    }

    #[test]
    fn letter_predicate_leaves_everything_undefined() {
        let w: LassoWord<String> = "(a b)".parse().unwrap();
        assert_eq!(models("P_a(x)", &["a", "b"], &w, &[("x", 0)]), vec![vec![None, None, None]]);
        assert!(models("P_a(x)", &["a", "b"], &w, &[("x", 1)]).is_empty());
    }

    #[test]
    fn example_costs() {
        let w: LassoWord<String> = "(a b c)".parse().unwrap();
        let m = models("meet x. (P_a(x) => x |-> (1,1)) /\\ (P_b(x) => x |-> (3,1))", &["a", "b", "c"], &w, &[]);
        assert_eq!(m, vec![vec![Some(0), Some(1), None]]);
    }
}
