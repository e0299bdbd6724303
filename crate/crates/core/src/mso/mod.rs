//! Monadic second-order logic over ω-words.
//!
//! Formulas are shared trees (`Arc` nodes), so the large formulas generated
//! by the WAL compiler stay small in memory even when a subformula occurs
//! many times. Compilation goes through minimal DFAs for `u$v` encodings of
//! lassos (see [`ldfa`]) and only converts to a Büchi automaton at the end.

mod compile;
pub(crate) mod ldfa;
pub(crate) mod parse;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::buchi::{Alphabet, BuchiAutomaton};
use crate::error::{Error, Result};
use crate::omega::{LassoWord, PositionSet};

pub(crate) use compile::Compiler;
pub use parse::parse_mso;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    First,
    Second,
}

/// A variable. Parsed variables are first-order when lowercase and
/// second-order when capitalized; generated ones are named `$gN`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    name: Arc<str>,
    order: Order,
}

impl Var {
    pub fn first(name: &str) -> Var {
        Var { name: name.into(), order: Order::First }
    }

    pub fn second(name: &str) -> Var {
        Var { name: name.into(), order: Order::Second }
    }

    /// Order inferred from capitalization.
    pub fn named(name: &str) -> Var {
        if name.starts_with(|c: char| c.is_ascii_uppercase()) {
            Var::second(name)
        } else {
            Var::first(name)
        }
    }

    pub(crate) fn generated(n: usize, order: Order) -> Var {
        Var { name: format!("$g{n}").into(), order }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn is_first_order(&self) -> bool {
        self.order == Order::First
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum MsoNode {
    /// `P_a(x)`; a list of letters reads as their disjunction.
    Letter(Vec<String>, Var),
    Eq(Var, Var),
    Less(Var, Var),
    /// `X(x)`
    In(Var, Var),
    And(MsoFormula, MsoFormula),
    Not(MsoFormula),
    Forall(Var, MsoFormula),
}

/// An MSO formula; cheap to clone.
#[derive(Clone, Debug, Eq)]
pub struct MsoFormula(Arc<MsoNode>);

impl PartialEq for MsoFormula {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl std::hash::Hash for MsoFormula {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl MsoFormula {
    fn make(node: MsoNode) -> MsoFormula {
        MsoFormula(Arc::new(node))
    }

    pub fn node(&self) -> &MsoNode {
        &self.0
    }

    pub(crate) fn ptr(&self) -> *const MsoNode {
        Arc::as_ptr(&self.0)
    }

    pub fn letter(a: &str, x: &Var) -> MsoFormula {
        MsoFormula::letters([a], x)
    }

    /// `⋁_{a ∈ letters} P_a(x)`.
    pub fn letters<S: AsRef<str>>(letters: impl IntoIterator<Item = S>, x: &Var) -> MsoFormula {
        let set: BTreeSet<String> = letters.into_iter().map(|s| s.as_ref().to_string()).collect();
        MsoFormula::make(MsoNode::Letter(set.into_iter().collect(), x.clone()))
    }

    pub fn eq(x: &Var, y: &Var) -> MsoFormula {
        MsoFormula::make(MsoNode::Eq(x.clone(), y.clone()))
    }

    pub fn less(x: &Var, y: &Var) -> MsoFormula {
        MsoFormula::make(MsoNode::Less(x.clone(), y.clone()))
    }

    pub fn member(set: &Var, x: &Var) -> MsoFormula {
        MsoFormula::make(MsoNode::In(set.clone(), x.clone()))
    }

    pub fn and(a: MsoFormula, b: MsoFormula) -> MsoFormula {
        MsoFormula::make(MsoNode::And(a, b))
    }

    /// Conjunction of a nonempty list; `true` when empty.
    pub fn all(parts: impl IntoIterator<Item = MsoFormula>) -> MsoFormula {
        parts.into_iter().reduce(MsoFormula::and).unwrap_or_else(MsoFormula::truth)
    }

    /// Disjunction of a list; `false` when empty.
    pub fn any(parts: impl IntoIterator<Item = MsoFormula>) -> MsoFormula {
        parts.into_iter().reduce(MsoFormula::or).unwrap_or_else(MsoFormula::falsity)
    }

    /// Negation; `!!φ` collapses to `φ`.
    pub fn not(a: MsoFormula) -> MsoFormula {
        match a.node() {
            MsoNode::Not(inner) => inner.clone(),
            _ => MsoFormula::make(MsoNode::Not(a)),
        }
    }

    pub fn forall(x: &Var, a: MsoFormula) -> MsoFormula {
        MsoFormula::make(MsoNode::Forall(x.clone(), a))
    }

    pub fn exists(x: &Var, a: MsoFormula) -> MsoFormula {
        MsoFormula::not(MsoFormula::forall(x, MsoFormula::not(a)))
    }

    pub fn or(a: MsoFormula, b: MsoFormula) -> MsoFormula {
        MsoFormula::not(MsoFormula::and(MsoFormula::not(a), MsoFormula::not(b)))
    }

    pub fn implies(a: MsoFormula, b: MsoFormula) -> MsoFormula {
        MsoFormula::not(MsoFormula::and(a, MsoFormula::not(b)))
    }

    pub fn iff(a: MsoFormula, b: MsoFormula) -> MsoFormula {
        MsoFormula::and(MsoFormula::implies(a.clone(), b.clone()), MsoFormula::implies(b, a))
    }

    /// `∀x.(x < x)`.
    pub fn falsity() -> MsoFormula {
        let x = Var::first("x");
        MsoFormula::forall(&x, MsoFormula::less(&x, &x))
    }

    pub fn truth() -> MsoFormula {
        MsoFormula::not(MsoFormula::falsity())
    }

    /// `∀y.¬X(y)`, written `X(∅)`.
    pub fn is_empty_set(set: &Var, y: &Var) -> MsoFormula {
        MsoFormula::forall(y, MsoFormula::not(MsoFormula::member(set, y)))
    }

    /// `∀y.(X(y) → Z(y))`.
    pub fn subset(x: &Var, z: &Var, y: &Var) -> MsoFormula {
        MsoFormula::forall(y, MsoFormula::implies(MsoFormula::member(x, y), MsoFormula::member(z, y)))
    }

    /// Free variables in order of first occurrence.
    pub fn free_vars(&self) -> Vec<Var> {
        fn go(f: &MsoFormula, memo: &mut HashMap<*const MsoNode, Arc<Vec<Var>>>) -> Arc<Vec<Var>> {
            if let Some(v) = memo.get(&f.ptr()) {
                return v.clone();
            }
            let v = match f.node() {
                MsoNode::Letter(_, x) => vec![x.clone()],
                MsoNode::Eq(x, y) | MsoNode::Less(x, y) | MsoNode::In(x, y) => {
                    if x == y {
                        vec![x.clone()]
                    } else {
                        vec![x.clone(), y.clone()]
                    }
                }
                MsoNode::And(a, b) => {
                    let mut v = go(a, memo).as_ref().clone();
                    for x in go(b, memo).iter() {
                        if !v.contains(x) {
                            v.push(x.clone());
                        }
                    }
                    v
                }
                MsoNode::Not(a) => go(a, memo).as_ref().clone(),
                MsoNode::Forall(x, a) => go(a, memo).iter().filter(|&y| y != x).cloned().collect(),
            };
            let v = Arc::new(v);
            memo.insert(f.ptr(), v.clone());
            v
        }
        go(self, &mut HashMap::new()).as_ref().clone()
    }

    /// Letters mentioned by predicates.
    pub fn letters_used(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![self.clone()];
        while let Some(f) = stack.pop() {
            if !seen.insert(f.ptr()) {
                continue;
            }
            match f.node() {
                MsoNode::Letter(ls, _) => out.extend(ls.iter().cloned()),
                MsoNode::And(a, b) => {
                    stack.push(a.clone());
                    stack.push(b.clone());
                }
                MsoNode::Not(a) | MsoNode::Forall(_, a) => stack.push(a.clone()),
                _ => {}
            }
        }
        out
    }

    /// Checks that no variable is used with both orders.
    pub(crate) fn check_orders(&self) -> Result<()> {
        let mut orders: HashMap<&str, Order> = HashMap::new();
        let mut stack = vec![self];
        let check = |v: &Var, expected: Order| -> Result<()> {
            if v.order != expected {
                return Err(Error::input(format!("variable `{v}` used with the wrong order")));
            }
            Ok(())
        };
        while let Some(f) = stack.pop() {
            match f.node() {
                MsoNode::Letter(_, x) => check(x, Order::First)?,
                MsoNode::Eq(x, y) | MsoNode::Less(x, y) => {
                    check(x, Order::First)?;
                    check(y, Order::First)?;
                }
                MsoNode::In(x, y) => {
                    check(x, Order::Second)?;
                    check(y, Order::First)?;
                }
                MsoNode::And(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                MsoNode::Not(a) => stack.push(a),
                MsoNode::Forall(x, a) => {
                    if let Some(&o) = orders.get(x.name()) {
                        if o != x.order {
                            return Err(Error::input(format!("variable `{x}` used with both orders")));
                        }
                    }
                    orders.insert(x.name(), x.order);
                    stack.push(a);
                }
            }
        }
        Ok(())
    }
}

fn write_atom_list(f: &mut fmt::Formatter<'_>, letters: &[String], x: &Var) -> fmt::Result {
    if letters.len() == 1 {
        return write!(f, "P_{}({x})", letters[0]);
    }
    if letters.is_empty() {
        return write!(f, "false");
    }
    write!(f, "(")?;
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            write!(f, " | ")?;
        }
        write!(f, "P_{l}({x})")?;
    }
    write!(f, ")")
}

impl fmt::Display for MsoFormula {
    /// Prints with the sugar the parser understands, so the output parses
    /// back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            MsoNode::Letter(ls, x) => write_atom_list(f, ls, x),
            MsoNode::Eq(x, y) => write!(f, "{x} = {y}"),
            MsoNode::Less(x, y) => write!(f, "{x} < {y}"),
            MsoNode::In(x, y) => write!(f, "{x}({y})"),
            MsoNode::And(a, b) => write!(f, "({a} & {b})"),
            MsoNode::Forall(x, a) => write!(f, "(forall {x}. {a})"),
            MsoNode::Not(a) => match a.node() {
                MsoNode::Forall(x, b) => match b.node() {
                    MsoNode::Not(c) => write!(f, "(exists {x}. {c})"),
                    _ => write!(f, "!{a}"),
                },
                MsoNode::And(b, c) => match (b.node(), c.node()) {
                    (MsoNode::Not(b), MsoNode::Not(c)) => write!(f, "({b} | {c})"),
                    (_, MsoNode::Not(c)) => write!(f, "({b} -> {c})"),
                    _ => write!(f, "!{a}"),
                },
                MsoNode::Eq(x, y) => write!(f, "{x} != {y}"),
                _ => write!(f, "!{a}"),
            },
        }
    }
}

/// Value of a variable under an assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarValue {
    Position(usize),
    Set(PositionSet),
}

/// A `w`-assignment for finitely many variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarAssignment {
    values: BTreeMap<Var, VarValue>,
}

impl VarAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_position(&mut self, x: &Var, i: usize) -> Result<()> {
        if !x.is_first_order() {
            return Err(Error::input(format!("`{x}` is second-order")));
        }
        self.values.insert(x.clone(), VarValue::Position(i));
        Ok(())
    }

    pub fn set_set(&mut self, x: &Var, s: PositionSet) -> Result<()> {
        if x.is_first_order() {
            return Err(Error::input(format!("`{x}` is first-order")));
        }
        self.values.insert(x.clone(), VarValue::Set(s));
        Ok(())
    }

    pub fn with_position(mut self, x: &str, i: usize) -> Self {
        self.values.insert(Var::first(x), VarValue::Position(i));
        self
    }

    pub fn with_set(mut self, x: &str, s: PositionSet) -> Self {
        self.values.insert(Var::second(x), VarValue::Set(s));
        self
    }

    pub fn remove(&mut self, x: &Var) -> Option<VarValue> {
        self.values.remove(x)
    }

    pub fn get(&self, x: &Var) -> Option<&VarValue> {
        self.values.get(x)
    }

    /// Whether `x ∈ σ(X)` (or `σ(x) = i` for first-order `x`).
    pub fn holds(&self, x: &Var, i: usize) -> Result<bool> {
        match self.values.get(x) {
            Some(VarValue::Position(p)) => Ok(*p == i),
            Some(VarValue::Set(s)) => Ok(s.contains(i)),
            None => Err(Error::input(format!("variable `{x}` is unassigned"))),
        }
    }
}

/// Name of the letter `(a, bits)` of `Σ × {0,1}^k`.
pub fn track_letter_name(a: &str, bits: usize, k: usize) -> String {
    if k == 0 {
        return a.to_string();
    }
    let mut s = format!("{a}_");
    for j in 0..k {
        s.push(if bits >> j & 1 == 1 { '1' } else { '0' });
    }
    s
}

/// The alphabet `Σ × {0,1}^k`, letter index `a << k | bits`.
pub fn track_alphabet(alphabet: &Alphabet, k: usize) -> Result<Alphabet> {
    Alphabet::new((0..alphabet.len() << k).map(|l| track_letter_name(alphabet.name(l >> k), l & ((1 << k) - 1), k)))
}

/// Büchi automaton over `Σ × {0,1}^|frees|` for the encodings satisfying
/// `φ`. Bit `j` of a letter is the track of `frees[j]`; first-order tracks
/// carry exactly one 1.
pub fn compile_mso(phi: &MsoFormula, alphabet: &Alphabet, frees: &[Var]) -> Result<BuchiAutomaton> {
    let mut c = Compiler::new(alphabet);
    let d = c.compile_over(phi, frees)?;
    ldfa_to_buchi(&d, &track_alphabet(alphabet, frees.len())?)
}

/// [`compile_mso`] with at most `cap` states in any intermediate automaton.
pub fn compile_mso_capped(phi: &MsoFormula, alphabet: &Alphabet, frees: &[Var], cap: usize) -> Result<BuchiAutomaton> {
    ldfa::with_state_cap(cap, || compile_mso(phi, alphabet, frees))
}

/// Default for the cap of [`compile_mso_capped`].
pub const DEFAULT_STATE_CAP: usize = ldfa::STATE_LIMIT;

/// Converts the automaton of a `u$v` language to Büchi form.
pub(crate) fn ldfa_to_buchi(d: &ldfa::Ldfa, alphabet: &Alphabet) -> Result<BuchiAutomaton> {
    let nba = d.to_nba()?;
    let states = (0..nba.states).map(|i| format!("s{i}")).collect();
    let trans = nba.trans.iter().map(|&(p, l, q)| crate::buchi::Transition::new(p, l, q)).collect();
    let accepting: Vec<usize> = (0..nba.states).filter(|&s| nba.accepting[s]).collect();
    BuchiAutomaton::new(alphabet.clone(), states, nba.initial.clone(), accepting, trans)
}

/// Encodes `(w, σ)` over `Σ × {0,1}^|frees|` as letter indices.
pub fn encode_assignment(w: &LassoWord<usize>, sigma: &VarAssignment, frees: &[Var]) -> Result<LassoWord<usize>> {
    let k = frees.len();
    let mut p = w.prefix().len();
    let mut l = w.period().len();
    for x in frees {
        match sigma.get(x) {
            Some(VarValue::Position(i)) => p = p.max(i + 1),
            Some(VarValue::Set(s)) => {
                p = p.max(s.bits().prefix().len());
                l = num_integer::lcm(l, s.bits().period().len());
            }
            None => return Err(Error::input(format!("variable `{x}` is unassigned"))),
        }
    }
    let letter = |i: usize| -> Result<usize> {
        let mut bits = 0;
        for (j, x) in frees.iter().enumerate() {
            if sigma.holds(x, i)? {
                bits |= 1 << j;
            }
        }
        Ok(w.at(i) << k | bits)
    };
    LassoWord::new((0..p).map(letter).collect::<Result<_>>()?, (p..p + l).map(letter).collect::<Result<_>>()?)
}

/// `w_σ ⊨ φ`, decided by compiling `φ` and running the automaton on the
/// encoded lasso. The alphabet is the letters of `w` and of `φ`.
pub fn satisfies_mso(phi: &MsoFormula, w: &LassoWord<String>, sigma: &VarAssignment) -> Result<bool> {
    let mut letters: BTreeSet<String> = phi.letters_used();
    letters.extend(w.prefix().iter().cloned());
    letters.extend(w.period().iter().cloned());
    let alphabet = Alphabet::new(letters)?;
    let frees = phi.free_vars();
    let encoded = encode_assignment(&alphabet.encode(w)?, sigma, &frees)?;
    let a = compile_mso(phi, &alphabet, &frees)?;
    Ok(a.accepts_indices(&encoded)?.is_some())
}

/// Direct evaluation of first-order formulas, with second-order variables
/// only free. Quantifiers range over positions `0..|p| + (d+2)·l` where `d`
/// is the quantifier depth and `(p, l)` the common shape of the word and
/// the assigned sets. A test oracle: the bound is a heuristic, checked
/// against the compiled automata.
pub fn satisfies_fo_direct(phi: &MsoFormula, w: &LassoWord<String>, sigma: &VarAssignment) -> Result<bool> {
    fn depth(f: &MsoFormula) -> usize {
        match f.node() {
            MsoNode::And(a, b) => depth(a).max(depth(b)),
            MsoNode::Not(a) => depth(a),
            MsoNode::Forall(_, a) => 1 + depth(a),
            _ => 0,
        }
    }
    let (mut p, mut l) = (w.prefix().len(), w.period().len());
    for v in sigma.values.values() {
        match v {
            VarValue::Position(i) => p = p.max(i + 1),
            VarValue::Set(s) => {
                p = p.max(s.bits().prefix().len());
                l = num_integer::lcm(l, s.bits().period().len());
            }
        }
    }
    let horizon = p + (depth(phi) + 2) * l;
    fn eval(f: &MsoFormula, w: &LassoWord<String>, sigma: &mut VarAssignment, horizon: usize) -> Result<bool> {
        let pos = |sigma: &VarAssignment, x: &Var| match sigma.get(x) {
            Some(VarValue::Position(i)) => Ok(*i),
            _ => Err(Error::input(format!("`{x}` has no position"))),
        };
        Ok(match f.node() {
            MsoNode::Letter(ls, x) => ls.contains(w.at(pos(sigma, x)?)),
            MsoNode::Eq(x, y) => pos(sigma, x)? == pos(sigma, y)?,
            MsoNode::Less(x, y) => pos(sigma, x)? < pos(sigma, y)?,
            MsoNode::In(x, y) => sigma.holds(x, pos(sigma, y)?)?,
            MsoNode::And(a, b) => eval(a, w, sigma, horizon)? && eval(b, w, sigma, horizon)?,
            MsoNode::Not(a) => !eval(a, w, sigma, horizon)?,
            MsoNode::Forall(x, a) => {
                if !x.is_first_order() {
                    return Err(Error::Unsupported("second-order quantifiers in the direct evaluator".into()));
                }
                let saved = sigma.values.get(x).cloned();
                let mut all = true;
                for i in 0..horizon {
                    sigma.values.insert(x.clone(), VarValue::Position(i));
                    if !eval(a, w, sigma, horizon)? {
                        all = false;
                        break;
                    }
                }
                match saved {
                    Some(v) => sigma.values.insert(x.clone(), v),
                    None => sigma.values.remove(x),
                };
                all
            }
        })
    }
    eval(phi, w, &mut sigma.clone(), horizon)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LassoWord<String> {
        s.parse().unwrap()
    }

    #[test]
    fn all_a() {
        let phi = parse_mso("forall x. P_a(x)").unwrap();
        let sigma = VarAssignment::new();
        assert!(satisfies_mso(&phi, &w("(a)"), &sigma).unwrap());
        assert!(!satisfies_mso(&phi, &w("b (a)"), &sigma).unwrap());
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let a = compile_mso(&phi, &ab, &[]).unwrap();
        assert!(a.accepts(&w("(a)")).unwrap().is_some());
        assert!(a.accepts(&w("b (a)")).unwrap().is_none());
    }

    #[test]
    fn false_is_empty() {
        let ab = Alphabet::new(["a"]).unwrap();
        assert!(compile_mso(&parse_mso("forall x. x < x").unwrap(), &ab, &[]).unwrap().is_empty());
    }

    #[test]
    fn exists_a() {
        let phi = parse_mso("exists x. P_a(x)").unwrap();
        assert!(satisfies_mso(&phi, &w("a b (b)"), &VarAssignment::new()).unwrap());
        assert!(!satisfies_mso(&phi, &w("(b)"), &VarAssignment::new()).unwrap());
    }

    #[test]
    fn second_order_free() {
        let phi = parse_mso("forall x. (X(x) -> P_a(x))").unwrap();
        let even = PositionSet::new(vec![], vec![true, false]).unwrap();
        let sigma = VarAssignment::new().with_set("X", even);
        assert!(satisfies_mso(&phi, &w("(a b)"), &sigma).unwrap());
        assert!(!satisfies_mso(&phi, &w("(b a)"), &sigma).unwrap());
        assert!(satisfies_fo_direct(&phi, &w("(a b)"), &sigma).unwrap());
    }

    #[test]
    fn free_first_order() {
        let phi = parse_mso("x < y & P_b(y)").unwrap();
        let sigma = VarAssignment::new().with_position("x", 1).with_position("y", 3);
        assert!(satisfies_mso(&phi, &w("(a b)"), &sigma).unwrap());
        let sigma = VarAssignment::new().with_position("x", 1).with_position("y", 2);
        assert!(!satisfies_mso(&phi, &w("(a b)"), &sigma).unwrap());
        assert!(satisfies_mso(&phi, &w("(a b)"), &VarAssignment::new()).is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["forall x. P_a(x)", "exists X. X(x)", "(x < y | !(x = y)) -> P_b(x)", "x != y"] {
            let f = parse_mso(s).unwrap();
            assert_eq!(parse_mso(&f.to_string()).unwrap(), f, "{s} printed as {f}");
        }
        assert_eq!(parse_mso("exists X. X(x)").unwrap(), MsoFormula::not(MsoFormula::forall(&Var::second("X"), MsoFormula::not(MsoFormula::member(&Var::second("X"), &Var::first("x"))))));
    }

    #[test]
    fn frees_in_order() {
        let f = parse_mso("forall z. (Y(x) & z < y) & x = w").unwrap();
        let names: Vec<String> = f.free_vars().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["Y", "x", "y", "w"]);
    }
}
