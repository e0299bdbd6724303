//! Weight assignment logic (WAL) and its extension with a `join` prefix
//! (eWAL).
//!
//! A WAL formula denotes a partial ω-word of weights (its auxiliary
//! semantics) or ⊥; the proper semantics fills undefined positions with the
//! default weight `𝟙` and applies `val`. The compiled automaton is the
//! semantics of record; [`reference_aux_semantics`] evaluates the fragment
//! without `meet X.` directly and serves as a test oracle.

mod compile;
mod parse;
mod phi;
mod synth;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mso::{MsoFormula, MsoNode, Var, VarAssignment, VarValue};
use crate::omega::{LassoWord, PartialLassoValue};
use crate::valuation::ValuationStructure;

pub use compile::{compile_ewal, compile_wal, CompileOptions, CompiledWal, DEFAULT_PREFIX_CAP};
pub use parse::{parse_ewal, parse_wal};
pub use phi::phi_construction;
pub use synth::{run_formula, wba_to_ewal, wba_to_wal};

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum WalNode<W> {
    Letter(String, Var),
    Eq(Var, Var),
    Less(Var, Var),
    In(Var, Var),
    /// `x ↦ m`
    Assign(Var, W),
    /// `φ ⇒ ψ`
    Implies(Wal<W>, Wal<W>),
    /// `φ ⊓ ψ`
    Meet(Wal<W>, Wal<W>),
    /// `⊓x.φ` and `⊓X.φ`
    MeetAll(Var, Wal<W>),
}

/// A WAL formula over weights `W`; cheap to clone.
#[derive(Debug, Eq)]
pub struct Wal<W>(Arc<WalNode<W>>);

impl<W> Clone for Wal<W> {
    fn clone(&self) -> Self {
        Wal(self.0.clone())
    }
}

impl<W: PartialEq> PartialEq for Wal<W> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl<W: std::hash::Hash> std::hash::Hash for Wal<W> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl<W> Wal<W> {
    pub fn node(&self) -> &WalNode<W> {
        &self.0
    }

    pub(crate) fn ptr(&self) -> *const WalNode<W> {
        Arc::as_ptr(&self.0)
    }

    fn make(n: WalNode<W>) -> Self {
        Wal(Arc::new(n))
    }

    pub fn letter(a: &str, x: &Var) -> Self {
        Wal::make(WalNode::Letter(a.to_string(), x.clone()))
    }

    pub fn eq(x: &Var, y: &Var) -> Self {
        Wal::make(WalNode::Eq(x.clone(), y.clone()))
    }

    pub fn less(x: &Var, y: &Var) -> Self {
        Wal::make(WalNode::Less(x.clone(), y.clone()))
    }

    pub fn member(set: &Var, x: &Var) -> Self {
        Wal::make(WalNode::In(set.clone(), x.clone()))
    }

    pub fn assign(x: &Var, m: W) -> Self {
        Wal::make(WalNode::Assign(x.clone(), m))
    }

    pub fn implies(a: Self, b: Self) -> Self {
        Wal::make(WalNode::Implies(a, b))
    }

    pub fn meet(a: Self, b: Self) -> Self {
        Wal::make(WalNode::Meet(a, b))
    }

    pub fn meet_all(x: &Var, a: Self) -> Self {
        Wal::make(WalNode::MeetAll(x.clone(), a))
    }

    /// `⊓x.(x < x)`.
    pub fn falsity() -> Self {
        let x = Var::first("x");
        Wal::meet_all(&x, Wal::less(&x, &x))
    }

    /// `φ ⇒ false`.
    pub fn not(a: Self) -> Self {
        Wal::implies(a, Wal::falsity())
    }

    /// `false ⇒ false`, whose auxiliary semantics is `⊤`.
    pub fn truth() -> Self {
        Wal::not(Wal::falsity())
    }

    /// Merge of a list; `⊤` when empty.
    pub fn meet_list(parts: impl IntoIterator<Item = Self>) -> Self {
        parts.into_iter().reduce(Wal::meet).unwrap_or_else(Wal::truth)
    }
}

impl<W: Clone + Ord> Wal<W> {
    /// `Const(φ)`, the weights occurring in assignments.
    pub fn constants(&self) -> BTreeSet<W> {
        let mut out = BTreeSet::new();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![self.clone()];
        while let Some(f) = stack.pop() {
            if !seen.insert(f.ptr()) {
                continue;
            }
            match f.node() {
                WalNode::Assign(_, m) => {
                    out.insert(m.clone());
                }
                WalNode::Implies(a, b) | WalNode::Meet(a, b) => {
                    stack.push(a.clone());
                    stack.push(b.clone());
                }
                WalNode::MeetAll(_, a) => stack.push(a.clone()),
                _ => {}
            }
        }
        out
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
                WalNode::Letter(a, _) => {
                    out.insert(a.clone());
                }
                WalNode::Implies(a, b) | WalNode::Meet(a, b) => {
                    stack.push(a.clone());
                    stack.push(b.clone());
                }
                WalNode::MeetAll(_, a) => stack.push(a.clone()),
                _ => {}
            }
        }
        out
    }

    /// Free variables in order of first occurrence.
    pub fn free_vars(&self) -> Vec<Var> {
        fn go<W>(f: &Wal<W>, memo: &mut HashMap<*const WalNode<W>, Arc<Vec<Var>>>) -> Arc<Vec<Var>> {
            if let Some(v) = memo.get(&f.ptr()) {
                return v.clone();
            }
            let v = match f.node() {
                WalNode::Letter(_, x) | WalNode::Assign(x, _) => vec![x.clone()],
                WalNode::Eq(x, y) | WalNode::Less(x, y) | WalNode::In(x, y) => {
                    if x == y {
                        vec![x.clone()]
                    } else {
                        vec![x.clone(), y.clone()]
                    }
                }
                WalNode::Implies(a, b) | WalNode::Meet(a, b) => {
                    let mut v = go(a, memo).as_ref().clone();
                    for x in go(b, memo).iter() {
                        if !v.contains(x) {
                            v.push(x.clone());
                        }
                    }
                    v
                }
                WalNode::MeetAll(x, a) => go(a, memo).iter().filter(|&y| y != x).cloned().collect(),
            };
            let v = Arc::new(v);
            memo.insert(f.ptr(), v.clone());
            v
        }
        go(self, &mut HashMap::new()).as_ref().clone()
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Whether the formula contains `meet X.` for a second-order `X`.
    pub fn has_set_meet(&self) -> bool {
        match self.node() {
            WalNode::MeetAll(x, a) => !x.is_first_order() || a.has_set_meet(),
            WalNode::Implies(a, b) | WalNode::Meet(a, b) => a.has_set_meet() || b.has_set_meet(),
            _ => false,
        }
    }

    /// Whether the formula contains an assignment `x |-> m`.
    pub fn has_assignment(&self) -> bool {
        !self.constants().is_empty()
    }
}

impl<W: fmt::Display> fmt::Display for Wal<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            WalNode::Letter(a, x) => write!(f, "P_{a}({x})"),
            WalNode::Eq(x, y) => write!(f, "{x} = {y}"),
            WalNode::Less(x, y) => write!(f, "{x} < {y}"),
            WalNode::In(x, y) => write!(f, "{x}({y})"),
            WalNode::Assign(x, m) => write!(f, "{x} |-> {m}"),
            WalNode::Implies(a, b) => {
                if is_falsity(b) {
                    if is_falsity(a) {
                        return write!(f, "true");
                    }
                    return write!(f, "!{a}");
                }
                write!(f, "({a} => {b})")
            }
            WalNode::Meet(a, b) => write!(f, "({a} /\\ {b})"),
            WalNode::MeetAll(x, a) => {
                if is_falsity(self) {
                    return write!(f, "false");
                }
                write!(f, "(meet {x}. {a})")
            }
        }
    }
}

fn is_falsity<W>(f: &Wal<W>) -> bool {
    match f.node() {
        WalNode::MeetAll(x, a) => matches!(a.node(), WalNode::Less(y, z) if y == x && z == x),
        _ => false,
    }
}

/// An eWAL formula `⊔𝒳1. … ⊔𝒳k. φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ewal<W> {
    pub prefix: Vec<Var>,
    pub body: Wal<W>,
}

impl<W: Clone + Ord> Ewal<W> {
    pub fn new(prefix: Vec<Var>, body: Wal<W>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for v in &prefix {
            if !seen.insert(v) {
                return Err(Error::input(format!("`join {v}` appears twice in the prefix")));
            }
        }
        Ok(Ewal { prefix, body })
    }

    pub fn free_vars(&self) -> Vec<Var> {
        self.body.free_vars().into_iter().filter(|v| !self.prefix.contains(v)).collect()
    }
}

impl<W: fmt::Display> fmt::Display for Ewal<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.prefix {
            write!(f, "join {v}. ")?;
        }
        write!(f, "{}", self.body)
    }
}

/// `W(φ)`: `∧` becomes `⊓`, `∀` becomes `⊓`-quantification and `¬ψ`
/// becomes `ψ ⇒ false`.
pub fn w_translate<W: Clone>(phi: &MsoFormula) -> Wal<W> {
    fn go<W: Clone>(f: &MsoFormula, memo: &mut HashMap<*const MsoNode, Wal<W>>) -> Wal<W> {
        if let Some(w) = memo.get(&f.ptr()) {
            return w.clone();
        }
        let w = match f.node() {
            MsoNode::Letter(ls, x) => {
                if ls.len() == 1 {
                    Wal::letter(&ls[0], x)
                } else {
                    // ⋁ P_a(x) = ¬⋀ ¬P_a(x)
                    let parts = ls.iter().map(|l| Wal::not(Wal::letter(l, x)));
                    Wal::not(parts.reduce(Wal::meet).unwrap_or_else(Wal::truth))
                }
            }
            MsoNode::Eq(x, y) => Wal::eq(x, y),
            MsoNode::Less(x, y) => Wal::less(x, y),
            MsoNode::In(x, y) => Wal::member(x, y),
            MsoNode::And(a, b) => Wal::meet(go(a, memo), go(b, memo)),
            MsoNode::Not(a) => Wal::not(go(a, memo)),
            MsoNode::Forall(x, a) => Wal::meet_all(x, go(a, memo)),
        };
        memo.insert(f.ptr(), w.clone());
        w
    }
    go(phi, &mut HashMap::new())
}

/// Default number of extra loop passes the reference evaluator lets `⊓x`
/// range over.
pub const DEFAULT_UNROLL_BOUND: usize = 3;

/// Table-driven auxiliary semantics for formulas without `meet X.`.
///
/// `⊓x` merges the values for `x` ranging over the prefix and `unroll_bound + 2`
/// passes of the loop of the common shape of `w` and `σ`, then reads a
/// periodic value off the first `unroll_bound` passes. That window must not
/// change over the last pass of `x`, and positions defined beyond it must
/// agree with the periodic value; otherwise an error is returned.
pub fn reference_aux_semantics<W: Clone + Eq + Ord>(
    phi: &Wal<W>,
    w: &LassoWord<String>,
    sigma: &VarAssignment,
    unroll_bound: usize,
) -> Result<PartialLassoValue<W>> {
    if phi.has_set_meet() {
        return Err(Error::Unsupported("the reference evaluator does not handle `meet X.`".into()));
    }
    eval_aux(phi, w, &mut sigma.clone(), unroll_bound.max(1))
}

fn shape_of(w: &LassoWord<String>, sigma: &VarAssignment, frees: &[Var]) -> (usize, usize) {
    let (mut p, mut l) = (w.prefix().len(), w.period().len());
    for x in frees {
        match sigma.get(x) {
            Some(VarValue::Position(i)) => p = p.max(i + 1),
            Some(VarValue::Set(s)) => {
                p = p.max(s.bits().prefix().len());
                l = num_integer::lcm(l, s.bits().period().len());
            }
            None => {}
        }
    }
    (p, l)
}

fn eval_aux<W: Clone + Eq + Ord>(f: &Wal<W>, w: &LassoWord<String>, sigma: &mut VarAssignment, bound: usize) -> Result<PartialLassoValue<W>> {
    let pos = |sigma: &VarAssignment, x: &Var| match sigma.get(x) {
        Some(VarValue::Position(i)) => Ok(*i),
        _ => Err(Error::input(format!("variable `{x}` is unassigned"))),
    };
    let truth = |b: bool| if b { PartialLassoValue::top() } else { PartialLassoValue::Bottom };
    Ok(match f.node() {
        WalNode::Letter(a, x) => truth(w.at(pos(sigma, x)?) == a),
        WalNode::Eq(x, y) => truth(pos(sigma, x)? == pos(sigma, y)?),
        WalNode::Less(x, y) => truth(pos(sigma, x)? < pos(sigma, y)?),
        WalNode::In(x, y) => truth(sigma.holds(x, pos(sigma, y)?)?),
        WalNode::Assign(x, m) => PartialLassoValue::top().update(pos(sigma, x)?, m.clone()),
        WalNode::Implies(a, b) => {
            if eval_aux(a, w, sigma, bound)?.is_top() {
                eval_aux(b, w, sigma, bound)?
            } else {
                PartialLassoValue::top()
            }
        }
        WalNode::Meet(a, b) => {
            let va = eval_aux(a, w, sigma, bound)?;
            if va.is_bottom() {
                return Ok(va);
            }
            va.merge_with(&eval_aux(b, w, sigma, bound)?)
        }
        WalNode::MeetAll(x, a) => {
            let frees = f.free_vars();
            let (p, l) = shape_of(w, sigma, &frees);
            let saved = sigma.get(x).cloned();
            // Values are read off [0, cut + l). They must already be there
            // when x stops one pass short of the full range.
            let cut = p + (bound - 1) * l;
            let (short, full) = (p + (bound + 1) * l, p + (bound + 2) * l);
            let mut acc = PartialLassoValue::top();
            let mut earlier = None;
            let mut result = Ok(());
            for i in 0..full {
                if i == short {
                    earlier = Some(acc.clone());
                }
                sigma.set_position(x, i)?;
                match eval_aux(a, w, sigma, bound) {
                    Ok(v) => acc = acc.merge_with(&v),
                    Err(e) => {
                        result = Err(e);
                        break;
                    }
                }
                if acc.is_bottom() {
                    break;
                }
            }
            match saved {
                Some(VarValue::Position(i)) => sigma.set_position(x, i)?,
                _ => {
                    sigma.remove(x);
                }
            }
            result?;
            let PartialLassoValue::Defined(u) = &acc else { return Ok(acc) };
            let earlier = earlier.unwrap_or_else(|| acc.clone());
            let at = |i: usize| u.at(i).clone();
            let periodic = LassoWord::new((0..cut).map(at).collect(), (cut..cut + l).map(at).collect())?;
            let periodic = PartialLassoValue::from_lasso(periodic);
            // Further out, whatever is defined must fit the periodic guess;
            // gaps may still be filled by larger x.
            let horizon = 2 * (full + u.shape_len());
            let unsettled = (0..cut + l).any(|i| earlier.get(i) != acc.get(i))
                || (cut + l..horizon).any(|i| acc.get(i).is_some() && periodic.get(i) != acc.get(i));
            if unsettled {
                return Err(Error::Unsupported(format!("`meet {x}` did not settle within {bound} loop passes")));
            }
            periodic
        }
    })
}

/// Proper semantics from an auxiliary value: `⊥ ↦ 𝟘`, otherwise fill with
/// `𝟙` and apply `val`.
pub fn proper_value<S: ValuationStructure>(s: &S, aux: &PartialLassoValue<S::Weight>, one: &S::Weight) -> Result<S::Value> {
    match aux.totalize(one) {
        None => Ok(s.zero()),
        Some(t) => s.val_lasso(t.prefix(), t.period()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{Ratio, RatioWeight};

    fn w(s: &str) -> LassoWord<String> {
        s.parse().unwrap()
    }

    #[test]
    fn example_costs_reference() {
        let phi = parse_wal("meet x. (P_a(x) => x |-> (1,1)) /\\ (P_b(x) => x |-> (3,1))", &Ratio).unwrap();
        let v = reference_aux_semantics(&phi, &w("(a b)"), &VarAssignment::new(), 3).unwrap();
        let expect = PartialLassoValue::total(&LassoWord::periodic(vec![RatioWeight::ints(1, 1), RatioWeight::ints(3, 1)]).unwrap());
        assert_eq!(v, expect);
        assert_eq!(proper_value(&Ratio, &v, &RatioWeight::ints(0, 1)).unwrap().to_string(), "2");
    }

    #[test]
    fn assignment_and_implication_rows() {
        let phi = parse_wal("x |-> (1,1)", &Ratio).unwrap();
        let sigma = VarAssignment::new().with_position("x", 2);
        let v = reference_aux_semantics(&phi, &w("(a)"), &sigma, 3).unwrap();
        assert_eq!(v, PartialLassoValue::top().update(2, RatioWeight::ints(1, 1)));
        // ⊥ ⇒ ψ is ⊤.
        let phi = parse_wal("(x < x) => x |-> (1,1)", &Ratio).unwrap();
        assert!(reference_aux_semantics(&phi, &w("(a)"), &sigma, 3).unwrap().is_top());
    }

    #[test]
    fn incompatible_assignments() {
        let phi = parse_wal("meet x. (x |-> (1,1)) /\\ (x |-> (2,1))", &Ratio).unwrap();
        assert!(reference_aux_semantics(&phi, &w("(a)"), &VarAssignment::new(), 3).unwrap().is_bottom());
    }

    #[test]
    fn translation() {
        let m = crate::mso::parse_mso("forall x. P_a(x)").unwrap();
        let t: Wal<RatioWeight> = w_translate(&m);
        assert_eq!(t.to_string(), "(meet x. P_a(x))");
        let m = crate::mso::parse_mso("!(x < y)").unwrap();
        let t: Wal<RatioWeight> = w_translate(&m);
        assert_eq!(t, Wal::implies(Wal::less(&Var::first("x"), &Var::first("y")), Wal::falsity()));
    }
}
