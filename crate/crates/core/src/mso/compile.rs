//! Formula to automaton, with subformula sharing.
//!
//! Every node gets a shape: its structure with free variables replaced by
//! their position in the first-occurrence order. Two subformulas that differ
//! only by renaming (bound or free) share a shape, hence a compiled
//! automaton whose tracks follow that order.

use std::collections::HashMap;
use std::sync::Arc;

use super::ldfa::Ldfa;
use super::{MsoFormula, MsoNode, Var};
use crate::buchi::Alphabet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Shape {
    Letter(Vec<u32>),
    Eq,
    Less,
    In,
    /// `x = x`
    Tautology,
    /// `x < x`
    Contradiction,
    And(u32, u32, Vec<u32>),
    Not(u32),
    Forall(u32, u32),
}

struct Info {
    shape: u32,
    frees: Arc<Vec<Var>>,
    // Keeps the node alive so its address stays unique.
    _node: MsoFormula,
}

pub(crate) struct Compiler {
    alphabet: Alphabet,
    shapes: HashMap<Shape, u32>,
    info: HashMap<*const MsoNode, Info>,
    cache: HashMap<(u32, bool), Arc<Ldfa>>,
    singletons: HashMap<(usize, usize), Arc<Ldfa>>,
    /// Largest automaton built so far, for diagnostics.
    pub max_states: usize,
}

impl Compiler {
    pub fn new(alphabet: &Alphabet) -> Compiler {
        Compiler {
            alphabet: alphabet.clone(),
            shapes: HashMap::new(),
            info: HashMap::new(),
            cache: HashMap::new(),
            singletons: HashMap::new(),
            max_states: 0,
        }
    }

    fn intern(&mut self, s: Shape) -> u32 {
        let len = self.shapes.len() as u32;
        *self.shapes.entry(s).or_insert(len)
    }

    fn info(&mut self, f: &MsoFormula) -> Result<(u32, Arc<Vec<Var>>)> {
        if let Some(i) = self.info.get(&f.ptr()) {
            return Ok((i.shape, i.frees.clone()));
        }
        let (shape, frees) = match f.node() {
            MsoNode::Letter(ls, x) => {
                let mut ids = Vec::new();
                for l in ls {
                    let i = self.alphabet.index_of(l).ok_or_else(|| Error::input(format!("unknown letter predicate `P_{l}`")))?;
                    ids.push(i as u32);
                }
                ids.sort_unstable();
                (self.intern(Shape::Letter(ids)), vec![x.clone()])
            }
            MsoNode::Eq(x, y) if x == y => (self.intern(Shape::Tautology), vec![x.clone()]),
            MsoNode::Less(x, y) if x == y => (self.intern(Shape::Contradiction), vec![x.clone()]),
            MsoNode::Eq(x, y) => (self.intern(Shape::Eq), vec![x.clone(), y.clone()]),
            MsoNode::Less(x, y) => (self.intern(Shape::Less), vec![x.clone(), y.clone()]),
            MsoNode::In(x, y) => (self.intern(Shape::In), vec![x.clone(), y.clone()]),
            MsoNode::And(a, b) => {
                let (sa, fa) = self.info(a)?;
                let (sb, fb) = self.info(b)?;
                let mut frees = fa.as_ref().clone();
                let mut map = Vec::new();
                for x in fb.iter() {
                    match frees.iter().position(|y| y == x) {
                        Some(i) => map.push(i as u32),
                        None => {
                            map.push(frees.len() as u32);
                            frees.push(x.clone());
                        }
                    }
                }
                (self.intern(Shape::And(sa, sb, map)), frees)
            }
            MsoNode::Not(a) => {
                let (sa, fa) = self.info(a)?;
                (self.intern(Shape::Not(sa)), fa.as_ref().clone())
            }
            MsoNode::Forall(x, a) => {
                let (sa, fa) = self.info(a)?;
                match fa.iter().position(|y| y == x) {
                    None => (sa, fa.as_ref().clone()),
                    Some(j) => (self.intern(Shape::Forall(sa, j as u32)), fa.iter().filter(|&y| y != x).cloned().collect()),
                }
            }
        };
        let frees = Arc::new(frees);
        self.info.insert(f.ptr(), Info { shape, frees: frees.clone(), _node: f.clone() });
        Ok((shape, frees))
    }

    fn fo_mask(frees: &[Var]) -> usize {
        frees.iter().enumerate().filter(|(_, v)| v.is_first_order()).fold(0, |m, (j, _)| m | 1 << j)
    }

    fn singletons(&mut self, tracks: usize, mask: usize) -> Result<Arc<Ldfa>> {
        if let Some(d) = self.singletons.get(&(tracks, mask)) {
            return Ok(d.clone());
        }
        let d = Arc::new(Ldfa::singletons(self.alphabet.len(), tracks, mask)?);
        self.singletons.insert((tracks, mask), d.clone());
        Ok(d)
    }

    /// Complement restricted to encodings with singleton first-order tracks.
    fn negate(&mut self, d: &Ldfa, frees: &[Var]) -> Result<Ldfa> {
        let s = self.singletons(frees.len(), Self::fo_mask(frees))?;
        d.product(&s, |a, s| s && !a)
    }

    /// Automaton for `φ` (or `¬φ` when `neg`), tracks in first-occurrence
    /// order of the free variables.
    pub fn compile(&mut self, f: &MsoFormula, neg: bool) -> Result<(Arc<Ldfa>, Arc<Vec<Var>>)> {
        let (shape, frees) = self.info(f)?;
        if let Some(d) = self.cache.get(&(shape, neg)) {
            return Ok((d.clone(), frees));
        }
        let base = self.alphabet.len();
        let d: Ldfa = match f.node() {
            MsoNode::Not(a) => return self.compile(a, !neg),
            MsoNode::Forall(x, a) if !self.info(a)?.1.contains(x) => return self.compile(a, neg),
            MsoNode::Forall(x, a) => {
                let (inner, fa) = self.compile(a, true)?;
                let j = fa.iter().position(|y| y == x).expect("bound variable is free in the body");
                let e = inner.project(j).map_err(|e| context(e, f))?;
                if neg {
                    e
                } else {
                    self.negate(&e, &frees)?
                }
            }
            MsoNode::And(a, b) => {
                let (da, fa) = self.compile(a, false)?;
                let (db, fb) = self.compile(b, false)?;
                let k = frees.len();
                let pos = |v: &Var| frees.iter().position(|y| y == v).expect("union of frees");
                let ma: Vec<usize> = fa.iter().map(pos).collect();
                let mb: Vec<usize> = fb.iter().map(pos).collect();
                let p = da.retrack(&ma, k).product(&db.retrack(&mb, k), |x, y| x && y)?;
                if neg {
                    self.negate(&p, &frees)?
                } else {
                    p
                }
            }
            _ => {
                let atom = atom(f.node(), &self.alphabet, base)?;
                if neg {
                    self.negate(&atom, &frees)?
                } else {
                    atom
                }
            }
        };
        self.max_states = self.max_states.max(d.n());
        let d = Arc::new(d);
        self.cache.insert((shape, neg), d.clone());
        Ok((d, frees))
    }

    /// Automaton over the caller's track order `frees ⊇ Free(φ)`; tracks of
    /// first-order variables not free in `φ` are still singletons.
    pub fn compile_over(&mut self, f: &MsoFormula, frees: &[Var]) -> Result<Ldfa> {
        f.check_orders()?;
        let (d, fr) = self.compile(f, false)?;
        let mut map = Vec::new();
        for x in fr.iter() {
            map.push(frees.iter().position(|y| y == x).ok_or_else(|| Error::input(format!("free variable `{x}` missing from the track list")))?);
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(x) = frees.iter().find(|x| !seen.insert(*x)) {
            return Err(Error::input(format!("variable `{x}` listed twice")));
        }
        let d = d.retrack(&map, frees.len());
        let extra: Vec<Var> = frees.iter().map(|x| if fr.contains(x) { Var::second("_") } else { x.clone() }).collect();
        let mask = Self::fo_mask(&extra);
        if mask == 0 {
            return Ok(d);
        }
        let s = self.singletons(frees.len(), mask)?;
        d.product(&s, |a, b| a && b)
    }
}

fn context(e: Error, f: &MsoFormula) -> Error {
    match e {
        Error::Resource(msg) => {
            let mut s = f.to_string();
            if s.len() > 160 {
                let cut = (0..=160).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
                s.truncate(cut);
                s.push_str("...");
            }
            Error::Resource(format!("{msg} while compiling `{s}`"))
        }
        e => e,
    }
}

/// Automata for the atomic formulas. Every atom only constrains the prefix
/// `u` of an encoding `u$v`, since first-order positions are singletons and
/// cannot lie in the repeated part.
fn atom(node: &MsoNode, alphabet: &Alphabet, base: usize) -> Result<Ldfa> {
    // step(state, letter, bits) -> next state; states: small integers.
    type Step = dyn Fn(u8, usize, usize) -> Option<u8>;
    let (tracks, fo_mask, step, accept): (usize, usize, Box<Step>, u8) = match node {
        MsoNode::Letter(ls, _) => {
            let ok: Vec<bool> = (0..base).map(|b| ls.iter().any(|l| l == alphabet.name(b))).collect();
            (
                1,
                1,
                Box::new(move |st, b, bits| match (st, bits) {
                    (0, 1) if ok[b] => Some(1),
                    (s, 0) => Some(s),
                    _ => None,
                }),
                1,
            )
        }
        MsoNode::Eq(x, y) if x == y => (1, 1, Box::new(|st, _, bits| if bits == 0 { Some(st) } else if st == 0 { Some(1) } else { None }), 1),
        MsoNode::Less(x, y) if x == y => (1, 1, Box::new(|_, _, _| None), 1),
        MsoNode::Eq(..) => (
            2,
            3,
            Box::new(|st, _, bits| match (st, bits) {
                (s, 0) => Some(s),
                (0, 3) => Some(1),
                _ => None,
            }),
            1,
        ),
        MsoNode::Less(..) => (
            2,
            3,
            Box::new(|st, _, bits| match (st, bits) {
                (s, 0) => Some(s),
                (0, 1) => Some(1),
                (1, 2) => Some(2),
                _ => None,
            }),
            2,
        ),
        // Track 0 is the set, track 1 the position.
        MsoNode::In(..) => (
            2,
            2,
            Box::new(|st, _, bits| match (st, bits) {
                (s, 0 | 1) => Some(s),
                (0, 3) => Some(1),
                _ => None,
            }),
            1,
        ),
        _ => unreachable!("not an atom"),
    };
    let letters = base << tracks;
    let class_of = (0..letters as u32).collect();
    // (phase, state): phase 0 before $, 1 right after, 2 after a loop letter, 3 dead.
    Ldfa::explore(
        base,
        tracks,
        class_of,
        letters,
        (0u8, 0u8),
        |&(phase, st), c| match (phase, c) {
            (3, _) => (3, 0),
            (0, None) => (1, st),
            (_, None) => (3, 0),
            (0, Some(l)) => match step(st, l >> tracks, l & ((1 << tracks) - 1)) {
                Some(s) => (0, s),
                None => (3, 0),
            },
            (_, Some(l)) => {
                if l & fo_mask != 0 {
                    (3, 0)
                } else {
                    (2, st)
                }
            }
        },
        |&(phase, st)| phase == 2 && st == accept,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mso::parse_mso;

    #[test]
    fn renamings_share_automata() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let mut c = Compiler::new(&ab);
        let (d1, _) = c.compile(&parse_mso("exists y. x < y & P_a(y)").unwrap(), false).unwrap();
        let before = c.cache.len();
        let (d2, f2) = c.compile(&parse_mso("exists z. w < z & P_a(z)").unwrap(), false).unwrap();
        assert_eq!(c.cache.len(), before);
        assert!(Arc::ptr_eq(&d1, &d2));
        assert_eq!(f2[0].name(), "w");
    }

    #[test]
    fn extra_first_order_tracks_are_singletons() {
        let ab = Alphabet::new(["a"]).unwrap();
        let mut c = Compiler::new(&ab);
        let f = parse_mso("true").unwrap();
        let d = c.compile_over(&f, &[Var::first("x")]).unwrap();
        assert!(d.accepts(&[1], &[0]));
        assert!(!d.accepts(&[0], &[0]));
        assert!(!d.accepts(&[1, 1], &[0]));
    }
}
