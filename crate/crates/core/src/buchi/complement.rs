//! Rank-based complementation: level rankings with maximal rank `2|Q|`,
//! odd ranks forbidden on accepting states, and a breakpoint set of
//! even-ranked states that still owe a visit to an odd rank.

use super::{BuchiAutomaton, Transition, EXPLORE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Explored;

/// Default bound on `|Q|` for complementation.
pub const DEFAULT_COMPLEMENT_CAP: usize = 12;

const NONE: u8 = u8::MAX;

pub(crate) fn complement(a: &BuchiAutomaton, cap: usize) -> Result<BuchiAutomaton> {
    let n = a.num_states();
    if n > cap || n > 60 {
        return Err(Error::Resource(format!("complementation needs at most {} states, automaton has {n}", cap.min(60))));
    }
    let ts = a.system();
    let top = (2 * n) as u8;
    let mut init = vec![NONE; n];
    for &q in ts.initial() {
        init[q] = top;
    }
    let letters = a.alphabet().len();
    let g = Explored::explore([(init, 0u64)], EXPLORE_LIMIT, |(ranks, owing)| {
        let mut succ = Vec::new();
        for letter in 0..letters {
            let mut bound = vec![NONE; n];
            let mut owing_succ = 0u64;
            for q in (0..n).filter(|&q| ranks[q] != NONE) {
                for &t in ts.out(q) {
                    let t = ts.transitions()[t];
                    if t.letter == letter {
                        bound[t.to] = bound[t.to].min(ranks[q]);
                        if owing >> q & 1 == 1 {
                            owing_succ |= 1 << t.to;
                        }
                    }
                }
            }
            let targets: Vec<usize> = (0..n).filter(|&q| bound[q] != NONE).collect();
            let mut choice = vec![NONE; n];
            enumerate(&targets, 0, &bound, a, &mut choice, &mut |r: &[u8]| {
                let even: u64 = (0..n).filter(|&q| r[q] != NONE && r[q].is_multiple_of(2)).fold(0, |m, q| m | 1 << q);
                let next = if *owing == 0 { even } else { owing_succ & even };
                succ.push((letter, (r.to_vec(), next)));
            });
        }
        succ
    })
    .ok_or_else(|| Error::Resource("complement state space exceeds the exploration limit".into()))?;
    let names = (0..g.nodes.len()).map(|i| format!("c{i}")).collect();
    let trans = g.edges.iter().enumerate().flat_map(|(v, es)| es.iter().map(move |&(l, w)| Transition::new(v, l, w))).collect();
    let acc = (0..g.nodes.len()).filter(|&v| g.nodes[v].1 == 0);
    BuchiAutomaton::new(a.alphabet().clone(), names, g.roots.clone(), acc, trans)
}

fn enumerate(targets: &[usize], k: usize, bound: &[u8], a: &BuchiAutomaton, choice: &mut Vec<u8>, emit: &mut impl FnMut(&[u8])) {
    if k == targets.len() {
        emit(choice);
        return;
    }
    let q = targets[k];
    for r in 0..=bound[q] {
        if r % 2 == 1 && a.is_accepting(q) {
            continue;
        }
        choice[q] = r;
        enumerate(targets, k + 1, bound, a, choice, emit);
    }
    choice[q] = NONE;
}

#[cfg(test)]
mod tests {
    use crate::buchi::BuchiAutomaton;
    use crate::omega::LassoWord;

    fn word(s: &str) -> LassoWord<String> {
        s.parse().unwrap()
    }

    #[test]
    fn complement_of_everything_is_empty() {
        let all = BuchiAutomaton::from_names(&["a", "b"], &["q"], &["q"], &[("q", "a", "q"), ("q", "b", "q")]).unwrap();
        assert!(all.complement(12).unwrap().is_empty());
    }

    #[test]
    fn complement_of_infinitely_many_a() {
        let a = crate::buchi::tests::inf_a();
        let c = a.complement(12).unwrap();
        assert!(c.accepts(&word("a b (b)")).unwrap().is_some());
        assert!(c.accepts(&word("(a b)")).unwrap().is_none());
        assert!(c.intersect(&a).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let a = crate::buchi::tests::inf_a();
        assert!(matches!(a.complement(1), Err(crate::Error::Resource(_))));
    }
}
