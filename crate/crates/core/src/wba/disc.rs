//! Exact infimum of discounted sums over accepting runs in a product graph.
//!
//! Costs are non-negative, so a run keeps a finite value only if its
//! discount product tends to zero or it ends on a free cycle (cost 0,
//! discount 1) through an accepting vertex. Runs of the first kind can be
//! steered into acceptance at vanishing extra cost, which turns the problem
//! into an infinite-horizon shortest path solved by policy iteration over
//! exact rationals, starting from a policy whose values are all finite.

use num_traits::{One, Zero};

use super::product::{bfs_path, components_within, ProductGraph};
use super::SolverOptions;
use crate::error::{Error, Result};
use crate::valuation::{DiscWeight, ExtReal, Q};

pub(crate) fn solve_disc(g: &ProductGraph<DiscWeight>, _opts: &SolverOptions) -> Result<ExtReal> {
    let n = g.num_vertices();
    let edges = g.edges();
    let reach = g.reachable();
    let verts: Vec<usize> = (0..n).filter(|&v| reach[v]).collect();
    let live = |e: usize| reach[edges[e].from];
    let free = |e: usize| live(e) && edges[e].weight.cost.is_zero() && edges[e].weight.discount.is_one();

    let mut policy: Vec<Option<usize>> = vec![None; n];
    let mut pinned = vec![false; n];
    // Free cycles through acceptance: value 0, stay on them.
    for z in components_within(g, &verts, free) {
        if !z.iter().any(|&v| g.is_accepting(v)) {
            continue;
        }
        let mut inside = vec![false; n];
        z.iter().for_each(|&v| inside[v] = true);
        for &v in &z {
            policy[v] = g.out(v).iter().copied().find(|&e| free(e) && inside[edges[e].to]);
            pinned[v] = true;
        }
    }
    let mut target = pinned.clone();
    for comp in components_within(g, &verts, live) {
        if !comp.iter().any(|&v| g.is_accepting(v)) {
            continue;
        }
        let mut inside = vec![false; n];
        comp.iter().for_each(|&v| inside[v] = true);
        let internal = |e: usize| inside[edges[e].from] && inside[edges[e].to];
        let discounted = (0..edges.len()).find(|&e| internal(e) && edges[e].weight.discount < Q::one());
        let has_pinned = comp.iter().any(|&v| pinned[v]);
        if discounted.is_none() && !has_pinned {
            continue;
        }
        comp.iter().for_each(|&v| target[v] = true);
        if let Some(e) = discounted {
            let mut cycle = vec![e];
            cycle.extend(bfs_path(g, edges[e].to, edges[e].from, internal).ok_or_else(|| Error::internal("component is not strongly connected"))?);
            for &c in &cycle {
                let v = edges[c].from;
                if policy[v].is_none() {
                    policy[v] = Some(c);
                }
            }
        }
    }
    let viable = g.coreachable(&target);
    let keep: Vec<bool> = (0..n).map(|v| reach[v] && viable[v]).collect();
    // Everyone else walks towards a vertex that already has a policy.
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, edge) in edges.iter().enumerate() {
        if keep[edge.from] && keep[edge.to] {
            pred[edge.to].push(e);
        }
    }
    let mut queue: std::collections::VecDeque<usize> = (0..n).filter(|&v| keep[v] && policy[v].is_some()).collect();
    while let Some(v) = queue.pop_front() {
        for &e in &pred[v] {
            let u = edges[e].from;
            if policy[u].is_none() {
                policy[u] = Some(e);
                queue.push_back(u);
            }
        }
    }
    if (0..n).any(|v| keep[v] && policy[v].is_none()) {
        return Err(Error::internal("viable vertex without an initial policy"));
    }

    let mut value = evaluate(g, &policy, &keep)?;
    loop {
        let mut changed = false;
        for v in (0..n).filter(|&v| keep[v] && !pinned[v]) {
            let Some(cur) = value[v].clone() else {
                return Err(Error::internal("policy iteration reached an infinite value"));
            };
            let mut best: Option<(Q, usize)> = None;
            for &e in g.out(v) {
                let w = &edges[e].weight;
                let Some(next) = value[edges[e].to].as_ref() else { continue };
                if !keep[edges[e].to] {
                    continue;
                }
                let cand = &w.cost + &w.discount * next;
                if cand < cur && best.as_ref().is_none_or(|(b, _)| cand < *b) {
                    best = Some((cand, e));
                }
            }
            if let Some((_, e)) = best {
                policy[v] = Some(e);
                changed = true;
            }
        }
        if !changed {
            break;
        }
        value = evaluate(g, &policy, &keep)?;
    }
    let best = g.initial().iter().filter(|&&v| keep[v]).filter_map(|&v| value[v].clone()).min();
    Ok(best.map_or(ExtReal::PosInf, ExtReal::Finite))
}

/// Values of a positional policy; `None` is `+inf`.
fn evaluate(g: &ProductGraph<DiscWeight>, policy: &[Option<usize>], keep: &[bool]) -> Result<Vec<Option<Q>>> {
    let n = g.num_vertices();
    let edges = g.edges();
    let next = |v: usize| edges[policy[v].expect("kept vertices have a policy")].to;
    let mut value: Vec<Option<Option<Q>>> = vec![None; n];
    // 0 = unvisited, 1 = on the current walk, 2 = done
    let mut state = vec![0u8; n];
    for start in (0..n).filter(|&v| keep[v]) {
        if state[start] == 2 {
            continue;
        }
        let mut walk = Vec::new();
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = next(v);
        }
        let mut tail_end = walk.len();
        if state[v] == 1 {
            // Closed a new cycle at v.
            let at = walk.iter().position(|&u| u == v).expect("v is on the walk");
            let cycle = &walk[at..];
            let mut total = Q::zero();
            let mut factor = Q::one();
            for &u in cycle {
                let w = &edges[policy[u].unwrap()].weight;
                total += &factor * &w.cost;
                factor *= &w.discount;
            }
            let head = if factor < Q::one() {
                Some(total / (Q::one() - factor))
            } else if total.is_zero() && cycle.iter().any(|&u| g.is_accepting(u)) {
                Some(Q::zero())
            } else {
                None
            };
            value[v] = Some(head);
            state[v] = 2;
            for &u in cycle[1..].iter().rev() {
                let succ = value[next(u)].clone().expect("successor on the cycle is done");
                value[u] = Some(step(&edges[policy[u].unwrap()].weight, succ));
                state[u] = 2;
            }
            tail_end = at;
        }
        for &u in walk[..tail_end].iter().rev() {
            let succ = value[next(u)].clone().ok_or_else(|| Error::internal("successor value missing"))?;
            value[u] = Some(step(&edges[policy[u].unwrap()].weight, succ));
            state[u] = 2;
        }
    }
    Ok(value.into_iter().map(|v| v.flatten()).collect())
}

fn step(w: &DiscWeight, succ: Option<Q>) -> Option<Q> {
    succ.map(|s| &w.cost + &w.discount * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::parse_rational;

    fn dw(c: &str, d: &str) -> DiscWeight {
        DiscWeight::new(parse_rational(c).unwrap(), parse_rational(d).unwrap())
    }

    fn solve(n: usize, init: Vec<usize>, acc: Vec<usize>, edges: Vec<(usize, usize, DiscWeight)>) -> ExtReal {
        let g = ProductGraph::new(n, init, acc, edges).unwrap();
        solve_disc(&g, &SolverOptions::default()).unwrap()
    }

    #[test]
    fn single_loop() {
        assert_eq!(solve(1, vec![0], vec![0], vec![(0, 0, dw("1", "1/2"))]), ExtReal::int(2));
    }

    #[test]
    fn picks_the_cheaper_loop() {
        let e = vec![(0, 0, dw("1", "1/2")), (0, 0, dw("3", "1/2"))];
        assert_eq!(solve(1, vec![0], vec![0], e), ExtReal::int(2));
    }

    #[test]
    fn free_loop_needs_acceptance() {
        // A free loop at 0 that is not accepting, and an exit to a costly loop.
        let e = vec![(0, 0, dw("0", "1")), (0, 1, dw("1", "1/2")), (1, 1, dw("1", "1/2"))];
        assert_eq!(solve(2, vec![0], vec![1], e.clone()), ExtReal::int(2));
        // With 0 accepting the free loop is itself a run of value 0.
        assert_eq!(solve(2, vec![0], vec![0, 1], e), ExtReal::int(0));
    }

    #[test]
    fn undiscounted_costly_loop_is_infinite() {
        assert_eq!(solve(1, vec![0], vec![0], vec![(0, 0, dw("1", "1"))]), ExtReal::PosInf);
        assert_eq!(solve(1, vec![0], vec![], vec![(0, 0, dw("1", "1/2"))]), ExtReal::PosInf);
    }

    #[test]
    fn delay_before_acceptance_is_an_infimum() {
        // Discounted free loop at 0 (not accepting); leaving costs 8 at any
        // time, so the infimum over accepting runs is 0 but never attained.
        let e = vec![(0, 0, dw("0", "1/2")), (0, 1, dw("8", "1")), (1, 1, dw("0", "1"))];
        assert_eq!(solve(2, vec![0], vec![1], e), ExtReal::int(0));
    }
}
