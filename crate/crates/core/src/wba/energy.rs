//! Energy feasibility over a product graph: is there an accepting run whose
//! energy levels, starting at zero, never drop below zero?
//!
//! Levels are tracked up to a cap `K` in two ways. Clamping at `K` loses
//! energy, so an accepting lasso of the clamped system is a real witness.
//! Replacing levels above `K` by `ω` only gains energy, so if that system
//! has no plausible accepting cycle the answer is no. `K` doubles until one
//! side decides or the budget `B·|V|·Wmax` is spent.

use super::product::{has_positive_cycle, ProductGraph};
use super::SolverOptions;
use crate::error::{Error, Result};
use crate::graph::{nontrivial_components, tarjan_scc, Explored};
use crate::omega::LassoWord;
use crate::valuation::EnergyWeight;

const OMEGA: i64 = i64::MAX;
const NODE_LIMIT: usize = 1_000_000;

/// `Ok(Some(run))` with a witness lasso of edge indices, `Ok(None)` when no
/// run exists, `Err(Undecided)` when the budget runs out.
pub(crate) fn solve_energy(g: &ProductGraph<EnergyWeight>, dim: usize, opts: &SolverOptions) -> Result<Option<LassoWord<usize>>> {
    if g.edges().iter().any(|e| e.weight.0.len() != dim) {
        return Err(Error::input("energy weight of the wrong dimension"));
    }
    let wmax = g.edges().iter().flat_map(|e| e.weight.0.iter()).map(|x| x.unsigned_abs() as i64).max().unwrap_or(0).max(1);
    let budget = (opts.energy_bound as i64).max(1).saturating_mul(g.num_vertices().max(1) as i64).saturating_mul(wmax);
    let undecided = || Error::Undecided { bound: opts.energy_bound };
    let mut k = wmax;
    loop {
        match clamped(g, dim, k) {
            Some(Some(run)) => return Ok(Some(run)),
            Some(None) => {}
            None => return Err(undecided()),
        }
        match abstracted(g, dim, k)? {
            Some(false) => return Ok(None),
            Some(true) => {}
            None => return Err(undecided()),
        }
        if k >= budget {
            return Err(undecided());
        }
        k = k.saturating_mul(2).min(budget);
    }
}

type Node = (usize, Vec<i64>);

fn successors(g: &ProductGraph<EnergyWeight>, (v, level): &Node, next: impl Fn(i64, i64) -> i64) -> Vec<(usize, Node)> {
    let mut out = Vec::new();
    'edges: for &e in g.out(*v) {
        let edge = &g.edges()[e];
        let mut l = Vec::with_capacity(level.len());
        for (x, w) in level.iter().zip(&edge.weight.0) {
            let y = next(*x, *w);
            if y < 0 {
                continue 'edges;
            }
            l.push(y);
        }
        out.push((e, (edge.to, l)));
    }
    out
}

/// `Some(Some(run))` if the clamped system has an accepting lasso, `Some(None)`
/// if not, `None` if it is too large.
fn clamped(g: &ProductGraph<EnergyWeight>, dim: usize, k: i64) -> Option<Option<LassoWord<usize>>> {
    let roots = g.initial().iter().map(|&v| (v, vec![0i64; dim]));
    let x = Explored::explore(roots, NODE_LIMIT, |n| successors(g, n, |x, w| (x + w).min(k)))?;
    Some(x.accepting_lasso(|(v, _)| g.is_accepting(*v)).map(|(p, c)| LassoWord::from_parts(p, c).expect("cycles are nonempty")))
}

/// `Some(false)` if the ω-system proves there is no run, `Some(true)` if it
/// cannot rule one out, `None` if it is too large.
fn abstracted(g: &ProductGraph<EnergyWeight>, dim: usize, k: i64) -> Result<Option<bool>> {
    let roots = g.initial().iter().map(|&v| (v, vec![0i64; dim]));
    let next = |x: i64, w: i64| {
        if x == OMEGA || x + w > k {
            OMEGA
        } else {
            x + w
        }
    };
    let Some(x) = Explored::explore(roots, NODE_LIMIT, |n| successors(g, n, next)) else { return Ok(None) };
    let m = x.nodes.len();
    let succ = x.successors();
    let comp = tarjan_scc(m, &succ);
    let nontrivial = nontrivial_components(&succ, &comp);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); nontrivial.len()];
    for v in 0..m {
        members[comp[v]].push(v);
    }
    let mut ends = Vec::new();
    let mut weights: Vec<&EnergyWeight> = Vec::new();
    for (v, es) in x.edges.iter().enumerate() {
        for &(e, u) in es {
            ends.push((v, u));
            weights.push(&g.edges()[e].weight);
        }
    }
    for (c, vs) in members.iter().enumerate() {
        if !nontrivial[c] || !vs.iter().any(|&v| g.is_accepting(x.nodes[v].0)) {
            continue;
        }
        let internal: Vec<usize> = (0..ends.len()).filter(|&e| comp[ends[e].0] == c && comp[ends[e].1] == c).collect();
        let len = vs.len() as i128 + 1;
        // A component whose levels are ω in some dimension where every cycle
        // loses energy cannot host a run forever.
        let mut plausible = true;
        for i in 0..dim {
            if x.nodes[vs[0]].1[i] != OMEGA {
                continue;
            }
            // w·(len) + 1 > 0 on a cycle iff its weight is ≥ 0.
            let w: Vec<i128> = weights.iter().map(|w| w.0[i] as i128 * len + 1).collect();
            if has_positive_cycle(m, &ends, &internal, &w)?.is_none() {
                plausible = false;
                break;
            }
        }
        if plausible {
            return Ok(Some(true));
        }
    }
    Ok(Some(false))
}

/// Energy levels along `passes` unrollings of a witness, for checking.
#[cfg(test)]
pub(crate) fn replay_levels(g: &ProductGraph<EnergyWeight>, run: &LassoWord<usize>, passes: usize) -> Vec<Vec<i128>> {
    let dim = g.edges().first().map_or(0, |e| e.weight.0.len());
    let mut level = vec![0i128; dim];
    let mut out = Vec::new();
    let steps = run.prefix().iter().chain(run.period().iter().cycle().take(run.period().len() * passes));
    for &e in steps {
        for (l, w) in level.iter_mut().zip(&g.edges()[e].weight.0) {
            *l += *w as i128;
        }
        out.push(level.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ew(v: &[i64]) -> EnergyWeight {
        EnergyWeight(v.to_vec())
    }

    fn solve(n: usize, acc: Vec<usize>, edges: Vec<(usize, usize, EnergyWeight)>) -> Result<Option<LassoWord<usize>>> {
        let dim = edges[0].2 .0.len();
        let g = ProductGraph::new(n, vec![0], acc, edges).unwrap();
        solve_energy(&g, dim, &SolverOptions::default())
    }

    #[test]
    fn witness_replays() {
        // Save up 3 on the way, then an accepting loop that costs 1 and gains 1.
        let edges = vec![(0, 1, ew(&[3])), (1, 2, ew(&[-1])), (2, 1, ew(&[1]))];
        let g = ProductGraph::new(3, vec![0], vec![2], edges.clone()).unwrap();
        let run = solve_energy(&g, 1, &SolverOptions::default()).unwrap().unwrap();
        assert!(replay_levels(&g, &run, 100).iter().all(|l| l.iter().all(|x| *x >= 0)));
    }

    #[test]
    fn draining_loop_is_infeasible() {
        let edges = vec![(0, 0, ew(&[5])), (0, 1, ew(&[0])), (1, 1, ew(&[-1]))];
        assert_eq!(solve(2, vec![1], edges).unwrap(), None);
    }

    #[test]
    fn first_step_negative() {
        assert_eq!(solve(1, vec![0], vec![(0, 0, ew(&[-1]))]).unwrap(), None);
    }

    #[test]
    fn two_dimensions_trade_off() {
        // Each loop trades one dimension for the other; alternating them
        // breaks even, so a run exists.
        let edges = vec![(0, 1, ew(&[2, 2])), (1, 1, ew(&[1, -1])), (1, 2, ew(&[0, 0])), (2, 1, ew(&[-1, 1]))];
        assert!(solve(3, vec![2], edges).unwrap().is_some());
        // Both loops drain the second dimension.
        let edges = vec![(0, 1, ew(&[2, 2])), (1, 1, ew(&[1, -1])), (1, 2, ew(&[0, 0])), (2, 1, ew(&[-1, -1]))];
        assert!(!matches!(solve(3, vec![2], edges), Ok(Some(_))));
    }
}
