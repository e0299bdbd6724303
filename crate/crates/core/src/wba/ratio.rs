//! Exact supremum of the ratio objective over the accepting runs recorded in
//! a product graph.
//!
//! A run either pays positive cost infinitely often, and then its limsup is
//! governed by the cycle ratios of the component it ends in, or its cost
//! freezes at some `D > 0` and the limsup is the best reward level it keeps
//! revisiting, divided by `D`. Both cases reduce to parametric longest-path
//! problems solved by Dinkelbach iteration with integer Bellman–Ford.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::product::{bfs_path, components_within, has_positive_cycle, longest_paths, Longest, ProductGraph};
use super::SolverOptions;
use crate::error::{Error, Result};
use crate::valuation::{ExtReal, RatioWeight, Q};

fn overflow() -> Error {
    Error::Resource("weights too large for the exact ratio solver".into())
}

/// A fraction `num/den` with `den > 0`, kept reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    fn new(num: i128, den: i128) -> Frac {
        debug_assert!(den > 0);
        let g = num.gcd(&den).max(1);
        Frac { num: num / g, den: den / g }
    }

    fn gt(self, other: Frac) -> Result<bool> {
        let a = self.num.checked_mul(other.den).ok_or_else(overflow)?;
        let b = other.num.checked_mul(self.den).ok_or_else(overflow)?;
        Ok(a > b)
    }
}

/// Edge weights scaled to integers by a common denominator; ratios do not
/// change.
struct Scaled {
    r: Vec<i128>,
    c: Vec<i128>,
    ends: Vec<(usize, usize)>,
}

fn scale(g: &ProductGraph<RatioWeight>) -> Result<Scaled> {
    let mut l = BigInt::one();
    for e in g.edges() {
        l = l.lcm(e.weight.reward.denom()).lcm(e.weight.cost.denom());
    }
    let to_int = |q: &Q| -> Result<i128> { (q * Q::from_integer(l.clone())).to_integer().to_i128().ok_or_else(overflow) };
    let mut r = Vec::new();
    let mut c = Vec::new();
    for e in g.edges() {
        r.push(to_int(&e.weight.reward)?);
        c.push(to_int(&e.weight.cost)?);
    }
    Ok(Scaled { r, c, ends: g.edges().iter().map(|e| (e.from, e.to)).collect() })
}

fn lin(s: &Scaled, edges: &[usize], lam: Frac) -> Result<Vec<i128>> {
    let mut w = vec![0i128; s.r.len()];
    for &e in edges {
        let a = s.r[e].checked_mul(lam.den).ok_or_else(overflow)?;
        let b = lam.num.checked_mul(s.c[e]).ok_or_else(overflow)?;
        w[e] = a.checked_sub(b).ok_or_else(overflow)?;
    }
    Ok(w)
}

fn sums(s: &Scaled, path: &[usize]) -> Result<(i128, i128)> {
    let mut r: i128 = 0;
    let mut c: i128 = 0;
    for &e in path {
        r = r.checked_add(s.r[e]).ok_or_else(overflow)?;
        c = c.checked_add(s.c[e]).ok_or_else(overflow)?;
    }
    Ok((r, c))
}

/// Largest `R/C` over the cycles with `C > 0` formed by `edges`, assuming no
/// zero-cost cycle has positive reward. `first` is one such cycle.
fn max_cycle_ratio(n: usize, s: &Scaled, edges: &[usize], first: &[usize]) -> Result<Frac> {
    let (r, c) = sums(s, first)?;
    let mut lam = Frac::new(r, c);
    loop {
        let w = lin(s, edges, lam)?;
        match has_positive_cycle(n, &s.ends, edges, &w)? {
            None => return Ok(lam),
            Some(cyc) => {
                let (r, c) = sums(s, &cyc)?;
                if c <= 0 {
                    return Err(Error::internal("positive parametric cycle without cost"));
                }
                let next = Frac::new(r, c);
                if !next.gt(lam)? {
                    return Err(Error::internal("ratio iteration did not improve"));
                }
                lam = next;
            }
        }
    }
}

pub(crate) fn solve_ratio(g: &ProductGraph<RatioWeight>, _opts: &SolverOptions) -> Result<ExtReal> {
    let s = scale(g)?;
    let n = g.num_vertices();
    let reach = g.reachable();
    let verts: Vec<usize> = (0..n).filter(|&v| reach[v]).collect();
    let live = |e: usize| reach[s.ends[e].0];
    let mut best: Option<Frac> = None;
    let raise = |best: &mut Option<Frac>, f: Frac| -> Result<()> {
        if best.map_or(Ok(true), |b| f.gt(b))? {
            *best = Some(f);
        }
        Ok(())
    };

    // Runs that pay cost infinitely often.
    for comp in components_within(g, &verts, live) {
        if !comp.iter().any(|&v| g.is_accepting(v)) {
            continue;
        }
        let mut inside = vec![false; n];
        comp.iter().for_each(|&v| inside[v] = true);
        let internal: Vec<usize> = (0..s.r.len()).filter(|&e| inside[s.ends[e].0] && inside[s.ends[e].1]).collect();
        let Some(&pos) = internal.iter().find(|&&e| s.c[e] > 0) else { continue };
        let free: Vec<usize> = internal.iter().copied().filter(|&e| s.c[e] == 0).collect();
        if has_positive_cycle(n, &s.ends, &free, &s.r)?.is_some() {
            return Ok(ExtReal::PosInf);
        }
        let back = bfs_path(g, s.ends[pos].1, s.ends[pos].0, |e| inside[s.ends[e].0] && inside[s.ends[e].1]).ok_or_else(|| Error::internal("component is not strongly connected"))?;
        let mut first = vec![pos];
        first.extend(back);
        let lam = max_cycle_ratio(n, &s, &internal, &first)?;
        raise(&mut best, lam)?;
    }

    // Runs whose cost eventually stops growing.
    let free = |e: usize| live(e) && s.c[e] == 0;
    let zero_comps = components_within(g, &verts, free);
    let mut pumpable = vec![false; n];
    for z in &zero_comps {
        let mut inside = vec![false; n];
        z.iter().for_each(|&v| inside[v] = true);
        let internal: Vec<usize> = (0..s.r.len()).filter(|&e| free(e) && inside[s.ends[e].0] && inside[s.ends[e].1]).collect();
        if has_positive_cycle(n, &s.ends, &internal, &s.r)?.is_some() {
            z.iter().for_each(|&v| pumpable[v] = true);
        }
    }
    let layered = Layered::new(g, &s);
    let paid = layered.forward();
    for z in &zero_comps {
        if !z.iter().any(|&v| g.is_accepting(v)) || !z.iter().any(|&v| paid[2 * v + 1]) {
            continue;
        }
        if pumpable[z[0]] {
            return Ok(ExtReal::PosInf);
        }
        let mut inside = vec![false; n];
        z.iter().for_each(|&v| inside[v] = true);
        let internal: Vec<usize> = (0..s.r.len()).filter(|&e| free(e) && inside[s.ends[e].0] && inside[s.ends[e].1]).collect();
        let Longest::Dist(pi, _) = longest_paths(n, &s.ends, &internal, &s.r, &[(z[0], 0)])? else {
            return Err(Error::internal("zero-cost component has a positive cycle"));
        };
        let pot = |v: usize| pi[v].expect("component vertices are reachable from its root");
        let tight = |e: usize| {
            free(e) && inside[s.ends[e].0] && inside[s.ends[e].1] && pot(s.ends[e].0).checked_add(s.r[e]) == Some(pot(s.ends[e].1))
        };
        for t in components_within(g, z, tight) {
            if !t.iter().any(|&v| g.is_accepting(v)) {
                continue;
            }
            let top = t.iter().map(|&v| pot(v)).max().expect("components are nonempty");
            let mut bonus: Vec<Option<i128>> = vec![None; n];
            for &v in &t {
                bonus[v] = Some(top - pot(v));
            }
            if let Some(f) = layered.best_frozen(&s, &bonus, &pumpable, &paid)? {
                raise(&mut best, f)?;
            } else {
                return Ok(ExtReal::PosInf);
            }
        }
    }
    Ok(match best {
        None => ExtReal::NegInf,
        Some(f) => ExtReal::Finite(Q::new(f.num.into(), f.den.into())),
    })
}

/// The product graph doubled by a flag recording whether positive cost has
/// been paid; vertex `2v + flag`.
struct Layered {
    ends: Vec<(usize, usize)>,
    orig: Vec<usize>,
    out: Vec<Vec<usize>>,
    sources: Vec<usize>,
}

impl Layered {
    fn new(g: &ProductGraph<RatioWeight>, s: &Scaled) -> Layered {
        let mut ends = Vec::new();
        let mut orig = Vec::new();
        for (e, &(u, v)) in s.ends.iter().enumerate() {
            ends.push((2 * u, 2 * v + usize::from(s.c[e] > 0)));
            orig.push(e);
            ends.push((2 * u + 1, 2 * v + 1));
            orig.push(e);
        }
        let mut out = vec![Vec::new(); 2 * g.num_vertices()];
        for (i, &(u, _)) in ends.iter().enumerate() {
            out[u].push(i);
        }
        Layered { ends, orig, out, sources: g.initial().iter().map(|&v| 2 * v).collect() }
    }

    fn forward(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        let mut stack = self.sources.clone();
        stack.iter().for_each(|&v| seen[v] = true);
        while let Some(v) = stack.pop() {
            for &e in &self.out[v] {
                let u = self.ends[e].1;
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }

    fn backward(&self, targets: &[bool]) -> Vec<bool> {
        let mut pred = vec![Vec::new(); self.out.len()];
        for &(u, v) in &self.ends {
            pred[v].push(u);
        }
        let mut seen = targets.to_vec();
        let mut stack: Vec<usize> = (0..seen.len()).filter(|&v| seen[v]).collect();
        while let Some(v) = stack.pop() {
            for &p in &pred[v] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Supremum of `(R(P) + bonus(end)) / C(P)` over walks `P` from an
    /// initial vertex that pay positive cost and end where `bonus` is set.
    /// `None` means unbounded.
    fn best_frozen(&self, s: &Scaled, bonus: &[Option<i128>], pumpable: &[bool], paid: &[bool]) -> Result<Option<Frac>> {
        let m = self.out.len();
        let targets: Vec<bool> = (0..m).map(|x| x % 2 == 1 && bonus[x / 2].is_some()).collect();
        let co = self.backward(&targets);
        let on_route: Vec<bool> = (0..m).map(|x| paid[x] && co[x]).collect();
        if (0..m).any(|x| on_route[x] && pumpable[x / 2]) {
            return Ok(None);
        }
        let edges: Vec<usize> = (0..self.ends.len()).filter(|&e| on_route[self.ends[e].0] && on_route[self.ends[e].1]).collect();
        let lr: Vec<i128> = self.orig.iter().map(|&e| s.r[e]).collect();
        let lc: Vec<i128> = self.orig.iter().map(|&e| s.c[e]).collect();
        let scaled = Scaled { r: lr, c: lc, ends: self.ends.clone() };
        let sources: Vec<(usize, i128)> = self.sources.iter().filter(|&&v| on_route[v]).map(|&v| (v, 0)).collect();
        let value = |path: &[usize], end: usize| -> Result<Frac> {
            let (r, c) = sums(&scaled, path)?;
            let r = r.checked_add(bonus[end / 2].expect("paths end at targets")).ok_or_else(overflow)?;
            Ok(Frac::new(r, c))
        };
        let first = self.any_path(&edges, &targets, &on_route).ok_or_else(|| Error::internal("no frozen-cost route"))?;
        let mut lam = value(&first.0, first.1)?;
        loop {
            let w = lin(&scaled, &edges, lam)?;
            match longest_paths(m, &self.ends, &edges, &w, &sources)? {
                Longest::PositiveCycle(cyc) => {
                    let (r, c) = sums(&scaled, &cyc)?;
                    if c <= 0 {
                        return Err(Error::internal("positive parametric cycle without cost"));
                    }
                    let next = Frac::new(r, c);
                    if !next.gt(lam)? {
                        return Err(Error::internal("ratio iteration did not improve"));
                    }
                    lam = next;
                }
                Longest::Dist(dist, pred) => {
                    let mut arg = None;
                    let mut top = 0i128;
                    for x in (0..m).filter(|&x| targets[x]) {
                        let Some(d) = dist[x] else { continue };
                        let b = bonus[x / 2].unwrap().checked_mul(lam.den).ok_or_else(overflow)?;
                        let total = d.checked_add(b).ok_or_else(overflow)?;
                        if total > top {
                            top = total;
                            arg = Some(x);
                        }
                    }
                    let Some(end) = arg else { return Ok(Some(lam)) };
                    let mut path = Vec::new();
                    let mut at = end;
                    while let Some(e) = pred[at] {
                        path.push(e);
                        at = self.ends[e].0;
                        if path.len() > m {
                            return Err(Error::internal("predecessor walk does not terminate"));
                        }
                    }
                    path.reverse();
                    let next = value(&path, end)?;
                    if !next.gt(lam)? {
                        return Err(Error::internal("ratio iteration did not improve"));
                    }
                    lam = next;
                }
            }
        }
    }

    fn any_path(&self, edges: &[usize], targets: &[bool], on_route: &[bool]) -> Option<(Vec<usize>, usize)> {
        let m = self.out.len();
        let allowed: Vec<bool> = {
            let mut a = vec![false; self.ends.len()];
            edges.iter().for_each(|&e| a[e] = true);
            a
        };
        let mut prev: Vec<Option<usize>> = vec![None; m];
        let mut seen = vec![false; m];
        let mut queue = VecDeque::new();
        for &v in self.sources.iter().filter(|&&v| on_route[v]) {
            seen[v] = true;
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            if targets[v] {
                let mut path = Vec::new();
                let mut at = v;
                while let Some(e) = prev[at] {
                    path.push(e);
                    at = self.ends[e].0;
                }
                path.reverse();
                return Some((path, v));
            }
            for &e in &self.out[v] {
                let u = self.ends[e].1;
                if allowed[e] && !seen[u] {
                    seen[u] = true;
                    prev[u] = Some(e);
                    queue.push_back(u);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{Ratio, ValuationStructure};

    fn rw(r: i64, c: i64) -> RatioWeight {
        RatioWeight::ints(r, c)
    }

    fn solve(n: usize, init: Vec<usize>, acc: Vec<usize>, edges: Vec<(usize, usize, RatioWeight)>) -> ExtReal {
        let g = ProductGraph::new(n, init, acc, edges).unwrap();
        solve_ratio(&g, &SolverOptions::default()).unwrap()
    }

    #[test]
    fn two_loops() {
        assert_eq!(solve(1, vec![0], vec![0], vec![(0, 0, rw(1, 1)), (0, 0, rw(3, 1))]), ExtReal::int(3));
    }

    #[test]
    fn best_cycle_must_share_a_component_with_acceptance() {
        // 0 loops with ratio 5 but is not accepting and cannot be revisited
        // after moving to the accepting loop at 1.
        let e = vec![(0, 0, rw(5, 1)), (0, 1, rw(0, 1)), (1, 1, rw(1, 2))];
        assert_eq!(solve(2, vec![0], vec![1], e), ExtReal::frac(1, 2));
    }

    #[test]
    fn cycles_mix_inside_a_component() {
        // Accepting vertex 1 on a ratio-0 loop, ratio-4 loop at 0 in the same component.
        let e = vec![(0, 0, rw(4, 1)), (0, 1, rw(0, 1)), (1, 0, rw(0, 1))];
        assert_eq!(solve(2, vec![0], vec![1], e), ExtReal::int(4));
    }

    #[test]
    fn free_positive_loop_is_unbounded() {
        let e = vec![(0, 0, rw(0, 1)), (0, 0, rw(1, 0))];
        assert_eq!(solve(1, vec![0], vec![0], e), ExtReal::PosInf);
    }

    #[test]
    fn frozen_cost_uses_best_level() {
        // Pay (7,2) once, then loop 1 -> 2 -> 1 with rewards +3, -3 at no cost.
        let e = vec![(0, 1, rw(7, 2)), (1, 2, rw(3, 0)), (2, 1, rw(-3, 0))];
        let v = solve(3, vec![0], vec![1], e.clone());
        assert_eq!(v, ExtReal::int(5));
        let lasso = Ratio.val_lasso(&[rw(7, 2)], &[rw(3, 0), rw(-3, 0)]).unwrap();
        assert_eq!(v, lasso);
    }

    #[test]
    fn nothing_paid_is_minus_infinity() {
        let e = vec![(0, 0, rw(3, 0))];
        assert_eq!(solve(1, vec![0], vec![0], e), ExtReal::NegInf);
        assert_eq!(solve(1, vec![0], vec![], vec![(0, 0, rw(3, 1))]), ExtReal::NegInf);
    }

    #[test]
    fn frozen_route_prefers_cheap_prefix() {
        // Two ways into a zero-cost accepting loop: (4,2) or (3,1).
        let e = vec![(0, 1, rw(4, 2)), (0, 1, rw(3, 1)), (1, 1, rw(0, 0))];
        assert_eq!(solve(2, vec![0], vec![1], e), ExtReal::int(3));
    }

    #[test]
    fn frozen_route_can_pump_a_prefix_cycle() {
        // Before the frozen loop, a (6,1) cycle can be repeated: sup is 6.
        let e = vec![(0, 0, rw(6, 1)), (0, 1, rw(0, 1)), (1, 1, rw(0, 0))];
        assert_eq!(solve(2, vec![0], vec![1], e), ExtReal::int(6));
    }
}
