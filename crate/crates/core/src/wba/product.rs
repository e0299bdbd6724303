//! The product of a weighted automaton with a lasso word, and graph helpers
//! used by the solvers.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{nontrivial_components, tarjan_scc};

/// One edge of a [`ProductGraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductEdge<W> {
    pub from: usize,
    pub to: usize,
    /// Index of the automaton transition taken.
    pub transition: usize,
    pub weight: W,
}

/// Vertices are `(state, position)` pairs reachable from the initial ones;
/// infinite paths from an initial vertex are exactly the runs on the word.
#[derive(Clone, Debug)]
pub struct ProductGraph<W> {
    vertices: Vec<(usize, usize)>,
    initial: Vec<usize>,
    accepting: Vec<bool>,
    edges: Vec<ProductEdge<W>>,
    out: Vec<Vec<usize>>,
}

impl<W> ProductGraph<W> {
    /// A graph given directly; vertex `v` is labelled `(v, 0)` and edge `i`
    /// records transition `i`.
    pub fn new(num_vertices: usize, initial: Vec<usize>, accepting: Vec<usize>, edges: Vec<(usize, usize, W)>) -> Result<Self> {
        let mut acc = vec![false; num_vertices];
        for v in accepting {
            *acc.get_mut(v).ok_or_else(|| Error::input(format!("accepting vertex {v} out of range")))? = true;
        }
        let edges = edges.into_iter().enumerate().map(|(i, (from, to, weight))| ProductEdge { from, to, transition: i, weight }).collect();
        Self::from_parts((0..num_vertices).map(|v| (v, 0)).collect(), initial, acc, edges)
    }

    pub(crate) fn from_parts(vertices: Vec<(usize, usize)>, mut initial: Vec<usize>, accepting: Vec<bool>, edges: Vec<ProductEdge<W>>) -> Result<Self> {
        let n = vertices.len();
        if accepting.len() != n {
            return Err(Error::internal("accepting flags do not match the vertices"));
        }
        initial.sort_unstable();
        initial.dedup();
        if initial.iter().any(|&v| v >= n) || edges.iter().any(|e| e.from >= n || e.to >= n) {
            return Err(Error::input("product graph refers to a vertex out of range"));
        }
        let mut out = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out[e.from].push(i);
        }
        Ok(ProductGraph { vertices, initial, accepting, edges, out })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// `(state, position)` of a vertex.
    pub fn vertex(&self, v: usize) -> (usize, usize) {
        self.vertices[v]
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn is_accepting(&self, v: usize) -> bool {
        self.accepting[v]
    }

    pub fn edges(&self) -> &[ProductEdge<W>] {
        &self.edges
    }

    /// Indices of the edges leaving `v`.
    pub fn out(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Vertices reachable from the initial ones.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_vertices()];
        let mut stack = self.initial.clone();
        for &v in &stack {
            seen[v] = true;
        }
        while let Some(v) = stack.pop() {
            for &e in &self.out[v] {
                let u = self.edges[e].to;
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// Vertices from which some vertex in `targets` is reachable.
    pub(crate) fn coreachable(&self, targets: &[bool]) -> Vec<bool> {
        let mut pred = vec![Vec::new(); self.num_vertices()];
        for e in &self.edges {
            pred[e.to].push(e.from);
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

    /// Components of the reachable part that contain a cycle and an
    /// accepting vertex, as vertex lists.
    pub fn good_components(&self) -> Vec<Vec<usize>> {
        let reach = self.reachable();
        let all: Vec<usize> = (0..self.num_vertices()).collect();
        components_within(self, &all, |e| reach[self.edges[e].from])
            .into_iter()
            .filter(|c| c.iter().any(|&v| self.accepting[v]))
            .collect()
    }
}

/// Nontrivial strongly connected components of the subgraph of edges (by
/// index) that satisfy `keep`; both ends must lie in `vertices`.
pub(crate) fn components_within<W>(g: &ProductGraph<W>, vertices: &[usize], keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
    let n = g.num_vertices();
    let mut inside = vec![false; n];
    for &v in vertices {
        inside[v] = true;
    }
    let mut succ = vec![Vec::new(); n];
    for (i, e) in g.edges.iter().enumerate() {
        if inside[e.from] && inside[e.to] && keep(i) {
            succ[e.from].push(e.to);
        }
    }
    let comp = tarjan_scc(n, &succ);
    let nontrivial = nontrivial_components(&succ, &comp);
    let mut members = vec![Vec::new(); nontrivial.len()];
    for &v in vertices {
        if nontrivial[comp[v]] {
            members[comp[v]].push(v);
        }
    }
    members.into_iter().filter(|m| !m.is_empty()).collect()
}

/// Shortest (fewest edges) path of edge indices from `from` to `to` using
/// edges accepted by `keep`. A nonempty cycle when `from == to`.
pub(crate) fn bfs_path<W>(g: &ProductGraph<W>, from: usize, to: usize, keep: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let n = g.num_vertices();
    let mut prev: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &e in g.out(from) {
        if keep(e) {
            let u = g.edges[e].to;
            if !seen[u] {
                seen[u] = true;
                prev[u] = Some(e);
                queue.push_back(u);
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = Vec::new();
            let mut at = to;
            loop {
                let e = prev[at].expect("visited vertices have a parent edge");
                path.push(e);
                at = g.edges[e].from;
                if at == from {
                    break;
                }
            }
            path.reverse();
            return Some(path);
        }
        for &e in g.out(v) {
            if keep(e) {
                let u = g.edges[e].to;
                if !seen[u] {
                    seen[u] = true;
                    prev[u] = Some(e);
                    queue.push_back(u);
                }
            }
        }
    }
    None
}

/// Outcome of a longest-path Bellman–Ford run.
pub(crate) enum Longest {
    /// Best path values (`None` = unreachable) and the edge reaching each vertex.
    Dist(Vec<Option<i128>>, Vec<Option<usize>>),
    /// Edge indices of a cycle with positive total weight.
    PositiveCycle(Vec<usize>),
}

/// Longest paths over the edges in `edges` (indices into `ends`) from the
/// given sources, or a positive cycle reachable from them. `ends[e]` is
/// `(from, to)` and `w[e]` the weight.
pub(crate) fn longest_paths(n: usize, ends: &[(usize, usize)], edges: &[usize], w: &[i128], sources: &[(usize, i128)]) -> Result<Longest> {
    let mut dist: Vec<Option<i128>> = vec![None; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    for &(s, d) in sources {
        if dist[s].is_none_or(|x| d > x) {
            dist[s] = Some(d);
        }
    }
    let mut last_changed = None;
    for _round in 0..=n {
        last_changed = None;
        for &e in edges {
            let (u, v) = ends[e];
            let Some(du) = dist[u] else { continue };
            let cand = du.checked_add(w[e]).ok_or_else(|| Error::Resource("weights too large for exact path search".into()))?;
            if dist[v].is_none_or(|dv| cand > dv) {
                dist[v] = Some(cand);
                pred[v] = Some(e);
                last_changed = Some(v);
            }
        }
        if last_changed.is_none() {
            return Ok(Longest::Dist(dist, pred));
        }
    }
    // Still improving after n rounds: walking back n steps lands on a cycle.
    let mut v = last_changed.expect("changed in the last round");
    for _ in 0..n {
        v = ends[pred[v].expect("improved vertices have a predecessor")].0;
    }
    let start = v;
    let mut cycle = Vec::new();
    loop {
        let e = pred[v].expect("cycle vertices have a predecessor");
        cycle.push(e);
        v = ends[e].0;
        if v == start {
            break;
        }
    }
    cycle.reverse();
    Ok(Longest::PositiveCycle(cycle))
}

/// Whether the edges in `edges` contain a cycle of positive weight.
pub(crate) fn has_positive_cycle(n: usize, ends: &[(usize, usize)], edges: &[usize], w: &[i128]) -> Result<Option<Vec<usize>>> {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&e| [ends[e].0, ends[e].1]).collect();
    verts.sort_unstable();
    verts.dedup();
    let sources: Vec<(usize, i128)> = verts.into_iter().map(|v| (v, 0)).collect();
    Ok(match longest_paths(n, ends, edges, w, &sources)? {
        Longest::PositiveCycle(c) => Some(c),
        Longest::Dist(..) => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn good_components_need_acceptance_and_reachability() {
        // 0 -> 1 <-> 2 (2 accepting); 3 <-> 3 unreachable and accepting.
        let g = ProductGraph::new(4, vec![0], vec![2, 3], vec![(0, 1, ()), (1, 2, ()), (2, 1, ()), (3, 3, ())]).unwrap();
        let mut comps = g.good_components();
        comps.iter_mut().for_each(|c| c.sort());
        assert_eq!(comps, vec![vec![1, 2]]);
    }

    #[test]
    fn positive_cycles() {
        let ends = [(0, 1), (1, 0), (1, 2)];
        assert!(has_positive_cycle(3, &ends, &[0, 1, 2], &[1, -1, 5]).unwrap().is_none());
        let c = has_positive_cycle(3, &ends, &[0, 1, 2], &[2, -1, 5]).unwrap().unwrap();
        let mut c = c.clone();
        c.sort();
        assert_eq!(c, vec![0, 1]);
    }

    #[test]
    fn bfs_cycles() {
        let g = ProductGraph::new(3, vec![0], vec![], vec![(0, 1, ()), (1, 2, ()), (2, 0, ()), (1, 0, ())]).unwrap();
        assert_eq!(bfs_path(&g, 0, 0, |_| true).unwrap(), vec![0, 3]);
        assert_eq!(bfs_path(&g, 0, 2, |_| true).unwrap(), vec![0, 1]);
        assert!(bfs_path(&g, 0, 2, |e| e != 1).is_none());
    }
}
