//! Graph plumbing shared by the automata and the solvers.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

/// Strongly connected components, numbered in reverse topological order
/// (sinks first). Iterative Tarjan, so deep graphs do not overflow the stack.
pub(crate) fn tarjan_scc(n: usize, succ: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(top) = call.last_mut() {
            let v = top.0;
            if top.1 < succ[v].len() {
                let w = succ[v][top.1];
                top.1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

/// Whether each component contains an edge (so a cycle lives in it).
pub(crate) fn nontrivial_components(succ: &[Vec<usize>], comp: &[usize]) -> Vec<bool> {
    let count = comp.iter().copied().max().map_or(0, |m| m + 1);
    let mut nontrivial = vec![false; count];
    for (v, ws) in succ.iter().enumerate() {
        for &w in ws {
            if comp[v] == comp[w] {
                nontrivial[comp[v]] = true;
            }
        }
    }
    nontrivial
}

/// An explicit graph with labelled edges, built by exploring from roots.
pub(crate) struct Explored<V, L> {
    pub nodes: Vec<V>,
    pub edges: Vec<Vec<(L, usize)>>,
    pub roots: Vec<usize>,
    /// BFS tree: the edge (source, edge index) that first reached each node.
    pub parent: Vec<Option<(usize, usize)>>,
}

impl<V: Clone + Eq + Hash, L: Clone> Explored<V, L> {
    /// Explores everything reachable from `roots`, stopping with `None` when
    /// more than `limit` nodes appear.
    pub fn explore(roots: impl IntoIterator<Item = V>, limit: usize, mut succ: impl FnMut(&V) -> Vec<(L, V)>) -> Option<Self> {
        let mut ids: HashMap<V, usize> = HashMap::new();
        let mut nodes = Vec::new();
        let mut parent = Vec::new();
        let mut root_ids = Vec::new();
        let mut queue = VecDeque::new();
        for r in roots {
            if !ids.contains_key(&r) {
                ids.insert(r.clone(), nodes.len());
                root_ids.push(nodes.len());
                queue.push_back(nodes.len());
                nodes.push(r);
                parent.push(None);
            }
        }
        let mut edges: Vec<Vec<(L, usize)>> = Vec::new();
        while let Some(v) = queue.pop_front() {
            let mut out = Vec::new();
            for (label, w) in succ(&nodes[v]) {
                let id = match ids.get(&w) {
                    Some(&id) => id,
                    None => {
                        if nodes.len() >= limit {
                            return None;
                        }
                        let id = nodes.len();
                        ids.insert(w.clone(), id);
                        nodes.push(w);
                        parent.push(Some((v, out.len())));
                        queue.push_back(id);
                        id
                    }
                };
                out.push((label, id));
            }
            if edges.len() <= v {
                edges.resize_with(v + 1, Vec::new);
            }
            edges[v] = out;
        }
        edges.resize_with(nodes.len(), Vec::new);
        Some(Explored { nodes, edges, roots: root_ids, parent })
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|es| es.iter().map(|(_, w)| *w).collect()).collect()
    }

    /// Labels along the BFS tree path from a root to `v`.
    pub fn path_to(&self, mut v: usize) -> Vec<L> {
        let mut labels = Vec::new();
        while let Some((u, k)) = self.parent[v] {
            labels.push(self.edges[u][k].0.clone());
            v = u;
        }
        labels.reverse();
        labels
    }

    /// Shortest nonempty cycle from `v` back to `v` using only nodes with
    /// `allowed`, as edge labels.
    pub fn cycle_through(&self, v: usize, allowed: impl Fn(usize) -> bool) -> Option<Vec<L>> {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.nodes.len()];
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::new();
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for (k, (_, w)) in self.edges[u].iter().enumerate() {
                let w = *w;
                if !allowed(w) {
                    continue;
                }
                if w == v {
                    let mut labels = vec![self.edges[u][k].0.clone()];
                    let mut x = u;
                    while x != v {
                        let (p, pk) = prev[x].unwrap();
                        labels.push(self.edges[p][pk].0.clone());
                        x = p;
                    }
                    labels.reverse();
                    return Some(labels);
                }
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((u, k));
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// A lasso `(path, cycle)` whose cycle passes through a node satisfying
    /// `accepting`, if any.
    pub fn accepting_lasso(&self, accepting: impl Fn(&V) -> bool) -> Option<(Vec<L>, Vec<L>)> {
        let succ = self.successors();
        let comp = tarjan_scc(self.nodes.len(), &succ);
        let nontrivial = nontrivial_components(&succ, &comp);
        let v = (0..self.nodes.len()).find(|&v| nontrivial[comp[v]] && accepting(&self.nodes[v]))?;
        let cycle = self.cycle_through(v, |w| comp[w] == comp[v])?;
        Some((self.path_to(v), cycle))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scc_numbering() {
        // 0 -> 1 -> 2 -> 1, 2 -> 3
        let succ = vec![vec![1], vec![2], vec![1, 3], vec![]];
        let comp = tarjan_scc(4, &succ);
        assert_eq!(comp[1], comp[2]);
        assert_ne!(comp[0], comp[1]);
        assert!(comp[3] < comp[1] && comp[1] < comp[0]);
        let nt = nontrivial_components(&succ, &comp);
        assert!(nt[comp[1]] && !nt[comp[0]] && !nt[comp[3]]);
    }

    #[test]
    fn lasso_search() {
        let g = Explored::explore([0u32], 100, |&v| match v {
            0 => vec![('a', 1)],
            1 => vec![('b', 2)],
            2 => vec![('c', 1)],
            _ => vec![],
        })
        .unwrap();
        let (p, c) = g.accepting_lasso(|&v| v == 2).unwrap();
        assert_eq!(p, vec!['a', 'b']);
        assert_eq!(c, vec!['c', 'b']);
        assert!(g.accepting_lasso(|&v| v == 0).is_none());
    }
}
