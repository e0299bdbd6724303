//! Deterministic automata for lasso encodings.
//!
//! An ω-regular language `L` is represented by the minimal DFA of
//! `L$ = { u$v : u·v^ω ∈ L, v nonempty }`. Every operation below keeps that
//! invariant, so complementation is a plain DFA complement relative to the
//! well-formed words `Σ*$Σ+`. Projection needs one subset-style construction:
//! before `$` it tracks a set of states, after `$` the set `S0` reached on `u`
//! together with the relation that `v` induces on states.
//!
//! Letters are pairs of a base letter and a bit vector (one bit per variable
//! track), numbered `base << tracks | bits`. Letters are grouped into classes
//! that behave identically in every state, which keeps wide alphabets cheap.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::error::{Error, Result};

/// A minimal DFA over `letters ∪ {$}`; state 0 is initial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Ldfa {
    pub base: usize,
    pub tracks: usize,
    /// Letter to class.
    pub class_of: Vec<u32>,
    pub classes: usize,
    /// Row-major `states × (classes + 1)`; the last column reads `$`.
    pub delta: Vec<u32>,
    pub accept: Vec<bool>,
}

/// Limit on the states of any intermediate automaton.
pub(crate) const STATE_LIMIT: usize = 400_000;

thread_local! {
    static CAP: std::cell::Cell<usize> = const { std::cell::Cell::new(STATE_LIMIT) };
}

/// Current cap on states of intermediate automata for this thread.
pub(crate) fn state_cap() -> usize {
    CAP.with(|c| c.get())
}

/// Runs `f` with the cap set to `cap`, restoring the old one afterwards.
pub(crate) fn with_state_cap<T>(cap: usize, f: impl FnOnce() -> T) -> T {
    struct Restore(usize);
    impl Drop for Restore {
        fn drop(&mut self) {
            CAP.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(CAP.with(|c| c.replace(cap)));
    f()
}

impl Ldfa {
    pub fn n(&self) -> usize {
        self.accept.len()
    }

    fn stride(&self) -> usize {
        self.classes + 1
    }

    pub fn step(&self, s: u32, class: usize) -> u32 {
        self.delta[s as usize * self.stride() + class]
    }

    pub fn dollar(&self, s: u32) -> u32 {
        self.step(s, self.classes)
    }

    #[cfg(test)]
    pub fn letter(&self, s: u32, letter: usize) -> u32 {
        self.step(s, self.class_of[letter] as usize)
    }

    /// Membership of `u$v`.
    #[cfg(test)]
    pub fn accepts(&self, u: &[usize], v: &[usize]) -> bool {
        let mut s = 0;
        for &l in u {
            s = self.letter(s, l);
        }
        s = self.dollar(s);
        for &l in v {
            s = self.letter(s, l);
        }
        self.accept[s as usize]
    }

    /// Builds the reachable part of a DFA given by a successor function
    /// (`None` reads `$`), then minimizes it.
    pub fn explore<K: Clone + Eq + Hash>(
        base: usize,
        tracks: usize,
        class_of: Vec<u32>,
        classes: usize,
        root: K,
        mut succ: impl FnMut(&K, Option<usize>) -> K,
        accept: impl Fn(&K) -> bool,
    ) -> Result<Ldfa> {
        let stride = classes + 1;
        let mut ids: HashMap<K, u32> = HashMap::new();
        let mut keys = vec![root.clone()];
        ids.insert(root, 0);
        let mut delta: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < keys.len() {
            let k = keys[i].clone();
            for c in 0..stride {
                let next = succ(&k, if c < classes { Some(c) } else { None });
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        if keys.len() >= state_cap() {
                            return Err(Error::Resource(format!("intermediate automaton exceeds {} states", state_cap())));
                        }
                        let id = keys.len() as u32;
                        ids.insert(next.clone(), id);
                        keys.push(next);
                        id
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accept = keys.iter().map(&accept).collect();
        Ok(Ldfa { base, tracks, class_of, classes, delta, accept }.minimize())
    }

    /// Moore partition refinement, canonical BFS numbering, and merging of
    /// letter classes with identical columns.
    pub fn minimize(&self) -> Ldfa {
        let n = self.n();
        let stride = self.stride();
        let mut block: Vec<u32> = self.accept.iter().map(|&a| a as u32).collect();
        let mut count = {
            let mut seen = [false; 2];
            for &b in &block {
                seen[b as usize] = true;
            }
            seen.iter().filter(|&&x| x).count()
        };
        let mut sig: Vec<u32> = vec![0; stride + 1];
        loop {
            let mut table: HashMap<Vec<u32>, u32> = HashMap::with_capacity(n);
            let mut next = vec![0u32; n];
            for s in 0..n {
                sig[0] = block[s];
                for c in 0..stride {
                    sig[c + 1] = block[self.delta[s * stride + c] as usize];
                }
                let len = table.len() as u32;
                next[s] = *table.entry(sig.clone()).or_insert(len);
            }
            let new_count = table.len();
            block = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        // Canonical numbering by BFS from the initial block, scanning classes
        // in order.
        let mut order = vec![u32::MAX; count];
        let mut rep = Vec::with_capacity(count);
        order[block[0] as usize] = 0;
        rep.push(0usize);
        let mut i = 0;
        while i < rep.len() {
            let s = rep[i];
            for c in 0..stride {
                let t = self.delta[s * stride + c] as usize;
                let b = block[t] as usize;
                if order[b] == u32::MAX {
                    order[b] = rep.len() as u32;
                    rep.push(t);
                }
            }
            i += 1;
        }
        let m = rep.len();
        // Merge classes whose columns coincide; number them by first letter.
        let mut col_id: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut class_map = vec![u32::MAX; self.classes];
        let mut class_rep = Vec::new();
        let mut class_of = Vec::with_capacity(self.class_of.len());
        for &c in &self.class_of {
            let c = c as usize;
            if class_map[c] == u32::MAX {
                let col: Vec<u32> = rep.iter().map(|&s| order[block[self.delta[s * stride + c] as usize] as usize]).collect();
                let len = col_id.len() as u32;
                let id = *col_id.entry(col).or_insert(len);
                if id == len {
                    class_rep.push(c);
                }
                class_map[c] = id;
            }
            class_of.push(class_map[c]);
        }
        let classes = class_rep.len();
        let mut delta = Vec::with_capacity(m * (classes + 1));
        for &s in &rep {
            for &c in &class_rep {
                delta.push(order[block[self.delta[s * stride + c] as usize] as usize]);
            }
            delta.push(order[block[self.delta[s * stride + self.classes] as usize] as usize]);
        }
        let accept = rep.iter().map(|&s| self.accept[s]).collect();
        Ldfa { base: self.base, tracks: self.tracks, class_of, classes, delta, accept }
    }

    /// Moves track `j` of `self` to track `map[j]` of a space with
    /// `new_tracks` tracks; the other new tracks are unconstrained.
    pub fn retrack(&self, map: &[usize], new_tracks: usize) -> Ldfa {
        assert_eq!(map.len(), self.tracks);
        if new_tracks == self.tracks && map.iter().enumerate().all(|(i, &j)| i == j) {
            return self.clone();
        }
        let letters = self.base << new_tracks;
        let mut class_of = Vec::with_capacity(letters);
        for l in 0..letters {
            let b = l >> new_tracks;
            let bits = l & ((1 << new_tracks) - 1);
            let mut old = 0;
            for (j, &nj) in map.iter().enumerate() {
                old |= (bits >> nj & 1) << j;
            }
            class_of.push(self.class_of[b << self.tracks | old]);
        }
        Ldfa { base: self.base, tracks: new_tracks, class_of, classes: self.classes, delta: self.delta.clone(), accept: self.accept.clone() }
    }

    /// Product automaton over the same letter space with acceptance `op`.
    pub fn product(&self, other: &Ldfa, op: impl Fn(bool, bool) -> bool) -> Result<Ldfa> {
        assert_eq!((self.base, self.tracks), (other.base, other.tracks));
        let mut pairs: HashMap<(u32, u32), u32> = HashMap::new();
        let mut pair_list = Vec::new();
        let mut class_of = Vec::with_capacity(self.class_of.len());
        for l in 0..self.class_of.len() {
            let key = (self.class_of[l], other.class_of[l]);
            let len = pairs.len() as u32;
            let id = *pairs.entry(key).or_insert(len);
            if id == len {
                pair_list.push(key);
            }
            class_of.push(id);
        }
        let classes = pair_list.len();
        Ldfa::explore(
            self.base,
            self.tracks,
            class_of,
            classes,
            (0u32, 0u32),
            |&(a, b), c| match c {
                Some(c) => (self.step(a, pair_list[c].0 as usize), other.step(b, pair_list[c].1 as usize)),
                None => (self.dollar(a), other.dollar(b)),
            },
            |&(a, b)| op(self.accept[a as usize], other.accept[b as usize]),
        )
    }

    /// The well-formed words `Σ*$Σ+` over this letter space.
    #[cfg(test)]
    pub fn well_formed(base: usize, tracks: usize) -> Ldfa {
        // 0: before $, 1: just after $, 2: after $ and a letter, 3: dead.
        let delta = vec![0, 1, 2, 3, 2, 3, 3, 3];
        Ldfa { base, tracks, class_of: vec![0; base << tracks], classes: 1, delta, accept: vec![false, false, true, false] }
    }

    /// Words in `Σ*$Σ+` that are not accepted.
    #[cfg(test)]
    pub fn complement(&self) -> Result<Ldfa> {
        self.product(&Ldfa::well_formed(self.base, self.tracks), |a, wf| wf && !a)
    }

    /// The encodings in which every track in `mask` holds exactly one 1.
    pub fn singletons(base: usize, tracks: usize, mask: usize) -> Result<Ldfa> {
        let letters = base << tracks;
        let class_of: Vec<u32> = (0..letters).map(|l| (l & mask) as u32).collect();
        let classes = 1 << tracks;
        // (phase, seen): phase 0 before $, 1 after $, 2 after $ and a letter, 3 dead.
        Ldfa::explore(
            base,
            tracks,
            class_of,
            classes,
            (0u8, 0usize),
            |&(phase, seen), c| match (phase, c) {
                (3, _) => (3, 0),
                (0, None) => (1, seen),
                (_, None) => (3, 0),
                (0, Some(bits)) => {
                    if seen & bits != 0 {
                        (3, 0)
                    } else {
                        (0, seen | bits)
                    }
                }
                (_, Some(bits)) => {
                    if bits != 0 {
                        (3, 0)
                    } else {
                        (2, seen)
                    }
                }
            },
            |&(phase, seen)| phase == 2 && seen == mask,
        )
    }

    /// `∃` over track `j`: the result lives on the remaining tracks.
    pub fn project(&self, j: usize) -> Result<Ldfa> {
        let nt = self.tracks - 1;
        let letters = self.base << nt;
        let mut pairs: HashMap<(u32, u32), u32> = HashMap::new();
        let mut pair_list = Vec::new();
        let mut class_of = Vec::with_capacity(letters);
        for l in 0..letters {
            let b = l >> nt;
            let bits = l & ((1 << nt) - 1);
            let low = bits & ((1 << j) - 1);
            let high = (bits >> j) << (j + 1);
            let old0 = b << self.tracks | high | low;
            let old1 = old0 | 1 << j;
            let key = (self.class_of[old0], self.class_of[old1]);
            let len = pairs.len() as u32;
            let id = *pairs.entry(key).or_insert(len);
            if id == len {
                pair_list.push(key);
            }
            class_of.push(id);
        }
        let classes = pair_list.len();
        let n = self.n();
        let words = n.div_ceil(64);
        // Successor sets per state and new class.
        let step_set = |s: usize, c: usize| -> (u32, u32) {
            let (c0, c1) = pair_list[c];
            (self.step(s as u32, c0 as usize), self.step(s as u32, c1 as usize))
        };
        let dead = self.dead_states();

        #[derive(Clone, PartialEq, Eq, Hash)]
        enum Node {
            Pre(Vec<u64>),
            Post { s0: Vec<u64>, rel: Vec<u64>, nonempty: bool },
            Sink,
        }
        let get = |set: &[u64], i: usize| set[i / 64] >> (i % 64) & 1 == 1;
        let put = |set: &mut [u64], i: usize| set[i / 64] |= 1 << (i % 64);

        // States that matter after $ for a given S0: everything reachable
        // from S0 before $, and from their $-successors.
        let relevant = |s0: &[u64]| -> Vec<bool> {
            let mut mark = vec![false; n];
            let mut stack: Vec<usize> = (0..n).filter(|&i| get(s0, i)).collect();
            for &i in &stack {
                mark[i] = true;
            }
            while let Some(s) = stack.pop() {
                let mut push = |t: u32| {
                    let t = t as usize;
                    if !mark[t] && !dead[t] {
                        mark[t] = true;
                        stack.push(t);
                    }
                };
                for c in 0..self.classes {
                    push(self.step(s as u32, c));
                }
                push(self.dollar(s as u32));
            }
            mark
        };

        let mut start = vec![0u64; words];
        put(&mut start, 0);
        let accept_post = |s0: &[u64], rel: &[u64]| -> bool {
            // P = S0·R*, then one $ step, then R+.
            let row = |i: usize| &rel[i * words..(i + 1) * words];
            let mut p = s0.to_vec();
            let mut stack: Vec<usize> = (0..n).filter(|&i| get(s0, i)).collect();
            while let Some(i) = stack.pop() {
                for k in 0..n {
                    if get(row(i), k) && !get(&p, k) {
                        put(&mut p, k);
                        stack.push(k);
                    }
                }
            }
            let mut q = vec![0u64; words];
            let mut stack = Vec::new();
            for i in (0..n).filter(|&i| get(&p, i)) {
                let d = self.dollar(i as u32) as usize;
                for k in 0..n {
                    if get(row(d), k) && !get(&q, k) {
                        put(&mut q, k);
                        stack.push(k);
                    }
                }
            }
            while let Some(i) = stack.pop() {
                if self.accept[i] {
                    return true;
                }
                for k in 0..n {
                    if get(row(i), k) && !get(&q, k) {
                        put(&mut q, k);
                        stack.push(k);
                    }
                }
            }
            false
        };

        let mut relevant_cache: HashMap<Vec<u64>, Vec<bool>> = HashMap::new();
        Ldfa::explore(
            self.base,
            nt,
            class_of,
            classes,
            Node::Pre(start),
            |node, c| match (node, c) {
                (Node::Sink, _) => Node::Sink,
                (Node::Pre(set), Some(c)) => {
                    let mut next = vec![0u64; words];
                    for i in (0..n).filter(|&i| get(set, i)) {
                        let (a, b) = step_set(i, c);
                        for t in [a, b] {
                            if !dead[t as usize] {
                                put(&mut next, t as usize);
                            }
                        }
                    }
                    if next.iter().all(|&w| w == 0) {
                        Node::Sink
                    } else {
                        Node::Pre(next)
                    }
                }
                (Node::Pre(set), None) => {
                    let mask = relevant_cache.entry(set.clone()).or_insert_with(|| relevant(set)).clone();
                    let mut rel = vec![0u64; n * words];
                    for i in (0..n).filter(|&i| mask[i]) {
                        put(&mut rel[i * words..(i + 1) * words], i);
                    }
                    Node::Post { s0: set.clone(), rel, nonempty: false }
                }
                (Node::Post { s0, rel, .. }, Some(c)) => {
                    let mut next = vec![0u64; n * words];
                    for i in 0..n {
                        let row = &rel[i * words..(i + 1) * words];
                        if row.iter().all(|&w| w == 0) {
                            continue;
                        }
                        for k in (0..n).filter(|&k| get(row, k)) {
                            let (a, b) = step_set(k, c);
                            for t in [a, b] {
                                if !dead[t as usize] {
                                    put(&mut next[i * words..(i + 1) * words], t as usize);
                                }
                            }
                        }
                    }
                    Node::Post { s0: s0.clone(), rel: next, nonempty: true }
                }
                (Node::Post { .. }, None) => Node::Sink,
            },
            |node| match node {
                Node::Post { s0, rel, nonempty: true } => accept_post(s0, rel),
                _ => false,
            },
        )
    }

    /// States from which no accepting state is reachable.
    pub fn dead_states(&self) -> Vec<bool> {
        let n = self.n();
        let mut pred: Vec<Vec<u32>> = vec![Vec::new(); n];
        for s in 0..n {
            for c in 0..self.stride() {
                pred[self.step(s as u32, c) as usize].push(s as u32);
            }
        }
        let mut live = self.accept.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&s| live[s]).collect();
        while let Some(s) = stack.pop() {
            for &p in &pred[s] {
                if !live[p as usize] {
                    live[p as usize] = true;
                    stack.push(p as usize);
                }
            }
        }
        live.iter().map(|&l| !l).collect()
    }

    /// Nondeterministic Büchi automaton for the ω-language, as
    /// `(states, initial, accepting, transitions over letters)`.
    ///
    /// The language is the union over prefix states `s` and accepting states
    /// `f` of `M_s · N_{s,f}^ω` with `M_s` the words leading to `s` and
    /// `N_{s,f}` the nonempty `v` with `s·v = s`, `s$·v = f`, `f·v = f`. A
    /// block of `N_{s,f}` is read by tracking the three states in parallel.
    pub fn to_nba(&self) -> Result<Nba> {
        let dead = self.dead_states();
        let n = self.n();
        // Prefix states: reachable from 0 without $.
        let mut pre = vec![false; n];
        let mut stack = vec![0usize];
        pre[0] = true;
        while let Some(s) = stack.pop() {
            for c in 0..self.classes {
                let t = self.step(s as u32, c) as usize;
                if !pre[t] && !dead[t] {
                    pre[t] = true;
                    stack.push(t);
                }
            }
        }
        let finals: Vec<u32> = (0..n as u32).filter(|&f| self.accept[f as usize]).collect();

        #[derive(Clone, PartialEq, Eq, Hash)]
        enum Node {
            Pre(u32),
            Block { s: u32, f: u32, x: u32, y: u32, z: u32 },
            Boundary { s: u32, f: u32 },
        }
        let block_moves = |s: u32, f: u32, x: u32, y: u32, z: u32, c: usize, out: &mut Vec<(usize, Node)>| {
            let (x2, y2, z2) = (self.step(x, c), self.step(y, c), self.step(z, c));
            if dead[x2 as usize] || dead[y2 as usize] || dead[z2 as usize] {
                return;
            }
            out.push((c, Node::Block { s, f, x: x2, y: y2, z: z2 }));
            if x2 == s && y2 == f && z2 == f {
                out.push((c, Node::Boundary { s, f }));
            }
        };
        let g = crate::graph::Explored::explore([Node::Pre(0)], state_cap(), |node| {
            let mut out = Vec::new();
            for c in 0..self.classes {
                match *node {
                    Node::Pre(s) => {
                        let t = self.step(s, c);
                        if pre[t as usize] {
                            out.push((c, Node::Pre(t)));
                        }
                        for &f in &finals {
                            block_moves(s, f, s, self.dollar(s), f, c, &mut out);
                        }
                    }
                    Node::Block { s, f, x, y, z } => block_moves(s, f, x, y, z, c, &mut out),
                    Node::Boundary { s, f } => block_moves(s, f, s, self.dollar(s), f, c, &mut out),
                }
            }
            out
        })
        .ok_or_else(|| Error::Resource("Büchi automaton for a compiled formula is too large".into()))?;
        let accepting: Vec<bool> = g.nodes.iter().map(|v| matches!(v, Node::Boundary { .. })).collect();
        let mut letters_of: Vec<Vec<usize>> = vec![Vec::new(); self.classes];
        for (l, &c) in self.class_of.iter().enumerate() {
            letters_of[c as usize].push(l);
        }
        let mut trans = Vec::new();
        for (v, es) in g.edges.iter().enumerate() {
            for &(c, w) in es {
                for &l in &letters_of[c] {
                    trans.push((v, l, w));
                }
            }
        }
        Ok(Nba { states: g.nodes.len(), initial: vec![0], accepting, trans }.trim())
    }
}

/// A bare Büchi automaton over letter indices.
#[derive(Clone, Debug)]
pub(crate) struct Nba {
    pub states: usize,
    pub initial: Vec<usize>,
    pub accepting: Vec<bool>,
    pub trans: Vec<(usize, usize, usize)>,
}

impl Nba {
    /// Keeps states that are reachable and can reach an accepting cycle.
    pub fn trim(&self) -> Nba {
        let n = self.states;
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(p, _, q) in &self.trans {
            succ[p].push(q);
            pred[q].push(p);
        }
        let comp = crate::graph::tarjan_scc(n, &succ);
        let nontrivial = crate::graph::nontrivial_components(&succ, &comp);
        let flood = |start: Vec<usize>, adj: &Vec<Vec<usize>>| {
            let mut mark = vec![false; n];
            let mut q: VecDeque<usize> = start.into_iter().collect();
            for &s in &q {
                mark[s] = true;
            }
            while let Some(s) = q.pop_front() {
                for &t in &adj[s] {
                    if !mark[t] {
                        mark[t] = true;
                        q.push_back(t);
                    }
                }
            }
            mark
        };
        let reach = flood(self.initial.clone(), &succ);
        let live = flood((0..n).filter(|&s| self.accepting[s] && nontrivial[comp[s]]).collect(), &pred);
        let mut ix = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if reach[s] && live[s] {
                ix[s] = count;
                count += 1;
            }
        }
        Nba {
            states: count,
            initial: self.initial.iter().filter(|&&s| ix[s] != usize::MAX).map(|&s| ix[s]).collect(),
            accepting: (0..n).filter(|&s| ix[s] != usize::MAX).map(|s| self.accepting[s]).collect(),
            trans: self.trans.iter().filter(|&&(p, _, q)| ix[p] != usize::MAX && ix[q] != usize::MAX).map(|&(p, l, q)| (ix[p], l, ix[q])).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `x < y` on two tracks over a one-letter base, built by hand.
    fn less() -> Ldfa {
        let class_of = (0..4).map(|l| l as u32).collect();
        Ldfa::explore(
            1,
            2,
            class_of,
            4,
            (0u8, 0u8),
            |&(phase, st), c| match (phase, c) {
                (9, _) => (9, 0),
                (0, None) => (1, st),
                (_, None) => (9, 0),
                (0, Some(bits)) => match (st, bits) {
                    (0, 0) => (0, 0),
                    (0, 1) => (0, 1),
                    (1, 0) => (0, 1),
                    (1, 2) => (0, 2),
                    (2, 0) => (0, 2),
                    _ => (9, 0),
                },
                (_, Some(0)) => (2, st),
                (_, Some(_)) => (9, 0),
            },
            |&(phase, st)| phase == 2 && st == 2,
        )
        .unwrap()
    }

    #[test]
    fn membership_and_complement() {
        let d = less();
        // x at 0, y at 1, then nothing.
        assert!(d.accepts(&[1, 2], &[0]));
        assert!(!d.accepts(&[2, 1], &[0]));
        assert!(!d.accepts(&[1, 2], &[]));
        let c = d.complement().unwrap();
        assert!(c.accepts(&[2, 1], &[0]));
        assert!(!c.accepts(&[1, 2], &[0]));
        assert!(!c.accepts(&[1, 2], &[]));
        assert_eq!(c.complement().unwrap(), d);
    }

    #[test]
    fn projection() {
        let d = less();
        // ∃y. x<y holds whenever x is a singleton.
        let e = d.project(1).unwrap();
        let sing = Ldfa::singletons(1, 1, 1).unwrap();
        assert_eq!(e, sing);
        // ∃x∃y. x<y is everything well formed.
        let all = e.project(0).unwrap();
        assert_eq!(all, Ldfa::well_formed(1, 0).minimize());
    }

    #[test]
    fn singletons_reject_loop_bits() {
        let s = Ldfa::singletons(2, 1, 1).unwrap();
        assert!(s.accepts(&[1], &[0]));
        assert!(!s.accepts(&[0], &[1]));
        assert!(!s.accepts(&[1, 3], &[0]));
    }

    #[test]
    fn nba_of_less() {
        let nba = less().project(1).unwrap().to_nba().unwrap();
        assert!(nba.states > 0);
        assert!(nba.accepting.iter().any(|&a| a));
    }
}
