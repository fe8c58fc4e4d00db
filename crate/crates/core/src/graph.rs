//! Colored crystal graphs stored as dense adjacency tables.

use std::collections::{HashMap, VecDeque};
use std::fmt::{Display, Write};
use std::hash::Hash;

/// A crystal graph with colors `0..=n`. `f[v][i]` is the target of the
/// `i`-arrow out of `v`, `e[v][i]` the source of the `i`-arrow into `v`.
#[derive(Clone, Debug)]
pub struct CrystalGraph<V> {
    pub n: usize,
    pub vertices: Vec<V>,
    pub index: HashMap<V, usize>,
    pub f: Vec<Vec<Option<usize>>>,
    pub e: Vec<Vec<Option<usize>>>,
}

impl<V: Clone + Eq + Hash> CrystalGraph<V> {
    pub fn new(n: usize) -> Self {
        CrystalGraph {
            n,
            vertices: Vec::new(),
            index: HashMap::new(),
            f: Vec::new(),
            e: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Insert `v` if absent; returns its id and whether it was new.
    pub fn intern(&mut self, v: V) -> (usize, bool) {
        if let Some(&id) = self.index.get(&v) {
            return (id, false);
        }
        let id = self.vertices.len();
        self.index.insert(v.clone(), id);
        self.vertices.push(v);
        self.f.push(vec![None; self.n + 1]);
        self.e.push(vec![None; self.n + 1]);
        (id, true)
    }

    pub fn id(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn add_edge(&mut self, i: usize, from: usize, to: usize) {
        debug_assert!(self.f[from][i].is_none() || self.f[from][i] == Some(to));
        self.f[from][i] = Some(to);
        self.e[to][i] = Some(from);
    }

    /// `ε_i`: length of the `ẽ_i` string.
    pub fn epsilon(&self, v: usize, i: usize) -> usize {
        let (mut c, mut cur) = (0, v);
        while let Some(w) = self.e[cur][i] {
            c += 1;
            cur = w;
        }
        c
    }

    pub fn phi(&self, v: usize, i: usize) -> usize {
        let (mut c, mut cur) = (0, v);
        while let Some(w) = self.f[cur][i] {
            c += 1;
            cur = w;
        }
        c
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.f.iter().enumerate().flat_map(|(v, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(i, t)| t.map(|t| (v, i, t)))
        })
    }

    /// Connected components under the given colors (edges taken undirected).
    /// Returns a component id per vertex, numbered in order of first vertex.
    pub fn components(&self, colors: &[usize]) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.len()];
        let mut next = 0;
        for start in 0..self.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &i in colors {
                    for w in [self.f[v][i], self.e[v][i]].into_iter().flatten() {
                        if comp[w] == usize::MAX {
                            comp[w] = next;
                            queue.push_back(w);
                        }
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// BFS over the given colors (using both `ẽ` and `f̃`) from `root`.
    /// Returns for each reached vertex its parent step `(prev, color, raised)`
    /// where `raised` means the step applied `ẽ`.
    pub fn bfs_tree(&self, root: usize, colors: &[usize]) -> Vec<Option<(usize, usize, bool)>> {
        let mut parent = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &i in colors {
                for (w, raised) in [(self.f[v][i], false), (self.e[v][i], true)] {
                    if let Some(w) = w {
                        if !seen[w] {
                            seen[w] = true;
                            parent[w] = Some((v, i, raised));
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        parent
    }

    /// Path of operators from `root` to `v` in a tree from [`Self::bfs_tree`].
    pub fn path_from(
        tree: &[Option<(usize, usize, bool)>],
        root: usize,
        v: usize,
    ) -> Option<Vec<(usize, bool)>> {
        let mut steps = Vec::new();
        let mut cur = v;
        while cur != root {
            let (p, i, raised) = tree[cur]?;
            steps.push((i, raised));
            cur = p;
        }
        steps.reverse();
        Some(steps)
    }

    /// Follow an operator path; `None` if some step is undefined.
    pub fn replay(&self, start: usize, path: &[(usize, bool)]) -> Option<usize> {
        path.iter().try_fold(start, |v, &(i, raised)| {
            if raised {
                self.e[v][i]
            } else {
                self.f[v][i]
            }
        })
    }
}

impl<V: Clone + Eq + Hash + Display> CrystalGraph<V> {
    /// Graphviz DOT with `label=<color>` on each edge.
    pub fn to_dot(&self, name: &str, colors: &[usize]) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{name}\" {{").unwrap();
        for (id, v) in self.vertices.iter().enumerate() {
            writeln!(out, "  v{id} [label=\"{v}\"];").unwrap();
        }
        for (v, i, w) in self.edges() {
            if colors.contains(&i) {
                writeln!(out, "  v{v} -> v{w} [label={i}];").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}
