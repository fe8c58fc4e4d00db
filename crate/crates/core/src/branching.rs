//! Completely reduced forms, the branching component graph, `*_BC` and σ.

use crate::classical::{branch_hw, branch_hw_path, ClassicalKr};
use crate::error::{CrystalError, Result};
use crate::model::{Letter, Tableau};
use crate::plactic::{rectify_two_row, SkewTableau};
use crate::shape_maps::{ell, fill, iota_classical, strip};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write;

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Partition(pub usize, pub usize);

impl Partition {
    pub fn size(&self) -> usize {
        self.0 + self.1
    }

    /// Adjacent in Young's lattice: one box added or removed.
    pub fn adjacent(&self, other: &Partition) -> bool {
        let d0 = self.0 as i64 - other.0 as i64;
        let d1 = self.1 as i64 - other.1 as i64;
        d0.abs() + d1.abs() == 1
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.0, self.1) {
            (0, _) => write!(f, "∅"),
            (a, 0) => write!(f, "({a})"),
            (a, b) => write!(f, "({a},{b})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReducedForm {
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    pub t1: usize,
    pub t2: usize,
    pub skew: SkewTableau,
    /// Rectification of `skew`: a straight two-row tableau.
    pub reduced: SkewTableau,
    pub shape: Partition,
}

impl ReducedForm {
    /// Rank inside BC(kϖ₂) for a tableau of width `k`.
    pub fn local_rank(&self, k: usize) -> usize {
        k + self.t2 - self.t1
    }
}

/// Completely reduced form of a classical tableau.
pub fn reduced_form(t: &Tableau) -> Result<ReducedForm> {
    t.require_classical()?;
    let st = strip(t);
    let reduced = rectify_two_row(&st.skew)?;
    let shape = Partition(reduced.top.len(), reduced.bottom.len());
    Ok(ReducedForm {
        r1: st.r1,
        r2: st.r2,
        r3: st.r3,
        t1: st.t1,
        t2: st.t2,
        skew: st.skew,
        reduced,
        shape,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BranchingVertex {
    pub shape: Partition,
    /// Global rank `R(v)`, in `0..=2s`.
    pub rank: usize,
    pub component: usize,
    /// Vertex id (in the classical crystal) of the U_q(D_{n-1}) highest weight tableau.
    pub hw: usize,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct BranchingGraph {
    pub s: usize,
    pub vertices: Vec<BranchingVertex>,
    /// `(from, to)` whenever some `b` in `from` has `f̃₁(b)` in `to`.
    pub edges: BTreeSet<(usize, usize)>,
    /// Branching vertex of each classical vertex.
    pub of: Vec<usize>,
    lookup: HashMap<(usize, Partition, usize), usize>,
}

impl BranchingGraph {
    pub fn build(c: &ClassicalKr) -> Result<BranchingGraph> {
        let s = c.s;
        let comp = c.graph.components(&(2..=c.n).collect::<Vec<_>>());
        let count = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut vertices: Vec<Option<BranchingVertex>> = vec![None; count];
        let mut sizes = vec![0usize; count];
        for (v, &b) in comp.iter().enumerate() {
            sizes[b] += 1;
            if vertices[b].is_some() {
                continue;
            }
            let hw_t = branch_hw(&c.dropped[v]);
            let hw = c
                .id_of_dropped(&hw_t)
                .ok_or_else(|| CrystalError::InvalidConfig(format!("lost highest weight {hw_t}")))?;
            let w = hw_t.weight();
            let shape = Partition(w.0[1].max(0) as usize, w.0[2].max(0) as usize);
            vertices[b] = Some(BranchingVertex {
                shape,
                rank: 0,
                component: c.component[v],
                hw,
                size: 0,
            });
        }
        let mut vertices: Vec<BranchingVertex> = vertices.into_iter().map(|x| x.unwrap()).collect();
        for (b, v) in vertices.iter_mut().enumerate() {
            v.size = sizes[b];
        }
        let mut edges = BTreeSet::new();
        for v in 0..c.len() {
            if let Some(w) = c.graph.f[v][1] {
                edges.insert((comp[v], comp[w]));
            }
        }
        // Rank: undirected distance from the vertex of u_k, shifted by s - k.
        let mut adj = vec![Vec::new(); count];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for k in 0..=s {
            let root = comp[c.highest[k]];
            let mut dist = vec![usize::MAX; count];
            dist[root] = 0;
            let mut q = VecDeque::from([root]);
            while let Some(a) = q.pop_front() {
                for &b in &adj[a] {
                    if dist[b] == usize::MAX {
                        dist[b] = dist[a] + 1;
                        q.push_back(b);
                    }
                }
            }
            for (b, v) in vertices.iter_mut().enumerate() {
                if v.component == k {
                    if dist[b] == usize::MAX {
                        return Err(CrystalError::InvalidConfig(format!(
                            "branching vertex {b} unreachable in component {k}"
                        )));
                    }
                    v.rank = dist[b] + s - k;
                }
            }
        }
        let mut lookup = HashMap::new();
        for (b, v) in vertices.iter().enumerate() {
            if lookup.insert((v.component, v.shape, v.rank), b).is_some() {
                return Err(CrystalError::InvalidConfig(format!(
                    "rank {} of component {} repeats shape {}",
                    v.rank, v.component, v.shape
                )));
            }
        }
        Ok(BranchingGraph {
            s,
            vertices,
            edges,
            of: comp,
            lookup,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn find(&self, component: usize, shape: Partition, rank: usize) -> Option<usize> {
        self.lookup.get(&(component, shape, rank)).copied()
    }

    /// The vertex with the same component and shape and rank `2s - R`.
    pub fn complement(&self, b: usize) -> Option<usize> {
        let v = &self.vertices[b];
        self.find(v.component, v.shape, (2 * self.s).checked_sub(v.rank)?)
    }

    /// Vertices of component `k`, grouped by rank.
    pub fn ranks_of(&self, k: usize) -> Vec<Vec<Partition>> {
        let mut out = vec![Vec::new(); 2 * self.s + 1];
        for v in self.vertices.iter().filter(|v| v.component == k) {
            out[v.rank].push(v.shape);
        }
        for r in &mut out {
            r.sort();
        }
        out
    }

    /// DOT export with one layer per rank.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph BC {\n  rankdir=TB;\n");
        for r in 0..=2 * self.s {
            let ids: Vec<String> = self
                .vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| v.rank == r)
                .map(|(b, _)| format!("b{b}"))
                .collect();
            if !ids.is_empty() {
                writeln!(out, "  {{ rank=same; {} }}", ids.join("; ")).unwrap();
            }
        }
        for (b, v) in self.vertices.iter().enumerate() {
            writeln!(
                out,
                "  b{b} [label=\"{} k={} R={}\"];",
                v.shape, v.component, v.rank
            )
            .unwrap();
        }
        for &(a, b) in &self.edges {
            writeln!(out, "  b{a} -> b{b} [label=1];").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "s": self.s,
            "vertices": self.vertices,
            "edges": self.edges.iter().collect::<Vec<_>>(),
        })
    }
}

/// `*_BC`: replay the U_q(D_{n-1}) path of `v` from the highest weight
/// tableau of the complementary branching vertex.
pub fn star_bc(c: &ClassicalKr, bc: &BranchingGraph, v: usize) -> Result<usize> {
    let b = bc.of[v];
    let comp = bc.complement(b).ok_or_else(|| {
        CrystalError::InvalidConfig(format!("no complementary vertex for {}", c.tableau(v)))
    })?;
    let (_, path) = branch_hw_path(&c.dropped[v]);
    let steps: Vec<(usize, bool)> = path.into_iter().map(|i| (i, false)).collect();
    c.graph
        .replay(bc.vertices[comp].hw, &steps)
        .ok_or_else(|| CrystalError::InvalidConfig(format!("path of {} does not replay", c.tableau(v))))
}

/// σ on a classical vertex: `ι_k^{s+ℓ-k}(T^{*_BC})`.
pub fn sigma(c: &ClassicalKr, bc: &BranchingGraph, v: usize) -> Result<usize> {
    let k = c.component[v];
    let l = ell(&c.dropped[v])?;
    let star = star_bc(c, bc, v)?;
    let target = c.s + l - k;
    let img = iota_classical(&c.dropped[star], target)?.ok_or_else(|| {
        CrystalError::InvalidConfig(format!("ι_{k}^{target} undefined at {}", c.tableau(star)))
    })?;
    let filled = fill(&img, c.s)?;
    c.id(&filled)
        .ok_or_else(|| CrystalError::InvalidConfig(format!("σ image {filled} missing")))
}

/// The size-`k` null configuration completed by nothing: used as `∅_k`.
pub fn null_tableau(n: usize, k: usize) -> Tableau {
    let (top, bottom) = crate::shape_maps::null_configuration(k);
    Tableau::new(n, top, bottom).expect("null configuration is well formed")
}

/// `∅_{s-k}` followed by `(2/1̄)^k`.
pub fn null_then_two_onebar(n: usize, s: usize, k: usize) -> Tableau {
    let (mut top, mut bottom) = crate::shape_maps::null_configuration(s - k);
    top.extend(std::iter::repeat_n(Letter(2), k));
    bottom.extend(std::iter::repeat_n(Letter(-1), k));
    Tableau::new(n, top, bottom).expect("well formed")
}
