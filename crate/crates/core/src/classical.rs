//! Kashiwara operators on rectangular two-row tableaux, generation of
//! B(kϖ₂) and the dual map.

use crate::error::{CrystalError, Result};
use crate::graph::CrystalGraph;
use crate::model::{check_rank, Letter, Tableau};
use crate::plactic::{rectify_two_row, SkewTableau};
use crate::word::{eps_phi, signature, letter_e, letter_f};
use std::collections::VecDeque;

/// Default cap on vertices generated for a single crystal.
pub const DEFAULT_BUDGET: usize = 2_000_000;

pub fn tab_f(i: usize, t: &Tableau) -> Option<Tableau> {
    let w = t.column_word();
    let p = signature(t.n(), i, &w).f_position()?;
    let x = letter_f(t.n(), i, w[p]).expect("active letter");
    Some(t.with_word_letter(p, x))
}

pub fn tab_e(i: usize, t: &Tableau) -> Option<Tableau> {
    let w = t.column_word();
    let p = signature(t.n(), i, &w).e_position()?;
    let x = letter_e(t.n(), i, w[p]).expect("active letter");
    Some(t.with_word_letter(p, x))
}

pub fn tab_eps_phi(i: usize, t: &Tableau) -> (usize, usize) {
    eps_phi(t.n(), i, &t.column_word())
}

pub fn is_classical_hw(t: &Tableau) -> bool {
    (1..=t.n()).all(|i| tab_e(i, t).is_none())
}

/// B(kϖ₂) as a crystal graph with colors `1..=n` (color 0 left empty).
pub fn generate_component(n: usize, k: usize, budget: usize) -> Result<CrystalGraph<Tableau>> {
    check_rank(n)?;
    let mut g = CrystalGraph::new(n);
    let (root, _) = g.intern(Tableau::highest(n, k));
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for i in 1..=n {
            if let Some(t) = tab_f(i, &g.vertices[v]) {
                let (w, fresh) = g.intern(t);
                if fresh {
                    if g.len() > budget {
                        return Err(CrystalError::BudgetExceeded { budget });
                    }
                    queue.push_back(w);
                }
                g.add_edge(i, v, w);
            }
        }
    }
    Ok(g)
}

/// `τ` on Dynkin nodes: swaps `n-1` and `n` when `n` is odd.
pub fn tau(n: usize, i: usize) -> usize {
    if n % 2 == 1 && i >= n - 1 && i <= n {
        2 * n - 1 - i
    } else {
        i
    }
}

/// The dual map on B(ϖ₁).
pub fn letter_star(n: usize, x: Letter) -> Letter {
    if n % 2 == 1 && x.index() == n {
        x
    } else {
        x.bar()
    }
}

/// Dual of a straight two-row tableau of any shape `(p, q)`: star the
/// reversed column word and rectify.
pub fn dual_star_skew(s: &SkewTableau) -> Result<SkewTableau> {
    assert!(s.is_straight(), "dual_star_skew needs a straight shape");
    let n = s.n;
    let p = s.top.len();
    let q = s.bottom.len();
    let skew = SkewTableau {
        n,
        top_offset: p - q,
        top: s.bottom.iter().rev().map(|&x| letter_star(n, x)).collect(),
        bottom_offset: 0,
        bottom: s.top.iter().rev().map(|&x| letter_star(n, x)).collect(),
    };
    rectify_two_row(&skew)
}

pub fn dual_star(t: &Tableau) -> Result<Tableau> {
    let d = dual_star_skew(&SkewTableau::from_tableau(t))?;
    d.to_tableau()
        .ok_or_else(|| CrystalError::InvalidConfig(format!("dual of {t} is not rectangular")))
}

/// The lowest weight vector of B(kϖ₂): `(2̄/1̄)^k`.
pub fn lowest(n: usize, k: usize) -> Tableau {
    Tableau::from_columns(n, &vec![(Letter(-2), Letter(-1)); k])
}

/// Raise `t` with `ẽ₂, …, ẽ_n` to the highest weight vector of its
/// U_q(D_{n-1}) component.
pub fn branch_hw(t: &Tableau) -> Tableau {
    let mut cur = t.clone();
    'outer: loop {
        for i in 2..=cur.n() {
            if let Some(u) = tab_e(i, &cur) {
                cur = u;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Raise `t` with `ẽ₂, …, ẽ_n`, recording the colors applied. Replaying the
/// reversed list with `f̃` recovers `t` from the returned highest weight vector.
pub fn branch_hw_path(t: &Tableau) -> (Tableau, Vec<usize>) {
    let mut cur = t.clone();
    let mut path = Vec::new();
    'outer: loop {
        for i in 2..=cur.n() {
            if let Some(u) = tab_e(i, &cur) {
                cur = u;
                path.push(i);
                continue 'outer;
            }
        }
        path.reverse();
        return (cur, path);
    }
}

/// `⊕_{k=0}^{s} B(kϖ₂)` realised on 𝒯(s): every vertex is a width-`s`
/// tableau, and the classical operators act through drop and fill.
#[derive(Clone, Debug)]
pub struct ClassicalKr {
    pub n: usize,
    pub s: usize,
    /// Colors `1..=n` populated; color 0 is added by the affine assembly.
    pub graph: CrystalGraph<Tableau>,
    /// `D_{2,s}` of each vertex.
    pub dropped: Vec<Tableau>,
    /// Classical component index `k` of each vertex.
    pub component: Vec<usize>,
    /// Vertex id of `u_k` (filled) for each `k`.
    pub highest: Vec<usize>,
}

impl ClassicalKr {
    pub fn build(n: usize, s: usize, budget: usize) -> Result<ClassicalKr> {
        check_rank(n)?;
        if s == 0 {
            return Err(CrystalError::InvalidConfig("s must be positive".into()));
        }
        let mut graph = CrystalGraph::new(n);
        let mut dropped = Vec::new();
        let mut component = Vec::new();
        let mut highest = Vec::new();
        for k in 0..=s {
            let remaining = budget.saturating_sub(graph.len());
            let comp = generate_component(n, k, remaining)?;
            let base = graph.len();
            for t in &comp.vertices {
                let filled = crate::shape_maps::fill(t, s)?;
                let (_, fresh) = graph.intern(filled);
                if !fresh {
                    return Err(CrystalError::InvalidConfig(format!(
                        "fill is not injective at {t}"
                    )));
                }
                dropped.push(t.clone());
                component.push(k);
            }
            for (v, i, w) in comp.edges() {
                graph.add_edge(i, base + v, base + w);
            }
            highest.push(base);
        }
        Ok(ClassicalKr {
            n,
            s,
            graph,
            dropped,
            component,
            highest,
        })
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn id(&self, t: &Tableau) -> Option<usize> {
        self.graph.id(t)
    }

    pub fn tableau(&self, v: usize) -> &Tableau {
        &self.graph.vertices[v]
    }

    /// Vertex of the filled form of a classical tableau of width `≤ s`.
    pub fn id_of_dropped(&self, t: &Tableau) -> Option<usize> {
        let filled = crate::shape_maps::fill(t, self.s).ok()?;
        self.id(&filled)
    }
}
