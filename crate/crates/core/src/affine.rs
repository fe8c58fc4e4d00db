//! The affine crystal B̃^{2,s}: classical structure plus `f̃₀ = σ f̃₁ σ`.

use crate::branching::{sigma, BranchingGraph};
use crate::classical::ClassicalKr;
use crate::error::{CrystalError, Result};
use crate::graph::CrystalGraph;
use crate::model::{AffineWeight, Tableau};
use serde_json::json;

#[derive(Clone, Debug)]
pub struct AffineCrystal {
    pub n: usize,
    pub s: usize,
    pub classical: ClassicalKr,
    pub branching: BranchingGraph,
    /// `σ` as a permutation of vertex ids.
    pub sigma: Vec<usize>,
    /// `ε_i` and `φ_i` for `i = 0..=n`.
    pub eps: Vec<Vec<usize>>,
    pub phi: Vec<Vec<usize>>,
}

impl AffineCrystal {
    pub fn assemble(n: usize, s: usize, budget: usize) -> Result<AffineCrystal> {
        let mut classical = ClassicalKr::build(n, s, budget)?;
        let branching = BranchingGraph::build(&classical)?;
        let sigma_map = (0..classical.len())
            .map(|v| sigma(&classical, &branching, v))
            .collect::<Result<Vec<_>>>()?;
        for v in 0..classical.len() {
            let sv = sigma_map[v];
            if let Some(w) = classical.graph.f[sv][1] {
                let target = sigma_map[w];
                if classical.graph.e[target][0].is_some() {
                    return Err(CrystalError::InvalidConfig(format!(
                        "two 0-arrows into {}",
                        classical.tableau(target)
                    )));
                }
                classical.graph.add_edge(0, v, target);
            }
        }
        let g = &classical.graph;
        let eps = (0..g.len())
            .map(|v| (0..=n).map(|i| g.epsilon(v, i)).collect())
            .collect();
        let phi = (0..g.len())
            .map(|v| (0..=n).map(|i| g.phi(v, i)).collect())
            .collect();
        Ok(AffineCrystal {
            n,
            s,
            classical,
            branching,
            sigma: sigma_map,
            eps,
            phi,
        })
    }

    pub fn graph(&self) -> &CrystalGraph<Tableau> {
        &self.classical.graph
    }

    pub fn len(&self) -> usize {
        self.classical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classical.is_empty()
    }

    pub fn id(&self, t: &Tableau) -> Option<usize> {
        self.classical.id(t)
    }

    pub fn tableau(&self, v: usize) -> &Tableau {
        self.classical.tableau(v)
    }

    pub fn component(&self, v: usize) -> usize {
        self.classical.component[v]
    }

    pub fn f(&self, i: usize, v: usize) -> Option<usize> {
        self.classical.graph.f[v][i]
    }

    pub fn e(&self, i: usize, v: usize) -> Option<usize> {
        self.classical.graph.e[v][i]
    }

    pub fn f0(&self, t: &Tableau) -> Option<Tableau> {
        let v = self.id(t)?;
        self.f(0, v).map(|w| self.tableau(w).clone())
    }

    pub fn e0(&self, t: &Tableau) -> Option<Tableau> {
        let v = self.id(t)?;
        self.e(0, v).map(|w| self.tableau(w).clone())
    }

    /// `u_k`, filled to width `s`.
    pub fn u(&self, k: usize) -> usize {
        self.classical.highest[k]
    }

    pub fn epsilon_weight(&self, v: usize) -> AffineWeight {
        AffineWeight(self.eps[v].iter().map(|&x| x as i64).collect())
    }

    pub fn phi_weight(&self, v: usize) -> AffineWeight {
        AffineWeight(self.phi[v].iter().map(|&x| x as i64).collect())
    }

    /// `wt(b) = φ(b) - ε(b)` in `P_cl`.
    pub fn weight(&self, v: usize) -> AffineWeight {
        AffineWeight(
            self.phi[v]
                .iter()
                .zip(&self.eps[v])
                .map(|(&p, &e)| p as i64 - e as i64)
                .collect(),
        )
    }

    pub fn rank(&self, v: usize) -> usize {
        self.branching.vertices[self.branching.of[v]].rank
    }

    pub fn to_dot(&self) -> String {
        let colors: Vec<usize> = (0..=self.n).collect();
        self.graph()
            .to_dot(&format!("B2_{}_D{}", self.s, self.n), &colors)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let g = self.graph();
        let vertices: Vec<_> = (0..self.len())
            .map(|v| {
                json!({
                    "id": v,
                    "tableau": self.tableau(v),
                    "component": self.component(v),
                    "rank": self.rank(v),
                    "epsilon": self.eps[v],
                    "phi": self.phi[v],
                    "energy": self.component(v) as i64 - self.s as i64,
                })
            })
            .collect();
        let edges: Vec<_> = g
            .edges()
            .map(|(v, i, w)| json!({"from": v, "to": w, "color": i}))
            .collect();
        json!({"n": self.n, "s": self.s, "vertices": vertices, "edges": edges})
    }
}
