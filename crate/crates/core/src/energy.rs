//! Tensor products, the combinatorial R-matrix, local and intrinsic energies
//! and one-dimensional sums.

use crate::affine::AffineCrystal;
use crate::error::{CrystalError, Result};
use crate::model::ClassicalWeight;
use crate::word::{combine_eps_phi, select_e, select_f};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap, VecDeque};

/// `B₂ ⊗ B₁` with elements encoded as `b₂ · |B₁| + b₁`.
#[derive(Copy, Clone)]
pub struct TensorPair<'a> {
    pub left: &'a AffineCrystal,
    pub right: &'a AffineCrystal,
}

impl<'a> TensorPair<'a> {
    pub fn new(left: &'a AffineCrystal, right: &'a AffineCrystal) -> Result<Self> {
        if left.n != right.n {
            return Err(CrystalError::RankMismatch {
                left: left.n,
                right: right.n,
            });
        }
        Ok(TensorPair { left, right })
    }

    pub fn n(&self) -> usize {
        self.left.n
    }

    pub fn len(&self) -> usize {
        self.left.len() * self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, b2: usize, b1: usize) -> usize {
        b2 * self.right.len() + b1
    }

    pub fn decode(&self, x: usize) -> (usize, usize) {
        (x / self.right.len(), x % self.right.len())
    }

    fn factors(&self, i: usize, x: usize) -> [(usize, usize); 2] {
        let (b2, b1) = self.decode(x);
        [
            (self.left.eps[b2][i], self.left.phi[b2][i]),
            (self.right.eps[b1][i], self.right.phi[b1][i]),
        ]
    }

    pub fn f(&self, i: usize, x: usize) -> Option<usize> {
        let (b2, b1) = self.decode(x);
        match select_f(&self.factors(i, x))? {
            0 => Some(self.encode(self.left.f(i, b2)?, b1)),
            _ => Some(self.encode(b2, self.right.f(i, b1)?)),
        }
    }

    pub fn e(&self, i: usize, x: usize) -> Option<usize> {
        let (b2, b1) = self.decode(x);
        match select_e(&self.factors(i, x))? {
            0 => Some(self.encode(self.left.e(i, b2)?, b1)),
            _ => Some(self.encode(b2, self.right.e(i, b1)?)),
        }
    }

    pub fn eps_phi(&self, i: usize, x: usize) -> (usize, usize) {
        combine_eps_phi(&self.factors(i, x))
    }

    /// Whether `ẽ₀` acts on the left factor.
    pub fn e0_acts_left(&self, x: usize) -> bool {
        select_e(&self.factors(0, x)) == Some(0)
    }

    /// `u(B₂) ⊗ u(B₁)` with `u = u_s`.
    pub fn extremal(&self) -> usize {
        self.encode(self.left.u(self.left.s), self.right.u(self.right.s))
    }
}

/// Union-find partition of `B₂ ⊗ B₁` under all arrows of colors `0..=n`.
pub fn tensor_components(t: &TensorPair) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..t.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for x in 0..t.len() {
        for i in 0..=t.n() {
            if let Some(y) = t.f(i, x) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    (0..t.len()).map(|x| find(&mut parent, x)).collect()
}

/// The combinatorial R-matrix `B₂ ⊗ B₁ → B₁ ⊗ B₂` as a table on encoded pairs.
#[derive(Clone, Debug)]
pub struct RMatrix {
    pub s_left: usize,
    pub s_right: usize,
    pub map: Vec<usize>,
}

/// Build R by path transport from `u(B₂) ⊗ u(B₁)`.
pub fn rmatrix(b2: &AffineCrystal, b1: &AffineCrystal) -> Result<RMatrix> {
    let src = TensorPair::new(b2, b1)?;
    let dst = TensorPair::new(b1, b2)?;
    let n = src.n();
    let mut map = vec![usize::MAX; src.len()];
    let start = src.extremal();
    map[start] = dst.extremal();
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        let y = map[x];
        for i in 0..=n {
            for raise in [false, true] {
                let (nx, ny) = if raise {
                    (src.e(i, x), dst.e(i, y))
                } else {
                    (src.f(i, x), dst.f(i, y))
                };
                match (nx, ny) {
                    (None, None) => {}
                    (Some(nx), Some(ny)) => {
                        if map[nx] == usize::MAX {
                            map[nx] = ny;
                            queue.push_back(nx);
                        } else if map[nx] != ny {
                            return Err(CrystalError::InvalidConfig(format!(
                                "path transport is inconsistent at color {i}"
                            )));
                        }
                    }
                    _ => {
                        return Err(CrystalError::InvalidConfig(format!(
                            "path transport breaks at color {i}"
                        )))
                    }
                }
            }
        }
    }
    let unreached = map.iter().filter(|&&y| y == usize::MAX).count();
    if unreached > 0 {
        return Err(CrystalError::Disconnected {
            unreached,
            total: src.len(),
        });
    }
    Ok(RMatrix {
        s_left: b2.s,
        s_right: b1.s,
        map,
    })
}

/// The local energy `H` on `B₂ ⊗ B₁`, one value per encoded pair.
#[derive(Clone, Debug, Serialize)]
pub struct EnergyTable {
    pub s_left: usize,
    pub s_right: usize,
    pub h: Vec<i64>,
    /// Classical component id of each pair.
    pub component: Vec<usize>,
}

/// `δ` of the local energy recurrence for `ẽ₀` applied at `x`.
pub fn energy_step(src: &TensorPair, dst: &TensorPair, r: &RMatrix, x: usize) -> i64 {
    let y = r.map[x];
    match (src.e0_acts_left(x), dst.e0_acts_left(y)) {
        (true, true) => -1,
        (false, false) => 1,
        _ => 0,
    }
}

pub fn local_energy(b2: &AffineCrystal, b1: &AffineCrystal, r: &RMatrix) -> Result<EnergyTable> {
    let src = TensorPair::new(b2, b1)?;
    let dst = TensorPair::new(b1, b2)?;
    let n = src.n();
    let len = src.len();
    // classical components
    let mut comp = vec![usize::MAX; len];
    let mut ncomp = 0;
    for x0 in 0..len {
        if comp[x0] != usize::MAX {
            continue;
        }
        comp[x0] = ncomp;
        let mut q = VecDeque::from([x0]);
        while let Some(x) = q.pop_front() {
            for i in 1..=n {
                for y in [src.f(i, x), src.e(i, x)].into_iter().flatten() {
                    if comp[y] == usize::MAX {
                        comp[y] = ncomp;
                        q.push_back(y);
                    }
                }
            }
        }
        ncomp += 1;
    }
    // representatives with outgoing or incoming 0-arrows, per component
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for x in 0..len {
        members[comp[x]].push(x);
    }
    let mut value: Vec<Option<i64>> = vec![None; ncomp];
    let root = comp[src.extremal()];
    value[root] = Some(0);
    let mut q = VecDeque::from([root]);
    while let Some(c) = q.pop_front() {
        let hc = value[c].unwrap();
        for &x in &members[c] {
            let mut links = Vec::new();
            if let Some(y) = src.e(0, x) {
                links.push((y, hc + energy_step(&src, &dst, r, x)));
            }
            if let Some(y) = src.f(0, x) {
                // x = ẽ₀(y), so H(x) = H(y) + δ(y)
                links.push((y, hc - energy_step(&src, &dst, r, y)));
            }
            for (y, hy) in links {
                let cy = comp[y];
                match value[cy] {
                    None => {
                        value[cy] = Some(hy);
                        q.push_back(cy);
                    }
                    Some(v) if v != hy => {
                        return Err(CrystalError::Inconsistent {
                            component: cy,
                            first: v,
                            second: hy,
                        })
                    }
                    _ => {}
                }
            }
        }
    }
    let unreached = value.iter().filter(|v| v.is_none()).count();
    if unreached > 0 {
        return Err(CrystalError::Disconnected {
            unreached,
            total: ncomp,
        });
    }
    Ok(EnergyTable {
        s_left: b2.s,
        s_right: b1.s,
        h: comp.iter().map(|&c| value[c].unwrap()).collect(),
        component: comp,
    })
}

/// The unique `b♮` with `φ(b♮) = sΛ₀`.
pub fn b_natural(b: &AffineCrystal) -> Result<usize> {
    let mut target = vec![0usize; b.n + 1];
    target[0] = b.s;
    let found: Vec<usize> = (0..b.len()).filter(|&v| b.phi[v] == target).collect();
    match found.as_slice() {
        [v] => Ok(*v),
        _ => Err(CrystalError::InvalidConfig(format!(
            "{} elements with φ = sΛ₀",
            found.len()
        ))),
    }
}

/// `D_B(b) = H(b ⊗ b♮) − H(u ⊗ b♮)` for every `b`.
pub fn intrinsic_energy_single(b: &AffineCrystal, h: &EnergyTable) -> Result<Vec<i64>> {
    let t = TensorPair::new(b, b)?;
    let nat = b_natural(b)?;
    let base = h.h[t.encode(b.u(b.s), nat)];
    Ok((0..b.len()).map(|v| h.h[t.encode(v, nat)] - base).collect())
}

/// R-matrices, local energies and single-factor energies for tensor
/// products of `B̃^{2,s_j}` at a fixed rank.
pub struct EnergyContext {
    pub crystals: Vec<AffineCrystal>,
    rmats: HashMap<(usize, usize), RMatrix>,
    tables: HashMap<(usize, usize), EnergyTable>,
    singles: Vec<Vec<i64>>,
}

impl EnergyContext {
    /// `crystals[t]` is the factor type `t`.
    pub fn new(crystals: Vec<AffineCrystal>) -> Result<EnergyContext> {
        let mut rmats = HashMap::new();
        let mut tables = HashMap::new();
        let m = crystals.len();
        for a in 0..m {
            for b in 0..m {
                let r = rmatrix(&crystals[a], &crystals[b])?;
                let h = local_energy(&crystals[a], &crystals[b], &r)?;
                rmats.insert((a, b), r);
                tables.insert((a, b), h);
            }
        }
        let singles = (0..m)
            .map(|a| intrinsic_energy_single(&crystals[a], &tables[&(a, a)]))
            .collect::<Result<Vec<_>>>()?;
        Ok(EnergyContext {
            crystals,
            rmats,
            tables,
            singles,
        })
    }

    pub fn rmatrix(&self, a: usize, b: usize) -> &RMatrix {
        &self.rmats[&(a, b)]
    }

    pub fn table(&self, a: usize, b: usize) -> &EnergyTable {
        &self.tables[&(a, b)]
    }

    pub fn single(&self, a: usize) -> &[i64] {
        &self.singles[a]
    }

    fn pair(&self, a: usize, b: usize) -> TensorPair<'_> {
        TensorPair {
            left: &self.crystals[a],
            right: &self.crystals[b],
        }
    }

    /// `H_i` on factors `i+1 ⊗ i` (1-based from the right). `b[0]` is `b₁`.
    fn h_at(&self, types: &[usize], b: &[usize], i: usize) -> i64 {
        let (l, r) = (types[i], types[i - 1]);
        self.tables[&(l, r)].h[self.pair(l, r).encode(b[i], b[i - 1])]
    }

    fn r_at(&self, types: &mut [usize], b: &mut [usize], i: usize) {
        let (l, r) = (types[i], types[i - 1]);
        let x = self.pair(l, r).encode(b[i], b[i - 1]);
        let y = self.rmats[&(l, r)].map[x];
        let (nl, nr) = self.pair(r, l).decode(y);
        b[i] = nl;
        b[i - 1] = nr;
        types.swap(i, i - 1);
    }

    /// Intrinsic energy of `b_L ⊗ ⋯ ⊗ b₁` given as `b[0] = b₁`, with factor
    /// types `types[0]` for `B₁` and so on.
    pub fn tensor_energy(&self, types: &[usize], b: &[usize]) -> i64 {
        let l = b.len();
        let mut total = self.singles[types[0]][b[0]];
        for j in 2..=l {
            let mut ty = types.to_vec();
            let mut cur = b.to_vec();
            for i in (1..j).rev() {
                total += self.h_at(&ty, &cur, i);
                self.r_at(&mut ty, &mut cur, i);
            }
            total += self.singles[ty[0]][cur[0]];
        }
        total
    }

    /// Classical highest weight elements of `B_L ⊗ ⋯ ⊗ B₁` with weight `λ`.
    pub fn restricted_paths(&self, types: &[usize], lambda: &ClassicalWeight) -> Vec<Vec<usize>> {
        let n = self.crystals[0].n;
        let mut out = Vec::new();
        // (ε_i, φ_i) of the partial product b_j ⊗ ⋯ ⊗ b₁ for classical i
        fn rec(
            ctx: &EnergyContext,
            types: &[usize],
            lambda: &ClassicalWeight,
            n: usize,
            cur: &mut Vec<usize>,
            ep: Vec<(usize, usize)>,
            wt: Vec<i32>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let j = cur.len();
            if j == types.len() {
                if wt == lambda.0 {
                    out.push(cur.clone());
                }
                return;
            }
            let c = &ctx.crystals[types[j]];
            for v in 0..c.len() {
                if (1..=n).any(|i| c.eps[v][i] > ep[i].1) {
                    continue;
                }
                let nep: Vec<(usize, usize)> = (0..=n)
                    .map(|i| {
                        if i == 0 {
                            (0, 0)
                        } else {
                            combine_eps_phi(&[(c.eps[v][i], c.phi[v][i]), ep[i]])
                        }
                    })
                    .collect();
                let tw = c.tableau(v).weight();
                let nwt: Vec<i32> = wt.iter().zip(&tw.0).map(|(a, b)| a + b).collect();
                cur.push(v);
                rec(ctx, types, lambda, n, cur, nep, nwt, out);
                cur.pop();
            }
        }
        // the empty product has ε = φ = 0, so b₁ must be highest weight
        rec(
            self,
            types,
            lambda,
            n,
            &mut Vec::new(),
            vec![(0, 0); n + 1],
            vec![0; n],
            &mut out,
        );
        out
    }

    /// `X(B, λ; q)` as exponent → coefficient.
    pub fn one_dim_sum(&self, types: &[usize], lambda: &ClassicalWeight) -> BTreeMap<i64, u64> {
        let mut poly = BTreeMap::new();
        for b in self.restricted_paths(types, lambda) {
            *poly.entry(self.tensor_energy(types, &b)).or_insert(0) += 1;
        }
        poly
    }
}
