//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use krcrystal::affine::AffineCrystal;
use krcrystal::model::{Letter, Tableau};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub fn t(n: usize, top: &[i8], bottom: &[i8]) -> Tableau {
    Tableau::from_rows(n, top, bottom)
}

pub fn letters(v: &[i8]) -> Vec<Letter> {
    v.iter().map(|&x| Letter(x)).collect()
}

/// Assembled crystals, built once per test binary.
pub fn crystal(n: usize, s: usize) -> Arc<AffineCrystal> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<AffineCrystal>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&(n, s)) {
        return c.clone();
    }
    let c = Arc::new(AffineCrystal::assemble(n, s, 5_000_000).expect("assembles"));
    cache.lock().unwrap().entry((n, s)).or_insert(c).clone()
}

/// Position of a letter in the chain `1 < ⋯ < n-1 < {n, n̄} < n-1̄ < ⋯ < 1̄`.
fn height(n: usize, x: i8) -> i32 {
    let i = x.unsigned_abs() as i32;
    if x > 0 || i == n as i32 {
        i
    } else {
        2 * n as i32 - i
    }
}

pub fn le_oracle(n: usize, a: i8, b: i8) -> bool {
    a == b || height(n, a) < height(n, b)
}

/// The five conditions of the classical tableau criterion, written out directly.
pub fn criterion_oracle(n: usize, top: &[i8], bottom: &[i8]) -> bool {
    let k = top.len();
    let ni = n as i8;
    for r in [top, bottom] {
        if r.windows(2).any(|p| !le_oracle(n, p[0], p[1])) {
            return false;
        }
    }
    if (0..k).any(|i| le_oracle(n, bottom[i], top[i])) {
        return false;
    }
    for i in 1..k {
        if top[i - 1] == top[i] && bottom[i] == -top[i] {
            return false;
        }
        if bottom[i - 1] == -top[i - 1] && bottom[i] == bottom[i - 1] {
            return false;
        }
    }
    let cols: Vec<(i8, i8)> = (0..k).map(|i| (top[i], bottom[i])).collect();
    for (p, q) in [((ni - 1, ni), (ni, -(ni - 1))), ((ni - 1, -ni), (-ni, -(ni - 1)))] {
        for i in 0..k {
            if cols[i] == p && cols[i + 1..].contains(&q) {
                return false;
            }
        }
    }
    !cols.contains(&(1, -1))
}

fn increasing_rows(n: usize, k: usize) -> Vec<Vec<i8>> {
    let alpha: Vec<i8> = (1..=n as i8).chain((1..=n as i8).rev().map(|x| -x)).collect();
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for r in &out {
            for &x in &alpha {
                if r.last().is_none_or(|&l| le_oracle(n, l, x)) {
                    let mut r2 = r.clone();
                    r2.push(x);
                    next.push(r2);
                }
            }
        }
        out = next;
    }
    out
}

/// Every two-row tableau of width `k` satisfying the criterion.
pub fn enumerate_classical(n: usize, k: usize) -> Vec<Tableau> {
    let rows = increasing_rows(n, k);
    let mut out = Vec::new();
    for a in &rows {
        for b in &rows {
            if criterion_oracle(n, a, b) {
                out.push(t(n, a, b));
            }
        }
    }
    out
}

/// Two-row tableaux of width `k` with weakly increasing rows and legal columns.
pub fn enumerate_legal(n: usize, k: usize) -> Vec<Tableau> {
    let rows = increasing_rows(n, k);
    let mut out = Vec::new();
    for a in &rows {
        for b in &rows {
            if (0..k).all(|i| !le_oracle(n, b[i], a[i])) {
                out.push(t(n, a, b));
            }
        }
    }
    out
}

/// Weyl dimension formula for D_n, highest weight in the ε basis.
pub fn weyl_dim(n: usize, lambda: &[i32]) -> u128 {
    let l: Vec<i128> = (0..n).map(|i| lambda[i] as i128 + (n - 1 - i) as i128).collect();
    let r: Vec<i128> = (0..n).map(|i| (n - 1 - i) as i128).collect();
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..n {
        for j in i + 1..n {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (r[i] - r[j]) * (r[i] + r[j]);
        }
    }
    assert_eq!(num % den, 0);
    (num / den) as u128
}

/// Coefficient of `x^s` in `Π_i 1/(1 - x^{c_i})` with `c = (1,1,2,…,2,1,1)`.
pub fn dominant_count_convolution(n: usize, s: usize) -> u64 {
    let mut poly = vec![0u64; s + 1];
    poly[0] = 1;
    for i in 0..=n {
        let c = if (2..=n - 2).contains(&i) { 2 } else { 1 };
        for d in c..=s {
            poly[d] += poly[d - c];
        }
    }
    poly[s]
}

/// Shapes per local rank in BC(kϖ₂) as read off the summary statement: rank
/// `j ≤ k` holds each `λ ⊂ (k, j)` with `|λ| ≡ k - j (mod 2)` and `|λ| ≥ k - j`;
/// ranks above `k` mirror.
pub fn rank_contents_literal(k: usize) -> Vec<Vec<(usize, usize)>> {
    rank_contents_filtered(k, |_, _, _| true)
}

/// As [`rank_contents_literal`], plus the bound `λ₂ ≤ j - t₂` from the
/// derivation, where `|λ| = k + j - 2t₂`. Equivalently `λ₁ - λ₂ ≥ k - j`.
pub fn rank_contents(k: usize) -> Vec<Vec<(usize, usize)>> {
    rank_contents_filtered(k, |j, a, b| {
        let t2 = (k + j - a - b) / 2;
        b + t2 <= j
    })
}

fn rank_contents_filtered(
    k: usize,
    keep: impl Fn(usize, usize, usize) -> bool,
) -> Vec<Vec<(usize, usize)>> {
    let lower = |j: usize| {
        let mut v = Vec::new();
        for a in 0..=k {
            for b in 0..=j.min(a) {
                let size = a + b;
                if size >= k - j && (size - (k - j)).is_multiple_of(2) && keep(j, a, b) {
                    v.push((a, b));
                }
            }
        }
        v.sort();
        v
    };
    (0..=2 * k).map(|j| lower(if j <= k { j } else { 2 * k - j })).collect()
}

/// Total D_{n-1} dimension of a list of per-rank shapes.
pub fn branching_dimension(n: usize, ranks: &[Vec<(usize, usize)>]) -> u128 {
    ranks
        .iter()
        .flatten()
        .map(|&(a, b)| {
            let mut w = vec![0i32; n - 1];
            w[0] = a as i32;
            w[1] = b as i32;
            weyl_dim(n - 1, &w)
        })
        .sum()
}
