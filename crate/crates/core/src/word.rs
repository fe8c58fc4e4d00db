//! The crystal B(ϖ₁) on letters and the signature rule on words.
//!
//! A word `x₁x₂⋯x_L` is read as the tensor product with `x₁` leftmost. Each
//! letter contributes `−^φ +^ε`; `+−` pairs cancel, `f̃` acts at the rightmost
//! surviving `−` and `ẽ` at the leftmost surviving `+`.

use crate::model::Letter;
use serde::Serialize;

/// `f̃_i` on a single letter.
pub fn letter_f(n: usize, i: usize, x: Letter) -> Option<Letter> {
    debug_assert!((1..=n).contains(&i));
    let (i8i, n8) = (i as i8, n as i8);
    let v = x.0;
    if i < n {
        if v == i8i {
            Some(Letter(i8i + 1))
        } else if v == -(i8i + 1) {
            Some(Letter(-i8i))
        } else {
            None
        }
    } else if v == n8 - 1 {
        Some(Letter(-n8))
    } else if v == n8 {
        Some(Letter(-(n8 - 1)))
    } else {
        None
    }
}

/// `ẽ_i` on a single letter.
pub fn letter_e(n: usize, i: usize, x: Letter) -> Option<Letter> {
    debug_assert!((1..=n).contains(&i));
    let (i8i, n8) = (i as i8, n as i8);
    let v = x.0;
    if i < n {
        if v == i8i + 1 {
            Some(Letter(i8i))
        } else if v == -i8i {
            Some(Letter(-(i8i + 1)))
        } else {
            None
        }
    } else if v == -n8 {
        Some(Letter(n8 - 1))
    } else if v == -(n8 - 1) {
        Some(Letter(n8))
    } else {
        None
    }
}

/// `(ε_i(x), φ_i(x))` for a letter; each is 0 or 1.
pub fn letter_eps_phi(n: usize, i: usize, x: Letter) -> (usize, usize) {
    (
        letter_e(n, i, x).is_some() as usize,
        letter_f(n, i, x).is_some() as usize,
    )
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// Full and reduced `i`-signature of a word, with source positions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Signature {
    pub full: Vec<(Sign, usize)>,
    pub reduced: Vec<(Sign, usize)>,
}

impl Signature {
    pub fn epsilon(&self) -> usize {
        self.reduced.iter().filter(|s| s.0 == Sign::Plus).count()
    }

    pub fn phi(&self) -> usize {
        self.reduced.iter().filter(|s| s.0 == Sign::Minus).count()
    }

    /// Position acted on by `f̃`: the rightmost surviving `−`.
    pub fn f_position(&self) -> Option<usize> {
        self.reduced
            .iter()
            .rev()
            .find(|s| s.0 == Sign::Minus)
            .map(|s| s.1)
    }

    /// Position acted on by `ẽ`: the leftmost surviving `+`.
    pub fn e_position(&self) -> Option<usize> {
        self.reduced.iter().find(|s| s.0 == Sign::Plus).map(|s| s.1)
    }

    fn render(v: &[(Sign, usize)]) -> String {
        v.iter()
            .map(|s| if s.0 == Sign::Plus { '+' } else { '−' })
            .collect()
    }

    pub fn full_string(&self) -> String {
        Self::render(&self.full)
    }

    pub fn reduced_string(&self) -> String {
        Self::render(&self.reduced)
    }
}

pub fn signature(n: usize, i: usize, w: &[Letter]) -> Signature {
    let mut full = Vec::new();
    for (p, &x) in w.iter().enumerate() {
        let (e, f) = letter_eps_phi(n, i, x);
        full.extend(std::iter::repeat_n((Sign::Minus, p), f));
        full.extend(std::iter::repeat_n((Sign::Plus, p), e));
    }
    // Stack scan: a `−` cancels the nearest unmatched `+` to its left.
    let mut reduced: Vec<(Sign, usize)> = Vec::with_capacity(full.len());
    for &s in &full {
        if s.0 == Sign::Minus && reduced.last().is_some_and(|t| t.0 == Sign::Plus) {
            reduced.pop();
        } else {
            reduced.push(s);
        }
    }
    Signature { full, reduced }
}

pub fn word_f(n: usize, i: usize, w: &[Letter]) -> Option<Vec<Letter>> {
    let p = signature(n, i, w).f_position()?;
    let mut out = w.to_vec();
    out[p] = letter_f(n, i, w[p]).expect("signature selected an inactive letter");
    Some(out)
}

pub fn word_e(n: usize, i: usize, w: &[Letter]) -> Option<Vec<Letter>> {
    let p = signature(n, i, w).e_position()?;
    let mut out = w.to_vec();
    out[p] = letter_e(n, i, w[p]).expect("signature selected an inactive letter");
    Some(out)
}

pub fn eps_phi(n: usize, i: usize, w: &[Letter]) -> (usize, usize) {
    let s = signature(n, i, w);
    (s.epsilon(), s.phi())
}

/// Which factor of `x₁ ⊗ ⋯ ⊗ x_L` an operator acts on, given per-factor
/// `(ε, φ)` pairs. Works for factors from any crystal.
pub fn select_f(factors: &[(usize, usize)]) -> Option<usize> {
    let mut open_plus = 0usize;
    let mut last = None;
    for (j, &(e, f)) in factors.iter().enumerate() {
        let cancelled = f.min(open_plus);
        open_plus -= cancelled;
        if f > cancelled {
            last = Some(j);
        }
        open_plus += e;
    }
    last
}

pub fn select_e(factors: &[(usize, usize)]) -> Option<usize> {
    // Mirror scan: a `+` survives unless cancelled by a `−` to its right.
    let mut open_minus = 0usize;
    let mut first = None;
    for (j, &(e, f)) in factors.iter().enumerate().rev() {
        let cancelled = e.min(open_minus);
        open_minus -= cancelled;
        if e > cancelled {
            first = Some(j);
        }
        open_minus += f;
    }
    first
}

/// `(ε, φ)` of a tensor product from per-factor values.
pub fn combine_eps_phi(factors: &[(usize, usize)]) -> (usize, usize) {
    let mut open_plus = 0usize;
    let mut minus = 0usize;
    for &(e, f) in factors {
        let c = f.min(open_plus);
        open_plus -= c;
        minus += f - c;
        open_plus += e;
    }
    (open_plus, minus)
}
