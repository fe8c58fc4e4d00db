//! Letters, two-row tableaux and weights for type D_n.
//!
//! The alphabet is 1 < 2 < ... < n-1 < {n, n̄} < (n-1)̄ < ... < 1̄ with `n` and
//! `n̄` incomparable. Barred letters are stored as negative integers, so `bar`
//! is a sign flip.

use crate::error::{CrystalError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A letter of the type D_n alphabet. The derived `Ord` is the numeric order
/// of the encoding (used for canonical sorting only); use [`compare`] for the
/// crystal order.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub i8);

impl Letter {
    pub const fn new(v: i8) -> Letter {
        Letter(v)
    }

    pub const fn bar(self) -> Letter {
        Letter(-self.0)
    }

    pub const fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// The underlying index `i` of `i` or `ī`.
    pub const fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_valid(self, n: usize) -> bool {
        self.0 != 0 && self.index() <= n
    }

    /// Position in the linear extension 1 < ... < n < n̄ < ... < 1̄.
    fn key(self, n: usize) -> i32 {
        if self.0 > 0 {
            self.0 as i32
        } else {
            2 * n as i32 + 1 + self.0 as i32
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}\u{0304}", self.index())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LetterOrder {
    Lt,
    Eq,
    Gt,
    Incomparable,
}

/// Compare two letters valid for rank `n`.
pub fn compare(n: usize, a: Letter, b: Letter) -> LetterOrder {
    debug_assert!(a.is_valid(n) && b.is_valid(n));
    if a.index() == n && b.index() == n && a != b {
        return LetterOrder::Incomparable;
    }
    match a.key(n).cmp(&b.key(n)) {
        std::cmp::Ordering::Less => LetterOrder::Lt,
        std::cmp::Ordering::Equal => LetterOrder::Eq,
        std::cmp::Ordering::Greater => LetterOrder::Gt,
    }
}

/// Checked comparison: both letters must be valid for `n`.
pub fn try_compare(n: usize, a: Letter, b: Letter) -> Result<LetterOrder> {
    for x in [a, b] {
        if !x.is_valid(n) {
            return Err(CrystalError::InvalidLetter { letter: x.0, n });
        }
    }
    Ok(compare(n, a, b))
}

#[inline]
pub fn le(n: usize, a: Letter, b: Letter) -> bool {
    matches!(compare(n, a, b), LetterOrder::Lt | LetterOrder::Eq)
}

#[inline]
pub fn lt(n: usize, a: Letter, b: Letter) -> bool {
    compare(n, a, b) == LetterOrder::Lt
}

/// A column with `top` over `bottom` is legal iff `bottom ≰ top`.
#[inline]
pub fn column_legal(n: usize, top: Letter, bottom: Letter) -> bool {
    !le(n, bottom, top)
}

/// All letters of the rank-`n` alphabet in chain order.
pub fn alphabet(n: usize) -> Vec<Letter> {
    let mut v: Vec<Letter> = (1..=n as i8).map(Letter).collect();
    v.extend((1..=n as i8).rev().map(|i| Letter(-i)));
    v
}

pub fn check_rank(n: usize) -> Result<()> {
    if n < 4 {
        return Err(CrystalError::UnsupportedRank(n));
    }
    Ok(())
}

/// A rectangular two-row tableau; the width-0 tableau is `∅`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    n: usize,
    top: Vec<Letter>,
    bottom: Vec<Letter>,
}

#[derive(Deserialize)]
struct RawTableau {
    n: usize,
    top: Vec<Letter>,
    bottom: Vec<Letter>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = CrystalError;
    fn try_from(raw: RawTableau) -> Result<Tableau> {
        Tableau::new(raw.n, raw.top, raw.bottom)
    }
}

impl Tableau {
    pub fn new(n: usize, top: Vec<Letter>, bottom: Vec<Letter>) -> Result<Tableau> {
        check_rank(n)?;
        if top.len() != bottom.len() {
            return Err(CrystalError::RaggedRows {
                top: top.len(),
                bottom: bottom.len(),
            });
        }
        if let Some(x) = top.iter().chain(bottom.iter()).find(|x| !x.is_valid(n)) {
            return Err(CrystalError::InvalidLetter { letter: x.0, n });
        }
        Ok(Tableau { n, top, bottom })
    }

    /// Build from signed integer rows; panics on malformed input (test and example helper).
    pub fn from_rows(n: usize, top: &[i8], bottom: &[i8]) -> Tableau {
        Tableau::new(
            n,
            top.iter().map(|&x| Letter(x)).collect(),
            bottom.iter().map(|&x| Letter(x)).collect(),
        )
        .expect("malformed tableau rows")
    }

    pub fn from_columns(n: usize, cols: &[(Letter, Letter)]) -> Tableau {
        Tableau {
            n,
            top: cols.iter().map(|c| c.0).collect(),
            bottom: cols.iter().map(|c| c.1).collect(),
        }
    }

    pub fn empty(n: usize) -> Tableau {
        Tableau {
            n,
            top: Vec::new(),
            bottom: Vec::new(),
        }
    }

    /// `u_k = (1/2)^k`, the classical highest weight vector of B(kϖ₂).
    pub fn highest(n: usize, k: usize) -> Tableau {
        Tableau {
            n,
            top: vec![Letter(1); k],
            bottom: vec![Letter(2); k],
        }
    }

    /// `(1/1̄)^s`.
    pub fn one_onebar(n: usize, s: usize) -> Tableau {
        Tableau {
            n,
            top: vec![Letter(1); s],
            bottom: vec![Letter(-1); s],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn top(&self) -> &[Letter] {
        &self.top
    }

    pub fn bottom(&self) -> &[Letter] {
        &self.bottom
    }

    pub fn column(&self, i: usize) -> (Letter, Letter) {
        (self.top[i], self.bottom[i])
    }

    pub fn columns(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }

    /// Column word `b₁a₁b₂a₂⋯b_ka_k`.
    pub fn column_word(&self) -> Vec<Letter> {
        let mut w = Vec::with_capacity(2 * self.width());
        for (a, b) in self.columns() {
            w.push(b);
            w.push(a);
        }
        w
    }

    /// Inverse of [`Tableau::column_word`].
    pub fn from_column_word(n: usize, w: &[Letter]) -> Tableau {
        assert!(w.len().is_multiple_of(2), "column word of odd length");
        Tableau {
            n,
            top: w.iter().skip(1).step_by(2).copied().collect(),
            bottom: w.iter().step_by(2).copied().collect(),
        }
    }

    /// Replace the letter at column-word position `p`.
    pub fn with_word_letter(&self, p: usize, x: Letter) -> Tableau {
        let mut t = self.clone();
        if p.is_multiple_of(2) {
            t.bottom[p / 2] = x;
        } else {
            t.top[p / 2] = x;
        }
        t
    }

    pub fn same_rank(&self, other: &Tableau) -> Result<()> {
        if self.n != other.n {
            return Err(CrystalError::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn weight(&self) -> ClassicalWeight {
        let mut w = vec![0i32; self.n];
        for x in self.top.iter().chain(self.bottom.iter()) {
            w[x.index() - 1] += if x.is_barred() { -1 } else { 1 };
        }
        ClassicalWeight(w)
    }

    /// Rows weakly increase.
    pub fn rows_increase(&self) -> bool {
        let n = self.n;
        self.top.windows(2).all(|p| le(n, p[0], p[1]))
            && self.bottom.windows(2).all(|p| le(n, p[0], p[1]))
    }

    /// No column `(a/b)` with `b ≤ a`.
    pub fn columns_legal(&self) -> bool {
        self.columns().all(|(a, b)| column_legal(self.n, a, b))
    }

    /// A bar-pair configuration `(a/·)(a/ā)` or `(a/ā)(·/ā)`.
    pub fn has_bar_pair_configuration(&self) -> bool {
        (1..self.width()).any(|i| {
            let (a0, b0) = self.column(i - 1);
            let (a1, b1) = self.column(i);
            (a0 == a1 && b1 == a1.bar()) || (b0 == a0.bar() && b1 == b0)
        })
    }

    /// An `(n-1/n) ⋯ (n/n-1̄)` or `(n-1/n̄) ⋯ (n̄/n-1̄)` configuration, columns anywhere.
    pub fn has_n_pair_configuration(&self) -> bool {
        let n = self.n as i8;
        let pats = [
            ((n - 1, n), (n, -(n - 1))),
            ((n - 1, -n), (-n, -(n - 1))),
        ];
        let cols: Vec<(i8, i8)> = self.columns().map(|(a, b)| (a.0, b.0)).collect();
        pats.iter().any(|(p, q)| {
            cols.iter()
                .position(|c| c == p)
                .is_some_and(|i| cols[i + 1..].contains(q))
        })
    }

    /// The same configuration with the two columns adjacent.
    pub fn has_adjacent_n_pair(&self) -> bool {
        let n = self.n as i8;
        self.columns().zip(self.columns().skip(1)).any(|(c, d)| {
            let (c, d) = ((c.0 .0, c.1 .0), (d.0 .0, d.1 .0));
            (c == (n - 1, n) && d == (n, -(n - 1))) || (c == (n - 1, -n) && d == (-n, -(n - 1)))
        })
    }

    /// A `(1/1̄)` column.
    pub fn has_one_onebar_column(&self) -> bool {
        self.columns().any(|(a, b)| a == Letter(1) && b == Letter(-1))
    }

    /// Membership in B(kϖ₂), k = width: all five column and row conditions.
    pub fn is_classical(&self) -> bool {
        self.rows_increase()
            && self.columns_legal()
            && !self.has_bar_pair_configuration()
            && !self.has_adjacent_n_pair()
            && !self.has_one_onebar_column()
    }

    /// Membership in 𝒯(s), s = width: increasing rows, legal columns and no
    /// n-pair configuration. The n-pair test must be the global one here, since
    /// the adjacent form is only equivalent when bar-pair configurations are excluded.
    pub fn in_t_set(&self) -> bool {
        self.rows_increase() && self.columns_legal() && !self.has_n_pair_configuration()
    }

    pub fn require_classical(&self) -> Result<()> {
        if self.is_classical() {
            Ok(())
        } else {
            Err(CrystalError::NotClassical(self.to_string()))
        }
    }

    pub fn require_t_set(&self) -> Result<()> {
        if self.in_t_set() {
            Ok(())
        } else {
            Err(CrystalError::NotInTSet(self.to_string()))
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("tableau serializes")
    }
}

impl fmt::Display for Tableau {
    /// Two lines, top row over bottom row; `∅` for width 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let row = |r: &[Letter]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "{} / {}", row(&self.top), row(&self.bottom))
    }
}

/// A weight in the ε basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassicalWeight(pub Vec<i32>);

impl ClassicalWeight {
    pub fn zero(n: usize) -> ClassicalWeight {
        ClassicalWeight(vec![0; n])
    }

    /// `kϖ₂ = k(ε₁ + ε₂)`.
    pub fn k_varpi2(n: usize, k: i32) -> ClassicalWeight {
        let mut w = vec![0; n];
        w[0] = k;
        w[1] = k;
        ClassicalWeight(w)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `⟨h_i, wt⟩` for a classical color `1 ≤ i ≤ n`; `i = 0` gives the level-zero
    /// affine pairing `-(wt₁ + wt₂)`.
    pub fn pair(&self, i: usize) -> i32 {
        let n = self.n();
        let w = &self.0;
        match i {
            0 => -(w[0] + w[1]),
            i if i < n => w[i - 1] - w[i],
            _ => w[n - 2] + w[n - 1],
        }
    }

    /// Coefficients in the simple roots of `self` (which must lie in the root
    /// lattice); `None` if some coefficient is not integral.
    pub fn simple_root_coords(&self) -> Option<Vec<i32>> {
        let n = self.n();
        let d = &self.0;
        let mut c = vec![0; n];
        let mut acc = 0;
        for i in 0..n - 2 {
            acc += d[i];
            c[i] = acc;
        }
        let s = acc + d[n - 2];
        if (s + d[n - 1]) % 2 != 0 {
            return None;
        }
        c[n - 1] = (s + d[n - 1]) / 2;
        c[n - 2] = (s - d[n - 1]) / 2;
        Some(c)
    }

    pub fn sub(&self, other: &ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &ClassicalWeight) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Build a classical weight from Dynkin labels `a₁..a_n`; `None` if the
    /// weight is not integral in the ε basis (a spin weight).
    pub fn from_dynkin(labels: &[i32]) -> Option<ClassicalWeight> {
        let n = labels.len();
        // doubled ε coordinates
        let mut w2 = vec![0i32; n];
        for (i, &a) in labels.iter().enumerate() {
            let idx = i + 1;
            if idx <= n - 2 {
                for c in w2.iter_mut().take(idx) {
                    *c += 2 * a;
                }
            } else {
                for c in w2.iter_mut().take(n - 1) {
                    *c += a;
                }
                w2[n - 1] += if idx == n - 1 { -a } else { a };
            }
        }
        if w2.iter().any(|x| x % 2 != 0) {
            return None;
        }
        Some(ClassicalWeight(w2.into_iter().map(|x| x / 2).collect()))
    }

    pub fn to_dynkin(&self) -> Vec<i32> {
        (1..=self.n()).map(|i| self.pair(i)).collect()
    }
}

/// A level-zero-or-not weight in P_cl, as coefficients of `Λ₀..Λ_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AffineWeight(pub Vec<i64>);

impl AffineWeight {
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    /// `⟨c, λ⟩` with `c = h₀ + h₁ + 2h₂ + ⋯ + 2h_{n-2} + h_{n-1} + h_n`.
    pub fn level(&self) -> i64 {
        level(&self.0)
    }

    pub fn pair(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&k| k >= 0)
    }

    /// `Λ_i` for rank `n`.
    pub fn fundamental(n: usize, i: usize) -> AffineWeight {
        let mut v = vec![0; n + 1];
        v[i] = 1;
        AffineWeight(v)
    }
}

/// The level of `Σ k_i Λ_i` given as a coefficient slice of length n+1.
pub fn level(k: &[i64]) -> i64 {
    let n = k.len() - 1;
    k.iter()
        .enumerate()
        .map(|(i, &c)| if i >= 2 && i <= n - 2 { 2 * c } else { c })
        .sum()
}

/// The central-element multiplicity of `h_i`.
pub fn level_coefficient(n: usize, i: usize) -> i64 {
    if i >= 2 && i + 2 <= n {
        2
    } else {
        1
    }
}

/// All dominant weights of level `s` in P_cl for rank `n`, in lexicographic order.
pub fn dominant_weights_of_level(n: usize, s: usize) -> Vec<AffineWeight> {
    let coeffs: Vec<i64> = (0..=n).map(|i| level_coefficient(n, i)).collect();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n + 1];
    fn rec(i: usize, left: i64, coeffs: &[i64], cur: &mut Vec<i64>, out: &mut Vec<AffineWeight>) {
        if i == coeffs.len() {
            if left == 0 {
                out.push(AffineWeight(cur.clone()));
            }
            return;
        }
        let mut k = 0;
        while k * coeffs[i] <= left {
            cur[i] = k;
            rec(i + 1, left - k * coeffs[i], coeffs, cur, out);
            k += 1;
        }
        cur[i] = 0;
    }
    rec(0, s as i64, &coeffs, &mut cur, &mut out);
    out.sort();
    out
}
