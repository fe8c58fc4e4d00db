//! Type D column admissibility and the two-row sliding engine.
//!
//! Slides are hole walks on a two-row grid. Every move is a plain jeu de taquin
//! step or one of the two type D exchanges: a barred pair `(x, x̄)` trading
//! for `(x±1, x±1̄)`, or the `n/n̄` pair trading for `n-1/n-1̄`. A
//! configuration outside those moves is reported as [`CrystalError::NoRule`].

use crate::error::{CrystalError, Result};
use crate::model::{column_legal, le, lt, Letter, Tableau};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

static COLUMN_REDUCE_CALLS: AtomicUsize = AtomicUsize::new(0);

/// How many times [`column_reduce`] has run in this process.
pub fn column_reduce_calls() -> usize {
    COLUMN_REDUCE_CALLS.load(Ordering::Relaxed)
}

/// `N(z)`: letters `x` of `c` with `x ≤ z` or `x ≥ z̄`.
fn n_of(n: usize, c: &[Letter], z: Letter) -> usize {
    c.iter()
        .filter(|&&x| le(n, x, z) || le(n, z.bar(), x))
        .count()
}

/// A column word `x_L ⋯ x₁`, listed in that order (largest letter first),
/// with `x_{i+1} ≰ x_i`.
pub fn is_column_word(n: usize, c: &[Letter]) -> bool {
    c.windows(2).all(|p| !le(n, p[0], p[1]))
}

pub fn is_admissible(n: usize, c: &[Letter]) -> bool {
    if c.len() > n {
        return false;
    }
    (1..=n as i8).map(Letter).all(|z| {
        !(c.contains(&z) && c.contains(&z.bar())) || n_of(n, c, z) <= z.index()
    })
}

/// Column reduction: erase the pair `(z, z̄)` for the lowest unbarred `z` with `N(z) > z`.
pub fn column_reduce(n: usize, c: &[Letter]) -> Result<Vec<Letter>> {
    if is_admissible(n, c) {
        return Err(CrystalError::AlreadyAdmissible);
    }
    COLUMN_REDUCE_CALLS.fetch_add(1, Ordering::Relaxed);
    log::warn!("column_reduce invoked on a non-admissible column of length {}", c.len());
    for z in (1..=n as i8).map(Letter) {
        if !(c.contains(&z) && c.contains(&z.bar())) || n_of(n, c, z) <= z.index() {
            continue;
        }
        let mut out = c.to_vec();
        if z.index() < n {
            out.retain(|&x| x != z && x != z.bar());
        } else {
            let p = c
                .windows(2)
                .position(|w| w[0].index() == n && w[1].index() == n && w[0] != w[1])
                .ok_or_else(|| CrystalError::InvalidConfig("no consecutive (n, n̄) pair".into()))?;
            out.drain(p..p + 2);
        }
        return Ok(out);
    }
    Err(CrystalError::InvalidConfig(
        "non-admissible column without a reducible pair".into(),
    ))
}

/// A two-row skew tableau. Row `r` occupies columns `offset_r .. offset_r + len_r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewTableau {
    pub n: usize,
    pub top_offset: usize,
    pub top: Vec<Letter>,
    pub bottom_offset: usize,
    pub bottom: Vec<Letter>,
}

impl SkewTableau {
    pub fn straight(n: usize, top: Vec<Letter>, bottom: Vec<Letter>) -> SkewTableau {
        SkewTableau {
            n,
            top_offset: 0,
            top,
            bottom_offset: 0,
            bottom,
        }
    }

    pub fn from_tableau(t: &Tableau) -> SkewTableau {
        SkewTableau::straight(t.n(), t.top().to_vec(), t.bottom().to_vec())
    }

    pub fn is_straight(&self) -> bool {
        self.top_offset == 0 && self.bottom_offset == 0
    }

    /// Outer shape `(p, q)` and inner shape `(r₁, r₂)`.
    pub fn shape(&self) -> ((usize, usize), (usize, usize)) {
        (
            (self.top_offset + self.top.len(), self.bottom_offset + self.bottom.len()),
            (self.top_offset, self.bottom_offset),
        )
    }

    /// Column word: columns left to right, bottom cell before top cell.
    pub fn column_word(&self) -> Vec<Letter> {
        let g = Grid::from_skew(self);
        let mut w = Vec::new();
        for c in 0..g.width() {
            if let Some(b) = g.bot(c) {
                w.push(b);
            }
            if let Some(a) = g.top(c) {
                w.push(a);
            }
        }
        w
    }

    /// Rows weakly increase, the inner shape is a partition, the outer shape
    /// is a partition and every full column is legal.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        let ((p, q), (r1, r2)) = self.shape();
        if !self.bottom.is_empty() && (r2 > r1 || q > p) {
            return false;
        }
        if !self.top.windows(2).all(|w| le(n, w[0], w[1]))
            || !self.bottom.windows(2).all(|w| le(n, w[0], w[1]))
        {
            return false;
        }
        let g = Grid::from_skew(self);
        (0..g.width()).all(|c| match (g.top(c), g.bot(c)) {
            (Some(a), Some(b)) => column_legal(n, a, b),
            _ => true,
        })
    }

    pub fn to_tableau(&self) -> Option<Tableau> {
        if self.is_straight() && self.top.len() == self.bottom.len() {
            Tableau::new(self.n, self.top.clone(), self.bottom.clone()).ok()
        } else {
            None
        }
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |off: usize, r: &[Letter]| {
            std::iter::repeat_n("·".to_string(), off)
                .chain(r.iter().map(|x| x.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "{} / {}",
            row(self.top_offset, &self.top),
            row(self.bottom_offset, &self.bottom)
        )
    }
}

/// Dense working form: `None` is an empty cell.
#[derive(Clone, Debug)]
struct Grid {
    n: usize,
    top: Vec<Option<Letter>>,
    bot: Vec<Option<Letter>>,
}

impl Grid {
    fn from_skew(s: &SkewTableau) -> Grid {
        let w = (s.top_offset + s.top.len()).max(s.bottom_offset + s.bottom.len());
        let mut top = vec![None; w + 1];
        let mut bot = vec![None; w + 1];
        for (i, &x) in s.top.iter().enumerate() {
            top[s.top_offset + i] = Some(x);
        }
        for (i, &x) in s.bottom.iter().enumerate() {
            bot[s.bottom_offset + i] = Some(x);
        }
        Grid { n: s.n, top, bot }
    }

    fn width(&self) -> usize {
        self.top.len()
    }

    fn top(&self, c: usize) -> Option<Letter> {
        self.top.get(c).copied().flatten()
    }

    fn bot(&self, c: usize) -> Option<Letter> {
        self.bot.get(c).copied().flatten()
    }

    fn ensure(&mut self, c: usize) {
        if c >= self.top.len() {
            self.top.resize(c + 1, None);
            self.bot.resize(c + 1, None);
        }
    }

    fn to_skew(&self) -> SkewTableau {
        let row = |r: &[Option<Letter>]| -> (usize, Vec<Letter>) {
            let off = r.iter().position(|x| x.is_some()).unwrap_or(0);
            let cells: Vec<Letter> = r.iter().skip(off).map_while(|x| *x).collect();
            debug_assert!(r.iter().skip(off + cells.len()).all(|x| x.is_none()));
            (off, cells)
        };
        let (to, t) = row(&self.top);
        let (bo, b) = row(&self.bot);
        SkewTableau {
            n: self.n,
            top_offset: if t.is_empty() { 0 } else { to },
            top: t,
            bottom_offset: if b.is_empty() { 0 } else { bo },
            bottom: b,
        }
    }

    fn no_rule(&self, what: &str) -> CrystalError {
        CrystalError::NoRule(format!("{what} in {}", self.to_skew()))
    }

    /// Forward slide from a hole at top cell `c`. Returns `true` if the
    /// hole exits through the top row, `false` if through the bottom row.
    fn slide_from_top(&mut self, mut c: usize) -> Result<bool> {
        let n = self.n;
        loop {
            self.ensure(c + 1);
            let r = self.top(c + 1);
            let b = self.bot(c);
            let z = self.bot(c + 1);
            let go_up = match (r, b) {
                (None, None) => return Ok(true),
                (Some(_), None) => false,
                (None, Some(_)) => true,
                (Some(r), Some(b)) => {
                    // `B = R` with `Z = R̄` is a pair exchange on a left move, not an up move.
                    if z == Some(r.bar()) && le(n, r, b) {
                        false
                    } else {
                        le(n, b, r)
                    }
                }
            };
            if go_up {
                self.top[c] = b;
                self.bot[c] = None;
                return self.slide_from_bottom(c).map(|_| false);
            }
            let r = r.expect("left move needs a right neighbour");
            match (z, b) {
                (Some(zv), Some(bv)) if zv == r.bar() => {
                    let idx = r.index();
                    if !r.is_barred() && (2..n).contains(&idx) && le(n, r, bv) && le(n, bv, r.bar())
                    {
                        // pair exchange on a left move
                        let x1 = Letter(idx as i8 - 1);
                        self.top[c] = Some(x1);
                        self.bot[c + 1] = Some(x1.bar());
                    } else if idx == n && bv == r.bar() {
                        // n/n̄ exchange on a left move
                        let x1 = Letter(n as i8 - 1);
                        self.top[c] = Some(x1);
                        self.bot[c + 1] = Some(x1.bar());
                    } else {
                        return Err(self.no_rule("left move onto a barred partner"));
                    }
                }
                _ => {
                    if let Some(bv) = b {
                        if !column_legal(n, r, bv) {
                            return Err(self.no_rule("illegal column after left move"));
                        }
                    }
                    self.top[c] = Some(r);
                }
            }
            self.top[c + 1] = None;
            c += 1;
        }
    }

    /// Forward slide from a hole at bottom cell `c`.
    fn slide_from_bottom(&mut self, mut c: usize) -> Result<()> {
        let n = self.n;
        loop {
            self.ensure(c + 1);
            let Some(z) = self.bot(c + 1) else {
                return Ok(());
            };
            let x = self.top(c);
            let y = self.top(c + 1);
            match x {
                Some(xv) if z == xv.bar() => {
                    let idx = xv.index();
                    let yv = y.ok_or_else(|| self.no_rule("bottom move under a short top row"))?;
                    if !xv.is_barred() && (1..n - 1).contains(&idx) {
                        let big = Letter(idx as i8 + 1);
                        if !(le(n, big, yv) && le(n, yv, big.bar())) {
                            return Err(self.no_rule("pair exchange bound fails"));
                        }
                        self.top[c] = Some(big);
                        self.bot[c] = Some(big.bar());
                    } else if !xv.is_barred() && idx == n - 1 && yv.index() == n {
                        // n/n̄ exchange on a bottom move
                        self.top[c] = Some(yv);
                        self.bot[c] = Some(yv.bar());
                    } else {
                        return Err(self.no_rule("bottom move onto a barred partner"));
                    }
                }
                _ => {
                    if let Some(xv) = x {
                        if !column_legal(n, xv, z) {
                            return Err(self.no_rule("illegal column after bottom move"));
                        }
                    }
                    self.bot[c] = Some(z);
                }
            }
            self.bot[c + 1] = None;
            c += 1;
        }
    }

    /// Reverse slide: a hole enters at top cell `end` (just past the top row)
    /// and walks left to column `stop`.
    fn reverse_top(&mut self, end: usize, stop: usize) -> Result<()> {
        let n = self.n;
        self.ensure(end);
        let mut c = end;
        while c > stop {
            let xv = self.top(c - 1).expect("reverse slide through a hole");
            match self.bot(c) {
                Some(z) if z == xv.bar() => {
                    let idx = xv.index();
                    let y = self
                        .bot(c - 1)
                        .ok_or_else(|| self.no_rule("reverse move without a bottom neighbour"))?;
                    if !xv.is_barred() && (1..n - 1).contains(&idx) {
                        let big = Letter(idx as i8 + 1);
                        if !(le(n, big, y) && le(n, y, big.bar())) {
                            return Err(self.no_rule("reverse pair exchange bound fails"));
                        }
                        self.top[c] = Some(big);
                        self.bot[c] = Some(big.bar());
                    } else if !xv.is_barred() && idx == n - 1 && y.index() == n {
                        self.top[c] = Some(y.bar());
                        self.bot[c] = Some(y);
                    } else {
                        return Err(self.no_rule("reverse move onto a barred partner"));
                    }
                }
                Some(z) => {
                    if !column_legal(n, xv, z) {
                        return Err(self.no_rule("illegal column after reverse move"));
                    }
                    self.top[c] = Some(xv);
                }
                None => self.top[c] = Some(xv),
            }
            self.top[c - 1] = None;
            c -= 1;
        }
        Ok(())
    }
}

/// Order in which inner corners are vacated during rectification.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CornerOrder {
    /// Bottom-row holes first, then top-row holes right to left.
    BottomFirst,
    /// Top-row holes whenever one is an inner corner.
    TopFirst,
}

/// Rectify a two-row skew tableau by forward slides into inner corners.
pub fn rectify_two_row(s: &SkewTableau) -> Result<SkewTableau> {
    rectify_with(s, CornerOrder::BottomFirst)
}

pub fn rectify_with(s: &SkewTableau, order: CornerOrder) -> Result<SkewTableau> {
    let mut g = Grid::from_skew(s);
    let mut top_off = s.top_offset;
    let mut bot_off = if s.bottom.is_empty() { 0 } else { s.bottom_offset };
    loop {
        let top_corner = top_off > bot_off;
        let bot_corner = bot_off > 0;
        let take_top = match (top_corner, bot_corner) {
            (false, false) => break,
            (true, false) => true,
            (false, true) => false,
            (true, true) => order == CornerOrder::TopFirst,
        };
        if take_top {
            top_off -= 1;
            g.slide_from_top(top_off)?;
        } else {
            bot_off -= 1;
            g.slide_from_bottom(bot_off)?;
        }
    }
    let out = g.to_skew();
    debug_assert!(out.is_straight());
    Ok(out)
}

/// Shift the top row right by one column via a reverse slide.
pub fn reverse_shift_top(s: &SkewTableau) -> Result<SkewTableau> {
    let mut g = Grid::from_skew(s);
    let end = s.top_offset + s.top.len();
    g.reverse_top(end, s.top_offset)?;
    let mut out = g.to_skew();
    out.top_offset = s.top_offset + 1;
    Ok(out)
}

/// Shift the top row left by one column with a forward slide from the top
/// inner corner. Returns `None` if the hole leaves through the bottom row.
pub fn forward_shift_top(s: &SkewTableau) -> Result<Option<SkewTableau>> {
    if s.top_offset == 0 {
        return Ok(None);
    }
    let mut g = Grid::from_skew(s);
    let exited_top = g.slide_from_top(s.top_offset - 1)?;
    if !exited_top {
        return Ok(None);
    }
    let mut out = g.to_skew();
    if out.top.is_empty() {
        out.top_offset = s.top_offset - 1;
    }
    Ok(Some(out))
}

/// Classical (type A) jeu de taquin rectification; a test oracle for
/// words in which every letter is unbarred or every letter is barred.
pub fn jdt_type_a(s: &SkewTableau) -> SkewTableau {
    let n = s.n;
    let mut g = Grid::from_skew(s);
    let mut top_off = s.top_offset;
    let mut bot_off = if s.bottom.is_empty() { 0 } else { s.bottom_offset };
    loop {
        if bot_off > 0 {
            bot_off -= 1;
            let mut c = bot_off;
            while let Some(z) = g.bot(c + 1) {
                g.bot[c] = Some(z);
                g.bot[c + 1] = None;
                c += 1;
                g.ensure(c + 1);
            }
        } else if top_off > 0 {
            top_off -= 1;
            let mut c = top_off;
            let mut in_top = true;
            loop {
                g.ensure(c + 1);
                if in_top {
                    match (g.top(c + 1), g.bot(c)) {
                        (None, None) => break,
                        (Some(r), b) if b.is_none_or(|b| lt(n, r, b)) => {
                            g.top[c] = Some(r);
                            g.top[c + 1] = None;
                            c += 1;
                        }
                        (_, b) => {
                            g.top[c] = b;
                            g.bot[c] = None;
                            in_top = false;
                        }
                    }
                } else {
                    match g.bot(c + 1) {
                        None => break,
                        Some(z) => {
                            g.bot[c] = Some(z);
                            g.bot[c + 1] = None;
                            c += 1;
                        }
                    }
                }
            }
        } else {
            break;
        }
    }
    g.to_skew()
}
