//! The drop map D_{2,s}, the fill map F_{2,s}, Υ and the embeddings ι_i^j.

use crate::classical::branch_hw;
use crate::error::{CrystalError, Result};
use crate::model::{le, Letter, Tableau};
use crate::plactic::{forward_shift_top, reverse_shift_top, SkewTableau};
use serde::Serialize;

/// Which of the three boundary patterns identified the configuration.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub enum ConfigVariant {
    /// `(a/b)(a/ā)^m(c/d)`: the left neighbour has top `a`.
    LeftTop,
    /// `(b/c)(a/ā)^m(d/ā)`: the right neighbour has bottom `ā`.
    RightBottom,
    /// `(b/c)(a/ā)^{m+1}(d/e)`: a bare run of length at least two.
    Run,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AConfiguration {
    pub a: Letter,
    pub m: usize,
    /// First column of the `m` columns removed by the drop map.
    pub start: usize,
    pub variant: ConfigVariant,
}

/// `(a/ā)` for `a ∈ {1..n, n̄}`. Barred tops other than `n̄` never sit over
/// their partner in a legal column, so this is just `b = ā`.
fn bar_pair(t: &Tableau, i: usize) -> bool {
    let (a, b) = t.column(i);
    b == a.bar()
}

fn scan_configurations(t: &Tableau) -> Vec<AConfiguration> {
    let k = t.width();
    let mut out = Vec::new();
    let mut i = 0;
    while i < k {
        if !bar_pair(t, i) {
            i += 1;
            continue;
        }
        let col = t.column(i);
        let mut j = i + 1;
        while j < k && t.column(j) == col {
            j += 1;
        }
        let len = j - i;
        let a = col.0;
        let left = (i > 0).then(|| t.column(i - 1));
        let right = (j < k).then(|| t.column(j));
        if left.is_some_and(|l| l.0 == a) {
            out.push(AConfiguration { a, m: len, start: i, variant: ConfigVariant::LeftTop });
        } else if right.is_some_and(|r| r.1 == a.bar()) {
            out.push(AConfiguration { a, m: len, start: i, variant: ConfigVariant::RightBottom });
        } else if len >= 2 {
            out.push(AConfiguration { a, m: len - 1, start: i, variant: ConfigVariant::Run });
        }
        i = j;
    }
    out
}

/// The unique maximal a-configuration of `t ∈ 𝒯(s)`, or `None` when `t` is
/// classical or `t = (1/1̄)^s`.
pub fn find_a_configuration(t: &Tableau) -> Result<Option<AConfiguration>> {
    t.require_t_set()?;
    if is_one_onebar(t) {
        return Ok(None);
    }
    let found = scan_configurations(t);
    match found.len() {
        0 => Ok(None),
        1 => Ok(found.into_iter().next()),
        _ => Err(CrystalError::InvalidConfig(format!(
            "{} a-configurations in {t}",
            found.len()
        ))),
    }
}

fn is_one_onebar(t: &Tableau) -> bool {
    !t.is_empty() && t.columns().all(|c| c == (Letter(1), Letter(-1)))
}

/// `D_{2,s}`: returns the dropped tableau and its width `k`.
pub fn drop(t: &Tableau) -> Result<(Tableau, usize)> {
    t.require_t_set()?;
    if is_one_onebar(t) {
        return Ok((Tableau::empty(t.n()), 0));
    }
    if t.is_classical() {
        return Ok((t.clone(), t.width()));
    }
    let c = find_a_configuration(t)?
        .ok_or_else(|| CrystalError::InvalidConfig(format!("no a-configuration in {t}")))?;
    let cols: Vec<(Letter, Letter)> = t
        .columns()
        .enumerate()
        .filter(|(i, _)| *i < c.start || *i >= c.start + c.m)
        .map(|(_, x)| x)
        .collect();
    let out = Tableau::from_columns(t.n(), &cols);
    let k = out.width();
    Ok((out, k))
}

/// A candidate place where the fill map may insert columns.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FillingLocation {
    /// Insert between columns `index` and `index + 1` (1-based); 0 prepends, `k` appends.
    pub index: usize,
    pub column: (Letter, Letter),
}

/// Interior filling locations of `t`, one entry per satisfied inequality pair.
pub fn filling_locations(t: &Tableau) -> Vec<FillingLocation> {
    let n = t.n();
    let mut out = Vec::new();
    for i in 1..t.width() {
        let (a1, b1) = t.column(i - 1);
        let (a2, b2) = t.column(i);
        if le(n, b1, a1.bar()) && le(n, a1.bar(), b2) {
            out.push(FillingLocation { index: i, column: (a1, a1.bar()) });
        }
        if le(n, a1, b2.bar()) && le(n, b2.bar(), a2) {
            out.push(FillingLocation { index: i, column: (b2.bar(), b2) });
        }
    }
    out
}

fn insert_columns(t: &Tableau, at: usize, col: (Letter, Letter), count: usize) -> Tableau {
    let mut cols: Vec<(Letter, Letter)> = t.columns().collect();
    cols.splice(at..at, std::iter::repeat_n(col, count));
    Tableau::from_columns(t.n(), &cols)
}

/// `F_{2,s}`: the inverse of the drop map.
pub fn fill(t: &Tableau, s: usize) -> Result<Tableau> {
    let k = t.width();
    if k > s {
        return Err(CrystalError::InvalidConfig(format!("width {k} exceeds s = {s}")));
    }
    if k == s {
        return Ok(t.clone());
    }
    if k == 0 {
        return Ok(Tableau::one_onebar(t.n(), s));
    }
    let locs = filling_locations(t);
    if let Some(first) = locs.first() {
        let out = insert_columns(t, first.index, first.column, s - k);
        debug_assert!(
            locs.iter()
                .all(|l| insert_columns(t, l.index, l.column, s - k) == out),
            "filling locations disagree for {t}"
        );
        return Ok(out);
    }
    let (ak, _) = t.column(k - 1);
    let appended = insert_columns(t, k, (ak, ak.bar()), s - k);
    if appended.in_t_set() && !appended.is_classical() {
        return Ok(appended);
    }
    let (_, b1) = t.column(0);
    let prepended = insert_columns(t, 0, (b1.bar(), b1), s - k);
    if prepended.in_t_set() && !prepended.is_classical() {
        return Ok(prepended);
    }
    Err(CrystalError::InvalidConfig(format!("no filling location for {t}")))
}

/// `Υ_{s'}^{s} = F_{2,s} ∘ D_{2,s'}`.
pub fn upsilon(t: &Tableau, s: usize) -> Result<Tableau> {
    let (d, _) = drop(t)?;
    fill(&d, s)
}

/// The null configuration of size `k` as (top, bottom) rows.
pub fn null_configuration(k: usize) -> (Vec<Letter>, Vec<Letter>) {
    let h = k / 2;
    let mut top = vec![Letter(1); h];
    let mut bottom = vec![Letter(-2); h];
    if k % 2 == 1 {
        top.push(Letter(2));
        bottom.push(Letter(-2));
    }
    top.extend(std::iter::repeat_n(Letter(2), h));
    bottom.extend(std::iter::repeat_n(Letter(-1), h));
    (top, bottom)
}

/// The parts of a classical tableau on which `ẽ_i, f̃_i` for `i ≥ 2` act trivially.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Strip {
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    pub t1: usize,
    pub t2: usize,
    /// Shape `(k, k - t₂)/(t₁)`.
    pub skew: SkewTableau,
}

/// `(r₁, r₂, r₃)` of a U_q(D_{n-1}) highest weight tableau.
fn counts_of_hw(h: &Tableau) -> (usize, usize, usize) {
    let count = |c: (i8, i8)| h.columns().filter(|x| (x.0 .0, x.1 .0) == c).count();
    let a = count((1, -2));
    let m = count((2, -2));
    let b = count((2, -1));
    let p = a.min(b);
    let ones = h.top().iter().filter(|&&x| x == Letter(1)).count();
    let onebars = h.bottom().iter().filter(|&&x| x == Letter(-1)).count();
    (ones - p, 2 * p + m, onebars - p)
}

/// Remove the leading 1's, the null configuration and trailing 1̄'s.
pub fn strip(t: &Tableau) -> Strip {
    let k = t.width();
    let (r1, r2, r3) = counts_of_hw(&branch_hw(t));
    let (t1, t2) = (r1 + r2, r2 + r3);
    let skew = SkewTableau {
        n: t.n(),
        top_offset: t1,
        top: t.top()[t1..].to_vec(),
        bottom_offset: 0,
        bottom: t.bottom()[..k - t2].to_vec(),
    };
    Strip { r1, r2, r3, t1, t2, skew }
}

/// Inverse of [`strip`]: complete a skew tableau of shape `(j, j - t₂)/(t₁)`.
pub fn refill(skew: &SkewTableau, t1: usize, t2: usize, j: usize) -> Result<Tableau> {
    let r2 = (t1 + t2).saturating_sub(j);
    let (r1, r3) = (t1 - r2, t2 - r2);
    let (nt, nb) = null_configuration(r2);
    let mut top = vec![Letter(1); r1];
    top.extend(nt);
    top.extend(skew.top.iter().copied());
    let mut bottom = skew.bottom.clone();
    bottom.extend(nb);
    bottom.extend(std::iter::repeat_n(Letter(-1), r3));
    let out = Tableau::new(skew.n, top, bottom)?;
    if out.width() != j {
        return Err(CrystalError::InvalidConfig(format!(
            "refill to width {j} produced {out}"
        )));
    }
    Ok(out)
}

/// `ι_i^j` on the classical (dropped) form: `t ∈ B(iϖ₂)` to `B(jϖ₂)`.
pub fn iota_classical(t: &Tableau, j: usize) -> Result<Option<Tableau>> {
    let i = t.width();
    if j == i {
        return Ok(Some(t.clone()));
    }
    let st = strip(t);
    if j > i {
        let mut skew = st.skew;
        for _ in i..j {
            skew = reverse_shift_top(&skew)?;
        }
        let d = j - i;
        return refill(&skew, st.t1 + d, st.t2 + d, j).map(Some);
    }
    let d = i - j;
    if st.t1 < d || st.t2 < d {
        return Ok(None);
    }
    let mut skew = st.skew;
    for _ in 0..d {
        match forward_shift_top(&skew)? {
            Some(s) => skew = s,
            None => return Ok(None),
        }
    }
    let cand = refill(&skew, st.t1 - d, st.t2 - d, j)?;
    if !cand.is_classical() {
        return Ok(None);
    }
    // Only an element of the image has an inverse.
    match iota_classical(&cand, i)? {
        Some(back) if &back == t => Ok(Some(cand)),
        _ => Ok(None),
    }
}

/// `ι_i^j` on B̃^{2,s}: `t` is a width-`s` element of `B(iϖ₂) ⊂ 𝒯(s)`.
pub fn iota(t: &Tableau, i: usize, j: usize) -> Result<Option<Tableau>> {
    let s = t.width();
    let (d, k) = drop(t)?;
    if k != i {
        return Err(CrystalError::InvalidConfig(format!(
            "{t} lies in component {k}, not {i}"
        )));
    }
    if j > s {
        return Ok(None);
    }
    match iota_classical(&d, j)? {
        Some(x) => fill(&x, s).map(Some),
        None => Ok(None),
    }
}

/// Intermediate stages of `ι_i^j` for `j > i`, for display.
#[derive(Clone, Debug, Serialize)]
pub struct IotaTrace {
    pub dropped: Tableau,
    pub stripped: SkewTableau,
    pub slid: SkewTableau,
    pub refilled: Tableau,
    pub result: Tableau,
}

pub fn iota_trace(t: &Tableau, j: usize) -> Result<IotaTrace> {
    let s = t.width();
    let (dropped, i) = drop(t)?;
    if j <= i || j > s {
        return Err(CrystalError::InvalidConfig(format!(
            "trace needs {i} < j = {j} <= {s}"
        )));
    }
    let st = strip(&dropped);
    let mut slid = st.skew.clone();
    for _ in i..j {
        slid = reverse_shift_top(&slid)?;
    }
    let d = j - i;
    let refilled = refill(&slid, st.t1 + d, st.t2 + d, j)?;
    let result = fill(&refilled, s)?;
    Ok(IotaTrace {
        dropped,
        stripped: st.skew,
        slid,
        refilled,
        result,
    })
}

/// Smallest `ℓ` with `t ∈ ι_ℓ^k(B(ℓϖ₂))` for classical `t` of width `k`.
pub fn ell(t: &Tableau) -> Result<usize> {
    let mut cur = t.clone();
    while cur.width() > 0 {
        match iota_classical(&cur, cur.width() - 1)? {
            Some(x) => cur = x,
            None => break,
        }
    }
    Ok(cur.width())
}
