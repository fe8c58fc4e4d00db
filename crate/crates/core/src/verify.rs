//! Executable checks: crystal axioms, perfectness of level `s`, the minimal
//! elements and the structural lemmas used to identify them.

use crate::affine::AffineCrystal;
use crate::energy::{tensor_components, TensorPair};
use crate::error::{CrystalError, Result};
use crate::graph::CrystalGraph;
use crate::model::{dominant_weights_of_level, AffineWeight, ClassicalWeight, Letter, Tableau};
use crate::shape_maps::{ell, fill, iota};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Assumed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub criterion: String,
    pub verdict: Verdict,
    pub witness: Value,
}

impl Check {
    fn new(criterion: &str, ok: bool, witness: Value) -> Check {
        Check {
            criterion: criterion.to_string(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PerfectnessReport {
    pub n: usize,
    pub s: usize,
    pub checks: Vec<Check>,
}

impl PerfectnessReport {
    /// True iff no check failed (assumed checks do not count).
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, criterion: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.criterion == criterion)
    }
}

/// Classical part of `α_i` in the ε basis; `α₀` restricts to `-(ε₁ + ε₂)`.
pub fn simple_root(n: usize, i: usize) -> ClassicalWeight {
    let mut w = vec![0; n];
    match i {
        0 => {
            w[0] = -1;
            w[1] = -1;
        }
        i if i < n => {
            w[i - 1] = 1;
            w[i] = -1;
        }
        _ => {
            w[n - 2] = 1;
            w[n - 1] = 1;
        }
    }
    ClassicalWeight(w)
}

/// The three crystal axioms for every vertex and color `0..=n`. At most ten
/// offending `(vertex, color, axiom)` triples are kept as the witness.
pub fn check_axioms_graph(g: &CrystalGraph<Tableau>) -> Check {
    let n = g.n;
    let mut bad = Vec::new();
    let mut count = 0usize;
    for v in 0..g.len() {
        let wt = g.vertices[v].weight();
        for i in 0..=n {
            let mut fail = |axiom: &str| {
                count += 1;
                if bad.len() < 10 {
                    bad.push(json!({"tableau": g.vertices[v].to_string(), "color": i, "axiom": axiom}));
                }
            };
            if let Some(w) = g.f[v][i] {
                if g.e[w][i] != Some(v) {
                    fail("f-e inverse");
                }
                if g.vertices[w].weight() != wt.sub(&simple_root(n, i)) {
                    fail("weight shift");
                }
            }
            if let Some(w) = g.e[v][i] {
                if g.f[w][i] != Some(v) {
                    fail("e-f inverse");
                }
            }
            if wt.pair(i) as i64 != g.phi(v, i) as i64 - g.epsilon(v, i) as i64 {
                fail("string length");
            }
        }
    }
    Check::new(
        "axioms",
        count == 0,
        json!({"vertices": g.len(), "colors": n + 1, "violations": count, "examples": bad}),
    )
}

pub fn check_axioms(c: &AffineCrystal) -> Check {
    check_axioms_graph(c.graph())
}

/// `sΛ₂ − 2sΛ₀`, the classical weight `sϖ₂`.
pub fn top_weight(n: usize, s: usize) -> AffineWeight {
    let mut w = vec![0i64; n + 1];
    w[0] = -2 * s as i64;
    w[2] = s as i64;
    AffineWeight(w)
}

/// Vertices `b` with `⟨c, ε(b)⟩ = s`.
pub fn minimal_elements(c: &AffineCrystal) -> Vec<usize> {
    (0..c.len())
        .filter(|&v| c.epsilon_weight(v).level() == c.s as i64)
        .collect()
}

/// Perfectness of level `s`: parts 1, 2, 4 and 5 checked, part 3 assumed.
pub fn check_perfect(c: &AffineCrystal) -> Result<PerfectnessReport> {
    let (n, s) = (c.n, c.s);
    let mut checks = Vec::new();

    // part 1
    let t = TensorPair::new(c, c)?;
    let comps = tensor_components(&t);
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &r in &comps {
        *sizes.entry(r).or_insert(0) += 1;
    }
    checks.push(Check::new(
        "part1_connected",
        sizes.len() == 1,
        json!({"pairs": t.len(), "classes": sizes.len(), "class_sizes": sizes.values().collect::<Vec<_>>()}),
    ));

    // part 2
    let lambda = top_weight(n, s);
    let b_lambda: Vec<usize> = (0..c.len()).filter(|&v| c.weight(v) == lambda).collect();
    let top_cl = ClassicalWeight::k_varpi2(n, s as i32);
    let lower = (0..c.len()).all(|v| {
        top_cl
            .sub(&c.tableau(v).weight())
            .simple_root_coords()
            .is_some_and(|x| x.iter().all(|&a| a >= 0))
    });
    checks.push(Check::new(
        "part2_weight",
        b_lambda == vec![c.u(s)] && lower,
        json!({
            "lambda": lambda,
            "b_lambda": b_lambda.iter().map(|&v| c.tableau(v).to_string()).collect::<Vec<_>>(),
            "all_weights_below": lower,
        }),
    ));

    checks.push(Check {
        criterion: "part3_module".into(),
        verdict: Verdict::Assumed,
        witness: json!("existence of the underlying module is a hypothesis"),
    });

    // part 4
    let min_eps = (0..c.len()).map(|v| c.epsilon_weight(v).level()).min().unwrap_or(0);
    let min_phi = (0..c.len()).map(|v| c.phi_weight(v).level()).min().unwrap_or(0);
    checks.push(Check::new(
        "part4_min_level",
        min_eps == s as i64 && min_phi == s as i64,
        json!({"min_level_epsilon": min_eps, "min_level_phi": min_phi}),
    ));

    // part 5
    let bmin = minimal_elements(c);
    let targets: BTreeSet<AffineWeight> = dominant_weights_of_level(n, s).into_iter().collect();
    let eps_img: BTreeSet<AffineWeight> = bmin.iter().map(|&v| c.epsilon_weight(v)).collect();
    let phi_img: BTreeSet<AffineWeight> = bmin.iter().map(|&v| c.phi_weight(v)).collect();
    let phi_min: Vec<usize> = (0..c.len())
        .filter(|&v| c.phi_weight(v).level() == s as i64)
        .collect();
    let bijective = eps_img.len() == bmin.len()
        && eps_img == targets
        && phi_img.len() == bmin.len()
        && phi_img == targets
        && phi_min == bmin;
    let table: Vec<Value> = bmin
        .iter()
        .map(|&v| {
            json!({
                "tableau": c.tableau(v).to_string(),
                "epsilon": c.epsilon_weight(v),
                "phi": c.phi_weight(v),
            })
        })
        .collect();
    checks.push(Check::new(
        "part5_bijections",
        bijective,
        json!({"dominant_weights": targets.len(), "b_min": bmin.len(), "table": table}),
    ));

    Ok(PerfectnessReport { n, s, checks })
}

/// The middle `k_{n-1} + k_n` columns of `T_λ'`, as (top, bottom) pairs.
pub fn middle_block(n: usize, k_nm1: usize, k_n: usize) -> Vec<(Letter, Letter)> {
    let n8 = n as i8;
    // with k_n ≥ k_{n-1}; otherwise n and n̄ trade places
    let (lo, hi, swap) = if k_n >= k_nm1 {
        (k_nm1, k_n, false)
    } else {
        (k_n, k_nm1, true)
    };
    let nn = |x: i8| -> Letter {
        let l = Letter(x);
        if swap && l.index() == n {
            l.bar()
        } else {
            l
        }
    };
    let half = (hi - lo) / 2;
    let mut cols = Vec::new();
    cols.extend(std::iter::repeat_n((nn(n8 - 2), nn(n8 - 1)), lo));
    cols.extend(std::iter::repeat_n((nn(n8 - 1), nn(n8)), half));
    if (hi + lo) % 2 == 1 {
        cols.push((nn(-n8), nn(n8)));
    }
    cols.extend(std::iter::repeat_n((nn(-n8), nn(-(n8 - 1))), half));
    cols.extend(std::iter::repeat_n((nn(-(n8 - 1)), nn(-(n8 - 2))), lo));
    cols
}

/// `T_λ'` for `λ' = Σ_{i≥2} k_i Λ_i`, using `middle` for the central block.
pub fn minimal_core_with(
    n: usize,
    k: &[i64],
    middle: impl Fn(usize, usize, usize) -> Vec<(Letter, Letter)>,
) -> Tableau {
    let mut cols = Vec::new();
    for i in 2..=n - 2 {
        let c = (Letter(i as i8 - 1), Letter(i as i8));
        cols.extend(std::iter::repeat_n(c, k[i] as usize));
    }
    cols.extend(middle(n, k[n - 1] as usize, k[n] as usize));
    for i in (2..=n - 2).rev() {
        let c = (Letter(-(i as i8)), Letter(-(i as i8 - 1)));
        cols.extend(std::iter::repeat_n(c, k[i] as usize));
    }
    Tableau::from_columns(n, &cols)
}

pub fn minimal_core(n: usize, k: &[i64]) -> Tableau {
    minimal_core_with(n, k, middle_block)
}

fn require_level(n: usize, s: usize, lambda: &AffineWeight) -> Result<()> {
    if lambda.0.len() != n + 1 || !lambda.is_dominant() || lambda.level() != s as i64 {
        return Err(CrystalError::BadWeight(format!(
            "{:?} is not a dominant weight of level {s} for rank {n}",
            lambda.0
        )));
    }
    Ok(())
}

/// `T_λ = ι_{s'}^{s'+k₁} ∘ F_{2,s}(T_λ')`, built with a chosen middle block.
pub fn construct_minimal_with(
    n: usize,
    s: usize,
    lambda: &AffineWeight,
    middle: impl Fn(usize, usize, usize) -> Vec<(Letter, Letter)>,
) -> Result<Tableau> {
    require_level(n, s, lambda)?;
    let k = &lambda.0;
    let core = minimal_core_with(n, k, middle);
    let sp = core.width();
    let filled = fill(&core, s)?;
    iota(&filled, sp, sp + k[1] as usize)?.ok_or_else(|| {
        CrystalError::InvalidConfig(format!("ι_{sp}^{} undefined at {filled}", sp + k[1] as usize))
    })
}

/// The minimal element with `ε = φ = λ`, with the postcondition checked on `c`.
pub fn construct_minimal(c: &AffineCrystal, lambda: &AffineWeight) -> Result<Tableau> {
    let t = construct_minimal_with(c.n, c.s, lambda, middle_block)?;
    let v = c
        .id(&t)
        .ok_or_else(|| CrystalError::InvalidConfig(format!("{t} is not in the crystal")))?;
    if &c.epsilon_weight(v) != lambda || &c.phi_weight(v) != lambda {
        return Err(CrystalError::InvalidConfig(format!(
            "{t} has ε = {:?}, φ = {:?}",
            c.epsilon_weight(v).0,
            c.phi_weight(v).0
        )));
    }
    Ok(t)
}

/// Compare the constructed set with the brute-force minimal elements.
pub fn check_minimal_set_with(
    c: &AffineCrystal,
    build: impl Fn(&AffineWeight) -> Result<Tableau>,
) -> Check {
    let brute: BTreeSet<String> = minimal_elements(c)
        .iter()
        .map(|&v| c.tableau(v).to_string())
        .collect();
    let mut built = BTreeSet::new();
    let mut errors = Vec::new();
    for lambda in dominant_weights_of_level(c.n, c.s) {
        match build(&lambda) {
            Ok(t) => {
                let ok = c
                    .id(&t)
                    .is_some_and(|v| c.epsilon_weight(v) == lambda && c.phi_weight(v) == lambda);
                if !ok {
                    errors.push(json!({"lambda": lambda, "tableau": t.to_string()}));
                }
                built.insert(t.to_string());
            }
            Err(e) => errors.push(json!({"lambda": lambda, "error": e.to_string()})),
        }
    }
    let ok = errors.is_empty() && built == brute;
    Check::new(
        "minimal_set",
        ok,
        json!({
            "constructed": built.len(),
            "brute_force": brute.len(),
            "missing": brute.difference(&built).collect::<Vec<_>>(),
            "extra": built.difference(&brute).collect::<Vec<_>>(),
            "errors": errors,
        }),
    )
}

pub fn check_minimal_set(c: &AffineCrystal) -> Check {
    check_minimal_set_with(c, |l| construct_minimal_with(c.n, c.s, l, middle_block))
}

/// Blocks a column may belong to in `T = T₁T₂T₃T₄T₅`.
pub fn column_classes(n: usize, (a, b): (Letter, Letter)) -> [bool; 5] {
    let nbar = Letter(-(n as i8));
    let nl = Letter(n as i8);
    let mixed = !a.is_barred() && b.is_barred();
    let (ai, bi) = (a.index(), b.index());
    [
        !a.is_barred() && (!b.is_barred() || b == nbar),
        mixed && ai < bi && bi < n,
        b == a.bar(),
        mixed && bi < ai && ai < n,
        b.is_barred() && (a.is_barred() || a == nl),
    ]
}

/// All `(k₁, …, k₅)` realizing `T` as five consecutive blocks.
pub fn block_decompositions(t: &Tableau) -> Vec<[usize; 5]> {
    let classes: Vec<[bool; 5]> = t.columns().map(|c| column_classes(t.n(), c)).collect();
    let mut out = Vec::new();
    fn rec(classes: &[[bool; 5]], pos: usize, block: usize, k: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
        if pos == classes.len() {
            out.push(*k);
            return;
        }
        for b in block..5 {
            if classes[pos][b] {
                k[b] += 1;
                rec(classes, pos + 1, b, k, out);
                k[b] -= 1;
            }
        }
    }
    rec(&classes, 0, 0, &mut [0; 5], &mut out);
    out
}

/// A column with exactly one barred letter, other than the four exceptional ones.
pub fn is_mixed_column(n: usize, (a, b): (Letter, Letter)) -> bool {
    if a.is_barred() == b.is_barred() {
        return false;
    }
    let n8 = n as i8;
    let exceptions = [(n8, -n8), (-n8, n8), (n8 - 1, -n8), (n8, -(n8 - 1))];
    !exceptions.contains(&(a.0, b.0))
}

/// No `(a/b̄)` column besides `(n-1/n̄)`, `(n/n̄)`, `(n/n-1̄)`.
pub fn is_unmixed(n: usize, t: &Tableau) -> bool {
    let n8 = n as i8;
    let allowed = [(n8 - 1, -n8), (n8, -n8), (n8, -(n8 - 1))];
    t.columns()
        .all(|(a, b)| a.is_barred() || !b.is_barred() || allowed.contains(&(a.0, b.0)))
}

/// `M(s)`: the tableaux `T_λ'` of width exactly `s`.
pub fn core_set(n: usize, s: usize) -> BTreeSet<String> {
    dominant_weights_of_level(n, s)
        .into_iter()
        .filter(|l| l.0[0] == 0 && l.0[1] == 0)
        .map(|l| minimal_core(n, &l.0).to_string())
        .collect()
}

fn count_columns(t: &Tableau, col: (i8, i8)) -> usize {
    t.columns().filter(|&(a, b)| (a.0, b.0) == col).count()
}

/// The structural lemmas on minimal elements and the rank and shift laws.
pub fn check_structure_lemmas(c: &AffineCrystal) -> Result<Vec<Check>> {
    let (n, s) = (c.n, c.s);
    let n8 = n as i8;
    let mut checks = Vec::new();
    let top_min: Vec<usize> = minimal_elements(c)
        .into_iter()
        .filter(|&v| c.component(v) == s)
        .collect();

    // level lower bound
    let low = (0..c.len()).all(|v| {
        c.epsilon_weight(v).level() >= s as i64 && c.phi_weight(v).level() >= s as i64
    });
    checks.push(Check::new("level_lower_bound", low, json!({"vertices": c.len()})));

    // block widths
    let mut bad = Vec::new();
    let mut ambiguous = 0;
    for &v in &top_min {
        let t = c.tableau(v);
        let decs = block_decompositions(t);
        if decs.len() > 1 {
            ambiguous += 1;
        }
        let ok = decs.iter().any(|k| k[0] + k[1] == s / 2 && k[3] + k[4] == s / 2 && k[2] <= 1);
        if !ok {
            bad.push(json!({"tableau": t.to_string(), "decompositions": decs}));
        }
    }
    checks.push(Check::new(
        "block_widths",
        bad.is_empty(),
        json!({"checked": top_min.len(), "ambiguous": ambiguous, "failures": bad}),
    ));

    // mixed columns force membership in the image of ι
    let mut bad = Vec::new();
    let mut hits = 0;
    for &v in &top_min {
        let t = c.tableau(v);
        if t.columns().any(|col| is_mixed_column(n, col)) {
            hits += 1;
            if s == 0 || iota(t, s, s - 1)?.is_none() {
                bad.push(t.to_string());
            }
        }
    }
    checks.push(Check::new(
        "mixed_columns",
        bad.is_empty(),
        json!({"checked": hits, "failures": bad}),
    ));

    // unmixed minimal tableaux lie in M(s), with balanced column counts
    let core = core_set(n, s);
    let mut bad = Vec::new();
    let mut unbalanced = Vec::new();
    let mut boundary = Vec::new();
    let mut outside = Vec::new();
    let mut hits = 0;
    for &v in &top_min {
        let t = c.tableau(v);
        if !is_unmixed(n, t) {
            continue;
        }
        // the lemma is only used off the image of ι_{s-1}^s
        if s > 0 && iota(t, s, s - 1)?.is_some() {
            if !core.contains(&t.to_string()) {
                outside.push(t.to_string());
            }
            continue;
        }
        hits += 1;
        if count_columns(t, (n8 - 1, -n8)) + count_columns(t, (n8, -(n8 - 1))) > 0 {
            log::info!("minimal tableau with an (n-1/n̄) or (n/n-1̄) column: {t}");
            boundary.push(t.to_string());
        }
        if !core.contains(&t.to_string()) {
            bad.push(t.to_string());
        }
        let mut balanced = count_columns(t, (n8 - 1, -n8)) == count_columns(t, (n8, -(n8 - 1)));
        for i in 3..n8 {
            balanced &= count_columns(t, (i - 1, i)) == count_columns(t, (-i, -(i - 1)));
        }
        if !balanced {
            unbalanced.push(t.to_string());
        }
    }
    checks.push(Check::new(
        "unmixed_in_core",
        bad.is_empty(),
        json!({
            "checked": hits,
            "failures": bad,
            "boundary_columns": boundary,
            "in_iota_image_not_in_core": outside,
        }),
    ));
    checks.push(Check::new(
        "column_balance",
        unbalanced.is_empty(),
        json!({"checked": hits, "failures": unbalanced}),
    ));

    // ι shifts on ε₀, ε₁, φ₀, φ₁ and constancy of the other pairings
    let mut bad = Vec::new();
    let mut chains = 0;
    for v in 0..c.len() {
        let k = c.component(v);
        let l = ell(&c.classical.dropped[v])?;
        if l == s {
            continue;
        }
        chains += 1;
        let t = c.tableau(v);
        let mut prev: Option<usize> = None;
        for m in l..=s {
            let tm = iota(t, k, m)?.ok_or_else(|| {
                CrystalError::InvalidConfig(format!("ι_{k}^{m} undefined at {t}"))
            })?;
            let w = c
                .id(&tm)
                .ok_or_else(|| CrystalError::InvalidConfig(format!("{tm} missing")))?;
            if let Some(p) = prev {
                let (ep, pp, ew, pw) = (&c.eps[p], &c.phi[p], &c.eps[w], &c.phi[w]);
                let shift = ew[1] == ep[1] + 1
                    && ew[0] + 1 == ep[0]
                    && pw[1] == pp[1] + 1
                    && pw[0] + 1 == pp[0];
                let fixed = (2..=n).all(|i| ew[i] == ep[i] && pw[i] == pp[i]);
                if !(shift && fixed) && bad.len() < 10 {
                    bad.push(json!({"from": c.tableau(p).to_string(), "to": tm.to_string()}));
                }
            }
            prev = Some(w);
        }
    }
    checks.push(Check::new(
        "iota_shifts",
        bad.is_empty(),
        json!({"chains": chains, "failures": bad}),
    ));

    // σ laws and ranks
    let mut sigma_bad = Vec::new();
    let mut swap_bad = Vec::new();
    let mut flip_bad = Vec::new();
    let mut drop_bad = Vec::new();
    let mut conj_bad = Vec::new();
    for v in 0..c.len() {
        let sv = c.sigma[v];
        if c.sigma[sv] != v {
            sigma_bad.push(c.tableau(v).to_string());
        }
        let (w, ws) = (c.weight(v), c.weight(sv));
        let swapped = w.0[0] == ws.0[1] && w.0[1] == ws.0[0] && w.0[2..] == ws.0[2..];
        if !swapped {
            swap_bad.push(c.tableau(v).to_string());
        }
        if c.rank(sv) + c.rank(v) != 2 * s {
            flip_bad.push(c.tableau(v).to_string());
        }
        if let Some(u) = c.f(0, v) {
            if c.rank(u) + 1 != c.rank(v) {
                drop_bad.push(c.tableau(v).to_string());
            }
        }
        let via_f = c.f(1, sv).map(|x| c.sigma[x]);
        let via_e = c.e(1, sv).map(|x| c.sigma[x]);
        if via_f != c.f(0, v) || via_e != c.e(0, v) {
            conj_bad.push(c.tableau(v).to_string());
        }
    }
    for (name, bad) in [
        ("sigma_involution", sigma_bad),
        ("sigma_weight_swap", swap_bad),
        ("sigma_rank_flip", flip_bad),
        ("f0_rank_drop", drop_bad),
        ("f0_conjugation", conj_bad),
    ] {
        checks.push(Check::new(
            name,
            bad.is_empty(),
            json!({"failures": bad.iter().take(10).collect::<Vec<_>>(), "count": bad.len()}),
        ));
    }

    // the highest weight vectors u_k under color 0
    let mut bad = Vec::new();
    for k in 0..=s {
        let u = c.u(k);
        let next = if k < s { Some(c.u(k + 1)) } else { None };
        if c.f(0, u) != next || c.phi[u][0] != s - k || c.eps[u][0] != s + k {
            bad.push(k);
        }
    }
    checks.push(Check::new("u_k_zero_strings", bad.is_empty(), json!({"failures": bad})));

    Ok(checks)
}

/// Everything: axioms, perfectness, minimal set and structure lemmas.
pub fn full_report(c: &AffineCrystal) -> Result<PerfectnessReport> {
    let mut report = check_perfect(c)?;
    report.checks.insert(0, check_axioms(c));
    report.checks.push(check_minimal_set(c));
    report.checks.extend(check_structure_lemmas(c)?);
    Ok(report)
}
