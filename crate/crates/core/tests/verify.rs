mod common;

use common::{crystal, dominant_count_convolution, t};
use krcrystal::branching::null_tableau;
use krcrystal::model::{dominant_weights_of_level, AffineWeight, Tableau};
use krcrystal::verify::{
    block_decompositions, check_axioms, check_axioms_graph, check_minimal_set_with, check_perfect,
    check_structure_lemmas, construct_minimal, construct_minimal_with, full_report, middle_block,
    Verdict,
};
use krcrystal::CrystalError;
use std::collections::{BTreeSet, HashSet};

fn level_oracle(n: usize, k: &[usize]) -> usize {
    k.iter()
        .enumerate()
        .map(|(i, &x)| if (2..=n - 2).contains(&i) { 2 * x } else { x })
        .sum()
}

fn weight(k: &[i64]) -> AffineWeight {
    AffineWeight(k.to_vec())
}

#[test]
fn dominant_weights_match_the_generating_function() {
    for n in 4..=7 {
        for s in 0..=5 {
            let w = dominant_weights_of_level(n, s);
            assert_eq!(w.len() as u64, dominant_count_convolution(n, s), "n={n} s={s}");
            assert!(w.iter().all(|x| x.is_dominant() && x.level() == s as i64));
        }
    }
    assert_eq!(dominant_count_convolution(4, 2), 11);
}

#[test]
fn axioms_pass_and_detect_a_broken_edge() {
    let c = crystal(4, 2);
    assert_eq!(check_axioms(&c).verdict, Verdict::Pass);
    let mut g = c.graph().clone();
    let (v, w) = (0..g.len())
        .find_map(|v| g.f[v][0].map(|w| (v, w)))
        .unwrap();
    let other = (0..g.len()).find(|&x| x != w && g.e[x][0].is_none()).unwrap();
    g.f[v][0] = Some(other);
    let check = check_axioms_graph(&g);
    assert_eq!(check.verdict, Verdict::Fail);
    assert!(check.witness["violations"].as_u64().unwrap() > 0);
}

#[test]
fn perfectness_at_rank_four() {
    for s in 1..=2 {
        let c = crystal(4, s);
        let report = check_perfect(&c).unwrap();
        assert!(report.all_pass(), "{}", serde_json::to_string_pretty(&report).unwrap());
        assert_eq!(report.get("part3_module").unwrap().verdict, Verdict::Assumed);
        let bmin: Vec<usize> = (0..c.len())
            .filter(|&v| level_oracle(4, &c.eps[v]) == s)
            .collect();
        assert_eq!(bmin.len() as u64, dominant_count_convolution(4, s));
        let eps: BTreeSet<Vec<usize>> = bmin.iter().map(|&v| c.eps[v].clone()).collect();
        let phi: BTreeSet<Vec<usize>> = bmin.iter().map(|&v| c.phi[v].clone()).collect();
        assert_eq!(eps.len(), bmin.len());
        assert_eq!(eps, phi);
        let min = (0..c.len()).map(|v| level_oracle(4, &c.eps[v])).min().unwrap();
        assert_eq!(min, s);
        assert_eq!(
            report.get("part5_bijections").unwrap().witness["b_min"].as_u64(),
            Some(bmin.len() as u64)
        );
    }
}

#[test]
fn minimal_element_examples() {
    let c = crystal(4, 2);
    assert_eq!(construct_minimal(&c, &weight(&[2, 0, 0, 0, 0])).unwrap(), Tableau::one_onebar(4, 2));
    assert_eq!(construct_minimal(&c, &weight(&[0, 0, 1, 0, 0])).unwrap(), t(4, &[1, -2], &[2, -1]));
    assert_eq!(construct_minimal(&c, &weight(&[0, 2, 0, 0, 0])).unwrap(), null_tableau(4, 2));
    assert_eq!(construct_minimal(&c, &weight(&[0, 0, 0, 0, 2])).unwrap(), t(4, &[3, -4], &[4, -3]));
    assert!(matches!(
        construct_minimal(&c, &weight(&[1, 0, 0, 0, 0])),
        Err(CrystalError::BadWeight(_))
    ));
    assert!(matches!(
        construct_minimal(&c, &weight(&[3, -1, 0, 0, 0])),
        Err(CrystalError::BadWeight(_))
    ));
}

#[test]
fn middle_blocks() {
    let cols = |v: Vec<(krcrystal::Letter, krcrystal::Letter)>| -> Vec<(i8, i8)> {
        v.into_iter().map(|(a, b)| (a.0, b.0)).collect()
    };
    assert_eq!(cols(middle_block(4, 0, 2)), vec![(3, 4), (-4, -3)]);
    assert_eq!(cols(middle_block(4, 2, 0)), vec![(3, -4), (4, -3)]);
    assert_eq!(cols(middle_block(4, 0, 1)), vec![(-4, 4)]);
    assert_eq!(cols(middle_block(4, 1, 0)), vec![(4, -4)]);
    assert_eq!(cols(middle_block(4, 1, 1)), vec![(2, 3), (-3, -2)]);
    assert_eq!(cols(middle_block(5, 1, 2)), vec![(3, 4), (-5, 5), (-4, -3)]);
}

#[test]
fn constructed_minimal_set_matches_brute_force() {
    for (n, s) in [(4, 1), (4, 2), (4, 3), (5, 1), (5, 2)] {
        let c = crystal(n, s);
        let brute: HashSet<Tableau> = (0..c.len())
            .filter(|&v| level_oracle(n, &c.eps[v]) == s)
            .map(|v| c.tableau(v).clone())
            .collect();
        let built: HashSet<Tableau> = dominant_weights_of_level(n, s)
            .iter()
            .map(|l| construct_minimal(&c, l).unwrap())
            .collect();
        assert_eq!(built, brute, "n={n} s={s}");
    }
}

#[test]
fn a_wrong_middle_block_is_caught() {
    let c = crystal(4, 2);
    let check = check_minimal_set_with(&c, |l| {
        construct_minimal_with(4, 2, l, |n, a, b| middle_block(n, b, a))
    });
    assert_eq!(check.verdict, Verdict::Fail);
    assert!(!check.witness["errors"].as_array().unwrap().is_empty());
}

#[test]
fn block_widths_of_top_minimal_elements() {
    let c = crystal(4, 2);
    let tops: Vec<usize> = (0..c.len())
        .filter(|&v| c.component(v) == 2 && level_oracle(4, &c.eps[v]) == 2)
        .collect();
    assert!(!tops.is_empty());
    for v in tops {
        let ok = block_decompositions(c.tableau(v))
            .iter()
            .any(|k| k[0] + k[1] == 1 && k[3] + k[4] == 1 && k[2] <= 1);
        assert!(ok, "{}", c.tableau(v));
    }
}

#[test]
fn structure_lemmas_hold() {
    for (n, s) in [(4, 1), (4, 2), (4, 3), (5, 2)] {
        let c = crystal(n, s);
        for check in check_structure_lemmas(&c).unwrap() {
            assert!(check.passed(), "n={n} s={s}: {}", serde_json::to_string(&check).unwrap());
        }
    }
}

#[test]
fn report_schema_and_determinism() {
    let c = crystal(4, 2);
    let a = serde_json::to_value(full_report(&c).unwrap()).unwrap();
    let b = serde_json::to_value(full_report(&c).unwrap()).unwrap();
    assert_eq!(a, b);
    assert_eq!((a["n"].as_u64(), a["s"].as_u64()), (Some(4), Some(2)));
    let names: Vec<&str> = a["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let v = c["verdict"].as_str().unwrap();
            assert!(["pass", "fail", "assumed"].contains(&v));
            assert!(c.get("witness").is_some());
            c["criterion"].as_str().unwrap()
        })
        .collect();
    for want in [
        "axioms",
        "part1_connected",
        "part2_weight",
        "part3_module",
        "part4_min_level",
        "part5_bijections",
        "minimal_set",
        "block_widths",
        "sigma_involution",
        "f0_rank_drop",
    ] {
        assert!(names.contains(&want), "{want}");
    }
}
