use krcrystal::classical::{dual_star_skew, is_classical_hw, tab_e, tab_f};
use krcrystal::model::{Letter, Tableau};
use krcrystal::plactic::{rectify_two_row, reverse_shift_top, SkewTableau};
use krcrystal::shape_maps::{drop, fill, filling_locations, find_a_configuration, iota, iota_trace};
use krcrystal::word::{eps_phi, signature};

fn t(n: usize, top: &[i8], bottom: &[i8]) -> Tableau {
    Tableau::from_rows(n, top, bottom)
}

fn letters(v: &[i8]) -> Vec<Letter> {
    v.iter().map(|&x| Letter(x)).collect()
}

fn example_3_2() -> Tableau {
    t(4, &[1, 2, 4, -3, -3], &[3, -4, -4, -2, -1])
}

#[test]
fn column_word_of_signature_example() {
    assert_eq!(
        example_3_2().column_word(),
        letters(&[3, 1, -4, 2, -4, 4, -2, -3, -1, -3])
    );
}

#[test]
fn two_signature() {
    let s = signature(4, 2, &example_3_2().column_word());
    assert_eq!(s.full_string(), "+−+−−");
    assert_eq!(s.reduced_string(), "−");
    assert_eq!(eps_phi(4, 2, &example_3_2().column_word()), (0, 1));
}

#[test]
fn four_signature() {
    let s = signature(4, 4, &example_3_2().column_word());
    assert_eq!(s.full_string(), "−++−++");
    assert_eq!(s.reduced_string(), "−+++");
    assert_eq!(eps_phi(4, 4, &example_3_2().column_word()), (3, 1));
}

#[test]
fn operators_on_signature_example() {
    let x = example_3_2();
    assert_eq!(tab_f(2, &x), Some(t(4, &[1, 2, 4, -3, -2], &[3, -4, -4, -2, -1])));
    assert_eq!(tab_f(4, &x), Some(t(4, &[1, 2, 4, -3, -3], &[-4, -4, -4, -2, -1])));
    assert_eq!(tab_e(4, &x), Some(t(4, &[1, 2, 4, -3, -3], &[3, 3, -4, -2, -1])));
    assert!(!is_classical_hw(&x));
}

#[test]
fn weight_of_signature_example() {
    // content count of 3 1 4̄ 2 4̄ 4 2̄ 3̄ 1̄ 3̄
    let w = example_3_2().column_word();
    let count = |x: i8| w.iter().filter(|l| l.0 == x).count() as i32;
    let oracle: Vec<i32> = (1..=4).map(|i| count(i) - count(-i)).collect();
    assert_eq!(oracle, vec![0, 0, -1, -1]);
    assert_eq!(example_3_2().weight().0, oracle);
}

#[test]
fn dual_of_non_rectangular_tableau() {
    let s = SkewTableau::straight(4, letters(&[1, 1, 2]), letters(&[-3]));
    let d = dual_star_skew(&s).unwrap();
    assert_eq!(d, SkewTableau::straight(4, letters(&[3, -1, -1]), letters(&[-2])));
}

#[test]
fn drop_example() {
    let x = t(4, &[1, 2, 3, 3], &[-4, -2, -2, -1]);
    let c = find_a_configuration(&x).unwrap().unwrap();
    assert_eq!((c.a, c.m), (Letter(2), 1));
    assert_eq!(drop(&x).unwrap(), (t(4, &[1, 3, 3], &[-4, -2, -1]), 3));
}

#[test]
fn fill_examples() {
    let a = t(4, &[1, 2, 3], &[-4, -2, -1]);
    assert_eq!(fill(&a, 4).unwrap(), t(4, &[1, 2, 2, 3], &[-4, -2, -2, -1]));
    let idx: Vec<usize> = filling_locations(&a).iter().map(|l| l.index).collect();
    assert_eq!(idx, vec![1, 2]);
    let b = t(4, &[2, 3, 3], &[-4, -2, -1]);
    assert_eq!(fill(&b, 4).unwrap(), t(4, &[2, 2, 3, 3], &[-4, -2, -2, -1]));
    assert_eq!(filling_locations(&b).len(), 2);
}

#[test]
fn iota_five_six_trace() {
    let x = t(4, &[1, 1, 2, 2, 2, -3, -2], &[2, 2, 3, -2, -2, -2, -1]);
    let tr = iota_trace(&x, 6).unwrap();
    assert_eq!(tr.dropped, t(4, &[1, 1, 2, -3, -2], &[2, 2, 3, -2, -1]));
    assert_eq!(tr.stripped.to_string(), "· · 2 3̄ 2̄ / 2 2 3 2̄");
    assert_eq!(tr.slid.to_string(), "· · · 3 3̄ 2̄ / 2 2 3 3̄");
    assert_eq!(tr.refilled, t(4, &[1, 1, 1, 3, -3, -2], &[2, 2, 3, -3, -1, -1]));
    let y = t(4, &[1, 1, 1, 3, 3, -3, -2], &[2, 2, 3, -3, -3, -1, -1]);
    assert_eq!(tr.result, y);
    assert_eq!(iota(&x, 5, 6).unwrap(), Some(y.clone()));
    assert_eq!(iota(&y, 6, 5).unwrap(), Some(x.clone()));
    assert_eq!(iota(&x, 5, 5).unwrap(), Some(x));
}

#[test]
fn relation_two_slide() {
    let s = SkewTableau {
        n: 4,
        top_offset: 2,
        top: letters(&[2, -3, -2]),
        bottom_offset: 0,
        bottom: letters(&[2, 2, 3, -2]),
    };
    let out = reverse_shift_top(&s).unwrap();
    assert_eq!(out.top, letters(&[3, -3, -2]));
    assert_eq!(out.top_offset, 3);
    assert_eq!(out.bottom, letters(&[2, 2, 3, -3]));
}

#[test]
fn straight_shape_is_fixed_by_rectification() {
    let s = SkewTableau::from_tableau(&example_3_2());
    assert_eq!(rectify_two_row(&s).unwrap(), s);
}
