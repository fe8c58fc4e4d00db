mod common;

use common::{branching_dimension, crystal, rank_contents, rank_contents_literal, t, weyl_dim};
use krcrystal::branching::{
    null_tableau, null_then_two_onebar, reduced_form, sigma, star_bc, BranchingGraph, Partition,
};
use krcrystal::classical::ClassicalKr;
use krcrystal::shape_maps::{ell, fill};
use krcrystal::model::Tableau;

fn build(n: usize, s: usize) -> (ClassicalKr, BranchingGraph) {
    let c = ClassicalKr::build(n, s, 5_000_000).unwrap();
    let bc = BranchingGraph::build(&c).unwrap();
    (c, bc)
}

#[test]
fn rank_contents_match_the_oracle() {
    for s in 1..=4 {
        let (_, bc) = build(4, s);
        for k in 0..=s {
            let ranks = bc.ranks_of(k);
            let want = rank_contents(k);
            for (r, got) in ranks.iter().enumerate() {
                let expect: Vec<Partition> = match r.checked_sub(s - k) {
                    Some(j) if j <= 2 * k => want[j].iter().map(|&(a, b)| Partition(a, b)).collect(),
                    _ => vec![],
                };
                assert_eq!(got, &expect, "s={s} k={k} rank={r}");
            }
        }
    }
}

#[test]
fn rank_contents_account_for_the_whole_component() {
    for n in [4, 5, 6] {
        for k in 0..=5 {
            let mut w = vec![0i32; n];
            w[0] = k as i32;
            w[1] = k as i32;
            assert_eq!(branching_dimension(n, &rank_contents(k)), weyl_dim(n, &w), "n={n} k={k}");
        }
    }
}

#[test]
fn literal_rank_contents_overcount_from_width_three() {
    for k in 0..=2 {
        assert_eq!(rank_contents_literal(k), rank_contents(k));
    }
    let literal = rank_contents_literal(3);
    assert!(literal[1].contains(&(1, 1)));
    assert!(!rank_contents(3)[1].contains(&(1, 1)));
    let w = [3, 3, 0, 0, 0];
    assert!(branching_dimension(5, &literal) > weyl_dim(5, &w));
}

#[test]
fn rank_contents_at_width_two() {
    let (_, bc) = build(4, 2);
    let p = |a, b| Partition(a, b);
    let r = bc.ranks_of(2);
    assert_eq!(r[0], vec![p(2, 0)]);
    assert_eq!(r[1], vec![p(1, 0), p(2, 1)]);
    assert_eq!(r[2], vec![p(0, 0), p(1, 1), p(2, 0), p(2, 2)]);
    assert_eq!(r[3], r[1]);
    assert_eq!(r[4], r[0]);
}

#[test]
fn bc_of_width_two_has_fifteen_vertices() {
    let (_, bc) = build(4, 2);
    assert_eq!(bc.len(), 15);
    let layout: Vec<Vec<usize>> = (0..=2)
        .rev()
        .map(|k| bc.ranks_of(k).iter().map(Vec::len).filter(|&x| x > 0).collect())
        .collect();
    assert_eq!(layout, vec![vec![1, 2, 4, 2, 1], vec![1, 2, 1], vec![1]]);
}

#[test]
fn ranks_are_multiplicity_free_and_mirror() {
    for n in [4, 5] {
        let (_, bc) = build(n, 3);
        for (b, v) in bc.vertices.iter().enumerate() {
            let c = bc.complement(b).expect("complement exists");
            assert_eq!(bc.vertices[c].rank, 2 * bc.s - v.rank);
            assert_eq!(bc.vertices[c].size, v.size);
            assert_eq!(bc.complement(c), Some(b));
        }
    }
}

#[test]
fn edges_join_adjacent_shapes_one_rank_apart() {
    for s in 1..=3 {
        let (_, bc) = build(4, s);
        let mut expected = std::collections::BTreeSet::new();
        for (a, va) in bc.vertices.iter().enumerate() {
            for (b, vb) in bc.vertices.iter().enumerate() {
                if va.component == vb.component && vb.rank == va.rank + 1 && va.shape.adjacent(&vb.shape) {
                    expected.insert((a, b));
                }
            }
        }
        assert_eq!(bc.edges, expected, "s={s}");
    }
}

#[test]
fn highest_weight_vertex_ranks() {
    let s = 3;
    let (c, bc) = build(4, s);
    for k in 0..=s {
        let v = &bc.vertices[bc.of[c.highest[k]]];
        assert_eq!(v.rank, s - k);
        assert_eq!(v.shape, Partition(k, 0));
    }
}

#[test]
fn reduced_forms() {
    let u = Tableau::highest(4, 3);
    let r = reduced_form(&u).unwrap();
    assert_eq!((r.shape, r.local_rank(3)), (Partition(3, 0), 0));
    let z = null_tableau(4, 3);
    let r = reduced_form(&z).unwrap();
    assert_eq!((r.shape, r.local_rank(3), r.r2), (Partition(0, 0), 3, 3));
}

#[test]
fn star_bc_is_an_involution_fixing_the_middle_rank() {
    for s in 1..=3 {
        let (c, bc) = build(4, s);
        for v in 0..c.len() {
            let w = star_bc(&c, &bc, v).unwrap();
            assert_eq!(star_bc(&c, &bc, w).unwrap(), v);
            let b = &bc.vertices[bc.of[v]];
            assert_eq!(bc.vertices[bc.of[w]].rank, 2 * s - b.rank);
            assert_eq!(w == v, b.rank == s, "{}", c.tableau(v));
        }
    }
}

#[test]
fn sigma_moves_vertices_as_expected() {
    for n in [4, 5] {
        for s in 1..=3 {
            let (c, bc) = build(n, s);
            for v in 0..c.len() {
                let w = sigma(&c, &bc, v).unwrap();
                assert_eq!(sigma(&c, &bc, w).unwrap(), v);
                let (a, b) = (&bc.vertices[bc.of[v]], &bc.vertices[bc.of[w]]);
                let l = ell(&c.dropped[v]).unwrap();
                assert_eq!(b.shape, a.shape);
                assert_eq!(b.rank, 2 * s - a.rank);
                assert_eq!(b.component, s + l - a.component, "{}", c.tableau(v));
            }
        }
    }
}

#[test]
fn sigma_of_highest_weights() {
    let s = 3;
    let (c, bc) = build(4, s);
    for k in 0..=s {
        let w = sigma(&c, &bc, c.highest[k]).unwrap();
        assert_eq!(c.tableau(w), &fill(&null_then_two_onebar(4, s, k), s).unwrap());
    }
    assert_eq!(null_then_two_onebar(4, 3, 1), t(4, &[1, 2, 2], &[-2, -1, -1]));
}

#[test]
fn sigma_fixes_the_self_dual_minimal_element() {
    let (c, bc) = build(4, 2);
    let v = c.id(&t(4, &[1, -2], &[2, -1])).unwrap();
    assert_eq!(sigma(&c, &bc, v).unwrap(), v);
    // The size-two null configuration and (1/1̄)² are exchanged.
    let z = c.id(&null_tableau(4, 2)).unwrap();
    assert_eq!(c.tableau(sigma(&c, &bc, z).unwrap()), &Tableau::one_onebar(4, 2));
}

#[test]
fn exports() {
    let a = crystal(4, 2);
    assert!(!a.is_empty());
    let (_, bc) = build(4, 2);
    let dot = bc.to_dot();
    assert!(dot.starts_with("digraph BC"));
    assert_eq!(bc.to_json()["vertices"].as_array().unwrap().len(), 15);
}

#[test]
fn reduced_forms_of_highest_weights_match_the_vertices() {
    for s in 1..=3 {
        let (c, bc) = build(4, s);
        for b in &bc.vertices {
            let r = reduced_form(&c.dropped[b.hw]).unwrap();
            assert_eq!(r.shape, b.shape, "s={s} {}", c.dropped[b.hw]);
            assert_eq!(r.local_rank(b.component) + s - b.component, b.rank, "s={s} {}", c.dropped[b.hw]);
        }
    }
}
