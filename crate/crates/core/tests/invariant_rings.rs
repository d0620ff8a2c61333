use modring::borelweil::Weight;
use modring::invariantforms::{
    build_group, build_group_in, character_dimension, invariant_spaces, is_invariant, molien_table,
    multiply_invariants_abstract, multiply_invariants_classical, verify_graded_ring,
    verify_path_equality, GroupName,
};
use modring::{with_group, NoRadical, Sqrt2, Sqrt5};

/// Coefficients of `(1 + t^e) / ((1 − t^a)(1 − t^b))` up to `t^n`.
fn hilbert_series(a: usize, b: usize, e: usize, n: usize) -> Vec<usize> {
    let mut s = vec![0usize; n + 1];
    for x in (0..=n).step_by(a) {
        for y in (x..=n).step_by(b) {
            s[y] += 1;
            if y + e <= n {
                s[y + e] += 1;
            }
        }
    }
    s
}

fn group(name: &str) -> GroupName {
    name.parse().unwrap()
}

#[test]
fn reynolds_rank_matches_hilbert_series_up_to_40() {
    let cases = [
        ("Q8", (4, 4, 6)),
        ("2T", (6, 8, 12)),
        ("2O", (8, 12, 18)),
        ("2I", (12, 20, 30)),
    ];
    for (name, (a, b, e)) in cases {
        let expected = hilbert_series(a, b, e, 40);
        let g = build_group(&group(name)).unwrap();
        with_group!(&g, g => {
            let spaces = invariant_spaces(g, 40).unwrap();
            let ranks: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
            assert_eq!(ranks, expected, "{name}");
            assert_eq!(molien_table(g, 40).dims, expected, "{name}");
        });
    }
}

#[test]
fn generator_weights() {
    let expect: [(&str, &[u32]); 4] = [
        ("Q8", &[4, 4, 6]),
        ("2T", &[6, 8, 12]),
        ("2O", &[8, 12, 18]),
        ("2I", &[12, 20, 30]),
    ];
    for (name, weights) in expect {
        let g = build_group(&group(name)).unwrap();
        with_group!(&g, g => assert_eq!(molien_table(g, 40).generator_weights, weights, "{name}"));
    }
}

#[test]
fn small_groups_invariant_dimensions() {
    // Cyclic groups of order k act on a^(n−j)c^j by ζ^(n−2j); a weight-n
    // monomial is invariant iff k divides n − 2j.
    for k in [1u32, 2, 3, 4, 5, 6, 8, 10] {
        let g = build_group(&GroupName::Cyclic(k)).unwrap();
        assert_eq!(g.order(), k as usize);
        for n in 0..=12u32 {
            let expected = (0..=n)
                .filter(|j| (n as i64 - 2 * *j as i64).rem_euclid(k as i64) == 0)
                .count();
            with_group!(&g, g => assert_eq!(character_dimension(g, Weight(n)), expected, "cyclic({k}) n={n}"));
        }
    }
    for k in 1..=5u32 {
        let g = build_group(&GroupName::BinaryDihedral(k)).unwrap();
        assert_eq!(g.order(), 4 * k as usize);
        with_group!(&g, g => {
            let spaces = invariant_spaces(g, 16).unwrap();
            for s in &spaces {
                assert_eq!(s.dim(), character_dimension(g, s.weight()));
                assert!(s.basis().iter().all(|v| is_invariant(g, v)));
            }
        });
    }
}

#[test]
fn paths_agree_q8_and_2t() {
    for name in ["Q8", "2T"] {
        let g = build_group_in::<NoRadical>(&group(name)).unwrap();
        let report = verify_path_equality(&g, 16).unwrap();
        assert!(report.all_passed(), "{name}");
        assert!(!report.checks.is_empty());
    }
}

#[test]
fn paths_agree_with_radicals() {
    let g = build_group_in::<Sqrt2>(&GroupName::BinaryOctahedral).unwrap();
    let s = &invariant_spaces(&g, 12).unwrap();
    let (v8, v12) = (&s[8].basis()[0], &s[12].basis()[0]);
    assert_eq!(
        multiply_invariants_abstract(&g, v8, v12).unwrap(),
        multiply_invariants_classical(&g, v8, v12).unwrap()
    );
    let g = build_group_in::<Sqrt5>(&GroupName::BinaryIcosahedral).unwrap();
    let s = &invariant_spaces(&g, 12).unwrap();
    let v = &s[12].basis()[0];
    assert_eq!(
        multiply_invariants_abstract(&g, v, v).unwrap(),
        multiply_invariants_classical(&g, v, v).unwrap()
    );
}

#[test]
fn graded_rings_q8_and_2t() {
    for name in ["Q8", "2T"] {
        let g = build_group_in::<NoRadical>(&group(name)).unwrap();
        let report = verify_graded_ring(&g, 16).unwrap();
        assert!(report.all_passed(), "{name}");
    }
}
