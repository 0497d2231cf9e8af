//! Property tests for the algebraic identities the crate is built on.

use biquat::{
    char_poly, classify, complex_nth_roots, complex_sqrt, eigenvalues, jordan_form, min_poly,
    reduced_adjugate, sample_family, sets_match, solve_nth_root, to_qmatrix, Biquaternion, Branch,
    CVector3, CaseLabel, ComplexScalar, JordanKind, Matrix4C, Subcase, DEFAULT_TOL,
};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

fn complex_in(r: f64) -> impl Strategy<Value = ComplexScalar> {
    (-r..r, -r..r).prop_map(|(re, im)| ComplexScalar::new(re, im))
}

fn any_biquat() -> impl Strategy<Value = Biquaternion> {
    (
        complex_in(2.0),
        complex_in(2.0),
        complex_in(2.0),
        complex_in(2.0),
    )
        .prop_map(|(a0, a1, a2, a3)| Biquaternion::from_components(a0, a1, a2, a3))
}

// Inputs comfortably inside the generic-invertible class.
fn generic_biquat() -> impl Strategy<Value = Biquaternion> {
    any_biquat().prop_filter("away from case boundaries", |a| {
        let scale = a.norm_inf();
        a.v.norm_inf() > 0.3 * (1.0 + scale)
            && a.v.square().norm() > 0.1 * (1.0 + scale * scale)
            && a.norm_form().norm() > 0.1 * (1.0 + scale * scale)
    })
}

// Nonzero null vector part: (p1, p2, sqrt(-p1^2 - p2^2)).
fn null_vector() -> impl Strategy<Value = CVector3> {
    (complex_in(2.0), complex_in(2.0))
        .prop_filter("vector must not vanish", |(p1, p2)| {
            p1.norm() + p2.norm() > 0.3
        })
        .prop_map(|(p1, p2)| {
            CVector3::new(p1, p2, complex_sqrt(-p1 * p1 - p2 * p2, Branch::Principal))
        })
}

fn matrix_pow(m: &Matrix4C, n: u32) -> Matrix4C {
    let mut acc = *m;
    for _ in 1..n {
        acc = &acc * m;
    }
    acc
}

proptest! {
    #[test]
    fn product_is_associative(a in any_biquat(), b in any_biquat(), x in any_biquat()) {
        let left = (a * b) * x;
        let right = a * (b * x);
        prop_assert!(left.approx_eq(right, 1e-12));
    }

    #[test]
    fn powers_add(x in any_biquat(), m in 1u32..5, k in 1u32..5) {
        let combined = x.pow(m + k);
        let split = x.pow(m) * x.pow(k);
        prop_assert!(combined.approx_eq(split, 1e-10));
    }

    #[test]
    fn norm_form_is_multiplicative(a in any_biquat(), b in any_biquat()) {
        let lhs = (a * b).norm_form();
        let rhs = a.norm_form() * b.norm_form();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm().max(rhs.norm())));
    }

    #[test]
    fn nth_roots_power_back_and_are_distinct(z in complex_in(50.0), n in 2u32..8) {
        prop_assume!(z.norm() > 1e-6);
        let roots = complex_nth_roots(z, n);
        prop_assert_eq!(roots.len(), n as usize);
        for (i, w) in roots.iter().enumerate() {
            let powered = (0..n).fold(c(1.0, 0.0), |acc, _| acc * w);
            prop_assert!((powered - z).norm() <= 1e-12 * (1.0 + z.norm()));
            for w2 in &roots[i + 1..] {
                prop_assert!((w - w2).norm() > 1e-9);
            }
        }
    }

    #[test]
    fn sqrt_squares_back(z in complex_in(100.0)) {
        let p = complex_sqrt(z, Branch::Principal);
        prop_assert!((p * p - z).norm() <= 1e-14 * (1.0 + z.norm()));
        prop_assert_eq!(complex_sqrt(z, Branch::Negated), -p);
        prop_assert!(p.re >= 0.0 || (p.re == 0.0 && p.im >= 0.0) || p.re.abs() < 1e-300);
    }

    #[test]
    fn qmatrix_is_a_homomorphism(a in any_biquat(), b in any_biquat()) {
        let lhs = to_qmatrix(a * b);
        let rhs = &to_qmatrix(a) * &to_qmatrix(b);
        prop_assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    #[test]
    fn determinant_is_squared_norm_form(a in any_biquat()) {
        let det = to_qmatrix(a).det();
        let nf = a.norm_form();
        prop_assert!((det - nf * nf).norm() <= 1e-10 * (1.0 + det.norm().max((nf * nf).norm())));
    }

    #[test]
    fn char_poly_matches_numeric_determinant(a in any_biquat(), ys in prop::array::uniform5(complex_in(3.0))) {
        // Five agreement points pin a degree-4 polynomial.
        let p = char_poly(a);
        let m = to_qmatrix(a);
        for y in ys {
            let shifted = &Matrix4C::identity().scale(y) - &m;
            let det = shifted.det();
            prop_assert!((p.eval(y) - det).norm() <= 1e-9 * (1.0 + det.norm()));
        }
    }

    #[test]
    fn minimal_polynomial_annihilates(a in any_biquat()) {
        let m = min_poly(a, DEFAULT_TOL);
        let residue = m.eval_matrix(&to_qmatrix(a));
        let scale = to_qmatrix(a).norm_inf();
        prop_assert!(residue.norm_inf() <= 1e-9 * (1.0 + scale * scale));
    }

    #[test]
    fn reduced_adjugate_relation(a in any_biquat(), y in complex_in(5.0)) {
        let lhs = &(&Matrix4C::identity().scale(y) - &to_qmatrix(a)) * &reduced_adjugate(a, y);
        let rhs = Matrix4C::identity().scale(min_poly(a, DEFAULT_TOL).eval(y));
        prop_assert!(lhs.approx_eq(&rhs, 1e-10));
    }

    #[test]
    fn subcase_discriminants_cannot_all_vanish(v in null_vector().boxed().prop_union(
        (complex_in(2.0), complex_in(2.0), complex_in(2.0))
            .prop_map(|(a, b, x)| CVector3::new(a, b, x)).boxed()))
    {
        // 2 a1^2 = q_b + q_c - q_a and cyclically, so the largest
        // discriminant is at least (2/3) max_j |a_j|^2.
        let q_max = (v.c2 * v.c2 + v.c3 * v.c3)
            .norm()
            .max((v.c1 * v.c1 + v.c3 * v.c3).norm())
            .max((v.c1 * v.c1 + v.c2 * v.c2).norm());
        let comp_max = v.c1.norm().max(v.c2.norm()).max(v.c3.norm());
        prop_assert!(q_max >= 0.66 * comp_max * comp_max - 1e-12);
    }

    #[test]
    fn jordan_reconstructs_generic_inputs(a in generic_biquat()) {
        let d = jordan_form(a, DEFAULT_TOL, Branch::Principal).unwrap();
        prop_assert_eq!(d.kind, JordanKind::Diagonalizable);
        let rebuilt = &(&d.u * &d.j) * &d.u_inv;
        prop_assert!(rebuilt.approx_eq(&to_qmatrix(a), 1e-9));
        prop_assert!((&d.u * &d.u_inv).approx_eq(&Matrix4C::identity(), 1e-9));
    }

    #[test]
    fn jordan_reconstructs_nilpotent_inputs(a0 in complex_in(2.0), v in null_vector()) {
        let a = Biquaternion::new(a0, v);
        let d = jordan_form(a, DEFAULT_TOL, Branch::Principal).unwrap();
        prop_assert_eq!(d.kind, JordanKind::Nilpotent2);
        let rebuilt = &(&d.u * &d.j) * &d.u_inv;
        prop_assert!(rebuilt.approx_eq(&to_qmatrix(a), 1e-9));
        prop_assert!((&d.u * &d.u_inv).approx_eq(&Matrix4C::identity(), 1e-9));
    }

    #[test]
    fn jordan_picks_the_largest_discriminant(a in generic_biquat()) {
        let d = jordan_form(a, DEFAULT_TOL, Branch::Principal).unwrap();
        let [_, a1, a2, a3] = a.components();
        let qs = [
            (Subcase::A, (a2 * a2 + a3 * a3).norm()),
            (Subcase::B, (a1 * a1 + a3 * a3).norm()),
            (Subcase::C, (a1 * a1 + a2 * a2).norm()),
        ];
        let max = qs.iter().map(|(_, q)| *q).fold(0.0, f64::max);
        let selected = qs.iter().find(|(s, _)| *s == d.subcase).unwrap().1;
        prop_assert!(selected >= max * (1.0 - 1e-12));
    }

    #[test]
    fn transformation_columns_come_from_the_reduced_adjugate(a in generic_biquat()) {
        let d = jordan_form(a, DEFAULT_TOL, Branch::Principal).unwrap();
        let (y1, y2) = d.eigenvalues;
        let c1 = reduced_adjugate(a, y1);
        let c2 = reduced_adjugate(a, y2);
        // Column picks per subcase: two eigencolumns at y1, two at y2.
        let picks: [(usize, &Matrix4C); 4] = match d.subcase {
            Subcase::A => [(0, &c1), (1, &c1), (2, &c2), (3, &c2)],
            Subcase::B => [(0, &c1), (2, &c1), (1, &c2), (3, &c2)],
            Subcase::C => [(0, &c1), (3, &c1), (1, &c2), (2, &c2)],
            Subcase::NotApplicable => unreachable!(),
        };
        for (u_col, (src_col, src)) in picks.iter().enumerate() {
            let got = d.u.col(u_col);
            let want = src.col(*src_col);
            for (g, w) in got.iter().zip(want) {
                prop_assert!((g - w).norm() <= 1e-12 * (1.0 + w.norm()));
            }
        }
    }

    #[test]
    fn eigenvalues_solve_the_characteristic_polynomial(a in any_biquat()) {
        let p = char_poly(a);
        let (y1, y2) = eigenvalues(a, Branch::Principal);
        let scale = 1.0 + a.norm_inf().powi(4);
        prop_assert!(p.eval(y1).norm() <= 1e-9 * scale);
        prop_assert!(p.eval(y2).norm() <= 1e-9 * scale);
    }

    #[test]
    fn generic_roots_are_distinct_and_verified(a in generic_biquat(), n in 2u32..5) {
        prop_assume!(classify(a, DEFAULT_TOL) == CaseLabel::GenericInvertible);
        let set = solve_nth_root(a, n, DEFAULT_TOL, Branch::Principal);
        prop_assert_eq!(set.isolated.len(), (n * n) as usize);
        for (i, x) in set.isolated.iter().enumerate() {
            prop_assert!(x.pow(n).approx_eq(a, 1e-9));
            for x2 in &set.isolated[i + 1..] {
                prop_assert!(!x.approx_eq(*x2, 1e-7));
            }
        }
    }

    #[test]
    fn branch_choice_permutes_but_preserves_the_set(a in generic_biquat(), n in 2u32..4) {
        prop_assume!(classify(a, DEFAULT_TOL) == CaseLabel::GenericInvertible);
        let principal = solve_nth_root(a, n, DEFAULT_TOL, Branch::Principal);
        let negated = solve_nth_root(a, n, DEFAULT_TOL, Branch::Negated);
        prop_assert!(sets_match(&principal.isolated, &negated.isolated, 1e-9));
    }

    #[test]
    fn matrix_route_agrees_with_quaternion_route(a in generic_biquat(), n in 2u32..4) {
        prop_assume!(classify(a, DEFAULT_TOL) == CaseLabel::GenericInvertible);
        let set = solve_nth_root(a, n, DEFAULT_TOL, Branch::Principal);
        let target = to_qmatrix(a);
        for x in set.isolated.iter().take(4) {
            let powered = matrix_pow(&to_qmatrix(*x), n);
            prop_assert!(powered.approx_eq(&target, 1e-9));
        }
    }

    #[test]
    fn family_members_are_roots(a0 in complex_in(3.0), n in 2u32..5,
                                p1 in complex_in(2.0), p2 in complex_in(2.0)) {
        prop_assume!(a0.norm() > 0.2);
        let a = Biquaternion::from_scalar(a0);
        let set = solve_nth_root(a, n, DEFAULT_TOL, Branch::Principal);
        for family in &set.families {
            let x = sample_family(family, p1, p2, Branch::Principal);
            prop_assert!(x.pow(n).approx_eq(a, 1e-9));
            prop_assert!(family.contains(x, 1e-9));
        }
    }

    #[test]
    fn every_case_keeps_its_count_contract(a0 in complex_in(2.0), v in null_vector(),
                                           g in generic_biquat(), n in 2u32..5) {
        prop_assume!(a0.norm() > 0.2);
        let zero = ComplexScalar::new(0.0, 0.0);
        // One representative input per case label.
        let inputs = [
            Biquaternion::from_scalar(a0),
            Biquaternion::zero(),
            g,
            singular_from(a0, v),
            Biquaternion::new(a0, v),
            Biquaternion::new(zero, v),
        ];
        for a in inputs {
            let set = solve_nth_root(a, n, DEFAULT_TOL, Branch::Principal);
            let (want_isolated, want_families) = set.case.expected_counts(n);
            prop_assert_eq!(set.isolated.len(), want_isolated, "case {}", set.case);
            prop_assert_eq!(set.families.len(), want_families, "case {}", set.case);
            prop_assert_eq!(set.insoluble.is_some(), set.case == CaseLabel::NilpotentSingular);
        }
    }
}

// A generic-singular input: vector square forced to -a0^2.
fn singular_from(a0: ComplexScalar, null: CVector3) -> Biquaternion {
    // Reuse two free components of the null vector, then fix the third.
    let p1 = null.c1;
    let p2 = null.c2;
    let x3 = complex_sqrt(-a0 * a0 - p1 * p1 - p2 * p2, Branch::Principal);
    Biquaternion::new(a0, CVector3::new(p1, p2, x3))
}

#[test]
fn product_does_not_commute() {
    let a = Biquaternion::from_components(c(1.0, 0.0), c(2.0, 1.0), c(0.0, 0.0), c(0.0, 0.0));
    let b = Biquaternion::from_components(c(0.5, 0.0), c(0.0, 0.0), c(3.0, 0.0), c(0.0, -1.0));
    let forward = a * b;
    let backward = b * a;
    assert!((forward - backward).norm_inf() > 0.1);
}

#[test]
fn classification_is_total_and_unique() {
    // Every input gets exactly one label; spot-check the partition edges.
    let samples = [
        Biquaternion::zero(),
        Biquaternion::one(),
        Biquaternion::from_components(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)),
        Biquaternion::from_components(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)),
        Biquaternion::from_components(c(-8.0, 8.0), c(-16.0, 8.0), c(-8.0, 24.0), c(24.0, 16.0)),
        Biquaternion::from_components(c(76.0, 0.0), c(0.0, 24.0), c(0.0, 12.0), c(0.0, -41.0)),
    ];
    let expect = [
        CaseLabel::ZeroQuaternion,
        CaseLabel::ScalarInvertible,
        CaseLabel::NilpotentSingular,
        CaseLabel::NilpotentInvertible,
        CaseLabel::GenericSingular,
        CaseLabel::GenericInvertible,
    ];
    for (a, want) in samples.iter().zip(expect) {
        assert_eq!(classify(*a, DEFAULT_TOL), want);
    }
}
