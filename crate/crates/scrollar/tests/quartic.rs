use proptest::prelude::*;
use scrollar::exactmath::{MultiPoly, Ring};
use scrollar::polytopes::{lattice_points, polytope_p};
use scrollar::quartic::*;

fn q(e: [i64; 3], f: [i64; 2]) -> Quintuple {
    Quintuple::new(e, f).unwrap()
}

#[test]
fn classification_examples() {
    assert_eq!(classify_quintuple(&q([12, 12, 12], [18, 18])), QuintupleClass::PrimitiveFeasible);
    assert_eq!(classify_quintuple(&q([1, 6, 6], [2, 11])), QuintupleClass::ImprimitiveOnly);
    assert_eq!(classify_quintuple(&q([1, 6, 6], [3, 10])), QuintupleClass::Infeasible);
    assert!(Quintuple::new([2, 1, 3], [3, 3]).is_err());
    assert!(Quintuple::new([1, 2, 3], [4, 2]).is_err());
    assert!(Quintuple::new([1, 2, 3], [2, 3]).is_err());
}

#[test]
fn feasible_examples() {
    assert_eq!(feasible_quintuple([2, 3, 4]).unwrap().f, [4, 5]);
    assert_eq!(feasible_quintuple([1, 2, 3]).unwrap().f, [2, 4]);
    assert_eq!(feasible_quintuple([12, 12, 12]).unwrap().f, [18, 18]);
    assert_eq!(feasible_quintuple([4, 3, 2]).unwrap().e, [2, 3, 4]);
    assert!(feasible_quintuple([1, 3, 5]).is_err());
    assert!(feasible_quintuple([0, 3, 3]).is_err());
}

#[test]
fn sweep_matches_direct_enumeration() {
    let p4 = polytope_p(4).unwrap();
    for n in 3..=30 {
        let sweep = sweep_level(n).unwrap();
        let direct = lattice_points(4, n - 3, &p4).unwrap();
        assert_eq!(sweep.len(), direct.len(), "level {n}");
        for (quint, class) in sweep {
            assert_eq!(class, QuintupleClass::PrimitiveFeasible, "{quint:?}");
            assert!(in_q4(&quint).unwrap());
            assert_eq!(quint.level(), n);
        }
    }
}

/// Sarrus expansion of the 3x3 pencil determinant.
fn cofactor_det(e: [i64; 3], f: [i64; 2]) -> MultiPoly {
    let [e1, e2, e3] = e;
    let [f1, f2] = f;
    let m = |exps: [u32; 4]| MultiPoly::from_terms(&RESOLVENT_VARS, &[(exps.to_vec(), 1)]).unwrap();
    let a = m([(2 * e1 - f1) as u32, 0, 1, 0]);
    let b = m([(e2 + e3 - f1 - 1) as u32, 1, 1, 0]);
    let c = m([(e1 + e3 - f2) as u32, 0, 0, 1]);
    let d = m([(2 * e2 - f2) as u32, 0, 0, 1]);
    // | a 0 c ; 0 d b ; c b 0 | = -a b^2 - c^2 d
    a.mul(&b.pow(2)).add(&c.pow(2).mul(&d)).neg()
}

#[test]
fn resolvent_examples() {
    let r = resolvent_det([1, 2, 3], [2, 4]).unwrap();
    assert!(r.matches);
    let want = MultiPoly::from_terms(&RESOLVENT_VARS, &[(vec![4, 2, 3, 0], -1), (vec![0, 0, 0, 3], -1)]).unwrap();
    assert_eq!(r.det(), &want);
    let r = resolvent_det([2, 3, 4], [4, 5]).unwrap();
    assert!(r.matches);
    assert_eq!(r.det(), &cofactor_det([2, 3, 4], [4, 5]));
    let coeffs = r.coefficients();
    assert_eq!(coeffs.len(), 2);
    assert!(resolvent_det([1, 2, 3], [3, 3]).is_err());
}

#[test]
fn resolvent_at_t_zero_is_a_cube() {
    let r = resolvent_det([2, 3, 4], [4, 5]).unwrap();
    for ((a, b), form) in r.coefficients() {
        let at_t0 = form.coeff(0);
        if (a, b) == (3, 0) {
            assert!(at_t0.is_zero());
        } else {
            assert_eq!((a, b), (0, 3));
            assert!(!at_t0.is_zero());
        }
    }
}

#[test]
fn fin_examples() {
    let d = fin_diagnostics([3, 8, 8], 16).unwrap();
    assert_eq!(d.h, 2);
    assert!(d.on_line);
    for m in 3..8 {
        assert_eq!(fin_diagnostics([1, m, m], 2 * m - 2).unwrap().h, 0);
    }
    assert!(fin_diagnostics([2, 3, 4], 6).is_err());
    assert!(fin_diagnostics([3, 8, 8], 17).is_err());
}

#[test]
fn conic_layout_examples() {
    let l = conic_layout([1, 2, 3], [2, 4]);
    assert!(l.forced_zero[1][0][0]);
    assert!(l.forced_zero[1][0][1]);
    assert!(!l.forced_zero[1][0][2]);
    assert_eq!(l.degrees[1][0][2], 0);
    assert!(!l.hyperelliptic_shape);
    let l = conic_layout([1, 6, 6], [2, 11]);
    assert!(l.hyperelliptic_shape);
    assert!(!l.forced_zero[1][1][1] && !l.forced_zero[1][1][2] && !l.forced_zero[1][2][2]);
    let l = conic_layout([2, 2, 2], [3, 3]);
    assert!(l.degrees.iter().flatten().flatten().all(|&x| x == 1));
    assert!(!l.forced_zero.iter().flatten().flatten().any(|&z| z));
}

fn quintuple_strategy() -> impl Strategy<Value = Quintuple> {
    (0i64..15, 0i64..15, 0i64..15, 0i64..50).prop_map(|(a, b, c, f)| {
        let mut e = [a, b, c];
        e.sort_unstable();
        let n: i64 = e.iter().sum();
        let f1 = f % (n / 2 + 1);
        Quintuple::new(e, [f1, n - f1]).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn primitive_iff_scaled_in_q4(quint in quintuple_strategy()) {
        prop_assume!(quint.level() > 0);
        let primitive = classify_quintuple(&quint) == QuintupleClass::PrimitiveFeasible;
        prop_assert_eq!(primitive, quint.e[0] >= 1 && in_q4(&quint).unwrap());
        if classify_quintuple(&quint) == QuintupleClass::ImprimitiveOnly {
            prop_assert!(in_q4prime(&quint).unwrap());
            prop_assert!(!in_q4(&quint).unwrap());
            prop_assert_eq!(quint.f[0], 2 * quint.e[0]);
        }
    }

    #[test]
    fn resolvent_matches_cofactors(quint in quintuple_strategy()) {
        if let Ok(r) = resolvent_det(quint.e, quint.f) {
            prop_assert!(r.matches);
            prop_assert_eq!(r.det(), &cofactor_det(quint.e, quint.f));
        }
    }
}
