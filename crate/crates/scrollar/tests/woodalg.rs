use proptest::prelude::*;
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;
use scrollar::exactmath::*;
use scrollar::woodalg::*;

const F: CoeffField = CoeffField::PrimeField(10007);

fn random_form(d: usize, a: i64, k: i64, seed: u64) -> HirzebruchForm {
    let mut rng = SplitMix64::seed_from_u64(seed);
    HirzebruchForm::random(d, a, k, F, None, &mut rng).unwrap()
}

#[test]
fn quadratic_table_by_hand() {
    // x_1^2 = -f_1 x_1 - f_0 f_2 for x_1 = f_0 x.
    let g = MultiPoly::gens(&["F0", "F1", "F2"]).unwrap();
    let t = universal_wood_table(2).unwrap();
    assert_eq!(t.product(1, 1), vec![g[0].mul(&g[2]).neg(), g[1].neg()]);
}

#[test]
fn universal_tables_associative() {
    for d in 2..=4 {
        let t = universal_wood_table(d).unwrap();
        assert!(check_associativity(&t).associative, "d={d}");
    }
}

#[test]
fn tampered_table_is_caught() {
    let t = wood_table(&random_form(4, 1, 1, 9));
    let c = t.constant(1, 2, 3);
    let bumped = c.add(&BivarHomog::s_pow(F, c.degree()));
    let bad = t.with_constant(1, 2, 3, bumped).unwrap();
    let check = check_associativity(&bad);
    assert!(!check.associative);
    assert!(check.witness.is_some());
}

#[test]
fn trace_discriminant_matches_form_discriminant() {
    for d in 2..=5 {
        for seed in 0..3 {
            let form = random_form(d, 1, 1, seed);
            let alg = algebra_discriminant(&wood_table(&form));
            let disc = discriminant_binary(form.coeffs()).unwrap();
            assert!(alg.sub(&disc).is_zero(), "d={d} seed={seed}");
            assert_eq!(alg.degree() as i64, 2 * form.degrees().iter().sum::<i64>());
        }
    }
}

#[test]
fn fibers_detect_branch_points() {
    // f = x (x - y)(x - t y) over F_a with a = 0, k = 1 after twisting by s.
    let s = BivarHomog::linear(F.one(), F.zero());
    let t = BivarHomog::linear(F.zero(), F.one());
    let f = vec![s.clone(), s.add(&t).neg(), t.clone(), BivarHomog::zero(F, 1)];
    let form = HirzebruchForm::new(0, 1, f).unwrap();
    let table = wood_table(&form);
    let disc = form.discriminant();
    for (a, b) in [(1, 0), (0, 1), (1, 1), (1, 5), (3, 2)] {
        let (a, b) = (F.from_int(a), F.from_int(b));
        let fiber = fiber_at(&table, (&a, &b)).unwrap();
        assert_eq!(fiber.dimension(), 3);
        assert_eq!(is_etale(&fiber), !disc.eval(&a, &b).is_zero());
    }
    // t = 0 collides two roots.
    assert!(!fiber_at(&table, (&F.one(), &F.zero())).unwrap().is_etale());
    assert!(fiber_at(&table, (&F.zero(), &F.zero())).is_err());
}

#[test]
fn rescale_needs_valuation() {
    let mut rng = SplitMix64::seed_from_u64(3);
    // Concave target (2,3,4) with a = 2: t^{2i - e_i} divides f_i.
    let div = [0usize, 0, 1, 2, 8];
    let form = HirzebruchForm::random(4, 2, 0, F, Some(&div), &mut rng).unwrap();
    let table = wood_table(&form);
    let r = rescale(&table, &[0, 0, 1, 2]).unwrap();
    assert_eq!(r.degrees(), &[0, 2, 3, 4]);
    r.check_degrees().unwrap();
    assert!(check_associativity(&r).associative);
    let plain = wood_table(&random_form(4, 2, 0, 4));
    assert!(matches!(rescale(&plain, &[0, 0, 1, 2]), Err(scrollar::Error::Closure { .. })));
    assert!(rescale(&plain, &[1, 0, 0, 0]).is_err());
    assert!(rescale(&plain, &[0, 0]).is_err());
}

#[test]
fn rescale_at_other_point_matches_straightened() {
    // Divisibility by (s - t) instead of t.
    let ell = BivarHomog::linear(F.one(), F.from_int(-1));
    let mut rng = SplitMix64::seed_from_u64(11);
    let f: Vec<BivarHomog> = (0..=4)
        .map(|i| {
            let m = [0u32, 0, 1, 2, 8][i];
            BivarHomog::random(F, 2 * i - m as usize, &mut rng).mul(&ell.pow(m))
        })
        .collect();
    let form = HirzebruchForm::new(2, 0, f).unwrap();
    let r = rescale_at(&wood_table(&form), &ell, &[0, 0, 1, 2]).unwrap();
    assert_eq!(r.degrees(), &[0, 2, 3, 4]);
    assert!(check_associativity(&r).associative);
}

#[test]
fn split_prefix_subalgebra() {
    let form = random_form(4, 1, 1, 5);
    let t = wood_table(&form);
    assert!(detect_subalgebra_prefix(&t).is_empty());
    let f = vec![
        BivarHomog::constant(F.one()),
        BivarHomog::zero(F, 0),
        BivarHomog::constant(F.from_int(3)),
        BivarHomog::zero(F, 0),
        BivarHomog::constant(F.from_int(2)),
    ];
    // x^4 + 3 x^2 y^2 + 2 y^4 is a quadratic in x^2.
    let t = wood_table(&HirzebruchForm::new(0, 0, f).unwrap());
    let prefixes = detect_subalgebra_prefix(&t);
    assert!(t.is_subalgebra_span(&[0, 2]));
    assert!(prefixes.iter().all(|p| p.rank < 4));
}

#[test]
fn table_document_roundtrip() {
    let t = wood_table(&random_form(3, 1, 2, 21));
    let doc = TableDocument::from(&t);
    let json = serde_json::to_string(&doc).unwrap();
    let back: TableDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(back, doc);
    assert_eq!(back.to_table().unwrap(), t);
    let mut broken = doc.clone();
    broken.field = CoeffField::PrimeField(10008);
    assert!(broken.to_table().is_err());
}

#[test]
fn form_validation() {
    assert!(HirzebruchForm::new(0, 0, vec![BivarHomog::constant(F.one()); 2]).is_err());
    assert!(HirzebruchForm::new(-1, 0, vec![BivarHomog::constant(F.one()); 3]).is_err());
    assert!(HirzebruchForm::new(1, 0, vec![BivarHomog::constant(F.one()); 3]).is_err());
    assert!(HirzebruchForm::new(0, 0, vec![BivarHomog::zero(F, 0); 3]).is_err());
    assert!(discriminant_unit(1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_tables_associative(seed in any::<u64>(), d in 2usize..7, a in 0i64..3, k in 0i64..3) {
        let t = wood_table(&random_form(d, a, k, seed));
        prop_assert!(check_associativity(&t).associative);
        prop_assert!(t.check_degrees().is_ok());
    }

    #[test]
    fn fiber_etale_iff_disc_nonzero(seed in any::<u64>(), d in 2usize..6, p0 in 0i64..10007, p1 in 0i64..10007) {
        prop_assume!(p0 != 0 || p1 != 0);
        let form = random_form(d, 1, 1, seed);
        let (s0, t0) = (F.from_int(p0), F.from_int(p1));
        let fiber = fiber_at(&wood_table(&form), (&s0, &t0)).unwrap();
        let disc = discriminant_binary(form.coeffs()).unwrap();
        prop_assert_eq!(fiber.is_etale(), !disc.eval(&s0, &t0).is_zero());
    }
}
