use num_integer::Integer;
use num_traits::ToPrimitive;

use super::report::{
    BuildOptions, ConstructionSpec, CoverReport, EtaleMethod, PointCheck, Verdict, Verdicts,
};
use crate::error::{precondition, Error, Result};
use crate::exactmath::{
    discriminant_form, floor_i64, is_integral, lower_convex_hull, rat_int, BivarHomog, CoeffField,
    Rational, Ring,
};
use crate::polytopes::{is_concave, ScrollarProfile};
use crate::rng::attempt_stream;
use crate::woodalg::{
    check_associativity, detect_subalgebra_prefix, fiber_at, rescale_at, wood_table, HirzebruchForm,
    StructureTable, TableDocument,
};

/// `alpha s + beta t` from `[alpha, beta]`.
pub fn linear_form(field: CoeffField, row: &[Rational]) -> Result<BivarHomog> {
    if row.len() != 2 {
        return Err(Error::Arity { expected: 2, got: row.len() });
    }
    let ell = BivarHomog::linear(field.from_rational(&row[0])?, field.from_rational(&row[1])?);
    if ell.is_zero() {
        return precondition("linear form must be nonzero");
    }
    Ok(ell)
}

/// Concave construction: `a = e_1`, `k = 0`, forms with `t^{ia - e_i} | f_i`.
pub fn build_concave(e: &[i64], opts: &BuildOptions) -> Result<CoverReport> {
    let d = e.len() + 1;
    if d < 2 {
        return Err(Error::DegreeOutOfRange { got: d, min: 2, max: usize::MAX });
    }
    if e.iter().any(|&x| x < 1) {
        return precondition("concave construction needs all e_i >= 1");
    }
    let mut padded = vec![0];
    padded.extend_from_slice(e);
    padded.push(0);
    if !is_concave(e) {
        return precondition(format!("{padded:?} is not concave"));
    }
    let a = e[0];
    let a_vec: Vec<i64> = padded.iter().enumerate().map(|(i, ei)| i as i64 * a - ei).collect();
    let spec = ConstructionSpec::Concave { e: e.to_vec() };
    let mut report = run(spec, &[Point::at_t(opts.field, a_vec)], 0, a, opts)?;
    report.non_floored_profile = None;
    report
        .notes
        .push("primitivity is cited from the concave construction, not computed".into());
    Ok(report)
}

/// Newton-polygon construction at `t = 0`.
pub fn build_general(a_vec: &[i64], k: i64, a: i64, opts: &BuildOptions) -> Result<CoverReport> {
    let spec = ConstructionSpec::General { a_vec: a_vec.to_vec(), k, a };
    run(spec, &[Point::at_t(opts.field, a_vec.to_vec())], k, a, opts)
}

/// Newton-polygon construction at several points `ell_j = 0`.
pub fn build_multipoint(
    a_matrix: &[Vec<i64>],
    forms: &[BivarHomog],
    k: i64,
    a: i64,
    opts: &BuildOptions,
) -> Result<CoverReport> {
    if a_matrix.len() != forms.len() {
        return Err(Error::Arity { expected: a_matrix.len(), got: forms.len() });
    }
    if a_matrix.is_empty() {
        return precondition("at least one point is required");
    }
    for (x, ell) in forms.iter().enumerate() {
        if ell.degree() != 1 || ell.is_zero() {
            return precondition(format!("form {x} is not a nonzero linear form"));
        }
        if ell.field() != opts.field {
            return Err(Error::FieldMismatch(opts.field.to_string(), ell.field().to_string()));
        }
        for (y, other) in forms.iter().enumerate().take(x) {
            // alpha beta' - alpha' beta = 0 iff proportional.
            let det = ell.coeff(0).mul(other.coeff(1)).sub(&ell.coeff(1).mul(other.coeff(0)));
            if det.is_zero() {
                return precondition(format!("linear forms {y} and {x} are proportional"));
            }
        }
    }
    let spec = ConstructionSpec::Multipoint {
        a_matrix: a_matrix.to_vec(),
        linear_forms: forms
            .iter()
            .map(|l| vec![l.coeff(0).to_rational(), l.coeff(1).to_rational()])
            .collect(),
        k,
        a,
    };
    let points: Vec<Point> = a_matrix
        .iter()
        .zip(forms)
        .map(|(row, ell)| Point { ell: ell.clone(), row: row.clone() })
        .collect();
    run(spec, &points, k, a, opts)
}

struct Point {
    ell: BivarHomog,
    row: Vec<i64>,
}

impl Point {
    fn at_t(field: CoeffField, row: Vec<i64>) -> Self {
        Point { ell: BivarHomog::linear(field.zero(), field.one()), row }
    }

    fn is_t(&self) -> bool {
        self.ell.coeff(0).is_zero()
    }
}

fn run(spec: ConstructionSpec, points: &[Point], k: i64, a: i64, opts: &BuildOptions) -> Result<CoverReport> {
    let d = points[0].row.len().saturating_sub(1);
    if d < 2 {
        return Err(Error::DegreeOutOfRange { got: d, min: 2, max: usize::MAX });
    }
    if a < 0 || k < 0 {
        return precondition("a and k must be nonnegative");
    }
    for p in points {
        if p.row.len() != d + 1 {
            return Err(Error::Arity { expected: d + 1, got: p.row.len() });
        }
        if p.row.iter().any(|&x| x < 0) {
            return precondition("vanishing orders must be nonnegative");
        }
    }
    let degs: Vec<i64> = (0..=d).map(|i| k + i as i64 * a).collect();
    for i in 0..=d {
        let need: i64 = points.iter().map(|p| p.row[i]).sum();
        if need > degs[i] {
            return precondition(format!("deg f_{i} = {} is smaller than the forced order {need}", degs[i]));
        }
    }
    if opts.retries == 0 {
        return Err(Error::RetryExhausted { attempts: 0, seed: opts.seed });
    }

    let hulls: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| lower_convex_hull(&p.row.iter().map(|&x| rat_int(x)).collect::<Vec<_>>()))
        .collect();
    let shifts: Vec<Vec<i64>> = hulls
        .iter()
        .map(|b| (0..d).map(|i| if i == 0 { 0 } else { floor_i64(&b[i]) }).collect())
        .collect();
    let profile: Vec<i64> = (1..d)
        .map(|i| degs[i] - shifts.iter().map(|c| c[i]).sum::<i64>())
        .collect();
    let non_floored: Vec<Rational> = (1..d)
        .map(|i| rat_int(degs[i]) - hulls.iter().map(|b| b[i].clone()).sum::<Rational>())
        .collect();
    let all_integral = hulls.iter().all(|b| b.iter().all(is_integral));

    for attempt in 0..opts.retries {
        let mut rng = attempt_stream(opts.seed, attempt);
        let mut f = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let forced: i64 = points.iter().map(|p| p.row[i]).sum();
            let mut g = BivarHomog::random(opts.field, (degs[i] - forced) as usize, &mut rng);
            for p in points {
                let m = p.row[i] as usize;
                g = if p.is_t() { g.mul_t_pow(m) } else { g.mul(&p.ell.pow(m as u32)) };
            }
            f.push(g);
        }
        let Ok(form) = HirzebruchForm::new(a, k, f) else {
            continue;
        };
        let mut table = wood_table(&form);
        for (p, c) in points.iter().zip(&shifts) {
            table = rescale_at(&table, &p.ell, c)?;
        }
        table.check_degrees()?;
        let disc = form.discriminant();
        let checks = points
            .iter()
            .zip(&hulls)
            .zip(&shifts)
            .map(|((p, b), c)| point_check(&form, &disc, &table, p, b, c))
            .collect::<Result<Vec<_>>>()?;
        if checks.iter().any(|c| c.etale == Verdict::Fail) {
            continue;
        }
        let claimed = ScrollarProfile::new(profile.clone())?;
        let assoc = check_associativity(&table);
        let mut notes = Vec::new();
        if let Some(w) = assoc.witness {
            notes.push(format!("associativity fails at {w:?}"));
        }
        return Ok(CoverReport {
            spec,
            field: opts.field,
            seed: opts.seed,
            attempts: attempt + 1,
            genus: claimed.genus(),
            disc_degree: 2 * table.degrees().iter().sum::<i64>(),
            verdicts: Verdicts {
                closure: Verdict::Pass,
                associativity: Verdict::from_bool(assoc.associative),
                etale: Verdict::Pass,
                h0: Verdict::from_bool(claimed.is_positive()),
            },
            profile: claimed,
            points: checks,
            non_floored_profile: (!all_integral).then_some(non_floored.clone()),
            subalgebras: detect_subalgebra_prefix(&table),
            factor_spans: Vec::new(),
            notes,
            table: TableDocument::from(&table),
        });
    }
    Err(Error::RetryExhausted { attempts: opts.retries, seed: opts.seed })
}

fn point_check(
    form: &HirzebruchForm,
    disc: &BivarHomog,
    table: &StructureTable<BivarHomog>,
    p: &Point,
    hull: &[Rational],
    shifts: &[i64],
) -> Result<PointCheck> {
    let d = form.d;
    let expected: Rational = rat_int(2) * hull[1..d].iter().cloned().sum::<Rational>();
    let disc_valuation = disc.multiplicity(&p.ell).map(|v| v as u64);
    let denom_lcm = hull.iter().fold(1u64, |acc, b| {
        acc.lcm(&b.denom().to_u64().expect("hull denominators are at most d"))
    });
    let (etale, method) = if denom_lcm == 1 {
        let (s0, t0) = BivarHomog::root_of_linear(&p.ell).expect("validated linear form");
        (fiber_at(table, (&s0, &t0))?.is_etale(), EtaleMethod::Fiber)
    } else {
        (power_substitution_valuation_ok(form, &p.ell, denom_lcm, &expected)?, EtaleMethod::PowerSubstitution { l: denom_lcm })
    };
    Ok(PointCheck {
        linear_form: vec![p.ell.coeff(0).to_rational(), p.ell.coeff(1).to_rational()],
        row: p.row.clone(),
        hull: hull.to_vec(),
        shifts: shifts.to_vec(),
        disc_valuation,
        expected_disc_valuation: expected,
        etale: Verdict::from_bool(etale),
        method,
    })
}

/// Move `ell` to `t`, substitute `s -> s^l, t -> t^l`, and compare the
/// `t`-adic valuation of the discriminant with `l * expected`.
fn power_substitution_valuation_ok(
    form: &HirzebruchForm,
    ell: &BivarHomog,
    l: u64,
    expected: &Rational,
) -> Result<bool> {
    let (s_img, t_img) = BivarHomog::straightening(ell)
        .ok_or_else(|| Error::Internal("linear form cannot be moved to t".into()))?;
    let lifted: Vec<BivarHomog> = form
        .coeffs()
        .iter()
        .map(|g| g.compose_linear(&s_img, &t_img).substitute_power(l as usize))
        .collect();
    let target = rat_int(l as i64) * expected;
    let disc = discriminant_form(&lifted)?;
    Ok(disc.t_valuation().finite().map(|v| rat_int(v as i64)) == Some(target))
}
