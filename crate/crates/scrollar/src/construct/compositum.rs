use std::collections::BTreeMap;

use num_integer::Integer;
use rand::seq::index;

use super::report::{
    BuildOptions, ConstructionSpec, CoverReport, CyclicFactor, FactorSpan, Verdict, Verdicts,
};
use crate::error::{precondition, Error, Result};
use crate::exactmath::{BivarHomog, CoeffField, Ring, Scalar};
use crate::polytopes::ScrollarProfile;
use crate::rng::attempt_stream;
use crate::woodalg::{check_associativity, detect_subalgebra_prefix, StructureTable, TableDocument};

/// Table of `O[z_1, ..., z_m] / (z_r^{p_r} - f_r)`.
///
/// The basis is the monomials `z^j`, `0 <= j_r < p_r`, ordered by degree
/// `sum j_r deg(f_r) / p_r` and then lexicographically; the returned
/// exponent vectors list that order. Products carry `f_r` whenever an
/// exponent wraps past `p_r`.
pub fn cyclic_tensor_table(factors: &[(usize, BivarHomog)]) -> Result<(StructureTable<BivarHomog>, Vec<Vec<usize>>)> {
    if factors.is_empty() {
        return precondition("at least one cyclic factor is required");
    }
    let field = factors[0].1.field();
    let mut weights = Vec::with_capacity(factors.len());
    for (p, f) in factors {
        if *p < 2 {
            return precondition(format!("cyclic order {p} must be at least 2"));
        }
        if f.field() != field {
            return Err(Error::FieldMismatch(field.to_string(), f.field().to_string()));
        }
        if f.degree() % p != 0 {
            return precondition(format!("order {p} does not divide branch degree {}", f.degree()));
        }
        weights.push((f.degree() / p) as i64);
    }
    let mut basis: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, _) in factors {
        basis = basis
            .into_iter()
            .flat_map(|prefix| {
                (0..*p).map(move |j| {
                    let mut v = prefix.clone();
                    v.push(j);
                    v
                })
            })
            .collect();
    }
    let degree = |v: &[usize]| v.iter().zip(&weights).map(|(&j, w)| j as i64 * w).sum::<i64>();
    basis.sort_by(|u, v| degree(u).cmp(&degree(v)).then_with(|| u.cmp(v)));
    let position: BTreeMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let one = BivarHomog::constant(field.one());
    let mut constants = BTreeMap::new();
    for i in 1..basis.len() {
        for j in i..basis.len() {
            let mut coeff = one.clone();
            let mut target = Vec::with_capacity(factors.len());
            for (r, (p, f)) in factors.iter().enumerate() {
                let sum = basis[i][r] + basis[j][r];
                if sum >= *p {
                    coeff = coeff.mul(f);
                }
                target.push(sum % p);
            }
            constants.insert((i, j, position[&target]), coeff);
        }
    }
    let degrees = basis.iter().map(|v| degree(v)).collect();
    Ok((StructureTable::new(degrees, one, constants)?, basis))
}

/// Compositum of cyclic covers `z_r^{p_r} = f_r` with squarefree, pairwise
/// coprime branch forms.
pub fn build_cyclic_compositum(factors: &[CyclicFactor], opts: &BuildOptions) -> Result<CoverReport> {
    if factors.is_empty() {
        return precondition("at least one cyclic factor is required");
    }
    for (x, f) in factors.iter().enumerate() {
        if f.order < 2 {
            return precondition(format!("cyclic order {} must be at least 2", f.order));
        }
        if f.branch_degree == 0 || f.branch_degree % f.order != 0 {
            return precondition(format!(
                "order {} must divide the positive branch degree {}",
                f.order, f.branch_degree
            ));
        }
        for g in &factors[..x] {
            if f.order.gcd(&g.order) != 1 {
                return precondition(format!("orders {} and {} are not coprime", g.order, f.order));
            }
        }
    }
    let total_roots: usize = factors.iter().map(|f| f.branch_degree).sum();
    let pool = match opts.field.size() {
        Some(q) if (q as usize) < total_roots => {
            return precondition(format!("{} has fewer than {total_roots} points", opts.field));
        }
        Some(q) => q as usize,
        None => 4 * total_roots,
    };
    let mut rng = attempt_stream(opts.seed, 0);
    let roots = index::sample(&mut rng, pool, total_roots).into_vec();
    let mut used = 0;
    let mut forms = Vec::with_capacity(factors.len());
    for f in factors {
        let alphas = &roots[used..used + f.branch_degree];
        used += f.branch_degree;
        forms.push((f.order, split_form(opts.field, alphas)));
    }
    let (table, basis) = cyclic_tensor_table(&forms)?;
    table.check_degrees()?;
    let assoc = check_associativity(&table);
    let profile = ScrollarProfile::new(table.degrees()[1..].to_vec())?;
    let factor_spans = factors
        .iter()
        .enumerate()
        .map(|(r, f)| {
            let indices: Vec<usize> = basis
                .iter()
                .enumerate()
                .filter(|(_, v)| v.iter().enumerate().all(|(q, &j)| q == r || j == 0))
                .map(|(i, _)| i)
                .collect();
            FactorSpan {
                order: f.order,
                branch_degree: f.branch_degree,
                sub_profile: indices[1..].iter().map(|&i| table.degrees()[i]).collect(),
                is_subalgebra: table.is_subalgebra_span(&indices),
                indices,
            }
        })
        .collect();
    let mut notes = vec!["fibers are not checked; branch forms have distinct roots by sampling".to_string()];
    if let Some(w) = assoc.witness {
        notes.push(format!("associativity fails at {w:?}"));
    }
    Ok(CoverReport {
        spec: ConstructionSpec::CyclicCompositum { factors: factors.to_vec() },
        field: opts.field,
        seed: opts.seed,
        attempts: 1,
        genus: profile.genus(),
        disc_degree: 2 * profile.level(),
        verdicts: Verdicts {
            closure: Verdict::Pass,
            associativity: Verdict::from_bool(assoc.associative),
            etale: Verdict::NotChecked,
            h0: Verdict::from_bool(profile.is_positive()),
        },
        profile,
        points: Vec::new(),
        non_floored_profile: None,
        subalgebras: detect_subalgebra_prefix(&table),
        factor_spans,
        notes,
        table: TableDocument::from(&table),
    })
}

/// `prod (s - alpha t)` over the given roots.
fn split_form(field: CoeffField, alphas: &[usize]) -> BivarHomog {
    alphas.iter().fold(BivarHomog::constant(field.one()), |acc, &alpha| {
        let alpha: Scalar = field.from_int(alpha as i64);
        acc.mul(&BivarHomog::linear(field.one(), alpha.neg()))
    })
}
