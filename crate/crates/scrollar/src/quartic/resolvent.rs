use serde::{Deserialize, Serialize};

use super::{resolvent_closed_form, Quintuple};
use crate::error::{precondition, Result};
use crate::exactmath::{bareiss_det, BivarHomog, CoeffField, MultiPoly, Ring};

/// Indeterminates of the resolvent cubic, in order.
pub const RESOLVENT_VARS: [&str; 4] = ["s", "t", "x", "y"];

/// Determinant of `x M_1 + y M_2` for the pencil spanned by
/// `s^{2e_1-f_1} x_1^2 + 2 s^{e_2+e_3-f_1-1} t x_2 x_3` and
/// `2 s^{e_1+e_3-f_2} x_1 x_3 + s^{2e_2-f_2} x_2^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolventCubic {
    pub quintuple: Quintuple,
    /// `(2e_1 - f_1, e_2 + e_3 - f_1 - 1, e_1 + e_3 - f_2, 2e_2 - f_2)`.
    pub exponents: [i64; 4],
    /// Polynomials in `s, t, x, y`, printed.
    pub determinant: String,
    pub closed_form: String,
    pub matches: bool,
    pub note: String,
    #[serde(skip)]
    det: Option<MultiPoly>,
}

impl ResolventCubic {
    pub fn det(&self) -> &MultiPoly {
        self.det.as_ref().expect("set on construction")
    }

    /// Coefficients of `x^a y^b` as forms in `(s, t)` over the rationals.
    pub fn coefficients(&self) -> Vec<((u32, u32), BivarHomog)> {
        let field = CoeffField::Rationals;
        let mut out: Vec<((u32, u32), BivarHomog)> = Vec::new();
        for (exps, c) in self.det().terms() {
            let key = (exps[2], exps[3]);
            let deg = (exps[0] + exps[1]) as usize;
            let mono = BivarHomog::monomial(deg, exps[1] as usize, field.one().from_bigint_like(c));
            match out.iter_mut().find(|(k, _)| *k == key) {
                Some((_, acc)) => *acc = acc.add(&mono),
                None => out.push((key, mono)),
            }
        }
        out
    }
}

pub fn resolvent_det(e: [i64; 3], f: [i64; 2]) -> Result<ResolventCubic> {
    let q = Quintuple::new(e, f)?;
    let [e1, e2, e3] = e;
    let [f1, f2] = f;
    let exponents = [2 * e1 - f1, e2 + e3 - f1 - 1, e1 + e3 - f2, 2 * e2 - f2];
    if let Some(x) = exponents.iter().find(|&&x| x < 0) {
        return precondition(format!("pencil exponent {x} is negative for {e:?}, {f:?}"));
    }
    let [a, b, c, d] = exponents.map(|x| x as u32);
    let mono = |exps: [u32; 4]| MultiPoly::from_terms(&RESOLVENT_VARS, &[(exps.to_vec(), 1)]);
    let zero = MultiPoly::zero(&RESOLVENT_VARS)?;
    let m11 = mono([a, 0, 1, 0])?;
    let m23 = mono([b, 1, 1, 0])?;
    let m13 = mono([c, 0, 0, 1])?;
    let m22 = mono([d, 0, 0, 1])?;
    let matrix = vec![
        vec![m11, zero.clone(), m13.clone()],
        vec![zero.clone(), m22, m23.clone()],
        vec![m13, m23, zero],
    ];
    let det = bareiss_det(&matrix);
    let closed = resolvent_closed_form(&q)?;
    Ok(ResolventCubic {
        quintuple: q,
        exponents,
        determinant: format!("{det}"),
        closed_form: format!("{closed}"),
        matches: det.sub(&closed).is_zero(),
        note: "irreducibility over C(s,t) is cited (Eisenstein at t), not computed".into(),
        det: Some(det),
    })
}
