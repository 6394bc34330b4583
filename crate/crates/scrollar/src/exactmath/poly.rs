use super::ring::{bareiss_det, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial with a declared degree.
///
/// `coeffs[n]` is the coefficient of `x^n`; the declared degree is
/// `coeffs.len() - 1` even when the top coefficient vanishes, which is what
/// resultant continuation needs.
#[derive(Debug, Clone, PartialEq)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UPoly<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs a declared degree");
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn declared_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return UPoly::new(vec![self.coeffs[0].zero_like()]);
        }
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, a)| a.mul(&a.from_int_like(n as i64)))
            .collect();
        UPoly::new(c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(out)
    }

    /// Smallest `n` with a nonzero coefficient, `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(x.zero_like(), |acc, c| acc.mul(x).add(c))
    }
}

/// Sylvester-matrix resultant with respect to the declared degrees,
/// evaluated fraction-free.
pub fn resultant<R: Ring>(p: &UPoly<R>, q: &UPoly<R>) -> Result<R> {
    let anchor = &p.coeffs[0];
    if let Some(bad) = p.coeffs.iter().chain(&q.coeffs).find(|c| !c.same_domain(anchor)) {
        return Err(Error::FieldMismatch(anchor.domain_label(), bad.domain_label()));
    }
    let m = p.declared_degree();
    let n = q.declared_degree();
    let size = m + n;
    if size == 0 {
        return Ok(anchor.one_like());
    }
    let zero = anchor.zero_like();
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in p.coeffs.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in q.coeffs.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(bareiss_det(&rows))
}
