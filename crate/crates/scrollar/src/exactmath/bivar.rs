use std::cmp::Ordering;
use std::fmt;

use super::field::{CoeffField, Scalar};
use super::ring::Ring;

/// `t`-adic valuation: a finite order or the marker for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(usize),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<usize> {
        match self {
            Valuation::Finite(n) => Some(n),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(n) => write!(f, "{n}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Homogeneous polynomial in `s, t` of a declared degree.
///
/// `coeffs[m]` is the coefficient of `s^(deg-m) t^m`. The zero form keeps
/// its declared degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BivarHomog {
    coeffs: Vec<Scalar>,
}

impl BivarHomog {
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "degree+1 coefficients required");
        let f = coeffs[0].field();
        assert!(coeffs.iter().all(|c| c.field() == f), "mixed coefficient fields");
        BivarHomog { coeffs }
    }

    pub fn zero(field: CoeffField, degree: usize) -> Self {
        BivarHomog {
            coeffs: vec![field.zero(); degree + 1],
        }
    }

    pub fn constant(c: Scalar) -> Self {
        BivarHomog { coeffs: vec![c] }
    }

    /// `c * s^(degree-m) * t^m`.
    pub fn monomial(degree: usize, m: usize, c: Scalar) -> Self {
        assert!(m <= degree);
        let mut coeffs = vec![c.zero_like(); degree + 1];
        coeffs[m] = c;
        BivarHomog { coeffs }
    }

    pub fn t_pow(field: CoeffField, n: usize) -> Self {
        Self::monomial(n, n, field.one())
    }

    pub fn s_pow(field: CoeffField, n: usize) -> Self {
        Self::monomial(n, 0, field.one())
    }

    /// Linear form `alpha*s + beta*t`.
    pub fn linear(alpha: Scalar, beta: Scalar) -> Self {
        Self::from_coeffs(vec![alpha, beta])
    }

    pub fn random<R: rand::Rng + ?Sized>(field: CoeffField, degree: usize, rng: &mut R) -> Self {
        BivarHomog {
            coeffs: (0..=degree).map(|_| field.random(rng, 9)).collect(),
        }
    }

    pub fn field(&self) -> CoeffField {
        self.coeffs[0].field()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &Scalar {
        &self.coeffs[m]
    }

    /// Largest `m` with `t^m` dividing the form.
    pub fn t_valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(m) => Valuation::Finite(m),
            None => Valuation::Infinite,
        }
    }

    pub fn eval(&self, s: &Scalar, t: &Scalar) -> Scalar {
        // Horner on both variables at once: sum c_m s^(n-m) t^m.
        let n = self.degree();
        let mut s_pows = vec![s.one_like(); n + 1];
        let mut t_pows = vec![t.one_like(); n + 1];
        for i in 1..=n {
            s_pows[i] = s_pows[i - 1].mul(s);
            t_pows[i] = t_pows[i - 1].mul(t);
        }
        self.coeffs
            .iter()
            .enumerate()
            .fold(s.zero_like(), |acc, (m, c)| acc.add(&c.mul(&s_pows[n - m]).mul(&t_pows[m])))
    }

    pub fn mul_t_pow(&self, n: usize) -> Self {
        let mut coeffs = vec![self.coeffs[0].zero_like(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        BivarHomog { coeffs }
    }

    /// Exact division by `t^n`, `None` if `t^n` does not divide.
    pub fn div_t_pow(&self, n: usize) -> Option<Self> {
        if n > self.degree() {
            return if self.is_zero() {
                Some(BivarHomog::zero(self.field(), 0))
            } else {
                None
            };
        }
        if self.coeffs[..n].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(BivarHomog {
            coeffs: self.coeffs[n..].to_vec(),
        })
    }

    /// Substitution `s -> s^l, t -> t^l`.
    pub fn substitute_power(&self, l: usize) -> Self {
        assert!(l >= 1);
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; self.degree() * l + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            coeffs[m * l] = c.clone();
        }
        BivarHomog { coeffs }
    }

    /// `self(s_img, t_img)` for linear forms `s_img`, `t_img`.
    pub fn compose_linear(&self, s_img: &BivarHomog, t_img: &BivarHomog) -> Self {
        assert!(s_img.degree() == 1 && t_img.degree() == 1, "substitution needs linear forms");
        let n = self.degree();
        let field = self.field();
        let mut s_pows = vec![BivarHomog::constant(field.one())];
        let mut t_pows = vec![BivarHomog::constant(field.one())];
        for _ in 0..n {
            s_pows.push(s_pows.last().expect("nonempty").mul(s_img));
            t_pows.push(t_pows.last().expect("nonempty").mul(t_img));
        }
        let mut acc = BivarHomog::zero(field, n);
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = s_pows[n - m].mul(&t_pows[m]);
            acc = acc.add(&BivarHomog {
                coeffs: term.coeffs.iter().map(|x| x.mul(c)).collect(),
            });
        }
        acc
    }

    /// Linear substitution `(s, t) -> (s', t')` under which `ell` becomes `t`.
    /// Returns the images of `s` and `t`.
    pub fn straightening(ell: &BivarHomog) -> Option<(BivarHomog, BivarHomog)> {
        if ell.degree() != 1 || ell.is_zero() {
            return None;
        }
        let field = ell.field();
        let (alpha, beta) = (ell.coeff(0), ell.coeff(1));
        let s = BivarHomog::linear(field.one(), field.zero());
        if alpha.is_zero() {
            let inv = field.one().div_exact(beta)?;
            return Some((s, BivarHomog::linear(field.zero(), inv)));
        }
        // alpha * s' + beta * t' = t with s' = (t - beta s) / alpha, t' = s.
        let inv = field.one().div_exact(alpha)?;
        let s_img = BivarHomog::linear(beta.neg().mul(&inv), inv);
        Some((s_img, s))
    }

    /// A point `(s0, t0)` where the linear form vanishes.
    pub fn root_of_linear(ell: &BivarHomog) -> Option<(Scalar, Scalar)> {
        if ell.degree() != 1 || ell.is_zero() {
            return None;
        }
        Some((ell.coeff(1).clone(), ell.coeff(0).neg()))
    }

    /// Multiplicity of the linear form `ell` as a factor (`None` for zero).
    pub fn multiplicity(&self, ell: &BivarHomog) -> Option<usize> {
        assert_eq!(ell.degree(), 1, "multiplicity is measured against a linear form");
        if self.is_zero() {
            return None;
        }
        let mut cur = self.clone();
        let mut n = 0;
        while cur.degree() >= 1 {
            match cur.div_exact(ell) {
                Some(q) => {
                    cur = q;
                    n += 1;
                }
                None => break,
            }
        }
        Some(n)
    }

    fn expect_compatible(&self, rhs: &Self) -> usize {
        assert!(self.same_domain(rhs), "form coefficient fields differ");
        match (self.is_zero(), rhs.is_zero()) {
            (_, true) => self.degree(),
            (true, false) => rhs.degree(),
            (false, false) => {
                assert_eq!(self.degree(), rhs.degree(), "adding forms of different degree");
                self.degree()
            }
        }
    }

    fn resized(&self, degree: usize) -> Self {
        if self.degree() == degree {
            return self.clone();
        }
        debug_assert!(self.is_zero());
        BivarHomog::zero(self.field(), degree)
    }
}

impl fmt::Display for BivarHomog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if n - m > 0 {
                write!(f, "*s^{}", n - m)?;
            }
            if m > 0 {
                write!(f, "*t^{m}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Ring for BivarHomog {
    fn zero_like(&self) -> Self {
        BivarHomog::zero(self.field(), 0)
    }

    fn one_like(&self) -> Self {
        BivarHomog::constant(self.field().one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn add(&self, rhs: &Self) -> Self {
        let deg = self.expect_compatible(rhs);
        let a = self.resized(deg);
        let b = rhs.resized(deg);
        BivarHomog {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.add(y)).collect(),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert!(self.same_domain(rhs), "form coefficient fields differ");
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; self.degree() + rhs.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        BivarHomog { coeffs }
    }

    fn neg(&self) -> Self {
        BivarHomog {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        assert!(self.same_domain(rhs), "form coefficient fields differ");
        let q0 = rhs.coeffs.iter().position(|c| !c.is_zero())?;
        if self.is_zero() {
            return Some(BivarHomog::zero(self.field(), self.degree().saturating_sub(rhs.degree())));
        }
        if self.degree() < rhs.degree() {
            return None;
        }
        // Solve self = rhs * q from the lowest power of t upward.
        let qdeg = self.degree() - rhs.degree();
        let lead = &rhs.coeffs[q0];
        let mut q: Vec<Scalar> = Vec::with_capacity(qdeg + 1);
        for r in 0..=qdeg {
            let mut acc = match self.coeffs.get(r + q0) {
                Some(c) => c.clone(),
                None => lead.zero_like(),
            };
            for u in 1..=r {
                if let Some(b) = rhs.coeffs.get(q0 + u) {
                    acc = acc.sub(&b.mul(&q[r - u]));
                }
            }
            q.push(acc.div_exact(lead)?);
        }
        let q = BivarHomog { coeffs: q };
        if &rhs.mul(&q) == self {
            Some(q)
        } else {
            None
        }
    }

    fn same_domain(&self, other: &Self) -> bool {
        self.field() == other.field()
    }

    fn domain_label(&self) -> String {
        format!("{}[s,t]", self.field())
    }

    fn from_int_like(&self, n: i64) -> Self {
        BivarHomog::constant(self.field().from_int(n))
    }
}
