use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use crate::error::{Error, Result};

/// Maximum number of indeterminates; exponents are packed 16 bits apiece.
pub const MAX_VARS: usize = 8;
const FIELD_BITS: u32 = 16;
const FIELD_MASK: u128 = 0xffff;

/// Packed exponent vector. Variable 0 sits in the most significant field,
/// so integer order on the packing is lexicographic order on exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Mono(u128);

impl Mono {
    fn shift(var: usize) -> u32 {
        (MAX_VARS - 1 - var) as u32 * FIELD_BITS
    }

    fn pack(exps: &[u32]) -> Mono {
        let mut m = 0u128;
        for (v, &e) in exps.iter().enumerate() {
            assert!(e <= FIELD_MASK as u32, "exponent {e} exceeds packing width");
            m |= (e as u128) << Self::shift(v);
        }
        Mono(m)
    }

    fn exp(self, var: usize) -> u32 {
        ((self.0 >> Self::shift(var)) & FIELD_MASK) as u32
    }

    fn unpack(self, arity: usize) -> Vec<u32> {
        (0..arity).map(|v| self.exp(v)).collect()
    }

    fn mul(self, rhs: Mono) -> Mono {
        for v in 0..MAX_VARS {
            assert!(
                self.exp(v) + rhs.exp(v) <= FIELD_MASK as u32,
                "exponent overflow in monomial product"
            );
        }
        Mono(self.0 + rhs.0)
    }

    fn divides(self, rhs: Mono) -> bool {
        (0..MAX_VARS).all(|v| self.exp(v) <= rhs.exp(v))
    }
}

/// Sparse multivariate polynomial with integer coefficients over named
/// indeterminates. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Mono, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Result<Self> {
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::Arity {
                expected: MAX_VARS,
                got: vars.len(),
            });
        }
        Ok(MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        })
    }

    /// The `i`-th indeterminate as a polynomial.
    pub fn var(vars: &[&str], i: usize) -> Result<Self> {
        let mut p = Self::zero(vars)?;
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        p.terms.insert(Mono::pack(&exps), BigInt::one());
        Ok(p)
    }

    /// All indeterminates of a ring as polynomials.
    pub fn gens(vars: &[&str]) -> Result<Vec<Self>> {
        (0..vars.len()).map(|i| Self::var(vars, i)).collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_like(&self, c: BigInt) -> Self {
        let mut p = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            p.terms.insert(Mono(0), c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms(vars: &[&str], terms: &[(Vec<u32>, i64)]) -> Result<Self> {
        let mut p = Self::zero(vars)?;
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(Error::Arity {
                    expected: vars.len(),
                    got: exps.len(),
                });
            }
            let m = Mono::pack(exps);
            let entry = p.terms.entry(m).or_insert_with(BigInt::zero);
            *entry += *c;
            if entry.is_zero() {
                p.terms.remove(&m);
            }
        }
        Ok(p)
    }

    /// Coefficient of the monomial with the given exponent vector.
    pub fn coeff(&self, exps: &[u32]) -> Result<BigInt> {
        if exps.len() != self.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                got: exps.len(),
            });
        }
        Ok(self.terms.get(&Mono::pack(exps)).cloned().unwrap_or_default())
    }

    /// Iterates `(exponents, coefficient)` in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &BigInt)> + '_ {
        let n = self.arity();
        self.terms.iter().map(move |(m, c)| (m.unpack(n), c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        let n = self.arity();
        self.terms
            .keys()
            .map(|m| m.unpack(n).iter().sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let n = self.arity();
        let mut degs = self.terms.keys().map(|m| m.unpack(n).iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Sets variable `var` to zero.
    pub fn at_zero(&self, var: usize) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(var) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Re-expresses the polynomial in a new ring, sending variable `v` to
    /// variable `map[v]` of `vars`.
    pub fn rename(&self, vars: &[&str], map: &[usize]) -> Result<Self> {
        if map.len() != self.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                got: map.len(),
            });
        }
        let mut out = Self::zero(vars)?;
        for (exps, c) in self.terms() {
            let mut target = vec![0u32; vars.len()];
            for (v, e) in exps.iter().enumerate() {
                target[map[v]] += e;
            }
            let m = Mono::pack(&target);
            let entry = out.terms.entry(m).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(&m);
            }
        }
        Ok(out)
    }

    /// Evaluates at values in any ring.
    pub fn eval<R: Ring>(&self, values: &[R]) -> Result<R> {
        if values.len() != self.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                got: values.len(),
            });
        }
        let like = &values[0];
        let mut acc = like.zero_like();
        for (exps, c) in self.terms() {
            let mut term = like.from_bigint_like(c);
            for (v, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&values[v].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    fn same_vars(&self, rhs: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &rhs.vars) || self.vars == rhs.vars
    }

    fn with_terms(&self, terms: BTreeMap<Mono, BigInt>) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    fn scale_mono(&self, m: Mono, c: &BigInt) -> Self {
        self.with_terms(self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect())
    }

    fn sub_in_place(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            let entry = self.terms.entry(*m).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (exps, c)) in self.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        self.vars[v].clone()
                    } else {
                        format!("{}^{e}", self.vars[v])
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        self.with_terms(BTreeMap::new())
    }

    fn one_like(&self) -> Self {
        self.constant_like(BigInt::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        assert!(self.same_vars(rhs), "polynomials over different variables");
        let mut out = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = out.entry(*m).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(m);
            }
        }
        self.with_terms(out)
    }

    fn sub(&self, rhs: &Self) -> Self {
        assert!(self.same_vars(rhs), "polynomials over different variables");
        let mut out = self.clone();
        out.sub_in_place(rhs);
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert!(self.same_vars(rhs), "polynomials over different variables");
        let mut acc: HashMap<Mono, BigInt> = HashMap::with_capacity(self.terms.len() * 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(*mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        self.with_terms(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn neg(&self) -> Self {
        self.with_terms(self.terms.iter().map(|(m, c)| (*m, -c)).collect())
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        assert!(self.same_vars(rhs), "polynomials over different variables");
        let (&lm_d, lc_d) = rhs.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((&lm, lc)) = rem.terms.iter().next_back() {
            if !lm_d.divides(lm) {
                return None;
            }
            let (q, r) = lc.div_rem(lc_d);
            if !r.is_zero() {
                return None;
            }
            let qm = Mono(lm.0 - lm_d.0);
            let step = rhs.scale_mono(qm, &q);
            quot.insert(qm, q);
            rem.sub_in_place(&step);
        }
        Some(self.with_terms(quot))
    }

    fn same_domain(&self, other: &Self) -> bool {
        self.same_vars(other)
    }

    fn domain_label(&self) -> String {
        format!("ZZ[{}]", self.vars.join(","))
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.constant_like(BigInt::from(n))
    }

    fn from_bigint_like(&self, n: &BigInt) -> Self {
        self.constant_like(n.clone())
    }
}
