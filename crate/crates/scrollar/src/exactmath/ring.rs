use std::fmt;

use num_bigint::{BigInt, Sign};

/// A commutative ring with exact division where a quotient exists.
///
/// Elements carry their own domain context (modulus, variable names, degree),
/// so constants are produced from an existing element via the `*_like`
/// constructors.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// `self / rhs` if `rhs` divides `self` exactly.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    /// True when both elements live in the same coefficient domain.
    fn same_domain(&self, _other: &Self) -> bool {
        true
    }

    /// Short label for the domain, used in mismatch errors.
    fn domain_label(&self) -> String {
        String::from("ring")
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.from_bigint_like(&BigInt::from(n))
    }

    fn from_bigint_like(&self, n: &BigInt) -> Self {
        // Horner in base 2^32 over the magnitude digits.
        let base = {
            let two16 = (0..16).fold(self.one_like(), |acc, _| acc.add(&acc));
            two16.mul(&two16)
        };
        let (sign, digits) = n.to_u32_digits();
        let mut acc = self.zero_like();
        for &dgt in digits.iter().rev() {
            acc = acc.mul(&base).add(&small_uint(self, dgt as u64));
        }
        if sign == Sign::Minus {
            acc.neg()
        } else {
            acc
        }
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

fn small_uint<R: Ring>(like: &R, mut n: u64) -> R {
    let mut acc = like.zero_like();
    let mut bit = like.one_like();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.add(&bit);
        }
        n >>= 1;
        if n > 0 {
            bit = bit.add(&bit);
        }
    }
    acc
}

/// `(-1)^k` times `x`.
pub fn signed<R: Ring>(x: R, negate: bool) -> R {
    if negate {
        x.neg()
    } else {
        x
    }
}

/// Fraction-free (Bareiss) determinant with row pivoting.
///
/// Every intermediate quotient is exact in an integral domain, so this works
/// over fields, integer polynomial rings and graded forms alike.
pub fn bareiss_det<R: Ring>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    assert!(n > 0, "determinant of an empty matrix needs a unit from context");
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    let mut a: Vec<Vec<R>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = a[0][0].one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return a[0][0].zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotient is exact in an integral domain");
            }
            a[i][k] = a[i][k].zero_like();
        }
        prev = a[k][k].clone();
    }
    signed(a[n - 1][n - 1].clone(), negate)
}
