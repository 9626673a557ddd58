use num_integer::Integer;
use num_traits::{One, Zero};

use super::{q, RationalMatrix, Q};

/// Dense univariate polynomial over Q, coefficients from degree 0 upward,
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn one() -> Self {
        Poly::from_i64(&[1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![Q::zero(); n + 1];
        c[0] = q(-1);
        c[n] = Q::one();
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut c = self.coeffs.clone();
        if c.len() < other.coeffs.len() {
            c.resize(other.coeffs.len(), Q::zero());
        }
        for (a, b) in c.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Poly::new(c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(Vec::new());
        }
        let mut c = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= &c * d;
                }
                quot[top - dd] = c;
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &RationalMatrix) -> RationalMatrix {
        let n = m.rows();
        let mut acc = RationalMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &RationalMatrix::identity(n).scale(c);
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `d`-th cyclotomic polynomial, from `x^d - 1` divided by the
/// cyclotomic polynomials of the proper divisors.
pub fn cyclotomic(d: u64) -> Poly {
    assert!(d >= 1);
    let mut p = Poly::x_pow_minus_one(d as usize);
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p.div_rem(&cyclotomic(e)).0;
        }
    }
    p
}

/// `n / gcd(n, k)`.
pub fn reduce_order(n: u64, k: u64) -> u64 {
    n / n.gcd(&k)
}

/// Characteristic polynomial `det(xI - m)` by the Faddeev-LeVerrier recursion.
pub fn char_poly(m: &RationalMatrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    let mut c = vec![Q::zero(); n + 1];
    c[n] = Q::one();
    let mut mk = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        mk = &(m * &mk) + &RationalMatrix::identity(n).scale(&c[n - k + 1]);
        let am = m * &mk;
        c[n - k] = -am.trace() / q(k as i64);
    }
    Poly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), Poly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), Poly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(3), Poly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), Poly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), Poly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), Poly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn totient_matches_cyclotomic_degree() {
        for d in 1..40 {
            assert_eq!(cyclotomic(d).degree().unwrap() as u64, euler_phi(d));
        }
    }

    #[test]
    fn char_poly_of_companion() {
        // Companion matrix of x^2 - x + 1.
        let m = RationalMatrix::from_i64(&[&[0, -1], &[1, 1]]);
        assert_eq!(char_poly(&m), cyclotomic(6));
        assert!(cyclotomic(6).eval_matrix(&m).is_zero());
    }

    #[test]
    fn division_identity() {
        let a = Poly::from_i64(&[3, 0, 2, 5, 1]);
        let b = Poly::from_i64(&[1, 2, 1]);
        let (qq, r) = a.div_rem(&b);
        assert_eq!(qq.mul(&b).add(&r), a);
        assert!(r.degree().is_none_or(|d| d < 2));
    }
}
