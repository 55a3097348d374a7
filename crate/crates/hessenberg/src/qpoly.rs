//! Exact integer polynomials in the variable q.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Polynomial in q with arbitrary-precision integer coefficients, stored in
/// ascending degree with no trailing zeros (the zero polynomial is the empty
/// list).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPolynomial::from_coeffs(vec![BigInt::from(c)])
    }

    /// q^degree
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        QPolynomial { coeffs }
    }

    /// Canonicalizes by trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        QPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The q-integer [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
    pub fn q_int(n: usize) -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one(); n],
        }
    }

    /// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
    pub fn q_factorial(n: usize) -> Self {
        let mut acc = QPolynomial::one();
        for i in 1..=n {
            acc = &acc * &QPolynomial::q_int(i);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_coeff(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Coefficients as u64 when they all fit; used for wire formats.
    pub fn to_u64_coeffs(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|c| u64::try_from(c).ok()).collect()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = QPolynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / den`, failing with the nonzero remainder when
    /// the division does not come out exactly over the integers.
    pub fn exact_div(&self, den: &QPolynomial) -> Result<QPolynomial, Error> {
        if den.is_zero() {
            return Err(Error::InvalidArgs("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(QPolynomial::zero());
        }
        let dn = self.coeffs.len() - 1;
        let dd = den.coeffs.len() - 1;
        if dn < dd {
            return Err(Error::NonExactDivision(self.clone()));
        }
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for d in (0..=dn - dd).rev() {
            let top = rem[d + dd].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return Err(Error::NonExactDivision(QPolynomial::from_coeffs(rem)));
            }
            let qc = &top / lead;
            for (k, dc) in den.coeffs.iter().enumerate() {
                let t = &qc * dc;
                rem[d + k] -= t;
            }
            quot[d] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision(QPolynomial::from_coeffs(rem)));
        }
        Ok(QPolynomial::from_coeffs(quot))
    }
}

/// Gaussian binomial coefficient [n choose k]_q as an exact polynomial.
pub fn qbinomial(n: usize, k: usize) -> Result<QPolynomial, Error> {
    if k > n {
        return Err(Error::InvalidArgs(format!(
            "q-binomial requires n >= k >= 0, got n={n}, k={k}"
        )));
    }
    let num = QPolynomial::q_factorial(n);
    let den = &QPolynomial::q_factorial(k) * &QPolynomial::q_factorial(n - k);
    // exact by the recursion [n k] = [n-1 k] + q^{n-k} [n-1 k-1]
    num.exact_div(&den)
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
