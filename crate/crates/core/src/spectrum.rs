//! Exact characteristic polynomials of adjacency matrices.
//!
//! `det(xI - A)` is computed with Berkowitz's division-free algorithm, so the
//! whole computation stays in the integers. It first runs in checked `i128`
//! and restarts in arbitrary precision if any intermediate value overflows.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::Graph;

/// Integer polynomial, `coeffs[k]` is the coefficient of `x^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are dropped; the zero polynomial is `[0]`.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn negate(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(k == 0 && first) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Serialized as an array of decimal strings, lowest degree first.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

trait Ring: Clone + Zero + One + CheckedAdd + CheckedSub + CheckedMul {}
impl<T: Clone + Zero + One + CheckedAdd + CheckedSub + CheckedMul> Ring for T {}

/// Berkowitz on a dense 0/1 matrix. Returns coefficients highest degree
/// first, or `None` on overflow.
fn berkowitz<T: Ring>(a: &[Vec<u8>]) -> Option<Vec<T>> {
    let n = a.len();
    let entry = |i: usize, j: usize| if a[i][j] == 0 { T::zero() } else { T::one() };
    let mut poly: Vec<T> = vec![T::one()];
    for r in 0..n {
        // Leading r×r block M, column S = A[0..r][r], row R = A[r][0..r].
        // The Toeplitz column is (1, -a_rr, -RS, -RMS, ..., -RM^{r-1}S).
        let mut col: Vec<T> = Vec::with_capacity(r + 2);
        col.push(T::one());
        col.push(T::zero().checked_sub(&entry(r, r))?);
        let mut v: Vec<T> = (0..r).map(|i| entry(i, r)).collect();
        for k in 0..r {
            let mut rv = T::zero();
            for (j, vj) in v.iter().enumerate() {
                if a[r][j] != 0 {
                    rv = rv.checked_add(vj)?;
                }
            }
            col.push(T::zero().checked_sub(&rv)?);
            if k + 1 < r {
                let mut next = vec![T::zero(); r];
                for (i, slot) in next.iter_mut().enumerate() {
                    let mut acc = T::zero();
                    for (j, vj) in v.iter().enumerate() {
                        if a[i][j] != 0 {
                            acc = acc.checked_add(vj)?;
                        }
                    }
                    *slot = acc;
                }
                v = next;
            }
        }
        // Truncated convolution of the Toeplitz column with the previous poly.
        let mut next = vec![T::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = T::zero();
            for (j, pj) in poly.iter().enumerate().take(i + 1) {
                let c = &col[i - j];
                if c.is_zero() || pj.is_zero() {
                    continue;
                }
                acc = acc.checked_add(&c.checked_mul(pj)?)?;
            }
            *slot = acc;
        }
        poly = next;
    }
    Some(poly)
}

/// Characteristic polynomial of a square 0/1 matrix (not necessarily
/// symmetric).
pub fn char_poly_of_matrix(a: &[Vec<u8>]) -> IntPolynomial {
    let high_first: Vec<BigInt> = match berkowitz::<i128>(a) {
        Some(p) => p.into_iter().map(BigInt::from).collect(),
        None => berkowitz::<BigInt>(a).expect("BigInt arithmetic cannot overflow"),
    };
    IntPolynomial::new(high_first.into_iter().rev().collect())
}

/// `det(xI - A)` for the adjacency matrix `A` of `g`.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    char_poly_of_matrix(&g.adjacency_matrix())
}

pub fn cospectral(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.edge_count() == h.edge_count() && char_poly(g) == char_poly(h)
}
