//! Exact arithmetic in ℂ, ℍ and 𝕆 over the rationals.
//!
//! Products are expanded bilinearly over a signed multiplication table of
//! basis elements. The octonion table is the one printed for the basis
//! `e0..e7`; the complex and quaternion tables are its leading 2×2 and 4×4
//! blocks. [`octonion_product_formula`] is an independent, hand-transcribed
//! closed form used only to cross-check the table.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type ExactScalar = BigRational;

/// Shorthand for an integer-valued [`ExactScalar`].
pub fn int(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den` as an [`ExactScalar`]. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> ExactScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("incompatible algebras: dimension {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("unsupported algebra dimension {0} (expected 2, 4 or 8)")]
    UnsupportedDim(usize),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { dim: usize, index: usize },
}

fn check_dim(dim: usize) -> Result<(), AlgebraError> {
    match dim {
        2 | 4 | 8 => Ok(()),
        other => Err(AlgebraError::UnsupportedDim(other)),
    }
}

/// One entry of a multiplication table: `e_i ∘ e_j = sign · e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBasis {
    pub sign: i8,
    pub index: usize,
}

impl fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-e{}", self.index)
        } else {
            write!(f, "e{}", self.index)
        }
    }
}

// Rows are the left factor, columns the right factor.
const OCTONION_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

/// Signed multiplication table of the basis `e0..e{dim-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    dim: usize,
    entries: Vec<Vec<SignedBasis>>,
}

impl MultiplicationTable {
    /// The standard table for `dim ∈ {2, 4, 8}`.
    pub fn standard(dim: usize) -> Result<Self, AlgebraError> {
        check_dim(dim)?;
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let (sign, index) = OCTONION_TABLE[i][j];
                        SignedBasis {
                            sign,
                            index: index as usize,
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { dim, entries })
    }

    /// Builds a table from explicit entries. Used to construct mutated
    /// tables for negative controls; no algebraic validation is performed
    /// beyond shape and index range.
    pub fn from_entries(entries: Vec<Vec<SignedBasis>>) -> Result<Self, AlgebraError> {
        let dim = entries.len();
        check_dim(dim)?;
        for row in &entries {
            if row.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    left: dim,
                    right: row.len(),
                });
            }
            if let Some(bad) = row.iter().find(|e| e.index >= dim || e.sign.abs() != 1) {
                return Err(AlgebraError::IndexOutOfRange {
                    dim,
                    index: bad.index,
                });
            }
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Result<SignedBasis, AlgebraError> {
        for index in [i, j] {
            if index >= self.dim {
                return Err(AlgebraError::IndexOutOfRange {
                    dim: self.dim,
                    index,
                });
            }
        }
        Ok(self.entries[i][j])
    }

    /// Returns a copy with the sign of one entry flipped.
    pub fn with_flipped_sign(&self, i: usize, j: usize) -> Result<Self, AlgebraError> {
        let mut out = self.clone();
        let entry = out.get(i, j)?;
        out.entries[i][j] = SignedBasis {
            sign: -entry.sign,
            index: entry.index,
        };
        Ok(out)
    }

    /// Bilinear product of two coefficient vectors of length `dim`.
    pub fn multiply(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        for d in [a.dim(), b.dim()] {
            if d != self.dim {
                return Err(AlgebraError::DimensionMismatch {
                    left: self.dim,
                    right: d,
                });
            }
        }
        let mut out = vec![ExactScalar::zero(); self.dim];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let SignedBasis { sign, index } = self.entries[i][j];
                let term = x * y;
                if sign > 0 {
                    out[index] += term;
                } else {
                    out[index] -= term;
                }
            }
        }
        Ok(AlgebraElement { coeffs: out })
    }
}

/// `e_i ∘ e_j` in the standard table of dimension `dim`.
pub fn basis_product(dim: usize, i: usize, j: usize) -> Result<SignedBasis, AlgebraError> {
    MultiplicationTable::standard(dim)?.get(i, j)
}

/// Element of ℂ, ℍ or 𝕆 as a coefficient vector over `e0..e{dim-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coeffs: Vec<ExactScalar>,
}

impl AlgebraElement {
    pub fn new(coeffs: Vec<ExactScalar>) -> Result<Self, AlgebraError> {
        check_dim(coeffs.len())?;
        Ok(Self { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(dim: usize) -> Result<Self, AlgebraError> {
        Self::new(vec![ExactScalar::zero(); dim])
    }

    pub fn one(dim: usize) -> Result<Self, AlgebraError> {
        Self::basis(dim, 0)
    }

    /// The basis element `e_index`.
    pub fn basis(dim: usize, index: usize) -> Result<Self, AlgebraError> {
        check_dim(dim)?;
        if index >= dim {
            return Err(AlgebraError::IndexOutOfRange { dim, index });
        }
        let mut coeffs = vec![ExactScalar::zero(); dim];
        coeffs[index] = ExactScalar::one();
        Ok(Self { coeffs })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactScalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar,
    ) -> Result<Self, AlgebraError> {
        if self.dim() != other.dim() {
            return Err(AlgebraError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.zip_with(other, |a, b| a - b)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    /// Panics on dimension mismatch; use [`AlgebraElement::checked_add`] otherwise.
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("dimension mismatch in add")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs).expect("dimension mismatch in sub")
    }
}

/// Product through the standard table of the common dimension.
pub fn mul(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    if a.dim() != b.dim() {
        return Err(AlgebraError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    MultiplicationTable::standard(a.dim())?.multiply(a, b)
}

/// Negates every imaginary coefficient.
pub fn conjugate(a: &AlgebraElement) -> AlgebraElement {
    let coeffs = a
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.clone() } else { -c })
        .collect();
    AlgebraElement { coeffs }
}

/// Sum of squared coefficients.
pub fn norm_sq(a: &AlgebraElement) -> ExactScalar {
    a.coeffs
        .iter()
        .fold(ExactScalar::zero(), |acc, c| acc + c * c)
}

/// `(a∘b)∘c − a∘(b∘c)`.
pub fn associator(
    a: &AlgebraElement,
    b: &AlgebraElement,
    c: &AlgebraElement,
) -> Result<AlgebraElement, AlgebraError> {
    associator_in(&MultiplicationTable::standard(a.dim())?, a, b, c)
}

pub fn associator_in(
    table: &MultiplicationTable,
    a: &AlgebraElement,
    b: &AlgebraElement,
    c: &AlgebraElement,
) -> Result<AlgebraElement, AlgebraError> {
    let left = table.multiply(&table.multiply(a, b)?, c)?;
    let right = table.multiply(a, &table.multiply(b, c)?)?;
    left.checked_sub(&right)
}

/// Closed-form octonion product, transcribed term by term. Kept separate
/// from the table so that a transcription slip in either shows up as a
/// disagreement.
pub fn octonion_product_formula(
    x: &AlgebraElement,
    y: &AlgebraElement,
) -> Result<AlgebraElement, AlgebraError> {
    for d in [x.dim(), y.dim()] {
        if d != 8 {
            return Err(AlgebraError::DimensionMismatch { left: 8, right: d });
        }
    }
    let x = &x.coeffs;
    let y = &y.coeffs;
    let p = |i: usize, j: usize| &x[i] * &y[j];
    let coeffs = vec![
        p(0, 0) - p(1, 1) - p(2, 2) - p(3, 3) - p(4, 4) - p(5, 5) - p(6, 6) - p(7, 7),
        p(1, 0) + p(0, 1) - p(3, 2) + p(2, 3) - p(5, 4) + p(4, 5) + p(7, 6) - p(6, 7),
        p(2, 0) + p(3, 1) + p(0, 2) - p(1, 3) - p(6, 4) - p(7, 5) + p(4, 6) + p(5, 7),
        p(3, 0) - p(2, 1) + p(1, 2) + p(0, 3) - p(7, 4) + p(6, 5) - p(5, 6) + p(4, 7),
        p(4, 0) + p(5, 1) + p(6, 2) + p(7, 3) + p(0, 4) - p(1, 5) - p(2, 6) - p(3, 7),
        p(5, 0) - p(4, 1) + p(7, 2) - p(6, 3) + p(1, 4) + p(0, 5) + p(3, 6) - p(2, 7),
        p(6, 0) - p(7, 1) - p(4, 2) + p(5, 3) + p(2, 4) - p(3, 5) + p(0, 6) + p(1, 7),
        p(7, 0) + p(6, 1) - p(5, 2) - p(4, 3) + p(3, 4) + p(2, 5) - p(1, 6) + p(0, 7),
    ];
    Ok(AlgebraElement { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(dim: usize, i: usize) -> AlgebraElement {
        AlgebraElement::basis(dim, i).unwrap()
    }

    /// Quaternion product written out from the four component formulas,
    /// independent of the table.
    fn quaternion_formula(x: &[ExactScalar], y: &[ExactScalar]) -> Vec<ExactScalar> {
        let p = |i: usize, j: usize| &x[i] * &y[j];
        vec![
            p(0, 0) - p(1, 1) - p(2, 2) - p(3, 3),
            p(1, 0) + p(0, 1) - p(3, 2) + p(2, 3),
            p(2, 0) + p(3, 1) + p(0, 2) - p(1, 3),
            p(3, 0) - p(2, 1) + p(1, 2) + p(0, 3),
        ]
    }

    #[test]
    fn i_times_j_is_k() {
        let k = mul(&e(4, 1), &e(4, 2)).unwrap();
        assert_eq!(k, e(4, 3));
    }

    #[test]
    fn e4_times_e5_is_e1() {
        assert_eq!(mul(&e(8, 4), &e(8, 5)).unwrap(), e(8, 1));
    }

    #[test]
    fn identity_is_neutral() {
        let a = AlgebraElement::new((1..=8).map(|k| ratio(k, k + 1)).collect()).unwrap();
        assert_eq!(mul(&e(8, 0), &a).unwrap(), a);
        assert_eq!(mul(&a, &e(8, 0)).unwrap(), a);
    }

    #[test]
    fn quaternion_table_matches_component_formula() {
        for i in 0..4 {
            for j in 0..4 {
                let got = mul(&e(4, i), &e(4, j)).unwrap();
                let want = quaternion_formula(e(4, i).coeffs(), e(4, j).coeffs());
                assert_eq!(got.coeffs(), &want[..], "e{i} e{j}");
            }
        }
    }

    #[test]
    fn complex_table_squares_to_minus_one() {
        let i = e(2, 1);
        assert_eq!(mul(&i, &i).unwrap(), -&e(2, 0));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let err = mul(&e(4, 1), &e(8, 1)).unwrap_err();
        assert_eq!(err, AlgebraError::DimensionMismatch { left: 4, right: 8 });
        assert!(matches!(
            AlgebraElement::from_ints(&[1, 2, 3]),
            Err(AlgebraError::UnsupportedDim(3))
        ));
    }

    #[test]
    fn conjugate_examples() {
        let q = AlgebraElement::from_ints(&[1, 2, 3, 4]).unwrap();
        assert_eq!(
            conjugate(&q),
            AlgebraElement::from_ints(&[1, -2, -3, -4]).unwrap()
        );
        assert_eq!(conjugate(&e(8, 0)), e(8, 0));
        assert_eq!(conjugate(&conjugate(&q)), q);
    }

    #[test]
    fn norm_examples() {
        let pyth = AlgebraElement::new(vec![ratio(3, 5), ratio(4, 5), int(0), int(0)]).unwrap();
        assert_eq!(norm_sq(&pyth), int(1));
        let q = AlgebraElement::from_ints(&[1, 2, 3, 4]).unwrap();
        assert_eq!(norm_sq(&q), int(30));
        let qq = mul(&q, &conjugate(&q)).unwrap();
        assert_eq!(qq, AlgebraElement::from_ints(&[30, 0, 0, 0]).unwrap());
        let a = AlgebraElement::from_ints(&[1, 1, 0, 0]).unwrap();
        let b = AlgebraElement::from_ints(&[1, 0, 1, 0]).unwrap();
        let ab = mul(&a, &b).unwrap();
        assert_eq!(ab, AlgebraElement::from_ints(&[1, 1, 1, 1]).unwrap());
        assert_eq!(norm_sq(&ab), int(4));
    }

    #[test]
    fn associator_witness() {
        let got = associator(&e(8, 1), &e(8, 2), &e(8, 4)).unwrap();
        assert_eq!(got, e(8, 7).scale(&int(2)));
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    assert!(associator(&e(4, i), &e(4, j), &e(4, k)).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn basis_product_lookups() {
        assert_eq!(basis_product(8, 6, 7).unwrap(), SignedBasis { sign: -1, index: 1 });
        assert_eq!(basis_product(8, 3, 3).unwrap(), SignedBasis { sign: -1, index: 0 });
        assert_eq!(basis_product(8, 0, 5).unwrap(), SignedBasis { sign: 1, index: 5 });
        assert_eq!(
            basis_product(8, 8, 0).unwrap_err(),
            AlgebraError::IndexOutOfRange { dim: 8, index: 8 }
        );
    }

    #[test]
    fn table_structure() {
        for dim in [2, 4, 8] {
            let t = MultiplicationTable::standard(dim).unwrap();
            for i in 0..dim {
                assert_eq!(t.get(0, i).unwrap(), SignedBasis { sign: 1, index: i });
                assert_eq!(t.get(i, 0).unwrap(), SignedBasis { sign: 1, index: i });
                if i > 0 {
                    assert_eq!(t.get(i, i).unwrap(), SignedBasis { sign: -1, index: 0 });
                }
            }
        }
    }

    #[test]
    fn flipped_table_breaks_norm() {
        let t = MultiplicationTable::standard(8)
            .unwrap()
            .with_flipped_sign(4, 5)
            .unwrap();
        let a = AlgebraElement::from_ints(&[0, 0, 0, 0, 1, 0, 0, 0]).unwrap();
        let b = AlgebraElement::from_ints(&[0, 0, 0, 0, 0, 1, 0, 0]).unwrap();
        assert_eq!(t.multiply(&a, &b).unwrap(), -&e(8, 1));
    }
}
