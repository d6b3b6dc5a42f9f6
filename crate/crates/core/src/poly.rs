//! Exact multivariate polynomials over ℚ in at most eight variables.
//!
//! Polynomials are kept in canonical form (no zero coefficients, terms keyed
//! by packed exponent vectors), so two polynomials are equal iff their term
//! maps are equal. Identities are proved by expanding `p - q` and checking
//! for the zero polynomial; optionally the difference is first reduced
//! modulo the unit-sphere relation `Σ y_i² − 1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::ExactScalar;

pub const MAX_VARS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },
    #[error("evaluation point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("at most {MAX_VARS} variables are supported, got {0}")]
    TooManyVars(usize),
}

/// Exponent vector packed one byte per variable, variable 0 in the most
/// significant byte, so that integer order is lexicographic order with
/// `y0 > y1 > … > y7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    const fn shift(var: usize) -> u32 {
        (8 * (MAX_VARS - 1 - var)) as u32
    }

    pub fn one() -> Self {
        Monomial(0)
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut packed = 0u64;
        for (var, &e) in exps.iter().enumerate() {
            packed |= u64::from(e) << Self::shift(var);
        }
        Monomial(packed)
    }

    pub fn exponent(self, var: usize) -> u8 {
        ((self.0 >> Self::shift(var)) & 0xff) as u8
    }

    pub fn exponents(self, nvars: usize) -> Vec<u8> {
        (0..nvars).map(|v| self.exponent(v)).collect()
    }

    pub fn degree(self) -> u32 {
        self.0.to_be_bytes().iter().map(|&b| u32::from(b)).sum()
    }

    fn with_exponent(self, var: usize, e: u8) -> Self {
        let s = Self::shift(var);
        Monomial((self.0 & !(0xffu64 << s)) | (u64::from(e) << s))
    }

    /// Product of monomials; callers guarantee no per-variable overflow.
    fn times(self, other: Self) -> Self {
        Monomial(self.0 + other.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: ExactScalar) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, ExactScalar::one())
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The coordinate function `y_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index {var} out of range");
        let mut exps = vec![0u8; nvars];
        exps[var] = 1;
        Self::monomial(nvars, &exps, ExactScalar::one())
    }

    pub fn monomial(nvars: usize, exps: &[u8], coeff: ExactScalar) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial::from_exponents(exps), coeff);
        }
        p
    }

    /// `Σ_{i<nvars} y_i²`.
    pub fn norm_sq(nvars: usize) -> Self {
        (0..nvars).fold(Self::zero(nvars), |acc, i| {
            let v = Self::var(nvars, i);
            &acc + &(&v * &v)
        })
    }

    /// Linear form `Σ coeffs[i]·y_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut exps = vec![0u8; n];
                exps[i] = 1;
                p.terms.insert(
                    Monomial::from_exponents(&exps),
                    BigRational::from_integer(BigInt::from(c)),
                );
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &ExactScalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, exps: &[u8]) -> ExactScalar {
        self.terms
            .get(&Monomial::from_exponents(exps))
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    fn max_exponents(&self) -> [u32; MAX_VARS] {
        let mut out = [0u32; MAX_VARS];
        for m in self.terms.keys() {
            for (v, slot) in out.iter_mut().enumerate().take(self.nvars) {
                *slot = (*slot).max(u32::from(m.exponent(v)));
            }
        }
        out
    }

    fn check_nvars(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    fn from_map(nvars: usize, map: HashMap<Monomial, ExactScalar>) -> Self {
        let terms = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { nvars, terms }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_nvars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        Ok(Self {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_nvars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let (a, b) = (self.max_exponents(), other.max_exponents());
        assert!(
            a.iter().zip(&b).all(|(x, y)| x + y < 256),
            "exponent overflow in polynomial product"
        );
        if let Some(p) = self.mul_small_int(other) {
            return Ok(p);
        }
        let mut acc: HashMap<Monomial, ExactScalar> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.times(*m2)).or_insert_with(ExactScalar::zero) += c1 * c2;
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    /// Product of two integer-coefficient polynomials with word-sized
    /// coefficients, accumulated in `i128`. Returns `None` if either input
    /// has a non-integer or large coefficient, or if accumulation overflows.
    fn mul_small_int(&self, other: &Self) -> Option<Self> {
        fn small(p: &MultiPoly) -> Option<Vec<(Monomial, i64)>> {
            p.terms
                .iter()
                .map(|(m, c)| {
                    if c.is_integer() {
                        c.numer().to_i64().map(|v| (*m, v))
                    } else {
                        None
                    }
                })
                .collect()
        }
        let lhs = small(self)?;
        let rhs = small(other)?;
        let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(lhs.len() * rhs.len());
        for &(m1, c1) in &lhs {
            for &(m2, c2) in &rhs {
                let slot = acc.entry(m1.times(m2)).or_insert(0);
                *slot = slot.checked_add(i128::from(c1) * i128::from(c2))?;
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, BigRational::from_integer(BigInt::from(c))))
            .collect();
        Some(Self {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Partial derivative with respect to `y{var}`.
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            out.terms
                .insert(m.with_exponent(var, e - 1), c * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Row vector of partial derivatives.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|v| self.derivative(v)).collect()
    }

    /// Exact value at `point`, which must have exactly `nvars` coordinates.
    pub fn eval(&self, point: &[ExactScalar]) -> Result<ExactScalar, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let maxe = self.max_exponents();
        let powers: Vec<Vec<ExactScalar>> = point
            .iter()
            .enumerate()
            .map(|(v, x)| {
                let mut pw = Vec::with_capacity(maxe[v] as usize + 1);
                pw.push(ExactScalar::one());
                for k in 1..=maxe[v] as usize {
                    let next = &pw[k - 1] * x;
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut total = ExactScalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, pw) in powers.iter().enumerate() {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    term *= &pw[e];
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Remainder modulo `Σ y_i² − 1`, rewriting `y0²` as `1 − Σ_{i≥1} y_i²`
    /// until no term has `y0`-degree above one. The result is the unique
    /// representative of the residue class with that property.
    pub fn reduce_mod_sphere(&self) -> Self {
        let n = self.nvars;
        if n == 0 {
            return self.clone();
        }
        // 1 - Σ_{i≥1} y_i²
        let mut sub = Self::one(n);
        for i in 1..n {
            let v = Self::var(n, i);
            sub = &sub - &(&v * &v);
        }
        let mut powers: Vec<Self> = vec![Self::one(n)];
        let mut out: BTreeMap<Monomial, ExactScalar> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e0 = m.exponent(0);
            if e0 < 2 {
                accumulate(&mut out, *m, c.clone());
                continue;
            }
            let half = usize::from(e0 / 2);
            while powers.len() <= half {
                let next = &powers[powers.len() - 1] * &sub;
                powers.push(next);
            }
            let rest = m.with_exponent(0, e0 % 2);
            for (m2, c2) in &powers[half].terms {
                accumulate(&mut out, rest.times(*m2), c * c2);
            }
        }
        Self { nvars: n, terms: out }
    }

    /// Integer coefficients as `i64`, if every coefficient is a small integer.
    pub fn integer_terms(&self) -> Option<Vec<(Vec<u8>, i64)>> {
        self.terms
            .iter()
            .map(|(m, c)| {
                if c.is_integer() {
                    c.numer().to_i64().map(|v| (m.exponents(self.nvars), v))
                } else {
                    None
                }
            })
            .collect()
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, ExactScalar>, m: Monomial, c: ExactScalar) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// True iff `p − q` is the zero polynomial, after reduction modulo the
/// sphere relation when `mod_sphere` is set. Decided by full expansion.
pub fn poly_identity_check(
    p: &MultiPoly,
    q: &MultiPoly,
    mod_sphere: bool,
) -> Result<bool, PolyError> {
    let diff = p.checked_sub(q)?;
    Ok(if mod_sphere {
        diff.reduce_mod_sphere().is_zero()
    } else {
        diff.is_zero()
    })
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for v in 0..self.nvars {
                match m.exponent(v) {
                    0 => {}
                    1 => factors.push(format!("y{v}")),
                    e => factors.push(format!("y{v}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("nvars mismatch in polynomial add")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("nvars mismatch in polynomial sub")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("nvars mismatch in polynomial mul")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

/// Dense matrix of polynomials sharing one variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        Self {
            rows,
            cols,
            nvars,
            entries: vec![MultiPoly::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m.set(i, i, MultiPoly::one(nvars));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let nvars = rows
            .first()
            .and_then(|row| row.first())
            .map_or(0, MultiPoly::nvars);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(PolyError::Shape(format!(
                    "ragged rows: {} vs {c}",
                    row.len()
                )));
            }
            for e in row {
                if e.nvars() != nvars {
                    return Err(PolyError::NvarsMismatch {
                        left: nvars,
                        right: e.nvars(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(Self {
            rows: r,
            cols: c,
            nvars,
            entries,
        })
    }

    /// Constant matrix; entry `(i, j)` is the constant `coeffs[i][j]`.
    pub fn from_ints(coeffs: &[Vec<i64>], nvars: usize) -> Self {
        let rows = coeffs.len();
        let cols = coeffs.first().map_or(0, Vec::len);
        let entries = coeffs
            .iter()
            .flat_map(|row| row.iter().map(|&c| MultiPoly::from_int(nvars, c)))
            .collect();
        Self {
            rows,
            cols,
            nvars,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: MultiPoly) {
        assert_eq!(value.nvars(), self.nvars);
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.nvars != other.nvars {
            return Err(PolyError::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MultiPoly::zero(self.nvars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix–vector product with a column of polynomials.
    pub fn apply(&self, v: &[MultiPoly]) -> Result<Vec<MultiPoly>, PolyError> {
        if v.len() != self.cols {
            return Err(PolyError::Shape(format!(
                "{}x{} applied to length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(MultiPoly::zero(self.nvars), |acc, k| {
                    let a = self.get(i, k);
                    if a.is_zero() || v[k].is_zero() {
                        acc
                    } else {
                        &acc + &(a * &v[k])
                    }
                })
            })
            .collect())
    }

    pub fn eval(&self, point: &[ExactScalar]) -> Result<Vec<Vec<ExactScalar>>, PolyError> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).eval(point)).collect())
            .collect()
    }

    /// Square submatrix keeping the listed columns.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len(), self.nvars);
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }
}

/// Exact determinant by Laplace expansion along rows, memoised over the
/// set of columns already used (`O(n·2ⁿ)` polynomial products).
pub fn poly_det(m: &PolyMatrix) -> Result<MultiPoly, PolyError> {
    if m.rows != m.cols {
        return Err(PolyError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    assert!(n <= 16, "determinant size {n} too large for subset expansion");
    let mut layer: HashMap<u32, MultiPoly> = HashMap::new();
    layer.insert(0, MultiPoly::one(m.nvars));
    for row in 0..n {
        let mut next: HashMap<u32, MultiPoly> = HashMap::new();
        for (mask, minor) in &layer {
            if minor.is_zero() {
                continue;
            }
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = m.get(row, col);
                if entry.is_zero() {
                    continue;
                }
                let mut term = minor * entry;
                if (mask >> (col + 1)).count_ones() % 2 == 1 {
                    term = -&term;
                }
                let slot = next
                    .entry(mask | (1 << col))
                    .or_insert_with(|| MultiPoly::zero(m.nvars));
                *slot = &*slot + &term;
            }
        }
        layer = next;
    }
    Ok(layer
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| MultiPoly::zero(m.nvars)))
}

/// Jacobian matrix of a polynomial map, one row per component.
pub fn jacobian(components: &[MultiPoly]) -> Result<PolyMatrix, PolyError> {
    PolyMatrix::from_rows(components.iter().map(MultiPoly::gradient).collect())
}

/// The vector `(y0, …, y_{n−1})` of coordinate functions.
pub fn coordinate_vector(n: usize) -> Vec<MultiPoly> {
    (0..n).map(|i| MultiPoly::var(n, i)).collect()
}

/// Euclidean inner product of two polynomial vectors.
pub fn dot(a: &[MultiPoly], b: &[MultiPoly]) -> MultiPoly {
    let n = a.first().map_or(0, MultiPoly::nvars);
    a.iter()
        .zip(b)
        .fold(MultiPoly::zero(n), |acc, (x, y)| &acc + &(x * y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    fn y(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn pythagorean_evaluation() {
        let p = &(&y(2, 0) * &y(2, 0)) + &(&y(2, 1) * &y(2, 1));
        assert_eq!(p.eval(&[ratio(3, 5), ratio(4, 5)]).unwrap(), int(1));
        assert_eq!(
            p.eval(&[int(1)]).unwrap_err(),
            PolyError::PointLength {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn difference_of_squares() {
        let a = &y(2, 0) + &y(2, 1);
        let b = &y(2, 0) - &y(2, 1);
        let want = &(&y(2, 0) * &y(2, 0)) - &(&y(2, 1) * &y(2, 1));
        assert_eq!(&a * &b, want);
    }

    #[test]
    fn a00_at_identity_point() {
        let n = 8;
        let mut a00 = MultiPoly::zero(n);
        for i in 0..8 {
            let sq = &y(n, i) * &y(n, i);
            a00 = if i < 4 { &a00 + &sq } else { &a00 - &sq };
        }
        let mut p = vec![int(0); 8];
        p[0] = int(1);
        assert_eq!(a00.eval(&p).unwrap(), int(1));
    }

    #[test]
    fn reduction_examples() {
        let s = MultiPoly::norm_sq(4);
        assert_eq!((&s * &s).reduce_mod_sphere(), MultiPoly::one(4));
        assert_eq!(s.reduce_mod_sphere(), MultiPoly::one(4));
        let p = &(&y(4, 0) * &y(4, 0)) + &y(4, 0);
        let want = &(&(&(&MultiPoly::one(4) - &(&y(4, 1) * &y(4, 1))) - &(&y(4, 2) * &y(4, 2)))
            - &(&y(4, 3) * &y(4, 3)))
            + &y(4, 0);
        assert_eq!(p.reduce_mod_sphere(), want);
    }

    #[test]
    fn identity_check_examples() {
        let sq = &y(1, 0) * &y(1, 0);
        let sq1 = &sq + &MultiPoly::one(1);
        assert!(!poly_identity_check(&sq, &sq1, false).unwrap());
        assert!(poly_identity_check(&sq, &MultiPoly::one(1), true).unwrap());
        assert!(poly_identity_check(&sq, &MultiPoly::one(2), false).is_err());
    }

    #[test]
    fn derivative_examples() {
        let p = &(&y(2, 0) * &y(2, 0)) * &y(2, 1);
        assert_eq!(p.derivative(0), (&y(2, 0) * &y(2, 1)).scale_int(2));
        assert_eq!(p.derivative(1), &y(2, 0) * &y(2, 0));
        assert!(MultiPoly::from_int(2, 5).derivative(1).is_zero());
        let j = jacobian(&[MultiPoly::norm_sq(2)]).unwrap();
        assert_eq!(j.get(0, 1), &y(2, 1).scale_int(2));
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            poly_det(&PolyMatrix::identity(3, 2)).unwrap(),
            MultiPoly::one(2)
        );
        let rot = PolyMatrix::from_rows(vec![
            vec![y(2, 0), y(2, 1)],
            vec![-&y(2, 1), y(2, 0)],
        ])
        .unwrap();
        assert_eq!(poly_det(&rot).unwrap(), MultiPoly::norm_sq(2));
        let rect = PolyMatrix::zeros(2, 3, 1);
        assert_eq!(
            poly_det(&rect).unwrap_err(),
            PolyError::NotSquare { rows: 2, cols: 3 }
        );
    }

    #[test]
    fn rational_coefficients_take_general_path() {
        let half = MultiPoly::constant(2, ratio(1, 2));
        let p = &half * &(&y(2, 0) + &y(2, 1));
        let sq = &p * &p;
        assert_eq!(sq.coefficient(&[1, 1]), ratio(1, 2));
        assert_eq!(sq.coefficient(&[2, 0]), ratio(1, 4));
    }

    #[test]
    fn display_is_readable() {
        let p = &(&y(2, 0) * &y(2, 0)).scale_int(3) - &MultiPoly::from_int(2, 1);
        assert_eq!(p.to_string(), "3*y0^2 - 1");
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
    }
}
