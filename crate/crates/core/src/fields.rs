//! Linear vector fields on ℝ⁴ and ℝ⁸, the right-invariant frames of S³ and
//! S⁷, Lie brackets, contact one-forms and bracket-generating flags.
//!
//! A linear field `F(y) = A·y` is stored as its integer matrix `A`, with
//! `A[d][v]` the coefficient of `y_v` in the `∂_{y_d}` component. Fields are
//! transcribed from their printed component formulas with a small parser
//! (`"-y1d0+y0d1"` reads `−y₁∂_{y₀} + y₀∂_{y₁}`).
//!
//! Bracket orientation: `[F, G]` is the field with matrix `B·A − A·B`, the
//! coordinate expression of `[F,G]f = F(Gf) − G(Ff)`. With this orientation
//! the S⁷ commutator table and the quaternionic-Hopf relations come out as
//! printed; the S³ relation for `(X, Y)` comes out with the opposite sign
//! (`[X,Y] = −2V`), which the report records as a failed check.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{int, AlgebraElement, ExactScalar};
use crate::linalg::{self, rank, Vector};
use crate::poly::{MultiPoly, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("unsupported dimension {0} (expected 4 or 8)")]
    UnsupportedDim(usize),
    #[error("commutator Y{i}{j} has odd coefficients; halving is not integral")]
    OddCommutator { i: usize, j: usize },
    #[error("point is not on the unit sphere (norm² = {0})")]
    NotOnSphere(String),
    #[error("field {field} is not tangent to the sphere at {point}")]
    NotTangent { field: String, point: String },
    #[error("cannot parse field term {0:?}")]
    Parse(String),
    #[error("frame index {0} out of range")]
    BadIndex(usize),
}

fn check_frame_dim(dim: usize) -> Result<(), FieldError> {
    match dim {
        4 | 8 => Ok(()),
        d => Err(FieldError::UnsupportedDim(d)),
    }
}

/// Parses `"±y{v}d{d}"` terms into `(coefficient, v, d)` triples.
fn parse_terms(src: &str) -> Result<Vec<(i64, usize, usize)>, FieldError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        let bad = || FieldError::Parse(term.to_string());
        let term_body = term.strip_prefix('y').ok_or_else(bad)?;
        let (v, d) = term_body.split_once('d').ok_or_else(bad)?;
        let v: usize = v.parse().map_err(|_| bad())?;
        let d: usize = d.parse().map_err(|_| bad())?;
        out.push((sign, v, d));
        rest = &body[end..];
    }
    Ok(out)
}

/// Integer `dim × dim` matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            data: rows.concat(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(self.dim, other.dim);
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(*a, *b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_skew(&self) -> bool {
        *self == self.transpose().scale(-1)
    }

    pub fn apply(&self, v: &[ExactScalar]) -> Vector {
        (0..self.dim)
            .map(|r| {
                (0..self.dim).fold(ExactScalar::zero(), |acc, c| match self.get(r, c) {
                    0 => acc,
                    1 => acc + &v[c],
                    -1 => acc - &v[c],
                    k => acc + &v[c] * int(k),
                })
            })
            .collect()
    }
}

/// A vector field on ℝ^dim whose value at `y` is `matrix · y`.
#[derive(Debug, Clone)]
pub struct LinearVectorField {
    matrix: IntMatrix,
    name: Option<String>,
}

impl PartialEq for LinearVectorField {
    /// Fields are equal when their matrices are; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for LinearVectorField {}

impl LinearVectorField {
    pub fn new(matrix: IntMatrix) -> Self {
        Self { matrix, name: None }
    }

    pub fn named(matrix: IntMatrix, name: impl Into<String>) -> Self {
        Self {
            matrix,
            name: Some(name.into()),
        }
    }

    /// Parses a field written as `±y{v}d{d}` terms, e.g. `"-y1d0+y0d1"`.
    pub fn parse(dim: usize, name: &str, src: &str) -> Result<Self, FieldError> {
        let mut m = IntMatrix::zeros(dim);
        for (coef, v, d) in parse_terms(src)? {
            if v >= dim || d >= dim {
                return Err(FieldError::Parse(format!("y{v}d{d} in dimension {dim}")));
            }
            m.set(d, v, m.get(d, v) + coef);
        }
        Ok(Self::named(m, name))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("<unnamed>")
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(IntMatrix::zeros(dim))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.matrix.scale(k))
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self::new(self.matrix.add(&other.matrix)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self::new(self.matrix.sub(&other.matrix)))
    }

    /// Exact halving; `None` if some coefficient is odd.
    pub fn halve(&self) -> Option<Self> {
        if self.matrix.data.iter().any(|x| x % 2 != 0) {
            return None;
        }
        Some(Self::new(IntMatrix {
            dim: self.dim(),
            data: self.matrix.data.iter().map(|x| x / 2).collect(),
        }))
    }

    /// Components as linear polynomials in `y0..y{dim-1}`.
    pub fn to_polys(&self) -> Vec<MultiPoly> {
        self.matrix.rows().iter().map(|r| MultiPoly::linear(r)).collect()
    }

    /// `±y{v}d{d}` rendering, one term per nonzero entry, ordered by `∂` index.
    pub fn formula(&self) -> String {
        let mut s = String::new();
        for d in 0..self.dim() {
            for v in 0..self.dim() {
                let c = self.matrix.get(d, v);
                if c == 0 {
                    continue;
                }
                let sign = if c < 0 { '-' } else { '+' };
                if s.is_empty() && c > 0 {
                } else {
                    s.push(sign);
                }
                if c.abs() != 1 {
                    s.push_str(&c.abs().to_string());
                }
                s.push_str(&format!("y{v}d{d}"));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Display for LinearVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name(), self.formula())
    }
}

fn same_dim(a: usize, b: usize) -> Result<(), FieldError> {
    if a != b {
        return Err(FieldError::DimMismatch { left: a, right: b });
    }
    Ok(())
}

/// Value of `field` at `p`.
pub fn eval_field(field: &LinearVectorField, p: &[ExactScalar]) -> Result<Vector, FieldError> {
    same_dim(field.dim(), p.len())?;
    Ok(field.matrix.apply(p))
}

/// Lie bracket `[F, G]`, matrix `B·A − A·B` for `F = A·y`, `G = B·y`.
pub fn bracket(
    f: &LinearVectorField,
    g: &LinearVectorField,
) -> Result<LinearVectorField, FieldError> {
    same_dim(f.dim(), g.dim())?;
    let (a, b) = (&f.matrix, &g.matrix);
    Ok(LinearVectorField::new(b.matmul(a).sub(&a.matmul(b))))
}

/// Euclidean inner product of `F(p)` and `G(p)`.
pub fn gram(
    f: &LinearVectorField,
    g: &LinearVectorField,
    p: &[ExactScalar],
) -> Result<ExactScalar, FieldError> {
    same_dim(f.dim(), g.dim())?;
    Ok(linalg::dot(&eval_field(f, p)?, &eval_field(g, p)?))
}

/// `⟨F(y), G(y)⟩` as a quadratic polynomial in `y`.
pub fn gram_poly(f: &LinearVectorField, g: &LinearVectorField) -> Result<MultiPoly, FieldError> {
    same_dim(f.dim(), g.dim())?;
    Ok(crate::poly::dot(&f.to_polys(), &g.to_polys()))
}

/// One-form whose value on `u` at `y` is `yᵀ · matrix · u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneForm {
    matrix: IntMatrix,
    name: String,
}

impl OneForm {
    /// Parses `±y{v}d{k}` terms read as `±y_v dy_k`.
    pub fn parse(dim: usize, name: &str, src: &str) -> Result<Self, FieldError> {
        let mut m = IntMatrix::zeros(dim);
        for (coef, v, k) in parse_terms(src)? {
            if v >= dim || k >= dim {
                return Err(FieldError::Parse(format!("y{v}dy{k} in dimension {dim}")));
            }
            m.set(v, k, m.get(v, k) + coef);
        }
        Ok(Self {
            matrix: m,
            name: name.to_string(),
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `ω(F)` as a quadratic polynomial: `yᵀ·W·(A·y)`.
    pub fn apply_poly(&self, f: &LinearVectorField) -> Result<MultiPoly, FieldError> {
        same_dim(self.dim(), f.dim())?;
        let wa = self.matrix.matmul(&f.matrix);
        let y = crate::poly::coordinate_vector(self.dim());
        let rows: Vec<MultiPoly> = wa.rows().iter().map(|r| MultiPoly::linear(r)).collect();
        Ok(crate::poly::dot(&y, &rows))
    }
}

/// `pᵀ · W · F(p)`.
pub fn one_form_eval(
    w: &OneForm,
    f: &LinearVectorField,
    p: &[ExactScalar],
) -> Result<ExactScalar, FieldError> {
    same_dim(w.dim(), f.dim())?;
    same_dim(w.dim(), p.len())?;
    let u = eval_field(f, p)?;
    let wu = w.matrix.apply(&u);
    Ok(linalg::dot(p, &wu))
}

/// Point of the unit sphere with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpherePoint {
    coords: Vec<ExactScalar>,
}

impl SpherePoint {
    pub fn new(coords: Vec<ExactScalar>) -> Result<Self, FieldError> {
        let n2 = linalg::dot(&coords, &coords);
        if !n2.is_one() {
            return Err(FieldError::NotOnSphere(n2.to_string()));
        }
        Ok(Self { coords })
    }

    /// Signed basis point `sign · e_index`.
    pub fn basis(dim: usize, index: usize, negative: bool) -> Self {
        let mut coords = vec![ExactScalar::zero(); dim];
        coords[index] = if negative { -ExactScalar::one() } else { ExactScalar::one() };
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ExactScalar] {
        &self.coords
    }

    /// Coordinates as `"p/q"` strings (integers without denominator).
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl AsRef<[ExactScalar]> for SpherePoint {
    fn as_ref(&self) -> &[ExactScalar] {
        &self.coords
    }
}

/// Ordered set of generating fields.
#[derive(Debug, Clone)]
pub struct Distribution {
    label: String,
    generators: Vec<LinearVectorField>,
}

impl Distribution {
    pub fn new(label: impl Into<String>, generators: Vec<LinearVectorField>) -> Result<Self, FieldError> {
        if let Some(first) = generators.first() {
            for g in &generators {
                same_dim(first.dim(), g.dim())?;
            }
        }
        Ok(Self {
            label: label.into(),
            generators,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generators(&self) -> &[LinearVectorField] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, LinearVectorField::dim)
    }

    pub fn values_at(&self, p: &[ExactScalar]) -> Result<Vec<Vector>, FieldError> {
        self.generators.iter().map(|g| eval_field(g, p)).collect()
    }
}

// ---------------------------------------------------------------------------
// Frames and named fields.

const S3_FRAME: [(&str, &str); 4] = [
    ("N", "y0d0+y1d1+y2d2+y3d3"),
    ("V", "-y1d0+y0d1-y3d2+y2d3"),
    ("X", "-y2d0+y3d1+y0d2-y1d3"),
    ("Y", "-y3d0-y2d1+y1d2+y0d3"),
];

const S7_FRAME: [&str; 8] = [
    "y0d0+y1d1+y2d2+y3d3+y4d4+y5d5+y6d6+y7d7",
    "-y1d0+y0d1-y3d2+y2d3-y5d4+y4d5-y7d6+y6d7",
    "-y2d0+y3d1+y0d2-y1d3-y6d4+y7d5+y4d6-y5d7",
    "-y3d0-y2d1+y1d2+y0d3+y7d4+y6d5-y5d6-y4d7",
    "-y4d0+y5d1+y6d2-y7d3+y0d4-y1d5-y2d6+y3d7",
    "-y5d0-y4d1-y7d2-y6d3+y1d4+y0d5+y3d6+y2d7",
    "-y6d0+y7d1-y4d2+y5d3+y2d4-y3d5+y0d6-y1d7",
    "-y7d0-y6d1+y5d2+y4d3-y3d4-y2d5+y1d6+y0d7",
];

/// Printed table of the half-commutators `Y_ij`, `1 ≤ i < j ≤ 7`.
const PRINTED_COMMUTATORS: [((usize, usize), &str); 21] = [
    ((1, 2), "y3d0+y2d1-y1d2-y0d3+y7d4+y6d5-y5d6-y4d7"),
    ((1, 3), "-y2d0+y3d1+y0d2-y1d3+y6d4-y7d5-y4d6+y5d7"),
    ((1, 4), "y5d0+y4d1-y7d2-y6d3-y1d4-y0d5+y3d6+y2d7"),
    ((1, 5), "-y4d0+y5d1-y6d2+y7d3+y0d4-y1d5+y2d6-y3d7"),
    ((1, 6), "y7d0+y6d1+y5d2+y4d3-y3d4-y2d5-y1d6-y0d7"),
    ((1, 7), "-y6d0+y7d1+y4d2-y5d3-y2d4+y3d5+y0d6-y1d7"),
    ((2, 3), "y1d0-y0d1+y3d2-y2d3-y5d4+y4d5-y7d6+y6d7"),
    ((2, 4), "y6d0+y7d1+y4d2+y5d3-y2d4-y3d5-y0d6-y1d7"),
    ((2, 5), "-y7d0+y6d1+y5d2-y4d3+y3d4-y2d5-y1d6+y0d7"),
    ((2, 6), "-y4d0-y5d1+y6d2+y7d3+y0d4+y1d5-y2d6-y3d7"),
    ((2, 7), "y5d0-y4d1+y7d2-y6d3+y1d4-y0d5+y3d6-y2d7"),
    ((3, 4), "-y7d0+y6d1-y5d2+y4d3-y3d4+y2d5-y1d6+y0d7"),
    ((3, 5), "-y6d0-y7d1+y4d2+y5d3-y2d4-y3d5+y0d6+y1d7"),
    ((3, 6), "y5d0-y4d1-y7d2+y6d3+y1d4-y0d5-y3d6+y2d7"),
    ((3, 7), "y4d0+y5d1+y6d2+y7d3-y0d4-y1d5-y2d6-y3d7"),
    ((4, 5), "y1d0-y0d1-y3d2+y2d3+y5d4-y4d5-y7d6+y6d7"),
    ((4, 6), "y2d0+y3d1-y0d2-y1d3+y6d4+y7d5-y4d6-y5d7"),
    ((4, 7), "-y3d0+y2d1-y1d2+y0d3+y7d4-y6d5+y5d6-y4d7"),
    ((5, 6), "-y3d0+y2d1-y1d2+y0d3-y7d4+y6d5-y5d6+y4d7"),
    ((5, 7), "-y2d0-y3d1+y0d2+y1d3+y6d4+y7d5-y4d6-y5d7"),
    ((6, 7), "y1d0-y0d1-y3d2+y2d3-y5d4+y4d5+y7d6-y6d7"),
];

fn parsed(dim: usize, name: &str, src: &str) -> LinearVectorField {
    LinearVectorField::parse(dim, name, src).expect("built-in field formula parses")
}

/// `[N, V, X, Y]` for dim 4, `[Y0, …, Y7]` for dim 8.
pub fn invariant_frame(dim: usize) -> Result<Vec<LinearVectorField>, FieldError> {
    check_frame_dim(dim)?;
    Ok(if dim == 4 {
        S3_FRAME.iter().map(|(n, s)| parsed(4, n, s)).collect()
    } else {
        S7_FRAME
            .iter()
            .enumerate()
            .map(|(i, s)| parsed(8, &format!("Y{i}"), s))
            .collect()
    })
}

/// Frame field of S³ by name (`N`, `V`, `X` or `Y`).
pub fn s3_field(name: &str) -> Option<LinearVectorField> {
    S3_FRAME
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, s)| parsed(4, n, s))
}

/// `Y_k` of the S⁷ frame.
pub fn s7_field(k: usize) -> Result<LinearVectorField, FieldError> {
    S7_FRAME
        .get(k)
        .map(|s| parsed(8, &format!("Y{k}"), s))
        .ok_or(FieldError::BadIndex(k))
}

/// The printed half-commutator `Y_ij` (`1 ≤ i < j ≤ 7`).
pub fn printed_commutator(i: usize, j: usize) -> Result<LinearVectorField, FieldError> {
    PRINTED_COMMUTATORS
        .iter()
        .find(|(ij, _)| *ij == (i, j))
        .map(|(_, s)| parsed(8, &format!("Y{i}{j}"), s))
        .ok_or(FieldError::BadIndex(10 * i + j))
}

/// Radial field `N(y) = y` in dimension `dim`.
pub fn radial_field(dim: usize) -> LinearVectorField {
    LinearVectorField::named(IntMatrix::identity(dim), "N")
}

/// `V_{n+1}` on S^{2n+1} ⊂ ℝ^dim: `−y1∂0 + y0∂1 − y3∂2 + y2∂3 − …`.
pub fn hopf_vertical_field(dim: usize) -> Result<LinearVectorField, FieldError> {
    if dim == 0 || !dim.is_multiple_of(2) {
        return Err(FieldError::UnsupportedDim(dim));
    }
    let mut m = IntMatrix::zeros(dim);
    for k in 0..dim / 2 {
        m.set(2 * k, 2 * k + 1, -1);
        m.set(2 * k + 1, 2 * k, 1);
    }
    Ok(LinearVectorField::named(m, format!("V{}", dim / 2)))
}

/// The decomposition fields `v41, v42, v51, v52` of `Y4` and `Y5`.
///
/// `v52` carries `+y2∂7` in its last term (not `+y0∂7`), which is what makes
/// `v51 + v52 = Y5` hold.
pub fn decomposition_fields() -> [LinearVectorField; 4] {
    [
        parsed(8, "v41", "-y4d0+y5d1+y0d4-y1d5"),
        parsed(8, "v42", "y6d2-y7d3-y2d6+y3d7"),
        parsed(8, "v51", "-y5d0-y4d1+y1d4+y0d5"),
        parsed(8, "v52", "-y7d2-y6d3+y3d6+y2d7"),
    ]
}

/// `v52` exactly as printed, ending in `+y0∂7`.
pub fn printed_v52() -> LinearVectorField {
    parsed(8, "v52(printed)", "-y7d2-y6d3+y3d6+y0d7")
}

/// Contact forms `ω`, `θ`, `η` on S³, in that order.
pub fn s3_contact_forms() -> [OneForm; 3] {
    let f = |n: &str, s: &str| OneForm::parse(4, n, s).expect("built-in form parses");
    [
        f("omega", "-y1d0+y0d1-y3d2+y2d3"),
        f("theta", "-y2d0+y3d1+y0d2-y1d3"),
        f("eta", "-y3d0-y2d1+y1d2+y0d3"),
    ]
}

/// Half-commutators `Y_ij = ½[Y_i, Y_j]` for all `1 ≤ i < j ≤ 7`.
#[derive(Debug, Clone)]
pub struct CommutatorTable {
    entries: BTreeMap<(usize, usize), LinearVectorField>,
}

impl CommutatorTable {
    pub fn get(&self, i: usize, j: usize) -> Option<&LinearVectorField> {
        self.entries.get(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &LinearVectorField)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Computes `½·[Y_i, Y_j]` for every pair `1 ≤ i < j < frame.len()`.
pub fn commutator_table(frame: &[LinearVectorField]) -> Result<CommutatorTable, FieldError> {
    let mut entries = BTreeMap::new();
    for i in 1..frame.len() {
        for j in (i + 1)..frame.len() {
            let b = bracket(&frame[i], &frame[j])?;
            let half = b.halve().ok_or(FieldError::OddCommutator { i, j })?;
            entries.insert((i, j), half.with_name(format!("Y{i}{j}")));
        }
    }
    Ok(CommutatorTable { entries })
}

/// Keeps a linearly independent subset of field matrices.
fn independent_fields(fields: Vec<LinearVectorField>) -> Vec<LinearVectorField> {
    let mut kept: Vec<LinearVectorField> = Vec::new();
    let mut rows: Vec<Vector> = Vec::new();
    for f in fields {
        if f.is_zero() {
            continue;
        }
        let row: Vector = f.matrix.data.iter().map(|&x| int(x)).collect();
        rows.push(row);
        if rank(&rows) == rows.len() {
            kept.push(f);
        } else {
            rows.pop();
        }
    }
    kept
}

/// Successive levels `ℋ¹ ⊆ ℋ² ⊆ …` as spanning sets of fields. Level `r+1`
/// adds all brackets of level-`r` fields with the generators. Each level is
/// pruned to a linearly independent set of matrices, which spans the same
/// space of linear fields.
fn flag_levels(d: &Distribution, max_depth: usize) -> Vec<Vec<LinearVectorField>> {
    let gens = d.generators();
    let mut levels = Vec::new();
    let mut current = independent_fields(gens.to_vec());
    levels.push(current.clone());
    for _ in 1..max_depth {
        let mut next = current.clone();
        for f in &current {
            for g in gens {
                next.push(bracket(f, g).expect("generators share dimension"));
            }
        }
        current = independent_fields(next);
        levels.push(current.clone());
    }
    levels
}

/// `[dim ℋ¹_p, …, dim ℋ^max_depth_p]` by exact rank of evaluated vectors.
pub fn flag_dimensions(
    d: &Distribution,
    p: &[ExactScalar],
    max_depth: usize,
) -> Result<Vec<usize>, FieldError> {
    same_dim(d.dim(), p.len())?;
    let levels = flag_levels(d, max_depth.max(1));
    levels
        .iter()
        .map(|lvl| {
            let vals: Result<Vec<Vector>, _> = lvl.iter().map(|f| eval_field(f, p)).collect();
            Ok(rank(&vals?))
        })
        .collect()
}

/// Whether the flag reaches the full tangent dimension `dim − 1` at every
/// point by `max_depth`, and the least depth at which it does so everywhere.
/// Every evaluated field must be tangent to the sphere at each point.
pub fn is_bracket_generating(
    d: &Distribution,
    points: &[SpherePoint],
    max_depth: usize,
) -> Result<(bool, Option<usize>), FieldError> {
    let levels = flag_levels(d, max_depth.max(1));
    let target = d.dim().saturating_sub(1);
    let mut step = 0;
    for p in points {
        same_dim(d.dim(), p.dim())?;
        let mut reached = None;
        for (depth, lvl) in levels.iter().enumerate() {
            let mut vals = Vec::with_capacity(lvl.len());
            for f in lvl {
                let v = eval_field(f, p.coords())?;
                if !linalg::dot(&v, p.coords()).is_zero() {
                    return Err(FieldError::NotTangent {
                        field: f.formula(),
                        point: p.to_string(),
                    });
                }
                vals.push(v);
            }
            if rank(&vals) == target {
                reached = Some(depth + 1);
                break;
            }
        }
        match reached {
            Some(r) => step = step.max(r),
            None => return Ok((false, None)),
        }
    }
    Ok((true, Some(step)))
}

// ---------------------------------------------------------------------------
// Right translation.

const RIGHT_TRANSLATION_4: [&str; 4] = [
    "y0 y1 y2 y3",
    "-y1 y0 -y3 y2",
    "-y2 y3 y0 -y1",
    "-y3 -y2 y1 y0",
];

const RIGHT_TRANSLATION_8: [&str; 8] = [
    "y0 -y1 -y2 -y3 -y4 -y5 -y6 -y7",
    "y1 y0 y3 -y2 y5 -y4 -y7 y6",
    "y2 -y3 y0 y1 y6 y7 -y4 -y5",
    "y3 y2 -y1 y0 y7 -y6 y5 -y4",
    "y4 -y5 -y6 -y7 y0 y1 y2 y3",
    "y5 y4 -y7 y6 -y1 y0 -y3 y2",
    "y6 y7 y4 -y5 -y2 y3 y0 -y1",
    "y7 -y6 y5 y4 -y3 -y2 y1 y0",
];

fn translation_layout(dim: usize) -> Result<Vec<Vec<(i64, usize)>>, FieldError> {
    check_frame_dim(dim)?;
    let rows: &[&str] = if dim == 4 {
        &RIGHT_TRANSLATION_4
    } else {
        &RIGHT_TRANSLATION_8
    };
    Ok(rows
        .iter()
        .map(|r| {
            r.split_whitespace()
                .map(|tok| {
                    let (sign, rest) = match tok.strip_prefix('-') {
                        Some(rest) => (-1, rest),
                        None => (1, tok),
                    };
                    let idx = rest[1..].parse().expect("built-in layout parses");
                    (sign, idx)
                })
                .collect()
        })
        .collect())
}

/// The right-translation matrix in its printed layout (entries `±y_k`).
pub fn right_translation_matrix(y: &AlgebraElement) -> Result<Vec<Vector>, FieldError> {
    let layout = translation_layout(y.dim())?;
    let c = y.coeffs();
    Ok(layout
        .iter()
        .map(|row| {
            row.iter()
                .map(|&(s, k)| if s < 0 { -c[k].clone() } else { c[k].clone() })
                .collect()
        })
        .collect())
}

/// The right-translation matrix with symbolic entries `±y_k`.
pub fn right_translation_symbolic(dim: usize) -> Result<PolyMatrix, FieldError> {
    let layout = translation_layout(dim)?;
    let rows = layout
        .iter()
        .map(|row| {
            row.iter()
                .map(|&(s, k)| MultiPoly::var(dim, k).scale_int(s))
                .collect()
        })
        .collect();
    Ok(PolyMatrix::from_rows(rows).expect("square layout"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn e(dim: usize, i: usize) -> Vec<ExactScalar> {
        SpherePoint::basis(dim, i, false).coords().to_vec()
    }

    fn ints(xs: &[i64]) -> Vec<ExactScalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn f3(n: &str) -> LinearVectorField {
        s3_field(n).unwrap()
    }

    #[test]
    fn parser_reads_printed_notation() {
        let v = LinearVectorField::parse(4, "V", "-y1d0 + y0d1 - y3d2 + y2d3").unwrap();
        assert_eq!(v, f3("V"));
        assert!(LinearVectorField::parse(4, "bad", "y1x0").is_err());
        assert!(LinearVectorField::parse(4, "bad", "y9d0").is_err());
    }

    #[test]
    fn frame_evaluations() {
        assert_eq!(eval_field(&f3("V"), &e(4, 0)).unwrap(), ints(&[0, 1, 0, 0]));
        assert_eq!(eval_field(&f3("X"), &e(4, 0)).unwrap(), ints(&[0, 0, 1, 0]));
        let y1 = s7_field(1).unwrap();
        assert_eq!(eval_field(&y1, &e(8, 0)).unwrap(), e(8, 1));
        let p = vec![ratio(3, 5), ratio(4, 5), int(0), int(0)];
        assert_eq!(eval_field(&f3("N"), &p).unwrap(), p);
        assert_eq!(
            eval_field(&f3("N"), &e(8, 0)).unwrap_err(),
            FieldError::DimMismatch { left: 4, right: 8 }
        );
    }

    #[test]
    fn y45_at_identity() {
        let y45 = printed_commutator(4, 5).unwrap();
        assert_eq!(eval_field(&y45, &e(8, 0)).unwrap(), ints(&[0, -1, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn s3_brackets() {
        let (v, x, y) = (f3("V"), f3("X"), f3("Y"));
        assert_eq!(bracket(&v, &y).unwrap(), x.scale(2));
        assert_eq!(bracket(&x, &v).unwrap(), y.scale(2));
        // Opposite sign to the printed [X,Y] = 2V; see module docs.
        assert_eq!(bracket(&x, &y).unwrap(), v.scale(-2));
        assert!(bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn commutator_table_matches_printed() {
        let frame = invariant_frame(8).unwrap();
        let table = commutator_table(&frame).unwrap();
        assert_eq!(table.len(), 21);
        for (&(i, j), f) in table.iter() {
            assert_eq!(f, &printed_commutator(i, j).unwrap(), "Y{i}{j}");
            for k in 1..8 {
                let yk = &frame[k];
                assert_ne!(f, yk);
                assert_ne!(f, &yk.neg());
            }
        }
    }

    #[test]
    fn odd_commutator_is_an_error() {
        let mut frame = invariant_frame(8).unwrap();
        frame[2] = LinearVectorField::parse(8, "bad", "y1d0").unwrap();
        let err = commutator_table(&frame).unwrap_err();
        assert!(matches!(err, FieldError::OddCommutator { .. }));
    }

    #[test]
    fn frame_gram_at_points() {
        let frame = invariant_frame(8).unwrap();
        let h = ratio(1, 2);
        let z = int(0);
        let p = vec![h.clone(), h.clone(), z.clone(), z.clone(), h.clone(), h, z.clone(), z];
        for (i, a) in frame.iter().enumerate() {
            for (j, b) in frame.iter().enumerate() {
                let want = if i == j { int(1) } else { int(0) };
                assert_eq!(gram(a, b, &p).unwrap(), want);
            }
        }
    }

    #[test]
    fn decomposition_sums() {
        let [v41, v42, v51, v52] = decomposition_fields();
        assert_eq!(v41.checked_add(&v42).unwrap(), s7_field(4).unwrap());
        assert_eq!(v51.checked_add(&v52).unwrap(), s7_field(5).unwrap());
        assert_ne!(v51.checked_add(&printed_v52()).unwrap(), s7_field(5).unwrap());
    }

    #[test]
    fn contact_forms_on_frame() {
        let [omega, theta, eta] = s3_contact_forms();
        let p = vec![ratio(3, 5), int(0), int(0), ratio(4, 5)];
        let val = |w: &OneForm, n: &str| one_form_eval(w, &f3(n), &p).unwrap();
        assert_eq!(val(&omega, "X"), int(0));
        assert_eq!(val(&omega, "Y"), int(0));
        assert_eq!(val(&omega, "V"), int(1));
        assert_eq!(val(&theta, "Y"), int(0));
        assert_eq!(val(&theta, "V"), int(0));
        assert_eq!(val(&theta, "X"), int(1));
        assert_eq!(val(&eta, "X"), int(0));
        assert_eq!(val(&eta, "Y"), int(1));
    }

    #[test]
    fn right_translation_examples() {
        let one4 = AlgebraElement::basis(4, 0).unwrap();
        let m = right_translation_matrix(&one4).unwrap();
        assert_eq!(m, crate::linalg::to_rational(&IntMatrix::identity(4).rows()));
        let one8 = AlgebraElement::basis(8, 0).unwrap();
        let m8 = right_translation_matrix(&one8).unwrap();
        assert_eq!(m8, crate::linalg::to_rational(&IntMatrix::identity(8).rows()));
        let i = AlgebraElement::basis(4, 1).unwrap();
        let mi = right_translation_matrix(&i).unwrap();
        assert_eq!(mi[0], ints(&[0, 1, 0, 0]));
        assert!(right_translation_matrix(&AlgebraElement::basis(2, 0).unwrap()).is_err());
    }

    #[test]
    fn vertical_field_generalises_v_and_y1() {
        assert_eq!(hopf_vertical_field(4).unwrap(), f3("V"));
        assert_eq!(hopf_vertical_field(8).unwrap(), s7_field(1).unwrap());
    }

    #[test]
    fn flags_on_s3() {
        let d = Distribution::new("XY", vec![f3("X"), f3("Y")]).unwrap();
        let p = e(4, 0);
        assert_eq!(flag_dimensions(&d, &p, 2).unwrap(), vec![2, 3]);
        let single = Distribution::new("X", vec![f3("X")]).unwrap();
        let pts = [SpherePoint::basis(4, 0, false)];
        assert_eq!(is_bracket_generating(&single, &pts, 2).unwrap(), (false, None));
        assert_eq!(is_bracket_generating(&d, &pts, 2).unwrap(), (true, Some(2)));
    }

    #[test]
    fn non_tangent_generator_is_reported() {
        let d = Distribution::new("NX", vec![f3("N"), f3("X")]).unwrap();
        let pts = [SpherePoint::basis(4, 0, false)];
        assert!(matches!(
            is_bracket_generating(&d, &pts, 2),
            Err(FieldError::NotTangent { .. })
        ));
    }

    #[test]
    fn sphere_point_rejects_off_sphere() {
        assert!(SpherePoint::new(ints(&[1, 1, 0, 0])).is_err());
        assert!(SpherePoint::new(vec![ratio(3, 5), ratio(4, 5), int(0), int(0)]).is_ok());
    }
}
