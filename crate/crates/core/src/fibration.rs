//! The Hopf maps S³ → S², S⁷ → ℂP³ (in the chart `z₀ ≠ 0`) and S⁷ → S⁴:
//! exact Jacobians, kernels, vertical fields, the S⁴ coordinate functions
//! `a_mk`, and the choice of a horizontal distribution transverse to the
//! vertical one.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{int, ExactScalar};
use crate::fields::{
    bracket, eval_field, gram_poly, hopf_vertical_field, invariant_frame, radial_field, s3_field,
    Distribution, FieldError, LinearVectorField, SpherePoint,
};
use crate::linalg::{self, rank, Subspace, Vector};
use crate::poly::{self, MultiPoly, PolyError, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibrationError {
    #[error("point {0} lies outside the chart x0² + x1² ≠ 0")]
    OutsideChart(String),
    #[error("Jacobian has rank {got}, expected {expected}")]
    RankDeficient { expected: usize, got: usize },
    #[error("no admissible horizontal distribution at {point} ({region})")]
    TheoremViolation { point: String, region: RegionTag },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn y(n: usize, i: usize) -> MultiPoly {
    MultiPoly::var(n, i)
}

/// `Σ c·y_i·y_j` over the given triples.
fn quad(n: usize, terms: &[(i64, usize, usize)]) -> MultiPoly {
    terms.iter().fold(MultiPoly::zero(n), |acc, &(c, i, j)| {
        &acc + &(&y(n, i) * &y(n, j)).scale_int(c)
    })
}

/// Linear polynomial `Σ c·y_i`.
fn lin(n: usize, terms: &[(i64, usize)]) -> MultiPoly {
    terms
        .iter()
        .fold(MultiPoly::zero(n), |acc, &(c, i)| &acc + &y(n, i).scale_int(c))
}

fn eval_all(ps: &[MultiPoly], p: &[ExactScalar]) -> Result<Vector, FibrationError> {
    Ok(ps.iter().map(|q| q.eval(p)).collect::<Result<_, _>>()?)
}

/// A map whose components are quadratic forms `xᵀQ_c x` with symmetric `Q_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticMap {
    in_dim: usize,
    components: Vec<Vec<Vector>>,
}

impl QuadraticMap {
    /// Reads each component's symmetric matrix off a homogeneous quadratic.
    pub fn from_polys(components: &[MultiPoly]) -> Self {
        let n = components.first().map_or(0, MultiPoly::nvars);
        let half = ExactScalar::new(1.into(), 2.into());
        let comps = components
            .iter()
            .map(|c| {
                assert_eq!(c.nvars(), n);
                let mut q = vec![vec![ExactScalar::zero(); n]; n];
                for (m, coef) in c.terms() {
                    let e = m.exponents(n);
                    assert_eq!(m.degree(), 2, "component is not a quadratic form");
                    let vars: Vec<usize> = (0..n).filter(|&v| e[v] > 0).collect();
                    if vars.len() == 1 {
                        q[vars[0]][vars[0]] = coef.clone();
                    } else {
                        q[vars[0]][vars[1]] = coef * &half;
                        q[vars[1]][vars[0]] = coef * &half;
                    }
                }
                q
            })
            .collect();
        Self {
            in_dim: n,
            components: comps,
        }
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Vector>] {
        &self.components
    }

    pub fn eval(&self, x: &[ExactScalar]) -> Vector {
        self.components
            .iter()
            .map(|q| linalg::dot(x, &linalg::mat_vec(q, x)))
            .collect()
    }

    /// Rows `2·xᵀQ_c`.
    pub fn jacobian(&self, x: &[ExactScalar]) -> Vec<Vector> {
        self.components
            .iter()
            .map(|q| linalg::mat_vec(q, x).into_iter().map(|v| v * int(2)).collect())
            .collect()
    }

    pub fn eval_f64(&self, x: &[f64]) -> Vec<f64> {
        self.components
            .iter()
            .map(|q| {
                let mut s = 0.0;
                for (i, row) in q.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        s += to_f64(c) * x[i] * x[j];
                    }
                }
                s
            })
            .collect()
    }

    /// Largest deviation between the exact Jacobian and a centered finite
    /// difference of step `h` at `x`.
    pub fn finite_difference_error(&self, x: &[ExactScalar], h: f64) -> f64 {
        let exact = self.jacobian(x);
        let xf: Vec<f64> = x.iter().map(to_f64).collect();
        let mut worst = 0.0f64;
        for j in 0..self.in_dim {
            let mut plus = xf.clone();
            let mut minus = xf.clone();
            plus[j] += h;
            minus[j] -= h;
            let (fp, fm) = (self.eval_f64(&plus), self.eval_f64(&minus));
            for c in 0..self.out_dim() {
                let fd = (fp[c] - fm[c]) / (2.0 * h);
                worst = worst.max((fd - to_f64(&exact[c][j])).abs());
            }
        }
        worst
    }
}

pub fn to_f64(x: &ExactScalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().expect("rational converts to f64")
}

/// A map with components `numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    components: Vec<(MultiPoly, MultiPoly)>,
}

impl RationalMap {
    pub fn new(components: Vec<(MultiPoly, MultiPoly)>) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[(MultiPoly, MultiPoly)] {
        &self.components
    }

    /// `None` where some denominator vanishes.
    pub fn eval(&self, p: &[ExactScalar]) -> Result<Option<Vector>, PolyError> {
        let mut out = Vec::with_capacity(self.components.len());
        for (n, d) in &self.components {
            let dv = d.eval(p)?;
            if dv.is_zero() {
                return Ok(None);
            }
            out.push(n.eval(p)? / dv);
        }
        Ok(Some(out))
    }

    /// `d² · ∂(n/d)/∂x_j = n'·d − n·d'` for every component and variable.
    pub fn cleared_jacobian(&self) -> Result<PolyMatrix, PolyError> {
        let rows = self
            .components
            .iter()
            .map(|(n, d)| {
                (0..n.nvars())
                    .map(|j| &(&n.derivative(j) * d) - &(n * &d.derivative(j)))
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows)
    }
}

// ---------------------------------------------------------------------------
// S³ → S².

/// `h(z, w) = (|z|² − |w|², 2·z·w̄)` in real coordinates.
pub fn hopf_s3_polys() -> Vec<MultiPoly> {
    vec![
        quad(4, &[(1, 0, 0), (1, 1, 1), (-1, 2, 2), (-1, 3, 3)]),
        quad(4, &[(2, 0, 2), (2, 1, 3)]),
        quad(4, &[(2, 1, 2), (-2, 0, 3)]),
    ]
}

pub fn hopf_s3_quadratic() -> QuadraticMap {
    QuadraticMap::from_polys(&hopf_s3_polys())
}

/// The printed Jacobian without its factor 2.
pub fn hopf_s3_printed_jacobian() -> PolyMatrix {
    let l = |t: &[(i64, usize)]| lin(4, t);
    PolyMatrix::from_rows(vec![
        vec![l(&[(1, 0)]), l(&[(1, 1)]), l(&[(-1, 2)]), l(&[(-1, 3)])],
        vec![l(&[(1, 2)]), l(&[(1, 3)]), l(&[(1, 0)]), l(&[(1, 1)])],
        vec![l(&[(-1, 3)]), l(&[(1, 2)]), l(&[(1, 1)]), l(&[(-1, 0)])],
    ])
    .expect("3x4 layout")
}

fn expect_dim(p: &SpherePoint, dim: usize) -> Result<(), FibrationError> {
    if p.dim() != dim {
        return Err(FieldError::DimMismatch {
            left: dim,
            right: p.dim(),
        }
        .into());
    }
    Ok(())
}

pub fn hopf_s3_map(p: &SpherePoint) -> Result<Vector, FibrationError> {
    expect_dim(p, 4)?;
    eval_all(&hopf_s3_polys(), p.coords())
}

/// Exact Jacobian at `p` and its kernel, which must be a line.
pub fn hopf_s3_jacobian(p: &SpherePoint) -> Result<(Vec<Vector>, Subspace), FibrationError> {
    expect_dim(p, 4)?;
    let jac = hopf_s3_quadratic().jacobian(p.coords());
    let r = rank(&jac);
    if r != 3 {
        return Err(FibrationError::RankDeficient { expected: 3, got: r });
    }
    let kernel = Subspace::span(4, &linalg::nullspace(&jac, 4));
    Ok((jac, kernel))
}

/// `ker dh_p = span{V(p)}`.
pub fn hopf_s3_kernel_is_vertical(p: &SpherePoint) -> Result<bool, FibrationError> {
    let (_, kernel) = hopf_s3_jacobian(p)?;
    let v = eval_field(&s3_field("V").expect("V"), p.coords())?;
    Ok(kernel.same_as(&Subspace::span(4, &[v])))
}

/// `Σ_i det(D_i)²` over the 3×3 minors of `m`.
pub fn sum_of_squared_minors(m: &PolyMatrix) -> Result<MultiPoly, PolyError> {
    let mut total = MultiPoly::zero(m.nvars());
    for skip in 0..m.cols() {
        let cols: Vec<usize> = (0..m.cols()).filter(|&c| c != skip).collect();
        let d = poly::poly_det(&m.select_columns(&cols))?;
        total = &total + &(&d * &d);
    }
    Ok(total)
}

/// `(unscaled minor sum == ‖x‖⁶, scaled minor sum == 64·‖x‖⁶)`.
pub fn s3_minor_identity() -> Result<(bool, bool), PolyError> {
    let m = hopf_s3_printed_jacobian();
    let target = MultiPoly::norm_sq(4).pow(3);
    let unscaled = sum_of_squared_minors(&m)?;
    let scaled = sum_of_squared_minors(&m.map(|e| e.scale_int(2)))?;
    Ok((unscaled == target, scaled == target.scale_int(64)))
}

/// `γ_p(t) = e^{2πit}·(z₀, w₀)`.
pub fn fiber_point(p: &[f64], t: f64) -> [f64; 4] {
    let (s, c) = (2.0 * std::f64::consts::PI * t).sin_cos();
    [
        p[0] * c - p[1] * s,
        p[0] * s + p[1] * c,
        p[2] * c - p[3] * s,
        p[2] * s + p[3] * c,
    ]
}

fn hopf_s3_f64(x: &[f64]) -> [f64; 3] {
    [
        x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3],
        2.0 * (x[0] * x[2] + x[1] * x[3]),
        2.0 * (x[1] * x[2] - x[0] * x[3]),
    ]
}

/// Worst-case errors of the floating-point fibre-circle check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberCheck {
    pub constancy: f64,
    pub velocity: f64,
    pub periodicity: f64,
}

impl FiberCheck {
    pub const CONSTANCY_TOL: f64 = 1e-12;
    pub const VELOCITY_TOL: f64 = 1e-9;
    pub const STEP: f64 = 1e-6;

    pub fn passes(&self) -> bool {
        self.constancy <= Self::CONSTANCY_TOL
            && self.velocity <= Self::VELOCITY_TOL
            && self.periodicity <= Self::CONSTANCY_TOL
    }
}

/// Along `t = k/samples`, `h(γ_p(t)) = h(p)` and `γ̇_p(t) = 2π·V(γ_p(t))`
/// (centered difference of step 1e−6).
pub fn fiber_curve_check(p: &SpherePoint, samples: usize) -> Result<FiberCheck, FibrationError> {
    expect_dim(p, 4)?;
    assert!(samples >= 4, "fiber_curve_check needs at least 4 samples");
    let x: Vec<f64> = p.coords().iter().map(to_f64).collect();
    let base = hopf_s3_f64(&x);
    let two_pi = 2.0 * std::f64::consts::PI;
    let h = FiberCheck::STEP;
    let mut out = FiberCheck {
        constancy: 0.0,
        velocity: 0.0,
        periodicity: 0.0,
    };
    for k in 0..samples {
        let t = k as f64 / samples as f64;
        let g = fiber_point(&x, t);
        let hv = hopf_s3_f64(&g);
        for i in 0..3 {
            out.constancy = out.constancy.max((hv[i] - base[i]).abs());
        }
        let (gp, gm) = (fiber_point(&x, t + h), fiber_point(&x, t - h));
        let v = [-g[1], g[0], -g[3], g[2]];
        let err: f64 = (0..4)
            .map(|i| {
                let d = (gp[i] - gm[i]) / (2.0 * h) - two_pi * v[i];
                d * d
            })
            .sum::<f64>()
            .sqrt();
        out.velocity = out.velocity.max(err);
    }
    for t in [0.0, 1.0] {
        let g = fiber_point(&x, t);
        for i in 0..4 {
            out.periodicity = out.periodicity.max((g[i] - x[i]).abs());
        }
    }
    Ok(out)
}

/// `(c + i·s)·(z, w)` for a rational pair with `c² + s² = 1`.
pub fn rotate_fiber(p: &SpherePoint, c: &ExactScalar, s: &ExactScalar) -> Result<SpherePoint, FieldError> {
    let x = p.coords();
    SpherePoint::new(vec![
        c * &x[0] - s * &x[1],
        s * &x[0] + c * &x[1],
        c * &x[2] - s * &x[3],
        s * &x[2] + c * &x[3],
    ])
}

// ---------------------------------------------------------------------------
// S⁷ → ℂP³ in the chart z₀ ≠ 0.

fn chart_denominator() -> MultiPoly {
    quad(8, &[(1, 0, 0), (1, 1, 1)])
}

/// The six real components of `(z₁/z₀, z₂/z₀, z₃/z₀)`.
pub fn chart_rational_map() -> RationalMap {
    let q = chart_denominator();
    let mut comps = Vec::new();
    for k in 1..4 {
        let (a, b) = (2 * k, 2 * k + 1);
        comps.push((quad(8, &[(1, 0, a), (1, 1, b)]), q.clone()));
        comps.push((quad(8, &[(1, 0, b), (-1, 1, a)]), q.clone()));
    }
    RationalMap::new(comps)
}

/// The printed Jacobian multiplied through by `(x0² + x1²)²`.
pub fn chart_printed_jacobian_cleared() -> PolyMatrix {
    let n = 8;
    let q = chart_denominator();
    let d = quad(n, &[(1, 1, 1), (-1, 0, 0)]);
    let tx = quad(n, &[(2, 0, 1)]);
    let mut m = PolyMatrix::zeros(6, 8, n);
    for k in 0..3 {
        let (a, b) = (y(n, 2 + 2 * k), y(n, 3 + 2 * k));
        m.set(2 * k, 0, &(&d * &a) - &(&tx * &b));
        m.set(2 * k, 1, &(&(-&d) * &b) - &(&tx * &a));
        m.set(2 * k + 1, 0, &(&d * &b) + &(&tx * &a));
        m.set(2 * k + 1, 1, &(&d * &a) - &(&tx * &b));
        m.set(2 * k, 2 + 2 * k, &y(n, 0) * &q);
        m.set(2 * k, 3 + 2 * k, &y(n, 1) * &q);
        m.set(2 * k + 1, 2 + 2 * k, -&(&y(n, 1) * &q));
        m.set(2 * k + 1, 3 + 2 * k, &y(n, 0) * &q);
    }
    m
}

fn chart_q(p: &SpherePoint) -> Result<ExactScalar, FibrationError> {
    let q = chart_denominator().eval(p.coords())?;
    if q.is_zero() {
        return Err(FibrationError::OutsideChart(p.to_string()));
    }
    Ok(q)
}

pub fn chart_map(p: &SpherePoint) -> Result<Vector, FibrationError> {
    expect_dim(p, 8)?;
    chart_rational_map()
        .eval(p.coords())?
        .ok_or_else(|| FibrationError::OutsideChart(p.to_string()))
}

/// Exact chart Jacobian data at one point.
#[derive(Debug, Clone)]
pub struct ChartJacobian {
    pub matrix: Vec<Vector>,
    pub rank: usize,
    pub kernel: Subspace,
    /// `ker = span{N(p), V₄(p)}`.
    pub kernel_is_nv: bool,
    /// `det(J·Jᵀ)·(x0² + x1²)⁸`.
    pub scaled_gram_det: ExactScalar,
}

pub fn chart_jacobian(p: &SpherePoint) -> Result<ChartJacobian, FibrationError> {
    expect_dim(p, 8)?;
    let q = chart_q(p)?;
    let q2 = &q * &q;
    let cleared = chart_printed_jacobian_cleared().eval(p.coords())?;
    let matrix: Vec<Vector> = cleared
        .into_iter()
        .map(|r| r.into_iter().map(|x| x / &q2).collect())
        .collect();
    let r = rank(&matrix);
    let kernel = Subspace::span(8, &linalg::nullspace(&matrix, 8));
    let n = p.coords().to_vec();
    let v = eval_field(&hopf_vertical_field(8)?, p.coords())?;
    let kernel_is_nv = kernel.same_as(&Subspace::span(8, &[n, v]));
    let gram = linalg::mat_mul(&matrix, &linalg::transpose(&matrix));
    let mut q8 = ExactScalar::one();
    for _ in 0..8 {
        q8 *= &q;
    }
    Ok(ChartJacobian {
        matrix,
        rank: r,
        kernel,
        kernel_is_nv,
        scaled_gram_det: linalg::det(&gram) * q8,
    })
}

/// Outcome of the polynomial proof of the chart determinant identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartDeterminantProof {
    /// The printed Jacobian agrees with the derivative of the printed map.
    pub printed_matches_derivative: bool,
    /// `det(C·Cᵀ) = ‖x‖⁴·(x0² + x1²)¹⁶` on ℝ⁸, with `C` the cleared Jacobian.
    pub cleared_identity: bool,
    /// `‖x‖⁴ ≡ 1` modulo the sphere relation.
    pub sphere_reduction: bool,
}

impl ChartDeterminantProof {
    pub fn holds(&self) -> bool {
        self.printed_matches_derivative && self.cleared_identity && self.sphere_reduction
    }
}

/// Since `C = (x0² + x1²)²·J`, the cleared identity gives
/// `det(J·Jᵀ)·(x0² + x1²)⁸ = ‖x‖⁴`. `det(C·Cᵀ)` is expanded by Cauchy–Binet
/// as the sum of the squared 6×6 minors of `C`.
pub fn chart_determinant_identity() -> Result<ChartDeterminantProof, PolyError> {
    let c = chart_printed_jacobian_cleared();
    let printed_matches_derivative = chart_rational_map().cleared_jacobian()? == c;
    let mut total = MultiPoly::zero(8);
    for mask in 0u32..256 {
        if mask.count_ones() != 6 {
            continue;
        }
        let cols: Vec<usize> = (0..8).filter(|&j| mask >> j & 1 == 1).collect();
        let d = poly::poly_det(&c.select_columns(&cols))?;
        total = &total + &(&d * &d);
    }
    let norm4 = MultiPoly::norm_sq(8).pow(2);
    let target = &norm4 * &chart_denominator().pow(16);
    Ok(ChartDeterminantProof {
        printed_matches_derivative,
        cleared_identity: total == target,
        sphere_reduction: poly::poly_identity_check(&norm4, &MultiPoly::one(8), true)?,
    })
}

// ---------------------------------------------------------------------------
// S⁷ → S⁴.

/// `(a₀₀, a₁₁, a₂₂, a₃₃, a₄₄)`; these are also the five components of the
/// quaternionic Hopf map.
pub fn diagonal_coefficient_polys() -> [MultiPoly; 5] {
    [
        quad(
            8,
            &[
                (1, 0, 0),
                (1, 1, 1),
                (1, 2, 2),
                (1, 3, 3),
                (-1, 4, 4),
                (-1, 5, 5),
                (-1, 6, 6),
                (-1, 7, 7),
            ],
        ),
        quad(8, &[(2, 0, 4), (2, 1, 5), (2, 2, 6), (2, 3, 7)]),
        quad(8, &[(-2, 0, 5), (2, 1, 4), (-2, 2, 7), (2, 3, 6)]),
        quad(8, &[(-2, 0, 6), (2, 1, 7), (2, 2, 4), (-2, 3, 5)]),
        quad(8, &[(-2, 0, 7), (-2, 1, 6), (2, 2, 5), (2, 3, 4)]),
    ]
}

/// `a_mk` for `m, k ∈ 1..=4`, indexed `[m−1][k−1]`; the diagonal repeats
/// `a_mm` from the diagonal list.
pub fn coefficient_grid_polys() -> [[MultiPoly; 4]; 4] {
    let [_, a11, a22, a33, a44] = diagonal_coefficient_polys();
    let q = |t: &[(i64, usize, usize)]| quad(8, t);
    [
        [
            a11,
            q(&[(-2, 0, 5), (2, 1, 4), (2, 2, 7), (-2, 3, 6)]),
            q(&[(-2, 0, 6), (-2, 1, 7), (2, 2, 4), (2, 3, 5)]),
            q(&[(2, 0, 7), (-2, 1, 6), (2, 2, 5), (-2, 3, 4)]),
        ],
        [
            q(&[(2, 0, 4), (2, 1, 5), (-2, 2, 6), (-2, 3, 7)]),
            a22,
            q(&[(-2, 0, 6), (-2, 1, 7), (-2, 2, 4), (-2, 3, 5)]),
            q(&[(-2, 0, 7), (2, 1, 6), (2, 2, 5), (-2, 3, 4)]),
        ],
        [
            q(&[(-2, 0, 4), (2, 1, 5), (-2, 2, 6), (2, 3, 7)]),
            q(&[(-2, 0, 5), (-2, 1, 4), (2, 2, 7), (2, 3, 6)]),
            a33,
            q(&[(-2, 0, 7), (-2, 1, 6), (-2, 2, 5), (-2, 3, 4)]),
        ],
        [
            q(&[(2, 0, 4), (-2, 1, 5), (-2, 2, 6), (2, 3, 7)]),
            q(&[(-2, 0, 5), (-2, 1, 4), (-2, 2, 7), (-2, 3, 6)]),
            q(&[(2, 0, 6), (-2, 1, 7), (2, 2, 4), (-2, 3, 5)]),
            a44,
        ],
    ]
}

pub fn quat_hopf_polys() -> Vec<MultiPoly> {
    diagonal_coefficient_polys().to_vec()
}

pub fn quat_hopf_quadratic() -> QuadraticMap {
    QuadraticMap::from_polys(&quat_hopf_polys())
}

/// The printed `dh` (5×8, linear entries, including the factor 2).
pub fn quat_printed_jacobian() -> PolyMatrix {
    const ROWS: [[(i64, usize); 8]; 5] = [
        [(1, 0), (1, 1), (1, 2), (1, 3), (-1, 4), (-1, 5), (-1, 6), (-1, 7)],
        [(1, 4), (1, 5), (1, 6), (1, 7), (1, 0), (1, 1), (1, 2), (1, 3)],
        [(-1, 5), (1, 4), (-1, 7), (1, 6), (1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(-1, 6), (1, 7), (1, 4), (-1, 5), (1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(-1, 7), (-1, 6), (1, 5), (1, 4), (1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let rows = ROWS
        .iter()
        .map(|r| r.iter().map(|&(c, i)| lin(8, &[(2 * c, i)])).collect())
        .collect();
    PolyMatrix::from_rows(rows).expect("5x8 layout")
}

pub fn quat_hopf_map(p: &SpherePoint) -> Result<Vector, FibrationError> {
    expect_dim(p, 8)?;
    eval_all(&quat_hopf_polys(), p.coords())
}

/// `Y_ij` with `Y_0k = Y_k`, from the computed half-commutators.
pub fn frame_pair_field(i: usize, j: usize) -> Result<LinearVectorField, FieldError> {
    if i == 0 {
        return crate::fields::s7_field(j);
    }
    if !(1..j).contains(&i) || j > 7 {
        return Err(FieldError::BadIndex(10 * i + j));
    }
    let frame = invariant_frame(8)?;
    let b = bracket(&frame[i], &frame[j])?;
    Ok(b.halve()
        .ok_or(FieldError::OddCommutator { i, j })?
        .with_name(format!("Y{i}{j}")))
}

fn pair_name(i: usize, j: usize) -> String {
    if i == 0 {
        format!("Y{j}")
    } else {
        format!("Y{i}{j}")
    }
}

pub const VERTICAL_PAIRS: [(usize, usize); 3] = [(4, 5), (4, 6), (5, 6)];

/// `{Y45, Y46, Y56}`.
pub fn vertical_fields() -> Vec<LinearVectorField> {
    VERTICAL_PAIRS
        .iter()
        .map(|&(i, j)| frame_pair_field(i, j).expect("valid pair"))
        .collect()
}

/// Index pairs of `ℋ_m`: `ℋ₀ = {Y47, Y57, Y67}`, `ℋ_m = {Y_j4, …, Y_j7}`
/// with `j = 4 − m`.
pub fn collection_pairs(m: usize) -> Vec<(usize, usize)> {
    match m {
        0 => vec![(4, 7), (5, 7), (6, 7)],
        1..=4 => (4..8).map(|k| (4 - m, k)).collect(),
        _ => panic!("collection index {m} out of range"),
    }
}

pub fn collection(m: usize) -> Distribution {
    let gens = collection_pairs(m)
        .iter()
        .map(|&(i, j)| frame_pair_field(i, j).expect("valid pair").with_name(pair_name(i, j)))
        .collect();
    Distribution::new(format!("H{m}"), gens).expect("common dimension")
}

/// `ℋ₀ ∪ {Y_j7}`.
pub fn collection_with_w(j: usize) -> Distribution {
    let mut gens = collection(0).generators().to_vec();
    gens.push(frame_pair_field(j, 7).expect("valid pair").with_name(pair_name(j, 7)));
    Distribution::new(format!("H0+Y{j}7"), gens).expect("common dimension")
}

/// Exact `dh` at a point with its verticality and rank data.
#[derive(Debug, Clone)]
pub struct QuatJacobian {
    pub matrix: Vec<Vector>,
    /// `dh·Y45(p)`, `dh·Y46(p)`, `dh·Y56(p)` all vanish.
    pub vertical: [bool; 3],
    /// Rank of `dh` on `T_p S⁷`.
    pub restricted_rank: usize,
    /// `dh·p = 2·h(p)`.
    pub euler: bool,
}

pub fn quat_hopf_jacobian(p: &SpherePoint) -> Result<QuatJacobian, FibrationError> {
    expect_dim(p, 8)?;
    let matrix = quat_printed_jacobian().eval(p.coords())?;
    let mut vertical = [false; 3];
    for (slot, f) in vertical.iter_mut().zip(vertical_fields()) {
        let v = eval_field(&f, p.coords())?;
        *slot = linalg::is_zero_vector(&linalg::mat_vec(&matrix, &v));
    }
    let tangent = Subspace::orthogonal_complement_of(8, &[p.coords().to_vec()]);
    let images: Vec<Vector> = tangent.basis().iter().map(|b| linalg::mat_vec(&matrix, b)).collect();
    let h = quat_hopf_map(p)?;
    let dp = linalg::mat_vec(&matrix, p.coords());
    let euler = dp.iter().zip(&h).all(|(a, b)| *a == b * int(2));
    Ok(QuatJacobian {
        matrix,
        vertical,
        restricted_rank: rank(&images),
        euler,
    })
}

/// Verticality of `Y45, Y46, Y56` as polynomial identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalIdentity {
    pub field: String,
    /// `dh·F(y) = 0` on all of ℝ⁸.
    pub on_r8: bool,
    /// `dh·F(y) ≡ 0` modulo the sphere relation.
    pub on_sphere: bool,
}

pub fn quat_vertical_identities() -> Result<Vec<VerticalIdentity>, PolyError> {
    let dh = quat_printed_jacobian();
    let mut out = Vec::new();
    for f in vertical_fields() {
        let image = dh.apply(&f.to_polys())?;
        let zero = MultiPoly::zero(8);
        let on_r8 = image.iter().all(MultiPoly::is_zero);
        let mut on_sphere = true;
        for c in &image {
            on_sphere &= poly::poly_identity_check(c, &zero, true)?;
        }
        out.push(VerticalIdentity {
            field: f.name().to_string(),
            on_r8,
            on_sphere,
        });
    }
    Ok(out)
}

/// The printed `dh` equals the Jacobian of the map, and `‖h‖² = ‖y‖⁴`.
pub fn quat_map_identities() -> Result<(bool, bool), PolyError> {
    let h = quat_hopf_polys();
    let jac_ok = poly::jacobian(&h)? == quat_printed_jacobian();
    let norm = poly::dot(&h, &h) == MultiPoly::norm_sq(8).pow(2);
    Ok((jac_ok, norm))
}

/// S⁴ coordinates at a point of S⁷.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfCoefficients {
    pub a00: ExactScalar,
    pub a11: ExactScalar,
    pub a22: ExactScalar,
    pub a33: ExactScalar,
    pub a44: ExactScalar,
    /// `a_mk` at `[m−1][k−1]`.
    pub amk: [[ExactScalar; 4]; 4],
}

impl HopfCoefficients {
    pub fn diagonal(&self) -> [&ExactScalar; 5] {
        [&self.a00, &self.a11, &self.a22, &self.a33, &self.a44]
    }
}

pub fn hopf_coefficients(p: &SpherePoint) -> Result<HopfCoefficients, FibrationError> {
    expect_dim(p, 8)?;
    let x = p.coords();
    let d = diagonal_coefficient_polys()
        .iter()
        .map(|q| q.eval(x))
        .collect::<Result<Vec<_>, _>>()?;
    let grid = coefficient_grid_polys();
    let mut amk: [[ExactScalar; 4]; 4] = Default::default();
    for (m, row) in grid.iter().enumerate() {
        for (k, q) in row.iter().enumerate() {
            amk[m][k] = q.eval(x)?;
        }
    }
    let [a00, a11, a22, a33, a44]: [ExactScalar; 5] = d.try_into().expect("five entries");
    Ok(HopfCoefficients {
        a00,
        a11,
        a22,
        a33,
        a44,
        amk,
    })
}

/// Which coefficient an inner product is claimed to equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficient {
    A00,
    Grid(usize, usize),
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::A00 => write!(f, "a00"),
            Coefficient::Grid(m, k) => write!(f, "a{m}{k}"),
        }
    }
}

fn coefficient_poly(c: Coefficient) -> MultiPoly {
    match c {
        Coefficient::A00 => diagonal_coefficient_polys()[0].clone(),
        Coefficient::Grid(m, k) => coefficient_grid_polys()[m - 1][k - 1].clone(),
    }
}

/// `sign·⟨Y_a, Y_b⟩ = coefficient`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InnerProductClaim {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub sign: i64,
    pub coefficient: Coefficient,
}

impl InnerProductClaim {
    pub fn id(&self) -> String {
        let s = if self.sign < 0 { "-" } else { "" };
        format!(
            "{s}<{},{}>={}",
            pair_name(self.a.0, self.a.1),
            pair_name(self.b.0, self.b.1),
            self.coefficient
        )
    }
}

/// Printed inner products for `ℋ_m ∪ V`, `m = 0..=4`.
pub fn inner_product_claims(m: usize) -> Vec<InnerProductClaim> {
    let c = |a, b, sign, coefficient| InnerProductClaim {
        a,
        b,
        sign,
        coefficient,
    };
    use Coefficient::{Grid, A00};
    if m == 0 {
        return vec![
            c((4, 5), (6, 7), 1, A00),
            c((4, 6), (5, 7), -1, A00),
            c((5, 6), (4, 7), 1, A00),
        ];
    }
    let j = 4 - m;
    // Sign pattern of the three diagonal relations and the coefficient
    // index attached to ⟨Y45,Yj7⟩, ⟨Y46,Yj7⟩, ⟨Y56,Yj7⟩.
    let (sign, ks): (i64, [usize; 3]) = match m {
        1 => (1, [2, 3, 4]),
        2 => (-1, [1, 4, 3]),
        3 => (1, [4, 1, 2]),
        4 => (1, [3, 2, 1]),
        _ => panic!("collection index {m} out of range"),
    };
    vec![
        c((4, 5), (j, 6), sign, Grid(m, m)),
        c((4, 6), (j, 5), -sign, Grid(m, m)),
        c((5, 6), (j, 4), sign, Grid(m, m)),
        c((4, 5), (j, 7), 1, Grid(m, ks[0])),
        c((4, 6), (j, 7), 1, Grid(m, ks[1])),
        c((5, 6), (j, 7), 1, Grid(m, ks[2])),
    ]
}

/// Result of checking one collection's printed inner products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerProductReport {
    pub claims: Vec<(String, bool)>,
    /// Pairs outside the claims whose inner product is not identically zero.
    pub nonvanishing_others: Vec<String>,
    /// Every field of `ℋ_m ∪ V` has `⟨F, F⟩ = ‖y‖²`.
    pub unit_norms: bool,
}

pub fn inner_product_identities(m: usize) -> Result<InnerProductReport, FieldError> {
    let claims = inner_product_claims(m);
    let mut results = Vec::new();
    for cl in &claims {
        let g = gram_poly(&frame_pair_field(cl.a.0, cl.a.1)?, &frame_pair_field(cl.b.0, cl.b.1)?)?;
        results.push((cl.id(), g.scale_int(cl.sign) == coefficient_poly(cl.coefficient)));
    }
    let mut pairs: Vec<(usize, usize)> = collection_pairs(m);
    pairs.extend(VERTICAL_PAIRS);
    let listed = |a: (usize, usize), b: (usize, usize)| {
        claims
            .iter()
            .any(|c| (c.a == a && c.b == b) || (c.a == b && c.b == a))
    };
    let mut others = Vec::new();
    let mut unit = true;
    let norm = MultiPoly::norm_sq(8);
    for (ia, &a) in pairs.iter().enumerate() {
        let fa = frame_pair_field(a.0, a.1)?;
        unit &= gram_poly(&fa, &fa)? == norm;
        for &b in &pairs[ia + 1..] {
            if listed(a, b) {
                continue;
            }
            let g = gram_poly(&fa, &frame_pair_field(b.0, b.1)?)?;
            if !g.is_zero() {
                others.push(format!("<{},{}>", pair_name(a.0, a.1), pair_name(b.0, b.1)));
            }
        }
    }
    Ok(InnerProductReport {
        claims: results,
        nonvanishing_others: others,
        unit_norms: unit,
    })
}

/// The S⁴ relation `Σ a_mm² = 1` and the four row sums
/// `a00² + Σ_k a_mk² = 1`, each decided modulo the sphere relation.
pub fn coefficient_identities_check() -> Result<Vec<(String, bool)>, PolyError> {
    let sq = |p: &MultiPoly| p * p;
    let one = MultiPoly::one(8);
    let diag = diagonal_coefficient_polys();
    let mut out = Vec::new();
    let s = diag.iter().fold(MultiPoly::zero(8), |acc, p| &acc + &sq(p));
    out.push(("hopfcoord".to_string(), poly::poly_identity_check(&s, &one, true)?));
    for (m, row) in coefficient_grid_polys().iter().enumerate() {
        let s = row.iter().fold(sq(&diag[0]), |acc, p| &acc + &sq(p));
        out.push((format!("cos.{}", m + 1), poly::poly_identity_check(&s, &one, true)?));
    }
    Ok(out)
}

/// Position of a point of S⁷ relative to the special sets of the theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionTag {
    Generic,
    S1,
    S2,
}

impl fmt::Display for RegionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegionTag::Generic => "GENERIC",
            RegionTag::S1 => "S1",
            RegionTag::S2 => "S2",
        })
    }
}

pub fn region(p: &SpherePoint) -> RegionTag {
    let x = p.coords();
    let lo: ExactScalar = x[..4].iter().map(|t| t * t).sum();
    let hi: ExactScalar = x[4..].iter().map(|t| t * t).sum();
    let half = ExactScalar::new(1.into(), 2.into());
    if lo == half && hi == half {
        RegionTag::S1
    } else if (lo.is_zero() && hi.is_one()) || (lo.is_one() && hi.is_zero()) {
        RegionTag::S2
    } else {
        RegionTag::Generic
    }
}

/// The generators together with `Y45, Y46, Y56` span `T_p S⁷`.
pub fn transversality_check(d: &Distribution, p: &SpherePoint) -> Result<bool, FibrationError> {
    expect_dim(p, 8)?;
    let mut vals = Vec::new();
    for g in d.generators() {
        let v = eval_field(g, p.coords())?;
        if !linalg::dot(&v, p.coords()).is_zero() {
            return Err(FieldError::NotTangent {
                field: g.name().to_string(),
                point: p.to_string(),
            }
            .into());
        }
        vals.push(v);
    }
    for f in vertical_fields() {
        vals.push(eval_field(&f, p.coords())?);
    }
    Ok(rank(&vals) == 7)
}

/// A horizontal distribution chosen at a point.
#[derive(Debug, Clone)]
pub struct EhresmannChoice {
    pub region: RegionTag,
    pub distribution: Distribution,
}

/// Off S₁, the first of `ℋ₁, …, ℋ₄` transverse to `V`; on S₁, the first
/// `ℋ₀ ∪ {Y_j7}`, `j = 0..=3`, transverse to `V`.
pub fn ehresmann_select(p: &SpherePoint) -> Result<EhresmannChoice, FibrationError> {
    let tag = region(p);
    let candidates: Vec<Distribution> = if tag == RegionTag::S1 {
        (0..4).map(collection_with_w).collect()
    } else {
        (1..5).map(collection).collect()
    };
    for d in candidates {
        if transversality_check(&d, p)? {
            return Ok(EhresmannChoice {
                region: tag,
                distribution: d,
            });
        }
    }
    Err(FibrationError::TheoremViolation {
        point: p.to_string(),
        region: tag,
    })
}

/// `span{X(p), Y(p), V(p)} = T_p S³`.
pub fn s3_ehresmann(p: &SpherePoint) -> Result<bool, FibrationError> {
    expect_dim(p, 4)?;
    let vals: Vec<Vector> = ["X", "Y", "V"]
        .iter()
        .map(|n| eval_field(&s3_field(n).expect("frame"), p.coords()))
        .collect::<Result<_, _>>()?;
    Ok(rank(&vals) == 3)
}

/// `N(p)` for callers that need the radial direction in dim 8.
pub fn radial_at(p: &SpherePoint) -> Vector {
    eval_field(&radial_field(p.dim()), p.coords()).expect("matching dim")
}
