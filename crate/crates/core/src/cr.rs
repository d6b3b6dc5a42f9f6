//! Almost complex structure on ℂⁿ ≅ ℝ²ⁿ, holomorphic tangent spaces of odd
//! spheres and the CR one-form `ω = Σ z̄_k dz_k`.
//!
//! Real coordinates are interleaved: `z_k = x_{2k} + i·x_{2k+1}`.

use num_traits::{One, Zero};

use crate::algebra::{int, ratio, ExactScalar};
use crate::fields::{
    eval_field, hopf_vertical_field, invariant_frame, radial_field, s3_field, FieldError,
    IntMatrix, LinearVectorField, SpherePoint,
};
use crate::linalg::{self, Subspace, Vector};

/// `J(∂_{x_{2k}}) = ∂_{x_{2k+1}}`, `J(∂_{x_{2k+1}}) = −∂_{x_{2k}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostComplexStructure {
    matrix: IntMatrix,
}

impl AlmostComplexStructure {
    pub fn new(dim: usize) -> Result<Self, FieldError> {
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(FieldError::UnsupportedDim(dim));
        }
        let mut m = IntMatrix::zeros(dim);
        for k in 0..dim / 2 {
            m.set(2 * k + 1, 2 * k, 1);
            m.set(2 * k, 2 * k + 1, -1);
        }
        Ok(Self { matrix: m })
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[ExactScalar]) -> Vector {
        self.matrix.apply(v)
    }

    /// The field `J∘F`, i.e. matrix `J·A` for `F = A·y`.
    pub fn compose(&self, f: &LinearVectorField) -> Result<LinearVectorField, FieldError> {
        if f.dim() != self.dim() {
            return Err(FieldError::DimMismatch {
                left: self.dim(),
                right: f.dim(),
            });
        }
        Ok(LinearVectorField::new(self.matrix.matmul(f.matrix())))
    }

    pub fn squares_to_minus_identity(&self) -> bool {
        self.matrix.matmul(&self.matrix) == IntMatrix::identity(self.dim()).scale(-1)
    }

    pub fn is_orthogonal(&self) -> bool {
        self.matrix.transpose().matmul(&self.matrix) == IntMatrix::identity(self.dim())
    }

    pub fn preserves(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|b| s.contains(&self.apply(b)))
    }
}

/// `T_p ∩ J(T_p)` where `T_p = p^⊥`.
pub fn holomorphic_tangent(p: &SpherePoint) -> Result<Subspace, FieldError> {
    let j = AlmostComplexStructure::new(p.dim())?;
    let tangent = tangent_space(p);
    Ok(tangent.intersect(&tangent.image(&j_rows(&j))))
}

pub fn tangent_space(p: &SpherePoint) -> Subspace {
    Subspace::orthogonal_complement_of(p.dim(), &[p.coords().to_vec()])
}

fn j_rows(j: &AlmostComplexStructure) -> Vec<Vector> {
    linalg::to_rational(&j.matrix().rows())
}

/// Whether `H_p` equals `{u ∈ T_p : ⟨u, V_{n+1}(p)⟩ = 0}`.
pub fn verify_orthocomplement(p: &SpherePoint) -> Result<bool, FieldError> {
    let h = holomorphic_tangent(p)?;
    let v = eval_field(&hopf_vertical_field(p.dim())?, p.coords())?;
    let target = Subspace::orthogonal_complement_of(p.dim(), &[p.coords().to_vec(), v]);
    Ok(h.same_as(&target))
}

/// On S³: `H_p = span{X(p), Y(p)}`.
pub fn s3_horizontal_matches(p: &SpherePoint) -> Result<bool, FieldError> {
    if p.dim() != 4 {
        return Err(FieldError::UnsupportedDim(p.dim()));
    }
    let h = holomorphic_tangent(p)?;
    let xy: Vec<Vector> = ["X", "Y"]
        .iter()
        .map(|n| eval_field(&s3_field(n).expect("frame field"), p.coords()))
        .collect::<Result<_, _>>()?;
    Ok(h.same_as(&Subspace::span(4, &xy)))
}

/// The orthocomplement of `span{N(p), V(p)}` is `J`-invariant.
pub fn complement_is_j_invariant(p: &SpherePoint) -> Result<bool, FieldError> {
    let j = AlmostComplexStructure::new(p.dim())?;
    let v = eval_field(&hopf_vertical_field(p.dim())?, p.coords())?;
    let plane = Subspace::span(p.dim(), &[p.coords().to_vec(), v]);
    Ok(j.preserves(&plane) && j.preserves(&plane.orthogonal_complement()))
}

/// Outcome of one matrix identity involving `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub id: String,
    pub holds: bool,
}

/// `J∘X = Y`, `J∘Y = −X`, `J∘V = −N`, `J∘N = V` on ℝ⁴, `J∘V₄ = −N`,
/// `J∘N = V₄` on ℝ⁸, `J∘J∘F = −F` on every frame field, and `J² = −I`.
pub fn j_structure_check() -> Vec<Relation> {
    let mut out = Vec::new();
    let j2 = AlmostComplexStructure::new(4).expect("even dim");
    let j4 = AlmostComplexStructure::new(8).expect("even dim");
    let f = |n: &str| s3_field(n).expect("frame field");
    let rel = |id: &str, holds: bool| Relation {
        id: id.to_string(),
        holds,
    };
    let jc = |j: &AlmostComplexStructure, g: &LinearVectorField| j.compose(g).expect("same dim");
    out.push(rel("J2.X=Y", jc(&j2, &f("X")) == f("Y")));
    out.push(rel("J2.Y=-X", jc(&j2, &f("Y")) == f("X").neg()));
    out.push(rel("J2.V=-N", jc(&j2, &f("V")) == f("N").neg()));
    out.push(rel("J2.N=V", jc(&j2, &f("N")) == f("V")));
    let v4 = hopf_vertical_field(8).expect("even dim");
    let n8 = radial_field(8);
    out.push(rel("J4.V=-N", jc(&j4, &v4) == n8.neg()));
    out.push(rel("J4.N=V", jc(&j4, &n8) == v4));
    for (j, dim) in [(&j2, 4), (&j4, 8)] {
        let tag = if dim == 4 { "J2" } else { "J4" };
        out.push(rel(&format!("{tag}.square=-I"), j.squares_to_minus_identity()));
        out.push(rel(&format!("{tag}.orthogonal"), j.is_orthogonal()));
        let all = invariant_frame(dim)
            .expect("frame dim")
            .iter()
            .all(|g| jc(j, &jc(j, g)) == g.neg());
        out.push(rel(&format!("{tag}.JJF=-F"), all));
    }
    out
}

/// `ω(u) = Σ z̄_k du_k` at `p`, as `(re, im)`, computed in complex form.
pub fn cr_form_complex(p: &[ExactScalar], u: &[ExactScalar]) -> (ExactScalar, ExactScalar) {
    let mut re = ExactScalar::zero();
    let mut im = ExactScalar::zero();
    for k in 0..p.len() / 2 {
        let (a, b) = (&p[2 * k], &p[2 * k + 1]);
        let (c, d) = (&u[2 * k], &u[2 * k + 1]);
        // (a − ib)(c + id)
        re += a * c + b * d;
        im += a * d - b * c;
    }
    (re, im)
}

/// `ω(F(p)) = (⟨F(p), N(p)⟩, ⟨F(p), V_{n+1}(p)⟩)`; the complex evaluation is
/// checked against the inner-product pair before returning.
pub fn cr_form_eval(
    f: &LinearVectorField,
    p: &SpherePoint,
) -> Result<(ExactScalar, ExactScalar), FieldError> {
    let u = eval_field(f, p.coords())?;
    let v = eval_field(&hopf_vertical_field(p.dim())?, p.coords())?;
    let pair = (linalg::dot(&u, p.coords()), linalg::dot(&u, &v));
    let complex = cr_form_complex(p.coords(), &u);
    assert_eq!(complex, pair, "complex and real evaluations of ω disagree");
    Ok(pair)
}

/// A complex vector field on ℂ² ≅ ℝ⁴ with linear coefficients, stored as
/// real and imaginary coefficient matrices (value at `x` is `(Re·x) + i(Im·x)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexLinearField {
    pub re: Vec<Vector>,
    pub im: Vec<Vector>,
}

impl ComplexLinearField {
    pub fn zero(dim: usize) -> Self {
        let z = vec![vec![ExactScalar::zero(); dim]; dim];
        Self { re: z.clone(), im: z }
    }

    /// Adds `c(x)·D` where the coefficient is `c(x) = (cre + i·cim)·x` and
    /// `D = dre + i·dim` is a constant complex direction.
    fn add_term(&mut self, cre: &[i64], cim: &[i64], dre: &Vector, dim_: &Vector) {
        for d in 0..self.re.len() {
            for v in 0..self.re.len() {
                let (a, b) = (int(cre[v]), int(cim[v]));
                self.re[d][v] += &a * &dre[d] - &b * &dim_[d];
                self.im[d][v] += &a * &dim_[d] + &b * &dre[d];
            }
        }
    }

    /// `(a·F_re + i·b·F_im)` for real linear fields.
    pub fn from_real(a: &ExactScalar, f: &LinearVectorField, b: &ExactScalar, g: &LinearVectorField) -> Self {
        let scale = |k: &ExactScalar, m: &IntMatrix| -> Vec<Vector> {
            m.rows()
                .iter()
                .map(|r| r.iter().map(|&x| k * int(x)).collect())
                .collect()
        };
        Self {
            re: scale(a, f.matrix()),
            im: scale(b, g.matrix()),
        }
    }
}

/// `∂_z`, `∂_w`, `∂_z̄`, `∂_w̄` on ℂ² as constant complex directions.
fn wirtinger(k: usize, conj: bool) -> (Vector, Vector) {
    let mut re = vec![ExactScalar::zero(); 4];
    let mut im = vec![ExactScalar::zero(); 4];
    re[2 * k] = ratio(1, 2);
    im[2 * k + 1] = if conj { ratio(1, 2) } else { ratio(-1, 2) };
    (re, im)
}

/// `w̄∂_z − z̄∂_w` in real coordinates.
pub fn kernel_field_holomorphic() -> ComplexLinearField {
    let mut f = ComplexLinearField::zero(4);
    let (dz_re, dz_im) = wirtinger(0, false);
    let (dw_re, dw_im) = wirtinger(1, false);
    // w̄ = x2 − i·x3, −z̄ = −x0 + i·x1
    f.add_term(&[0, 0, 1, 0], &[0, 0, 0, -1], &dz_re, &dz_im);
    f.add_term(&[-1, 0, 0, 0], &[0, 1, 0, 0], &dw_re, &dw_im);
    f
}

/// `−w∂_z̄ + z∂_w̄` in real coordinates.
pub fn kernel_field_antiholomorphic() -> ComplexLinearField {
    let mut f = ComplexLinearField::zero(4);
    let (dz_re, dz_im) = wirtinger(0, true);
    let (dw_re, dw_im) = wirtinger(1, true);
    // −w = −x2 − i·x3, z = x0 + i·x1
    f.add_term(&[0, 0, -1, 0], &[0, 0, 0, -1], &dz_re, &dz_im);
    f.add_term(&[1, 0, 0, 0], &[0, 1, 0, 0], &dw_re, &dw_im);
    f
}

/// `(w̄∂_z − z̄∂_w = ½(−X+iY), −w∂_z̄ + z∂_w̄ = ½(X+iY))`.
pub fn complex_kernel_identities() -> (bool, bool) {
    let (x, y) = (s3_field("X").expect("X"), s3_field("Y").expect("Y"));
    let h = ratio(1, 2);
    let first = kernel_field_holomorphic() == ComplexLinearField::from_real(&-h.clone(), &x, &h, &y);
    let second = kernel_field_antiholomorphic() == ComplexLinearField::from_real(&h, &x, &h, &y);
    (first, second)
}

/// The pair `(1, 0)` / `(0, 1)` as exact scalars, for callers comparing
/// `cr_form_eval` outputs.
pub fn unit_pair(real: bool) -> (ExactScalar, ExactScalar) {
    if real {
        (ExactScalar::one(), ExactScalar::zero())
    } else {
        (ExactScalar::zero(), ExactScalar::one())
    }
}
