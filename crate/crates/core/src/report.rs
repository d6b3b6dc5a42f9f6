//! Verification suites and their reports.
//!
//! A report is a list of checks sorted by id. JSON output has the fixed
//! field order `suite, seed, samples, checks[], summary`, and each check is
//! `id, paper_ref, status, details, counterexample`. Rationals are written
//! as `"p/q"` strings. Identical configurations give byte-identical output.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    self, associator_in, conjugate, int, octonion_product_formula, ratio, AlgebraElement,
    ExactScalar, MultiplicationTable,
};
use crate::cr;
use crate::fibration::{self as fib, RegionTag};
use crate::fields::{
    self, bracket, commutator_table, decomposition_fields, eval_field, flag_dimensions, gram,
    hopf_vertical_field, invariant_frame, is_bracket_generating, printed_commutator, printed_v52,
    right_translation_symbolic, s3_contact_forms, s3_field, s7_field, Distribution,
    LinearVectorField, SpherePoint,
};
use crate::linalg;
use crate::poly::{self, MultiPoly, PolyMatrix};
use crate::sampling::{s1_witness, sample_sphere_points, SplitMix64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Algebra,
    S3,
    S3Cr,
    S3Hopf,
    S7Frame,
    S7Cr,
    S7Quat,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Algebra,
        Suite::S3,
        Suite::S3Cr,
        Suite::S3Hopf,
        Suite::S7Frame,
        Suite::S7Cr,
        Suite::S7Quat,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::S3 => "s3",
            Suite::S3Cr => "s3-cr",
            Suite::S3Hopf => "s3-hopf",
            Suite::S7Frame => "s7-frame",
            Suite::S7Cr => "s7-cr",
            Suite::S7Quat => "s7-quat",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unknown format {0:?} (expected json or text)")]
    UnknownFormat(String),
    #[error("samples must be at least 1")]
    NoSamples,
}

impl FromStr for Suite {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| ReportError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(ReportError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            samples: 100,
            seed: 0,
            format: Format::Json,
            output: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    pub details: String,
    pub counterexample: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    fn assemble(config: &SuiteConfig, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut seen = BTreeSet::new();
        for c in &checks {
            assert!(seen.insert(c.id.clone()), "duplicate check id {}", c.id);
        }
        let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
        let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
        Self {
            suite: config.suite.name().to_string(),
            seed: config.seed,
            samples: config.samples,
            summary: Summary {
                total: checks.len(),
                passed,
                failed,
            },
            checks,
        }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "suite {} seed {} samples {}\n",
            self.suite, self.seed, self.samples
        );
        for c in &self.checks {
            s.push_str(&format!("{:<4} {}: {}\n", c.status, c.id, c.details));
            if let Some(p) = &c.counterexample {
                s.push_str(&format!("     counterexample ({})\n", p.join(", ")));
            }
        }
        s.push_str(&format!(
            "total {} passed {} failed {}\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

/// `"p/q"` with a positive denominator, also for integers.
pub fn rational_string(x: &ExactScalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn point_strings(p: &[ExactScalar]) -> Vec<String> {
    p.iter().map(rational_string).collect()
}

// ---------------------------------------------------------------------------
// Check collection.

#[derive(Default)]
struct Checks {
    out: Vec<Check>,
}

impl Checks {
    fn push(&mut self, id: &str, paper_ref: &str, ok: bool, details: impl Into<String>) {
        self.push_with(id, paper_ref, ok, details, None);
    }

    fn push_with(
        &mut self,
        id: &str,
        paper_ref: &str,
        ok: bool,
        details: impl Into<String>,
        counterexample: Option<Vec<String>>,
    ) {
        self.out.push(Check {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            details: details.into(),
            counterexample: if ok { None } else { counterexample },
        });
    }

    /// Pass if `f` holds at every point; otherwise fail with the first
    /// counterexample. Errors count as failures.
    fn at_points<E: fmt::Display>(
        &mut self,
        id: &str,
        paper_ref: &str,
        points: &[SpherePoint],
        what: &str,
        mut f: impl FnMut(&SpherePoint) -> Result<bool, E>,
    ) {
        let mut first_bad = None;
        let mut bad = 0;
        let mut err = None;
        for p in points {
            let ok = match f(p) {
                Ok(ok) => ok,
                Err(e) => {
                    err.get_or_insert_with(|| e.to_string());
                    false
                }
            };
            if !ok {
                bad += 1;
                first_bad.get_or_insert_with(|| point_strings(p.coords()));
            }
        }
        let mut details = format!("{what}: {}/{} points", points.len() - bad, points.len());
        if let Some(e) = err {
            details.push_str(&format!("; error: {e}"));
        }
        self.push_with(id, paper_ref, bad == 0, details, first_bad);
    }

    /// A point-independent polynomial identity.
    fn identity(&mut self, id: &str, paper_ref: &str, ok: Result<bool, impl fmt::Display>, what: &str) {
        match ok {
            Ok(ok) => self.push(id, paper_ref, ok, format!("polynomial identity (point-independent): {what}")),
            Err(e) => self.push(id, paper_ref, false, format!("{what}: error: {e}")),
        }
    }
}

struct Samples {
    s3: Vec<SpherePoint>,
    s7: Vec<SpherePoint>,
    seed: u64,
    count: usize,
}

impl Samples {
    fn new(count: usize, seed: u64) -> Self {
        Self {
            s3: sample_sphere_points(4, count, seed).expect("dim 4"),
            s7: sample_sphere_points(8, count, seed).expect("dim 8"),
            seed,
            count,
        }
    }

    /// The first `k` pseudo-random points of S³ (basis points excluded).
    fn s3_random(&self, k: usize) -> &[SpherePoint] {
        &self.s3[..k.min(self.count)]
    }
}

fn frame(dim: usize) -> Vec<LinearVectorField> {
    invariant_frame(dim).expect("frame dim")
}

fn s3(name: &str) -> LinearVectorField {
    s3_field(name).expect("frame field")
}

fn ints(xs: &[i64]) -> Vec<ExactScalar> {
    xs.iter().map(|&x| int(x)).collect()
}

// ---------------------------------------------------------------------------
// algebra

const REF_TABLE: &str = "octonion multiplication table";
const REF_FORMULA: &str = "closed-form octonion product";
const REF_QUAT: &str = "quaternion product formula";
const REF_CONJ: &str = "quaternion conjugate and norm";
const REF_NONASSOC: &str = "unit octonions do not associate";

fn random_element(rng: &mut SplitMix64, dim: usize) -> AlgebraElement {
    let c = (0..dim)
        .map(|_| {
            let n = rng.range(-100, 100);
            let d = rng.range(1, 100);
            ratio(n, d)
        })
        .collect();
    AlgebraElement::new(c).expect("supported dim")
}

fn algebra_checks(c: &mut Checks, table: &MultiplicationTable, samples: &Samples) {
    let printed = MultiplicationTable::standard(8).expect("dim 8");
    let e = |i| AlgebraElement::basis(8, i).expect("basis");
    let mut formula_ok = 0;
    for i in 0..8 {
        for j in 0..8 {
            let prod = table.multiply(&e(i), &e(j)).expect("dim 8");
            let want = printed.get(i, j).expect("index");
            let mut expected = AlgebraElement::basis(8, want.index).expect("basis");
            if want.sign < 0 {
                expected = -&expected;
            }
            let formula = octonion_product_formula(&e(i), &e(j)).expect("dim 8");
            formula_ok += usize::from(prod == formula);
            c.push(
                &format!("algebra.table.e{i}*e{j}"),
                REF_TABLE,
                prod == expected && prod == formula,
                format!("e{i}*e{j} = {prod}, table {want}, formula {formula}"),
            );
        }
    }
    c.push(
        "algebra.formula.basis-pairs",
        REF_FORMULA,
        formula_ok == 64,
        format!("table product equals closed form on {formula_ok}/64 basis pairs"),
    );

    let mut rng = SplitMix64::new(samples.seed ^ 0xA1CE);
    let n = samples.count;
    let mut agree = 0;
    let mut norm_ok = [0usize; 3];
    let mut anti = 0;
    let mut invol = 0;
    for _ in 0..n {
        let (a, b) = (random_element(&mut rng, 8), random_element(&mut rng, 8));
        let ab = table.multiply(&a, &b).expect("dim 8");
        agree += usize::from(ab == octonion_product_formula(&a, &b).expect("dim 8"));
        for (slot, dim) in norm_ok.iter_mut().zip([2, 4, 8]) {
            let (x, y) = (random_element(&mut rng, dim), random_element(&mut rng, dim));
            let t = if dim == 8 {
                table.clone()
            } else {
                MultiplicationTable::standard(dim).expect("dim")
            };
            let xy = t.multiply(&x, &y).expect("dim");
            *slot += usize::from(algebra::norm_sq(&xy) == algebra::norm_sq(&x) * algebra::norm_sq(&y));
        }
        let (p, q) = (random_element(&mut rng, 4), random_element(&mut rng, 4));
        let lhs = conjugate(&algebra::mul(&p, &q).expect("dim 4"));
        let rhs = algebra::mul(&conjugate(&q), &conjugate(&p)).expect("dim 4");
        anti += usize::from(lhs == rhs);
        invol += usize::from(conjugate(&conjugate(&a)) == a);
    }
    c.push(
        "algebra.formula.random",
        REF_FORMULA,
        agree == n,
        format!("table product equals closed form on {agree}/{n} random octonion pairs"),
    );
    let mut basis_norm = true;
    for i in 0..8 {
        for j in 0..8 {
            let p = table.multiply(&e(i), &e(j)).expect("dim 8");
            basis_norm &= algebra::norm_sq(&p).is_one();
        }
    }
    for (k, dim) in [2, 4, 8].into_iter().enumerate() {
        let ok = norm_ok[k] == n && (dim != 8 || basis_norm);
        c.push(
            &format!("algebra.norm.multiplicative.dim{dim}"),
            REF_CONJ,
            ok,
            format!("|ab|^2 = |a|^2|b|^2 on {}/{n} random pairs{}", norm_ok[k], if dim == 8 { " and all basis pairs" } else { "" }),
        );
    }
    c.push(
        "algebra.conjugate.anti-automorphism",
        REF_CONJ,
        anti == n,
        format!("conj(pq) = conj(q)conj(p) on {anti}/{n} random quaternion pairs"),
    );
    c.push(
        "algebra.conjugate.involution",
        REF_CONJ,
        invol == n,
        format!("conj(conj(a)) = a on {invol}/{n} random octonions"),
    );

    let q = AlgebraElement::from_ints(&[1, 2, 3, 4]).expect("dim 4");
    let qq = algebra::mul(&q, &conjugate(&q)).expect("dim 4");
    let ij = algebra::mul(
        &AlgebraElement::basis(4, 1).expect("basis"),
        &AlgebraElement::basis(4, 2).expect("basis"),
    )
    .expect("dim 4");
    c.push(
        "algebra.quaternion.examples",
        REF_QUAT,
        conjugate(&q) == AlgebraElement::from_ints(&[1, -2, -3, -4]).expect("dim 4")
            && algebra::norm_sq(&q) == int(30)
            && qq == AlgebraElement::from_ints(&[30, 0, 0, 0]).expect("dim 4")
            && ij == AlgebraElement::basis(4, 3).expect("basis"),
        format!("i*j = {ij}, q*conj(q) = {qq} for q = (1,2,3,4)"),
    );

    let quat = MultiplicationTable::standard(4).expect("dim 4");
    let b4 = |i| AlgebraElement::basis(4, i).expect("basis");
    let mut assoc = 0;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                assoc += usize::from(associator_in(&quat, &b4(i), &b4(j), &b4(k)).expect("dim 4").is_zero());
            }
        }
    }
    c.push(
        "algebra.quaternion.associative",
        REF_QUAT,
        assoc == 64,
        format!("associator vanishes on {assoc}/64 basis triples"),
    );
    let w = associator_in(table, &e(1), &e(2), &e(4)).expect("dim 8");
    c.push(
        "algebra.octonion.associator-witness",
        REF_NONASSOC,
        !w.is_zero(),
        format!("(e1 e2) e4 - e1 (e2 e4) = {w}"),
    );
    let complex = MultiplicationTable::standard(2).expect("dim 2");
    c.push(
        "algebra.complex.table",
        "complex numbers as the first two basis elements",
        complex.get(1, 1).map(|x| x.to_string()).as_deref() == Ok("-e0"),
        "e1*e1 = -e0 in dim 2",
    );
}

// ---------------------------------------------------------------------------
// S³ frame, brackets and contact forms

const REF_S3_FRAME: &str = "right-invariant frame N, V, X, Y on S3";
const REF_S3_BRACKET: &str = "S3 brackets: [X,Y]=2V, [V,Y]=2X, [X,V]=2Y";
const REF_CONTACT: &str = "contact forms omega, theta, eta on S3";
const REF_BRGEN: &str = "bracket generating distribution (flag reaches the tangent space)";
const REF_GRAM: &str = "right translation matrix: R^T R = |y|^2 I";

fn translation_gram_identity(dim: usize) -> Result<bool, poly::PolyError> {
    let r = right_translation_symbolic(dim).expect("frame dim");
    let g = r.transpose().matmul(&r)?;
    let n = MultiPoly::norm_sq(dim);
    let want = PolyMatrix::identity(dim, dim).map(|e| e * &n);
    Ok(g == want)
}

fn generating_text(r: &Result<(bool, Option<usize>), fields::FieldError>) -> String {
    match r {
        Ok((true, Some(step))) => format!("bracket generating with step {step}"),
        Ok((true, None)) => "bracket generating".to_string(),
        Ok((false, _)) => "not bracket generating".to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn tangency(fields: &[LinearVectorField]) -> impl FnMut(&SpherePoint) -> Result<bool, fields::FieldError> + '_ {
    move |p| {
        for f in fields {
            if !linalg::dot(&eval_field(f, p.coords())?, p.coords()).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn orthonormal_at(fields: &[LinearVectorField]) -> impl FnMut(&SpherePoint) -> Result<bool, fields::FieldError> + '_ {
    move |p| {
        for (i, a) in fields.iter().enumerate() {
            for (j, b) in fields.iter().enumerate() {
                let want = if i == j { ExactScalar::one() } else { ExactScalar::zero() };
                if gram(a, b, p.coords())? != want {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn describe_multiple(f: &LinearVectorField, named: &[(&str, LinearVectorField)]) -> String {
    for (n, g) in named {
        for k in [-2i64, -1, 1, 2] {
            if *f == g.scale(k) {
                return format!("{k}*{n}");
            }
        }
    }
    f.formula()
}

fn s3_checks(c: &mut Checks, samples: &Samples) {
    let pts = &samples.s3;
    let fr = frame(4);
    let e0 = ints(&[1, 0, 0, 0]);
    let val = |n: &str| eval_field(&s3(n), &e0).expect("dim 4");
    c.push(
        "s3.frame.values",
        REF_S3_FRAME,
        val("V") == ints(&[0, 1, 0, 0]) && val("X") == ints(&[0, 0, 1, 0]) && val("N") == e0,
        "V(1,0,0,0) = (0,1,0,0), X(1,0,0,0) = (0,0,1,0), N(p) = p",
    );
    c.push(
        "s3.frame.skew",
        REF_S3_FRAME,
        fr[1..].iter().all(|f| f.matrix().is_skew()) && fr[0] == fields::radial_field(4),
        "V, X, Y have skew-symmetric matrices and N is the identity",
    );
    c.at_points("s3.frame.tangent", REF_S3_FRAME, pts, "<F(p),p> = 0 for V, X, Y", tangency(&fr[1..]));
    c.at_points("s3.frame.orthonormal", REF_S3_FRAME, pts, "<F_i(p),F_j(p)> = delta_ij", orthonormal_at(&fr));
    c.identity("s3.translation.gram-identity", REF_GRAM, translation_gram_identity(4), "R^T R = |y|^2 I (dim 4)");

    let named: Vec<(&str, LinearVectorField)> = ["N", "V", "X", "Y"].iter().map(|n| (*n, s3(n))).collect();
    for (id, a, b, want, k) in [
        ("s3.bracket.XY=2V", "X", "Y", "V", 2),
        ("s3.bracket.VY=2X", "V", "Y", "X", 2),
        ("s3.bracket.XV=2Y", "X", "V", "Y", 2),
    ] {
        let got = bracket(&s3(a), &s3(b)).expect("dim 4");
        c.push(
            id,
            REF_S3_BRACKET,
            got == s3(want).scale(k),
            format!(
                "[{a},{b}] = {} (matrix B*A - A*B, the orientation that reproduces the S7 commutator table)",
                describe_multiple(&got, &named)
            ),
        );
    }
    let anti = fr.iter().all(|a| {
        fr.iter()
            .all(|b| bracket(a, b).expect("dim") == bracket(b, a).expect("dim").neg())
    });
    c.push("s3.bracket.antisymmetry", REF_S3_BRACKET, anti, "[F,G] = -[G,F] on the frame");

    let [omega, theta, eta] = s3_contact_forms();
    let one = MultiPoly::one(4);
    let zero = MultiPoly::zero(4);
    for (form, kernel, partner) in [(&omega, ["X", "Y"], "V"), (&theta, ["Y", "V"], "X"), (&eta, ["X", "V"], "Y")] {
        let k0 = form.apply_poly(&s3(kernel[0])).expect("dim 4");
        let k1 = form.apply_poly(&s3(kernel[1])).expect("dim 4");
        let r = form.apply_poly(&s3(partner)).expect("dim 4");
        let ok = k0 == zero
            && k1 == zero
            && poly::poly_identity_check(&r, &one, true).unwrap_or(false);
        c.push(
            &format!("s3.contact.{}", form.name()),
            REF_CONTACT,
            ok,
            format!(
                "polynomial identity (point-independent): {n}({}) = {n}({}) = 0 on R^4, {n}({partner}) = {r} = 1 on S3",
                kernel[0],
                kernel[1],
                n = form.name()
            ),
        );
    }

    let dist = |label: &str, names: &[&str]| {
        Distribution::new(label, names.iter().map(|n| s3(n)).collect()).expect("same dim")
    };
    let xy = dist("XY", &["X", "Y"]);
    c.at_points("s3.flag.XY", REF_BRGEN, pts, "flag dimensions [2,3]", |p| {
        flag_dimensions(&xy, p.coords(), 2).map(|d| d == [2, 3])
    });
    for (label, names) in [("XY", ["X", "Y"]), ("YV", ["Y", "V"]), ("XV", ["X", "V"])] {
        let d = dist(label, &names);
        let r = is_bracket_generating(&d, pts, 2);
        c.push(
            &format!("s3.bracket-generating.{label}"),
            REF_BRGEN,
            r == Ok((true, Some(2))),
            format!("span{{{},{}}}: {} over {} points", names[0], names[1], generating_text(&r), pts.len()),
        );
    }
    let single = dist("X", &["X"]);
    let r = is_bracket_generating(&single, pts, 2);
    c.push(
        "s3.negative.single-field",
        REF_BRGEN,
        r == Ok((false, None)),
        format!("span{{X}} alone at depth 2: {} (expected not generating)", generating_text(&r)),
    );
}

// ---------------------------------------------------------------------------
// S³ CR structure

const REF_HOLO: &str = "holomorphic tangent space H_p = T_p cap J(T_p)";
const REF_J: &str = "almost complex structure J_2 on the frame";
const REF_KER: &str = "kernel of omega in complex coordinates";
const REF_HSPHERE: &str = "H_p S^{2n+1} is the orthocomplement of V_{n+1}(p)";
const REF_CRFORM: &str = "omega(F) = <F,N> + i<F,V>";
const REF_ALGLIN: &str = "J-invariant plane has a J-invariant orthocomplement";

fn cr_point_checks(c: &mut Checks, prefix: &str, pts: &[SpherePoint]) {
    let dim = pts[0].dim();
    let j = cr::AlmostComplexStructure::new(dim).expect("even dim");
    c.at_points(&format!("{prefix}.holomorphic.dim"), REF_HOLO, pts, &format!("dim H_p = {}", dim - 2), |p| {
        cr::holomorphic_tangent(p).map(|h| h.dim() == dim - 2)
    });
    c.at_points(&format!("{prefix}.holomorphic.structure"), REF_HOLO, pts, "H_p is J-invariant and inside T_p", |p| {
        let h = cr::holomorphic_tangent(p)?;
        Ok::<_, fields::FieldError>(j.preserves(&h) && cr::tangent_space(p).contains_subspace(&h))
    });
    c.at_points(&format!("{prefix}.orthocomplement"), REF_HSPHERE, pts, "H_p = {u in T_p : <u,V(p)> = 0}", cr::verify_orthocomplement);
    c.at_points(&format!("{prefix}.complement-j-invariant"), REF_ALGLIN, pts, "span{N,V}^perp is J-invariant", cr::complement_is_j_invariant);
    let v = hopf_vertical_field(dim).expect("even dim");
    let n = fields::radial_field(dim);
    let horizontal: Vec<LinearVectorField> = if dim == 4 {
        vec![s3("X"), s3("Y")]
    } else {
        frame(8)[2..].to_vec()
    };
    c.at_points(&format!("{prefix}.omega.values"), REF_CRFORM, pts, "omega(horizontal) = (0,0), omega(V) = (0,1), omega(N) = (1,0)", |p| {
        let zero = (ExactScalar::zero(), ExactScalar::zero());
        for f in &horizontal {
            if cr::cr_form_eval(f, p)? != zero {
                return Ok::<_, fields::FieldError>(false);
            }
        }
        Ok(cr::cr_form_eval(&v, p)? == cr::unit_pair(false) && cr::cr_form_eval(&n, p)? == cr::unit_pair(true))
    });
}

fn j_relation_checks(c: &mut Checks, prefix: &str, tag: &str) {
    for r in cr::j_structure_check() {
        if r.id.starts_with(tag) {
            c.push(&format!("{prefix}.{}", r.id), REF_J, r.holds, format!("{} as a matrix identity", r.id));
        }
    }
}

fn s3_cr_checks(c: &mut Checks, samples: &Samples) {
    let pts = &samples.s3;
    let h = cr::holomorphic_tangent(&SpherePoint::basis(4, 0, false)).expect("dim 4");
    c.push(
        "s3cr.holomorphic.example",
        REF_HOLO,
        h.basis() == [ints(&[0, 0, 1, 0]), ints(&[0, 0, 0, 1])],
        "H_(1,0,0,0) = span{(0,0,1,0),(0,0,0,1)}",
    );
    cr_point_checks(c, "s3cr", pts);
    c.at_points("s3cr.horizontal=XY", REF_HOLO, pts, "H_p = span{X(p),Y(p)}", cr::s3_horizontal_matches);
    j_relation_checks(c, "s3cr", "J2.");
    let (holo, anti) = cr::complex_kernel_identities();
    c.push("s3cr.kernel.holomorphic", REF_KER, holo, "wbar d_z - zbar d_w = (-X + iY)/2 in real coordinates");
    c.push("s3cr.kernel.antiholomorphic", REF_KER, anti, "-w d_zbar + z d_wbar = (X + iY)/2 in real coordinates");
}

// ---------------------------------------------------------------------------
// S³ → S²

const REF_HOPF3: &str = "Hopf map h(z,w) = (|z|^2-|w|^2, 2 z wbar)";
const REF_KER3: &str = "ker dh = span{V}";
const REF_MINORS: &str = "sum of squared 3x3 minors of the Hopf Jacobian";
const REF_FIBER: &str = "fibre circles gamma_p(t) = e^{2 pi i t} p with velocity 2 pi V";
const REF_EHR: &str = "Ehresmann connection transverse to the vertical space";

fn s3_hopf_checks(c: &mut Checks, samples: &Samples) {
    let pts = &samples.s3;
    let ex1 = fib::hopf_s3_map(&SpherePoint::basis(4, 0, false)).expect("dim 4");
    let p2 = SpherePoint::new(vec![ratio(3, 5), int(0), ratio(4, 5), int(0)]).expect("unit");
    let ex2 = fib::hopf_s3_map(&p2).expect("dim 4");
    c.push(
        "s3hopf.map.examples",
        REF_HOPF3,
        ex1 == ints(&[1, 0, 0]) && ex2 == vec![ratio(-7, 25), ratio(24, 25), int(0)],
        format!("h(1,0,0,0) = ({}), h(3/5,0,4/5,0) = ({})", point_strings(&ex1).join(","), point_strings(&ex2).join(",")),
    );
    c.at_points("s3hopf.map.on-sphere", REF_HOPF3, pts, "|h(p)|^2 = 1", |p| {
        fib::hopf_s3_map(p).map(|h| linalg::dot(&h, &h).is_one())
    });
    let rotations = [(ratio(3, 5), ratio(4, 5)), (ratio(5, 13), ratio(12, 13)), (ratio(-8, 17), ratio(15, 17))];
    c.at_points("s3hopf.map.equivariance", REF_HOPF3, pts, "h((c+is)p) = h(p) for three rational rotations", |p| {
        let h = fib::hopf_s3_map(p)?;
        for (co, si) in &rotations {
            let r = fib::rotate_fiber(p, co, si)?;
            if fib::hopf_s3_map(&r)? != h {
                return Ok::<_, fib::FibrationError>(false);
            }
        }
        Ok(true)
    });
    c.at_points("s3hopf.jacobian.rank", REF_KER3, pts, "rank dh_p = 3", |p| fib::hopf_s3_jacobian(p).map(|_| true));
    c.at_points("s3hopf.kernel=V", REF_KER3, pts, "ker dh_p = span{V(p)}", fib::hopf_s3_kernel_is_vertical);
    let printed = poly::jacobian(&fib::hopf_s3_polys())
        .map(|j| j == fib::hopf_s3_printed_jacobian().map(|e| e.scale_int(2)));
    c.identity("s3hopf.jacobian.printed", REF_HOPF3, printed, "printed matrix times 2 equals the Jacobian of h");
    match fib::s3_minor_identity() {
        Ok((unscaled, scaled)) => {
            c.push(
                "s3hopf.minors.unscaled",
                REF_MINORS,
                unscaled,
                "polynomial identity (point-independent): sum det(D_i)^2 = |x|^6 for the matrix without its factor 2",
            );
            c.push(
                "s3hopf.minors.scaled",
                REF_MINORS,
                scaled,
                "polynomial identity (point-independent): with the factor 2 the sum is 64 |x|^6",
            );
        }
        Err(e) => c.push("s3hopf.minors.unscaled", REF_MINORS, false, e.to_string()),
    }
    let e0 = SpherePoint::basis(4, 0, false);
    let fc = fib::fiber_curve_check(&e0, 16).expect("dim 4");
    c.push(
        "s3hopf.fiber.identity",
        REF_FIBER,
        fc.passes(),
        format!(
            "p = (1,0,0,0), 16 samples: constancy {:.1e}, velocity {:.1e}, periodicity {:.1e} (floating point)",
            fc.constancy, fc.velocity, fc.periodicity
        ),
    );
    let mut fiber_pts: Vec<SpherePoint> = samples.s3_random(10).to_vec();
    fiber_pts.push(e0);
    c.at_points("s3hopf.fiber.samples", REF_FIBER, &fiber_pts, "fibre constancy <= 1e-12 and velocity error <= 1e-9 with 16 samples (floating point)", |p| {
        fib::fiber_curve_check(p, 16).map(|f| f.passes())
    });
    c.at_points("s3hopf.ehresmann", REF_EHR, pts, "span{X,Y} + span{V} = T_p S3", fib::s3_ehresmann);
    let quad = fib::hopf_s3_quadratic();
    c.at_points("s3hopf.jacobian.finite-difference", REF_HOPF3, samples.s3_random(10), "exact Jacobian within 1e-6 of centered differences (floating point)", |p| {
        Ok::<_, fib::FibrationError>(quad.finite_difference_error(p.coords(), 1e-6) < 1e-6)
    });
}

// ---------------------------------------------------------------------------
// S⁷ frame

const REF_S7_FRAME: &str = "right-invariant frame Y_0..Y_7 on S7";
const REF_COMM: &str = "commutator table Y_ij = [Y_i,Y_j]/2";
const REF_NOT_FRAME: &str = "no commutator [Y_i,Y_j] coincides with a Y_k";

fn s7_frame_checks(c: &mut Checks, samples: &Samples) {
    let pts = &samples.s7;
    let fr = frame(8);
    c.identity("frame.translation.gram-identity", REF_GRAM, translation_gram_identity(8), "R^T R = |y|^2 I (dim 8)");
    c.at_points("frame.orthonormal", REF_S7_FRAME, pts, "<Y_i(p),Y_j(p)> = delta_ij", orthonormal_at(&fr));
    c.at_points("frame.tangent", REF_S7_FRAME, pts, "<Y_k(p),p> = 0 for k = 1..7", tangency(&fr[1..]));
    let e0 = SpherePoint::basis(8, 0, false);
    let y1 = eval_field(&fr[1], e0.coords()).expect("dim 8");
    let y45 = eval_field(&printed_commutator(4, 5).expect("pair"), e0.coords()).expect("dim 8");
    c.push(
        "frame.values",
        REF_S7_FRAME,
        y1 == SpherePoint::basis(8, 1, false).coords() && y45 == SpherePoint::basis(8, 1, true).coords(),
        "Y1(e0) = e1, Y45(e0) = -e1",
    );
    c.push(
        "frame.skew",
        REF_S7_FRAME,
        fr[1..].iter().all(|f| f.matrix().is_skew()) && fr[0] == fields::radial_field(8),
        "Y_1..Y_7 have skew-symmetric matrices and Y_0 is the identity",
    );
    match commutator_table(&fr) {
        Ok(table) => {
            let mut distinct = true;
            for (&(i, j), f) in table.iter() {
                let printed = printed_commutator(i, j).expect("pair");
                c.push(
                    &format!("frame.commutator.Y{i}{j}"),
                    REF_COMM,
                    *f == printed,
                    format!("computed {}", f.formula()),
                );
                distinct &= fr[1..].iter().all(|y| f != y && *f != y.neg());
            }
            c.push("frame.commutator.not-in-frame", REF_NOT_FRAME, distinct, "no Y_ij equals +-Y_k");
        }
        Err(e) => c.push("frame.commutator.Y12", REF_COMM, false, e.to_string()),
    }
    let mut anti = true;
    let mut jacobi = true;
    for a in &fr {
        for b in &fr {
            anti &= bracket(a, b).expect("dim") == bracket(b, a).expect("dim").neg();
            for cc in &fr {
                let t1 = bracket(a, &bracket(b, cc).expect("dim")).expect("dim");
                let t2 = bracket(b, &bracket(cc, a).expect("dim")).expect("dim");
                let t3 = bracket(cc, &bracket(a, b).expect("dim")).expect("dim");
                jacobi &= t1.checked_add(&t2).and_then(|s| s.checked_add(&t3)).expect("dim").is_zero();
            }
        }
    }
    c.push("frame.bracket.antisymmetry", REF_COMM, anti, "[F,G] = -[G,F] for all frame pairs");
    c.push("frame.bracket.jacobi", REF_COMM, jacobi, "Jacobi identity for all 512 frame triples");
}

// ---------------------------------------------------------------------------
// S⁷ CR structure, ℂP³ chart and the rank-6 distribution

const REF_CHART: &str = "chart map phi_0 o h : S7 -> C^3 and its differential";
const REF_CHART_DET: &str = "det(d(phi_0 o h) d(phi_0 o h)^T) = (x0^2+x1^2)^-8";
const REF_RANK6: &str = "H = span{Y_2..Y_7} is bracket generating of rank 6 and step 2";
const REF_VFIELDS: &str = "v41+v42 = Y4 and v51+v52 = Y5";
const REF_CERT: &str = "[v41,v51]+[v42,v52] = -2Y1";
const REF_VN: &str = "V_{n+1} generalises V and Y_1";

fn s7_cr_checks(c: &mut Checks, samples: &Samples) {
    let pts = &samples.s7;
    cr_point_checks(c, "s7cr", pts);
    j_relation_checks(c, "s7cr", "J4.");
    c.push(
        "s7cr.vertical-field",
        REF_VN,
        hopf_vertical_field(8).ok() == s7_field(1).ok() && hopf_vertical_field(4).ok() == s3_field("V"),
        "V_4 = Y1 on S7 and V_2 = V on S3",
    );

    let chart_pts: Vec<SpherePoint> = pts
        .iter()
        .filter(|p| !(p.coords()[0].is_zero() && p.coords()[1].is_zero()))
        .cloned()
        .collect();
    let e0 = SpherePoint::basis(8, 0, false);
    let mut c35 = vec![int(0); 8];
    c35[0] = ratio(3, 5);
    c35[1] = ratio(4, 5);
    let ex_ok = fib::chart_map(&e0).ok() == Some(vec![int(0); 6])
        && fib::chart_map(&SpherePoint::new(c35).expect("unit")).ok() == Some(vec![int(0); 6])
        && matches!(fib::chart_map(&SpherePoint::basis(8, 2, false)), Err(fib::FibrationError::OutsideChart(_)));
    c.push("chart.map.examples", REF_CHART, ex_ok, "phi(e0) = phi(3/5,4/5,0..) = 0; e2 is outside the chart");
    c.at_points("chart.jacobian.rank", REF_CHART, &chart_pts, "rank d(phi o h) = 6", |p| {
        fib::chart_jacobian(p).map(|j| j.rank == 6)
    });
    c.at_points("chart.kernel=NV", REF_CHART, &chart_pts, "kernel = span{N(p), V_4(p)}", |p| {
        fib::chart_jacobian(p).map(|j| j.kernel_is_nv)
    });
    c.at_points("chart.det.points", REF_CHART_DET, &chart_pts, "det(J J^T) (x0^2+x1^2)^8 = 1", |p| {
        fib::chart_jacobian(p).map(|j| j.scaled_gram_det.is_one())
    });
    match fib::chart_determinant_identity() {
        Ok(proof) => {
            c.push(
                "chart.jacobian.printed",
                REF_CHART,
                proof.printed_matches_derivative,
                "polynomial identity (point-independent): printed matrix times (x0^2+x1^2)^2 equals the cleared derivative",
            );
            c.push(
                "chart.det.identity",
                REF_CHART_DET,
                proof.cleared_identity && proof.sphere_reduction,
                "polynomial identity (point-independent): det(C C^T) = |x|^4 (x0^2+x1^2)^16 for C = (x0^2+x1^2)^2 J, and |x|^4 = 1 on S7",
            );
        }
        Err(e) => c.push("chart.det.identity", REF_CHART_DET, false, e.to_string()),
    }

    let fr = frame(8);
    let h = Distribution::new("Y2..Y7", fr[2..].to_vec()).expect("dim 8");
    c.at_points("rank6.flag", REF_RANK6, pts, "flag dimensions [6,7]", |p| {
        flag_dimensions(&h, p.coords(), 2).map(|d| d == [6, 7])
    });
    let r = is_bracket_generating(&h, pts, 2);
    c.push(
        "rank6.bracket-generating",
        REF_RANK6,
        r == Ok((true, Some(2))),
        format!("{} over {} points", generating_text(&r), pts.len()),
    );
    let [v41, v42, v51, v52] = decomposition_fields();
    c.push(
        "rank6.decomposition",
        REF_VFIELDS,
        v41.checked_add(&v42).ok().as_ref() == Some(&fr[4]) && v51.checked_add(&v52).ok().as_ref() == Some(&fr[5]),
        "v41+v42 = Y4 and v51+v52 = Y5 with v52 ending in +y2 d7",
    );
    c.push(
        "rank6.decomposition.printed-v52",
        REF_VFIELDS,
        v51.checked_add(&printed_v52()).ok().as_ref() != Some(&fr[5]),
        "with the printed last term +y0 d7, v51+v52 differs from Y5; the corrected term is used",
    );
    let vs = [&v41, &v42, &v51, &v52];
    c.at_points("rank6.v-orthogonal", REF_VFIELDS, pts, "<v(p),Y0(p)> = <v(p),Y1(p)> = 0 for all four v-fields", |p| {
        for v in vs {
            for y in &fr[..2] {
                if !gram(v, y, p.coords())?.is_zero() {
                    return Ok::<_, fields::FieldError>(false);
                }
            }
        }
        Ok(true)
    });
    let cert = bracket(&v41, &v51)
        .and_then(|a| a.checked_add(&bracket(&v42, &v52)?))
        .expect("dim 8");
    let y45 = printed_commutator(4, 5).expect("pair");
    let named = [("Y1", fr[1].clone()), ("Y45", y45)];
    c.push(
        "rank6.certificate",
        REF_CERT,
        cert == fr[1].scale(-2),
        format!(
            "[v41,v51]+[v42,v52] = {} ([v41,v51] = {}, [v42,v52] = {})",
            describe_multiple(&cert, &named),
            describe_multiple(&bracket(&v41, &v51).expect("dim"), &named),
            describe_multiple(&bracket(&v42, &v52).expect("dim"), &named),
        ),
    );
}

// ---------------------------------------------------------------------------
// S⁷ → S⁴

const REF_QHOPF: &str = "quaternionic Hopf map h : S7 -> S4";
const REF_DH: &str = "[dh]Y45 = [dh]Y46 = [dh]Y56 = 0";
const REF_COEF: &str = "S4 coordinates a_mk";
const REF_HOPFCOORD: &str = "a00^2+a11^2+a22^2+a33^2+a44^2 = 1";
const REF_COS: &str = "a00^2 + sum_k a_mk^2 = 1";
const REF_INNER: &str = "inner products in H_m cup V";
const REF_ITEM2: &str = "commutator relations of the collections H_m";
const REF_THEOREM: &str = "Ehresmann connection of the quaternionic Hopf map";

fn quat_checks(c: &mut Checks, samples: &Samples) {
    let pts = &samples.s7;
    let e = |i| SpherePoint::basis(8, i, false);
    let ok = fib::quat_hopf_map(&e(0)).ok() == Some(ints(&[1, 0, 0, 0, 0]))
        && fib::quat_hopf_map(&e(7)).ok() == Some(ints(&[-1, 0, 0, 0, 0]));
    c.push("quat.map.examples", REF_QHOPF, ok, "h(e0) = (1,0,0,0,0), h(e7) = (-1,0,0,0,0)");
    c.at_points("quat.map.on-sphere", REF_QHOPF, pts, "|h(p)|^2 = 1", |p| {
        fib::quat_hopf_map(p).map(|h| linalg::dot(&h, &h).is_one())
    });
    match fib::quat_map_identities() {
        Ok((jac, norm)) => {
            c.push("quat.jacobian.printed", REF_QHOPF, jac, "polynomial identity (point-independent): printed dh equals the Jacobian of h");
            c.push("quat.map.norm-identity", REF_QHOPF, norm, "polynomial identity (point-independent): |h(y)|^2 = |y|^4 on R^8");
        }
        Err(e) => c.push("quat.jacobian.printed", REF_QHOPF, false, e.to_string()),
    }
    match fib::quat_vertical_identities() {
        Ok(list) => {
            for v in list {
                c.push(
                    &format!("quat.vertical.{}", v.field),
                    REF_DH,
                    v.on_r8 || v.on_sphere,
                    format!(
                        "polynomial identity (point-independent): dh {} = 0 {}",
                        v.field,
                        if v.on_r8 { "on all of R^8" } else if v.on_sphere { "modulo the sphere only" } else { "fails" }
                    ),
                );
            }
        }
        Err(e) => c.push("quat.vertical.Y45", REF_DH, false, e.to_string()),
    }
    c.at_points("quat.vertical.points", REF_DH, pts, "dh_p Y45(p) = dh_p Y46(p) = dh_p Y56(p) = 0", |p| {
        fib::quat_hopf_jacobian(p).map(|j| j.vertical == [true; 3])
    });
    c.at_points("quat.jacobian.restricted-rank", REF_QHOPF, pts, "rank of dh_p on T_p S7 = 4", |p| {
        fib::quat_hopf_jacobian(p).map(|j| j.restricted_rank == 4)
    });
    c.at_points("quat.jacobian.euler", REF_QHOPF, pts, "dh_p p = 2 h(p)", |p| fib::quat_hopf_jacobian(p).map(|j| j.euler));
    let quad = fib::quat_hopf_quadratic();
    c.at_points("quat.jacobian.finite-difference", REF_QHOPF, &pts[..samples.count.min(10)], "exact Jacobian within 1e-6 of centered differences (floating point)", |p| {
        Ok::<_, fib::FibrationError>(quad.finite_difference_error(p.coords(), 1e-6) < 1e-6)
    });

    match fib::coefficient_identities_check() {
        Ok(list) => {
            for (id, ok) in list {
                let r = if id == "hopfcoord" { REF_HOPFCOORD } else { REF_COS };
                c.push(&format!("quat.coefficients.{id}"), r, ok, "polynomial identity (point-independent) modulo the sphere relation");
            }
        }
        Err(e) => c.push("quat.coefficients.hopfcoord", REF_HOPFCOORD, false, e.to_string()),
    }
    let c0 = fib::hopf_coefficients(&e(0)).expect("dim 8");
    let cw = fib::hopf_coefficients(&s1_witness()).expect("dim 8");
    c.push(
        "quat.coefficients.examples",
        REF_COEF,
        c0.a00.is_one()
            && c0.diagonal()[1..].iter().all(|x| x.is_zero())
            && c0.amk.iter().flatten().all(Zero::is_zero)
            && cw.a00.is_zero()
            && cw.a11.is_one(),
        "a00(e0) = 1 with all others 0; a00 = 0 and a11 = 1 at (1/2,1/2,0,0,1/2,1/2,0,0)",
    );
    let y45 = fib::frame_pair_field(4, 5).expect("pair");
    let y36 = fib::frame_pair_field(3, 6).expect("pair");
    c.at_points("quat.coefficients.gram", REF_COEF, pts, "<Y45(p),Y36(p)> = a11(p)", |p| {
        Ok::<_, fib::FibrationError>(gram(&y45, &y36, p.coords())? == fib::hopf_coefficients(p)?.a11)
    });

    for m in 0..5 {
        match fib::inner_product_identities(m) {
            Ok(r) => {
                for (id, ok) in &r.claims {
                    c.push(&format!("quat.inner.H{m}.{id}"), REF_INNER, *ok, "polynomial identity (point-independent)");
                }
                c.push(
                    &format!("quat.inner.H{m}.others-vanish"),
                    REF_INNER,
                    r.nonvanishing_others.is_empty(),
                    if r.nonvanishing_others.is_empty() {
                        "polynomial identity (point-independent): every other pair in H_m cup V is orthogonal".to_string()
                    } else {
                        format!("non-vanishing pairs: {}", r.nonvanishing_others.join(" "))
                    },
                );
                c.push(
                    &format!("quat.inner.H{m}.unit"),
                    REF_INNER,
                    r.unit_norms,
                    "polynomial identity (point-independent): <F,F> = |y|^2 for every F in H_m cup V",
                );
            }
            Err(e) => c.push(&format!("quat.inner.H{m}"), REF_INNER, false, e.to_string()),
        }
    }

    let pf = |i, j| fib::frame_pair_field(i, j).expect("pair");
    type Pair = (usize, usize);
    let mut rels: Vec<(Pair, Pair, Pair)> = Vec::new();
    for j in 0..4 {
        rels.push(((j, 4), (j, 5), (4, 5)));
        rels.push(((j, 4), (j, 6), (4, 6)));
        rels.push(((j, 5), (j, 6), (5, 6)));
    }
    rels.push(((4, 7), (5, 7), (4, 5)));
    rels.push(((4, 7), (6, 7), (4, 6)));
    rels.push(((5, 7), (6, 7), (5, 6)));
    for (a, b, t) in rels {
        let got = bracket(&pf(a.0, a.1), &pf(b.0, b.1)).expect("dim 8");
        let want = pf(t.0, t.1).scale(2);
        let name = |p: (usize, usize)| if p.0 == 0 { format!("Y{}", p.1) } else { format!("Y{}{}", p.0, p.1) };
        c.push(
            &format!("quat.commutator.[{},{}]=2{}", name(a), name(b), name(t)),
            REF_ITEM2,
            got == want,
            "exact matrix identity",
        );
    }

    let generic: Vec<SpherePoint> = pts.iter().filter(|p| fib::region(p) == RegionTag::Generic).cloned().collect();
    let mut candidates: Vec<Distribution> = (1..5).map(fib::collection).collect();
    candidates.extend((0..4).map(fib::collection_with_w));
    for d in &candidates {
        c.at_points(&format!("quat.flag.{}", d.label()), REF_ITEM2, &generic, "flag dimensions [4,7] at generic points", |p| {
            flag_dimensions(d, p.coords(), 2).map(|f| f == [4, 7])
        });
    }

    let not_s1: Vec<SpherePoint> = pts.iter().filter(|p| fib::region(p) != RegionTag::S1).cloned().collect();
    let not_s2: Vec<SpherePoint> = pts.iter().filter(|p| fib::region(p) != RegionTag::S2).cloned().collect();
    let hm: Vec<Distribution> = (1..5).map(fib::collection).collect();
    let h0: Vec<Distribution> = (0..4).map(fib::collection_with_w).collect();
    let count_transverse = |ds: &[Distribution], p: &SpherePoint| -> Result<usize, fib::FibrationError> {
        let mut n = 0;
        for d in ds {
            n += usize::from(fib::transversality_check(d, p)?);
        }
        Ok(n)
    };
    c.at_points("quat.theorem.clause-i.some-m", REF_THEOREM, &not_s1, "off S1, some H_m (m = 1..4) is transverse to V", |p| {
        count_transverse(&hm, p).map(|n| n > 0)
    });
    c.at_points("quat.theorem.clause-i.every-m", REF_THEOREM, &not_s1, "off S1, every H_m (m = 1..4) is transverse to V", |p| {
        count_transverse(&hm, p).map(|n| n == 4)
    });
    c.at_points("quat.theorem.clause-ii.every-j", REF_THEOREM, &not_s2, "off S2, H0 with W = Y_j7 is transverse to V for every j = 0..3", |p| {
        count_transverse(&h0, p).map(|n| n == 4)
    });
    let w = s1_witness();
    let wm = count_transverse(&hm, &w);
    let w0: Vec<bool> = h0.iter().map(|d| fib::transversality_check(d, &w).unwrap_or(false)).collect();
    c.push_with(
        "quat.theorem.s1-witness.some-Hm-fails",
        REF_THEOREM,
        matches!(wm, Ok(n) if n < 4),
        format!("{} of H_1..H_4 transverse at the S1 witness", wm.as_ref().map_or(0, |n| *n)),
        Some(point_strings(w.coords())),
    );
    c.push_with(
        "quat.theorem.s1-witness.some-H0-passes",
        REF_THEOREM,
        w0.iter().any(|&b| b),
        format!("H0 + Y_j7 transverse for j = 0..3: {w0:?}"),
        Some(point_strings(w.coords())),
    );
    let basis: Vec<SpherePoint> = pts.iter().filter(|p| fib::region(p) == RegionTag::S2).cloned().collect();
    c.at_points("quat.theorem.basis.H0-fails", REF_THEOREM, &basis, "on S2 no H0 + Y_j7 is transverse", |p| {
        count_transverse(&h0, p).map(|n| n == 0)
    });
    c.at_points("quat.theorem.basis.H1-passes", REF_THEOREM, &basis, "on S2 H1 is transverse", |p| {
        fib::transversality_check(&hm[0], p)
    });
    c.at_points("quat.ehresmann.select", REF_THEOREM, pts, "ehresmann_select finds a transverse distribution", |p| {
        fib::ehresmann_select(p).map(|_| true)
    });
    c.at_points("quat.ehresmann.flag", REF_THEOREM, pts, "selected distribution has flag [4,7]", |p| {
        let choice = fib::ehresmann_select(p)?;
        Ok::<_, fib::FibrationError>(flag_dimensions(&choice.distribution, p.coords(), 2)? == [4, 7])
    });
    let tags_ok = fib::region(&w) == RegionTag::S1 && basis.len() == 16;
    c.push("quat.region.tags", REF_THEOREM, tags_ok, format!("S1 witness tagged S1; {} signed basis points tagged S2", basis.len()));
}

// ---------------------------------------------------------------------------

/// Runs the configured suite with the standard octonion table.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport, ReportError> {
    run_suite_with_table(config, &MultiplicationTable::standard(8).expect("dim 8"))
}

/// Runs the configured suite, using `table` as the octonion multiplication
/// under test.
pub fn run_suite_with_table(
    config: &SuiteConfig,
    table: &MultiplicationTable,
) -> Result<VerificationReport, ReportError> {
    if config.samples == 0 {
        return Err(ReportError::NoSamples);
    }
    let samples = Samples::new(config.samples, config.seed);
    let mut c = Checks::default();
    let run = |s: Suite| config.suite == s || config.suite == Suite::All;
    if run(Suite::Algebra) {
        algebra_checks(&mut c, table, &samples);
    }
    if run(Suite::S3) {
        s3_checks(&mut c, &samples);
    }
    if run(Suite::S3Cr) {
        s3_cr_checks(&mut c, &samples);
    }
    if run(Suite::S3Hopf) {
        s3_hopf_checks(&mut c, &samples);
    }
    if run(Suite::S7Frame) {
        s7_frame_checks(&mut c, &samples);
    }
    if run(Suite::S7Cr) {
        s7_cr_checks(&mut c, &samples);
    }
    if run(Suite::S7Quat) {
        quat_checks(&mut c, &samples);
    }
    Ok(VerificationReport::assemble(config, c.out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(suite: Suite) -> VerificationReport {
        let mut cfg = SuiteConfig::new(suite);
        cfg.samples = 5;
        run_suite(&cfg).unwrap()
    }

    #[test]
    fn parse_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("s9".parse::<Suite>().is_err());
        assert_eq!("text".parse::<Format>().unwrap(), Format::Text);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&ratio(-3, 6)), "-1/2");
        assert_eq!(rational_string(&int(1)), "1/1");
    }

    #[test]
    fn algebra_suite_passes_and_mutation_fails() {
        let r = small(Suite::Algebra);
        assert!(r.all_passed(), "{}", r.to_text());
        assert_eq!(r.checks.iter().filter(|c| c.id.starts_with("algebra.table.")).count(), 64);
        let mut cfg = SuiteConfig::new(Suite::Algebra);
        cfg.samples = 5;
        let bad = MultiplicationTable::standard(8).unwrap().with_flipped_sign(4, 5).unwrap();
        let r = run_suite_with_table(&cfg, &bad).unwrap();
        assert!(!r.all_passed());
        assert_eq!(r.check("algebra.table.e4*e5").unwrap().status, Status::Fail);
    }

    #[test]
    fn summary_partitions_checks() {
        let r = small(Suite::S3);
        assert_eq!(r.summary.total, r.checks.len());
        assert_eq!(r.summary.passed + r.summary.failed, r.summary.total);
        assert!(r.checks.windows(2).all(|w| w[0].id < w[1].id));
    }

    #[test]
    fn zero_samples_rejected() {
        let mut cfg = SuiteConfig::new(Suite::S3);
        cfg.samples = 0;
        assert_eq!(run_suite(&cfg), Err(ReportError::NoSamples));
    }
}
