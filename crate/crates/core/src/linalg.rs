//! Exact linear algebra over ℚ: rank, nullspace and subspace arithmetic.
//!
//! Rank is computed by fraction-free (Bareiss) elimination on integer rows
//! obtained by clearing denominators. Subspaces carry their basis in reduced
//! row echelon form, which is canonical, so equality of subspaces is equality
//! of bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::ExactScalar;

pub type Vector = Vec<ExactScalar>;

pub fn dot(a: &[ExactScalar], b: &[ExactScalar]) -> ExactScalar {
    assert_eq!(a.len(), b.len(), "dot product of mismatched lengths");
    a.iter()
        .zip(b)
        .fold(ExactScalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(v: &[ExactScalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Row scaled by the lcm of its denominators, as integers.
fn clear_denominators(row: &[ExactScalar]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Rank of the matrix whose rows are `rows`, by Bareiss elimination.
pub fn rank(rows: &[Vector]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| !is_zero_vector(r))
        .map(|r| clear_denominators(r))
        .collect();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..nrows {
            let factor = m[i][c].clone();
            for j in c..ncols {
                // Exact by Sylvester's identity.
                let v = (&pivot * &m[i][j] - &factor * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            // Columns left of the pivot are already zero in these rows.
            for j in 0..c {
                m[i][j] = BigInt::zero();
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn det(rows: &[Vector]) -> ExactScalar {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut acc = ExactScalar::one();
    for c in 0..n {
        assert_eq!(m[c].len(), n, "determinant of a non-square matrix");
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return ExactScalar::zero();
        };
        if p != c {
            m.swap(c, p);
            acc = -acc;
        }
        let pivot = m[c][c].clone();
        acc *= &pivot;
        for i in (c + 1)..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for j in c..n {
                let d = &f * &m[c][j];
                m[i][j] -= d;
            }
        }
    }
    acc
}

/// Product of two rational matrices given by rows.
pub fn mat_mul(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| {
                    r.iter()
                        .zip(b)
                        .fold(ExactScalar::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vector]) -> Vec<Vector> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Reduced row echelon form and pivot columns.
pub fn rref(rows: &[Vector], ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of `{x : A·x = 0}` where `A` has the given rows and `ncols` columns.
pub fn nullspace(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let (reduced, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ExactScalar::zero(); ncols];
            v[f] = ExactScalar::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Multiplies a rational matrix (given by rows) with a vector.
pub fn mat_vec(rows: &[Vector], v: &[ExactScalar]) -> Vector {
    rows.iter().map(|r| dot(r, v)).collect()
}

/// Linear subspace of ℚⁿ with a canonical (RREF) basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dim");
        }
        let (basis, _) = rref(vectors, ambient);
        Self { ambient, basis }
    }

    pub fn whole(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![ExactScalar::zero(); ambient];
                v[i] = ExactScalar::one();
                v
            })
            .collect();
        Self { ambient, basis }
    }

    /// `{u : ⟨u, v⟩ = 0 for every v in vectors}`.
    pub fn orthogonal_complement_of(ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.iter().all(|v| is_zero_vector(v)) {
            return Self::whole(ambient);
        }
        Self::span(ambient, &nullspace(vectors, ambient))
    }

    pub fn orthogonal_complement(&self) -> Self {
        Self::orthogonal_complement_of(self.ambient, &self.basis)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[ExactScalar]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank(&rows) == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        rank(&rows) == self.dim()
    }

    /// Decides equality by mutual containment (rank of stacked bases).
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self.contains_subspace(other)
    }

    /// Intersection, found as the nullspace of `[B₁ | −B₂]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let (k1, k2) = (self.dim(), other.dim());
        if k1 == 0 || k2 == 0 {
            return Subspace::span(self.ambient, &[]);
        }
        // Unknowns (a, b) with Σ a_i u_i − Σ b_j w_j = 0; one equation per coordinate.
        let eqs: Vec<Vector> = (0..self.ambient)
            .map(|c| {
                self.basis
                    .iter()
                    .map(|u| u[c].clone())
                    .chain(other.basis.iter().map(|w| -w[c].clone()))
                    .collect()
            })
            .collect();
        let combos = nullspace(&eqs, k1 + k2);
        let vectors: Vec<Vector> = combos
            .iter()
            .map(|coef| {
                let mut v = vec![ExactScalar::zero(); self.ambient];
                for (a, u) in coef[..k1].iter().zip(&self.basis) {
                    for (x, ui) in v.iter_mut().zip(u) {
                        *x += a * ui;
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// Image under a linear map given by its rows.
    pub fn image(&self, rows: &[Vector]) -> Subspace {
        let mapped: Vec<Vector> = self.basis.iter().map(|b| mat_vec(rows, b)).collect();
        Subspace::span(rows.len(), &mapped)
    }
}

/// Rational matrix of an integer one.
pub fn to_rational(rows: &[Vec<i64>]) -> Vec<Vector> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    /// Rank by ordinary rational Gaussian elimination, independent of Bareiss.
    fn naive_rank(rows: &[Vector]) -> usize {
        rref(rows, rows.first().map_or(0, Vec::len)).1.len()
    }

    #[test]
    fn rank_basic() {
        assert_eq!(rank(&[v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(rank(&[v(&[1, 2]), v(&[2, 5])]), 2);
        assert_eq!(rank(&[v(&[0, 0, 0])]), 0);
        assert_eq!(rank(&[]), 0);
        let r = vec![vec![ratio(1, 2), ratio(1, 3)], vec![int(3), int(2)]];
        assert_eq!(rank(&r), 1);
    }

    #[test]
    fn nullspace_of_hopf_row_space() {
        // Rows of the unscaled S³ Hopf Jacobian at (1,0,0,0).
        let rows = vec![v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, -1])];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns, vec![v(&[0, 1, 0, 0])]);
    }

    #[test]
    fn complement_and_intersection() {
        let t = Subspace::orthogonal_complement_of(4, &[v(&[1, 0, 0, 0])]);
        assert_eq!(t.dim(), 3);
        let u = Subspace::orthogonal_complement_of(4, &[v(&[0, 1, 0, 0])]);
        let both = t.intersect(&u);
        assert_eq!(both.basis(), &[v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])]);
        assert!(both.same_as(&Subspace::span(4, &[v(&[0, 0, 1, 1]), v(&[0, 0, 1, -1])])));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&[v(&[1, 2]), v(&[3, 4])]), int(-2));
        assert_eq!(det(&[v(&[0, 1]), v(&[1, 0])]), int(-1));
        assert_eq!(det(&[v(&[1, 2]), v(&[2, 4])]), int(0));
        let a = vec![v(&[1, 2, 0]), v(&[0, 1, 1])];
        assert_eq!(mat_mul(&a, &transpose(&a)), vec![v(&[5, 2]), v(&[2, 2])]);
    }

    proptest::proptest! {
        #[test]
        fn bareiss_matches_rref(entries in proptest::collection::vec(-3i64..=3, 12)) {
            let rows: Vec<Vector> = entries.chunks(4).map(v).collect();
            proptest::prop_assert_eq!(rank(&rows), naive_rank(&rows));
        }

        #[test]
        fn det_is_multiplicative(a in proptest::collection::vec(-4i64..=4, 9),
                                 b in proptest::collection::vec(-4i64..=4, 9)) {
            let ma: Vec<Vector> = a.chunks(3).map(v).collect();
            let mb: Vec<Vector> = b.chunks(3).map(v).collect();
            proptest::prop_assert_eq!(det(&mat_mul(&ma, &mb)), det(&ma) * det(&mb));
            proptest::prop_assert_eq!(det(&ma) == int(0), rank(&ma) < 3);
        }
    }
}
