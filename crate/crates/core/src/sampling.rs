//! Deterministic exact rational points on S³ and S⁷.
//!
//! Points come from inverse stereographic projection
//! `p = (2u, ‖u‖² − 1) / (1 + ‖u‖²)` of rational vectors `u` whose
//! components `n/d` have `|n| ≤ 100`, `1 ≤ d ≤ 100`. The generator is
//! SplitMix64 with its published constants, so sample sets are identical on
//! every platform.

use num_traits::One;

use crate::algebra::{ratio, ExactScalar};
use crate::fields::{FieldError, SpherePoint};
use crate::linalg;

/// SplitMix64 (Steele, Lea, Flood 2014).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `lo..=hi` by rejection (no modulo bias).
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo) as u64 + 1;
        let zone = u64::MAX - (u64::MAX % span);
        loop {
            let x = self.next_u64();
            if x < zone {
                return lo + (x % span) as i64;
            }
        }
    }
}

/// Inverse stereographic projection from the pole `(0, …, 0, 1)`.
pub fn inverse_stereographic(u: &[ExactScalar]) -> SpherePoint {
    let n2 = linalg::dot(u, u);
    let denom = ExactScalar::one() + &n2;
    let mut coords: Vec<ExactScalar> = u.iter().map(|x| x * ratio(2, 1) / &denom).collect();
    coords.push((n2 - ExactScalar::one()) / denom);
    SpherePoint::new(coords).expect("stereographic image lies on the sphere")
}

/// The point of S⁷ where both half-sums of squares equal ½.
pub fn s1_witness() -> SpherePoint {
    let h = ratio(1, 2);
    let z = ratio(0, 1);
    SpherePoint::new(vec![h.clone(), h.clone(), z.clone(), z.clone(), h.clone(), h, z.clone(), z])
        .expect("witness lies on the sphere")
}

/// `count` pseudo-random points, then all `2·dim` signed basis points, then
/// (for dim 8) the S₁ witness.
pub fn sample_sphere_points(dim: usize, count: usize, seed: u64) -> Result<Vec<SpherePoint>, FieldError> {
    if dim != 4 && dim != 8 {
        return Err(FieldError::UnsupportedDim(dim));
    }
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count + 2 * dim + 1);
    for _ in 0..count {
        let u: Vec<ExactScalar> = (0..dim - 1)
            .map(|_| {
                let n = rng.range(-100, 100);
                let d = rng.range(1, 100);
                ratio(n, d)
            })
            .collect();
        out.push(inverse_stereographic(&u));
    }
    for i in 0..dim {
        out.push(SpherePoint::basis(dim, i, false));
        out.push(SpherePoint::basis(dim, i, true));
    }
    if dim == 8 {
        out.push(s1_witness());
    }
    Ok(out)
}
