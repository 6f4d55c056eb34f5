use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{CenterError, Result};
use crate::kernel::RefTriangle;

const MAX_ATTEMPTS: usize = 10_000;

/// Constraints for seeded triangle generation. Sides are integers in
/// `[min, max]`; generated triangles are always scalene and non-right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleConstraints {
    pub min: u32,
    pub max: u32,
    pub require_acute: bool,
}

impl Default for TriangleConstraints {
    fn default() -> Self {
        Self { min: 5, max: 80, require_acute: false }
    }
}

impl TriangleConstraints {
    pub fn acute() -> Self {
        Self { require_acute: true, ..Self::default() }
    }
}

/// Integer sides `a < b < c` of a scalene, non-right triangle; deterministic in `seed`.
pub fn random_sides(seed: u64, c: &TriangleConstraints) -> Result<[u32; 3]> {
    if c.min == 0 || c.min >= c.max {
        return Err(CenterError::ExhaustedRetries(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut s = [0u32; 3].map(|_| rng.gen_range(c.min..=c.max));
        s.sort_unstable();
        let [a, b, cc] = s.map(u64::from);
        if a == b || b == cc || a + b <= cc {
            continue;
        }
        let (a2, b2, c2) = (a * a, b * b, cc * cc);
        if a2 + b2 == c2 || (c.require_acute && c2 >= a2 + b2) {
            continue;
        }
        return Ok(s);
    }
    Err(CenterError::ExhaustedRetries(MAX_ATTEMPTS))
}

pub fn random_triangle(seed: u64, c: &TriangleConstraints) -> Result<RefTriangle> {
    let [a, b, cc] = random_sides(seed, c)?;
    Ok(RefTriangle::from_int_sides(a.into(), b.into(), cc.into())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_constrained() {
        let c = TriangleConstraints::default();
        let s1 = random_sides(1, &c).unwrap();
        assert_eq!(s1, random_sides(1, &c).unwrap());
        let [a, b, cc] = s1;
        assert!(5 <= a && a < b && b < cc && cc <= 80 && a + b > cc);
        for seed in 0..200 {
            let [a, b, c] = random_sides(seed, &TriangleConstraints::acute()).unwrap();
            assert!(c * c < a * a + b * b);
        }
    }

    #[test]
    fn right_triangles_never_appear() {
        let c = TriangleConstraints { min: 3, max: 5, require_acute: false };
        // The only integer triangles with distinct sides in [3, 5] are (3, 4, 5), which is right.
        assert_eq!(random_sides(7, &c), Err(CenterError::ExhaustedRetries(MAX_ATTEMPTS)));
    }
}
