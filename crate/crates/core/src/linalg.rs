//! Exact linear algebra over the integers and rationals.
//!
//! Everything here is small and dense: 3×3 frames for changes of basis and
//! at most 10-column incidence matrices for curve fitting. Elimination is
//! fraction-free (Bareiss), so intermediate entries stay integral and every
//! division is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// A 3×3 rational matrix, row-major.
pub type Mat3 = [[Rational; 3]; 3];

pub fn mat3_identity() -> Mat3 {
    let mut m = mat3_zero();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn mat3_zero() -> Mat3 {
    std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()))
}

pub fn det3(m: &Mat3) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Classical adjugate: `adj(m) · m = det(m) · I`.
pub fn adjugate3(m: &Mat3) -> Mat3 {
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
    [
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ]
}

pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])))
}

pub fn mat3_vec(m: &Mat3, v: &[Rational; 3]) -> [Rational; 3] {
    std::array::from_fn(|i| &m[i][0] * &v[0] + &m[i][1] * &v[1] + &m[i][2] * &v[2])
}

pub fn mat3_transpose(m: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

pub fn cross(u: &[Rational; 3], v: &[Rational; 3]) -> [Rational; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

pub fn dot(u: &[Rational; 3], v: &[Rational; 3]) -> Rational {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

pub fn det_rows(u: &[Rational; 3], v: &[Rational; 3], w: &[Rational; 3]) -> Rational {
    dot(u, &cross(v, w))
}

/// Outcome of fraction-free row reduction of an integer matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Row echelon form (only the first `rank` rows are meaningful).
    pub rows: Vec<Vec<BigInt>>,
    /// Pivot column of each of the first `rank` rows.
    pub pivot_cols: Vec<usize>,
    /// Original index of the input row used as pivot at each step. These rows
    /// are linearly independent and span the row space.
    pub pivot_rows: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// Basis of the right nullspace, one primitive integer vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.ncols];
                x[f] = Rational::one();
                for i in (0..self.rank()).rev() {
                    let p = self.pivot_cols[i];
                    let row = &self.rows[i];
                    let mut acc = Rational::zero();
                    for j in p + 1..self.ncols {
                        if !row[j].is_zero() && !x[j].is_zero() {
                            acc += Rational::from_integer(row[j].clone()) * &x[j];
                        }
                    }
                    x[p] = -acc / Rational::from_integer(row[p].clone());
                }
                primitive(&x)
            })
            .collect()
    }
}

/// Bareiss elimination with row pivoting. The input is not modified.
pub fn echelon(matrix: &[Vec<BigInt>]) -> Echelon {
    let nrows = matrix.len();
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut origin: Vec<usize> = (0..nrows).collect();
    let mut pivot_cols = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        // Smallest nonzero pivot keeps entries short.
        let Some(p) = (r..nrows).filter(|&i| !rows[i][col].is_zero()).min_by_key(|&i| rows[i][col].bits()) else {
            continue;
        };
        rows.swap(r, p);
        origin.swap(r, p);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let v = &rows[r][col] * &rows[i][j] - &rows[i][col] * &rows[r][j];
                rows[i][j] = v / &prev;
            }
            rows[i][col] = BigInt::zero();
        }
        // Columns left of `col` in rows below r are already zero; entries
        // between skipped columns were scaled consistently by the division.
        prev = rows[r][col].clone();
        pivot_cols.push(col);
        r += 1;
    }
    Echelon { rows, pivot_cols, pivot_rows: origin[..r].to_vec(), ncols }
}

/// Clears denominators and divides out the content. Sign is left as computed.
pub fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Primitive integer representative with the first nonzero entry positive.
/// Returns `None` for the zero vector.
pub fn canonical_ints(v: &[Rational]) -> Option<Vec<BigInt>> {
    let mut ints = primitive(v);
    let first = ints.iter().find(|x| !x.is_zero())?;
    if first.is_negative() {
        for x in &mut ints {
            *x = -std::mem::take(x);
        }
    }
    Some(ints)
}

pub fn to_rationals(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let e = echelon(&m);
        assert_eq!(e.rank(), 2);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        for row in &m {
            let s: BigInt = row.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
        let mut pr = e.pivot_rows.clone();
        pr.sort();
        assert!(pr == vec![0, 2] || pr == vec![1, 2]);
    }

    #[test]
    fn adjugate_inverts() {
        let m: Mat3 = [[2, 1, 0], [0, 3, 1], [1, 0, 4]].map(|r| r.map(|x: i64| Rational::from_integer(x.into())));
        let p = mat3_mul(&adjugate3(&m), &m);
        let d = det3(&m);
        assert_eq!(d, Rational::from_integer(25.into()));
        let want: Mat3 =
            std::array::from_fn(|i| std::array::from_fn(|j| if i == j { d.clone() } else { Rational::zero() }));
        assert_eq!(p, want);
    }

    #[test]
    fn skipped_pivot_column() {
        let m = ints(&[&[0, 1, 2], &[0, 2, 5], &[0, 0, 0]]);
        let e = echelon(&m);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivot_cols, vec![1, 2]);
        assert_eq!(e.nullspace(), vec![vec![BigInt::from(1), BigInt::zero(), BigInt::zero()]]);
    }
}
