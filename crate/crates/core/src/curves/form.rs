//! Homogeneous ternary polynomials with rational coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::Mat3;
use crate::Rational;

pub type Exponent = [u32; 3];

/// Monomial exponents of degree `d` in lexicographic order
/// (`x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³` for `d = 3`).
pub fn monomials(d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    degree: u32,
    terms: BTreeMap<Exponent, Rational>,
}

impl Form {
    pub fn zero(degree: u32) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut f = Self::zero(0);
        f.add_term([0, 0, 0], c);
        f
    }

    /// The coordinate `x`, `y` or `z`.
    pub fn var(i: usize) -> Self {
        let mut e = [0, 0, 0];
        e[i] = 1;
        let mut f = Self::zero(1);
        f.add_term(e, Rational::one());
        f
    }

    pub fn linear(c: &[Rational; 3]) -> Self {
        let mut f = Self::zero(1);
        for (i, ci) in c.iter().enumerate() {
            let mut e = [0, 0, 0];
            e[i] = 1;
            f.add_term(e, ci.clone());
        }
        f
    }

    /// Builds a form from coefficients listed in [`monomials`] order.
    pub fn from_coefficients(degree: u32, coeffs: &[Rational]) -> Self {
        let mut f = Self::zero(degree);
        for (e, c) in monomials(degree).into_iter().zip(coeffs) {
            f.add_term(e, c.clone());
        }
        f
    }

    /// Coefficients in [`monomials`] order.
    pub fn coefficients(&self) -> Vec<Rational> {
        monomials(self.degree).iter().map(|e| self.coeff(e)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.iter().sum::<u32>(), self.degree);
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Form) -> Form {
        let mut out = self.clone();
        if out.is_zero() {
            out.degree = other.degree;
        }
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Form {
        let mut out = Form::zero(self.degree);
        for (e, c) in &self.terms {
            out.add_term(*e, c * k);
        }
        out
    }

    pub fn mul(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.degree + other.degree);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Form {
        (0..n).fold(Form::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        self.terms.iter().map(|(e, c)| c * pow(&p[0], e[0]) * pow(&p[1], e[1]) * pow(&p[2], e[2])).sum()
    }

    /// Partial derivative with respect to coordinate `i`.
    pub fn partial(&self, i: usize) -> Form {
        let mut out = Form::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// `g(X) = f(M·X)`: substitutes each coordinate by a row of `m`.
    pub fn substitute(&self, m: &Mat3) -> Form {
        let rows: Vec<Form> = m.iter().map(Form::linear).collect();
        let powers: Vec<Vec<Form>> = rows.iter().map(|r| (0..=self.degree).map(|k| r.pow(k)).collect()).collect();
        let mut out = Form::zero(self.degree);
        for (e, c) in &self.terms {
            let term = powers[0][e[0] as usize].mul(&powers[1][e[1] as usize]).mul(&powers[2][e[2] as usize]);
            out = out.add(&term.scale(c));
        }
        out.degree = self.degree;
        out
    }
}

fn pow(x: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, _| acc * x)
}

/// Determinant of a 3×3 matrix of forms.
pub fn det3_forms(m: &[[Form; 3]; 3]) -> Form {
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0].mul(&m[r1][c1]).sub(&m[r0][c1].mul(&m[r1][c0]));
    m[0][0].mul(&minor(1, 2, 1, 2)).sub(&m[0][1].mul(&minor(1, 2, 0, 2))).add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_order() {
        assert_eq!(
            monomials(3),
            vec![
                [3, 0, 0],
                [2, 1, 0],
                [2, 0, 1],
                [1, 2, 0],
                [1, 1, 1],
                [1, 0, 2],
                [0, 3, 0],
                [0, 2, 1],
                [0, 1, 2],
                [0, 0, 3]
            ]
        );
        assert_eq!(monomials(2).len(), 6);
    }

    #[test]
    fn substitution_composes() {
        let r = |x: i64| Rational::from_integer(x.into());
        let f = Form::var(0).mul(&Form::var(1)).mul(&Form::var(2));
        let m: Mat3 = [[r(1), r(2), r(0)], [r(0), r(1), r(3)], [r(1), r(0), r(1)]];
        let g = f.substitute(&m);
        let p = [r(2), r(-1), r(5)];
        let mp = crate::linalg::mat3_vec(&m, &p);
        assert_eq!(g.eval(&p), f.eval(&mp));
    }
}
