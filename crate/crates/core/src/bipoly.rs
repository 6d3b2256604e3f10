//! Sparse bivariate polynomials over arbitrary-precision integers.
//!
//! `BiPoly` holds Tutte polynomials, their differences, and the quotients
//! produced by dividing a difference by the connector polynomial
//! `x + y - xy`. Terms are kept in a `BTreeMap` keyed by `(xdeg, ydeg)` so
//! that iteration order, equality, and hashing are all canonical. No zero
//! coefficient is ever stored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational scalar used for point evaluation.
pub type Rational = BigRational;

/// Sparse bivariate polynomial with `BigInt` coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

/// Sign pattern of a polynomial's coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignPattern {
    Zero,
    /// All coefficients > 0 would be too strict; this means >= 0 with at
    /// least one > 0.
    NonNegative,
    NonPositive,
    Mixed,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, BigInt::one())
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 0, BigInt::one())
    }

    pub fn y() -> Self {
        BiPoly::monomial(0, 1, BigInt::one())
    }

    /// The connector polynomial `x + y - xy` defining the poset relation.
    pub fn connector() -> Self {
        let mut p = BiPoly::zero();
        p.add_term(1, 0, BigInt::one());
        p.add_term(0, 1, BigInt::one());
        p.add_term(1, 1, -BigInt::one());
        p
    }

    pub fn monomial(xdeg: u32, ydeg: u32, coeff: impl Into<BigInt>) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(xdeg, ydeg, coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    /// `1 + x + x^2 + ... + x^{k-1}`; the empty sum (`k = 0`) is 0.
    pub fn geometric_x(k: u32) -> Self {
        let mut p = BiPoly::zero();
        for i in 0..k {
            p.add_term(i, 0, BigInt::one());
        }
        p
    }

    /// `1 + y + y^2 + ... + y^{k-1}`; the empty sum (`k = 0`) is 0.
    pub fn geometric_y(k: u32) -> Self {
        let mut p = BiPoly::zero();
        for j in 0..k {
            p.add_term(0, j, BigInt::one());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, xdeg: u32, ydeg: u32) -> BigInt {
        self.terms.get(&(xdeg, ydeg)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn y_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Adds `coeff` to the `(xdeg, ydeg)` term, dropping it if it cancels.
    pub fn add_term(&mut self, xdeg: u32, ydeg: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((xdeg, ydeg)).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(xdeg, ydeg));
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, v * c);
        }
        out
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, x0: &Rational, y0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            let mut term = Rational::from(c.clone());
            term *= pow_rational(x0, i);
            term *= pow_rational(y0, j);
            acc += term;
        }
        acc
    }

    /// Exact value at an integer point; convenient for the parameter table.
    pub fn evaluate_int(&self, x0: i64, y0: i64) -> BigInt {
        let x0 = BigInt::from(x0);
        let y0 = BigInt::from(y0);
        let mut acc = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * x0.pow(i) * y0.pow(j);
        }
        acc
    }

    /// Divides by the connector `x + y - xy`, returning the unique quotient
    /// `P` with `(x + y - xy) * P = self` if one exists.
    ///
    /// The coefficient recurrence `d[i][j] = p[i-1][j] + p[i][j-1] - p[i-1][j-1]`
    /// is solved row by row in increasing y-degree:
    /// `p[a][0] = d[a+1][0]` and
    /// `p[a][b] = d[a+1][b] - p[a+1][b-1] + p[a][b-1]` for `b >= 1`.
    /// The candidate is then re-multiplied and checked against `self`
    /// exactly, so boundary assumptions in the recurrence cannot produce a
    /// wrong answer, only a rejection.
    pub fn quotient_by_connector(&self) -> Option<BiPoly> {
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        let dx = self.x_degree() as usize;
        let dy = self.y_degree() as usize;
        // Candidate rows: a in [0, dx], b in [0, dy]. Out-of-range terms of
        // self read as zero; the residual check rejects any junk they cause.
        let mut p = vec![vec![BigInt::zero(); dy + 1]; dx + 2];
        for b in 0..=dy {
            for a in (0..=dx).rev() {
                let d = self.coeff(a as u32 + 1, b as u32);
                let val = if b == 0 {
                    d
                } else {
                    d - &p[a + 1][b - 1] + &p[a][b - 1]
                };
                p[a][b] = val;
            }
        }
        let mut quotient = BiPoly::zero();
        for (a, row) in p.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                quotient.add_term(a as u32, b as u32, c.clone());
            }
        }
        if BiPoly::connector().mul(&quotient) == *self {
            Some(quotient)
        } else {
            None
        }
    }

    pub fn sign_pattern(&self) -> SignPattern {
        if self.is_zero() {
            return SignPattern::Zero;
        }
        let any_pos = self.terms.values().any(|c| c.is_positive());
        let any_neg = self.terms.values().any(|c| c.is_negative());
        match (any_pos, any_neg) {
            (true, false) => SignPattern::NonNegative,
            (false, true) => SignPattern::NonPositive,
            _ => SignPattern::Mixed,
        }
    }

    /// Terms in canonical rendering order: xdeg descending, ydeg ascending.
    pub fn sorted_terms(&self) -> Vec<(u32, u32, BigInt)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (i, j, c.clone()))
            .collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        v
    }

    /// Canonical text rendering, e.g. `x^3 + x^2 + x + y`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (i, j, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.magnitude().to_string();
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = monomial_str(i, j);
            if mono.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                }
                out.push_str(&mono);
            }
        }
        out
    }

    /// JSON rendering: `[[xdeg, ydeg, "coefficient"], ...]` in canonical
    /// term order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(i, j, c)| {
                    serde_json::json!([i, j, c.to_string()])
                })
                .collect(),
        )
    }
}

fn pow_rational(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn monomial_str(i: u32, j: u32) -> String {
    let mut s = String::new();
    match i {
        0 => {}
        1 => s.push('x'),
        _ => s.push_str(&format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => s.push('y'),
        _ => s.push_str(&format!("y^{j}")),
    }
    s
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::add(self, rhs)
    }
}

impl std::ops::Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::sub(self, rhs)
    }
}

impl std::ops::Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::mul(self, rhs)
    }
}
