//! Sparse elements of the Weyl algebra in the normal-ordered basis `y^i x^j`.
//!
//! Multiplication follows the Ore rule for `K[y][x; id, d/dy]`: moving a power
//! of `x` past a polynomial in `y` differentiates it,
//!
//! ```text
//! x^m . s(y) = sum_i C(m, i) s^(m-i)(y) x^i
//! ```
//!
//! so every product lands back in normal order without any rewriting loop.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::scalar::Scalar;

/// The basis element `y^y x^x`.
///
/// `Ord` is the canonical term order: descending total degree, then descending
/// `y`-degree. Ascending iteration of a sorted container therefore yields terms
/// in print order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub y: u32,
    pub x: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { y: 0, x: 0 };

    pub fn new(y: u32, x: u32) -> Self {
        Monomial { y, x }
    }

    pub fn total_degree(self) -> u32 {
        self.y + self.x
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then(other.y.cmp(&self.y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree with a distinguished value for the zero polynomial.
///
/// `NegInfinity` sorts below every finite degree and absorbs addition, so
/// `deg(pq) = deg(p) + deg(q)` holds without side conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A finitely supported linear combination of `y^i x^j`. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl WeylPoly {
    pub fn zero() -> Self {
        WeylPoly::default()
    }

    pub fn one() -> Self {
        WeylPoly::constant(Scalar::one())
    }

    pub fn x() -> Self {
        WeylPoly::monomial(0, 1)
    }

    pub fn y() -> Self {
        WeylPoly::monomial(1, 0)
    }

    pub fn constant(c: Scalar) -> Self {
        WeylPoly::term(c, 0, 0)
    }

    pub fn monomial(y: u32, x: u32) -> Self {
        WeylPoly::term(Scalar::one(), y, x)
    }

    /// `c y^y x^x`.
    pub fn term(c: Scalar, y: u32, x: u32) -> Self {
        let mut p = WeylPoly::zero();
        p.add_term(Monomial::new(y, x), c);
        p
    }

    /// Builds a polynomial from `(y, x, coeff)` triples, collecting like terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Scalar)>,
    {
        let mut p = WeylPoly::zero();
        for (y, x, c) in terms {
            p.add_term(Monomial::new(y, x), c);
        }
        p
    }

    /// Polynomial in `x` alone with the given coefficients, constant term first.
    pub fn in_x(coeffs: &[Scalar]) -> Self {
        WeylPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| (0, j as u32, c.clone())),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Scalar)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, y: u32, x: u32) -> Scalar {
        self.terms
            .get(&Monomial::new(y, x))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for `0` and for nonzero constants.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// The constant coefficient if this polynomial is a scalar.
    pub fn as_scalar(&self) -> Option<Scalar> {
        self.is_scalar().then(|| self.coeff(0, 0))
    }

    /// True when every monomial has `y`-degree zero.
    pub fn is_x_only(&self) -> bool {
        self.terms.keys().all(|m| m.y == 0)
    }

    pub fn total_degree(&self) -> Degree {
        // the first key in canonical order has maximal total degree
        match self.terms.keys().next() {
            None => Degree::NegInfinity,
            Some(m) => Degree::Finite(m.total_degree()),
        }
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).max()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn scale(&self, c: &Scalar) -> WeylPoly {
        if c.is_zero() {
            return WeylPoly::zero();
        }
        WeylPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// The associative product of `A_1`.
    pub fn assoc_mul(&self, rhs: &WeylPoly) -> WeylPoly {
        let mut out = WeylPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let c = ca * cb;
                // y^a.y x^a.x . y^b.y x^b.x = sum_i C(a.x, i) y^a.y d^(a.x - i)(y^b.y) x^(i + b.x)
                for i in 0..=a.x {
                    let order = a.x - i;
                    if order > b.y {
                        continue;
                    }
                    let coeff = &Scalar::binomial_falling(a.x, i, b.y, order) * &c;
                    out.add_term(Monomial::new(a.y + b.y - order, i + b.x), coeff);
                }
            }
        }
        out
    }

    /// `self^n` under the associative product; `p^0 = 1`.
    pub fn assoc_pow(&self, n: u32) -> WeylPoly {
        let mut acc = WeylPoly::one();
        for _ in 0..n {
            acc = acc.assoc_mul(self);
        }
        acc
    }

    /// `d/dy` on the normal-ordered basis: `y^m x^n -> m y^(m-1) x^n`.
    pub fn d_dy(&self) -> WeylPoly {
        let mut out = WeylPoly::zero();
        for (m, c) in &self.terms {
            if m.y > 0 {
                out.add_term(Monomial::new(m.y - 1, m.x), c * &Scalar::from(m.y as i64));
            }
        }
        out
    }

    /// `d/dx` on the normal-ordered basis: `y^m x^n -> n y^m x^(n-1)`.
    pub fn d_dx(&self) -> WeylPoly {
        let mut out = WeylPoly::zero();
        for (m, c) in &self.terms {
            if m.x > 0 {
                out.add_term(Monomial::new(m.y, m.x - 1), c * &Scalar::from(m.x as i64));
            }
        }
        out
    }

    /// `n`-fold `d/dy`.
    pub fn d_dy_n(&self, n: u32) -> WeylPoly {
        let mut out = WeylPoly::zero();
        for (m, c) in &self.terms {
            if m.y >= n {
                out.add_term(Monomial::new(m.y - n, m.x), c * &Scalar::falling_factorial(m.y, n));
            }
        }
        out
    }

    /// Substitutes `y -> y + k`, expanding binomially.
    pub fn shift_y(&self, k: &Scalar) -> WeylPoly {
        if k.is_zero() {
            return self.clone();
        }
        let mut out = WeylPoly::zero();
        for (m, c) in &self.terms {
            let mut kpow = Scalar::one();
            for l in 0..=m.y {
                let coeff = &(&Scalar::binomial(m.y, l) * &kpow) * c;
                out.add_term(Monomial::new(m.y - l, m.x), coeff);
                kpow *= k;
            }
        }
        out
    }
}

/// All `y^i x^j` with `i + j <= max_total_degree`, by increasing total degree
/// and, within a degree, decreasing `y`-degree: `1, y, x, y^2, y x, x^2, ...`.
pub fn monomials_up_to(max_total_degree: u32) -> Vec<WeylPoly> {
    (0..=max_total_degree)
        .flat_map(|d| (0..=d).rev().map(move |i| WeylPoly::monomial(i, d - i)))
        .collect()
}

impl fmt::Display for WeylPoly {
    /// Canonical text, e.g. `y x + 1` or `-1/2 y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::with_capacity(3);
            if !mag.is_one() || *m == Monomial::ONE {
                parts.push(mag.to_string());
            }
            match m.y {
                0 => {}
                1 => parts.push("y".into()),
                e => parts.push(format!("y^{e}")),
            }
            match m.x {
                0 => {}
                1 => parts.push("x".into()),
                e => parts.push(format!("x^{e}")),
            }
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeylPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylPoly({self})")
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    y: u32,
    x: u32,
    coeff: &'a Scalar,
}

/// Serializes as `{"terms":[{"y":i,"x":j,"coeff":"a/b"}, ...]}` in canonical order.
impl Serialize for WeylPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let records: Vec<TermRecord<'_>> = self
            .terms
            .iter()
            .map(|(m, c)| TermRecord { y: m.y, x: m.x, coeff: c })
            .collect();
        let mut st = serializer.serialize_struct("WeylPoly", 1)?;
        st.serialize_field("terms", &records)?;
        st.end()
    }
}

impl Add for &WeylPoly {
    type Output = WeylPoly;
    fn add(self, rhs: &WeylPoly) -> WeylPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Add for WeylPoly {
    type Output = WeylPoly;
    fn add(self, rhs: WeylPoly) -> WeylPoly {
        &self + &rhs
    }
}

impl Sub for &WeylPoly {
    type Output = WeylPoly;
    fn sub(self, rhs: &WeylPoly) -> WeylPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for WeylPoly {
    type Output = WeylPoly;
    fn sub(self, rhs: WeylPoly) -> WeylPoly {
        &self - &rhs
    }
}

impl Neg for &WeylPoly {
    type Output = WeylPoly;
    fn neg(self) -> WeylPoly {
        WeylPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for WeylPoly {
    type Output = WeylPoly;
    fn neg(self) -> WeylPoly {
        -&self
    }
}

/// `*` on bare polynomials is the associative product; the deformed product
/// lives on [`crate::algebra::AlgebraCtx`].
impl Mul for &WeylPoly {
    type Output = WeylPoly;
    fn mul(self, rhs: &WeylPoly) -> WeylPoly {
        self.assoc_mul(rhs)
    }
}

impl Mul for WeylPoly {
    type Output = WeylPoly;
    fn mul(self, rhs: WeylPoly) -> WeylPoly {
        self.assoc_mul(&rhs)
    }
}

impl From<Scalar> for WeylPoly {
    fn from(c: Scalar) -> Self {
        WeylPoly::constant(c)
    }
}
