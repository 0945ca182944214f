//! Formal power series in `t` with Weyl-algebra coefficients, truncated after `t^N`.
//!
//! The deformation replaces the shift parameter `k` by the indeterminate `t`:
//! `alpha_t = exp(t d/dy)` has `t^i`-coefficient `(1/i!) d^i/dy^i`, the deformed
//! product is `alpha_t ∘ (associative product)`, and the bracket is
//! `alpha_t ∘ (commutator)`. For inputs of bounded `y`-degree every such
//! expansion is a polynomial in `t`, so a large enough truncation is exact.

use std::fmt;
use std::ops::{Add, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::WeylPoly;
use crate::scalar::Scalar;

pub const DEFAULT_ORDER: usize = 10;

/// `sum_{i <= order} coeffs[i] t^i`, arithmetic modulo `t^(order+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    coeffs: Vec<WeylPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![WeylPoly::zero(); order + 1],
        }
    }

    /// The series with `p` in degree zero.
    pub fn constant(p: WeylPoly, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = p;
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<WeylPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, WeylPoly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &WeylPoly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[WeylPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(WeylPoly::is_zero)
    }

    /// Substitutes a scalar for `t`.
    pub fn evaluate_at(&self, t: &Scalar) -> WeylPoly {
        let mut out = WeylPoly::zero();
        let mut tpow = Scalar::one();
        for c in &self.coeffs {
            out = &out + &c.scale(&tpow);
            tpow *= t;
        }
        out
    }

    fn same_order(&self, other: &TruncatedSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    /// Cauchy product with the associative product on coefficients.
    pub fn assoc_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = TruncatedSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &a.assoc_mul(b);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.same_order(other)?;
        Ok(self + other)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    /// Panics on mismatched orders; see [`TruncatedSeries::try_add`].
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) t")?,
                _ => write!(f, "({c}) t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `alpha_t = exp(t d/dy)` applied `t`-linearly.
pub fn alpha_t(p: &TruncatedSeries) -> TruncatedSeries {
    let n = p.order();
    let mut out = TruncatedSeries::zero(n);
    for (j, c) in p.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for i in 0..=(n - j) {
            let d = c.d_dy_n(i as u32);
            if d.is_zero() {
                break;
            }
            let inv_fact = Scalar::factorial(i as u32).recip().expect("factorial is nonzero");
            out.coeffs[i + j] = &out.coeffs[i + j] + &d.scale(&inv_fact);
        }
    }
    out
}

/// The deformed product `alpha_t(p . q)`.
pub fn star_t(p: &TruncatedSeries, q: &TruncatedSeries) -> Result<TruncatedSeries> {
    Ok(alpha_t(&p.assoc_mul(q)?))
}

/// The deformed bracket `star_t(p, q) - star_t(q, p)`.
pub fn bracket_t(p: &TruncatedSeries, q: &TruncatedSeries) -> Result<TruncatedSeries> {
    Ok(&star_t(p, q)? - &star_t(q, p)?)
}

/// Smallest truncation order at which products of constant series with these
/// coefficients are exact: the sum of their `y`-degrees.
pub fn exact_order_for(inputs: &[&WeylPoly]) -> usize {
    inputs.iter().map(|p| p.y_degree().unwrap_or(0) as usize).sum()
}

/// Coefficientwise comparison of two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesVerdict {
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

impl SeriesVerdict {
    pub fn degree_holds(&self, i: usize) -> bool {
        self.lhs.coeff(i) == self.rhs.coeff(i)
    }

    /// One flag per `t`-degree `0..=order`.
    pub fn per_degree(&self) -> Vec<bool> {
        (0..=self.lhs.order()).map(|i| self.degree_holds(i)).collect()
    }

    pub fn first_failing_degree(&self) -> Option<usize> {
        (0..=self.lhs.order()).find(|&i| !self.degree_holds(i))
    }

    pub fn passed(&self) -> bool {
        self.first_failing_degree().is_none()
    }
}

/// Hom-associativity `alpha_t(a) ·_t (b ·_t c) = (a ·_t b) ·_t alpha_t(c)` for an
/// arbitrary product and twist. [`check_hom_assoc_t`] instantiates it with the
/// deformation; other instantiations serve as negative controls.
pub fn check_hom_assoc_with<P, T>(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    c: &TruncatedSeries,
    twist: T,
    product: P,
) -> Result<SeriesVerdict>
where
    P: Fn(&TruncatedSeries, &TruncatedSeries) -> Result<TruncatedSeries>,
    T: Fn(&TruncatedSeries) -> TruncatedSeries,
{
    a.same_order(b)?;
    a.same_order(c)?;
    let lhs = product(&twist(a), &product(b, c)?)?;
    let rhs = product(&product(a, b)?, &twist(c))?;
    Ok(SeriesVerdict { lhs, rhs })
}

pub fn check_hom_assoc_t(a: &TruncatedSeries, b: &TruncatedSeries, c: &TruncatedSeries) -> Result<SeriesVerdict> {
    check_hom_assoc_with(a, b, c, alpha_t, star_t)
}

/// Hom-Jacobi `[α(a),[b,c]] + [α(c),[a,b]] + [α(b),[c,a]] = 0` with
/// `bracket_t` and `alpha_t`; the right side of the verdict is zero.
pub fn check_hom_jacobi_t(a: &TruncatedSeries, b: &TruncatedSeries, c: &TruncatedSeries) -> Result<SeriesVerdict> {
    a.same_order(b)?;
    a.same_order(c)?;
    let t1 = bracket_t(&alpha_t(a), &bracket_t(b, c)?)?;
    let t2 = bracket_t(&alpha_t(c), &bracket_t(a, b)?)?;
    let t3 = bracket_t(&alpha_t(b), &bracket_t(c, a)?)?;
    let lhs = &(&t1 + &t2) + &t3;
    Ok(SeriesVerdict {
        rhs: TruncatedSeries::zero(lhs.order()),
        lhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraCtx;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn cst(p: WeylPoly, order: usize) -> TruncatedSeries {
        TruncatedSeries::constant(p, order)
    }

    #[test]
    fn alpha_t_examples() {
        let a = alpha_t(&cst(WeylPoly::y(), 2));
        assert_eq!(a.coeffs(), &[WeylPoly::y(), WeylPoly::one(), WeylPoly::zero()]);
        let a = alpha_t(&cst(WeylPoly::monomial(2, 0), 2));
        assert_eq!(
            a.coeffs(),
            &[WeylPoly::monomial(2, 0), WeylPoly::term(s(2), 1, 0), WeylPoly::one()]
        );
        let p = WeylPoly::from_terms([(3, 1, s(2)), (1, 0, s(-1))]);
        let series = TruncatedSeries::from_coeffs(vec![p.clone(), WeylPoly::monomial(4, 0)], 0);
        assert_eq!(alpha_t(&series), cst(p, 0));
    }

    #[test]
    fn star_t_examples() {
        let got = star_t(&cst(WeylPoly::x(), 2), &cst(WeylPoly::y(), 2)).unwrap();
        let yx1 = &WeylPoly::monomial(1, 1) + &WeylPoly::one();
        assert_eq!(got.coeffs(), &[yx1, WeylPoly::x(), WeylPoly::zero()]);

        let p = WeylPoly::from_terms([(2, 1, s(1)), (0, 1, s(-3))]);
        let q = WeylPoly::from_terms([(1, 2, s(2)), (1, 0, s(1))]);
        let got = star_t(&cst(p.clone(), 0), &cst(q.clone(), 0)).unwrap();
        assert_eq!(got.coeff(0), &p.assoc_mul(&q));

        let got = star_t(&cst(WeylPoly::one(), 3), &cst(WeylPoly::y(), 3)).unwrap();
        assert_eq!(got.coeffs()[..2], [WeylPoly::y(), WeylPoly::one()]);
        assert!(got.coeffs()[2..].iter().all(WeylPoly::is_zero));
    }

    #[test]
    fn bracket_t_examples() {
        let got = bracket_t(&cst(WeylPoly::x(), 4), &cst(WeylPoly::y(), 4)).unwrap();
        assert_eq!(got, cst(WeylPoly::one(), 4));
        let p = cst(WeylPoly::from_terms([(2, 1, s(1)), (0, 1, s(-3))]), 4);
        assert!(bracket_t(&p, &p).unwrap().is_zero());
        let got = bracket_t(&cst(WeylPoly::x(), 3), &cst(WeylPoly::monomial(2, 0), 3)).unwrap();
        assert_eq!(got.coeff(0), &WeylPoly::term(s(2), 1, 0));
        assert_eq!(got.coeff(1), &WeylPoly::constant(s(2)));
        assert!(got.coeff(2).is_zero() && got.coeff(3).is_zero());
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = cst(WeylPoly::x(), 2);
        let b = cst(WeylPoly::y(), 3);
        assert_eq!(star_t(&a, &b), Err(Error::OrderMismatch(2, 3)));
        assert_eq!(bracket_t(&a, &b), Err(Error::OrderMismatch(2, 3)));
        assert!(check_hom_assoc_t(&a, &a, &b).is_err());
    }

    #[test]
    fn hom_assoc_examples() {
        let (x, y) = (cst(WeylPoly::x(), 6), cst(WeylPoly::y(), 6));
        assert!(check_hom_assoc_t(&x, &y, &x).unwrap().passed());
        let a = cst(WeylPoly::monomial(2, 1), 0);
        let b = cst(WeylPoly::monomial(1, 2), 0);
        assert!(check_hom_assoc_t(&a, &b, &a).unwrap().passed());
        assert!(check_hom_jacobi_t(&a, &b, &a).unwrap().passed());
    }

    #[test]
    fn corrupted_product_fails_at_reported_degree() {
        let (x, y) = (cst(WeylPoly::x(), 4), cst(WeylPoly::y(), 4));
        // the twist is dropped from the left factor only
        let verdict = check_hom_assoc_with(
            &x,
            &y,
            &y,
            alpha_t,
            |p: &TruncatedSeries, q: &TruncatedSeries| p.assoc_mul(q),
        )
        .unwrap();
        assert!(!verdict.passed());
        assert_eq!(verdict.first_failing_degree(), Some(1));
        assert!(verdict.degree_holds(0));
    }

    #[test]
    fn evaluation_matches_concrete_star() {
        let p = WeylPoly::from_terms([(2, 1, s(1)), (1, 0, s(-3))]);
        let q = WeylPoly::from_terms([(1, 2, s(2)), (3, 0, s(1))]);
        let order = exact_order_for(&[&p, &q]);
        let st = star_t(&cst(p.clone(), order), &cst(q.clone(), order)).unwrap();
        for k in [s(0), s(1), s(-1), s(2), Scalar::new(1, 2)] {
            let ctx = AlgebraCtx::new(k.clone());
            assert_eq!(st.evaluate_at(&k), ctx.star_mul(&p, &q));
        }
        assert_eq!(st.coeff(1), &p.assoc_mul(&q).d_dy());
    }
}
