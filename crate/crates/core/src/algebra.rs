//! The hom-associative Weyl algebras `A_1^k`.
//!
//! `A_1^k` shares its vector space with `A_1`. The twisting map `alpha_k` is the
//! shift `y -> y + k` (fixing `x`), and the product is `p * q = alpha_k(p . q)`.
//! At `k = 0` everything collapses to the associative Weyl algebra.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::WeylPoly;
use crate::scalar::Scalar;

/// Selects the member `A_1^k` of the family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AlgebraCtx {
    pub k: Scalar,
}

impl AlgebraCtx {
    pub fn new(k: Scalar) -> Self {
        AlgebraCtx { k }
    }

    /// The associative Weyl algebra, `k = 0`.
    pub fn associative() -> Self {
        AlgebraCtx::default()
    }

    pub fn is_associative(&self) -> bool {
        self.k.is_zero()
    }

    /// `alpha_k(p) = p(x, y + k)`.
    pub fn alpha(&self, p: &WeylPoly) -> WeylPoly {
        p.shift_y(&self.k)
    }

    /// `alpha_k^{-1} = alpha_{-k}`.
    pub fn alpha_inv(&self, p: &WeylPoly) -> WeylPoly {
        p.shift_y(&-&self.k)
    }

    /// `alpha_k` summed as the terminating series `sum_l k^l / l! d^l/dy^l`.
    ///
    /// Agrees with [`AlgebraCtx::alpha`]; kept as a second route for cross-checks.
    pub fn alpha_exp_series(&self, p: &WeylPoly) -> WeylPoly {
        let top = p.y_degree().unwrap_or(0);
        let mut out = WeylPoly::zero();
        let mut kpow = Scalar::one();
        for l in 0..=top {
            let coeff = &kpow / &Scalar::factorial(l);
            out = &out + &p.d_dy_n(l).scale(&coeff);
            kpow *= &self.k;
        }
        out
    }

    /// `p * q = alpha_k(p . q)`.
    pub fn star_mul(&self, p: &WeylPoly, q: &WeylPoly) -> WeylPoly {
        self.alpha(&p.assoc_mul(q))
    }

    /// `[p, q]_* = p * q - q * p`.
    pub fn star_commutator(&self, p: &WeylPoly, q: &WeylPoly) -> WeylPoly {
        &self.star_mul(p, q) - &self.star_mul(q, p)
    }

    /// `(p, q, r)_* = (p * q) * r - p * (q * r)`.
    pub fn star_associator(&self, p: &WeylPoly, q: &WeylPoly, r: &WeylPoly) -> WeylPoly {
        let left = self.star_mul(&self.star_mul(p, q), r);
        let right = self.star_mul(p, &self.star_mul(q, r));
        &left - &right
    }

    /// Left-normed star power: `p^{*1} = p`, `p^{*(n+1)} = p^{*n} * p`.
    pub fn star_power_left(&self, p: &WeylPoly, n: u32) -> Result<WeylPoly> {
        if n == 0 {
            return Err(Error::ZeroStarPower);
        }
        let mut acc = p.clone();
        for _ in 1..n {
            acc = self.star_mul(&acc, p);
        }
        Ok(acc)
    }
}

/// The associative commutator `[p, q] = p . q - q . p`.
pub fn commutator(p: &WeylPoly, q: &WeylPoly) -> WeylPoly {
    &p.assoc_mul(q) - &q.assoc_mul(p)
}

/// The associative associator; identically zero in `A_1`.
pub fn associator(p: &WeylPoly, q: &WeylPoly, r: &WeylPoly) -> WeylPoly {
    &p.assoc_mul(q).assoc_mul(r) - &p.assoc_mul(&q.assoc_mul(r))
}
