//! Reference arithmetic for cross-checking, independent of the library's
//! product and shift formulas.
//!
//! An element `sum c_ij y^i x^j` of `A_1` is modelled as the differential
//! operator `f(y) -> sum c_ij y^i f^(j)(y)` on `K[y]`; this representation is
//! faithful, so products are composites of operators, read back into normal
//! form from their action on `1, y, y^2, ...`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use homweyl::{Scalar, WeylPoly};

/// A polynomial in `y` alone, exponent to coefficient.
pub type YPoly = BTreeMap<u32, Scalar>;

fn ypoly_add(acc: &mut YPoly, e: u32, c: Scalar) {
    let v = acc.entry(e).or_insert_with(Scalar::zero);
    *v += &c;
    if v.is_zero() {
        acc.remove(&e);
    }
}

fn derivative(f: &YPoly) -> YPoly {
    let mut out = YPoly::new();
    for (&e, c) in f {
        if e > 0 {
            ypoly_add(&mut out, e - 1, c * &Scalar::from_int(e as i64));
        }
    }
    out
}

/// The operator of `p` applied to `f`.
pub fn act(p: &WeylPoly, f: &YPoly) -> YPoly {
    let mut out = YPoly::new();
    for (m, c) in p.terms() {
        let mut g = f.clone();
        for _ in 0..m.x {
            g = derivative(&g);
        }
        for (e, gc) in g {
            ypoly_add(&mut out, e + m.y, &gc * c);
        }
    }
    out
}

/// Normal form of the operator `op`, given that its order in `d/dy` is at most `max_order`.
pub fn read_back(op: impl Fn(&YPoly) -> YPoly, max_order: u32) -> WeylPoly {
    let mut found: Vec<(u32, u32, Scalar)> = Vec::new();
    for n in 0..=max_order {
        let mut g = op(&YPoly::from([(n, Scalar::one())]));
        // subtract what the lower-order terms contribute on y^n
        for (i, j, c) in &found {
            let f = Scalar::falling_factorial(n, *j);
            if !f.is_zero() {
                ypoly_add(&mut g, i + n - j, -&(c * &f));
            }
        }
        let nfact = Scalar::factorial(n);
        for (e, c) in g {
            found.push((e, n, &c / &nfact));
        }
    }
    WeylPoly::from_terms(found)
}

fn x_degree(p: &WeylPoly) -> u32 {
    p.x_degree().unwrap_or(0)
}

/// `p . q` by composing operators.
pub fn mul(p: &WeylPoly, q: &WeylPoly) -> WeylPoly {
    read_back(|f| act(p, &act(q, f)), x_degree(p) + x_degree(q))
}

/// `y -> y + k` by repeated multiplication of `(y + k)`.
pub fn shift(p: &WeylPoly, k: &Scalar) -> WeylPoly {
    let mut out = WeylPoly::zero();
    for (m, c) in p.terms() {
        let mut pow = YPoly::from([(0, Scalar::one())]);
        for _ in 0..m.y {
            let mut next = YPoly::new();
            for (e, a) in &pow {
                ypoly_add(&mut next, e + 1, a.clone());
                ypoly_add(&mut next, *e, a * k);
            }
            pow = next;
        }
        for (e, a) in pow {
            out = &out + &WeylPoly::term(&a * c, e, m.x);
        }
    }
    out
}

pub fn star(k: &Scalar, p: &WeylPoly, q: &WeylPoly) -> WeylPoly {
    shift(&mul(p, q), k)
}

pub fn associator(k: &Scalar, a: &WeylPoly, b: &WeylPoly, c: &WeylPoly) -> WeylPoly {
    &star(k, &star(k, a, b), c) - &star(k, a, &star(k, b, c))
}

pub fn commutator(k: &Scalar, a: &WeylPoly, b: &WeylPoly) -> WeylPoly {
    &star(k, a, b) - &star(k, b, a)
}

pub fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

pub fn witnesses() -> Vec<Scalar> {
    vec![s(0), s(1), s(-1), s(2), q(1, 2)]
}
