//! Seeded, bounded verification suites.
//!
//! Each suite re-derives one structural fact about `A_1^k` by exhaustive
//! enumeration over basis monomials, randomized trials, or both, and returns a
//! [`Verdict`]. Suites are deterministic functions of their [`SuiteConfig`]:
//! every random choice flows from a ChaCha stream seeded with the configured
//! seed and the suite name.
//!
//! Identities that hold "for every k" are polynomial in `k` once the inputs are
//! fixed, of degree at most the total `y`-degree involved. The concrete suites
//! test a handful of witness values; the `deformation` suite replaces `k` by an
//! indeterminate and checks the same identities exactly as polynomials in `t`,
//! which is what makes the finite checks conclusive. Suites log the degree
//! bound this requires.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{commutator, AlgebraCtx};
use crate::morphism::{
    check_morphism, classified_isomorphism, classified_parameters, invert_classified, DerivationSpec,
    DerivationVerdict, GenMorphism, LeibnizProbe, MorphismVerdict,
};
use crate::poly::{monomials_up_to, Degree, Monomial, WeylPoly};
use crate::scalar::Scalar;
use crate::series::{self, TruncatedSeries};
use crate::verdict::Witness;

/// Rational coefficients `n / d` with `n` in `numer_min..=numer_max` and `d` in `denominators`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffGrid {
    pub numer_min: i64,
    pub numer_max: i64,
    pub denominators: Vec<i64>,
}

impl Default for CoeffGrid {
    fn default() -> Self {
        CoeffGrid {
            numer_min: -3,
            numer_max: 3,
            denominators: vec![1, 2],
        }
    }
}

impl CoeffGrid {
    /// Distinct values, ascending.
    pub fn values(&self) -> Vec<Scalar> {
        let set: BTreeSet<Scalar> = (self.numer_min..=self.numer_max)
            .flat_map(|n| self.denominators.iter().map(move |&d| Scalar::new(n, d)))
            .collect();
        set.into_iter().collect()
    }

    pub fn nonzero_values(&self) -> Vec<Scalar> {
        self.values().into_iter().filter(|v| !v.is_zero()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub degree_bound: u32,
    pub coeff_grid: CoeffGrid,
    pub rng_seed: u64,
    pub trials: usize,
    pub k_witnesses: Vec<Scalar>,
    /// ceiling on candidate evaluations in enumeration suites
    pub candidate_cap: usize,
    /// truncation order for the deformation suite
    pub series_order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            degree_bound: 3,
            coeff_grid: CoeffGrid::default(),
            rng_seed: 0x5eed_a11e,
            trials: 200,
            k_witnesses: default_k_witnesses(),
            candidate_cap: 100_000,
            series_order: series::DEFAULT_ORDER,
        }
    }
}

/// `{0, 1, -1, 2, 1/2}`.
pub fn default_k_witnesses() -> Vec<Scalar> {
    vec![
        Scalar::zero(),
        Scalar::one(),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::new(1, 2),
    ]
}

impl SuiteConfig {
    fn nonzero_ks(&self) -> Vec<Scalar> {
        self.k_witnesses.iter().filter(|k| !k.is_zero()).cloned().collect()
    }

    fn rng_for(&self, suite: &str) -> ChaCha8Rng {
        // FNV-1a of the suite name keeps per-suite streams independent
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in suite.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.rng_seed ^ h)
    }
}

/// Outcome of one suite. A failed verdict always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub suite_name: String,
    pub passed: bool,
    /// the property that failed and the parameters it failed at
    pub detail: Option<String>,
    pub witness: Option<Witness>,
    /// number of individual identity checks performed
    pub checks: usize,
    pub log: Vec<String>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks)", self.suite_name, self.checks)?;
        if let Some(d) = &self.detail {
            write!(f, "\n  {d}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        for line in &self.log {
            write!(f, "\n  note: {line}")?;
        }
        Ok(())
    }
}

/// Accumulates checks; stops recording at the first failure.
struct Run {
    name: &'static str,
    checks: usize,
    failure: Option<(String, Witness)>,
    log: Vec<String>,
}

impl Run {
    fn new(name: &'static str) -> Self {
        Run { name, checks: 0, failure: None, log: Vec::new() }
    }

    /// Records `expected == actual`; returns whether it held.
    fn expect_eq(&mut self, what: impl FnOnce() -> String, inputs: Vec<WeylPoly>, expected: WeylPoly, actual: WeylPoly) -> bool {
        self.checks += 1;
        if expected == actual {
            return true;
        }
        if self.failure.is_none() {
            self.failure = Some((what(), Witness::new(inputs, expected, actual)));
        }
        false
    }

    /// Records that `value` must be nonzero.
    fn expect_nonzero(&mut self, what: impl FnOnce() -> String, inputs: Vec<WeylPoly>, value: WeylPoly) -> bool {
        self.checks += 1;
        if !value.is_zero() {
            return true;
        }
        if self.failure.is_none() {
            self.failure = Some((what(), Witness::new(inputs, WeylPoly::zero(), value)));
        }
        false
    }

    fn fail(&mut self, what: String, witness: Witness) {
        self.checks += 1;
        if self.failure.is_none() {
            self.failure = Some((what, witness));
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.log.push(line.into());
    }

    fn finish(self) -> Verdict {
        let passed = self.failure.is_none();
        let (detail, witness) = match self.failure {
            Some((d, w)) => (Some(d), Some(w)),
            None => (None, None),
        };
        Verdict {
            suite_name: self.name.to_string(),
            passed,
            detail,
            witness,
            checks: self.checks,
            log: self.log,
        }
    }
}

/// Seeded generator of random polynomials: support size uniform in `1..=6`,
/// monomials uniform among those of total degree at most the bound,
/// coefficients uniform among the nonzero grid values.
pub struct PolyGen {
    rng: ChaCha8Rng,
    values: Vec<Scalar>,
}

impl PolyGen {
    pub fn new(rng: ChaCha8Rng, grid: &CoeffGrid) -> Self {
        PolyGen { rng, values: grid.nonzero_values() }
    }

    pub fn from_seed(seed: u64, grid: &CoeffGrid) -> Self {
        PolyGen::new(ChaCha8Rng::seed_from_u64(seed), grid)
    }

    /// A nonzero polynomial of total degree at most `max_degree`.
    pub fn poly(&mut self, max_degree: u32) -> WeylPoly {
        let n_monos = ((max_degree + 1) * (max_degree + 2) / 2) as usize;
        let support = self.rng.gen_range(1..=6usize).min(n_monos);
        let mut chosen = BTreeSet::new();
        while chosen.len() < support {
            let d = self.rng.gen_range(0..=max_degree);
            let i = self.rng.gen_range(0..=d);
            chosen.insert(Monomial::new(i, d - i));
        }
        let mut p = WeylPoly::zero();
        for m in chosen {
            let c = self.values.choose(&mut self.rng).expect("grid has a nonzero value").clone();
            p.add_term(m, c);
        }
        p
    }

    /// A polynomial in `x` alone of degree at most `max_degree`, possibly zero.
    pub fn x_poly(&mut self, max_degree: u32) -> WeylPoly {
        let mut p = WeylPoly::zero();
        for j in 0..=max_degree {
            if self.rng.gen_bool(0.5) {
                let c = self.values.choose(&mut self.rng).expect("grid has a nonzero value").clone();
                p.add_term(Monomial::new(0, j), c);
            }
        }
        p
    }

    pub fn scalar(&mut self) -> Scalar {
        self.values.choose(&mut self.rng).expect("grid has a nonzero value").clone()
    }
}

/// All `y^i x^j` with `i + j <= max_total_degree`; there are `(d+1)(d+2)/2` of them.
pub fn enumerate_monomials(max_total_degree: u32) -> Vec<WeylPoly> {
    monomials_up_to(max_total_degree)
}

fn kpoly(k: &Scalar) -> WeylPoly {
    WeylPoly::constant(k.clone())
}

/// `1 * p = p * 1 = alpha_k(p)` on random `p`, `1 * y = y + k`, and uniqueness of
/// the weak unit on bounded degree: every `e != 1` has a basis witness `p` with
/// `e * p != alpha_k(p)`.
pub fn weak_unit_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("weak-unit");
    let mut gen = PolyGen::new(cfg.rng_for(run.name), &cfg.coeff_grid);
    let one = WeylPoly::one();
    let basis = enumerate_monomials(cfg.degree_bound);
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        run.expect_eq(
            || format!("1 * y = y + k at k = {k}"),
            vec![one.clone(), WeylPoly::y()],
            &WeylPoly::y() + &kpoly(k),
            ctx.star_mul(&one, &WeylPoly::y()),
        );
        for _ in 0..cfg.trials {
            let p = gen.poly(cfg.degree_bound);
            let ap = ctx.alpha(&p);
            run.expect_eq(|| format!("1 * p = alpha_k(p) at k = {k}"), vec![p.clone()], ap.clone(), ctx.star_mul(&one, &p));
            run.expect_eq(|| format!("p * 1 = alpha_k(p) at k = {k}"), vec![p.clone()], ap, ctx.star_mul(&p, &one));
        }
        let mut candidates: Vec<WeylPoly> = basis.iter().filter(|e| **e != one).cloned().collect();
        candidates.extend((0..cfg.trials.min(50)).map(|_| gen.poly(cfg.degree_bound)).filter(|e| *e != one));
        for e in candidates {
            let left = basis.iter().find(|p| ctx.star_mul(&e, p) != ctx.alpha(p));
            let right = basis.iter().find(|p| ctx.star_mul(p, &e) != ctx.alpha(p));
            run.checks += 2;
            if left.is_none() || right.is_none() {
                run.fail(
                    format!("no basis witness separates e from the weak unit at k = {k}"),
                    Witness::new(vec![e.clone()], WeylPoly::one(), e.clone()),
                );
            }
        }
    }
    run.note("weak-unit uniqueness searched basis witnesses up to the degree bound");
    run.finish()
}

/// `alpha_k(a) * (b * c) = (a * b) * alpha_k(c)` on random triples.
pub fn hom_assoc_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("hom-assoc");
    let mut gen = PolyGen::new(cfg.rng_for(run.name), &cfg.coeff_grid);
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        for _ in 0..cfg.trials {
            let (a, b, c) = (gen.poly(cfg.degree_bound), gen.poly(cfg.degree_bound), gen.poly(cfg.degree_bound));
            let lhs = ctx.star_mul(&ctx.alpha(&a), &ctx.star_mul(&b, &c));
            let rhs = ctx.star_mul(&ctx.star_mul(&a, &b), &ctx.alpha(&c));
            if !run.expect_eq(|| format!("hom-associativity at k = {k}"), vec![a, b, c], rhs, lhs) {
                break;
            }
        }
    }
    run.note(format!(
        "both sides are polynomials in k of degree <= {}; exact in-t check lives in the deformation suite",
        3 * cfg.degree_bound
    ));
    run.finish()
}

/// `[alpha(a), [b, c]_*]_* + cyclic = 0` on random triples.
pub fn hom_jacobi_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("hom-jacobi");
    let mut gen = PolyGen::new(cfg.rng_for(run.name), &cfg.coeff_grid);
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        let br = |p: &WeylPoly, q: &WeylPoly| ctx.star_commutator(p, q);
        for _ in 0..cfg.trials {
            let (a, b, c) = (gen.poly(cfg.degree_bound), gen.poly(cfg.degree_bound), gen.poly(cfg.degree_bound));
            let sum = &(&br(&ctx.alpha(&a), &br(&b, &c)) + &br(&ctx.alpha(&c), &br(&a, &b))) + &br(&ctx.alpha(&b), &br(&c, &a));
            run.expect_eq(|| format!("hom-Jacobi at k = {k}"), vec![a.clone(), b.clone(), c.clone()], WeylPoly::zero(), sum);
            run.expect_eq(|| format!("alternating bracket at k = {k}"), vec![a.clone()], WeylPoly::zero(), br(&a, &a));
        }
    }
    run.finish()
}

/// `alpha_k` is a unital endomorphism, inverted by `alpha_{-k}`, and the
/// binomial shift agrees with the exponential series.
pub fn twist_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("twist");
    let mut gen = PolyGen::new(cfg.rng_for(run.name), &cfg.coeff_grid);
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        run.expect_eq(|| format!("alpha_k(1) = 1 at k = {k}"), vec![], WeylPoly::one(), ctx.alpha(&WeylPoly::one()));
        run.expect_eq(|| format!("alpha_k(x) = x at k = {k}"), vec![], WeylPoly::x(), ctx.alpha(&WeylPoly::x()));
        for _ in 0..cfg.trials {
            let (p, q) = (gen.poly(cfg.degree_bound), gen.poly(cfg.degree_bound));
            run.expect_eq(
                || format!("alpha_k multiplicative at k = {k}"),
                vec![p.clone(), q.clone()],
                ctx.alpha(&p).assoc_mul(&ctx.alpha(&q)),
                ctx.alpha(&p.assoc_mul(&q)),
            );
            run.expect_eq(|| format!("shift = exponential series at k = {k}"), vec![p.clone()], ctx.alpha_exp_series(&p), ctx.alpha(&p));
            run.expect_eq(|| format!("alpha_k^-1 alpha_k = id at k = {k}"), vec![p.clone()], p.clone(), ctx.alpha_inv(&ctx.alpha(&p)));
            run.expect_eq(
                || format!("p . q = alpha_k^-1(p * q) at k = {k}"),
                vec![p.clone(), q.clone()],
                p.assoc_mul(&q),
                ctx.alpha_inv(&ctx.star_mul(&p, &q)),
            );
        }
    }
    run.finish()
}

/// `[x, p]_* = d/dy alpha_k(p)` and `[p, y]_* = d/dx alpha_k(p)`.
///
/// The left sides use star products only; the right sides use shift and
/// differentiation only.
pub fn eq45_cross_check(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("commutation-relations");
    let mut gen = PolyGen::new(cfg.rng_for(run.name), &cfg.coeff_grid);
    let (x, y) = (WeylPoly::x(), WeylPoly::y());
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        for _ in 0..cfg.trials {
            let p = gen.poly(cfg.degree_bound);
            let lhs = &ctx.star_mul(&x, &p) - &ctx.star_mul(&p, &x);
            run.expect_eq(|| format!("[x, p]_* = d/dy p(x, y + k) at k = {k}"), vec![p.clone()], p.shift_y(k).d_dy(), lhs);
            let lhs = &ctx.star_mul(&p, &y) - &ctx.star_mul(&y, &p);
            run.expect_eq(|| format!("[p, y]_* = d/dx p(x, y + k) at k = {k}"), vec![p.clone()], p.shift_y(k).d_dx(), lhs);
        }
    }
    run.finish()
}

/// `(yx, yx, yx)_* = k x + 2k^2 x^2` and `(c, y, y)_* = -2ck^2 - cky`.
pub fn associator_formula_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("associator-formulas");
    let yx = WeylPoly::monomial(1, 1);
    let y = WeylPoly::y();
    let mut cs = vec![Scalar::one(), Scalar::from_int(-2), Scalar::new(1, 2)];
    cs.extend(cfg.coeff_grid.nonzero_values());
    cs.sort();
    cs.dedup();
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        let k2 = k * k;
        let expected = yx_cube_associator(k);
        run.expect_eq(
            || format!("(yx, yx, yx)_* at k = {k}"),
            vec![yx.clone(), yx.clone(), yx.clone()],
            expected,
            ctx.star_associator(&yx, &yx, &yx),
        );
        for c in &cs {
            let expected = WeylPoly::from_terms([(0, 0, -&(&Scalar::from_int(2) * &(c * &k2))), (1, 0, -&(c * k))]);
            let cp = WeylPoly::constant(c.clone());
            run.expect_eq(
                || format!("(c, y, y)_* at k = {k}, c = {c}"),
                vec![cp.clone(), y.clone(), y.clone()],
                expected,
                ctx.star_associator(&cp, &y, &y),
            );
        }
    }
    run.finish()
}

/// The commuter is exactly the scalars.
///
/// Scalars commute with every probe; every non-scalar probe fails to commute
/// with `x` or with `y`. The two-element witness set is sufficient because
/// `[x, p]_* = 0` forces `p` into `K[x]` and then `[p, y]_* = 0` forces `p` into `K`.
pub fn commuter_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("commuter");
    let mut gen = PolyGen::new(cfg.rng_for(run.name), &cfg.coeff_grid);
    let basis = enumerate_monomials(cfg.degree_bound);
    let (x, y) = (WeylPoly::x(), WeylPoly::y());
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        for a in cfg.coeff_grid.values() {
            let ap = WeylPoly::constant(a.clone());
            for q in &basis {
                run.expect_eq(
                    || format!("scalar {a} commutes at k = {k}"),
                    vec![ap.clone(), q.clone()],
                    WeylPoly::zero(),
                    ctx.star_commutator(&ap, q),
                );
            }
        }
        let mut probes: Vec<WeylPoly> = basis.iter().filter(|p| !p.is_scalar()).cloned().collect();
        probes.extend((0..cfg.trials).map(|_| gen.poly(cfg.degree_bound)).filter(|p| !p.is_scalar()));
        for p in probes {
            run.checks += 1;
            let bx = ctx.star_commutator(&p, &x);
            let by = ctx.star_commutator(&p, &y);
            if bx.is_zero() && by.is_zero() {
                run.fail(format!("non-scalar commutes with x and y at k = {k}"), Witness::new(vec![p, x.clone(), y.clone()], WeylPoly::one(), WeylPoly::zero()));
            }
        }
    }
    run.note("non-commuting witnesses are drawn from {x, y}");
    run.finish()
}

/// Membership of `p` in the commuter, probed against `x` and `y`.
/// Returns the first generator `p` fails to commute with.
pub fn commuter_witness(ctx: &AlgebraCtx, p: &WeylPoly) -> Option<WeylPoly> {
    [WeylPoly::x(), WeylPoly::y()]
        .into_iter()
        .find(|q| !ctx.star_commutator(p, q).is_zero())
}

/// The center is `K` for `k = 0` and `{0}` otherwise.
///
/// For `k != 0` every nonzero scalar `c` leaves the nucleus through
/// `(c, y, y)_* = -2ck^2 - cky != 0`; `0` stays in the center. For `k = 0` every
/// scalar passes associator probes in each of the three slots.
pub fn center_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("center");
    let y = WeylPoly::y();
    let probe_bound = cfg.degree_bound.min(3);
    let basis = enumerate_monomials(probe_bound);
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        let zero = WeylPoly::zero();
        run.expect_eq(|| format!("0 in nucleus at k = {k}"), vec![zero.clone()], WeylPoly::zero(), ctx.star_associator(&zero, &y, &y));
        for c in cfg.coeff_grid.nonzero_values() {
            let cp = WeylPoly::constant(c.clone());
            if k.is_zero() {
                for a in &basis {
                    for b in &basis {
                        let probes = [
                            ctx.star_associator(&cp, a, b),
                            ctx.star_associator(a, &cp, b),
                            ctx.star_associator(a, b, &cp),
                        ];
                        for val in probes {
                            if !run.expect_eq(|| format!("scalar {c} associates at k = 0"), vec![cp.clone(), a.clone(), b.clone()], WeylPoly::zero(), val) {
                                break;
                            }
                        }
                    }
                }
            } else {
                let assoc = ctx.star_associator(&cp, &y, &y);
                run.expect_nonzero(|| format!("scalar {c} leaves the nucleus at k = {k}"), vec![cp.clone(), y.clone(), y.clone()], assoc.clone());
                let k2 = k * k;
                let expected = WeylPoly::from_terms([(0, 0, -&(&Scalar::from_int(2) * &(&c * &k2))), (1, 0, -&(&c * k))]);
                run.expect_eq(|| format!("(c, y, y)_* formula at k = {k}, c = {c}"), vec![cp, y.clone(), y.clone()], expected, assoc);
            }
        }
    }
    run.note(format!("k = 0 associator probes use monomials of degree <= {probe_bound} in all three slots"));
    run.finish()
}

/// Closed form of `(yx, yx, yx)_*` in `A_1^k`: `2k y x^2 + 4k^2 x^2 + k x`.
///
/// Nonzero exactly when `k != 0`.
pub fn yx_cube_associator(k: &Scalar) -> WeylPoly {
    WeylPoly::from_terms([
        (1, 2, &Scalar::from_int(2) * k),
        (0, 2, &Scalar::from_int(4) * &(k * k)),
        (0, 1, k.clone()),
    ])
}

/// Power associativity holds exactly at `k = 0`.
pub fn power_assoc_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("power-assoc");
    let mut gen = PolyGen::new(cfg.rng_for(run.name), &cfg.coeff_grid);
    let yx = WeylPoly::monomial(1, 1);
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        if k.is_zero() {
            for _ in 0..cfg.trials {
                let p = gen.poly(cfg.degree_bound);
                run.expect_eq(|| "(p, p, p) = 0 at k = 0".into(), vec![p.clone()], WeylPoly::zero(), ctx.star_associator(&p, &p, &p));
            }
        } else {
            let assoc = ctx.star_associator(&yx, &yx, &yx);
            let expected = yx_cube_associator(k);
            run.expect_nonzero(|| format!("(yx, yx, yx)_* != 0 at k = {k}"), vec![yx.clone()], assoc.clone());
            run.expect_eq(|| format!("(yx, yx, yx)_* formula at k = {k}"), vec![yx.clone()], expected, assoc);
        }
    }
    run.finish()
}

/// For `k != 0`, finds basis witnesses against left alternativity `(a, a, b)`,
/// right alternativity `(b, a, a)` and flexibility `(a, b, a)`; for `k = 0`
/// checks all of those probes vanish.
pub fn alternativity_probe(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("alternativity");
    let basis = enumerate_monomials(2);
    type Shape = fn(&WeylPoly, &WeylPoly) -> [WeylPoly; 3];
    let shapes: [(&str, Shape); 3] = [
        ("left alternative (a, a, b)", |a, b| [a.clone(), a.clone(), b.clone()]),
        ("right alternative (b, a, a)", |a, b| [b.clone(), a.clone(), a.clone()]),
        ("flexible (a, b, a)", |a, b| [a.clone(), b.clone(), a.clone()]),
    ];
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        for (label, shape) in shapes {
            let mut found = None;
            for a in &basis {
                for b in &basis {
                    let [p, q, r] = shape(a, b);
                    let val = ctx.star_associator(&p, &q, &r);
                    if k.is_zero() {
                        run.expect_eq(|| format!("{label} at k = 0"), vec![p, q, r], WeylPoly::zero(), val);
                    } else if found.is_none() && !val.is_zero() {
                        found = Some((a.clone(), b.clone(), val));
                    }
                }
            }
            if !k.is_zero() {
                run.checks += 1;
                match found {
                    Some((a, b, val)) => run.note(format!("k = {k}: {label} fails at a = {a}, b = {b}: {val}")),
                    None => run.fail(format!("no witness against {label} at k = {k}"), Witness::new(vec![], WeylPoly::one(), WeylPoly::zero())),
                }
            }
        }
    }
    run.finish()
}

/// Derivations of `A_1^k` for `k != 0` are exactly `[c y + p(x), ·]`.
///
/// Positive direction: the family passes the star-Leibniz probe, in both of its
/// forms. Negative direction: every enumerated inner map `[q, ·]` with `q`
/// outside the family fails with a witness, as does `[y^2, ·]_*`; at `k = 0`
/// all inner maps pass.
pub fn derivation_classification_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("derivation-classification");
    let d = cfg.degree_bound;
    let probe = d + 2;
    let basis = enumerate_monomials(d);
    let in_family = |q: &WeylPoly| {
        let rest = q - &WeylPoly::term(q.coeff(1, 0), 1, 0);
        rest.is_x_only()
    };
    let mut cp: Vec<(Scalar, WeylPoly)> = Vec::new();
    for c in [0, 1, 2] {
        for p in [WeylPoly::zero(), WeylPoly::x(), WeylPoly::monomial(0, 3)] {
            cp.push((Scalar::from_int(c), p));
        }
    }
    let perturb = [Scalar::one(), Scalar::new(-1, 2)];
    for k in cfg.nonzero_ks() {
        let ctx = AlgebraCtx::new(k.clone());
        let leibniz = LeibnizProbe::new(ctx.clone(), probe);
        for (c, p) in &cp {
            let spec = DerivationSpec::new(ctx.clone(), c.clone(), p.clone()).expect("p is in K[x]");
            for b in enumerate_monomials(probe) {
                run.expect_eq(
                    || format!("[{c} y + {p}, .] agrees with alpha_k^-1 [{c} y + {p}, .]_* at k = {k}"),
                    vec![b.clone()],
                    spec.apply(&b),
                    spec.apply_via_star(&b),
                );
            }
            run.checks += 1;
            if let DerivationVerdict::Fail(w) = leibniz.check(|a| spec.apply_via_star(a)) {
                run.fail(format!("[{c} y + {p}, .] should be a derivation at k = {k}"), w);
            }
        }
        let mut candidates: Vec<WeylPoly> = basis.clone();
        for q in &basis {
            if !in_family(q) {
                for a in &perturb {
                    candidates.push(&(&WeylPoly::y() + &WeylPoly::x()) + &q.scale(a));
                }
            }
        }
        for q in candidates {
            let member = in_family(&q);
            let verdict = leibniz.check(|a| ctx.alpha_inv(&ctx.star_commutator(&q, a)));
            run.checks += 1;
            match (member, verdict.passed()) {
                (true, false) | (false, true) => {
                    let w = match verdict {
                        DerivationVerdict::Fail(w) => w,
                        _ => Witness::new(vec![q.clone()], WeylPoly::zero(), WeylPoly::zero()),
                    };
                    run.fail(format!("[{q}, .] classified {member} but probe says {} at k = {k}", !member), w);
                }
                _ => {}
            }
        }
        let y2 = WeylPoly::monomial(2, 0);
        run.checks += 1;
        if leibniz.check(|a| ctx.star_commutator(&y2, a)).passed() {
            run.fail(format!("[y^2, .]_* passed at k = {k}"), Witness::new(vec![y2.clone()], WeylPoly::zero(), WeylPoly::zero()));
        }
    }
    let assoc = AlgebraCtx::associative();
    let leibniz = LeibnizProbe::new(assoc.clone(), probe);
    for q in &basis {
        run.checks += 1;
        if let DerivationVerdict::Fail(w) = leibniz.check(|a| assoc.star_commutator(q, a)) {
            run.fail(format!("inner map [{q}, .] should be a derivation at k = 0"), w);
        }
    }
    run.note(format!("inner maps [q, .] with q of degree <= {d} probed on monomials of degree <= {probe}"));
    run.finish()
}

fn classified_grid(grid: &CoeffGrid) -> (Vec<Scalar>, Vec<WeylPoly>) {
    let cs = vec![Scalar::zero(), Scalar::one(), Scalar::new(-3, 2)];
    let mut ps = vec![WeylPoly::zero(), WeylPoly::x(), WeylPoly::monomial(0, 2), WeylPoly::monomial(0, 3)];
    if let Some(v) = grid.nonzero_values().first() {
        ps.push(&WeylPoly::constant(v.clone()) + &WeylPoly::term(v.clone(), 0, 3));
    }
    (cs, ps)
}

/// Candidate generator images: every polynomial of total degree at most `d`
/// with one or two grid-coefficient terms, plus [`morphism_candidates_near`] of `base`.
pub fn morphism_candidates(d: u32, grid: &CoeffGrid, base: &[WeylPoly]) -> Vec<WeylPoly> {
    let basis: Vec<Monomial> = (0..=d).flat_map(|t| (0..=t).rev().map(move |i| Monomial::new(i, t - i))).collect();
    let values = grid.nonzero_values();
    let mut out = Distinct::default();
    for (i, m1) in basis.iter().enumerate() {
        for a in &values {
            out.insert(WeylPoly::term(a.clone(), m1.y, m1.x));
            for m2 in &basis[i + 1..] {
                for b in &values {
                    out.insert(WeylPoly::from_terms([(m1.y, m1.x, a.clone()), (m2.y, m2.x, b.clone())]));
                }
            }
        }
    }
    for p in morphism_candidates_near(d, base) {
        out.insert(p);
    }
    out.items
}

/// Each `b` in `base`, and `b` plus `1` or `-1/2` times a monomial of degree at most `d`.
pub fn morphism_candidates_near(d: u32, base: &[WeylPoly]) -> Vec<WeylPoly> {
    let small = [Scalar::one(), Scalar::new(-1, 2)];
    let mut out = Distinct::default();
    for b in base {
        out.insert(b.clone());
        for t in 0..=d {
            for i in 0..=t {
                for a in &small {
                    out.insert(b + &WeylPoly::term(a.clone(), i, t - i));
                }
            }
        }
    }
    out.items
}

// insertion-ordered set
#[derive(Default)]
struct Distinct {
    seen: HashSet<WeylPoly>,
    items: Vec<WeylPoly>,
}

impl Distinct {
    fn insert(&mut self, p: WeylPoly) {
        if self.seen.insert(p.clone()) {
            self.items.push(p);
        }
    }
}

/// Morphisms `A_1^k -> A_1^l` for `k, l != 0` are exactly
/// `x -> (l/k) x + c`, `y -> (k/l) y + p(x)`.
///
/// Positive direction: classified isomorphisms pass [`check_morphism`] and
/// their inverses undo them. Negative direction: candidate pairs `(f(x), f(y))`
/// from [`morphism_candidates`] are screened. Clause (b) depends only on `f(x)`
/// and clause (c) only on `f(y)`, so candidates failing either are rejected
/// individually. Surviving pairs are tested against clause (a); those passing
/// it that are not of classified shape get the full check, which must fail.
/// A random sample of pairs is re-run through the full check to confirm the
/// screening.
pub fn morphism_classification_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("morphism-classification");
    let mut rng = cfg.rng_for(run.name);
    let d = cfg.degree_bound;
    let ks = cfg.nonzero_ks();
    let (cs, ps) = classified_grid(&cfg.coeff_grid);

    for k in &ks {
        for l in &ks {
            for c in &cs {
                for p in &ps {
                    let m = classified_isomorphism(k, l, c, p).expect("nonzero parameters");
                    run.checks += 1;
                    if let MorphismVerdict::Fail { clause, witness } = check_morphism(&m, d) {
                        run.fail(format!("classified ({k}, {l}, {c}, {p}) fails {clause}"), witness);
                    }
                    let g = invert_classified(&m).expect("classified shape");
                    for (gen, want) in [(&m.fx, WeylPoly::x()), (&m.fy, WeylPoly::y())] {
                        run.expect_eq(|| format!("inverse of ({k}, {l}, {c}, {p}) on generators"), vec![gen.clone()], want, g.apply(gen));
                    }
                    for (gen, want) in [(&g.fx, WeylPoly::x()), (&g.fy, WeylPoly::y())] {
                        run.expect_eq(|| format!("({k}, {l}, {c}, {p}) after its inverse"), vec![gen.clone()], want, m.apply(gen));
                    }
                }
            }
        }
    }

    // Plain candidates do not depend on (k, l); clause (b) and the shift
    // alpha_l(f) - f depend on l only, so they are computed once per l.
    let plain = morphism_candidates(d, &cfg.coeff_grid, &[]);
    let mut screened = 0usize;
    let mut pair_evals = 0usize;
    let mut full_checks = 0usize;
    let mut family_hits = 0usize;
    let mut covered = Vec::new();
    let mut capped = false;
    'ls: for l in &ks {
        let target = AlgebraCtx::new(l.clone());
        if screened + 2 * plain.len() > cfg.candidate_cap {
            capped = true;
            break;
        }
        screened += 2 * plain.len();
        let plain_x: Vec<&WeylPoly> = plain.iter().filter(|f| target.alpha(f) == **f).collect();
        let plain_shift: Vec<WeylPoly> = plain.iter().map(|f| &target.alpha(f) - f).collect();
        for k in &ks {
            let l_over_k = l / k;
            let k_over_l = k / l;
            let xbase: Vec<WeylPoly> = [Scalar::zero(), Scalar::one(), Scalar::new(-1, 2)]
                .iter()
                .map(|c| &WeylPoly::term(l_over_k.clone(), 0, 1) + &WeylPoly::constant(c.clone()))
                .collect();
            let ybase: Vec<WeylPoly> = [WeylPoly::zero(), WeylPoly::monomial(0, 2), &WeylPoly::constant(Scalar::new(1, 2)) - &WeylPoly::monomial(0, 3)]
                .iter()
                .map(|p| &WeylPoly::term(k_over_l.clone(), 1, 0) + p)
                .collect();
            let near_x = morphism_candidates_near(d, &xbase);
            let near_y = morphism_candidates_near(d, &ybase);
            if screened + near_x.len() + near_y.len() > cfg.candidate_cap {
                capped = true;
                break 'ls;
            }
            screened += near_x.len() + near_y.len();
            let kp = WeylPoly::constant(k.clone());
            let mut xs: Vec<WeylPoly> = plain_x.iter().map(|f| (*f).clone()).collect();
            xs.extend(near_x.iter().filter(|f| target.alpha(f) == **f).cloned());
            let mut ys: Vec<WeylPoly> = plain.iter().zip(&plain_shift).filter(|(_, s)| **s == kp).map(|(f, _)| f.clone()).collect();
            ys.extend(near_y.iter().filter(|f| target.alpha(f) == *f + &kp).cloned());

            // clause (a) by bilinearity: [fx, fy] = sum over terms c m of fy of c [fx, m]
            let monos: Vec<Monomial> = ys
                .iter()
                .flat_map(|f| f.terms().map(|(m, _)| m).collect::<Vec<_>>())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let one = WeylPoly::one();
            for fx in &xs {
                let brackets: Vec<WeylPoly> = monos.iter().map(|m| commutator(fx, &WeylPoly::monomial(m.y, m.x))).collect();
                for fy in &ys {
                    pair_evals += 1;
                    let mut acc = WeylPoly::zero();
                    for (m, c) in fy.terms() {
                        let i = monos.binary_search(&m).expect("collected above");
                        acc = &acc + &brackets[i].scale(c);
                    }
                    if acc != one {
                        continue;
                    }
                    let m = GenMorphism::new(k.clone(), l.clone(), fx.clone(), fy.clone());
                    if classified_parameters(&m).is_ok() {
                        family_hits += 1;
                        continue;
                    }
                    full_checks += 1;
                    run.checks += 1;
                    if check_morphism(&m, d).passed() {
                        run.fail(
                            format!("unclassified candidate passes check_morphism for k = {k}, l = {l}"),
                            Witness::new(vec![m.fx.clone(), m.fy.clone()], WeylPoly::zero(), WeylPoly::one()),
                        );
                    }
                }
            }
            run.checks += xs.len() * ys.len();

            // screened-out pairs and the bilinear shortcut, against the full check
            let all_x: Vec<&WeylPoly> = plain.iter().chain(&near_x).collect();
            let all_y: Vec<&WeylPoly> = plain.iter().chain(&near_y).collect();
            for _ in 0..25 {
                let fx = *all_x.choose(&mut rng).expect("nonempty");
                let fy = *all_y.choose(&mut rng).expect("nonempty");
                let m = GenMorphism::new(k.clone(), l.clone(), fx.clone(), fy.clone());
                let kept = xs.contains(fx) && ys.contains(fy) && commutator(fx, fy) == one;
                run.checks += 1;
                if check_morphism(&m, d).passed() != (kept && classified_parameters(&m).is_ok()) {
                    run.fail(format!("screening disagrees with the full check for k = {k}, l = {l}"), Witness::new(vec![fx.clone(), fy.clone()], WeylPoly::zero(), WeylPoly::one()));
                }
            }
            for fx in xs.iter().take(25) {
                for fy in ys.iter().take(4) {
                    let mut acc = WeylPoly::zero();
                    for (m, c) in fy.terms() {
                        acc = &acc + &commutator(fx, &WeylPoly::monomial(m.y, m.x)).scale(c);
                    }
                    run.expect_eq(|| "bracket bilinearity".into(), vec![fx.clone(), fy.clone()], commutator(fx, fy), acc);
                }
            }
            covered.push(format!(
                "(k, l) = ({k}, {l}): {} x {} candidates, {} x {} survive clauses (b), (c)",
                plain.len() + near_x.len(),
                plain.len() + near_y.len(),
                xs.len(),
                ys.len()
            ));
        }
    }
    run.note(format!(
        "degree bound {d}; candidate cap {}; generator images screened {screened}; surviving pairs {pair_evals}; classified pairs found {family_hits}; unclassified pairs given the full check {full_checks}",
        cfg.candidate_cap
    ));
    if capped {
        run.note("cap reached: remaining (k, l) pairs not enumerated");
    }
    for line in covered {
        run.note(line);
    }
    run.finish()
}

/// Endomorphisms of `A_1^k` (`k != 0`) of the form `x -> x + c`, `y -> y + p(x)`
/// are closed under composition and inversion and all pass the morphism check.
pub fn dixmier_closure_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("hom-dixmier");
    let mut gen = PolyGen::new(cfg.rng_for(run.name), &cfg.coeff_grid);
    let bound = cfg.degree_bound.min(2);
    let pairs = cfg.trials.min(50);
    for k in cfg.nonzero_ks() {
        let id = GenMorphism::identity(k.clone());
        for _ in 0..pairs {
            let f = classified_isomorphism(&k, &k, &gen.scalar(), &gen.x_poly(3)).expect("nonzero k");
            let g = classified_isomorphism(&k, &k, &gen.scalar(), &gen.x_poly(3)).expect("nonzero k");
            let h = g.compose(&f).expect("same algebra");
            run.checks += 1;
            match classified_parameters(&h) {
                Ok(_) if h.fx.coeff(0, 1).is_one() && h.fy.coeff(1, 0).is_one() => {}
                _ => run.fail(format!("composite leaves the family at k = {k}"), Witness::new(vec![f.fx.clone(), f.fy.clone(), g.fx.clone(), g.fy.clone()], WeylPoly::zero(), h.fy.clone())),
            }
            for m in [&f, &h] {
                run.checks += 1;
                if let MorphismVerdict::Fail { clause, witness } = check_morphism(m, bound) {
                    run.fail(format!("family member fails {clause} at k = {k}"), witness);
                }
                run.expect_eq(|| format!("1 maps to 1 at k = {k}"), vec![m.fx.clone(), m.fy.clone()], WeylPoly::one(), m.apply(&WeylPoly::one()));
            }
            let inv = invert_classified(&h).expect("classified shape");
            for (a, b) in [(&inv, &h), (&h, &inv)] {
                let round = a.compose(b).expect("same algebra");
                run.expect_eq(|| format!("inverse composes to identity at k = {k}"), vec![h.fx.clone(), h.fy.clone()], id.fx.clone(), round.fx);
                run.expect_eq(|| format!("inverse composes to identity at k = {k}"), vec![h.fx.clone(), h.fy.clone()], id.fy.clone(), round.fy);
            }
        }
    }
    run.note(format!("{pairs} random pairs per k; clause (d) audited on monomials of degree <= {bound}"));
    run.finish()
}

/// Formal deformation checks in the indeterminate `t`.
///
/// For every triple of basis monomials of total degree at most the bound, the
/// hom-associative and hom-Jacobi identities hold coefficientwise through
/// `series_order`; the `t^0` parts reduce to the associative product and the
/// identity twist; and evaluating `t` at each witness reproduces the concrete
/// star product.
pub fn deformation_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("deformation");
    let n = cfg.series_order;
    let basis = enumerate_monomials(cfg.degree_bound);
    let cst = |p: &WeylPoly| TruncatedSeries::constant(p.clone(), n);
    let series: Vec<TruncatedSeries> = basis.iter().map(cst).collect();
    let twisted: Vec<TruncatedSeries> = series.iter().map(series::alpha_t).collect();

    for (p, ps) in basis.iter().zip(&series) {
        run.expect_eq(|| "alpha_t has identity t^0 part".into(), vec![p.clone()], p.clone(), series::alpha_t(ps).coeff(0).clone());
    }
    // pairwise products and brackets, reused below
    let mut star = vec![vec![TruncatedSeries::zero(n); basis.len()]; basis.len()];
    let mut bracket = star.clone();
    for (i, a) in series.iter().enumerate() {
        for (j, b) in series.iter().enumerate() {
            star[i][j] = series::star_t(a, b).expect("equal orders");
        }
    }
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            bracket[i][j] = &star[i][j] - &star[j][i];
            let (p, q) = (&basis[i], &basis[j]);
            run.expect_eq(|| "star_t has associative t^0 part".into(), vec![p.clone(), q.clone()], p.assoc_mul(q), star[i][j].coeff(0).clone());
            if n >= 1 {
                run.expect_eq(|| "t^1 part of star_t is d/dy of the product".into(), vec![p.clone(), q.clone()], p.assoc_mul(q).d_dy(), star[i][j].coeff(1).clone());
            }
            if series::exact_order_for(&[p, q]) <= n {
                for k in &cfg.k_witnesses {
                    let ctx = AlgebraCtx::new(k.clone());
                    run.expect_eq(|| format!("star_t at t = {k} is the star product"), vec![p.clone(), q.clone()], ctx.star_mul(p, q), star[i][j].evaluate_at(k));
                    run.expect_eq(|| format!("bracket_t at t = {k} is the star commutator"), vec![p.clone(), q.clone()], ctx.star_commutator(p, q), bracket[i][j].evaluate_at(k));
                }
            }
        }
    }
    let idx = 0..basis.len();
    'outer: for a in idx.clone() {
        for b in idx.clone() {
            for c in idx.clone() {
                let lhs = series::star_t(&twisted[a], &star[b][c]).expect("equal orders");
                let rhs = series::star_t(&star[a][b], &twisted[c]).expect("equal orders");
                let inputs = || vec![basis[a].clone(), basis[b].clone(), basis[c].clone()];
                if let Some(deg) = (0..=n).find(|&i| lhs.coeff(i) != rhs.coeff(i)) {
                    run.fail(format!("hom-associativity fails at t^{deg}"), Witness::new(inputs(), rhs.coeff(deg).clone(), lhs.coeff(deg).clone()));
                    break 'outer;
                }
                run.checks += 1;
                let br = |p: &TruncatedSeries, q: &TruncatedSeries| series::bracket_t(p, q).expect("equal orders");
                let jac = &(&br(&twisted[a], &bracket[b][c]) + &br(&twisted[c], &bracket[a][b])) + &br(&twisted[b], &bracket[c][a]);
                if let Some(deg) = (0..=n).find(|&i| !jac.coeff(i).is_zero()) {
                    run.fail(format!("hom-Jacobi fails at t^{deg}"), Witness::new(inputs(), WeylPoly::zero(), jac.coeff(deg).clone()));
                    break 'outer;
                }
                run.checks += 1;
            }
        }
    }
    let needed = 3 * cfg.degree_bound as usize;
    run.note(format!(
        "triples of monomials of degree <= {} need order {} for exactness; checked through t^{}{}",
        cfg.degree_bound,
        needed,
        n,
        if n >= needed { " (exact)" } else { " (truncated)" }
    ));
    run.finish()
}

/// `deg(p * q) = deg(p) + deg(q)` for nonzero `p, q`; in particular `p * q != 0`.
pub fn degree_additivity_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("degree-additivity");
    let mut gen = PolyGen::new(cfg.rng_for(run.name), &cfg.coeff_grid);
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        for _ in 0..cfg.trials {
            let (p, q) = (gen.poly(cfg.degree_bound), gen.poly(cfg.degree_bound));
            let prod = ctx.star_mul(&p, &q);
            run.checks += 1;
            let want = p.total_degree() + q.total_degree();
            if prod.is_zero() || prod.total_degree() != want || matches!(want, Degree::NegInfinity) {
                run.fail(format!("degree of product is {} not {want} at k = {k}", prod.total_degree()), Witness::new(vec![p, q], WeylPoly::zero(), prod));
                break;
            }
        }
    }
    run.finish()
}

/// Scalars are closed under the star product and multiply as in `K`.
pub fn field_embedding_suite(cfg: &SuiteConfig) -> Verdict {
    let mut run = Run::new("field-embedding");
    let values = cfg.coeff_grid.values();
    for k in &cfg.k_witnesses {
        let ctx = AlgebraCtx::new(k.clone());
        for a in &values {
            for b in &values {
                let (ap, bp) = (WeylPoly::constant(a.clone()), WeylPoly::constant(b.clone()));
                run.expect_eq(|| format!("{a} * {b} at k = {k}"), vec![ap.clone(), bp.clone()], WeylPoly::constant(a * b), ctx.star_mul(&ap, &bp));
            }
        }
    }
    run.finish()
}

pub type SuiteFn = fn(&SuiteConfig) -> Verdict;

/// Every suite, by CLI name.
pub const SUITES: &[(&str, SuiteFn)] = &[
    ("weak-unit", weak_unit_suite),
    ("hom-assoc", hom_assoc_suite),
    ("hom-jacobi", hom_jacobi_suite),
    ("twist", twist_suite),
    ("commutation-relations", eq45_cross_check),
    ("associator-formulas", associator_formula_suite),
    ("field-embedding", field_embedding_suite),
    ("commuter", commuter_suite),
    ("center", center_suite),
    ("power-assoc", power_assoc_suite),
    ("alternativity", alternativity_probe),
    ("derivation-classification", derivation_classification_suite),
    ("morphism-classification", morphism_classification_suite),
    ("hom-dixmier", dixmier_closure_suite),
    ("deformation", deformation_suite),
    ("degree-additivity", degree_additivity_suite),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<Verdict> {
    SUITES.iter().find(|(n, _)| *n == name).map(|(_, f)| f(cfg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteConfig {
        SuiteConfig {
            degree_bound: 2,
            trials: 10,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(enumerate_monomials(0), vec![WeylPoly::one()]);
        assert_eq!(enumerate_monomials(1), vec![WeylPoly::one(), WeylPoly::y(), WeylPoly::x()]);
        for d in 0..7u32 {
            assert_eq!(enumerate_monomials(d).len() as u32, (d + 1) * (d + 2) / 2);
        }
    }

    #[test]
    fn grid_values() {
        let g = CoeffGrid::default();
        assert_eq!(g.values().len(), 11);
        assert_eq!(g.nonzero_values().len(), 10);
        assert!(g.values().contains(&Scalar::new(-3, 2)));
    }

    #[test]
    fn generator_is_deterministic() {
        let grid = CoeffGrid::default();
        let mut a = PolyGen::from_seed(7, &grid);
        let mut b = PolyGen::from_seed(7, &grid);
        for _ in 0..20 {
            let p = a.poly(4);
            assert_eq!(p, b.poly(4));
            assert!(!p.is_zero());
            assert!(p.total_degree() <= Degree::Finite(4));
            assert!(p.num_terms() <= 6);
        }
    }

    #[test]
    fn suites_pass_quickly() {
        let cfg = quick();
        for (name, f) in SUITES {
            let v = f(&cfg);
            assert!(v.passed, "{name}: {v}");
            assert!(v.checks > 0, "{name}");
        }
    }

    #[test]
    fn identical_config_gives_identical_verdicts() {
        let cfg = quick();
        assert_eq!(hom_assoc_suite(&cfg), hom_assoc_suite(&cfg));
        assert_eq!(commuter_suite(&cfg), commuter_suite(&cfg));
    }

    #[test]
    fn commuter_witness_for_y_is_x() {
        let ctx = AlgebraCtx::new(Scalar::one());
        assert_eq!(commuter_witness(&ctx, &WeylPoly::y()), Some(WeylPoly::x()));
        assert_eq!(commuter_witness(&ctx, &WeylPoly::constant(Scalar::from_int(5))), None);
    }

    #[test]
    fn center_probe_values() {
        let ctx = AlgebraCtx::new(Scalar::one());
        let y = WeylPoly::y();
        let got = ctx.star_associator(&WeylPoly::one(), &y, &y);
        assert_eq!(got, &WeylPoly::constant(Scalar::from_int(-2)) - &y);
        assert!(ctx.star_associator(&WeylPoly::zero(), &y, &y).is_zero());
    }

    #[test]
    fn power_assoc_at_two() {
        let ctx = AlgebraCtx::new(Scalar::from_int(2));
        let yx = WeylPoly::monomial(1, 1);
        let expected = WeylPoly::from_terms([(1, 2, Scalar::from_int(4)), (0, 2, Scalar::from_int(16)), (0, 1, Scalar::from_int(2))]);
        assert_eq!(ctx.star_associator(&yx, &yx, &yx), expected);
        assert_eq!(yx_cube_associator(&Scalar::from_int(2)), expected);
    }

    #[test]
    fn failing_verdict_carries_witness() {
        let mut run = Run::new("demo");
        run.expect_eq(|| "x = y".into(), vec![], WeylPoly::x(), WeylPoly::y());
        let v = run.finish();
        assert!(!v.passed);
        assert!(v.witness.is_some());
        assert_eq!(v.detail.as_deref(), Some("x = y"));
    }
}
