//! Seeded identity suites over every module.
//!
//! [`verify`] runs each property on `count` random instances (exhaustive
//! properties report their own instance counts) and stops a property at its
//! first counterexample. The run is a pure function of `(order, seed, count)`.
//!
//! The series-core properties go through a [`SeriesKernel`], so a deliberately
//! broken kernel can be plugged in with [`verify_with`] as a negative control.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::series::{binomial_factor, int, ratio, MonicSeries, Rational, TruncatedSeries};
use crate::spectral::{
    self, admissibility_order, commutativity_witness, index_sequence_of_matrix, linear_zeta,
    spectral_class, OrbitCount, OrbitTable, Poly, RationalMatrix,
};
use crate::transforms::{self, dold_check, dold_coefficients, indices_from_dold};
use crate::zeta::{self, FactorExponents, IndexSequence};

/// Multiplication and inversion used by the series-core properties.
pub trait SeriesKernel {
    fn mul(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries;
    fn inverse(&self, a: &MonicSeries) -> MonicSeries;
}

/// The library's own arithmetic.
pub struct ExactKernel;

impl SeriesKernel for ExactKernel {
    fn mul(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        a.mul(b)
    }
    fn inverse(&self, a: &MonicSeries) -> MonicSeries {
        a.inverse()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub module: &'static str,
    pub name: &'static str,
    pub instances: usize,
    pub pass: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub order: usize,
    pub seed: u64,
    pub count: usize,
    pub properties: Vec<PropertyReport>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(|p| p.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "seed": self.seed.to_string(),
            "count": self.count,
            "pass": self.all_pass(),
            "properties": self.properties.iter().map(|p| json!({
                "module": p.module,
                "name": p.name,
                "instances": p.instances,
                "pass": p.pass,
                "counterexample": p.counterexample,
            })).collect::<Vec<_>>(),
        })
    }
}

type Outcome = std::result::Result<(), String>;

struct Runner<'a> {
    order: usize,
    seed: u64,
    count: usize,
    kernel: &'a dyn SeriesKernel,
    reports: Vec<PropertyReport>,
}

impl Runner<'_> {
    fn rng_for(&self, index: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64))
    }

    /// Runs a random property `count` times.
    fn random<F>(&mut self, module: &'static str, name: &'static str, mut check: F)
    where
        F: FnMut(&mut ChaCha8Rng, &Runner<'_>) -> Outcome,
    {
        let mut rng = self.rng_for(self.reports.len());
        let mut instances = 0;
        let mut counterexample = None;
        for _ in 0..self.count {
            instances += 1;
            if let Err(c) = check(&mut rng, self) {
                counterexample = Some(c);
                break;
            }
        }
        self.push(module, name, instances, counterexample);
    }

    /// Runs a property over a fixed list of cases.
    fn exhaustive<T, F>(&mut self, module: &'static str, name: &'static str, cases: Vec<T>, mut check: F)
    where
        F: FnMut(&T, &Runner<'_>) -> Outcome,
    {
        let mut instances = 0;
        let mut counterexample = None;
        for case in &cases {
            instances += 1;
            if let Err(c) = check(case, self) {
                counterexample = Some(c);
                break;
            }
        }
        self.push(module, name, instances, counterexample);
    }

    fn push(&mut self, module: &'static str, name: &'static str, instances: usize, counterexample: Option<String>) {
        self.reports.push(PropertyReport {
            module,
            name,
            instances,
            pass: counterexample.is_none(),
            counterexample,
        });
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Random generators shared by the suites.
pub mod gen {
    use super::*;

    pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
        ratio(rng.gen_range(-4..=4), rng.gen_range(1..=4))
    }

    pub fn integer_series<R: Rng>(rng: &mut R, order: usize) -> TruncatedSeries {
        TruncatedSeries::new((0..=order).map(|_| int(rng.gen_range(-3..=3))).collect()).expect("non-empty")
    }

    pub fn rational_series<R: Rng>(rng: &mut R, order: usize) -> TruncatedSeries {
        TruncatedSeries::new((0..=order).map(|_| small_rational(rng)).collect()).expect("non-empty")
    }

    fn with_constant(s: TruncatedSeries, c: Rational) -> Vec<Rational> {
        let mut v = s.into_coeffs();
        v[0] = c;
        v
    }

    pub fn integer_monic<R: Rng>(rng: &mut R, order: usize) -> MonicSeries {
        let v = with_constant(integer_series(rng, order), Rational::one());
        MonicSeries::new(TruncatedSeries::new(v).expect("non-empty")).expect("monic")
    }

    /// Monic with at least one fractional coefficient.
    pub fn fractional_monic<R: Rng>(rng: &mut R, order: usize) -> MonicSeries {
        assert!(order >= 1);
        let mut v = with_constant(rational_series(rng, order), Rational::one());
        if v.iter().all(|c| c.is_integer()) {
            let k = rng.gen_range(1..=order);
            v[k] = &v[k] + ratio(1, 2);
        }
        MonicSeries::new(TruncatedSeries::new(v).expect("non-empty")).expect("monic")
    }

    pub fn rational_monic<R: Rng>(rng: &mut R, order: usize) -> MonicSeries {
        let v = with_constant(rational_series(rng, order), Rational::one());
        MonicSeries::new(TruncatedSeries::new(v).expect("non-empty")).expect("monic")
    }

    pub fn zero_constant<R: Rng>(rng: &mut R, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(with_constant(rational_series(rng, order), Rational::zero())).expect("non-empty")
    }

    pub fn integer_sequence<R: Rng>(rng: &mut R, len: usize, bound: i64) -> IndexSequence {
        IndexSequence::new((0..len).map(|_| int(rng.gen_range(-bound..=bound))).collect())
    }

    pub fn integer_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
        RationalMatrix::new(
            (0..rows)
                .map(|_| (0..cols).map(|_| int(rng.gen_range(-bound..=bound))).collect())
                .collect(),
        )
        .expect("non-empty")
    }

    /// Square integer matrix of dimension `1..=max_dim`, entries in
    /// `[-bound, bound]`, with `admissibility_order(A, order) = order`.
    pub fn admissible_matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64, order: usize) -> RationalMatrix {
        loop {
            let d = rng.gen_range(1..=max_dim);
            let m = integer_matrix(rng, d, d, bound);
            if admissibility_order(&m, order).expect("square") == order {
                return m;
            }
        }
    }

    /// Rectangular pair `A: d x d'`, `B: d' x d` with both products admissible.
    pub fn admissible_pair<R: Rng>(
        rng: &mut R,
        max_dim: usize,
        bound: i64,
        order: usize,
    ) -> (RationalMatrix, RationalMatrix) {
        loop {
            let d = rng.gen_range(1..=max_dim);
            let e = rng.gen_range(1..=max_dim);
            let a = integer_matrix(rng, d, e, bound);
            let b = integer_matrix(rng, e, d, bound);
            let ab = a.mul(&b).expect("shapes");
            let ba = b.mul(&a).expect("shapes");
            if admissibility_order(&ab, order).expect("square") == order
                && admissibility_order(&ba, order).expect("square") == order
            {
                return (a, b);
            }
        }
    }

    pub fn orbit_table<R: Rng>(rng: &mut R, max_period: usize) -> OrbitTable {
        let mut counts = Vec::new();
        for period in 1..=max_period {
            if rng.gen_bool(0.5) {
                counts.push(OrbitCount {
                    period,
                    a: rng.gen_range(-3..=3),
                    b: rng.gen_range(-3..=3),
                });
            }
        }
        OrbitTable::from_counts(counts).expect("distinct periods")
    }

    pub fn integer_exponents<R: Rng>(rng: &mut R, order: usize) -> FactorExponents {
        let mut pairs = Vec::new();
        for n in 1..=order {
            if rng.gen_bool(0.4) {
                pairs.push((n, int(rng.gen_range(-3..=3))));
            }
        }
        FactorExponents::from_pairs(order, pairs).expect("in range")
    }
}

/// Runs every suite with the library's own arithmetic.
pub fn verify(order: usize, seed: u64, count: usize) -> VerifyReport {
    verify_with(&ExactKernel, order, seed, count)
}

pub fn verify_with(kernel: &dyn SeriesKernel, order: usize, seed: u64, count: usize) -> VerifyReport {
    let order = order.max(1);
    let mut r = Runner {
        order,
        seed,
        count,
        kernel,
        reports: Vec::new(),
    };
    series_core(&mut r);
    zeta_algebra(&mut r);
    sequence_transforms(&mut r);
    spectral_models(&mut r);
    VerifyReport {
        order,
        seed,
        count,
        properties: r.reports,
    }
}

fn series_core(r: &mut Runner<'_>) {
    const M: &str = "series_core";
    r.random(M, "mul_inverse_is_one", |rng, ctx| {
        let a = gen::rational_monic(rng, ctx.order);
        let p = ctx.kernel.mul(a.inner(), ctx.kernel.inverse(&a).inner());
        ensure(p == TruncatedSeries::one(ctx.order), || format!("a = {a}, a * a^-1 = {p}"))
    });
    r.random(M, "add_mul_commutative_associative", |rng, ctx| {
        let n = ctx.order;
        let (a, b, c) = (gen::rational_series(rng, n), gen::rational_series(rng, n), gen::rational_series(rng, n));
        let k = ctx.kernel;
        ensure(
            a.add(&b) == b.add(&a)
                && a.add(&b).add(&c) == a.add(&b.add(&c))
                && k.mul(&a, &b) == k.mul(&b, &a)
                && k.mul(&k.mul(&a, &b), &c) == k.mul(&a, &k.mul(&b, &c)),
            || format!("a = {a}, b = {b}, c = {c}"),
        )
    });
    r.random(M, "substitute_tk_homomorphism", |rng, ctx| {
        let n = ctx.order;
        let a = gen::rational_monic(rng, n);
        let b = gen::rational_monic(rng, n);
        let k = rng.gen_range(1..=3);
        let target = rng.gen_range(0..=k * n);
        let ab = MonicSeries::new(ctx.kernel.mul(a.inner(), b.inner())).map_err(|e| e.to_string())?;
        let lhs = ab.substitute_tk(k, target).map_err(|e| e.to_string())?;
        let sa = a.substitute_tk(k, target).map_err(|e| e.to_string())?;
        let sb = b.substitute_tk(k, target).map_err(|e| e.to_string())?;
        let rhs = ctx.kernel.mul(sa.inner(), sb.inner());
        ensure(*lhs.inner() == rhs, || format!("a = {a}, b = {b}, k = {k}, target = {target}"))
    });
    r.random(M, "canonical_coefficients", |rng, ctx| {
        let a = gen::rational_series(rng, ctx.order);
        let b = gen::rational_series(rng, ctx.order);
        let p = ctx.kernel.mul(&a, &b);
        ensure(
            p.coeffs().iter().all(|c| {
                use num_integer::Integer;
                c.denom() > &num_bigint::BigInt::zero() && c.numer().gcd(c.denom()).is_one()
            }),
            || format!("non-canonical coefficient in {p}"),
        )
    });
}

fn zeta_algebra(r: &mut Runner<'_>) {
    const M: &str = "zeta_algebra";
    r.random(M, "exp_log_inverse", |rng, ctx| {
        let z = gen::rational_monic(rng, ctx.order);
        let x = gen::zero_constant(rng, ctx.order);
        let back = zeta::exp_series(&zeta::log_series(&z)).map_err(|e| e.to_string())?;
        let x_back = zeta::log_series(&zeta::exp_series(&x).map_err(|e| e.to_string())?);
        ensure(back == z && x_back == x, || format!("z = {z}, x = {x}"))
    });
    r.random(M, "factorize_expand_roundtrip", |rng, ctx| {
        let n = ctx.order;
        let f = gen::integer_exponents(rng, n);
        let f_back = zeta::factorize(&zeta::expand_factors(&f, n));
        let z = gen::rational_monic(rng, n);
        let z_back = zeta::expand_factors(&zeta::factorize(&z), n);
        ensure(f_back == f && z_back == z, || format!("exponents = {f:?}, z = {z}"))
    });
    r.random(M, "integrality_iff_integer_exponents", |rng, ctx| {
        let z = if rng.gen_bool(0.5) {
            gen::integer_monic(rng, ctx.order)
        } else {
            gen::fractional_monic(rng, ctx.order)
        };
        let coeffs = zeta::is_integral(&z).is_integral();
        let exps = zeta::factorize(&z).is_integral();
        ensure(coeffs == exps, || format!("z = {z}: coefficients integral {coeffs}, exponents integral {exps}"))
    });
    r.random(M, "zeta_indices_inverse", |rng, ctx| {
        let i = gen::integer_sequence(rng, ctx.order, 5);
        let z = zeta::zeta_from_indices(&i);
        let z2 = gen::rational_monic(rng, ctx.order);
        ensure(
            zeta::indices_from_zeta(&z) == i && zeta::zeta_from_indices(&zeta::indices_from_zeta(&z2)) == z2,
            || format!("i = {:?}", i.values()),
        )
    });
    r.random(M, "pow_rational_additive", |rng, ctx| {
        let z = gen::rational_monic(rng, ctx.order);
        let a = gen::small_rational(rng);
        let b = gen::small_rational(rng);
        let lhs = zeta::pow_rational(&z, &(&a + &b));
        let rhs = zeta::pow_rational(&z, &a).mul(&zeta::pow_rational(&z, &b));
        ensure(lhs == rhs && zeta::pow_rational(&z, &int(1)) == z, || format!("z = {z}, a = {a}, b = {b}"))
    });
}

fn sequence_transforms(r: &mut Runner<'_>) {
    const M: &str = "sequence_transforms";
    r.random(M, "composition_oracle_equivalence", |rng, ctx| {
        let n_max = ctx.order.min(12);
        let i = gen::integer_sequence(rng, n_max, 5);
        let s = transforms::sp_from_indices_recurrence(&i);
        let i_back = transforms::indices_from_sp_recurrence(&s);
        for n in 1..=n_max {
            let sc = transforms::sp_from_indices_compositions(&i, n).map_err(|e| e.to_string())?;
            let ic = transforms::indices_from_sp_compositions(&s, n).map_err(|e| e.to_string())?;
            if sc != s.get(n) || &ic != i_back.get(n) {
                return Err(format!("i = {:?}, n = {n}", i.values()));
            }
        }
        ensure(i_back == i, || format!("i -> s -> i changed {:?}", i.values()))
    });
    r.random(M, "mobius_reconstruction", |rng, ctx| {
        let i = gen::integer_sequence(rng, ctx.order, 20);
        ensure(indices_from_dold(&dold_coefficients(&i)) == i, || format!("i = {:?}", i.values()))
    });
    r.random(M, "four_encoding_consistency", |rng, ctx| {
        let n = ctx.order;
        let table = gen::orbit_table(rng, n.min(6));
        let z = spectral::orbit_zeta(&table, n).map_err(|e| e.to_string())?;
        let e = transforms::exponents_from_orbit_counts(&table, n).map_err(|e| e.to_string())?;
        let i = zeta::indices_from_zeta(&z);
        ensure(
            zeta::factorize(&z) == e
                && zeta::expand_factors(&e, n) == z
                && i == transforms::indices_from_exponents(&e, n)
                && dold_check(&i).pass,
            || format!("orbits = {:?}", table.counts()),
        )
    });
    r.random(M, "dold_on_zeta_indices", |rng, ctx| {
        // integer zeta functions always satisfy the congruences
        let z = gen::integer_monic(rng, ctx.order);
        let i = zeta::indices_from_zeta(&z);
        ensure(i.is_integral() && dold_check(&i).pass, || format!("z = {z}"))
    });
}

fn spectral_models(r: &mut Runner<'_>) {
    const M: &str = "spectral_models";
    r.random(M, "two_path_agreement", |rng, ctx| {
        let a = gen::admissible_matrix(rng, 4, 5, ctx.order);
        let i = index_sequence_of_matrix(&a, ctx.order).map_err(|e| e.to_string())?;
        let class = spectral_class(&a).map_err(|e| e.to_string())?;
        ensure(zeta::zeta_from_indices(&i) == linear_zeta(class, ctx.order), || {
            format!("A = {a}, class {class}")
        })
    });
    r.random(M, "dold_on_spectra", |rng, ctx| {
        let a = gen::admissible_matrix(rng, 4, 5, ctx.order);
        let i = index_sequence_of_matrix(&a, ctx.order).map_err(|e| e.to_string())?;
        ensure(dold_check(&i).pass, || format!("A = {a}"))
    });
    r.random(M, "iteration_coherence", |rng, ctx| {
        let n = ctx.order;
        let m = rng.gen_range(1..=4usize);
        let a = gen::admissible_matrix(rng, 3, 3, 2 * m);
        let am = a.pow(m).map_err(|e| e.to_string())?;
        let class = spectral_class(&am).map_err(|e| e.to_string())?;
        let table = OrbitTable::from_counts(vec![OrbitCount::single(m, class)]).map_err(|e| e.to_string())?;
        let lhs = spectral::orbit_zeta(&table, n.max(m)).map_err(|e| e.to_string())?;
        let component = linear_zeta(class, n.max(m).div_ceil(m));
        let rhs = spectral::iterate_zeta_axiom(&component, m, n.max(m)).map_err(|e| e.to_string())?;
        let from_lins = OrbitTable::from_linearizations(&[(m, a.clone())]).map_err(|e| e.to_string())?;
        ensure(lhs == rhs && from_lins == table, || format!("A = {a}, m = {m}"))
    });
    let mut cases = Vec::new();
    for m in 1..=8usize {
        for k in 1..=8usize {
            for a in -3..=3i64 {
                for b in -3..=3i64 {
                    cases.push((m, k, a, b));
                }
            }
        }
    }
    r.exhaustive(M, "iterate_linear_coefficient", cases, |&(m, k, a, b), _| {
        let z = spectral::orbit_zeta_iterate(m, a, b, k, 1);
        let from_series = zeta::indices_from_zeta(&z).get(1).clone();
        let table = OrbitTable::from_counts(vec![OrbitCount { period: m, a, b }]).map_err(|e| e.to_string())?;
        let dual = transforms::linear_coefficient_of_iterate(&table, k);
        ensure(from_series == Rational::from_integer(dual.clone()), || {
            format!("m = {m}, k = {k}, a = {a}, b = {b}: series {from_series}, formulas {dual}")
        })
    });
    let lc: Vec<(usize, i64)> = (1..=6).flat_map(|q| (-2..=4).map(move |r| (q, r))).collect();
    r.exhaustive(M, "lecalvez_polynomiality", lc, |&(q, rr), ctx| {
        let order = ctx.order.max(q * 4 + 1);
        let z = spectral::lecalvez_zeta(q, rr, order);
        let deg = z.inner().degree();
        if rr > 0 {
            let expected = rr as usize * q - 1;
            ensure(deg == Some(expected), || format!("q = {q}, r = {rr}: degree {deg:?}, expected {expected}"))
        } else {
            ensure(deg == Some(order), || format!("q = {q}, r = {rr}: expected a non-polynomial tail"))
        }
    });
    r.exhaustive(M, "macdonald_formula", (-3..=5).collect(), |&chi, ctx| {
        let n = ctx.order;
        let m = spectral::macdonald_series(chi, n);
        let z = zeta::zeta_from_indices(&IndexSequence::constant(chi, n));
        let binom_ok = chi <= 0
            || (0..=n).all(|k| m.coeff(k) == Rational::from_integer(binomial(chi as usize + k - 1, k)));
        ensure(m == z && binom_ok, || format!("chi = {chi}"))
    });
    r.random(M, "char_poly_ab_ba", |rng, _| {
        let d = rng.gen_range(1..=4);
        let e = rng.gen_range(1..=4);
        let a = gen::integer_matrix(rng, d, e, 5);
        let b = gen::integer_matrix(rng, e, d, 5);
        let pab = a.mul(&b).and_then(|m| m.char_poly()).map_err(|e| e.to_string())?;
        let pba = b.mul(&a).and_then(|m| m.char_poly()).map_err(|e| e.to_string())?;
        // x^e p_AB = x^d p_BA
        let x_pow = |k: usize| {
            let mut c = vec![0i64; k + 1];
            c[k] = 1;
            Poly::from_integers(&c)
        };
        ensure(pab.mul(&x_pow(e)) == pba.mul(&x_pow(d)), || format!("A = {a}, B = {b}"))
    });
    r.random(M, "commutativity", |rng, ctx| {
        let (a, b) = gen::admissible_pair(rng, 3, 4, ctx.order);
        let v = commutativity_witness(&a, &b, ctx.order).map_err(|e| e.to_string())?;
        ensure(v.pass, || format!("A = {a}, B = {b}"))
    });
    r.exhaustive(M, "binomial_factor_matches_macdonald", (1..=4).collect(), |&n, ctx| {
        let o = ctx.order;
        ensure(
            binomial_factor(n, -1, o) == spectral::macdonald_series(1, o.div_ceil(n)).substitute_tk(n, o).map_err(|e| e.to_string())?,
            || format!("n = {n}"),
        )
    });
}

fn binomial(n: usize, k: usize) -> num_bigint::BigInt {
    let mut acc = num_bigint::BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}
