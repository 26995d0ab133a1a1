//! Randomized invariants shared by the property tests and the acceptance run.

use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use sing_core::arrangement::*;
use sing_core::groebner::{is_saturated, radical_membership_rabinowitsch};
use sing_core::homology::*;
use sing_core::liaison::*;
use sing_core::polyring::{LinearForm, PrimeField, Ring};

pub const CASES: u32 = 200;

pub struct Property {
    pub name: &'static str,
    pub seed: u64,
    pub run: fn(u64, u32) -> Result<(), String>,
}

pub const ALL: &[Property] = &[
    Property { name: "euler identity", seed: 0x5e01, run: euler },
    Property { name: "pair counting", seed: 0x5e02, run: pair_counting },
    Property { name: "containments", seed: 0x5e03, run: containments },
    Property { name: "rabinowitsch radical", seed: 0x5e04, run: rabinowitsch },
    Property { name: "betti alternating sum", seed: 0x5e05, run: alternating_sum },
    Property { name: "hypothesis implies cm", seed: 0x5e06, run: hypothesis_cm },
    Property { name: "liaison additivity", seed: 0x5e07, run: liaison_additivity },
    Property { name: "double link rao shift", seed: 0x5e08, run: double_link_shift },
];

/// `SING_PROP_SEED` overrides every seed, for replaying a logged failure.
pub fn seed_for(p: &Property) -> u64 {
    std::env::var("SING_PROP_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(p.seed)
}

fn check<S: Strategy>(seed: u64, cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    let config = Config { cases, failure_persistence: None, max_global_rejects: 20 * cases, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn names() -> Vec<String> {
    ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect()
}

fn ring() -> Arc<Ring<PrimeField>> {
    Arc::new(Ring::new(PrimeField::default_prime(), names()).unwrap())
}

fn nonzero_form(c: i64) -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-c..=c).prop_filter("zero form", |r| r.iter().any(|&x| x != 0))
}

/// Between `min` and `max` distinct planes of P^3 with coefficients in `[-c, c]`.
fn arrangement(min: usize, max: usize, c: i64) -> impl Strategy<Value = Arrangement> {
    prop::collection::vec(nonzero_form(c), min..=max).prop_filter_map("repeated planes", move |rows| {
        let mut forms: Vec<LinearForm> = Vec::new();
        for r in rows {
            let f = LinearForm::from_ints(&r).ok()?;
            if !forms.iter().any(|g| g.proportional(&f)) {
                forms.push(f);
            }
        }
        if forms.len() < min {
            return None;
        }
        Arrangement::new(names(), forms).ok()
    })
}

fn ok(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn core<T>(r: sing_core::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

fn safe(a: &Arrangement) -> Result<(), TestCaseError> {
    if prime_is_safe(a, sing_core::polyring::DEFAULT_PRIME) {
        Ok(())
    } else {
        Err(TestCaseError::reject("lattice changes mod p"))
    }
}

pub fn euler(seed: u64, cases: u32) -> Result<(), String> {
    let r = ring();
    check(seed, cases, prop::collection::vec(nonzero_form(5), 2..=10), |rows| {
        let forms: Vec<LinearForm> = rows.iter().map(|c| LinearForm::from_ints(c).unwrap()).collect();
        let f = core(r.expand_product(&forms))?;
        let mut lhs = r.zero();
        for i in 0..4 {
            let d = core(r.partial_derivative(&f, i))?;
            lhs = r.add(&lhs, &r.mul(&r.var(i), &d));
        }
        let d = r.constant(core(r.coef(&sing_core::polyring::rat(forms.len() as i64)))?);
        ok(lhs == r.mul(&d, &f), || "sum x_i df/dx_i != d f".into())
    })
}

pub fn pair_counting(seed: u64, cases: u32) -> Result<(), String> {
    check(seed, cases, arrangement(2, 12, 3), |a| {
        let d = a.len();
        let s: usize = intersection_flats(&a).iter().map(|f| f.multiplicity() * (f.multiplicity() - 1) / 2).sum();
        ok(s == d * (d - 1) / 2, || format!("sum C(e,2) = {s}, C(d,2) = {}", d * (d - 1) / 2))
    })
}

pub fn containments(seed: u64, cases: u32) -> Result<(), String> {
    check(seed, cases, arrangement(2, 8, 2), |a| {
        safe(&a)?;
        let r = core(a.ring(PrimeField::default_prime()))?;
        let j = core(jacobian_ideal(&r, &a))?;
        let top = core(top_comb(&r, &a))?;
        let rad = core(radical_comb(&r, &a))?;
        ok(top.contains_ideal(&j), || "J not in top".into())?;
        ok(rad.contains_ideal(&top), || "top not in radical".into())
    })
}

pub fn rabinowitsch(seed: u64, cases: u32) -> Result<(), String> {
    check(seed, cases, arrangement(2, 6, 2), |a| {
        safe(&a)?;
        let r = core(a.ring(PrimeField::default_prime()))?;
        let j = core(jacobian_ideal(&r, &a))?;
        let rad = core(radical_comb(&r, &a))?;
        ok(rad.contains_ideal(&j), || "J not in radical".into())?;
        for g in rad.gens() {
            ok(core(radical_membership_rabinowitsch(g, &j))?, || format!("{} not in sqrt J", r.format(g)))?;
        }
        Ok(())
    })
}

pub fn alternating_sum(seed: u64, cases: u32) -> Result<(), String> {
    check(seed, cases, arrangement(2, 8, 2), |a| {
        safe(&a)?;
        let r = core(a.ring(PrimeField::default_prime()))?;
        for ideal in [core(jacobian_ideal(&r, &a))?, core(top_comb(&r, &a))?, core(radical_comb(&r, &a))?] {
            let h = ideal.hilbert();
            ok(h.offset == 0, || "nonzero offset".into())?;
            let b = betti_table(&minimal_free_resolution(&ideal));
            ok(b.alternating_numerator() == h.numerator, || format!("{:?} vs {:?}", b.alternating_numerator(), h.numerator))?;
        }
        Ok(())
    })
}

pub fn hypothesis_cm(seed: u64, cases: u32) -> Result<(), String> {
    check(seed, cases, arrangement(3, 8, 2), |a| {
        safe(&a)?;
        if !hypothesis_check(&a).holds {
            return Err(TestCaseError::reject("hypothesis fails"));
        }
        let r = core(a.ring(PrimeField::default_prime()))?;
        ok(core(is_cm(&core(top_comb(&r, &a))?))?, || "top not CM".into())?;
        ok(core(is_cm(&core(radical_comb(&r, &a))?))?, || "radical not CM".into())
    })
}

pub fn liaison_additivity(seed: u64, cases: u32) -> Result<(), String> {
    let s = (arrangement(2, 4, 2), arrangement(2, 4, 3), any::<bool>());
    check(seed, cases, s, |(a, b, radical)| {
        if !arrangement_product_hypotheses(&a, &b).holds {
            return Err(TestCaseError::reject("product hypotheses"));
        }
        let ab = core(product(&a, &b))?;
        safe(&ab)?;
        let r = core(ab.ring(PrimeField::default_prime()))?;
        let comb = |x: &Arrangement| if radical { radical_comb(&r, x) } else { top_comb(&r, x) };
        let (i1, i2) = (core(comb(&a))?, core(comb(&b))?);
        let f1 = core(a.defining_polynomial(&r))?;
        let f2 = core(b.defining_polynomial(&r))?;
        let step = core(liaison_addition(&i1, &f1, &i2, &f2))?;
        ok(core(hilbert_additivity_holds(&step, &i1, Some(&i2), &f1, &f2))?, || "additivity".into())?;
        ok(core(is_saturated(&step.ideal))?, || "not saturated".into())?;
        let (m1, m2) = (core(rao_dimensions(&i1))?, core(rao_dimensions(&i2))?);
        let m = core(rao_dimensions(&step.ideal))?;
        let want = predicted_rao(&m1, step.d2 as i64, &m2, step.d1 as i64);
        ok(m == want, || format!("rao {} vs predicted {}", format_rao(&m), format_rao(&want)))
    })
}

pub fn double_link_shift(seed: u64, cases: u32) -> Result<(), String> {
    let s = (arrangement(2, 7, 2), nonzero_form(7), any::<bool>());
    check(seed, cases, s, |(a, l, radical)| {
        let l = LinearForm::from_ints(&l).unwrap();
        let single = core(Arrangement::new(names(), vec![l.clone()]))?;
        if !arrangement_product_hypotheses(&a, &single).holds {
            return Err(TestCaseError::reject("plane on a flat"));
        }
        let al = core(product(&a, &single))?;
        safe(&al)?;
        let r = core(al.ring(PrimeField::default_prime()))?;
        let i = core(if radical { radical_comb(&r, &a) } else { top_comb(&r, &a) })?;
        let f = core(a.defining_polynomial(&r))?;
        let lp = core(r.linear_poly(&l))?;
        let step = core(basic_double_link(&i, &f, &lp))?;
        ok(core(hilbert_additivity_holds(&step, &i, None, &f, &lp))?, || "additivity".into())?;
        let before = core(rao_dimensions(&i))?;
        let after = core(rao_dimensions(&step.ideal))?;
        ok(after == shift_rao(&before, 1), || format!("{} then {}", format_rao(&before), format_rao(&after)))
    })
}
