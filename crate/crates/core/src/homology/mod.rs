//! Free resolutions, Betti tables, Hilbert data and Hartshorne-Rao dimensions.

pub mod hilbert;
pub mod resolution;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::engine::{buchberger, normalize_vector, reduce_basis, GbOptions, Vector};
use crate::groebner::Ideal;
use crate::polyring::{Field, ModuleOrder, Monomial, MonomialOrder};
pub use hilbert::{monomial_numerator, HilbertData};
pub use resolution::{schreyer_syzygies, BettiTable, GradedMap, Resolution};

pub fn minimal_free_resolution<F: Field>(ideal: &Ideal<F>) -> Resolution<F> {
    Resolution::minimal(ideal)
}

pub fn betti_table<F: Field>(res: &Resolution<F>) -> BettiTable {
    res.betti()
}

pub fn hilbert<F: Field>(ideal: &Ideal<F>) -> HilbertData {
    ideal.hilbert()
}

/// Krull dimension, codimension and projective dimension of `R/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Dimensions {
    pub krull: usize,
    pub codim: usize,
    pub projective: usize,
}

pub fn dimensions<F: Field>(ideal: &Ideal<F>) -> Result<Dimensions> {
    if ideal.is_unit() {
        return Err(Error::Validation("the unit ideal has no quotient ring".into()));
    }
    let krull = ideal.hilbert().dim;
    let pd = Resolution::minimal(ideal).length();
    Ok(Dimensions { krull, codim: ideal.nvars() - krull, projective: pd })
}

/// Cohen-Macaulay test: projective dimension equals codimension.
pub fn is_cm<F: Field>(ideal: &Ideal<F>) -> Result<bool> {
    let d = dimensions(ideal)?;
    Ok(d.projective == d.codim)
}

/// Same test from data already at hand.
pub fn is_cm_from(betti: &BettiTable, hilbert: &HilbertData) -> bool {
    betti.projective_dimension() == hilbert.nvars - hilbert.dim
}

/// Graded dimensions of the Hartshorne-Rao module, degree to dimension.
pub type RaoTable = BTreeMap<i64, u64>;

/// Hartshorne-Rao dimensions of the curve `V(I)` in four variables, read off the
/// dual of the last map of the minimal resolution of `R/I`.
pub fn rao_dimensions<F: Field>(ideal: &Ideal<F>) -> Result<RaoTable> {
    let res = Resolution::minimal(ideal);
    rao_from_resolution(ideal, &res)
}

pub fn rao_from_resolution<F: Field>(ideal: &Ideal<F>, res: &Resolution<F>) -> Result<RaoTable> {
    let n = ideal.nvars();
    if n != 4 {
        return Err(Error::Validation(format!("Rao dimensions need 4 variables, got {n}")));
    }
    let h = ideal.hilbert();
    if n - h.dim != 2 {
        return Err(Error::Validation(format!("ideal has codimension {}, not 2", n - h.dim)));
    }
    let pd = res.length();
    if pd > 3 {
        return Err(Error::Validation(format!("projective dimension {pd} exceeds 3")));
    }
    if pd <= 2 {
        return Ok(RaoTable::new());
    }
    let last = &res.maps[2];
    let field = ideal.field();
    // F3^dual = ⊕ R(a_k), shifted by c so that all twists are non-negative
    let c = *last.source.iter().max().unwrap();
    let twists: Vec<i32> = last.source.iter().map(|a| c - a).collect();
    let order = ModuleOrder::top(MonomialOrder::GrevLex, twists.clone());
    let mut rows: Vec<Vec<(u32, Monomial, F::Elem)>> = vec![Vec::new(); last.target.len()];
    for (k, col) in last.columns.iter().enumerate() {
        for (l, m, x) in &col.terms {
            rows[*l as usize].push((k as u32, *m, x.clone()));
        }
    }
    let gens: Vec<Vector<F::Elem>> = rows.into_iter().map(|t| normalize_vector(field, &order, t)).filter(|v| !v.is_zero()).collect();
    let run = buchberger(field, n, &order, &gens, &GbOptions::default());
    let basis = reduce_basis(field, n, &order, run.elements.into_iter().map(|e| e.vector).collect());
    let mut leads: Vec<Vec<Monomial>> = vec![Vec::new(); twists.len()];
    for v in &basis {
        let (k, m) = v.lead().unwrap();
        leads[k as usize].push(m);
    }
    // Hilbert series of the cokernel: Σ t^{tw_k} N_k(t) / (1-t)^n
    let mut num: Vec<i64> = Vec::new();
    for (k, l) in leads.iter().enumerate() {
        let nk = hilbert::series_shift(&monomial_numerator(l, n), twists[k] as usize);
        num = hilbert::series_add(&num, &nk);
    }
    // finite length: the series is a polynomial
    let mut series = num.clone();
    for _ in 0..n {
        let mut acc = 0i64;
        for x in series.iter_mut() {
            acc += *x;
            *x = acc;
        }
    }
    if series.iter().rev().take(n).any(|&x| x != 0) && !series.is_empty() {
        return Err(Error::Validation("Hartshorne-Rao module is not of finite length".into()));
    }
    let mut table = RaoTable::new();
    for (s, &d) in series.iter().enumerate() {
        if d != 0 {
            table.insert(c as i64 - s as i64 - 4, d as u64);
        }
    }
    Ok(table)
}

pub fn format_rao(t: &RaoTable) -> String {
    if t.is_empty() {
        return "{}".into();
    }
    let parts: Vec<String> = t.iter().map(|(d, v)| format!("{d} -> {v}")).collect();
    format!("{{{}}}", parts.join(", "))
}
