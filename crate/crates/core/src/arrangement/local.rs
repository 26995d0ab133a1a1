//! Intersections of ideals supported on codimension-2 linear spaces in `P^3`.
//!
//! Each ideal `Q` is extended from `k[s, t]`, where `s, t` span the ideal of a
//! flat. Completing `s, t` by two global linear forms `u, v` gives
//! `R/Q = k[s,t]/Q ⊗ k[u,v]`, so `R/⋂Q` embeds into a free `k[u,v]`-module.
//! The Groebner basis of the intersection is read off degree by degree from the
//! linear relations among images of monomials (processed in increasing order).
//! The loop stops once the Hilbert series of the leading terms matches the
//! Hilbert series of that `k[u,v]`-module, which is computed independently.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::engine::{buchberger, normalize_vector, reduce_basis, GbOptions, Reducer, Vector};
use crate::groebner::{Ideal, PolyReducer};
use crate::homology::hilbert::{monomial_numerator, series_add, series_mul, series_shift, series_sub, one_minus_t_pow};
use crate::polyring::{monomials_of_degree, Field, LinearForm, ModuleOrder, Monomial, MonomialOrder, Poly, Ring};

/// A primary ideal given in the coordinates `s, t` of a flat.
#[derive(Clone, Debug)]
pub struct LocalIdeal<E> {
    pub s: LinearForm,
    pub t: LinearForm,
    /// Generators in the ring `k[s, t]`.
    pub gens: Vec<Poly<E>>,
}

/// `k[s,t]/Q` with multiplication tables for `s` and `t`.
struct LocalAlgebra<E> {
    std_deg: Vec<u32>,
    mult: [Vec<Vec<(usize, E)>>; 2],
}

fn local_algebra<F: Field>(ring2: &Arc<Ring<F>>, gens: &[Poly<F::Elem>]) -> Result<LocalAlgebra<F::Elem>> {
    let q = Ideal::new(ring2, gens.to_vec())?;
    let gb = q.grevlex();
    if gb.is_unit() {
        return Err(Error::Validation("local ideal is the unit ideal".into()));
    }
    let mut std: Vec<Monomial> = Vec::new();
    let mut d = 0;
    loop {
        let layer: Vec<Monomial> = monomials_of_degree(2, d).into_iter().filter(|m| !gb.leads.iter().any(|l| l.divides(m))).collect();
        if layer.is_empty() {
            break;
        }
        std.extend(layer);
        d += 1;
        if d > 200 {
            return Err(Error::Validation("local ideal is not primary to (s, t)".into()));
        }
    }
    let index: HashMap<Monomial, usize> = std.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut red = PolyReducer::new(ring2, &gb);
    let mut mult: [Vec<Vec<(usize, F::Elem)>>; 2] = [Vec::new(), Vec::new()];
    for (v, table) in mult.iter_mut().enumerate() {
        for m in &std {
            let p = ring2.monomial(m.mul(&Monomial::var(2, v)));
            let nf = red.normal_form(&p);
            table.push(nf.terms().iter().map(|(mm, c)| (index[mm], c.clone())).collect());
        }
    }
    Ok(LocalAlgebra { std_deg: std.iter().map(|m| m.degree()).collect(), mult })
}

fn invert<F: Field>(field: &F, mut m: Vec<Vec<F::Elem>>) -> Option<Vec<Vec<F::Elem>>> {
    let n = m.len();
    let mut inv: Vec<Vec<F::Elem>> = (0..n).map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !field.is_zero(&m[r][c]))?;
        m.swap(c, p);
        inv.swap(c, p);
        let pinv = field.inv(&m[c][c]);
        for j in 0..n {
            m[c][j] = field.mul(&m[c][j], &pinv);
            inv[c][j] = field.mul(&inv[c][j], &pinv);
        }
        for r in 0..n {
            if r == c || field.is_zero(&m[r][c]) {
                continue;
            }
            let f = m[r][c].clone();
            for j in 0..n {
                let (a, b) = (m[c][j].clone(), inv[c][j].clone());
                field.mul_sub_assign(&mut m[r][j], &f, &a);
                field.mul_sub_assign(&mut inv[r][j], &f, &b);
            }
        }
    }
    Some(inv)
}

/// One flat in local form: the algebra and the coordinates `(α, β, γ, δ)` of each
/// variable `x_i = α s + β t + γ u + δ v`.
struct Chart<E> {
    alg: LocalAlgebra<E>,
    coords: Vec<[E; 4]>,
}

struct Setup<F: Field> {
    field: F,
    charts: Vec<Chart<F::Elem>>,
    /// Global basis vectors: (chart, standard monomial index).
    basis: Vec<(usize, usize)>,
}

impl<F: Field> Setup<F> {
    fn build(ring: &Ring<F>, locals: &[LocalIdeal<F::Elem>], seed: u64) -> Result<Setup<F>> {
        let field = ring.field().clone();
        let ring2 = Arc::new(Ring::new(field.clone(), vec!["s".into(), "t".into()])?);
        let algs: Vec<LocalAlgebra<F::Elem>> = locals.iter().map(|l| local_algebra(&ring2, &l.gens)).collect::<Result<_>>()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        'retry: for _ in 0..32 {
            let u: Vec<i64> = (0..4).map(|_| rng.gen_range(-999..=999)).collect();
            let v: Vec<i64> = (0..4).map(|_| rng.gen_range(-999..=999)).collect();
            let uf: Vec<F::Elem> = u.iter().map(|&c| field.from_i64(c)).collect();
            let vf: Vec<F::Elem> = v.iter().map(|&c| field.from_i64(c)).collect();
            let mut coords_all = Vec::new();
            for l in locals {
                let s: Vec<F::Elem> = l.s.coeffs().iter().map(|c| ring.coef(c)).collect::<Result<_>>()?;
                let t: Vec<F::Elem> = l.t.coeffs().iter().map(|c| ring.coef(c)).collect::<Result<_>>()?;
                let Some(inv) = invert(&field, vec![s, t, uf.clone(), vf.clone()]) else { continue 'retry };
                // x = inv * (s, t, u, v)
                coords_all.push((0..4).map(|i| [inv[i][0].clone(), inv[i][1].clone(), inv[i][2].clone(), inv[i][3].clone()]).collect::<Vec<_>>());
            }
            let mut basis = Vec::new();
            for (c, a) in algs.iter().enumerate() {
                for k in 0..a.std_deg.len() {
                    basis.push((c, k));
                }
            }
            let charts = algs.into_iter().zip(coords_all).map(|(alg, coords)| Chart { alg, coords }).collect();
            return Ok(Setup { field, charts, basis });
        }
        Err(Error::Limit("no generic complement found after 32 attempts".into()))
    }
}

/// Dense layout of the degree-`d` piece of `⊕ (k[s,t]/Q ⊗ k[u,v])`:
/// slot `(σ, a)` stands for `σ u^a v^{d - deg σ - a}`.
struct Layout {
    offsets: Vec<Option<usize>>,
    len: usize,
}

impl Layout {
    fn new<F: Field>(setup: &Setup<F>, d: u32) -> Layout {
        let mut offsets = Vec::with_capacity(setup.basis.len());
        let mut len = 0;
        for &(c, k) in &setup.basis {
            let e = setup.charts[c].alg.std_deg[k];
            if e > d {
                offsets.push(None);
            } else {
                offsets.push(Some(len));
                len += (d - e + 1) as usize;
            }
        }
        Layout { offsets, len }
    }
}

/// Multiply a degree `d-1` element by `x_var`, giving a degree `d` element.
fn mul_var<F: Field>(setup: &Setup<F>, lo: &Layout, hi: &Layout, d: u32, vec: &[F::Elem], var: usize) -> Vec<F::Elem> {
    let field = &setup.field;
    let mut out = vec![field.zero(); hi.len];
    let mut g = 0;
    for (ci, chart) in setup.charts.iter().enumerate() {
        let n = chart.alg.std_deg.len();
        let [al, be, ga, de] = &chart.coords[var];
        for k in 0..n {
            let gi = g + k;
            let Some(off) = lo.offsets[gi] else { continue };
            let e = chart.alg.std_deg[k];
            let width = (d - 1 - e + 1) as usize;
            let hoff = hi.offsets[gi].unwrap();
            for a in 0..width {
                let x = &vec[off + a];
                if field.is_zero(x) {
                    continue;
                }
                // u and v parts
                if !field.is_zero(ga) {
                    let t = field.mul(x, ga);
                    out[hoff + a + 1] = field.add(&out[hoff + a + 1], &t);
                }
                if !field.is_zero(de) {
                    let t = field.mul(x, de);
                    out[hoff + a] = field.add(&out[hoff + a], &t);
                }
                for (coef, table) in [(al, &chart.alg.mult[0]), (be, &chart.alg.mult[1])] {
                    if field.is_zero(coef) {
                        continue;
                    }
                    let xc = field.mul(x, coef);
                    for (j, c) in &table[k] {
                        let hj = hi.offsets[g + j].unwrap();
                        let t = field.mul(&xc, c);
                        out[hj + a] = field.add(&out[hj + a], &t);
                    }
                }
            }
        }
        g += n;
        let _ = ci;
    }
    out
}

/// Image of `1` in degree 0.
fn unit_image<F: Field>(setup: &Setup<F>, layout: &Layout) -> Vec<F::Elem> {
    let mut v = vec![setup.field.zero(); layout.len];
    for (gi, &(c, k)) in setup.basis.iter().enumerate() {
        if setup.charts[c].alg.std_deg[k] == 0 {
            v[layout.offsets[gi].unwrap()] = setup.field.one();
        }
    }
    v
}

/// Hilbert series numerator (over `(1-t)^4`) of `R / ⋂ Q`, from the `k[u,v]`-module
/// generated by the images of monomials in two complementary variables.
fn target_numerator<F: Field>(setup: &Setup<F>) -> Result<Vec<i64>> {
    let field = &setup.field;
    // pick coordinates a, b with (u, v, x_a, x_b) independent: in every chart the
    // (s, t) part of x_a, x_b must be invertible. Try all pairs.
    let mut pair = None;
    'p: for a in 0..4 {
        for b in a + 1..4 {
            let mut ok = true;
            for ch in &setup.charts {
                let m = vec![vec![ch.coords[a][0].clone(), ch.coords[a][1].clone()], vec![ch.coords[b][0].clone(), ch.coords[b][1].clone()]];
                if invert(field, m).is_none() {
                    ok = false;
                    break;
                }
            }
            if ok {
                pair = Some((a, b));
                break 'p;
            }
        }
    }
    let Some((a, b)) = pair else {
        return Err(Error::Limit("no coordinate pair complements the chosen forms".into()));
    };
    let twists: Vec<i32> = setup.basis.iter().map(|&(c, k)| setup.charts[c].alg.std_deg[k] as i32).collect();
    let order = ModuleOrder::top(MonomialOrder::GrevLex, twists.clone());
    let uvar = Monomial::var(2, 0);
    let vvar = Monomial::var(2, 1);
    // module element: terms (global index, monomial in u, v, coefficient)
    let mul = |elem: &Vector<F::Elem>, var: usize| -> Vector<F::Elem> {
        let mut offs = Vec::with_capacity(setup.charts.len());
        let mut g = 0;
        for ch in &setup.charts {
            offs.push(g);
            g += ch.alg.std_deg.len();
        }
        let mut t = Vec::new();
        for (gi, m, x) in &elem.terms {
            let (c, k) = setup.basis[*gi as usize];
            let ch = &setup.charts[c];
            let [al, be, ga, de] = &ch.coords[var];
            if !field.is_zero(ga) {
                t.push((*gi, m.mul(&uvar), field.mul(x, ga)));
            }
            if !field.is_zero(de) {
                t.push((*gi, m.mul(&vvar), field.mul(x, de)));
            }
            for (coef, table) in [(al, &ch.alg.mult[0]), (be, &ch.alg.mult[1])] {
                if field.is_zero(coef) {
                    continue;
                }
                for (j, cc) in &table[k] {
                    t.push(((offs[c] + j) as u32, *m, field.mul(&field.mul(x, coef), cc)));
                }
            }
        }
        normalize_vector(field, &order, t)
    };
    let one = {
        let t = setup
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &(c, k))| setup.charts[c].alg.std_deg[k] == 0)
            .map(|(gi, _)| (gi as u32, Monomial::one(2), field.one()))
            .collect();
        normalize_vector(field, &order, t)
    };
    let mut gens: Vec<Vector<F::Elem>> = vec![one.clone()];
    let mut layer: Vec<Vector<F::Elem>> = vec![one];
    let mut basis: Vec<Vector<F::Elem>>;
    loop {
        let run = buchberger(field, 2, &order, &gens, &GbOptions::default());
        basis = reduce_basis(field, 2, &order, run.elements.into_iter().map(|e| e.vector).collect());
        // next layer: a^i b^j with i + j = k, as a * (first) and b * (all)
        let mut next = Vec::with_capacity(layer.len() + 1);
        next.push(mul(&layer[0], a));
        for l in &layer {
            next.push(mul(l, b));
        }
        let mut red = Reducer::new(field, 2, &order, &basis);
        if next.iter().all(|v| red.is_zero_mod(v)) {
            break;
        }
        // the previous basis plus the new layer generate the enlarged module
        gens = basis.clone();
        gens.extend(next.iter().cloned());
        layer = next;
        if layer.len() > 400 {
            return Err(Error::Limit("module generation did not stabilize".into()));
        }
    }
    // HS(M) = HS(F) - HS(F/M), all over (1-t)^2
    let mut leads: Vec<Vec<Monomial>> = vec![Vec::new(); twists.len()];
    for v in &basis {
        let (c, m) = v.lead().unwrap();
        leads[c as usize].push(m);
    }
    let mut num: Vec<i64> = Vec::new();
    for (c, l) in leads.iter().enumerate() {
        let free = series_shift(&[1], twists[c] as usize);
        let quo = series_shift(&monomial_numerator(l, 2), twists[c] as usize);
        num = series_add(&num, &series_sub(&free, &quo));
    }
    Ok(series_mul(&num, &one_minus_t_pow(2)))
}

/// `⋂ Q` for ideals extended from the coordinates of flats, as a reduced grevlex basis.
pub fn intersect_local<F: Field>(ring: &Arc<Ring<F>>, locals: &[LocalIdeal<F::Elem>], seed: u64) -> Result<Ideal<F>> {
    if ring.nvars() != 4 {
        return Err(Error::Validation("flat intersections are implemented in four variables".into()));
    }
    if locals.is_empty() {
        return Ok(Ideal::unit(ring));
    }
    let setup = Setup::build(ring, locals, seed)?;
    let target = target_numerator(&setup)?;
    let field = setup.field.clone();
    let grevlex = MonomialOrder::GrevLex;

    let mut leads: Vec<Monomial> = Vec::new();
    let mut basis: Vec<Poly<F::Elem>> = Vec::new();
    let mut lo = Layout::new(&setup, 0);
    let mut prev: HashMap<Monomial, Vec<F::Elem>> = HashMap::new();
    prev.insert(Monomial::one(4), unit_image(&setup, &lo));
    let mut d = 0u32;
    loop {
        if monomial_numerator(&leads, 4) == target {
            break;
        }
        d += 1;
        if d > 250 {
            return Err(Error::Limit("intersection degree bound exceeded".into()));
        }
        let hi = Layout::new(&setup, d);
        let mut cands: Vec<Monomial> = monomials_of_degree(4, d).into_iter().filter(|m| !leads.iter().any(|l| l.divides(m))).collect();
        cands.sort_by(|a, b| grevlex.cmp(a, b));
        // echelon rows: (pivot, row, combination over standard monomials)
        let mut pivots: Vec<Option<usize>> = vec![None; hi.len];
        let mut rows: Vec<(Vec<F::Elem>, Vec<F::Elem>)> = Vec::new();
        let mut std: Vec<Monomial> = Vec::new();
        let mut cur: HashMap<Monomial, Vec<F::Elem>> = HashMap::new();
        let mut new_leads = Vec::new();
        for m in cands {
            let var = (0..4).rev().find(|&i| m.exp(i) > 0).unwrap();
            let below = m.strip_var(var, 1);
            let img = mul_var(&setup, &lo, &hi, d, &prev[&below], var);
            let mut vec = img.clone();
            let mut comb: Vec<F::Elem> = vec![field.zero(); std.len()];
            let mut lead = None;
            for p in 0..hi.len {
                if field.is_zero(&vec[p]) {
                    continue;
                }
                match pivots[p] {
                    Some(r) => {
                        let f = vec[p].clone();
                        let (row, rc) = &rows[r];
                        for q in p..hi.len {
                            if !field.is_zero(&row[q]) {
                                field.mul_sub_assign(&mut vec[q], &f, &row[q]);
                            }
                        }
                        for (q, x) in rc.iter().enumerate() {
                            if !field.is_zero(x) {
                                field.mul_sub_assign(&mut comb[q], &f, x);
                            }
                        }
                    }
                    None => {
                        lead = Some(p);
                        break;
                    }
                }
            }
            match lead {
                None => {
                    // m + Σ comb_q std_q lies in the intersection
                    let mut terms = vec![(m, field.one())];
                    for (q, c) in comb.into_iter().enumerate() {
                        if !field.is_zero(&c) {
                            terms.push((std[q], c));
                        }
                    }
                    basis.push(ring.normalize(terms));
                    new_leads.push(m);
                }
                Some(p) => {
                    let k = std.len();
                    std.push(m);
                    comb.push(field.one());
                    let inv = field.inv(&vec[p]);
                    for x in vec.iter_mut().skip(p) {
                        *x = field.mul(x, &inv);
                    }
                    for x in comb.iter_mut() {
                        *x = field.mul(x, &inv);
                    }
                    pivots[p] = Some(rows.len());
                    rows.push((vec, comb));
                    cur.insert(m, img);
                    let _ = k;
                }
            }
        }
        leads.extend(new_leads);
        prev = cur;
        lo = hi;
    }
    let _ = Vector::<F::Elem>::zero;
    Ok(Ideal::from_basis(ring, MonomialOrder::GrevLex, basis))
}
