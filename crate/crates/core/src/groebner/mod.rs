//! Groebner bases and ideal operations on homogeneous ideals.

pub mod engine;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::homology::hilbert::{monomial_numerator, HilbertData};
use crate::polyring::{Field, LinearForm, ModuleOrder, Monomial, MonomialOrder, Poly, Ring};
pub use engine::{buchberger, reduce_basis, GbElement, GbOptions, GbRun, Origin, Reducer, Vector};

/// Reduced Groebner basis for one monomial order, sorted by leading monomial ascending.
#[derive(Clone, Debug)]
pub struct Gb<E> {
    pub order: MonomialOrder,
    pub polys: Vec<Poly<E>>,
    pub leads: Vec<Monomial>,
}

impl<E> Gb<E> {
    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(|m| m.is_one())
    }

    pub fn max_degree(&self) -> u32 {
        self.leads.iter().map(|m| m.degree()).max().unwrap_or(0)
    }
}

/// Finitely generated homogeneous ideal with cached reduced Groebner bases.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    gens: Vec<Poly<F::Elem>>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<Gb<F::Elem>>>>>,
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| self.ring.format(p)).collect();
        write!(f, "({})", g.join(", "))
    }
}

pub(crate) fn to_vector<F: Field>(field: &F, p: &Poly<F::Elem>, order: &ModuleOrder) -> Vector<F::Elem> {
    engine::normalize_vector(field, order, p.terms().iter().map(|(m, c)| (0, *m, c.clone())).collect())
}

pub(crate) fn from_vector<F: Field>(ring: &Ring<F>, v: &Vector<F::Elem>) -> Poly<F::Elem> {
    ring.normalize(v.terms.iter().map(|(_, m, c)| (*m, c.clone())).collect())
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<Ring<F>>, gens: Vec<Poly<F::Elem>>) -> Result<Self> {
        for g in &gens {
            ring.check(g)?;
            if !g.is_homogeneous() {
                return Err(Error::Validation(format!("generator {} is not homogeneous", ring.format(g))));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, cache: Default::default() })
    }

    /// Ideal whose generators are a known reduced Groebner basis.
    pub(crate) fn from_basis(ring: &Arc<Ring<F>>, order: MonomialOrder, polys: Vec<Poly<F::Elem>>) -> Self {
        let gb = make_gb(ring, order, polys);
        let id = Ideal { ring: ring.clone(), gens: gb.polys.clone(), cache: Default::default() };
        id.cache.lock().unwrap().insert(order, Arc::new(gb));
        id
    }

    pub fn unit(ring: &Arc<Ring<F>>) -> Self {
        Ideal::new(ring, vec![ring.one()]).unwrap()
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn gens(&self) -> &[Poly<F::Elem>] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn groebner(&self, order: MonomialOrder) -> Arc<Gb<F::Elem>> {
        if let Some(g) = self.cache.lock().unwrap().get(&order) {
            return g.clone();
        }
        let gb = Arc::new(compute_gb(&self.ring, &self.gens, order));
        self.cache.lock().unwrap().insert(order, gb.clone());
        gb
    }

    pub fn grevlex(&self) -> Arc<Gb<F::Elem>> {
        self.groebner(MonomialOrder::GrevLex)
    }

    pub fn is_unit(&self) -> bool {
        self.grevlex().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn reducer(&self, order: MonomialOrder) -> PolyReducer<F> {
        PolyReducer::new(&self.ring, &self.groebner(order))
    }

    pub fn contains(&self, f: &Poly<F::Elem>) -> bool {
        self.reducer(MonomialOrder::GrevLex).normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        let mut r = self.reducer(MonomialOrder::GrevLex);
        other.gens.iter().all(|g| r.normal_form(g).is_zero())
    }

    /// Hilbert data of `R/I`.
    pub fn hilbert(&self) -> HilbertData {
        let gb = self.grevlex();
        HilbertData::from_numerator(self.nvars(), monomial_numerator(&gb.leads, self.nvars()), 0)
    }

    pub fn format_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.format(g)).collect()
    }

    /// Generators multiplied by `f`.
    pub fn times(&self, f: &Poly<F::Elem>) -> Result<Ideal<F>> {
        Ideal::new(&self.ring, self.gens.iter().map(|g| self.ring.mul(g, f)).collect())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    /// Image under a linear change of variables (variable `i` goes to `images[i]`).
    pub fn substitute(&self, images: &[LinearForm]) -> Result<Ideal<F>> {
        let g = self
            .gens
            .iter()
            .map(|p| self.ring.apply_linear_substitution(p, images))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, g)
    }
}

fn make_gb<F: Field>(ring: &Ring<F>, order: MonomialOrder, polys: Vec<Poly<F::Elem>>) -> Gb<F::Elem> {
    let mut items: Vec<(Monomial, Poly<F::Elem>)> = polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let p = ring.monic(&p, order);
            (p.lead_monomial(order).unwrap(), p)
        })
        .collect();
    items.sort_by(|a, b| order.cmp(&a.0, &b.0));
    Gb { order, leads: items.iter().map(|x| x.0).collect(), polys: items.into_iter().map(|x| x.1).collect() }
}

fn compute_gb<F: Field>(ring: &Ring<F>, gens: &[Poly<F::Elem>], order: MonomialOrder) -> Gb<F::Elem> {
    let field = ring.field();
    let mo = ModuleOrder::ideal(order);
    let inputs: Vec<Vector<F::Elem>> = gens.iter().map(|g| to_vector(field, g, &mo)).collect();
    let run = buchberger(field, ring.nvars(), &mo, &inputs, &GbOptions::default());
    let reduced = reduce_basis(field, ring.nvars(), &mo, run.elements.into_iter().map(|e| e.vector).collect());
    make_gb(ring, order, reduced.iter().map(|v| from_vector(ring, v)).collect())
}

/// Normal forms of polynomials against a fixed basis.
pub struct PolyReducer<F: Field> {
    ring: Arc<Ring<F>>,
    order: ModuleOrder,
    inner: Reducer<F>,
}

impl<F: Field> PolyReducer<F> {
    pub fn new(ring: &Arc<Ring<F>>, gb: &Gb<F::Elem>) -> Self {
        let order = ModuleOrder::ideal(gb.order);
        let basis: Vec<Vector<F::Elem>> = gb.polys.iter().map(|p| to_vector(ring.field(), p, &order)).collect();
        let inner = Reducer::new(ring.field(), ring.nvars(), &order, &basis);
        PolyReducer { ring: ring.clone(), order, inner }
    }

    pub fn normal_form(&mut self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let v = to_vector(self.ring.field(), f, &self.order);
        from_vector(&self.ring, &self.inner.normal_form(&v))
    }
}

pub fn reduced_groebner<F: Field>(ideal: &Ideal<F>, order: MonomialOrder) -> Vec<Poly<F::Elem>> {
    ideal.groebner(order).polys.clone()
}

pub fn normal_form<F: Field>(ring: &Arc<Ring<F>>, f: &Poly<F::Elem>, basis: &Gb<F::Elem>) -> Poly<F::Elem> {
    PolyReducer::new(ring, basis).normal_form(f)
}

pub fn ideal_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> bool {
    let ga = a.grevlex();
    let gb = b.grevlex();
    ga.polys == gb.polys
}

/// `I ∩ J`: eliminate `t` from `t·I + (h - t)·J` (the homogenization of
/// `t·I + (1 - t)·J`), then strip the powers of `h`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ideal::new(ring, vec![]);
    }
    let n = ring.nvars();
    // variables: t, x_0 .. x_{n-1}, h
    let mut names = vec!["_t".to_string()];
    names.extend(ring.names().iter().cloned());
    names.push("_h".to_string());
    let big = Ring::new(ring.field().clone(), names)?;
    let map: Vec<usize> = (1..=n).collect();
    let lift = |p: &Poly<F::Elem>| -> Poly<F::Elem> {
        big.normalize(p.terms().iter().map(|(m, c)| (m.remap(n + 2, &map), c.clone())).collect())
    };
    let t = big.var(0);
    let h_minus_t = big.sub(&big.var(n + 1), &t);
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(big.mul(&t, &lift(g)));
    }
    for g in b.gens() {
        gens.push(big.mul(&h_minus_t, &lift(g)));
    }
    let gb = compute_gb(&big, &gens, MonomialOrder::Elimination { block: 1 });
    let mut out = Vec::new();
    for p in &gb.polys {
        if p.terms().iter().any(|(m, _)| m.exp(0) > 0) {
            continue;
        }
        let hmin = p.terms().iter().map(|(m, _)| m.exp(n + 1)).min().unwrap();
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut e: Vec<u32> = (1..=n).map(|i| m.exp(i)).collect();
                debug_assert_eq!(m.exp(n + 1), hmin);
                e.truncate(n);
                (Monomial::new(&e), c.clone())
            })
            .collect();
        out.push(ring.normalize(terms));
    }
    let id = Ideal::new(ring, out)?;
    let gb = id.grevlex();
    Ok(Ideal::from_basis(ring, MonomialOrder::GrevLex, gb.polys.clone()))
}

/// Exact quotient `f / g`; `None` if `g` does not divide `f`.
pub fn divide_exact<F: Field>(ring: &Ring<F>, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
    let field = ring.field();
    let (lg, cg) = g.lead()?.clone();
    let inv = field.inv(&cg);
    let mut rem = f.clone();
    let mut q = Vec::new();
    while let Some((lr, cr)) = rem.lead().cloned() {
        let m = lr.checked_div(&lg)?;
        let c = field.mul(&cr, &inv);
        rem = ring.sub(&rem, &ring.mul_term(g, &m, &c));
        q.push((m, c));
    }
    Some(ring.normalize(q))
}

/// `I : J`, one generator of `J` at a time.
pub fn colon<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = a.ring();
    let mut acc: Option<Ideal<F>> = None;
    for g in b.gens() {
        let gi = Ideal::new(ring, vec![g.clone()])?;
        let meet = intersect(a, &gi)?;
        let quo = meet
            .gens()
            .iter()
            .map(|p| divide_exact(ring, p, g).ok_or_else(|| Error::Limit("inexact division in colon".into())))
            .collect::<Result<Vec<_>>>()?;
        let qi = Ideal::new(ring, quo)?;
        acc = Some(match acc {
            None => qi,
            Some(prev) => intersect(&prev, &qi)?,
        });
    }
    match acc {
        Some(i) => Ok(i),
        None => Ok(Ideal::unit(ring)),
    }
}

pub const SATURATION_CAP: usize = 64;

/// `I : J^∞` together with the number of colon steps that changed the ideal.
pub fn saturate<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<(Ideal<F>, usize)> {
    let mut cur = a.clone();
    for k in 0..SATURATION_CAP {
        let next = colon(&cur, b)?;
        if ideal_equal(&next, &cur) {
            return Ok((cur, k));
        }
        cur = next;
    }
    Err(Error::Limit(format!("saturation did not stabilize after {SATURATION_CAP} colon steps")))
}

/// `I : x_i^∞` for the last variable under grevlex: strip powers from the basis.
fn saturate_last_var<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let last = ring.nvars() - 1;
    let gb = ideal.grevlex();
    let gens = gb
        .polys
        .iter()
        .map(|p| {
            let k = p.terms().iter().map(|(m, _)| m.exp(last)).min().unwrap();
            ring.normalize(p.terms().iter().map(|(m, c)| (m.strip_var(last, k), c.clone())).collect())
        })
        .collect();
    Ideal::new(ring, gens)
}

/// `I : ℓ^∞` for a linear form with nonzero last coefficient, via a change of
/// coordinates putting `ℓ` last.
pub fn saturate_linear<F: Field>(ideal: &Ideal<F>, l: &LinearForm) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let field = ring.field();
    let cn = ring.coef(l.coeff(n - 1))?;
    if field.is_zero(&cn) {
        return Err(Error::Validation("linear form must involve the last variable".into()));
    }
    // x_i = y_i (i < n-1), x_{n-1} = (y_{n-1} - sum c_i y_i) / c_{n-1}
    let inv = field.inv(&cn);
    let mut fwd: Vec<Poly<F::Elem>> = (0..n).map(|i| ring.var(i)).collect();
    let mut last = ring.scale(&ring.var(n - 1), &inv);
    for i in 0..n - 1 {
        let c = ring.coef(l.coeff(i))?;
        last = ring.sub(&last, &ring.scale(&ring.var(i), &field.mul(&c, &inv)));
    }
    fwd[n - 1] = last;
    let moved = Ideal::new(ring, ideal.gens().iter().map(|g| ring.substitute(g, &fwd)).collect())?;
    let sat = saturate_last_var(&moved)?;
    let mut back: Vec<Poly<F::Elem>> = (0..n).map(|i| ring.var(i)).collect();
    back[n - 1] = ring.linear_poly(l)?;
    let gens: Vec<Poly<F::Elem>> = sat.gens().iter().map(|g| ring.substitute(g, &back)).collect();
    let id = Ideal::new(ring, gens)?;
    let gb = id.grevlex();
    Ok(Ideal::from_basis(ring, MonomialOrder::GrevLex, gb.polys.clone()))
}

/// `I : 𝔪^∞`. Computed as `I : ℓ^∞` for a seeded random linear form; the result is
/// accepted only when its Hilbert polynomial equals that of `I`, which certifies that
/// no component of positive dimension was removed.
pub fn saturate_irrelevant<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let target = ideal.hilbert();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a7);
    for _ in 0..32 {
        let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-999..=999)).collect();
        if c[n - 1] == 0 {
            c[n - 1] = 1;
        }
        let l = LinearForm::from_ints(&c)?;
        if ring.coef(l.coeff(n - 1)).map(|x| ring.field().is_zero(&x)).unwrap_or(true) {
            continue;
        }
        let s = saturate_linear(ideal, &l)?;
        let h = s.hilbert();
        if h.polynomial == target.polynomial && h.dim == target.dim {
            return Ok(s);
        }
    }
    Err(Error::Limit("saturation certificate failed for 32 random linear forms".into()))
}

/// `I == I^sat`, decided by comparing Hilbert series (`I ⊆ I^sat` always).
pub fn is_saturated<F: Field>(ideal: &Ideal<F>) -> Result<bool> {
    let s = saturate_irrelevant(ideal)?;
    Ok(s.hilbert().numerator == ideal.hilbert().numerator)
}

/// `f ∈ √I` by the Rabinowitsch trick, homogenized: with `e = deg f + 1`,
/// `1 ∈ I + (1 - t f)` exactly when a power of `h` lies in `I + (h^e - t f)`,
/// which shows up as a pure power of `h` in a grevlex basis with `h` last.
pub fn radical_membership_rabinowitsch<F: Field>(f: &Poly<F::Elem>, ideal: &Ideal<F>) -> Result<bool> {
    let ring = ideal.ring();
    ring.check(f)?;
    if f.is_zero() {
        return Ok(true);
    }
    if !f.is_homogeneous() {
        return Err(Error::Validation("radical membership expects a homogeneous polynomial".into()));
    }
    let n = ring.nvars();
    let big = ring.extend(&["_t", "_h"])?;
    let map: Vec<usize> = (0..n).collect();
    let lift = |p: &Poly<F::Elem>| -> Poly<F::Elem> {
        big.normalize(p.terms().iter().map(|(m, c)| (m.remap(n + 2, &map), c.clone())).collect())
    };
    let e = f.degree().unwrap() + 1;
    let mut gens: Vec<Poly<F::Elem>> = ideal.gens().iter().map(&lift).collect();
    let hpow = big.pow(&big.var(n + 1), e);
    gens.push(big.sub(&hpow, &big.mul(&big.var(n), &lift(f))));
    let gb = compute_gb(&big, &gens, MonomialOrder::GrevLex);
    Ok(gb.polys.iter().any(|p| p.len() == 1 && p.terms()[0].0.degree() == p.terms()[0].0.exp(n + 1)))
}

/// `f ∈ √I`. Small powers of `f` are tried first; the Rabinowitsch test decides the rest.
pub fn radical_membership<F: Field>(f: &Poly<F::Elem>, ideal: &Ideal<F>) -> Result<bool> {
    let ring = ideal.ring();
    ring.check(f)?;
    if f.is_zero() {
        return Ok(true);
    }
    // graded pieces separately: √I is homogeneous
    let mut pieces: HashMap<u32, Vec<(Monomial, F::Elem)>> = HashMap::new();
    for (m, c) in f.terms() {
        pieces.entry(m.degree()).or_default().push((*m, c.clone()));
    }
    let mut red = ideal.reducer(MonomialOrder::GrevLex);
    for (_, t) in pieces {
        let g = ring.normalize(t);
        let mut p = g.clone();
        let mut found = false;
        for _ in 0..8 {
            if red.normal_form(&p).is_zero() {
                found = true;
                break;
            }
            p = ring.mul(&p, &g);
        }
        if !found && !radical_membership_rabinowitsch(&g, ideal)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Elimination of the variables in `vars` from arbitrary (possibly inhomogeneous)
/// generators. Inhomogeneous input is homogenized with an extra variable, saturated
/// with respect to it, and dehomogenized at the end.
pub fn eliminate_polys<F: Field>(ring: &Ring<F>, gens: &[Poly<F::Elem>], vars: &[usize]) -> Result<Vec<Poly<F::Elem>>> {
    let n = ring.nvars();
    for &v in vars {
        if v >= n {
            return Err(Error::Ring(format!("variable index {v} out of range")));
        }
    }
    let k = vars.len();
    // new order: eliminated variables first, then the rest, then h
    let mut perm: Vec<usize> = vars.to_vec();
    perm.extend((0..n).filter(|i| !vars.contains(i)));
    let mut pos = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        pos[old] = new;
    }
    let mut names: Vec<String> = perm.iter().map(|&i| ring.names()[i].clone()).collect();
    names.push("_h".into());
    let big = Ring::new(ring.field().clone(), names)?;
    let homog = gens.iter().any(|g| !g.is_homogeneous());
    let lift = |p: &Poly<F::Elem>| -> Poly<F::Elem> {
        let d = p.degree().unwrap_or(0);
        big.normalize(
            p.terms()
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u32; n + 1];
                    for i in 0..n {
                        e[pos[i]] = m.exp(i);
                    }
                    e[n] = d - m.degree();
                    (Monomial::new(&e), c.clone())
                })
                .collect(),
        )
    };
    let lifted: Vec<Poly<F::Elem>> = gens.iter().filter(|g| !g.is_zero()).map(lift).collect();
    let big = Arc::new(big);
    let mut hom = Ideal::new(&big, lifted)?;
    if homog {
        hom = saturate_last_var(&hom)?;
    }
    let gb = compute_gb(&big, hom.gens(), MonomialOrder::Elimination { block: k });
    let mut out = Vec::new();
    for p in &gb.polys {
        if p.terms().iter().any(|(m, _)| (0..k).any(|i| m.exp(i) > 0)) {
            continue;
        }
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for i in 0..n {
                    e[i] = m.exp(pos[i]);
                }
                (Monomial::new(&e), c.clone())
            })
            .collect();
        out.push(ring.normalize(terms));
    }
    Ok(out)
}

pub fn eliminate<F: Field>(ideal: &Ideal<F>, vars: &[usize]) -> Result<Ideal<F>> {
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    let polys = eliminate_polys(ideal.ring(), ideal.gens(), vars)?;
    Ideal::new(ideal.ring(), polys)
}

/// Check Buchberger's criterion directly: every S-polynomial reduces to zero.
pub fn is_groebner<F: Field>(ring: &Arc<Ring<F>>, gb: &Gb<F::Elem>) -> bool {
    let field = ring.field();
    let order = gb.order;
    let mut red = PolyReducer::new(ring, gb);
    for i in 0..gb.polys.len() {
        for j in i + 1..gb.polys.len() {
            let (li, lj) = (gb.leads[i], gb.leads[j]);
            let l = li.lcm(&lj);
            let ci = lead_coef(&gb.polys[i], &li, field);
            let cj = lead_coef(&gb.polys[j], &lj, field);
            let a = ring.mul_term(&gb.polys[i], &li.quotient_of(&l), &field.inv(&ci));
            let b = ring.mul_term(&gb.polys[j], &lj.quotient_of(&l), &field.inv(&cj));
            let s = ring.sub(&a, &b);
            if !red.normal_form(&s).is_zero() {
                return false;
            }
        }
    }
    let _ = order;
    true
}

fn lead_coef<F: Field>(p: &Poly<F::Elem>, m: &Monomial, _field: &F) -> F::Elem {
    p.terms().iter().find(|(t, _)| t == m).unwrap().1.clone()
}
