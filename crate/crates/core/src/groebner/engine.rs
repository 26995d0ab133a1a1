//! Homogeneous Buchberger over graded free modules.
//!
//! Work proceeds one degree at a time. Inside a degree every vector lives in a dense
//! array indexed by the position of its terms in the module order, so reduction is a
//! single left-to-right sweep.

use std::collections::BTreeMap;

use crate::polyring::{monomials_of_degree, Binomials, Field, ModuleOrder, Monomial};

/// Sparse module element; terms sorted descending in the ambient module order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<E> {
    pub terms: Vec<(u32, Monomial, E)>,
}

impl<E> Vector<E> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(u32, Monomial)> {
        self.terms.first().map(|(c, m, _)| (*c, *m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Twisted degree of a homogeneous vector; `None` for zero or inhomogeneous input.
pub fn vector_degree<E>(v: &Vector<E>, twists: &[i32]) -> Option<u32> {
    let mut d = None;
    for (c, m, _) in &v.terms {
        let e = m.degree() as i64 + twists[*c as usize] as i64;
        if e < 0 {
            return None;
        }
        match d {
            None => d = Some(e),
            Some(x) if x != e => return None,
            _ => {}
        }
    }
    d.map(|x| x as u32)
}

/// Sort terms by the module order and drop zeros; duplicates are summed.
pub fn normalize_vector<F: Field>(field: &F, order: &ModuleOrder, mut terms: Vec<(u32, Monomial, F::Elem)>) -> Vector<F::Elem> {
    terms.sort_by(|a, b| order.cmp(b.0, &b.1, a.0, &a.1));
    let mut out: Vec<(u32, Monomial, F::Elem)> = Vec::with_capacity(terms.len());
    for (c, m, x) in terms {
        if let Some(last) = out.last_mut() {
            if last.0 == c && last.1 == m {
                last.2 = field.add(&last.2, &x);
                continue;
            }
        }
        out.push((c, m, x));
    }
    out.retain(|t| !field.is_zero(&t.2));
    Vector { terms: out }
}

/// All terms of one twisted degree, indexed by their rank in the module order.
pub(crate) struct Space {
    offsets: Vec<Option<usize>>,
    pos_of_idx: Vec<u32>,
    pub(crate) terms: Vec<(u32, Monomial)>,
}

impl Space {
    pub(crate) fn build(d: u32, nvars: usize, order: &ModuleOrder) -> Space {
        let mut offsets = Vec::with_capacity(order.rank());
        let mut by_idx: Vec<(u32, Monomial)> = Vec::new();
        for (c, &tw) in order.twists.iter().enumerate() {
            let k = d as i64 - tw as i64;
            if k < 0 {
                offsets.push(None);
                continue;
            }
            offsets.push(Some(by_idx.len()));
            for m in monomials_of_degree(nvars, k as u32) {
                by_idx.push((c as u32, m));
            }
        }
        let mut perm: Vec<u32> = (0..by_idx.len() as u32).collect();
        perm.sort_by(|&a, &b| {
            let (ca, ma) = &by_idx[a as usize];
            let (cb, mb) = &by_idx[b as usize];
            order.cmp(*cb, mb, *ca, ma)
        });
        let mut pos_of_idx = vec![0u32; by_idx.len()];
        for (p, &i) in perm.iter().enumerate() {
            pos_of_idx[i as usize] = p as u32;
        }
        let terms = perm.iter().map(|&i| by_idx[i as usize]).collect();
        Space { offsets, pos_of_idx, terms }
    }

    #[inline]
    pub(crate) fn pos(&self, c: u32, m: &Monomial) -> usize {
        let off = self.offsets[c as usize].expect("term outside the graded piece");
        self.pos_of_idx[off + Binomials::shared().rank(m)] as usize
    }

    pub(crate) fn len(&self) -> usize {
        self.terms.len()
    }
}

/// A degree slice together with the choice of reducer for every term.
pub(crate) struct Level {
    pub(crate) space: Space,
    pub(crate) reducer: Vec<u32>,
}

pub(crate) const NONE: u32 = u32::MAX;

impl Level {
    /// `basis` holds monic vectors with their twisted degrees.
    pub(crate) fn build<E>(d: u32, nvars: usize, order: &ModuleOrder, basis: &[(Vector<E>, u32)], active: &[bool]) -> Level {
        let space = Space::build(d, nvars, order);
        let mut reducer = vec![NONE; space.len()];
        let mut idx: Vec<usize> = (0..basis.len()).filter(|&i| active[i] && basis[i].1 <= d).collect();
        idx.sort_by_key(|&i| (basis[i].0.len(), i));
        for i in idx {
            let (c, lm) = basis[i].0.lead().unwrap();
            let k = d - basis[i].1;
            for q in monomials_of_degree(nvars, k) {
                let p = space.pos(c, &q.mul(&lm));
                if reducer[p] == NONE {
                    reducer[p] = i as u32;
                }
            }
        }
        Level { space, reducer }
    }

    /// Full reduction of `dense` (entries after `start`) against the reducer table.
    /// Entries are consumed from `dense` and returned in order.
    pub(crate) fn reduce<F: Field>(&self, field: &F, basis: &[(Vector<F::Elem>, u32)], dense: &mut [F::Elem], start: usize, skip_first: Option<usize>) -> Vec<(u32, Monomial, F::Elem)> {
        let mut out = Vec::new();
        for pos in start..dense.len() {
            if field.is_zero(&dense[pos]) {
                continue;
            }
            let r = self.reducer[pos];
            if r == NONE || Some(pos) == skip_first {
                let (c, m) = self.space.terms[pos];
                out.push((c, m, std::mem::replace(&mut dense[pos], field.zero())));
                continue;
            }
            let coef = std::mem::replace(&mut dense[pos], field.zero());
            let b = &basis[r as usize].0;
            let (_, lm) = b.lead().unwrap();
            let q = lm.quotient_of(&self.space.terms[pos].1);
            for (c, m, x) in &b.terms[1..] {
                let p = self.space.pos(*c, &q.mul(m));
                field.mul_sub_assign(&mut dense[p], &coef, x);
            }
        }
        out
    }

    pub(crate) fn scatter<F: Field>(&self, field: &F, dense: &mut [F::Elem], v: &Vector<F::Elem>, q: &Monomial, scale: &F::Elem, start: &mut usize) {
        for (c, m, x) in &v.terms {
            let p = self.space.pos(*c, &q.mul(m));
            let t = field.mul(x, scale);
            dense[p] = field.add(&dense[p], &t);
            if p < *start {
                *start = p;
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: u32,
    j: u32,
    comp: u32,
    lcm: Monomial,
}

/// Where a basis element came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Input(usize),
    /// S-pair whose lcm lies in the given block.
    Pair { block: u32 },
}

#[derive(Clone, Debug)]
pub struct GbElement<E> {
    pub vector: Vector<E>,
    pub degree: u32,
    pub origin: Origin,
}

#[derive(Clone, Debug)]
pub struct GbRun<E> {
    pub elements: Vec<GbElement<E>>,
    /// Inputs that were not in the span of earlier material, in input order.
    pub minimal_inputs: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Skip all work above this twisted degree.
    pub degree_limit: Option<u32>,
}

/// Buchberger with Gebauer-Moeller pair pruning on homogeneous inputs.
pub fn buchberger<F: Field>(field: &F, nvars: usize, order: &ModuleOrder, inputs: &[Vector<F::Elem>], opts: &GbOptions) -> GbRun<F::Elem> {
    let rank1 = order.rank() == 1;
    let mut basis: Vec<(Vector<F::Elem>, u32)> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut origins: Vec<Origin> = Vec::new();
    let mut pairs: BTreeMap<u32, Vec<Pair>> = BTreeMap::new();
    let mut minimal_inputs = Vec::new();

    let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (k, v) in inputs.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let d = vector_degree(v, &order.twists).expect("inhomogeneous input to the Groebner engine");
        by_degree.entry(d).or_default().push(k);
    }

    loop {
        let next_pair = pairs.keys().next().copied();
        let next_input = by_degree.keys().next().copied();
        let d = match (next_pair, next_input) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if let Some(lim) = opts.degree_limit {
            if d > lim {
                break;
            }
        }
        let mut level = Level::build(d, nvars, order, &basis, &active);
        let mut dense = vec![field.zero(); level.space.len()];

        let mut todo = pairs.remove(&d).unwrap_or_default();
        todo.sort_by(|a, b| order.cmp(a.comp, &a.lcm, b.comp, &b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))));
        for pr in todo {
            let (gi, _) = &basis[pr.i as usize];
            let (gj, _) = &basis[pr.j as usize];
            let qi = gi.lead().unwrap().1.quotient_of(&pr.lcm);
            let qj = gj.lead().unwrap().1.quotient_of(&pr.lcm);
            let mut start = usize::MAX;
            level.scatter(field, &mut dense, gi, &qi, &field.one(), &mut start);
            level.scatter(field, &mut dense, gj, &qj, &field.neg(&field.one()), &mut start);
            let terms = level.reduce(field, &basis, &mut dense, start, None);
            if terms.is_empty() {
                continue;
            }
            let block = order.blocks[pr.comp as usize];
            insert(field, order, rank1, &mut basis, &mut active, &mut origins, &mut pairs, &mut level, terms, d, Origin::Pair { block });
        }
        if let Some(list) = by_degree.remove(&d) {
            for k in list {
                let mut start = usize::MAX;
                level.scatter(field, &mut dense, &inputs[k], &Monomial::one(nvars), &field.one(), &mut start);
                let terms = level.reduce(field, &basis, &mut dense, start, None);
                if terms.is_empty() {
                    continue;
                }
                minimal_inputs.push(k);
                insert(field, order, rank1, &mut basis, &mut active, &mut origins, &mut pairs, &mut level, terms, d, Origin::Input(k));
            }
        }
    }
    let elements = basis
        .into_iter()
        .zip(origins)
        .map(|((vector, degree), origin)| GbElement { vector, degree, origin })
        .collect();
    GbRun { elements, minimal_inputs }
}

#[allow(clippy::too_many_arguments)]
fn insert<F: Field>(
    field: &F,
    order: &ModuleOrder,
    rank1: bool,
    basis: &mut Vec<(Vector<F::Elem>, u32)>,
    active: &mut Vec<bool>,
    origins: &mut Vec<Origin>,
    pairs: &mut BTreeMap<u32, Vec<Pair>>,
    level: &mut Level,
    mut terms: Vec<(u32, Monomial, F::Elem)>,
    d: u32,
    origin: Origin,
) {
    let inv = field.inv(&terms[0].2);
    if !field.is_one(&inv) {
        for t in terms.iter_mut() {
            t.2 = field.mul(&t.2, &inv);
        }
    }
    let k = basis.len();
    let (ck, lk) = (terms[0].0, terms[0].1);
    let lead_pos = level.space.pos(ck, &lk);
    level.reducer[lead_pos] = k as u32;

    // B-criterion on queued pairs
    for list in pairs.values_mut() {
        list.retain(|p| {
            if p.comp != ck || !lk.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i as usize].0.lead().unwrap().1;
            let lj = basis[p.j as usize].0.lead().unwrap().1;
            li.lcm(&lk) == p.lcm || lj.lcm(&lk) == p.lcm
        });
    }
    pairs.retain(|_, l| !l.is_empty());

    // new pairs with chain and product criteria
    let mut cand: Vec<(u32, Monomial, bool)> = Vec::new();
    for (i, (g, _)) in basis.iter().enumerate() {
        if !active[i] {
            continue;
        }
        let (ci, li) = g.lead().unwrap();
        if ci != ck {
            continue;
        }
        cand.push((i as u32, li.lcm(&lk), rank1 && li.coprime(&lk)));
    }
    let mut kept: Vec<(u32, Monomial, bool)> = Vec::new();
    let mut rest = cand;
    while let Some(p) = rest.pop() {
        let dominated = !p.2
            && rest.iter().chain(kept.iter()).any(|q| q.1.divides(&p.1));
        if !dominated {
            kept.push(p);
        }
    }
    for (i, lcm, coprime) in kept {
        if coprime {
            continue;
        }
        let deg = (lcm.degree() as i64 + order.twists[ck as usize] as i64) as u32;
        pairs.entry(deg).or_default().push(Pair { i, j: k as u32, comp: ck, lcm });
    }

    basis.push((Vector { terms }, d));
    active.push(true);
    origins.push(origin);
}

/// Drop elements with divisible leads and tail-reduce the rest; sorted by lead ascending.
pub fn reduce_basis<F: Field>(field: &F, nvars: usize, order: &ModuleOrder, elems: Vec<Vector<F::Elem>>) -> Vec<Vector<F::Elem>> {
    let mut items: Vec<(Vector<F::Elem>, u32)> = elems
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| {
            let d = vector_degree(&v, &order.twists).expect("inhomogeneous basis element");
            (v, d)
        })
        .collect();
    items.sort_by(|a, b| {
        let (ca, ma) = a.0.lead().unwrap();
        let (cb, mb) = b.0.lead().unwrap();
        order.cmp(ca, &ma, cb, &mb)
    });
    let mut keep = vec![true; items.len()];
    for i in 0..items.len() {
        let (ci, li) = items[i].0.lead().unwrap();
        for j in 0..i {
            if !keep[j] {
                continue;
            }
            let (cj, lj) = items[j].0.lead().unwrap();
            if ci == cj && lj.divides(&li) {
                keep[i] = false;
                break;
            }
        }
    }
    let items: Vec<(Vector<F::Elem>, u32)> = items
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|((v, d), _)| {
            let inv = field.inv(&v.terms[0].2);
            let t = v.terms.iter().map(|(c, m, x)| (*c, *m, field.mul(x, &inv))).collect();
            (Vector { terms: t }, d)
        })
        .collect();
    let active = vec![true; items.len()];
    let mut degrees: Vec<u32> = items.iter().map(|x| x.1).collect();
    degrees.sort();
    degrees.dedup();
    let mut out: Vec<Vector<F::Elem>> = items.iter().map(|x| x.0.clone()).collect();
    for d in degrees {
        let level = Level::build(d, nvars, order, &items, &active);
        let mut dense = vec![field.zero(); level.space.len()];
        for (k, (v, dv)) in items.iter().enumerate() {
            if *dv != d || v.len() == 1 {
                continue;
            }
            let mut start = usize::MAX;
            level.scatter(field, &mut dense, v, &Monomial::one(nvars), &field.one(), &mut start);
            let lead_pos = level.space.pos(v.terms[0].0, &v.terms[0].1);
            let terms = level.reduce(field, &items, &mut dense, start, Some(lead_pos));
            out[k] = Vector { terms };
        }
    }
    out
}

/// Normal forms against a fixed Groebner basis, with degree slices cached.
pub struct Reducer<F: Field> {
    field: F,
    nvars: usize,
    order: ModuleOrder,
    basis: Vec<(Vector<F::Elem>, u32)>,
    levels: std::collections::HashMap<u32, Level>,
}

impl<F: Field> Reducer<F> {
    pub fn new(field: &F, nvars: usize, order: &ModuleOrder, basis: &[Vector<F::Elem>]) -> Self {
        let basis = basis
            .iter()
            .filter(|v| !v.is_zero())
            .map(|v| {
                let d = vector_degree(v, &order.twists).expect("inhomogeneous basis element");
                let inv = field.inv(&v.terms[0].2);
                let t = v.terms.iter().map(|(c, m, x)| (*c, *m, field.mul(x, &inv))).collect();
                (Vector { terms: t }, d)
            })
            .collect();
        Reducer { field: field.clone(), nvars, order: order.clone(), basis, levels: Default::default() }
    }

    /// Normal form of a vector; inhomogeneous input is split into graded pieces.
    pub fn normal_form(&mut self, v: &Vector<F::Elem>) -> Vector<F::Elem> {
        let mut pieces: BTreeMap<u32, Vec<(u32, Monomial, F::Elem)>> = BTreeMap::new();
        for (c, m, x) in &v.terms {
            let d = (m.degree() as i64 + self.order.twists[*c as usize] as i64) as u32;
            pieces.entry(d).or_default().push((*c, *m, x.clone()));
        }
        let mut out = Vec::new();
        let active = vec![true; self.basis.len()];
        for (d, terms) in pieces.into_iter().rev() {
            let (nvars, order, basis) = (self.nvars, &self.order, &self.basis);
            let level = self.levels.entry(d).or_insert_with(|| Level::build(d, nvars, order, basis, &active));
            let mut dense = vec![self.field.zero(); level.space.len()];
            let mut start = usize::MAX;
            let one = Monomial::one(self.nvars);
            level.scatter(&self.field, &mut dense, &Vector { terms }, &one, &self.field.one(), &mut start);
            out.extend(level.reduce(&self.field, &self.basis, &mut dense, start, None));
        }
        out.sort_by(|a, b| self.order.cmp(b.0, &b.1, a.0, &a.1));
        Vector { terms: out }
    }

    pub fn is_zero_mod(&mut self, v: &Vector<F::Elem>) -> bool {
        self.normal_form(v).is_zero()
    }
}

/// Compare two reduced bases as sets.
pub fn same_basis<E: PartialEq>(a: &[Vector<E>], b: &[Vector<E>]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}
