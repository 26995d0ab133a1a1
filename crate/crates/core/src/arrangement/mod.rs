//! Hyperplane arrangements in `P^3`: flats, Jacobian ideals and the combinatorial
//! ideals supported on the singular locus.

pub mod graph;
pub mod local;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{intersect, Ideal};
use crate::polyring::{monomials_of_degree, parse_linear_form, Field, LinearForm, PrimeField, Rationals, Ring};
pub use graph::{graphic_arrangement, parse_graph, triangle_condition, Graph, TriangleReport};
pub use local::{intersect_local, LocalIdeal};

/// Seed for the complement forms used by [`intersect_local`].
pub const LOCAL_SEED: u64 = 0x1d5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    names: Vec<String>,
    forms: Vec<LinearForm>,
}

impl Arrangement {
    /// Validates pairwise independence; dependent pairs are reported 1-based.
    pub fn new(names: Vec<String>, forms: Vec<LinearForm>) -> Result<Self> {
        let lines: Vec<usize> = (1..=forms.len()).collect();
        Self::with_lines(names, forms, &lines)
    }

    fn with_lines(names: Vec<String>, forms: Vec<LinearForm>, lines: &[usize]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Validation("arrangements need at least one variable".into()));
        }
        for f in &forms {
            if f.nvars() != names.len() {
                return Err(Error::Validation("form has the wrong number of variables".into()));
            }
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                if forms[i].proportional(&forms[j]) {
                    return Err(Error::Dependent { first: lines[i], second: lines[j] });
                }
            }
        }
        Ok(Arrangement { names, forms })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn ring<F: Field>(&self, field: F) -> Result<Arc<Ring<F>>> {
        Ok(Arc::new(Ring::new(field, self.names.clone())?))
    }

    /// Product of the forms.
    pub fn defining_polynomial<F: Field>(&self, ring: &Ring<F>) -> Result<crate::polyring::Poly<F::Elem>> {
        ring.expand_product(&self.forms)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vars: {}\n", self.names.join(" "));
        for f in &self.forms {
            s.push_str(&f.format(&self.names));
            s.push('\n');
        }
        s
    }

    /// Same arrangement with the forms reordered: form `i` of the result is form `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Arrangement> {
        Arrangement::new(self.names.clone(), perm.iter().map(|&i| self.forms[i].clone()).collect())
    }

    fn require_p3(&self) -> Result<()> {
        if self.nvars() != 4 {
            return Err(Error::Validation(format!("operation needs an arrangement in P^3, this one has {} variables", self.nvars())));
        }
        Ok(())
    }
}

/// `vars: x y z w`, then one linear form per line; `#` starts a comment.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut names: Option<Vec<String>> = None;
    let mut forms = Vec::new();
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let lineno = k + 1;
        match &names {
            None => {
                let rest = line
                    .strip_prefix("vars:")
                    .ok_or_else(|| Error::Parse { line: lineno, msg: "expected `vars:` header".into() })?;
                let v: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if v.is_empty() || v.len() > 8 {
                    return Err(Error::Parse { line: lineno, msg: format!("need 1 to 8 variables, got {}", v.len()) });
                }
                for (i, n) in v.iter().enumerate() {
                    if !n.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') || !n.chars().all(|c| c.is_alphanumeric() || c == '_') {
                        return Err(Error::Parse { line: lineno, msg: format!("bad variable name `{n}`") });
                    }
                    if v[..i].contains(n) {
                        return Err(Error::Parse { line: lineno, msg: format!("variable `{n}` repeated") });
                    }
                }
                names = Some(v);
            }
            Some(n) => {
                let f = parse_linear_form(line, n).map_err(|msg| Error::Parse { line: lineno, msg })?;
                forms.push(f);
                lines.push(lineno);
            }
        }
    }
    let names = names.ok_or_else(|| Error::Parse { line: 1, msg: "missing `vars:` header".into() })?;
    Arrangement::with_lines(names, forms, &lines)
}

/// Codimension-2 intersection of two or more hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    /// Reduced echelon basis of the span of the member forms.
    pub basis: [LinearForm; 2],
    pub pivots: [usize; 2],
    /// Indices into the arrangement, ascending.
    pub members: Vec<usize>,
}

impl Flat {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }

    pub fn format(&self, names: &[String]) -> String {
        format!("({}, {})", self.basis[0].format(names), self.basis[1].format(names))
    }
}

/// Row-reduce two vectors; `None` if they are dependent.
fn rref2<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Option<(Vec<F::Elem>, Vec<F::Elem>, [usize; 2])> {
    let mut r = [a.to_vec(), b.to_vec()];
    let n = a.len();
    let p0 = (0..n).find(|&j| !field.is_zero(&r[0][j]) || !field.is_zero(&r[1][j]))?;
    if field.is_zero(&r[0][p0]) {
        r.swap(0, 1);
    }
    let inv = field.inv(&r[0][p0]);
    r[0] = r[0].iter().map(|x| field.mul(x, &inv)).collect();
    let f = r[1][p0].clone();
    for j in 0..n {
        let t = r[0][j].clone();
        field.mul_sub_assign(&mut r[1][j], &f, &t);
    }
    let p1 = (0..n).find(|&j| !field.is_zero(&r[1][j]))?;
    let inv = field.inv(&r[1][p1]);
    r[1] = r[1].iter().map(|x| field.mul(x, &inv)).collect();
    let f = r[0][p1].clone();
    for j in 0..n {
        let t = r[1][j].clone();
        field.mul_sub_assign(&mut r[0][j], &f, &t);
    }
    let [x, y] = r;
    Some((x, y, [p0, p1]))
}

/// Member sets of the codimension-2 flats computed over `field`, sorted.
fn flat_members<F: Field>(field: &F, forms: &[Vec<F::Elem>]) -> Result<Vec<Vec<usize>>> {
    let mut groups: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let mut seen: HashMap<(Vec<F::Elem>, Vec<F::Elem>), Vec<usize>> = HashMap::new();
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let (a, b, _) = rref2(field, &forms[i], &forms[j])
                .ok_or_else(|| Error::Validation(format!("forms {} and {} are dependent over this field", i + 1, j + 1)))?;
            let e = seen.entry((a, b)).or_default();
            for k in [i, j] {
                if !e.contains(&k) {
                    e.push(k);
                }
            }
        }
    }
    for (_, mut m) in seen {
        m.sort();
        groups.insert(m, ());
    }
    Ok(groups.into_keys().collect())
}

/// Distinct codimension-2 flats, sorted by member list.
pub fn intersection_flats(a: &Arrangement) -> Vec<Flat> {
    let q = Rationals;
    let forms: Vec<Vec<BigRational>> = a.forms.iter().map(|f| f.coeffs().to_vec()).collect();
    let members = flat_members(&q, &forms).expect("arrangement forms are pairwise independent");
    members
        .into_iter()
        .map(|m| {
            let (s, t, pivots) = rref2(&q, &forms[m[0]], &forms[m[1]]).unwrap();
            Flat { basis: [LinearForm::new(s).unwrap(), LinearForm::new(t).unwrap()], pivots, members: m }
        })
        .collect()
}

/// Whether characteristic `p` is safe for this arrangement: `p > d`, `p` divides no
/// multiplicity, the forms stay pairwise independent and the flats are unchanged.
pub fn prime_is_safe(a: &Arrangement, p: u32) -> bool {
    let Ok(field) = PrimeField::new(p) else { return false };
    if (p as usize) <= a.len() {
        return false;
    }
    let flats = intersection_flats(a);
    if flats.iter().any(|f| f.multiplicity() % p as usize == 0) {
        return false;
    }
    let mut forms = Vec::new();
    for f in &a.forms {
        let mut v = Vec::new();
        for c in f.coeffs() {
            match field.from_rational(c) {
                Some(x) => v.push(x),
                None => return false,
            }
        }
        forms.push(v);
    }
    match flat_members(&field, &forms) {
        Ok(m) => m == flats.iter().map(|f| f.members.clone()).collect::<Vec<_>>(),
        Err(_) => false,
    }
}

/// `(f_{x_0}, ..., f_{x_n})` for the product `f` of the forms.
pub fn jacobian_ideal<F: Field>(ring: &Arc<Ring<F>>, a: &Arrangement) -> Result<Ideal<F>> {
    let f = a.defining_polynomial(ring)?;
    Ideal::new(ring, ring.gradient(&f))
}

/// Coordinates `(α, β)` with `f = α s + β t`.
fn coords_in(f: &LinearForm, s: &LinearForm, t: &LinearForm) -> Option<(BigRational, BigRational)> {
    let n = f.nvars();
    for i in 0..n {
        for j in i + 1..n {
            let det = s.coeff(i) * t.coeff(j) - s.coeff(j) * t.coeff(i);
            if det.is_zero() {
                continue;
            }
            let al = (f.coeff(i) * t.coeff(j) - f.coeff(j) * t.coeff(i)) / &det;
            let be = (s.coeff(i) * f.coeff(j) - s.coeff(j) * f.coeff(i)) / &det;
            let ok = (0..n).all(|k| &al * s.coeff(k) + &be * t.coeff(k) == *f.coeff(k));
            return ok.then_some((al, be));
        }
    }
    None
}

fn ring2<F: Field>(field: &F) -> Ring<F> {
    Ring::new(field.clone(), vec!["s".into(), "t".into()]).unwrap()
}

/// `P_X^b` written in the basis `(s, t)`.
fn local_power<F: Field>(field: &F, s: &LinearForm, t: &LinearForm, b: u32) -> LocalIdeal<F::Elem> {
    let r2 = ring2(field);
    LocalIdeal { s: s.clone(), t: t.clone(), gens: monomials_of_degree(2, b).into_iter().map(|m| r2.monomial(m)).collect() }
}

/// The ideal `Q_X` for a flat in the basis `(s, t)`: `(s, t)` when `e = 2`, otherwise
/// the Jacobian of the product of the member forms as binary forms in `s, t`.
pub fn local_top<F: Field>(field: &F, a: &Arrangement, flat: &Flat, s: &LinearForm, t: &LinearForm) -> Result<LocalIdeal<F::Elem>> {
    if flat.multiplicity() == 2 {
        return Ok(local_power(field, s, t, 1));
    }
    let r2 = ring2(field);
    let mut g = r2.one();
    for &m in &flat.members {
        let (al, be) = coords_in(&a.forms[m], s, t).ok_or_else(|| Error::Validation("member form is not in the span of the flat basis".into()))?;
        let l = r2.add(&r2.scale(&r2.var(0), &r2.coef(&al)?), &r2.scale(&r2.var(1), &r2.coef(&be)?));
        g = r2.mul(&g, &l);
    }
    let gens = r2.gradient(&g);
    if gens.iter().any(|x| x.is_zero()) {
        return Err(Error::Validation("pencil Jacobian degenerates in this characteristic".into()));
    }
    Ok(LocalIdeal { s: s.clone(), t: t.clone(), gens })
}

/// The local ideal as an ideal of the full ring.
pub fn globalize<F: Field>(ring: &Arc<Ring<F>>, l: &LocalIdeal<F::Elem>) -> Result<Ideal<F>> {
    let images = [ring.linear_poly(&l.s)?, ring.linear_poly(&l.t)?];
    let gens = l.gens.iter().map(|g| ring.substitute(g, &images)).collect();
    Ideal::new(ring, gens)
}

/// Intersection of the primes of all flats; this is `√J`.
pub fn radical_comb<F: Field>(ring: &Arc<Ring<F>>, a: &Arrangement) -> Result<Ideal<F>> {
    a.require_p3()?;
    let field = ring.field();
    let locals: Vec<_> = intersection_flats(a).iter().map(|x| local_power(field, &x.basis[0], &x.basis[1], 1)).collect();
    intersect_local(ring, &locals, LOCAL_SEED)
}

/// Intersection of the `Q_X`; this is the top-dimensional part of `J`.
pub fn top_comb<F: Field>(ring: &Arc<Ring<F>>, a: &Arrangement) -> Result<Ideal<F>> {
    a.require_p3()?;
    let field = ring.field();
    let locals = intersection_flats(a).iter().map(|x| local_top(field, a, x, &x.basis[0], &x.basis[1])).collect::<Result<Vec<_>>>()?;
    intersect_local(ring, &locals, LOCAL_SEED)
}

/// Same as [`top_comb`] but with pairwise `groebner::intersect`; slow, for cross-checks.
pub fn top_comb_pairwise<F: Field>(ring: &Arc<Ring<F>>, a: &Arrangement) -> Result<Ideal<F>> {
    a.require_p3()?;
    let field = ring.field();
    let mut acc = Ideal::unit(ring);
    for x in intersection_flats(a) {
        let q = globalize(ring, &local_top(field, a, &x, &x.basis[0], &x.basis[1])?)?;
        acc = intersect(&acc, &q)?;
    }
    Ok(acc)
}

/// `⋂ P_X^{b_X}` with `b` indexed like [`intersection_flats`]. Unless `override_rules`
/// is set, `b` must be 1 on flats with `e = 2` and between 0 and `e` otherwise.
pub fn symbolic_intersection<F: Field>(ring: &Arc<Ring<F>>, a: &Arrangement, b: &[u32], override_rules: bool) -> Result<Ideal<F>> {
    a.require_p3()?;
    let flats = intersection_flats(a);
    if b.len() != flats.len() {
        return Err(Error::Validation(format!("expected {} exponents, got {}", flats.len(), b.len())));
    }
    let names = a.names();
    let mut locals = Vec::new();
    for (x, &bx) in flats.iter().zip(b) {
        let e = x.multiplicity() as u32;
        if !override_rules {
            if e == 2 && bx != 1 {
                return Err(Error::Validation(format!("flat {} has e = 2 and needs b = 1, got {bx}", x.format(names))));
            }
            if bx > e {
                return Err(Error::Validation(format!("flat {} has e = {e} but b = {bx}", x.format(names))));
            }
        }
        if bx > 0 {
            locals.push(local_power(ring.field(), &x.basis[0], &x.basis[1], bx));
        }
    }
    intersect_local(ring, &locals, LOCAL_SEED)
}

/// A hyperplane lying on two non-reduced flats.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Witness {
    pub hyperplane: usize,
    pub flats: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HypothesisReport {
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

/// No hyperplane contains two flats with `e ≥ 3`.
pub fn hypothesis_check(a: &Arrangement) -> HypothesisReport {
    hypothesis_from_flats(a.len(), &intersection_flats(a))
}

pub fn hypothesis_from_flats(d: usize, flats: &[Flat]) -> HypothesisReport {
    let mut witnesses = Vec::new();
    for h in 0..d {
        let on: Vec<usize> = flats.iter().enumerate().filter(|(_, x)| x.multiplicity() >= 3 && x.members.contains(&h)).map(|(i, _)| i).collect();
        for i in 0..on.len() {
            for j in i + 1..on.len() {
                witnesses.push(Witness { hyperplane: h, flats: (on[i], on[j]) });
            }
        }
    }
    HypothesisReport { holds: witnesses.is_empty(), witnesses }
}

/// `(number of flats, Σ (e-1)^2 over e ≥ 3 plus the number of e = 2 flats)`.
pub fn combinatorial_degrees(a: &Arrangement) -> (u64, u64) {
    let flats = intersection_flats(a);
    let top = flats.iter().map(|x| if x.multiplicity() >= 3 { ((x.multiplicity() - 1) * (x.multiplicity() - 1)) as u64 } else { 1 }).sum();
    (flats.len() as u64, top)
}

fn random_form(rng: &mut ChaCha8Rng, n: usize) -> LinearForm {
    loop {
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-999..=999)).collect();
        if let Ok(l) = LinearForm::from_ints(&c) {
            return l;
        }
    }
}

fn section_once(a: &Arrangement, rng: &mut ChaCha8Rng) -> Option<Arrangement> {
    let n = a.nvars();
    let mut images: Vec<LinearForm> = (0..4).map(|i| LinearForm::var(4, i)).collect();
    for _ in 4..n {
        images.push(random_form(rng, 4));
    }
    let forms: Option<Vec<LinearForm>> = a.forms.iter().map(|f| f.substitute(&images).ok()).collect();
    Arrangement::new(a.names[..4].to_vec(), forms?).ok()
}

fn member_sets(a: &Arrangement) -> Vec<Vec<usize>> {
    intersection_flats(a).into_iter().map(|x| x.members).collect()
}

/// Restrict to a general `P^3` by substituting the variables past the fourth with
/// seeded random forms. The section must keep the forms independent and the flats
/// (as member sets) unchanged; a second independent section must agree as well.
pub fn generic_section(a: &Arrangement, seed: u64) -> Result<Arrangement> {
    let n = a.nvars();
    if n < 4 {
        return Err(Error::Validation(format!("need at least 4 variables, got {n}")));
    }
    if n == 4 {
        return Ok(a.clone());
    }
    let target = member_sets(a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..32 {
        let Some(first) = section_once(a, &mut rng) else { continue };
        if member_sets(&first) != target {
            continue;
        }
        let Some(second) = section_once(a, &mut rng) else { continue };
        if member_sets(&second) != target {
            continue;
        }
        return Ok(first);
    }
    Err(Error::Limit("generic section failed verification after 32 attempts".into()))
}

/// Whether some bijection of hyperplanes carries the flats of `a` onto those of `b`.
pub fn lattice_isomorphic(a: &Arrangement, b: &Arrangement) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (fa, fb) = (intersection_flats(a), intersection_flats(b));
    let mut ea: Vec<usize> = fa.iter().map(|x| x.multiplicity()).collect();
    let mut eb: Vec<usize> = fb.iter().map(|x| x.multiplicity()).collect();
    ea.sort();
    eb.sort();
    if ea != eb {
        return false;
    }
    let d = a.len();
    let table = |flats: &[Flat]| {
        let mut t = vec![vec![usize::MAX; d]; d];
        for (k, x) in flats.iter().enumerate() {
            for &i in &x.members {
                for &j in &x.members {
                    if i != j {
                        t[i][j] = k;
                    }
                }
            }
        }
        t
    };
    let (ta, tb) = (table(&fa), table(&fb));
    let signature = |flats: &[Flat], h: usize| {
        let mut s: Vec<usize> = flats.iter().filter(|x| x.members.contains(&h)).map(|x| x.multiplicity()).collect();
        s.sort();
        s
    };
    let sa: Vec<Vec<usize>> = (0..d).map(|h| signature(&fa, h)).collect();
    let sb: Vec<Vec<usize>> = (0..d).map(|h| signature(&fb, h)).collect();
    let mut perm = vec![usize::MAX; d];
    let mut used = vec![false; d];
    fn extend(v: usize, d: usize, ta: &[Vec<usize>], tb: &[Vec<usize>], sa: &[Vec<usize>], sb: &[Vec<usize>], perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if v == d {
            return true;
        }
        for w in 0..d {
            if used[w] || sa[v] != sb[w] {
                continue;
            }
            let ok = (0..v).all(|i| (0..i).all(|k| (ta[v][i] == ta[v][k]) == (tb[w][perm[i]] == tb[w][perm[k]])));
            if !ok {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            if extend(v + 1, d, ta, tb, sa, sb, perm, used) {
                return true;
            }
            used[w] = false;
        }
        perm[v] = usize::MAX;
        false
    }
    extend(0, d, &ta, &tb, &sa, &sb, &mut perm, &mut used)
}

/// Integer-coefficient form helper for tests and examples.
pub fn form(coeffs: &[i64]) -> LinearForm {
    LinearForm::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect()).unwrap()
}
