use std::cmp::Ordering;
use std::collections::HashMap;

use num_rational::BigRational;

use super::field::Field;
use super::linear::LinearForm;
use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Sparse polynomial; terms sorted grevlex-descending with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    pub(crate) terms: Vec<(Monomial, E)>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term under grevlex.
    pub fn lead(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Leading monomial under an arbitrary order.
    pub fn lead_monomial(&self, order: MonomialOrder) -> Option<Monomial> {
        self.terms.iter().map(|(m, _)| *m).max_by(|a, b| order.cmp(a, b))
    }
}

/// Polynomial ring context: coefficient field and variable names.
#[derive(Clone, Debug)]
pub struct Ring<F: Field> {
    field: F,
    names: Vec<String>,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, names: Vec<String>) -> Result<Self> {
        if names.is_empty() || names.len() > MAX_VARS {
            return Err(Error::Ring(format!("{} variables (1..={MAX_VARS} allowed)", names.len())));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::Ring(format!("variable `{a}` declared twice")));
            }
        }
        Ok(Ring { field, names })
    }

    /// Variables `x y z w` for four variables, `x0 .. x{n-1}` otherwise.
    pub fn standard(field: F, n: usize) -> Self {
        let names = if n == 4 {
            ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect()
        } else {
            (0..n).map(|i| format!("x{i}")).collect()
        };
        Ring::new(field, names).expect("valid ring")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Same field, extra variables appended.
    pub fn extend(&self, extra: &[&str]) -> Result<Self> {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.to_string()));
        Ring::new(self.field.clone(), names)
    }

    pub fn normalize(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Poly<F::Elem> {
        let o = MonomialOrder::GrevLex;
        terms.sort_by(|a, b| o.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(&last.1, &c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Poly { terms: out }
    }

    pub fn check(&self, f: &Poly<F::Elem>) -> Result<()> {
        for (m, _) in &f.terms {
            if m.nvars() != self.nvars() {
                return Err(Error::Ring(format!(
                    "polynomial in {} variables used in a ring with {}",
                    m.nvars(),
                    self.nvars()
                )));
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly::zero()
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(&self, i: usize) -> Poly<F::Elem> {
        self.term(Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn monomial(&self, m: Monomial) -> Poly<F::Elem> {
        self.term(m, self.field.one())
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let o = MonomialOrder::GrevLex;
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.terms.len() && j < b.terms.len() {
            let (ma, ca) = &a.terms[i];
            let (mb, cb) = &b.terms[j];
            match o.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = self.field.add(ca, cb);
                    if !self.field.is_zero(&s) {
                        out.push((*ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(b.terms[j..].iter().cloned());
        Poly { terms: out }
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly { terms: a.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect() }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(m, x)| (*m, self.field.mul(x, c))).collect() }
    }

    /// Multiply by `c * m`; order is preserved because grevlex is multiplicative.
    pub fn mul_term(&self, a: &Poly<F::Elem>, m: &Monomial, c: &F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(t, x)| (t.mul(m), self.field.mul(x, c))).collect() }
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return self.mul_term(big, m, c);
        }
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(a.len() * b.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let p = self.field.mul(ca, cb);
                let e = acc.entry(ma.mul(mb)).or_insert_with(|| self.field.zero());
                *e = self.field.add(e, &p);
            }
        }
        self.normalize(acc.into_iter().collect())
    }

    pub fn pow(&self, a: &Poly<F::Elem>, e: u32) -> Poly<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn partial_derivative(&self, f: &Poly<F::Elem>, i: usize) -> Result<Poly<F::Elem>> {
        if i >= self.nvars() {
            return Err(Error::Ring(format!("variable index {i} out of range")));
        }
        let mut out = Vec::new();
        for (m, c) in &f.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let k = self.field.from_i64(e as i64);
            let c2 = self.field.mul(c, &k);
            if !self.field.is_zero(&c2) {
                out.push((m.with_exp(i, e - 1), c2));
            }
        }
        // differentiation can reorder terms
        Ok(self.normalize(out))
    }

    pub fn gradient(&self, f: &Poly<F::Elem>) -> Vec<Poly<F::Elem>> {
        (0..self.nvars()).map(|i| self.partial_derivative(f, i).unwrap()).collect()
    }

    /// Ring map sending variable `i` of the source to `images[i]` (polynomials of `self`).
    pub fn substitute(&self, f: &Poly<F::Elem>, images: &[Poly<F::Elem>]) -> Poly<F::Elem> {
        let mut powers: Vec<Vec<Poly<F::Elem>>> = images.iter().map(|g| vec![self.one(), g.clone()]).collect();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in &f.terms {
            let mut t = self.constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = self.mul(powers[i].last().unwrap(), &images[i]);
                    powers[i].push(next);
                }
                t = self.mul(&t, &powers[i][e as usize]);
            }
            for (mm, cc) in t.terms {
                let e = acc.entry(mm).or_insert_with(|| self.field.zero());
                *e = self.field.add(e, &cc);
            }
        }
        self.normalize(acc.into_iter().collect())
    }

    pub fn linear_poly(&self, l: &LinearForm) -> Result<Poly<F::Elem>> {
        if l.nvars() != self.nvars() {
            return Err(Error::Ring(format!(
                "linear form in {} variables used in a ring with {}",
                l.nvars(),
                self.nvars()
            )));
        }
        let mut terms = Vec::new();
        for (i, q) in l.coeffs().iter().enumerate() {
            let c = self.coef(q)?;
            if !self.field.is_zero(&c) {
                terms.push((Monomial::var(self.nvars(), i), c));
            }
        }
        Ok(self.normalize(terms))
    }

    pub fn coef(&self, q: &BigRational) -> Result<F::Elem> {
        self.field
            .from_rational(q)
            .ok_or_else(|| Error::Validation(format!("coefficient {q} is undefined in characteristic {}", self.field.characteristic())))
    }

    /// Linear change of variables: variable `i` of `f` goes to `images[i]`, a form of this ring.
    pub fn apply_linear_substitution(&self, f: &Poly<F::Elem>, images: &[LinearForm]) -> Result<Poly<F::Elem>> {
        if let Some((m, _)) = f.terms.first() {
            if m.nvars() != images.len() {
                return Err(Error::Ring(format!(
                    "{} images given for a polynomial in {} variables",
                    images.len(),
                    m.nvars()
                )));
            }
        }
        let polys: Vec<Poly<F::Elem>> = images.iter().map(|l| self.linear_poly(l)).collect::<Result<_>>()?;
        Ok(self.substitute(f, &polys))
    }

    pub fn expand_product(&self, forms: &[LinearForm]) -> Result<Poly<F::Elem>> {
        if forms.is_empty() {
            return Err(Error::Validation("empty product".into()));
        }
        let mut acc = self.one();
        for l in forms {
            acc = self.mul(&acc, &self.linear_poly(l)?);
        }
        Ok(acc)
    }

    pub fn from_rational_poly(&self, f: &Poly<BigRational>) -> Result<Poly<F::Elem>> {
        let mut terms = Vec::with_capacity(f.len());
        for (m, q) in &f.terms {
            terms.push((*m, self.coef(q)?));
        }
        Ok(self.normalize(terms))
    }

    pub fn format(&self, f: &Poly<F::Elem>) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let mut cs = self.field.format(c);
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if k == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&cs);
            } else {
                if cs != "1" {
                    s.push_str(&cs);
                    s.push('*');
                }
                s.push_str(&m.format(&self.names));
            }
        }
        s
    }

    /// Make the leading coefficient (under `order`) equal to one.
    pub fn monic(&self, f: &Poly<F::Elem>, order: MonomialOrder) -> Poly<F::Elem> {
        let Some(lm) = f.lead_monomial(order) else { return Poly::zero() };
        let c = f.terms.iter().find(|(m, _)| *m == lm).unwrap().1.clone();
        self.scale(f, &self.field.inv(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::field::{PrimeField, Rationals};

    fn ring() -> Ring<PrimeField> {
        Ring::standard(PrimeField::default_prime(), 4)
    }

    #[test]
    fn derivative_of_monomial() {
        let r = ring();
        let f = r.mul(&r.mul(&r.var(0), &r.var(1)), &r.mul(&r.var(2), &r.var(3)));
        let d = r.partial_derivative(&f, 0).unwrap();
        assert_eq!(r.format(&d), "y*z*w");
        let x2 = r.pow(&r.var(0), 2);
        assert_eq!(r.format(&r.partial_derivative(&x2, 0).unwrap()), "2*x");
    }

    #[test]
    fn gradient_of_pencil() {
        let r = Ring::standard(Rationals, 4);
        let x = r.var(0);
        let y = r.var(1);
        let f = r.mul(&r.mul(&x, &y), &r.add(&x, &y));
        let g = r.gradient(&f);
        assert_eq!(r.format(&g[0]), "2*x*y + y^2");
        assert_eq!(r.format(&g[1]), "x^2 + 2*x*y");
        assert!(g[2].is_zero() && g[3].is_zero());
    }

    #[test]
    fn zero_has_no_degree() {
        let r = ring();
        assert_eq!(r.zero().degree(), None);
        assert_eq!(r.one().degree(), Some(0));
    }
}
