use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::polyring::Monomial;

/// Integer polynomial in `t`, coefficients in ascending order.
pub type Series = Vec<i64>;

fn trim(mut p: Series) -> Series {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn series_add(a: &[i64], b: &[i64]) -> Series {
    let mut r = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        r[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        r[i] += x;
    }
    trim(r)
}

pub fn series_sub(a: &[i64], b: &[i64]) -> Series {
    let nb: Vec<i64> = b.iter().map(|x| -x).collect();
    series_add(a, &nb)
}

pub fn series_mul(a: &[i64], b: &[i64]) -> Series {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(r)
}

pub fn series_shift(a: &[i64], k: usize) -> Series {
    if a.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0i64; k];
    r.extend_from_slice(a);
    r
}

/// `(1 - t)^k`
pub fn one_minus_t_pow(k: usize) -> Series {
    let mut r = vec![1i64];
    for _ in 0..k {
        r = series_mul(&r, &[1, -1]);
    }
    r
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `k[x]/(gens)`, denominator `(1 - t)^n`.
pub fn monomial_numerator(gens: &[Monomial], n: usize) -> Series {
    let _ = n;
    numerator_rec(minimalize(gens.to_vec()))
}

fn numerator_rec(gens: Vec<Monomial>) -> Series {
    if gens.is_empty() {
        return vec![1];
    }
    let n = gens[0].nvars();
    let mut count = vec![0usize; n];
    for g in &gens {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                count[i] += 1;
            }
        }
    }
    let (var, &best) = count.iter().enumerate().max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i))).unwrap();
    if best <= 1 {
        // pairwise coprime generators
        let mut r = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            r = series_mul(&r, &trim(f));
        }
        return r;
    }
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exp(var)).filter(|&e| e > 0).collect();
    exps.sort();
    let mut e = exps[exps.len() / 2];
    let pivot_in = |e: u32| gens.iter().any(|g| g.degree() == g.exp(var) && g.exp(var) <= e);
    if pivot_in(e) {
        e = exps[0];
    }
    let pivot = Monomial::one(n).with_exp(var, e);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).copied().collect();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.strip_var(var, e)).collect();
    let a = numerator_rec(minimalize(plus));
    let b = numerator_rec(minimalize(colon));
    series_add(&a, &series_shift(&b, e as usize))
}

/// Hilbert series data of a graded quotient of a polynomial ring in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub nvars: usize,
    /// Numerator over `(1 - t)^nvars`; may be shifted by `offset` (exponent of the first entry).
    pub numerator: Series,
    pub offset: i64,
    /// Krull dimension; zero also for the zero module.
    pub dim: usize,
    /// Numerator over `(1 - t)^dim`.
    pub reduced: Series,
    /// Hilbert polynomial coefficients, ascending powers of `t`.
    pub polynomial: Vec<String>,
    /// First degree from which function and polynomial agree.
    pub regularity_index: i64,
    #[serde(skip)]
    poly_q: Vec<BigRational>,
}

fn binom_poly(k: i64, dm1: usize) -> Vec<BigRational> {
    // C(s - k + dm1, dm1) as a polynomial in s
    let mut p = vec![BigRational::one()];
    for i in 1..=dm1 {
        let c = BigRational::from_integer(BigInt::from(i as i64 - k));
        let mut np = vec![BigRational::zero(); p.len() + 1];
        for (j, a) in p.iter().enumerate() {
            np[j + 1] += a;
            np[j] += a * &c;
        }
        p = np;
    }
    let mut fact = BigInt::one();
    for i in 1..=dm1 {
        fact *= BigInt::from(i as i64);
    }
    let f = BigRational::from_integer(fact);
    p.into_iter().map(|a| a / &f).collect()
}

fn binom(a: i64, b: usize) -> i128 {
    if a < b as i64 || a < 0 {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..b as i64 {
        r = r * (a - i) as i128 / (i + 1) as i128;
    }
    r
}

impl HilbertData {
    pub fn from_numerator(nvars: usize, numerator: Series, offset: i64) -> HilbertData {
        let numerator = trim(numerator);
        let mut reduced = numerator.clone();
        let mut dim = nvars;
        if reduced.is_empty() {
            dim = 0;
        } else {
            while dim > 0 && reduced.iter().sum::<i64>() == 0 {
                // divide by (1 - t)
                let mut q = vec![0i64; reduced.len() - 1];
                let mut acc = 0i64;
                for i in 0..q.len() {
                    acc += reduced[i];
                    q[i] = acc;
                }
                reduced = trim(q);
                dim -= 1;
            }
        }
        let mut poly_q = vec![BigRational::zero(); dim.max(1)];
        if dim >= 1 {
            for (k, &h) in reduced.iter().enumerate() {
                if h == 0 {
                    continue;
                }
                let b = binom_poly(k as i64 + offset, dim - 1);
                for (j, c) in b.into_iter().enumerate() {
                    poly_q[j] += c * BigRational::from_integer(BigInt::from(h));
                }
            }
        }
        while poly_q.len() > 1 && poly_q.last().map(|c| c.is_zero()).unwrap_or(false) {
            poly_q.pop();
        }
        let polynomial = poly_q.iter().map(|c| c.to_string()).collect();
        let mut hd = HilbertData { nvars, numerator, offset, dim, reduced, polynomial, regularity_index: 0, poly_q };
        let top = offset + hd.numerator.len() as i64 + 1;
        let mut last_bad: Option<i64> = None;
        let lo = offset.min(0);
        for s in lo..=top {
            if hd.function(s) != hd.polynomial_value(s) {
                last_bad = Some(s);
            }
        }
        hd.regularity_index = last_bad.map(|s| s + 1).unwrap_or(lo);
        hd
    }

    /// Hilbert function value in degree `s`.
    pub fn function(&self, s: i64) -> i128 {
        let mut v: i128 = 0;
        for (k, &c) in self.numerator.iter().enumerate() {
            let e = k as i64 + self.offset;
            if c == 0 || s < e {
                continue;
            }
            v += c as i128 * binom(s - e + self.nvars as i64 - 1, self.nvars - 1);
        }
        v
    }

    pub fn polynomial_value(&self, s: i64) -> i128 {
        let mut v = BigRational::zero();
        let x = BigRational::from_integer(BigInt::from(s));
        for c in self.poly_q.iter().rev() {
            v = v * &x + c;
        }
        assert!(v.is_integer());
        i128::try_from(v.to_integer()).expect("Hilbert polynomial value out of range")
    }

    pub fn polynomial_coeffs(&self) -> &[BigRational] {
        &self.poly_q
    }

    /// Degree (multiplicity): leading coefficient of the reduced numerator at 1.
    pub fn degree(&self) -> i64 {
        self.reduced.iter().sum()
    }

    /// Linear Hilbert polynomial `a t + b` of a curve; `None` in other dimensions.
    pub fn curve_polynomial(&self) -> Option<(i64, i64)> {
        if self.dim != 2 {
            return None;
        }
        let a = self.poly_q.get(1).cloned().unwrap_or_else(BigRational::zero);
        let b = self.poly_q[0].clone();
        Some((a.to_integer().try_into().ok()?, b.to_integer().try_into().ok()?))
    }

    /// `130t - 1150` style, descending powers.
    pub fn format_polynomial(&self) -> String {
        format_poly_t(&self.poly_q)
    }
}

pub fn format_poly_t(coeffs: &[BigRational]) -> String {
    let mut s = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let num = if a.is_integer() { a.numer().to_string() } else { format!("({}/{})", a.numer(), a.denom()) };
        match k {
            0 => s.push_str(&num),
            _ => {
                if !a.is_one() {
                    s.push_str(&num);
                }
                s.push('t');
                if k > 1 {
                    s.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_ring() {
        let h = HilbertData::from_numerator(4, vec![1], 0);
        assert_eq!(h.dim, 4);
        assert_eq!(h.function(2), 10);
        assert_eq!(h.polynomial_value(2), 10);
        assert_eq!(h.format_polynomial(), "(1/6)t^3 + t^2 + (11/6)t + 1");
    }

    #[test]
    fn line_in_p3() {
        // (x, y): numerator (1-t)^2
        let gens = vec![Monomial::new(&[1, 0, 0, 0]), Monomial::new(&[0, 1, 0, 0])];
        let n = monomial_numerator(&gens, 4);
        assert_eq!(n, vec![1, -2, 1]);
        let h = HilbertData::from_numerator(4, n, 0);
        assert_eq!(h.curve_polynomial(), Some((1, 1)));
        assert_eq!(h.format_polynomial(), "t + 1");
    }

    #[test]
    fn recursion_matches_direct_count() {
        // (x^2, xy, y^3) in k[x, y, z]
        let gens = vec![Monomial::new(&[2, 0, 0]), Monomial::new(&[1, 1, 0]), Monomial::new(&[0, 3, 0])];
        let h = HilbertData::from_numerator(3, monomial_numerator(&gens, 3), 0);
        for d in 0..8u32 {
            let direct = crate::polyring::monomials_of_degree(3, d)
                .into_iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count() as i128;
            assert_eq!(h.function(d as i64), direct);
        }
        assert_eq!(h.degree(), 4);
    }
}
