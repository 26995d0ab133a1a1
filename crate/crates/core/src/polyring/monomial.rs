use std::fmt;

/// Upper bound on the number of ring variables (eight file variables plus room for
/// two auxiliary ones).
pub const MAX_VARS: usize = 10;

/// Exponent vector with cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    n: u8,
    deg: u16,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        assert!(n <= MAX_VARS, "too many variables");
        Monomial { exps: [0; MAX_VARS], n: n as u8, deg: 0 }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        assert!(i < n);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn new(exps: &[u32]) -> Self {
        let mut m = Monomial::one(exps.len());
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= u8::MAX as u32, "exponent overflow");
            m.exps[i] = e as u8;
            deg += e;
        }
        m.deg = deg as u16;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn exps(&self) -> &[u8] {
        &self.exps[..self.n as usize]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..self.n as usize {
            let s = self.exps[i] as u16 + other.exps[i] as u16;
            assert!(s <= u8::MAX as u16, "exponent overflow");
            r.exps[i] = s as u8;
        }
        r.deg = self.deg + other.deg;
        r
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        for i in 0..self.n as usize {
            if self.exps[i] > other.exps[i] {
                return false;
            }
        }
        true
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut r = *other;
        for i in 0..self.n as usize {
            r.exps[i] = other.exps[i] - self.exps[i];
        }
        r.deg = other.deg - self.deg;
        r
    }

    pub fn checked_div(&self, by: &Monomial) -> Option<Monomial> {
        if by.divides(self) {
            Some(by.quotient_of(self))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        let mut deg = 0u16;
        for i in 0..self.n as usize {
            r.exps[i] = self.exps[i].max(other.exps[i]);
            deg += r.exps[i] as u16;
        }
        r.deg = deg;
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        let mut deg = 0u16;
        for i in 0..self.n as usize {
            r.exps[i] = self.exps[i].min(other.exps[i]);
            deg += r.exps[i] as u16;
        }
        r.deg = deg;
        r
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        (0..self.n as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Lower the exponent of variable `i` by up to `k`.
    pub fn strip_var(&self, i: usize, k: u32) -> Monomial {
        let mut r = *self;
        let e = (r.exps[i] as u32).min(k);
        r.exps[i] -= e as u8;
        r.deg -= e as u16;
        r
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut r = *self;
        assert!(e <= u8::MAX as u32);
        r.deg = r.deg - r.exps[i] as u16 + e as u16;
        r.exps[i] = e as u8;
        r
    }

    /// Re-embed into a ring with `n` variables; `map[i]` is the new index of variable `i`.
    pub fn remap(&self, n: usize, map: &[usize]) -> Monomial {
        let mut r = Monomial::one(n);
        for i in 0..self.n as usize {
            if self.exps[i] > 0 {
                r.exps[map[i]] = self.exps[i];
            }
        }
        r.deg = self.deg;
        r
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for i in 0..self.n as usize {
            match self.exps[i] {
                0 => {}
                1 => parts.push(names[i].clone()),
                e => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

/// All monomials of degree `d` in `n` variables, lexicographically descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = rem;
            out.push(Monomial::new(cur));
            return;
        }
        for e in (0..=rem).rev() {
            cur[i] = e;
            rec(i + 1, rem - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Binomial coefficients up to a fixed size, used for ranking monomials.
pub struct Binomials {
    table: Vec<Vec<u64>>,
}

impl Binomials {
    pub fn new(max: usize) -> Self {
        let mut table = vec![vec![0u64; max + 1]; max + 1];
        for a in 0..=max {
            table[a][0] = 1;
            for b in 1..=a {
                table[a][b] = table[a - 1][b - 1].saturating_add(if b < a { table[a - 1][b] } else { 0 });
            }
        }
        Binomials { table }
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u64 {
        if b > a {
            0
        } else {
            self.table[a][b]
        }
    }

    /// Number of monomials of degree `d` in `n` variables.
    pub fn count(&self, n: usize, d: usize) -> u64 {
        if n == 0 {
            return (d == 0) as u64;
        }
        self.get(d + n - 1, n - 1)
    }

    /// Shared table large enough for every ring this crate builds.
    pub fn shared() -> &'static Binomials {
        static TABLE: std::sync::OnceLock<Binomials> = std::sync::OnceLock::new();
        TABLE.get_or_init(|| Binomials::new(300))
    }

    /// Position of `m` in [`monomials_of_degree`] order.
    #[inline]
    pub fn rank(&self, m: &Monomial) -> usize {
        let n = m.nvars();
        let mut rem = m.degree() as usize;
        let mut rank = 0u64;
        for i in 0..n.saturating_sub(1) {
            let a = m.exp(i) as usize;
            // monomials whose exponent at i exceeds a come first
            if rem > a {
                rank += self.get(rem - a + n - i - 2, n - i - 1);
            }
            rem -= a;
        }
        rank as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_matches_enumeration() {
        let b = Binomials::new(40);
        for n in 1..=5 {
            for d in 0..=6 {
                let ms = monomials_of_degree(n, d);
                assert_eq!(ms.len() as u64, b.count(n, d as usize));
                for (k, m) in ms.iter().enumerate() {
                    assert_eq!(b.rank(m), k, "n={n} d={d} m={m:?}");
                }
            }
        }
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::new(&[2, 1, 0]);
        let b = Monomial::new(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), Monomial::new(&[2, 3, 1]));
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b).checked_div(&a), Some(Monomial::new(&[0, 2, 1])));
        assert!(Monomial::new(&[1, 0, 0]).coprime(&Monomial::new(&[0, 4, 2])));
    }
}
