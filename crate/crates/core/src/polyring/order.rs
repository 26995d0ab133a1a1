use std::cmp::Ordering;
use std::sync::Arc;

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Monomial orders. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Block order: grevlex on the first `block` variables, ties broken by grevlex on the rest.
    Elimination { block: usize },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

#[inline]
fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let (mut da, mut db) = (0u32, 0u32);
    for i in lo..hi {
        da += a.exp(i);
        db += b.exp(i);
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (lo..hi).rev() {
        let (x, y) = (a.exp(i), b.exp(i));
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compare without checking ring lengths.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => {
                if a.degree() != b.degree() {
                    return a.degree().cmp(&b.degree());
                }
                let n = a.nvars();
                for i in (0..n).rev() {
                    let (x, y) = (a.exp(i), b.exp(i));
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..a.nvars() {
                    let (x, y) = (a.exp(i), b.exp(i));
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination { block } => {
                let n = a.nvars();
                let k = block.min(n);
                grevlex_range(a, b, 0, k).then_with(|| grevlex_range(a, b, k, n))
            }
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination { block } => format!("elim{block}"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(MonomialOrder::GrevLex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => {
                if let Some(k) = s.strip_prefix("elim") {
                    if let Ok(block) = k.parse() {
                        return Ok(MonomialOrder::Elimination { block });
                    }
                }
                Err(Error::Validation(format!("unknown monomial order `{s}`")))
            }
        }
    }
}

/// Checked comparison of two monomials of the same ring.
pub fn mono_compare(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Ring(format!(
            "monomials of lengths {} and {} compared",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(order.cmp(a, b))
}

/// Orders on terms `m * e_c` of a graded free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// Twisted degree, then monomial, then position (lower index larger).
    TermOverPosition,
    /// Position first (lower index larger), then monomial.
    PositionOverTerm,
    /// Induced by lead terms `mu_c * e'_{c'}` of a map into another module.
    Schreyer(Arc<SchreyerData>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerData {
    pub leads: Vec<(u32, Monomial)>,
    pub previous: ModuleOrder,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    pub kind: ModuleKind,
    /// Degree of each basis vector.
    pub twists: Vec<i32>,
    /// Basis vectors in a higher block dominate every term of a lower block.
    pub blocks: Vec<u32>,
}

impl ModuleOrder {
    pub fn ideal(mono: MonomialOrder) -> Self {
        ModuleOrder { mono, kind: ModuleKind::TermOverPosition, twists: vec![0], blocks: vec![0] }
    }

    pub fn top(mono: MonomialOrder, twists: Vec<i32>) -> Self {
        let blocks = vec![0; twists.len()];
        ModuleOrder { mono, kind: ModuleKind::TermOverPosition, twists, blocks }
    }

    pub fn pot(mono: MonomialOrder, twists: Vec<i32>) -> Self {
        let blocks = vec![0; twists.len()];
        ModuleOrder { mono, kind: ModuleKind::PositionOverTerm, twists, blocks }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    #[inline]
    pub fn cmp(&self, ca: u32, ma: &Monomial, cb: u32, mb: &Monomial) -> Ordering {
        let (ia, ib) = (ca as usize, cb as usize);
        let bl = self.blocks[ia].cmp(&self.blocks[ib]);
        if bl != Ordering::Equal {
            return bl;
        }
        match &self.kind {
            ModuleKind::TermOverPosition => {
                if self.mono.is_graded() {
                    let da = ma.degree() as i64 + self.twists[ia] as i64;
                    let db = mb.degree() as i64 + self.twists[ib] as i64;
                    if da != db {
                        return da.cmp(&db);
                    }
                }
                self.mono.cmp(ma, mb).then_with(|| cb.cmp(&ca))
            }
            ModuleKind::PositionOverTerm => cb.cmp(&ca).then_with(|| self.mono.cmp(ma, mb)),
            ModuleKind::Schreyer(data) => {
                let (pa, la) = &data.leads[ia];
                let (pb, lb) = &data.leads[ib];
                data.previous
                    .cmp(*pa, &ma.mul(la), *pb, &mb.mul(lb))
                    .then_with(|| cb.cmp(&ca))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::monomial::monomials_of_degree;

    #[test]
    fn grevlex_degree_three_in_two_vars() {
        let o = MonomialOrder::GrevLex;
        let mut ms = monomials_of_degree(2, 3);
        ms.sort_by(|a, b| o.cmp(b, a));
        let got: Vec<Vec<u8>> = ms.iter().map(|m| m.exps().to_vec()).collect();
        assert_eq!(got, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
    }

    #[test]
    fn grevlex_differs_from_lex_in_three_vars() {
        let xz = Monomial::new(&[1, 0, 1]);
        let y2 = Monomial::new(&[0, 2, 0]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&xz, &y2), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&xz, &y2), Ordering::Greater);
    }

    #[test]
    fn length_mismatch() {
        let a = Monomial::new(&[1, 0]);
        let b = Monomial::new(&[1, 0, 0]);
        assert!(mono_compare(MonomialOrder::GrevLex, &a, &b).is_err());
    }
}
