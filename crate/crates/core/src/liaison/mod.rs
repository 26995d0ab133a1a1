//! Liaison addition and basic double links, for ideals and for arrangements.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{form, intersection_flats, Arrangement, Flat};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::homology::{HilbertData, RaoTable};
use crate::polyring::{Field, LinearForm, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum StepKind {
    Addition,
    DoubleLink,
}

/// Output of one construction with the degrees of the two forms.
#[derive(Clone, Debug)]
pub struct LiaisonStep<F: Field> {
    pub kind: StepKind,
    pub d1: u32,
    pub d2: u32,
    pub ideal: Ideal<F>,
}

fn check_forms<F: Field>(ring: &Arc<crate::polyring::Ring<F>>, f1: &Poly<F::Elem>, f2: &Poly<F::Elem>) -> Result<(u32, u32)> {
    let (Some(d1), Some(d2)) = (f1.degree(), f2.degree()) else {
        return Err(Error::Validation("F1 and F2 must be nonzero".into()));
    };
    if !f1.is_homogeneous() || !f2.is_homogeneous() {
        return Err(Error::Validation("F1 and F2 must be homogeneous".into()));
    }
    let ci = Ideal::new(ring, vec![f1.clone(), f2.clone()])?;
    if ci.is_unit() || ring.nvars() - ci.hilbert().dim != 2 {
        return Err(Error::Validation("F1, F2 is not a regular sequence".into()));
    }
    Ok((d1, d2))
}

/// `F2 I1 + F1 I2`, for `F1 ∈ I1`, `F2 ∈ I2` and `F1, F2` a regular sequence.
pub fn liaison_addition<F: Field>(i1: &Ideal<F>, f1: &Poly<F::Elem>, i2: &Ideal<F>, f2: &Poly<F::Elem>) -> Result<LiaisonStep<F>> {
    let ring = i1.ring();
    if !i1.contains(f1) {
        return Err(Error::Validation("F1 does not lie in I1".into()));
    }
    if !i2.contains(f2) {
        return Err(Error::Validation("F2 does not lie in I2".into()));
    }
    let (d1, d2) = check_forms(ring, f1, f2)?;
    let mut gens: Vec<Poly<F::Elem>> = i1.gens().iter().map(|g| ring.mul(g, f2)).collect();
    gens.extend(i2.gens().iter().map(|g| ring.mul(g, f1)));
    Ok(LiaisonStep { kind: StepKind::Addition, d1, d2, ideal: Ideal::new(ring, gens)? })
}

/// `F2 I1 + (F1)`, for `F1 ∈ I1` and `F1, F2` a regular sequence.
pub fn basic_double_link<F: Field>(i1: &Ideal<F>, f1: &Poly<F::Elem>, f2: &Poly<F::Elem>) -> Result<LiaisonStep<F>> {
    let ring = i1.ring();
    if !i1.contains(f1) {
        return Err(Error::Validation("F1 does not lie in I1".into()));
    }
    let (d1, d2) = check_forms(ring, f1, f2)?;
    let mut gens: Vec<Poly<F::Elem>> = i1.gens().iter().map(|g| ring.mul(g, f2)).collect();
    gens.push(f1.clone());
    Ok(LiaisonStep { kind: StepKind::DoubleLink, d1, d2, ideal: Ideal::new(ring, gens)? })
}

/// Hilbert function of `R/I`; the unit ideal gives zero.
fn hf(h: Option<&HilbertData>, s: i64) -> i128 {
    match h {
        Some(h) if s >= 0 => h.function(s),
        _ => 0,
    }
}

/// Checks `h_Z(t) = h_V(t) + h_{V1}(t - d2) + h_{V2}(t - d1)` for every `t` up to a bound
/// past which all four functions are polynomial, where `V` is cut out by `F1, F2`.
/// `i2 = None` stands for the unit ideal (a basic double link).
pub fn hilbert_additivity_holds<F: Field>(step: &LiaisonStep<F>, i1: &Ideal<F>, i2: Option<&Ideal<F>>, f1: &Poly<F::Elem>, f2: &Poly<F::Elem>) -> Result<bool> {
    let ring = i1.ring();
    let v = Ideal::new(ring, vec![f1.clone(), f2.clone()])?.hilbert();
    let z = step.ideal.hilbert();
    let h1 = i1.hilbert();
    let h2 = match i2 {
        Some(i) if !i.is_unit() => Some(i.hilbert()),
        _ => None,
    };
    let reg = |h: &HilbertData| h.regularity_index.max(0) + 1;
    let bound = [reg(&v), reg(&z), reg(&h1), h2.as_ref().map(reg).unwrap_or(0)].into_iter().max().unwrap() + (step.d1 + step.d2) as i64 + 2;
    for t in 0..=bound {
        let rhs = hf(Some(&v), t) + hf(Some(&h1), t - step.d2 as i64) + hf(h2.as_ref(), t - step.d1 as i64);
        if hf(Some(&z), t) != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every degree moved up by `k`.
pub fn shift_rao(t: &RaoTable, k: i64) -> RaoTable {
    t.iter().map(|(d, v)| (d + k, *v)).collect()
}

/// `M1(-d2) ⊕ M2(-d1)` as graded dimensions.
pub fn predicted_rao(m1: &RaoTable, d2: i64, m2: &RaoTable, d1: i64) -> RaoTable {
    let mut out = shift_rao(m1, d2);
    for (d, v) in shift_rao(m2, d1) {
        *out.entry(d).or_insert(0) += v;
    }
    out
}

/// A factor of one arrangement lying on a flat of the other.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ProductWitness {
    /// 0 when a form of the first arrangement contains a flat of the second, 1 otherwise.
    pub side: u8,
    pub form: usize,
    pub flat: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ProductReport {
    pub holds: bool,
    pub witnesses: Vec<ProductWitness>,
}

fn in_span(f: &LinearForm, flat: &Flat) -> bool {
    // f in span(s, t) with s, t in echelon form on the pivots
    let [s, t] = &flat.basis;
    let (a, b) = (f.coeff(flat.pivots[0]).clone(), f.coeff(flat.pivots[1]).clone());
    (0..f.nvars()).all(|k| &a * s.coeff(k) + &b * t.coeff(k) == *f.coeff(k))
}

/// No form of `g` vanishes on a flat of `f` and no form of `f` on a flat of `g`; also no
/// form is shared.
pub fn arrangement_product_hypotheses(f: &Arrangement, g: &Arrangement) -> ProductReport {
    let mut witnesses = Vec::new();
    for (side, (a, b)) in [(f, g), (g, f)].into_iter().enumerate() {
        let flats = intersection_flats(b);
        for (i, l) in a.forms().iter().enumerate() {
            for (k, x) in flats.iter().enumerate() {
                if in_span(l, x) {
                    witnesses.push(ProductWitness { side: side as u8, form: i, flat: k });
                }
            }
        }
    }
    let shared = f.forms().iter().any(|a| g.forms().iter().any(|b| a.proportional(b)));
    ProductReport { holds: witnesses.is_empty() && !shared, witnesses }
}

/// The union of two arrangements as one form list.
pub fn product(f: &Arrangement, g: &Arrangement) -> Result<Arrangement> {
    let mut forms = f.forms().to_vec();
    forms.extend(g.forms().iter().cloned());
    Arrangement::new(f.names().to_vec(), forms)
}

fn std_names() -> Vec<String> {
    ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect()
}

/// `xyzw(x+y)(y+z)(z+w)(w+x)(w+x+y+z)`: `J̄` has Rao module `k` in degree 8, degree 42.
pub fn nine_plane_block() -> Arrangement {
    let c: [[i64; 4]; 9] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1], [1, 1, 1, 1]];
    Arrangement::new(std_names(), c.iter().map(|r| form(r)).collect()).unwrap()
}

/// `yz(x+y)(x+z)(w+x)(x+y+z)(w+x+y)(w+x+z)`: the radical curve has Rao module `k` in degree 4.
pub fn eight_plane_block() -> Arrangement {
    let c: [[i64; 4]; 8] = [[0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1], [1, 1, 1, 0], [1, 1, 0, 1], [1, 0, 1, 1]];
    Arrangement::new(std_names(), c.iter().map(|r| form(r)).collect()).unwrap()
}

fn is_singular(m: &[[i64; 4]; 4]) -> bool {
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    for c in 0..4 {
        let Some(p) = (c..4).find(|&r| !a[r][c].is_zero()) else { return true };
        a.swap(p, c);
        for r in c + 1..4 {
            let f = &a[r][c] / &a[c][c];
            for j in c..4 {
                let t = &f * &a[c][j];
                a[r][j] -= t;
            }
        }
    }
    false
}

/// Apply `x_i ↦ Σ_j m[i][j] x_j` to each form.
fn change_coordinates(a: &Arrangement, m: &[[i64; 4]; 4]) -> Result<Arrangement> {
    let images: Vec<LinearForm> = m.iter().map(|r| form(r)).collect();
    let forms = a.forms().iter().map(|f| f.substitute(&images)).collect::<Result<Vec<_>>>()?;
    Arrangement::new(a.names().to_vec(), forms)
}

/// Result of a Rao-module construction with its predictions.
#[derive(Clone, Debug)]
pub struct Construction {
    pub arrangement: Arrangement,
    /// Block copies followed by the extra planes.
    pub copies: Vec<Arrangement>,
    pub extra: Vec<LinearForm>,
    pub predicted_rao: RaoTable,
    /// Degree of the curve the construction targets.
    pub predicted_degree: u64,
}

fn build(block: &Arrangement, r: usize, h: usize, seed: u64) -> Result<(Arrangement, Vec<Arrangement>, Vec<LinearForm>)> {
    if r == 0 {
        return Err(Error::Validation("r must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut copies = vec![block.clone()];
    let mut acc = block.clone();
    for _ in 1..r {
        let mut placed = false;
        for _ in 0..32 {
            let mut m = [[0i64; 4]; 4];
            for row in m.iter_mut() {
                for x in row.iter_mut() {
                    *x = rng.gen_range(-9..=9);
                }
            }
            if is_singular(&m) {
                continue;
            }
            let Ok(copy) = change_coordinates(block, &m) else { continue };
            if !arrangement_product_hypotheses(&acc, &copy).holds {
                continue;
            }
            acc = product(&acc, &copy)?;
            copies.push(copy);
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::Limit("no admissible coordinate change after 32 attempts".into()));
        }
    }
    let (acc, extra) = add_planes(&acc, h, &mut rng)?;
    Ok((acc, copies, extra))
}

fn add_planes(a: &Arrangement, h: usize, rng: &mut ChaCha8Rng) -> Result<(Arrangement, Vec<LinearForm>)> {
    let mut acc = a.clone();
    let mut extra = Vec::new();
    for _ in 0..h {
        let mut placed = false;
        for _ in 0..32 {
            let c: Vec<i64> = (0..acc.nvars()).map(|_| rng.gen_range(-999..=999)).collect();
            let Ok(l) = LinearForm::from_ints(&c) else { continue };
            let single = Arrangement::new(acc.names().to_vec(), vec![l.clone()])?;
            if !arrangement_product_hypotheses(&acc, &single).holds {
                continue;
            }
            acc = product(&acc, &single)?;
            extra.push(l);
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::Limit("no admissible extra plane after 32 attempts".into()));
        }
    }
    Ok((acc, extra))
}

/// Append `h` seeded general planes, each containing no flat of what came before.
pub fn add_general_planes(a: &Arrangement, h: usize, seed: u64) -> Result<(Arrangement, Vec<LinearForm>)> {
    add_planes(a, h, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// `r` seeded copies of the nine-plane block times `h` general planes, targeting `J̄`:
/// Rao `{8 + 9(r-1) + h ↦ r}`.
pub fn construct_lr(r: usize, h: usize, seed: u64) -> Result<Construction> {
    let block = nine_plane_block();
    let (arrangement, copies, extra) = build(&block, r, h, seed)?;
    // D_1 = 42, D_k = D_{k-1} + 42 + 81 (k-1); each extra plane adds the current plane count
    let mut deg = 42u64;
    for k in 2..=r as u64 {
        deg += 42 + 81 * (k - 1);
    }
    let mut planes = 9 * r as u64;
    for _ in 0..h {
        deg += planes;
        planes += 1;
    }
    let mut rao = RaoTable::new();
    rao.insert(8 + 9 * (r as i64 - 1) + h as i64, r as u64);
    Ok(Construction { arrangement, copies, extra, predicted_rao: rao, predicted_degree: deg })
}

/// Same scheme with the eight-plane block, targeting the radical curve:
/// Rao `{4 + 8(r-1) + h ↦ r}`; the degree is the number of flats.
pub fn construct_lr_radical(r: usize, h: usize, seed: u64) -> Result<Construction> {
    let block = eight_plane_block();
    let (arrangement, copies, extra) = build(&block, r, h, seed)?;
    let deg = intersection_flats(&arrangement).len() as u64;
    let mut rao = RaoTable::new();
    rao.insert(4 + 8 * (r as i64 - 1) + h as i64, r as u64);
    Ok(Construction { arrangement, copies, extra, predicted_rao: rao, predicted_degree: deg })
}
