use std::sync::Arc;

use sing_core::groebner::Ideal;
use sing_core::homology::*;
use sing_core::polyring::{parse_linear_form, PrimeField, Rationals, Ring};

fn qring() -> Arc<Ring<Rationals>> {
    Arc::new(Ring::standard(Rationals, 4))
}

fn ideal(r: &Arc<Ring<Rationals>>, gens: &[&str]) -> Ideal<Rationals> {
    Ideal::new(r, gens.iter().map(|g| r.parse(g).unwrap()).collect()).unwrap()
}

#[test]
fn koszul() {
    let r = qring();
    let res = minimal_free_resolution(&ideal(&r, &["x", "y"]));
    assert_eq!(res.modules, vec![vec![0], vec![1, 1], vec![2]]);
    let b = minimal_free_resolution(&ideal(&r, &["x", "y", "z"])).betti();
    assert_eq!(b.totals(), vec![1, 3, 3, 1]);
    let b = minimal_free_resolution(&ideal(&r, &["x", "y", "z", "w"])).betti();
    assert_eq!(b.totals(), vec![1, 4, 6, 4, 1]);
    assert!(res.is_complex());
}

#[test]
fn syzygies_of_monomials() {
    let r = qring();
    let i = ideal(&r, &["x*y", "x*z", "y*z"]);
    let res = minimal_free_resolution(&i);
    let b = res.betti();
    assert_eq!(b.totals(), vec![1, 3, 2]);
    assert_eq!(b.row(1), vec![0, 3, 2]);
    assert!(res.is_complex());
    assert_eq!(b.alternating_numerator(), i.hilbert().numerator);
}

#[test]
fn minimize_schreyer() {
    let r = qring();
    let i = ideal(&r, &["x^2 - y*z", "x*y - z^2", "y^2 - x*z", "x*w"]);
    let m = minimal_free_resolution(&i);
    let s = Resolution::schreyer(&i);
    assert_eq!(m.betti(), s.betti());
    assert!(s.is_complex());
    assert_eq!(m.betti().alternating_numerator(), i.hilbert().numerator);
}

#[test]
fn dims_and_cm() {
    let r = qring();
    let d = dimensions(&ideal(&r, &["x", "y"])).unwrap();
    assert_eq!((d.krull, d.codim, d.projective), (2, 2, 2));
    let d = dimensions(&ideal(&r, &["x", "y", "z", "w"])).unwrap();
    assert_eq!((d.krull, d.codim, d.projective), (0, 4, 4));
    assert!(is_cm(&ideal(&r, &["x", "y"])).unwrap());
    // two skew lines
    let skew = sing_core::groebner::intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["z", "w"])).unwrap();
    assert!(!is_cm(&skew).unwrap());
    let rao = rao_dimensions(&skew).unwrap();
    assert_eq!(rao.into_iter().collect::<Vec<_>>(), vec![(0, 1)]);
    assert!(rao_dimensions(&ideal(&r, &["x", "y"])).unwrap().is_empty());
}

#[test]
fn betti_text_layout() {
    let r = qring();
    let b = minimal_free_resolution(&ideal(&r, &["x*y", "x*z", "y*z"])).betti();
    let want = "        0    1    2\n--------------------\n 0:     1    -    -\n 1:     -    3    2\n--------------------\nTot:    1    3    2\n";
    assert_eq!(b.to_text(), want);
    let j = b.to_json();
    assert_eq!(BettiTable::from_json(&j).unwrap(), b);
}

#[test]
fn four_planes_through_a_point() {
    let r = Arc::new(Ring::standard(PrimeField::default_prime(), 4));
    let ls: Vec<_> = ["x", "y", "z", "x+y+z"].iter().map(|s| parse_linear_form(s, r.names()).unwrap()).collect();
    let f = r.expand_product(&ls).unwrap();
    let j = Ideal::new(&r, r.gradient(&f)).unwrap();
    let b = minimal_free_resolution(&j).betti();
    assert_eq!(b.totals(), vec![1, 3, 3, 1]);
    assert_eq!(b.row(2), vec![0, 3, 0, 0]);
    assert_eq!(b.row(3), vec![0, 0, 3, 1]);
    assert_eq!(j.hilbert().format_polynomial(), "6t - 1");
}
