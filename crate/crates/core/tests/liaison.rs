use sing_core::arrangement::*;
use sing_core::groebner::{ideal_equal, saturate_irrelevant, Ideal};
use sing_core::homology::*;
use sing_core::liaison::*;
use sing_core::polyring::{PrimeField, Ring};
use std::sync::Arc;

fn ring() -> Arc<Ring<PrimeField>> {
    Arc::new(Ring::standard(PrimeField::default_prime(), 4))
}

#[test]
fn three_lines() {
    let r = ring();
    let p = |s: &str| r.parse(s).unwrap();
    let i1 = Ideal::new(&r, vec![p("x"), p("y")]).unwrap();
    let i2 = Ideal::new(&r, vec![p("z"), p("w")]).unwrap();
    let step = liaison_addition(&i1, &p("x"), &i2, &p("z")).unwrap();
    let expected = Ideal::new(&r, vec![p("x*z"), p("y*z"), p("x*w")]).unwrap();
    assert!(ideal_equal(&step.ideal, &expected));
    assert!(hilbert_additivity_holds(&step, &i1, Some(&i2), &p("x"), &p("z")).unwrap());
}

#[test]
fn unequal_degrees() {
    // I1 a line with F1 of degree 3, I2 a conic with F2 of degree 2
    let r = ring();
    let p = |s: &str| r.parse(s).unwrap();
    let i1 = Ideal::new(&r, vec![p("x"), p("y")]).unwrap();
    let i2 = Ideal::new(&r, vec![p("z"), p("w^2 + x*y")]).unwrap();
    let f1 = p("x^3 + y*z^2");
    let f2 = p("z*w + z^2");
    let step = liaison_addition(&i1, &f1, &i2, &f2).unwrap();
    assert_eq!((step.d1, step.d2), (3, 2));
    assert!(hilbert_additivity_holds(&step, &i1, Some(&i2), &f1, &f2).unwrap());
    let sat = saturate_irrelevant(&step.ideal).unwrap();
    assert!(ideal_equal(&sat, &step.ideal));
    assert!(is_cm(&step.ideal).unwrap());
}

#[test]
fn double_link() {
    let r = ring();
    let p = |s: &str| r.parse(s).unwrap();
    let i1 = Ideal::new(&r, vec![p("x"), p("y")]).unwrap();
    let step = basic_double_link(&i1, &p("x"), &p("z")).unwrap();
    let expected = Ideal::new(&r, vec![p("x"), p("y*z")]).unwrap();
    assert!(ideal_equal(&step.ideal, &expected));
    assert!(hilbert_additivity_holds(&step, &i1, None, &p("x"), &p("z")).unwrap());
    assert!(basic_double_link(&i1, &p("z"), &p("w")).is_err());
    assert!(basic_double_link(&i1, &p("x"), &p("x")).is_err());
}

#[test]
fn nine_plane_block_rao() {
    let a = nine_plane_block();
    let r = a.ring(PrimeField::default_prime()).unwrap();
    let top = top_comb(&r, &a).unwrap();
    assert_eq!(top.hilbert().curve_polynomial().unwrap().0, 42);
    let rao = rao_dimensions(&top).unwrap();
    assert_eq!(format_rao(&rao), "{8 -> 1}");
    let f = a.defining_polynomial(&r).unwrap();
    let l = r.parse("3x - 5y + 7z + 11w").unwrap();
    let step = basic_double_link(&top, &f, &l).unwrap();
    assert_eq!(format_rao(&rao_dimensions(&step.ideal).unwrap()), "{9 -> 1}");
    assert!(hilbert_additivity_holds(&step, &top, None, &f, &l).unwrap());
}

#[test]
fn eight_plane_block_rao() {
    let a = eight_plane_block();
    let r = a.ring(PrimeField::default_prime()).unwrap();
    let rad = radical_comb(&r, &a).unwrap();
    let b = betti_table(&minimal_free_resolution(&rad));
    assert_eq!(b.row(5), vec![0, 8, 8, 1]);
    assert_eq!(format_rao(&rao_dimensions(&rad).unwrap()), "{4 -> 1}");
}

#[test]
fn products() {
    let c = construct_lr(2, 0, 11).unwrap();
    assert_eq!(c.arrangement.len(), 18);
    assert!(arrangement_product_hypotheses(&c.copies[0], &c.copies[1]).holds);
    assert_eq!(c.predicted_degree, 165);
    assert_eq!(format_rao(&c.predicted_rao), "{17 -> 2}");
    let bad = parse_arrangement("vars: x y z w\nx+y\n").unwrap();
    let rep = arrangement_product_hypotheses(&nine_plane_block(), &bad);
    assert!(!rep.holds);
    assert_eq!(construct_lr(3, 0, 1).unwrap().predicted_degree, 369);
    assert_eq!(format_rao(&construct_lr_radical(1, 2, 1).unwrap().predicted_rao), "{6 -> 1}");
}
