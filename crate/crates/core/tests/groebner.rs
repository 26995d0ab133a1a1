use std::sync::Arc;

use sing_core::groebner::*;
use sing_core::polyring::{MonomialOrder, PrimeField, Rationals, Ring};

fn qring() -> Arc<Ring<Rationals>> {
    Arc::new(Ring::standard(Rationals, 4))
}

fn ideal(r: &Arc<Ring<Rationals>>, gens: &[&str]) -> Ideal<Rationals> {
    Ideal::new(r, gens.iter().map(|g| r.parse(g).unwrap()).collect()).unwrap()
}

fn fmt(i: &Ideal<Rationals>) -> Vec<String> {
    reduced_groebner(i, MonomialOrder::GrevLex).iter().map(|p| i.ring().format(p)).collect()
}

#[test]
fn reduced_bases() {
    let r = qring();
    assert_eq!(fmt(&ideal(&r, &["x", "y"])), vec!["y", "x"]);
    assert_eq!(fmt(&ideal(&r, &["x+y", "x-y"])), vec!["y", "x"]);
    let i = ideal(&r, &["x*y", "x*z", "y*z"]);
    assert_eq!(fmt(&i), vec!["y*z", "x*z", "x*y"]);
    assert!(is_groebner(&r, &i.grevlex()));
}

#[test]
fn normal_forms() {
    let r = qring();
    let i = ideal(&r, &["x-y"]);
    let gb = i.groebner(MonomialOrder::Lex);
    assert_eq!(r.format(&normal_form(&r, &r.parse("x^2").unwrap(), &gb)), "y^2");
    let j = ideal(&r, &["x", "y"]);
    assert!(normal_form(&r, &r.parse("w*x").unwrap(), &j.grevlex()).is_zero());
}

#[test]
fn equality() {
    let r = qring();
    assert!(ideal_equal(&ideal(&r, &["x", "y"]), &ideal(&r, &["x+y", "y"])));
    assert!(ideal_equal(&ideal(&r, &["x*y", "z"]), &ideal(&r, &["z", "x*y"])));
    assert!(!ideal_equal(&ideal(&r, &["x"]), &ideal(&r, &["x^2"])));
}

#[test]
fn intersections() {
    let r = qring();
    let i = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
    assert_eq!(fmt(&i), vec!["x*y"]);
    let i = intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["z", "w"])).unwrap();
    assert!(ideal_equal(&i, &ideal(&r, &["x*z", "x*w", "y*z", "y*w"])));
    let i = intersect(&intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["x", "z"])).unwrap(), &ideal(&r, &["y", "z"])).unwrap();
    assert!(ideal_equal(&i, &ideal(&r, &["x*y", "x*z", "y*z"])));
}

#[test]
fn quotients() {
    let r = qring();
    let q = colon(&ideal(&r, &["x*y"]), &ideal(&r, &["x"])).unwrap();
    assert!(ideal_equal(&q, &ideal(&r, &["y"])));
    let i = ideal(&r, &["x^2", "x*y"]);
    assert!(ideal_equal(&colon(&i, &ideal(&r, &["1"])).unwrap(), &i));
    assert!(ideal_equal(&colon(&i, &ideal(&r, &["x"])).unwrap(), &ideal(&r, &["x", "y"])));
}

#[test]
fn saturations() {
    let r = qring();
    let (s, k) = saturate(&ideal(&r, &["x^2*y", "x^2*z"]), &ideal(&r, &["x"])).unwrap();
    assert!(ideal_equal(&s, &ideal(&r, &["y", "z"])));
    assert_eq!(k, 2);
    let i = ideal(&r, &["x*y", "z^2"]);
    let (s, k) = saturate(&i, &ideal(&r, &["1"])).unwrap();
    assert!(ideal_equal(&s, &i));
    assert_eq!(k, 0);

    let line = ideal(&r, &["x", "y"]);
    assert!(ideal_equal(&saturate_irrelevant(&line).unwrap(), &line));
    let m2 = ideal(&r, &["x^2", "x*y", "x*z", "x*w", "y^2", "y*z", "y*w", "z^2", "z*w", "w^2"]);
    assert!(saturate_irrelevant(&m2).unwrap().is_unit());
    // irrelevant component
    let irr = intersect(&line, &m2).unwrap();
    assert!(!is_saturated(&irr).unwrap());
    assert!(ideal_equal(&saturate_irrelevant(&irr).unwrap(), &line));
    // embedded point at (0:0:0:1): a genuine part of the scheme, so saturated
    let emb = intersect(&line, &ideal(&r, &["x^2", "y^2", "z^2"])).unwrap();
    assert!(is_saturated(&emb).unwrap());
}

#[test]
fn radical() {
    let r = qring();
    assert!(radical_membership(&r.parse("x").unwrap(), &ideal(&r, &["x^2"])).unwrap());
    assert!(!radical_membership(&r.parse("z").unwrap(), &ideal(&r, &["x", "y"])).unwrap());
    let i = ideal(&r, &["x^3", "y^2 - x*z"]);
    assert!(radical_membership_rabinowitsch(&r.parse("y").unwrap(), &i).unwrap());
    assert!(!radical_membership_rabinowitsch(&r.parse("z").unwrap(), &i).unwrap());
}

#[test]
fn elimination() {
    let r = Ring::new(Rationals, vec!["t".into(), "x".into(), "y".into()]).unwrap();
    let gens = vec![r.parse("t*x").unwrap(), r.parse("(1-t)*y").unwrap()];
    let out = eliminate_polys(&r, &gens, &[0]).unwrap();
    let s: Vec<String> = out.iter().map(|p| r.format(p)).collect();
    assert_eq!(s, vec!["x*y"]);

    let q = qring();
    let i = ideal(&q, &["x*y", "z^2"]);
    assert!(ideal_equal(&eliminate(&i, &[]).unwrap(), &i));
    assert!(eliminate(&i, &[0, 1, 2, 3]).unwrap().is_zero());
    let e = eliminate(&ideal(&q, &["x - y", "y - z"]), &[0]).unwrap();
    assert!(ideal_equal(&e, &ideal(&q, &["y - z"])));
}

#[test]
fn prime_field_agrees() {
    let p = Arc::new(Ring::standard(PrimeField::default_prime(), 4));
    let q = qring();
    let g = ["x^2*y - z^3", "x*w^2 + 3*y*z*w", "y^3 - 2*x*z*w"];
    let iq = ideal(&q, &g);
    let ip = Ideal::new(&p, g.iter().map(|s| p.parse(s).unwrap()).collect()).unwrap();
    let bq: Vec<String> = fmt(&iq);
    let bp: Vec<String> = ip.grevlex().polys.iter().map(|f| p.format(f)).collect();
    assert_eq!(bq.len(), bp.len());
    assert!(is_groebner(&q, &iq.grevlex()));
    assert!(is_groebner(&p, &ip.grevlex()));
    assert_eq!(iq.grevlex().leads, ip.grevlex().leads);
}
