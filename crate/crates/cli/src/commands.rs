use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use serde_json::{json, Value};

use sing_core::arrangement::graph::{graphic_arrangement, parse_graph, triangle_condition, Graph};
use sing_core::arrangement::*;
use sing_core::groebner::{ideal_equal, is_saturated, reduced_groebner, saturate_irrelevant, Ideal};
use sing_core::homology::*;
use sing_core::liaison::*;
use sing_core::polyring::{Field, LinearForm, MonomialOrder, PrimeField, Rationals, Ring};
use sing_core::Error;

use crate::corpus::{Expect, CORPUS};
use crate::{Command, Ctx, Failure, FieldChoice, Kind, Outputs, Report};

type Out = Result<(), Failure>;

// Runs a generic function over the chosen field.
macro_rules! on_field {
    ($choice:expr, $f:ident ( $($arg:expr),* )) => {
        match $choice {
            FieldChoice::Rationals => $f(Rationals, $($arg),*),
            FieldChoice::Prime(p) => $f(PrimeField::new(p)?, $($arg),*),
        }
    };
}

pub fn run(ctx: &Ctx, cmd: &Command, rep: &mut Report) -> Out {
    let only = |betti, hilbert, cm, rao| Outputs { betti, hilbert, cm, rao, gens: false };
    match cmd {
        Command::Lattice { file } => lattice(&load(file)?, rep),
        Command::Jacobian { file, out } => ideal_cmd(ctx, file, Kind::Jacobian, out, rep),
        Command::Radical { file, out } => ideal_cmd(ctx, file, Kind::Radical, out, rep),
        Command::Top { file, out } => ideal_cmd(ctx, file, Kind::Top, out, rep),
        Command::Betti { file, of } => ideal_cmd(ctx, file, *of, &only(true, false, false, false), rep),
        Command::Hilbert { file, of } => ideal_cmd(ctx, file, *of, &only(false, true, false, false), rep),
        Command::Cm { file, of } => ideal_cmd(ctx, file, *of, &only(false, false, true, false), rep),
        Command::Rao { file, of } => ideal_cmd(ctx, file, *of, &only(false, false, false, true), rep),
        Command::Symbolic { file, b, all, override_rules, out } => {
            let a = load_p3(ctx, file, rep)?;
            let flats = intersection_flats(&a);
            let b = match (b, all) {
                (Some(b), _) => b.clone(),
                (None, Some(n)) => vec![*n; flats.len()],
                (None, None) => flats.iter().map(|f| if f.multiplicity() == 2 { 1 } else { 2 }).collect(),
            };
            rep.set("b", &b);
            rep.line(format!("exponents: {}", join(&b)));
            let field = field_for(ctx, &a, rep);
            on_field!(field, symbolic(&a, &b, *override_rules, out, ctx.order, rep))
        }
        Command::Hypothesis { file } => {
            let a = load(file)?;
            let flats = intersection_flats(&a);
            let h = hypothesis_from_flats(a.len(), &flats);
            rep.set("holds", h.holds);
            rep.line(format!("hypothesis: {}", if h.holds { "holds" } else { "fails" }));
            let mut ws = Vec::new();
            for w in &h.witnesses {
                let plane = a.forms()[w.hyperplane].format(a.names());
                let (f, g) = (flats[w.flats.0].format(a.names()), flats[w.flats.1].format(a.names()));
                rep.line(format!("witness: plane {plane} contains {f} and {g}"));
                ws.push(json!({ "plane": plane, "index": w.hyperplane + 1, "flats": [f, g] }));
            }
            rep.set("witnesses", ws);
            Ok(())
        }
        Command::Graphic { file, section } => {
            let g = load_graph(file)?;
            let mut a = graphic_arrangement(&g)?;
            if *section {
                a = generic_section(&a, ctx.seed)?;
            }
            emit_arrangement(&a, rep);
            Ok(())
        }
        Command::Triangles { file } => {
            let g = load_graph(file)?;
            let t = triangle_condition(&g);
            rep.set("triangles", g.triangles().len());
            rep.set("holds", t.holds);
            rep.line(format!("triangles: {}", g.triangles().len()));
            rep.line(format!("no edge on two triangles: {}", t.holds));
            for w in &t.witnesses {
                let (s, u) = w.triangles;
                rep.line(format!(
                    "witness: edge {}-{} on triangles {} and {}",
                    w.edge.0 + 1,
                    w.edge.1 + 1,
                    tri(&s),
                    tri(&u)
                ));
            }
            rep.set("witnesses", &t.witnesses);
            Ok(())
        }
        Command::Section { file } => {
            let a = load(file)?;
            let s = generic_section(&a, ctx.seed)?;
            emit_arrangement(&s, rep);
            Ok(())
        }
        Command::LiaisonAdd { first, second, radical, verify } => {
            let a = load_p3(ctx, first, rep)?;
            let b = load_p3(ctx, second, rep)?;
            if a.names() != b.names() {
                return Err(Error::Validation("both arrangements must use the same variables".into()).into());
            }
            let hyp = arrangement_product_hypotheses(&a, &b);
            rep.set("hypotheses", &hyp);
            if !hyp.holds {
                let w = &hyp.witnesses[0];
                let side = if w.side == 0 { "first" } else { "second" };
                return Err(Error::Validation(format!(
                    "product hypotheses fail: form {} of the {side} arrangement contains flat {} of the other ({} witnesses)",
                    w.form + 1,
                    w.flat + 1,
                    hyp.witnesses.len()
                ))
                .into());
            }
            let ab = product(&a, &b)?;
            let field = field_for(ctx, &ab, rep);
            on_field!(field, liaison_add(&a, &b, &ab, *radical, *verify, rep))
        }
        Command::Bdl { file, planes, radical, verify } => {
            let a = load_p3(ctx, file, rep)?;
            let (acc, extra) = add_general_planes(&a, *planes, ctx.seed)?;
            let field = field_for(ctx, &acc, rep);
            on_field!(field, bdl(&a, &acc, &extra, *radical, *verify, rep))
        }
        Command::ConstructLr { r, h, verify } => {
            let c = construct_lr(*r, *h, ctx.seed)?;
            let field = field_for(ctx, &c.arrangement, rep);
            on_field!(field, construction(&c, false, *verify, rep))
        }
        Command::ConstructLrRadical { r, h, verify } => {
            let c = construct_lr_radical(*r, *h, ctx.seed)?;
            let field = field_for(ctx, &c.arrangement, rep);
            on_field!(field, construction(&c, true, *verify, rep))
        }
        Command::Corpus { dir, only, stretch } => corpus(ctx, dir, only.as_deref(), *stretch, rep),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn tri(t: &[usize; 3]) -> String {
    format!("{}-{}-{}", t[0] + 1, t[1] + 1, t[2] + 1)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn is_graph(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "graph")
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_graph(&read(path)?)?)
}

/// An arrangement file, or the graphic arrangement of a graph file.
fn load(path: &Path) -> Result<Arrangement, Failure> {
    if is_graph(path) {
        return Ok(graphic_arrangement(&load_graph(path)?)?);
    }
    Ok(parse_arrangement(&read(path)?)?)
}

/// Like `load`, restricted to a general P^3 when there are more than four variables.
fn load_p3(ctx: &Ctx, path: &Path, rep: &mut Report) -> Result<Arrangement, Failure> {
    let a = load(path)?;
    if a.nvars() <= 4 {
        return Ok(a);
    }
    let s = generic_section(&a, ctx.seed)?;
    rep.set("section", s.to_text());
    rep.line(format!("restricted {} to a general P^3 (seed {})", path.display(), ctx.seed));
    Ok(s)
}

/// The requested field, or the rationals when the prime collapses the lattice.
fn field_for(ctx: &Ctx, a: &Arrangement, rep: &mut Report) -> FieldChoice {
    match ctx.field {
        FieldChoice::Prime(p) if !prime_is_safe(a, p) => {
            rep.set("field_fallback", format!("p:{p} changes the intersection lattice; using q"));
            rep.line(format!("note: p:{p} changes the intersection lattice, working over q"));
            rep.field = "q".into();
            FieldChoice::Rationals
        }
        f => f,
    }
}

fn emit_arrangement(a: &Arrangement, rep: &mut Report) {
    let text = a.to_text();
    rep.set("arrangement", &text);
    rep.set("planes", a.len());
    rep.text.push_str(&text);
}

fn lattice(a: &Arrangement, rep: &mut Report) -> Out {
    let flats = intersection_flats(a);
    let mut rows = Vec::new();
    for f in &flats {
        let members: Vec<usize> = f.members.iter().map(|m| m + 1).collect();
        rep.line(format!("e={}  {}  {{{}}}", f.multiplicity(), f.format(a.names()), join(&members)));
        rows.push(json!({ "flat": f.format(a.names()), "e": f.multiplicity(), "members": members }));
    }
    let mut counts = std::collections::BTreeMap::new();
    for f in &flats {
        *counts.entry(f.multiplicity()).or_insert(0usize) += 1;
    }
    let summary: Vec<String> = counts.iter().rev().map(|(e, n)| format!("{n} with e={e}")).collect();
    rep.line(format!("flats: {} ({})", flats.len(), summary.join(", ")));
    let (red, top) = combinatorial_degrees(a);
    rep.line(format!("degrees: radical {red}, top {top}"));
    rep.set("flats", rows);
    rep.set("counts", counts.iter().map(|(e, n)| (e.to_string(), *n)).collect::<std::collections::BTreeMap<_, _>>());
    rep.set("degree_radical", red);
    rep.set("degree_top", top);
    Ok(())
}

fn ideal_of<F: Field>(ring: &Arc<Ring<F>>, a: &Arrangement, kind: Kind) -> sing_core::Result<Ideal<F>> {
    match kind {
        Kind::Jacobian => jacobian_ideal(ring, a),
        Kind::Saturation => saturate_irrelevant(&jacobian_ideal(ring, a)?),
        Kind::Radical => radical_comb(ring, a),
        Kind::Top => top_comb(ring, a),
    }
}

fn comb<F: Field>(ring: &Arc<Ring<F>>, a: &Arrangement, radical: bool) -> sing_core::Result<Ideal<F>> {
    ideal_of(ring, a, if radical { Kind::Radical } else { Kind::Top })
}

fn ideal_cmd(ctx: &Ctx, file: &Path, kind: Kind, out: &Outputs, rep: &mut Report) -> Out {
    let a = load_p3(ctx, file, rep)?;
    rep.set("ideal", kind);
    let field = field_for(ctx, &a, rep);
    on_field!(field, compute_and_describe(&a, kind, out, ctx.order, rep))
}

fn compute_and_describe<F: Field>(field: F, a: &Arrangement, kind: Kind, out: &Outputs, order: MonomialOrder, rep: &mut Report) -> Out {
    let ring = a.ring(field)?;
    let ideal = ideal_of(&ring, a, kind)?;
    describe(&ideal, out, order, rep)
}

fn symbolic<F: Field>(field: F, a: &Arrangement, b: &[u32], override_rules: bool, out: &Outputs, order: MonomialOrder, rep: &mut Report) -> Out {
    let ring = a.ring(field)?;
    let ideal = symbolic_intersection(&ring, a, b, override_rules)?;
    describe(&ideal, out, order, rep)
}

/// Prints whichever artifacts were asked for; generators when nothing else was.
fn describe<F: Field>(ideal: &Ideal<F>, out: &Outputs, order: MonomialOrder, rep: &mut Report) -> Out {
    let any = out.betti || out.hilbert || out.cm || out.rao;
    if !any {
        let gens = ideal.format_gens();
        for g in &gens {
            rep.line(g);
        }
        rep.set("generators", gens);
    }
    if out.gens {
        let ring = ideal.ring();
        let gb: Vec<String> = reduced_groebner(ideal, order).iter().map(|g| ring.format(g)).collect();
        rep.line(format!("groebner basis ({}):", order.name()));
        for g in &gb {
            rep.line(format!("  {g}"));
        }
        rep.set("groebner", gb);
        rep.set("order", order.name());
    }
    if !any {
        return Ok(());
    }
    let hilb = ideal.hilbert();
    let res = (out.betti || out.cm || out.rao).then(|| minimal_free_resolution(ideal));
    if let Some(res) = &res {
        let betti = betti_table(res);
        if out.betti {
            rep.text.push_str(&betti.to_text());
            rep.set("betti", betti.to_json());
        }
        if out.cm {
            let dims = Dimensions { krull: hilb.dim, codim: ideal.nvars() - hilb.dim, projective: betti.projective_dimension() };
            let cm = is_cm_from(&betti, &hilb);
            rep.line(format!("dim {}  codim {}  pd {}", dims.krull, dims.codim, dims.projective));
            rep.line(format!("cohen-macaulay: {cm}"));
            rep.set("dimensions", dims);
            rep.set("cm", cm);
        }
    }
    if out.hilbert {
        rep.line(format!("hilbert numerator: {}", series_text(&hilb.numerator, hilb.offset)));
        rep.line(format!("hilbert polynomial: {}", hilb.format_polynomial()));
        if let Some((d, _)) = hilb.curve_polynomial() {
            rep.line(format!("degree: {d}"));
        }
        rep.set("hilbert_polynomial", hilb.format_polynomial());
        rep.set("hilbert", &hilb);
    }
    if out.rao {
        let rao = rao_from_resolution(ideal, res.as_ref().expect("resolution computed"))?;
        rep.line(format!("rao: {}", format_rao(&rao)));
        set_rao(rep, "rao", &rao);
    }
    Ok(())
}

fn series_text(s: &[i64], offset: i64) -> String {
    let mut out = String::new();
    for (i, &c) in s.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let e = i as i64 + offset;
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        match e {
            0 => out.push_str(&a.to_string()),
            _ => {
                if a != 1 {
                    out.push_str(&a.to_string());
                }
                out.push('t');
                if e != 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn set_rao(rep: &mut Report, key: &str, rao: &RaoTable) {
    let pairs: Vec<Value> = rao.iter().map(|(d, n)| json!([d, n])).collect();
    rep.set(key, pairs);
}

/// Named pass/fail checks for `--verify`.
#[derive(Default)]
struct Checks(Vec<(String, bool)>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, ok: bool) {
        self.0.push((name.into(), ok));
    }

    fn finish(self, rep: &mut Report) -> Out {
        for (n, ok) in &self.0 {
            rep.line(format!("check {n}: {}", if *ok { "ok" } else { "FAILED" }));
        }
        let map: serde_json::Map<String, Value> = self.0.iter().map(|(n, ok)| (n.clone(), Value::Bool(*ok))).collect();
        rep.set("checks", map);
        let bad: Vec<&str> = self.0.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
        if bad.is_empty() {
            rep.set("ok", true);
            Ok(())
        } else {
            rep.set("ok", false);
            Err(Failure::Mismatch(bad.join(", ")))
        }
    }
}

/// Betti table, Hilbert polynomial, CM verdict and Rao dimensions of a curve ideal.
fn summarize<F: Field>(ideal: &Ideal<F>, rep: &mut Report) -> sing_core::Result<(RaoTable, i64)> {
    let res = minimal_free_resolution(ideal);
    let betti = betti_table(&res);
    let hilb = ideal.hilbert();
    let rao = rao_from_resolution(ideal, &res)?;
    let degree = hilb.curve_polynomial().map(|(d, _)| d).unwrap_or(0);
    rep.text.push_str(&betti.to_text());
    rep.line(format!("hilbert polynomial: {}", hilb.format_polynomial()));
    rep.line(format!("degree: {degree}"));
    rep.line(format!("cohen-macaulay: {}", is_cm_from(&betti, &hilb)));
    rep.line(format!("rao: {}", format_rao(&rao)));
    rep.set("betti", betti.to_json());
    rep.set("hilbert_polynomial", hilb.format_polynomial());
    rep.set("degree", degree);
    rep.set("cm", is_cm_from(&betti, &hilb));
    set_rao(rep, "rao", &rao);
    Ok((rao, degree))
}

fn liaison_add<F: Field>(field: F, a: &Arrangement, b: &Arrangement, ab: &Arrangement, radical: bool, verify: bool, rep: &mut Report) -> Out {
    let ring = ab.ring(field)?;
    let i1 = comb(&ring, a, radical)?;
    let i2 = comb(&ring, b, radical)?;
    let f1 = a.defining_polynomial(&ring)?;
    let f2 = b.defining_polynomial(&ring)?;
    let step = liaison_addition(&i1, &f1, &i2, &f2)?;
    rep.set("arrangement", ab.to_text());
    rep.line(format!("liaison addition: {} + {} planes", a.len(), b.len()));
    let (rao, _) = summarize(&step.ideal, rep)?;
    if !verify {
        return Ok(());
    }
    let mut checks = Checks::default();
    checks.push("ideal", ideal_equal(&step.ideal, &comb(&ring, ab, radical)?));
    checks.push("saturated", is_saturated(&step.ideal)?);
    checks.push("additivity", hilbert_additivity_holds(&step, &i1, Some(&i2), &f1, &f2)?);
    let (r1, r2) = (rao_dimensions(&i1)?, rao_dimensions(&i2)?);
    checks.push("rao", rao == predicted_rao(&r1, step.d2 as i64, &r2, step.d1 as i64));
    if r1.is_empty() && r2.is_empty() {
        checks.push("acm", is_cm(&step.ideal)?);
    }
    checks.finish(rep)
}

fn bdl<F: Field>(field: F, a: &Arrangement, acc: &Arrangement, extra: &[LinearForm], radical: bool, verify: bool, rep: &mut Report) -> Out {
    let ring = acc.ring(field)?;
    let mut ideal = comb(&ring, a, radical)?;
    let mut f = a.defining_polynomial(&ring)?;
    let mut checks = Checks::default();
    let mut rao = if verify { Some(rao_dimensions(&ideal)?) } else { None };
    for (k, l) in extra.iter().enumerate() {
        let lp = ring.linear_poly(l)?;
        rep.line(format!("plane {}: {}", k + 1, l.format(acc.names())));
        let step = basic_double_link(&ideal, &f, &lp)?;
        if verify {
            checks.push(format!("additivity {}", k + 1), hilbert_additivity_holds(&step, &ideal, None, &f, &lp)?);
            let next = rao_dimensions(&step.ideal)?;
            checks.push(format!("rao shift {}", k + 1), next == shift_rao(rao.as_ref().expect("verify"), 1));
            rao = Some(next);
        }
        f = ring.mul(&f, &lp);
        ideal = step.ideal;
    }
    rep.set("arrangement", acc.to_text());
    summarize(&ideal, rep)?;
    if verify {
        checks.push("ideal", ideal_equal(&ideal, &comb(&ring, acc, radical)?));
        checks.push("saturated", is_saturated(&ideal)?);
        checks.finish(rep)?;
    }
    Ok(())
}

/// Rebuilds the curve of a construction by liaison addition of the copies followed by basic
/// double links, and checks it against the predictions and a direct computation.
fn construction<F: Field>(field: F, c: &Construction, radical: bool, verify: bool, rep: &mut Report) -> Out {
    rep.set("arrangement", c.arrangement.to_text());
    rep.set("planes", c.arrangement.len());
    rep.set("predicted_degree", c.predicted_degree);
    set_rao(rep, "predicted_rao", &c.predicted_rao);
    rep.line(format!("planes: {}", c.arrangement.len()));
    rep.line(format!("predicted degree: {}", c.predicted_degree));
    rep.line(format!("predicted rao: {}", format_rao(&c.predicted_rao)));
    if !verify {
        rep.text.push_str(&c.arrangement.to_text());
        return Ok(());
    }
    let ring = c.arrangement.ring(field)?;
    let mut checks = Checks::default();
    let mut ideal = comb(&ring, &c.copies[0], radical)?;
    let mut f = c.copies[0].defining_polynomial(&ring)?;
    let mut rao = rao_dimensions(&ideal)?;
    for (k, copy) in c.copies.iter().enumerate().skip(1) {
        let j = comb(&ring, copy, radical)?;
        let g = copy.defining_polynomial(&ring)?;
        let step = liaison_addition(&ideal, &f, &j, &g)?;
        checks.push(format!("additivity copy {}", k + 1), hilbert_additivity_holds(&step, &ideal, Some(&j), &f, &g)?);
        let next = rao_dimensions(&step.ideal)?;
        let want = predicted_rao(&rao, step.d2 as i64, &rao_dimensions(&j)?, step.d1 as i64);
        checks.push(format!("rao copy {}", k + 1), next == want);
        rao = next;
        f = ring.mul(&f, &g);
        ideal = step.ideal;
    }
    for (k, l) in c.extra.iter().enumerate() {
        let lp = ring.linear_poly(l)?;
        let step = basic_double_link(&ideal, &f, &lp)?;
        checks.push(format!("additivity plane {}", k + 1), hilbert_additivity_holds(&step, &ideal, None, &f, &lp)?);
        let next = rao_dimensions(&step.ideal)?;
        checks.push(format!("rao shift plane {}", k + 1), next == shift_rao(&rao, 1));
        rao = next;
        f = ring.mul(&f, &lp);
        ideal = step.ideal;
    }
    let (computed, degree) = summarize(&ideal, rep)?;
    let direct = comb(&ring, &c.arrangement, radical)?;
    checks.push("ideal", ideal_equal(&ideal, &direct));
    checks.push("saturated", is_saturated(&ideal)?);
    checks.push("rao", computed == c.predicted_rao);
    checks.push("degree", degree == c.predicted_degree as i64);
    checks.finish(rep)
}

fn corpus(ctx: &Ctx, dir: &Path, only: Option<&str>, stretch: bool, rep: &mut Report) -> Out {
    let mut results = Vec::new();
    let mut all_ok = true;
    for e in CORPUS.iter().filter(|e| stretch || !e.stretch).filter(|e| only.is_none_or(|o| e.name.contains(o))) {
        let start = Instant::now();
        let mut sub = Report::default();
        let outcome = corpus_entry(ctx, dir, e, &mut sub);
        let secs = start.elapsed().as_secs_f64();
        let (ok, why) = match &outcome {
            Ok(v) if v.is_empty() => (true, String::new()),
            Ok(v) => (false, v.join("; ")),
            Err(f) => (false, f.message()),
        };
        all_ok &= ok;
        if ok {
            rep.line(format!("ok    {:<34} {secs:>8.1}s", e.name));
        } else {
            rep.line(format!("FAIL  {:<34} {secs:>8.1}s  {why}", e.name));
        }
        results.push(json!({ "name": e.name, "ok": ok, "seconds": secs, "detail": why }));
    }
    let passed = results.iter().filter(|r| r["ok"] == true).count();
    rep.line(format!("{passed}/{} entries passed", results.len()));
    rep.set("entries", results);
    rep.set("ok", all_ok);
    Ok(())
}

/// Mismatches of one corpus entry; empty when everything agrees.
fn corpus_entry(ctx: &Ctx, dir: &Path, e: &crate::corpus::Entry, rep: &mut Report) -> Result<Vec<String>, Failure> {
    let a = load_p3(ctx, &dir.join(e.file), rep)?;
    let golden = match e.golden {
        Some(g) => Some(read(&dir.join("golden").join(g))?),
        None => None,
    };
    let field = field_for(ctx, &a, rep);
    on_field!(field, check_entry(&a, e, golden.as_deref()))
}

fn check_entry<F: Field>(field: F, a: &Arrangement, e: &crate::corpus::Entry, golden: Option<&str>) -> Result<Vec<String>, Failure> {
    let ring = a.ring(field)?;
    let ideal = match e.expect {
        Expect::Ideal(kind) => ideal_of(&ring, a, kind)?,
        Expect::Symbolic(b) => {
            let bs = vec![b; intersection_flats(a).len()];
            symbolic_intersection(&ring, a, &bs, true)?
        }
    };
    let mut bad = Vec::new();
    let hilb = ideal.hilbert();
    if let Some(hp) = e.hilbert {
        if hilb.format_polynomial() != hp {
            bad.push(format!("hilbert polynomial {} (expected {hp})", hilb.format_polynomial()));
        }
    }
    if golden.is_none() && e.cm.is_none() && e.rao.is_none() {
        return Ok(bad);
    }
    let res = minimal_free_resolution(&ideal);
    let betti = betti_table(&res);
    if let Some(g) = golden {
        if let Err(m) = betti.check_diagram(g) {
            bad.push(format!("betti: {m}"));
        }
    }
    if let Some(cm) = e.cm {
        if is_cm_from(&betti, &hilb) != cm {
            bad.push(format!("cohen-macaulay expected {cm}"));
        }
    }
    if let Some(r) = e.rao {
        let got = format_rao(&rao_from_resolution(&ideal, &res)?);
        if got != r {
            bad.push(format!("rao {got} (expected {r})"));
        }
    }
    Ok(bad)
}
