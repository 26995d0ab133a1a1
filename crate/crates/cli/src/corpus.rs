//! Regression entries: expected diagrams, Hilbert polynomials and verdicts.

use crate::Kind;

#[derive(Copy, Clone, Debug)]
pub enum Expect {
    Ideal(Kind),
    /// Intersection of the flat primes, each raised to this power.
    Symbolic(u32),
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub file: &'static str,
    pub expect: Expect,
    /// Betti diagram file under `golden/`.
    pub golden: Option<&'static str>,
    pub hilbert: Option<&'static str>,
    pub cm: Option<bool>,
    pub rao: Option<&'static str>,
    /// No time bound; run only with `--stretch`.
    pub stretch: bool,
}

const fn entry(name: &'static str, file: &'static str, kind: Kind) -> Entry {
    Entry { name, file, expect: Expect::Ideal(kind), golden: None, hilbert: None, cm: None, rao: None, stretch: false }
}

const fn golden(mut e: Entry, g: &'static str) -> Entry {
    e.golden = Some(g);
    e
}

const fn hp(mut e: Entry, h: &'static str) -> Entry {
    e.hilbert = Some(h);
    e
}

const fn cm(mut e: Entry, c: bool) -> Entry {
    e.cm = Some(c);
    e
}

const fn rao(mut e: Entry, r: &'static str) -> Entry {
    e.rao = Some(r);
    e
}

const fn stretch(mut e: Entry) -> Entry {
    e.stretch = true;
    e
}

use Kind::{Jacobian, Radical, Saturation, Top};

pub static CORPUS: &[Entry] = &[
    cm(hp(golden(entry("fifteen_planes.jacobian", "fifteen_planes.arr", Jacobian), "fifteen_planes.jacobian.betti"), "130t - 1150"), false),
    hp(entry("fifteen_planes.saturation", "fifteen_planes.arr", Saturation), "130t - 1150"),
    cm(hp(golden(entry("fifteen_planes.radical", "fifteen_planes.arr", Radical), "fifteen_planes.radical.betti"), "55t - 275"), true),
    cm(hp(golden(entry("seven_planes.jacobian", "seven_planes.arr", Jacobian), "seven_planes.jacobian.betti"), "24t - 64"), true),
    cm(hp(golden(entry("seven_planes.radical", "seven_planes.arr", Radical), "seven_planes.radical.betti"), "15t - 25"), true),
    hp(golden(entry("emb_pt.jacobian", "emb_pt.arr", Jacobian), "emb_pt.jacobian.betti"), "6t - 1"),
    hp(entry("emb_pt.saturation", "emb_pt.arr", Saturation), "6t - 1"),
    hp(entry("emb_pt.top", "emb_pt.arr", Top), "6t - 2"),
    hp(entry("emb_pt_five.jacobian", "emb_pt_five.arr", Jacobian), "10t - 9"),
    hp(entry("emb_pt_five.top", "emb_pt_five.arr", Top), "10t - 10"),
    cm(entry("eight_planes.top", "eight_planes.arr", Top), true),
    cm(entry("eight_planes.radical", "eight_planes.arr", Radical), false),
    cm(entry("nine_planes.radical", "nine_planes.arr", Radical), false),
    cm(hp(golden(entry("nine_planes.top", "nine_planes.arr", Top), "nine_planes.top.betti"), "42t - 174"), false),
    Entry { expect: Expect::Symbolic(2), ..cm(entry("nine_planes.symbolic2", "nine_planes.arr", Top), true) },
    cm(entry("star.top", "star.arr", Top), true),
    cm(entry("star.radical", "star.arr", Radical), true),
    cm(hp(golden(entry("free_not_cm.radical", "free_not_cm.arr", Radical), "free_not_cm.radical.betti"), "27t - 78"), false),
    cm(hp(golden(entry("free_not_cm.jacobian", "free_not_cm.arr", Jacobian), "free_not_cm.jacobian.betti"), "54t - 270"), true),
    hp(golden(entry("same_comb_f.jacobian", "same_comb_f.arr", Jacobian), "same_comb_f.jacobian.betti"), "51t - 223"),
    golden(entry("same_comb_f.top", "same_comb_f.arr", Top), "same_comb_f.top.betti"),
    hp(golden(entry("same_comb_f.radical", "same_comb_f.arr", Radical), "same_comb_f.radical.betti"), "33t - 115"),
    hp(golden(entry("same_comb_f_prime.jacobian", "same_comb_f_prime.arr", Jacobian), "same_comb_f_prime.jacobian.betti"), "51t - 222"),
    golden(entry("same_comb_f_prime.top", "same_comb_f_prime.arr", Top), "same_comb_f_prime.top.betti"),
    hp(golden(entry("same_comb_f_prime.radical", "same_comb_f_prime.arr", Radical), "same_comb_f_prime.radical.betti"), "33t - 115"),
    hp(golden(entry("octahedron.radical", "octahedron.graph", Radical), "octahedron.radical.betti"), "50t - 230"),
    hp(golden(entry("octahedron.top", "octahedron.graph", Top), "octahedron.top.betti"), "74t - 454"),
    rao(hp(golden(entry("radical_block.radical", "radical_block.arr", Radical), "radical_block.radical.betti"), "20t - 44"), "{4 -> 1}"),
    rao(hp(golden(entry("eleven_planes.top", "eleven_planes.arr", Top), "eleven_planes.top.betti"), "64t - 356"), "{10 -> 2}"),
    stretch(cm(entry("dodecahedron.radical", "dodecahedron.graph", Radical), true)),
    stretch(cm(entry("dodecahedron.top", "dodecahedron.graph", Top), true)),
    stretch(golden(entry("stretch_31_planes.top", "stretch_31_planes.arr", Top), "stretch_31_planes.top.betti")),
    stretch(golden(entry("stretch_31_planes.radical", "stretch_31_planes.arr", Radical), "stretch_31_planes.radical.betti")),
];
