//! Graded free resolutions computed in an extended module.
//!
//! To find the syzygies of `g_1 .. g_m` in `F` we run Buchberger on the vectors
//! `(g_i, e_i)` in `F ⊕ R^m`, with every term of `F` above every term of `R^m`.
//! Basis elements whose lead lies in `R^m` have zero `F` part and form a Groebner
//! basis of the syzygy module.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::groebner::engine::{buchberger, normalize_vector, vector_degree, GbOptions, Origin, Vector};
use crate::groebner::{to_vector, Ideal};
use crate::polyring::{Field, ModuleOrder, Monomial, MonomialOrder, Poly, Ring};

/// Map of graded free modules; column `j` is the image of the `j`-th source generator.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMap<E> {
    pub source: Vec<i32>,
    pub target: Vec<i32>,
    pub columns: Vec<Vector<E>>,
}

impl<E: Clone> GradedMap<E> {
    /// Entry in row `r`, column `c` as a list of terms.
    pub fn entry(&self, r: usize, c: usize) -> Vec<(Monomial, E)> {
        self.columns[c].terms.iter().filter(|t| t.0 as usize == r).map(|t| (t.1, t.2.clone())).collect()
    }
}

fn module_order(twists: Vec<i32>, blocks: Vec<u32>) -> ModuleOrder {
    let mut o = ModuleOrder::top(MonomialOrder::GrevLex, twists);
    o.blocks = blocks;
    o
}

/// Syzygies of `gens` (vectors in a free module with `twists`).
///
/// With `minimal` set, only the elements that are new minimal generators of the
/// syzygy module are returned; `gens` must then minimally generate their span.
/// Otherwise every basis element of the syzygy module is returned.
pub fn schreyer_syzygies<F: Field>(field: &F, nvars: usize, twists: &[i32], gens: &[Vector<F::Elem>], minimal: bool) -> (Vec<Vector<F::Elem>>, Vec<i32>) {
    let r = twists.len();
    let m = gens.len();
    let mut tw = twists.to_vec();
    let mut blocks = vec![1u32; r];
    let mut gdeg = Vec::with_capacity(m);
    for g in gens {
        let d = vector_degree(g, twists).expect("inhomogeneous generator") as i32;
        tw.push(d);
        gdeg.push(d);
        blocks.push(0);
    }
    let order = module_order(tw, blocks);
    let inputs: Vec<Vector<F::Elem>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut t = g.terms.clone();
            t.push(((r + i) as u32, Monomial::one(nvars), field.one()));
            normalize_vector(field, &order, t)
        })
        .collect();
    let run = buchberger(field, nvars, &order, &inputs, &GbOptions::default());
    let sub = module_order(gdeg.clone(), vec![0; m]);
    let mut out = Vec::new();
    let mut degs = Vec::new();
    for el in run.elements {
        let (c, _) = el.vector.lead().unwrap();
        if (c as usize) < r {
            continue;
        }
        if minimal && matches!(el.origin, Origin::Pair { block: 0 }) {
            continue;
        }
        let t = el.vector.terms.into_iter().map(|(c, mm, x)| (c - r as u32, mm, x)).collect();
        out.push(normalize_vector(field, &sub, t));
        degs.push(el.degree as i32);
    }
    (out, degs)
}

/// Graded free resolution of `R/I`; `maps[k]` goes from `modules[k + 1]` to `modules[k]`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    ring: Arc<Ring<F>>,
    pub modules: Vec<Vec<i32>>,
    pub maps: Vec<GradedMap<F::Elem>>,
}

impl<F: Field> Resolution<F> {
    /// Minimal free resolution of `R/I`.
    pub fn minimal(ideal: &Ideal<F>) -> Resolution<F> {
        let ring = ideal.ring().clone();
        let field = ring.field().clone();
        let n = ring.nvars();
        let o = ModuleOrder::ideal(MonomialOrder::GrevLex);
        let gens: Vec<Vector<F::Elem>> = ideal.gens().iter().map(|g| to_vector(&field, g, &o)).collect();
        let run = buchberger(&field, n, &o, &gens, &GbOptions::default());
        let mut mins: Vec<Vector<F::Elem>> = run.minimal_inputs.iter().map(|&k| gens[k].clone()).collect();
        mins.sort_by_key(|v| vector_degree(v, &[0]).unwrap());
        if run.elements.iter().any(|e| e.vector.lead().unwrap().1.is_one()) {
            // unit ideal: R/I = 0
            return Resolution { ring, modules: vec![vec![]], maps: vec![] };
        }
        Self::build(ring, vec![0], mins, true)
    }

    /// Resolution from all Groebner basis elements at each step; usually not minimal.
    pub fn schreyer(ideal: &Ideal<F>) -> Resolution<F> {
        let ring = ideal.ring().clone();
        let field = ring.field().clone();
        let o = ModuleOrder::ideal(MonomialOrder::GrevLex);
        let gb = ideal.grevlex();
        let gens: Vec<Vector<F::Elem>> = gb.polys.iter().map(|g| to_vector(&field, g, &o)).collect();
        Self::build(ring, vec![0], gens, false)
    }

    fn build(ring: Arc<Ring<F>>, target: Vec<i32>, first: Vec<Vector<F::Elem>>, minimal: bool) -> Resolution<F> {
        let field = ring.field().clone();
        let n = ring.nvars();
        let mut modules = vec![target.clone()];
        let mut maps = Vec::new();
        let mut cur_twists = target;
        let mut cur = first;
        while !cur.is_empty() {
            let source: Vec<i32> = cur.iter().map(|v| vector_degree(v, &cur_twists).unwrap() as i32).collect();
            maps.push(GradedMap { source: source.clone(), target: cur_twists.clone(), columns: cur.clone() });
            modules.push(source.clone());
            if maps.len() > n + 1 {
                break;
            }
            let (syz, _) = schreyer_syzygies(&field, n, &cur_twists, &cur, minimal);
            cur_twists = source;
            cur = syz;
        }
        let mut res = Resolution { ring, modules, maps };
        res.minimize();
        res
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    /// Length of the resolution (projective dimension of `R/I`).
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Remove unit entries until none remain.
    pub fn minimize(&mut self) {
        loop {
            let mut found = None;
            'scan: for (k, map) in self.maps.iter().enumerate() {
                for (c, col) in map.columns.iter().enumerate() {
                    for (r, m, _) in &col.terms {
                        if m.is_one() {
                            found = Some((k, *r as usize, c));
                            break 'scan;
                        }
                    }
                }
            }
            let Some((k, r, c)) = found else { break };
            self.cancel(k, r, c);
        }
        while self.maps.last().map(|m| m.columns.is_empty()).unwrap_or(false) {
            self.maps.pop();
            self.modules.pop();
        }
    }

    /// Split off the unit entry in row `r`, column `c` of `maps[k]`.
    fn cancel(&mut self, k: usize, r: usize, c: usize) {
        let ring = self.ring.clone();
        let field = ring.field();
        let map = &self.maps[k];
        let rows = map.target.len();
        let dense = |v: &Vector<F::Elem>| -> Vec<Poly<F::Elem>> {
            let mut out = vec![ring.zero(); rows];
            let mut by_row: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); rows];
            for (rr, m, x) in &v.terms {
                by_row[*rr as usize].push((*m, x.clone()));
            }
            for (i, t) in by_row.into_iter().enumerate() {
                out[i] = ring.normalize(t);
            }
            out
        };
        let pivot_col = dense(&map.columns[c]);
        let u = pivot_col[r].terms()[0].1.clone();
        let uinv = field.inv(&u);
        let mut new_cols = Vec::new();
        let mut new_source = Vec::new();
        for (j, col) in map.columns.iter().enumerate() {
            if j == c {
                continue;
            }
            let mut d = dense(col);
            let a = ring.scale(&d[r], &uinv);
            if !a.is_zero() {
                for (i, p) in d.iter_mut().enumerate() {
                    *p = ring.sub(p, &ring.mul(&a, &pivot_col[i]));
                }
            }
            new_cols.push(d);
            new_source.push(map.source[j]);
        }
        let mut new_target = map.target.clone();
        new_target.remove(r);
        let order = module_order(new_target.clone(), vec![0; new_target.len()]);
        let to_vec = |d: Vec<Poly<F::Elem>>, skip: usize| -> Vector<F::Elem> {
            let mut t = Vec::new();
            for (i, p) in d.into_iter().enumerate() {
                if i == skip {
                    continue;
                }
                let ii = if i > skip { i - 1 } else { i } as u32;
                for (m, x) in p.terms() {
                    t.push((ii, *m, x.clone()));
                }
            }
            normalize_vector(field, &order, t)
        };
        let columns = new_cols.into_iter().map(|d| to_vec(d, r)).collect();
        self.maps[k] = GradedMap { source: new_source.clone(), target: new_target.clone(), columns };
        self.modules[k + 1] = new_source.clone();
        self.modules[k] = new_target;
        // next map up: drop row c
        if k + 1 < self.maps.len() {
            let up = &self.maps[k + 1];
            let order = module_order(new_source.clone(), vec![0; new_source.len()]);
            let columns = up
                .columns
                .iter()
                .map(|v| {
                    let t = v
                        .terms
                        .iter()
                        .filter(|t| t.0 as usize != c)
                        .map(|(i, m, x)| (if (*i as usize) > c { i - 1 } else { *i }, *m, x.clone()))
                        .collect();
                    normalize_vector(field, &order, t)
                })
                .collect();
            let source = up.source.clone();
            self.maps[k + 1] = GradedMap { source, target: new_source, columns };
        }
        // next map down: drop column r
        if k > 0 {
            let down = &mut self.maps[k - 1];
            down.columns.remove(r);
            down.source.remove(r);
        }
    }

    /// Betti numbers; valid once the resolution is minimal.
    pub fn betti(&self) -> BettiTable {
        BettiTable::from_twists(&self.modules)
    }

    /// Check that consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        let field = self.ring.field();
        for k in 1..self.maps.len() {
            let (lo, hi) = (&self.maps[k - 1], &self.maps[k]);
            let order = module_order(lo.target.clone(), vec![0; lo.target.len()]);
            for col in &hi.columns {
                let mut t = Vec::new();
                for (i, m, x) in &col.terms {
                    for (r, mm, y) in &lo.columns[*i as usize].terms {
                        t.push((*r, m.mul(mm), field.mul(x, y)));
                    }
                }
                if !normalize_vector(field, &order, t).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Graded Betti numbers `beta[i][j]` for column `i` and row `j` (internal degree `i + j`).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BettiTable {
    pub table: Vec<Vec<u64>>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct BettiRowJson {
    degree: usize,
    betti: Vec<u64>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct BettiJson {
    rows: Vec<BettiRowJson>,
    total: Vec<u64>,
}

impl BettiTable {
    pub fn from_twists(modules: &[Vec<i32>]) -> BettiTable {
        let mut table: Vec<Vec<u64>> = vec![Vec::new(); modules.len()];
        for (i, tw) in modules.iter().enumerate() {
            for &t in tw {
                let j = (t - i as i32).max(0) as usize;
                if table[i].len() <= j {
                    table[i].resize(j + 1, 0);
                }
                table[i][j] += 1;
            }
        }
        while table.len() > 1 && table.last().map(|c| c.is_empty()).unwrap_or(false) {
            table.pop();
        }
        BettiTable { table }
    }

    pub fn columns(&self) -> usize {
        self.table.len()
    }

    pub fn rows(&self) -> usize {
        self.table.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.table.get(i).and_then(|c| c.get(j)).copied().unwrap_or(0)
    }

    pub fn totals(&self) -> Vec<u64> {
        self.table.iter().map(|c| c.iter().sum()).collect()
    }

    /// Row `j` as a vector over all columns.
    pub fn row(&self, j: usize) -> Vec<u64> {
        (0..self.columns()).map(|i| self.get(i, j)).collect()
    }

    pub fn projective_dimension(&self) -> usize {
        self.columns() - 1
    }

    /// `Σ (-1)^i β_{i,j} t^j`, ascending in `t`.
    pub fn alternating_numerator(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for i in 0..self.columns() {
            for (j, &b) in self.table[i].iter().enumerate() {
                let d = i + j;
                if out.len() <= d {
                    out.resize(d + 1, 0i64);
                }
                out[d] += if i % 2 == 0 { b as i64 } else { -(b as i64) };
            }
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Fixed-width text with a rule above the rows and a `Tot:` footer.
    pub fn to_text(&self) -> String {
        let cols = self.columns();
        let mut s = String::from("        0");
        for i in 1..cols {
            s.push_str(&format!("{i:>5}"));
        }
        s.push('\n');
        let rule = "-".repeat(9 + 5 * (cols - 1) + 1);
        s.push_str(&rule);
        s.push('\n');
        let cell = |b: u64, w: usize| -> String {
            if b == 0 {
                format!("{:>w$}", "-")
            } else {
                format!("{b:>w$}")
            }
        };
        for j in 0..self.rows() {
            s.push_str(&format!("{j:>2}:"));
            for i in 0..cols {
                s.push_str(&cell(self.get(i, j), if i == 0 { 6 } else { 5 }));
            }
            s.push('\n');
        }
        s.push_str(&rule);
        s.push('\n');
        s.push_str("Tot:");
        for t in self.totals() {
            s.push_str(&format!("{t:>5}"));
        }
        s.push('\n');
        s
    }

    /// Compare with a diagram in the text layout where runs of zero rows may be
    /// elided by a `...` line. Printed rows must match exactly, elided rows must be
    /// zero, and the column count and totals must agree.
    pub fn check_diagram(&self, text: &str) -> std::result::Result<(), String> {
        let cell = |t: &str| -> std::result::Result<u64, String> {
            if t == "-" {
                Ok(0)
            } else {
                t.parse().map_err(|_| format!("bad cell `{t}`"))
            }
        };
        let mut cols = None;
        let mut rows: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
        let mut total = None;
        for line in text.lines() {
            let l = line.trim();
            if l.is_empty() || l.starts_with('-') || l.contains("...") {
                continue;
            }
            if let Some(rest) = l.strip_prefix("Tot:") {
                total = Some(rest.split_whitespace().map(cell).collect::<std::result::Result<Vec<_>, _>>()?);
            } else if let Some((lab, rest)) = l.split_once(':') {
                let j: usize = lab.trim().parse().map_err(|_| format!("bad row label `{lab}`"))?;
                rows.insert(j, rest.split_whitespace().map(cell).collect::<std::result::Result<Vec<_>, _>>()?);
            } else if cols.is_none() {
                cols = Some(l.split_whitespace().count());
            }
        }
        let cols = cols.ok_or("missing header")?;
        if cols != self.columns() {
            return Err(format!("expected {cols} columns, computed {}", self.columns()));
        }
        let last = rows.keys().max().copied().unwrap_or(0).max(self.rows());
        for j in 0..=last {
            let want = rows.get(&j).cloned().unwrap_or_else(|| vec![0; cols]);
            if want != self.row(j) {
                return Err(format!("row {j}: expected {want:?}, computed {:?}", self.row(j)));
            }
        }
        if let Some(t) = total {
            if t != self.totals() {
                return Err(format!("totals: expected {t:?}, computed {:?}", self.totals()));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows = (0..self.rows()).map(|j| BettiRowJson { degree: j, betti: self.row(j) }).collect();
        serde_json::to_value(BettiJson { rows, total: self.totals() }).unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Option<BettiTable> {
        let j: BettiJson = serde_json::from_value(v.clone()).ok()?;
        let cols = j.total.len();
        let mut table = vec![Vec::new(); cols];
        for r in &j.rows {
            for (i, &b) in r.betti.iter().enumerate() {
                if table[i].len() <= r.degree {
                    table[i].resize(r.degree + 1, 0);
                }
                table[i][r.degree] = b;
            }
        }
        for c in table.iter_mut() {
            while c.last() == Some(&0) {
                c.pop();
            }
        }
        Some(BettiTable { table })
    }
}
