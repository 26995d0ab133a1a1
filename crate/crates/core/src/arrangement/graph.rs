use std::collections::BTreeSet;

use super::Arrangement;
use crate::error::{Error, Result};
use crate::polyring::LinearForm;

/// Simple graph on vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= vertices || b >= vertices {
                return Err(Error::Validation(format!("edge ({}, {}) leaves the vertex range", a + 1, b + 1)));
            }
            if a == b {
                return Err(Error::Validation(format!("loop at vertex {}", a + 1)));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::Validation(format!("edge ({}, {}) repeated", e.0 + 1, e.1 + 1)));
            }
            out.push(e);
        }
        Ok(Graph { vertices, edges: out })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Vertex triples spanning a triangle, ascending.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.vertices {
            for b in a + 1..self.vertices {
                if !self.adjacent(a, b) {
                    continue;
                }
                for c in b + 1..self.vertices {
                    if self.adjacent(a, c) && self.adjacent(b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    pub fn octahedron() -> Graph {
        // opposite pairs (0,1), (2,3), (4,5)
        let mut e = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                if a / 2 != b / 2 {
                    e.push((a, b));
                }
            }
        }
        Graph::new(6, e).unwrap()
    }
}

/// `vertices: v`, then `edge: i j` lines with 1-based indices; `#` comments.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertices = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let lineno = k + 1;
        let bad = |msg: &str| Error::Parse { line: lineno, msg: msg.into() };
        match vertices {
            None => {
                let v = line.strip_prefix("vertices:").ok_or_else(|| bad("expected `vertices:` header"))?;
                let v: usize = v.trim().parse().map_err(|_| bad("vertex count is not a number"))?;
                vertices = Some(v);
            }
            Some(v) => {
                let rest = line.strip_prefix("edge:").ok_or_else(|| bad("expected `edge: i j`"))?;
                let ends: Vec<usize> = rest.split_whitespace().map(|t| t.parse().map_err(|_| bad("edge endpoint is not a number"))).collect::<Result<_>>()?;
                if ends.len() != 2 {
                    return Err(bad("an edge has two endpoints"));
                }
                if ends.iter().any(|&e| e == 0 || e > v) {
                    return Err(bad("edge endpoint out of range"));
                }
                if ends[0] == ends[1] {
                    return Err(bad("loops are not allowed"));
                }
                let e = (ends[0].min(ends[1]) - 1, ends[0].max(ends[1]) - 1);
                if edges.contains(&e) {
                    return Err(bad("repeated edge"));
                }
                edges.push(e);
            }
        }
    }
    let v = vertices.ok_or_else(|| Error::Parse { line: 1, msg: "missing `vertices:` header".into() })?;
    Graph::new(v, edges)
}

/// One form `x_i - x_j` per edge, in variables `x1..xv`.
pub fn graphic_arrangement(g: &Graph) -> Result<Arrangement> {
    if g.edges.len() < 2 {
        return Err(Error::Validation("a graphic arrangement needs at least 2 edges".into()));
    }
    let names: Vec<String> = (1..=g.vertices).map(|i| format!("x{i}")).collect();
    let forms = g
        .edges
        .iter()
        .map(|&(a, b)| {
            let mut c = vec![0i64; g.vertices];
            c[a] = 1;
            c[b] = -1;
            LinearForm::from_ints(&c).unwrap()
        })
        .collect();
    Arrangement::new(names, forms)
}

/// An edge shared by two triangles.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TriangleWitness {
    pub edge: (usize, usize),
    pub triangles: ([usize; 3], [usize; 3]),
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TriangleReport {
    pub holds: bool,
    pub witnesses: Vec<TriangleWitness>,
}

/// No two triangles of `g` share an edge.
pub fn triangle_condition(g: &Graph) -> TriangleReport {
    let tris = g.triangles();
    let mut witnesses = Vec::new();
    for &e in &g.edges {
        let on: Vec<[usize; 3]> = tris.iter().filter(|t| t.contains(&e.0) && t.contains(&e.1)).copied().collect();
        for i in 0..on.len() {
            for j in i + 1..on.len() {
                witnesses.push(TriangleWitness { edge: e, triangles: (on[i], on[j]) });
            }
        }
    }
    TriangleReport { holds: witnesses.is_empty(), witnesses }
}
