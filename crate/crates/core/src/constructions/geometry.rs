//! Point-line geometries and their incidence graphs: the projective plane
//! PG(2,q) and the symplectic generalized quadrangle W(q).
//!
//! Points and lines are ordered by their normalized homogeneous coordinates,
//! so every construction is deterministic and golden-file testable.

use super::field::FieldTable;
use crate::error::Result;
use crate::graph::MultiGraph;
use serde::Serialize;

/// An abstract point-line incidence structure: lines are sorted sets of
/// point indices; flags are the incident (point, line) pairs.
#[derive(Debug, Clone, Serialize)]
pub struct IncidenceStructure {
    pub points: Vec<String>,
    pub lines: Vec<Vec<u32>>,
}

impl IncidenceStructure {
    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn flag_count(&self) -> usize {
        self.lines.iter().map(|l| l.len()).sum()
    }

    pub fn flags(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.flag_count());
        for (li, line) in self.lines.iter().enumerate() {
            for &p in line {
                out.push((p, li as u32));
            }
        }
        out
    }

    /// Number of lines through each point.
    pub fn point_degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.points.len()];
        for line in &self.lines {
            for &p in line {
                deg[p as usize] += 1;
            }
        }
        deg
    }

    /// Lines containing both points, as indices.
    pub fn lines_through_pair(&self, a: u32, b: u32) -> Vec<u32> {
        self.lines
            .iter()
            .enumerate()
            .filter(|(_, l)| l.binary_search(&a).is_ok() && l.binary_search(&b).is_ok())
            .map(|(i, _)| i as u32)
            .collect()
    }
}

/// Bipartite incidence graph: vertices 0..P are points, P..P+L are lines,
/// one edge per flag.
pub fn incidence_graph(s: &IncidenceStructure) -> MultiGraph {
    let p = s.point_count();
    let mut g = MultiGraph::new(p + s.line_count());
    for (point, line) in s.flags() {
        g.add_edge(point, p as u32 + line).expect("indices in range");
    }
    g
}

/// All normalized points of the projective space of the given homogeneous
/// dimension (tuple length), ordered lexicographically by coordinates.
/// Normalized means the first nonzero coordinate is 1.
fn projective_points(f: &FieldTable, dim: usize) -> Vec<Vec<u64>> {
    let q = f.order();
    let total = q.pow(dim as u32);
    let mut out = Vec::new();
    for t in 0..total {
        let mut coords = vec![0u64; dim];
        let mut x = t;
        for c in coords.iter_mut().rev() {
            *c = x % q;
            x /= q;
        }
        match coords.iter().find(|&&c| c != 0) {
            Some(&first) if first == 1 => out.push(coords),
            _ => {}
        }
    }
    out
}

fn label(coords: &[u64]) -> String {
    let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(","))
}

/// The projective plane PG(2,q): points are normalized vectors of GF(q)^3 up
/// to scalar, lines are kernels of nonzero linear forms up to scalar.
pub fn projective_plane(q: u64) -> Result<IncidenceStructure> {
    let f = FieldTable::of_order(q)?;
    let points = projective_points(&f, 3);
    let forms = projective_points(&f, 3);
    let dot = |a: &[u64], b: &[u64]| -> u64 {
        let mut acc = 0;
        for (&x, &y) in a.iter().zip(b) {
            acc = f.add(acc, f.mul(x, y));
        }
        acc
    };
    let lines: Vec<Vec<u32>> = forms
        .iter()
        .map(|form| {
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| dot(form, p) == 0)
                .map(|(i, _)| i as u32)
                .collect()
        })
        .collect();
    Ok(IncidenceStructure {
        points: points.iter().map(|p| label(p)).collect(),
        lines,
    })
}

/// The symplectic quadrangle W(q): all points of PG(3,q), and the lines of
/// PG(3,q) that are totally isotropic for the standard alternating form
/// x1 y2 - x2 y1 + x3 y4 - x4 y3.
pub fn symplectic_quadrangle(q: u64) -> Result<IncidenceStructure> {
    let f = FieldTable::of_order(q)?;
    let points = projective_points(&f, 4);
    let symp = |a: &[u64], b: &[u64]| -> u64 {
        let t1 = f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
        let t2 = f.sub(f.mul(a[2], b[3]), f.mul(a[3], b[2]));
        f.add(t1, t2)
    };
    // Every line of PG(3,q) is the span of any two of its points; build each
    // isotropic line once, keyed by its sorted point set.
    let mut seen = std::collections::HashSet::new();
    let mut lines: Vec<Vec<u32>> = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if symp(&points[i], &points[j]) != 0 {
                continue;
            }
            let mut line: Vec<u32> = vec![i as u32, j as u32];
            // The remaining points of the span are P + t Q for t != 0.
            for t in 1..q {
                let combo: Vec<u64> = points[i]
                    .iter()
                    .zip(&points[j])
                    .map(|(&x, &y)| f.add(x, f.mul(t, y)))
                    .collect();
                let normalized = normalize(&f, &combo);
                let idx = points
                    .binary_search(&normalized)
                    .expect("span point is a projective point");
                line.push(idx as u32);
            }
            line.sort_unstable();
            line.dedup();
            if seen.insert(line.clone()) {
                lines.push(line);
            }
        }
    }
    lines.sort();
    Ok(IncidenceStructure {
        points: points.iter().map(|p| label(p)).collect(),
        lines,
    })
}

fn normalize(f: &FieldTable, coords: &[u64]) -> Vec<u64> {
    let first = coords
        .iter()
        .copied()
        .find(|&c| c != 0)
        .expect("nonzero vector");
    let scale = f.inv(first);
    coords.iter().map(|&c| f.mul(scale, c)).collect()
}
