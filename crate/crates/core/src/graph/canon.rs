//! Canonical forms for multigraphs with loops, used for isomorph rejection.
//!
//! Individualization-refinement: vertices are first colored by invariants
//! (degree, loop count, distance profile), the coloring is refined to a
//! stable partition with multiplicities feeding the refinement, and remaining
//! symmetry is broken by backtracking over an automorphism-pruned tree. The
//! canonical code is the lexicographically least relabeled encoding over all
//! leaves; equal codes at two leaves yield an automorphism used to prune
//! sibling branches.
//!
//! The code is self-describing and decodable, so a code can stand in for the
//! graph itself (the search frontier relies on this).

use super::MultiGraph;
use crate::error::{Error, Result};

/// Largest vertex count the canonizer accepts.
pub const CANON_VERTEX_CAP: usize = 64;

/// A canonical byte encoding: two multigraphs have equal codes iff they are
/// isomorphic (as multigraphs with loops).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalCode(bytes)
    }

    /// Reconstructs the canonically labeled graph from its code.
    pub fn decode(&self) -> Result<MultiGraph> {
        let b = &self.0;
        let bad = |msg: &str| Error::Parse {
            at: "canonical code".to_string(),
            msg: msg.to_string(),
        };
        if b.len() < 2 {
            return Err(bad("truncated header"));
        }
        let flags = b[0];
        let n = b[1] as usize;
        let has_multi = flags & 1 != 0;
        let has_loops = flags & 2 != 0;
        let mut pos = 2;
        let mut g = MultiGraph::new(n);
        if has_loops {
            if b.len() < pos + n {
                return Err(bad("truncated loop section"));
            }
            for v in 0..n {
                for _ in 0..b[pos + v] {
                    g.add_edge(v as u32, v as u32)?;
                }
            }
            pos += n;
        }
        let pairs = n * (n - 1) / 2;
        if has_multi {
            if b.len() != pos + pairs {
                return Err(bad("bad multiplicity section length"));
            }
            let mut k = 0;
            for i in 0..n as u32 {
                for j in i + 1..n as u32 {
                    for _ in 0..b[pos + k] {
                        g.add_edge(i, j)?;
                    }
                    k += 1;
                }
            }
        } else {
            let nbytes = pairs.div_ceil(8);
            if b.len() != pos + nbytes {
                return Err(bad("bad adjacency section length"));
            }
            let mut k = 0;
            for i in 0..n as u32 {
                for j in i + 1..n as u32 {
                    if b[pos + k / 8] >> (7 - k % 8) & 1 == 1 {
                        g.add_edge(i, j)?;
                    }
                    k += 1;
                }
            }
        }
        Ok(g)
    }
}

/// Computes the canonical code of `g`. Deterministic; equal codes iff
/// isomorphic. Errors when `g` exceeds [`CANON_VERTEX_CAP`] vertices or a
/// multiplicity/loop count exceeds 255.
pub fn canonical_code(g: &MultiGraph) -> Result<CanonicalCode> {
    canonical_form(g).map(|(code, _)| code)
}

/// Canonical code plus one canonical labeling (old vertex -> canonical
/// position) that realizes it.
pub fn canonical_form(g: &MultiGraph) -> Result<(CanonicalCode, Vec<u32>)> {
    let n = g.vertex_count();
    if n > CANON_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "canonical_code vertices",
            limit: CANON_VERTEX_CAP,
            got: n,
        });
    }
    if n == 0 {
        return Ok((CanonicalCode(vec![0, 0]), Vec::new()));
    }
    let mut c = Canonizer::new(g)?;
    let mut colors = c.initial_colors();
    c.search(&mut colors, &mut Vec::new());
    let best = c.best_code.expect("at least one leaf");
    let label = c.best_label.expect("labeling recorded with best code");
    Ok((CanonicalCode(best), label))
}

impl MultiGraph {
    pub fn canonical_code(&self) -> Result<CanonicalCode> {
        canonical_code(self)
    }
}

struct Canonizer {
    n: usize,
    adj_bits: Vec<u64>,
    mult: Vec<u8>,
    loops: Vec<u8>,
    has_multi: bool,
    has_loops: bool,
    init: Vec<u32>,
    best_code: Option<Vec<u8>>,
    best_label: Option<Vec<u32>>,
    autos: Vec<Vec<u32>>,
}

impl Canonizer {
    fn new(g: &MultiGraph) -> Result<Self> {
        let n = g.vertex_count();
        let mut adj_bits = vec![0u64; n];
        let mut mult = vec![0u8; n * n];
        let mut loops = vec![0u8; n];
        let mut has_multi = false;
        let mut has_loops = false;
        for v in 0..n as u32 {
            let lc = g.loops(v);
            if lc > 0 {
                has_loops = true;
                loops[v as usize] = u8::try_from(lc).map_err(|_| Error::CapExceeded {
                    what: "loop count",
                    limit: 255,
                    got: lc as usize,
                })?;
            }
            for (w, m) in g.neighbors(v) {
                adj_bits[v as usize] |= 1 << w;
                if m > 1 {
                    has_multi = true;
                }
                mult[v as usize * n + w as usize] =
                    u8::try_from(m).map_err(|_| Error::CapExceeded {
                        what: "edge multiplicity",
                        limit: 255,
                        got: m as usize,
                    })?;
            }
        }
        let init = Self::invariant_colors(g, n);
        Ok(Canonizer {
            n,
            adj_bits,
            mult,
            loops,
            has_multi,
            has_loops,
            init,
            best_code: None,
            best_label: None,
            autos: Vec::new(),
        })
    }

    /// Invariant-based initial coloring: degree, loop count, and the sorted
    /// distance profile. Isomorphism-invariant by construction.
    fn invariant_colors(g: &MultiGraph, n: usize) -> Vec<u32> {
        let mut keys: Vec<(Vec<u32>, u32)> = (0..n as u32)
            .map(|v| {
                let mut profile = vec![0u32; n + 1];
                for d in g.distances_from(v) {
                    match d {
                        Some(x) => profile[x as usize] += 1,
                        None => profile[n] += 1,
                    }
                }
                let mut key = vec![g.degree(v), g.loops(v)];
                key.extend(profile);
                (key, v)
            })
            .collect();
        keys.sort();
        let mut colors = vec![0u32; n];
        let mut color = 0;
        for i in 0..n {
            if i > 0 && keys[i].0 != keys[i - 1].0 {
                color += 1;
            }
            colors[keys[i].1 as usize] = color;
        }
        colors
    }

    fn initial_colors(&self) -> Vec<u32> {
        self.init.clone()
    }

    fn mult_of(&self, u: usize, w: usize) -> u8 {
        self.mult[u * self.n + w]
    }

    /// Refines to a stable partition. New color ids are ranks in the sorted
    /// key order, so they depend only on isomorphism invariants.
    fn refine(&self, colors: &mut Vec<u32>) {
        let n = self.n;
        let mut ncolors = colors.iter().max().map_or(0, |&c| c as usize + 1);
        loop {
            let mut keys: Vec<(u32, Vec<(u32, u8)>, u32)> = Vec::with_capacity(n);
            for v in 0..n {
                let mut sig: Vec<(u32, u8)> = Vec::new();
                let mut bits = self.adj_bits[v];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    sig.push((colors[w], self.mult_of(v, w)));
                }
                sig.sort_unstable();
                keys.push((colors[v], sig, v as u32));
            }
            keys.sort_unstable();
            let mut new_colors = vec![0u32; n];
            let mut color = 0u32;
            for i in 0..n {
                if i > 0 && (keys[i].0 != keys[i - 1].0 || keys[i].1 != keys[i - 1].1) {
                    color += 1;
                }
                new_colors[keys[i].2 as usize] = color;
            }
            let new_ncolors = color as usize + 1;
            *colors = new_colors;
            if new_ncolors == ncolors {
                return;
            }
            ncolors = new_ncolors;
        }
    }

    fn search(&mut self, colors: &mut Vec<u32>, prefix: &mut Vec<u32>) {
        self.refine(colors);
        let n = self.n;
        // Locate the first non-singleton cell (smallest color).
        let mut count = vec![0u32; n];
        for &c in colors.iter() {
            count[c as usize] += 1;
        }
        let target = (0..n).find(|&c| count[c] >= 2);
        let Some(cell_color) = target else {
            self.record_leaf(colors);
            return;
        };
        let members: Vec<u32> = (0..n as u32)
            .filter(|&v| colors[v as usize] == cell_color as u32)
            .collect();
        let mut tried: Vec<u32> = Vec::new();
        let mut autos_seen = usize::MAX;
        let mut orbit: Vec<u32> = Vec::new();
        for &w in &members {
            if !tried.is_empty() {
                if autos_seen != self.autos.len() {
                    orbit = self.orbits_fixing(prefix);
                    autos_seen = self.autos.len();
                }
                if tried.iter().any(|&t| orbit[t as usize] == orbit[w as usize]) {
                    continue;
                }
            }
            tried.push(w);
            let mut child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(v, &c)| {
                    if c > cell_color as u32 || (c == cell_color as u32 && v as u32 != w) {
                        c + 1
                    } else {
                        c
                    }
                })
                .collect();
            prefix.push(w);
            self.search(&mut child, prefix);
            prefix.pop();
        }
    }

    /// Orbit representatives under the automorphisms found so far that fix
    /// every vertex of `prefix` pointwise.
    fn orbits_fixing(&self, prefix: &[u32]) -> Vec<u32> {
        let n = self.n;
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut Vec<u32>, x: u32) -> u32 {
            let mut r = x;
            while parent[r as usize] != r {
                r = parent[r as usize];
            }
            let mut c = x;
            while parent[c as usize] != r {
                let next = parent[c as usize];
                parent[c as usize] = r;
                c = next;
            }
            r
        }
        for a in &self.autos {
            if prefix.iter().any(|&p| a[p as usize] != p) {
                continue;
            }
            for v in 0..n as u32 {
                let (r1, r2) = (find(&mut parent, v), find(&mut parent, a[v as usize]));
                if r1 != r2 {
                    parent[r1 as usize] = r2;
                }
            }
        }
        (0..n as u32).map(|v| find(&mut parent, v)).collect()
    }

    fn record_leaf(&mut self, colors: &[u32]) {
        let n = self.n;
        // colors are a bijection onto 0..n; pos_to_vertex inverts it.
        let mut pos_to_vertex = vec![0u32; n];
        for v in 0..n {
            pos_to_vertex[colors[v] as usize] = v as u32;
        }
        let code = self.encode(&pos_to_vertex);
        match &self.best_code {
            None => {
                self.best_code = Some(code);
                self.best_label = Some(colors.to_vec());
            }
            Some(best) => {
                if code < *best {
                    self.best_code = Some(code);
                    self.best_label = Some(colors.to_vec());
                } else if code == *best {
                    // Equal leaves yield an automorphism: map the vertex at
                    // canonical position i of the best leaf to the vertex at
                    // position i of this leaf.
                    let best_label = self.best_label.as_ref().unwrap();
                    let mut best_inv = vec![0u32; n];
                    for v in 0..n {
                        best_inv[best_label[v] as usize] = v as u32;
                    }
                    let mut auto = vec![0u32; n];
                    for i in 0..n {
                        auto[best_inv[i] as usize] = pos_to_vertex[i];
                    }
                    if auto.iter().enumerate().any(|(v, &img)| v as u32 != img) {
                        self.autos.push(auto);
                    }
                }
            }
        }
    }

    fn encode(&self, pos_to_vertex: &[u32]) -> Vec<u8> {
        let n = self.n;
        let flags = (self.has_multi as u8) | ((self.has_loops as u8) << 1);
        let mut out = vec![flags, n as u8];
        if self.has_loops {
            for i in 0..n {
                out.push(self.loops[pos_to_vertex[i] as usize]);
            }
        }
        let pairs = n * (n - 1) / 2;
        if self.has_multi {
            out.reserve(pairs);
            for i in 0..n {
                let u = pos_to_vertex[i] as usize;
                for j in i + 1..n {
                    out.push(self.mult_of(u, pos_to_vertex[j] as usize));
                }
            }
        } else {
            let start = out.len();
            out.resize(start + pairs.div_ceil(8), 0);
            let mut k = 0;
            for i in 0..n {
                let u = pos_to_vertex[i] as usize;
                for j in i + 1..n {
                    if self.adj_bits[u] >> pos_to_vertex[j] & 1 == 1 {
                        out[start + k / 8] |= 1 << (7 - k % 8);
                    }
                    k += 1;
                }
            }
        }
        out
    }
}
