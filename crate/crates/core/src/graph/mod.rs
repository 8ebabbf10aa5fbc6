//! Realizing a signature as an embedded cubic graph.
//!
//! Hexagon centers of the covering tiling are written in axial coordinates
//! `(a, c)` meaning `a·N + c·NE`, where `N` steps one hexagon up a column
//! and `NE` one hexagon into the next column towards the northeast. The
//! special hexagons sit on the lattice `L` spanned by `(s+1)·N` and
//! `(b+1)·NE + f·N`. Half-turns about the points of `L` generate a group
//! whose translations are `2L`, so the torus `Z²/2L` carries `4(s+1)(b+1)`
//! hexagons and twice as many tiling vertices. The remaining half-turn pairs
//! those vertices up.
//!
//! Each hexagon `H` owns two tiling vertices: its east corner `R(H)` and its
//! west corner `L(H)`. The half-turn about the origin sends `R(H)` to
//! `L(-H)`, so every vertex of the quotient has exactly one representative
//! of the form `R(H)`; vertex ids are torus hexagon indices.

mod canon;
mod checks;
mod export;

pub use canon::{are_isomorphic, canonical_code, is_chiral, CanonicalCode};
pub use checks::{check_graphs, GraphCheckFailure};
pub use export::{
    export, planar_code_entries, read_planar_code, write_planar_code, ExportFormat,
    PLANAR_CODE_HEADER,
};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::signature::Signature;

/// A cubic graph with a counterclockwise rotation at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rot: Vec<[usize; 3]>,
    source: Signature,
}

impl EmbeddedGraph {
    /// Wrap a rotation system, checking every trihex invariant.
    pub fn from_rotation(rot: Vec<[usize; 3]>, source: Signature) -> Result<Self> {
        let g = EmbeddedGraph { rot, source };
        g.validate()?;
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn rotation(&self) -> &[[usize; 3]] {
        &self.rot
    }

    pub fn source(&self) -> Signature {
        self.source
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .rot
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Same embedding with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> EmbeddedGraph {
        assert_eq!(perm.len(), self.rot.len());
        let mut rot = vec![[0; 3]; self.rot.len()];
        for (v, ns) in self.rot.iter().enumerate() {
            rot[perm[v]] = ns.map(|u| perm[u]);
        }
        EmbeddedGraph {
            rot,
            source: self.source,
        }
    }

    /// Every rotation reversed: the mirror-image embedding.
    pub fn reflected(&self) -> EmbeddedGraph {
        EmbeddedGraph {
            rot: self.rot.iter().map(|&[x, y, z]| [x, z, y]).collect(),
            source: self.source,
        }
    }

    /// Face length → number of faces.
    pub fn face_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for face in faces(self) {
            *census.entry(face.len()).or_insert(0) += 1;
        }
        census
    }

    fn validate(&self) -> Result<()> {
        let n = self.rot.len();
        let fail = |what: String| Err(Error::inconsistent_at(self.source, what));
        if n == 0 {
            return fail("empty graph".into());
        }
        for (v, ns) in self.rot.iter().enumerate() {
            if ns.iter().any(|&u| u >= n || u == v) {
                return fail(format!("vertex {v} has an invalid neighbour in {ns:?}"));
            }
            if ns[0] == ns[1] || ns[1] == ns[2] || ns[0] == ns[2] {
                return fail(format!("vertex {v} has a repeated neighbour"));
            }
            for &u in ns {
                if !self.rot[u].contains(&v) {
                    return fail(format!("edge {v}-{u} is not symmetric"));
                }
            }
        }
        if !self.is_connected() {
            return fail("graph is disconnected".into());
        }
        let census = self.face_census();
        let face_total: usize = census.values().sum();
        // V - E + F = 2 with E = 3V/2
        if 2 * n + 2 * face_total != 3 * n + 4 {
            return fail(format!("Euler characteristic fails: {census:?}"));
        }
        let h = self.source.hexagon_count() as usize;
        let expected = BTreeMap::from([(3, 4), (6, h)]);
        let expected = if h == 0 {
            BTreeMap::from([(3, 4)])
        } else {
            expected
        };
        if census != expected {
            return fail(format!("face census {census:?}, expected {expected:?}"));
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.rot.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.rot[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.rot.len()
    }
}

/// Trace the faces of the rotation system. Each face is the cyclic list of
/// vertices met along it; every directed edge lies on exactly one face.
pub fn faces(g: &EmbeddedGraph) -> Vec<Vec<usize>> {
    let rot = &g.rot;
    let mut used = vec![[false; 3]; rot.len()];
    let mut out = Vec::new();
    for v0 in 0..rot.len() {
        for i0 in 0..3 {
            if used[v0][i0] {
                continue;
            }
            let mut face = Vec::new();
            let (mut v, mut i) = (v0, i0);
            while !used[v][i] {
                used[v][i] = true;
                face.push(v);
                let u = rot[v][i];
                let back = rot[u]
                    .iter()
                    .position(|&x| x == v)
                    .expect("symmetric adjacency");
                // turn to the next edge clockwise after arriving: the face on our left
                (v, i) = (u, (back + 2) % 3);
            }
            out.push(face);
        }
    }
    out
}

/// Realize a signature as its trihex.
pub fn build(sig: Signature) -> Result<EmbeddedGraph> {
    let spine = sig.s() as i64 + 1;
    let belt = sig.b() as i64 + 1;
    let offset = sig.f() as i64;
    let width = 2 * spine;
    let height = 2 * belt;

    // canonical representative of (a, c) modulo 2L, as an index
    let index = |a: i64, c: i64| -> usize {
        let k = c.div_euclid(height);
        let a = (a - 2 * k * offset).rem_euclid(width);
        let c = c - k * height;
        (c * width + a) as usize
    };

    let n = (width * height) as usize;
    let rot = (0..n)
        .map(|id| {
            let (a, c) = (id as i64 % width, id as i64 / width);
            // R(H) meets L(H+NE+SE), L(H+NE), L(H+SE) counterclockwise,
            // and L(X) is the vertex R(-X)
            [
                index(1 - a, -c - 2),
                index(-a, -c - 1),
                index(1 - a, -c - 1),
            ]
        })
        .collect();
    EmbeddedGraph::from_rotation(rot, sig)
}
