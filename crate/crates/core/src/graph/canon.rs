use std::cmp::Ordering;

use super::EmbeddedGraph;

/// Relabeling-invariant code of an embedded cubic graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub code: Vec<u32>,
    /// Orientation-preserving automorphisms of the embedding.
    pub oriented_aut_count: usize,
    /// The minimum came from the reversed orientation only.
    pub reflective: bool,
}

/// Counterclockwise (`Forward`) or clockwise (`Backward`) reading of rotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sense {
    Forward,
    Backward,
}

/// Breadth-first numbering from one directed edge. Every vertex emits the
/// numbers of its three neighbours, read in the given sense starting with
/// the edge it was discovered through. Stops early once the code is known
/// to exceed `best`.
#[allow(clippy::too_many_arguments)]
fn traverse(
    rot: &[[usize; 3]],
    start: usize,
    first: usize,
    sense: Sense,
    best: Option<&[u32]>,
    number: &mut [u32],
    entry: &mut [usize],
    out: &mut Vec<u32>,
) -> Ordering {
    number.fill(0);
    out.clear();
    let mut queue = Vec::with_capacity(rot.len());
    number[start] = 1;
    entry[start] = first;
    queue.push(start);
    let mut next = 2;
    let mut order = Ordering::Equal;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for step in 0..3 {
            let i = match sense {
                Sense::Forward => (entry[v] + step) % 3,
                Sense::Backward => (entry[v] + 3 - step) % 3,
            };
            let u = rot[v][i];
            if number[u] == 0 {
                number[u] = next;
                next += 1;
                entry[u] = rot[u].iter().position(|&x| x == v).expect("symmetric");
                queue.push(u);
            }
            let value = number[u];
            if order == Ordering::Equal {
                if let Some(b) = best {
                    order = value.cmp(&b[out.len()]);
                    if order == Ordering::Greater {
                        return order;
                    }
                }
            }
            out.push(value);
        }
    }
    match best {
        Some(_) => order,
        None => Ordering::Less,
    }
}

/// Minimal code over every start in one sense, and how many starts reach it.
fn minimal(g: &EmbeddedGraph, sense: Sense) -> (Vec<u32>, usize) {
    let rot = g.rotation();
    let n = rot.len();
    let mut number = vec![0; n];
    let mut entry = vec![0; n];
    let mut best: Option<Vec<u32>> = None;
    let mut count = 0;
    let mut scratch = Vec::with_capacity(3 * n);
    for v in 0..n {
        for i in 0..3 {
            let order = traverse(
                rot,
                v,
                i,
                sense,
                best.as_deref(),
                &mut number,
                &mut entry,
                &mut scratch,
            );
            match order {
                Ordering::Less => {
                    best = Some(scratch.clone());
                    count = 1;
                }
                Ordering::Equal => count += 1,
                Ordering::Greater => {}
            }
        }
    }
    (best.expect("graph has at least one vertex"), count)
}

pub fn canonical_code(g: &EmbeddedGraph, use_reflection: bool) -> CanonicalCode {
    let (forward, count) = minimal(g, Sense::Forward);
    if use_reflection {
        let (backward, _) = minimal(g, Sense::Backward);
        if backward < forward {
            return CanonicalCode {
                code: backward,
                oriented_aut_count: count,
                reflective: true,
            };
        }
    }
    CanonicalCode {
        code: forward,
        oriented_aut_count: count,
        reflective: false,
    }
}

/// Oriented mode: equal up to orientation-preserving isomorphism.
/// Reflective mode: equal as graphs (mirror images identified).
pub fn are_isomorphic(g1: &EmbeddedGraph, g2: &EmbeddedGraph, allow_reflection: bool) -> bool {
    g1.vertex_count() == g2.vertex_count()
        && canonical_code(g1, allow_reflection).code == canonical_code(g2, allow_reflection).code
}

/// Not isomorphic to its mirror image by any orientation-preserving map.
pub fn is_chiral(g: &EmbeddedGraph) -> bool {
    minimal(g, Sense::Forward).0 != minimal(g, Sense::Backward).0
}
