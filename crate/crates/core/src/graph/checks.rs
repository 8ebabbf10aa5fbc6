//! Graph-level certification of the signature calculus for one vertex count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{build, canonical_code, is_chiral, CanonicalCode, EmbeddedGraph};
use crate::counting;
use crate::enumeration::{all_signatures, trihex_reps};
use crate::error::Result;
use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCheckFailure {
    pub v: u64,
    pub check: &'static str,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for GraphCheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V={} {}: expected {}, got {}",
            self.v, self.check, self.expected, self.actual
        )
    }
}

struct Built {
    graph: EmbeddedGraph,
    oriented: CanonicalCode,
    reflected_min: Vec<u32>,
}

/// Build every signature with `V` vertices and check that the graphs agree
/// with the signature calculus. Returns the failed checks (empty on success).
pub fn check_graphs(v: u64) -> Result<Vec<GraphCheckFailure>> {
    let mut failures = Vec::new();
    let mut fail = |check: &'static str, expected: String, actual: String| {
        failures.push(GraphCheckFailure {
            v,
            check,
            expected,
            actual,
        })
    };

    let mut built: BTreeMap<Signature, Built> = BTreeMap::new();
    for sig in all_signatures(v)? {
        match build(sig) {
            Ok(graph) => {
                let oriented = canonical_code(&graph, false);
                let reflected_min = canonical_code(&graph.reflected(), false).code;
                built.insert(
                    sig,
                    Built {
                        graph,
                        oriented,
                        reflected_min,
                    },
                );
            }
            Err(e) => fail("build", format!("valid trihex for {sig}"), e.to_string()),
        }
    }

    let reps = trihex_reps(v)?;
    for sig in built.keys() {
        // every equivalent signature builds the same oriented trihex
        let rep = sig.canonical_rep();
        if let (Some(a), Some(b)) = (built.get(sig), built.get(&rep)) {
            if a.oriented.code != b.oriented.code {
                fail(
                    "equivalence soundness",
                    format!("{sig} oriented-isomorphic to {rep}"),
                    "different oriented codes".into(),
                );
            }
        }
    }

    let mut oriented_codes = BTreeSet::new();
    let mut class_codes = BTreeSet::new();
    for rep in &reps {
        let Some(b) = built.get(rep) else { continue };
        if !oriented_codes.insert(b.oriented.code.clone()) {
            fail(
                "separation",
                format!("{rep} distinct from other representatives"),
                "shares an oriented code".into(),
            );
        }
        class_codes.insert(b.oriented.code.clone().min(b.reflected_min.clone()));

        let threefold = b.oriented.oriented_aut_count % 3 == 0;
        if rep.is_coinciding() != threefold {
            fail(
                "rotational symmetry",
                format!("coinciding={} for {rep}", rep.is_coinciding()),
                format!("oriented automorphisms {}", b.oriented.oriented_aut_count),
            );
        }

        let chiral = is_chiral(&b.graph);
        if rep.has_mirror_symmetry() == chiral {
            fail(
                "mirror symmetry",
                format!("mirror-symmetric={} for {rep}", rep.has_mirror_symmetry()),
                format!("chiral={chiral}"),
            );
        }

        // the mirror signature builds the mirror image
        if let Some(m) = built.get(&rep.mirror()) {
            if m.oriented.code != b.reflected_min {
                fail(
                    "mirror signature",
                    format!("{} builds the reflection of {rep}", rep.mirror()),
                    "codes differ".into(),
                );
            }
        }
    }

    let gamma = counting::gamma(v)?;
    if class_codes.len() as u64 != gamma {
        fail(
            "graph classes",
            gamma.to_string(),
            class_codes.len().to_string(),
        );
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_vertex_counts_pass() {
        for v in (4..=48).step_by(4) {
            let failures = check_graphs(v).unwrap();
            assert!(failures.is_empty(), "{failures:?}");
        }
    }
}
