//! Constructive enumeration of signatures for a fixed vertex count, and the
//! harness that checks every stream against its closed-form count.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::counting::{self, quarter};
use crate::error::{CheckedField, Error, Result};
use crate::numtheory::{factorize, mul_mod, solve_fast};
use crate::signature::Signature;

/// Every `(s, b, f)` with `4(s+1)(b+1) = V`, in lexicographic order.
pub fn all_signatures(v: u64) -> Result<Vec<Signature>> {
    let q = quarter(v)?;
    let mut out = Vec::new();
    for spine in q.divisors() {
        let belt = v / 4 / spine;
        for f in 0..spine {
            out.push(Signature::new(spine - 1, belt - 1, f)?);
        }
    }
    Ok(out)
}

/// One canonical signature per trihex, sorted.
pub fn trihex_reps(v: u64) -> Result<Vec<Signature>> {
    let reps: BTreeSet<Signature> = all_signatures(v)?
        .iter()
        .map(Signature::canonical_rep)
        .collect();
    Ok(reps.into_iter().collect())
}

/// Signatures `(tm - 1, m - 1, gm)` over all splittings `V/4 = t·m²`.
pub fn coinciding_signatures(v: u64) -> Result<Vec<Signature>> {
    let q = quarter(v)?;
    let n = v / 4;
    let mut out = Vec::new();
    for m in q.divisors() {
        let Some(m2) = m.checked_mul(m) else { break };
        if !n.is_multiple_of(m2) {
            continue;
        }
        let t = n / m2;
        for g in solve_fast(&factorize(t)?).roots {
            out.push(Signature::new(t * m - 1, m - 1, g * m)?);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Signatures equal to their own mirror: `2f ≡ -(b + 1) (mod s + 1)`.
pub fn self_mirror_signatures(v: u64) -> Result<Vec<Signature>> {
    let q = quarter(v)?;
    let mut out = Vec::new();
    for spine in q.divisors() {
        let belt = v / 4 / spine;
        let target = (spine - belt % spine) % spine;
        // 2f ≡ target has one root for odd spine, two or none for even
        if spine % 2 == 1 {
            let half = spine.div_ceil(2);
            out.push(Signature::new(
                spine - 1,
                belt - 1,
                mul_mod(target, half, spine),
            )?);
        } else if target.is_multiple_of(2) {
            let f = target / 2;
            out.push(Signature::new(spine - 1, belt - 1, f)?);
            out.push(Signature::new(spine - 1, belt - 1, f + spine / 2)?);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// One representative per graph isomorphism class: mirror-image trihexes
/// collapse onto the smaller canonical representative.
pub fn graph_class_reps(v: u64) -> Result<Vec<Signature>> {
    Ok(trihex_reps(v)?
        .into_iter()
        .filter(|r| *r <= r.mirror().canonical_rep())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationResult {
    #[serde(rename = "V")]
    pub v: u64,
    pub all_signatures: Vec<Signature>,
    pub trihex_reps: Vec<Signature>,
    pub coinciding: Vec<Signature>,
    pub self_mirror: Vec<Signature>,
    pub graph_class_reps: Vec<Signature>,
}

impl EnumerationResult {
    /// Self-mirror signatures that are also coinciding.
    pub fn doubly_symmetric(&self) -> Vec<Signature> {
        self.self_mirror
            .iter()
            .copied()
            .filter(|s| self.coinciding.binary_search(s).is_ok())
            .collect()
    }
}

fn expect_eq(v: u64, field: CheckedField, expected: u64, actual: usize) -> Result<()> {
    if expected != actual as u64 {
        return Err(Error::VerificationFailure {
            v,
            field,
            expected,
            actual: actual as u64,
        });
    }
    Ok(())
}

/// Build every stream for `V` and check it against `counting`.
pub fn verify(v: u64) -> Result<EnumerationResult> {
    let report = counting::report(v)?;
    let result = EnumerationResult {
        v,
        all_signatures: all_signatures(v)?,
        trihex_reps: trihex_reps(v)?,
        coinciding: coinciding_signatures(v)?,
        self_mirror: self_mirror_signatures(v)?,
        graph_class_reps: graph_class_reps(v)?,
    };

    let wrong_size = result
        .all_signatures
        .iter()
        .filter(|s| s.vertex_count() != v)
        .count();
    expect_eq(v, CheckedField::VertexCount, 0, wrong_size)?;
    expect_eq(
        v,
        CheckedField::Sigma,
        report.sigma,
        result.all_signatures.len(),
    )?;
    expect_eq(
        v,
        CheckedField::Trihexes,
        report.trihexes,
        result.trihex_reps.len(),
    )?;
    expect_eq(
        v,
        CheckedField::Delta,
        report.delta,
        result.coinciding.len(),
    )?;
    expect_eq(v, CheckedField::Mu, report.mu, result.self_mirror.len())?;
    expect_eq(
        v,
        CheckedField::Nu,
        report.nu,
        result.doubly_symmetric().len(),
    )?;
    expect_eq(
        v,
        CheckedField::Gamma,
        report.gamma,
        result.graph_class_reps.len(),
    )?;

    let stray = result
        .coinciding
        .iter()
        .filter(|c| result.trihex_reps.binary_search(c).is_err())
        .count();
    expect_eq(v, CheckedField::CoincidingAreReps, 0, stray)?;

    // trihex-level symmetry counts, from the predicates rather than the streams
    let mirror_reps = result
        .trihex_reps
        .iter()
        .filter(|r| r.has_mirror_symmetry())
        .count();
    expect_eq(v, CheckedField::MirrorSymmetricReps, report.mu, mirror_reps)?;
    let doubly_reps = result
        .trihex_reps
        .iter()
        .filter(|r| r.has_mirror_symmetry() && r.is_coinciding())
        .count();
    expect_eq(v, CheckedField::DoublySymmetricReps, report.nu, doubly_reps)?;

    Ok(result)
}
