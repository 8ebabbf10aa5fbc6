//! Closed-form counts as functions of the vertex count `V`.
//!
//! All of them are read off the prime factorization of `V/4`. Rational
//! coefficients are applied as checked exact divisions after the integer
//! combination, so a non-integral intermediate is reported instead of
//! rounded away.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, Factorization};

/// Factorization of `V/4`, rejecting vertex counts no trihex can have.
pub fn quarter(v: u64) -> Result<Factorization<u64>> {
    if v < 4 || !v.is_multiple_of(4) {
        return Err(Error::InvalidVertexCount(v));
    }
    factorize(v / 4)
}

fn divisor_sum_of_prime_power(p: u64, k: u32) -> Result<u64> {
    let mut sum = 1u64;
    let mut pk = 1u64;
    for _ in 0..k {
        pk = pk.checked_mul(p).ok_or(Error::Overflow("sigma"))?;
        sum = sum.checked_add(pk).ok_or(Error::Overflow("sigma"))?;
    }
    Ok(sum)
}

fn exact(num: u64, den: u64, what: &str) -> Result<u64> {
    if !num.is_multiple_of(den) {
        return Err(Error::InternalInconsistency(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(num / den)
}

/// Number of signatures with `V` vertices: the divisor sum of `V/4`.
pub fn sigma(v: u64) -> Result<u64> {
    let q = quarter(v)?;
    q.factors().iter().try_fold(1u64, |acc, &(p, k)| {
        acc.checked_mul(divisor_sum_of_prime_power(p, k)?)
            .ok_or(Error::Overflow("sigma"))
    })
}

/// Trihexes with 3-fold rotational symmetry.
pub fn delta(v: u64) -> Result<u64> {
    let q = quarter(v)?;
    let mut count = 1;
    for &(p, k) in q.factors() {
        match p % 3 {
            2 if k % 2 == 1 => return Ok(0),
            1 => count *= u64::from(k) + 1,
            _ => {}
        }
    }
    Ok(count)
}

/// Trihexes up to orientation-preserving equivalence.
pub fn trihex_count(v: u64) -> Result<u64> {
    let total = sigma(v)? + 2 * delta(v)?;
    exact(total, 3, "trihex count")
}

/// Trihexes with mirror symmetry.
pub fn mu(v: u64) -> Result<u64> {
    let q = quarter(v)?;
    let odd: u64 = q
        .factors()
        .iter()
        .filter(|&&(p, _)| p != 2)
        .map(|&(_, k)| u64::from(k) + 1)
        .product();
    let w = u64::from(q.exponent_of(2));
    Ok(if w > 0 { (2 * w - 1) * odd } else { odd })
}

/// 1 when some trihex has both mirror and 3-fold symmetry, else 0.
pub fn nu(v: u64) -> Result<u64> {
    let q = quarter(v)?;
    let all_even = q
        .factors()
        .iter()
        .filter(|&&(p, _)| p != 3)
        .all(|&(_, k)| k % 2 == 0);
    Ok(u64::from(all_even))
}

/// The unique doubly symmetric signature, when `nu(v) = 1`.
pub fn nu_witness(v: u64) -> Result<Option<crate::Signature>> {
    if nu(v)? == 0 {
        return Ok(None);
    }
    let q = v / 4;
    let three = quarter(v)?.exponent_of(3);
    // V/4 = t·m² with t = 1 or t = 3
    let t = if three % 2 == 0 { 1 } else { 3 };
    let m = (q / t).isqrt();
    debug_assert_eq!(t * m * m, q);
    let sig = if t == 1 {
        crate::Signature::new(m - 1, m - 1, 0)?
    } else {
        crate::Signature::new(3 * m - 1, m - 1, m)?
    };
    Ok(Some(sig))
}

/// Graph isomorphism classes (mirror images identified).
///
/// Computed as `(σ + 2δ + 3μ) / 6` and, independently, from the four
/// factorization cases; the two must agree.
pub fn gamma(v: u64) -> Result<u64> {
    let combined = sigma(v)? + 2 * delta(v)? + 3 * mu(v)?;
    let by_sums = exact(combined, 6, "gamma")?;
    let by_cases = gamma_by_cases(v)?;
    if by_sums != by_cases {
        return Err(Error::InternalInconsistency(format!(
            "gamma({v}): {by_sums} from sigma/delta/mu but {by_cases} from the case formulas"
        )));
    }
    Ok(by_sums)
}

/// γ from the case split on the exponents of 2 and of primes ≡ 2 (mod 3).
pub fn gamma_by_cases(v: u64) -> Result<u64> {
    let q = quarter(v)?;
    let a = u128::from(q.exponent_of(2));
    let b = q.exponent_of(3);
    let mut sigma_rest: u128 = 1;
    let mut k_prod: u128 = 1;
    let mut l_prod: u128 = 1;
    let mut l_all_even = true;
    for &(p, k) in q.factors() {
        if p == 2 || p == 3 {
            continue;
        }
        sigma_rest *= u128::from(divisor_sum_of_prime_power(p, k)?);
        if p % 3 == 1 {
            k_prod *= u128::from(k) + 1;
        } else {
            l_prod *= u128::from(k) + 1;
            l_all_even &= k % 2 == 0;
        }
    }
    let r = Ratio::<u128>::from_integer;
    let three_part = 3u128.pow(b + 1) - 1;
    let b1 = u128::from(b) + 1;
    let two_part = if a > 0 { (1u128 << (a + 1)) - 1 } else { 1 };
    let mirror_factor = if a > 0 { 2 * a - 1 } else { 1 };

    let main = Ratio::new(two_part * three_part, 12) * r(sigma_rest);
    let mirror = Ratio::new(mirror_factor * b1, 2) * r(k_prod * l_prod);
    let rotation = Ratio::new(k_prod, 3);
    // the rotation term survives only when delta(V) is nonzero
    let value = if a % 2 == 0 && l_all_even {
        main + rotation + mirror
    } else {
        main + mirror
    };
    if !value.is_integer() {
        return Err(Error::InternalInconsistency(format!(
            "gamma({v}) case formula is not an integer: {value}"
        )));
    }
    u64::try_from(value.to_integer()).map_err(|_| Error::Overflow("gamma"))
}

/// Graph isomorphism classes among the rotationally symmetric trihexes.
pub fn rot_classes(v: u64) -> Result<u64> {
    let by_pairs = exact(delta(v)? + nu(v)?, 2, "rot_classes")?;
    let by_cases = rot_classes_by_cases(v)?;
    if by_pairs != by_cases {
        return Err(Error::InternalInconsistency(format!(
            "rot_classes({v}): {by_pairs} vs {by_cases}"
        )));
    }
    Ok(by_pairs)
}

/// The case split: 0, `Πk/2`, or `Πk/2 + 1/2`.
pub fn rot_classes_by_cases(v: u64) -> Result<u64> {
    let q = quarter(v)?;
    let mut k_prod = 1u64;
    let mut k_all_even = true;
    for &(p, k) in q.factors() {
        match p % 3 {
            2 if k % 2 == 1 => return Ok(0),
            1 => {
                k_prod *= u64::from(k) + 1;
                k_all_even &= k % 2 == 0;
            }
            _ => {}
        }
    }
    let half = Ratio::new(k_prod, 2);
    let value = if k_all_even {
        half + Ratio::new(1, 2)
    } else {
        half
    };
    if !value.is_integer() {
        return Err(Error::InternalInconsistency(format!(
            "rot_classes({v}) case formula is not an integer: {value}"
        )));
    }
    Ok(value.to_integer())
}

/// Every count for one vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountReport {
    #[serde(rename = "V")]
    pub v: u64,
    pub sigma: u64,
    pub delta: u64,
    pub mu: u64,
    pub nu: u64,
    pub trihexes: u64,
    pub gamma: u64,
    pub rot_classes: u64,
}

impl CountReport {
    pub const CSV_HEADER: &'static str = "V,sigma,delta,mu,nu,trihexes,gamma,rot_classes";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.v,
            self.sigma,
            self.delta,
            self.mu,
            self.nu,
            self.trihexes,
            self.gamma,
            self.rot_classes
        )
    }

    fn check(&self) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::InternalInconsistency(format!(
                "count report for V={} violates {what}",
                self.v
            )))
        };
        if 3 * self.trihexes != self.sigma + 2 * self.delta {
            return fail("trihexes = (sigma + 2 delta)/3");
        }
        if 6 * self.gamma != self.sigma + 2 * self.delta + 3 * self.mu {
            return fail("gamma = (sigma + 2 delta + 3 mu)/6");
        }
        if 2 * self.rot_classes != self.delta + self.nu {
            return fail("rot_classes = (delta + nu)/2");
        }
        if self.nu > 1 || self.delta < self.nu || self.mu < self.nu {
            return fail("nu <= min(1, delta, mu)");
        }
        Ok(())
    }
}

pub fn report(v: u64) -> Result<CountReport> {
    let r = CountReport {
        v,
        sigma: sigma(v)?,
        delta: delta(v)?,
        mu: mu(v)?,
        nu: nu(v)?,
        trihexes: trihex_count(v)?,
        gamma: gamma(v)?,
        rot_classes: rot_classes(v)?,
    };
    r.check()?;
    Ok(r)
}
