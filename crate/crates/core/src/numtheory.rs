//! Factorization, divisors and the congruence `x² + x + 1 ≡ 0 (mod n)`.
//!
//! Everything here is generic over the unsigned machine integer used for
//! `n`. Intermediate products go through [`mul_mod`], which never overflows
//! regardless of the width chosen.

use std::fmt;

use num_integer::Integer;
use num_traits::{PrimInt, Unsigned};
use serde::Serialize;

use crate::error::{Error, Result};

/// Unsigned integer types usable as moduli.
pub trait Natural:
    PrimInt + Unsigned + Integer + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn small(v: u8) -> Self {
        Self::from(v).expect("every unsigned type holds a u8")
    }
}

impl<T> Natural for T where
    T: PrimInt + Unsigned + Integer + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// `a + b mod n` for `a, b < n`.
pub fn add_mod<T: Natural>(a: T, b: T, n: T) -> T {
    debug_assert!(a < n && b < n);
    if a >= n - b {
        a - (n - b)
    } else {
        a + b
    }
}

/// `a * b mod n` without overflow for any `T`.
pub fn mul_mod<T: Natural>(a: T, b: T, n: T) -> T {
    let (a, b) = (a % n, b % n);
    if let Some(p) = a.checked_mul(&b) {
        return p % n;
    }
    // double-and-add
    let mut acc = T::zero();
    let mut base = a;
    let mut e = b;
    while !e.is_zero() {
        if e.is_odd() {
            acc = add_mod(acc, base, n);
        }
        base = add_mod(base, base, n);
        e = e >> 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse<T: Natural>(a: T, m: T) -> Option<T> {
    if m.is_one() {
        return Some(T::zero());
    }
    // extended Euclid with Bézout coefficients kept reduced mod m
    let (mut old_r, mut r) = (a % m, m);
    let (mut old_s, mut s) = (T::one(), T::zero());
    while !r.is_zero() {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        let qs = mul_mod(q, s, m);
        let next = if qs.is_zero() {
            old_s
        } else {
            add_mod(old_s, m - qs, m)
        };
        (old_s, s) = (s, next);
    }
    old_r.is_one().then_some(old_s)
}

/// Trial-division primality test.
pub fn is_prime<T: Natural>(n: T) -> bool {
    if n < T::small(2) {
        return false;
    }
    let mut d = T::small(2);
    while d <= n / d {
        if (n % d).is_zero() {
            return false;
        }
        d = d + T::one();
    }
    true
}

/// Prime factorization of a positive integer, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization<T> {
    n: T,
    factors: Vec<(T, u32)>,
}

impl<T: Natural> Factorization<T> {
    pub fn n(&self) -> T {
        self.n
    }

    pub fn factors(&self) -> &[(T, u32)] {
        &self.factors
    }

    /// Exponent of `p` in `n` (0 if absent).
    pub fn exponent_of(&self, p: T) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, k)| k)
    }

    pub fn primes(&self) -> impl Iterator<Item = T> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Prime powers `p^k ∥ n`, in prime order.
    pub fn prime_powers(&self) -> impl Iterator<Item = T> + '_ {
        self.factors.iter().map(|&(p, k)| p.pow(k))
    }

    /// All divisors, ascending.
    pub fn divisors(&self) -> Vec<T> {
        let mut out = vec![T::one()];
        for &(p, k) in &self.factors {
            let len = out.len();
            let mut pk = T::one();
            for _ in 0..k {
                pk = pk * p;
                for i in 0..len {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of residues solving `x² + x + 1 ≡ 0 (mod n)`.
    pub fn omega_count(&self) -> u64 {
        let three = T::small(3);
        let mut count = 1u64;
        for &(p, k) in &self.factors {
            if p == three {
                if k > 1 {
                    return 0;
                }
            } else if p % three == T::small(2) {
                return 0;
            } else {
                count *= 2;
            }
        }
        count
    }
}

pub fn factorize<T: Natural>(n: T) -> Result<Factorization<T>> {
    if n.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut d = T::small(2);
    while d <= rest / d {
        if (rest % d).is_zero() {
            let mut k = 0;
            while (rest % d).is_zero() {
                rest = rest / d;
                k += 1;
            }
            factors.push((d, k));
        }
        d = if d == T::small(2) {
            T::small(3)
        } else {
            d + T::small(2)
        };
    }
    if rest > T::one() {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn divisors<T: Natural>(f: &Factorization<T>) -> Vec<T> {
    f.divisors()
}

pub fn omega_count<T: Natural>(f: &Factorization<T>) -> u64 {
    f.omega_count()
}

/// The complete, sorted solution set of `x² + x + 1 ≡ 0 (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceSolutions<T> {
    pub modulus: T,
    pub roots: Vec<T>,
}

impl<T: Natural> CongruenceSolutions<T> {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, x: T) -> bool {
        self.roots.binary_search(&x).is_ok()
    }
}

/// `x² + x + 1 mod n`.
pub fn eval_mod<T: Natural>(x: T, n: T) -> T {
    let x = x % n;
    let sq = mul_mod(x, x, n);
    add_mod(add_mod(sq, x, n), T::one() % n, n)
}

/// Scan every residue `0..n`.
pub fn solve_naive<T: Natural>(n: T) -> Result<CongruenceSolutions<T>> {
    if n.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let two = T::small(2) % n;
    let mut roots = Vec::new();
    // value = x² + x + 1 and step = 2x + 2, both mod n
    let mut value = T::one() % n;
    let mut step = two;
    let mut x = T::zero();
    loop {
        if value.is_zero() {
            roots.push(x);
        }
        x = x + T::one();
        if x == n {
            break;
        }
        value = add_mod(value, step, n);
        step = add_mod(step, two, n);
    }
    Ok(CongruenceSolutions { modulus: n, roots })
}

/// Lift a root mod `p` to the root mod `p^exponent` congruent to it.
///
/// Each step writes `x² + x + 1 = j·p^k` and picks `m` with
/// `m(2x + 1) + j ≡ 0 (mod p)`; then `x + m·p^k` solves mod `p^(k+1)`.
pub fn lift_prime_power<T: Natural>(p: T, root: T, exponent: u32) -> Result<T> {
    let three = T::small(3);
    if p == three {
        return Err(Error::InvalidLift("p = 3 does not lift".into()));
    }
    if p < T::small(2) || !is_prime(p) {
        return Err(Error::InvalidLift(format!("{p} is not prime")));
    }
    if exponent == 0 {
        return Err(Error::InvalidLift("exponent must be at least 1".into()));
    }
    let mut x = root % p;
    if !eval_mod(x, p).is_zero() {
        return Err(Error::InvalidLift(format!(
            "{root} does not solve x^2+x+1 = 0 mod {p}"
        )));
    }
    let mut pk = p;
    for _ in 1..exponent {
        let next = pk
            .checked_mul(&p)
            .ok_or(Error::Overflow("prime power in lift_prime_power"))?;
        // value is divisible by pk; j mod p = value / pk
        let j = eval_mod(x, next) / pk;
        let slope = add_mod(mul_mod(T::small(2), x, p), T::one() % p, p);
        let inv = mod_inverse(slope, p).ok_or_else(|| {
            Error::InternalInconsistency(format!("2x+1 not invertible mod {p} while lifting"))
        })?;
        // m = -j / (2x + 1) mod p
        let m = mul_mod((p - j % p) % p, inv, p);
        x = x + m * pk;
        pk = next;
    }
    Ok(x)
}

/// Chinese-remainder merge of `x ≡ a (mod m)` and `x ≡ b (mod k)` with coprime moduli.
fn crt_pair<T: Natural>(a: T, m: T, b: T, k: T) -> T {
    let inv = mod_inverse(m % k, k).expect("CRT moduli are coprime");
    // x = a + m * ((b - a) * inv mod k)
    let diff = add_mod(b % k, (k - a % k) % k, k);
    let t = mul_mod(diff, inv, k);
    a + m * t
}

/// Roots modulo a single prime power `p^k`.
fn roots_mod_prime_power<T: Natural>(p: T, k: u32) -> Vec<T> {
    let three = T::small(3);
    if p == three {
        return if k == 1 { vec![T::one()] } else { Vec::new() };
    }
    if p % three != T::one() {
        return Vec::new();
    }
    // scan mod p for one root, lift it, and pair it with p^k - x - 1
    let mut x = T::zero();
    while x < p {
        if eval_mod(x, p).is_zero() {
            break;
        }
        x = x + T::one();
    }
    let pk = p.pow(k);
    let lifted = lift_prime_power(p, x, k).expect("root mod p exists for p = 1 mod 3");
    let partner = pk - lifted - T::one();
    let mut roots = vec![lifted, partner];
    roots.sort_unstable();
    roots
}

/// Solve via prime powers and the Chinese remainder theorem.
pub fn solve_fast<T: Natural>(f: &Factorization<T>) -> CongruenceSolutions<T> {
    let mut modulus = T::one();
    let mut roots = vec![T::zero()];
    for &(p, k) in f.factors() {
        let local = roots_mod_prime_power(p, k);
        if local.is_empty() {
            return CongruenceSolutions {
                modulus: f.n(),
                roots: Vec::new(),
            };
        }
        let pk = p.pow(k);
        let mut merged = Vec::with_capacity(roots.len() * local.len());
        for &a in &roots {
            for &b in &local {
                merged.push(crt_pair(a, modulus, b, pk));
            }
        }
        modulus = modulus * pk;
        roots = merged;
    }
    roots.sort_unstable();
    CongruenceSolutions {
        modulus: f.n(),
        roots,
    }
}
