//! Signatures `(s, b, f)` and their calculus: equivalent signatures,
//! mirror signatures and the symmetry predicates built on them.
//!
//! A signature describes the special hexagons of the hexagonal cover of a
//! trihex: `s` is the spine length, `b` the number of belt columns between
//! adjacent spine columns and `f` the offset between neighbouring spine
//! columns. The same trihex has three signatures, one per spine direction.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{mod_inverse, mul_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[u64; 3]", try_from = "[u64; 3]")]
pub struct Signature {
    s: u64,
    b: u64,
    f: u64,
}

impl Signature {
    /// Validates `f <= s` and that the vertex count fits in a `u64`.
    pub fn new(s: u64, b: u64, f: u64) -> Result<Self> {
        if f > s {
            return Err(Error::InvalidSignature { s, b, f });
        }
        s.checked_add(1)
            .zip(b.checked_add(1))
            .and_then(|(x, y)| x.checked_mul(y))
            .and_then(|q| q.checked_mul(4))
            .ok_or(Error::Overflow("vertex count of signature"))?;
        Ok(Signature { s, b, f })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn vertex_count(&self) -> u64 {
        4 * (self.s + 1) * (self.b + 1)
    }

    pub fn hexagon_count(&self) -> u64 {
        let h = 2 * self.s * self.b + 2 * self.s + 2 * self.b;
        debug_assert_eq!(h, self.vertex_count() / 2 - 2);
        h
    }

    /// The three equivalent signatures, starting from `self`.
    pub fn orbit(&self) -> Result<SignatureOrbit> {
        SignatureOrbit::from_first(*self)
    }

    fn orbit_or_panic(&self) -> SignatureOrbit {
        match self.orbit() {
            Ok(o) => o,
            Err(e) => panic!("equivalent signatures of {self} are inconsistent: {e}"),
        }
    }

    /// `(s, b, s - b - f mod (s + 1))`.
    pub fn mirror(&self) -> Signature {
        let modulus = self.s as i128 + 1;
        let f = (self.s as i128 - self.b as i128 - self.f as i128).rem_euclid(modulus);
        Signature {
            s: self.s,
            b: self.b,
            f: f as u64,
        }
    }

    /// All three equivalent signatures are the same triple.
    pub fn is_coinciding(&self) -> bool {
        let by_orbit = self.orbit_or_panic().is_coinciding();
        debug_assert_eq!(by_orbit, self.is_coinciding_by_form(), "{self}");
        by_orbit
    }

    /// Arithmetic test: `(tm - 1, m - 1, gm)` with `g² + g + 1 ≡ 0 (mod t)`.
    pub fn is_coinciding_by_form(&self) -> bool {
        let m = self.b + 1;
        if !(self.s + 1).is_multiple_of(m) || !self.f.is_multiple_of(m) {
            return false;
        }
        let t = (self.s + 1) / m;
        let g = self.f / m;
        (g as u128 * g as u128 + g as u128 + 1).is_multiple_of(t as u128)
    }

    pub fn is_self_mirror(&self) -> bool {
        let direct = self.mirror() == *self;
        // 2f ≡ -(b + 1) (mod s + 1)
        let congruence =
            (2 * self.f as u128 + self.b as u128 + 1).is_multiple_of(self.s as u128 + 1);
        debug_assert_eq!(direct, congruence, "{self}");
        direct
    }

    /// The mirror signature is one of the equivalent signatures.
    pub fn has_mirror_symmetry(&self) -> bool {
        self.orbit_or_panic().contains(&self.mirror())
    }

    /// Lexicographically smallest equivalent signature.
    pub fn canonical_rep(&self) -> Signature {
        self.orbit_or_panic().min()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.s, self.b, self.f)
    }
}

/// Accepts `s,b,f` or `(s,b,f)`, whitespace allowed around the numbers.
impl FromStr for Signature {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let malformed = || Error::MalformedSignature(text.to_string());
        let trimmed = text.trim();
        let inner = match trimmed.strip_prefix('(') {
            Some(rest) => rest.strip_suffix(')').ok_or_else(malformed)?,
            None => trimmed,
        };
        let parts: Vec<u64> = inner
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| malformed())?;
        match parts[..] {
            [s, b, f] => Signature::new(s, b, f),
            _ => Err(malformed()),
        }
    }
}

impl From<Signature> for [u64; 3] {
    fn from(sig: Signature) -> Self {
        [sig.s, sig.b, sig.f]
    }
}

impl TryFrom<[u64; 3]> for Signature {
    type Error = Error;

    fn try_from([s, b, f]: [u64; 3]) -> Result<Self> {
        Signature::new(s, b, f)
    }
}

/// The three equivalent signatures of one trihex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignatureOrbit {
    pub first: Signature,
    pub second: Signature,
    pub third: Signature,
}

impl SignatureOrbit {
    fn from_first(first: Signature) -> Result<Self> {
        let h = first.hexagon_count();
        let spine = first.s + 1;
        let belt = first.b + 1;

        let build = |generator: u64, shift: u64| -> Result<Signature> {
            // generator: f for the SW-NE spines, f + b + 1 for NW-SE
            let j = ord_mod(generator, spine);
            let s = j * belt - 1;
            let b = exact_div(h - 2 * s, 2 * s + 2)
                .ok_or_else(|| Error::inconsistent_at(first, "belt count division is inexact"))?;
            let p = min_multiplier(generator, b + 1, spine)
                .map_err(|e| Error::inconsistent_at(first, e))?;
            let modulus = s as u128 + 1;
            let offset = p as u128 * belt as u128 + shift_term(shift, b);
            let f = (modulus - offset % modulus) % modulus;
            Signature::new(s, b, f as u64)
        };

        let second = build(first.f, 1)?;
        let third = build(first.f + belt, 0)?;
        let orbit = SignatureOrbit {
            first,
            second,
            third,
        };
        orbit.check()?;
        Ok(orbit)
    }

    fn check(&self) -> Result<()> {
        let [a, b, c] = self.members();
        for other in [b, c] {
            if other.vertex_count() != a.vertex_count()
                || other.hexagon_count() != a.hexagon_count()
            {
                return Err(Error::inconsistent_at(
                    a,
                    "equivalent signatures differ in size",
                ));
            }
        }
        let distinct = a != b && b != c && a != c;
        let identical = a == b && b == c;
        if !(distinct || identical) {
            return Err(Error::inconsistent_at(
                a,
                format!("equivalent signatures {a} {b} {c} coincide only partially"),
            ));
        }
        Ok(())
    }

    pub fn members(&self) -> [Signature; 3] {
        [self.first, self.second, self.third]
    }

    /// Members sorted, for comparing orbits as unordered sets.
    pub fn sorted(&self) -> [Signature; 3] {
        let mut m = self.members();
        m.sort_unstable();
        m
    }

    pub fn contains(&self, sig: &Signature) -> bool {
        self.members().contains(sig)
    }

    pub fn min(&self) -> Signature {
        self.sorted()[0]
    }

    pub fn is_coinciding(&self) -> bool {
        self.first == self.second && self.second == self.third
    }
}

// The SW-NE construction subtracts an extra b2 + 1, the NW-SE one does not.
fn shift_term(shift: u64, b: u64) -> u128 {
    shift as u128 * (b as u128 + 1)
}

fn exact_div(num: u64, den: u64) -> Option<u64> {
    (den != 0 && num.is_multiple_of(den)).then(|| num / den)
}

/// Order of `a` in the additive group `Z/n`.
pub fn ord_mod(a: u64, n: u64) -> u64 {
    assert!(n >= 1, "ord_mod needs a positive modulus");
    n / (a % n).gcd(&n)
}

/// Smallest `p >= 1` with `p·a ≡ target (mod n)`; 1 when `n = 1`.
pub fn min_multiplier(a: u64, target: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let a_red = a % n;
    let t = target % n;
    let g = a_red.gcd(&n);
    if !t.is_multiple_of(g) {
        return Err(Error::NoSolution {
            a,
            target,
            modulus: n,
        });
    }
    let reduced = n / g;
    let inv = mod_inverse(a_red / g, reduced).expect("a/g is a unit mod n/g");
    let p = mul_mod(t / g, inv, reduced);
    Ok(if p == 0 { reduced } else { p })
}
