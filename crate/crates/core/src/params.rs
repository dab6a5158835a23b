//! Validated parameter set for one code instance.
//!
//! A code is indexed by an odd prime p, an even extension degree e = 2m and
//! a positive Frobenius exponent l.  The derived quantities s = gcd(l, e)
//! and the parity of m/s select which closed forms apply; parameter sets
//! with e/s odd are outside the supported family and are rejected up front.

use crate::error::Error;
use crate::util::{checked_pow, gcd, is_prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeSpec {
    pub p: u64,
    pub e: u32,
    pub l: u32,
    /// e / 2
    pub m: u32,
    /// gcd(l, e), computed from the raw l even when l >= e
    pub s: u32,
    /// p^e
    pub q: u64,
    /// (m / s) mod 2
    pub ms_parity: u8,
}

impl CodeSpec {
    pub fn new(p: u64, e: u32, l: u32) -> Result<Self, Error> {
        if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if e == 0 || !e.is_multiple_of(2) {
            return Err(Error::OddExtensionDegree(e));
        }
        if l == 0 {
            return Err(Error::ZeroFrobeniusExponent);
        }
        let s = gcd(l as u64, e as u64) as u32;
        if !(e / s).is_multiple_of(2) {
            return Err(Error::OddEOverS { e, s });
        }
        let q = checked_pow(p, e).ok_or(Error::Overflow("p^e does not fit in u64"))?;
        // q^2 pairs are enumerated downstream; insist it stays addressable.
        q.checked_mul(q).ok_or(Error::Overflow("p^2e does not fit in u64"))?;
        let m = e / 2;
        Ok(CodeSpec {
            p,
            e,
            l,
            m,
            s,
            q,
            ms_parity: ((m / s) % 2) as u8,
        })
    }

    /// True when m/s is odd.
    pub fn ms_odd(&self) -> bool {
        self.ms_parity == 1
    }
}
