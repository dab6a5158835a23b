//! Exact arithmetic in Z[zeta_p] for an odd prime p.
//!
//! Elements are integer coordinate vectors over the integral basis
//! {1, zeta, ..., zeta^(p-2)}.  The relation 1 + zeta + ... + zeta^(p-1) = 0
//! rewrites zeta^(p-1) as -(1 + zeta + ... + zeta^(p-2)), which keeps the
//! representation canonical: two elements are equal iff their coordinate
//! vectors are equal.  Character sums stay well inside i64, and every
//! operation uses checked arithmetic so an overflow can never wrap silently.

use std::fmt;

/// An element of Z[zeta_p] in the canonical integral basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u64,
    /// Length p - 1: coordinates of 1, zeta, ..., zeta^(p-2).
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn zero(p: u64) -> Self {
        assert!(p >= 3, "p must be an odd prime");
        CycInt { p, coeffs: vec![0; (p - 1) as usize] }
    }

    pub fn from_integer(p: u64, n: i64) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = n;
        out
    }

    /// zeta^k, for any integer exponent (reduced mod p).
    pub fn zeta_pow(p: u64, k: i64) -> Self {
        let r = k.rem_euclid(p as i64) as u64;
        let mut out = Self::zero(p);
        if r == p - 1 {
            for c in out.coeffs.iter_mut() {
                *c = -1;
            }
        } else {
            out.coeffs[r as usize] = 1;
        }
        out
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Some(n) iff the element is the rational integer n, i.e. all
    /// coordinates above the constant one vanish.
    pub fn as_rational_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    pub fn add(&self, rhs: &CycInt) -> CycInt {
        assert_eq!(self.p, rhs.p, "mixed cyclotomic orders");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| a.checked_add(b).expect("overflow in Z[zeta_p]"))
            .collect();
        CycInt { p: self.p, coeffs }
    }

    pub fn sub(&self, rhs: &CycInt) -> CycInt {
        assert_eq!(self.p, rhs.p, "mixed cyclotomic orders");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| a.checked_sub(b).expect("overflow in Z[zeta_p]"))
            .collect();
        CycInt { p: self.p, coeffs }
    }

    pub fn neg(&self) -> CycInt {
        let coeffs = self.coeffs.iter().map(|&a| -a).collect();
        CycInt { p: self.p, coeffs }
    }

    pub fn scale(&self, n: i64) -> CycInt {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| a.checked_mul(n).expect("overflow in Z[zeta_p]"))
            .collect();
        CycInt { p: self.p, coeffs }
    }

    pub fn mul(&self, rhs: &CycInt) -> CycInt {
        assert_eq!(self.p, rhs.p, "mixed cyclotomic orders");
        let d = (self.p - 1) as usize;
        // Convolution in exponents 0 .. 2(p-2), then exponent reduction.
        let mut raw = vec![0i64; 2 * d - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).expect("overflow in Z[zeta_p]");
                raw[i + j] = raw[i + j].checked_add(t).expect("overflow in Z[zeta_p]");
            }
        }
        let mut out = CycInt::zero(self.p);
        for (t, &c) in raw.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let r = t as u64 % self.p;
            if r == self.p - 1 {
                for coeff in out.coeffs.iter_mut() {
                    *coeff = coeff.checked_sub(c).expect("overflow in Z[zeta_p]");
                }
            } else {
                let slot = &mut out.coeffs[r as usize];
                *slot = slot.checked_add(c).expect("overflow in Z[zeta_p]");
            }
        }
        out
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
