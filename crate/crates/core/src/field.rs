//! F_{p^e} arithmetic in the polynomial basis F_p[X]/(pi(X)).
//!
//! The modulus pi is chosen deterministically: among all monic irreducible
//! polynomials of degree e over F_p it is the lexicographically smallest,
//! comparing coefficient sequences low degree first.  Elements are coefficient
//! vectors of length e; the enumeration index of an element is its radix-p
//! value sum(coeffs[i] * p^i), so enumeration starts at 0 and visits every
//! element exactly once.  Everything downstream (trace tables, character
//! sums, codeword indexing) relies on this ordering being stable.

use std::fmt;

use crate::error::Error;
use crate::params::CodeSpec;
use crate::util::{checked_pow, is_prime, prime_factors};

/// One element of F_{p^e}: coefficients of 1, X, ..., X^{e-1}, reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Field context: modulus, trace table and primitive element for one F_{p^e}.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u64,
    e: u32,
    q: u64,
    /// Length e + 1, monic (last coefficient 1), low degree first.
    modulus: Vec<u64>,
    /// Absolute trace of every element, indexed by enumeration index.
    trace_table: Vec<u64>,
    /// Enumeration index of x^p for every element x, indexed likewise.
    frob_table: Vec<u64>,
    primitive: FieldElement,
}

/// Builds the field for a validated parameter set.
pub fn make_field(spec: &CodeSpec) -> Result<FieldCtx, Error> {
    FieldCtx::new(spec.p, spec.e)
}

impl FieldCtx {
    /// Field with the canonical (lexicographically smallest) modulus.
    pub fn new(p: u64, e: u32) -> Result<Self, Error> {
        check_field_params(p, e)?;
        let modulus = smallest_irreducible(p, e);
        Self::from_modulus(p, e, modulus)
    }

    /// Field over a caller-supplied modulus, given low degree first with its
    /// leading coefficient included.  The modulus must be monic, of degree e
    /// and irreducible over F_p.
    pub fn with_modulus(p: u64, e: u32, coeffs: &[u64]) -> Result<Self, Error> {
        check_field_params(p, e)?;
        let mut modulus: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
        while modulus.last() == Some(&0) {
            modulus.pop();
        }
        if modulus.len() != e as usize + 1 || modulus[e as usize] != 1 {
            return Err(Error::ModulusDegree {
                expected: e,
                got: modulus.len().saturating_sub(1),
            });
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::ModulusReducible);
        }
        Self::from_modulus(p, e, modulus)
    }

    fn from_modulus(p: u64, e: u32, modulus: Vec<u64>) -> Result<Self, Error> {
        let q = checked_pow(p, e).ok_or(Error::Overflow("p^e does not fit in u64"))?;
        let mut ctx = FieldCtx {
            p,
            e,
            q,
            modulus,
            trace_table: Vec::new(),
            frob_table: Vec::new(),
            primitive: FieldElement { coeffs: vec![0; e as usize] },
        };
        ctx.trace_table = ctx.build_trace_table();
        ctx.frob_table = (0..q)
            .map(|i| ctx.index_of(&ctx.pow(&ctx.element(i).expect("index in range"), p)))
            .collect();
        ctx.primitive = ctx.find_primitive_element();
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, low degree first, length e + 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The first element in enumeration order whose multiplicative order
    /// is q - 1.
    pub fn primitive_element(&self) -> &FieldElement {
        &self.primitive
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.e as usize] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_residue(1)
    }

    /// The constant polynomial c mod p.
    pub fn from_residue(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.e as usize];
        coeffs[0] = c % self.p;
        FieldElement { coeffs }
    }

    /// Element from raw coefficients (low degree first, at most e of them).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement, Error> {
        if coeffs.len() > self.e as usize {
            return Err(Error::ModulusDegree { expected: self.e, got: coeffs.len() });
        }
        let mut out = vec![0; self.e as usize];
        for (i, &c) in coeffs.iter().enumerate() {
            out[i] = c % self.p;
        }
        Ok(FieldElement { coeffs: out })
    }

    /// Element number `index` in enumeration order: the base-p digits of the
    /// index are the coefficients, least significant digit first.
    pub fn element(&self, index: u64) -> Result<FieldElement, Error> {
        if index >= self.q {
            return Err(Error::IndexOutOfRange { index, q: self.q });
        }
        let mut coeffs = vec![0; self.e as usize];
        let mut k = index;
        for c in coeffs.iter_mut() {
            *c = k % self.p;
            k /= self.p;
        }
        Ok(FieldElement { coeffs })
    }

    pub fn index_of(&self, x: &FieldElement) -> u64 {
        let mut acc = 0;
        for &c in x.coeffs.iter().rev() {
            acc = acc * self.p + c;
        }
        acc
    }

    /// All q elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.element(i).expect("index in range"))
    }

    pub fn is_zero(&self, x: &FieldElement) -> bool {
        x.coeffs.iter().all(|&c| c == 0)
    }

    /// True when all coefficients above the constant term vanish.
    pub fn in_prime_subfield(&self, x: &FieldElement) -> bool {
        x.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Some(c) when x is the constant polynomial c.
    pub fn residue_of(&self, x: &FieldElement) -> Option<u64> {
        self.in_prime_subfield(x).then_some(x.coeffs[0])
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let coeffs = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| (a + self.p - b) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        let coeffs = x.coeffs.iter().map(|&a| (self.p - a) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let e = self.e as usize;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % self.p;
            }
        }
        // Fold X^i for i >= e using X^e = -(modulus - X^e).
        for i in (e..2 * e - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..e {
                let m = self.modulus[j];
                if m != 0 {
                    prod[i - e + j] = (prod[i - e + j] + c * (self.p - m)) % self.p;
                }
            }
        }
        prod.truncate(e);
        FieldElement { coeffs: prod }
    }

    /// x^k by square and multiply; pow(x, 0) = 1 including at x = 0.
    pub fn pow(&self, x: &FieldElement, k: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement, Error> {
        if self.is_zero(x) {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(x, self.q - 2))
    }

    /// x^(p^k): k Frobenius applications, reduced mod e since Frobenius has
    /// order e.  Table-driven; the table itself is built with `pow`.
    pub fn frobenius_iter(&self, x: &FieldElement, k: u32) -> FieldElement {
        let steps = k % self.e;
        let mut idx = self.index_of(x);
        for _ in 0..steps {
            idx = self.frob_table[idx as usize];
        }
        self.element(idx).expect("index in range")
    }

    /// Absolute trace Tr(x) = sum of x^(p^i) for i in 0..e, as a residue mod p.
    pub fn trace(&self, x: &FieldElement) -> u64 {
        self.trace_table[self.index_of(x) as usize]
    }

    pub fn trace_of_index(&self, index: u64) -> u64 {
        self.trace_table[index as usize]
    }

    fn build_trace_table(&self) -> Vec<u64> {
        let e = self.e as usize;
        // Trace of each basis monomial, by summing Frobenius orbits.
        let mut basis_traces = vec![0u64; e];
        for (i, bt) in basis_traces.iter_mut().enumerate() {
            let mut coeffs = vec![0; e];
            coeffs[i] = 1;
            let monomial = FieldElement { coeffs };
            let mut sum = self.zero();
            let mut term = monomial;
            for _ in 0..e {
                sum = self.add(&sum, &term);
                term = self.pow(&term, self.p);
            }
            debug_assert!(
                sum.coeffs[1..].iter().all(|&c| c == 0),
                "trace of a basis monomial must be a constant"
            );
            *bt = sum.coeffs[0];
        }
        // Trace is F_p-linear, so extend by the digit expansion of the index.
        let mut table = vec![0u64; self.q as usize];
        for (idx, entry) in table.iter_mut().enumerate() {
            let mut k = idx as u64;
            let mut t = 0;
            for bt in &basis_traces {
                t = (t + (k % self.p) * bt) % self.p;
                k /= self.p;
            }
            *entry = t;
        }
        table
    }

    fn find_primitive_element(&self) -> FieldElement {
        let factors = prime_factors(self.q - 1);
        for idx in 1..self.q {
            let x = self.element(idx).expect("index in range");
            let full_order = factors
                .iter()
                .all(|&r| !self.is_zero(&self.sub(&self.pow(&x, (self.q - 1) / r), &self.one())));
            if full_order {
                debug_assert_eq!(self.pow(&x, self.q - 1), self.one());
                return x;
            }
        }
        unreachable!("every finite field has a primitive element")
    }
}

fn check_field_params(p: u64, e: u32) -> Result<(), Error> {
    if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if e == 0 || !e.is_multiple_of(2) {
        return Err(Error::OddExtensionDegree(e));
    }
    Ok(())
}

/// Lexicographically smallest monic irreducible of degree e over F_p, where
/// coefficient sequences are compared low degree first.  The scan counts
/// through candidates with the constant coefficient as the most significant
/// digit, which enumerates exactly that order.
fn smallest_irreducible(p: u64, e: u32) -> Vec<u64> {
    let total = checked_pow(p, e).expect("checked by caller");
    for k in 0..total {
        let mut coeffs = vec![0u64; e as usize + 1];
        let mut rem = k;
        for i in (0..e as usize).rev() {
            coeffs[i] = rem % p;
            rem /= p;
        }
        // The constant coefficient takes the most significant digit of k, so
        // the scan visits candidates in the required lexicographic order.
        coeffs[e as usize] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

// ---- plain polynomial arithmetic over F_p (dense, low degree first) ----

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of a by the monic polynomial f.
fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let d = f.len() - 1;
    while r.len() > d {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for (j, &fj) in f.iter().enumerate().take(d) {
                let idx = shift + j;
                r[idx] = (r[idx] + lead * (p - fj)) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, p), f, p)
}

fn poly_powmod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        // Scale y monic so poly_rem applies.
        let lead = *y.last().unwrap();
        let inv = crate::util::modpow(lead, p - 2, p);
        let monic: Vec<u64> = y.iter().map(|&c| c * inv % p).collect();
        let r = poly_rem(&x, &monic, p);
        x = y;
        y = r;
    }
    x
}

/// Rabin irreducibility test for a monic f of degree e over F_p:
/// X^(p^e) = X mod f, and gcd(f, X^(p^(e/r)) - X) is constant for every
/// prime r dividing e.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = (f.len() - 1) as u32;
    if e == 0 {
        return false;
    }
    let x = vec![0u64, 1];
    // h_k = X^(p^k) mod f, advanced one Frobenius step at a time so the
    // exponent never needs more than 64 bits.
    let frob_power = |k: u32| -> Vec<u64> {
        let mut h = x.clone();
        for _ in 0..k {
            h = poly_powmod(&h, p, f, p);
        }
        h
    };
    for r in prime_factors(e as u64) {
        let h = frob_power(e / r as u32);
        // gcd(f, h - X) must be constant.
        let mut diff = h;
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        let g = poly_gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    let h = frob_power(e);
    let mut diff = h;
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(&mut diff);
    diff.is_empty()
}
