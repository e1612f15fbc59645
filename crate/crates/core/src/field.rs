//! Arithmetic in GF(p^f) with a deterministic modulus choice.
//!
//! The modulus is the first irreducible monic polynomial of degree f in
//! ascending base-p integer order (constant coefficient least significant),
//! so GF(8) gets x^3+x+1 and GF(9) gets x^2+1. Elements are enumerated by
//! the base-p value of their coefficient vector; that ordering fixes the
//! projective-line labels used by the PSL2 constructors.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub f: u32,
    /// Monic modulus of degree f; coefficients of x^0..x^(f-1), low first.
    pub modulus: Vec<u64>,
}

/// An element as f residues mod p, low-degree coefficient first.
pub type FieldElement = Vec<u64>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn size(&self) -> u64 {
        self.p.pow(self.f)
    }

    pub fn zero(&self) -> FieldElement {
        vec![0; self.f as usize]
    }

    pub fn one(&self) -> FieldElement {
        let mut e = self.zero();
        e[0] = 1;
        e
    }

    /// Element with enumeration index i (base-p digits of i).
    pub fn element(&self, mut i: u64) -> FieldElement {
        let mut e = self.zero();
        for c in e.iter_mut() {
            *c = i % self.p;
            i /= self.p;
        }
        debug_assert_eq!(i, 0);
        e
    }

    /// Enumeration index of an element.
    pub fn index(&self, e: &FieldElement) -> u64 {
        let mut i = 0u64;
        for &c in e.iter().rev() {
            i = i * self.p + c;
        }
        i
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.iter()
            .zip(b.iter())
            .map(|(&x, &y)| (x + y) % self.p)
            .collect()
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        a.iter().map(|&x| (self.p - x) % self.p).collect()
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let f = self.f as usize;
        let mut prod = vec![0u64; 2 * f - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce mod modulus: x^f = -modulus[0..f]
        for i in (f..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate() {
                let idx = i - f + j;
                prod[idx] = (prod[idx] + c * ((self.p - m) % self.p)) % self.p;
            }
        }
        prod.truncate(f);
        prod
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::rejected("inversion of zero".to_string()));
        }
        Ok(self.pow(a, self.size() - 2))
    }

    /// Frobenius x -> x^p.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.p)
    }

    /// Multiplicative order (size-1 factorization by trial division).
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u64> {
        if self.is_zero(a) {
            return Err(Error::rejected(
                "zero has no multiplicative order".to_string(),
            ));
        }
        let q1 = self.size() - 1;
        let mut ord = q1;
        let mut rem = q1;
        let mut d = 2u64;
        let mut primes = Vec::new();
        while d * d <= rem {
            if rem.is_multiple_of(d) {
                primes.push(d);
                while rem.is_multiple_of(d) {
                    rem /= d;
                }
            }
            d += 1;
        }
        if rem > 1 {
            primes.push(rem);
        }
        for pr in primes {
            while ord.is_multiple_of(pr) && self.pow(a, ord / pr) == self.one() {
                ord /= pr;
            }
        }
        Ok(ord)
    }

    /// First element in enumeration order with multiplicative order q-1.
    pub fn primitive_element(&self) -> FieldElement {
        for i in 1..self.size() {
            let e = self.element(i);
            if self.multiplicative_order(&e).unwrap() == self.size() - 1 {
                return e;
            }
        }
        unreachable!("every finite field has a primitive element")
    }
}

/// Polynomial division check: does `divisor` divide `poly`? Both monic-ish
/// coefficient vectors over GF(p), low-degree first, no trailing zeros
/// except for constants.
fn divides(p: u64, poly: &[u64], divisor: &[u64]) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let dd = divisor.len() - 1; // divisor degree (monic)
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for (j, &m) in divisor.iter().enumerate() {
                let idx = shift + j;
                rem[idx] = (rem[idx] + (p - (lead * m) % p) % p) % p;
            }
        }
        rem.pop();
        while rem.len() > dd && *rem.last().unwrap() == 0 {
            if rem.len() == 1 {
                break;
            }
            rem.pop();
        }
    }
    rem.iter().all(|&c| c == 0)
}

/// Irreducibility by divisor scan over monic polynomials of degree <= f/2.
fn is_irreducible(p: u64, coeffs: &[u64]) -> bool {
    let f = coeffs.len() - 1;
    if f == 1 {
        return true;
    }
    for deg in 1..=(f / 2) {
        // monic candidates of this degree, ascending base-p value
        let count = p.pow(deg as u32);
        for v in 0..count {
            let mut cand = Vec::with_capacity(deg + 1);
            let mut x = v;
            for _ in 0..deg {
                cand.push(x % p);
                x /= p;
            }
            cand.push(1);
            if divides(p, coeffs, &cand) {
                return false;
            }
        }
    }
    true
}

/// Builds GF(p^f) with the first irreducible modulus in ascending base-p
/// integer order.
pub fn field_make(p: u64, f: u32) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::rejected(format!("{} is not prime", p)));
    }
    if f == 0 {
        return Err(Error::rejected(
            "extension degree must be positive".to_string(),
        ));
    }
    let size = (p as u128).checked_pow(f).filter(|&s| s <= 1u128 << 32);
    if size.is_none() {
        return Err(Error::rejected(format!("p^f = {}^{} exceeds 2^32", p, f)));
    }
    if f == 1 {
        return Ok(FieldSpec {
            p,
            f,
            modulus: vec![0, 1], // x
        });
    }
    let count = p.pow(f);
    for v in 0..count {
        let mut coeffs = Vec::with_capacity(f as usize + 1);
        let mut x = v;
        for _ in 0..f {
            coeffs.push(x % p);
            x /= p;
        }
        coeffs.push(1);
        if is_irreducible(p, &coeffs) {
            let modulus = coeffs[..f as usize].to_vec();
            return Ok(FieldSpec { p, f, modulus });
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Projective line labels: point i < q is the element with enumeration
/// index i, point q is the point at infinity.
pub fn projective_line_size(spec: &FieldSpec) -> u32 {
    spec.size() as u32 + 1
}

pub fn is_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            let mut f = 0;
            let mut x = q;
            while x.is_multiple_of(d) {
                x /= d;
                f += 1;
            }
            return if x == 1 { Some((d, f)) } else { None };
        }
        d += 1;
    }
    Some((q, 1))
}
