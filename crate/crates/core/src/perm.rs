//! Permutations of {0, .., n-1} stored as image vectors.
//!
//! The product convention throughout the crate is left-to-right action:
//! `(p * q)(x) = q(p(x))`, i.e. apply `p` first.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    /// Builds a permutation from its image vector, verifying bijectivity.
    pub fn from_images(img: Vec<u32>) -> Result<Perm> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &v in &img {
            if (v as usize) >= n || seen[v as usize] {
                return Err(Error::rejected(format!(
                    "image vector of length {} is not a bijection",
                    n
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Perm { img })
    }

    pub fn identity(degree: u32) -> Perm {
        Perm {
            img: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.img.len() as u32
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.img[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        let img = self.img.iter().map(|&v| other.img[v as usize]).collect();
        Perm { img }
    }

    /// Checked composition for public arithmetic (degree mismatch is rejected).
    pub fn compose_checked(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::rejected(format!(
                "degree mismatch: {} vs {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize] = i as u32;
        }
        Perm { img }
    }

    /// g^-1 * self * g.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for x in 0..self.img.len() {
            // (g^-1 s g)(g(x)) = g(s(x))
            img[g.img[x] as usize] = g.img[self.img[x] as usize];
        }
        Perm { img }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        debug_assert_eq!(self.degree(), other.degree());
        (0..self.img.len())
            .all(|x| other.img[self.img[x] as usize] == self.img[other.img[x] as usize])
    }

    /// Commutator self^-1 other^-1 self other.
    pub fn commutator(&self, other: &Perm) -> Perm {
        let si = self.inverse();
        let oi = other.inverse();
        si.compose(&oi).compose(self).compose(other)
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> Result<u128> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut ord: u128 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.img[x] as usize;
                len += 1;
            }
            let g = gcd_u128(ord, len);
            ord = (ord / g)
                .checked_mul(len)
                .ok_or_else(|| Error::resource("element order exceeds u128".to_string()))?;
        }
        Ok(ord)
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.img
            .iter()
            .enumerate()
            .find(|(i, &v)| *i as u32 != v)
            .map(|(i, _)| i as u32)
    }

    /// Disjoint cycle notation, fixed points omitted.
    pub fn cycle_string(&self) -> String {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.img[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&x.to_string());
                first = false;
                x = self.img[x] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

pub(crate) fn gcd_u128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Convenience constructor from cycles, used heavily in tests and the atlas.
pub fn perm_from_cycles(degree: u32, cycles: &[&[u32]]) -> Perm {
    let mut img: Vec<u32> = (0..degree).collect();
    for cyc in cycles {
        for w in 0..cyc.len() {
            let from = cyc[w];
            let to = cyc[(w + 1) % cyc.len()];
            img[from as usize] = to;
        }
    }
    Perm::from_images(img).expect("cycles must be disjoint and in range")
}
