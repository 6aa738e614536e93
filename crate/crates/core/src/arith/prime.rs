use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::field::{is_prime, Field, FieldSpec};
use super::poly::UniPoly;
use crate::error::{Error, Result};

/// The prime field F_p with `2 <= p < 2^31`, elements stored as canonical
/// representatives in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::Input(format!("field modulus {p} is not a prime below 2^31")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Every element of the field in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    #[inline]
    fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    #[inline]
    fn zero(&self) -> u32 {
        0
    }

    #[inline]
    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let egcd = (*a as i64).extended_gcd(&(self.p as i64));
        Some(self.reduce_i64(egcd.x))
    }

    fn from_i64(&self, v: i64) -> u32 {
        self.reduce_i64(v)
    }

    fn from_bigint(&self, v: &BigInt) -> u32 {
        let m = BigInt::from(self.p);
        v.mod_floor(&m).to_u32().expect("residue fits in u32")
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    /// Accepts any integer (reduced mod p) or a quotient `a/b` with `b` invertible.
    fn parse(&self, s: &str) -> Result<u32> {
        let bad = || Error::Parse(format!("`{s}` is not an element of F_{}", self.p));
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<BigInt>().map(|v| self.from_bigint(&v)).map_err(|_| bad()),
            Some((n, d)) => {
                let n = self.from_bigint(&n.trim().parse::<BigInt>().map_err(|_| bad())?);
                let d = self.from_bigint(&d.trim().parse::<BigInt>().map_err(|_| bad())?);
                self.div(&n, &d).ok_or_else(bad)
            }
        }
    }

    fn lift(&self, a: &u32) -> Option<u64> {
        Some(*a as u64)
    }

    /// Exhaustive evaluation over all residues, then multiplicity by repeated
    /// synthetic division.
    fn roots(&self, f: &UniPoly<u32>) -> Vec<(u32, usize)> {
        let mut poly = f.clone();
        poly.trim(self);
        let mut out = Vec::new();
        if poly.is_zero(self) {
            return out;
        }
        for r in self.elements() {
            if poly.degree().unwrap_or(0) == 0 {
                break;
            }
            let mut mult = 0;
            while let Some(next) = poly.divide_linear(self, &r) {
                poly = next;
                mult += 1;
            }
            if mult > 0 {
                out.push((r, mult));
            }
        }
        out
    }

    #[inline]
    fn add_assign(&self, a: &mut u32, b: &u32) {
        *a = self.add(a, b);
    }

    #[inline]
    fn add_mul_assign(&self, a: &mut u32, b: &u32, c: &u32) {
        *a = ((*a as u64 + *b as u64 * *c as u64) % self.p as u64) as u32;
    }

    #[inline]
    fn sub_mul_assign(&self, a: &mut u32, b: &u32, c: &u32) {
        let prod = (*b as u64 * *c as u64) % self.p as u64;
        *a = ((*a as u64 + self.p as u64 - prod) % self.p as u64) as u32;
    }
}
