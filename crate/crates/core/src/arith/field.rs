use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::UniPoly;
use crate::error::{Error, Result};

/// Ground field descriptor as it appears in algebra files and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Checks that a prime modulus really is prime and below 2^31.
    pub fn validate(self) -> Result<Self> {
        if let FieldSpec::Prime(p) = self {
            if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
                return Err(Error::Input(format!("field modulus {p} is not a prime below 2^31")));
            }
        }
        Ok(self)
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `F5`, `Fp5` or a bare prime `5`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("Fp")
            .or_else(|| t.strip_prefix("fp"))
            .or_else(|| t.strip_prefix('F'))
            .or_else(|| t.strip_prefix('f'))
            .unwrap_or(t);
        let p: u32 =
            digits.parse().map_err(|_| Error::Input(format!("unrecognised field `{s}` (expected Q or F<p>)")))?;
        FieldSpec::Prime(p).validate()
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field. Elements are plain values; every operation goes through the
/// field object so that runtime moduli need not be stored in each element.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn characteristic(&self) -> u32 {
        self.spec().characteristic()
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;

    /// Canonical text: `a` or `a/b` over Q, `0`..`p-1` over F_p.
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    /// Canonical integer representative, for prime fields only.
    fn lift(&self, a: &Self::Elem) -> Option<u64>;

    /// All roots of `f` in the field with multiplicities, ascending.
    fn roots(&self, f: &UniPoly<Self::Elem>) -> Vec<(Self::Elem, usize)>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// `a += b * c`
    fn add_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *a = self.add(a, &self.mul(b, c));
    }

    /// `a -= b * c`
    fn sub_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *a = self.sub(a, &self.mul(b, c));
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
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
}
