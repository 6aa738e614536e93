use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, FieldSpec};
use super::poly::UniPoly;
use crate::error::{Error, Result};

/// The field of rational numbers with arbitrary-precision numerator and denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse(&self, s: &str) -> Result<BigRational> {
        let bad = || Error::Parse(format!("`{s}` is not a rational scalar"));
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("`{s}` has a zero denominator")));
                }
                Ok(BigRational::new(n, d))
            }
        }
    }

    fn lift(&self, _a: &BigRational) -> Option<u64> {
        None
    }

    fn roots(&self, f: &UniPoly<BigRational>) -> Vec<(BigRational, usize)> {
        rational_roots(f)
    }

    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }
}

/// Rational roots via the primitive integer form: candidates are `±u/v` with
/// `u | a_0` and `v | a_d`, each confirmed by exact evaluation.
fn rational_roots(f: &UniPoly<BigRational>) -> Vec<(BigRational, usize)> {
    let q = Rationals;
    let mut poly = f.clone();
    poly.trim(&q);
    let mut out = Vec::new();
    if poly.is_zero(&q) {
        return out;
    }
    // factor out powers of x first so that a_0 != 0
    let mut zero_mult = 0;
    while poly.degree().unwrap_or(0) > 0 && q.is_zero(&poly.coeffs()[0]) {
        poly = UniPoly::new(&q, poly.coeffs()[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((BigRational::zero(), zero_mult));
    }
    if poly.degree().unwrap_or(0) > 0 {
        let ints = primitive_integer_form(poly.coeffs());
        let lead = ints.last().unwrap().abs();
        let constant = ints[0].abs();
        let mut candidates = Vec::new();
        for u in divisors(&constant) {
            for v in divisors(&lead) {
                let r = BigRational::new(u.clone(), v.clone());
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for r in candidates {
            let mut mult = 0;
            while let Some(next) = poly.divide_linear(&q, &r) {
                poly = next;
                mult += 1;
            }
            if mult > 0 {
                out.push((r, mult));
            }
        }
    }
    out.sort();
    out
}

fn primitive_integer_form(coeffs: &[BigRational]) -> Vec<BigInt> {
    let denom_lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        coeffs.iter().map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &content).collect()
    }
}

/// Positive divisors by trial division up to the square root.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    debug_assert!(n.sign() == Sign::Plus);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
