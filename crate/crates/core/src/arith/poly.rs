use super::field::Field;

/// Univariate polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> UniPoly<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, coeffs: Vec<E>) -> Self {
        let mut p = Self { coeffs };
        p.trim(field);
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `x - r`
    pub fn linear<F: Field<Elem = E>>(field: &F, r: &E) -> Self {
        Self::new(field, vec![field.neg(r), field.one()])
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn trim<F: Field<Elem = E>>(&mut self, field: &F) {
        while self.coeffs.last().is_some_and(|c| field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, _field: &F) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, x: &E) -> E {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let li = field.inv(l).expect("nonzero leading coefficient");
                Self { coeffs: self.coeffs.iter().map(|c| field.mul(c, &li)).collect() }
            }
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = field.zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                field.add(a, b)
            })
            .collect();
        Self::new(field, coeffs)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let neg = Self { coeffs: other.coeffs.iter().map(|c| field.neg(c)).collect() };
        self.add(field, &neg)
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                field.add_mul_assign(&mut coeffs[i + j], a, b);
            }
        }
        Self::new(field, coeffs)
    }

    pub fn pow<F: Field<Elem = E>>(&self, field: &F, e: usize) -> Self {
        let mut acc = Self::new(field, vec![field.one()]);
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem<F: Field<Elem = E>>(&self, field: &F, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = field.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = field.mul(&rem[i + dd], &lead_inv);
            if !field.is_zero(&c) {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    field.sub_mul_assign(&mut rem[i + j], &c, d);
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(field, quot), Self::new(field, rem))
    }

    /// Quotient by `x - r` when `r` is a root, `None` otherwise.
    pub fn divide_linear<F: Field<Elem = E>>(&self, field: &F, r: &E) -> Option<Self> {
        if self.coeffs.len() < 2 {
            return None;
        }
        let n = self.coeffs.len();
        let mut quot = vec![field.zero(); n - 1];
        let mut carry = field.zero();
        for i in (1..n).rev() {
            carry = field.add(&self.coeffs[i], &field.mul(&carry, r));
            quot[i - 1] = carry.clone();
        }
        let rem = field.add(&self.coeffs[0], &field.mul(&carry, r));
        if field.is_zero(&rem) {
            Some(Self::new(field, quot))
        } else {
            None
        }
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn ext_gcd<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> (Self, Self, Self) {
        let one = Self::new(field, vec![field.one()]);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.coeffs.is_empty() {
            let (q, r) = r0.div_rem(field, &r1);
            let s2 = s0.sub(field, &q.mul(field, &s1));
            let t2 = t0.sub(field, &q.mul(field, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = field.inv(&l).unwrap();
                let c = Self::new(field, vec![li]);
                (r0.mul(field, &c), s0.mul(field, &c), t0.mul(field, &c))
            }
        }
    }

    pub fn format<F: Field<Elem = E>>(&self, field: &F) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            let coeff = field.format(c);
            terms.push(match (mono.is_empty(), coeff.as_str()) {
                (true, _) => coeff,
                (false, "1") => mono,
                (false, _) => format!("{coeff}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}

/// Splits a polynomial into pairwise coprime pieces: one `(x - r)^k` per root
/// `r` of multiplicity `k`, plus the root-free cofactor when it is not constant.
pub fn coprime_pieces<F: Field>(field: &F, f: &UniPoly<F::Elem>) -> CoprimePieces<F::Elem> {
    let roots = field.roots(f);
    let mut pieces = Vec::new();
    let mut cofactor = f.monic(field);
    for (r, k) in &roots {
        let piece = UniPoly::linear(field, r).pow(field, *k);
        let (q, rem) = cofactor.div_rem(field, &piece);
        debug_assert!(rem.is_zero(field));
        cofactor = q;
        pieces.push(piece);
    }
    let has_cofactor = cofactor.degree().unwrap_or(0) > 0;
    if has_cofactor {
        pieces.push(cofactor);
    }
    CoprimePieces { roots, pieces, has_cofactor }
}

pub struct CoprimePieces<E> {
    pub roots: Vec<(E, usize)>,
    pub pieces: Vec<UniPoly<E>>,
    /// Whether the last piece is a factor without roots in the field.
    pub has_cofactor: bool,
}

/// Polynomials `E_i` with `E_i = 1 mod pieces[i]` and `E_i = 0 mod pieces[j]`,
/// reduced modulo the product of all pieces.
pub fn crt_idempotents<F: Field>(field: &F, pieces: &[UniPoly<F::Elem>]) -> Vec<UniPoly<F::Elem>> {
    let one = UniPoly::new(field, vec![field.one()]);
    let total = pieces.iter().fold(one, |acc, p| acc.mul(field, p));
    pieces
        .iter()
        .map(|piece| {
            let (others, _) = total.div_rem(field, piece);
            let (g, s, _) = others.ext_gcd(field, piece);
            debug_assert_eq!(g.degree(), Some(0));
            s.mul(field, &others).div_rem(field, &total).1
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    #[test]
    fn division_and_gcd() {
        let f = PrimeField::new(7).unwrap();
        // (x - 1)(x - 2) = x^2 - 3x + 2
        let a = UniPoly::new(&f, vec![2, 4, 1]);
        let b = UniPoly::linear(&f, &1);
        let (q, r) = a.div_rem(&f, &b);
        assert!(r.is_zero(&f));
        assert_eq!(q, UniPoly::linear(&f, &2));
        let (g, s, t) = a.ext_gcd(&f, &UniPoly::linear(&f, &3));
        assert_eq!(g.degree(), Some(0));
        let lhs = s.mul(&f, &a).add(&f, &t.mul(&f, &UniPoly::linear(&f, &3)));
        assert_eq!(lhs, g);
    }

    #[test]
    fn crt_idempotents_partition_unity() {
        let f = PrimeField::new(5).unwrap();
        let pieces = vec![
            UniPoly::linear(&f, &1).pow(&f, 2),
            UniPoly::linear(&f, &3),
            UniPoly::new(&f, vec![2, 0, 1]), // x^2 + 2, irreducible mod 5
        ];
        let es = crt_idempotents(&f, &pieces);
        for (i, e) in es.iter().enumerate() {
            for (j, p) in pieces.iter().enumerate() {
                let (_, r) = e.div_rem(&f, p);
                let expect = if i == j { UniPoly::new(&f, vec![1]) } else { UniPoly::zero() };
                assert_eq!(r, expect);
            }
        }
    }

    #[test]
    fn coprime_split_reports_cofactor() {
        let f = PrimeField::new(3).unwrap();
        // (x - 1)(x^2 + 1)
        let poly = UniPoly::linear(&f, &1).mul(&f, &UniPoly::new(&f, vec![1, 0, 1]));
        let split = coprime_pieces(&f, &poly);
        assert_eq!(split.roots, vec![(1, 1)]);
        assert!(split.has_cofactor);
        assert_eq!(split.pieces.len(), 2);
    }
}
