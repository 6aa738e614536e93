use crate::algebra::Algebra;
use crate::arith::{EchelonBuilder, Field, Matrix, Subspace};
use crate::error::{Error, Result};

/// The Jacobson radical `J`, its powers and the semisimple quotient `A/J`.
#[derive(Clone, Debug)]
pub struct RadicalData<F: Field> {
    pub radical: Subspace<F::Elem>,
    /// `powers[k] = J^(k+1)`, ending with the last nonzero power.
    pub powers: Vec<Subspace<F::Elem>>,
    /// Least `m` with `J^m = 0` (1 when `J = 0`).
    pub nilpotency_index: usize,
    pub quotient: Algebra<F>,
    /// `dim B × dim A` matrix of the projection `A → B`.
    pub projection: Matrix<F::Elem>,
}

impl<F: Field> RadicalData<F> {
    pub fn dim(&self) -> usize {
        self.radical.dim()
    }

    /// Image of `a` in the quotient.
    pub fn project(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        self.projection.mul_vec(self.quotient.field(), a)
    }

    /// A preimage of a quotient element (the one supported on non-pivot coordinates).
    pub fn section(&self, b: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.quotient.field();
        let mut out = vec![f.zero(); self.radical.ambient()];
        for (c, v) in complement(&self.radical).into_iter().zip(b) {
            out[c] = v.clone();
        }
        out
    }
}

fn complement<E: Clone + PartialEq>(ideal: &Subspace<E>) -> Vec<usize> {
    (0..ideal.ambient()).filter(|c| !ideal.pivots().contains(c)).collect()
}

/// Radical with its certificate: `J` is a two-sided ideal, nilpotent, and
/// the quotient `A/J` has zero radical.
pub fn radical<F: Field>(alg: &Algebra<F>) -> Result<RadicalData<F>> {
    let j = radical_subspace(alg)?;
    if !alg.is_two_sided_ideal(&j) {
        return Err(Error::Internal("computed radical is not a two-sided ideal".into()));
    }
    let powers = ideal_powers(alg, &j)?;
    let nilpotency_index = powers.len() + 1;
    let (quotient, projection) = quotient_algebra(alg, &j)?;
    if !j.is_zero() && !radical_subspace(&quotient)?.is_zero() {
        return Err(Error::Internal("quotient by the computed radical is not semisimple".into()));
    }
    Ok(RadicalData { radical: j, powers, nilpotency_index, quotient, projection })
}

/// `[J, J^2, ...]` up to the last nonzero power; errors if `J` is not nilpotent.
pub fn ideal_powers<F: Field>(alg: &Algebra<F>, j: &Subspace<F::Elem>) -> Result<Vec<Subspace<F::Elem>>> {
    let f = alg.field();
    let mut powers = Vec::new();
    if j.is_zero() {
        return Ok(powers);
    }
    let gens = j.vectors();
    let mut current = j.clone();
    loop {
        if powers.len() > alg.dim() {
            return Err(Error::Internal("computed radical is not nilpotent".into()));
        }
        powers.push(current.clone());
        let mut b = EchelonBuilder::new(f, alg.dim());
        'outer: for v in current.vectors() {
            for g in &gens {
                b.insert(&alg.mul(&v, g));
                if b.is_full() {
                    break 'outer;
                }
            }
        }
        let next = b.finish();
        if next.is_zero() {
            return Ok(powers);
        }
        if next == current {
            return Err(Error::Internal("computed radical is not nilpotent".into()));
        }
        current = next;
    }
}

/// The radical without the certificate. Characteristic zero uses the trace
/// form; characteristic `p` the chain of `p`-power trace functionals.
pub fn radical_subspace<F: Field>(alg: &Algebra<F>) -> Result<Subspace<F::Elem>> {
    let f = alg.field();
    let n = alg.dim();
    let traces = alg.left_traces();
    // x ↦ (Tr L_{x e_j})_j
    let dickson = Subspace::full(f, n).kernel_within(f, |x| {
        (0..n)
            .map(|j| {
                let xe = alg.mul_basis_right(x, j);
                let mut t = f.zero();
                for (c, tr) in xe.iter().zip(&traces) {
                    if !f.is_zero(c) {
                        f.add_mul_assign(&mut t, c, tr);
                    }
                }
                t
            })
            .collect()
    });
    let p = f.characteristic() as u64;
    if p == 0 {
        return Ok(dickson);
    }
    let mut l = 0;
    let mut pow = p;
    while pow <= n as u64 {
        l += 1;
        pow = pow.saturating_mul(p);
    }
    let mut current = dickson;
    for i in 1..=l {
        if current.is_zero() {
            break;
        }
        let basis = current.vectors();
        let mut phi = Vec::with_capacity(basis.len());
        for v in &basis {
            phi.push(f.from_i64(p_power_trace(alg, v, p, i)? as i64));
        }
        let prev = current.clone();
        current = prev.kernel_within(f, |x| {
            (0..n)
                .map(|j| {
                    let coords = prev.coordinates_unchecked(&alg.mul_basis_right(x, j));
                    let mut t = f.zero();
                    for (c, v) in coords.iter().zip(&phi) {
                        if !f.is_zero(c) {
                            f.add_mul_assign(&mut t, c, v);
                        }
                    }
                    t
                })
                .collect()
        });
    }
    Ok(current)
}

/// `(Tr(L̃_a^(p^i)) mod p^(i+1)) / p^i` with `L̃_a` the integer lift of `L_a`.
fn p_power_trace<F: Field>(alg: &Algebra<F>, a: &[F::Elem], p: u64, i: u32) -> Result<u64> {
    let f = alg.field();
    let n = alg.dim();
    let modulus = p.pow(i + 1);
    let lm = alg.left_matrix(a);
    let lift: Vec<u64> = lm.data().iter().map(|v| f.lift(v).expect("prime field")).collect();
    let m = IntMat { n, modulus, data: lift };
    let t = m.pow(p.pow(i)).trace();
    let pi = p.pow(i);
    if !t.is_multiple_of(pi) {
        return Err(Error::Internal(format!("trace of p^{i}-th power is not divisible by p^{i}")));
    }
    Ok((t / pi) % p)
}

/// Square matrix over `Z/modulus`, entries in `[0, modulus)`.
struct IntMat {
    n: usize,
    modulus: u64,
    data: Vec<u64>,
}

impl IntMat {
    fn identity(n: usize, modulus: u64) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % modulus;
        }
        Self { n, modulus, data }
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let m = self.modulus;
        let delayed = (m as u128 - 1).pow(2) * (n as u128) < (1u128 << 64);
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            let mut acc = vec![0u128; n];
            let mut acc64 = vec![0u64; n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                if delayed {
                    for (o, &b) in acc64.iter_mut().zip(row) {
                        *o += a * b;
                    }
                } else {
                    for (o, &b) in acc.iter_mut().zip(row) {
                        *o = (*o + a as u128 * b as u128) % m as u128;
                    }
                }
            }
            for j in 0..n {
                data[i * n + j] = if delayed { acc64[j] % m } else { acc[j] as u64 };
            }
        }
        Self { n, modulus: m, data }
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = Self { n: self.n, modulus: self.modulus, data: self.data.clone() };
        let mut acc = Self::identity(self.n, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn trace(&self) -> u64 {
        (0..self.n).fold(0, |t, i| (t + self.data[i * self.n + i]) % self.modulus)
    }
}

/// `A/I` on the coordinates that are not pivots of the RREF basis of `I`,
/// with the projection matrix.
pub fn quotient_algebra<F: Field>(
    alg: &Algebra<F>,
    ideal: &Subspace<F::Elem>,
) -> Result<(Algebra<F>, Matrix<F::Elem>)> {
    if ideal.ambient() != alg.dim() {
        return Err(Error::Input("ideal lives in a space of the wrong dimension".into()));
    }
    if !alg.is_two_sided_ideal(ideal) {
        return Err(Error::Input("subspace is not a two-sided ideal".into()));
    }
    if ideal.is_full() {
        return Err(Error::Input("quotient by the whole algebra is the zero ring".into()));
    }
    let f = alg.field();
    let comp = complement(ideal);
    let project = |v: &[F::Elem]| -> Vec<F::Elem> {
        let r = ideal.reduce(f, v);
        comp.iter().map(|&c| r[c].clone()).collect()
    };
    let labels = comp.iter().map(|&c| format!("[{}]", alg.labels()[c])).collect();
    let unit = project(alg.unit());
    let q = Algebra::from_fn(f.clone(), labels, unit, |i, j| {
        let prod: Vec<(usize, F::Elem)> = alg.product(comp[i], comp[j]).to_vec();
        let mut v = alg.zero();
        for (k, c) in prod {
            v[k] = c;
        }
        project(&v).into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
    })?;
    let columns: Vec<Vec<F::Elem>> = (0..alg.dim()).map(|i| project(&alg.basis_vector(i))).collect();
    let projection = Matrix::from_columns(f, comp.len(), &columns);
    Ok((q, projection))
}

/// Newton iteration `e ← 3e² − 2e³` from the canonical preimage of `ebar`.
pub fn lift_idempotent<F: Field>(alg: &Algebra<F>, ebar: &[F::Elem], rad: &RadicalData<F>) -> Result<Vec<F::Elem>> {
    if ebar.len() != rad.quotient.dim() {
        return Err(Error::Input("element does not belong to the quotient".into()));
    }
    if !rad.quotient.is_idempotent(ebar) {
        return Err(Error::Input("element is not idempotent modulo the radical".into()));
    }
    newton_idempotent(alg, rad.section(ebar), rad.nilpotency_index)
}

/// Iterates `e ← 3e² − 2e³` from an element that is idempotent modulo a nilpotent ideal.
pub fn newton_idempotent<F: Field>(alg: &Algebra<F>, mut e: Vec<F::Elem>, index: usize) -> Result<Vec<F::Elem>> {
    let f = alg.field();
    let (three, two) = (f.from_i64(3), f.from_i64(2));
    let steps = usize::BITS - index.leading_zeros() + 2;
    for _ in 0..=steps {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = alg.mul(&e2, &e);
        e = alg.sub(&alg.scale(&three, &e2), &alg.scale(&two, &e3));
    }
    Err(Error::Internal("idempotent lifting did not converge".into()))
}

/// Lifts a complete set of orthogonal idempotents of `A/J` to one of `A`.
pub fn lift_orthogonal<F: Field>(
    alg: &Algebra<F>,
    rad: &RadicalData<F>,
    ebars: &[Vec<F::Elem>],
) -> Result<Vec<Vec<F::Elem>>> {
    let f = alg.field();
    let mut out: Vec<Vec<F::Elem>> = Vec::with_capacity(ebars.len());
    let mut corner = alg.unit().to_vec();
    for (k, eb) in ebars.iter().enumerate() {
        if k + 1 == ebars.len() {
            out.push(corner.clone());
            break;
        }
        let a = rad.section(eb);
        let start = alg.mul(&alg.mul(&corner, &a), &corner);
        let e = newton_idempotent(alg, start, rad.nilpotency_index)?;
        corner = alg.sub(&corner, &e);
        out.push(e);
    }
    for (e, eb) in out.iter().zip(ebars) {
        if rad.project(e) != *eb || !alg.is_idempotent(e) {
            return Err(Error::Internal("lifted idempotents do not reduce correctly".into()));
        }
    }
    let _ = f;
    Ok(out)
}
