//! Finite-dimensional associative algebras given by structure constants, and
//! their left modules given by action matrices.

mod module;

use std::collections::HashSet;

pub use module::{hom_space, idempotent_multiplicity, ModulePresentation};

use crate::arith::{krylov_minimal_polynomial, Field, Matrix, Subspace, UniPoly};
use crate::error::{Error, Result, Violation};

/// Sparse product `e_i e_j = Σ_k c_{ij}^k e_k`, entries sorted by `k`, no zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// An algebra with basis `e_0..e_{n-1}`.
///
/// Elements are plain coefficient vectors of length `dim()`. The product table
/// is indexed densely by the pair `(i, j)` and sparsely by the output index.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F: Field> {
    field: F,
    labels: Vec<String>,
    unit: Vec<F::Elem>,
    table: Vec<SparseVec<F::Elem>>,
}

/// Left or right regular representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl<F: Field> Algebra<F> {
    /// Builds an algebra from labelled basis, unit vector and the nonzero
    /// basis products `(i, j, [(k, c)])`. Unlisted pairs multiply to zero.
    /// Structural problems (indices, lengths, duplicate labels) are errors here;
    /// the algebra axioms are checked separately by [`Algebra::validate`].
    pub fn new(
        field: F,
        labels: Vec<String>,
        unit: Vec<F::Elem>,
        products: impl IntoIterator<Item = (usize, usize, SparseVec<F::Elem>)>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Input("an algebra needs at least one basis element".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Input(format!("duplicate basis label `{l}`")));
            }
        }
        if unit.len() != n {
            return Err(Error::Input(format!("unit has length {}, expected {n}", unit.len())));
        }
        let mut table = vec![Vec::new(); n * n];
        let mut filled = vec![false; n * n];
        for (i, j, terms) in products {
            if i >= n || j >= n {
                return Err(Error::Input(format!("product index ({i}, {j}) out of range for dimension {n}")));
            }
            if filled[i * n + j] {
                return Err(Error::Input(format!("product ({i}, {j}) listed twice")));
            }
            filled[i * n + j] = true;
            let mut dense: Vec<(usize, F::Elem)> = Vec::with_capacity(terms.len());
            for (k, c) in terms {
                if k >= n {
                    return Err(Error::Input(format!("output index {k} in product ({i}, {j}) out of range")));
                }
                dense.push((k, c));
            }
            table[i * n + j] = normalize_sparse(&field, dense);
        }
        Ok(Self { field, labels, unit, table })
    }

    /// Builds an algebra from a function computing basis products.
    pub fn from_fn(
        field: F,
        labels: Vec<String>,
        unit: Vec<F::Elem>,
        mut product: impl FnMut(usize, usize) -> SparseVec<F::Elem>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push((i, j, product(i, j)));
            }
        }
        Self::new(field, labels, unit, entries)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    /// `e_i e_j` as a sparse vector.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.dim() + j]
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn is_zero(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    /// Product of two elements, checking that both belong to this algebra.
    pub fn multiply(&self, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if a.len() != self.dim() || b.len() != self.dim() {
            return Err(Error::Input(format!(
                "element lengths {} and {} do not match algebra dimension {}",
                a.len(),
                b.len(),
                self.dim()
            )));
        }
        Ok(self.mul(a, b))
    }

    /// Bilinear extension of the structure constants.
    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        debug_assert_eq!(a.len(), n);
        debug_assert_eq!(b.len(), n);
        let mut out = self.zero();
        let nz_b: Vec<usize> = (0..n).filter(|&j| !f.is_zero(&b[j])).collect();
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for &j in &nz_b {
                let ab = f.mul(ai, &b[j]);
                for (k, c) in &self.table[i * n + j] {
                    f.add_mul_assign(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// `e_i · v`
    pub fn mul_basis_left(&self, i: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut out = self.zero();
        for (j, vj) in v.iter().enumerate() {
            if f.is_zero(vj) {
                continue;
            }
            for (k, c) in &self.table[i * n + j] {
                f.add_mul_assign(&mut out[*k], vj, c);
            }
        }
        out
    }

    /// `v · e_j`
    pub fn mul_basis_right(&self, v: &[F::Elem], j: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut out = self.zero();
        for (i, vi) in v.iter().enumerate() {
            if f.is_zero(vi) {
                continue;
            }
            for (k, c) in &self.table[i * n + j] {
                f.add_mul_assign(&mut out[*k], vi, c);
            }
        }
        out
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.mul(c, x)).collect()
    }

    /// `Σ coeffs[i] · e_i`-style combination of arbitrary elements.
    pub fn combination(&self, terms: &[(F::Elem, Vec<F::Elem>)]) -> Vec<F::Elem> {
        let mut out = self.zero();
        for (c, v) in terms {
            for (o, x) in out.iter_mut().zip(v) {
                self.field.add_mul_assign(o, c, x);
            }
        }
        out
    }

    pub fn commutator(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn is_idempotent(&self, e: &[F::Elem]) -> bool {
        self.mul(e, e) == e
    }

    /// Matrix of `v ↦ a·v` (column `j` holds `a·e_j`).
    pub fn left_matrix(&self, a: &[F::Elem]) -> Matrix<F::Elem> {
        let columns: Vec<Vec<F::Elem>> = (0..self.dim()).map(|j| self.mul_basis_right(a, j)).collect();
        Matrix::from_columns(&self.field, self.dim(), &columns)
    }

    /// Matrix of `v ↦ v·a`.
    pub fn right_matrix(&self, a: &[F::Elem]) -> Matrix<F::Elem> {
        let columns: Vec<Vec<F::Elem>> = (0..self.dim()).map(|i| self.mul_basis_left(i, a)).collect();
        Matrix::from_columns(&self.field, self.dim(), &columns)
    }

    /// Multiplication matrices of every basis element on one side.
    pub fn regular_representation(&self, side: Side) -> Vec<Matrix<F::Elem>> {
        (0..self.dim())
            .map(|i| {
                let e = self.basis_vector(i);
                match side {
                    Side::Left => self.left_matrix(&e),
                    Side::Right => self.right_matrix(&e),
                }
            })
            .collect()
    }

    /// Trace of left multiplication by each basis element.
    pub fn left_traces(&self) -> Vec<F::Elem> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut t = self.field.zero();
                for j in 0..n {
                    for (k, c) in &self.table[i * n + j] {
                        if *k == j {
                            self.field.add_assign(&mut t, c);
                        }
                    }
                }
                t
            })
            .collect()
    }

    /// Checks associativity on all basis triples, reporting the first failure in
    /// lexicographic `(i, j, k)` order, then both unit laws.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let eij: Vec<(usize, F::Elem)> = self.product(i, j).to_vec();
                for k in 0..n {
                    let mut lhs = self.zero();
                    for (m, c) in &eij {
                        for (t, d) in self.product(*m, k) {
                            self.field.add_mul_assign(&mut lhs[*t], c, d);
                        }
                    }
                    let mut rhs = self.zero();
                    for (m, c) in self.product(j, k) {
                        for (t, d) in self.product(i, *m) {
                            self.field.add_mul_assign(&mut rhs[*t], c, d);
                        }
                    }
                    if lhs != rhs {
                        let loc =
                            format!("({i}, {j}, {k}) = ({}, {}, {})", self.labels[i], self.labels[j], self.labels[k]);
                        return Err(self.violation("associativity", vec![i, j, k], loc, &lhs, &rhs));
                    }
                }
            }
        }
        for i in 0..n {
            let ei = self.basis_vector(i);
            let left = self.mul(&self.unit, &ei);
            if left != ei {
                return Err(self.violation("left unit law", vec![i], format!("u·{}", self.labels[i]), &left, &ei));
            }
            let right = self.mul(&ei, &self.unit);
            if right != ei {
                return Err(self.violation("right unit law", vec![i], format!("{}·u", self.labels[i]), &right, &ei));
            }
        }
        Ok(())
    }

    fn violation(
        &self,
        identity: &str,
        indices: Vec<usize>,
        location: String,
        lhs: &[F::Elem],
        rhs: &[F::Elem],
    ) -> Violation {
        Violation {
            identity: identity.into(),
            indices,
            location,
            lhs: self.format_element(lhs),
            rhs: self.format_element(rhs),
        }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// `Z(A)`: joint kernel of `x ↦ [x, e_i]`.
    pub fn centre(&self) -> Subspace<F::Elem> {
        let mut space = Subspace::full(&self.field, self.dim());
        for i in 0..self.dim() {
            if space.is_zero() {
                break;
            }
            space =
                space.kernel_within(&self.field, |x| self.sub(&self.mul_basis_right(x, i), &self.mul_basis_left(i, x)));
        }
        space
    }

    /// Span of all commutators `e_i e_j - e_j e_i`.
    pub fn commutator_space(&self) -> Subspace<F::Elem> {
        let n = self.dim();
        let mut b = crate::arith::EchelonBuilder::new(&self.field, n);
        for i in 0..n {
            for j in i + 1..n {
                if self.product(i, j) == self.product(j, i) {
                    continue;
                }
                let mut v = self.zero();
                for (k, c) in self.product(i, j) {
                    self.field.add_assign(&mut v[*k], c);
                }
                for (k, c) in self.product(j, i) {
                    v[*k] = self.field.sub(&v[*k], c);
                }
                b.insert(&v);
            }
        }
        b.finish()
    }

    /// Minimal polynomial of `y` inside the corner algebra with unit `unit`
    /// (pass the algebra unit for the ordinary minimal polynomial).
    pub fn minimal_polynomial_in(&self, unit: &[F::Elem], y: &[F::Elem]) -> UniPoly<F::Elem> {
        krylov_minimal_polynomial(&self.field, unit.to_vec(), |v| self.mul(v, y))
    }

    pub fn minimal_polynomial(&self, y: &[F::Elem]) -> UniPoly<F::Elem> {
        self.minimal_polynomial_in(&self.unit, y)
    }

    /// Evaluates `poly(y)` where the constant term multiplies `unit`.
    pub fn eval_poly_in(&self, poly: &UniPoly<F::Elem>, unit: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = self.zero();
        for c in poly.coeffs().iter().rev() {
            acc = self.mul(&acc, y);
            for (a, u) in acc.iter_mut().zip(unit) {
                self.field.add_mul_assign(a, c, u);
            }
        }
        acc
    }

    /// True when the subspace contains the unit and is closed under products.
    pub fn is_subalgebra(&self, space: &Subspace<F::Elem>) -> bool {
        if !space.contains(&self.field, &self.unit) {
            return false;
        }
        let vs = space.vectors();
        vs.iter().all(|a| vs.iter().all(|b| space.contains(&self.field, &self.mul(a, b))))
    }

    pub fn is_two_sided_ideal(&self, space: &Subspace<F::Elem>) -> bool {
        let vs = space.vectors();
        (0..self.dim()).all(|i| {
            vs.iter().all(|v| {
                space.contains(&self.field, &self.mul_basis_left(i, v))
                    && space.contains(&self.field, &self.mul_basis_right(v, i))
            })
        })
    }

    /// Presentation of a unital subalgebra on the RREF basis of `space`.
    pub fn subalgebra(&self, space: &Subspace<F::Elem>) -> Result<Self> {
        if !self.is_subalgebra(space) {
            return Err(Error::Input("subspace is not a unital subalgebra".into()));
        }
        let f = &self.field;
        let vs = space.vectors();
        let labels = (0..vs.len()).map(|i| format!("z{i}")).collect();
        let unit = space.coordinates_unchecked(&self.unit);
        Self::from_fn(f.clone(), labels, unit, |i, j| {
            let coords = space.coordinates_unchecked(&self.mul(&vs[i], &vs[j]));
            coords.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
        })
    }

    /// The same algebra in the basis `f_j = Σ_k p[k][j] e_k`.
    pub fn change_basis(&self, p: &Matrix<F::Elem>) -> Result<Self> {
        let f = &self.field;
        let n = self.dim();
        let pinv =
            crate::arith::inverse(f, p).ok_or_else(|| Error::Input("change of basis matrix is singular".into()))?;
        let new_basis: Vec<Vec<F::Elem>> = (0..n).map(|j| p.column(j)).collect();
        let labels = (0..n).map(|i| format!("f{i}")).collect();
        let unit = pinv.mul_vec(f, &self.unit);
        Self::from_fn(f.clone(), labels, unit, |i, j| {
            let prod = pinv.mul_vec(f, &self.mul(&new_basis[i], &new_basis[j]));
            prod.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
        })
    }

    /// Tensor product, basis `a_i ⊗ b_j` at index `i * dim(other) + j`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let f = &self.field;
        let (n, m) = (self.dim(), other.dim());
        let labels = (0..n * m).map(|t| format!("{}⊗{}", self.labels[t / m], other.labels[t % m])).collect();
        let mut unit = vec![f.zero(); n * m];
        for i in 0..n {
            for j in 0..m {
                unit[i * m + j] = f.mul(&self.unit[i], &other.unit[j]);
            }
        }
        Self::from_fn(f.clone(), labels, unit, |s, t| {
            let mut out = Vec::new();
            for (k, c) in self.product(s / m, t / m) {
                for (l, d) in other.product(s % m, t % m) {
                    out.push((k * m + l, f.mul(c, d)));
                }
            }
            out
        })
    }

    /// Direct product `A × B` with `A` occupying the first indices.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let f = &self.field;
        let n = self.dim();
        let labels =
            self.labels.iter().map(|l| format!("{l}|0")).chain(other.labels.iter().map(|l| format!("{l}|1"))).collect();
        let unit = self.unit.iter().chain(other.unit.iter()).cloned().collect();
        Self::from_fn(f.clone(), labels, unit, |i, j| match (i < n, j < n) {
            (true, true) => self.product(i, j).to_vec(),
            (false, false) => other.product(i - n, j - n).iter().map(|(k, c)| (k + n, c.clone())).collect(),
            _ => Vec::new(),
        })
    }

    /// Human-readable element, e.g. `1 + -1*xs`.
    pub fn format_element(&self, v: &[F::Elem]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| {
                let cs = self.field.format(c);
                if cs == "1" {
                    self.labels[i].clone()
                } else {
                    format!("{cs}*{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn normalize_sparse<F: Field>(field: &F, mut terms: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    terms.sort_by_key(|(k, _)| *k);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => field.add_assign(lc, &c),
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out
}
