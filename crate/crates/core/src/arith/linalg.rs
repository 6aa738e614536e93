use super::field::Field;
use super::matrix::Matrix;
use super::poly::UniPoly;
use crate::error::{Error, Result};

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination: leftmost nonzero column, first nonzero row.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut data: Vec<Vec<F::Elem>> = m.row_vecs();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&data[i][c])) else {
            continue;
        };
        data.swap(r, pr);
        let inv = field.inv(&data[r][c]).unwrap();
        for v in data[r][c..].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = std::mem::take(&mut data[r]);
        for (i, row) in data.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !field.is_zero(p) {
                    field.sub_mul_assign(x, &factor, p);
                }
            }
        }
        data[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    let matrix = Matrix::from_rows(cols, data).expect("row lengths preserved");
    Rref { matrix, rank: r, pivots }
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut b = EchelonBuilder::new(field, m.cols());
    for i in 0..m.rows() {
        b.insert(m.row(i));
    }
    b.dim()
}

/// Solves `a x = b`; free coordinates of the returned solution are zero.
/// `Ok(None)` means the system is inconsistent.
pub fn solve_linear<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    if a.rows() != b.len() {
        return Err(Error::Input(format!("right-hand side has length {}, matrix has {} rows", b.len(), a.rows())));
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(field, a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, b[i].clone());
    }
    let red = rref(field, &aug);
    if red.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); n];
    for (r, &c) in red.pivots.iter().enumerate() {
        x[c] = red.matrix.get(r, n).clone();
    }
    Ok(Some(x))
}

/// Right kernel of `a` as a canonical subspace.
pub fn nullspace<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    let n = a.cols();
    let red = rref(field, a);
    let mut is_pivot = vec![false; n];
    for &c in &red.pivots {
        is_pivot[c] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (r, &c) in red.pivots.iter().enumerate() {
            v[c] = field.neg(red.matrix.get(r, free));
        }
        vectors.push(v);
    }
    Subspace::from_vectors(field, n, vectors)
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut aug = Matrix::zeros(field, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, field.one());
    }
    let red = rref(field, &aug);
    if red.rank < n || red.pivots[n - 1] != n - 1 {
        return None;
    }
    let mut out = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, red.matrix.get(i, n + j).clone());
        }
    }
    Some(out)
}

/// A linear subspace of `F^ambient`, stored by its unique RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Matrix<E>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero<F: Field<Elem = E>>(field: &F, ambient: usize) -> Self {
        Self { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full<F: Field<Elem = E>>(field: &F, ambient: usize) -> Self {
        Self { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_vectors<F: Field<Elem = E>, V: AsRef<[E]>>(
        field: &F,
        ambient: usize,
        vectors: impl IntoIterator<Item = V>,
    ) -> Self {
        let mut b = EchelonBuilder::new(field, ambient);
        for v in vectors {
            b.insert(v.as_ref());
        }
        b.finish()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }

    pub fn basis(&self) -> &Matrix<E> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<E>> {
        self.basis.row_vecs()
    }

    /// Subtracts the span component of `v` along the pivots; zero iff `v` is in the span.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        let mut out = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            if field.is_zero(&out[c]) {
                continue;
            }
            let factor = out[c].clone();
            for (x, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !field.is_zero(b) {
                    field.sub_mul_assign(x, &factor, b);
                }
            }
        }
        out
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(field, v).iter().all(|x| field.is_zero(x))
    }

    /// Coordinates relative to the RREF basis rows, when `v` lies in the span.
    pub fn coordinates<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Option<Vec<E>> {
        if !self.contains(field, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    /// Coordinates without a membership check, for vectors known to lie in the span.
    pub fn coordinates_unchecked(&self, v: &[E]) -> Vec<E> {
        self.pivots.iter().map(|&c| v[c].clone()).collect()
    }

    /// `Σ c_i b_i` over the basis rows.
    pub fn combine<F: Field<Elem = E>>(&self, field: &F, coords: &[E]) -> Vec<E> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![field.zero(); self.ambient];
        for (r, c) in coords.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !field.is_zero(b) {
                    field.add_mul_assign(o, c, b);
                }
            }
        }
        out
    }

    pub fn is_subspace_of<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> bool {
        (0..self.dim()).all(|i| other.contains(field, self.basis.row(i)))
    }

    pub fn sum<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        Self::from_vectors(field, self.ambient, self.vectors().into_iter().chain(other.vectors()))
    }

    pub fn intersect<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        // kernel of u -> reduce_other(u) restricted to self
        self.kernel_within(field, |v| other.reduce(field, v))
    }

    /// `{ v in self : map(v) = 0 }` for a linear `map`.
    pub fn kernel_within<F: Field<Elem = E>>(&self, field: &F, map: impl Fn(&[E]) -> Vec<E>) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let images: Vec<Vec<E>> = (0..self.dim()).map(|i| map(self.basis.row(i))).collect();
        let rows = images[0].len();
        let m = Matrix::from_columns(field, rows, &images);
        let kernel = nullspace(field, &m);
        Self::from_vectors(field, self.ambient, (0..kernel.dim()).map(|i| self.combine(field, kernel.basis.row(i))))
    }

    /// Image of the subspace under a linear map into `F^target`.
    pub fn image<F: Field<Elem = E>>(&self, field: &F, target: usize, map: impl Fn(&[E]) -> Vec<E>) -> Self {
        Self::from_vectors(field, target, (0..self.dim()).map(|i| map(self.basis.row(i))))
    }
}

/// Incremental span accumulator; keeps a semi-echelon basis and produces a
/// canonical [`Subspace`] on `finish`.
pub struct EchelonBuilder<'a, F: Field> {
    field: &'a F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<'a, F: Field> EchelonBuilder<'a, F> {
    pub fn new(field: &'a F, ambient: usize) -> Self {
        Self { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Returns true when `v` enlarged the span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        if self.is_full() {
            return false;
        }
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&w[c]) {
                continue;
            }
            let factor = w[c].clone();
            for (x, b) in w[c..].iter_mut().zip(&row[c..]) {
                if !f.is_zero(b) {
                    f.sub_mul_assign(x, &factor, b);
                }
            }
        }
        let Some(c) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[c]).unwrap();
        for x in w[c..].iter_mut() {
            *x = f.mul(x, &inv);
        }
        self.rows.push(w);
        self.pivots.push(c);
        true
    }

    pub fn finish(self) -> Subspace<F::Elem> {
        let f = self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Vec<F::Elem>> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        // back substitution to clear entries above each pivot
        for r in (0..rows.len()).rev() {
            let c = pivots[r];
            let (upper, lower) = rows.split_at_mut(r);
            let pivot_row = &lower[0];
            for row in upper.iter_mut() {
                if f.is_zero(&row[c]) {
                    continue;
                }
                let factor = row[c].clone();
                for (x, b) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !f.is_zero(b) {
                        f.sub_mul_assign(x, &factor, b);
                    }
                }
            }
        }
        let basis = Matrix::from_rows(self.ambient, rows).expect("consistent row lengths");
        Subspace { ambient: self.ambient, basis, pivots }
    }
}

/// Monic generator of the annihilating ideal of the sequence
/// `start, step(start), step(step(start)), ...`: the first linear dependence
/// among the iterates, found by incremental elimination with tracked combinations.
pub fn krylov_minimal_polynomial<F: Field>(
    field: &F,
    start: Vec<F::Elem>,
    mut step: impl FnMut(&[F::Elem]) -> Vec<F::Elem>,
) -> UniPoly<F::Elem> {
    let len = start.len();
    // each stored row: (reduced vector, pivot, combination over powers)
    let mut rows: Vec<(Vec<F::Elem>, usize, Vec<F::Elem>)> = Vec::new();
    let mut current = start;
    for k in 0..=len {
        let mut w = current.clone();
        let mut combo = vec![field.zero(); k + 1];
        combo[k] = field.one();
        for (row, c, rc) in &rows {
            if field.is_zero(&w[*c]) {
                continue;
            }
            let factor = w[*c].clone();
            for (x, b) in w.iter_mut().zip(row) {
                if !field.is_zero(b) {
                    field.sub_mul_assign(x, &factor, b);
                }
            }
            for (x, b) in combo.iter_mut().zip(rc) {
                field.sub_mul_assign(x, &factor, b);
            }
        }
        match w.iter().position(|x| !field.is_zero(x)) {
            None => return UniPoly::new(field, combo),
            Some(c) => {
                let inv = field.inv(&w[c]).unwrap();
                for x in w.iter_mut() {
                    *x = field.mul(x, &inv);
                }
                for x in combo.iter_mut() {
                    *x = field.mul(x, &inv);
                }
                rows.push((w, c, combo));
            }
        }
        current = step(&current);
    }
    unreachable!("more than {len} independent vectors in a space of dimension {len}")
}

/// Monic least-degree polynomial annihilating a square matrix.
pub fn minimal_polynomial<F: Field>(field: &F, a: &Matrix<F::Elem>) -> UniPoly<F::Elem> {
    assert!(a.is_square(), "minimal polynomial needs a square matrix");
    let n = a.rows();
    let start = Matrix::identity(field, n).into_data();
    krylov_minimal_polynomial(field, start, |v| {
        let m = Matrix::from_vec(n, n, v.to_vec()).unwrap();
        m.mul(field, a).into_data()
    })
}
