use super::field::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over a field's element type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Input(format!("matrix data has {} entries, expected {rows}x{cols}", data.len())));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Input(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns<F: Field<Elem = E>>(field: &F, rows: usize, columns: &[Vec<E>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn into_data(self) -> Vec<E> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut E {
        &mut self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|v| field.is_zero(v))
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if field.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out_row.iter_mut().zip(brow) {
                    if !field.is_zero(b) {
                        field.add_mul_assign(o, a, b);
                    }
                }
            }
        }
        out
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| field.add(a, b)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| field.sub(a, b)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        let data = self.data.iter().map(|a| field.mul(a, c)).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`
    pub fn add_scaled<F: Field<Elem = E>>(&mut self, field: &F, c: &E, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if field.is_zero(c) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !field.is_zero(b) {
                field.add_mul_assign(a, c, b);
            }
        }
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if field.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !field.is_zero(a) {
                    field.add_mul_assign(o, a, x);
                }
            }
        }
        out
    }

    pub fn pow<F: Field<Elem = E>>(&self, field: &F, e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(field, self.rows);
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    pub fn trace<F: Field<Elem = E>>(&self, field: &F) -> E {
        assert!(self.is_square());
        let mut t = field.zero();
        for i in 0..self.rows {
            field.add_assign(&mut t, self.get(i, i));
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn format<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|v| field.format(v)).collect()).collect()
    }
}
