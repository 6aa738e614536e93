//! Brute-force reference computations for the integration tests.
//!
//! Everything here works on dense structure tensors with its own Gaussian
//! elimination, so none of it shares code paths with the library beyond the
//! scalar field operations.
#![allow(dead_code, clippy::needless_range_loop)]

use rankone::catalog::{build_example, AnyBundle, ExampleParams};
use rankone::{Algebra, Field, FieldSpec};

/// Runs `$body` with `$x` bound to the inner bundle, whatever its field.
#[macro_export]
macro_rules! on_bundle {
    ($b:expr, $x:ident => $body:expr) => {
        match $b {
            rankone::catalog::AnyBundle::Q($x) => $body,
            rankone::catalog::AnyBundle::Fp($x) => $body,
        }
    };
}

/// `c[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
pub struct Table<F: Field> {
    pub field: F,
    pub n: usize,
    pub c: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> Table<F> {
    pub fn of(alg: &Algebra<F>) -> Self {
        let f = alg.field().clone();
        let n = alg.dim();
        let mut c = vec![vec![vec![f.zero(); n]; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                for (k, v) in alg.product(i, j) {
                    out[*k] = v.clone();
                }
            }
        }
        Self { field: f, n, c }
    }

    pub fn unit_basis(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.n];
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.n];
        for i in 0..self.n {
            if f.is_zero(&a[i]) {
                continue;
            }
            for j in 0..self.n {
                if f.is_zero(&b[j]) {
                    continue;
                }
                let ab = f.mul(&a[i], &b[j]);
                for k in 0..self.n {
                    let c = &self.c[i][j][k];
                    if !f.is_zero(c) {
                        out[k] = f.add(&out[k], &f.mul(&ab, c));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self, v: &[F::Elem]) -> bool {
        v.iter().all(|x| self.field.is_zero(x))
    }

    pub fn commutes(&self, a: &[F::Elem], b: &[F::Elem]) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// First `(i, j, k)` in lexicographic order with `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub fn first_associativity_failure(&self) -> Option<[usize; 3]> {
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let (ei, ej, ek) = (self.unit_basis(i), self.unit_basis(j), self.unit_basis(k));
                    if self.mul(&self.mul(&ei, &ej), &ek) != self.mul(&ei, &self.mul(&ej, &ek)) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    pub fn gram(&self, lambda: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| (0..self.n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(&self.c[i][j][k], &lambda[k]))))
                    .collect()
            })
            .collect()
    }

    /// Right dual basis `h_j` to `e_j` under `λ`: `λ(e_i h_j) = δ_ij`.
    pub fn right_duals(&self, lambda: &[F::Elem]) -> Option<Vec<Vec<F::Elem>>> {
        let ginv = invert(&self.field, &self.gram(lambda))?;
        Some((0..self.n).map(|j| (0..self.n).map(|k| ginv[k][j].clone()).collect()).collect())
    }

    /// Columns of `x ↦ Σ_j l_j x r_j`.
    pub fn sandwich(&self, lefts: &[Vec<F::Elem>], rights: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        (0..self.n)
            .map(|m| {
                let em = self.unit_basis(m);
                let mut acc = vec![f.zero(); self.n];
                for (l, r) in lefts.iter().zip(rights) {
                    let t = self.mul(&self.mul(l, &em), r);
                    for (a, b) in acc.iter_mut().zip(&t) {
                        *a = f.add(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn higman(&self, lambda: &[F::Elem]) -> Option<Vec<Vec<F::Elem>>> {
        let h = self.right_duals(lambda)?;
        let g: Vec<_> = (0..self.n).map(|j| self.unit_basis(j)).collect();
        Some(self.sandwich(&g, &h))
    }

    pub fn casimir(&self, lambda: &[F::Elem]) -> Option<Vec<Vec<F::Elem>>> {
        let h = self.right_duals(lambda)?;
        let g: Vec<_> = (0..self.n).map(|j| self.unit_basis(j)).collect();
        Some(self.sandwich(&h, &g))
    }

    /// Columns `α(e_i)`, solved from `λ(e_i e_j) = λ(e_j α(e_i))` one column at a time.
    pub fn nakayama(&self, lambda: &[F::Elem]) -> Option<Vec<Vec<F::Elem>>> {
        let g = self.gram(lambda);
        let ginv = invert(&self.field, &g)?;
        let f = &self.field;
        Some(
            (0..self.n)
                .map(|i| {
                    // Σ_k G[j][k] a_k = G[i][j]
                    (0..self.n)
                        .map(|k| (0..self.n).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(&ginv[k][j], &g[i][j]))))
                        .collect()
                })
                .collect(),
        )
    }

    /// Dimension of the centre from the commutator equations.
    pub fn centre_dim(&self) -> usize {
        let f = &self.field;
        let mut rows = Vec::new();
        for i in 0..self.n {
            for k in 0..self.n {
                rows.push((0..self.n).map(|m| f.sub(&self.c[m][i][k], &self.c[i][m][k])).collect());
            }
        }
        self.n - rank(f, rows)
    }

    /// `dim e_μ A e_λ` for each pair of representatives.
    pub fn cartan(&self, reps: &[Vec<F::Elem>]) -> Vec<Vec<usize>> {
        reps.iter()
            .map(|el| {
                reps.iter()
                    .map(|em| {
                        let span = (0..self.n).map(|k| self.mul(&self.mul(em, &self.unit_basis(k)), el)).collect();
                        rank(&self.field, span)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Row rank by Gaussian elimination.
pub fn rank<F: Field>(f: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else { continue };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        let pivot: Vec<F::Elem> = rows[r].iter().map(|x| f.mul(x, &inv)).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if !f.is_zero(&row[c]) {
                let m = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(x, &f.mul(&m, y));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Gauss-Jordan inverse of a square matrix given by rows.
pub fn invert<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = m.len();
    let mut a: Vec<Vec<F::Elem>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !f.is_zero(&a[i][c]))?;
        a.swap(c, p);
        let inv = f.inv(&a[c][c])?;
        for x in a[c].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && !f.is_zero(&row[c]) {
                let m = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(x, &f.mul(&m, y));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank of a nonnegative integer matrix over the field.
pub fn int_rank<F: Field>(f: &F, m: &[Vec<usize>]) -> usize {
    rank(f, m.iter().map(|r| r.iter().map(|&x| f.from_i64(x as i64)).collect()).collect())
}

/// Whether every vector of `sub` lies in the span of `space`.
pub fn within<F: Field>(f: &F, sub: &[Vec<F::Elem>], space: &[Vec<F::Elem>]) -> bool {
    let base = rank(f, space.to_vec());
    let mut all = space.to_vec();
    all.extend(sub.iter().cloned());
    rank(f, all) == base
}

fn params(field: FieldSpec) -> ExampleParams {
    ExampleParams { field, ..Default::default() }
}

/// The curated bundles, named.
pub fn curated() -> Vec<(String, AnyBundle)> {
    let mut out = Vec::new();
    let fields = [FieldSpec::Rationals, FieldSpec::Prime(5)];
    for field in fields {
        for n in [2, 3] {
            let b = build_example("smash", &ExampleParams { n, ..params(field) }).unwrap();
            out.push((format!("smash n={n} over {field}"), b));
        }
    }
    for name in ["group-c2", "group-s3"] {
        for field in fields {
            out.push((format!("{name} over {field}"), build_example(name, &params(field)).unwrap()));
        }
    }
    for field in fields {
        for c in ["0", "1"] {
            let b = build_example("rrca-c2", &ExampleParams { c: c.into(), ..params(field) }).unwrap();
            out.push((format!("rrca-c2 c={c} over {field}"), b));
        }
    }
    out.push(("usl2 p=3".into(), build_example("usl2", &ExampleParams { p: 3, ..Default::default() }).unwrap()));
    out
}
