//! Frobenius forms, dual bases, the Nakayama automorphism, twisted centres,
//! and the Higman and Casimir maps.
//!
//! Conventions: a form `λ` is a coefficient vector, `λ(a) = Σ λ_i a_i`. The
//! left dual basis is always the presentation basis `g_i = e_i`, and the right
//! dual basis satisfies `λ(g_i h_j) = δ_ij`. The Nakayama automorphism is the
//! unique `α` with `λ(ab) = λ(b·α(a))`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::arith::{inverse, Field, Matrix, Subspace};
use crate::error::{Error, Result};

/// A nondegenerate form together with its dual bases.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusStructure<F: Field> {
    pub lambda: Vec<F::Elem>,
    pub gram: Matrix<F::Elem>,
    pub gram_inverse: Matrix<F::Elem>,
    /// `h_j = Σ_k (G⁻¹)[k][j] e_k`, dual to `g_j = e_j`.
    pub right_dual: Vec<Vec<F::Elem>>,
}

impl<F: Field> FrobeniusStructure<F> {
    pub fn left_dual(&self, alg: &Algebra<F>) -> Vec<Vec<F::Elem>> {
        (0..alg.dim()).map(|i| alg.basis_vector(i)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }
}

pub fn apply_form<F: Field>(field: &F, lambda: &[F::Elem], a: &[F::Elem]) -> F::Elem {
    let mut acc = field.zero();
    for (l, x) in lambda.iter().zip(a) {
        if !field.is_zero(x) {
            field.add_mul_assign(&mut acc, l, x);
        }
    }
    acc
}

/// `G[i][j] = λ(e_i e_j)`.
pub fn gram_matrix<F: Field>(alg: &Algebra<F>, lambda: &[F::Elem]) -> Matrix<F::Elem> {
    let f = alg.field();
    let n = alg.dim();
    let mut g = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = f.zero();
            for (k, c) in alg.product(i, j) {
                f.add_mul_assign(&mut acc, c, &lambda[*k]);
            }
            g.set(i, j, acc);
        }
    }
    g
}

/// Outcome of a randomized search for a Frobenius form.
#[derive(Clone, Debug, PartialEq)]
pub enum FormSearch<E> {
    Found {
        lambda: Vec<E>,
        trial: usize,
    },
    /// Inconclusive: over small fields random search can miss existing forms.
    NotFound {
        trials: usize,
    },
}

impl<E> FormSearch<E> {
    pub fn found(self) -> Option<Vec<E>> {
        match self {
            FormSearch::Found { lambda, .. } => Some(lambda),
            FormSearch::NotFound { .. } => None,
        }
    }
}

/// Coefficient bound for trial `t` (1-based): `2^(8+t)`, capped at `2^40`.
pub fn search_bound(trial: usize) -> i64 {
    1i64 << (8 + trial).min(40)
}

/// Draws random forms with integer coefficients in `[-B_t, B_t]` until the
/// Gram matrix is invertible.
pub fn find_frobenius_form<F: Field>(alg: &Algebra<F>, seed: u64, trials: usize) -> FormSearch<F::Elem> {
    let f = alg.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 1..=trials.max(1) {
        let b = search_bound(t);
        let lambda: Vec<F::Elem> = (0..alg.dim()).map(|_| f.from_i64(rng.gen_range(-b..=b))).collect();
        if crate::arith::rank(f, &gram_matrix(alg, &lambda)) == alg.dim() {
            return FormSearch::Found { lambda, trial: t };
        }
    }
    FormSearch::NotFound { trials: trials.max(1) }
}

/// Right dual basis to the presentation basis.
pub fn dual_bases<F: Field>(alg: &Algebra<F>, lambda: &[F::Elem]) -> Result<FrobeniusStructure<F>> {
    let f = alg.field();
    let n = alg.dim();
    if lambda.len() != n {
        return Err(Error::Input(format!("form has length {}, expected {n}", lambda.len())));
    }
    let gram = gram_matrix(alg, lambda);
    let gram_inverse =
        inverse(f, &gram).ok_or_else(|| Error::NotFrobenius("the Gram matrix of the form is singular".into()))?;
    let right_dual: Vec<Vec<F::Elem>> = (0..n).map(|j| gram_inverse.column(j)).collect();
    for i in 0..n {
        for (j, h) in right_dual.iter().enumerate() {
            let v = apply_form(f, lambda, &alg.mul_basis_left(i, h));
            let expect = if i == j { f.one() } else { f.zero() };
            if v != expect {
                return Err(Error::Internal(format!("dual basis check failed at ({i}, {j})")));
            }
        }
    }
    Ok(FrobeniusStructure { lambda: lambda.to_vec(), gram, gram_inverse, right_dual })
}

/// Dual pair for an arbitrary basis `{b_j}` (given as vectors): returns
/// `(b_j, h_j)` with `λ(b_i h_j) = δ_ij`.
pub fn dual_pair_in_basis<F: Field>(
    alg: &Algebra<F>,
    lambda: &[F::Elem],
    basis: &[Vec<F::Elem>],
) -> Result<(Vec<Vec<F::Elem>>, Vec<Vec<F::Elem>>)> {
    let f = alg.field();
    let n = alg.dim();
    if basis.len() != n {
        return Err(Error::Input("basis has the wrong number of vectors".into()));
    }
    let mut gram = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, apply_form(f, lambda, &alg.mul(&basis[i], &basis[j])));
        }
    }
    let ginv = inverse(f, &gram).ok_or_else(|| Error::NotFrobenius("singular Gram matrix in new basis".into()))?;
    let rights = (0..n)
        .map(|j| {
            let mut h = alg.zero();
            for (k, b) in basis.iter().enumerate() {
                let c = ginv.get(k, j);
                if !f.is_zero(c) {
                    for (o, x) in h.iter_mut().zip(b) {
                        f.add_mul_assign(o, c, x);
                    }
                }
            }
            h
        })
        .collect();
    Ok((basis.to_vec(), rights))
}

/// Nakayama automorphism as a matrix (column `i` holds `α(e_i)`) with the
/// smallest `k ≤ 2·dim` such that `α^k = id`, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct NakayamaData<E> {
    pub matrix: Matrix<E>,
    pub order: Option<usize>,
}

pub fn nakayama_automorphism<F: Field>(
    alg: &Algebra<F>,
    frob: &FrobeniusStructure<F>,
) -> Result<NakayamaData<F::Elem>> {
    let f = alg.field();
    let n = alg.dim();
    // λ(e_i e_j) = λ(e_j α(e_i))  <=>  G α = Gᵀ
    let matrix = frob.gram_inverse.mul(f, &frob.gram.transpose());
    if frob.gram.mul(f, &matrix) != frob.gram.transpose() {
        return Err(Error::Internal("Nakayama equation has no solution".into()));
    }
    if !is_automorphism(alg, &matrix) {
        return Err(Error::Internal(
            "solution of the Nakayama equation is not an algebra automorphism; the Frobenius structure is invalid"
                .into(),
        ));
    }
    let id = Matrix::identity(f, n);
    let mut power = matrix.clone();
    let mut order = None;
    for k in 1..=2 * n {
        if power == id {
            order = Some(k);
            break;
        }
        power = power.mul(f, &matrix);
    }
    Ok(NakayamaData { matrix, order })
}

/// Whether a matrix (columns = images of basis vectors) is a unital algebra automorphism.
pub fn is_automorphism<F: Field>(alg: &Algebra<F>, m: &Matrix<F::Elem>) -> bool {
    let f = alg.field();
    let n = alg.dim();
    if m.rows() != n || m.cols() != n {
        return false;
    }
    if *m == Matrix::identity(f, n) {
        return true;
    }
    if crate::arith::rank(f, m) != n || m.mul_vec(f, alg.unit()) != alg.unit() {
        return false;
    }
    let images: Vec<Vec<F::Elem>> = (0..n).map(|i| m.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut prod = alg.zero();
            for (k, c) in alg.product(i, j) {
                for (o, x) in prod.iter_mut().zip(&images[*k]) {
                    f.add_mul_assign(o, c, x);
                }
            }
            if prod != alg.mul(&images[i], &images[j]) {
                return false;
            }
        }
    }
    true
}

/// `Z_α(A) = { h : h·e_i = α(e_i)·h for all i }`.
pub fn twisted_centre<F: Field>(alg: &Algebra<F>, automorphism: &Matrix<F::Elem>) -> Result<Subspace<F::Elem>> {
    if !is_automorphism(alg, automorphism) {
        return Err(Error::Input("twisting matrix is not an algebra automorphism".into()));
    }
    let f = alg.field();
    let mut space = Subspace::full(f, alg.dim());
    for i in 0..alg.dim() {
        if space.is_zero() {
            break;
        }
        let ai = automorphism.column(i);
        space = space.kernel_within(f, |h| alg.sub(&alg.mul_basis_right(h, i), &alg.mul(&ai, h)));
    }
    Ok(space)
}

/// The twisted centre that contains the image of the Higman map:
/// `{ h : a·h = h·α(a) }`, which is [`twisted_centre`] for `α⁻¹`. Under the
/// right-twist convention for the bimodule isomorphism this is `Z_α′(A)`.
pub fn nakayama_centre<F: Field>(alg: &Algebra<F>, nakayama: &NakayamaData<F::Elem>) -> Result<Subspace<F::Elem>> {
    let inv = inverse(alg.field(), &nakayama.matrix)
        .ok_or_else(|| Error::Internal("Nakayama automorphism is singular".into()))?;
    twisted_centre(alg, &inv)
}

/// A linear endomorphism of the algebra with its image.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<E> {
    pub matrix: Matrix<E>,
    pub image: Subspace<E>,
}

impl<E: Clone + PartialEq> LinearMap<E> {
    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        self.matrix.mul_vec(field, v)
    }
}

/// Matrix of `x ↦ Σ_j lefts[j] · x · rights[j]`.
pub fn sandwich_map<F: Field>(alg: &Algebra<F>, lefts: &[Vec<F::Elem>], rights: &[Vec<F::Elem>]) -> LinearMap<F::Elem> {
    let f = alg.field();
    let n = alg.dim();
    let columns: Vec<Vec<F::Elem>> = (0..n)
        .map(|m| {
            let mut acc = alg.zero();
            for (l, r) in lefts.iter().zip(rights) {
                let lx = alg.mul_basis_right(l, m);
                if alg.is_zero(&lx) {
                    continue;
                }
                for (o, x) in acc.iter_mut().zip(alg.mul(&lx, r)) {
                    f.add_assign(o, &x);
                }
            }
            acc
        })
        .collect();
    let image = Subspace::from_vectors(f, n, &columns);
    LinearMap { matrix: Matrix::from_columns(f, n, &columns), image }
}

/// Higman map `τ(x) = Σ_j g_j x h_j`.
pub fn higman_map<F: Field>(alg: &Algebra<F>, frob: &FrobeniusStructure<F>) -> LinearMap<F::Elem> {
    sandwich_map(alg, &frob.left_dual(alg), &frob.right_dual)
}

/// Casimir map `q(x) = Σ_j h_j x g_j`.
pub fn casimir_map<F: Field>(alg: &Algebra<F>, frob: &FrobeniusStructure<F>) -> LinearMap<F::Elem> {
    sandwich_map(alg, &frob.right_dual, &frob.left_dual(alg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;
    use crate::catalog::{cyclic_group_table, group_algebra, smash_algebra, smash_form, upper_triangular_algebra};

    #[test]
    fn group_algebra_gram_is_inverse_pairing() {
        let q = Rationals;
        let a = group_algebra(q, &cyclic_group_table(3)).unwrap();
        let lambda = a.basis_vector(0);
        let g = gram_matrix(&a, &lambda);
        // g_i g_j = 1 iff j = -i mod 3
        for i in 0..3 {
            for j in 0..3 {
                let expect = if (i + j) % 3 == 0 { q.one() } else { q.zero() };
                assert_eq!(*g.get(i, j), expect);
            }
        }
        let frob = dual_bases(&a, &lambda).unwrap();
        assert_eq!(frob.right_dual[1], a.basis_vector(2));
        assert!(gram_matrix(&a, &a.zero()).is_zero(&q));
        assert!(matches!(dual_bases(&a, &a.zero()), Err(Error::NotFrobenius(_))));
    }

    /// Hand computation for `K[x]/(x²) ⋊ Z/2` in basis (1, s, x, xs) with λ = coefficient of x:
    /// the nonzero products hitting x are 1·x, x·1, s·xs = -x and xs·s = x.
    #[test]
    fn smash_gram_matches_hand_oracle() {
        let q = Rationals;
        let a = smash_algebra(q, 2).unwrap();
        let lambda = smash_form(&a, 2);
        let g = gram_matrix(&a, &lambda);
        let rows: [[i64; 4]; 4] = [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(*g.get(i, j), q.from_i64(rows[i][j]), "entry ({i}, {j})");
            }
        }
        let frob = dual_bases(&a, &lambda).unwrap();
        // inverse of a signed permutation is its transpose
        let duals: [[i64; 4]; 4] = [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]];
        for (j, h) in frob.right_dual.iter().enumerate() {
            let expect: Vec<_> = duals[j].iter().map(|&v| q.from_i64(v)).collect();
            assert_eq!(h, &expect);
        }
    }

    #[test]
    fn smash_nakayama_negates_s() {
        let q = Rationals;
        let a = smash_algebra(q, 2).unwrap();
        let frob = dual_bases(&a, &smash_form(&a, 2)).unwrap();
        let nak = nakayama_automorphism(&a, &frob).unwrap();
        let diag: Vec<i64> = vec![1, -1, 1, -1];
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { q.from_i64(diag[i]) } else { q.zero() };
                assert_eq!(*nak.matrix.get(i, j), expect);
            }
        }
        assert_eq!(nak.order, Some(2));
        // rescaling leaves α unchanged
        let scaled = a.scale(&q.from_i64(-7), &frob.lambda);
        let nak2 = nakayama_automorphism(&a, &dual_bases(&a, &scaled).unwrap()).unwrap();
        assert_eq!(nak2, nak);
    }

    #[test]
    fn symmetric_form_has_trivial_nakayama() {
        let q = Rationals;
        let a = group_algebra(q, &crate::catalog::symmetric_group_s3_table()).unwrap();
        let frob = dual_bases(&a, &a.basis_vector(0)).unwrap();
        assert!(frob.is_symmetric());
        let nak = nakayama_automorphism(&a, &frob).unwrap();
        assert_eq!(nak.matrix, Matrix::identity(&q, 6));
        assert_eq!(twisted_centre(&a, &nak.matrix).unwrap(), a.centre());
        assert_eq!(higman_map(&a, &frob), casimir_map(&a, &frob));
    }

    #[test]
    fn higman_image_lands_in_inverse_twist() {
        // F5[x]/(x^2) # Z4 with g x = 2 x g; the form picks out the top x g^3
        let f = crate::arith::PrimeField::new(5).unwrap();
        let a = crate::catalog::twisted_group_ring(f, 2, 4, &2).unwrap();
        let frob = dual_bases(&a, &a.basis_vector(7)).unwrap();
        let nak = nakayama_automorphism(&a, &frob).unwrap();
        assert_eq!(nak.order, Some(4));
        let tau = higman_map(&a, &frob);
        assert!(!tau.image.is_zero());
        assert!(tau.image.is_subspace_of(&f, &nakayama_centre(&a, &nak).unwrap()));
        assert!(!tau.image.is_subspace_of(&f, &twisted_centre(&a, &nak.matrix).unwrap()));
    }

    #[test]
    fn smash_twisted_centre_and_maps() {
        let q = Rationals;
        let a = smash_algebra(q, 2).unwrap();
        let frob = dual_bases(&a, &smash_form(&a, 2)).unwrap();
        let nak = nakayama_automorphism(&a, &frob).unwrap();
        let za = twisted_centre(&a, &nak.matrix).unwrap();
        assert_eq!(za.dim(), 2);
        assert!(za.contains(&q, &a.basis_vector(2)));
        let tau = higman_map(&a, &frob);
        assert_eq!(tau.image.dim(), 1);
        // τ(1) = 4x by direct expansion of the four sandwich terms
        assert_eq!(tau.apply(&q, a.unit()), a.scale(&q.from_i64(4), &a.basis_vector(2)));
        assert!(tau.image.is_subspace_of(&q, &za));
        assert!(casimir_map(&a, &frob).matrix.is_zero(&q));
        assert!(tau.apply(&q, &a.zero()).iter().all(|c| q.is_zero(c)));
    }

    #[test]
    fn cyclic_two_higman_is_twice_identity() {
        let q = Rationals;
        let a = group_algebra(q, &cyclic_group_table(2)).unwrap();
        let frob = dual_bases(&a, &a.basis_vector(0)).unwrap();
        let tau = higman_map(&a, &frob);
        assert_eq!(tau.matrix, Matrix::identity(&q, 2).scale(&q, &q.from_i64(2)));
        assert_eq!(tau.image.dim(), 2);
        let cas = casimir_map(&a, &frob);
        assert_eq!(cas.image.dim(), 2);
        assert!(cas.image.is_subspace_of(&q, &a.centre()));
    }

    #[test]
    fn form_search_outcomes() {
        let q = Rationals;
        let a = group_algebra(q, &cyclic_group_table(2)).unwrap();
        match find_frobenius_form(&a, 0, 8) {
            FormSearch::Found { lambda, .. } => assert!(dual_bases(&a, &lambda).is_ok()),
            FormSearch::NotFound { .. } => panic!("semisimple algebra must admit a form"),
        }
        let smash = smash_algebra(q, 2).unwrap();
        assert!(find_frobenius_form(&smash, 3, 8).found().is_some());
        let tri = upper_triangular_algebra(q, 2).unwrap();
        assert_eq!(find_frobenius_form(&tri, 0, 16), FormSearch::NotFound { trials: 16 });
    }

    #[test]
    fn non_automorphism_rejected() {
        let q = Rationals;
        let a = smash_algebra(q, 2).unwrap();
        let m = Matrix::identity(&q, 4).scale(&q, &q.from_i64(2));
        assert!(twisted_centre(&a, &m).is_err());
    }
}
