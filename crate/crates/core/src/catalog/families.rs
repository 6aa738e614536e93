//! Small algebra families used as building blocks and test inputs.

use super::straighten::Straightener;
use crate::algebra::Algebra;
use crate::arith::Field;
use crate::error::{Error, Result};

/// `K[x]/(x^n)`, basis `1, x, ..., x^(n-1)`.
pub fn truncated_polynomial<F: Field>(field: F, n: usize) -> Result<Algebra<F>> {
    if n == 0 {
        return Err(Error::Input("truncation degree must be positive".into()));
    }
    let mut st = Straightener::new(field, &[("x", n)]);
    st.power_rule(0, vec![]);
    st.build()
}

/// `K[x]/(x^n) ⋊ Z/2` with `s x s = -x`, basis `x^a s^b` at index `2a + b`.
pub fn smash_algebra<F: Field>(field: F, n: usize) -> Result<Algebra<F>> {
    if field.characteristic() == 2 {
        return Err(Error::Input("the sign action degenerates in characteristic 2".into()));
    }
    if n < 2 {
        return Err(Error::Input("truncation degree must be at least 2".into()));
    }
    twisted_group_ring(field.clone(), n, 2, &field.from_i64(-1))
}

/// `λ(x^a s^b) = 1` iff `(a, b) = (n-1, 0)`.
pub fn smash_form<F: Field>(alg: &Algebra<F>, n: usize) -> Vec<F::Elem> {
    alg.basis_vector(2 * (n - 1))
}

/// `K[x]/(x^m) ⋊ Z/k` with `g x = ζ x g`, basis `x^a g^b` at index `k a + b`.
pub fn twisted_group_ring<F: Field>(field: F, m: usize, k: usize, zeta: &F::Elem) -> Result<Algebra<F>> {
    if !field.is_one(&field.pow(zeta, k as u64)) {
        return Err(Error::Input("twisting scalar is not a k-th root of unity".into()));
    }
    let one = field.one();
    let g = if k == 2 { "s" } else { "g" };
    let mut st = Straightener::new(field, &[("x", m), (g, k)]);
    st.power_rule(0, vec![]).power_rule(1, vec![(one, vec![])]);
    st.swap_rule(1, 0, vec![(zeta.clone(), vec![0, 1])]);
    st.build()
}

/// `M_n(K)`, basis `E_ij` at index `n i + j`.
pub fn matrix_algebra<F: Field>(field: F, n: usize) -> Result<Algebra<F>> {
    let labels = (0..n * n).map(|t| format!("E{}{}", t / n, t % n)).collect();
    let mut unit = vec![field.zero(); n * n];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    let one = field.one();
    Algebra::from_fn(field, labels, unit, |a, b| {
        let (i, j, k, l) = (a / n, a % n, b / n, b % n);
        if j == k {
            vec![(i * n + l, one.clone())]
        } else {
            vec![]
        }
    })
}

pub fn trace_form<F: Field>(field: &F, n: usize) -> Vec<F::Elem> {
    (0..n * n).map(|t| if t / n == t % n { field.one() } else { field.zero() }).collect()
}

/// Incidence algebra of a partial order on `0..k` given by `leq[a][b]`
/// (reflexive and transitive), basis the pairs `a ≤ b` in lexicographic order.
pub fn incidence_algebra<F: Field>(field: F, leq: &[Vec<bool>]) -> Result<Algebra<F>> {
    let k = leq.len();
    for a in 0..k {
        if !leq[a][a] {
            return Err(Error::Input("order relation is not reflexive".into()));
        }
        for b in 0..k {
            for c in 0..k {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Err(Error::Input("order relation is not transitive".into()));
                }
            }
            if a != b && leq[a][b] && leq[b][a] {
                return Err(Error::Input("order relation is not antisymmetric".into()));
            }
        }
    }
    let pairs: Vec<(usize, usize)> =
        (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|&(a, b)| leq[a][b]).collect();
    let labels = pairs.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
    let unit = pairs.iter().map(|(a, b)| if a == b { field.one() } else { field.zero() }).collect();
    let one = field.one();
    Algebra::from_fn(field, labels, unit, |i, j| {
        let ((a, b), (c, d)) = (pairs[i], pairs[j]);
        if b == c {
            vec![(pairs.iter().position(|&p| p == (a, d)).unwrap(), one.clone())]
        } else {
            vec![]
        }
    })
}

/// Upper triangular `n × n` matrices (the incidence algebra of a chain).
pub fn upper_triangular_algebra<F: Field>(field: F, n: usize) -> Result<Algebra<F>> {
    let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
    incidence_algebra(field, &leq)
}

/// Self-injective Nakayama algebra: paths on a cyclic quiver with `k`
/// vertices, all paths of length `≥ len` set to zero. Basis `(i, l)` = path
/// of length `l` starting at vertex `i`, index `i·len + l`.
pub fn nakayama_algebra<F: Field>(field: F, k: usize, len: usize) -> Result<Algebra<F>> {
    if k == 0 || len == 0 {
        return Err(Error::Input("Nakayama algebra needs at least one vertex and length one".into()));
    }
    let labels = (0..k * len).map(|t| format!("p{}_{}", t / len, t % len)).collect();
    let unit = (0..k * len).map(|t| if t % len == 0 { field.one() } else { field.zero() }).collect();
    let one = field.one();
    Algebra::from_fn(field, labels, unit, |s, t| {
        let ((i, l), (j, m)) = ((s / len, s % len), (t / len, t % len));
        if (i + l) % k == j && l + m < len {
            vec![(i * len + l + m, one.clone())]
        } else {
            vec![]
        }
    })
}

/// `λ` = sum of the coefficients of the longest paths.
pub fn nakayama_form<F: Field>(field: &F, k: usize, len: usize) -> Vec<F::Elem> {
    (0..k * len).map(|t| if t % len == len - 1 { field.one() } else { field.zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};
    use crate::frobenius::dual_bases;

    #[test]
    fn families_validate() {
        let q = Rationals;
        assert!(matrix_algebra(q, 3).unwrap().validate().is_ok());
        assert!(upper_triangular_algebra(q, 3).unwrap().validate().is_ok());
        assert_eq!(upper_triangular_algebra(q, 3).unwrap().dim(), 6);
        let n = nakayama_algebra(q, 3, 2).unwrap();
        assert!(n.validate().is_ok());
        assert!(dual_bases(&n, &nakayama_form(&q, 3, 2)).is_ok());
        let f5 = PrimeField::new(5).unwrap();
        let t = twisted_group_ring(f5, 3, 4, &2).unwrap();
        assert_eq!(t.dim(), 12);
        assert!(dual_bases(&t, &t.basis_vector(4 * 2)).is_ok());
        assert!(twisted_group_ring(f5, 2, 2, &3).is_err());
    }

    #[test]
    fn smash_rejects_char_two() {
        let f2 = PrimeField::new(2).unwrap();
        assert!(matches!(smash_algebra(f2, 2), Err(Error::Input(_))));
        assert!(smash_algebra(Rationals, 1).is_err());
    }

    #[test]
    fn smash_three_has_dimension_six() {
        let q = Rationals;
        let a = smash_algebra(q, 3).unwrap();
        assert_eq!(a.labels(), ["1", "s", "x", "xs", "x^2", "x^2s"]);
        assert!(dual_bases(&a, &smash_form(&a, 3)).is_ok());
    }

    #[test]
    fn incidence_rejects_non_orders() {
        let q = Rationals;
        let cyc = vec![vec![true, true], vec![true, true]];
        assert!(incidence_algebra(q, &cyc).is_err());
    }
}
