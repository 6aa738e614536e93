use super::idempotents::split_commutative;
use super::radical::RadicalData;
use crate::algebra::Algebra;
use crate::arith::{Field, Subspace};
use crate::error::{Error, Result};

/// Left socle `{a : J·a = 0}`.
pub fn socle<F: Field>(alg: &Algebra<F>, rad: &RadicalData<F>) -> Subspace<F::Elem> {
    annihilated_by(alg, &rad.radical.vectors(), &Subspace::full(alg.field(), alg.dim()))
}

fn annihilated_by<F: Field>(
    alg: &Algebra<F>,
    elements: &[Vec<F::Elem>],
    within: &Subspace<F::Elem>,
) -> Subspace<F::Elem> {
    let f = alg.field();
    let mut space = within.clone();
    for r in elements {
        if space.is_zero() {
            break;
        }
        space = space.kernel_within(f, |v| alg.mul(r, v));
    }
    space
}

/// Radical of a commutative unital subalgebra: the common kernel of its
/// characters, read off from its primitive idempotents.
pub fn commutative_radical<F: Field>(alg: &Algebra<F>, sub: &Subspace<F::Elem>) -> Result<Subspace<F::Elem>> {
    let f = alg.field();
    check_commutative_subalgebra(alg, sub)?;
    let idems = split_commutative(alg, sub, alg.unit())?;
    let basis = sub.vectors();
    // χ_i(z_k): the only root of the minimal polynomial of e_i z_k in the corner e_i
    let mut chars: Vec<Vec<F::Elem>> = Vec::with_capacity(idems.len());
    for e in &idems {
        let mut row = Vec::with_capacity(basis.len());
        for z in &basis {
            let y = alg.mul(e, z);
            let roots = f.roots(&alg.minimal_polynomial_in(e, &y));
            if roots.len() != 1 {
                return Err(Error::Internal("corner of a commutative subalgebra is not local".into()));
            }
            row.push(roots[0].0.clone());
        }
        chars.push(row);
    }
    let coords = Subspace::full(f, basis.len()).kernel_within(f, |c| {
        chars
            .iter()
            .map(|row| {
                let mut t = f.zero();
                for (a, b) in row.iter().zip(c) {
                    f.add_mul_assign(&mut t, a, b);
                }
                t
            })
            .collect()
    });
    Ok(Subspace::from_vectors(f, alg.dim(), coords.vectors().iter().map(|c| sub.combine(f, c))))
}

fn check_commutative_subalgebra<F: Field>(alg: &Algebra<F>, sub: &Subspace<F::Elem>) -> Result<()> {
    if !alg.is_subalgebra(sub) {
        return Err(Error::Input("subspace is not a unital subalgebra".into()));
    }
    let vs = sub.vectors();
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            if !alg.is_zero(&alg.commutator(a, b)) {
                return Err(Error::Input("subalgebra is not commutative".into()));
            }
        }
    }
    Ok(())
}

/// Socle of `module` over a commutative subalgebra, with its length.
#[derive(Clone, Debug, PartialEq)]
pub struct SocleOver<E> {
    pub space: Subspace<E>,
    /// Composition length; simple modules are one-dimensional here.
    pub length: usize,
}

/// `{v ∈ module : rad(sub)·v = 0}` for a commutative subalgebra `sub`
/// stabilising `module`.
pub fn socle_over<F: Field>(
    alg: &Algebra<F>,
    sub: &Subspace<F::Elem>,
    module: &Subspace<F::Elem>,
) -> Result<SocleOver<F::Elem>> {
    let f = alg.field();
    let rad = commutative_radical(alg, sub)?;
    for z in sub.vectors() {
        for v in module.vectors() {
            if !module.contains(f, &alg.mul(&z, &v)) {
                return Err(Error::Input("module is not stable under the subalgebra".into()));
            }
        }
    }
    let space = annihilated_by(alg, &rad.vectors(), module);
    Ok(SocleOver { length: space.dim(), space })
}
