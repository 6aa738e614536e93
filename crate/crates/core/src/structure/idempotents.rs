use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::radical::{lift_orthogonal, radical_subspace, RadicalData};
use crate::algebra::Algebra;
use crate::arith::{coprime_pieces, crt_idempotents, EchelonBuilder, Field, Subspace};
use crate::error::{Error, Result};

/// Default number of random elements tried per idempotent before giving up.
pub const RETRY_BUDGET: usize = 64;

/// Orthogonal primitive idempotents of `A`, their isomorphism classes and blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentData<E> {
    pub primitives: Vec<Vec<E>>,
    /// Indices into `primitives`, classes sorted by `(dim L, first index)`.
    pub classes: Vec<Vec<usize>>,
    /// `dim L(λ)`, equal to the class size.
    pub class_dims: Vec<usize>,
    /// Central primitive idempotents, ordered by the smallest class they contain.
    pub central: Vec<Vec<E>>,
    /// Block index of each class.
    pub block_of: Vec<usize>,
}

impl<E: Clone> IdempotentData<E> {
    pub fn labels(&self) -> Vec<String> {
        (0..self.classes.len()).map(|l| format!("L{l}")).collect()
    }

    /// One idempotent per class.
    pub fn representatives(&self) -> Vec<Vec<E>> {
        self.classes.iter().map(|c| self.primitives[c[0]].clone()).collect()
    }

    /// Class indices of each block.
    pub fn block_classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.central.len()];
        for (l, &b) in self.block_of.iter().enumerate() {
            out[b].push(l);
        }
        out
    }
}

/// `dim fAf`.
pub fn corner_dim<F: Field>(alg: &Algebra<F>, f: &[F::Elem]) -> usize {
    corner_space(alg, f).dim()
}

fn corner_space<F: Field>(alg: &Algebra<F>, f: &[F::Elem]) -> Subspace<F::Elem> {
    let mut b = EchelonBuilder::new(alg.field(), alg.dim());
    for k in 0..alg.dim() {
        let fe = alg.mul_basis_right(f, k);
        if !alg.is_zero(&fe) {
            b.insert(&alg.mul(&fe, f));
        }
    }
    b.finish()
}

/// Splits the idempotent `unit` of a commutative subalgebra `space` into
/// primitive idempotents of that subalgebra, using the minimal polynomial of
/// `f·z` in the corner `f` for every basis element `z`.
pub fn split_commutative<F: Field>(
    alg: &Algebra<F>,
    space: &Subspace<F::Elem>,
    unit: &[F::Elem],
) -> Result<Vec<Vec<F::Elem>>> {
    let f = alg.field();
    let mut idems = vec![unit.to_vec()];
    for z in space.vectors() {
        let mut next = Vec::with_capacity(idems.len());
        for e in idems {
            let y = alg.mul(&e, &z);
            let mp = alg.minimal_polynomial_in(&e, &y);
            let pieces = coprime_pieces(f, &mp);
            if pieces.has_cofactor {
                return Err(Error::NotSplit(format!(
                    "minimal polynomial {} of a central element has no root in {}",
                    mp.format(f),
                    f.spec()
                )));
            }
            if pieces.pieces.len() == 1 {
                next.push(e);
                continue;
            }
            for g in crt_idempotents(f, &pieces.pieces) {
                next.push(alg.eval_poly_in(&g, &e, &y));
            }
        }
        idems = next;
    }
    Ok(idems)
}

/// Central primitive idempotents of `A` (one per block), verified.
pub fn blocks<F: Field>(alg: &Algebra<F>) -> Result<Vec<Vec<F::Elem>>> {
    let f = alg.field();
    let z = alg.centre();
    let central = split_commutative(alg, &z, alg.unit())?;
    let zalg = alg.subalgebra(&z)?;
    let semisimple_dim = z.dim() - radical_subspace(&zalg)?.dim();
    if central.len() != semisimple_dim {
        return Err(Error::Internal(format!(
            "found {} central idempotents, centre has semisimple dimension {semisimple_dim}",
            central.len()
        )));
    }
    check_complete(alg, &central)?;
    if let Some(b) = central.iter().find(|b| !z.contains(f, b)) {
        return Err(Error::Internal(format!("{} is not central", alg.format_element(b))));
    }
    Ok(central)
}

/// Checks that `idems` are nonzero idempotents, pairwise orthogonal, summing to 1.
pub fn check_complete<F: Field>(alg: &Algebra<F>, idems: &[Vec<F::Elem>]) -> Result<()> {
    let mut sum = alg.zero();
    for (i, e) in idems.iter().enumerate() {
        if alg.is_zero(e) || !alg.is_idempotent(e) {
            return Err(Error::Input(format!("idempotent {i} ({}) is zero or not idempotent", alg.format_element(e))));
        }
        for (j, g) in idems.iter().enumerate() {
            if i != j && !alg.is_zero(&alg.mul(e, g)) {
                return Err(Error::Input(format!("idempotents {i} and {j} are not orthogonal")));
            }
        }
        sum = alg.add(&sum, e);
    }
    if sum != alg.unit() {
        return Err(Error::Input("idempotents do not sum to the unit".into()));
    }
    Ok(())
}

/// Primitive idempotents of `A`, classified, with blocks.
///
/// With `supplied` the list is verified (idempotent, orthogonal, complete,
/// primitive) and used as is. Otherwise the identity of `B = A/J` is split:
/// commutative `B` through its own minimal polynomials, noncommutative `B`
/// (prime fields only) through its centre and then random elements of each
/// corner, and the result is lifted through `J`.
pub fn primitive_decomposition<F: Field>(
    alg: &Algebra<F>,
    rad: &RadicalData<F>,
    supplied: Option<&[Vec<F::Elem>]>,
    seed: u64,
) -> Result<IdempotentData<F::Elem>> {
    let b = &rad.quotient;
    let primitives = match supplied {
        Some(list) => {
            if list.iter().any(|e| e.len() != alg.dim()) {
                return Err(Error::Input("supplied idempotent has the wrong length".into()));
            }
            check_complete(alg, list)?;
            for (i, e) in list.iter().enumerate() {
                let d = corner_dim(b, &rad.project(e));
                if d != 1 {
                    return Err(Error::NotSplit(format!(
                        "supplied idempotent {i} has dim eBe = {d}: it is not primitive or the algebra is not split"
                    )));
                }
            }
            list.to_vec()
        }
        None => {
            let ebars = if b.is_commutative() {
                split_commutative(b, &Subspace::full(b.field(), b.dim()), b.unit())?
            } else if b.field().characteristic() == 0 {
                return Err(Error::NeedsSuppliedData(
                    "the semisimple quotient is noncommutative; supply primitive idempotents over Q".into(),
                ));
            } else {
                split_noncommutative(b, seed)?
            };
            lift_orthogonal(alg, rad, &ebars)?
        }
    };
    classify(alg, rad, primitives)
}

fn split_noncommutative<F: Field>(b: &Algebra<F>, seed: u64) -> Result<Vec<Vec<F::Elem>>> {
    let f = b.field();
    let p = f.characteristic() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let central = split_commutative(b, &b.centre(), b.unit())?;
    let mut todo: Vec<Vec<F::Elem>> = central.into_iter().rev().collect();
    let mut done = Vec::new();
    while let Some(e) = todo.pop() {
        if corner_dim(b, &e) == 1 {
            done.push(e);
            continue;
        }
        let mut split = None;
        for _ in 0..RETRY_BUDGET {
            let r: Vec<F::Elem> = (0..b.dim()).map(|_| f.from_i64(rng.gen_range(0..p))).collect();
            let y = b.mul(&b.mul(&e, &r), &e);
            let mp = b.minimal_polynomial_in(&e, &y);
            let pieces = coprime_pieces(f, &mp);
            if pieces.pieces.len() > 1 {
                split = Some(
                    crt_idempotents(f, &pieces.pieces).iter().map(|g| b.eval_poly_in(g, &e, &y)).collect::<Vec<_>>(),
                );
                break;
            }
        }
        match split {
            Some(parts) => todo.extend(parts.into_iter().rev()),
            None => return Err(Error::RetryBudget { retries: RETRY_BUDGET, seed }),
        }
    }
    Ok(done)
}

fn classify<F: Field>(
    alg: &Algebra<F>,
    rad: &RadicalData<F>,
    primitives: Vec<Vec<F::Elem>>,
) -> Result<IdempotentData<F::Elem>> {
    let b = &rad.quotient;
    let bars: Vec<Vec<F::Elem>> = primitives.iter().map(|e| rad.project(e)).collect();
    let r = primitives.len();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    // left multiples B·ē_i, so ē_j B ē_i ≠ 0 iff ē_j kills none of them
    let left: Vec<Vec<Vec<F::Elem>>> =
        bars.iter().map(|e| (0..b.dim()).map(|k| b.mul_basis_left(k, e)).filter(|v| !b.is_zero(v)).collect()).collect();
    for i in 0..r {
        for j in 0..r {
            if i == j || find(&mut parent, i) == find(&mut parent, j) {
                continue;
            }
            if left[i].iter().any(|v| !b.is_zero(&b.mul(&bars[j], v))) {
                let (a, c) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(c)] = a.min(c);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..r {
        let root = find(&mut parent, i);
        match classes.iter_mut().find(|c| find(&mut parent, c[0]) == root) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes.sort_by_key(|c| (c.len(), c[0]));
    let class_dims: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    for (l, c) in classes.iter().enumerate() {
        let d = Subspace::from_vectors(b.field(), b.dim(), &left[c[0]]).dim();
        if d != c.len() {
            return Err(Error::NotSplit(format!("class L{l} has {} idempotents but dim B·e = {d}", c.len())));
        }
    }
    let central = blocks(alg)?;
    let mut block_of = Vec::with_capacity(classes.len());
    for c in &classes {
        let e = &primitives[c[0]];
        let hits: Vec<usize> = (0..central.len()).filter(|&j| !alg.is_zero(&alg.mul(&central[j], e))).collect();
        if hits.len() != 1 {
            return Err(Error::Internal("a primitive idempotent meets several blocks".into()));
        }
        block_of.push(hits[0]);
    }
    // order blocks by their first class
    let mut order: Vec<usize> = Vec::new();
    for &bk in &block_of {
        if !order.contains(&bk) {
            order.push(bk);
        }
    }
    if order.len() != central.len() {
        return Err(Error::Internal("a block contains no primitive idempotent".into()));
    }
    let central: Vec<Vec<F::Elem>> = order.iter().map(|&j| central[j].clone()).collect();
    let block_of = block_of.iter().map(|bk| order.iter().position(|o| o == bk).unwrap()).collect();
    Ok(IdempotentData { primitives, classes, class_dims, central, block_of })
}

/// `dim ē_λ B ē_λ = 1` for each class and `Σ_λ (dim B ē_λ)^2 = dim B`.
pub fn split_check<F: Field>(rad: &RadicalData<F>, idem: &IdempotentData<F::Elem>) -> Result<()> {
    let b = &rad.quotient;
    let mut total = 0;
    for (l, c) in idem.classes.iter().enumerate() {
        let e = rad.project(&idem.primitives[c[0]]);
        let d = corner_dim(b, &e);
        if d != 1 {
            return Err(Error::NotSplit(format!("class L{l} has dim eBe = {d}")));
        }
        let left = Subspace::from_vectors(b.field(), b.dim(), (0..b.dim()).map(|k| b.mul_basis_left(k, &e)));
        total += left.dim() * left.dim();
    }
    if total != b.dim() {
        return Err(Error::NotSplit(format!(
            "sum of squared simple dimensions is {total}, semisimple quotient has dimension {}",
            b.dim()
        )));
    }
    Ok(())
}
