use super::Algebra;
use crate::arith::{rank, Field, Matrix, Subspace};
use crate::error::{Error, Result, Violation};

/// A left module: one `m × m` action matrix per algebra basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulePresentation<F: Field> {
    pub name: String,
    dim: usize,
    action: Vec<Matrix<F::Elem>>,
}

impl<F: Field> ModulePresentation<F> {
    pub fn new(alg: &Algebra<F>, name: impl Into<String>, action: Vec<Matrix<F::Elem>>) -> Result<Self> {
        let name = name.into();
        if action.len() != alg.dim() {
            return Err(Error::Input(format!(
                "module `{name}` has {} action matrices, algebra has dimension {}",
                action.len(),
                alg.dim()
            )));
        }
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        for (i, m) in action.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Input(format!(
                    "module `{name}`: action matrix {i} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Self { name, dim, action })
    }

    /// The left regular module `A` acting on itself.
    pub fn regular(alg: &Algebra<F>) -> Self {
        let action = alg.regular_representation(super::Side::Left);
        Self { name: "regular".into(), dim: alg.dim(), action }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix<F::Elem>] {
        &self.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, field: &F, a: &[F::Elem]) -> Matrix<F::Elem> {
        let mut out = Matrix::zeros(field, self.dim, self.dim);
        for (c, m) in a.iter().zip(&self.action) {
            out.add_scaled(field, c, m);
        }
        out
    }

    /// Checks `ρ_i ρ_j = Σ_k c_{ij}^k ρ_k` for all pairs and `ρ(1) = I`.
    pub fn validate(&self, alg: &Algebra<F>) -> Result<(), Violation> {
        let f = alg.field();
        let fmt = |m: &Matrix<F::Elem>| format!("{:?}", m.format(f));
        let unit = self.act(f, alg.unit());
        let id = Matrix::identity(f, self.dim);
        if unit != id {
            return Err(Violation {
                identity: format!("module `{}` unit action", self.name),
                indices: vec![],
                location: "ρ(1)".into(),
                lhs: fmt(&unit),
                rhs: fmt(&id),
            });
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = self.action[i].mul(f, &self.action[j]);
                let mut rhs = Matrix::zeros(f, self.dim, self.dim);
                for (k, c) in alg.product(i, j) {
                    rhs.add_scaled(f, c, &self.action[*k]);
                }
                if lhs != rhs {
                    return Err(Violation {
                        identity: format!("module `{}` relation", self.name),
                        indices: vec![i, j],
                        location: format!("({i}, {j}) = ({}, {})", alg.labels()[i], alg.labels()[j]),
                        lhs: fmt(&lhs),
                        rhs: fmt(&rhs),
                    });
                }
            }
        }
        Ok(())
    }
}

/// All `T: M1 → M2` with `T ρ¹_i = ρ²_i T`, flattened row-major (`T` is `dim M2 × dim M1`).
pub fn hom_space<F: Field>(
    alg: &Algebra<F>,
    m1: &ModulePresentation<F>,
    m2: &ModulePresentation<F>,
) -> Result<Subspace<F::Elem>> {
    if m1.action.len() != alg.dim() || m2.action.len() != alg.dim() {
        return Err(Error::Input("modules belong to different algebras".into()));
    }
    let f = alg.field();
    let (d1, d2) = (m1.dim, m2.dim);
    let mut space = Subspace::full(f, d1 * d2);
    for i in 0..alg.dim() {
        if space.is_zero() {
            break;
        }
        space = space.kernel_within(f, |t| {
            let t = Matrix::from_vec(d2, d1, t.to_vec()).unwrap();
            t.mul(f, &m1.action[i]).sub(f, &m2.action[i].mul(f, &t)).into_data()
        });
    }
    Ok(space)
}

/// `dim e·M`; for a primitive idempotent of a split algebra this is the
/// composition multiplicity of the corresponding simple module in `M`.
pub fn idempotent_multiplicity<F: Field>(
    alg: &Algebra<F>,
    e: &[F::Elem],
    module: &ModulePresentation<F>,
) -> Result<usize> {
    if e.len() != alg.dim() {
        return Err(Error::Input("idempotent does not belong to the algebra".into()));
    }
    if !alg.is_idempotent(e) {
        return Err(Error::Input(format!("{} is not idempotent", alg.format_element(e))));
    }
    Ok(rank(alg.field(), &module.act(alg.field(), e)))
}
