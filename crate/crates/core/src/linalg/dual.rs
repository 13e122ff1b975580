//! Finite dual bases. The dual space reuses the primal index set: `δ_i` is
//! stored under index `i`.

use super::scalar::Field;
use super::space::Space;
use super::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    pub space: Space,
}

pub fn dual_basis(space: &Space) -> DualBasis {
    DualBasis { space: space.clone() }
}

impl DualBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `δ_i(e_j)`.
    pub fn eval_basis(&self, field: Field, i: usize, j: usize) -> crate::Scalar {
        if i == j {
            field.one()
        } else {
            field.zero()
        }
    }

    /// `ξ(v)` for a functional and a vector given in coordinates.
    pub fn pair(&self, xi: &Tensor, v: &Tensor) -> crate::Scalar {
        let f = xi.field();
        let mut acc = f.zero();
        for (idx, c) in v.terms() {
            acc += &(c * &xi.get(idx));
        }
        acc
    }

    /// The canonical element `Σ_i δ_i ⊗ e_i` of `V* ⊗ V`.
    pub fn canonical_element(&self, field: Field) -> Tensor {
        let d = self.dim();
        Tensor::from_terms(field, &[d, d], (0..d).map(|i| (vec![i, i], field.one())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstruction_identities() {
        let q = Field::Rational;
        let db = dual_basis(&Space::numbered("V", "e", 2));
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(db.eval_basis(q, i, j), if i == j { q.one() } else { q.zero() });
            }
        }
        // c = Σ δ_i(c) e_i and ξ = Σ ξ(e_i) δ_i
        let c = Tensor::from_dense(q, &[q.int(4), q.int(-1)]);
        let mut rebuilt = Tensor::zero(q, &[2]);
        for i in 0..2 {
            let di = Tensor::basis(q, &[2], &[i]);
            rebuilt = rebuilt.add(&Tensor::basis(q, &[2], &[i]).scale(&db.pair(&di, &c)));
        }
        assert_eq!(rebuilt, c);
        let xi = Tensor::from_dense(q, &[q.one(), q.int(3)]);
        let mut rebuilt = Tensor::zero(q, &[2]);
        for i in 0..2 {
            let ei = Tensor::basis(q, &[2], &[i]);
            rebuilt = rebuilt.add(&Tensor::basis(q, &[2], &[i]).scale(&db.pair(&xi, &ei)));
        }
        assert_eq!(rebuilt, xi);
        assert_eq!(db.canonical_element(q).nnz(), 2);
    }
}
