//! Sparse elements of tensor products of finite-dimensional spaces.
//!
//! A [`Tensor`] is an element of `V_1 ⊗ ... ⊗ V_n`, stored as a map from
//! multi-indices to nonzero coefficients. Every Sweedler-style expression in
//! the crate is evaluated by starting from basis tensors and applying
//! structure maps to selected axes with [`Tensor::apply`].

use std::collections::BTreeMap;
use std::fmt;

use super::linmap::LinMap;
use super::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    shape: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

/// Row-major flattening of a multi-index.
pub fn flatten(idx: &[usize], shape: &[usize]) -> usize {
    idx.iter().zip(shape).fold(0, |acc, (i, d)| acc * d + i)
}

/// Inverse of [`flatten`].
pub fn unflatten(mut flat: usize, shape: &[usize]) -> Vec<usize> {
    let mut out = vec![0; shape.len()];
    for k in (0..shape.len()).rev() {
        out[k] = flat % shape[k];
        flat /= shape[k];
    }
    out
}

impl Tensor {
    pub fn zero(field: Field, shape: &[usize]) -> Tensor {
        Tensor {
            field,
            shape: shape.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(field: Field, shape: &[usize], idx: &[usize]) -> Tensor {
        assert_eq!(shape.len(), idx.len(), "basis index rank");
        assert!(idx.iter().zip(shape).all(|(i, d)| i < d), "basis index out of range");
        let mut t = Tensor::zero(field, shape);
        t.terms.insert(idx.to_vec(), field.one());
        t
    }

    /// The scalar `c` as a rank-0 tensor.
    pub fn scalar(field: Field, c: Scalar) -> Tensor {
        let mut t = Tensor::zero(field, &[]);
        t.add_term(vec![], c);
        t
    }

    /// A vector in a single space from dense coordinates.
    pub fn from_dense(field: Field, coords: &[Scalar]) -> Tensor {
        let mut t = Tensor::zero(field, &[coords.len()]);
        for (i, c) in coords.iter().enumerate() {
            t.add_term(vec![i], c.clone());
        }
        t
    }

    pub fn from_terms(field: Field, shape: &[usize], terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>) -> Tensor {
        let mut t = Tensor::zero(field, shape);
        for (idx, c) in terms {
            assert_eq!(idx.len(), shape.len(), "term rank");
            t.add_term(idx, c);
        }
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Value of a rank-0 tensor.
    pub fn to_scalar(&self) -> Scalar {
        assert!(self.shape.is_empty(), "to_scalar on tensor of rank {}", self.rank());
        self.get(&[])
    }

    /// Dense coordinates of a rank-1 tensor.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let n: usize = self.shape.iter().product();
        let mut out = vec![self.field.zero(); n];
        for (idx, c) in &self.terms {
            out[flatten(idx, &self.shape)] = c.clone();
        }
        out
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.shape, other.shape, "adding tensors of different shapes");
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.field, &self.shape);
        if c.is_zero() {
            return out;
        }
        for (idx, v) in &self.terms {
            out.terms.insert(idx.clone(), v * c);
        }
        out
    }

    /// `self ⊗ other`, axes of `self` first.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut shape = self.shape.clone();
        shape.extend_from_slice(&other.shape);
        let mut out = Tensor::zero(self.field, &shape);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.terms.insert(idx, x * y);
            }
        }
        out
    }

    /// Reorders axes: axis `k` of the result is axis `order[k]` of `self`.
    pub fn permute(&self, order: &[usize]) -> Tensor {
        assert_eq!(order.len(), self.rank(), "permutation rank");
        let shape: Vec<usize> = order.iter().map(|&k| self.shape[k]).collect();
        let mut out = Tensor::zero(self.field, &shape);
        for (idx, c) in &self.terms {
            let new: Vec<usize> = order.iter().map(|&k| idx[k]).collect();
            out.terms.insert(new, c.clone());
        }
        out
    }

    /// Reinterprets the coordinates under a new shape with the same total size,
    /// using row-major flattening on both sides.
    pub fn reshape(&self, shape: &[usize]) -> Tensor {
        let old: usize = self.shape.iter().product();
        let new: usize = shape.iter().product();
        assert_eq!(old, new, "reshape size");
        let mut out = Tensor::zero(self.field, shape);
        for (idx, c) in &self.terms {
            out.terms.insert(unflatten(flatten(idx, &self.shape), shape), c.clone());
        }
        out
    }

    /// Applies `map` to the listed axes (in the order of the map's domain
    /// factors). The codomain factors replace the consumed axes and are
    /// inserted where the first listed axis was; with no axes listed they are
    /// appended.
    pub fn apply(&self, axes: &[usize], map: &LinMap) -> Tensor {
        assert_eq!(axes.len(), map.domain().len(), "axis count vs map domain");
        for (k, &a) in axes.iter().enumerate() {
            assert_eq!(
                self.shape[a],
                map.domain()[k],
                "axis {a} has dim {} but map expects {}",
                self.shape[a],
                map.domain()[k]
            );
        }
        let rest: Vec<usize> = (0..self.rank()).filter(|k| !axes.contains(k)).collect();
        let pos = match axes.first() {
            Some(&first) => rest.iter().filter(|&&k| k < first).count(),
            None => rest.len(),
        };
        let cod = map.codomain();
        let mut shape: Vec<usize> = rest[..pos].iter().map(|&k| self.shape[k]).collect();
        shape.extend_from_slice(cod);
        shape.extend(rest[pos..].iter().map(|&k| self.shape[k]));
        let mut out = Tensor::zero(self.field, &shape);
        let dom = map.domain();
        for (idx, c) in &self.terms {
            let sel: Vec<usize> = axes.iter().map(|&a| idx[a]).collect();
            let col = flatten(&sel, dom);
            for (row, v) in map.column(col) {
                let mut new: Vec<usize> = rest[..pos].iter().map(|&k| idx[k]).collect();
                new.extend(unflatten(*row, cod));
                new.extend(rest[pos..].iter().map(|&k| idx[k]));
                out.add_term(new, c * v);
            }
        }
        out
    }

    /// Applies `map` to axis `axis` only.
    pub fn map_axis(&self, axis: usize, map: &LinMap) -> Tensor {
        self.apply(&[axis], map)
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "{c}·[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn flatten_roundtrip() {
        let shape = [2, 3, 4];
        for n in 0..24 {
            assert_eq!(flatten(&unflatten(n, &shape), &shape), n);
        }
        assert_eq!(flatten(&[1, 0, 2], &shape), 14);
    }

    #[test]
    fn apply_inserts_codomain_at_first_axis() {
        // addition mod 2 merging axes 3 and 1; the result sits where axis 3 was
        let add = LinMap::from_fn(Q, &[2, 2], &[2], |idx| Tensor::basis(Q, &[2], &[(idx[0] + idx[1]) % 2]));
        let t = Tensor::basis(Q, &[3, 2, 5, 2], &[2, 1, 4, 1]);
        let r = t.apply(&[3, 1], &add);
        assert_eq!(r.shape(), &[3, 5, 2]);
        assert_eq!(r, Tensor::basis(Q, &[3, 5, 2], &[2, 4, 0]));
    }

    #[test]
    fn outer_permute_reshape() {
        let a = Tensor::basis(Q, &[2], &[1]);
        let b = Tensor::basis(Q, &[3], &[2]);
        let ab = a.outer(&b);
        assert_eq!(ab.permute(&[1, 0]), b.outer(&a));
        assert_eq!(ab.reshape(&[6]), Tensor::basis(Q, &[6], &[5]));
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = Tensor::basis(Q, &[2], &[0]);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a).nnz(), 0);
    }
}
