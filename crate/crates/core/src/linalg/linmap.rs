//! Linear maps between tensor products of spaces.
//!
//! A [`LinMap`] records the dimensions of its domain and codomain factors, so
//! the same type carries plain matrices, multiplications `U ⊗ V → W`,
//! comultiplications `W → U ⊗ V`, units `k → A` (empty domain) and counits
//! `C → k` (empty codomain). Columns are indexed by the row-major flattened
//! domain index and hold sorted `(row, coefficient)` pairs with no zeros.

use std::collections::BTreeMap;

use super::scalar::{Field, Scalar};
use super::tensor::{flatten, unflatten, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    domain: Vec<usize>,
    codomain: Vec<usize>,
    columns: Vec<Vec<(usize, Scalar)>>,
}

/// Alias used where a map is read as structure constants `(i, j) ↦ Σ c_k w_k`.
pub type MultTensor = LinMap;

impl LinMap {
    pub fn zero(field: Field, domain: &[usize], codomain: &[usize]) -> LinMap {
        let n: usize = domain.iter().product();
        LinMap {
            field,
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            columns: vec![Vec::new(); n],
        }
    }

    pub fn identity(field: Field, dims: &[usize]) -> LinMap {
        let n: usize = dims.iter().product();
        LinMap {
            field,
            domain: dims.to_vec(),
            codomain: dims.to_vec(),
            columns: (0..n).map(|i| vec![(i, field.one())]).collect(),
        }
    }

    /// Builds a map from its values on basis multi-indices of the domain.
    pub fn from_fn(
        field: Field,
        domain: &[usize],
        codomain: &[usize],
        mut f: impl FnMut(&[usize]) -> Tensor,
    ) -> LinMap {
        let n: usize = domain.iter().product();
        let columns = (0..n)
            .map(|j| {
                let img = f(&unflatten(j, domain));
                assert_eq!(img.shape(), codomain, "from_fn image shape");
                img.terms()
                    .map(|(idx, c)| (flatten(idx, codomain), c.clone()))
                    .collect()
            })
            .collect();
        LinMap {
            field,
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            columns,
        }
    }

    /// Builds a map from `(domain flat index, codomain flat index, value)` triples;
    /// repeated positions are summed.
    pub fn from_entries(
        field: Field,
        domain: &[usize],
        codomain: &[usize],
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> LinMap {
        let n: usize = domain.iter().product();
        let mut cols: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n];
        for (j, i, c) in entries {
            let e = cols[j].entry(i).or_insert_with(|| field.zero());
            *e += &c;
        }
        LinMap {
            field,
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            columns: cols
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
                .collect(),
        }
    }

    /// The element `k → V` sending 1 to `v`.
    pub fn from_element(v: &Tensor) -> LinMap {
        LinMap::from_fn(v.field(), &[], v.shape(), |_| v.clone())
    }

    /// The functional `V → k` with the given dense coordinates.
    pub fn functional(field: Field, coords: &[Scalar]) -> LinMap {
        LinMap::from_fn(field, &[coords.len()], &[], |idx| {
            Tensor::scalar(field, coords[idx[0]].clone())
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn codomain(&self) -> &[usize] {
        &self.codomain
    }

    pub fn domain_dim(&self) -> usize {
        self.columns.len()
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain.iter().product()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    /// All nonzero entries as `(domain flat index, codomain flat index, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, c)| (j, *i, c)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Image of a domain basis multi-index.
    pub fn image(&self, idx: &[usize]) -> Tensor {
        let col = flatten(idx, &self.domain);
        Tensor::from_terms(
            self.field,
            &self.codomain,
            self.columns[col]
                .iter()
                .map(|(i, c)| (unflatten(*i, &self.codomain), c.clone())),
        )
    }

    /// Applies the map to a tensor whose shape equals the domain.
    pub fn apply(&self, t: &Tensor) -> Tensor {
        assert_eq!(t.shape(), self.domain.as_slice(), "apply shape");
        let axes: Vec<usize> = (0..self.domain.len()).collect();
        t.apply(&axes, self)
    }

    /// The same entries with the domain and codomain factor dims regrouped.
    pub fn reshaped(&self, domain: &[usize], codomain: &[usize]) -> LinMap {
        assert_eq!(domain.iter().product::<usize>(), self.domain_dim());
        assert_eq!(codomain.iter().product::<usize>(), self.codomain_dim());
        LinMap {
            field: self.field,
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            columns: self.columns.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.domain_dim(), other.codomain_dim(), "compose: dimension mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, c) in col {
                    for (i, v) in &self.columns[*k] {
                        let e = acc.entry(*i).or_insert_with(|| self.field.zero());
                        *e += &(c * v);
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        LinMap {
            field: self.field,
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            columns,
        }
    }

    /// `self ⊗ other` acting factorwise on `dom(self) ⊗ dom(other)`.
    pub fn kron(&self, other: &LinMap) -> LinMap {
        let mut domain = self.domain.clone();
        domain.extend_from_slice(&other.domain);
        let mut codomain = self.codomain.clone();
        codomain.extend_from_slice(&other.codomain);
        let (n2, m2) = (other.domain_dim(), other.codomain_dim());
        let mut columns = Vec::with_capacity(self.domain_dim() * n2);
        for a in &self.columns {
            for b in &other.columns {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (k, y) in b {
                        col.push((i * m2 + k, x * y));
                    }
                }
                col.sort_by_key(|(i, _)| *i);
                columns.push(col);
            }
        }
        LinMap {
            field: self.field,
            domain,
            codomain,
            columns,
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap::from_entries(
            self.field,
            &self.domain,
            &self.codomain,
            self.entries().map(|(j, i, v)| (j, i, v * c)),
        )
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.domain_dim(), other.domain_dim());
        assert_eq!(self.codomain_dim(), other.codomain_dim());
        LinMap::from_entries(
            self.field,
            &self.domain,
            &self.codomain,
            self.entries().chain(other.entries()).map(|(j, i, v)| (j, i, v.clone())),
        )
    }

    /// Exchanges the two domain factors of a bilinear map.
    pub fn swap_inputs(&self) -> LinMap {
        assert_eq!(self.domain.len(), 2, "swap_inputs needs two domain factors");
        let (a, b) = (self.domain[0], self.domain[1]);
        LinMap::from_fn(self.field, &[b, a], &self.codomain, |idx| self.image(&[idx[1], idx[0]]))
    }

    /// Inverse of a square map by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Option<LinMap> {
        let n = self.domain_dim();
        if self.codomain_dim() != n {
            return None;
        }
        let f = self.field;
        let mut a: Vec<Vec<Scalar>> = vec![vec![f.zero(); 2 * n]; n];
        for (j, i, c) in self.entries() {
            a[i][j] = c.clone();
        }
        for (i, row) in a.iter_mut().enumerate() {
            row[n + i] = f.one();
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            let inv = a[col][col].inv()?;
            for v in a[col].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for k in 0..2 * n {
                        let sub = &factor * &a[col][k];
                        a[r][k] = &a[r][k] - &sub;
                    }
                }
            }
        }
        Some(LinMap::from_entries(
            f,
            &self.codomain,
            &self.domain,
            (0..n).flat_map(|i| {
                let row = &a[i];
                (0..n).map(move |j| (j, i, row[n + j].clone()))
            }),
        ))
    }
}
