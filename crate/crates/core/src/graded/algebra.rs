//! Algebras graded by a discrete Doi-Hopf datum `(G, Λ, X)`.

use std::collections::BTreeMap;

use crate::discrete::DiscreteDatum;
use crate::error::{Error, Result};
use crate::idx;
use crate::linalg::{Field, LinMap, Space, Tensor};
use crate::report::ValidationReport;

/// `A = ⊕ A_{λ,x}` with component `(λ, x)` at index `λ·|X| + x`.
///
/// `mult[(c, c')]` maps `A_c ⊗ A_{c'}` into `A_{λλ',x'}`; pairs with
/// `x' ≠ xγ(λ')` are normally absent and an absent entry is the zero map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub datum: DiscreteDatum,
    pub field: Field,
    pub spaces: Vec<Space>,
    pub mult: BTreeMap<(usize, usize), LinMap>,
    /// `1_x ∈ A_{e,x}`.
    pub units: Vec<Option<Tensor>>,
}

impl GradedAlgebra {
    pub fn nx(&self) -> usize {
        self.datum.x.len()
    }

    pub fn ncomp(&self) -> usize {
        self.datum.lambda.order() * self.nx()
    }

    pub fn comp(&self, l: usize, x: usize) -> usize {
        l * self.nx() + x
    }

    pub fn split(&self, c: usize) -> (usize, usize) {
        (c / self.nx(), c % self.nx())
    }

    pub fn comp_label(&self, c: usize) -> String {
        let (l, x) = self.split(c);
        format!("{}|{}", self.datum.lambda.label(l), self.datum.x.label(x))
    }

    pub fn dim(&self, c: usize) -> usize {
        self.spaces[c].dim()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Space::dim).sum()
    }

    pub fn basis(&self, c: usize, i: usize) -> Tensor {
        Tensor::basis(self.field, &[self.dim(c)], &[i])
    }

    /// Component receiving `A_c A_{c'}`: `(λλ', x')`.
    pub fn target(&self, c: usize, c2: usize) -> usize {
        let ((l, _), (l2, x2)) = (self.split(c), self.split(c2));
        self.comp(self.datum.lambda.mul(l, l2), x2)
    }

    /// `x' = xγ(λ')`.
    pub fn composable(&self, c: usize, c2: usize) -> bool {
        let ((_, x), (l2, x2)) = (self.split(c), self.split(c2));
        self.datum.shift(x, l2) == x2
    }

    /// Product of `a ∈ A_c` and `b ∈ A_{c'}` as an element of `A_{target(c,c')}`.
    pub fn mul(&self, c: usize, c2: usize, a: &Tensor, b: &Tensor) -> Tensor {
        match self.mult.get(&(c, c2)) {
            Some(m) => a.outer(b).apply(&[0, 1], m),
            None => Tensor::zero(self.field, &[self.dim(self.target(c, c2))]),
        }
    }

    pub fn unit(&self, x: usize) -> Option<&Tensor> {
        self.units.get(x).and_then(Option::as_ref)
    }

    pub fn unit_comp(&self, x: usize) -> usize {
        self.comp(self.datum.lambda.e(), x)
    }

    pub fn check_shapes(&self) -> Result<()> {
        if self.spaces.len() != self.ncomp() || self.units.len() != self.nx() {
            return Err(Error::ShapeMismatch(
                "one space per (λ,x) and one unit slot per x expected".into(),
            ));
        }
        for (&(c, c2), m) in &self.mult {
            if c >= self.ncomp() || c2 >= self.ncomp() {
                return Err(Error::ShapeMismatch(format!("product key ({c},{c2}) out of range")));
            }
            if m.domain() != [self.dim(c), self.dim(c2)] || m.codomain() != [self.dim(self.target(c, c2))] {
                return Err(Error::ShapeMismatch(format!(
                    "product {} · {} has the wrong shape",
                    self.comp_label(c),
                    self.comp_label(c2)
                )));
            }
        }
        for x in 0..self.nx() {
            if let Some(u) = self.unit(x) {
                if u.shape() != [self.dim(self.unit_comp(x))] {
                    return Err(Error::ShapeMismatch(format!(
                        "1_{} has the wrong shape",
                        self.datum.x.label(x)
                    )));
                }
            }
        }
        Ok(())
    }

    fn idx2(&self, c: usize, c2: usize) -> impl FnOnce() -> Vec<String> {
        let (a, b) = (self.comp_label(c), self.comp_label(c2));
        move || vec![format!("(λ,x)={a}"), format!("(λ',x')={b}")]
    }
}

/// Grading, associativity on composable basis triples and the local unit laws
/// `a1_x = a` (`a ∈ A_{λ,x}`) and `1_xb = b` (`b ∈ A_{λ,xγ(λ)}`).
pub fn check_graded_algebra(a: &GradedAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new();
    if let Err(e) = a.check_shapes() {
        r.check("graded.shape", "components, products and units well formed")
            .require(false, Vec::new, || (e.to_string(), String::new()));
        return r;
    }
    let n = a.ncomp();
    for (&(c, c2), m) in &a.mult {
        if !a.composable(c, c2) {
            r.check("graded.grading", "A_{λ,x}A_{λ',x'} ⊆ δ_{x',xγ(λ')}A_{λλ',x'}")
                .require(m.is_zero(), a.idx2(c, c2), || ("nonzero product".into(), "0".into()));
        }
    }
    for c in 0..n {
        for c2 in (0..n).filter(|&c2| a.composable(c, c2)) {
            let t = a.target(c, c2);
            for c3 in (0..n).filter(|&c3| a.composable(c2, c3)) {
                let t23 = a.target(c2, c3);
                for i in 0..a.dim(c) {
                    let x = a.basis(c, i);
                    for j in 0..a.dim(c2) {
                        let y = a.basis(c2, j);
                        let xy = a.mul(c, c2, &x, &y);
                        for k in 0..a.dim(c3) {
                            let z = a.basis(c3, k);
                            let lhs = a.mul(t, c3, &xy, &z);
                            let rhs = a.mul(c, t23, &x, &a.mul(c2, c3, &y, &z));
                            r.check("graded.associativity", "(ab)c = a(bc)").compare(
                                idx!(
                                    "A" = a.comp_label(c),
                                    "B" = a.comp_label(c2),
                                    "C" = a.comp_label(c3),
                                    "a" = i,
                                    "b" = j,
                                    "c" = k
                                ),
                                &lhs,
                                &rhs,
                            );
                        }
                    }
                }
            }
        }
    }
    let lm = &a.datum.lambda;
    for x in 0..a.nx() {
        let ux = a.unit_comp(x);
        let Some(one) = a.unit(x) else {
            let at = idx!("λ" = lm.label(lm.e()), "x" = a.datum.x.label(x));
            r.check("graded.right_unit", "a1_x = a for a ∈ A_{λ,x}")
                .require(false, at, || ("1_x missing".into(), String::new()));
            r.check("graded.left_unit", "1_xb = b for b ∈ A_{λ,xγ(λ)}").require(
                false,
                idx!("λ" = lm.label(lm.e()), "x" = a.datum.x.label(x)),
                || ("1_x missing".into(), String::new()),
            );
            continue;
        };
        for l in 0..lm.order() {
            let c = a.comp(l, x);
            for i in 0..a.dim(c) {
                let v = a.basis(c, i);
                r.check("graded.right_unit", "a1_x = a for a ∈ A_{λ,x}").compare(
                    idx!("A" = a.comp_label(c), "a" = i),
                    &a.mul(c, ux, &v, one),
                    &v,
                );
            }
            let c = a.comp(l, a.datum.shift(x, l));
            for i in 0..a.dim(c) {
                let v = a.basis(c, i);
                r.check("graded.left_unit", "1_xb = b for b ∈ A_{λ,xγ(λ)}").compare(
                    idx!("x" = a.datum.x.label(x), "B" = a.comp_label(c), "b" = i),
                    &a.mul(ux, c, one, &v),
                    &v,
                );
            }
        }
    }
    r
}

/// Local unit structure: `1_x1_y = δ_{x,y}1_x`, and the characterization of
/// the grading through the Λ-graded collapse `A_λ = ⊕_x A_{λ,x}`: associativity
/// of the collapsed product, `1 = Σ1_x` a two-sided unit,
/// `A_{λ,x}1_{x'} = δ_{x,x'}A_{λ,x}` and `1_xA_{λ',x'} = δ_{x',xγ(λ')}A_{λ',x'}`.
/// Needs `G` or `Λ` to be a group.
pub fn local_units_report(a: &GradedAlgebra) -> Result<ValidationReport> {
    if a.datum.g_group().is_err() && a.datum.lambda_group().is_err() {
        return Err(Error::NotAGroup("neither G nor Λ is a group".into()));
    }
    a.check_shapes()?;
    let mut r = ValidationReport::new();
    let xs = &a.datum.x;
    let f = a.field;
    let units: Vec<Tensor> = (0..a.nx())
        .map(|x| {
            a.unit(x)
                .cloned()
                .unwrap_or_else(|| Tensor::zero(f, &[a.dim(a.unit_comp(x))]))
        })
        .collect();
    for x in 0..a.nx() {
        for y in 0..a.nx() {
            let (cx, cy) = (a.unit_comp(x), a.unit_comp(y));
            let lhs = a.mul(cx, cy, &units[x], &units[y]);
            let rhs = if x == y {
                units[x].clone()
            } else {
                Tensor::zero(f, lhs.shape())
            };
            r.check("local_units.orthogonal", "1_x1_y = δ_{x,y}1_x").compare(
                idx!("x" = xs.label(x), "y" = xs.label(y)),
                &lhs,
                &rhs,
            );
        }
    }
    let n = a.ncomp();
    for c in 0..n {
        for c2 in 0..n {
            let t = a.target(c, c2);
            for c3 in 0..n {
                if !a.mult.contains_key(&(c, c2)) && !a.mult.contains_key(&(c2, c3)) {
                    continue;
                }
                let t23 = a.target(c2, c3);
                for i in 0..a.dim(c) {
                    for j in 0..a.dim(c2) {
                        let (x, y) = (a.basis(c, i), a.basis(c2, j));
                        let xy = a.mul(c, c2, &x, &y);
                        for k in 0..a.dim(c3) {
                            let z = a.basis(c3, k);
                            let lhs = a.mul(t, c3, &xy, &z);
                            let rhs = a.mul(c, t23, &x, &a.mul(c2, c3, &y, &z));
                            r.check("collapse.associativity", "(ab)c = a(bc) in ⊕_λ A_λ").compare(
                                idx!(
                                    "A" = a.comp_label(c),
                                    "B" = a.comp_label(c2),
                                    "C" = a.comp_label(c3),
                                    "a" = i,
                                    "b" = j,
                                    "c" = k
                                ),
                                &lhs,
                                &rhs,
                            );
                        }
                    }
                }
            }
        }
    }
    for c in 0..n {
        let (l, x) = a.split(c);
        for i in 0..a.dim(c) {
            let v = a.basis(c, i);
            let mut right = Tensor::zero(f, &[a.dim(c)]);
            let mut left = Tensor::zero(f, &[a.dim(c)]);
            for x2 in 0..a.nx() {
                let u = a.unit_comp(x2);
                let vr = a.mul(c, u, &v, &units[x2]);
                let expect = if x2 == x {
                    v.clone()
                } else {
                    Tensor::zero(f, &[a.dim(c)])
                };
                r.check("collapse.right_idempotent", "A_{λ,x}1_{x'} = δ_{x,x'}A_{λ,x}")
                    .compare(idx!("A" = a.comp_label(c), "a" = i, "x'" = xs.label(x2)), &vr, &expect);
                right = right.add(&vr);
                // 1_{x2} lands in component (λ, x) whatever x2 is
                let vl = a.mul(u, c, &units[x2], &v);
                let expect = if a.datum.shift(x2, l) == x {
                    v.clone()
                } else {
                    Tensor::zero(f, &[a.dim(c)])
                };
                r.check("collapse.left_idempotent", "1_xA_{λ',x'} = δ_{x',xγ(λ')}A_{λ',x'}")
                    .compare(idx!("x" = xs.label(x2), "B" = a.comp_label(c), "b" = i), &vl, &expect);
                left = left.add(&vl);
            }
            let rec = r.check("collapse.unit", "1 = Σ_x 1_x is a two-sided unit");
            rec.compare(idx!("A" = a.comp_label(c), "a" = i, "side" = "right"), &right, &v);
            rec.compare(idx!("A" = a.comp_label(c), "a" = i, "side" = "left"), &left, &v);
        }
    }
    Ok(r)
}

/// Dimensions of the Λ-graded collapse `A_λ = ⊕_x A_{λ,x}`.
pub fn collapse_dims(a: &GradedAlgebra) -> Vec<usize> {
    (0..a.datum.lambda.order())
        .map(|l| (0..a.nx()).map(|x| a.dim(a.comp(l, x))).sum())
        .collect()
}

/// One map per component between two algebras over the same datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub maps: Vec<LinMap>,
}

impl GradedMap {
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        GradedMap {
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.compose(b)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.maps
            .iter()
            .all(|m| *m == LinMap::identity(m.field(), &[m.domain_dim()]))
    }
}

/// `φ(uv) = φ(u)φ(v)` on composable basis pairs and `φ(1_x) = 1'_x`.
pub fn check_graded_algebra_map(src: &GradedAlgebra, dst: &GradedAlgebra, phi: &GradedMap) -> ValidationReport {
    let mut r = ValidationReport::new();
    let n = src.ncomp();
    for c in 0..n {
        for c2 in (0..n).filter(|&c2| src.composable(c, c2)) {
            let t = src.target(c, c2);
            for i in 0..src.dim(c) {
                for j in 0..src.dim(c2) {
                    let (u, v) = (src.basis(c, i), src.basis(c2, j));
                    let lhs = phi.maps[t].apply(&src.mul(c, c2, &u, &v));
                    let rhs = dst.mul(c, c2, &phi.maps[c].apply(&u), &phi.maps[c2].apply(&v));
                    r.check("graded_map.multiplicative", "φ(uv) = φ(u)φ(v)").compare(
                        idx!("A" = src.comp_label(c), "B" = src.comp_label(c2), "u" = i, "v" = j),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    for x in 0..src.nx() {
        let ok = match (src.unit(x), dst.unit(x)) {
            (Some(u), Some(w)) => phi.maps[src.unit_comp(x)].apply(u) == *w,
            _ => false,
        };
        r.check("graded_map.unital", "φ(1_x) = 1_x")
            .require(ok, idx!("x" = src.datum.x.label(x)), || {
                ("unit not preserved".into(), String::new())
            });
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrete::{FiniteGroup, FiniteMonoid, RightGSet};
    use crate::graded::fixtures::{kc2_double, trivial_double};
    use crate::graded::smash::{dual_smash, koppinen_smash};

    fn ground() -> GradedAlgebra {
        let q = Field::Rational;
        let mut mult = BTreeMap::new();
        mult.insert((0, 0), LinMap::identity(q, &[1]).reshaped(&[1, 1], &[1]));
        GradedAlgebra {
            datum: DiscreteDatum::point(),
            field: q,
            spaces: vec![Space::numbered("k", "e", 1)],
            mult,
            units: vec![Some(Tensor::basis(q, &[1], &[0]))],
        }
    }

    #[test]
    fn ground_field_is_graded() {
        let a = ground();
        assert!(check_graded_algebra(&a).passed());
        assert!(local_units_report(&a).unwrap().passed());
        assert_eq!(collapse_dims(&a), vec![1]);
    }

    #[test]
    fn deleting_a_unit_breaks_the_unit_law_at_e_x() {
        let mut a = dual_smash(&kc2_double()).unwrap();
        a.units[1] = None;
        let r = check_graded_algebra(&a);
        let rec = r.record("graded.right_unit").unwrap();
        assert!(!rec.passed());
        let at = vec![
            format!("λ={}", a.datum.lambda.label(0)),
            format!("x={}", a.datum.x.label(1)),
        ];
        assert_eq!(
            rec.witnesses,
            vec![crate::Witness {
                index: at,
                lhs: "1_x missing".into(),
                rhs: String::new()
            }]
        );
        assert!(r.fails("graded.left_unit"));
        assert!(r.record("graded.associativity").unwrap().passed());
    }

    #[test]
    fn trivial_double_has_orthogonal_idempotents() {
        let a = dual_smash(&trivial_double(&FiniteGroup::cyclic(2))).unwrap();
        assert_eq!(a.nx(), 2);
        let r = local_units_report(&a).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.record("local_units.orthogonal").unwrap().instances, 4);
        assert_eq!(collapse_dims(&a), vec![2, 2]);
    }

    #[test]
    fn collapse_characterization_agrees_with_graded_axioms() {
        let d = kc2_double();
        for a in [dual_smash(&d).unwrap(), koppinen_smash(&d).unwrap()] {
            assert!(check_graded_algebra(&a).passed());
            assert!(local_units_report(&a).unwrap().passed());
        }
        // doubling one product breaks associativity on both sides
        let mut a = dual_smash(&d).unwrap();
        let key = *a
            .mult
            .keys()
            .find(|&&(c, c2)| c != c2 && !a.mult[&(c, c2)].is_zero())
            .unwrap();
        let m = a.mult[&key].scale(&Field::Rational.int(2));
        a.mult.insert(key, m);
        assert!(!check_graded_algebra(&a).passed());
        assert!(!local_units_report(&a).unwrap().passed());
    }

    #[test]
    fn monoid_data_are_rejected() {
        let m = FiniteMonoid::from_labels(&["e", "z"], &[vec!["e", "z"], vec!["z", "z"]], "e").unwrap();
        let datum = DiscreteDatum::new(m.clone(), m.clone(), vec![0, 1], RightGSet::point(&m)).unwrap();
        let mut a = ground();
        a.datum = datum;
        assert!(matches!(local_units_report(&a), Err(Error::NotAGroup(_))));
    }
}
