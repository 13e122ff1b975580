//! The Λ-graded algebra `B_λ = C*_{λ⁻¹}` dual to a group-coalgebra and its
//! left module structure `(h⇀ξ)(c) = ξ(ch)`.

use std::collections::BTreeMap;

use crate::discrete::FiniteGroup;
use crate::error::{Error, Result};
use crate::idx;
use crate::linalg::{dual_basis, Field, LinMap, Space, Tensor};
use crate::report::ValidationReport;

use super::datum::ModuleCoalgebra;
use super::family::{GroupCoalgebra, SemiHopfGC};

/// An algebra graded by a finite group, stored as one bilinear map per pair of degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupGradedAlgebra {
    pub field: Field,
    pub group: FiniteGroup,
    pub spaces: Vec<Space>,
    /// `B_λ ⊗ B_{λ'} → B_{λλ'}`.
    pub mult: BTreeMap<(usize, usize), LinMap>,
    /// Unit, an element of `B_e`.
    pub unit: Tensor,
}

impl GroupGradedAlgebra {
    pub fn dim(&self, l: usize) -> usize {
        self.spaces[l].dim()
    }

    pub fn basis(&self, l: usize, i: usize) -> Tensor {
        Tensor::basis(self.field, &[self.dim(l)], &[i])
    }

    pub fn mul(&self, l: usize, l2: usize, a: &Tensor, b: &Tensor) -> Tensor {
        a.outer(b).apply(&[0, 1], &self.mult[&(l, l2)])
    }

    /// Grading, associativity on basis triples and the two-sided unit.
    pub fn check(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let g = &self.group;
        let n = g.order();
        for a in 0..n {
            for b in 0..n {
                let ok = self.mult.get(&(a, b)).is_some_and(|m| {
                    m.domain() == [self.dim(a), self.dim(b)] && m.codomain() == [self.dim(g.mul(a, b))]
                });
                r.check("graded_algebra.grading", "B_λB_λ' ⊆ B_λλ'").require(
                    ok,
                    idx!("λ" = g.label(a), "λ'" = g.label(b)),
                    || ("product missing or misgraded".into(), String::new()),
                );
            }
        }
        if !r.passed() {
            return r;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (ab, bc) = (g.mul(a, b), g.mul(b, c));
                    for i in 0..self.dim(a) {
                        for j in 0..self.dim(b) {
                            let xy = self.mul(a, b, &self.basis(a, i), &self.basis(b, j));
                            for k in 0..self.dim(c) {
                                let z = self.basis(c, k);
                                let lhs = self.mul(ab, c, &xy, &z);
                                let yz = self.mul(b, c, &self.basis(b, j), &z);
                                let rhs = self.mul(a, bc, &self.basis(a, i), &yz);
                                r.check("graded_algebra.associativity", "(ξξ')ξ'' = ξ(ξ'ξ'')").compare(
                                    idx!(
                                        "λ" = g.label(a),
                                        "λ'" = g.label(b),
                                        "λ''" = g.label(c),
                                        "i" = i,
                                        "j" = j,
                                        "k" = k
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
        let e = g.e();
        for a in 0..n {
            for i in 0..self.dim(a) {
                let x = self.basis(a, i);
                let rec = r.check("graded_algebra.unit", "1ξ = ξ1 = ξ");
                rec.compare(
                    idx!("λ" = g.label(a), "i" = i, "side" = "left"),
                    &self.mul(e, a, &self.unit, &x),
                    &x,
                );
                rec.compare(
                    idx!("λ" = g.label(a), "i" = i, "side" = "right"),
                    &self.mul(a, e, &x, &self.unit),
                    &x,
                );
            }
        }
        r
    }
}

fn as_group(c: &GroupCoalgebra) -> Result<FiniteGroup> {
    FiniteGroup::from_monoid(c.monoid.clone()).map_err(|_| Error::NotAGroup("Λ".into()))
}

/// `B_λ = C*_{λ⁻¹}` with `(ξξ')(c) = ξ(c_(2,λ⁻¹))ξ'(c_(1,λ'⁻¹))` and unit `ε`.
/// The basis of `B_λ` is the dual basis `δ_i` of `C_{λ⁻¹}`.
pub fn dual_graded_algebra(c: &GroupCoalgebra) -> Result<GroupGradedAlgebra> {
    let group = as_group(c)?;
    c.check_shapes()?;
    let f = c.field;
    let n = group.order();
    let spaces = (0..n).map(|l| dual_basis(&c.spaces[group.inv(l)]).space).collect();
    let mut mult = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let (ai, bi) = (group.inv(a), group.inv(b));
            let ab_inv = group.inv(group.mul(a, b));
            // Δ_{λ'⁻¹,λ⁻¹}: C_{(λλ')⁻¹} → C_{λ'⁻¹}⊗C_{λ⁻¹}; coefficient of δ_k in δ_iδ_j is the (j,i) entry
            let delta = c.d(bi, ai);
            let entries = delta.entries().map(|(k, flat, v)| {
                let (j, i) = (flat / c.dim(ai), flat % c.dim(ai));
                (i * c.dim(bi) + j, k, v.clone())
            });
            mult.insert(
                (a, b),
                LinMap::from_entries(f, &[c.dim(ai), c.dim(bi)], &[c.dim(ab_inv)], entries),
            );
        }
    }
    let e = group.e();
    let unit = Tensor::from_dense(
        f,
        &(0..c.dim(e))
            .map(|i| c.counit.apply(&c.basis(e, i)).to_scalar())
            .collect::<Vec<_>>(),
    );
    Ok(GroupGradedAlgebra {
        field: f,
        group,
        spaces,
        mult,
        unit,
    })
}

/// `H_{γ(λ)⁻¹} ⊗ B_λ → B_λ`, `h⊗ξ ↦ h⇀ξ` with `(h⇀ξ)(c) = ξ(ch)`.
pub fn left_dual_action_map(c: &ModuleCoalgebra, group: &FiniteGroup, l: usize) -> LinMap {
    let li = group.inv(l);
    let act = &c.action[li];
    let (dc, dh) = (act.domain()[0], act.domain()[1]);
    // coefficient of δ_k in h⇀δ_i is [c_k·h]_i
    let entries = act.entries().map(|(flat, i, v)| {
        let (k, h) = (flat / dh, flat % dh);
        (h * dc + i, k, v.clone())
    });
    LinMap::from_entries(c.coalgebra.field, &[dh, dc], &[dc], entries)
}

/// `h⇀ξ` for `ξ ∈ B_λ` and `h ∈ H_{γ(λ)⁻¹}`.
pub fn left_dual_action(c: &ModuleCoalgebra, group: &FiniteGroup, l: usize, xi: &Tensor, h: &Tensor) -> Tensor {
    left_dual_action_map(c, group, l).apply(&h.outer(xi))
}

/// Module axioms of a left action `H_{γ(λ)⁻¹} ⊗ B_λ → B_λ`, its compatibility
/// `h⇀(bb') = (h_(2)⇀b)(h_(1)⇀b')` with the product and `h⇀1 = ε(h)1` on `H_e`.
pub fn check_graded_action(
    b: &GroupGradedAlgebra,
    gamma: &[usize],
    maps: &[LinMap],
    h: &SemiHopfGC,
) -> ValidationReport {
    let group = &b.group;
    let gm = h.monoid();
    let n = group.order();
    let mut r = ValidationReport::new();
    // γ(λ)⁻¹ = γ(λ⁻¹) as γ is a monoid map out of a group
    let hdeg = |l: usize| gamma[group.inv(l)];
    for l in 0..n {
        let ok = maps
            .get(l)
            .is_some_and(|m| m.domain() == [h.dim(hdeg(l)), b.dim(l)] && m.codomain() == [b.dim(l)]);
        r.check("action.shape", "H_{γ(λ)⁻¹}⊗B_λ → B_λ")
            .require(ok, idx!("λ" = group.label(l)), || {
                ("missing or misshapen".into(), String::new())
            });
    }
    if !r.passed() {
        return r;
    }
    let act = |l: usize, hh: &Tensor, xi: &Tensor| maps[l].apply(&hh.outer(xi));
    for l in 0..n {
        let alg = h.alg(hdeg(l));
        for i in 0..b.dim(l) {
            let xi = b.basis(l, i);
            r.check("action.unit", "1⇀b = b").compare(
                idx!("λ" = group.label(l), "b" = i),
                &act(l, &alg.unit, &xi),
                &xi,
            );
            for p in 0..alg.dim() {
                for q in 0..alg.dim() {
                    let (hp, hq) = (alg.basis(p), alg.basis(q));
                    let lhs = act(l, &hp, &act(l, &hq, &xi));
                    let rhs = act(l, &alg.mul(&hp, &hq), &xi);
                    r.check("action.associativity", "h⇀(k⇀b) = (hk)⇀b").compare(
                        idx!("λ" = group.label(l), "b" = i, "h" = p, "k" = q),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    for l in 0..n {
        for l2 in 0..n {
            let ll = group.mul(l, l2);
            let (g1, g2) = (hdeg(l), hdeg(l2));
            let delta = h.d(g2, g1);
            for p in 0..h.dim(hdeg(ll)) {
                let hp = h.basis(hdeg(ll), p);
                let hh = delta.apply(&hp);
                for i in 0..b.dim(l) {
                    for j in 0..b.dim(l2) {
                        let (x, y) = (b.basis(l, i), b.basis(l2, j));
                        let lhs = act(ll, &hp, &b.mul(l, l2, &x, &y));
                        // (h_(2)⇀b)(h_(1)⇀b')
                        let rhs = hh
                            .outer(&x)
                            .outer(&y)
                            .apply(&[1, 2], &maps[l])
                            .apply(&[0, 2], &maps[l2])
                            .permute(&[1, 0])
                            .apply(&[0, 1], &b.mult[&(l, l2)]);
                        r.check("action.product", "h⇀(bb') = (h_(2)⇀b)(h_(1)⇀b')").compare(
                            idx!("λ" = group.label(l), "λ'" = group.label(l2), "h" = p, "b" = i, "b'" = j),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }
    let (e, ge) = (group.e(), gm.e());
    if hdeg(e) == ge {
        for p in 0..h.dim(ge) {
            let hp = h.basis(ge, p);
            let lhs = act(e, &hp, &b.unit);
            let rhs = b.unit.scale(&h.counit().apply(&hp).to_scalar());
            r.check("action.unital", "h⇀1 = ε(h)1")
                .compare(idx!("h" = p), &lhs, &rhs);
        }
    }
    r
}

/// All left dual action maps, one per `λ`.
pub fn left_dual_action_maps(c: &ModuleCoalgebra) -> Result<Vec<LinMap>> {
    let group = as_group(&c.coalgebra)?;
    Ok((0..group.order()).map(|l| left_dual_action_map(c, &group, l)).collect())
}

/// [`check_graded_action`] for `⇀` on the dual algebra, plus the dual basis
/// identity `h⇀ξ^(g) ⊗ c^(g) = ξ^(g) ⊗ c^(g)h` for `h ∈ H_{γ(g)}`.
pub fn check_dual_action(c: &ModuleCoalgebra, h: &SemiHopfGC) -> Result<ValidationReport> {
    let group = as_group(&c.coalgebra)?;
    let b = dual_graded_algebra(&c.coalgebra)?;
    let f = h.field();
    let n = group.order();
    let maps = left_dual_action_maps(c)?;
    let mut r = check_graded_action(&b, &c.gamma, &maps, h);
    for g in 0..n {
        // ξ^(g) ∈ C*_g = B_{g⁻¹}, acted on by H_{γ(g)}
        let gi = group.inv(g);
        let canonical = dual_basis(&c.coalgebra.spaces[g]).canonical_element(f);
        for p in 0..h.dim(c.gamma[g]) {
            let hp = h.basis(c.gamma[g], p);
            let lhs = hp.outer(&canonical).apply(&[0, 1], &maps[gi]);
            let rhs = canonical.outer(&hp).apply(&[1, 2], &c.action[g]);
            r.check("dual_action.dual_basis", "h⇀ξ^(g) ⊗ c^(g) = ξ^(g) ⊗ c^(g)h")
                .compare(idx!("g" = group.label(g), "h" = p), &lhs, &rhs);
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::datum::regular_module_coalgebra;
    use crate::hopf::generators::{constant_family, kc2, trivial_family};

    const Q: Field = Field::Rational;

    #[test]
    fn trivial_family_dual_is_group_algebra() {
        let c2 = FiniteGroup::cyclic(2);
        let h = trivial_family(Q, &c2);
        let b = dual_graded_algebra(&h.semi.coalgebra).unwrap();
        assert!(b.check().passed());
        for l in 0..2 {
            assert_eq!(b.dim(l), 1);
        }
        let one = Tensor::basis(Q, &[1], &[0]);
        assert_eq!(b.mul(1, 1, &one, &one), one);
    }

    #[test]
    fn kc2_family_dual_and_action() {
        let c2 = FiniteGroup::cyclic(2);
        let h = constant_family(&kc2(Q), &c2).unwrap();
        let b = dual_graded_algebra(&h.semi.coalgebra).unwrap();
        assert!(b.check().passed());
        // δ_1δ_1 = δ_1, δ_1δ_x = 0 as (kC2)* is the function algebra
        let d = |i| Tensor::basis(Q, &[2], &[i]);
        assert_eq!(b.mul(0, 1, &d(1), &d(1)), d(1));
        assert!(b.mul(1, 1, &d(0), &d(1)).is_zero());
        assert_eq!(b.unit, Tensor::from_dense(Q, &[Q.one(), Q.one()]));
        let c = regular_module_coalgebra(&h.semi);
        // x⇀δ_1 = δ_x since δ_1(cx) = 1 iff c = x
        assert_eq!(left_dual_action(&c, &c2, 0, &d(0), &d(1)), d(1));
        assert_eq!(left_dual_action(&c, &c2, 1, &d(0), &d(0)), d(0));
        let r = check_dual_action(&c, &h.semi).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn monoid_coalgebra_is_rejected() {
        let mut h = constant_family(&kc2(Q), &FiniteGroup::cyclic(2)).unwrap();
        h.semi.coalgebra.monoid.table = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            dual_graded_algebra(&h.semi.coalgebra),
            Err(Error::NotAGroup(_))
        ));
    }
}
