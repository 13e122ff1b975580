//! Smash products `B#A`, the Koppinen smash product of a Doi-Hopf datum and
//! the isomorphism `α` between the two.

use std::collections::BTreeMap;

use crate::discrete::DiscreteDatum;
use crate::error::{Error, Result};
use crate::hopf::{
    check_graded_action, dual_graded_algebra, left_dual_action_maps, ComoduleAlgebra, DoiHopfDatum, GroupGradedAlgebra,
    SemiHopfGC,
};
use crate::idx;
use crate::linalg::{dual_basis, LinMap, Space, Tensor};
use crate::report::ValidationReport;

use super::algebra::{check_graded_algebra_map, GradedAlgebra, GradedMap};

fn pair_space(label: String, left: &Space, right: &Space, sep: &str) -> Space {
    Space {
        label,
        basis: left
            .basis
            .iter()
            .flat_map(|b| right.basis.iter().map(move |a| format!("{b}{sep}{a}")))
            .collect(),
    }
}

/// `B#A` with `(b#a)(b'#a') = b(a_[1,γ(λ')⁻¹]⇀b') # a_[0,xγ(λ')]a'`.
///
/// `maps[λ]: H_{γ(λ)⁻¹} ⊗ B_λ → B_λ` is the left action; it is validated
/// first. Component `(λ,x)` is `B_λ⊗A_x` with basis index `i·dim A_x + j`.
pub fn smash_product(
    b: &GroupGradedAlgebra,
    gamma: &[usize],
    maps: &[LinMap],
    h: &SemiHopfGC,
    a: &ComoduleAlgebra,
) -> Result<GradedAlgebra> {
    let report = check_graded_action(b, gamma, maps, h);
    if !report.passed() {
        let w = report
            .records
            .iter()
            .find(|r| !r.passed())
            .and_then(|r| r.witnesses.first().map(|w| format!(" at {}", w.index.join(", "))))
            .unwrap_or_default();
        return Err(Error::ActionAxiomFailure(format!("{}{w}", report.summary())));
    }
    let datum = DiscreteDatum::new(h.monoid().clone(), b.group.monoid.clone(), gamma.to_vec(), a.x.clone())?;
    let group = &b.group;
    let f = b.field;
    let (nl, nx) = (group.order(), a.x.len());
    let comp = |l: usize, x: usize| l * nx + x;
    let mut spaces = Vec::with_capacity(nl * nx);
    for l in 0..nl {
        for x in 0..nx {
            let label = format!("B_{}#A_{}", group.label(l), a.x.label(x));
            spaces.push(pair_space(label, &b.spaces[l], &a.algebras[x].space, "#"));
        }
    }
    let mut mult = BTreeMap::new();
    for l in 0..nl {
        for x in 0..nx {
            for l2 in 0..nl {
                let x2 = datum.shift(x, l2);
                let ll = group.mul(l, l2);
                // ρ_{x',γ(λ'⁻¹)}: A_x → A_{x'} ⊗ H_{γ(λ')⁻¹}
                let rho = a.rho(x2, gamma[group.inv(l2)]);
                let (db, da, db2, da2) = (b.dim(l), a.dim(x), b.dim(l2), a.dim(x2));
                let map = LinMap::from_fn(f, &[db * da, db2 * da2], &[b.dim(ll) * da2], |ix| {
                    let (i, j) = (ix[0] / da, ix[0] % da);
                    let (p, q) = (ix[1] / da2, ix[1] % da2);
                    let t = b
                        .basis(l, i)
                        .outer(&rho.image(&[j]))
                        .outer(&b.basis(l2, p))
                        .outer(&a.algebras[x2].basis(q));
                    // [b, a0, a1, b', a'] → [b, a0, a1⇀b', a'] → [bb'', a0, a'] → [bb'', a0a']
                    t.apply(&[2, 3], &maps[l2])
                        .apply(&[0, 2], &b.mult[&(l, l2)])
                        .apply(&[1, 2], &a.algebras[x2].mult)
                        .reshape(&[b.dim(ll) * da2])
                });
                mult.insert((comp(l, x), comp(l2, x2)), map);
            }
        }
    }
    let units = (0..nx)
        .map(|x| {
            Some(
                b.unit
                    .outer(&a.algebras[x].unit)
                    .reshape(&[b.dim(group.e()) * a.dim(x)]),
            )
        })
        .collect();
    Ok(GradedAlgebra {
        datum,
        field: f,
        spaces,
        mult,
        units,
    })
}

/// `C*#A` for a Doi-Hopf datum: the smash product of the dual Λ-graded
/// algebra `B_λ = C*_{λ⁻¹}` acting through `(h⇀ξ)(c) = ξ(ch)`.
pub fn dual_smash(d: &DoiHopfDatum) -> Result<GradedAlgebra> {
    let b = dual_graded_algebra(&d.c.coalgebra)?;
    let maps = left_dual_action_maps(&d.c)?;
    smash_product(&b, &d.c.gamma, &maps, &d.hopf, &d.a)
}

/// The Koppinen smash product `⊕ Hom(C_{λ⁻¹}, A_x)`. `E_{j,i}: c_j ↦ a_i` sits
/// at index `j·dim A_x + i`; the product is
/// `(f#g)(c) = f(c_(2,λ⁻¹))_[0,x'] g(c_(1,λ'⁻¹) f(c_(2,λ⁻¹))_[1,γ(λ')⁻¹])`.
pub fn koppinen_smash(d: &DoiHopfDatum) -> Result<GradedAlgebra> {
    let group = d.discrete.lambda_group().map_err(|_| Error::NotAGroup("Λ".into()))?;
    let c = &d.c.coalgebra;
    c.check_shapes()?;
    let f = d.field();
    let datum = d.discrete.clone();
    let (nl, nx) = (group.order(), datum.x.len());
    let comp = |l: usize, x: usize| l * nx + x;
    let mut spaces = Vec::with_capacity(nl * nx);
    for l in 0..nl {
        for x in 0..nx {
            let label = format!("Hom(C_{},A_{})", group.label(group.inv(l)), datum.x.label(x));
            spaces.push(pair_space(label, &c.spaces[group.inv(l)], &d.a.algebras[x].space, "↦"));
        }
    }
    let mut mult = BTreeMap::new();
    for l in 0..nl {
        for x in 0..nx {
            for l2 in 0..nl {
                let x2 = datum.shift(x, l2);
                let (li, l2i) = (group.inv(l), group.inv(l2));
                let ll_inv = group.inv(group.mul(l, l2));
                let delta = c.d(l2i, li);
                let rho = d.a.rho(x2, datum.gamma(l2i));
                let act = d.c_act(l2i);
                let alg = &d.a.algebras[x2];
                let (da, da2) = (d.a.dim(x), d.a.dim(x2));
                let (dc1, dc2, dcc) = (c.dim(l2i), c.dim(li), c.dim(ll_inv));
                let map = LinMap::from_fn(f, &[dc2 * da, dc1 * da2], &[dcc * da2], |ix| {
                    let fm = elementary(f, dc2, da, ix[0]);
                    let gm = elementary(f, dc1, da2, ix[1]);
                    let mut out = Tensor::zero(f, &[dcc, da2]);
                    for k in 0..dcc {
                        // [c1, c2] → [c1, f(c2)] → [c1, a0, a1] → [c1·a1, a0] → [g(..), a0] → g(..)·a0 reordered
                        let v = delta
                            .image(&[k])
                            .map_axis(1, &fm)
                            .map_axis(1, rho)
                            .apply(&[0, 2], act)
                            .map_axis(0, &gm)
                            .apply(&[1, 0], &alg.mult);
                        for (idx, s) in v.terms() {
                            out.add_term(vec![k, idx[0]], s.clone());
                        }
                    }
                    out.reshape(&[dcc * da2])
                });
                mult.insert((comp(l, x), comp(l2, x2)), map);
            }
        }
    }
    let e = group.e();
    let units = (0..nx)
        .map(|x| {
            Some(
                counit_vector(c, e)
                    .outer(&d.a.algebras[x].unit)
                    .reshape(&[c.dim(e) * d.a.dim(x)]),
            )
        })
        .collect();
    Ok(GradedAlgebra {
        datum,
        field: f,
        spaces,
        mult,
        units,
    })
}

/// `E_{j,i}: C → A` for the flat index `j·dA + i`.
fn elementary(f: crate::Field, dc: usize, da: usize, flat: usize) -> LinMap {
    LinMap::from_entries(f, &[dc], &[da], [(flat / da, flat % da, f.one())])
}

/// `(ε(c_j))_j` on `C_e`.
fn counit_vector(c: &crate::hopf::GroupCoalgebra, e: usize) -> Tensor {
    let coords: Vec<_> = (0..c.dim(e))
        .map(|j| c.counit.apply(&c.basis(e, j)).to_scalar())
        .collect();
    Tensor::from_dense(c.field, &coords)
}

/// `α(ξ#a)(c) = ξ(c)a` from `C*#A` to the Koppinen smash product, and its
/// inverse `α⁻¹(f) = Σ_m δ_m # f(c_m)` over the dual basis of `C_{λ⁻¹}`.
pub fn alpha_iso(d: &DoiHopfDatum) -> Result<(GradedMap, GradedMap)> {
    let group = d.discrete.lambda_group()?;
    let c = &d.c.coalgebra;
    let f = d.field();
    let nx = d.discrete.x.len();
    let (mut fwd, mut bwd) = (Vec::new(), Vec::new());
    for l in 0..group.order() {
        let li = group.inv(l);
        let db = dual_basis(&c.spaces[li]);
        let dc = c.dim(li);
        for x in 0..nx {
            let da = d.a.dim(x);
            fwd.push(LinMap::from_fn(f, &[dc * da], &[dc * da], |ix| {
                let (j, i) = (ix[0] / da, ix[0] % da);
                let mut out = Tensor::zero(f, &[dc, da]);
                for k in 0..dc {
                    out.add_term(vec![k, i], db.eval_basis(f, j, k));
                }
                out.reshape(&[dc * da])
            }));
            bwd.push(LinMap::from_fn(f, &[dc * da], &[dc * da], |ix| {
                let fm = elementary(f, dc, da, ix[0]);
                let mut out = Tensor::zero(f, &[dc * da]);
                for m in 0..dc {
                    let delta_m = Tensor::basis(f, &[dc], &[m]);
                    out = out.add(&delta_m.outer(&fm.image(&[m])).reshape(&[dc * da]));
                }
                out
            }));
        }
    }
    Ok((GradedMap { maps: fwd }, GradedMap { maps: bwd }))
}

/// `α∘α⁻¹ = id`, `α⁻¹∘α = id`, `α(uv) = α(u)α(v)` and `α(ε#1_x) = e_x`.
pub fn check_alpha(d: &DoiHopfDatum) -> Result<ValidationReport> {
    let smash = dual_smash(d)?;
    let kop = koppinen_smash(d)?;
    let (fwd, bwd) = alpha_iso(d)?;
    let mut r = ValidationReport::new();
    for (name, comp) in [
        ("alpha.right_inverse", fwd.compose(&bwd)),
        ("alpha.left_inverse", bwd.compose(&fwd)),
    ] {
        for (c, m) in comp.maps.iter().enumerate() {
            let ok = *m == LinMap::identity(m.field(), &[m.domain_dim()]);
            r.check(name, "αα⁻¹ = id and α⁻¹α = id")
                .require(ok, idx!("component" = smash.comp_label(c)), || {
                    ("not the identity".into(), "identity".into())
                });
        }
    }
    let hom = check_graded_algebra_map(&smash, &kop, &fwd);
    r.absorb("alpha", hom);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrete::FiniteGroup;
    use crate::graded::algebra::check_graded_algebra;
    use crate::graded::fixtures::{kc2_double, trivial_double};
    use crate::hopf::{hopf_module_datum, trivial_family};
    use crate::Field;

    #[test]
    fn point_datum_gives_the_ground_field() {
        let h = trivial_family(Field::Rational, &FiniteGroup::trivial());
        let d = hopf_module_datum(&h.semi);
        for a in [dual_smash(&d).unwrap(), koppinen_smash(&d).unwrap()] {
            assert_eq!(a.total_dim(), 1);
            assert!(check_graded_algebra(&a).passed());
            assert_eq!(a.units, vec![Some(Tensor::basis(Field::Rational, &[1], &[0]))]);
        }
        assert!(check_alpha(&d).unwrap().passed());
    }

    #[test]
    fn kc2_double_products() {
        let d = kc2_double();
        let s = dual_smash(&d).unwrap();
        let k = koppinen_smash(&d).unwrap();
        assert_eq!((s.total_dim(), k.total_dim()), (16, 16));
        assert_eq!(s.mult.len(), 8);
        assert!(check_graded_algebra(&s).passed());
        assert!(check_graded_algebra(&k).passed());
        let r = check_alpha(&d).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(r.record("alpha.graded_map.multiplicative").unwrap().instances >= 128);
    }

    #[test]
    fn alpha_is_the_identity_matrix_on_elementary_maps() {
        let (fwd, bwd) = alpha_iso(&kc2_double()).unwrap();
        assert!(fwd.is_identity() && bwd.is_identity());
    }

    #[test]
    fn trivial_doubles_over_small_groups() {
        for g in [FiniteGroup::cyclic(3), FiniteGroup::symmetric3()] {
            let d = trivial_double(&g);
            let n = g.order();
            let s = dual_smash(&d).unwrap();
            assert_eq!(s.total_dim(), n * n);
            assert!(check_graded_algebra(&s).passed());
            assert!(check_alpha(&d).unwrap().passed());
        }
    }

    #[test]
    fn broken_action_is_rejected() {
        let d = kc2_double();
        let b = dual_graded_algebra(&d.c.coalgebra).unwrap();
        let mut maps = left_dual_action_maps(&d.c).unwrap();
        maps[1] = maps[1].scale(&Field::Rational.int(2));
        let err = smash_product(&b, &d.c.gamma, &maps, &d.hopf, &d.a).unwrap_err();
        assert!(
            matches!(err, Error::ActionAxiomFailure(ref s) if s.contains("action.unit")),
            "{err}"
        );
    }
}
