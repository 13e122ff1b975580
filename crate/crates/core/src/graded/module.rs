//! Modules graded by `(G,Λ,X)`-sets and the functors relating them to
//! Doi-Hopf modules.

use std::collections::BTreeMap;

use crate::discrete::{regular_datum_set, DatumSet};
use crate::error::{Error, Result};
use crate::hopf::datum::{check_eta, morphism_slots};
use crate::hopf::{DoiHopfDatum, DoiHopfModule, FamilyMorphism, Flavor};
use crate::idx;
use crate::linalg::{LinMap, Space, Tensor};
use crate::report::ValidationReport;

use super::algebra::GradedAlgebra;
use super::smash::koppinen_smash;

/// `M = ⊕ M_y` with `action[(y, c)]: M_y ⊗ A_c → M_{yλ}` for `c = (λ, β(yλ))`.
/// Absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    pub algebra: GradedAlgebra,
    pub y: DatumSet,
    pub spaces: Vec<Space>,
    pub action: BTreeMap<(usize, usize), LinMap>,
}

impl GradedModule {
    pub fn dim(&self, y: usize) -> usize {
        self.spaces[y].dim()
    }

    pub fn basis(&self, y: usize, i: usize) -> Tensor {
        Tensor::basis(self.algebra.field, &[self.dim(y)], &[i])
    }

    /// `yλ` for the component `c = (λ, x)`.
    pub fn target(&self, y: usize, c: usize) -> usize {
        self.y.act(y, self.algebra.split(c).0)
    }

    /// `x = β(yλ)`.
    pub fn composable(&self, y: usize, c: usize) -> bool {
        let (l, x) = self.algebra.split(c);
        self.y.beta(self.y.act(y, l)) == x
    }

    pub fn act(&self, y: usize, c: usize, m: &Tensor, a: &Tensor) -> Tensor {
        match self.action.get(&(y, c)) {
            Some(map) => m.outer(a).apply(&[0, 1], map),
            None => Tensor::zero(self.algebra.field, &[self.dim(self.target(y, c))]),
        }
    }

    fn label(&self, y: usize) -> &str {
        self.y.label(y)
    }

    pub fn check_shapes(&self) -> Result<()> {
        let a = &self.algebra;
        a.check_shapes()?;
        if self.y.datum != a.datum {
            return Err(Error::GroupMismatch("Y is a set over a different datum".into()));
        }
        if self.spaces.len() != self.y.len() {
            return Err(Error::ShapeMismatch("one space per element of Y expected".into()));
        }
        for (&(y, c), map) in &self.action {
            if y >= self.y.len() || c >= a.ncomp() {
                return Err(Error::ShapeMismatch(format!("action key ({y},{c}) out of range")));
            }
            if map.domain() != [self.dim(y), a.dim(c)] || map.codomain() != [self.dim(self.target(y, c))] {
                return Err(Error::ShapeMismatch(format!(
                    "action of {} on {} has the wrong shape",
                    a.comp_label(c),
                    self.label(y)
                )));
            }
        }
        Ok(())
    }
}

/// `A` as a right module over itself, graded by `Λ×X`.
pub fn regular_graded_module(a: &GradedAlgebra) -> GradedModule {
    let action = a
        .mult
        .iter()
        .filter(|(&(c, c2), _)| a.composable(c, c2))
        .map(|(&k, m)| (k, m.clone()))
        .collect();
    GradedModule {
        algebra: a.clone(),
        y: regular_datum_set(&a.datum),
        spaces: a.spaces.clone(),
        action,
    }
}

/// The submodule `⊕_{z∈Z} M_z` for a Λ-stable subset `Z` (indices into `Y`,
/// kept in the given order).
pub fn restrict_module(m: &GradedModule, subset: &[usize]) -> Result<GradedModule> {
    let y = m.y.restrict(subset)?;
    let pos: BTreeMap<usize, usize> = subset.iter().enumerate().map(|(k, &z)| (z, k)).collect();
    let action = m
        .action
        .iter()
        .filter_map(|(&(z, c), map)| pos.get(&z).map(|&k| ((k, c), map.clone())))
        .collect();
    Ok(GradedModule {
        algebra: m.algebra.clone(),
        y,
        spaces: subset.iter().map(|&z| m.spaces[z].clone()).collect(),
        action,
    })
}

/// `Z_x = {(λ, xγ(λ))}` inside `Λ×X`, as indices `λ·|X| + xγ(λ)`.
pub fn orbit_subset(a: &GradedAlgebra, x: usize) -> Vec<usize> {
    (0..a.datum.lambda.order())
        .map(|l| a.comp(l, a.datum.shift(x, l)))
        .collect()
}

/// The graded-module axioms `M_yA_{λ,x} ⊆ δ_{x,β(yλ)}M_{yλ}`, `m1_{β(y)} = m`
/// and `(mf)g = m(fg)`, and separately the equivalent form over the collapsed
/// algebra: `M` a unital module with `M_y1_x = δ_{x,β(y)}M_y`. The record
/// `graded_module.characterizations_agree` compares the two verdicts.
pub fn check_graded_module(m: &GradedModule) -> ValidationReport {
    let mut r = ValidationReport::new();
    if let Err(e) = m.check_shapes() {
        r.check("graded_module.shape", "spaces and actions well formed")
            .require(false, Vec::new, || (e.to_string(), String::new()));
        return r;
    }
    let a = &m.algebra;
    let f = a.field;
    let ny = m.y.len();
    let n = a.ncomp();
    let mut direct = ValidationReport::new();
    for (&(y, c), map) in &m.action {
        if !m.composable(y, c) {
            direct
                .check("graded_module.grading", "M_yA_{λ,x} ⊆ δ_{x,β(yλ)}M_{yλ}")
                .require(map.is_zero(), idx!("y" = m.label(y), "A" = a.comp_label(c)), || {
                    ("nonzero action".into(), "0".into())
                });
        }
    }
    for y in 0..ny {
        let bx = m.y.beta(y);
        match a.unit(bx) {
            Some(one) => {
                for i in 0..m.dim(y) {
                    let v = m.basis(y, i);
                    direct.check("graded_module.unit", "m1_{β(y)} = m").compare(
                        idx!("y" = m.label(y), "m" = i),
                        &m.act(y, a.unit_comp(bx), &v, one),
                        &v,
                    );
                }
            }
            None => {
                direct
                    .check("graded_module.unit", "m1_{β(y)} = m")
                    .require(false, idx!("y" = m.label(y)), || ("1_x missing".into(), String::new()));
            }
        }
        for c in (0..n).filter(|&c| m.composable(y, c)) {
            let yl = m.target(y, c);
            for c2 in (0..n).filter(|&c2| m.composable(yl, c2)) {
                assoc(&mut direct, "graded_module.associativity", m, y, c, c2);
            }
        }
    }
    let mut alt = ValidationReport::new();
    let units: Vec<Tensor> = (0..a.nx())
        .map(|x| {
            a.unit(x)
                .cloned()
                .unwrap_or_else(|| Tensor::zero(f, &[a.dim(a.unit_comp(x))]))
        })
        .collect();
    for y in 0..ny {
        for i in 0..m.dim(y) {
            let v = m.basis(y, i);
            let mut sum = Tensor::zero(f, &[m.dim(y)]);
            for x in 0..a.nx() {
                let w = m.act(y, a.unit_comp(x), &v, &units[x]);
                let expect = if x == m.y.beta(y) {
                    v.clone()
                } else {
                    Tensor::zero(f, &[m.dim(y)])
                };
                alt.check("graded_module.idempotents", "M_y1_x = δ_{x,β(y)}M_y")
                    .compare(idx!("y" = m.label(y), "m" = i, "x" = a.datum.x.label(x)), &w, &expect);
                sum = sum.add(&w);
            }
            alt.check("graded_module.global_unit", "m(Σ_x 1_x) = m")
                .compare(idx!("y" = m.label(y), "m" = i), &sum, &v);
        }
        for c in 0..n {
            for c2 in 0..n {
                let stored = m.action.contains_key(&(y, c)) || a.mult.contains_key(&(c, c2));
                if stored {
                    assoc(&mut alt, "graded_module.collapse_associativity", m, y, c, c2);
                }
            }
        }
    }
    let (d_ok, a_ok) = (direct.passed(), alt.passed());
    r.absorb("", direct);
    r.absorb("", alt);
    r.check(
        "graded_module.characterizations_agree",
        "both characterizations give the same verdict",
    )
    .require(d_ok == a_ok, Vec::new, || {
        (format!("graded: {d_ok}"), format!("collapse: {a_ok}"))
    });
    r
}

fn assoc(r: &mut ValidationReport, id: &str, m: &GradedModule, y: usize, c: usize, c2: usize) {
    let a = &m.algebra;
    let yl = m.target(y, c);
    let t = a.target(c, c2);
    for i in 0..m.dim(y) {
        let v = m.basis(y, i);
        for p in 0..a.dim(c) {
            let u = a.basis(c, p);
            let vu = m.act(y, c, &v, &u);
            for q in 0..a.dim(c2) {
                let w = a.basis(c2, q);
                let lhs = m.act(yl, c2, &vu, &w);
                let rhs = m.act(y, t, &v, &a.mul(c, c2, &u, &w));
                r.check(id, "(mf)g = m(fg)").compare(
                    idx!(
                        "y" = m.label(y),
                        "A" = a.comp_label(c),
                        "B" = a.comp_label(c2),
                        "m" = i,
                        "f" = p,
                        "g" = q
                    ),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
}

/// The Doi-Hopf module `M` as a module over the Koppinen smash product:
/// `mf = m_[0,yλ] f(m_[1,λ⁻¹])` using `ρ_{yλ,λ⁻¹}`. The same object serves
/// both morphism flavors.
pub fn functor_tz(d: &DoiHopfDatum, m: &DoiHopfModule) -> Result<GradedModule> {
    let algebra = koppinen_smash(d)?;
    let group = d.discrete.lambda_group()?;
    let f = d.field();
    let mut action = BTreeMap::new();
    for y in 0..m.y.len() {
        for l in 0..group.order() {
            let yl = m.y.act(y, l);
            let x = m.y.beta(yl);
            let c = algebra.comp(l, x);
            let li = group.inv(l);
            let rho = m.rho(yl, li);
            let (dc, da) = (d.c.dim(li), d.a.dim(x));
            let ev = evaluation(f, dc, da);
            let map = LinMap::from_fn(f, &[m.dim(y), dc * da], &[m.dim(yl)], |ix| {
                // [m0, c] ⊗ f → [m0, f(c)] → m0·f(c)
                m.basis(y, ix[0])
                    .map_axis(0, rho)
                    .outer(&Tensor::basis(f, &[dc * da], &[ix[1]]))
                    .apply(&[1, 2], &ev)
                    .apply(&[0, 1], &m.action[yl])
            });
            action.insert((y, c), map);
        }
    }
    Ok(GradedModule {
        algebra,
        y: m.y.clone(),
        spaces: m.spaces.clone(),
        action,
    })
}

/// `C ⊗ Hom(C, A) → A`, `c_k ⊗ E_{j,i} ↦ δ_{k,j} a_i`.
fn evaluation(f: crate::Field, dc: usize, da: usize) -> LinMap {
    let entries = (0..dc).flat_map(|k| (0..da).map(move |i| (k * dc * da + k * da + i, i, f.one())));
    LinMap::from_entries(f, &[dc, dc * da], &[da], entries)
}

/// The inverse of [`functor_tz`] for a module over the Koppinen smash product:
/// `ma = m·α_{e,β(y)}(ε#a)` and `ρ_{y,λ}(m) = Σ_k m·α_{λ⁻¹,β(y)}(δ_k#1_{β(y)}) ⊗ c_k`
/// over the dual basis of `C_λ`.
pub fn inverse_functor(d: &DoiHopfDatum, m: &GradedModule) -> Result<DoiHopfModule> {
    let group = d.discrete.lambda_group()?;
    m.check_shapes()?;
    let a = &m.algebra;
    let f = d.field();
    let c = &d.c.coalgebra;
    let e = group.e();
    let eps: Vec<_> = (0..c.dim(e))
        .map(|j| c.counit.apply(&c.basis(e, j)).to_scalar())
        .collect();
    let mut action = Vec::with_capacity(m.y.len());
    for y in 0..m.y.len() {
        let x = m.y.beta(y);
        let da = d.a.dim(x);
        let ce = a.comp(e, x);
        let map = LinMap::from_fn(f, &[m.dim(y), da], &[m.dim(y)], |ix| {
            let mut hom = Tensor::zero(f, &[c.dim(e), da]);
            for (j, s) in eps.iter().enumerate() {
                hom.add_term(vec![j, ix[1]], s.clone());
            }
            m.act(y, ce, &m.basis(y, ix[0]), &hom.reshape(&[c.dim(e) * da]))
        });
        action.push(map);
    }
    let mut coaction = BTreeMap::new();
    for y in 0..m.y.len() {
        let x = m.y.beta(y);
        let da = d.a.dim(x);
        let one = &d.a.algebras[x].unit;
        for l in 0..group.order() {
            let yl = m.y.act(y, l);
            let cl = a.comp(group.inv(l), x);
            let dc = c.dim(l);
            let map = LinMap::from_fn(f, &[m.dim(yl)], &[m.dim(y), dc], |ix| {
                let v = m.basis(yl, ix[0]);
                let mut out = Tensor::zero(f, &[m.dim(y), dc]);
                for k in 0..dc {
                    let hom = Tensor::basis(f, &[dc], &[k]).outer(one).reshape(&[dc * da]);
                    out = out.add(&m.act(yl, cl, &v, &hom).outer(&c.basis(l, k)));
                }
                out
            });
            coaction.insert((y, l), map);
        }
    }
    Ok(DoiHopfModule {
        y: m.y.clone(),
        spaces: m.spaces.clone(),
        action,
        coaction,
    })
}

/// Morphism squares `φ_{kλ}(mf) = φ_k(m)f` for `f ∈ A_{λ,β(sλ)}`, where `k`
/// runs over the morphism's index carrier and `s` is the matching source index.
pub fn check_graded_morphism(
    flavor: Flavor,
    source: &GradedModule,
    target: &GradedModule,
    mor: &FamilyMorphism,
) -> Result<ValidationReport> {
    let slots = morphism_slots(flavor, (&source.y, &source.spaces), (&target.y, &target.spaces), mor)?;
    let mut r = ValidationReport::new();
    let ok = check_eta(&mut r, flavor, &source.y, &target.y, &mor.eta);
    let a = &source.algebra;
    let index_set = match flavor {
        Flavor::T => &target.y,
        Flavor::Z => &source.y,
    };
    for (k, &(s, t)) in slots.iter().enumerate() {
        if !ok[k] {
            continue;
        }
        for l in 0..a.datum.lambda.order() {
            let kl = index_set.act(k, l);
            let c = a.comp(l, source.y.beta(source.y.act(s, l)));
            for i in 0..source.dim(s) {
                let v = source.basis(s, i);
                for p in 0..a.dim(c) {
                    let u = a.basis(c, p);
                    let lhs = mor.phis[kl].apply(&source.act(s, c, &v, &u));
                    let rhs = target.act(t, c, &mor.phis[k].apply(&v), &u);
                    r.check("graded_morphism.square", "φ_{kλ}(mf) = φ_k(m)f").compare(
                        idx!(
                            "index" = index_set.label(k),
                            "λ" = a.datum.lambda.label(l),
                            "m" = i,
                            "f" = p
                        ),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrete::FiniteGroup;
    use crate::graded::fixtures::{kc2_double, kc2_family};
    use crate::hopf::{check_doihopf_module, hopf_module, hopf_module_datum, trivial_family};
    use crate::Field;

    fn kc2_regular() -> GradedModule {
        regular_graded_module(&koppinen_smash(&kc2_double()).unwrap())
    }

    #[test]
    fn ground_field_regular_module() {
        let h = trivial_family(Field::Rational, &FiniteGroup::trivial());
        let d = hopf_module_datum(&h.semi);
        let m = regular_graded_module(&koppinen_smash(&d).unwrap());
        assert!(check_graded_module(&m).passed());
        let back = inverse_functor(&d, &m).unwrap();
        assert!(check_doihopf_module(&d, &back).passed());
        assert_eq!(functor_tz(&d, &back).unwrap(), m);
    }

    #[test]
    fn kc2_regular_module_and_its_orbit_submodule() {
        let m = kc2_regular();
        let r = check_graded_module(&m);
        assert!(r.passed(), "{}", r.summary());
        assert!(r.record("graded_module.collapse_associativity").unwrap().instances > 0);
        let z = orbit_subset(&m.algebra, 0);
        let n = restrict_module(&m, &z).unwrap();
        assert_eq!(n.spaces.iter().map(Space::dim).sum::<usize>(), 8);
        assert!(check_graded_module(&n).passed());
        let incl = FamilyMorphism {
            eta: z.clone(),
            phis: z
                .iter()
                .map(|&y| LinMap::identity(Field::Rational, &[m.dim(y)]))
                .collect(),
        };
        assert!(check_graded_morphism(Flavor::Z, &n, &m, &incl).unwrap().passed());
        assert!(matches!(
            check_graded_morphism(Flavor::T, &n, &m, &incl),
            Err(Error::IndexMismatch(_))
        ));
    }

    #[test]
    fn dropping_an_orbit_element_is_not_closed() {
        let m = kc2_regular();
        let z = orbit_subset(&m.algebra, 0);
        assert!(matches!(restrict_module(&m, &z[..1]), Err(Error::NotClosed(_))));
    }

    #[test]
    fn misplaced_action_entry_breaks_grading() {
        let mut m = kc2_regular();
        let key = *m
            .action
            .keys()
            .find(|&&(y, c)| y == 0 && m.algebra.split(c).0 == 1)
            .unwrap();
        let (l, x) = m.algebra.split(key.1);
        let moved = (key.0, m.algebra.comp(l, 1 - x));
        let map = m.action.remove(&key).unwrap();
        m.action.insert(moved, map);
        let r = check_graded_module(&m);
        assert!(r.fails("graded_module.grading"));
        assert!(r.record("graded_module.characterizations_agree").unwrap().passed());
    }

    #[test]
    fn swapped_basis_without_eta_fails() {
        let m = kc2_regular();
        let q = Field::Rational;
        let mut mor = FamilyMorphism::identity(q, &(0..m.y.len()).map(|y| m.dim(y)).collect::<Vec<_>>());
        let swap = [(0, 1), (1, 0), (2, 2), (3, 3)].map(|(j, i)| (j, i, q.one()));
        mor.phis[0] = LinMap::from_entries(q, &[4], &[4], swap);
        let r = check_graded_morphism(Flavor::Z, &m, &m, &mor).unwrap();
        assert!(r.fails("graded_morphism.square"));
        assert!(!r.record("graded_morphism.square").unwrap().witnesses.is_empty());
        let id = FamilyMorphism::identity(q, &(0..m.y.len()).map(|y| m.dim(y)).collect::<Vec<_>>());
        assert!(check_graded_morphism(Flavor::T, &m, &m, &id).unwrap().passed());
    }

    #[test]
    fn hopf_module_round_trip() {
        let h = kc2_family();
        let d = hopf_module_datum(&h.semi);
        let m = hopf_module(&h);
        let g = functor_tz(&d, &m).unwrap();
        let r = check_graded_module(&g);
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(inverse_functor(&d, &g).unwrap(), m);
    }

    #[test]
    fn regular_module_round_trip() {
        let d = kc2_double();
        let m = kc2_regular();
        let back = inverse_functor(&d, &m).unwrap();
        let r = check_doihopf_module(&d, &back);
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(functor_tz(&d, &back).unwrap(), m);
    }
}
