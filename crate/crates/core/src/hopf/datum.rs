//! Comodule algebras, module coalgebras, Doi-Hopf data and Doi-Hopf modules.

use std::collections::BTreeMap;

use crate::discrete::{DatumSet, DiscreteDatum, RightGSet};
use crate::error::{Error, Result};
use crate::idx;
use crate::linalg::{LinMap, Space, Tensor};
use crate::report::ValidationReport;

use super::family::{mul_factors, Algebra, GroupCoalgebra, HopfGC, SemiHopfGC};

/// Algebras `A_x` over a right G-set with algebra maps `ρ_{x,g}: A_{xg} → A_x⊗H_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    pub x: RightGSet,
    pub algebras: Vec<Algebra>,
    pub coaction: BTreeMap<(usize, usize), LinMap>,
}

impl ComoduleAlgebra {
    pub fn dim(&self, x: usize) -> usize {
        self.algebras[x].dim()
    }

    pub fn rho(&self, x: usize, g: usize) -> &LinMap {
        &self.coaction[&(x, g)]
    }

    fn check_shapes(&self, h: &SemiHopfGC) -> Result<()> {
        if &self.x.acting != h.monoid() {
            return Err(Error::GroupMismatch(
                "X is not a set over the Hopf family's group".into(),
            ));
        }
        for x in 0..self.x.len() {
            for g in 0..h.monoid().order() {
                let r = self
                    .coaction
                    .get(&(x, g))
                    .ok_or_else(|| Error::ShapeMismatch(format!("coaction ({x},{g}) missing")))?;
                if r.domain() != [self.dim(self.x.act(x, g))] || r.codomain() != [self.dim(x), h.dim(g)] {
                    return Err(Error::ShapeMismatch(format!("coaction ({x},{g}) has the wrong shape")));
                }
            }
        }
        Ok(())
    }

    pub fn check(&self, h: &SemiHopfGC) -> ValidationReport {
        let mut r = ValidationReport::new();
        if let Err(e) = self.check_shapes(h) {
            r.check("comodule.shape", "structure maps present")
                .require(false, Vec::new, || (e.to_string(), String::new()));
            return r;
        }
        let (m, xs) = (h.monoid(), &self.x);
        for x in 0..xs.len() {
            self.algebras[x].check_into(&mut r, "comodule.algebra", xs.label(x));
        }
        for x in 0..xs.len() {
            for g in 0..m.order() {
                let xg = xs.act(x, g);
                let rho = self.rho(x, g);
                let algs = [&self.algebras[x], h.alg(g)];
                let a_xg = &self.algebras[xg];
                for i in 0..a_xg.dim() {
                    for j in 0..a_xg.dim() {
                        let (a, b) = (a_xg.basis(i), a_xg.basis(j));
                        let lhs = rho.apply(&a_xg.mul(&a, &b));
                        let rhs = mul_factors(&rho.apply(&a), &rho.apply(&b), &algs);
                        r.check("comodule.multiplicative", "ρ_{x,g}(ab) = ρ_{x,g}(a)ρ_{x,g}(b)")
                            .compare(idx!("x" = xs.label(x), "g" = m.label(g), "a" = i, "b" = j), &lhs, &rhs);
                    }
                }
                let lhs = rho.apply(&a_xg.unit);
                let rhs = self.algebras[x].unit.outer(h.one(g));
                r.check("comodule.unital", "ρ_{x,g}(1_{xg}) = 1_x⊗1_g").compare(
                    idx!("x" = xs.label(x), "g" = m.label(g)),
                    &lhs,
                    &rhs,
                );
            }
        }
        for x in 0..xs.len() {
            for g in 0..m.order() {
                for k in 0..m.order() {
                    let gk = m.mul(g, k);
                    let src = xs.act(x, gk);
                    for i in 0..self.dim(src) {
                        let t = self.algebras[src].basis(i);
                        let lhs = t.map_axis(0, self.rho(x, gk)).map_axis(1, h.d(g, k));
                        let rhs = t.map_axis(0, self.rho(xs.act(x, g), k)).map_axis(0, self.rho(x, g));
                        r.check(
                            "comodule.coassociativity",
                            "(A_x⊗Δ_{g,h})ρ_{x,gh} = (ρ_{x,g}⊗H_h)ρ_{xg,h}",
                        )
                        .compare(
                            idx!("x" = xs.label(x), "g" = m.label(g), "h" = m.label(k), "a" = i),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
            let e = m.e();
            for i in 0..self.dim(x) {
                let t = self.algebras[x].basis(i);
                let lhs = t.map_axis(0, self.rho(x, e)).map_axis(1, h.counit());
                r.check("comodule.counit", "(A_x⊗ε)ρ_{x,e} = id")
                    .compare(idx!("x" = xs.label(x), "a" = i), &lhs, &t);
            }
        }
        r
    }
}

/// A group-coalgebra over Λ whose components are right `H_{γ(λ)}`-modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCoalgebra {
    pub coalgebra: GroupCoalgebra,
    pub gamma: Vec<usize>,
    /// `C_λ ⊗ H_{γ(λ)} → C_λ`.
    pub action: Vec<LinMap>,
}

impl ModuleCoalgebra {
    pub fn dim(&self, l: usize) -> usize {
        self.coalgebra.dim(l)
    }

    pub fn check(&self, h: &SemiHopfGC) -> ValidationReport {
        let mut r = self.coalgebra.check();
        if r.record("coalgebra.shape").is_some() {
            return r;
        }
        let c = &self.coalgebra;
        let (lm, gm) = (&c.monoid, h.monoid());
        for l in 0..lm.order() {
            let gl = self.gamma[l];
            let act = &self.action[l];
            if act.domain() != [self.dim(l), h.dim(gl)] || act.codomain() != [self.dim(l)] {
                r.check("module_coalgebra.shape", "action shapes")
                    .require(false, idx!("λ" = lm.label(l)), || {
                        ("wrong shape".into(), String::new())
                    });
                return r;
            }
        }
        for l in 0..lm.order() {
            let gl = self.gamma[l];
            let act = &self.action[l];
            let alg = h.alg(gl);
            for i in 0..self.dim(l) {
                let ci = c.basis(l, i);
                let lhs = ci.outer(&alg.unit).apply(&[0, 1], act);
                r.check("module_coalgebra.unit", "c·1 = c")
                    .compare(idx!("λ" = lm.label(l), "c" = i), &lhs, &ci);
                for a in 0..alg.dim() {
                    for b in 0..alg.dim() {
                        let (ha, hb) = (alg.basis(a), alg.basis(b));
                        let lhs = ci.outer(&ha).apply(&[0, 1], act).outer(&hb).apply(&[0, 1], act);
                        let rhs = ci.outer(&alg.mul(&ha, &hb)).apply(&[0, 1], act);
                        r.check("module_coalgebra.associativity", "(c·h)·k = c·(hk)").compare(
                            idx!("λ" = lm.label(l), "c" = i, "h" = a, "k" = b),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
        for l in 0..lm.order() {
            for l2 in 0..lm.order() {
                let ll = lm.mul(l, l2);
                let (g1, g2, g12) = (self.gamma[l], self.gamma[l2], self.gamma[ll]);
                if gm.mul(g1, g2) != g12 {
                    continue;
                }
                let delta = c.d(l, l2);
                for i in 0..self.dim(ll) {
                    for a in 0..h.dim(g12) {
                        let (ci, ha) = (c.basis(ll, i), h.basis(g12, a));
                        let lhs = ci.outer(&ha).apply(&[0, 1], &self.action[ll]).map_axis(0, delta);
                        // c₁h₁ ⊗ c₂h₂
                        let rhs = delta
                            .apply(&ci)
                            .outer(&h.d(g1, g2).apply(&ha))
                            .apply(&[0, 2], &self.action[l])
                            .apply(&[1, 2], &self.action[l2]);
                        r.check("module_coalgebra.comult", "Δ_{λ,λ'}(ch) = c₁h_(1,γ(λ)) ⊗ c₂h_(2,γ(λ'))")
                            .compare(
                                idx!("λ" = lm.label(l), "λ'" = lm.label(l2), "c" = i, "h" = a),
                                &lhs,
                                &rhs,
                            );
                    }
                }
            }
        }
        let (le, ge) = (lm.e(), gm.e());
        if self.gamma[le] == ge {
            for i in 0..self.dim(le) {
                for a in 0..h.dim(ge) {
                    let (ci, ha) = (c.basis(le, i), h.basis(ge, a));
                    let lhs = ci.outer(&ha).apply(&[0, 1], &self.action[le]).map_axis(0, &c.counit);
                    let rhs = c.counit.apply(&ci).outer(&h.counit().apply(&ha));
                    r.check("module_coalgebra.counit", "ε(ch) = ε(c)ε(h)")
                        .compare(idx!("c" = i, "h" = a), &lhs, &rhs);
                }
            }
        }
        r
    }
}

/// A Doi-Hopf datum `(H, A, C)` together with its underlying discrete datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoiHopfDatum {
    pub hopf: SemiHopfGC,
    pub a: ComoduleAlgebra,
    pub c: ModuleCoalgebra,
    pub discrete: DiscreteDatum,
}

impl DoiHopfDatum {
    pub fn new(hopf: SemiHopfGC, a: ComoduleAlgebra, c: ModuleCoalgebra) -> Result<DoiHopfDatum> {
        let discrete = DiscreteDatum::new(
            hopf.monoid().clone(),
            c.coalgebra.monoid.clone(),
            c.gamma.clone(),
            a.x.clone(),
        )?;
        Ok(DoiHopfDatum { hopf, a, c, discrete })
    }

    pub fn field(&self) -> crate::Field {
        self.hopf.field()
    }

    /// Discrete datum, comodule algebra and module coalgebra checks.
    pub fn check(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        r.absorb("discrete", self.discrete.validate());
        r.absorb("A", self.a.check(&self.hopf));
        r.absorb("C", self.c.check(&self.hopf));
        r
    }

    /// `c·h` for `c ∈ C_λ`, `h ∈ H_{γ(λ)}` given as the two axes of a tensor.
    pub fn c_act(&self, l: usize) -> &LinMap {
        &self.c.action[l]
    }
}

/// A Doi-Hopf module: `M_y` a right `A_{β(y)}`-module with coactions
/// `ρ_{y,λ}: M_{yλ} → M_y⊗C_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoiHopfModule {
    pub y: DatumSet,
    pub spaces: Vec<Space>,
    /// `M_y ⊗ A_{β(y)} → M_y`.
    pub action: Vec<LinMap>,
    pub coaction: BTreeMap<(usize, usize), LinMap>,
}

impl DoiHopfModule {
    pub fn dim(&self, y: usize) -> usize {
        self.spaces[y].dim()
    }

    pub fn basis(&self, y: usize, i: usize) -> Tensor {
        Tensor::basis(self.action[y].field(), &[self.dim(y)], &[i])
    }

    pub fn rho(&self, y: usize, l: usize) -> &LinMap {
        &self.coaction[&(y, l)]
    }

    fn check_shapes(&self, d: &DoiHopfDatum) -> Result<()> {
        if self.y.datum != d.discrete {
            return Err(Error::GroupMismatch("module carrier is over a different datum".into()));
        }
        let n = self.y.len();
        if self.spaces.len() != n || self.action.len() != n {
            return Err(Error::IndexMismatch(
                "one space and action per element of Y expected".into(),
            ));
        }
        for y in 0..n {
            if self.action[y].domain() != [self.dim(y), d.a.dim(self.y.beta(y))] {
                return Err(Error::ShapeMismatch(format!(
                    "action at {} has the wrong shape",
                    self.y.label(y)
                )));
            }
            for l in 0..d.discrete.lambda.order() {
                let rho = self
                    .coaction
                    .get(&(y, l))
                    .ok_or_else(|| Error::ShapeMismatch(format!("coaction ({y},{l}) missing")))?;
                if rho.domain() != [self.dim(self.y.act(y, l))] || rho.codomain() != [self.dim(y), d.c.dim(l)] {
                    return Err(Error::ShapeMismatch(format!("coaction ({y},{l}) has the wrong shape")));
                }
            }
        }
        Ok(())
    }
}

pub fn check_doihopf_module(d: &DoiHopfDatum, m: &DoiHopfModule) -> ValidationReport {
    let mut r = ValidationReport::new();
    if let Err(e) = m.check_shapes(d) {
        r.check("dh_module.shape", "structure maps present")
            .require(false, Vec::new, || (e.to_string(), String::new()));
        return r;
    }
    let ys = &m.y;
    let lm = &d.discrete.lambda;
    for y in 0..ys.len() {
        let alg = &d.a.algebras[ys.beta(y)];
        let act = &m.action[y];
        for i in 0..m.dim(y) {
            let mi = m.basis(y, i);
            let lhs = mi.outer(&alg.unit).apply(&[0, 1], act);
            r.check("dh_module.unit", "m·1 = m")
                .compare(idx!("y" = ys.label(y), "m" = i), &lhs, &mi);
            for a in 0..alg.dim() {
                for b in 0..alg.dim() {
                    let (xa, xb) = (alg.basis(a), alg.basis(b));
                    let lhs = mi.outer(&xa).apply(&[0, 1], act).outer(&xb).apply(&[0, 1], act);
                    let rhs = mi.outer(&alg.mul(&xa, &xb)).apply(&[0, 1], act);
                    r.check("dh_module.associativity", "(m·a)·b = m·(ab)").compare(
                        idx!("y" = ys.label(y), "m" = i, "a" = a, "b" = b),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    for y in 0..ys.len() {
        for l in 0..lm.order() {
            for l2 in 0..lm.order() {
                let ll = lm.mul(l, l2);
                let src = ys.act(y, ll);
                for i in 0..m.dim(src) {
                    let t = m.basis(src, i);
                    let lhs = t.map_axis(0, m.rho(y, ll)).map_axis(1, d.c.coalgebra.d(l, l2));
                    let rhs = t.map_axis(0, m.rho(ys.act(y, l), l2)).map_axis(0, m.rho(y, l));
                    r.check(
                        "dh_module.coassociativity",
                        "(M_y⊗Δ_{λ,λ'})ρ_{y,λλ'} = (ρ_{y,λ}⊗C_{λ'})ρ_{yλ,λ'}",
                    )
                    .compare(
                        idx!("y" = ys.label(y), "λ" = lm.label(l), "λ'" = lm.label(l2), "m" = i),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
        for i in 0..m.dim(y) {
            let t = m.basis(y, i);
            let lhs = t.map_axis(0, m.rho(y, lm.e())).map_axis(1, &d.c.coalgebra.counit);
            r.check("dh_module.counit", "(M_y⊗ε)ρ_{y,e} = id")
                .compare(idx!("y" = ys.label(y), "m" = i), &lhs, &t);
        }
    }
    for y in 0..ys.len() {
        let by = ys.beta(y);
        for l in 0..lm.order() {
            let yl = ys.act(y, l);
            let gl = d.discrete.gamma(l);
            let rho = m.rho(y, l);
            let rho_a = d.a.rho(by, gl);
            let alg = &d.a.algebras[ys.beta(yl)];
            for i in 0..m.dim(yl) {
                for a in 0..alg.dim() {
                    let (mi, xa) = (m.basis(yl, i), alg.basis(a));
                    let lhs = mi.outer(&xa).apply(&[0, 1], &m.action[yl]).map_axis(0, rho);
                    let rhs = rho
                        .apply(&mi)
                        .outer(&rho_a.apply(&xa))
                        .apply(&[0, 2], &m.action[y])
                        .apply(&[1, 2], d.c_act(l));
                    r.check(
                        "dh_module.compatibility",
                        "ρ_{y,λ}(ma) = m_[0,y]a_[0,β(y)] ⊗ m_[1,λ]a_[1,γ(λ)]",
                    )
                    .compare(
                        idx!("y" = ys.label(y), "λ" = lm.label(l), "m" = i, "a" = a),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    r
}

/// Direction of a morphism between indexed families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// `η: Y' → Y`, `φ_{y'}: M_{η(y')} → M'_{y'}`.
    T,
    /// `η: Y → Y'`, `φ_y: M_y → M'_{η(y)}`.
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMorphism {
    pub eta: Vec<usize>,
    pub phis: Vec<LinMap>,
}

impl FamilyMorphism {
    pub fn identity(field: crate::Field, dims: &[usize]) -> FamilyMorphism {
        FamilyMorphism {
            eta: (0..dims.len()).collect(),
            phis: dims.iter().map(|&d| LinMap::identity(field, &[d])).collect(),
        }
    }
}

/// Resolves a morphism into per-index data: for each `k` in the morphism's
/// index carrier, the source index, target index and map.
pub(crate) fn morphism_slots(
    flavor: Flavor,
    source: (&DatumSet, &[Space]),
    target: (&DatumSet, &[Space]),
    mor: &FamilyMorphism,
) -> Result<Vec<(usize, usize)>> {
    let (index_set, other) = match flavor {
        Flavor::T => (target.0, source.0),
        Flavor::Z => (source.0, target.0),
    };
    if mor.eta.len() != index_set.len() || mor.phis.len() != index_set.len() {
        return Err(Error::IndexMismatch(format!(
            "η and φ must be indexed by the {} carrier ({} elements)",
            if flavor == Flavor::T { "target" } else { "source" },
            index_set.len()
        )));
    }
    if let Some(k) = mor.eta.iter().position(|&v| v >= other.len()) {
        return Err(Error::IndexMismatch(format!("η({k}) out of range")));
    }
    let slots: Vec<(usize, usize)> = (0..index_set.len())
        .map(|k| match flavor {
            Flavor::T => (mor.eta[k], k),
            Flavor::Z => (k, mor.eta[k]),
        })
        .collect();
    for (k, &(s, t)) in slots.iter().enumerate() {
        let phi = &mor.phis[k];
        if phi.domain() != [source.1[s].dim()] || phi.codomain() != [target.1[t].dim()] {
            return Err(Error::IndexMismatch(format!("φ at index {k} has the wrong shape")));
        }
    }
    Ok(slots)
}

/// `η` commutes with the Λ-action and intertwines `β`.
pub(crate) fn check_eta(
    r: &mut ValidationReport,
    flavor: Flavor,
    source: &DatumSet,
    target: &DatumSet,
    eta: &[usize],
) -> Vec<bool> {
    let (dom, cod) = match flavor {
        Flavor::T => (target, source),
        Flavor::Z => (source, target),
    };
    let lm = &dom.datum.lambda;
    let mut ok = vec![true; dom.len()];
    for k in 0..dom.len() {
        let good = cod.beta(eta[k]) == dom.beta(k);
        ok[k] &= good;
        r.check("morphism.eta_beta", "β'η = β")
            .require(good, idx!("y" = dom.label(k)), || {
                (cod.beta(eta[k]).to_string(), dom.beta(k).to_string())
            });
        for l in 0..lm.order() {
            let (lhs, rhs) = (eta[dom.act(k, l)], cod.act(eta[k], l));
            ok[k] &= lhs == rhs;
            r.check("morphism.eta_equivariant", "η(yλ) = η(y)λ").require(
                lhs == rhs,
                idx!("y" = dom.label(k), "λ" = lm.label(l)),
                || (cod.label(lhs).to_string(), cod.label(rhs).to_string()),
            );
        }
    }
    ok
}

pub fn check_dh_morphism(
    d: &DoiHopfDatum,
    flavor: Flavor,
    source: &DoiHopfModule,
    target: &DoiHopfModule,
    mor: &FamilyMorphism,
) -> Result<ValidationReport> {
    let slots = morphism_slots(flavor, (&source.y, &source.spaces), (&target.y, &target.spaces), mor)?;
    let mut r = ValidationReport::new();
    let ok = check_eta(&mut r, flavor, &source.y, &target.y, &mor.eta);
    let lm = &d.discrete.lambda;
    for (k, &(s, t)) in slots.iter().enumerate() {
        if !ok[k] {
            continue;
        }
        let phi = &mor.phis[k];
        let alg = &d.a.algebras[source.y.beta(s)];
        for i in 0..source.dim(s) {
            for a in 0..alg.dim() {
                let (mi, xa) = (source.basis(s, i), alg.basis(a));
                let lhs = mi.outer(&xa).apply(&[0, 1], &source.action[s]).map_axis(0, phi);
                let rhs = phi.apply(&mi).outer(&xa).apply(&[0, 1], &target.action[t]);
                r.check("morphism.linear", "φ(ma) = φ(m)a")
                    .compare(idx!("index" = k, "m" = i, "a" = a), &lhs, &rhs);
            }
        }
        for l in 0..lm.order() {
            // T: (φ_{y'}⊗C)ρ_{η(y'),λ} = ρ'_{y',λ}φ_{y'λ};  Z: (φ_y⊗C)ρ_{y,λ} = ρ'_{η(y),λ}φ_{yλ}
            let kl = match flavor {
                Flavor::T => target.y.act(k, l),
                Flavor::Z => source.y.act(k, l),
            };
            let sl = slots[kl].0;
            for i in 0..source.dim(sl) {
                let mi = source.basis(sl, i);
                let lhs = mi.map_axis(0, source.rho(s, l)).map_axis(0, phi);
                let rhs = mi.map_axis(0, &mor.phis[kl]).map_axis(0, target.rho(t, l));
                r.check("morphism.coaction", "(φ⊗C)ρ = ρ'φ").compare(
                    idx!("index" = k, "λ" = lm.label(l), "m" = i),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    Ok(r)
}

/// `H` as a comodule algebra over itself: `X = G` regular, `ρ_{x,g} = Δ_{x,g}`.
pub fn regular_comodule_algebra(h: &SemiHopfGC) -> ComoduleAlgebra {
    let m = h.monoid();
    let mut coaction = BTreeMap::new();
    for x in 0..m.order() {
        for g in 0..m.order() {
            coaction.insert((x, g), h.d(x, g).clone());
        }
    }
    ComoduleAlgebra {
        x: RightGSet::regular(m),
        algebras: h.algebras.clone(),
        coaction,
    }
}

/// `H` as a module coalgebra over itself by right multiplication, `γ = id`.
pub fn regular_module_coalgebra(h: &SemiHopfGC) -> ModuleCoalgebra {
    ModuleCoalgebra {
        coalgebra: h.coalgebra.clone(),
        gamma: (0..h.monoid().order()).collect(),
        action: h.algebras.iter().map(|a| a.mult.clone()).collect(),
    }
}

/// The datum `(H, H, H)`.
pub fn hopf_module_datum(h: &SemiHopfGC) -> DoiHopfDatum {
    DoiHopfDatum::new(h.clone(), regular_comodule_algebra(h), regular_module_coalgebra(h))
        .expect("regular datum is well formed")
}

/// `M = H` over `Y = G` (right multiplication, `β = id`) with `ρ_{y,g} = Δ_{y,g}`.
pub fn hopf_module(h: &HopfGC) -> DoiHopfModule {
    let d = hopf_module_datum(&h.semi);
    let m = h.semi.monoid();
    let n = m.order();
    let y = DatumSet::new(d.discrete, RightGSet::regular(m), (0..n).collect()).expect("regular set");
    let mut coaction = BTreeMap::new();
    for a in 0..n {
        for g in 0..n {
            coaction.insert((a, g), h.d(a, g).clone());
        }
    }
    DoiHopfModule {
        y,
        spaces: h.semi.coalgebra.spaces.clone(),
        action: h.semi.algebras.iter().map(|a| a.mult.clone()).collect(),
        coaction,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrete::{regular_datum_set, FiniteGroup};
    use crate::hopf::generators::{constant_family, kc2, trivial_family};
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    fn kc2_family() -> HopfGC {
        constant_family(&kc2(Q), &FiniteGroup::cyclic(2)).unwrap()
    }

    #[test]
    fn regular_structures_pass() {
        for h in [kc2_family(), trivial_family(Q, &FiniteGroup::symmetric3())] {
            let d = hopf_module_datum(&h.semi);
            let r = d.check();
            assert!(r.passed(), "{}", r.summary());
            let r = check_doihopf_module(&d, &hopf_module(&h));
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn dropped_action_term_breaks_module_coalgebra() {
        let h = kc2_family();
        let mut c = regular_module_coalgebra(&h.semi);
        // x·x = 0 instead of 1 in C_g
        c.action[1] = LinMap::from_entries(
            Q,
            &[2, 2],
            &[2],
            c.action[1]
                .entries()
                .filter(|&(j, _, _)| j != 3)
                .map(|(j, i, v)| (j, i, v.clone())),
        );
        let r = c.check(&h.semi);
        assert!(r.fails("module_coalgebra.comult"));
        let w = &r.record("module_coalgebra.comult").unwrap().witnesses[0];
        assert!(w.index.iter().any(|s| s.starts_with("λ")));
    }

    #[test]
    fn trivially_coacting_module() {
        // H = kC2 over {e}, C = k over C2 acted on through ε, M_{(λ,*)} = H, ρ(m) = m⊗1
        let h = kc2(Q);
        let c2 = FiniteGroup::cyclic(2);
        let one = trivial_family(Q, &c2);
        let eps = h.counit().reshaped(&[1, 2], &[1]);
        let c = ModuleCoalgebra {
            coalgebra: one.semi.coalgebra.clone(),
            gamma: vec![0, 0],
            action: vec![eps.clone(), eps],
        };
        let d = DoiHopfDatum::new(h.semi.clone(), regular_comodule_algebra(&h.semi), c).unwrap();
        assert!(d.check().passed());
        let y = regular_datum_set(&d.discrete);
        let coact = LinMap::identity(Q, &[2]).reshaped(&[2], &[2, 1]);
        let coaction = [(0, 0), (0, 1), (1, 0), (1, 1)]
            .into_iter()
            .map(|k| (k, coact.clone()))
            .collect();
        let m = DoiHopfModule {
            y,
            spaces: vec![h.semi.coalgebra.spaces[0].clone(); 2],
            action: vec![h.alg(0).mult.clone(); 2],
            coaction,
        };
        assert!(check_doihopf_module(&d, &m).passed());
    }

    #[test]
    fn sign_flipped_coaction_breaks_compatibility() {
        let h = kc2_family();
        let d = hopf_module_datum(&h.semi);
        let mut m = hopf_module(&h);
        let rho = m.coaction.get_mut(&(0, 1)).unwrap();
        *rho = rho.scale(&Q.int(-1));
        let r = check_doihopf_module(&d, &m);
        assert!(r.fails("dh_module.compatibility") || r.fails("dh_module.coassociativity"));
    }

    #[test]
    fn morphisms() {
        let h = kc2_family();
        let d = hopf_module_datum(&h.semi);
        let m = hopf_module(&h);
        let id = FamilyMorphism::identity(Q, &[2, 2]);
        for flavor in [Flavor::T, Flavor::Z] {
            assert!(check_dh_morphism(&d, flavor, &m, &m, &id).unwrap().passed());
            let zero = FamilyMorphism {
                eta: vec![0, 1],
                phis: vec![LinMap::zero(Q, &[2], &[2]); 2],
            };
            assert!(check_dh_morphism(&d, flavor, &m, &m, &zero).unwrap().passed());
            let mut doubled = id.clone();
            doubled.phis[0] = doubled.phis[0].scale(&Q.int(2));
            let r = check_dh_morphism(&d, flavor, &m, &m, &doubled).unwrap();
            assert!(r.fails("morphism.coaction"));
            let short = FamilyMorphism {
                eta: vec![0],
                phis: vec![LinMap::identity(Q, &[2])],
            };
            assert!(matches!(
                check_dh_morphism(&d, flavor, &m, &m, &short),
                Err(Error::IndexMismatch(_))
            ));
        }
    }
}
