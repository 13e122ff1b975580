//! Yetter-Drinfeld modules over a Hopf G-coalgebra, their tensor products and
//! braidings, and the matching constructions on graded modules over the double.

use std::collections::BTreeMap;

use crate::discrete::{make_crossed_datum, product_crossed_gset, CrossedGSet, DatumSet, FiniteGroup};
use crate::error::{Error, Result};
use crate::graded::{
    alpha_iso, functor_tz, inverse_functor, orbit_subset, regular_graded_module, restrict_module, GradedAlgebra,
    GradedMap, GradedModule,
};
use crate::hopf::{check_dh_morphism, check_doihopf_module, DoiHopfModule, FamilyMorphism, Flavor, HopfGC};
use crate::linalg::{tensor_space, LinMap, Space, Tensor};
use crate::report::ValidationReport;

use super::bialgebra::{GradedBialgebra, RMatrices};
use super::{double_datum, DrinfeldDouble, Form};

/// `M = ⊕_{v∈V} M_v` over a crossed G-set `V` with
/// `action[v]: M_v⊗H_{ν(v)} → M_v` and `coaction[(v,g)]: M_{vg} → M_v⊗H_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    pub v: CrossedGSet,
    pub spaces: Vec<Space>,
    pub action: Vec<LinMap>,
    pub coaction: BTreeMap<(usize, usize), LinMap>,
}

impl YDModule {
    pub fn dim(&self, v: usize) -> usize {
        self.spaces[v].dim()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Space::dim).sum()
    }

    pub fn basis(&self, v: usize, i: usize) -> Tensor {
        Tensor::basis(self.action[v].field(), &[self.dim(v)], &[i])
    }

    /// The same data as a Doi-Hopf module over the datum of the double.
    pub fn to_doihopf(&self) -> DoiHopfModule {
        DoiHopfModule {
            y: self.v.as_datum_set(),
            spaces: self.spaces.clone(),
            action: self.action.clone(),
            coaction: self.coaction.clone(),
        }
    }

    pub fn from_doihopf(group: &FiniteGroup, m: DoiHopfModule) -> Result<YDModule> {
        if m.y.datum != make_crossed_datum(group) {
            return Err(Error::GroupMismatch("module is not over the crossed datum".into()));
        }
        let v = CrossedGSet::new(m.y.set, group.clone(), m.y.beta)?;
        Ok(YDModule {
            v,
            spaces: m.spaces,
            action: m.action,
            coaction: m.coaction,
        })
    }
}

fn crossed_of(group: &FiniteGroup, y: &DatumSet) -> Result<CrossedGSet> {
    if y.datum != make_crossed_datum(group) {
        return Err(Error::GroupMismatch("set is not over the crossed datum".into()));
    }
    CrossedGSet::new(y.set.clone(), group.clone(), y.beta.clone())
}

/// The crossed-set axiom, then the module, comodule and compatibility axioms
/// of the corresponding Doi-Hopf module.
pub fn check_yd_module(h: &HopfGC, m: &YDModule) -> Result<ValidationReport> {
    if m.v.group != h.group {
        return Err(Error::GroupMismatch("crossed set is over a different group".into()));
    }
    let d = double_datum(h)?;
    let mut r = m.v.validate();
    r.absorb("", check_doihopf_module(&d, &m.to_doihopf()));
    Ok(r)
}

/// `φ_{vg}(m·h) = φ_v(m)·h` and `ρ(φ(m)) = (φ⊗id)ρ(m)`, with `φ` indexed by
/// the source carrier.
pub fn check_yd_morphism(
    h: &HopfGC,
    source: &YDModule,
    target: &YDModule,
    mor: &FamilyMorphism,
) -> Result<ValidationReport> {
    let d = double_datum(h)?;
    check_dh_morphism(&d, Flavor::Z, &source.to_doihopf(), &target.to_doihopf(), mor)
}

/// Replaces the algebra of `m` by `algebra`, acting through `via: algebra → m.algebra`.
fn retarget(m: &GradedModule, algebra: &GradedAlgebra, via: &GradedMap) -> GradedModule {
    let f = algebra.field;
    let action = m
        .action
        .iter()
        .map(|(&(y, c), map)| {
            let out = LinMap::from_fn(f, map.domain(), map.codomain(), |ix| {
                Tensor::basis(f, map.domain(), ix)
                    .map_axis(1, &via.maps[c])
                    .apply(&[0, 1], map)
            });
            ((y, c), out)
        })
        .collect();
    GradedModule {
        algebra: algebra.clone(),
        y: m.y.clone(),
        spaces: m.spaces.clone(),
        action,
    }
}

/// The graded module over the core of `dd` corresponding to `m`:
/// `mf = m_[0] f(m_[1])` on the Koppinen form, pulled back through `α` for the
/// smash form.
pub fn yd_to_graded(dd: &DrinfeldDouble, m: &YDModule) -> Result<GradedModule> {
    let d = double_datum(&dd.hopf)?;
    let gm = functor_tz(&d, &m.to_doihopf())?;
    Ok(match dd.form {
        Form::Koppinen => gm,
        Form::Smash => retarget(&gm, &dd.bialgebra.core, &alpha_iso(&d)?.0),
    })
}

/// The inverse of [`yd_to_graded`].
pub fn graded_to_yd(dd: &DrinfeldDouble, gm: &GradedModule) -> Result<YDModule> {
    let d = double_datum(&dd.hopf)?;
    let gm = match dd.form {
        Form::Koppinen => gm.clone(),
        Form::Smash => retarget(gm, &crate::graded::koppinen_smash(&d)?, &alpha_iso(&d)?.1),
    };
    YDModule::from_doihopf(&dd.hopf.group, inverse_functor(&d, &gm)?)
}

/// `M⊗N` over `V×V'` (index `v·|V'| + v'`) with `(m⊗n)h = mh₁⊗nh₂` and
/// `ρ(m⊗n) = m_[0]⊗n_[0]⊗m_[1]n_[1]`.
pub fn yd_tensor(h: &HopfGC, m: &YDModule, n: &YDModule) -> Result<YDModule> {
    let v = product_crossed_gset(&m.v, &n.v)?;
    let f = h.field();
    let nn = n.v.len();
    let spaces: Vec<Space> = (0..v.len())
        .map(|k| tensor_space(&m.spaces[k / nn], &n.spaces[k % nn]))
        .collect();
    let mut action = Vec::with_capacity(v.len());
    for k in 0..v.len() {
        let (p, q) = (k / nn, k % nn);
        let (a, b) = (m.v.nu(p), n.v.nu(q));
        let (dm, dn) = (m.dim(p), n.dim(q));
        let delta = h.d(a, b);
        action.push(LinMap::from_fn(
            f,
            &[dm * dn, h.dim(h.group.mul(a, b))],
            &[dm * dn],
            |ix| {
                m.basis(p, ix[0] / dn)
                    .outer(&n.basis(q, ix[0] % dn))
                    .outer(&delta.image(&[ix[1]]))
                    .apply(&[0, 2], &m.action[p])
                    .apply(&[1, 2], &n.action[q])
                    .reshape(&[dm * dn])
            },
        ));
    }
    let mut coaction = BTreeMap::new();
    for k in 0..v.len() {
        let (p, q) = (k / nn, k % nn);
        for g in 0..h.order() {
            let (pg, qg) = (m.v.act(p, g), n.v.act(q, g));
            let (rm, rn) = (&m.coaction[&(p, g)], &n.coaction[&(q, g)]);
            let (dm, dn, dmg, dng) = (m.dim(p), n.dim(q), m.dim(pg), n.dim(qg));
            let map = LinMap::from_fn(f, &[dmg * dng], &[dm * dn, h.dim(g)], |ix| {
                // [m0, m1, n0, n1] → [m0, m1n1, n0] → [m0, n0, m1n1]
                rm.image(&[ix[0] / dng])
                    .outer(&rn.image(&[ix[0] % dng]))
                    .apply(&[1, 3], &h.alg(g).mult)
                    .permute(&[0, 2, 1])
                    .reshape(&[dm * dn, h.dim(g)])
            });
            coaction.insert((k, g), map);
        }
    }
    Ok(YDModule {
        v,
        spaces,
        action,
        coaction,
    })
}

/// `k` over `{*}` with `ν(*) = e`, `1·h = ε(h)` and `ρ(1) = 1⊗1_g`.
pub fn yd_unit(h: &HopfGC) -> YDModule {
    let g = &h.group;
    let f = h.field();
    let eps: Vec<_> = (0..h.dim(g.e()))
        .map(|i| h.counit().apply(&h.basis(g.e(), i)).to_scalar())
        .collect();
    let action = vec![LinMap::functional(f, &eps).reshaped(&[1, h.dim(g.e())], &[1])];
    let coaction = (0..g.order())
        .map(|x| {
            (
                (0, x),
                LinMap::from_fn(f, &[1], &[1, h.dim(x)], |_| h.one(x).reshape(&[1, h.dim(x)])),
            )
        })
        .collect();
    YDModule {
        v: CrossedGSet::point(g, g.e()),
        spaces: vec![Space::numbered("k", "1", 1)],
        action,
        coaction,
    }
}

/// `M⊗N` over the core of `b`, `(m⊗n)a = m a_(1,β(yλ)) ⊗ n a_(2,β'(y'λ))`.
pub fn graded_module_tensor(b: &GradedBialgebra, m: &GradedModule, n: &GradedModule) -> Result<GradedModule> {
    if m.algebra != b.core || n.algebra != b.core {
        return Err(Error::GroupMismatch("modules are over a different algebra".into()));
    }
    let g = &b.group;
    let v = product_crossed_gset(&crossed_of(g, &m.y)?, &crossed_of(g, &n.y)?)?;
    let y = v.as_datum_set();
    let f = b.core.field;
    let nn = n.y.len();
    let spaces: Vec<Space> = (0..v.len())
        .map(|k| tensor_space(&m.spaces[k / nn], &n.spaces[k % nn]))
        .collect();
    let mut action = BTreeMap::new();
    for k in 0..v.len() {
        let (p, q) = (k / nn, k % nn);
        for l in 0..g.order() {
            let (pl, ql) = (m.y.act(p, l), n.y.act(q, l));
            let (x1, x2) = (m.y.beta(pl), n.y.beta(ql));
            let c = b.comp(l, g.mul(x1, x2));
            let (c1, c2) = (b.comp(l, x1), b.comp(l, x2));
            let (dm, dn) = (m.dim(p), n.dim(q));
            let delta = b.d(l, x1, x2);
            let map = LinMap::from_fn(f, &[dm * dn, b.core.dim(c)], &[m.dim(pl) * n.dim(ql)], |ix| {
                let split = delta.image(&[ix[1]]);
                let mut out = Tensor::zero(f, &[m.dim(pl), n.dim(ql)]);
                for (idx, s) in split.terms() {
                    let left = m.act(p, c1, &m.basis(p, ix[0] / dn), &b.core.basis(c1, idx[0]));
                    let right = n.act(q, c2, &n.basis(q, ix[0] % dn), &b.core.basis(c2, idx[1]));
                    out = out.add(&left.outer(&right).scale(s));
                }
                out.reshape(&[m.dim(pl) * n.dim(ql)])
            });
            action.insert((k, c), map);
        }
    }
    Ok(GradedModule {
        algebra: b.core.clone(),
        y,
        spaces,
        action,
    })
}

/// `k` over `{*}` with `1·a = ε_λ(a)` for `a ∈ A_{λ,e}`.
pub fn graded_unit(b: &GradedBialgebra) -> GradedModule {
    let g = &b.group;
    let y = CrossedGSet::point(g, g.e()).as_datum_set();
    let action = (0..g.order())
        .map(|l| {
            let c = b.comp(l, g.e());
            ((0, c), b.counit[l].reshaped(&[1, b.core.dim(c)], &[1]))
        })
        .collect();
    GradedModule {
        algebra: b.core.clone(),
        y,
        spaces: vec![Space::numbered("k", "1", 1)],
        action,
    }
}

/// `ψ∘φ` for morphisms indexed by their sources.
pub fn compose_morphisms(phi: &FamilyMorphism, psi: &FamilyMorphism) -> FamilyMorphism {
    FamilyMorphism {
        eta: phi.eta.iter().map(|&t| psi.eta[t]).collect(),
        phis: phi
            .phis
            .iter()
            .zip(&phi.eta)
            .map(|(p, &t)| psi.phis[t].compose(p))
            .collect(),
    }
}

/// `φ⊗ψ` on product carriers, where `ψ` maps a carrier of size `|W|` into one
/// of size `|W'|`.
pub fn tensor_morphisms(phi: &FamilyMorphism, psi: &FamilyMorphism, target_len: usize) -> FamilyMorphism {
    let nw = psi.eta.len();
    let mut out = FamilyMorphism {
        eta: Vec::new(),
        phis: Vec::new(),
    };
    for (v, p) in phi.phis.iter().enumerate() {
        for (w, q) in psi.phis.iter().enumerate() {
            out.eta.push(phi.eta[v] * target_len + psi.eta[w]);
            out.phis.push(p.kron(q).reshaped(
                &[p.domain_dim() * q.domain_dim()],
                &[p.codomain_dim() * q.codomain_dim()],
            ));
        }
    }
    debug_assert_eq!(out.eta.len(), phi.eta.len() * nw);
    out
}

/// `t̃: M⊗N → N⊗M`, `m⊗n ↦ n_[0]⊗m·n_[1,ν(v)]`, sending `(v, v')` to
/// `(v'ν(v)⁻¹, v)`, and its inverse
/// `q̃: n⊗m ↦ m·S̄_{ν(v)}(n_[1,ν(v)⁻¹])⊗n_[0]`, sending `(v', v)` to `(v, v'ν(v))`.
pub fn yd_braiding(h: &HopfGC, m: &YDModule, n: &YDModule) -> (FamilyMorphism, FamilyMorphism) {
    let g = &h.group;
    let f = h.field();
    let (nm, nn) = (m.v.len(), n.v.len());
    let mut t = FamilyMorphism {
        eta: Vec::new(),
        phis: Vec::new(),
    };
    for k in 0..nm * nn {
        let (p, q) = (k / nn, k % nn);
        let a = m.v.nu(p);
        let q0 = n.v.act(q, g.inv(a));
        t.eta.push(q0 * nm + p);
        let rho = &n.coaction[&(q0, a)];
        let (dm, dn, dn0) = (m.dim(p), n.dim(q), n.dim(q0));
        t.phis.push(LinMap::from_fn(f, &[dm * dn], &[dn0 * dm], |ix| {
            m.basis(p, ix[0] / dn)
                .outer(&rho.image(&[ix[0] % dn]))
                .apply(&[0, 2], &m.action[p])
                .permute(&[1, 0])
                .reshape(&[dn0 * dm])
        }));
    }
    let mut qt = FamilyMorphism {
        eta: Vec::new(),
        phis: Vec::new(),
    };
    for k in 0..nn * nm {
        let (q, p) = (k / nm, k % nm);
        let a = m.v.nu(p);
        let q1 = n.v.act(q, a);
        qt.eta.push(p * nn + q1);
        let rho = &n.coaction[&(q1, g.inv(a))];
        let (dm, dn, dn1) = (m.dim(p), n.dim(q), n.dim(q1));
        qt.phis.push(LinMap::from_fn(f, &[dn * dm], &[dm * dn1], |ix| {
            // [m, n0, h] → [m·S̄(h), n0]
            m.basis(p, ix[0] % dm)
                .outer(&rho.image(&[ix[0] / dm]).map_axis(1, h.sbar(a)))
                .apply(&[0, 2], &m.action[p])
                .reshape(&[dm * dn1])
        }));
    }
    (t, qt)
}

/// `t̃(m⊗n) = nR¹_{β(v),β(v')}⊗mR²_{β(v),β(v')}` and
/// `t̃⁻¹(n⊗m) = mQ²_{β(v),β(w)}⊗nQ¹_{β(v),β(w)}` with the index maps of
/// [`yd_braiding`].
pub fn braiding_from_rq(
    b: &GradedBialgebra,
    m: &GradedModule,
    n: &GradedModule,
) -> Result<(FamilyMorphism, FamilyMorphism)> {
    let rq = b.rq.as_ref().ok_or(Error::RMatrixMissing)?;
    let g = &b.group;
    let f = b.core.field;
    let (nm, nn) = (m.y.len(), n.y.len());
    let mut t = FamilyMorphism {
        eta: Vec::new(),
        phis: Vec::new(),
    };
    for k in 0..nm * nn {
        let (p, q) = (k / nn, k % nn);
        let (x, y) = (m.y.beta(p), n.y.beta(q));
        let (c1, c2) = b.r_comps(x, y);
        let r = &rq.r[&(x, y)];
        let q0 = n.y.act(q, g.inv(x));
        t.eta.push(q0 * nm + p);
        let (dm, dn) = (m.dim(p), n.dim(q));
        t.phis.push(LinMap::from_fn(f, &[dm * dn], &[n.dim(q0) * dm], |ix| {
            let (mv, nv) = (m.basis(p, ix[0] / dn), n.basis(q, ix[0] % dn));
            let mut out = Tensor::zero(f, &[n.dim(q0), dm]);
            for (idx, s) in r.terms() {
                let left = n.act(q, c1, &nv, &b.core.basis(c1, idx[0]));
                let right = m.act(p, c2, &mv, &b.core.basis(c2, idx[1]));
                out = out.add(&left.outer(&right).scale(s));
            }
            out.reshape(&[n.dim(q0) * dm])
        }));
    }
    let mut qt = FamilyMorphism {
        eta: Vec::new(),
        phis: Vec::new(),
    };
    for k in 0..nn * nm {
        let (w, p) = (k / nm, k % nm);
        let (x, y) = (m.y.beta(p), n.y.beta(w));
        let (c1, c2) = b.q_comps(x, y);
        let qm = &rq.q[&(x, y)];
        let w1 = n.y.act(w, x);
        qt.eta.push(p * nn + w1);
        let (dm, dn) = (m.dim(p), n.dim(w));
        qt.phis.push(LinMap::from_fn(f, &[dn * dm], &[dm * n.dim(w1)], |ix| {
            let (nv, mv) = (n.basis(w, ix[0] / dm), m.basis(p, ix[0] % dm));
            let mut out = Tensor::zero(f, &[dm, n.dim(w1)]);
            for (idx, s) in qm.terms() {
                let left = m.act(p, c2, &mv, &b.core.basis(c2, idx[1]));
                let right = n.act(w, c1, &nv, &b.core.basis(c1, idx[0]));
                out = out.add(&left.outer(&right).scale(s));
            }
            out.reshape(&[dm * n.dim(w1)])
        }));
    }
    Ok((t, qt))
}

/// Reads `R_{g,g'} = t̃(1_g⊗1_{g'})` and `Q_{g,g'} = τ(t̃⁻¹(1_{g'}⊗1_g))` off a
/// braiding of the regular module `A` with itself.
pub fn extract_rq(b: &GradedBialgebra, t: &FamilyMorphism, tinv: &FamilyMorphism) -> Result<RMatrices> {
    let g = &b.group;
    let n = g.order();
    let ny = n * n;
    if t.phis.len() != ny * ny || tinv.phis.len() != ny * ny {
        return Err(Error::IndexMismatch(
            "braiding is not on the regular module pair".into(),
        ));
    }
    let unit = |x: usize| {
        b.core
            .unit(x)
            .cloned()
            .ok_or_else(|| Error::ShapeMismatch(format!("1_{} missing", g.label(x))))
    };
    let e = g.e();
    let (mut r, mut q) = (BTreeMap::new(), BTreeMap::new());
    for x in 0..n {
        for y in 0..n {
            let (u, v) = (unit(x)?, unit(y)?);
            let flat = |a: &Tensor, b2: &Tensor| a.outer(b2).reshape(&[a.shape()[0] * b2.shape()[0]]);
            let k = b.comp(e, x) * ny + b.comp(e, y);
            let (c1, c2) = b.r_comps(x, y);
            r.insert(
                (x, y),
                t.phis[k]
                    .apply(&flat(&u, &v))
                    .reshape(&[b.core.dim(c1), b.core.dim(c2)]),
            );
            let k = b.comp(e, y) * ny + b.comp(e, x);
            let (c1, c2) = b.q_comps(x, y);
            let out = tinv.phis[k]
                .apply(&flat(&v, &u))
                .reshape(&[b.core.dim(c2), b.core.dim(c1)]);
            q.insert((x, y), out.permute(&[1, 0]));
        }
    }
    Ok(RMatrices { r, q })
}

/// The Yetter-Drinfeld module `⊕_λ A_{λ,xγ(λ)}`: the orbit of `x` inside
/// the regular module of the double.
pub fn adjoint_yd_module(dd: &DrinfeldDouble, x: usize) -> Result<YDModule> {
    let core = &dd.bialgebra.core;
    let sub = restrict_module(&regular_graded_module(core), &orbit_subset(core, x))?;
    graded_to_yd(dd, &sub)
}
