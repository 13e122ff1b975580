//! The Drinfeld double of a Hopf G-coalgebra as a graded bialgebra over the
//! crossed datum, its antipodes and R/Q matrices, and Yetter-Drinfeld modules.

pub mod bialgebra;
pub mod yd;

use std::collections::BTreeMap;

use crate::discrete::make_crossed_datum;
use crate::error::{Error, Result};
use crate::graded::{alpha_iso, check_alpha, dual_smash, koppinen_smash, GradedAlgebra, GradedMap};
use crate::hopf::{gyd_to_doihopf, regular_bicomodule_algebra, regular_bimodule_coalgebra, DoiHopfDatum, HopfGC};
use crate::linalg::{LinMap, Tensor};

pub use bialgebra::{
    check_graded_bialgebra, check_graded_hopf, check_quasitriangular, Antipodes, GradedBialgebra, RMatrices,
};
pub use yd::{
    adjoint_yd_module, braiding_from_rq, check_yd_module, check_yd_morphism, compose_morphisms, extract_rq,
    graded_module_tensor, graded_to_yd, graded_unit, tensor_morphisms, yd_braiding, yd_tensor, yd_to_graded, yd_unit,
    YDModule,
};

/// Which product realizes the double.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Form {
    /// `⊕ H*_{λ⁻¹}#H_g`.
    Smash,
    /// `⊕ Hom(H_{λ⁻¹}, H_g)`.
    Koppinen,
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::Smash => "smash",
            Form::Koppinen => "koppinen",
        }
    }

    pub fn parse(s: &str) -> Option<Form> {
        match s {
            "smash" => Some(Form::Smash),
            "koppinen" => Some(Form::Koppinen),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldDouble {
    pub hopf: HopfGC,
    pub form: Form,
    pub bialgebra: GradedBialgebra,
}

/// The Doi-Hopf datum `(H^op⊗H, H, H)` with `c·(k⊗h) = kch`, graded by
/// `𝔾 = (G×G, G, G)`.
pub fn double_datum(h: &HopfGC) -> Result<DoiHopfDatum> {
    let d = gyd_to_doihopf(h, h, &regular_bicomodule_algebra(h), &regular_bimodule_coalgebra(h))?;
    if d.discrete != make_crossed_datum(&h.group) {
        return Err(Error::GroupMismatch(
            "double datum is not the crossed datum of the group".into(),
        ));
    }
    Ok(d)
}

/// `Mᵀ: [d] → [d, d]`, the dual comultiplication of an algebra.
fn transpose_mult(m: &LinMap, d: usize) -> LinMap {
    LinMap::from_entries(
        m.field(),
        &[d],
        &[d, d],
        m.entries().map(|(dom, cod, s)| (cod, dom, s.clone())),
    )
}

/// Builds the double of a Hopf G-coalgebra with `Δ`, `ε`, `S`, `S̄`, `R` and
/// `Q`. Everything is computed in the smash basis `δ_i#e_j` (index
/// `i·dim H_g + j`) and carried to the Koppinen form through `α`.
pub fn build_double(h: &HopfGC, form: Form) -> Result<DrinfeldDouble> {
    let report = h.check();
    if !report.passed() {
        return Err(Error::Validation(report.summary()));
    }
    let d = double_datum(h)?;
    let alpha = check_alpha(&d)?;
    if !alpha.passed() {
        return Err(Error::Validation(alpha.summary()));
    }
    let smash = dual_smash(&d)?;
    let g = &h.group;
    let f = h.field();
    let n = g.order();
    let e = g.e();
    let comp = |l: usize, x: usize| l * n + x;
    // dimension of H*_{λ⁻¹}
    let dl = |l: usize| h.dim(g.inv(l));
    let eps_coords: Vec<_> = (0..h.dim(e))
        .map(|k| h.counit().apply(&h.basis(e, k)).to_scalar())
        .collect();
    let eps_e = Tensor::from_dense(f, &eps_coords);

    let mut comult = BTreeMap::new();
    for l in 0..n {
        let li = g.inv(l);
        let dual_d = transpose_mult(&h.alg(li).mult, dl(l));
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                let (dab, da, db) = (h.dim(ab), h.dim(a), h.dim(b));
                let map = LinMap::from_fn(f, &[dl(l) * dab], &[dl(l) * da, dl(l) * db], |ix| {
                    let (i, j) = (ix[0] / dab, ix[0] % dab);
                    dual_d
                        .image(&[i])
                        .outer(&h.d(a, b).image(&[j]))
                        .permute(&[0, 2, 1, 3])
                        .reshape(&[dl(l) * da, dl(l) * db])
                });
                comult.insert((l, a, b), map);
            }
        }
    }
    let counit: Vec<LinMap> = (0..n)
        .map(|l| {
            let one = h.one(g.inv(l));
            let coords: Vec<_> = (0..dl(l))
                .flat_map(|i| eps_coords.iter().map(move |s| &one.get(&[i]) * s))
                .collect();
            LinMap::functional(f, &coords)
        })
        .collect();

    let mut s = BTreeMap::new();
    let mut sbar = BTreeMap::new();
    for l in 0..n {
        let li = g.inv(l);
        for x in 0..n {
            let xi = g.inv(x);
            let cx = g.conj(x, li);
            let (left, right) = (comp(e, x), comp(li, cx));
            let dsrc = dl(l) * h.dim(xi);
            for (maps, outer, inner) in [(&mut s, h.s(x), h.sbar(li)), (&mut sbar, h.sbar(x), h.s(li))] {
                let map = LinMap::from_fn(f, &[dsrc], &[smash.dim(right)], |ix| {
                    let (i, j) = (ix[0] / h.dim(xi), ix[0] % h.dim(xi));
                    let u = eps_e.outer(&outer.image(&[j])).reshape(&[smash.dim(left)]);
                    // δ_i∘S_{λ⁻¹} over the basis of H_λ
                    let coords: Vec<_> = (0..h.dim(l)).map(|k| inner.image(&[k]).get(&[i])).collect();
                    let v = Tensor::from_dense(f, &coords)
                        .outer(h.one(cx))
                        .reshape(&[smash.dim(right)]);
                    smash.mul(left, right, &u, &v)
                });
                maps.insert((l, x), map);
            }
        }
    }

    let mut r = BTreeMap::new();
    let mut q = BTreeMap::new();
    for a in 0..n {
        let ai = g.inv(a);
        for b in 0..n {
            // R: δ_i, e_i over H_a
            let c = g.conj(b, ai);
            let mut t = Tensor::zero(f, &[smash.dim(comp(ai, c)), smash.dim(comp(e, a))]);
            for i in 0..h.dim(a) {
                let left = Tensor::basis(f, &[h.dim(a)], &[i])
                    .outer(h.one(c))
                    .reshape(&[smash.dim(comp(ai, c))]);
                let right = eps_e.outer(&h.basis(a, i)).reshape(&[smash.dim(comp(e, a))]);
                t = t.add(&left.outer(&right));
            }
            r.insert((a, b), t);
            // Q: δ_i, e_i over H_{a⁻¹}
            let c = g.conj(b, a);
            let mut t = Tensor::zero(f, &[smash.dim(comp(a, c)), smash.dim(comp(e, a))]);
            for i in 0..h.dim(ai) {
                let left = Tensor::basis(f, &[h.dim(ai)], &[i])
                    .outer(h.one(c))
                    .reshape(&[smash.dim(comp(a, c))]);
                let right = eps_e.outer(&h.sbar(a).image(&[i])).reshape(&[smash.dim(comp(e, a))]);
                t = t.add(&left.outer(&right));
            }
            q.insert((a, b), t);
        }
    }

    let smash_bialgebra = GradedBialgebra {
        group: g.clone(),
        core: smash,
        comult,
        counit,
        antipodes: Some(Antipodes { s, sbar }),
        rq: Some(RMatrices { r, q }),
    };
    let bialgebra = match form {
        Form::Smash => smash_bialgebra,
        Form::Koppinen => {
            let (fwd, bwd) = alpha_iso(&d)?;
            transport(&smash_bialgebra, koppinen_smash(&d)?, &fwd, &bwd)
        }
    };
    Ok(DrinfeldDouble {
        hopf: h.clone(),
        form,
        bialgebra,
    })
}

/// Carries the coalgebra data of `b` along the algebra isomorphism `fwd`
/// (inverse `bwd`) onto `core`.
fn transport(b: &GradedBialgebra, core: GradedAlgebra, fwd: &GradedMap, bwd: &GradedMap) -> GradedBialgebra {
    let comp = |l: usize, x: usize| b.comp(l, x);
    let g = &b.group;
    let comult = b
        .comult
        .iter()
        .map(|(&(l, x, y), m)| {
            let map = LinMap::from_fn(m.field(), m.domain(), m.codomain(), |ix| {
                let t = Tensor::basis(m.field(), m.domain(), ix).map_axis(0, &bwd.maps[comp(l, g.mul(x, y))]);
                m.apply(&t)
                    .map_axis(0, &fwd.maps[comp(l, x)])
                    .map_axis(1, &fwd.maps[comp(l, y)])
            });
            ((l, x, y), map)
        })
        .collect();
    let counit = b
        .counit
        .iter()
        .enumerate()
        .map(|(l, eps)| eps.compose(&bwd.maps[comp(l, g.e())]))
        .collect();
    let antipodes = b.antipodes.as_ref().map(|ap| {
        let carry = |maps: &BTreeMap<(usize, usize), LinMap>| {
            maps.iter()
                .map(|(&(l, x), m)| {
                    let (src, dst) = b.s_comps(l, x);
                    ((l, x), fwd.maps[dst].compose(&m.compose(&bwd.maps[src])))
                })
                .collect()
        };
        Antipodes {
            s: carry(&ap.s),
            sbar: carry(&ap.sbar),
        }
    });
    let rq = b.rq.as_ref().map(|rq| {
        let carry = |ts: &BTreeMap<(usize, usize), Tensor>, comps: &dyn Fn(usize, usize) -> (usize, usize)| {
            ts.iter()
                .map(|(&(x, y), t)| {
                    let (c1, c2) = comps(x, y);
                    ((x, y), t.map_axis(0, &fwd.maps[c1]).map_axis(1, &fwd.maps[c2]))
                })
                .collect()
        };
        RMatrices {
            r: carry(&rq.r, &|x, y| b.r_comps(x, y)),
            q: carry(&rq.q, &|x, y| b.q_comps(x, y)),
        }
    });
    GradedBialgebra {
        group: b.group.clone(),
        core,
        comult,
        counit,
        antipodes,
        rq,
    }
}
