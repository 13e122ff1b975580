//! Generalized Yetter-Drinfeld data `(K, H, A, C)` and their translation into
//! Doi-Hopf data over `K^op ⊗ H`, plus the conjugation families `φ` that turn
//! `H` into a bimodule coalgebra over itself.

use std::collections::BTreeMap;

use crate::discrete::{FiniteGroup, RightGSet};
use crate::error::{Error, Result};
use crate::idx;
use crate::linalg::{LinMap, Tensor};
use crate::report::ValidationReport;

use super::datum::{ComoduleAlgebra, DoiHopfDatum, ModuleCoalgebra};
use super::family::{opposite_hgc, tensor_hgc, Algebra, GroupCoalgebra, HopfGC};

/// A set with commuting left `L`- and right `G`-actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biset {
    pub carrier: Vec<String>,
    /// `left[l][x] = l·x`.
    pub left: Vec<Vec<usize>>,
    /// `right[x][g] = x·g`.
    pub right: Vec<Vec<usize>>,
}

impl Biset {
    /// `X = G` with both actions by multiplication.
    pub fn regular(g: &FiniteGroup) -> Biset {
        let n = g.order();
        Biset {
            carrier: g.elements.clone(),
            left: (0..n).map(|l| (0..n).map(|x| g.mul(l, x)).collect()).collect(),
            right: (0..n).map(|x| (0..n).map(|h| g.mul(x, h)).collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    /// `l·x·g`.
    pub fn act(&self, l: usize, x: usize, g: usize) -> usize {
        self.right[self.left[l][x]][g]
    }

    pub fn validate(&self, l: &FiniteGroup, g: &FiniteGroup) -> ValidationReport {
        let mut r = ValidationReport::new();
        for x in 0..self.len() {
            for a in 0..l.order() {
                for b in 0..l.order() {
                    let ok = self.left[a][self.left[b][x]] == self.left[l.mul(a, b)][x];
                    r.check("biset.left", "a·(b·x) = (ab)·x").require(
                        ok,
                        idx!("x" = &self.carrier[x], "a" = l.label(a), "b" = l.label(b)),
                        || ("not an action".into(), String::new()),
                    );
                }
                for h in 0..g.order() {
                    let ok = self.right[self.left[a][x]][h] == self.left[a][self.right[x][h]];
                    r.check("biset.commute", "(l·x)·g = l·(x·g)").require(
                        ok,
                        idx!("x" = &self.carrier[x], "l" = l.label(a), "g" = g.label(h)),
                        || ("actions do not commute".into(), String::new()),
                    );
                }
            }
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let ok = self.right[self.right[x][a]][b] == self.right[x][g.mul(a, b)];
                    r.check("biset.right", "(x·a)·b = x·(ab)").require(
                        ok,
                        idx!("x" = &self.carrier[x], "a" = g.label(a), "b" = g.label(b)),
                        || ("not an action".into(), String::new()),
                    );
                }
            }
            let ok = self.left[l.e()][x] == x && self.right[x][g.e()] == x;
            r.check("biset.unit", "e·x = x·e = x")
                .require(ok, idx!("x" = &self.carrier[x]), || {
                    ("unit moves x".into(), String::new())
                });
        }
        r
    }
}

/// Algebras `A_x` with `ρ_{l,x,g}: A_{lxg} → K_l⊗A_x⊗H_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomoduleAlgebra {
    pub x: Biset,
    pub algebras: Vec<Algebra>,
    pub coaction: BTreeMap<(usize, usize, usize), LinMap>,
}

/// A Λ-coalgebra with each `C_λ` a `(K_{ψ(λ)}, H_{γ(λ)})`-bimodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleCoalgebra {
    pub coalgebra: GroupCoalgebra,
    pub psi: Vec<usize>,
    pub gamma: Vec<usize>,
    /// `K_{ψ(λ)} ⊗ C_λ → C_λ`.
    pub left: Vec<LinMap>,
    /// `C_λ ⊗ H_{γ(λ)} → C_λ`.
    pub right: Vec<LinMap>,
}

/// The Doi-Hopf datum `(K^op⊗H, A, C)` with
/// `ρ_{x,(l,g)}(a) = a_[0,x] ⊗ S_l(a_[-1,l⁻¹]) ⊗ a_[1,g]` and `c·(k⊗h) = kch`.
/// Component `(l,g)` of `K^op⊗H` has index `l·|G| + g`. Fails with
/// `Validation` if the result is not a Doi-Hopf datum.
pub fn gyd_to_doihopf(k: &HopfGC, h: &HopfGC, a: &BicomoduleAlgebra, c: &BimoduleCoalgebra) -> Result<DoiHopfDatum> {
    let (lg, gg) = (&k.group, &h.group);
    let biset_report = a.x.validate(lg, gg);
    if !biset_report.passed() {
        return Err(Error::Validation(biset_report.summary()));
    }
    let kh = tensor_hgc(&opposite_hgc(k), h);
    let ng = gg.order();
    let f = h.field();
    let nx = a.x.len();
    let action: Vec<Vec<usize>> = (0..nx)
        .map(|x| {
            (0..kh.order())
                .map(|lgi| a.x.act(lg.inv(lgi / ng), x, lgi % ng))
                .collect()
        })
        .collect();
    let xset = RightGSet::new(a.x.carrier.clone(), kh.group.monoid.clone(), action)?;
    let mut coaction = BTreeMap::new();
    for x in 0..nx {
        for lgi in 0..kh.order() {
            let (l, g) = (lgi / ng, lgi % ng);
            let li = lg.inv(l);
            let rho = a
                .coaction
                .get(&(li, x, g))
                .ok_or_else(|| Error::ShapeMismatch(format!("bicoaction ({li},{x},{g}) missing")))?;
            let src = a.algebras[a.x.act(li, x, g)].dim();
            if rho.domain() != [src] || rho.codomain() != [k.dim(li), a.algebras[x].dim(), h.dim(g)] {
                return Err(Error::ShapeMismatch(format!(
                    "bicoaction ({li},{x},{g}) has the wrong shape"
                )));
            }
            let (dk, da, dh) = (k.dim(l), a.algebras[x].dim(), h.dim(g));
            let map = LinMap::from_fn(f, &[src], &[da, dk * dh], |i| {
                Tensor::basis(f, &[src], i)
                    .map_axis(0, rho)
                    .map_axis(0, k.s(l))
                    .permute(&[1, 0, 2])
                    .reshape(&[da, dk * dh])
            });
            coaction.insert((x, lgi), map);
        }
    }
    let comodule = ComoduleAlgebra {
        x: xset,
        algebras: a.algebras.clone(),
        coaction,
    };
    let nl = c.coalgebra.monoid.order();
    if c.psi.len() != nl || c.gamma.len() != nl || c.left.len() != nl || c.right.len() != nl {
        return Err(Error::IndexMismatch("one ψ, γ and action pair per λ expected".into()));
    }
    let mut actions = Vec::with_capacity(nl);
    for l in 0..nl {
        let (p, g) = (c.psi[l], c.gamma[l]);
        let (dc, dk, dh) = (c.coalgebra.dim(l), k.dim(p), h.dim(g));
        if c.left[l].domain() != [dk, dc] || c.right[l].domain() != [dc, dh] {
            return Err(Error::ShapeMismatch(format!(
                "bimodule actions at λ = {} have the wrong shape",
                c.coalgebra.monoid.label(l)
            )));
        }
        actions.push(LinMap::from_fn(f, &[dc, dk * dh], &[dc], |i| {
            let (kk, hh) = (i[1] / dh, i[1] % dh);
            Tensor::basis(f, &[dk, dc, dh], &[kk, i[0], hh])
                .apply(&[0, 1], &c.left[l])
                .apply(&[0, 1], &c.right[l])
        }));
    }
    let module = ModuleCoalgebra {
        coalgebra: c.coalgebra.clone(),
        gamma: (0..nl).map(|l| c.psi[l] * ng + c.gamma[l]).collect(),
        action: actions,
    };
    let datum = DoiHopfDatum::new(kh.semi, comodule, module)?;
    let report = datum.check();
    if !report.passed() {
        return Err(Error::Validation(report.summary()));
    }
    Ok(datum)
}

/// `A = H` with `ρ_{l,x,g}` the iterated comultiplication `Δ_{l,x,g}`.
pub fn regular_bicomodule_algebra(h: &HopfGC) -> BicomoduleAlgebra {
    let g = &h.group;
    let n = g.order();
    let mut coaction = BTreeMap::new();
    for l in 0..n {
        for x in 0..n {
            for r in 0..n {
                coaction.insert((l, x, r), h.delta3(l, x, r));
            }
        }
    }
    BicomoduleAlgebra {
        x: Biset::regular(g),
        algebras: h.semi.algebras.clone(),
        coaction,
    }
}

/// `C = H` with `ψ = γ = id` and both actions by multiplication.
pub fn regular_bimodule_coalgebra(h: &HopfGC) -> BimoduleCoalgebra {
    let n = h.order();
    BimoduleCoalgebra {
        coalgebra: h.semi.coalgebra.clone(),
        psi: (0..n).collect(),
        gamma: (0..n).collect(),
        left: h.semi.algebras.iter().map(|a| a.mult.clone()).collect(),
        right: h.semi.algebras.iter().map(|a| a.mult.clone()).collect(),
    }
}

/// Which side of `C_λ = H_λ` the family `φ` acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `φ_λ: H_{x₀λx₀⁻¹} → H_λ`, acting on the left.
    Left,
    /// `φ_λ: H_{x₀⁻¹λx₀} → H_λ`, acting on the right.
    Right,
}

fn phi_source(g: &FiniteGroup, x0: usize, side: Side, l: usize) -> usize {
    match side {
        Side::Left => g.mul(g.mul(x0, l), g.inv(x0)),
        Side::Right => g.conj(l, x0),
    }
}

/// Algebra-map property of each `φ_λ`, `εφ_e = ε`, and
/// `Δ_{λ,λ'}∘φ_{λλ'} = (φ_λ⊗φ_{λ'})∘Δ_{σ(λ),σ(λ')}` with `σ` the conjugation fixed by `side`.
pub fn check_phi_family(h: &HopfGC, x0: usize, side: Side, phis: &[LinMap]) -> Result<ValidationReport> {
    let g = &h.group;
    let n = g.order();
    if phis.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "{} maps given for {n} group elements",
            phis.len()
        )));
    }
    for (l, phi) in phis.iter().enumerate() {
        let s = phi_source(g, x0, side, l);
        if phi.domain() != [h.dim(s)] || phi.codomain() != [h.dim(l)] {
            return Err(Error::ShapeMismatch(format!(
                "φ_{} must map H_{} to H_{}",
                g.label(l),
                g.label(s),
                g.label(l)
            )));
        }
    }
    let mut r = ValidationReport::new();
    for l in 0..n {
        let s = phi_source(g, x0, side, l);
        let (src, dst) = (h.alg(s), h.alg(l));
        let phi = &phis[l];
        r.check("phi.unital", "φ_λ(1) = 1")
            .compare(idx!("λ" = g.label(l)), &phi.apply(&src.unit), &dst.unit);
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let (a, b) = (src.basis(i), src.basis(j));
                let lhs = phi.apply(&src.mul(&a, &b));
                let rhs = dst.mul(&phi.apply(&a), &phi.apply(&b));
                r.check("phi.multiplicative", "φ_λ(ab) = φ_λ(a)φ_λ(b)").compare(
                    idx!("λ" = g.label(l), "a" = i, "b" = j),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    let e = g.e();
    let se = phi_source(g, x0, side, e);
    for i in 0..h.dim(se) {
        let a = h.basis(se, i);
        let lhs = h.counit().apply(&phis[e].apply(&a));
        let rhs = h.counit().apply(&a);
        r.check("phi.counit", "εφ_e = ε").compare(idx!("h" = i), &lhs, &rhs);
    }
    for l in 0..n {
        for l2 in 0..n {
            let ll = g.mul(l, l2);
            let (s1, s2, s12) = (
                phi_source(g, x0, side, l),
                phi_source(g, x0, side, l2),
                phi_source(g, x0, side, ll),
            );
            for i in 0..h.dim(s12) {
                let a = h.basis(s12, i);
                let lhs = phis[ll].apply(&a).map_axis(0, h.d(l, l2));
                let rhs = a.map_axis(0, h.d(s1, s2)).map_axis(0, &phis[l]).map_axis(1, &phis[l2]);
                r.check("phi.comult", "Δ_{λ,λ'}φ_{λλ'} = (φ_λ⊗φ_{λ'})Δ").compare(
                    idx!("λ" = g.label(l), "λ'" = g.label(l2), "h" = i),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    Ok(r)
}

/// `C = H` as a bimodule coalgebra through `φ`: for `Side::Left`, `ψ(λ) = x₀λx₀⁻¹`,
/// `γ = id` and `k·c·h = φ_λ(k)ch`; for `Side::Right`, `ψ = id`, `γ(λ) = x₀⁻¹λx₀`
/// and `k·c·h = kcφ_λ(h)`.
pub fn phi_bimodule_coalgebra(h: &HopfGC, x0: usize, side: Side, phis: &[LinMap]) -> Result<BimoduleCoalgebra> {
    let report = check_phi_family(h, x0, side, phis)?;
    if !report.passed() {
        return Err(Error::Validation(report.summary()));
    }
    let g = &h.group;
    let n = g.order();
    let mut c = regular_bimodule_coalgebra(h);
    for l in 0..n {
        let s = phi_source(g, x0, side, l);
        let m = &h.alg(l).mult;
        let id = LinMap::identity(h.field(), &[h.dim(l)]);
        match side {
            Side::Left => {
                c.psi[l] = s;
                c.left[l] = m.compose(&phis[l].kron(&id));
            }
            Side::Right => {
                c.gamma[l] = s;
                c.right[l] = m.compose(&id.kron(&phis[l]));
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrete::make_crossed_datum;
    use crate::hopf::generators::{constant_family, kc2, sweedler, trivial_family};
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn trivial_data_give_trivial_datum() {
        let c2 = FiniteGroup::cyclic(2);
        let h = trivial_family(Q, &c2);
        let d = gyd_to_doihopf(&h, &h, &regular_bicomodule_algebra(&h), &regular_bimodule_coalgebra(&h)).unwrap();
        assert_eq!(d.discrete, make_crossed_datum(&c2));
        assert!((0..4).all(|c| d.hopf.dim(c) == 1));
    }

    #[test]
    fn phi_identity_passes_and_doubling_fails() {
        let c2 = FiniteGroup::cyclic(2);
        let h = constant_family(&kc2(Q), &c2).unwrap();
        let ids: Vec<LinMap> = (0..2).map(|_| LinMap::identity(Q, &[2])).collect();
        for x0 in 0..2 {
            for side in [Side::Left, Side::Right] {
                assert!(check_phi_family(&h, x0, side, &ids).unwrap().passed());
            }
        }
        let mut bad = ids.clone();
        bad[0] = bad[0].scale(&Q.int(2));
        let r = check_phi_family(&h, 0, Side::Left, &bad).unwrap();
        assert!(r.fails("phi.counit"));
        assert!(matches!(
            check_phi_family(&h, 0, Side::Left, &ids[..1]),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn phi_twisted_sweedler_datum_is_valid() {
        // H₄ over the trivial group; x ↦ −x is a Hopf automorphism, g ↦ −g is
        // an algebra map but not a coalgebra map
        let h = sweedler(Q).unwrap();
        let signed =
            |signs: [i64; 4]| LinMap::from_fn(Q, &[4], &[4], |i| Tensor::basis(Q, &[4], i).scale(&Q.int(signs[i[0]])));
        let flip_x = signed([1, 1, -1, -1]);
        assert!(check_phi_family(&h, 0, Side::Right, std::slice::from_ref(&flip_x))
            .unwrap()
            .passed());
        let c = phi_bimodule_coalgebra(&h, 0, Side::Right, &[flip_x]).unwrap();
        assert!(gyd_to_doihopf(&h, &h, &regular_bicomodule_algebra(&h), &c).is_ok());
        let r = check_phi_family(&h, 0, Side::Left, &[signed([1, -1, 1, -1])]).unwrap();
        assert!(r.fails("phi.comult") && r.fails("phi.counit"));
        assert!(!r.fails("phi.multiplicative"));
    }
}
