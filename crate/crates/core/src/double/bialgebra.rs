//! Graded bialgebras over the crossed datum `𝔾 = (G×G, G, G)`: per-`λ`
//! group-coalgebra structure on `(A_{λ,g})_g`, antipodes and R/Q matrices.

use std::collections::BTreeMap;

use crate::discrete::{make_crossed_datum, FiniteGroup};
use crate::error::{Error, Result};
use crate::graded::{check_graded_algebra, GradedAlgebra};
use crate::idx;
use crate::linalg::{LinMap, Tensor};
use crate::report::ValidationReport;

/// `S_{λ,g}, S̄_{λ,g}: A_{λ,g⁻¹} → A_{λ⁻¹,λgλ⁻¹}`, keyed by `(λ, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antipodes {
    pub s: BTreeMap<(usize, usize), LinMap>,
    pub sbar: BTreeMap<(usize, usize), LinMap>,
}

/// `R_{g,g'} ∈ A_{g⁻¹,gg'g⁻¹}⊗A_{e,g}` and `Q_{g,g'} ∈ A_{g,g⁻¹g'g}⊗A_{e,g}`,
/// keyed by `(g, g')` and stored as rank-2 tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrices {
    pub r: BTreeMap<(usize, usize), Tensor>,
    pub q: BTreeMap<(usize, usize), Tensor>,
}

/// A `𝔾`-graded algebra with `Δ_{λ,g,g'}: A_{λ,gg'} → A_{λ,g}⊗A_{λ,g'}` and
/// `ε_λ: A_{λ,e} → k`. Component `(λ, g)` has index `λ·|G| + g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBialgebra {
    pub group: FiniteGroup,
    pub core: GradedAlgebra,
    pub comult: BTreeMap<(usize, usize, usize), LinMap>,
    pub counit: Vec<LinMap>,
    pub antipodes: Option<Antipodes>,
    pub rq: Option<RMatrices>,
}

impl GradedBialgebra {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn comp(&self, l: usize, g: usize) -> usize {
        l * self.order() + g
    }

    pub fn dim(&self, l: usize, g: usize) -> usize {
        self.core.dim(self.comp(l, g))
    }

    pub fn basis(&self, l: usize, g: usize, i: usize) -> Tensor {
        self.core.basis(self.comp(l, g), i)
    }

    pub fn label(&self, g: usize) -> &str {
        self.group.label(g)
    }

    /// `x^λ = λ⁻¹xλ`.
    pub fn conj(&self, x: usize, l: usize) -> usize {
        self.group.conj(x, l)
    }

    pub fn d(&self, l: usize, g: usize, g2: usize) -> &LinMap {
        &self.comult[&(l, g, g2)]
    }

    /// Components of `R_{g,g'}`.
    pub fn r_comps(&self, g: usize, g2: usize) -> (usize, usize) {
        let gi = self.group.inv(g);
        (self.comp(gi, self.conj(g2, gi)), self.comp(self.group.e(), g))
    }

    /// Components of `Q_{g,g'}`.
    pub fn q_comps(&self, g: usize, g2: usize) -> (usize, usize) {
        (self.comp(g, self.conj(g2, g)), self.comp(self.group.e(), g))
    }

    /// Domain and codomain components of `S_{λ,g}`.
    pub fn s_comps(&self, l: usize, g: usize) -> (usize, usize) {
        let li = self.group.inv(l);
        (self.comp(l, self.group.inv(g)), self.comp(li, self.conj(g, li)))
    }

    /// Componentwise product `(x¹y¹)⊗(x²y²)` of `x ∈ A_{c₁}⊗A_{c₂}` and
    /// `y ∈ A_{c₃}⊗A_{c₄}`, with the two target components.
    pub fn mul_pair(&self, x: &Tensor, cx: (usize, usize), y: &Tensor, cy: (usize, usize)) -> (Tensor, (usize, usize)) {
        let a = &self.core;
        let t = (a.target(cx.0, cy.0), a.target(cx.1, cy.1));
        let out = match (a.mult.get(&(cx.0, cy.0)), a.mult.get(&(cx.1, cy.1))) {
            (Some(m1), Some(m2)) if a.composable(cx.0, cy.0) && a.composable(cx.1, cy.1) => {
                x.outer(y).apply(&[0, 2], m1).apply(&[1, 2], m2)
            }
            _ => Tensor::zero(a.field, &[a.dim(t.0), a.dim(t.1)]),
        };
        (out, t)
    }

    fn unit(&self, g: usize) -> Tensor {
        self.core
            .unit(g)
            .cloned()
            .unwrap_or_else(|| Tensor::zero(self.core.field, &[self.dim(self.group.e(), g)]))
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.core.check_shapes()?;
        let g = &self.group;
        let n = g.order();
        if self.core.datum != make_crossed_datum(g) {
            return Err(Error::GroupMismatch(
                "core is not graded by the crossed datum of the group".into(),
            ));
        }
        for l in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let m = self.comult.get(&(l, a, b)).ok_or_else(|| {
                        Error::MissingComultiplication(format!("Δ_{{{},{},{}}}", g.label(l), g.label(a), g.label(b)))
                    })?;
                    if m.domain() != [self.dim(l, g.mul(a, b))] || m.codomain() != [self.dim(l, a), self.dim(l, b)] {
                        return Err(Error::ShapeMismatch(format!(
                            "Δ_{{{},{},{}}} has the wrong shape",
                            g.label(l),
                            g.label(a),
                            g.label(b)
                        )));
                    }
                }
            }
        }
        if self.counit.len() != n {
            return Err(Error::ShapeMismatch("one counit per λ expected".into()));
        }
        for (l, eps) in self.counit.iter().enumerate() {
            if eps.domain() != [self.dim(l, g.e())] || !eps.codomain().is_empty() {
                return Err(Error::ShapeMismatch(format!("ε_{} has the wrong shape", g.label(l))));
            }
        }
        if let Some(ap) = &self.antipodes {
            for l in 0..n {
                for x in 0..n {
                    let (src, dst) = self.s_comps(l, x);
                    for (name, maps) in [("S", &ap.s), ("S̄", &ap.sbar)] {
                        let ok = maps.get(&(l, x)).is_some_and(|m| {
                            m.domain() == [self.core.dim(src)] && m.codomain() == [self.core.dim(dst)]
                        });
                        if !ok {
                            return Err(Error::ShapeMismatch(format!(
                                "{name}_{{{},{}}} missing or misshapen",
                                g.label(l),
                                g.label(x)
                            )));
                        }
                    }
                }
            }
        }
        if let Some(rq) = &self.rq {
            for a in 0..n {
                for b in 0..n {
                    for (name, map, (c1, c2)) in [("R", &rq.r, self.r_comps(a, b)), ("Q", &rq.q, self.q_comps(a, b))] {
                        let ok = map
                            .get(&(a, b))
                            .is_some_and(|t| t.shape() == [self.core.dim(c1), self.core.dim(c2)]);
                        if !ok {
                            return Err(Error::ShapeMismatch(format!(
                                "{name}_{{{},{}}} missing or misshapen",
                                g.label(a),
                                g.label(b)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn shape_failure(r: &mut ValidationReport, id: &str, e: &Error) {
    r.check(id, "structure maps present with matching shapes")
        .require(false, Vec::new, || (e.to_string(), String::new()));
}

/// Graded-algebra axioms of the core, per-`λ` coassociativity and counit, and
/// the four compatibilities: `Δ(aa') = Δ(a)Δ(a')`, `ε(aa') = ε(a)ε(a')`,
/// `Δ_{e,g,g₁}(1_{gg₁}) = 1_g⊗1_{g₁}` and `ε_e(1_e) = 1`.
pub fn check_graded_bialgebra(a: &GradedBialgebra) -> ValidationReport {
    let mut r = ValidationReport::new();
    if let Err(e) = a.check_shapes() {
        shape_failure(&mut r, "bialgebra.shape", &e);
        return r;
    }
    r.absorb("", check_graded_algebra(&a.core));
    let g = &a.group;
    let n = g.order();
    let f = a.core.field;
    let e = g.e();
    for l in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let src = g.mul(g.mul(x, y), z);
                    for i in 0..a.dim(l, src) {
                        let t = a.basis(l, src, i);
                        let lhs = t.map_axis(0, a.d(l, x, g.mul(y, z))).map_axis(1, a.d(l, y, z));
                        let rhs = t.map_axis(0, a.d(l, g.mul(x, y), z)).map_axis(0, a.d(l, x, y));
                        r.check(
                            "bialgebra.coassociativity",
                            "(id⊗Δ_{λ,g',g''})Δ_{λ,g,g'g''} = (Δ_{λ,g,g'}⊗id)Δ_{λ,gg',g''}",
                        )
                        .compare(
                            idx!(
                                "λ" = g.label(l),
                                "g" = g.label(x),
                                "g'" = g.label(y),
                                "g''" = g.label(z),
                                "a" = i
                            ),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
            for i in 0..a.dim(l, x) {
                let t = a.basis(l, x, i);
                let right = t.map_axis(0, a.d(l, x, e)).map_axis(1, &a.counit[l]);
                let left = t.map_axis(0, a.d(l, e, x)).map_axis(0, &a.counit[l]);
                let rec = r.check("bialgebra.counit", "(id⊗ε_λ)Δ_{λ,g,e} = (ε_λ⊗id)Δ_{λ,e,g} = id");
                rec.compare(
                    idx!("λ" = g.label(l), "g" = g.label(x), "a" = i, "side" = "right"),
                    &right,
                    &t,
                );
                rec.compare(
                    idx!("λ" = g.label(l), "g" = g.label(x), "a" = i, "side" = "left"),
                    &left,
                    &t,
                );
            }
        }
    }
    for l in 0..n {
        for l2 in 0..n {
            let ll = g.mul(l, l2);
            for x in 0..n {
                let x2 = a.conj(x, l2);
                let (c, c2) = (a.comp(l, x), a.comp(l2, x2));
                for i in 0..a.core.dim(c) {
                    for j in 0..a.core.dim(c2) {
                        let (u, v) = (a.core.basis(c, i), a.core.basis(c2, j));
                        let uv = a.core.mul(c, c2, &u, &v);
                        for p in 0..n {
                            // x = p·p₁
                            let p1 = g.mul(g.inv(p), x);
                            let (q, q1) = (a.conj(p, l2), a.conj(p1, l2));
                            let lhs = a.d(ll, q, q1).apply(&uv);
                            let du = a.d(l, p, p1).apply(&u);
                            let dv = a.d(l2, q, q1).apply(&v);
                            let (rhs, _) =
                                a.mul_pair(&du, (a.comp(l, p), a.comp(l, p1)), &dv, (a.comp(l2, q), a.comp(l2, q1)));
                            r.check(
                                "bialgebra.comult_multiplicative",
                                "Δ_{λλ',g^λ',g₁^λ'}(aa') = a_(1,g)a'_(1,g^λ') ⊗ a_(2,g₁)a'_(2,g₁^λ')",
                            )
                            .compare(
                                idx!(
                                    "λ" = g.label(l),
                                    "λ'" = g.label(l2),
                                    "g" = g.label(p),
                                    "g₁" = g.label(p1),
                                    "a" = i,
                                    "a'" = j
                                ),
                                &lhs,
                                &rhs,
                            );
                        }
                        if x == e {
                            let lhs = a.counit[ll].apply(&uv);
                            let rhs = a.counit[l].apply(&u).outer(&a.counit[l2].apply(&v));
                            r.check("bialgebra.counit_multiplicative", "ε_{λλ'}(aa') = ε_λ(a)ε_λ'(a')")
                                .compare(
                                    idx!("λ" = g.label(l), "λ'" = g.label(l2), "a" = i, "a'" = j),
                                    &lhs,
                                    &rhs,
                                );
                        }
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = a.d(e, x, y).apply(&a.unit(g.mul(x, y)));
            let rhs = a.unit(x).outer(&a.unit(y));
            r.check("bialgebra.comult_unit", "Δ_{e,g,g₁}(1_{gg₁}) = 1_g⊗1_{g₁}")
                .compare(idx!("g" = g.label(x), "g₁" = g.label(y)), &lhs, &rhs);
        }
    }
    r.check("bialgebra.counit_unit", "ε_e(1_e) = 1").compare(
        Vec::new,
        &a.counit[e].apply(&a.unit(e)),
        &Tensor::scalar(f, f.one()),
    );
    r
}

/// The four antipode identities on every basis element of every `A_{λ,e}`:
/// `a_(1,g)S_{λ,g}(a_(2,g⁻¹)) = a_(2,g)S̄_{λ,g}(a_(1,g⁻¹)) = ε_λ(a)1_{λgλ⁻¹}` and
/// `S_{λ,g}(a_(1,g⁻¹))a_(2,g) = S̄_{λ,g}(a_(2,g⁻¹))a_(1,g) = ε_λ(a)1_g`.
pub fn check_graded_hopf(a: &GradedBialgebra) -> Result<ValidationReport> {
    let ap = a.antipodes.as_ref().ok_or(Error::AntipodeMissing)?;
    let mut r = ValidationReport::new();
    if let Err(e) = a.check_shapes() {
        shape_failure(&mut r, "hopf.shape", &e);
        return Ok(r);
    }
    let g = &a.group;
    let n = g.order();
    let e = g.e();
    let core = &a.core;
    for l in 0..n {
        let li = g.inv(l);
        for x in 0..n {
            let xi = g.inv(x);
            let (s_src, s_dst) = a.s_comps(l, x);
            let (s, sb) = (&ap.s[&(l, x)], &ap.sbar[&(l, x)]);
            let (cx, cxi) = (a.comp(l, x), a.comp(l, xi));
            debug_assert_eq!(s_src, cxi);
            let conj = a.conj(x, li);
            for i in 0..a.dim(l, e) {
                let u = a.basis(l, e, i);
                let eps = a.counit[l].apply(&u).to_scalar();
                let at = || idx!("λ" = g.label(l), "g" = g.label(x), "a" = i);
                // Δ_{λ,g,g⁻¹}(a) and Δ_{λ,g⁻¹,g}(a)
                let d_xxi = a.d(l, x, xi).apply(&u);
                let d_xix = a.d(l, xi, x).apply(&u);
                let rhs1 = a.unit(conj).scale(&eps);
                let rhs2 = a.unit(x).scale(&eps);
                let m1 = &core.mult.get(&(cx, s_dst));
                let m2 = &core.mult.get(&(s_dst, cx));
                let prod = |t: Tensor, m: &Option<&LinMap>, dim: usize| match m {
                    Some(m) => t.apply(&[0, 1], m),
                    None => Tensor::zero(core.field, &[dim]),
                };
                let lhs = prod(d_xxi.map_axis(1, s), m1, a.dim(e, conj));
                r.check("hopf.antipode_right", "a_(1,g)S_{λ,g}(a_(2,g⁻¹)) = ε_λ(a)1_{λgλ⁻¹}")
                    .compare(at(), &lhs, &rhs1);
                let lhs = prod(d_xix.map_axis(0, sb).permute(&[1, 0]), m1, a.dim(e, conj));
                r.check("hopf.twisted_right", "a_(2,g)S̄_{λ,g}(a_(1,g⁻¹)) = ε_λ(a)1_{λgλ⁻¹}")
                    .compare(at(), &lhs, &rhs1);
                let lhs = prod(d_xix.map_axis(0, s), m2, a.dim(e, x));
                r.check("hopf.antipode_left", "S_{λ,g}(a_(1,g⁻¹))a_(2,g) = ε_λ(a)1_g")
                    .compare(at(), &lhs, &rhs2);
                let lhs = prod(d_xxi.map_axis(1, sb).permute(&[1, 0]), m2, a.dim(e, x));
                r.check("hopf.twisted_left", "S̄_{λ,g}(a_(2,g⁻¹))a_(1,g) = ε_λ(a)1_g")
                    .compare(at(), &lhs, &rhs2);
            }
        }
    }
    Ok(r)
}

/// The quasitriangular identities:
/// `R_{g,g'}Q_{g,gg'g⁻¹} = Q_{g,g'}R_{g,g⁻¹g'g} = 1_{g'}⊗1_g`,
/// `(Δ_{g⁻¹,gg'g⁻¹,gg''g⁻¹}⊗id)R_{g,g'g''} = R¹_{g,g'}⊗R̃¹_{g,g''}⊗R²_{g,g'}R̃²_{g,g''}`,
/// `R¹_{gg',g''}⊗Δ_{e,g,g'}(R²_{gg',g''}) = R¹_{g',g''}R̃¹_{g,g'g''g'⁻¹}⊗R̃²_{g,g'g''g'⁻¹}⊗R²_{g',g''}`
/// and `τ(Δ_{λ,g^λ,g'^λ}(a))R_{g^λ,g'^λ} = R_{g,g'}Δ_{λ,g'^{g⁻¹λ},g^λ}(a)`.
pub fn check_quasitriangular(a: &GradedBialgebra) -> Result<ValidationReport> {
    let rq = a.rq.as_ref().ok_or(Error::RMatrixMissing)?;
    let mut r = ValidationReport::new();
    if let Err(e) = a.check_shapes() {
        shape_failure(&mut r, "qt.shape", &e);
        return Ok(r);
    }
    let g = &a.group;
    let n = g.order();
    let e = g.e();
    let rr = |x: usize, y: usize| (&rq.r[&(x, y)], a.r_comps(x, y));
    let qq = |x: usize, y: usize| (&rq.q[&(x, y)], a.q_comps(x, y));
    for x in 0..n {
        for y in 0..n {
            let one = a.unit(y).outer(&a.unit(x));
            let (rt, rc) = rr(x, y);
            let (qt, qc) = qq(x, g.mul(g.mul(x, y), g.inv(x)));
            let (lhs, _) = a.mul_pair(rt, rc, qt, qc);
            r.check("qt.inverse_rq", "R_{g,g'}Q_{g,gg'g⁻¹} = 1_{g'}⊗1_g").compare(
                idx!("g" = g.label(x), "g'" = g.label(y)),
                &lhs,
                &one,
            );
            let (qt, qc) = qq(x, y);
            let (rt, rc) = rr(x, a.conj(y, x));
            let (lhs, _) = a.mul_pair(qt, qc, rt, rc);
            r.check("qt.inverse_qr", "Q_{g,g'}R_{g,g⁻¹g'g} = 1_{g'}⊗1_g").compare(
                idx!("g" = g.label(x), "g'" = g.label(y)),
                &lhs,
                &one,
            );
        }
    }
    for x in 0..n {
        let xi = g.inv(x);
        for y in 0..n {
            for z in 0..n {
                let at = || idx!("g" = g.label(x), "g'" = g.label(y), "g''" = g.label(z));
                let (r_yz, _) = rr(x, g.mul(y, z));
                let lhs = r_yz.map_axis(0, a.d(xi, a.conj(y, xi), a.conj(z, xi)));
                let ((r1, c1), (r2, c2)) = (rr(x, y), rr(x, z));
                let rhs = r1
                    .outer(r2)
                    .apply(&[1, 3], &a.core.mult[&(c1.1, c2.1)])
                    .permute(&[0, 2, 1]);
                r.check(
                    "qt.comult_first",
                    "(Δ⊗id)R_{g,g'g''} = R¹_{g,g'}⊗R̃¹_{g,g''}⊗R²_{g,g'}R̃²_{g,g''}",
                )
                .compare(at(), &lhs, &rhs);

                let (r_big, _) = rr(g.mul(x, y), z);
                let lhs = r_big.map_axis(1, a.d(e, x, y));
                let ((p, pc), (q, qc)) = (rr(y, z), rr(x, g.mul(g.mul(y, z), g.inv(y))));
                let rhs = match a.core.mult.get(&(pc.0, qc.0)) {
                    Some(m) if a.core.composable(pc.0, qc.0) => p.outer(q).apply(&[0, 2], m).permute(&[0, 2, 1]),
                    _ => Tensor::zero(a.core.field, lhs.shape()),
                };
                r.check(
                    "qt.comult_second",
                    "R¹_{gg',g''}⊗Δ_{e,g,g'}(R²_{gg',g''}) = R¹_{g',g''}R̃¹_{g,g'g''g'⁻¹}⊗R̃²_{g,g'g''g'⁻¹}⊗R²_{g',g''}",
                )
                .compare(at(), &lhs, &rhs);
            }
        }
    }
    for l in 0..n {
        for x in 0..n {
            for y in 0..n {
                let (xl, yl) = (a.conj(x, l), a.conj(y, l));
                let src = g.mul(xl, yl);
                let y2 = a.conj(y, g.mul(g.inv(x), l));
                let (rl, rlc) = rr(xl, yl);
                let (r0, r0c) = rr(x, y);
                for i in 0..a.dim(l, src) {
                    let u = a.basis(l, src, i);
                    let flipped = a.d(l, xl, yl).apply(&u).permute(&[1, 0]);
                    let (lhs, _) = a.mul_pair(&flipped, (a.comp(l, yl), a.comp(l, xl)), rl, rlc);
                    let split = a.d(l, y2, xl).apply(&u);
                    let (rhs, _) = a.mul_pair(r0, r0c, &split, (a.comp(l, y2), a.comp(l, xl)));
                    r.check(
                        "qt.intertwining",
                        "τ(Δ_{λ,g^λ,g'^λ}(a))R_{g^λ,g'^λ} = R_{g,g'}Δ_{λ,g'^{g⁻¹λ},g^λ}(a)",
                    )
                    .compare(
                        idx!("λ" = g.label(l), "g" = g.label(x), "g'" = g.label(y), "a" = i),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(r)
}
