//! Group-coalgebras, semi-Hopf and Hopf group-coalgebras.

use std::collections::BTreeMap;

use crate::discrete::{FiniteGroup, FiniteMonoid};
use crate::error::{Error, Result};
use crate::idx;
use crate::linalg::{Field, LinMap, Space, Tensor};
use crate::report::ValidationReport;

/// A finite-dimensional unital associative algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub space: Space,
    /// `[d, d] → [d]`.
    pub mult: LinMap,
    /// Shape `[d]`.
    pub unit: Tensor,
}

impl Algebra {
    pub fn new(space: Space, mult: LinMap, unit: Tensor) -> Result<Algebra> {
        let d = space.dim();
        if mult.domain() != [d, d] || mult.codomain() != [d] || unit.shape() != [d] {
            return Err(Error::ShapeMismatch(format!(
                "algebra {}: multiplication or unit does not match dimension {d}",
                space.label
            )));
        }
        Ok(Algebra { space, mult, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field, label: &str) -> Algebra {
        Algebra {
            space: Space::new(label, vec!["1".into()]).unwrap(),
            mult: LinMap::identity(field, &[1]).reshaped(&[1, 1], &[1]),
            unit: Tensor::basis(field, &[1], &[0]),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn basis(&self, i: usize) -> Tensor {
        Tensor::basis(self.field(), &[self.dim()], &[i])
    }

    pub fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        a.outer(b).apply(&[0, 1], &self.mult)
    }

    pub fn opposite(&self) -> Algebra {
        Algebra {
            space: self.space.clone(),
            mult: self.mult.swap_inputs(),
            unit: self.unit.clone(),
        }
    }

    /// `self ⊗ other` with componentwise multiplication, row-major basis.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (a, b) = (self.dim(), other.dim());
        let f = self.field();
        let mult = LinMap::from_fn(f, &[a * b, a * b], &[a * b], |idx| {
            let (i, j) = (idx[0] / b, idx[0] % b);
            let (k, l) = (idx[1] / b, idx[1] % b);
            self.mul(&self.basis(i), &self.basis(k))
                .outer(&other.mul(&other.basis(j), &other.basis(l)))
                .reshape(&[a * b])
        });
        Algebra {
            space: crate::linalg::tensor_space(&self.space, &other.space),
            mult,
            unit: self.unit.outer(&other.unit).reshape(&[a * b]),
        }
    }

    /// Associativity and two-sided unit on all basis elements.
    pub fn check_into(&self, r: &mut ValidationReport, id: &str, label: &str) {
        let n = self.dim();
        let e: Vec<Tensor> = (0..n).map(|i| self.basis(i)).collect();
        let products: Vec<Vec<Tensor>> = (0..n)
            .map(|i| (0..n).map(|j| self.mul(&e[i], &e[j])).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.mul(&products[i][j], &e[k]);
                    let rhs = self.mul(&e[i], &products[j][k]);
                    r.check(&format!("{id}.associativity"), "(ab)c = a(bc)").compare(
                        idx!("component" = label, "a" = i, "b" = j, "c" = k),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
        for i in 0..n {
            let l = self.mul(&self.unit, &e[i]);
            let rr = self.mul(&e[i], &self.unit);
            r.check(&format!("{id}.unit"), "1a = a1 = a")
                .compare(idx!("component" = label, "a" = i), &l, &e[i]);
            r.check(&format!("{id}.unit"), "1a = a1 = a")
                .compare(idx!("component" = label, "a" = i), &rr, &e[i]);
        }
    }
}

/// Factorwise product `(a_1⊗…⊗a_n)(b_1⊗…⊗b_n)` of two tensors of the same shape.
pub fn mul_factors(x: &Tensor, y: &Tensor, algebras: &[&Algebra]) -> Tensor {
    let n = algebras.len();
    assert_eq!(x.rank(), n, "mul_factors rank");
    let mut t = x.outer(y);
    for (k, alg) in algebras.iter().enumerate() {
        t = t.apply(&[k, n], &alg.mult);
    }
    t
}

/// A family of spaces `C_λ` indexed by a monoid with `Δ_{λ,λ'}: C_{λλ'} → C_λ⊗C_{λ'}`
/// and `ε: C_e → k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCoalgebra {
    pub field: Field,
    pub monoid: FiniteMonoid,
    pub spaces: Vec<Space>,
    pub comult: BTreeMap<(usize, usize), LinMap>,
    pub counit: LinMap,
}

impl GroupCoalgebra {
    pub fn dim(&self, l: usize) -> usize {
        self.spaces[l].dim()
    }

    pub fn basis(&self, l: usize, i: usize) -> Tensor {
        Tensor::basis(self.field, &[self.dim(l)], &[i])
    }

    pub fn delta(&self, a: usize, b: usize) -> Result<&LinMap> {
        self.comult.get(&(a, b)).ok_or_else(|| {
            Error::MissingComultiplication(format!("Δ_{{{},{}}}", self.monoid.label(a), self.monoid.label(b)))
        })
    }

    /// `Δ_{a,b}` assuming it is present (checked by [`GroupCoalgebra::check_shapes`]).
    pub fn d(&self, a: usize, b: usize) -> &LinMap {
        self.delta(a, b).expect("comultiplication present")
    }

    /// `(Δ_{a,b}⊗id)Δ_{ab,c}: C_{abc} → C_a⊗C_b⊗C_c`.
    pub fn delta3(&self, a: usize, b: usize, c: usize) -> LinMap {
        let m = &self.monoid;
        let ab = m.mul(a, b);
        let src = self.dim(m.mul(ab, c));
        LinMap::from_fn(self.field, &[src], &[self.dim(a), self.dim(b), self.dim(c)], |idx| {
            Tensor::basis(self.field, &[src], idx)
                .map_axis(0, self.d(ab, c))
                .map_axis(0, self.d(a, b))
        })
    }

    /// Every `Δ_{λ,λ'}` and `ε` present with matching shapes.
    pub fn check_shapes(&self) -> Result<()> {
        let m = &self.monoid;
        if self.spaces.len() != m.order() {
            return Err(Error::ShapeMismatch("one space per monoid element expected".into()));
        }
        for a in 0..m.order() {
            for b in 0..m.order() {
                let d = self.delta(a, b)?;
                if d.domain() != [self.dim(m.mul(a, b))] || d.codomain() != [self.dim(a), self.dim(b)] {
                    return Err(Error::ShapeMismatch(format!(
                        "Δ_{{{},{}}} has the wrong shape",
                        m.label(a),
                        m.label(b)
                    )));
                }
            }
        }
        if self.counit.domain() != [self.dim(m.e())] || !self.counit.codomain().is_empty() {
            return Err(Error::ShapeMismatch("counit has the wrong shape".into()));
        }
        Ok(())
    }

    pub fn check(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        if let Err(e) = self.check_shapes() {
            r.check("coalgebra.shape", "structure maps present")
                .require(false, Vec::new, || (e.to_string(), String::new()));
            return r;
        }
        let m = &self.monoid;
        let n = m.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (ab, bc) = (m.mul(a, b), m.mul(b, c));
                    let src = m.mul(ab, c);
                    for h in 0..self.dim(src) {
                        let t = self.basis(src, h);
                        let lhs = t.map_axis(0, self.d(a, bc)).map_axis(1, self.d(b, c));
                        let rhs = t.map_axis(0, self.d(ab, c)).map_axis(0, self.d(a, b));
                        r.check(
                            "coalgebra.coassociativity",
                            "(id⊗Δ_{b,c})Δ_{a,bc} = (Δ_{a,b}⊗id)Δ_{ab,c}",
                        )
                        .compare(
                            idx!("a" = m.label(a), "b" = m.label(b), "c" = m.label(c), "h" = h),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
        let e = m.e();
        for a in 0..n {
            for h in 0..self.dim(a) {
                let t = self.basis(a, h);
                let right = t.map_axis(0, self.d(a, e)).map_axis(1, &self.counit);
                let left = t.map_axis(0, self.d(e, a)).map_axis(0, &self.counit);
                let rec = r.check("coalgebra.counit", "(id⊗ε)Δ_{a,e} = (ε⊗id)Δ_{e,a} = id");
                rec.compare(idx!("a" = m.label(a), "h" = h, "side" = "right"), &right, &t);
                rec.compare(idx!("a" = m.label(a), "h" = h, "side" = "left"), &left, &t);
            }
        }
        r
    }
}

/// A group-coalgebra whose components are unital algebras with `ε` and every
/// `Δ` algebra maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiHopfGC {
    pub coalgebra: GroupCoalgebra,
    pub algebras: Vec<Algebra>,
}

impl SemiHopfGC {
    pub fn field(&self) -> Field {
        self.coalgebra.field
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.coalgebra.monoid
    }

    pub fn dim(&self, g: usize) -> usize {
        self.coalgebra.dim(g)
    }

    pub fn basis(&self, g: usize, i: usize) -> Tensor {
        self.coalgebra.basis(g, i)
    }

    pub fn alg(&self, g: usize) -> &Algebra {
        &self.algebras[g]
    }

    pub fn d(&self, a: usize, b: usize) -> &LinMap {
        self.coalgebra.d(a, b)
    }

    pub fn delta3(&self, a: usize, b: usize, c: usize) -> LinMap {
        self.coalgebra.delta3(a, b, c)
    }

    pub fn counit(&self) -> &LinMap {
        &self.coalgebra.counit
    }

    pub fn one(&self, g: usize) -> &Tensor {
        &self.algebras[g].unit
    }

    pub fn mul(&self, g: usize, a: &Tensor, b: &Tensor) -> Tensor {
        self.algebras[g].mul(a, b)
    }

    pub fn check(&self) -> ValidationReport {
        let mut r = self.coalgebra.check();
        if !r.passed() && r.record("coalgebra.shape").is_some() {
            return r;
        }
        let m = self.monoid();
        let f = self.field();
        for g in 0..m.order() {
            self.algebras[g].check_into(&mut r, "algebra", m.label(g));
        }
        let e = m.e();
        let eps = self.counit();
        for i in 0..self.dim(e) {
            for j in 0..self.dim(e) {
                let (a, b) = (self.basis(e, i), self.basis(e, j));
                let lhs = eps.apply(&self.mul(e, &a, &b));
                let rhs = eps.apply(&a).outer(&eps.apply(&b));
                r.check("counit.multiplicative", "ε(hk) = ε(h)ε(k)")
                    .compare(idx!("h" = i, "k" = j), &lhs, &rhs);
            }
        }
        r.check("counit.unital", "ε(1_e) = 1")
            .compare(Vec::new, &eps.apply(self.one(e)), &Tensor::scalar(f, f.one()));
        for a in 0..m.order() {
            for b in 0..m.order() {
                let ab = m.mul(a, b);
                let delta = self.d(a, b);
                let algs = [self.alg(a), self.alg(b)];
                for i in 0..self.dim(ab) {
                    for j in 0..self.dim(ab) {
                        let (x, y) = (self.basis(ab, i), self.basis(ab, j));
                        let lhs = delta.apply(&self.mul(ab, &x, &y));
                        let rhs = mul_factors(&delta.apply(&x), &delta.apply(&y), &algs);
                        r.check("comult.multiplicative", "Δ_{g,g'}(hk) = Δ_{g,g'}(h)Δ_{g,g'}(k)")
                            .compare(idx!("g" = m.label(a), "g'" = m.label(b), "h" = i, "k" = j), &lhs, &rhs);
                    }
                }
                let lhs = delta.apply(self.one(ab));
                let rhs = self.one(a).outer(self.one(b));
                r.check("comult.unital", "Δ_{g,g'}(1) = 1⊗1").compare(
                    idx!("g" = m.label(a), "g'" = m.label(b)),
                    &lhs,
                    &rhs,
                );
            }
        }
        r
    }
}

/// A semi-Hopf group-coalgebra over a group with antipodes `S_g: H_{g⁻¹} → H_g`
/// and twisted antipodes `S̄_g: H_{g⁻¹} → H_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfGC {
    pub semi: SemiHopfGC,
    pub group: FiniteGroup,
    pub antipode: Vec<LinMap>,
    pub twisted: Vec<LinMap>,
}

impl HopfGC {
    /// Installs `S̄_g = (S_{g⁻¹})⁻¹`.
    pub fn with_derived_twisted(semi: SemiHopfGC, group: FiniteGroup, antipode: Vec<LinMap>) -> Result<HopfGC> {
        let twisted = derive_twisted(&group, &antipode)?;
        Ok(HopfGC {
            semi,
            group,
            antipode,
            twisted,
        })
    }

    pub fn field(&self) -> Field {
        self.semi.field()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn dim(&self, g: usize) -> usize {
        self.semi.dim(g)
    }

    pub fn basis(&self, g: usize, i: usize) -> Tensor {
        self.semi.basis(g, i)
    }

    pub fn alg(&self, g: usize) -> &Algebra {
        self.semi.alg(g)
    }

    pub fn d(&self, a: usize, b: usize) -> &LinMap {
        self.semi.d(a, b)
    }

    pub fn delta3(&self, a: usize, b: usize, c: usize) -> LinMap {
        self.semi.delta3(a, b, c)
    }

    pub fn counit(&self) -> &LinMap {
        self.semi.counit()
    }

    pub fn one(&self, g: usize) -> &Tensor {
        self.semi.one(g)
    }

    pub fn mul(&self, g: usize, a: &Tensor, b: &Tensor) -> Tensor {
        self.semi.mul(g, a, b)
    }

    pub fn s(&self, g: usize) -> &LinMap {
        &self.antipode[g]
    }

    pub fn sbar(&self, g: usize) -> &LinMap {
        &self.twisted[g]
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.semi.coalgebra.check_shapes()?;
        if self.semi.monoid() != &self.group.monoid {
            return Err(Error::GroupMismatch("coalgebra monoid differs from the group".into()));
        }
        let n = self.order();
        if self.antipode.len() != n || self.twisted.len() != n || self.semi.algebras.len() != n {
            return Err(Error::ShapeMismatch(
                "one algebra and antipode per group element expected".into(),
            ));
        }
        for g in 0..n {
            let gi = self.group.inv(g);
            for (name, s) in [("S", &self.antipode[g]), ("S̄", &self.twisted[g])] {
                if s.domain() != [self.dim(gi)] || s.codomain() != [self.dim(g)] {
                    return Err(Error::ShapeMismatch(format!(
                        "{name}_{} has the wrong shape",
                        self.group.label(g)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn check(&self) -> ValidationReport {
        if let Err(e) = self.check_shapes() {
            let mut r = ValidationReport::new();
            r.check("hopf.shape", "structure maps present")
                .require(false, Vec::new, || (e.to_string(), String::new()));
            return r;
        }
        let mut r = self.semi.check();
        let g = &self.group;
        let e = g.e();
        let eps = self.counit();
        for x in 0..g.order() {
            let xi = g.inv(x);
            let alg = self.alg(x);
            let (s, sb) = (self.s(x), self.sbar(x));
            for i in 0..self.dim(e) {
                let h = self.basis(e, i);
                let rhs = self.one(x).scale(&eps.apply(&h).to_scalar());
                let at = idx!("g" = g.label(x), "h" = i);
                let d_ix = h.map_axis(0, self.d(xi, x));
                let d_xi = h.map_axis(0, self.d(x, xi));
                let lhs = d_ix.map_axis(0, s).apply(&[0, 1], &alg.mult);
                r.check("antipode.left", "S_g(h_(1,g⁻¹))h_(2,g) = ε(h)1_g")
                    .compare(at, &lhs, &rhs);
                let lhs = d_xi.map_axis(1, s).apply(&[0, 1], &alg.mult);
                r.check("antipode.right", "h_(1,g)S_g(h_(2,g⁻¹)) = ε(h)1_g").compare(
                    idx!("g" = g.label(x), "h" = i),
                    &lhs,
                    &rhs,
                );
                let lhs = d_ix.map_axis(0, sb).apply(&[1, 0], &alg.mult);
                r.check("twisted.left", "h_(2,g)S̄_g(h_(1,g⁻¹)) = ε(h)1_g").compare(
                    idx!("g" = g.label(x), "h" = i),
                    &lhs,
                    &rhs,
                );
                let lhs = d_xi.map_axis(1, sb).apply(&[1, 0], &alg.mult);
                r.check("twisted.right", "S̄_g(h_(2,g⁻¹))h_(1,g) = ε(h)1_g").compare(
                    idx!("g" = g.label(x), "h" = i),
                    &lhs,
                    &rhs,
                );
            }
            let f = self.field();
            let comp = sb.compose(self.s(xi));
            let id = LinMap::identity(f, &[self.dim(x)]);
            let comp2 = self.s(xi).compose(sb);
            let id2 = LinMap::identity(f, &[self.dim(xi)]);
            r.check("twisted.inverse", "S̄_g∘S_{g⁻¹} = id, S_{g⁻¹}∘S̄_g = id")
                .require(comp == id && comp2 == id2, idx!("g" = g.label(x)), || {
                    ("not the identity".into(), "identity".into())
                });
        }
        r
    }
}

fn derive_twisted(group: &FiniteGroup, antipode: &[LinMap]) -> Result<Vec<LinMap>> {
    (0..group.order())
        .map(|g| {
            let gi = group.inv(g);
            antipode
                .get(gi)
                .ok_or_else(|| Error::ShapeMismatch("antipode list too short".into()))?
                .inverse()
                .ok_or_else(|| Error::SingularAntipode(group.label(gi).to_string()))
        })
        .collect()
}

/// Replaces the twisted antipodes by `S̄_g = (S_{g⁻¹})⁻¹`.
pub fn derive_twisted_antipode(h: &HopfGC) -> Result<HopfGC> {
    let mut out = h.clone();
    out.twisted = derive_twisted(&h.group, &h.antipode)?;
    Ok(out)
}

/// Same comultiplication, opposite multiplication, `S` and `S̄` exchanged.
pub fn opposite_hgc(h: &HopfGC) -> HopfGC {
    let mut semi = h.semi.clone();
    semi.algebras = semi.algebras.iter().map(Algebra::opposite).collect();
    HopfGC {
        semi,
        group: h.group.clone(),
        antipode: h.twisted.clone(),
        twisted: h.antipode.clone(),
    }
}

/// `K⊗H` over `L×G` with components `K_l⊗H_g` at index `l·|G| + g`.
pub fn tensor_hgc(k: &HopfGC, h: &HopfGC) -> HopfGC {
    let f = h.field();
    let group = k.group.product(&h.group);
    let ng = h.order();
    let n = group.order();
    let split = |c: usize| (c / ng, c % ng);
    let algebras: Vec<Algebra> = (0..n)
        .map(|c| {
            let (l, g) = split(c);
            k.alg(l).tensor(h.alg(g))
        })
        .collect();
    let spaces: Vec<Space> = algebras.iter().map(|a| a.space.clone()).collect();
    let mut comult = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let ((la, ga), (lb, gb)) = (split(a), split(b));
            let (dk, dh) = (k.d(la, lb), h.d(ga, gb));
            // (k⊗h) ↦ k₁⊗h₁⊗k₂⊗h₂
            let src_k = dk.domain()[0];
            let src_h = dh.domain()[0];
            let (ka, kb) = (k.dim(la), k.dim(lb));
            let (ha, hb) = (h.dim(ga), h.dim(gb));
            let map = LinMap::from_fn(f, &[src_k * src_h], &[ka * ha, kb * hb], |idx| {
                let (i, j) = (idx[0] / src_h, idx[0] % src_h);
                k.basis(k.semi.monoid().mul(la, lb), i)
                    .map_axis(0, dk)
                    .outer(&h.basis(h.semi.monoid().mul(ga, gb), j).map_axis(0, dh))
                    .permute(&[0, 2, 1, 3])
                    .reshape(&[ka * ha, kb * hb])
            });
            comult.insert((a, b), map);
        }
    }
    let counit = k
        .counit()
        .kron(h.counit())
        .reshaped(&[k.dim(k.group.e()) * h.dim(h.group.e())], &[]);
    let kron_family = |x: &[LinMap], y: &[LinMap]| -> Vec<LinMap> {
        (0..n)
            .map(|c| {
                let (l, g) = split(c);
                let m = x[l].kron(&y[g]);
                let (dd, cd) = (m.domain_dim(), m.codomain_dim());
                m.reshaped(&[dd], &[cd])
            })
            .collect()
    };
    HopfGC {
        semi: SemiHopfGC {
            coalgebra: GroupCoalgebra {
                field: f,
                monoid: group.monoid.clone(),
                spaces,
                comult,
                counit,
            },
            algebras,
        },
        antipode: kron_family(&k.antipode, &h.antipode),
        twisted: kron_family(&k.twisted, &h.twisted),
        group,
    }
}
