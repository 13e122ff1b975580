//! Standard examples: group algebras, Sweedler's four-dimensional Hopf
//! algebra, trivial and constant families.

use std::collections::BTreeMap;

use crate::discrete::FiniteGroup;
use crate::error::{Error, Result};
use crate::linalg::{Field, LinMap, Space, Tensor};

use super::family::{Algebra, GroupCoalgebra, HopfGC, SemiHopfGC};

/// An ordinary Hopf algebra, as a Hopf group-coalgebra over the trivial group.
pub struct OrdinaryHopf<'a> {
    pub field: Field,
    pub label: &'a str,
    pub basis: Vec<String>,
    /// Product of basis elements `i, j`.
    pub mult: &'a dyn Fn(usize, usize) -> Tensor,
    pub unit: Tensor,
    /// `Δ(e_i)` as a tensor of shape `[d, d]`.
    pub comult: &'a dyn Fn(usize) -> Tensor,
    pub counit: Vec<i64>,
    /// `S(e_i)`.
    pub antipode: &'a dyn Fn(usize) -> Tensor,
}

impl OrdinaryHopf<'_> {
    pub fn build(&self) -> Result<HopfGC> {
        let f = self.field;
        let d = self.basis.len();
        let space = Space::new(self.label, self.basis.clone())?;
        let mult = LinMap::from_fn(f, &[d, d], &[d], |idx| (self.mult)(idx[0], idx[1]));
        let algebra = Algebra::new(space.clone(), mult, self.unit.clone())?;
        let comult = LinMap::from_fn(f, &[d], &[d, d], |idx| (self.comult)(idx[0]));
        let counit = LinMap::functional(f, &self.counit.iter().map(|&c| f.int(c)).collect::<Vec<_>>());
        let antipode = LinMap::from_fn(f, &[d], &[d], |idx| (self.antipode)(idx[0]));
        let group = FiniteGroup::trivial();
        let semi = SemiHopfGC {
            coalgebra: GroupCoalgebra {
                field: f,
                monoid: group.monoid.clone(),
                spaces: vec![space],
                comult: BTreeMap::from([((0, 0), comult)]),
                counit,
            },
            algebras: vec![algebra],
        };
        HopfGC::with_derived_twisted(semi, group, vec![antipode])
    }
}

/// The group algebra `kG` with basis the group elements, `Δg = g⊗g`, `S(g) = g⁻¹`.
pub fn group_algebra(field: Field, group: &FiniteGroup, basis: Vec<String>) -> HopfGC {
    let n = group.order();
    let v = |i: usize| Tensor::basis(field, &[n], &[i]);
    OrdinaryHopf {
        field,
        label: "kG",
        basis,
        mult: &|i, j| v(group.mul(i, j)),
        unit: v(group.e()),
        comult: &|i| Tensor::basis(field, &[n, n], &[i, i]),
        counit: vec![1; n],
        antipode: &|i| v(group.inv(i)),
    }
    .build()
    .expect("group algebras are Hopf algebras")
}

/// `kC2` with basis `1, x`, `x² = 1`.
pub fn kc2(field: Field) -> HopfGC {
    group_algebra(field, &FiniteGroup::cyclic(2), vec!["1".into(), "x".into()])
}

/// Sweedler's algebra with basis `1, g, x, gx`: `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn sweedler(field: Field) -> Result<HopfGC> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicConflict(
            "Sweedler's algebra needs a field of characteristic other than 2".into(),
        ));
    }
    // basis index a + 2b for g^a x^b
    let f = field;
    let v = |a: usize, b: usize, c: i64| Tensor::basis(f, &[4], &[a % 2 + 2 * b]).scale(&f.int(c));
    let mult = |i: usize, j: usize| {
        let (a, b) = (i % 2, i / 2);
        let (c, d) = (j % 2, j / 2);
        if b + d >= 2 {
            return Tensor::zero(f, &[4]);
        }
        let sign = if b * c == 1 { -1 } else { 1 };
        v(a + c, b + d, sign)
    };
    let comult = |i: usize| {
        let (a, b) = (i % 2, i / 2);
        let t = |p: usize, q: usize| Tensor::basis(f, &[4, 4], &[p, q]);
        if b == 0 {
            t(a, a)
        } else {
            // g^a x ⊗ g^a + g^{a+1} ⊗ g^a x
            t(a + 2, a).add(&t((a + 1) % 2, a + 2))
        }
    };
    let antipode = |i: usize| match i {
        0 => v(0, 0, 1),
        1 => v(1, 0, 1),
        2 => v(1, 1, -1),
        _ => v(0, 1, 1),
    };
    OrdinaryHopf {
        field,
        label: "H4",
        basis: ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mult: &mult,
        unit: v(0, 0, 1),
        comult: &comult,
        counit: vec![1, 1, 0, 0],
        antipode: &antipode,
    }
    .build()
}

/// `H_g = k` for every `g`, all structure maps the identity on `k`.
pub fn trivial_family(field: Field, group: &FiniteGroup) -> HopfGC {
    constant_family(&group_algebra(field, &FiniteGroup::trivial(), vec!["1".into()]), group)
        .expect("the ground field is a Hopf algebra")
}

/// `H_g = H₀`, `Δ_{g,g'} = Δ₀`, `S_g = S₀` for every `g`.
pub fn constant_family(h0: &HopfGC, group: &FiniteGroup) -> Result<HopfGC> {
    if h0.order() != 1 {
        return Err(Error::InvalidOrdinaryHopf(
            "expected a family over the trivial group".into(),
        ));
    }
    let report = h0.check();
    if !report.passed() {
        return Err(Error::InvalidOrdinaryHopf(report.summary()));
    }
    let n = group.order();
    let base = &h0.semi;
    let spaces = (0..n)
        .map(|g| Space {
            label: format!("H_{}", group.label(g)),
            basis: base.coalgebra.spaces[0].basis.clone(),
        })
        .collect();
    let algebras = (0..n)
        .map(|g| {
            let mut a = base.algebras[0].clone();
            a.space.label = format!("H_{}", group.label(g));
            a
        })
        .collect();
    let mut comult = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            comult.insert((a, b), base.d(0, 0).clone());
        }
    }
    Ok(HopfGC {
        semi: SemiHopfGC {
            coalgebra: GroupCoalgebra {
                field: h0.field(),
                monoid: group.monoid.clone(),
                spaces,
                comult,
                counit: base.counit().clone(),
            },
            algebras,
        },
        group: group.clone(),
        antipode: vec![h0.s(0).clone(); n],
        twisted: vec![h0.sbar(0).clone(); n],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_requires_odd_characteristic() {
        assert!(matches!(
            sweedler(Field::Prime(2)),
            Err(Error::CharacteristicConflict(_))
        ));
        assert!(sweedler(Field::Prime(5)).unwrap().check().passed());
    }

    #[test]
    fn sweedler_relations() {
        let h = sweedler(Field::Rational).unwrap();
        let f = Field::Rational;
        let b = |i| h.basis(0, i);
        // xg = −gx
        assert_eq!(h.mul(0, &b(2), &b(1)), b(3).scale(&f.int(-1)));
        assert!(h.mul(0, &b(2), &b(2)).is_zero());
        // S̄ = S⁻¹ = S³
        let s = h.s(0);
        assert_eq!(h.sbar(0), &s.compose(s).compose(s));
        assert_ne!(h.sbar(0), s);
    }

    #[test]
    fn constant_family_rejects_broken_input() {
        let mut h = kc2(Field::Rational);
        h.antipode[0] = LinMap::zero(Field::Rational, &[2], &[2]);
        let c2 = FiniteGroup::cyclic(2);
        assert!(matches!(constant_family(&h, &c2), Err(Error::InvalidOrdinaryHopf(_))));
    }

    #[test]
    fn trivial_family_dims() {
        let h = trivial_family(Field::Rational, &FiniteGroup::cyclic(2));
        assert_eq!((h.dim(0), h.dim(1)), (1, 1));
        assert!(h.check().passed());
    }
}
