//! Finite monoids, groups, right G-sets, crossed G-sets and discrete Doi-Hopf
//! data, all given by explicit tables over 0-based element indices.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::idx;
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

fn check_table(name: &str, table: &[Vec<usize>], rows: usize, cols: usize, range: usize) -> Result<()> {
    if table.len() != rows {
        return Err(Error::MalformedTable(format!(
            "{name}: expected {rows} rows, found {}",
            table.len()
        )));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::MalformedTable(format!(
                "{name}: row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        if let Some(j) = row.iter().position(|&v| v >= range) {
            return Err(Error::MalformedTable(format!(
                "{name}: entry ({i},{j}) = {} references an undeclared element",
                row[j]
            )));
        }
    }
    Ok(())
}

fn check_map(name: &str, map: &[usize], len: usize, range: usize) -> Result<()> {
    if map.len() != len {
        return Err(Error::MalformedTable(format!(
            "{name}: expected {len} entries, found {}",
            map.len()
        )));
    }
    if let Some(i) = map.iter().position(|&v| v >= range) {
        return Err(Error::MalformedTable(format!(
            "{name}: entry {i} = {} references an undeclared element",
            map[i]
        )));
    }
    Ok(())
}

impl FiniteMonoid {
    pub fn new(elements: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<FiniteMonoid> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::MalformedTable("monoid has no elements".into()));
        }
        check_table("monoid table", &table, n, n, n)?;
        if identity >= n {
            return Err(Error::MalformedTable(format!("identity index {identity} out of range")));
        }
        Ok(FiniteMonoid {
            elements,
            table,
            identity,
        })
    }

    /// Builds a monoid from a table of labels.
    pub fn from_labels(elements: &[&str], table: &[Vec<&str>], identity: &str) -> Result<FiniteMonoid> {
        let find = |l: &str| {
            elements
                .iter()
                .position(|e| *e == l)
                .ok_or_else(|| Error::MalformedTable(format!("undeclared label {l:?}")))
        };
        let table = table
            .iter()
            .map(|row| row.iter().map(|l| find(l)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteMonoid::new(elements.iter().map(|s| s.to_string()).collect(), table, find(identity)?)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn e(&self) -> usize {
        self.identity
    }

    pub fn label(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    /// Direct product with index `(a, b) ↦ a·|other| + b`.
    pub fn product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let m = other.order();
        let n = self.order() * m;
        let elements = (0..n)
            .map(|k| format!("({},{})", self.label(k / m), other.label(k % m)))
            .collect();
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteMonoid {
            elements,
            table,
            identity: self.identity * m + other.identity,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = self.mul(self.mul(a, b), c);
                    let rr = self.mul(a, self.mul(b, c));
                    r.check("monoid.associativity", "(ab)c = a(bc)").require(
                        l == rr,
                        idx!("a" = self.label(a), "b" = self.label(b), "c" = self.label(c)),
                        || (self.label(l).into(), self.label(rr).into()),
                    );
                }
            }
        }
        let e = self.identity;
        for a in 0..n {
            r.check("monoid.identity", "ea = ae = a").require(
                self.mul(e, a) == a && self.mul(a, e) == a,
                idx!("a" = self.label(a)),
                || {
                    (
                        format!("{},{}", self.label(self.mul(e, a)), self.label(self.mul(a, e))),
                        self.label(a).into(),
                    )
                },
            );
        }
        r
    }

    /// The inverse table, if every element is invertible.
    pub fn inverses(&self) -> Option<Vec<usize>> {
        (0..self.order())
            .map(|a| (0..self.order()).find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub monoid: FiniteMonoid,
    pub inv: Vec<usize>,
}

impl Deref for FiniteGroup {
    type Target = FiniteMonoid;
    fn deref(&self) -> &FiniteMonoid {
        &self.monoid
    }
}

impl FiniteGroup {
    pub fn new(monoid: FiniteMonoid, inv: Vec<usize>) -> Result<FiniteGroup> {
        check_map("inverse table", &inv, monoid.order(), monoid.order())?;
        Ok(FiniteGroup { monoid, inv })
    }

    /// Computes inverses; fails with `NotAGroup` if some element has none.
    pub fn from_monoid(monoid: FiniteMonoid) -> Result<FiniteGroup> {
        let inv = monoid.inverses().ok_or_else(|| Error::NotAGroup("monoid".into()))?;
        Ok(FiniteGroup { monoid, inv })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// Cyclic group with elements `e, g, g2, ...`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let elements = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup {
            monoid: FiniteMonoid {
                elements,
                table,
                identity: 0,
            },
            inv: (0..n).map(|a| (n - a) % n).collect(),
        }
    }

    /// The symmetric group on three letters, product `(στ)(i) = σ(τ(i))`.
    pub fn symmetric3() -> FiniteGroup {
        let perms: [([usize; 3], &str); 6] = [
            ([0, 1, 2], "e"),
            ([1, 0, 2], "(12)"),
            ([2, 1, 0], "(13)"),
            ([0, 2, 1], "(23)"),
            ([1, 2, 0], "(123)"),
            ([2, 0, 1], "(132)"),
        ];
        let find = |p: [usize; 3]| perms.iter().position(|(q, _)| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|(s, _)| perms.iter().map(|(t, _)| find([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        let monoid = FiniteMonoid {
            elements: perms.iter().map(|(_, l)| l.to_string()).collect(),
            table,
            identity: 0,
        };
        FiniteGroup::from_monoid(monoid).expect("S3 is a group")
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `x^l = l⁻¹ x l`.
    pub fn conj(&self, x: usize, l: usize) -> usize {
        self.mul(self.mul(self.inv(l), x), l)
    }

    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let monoid = self.monoid.product(&other.monoid);
        let inv = (0..monoid.order())
            .map(|k| self.inv(k / m) * m + other.inv(k % m))
            .collect();
        FiniteGroup { monoid, inv }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = self.monoid.validate();
        for a in 0..self.order() {
            let b = self.inv(a);
            let e = self.identity;
            r.check("group.inverse", "g·g⁻¹ = g⁻¹·g = e").require(
                self.mul(a, b) == e && self.mul(b, a) == e,
                idx!("g" = self.label(a)),
                || {
                    (
                        format!("{},{}", self.label(self.mul(a, b)), self.label(self.mul(b, a))),
                        self.label(e).into(),
                    )
                },
            );
        }
        r
    }
}

/// A right action of a monoid on a finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightGSet {
    pub carrier: Vec<String>,
    pub acting: FiniteMonoid,
    pub action: Vec<Vec<usize>>,
}

impl RightGSet {
    pub fn new(carrier: Vec<String>, acting: FiniteMonoid, action: Vec<Vec<usize>>) -> Result<RightGSet> {
        check_table("action table", &action, carrier.len(), acting.order(), carrier.len())?;
        Ok(RightGSet {
            carrier,
            acting,
            action,
        })
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn act(&self, y: usize, g: usize) -> usize {
        self.action[y][g]
    }

    pub fn label(&self, y: usize) -> &str {
        &self.carrier[y]
    }

    /// A group acting on itself by right multiplication.
    pub fn regular(g: &FiniteMonoid) -> RightGSet {
        RightGSet {
            carrier: g.elements.clone(),
            acting: g.clone(),
            action: g.table.clone(),
        }
    }

    /// The one-point set.
    pub fn point(g: &FiniteMonoid) -> RightGSet {
        RightGSet {
            carrier: vec!["*".into()],
            acting: g.clone(),
            action: vec![vec![0; g.order()]],
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let g = &self.acting;
        for y in 0..self.len() {
            r.check("gset.unit", "y·e = y")
                .require(self.act(y, g.e()) == y, idx!("y" = self.label(y)), || {
                    (self.label(self.act(y, g.e())).into(), self.label(y).into())
                });
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let l = self.act(self.act(y, a), b);
                    let rr = self.act(y, g.mul(a, b));
                    r.check("gset.action", "(y·g)·g' = y·(gg')").require(
                        l == rr,
                        idx!("y" = self.label(y), "g" = g.label(a), "g'" = g.label(b)),
                        || (self.label(l).into(), self.label(rr).into()),
                    );
                }
            }
        }
        r
    }
}

/// A right G-set `V` with `ν: V → G` satisfying `ν(vg) = g⁻¹ν(v)g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedGSet {
    pub set: RightGSet,
    pub group: FiniteGroup,
    pub nu: Vec<usize>,
}

impl CrossedGSet {
    pub fn new(set: RightGSet, group: FiniteGroup, nu: Vec<usize>) -> Result<CrossedGSet> {
        if set.acting != group.monoid {
            return Err(Error::GroupMismatch(
                "acting monoid differs from the crossed group".into(),
            ));
        }
        check_map("nu", &nu, set.len(), group.order())?;
        Ok(CrossedGSet { set, group, nu })
    }

    /// `{*}` with `ν(*) = x`; valid only when `x` is central.
    pub fn point(group: &FiniteGroup, x: usize) -> CrossedGSet {
        CrossedGSet {
            set: RightGSet::point(&group.monoid),
            group: group.clone(),
            nu: vec![x],
        }
    }

    /// `G` acting on itself by conjugation `x·g = g⁻¹xg`, with `ν = id`.
    pub fn adjoint(group: &FiniteGroup) -> CrossedGSet {
        let n = group.order();
        let action = (0..n).map(|x| (0..n).map(|g| group.conj(x, g)).collect()).collect();
        CrossedGSet {
            set: RightGSet {
                carrier: group.elements.clone(),
                acting: group.monoid.clone(),
                action,
            },
            group: group.clone(),
            nu: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn act(&self, v: usize, g: usize) -> usize {
        self.set.act(v, g)
    }

    pub fn nu(&self, v: usize) -> usize {
        self.nu[v]
    }

    pub fn label(&self, v: usize) -> &str {
        self.set.label(v)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = self.set.validate();
        let g = &self.group;
        for v in 0..self.len() {
            for a in 0..g.order() {
                let l = self.nu(self.act(v, a));
                let rr = g.conj(self.nu(v), a);
                r.check("crossed.nu", "ν(vg) = g⁻¹ν(v)g").require(
                    l == rr,
                    idx!("v" = self.label(v), "g" = g.label(a)),
                    || (g.label(l).into(), g.label(rr).into()),
                );
            }
        }
        r
    }

    /// Views the crossed set as a set over the crossed datum, with `β = ν`.
    pub fn as_datum_set(&self) -> DatumSet {
        DatumSet {
            datum: make_crossed_datum(&self.group),
            set: self.set.clone(),
            beta: self.nu.clone(),
        }
    }
}

/// A discrete Doi-Hopf datum `(G, Λ, X)` with `γ: Λ → G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteDatum {
    pub g: FiniteMonoid,
    pub lambda: FiniteMonoid,
    pub gamma: Vec<usize>,
    pub x: RightGSet,
}

impl DiscreteDatum {
    pub fn new(g: FiniteMonoid, lambda: FiniteMonoid, gamma: Vec<usize>, x: RightGSet) -> Result<DiscreteDatum> {
        check_map("gamma", &gamma, lambda.order(), g.order())?;
        if x.acting != g {
            return Err(Error::GroupMismatch("X is not a G-set".into()));
        }
        Ok(DiscreteDatum { g, lambda, gamma, x })
    }

    /// The datum `({e}, {e}, {*})`.
    pub fn point() -> DiscreteDatum {
        let e = FiniteGroup::trivial().monoid;
        DiscreteDatum {
            x: RightGSet::point(&e),
            g: e.clone(),
            lambda: e,
            gamma: vec![0],
        }
    }

    pub fn gamma(&self, l: usize) -> usize {
        self.gamma[l]
    }

    /// `x·γ(λ)`.
    pub fn shift(&self, x: usize, l: usize) -> usize {
        self.x.act(x, self.gamma(l))
    }

    pub fn lambda_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::from_monoid(self.lambda.clone()).map_err(|_| Error::NotAGroup("Λ".into()))
    }

    pub fn g_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::from_monoid(self.g.clone()).map_err(|_| Error::NotAGroup("G".into()))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        r.absorb("G", self.g.validate());
        r.absorb("Lambda", self.lambda.validate());
        r.absorb("X", self.x.validate());
        let (g, l) = (&self.g, &self.lambda);
        r.check("gamma.unit", "γ(e) = e")
            .require(self.gamma(l.e()) == g.e(), idx!("λ" = l.label(l.e())), || {
                (g.label(self.gamma(l.e())).into(), g.label(g.e()).into())
            });
        for a in 0..l.order() {
            for b in 0..l.order() {
                let lhs = self.gamma(l.mul(a, b));
                let rhs = g.mul(self.gamma(a), self.gamma(b));
                r.check("gamma.multiplicative", "γ(λλ') = γ(λ)γ(λ')").require(
                    lhs == rhs,
                    idx!("λ" = l.label(a), "λ'" = l.label(b)),
                    || (g.label(lhs).into(), g.label(rhs).into()),
                );
            }
        }
        r
    }
}

/// A `(G,Λ,X)`-set: a right Λ-set `Y` with `β: Y → X`, `β(yλ) = β(y)γ(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatumSet {
    pub datum: DiscreteDatum,
    pub set: RightGSet,
    pub beta: Vec<usize>,
}

impl DatumSet {
    pub fn new(datum: DiscreteDatum, set: RightGSet, beta: Vec<usize>) -> Result<DatumSet> {
        if set.acting != datum.lambda {
            return Err(Error::GroupMismatch("Y is not a Λ-set".into()));
        }
        check_map("beta", &beta, set.len(), datum.x.len())?;
        Ok(DatumSet { datum, set, beta })
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn act(&self, y: usize, l: usize) -> usize {
        self.set.act(y, l)
    }

    pub fn beta(&self, y: usize) -> usize {
        self.beta[y]
    }

    pub fn label(&self, y: usize) -> &str {
        self.set.label(y)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = self.set.validate();
        let d = &self.datum;
        for y in 0..self.len() {
            for l in 0..d.lambda.order() {
                let lhs = self.beta(self.act(y, l));
                let rhs = d.shift(self.beta(y), l);
                r.check("datum_set.beta", "β(yλ) = β(y)γ(λ)").require(
                    lhs == rhs,
                    idx!("y" = self.label(y), "λ" = d.lambda.label(l)),
                    || (d.x.label(lhs).into(), d.x.label(rhs).into()),
                );
            }
        }
        r
    }

    /// The sub-datum-set on `subset` (indices into `Y`, kept in the given
    /// order); fails with `NotClosed` if the subset is not Λ-stable.
    pub fn restrict(&self, subset: &[usize]) -> Result<DatumSet> {
        let pos = |y: usize| subset.iter().position(|&z| z == y);
        let mut action = Vec::with_capacity(subset.len());
        for &z in subset {
            let mut row = Vec::with_capacity(self.datum.lambda.order());
            for l in 0..self.datum.lambda.order() {
                let t = self.act(z, l);
                row.push(pos(t).ok_or_else(|| {
                    Error::NotClosed(format!(
                        "{}·{} = {} leaves the subset",
                        self.label(z),
                        self.datum.lambda.label(l),
                        self.label(t)
                    ))
                })?);
            }
            action.push(row);
        }
        Ok(DatumSet {
            datum: self.datum.clone(),
            set: RightGSet {
                carrier: subset.iter().map(|&z| self.label(z).to_string()).collect(),
                acting: self.set.acting.clone(),
                action,
            },
            beta: subset.iter().map(|&z| self.beta(z)).collect(),
        })
    }
}

/// The datum `(G×G, G, G)` with `x·(l,g') = l⁻¹xg'` and `γ(g) = (g,g)`.
pub fn make_crossed_datum(g: &FiniteGroup) -> DiscreteDatum {
    let n = g.order();
    let gg = g.product(g);
    let action = (0..n)
        .map(|x| (0..n * n).map(|k| g.mul(g.mul(g.inv(k / n), x), k % n)).collect())
        .collect();
    DiscreteDatum {
        g: gg.monoid.clone(),
        lambda: g.monoid.clone(),
        gamma: (0..n).map(|a| a * n + a).collect(),
        x: RightGSet {
            carrier: g.elements.clone(),
            acting: gg.monoid,
            action,
        },
    }
}

/// `Y = Λ×X` with `(λ,x)λ' = (λλ', xγ(λ'))` and `β(λ,x) = x`; index `λ·|X| + x`.
pub fn regular_datum_set(d: &DiscreteDatum) -> DatumSet {
    let (nl, nx) = (d.lambda.order(), d.x.len());
    let carrier = (0..nl * nx)
        .map(|k| format!("({},{})", d.lambda.label(k / nx), d.x.label(k % nx)))
        .collect();
    let action = (0..nl * nx)
        .map(|k| {
            let (l, x) = (k / nx, k % nx);
            (0..nl).map(|l2| d.lambda.mul(l, l2) * nx + d.shift(x, l2)).collect()
        })
        .collect();
    DatumSet {
        datum: d.clone(),
        set: RightGSet {
            carrier,
            acting: d.lambda.clone(),
            action,
        },
        beta: (0..nl * nx).map(|k| k % nx).collect(),
    }
}

/// `V×V'` with the diagonal action and `ω(v,v') = ν(v)ν'(v')`; index `v·|V'| + v'`.
pub fn product_crossed_gset(v: &CrossedGSet, w: &CrossedGSet) -> Result<CrossedGSet> {
    if v.group != w.group {
        return Err(Error::GroupMismatch("crossed sets over different groups".into()));
    }
    let g = &v.group;
    let m = w.len();
    let n = v.len() * m;
    let carrier = (0..n)
        .map(|k| format!("({},{})", v.label(k / m), w.label(k % m)))
        .collect();
    let action = (0..n)
        .map(|k| (0..g.order()).map(|a| v.act(k / m, a) * m + w.act(k % m, a)).collect())
        .collect();
    let nu = (0..n).map(|k| g.mul(v.nu(k / m), w.nu(k % m))).collect();
    Ok(CrossedGSet {
        set: RightGSet {
            carrier,
            acting: g.monoid.clone(),
            action,
        },
        group: g.clone(),
        nu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups_valid() {
        for g in [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::symmetric3(),
        ] {
            assert!(g.validate().passed(), "{:?}", g.elements);
        }
        let s3 = FiniteGroup::symmetric3();
        let (a, b) = (s3.index_of("(12)").unwrap(), s3.index_of("(23)").unwrap());
        assert_ne!(s3.mul(a, b), s3.mul(b, a));
    }

    #[test]
    fn broken_c2_fails_only_inverse() {
        let m = FiniteMonoid::from_labels(&["e", "g"], &[vec!["e", "g"], vec!["g", "g"]], "e").unwrap();
        assert!(m.validate().passed());
        let g = FiniteGroup {
            monoid: m,
            inv: vec![0, 1],
        };
        let r = g.validate();
        assert_eq!(r.failed_ids(), vec!["group.inverse"]);
        assert_eq!(r.record("group.inverse").unwrap().witnesses[0].index, vec!["g=g"]);
    }

    #[test]
    fn undeclared_label_is_malformed() {
        let e = FiniteMonoid::from_labels(&["e"], &[vec!["x"]], "e");
        assert!(matches!(e, Err(Error::MalformedTable(_))));
        let e = FiniteMonoid::new(vec!["e".into()], vec![vec![3]], 0);
        assert!(matches!(e, Err(Error::MalformedTable(_))));
    }

    #[test]
    fn gamma_to_identity_is_valid() {
        let c2 = FiniteGroup::cyclic(2);
        let d = DiscreteDatum::new(
            c2.monoid.clone(),
            c2.monoid.clone(),
            vec![0, 0],
            RightGSet::regular(&c2),
        )
        .unwrap();
        assert!(d.validate().passed());
    }

    #[test]
    fn crossed_datum_c2() {
        let c2 = FiniteGroup::cyclic(2);
        let d = make_crossed_datum(&c2);
        assert!(d.validate().passed());
        assert_eq!(d.x.carrier, vec!["e", "g"]);
        // e·(g,e) = g⁻¹·e·e = g
        let ge = d.g.index_of("(g,e)").unwrap();
        assert_eq!(d.x.act(0, ge), 1);
    }

    #[test]
    fn crossed_datum_s3_exhaustive() {
        let s3 = FiniteGroup::symmetric3();
        let d = make_crossed_datum(&s3);
        assert_eq!(d.g.order(), 36);
        assert_eq!(d.x.len(), 6);
        let r = d.validate();
        assert!(r.passed());
        assert_eq!(r.record("X.gset.action").unwrap().instances, 6 * 36 * 36);
    }

    #[test]
    fn regular_datum_set_c2() {
        let c2 = FiniteGroup::cyclic(2);
        let d = make_crossed_datum(&c2);
        let y = regular_datum_set(&d);
        assert_eq!(y.len(), 4);
        assert!(y.validate().passed());
        // β(g,e) = e; (e,e)·g = (g, e·γ(g)) and e·(g,g) = g⁻¹eg = e
        assert_eq!(y.beta(2), 0);
        assert_eq!(y.label(y.act(0, 1)), "(g,e)");
        let point = regular_datum_set(&make_crossed_datum(&FiniteGroup::trivial()));
        assert_eq!(point.len(), 1);
    }

    #[test]
    fn product_crossed_sets() {
        let c2 = FiniteGroup::cyclic(2);
        let star = CrossedGSet::point(&FiniteGroup::trivial(), 0);
        let p = product_crossed_gset(&star, &star).unwrap();
        assert_eq!((p.len(), p.nu(0)), (1, 0));
        let adj = CrossedGSet::adjoint(&c2);
        let sq = product_crossed_gset(&adj, &adj).unwrap();
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.nu(3), 0);
        let r = sq.validate();
        assert!(r.passed());
        assert_eq!(r.record("crossed.nu").unwrap().instances, 8);
        assert!(matches!(
            product_crossed_gset(&adj, &star),
            Err(Error::GroupMismatch(_))
        ));
    }

    #[test]
    fn restriction_requires_closure() {
        let c2 = FiniteGroup::cyclic(2);
        let y = regular_datum_set(&make_crossed_datum(&c2));
        assert!(y.restrict(&[0, 2]).is_ok());
        assert!(matches!(y.restrict(&[0]), Err(Error::NotClosed(_))));
    }
}
