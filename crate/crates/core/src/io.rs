//! Canonical JSON files. Every file is an object with a `"kind"` field; maps
//! are sparse `{"domain", "codomain", "entries": [[j, i, "c"], ...]}` objects
//! with flat row-major indices, tensors are `{"shape", "entries": [[k, "c"]]}`,
//! and scalars are strings. Emission sorts object keys, so
//! `emit(parse(emit(d))) == emit(d)` byte for byte.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::discrete::{CrossedGSet, DatumSet, DiscreteDatum, FiniteGroup, FiniteMonoid, RightGSet};
use crate::double::{Antipodes, DrinfeldDouble, Form, GradedBialgebra, RMatrices, YDModule};
use crate::error::{Error, Result};
use crate::graded::{GradedAlgebra, GradedModule};
use crate::hopf::{Algebra, ComoduleAlgebra, DoiHopfDatum, GroupCoalgebra, HopfGC, ModuleCoalgebra, SemiHopfGC};
use crate::linalg::{flatten, unflatten, Field, LinMap, Space, Tensor};

/// Largest number of basis elements accepted for a single map domain or tensor.
const MAX_FLAT: usize = 1 << 20;

/// A double as stored on disk: the bialgebra with the family it came from
/// when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleFile {
    pub hopf: Option<HopfGC>,
    pub form: Option<Form>,
    pub bialgebra: GradedBialgebra,
}

impl DoubleFile {
    pub fn from_double(d: &DrinfeldDouble) -> DoubleFile {
        DoubleFile {
            hopf: Some(d.hopf.clone()),
            form: Some(d.form),
            bialgebra: d.bialgebra.clone(),
        }
    }

    pub fn to_double(&self) -> Option<DrinfeldDouble> {
        Some(DrinfeldDouble {
            hopf: self.hopf.clone()?,
            form: self.form?,
            bialgebra: self.bialgebra.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    HopfGC(HopfGC),
    GradedAlgebra(GradedAlgebra),
    GradedModule(GradedModule),
    DrinfeldDouble(DoubleFile),
    DoiHopfDatum(DoiHopfDatum),
    YDModule { hopf: HopfGC, module: YDModule },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::HopfGC(_) => "hopf_gc",
            Document::GradedAlgebra(_) => "graded_algebra",
            Document::GradedModule(_) => "graded_module",
            Document::DrinfeldDouble(_) => "drinfeld_double",
            Document::DoiHopfDatum(_) => "doihopf_datum",
            Document::YDModule { .. } => "yd_module",
        }
    }
}

/// Pretty-printed canonical JSON with a trailing newline.
pub fn emit(doc: &Document) -> String {
    let mut body = match doc {
        Document::HopfGC(h) => enc_hopf(h),
        Document::GradedAlgebra(a) => enc_graded_algebra(a),
        Document::GradedModule(m) => enc_graded_module(m),
        Document::DrinfeldDouble(d) => enc_double(d),
        Document::DoiHopfDatum(d) => enc_datum(d),
        Document::YDModule { hopf, module } => enc_yd(hopf, module),
    };
    body.as_object_mut()
        .expect("encoders produce objects")
        .insert("kind".into(), json!(doc.kind()));
    let mut s = serde_json::to_string_pretty(&body).expect("values serialize");
    s.push('\n');
    s
}

/// Parses a document; structural problems are `Schema` errors carrying a
/// JSON path, malformed JSON is a `Parse` error.
pub fn parse(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let root = Node::root(&v);
    let kind = root.get("kind")?;
    Ok(match kind.str()? {
        "hopf_gc" => Document::HopfGC(dec_hopf(&root)?),
        "graded_algebra" => Document::GradedAlgebra(dec_graded_algebra(&root)?),
        "graded_module" => Document::GradedModule(dec_graded_module(&root)?),
        "drinfeld_double" => Document::DrinfeldDouble(dec_double(&root)?),
        "doihopf_datum" => Document::DoiHopfDatum(dec_datum(&root)?),
        "yd_module" => {
            let (hopf, module) = dec_yd(&root)?;
            Document::YDModule { hopf, module }
        }
        other => return Err(kind.err(format!("unknown kind {other:?}"))),
    })
}

// ---------------------------------------------------------------- encoding

fn key(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn enc_map(m: &LinMap) -> Value {
    let entries: Vec<Value> = m.entries().map(|(j, i, c)| json!([j, i, c.to_string()])).collect();
    json!({ "domain": m.domain(), "codomain": m.codomain(), "entries": entries })
}

fn enc_tensor(t: &Tensor) -> Value {
    let entries: Vec<Value> = t
        .terms()
        .map(|(idx, c)| json!([flatten(idx, t.shape()), c.to_string()]))
        .collect();
    json!({ "shape": t.shape(), "entries": entries })
}

fn enc_keyed<K, T>(m: &BTreeMap<K, T>, k: impl Fn(&K) -> String, enc: impl Fn(&T) -> Value) -> Value {
    Value::Object(m.iter().map(|(a, b)| (k(a), enc(b))).collect::<Map<_, _>>())
}

fn enc_monoid(m: &FiniteMonoid) -> Value {
    json!({ "elements": m.elements, "table": m.table, "identity": m.identity })
}

fn enc_space(s: &Space) -> Value {
    json!({ "label": s.label, "basis": s.basis })
}

fn enc_spaces(s: &[Space]) -> Value {
    Value::Array(s.iter().map(enc_space).collect())
}

fn enc_coalgebra_parts(c: &GroupCoalgebra) -> (Value, Value) {
    (
        enc_keyed(&c.comult, |&(a, b)| key(&[a, b]), enc_map),
        enc_map(&c.counit),
    )
}

/// Components with their algebra structure, plus comultiplication and counit.
fn enc_semi(s: &SemiHopfGC) -> Map<String, Value> {
    let comps: Vec<Value> = s
        .algebras
        .iter()
        .map(|a| json!({ "label": a.space.label, "basis": a.space.basis, "mult": enc_map(&a.mult), "unit": enc_tensor(&a.unit) }))
        .collect();
    let (comult, counit) = enc_coalgebra_parts(&s.coalgebra);
    let mut m = Map::new();
    m.insert("field".into(), json!(s.field().to_string()));
    m.insert("components".into(), Value::Array(comps));
    m.insert("comult".into(), comult);
    m.insert("counit".into(), counit);
    m
}

fn enc_hopf(h: &HopfGC) -> Value {
    let mut m = enc_semi(&h.semi);
    m.insert("group".into(), enc_monoid(&h.group.monoid));
    m.insert(
        "antipode".into(),
        Value::Array(h.antipode.iter().map(enc_map).collect()),
    );
    m.insert(
        "twisted_antipode".into(),
        Value::Array(h.twisted.iter().map(enc_map).collect()),
    );
    Value::Object(m)
}

fn enc_gset(x: &RightGSet) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("carrier".into(), json!(x.carrier));
    m.insert("action".into(), json!(x.action));
    m
}

fn enc_discrete(d: &DiscreteDatum) -> Value {
    json!({
        "g": enc_monoid(&d.g),
        "lambda": enc_monoid(&d.lambda),
        "gamma": d.gamma,
        "x": Value::Object(enc_gset(&d.x)),
    })
}

fn enc_graded_algebra(a: &GradedAlgebra) -> Value {
    let units: Vec<Value> = a
        .units
        .iter()
        .map(|u| u.as_ref().map_or(Value::Null, enc_tensor))
        .collect();
    json!({
        "field": a.field.to_string(),
        "datum": enc_discrete(&a.datum),
        "components": enc_spaces(&a.spaces),
        "mult": enc_keyed(&a.mult, |&(c, c2)| key(&[c, c2]), enc_map),
        "units": units,
    })
}

fn enc_datum_set(y: &DatumSet) -> Value {
    let mut m = enc_gset(&y.set);
    m.insert("beta".into(), json!(y.beta));
    Value::Object(m)
}

fn enc_graded_module(m: &GradedModule) -> Value {
    json!({
        "algebra": enc_graded_algebra(&m.algebra),
        "y": enc_datum_set(&m.y),
        "components": enc_spaces(&m.spaces),
        "action": enc_keyed(&m.action, |&(y, c)| key(&[y, c]), enc_map),
    })
}

fn enc_double(d: &DoubleFile) -> Value {
    let b = &d.bialgebra;
    let mut m = Map::new();
    m.insert("group".into(), enc_monoid(&b.group.monoid));
    m.insert("algebra".into(), enc_graded_algebra(&b.core));
    m.insert(
        "comult".into(),
        enc_keyed(&b.comult, |&(l, g, g2)| key(&[l, g, g2]), enc_map),
    );
    m.insert("counit".into(), Value::Array(b.counit.iter().map(enc_map).collect()));
    if let Some(h) = &d.hopf {
        m.insert("hopf".into(), enc_hopf(h));
    }
    if let Some(f) = d.form {
        m.insert("form".into(), json!(f.name()));
    }
    if let Some(ap) = &b.antipodes {
        m.insert("antipode".into(), enc_keyed(&ap.s, |&(l, g)| key(&[l, g]), enc_map));
        m.insert(
            "twisted_antipode".into(),
            enc_keyed(&ap.sbar, |&(l, g)| key(&[l, g]), enc_map),
        );
    }
    if let Some(rq) = &b.rq {
        m.insert("R".into(), enc_keyed(&rq.r, |&(g, g2)| key(&[g, g2]), enc_tensor));
        m.insert("Q".into(), enc_keyed(&rq.q, |&(g, g2)| key(&[g, g2]), enc_tensor));
    }
    Value::Object(m)
}

fn enc_datum(d: &DoiHopfDatum) -> Value {
    let mut hopf = enc_semi(&d.hopf);
    hopf.insert("monoid".into(), enc_monoid(d.hopf.monoid()));
    let a_algebras: Vec<Value> = d
        .a
        .algebras
        .iter()
        .map(|a| json!({ "label": a.space.label, "basis": a.space.basis, "mult": enc_map(&a.mult), "unit": enc_tensor(&a.unit) }))
        .collect();
    let (c_comult, c_counit) = enc_coalgebra_parts(&d.c.coalgebra);
    json!({
        "field": d.field().to_string(),
        "hopf": Value::Object(hopf),
        "lambda": enc_monoid(&d.c.coalgebra.monoid),
        "gamma": d.c.gamma,
        "a": {
            "x": Value::Object(enc_gset(&d.a.x)),
            "algebras": a_algebras,
            "coaction": enc_keyed(&d.a.coaction, |&(x, g)| key(&[x, g]), enc_map),
        },
        "c": {
            "components": enc_spaces(&d.c.coalgebra.spaces),
            "comult": c_comult,
            "counit": c_counit,
            "action": d.c.action.iter().map(enc_map).collect::<Vec<_>>(),
        },
    })
}

fn enc_yd(h: &HopfGC, m: &YDModule) -> Value {
    let mut v = enc_gset(&m.v.set);
    v.insert("nu".into(), json!(m.v.nu));
    json!({
        "hopf": enc_hopf(h),
        "v": Value::Object(v),
        "components": enc_spaces(&m.spaces),
        "action": m.action.iter().map(enc_map).collect::<Vec<_>>(),
        "coaction": enc_keyed(&m.coaction, |&(v, g)| key(&[v, g]), enc_map),
    })
}

// ---------------------------------------------------------------- decoding

/// A JSON value together with its path from the document root.
struct Node<'a> {
    v: &'a Value,
    path: String,
}

impl<'a> Node<'a> {
    fn root(v: &'a Value) -> Node<'a> {
        Node { v, path: "$".into() }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Schema {
            path: self.path.clone(),
            message: message.into(),
        }
    }

    fn wrap(&self, e: Error) -> Error {
        match e {
            Error::Schema { .. } => e,
            other => self.err(other.to_string()),
        }
    }

    fn opt(&self, name: &str) -> Result<Option<Node<'a>>> {
        let obj = self.v.as_object().ok_or_else(|| self.err("expected an object"))?;
        Ok(obj.get(name).filter(|v| !v.is_null()).map(|v| Node {
            v,
            path: format!("{}.{name}", self.path),
        }))
    }

    fn get(&self, name: &str) -> Result<Node<'a>> {
        self.opt(name)?
            .ok_or_else(|| self.err(format!("missing field {name:?}")))
    }

    fn arr(&self) -> Result<Vec<Node<'a>>> {
        let a = self.v.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(a.iter()
            .enumerate()
            .map(|(i, v)| Node {
                v,
                path: format!("{}[{i}]", self.path),
            })
            .collect())
    }

    fn entries(&self) -> Result<Vec<(String, Node<'a>)>> {
        let obj = self.v.as_object().ok_or_else(|| self.err("expected an object"))?;
        Ok(obj
            .iter()
            .map(|(k, v)| {
                (
                    k.clone(),
                    Node {
                        v,
                        path: format!("{}[{k:?}]", self.path),
                    },
                )
            })
            .collect())
    }

    fn str(&self) -> Result<&'a str> {
        self.v.as_str().ok_or_else(|| self.err("expected a string"))
    }

    fn usize(&self) -> Result<usize> {
        self.v
            .as_u64()
            .and_then(|n| usize::try_from(n).ok())
            .ok_or_else(|| self.err("expected a non-negative integer"))
    }

    fn usizes(&self) -> Result<Vec<usize>> {
        self.arr()?.iter().map(Node::usize).collect()
    }

    fn strings(&self) -> Result<Vec<String>> {
        self.arr()?.iter().map(|n| n.str().map(str::to_string)).collect()
    }

    fn table(&self) -> Result<Vec<Vec<usize>>> {
        self.arr()?.iter().map(Node::usizes).collect()
    }

    fn key(&self, k: &str, parts: usize) -> Result<Vec<usize>> {
        let v: Vec<usize> = k
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| self.err(format!("key {k:?} is not a list of indices")))?;
        if v.len() != parts {
            return Err(self.err(format!("key {k:?} should have {parts} indices")));
        }
        Ok(v)
    }
}

fn dec_field(n: &Node) -> Result<Field> {
    n.str()?.parse::<Field>().map_err(|e| n.wrap(e))
}

fn dec_scalar(f: Field, n: &Node) -> Result<crate::Scalar> {
    f.parse(n.str()?).map_err(|e| n.wrap(e))
}

fn checked_size(n: &Node, dims: &[usize]) -> Result<usize> {
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d).filter(|&p| p <= MAX_FLAT))
        .ok_or_else(|| n.err("dimensions too large"))
}

fn dec_map(f: Field, n: &Node) -> Result<LinMap> {
    let domain = n.get("domain")?.usizes()?;
    let codomain = n.get("codomain")?.usizes()?;
    let (dn, cn) = (checked_size(n, &domain)?, checked_size(n, &codomain)?);
    let mut entries = Vec::new();
    for e in n.get("entries")?.arr()? {
        let parts = e.arr()?;
        if parts.len() != 3 {
            return Err(e.err("entry must be [domain index, codomain index, scalar]"));
        }
        let (j, i) = (parts[0].usize()?, parts[1].usize()?);
        if j >= dn || i >= cn {
            return Err(e.err("entry index out of range"));
        }
        entries.push((j, i, dec_scalar(f, &parts[2])?));
    }
    Ok(LinMap::from_entries(f, &domain, &codomain, entries))
}

fn dec_tensor(f: Field, n: &Node) -> Result<Tensor> {
    let shape = n.get("shape")?.usizes()?;
    let size = checked_size(n, &shape)?;
    let mut t = Tensor::zero(f, &shape);
    for e in n.get("entries")?.arr()? {
        let parts = e.arr()?;
        if parts.len() != 2 {
            return Err(e.err("entry must be [flat index, scalar]"));
        }
        let k = parts[0].usize()?;
        if k >= size {
            return Err(e.err("entry index out of range"));
        }
        t.add_term(unflatten(k, &shape), dec_scalar(f, &parts[1])?);
    }
    Ok(t)
}

fn dec_keyed<T>(n: &Node, parts: usize, dec: impl Fn(&Node) -> Result<T>) -> Result<BTreeMap<Vec<usize>, T>> {
    n.entries()?
        .into_iter()
        .map(|(k, v)| Ok((n.key(&k, parts)?, dec(&v)?)))
        .collect()
}

fn pairs<T>(m: BTreeMap<Vec<usize>, T>) -> BTreeMap<(usize, usize), T> {
    m.into_iter().map(|(k, v)| ((k[0], k[1]), v)).collect()
}

fn dec_monoid(n: &Node) -> Result<FiniteMonoid> {
    FiniteMonoid::new(
        n.get("elements")?.strings()?,
        n.get("table")?.table()?,
        n.get("identity")?.usize()?,
    )
    .map_err(|e| n.wrap(e))
}

fn dec_group(n: &Node) -> Result<FiniteGroup> {
    let m = dec_monoid(n)?;
    let r = m.validate();
    if !r.passed() {
        return Err(n.err(format!("not a monoid: {}", r.summary())));
    }
    FiniteGroup::from_monoid(m).map_err(|e| n.wrap(e))
}

fn dec_space(n: &Node) -> Result<Space> {
    Space::new(n.get("label")?.str()?, n.get("basis")?.strings()?).map_err(|e| n.wrap(e))
}

fn dec_spaces(n: &Node) -> Result<Vec<Space>> {
    n.arr()?.iter().map(dec_space).collect()
}

fn dec_algebra(f: Field, n: &Node) -> Result<Algebra> {
    Algebra::new(
        dec_space(n)?,
        dec_map(f, &n.get("mult")?)?,
        dec_tensor(f, &n.get("unit")?)?,
    )
    .map_err(|e| n.wrap(e))
}

fn dec_coalgebra(f: Field, monoid: FiniteMonoid, spaces: Vec<Space>, n: &Node) -> Result<GroupCoalgebra> {
    let comult = pairs(dec_keyed(&n.get("comult")?, 2, |m| dec_map(f, m))?);
    let counit = dec_map(f, &n.get("counit")?)?;
    let c = GroupCoalgebra {
        field: f,
        monoid,
        spaces,
        comult,
        counit,
    };
    c.check_shapes().map_err(|e| n.wrap(e))?;
    Ok(c)
}

fn dec_semi(f: Field, monoid: FiniteMonoid, n: &Node) -> Result<SemiHopfGC> {
    let comps = n.get("components")?;
    let algebras: Vec<Algebra> = comps.arr()?.iter().map(|c| dec_algebra(f, c)).collect::<Result<_>>()?;
    if algebras.len() != monoid.order() {
        return Err(comps.err("one component per group element expected"));
    }
    let spaces = algebras.iter().map(|a| a.space.clone()).collect();
    let coalgebra = dec_coalgebra(f, monoid, spaces, n)?;
    Ok(SemiHopfGC { coalgebra, algebras })
}

fn dec_hopf(n: &Node) -> Result<HopfGC> {
    let f = dec_field(&n.get("field")?)?;
    let group = dec_group(&n.get("group")?)?;
    let semi = dec_semi(f, group.monoid.clone(), n)?;
    let anode = n.get("antipode")?;
    let antipode: Vec<LinMap> = anode.arr()?.iter().map(|m| dec_map(f, m)).collect::<Result<_>>()?;
    if antipode.len() != group.order() {
        return Err(anode.err("one antipode per group element expected"));
    }
    let h = match n.opt("twisted_antipode")? {
        Some(t) => {
            let twisted: Vec<LinMap> = t.arr()?.iter().map(|m| dec_map(f, m)).collect::<Result<_>>()?;
            HopfGC {
                semi,
                group,
                antipode,
                twisted,
            }
        }
        None => {
            for (g, s) in antipode.iter().enumerate() {
                let gi = group.inv(g);
                if s.domain() != [semi.dim(gi)] || s.codomain() != [semi.dim(g)] {
                    return Err(anode.err(format!("S_{} has the wrong shape", group.label(g))));
                }
            }
            HopfGC::with_derived_twisted(semi, group, antipode).map_err(|e| anode.wrap(e))?
        }
    };
    h.check_shapes().map_err(|e| n.wrap(e))?;
    Ok(h)
}

fn dec_gset(acting: &FiniteMonoid, n: &Node) -> Result<RightGSet> {
    RightGSet::new(n.get("carrier")?.strings()?, acting.clone(), n.get("action")?.table()?).map_err(|e| n.wrap(e))
}

fn dec_discrete(n: &Node) -> Result<DiscreteDatum> {
    let g = dec_monoid(&n.get("g")?)?;
    let lambda = dec_monoid(&n.get("lambda")?)?;
    let x = dec_gset(&g, &n.get("x")?)?;
    DiscreteDatum::new(g, lambda, n.get("gamma")?.usizes()?, x).map_err(|e| n.wrap(e))
}

fn dec_graded_algebra(n: &Node) -> Result<GradedAlgebra> {
    let f = dec_field(&n.get("field")?)?;
    let datum = dec_discrete(&n.get("datum")?)?;
    let spaces = dec_spaces(&n.get("components")?)?;
    let mult = pairs(dec_keyed(&n.get("mult")?, 2, |m| dec_map(f, m))?);
    let units = n
        .get("units")?
        .arr()?
        .iter()
        .map(|u| {
            if u.v.is_null() {
                Ok(None)
            } else {
                dec_tensor(f, u).map(Some)
            }
        })
        .collect::<Result<_>>()?;
    let a = GradedAlgebra {
        datum,
        field: f,
        spaces,
        mult,
        units,
    };
    a.check_shapes().map_err(|e| n.wrap(e))?;
    Ok(a)
}

fn dec_graded_module(n: &Node) -> Result<GradedModule> {
    let algebra = dec_graded_algebra(&n.get("algebra")?)?;
    let f = algebra.field;
    let yn = n.get("y")?;
    let set = dec_gset(&algebra.datum.lambda, &yn)?;
    let y = DatumSet::new(algebra.datum.clone(), set, yn.get("beta")?.usizes()?).map_err(|e| yn.wrap(e))?;
    let spaces = dec_spaces(&n.get("components")?)?;
    let action = pairs(dec_keyed(&n.get("action")?, 2, |m| dec_map(f, m))?);
    let m = GradedModule {
        algebra,
        y,
        spaces,
        action,
    };
    m.check_shapes().map_err(|e| n.wrap(e))?;
    Ok(m)
}

fn dec_double(n: &Node) -> Result<DoubleFile> {
    let group = dec_group(&n.get("group")?)?;
    let core = dec_graded_algebra(&n.get("algebra")?)?;
    let f = core.field;
    let comult = dec_keyed(&n.get("comult")?, 3, |m| dec_map(f, m))?
        .into_iter()
        .map(|(k, v)| ((k[0], k[1], k[2]), v))
        .collect();
    let counit = n
        .get("counit")?
        .arr()?
        .iter()
        .map(|m| dec_map(f, m))
        .collect::<Result<_>>()?;
    let antipodes = match (n.opt("antipode")?, n.opt("twisted_antipode")?) {
        (Some(s), Some(t)) => Some(Antipodes {
            s: pairs(dec_keyed(&s, 2, |m| dec_map(f, m))?),
            sbar: pairs(dec_keyed(&t, 2, |m| dec_map(f, m))?),
        }),
        (None, None) => None,
        _ => return Err(n.err("\"antipode\" and \"twisted_antipode\" must appear together")),
    };
    let rq = match (n.opt("R")?, n.opt("Q")?) {
        (Some(r), Some(q)) => Some(RMatrices {
            r: pairs(dec_keyed(&r, 2, |t| dec_tensor(f, t))?),
            q: pairs(dec_keyed(&q, 2, |t| dec_tensor(f, t))?),
        }),
        (None, None) => None,
        _ => return Err(n.err("\"R\" and \"Q\" must appear together")),
    };
    let hopf = n.opt("hopf")?.map(|h| dec_hopf(&h)).transpose()?;
    let form = match n.opt("form")? {
        Some(fnode) => {
            Some(Form::parse(fnode.str()?).ok_or_else(|| fnode.err("form must be \"smash\" or \"koppinen\""))?)
        }
        None => None,
    };
    let bialgebra = GradedBialgebra {
        group,
        core,
        comult,
        counit,
        antipodes,
        rq,
    };
    bialgebra.check_shapes().map_err(|e| n.wrap(e))?;
    if let Some(h) = &hopf {
        if h.group != bialgebra.group || h.field() != f {
            return Err(n.err("\"hopf\" section does not match the double's group or field"));
        }
    }
    Ok(DoubleFile { hopf, form, bialgebra })
}

fn dec_datum(n: &Node) -> Result<DoiHopfDatum> {
    let f = dec_field(&n.get("field")?)?;
    let hn = n.get("hopf")?;
    let g = dec_monoid(&hn.get("monoid")?)?;
    let hopf = dec_semi(f, g.clone(), &hn)?;
    let lambda = dec_monoid(&n.get("lambda")?)?;
    let gamma = n.get("gamma")?.usizes()?;
    let an = n.get("a")?;
    let x = dec_gset(&g, &an.get("x")?)?;
    let algs = an.get("algebras")?;
    let algebras: Vec<Algebra> = algs.arr()?.iter().map(|a| dec_algebra(f, a)).collect::<Result<_>>()?;
    if algebras.len() != x.len() {
        return Err(algs.err("one algebra per element of X expected"));
    }
    let coaction = pairs(dec_keyed(&an.get("coaction")?, 2, |m| dec_map(f, m))?);
    let cn = n.get("c")?;
    let spaces = dec_spaces(&cn.get("components")?)?;
    let coalgebra = dec_coalgebra(f, lambda, spaces, &cn)?;
    let actn = cn.get("action")?;
    let action: Vec<LinMap> = actn.arr()?.iter().map(|m| dec_map(f, m)).collect::<Result<_>>()?;
    if action.len() != coalgebra.monoid.order() {
        return Err(actn.err("one action per element of Λ expected"));
    }
    DoiHopfDatum::new(
        hopf,
        ComoduleAlgebra { x, algebras, coaction },
        ModuleCoalgebra {
            coalgebra,
            gamma,
            action,
        },
    )
    .map_err(|e| n.wrap(e))
}

fn dec_yd(n: &Node) -> Result<(HopfGC, YDModule)> {
    let h = dec_hopf(&n.get("hopf")?)?;
    let f = h.field();
    let vn = n.get("v")?;
    let set = dec_gset(&h.group.monoid, &vn)?;
    let v = CrossedGSet::new(set, h.group.clone(), vn.get("nu")?.usizes()?).map_err(|e| vn.wrap(e))?;
    let spaces = dec_spaces(&n.get("components")?)?;
    let actn = n.get("action")?;
    let action: Vec<LinMap> = actn.arr()?.iter().map(|m| dec_map(f, m)).collect::<Result<_>>()?;
    if spaces.len() != v.len() || action.len() != v.len() {
        return Err(n.err("one component and action per element of V expected"));
    }
    let coaction = pairs(dec_keyed(&n.get("coaction")?, 2, |m| dec_map(f, m))?);
    Ok((
        h,
        YDModule {
            v,
            spaces,
            action,
            coaction,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::{adjoint_yd_module, build_double, Form};
    use crate::graded::{koppinen_smash, regular_graded_module};
    use crate::hopf::{constant_family, kc2, sweedler, trivial_family};

    fn round_trip(doc: &Document) {
        let text = emit(doc);
        let back = parse(&text).unwrap();
        assert_eq!(&back, doc);
        assert_eq!(emit(&back), text);
    }

    #[test]
    fn every_kind_round_trips() {
        let h = constant_family(&kc2(Field::Rational), &FiniteGroup::cyclic(2)).unwrap();
        round_trip(&Document::HopfGC(h.clone()));
        round_trip(&Document::HopfGC(sweedler(Field::Prime(5)).unwrap()));
        round_trip(&Document::HopfGC(trivial_family(
            Field::Rational,
            &FiniteGroup::symmetric3(),
        )));
        let d = crate::double::double_datum(&h).unwrap();
        round_trip(&Document::DoiHopfDatum(d.clone()));
        let k = koppinen_smash(&d).unwrap();
        round_trip(&Document::GradedAlgebra(k.clone()));
        round_trip(&Document::GradedModule(regular_graded_module(&k)));
        for form in [Form::Smash, Form::Koppinen] {
            let dd = build_double(&h, form).unwrap();
            round_trip(&Document::DrinfeldDouble(DoubleFile::from_double(&dd)));
            let module = adjoint_yd_module(&dd, 1).unwrap();
            round_trip(&Document::YDModule {
                hopf: h.clone(),
                module,
            });
        }
    }

    #[test]
    fn missing_twisted_antipode_is_derived() {
        let h = sweedler(Field::Rational).unwrap();
        let mut v: Value = serde_json::from_str(&emit(&Document::HopfGC(h.clone()))).unwrap();
        v.as_object_mut().unwrap().remove("twisted_antipode");
        assert_eq!(parse(&v.to_string()).unwrap(), Document::HopfGC(h));
    }

    #[test]
    fn schema_errors_carry_paths() {
        let h = kc2(Field::Rational);
        let mut v: Value = serde_json::from_str(&emit(&Document::HopfGC(h))).unwrap();
        v["components"][0]["mult"]["entries"][0][1] = json!(99);
        match parse(&v.to_string()) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "$.components[0].mult.entries[0]"),
            other => panic!("{other:?}"),
        }
        v["components"][0]["mult"]["entries"][0][1] = json!(0);
        v["field"] = json!("fp:4");
        assert!(matches!(parse(&v.to_string()), Err(Error::Schema { ref path, .. }) if path == "$.field"));
        assert!(matches!(parse("{\"kind\": \"hopf_gc\""), Err(Error::Parse(_))));
        assert!(matches!(parse("{\"kind\": \"nope\"}"), Err(Error::Schema { .. })));
        assert!(matches!(parse("[]"), Err(Error::Schema { .. })));
    }

    fn leaves(v: &Value, path: &mut Vec<Value>, out: &mut Vec<Vec<Value>>) {
        match v {
            Value::Object(m) => m.iter().for_each(|(k, x)| {
                path.push(json!(k));
                leaves(x, path, out);
                path.pop();
            }),
            Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| {
                path.push(json!(i));
                leaves(x, path, out);
                path.pop();
            }),
            _ => out.push(path.clone()),
        }
    }

    fn leaf<'a>(v: &'a mut Value, path: &[Value]) -> &'a mut Value {
        path.iter().fold(v, |v, k| match k {
            Value::String(s) => &mut v[s.as_str()],
            k => &mut v[k.as_u64().unwrap() as usize],
        })
    }

    #[test]
    fn corrupted_leaves_never_panic() {
        let h = constant_family(&sweedler(Field::Rational).unwrap(), &FiniteGroup::cyclic(2)).unwrap();
        let dd = build_double(&kc2(Field::Rational), Form::Smash).unwrap();
        let docs = [
            Document::DoiHopfDatum(crate::double::double_datum(&kc2(Field::Rational)).unwrap()),
            Document::YDModule {
                hopf: kc2(Field::Rational),
                module: adjoint_yd_module(&dd, 0).unwrap(),
            },
            Document::HopfGC(h),
        ];
        for doc in docs {
            let base: Value = serde_json::from_str(&emit(&doc)).unwrap();
            let mut paths = Vec::new();
            leaves(&base, &mut Vec::new(), &mut paths);
            for (k, path) in paths.iter().enumerate().step_by(7) {
                let mut v = base.clone();
                let slot = leaf(&mut v, path);
                *slot = match slot {
                    Value::Number(_) => json!([0, 1, 3, 1000][k % 4]),
                    _ => json!(["2", "x", "-1"][k % 3]),
                };
                if let Ok(d) = parse(&v.to_string()) {
                    let _ = crate::suite::check_document(&d);
                }
            }
        }
    }

    #[test]
    fn oversized_dimensions_are_rejected() {
        let text = r#"{"kind":"hopf_gc","field":"rational","group":{"elements":["e"],"table":[[0]],"identity":0},
            "components":[{"label":"H","basis":["1"],"mult":{"domain":[4294967296,4294967296],"codomain":[1],"entries":[]},
            "unit":{"shape":[1],"entries":[]}}],"comult":{},"counit":{"domain":[1],"codomain":[],"entries":[]},"antipode":[]}"#;
        assert!(matches!(parse(text), Err(Error::Schema { .. })));
    }
}
