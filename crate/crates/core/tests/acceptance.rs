//! End-to-end acceptance run: one line per criterion with its timing.

mod common;

use std::time::{Duration, Instant};

use common::oracle::Classical;
use hopfgc::discrete::FiniteGroup;
use hopfgc::double::{
    adjoint_yd_module, braiding_from_rq, build_double, compose_morphisms, double_datum, extract_rq,
    graded_module_tensor, yd_braiding, yd_tensor, yd_to_graded, DrinfeldDouble, Form,
};
use hopfgc::graded::{
    check_alpha, check_graded_algebra, dual_smash, functor_tz, inverse_functor, koppinen_smash, regular_graded_module,
};
use hopfgc::hopf::{
    check_doihopf_module, constant_family, hopf_module, hopf_module_datum, kc2, sweedler, trivial_family, HopfGC,
};
use hopfgc::io::{emit, parse, Document, DoubleFile};
use hopfgc::suite::{check_document, run_suite, Report, Suite};
use hopfgc::{Field, Tensor, ValidationReport};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passes(what: &str, r: &ValidationReport) -> Result<(), String> {
    ensure(r.passed(), || format!("{what}: {}", r.summary()))
}

fn q() -> Field {
    Field::Rational
}

fn kc2_c2() -> HopfGC {
    constant_family(&kc2(q()), &FiniteGroup::cyclic(2)).unwrap()
}

fn demo_families() -> Vec<(&'static str, HopfGC)> {
    vec![
        ("trivial/C2", trivial_family(q(), &FiniteGroup::cyclic(2))),
        ("trivial/C3", trivial_family(q(), &FiniteGroup::cyclic(3))),
        ("trivial/S3", trivial_family(q(), &FiniteGroup::symmetric3())),
        ("kC2/C2", kc2_c2()),
        ("H4/e", sweedler(q()).unwrap()),
    ]
}

fn axiom_suites() -> Outcome {
    let mut records = 0;
    for (name, h) in demo_families() {
        let r = check_document(&Document::HopfGC(h));
        passes(name, &r)?;
        for prefix in [
            "coalgebra.",
            "antipode.",
            "regular_datum.A.",
            "regular_datum.C.",
            "regular_datum.dh_module.",
        ] {
            ensure(r.records.iter().any(|c| c.id.starts_with(prefix)), || {
                format!("{name}: no {prefix} checks")
            })?;
        }
        records += r.records.len();
    }
    Ok(format!("5 families, {records} records"))
}

fn smash_and_koppinen() -> Outcome {
    let d = double_datum(&kc2_c2()).map_err(|e| e.to_string())?;
    let smash = dual_smash(&d).map_err(|e| e.to_string())?;
    let kop = koppinen_smash(&d).map_err(|e| e.to_string())?;
    passes("smash", &check_graded_algebra(&smash))?;
    passes("koppinen", &check_graded_algebra(&kop))?;
    let dim: usize = smash.spaces.iter().map(|s| s.dim()).sum();
    ensure(dim == 16, || format!("smash product has dimension {dim}"))?;
    let alpha = check_alpha(&d).map_err(|e| e.to_string())?;
    passes("alpha", &alpha)?;
    let pairs = alpha.records.iter().map(|c| c.instances).max().unwrap_or(0);
    Ok(format!("dim 16, α checked on {pairs} instances"))
}

fn functor_round_trips() -> Outcome {
    let h = kc2_c2();
    let d = hopf_module_datum(&h.semi);
    let m = hopf_module(&h);
    passes("Hopf module", &check_doihopf_module(&d, &m))?;
    let g = functor_tz(&d, &m).map_err(|e| e.to_string())?;
    ensure(inverse_functor(&d, &g).map_err(|e| e.to_string())? == m, || {
        "Hopf module does not round trip".into()
    })?;

    let dd = double_datum(&h).map_err(|e| e.to_string())?;
    let reg = regular_graded_module(&koppinen_smash(&dd).map_err(|e| e.to_string())?);
    let back = inverse_functor(&dd, &reg).map_err(|e| e.to_string())?;
    passes("inverse image", &check_doihopf_module(&dd, &back))?;
    ensure(functor_tz(&dd, &back).map_err(|e| e.to_string())? == reg, || {
        "regular module does not round trip".into()
    })?;
    Ok("Hopf module and regular module".into())
}

fn classical_oracle() -> Outcome {
    for (name, h) in [("kC2", kc2(q())), ("H4", sweedler(q()).unwrap())] {
        let oracle = Classical::new(&h);
        let (n, f) = (oracle.n, h.field());
        let nn = n * n;
        let b = build_double(&h, Form::Smash).map_err(|e| e.to_string())?.bialgebra;
        let el = |k: usize| Tensor::basis(f, &[nn], &[k]);
        let ap = b.antipodes.as_ref().ok_or("antipodes missing")?;
        for u in 0..nn {
            for v in 0..nn {
                let got = b.core.mul(0, 0, &el(u), &el(v)).to_dense();
                ensure(got == oracle.product(&el(u).to_dense(), &el(v).to_dense()), || {
                    format!("{name}: product ({u},{v})")
                })?;
            }
            let (i, j) = (u / n, u % n);
            ensure(b.d(0, 0, 0).apply(&el(u)).to_dense() == oracle.comult(i, j), || {
                format!("{name}: Δ at {u}")
            })?;
            ensure(b.counit[0].apply(&el(u)).to_scalar() == oracle.counit(i, j), || {
                format!("{name}: ε at {u}")
            })?;
            ensure(ap.s[&(0, 0)].apply(&el(u)).to_dense() == oracle.antipode(i, j), || {
                format!("{name}: S at {u}")
            })?;
            ensure(
                ap.sbar[&(0, 0)].apply(&el(u)).to_dense() == oracle.twisted_antipode(i, j),
                || format!("{name}: S̄ at {u}"),
            )?;
        }
        let r = &b.rq.as_ref().ok_or("R missing")?.r[&(0, 0)];
        ensure(r.to_dense() == oracle.r_matrix(), || format!("{name}: R"))?;
    }
    Ok("kC2 and H4, all constants".into())
}

fn double_axioms() -> Outcome {
    let b = build_double(&kc2_c2(), Form::Smash)
        .map_err(|e| e.to_string())?
        .bialgebra;
    let mut r = ValidationReport::new();
    r.absorb("", hopfgc::double::check_graded_bialgebra(&b));
    r.absorb("", hopfgc::double::check_graded_hopf(&b).map_err(|e| e.to_string())?);
    r.absorb(
        "",
        hopfgc::double::check_quasitriangular(&b).map_err(|e| e.to_string())?,
    );
    passes("kC2 double", &r)?;
    let instances: usize = r.records.iter().map(|c| c.instances).sum();
    Ok(format!("{} records, {instances} instances", r.records.len()))
}

fn braiding_coherence() -> Outcome {
    let h = kc2_c2();
    for form in [Form::Smash, Form::Koppinen] {
        let dd = build_double(&h, form).map_err(|e| e.to_string())?;
        let b = &dd.bialgebra;
        let (m, n) = (
            adjoint_yd_module(&dd, 0).map_err(|e| e.to_string())?,
            adjoint_yd_module(&dd, 1).map_err(|e| e.to_string())?,
        );
        let (t, qt) = yd_braiding(&h, &m, &n);
        let identity = |x: &hopfgc::hopf::FamilyMorphism| {
            x.eta.iter().enumerate().all(|(k, &e)| k == e)
                && x.phis
                    .iter()
                    .all(|p| *p == hopfgc::LinMap::identity(p.field(), &[p.domain_dim()]))
        };
        ensure(
            identity(&compose_morphisms(&t, &qt)) && identity(&compose_morphisms(&qt, &t)),
            || format!("{}: braiding is not invertible", form.name()),
        )?;
        let (gm, gn) = (
            yd_to_graded(&dd, &m).map_err(|e| e.to_string())?,
            yd_to_graded(&dd, &n).map_err(|e| e.to_string())?,
        );
        let from_r = braiding_from_rq(b, &gm, &gn).map_err(|e| e.to_string())?;
        ensure(from_r == (t, qt), || {
            format!("{}: R-matrix braiding differs", form.name())
        })?;
        let reg = hopfgc::double::graded_to_yd(&dd, &regular_graded_module(&b.core)).map_err(|e| e.to_string())?;
        let (tr, qr) = yd_braiding(&h, &reg, &reg);
        let rq = extract_rq(b, &tr, &qr).map_err(|e| e.to_string())?;
        ensure(Some(&rq) == b.rq.as_ref(), || {
            format!("{}: extracted R/Q differ", form.name())
        })?;
    }
    Ok("both forms".into())
}

fn monoidal_compatibility() -> Outcome {
    let h = kc2_c2();
    let dd = build_double(&h, Form::Smash).map_err(|e| e.to_string())?;
    let modules: Vec<_> = (0..h.order())
        .map(|x| adjoint_yd_module(&dd, x).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let mut pairs = 0;
    for m in &modules {
        for n in &modules {
            ensure(m.total_dim() + n.total_dim() <= 32, || "pair too large".into())?;
            let mn = yd_tensor(&h, m, n).map_err(|e| e.to_string())?;
            let lhs = yd_to_graded(&dd, &mn).map_err(|e| e.to_string())?;
            let (gm, gn) = (
                yd_to_graded(&dd, m).map_err(|e| e.to_string())?,
                yd_to_graded(&dd, n).map_err(|e| e.to_string())?,
            );
            let rhs = graded_module_tensor(&dd.bialgebra, &gm, &gn).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || "image of M⊗N differs from the tensor of images".into())?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

/// Paths to every scalar entry of the double's own structure constants.
fn constant_slots(v: &Value, path: &mut Vec<String>, out: &mut Vec<Vec<String>>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if path.is_empty() && k == "hopf" {
                    continue;
                }
                path.push(k.clone());
                constant_slots(x, path, out);
                path.pop();
            }
        }
        Value::Array(a) => {
            let in_entries = path.last().is_some_and(|p| p == "entries");
            for (i, x) in a.iter().enumerate() {
                path.push(i.to_string());
                if in_entries {
                    out.push(path.clone());
                } else {
                    constant_slots(x, path, out);
                }
                path.pop();
            }
        }
        _ => {}
    }
}

fn slot<'a>(v: &'a mut Value, path: &[String]) -> &'a mut Value {
    path.iter().fold(v, |v, k| match v {
        Value::Object(m) => m.get_mut(k).unwrap(),
        Value::Array(a) => a.get_mut(k.parse::<usize>().unwrap()).unwrap(),
        _ => unreachable!(),
    })
}

fn mutation_sensitivity() -> Outcome {
    let dd = build_double(&kc2_c2(), Form::Smash).map_err(|e| e.to_string())?;
    let text = emit(&Document::DrinfeldDouble(DoubleFile::from_double(&dd)));
    let base: Value = serde_json::from_str(&text).unwrap();
    let mut slots = Vec::new();
    constant_slots(&base, &mut Vec::new(), &mut slots);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let chosen: Vec<_> = slots.choose_multiple(&mut rng, 20).cloned().collect();
    for path in &chosen {
        let mut v = base.clone();
        let entry = slot(&mut v, path);
        let last = entry.as_array().unwrap().len() - 1;
        let c = q().parse(entry[last].as_str().unwrap()).unwrap();
        entry[last] = Value::from((&c + &q().one()).to_string());
        let doc = parse(&v.to_string()).map_err(|e| format!("{}: {e}", path.join(".")))?;
        let r = run_suite(&doc, Suite::All).map_err(|e| format!("{}: {e}", path.join(".")))?;
        let caught = r.records.iter().any(|c| !c.passed() && !c.witnesses.is_empty());
        ensure(caught, || format!("corruption at {} went unnoticed", path.join(".")))?;
    }
    Ok(format!("20 of {} constants corrupted, all caught", slots.len()))
}

fn generated_documents() -> Vec<Document> {
    let mut docs = Vec::new();
    let groups = [
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::symmetric3(),
    ];
    for f in [q(), Field::Prime(5)] {
        for g in &groups {
            docs.push(Document::HopfGC(trivial_family(f, g)));
            docs.push(Document::HopfGC(constant_family(&kc2(f), g).unwrap()));
            docs.push(Document::HopfGC(constant_family(&sweedler(f).unwrap(), g).unwrap()));
        }
    }
    let h = kc2_c2();
    let d = double_datum(&h).unwrap();
    let kop = koppinen_smash(&d).unwrap();
    docs.push(Document::DoiHopfDatum(d));
    docs.push(Document::GradedModule(regular_graded_module(&kop)));
    docs.push(Document::GradedAlgebra(kop));
    for form in [Form::Smash, Form::Koppinen] {
        let dd: DrinfeldDouble = build_double(&h, form).unwrap();
        docs.push(Document::YDModule {
            hopf: h.clone(),
            module: adjoint_yd_module(&dd, 1).unwrap(),
        });
        docs.push(Document::DrinfeldDouble(DoubleFile::from_double(&dd)));
    }
    docs
}

fn determinism() -> Outcome {
    let docs = generated_documents();
    for doc in &docs {
        let text = emit(doc);
        let again = emit(&parse(&text).map_err(|e| format!("{}: {e}", doc.kind()))?);
        ensure(again == text, || format!("{} is not canonical", doc.kind()))?;
    }
    let dd = build_double(&kc2_c2(), Form::Koppinen).unwrap();
    let doc = Document::DrinfeldDouble(DoubleFile::from_double(&dd));
    let text = emit(&doc);
    let report = || {
        let parsed = parse(&text).unwrap();
        Report::new(
            "verify",
            parsed.kind(),
            Some(Suite::All),
            text.as_bytes(),
            &run_suite(&parsed, Suite::All).unwrap(),
        )
        .to_json()
    };
    ensure(report() == report(), || "reports differ between runs".into())?;
    Ok(format!("{} documents, reports stable", docs.len()))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("1 axiom suites on demo families", Duration::from_secs(5), axiom_suites),
        (
            "2 smash/Koppinen products and α",
            Duration::from_secs(1),
            smash_and_koppinen,
        ),
        (
            "3 module functor round trips",
            Duration::from_secs(1),
            functor_round_trips,
        ),
        ("4 classical double oracle", Duration::from_secs(5), classical_oracle),
        (
            "5 bialgebra/Hopf/quasitriangular axioms of D(kC2)",
            Duration::from_secs(10),
            double_axioms,
        ),
        ("6 braiding coherence", Duration::from_secs(5), braiding_coherence),
        (
            "7 monoidal compatibility",
            Duration::from_secs(5),
            monoidal_compatibility,
        ),
        ("8 mutation sensitivity", Duration::from_secs(30), mutation_sensitivity),
        ("9 determinism", Duration::from_secs(60), determinism),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {:.0?} limit", limit)),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "[{}] {name}  ({:.3}s)  {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
