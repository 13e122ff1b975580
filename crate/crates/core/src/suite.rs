//! Verification suites over parsed documents and the reports built from them.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::double::{
    build_double, check_graded_bialgebra, check_graded_hopf, check_quasitriangular, check_yd_module, double_datum,
    graded_to_yd, yd_to_graded, DrinfeldDouble, Form,
};
use crate::error::{Error, Result};
use crate::graded::{
    check_alpha, check_graded_algebra, check_graded_module, orbit_subset, regular_graded_module, restrict_module,
};
use crate::hopf::{check_doihopf_module, hopf_module, hopf_module_datum, HopfGC};
use crate::io::{Document, DoubleFile};
use crate::report::{CheckRecord, ValidationReport, Witness};

/// Seed recorded in every report. All suites are exhaustive, so it only
/// documents that no sampling took place.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Bialgebra,
    Hopf,
    Qt,
    Modules,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Bialgebra => "bialgebra",
            Suite::Hopf => "hopf",
            Suite::Qt => "qt",
            Suite::Modules => "modules",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        [Suite::Bialgebra, Suite::Hopf, Suite::Qt, Suite::Modules, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
    }
}

/// Every validator that applies to the document's kind.
pub fn check_document(doc: &Document) -> ValidationReport {
    let mut r = ValidationReport::new();
    match doc {
        Document::HopfGC(h) => check_family(&mut r, h),
        Document::GradedAlgebra(a) => r.absorb("", check_graded_algebra(a)),
        Document::GradedModule(m) => r.absorb("", check_graded_module(m)),
        Document::DrinfeldDouble(d) => {
            let b = &d.bialgebra;
            r.absorb("", check_graded_bialgebra(b));
            if let Ok(h) = check_graded_hopf(b) {
                r.absorb("", h);
            }
            if let Ok(q) = check_quasitriangular(b) {
                r.absorb("", q);
            }
        }
        Document::DoiHopfDatum(d) => r.absorb("", d.check()),
        Document::YDModule { hopf, module } => {
            r.absorb("family", hopf.check());
            match check_yd_module(hopf, module) {
                Ok(y) => r.absorb("", y),
                Err(e) => fail(
                    &mut r,
                    "yd.structure",
                    "V is a crossed G-set over the family's group",
                    e,
                ),
            }
        }
    }
    r
}

/// The family axioms, plus the regular Doi-Hopf datum `(H, H, H)` and the
/// Hopf module `H` built from it.
fn check_family(r: &mut ValidationReport, h: &HopfGC) {
    let family = h.check();
    let shapes_ok = !family.fails("hopf.shape");
    r.absorb("", family);
    if shapes_ok {
        let d = hopf_module_datum(&h.semi);
        r.absorb("regular_datum", d.check());
        r.absorb("regular_datum", check_doihopf_module(&d, &hopf_module(h)));
    }
}

fn fail(r: &mut ValidationReport, id: &str, equation: &str, e: Error) {
    r.check(id, equation)
        .require(false, Vec::new, || (e.to_string(), String::new()));
}

/// Runs a suite on a double file.
pub fn run_suite(doc: &Document, suite: Suite) -> Result<ValidationReport> {
    let Document::DrinfeldDouble(d) = doc else {
        return Err(Error::UnsupportedSuite {
            suite: suite.name().into(),
            kind: doc.kind().into(),
        });
    };
    let b = &d.bialgebra;
    let mut r = ValidationReport::new();
    match suite {
        Suite::Bialgebra => r.absorb("", check_graded_bialgebra(b)),
        Suite::Hopf => r.absorb("", check_graded_hopf(b)?),
        Suite::Qt => r.absorb("", check_quasitriangular(b)?),
        Suite::Modules => module_suite(&mut r, d)?,
        Suite::All => {
            r.absorb("", check_graded_bialgebra(b));
            r.absorb("", check_graded_hopf(b)?);
            r.absorb("", check_quasitriangular(b)?);
            module_suite(&mut r, d)?;
        }
    }
    Ok(r)
}

/// The regular module of the double, its restriction to each orbit of the
/// crossed datum, and the round trip of each restriction through
/// Yetter-Drinfeld modules over the family.
fn module_suite(r: &mut ValidationReport, d: &DoubleFile) -> Result<()> {
    let dd = d.to_double().ok_or_else(|| Error::UnsupportedSuite {
        suite: "modules".into(),
        kind: "drinfeld_double files without \"hopf\" and \"form\"".into(),
    })?;
    let core = &dd.bialgebra.core;
    let regular = regular_graded_module(core);
    r.absorb("regular", check_graded_module(&regular));
    let mut seen = vec![false; core.datum.x.len()];
    for x in 0..seen.len() {
        if seen[x] {
            continue;
        }
        let subset = orbit_subset(core, x);
        for l in 0..core.datum.lambda.order() {
            seen[core.datum.shift(x, l)] = true;
        }
        let label = core.datum.x.carrier[x].clone();
        let sub = match restrict_module(&regular, &subset) {
            Ok(m) => m,
            Err(e) => {
                fail(r, "restricted.closed", "the orbit is a submodule", e);
                continue;
            }
        };
        r.absorb("restricted", check_graded_module(&sub));
        yd_round_trip(r, &dd, &sub, &label);
    }
    Ok(())
}

fn yd_round_trip(r: &mut ValidationReport, dd: &DrinfeldDouble, sub: &crate::graded::GradedModule, label: &str) {
    const EQ: &str = "graded → YD → graded is the identity";
    let y = match graded_to_yd(dd, sub) {
        Ok(y) => y,
        Err(e) => return fail(r, "yd_round_trip", EQ, e),
    };
    match check_yd_module(&dd.hopf, &y) {
        Ok(rep) => r.absorb("yd", rep),
        Err(e) => fail(r, "yd.structure", "V is a crossed G-set over the family's group", e),
    }
    match yd_to_graded(dd, &y) {
        Ok(back) => {
            r.check("yd_round_trip", EQ).require(
                back == *sub,
                || vec![format!("orbit={label}")],
                || ("image differs from the original module".into(), String::new()),
            );
        }
        Err(e) => fail(r, "yd_round_trip", EQ, e),
    }
}

/// Builds both forms of the double and checks that they agree: α is a
/// unital multiplicative bijection, the coalgebra, antipode and R/Q data
/// coincide numerically, and every suite gives the same verdicts.
pub fn check_forms(h: &HopfGC) -> Result<(DrinfeldDouble, DrinfeldDouble, ValidationReport)> {
    let smash = build_double(h, Form::Smash)?;
    let kop = build_double(h, Form::Koppinen)?;
    let mut r = ValidationReport::new();
    r.absorb("", check_alpha(&double_datum(h)?)?);
    let (a, b) = (&smash.bialgebra, &kop.bialgebra);
    r.check("forms.transport", "Δ, ε, S, S̄, R, Q agree through α").require(
        a.comult == b.comult && a.counit == b.counit && a.antipodes == b.antipodes && a.rq == b.rq,
        Vec::new,
        || ("smash".into(), "koppinen".into()),
    );
    let verdicts = |dd: &DrinfeldDouble| -> Result<Vec<(String, bool)>> {
        let doc = Document::DrinfeldDouble(DoubleFile::from_double(dd));
        let rep = run_suite(&doc, Suite::All)?;
        Ok(rep.records.iter().map(|c| (c.id.clone(), c.passed())).collect())
    };
    let (vs, vk) = (verdicts(&smash)?, verdicts(&kop)?);
    r.check("forms.verdicts", "every check has the same verdict in both forms")
        .require(vs == vk, Vec::new, || (format!("{vs:?}"), format!("{vk:?}")));
    Ok((smash, kop, r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordOut {
    pub id: String,
    pub equation: String,
    pub status: String,
    pub instances: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

/// A serializable run summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub kind: String,
    pub suite: Option<String>,
    pub input_sha256: String,
    pub seed: u64,
    pub sampling: String,
    pub records: Vec<RecordOut>,
    pub status: String,
}

fn status(ok: bool) -> String {
    if ok { "pass" } else { "fail" }.to_string()
}

impl Report {
    pub fn new(command: &str, kind: &str, suite: Option<Suite>, input: &[u8], v: &ValidationReport) -> Report {
        Report {
            tool: "hopfgc".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            kind: kind.into(),
            suite: suite.map(|s| s.name().into()),
            input_sha256: hex::encode(Sha256::digest(input)),
            seed: DEFAULT_SEED,
            sampling: "exhaustive".into(),
            records: v.records.iter().map(record_out).collect(),
            status: status(v.passed()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One line per check; failed checks list up to three witnesses unless
    /// `full` is set.
    pub fn to_human(&self, full: bool) -> String {
        let mut s = String::new();
        let suite = self.suite.as_deref().map(|x| format!(" suite={x}")).unwrap_or_default();
        let _ = writeln!(
            s,
            "hopfgc {} {} kind={}{suite} sha256={}",
            self.version, self.command, self.kind, self.input_sha256
        );
        for rec in &self.records {
            let _ = writeln!(
                s,
                "{:4} {}  [{}]  {}/{} failed",
                rec.status.to_uppercase(),
                rec.id,
                rec.equation,
                rec.failures,
                rec.instances
            );
            let shown = if full {
                rec.witnesses.len()
            } else {
                rec.witnesses.len().min(3)
            };
            for w in &rec.witnesses[..shown] {
                let _ = writeln!(s, "       at ({}): {}  vs  {}", w.index.join(", "), w.lhs, w.rhs);
            }
            if shown < rec.failures {
                let _ = writeln!(s, "       ... {} more", rec.failures - shown);
            }
        }
        let passed = self.records.iter().filter(|r| r.status == "pass").count();
        let _ = writeln!(
            s,
            "{}: {passed}/{} checks passed",
            self.status.to_uppercase(),
            self.records.len()
        );
        s
    }
}

fn record_out(c: &CheckRecord) -> RecordOut {
    RecordOut {
        id: c.id.clone(),
        equation: c.equation.clone(),
        status: status(c.passed()),
        instances: c.instances,
        failures: c.failures,
        witnesses: c.witnesses.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrete::FiniteGroup;
    use crate::hopf::{constant_family, kc2, sweedler, trivial_family};
    use crate::Field;

    fn kc2_double() -> Document {
        let h = constant_family(&kc2(Field::Rational), &FiniteGroup::cyclic(2)).unwrap();
        Document::DrinfeldDouble(DoubleFile::from_double(&build_double(&h, Form::Koppinen).unwrap()))
    }

    #[test]
    fn families_pass_every_validator() {
        for h in [
            trivial_family(Field::Rational, &FiniteGroup::symmetric3()),
            sweedler(Field::Prime(5)).unwrap(),
        ] {
            let r = check_document(&Document::HopfGC(h));
            assert!(r.passed(), "{}", r.summary());
            assert!(r.records.iter().any(|c| c.id.starts_with("regular_datum.A.")));
            assert!(r.records.iter().any(|c| c.id.starts_with("regular_datum.C.")));
            assert!(r.records.iter().any(|c| c.id.starts_with("regular_datum.dh_module")));
        }
    }

    #[test]
    fn all_suite_passes_on_kc2_double() {
        let doc = kc2_double();
        let r = run_suite(&doc, Suite::All).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(r.record("yd_round_trip").is_some_and(|c| c.instances == 2));
        assert!(check_document(&doc).passed());
    }

    #[test]
    fn stripped_antipodes_are_reported() {
        let Document::DrinfeldDouble(mut d) = kc2_double() else {
            unreachable!()
        };
        d.bialgebra.antipodes = None;
        let doc = Document::DrinfeldDouble(d);
        assert!(matches!(run_suite(&doc, Suite::Hopf), Err(Error::AntipodeMissing)));
        assert!(run_suite(&doc, Suite::Bialgebra).unwrap().passed());
    }

    #[test]
    fn suites_need_a_double() {
        let doc = Document::HopfGC(kc2(Field::Rational));
        assert!(matches!(
            run_suite(&doc, Suite::Qt),
            Err(Error::UnsupportedSuite { .. })
        ));
    }

    #[test]
    fn forms_agree() {
        let h = constant_family(&kc2(Field::Rational), &FiniteGroup::cyclic(2)).unwrap();
        let (_, _, r) = check_forms(&h).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn reports_are_deterministic() {
        let doc = kc2_double();
        let text = crate::io::emit(&doc);
        let make = || {
            Report::new(
                "verify",
                doc.kind(),
                Some(Suite::All),
                text.as_bytes(),
                &run_suite(&doc, Suite::All).unwrap(),
            )
        };
        let (a, b) = (make(), make());
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.passed());
        assert_eq!(a.input_sha256.len(), 64);
    }
}
