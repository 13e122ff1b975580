//! Over the trivial group the double must coincide, constant by constant,
//! with the classical Drinfeld double of the single Hopf algebra.

mod common;

use common::oracle::Classical;
use hopfgc::double::{build_double, Form, GradedBialgebra};
use hopfgc::hopf::{kc2, sweedler, HopfGC};
use hopfgc::{Field, Scalar, Tensor};

fn dense(t: &Tensor) -> Vec<Scalar> {
    t.to_dense()
}

fn compare(h: &HopfGC) {
    let oracle = Classical::new(h);
    let n = oracle.n;
    let nn = n * n;
    let f = h.field();
    let b: GradedBialgebra = build_double(h, Form::Smash).unwrap().bialgebra;
    let el = |k: usize| Tensor::basis(f, &[nn], &[k]);
    for u in 0..nn {
        for v in 0..nn {
            let expect = oracle.product(&dense(&el(u)), &dense(&el(v)));
            assert_eq!(dense(&b.core.mul(0, 0, &el(u), &el(v))), expect, "product ({u},{v})");
        }
    }
    let ap = b.antipodes.as_ref().unwrap();
    for k in 0..nn {
        let (i, j) = (k / n, k % n);
        assert_eq!(dense(&b.d(0, 0, 0).apply(&el(k))), oracle.comult(i, j), "Δ at {k}");
        assert_eq!(b.counit[0].apply(&el(k)).to_scalar(), oracle.counit(i, j), "ε at {k}");
        assert_eq!(dense(&ap.s[&(0, 0)].apply(&el(k))), oracle.antipode(i, j), "S at {k}");
        assert_eq!(
            dense(&ap.sbar[&(0, 0)].apply(&el(k))),
            oracle.twisted_antipode(i, j),
            "S̄ at {k}"
        );
    }
    assert_eq!(dense(&b.rq.as_ref().unwrap().r[&(0, 0)]), oracle.r_matrix());
}

#[test]
fn kc2_matches_classical_double() {
    compare(&kc2(Field::Rational));
    compare(&kc2(Field::Prime(5)));
}

#[test]
fn sweedler_matches_classical_double() {
    compare(&sweedler(Field::Rational).unwrap());
}
