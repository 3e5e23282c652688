use super::*;
use crate::exactlin::{DegreeBox, IntVector};
use crate::homology::{cech_grade, GradeMode, MonomialSequence};
use crate::iv;
use crate::monoids::Monoid;
use crate::ring::{Field, MonomialIdeal, QuotientRing};

fn ring(m: &Monoid, gens: &[IntVector]) -> QuotientRing {
    QuotientRing::new(MonomialIdeal::new(m, gens).unwrap(), Field::Rationals).unwrap()
}

fn seq(m: &Monoid, text: &str) -> MonomialSequence {
    MonomialSequence::parse(text, m).unwrap()
}

fn cfg() -> ParameterConfig {
    ParameterConfig::new(DegreeBox::symmetric(2, 6), 2)
}

#[test]
fn regular_sequences() {
    let a2 = Monoid::hn(2);
    let r = ring(&a2, &[]);
    let v = is_regular_sequence(&seq(&a2, "t[1,0],t[1,2]"), &r, None).unwrap();
    assert!(v.holds && v.is_certified());
    let bar = ring(&a2, &[iv![1, 1]]);
    let v = is_regular_sequence(&seq(&a2, "t[1,0]"), &bar, None).unwrap();
    assert!(!v.holds);
    assert_eq!(v.failure().unwrap().witness, Some(iv![1, 2]));
    assert!(is_regular_sequence(&seq(&a2, "t[2,2]"), &bar, None).is_err());
    let g = cech_grade(&r, &seq(&a2, "t[1,0],t[1,2]"), None).unwrap();
    assert!(g.grade.unwrap() >= 2);
}

#[test]
fn parameter_sequences() {
    let a2 = Monoid::hn(2);
    let r = ring(&a2, &[]);
    let v = is_parameter_sequence(&seq(&a2, "t[1,0],t[1,2]"), &r, &cfg()).unwrap();
    assert!(v.holds, "{v:?}");
    let bar = ring(&a2, &[iv![1, 1]]);
    let v = is_parameter_sequence(&seq(&a2, "t[1,0]"), &bar, &cfg()).unwrap();
    assert!(!v.holds);
    assert!(matches!(
        v.failure().unwrap().condition,
        Condition::LocalizedNonvanishing { height: 1, .. }
    ));
    let h = Monoid::slope_halfplane();
    let hbar = ring(&h, &[iv![1, 1]]);
    let c = ParameterConfig::new(DegreeBox::cube(2, 0, 8).unwrap(), 2);
    let v = is_parameter_sequence(&seq(&h, "t[1,0]"), &hbar, &c).unwrap();
    assert!(v.holds, "{v:?}");
    assert!(v.tags.contains(&ScopeTag::MonomialScope));
    let kh = ring(&h, &[]);
    let v = is_parameter_sequence(&seq(&h, "t[1,0],t[1,1]"), &kh, &cfg()).unwrap();
    assert!(!v.holds);
    let s = is_strong_parameter_sequence(&seq(&a2, "t[1,0],t[1,2]"), &r, &cfg()).unwrap();
    assert!(s.holds);
}

#[test]
fn cm_in_the_sense_of_ideals() {
    let q = ring(&Monoid::affine(2, &[iv![1, 0], iv![0, 1]]).unwrap(), &[]);
    let xy = MonomialIdeal::new(q.monoid(), &[iv![1, 0], iv![0, 1]]).unwrap();
    let rep = cm_ideals_check_family(&q, &[xy], GradeMode::Auto, None).unwrap();
    assert_eq!((rep.rows[0].height, rep.rows[0].grade.grade), (2, Some(2)));
    assert!(rep.all_equal);
    let h = Monoid::slope_halfplane();
    let kh = ring(&h, &[]);
    let x = MonomialIdeal::new(&h, &[iv![1, 0]]).unwrap();
    let rep = cm_ideals_check_family(&kh, &[x], GradeMode::Auto, None).unwrap();
    let row = &rep.rows[0];
    assert_eq!((row.height, row.grade.grade), (2, Some(1)));
    assert!(!rep.all_equal);
    assert!(rep.tags.contains(&ScopeTag::MonomialScope));
    let a2 = ring(&Monoid::hn(2), &[]);
    let cfg = CmIdealsConfig {
        degree_bound: 3,
        ..CmIdealsConfig::default()
    };
    let rep = cm_ideals_check(&a2, &cfg).unwrap();
    assert!(rep.all_equal, "{:?}", rep.first_unequal());
    assert!(rep.tags.contains(&ScopeTag::Certified));
}

#[test]
fn weak_bourbaki() {
    let h = Monoid::slope_halfplane();
    let xy = MonomialIdeal::new(&h, &[iv![1, 1]]).unwrap();
    let b = DegreeBox::cube(2, 0, 8).unwrap();
    let rep = weak_bourbaki_check(&xy, &[iv![1, 0], iv![1, 2]], Some(&b)).unwrap();
    match &rep.verdict {
        WbuVerdict::Refuted { witness, prime } => {
            assert_eq!(witness, &iv![1, 2]);
            assert_eq!(prime.height, 2);
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(rep.min_primes.len(), 1);
    let a2 = Monoid::hn(2);
    let xy = MonomialIdeal::new(&a2, &[iv![1, 1]]).unwrap();
    let w = bounded_elements(&a2, 4).unwrap();
    let rep = weak_bourbaki_check(&xy, &w, None).unwrap();
    assert!(matches!(rep.verdict, WbuVerdict::NoRefutationFound { .. }));
    let two = MonomialIdeal::new(&a2, &[iv![1, 0], iv![1, 1]]).unwrap();
    let rep = weak_bourbaki_check(&two, &w, None).unwrap();
    assert!(matches!(rep.verdict, WbuVerdict::Skipped { .. }));
}

#[test]
fn harness_on_a2() {
    let a2 = Monoid::hn(2);
    let r = ring(&a2, &[]);
    let rep = hamilton_marley_harness(&r, &HarnessConfig::new(2, 2, cfg())).unwrap();
    assert!(rep.strong_parameter_count > 0);
    assert!(rep.consistent_with_cm());
    assert!(rep.permutation_invariant);
    assert_eq!(rep.parameter_iff_regular, Some(true));
    for row in rep.rows.iter().filter(|r| r.parameter) {
        let i = MonomialIdeal::new(&a2, row.sequence.exponents()).unwrap();
        assert!(i.height().unwrap() >= row.sequence.len());
    }
}

#[test]
fn harness_on_limit_rings() {
    let h = Monoid::slope_halfplane();
    let c = ParameterConfig::new(DegreeBox::cube(2, 0, 8).unwrap(), 2);
    let hbar = ring(&h, &[iv![1, 1]]);
    let rep = hamilton_marley_harness(&hbar, &HarnessConfig::new(1, 1, c.clone())).unwrap();
    assert!(rep.counterexamples.contains(&seq(&h, "t[1,0]")));
    let kh = ring(&h, &[]);
    let rep = hamilton_marley_harness(&kh, &HarnessConfig::new(2, 2, c)).unwrap();
    assert!(rep.rows.iter().filter(|r| r.sequence.len() == 2).all(|r| !r.strong_parameter));
    assert!(rep.consistent_with_cm());
    assert!(rep.permutation_invariant);
}
