use proptest::prelude::*;

use super::*;
use crate::exactlin::IntVector;
use crate::iv;
use crate::monoids::{integral_closure, AffineMonoid, ClosureAmbient, Monoid};
use crate::ring::{Field, MonomialIdeal, QuotientRing};

fn ring(m: &Monoid, gens: &[IntVector]) -> QuotientRing {
    QuotientRing::new(MonomialIdeal::new(m, gens).unwrap(), Field::Rationals).unwrap()
}

fn seq(m: &Monoid, text: &str) -> MonomialSequence {
    MonomialSequence::parse(text, m).unwrap()
}

fn line() -> Monoid {
    Monoid::affine(1, &[iv![1]]).unwrap()
}

fn plane() -> Monoid {
    Monoid::affine(2, &[iv![1, 0], iv![0, 1]]).unwrap()
}

#[test]
fn sequence_parsing() {
    let h = Monoid::slope_halfplane();
    let s = seq(&h, "t[1,0], t[1,1]");
    assert_eq!(s.exponents(), &[iv![1, 0], iv![1, 1]]);
    assert_eq!(s.to_string(), "t[1,0],t[1,1]");
    assert!(MonomialSequence::parse("t[0,1]", &h).is_err());
    assert!(MonomialSequence::parse("t[0,0]", &h).is_err());
    assert!(MonomialSequence::parse("t[1,0],", &h).is_err());
    assert!(MonomialSequence::new(&h, vec![]).is_err());
}

#[test]
fn koszul_examples() {
    let r = ring(&line(), &[]);
    let s = seq(&line(), "t[1]");
    assert_eq!(koszul_homology(&r, &s, 1, &iv![0]).unwrap(), vec![1, 0]);
    let a2 = Monoid::hn(2);
    let bar = ring(&a2, &[iv![1, 1]]);
    let x = seq(&a2, "t[1,0]");
    // The class of xy² killed by x̄ sits in K_1, shifted by the degree of x.
    assert_eq!(koszul_homology(&bar, &x, 1, &iv![2, 2]).unwrap(), vec![0, 1]);
    assert_eq!(koszul_homology(&bar, &x, 1, &iv![1, 1]).unwrap(), vec![0, 0]);
}

#[test]
fn koszul_transitions() {
    let a2 = Monoid::hn(2);
    let bar = ring(&a2, &[iv![1, 1]]);
    let x = seq(&a2, "t[1,0]");
    let id = koszul_transition(&bar, &x, 2, 2, 1, &iv![3, 2]).unwrap();
    assert_eq!(id.source_dim, 1);
    assert!(id.matrix[0][0].is_one());
    let t = koszul_transition(&bar, &x, 2, 1, 1, &iv![3, 2]).unwrap();
    assert_eq!(t.source_dim, 1);
    assert!(t.is_zero());
    assert!(koszul_transition(&bar, &x, 1, 2, 1, &iv![3, 2]).is_err());
    let free = ring(&plane(), &[]);
    let xy = seq(&plane(), "t[1,0],t[0,1]");
    let id = koszul_transition(&free, &xy, 3, 3, 0, &iv![0, 0]).unwrap();
    assert_eq!((id.source_dim, id.target_dim), (1, 1));
    let t = koszul_transition(&free, &xy, 3, 1, 1, &iv![2, 2]).unwrap();
    assert_eq!(t.source_dim, 0);
}

#[test]
fn weak_proregularity() {
    let b = DegreeBox::symmetric(2, 6);
    let a2 = Monoid::hn(2);
    let r = ring(&a2, &[]);
    let v = weak_proregular_check(&r, &seq(&a2, "t[1,0],t[1,2]"), &b, 4).unwrap();
    assert_eq!(v.verdict, WeakProregularity::HoldsUpTo { m_max: 4 });
    let bar = ring(&a2, &[iv![1, 1]]);
    let v = weak_proregular_check(&bar, &seq(&a2, "t[1,0]"), &b, 4).unwrap();
    assert_eq!(v.verdict, WeakProregularity::HoldsUpTo { m_max: 4 });
    let c = v.colon.unwrap();
    assert!(c.stabilized && c.certified);
    let h = Monoid::slope_halfplane();
    let hbar = ring(&h, &[iv![1, 1]]);
    let v = weak_proregular_check(&hbar, &seq(&h, "t[1,0]"), &DegreeBox::cube(2, 0, 8).unwrap(), 4).unwrap();
    assert_eq!(v.verdict, WeakProregularity::ColonStabilized);
    let l = ring(&line(), &[]);
    let v = weak_proregular_check(&l, &seq(&line(), "t[1]"), &DegreeBox::symmetric(1, 8), 3).unwrap();
    assert_eq!(v.verdict, WeakProregularity::HoldsUpTo { m_max: 3 });
}

#[test]
fn cech_examples() {
    let l = ring(&line(), &[]);
    let x = seq(&line(), "t[1]");
    assert_eq!(cech_cohomology_degree(&l, &x, &iv![-1]).unwrap(), vec![0, 1]);
    assert_eq!(cech_cohomology_degree(&l, &x, &iv![0]).unwrap(), vec![0, 0]);
    let p = ring(&plane(), &[]);
    let xy = seq(&plane(), "t[1,0],t[0,1]");
    assert_eq!(cech_cohomology_degree(&p, &xy, &iv![-1, -1]).unwrap(), vec![0, 0, 1]);
    let h = Monoid::slope_halfplane();
    let kh = ring(&h, &[]);
    let s = seq(&h, "t[1,0],t[1,1]");
    assert_eq!(cech_cohomology_degree(&kh, &s, &iv![0, 1]).unwrap(), vec![0, 1, 0]);
}

#[test]
fn grades() {
    let h = Monoid::slope_halfplane();
    let kh = ring(&h, &[]);
    let g = cech_grade(&kh, &seq(&h, "t[1,0]"), None).unwrap();
    assert_eq!(g.grade, Some(1));
    assert_eq!(g.witness, Some(iv![0, 1]));
    assert!(g.provenance.is_certified());
    let g = cech_grade(&kh, &seq(&h, "t[1,0],t[1,1]"), None).unwrap();
    assert_eq!(g.grade, Some(1));
    assert!(g.provenance.is_certified());
    let a2 = Monoid::hn(2);
    let r = ring(&a2, &[]);
    let g = cech_grade(&r, &seq(&a2, "t[1,0],t[1,2]"), None).unwrap();
    assert_eq!(g.grade, Some(2));
    assert!(g.provenance.is_certified());
    let ev = cech_grade_with(&r, &seq(&a2, "t[1,0],t[1,2]"), None, GradeMode::BoxOnly).unwrap();
    assert_eq!(ev.grade, Some(2));
    assert!(!ev.provenance.is_certified());
    // Vanishing of H^0 on the whole lattice for a domain.
    let rep = cech_report(&kh, &seq(&h, "t[1,0]"), &DegreeBox::symmetric(2, 6)).unwrap();
    assert_eq!(rep.lower_evidence, 1);
    assert!(rep.exact);
    assert!(rep.verify_upper(&kh).unwrap());
    assert!(rep.degrees.iter().all(|d| d.dims[0] == 0));
}

#[test]
fn localized_nonvanishing() {
    let a2 = Monoid::hn(2);
    let r = ring(&a2, &[]);
    let primes = a2.face_primes();
    let aug = primes.iter().find(|p| p.is_augmentation()).unwrap();
    let v = localized_cech_nonvanishing(&r, &seq(&a2, "t[1,0],t[1,2]"), aug, 2, None).unwrap();
    assert!(v.nonzero);
    let bar = ring(&a2, &[iv![1, 1]]);
    let ray = primes
        .iter()
        .find(|p| p.height == 1 && p.face.relint == iv![1, 2])
        .unwrap();
    let v = localized_cech_nonvanishing(&bar, &seq(&a2, "t[1,0]"), ray, 1, None).unwrap();
    assert!(!v.nonzero);
    assert_eq!(v.grade, Some(0));
    let other = primes
        .iter()
        .find(|p| p.height == 1 && p.face.relint == iv![1, 0])
        .unwrap();
    assert!(localized_cech_nonvanishing(&bar, &seq(&a2, "t[1,0]"), other, 1, None).is_err());
    let h = Monoid::slope_halfplane();
    let hbar = ring(&h, &[iv![1, 1]]);
    let aug = h.face_primes().into_iter().find(|p| p.is_augmentation()).unwrap();
    let v = localized_cech_nonvanishing(&hbar, &seq(&h, "t[1,0]"), &aug, 1, None).unwrap();
    assert!(v.nonzero);
}

#[test]
fn non_normal_is_rejected() {
    let m = Monoid::affine(1, &[iv![2], iv![3]]).unwrap();
    let r = ring(&m, &[]);
    let s = seq(&m, "t[2]");
    assert!(matches!(cech_cohomology_degree(&r, &s, &iv![1]), Err(crate::Error::Unsupported(_))));
    assert_eq!(koszul_homology(&r, &s, 1, &iv![3]).unwrap(), vec![1, 0]);
}

#[test]
fn fields_matter_only_through_signs() {
    let p = Monoid::affine(2, &[iv![1, 0], iv![0, 1]]).unwrap();
    let s = seq(&p, "t[1,0],t[0,1]");
    for f in [Field::Rationals, Field::Prime(2), Field::Prime(3)] {
        let r = QuotientRing::full(&p, f).unwrap();
        assert_eq!(cech_cohomology_degree(&r, &s, &iv![-1, -1]).unwrap(), vec![0, 0, 1]);
    }
}

fn normal_monoid() -> impl Strategy<Value = Monoid> {
    prop::collection::vec((0i64..3, 0i64..4), 1..3).prop_map(|v| {
        let mut gens: Vec<IntVector> = v.into_iter().map(|(a, b)| iv![a + 1, b]).collect();
        gens.push(iv![1, 0]);
        gens.push(iv![0, 1]);
        let n = AffineMonoid::new(2, &gens).unwrap();
        integral_closure(&n, &ClosureAmbient::GroupOfDifferences).unwrap().into()
    })
}

fn members(m: &Monoid, picks: &[(i64, i64)]) -> Vec<IntVector> {
    picks
        .iter()
        .map(|&(a, b)| iv![a, b])
        .filter(|v| !v.is_zero() && m.contains(v))
        .collect()
}

fn instance() -> impl Strategy<Value = (Monoid, Vec<IntVector>, Vec<IntVector>)> {
    (
        normal_monoid(),
        prop::collection::vec((0i64..4, 0i64..4), 0..3),
        prop::collection::vec((0i64..3, 0i64..3), 1..4),
    )
        .prop_map(|(m, ig, sg)| {
            let i = members(&m, &ig);
            let mut s = members(&m, &sg);
            if s.is_empty() {
                s.push(iv![1, 0]);
            }
            s.truncate(3);
            (m, i, s)
        })
}

/// `d ∘ d = 0` and the Euler identity for one slice.
fn check_slice(c: &SliceComplex) -> std::result::Result<(), TestCaseError> {
    let len = c.len;
    for f in [Field::Rationals, Field::Prime(2)] {
        for i in 0..len {
            let (first, second, mid) = match c.kind {
                SliceKind::Cech => (c.differential(f, i), c.differential(f, i + 1), c.basis(i + 1).len()),
                SliceKind::Koszul => (c.differential(f, i + 1), c.differential(f, i), c.basis(i).len()),
            };
            for row in &second {
                for col in 0..first.first().map_or(0, |r| r.len()) {
                    let mut acc = f.zero();
                    for k in 0..mid {
                        acc = acc.add(&row[k].mul(&first[k][col]));
                    }
                    prop_assert!(acc.is_zero());
                }
            }
        }
        let h = c.cohomology(f);
        let chi: i64 = h
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum();
        prop_assert_eq!(chi, c.euler_characteristic());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn slices_are_complexes((m, i, s) in instance(), a in (-6i64..8, -6i64..8), p in 1u32..3) {
        let r = ring(&m, &i);
        let s = MonomialSequence::new(&m, s).unwrap();
        let a = iv![a.0, a.1];
        check_slice(&cech_slice(&r, &s, &a).unwrap())?;
        check_slice(&KoszulSlice::new(&r, &s, p, &a).unwrap().complex)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn cech_h0_is_torsion((m, i, s) in instance(), a in (-3i64..6, -3i64..6)) {
        let r = ring(&m, &i);
        let s = MonomialSequence::new(&m, s).unwrap();
        let a = iv![a.0, a.1];
        let h = cech_cohomology_degree(&r, &s, &a).unwrap();
        // X^a is killed by a power of each s_i, by iterated colons.
        let mut killed = r.piece_nonzero(&a);
        if killed {
            for c in s.exponents() {
                let mut hit = false;
                let mut cur = r.ideal().clone();
                for _ in 0..24 {
                    cur = cur.colon_monomial(c, None).unwrap().ideal;
                    if cur.contains_exponent(&a) {
                        hit = true;
                        break;
                    }
                }
                killed &= hit;
            }
        }
        prop_assert_eq!(h[0], usize::from(killed));
    }

    #[test]
    fn koszul_h0_is_quotient_piece((m, i, s) in instance(), p in 1u32..3, a in (0i64..8, 0i64..8)) {
        let r = ring(&m, &i);
        let s = MonomialSequence::new(&m, s).unwrap();
        let a = iv![a.0, a.1];
        let h = koszul_homology(&r, &s, p, &a).unwrap();
        let mut gens = i.clone();
        gens.extend(s.exponents().iter().map(|c| c.scale(p as i64)));
        let q = ring(&m, &gens);
        prop_assert_eq!(h[0], usize::from(q.piece_nonzero(&a)));
    }

    #[test]
    fn top_cech_is_colimit_of_quotients((m, i, s) in instance(), a in (-4i64..4, -4i64..4)) {
        let r = ring(&m, &i);
        let s = MonomialSequence::new(&m, s).unwrap();
        let a = iv![a.0, a.1];
        let top = cech_cohomology_degree(&r, &s, &a).unwrap()[s.len()];
        let big = 40i64;
        let shifted = &a + &s.product().scale(big);
        let h0 = koszul_homology(&r, &s, big as u32, &shifted).unwrap()[0];
        prop_assert_eq!(top, h0);
    }

    #[test]
    fn exact_patterns_cover_the_box((m, i, s) in instance()) {
        let r = ring(&m, &i);
        let s = MonomialSequence::new(&m, s).unwrap();
        let exact = cech_grade(&r, &s, None).unwrap();
        prop_assert!(exact.provenance.is_certified());
        let boxed = cech_grade_with(&r, &s, Some(&DegreeBox::symmetric(2, 14)), GradeMode::BoxOnly).unwrap();
        prop_assert_eq!(exact.grade, boxed.grade);
        prop_assert!(exact.patterns >= boxed.patterns);
    }
}
