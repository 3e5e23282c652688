use proptest::prelude::*;

use super::*;
use crate::exactlin::{DegreeBox, IntVector};
use crate::iv;
use crate::monoids::Monoid;

fn ideal(m: &Monoid, gens: &[IntVector]) -> MonomialIdeal {
    MonomialIdeal::new(m, gens).unwrap()
}

/// Exponents of a colon found by scanning a box.
fn colon_by_scan(i: &MonomialIdeal, j: &MonomialIdeal, b: &DegreeBox) -> Vec<IntVector> {
    b.points()
        .filter(|d| {
            i.monoid().contains(d) && j.generators().iter().all(|g| i.contains_exponent(&(d + g)))
        })
        .collect()
}

#[test]
fn membership_examples() {
    let a2 = Monoid::hn(2);
    let q = Field::Rationals;
    let xy = ideal(&a2, &[iv![1, 1]]);
    let f = RingElement::monomial(&a2, q, iv![2, 2]).unwrap();
    let m = xy.membership(&f).unwrap();
    assert!(m.member);
    assert_eq!(m.witnesses[0].generator, Some(iv![1, 1]));
    let f = RingElement::monomial(&a2, q, iv![1, 2]).unwrap();
    assert!(!xy.membership(&f).unwrap().member);
    let zero = MonomialIdeal::zero(&a2);
    assert!(!zero.membership(&f).unwrap().member);
    let other = RingElement::monomial(&Monoid::hn(3), q, iv![1, 3]).unwrap();
    assert!(xy.membership(&other).is_err());
}

#[test]
fn colon_examples() {
    let a2 = Monoid::hn(2);
    let xy = ideal(&a2, &[iv![1, 1]]);
    let c = xy.colon_monomial(&iv![1, 0], None).unwrap();
    assert!(c.certificate.is_certified());
    assert_eq!(c.ideal.generators(), &[iv![1, 1], iv![1, 2]]);
    let one = xy.colon_monomial(&iv![0, 0], None).unwrap();
    assert_eq!(one.ideal, xy);
    for n in 1..=6u32 {
        let an = Monoid::hn(n);
        let xy = ideal(&an, &[iv![1, 1]]);
        let c = xy.colon_monomial(&iv![1, 0], None).unwrap();
        let want: Vec<IntVector> = (1..=n as i64).map(|i| iv![1, i]).collect();
        assert_eq!(c.ideal.generators(), &want[..], "n = {n}");
        let x = ideal(&an, &[iv![1, 0]]);
        let scan = colon_by_scan(&xy, &x, &DegreeBox::cube(2, 0, 8).unwrap());
        let scanned = ideal(&an, &scan);
        assert_eq!(scanned.generators(), &want[..]);
    }
}

#[test]
fn oracle_colon_is_truncated() {
    let h = Monoid::slope_halfplane();
    let xy = ideal(&h, &[iv![1, 1]]);
    for r in [4i64, 6, 8] {
        let b = DegreeBox::cube(2, 0, r).unwrap();
        let c = xy.colon_monomial(&iv![1, 0], Some(&b)).unwrap();
        assert!(!c.certificate.is_certified());
        let want: Vec<IntVector> = (1..=r).map(|i| iv![1, i]).collect();
        assert_eq!(c.ideal.generators(), &want[..]);
    }
}

#[test]
fn sum_product_intersection() {
    let a2 = Monoid::hn(2);
    let x = ideal(&a2, &[iv![1, 0]]);
    let xy = ideal(&a2, &[iv![1, 1]]);
    assert_eq!(x.sum(&xy).unwrap().generators(), &[iv![1, 0], iv![1, 1]]);
    assert_eq!(x.product(&x).unwrap().generators(), &[iv![2, 0]]);
    let ii = xy.intersection(&xy, None).unwrap();
    assert!(ii.certificate.is_certified());
    assert_eq!(ii.ideal, xy);
    let y2 = ideal(&a2, &[iv![1, 2]]);
    let both = x.intersection(&y2, None).unwrap().ideal;
    for d in DegreeBox::cube(2, 0, 8).unwrap().points() {
        let want = x.contains_exponent(&d) && y2.contains_exponent(&d);
        assert_eq!(both.contains_exponent(&d), want, "{d}");
    }
}

#[test]
fn primes_and_heights() {
    let h = Monoid::slope_halfplane();
    let xy = ideal(&h, &[iv![1, 1]]);
    let p = xy.min_face_primes();
    assert_eq!(p.len(), 1);
    assert_eq!(p[0].height, 1);
    assert!(p[0].contains(&iv![1, 1]) && !p[0].contains(&iv![1, 0]));
    let x = ideal(&h, &[iv![1, 0]]);
    let p = x.min_face_primes();
    assert_eq!(p.len(), 1);
    assert!(p[0].is_augmentation());
    assert_eq!(x.height().unwrap(), 2);
    let a2 = Monoid::hn(2);
    let x2 = ideal(&a2, &[iv![1, 0]]);
    let p = x2.min_face_primes();
    assert_eq!(p.len(), 1);
    assert_eq!(p[0].height, 1);
    assert!(!p[0].contains(&iv![1, 2]));
    assert_eq!(MonomialIdeal::zero(&a2).height().unwrap(), 0);
}

#[test]
fn dimensions() {
    let q = Field::Rationals;
    for n in 1..=4 {
        assert_eq!(QuotientRing::full(&Monoid::hn(n), q).unwrap().krull_dim().unwrap(), 2);
    }
    let h = Monoid::slope_halfplane();
    assert_eq!(QuotientRing::full(&h, q).unwrap().krull_dim().unwrap(), 2);
    let n1 = Monoid::affine(1, &[iv![1]]).unwrap();
    assert_eq!(QuotientRing::full(&n1, q).unwrap().krull_dim().unwrap(), 1);
    let r = QuotientRing::new(ideal(&h, &[iv![1, 1]]), q).unwrap();
    assert!(r.krull_dim().is_err());
}

#[test]
fn zerodivisors() {
    let q = Field::Rationals;
    let a2 = Monoid::hn(2);
    let bar = QuotientRing::new(ideal(&a2, &[iv![1, 1]]), q).unwrap();
    let v = bar.is_zerodivisor(&iv![1, 0], None).unwrap();
    assert!(v.zerodivisor);
    assert_eq!(v.witness, Some(iv![1, 2]));
    let full = QuotientRing::full(&a2, q).unwrap();
    assert!(!full.is_zerodivisor(&iv![1, 0], None).unwrap().zerodivisor);
    assert!(matches!(
        bar.is_zerodivisor(&iv![1, 1], None),
        Err(crate::Error::ZeroInQuotient(_))
    ));
    assert!(bar.is_zerodivisor(&iv![0, 1], None).is_err());
}

#[test]
fn quotient_heights() {
    let q = Field::Rationals;
    for n in 2..=6 {
        let an = Monoid::hn(n);
        let bar = QuotientRing::new(ideal(&an, &[iv![1, 1]]), q).unwrap();
        assert_eq!(bar.height_of(&ideal(&an, &[iv![1, 0]])).unwrap(), 0, "n = {n}");
    }
    let h = Monoid::slope_halfplane();
    let bar = QuotientRing::new(ideal(&h, &[iv![1, 1]]), q).unwrap();
    assert_eq!(bar.height_of(&ideal(&h, &[iv![1, 0]])).unwrap(), 1);
    assert_eq!(bar.min_primes().len(), 1);
}

#[test]
fn exact_colon_in_three_dimensions() {
    let m = Monoid::affine(3, &[iv![1, 0, 0], iv![0, 1, 0], iv![0, 0, 1]]).unwrap();
    let i = ideal(&m, &[iv![2, 1, 0], iv![0, 1, 2]]);
    let j = ideal(&m, &[iv![1, 0, 1]]);
    let c = i.colon(&j, None).unwrap();
    assert_eq!(c.ideal.generators(), &[iv![0, 1, 1], iv![1, 1, 0]]);
    let sq = Monoid::affine(3, &[iv![1, 0, 0], iv![1, 1, 0], iv![1, 0, 1], iv![1, 1, 1]]).unwrap();
    let i = ideal(&sq, &[iv![2, 2, 1]]);
    let j = ideal(&sq, &[iv![1, 1, 0]]);
    let c = i.colon(&j, None).unwrap().ideal;
    let scan = colon_by_scan(&i, &j, &DegreeBox::cube(3, 0, 6).unwrap());
    assert_eq!(ideal(&sq, &scan), c);
}

fn small_monoid() -> impl Strategy<Value = Monoid> {
    prop::collection::vec((1i64..4, 0i64..4), 1..4).prop_map(|v| {
        let mut gens: Vec<IntVector> = v.into_iter().map(|(a, b)| iv![a, b]).collect();
        gens.push(iv![1, 0]);
        Monoid::affine(2, &gens).unwrap()
    })
}

fn elements(m: &Monoid, picks: &[(i64, i64)]) -> Vec<IntVector> {
    picks.iter().map(|&(a, b)| iv![a, b]).filter(|v| m.contains(v)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalization_is_confluent(
        m in small_monoid(),
        picks in prop::collection::vec((0i64..6, 0i64..6), 1..6),
        seed in any::<u64>(),
    ) {
        let gens = elements(&m, &picks);
        let mut shuffled = gens.clone();
        let k = shuffled.len().max(1);
        shuffled.rotate_left((seed as usize) % k);
        shuffled.reverse();
        prop_assert_eq!(ideal(&m, &gens), ideal(&m, &shuffled));
    }

    #[test]
    fn colon_matches_scan(
        m in small_monoid(),
        ip in prop::collection::vec((0i64..5, 0i64..5), 1..4),
        jp in prop::collection::vec((0i64..4, 0i64..4), 1..3),
    ) {
        let i = ideal(&m, &elements(&m, &ip));
        let j = ideal(&m, &elements(&m, &jp));
        let c = i.colon(&j, None).unwrap();
        let b = DegreeBox::cube(2, 0, 10).unwrap();
        if m.is_normal() {
            prop_assert!(c.certificate.is_certified());
        }
        for d in b.points().filter(|d| m.contains(d)) {
            let want = j.generators().iter().all(|g| i.contains_exponent(&(&d + g)));
            prop_assert_eq!(c.ideal.contains_exponent(&d), want, "degree {}", d);
        }
    }

    #[test]
    fn colon_powers_increase(
        m in small_monoid(),
        ip in prop::collection::vec((0i64..5, 0i64..5), 1..4),
        s in (0i64..3, 0i64..3),
    ) {
        let i = ideal(&m, &elements(&m, &ip));
        let s = iv![s.0 + 1, s.1];
        prop_assume!(m.contains(&s));
        let c1 = i.colon_monomial(&s, None).unwrap().ideal;
        let c2 = i.colon_monomial(&s.scale(2), None).unwrap().ideal;
        prop_assert!(c2.contains_ideal(&c1));
        prop_assert!(c1.contains_ideal(&i));
    }
}
