use proptest::prelude::*;

use super::*;
use crate::iv;

fn box8(dim: usize) -> DegreeBox {
    DegreeBox::symmetric(dim, SAMPLE_RADIUS)
}

#[test]
fn closure_examples() {
    let n = AffineMonoid::new(1, &[iv![2], iv![3]]).unwrap();
    let c = integral_closure(&n, &ClosureAmbient::GroupOfDifferences).unwrap();
    assert_eq!(c.generators(), &[iv![1]]);
    let n = AffineMonoid::new(2, &[iv![1, 0], iv![1, 2]]).unwrap();
    let c = integral_closure(&n, &ClosureAmbient::GroupOfDifferences).unwrap();
    assert_eq!(c.generators(), n.generators());
    let c = integral_closure(&n, &ClosureAmbient::FullLattice).unwrap();
    assert_eq!(c.generators(), &[iv![1, 0], iv![1, 1], iv![1, 2]]);
    let c = integral_closure(&n, &ClosureAmbient::Oracle(OracleMonoid::slope_halfplane())).unwrap();
    assert_eq!(c.generators(), &[iv![1, 0], iv![1, 1], iv![1, 2]]);
}

#[test]
fn normality_catalog() {
    for n in 0..=10 {
        assert!(Monoid::hn(n).is_normal(), "H_{n}");
    }
    assert!(!AffineMonoid::new(1, &[iv![2], iv![3]]).unwrap().is_normal());
    let units: Vec<IntVector> = (0..3).map(|i| IntVector::unit(3, i)).collect();
    assert!(AffineMonoid::new(3, &units).unwrap().is_normal());
}

#[test]
fn hn_agrees_with_oracle() {
    for n in 0..=6u32 {
        let a = Monoid::hn(n);
        let o = OracleMonoid::slope_bounded(n).unwrap();
        for v in DegreeBox::new(vec![(-2, 8), (-2, 8 * n as i64 + 2)]).unwrap().points() {
            assert_eq!(a.contains(&v), o.contains(&v), "{v} in H_{n}");
        }
    }
}

#[test]
fn fullness() {
    let h2 = match Monoid::hn(2) {
        Monoid::Affine(a) => a,
        _ => unreachable!(),
    };
    let v = is_full(&h2, &Monoid::hn(3), &box8(2)).unwrap();
    match v {
        FullVerdict::NotFull { witness, plus, minus } => {
            assert_eq!(witness, iv![1, 3]);
            assert!(h2.contains(&plus) && h2.contains(&minus));
            assert_eq!(&plus - &minus, witness);
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(is_full(&h2, &Monoid::Affine(h2.clone()), &box8(2)).unwrap(), FullVerdict::Full);
    for s in 1..=3 {
        let m = veronese_truncation(2, s).unwrap().padded(s + 1).unwrap();
        let n: Monoid = OracleMonoid::veronese(2, s + 1).unwrap().into();
        assert_eq!(is_full(&m, &n, &box8(s + 1)).unwrap(), FullVerdict::Full);
    }
    // Against H only a box verdict is possible.
    let v = is_full(&h2, &Monoid::slope_halfplane(), &box8(2)).unwrap();
    assert!(matches!(v, FullVerdict::NotFull { .. }));
    let ray = AffineMonoid::new(2, &[iv![1, 0]]).unwrap();
    let v = is_full(&ray, &Monoid::slope_halfplane(), &box8(2)).unwrap();
    assert!(matches!(v, FullVerdict::FullWithinBox { .. }));
    assert!(is_full(&h2, &Monoid::hn(1), &box8(2)).is_err());
}

#[test]
fn faces_and_primes() {
    let h = Monoid::slope_halfplane();
    let primes = h.face_primes();
    let aug = &primes[0];
    let p = &primes[1];
    assert!(aug.is_augmentation() && aug.height == 2);
    assert_eq!(p.height, 1);
    assert!(p.contains(&iv![1, 1]) && p.contains(&iv![3, 2]) && !p.contains(&iv![4, 0]));
    let z1 = Monoid::affine(1, &[iv![1]]).unwrap();
    let ranks: Vec<usize> = z1.faces().iter().map(|f| f.rank).collect();
    assert_eq!(ranks, vec![0, 1]);
}

#[test]
fn face_prime_axioms_on_catalog() {
    let catalog: Vec<Monoid> = vec![
        Monoid::slope_halfplane(),
        Monoid::hn(2),
        Monoid::hn(3),
        OracleMonoid::veronese(2, 3).unwrap().into(),
        veronese_truncation(3, 2).unwrap().into(),
    ];
    for m in &catalog {
        let b = DegreeBox::symmetric(m.dim(), if m.dim() > 2 { 3 } else { 5 });
        let elems = m.elements_in(&b);
        for p in m.face_primes() {
            for u in &elems {
                for v in &elems {
                    let s = u + v;
                    if p.contains(&s) {
                        assert!(p.contains(u) || p.contains(v), "{m}: prime fails at {u}+{v}");
                    }
                    if p.face.contains(&s) {
                        assert!(p.face.contains(u) && p.face.contains(v), "{m}: face not extraction-closed");
                    }
                }
            }
            assert!(m.contains(&p.face.relint) && p.face.contains(&p.face.relint));
        }
    }
}

#[test]
fn saturated_stage_examples() {
    let h = Monoid::slope_halfplane();
    assert_eq!(saturated_stage(&h, &[iv![1, 1]]).unwrap().generators(), &[iv![1, 1]]);
    assert_eq!(
        saturated_stage(&h, &[iv![2, 1], iv![1, 1]]).unwrap().generators(),
        &[iv![1, 1], iv![2, 1]]
    );
    // ⟨(1,0),(1,2)⟩ is already closed in its group {b even}.
    assert_eq!(
        saturated_stage(&h, &[iv![1, 0], iv![1, 2]]).unwrap().generators(),
        &[iv![1, 0], iv![1, 2]]
    );
    assert!(saturated_stage(&h, &[iv![0, 1]]).is_err());
}

#[test]
fn filtrations() {
    let sys = hn_filtration(4).unwrap();
    assert_eq!(sys.stages[2].generators(), &[iv![1, 0], iv![1, 1], iv![1, 2]]);
    sys.check_on(&box8(2)).unwrap();
    assert!(!sys.exhausts_on(&box8(2)).unwrap());
    let sys = hn_filtration(8).unwrap();
    assert!(sys.exhausts_on(&DegreeBox::cube(2, -8, 8).unwrap()).unwrap());
    assert_eq!(veronese_truncation(2, 2).unwrap().generators(), &[iv![0, 2], iv![1, 1], iv![2, 0]]);
    let v = veronese_truncation(1, 3).unwrap();
    assert_eq!(v.generators().len(), 3);
}

/// Degree-d monomials in s variables, enumerated directly.
fn degree_d_monomials(d: i64, s: usize) -> Vec<IntVector> {
    DegreeBox::cube(s, 0, d)
        .unwrap()
        .points()
        .filter(|v| v.coords().iter().sum::<i64>() == d)
        .collect()
}

#[test]
fn veronese_truncations_match_enumeration() {
    for d in 1..=3 {
        for s in 1..=4 {
            let v = veronese_truncation(d as u32, s).unwrap();
            let mut want = degree_d_monomials(d, s);
            want.sort();
            assert_eq!(v.generators(), &want[..], "d={d} s={s}");
            assert!(v.is_normal());
        }
    }
}

fn small_gens(dim: usize) -> impl Strategy<Value = Vec<IntVector>> {
    prop::collection::vec(prop::collection::vec(0i64..4, dim), 1..5).prop_map(move |vs| {
        vs.into_iter()
            .map(|mut v| {
                // Keep the cone pointed: first coordinate positive.
                v[0] += 1;
                IntVector::new(v)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_idempotent_and_normal(gens in small_gens(2)) {
        let n = AffineMonoid::new(2, &gens).unwrap();
        for amb in [ClosureAmbient::GroupOfDifferences, ClosureAmbient::FullLattice] {
            let c = integral_closure(&n, &amb).unwrap();
            prop_assert!(c.is_normal());
            prop_assert!(n.generators().iter().all(|g| c.contains(g)));
            let cc = integral_closure(&c, &amb).unwrap();
            prop_assert_eq!(cc.generators(), c.generators());
        }
    }

    #[test]
    fn saturated_stage_monotone(gens in small_gens(2), extra in small_gens(2)) {
        let h = Monoid::slope_halfplane();
        let mut y = gens.clone();
        y.extend(extra);
        let sx = saturated_stage(&h, &gens).unwrap();
        let sy = saturated_stage(&h, &y).unwrap();
        prop_assert!(sx.is_normal() && sy.is_normal());
        for v in DegreeBox::symmetric(2, 6).points() {
            if sx.contains(&v) {
                prop_assert!(sy.contains(&v));
                prop_assert!(h.contains(&v));
            }
        }
    }

    #[test]
    fn self_full(gens in small_gens(3)) {
        let m = AffineMonoid::new(3, &gens).unwrap();
        let v = is_full(&m, &Monoid::Affine(m.clone().into()), &DegreeBox::symmetric(3, 3)).unwrap();
        prop_assert_eq!(v, FullVerdict::Full);
    }

    #[test]
    fn affine_membership_matches_witness(gens in small_gens(2), x in 0i64..9, y in 0i64..9) {
        let m = AffineMonoid::new(2, &gens).unwrap();
        let v = iv![x, y];
        let w = m.decompose(&v).unwrap();
        prop_assert_eq!(w.is_some(), m.contains(&v));
        if let Some(w) = w {
            let mut s = IntVector::zero(2);
            for (c, g) in w.iter().zip(m.generators()) {
                s = &s + &g.scale(*c as i64);
            }
            prop_assert_eq!(s, v);
        }
    }
}
