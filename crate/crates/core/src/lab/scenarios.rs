use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{Assertion, ScenarioConfig};
use crate::cm::{
    cm_ideals_check, cm_ideals_check_family, hamilton_marley_harness, is_parameter_sequence,
    is_regular_sequence, weak_bourbaki_check, CmIdealsConfig, HarnessConfig, ParameterConfig,
    ScopeTag, WbuVerdict,
};
use crate::error::Result;
use crate::exactlin::{DegreeBox, IntVector};
use crate::homology::{cech_report, MonomialSequence};
use crate::iv;
use crate::monoids::{
    hn_filtration, is_full, saturated_stage, saturated_system, veronese_truncation, FullVerdict,
    Monoid, OracleMonoid,
};
use crate::ring::{Certificate, Field, MonomialIdeal, QuotientRing};

use ScopeTag::{BoxEvidence, Certified, MonomialScope, MonomialSequencesOnly, StabilizationProtocol};

fn ring(m: &Monoid, gens: &[IntVector]) -> Result<QuotientRing> {
    QuotientRing::new(MonomialIdeal::new(m, gens)?, Field::Rationals)
}

fn cube(b: i64) -> Result<DegreeBox> {
    DegreeBox::cube(2, 0, b)
}

fn strs(vs: &[IntVector]) -> Vec<String> {
    vs.iter().map(|v| v.to_string()).collect()
}

fn x() -> IntVector {
    iv![1, 0]
}

fn xy() -> IntVector {
    iv![1, 1]
}

/// `(1,1), …, (1,n)`.
fn xy_powers(n: i64) -> Vec<IntVector> {
    (1..=n).map(|i| iv![1, i]).collect()
}

fn certified(c: &Certificate) -> ScopeTag {
    if c.is_certified() {
        Certified
    } else {
        BoxEvidence
    }
}

pub(super) fn direct_system(cfg: &ScenarioConfig) -> Result<Vec<Assertion>> {
    let h = Monoid::slope_halfplane();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let d = cfg.degree_bound;
    let chains: Vec<Vec<Vec<IntVector>>> = (0..cfg.samples)
        .map(|_| {
            let mut x = Vec::new();
            (0..3)
                .map(|_| {
                    for _ in 0..rng.gen_range(1..=2) {
                        x.push(iv![rng.gen_range(1..=d), rng.gen_range(0..=2 * d)]);
                    }
                    x.clone()
                })
                .collect()
        })
        .collect();
    let sample = cube(cfg.max_box())?;
    let mut normal = true;
    let mut inside = true;
    let mut monotone = true;
    let mut stages = Vec::new();
    for chain in &chains {
        for xs in chain {
            let s = saturated_stage(&h, xs)?;
            normal &= s.is_normal();
            inside &= sample.points().all(|v| !s.contains(&v) || h.contains(&v));
            stages.push(json!({"x": strs(xs), "hilbert_basis": strs(s.saturation_basis())}));
        }
        monotone &= saturated_system(&h, chain)?.check_on(&sample).is_ok();
    }
    let mut exhausts = Vec::new();
    for &b in &cfg.boxes {
        let xs: Vec<Vec<IntVector>> = (1..=b).map(|k| vec![x(), xy(), iv![1, k]]).collect();
        exhausts.push((b, saturated_system(&h, &xs)?.exhausts_on(&cube(b)?)?));
    }
    Ok(vec![
        Assertion::new(
            "stages-normal",
            "every saturated stage of a sampled finite subset X of H is a normal affine monoid",
            normal,
            json!({ "stages": stages }),
            &[Certified],
        ),
        Assertion::new(
            "stages-inside",
            "every saturated stage lies in H",
            inside,
            json!({ "checked": sample.to_string(), "stages": stages.len() }),
            &[BoxEvidence],
        ),
        Assertion::new(
            "stages-monotone",
            "growing X grows the saturated stage",
            monotone,
            json!({ "checked": sample.to_string(), "chains": chains.len() }),
            &[BoxEvidence],
        ),
        Assertion::new(
            "stages-exhaust",
            "the stages of {(1,0),(1,1),(1,k)} exhaust H on each ladder box",
            exhausts.iter().all(|e| e.1),
            json!({ "ladder": exhausts.iter().map(|(b, ok)| json!({"box": b, "exhausts": ok})).collect::<Vec<_>>() }),
            &[BoxEvidence, StabilizationProtocol],
        ),
    ])
}

pub(super) fn halfplane_limit(cfg: &ScenarioConfig) -> Result<Vec<Assertion>> {
    let b = cfg.max_box();
    let sample = DegreeBox::symmetric(2, b);
    let mut agree = Vec::new();
    for &n in &cfg.truncations {
        let sys = hn_filtration(n)?;
        let stage = &sys.stages[n as usize];
        let oracle = OracleMonoid::slope_bounded(n)?;
        let same = sample.points().all(|v| stage.contains(&v) == oracle.contains(&v));
        agree.push(json!({"n": n, "generators": strs(stage.generators()), "agrees": same}));
    }
    let mut union = Vec::new();
    for &b in &cfg.boxes {
        let sys = hn_filtration(b as u32)?;
        let ok = sys.check_on(&cube(b)?).is_ok() && sys.exhausts_on(&cube(b)?)?;
        union.push(json!({"box": b, "filtration_levels": b + 1, "exhausts": ok}));
    }
    Ok(vec![
        Assertion::new(
            "truncations-are-hn",
            "the monoid generated by (1,0), …, (1,n) is H_n = {0 ≤ b ≤ n·a}",
            agree.iter().all(|e| e["agrees"] == true),
            json!({ "checked": sample.to_string(), "levels": agree }),
            &[BoxEvidence],
        ),
        Assertion::new(
            "union-exhausts",
            "the chain A_0 ⊆ A_1 ⊆ … exhausts the monomials of k + xk[x,y] on each ladder box",
            union.iter().all(|e| e["exhausts"] == true),
            json!({ "ladder": union }),
            &[BoxEvidence, StabilizationProtocol],
        ),
    ])
}

pub(super) fn truncation_counterexample(cfg: &ScenarioConfig) -> Result<Vec<Assertion>> {
    let h = Monoid::slope_halfplane();
    let nmax = cfg.max_truncation();
    let mut gens = Vec::new();
    let mut normal = Vec::new();
    let mut zd = Vec::new();
    let mut colons = Vec::new();
    let mut not_param = Vec::new();
    let pcfg_small = ParameterConfig::new(cube(cfg.min_box())?, 2);
    let mut certs = vec![Certified];
    for n in 1..=nmax {
        let hn = Monoid::hn(n);
        let a = hn.affine_view().expect("H_n is affine");
        let want = (0..=n as i64).map(|i| iv![1, i]).collect::<Vec<_>>();
        gens.push(json!({"n": n, "hilbert_basis": strs(a.saturation_basis()), "exact": a.saturation_basis() == want.as_slice()}));
        normal.push((n, hn.is_normal()));
        let bar = ring(&hn, &[xy()])?;
        let c = bar.ideal().colon_monomial(&x(), None)?;
        certs.push(certified(&c.certificate));
        colons.push(json!({
            "n": n,
            "generators": strs(c.ideal.generators()),
            "exact": c.ideal.generators() == xy_powers(n as i64).as_slice() && c.certificate.is_certified(),
        }));
        if n >= 2 {
            let z = bar.is_zerodivisor(&x(), None)?;
            certs.push(certified(&z.certificate));
            zd.push(json!({
                "n": n,
                "zerodivisor": z.zerodivisor,
                "witness": z.witness.as_ref().map(|w| w.to_string()),
            }));
            let v = is_parameter_sequence(&MonomialSequence::new(&hn, vec![x()])?, &bar, &pcfg_small)?;
            let f = v.failure().map(|f| serde_json::to_value(&f.condition).unwrap_or(Value::Null));
            not_param.push(json!({"n": n, "parameter": v.holds, "failed": f, "certified": v.is_certified()}));
        }
    }
    let hbar = ring(&h, &[xy()])?;
    let mut stab = Vec::new();
    let mut param = Vec::new();
    let mut param_tags = vec![StabilizationProtocol];
    for &b in &cfg.boxes {
        let bx = cube(b)?;
        let c1 = hbar.ideal().colon_monomial(&x(), Some(&bx))?;
        let c2 = hbar.ideal().colon_monomial(&iv![2, 0], Some(&bx))?;
        stab.push(json!({
            "box": bx.to_string(),
            "equal": c1.ideal == c2.ideal,
            "generators": c1.ideal.mu(),
        }));
        let v = is_parameter_sequence(&MonomialSequence::new(&h, vec![x()])?, &hbar, &ParameterConfig::new(bx.clone(), 2))?;
        param_tags.extend(v.tags.iter().copied());
        param.push(json!({"box": bx.to_string(), "parameter": v.holds}));
    }
    let reg = is_regular_sequence(&MonomialSequence::new(&h, vec![x()])?, &hbar, Some(&cube(cfg.min_box())?))?;
    let reg_witness = reg.failure().and_then(|f| f.witness.clone());
    let zd_ok = zd.iter().all(|e| e["zerodivisor"] == true && e["witness"] == "(1,2)");
    Ok(vec![
        Assertion::new(
            "hn-generators",
            "the Hilbert basis of H_n is (1,0), …, (1,n)",
            gens.iter().all(|e| e["exact"] == true),
            json!({ "levels": gens }),
            &[Certified],
        ),
        Assertion::new(
            "hn-normal",
            "every H_n is normal",
            normal.iter().all(|e| e.1),
            json!({ "levels": normal.iter().map(|(n, ok)| json!({"n": n, "normal": ok})).collect::<Vec<_>>() }),
            &[Certified],
        ),
        Assertion::new(
            "zerodivisor-on-truncations",
            "x is a zerodivisor on A_n/(xy) for n ≥ 2, killed by xy²",
            zd_ok && !zd.is_empty(),
            json!({ "levels": zd }),
            &certs,
        ),
        Assertion::new(
            "colon-on-truncations",
            "(xyA_n : x) = (xy, …, xyⁿ)A_n",
            colons.iter().all(|e| e["exact"] == true),
            json!({ "levels": colons }),
            &certs,
        ),
        Assertion::new(
            "colon-stabilizes-on-limit",
            "(xyA : x) = (xyA : x²) in k[H] on every ladder box",
            stab.iter().all(|e| e["equal"] == true),
            json!({ "ladder": stab }),
            &[BoxEvidence, StabilizationProtocol, MonomialScope],
        ),
        Assertion::new(
            "parameter-on-limit",
            "x is a parameter on k[H]/(xy) on every ladder box",
            param.iter().all(|e| e["parameter"] == true),
            json!({ "ladder": param }),
            &param_tags,
        ),
        Assertion::new(
            "not-regular-on-limit",
            "x is not regular on k[H]/(xy): xy² is killed by x",
            !reg.holds && reg_witness == Some(iv![1, 2]),
            json!({ "witness": reg_witness.map(|w| w.to_string()) }),
            &[Certified],
        ),
        Assertion::new(
            "not-parameter-on-truncations",
            "x is not a parameter on A_n/(xy) for any n ≥ 2",
            !not_param.is_empty() && not_param.iter().all(|e| e["parameter"] == false),
            json!({ "levels": not_param }),
            &[MonomialScope, BoxEvidence],
        ),
    ])
}

fn prime_rows(m: &Monoid) -> Vec<Value> {
    m.face_primes()
        .iter()
        .map(|p| {
            json!({
                "face": p.face.relint.to_string(),
                "height": p.height,
                "augmentation": p.is_augmentation(),
                "contains_x": p.contains(&x()),
            })
        })
        .collect()
}

pub(super) fn augmentation_variety(cfg: &ScenarioConfig) -> Result<Vec<Assertion>> {
    let h = Monoid::slope_halfplane();
    let primes = h.face_primes();
    let with_x: Vec<_> = primes.iter().filter(|p| p.contains(&x())).collect();
    let only_aug = with_x.len() == 1 && with_x[0].is_augmentation();
    let mut levels = Vec::new();
    let mut differ = true;
    for &n in &cfg.truncations {
        let hn = Monoid::hn(n);
        let c: Vec<_> = hn.face_primes().into_iter().filter(|p| p.contains(&x())).collect();
        differ &= c.len() == 2 && c.iter().any(|p| p.height == 1);
        levels.push(json!({"n": n, "primes": prime_rows(&hn)}));
    }
    Ok(vec![
        Assertion::new(
            "only-augmentation",
            "among the face primes of k[H] only the augmentation ideal contains x",
            only_aug,
            json!({ "primes": prime_rows(&h) }),
            &[Certified, MonomialScope],
        ),
        Assertion::new(
            "truncations-differ",
            "on each A_n, x also lies in a height-one face prime",
            differ,
            json!({ "levels": levels }),
            &[Certified, MonomialScope],
        ),
    ])
}

pub(super) fn halfplane_cm(cfg: &ScenarioConfig) -> Result<Vec<Assertion>> {
    let h = Monoid::slope_halfplane();
    let kh = ring(&h, &[])?;
    let xa = MonomialIdeal::new(&h, &[x()])?;
    let rep = cm_ideals_check_family(&kh, &[xa], crate::homology::GradeMode::Auto, None)?;
    let row = &rep.rows[0];
    let unequal = row.height == 2 && row.grade.grade == Some(1) && row.grade.witness == Some(iv![0, 1]) && !row.equal;
    let mut i_tags: Vec<ScopeTag> = rep.tags.iter().copied().collect();
    i_tags.push(MonomialScope);

    let xya = MonomialIdeal::new(&h, &[xy()])?;
    let mins = xya.min_face_primes();
    let p = mins.first();
    let shape = mins.len() == 1 && p.is_some_and(|p| p.height == 1 && !p.is_augmentation() && p.contains(&xy()));
    let mut prime_ladder = Vec::new();
    let mut wbu_ladder = Vec::new();
    let mut wbu_tags = vec![StabilizationProtocol, BoxEvidence];
    for &b in &cfg.boxes {
        let bx = cube(b)?;
        let pts = h.elements_in(&bx);
        let prime = p.is_some_and(|p| {
            !p.contains(&iv![0, 0])
                && pts.iter().all(|u| {
                    pts.iter()
                        .all(|v| !p.contains(&(u + v)) || p.contains(u) || p.contains(v))
                })
        });
        prime_ladder.push(json!({"box": bx.to_string(), "prime": prime}));
        let w = weak_bourbaki_check(&xya, &[iv![1, 2]], Some(&bx))?;
        wbu_tags.extend(w.tags.iter().copied());
        let colon = xya.colon_monomial(&iv![1, 2], Some(&bx))?;
        let is_aug = pts.iter().all(|v| colon.ideal.contains_exponent(v) == !v.is_zero());
        let refuted = matches!(&w.verdict, WbuVerdict::Refuted { witness, prime } if *witness == iv![1, 2] && prime.height == 2);
        wbu_ladder.push(json!({
            "box": bx.to_string(),
            "verdict": serde_json::to_value(&w.verdict).unwrap_or(Value::Null),
            "colon_is_augmentation": is_aug,
            "refuted": refuted,
        }));
    }
    let hcfg = HarnessConfig::new(cfg.degree_bound, 2, ParameterConfig::new(cube(cfg.min_box())?, 2));
    let hm = hamilton_marley_harness(&kh, &hcfg)?;
    let mut hm_tags: Vec<ScopeTag> = hm.tags.iter().copied().collect();
    hm_tags.push(MonomialSequencesOnly);
    Ok(vec![
        Assertion::new(
            "height-exceeds-grade",
            "the ideal (x) of k[H] has height 2 but grade 1, witnessed by H¹ at degree (0,1)",
            unequal,
            json!({
                "height": row.height,
                "grade": row.grade.grade,
                "witness": row.grade.witness.as_ref().map(|w| w.to_string()),
                "provenance": serde_json::to_value(&row.grade.provenance).unwrap_or(Value::Null),
            }),
            &i_tags,
        ),
        Assertion::new(
            "unique-minimal-prime",
            "(xy) has the single minimal face prime p = {b ≥ 1}, and p is prime",
            shape && prime_ladder.iter().all(|e| e["prime"] == true),
            json!({
                "min_primes": mins.iter().map(|p| json!({"face": p.face.relint.to_string(), "height": p.height})).collect::<Vec<_>>(),
                "ladder": prime_ladder,
            }),
            &[MonomialScope, BoxEvidence, StabilizationProtocol],
        ),
        Assertion::new(
            "weak-bourbaki-refuted",
            "(xyA : xy²) is the augmentation ideal, a weakly associated prime outside min(xy)",
            wbu_ladder.iter().all(|e| e["refuted"] == true && e["colon_is_augmentation"] == true),
            json!({ "witness": "(1,2)", "ladder": wbu_ladder }),
            &wbu_tags,
        ),
        Assertion::new(
            "strong-parameters-regular",
            "every monomial strong parameter sequence of length ≤ 2 in k[H] is regular",
            hm.consistent_with_cm(),
            json!({
                "sequences": hm.rows.len(),
                "strong_parameter": hm.strong_parameter_count,
                "counterexamples": hm.counterexamples.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "permutation_invariant": hm.permutation_invariant,
            }),
            &hm_tags,
        ),
    ])
}

pub(super) fn non_coherence(cfg: &ScenarioConfig) -> Result<Vec<Assertion>> {
    let h = Monoid::slope_halfplane();
    let mut levels = Vec::new();
    for n in 1..=cfg.max_truncation() {
        let hn = Monoid::hn(n);
        let c = MonomialIdeal::new(&hn, &[xy()])?.colon_monomial(&x(), None)?;
        levels.push(json!({
            "n": n,
            "generators": c.ideal.mu(),
            "exact": c.ideal.generators() == xy_powers(n as i64).as_slice() && c.certificate.is_certified(),
        }));
    }
    let xya = MonomialIdeal::new(&h, &[xy()])?;
    let mut ladder = Vec::new();
    let mut boxes = cfg.boxes.clone();
    boxes.sort_unstable();
    for &b in &boxes {
        let c = xya.colon_monomial(&x(), Some(&cube(b)?))?;
        ladder.push(json!({
            "box": b,
            "generators": c.ideal.mu(),
            "exact": c.ideal.generators() == xy_powers(b).as_slice(),
        }));
    }
    let growing = ladder.windows(2).all(|w| w[0]["generators"].as_u64() < w[1]["generators"].as_u64());
    let xa = MonomialIdeal::new(&h, &[x()])?;
    let height = xa.height()?;
    Ok(vec![
        Assertion::new(
            "colon-growth-truncations",
            "(xyA_n : x) needs exactly n generators xy, …, xyⁿ",
            levels.iter().all(|e| e["exact"] == true),
            json!({ "levels": levels }),
            &[Certified, MonomialScope],
        ),
        Assertion::new(
            "colon-growth-limit",
            "(xyA : x) in k[H] gains a generator with every larger box",
            growing && ladder.iter().all(|e| e["exact"] == true),
            json!({ "ladder": ladder }),
            &[BoxEvidence, MonomialScope],
        ),
        Assertion::new(
            "principal-height-two",
            "the principal ideal (x) of k[H] has height 2",
            xa.mu() == 1 && height == 2,
            json!({ "generators": strs(xa.generators()), "mu": xa.mu(), "height": height }),
            &[Certified, MonomialScope],
        ),
    ])
}

/// The normal affine catalog: `H_n` for `n ≤ 4`, Veronese truncations in
/// `s ≤ 3` variables, the orthant and the cone over the unit square.
pub(crate) fn normal_catalog() -> Result<Vec<(String, Monoid)>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("h{n}"), Monoid::hn(n)));
    }
    for s in 1..=3 {
        out.push((format!("veronese-2-{s}"), Monoid::Affine(Arc::new(veronese_truncation(2, s)?))));
    }
    out.push(("orthant-3".into(), Monoid::affine(3, &[iv![1, 0, 0], iv![0, 1, 0], iv![0, 0, 1]])?));
    out.push((
        "square-cone".into(),
        Monoid::affine(3, &[iv![1, 0, 0], iv![1, 1, 0], iv![1, 0, 1], iv![1, 1, 1]])?,
    ));
    Ok(out)
}

fn cm_assertion(label: &str, name: &str, m: &Monoid, bound: i64) -> Result<Assertion> {
    let r = QuotientRing::full(m, Field::Rationals)?;
    let rep = cm_ideals_check(
        &r,
        &CmIdealsConfig {
            degree_bound: bound,
            ..CmIdealsConfig::default()
        },
    )?;
    let witnessed = rep.rows.iter().all(|r| r.grade.witness.is_some());
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for row in &rep.rows {
        *hist.entry(row.height).or_default() += 1;
    }
    let tags: Vec<ScopeTag> = rep.tags.iter().copied().collect();
    Ok(Assertion::new(
        label,
        &format!("grade = height for every monomial ideal of k[{name}] with ≤ 2 generators of coordinates ≤ {bound}"),
        rep.all_equal && witnessed,
        json!({
            "ring": rep.ring,
            "ideals": rep.rows.len(),
            "rows_by_height": hist,
            "first_unequal": rep.first_unequal().map(|r| strs(&r.generators)),
        }),
        &tags,
    ))
}

pub(super) fn hochster(cfg: &ScenarioConfig) -> Result<Vec<Assertion>> {
    normal_catalog()?
        .iter()
        .map(|(name, m)| cm_assertion(&format!("cm-{name}"), name, m, cfg.degree_bound))
        .collect()
}

pub(super) fn veronese_limit(cfg: &ScenarioConfig) -> Result<Vec<Assertion>> {
    let mut full = Vec::new();
    let mut out = Vec::new();
    for d in 2..=3u32 {
        for s in 1..=3usize {
            let m = veronese_truncation(d, s)?.padded(s + 1)?;
            let n = Monoid::Affine(Arc::new(veronese_truncation(d, s + 1)?));
            let v = is_full(&m, &n, &DegreeBox::cube(s + 1, 0, cfg.degree_bound)?)?;
            full.push(json!({"d": d, "s": s, "full": v == FullVerdict::Full}));
        }
    }
    out.push(Assertion::new(
        "fullness-chain",
        "the Veronese truncation in s variables is full in the one in s + 1 variables",
        full.iter().all(|e| e["full"] == true),
        json!({ "chain": full }),
        &[Certified],
    ));
    for d in 2..=3u32 {
        for s in 1..=3usize {
            let m = Monoid::Affine(Arc::new(veronese_truncation(d, s)?));
            out.push(cm_assertion(
                &format!("cm-veronese-{d}-{s}"),
                &format!("veronese-{d}-{s}"),
                &m,
                cfg.degree_bound,
            )?);
        }
        let m = Monoid::Affine(Arc::new(veronese_truncation(d, 2)?));
        let r = QuotientRing::full(&m, Field::Rationals)?;
        let hcfg = HarnessConfig::new(cfg.degree_bound, 2, ParameterConfig::new(cube(cfg.min_box())?, 2));
        let hm = hamilton_marley_harness(&r, &hcfg)?;
        let mut tags: Vec<ScopeTag> = hm.tags.iter().copied().collect();
        tags.push(MonomialSequencesOnly);
        out.push(Assertion::new(
            &format!("harness-veronese-{d}-2"),
            "monomial strong parameter sequences of the truncation are regular",
            hm.consistent_with_cm() && hm.strong_parameter_count > 0,
            json!({
                "sequences": hm.rows.len(),
                "strong_parameter": hm.strong_parameter_count,
                "parameter_iff_regular": hm.parameter_iff_regular,
            }),
            &tags,
        ));
    }
    Ok(out)
}

pub(super) fn monomial_pairs(cfg: &ScenarioConfig) -> Result<Vec<Assertion>> {
    let h = Monoid::slope_halfplane();
    let kh = ring(&h, &[])?;
    let els = crate::cm::bounded_elements(&h, cfg.degree_bound)?;
    let pcfg = ParameterConfig::new(cube(cfg.min_box())?, 2);
    let mut failures: BTreeMap<String, usize> = BTreeMap::new();
    let mut offenders = Vec::new();
    let mut tags = vec![MonomialScope];
    let mut pairs = 0;
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            let s = MonomialSequence::new(&h, vec![els[i].clone(), els[j].clone()])?;
            let v = is_parameter_sequence(&s, &kh, &pcfg)?;
            pairs += 1;
            tags.extend(v.tags.iter().copied());
            match v.failure() {
                Some(f) => {
                    let kind = serde_json::to_value(&f.condition).ok();
                    let kind = kind
                        .as_ref()
                        .and_then(|k| k["kind"].as_str())
                        .unwrap_or("unknown")
                        .to_string();
                    *failures.entry(kind).or_default() += 1;
                }
                None => offenders.push(s.to_string()),
            }
        }
    }
    let seq = MonomialSequence::new(&h, vec![x(), xy()])?;
    let mut ladder = Vec::new();
    let mut top_tags = vec![MonomialScope];
    for &b in &cfg.boxes {
        let rep = cech_report(&kh, &seq, &DegreeBox::symmetric(2, b))?;
        let vanishes = rep.degrees.iter().all(|d| d.dims[2] == 0);
        top_tags.push(if rep.exact { Certified } else { BoxEvidence });
        ladder.push(json!({"box": rep.checked.to_string(), "h2_vanishes": vanishes, "exact": rep.exact}));
    }
    Ok(vec![
        Assertion::new(
            "pairs-not-parameter",
            &format!("no pair of distinct monomials of k[H] with coordinates ≤ {} is a parameter sequence", cfg.degree_bound),
            offenders.is_empty() && pairs > 0,
            json!({ "pairs": pairs, "failed_condition": failures, "parameter_pairs": offenders }),
            &tags,
        ),
        Assertion::new(
            "top-cech-vanishes",
            "H² of the Čech complex of (x, xy) on k[H] vanishes in every degree",
            ladder.iter().all(|e| e["h2_vanishes"] == true),
            json!({ "ladder": ladder }),
            &top_tags,
        ),
    ])
}
