use std::fmt::Write;
use std::time::Instant;

use serde_json::{json, Value};

use limitcm::cm::{
    self, CmIdealsConfig, HarnessConfig, ParameterConfig, SequenceVerdict, WbuVerdict,
};
use limitcm::exactlin::DegreeBox;
use limitcm::homology::{self, default_box, GradeMode, MonomialSequence};
use limitcm::lab::{self, ScenarioConfig};
use limitcm::monoids::{self, ClosureAmbient, FullVerdict, Monoid};
use limitcm::ring::{MonomialIdeal, QuotientRing, RingElement};
use limitcm::IntVector;

use crate::input;
use crate::{MonoidIn, RingIn, SeqCheck};

/// What a subcommand prints, and whether its check held.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn query(json: Value, text: String) -> Self {
        Outcome { json, text, ok: true }
    }
}

type Res = Result<Outcome, String>;

fn err(e: limitcm::Error) -> String {
    e.to_string()
}

fn strs(vs: &[IntVector]) -> Vec<String> {
    vs.iter().map(|v| v.to_string()).collect()
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn affine(m: &Monoid) -> Result<&monoids::AffineMonoid, String> {
    m.affine_view()
        .ok_or_else(|| format!("{m} has no affine model; this query needs generators"))
}

pub fn hilbert_basis(i: &MonoidIn) -> Res {
    let m = input::monoid(i)?;
    let hb = affine(&m)?.saturation_basis().to_vec();
    let text = strs(&hb).join("\n") + "\n";
    Ok(Outcome::query(json!({ "monoid": m.to_string(), "hilbert_basis": strs(&hb) }), text))
}

pub fn normality(i: &MonoidIn) -> Res {
    let m = input::monoid(i)?;
    let normal = m.is_normal();
    Ok(Outcome::query(
        json!({ "monoid": m.to_string(), "normal": normal }),
        format!("normal: {}\n", yes(normal)),
    ))
}

pub fn closure(i: &MonoidIn, ambient: &str) -> Res {
    let m = input::monoid(i)?;
    let amb = match ambient {
        "group" => ClosureAmbient::GroupOfDifferences,
        "lattice" => ClosureAmbient::FullLattice,
        other => return Err(format!("unknown ambient {other:?}; use `group` or `lattice`")),
    };
    let c = monoids::integral_closure(affine(&m)?, &amb).map_err(err)?;
    let gens = strs(c.saturation_basis());
    Ok(Outcome::query(
        json!({ "monoid": m.to_string(), "ambient": ambient, "closure_generators": gens }),
        gens.join("\n") + "\n",
    ))
}

pub fn faces(i: &MonoidIn) -> Res {
    let m = input::monoid(i)?;
    let primes = m.face_primes();
    let mut text = String::from("rank  height  relint  functionals\n");
    let rows: Vec<Value> = primes
        .iter()
        .map(|p| {
            let _ = writeln!(
                text,
                "{:>4}  {:>6}  {}  {}",
                p.face.rank,
                p.height,
                p.face.relint,
                strs(&p.face.functionals).join(" ")
            );
            json!({
                "rank": p.face.rank,
                "height": p.height,
                "relint": p.face.relint.to_string(),
                "functionals": strs(&p.face.functionals),
            })
        })
        .collect();
    Ok(Outcome::query(json!({ "monoid": m.to_string(), "faces": rows }), text))
}

pub fn full(i: &MonoidIn, within: &str, b: Option<&str>) -> Res {
    let m = input::monoid(i)?;
    let n = input::monoid_doc(within)?.build().map_err(err)?;
    let b = input::degree_box(b, n.dim())?.unwrap_or_else(|| n.sample_box());
    let v = monoids::is_full(affine(&m)?, &n, &b).map_err(err)?;
    let text = match &v {
        FullVerdict::Full => "full\n".to_string(),
        FullVerdict::NotFull { witness, plus, minus } => format!("not full: {witness} = {plus} - {minus}\n"),
        FullVerdict::FullWithinBox { checked } => format!("full within {checked}\n"),
    };
    Ok(Outcome {
        ok: !matches!(v, FullVerdict::NotFull { .. }),
        json: to_value(&v),
        text,
    })
}

fn ideal(r: &RingIn) -> Result<MonomialIdeal, String> {
    input::ring_doc(r)?.ideal().map_err(err)
}

pub fn colon(r: &RingIn, by: &str, b: Option<&str>) -> Res {
    let i = ideal(r)?;
    let b = input::degree_box(b, i.monoid().dim())?;
    let by = input::monomials(by)?;
    let c = if by.len() == 1 {
        i.colon_monomial(&by[0], b.as_ref())
    } else {
        i.colon(&MonomialIdeal::new(i.monoid(), &by).map_err(err)?, b.as_ref())
    }
    .map_err(err)?;
    let text = format!("{}\ncertificate: {}\n", c.ideal, to_value(&c.certificate));
    Ok(Outcome::query(
        json!({ "generators": strs(c.ideal.generators()), "certificate": to_value(&c.certificate) }),
        text,
    ))
}

pub fn height(r: &RingIn) -> Res {
    let i = ideal(r)?;
    let h = i.height().map_err(err)?;
    Ok(Outcome::query(json!({ "ideal": i.to_string(), "height": h }), format!("{h}\n")))
}

pub fn min_primes(r: &RingIn) -> Res {
    let i = ideal(r)?;
    let ps = i.min_face_primes();
    let mut text = String::new();
    let rows: Vec<Value> = ps
        .iter()
        .map(|p| {
            let _ = writeln!(text, "face through {}  height {}", p.face.relint, p.height);
            json!({ "face": p.face.relint.to_string(), "height": p.height, "augmentation": p.is_augmentation() })
        })
        .collect();
    Ok(Outcome::query(json!({ "ideal": i.to_string(), "min_primes": rows }), text))
}

pub fn member(r: &RingIn, element: &str) -> Res {
    let doc = input::ring_doc(r)?;
    let i = doc.ideal().map_err(err)?;
    let f = RingElement::parse(element, i.monoid(), doc.field).map_err(err)?;
    let m = i.membership(&f).map_err(err)?;
    let mut text = format!("member: {}\n", yes(m.member));
    let ws: Vec<Value> = m
        .witnesses
        .iter()
        .map(|w| {
            let g = w.generator.as_ref().map(|g| g.to_string());
            let _ = writeln!(text, "  {}: {}", w.exponent, g.as_deref().unwrap_or("not in the ideal"));
            json!({ "exponent": w.exponent.to_string(), "generator": g })
        })
        .collect();
    Ok(Outcome::query(json!({ "member": m.member, "witnesses": ws }), text))
}

fn ring_and_seq(r: &RingIn, seq: &str) -> Result<(QuotientRing, MonomialSequence), String> {
    let ring = input::ring(r)?;
    let s = MonomialSequence::parse(seq, ring.monoid()).map_err(err)?;
    Ok((ring, s))
}

pub fn koszul(r: &RingIn, seq: &str, degree: &str, power: u32) -> Res {
    let (ring, s) = ring_and_seq(r, seq)?;
    let a = input::degree(degree)?;
    let dims = homology::koszul_homology(&ring, &s, power, &a).map_err(err)?;
    let text = dims
        .iter()
        .enumerate()
        .map(|(i, d)| format!("H_{i} = {d}"))
        .collect::<Vec<_>>()
        .join("  ")
        + "\n";
    Ok(Outcome::query(
        json!({ "sequence": s.to_string(), "power": power, "degree": a.to_string(), "dims": dims }),
        text,
    ))
}

pub fn cech(r: &RingIn, seq: &str, b: Option<&str>) -> Res {
    let (ring, s) = ring_and_seq(r, seq)?;
    let dim = ring.monoid().dim();
    let b = input::degree_box(b, dim)?.unwrap_or_else(|| default_box(dim));
    let rep = homology::cech_report(&ring, &s, &b).map_err(err)?;
    let mut text = format!("Čech cohomology of {} over {}\n", s, rep.checked);
    let head: Vec<String> = (0..=s.len()).map(|i| format!("H^{i}")).collect();
    let _ = writeln!(text, "degree  {}", head.join("  "));
    for d in &rep.degrees {
        let dims: Vec<String> = d.dims.iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(text, "{}  {}", d.degree, dims.join("  "));
    }
    match &rep.upper {
        Some(w) => {
            let _ = writeln!(text, "least nonzero: H^{} at {}", w.index, w.degree);
        }
        None => text.push_str("no nonzero cohomology in the box\n"),
    }
    let _ = writeln!(text, "box meets every support pattern: {}", yes(rep.exact));
    Ok(Outcome::query(to_value(&rep), text))
}

pub fn grade(r: &RingIn, seq: &str, b: Option<&str>) -> Res {
    let (ring, s) = ring_and_seq(r, seq)?;
    let b = input::degree_box(b, ring.monoid().dim())?;
    let g = homology::cech_grade(&ring, &s, b.as_ref()).map_err(err)?;
    let text = match (&g.grade, &g.witness) {
        (Some(i), Some(w)) => format!("grade {i}, witness H^{i} at {w}\nprovenance: {}\n", to_value(&g.provenance)),
        _ => format!("all Čech cohomology vanishes\nprovenance: {}\n", to_value(&g.provenance)),
    };
    Ok(Outcome::query(to_value(&g), text))
}

fn verdict_text(v: &SequenceVerdict, what: &str) -> String {
    let mut text = format!("{} {} {what}\n", v.sequence, if v.holds { "is" } else { "is not" });
    for c in &v.conditions {
        let _ = write!(text, "  [{}] {}", if c.passed { "PASS" } else { "FAIL" }, to_value(&c.condition));
        if let Some(w) = &c.witness {
            let _ = write!(text, " witness {w}");
        }
        text.push('\n');
    }
    let tags: Vec<String> = v.tags.iter().map(|t| to_value(t).as_str().unwrap_or("").to_string()).collect();
    let _ = writeln!(text, "scope: {}", tags.join(", "));
    text
}

fn verdict_outcome(v: SequenceVerdict, what: &str) -> Outcome {
    Outcome {
        text: verdict_text(&v, what),
        ok: v.holds,
        json: to_value(&v),
    }
}

fn parameter_box(b: Option<&str>, dim: usize) -> Result<DegreeBox, String> {
    match input::degree_box(b, dim)? {
        Some(b) => Ok(b),
        None => DegreeBox::cube(dim, 0, 8).map_err(err),
    }
}

pub fn regular(s: &SeqCheck) -> Res {
    let (ring, seq) = ring_and_seq(&s.r, &s.seq)?;
    let b = input::degree_box(s.degree_box.as_deref(), ring.monoid().dim())?;
    let v = cm::is_regular_sequence(&seq, &ring, b.as_ref()).map_err(err)?;
    Ok(verdict_outcome(v, "a regular sequence"))
}

pub fn parameter(s: &SeqCheck, strong: bool, m_max: u32) -> Res {
    let (ring, seq) = ring_and_seq(&s.r, &s.seq)?;
    let cfg = ParameterConfig::new(parameter_box(s.degree_box.as_deref(), ring.monoid().dim())?, m_max);
    let v = if strong {
        cm::is_strong_parameter_sequence(&seq, &ring, &cfg)
    } else {
        cm::is_parameter_sequence(&seq, &ring, &cfg)
    }
    .map_err(err)?;
    Ok(verdict_outcome(
        v,
        if strong {
            "a strong parameter sequence"
        } else {
            "a parameter sequence"
        },
    ))
}

pub fn cm_ideals(r: &RingIn, degree_bound: i64, max_generators: usize, b: Option<&str>) -> Res {
    let ring = input::ring(r)?;
    let cfg = CmIdealsConfig {
        max_generators,
        degree_bound,
        mode: GradeMode::Auto,
        degree_box: input::degree_box(b, ring.monoid().dim())?,
    };
    let rep = cm::cm_ideals_check(&ring, &cfg).map_err(err)?;
    let mut text = format!("{}: {} ideals\n", rep.ring, rep.rows.len());
    for row in &rep.rows {
        let g = row.grade.grade.map_or("none".to_string(), |g| g.to_string());
        let _ = writeln!(
            text,
            "  [{}] ({})  height {}  grade {}",
            if row.equal { "EQUAL" } else { "UNEQUAL" },
            strs(&row.generators).join(", "),
            row.height,
            g
        );
    }
    let _ = writeln!(text, "all equal: {}", yes(rep.all_equal));
    Ok(Outcome {
        ok: rep.all_equal,
        json: to_value(&rep),
        text,
    })
}

pub fn wbu(r: &RingIn, witnesses: Option<&str>, degree_bound: i64, b: Option<&str>) -> Res {
    let i = ideal(r)?;
    let b = input::degree_box(b, i.monoid().dim())?;
    let ws = match witnesses {
        Some(w) => input::monomials(w)?,
        None => cm::bounded_elements(i.monoid(), degree_bound).map_err(err)?,
    };
    let rep = cm::weak_bourbaki_check(&i, &ws, b.as_ref()).map_err(err)?;
    let text = match &rep.verdict {
        WbuVerdict::Skipped { note } => format!("skipped: {note}\n"),
        WbuVerdict::Refuted { witness, prime } => format!(
            "refuted: (I : {witness}) has the minimal prime through {} of height {}, not minimal over I\n",
            prime.face, prime.height
        ),
        WbuVerdict::NoRefutationFound { witnesses_checked } => {
            format!("no refutation among {witnesses_checked} witnesses\n")
        }
    };
    Ok(Outcome {
        ok: !matches!(rep.verdict, WbuVerdict::Refuted { .. }),
        json: to_value(&rep),
        text,
    })
}

pub fn hm_harness(r: &RingIn, degree_bound: i64, max_len: usize, m_max: u32, b: Option<&str>) -> Res {
    let ring = input::ring(r)?;
    let pcfg = ParameterConfig::new(parameter_box(b, ring.monoid().dim())?, m_max);
    let rep = cm::hamilton_marley_harness(&ring, &HarnessConfig::new(degree_bound, max_len, pcfg)).map_err(err)?;
    let mut text = format!(
        "{}: {} sequences, {} strong parameter\n",
        rep.ring,
        rep.rows.len(),
        rep.strong_parameter_count
    );
    for s in &rep.counterexamples {
        let _ = writeln!(text, "  strong parameter but not regular: {s}");
    }
    let _ = writeln!(text, "permutation invariant: {}", yes(rep.permutation_invariant));
    let _ = writeln!(text, "consistent with Cohen-Macaulay: {}", yes(rep.consistent_with_cm()));
    Ok(Outcome {
        ok: rep.consistent_with_cm(),
        json: to_value(&rep),
        text,
    })
}

pub fn paper_list() -> Outcome {
    let list = lab::list_scenarios();
    let text = list.iter().map(|s| format!("{:<27} {}\n", s.id, s.title)).collect();
    Outcome::query(to_value(&list), text)
}

pub fn scenario_config(
    trunc: Option<&str>,
    boxes: Option<&str>,
    degree_bound: Option<i64>,
    samples: Option<usize>,
    seed: Option<u64>,
) -> Result<ScenarioConfig, String> {
    let mut cfg = ScenarioConfig::default();
    if let Some(t) = trunc {
        cfg.truncations = input::list(t)?;
    }
    if let Some(b) = boxes {
        cfg.boxes = input::list(b)?;
    }
    if let Some(d) = degree_bound {
        cfg.degree_bound = d;
    }
    if let Some(s) = samples {
        cfg.samples = s;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    cfg.validate().map_err(err)?;
    Ok(cfg)
}

pub fn paper_run(id: &str, cfg: &ScenarioConfig, json_out: bool) -> Res {
    let ids: Vec<&str> = if id == "all" {
        lab::list_scenarios().iter().map(|s| s.id).collect()
    } else {
        vec![id]
    };
    let mut reports = Vec::new();
    for id in ids {
        let start = Instant::now();
        let rep = lab::run_scenario(id, cfg).map_err(err)?;
        if !json_out {
            eprintln!("{id}: {:.2?}", start.elapsed());
        }
        reports.push(rep);
    }
    let ok = reports.iter().all(|r| r.passed);
    let text = reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n");
    let json = if reports.len() == 1 {
        to_value(&reports[0])
    } else {
        to_value(&reports)
    };
    Ok(Outcome { json, text, ok })
}
