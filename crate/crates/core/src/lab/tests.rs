use super::*;

#[test]
fn every_scenario_passes_with_defaults() {
    let cfg = ScenarioConfig::default();
    for info in list_scenarios() {
        let rep = run_scenario(info.id, &cfg).unwrap();
        let failed: Vec<_> = rep.assertions.iter().filter(|a| !a.passed).collect();
        assert!(rep.passed, "{}: {failed:#?}", info.id);
        assert!(!rep.assertions.is_empty());
    }
}

#[test]
fn renderings_agree_and_repeat() {
    let cfg = ScenarioConfig::default();
    for id in ["truncation-counterexample", "direct-system"] {
        let a = run_scenario(id, &cfg).unwrap();
        let b = run_scenario(id, &cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(ScenarioReport::verdicts_from_text(&a.to_text()), a.verdicts());
        let v: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(v["assertions"].as_array().unwrap().len(), a.assertions.len());
    }
}

#[test]
fn config_is_echoed_and_checked() {
    let cfg = ScenarioConfig {
        truncations: vec![3],
        boxes: vec![6, 10],
        ..ScenarioConfig::default()
    };
    let rep = run_scenario("non-coherence", &cfg).unwrap();
    assert!(rep.passed);
    assert_eq!(rep.config, cfg);
    assert!(matches!(run_scenario("nope", &cfg), Err(Error::UnknownScenario(_))));
    let bad = ScenarioConfig {
        boxes: vec![],
        ..ScenarioConfig::default()
    };
    assert!(matches!(run_scenario("hochster", &bad), Err(Error::InvalidConfig(_))));
}
