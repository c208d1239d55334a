use mixspec_web::{classify_report, expand_report, pattern_names, pattern_report};
use serde_json::Value;

fn parse(text: Result<String, String>) -> Value {
    serde_json::from_str(&text.unwrap()).unwrap()
}

#[test]
fn expand_pineapple() {
    let v = parse(expand_report("P3", "3,.,-2"));
    assert_eq!(v["graph"]["order"], 6);
    assert_eq!(v["graph"]["cells"], serde_json::json!([0, 0, 0, 1, 2, 2]));
    assert_eq!(v["quotient"][0], serde_json::json!(["2", "1", "0"]));
    assert_eq!(v["in_class_g"], true);
    assert_eq!(v["spectrum"]["m0"], 1);
}

#[test]
fn expand_errors() {
    assert!(expand_report("P3", "3,1").unwrap_err().contains("entries"));
    assert!(expand_report("Q7", "1").is_err());
    assert!(expand_report("P3", "3,0,1").is_err());
}

#[test]
fn classify_by_name_and_graph6() {
    let c5 = parse(classify_report("C5"));
    assert_eq!(c5["in_class_g"], false);
    assert_eq!(c5["witnesses"][0]["name"], "C5");
    let k4 = parse(classify_report("C~"));
    assert_eq!(k4["labels"][0]["family"], "Km");
    assert!(classify_report("C").is_err());
}

#[test]
fn pattern_explorer() {
    let names: Vec<String> = serde_json::from_str(&pattern_names()).unwrap();
    assert_eq!(names.len(), 10);
    for name in &names {
        let v = parse(pattern_report(name, 2, 3, 2, 5));
        assert_eq!(v["direct"][0], v["det_q"]);
        assert_eq!(v["direct"][1], v["det_q_plus_i"]);
    }
    let zero = parse(pattern_report("p,q,r,s", 2, 3, 2, 5));
    assert_eq!(zero["det_q"], 0);
    assert_eq!(zero["expansion"]["in_class_g"], true);
    let big = parse(pattern_report("p,q,-r,s", 20, 20, 20, 20));
    assert!(big["direct"].is_null());
    assert!(pattern_report("p,q", 1, 1, 1, 1).is_err());
    assert!(pattern_report("p,q,r,s", 0, 1, 1, 1).is_err());
}
