use forge_demo::{classify_involution, classify_subspace, group_info};
use serde_json::{json, Value};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn group_info_reports_orders_and_census() {
    let v = parse(group_info("GO4m_3").unwrap());
    assert_eq!(v["order"], 1440);
    assert_eq!(v["formula_order"], 1440);
    assert!(v["involutions"].is_null());

    let v = parse(group_info("AutSU4_2").unwrap());
    assert_eq!(v["order"], 51840);
    let sizes: Vec<u64> = v["involutions"].as_array().unwrap().iter().map(|r| r["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes.iter().sum::<u64>(), 45 + 540 + 36 + 270);

    assert!(group_info("M24").is_err());
}

#[test]
fn transvection_is_b1() {
    let t = "100000\n010000\n001000\n000100\n000010\n100001";
    assert_eq!(parse(classify_involution(t).unwrap()), json!({"class": "b1", "dim_cv": 5, "dim_commutator": 1}));
    assert!(classify_involution("100000\n010000\n001000\n000100\n000010\n000001").is_err());
    assert!(classify_involution("1 2").is_err());
}

#[test]
fn subspace_types() {
    let v = parse(classify_subspace("1000\n0100").unwrap());
    assert_eq!(v["dim"], 2);
    assert_eq!(v["points"]["singular"], 2);
    let v = parse(classify_subspace("1000").unwrap());
    assert_eq!(v["type"], "singular");
    let v = parse(classify_subspace("1000\n0100\n0010").unwrap());
    assert_eq!(v["contains_singular_point"], true);
    assert!(classify_subspace("1003").is_err());
}
