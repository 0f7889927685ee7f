use realchar_web::{info_json, scan_json, table_json, WEB_MAX_ORDER};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn info_for_a5() {
    let v = parse(info_json("A5").unwrap());
    assert_eq!(v["order"], "60");
    assert_eq!(v["k_r"], 5);
    assert_eq!(v["real_orders"], serde_json::json!([1, 2, 3, 5]));
    assert_eq!(v["quotient"], "A5");
    assert_eq!(v["sol_order"], "1");
}

#[test]
fn table_for_sl32() {
    let v = parse(table_json("SL(3,2)").unwrap());
    assert_eq!(v["labels"], serde_json::json!(["1a", "2a", "3a", "4a", "7a", "7b"]));
    let degrees: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, vec![1, 3, 3, 6, 7, 8]);
    let real = v["rows"].as_array().unwrap().iter().filter(|r| r["real"] == true).count();
    assert_eq!(real, 4);
}

#[test]
fn scans() {
    let v = parse(scan_json("PSL2", 7, 9).unwrap());
    let groups: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["group"].as_str().unwrap()).collect();
    // Sorted by order: |PSL(2,9)| = 360 < |PSL(2,8)| = 504.
    assert_eq!(groups, vec!["PSL(2,7)", "PSL(2,9)", "PSL(2,8)"]);
    assert_eq!(v[1]["kfrak"], "-9/4");
    let a = parse(scan_json("A", 5, 6).unwrap());
    assert_eq!(a.as_array().unwrap().len(), 2);
}

#[test]
fn errors_are_messages() {
    assert!(info_json("PSL(2,6)").unwrap_err().contains("prime power"));
    assert!(info_json("A9").unwrap_err().contains(&WEB_MAX_ORDER.to_string()));
    assert!(scan_json("B", 1, 2).is_err());
}
