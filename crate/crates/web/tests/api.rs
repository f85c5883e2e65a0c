use bgmu_web::{acceptable_json, polygon_json, witness_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn polygon_has_hull_and_partial_sums() {
    let v = parse(&polygon_json("1,1,1,0,0,0,0,0", 5, 8).unwrap());
    assert_eq!(v["partial_sums"].as_array().unwrap().len(), 9);
    assert_eq!(v["hull"].as_array().unwrap().len(), 9);
    assert_eq!(v["hull"][8], "8");
}

#[test]
fn acceptable_set_for_gl3() {
    let v = parse(&acceptable_json("gl:3", "2,1,0", "id").unwrap());
    let n = v["points"].as_array().unwrap().len();
    assert!(n > 1);
    assert!(v["hasse"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e[0].as_u64().unwrap() < n as u64));
}

#[test]
fn witness_chain() {
    let v = parse(&witness_json("1,1,1,0,0,0,0,0", 5, 8).unwrap());
    assert!(!v["certificate"]["chain"].as_array().unwrap().is_empty());
    assert!(witness_json("1,0", 2, 4).is_err());
    assert!(acceptable_json("gl:3", "0,1,2", "id").is_err());
}
