use orbifano_web::{analyze_impl, mmp_tree_impl, polygons_impl};

#[test]
fn lists_26_polygons() {
    let v: serde_json::Value = serde_json::from_str(&polygons_impl().unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 26);
}

#[test]
fn analyze_returns_svg_and_family() {
    let v: serde_json::Value = serde_json::from_str(&analyze_impl("-2,1;1,-1;-1,2").unwrap()).unwrap();
    assert_eq!(v["analysis"]["family"], "S_{1,25/3}");
    assert!(v["svg"].as_str().unwrap().starts_with("<svg"));
    assert!(analyze_impl("2,0;0,1;-1,-1").is_err());
    assert!(analyze_impl("garbage").is_err());
}

#[test]
fn trees() {
    assert!(mmp_tree_impl(6, "curated").unwrap().contains("D4"));
    assert!(mmp_tree_impl(6, "sideways").is_err());
    assert!(mmp_tree_impl(0, "raw").is_err());
}
