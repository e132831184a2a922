use std::path::PathBuf;

use metric_lie::nilpotent::{is_h_type, CenterSplit, HTypeStatus};
use metric_lie::specfile::{load_algebra, SpecFile};
use metric_lie::Geometry;

fn fixtures() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut out: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    out.sort();
    assert!(out.len() >= 6);
    out
}

#[test]
fn fixtures_round_trip_byte_for_byte() {
    for path in fixtures() {
        let text = std::fs::read_to_string(&path).unwrap();
        let loaded = SpecFile::parse(&text).unwrap().load().unwrap();
        let back = SpecFile::from_parts(&loaded.name, &loaded.alg, &loaded.metric, &loaded.extras).to_json();
        assert_eq!(back, text, "{}", path.display());
    }
}

#[test]
fn fixture_structure() {
    let check = |name: &str, dim: usize, center: usize, class: Option<usize>| {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
        let l = load_algebra(dir.join(name)).unwrap();
        assert_eq!(l.alg.dim(), dim, "{name}");
        assert_eq!(l.alg.center().rank(), center, "{name}");
        assert_eq!(l.alg.lower_central_series().class, class, "{name}");
        l
    };
    check("heisenberg3.json", 3, 1, Some(2));
    check("abelian4.json", 4, 4, Some(1));
    check("h3_plus_r.json", 4, 2, Some(2));
    let so3 = check("so3.json", 3, 0, None);
    assert!(so3.alg.is_semisimple());
    let q = check("quaternionic7.json", 7, 3, Some(2));
    let geom = Geometry::new(q.alg, q.metric).unwrap();
    assert_eq!(is_h_type(&geom, &CenterSplit::of(&geom)).unwrap().status, HTypeStatus::Holds);
}
