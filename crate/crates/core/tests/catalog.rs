//! The shipped catalog files must match the constructors byte for byte.
//! Run with `HOPF_REGENERATE_CATALOG=1` to rewrite them.

use std::fs;
use std::path::PathBuf;

use hopfcenter::format::{catalog, parse_hopf, write_hopf, write_sub_indices, D4_ROTATIONS};
use hopfcenter::hopf::verify_axioms;

fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

fn files() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = catalog()
        .into_iter()
        .map(|e| (format!("{}.hopf", e.stem), write_hopf(&e.hopf)))
        .collect();
    out.push(("d4_rotations.sub".into(), write_sub_indices(&D4_ROTATIONS)));
    out
}

#[test]
fn catalog_files_match_constructors() {
    let dir = catalog_dir();
    let regenerate = std::env::var("HOPF_REGENERATE_CATALOG").is_ok_and(|v| v == "1");
    for (name, text) in files() {
        let path = dir.join(&name);
        if regenerate {
            fs::create_dir_all(&dir).unwrap();
            fs::write(&path, &text).unwrap();
        } else {
            let on_disk = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert!(on_disk == text, "{name} drifted from its constructor; regenerate with HOPF_REGENERATE_CATALOG=1");
        }
    }
}

#[test]
fn catalog_files_parse_and_verify() {
    for e in catalog() {
        let text = fs::read_to_string(catalog_dir().join(format!("{}.hopf", e.stem))).unwrap();
        let h = parse_hopf(&text).unwrap();
        assert_eq!(h, e.hopf);
        assert!(verify_axioms(&h).all_pass(), "{}", e.stem);
    }
}
