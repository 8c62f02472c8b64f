//! Every golden fixture re-validates: the file equals the output of its
//! in-repo constructor and parses back to the same bytes. Set
//! `ALTEXT_BLESS=1` to rewrite the generated files.

mod common;

use altext_core::io;

#[test]
fn generated_fixtures_match_constructors() {
    let bless = std::env::var_os("ALTEXT_BLESS").is_some();
    for (name, doc) in common::generated() {
        let path = common::fixtures_dir().join(name);
        let text = io::serialize(&doc);
        if bless {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(on_disk, text, "{name} differs from its constructor");
        assert_eq!(io::parse(&on_disk).unwrap(), doc, "{name}");
    }
}

#[test]
fn every_fixture_round_trips_byte_identically() {
    let mut seen = 0;
    for entry in std::fs::read_dir(common::fixtures_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.file_name().unwrap() == "goldens.json" {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(io::canonicalize(&text).unwrap(), text, "{}", path.display());
        seen += 1;
    }
    assert!(seen >= common::generated().len());
}
