//! The reference groups built in code agree with tables generated from
//! matrix and permutation representations (files in `fixtures/`).

use std::fs;
use std::path::Path;

use semihyp::groups::{group_desc, reference_groups, GroupName};
use semihyp::semigroup::isomorphic;
use semihyp::FiniteSemigroup;

fn load(name: &str) -> FiniteSemigroup {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"));
    FiniteSemigroup::from_json(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn constructions_match_frozen_tables() {
    for (name, g) in reference_groups() {
        let frozen = load(name);
        assert!(frozen.is_group(), "{name}");
        assert!(isomorphic(&g, &frozen).is_some(), "{name} construction differs from the frozen table");
    }
}

#[test]
fn frozen_tables_are_recognized() {
    let expected = [
        ("S3", GroupName::S3),
        ("D4", GroupName::D4),
        ("Q8", GroupName::Q8),
        ("Q12", GroupName::Q12),
        ("C4sdC4", GroupName::C4sdC4),
    ];
    for (name, want) in expected {
        assert_eq!(group_desc(&load(name)).unwrap().recognized, want, "{name}");
    }
}

#[test]
fn reference_groups_pairwise_distinct() {
    let gs = reference_groups();
    for (i, (a, g)) in gs.iter().enumerate() {
        for (b, h) in &gs[i + 1..] {
            assert!(isomorphic(g, h).is_none(), "{a} ≅ {b}");
        }
    }
}
