#![allow(dead_code)]

use std::path::PathBuf;

use contact_dirac::contact::ContactData;
use contact_dirac::fixture::{load_fixture, Fixture};

pub const CONTACT_FIXTURES: [&str; 4] = ["heis3", "e11", "heis5", "su2"];

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixtures_dir().join(format!("{name}.json"))
}

pub fn fixture(name: &str) -> Fixture {
    load_fixture(&fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn contact(name: &str) -> ContactData {
    fixture(name)
        .contact()
        .unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn all_contact() -> Vec<(&'static str, ContactData)> {
    CONTACT_FIXTURES.iter().map(|&n| (n, contact(n))).collect()
}
