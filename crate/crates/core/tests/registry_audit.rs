use std::collections::BTreeMap;

use sspc_core::harness::claims_registry;

/// Family results, each realized by one record per stated variant.
const FAMILY_RESULTS: [(&str, &[&str]); 11] = [
    ("paths", &["path_strong"]),
    ("cycles", &["cycle_strong"]),
    ("complete bipartite", &["complete_bipartite_strong"]),
    ("wheels", &["wheel_weak", "wheel_strong"]),
    ("double wheels", &["double_wheel_weak", "double_wheel_strong"]),
    ("crown, weak", &["crown_weak"]),
    ("crown, strong", &["crown_strong"]),
    ("Petersen", &["petersen_strong"]),
    ("fans", &["fan_weak", "fan_strong"]),
    ("double fans", &["double_fan_weak", "double_fan_strong"]),
    ("friendship", &["friendship_weak", "friendship_strong"]),
];

const NETWORK_RESULTS: &[(&str, &[&str])] = &[
    ("butterfly, weak", &["butterfly_weak"]),
    ("butterfly, strong", &["butterfly_strong"]),
    ("augmented butterfly r = 3", &["augmented_butterfly_3_strong"]),
    (
        "augmented butterfly",
        &["augmented_butterfly_weak", "augmented_butterfly_strong"],
    ),
    ("enhanced butterfly r = 3", &["enhanced_butterfly_3_strong"]),
    (
        "enhanced butterfly",
        &["enhanced_butterfly_weak", "enhanced_butterfly_strong"],
    ),
    ("Benes r = 2, weak", &["benes_2_weak"]),
    ("Benes, weak", &["benes_weak"]),
    ("Benes, strong", &["benes_strong"]),
    ("silicate", &["silicate_weak", "silicate_strong"]),
    ("hypercube", &["hypercube_weak", "hypercube_strong"]),
    ("Sierpinski", &["sierpinski_weak", "sierpinski_strong"]),
    (
        "gasket n = 2",
        &["sierpinski_gasket_2_weak", "sierpinski_gasket_2_strong"],
    ),
    ("gasket, weak", &["sierpinski_gasket_weak"]),
    ("gasket, strong", &["sierpinski_gasket_strong"]),
];

/// Stated for a graph with no construction; kept as a permanently skipped record.
const UNAVAILABLE: &[&str] = &["actinia_strong"];

#[test]
fn every_result_appears_exactly_once() {
    let mut count: BTreeMap<&str, usize> = BTreeMap::new();
    for c in claims_registry() {
        *count.entry(c.id).or_default() += 1;
    }
    let expected: Vec<&str> = FAMILY_RESULTS
        .iter()
        .chain(NETWORK_RESULTS)
        .flat_map(|(_, ids)| ids.iter().copied())
        .chain(UNAVAILABLE.iter().copied())
        .collect();
    for id in &expected {
        assert_eq!(count.get(id), Some(&1), "{id}");
    }
    assert_eq!(count.len(), expected.len(), "unlisted records: {count:?}");
    assert_eq!(claims_registry().len(), 38);
}

#[test]
fn all_claims_use_k_two() {
    for c in claims_registry() {
        assert_eq!(c.k, 2, "{}", c.id);
    }
}
