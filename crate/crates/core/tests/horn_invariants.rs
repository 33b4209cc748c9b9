use chorn::horn::{FitCaps, HornConfig};
use chorn::verify::{chordal_classes, horn_consistency_suite, horn_refutation_suite};

#[test]
fn every_small_chordal_graph_is_consistent() {
    let classes = chordal_classes(6);
    let report = horn_consistency_suite(&classes, &[1, 2, 3], &HornConfig::new(8, FitCaps::CONSISTENCY), 7);
    assert!(report.ok(), "{report:?}");
    assert!(report.passed as usize >= 3 * classes.len());
}

#[test]
fn longer_rays_still_refute_cycles() {
    let mut config = HornConfig::new(12, FitCaps::REFUTATION);
    config.ray_length = Some(14);
    let report = horn_refutation_suite(&[4, 5], 1, &config);
    assert!(report.ok(), "{report:?}");
}
