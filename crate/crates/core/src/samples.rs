//! Built-in reference sets that need no dataset.

use crate::fuzzy::FuzzySet;

/// Super Mario Bros. rating frequencies (three-decimal proportions).
pub fn appendix_smb() -> FuzzySet {
    FuzzySet::from_pairs([(1.0, 0.385), (2.0, 0.269), (3.0, 0.231), (4.0, 0.115), (5.0, 0.0)])
        .expect("valid set")
        .with_label("SMB")
}

/// Star Wars rating frequencies (three-decimal proportions).
pub fn appendix_sw() -> FuzzySet {
    FuzzySet::from_pairs([(1.0, 0.015), (2.0, 0.027), (3.0, 0.098), (4.0, 0.302), (5.0, 0.557)])
        .expect("valid set")
        .with_label("SW")
}

/// Looks up `appendix:SMB` / `appendix:SW` style names.
pub fn builtin(name: &str) -> Option<FuzzySet> {
    let key = name.strip_prefix("appendix:")?;
    match key.to_ascii_uppercase().as_str() {
        "SMB" => Some(appendix_smb()),
        "SW" => Some(appendix_sw()),
        _ => None,
    }
}

/// Depth of the central dip for each step of the concavity family.
pub const CONCAVITY_DIPS: [f64; 5] = [1.0, 0.9, 0.8, 0.7, 0.6];

/// Two-peaked set whose central dip falls to `dip`. At `dip = 1` it is a flat
/// topped trapezoid; at `dip = 0.6` its 0.8-cut is `[1.8, 2.6] ∪ [3.5, 4.3]`.
pub fn dipped_set(dip: f64) -> FuzzySet {
    FuzzySet::from_pairs([(0.4, 0.0), (2.15, 1.0), (3.05, dip), (3.95, 1.0), (5.7, 0.0)])
        .expect("valid set")
        .with_label(format!("A(dip={dip})"))
}

/// Fixed convex comparison set; its 0.8-cut is `[6.8, 9.2]`.
pub fn concavity_reference() -> FuzzySet {
    FuzzySet::from_pairs([(6.0, 0.0), (7.0, 1.0), (9.0, 1.0), (10.0, 0.0)])
        .expect("valid set")
        .with_label("B")
}

/// The family from convex (first) to most concave (last).
pub fn concavity_family() -> Vec<FuzzySet> {
    CONCAVITY_DIPS.iter().map(|&d| dipped_set(d)).collect()
}
