//! Curated group specs shipped with the crate.

use crate::group::{GroupError, GroupSpec};

/// Binary tetrahedral group in SL(2), whose invariant ring is the E6 singularity.
pub const E6: &str = include_str!("../data/e6.json");
/// Diagonal Klein four-group `{diag(±1, ±1, ±1)} ∩ SL(3)`.
pub const KLEIN4: &str = include_str!("../data/klein4.json");
/// `Q8 × μ_3` acting on `k^2`: the group of the third Veronese subring of the D4 singularity.
pub const D4_VERONESE3: &str = include_str!("../data/d4_veronese3.json");

pub const BUILTIN_NAMES: [&str; 3] = ["e6", "klein4", "d4_veronese3"];

pub fn builtin(name: &str) -> Option<Result<GroupSpec, GroupError>> {
    let text = match name {
        "e6" => E6,
        "klein4" => KLEIN4,
        "d4_veronese3" => D4_VERONESE3,
        _ => return None,
    };
    Some(GroupSpec::from_json(text))
}
