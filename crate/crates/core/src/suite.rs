//! Name registry: every check reachable by name, with the bounds the
//! command line uses by default.

use crate::akivis::{check_hom_akivis_identity, to_hom_akivis};
use crate::algebra::HomAlgebra;
use crate::identities;
use crate::powers;
use crate::powers::DEFAULT_POWER_BOUND;
use crate::report::CheckReport;

/// Identity names accepted by `check --identity`.
pub const IDENTITY_CHECK_NAMES: [&str; 12] = [
    "multiplicative",
    "hom-associative",
    "left-hom-leibniz",
    "right-hom-leibniz",
    "skew",
    "hom-jacobi",
    "associator-form",
    "prop31i",
    "prop31ii",
    "prop33",
    "hom-lie-admissible",
    "hom-akivis",
];

/// Power-tower checks run by the `power-assoc` command (plus the per-n
/// split checks, which are parametrized there).
pub const POWER_CHECK_NAMES: [&str; 7] = [
    "3rd-hom-power-assoc",
    "hom-power-assoc",
    "third-power-criterion",
    "right-powers-vanish",
    "left-powers-annihilate",
    "left-powers-annihilate-untwisted",
    "power-associative",
];

/// Every named check, in canonical order.
pub const CHECK_NAMES: [&str; 19] = [
    "multiplicative",
    "hom-associative",
    "left-hom-leibniz",
    "right-hom-leibniz",
    "skew",
    "hom-jacobi",
    "associator-form",
    "prop31i",
    "prop31ii",
    "prop33",
    "hom-lie-admissible",
    "hom-akivis",
    "3rd-hom-power-assoc",
    "hom-power-assoc",
    "third-power-criterion",
    "right-powers-vanish",
    "left-powers-annihilate",
    "left-powers-annihilate-untwisted",
    "power-associative",
];

/// Run a check by name with default bounds; `None` for unknown names.
pub fn run_check(a: &HomAlgebra, name: &str) -> Option<CheckReport> {
    let report = match name {
        "multiplicative" => a.check_multiplicative(),
        "hom-associative" => identities::check_hom_associative(a),
        "left-hom-leibniz" => identities::check_left_hom_leibniz(a),
        "right-hom-leibniz" => identities::check_right_hom_leibniz(a),
        "skew" => identities::check_skew_symmetric(a),
        "hom-jacobi" => identities::check_hom_jacobi(a),
        "associator-form" => identities::check_associator_form(a),
        "prop31i" => identities::check_symmetrized_product_annihilates(a),
        "prop31ii" => identities::check_bracket_derivation(a),
        "prop33" => identities::check_jacobian_cyclic_form(a),
        "hom-lie-admissible" => identities::check_hom_lie_admissible(a),
        "hom-akivis" => check_hom_akivis_identity(&to_hom_akivis(a)),
        "3rd-hom-power-assoc" => powers::check_nth_hom_power_associative(a, 3).expect("3 >= 2"),
        "hom-power-assoc" => powers::check_hom_power_associative(a),
        "third-power-criterion" => powers::check_third_power_criterion(a),
        "right-powers-vanish" => {
            powers::check_right_powers_vanish(a, DEFAULT_POWER_BOUND).expect("bound >= 3")
        }
        "left-powers-annihilate" => {
            powers::check_left_powers_annihilate(a, DEFAULT_POWER_BOUND).expect("bound >= 2")
        }
        "left-powers-annihilate-untwisted" => {
            powers::check_left_powers_annihilate_untwisted(a, DEFAULT_POWER_BOUND)
        }
        "power-associative" => powers::check_power_associative(a),
        _ => return None,
    };
    Some(report)
}
