//! Exact verdicts for the binary-operation identities of a Hom-algebra.
//!
//! Every identity here is trilinear (or bilinear) in its arguments because
//! the product is bilinear and the twist linear, so checking all basis
//! triples (pairs) decides the identity on the whole algebra. Failures
//! report the lexicographically first failing tuple, which keeps witnesses
//! deterministic.
//!
//! Checks with a precondition (the ones that only make sense on a left
//! Hom-Leibniz algebra) still evaluate on arbitrary input and report the raw
//! verdict; a violated precondition is flagged as a warning inside the
//! report name rather than an error, so that non-examples can be probed.

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Element;
use crate::report::{CheckReport, Witness};

/// `as(x,y,z) = (x*y)*alpha(z) - alpha(x)*(y*z)`, the trilinear failure of
/// Hom-associativity.
pub fn hom_associator(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    for w in [x, y, z] {
        if w.dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                actual: w.dim(),
            });
        }
    }
    Ok(associator(a, x, y, z))
}

pub(crate) fn associator(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    &a.mul(&a.mul(x, y), &a.tw(z)) - &a.mul(&a.tw(x), &a.mul(y, z))
}

/// `J(x,y,z) = (x*y)*alpha(z) + (y*z)*alpha(x) + (z*x)*alpha(y)`, the
/// Hom-Jacobian of the algebra's own product.
pub fn hom_jacobian(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    for w in [x, y, z] {
        if w.dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                actual: w.dim(),
            });
        }
    }
    Ok(jacobian(a, x, y, z))
}

fn jacobian(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    let s1 = a.mul(&a.mul(x, y), &a.tw(z));
    let s2 = a.mul(&a.mul(y, z), &a.tw(x));
    let s3 = a.mul(&a.mul(z, x), &a.tw(y));
    &(&s1 + &s2) + &s3
}

/// Jacobian of the derived commutator bracket `[u,v] = u*v - v*u`.
fn jacobian_of_commutator(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    let s1 = a.comm(&a.comm(x, y), &a.tw(z));
    let s2 = a.comm(&a.comm(y, z), &a.tw(x));
    let s3 = a.comm(&a.comm(z, x), &a.tw(y));
    &(&s1 + &s2) + &s3
}

/// Cyclic sum `(x*y)*alpha(z) + (y*z)*alpha(x) + (z*x)*alpha(y)`.
fn cyclic_product_sum(a: &HomAlgebra, x: &Element, y: &Element, z: &Element) -> Element {
    jacobian(a, x, y, z)
}

fn compose_name(base: &str, warning: Option<&str>) -> String {
    match warning {
        Some(w) => format!("{base} [warning: {w}]"),
        None => base.to_string(),
    }
}

fn check_over_triples(
    a: &HomAlgebra,
    base: &str,
    warning: Option<&str>,
    residual: impl Fn(&HomAlgebra, &Element, &Element, &Element) -> Element,
) -> CheckReport {
    let name = compose_name(base, warning);
    let n = a.dim();
    for i in 0..n {
        let ei = Element::basis(n, i);
        for j in 0..n {
            let ej = Element::basis(n, j);
            for k in 0..n {
                let ek = Element::basis(n, k);
                let r = residual(a, &ei, &ej, &ek);
                if !r.is_zero() {
                    return CheckReport::failure(
                        name,
                        Witness::Basis(vec![i + 1, j + 1, k + 1]),
                        r,
                    );
                }
            }
        }
    }
    CheckReport::success(name)
}

fn check_over_pairs(
    a: &HomAlgebra,
    base: &str,
    residual: impl Fn(&HomAlgebra, usize, usize) -> Element,
) -> CheckReport {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let r = residual(a, i, j);
            if !r.is_zero() {
                return CheckReport::failure(base, Witness::Basis(vec![i + 1, j + 1]), r);
            }
        }
    }
    CheckReport::success(base)
}

/// Warning text used by checks whose statement assumes a left Hom-Leibniz
/// algebra.
fn leibniz_warning(a: &HomAlgebra) -> Option<&'static str> {
    if check_left_hom_leibniz(a).holds {
        None
    } else {
        Some("input is not left Hom-Leibniz")
    }
}

/// `as(x,y,z) = 0` on all basis triples.
pub fn check_hom_associative(a: &HomAlgebra) -> CheckReport {
    check_over_triples(a, "hom-associative", None, associator)
}

/// `alpha(x)*(y*z) = (x*y)*alpha(z) + alpha(y)*(x*z)` on all basis triples.
pub fn check_left_hom_leibniz(a: &HomAlgebra) -> CheckReport {
    check_over_triples(a, "left-hom-leibniz", None, |a, x, y, z| {
        let lhs = a.mul(&a.tw(x), &a.mul(y, z));
        let r1 = a.mul(&a.mul(x, y), &a.tw(z));
        let r2 = a.mul(&a.tw(y), &a.mul(x, z));
        &(&lhs - &r1) - &r2
    })
}

/// `(x*y)*alpha(z) = (x*z)*alpha(y) + alpha(x)*(y*z)` on all basis triples.
pub fn check_right_hom_leibniz(a: &HomAlgebra) -> CheckReport {
    check_over_triples(a, "right-hom-leibniz", None, |a, x, y, z| {
        let lhs = a.mul(&a.mul(x, y), &a.tw(z));
        let r1 = a.mul(&a.mul(x, z), &a.tw(y));
        let r2 = a.mul(&a.tw(x), &a.mul(y, z));
        &(&lhs - &r1) - &r2
    })
}

/// `e_i*e_j + e_j*e_i = 0` on all basis pairs.
pub fn check_skew_symmetric(a: &HomAlgebra) -> CheckReport {
    check_over_pairs(a, "skew", |a, i, j| {
        a.basis_product(i, j) + a.basis_product(j, i)
    })
}

/// Hom-Jacobi identity of the algebra's own product.
pub fn check_hom_jacobi(a: &HomAlgebra) -> CheckReport {
    check_over_triples(a, "hom-jacobi", None, jacobian)
}

/// `as(x,y,z) = -alpha(y)*(x*z)`, the associator restatement of the left
/// Hom-Leibniz identity; the two verdicts agree on every algebra.
pub fn check_associator_form(a: &HomAlgebra) -> CheckReport {
    check_over_triples(a, "associator-form", None, |a, x, y, z| {
        &associator(a, x, y, z) + &a.mul(&a.tw(y), &a.mul(x, z))
    })
}

/// `(x*y + y*x)*alpha(z) = 0`: symmetrized products left-annihilate the
/// image of the twist.
pub fn check_symmetrized_product_annihilates(a: &HomAlgebra) -> CheckReport {
    let warn = leibniz_warning(a);
    check_over_triples(a, "prop31i", warn, |a, x, y, z| {
        a.mul(&(&a.mul(x, y) + &a.mul(y, x)), &a.tw(z))
    })
}

/// `alpha(x)*[y,z] = [x*y, alpha(z)] + [alpha(y), x*z]` with the derived
/// commutator bracket: left multiplication is a twisted bracket derivation.
pub fn check_bracket_derivation(a: &HomAlgebra) -> CheckReport {
    let warn = leibniz_warning(a);
    check_over_triples(a, "prop31ii", warn, |a, x, y, z| {
        let lhs = a.mul(&a.tw(x), &a.comm(y, z));
        let r1 = a.comm(&a.mul(x, y), &a.tw(z));
        let r2 = a.comm(&a.tw(y), &a.mul(x, z));
        &(&lhs - &r1) - &r2
    })
}

/// Jacobian of the derived bracket equals the cyclic product sum.
pub fn check_jacobian_cyclic_form(a: &HomAlgebra) -> CheckReport {
    let warn = leibniz_warning(a);
    check_over_triples(a, "prop33", warn, |a, x, y, z| {
        &jacobian_of_commutator(a, x, y, z) - &cyclic_product_sum(a, x, y, z)
    })
}

/// The cyclic sum `(x*y)*alpha(z) + (y*z)*alpha(x) + (z*x)*alpha(y)`
/// vanishes; for a left Hom-Leibniz algebra this is equivalent to the
/// derived bracket satisfying the Hom-Jacobi identity.
pub fn check_hom_lie_admissible(a: &HomAlgebra) -> CheckReport {
    let warn = leibniz_warning(a);
    check_over_triples(a, "hom-lie-admissible", warn, |a, x, y, z| {
        cyclic_product_sum(a, x, y, z)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zero_structure;
    use crate::constructions::{a2, heisenberg, l2, l3, non_admissible, non_leibniz, zero_algebra};
    use crate::linalg::Matrix;

    #[test]
    fn associator_values() {
        let a = l3();
        let e1 = Element::basis(3, 0);
        let got = hom_associator(&a, &e1, &e1, &e1).unwrap();
        assert_eq!(got, -&Element::basis(3, 2));

        let b = a2();
        let e2 = Element::basis(2, 1);
        assert!(hom_associator(&b, &e2, &e2, &e2).unwrap().is_zero());
    }

    #[test]
    fn hom_associativity_verdicts() {
        assert!(check_hom_associative(&zero_algebra(3)).holds);
        assert!(check_hom_associative(&a2()).holds);
        let r = check_hom_associative(&l3());
        assert!(!r.holds);
        assert_eq!(r.basis_witness().unwrap(), &[1, 1, 1]);
        assert_eq!(r.residual.unwrap(), -&Element::basis(3, 2));
    }

    #[test]
    fn left_hom_leibniz_verdicts() {
        assert!(check_left_hom_leibniz(&a2()).holds);
        assert!(check_left_hom_leibniz(&l3()).holds);
        assert!(check_left_hom_leibniz(&non_admissible()).holds);

        // dim 2, e1*e2 = e1: fails first at (1,2,2).
        let mut s = zero_structure(2);
        s[0][1] = Element::basis(2, 0);
        let bad = HomAlgebra::new_unchecked(None, s, Matrix::identity(2)).unwrap();
        let r = check_left_hom_leibniz(&bad);
        assert!(!r.holds);
        assert_eq!(r.basis_witness().unwrap(), &[1, 2, 2]);
        assert_eq!(r.residual.unwrap(), -&Element::basis(2, 0));
    }

    #[test]
    fn right_hom_leibniz_verdicts() {
        assert!(check_right_hom_leibniz(&zero_algebra(2)).holds);
        assert!(check_right_hom_leibniz(&l2()).holds);
        let r = check_right_hom_leibniz(&l3());
        assert!(!r.holds);
        assert_eq!(r.basis_witness().unwrap(), &[1, 1, 1]);
    }

    #[test]
    fn skew_verdicts() {
        assert!(check_skew_symmetric(&heisenberg()).holds);
        assert!(check_skew_symmetric(&zero_algebra(1)).holds);
        let r = check_skew_symmetric(&l2());
        assert!(!r.holds);
        assert_eq!(r.basis_witness().unwrap(), &[2, 2]);
        assert_eq!(
            r.residual.unwrap(),
            Element::basis(2, 0).scale(&crate::scalar::Scalar::from_int(2))
        );
    }

    #[test]
    fn jacobian_and_jacobi_verdicts() {
        let h = heisenberg();
        let (e1, e2, e3) = (
            Element::basis(3, 0),
            Element::basis(3, 1),
            Element::basis(3, 2),
        );
        assert!(hom_jacobian(&h, &e1, &e2, &e3).unwrap().is_zero());
        assert!(check_hom_jacobi(&h).holds);
        assert!(check_hom_jacobi(&zero_algebra(2)).holds);
        assert!(check_hom_jacobi(&l3()).holds);
        let r = check_hom_jacobi(&non_admissible());
        assert!(!r.holds);
        assert_eq!(r.basis_witness().unwrap(), &[1, 2, 4]);
    }

    #[test]
    fn associator_form_matches_left_leibniz_everywhere() {
        for a in [
            l2(),
            l3(),
            a2(),
            heisenberg(),
            zero_algebra(3),
            non_leibniz(),
            non_admissible(),
        ] {
            assert_eq!(
                check_left_hom_leibniz(&a).holds,
                check_associator_form(&a).holds,
                "disagreement on {:?}",
                a
            );
        }
    }

    #[test]
    fn symmetrized_product_verdicts() {
        assert!(check_symmetrized_product_annihilates(&a2()).holds);
        assert!(check_symmetrized_product_annihilates(&l3()).holds);
        assert!(check_symmetrized_product_annihilates(&zero_algebra(2)).holds);
        let r = check_symmetrized_product_annihilates(&non_leibniz());
        assert!(!r.holds);
        assert!(r.identity.contains("warning"));
    }

    #[test]
    fn bracket_derivation_verdicts() {
        assert!(check_bracket_derivation(&a2()).holds);
        assert!(check_bracket_derivation(&l3()).holds);
        assert!(check_bracket_derivation(&zero_algebra(2)).holds);
    }

    #[test]
    fn jacobian_cyclic_form_verdicts() {
        assert!(check_jacobian_cyclic_form(&a2()).holds);
        assert!(check_jacobian_cyclic_form(&l3()).holds);
        assert!(check_jacobian_cyclic_form(&zero_algebra(2)).holds);
        // Holds even where both sides are nonzero.
        assert!(check_jacobian_cyclic_form(&non_admissible()).holds);
        assert!(!check_jacobian_cyclic_form(&non_leibniz()).holds);
    }

    #[test]
    fn admissibility_verdicts() {
        assert!(check_hom_lie_admissible(&a2()).holds);
        assert!(check_hom_lie_admissible(&l3()).holds);
        assert!(check_hom_lie_admissible(&zero_algebra(3)).holds);
        let r = check_hom_lie_admissible(&non_admissible());
        assert!(!r.holds);
        assert_eq!(r.basis_witness().unwrap(), &[1, 2, 4]);
        assert_eq!(r.residual.unwrap(), Element::basis(4, 2));
    }

    #[test]
    fn dimension_mismatch_in_entry_points() {
        let a = l2();
        let bad = Element::zero(3);
        let e = Element::basis(2, 0);
        assert!(hom_associator(&a, &bad, &e, &e).is_err());
        assert!(hom_jacobian(&a, &e, &e, &bad).is_err());
    }
}
