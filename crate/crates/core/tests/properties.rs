//! Randomized law checking: linearity of the algebra operations, polynomial
//! ring laws, and agreement between the symbolic and concrete product.

use proptest::prelude::*;

use homalg::constructions::{a2, heisenberg, l2, l3, non_admissible};
use homalg::{Element, HomAlgebra, Poly, PolyElement, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Scalar::ratio(n, d).unwrap())
}

fn element(dim: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(scalar(), dim).prop_map(Element::new)
}

fn algebra() -> impl Strategy<Value = HomAlgebra> {
    (0usize..5).prop_map(|ix| match ix {
        0 => l2(),
        1 => l3(),
        2 => a2(),
        3 => heisenberg(),
        _ => non_admissible(),
    })
}

fn algebra_and_elements(k: usize) -> impl Strategy<Value = (HomAlgebra, Vec<Element>)> {
    algebra().prop_flat_map(move |a| {
        let dim = a.dim();
        (Just(a), prop::collection::vec(element(dim), k))
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), scalar()), 0..4).prop_map(|terms| {
        let mut p = Poly::zero(3);
        for (exps, c) in terms {
            p = &p + &Poly::constant(3, c).mul_monomial(&exps);
        }
        p
    })
}

// Poly has no public monomial constructor; build x1^a*x2^b*x3^c from vars.
trait MulMonomial {
    fn mul_monomial(&self, exps: &[u32]) -> Poly;
}

impl MulMonomial for Poly {
    fn mul_monomial(&self, exps: &[u32]) -> Poly {
        let mut acc = self.clone();
        for (v, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                acc = &acc * &Poly::var(3, v);
            }
        }
        acc
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_bilinear((a, es) in algebra_and_elements(3), c in scalar(), d in scalar()) {
        let (u, v, w) = (&es[0], &es[1], &es[2]);
        let lin = &u.scale(&c) + &v.scale(&d);
        let lhs = a.product(&lin, w).unwrap();
        let rhs = &a.product(u, w).unwrap().scale(&c) + &a.product(v, w).unwrap().scale(&d);
        prop_assert_eq!(&lhs, &rhs);
        let lhs2 = a.product(w, &lin).unwrap();
        let rhs2 = &a.product(w, u).unwrap().scale(&c) + &a.product(w, v).unwrap().scale(&d);
        prop_assert_eq!(&lhs2, &rhs2);
    }

    #[test]
    fn twist_is_linear((a, es) in algebra_and_elements(2), c in scalar(), d in scalar()) {
        let lin = &es[0].scale(&c) + &es[1].scale(&d);
        let lhs = a.apply_twist(&lin).unwrap();
        let rhs = &a.apply_twist(&es[0]).unwrap().scale(&c)
            + &a.apply_twist(&es[1]).unwrap().scale(&d);
        prop_assert_eq!(&lhs, &rhs);
    }

    #[test]
    fn multiplication_matrices_agree_with_the_product((a, es) in algebra_and_elements(2)) {
        let (z, u) = (&es[0], &es[1]);
        prop_assert_eq!(
            a.left_mul(z).unwrap().apply(u),
            a.product(z, u).unwrap()
        );
        prop_assert_eq!(
            a.right_mul(z).unwrap().apply(u),
            a.product(u, z).unwrap()
        );
    }

    #[test]
    fn commutator_bracket_is_skew((a, es) in algebra_and_elements(2)) {
        let (x, y) = (&es[0], &es[1]);
        prop_assert!(homalg::commutator_bracket(&a, x, x).unwrap().is_zero());
        let xy = homalg::commutator_bracket(&a, x, y).unwrap();
        let yx = homalg::commutator_bracket(&a, y, x).unwrap();
        prop_assert!((&xy + &yx).is_zero());
    }

    #[test]
    fn symbolic_product_matches_concrete_product((a, es) in algebra_and_elements(1)) {
        let point = &es[0];
        let g = a.generic_element();
        let gg = a.poly_product(&g, &g).unwrap();
        prop_assert_eq!(
            gg.eval(point),
            a.product(point, point).unwrap()
        );
        // degree-3 expression through the symbolic route
        let ggg = a.poly_product(&gg, &g).unwrap();
        let sq = a.product(point, point).unwrap();
        prop_assert_eq!(ggg.eval(point), a.product(&sq, point).unwrap());
    }

    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p - &p, Poly::zero(3));
    }

    #[test]
    fn witness_points_evaluate_to_their_residual(p in poly(), q in poly()) {
        let x1 = Poly::var(3, 0);
        let candidate = PolyElement::new(vec![&p - &q, &(&p - &q) * &x1, Poly::zero(3)]);
        match candidate.nonzero_witness() {
            None => prop_assert!(candidate.is_zero()),
            Some((point, value)) => {
                prop_assert!(!value.is_zero());
                prop_assert_eq!(candidate.eval(&point), value);
            }
        }
    }
}
