//! Finite-dimensional Hom-algebras given by structure constants and a twist.
//!
//! An algebra of dimension `n` is stored as the dense tensor of basis
//! products `e_i * e_j` together with an `n x n` twist matrix for the linear
//! map `alpha`. The checked constructor enforces multiplicativity
//! `alpha(x*y) = alpha(x)*alpha(y)`; the unchecked one exists so that
//! deliberately broken inputs can still be represented and reported on.

use crate::error::{Error, Result};
use crate::linalg::{Element, Matrix};
use crate::report::{CheckReport, Witness};

/// A dense `n x n` table of basis products, all entries zero.
pub fn zero_structure(dim: usize) -> Vec<Vec<Element>> {
    vec![vec![Element::zero(dim); dim]; dim]
}

/// A Hom-algebra: bilinear product plus multiplicative linear twist.
#[derive(Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    name: Option<String>,
    dim: usize,
    /// `structure[i][j]` is the product `e_{i+1} * e_{j+1}`.
    structure: Vec<Vec<Element>>,
    twist: Matrix,
}

impl HomAlgebra {
    /// Checked constructor: validates shapes and rejects non-multiplicative
    /// twists, naming the first failing basis pair.
    pub fn new(name: Option<String>, structure: Vec<Vec<Element>>, twist: Matrix) -> Result<Self> {
        let a = Self::new_unchecked(name, structure, twist)?;
        let report = a.check_multiplicative();
        if let Some(ix) = report.basis_witness() {
            return Err(Error::NotMultiplicative { i: ix[0], j: ix[1] });
        }
        Ok(a)
    }

    /// Shape-validated constructor that skips the multiplicativity check.
    pub fn new_unchecked(
        name: Option<String>,
        structure: Vec<Vec<Element>>,
        twist: Matrix,
    ) -> Result<Self> {
        let dim = structure.len();
        if dim == 0
            || structure
                .iter()
                .any(|row| row.len() != dim || row.iter().any(|e| e.dim() != dim))
        {
            return Err(Error::MalformedStructure { dim });
        }
        if twist.dim() != dim {
            return Err(Error::MalformedTwist { dim });
        }
        Ok(HomAlgebra {
            name,
            dim,
            structure,
            twist,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn is_twist_identity(&self) -> bool {
        self.twist.is_identity()
    }

    /// The product `e_{i+1} * e_{j+1}` (0-based indices).
    pub fn basis_product(&self, i: usize, j: usize) -> &Element {
        &self.structure[i][j]
    }

    /// `alpha(e_{j+1})`: column `j` of the twist matrix.
    pub fn twisted_basis(&self, j: usize) -> Element {
        self.twist.column(j)
    }

    fn check_dim(&self, v: &Element) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: v.dim(),
            });
        }
        Ok(())
    }

    /// Bilinear product of two elements.
    pub fn product(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &Element, v: &Element) -> Element {
        let mut out = Element::zero(self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() || self.structure[i][j].is_zero() {
                    continue;
                }
                out.add_scaled(&self.structure[i][j], &(&u[i] * &v[j]));
            }
        }
        out
    }

    /// Commutator `u*v - v*u` of the algebra product.
    pub(crate) fn comm(&self, u: &Element, v: &Element) -> Element {
        &self.mul(u, v) - &self.mul(v, u)
    }

    /// The twist applied to an element.
    pub fn apply_twist(&self, u: &Element) -> Result<Element> {
        self.check_dim(u)?;
        Ok(self.tw(u))
    }

    pub(crate) fn tw(&self, u: &Element) -> Element {
        self.twist.apply(u)
    }

    /// The `m`-fold composition of the twist as a matrix; `m = 0` is the
    /// identity.
    pub fn twist_power(&self, m: usize) -> Matrix {
        self.twist.pow(m)
    }

    /// Matrix of left multiplication by `z`: columns are `z * e_j`.
    pub fn left_mul(&self, z: &Element) -> Result<Matrix> {
        self.check_dim(z)?;
        self.mul_table(|e| self.mul(z, &e))
    }

    /// Matrix of right multiplication by `y`: columns are `e_j * y`.
    pub fn right_mul(&self, y: &Element) -> Result<Matrix> {
        self.check_dim(y)?;
        self.mul_table(|e| self.mul(&e, y))
    }

    fn mul_table(&self, f: impl Fn(Element) -> Element) -> Result<Matrix> {
        let n = self.dim;
        let mut m = Matrix::zero(n);
        for j in 0..n {
            let col = f(Element::basis(n, j));
            for i in 0..n {
                m.set_entry(i, j, col[i].clone());
            }
        }
        Ok(m)
    }

    /// Verdict of `alpha(e_i * e_j) = alpha(e_i) * alpha(e_j)` over all basis
    /// pairs; by bilinearity of both sides this decides multiplicativity on
    /// the whole algebra.
    pub fn check_multiplicative(&self) -> CheckReport {
        let name = "multiplicative";
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.tw(self.basis_product(i, j));
                let rhs = self.mul(&self.twisted_basis(i), &self.twisted_basis(j));
                let residual = &lhs - &rhs;
                if !residual.is_zero() {
                    return CheckReport::failure(
                        name,
                        Witness::Basis(vec![i + 1, j + 1]),
                        residual,
                    );
                }
            }
        }
        CheckReport::success(name)
    }
}

impl std::fmt::Debug for HomAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HomAlgebra(dim {}", self.dim)?;
        if let Some(n) = &self.name {
            write!(f, ", {n}")?;
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.basis_product(i, j);
                if !p.is_zero() {
                    write!(f, "; e{}*e{} = {}", i + 1, j + 1, p)?;
                }
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{a2, l2, l3};
    use crate::scalar::Scalar;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn product_reads_off_the_structure_tensor() {
        let a = l2();
        let e2 = Element::basis(2, 1);
        assert_eq!(a.product(&e2, &e2).unwrap(), Element::basis(2, 0));
    }

    #[test]
    fn product_with_zero_is_zero() {
        let a = l3();
        let z = Element::zero(3);
        let e1 = Element::basis(3, 0);
        assert!(a.product(&z, &e1).unwrap().is_zero());
        assert!(a.product(&e1, &z).unwrap().is_zero());
    }

    #[test]
    fn product_expands_bilinearly() {
        // e1 * (e1 + e2) = e2 + e3 in the chain algebra.
        let a = l3();
        let e1 = Element::basis(3, 0);
        let u = &e1 + &Element::basis(3, 1);
        let got = a.product(&e1, &u).unwrap();
        assert_eq!(got, &Element::basis(3, 1) + &Element::basis(3, 2));
    }

    #[test]
    fn twist_application_and_powers() {
        let a = a2();
        let e2 = Element::basis(2, 1);
        assert_eq!(a.apply_twist(&e2).unwrap(), e2.scale(&s(2)));
        assert!(a.apply_twist(&Element::zero(2)).unwrap().is_zero());
        assert_eq!(a.twist_power(0), Matrix::identity(2));
        assert_eq!(a.twist_power(1), *a.twist());
        assert_eq!(a.twist_power(2), Matrix::diagonal(&[s(16), s(4)]));
    }

    #[test]
    fn identity_twist_fixes_everything() {
        let a = l3();
        let u = Element::new(vec![s(1), s(-2), Scalar::ratio(5, 3).unwrap()]);
        assert_eq!(a.apply_twist(&u).unwrap(), u);
    }

    #[test]
    fn multiplicativity_verdicts() {
        assert!(a2().check_multiplicative().holds);
        assert!(l2().check_multiplicative().holds);

        // Same product as l2 but a twist that fails on (2,2):
        // alpha(e2*e2) = e1 while alpha(e2)*alpha(e2) = 4e1.
        let mut structure = zero_structure(2);
        structure[1][1] = Element::basis(2, 0);
        let bad =
            HomAlgebra::new_unchecked(None, structure.clone(), Matrix::diagonal(&[s(1), s(2)]))
                .unwrap();
        let report = bad.check_multiplicative();
        assert!(!report.holds);
        assert_eq!(report.basis_witness().unwrap(), &[2, 2]);
        assert_eq!(report.residual.unwrap(), Element::basis(2, 0).scale(&s(-3)));

        // The checked constructor rejects the same input.
        let err = HomAlgebra::new(None, structure, Matrix::diagonal(&[s(1), s(2)])).unwrap_err();
        assert!(matches!(err, Error::NotMultiplicative { i: 2, j: 2 }));
    }

    #[test]
    fn left_and_right_multiplication_matrices() {
        let a = l2();
        assert_eq!(a.left_mul(&Element::zero(2)).unwrap(), Matrix::zero(2));
        // Left multiplication by e2 sends e2 to e1 and e1 to 0.
        let m = a.left_mul(&Element::basis(2, 1)).unwrap();
        assert_eq!(m.column(1), Element::basis(2, 0));
        assert!(m.column(0).is_zero());

        let b = l3();
        let lm = b.left_mul(&Element::basis(3, 0)).unwrap();
        assert_eq!(lm.column(0), Element::basis(3, 1));
        assert_eq!(lm.column(1), Element::basis(3, 2));
        assert!(lm.column(2).is_zero());

        let rm = b.right_mul(&Element::basis(3, 1)).unwrap();
        assert_eq!(rm.column(0), Element::basis(3, 2));
        assert!(rm.column(1).is_zero());
        assert!(rm.column(2).is_zero());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = l2();
        let v3 = Element::zero(3);
        let err = a.product(&Element::zero(2), &v3).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                actual: 3
            }
        ));
        assert!(a.apply_twist(&v3).is_err());
        assert!(a.left_mul(&v3).is_err());
        assert!(a.right_mul(&v3).is_err());
    }
}
