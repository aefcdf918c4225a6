//! Hom-Akivis structures: a skew bracket, a ternary operation and a twist.
//!
//! Every Hom-algebra induces one by taking the commutator bracket and the
//! Hom-associator as ternary operation; the induced structure satisfies the
//! Hom-Akivis identity relating the Jacobian of the bracket to cyclic sums
//! of the ternary operation. The tensors are materialized rather than kept
//! as closures over the source algebra so that synthetic or deliberately
//! corrupted structures can be checked on their own.

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::identities::associator;
use crate::linalg::{Element, Matrix};
use crate::report::{CheckReport, Witness};

/// A quadruple `(bracket, ternary, twist)` on an `n`-dimensional space.
#[derive(Clone, PartialEq, Eq)]
pub struct HomAkivisAlgebra {
    name: Option<String>,
    dim: usize,
    /// `bracket[i][j] = [e_{i+1}, e_{j+1}]`, skew-symmetric.
    bracket: Vec<Vec<Element>>,
    /// `ternary[i][j][k] = [e_{i+1}, e_{j+1}, e_{k+1}]`.
    ternary: Vec<Vec<Vec<Element>>>,
    twist: Matrix,
}

impl HomAkivisAlgebra {
    /// Validates shapes and skew-symmetry of the bracket tensor.
    #[allow(clippy::needless_range_loop)]
    pub fn new(
        name: Option<String>,
        bracket: Vec<Vec<Element>>,
        ternary: Vec<Vec<Vec<Element>>>,
        twist: Matrix,
    ) -> Result<Self> {
        let dim = bracket.len();
        if dim == 0
            || bracket
                .iter()
                .any(|row| row.len() != dim || row.iter().any(|e| e.dim() != dim))
        {
            return Err(Error::MalformedStructure { dim });
        }
        if ternary.len() != dim
            || ternary.iter().any(|pl| {
                pl.len() != dim
                    || pl
                        .iter()
                        .any(|row| row.len() != dim || row.iter().any(|e| e.dim() != dim))
            })
        {
            return Err(Error::MalformedStructure { dim });
        }
        if twist.dim() != dim {
            return Err(Error::MalformedTwist { dim });
        }
        for i in 0..dim {
            for j in i..dim {
                if !(&bracket[i][j] + &bracket[j][i]).is_zero() {
                    return Err(Error::NotSkew { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(HomAkivisAlgebra {
            name,
            dim,
            bracket,
            ternary,
            twist,
        })
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

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Element {
        &self.bracket[i][j]
    }

    pub fn ternary_entry(&self, i: usize, j: usize, k: usize) -> &Element {
        &self.ternary[i][j][k]
    }

    /// Bilinear extension of the bracket tensor.
    pub fn bracket_product(&self, u: &Element, v: &Element) -> Result<Element> {
        for w in [u, v] {
            if w.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    actual: w.dim(),
                });
            }
        }
        Ok(self.br(u, v))
    }

    fn br(&self, u: &Element, v: &Element) -> Element {
        let mut out = Element::zero(self.dim);
        for i in 0..self.dim {
            if u.coords()[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v.coords()[j].is_zero() {
                    continue;
                }
                out.add_scaled(&self.bracket[i][j], &(&u.coords()[i] * &v.coords()[j]));
            }
        }
        out
    }

    /// Replace one ternary slot (0-based indices); used to build corrupted
    /// structures for negative tests.
    pub fn with_ternary_entry(mut self, i: usize, j: usize, k: usize, value: Element) -> Self {
        self.ternary[i][j][k] = value;
        self
    }

    /// The bracket as a Hom-algebra product with the same twist.
    pub fn bracket_algebra(&self) -> Result<HomAlgebra> {
        HomAlgebra::new_unchecked(self.name.clone(), self.bracket.clone(), self.twist.clone())
    }
}

impl std::fmt::Debug for HomAkivisAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HomAkivisAlgebra(dim {})", self.dim)
    }
}

/// `[x,y] = x*y - y*x` in a Hom-algebra.
pub fn commutator_bracket(a: &HomAlgebra, x: &Element, y: &Element) -> Result<Element> {
    for w in [x, y] {
        if w.dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                actual: w.dim(),
            });
        }
    }
    Ok(a.comm(x, y))
}

/// The Hom-Akivis structure induced by a Hom-algebra: commutator bracket,
/// Hom-associator ternary operation, same twist.
pub fn to_hom_akivis(a: &HomAlgebra) -> HomAkivisAlgebra {
    let n = a.dim();
    let bracket: Vec<Vec<Element>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a.basis_product(i, j) - a.basis_product(j, i))
                .collect()
        })
        .collect();
    let basis: Vec<Element> = (0..n).map(|i| Element::basis(n, i)).collect();
    let ternary: Vec<Vec<Vec<Element>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| associator(a, &basis[i], &basis[j], &basis[k]))
                        .collect()
                })
                .collect()
        })
        .collect();
    HomAkivisAlgebra::new(
        a.name().map(|s| s.to_string()),
        bracket,
        ternary,
        a.twist().clone(),
    )
    .expect("commutator bracket is skew by construction")
}

/// The commutator bracket of `a` as a Hom-algebra with the same twist.
///
/// Multiplicativity carries over from `a`, so the result is suitable for
/// running Hom-Jacobi checks against admissibility verdicts.
pub fn derived_bracket_algebra(a: &HomAlgebra) -> HomAlgebra {
    let n = a.dim();
    let structure: Vec<Vec<Element>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a.basis_product(i, j) - a.basis_product(j, i))
                .collect()
        })
        .collect();
    HomAlgebra::new_unchecked(
        a.name().map(|s| format!("{s}-bracket")),
        structure,
        a.twist().clone(),
    )
    .expect("bracket tensor has the same shape as the source")
}

/// The Hom-Akivis identity: the Jacobian of the bracket equals
/// `sum_cyc [x,y,z] - sum_cyc [y,x,z]`, checked on all basis triples.
pub fn check_hom_akivis_identity(k: &HomAkivisAlgebra) -> CheckReport {
    let name = "hom-akivis";
    let n = k.dim();
    let twisted: Vec<Element> = (0..n).map(|i| k.twist().column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let jac = &(&k.br(k.basis_bracket(i, j), &twisted[m])
                    + &k.br(k.basis_bracket(j, m), &twisted[i]))
                    + &k.br(k.basis_bracket(m, i), &twisted[j]);
                let cyc_xyz = &(k.ternary_entry(i, j, m) + k.ternary_entry(j, m, i))
                    + k.ternary_entry(m, i, j);
                let cyc_yxz = &(k.ternary_entry(j, i, m) + k.ternary_entry(i, m, j))
                    + k.ternary_entry(m, j, i);
                let residual = &(&jac - &cyc_xyz) + &cyc_yxz;
                if !residual.is_zero() {
                    return CheckReport::failure(
                        name,
                        Witness::Basis(vec![i + 1, j + 1, m + 1]),
                        residual,
                    );
                }
            }
        }
    }
    CheckReport::success(name)
}
