//! Check verdicts with counterexample witnesses.

use std::fmt;

use crate::linalg::Element;

/// Where an identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// 1-based basis indices (a pair or a triple, depending on the identity).
    Basis(Vec<usize>),
    /// A rational point at which a symbolically-checked identity is nonzero.
    Point(Element),
}

/// Outcome of one identity check.
///
/// `holds` is true exactly when `witness` is absent. On failure, `residual`
/// is the value of the checked expression at the witness, so re-evaluating
/// the identity there reproduces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub identity: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub residual: Option<Element>,
}

impl CheckReport {
    pub fn success(identity: impl Into<String>) -> Self {
        CheckReport {
            identity: identity.into(),
            holds: true,
            witness: None,
            residual: None,
        }
    }

    pub fn failure(identity: impl Into<String>, witness: Witness, residual: Element) -> Self {
        CheckReport {
            identity: identity.into(),
            holds: false,
            witness: Some(witness),
            residual: Some(residual),
        }
    }

    /// Witness basis indices, if the check failed on a basis tuple.
    pub fn basis_witness(&self) -> Option<&[usize]> {
        match &self.witness {
            Some(Witness::Basis(ix)) => Some(ix),
            _ => None,
        }
    }

    /// Witness point, if the check failed symbolically.
    pub fn point_witness(&self) -> Option<&Element> {
        match &self.witness {
            Some(Witness::Point(p)) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            return write!(f, "{}: holds", self.identity);
        }
        write!(f, "{}: FAILS", self.identity)?;
        match &self.witness {
            Some(Witness::Basis(ix)) => {
                let ix = ix
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                write!(f, " at basis ({ix})")?;
            }
            Some(Witness::Point(p)) => write!(f, " at x = {p}")?,
            None => {}
        }
        if let Some(r) = &self.residual {
            write!(f, "; residual = {r}")?;
        }
        Ok(())
    }
}
