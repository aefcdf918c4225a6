//! Coordinate vectors and square matrices over [`Scalar`].

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A vector of coordinates over the basis `e1..en` of an ambient algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Element {
            coords: vec![Scalar::zero(); dim],
        }
    }

    /// The basis vector `e_{i+1}` (0-based index `i`).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Element::zero(dim);
        e.coords[i] = Scalar::one();
        e
    }

    /// Parse a comma-separated list of rational coordinates, e.g. `"0,1,-2/3"`.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|c| c.parse())
            .collect::<Result<Vec<Scalar>>>()?;
        Ok(Element { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }
}

impl Index<usize> for Element {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        debug_assert_eq!(self.dim(), rhs.dim());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        debug_assert_eq!(self.dim(), rhs.dim());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Element {
    /// Linear-combination form: `4e1`, `e1 - 3/2e3`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "e{}", i + 1)?;
            } else {
                write!(f, "{}e{}", mag, i + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.coords
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// A square matrix acting on [`Element`] values by left multiplication.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    /// Build from rows; every row must have the same length as the row count.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedTwist { dim: n });
        }
        Ok(Matrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Matrix { rows }
    }

    pub fn zero(n: usize) -> Self {
        Matrix {
            rows: vec![vec![Scalar::zero(); n]; n],
        }
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zero(n);
        for (i, e) in entries.iter().enumerate() {
            m.rows[i][i] = e.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: Scalar) {
        self.rows[i][j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self == &Matrix::identity(self.dim())
    }

    /// Column `j` as an element: the image of the basis vector `e_{j+1}`.
    pub fn column(&self, j: usize) -> Element {
        Element::new(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn apply(&self, v: &Element) -> Element {
        debug_assert_eq!(self.dim(), v.dim());
        Element::new(
            self.rows
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(v.coords())
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        )
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        debug_assert_eq!(self.dim(), rhs.dim());
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.rows[i][k] * &rhs.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        Matrix { rows }
    }

    /// `m`-fold matrix power; the zeroth power is the identity.
    pub fn pow(&self, m: usize) -> Matrix {
        let mut acc = Matrix::identity(self.dim());
        for _ in 0..m {
            acc = acc.matmul(self);
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.rows {
            writeln!(
                f,
                "  [{}]",
                row.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        write!(f, "]")
    }
}
