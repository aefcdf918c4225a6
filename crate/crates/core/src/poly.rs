//! Sparse multivariate polynomials over the rationals, and generic elements.
//!
//! A "for all x" statement about an algebra of dimension `n` is decided by
//! expanding it on the generic element `(x1, ..., xn)` whose coordinates are
//! indeterminates. Over a field of characteristic zero a polynomial vanishes
//! identically on the whole space iff it is the zero polynomial, so the
//! expansion gives an exact universal verdict. When a polynomial is nonzero,
//! a small-integer point where it does not vanish is produced as a witness.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Element, Matrix};
use crate::scalar::Scalar;

/// A polynomial in `nvars` variables: exponent vector -> nonzero coefficient.
/// The zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The indeterminate `x_{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(exps, Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn insert(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Highest exponent of variable `v` in any term.
    pub fn degree_of_var(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// All terms have total degree `k` (vacuously true for zero).
    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == k)
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Scalar::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term *= &point[v].pow(e);
                }
            }
            acc += &term;
        }
        acc
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), -c);
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(exps, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, e)
                    }
                })
                .collect();
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
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A vector of polynomials: the coordinates of a symbolic algebra element.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyElement {
    coords: Vec<Poly>,
}

impl PolyElement {
    /// Build from coordinate polynomials; they must share a variable count.
    pub fn new(coords: Vec<Poly>) -> Self {
        debug_assert!(coords.windows(2).all(|w| w[0].nvars() == w[1].nvars()));
        PolyElement { coords }
    }

    pub fn zero(dim: usize, nvars: usize) -> Self {
        PolyElement {
            coords: vec![Poly::zero(nvars); dim],
        }
    }

    /// The generic element `(x1, ..., xn)` of an `n`-dimensional algebra.
    pub fn generic(n: usize) -> Self {
        PolyElement {
            coords: (0..n).map(|i| Poly::var(n, i)).collect(),
        }
    }

    /// A concrete element viewed as a constant symbolic one.
    pub fn lift(e: &Element, nvars: usize) -> Self {
        PolyElement {
            coords: e
                .coords()
                .iter()
                .map(|c| Poly::constant(nvars, c.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn nvars(&self) -> usize {
        self.coords.first().map(Poly::nvars).unwrap_or(0)
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    pub fn eval(&self, point: &Element) -> Element {
        Element::new(self.coords.iter().map(|p| p.eval(point.coords())).collect())
    }

    /// Every coordinate is homogeneous of total degree `k`.
    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.coords.iter().all(|p| p.is_homogeneous(k))
    }

    /// A rational point where some coordinate is nonzero, together with the
    /// value there; `None` iff this is the zero element.
    ///
    /// The search walks the grid whose `v`-th axis takes the first
    /// `deg_v + 1` values of `0, 1, -1, 2, -2, ...` (with `deg_v` the highest
    /// exponent of `x_{v+1}` in any coordinate), in lexicographic order of
    /// the index tuples. A nonzero polynomial cannot vanish on the whole
    /// grid, so the walk always finds a point; the fixed order makes the
    /// witness deterministic.
    pub fn nonzero_witness(&self) -> Option<(Element, Element)> {
        if self.is_zero() {
            return None;
        }
        let n = self.nvars();
        let axes: Vec<Vec<Scalar>> = (0..n)
            .map(|v| {
                let deg = self
                    .coords
                    .iter()
                    .map(|p| p.degree_of_var(v))
                    .max()
                    .unwrap_or(0);
                candidate_values(deg as usize + 1)
            })
            .collect();
        let mut idx = vec![0usize; n];
        loop {
            let point = Element::new((0..n).map(|v| axes[v][idx[v]].clone()).collect());
            let value = self.eval(&point);
            if !value.is_zero() {
                return Some((point, value));
            }
            // odometer: last variable fastest
            let mut v = n;
            loop {
                if v == 0 {
                    unreachable!("nonzero polynomial vanished on a full degree grid");
                }
                v -= 1;
                idx[v] += 1;
                if idx[v] < axes[v].len() {
                    break;
                }
                idx[v] = 0;
                if v == 0 {
                    unreachable!("nonzero polynomial vanished on a full degree grid");
                }
            }
        }
    }
}

impl Add<&PolyElement> for &PolyElement {
    type Output = PolyElement;
    fn add(self, rhs: &PolyElement) -> PolyElement {
        debug_assert_eq!(self.dim(), rhs.dim());
        PolyElement {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&PolyElement> for &PolyElement {
    type Output = PolyElement;
    fn sub(self, rhs: &PolyElement) -> PolyElement {
        debug_assert_eq!(self.dim(), rhs.dim());
        PolyElement {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &PolyElement {
    type Output = PolyElement;
    fn neg(self) -> PolyElement {
        PolyElement {
            coords: self.coords.iter().map(|p| -p).collect(),
        }
    }
}

impl fmt::Debug for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.coords
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// `0, 1, -1, 2, -2, ...` truncated to `len` values.
fn candidate_values(len: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(len);
    out.push(Scalar::zero());
    let mut k = 1i64;
    while out.len() < len {
        out.push(Scalar::from_int(k));
        if out.len() < len {
            out.push(Scalar::from_int(-k));
        }
        k += 1;
    }
    out
}

impl HomAlgebra {
    /// The generic element of this algebra.
    pub fn generic_element(&self) -> PolyElement {
        PolyElement::generic(self.dim())
    }

    /// Bilinear product with polynomial coefficients.
    pub fn poly_product(&self, u: &PolyElement, v: &PolyElement) -> Result<PolyElement> {
        for w in [u, v] {
            if w.dim() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    actual: w.dim(),
                });
            }
        }
        Ok(self.poly_mul(u, v))
    }

    pub(crate) fn poly_mul(&self, u: &PolyElement, v: &PolyElement) -> PolyElement {
        let n = self.dim();
        let nvars = u.nvars().max(v.nvars());
        let mut coords = vec![Poly::zero(nvars); n];
        for i in 0..n {
            if u.coords()[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v.coords()[j].is_zero() {
                    continue;
                }
                let coeff = &u.coords()[i] * &v.coords()[j];
                let target = self.basis_product(i, j);
                for k in 0..n {
                    if !target[k].is_zero() {
                        coords[k] = &coords[k] + &coeff.scale(&target[k]);
                    }
                }
            }
        }
        PolyElement { coords }
    }

    /// Apply the `m`-fold twist to a symbolic element.
    pub fn poly_twist(&self, u: &PolyElement, m: usize) -> Result<PolyElement> {
        if u.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: u.dim(),
            });
        }
        Ok(self.poly_tw(u, m))
    }

    pub(crate) fn poly_tw(&self, u: &PolyElement, m: usize) -> PolyElement {
        if m == 0 {
            return u.clone();
        }
        let mat = self.twist_power(m);
        self.poly_apply_matrix(&mat, u)
    }

    pub(crate) fn poly_apply_matrix(&self, mat: &Matrix, u: &PolyElement) -> PolyElement {
        let n = self.dim();
        let nvars = u.nvars();
        let coords = (0..n)
            .map(|i| {
                let mut acc = Poly::zero(nvars);
                for j in 0..n {
                    let c = mat.entry(i, j);
                    if !c.is_zero() {
                        acc = &acc + &u.coords()[j].scale(c);
                    }
                }
                acc
            })
            .collect();
        PolyElement { coords }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{a2, l2, l3};

    #[test]
    fn generic_element_coordinates() {
        for n in 1..=3 {
            let g = PolyElement::generic(n);
            assert_eq!(g.dim(), n);
            for (i, p) in g.coords().iter().enumerate() {
                assert_eq!(*p, Poly::var(n, i));
            }
        }
    }

    #[test]
    fn generic_square_in_l2() {
        // Only e2*e2 = e1 contributes: x*x = (x2^2, 0).
        let a = l2();
        let g = a.generic_element();
        let sq = a.poly_product(&g, &g).unwrap();
        let x2 = Poly::var(2, 1);
        assert_eq!(sq.coords()[0], &x2 * &x2);
        assert!(sq.coords()[1].is_zero());
    }

    #[test]
    fn generic_square_in_l3() {
        let a = l3();
        let g = a.generic_element();
        let sq = a.poly_product(&g, &g).unwrap();
        let x1 = Poly::var(3, 0);
        let x2 = Poly::var(3, 1);
        assert!(sq.coords()[0].is_zero());
        assert_eq!(sq.coords()[1], &x1 * &x1);
        assert_eq!(sq.coords()[2], &x1 * &x2);
    }

    #[test]
    fn product_with_zero_poly_element_is_zero() {
        let a = l2();
        let g = a.generic_element();
        let z = PolyElement::zero(2, 2);
        assert!(a.poly_product(&g, &z).unwrap().is_zero());
    }

    #[test]
    fn poly_twist_cases() {
        let a = a2();
        let g = a.generic_element();
        assert_eq!(a.poly_twist(&g, 0).unwrap(), g);
        let tg = a.poly_twist(&g, 1).unwrap();
        assert_eq!(tg.coords()[0], Poly::var(2, 0).scale(&Scalar::from_int(4)));
        assert_eq!(tg.coords()[1], Poly::var(2, 1).scale(&Scalar::from_int(2)));
        assert!(a.poly_twist(&PolyElement::zero(2, 2), 3).unwrap().is_zero());
    }

    #[test]
    fn zero_test_and_witness() {
        assert!(PolyElement::zero(2, 2).nonzero_witness().is_none());

        // (x2^2, 0) is nonzero; the grid search lands on x = e2 first.
        let a = l2();
        let g = a.generic_element();
        let sq = a.poly_product(&g, &g).unwrap();
        let (point, value) = sq.nonzero_witness().unwrap();
        assert_eq!(point, Element::basis(2, 1));
        assert_eq!(value, Element::basis(2, 0));
    }

    #[test]
    fn coefficient_ring_is_commutative() {
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        assert_eq!(&(&x1 * &x2) - &(&x2 * &x1), Poly::zero(2));
    }

    #[test]
    fn witness_evaluation_reproduces_value() {
        let a = l3();
        let g = a.generic_element();
        let sq = a.poly_product(&g, &g).unwrap();
        let (point, value) = sq.nonzero_witness().unwrap();
        assert_eq!(sq.eval(&point), value);
        assert!(!value.is_zero());
    }

    #[test]
    fn display_is_readable() {
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        let p = &(&x1 * &x1) - &x2.scale(&Scalar::ratio(3, 2).unwrap());
        assert_eq!(p.to_string(), "x1^2 - 3/2*x2");
        assert_eq!(Poly::zero(2).to_string(), "0");
    }
}
