//! Coordinate vectors and square rational matrices.
//!
//! A `LinearMap` stores its entries row-major; column `j` is the image of
//! the `j`-th basis vector. These two types carry all twisting maps and
//! endomorphism candidates.

use std::fmt;
use std::ops::Index;

use crate::error::Error;
use crate::rational::Rational;

/// A coordinate vector over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Rational>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![Rational::zero(); dim],
        }
    }

    /// The `i`-th standard basis vector of the given dimension.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        let mut v = Vector::zero(dim);
        v.coords[i] = Rational::one();
        v
    }

    pub fn from_coords(coords: Vec<Rational>) -> Self {
        Vector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector {
            coords: coords.iter().map(|&c| Rational::from(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// `self += c * rhs`, skipping work when `c` or a coordinate is zero.
    pub fn add_scaled(&mut self, c: &Rational, rhs: &Vector) {
        debug_assert_eq!(self.dim(), rhs.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &Vector) {
        debug_assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn sub_assign(&mut self, rhs: &Vector) {
        debug_assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a += &(-b);
            }
        }
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

/// `Σ_r coeffs[r] · rows(r)` — the scalar contraction behind every nested
/// table evaluation in the identity suites.
pub(crate) fn contract<'a>(
    dim: usize,
    coeffs: &Vector,
    rows: impl Fn(usize) -> &'a Vector,
) -> Vector {
    let mut out = Vector::zero(dim);
    for r in 0..dim {
        let c = &coeffs[r];
        if !c.is_zero() {
            out.add_scaled(c, rows(r));
        }
    }
    out
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A square rational matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    dim: usize,
    // row-major: entries[r * dim + c]
    entries: Vec<Rational>,
}

impl LinearMap {
    pub fn identity(dim: usize) -> Self {
        let mut m = LinearMap::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn zeros(dim: usize) -> Self {
        LinearMap {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let dim = rows.len();
        for row in &rows {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    rows: dim,
                    cols: row.len(),
                });
            }
        }
        Ok(LinearMap {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        LinearMap { dim, entries }
    }

    /// Scalar multiple of the identity.
    pub fn scalar(dim: usize, c: &Rational) -> Self {
        LinearMap::from_fn(dim, |r, col| {
            if r == col {
                c.clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Permutation matrix sending `e_j` to `e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let dim = perm.len();
        let mut m = LinearMap::zeros(dim);
        for (j, &pj) in perm.iter().enumerate() {
            assert!(pj < dim, "permutation image out of range");
            m.entries[pj * dim + j] = Rational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.dim + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.dim + c] = v;
    }

    /// Image of the `j`-th basis vector.
    pub fn column(&self, j: usize) -> Vector {
        Vector::from_coords((0..self.dim).map(|r| self.entry(r, j).clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| {
                let e = self.entry(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Exact matrix-vector product.
    pub fn apply(&self, x: &Vector) -> Result<Vector, Error> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        let mut out = Vector::zero(self.dim);
        for c in 0..self.dim {
            let xc = &x[c];
            if xc.is_zero() {
                continue;
            }
            for r in 0..self.dim {
                let e = self.entry(r, c);
                if !e.is_zero() {
                    out.coords[r] += &(e * xc);
                }
            }
        }
        Ok(out)
    }

    /// `(self ∘ other)(x) = self(other(x))`, i.e. the product `self * other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let n = self.dim;
        let mut out = LinearMap::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.entry(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self` composed with itself `k` times; `k = 0` gives the identity.
    pub fn power(&self, k: u32) -> LinearMap {
        let mut out = LinearMap::identity(self.dim);
        for _ in 0..k {
            out = out.compose(self).expect("equal dimensions");
        }
        out
    }

    pub fn commutes_with(&self, other: &LinearMap) -> Result<bool, Error> {
        Ok(self.compose(other)? == other.compose(self)?)
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap[{}x{}]", self.dim, self.dim)?;
        for r in 0..self.dim {
            write!(f, "  [")?;
            for c in 0..self.dim {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
