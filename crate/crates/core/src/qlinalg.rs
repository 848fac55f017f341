//! Dense complex vectors and operators for one or two two-level systems.
//!
//! Only dimensions 2 and 4 occur. A two-particle ket is stored with index
//! `2*i + j`, where `i` indexes particle (2) and `j` indexes particle (1), so
//! `tensor(a, b)` reads as `|a⁽²⁾⟩|b⁽¹⁾⟩`. Index 0 of a one-particle ket is
//! the `+` outcome along its quantization axis.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::{Error, Result};

/// Tolerance for projector and density-matrix checks.
pub const OPERATOR_TOL: f64 = 1e-12;

fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 4 {
        Ok(())
    } else {
        Err(Error::InvalidDimension {
            expected: 4,
            found: dim,
        })
    }
}

fn same_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::InvalidDimension { expected, found })
    }
}

/// A ket of dimension 2 or 4.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        check_dim(amps.len())?;
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite("state amplitudes"));
        }
        Ok(Self { amps })
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::new(amps.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The `index`-th computational basis vector.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        check_dim(dim)?;
        if index >= dim {
            return Err(Error::InvalidParameter(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        same_dim(self.dim(), other.dim())?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= OPERATOR_TOL
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm_sqr().sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::DegenerateState);
        }
        Ok(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            amps: self.amps.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn add(&self, other: &StateVector) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self {
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &StateVector) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self {
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

/// A square operator of dimension 2 or 4, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexOperator {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexOperator {
    /// Builds an operator from `rows`, which must be square.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        check_dim(dim)?;
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            same_dim(dim, row.len())?;
            entries.extend(row);
        }
        if entries
            .iter()
            .any(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::NonFinite("operator entries"));
        }
        Ok(Self { dim, entries })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut op = Self::zeros(dim)?;
        for i in 0..dim {
            op.entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Ok(op)
    }

    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        let mut op = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            op.entries[i * op.dim + i] = Complex64::new(d, 0.0);
        }
        Ok(op)
    }

    /// `|ket⟩⟨bra|`.
    pub fn outer(ket: &StateVector, bra: &StateVector) -> Result<Self> {
        same_dim(ket.dim(), bra.dim())?;
        let dim = ket.dim();
        let mut entries = Vec::with_capacity(dim * dim);
        for k in ket.amplitudes() {
            for b in bra.amplitudes() {
                entries.push(k * b.conj());
            }
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                entries.push(self.entries[c * d + r].conj());
            }
        }
        Self { dim: d, entries }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn matmul(&self, other: &ComplexOperator) -> Result<Self> {
        same_dim(self.dim, other.dim)?;
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.entries[r * d + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..d {
                    entries[r * d + c] += a * other.entries[k * d + c];
                }
            }
        }
        Ok(Self { dim: d, entries })
    }

    /// `self ⊗ other` for two one-particle operators; `self` acts on
    /// particle (2).
    pub fn kron(&self, other: &ComplexOperator) -> Result<Self> {
        same_dim(2, self.dim)?;
        same_dim(2, other.dim)?;
        let mut entries = vec![Complex64::new(0.0, 0.0); 16];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        entries[(2 * i + j) * 4 + (2 * k + l)] = self.get(i, k) * other.get(j, l);
                    }
                }
            }
        }
        Ok(Self { dim: 4, entries })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexOperator) -> Result<f64> {
        same_dim(self.dim, other.dim)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.max_abs_diff(&self.adjoint())
            .is_ok_and(|d| d <= OPERATOR_TOL)
    }

    /// `P² = P` and `P† = P` within [`OPERATOR_TOL`].
    pub fn is_projector(&self) -> bool {
        self.is_self_adjoint()
            && self
                .matmul(self)
                .and_then(|sq| sq.max_abs_diff(self))
                .is_ok_and(|d| d <= OPERATOR_TOL)
    }

    /// Self-adjoint with unit trace. Positivity is not checked.
    pub fn is_density(&self) -> bool {
        let tr = self.trace();
        self.is_self_adjoint() && (tr.re - 1.0).abs() <= OPERATOR_TOL && tr.im.abs() <= OPERATOR_TOL
    }
}

impl Add for &ComplexOperator {
    type Output = ComplexOperator;

    fn add(self, rhs: &ComplexOperator) -> ComplexOperator {
        assert_eq!(self.dim, rhs.dim, "operator dimension mismatch");
        ComplexOperator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexOperator {
    type Output = ComplexOperator;

    fn sub(self, rhs: &ComplexOperator) -> ComplexOperator {
        assert_eq!(self.dim, rhs.dim, "operator dimension mismatch");
        ComplexOperator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexOperator {
    type Output = ComplexOperator;

    fn mul(self, rhs: &ComplexOperator) -> ComplexOperator {
        self.matmul(rhs).expect("operator dimension mismatch")
    }
}

/// `|a⁽²⁾⟩|b⁽¹⁾⟩`: amplitude `2i + j` is `a[i]·b[j]`.
pub fn tensor(a: &StateVector, b: &StateVector) -> Result<StateVector> {
    same_dim(2, a.dim())?;
    same_dim(2, b.dim())?;
    let mut amps = Vec::with_capacity(4);
    for x in a.amplitudes() {
        for y in b.amplitudes() {
            amps.push(x * y);
        }
    }
    Ok(StateVector { amps })
}

/// `|v⟩⟨v|` for a normalized `v`.
pub fn projector(v: &StateVector) -> Result<ComplexOperator> {
    if v.norm_sqr() == 0.0 {
        return Err(Error::DegenerateState);
    }
    if !v.is_normalized() {
        return Err(Error::InvalidParameter(format!(
            "projector needs a normalized vector (norm² = {})",
            v.norm_sqr()
        )));
    }
    ComplexOperator::outer(v, v)
}

/// Normalizes `v` first, then builds `|v⟩⟨v|`.
pub fn projector_normalized(v: &StateVector) -> Result<ComplexOperator> {
    projector(&v.normalized()?)
}

/// `Tr(op₁·op₂·…·opₖ)`.
pub fn trace_product(ops: &[&ComplexOperator]) -> Result<Complex64> {
    let (first, rest) = ops
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("trace of an empty product".into()))?;
    let mut acc = (*first).clone();
    for op in rest {
        acc = acc.matmul(op)?;
    }
    Ok(acc.trace())
}

/// Matrix-vector product. No normalization is applied.
pub fn apply(op: &ComplexOperator, v: &StateVector) -> Result<StateVector> {
    same_dim(op.dim(), v.dim())?;
    let d = op.dim();
    let amps = (0..d)
        .map(|r| (0..d).map(|c| op.get(r, c) * v.amps[c]).sum())
        .collect();
    Ok(StateVector { amps })
}
