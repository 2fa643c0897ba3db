//! Finite-dimensional unital algebras given by structure constants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{LinearMap, Rational};
use crate::report::Report;

/// An algebra on a chosen basis: `e_i · e_j = Σ_k mul[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    mul: Vec<Vec<Vec<Rational>>>,
    unit: Vec<Rational>,
}

impl Algebra {
    /// Checks sizes only; axioms are reported by [`Algebra::validate`].
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        mul: Vec<Vec<Vec<Rational>>>,
        unit: Vec<Rational>,
    ) -> Result<Self> {
        let n = basis.len();
        if mul.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "structure constants have {} rows for {n} basis elements",
                mul.len()
            )));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!("mul[{i}] has length {}", row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "mul[{i}][{j}] has length {}",
                        v.len()
                    )));
                }
            }
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "unit has length {} for dimension {n}",
                unit.len()
            )));
        }
        Ok(Algebra { name: name.into(), basis, mul, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        Algebra {
            name: "Q".into(),
            basis: vec!["1".into()],
            mul: vec![vec![vec![Rational::one()]]],
            unit: vec![Rational::one()],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.mul[i][j][k]
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Rational>>] {
        &self.mul
    }

    pub fn unit_vec(&self) -> &[Rational] {
        &self.unit
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in (0..n).filter(|&i| !a[i].is_zero()) {
            for j in (0..n).filter(|&j| !b[j].is_zero()) {
                let ab = &a[i] * &b[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.mul[i][j][k];
                    if !c.is_zero() {
                        *o = &*o + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Coordinates of the `i`-th basis element.
    pub fn basis_vec(&self, i: usize) -> Vec<Rational> {
        (0..self.dim())
            .map(|k| if k == i { Rational::one() } else { Rational::zero() })
            .collect()
    }

    /// `μ: A⊗A → A`, with `μ[k][(i,j)] = c[i][j][k]`.
    pub fn mult_map(&self) -> LinearMap {
        let n = self.dim();
        LinearMap::from_fn(&[n, n], &[n], |k, ij| self.mul[ij / n][ij % n][k].clone())
    }

    /// `η: ℚ → A`.
    pub fn unit_map(&self) -> LinearMap {
        LinearMap::from_fn(&[], &[self.dim()], |k, _| self.unit[k].clone())
    }

    pub fn identity_map(&self) -> LinearMap {
        LinearMap::id(self.dim())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mul[i][j] == self.mul[j][i]))
    }

    /// Lists every failing associativity instance `(i,j,k,q)` and unit instance.
    pub fn validate(&self) -> Report {
        let n = self.dim();
        let mut failed = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for q in 0..n {
                        let lhs: Rational = (0..n).map(|p| &self.mul[i][j][p] * &self.mul[p][k][q]).sum();
                        let rhs: Rational = (0..n).map(|p| &self.mul[j][k][p] * &self.mul[i][p][q]).sum();
                        if lhs != rhs {
                            failed.push(format!("({i},{j},{k},{q})"));
                        }
                    }
                }
            }
        }
        let mut report = Report::new();
        report.push(
            "associativity",
            failed.is_empty(),
            (!failed.is_empty()).then(|| failed.join(" ")),
        );

        let mut left = Vec::new();
        let mut right = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let delta = if j == k { Rational::one() } else { Rational::zero() };
                let l: Rational = (0..n).map(|i| &self.unit[i] * &self.mul[i][j][k]).sum();
                let r: Rational = (0..n).map(|i| &self.unit[i] * &self.mul[j][i][k]).sum();
                if l != delta {
                    left.push(format!("({j},{k})"));
                }
                if r != delta {
                    right.push(format!("({j},{k})"));
                }
            }
        }
        report.push("left unit", left.is_empty(), (!left.is_empty()).then(|| left.join(" ")));
        report.push("right unit", right.is_empty(), (!right.is_empty()).then(|| right.join(" ")));
        report
    }

    /// Fails with `AxiomFailure` unless [`Algebra::validate`] passes.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.passed() {
            Ok(())
        } else {
            Err(Error::AxiomFailure(format!("algebra {}: {}", self.name, report.summary())))
        }
    }
}

/// On-disk description of an algebra with a candidate counit.
///
/// ```text
/// {"name": str, "dim": n, "basis": [str×n], "mul": [[[rat×n]×n]×n],
///  "unit": [rat×n], "counit": [rat×n]}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mul: Vec<Vec<Vec<Rational>>>,
    pub unit: Vec<Rational>,
    pub counit: Vec<Rational>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_parts(alg: &Algebra, counit: &[Rational]) -> Self {
        AlgebraFile {
            name: alg.name.clone(),
            dim: alg.dim(),
            basis: alg.basis.clone(),
            mul: alg.mul.clone(),
            unit: alg.unit.clone(),
            counit: counit.to_vec(),
        }
    }

    /// Algebra and counit, with every size checked against `dim`.
    pub fn into_parts(self) -> Result<(Algebra, Vec<Rational>)> {
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "dim is {} but {} basis names given",
                self.dim,
                self.basis.len()
            )));
        }
        if self.counit.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "counit has length {} for dimension {}",
                self.counit.len(),
                self.dim
            )));
        }
        let alg = Algebra::new(self.name, self.basis, self.mul, self.unit)?;
        Ok((alg, self.counit))
    }
}
