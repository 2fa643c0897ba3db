//! Frobenius forms on an algebra: Gram matrix, dual basis, Casimir element
//! and the comultiplication they induce.
//!
//! With pairing `⟨a, b⟩ = ε(ab)` and Gram matrix `g[i][j] = ε(e_i e_j)`, the
//! dual basis is taken on the left: `ε(e^i · e_j) = δ_ij`, so `e^i` is the
//! `i`-th row of `g⁻¹`. The Casimir element `C = Σ_i e_i ⊗ e^i` then has
//! coordinates `C[(p, q)] = g⁻¹[p][q]`, and
//!
//! ```text
//! a = Σ_i e_i ε(e^i a) = Σ_i ε(a e_i) e^i,     Δ(a) = (a ⊗ 1) C = Σ_i a e_i ⊗ e^i.
//! ```
//!
//! Nothing here assumes `ε(ab) = ε(ba)`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{LinearMap, Rational};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusStructure {
    algebra: Algebra,
    counit: Vec<Rational>,
    gram: LinearMap,
    dual_basis: Vec<Vec<Rational>>,
    casimir: LinearMap,
    comult: LinearMap,
}

/// Gram matrix `g[i][j] = ε(e_i e_j)`.
pub fn gram_matrix(alg: &Algebra, counit: &[Rational]) -> LinearMap {
    let n = alg.dim();
    LinearMap::from_fn(&[n], &[n], |i, j| {
        (0..n).map(|k| alg.structure_constant(i, j, k) * &counit[k]).sum()
    })
}

/// Builds and certifies the Frobenius structure determined by `counit`.
///
/// Fails with `DegenerateForm` when the Gram matrix is singular. An
/// `AxiomFailure` would mean a convention bug, since a nondegenerate form on a
/// valid algebra always certifies.
pub fn build_frobenius(alg: &Algebra, counit: &[Rational]) -> Result<FrobeniusStructure> {
    if counit.len() != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "counit has length {} for dimension {}",
            counit.len(),
            alg.dim()
        )));
    }
    alg.ensure_valid()?;
    let gram = gram_matrix(alg, counit);
    let inv = gram.inverse().map_err(|e| match e {
        Error::Singular => Error::DegenerateForm,
        other => other,
    })?;
    let n = alg.dim();
    let dual_basis = inv.to_rows();
    let casimir = LinearMap::from_fn(&[], &[n, n], |pq, _| inv.get(pq / n, pq % n).clone());
    let comult = alg
        .mult_map()
        .kron(&alg.identity_map())
        .compose(&alg.identity_map().kron(&casimir))?;
    let fs = FrobeniusStructure {
        algebra: alg.clone(),
        counit: counit.to_vec(),
        gram,
        dual_basis,
        casimir,
        comult,
    };
    let mut report = check_frobenius(&fs)?;
    report.absorb("", fs.duality_report()?);
    if !report.passed() {
        return Err(Error::AxiomFailure(report.summary()));
    }
    Ok(fs)
}

impl FrobeniusStructure {
    /// Assembles a structure around a caller-supplied comultiplication
    /// without certifying it. Only [`check_frobenius`] should be trusted on
    /// the result; this exists to audit corrupted data.
    pub fn with_comultiplication_unchecked(&self, comult: LinearMap) -> FrobeniusStructure {
        FrobeniusStructure { comult, ..self.clone() }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn counit_vec(&self) -> &[Rational] {
        &self.counit
    }

    pub fn gram(&self) -> &LinearMap {
        &self.gram
    }

    /// Coordinates of `e^i`, indexed by `i`.
    pub fn dual_basis(&self) -> &[Vec<Rational>] {
        &self.dual_basis
    }

    /// `C` as a map `ℚ → A⊗A`.
    pub fn casimir(&self) -> &LinearMap {
        &self.casimir
    }

    /// `Δ: A → A⊗A`.
    pub fn comult(&self) -> &LinearMap {
        &self.comult
    }

    pub fn mult_map(&self) -> LinearMap {
        self.algebra.mult_map()
    }

    pub fn unit_map(&self) -> LinearMap {
        self.algebra.unit_map()
    }

    /// `ε: A → ℚ`.
    pub fn counit_map(&self) -> LinearMap {
        LinearMap::row(&[self.dim()], self.counit.clone()).expect("counit length checked")
    }

    /// The pairing `ε∘μ: A⊗A → ℚ`.
    pub fn pairing(&self) -> LinearMap {
        self.counit_map().compose(&self.mult_map()).expect("legs agree")
    }

    pub fn handle_operator(&self) -> LinearMap {
        self.mult_map().compose(&self.comult).expect("legs agree")
    }

    /// `ε(e^i e_j) = δ_ij` and both expansion identities, which are the two
    /// zig-zags of the self-adjunction with unit `C` and counit `ε∘μ`.
    pub fn duality_report(&self) -> Result<Report> {
        let n = self.dim();
        let id = self.algebra.identity_map();
        let sigma = self.pairing();
        let mut report = Report::new();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.multiply(&self.dual_basis[i], &self.algebra.basis_vec(j));
                let val: Rational = prod.iter().zip(&self.counit).map(|(a, b)| a * b).sum();
                let expected = if i == j { Rational::one() } else { Rational::zero() };
                if val != expected {
                    bad.push(format!("(e^{i}, e_{j})"));
                }
            }
        }
        report.push("dual_basis", bad.is_empty(), (!bad.is_empty()).then(|| bad.join(" ")));
        // Σ_i e_i ε(e^i a) = a
        let left = id.kron(&sigma).compose(&self.casimir.kron(&id))?;
        report.equation("expansion_left", &left, &id)?;
        // Σ_i ε(a e_i) e^i = a
        let right = sigma.kron(&id).compose(&id.kron(&self.casimir))?;
        report.equation("expansion_right", &right, &id)?;
        Ok(report)
    }
}

fn both(report: &mut Report, name: &str, eqs: [(&str, LinearMap, LinearMap); 2]) -> Result<()> {
    let mut witness = None;
    for (side, lhs, rhs) in &eqs {
        if let Some(w) = lhs.first_difference(rhs)? {
            witness = Some(format!("{side}: {w}"));
            break;
        }
    }
    report.push(name, witness.is_none(), witness);
    Ok(())
}

/// Re-verifies the comonoid axioms, both Frobenius identities and Casimir
/// invariance as exact matrix equations.
pub fn check_frobenius(fs: &FrobeniusStructure) -> Result<Report> {
    let id = fs.algebra.identity_map();
    let mu = fs.mult_map();
    let delta = &fs.comult;
    let eps = fs.counit_map();
    let mut report = Report::new();

    let lhs = delta.kron(&id).compose(delta)?;
    let rhs = id.kron(delta).compose(delta)?;
    report.equation("coassociativity", &lhs, &rhs)?;

    both(
        &mut report,
        "counit",
        [
            ("(ε⊗id)Δ", eps.kron(&id).compose(delta)?, id.clone()),
            ("(id⊗ε)Δ", id.kron(&eps).compose(delta)?, id.clone()),
        ],
    )?;

    let delta_mu = delta.compose(&mu)?;
    let lhs = id.kron(&mu).compose(&delta.kron(&id))?;
    report.equation("frobenius_left", &lhs, &delta_mu)?;
    let rhs = mu.kron(&id).compose(&id.kron(delta))?;
    report.equation("frobenius_right", &rhs, &delta_mu)?;

    // (a⊗1)C = C(1⊗a) as maps A → A⊗A
    let lhs = mu.kron(&id).compose(&id.kron(&fs.casimir))?;
    let rhs = id.kron(&mu).compose(&fs.casimir.kron(&id))?;
    report.equation("casimir_invariance", &lhs, &rhs)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    /// Δ written out by hand: entry [(p,q), i] is the coefficient of e_p⊗e_q in Δ(e_i).
    fn delta_from_table(n: usize, table: &[(usize, usize, usize, i64)]) -> LinearMap {
        let mut d = LinearMap::zeros(&[n], &[n, n]);
        for &(i, p, qq, c) in table {
            d.set(p * n + qq, i, q(c));
        }
        d
    }

    #[test]
    fn dual_numbers_structure() {
        let fs = build_frobenius(&dual_numbers(), &dual_numbers_counit()).unwrap();
        assert_eq!(fs.gram(), &LinearMap::from_ints(&[&[0, 1], &[1, 0]]));
        // e^1 = x, e^2 = 1
        assert_eq!(fs.dual_basis(), &[vec![q(0), q(1)], vec![q(1), q(0)]]);
        // Δ(1) = 1⊗x + x⊗1, Δ(x) = x⊗x
        let expected = delta_from_table(2, &[(0, 0, 1, 1), (0, 1, 0, 1), (1, 1, 1, 1)]);
        assert_eq!(fs.comult(), &expected);
    }

    #[test]
    fn group_z2_structure() {
        let fs = build_frobenius(&group_z2(), &group_z2_counit()).unwrap();
        assert_eq!(fs.gram(), &LinearMap::id(2));
        // Δ(1) = 1⊗1 + t⊗t, Δ(t) = t⊗1 + 1⊗t
        let expected = delta_from_table(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 1, 0, 1), (1, 0, 1, 1)]);
        assert_eq!(fs.comult(), &expected);
    }

    #[test]
    fn degenerate_form_rejected() {
        let err = build_frobenius(&dual_numbers(), &[q(1), q(0)]);
        assert_eq!(err, Err(Error::DegenerateForm));
        assert_eq!(gram_matrix(&dual_numbers(), &[q(1), q(0)]), LinearMap::from_ints(&[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn mat2_trace_dual_basis_is_transpose() {
        let fs = build_frobenius(&mat2(), &mat2_trace()).unwrap();
        // dual of E_ij is E_ji
        for a in 0..2 {
            for b in 0..2 {
                let expected = mat2().basis_vec(2 * b + a);
                assert_eq!(fs.dual_basis()[2 * a + b], expected);
            }
        }
        assert!(check_frobenius(&fs).unwrap().passed());
    }

    #[test]
    fn non_symmetric_form_certifies() {
        let fs = build_frobenius(&mat2(), &mat2_twisted_trace()).unwrap();
        let g = fs.gram();
        assert_ne!(g, &g.transpose(), "form should not be symmetric");
        assert!(check_frobenius(&fs).unwrap().passed());
        assert!(fs.duality_report().unwrap().passed());
    }

    #[test]
    fn unit_counit_scalar() {
        let fs = build_frobenius(&dual_numbers(), &dual_numbers_counit()).unwrap();
        let s = fs.counit_map().compose(&fs.unit_map()).unwrap();
        assert_eq!(s, LinearMap::scalar(q(0)));
    }

    #[test]
    fn perturbed_comultiplication_fails_coassociativity() {
        let fs = build_frobenius(&dual_numbers(), &dual_numbers_counit()).unwrap();
        let mut d = fs.comult().clone();
        d.set(1, 1, q(1)); // Δ(x) gains 1⊗x
        let bad = fs.with_comultiplication_unchecked(d);
        let r = check_frobenius(&bad).unwrap();
        let c = r.get("coassociativity").unwrap();
        assert!(!c.passed);
        assert!(c.witness.is_some());
    }

    #[test]
    fn rescaling_counit() {
        for alg_counit in [(dual_numbers(), dual_numbers_counit()), (mat2(), mat2_twisted_trace())] {
            let (alg, eps) = alg_counit;
            let base = build_frobenius(&alg, &eps).unwrap();
            for s in [q(2), q(-1), Rational::new(1, 3)] {
                let scaled: Vec<Rational> = eps.iter().map(|x| x * &s).collect();
                let fs = build_frobenius(&alg, &scaled).unwrap();
                let inv = s.recip().unwrap();
                assert_eq!(fs.gram(), &base.gram().scale(&s));
                assert_eq!(fs.casimir(), &base.casimir().scale(&inv));
                assert_eq!(fs.comult(), &base.comult().scale(&inv));
                for (d, d0) in fs.dual_basis().iter().zip(base.dual_basis()) {
                    let expect: Vec<Rational> = d0.iter().map(|x| x * &inv).collect();
                    assert_eq!(d, &expect);
                }
                assert!(check_frobenius(&fs).unwrap().passed());
            }
        }
    }

    #[test]
    fn opposite_pairing_shares_nondegeneracy() {
        for (alg, eps) in [(mat2(), mat2_twisted_trace()), (dual_numbers(), dual_numbers_counit())] {
            let fs = build_frobenius(&alg, &eps).unwrap();
            let n = alg.dim();
            let opposite = fs.pairing().compose(&LinearMap::swap_map(n)).unwrap();
            let g_op = LinearMap::from_fn(&[n], &[n], |i, j| opposite.get(0, i * n + j).clone());
            assert_eq!(g_op, fs.gram().transpose());
            assert_eq!(g_op.rank(), n);
        }
    }
}
