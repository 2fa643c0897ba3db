//! The ambijunction `F ⊣ U ⊣ F` between `ℚ` and a Frobenius algebra `A`, and
//! the Frobenius structure it determines.
//!
//! `F = (A, μ): ℚ → A` is induction and `U = (ℚ, η): A → ℚ` is restriction,
//! so `T = UF` is `A` viewed as a 1-cell `ℚ → ℚ` and a 2-cell between powers
//! of `T` is just a matrix. The four structure cells are
//!
//! ```text
//! i = η: 1 ⇒ UF      e = id_A: FU ⇒ 1      j = C: 1 ⇒ FU      k = ε: UF ⇒ 1
//! ```

use std::sync::Arc;

use super::{compose_adjunctions, Adjunction};
use crate::algebra::Algebra;
use crate::em::{
    compose_one_cells, identity_one_cell, vertical_compose, whisker_left, whisker_right, OneCell, TwoCell,
};
use crate::error::{Error, Result};
use crate::exact::{LinearMap, Rational};
use crate::frobenius::{build_frobenius, FrobeniusStructure};
use crate::report::Report;

#[derive(Debug, Clone)]
pub struct Ambijunction {
    fwd: Adjunction,
    bwd: Adjunction,
}

impl Ambijunction {
    /// `fwd = F ⊣ U` and `bwd = U ⊣ F` must share their 1-cells and both be
    /// verified.
    pub fn new(fwd: Adjunction, bwd: Adjunction) -> Result<Self> {
        if !fwd.left().same_as(bwd.right()) || !fwd.right().same_as(bwd.left()) {
            return Err(Error::ObjectMismatch("ambijunction halves do not share their 1-cells".into()));
        }
        for (name, adj) in [("F ⊣ U", &fwd), ("U ⊣ F", &bwd)] {
            if !adj.verified() {
                return Err(Error::AxiomFailure(format!("{name}: {}", adj.verify()?.summary())));
            }
        }
        Ok(Ambijunction { fwd, bwd })
    }

    pub fn fwd(&self) -> &Adjunction {
        &self.fwd
    }

    pub fn bwd(&self) -> &Adjunction {
        &self.bwd
    }

    pub fn induction(&self) -> &OneCell {
        self.fwd.left()
    }

    pub fn restriction(&self) -> &OneCell {
        self.fwd.right()
    }

    /// Cell and zig-zag checks of both halves.
    pub fn report(&self) -> Result<Report> {
        let mut report = Report::new();
        report.absorb("F ⊣ U: ", self.fwd.verify()?);
        report.absorb("U ⊣ F: ", self.bwd.verify()?);
        Ok(report)
    }
}

pub fn build_ambijunction(fs: &FrobeniusStructure) -> Result<Ambijunction> {
    let a = Arc::new(fs.algebra().clone());
    let q = Arc::new(Algebra::ground());
    let n = a.dim();
    let f = OneCell::new(q.clone(), a.clone(), vec![n], fs.mult_map())?;
    let u = OneCell::new(a.clone(), q.clone(), vec![1], fs.unit_map())?;
    let uf = compose_one_cells(&f, &u)?;
    let fu = compose_one_cells(&u, &f)?;
    let id_q = identity_one_cell(&q);
    let id_a = identity_one_cell(&a);

    let i = TwoCell::new(id_q.clone(), uf.clone(), fs.unit_map())?;
    let e = TwoCell::new(fu.clone(), id_a.clone(), LinearMap::id(n))?;
    let j = TwoCell::new(id_a, fu, fs.casimir().clone())?;
    let k = TwoCell::new(uf, id_q, fs.counit_map())?;

    let fwd = Adjunction::new(f.clone(), u.clone(), i, e)?;
    let bwd = Adjunction::new(u, f, j, k)?;
    Ambijunction::new(fwd, bwd)
}

/// `T = UF` with `μ = UeF` and `η = i`, plus the monoid laws.
#[derive(Debug, Clone)]
pub struct Monad {
    pub t: OneCell,
    pub mu: TwoCell,
    pub eta: TwoCell,
    pub report: Report,
}

pub fn monad_from_adjunction(adj: &Adjunction) -> Result<Monad> {
    let (f, u) = (adj.left(), adj.right());
    let t = compose_one_cells(f, u)?;
    let mu = whisker_right(&whisker_left(f, adj.counit())?, u)?.retype(&compose_one_cells(&t, &t)?, &t)?;
    let eta = adj.unit().clone();

    let mut report = Report::new();
    let mu_t = whisker_left(&t, &mu)?;
    let t_mu = whisker_right(&mu, &t)?;
    vertical_compose(&mu_t, &mu)?.compare(&vertical_compose(&t_mu, &mu)?, "monad_associativity", &mut report)?;
    let id_t = crate::em::identity_two_cell(&t);
    let eta_t = whisker_left(&t, &eta)?;
    let t_eta = whisker_right(&eta, &t)?;
    vertical_compose(&eta_t, &mu)?.retype(&t, &t)?.compare(&id_t, "monad_left_unit", &mut report)?;
    vertical_compose(&t_eta, &mu)?.retype(&t, &t)?.compare(&id_t, "monad_right_unit", &mut report)?;
    Ok(Monad { t, mu, eta, report })
}

/// `T ⊣ T` with unit `ι = UjF∘i` and counit `σ = k∘UeF`, and the check that
/// `σ = ε∘μ`.
#[derive(Debug, Clone)]
pub struct SelfAdjunction {
    adjunction: Adjunction,
    report: Report,
}

impl SelfAdjunction {
    pub fn adjunction(&self) -> &Adjunction {
        &self.adjunction
    }

    pub fn iota(&self) -> &TwoCell {
        self.adjunction.unit()
    }

    pub fn sigma(&self) -> &TwoCell {
        self.adjunction.counit()
    }

    pub fn report(&self) -> &Report {
        &self.report
    }
}

pub fn self_adjunction_from_ambijunction(amb: &Ambijunction) -> Result<SelfAdjunction> {
    let adjunction = compose_adjunctions(amb.bwd(), amb.fwd())?;
    let mut report = adjunction.verify()?;
    let monad = monad_from_adjunction(amb.fwd())?;
    let pairing = amb.bwd().counit().rho().compose(monad.mu.rho())?;
    report.equation("counit_is_pairing", adjunction.counit().rho(), &pairing)?;
    Ok(SelfAdjunction { adjunction, report })
}

/// Reads `μ, η` off the forward monad and `Δ = UjF, ε = k` off the backward
/// comonad, certifies them, and checks them against the self-adjunction.
pub fn frobenius_from_ambijunction(amb: &Ambijunction) -> Result<FrobeniusStructure> {
    let q = amb.fwd().lower();
    if q.dim() != 1 || q.as_ref() != &Algebra::ground() {
        return Err(Error::ObjectMismatch(format!(
            "expected an ambijunction over Q, found one over {}",
            q.name()
        )));
    }
    let a = amb.fwd().upper();
    let n = a.dim();
    let monad = monad_from_adjunction(amb.fwd())?;
    let mut report = monad.report.clone();

    let mu = monad.mu.rho();
    let mul = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| mu.get(k, i * n + j).clone()).collect()).collect())
        .collect();
    let unit: Vec<Rational> = monad.eta.rho().col_vec(0);
    let counit: Vec<Rational> = amb.bwd().counit().rho().row_vec(0);
    let alg = Algebra::new(a.name(), a.basis().to_vec(), mul, unit)?;
    let fs = build_frobenius(&alg, &counit)?;

    let (f, u) = (amb.induction(), amb.restriction());
    let delta = whisker_right(&whisker_left(f, amb.bwd().unit())?, u)?;
    report.equation("comultiplication", delta.rho(), fs.comult())?;

    let sa = self_adjunction_from_ambijunction(amb)?;
    report.absorb("self-adjunction ", sa.report.clone());
    report.equation("casimir", sa.iota().rho(), fs.casimir())?;

    if !report.passed() {
        return Err(Error::AxiomFailure(report.summary()));
    }
    Ok(fs)
}

/// Compares `μ, η, Δ, ε` and the Casimir element of `fs` with those recovered
/// from its ambijunction.
pub fn round_trip_report(fs: &FrobeniusStructure) -> Result<Report> {
    let back = frobenius_from_ambijunction(&build_ambijunction(fs)?)?;
    let mut report = Report::new();
    report.equation("multiplication", &back.mult_map(), &fs.mult_map())?;
    report.equation("unit", &back.unit_map(), &fs.unit_map())?;
    report.equation("comultiplication", back.comult(), fs.comult())?;
    report.equation("counit", &back.counit_map(), &fs.counit_map())?;
    report.equation("casimir", back.casimir(), fs.casimir())?;
    Ok(report)
}
