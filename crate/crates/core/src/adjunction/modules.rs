//! Modules and comodules over a Frobenius algebra, and the isomorphism between
//! them given by the Casimir element and the pairing `σ = ε∘μ`:
//!
//! ```text
//! ν̄(x) = Σ_i e_i ⊗ ν(e^i ⊗ x)        ν̃ = (σ ⊗ M) ∘ (A ⊗ ν̄)
//! ```
//!
//! Actions carry legs `[n, m] → [m]` and coactions `[m] → [n, m]`.

use crate::error::{Error, Result};
use crate::exact::{LinearMap, Rational};
use crate::frobenius::FrobeniusStructure;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleAction {
    frob: FrobeniusStructure,
    carrier_dim: usize,
    action: LinearMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleCoaction {
    frob: FrobeniusStructure,
    carrier_dim: usize,
    coaction: LinearMap,
}

fn shaped(map: &LinearMap, dom: &[usize], cod: &[usize], what: &str) -> Result<LinearMap> {
    map.with_legs(dom, cod).map_err(|_| {
        Error::ShapeMismatch(format!(
            "{what} is {}x{}, expected {}x{}",
            map.rows(),
            map.cols(),
            cod.iter().product::<usize>(),
            dom.iter().product::<usize>()
        ))
    })
}

impl ModuleAction {
    /// Fails with `AxiomFailure` unless `ν` is associative and unital.
    pub fn new(fs: &FrobeniusStructure, carrier_dim: usize, action: LinearMap) -> Result<Self> {
        let n = fs.dim();
        let action = shaped(&action, &[n, carrier_dim], &[carrier_dim], "action")?;
        let m = ModuleAction { frob: fs.clone(), carrier_dim, action };
        let report = m.axioms()?;
        if !report.passed() {
            return Err(Error::AxiomFailure(format!("module: {}", report.summary())));
        }
        Ok(m)
    }

    /// From the matrices `ρ(e_k)` of a representation.
    pub fn from_representation(fs: &FrobeniusStructure, mats: &[LinearMap]) -> Result<Self> {
        let n = fs.dim();
        if mats.len() != n {
            return Err(Error::DimensionMismatch(format!("{} matrices for dimension {n}", mats.len())));
        }
        let m = mats.first().map_or(0, LinearMap::rows);
        if mats.iter().any(|r| r.rows() != m || r.cols() != m) {
            return Err(Error::ShapeMismatch("representation matrices must be square of one size".into()));
        }
        let action = LinearMap::from_fn(&[n, m], &[m], |r, kc| mats[kc / m].get(r, kc % m).clone());
        ModuleAction::new(fs, m, action)
    }

    pub fn frobenius(&self) -> &FrobeniusStructure {
        &self.frob
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn action(&self) -> &LinearMap {
        &self.action
    }

    /// `ν∘(η⊗M) = id` and `ν∘(μ⊗M) = ν∘(A⊗ν)`.
    pub fn axioms(&self) -> Result<Report> {
        let id_m = LinearMap::id(self.carrier_dim);
        let a = self.frob.algebra().identity_map();
        let nu = &self.action;
        let mut report = Report::new();
        report.equation("module_unit", &nu.compose(&self.frob.unit_map().kron(&id_m))?, &id_m)?;
        report.equation(
            "module_associativity",
            &nu.compose(&self.frob.mult_map().kron(&id_m))?,
            &nu.compose(&a.kron(nu))?,
        )?;
        Ok(report)
    }

    /// `M ⊕ N` with the first summand on the leading coordinates.
    pub fn direct_sum(&self, other: &ModuleAction) -> Result<ModuleAction> {
        let (p, q) = (self.carrier_dim, other.carrier_dim);
        let d = p + q;
        let action = LinearMap::from_fn(&[self.frob.dim(), d], &[d], |r, kc| {
            let (k, c) = (kc / d, kc % d);
            match (r < p, c < p) {
                (true, true) => self.action.get(r, k * p + c).clone(),
                (false, false) => other.action.get(r - p, k * q + c - p).clone(),
                _ => Rational::zero(),
            }
        });
        ModuleAction::new(&self.frob, d, action)
    }

    /// The isomorphic module `S ν (A⊗S⁻¹)`.
    pub fn conjugate(&self, s: &LinearMap) -> Result<ModuleAction> {
        let m = self.carrier_dim;
        let s = shaped(s, &[m], &[m], "change of basis")?;
        let s_inv = s.inverse()?;
        let a = self.frob.algebra().identity_map();
        let action = s.compose(&self.action)?.compose(&a.kron(&s_inv))?;
        ModuleAction::new(&self.frob, m, action)
    }
}

impl ComoduleCoaction {
    /// Fails with `AxiomFailure` unless `ν̄` is coassociative and counital.
    pub fn new(fs: &FrobeniusStructure, carrier_dim: usize, coaction: LinearMap) -> Result<Self> {
        let n = fs.dim();
        let coaction = shaped(&coaction, &[carrier_dim], &[n, carrier_dim], "coaction")?;
        let c = ComoduleCoaction { frob: fs.clone(), carrier_dim, coaction };
        let report = c.axioms()?;
        if !report.passed() {
            return Err(Error::AxiomFailure(format!("comodule: {}", report.summary())));
        }
        Ok(c)
    }

    pub fn frobenius(&self) -> &FrobeniusStructure {
        &self.frob
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn coaction(&self) -> &LinearMap {
        &self.coaction
    }

    /// `(ε⊗M)∘ν̄ = id` and `(Δ⊗M)∘ν̄ = (A⊗ν̄)∘ν̄`.
    pub fn axioms(&self) -> Result<Report> {
        let id_m = LinearMap::id(self.carrier_dim);
        let a = self.frob.algebra().identity_map();
        let nu = &self.coaction;
        let mut report = Report::new();
        report.equation("comodule_counit", &self.frob.counit_map().kron(&id_m).compose(nu)?, &id_m)?;
        report.equation(
            "comodule_coassociativity",
            &self.frob.comult().kron(&id_m).compose(nu)?,
            &a.kron(nu).compose(nu)?,
        )?;
        Ok(report)
    }
}

/// `A` acting on itself by multiplication.
pub fn regular_module(fs: &FrobeniusStructure) -> ModuleAction {
    ModuleAction::new(fs, fs.dim(), fs.mult_map()).expect("algebra is associative and unital")
}

/// The free module `A⊗V` with action `μ⊗V`.
pub fn free_module(fs: &FrobeniusStructure, v: usize) -> ModuleAction {
    let action = fs.mult_map().kron(&LinearMap::id(v));
    ModuleAction::new(fs, fs.dim() * v, action).expect("free module is a module")
}

/// `ν̄ = (A⊗ν)∘(C⊗M)`.
pub fn module_to_comodule(fs: &FrobeniusStructure, m: &ModuleAction) -> Result<ComoduleCoaction> {
    let id_m = LinearMap::id(m.carrier_dim);
    let coaction = fs.algebra().identity_map().kron(&m.action).compose(&fs.casimir().kron(&id_m))?;
    ComoduleCoaction::new(fs, m.carrier_dim, coaction)
}

/// `ν̃ = (σ⊗M)∘(A⊗ν̄)`.
pub fn comodule_to_module(fs: &FrobeniusStructure, c: &ComoduleCoaction) -> Result<ModuleAction> {
    let id_m = LinearMap::id(c.carrier_dim);
    let action = fs.pairing().kron(&id_m).compose(&fs.algebra().identity_map().kron(&c.coaction))?;
    ModuleAction::new(fs, c.carrier_dim, action)
}

/// The coaction induced on the free module `A⊗V` equals the cofree coaction
/// `Δ⊗V`.
pub fn free_module_coaction_agreement(fs: &FrobeniusStructure, v: usize) -> Result<Report> {
    let free = free_module(fs, v);
    let induced = module_to_comodule(fs, &free)?;
    let m = free.carrier_dim;
    let cofree = fs.comult().kron(&LinearMap::id(v)).with_legs(&[m], &[fs.dim(), m])?;
    let mut report = Report::new();
    report.equation("free_coaction_agreement", induced.coaction(), &cofree)?;
    Ok(report)
}
