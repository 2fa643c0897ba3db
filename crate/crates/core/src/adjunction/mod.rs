//! Adjunctions between left-free bimodules.
//!
//! `F ⊣ U` has `F: B → A`, `U: A → B`, unit `i: 1_B ⇒ UF` and counit
//! `e: FU ⇒ 1_A`. Products such as `UF` are applicative (`F` acts first), so
//! `UF` is `compose_one_cells(F, U)`.

mod ambi;
mod mate;
mod modules;

pub use ambi::{
    build_ambijunction, frobenius_from_ambijunction, monad_from_adjunction, self_adjunction_from_ambijunction,
    round_trip_report, Ambijunction, Monad, SelfAdjunction,
};
pub use mate::{mate, mate_inv};
pub use modules::{
    comodule_to_module, free_module, free_module_coaction_agreement, module_to_comodule, regular_module,
    ComoduleCoaction, ModuleAction,
};

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::em::{
    check_one_cell, check_two_cell, compose_one_cells, identity_one_cell, identity_two_cell, vertical_compose,
    whisker_left, whisker_right, OneCell, TwoCell,
};
use crate::error::{Error, Result};
use crate::report::Report;

#[derive(Debug, Clone)]
pub struct Adjunction {
    left: OneCell,
    right: OneCell,
    unit: TwoCell,
    counit: TwoCell,
    verified: bool,
}

impl Adjunction {
    /// Checks that the unit and counit have the boundaries `1_B ⇒ UF` and
    /// `FU ⇒ 1_A`; `verified` records whether every cell is valid and both
    /// zig-zags hold.
    pub fn new(left: OneCell, right: OneCell, unit: TwoCell, counit: TwoCell) -> Result<Self> {
        if left.dom() != right.cod() || left.cod() != right.dom() {
            return Err(Error::ObjectMismatch(format!(
                "left adjoint {}→{} and right adjoint {}→{}",
                left.dom().name(),
                left.cod().name(),
                right.dom().name(),
                right.cod().name()
            )));
        }
        let uf = compose_one_cells(&left, &right)?;
        let fu = compose_one_cells(&right, &left)?;
        let unit = unit.retype(&identity_one_cell(left.dom()), &uf)?;
        let counit = counit.retype(&fu, &identity_one_cell(left.cod()))?;
        let mut adj = Adjunction { left, right, unit, counit, verified: false };
        adj.verified = adj.verify()?.passed();
        Ok(adj)
    }

    pub fn left(&self) -> &OneCell {
        &self.left
    }

    pub fn right(&self) -> &OneCell {
        &self.right
    }

    pub fn unit(&self) -> &TwoCell {
        &self.unit
    }

    pub fn counit(&self) -> &TwoCell {
        &self.counit
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    /// `B`, the domain of the left adjoint.
    pub fn lower(&self) -> &Arc<Algebra> {
        self.left.dom()
    }

    /// `A`, the codomain of the left adjoint.
    pub fn upper(&self) -> &Arc<Algebra> {
        self.left.cod()
    }

    /// Validity of all four cells followed by the zig-zags.
    pub fn verify(&self) -> Result<Report> {
        let mut report = Report::new();
        report.absorb("left ", check_one_cell(&self.left)?);
        report.absorb("right ", check_one_cell(&self.right)?);
        report.absorb("unit ", check_two_cell(&self.unit)?);
        report.absorb("counit ", check_two_cell(&self.counit)?);
        report.absorb("", check_triangles(self)?);
        Ok(report)
    }

    fn require_verified(&self, what: &str) -> Result<()> {
        if self.verified {
            Ok(())
        } else {
            Err(Error::AxiomFailure(format!("{what}: adjunction is not verified")))
        }
    }
}

/// `(Ue)∘(iU) = 1_U` and `(eF)∘(Fi) = 1_F`.
pub fn check_triangles(adj: &Adjunction) -> Result<Report> {
    let (f, u) = (&adj.left, &adj.right);
    let mut report = Report::new();

    let i_u = whisker_left(u, &adj.unit)?;
    let u_e = whisker_right(&adj.counit, u)?;
    let zig = vertical_compose(&i_u, &u_e)?.retype(u, u)?;
    zig.compare(&identity_two_cell(u), "zigzag_right_adjoint", &mut report)?;

    let f_i = whisker_right(&adj.unit, f)?;
    let e_f = whisker_left(f, &adj.counit)?;
    let zag = vertical_compose(&f_i, &e_f)?.retype(f, f)?;
    zag.compare(&identity_two_cell(f), "zigzag_left_adjoint", &mut report)?;
    Ok(report)
}

/// `1_A ⊣ 1_A` with identity unit and counit.
pub fn identity_adjunction(alg: &Arc<Algebra>) -> Adjunction {
    let id = identity_one_cell(alg);
    let cell = identity_two_cell(&id);
    Adjunction::new(id.clone(), id, cell.clone(), cell).expect("identity boundaries")
}

/// `F⊣U: A→B` and `F′⊣U′: B→C` give `FF′ ⊣ U′U` with unit `U′iF′ ∘ i′` and
/// counit `e ∘ Fe′U`.
pub fn compose_adjunctions(a1: &Adjunction, a2: &Adjunction) -> Result<Adjunction> {
    if a1.lower() != a2.upper() {
        return Err(Error::ObjectMismatch(format!(
            "composing adjunctions through {} and {}",
            a1.lower().name(),
            a2.upper().name()
        )));
    }
    a1.require_verified("compose_adjunctions")?;
    a2.require_verified("compose_adjunctions")?;
    let (f, u) = (&a1.left, &a1.right);
    let (f2, u2) = (&a2.left, &a2.right);

    let u2_i_f2 = whisker_right(&whisker_left(f2, &a1.unit)?, u2)?;
    let unit = vertical_compose(&a2.unit, &u2_i_f2)?;
    let f_e2_u = whisker_right(&whisker_left(u, &a2.counit)?, f)?;
    let counit = vertical_compose(&f_e2_u, &a1.counit)?;

    Adjunction::new(compose_one_cells(f2, f)?, compose_one_cells(u, u2)?, unit, counit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::exact::{LinearMap, Rational};
    use crate::frobenius::build_frobenius;

    fn dual() -> crate::FrobeniusStructure {
        build_frobenius(&dual_numbers(), &dual_numbers_counit()).unwrap()
    }

    #[test]
    fn identity_adjunction_passes() {
        for a in [Algebra::ground(), dual_numbers(), mat2()] {
            let adj = identity_adjunction(&Arc::new(a));
            assert!(adj.verified());
            let r = check_triangles(&adj).unwrap();
            assert_eq!(r.checks.len(), 2);
            assert!(r.passed());
        }
    }

    #[test]
    fn forward_adjunction_of_dual_numbers() {
        let amb = build_ambijunction(&dual()).unwrap();
        assert!(check_triangles(amb.fwd()).unwrap().passed());
        assert!(check_triangles(amb.bwd()).unwrap().passed());
    }

    #[test]
    fn degenerate_counit_breaks_backward_triangles() {
        let amb = build_ambijunction(&dual()).unwrap();
        let bwd = amb.bwd();
        // ε = (1,0) is degenerate on the dual numbers
        let bad_k = TwoCell::new(
            bwd.counit().src().clone(),
            bwd.counit().tgt().clone(),
            LinearMap::from_ints(&[&[1, 0]]),
        )
        .unwrap();
        let adj = Adjunction::new(bwd.left().clone(), bwd.right().clone(), bwd.unit().clone(), bad_k).unwrap();
        assert!(!adj.verified());
        let r = check_triangles(&adj).unwrap();
        assert!(!r.passed());
        assert!(r.failures().all(|c| c.witness.is_some()));
    }

    #[test]
    fn mismatched_unit_is_rejected() {
        let a = Arc::new(dual_numbers());
        let id = identity_one_cell(&a);
        let cell = identity_two_cell(&identity_one_cell(&Arc::new(Algebra::ground())));
        assert!(matches!(Adjunction::new(id.clone(), id, cell.clone(), cell), Err(Error::ObjectMismatch(_))));
    }

    #[test]
    fn composing_with_identities_changes_nothing() {
        for fs in [dual(), build_frobenius(&group_z2(), &group_z2_counit()).unwrap()] {
            let amb = build_ambijunction(&fs).unwrap();
            for adj in [amb.fwd(), amb.bwd()] {
                let left_pad = compose_adjunctions(&identity_adjunction(adj.upper()), adj).unwrap();
                let right_pad = compose_adjunctions(adj, &identity_adjunction(adj.lower())).unwrap();
                for c in [left_pad, right_pad] {
                    assert!(c.verified());
                    assert!(c.left().same_as(adj.left()));
                    assert!(c.right().same_as(adj.right()));
                    assert!(c.unit().same_as(adj.unit()));
                    assert!(c.counit().same_as(adj.counit()));
                }
            }
        }
    }

    #[test]
    fn composite_through_the_algebra() {
        let fs = build_frobenius(&group_z2(), &group_z2_counit()).unwrap();
        let amb = build_ambijunction(&fs).unwrap();
        // U ⊣ F followed by F ⊣ U is UF ⊣ UF on ℚ
        let c = compose_adjunctions(amb.bwd(), amb.fwd()).unwrap();
        assert!(c.verified());
        // F ⊣ U followed by U ⊣ F is FU ⊣ FU on A
        let c = compose_adjunctions(amb.fwd(), amb.bwd()).unwrap();
        assert!(c.verified());
        assert_eq!(c.unit().rho().rows(), 8);
    }

    #[test]
    fn composite_middle_object_must_match() {
        let amb = build_ambijunction(&dual()).unwrap();
        let err = compose_adjunctions(amb.fwd(), amb.fwd());
        assert!(matches!(err, Err(Error::ObjectMismatch(_))));
    }

    #[test]
    fn unit_of_ground_adjunction_is_scalar_one() {
        let adj = identity_adjunction(&Arc::new(Algebra::ground()));
        assert_eq!(adj.unit().rho(), &LinearMap::scalar(Rational::one()));
    }
}
