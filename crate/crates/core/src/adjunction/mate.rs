//! The bijection between 2-cells `bU ⇒ U′a` and `F′b ⇒ aF` induced by a pair
//! of adjunctions `F ⊣ U` and `F′ ⊣ U′` and 1-cells `a: A → A′`, `b: B → B′`.

use super::Adjunction;
use crate::em::{compose_one_cells, vertical_compose, whisker_left, whisker_right, OneCell, TwoCell};
use crate::error::{Error, Result};

fn check_frame(adj: &Adjunction, adj2: &Adjunction, a: &OneCell, b: &OneCell) -> Result<()> {
    let ok = a.dom() == adj.upper()
        && a.cod() == adj2.upper()
        && b.dom() == adj.lower()
        && b.cod() == adj2.lower();
    if !ok {
        return Err(Error::ObjectMismatch(format!(
            "mate frame: a is {}→{}, b is {}→{}, adjunctions over {}→{} and {}→{}",
            a.dom().name(),
            a.cod().name(),
            b.dom().name(),
            b.cod().name(),
            adj.upper().name(),
            adj.lower().name(),
            adj2.upper().name(),
            adj2.lower().name()
        )));
    }
    adj.require_verified("mate")?;
    adj2.require_verified("mate")
}

/// `ξ: bU ⇒ U′a` to `ζ = e′aF ∘ F′ξF ∘ F′bi: F′b ⇒ aF`.
pub fn mate(adj: &Adjunction, adj2: &Adjunction, a: &OneCell, b: &OneCell, xi: &TwoCell) -> Result<TwoCell> {
    check_frame(adj, adj2, a, b)?;
    let (f, u) = (adj.left(), adj.right());
    let (f2, u2) = (adj2.left(), adj2.right());
    let xi = xi.retype(&compose_one_cells(u, b)?, &compose_one_cells(a, u2)?)?;

    let f2_b_i = whisker_right(&whisker_right(adj.unit(), b)?, f2)?;
    let f2_xi_f = whisker_right(&whisker_left(f, &xi)?, f2)?;
    let e2_a_f = whisker_left(&compose_one_cells(f, a)?, adj2.counit())?;
    let zeta = vertical_compose(&vertical_compose(&f2_b_i, &f2_xi_f)?, &e2_a_f)?;
    zeta.retype(&compose_one_cells(b, f2)?, &compose_one_cells(f, a)?)
}

/// `ζ: F′b ⇒ aF` to `ξ = U′ae ∘ U′ζU ∘ i′bU: bU ⇒ U′a`.
pub fn mate_inv(adj: &Adjunction, adj2: &Adjunction, a: &OneCell, b: &OneCell, zeta: &TwoCell) -> Result<TwoCell> {
    check_frame(adj, adj2, a, b)?;
    let (f, u) = (adj.left(), adj.right());
    let (f2, u2) = (adj2.left(), adj2.right());
    let zeta = zeta.retype(&compose_one_cells(b, f2)?, &compose_one_cells(f, a)?)?;

    let i2_b_u = whisker_left(&compose_one_cells(u, b)?, adj2.unit())?;
    let u2_zeta_u = whisker_right(&whisker_left(u, &zeta)?, u2)?;
    let u2_a_e = whisker_right(&whisker_right(adj.counit(), a)?, u2)?;
    let xi = vertical_compose(&vertical_compose(&i2_b_u, &u2_zeta_u)?, &u2_a_e)?;
    xi.retype(&compose_one_cells(u, b)?, &compose_one_cells(a, u2)?)
}
