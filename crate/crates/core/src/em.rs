//! Algebras, left-free bimodules and their homomorphisms over ℚ.
//!
//! A 1-cell `(V, φ): A₁ → A₂` is a vector space `V` with `φ: V⊗A₂ → A₁⊗V`;
//! it presents the `(A₁, A₂)`-bimodule `A₁⊗V`. A 2-cell `(V, φ) ⇒ (V′, ψ)` is
//! a map `ρ: V → A₁⊗V′`, standing for the left-linear homomorphism
//! `a⊗v ↦ a·ρ(v)`.
//!
//! Composition is diagrammatic: `compose_one_cells(f, g)` is `f` followed by
//! `g`, with carrier `V_f ⊗ V_g`. In applicative notation this is `g∘f`, so
//! a whiskered cell written `Xα` is `whisker_right(α, X)` and `αX` is
//! `whisker_left(X, α)`. Carriers are flattened row-major, which makes the
//! associator and unitors identities on matrices.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{legs_match, LinearMap, Rational};
use crate::report::Report;

#[derive(Debug, Clone)]
pub struct OneCell {
    dom: Arc<Algebra>,
    cod: Arc<Algebra>,
    carrier: Vec<usize>,
    phi: LinearMap,
}

#[derive(Debug, Clone)]
pub struct TwoCell {
    src: OneCell,
    tgt: OneCell,
    rho: LinearMap,
}

fn same_object(a: &Algebra, b: &Algebra) -> bool {
    a == b
}

fn object_mismatch(what: &str, a: &Algebra, b: &Algebra) -> Error {
    Error::ObjectMismatch(format!("{what}: {} vs {}", a.name(), b.name()))
}

fn dim_of(legs: &[usize]) -> usize {
    legs.iter().product()
}

impl OneCell {
    /// Checks shapes only; the bimodule squares are reported by
    /// [`check_one_cell`].
    pub fn new(dom: Arc<Algebra>, cod: Arc<Algebra>, carrier: Vec<usize>, phi: LinearMap) -> Result<Self> {
        let v = dim_of(&carrier);
        let (n1, n2) = (dom.dim(), cod.dim());
        if phi.cols() != v * n2 || phi.rows() != n1 * v {
            return Err(Error::ShapeMismatch(format!(
                "φ is {}x{} but V⊗A₂ → A₁⊗V needs {}x{}",
                phi.rows(),
                phi.cols(),
                n1 * v,
                v * n2
            )));
        }
        let mut dom_legs = carrier.clone();
        dom_legs.push(n2);
        let mut cod_legs = vec![n1];
        cod_legs.extend_from_slice(&carrier);
        let phi = phi.with_legs(&dom_legs, &cod_legs)?;
        Ok(OneCell { dom, cod, carrier, phi })
    }

    pub fn dom(&self) -> &Arc<Algebra> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Algebra> {
        &self.cod
    }

    pub fn carrier_legs(&self) -> &[usize] {
        &self.carrier
    }

    pub fn carrier_dim(&self) -> usize {
        dim_of(&self.carrier)
    }

    pub fn phi(&self) -> &LinearMap {
        &self.phi
    }

    fn id_v(&self) -> LinearMap {
        LinearMap::identity(&self.carrier)
    }

    /// Equal objects, equal carriers up to unit legs, and equal `φ`.
    pub fn same_as(&self, other: &OneCell) -> bool {
        same_object(&self.dom, &other.dom)
            && same_object(&self.cod, &other.cod)
            && legs_match(&self.carrier, &other.carrier)
            && self.phi == other.phi
    }
}

/// The two bimodule squares:
/// `(m₁⊗V)(A₁⊗φ)(φ⊗A₂) = φ(V⊗m₂)` and `φ(V⊗ι₂) = ι₁⊗V`.
pub fn check_one_cell(cell: &OneCell) -> Result<Report> {
    let m1 = cell.dom.mult_map();
    let m2 = cell.cod.mult_map();
    let a1 = cell.dom.identity_map();
    let a2 = cell.cod.identity_map();
    let v = cell.id_v();
    let mut report = Report::new();

    let lhs = m1
        .kron(&v)
        .compose(&a1.kron(&cell.phi))?
        .compose(&cell.phi.kron(&a2))?;
    let rhs = cell.phi.compose(&v.kron(&m2))?;
    report.equation("multiplication_square", &lhs, &rhs)?;

    let lhs = cell.phi.compose(&v.kron(&cell.cod.unit_map()))?;
    let rhs = cell.dom.unit_map().kron(&v);
    report.equation("unit_triangle", &lhs, &rhs)?;
    Ok(report)
}

/// `1_A = (ℚ, id_A)`.
pub fn identity_one_cell(alg: &Arc<Algebra>) -> OneCell {
    let n = alg.dim();
    OneCell::new(alg.clone(), alg.clone(), vec![1], LinearMap::identity(&[1, n]).with_legs(&[1, n], &[n, 1]).expect("square"))
        .expect("shape")
}

/// `f` then `g`: carrier `V⊗V′`, structure map `(φ⊗V′)∘(V⊗φ′)`.
pub fn compose_one_cells(f: &OneCell, g: &OneCell) -> Result<OneCell> {
    if !same_object(&f.cod, &g.dom) {
        return Err(object_mismatch("composite boundary", &f.cod, &g.dom));
    }
    let phi = f.phi.kron(&g.id_v()).compose(&f.id_v().kron(&g.phi))?;
    let mut carrier = f.carrier.clone();
    carrier.extend_from_slice(&g.carrier);
    OneCell::new(f.dom.clone(), g.cod.clone(), carrier, phi)
}

impl TwoCell {
    /// Checks boundary objects and the shape of `ρ: V → A₁⊗V′`; the
    /// coherence square is reported by [`check_two_cell`].
    pub fn new(src: OneCell, tgt: OneCell, rho: LinearMap) -> Result<Self> {
        if !same_object(&src.dom, &tgt.dom) || !same_object(&src.cod, &tgt.cod) {
            return Err(Error::ObjectMismatch(format!(
                "2-cell between {}→{} and {}→{}",
                src.dom.name(),
                src.cod.name(),
                tgt.dom.name(),
                tgt.cod.name()
            )));
        }
        let n1 = src.dom.dim();
        if rho.cols() != src.carrier_dim() || rho.rows() != n1 * tgt.carrier_dim() {
            return Err(Error::ShapeMismatch(format!(
                "ρ is {}x{} but V → A₁⊗V′ needs {}x{}",
                rho.rows(),
                rho.cols(),
                n1 * tgt.carrier_dim(),
                src.carrier_dim()
            )));
        }
        let mut cod_legs = vec![n1];
        cod_legs.extend_from_slice(&tgt.carrier);
        let rho = rho.with_legs(&src.carrier, &cod_legs)?;
        Ok(TwoCell { src, tgt, rho })
    }

    pub fn src(&self) -> &OneCell {
        &self.src
    }

    pub fn tgt(&self) -> &OneCell {
        &self.tgt
    }

    pub fn rho(&self) -> &LinearMap {
        &self.rho
    }

    /// Same boundaries and the same `ρ`.
    pub fn same_as(&self, other: &TwoCell) -> bool {
        self.src.same_as(&other.src) && self.tgt.same_as(&other.tgt) && self.rho == other.rho
    }

    /// Replaces the boundary 1-cells by equal ones (up to unit legs).
    pub fn retype(&self, src: &OneCell, tgt: &OneCell) -> Result<TwoCell> {
        if !self.src.same_as(src) || !self.tgt.same_as(tgt) {
            return Err(Error::ObjectMismatch("retyped boundary differs".into()));
        }
        TwoCell::new(src.clone(), tgt.clone(), self.rho.clone())
    }

    /// Records `self == other` as a named check with a witness.
    pub fn compare(&self, other: &TwoCell, name: &str, report: &mut Report) -> Result<()> {
        if !self.src.same_as(&other.src) || !self.tgt.same_as(&other.tgt) {
            report.push(name, false, Some("boundary 1-cells differ".into()));
            return Ok(());
        }
        report.equation(name, &self.rho, &other.rho)
    }
}

/// `(m₁⊗V′)(A₁⊗ψ)(ρ⊗A₂) = (m₁⊗V′)(A₁⊗ρ)φ`.
pub fn check_two_cell(t: &TwoCell) -> Result<Report> {
    let mut report = Report::new();
    let (lhs, rhs) = two_cell_square(&t.src, &t.tgt, &t.rho)?;
    report.equation("coherence_square", &lhs, &rhs)?;
    Ok(report)
}

fn two_cell_square(src: &OneCell, tgt: &OneCell, rho: &LinearMap) -> Result<(LinearMap, LinearMap)> {
    let m1 = src.dom.mult_map();
    let a1 = src.dom.identity_map();
    let a2 = src.cod.identity_map();
    let v2 = tgt.id_v();
    let m_v2 = m1.kron(&v2);
    let lhs = m_v2.compose(&a1.kron(&tgt.phi))?.compose(&rho.kron(&a2))?;
    let rhs = m_v2.compose(&a1.kron(rho))?.compose(&src.phi)?;
    Ok((lhs, rhs))
}

/// `ρ = ι₁⊗V`, the identity homomorphism of `A₁⊗V`.
pub fn identity_two_cell(cell: &OneCell) -> TwoCell {
    let rho = cell.dom.unit_map().kron(&cell.id_v());
    TwoCell::new(cell.clone(), cell.clone(), rho).expect("shape")
}

/// `t` after `s`: `ρ = (m₁⊗V″)(A₁⊗ρ_t)ρ_s`.
pub fn vertical_compose(s: &TwoCell, t: &TwoCell) -> Result<TwoCell> {
    if !s.tgt.same_as(&t.src) {
        return Err(Error::ObjectMismatch(
            "vertical composite: target of the first 2-cell is not the source of the second".into(),
        ));
    }
    let m1 = s.src.dom.mult_map();
    let a1 = s.src.dom.identity_map();
    let rho = m1.kron(&t.tgt.id_v()).compose(&a1.kron(&t.rho))?.compose(&s.rho)?;
    TwoCell::new(s.src.clone(), t.tgt.clone(), rho)
}

/// `f` followed by `t`: `ρ = (χ⊗V′)(W⊗ρ_t)` where `f = (W, χ)`.
pub fn whisker_left(f: &OneCell, t: &TwoCell) -> Result<TwoCell> {
    if !same_object(&f.cod, &t.src.dom) {
        return Err(object_mismatch("left whisker", &f.cod, &t.src.dom));
    }
    let rho = f.phi.kron(&t.tgt.id_v()).compose(&f.id_v().kron(&t.rho))?;
    TwoCell::new(compose_one_cells(f, &t.src)?, compose_one_cells(f, &t.tgt)?, rho)
}

/// `t` followed by `f`: `ρ = ρ_t⊗W`.
pub fn whisker_right(t: &TwoCell, f: &OneCell) -> Result<TwoCell> {
    if !same_object(&t.src.cod, &f.dom) {
        return Err(object_mismatch("right whisker", &t.src.cod, &f.dom));
    }
    let rho = t.rho.kron(&f.id_v());
    TwoCell::new(compose_one_cells(&t.src, f)?, compose_one_cells(&t.tgt, f)?, rho)
}

/// Horizontal composite of `s: f ⇒ f′` (first) and `t: g ⇒ g′` (second),
/// computed as `(s g′) ∘ (f t)`.
pub fn horizontal_compose(s: &TwoCell, t: &TwoCell) -> Result<TwoCell> {
    vertical_compose(&whisker_left(&s.src, t)?, &whisker_right(s, &t.tgt)?)
}

/// A basis of the space of 2-cells `src ⇒ tgt`, solved from the coherence
/// square.
pub fn two_cell_basis(src: &OneCell, tgt: &OneCell) -> Result<Vec<TwoCell>> {
    let n1 = src.dom.dim();
    let rows = n1 * tgt.carrier_dim();
    let cols = src.carrier_dim();
    let mut cod_legs = vec![n1];
    cod_legs.extend_from_slice(&tgt.carrier);
    // Column (r*cols + c) of the constraint matrix is the defect of E_rc.
    let mut columns = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut e = LinearMap::zeros(&src.carrier, &cod_legs);
            e.set(r, c, Rational::one());
            let (lhs, rhs) = two_cell_square(src, tgt, &e)?;
            columns.push(lhs.sub(&rhs)?.entries());
        }
    }
    let height = columns.first().map_or(0, Vec::len);
    let constraint = LinearMap::from_fn(&[rows * cols], &[height], |i, j| columns[j][i].clone());
    constraint
        .nullspace()
        .into_iter()
        .map(|v| {
            let rho = LinearMap::from_fn(&src.carrier, &cod_legs, |r, c| v[r * cols + c].clone());
            TwoCell::new(src.clone(), tgt.clone(), rho)
        })
        .collect()
}

/// Linear combination of 2-cells with a common boundary.
pub fn combine(cells: &[TwoCell], coeffs: &[Rational]) -> Result<TwoCell> {
    let first = cells.first().ok_or_else(|| Error::ShapeMismatch("empty combination".into()))?;
    let mut rho = LinearMap::zeros(first.rho.dom_legs(), first.rho.cod_legs());
    for (cell, q) in cells.iter().zip(coeffs) {
        if !cell.src.same_as(&first.src) || !cell.tgt.same_as(&first.tgt) {
            return Err(Error::ObjectMismatch("combining 2-cells with different boundaries".into()));
        }
        rho = rho.add(&cell.rho.scale(q))?;
    }
    TwoCell::new(first.src.clone(), first.tgt.clone(), rho)
}

/// The `(A₁, A₂)`-bimodule `A₁⊗V` presented by a 1-cell.
#[derive(Debug, Clone)]
pub struct Bimodule {
    pub left_algebra: Arc<Algebra>,
    pub right_algebra: Arc<Algebra>,
    /// Legs of the underlying space, `[n₁] ++ carrier`.
    pub legs: Vec<usize>,
    /// `A₁⊗M → M`.
    pub left_action: LinearMap,
    /// `M⊗A₂ → M`.
    pub right_action: LinearMap,
}

impl Bimodule {
    /// Module axioms for both actions and their compatibility.
    pub fn axioms(&self) -> Result<Report> {
        let m = LinearMap::identity(&self.legs);
        let a1 = self.left_algebra.identity_map();
        let a2 = self.right_algebra.identity_map();
        let (l, r) = (&self.left_action, &self.right_action);
        let mut report = Report::new();
        report.equation(
            "left_associativity",
            &l.compose(&self.left_algebra.mult_map().kron(&m))?,
            &l.compose(&a1.kron(l))?,
        )?;
        report.equation("left_unit", &l.compose(&self.left_algebra.unit_map().kron(&m))?, &m)?;
        report.equation(
            "right_associativity",
            &r.compose(&m.kron(&self.right_algebra.mult_map()))?,
            &r.compose(&r.kron(&a2))?,
        )?;
        report.equation("right_unit", &r.compose(&m.kron(&self.right_algebra.unit_map()))?, &m)?;
        report.equation(
            "actions_commute",
            &r.compose(&l.kron(&a2))?,
            &l.compose(&a1.kron(r))?,
        )?;
        Ok(report)
    }
}

/// Explicit actions on `A₁⊗V` without consulting [`check_one_cell`]: left by
/// `m₁⊗V`, right by `(m₁⊗V)(A₁⊗φ)`.
pub fn bimodule_of(cell: &OneCell) -> Result<Bimodule> {
    let m1 = cell.dom.mult_map();
    let v = cell.id_v();
    let left = m1.kron(&v);
    let right = left.compose(&cell.dom.identity_map().kron(&cell.phi))?;
    let mut legs = vec![cell.dom.dim()];
    legs.extend_from_slice(&cell.carrier);
    Ok(Bimodule {
        left_algebra: cell.dom.clone(),
        right_algebra: cell.cod.clone(),
        legs,
        left_action: left,
        right_action: right,
    })
}

/// [`bimodule_of`], failing with `AxiomFailure` unless every axiom holds.
pub fn realize_bimodule(cell: &OneCell) -> Result<Bimodule> {
    let b = bimodule_of(cell)?;
    let report = b.axioms()?;
    if !report.passed() {
        return Err(Error::AxiomFailure(report.summary()));
    }
    Ok(b)
}
