//! Weak Doi-Hopf data and their duality transformation.

use crate::comodact::{
    check_comodule_algebra, check_module_coalgebra, check_nondegenerate_action,
    check_nondegenerate_coaction, ActionSide, CoactionSide, WeakAction, WeakCoaction,
};
use crate::hopfcore::{dual_wba, AlgebraData, CoalgebraData, WeakBialgebra};
use crate::kernel::{LinMap, Tensor};
use crate::report::Report;

use super::DoiHopfError;

/// Orientation of a weak Doi-Hopf datum.
///
/// A right datum is `(H, A, C)` with `A` a left comodule algebra and `C` a
/// right module coalgebra; a left datum mirrors both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatumSide {
    Right,
    Left,
}

/// A validated weak Doi-Hopf datum.
#[derive(Debug, Clone, PartialEq)]
pub struct DoiHopfDatum {
    side: DatumSide,
    coaction: WeakCoaction,
    action: WeakAction,
    nondegenerate: bool,
}

impl DoiHopfDatum {
    pub fn side(&self) -> DatumSide {
        self.side
    }

    pub fn bialgebra(&self) -> &WeakBialgebra {
        &self.coaction.bialgebra
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.coaction.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.action.coalgebra
    }

    pub fn coaction(&self) -> &WeakCoaction {
        &self.coaction
    }

    pub fn action(&self) -> &WeakAction {
        &self.action
    }

    pub fn nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    /// The dual algebra `Ĉ` of the module coalgebra.
    pub fn dual_c_algebra(&self) -> AlgebraData {
        self.coalgebra().dual_algebra()
    }

    /// The dual coalgebra `Â` of the comodule algebra.
    pub fn dual_a_coalgebra(&self) -> CoalgebraData {
        self.algebra().dual_coalgebra()
    }
}

/// Validates the constituents and assembles a datum; the non-degeneracy
/// flag records whether both the coaction and the action are
/// non-degenerate.
pub fn build_datum(
    coaction: WeakCoaction,
    action: WeakAction,
    side: DatumSide,
) -> Result<DoiHopfDatum, DoiHopfError> {
    let expected = match side {
        DatumSide::Right => (CoactionSide::Left, ActionSide::Right),
        DatumSide::Left => (CoactionSide::Right, ActionSide::Left),
    };
    if coaction.side != expected.0 || action.side != expected.1 {
        return Err(DoiHopfError::SideMismatch(format!(
            "datum {side:?} needs coaction {:?} and action {:?}",
            expected.0, expected.1
        )));
    }
    if coaction.bialgebra != action.bialgebra {
        return Err(DoiHopfError::SideMismatch(
            "coaction and action live over different bialgebras".into(),
        ));
    }
    let mut report = Report::new();
    report.merge("", check_comodule_algebra(&coaction));
    report.merge("", check_module_coalgebra(&action));
    if !report.all_pass() {
        return Err(DoiHopfError::AxiomFailure(report));
    }
    let nd_coaction = check_nondegenerate_coaction(&coaction);
    let nd_action = check_nondegenerate_action(&action);
    let nondegenerate =
        nd_coaction.passed("nondeg.coaction") && nd_action.passed("nondeg.action");
    Ok(DoiHopfDatum {
        side,
        coaction,
        action,
        nondegenerate,
    })
}

/// Assembles a datum without running the axiom checks. Intended for
/// candidates that deliberately violate axioms, so that failure paths and
/// axiom-transposition behaviour can be exercised; such a value reports
/// whatever the constituent checkers find, it proves nothing by itself.
pub fn assemble_datum_unchecked(
    coaction: WeakCoaction,
    action: WeakAction,
    side: DatumSide,
    nondegenerate: bool,
) -> DoiHopfDatum {
    DoiHopfDatum {
        side,
        coaction,
        action,
        nondegenerate,
    }
}

/// The dual of a datum: a right datum `(H, A, C)` maps to the left datum
/// `(Ĥ, Ĉ, Â)` and vice versa, on the dual bases. The transformation is
/// involutive on the nose because double-dual coordinates are identical.
pub fn dual_datum(d: &DoiHopfDatum) -> Result<DoiHopfDatum, DoiHopfError> {
    let (coaction, action, side) = dual_components(d)?;
    build_datum(coaction, action, side)
}

/// The dual coaction and action of a datum, before any validation; the
/// axiom checkers can then be run on the pieces individually, which is
/// how the axiom-transposition correspondence is exercised on broken
/// candidates.
pub fn dual_components(
    d: &DoiHopfDatum,
) -> Result<(WeakCoaction, WeakAction, DatumSide), DoiHopfError> {
    let h_dual = dual_wba(d.bialgebra())?;
    let field = d.bialgebra().field();
    let (dh, da, dc) = (
        d.bialgebra().dim(),
        d.algebra().dim(),
        d.coalgebra().dim(),
    );
    let act = &d.action().act;
    let rho = &d.coaction().rho;
    match d.side() {
        DatumSide::Right => {
            // New comodule algebra: Ĉ with the right coaction
            // ρ̂(ĉ) = Σ_i (b_i ▷ ĉ) ⊗ β^i where (h ▷ ĉ)(d) = ĉ(d·h).
            let new_algebra = d.dual_c_algebra();
            let new_rho = LinMap::from_fn(field, dc * dh, dc, |row, j| {
                let (k, i) = (row / dh, row % dh);
                act.get(&[k, i, j]).clone()
            });
            let coaction = WeakCoaction::new(
                CoactionSide::Right,
                h_dual.clone(),
                new_algebra,
                new_rho,
            )?;
            // New module coalgebra: Â with the left action
            // φ · â = (φ ⊗ â) ∘ ρ.
            let new_coalgebra = d.dual_a_coalgebra();
            let new_act = Tensor::from_fn(field, &[da, dh, da], |idx| {
                let (j, i, k) = (idx[0], idx[1], idx[2]);
                rho.entry(i * da + j, k).clone()
            });
            let action = WeakAction::new(ActionSide::Left, h_dual, new_coalgebra, new_act)?;
            Ok((coaction, action, DatumSide::Left))
        }
        DatumSide::Left => {
            // New comodule algebra: Ĉ with the left coaction
            // ρ̂(ĉ) = Σ_i β^i ⊗ (ĉ ◁ b_i) where (ĉ ◁ h)(d) = ĉ(h·d).
            let new_algebra = d.dual_c_algebra();
            let new_rho = LinMap::from_fn(field, dh * dc, dc, |row, j| {
                let (i, k) = (row / dc, row % dc);
                act.get(&[k, i, j]).clone()
            });
            let coaction = WeakCoaction::new(
                CoactionSide::Left,
                h_dual.clone(),
                new_algebra,
                new_rho,
            )?;
            // New module coalgebra: Â with the right action
            // â · φ = (â ⊗ φ) ∘ ρ.
            let new_coalgebra = d.dual_a_coalgebra();
            let new_act = Tensor::from_fn(field, &[da, dh, da], |idx| {
                let (j, i, k) = (idx[0], idx[1], idx[2]);
                rho.entry(j * dh + i, k).clone()
            });
            let action = WeakAction::new(ActionSide::Right, h_dual, new_coalgebra, new_act)?;
            Ok((coaction, action, DatumSide::Right))
        }
    }
}
