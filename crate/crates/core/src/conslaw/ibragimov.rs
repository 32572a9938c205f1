//! Formal Lagrangian, strict self-adjointness and Ibragimov's conserved
//! vectors.

use crate::jet::{variational_derivative, Axis, Dep, EvolutionSystem, JetPoly, JetVar};
use crate::symmetry::PointSymmetry;

use super::current::{current, MixedSlot};
use super::law::{ConservationLaw, Family};

/// `L = Σ w^i F_i` with `F` the equations listed in reverse order, so that
/// `w¹` multiplies the second equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalLagrangian {
    pub density: JetPoly,
    pub equations: Vec<JetPoly>,
    pub multipliers: Vec<Dep>,
}

pub fn formal_lagrangian(sys: &EvolutionSystem) -> FormalLagrangian {
    let mut equations = sys.equations();
    equations.reverse();
    let multipliers = vec![Dep::W1, Dep::W2];
    let density = equations.iter().zip(&multipliers).map(|(f, w)| &JetPoly::var(*w, 0, 0) * f).sum();
    FormalLagrangian { density, equations, multipliers }
}

/// Replaces each multiplier jet by the same jet of `targets[i]`.
pub fn substitute_multipliers(p: &JetPoly, targets: &[Dep]) -> JetPoly {
    p.map_jets(|j| match j.dep {
        Dep::W1 => JetVar::new(targets[0], j.dx, j.dt),
        Dep::W2 => JetVar::new(targets[1], j.dx, j.dt),
        _ => j,
    })
}

/// Adjoint equations `F*_α = δL/δu^α`.
pub fn adjoint_equations(fl: &FormalLagrangian, sys: &EvolutionSystem) -> Vec<JetPoly> {
    variational_derivative(&fl.density, &sys.deps())
}

/// `F*` after `w^i = targets[i]` equals `-F`.
pub fn self_adjoint_under(sys: &EvolutionSystem, targets: &[Dep]) -> bool {
    let fl = formal_lagrangian(sys);
    adjoint_equations(&fl, sys)
        .iter()
        .zip(&fl.equations)
        .all(|(a, f)| substitute_multipliers(a, targets) == -f)
}

/// Strict self-adjointness with `w = (u, v)`.
pub fn self_adjointness_check(sys: &EvolutionSystem) -> bool {
    self_adjoint_under(sys, &sys.deps())
}

/// `(C^t, C^x)` on the extended space, before substituting `w`.
pub fn ibragimov_vector(x: &PointSymmetry, sys: &EvolutionSystem) -> Result<ConservationLaw, MixedSlot> {
    let fl = formal_lagrangian(sys);
    let w = x.characteristic();
    let deps = sys.deps();
    let cx = &(&x.xi_x * &fl.density) + &current(&fl.density, &deps, &w, Axis::X)?;
    let ct = &(&x.xi_t * &fl.density) + &current(&fl.density, &deps, &w, Axis::T)?;
    Ok(ConservationLaw::new("ibragimov", ct, cx, Family::Physical))
}

/// Conserved vector of `X` with `w = (u, v)` substituted.
pub fn ibragimov_flow(x: &PointSymmetry, sys: &EvolutionSystem) -> Result<ConservationLaw, MixedSlot> {
    let c = ibragimov_vector(x, sys)?;
    let deps = sys.deps();
    Ok(substituted(&c, &deps))
}

pub fn substituted(c: &ConservationLaw, targets: &[Dep]) -> ConservationLaw {
    ConservationLaw::new(
        &c.label,
        substitute_multipliers(&c.density, targets),
        substitute_multipliers(&c.flux, targets),
        c.family,
    )
}
