//! Divergence residuals and multiplier pairings.

use crate::adjoint::pairing;
use crate::jet::{is_null_lagrangian, EvolutionSystem, JetPoly, SystemError};

use super::law::ConservationLaw;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LawError {
    #[error(transparent)]
    System(#[from] SystemError),
    #[error("law {label} lives in the {family:?} family but the system does not")]
    FamilyMismatch { label: String, family: super::Family },
}

/// `D_t density + D_x flux` reduced on shell of `sys`.
pub fn divergence_residual(cl: &ConservationLaw, sys: &EvolutionSystem) -> Result<JetPoly, LawError> {
    if sys.deps() != cl.family.deps() {
        return Err(LawError::FamilyMismatch { label: cl.label.clone(), family: cl.family });
    }
    Ok(sys.reduce(&cl.divergence())?)
}

/// `Σ_j G_j Λ_j - D_t density - D_x flux`, off shell.
pub fn multiplier_pairing_check(lambda: &[JetPoly], cl: &ConservationLaw, sys: &EvolutionSystem) -> JetPoly {
    &pairing(lambda, sys) - &cl.divergence()
}

/// Two laws differ by a trivial one: the density difference is a total
/// divergence and the difference is conserved on shell.
pub fn trivially_equivalent(
    a: &ConservationLaw,
    b: &ConservationLaw,
    sys: &EvolutionSystem,
) -> Result<bool, LawError> {
    let d = ConservationLaw::new("difference", &a.density - &b.density, &a.flux - &b.flux, a.family);
    Ok(is_null_lagrangian(&d.density, &a.family.deps()) && divergence_residual(&d, sys)?.is_zero())
}
