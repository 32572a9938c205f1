//! Traveling waves, first integrals and closed-form solution families.

pub mod families;
pub mod ode;
pub mod tanh;
pub mod traveling;

pub use traveling::{first_integral, reduce_traveling, FirstIntegral, FirstIntegralError, TravelingWaveOde};
pub use families::{family, scan_family, verify_family, FamilyError, ScanEntry, SolitonFamily, FAMILY_IDS};
pub use ode::{integral_drift, kink_state, rk4_step, OdeRhs, OdeState};
pub use tanh::{tanh_ansatz_system, TanhEquation};
