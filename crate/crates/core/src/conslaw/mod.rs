//! Conservation laws by multipliers, Noether's theorem and Ibragimov's
//! method, with the Hamiltonian structure.

pub mod current;
pub mod direct;
pub mod hamiltonian;
pub mod ibragimov;
pub mod law;
pub mod noether;

pub use direct::{divergence_residual, multiplier_pairing_check, trivially_equivalent, LawError};
pub use hamiltonian::{hamiltonian_check, hamiltonian_report, presymplectic_check, HamiltonianStructure, Presymplectic};
pub use ibragimov::{formal_lagrangian, ibragimov_flow, self_adjointness_check, FormalLagrangian};
pub use law::{ConservationLaw, Family};
pub use noether::{noether_flow, noether_w, variational_symmetry_test, NoetherError};
