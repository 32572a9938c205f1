//! Hamiltonian form `(u, v)_t = -D δH` and the map `J = D⁻¹` from
//! symmetries to adjoint symmetries.

use serde::Serialize;

use crate::jet::{variational_derivative, Dep, EvolutionSystem, JetPoly, JetVar, LinearDiffOp};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianStructure {
    pub density: JetPoly,
    pub op: LinearDiffOp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonianReport {
    pub gradient: Vec<String>,
    pub gradient_matches: bool,
    pub flow_matches: bool,
    pub skew_adjoint: bool,
}

impl HamiltonianReport {
    pub fn passed(&self) -> bool {
        self.gradient_matches && self.flow_matches && self.skew_adjoint
    }
}

/// Compares `δH` with `expected_gradient` and `-D δH` with the right side
/// of `sys`.
pub fn hamiltonian_report(
    hs: &HamiltonianStructure,
    expected_gradient: &[JetPoly],
    sys: &EvolutionSystem,
) -> HamiltonianReport {
    let grad = variational_derivative(&hs.density, &sys.deps());
    let rhs: Vec<JetPoly> = sys.rules.iter().map(|r| -&r.g).collect();
    let flow = hs.op.apply(&grad).map(|v| v.iter().map(|p| -p).collect::<Vec<_>>());
    HamiltonianReport {
        gradient: grad.iter().map(ToString::to_string).collect(),
        gradient_matches: grad == expected_gradient,
        flow_matches: flow.is_ok_and(|f| f == rhs),
        skew_adjoint: hs.op.is_skew_adjoint(),
    }
}

pub fn hamiltonian_check(hs: &HamiltonianStructure, sys: &EvolutionSystem) -> bool {
    let grad = variational_derivative(&hs.density, &sys.deps());
    hamiltonian_report(hs, &grad, sys).flow_matches
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presymplectic {
    Exact,
    /// `D Q = -P`.
    Negated,
    /// `D Q - P` after rewriting in `u, v` (or the unconverted image when
    /// bare potentials survive).
    Mismatch(Vec<JetPoly>),
}

/// `q_(a+1, b) → u_(a, b)`, `r_(a+1, b) → v_(a, b)`; `None` if an
/// undifferentiated-in-x potential remains.
pub fn to_physical(p: &JetPoly) -> Option<JetPoly> {
    let bare = p.jet_vars().iter().any(|v| (v.dep == Dep::Q || v.dep == Dep::R) && v.dx == 0);
    if bare {
        return None;
    }
    Some(p.map_jets(|j| match j.dep {
        Dep::Q => JetVar::new(Dep::U, j.dx - 1, j.dt),
        Dep::R => JetVar::new(Dep::V, j.dx - 1, j.dt),
        _ => j,
    }))
}

/// Forward check of `Q = J P`: apply `D` to `Q` and compare with `P`.
pub fn presymplectic_check(op: &LinearDiffOp, p: &[JetPoly], q: &[JetPoly]) -> Presymplectic {
    let Ok(img) = op.apply(q) else {
        return Presymplectic::Mismatch(q.to_vec());
    };
    let Some(phys) = img.iter().map(to_physical).collect::<Option<Vec<_>>>() else {
        return Presymplectic::Mismatch(img);
    };
    if phys == p {
        return Presymplectic::Exact;
    }
    if phys.iter().zip(p).all(|(a, b)| a == &-b) {
        return Presymplectic::Negated;
    }
    Presymplectic::Mismatch(phys.iter().zip(p).map(|(a, b)| a - b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{self, p};

    fn hs(density: JetPoly) -> HamiltonianStructure {
        HamiltonianStructure { density, op: model::hamiltonian_operator() }
    }

    #[test]
    fn printed_structure() {
        let sys = model::dlw();
        let r = hamiltonian_report(&hs(model::hamiltonian_density()), &model::hamiltonian_gradient_printed(), &sys);
        assert!(r.passed(), "{r:?}");
        assert!(!hamiltonian_check(&hs(p("(1/2)*v[0,0]^2")), &sys));
        assert!(!hamiltonian_check(&hs(JetPoly::zero()), &sys));
    }

    #[test]
    fn presymplectic_pairs() {
        let d = model::hamiltonian_operator();
        let ps = model::characteristics_printed();
        let qs = model::presymplectic_printed();
        assert_eq!(presymplectic_check(&d, &ps[0], &qs[0]), Presymplectic::Exact);
        assert_eq!(presymplectic_check(&d, &ps[1], &qs[1]), Presymplectic::Negated);
        assert_eq!(presymplectic_check(&d, &ps[2], &qs[2]), Presymplectic::Exact);
        let Presymplectic::Mismatch(res) = presymplectic_check(&d, &ps[3], &qs[3]) else { panic!() };
        assert_eq!(res, vec![p("(1/2)*u[0,0]"), p("(1/2)*v[0,0]")]);
        assert_eq!(presymplectic_check(&d, &ps[3], &model::presymplectic_q4_corrected()), Presymplectic::Exact);
        let z = vec![JetPoly::zero(); 2];
        assert_eq!(presymplectic_check(&d, &z, &z), Presymplectic::Exact);
    }
}
