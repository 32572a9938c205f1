//! Adjoint symmetries, multipliers and the action of symmetries on them.

pub mod table;

use crate::jet::{directional, frechet, is_null_lagrangian, EvolutionSystem, JetPoly, LinearDiffOp, SystemError};

pub use table::{build_action_table, kernel_is_ideal, sq_bracket, ActionTable, BracketError, SqBracket, TableError};

/// Fréchet derivative `G'` of the system map.
pub fn linearization(sys: &EvolutionSystem) -> LinearDiffOp {
    frechet(&sys.equations(), &sys.deps())
}

/// `G'*(Q)` reduced on shell; zero exactly for adjoint symmetries.
pub fn adjoint_determining_residual(q: &[JetPoly], sys: &EvolutionSystem) -> Result<Vec<JetPoly>, SystemError> {
    let r = apply(&linearization(sys).formal_adjoint(), q)?;
    sys.reduce_all(&r)
}

/// `Σ_j G_j Q_j`, off shell.
pub fn pairing(q: &[JetPoly], sys: &EvolutionSystem) -> JetPoly {
    sys.equations().iter().zip(q).map(|(g, l)| g * l).sum()
}

/// True when the pairing with the equations is a total divergence.
pub fn multiplier_test(q: &[JetPoly], sys: &EvolutionSystem) -> bool {
    is_null_lagrangian(&pairing(q, sys), &sys.deps())
}

/// `R_P` with `G'(P) = R_P(G)`, read off by rewriting reducible jets in
/// terms of the equations. The on-shell remainder must vanish for a
/// symmetry and is returned alongside.
pub fn r_operator(p: &[JetPoly], sys: &EvolutionSystem) -> Result<(LinearDiffOp, Vec<JetPoly>), SystemError> {
    let lin = directional(&sys.equations(), &sys.deps(), p);
    sys.operator_in_equations(&lin)
}

/// `R_Q` with `G'*(Q) = R_Q(G)`.
pub fn r_q_operator(q: &[JetPoly], sys: &EvolutionSystem) -> Result<(LinearDiffOp, Vec<JetPoly>), SystemError> {
    let img = apply(&linearization(sys).formal_adjoint(), q)?;
    sys.operator_in_equations(&img)
}

fn apply(op: &LinearDiffOp, w: &[JetPoly]) -> Result<Vec<JetPoly>, SystemError> {
    op.apply(w).map_err(|e| SystemError::Width { expected: e.cols, got: e.got })
}

/// `Q'(P) + R_P*(Q)` on shell.
pub fn action1(p: &[JetPoly], q: &[JetPoly], sys: &EvolutionSystem) -> Result<Vec<JetPoly>, SystemError> {
    let (rp, _) = r_operator(p, sys)?;
    let a = directional(q, &sys.deps(), p);
    let b = apply(&rp.formal_adjoint(), q)?;
    let sum: Vec<JetPoly> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
    sys.reduce_all(&sum)
}

/// `R_P*(Q) - R_Q*(P)` on shell.
pub fn action2(p: &[JetPoly], q: &[JetPoly], sys: &EvolutionSystem) -> Result<Vec<JetPoly>, SystemError> {
    let (rp, _) = r_operator(p, sys)?;
    let (rq, _) = r_q_operator(q, sys)?;
    let a = apply(&rp.formal_adjoint(), q)?;
    let b = apply(&rq.formal_adjoint(), p)?;
    let diff: Vec<JetPoly> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
    sys.reduce_all(&diff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{self, p};

    #[test]
    fn linearization_on_constant_direction() {
        let g = linearization(&model::dlw());
        let r = g.apply(&[JetPoly::one(), JetPoly::zero()]).unwrap();
        assert_eq!(r[0], p("u[1,0]"));
        assert!(g.apply(&[JetPoly::zero(), JetPoly::zero()]).unwrap().iter().all(JetPoly::is_zero));
    }

    #[test]
    fn translation_solves_linearization() {
        let sys = model::dlw();
        let r = linearization(&sys).apply(&model::characteristics_printed()[1]).unwrap();
        assert!(sys.reduce_all(&r).unwrap().iter().all(JetPoly::is_zero));
    }

    #[test]
    fn adjoint_residuals() {
        let sys = model::dlw();
        let qs = model::adjoint_symmetries_printed();
        assert!(adjoint_determining_residual(&qs[4], &sys).unwrap().iter().all(JetPoly::is_zero));
        assert!(adjoint_determining_residual(&qs[3], &sys).unwrap().iter().all(JetPoly::is_zero));
        let r = adjoint_determining_residual(&[p("u[0,0]"), JetPoly::zero()], &sys).unwrap();
        assert_eq!(r[0], p("v[1,0]"));
    }

    #[test]
    fn multipliers() {
        let sys = model::dlw();
        assert!(multiplier_test(&[p("v[0,0]"), p("u[0,0]")], &sys));
        assert!(multiplier_test(&[p("1"), p("1")], &sys));
        assert!(!multiplier_test(&[p("u[1,0]"), JetPoly::zero()], &sys));
    }

    #[test]
    fn printed_r_operators() {
        let sys = model::dlw();
        for (pp, want) in model::characteristics_printed().iter().zip(model::r_p_printed()) {
            let (rp, rest) = r_operator(pp, &sys).unwrap();
            assert!(rest.iter().all(JetPoly::is_zero));
            assert_eq!(rp, want);
        }
    }

    #[test]
    fn r_p2_on_swapped_pair() {
        let r = model::r_p_printed()[1].apply(&[p("v[0,0]"), p("u[0,0]")]).unwrap();
        assert_eq!(r, vec![p("(-1)*v[1,0]"), p("(-1)*u[1,0]")]);
    }

    #[test]
    fn actions_on_sample_cells() {
        let sys = model::dlw();
        let ps = model::characteristics_printed();
        let qs = model::adjoint_symmetries();
        assert_eq!(action1(&ps[2], &qs[2], &sys).unwrap(), qs[3]);
        let m2q1: Vec<JetPoly> = qs[0].iter().map(|c| c.scale_int(-2)).collect();
        assert_eq!(action1(&ps[3], &qs[0], &sys).unwrap(), m2q1);
        assert!(action1(&ps[0], &qs[4], &sys).unwrap().iter().all(JetPoly::is_zero));
        assert_eq!(action2(&ps[2], &qs[3], &sys).unwrap(), qs[5]);
        let zero = vec![JetPoly::zero(); 2];
        assert_eq!(action2(&zero, &qs[1], &sys).unwrap(), zero);
    }
}
