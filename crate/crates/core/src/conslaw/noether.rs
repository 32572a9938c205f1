//! Noether's theorem for the potential Lagrangian.

use crate::jet::{directional, is_null_lagrangian, Axis, Dep, JetPoly};

use super::current::{current, MixedSlot};
use super::law::{ConservationLaw, Family};

const QR: [Dep; 2] = [Dep::Q, Dep::R];

/// `pr V (L)`.
pub fn prolonged_action(v: &[JetPoly], l: &JetPoly) -> JetPoly {
    directional(std::slice::from_ref(l), &QR, v).remove(0)
}

/// `(W^x, W^t)` with `pr V L = E(L)·η + D_x W^x + D_t W^t`.
pub fn noether_w(eta: &[JetPoly], l: &JetPoly) -> Result<(JetPoly, JetPoly), MixedSlot> {
    Ok((current(l, &QR, eta, Axis::X)?, current(l, &QR, eta, Axis::T)?))
}

/// The same pair written out by hand for `L = -q_x r_t - r_x²/2 - q_x² r_x/2 + q_xx²/6`.
pub fn noether_w_closed(eta: &[JetPoly]) -> (JetPoly, JetPoly) {
    let j = |d, a, b| JetPoly::var(d, a, b);
    let (q, r) = (Dep::Q, Dep::R);
    let (e1, e2) = (&eta[0], &eta[1]);
    let w1 = -&(e1 * &j(r, 0, 1))
        - &j(r, 1, 0) * e2
        - (&j(q, 1, 0).pow(2) * e2).scale(&crate::jet::rat(1, 2))
        - &(&j(q, 1, 0) * &j(r, 1, 0)) * e1
        - (e1 * &j(q, 3, 0)).scale(&crate::jet::rat(1, 3))
        + (&j(q, 2, 0) * &e1.dx()).scale(&crate::jet::rat(1, 3));
    let w2 = -&(&j(q, 1, 0) * e2);
    (w1, w2)
}

/// `pr V (L)` is a total divergence.
pub fn variational_symmetry_test(v: &[JetPoly], l: &JetPoly) -> bool {
    is_null_lagrangian(&prolonged_action(v, l), &QR)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NoetherError {
    #[error("pr V (L) - D_x A^x - D_t A^t = {0}, not zero")]
    InvalidA(JetPoly),
    #[error(transparent)]
    Mixed(#[from] MixedSlot),
}

/// `f¹ = W^x - A^x` (flux) and `f² = W^t - A^t` (density).
pub fn noether_flow(
    label: &str,
    v: &[JetPoly],
    l: &JetPoly,
    a: &(JetPoly, JetPoly),
) -> Result<ConservationLaw, NoetherError> {
    let rest = &prolonged_action(v, l) - &(&a.0.dx() + &a.1.dt());
    if !rest.is_zero() {
        return Err(NoetherError::InvalidA(rest));
    }
    let (wx, wt) = noether_w(v, l)?;
    Ok(ConservationLaw::new(label, &wt - &a.1, &wx - &a.0, Family::Potential))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conslaw::divergence_residual;
    use crate::model::{self, p};

    #[test]
    fn euler_operators_give_the_potential_system() {
        let e = crate::jet::variational_derivative(&model::lagrangian(), &QR);
        let sys = model::potential().equations();
        assert_eq!(e[0], sys[1]);
        assert_eq!(e[1], sys[0]);
    }

    #[test]
    fn closed_form_agrees() {
        let l = model::lagrangian();
        for v in model::potential_symmetries() {
            assert_eq!(noether_w(&v, &l).unwrap(), noether_w_closed(&v));
        }
        let (_, w2) = noether_w(&model::potential_symmetries()[0], &l).unwrap();
        assert_eq!(w2, p("(-1)*q[1,0]*r[1,0]"));
        let zero = [JetPoly::zero(), JetPoly::zero()];
        assert_eq!(noether_w(&zero, &l).unwrap(), (JetPoly::zero(), JetPoly::zero()));
    }

    #[test]
    fn variational_symmetries() {
        let l = model::lagrangian();
        let vs = model::potential_symmetries();
        assert!(variational_symmetry_test(&vs[0], &l));
        assert!(variational_symmetry_test(&vs[2], &l));
        assert!(!variational_symmetry_test(&vs[3], &l));
        assert!(variational_symmetry_test(&[JetPoly::zero(), JetPoly::zero()], &l));
    }

    #[test]
    fn flows_match_print() {
        let l = model::lagrangian();
        let sys = model::potential();
        for ((v, a), want) in model::potential_symmetries().iter().zip(model::noether_a()).zip(model::noether_flows_printed()) {
            let f = noether_flow(&want.label, v, &l, &a).unwrap();
            assert!(divergence_residual(&f, &sys).unwrap().is_zero());
            assert_eq!(f, want);
        }
    }

    #[test]
    fn wrong_a_is_rejected() {
        let l = model::lagrangian();
        let v = &model::potential_symmetries()[0];
        let bad = (JetPoly::zero(), l.clone());
        assert!(matches!(noether_flow("x", v, &l, &bad), Err(NoetherError::InvalidA(_))));
    }
}
