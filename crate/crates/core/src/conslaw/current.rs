//! Boundary currents of first variations.

use crate::jet::{Axis, Dep, JetPoly, Sym};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("density depends on the mixed derivative {0}; only pure x or t slots are supported")]
pub struct MixedSlot(pub String);

fn along(axis: Axis, m: u32) -> (u32, u32) {
    match axis {
        Axis::X => (m, 0),
        Axis::T => (0, m),
    }
}

/// `Σ_α Σ_k D^k(W^α) Σ_{m>k} (-D)^{m-k-1} ∂L/∂u^α_(m)` along one axis, the
/// part of `Σ_α W^α ∂L/∂u^α_(m)`-type variations that is a total
/// derivative in that direction. With both axes,
/// `Σ D^K W ∂L/∂u_K = E(L)·W + D_x C^x + D_t C^t`.
pub fn current(l: &JetPoly, deps: &[Dep], w: &[JetPoly], axis: Axis) -> Result<JetPoly, MixedSlot> {
    let mut out = JetPoly::zero();
    for v in l.jet_vars() {
        if deps.contains(&v.dep) && v.dx > 0 && v.dt > 0 {
            return Err(MixedSlot(v.to_string()));
        }
    }
    for (dep, wa) in deps.iter().zip(w) {
        let top = l
            .jet_vars()
            .iter()
            .filter(|v| v.dep == *dep)
            .map(|v| match axis {
                Axis::X => v.dx,
                Axis::T => v.dt,
            })
            .max()
            .unwrap_or(0);
        let mut dw = wa.clone();
        for k in 0..top {
            let mut inner = JetPoly::zero();
            for m in (k + 1)..=top {
                let (a, b) = along(axis, m);
                let mut piece = l.partial(&Sym::jet(*dep, a, b));
                for _ in 0..(m - k - 1) {
                    piece = -piece.total_derivative(axis);
                }
                inner += piece;
            }
            out += &dw * &inner;
            dw = dw.total_derivative(axis);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{directional, variational_derivative};
    use crate::model::{self, p};

    #[test]
    fn first_variation_splits() {
        let l = model::lagrangian();
        let w = vec![p("x*q[0,1] + q[2,0]"), p("t*r[1,0]^2")];
        let lhs = directional(std::slice::from_ref(&l), &model::QR, &w).remove(0);
        let e = variational_derivative(&l, &model::QR);
        let cx = current(&l, &model::QR, &w, Axis::X).unwrap();
        let ct = current(&l, &model::QR, &w, Axis::T).unwrap();
        let rhs = &(&(&e[0] * &w[0]) + &(&e[1] * &w[1])) + &(&cx.dx() + &ct.dt());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_slots_rejected() {
        assert!(current(&p("u[1,1]^2"), &model::UV, &[p("1"), p("0")], Axis::X).is_err());
    }
}
