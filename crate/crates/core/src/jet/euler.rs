//! Euler operators (variational derivatives).

use super::poly::JetPoly;
use super::symbol::{Dep, Sym};

/// `Σ_{a,b} (-1)^{a+b} D_x^a D_t^b ∂p/∂dep_{a,b}` over every jet slot of `dep`.
pub fn euler_operator(p: &JetPoly, dep: Dep) -> JetPoly {
    let mut out = JetPoly::zero();
    for v in p.jet_vars() {
        if v.dep != dep {
            continue;
        }
        let mut term = p.partial(&Sym::Jet(v)).d(v.dx, v.dt);
        if (v.dx + v.dt) % 2 == 1 {
            term = -term;
        }
        out += term;
    }
    out
}

/// Euler operators for each listed dependent variable.
pub fn variational_derivative(p: &JetPoly, deps: &[Dep]) -> Vec<JetPoly> {
    deps.iter().map(|d| euler_operator(p, *d)).collect()
}

/// True when `p` is annihilated by every Euler operator of the listed
/// family, i.e. `p` is a total divergence.
pub fn is_null_lagrangian(p: &JetPoly, deps: &[Dep]) -> bool {
    variational_derivative(p, deps).iter().all(JetPoly::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(a: u32, b: u32) -> JetPoly {
        JetPoly::var(Dep::U, a, b)
    }

    #[test]
    fn divergence_is_annihilated() {
        let p = u(0, 0).pow(2).dx();
        assert!(euler_operator(&p, Dep::U).is_zero());
    }

    #[test]
    fn squared_slope() {
        assert_eq!(euler_operator(&u(1, 0).pow(2), Dep::U), u(2, 0).scale_int(-2));
    }

    #[test]
    fn mixed_slot_counts() {
        // E_u(u * u_xt) = u_xt + D_x D_t u = 2 u_xt
        let p = u(0, 0) * u(1, 1);
        assert_eq!(euler_operator(&p, Dep::U), u(1, 1).scale_int(2));
    }
}
