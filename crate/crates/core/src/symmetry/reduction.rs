//! Similarity reductions: substitute an invariant ansatz into the system.
//!
//! The reduced unknowns `f, g` are jets `f[k,0]`, `g[k,0]` of one variable,
//! which is stored in the `x` slot. Total derivatives act on the ansatz
//! through caller-supplied derivations.

use crate::jet::{Axis, Dep, EvolutionSystem, JetPoly, JetVar, Param, Sym};

/// Replaces every jet of `sys`'s dependent variables by the matching
/// derivative of the ansatz, computed with the derivations `dx`, `dt`.
pub fn substitute_ansatz(
    eq: &JetPoly,
    ansatz: &[(Dep, JetPoly)],
    dx: &dyn Fn(&Sym) -> JetPoly,
    dt: &dyn Fn(&Sym) -> JetPoly,
) -> JetPoly {
    let derive = |p: &JetPoly, v: JetVar| {
        let mut q = p.clone();
        for _ in 0..v.dx {
            q = q.derive_with(dx);
        }
        for _ in 0..v.dt {
            q = q.derive_with(dt);
        }
        q
    };
    eq.substitute(|s| {
        let v = s.as_jet()?;
        let (_, base) = ansatz.iter().find(|(d, _)| *d == v.dep)?;
        Some(derive(base, v))
    })
}

fn profile_lift(s: &Sym) -> Option<JetPoly> {
    match s {
        Sym::Jet(v) if v.dep == Dep::F || v.dep == Dep::G => Some(JetPoly::jet(v.lift(Axis::X))),
        _ => None,
    }
}

/// `u = t + f(z)`, `v = g(z)`, `z = t²/2 - x`.
pub fn reduce_x1_x3(sys: &EvolutionSystem) -> Vec<JetPoly> {
    let dx = |s: &Sym| match profile_lift(s) {
        Some(p) => -p,
        None => JetPoly::zero(),
    };
    let dt = |s: &Sym| match (profile_lift(s), s) {
        (Some(p), _) => JetPoly::t() * p,
        (None, Sym::T) => JetPoly::one(),
        _ => JetPoly::zero(),
    };
    let ansatz = [
        (Dep::U, JetPoly::t() + JetPoly::var(Dep::F, 0, 0)),
        (Dep::V, JetPoly::var(Dep::G, 0, 0)),
    ];
    sys.equations().iter().map(|e| substitute_ansatz(e, &ansatz, &dx, &dt)).collect()
}

/// Cancels `s · si = 1` in every monomial.
fn cancel_roots(p: &JetPoly) -> JetPoly {
    let s = Sym::Param(Param::ROOT_T);
    let si = Sym::Param(Param::INV_ROOT_T);
    let mut out = JetPoly::zero();
    for (m, c) in p.terms() {
        let (a, b) = (m.exponent(&s), m.exponent(&si));
        let k = a.min(b);
        let (_, rest) = m.split(|x| *x == s || *x == si);
        let mut mono = JetPoly::term(c.clone(), rest);
        mono = mono * JetPoly::sym(s).pow(a - k) * JetPoly::sym(si).pow(b - k);
        out += mono;
    }
    out
}

/// `u = f(R)/√t`, `v = g(R)/t`, `R = (x + 2)/√t`; the equations are
/// multiplied by `t^{3/2}` and `t²` so that the result is free of `t`.
pub fn reduce_x2_x4(sys: &EvolutionSystem) -> Vec<JetPoly> {
    let s = JetPoly::param(Param::ROOT_T);
    let si = JetPoly::param(Param::INV_ROOT_T);
    let half = JetPoly::rat(1, 2);
    let dx = {
        let si = si.clone();
        move |x: &Sym| match profile_lift(x) {
            Some(p) => &si * &p,
            None => JetPoly::zero(),
        }
    };
    let dt = {
        let si = si.clone();
        let half = half.clone();
        move |x: &Sym| match (profile_lift(x), x) {
            (Some(p), _) => -(&half * &JetPoly::x() * si.pow(2) * p),
            (None, Sym::Param(Param::ROOT_T)) => &half * &si,
            (None, Sym::Param(Param::INV_ROOT_T)) => -(&half * &si.pow(3)),
            _ => JetPoly::zero(),
        }
    };
    let ansatz = [
        (Dep::U, JetPoly::var(Dep::F, 0, 0) * si.clone()),
        (Dep::V, JetPoly::var(Dep::G, 0, 0) * si.pow(2)),
    ];
    let weights = [s.pow(3), s.pow(4)];
    sys.equations()
        .iter()
        .zip(weights)
        .map(|(e, w)| cancel_roots(&(substitute_ansatz(e, &ansatz, &dx, &dt) * w)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model;

    #[test]
    fn galilean_reduction_matches() {
        assert_eq!(reduce_x1_x3(&model::dlw()), model::reduced_x1_x3_printed());
    }

    #[test]
    fn scaling_reduction_matches() {
        assert_eq!(reduce_x2_x4(&model::dlw()), model::reduced_x2_x4_printed());
    }

    #[test]
    fn invariant_solution_of_scaling_reduction() {
        // f = R, g = c1
        let eqs = reduce_x2_x4(&model::dlw());
        for e in eqs {
            let r = e.substitute(|s| match s {
                Sym::Jet(v) if v.dep == Dep::F => Some(match v.dx {
                    0 => JetPoly::x(),
                    1 => JetPoly::one(),
                    _ => JetPoly::zero(),
                }),
                Sym::Jet(v) if v.dep == Dep::G => {
                    Some(if v.dx == 0 { JetPoly::param(Param::C1) } else { JetPoly::zero() })
                }
                _ => None,
            });
            assert!(r.is_zero(), "{r}");
        }
    }
}
