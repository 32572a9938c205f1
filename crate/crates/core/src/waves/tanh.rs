//! Coefficient system of the ansatz `u = a0 + a1 T`, `v = b0 + b1 T + b2 T²`
//! with `T = tanh ξ`, `ξ = x - μt`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::jet::{rat, Dep, JetPoly, Param, Rat, Sym};

use super::traveling::{mu, reduce_traveling};

fn par(p: Param) -> JetPoly {
    JetPoly::param(p)
}

fn tanh_sym() -> Sym {
    Sym::Param(Param::TANH)
}

/// `d/dξ` on polynomials in `T`, using `T' = 1 - T²`.
pub fn d_xi(f: &JetPoly) -> JetPoly {
    let t = par(Param::TANH);
    &(&JetPoly::one() - &t.pow(2)) * &f.partial(&tanh_sym())
}

fn nth(f: &JetPoly, n: u32) -> JetPoly {
    (0..n).fold(f.clone(), |g, _| d_xi(&g))
}

/// One coefficient: equation index and power of `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TanhEquation {
    pub equation: usize,
    pub power: u32,
    pub poly: JetPoly,
}

/// Substitutes the ansatz into the traveling-wave equations and collects
/// powers of `T`.
pub fn tanh_ansatz_system() -> Vec<TanhEquation> {
    let ode = reduce_traveling(&crate::model::dlw(), &mu());
    let t = par(Param::TANH);
    let u = &par(Param::A0) + &(&par(Param::A1) * &t);
    let v = &(&par(Param::B0) + &(&par(Param::B1) * &t)) + &(&par(Param::B2) * &t.pow(2));
    let mut out = Vec::new();
    for (j, e) in ode.equations.iter().enumerate() {
        let sub = e.substitute(|s| match s.as_jet() {
            Some(v_) if v_.dep == Dep::PROFILE_U => Some(nth(&u, v_.dx)),
            Some(v_) if v_.dep == Dep::PROFILE_V => Some(nth(&v, v_.dx)),
            _ => None,
        });
        for (power, poly) in sub.coefficients_in(&tanh_sym()) {
            if !poly.is_zero() {
                out.push(TanhEquation { equation: j, power, poly });
            }
        }
    }
    out
}

/// Substitutes parameter values and folds `s3² = 3`.
pub fn at_point(p: &JetPoly, point: &BTreeMap<Param, JetPoly>) -> JetPoly {
    let sub = p.substitute(|s| match s {
        Sym::Param(q) => point.get(q).cloned(),
        _ => None,
    });
    fold_sqrt3(&sub)
}

/// Rewrites `s3^k` as `3^{k/2} s3^{k mod 2}`.
pub fn fold_sqrt3(p: &JetPoly) -> JetPoly {
    let s3 = Sym::Param(Param::SQRT3);
    let mut out = JetPoly::zero();
    for (k, c) in p.coefficients_in(&s3) {
        let three: Rat = (0..k / 2).fold(rat(1, 1), |a, _| a * rat(3, 1));
        let tail = if k % 2 == 1 { par(Param::SQRT3) } else { JetPoly::one() };
        out += &c.scale(&three) * &tail;
    }
    out
}

/// `a0 = μ`, `a1 = 2√3/3`, `b0 = 2/3`, `b1 = 0`, `b2 = -2/3`, from the
/// printed kink.
pub fn kink_point() -> BTreeMap<Param, JetPoly> {
    BTreeMap::from([
        (Param::A0, par(Param::MU)),
        (Param::A1, par(Param::SQRT3).scale(&rat(2, 3))),
        (Param::B0, JetPoly::rat(2, 3)),
        (Param::B1, JetPoly::zero()),
        (Param::B2, JetPoly::rat(-2, 3)),
    ])
}

/// True when some nonzero rational multiple of `p` is among `eqs`.
pub fn proportional_to_any(p: &JetPoly, eqs: &[TanhEquation]) -> Option<(usize, u32, Rat)> {
    let (m, c) = p.terms().next()?;
    eqs.iter().find_map(|e| {
        let d = e.poly.coeff(m);
        if d.is_zero() {
            return None;
        }
        let k = c / &d;
        (e.poly.scale(&k) == *p).then_some((e.equation, e.power, k))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{self, p};

    #[test]
    fn kink_solves_generated_system() {
        let sys = tanh_ansatz_system();
        assert!(!sys.is_empty());
        for e in &sys {
            assert!(at_point(&e.poly, &kink_point()).is_zero(), "{} T^{}: {}", e.equation, e.power, e.poly);
        }
    }

    #[test]
    fn top_power_balances_dispersion() {
        let sys = tanh_ansatz_system();
        let top = sys.iter().filter(|e| e.equation == 1).max_by_key(|e| e.power).unwrap();
        assert_eq!(top.power, 4);
        assert_eq!(top.poly, p("(-3)*a1*b2 + (-2)*a1"));
    }

    #[test]
    fn trivial_point() {
        let zero = BTreeMap::from([
            (Param::A1, JetPoly::zero()),
            (Param::B1, JetPoly::zero()),
            (Param::B2, JetPoly::zero()),
        ]);
        assert!(tanh_ansatz_system().iter().all(|e| at_point(&e.poly, &zero).is_zero()));
    }

    #[test]
    fn printed_system_at_kink() {
        let vals: Vec<bool> = model::tanh_system_printed().iter().map(|e| at_point(e, &kink_point()).is_zero()).collect();
        assert_eq!(vals, vec![true, true, true, false, true]);
    }
}
