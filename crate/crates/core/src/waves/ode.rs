//! Numeric integration of the traveling-wave ODE.

use crate::jet::{Dep, JetPoly, Param, Sym, SystemError};

use super::traveling::TravelingWaveOde;

/// `(U, U', U'', V)`.
pub type OdeState = [f64; 4];

fn env(y: &OdeState, mu: f64) -> impl Fn(&Sym) -> f64 + '_ {
    move |s: &Sym| match s {
        Sym::Jet(v) if v.dep == Dep::PROFILE_U && v.dx <= 2 => y[v.dx as usize],
        Sym::Jet(v) if v.dep == Dep::PROFILE_V && v.dx == 0 => y[3],
        Sym::Param(p) if *p == Param::MU => mu,
        _ => f64::NAN,
    }
}

/// First-order form of the ODE, with every expression reduced to
/// `U, U', U'', V` before evaluation.
pub struct OdeRhs {
    u3: JetPoly,
    v1: JetPoly,
    mu: f64,
}

impl OdeRhs {
    pub fn new(ode: &TravelingWaveOde, mu: f64) -> Result<Self, SystemError> {
        let u3 = ode.system.reduce(&JetPoly::var(Dep::PROFILE_U, 3, 0))?;
        let v1 = ode.system.reduce(&JetPoly::var(Dep::PROFILE_V, 1, 0))?;
        Ok(OdeRhs { u3, v1, mu })
    }

    pub fn eval(&self, y: &OdeState) -> OdeState {
        let e = env(y, self.mu);
        [y[1], y[2], self.u3.eval(&e), self.v1.eval(&e)]
    }
}

pub fn rk4_step(f: &OdeRhs, y: &OdeState, h: f64) -> OdeState {
    let add = |a: &OdeState, b: &OdeState, s: f64| -> OdeState { std::array::from_fn(|i| a[i] + s * b[i]) };
    let k1 = f.eval(y);
    let k2 = f.eval(&add(y, &k1, h / 2.0));
    let k3 = f.eval(&add(y, &k2, h / 2.0));
    let k4 = f.eval(&add(y, &k3, h));
    std::array::from_fn(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

/// Integrates `steps` steps of size `h` and returns the largest deviation
/// of each integral from its initial value.
pub fn integral_drift(
    ode: &TravelingWaveOde,
    mu: f64,
    y0: OdeState,
    h: f64,
    steps: usize,
    integrals: &[JetPoly],
) -> Result<Vec<f64>, SystemError> {
    let rhs = OdeRhs::new(ode, mu)?;
    let reduced = integrals.iter().map(|c| ode.system.reduce(c)).collect::<Result<Vec<_>, _>>()?;
    let value = |y: &OdeState| reduced.iter().map(|c| c.eval(env(y, mu))).collect::<Vec<_>>();
    let start = value(&y0);
    let mut drift = vec![0.0f64; reduced.len()];
    let mut y = y0;
    for _ in 0..steps {
        y = rk4_step(&rhs, &y, h);
        for ((d, c), s) in drift.iter_mut().zip(value(&y)).zip(&start) {
            *d = d.max((c - s).abs());
        }
    }
    Ok(drift)
}

/// The kink `U = μ + (2/√3) tanh ξ`, `V = (2/3) sech² ξ` at `ξ`.
pub fn kink_state(mu: f64, xi: f64) -> OdeState {
    let a = 2.0 / 3f64.sqrt();
    let th = xi.tanh();
    let s2 = 1.0 - th * th;
    [mu + a * th, a * s2, -2.0 * a * th * s2, 2.0 / 3.0 * s2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model;
    use crate::waves::traveling::{first_integral, mu as mu_sym, reduce_traveling};

    #[test]
    fn kink_is_an_orbit() {
        let ode = reduce_traveling(&model::dlw(), &mu_sym());
        let rhs = OdeRhs::new(&ode, 1.0).unwrap();
        let (h, mut y) = (1e-3, kink_state(1.0, -1.0));
        for _ in 0..1000 {
            y = rk4_step(&rhs, &y, h);
        }
        let want = kink_state(1.0, 0.0);
        assert!(y.iter().zip(&want).all(|(a, b)| (a - b).abs() < 1e-9), "{y:?}");
    }

    #[test]
    fn integrals_stay_constant() {
        let ode = reduce_traveling(&model::dlw(), &mu_sym());
        let laws = model::laws_printed();
        let cs: Vec<JetPoly> = [laws[3].clone(), laws[4].clone(), laws[2].swapped("s"), model::law_eq29_corrected()]
            .iter()
            .map(|l| first_integral(l, &ode).unwrap().expr)
            .collect();
        let d = integral_drift(&ode, 1.0, kink_state(1.0, -2.0), 1e-3, 4000, &cs).unwrap();
        assert!(d.iter().all(|x| *x < 1e-8), "{d:?}");
    }
}
