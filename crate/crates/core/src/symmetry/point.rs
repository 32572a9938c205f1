//! Point symmetries on `(t, x, u, v)` and their prolongations.

use std::collections::BTreeMap;

use crate::jet::{Axis, Dep, EvolutionSystem, JetPoly, JetVar, Rat, Sym, SystemError};

/// `ξ^t ∂_t + ξ^x ∂_x + η^u ∂_u + η^v ∂_v` acting on the dependent
/// variables `deps` (usually `u, v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSymmetry {
    pub xi_t: JetPoly,
    pub xi_x: JetPoly,
    pub eta: Vec<JetPoly>,
    pub deps: Vec<Dep>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PointError {
    #[error("coefficient depends on derivative coordinate {0}")]
    NotPoint(JetVar),
    #[error("vector fields act on different dependent variables")]
    Mismatch,
}

impl PointSymmetry {
    pub fn new(xi_t: JetPoly, xi_x: JetPoly, eta: Vec<JetPoly>, deps: Vec<Dep>) -> Self {
        assert_eq!(eta.len(), deps.len());
        PointSymmetry { xi_t, xi_x, eta, deps }
    }

    pub fn zero(deps: Vec<Dep>) -> Self {
        let eta = vec![JetPoly::zero(); deps.len()];
        PointSymmetry::new(JetPoly::zero(), JetPoly::zero(), eta, deps)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &JetPoly> {
        [&self.xi_t, &self.xi_x].into_iter().chain(self.eta.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients().all(JetPoly::is_zero)
    }

    /// Errors when a coefficient involves a derivative coordinate.
    pub fn validate(&self) -> Result<(), PointError> {
        for c in self.coefficients() {
            if let Some(v) = c.jet_vars().into_iter().find(|v| v.order() > 0) {
                return Err(PointError::NotPoint(v));
            }
        }
        Ok(())
    }

    /// The field as a derivation on functions of `(t, x, deps)`.
    pub fn act(&self, f: &JetPoly) -> JetPoly {
        let mut out = &self.xi_t * &f.partial(&Sym::T) + &self.xi_x * &f.partial(&Sym::X);
        for (dep, eta) in self.deps.iter().zip(&self.eta) {
            out += eta * &f.partial(&Sym::jet(*dep, 0, 0));
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> PointSymmetry {
        PointSymmetry::new(
            self.xi_t.scale(c),
            self.xi_x.scale(c),
            self.eta.iter().map(|e| e.scale(c)).collect(),
            self.deps.clone(),
        )
    }

    pub fn add(&self, other: &PointSymmetry) -> PointSymmetry {
        PointSymmetry::new(
            &self.xi_t + &other.xi_t,
            &self.xi_x + &other.xi_x,
            self.eta.iter().zip(&other.eta).map(|(a, b)| a + b).collect(),
            self.deps.clone(),
        )
    }

    /// Evolutionary form `η - ξ^t u_t - ξ^x u_x`.
    pub fn characteristic(&self) -> Vec<JetPoly> {
        self.deps
            .iter()
            .zip(&self.eta)
            .map(|(d, eta)| eta - &(&self.xi_t * &JetPoly::var(*d, 0, 1)) - &self.xi_x * &JetPoly::var(*d, 1, 0))
            .collect()
    }

    /// Coefficient of `∂/∂dep_{dx,dt}` in the prolongation, by the recursion
    /// `η_{J,i} = D_i η_J - (D_i ξ^t) u_{J,t} - (D_i ξ^x) u_{J,x}`.
    pub fn prolongation_coefficient(&self, v: JetVar, memo: &mut BTreeMap<JetVar, JetPoly>) -> JetPoly {
        if let Some(p) = memo.get(&v) {
            return p.clone();
        }
        let k = self.deps.iter().position(|d| *d == v.dep).expect("dependent variable of the field");
        let out = if v.order() == 0 {
            self.eta[k].clone()
        } else {
            let (prev, axis) = if v.dt > 0 {
                (JetVar::new(v.dep, v.dx, v.dt - 1), Axis::T)
            } else {
                (JetVar::new(v.dep, v.dx - 1, v.dt), Axis::X)
            };
            let base = self.prolongation_coefficient(prev, memo);
            let ut = JetPoly::jet(prev.lift(Axis::T));
            let ux = JetPoly::jet(prev.lift(Axis::X));
            base.total_derivative(axis)
                - &self.xi_t.total_derivative(axis) * &ut
                - &self.xi_x.total_derivative(axis) * &ux
        };
        memo.insert(v, out.clone());
        out
    }

    /// Prolongation coefficients of every coordinate up to total order
    /// `order`.
    pub fn prolong(&self, order: u32) -> BTreeMap<JetVar, JetPoly> {
        let mut memo = BTreeMap::new();
        for dep in &self.deps {
            for n in 0..=order {
                for dt in 0..=n {
                    self.prolongation_coefficient(JetVar::new(*dep, n - dt, dt), &mut memo);
                }
            }
        }
        memo
    }

    /// Third prolongation.
    pub fn prolong3(&self) -> BTreeMap<JetVar, JetPoly> {
        self.prolong(3)
    }

    /// `pr X (f)` for a differential function `f`.
    pub fn apply_prolonged(&self, f: &JetPoly) -> JetPoly {
        let mut memo = BTreeMap::new();
        let mut out = &self.xi_t * &f.partial(&Sym::T) + &self.xi_x * &f.partial(&Sym::X);
        for v in f.jet_vars() {
            if self.deps.contains(&v.dep) {
                let eta = self.prolongation_coefficient(v, &mut memo);
                out += eta * f.partial(&Sym::Jet(v));
            }
        }
        out
    }

    /// `pr X (G)` for each equation, reduced on shell.
    pub fn determining_residual(&self, sys: &EvolutionSystem) -> Result<Vec<JetPoly>, SystemError> {
        let applied: Vec<JetPoly> = sys.equations().iter().map(|g| self.apply_prolonged(g)).collect();
        sys.reduce_all(&applied)
    }

    pub fn is_symmetry_of(&self, sys: &EvolutionSystem) -> Result<bool, SystemError> {
        Ok(self.determining_residual(sys)?.iter().all(JetPoly::is_zero))
    }
}

/// `[X, Y]` with components `X(Y^k) - Y(X^k)`.
pub fn lie_bracket(x: &PointSymmetry, y: &PointSymmetry) -> Result<PointSymmetry, PointError> {
    if x.deps != y.deps {
        return Err(PointError::Mismatch);
    }
    let comp = |a: &JetPoly, b: &JetPoly| x.act(b) - y.act(a);
    Ok(PointSymmetry::new(
        comp(&x.xi_t, &y.xi_t),
        comp(&x.xi_x, &y.xi_x),
        x.eta.iter().zip(&y.eta).map(|(a, b)| comp(a, b)).collect(),
        x.deps.clone(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model;

    fn u(a: u32, b: u32) -> JetPoly {
        JetPoly::var(Dep::U, a, b)
    }

    #[test]
    fn translation_has_trivial_prolongation() {
        let x2 = &model::generators()[1];
        assert!(x2.prolong3().values().all(JetPoly::is_zero));
    }

    #[test]
    fn galilean_first_order() {
        let x3 = &model::generators()[2];
        let tab = x3.prolong3();
        assert_eq!(tab[&JetVar::new(Dep::U, 0, 1)], -u(1, 0));
        assert!(tab[&JetVar::new(Dep::U, 1, 0)].is_zero());
    }

    #[test]
    fn scaling_first_order() {
        let x4 = &model::generators()[3];
        let tab = x4.prolong3();
        assert_eq!(tab[&JetVar::new(Dep::U, 1, 0)], -u(1, 0));
    }

    #[test]
    fn recursion_matches_characteristic_formula() {
        // η_J = D_J(P) + ξ^t u_{J,t} + ξ^x u_{J,x}
        for x in model::generators() {
            let p = x.characteristic();
            for (v, eta) in x.prolong3() {
                let k = x.deps.iter().position(|d| *d == v.dep).unwrap();
                let expected = p[k].d(v.dx, v.dt)
                    + &x.xi_t * &JetPoly::jet(v.lift(Axis::T))
                    + &x.xi_x * &JetPoly::jet(v.lift(Axis::X));
                assert_eq!(eta, expected, "{v}");
            }
        }
    }

    #[test]
    fn non_symmetry_leaves_residual() {
        let x = PointSymmetry::new(
            JetPoly::zero(),
            JetPoly::zero(),
            vec![JetPoly::t(), JetPoly::zero()],
            vec![Dep::U, Dep::V],
        );
        let r = x.determining_residual(&model::dlw()).unwrap();
        assert_eq!(r[0], JetPoly::one() + JetPoly::t() * u(1, 0));
    }

    #[test]
    fn zero_field() {
        let z = PointSymmetry::zero(vec![Dep::U, Dep::V]);
        assert!(z.determining_residual(&model::dlw()).unwrap().iter().all(JetPoly::is_zero));
        assert!(lie_bracket(&z, &z).unwrap().is_zero());
    }
}
