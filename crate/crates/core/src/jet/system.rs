//! Systems in solved form and reduction modulo their prolongations.

use std::collections::{BTreeMap, HashMap};

use super::linop::LinearDiffOp;
use super::poly::JetPoly;
use super::symbol::{Axis, Dep, JetVar, Sym};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SystemError {
    #[error("on-shell reduction of {var} does not decrease the rank (reached {next})")]
    NonTerminating { var: JetVar, next: JetVar },
    #[error("tuple of length {got} does not match system width {expected}")]
    Width { expected: usize, got: usize },
}

/// `D_x^lead.0 D_t^lead.1 dep + g = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedRule {
    pub dep: Dep,
    pub lead: (u32, u32),
    pub g: JetPoly,
}

impl SolvedRule {
    pub fn reduces(&self, v: &JetVar) -> bool {
        v.dep == self.dep && v.dx >= self.lead.0 && v.dt >= self.lead.1
    }

    pub fn equation(&self) -> JetPoly {
        JetPoly::var(self.dep, self.lead.0, self.lead.1) + &self.g
    }
}

/// A PDE system `u^j_{lead} + g^j = 0` used as a rewriting system on jets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvolutionSystem {
    pub name: String,
    pub rules: Vec<SolvedRule>,
}

fn rank(v: &JetVar) -> (u32, u32) {
    (v.dt, v.dx)
}

impl EvolutionSystem {
    /// Evolution form `dep_t + g = 0` for each pair.
    pub fn evolution(name: &str, rules: Vec<(Dep, JetPoly)>) -> Self {
        Self::with_rules(
            name,
            rules.into_iter().map(|(dep, g)| SolvedRule { dep, lead: (0, 1), g }).collect(),
        )
    }

    /// Potential form `dep_xt + g = 0`; pure t-derivatives stay irreducible.
    pub fn potential(name: &str, rules: Vec<(Dep, JetPoly)>) -> Self {
        Self::with_rules(
            name,
            rules.into_iter().map(|(dep, g)| SolvedRule { dep, lead: (1, 1), g }).collect(),
        )
    }

    pub fn with_rules(name: &str, rules: Vec<SolvedRule>) -> Self {
        EvolutionSystem { name: name.to_string(), rules }
    }

    pub fn deps(&self) -> Vec<Dep> {
        self.rules.iter().map(|r| r.dep).collect()
    }

    pub fn width(&self) -> usize {
        self.rules.len()
    }

    pub fn equations(&self) -> Vec<JetPoly> {
        self.rules.iter().map(SolvedRule::equation).collect()
    }

    fn rule_for(&self, v: &JetVar) -> Option<(usize, &SolvedRule)> {
        self.rules.iter().enumerate().find(|(_, r)| r.reduces(v))
    }

    pub fn is_reducible(&self, v: &JetVar) -> bool {
        self.rule_for(v).is_some()
    }

    pub fn is_reduced(&self, p: &JetPoly) -> bool {
        p.jet_vars().iter().all(|v| !self.is_reducible(v))
    }

    pub fn reducer(&self) -> Reducer<'_> {
        Reducer { sys: self, memo: HashMap::new(), eq_memo: HashMap::new() }
    }

    pub fn reduce(&self, p: &JetPoly) -> Result<JetPoly, SystemError> {
        self.reducer().reduce(p)
    }

    pub fn reduce_all(&self, ps: &[JetPoly]) -> Result<Vec<JetPoly>, SystemError> {
        let mut r = self.reducer();
        ps.iter().map(|p| r.reduce(p)).collect()
    }

    /// Rewrites `p` as `p0 + Σ R_j(E_j) + (terms at least quadratic in E)`,
    /// where `E_j` stands for the j-th equation. Returns the reduced part
    /// `p0` and the operator row `R` (one entry per equation). Quadratic
    /// remainders vanish on shell and are not returned.
    pub fn express_in_equations(
        &self,
        p: &JetPoly,
    ) -> Result<(JetPoly, Vec<BTreeMap<(u32, u32), JetPoly>>), SystemError> {
        let mut r = self.reducer();
        let s = r.in_equations(p)?;
        let groups = s.by_degree_in(|sym| matches!(sym, Sym::Jet(v) if v.dep.is_equation()));
        let p0 = groups.get(&0).cloned().unwrap_or_default();
        let mut row = vec![BTreeMap::new(); self.width()];
        if let Some(lin) = groups.get(&1) {
            for (m, c) in lin.terms() {
                let (eqs, rest) = m.split(|sym| matches!(sym, Sym::Jet(v) if v.dep.is_equation()));
                let (sym, _) = eqs.factors()[0];
                let v = sym.as_jet().expect("placeholder is a jet coordinate");
                let j = (v.dep.0 - Dep::EQ1.0) as usize;
                let slot: &mut JetPoly = row[j].entry((v.dx, v.dt)).or_default();
                slot.add_term(rest, c.clone());
            }
        }
        for entry in &mut row {
            entry.retain(|_, c: &mut JetPoly| !c.is_zero());
        }
        Ok((p0, row))
    }

    /// Operator `R` with `tuple = R(E)` modulo terms vanishing to second
    /// order on shell; errors if a component has a nonzero on-shell part.
    pub fn operator_in_equations(&self, tuple: &[JetPoly]) -> Result<(LinearDiffOp, Vec<JetPoly>), SystemError> {
        let mut rows = Vec::with_capacity(tuple.len());
        let mut rests = Vec::with_capacity(tuple.len());
        for p in tuple {
            let (p0, row) = self.express_in_equations(p)?;
            rows.push(row);
            rests.push(p0);
        }
        Ok((LinearDiffOp::from_rows(rows, self.width()), rests))
    }
}

/// Memoizing reducer bound to one system.
pub struct Reducer<'a> {
    sys: &'a EvolutionSystem,
    memo: HashMap<JetVar, JetPoly>,
    eq_memo: HashMap<JetVar, JetPoly>,
}

impl<'a> Reducer<'a> {
    /// On-shell value of a reducible coordinate.
    fn form(&mut self, v: JetVar) -> Result<JetPoly, SystemError> {
        if let Some(p) = self.memo.get(&v) {
            return Ok(p.clone());
        }
        let (_, rule) = self.sys.rule_for(&v).expect("form requested for reducible var");
        let rule = rule.clone();
        let out = if (v.dx, v.dt) == rule.lead {
            let g = -&rule.g;
            self.reduce_bounded(&g, v)?
        } else {
            let (pred, axis) = if v.dt > rule.lead.1 {
                (JetVar::new(v.dep, v.dx, v.dt - 1), Axis::T)
            } else {
                (JetVar::new(v.dep, v.dx - 1, v.dt), Axis::X)
            };
            let base = self.form(pred)?;
            self.derive_reduced(&base, axis, v)?
        };
        self.memo.insert(v, out.clone());
        Ok(out)
    }

    fn check(&self, parent: JetVar, next: JetVar) -> Result<(), SystemError> {
        if rank(&next) < rank(&parent) {
            Ok(())
        } else {
            Err(SystemError::NonTerminating { var: parent, next })
        }
    }

    fn reduce_bounded(&mut self, p: &JetPoly, parent: JetVar) -> Result<JetPoly, SystemError> {
        let mut images = HashMap::new();
        for v in p.jet_vars() {
            if self.sys.is_reducible(&v) {
                self.check(parent, v)?;
                images.insert(v, self.form(v)?);
            }
        }
        Ok(p.substitute(|s| s.as_jet().and_then(|v| images.get(&v).cloned())))
    }

    /// Total derivative of an already reduced polynomial, reduced again.
    fn derive_reduced(&mut self, p: &JetPoly, axis: Axis, parent: JetVar) -> Result<JetPoly, SystemError> {
        let mut images = HashMap::new();
        for v in p.jet_vars() {
            let w = v.lift(axis);
            if self.sys.is_reducible(&w) {
                self.check(parent, w)?;
                images.insert(v, self.form(w)?);
            } else {
                images.insert(v, JetPoly::jet(w));
            }
        }
        Ok(p.derive_with(|s| match (s, axis) {
            (Sym::Jet(v), _) => images[v].clone(),
            (Sym::X, Axis::X) | (Sym::T, Axis::T) => JetPoly::one(),
            _ => JetPoly::zero(),
        }))
    }

    pub fn reduce(&mut self, p: &JetPoly) -> Result<JetPoly, SystemError> {
        let mut images = HashMap::new();
        for v in p.jet_vars() {
            if self.sys.is_reducible(&v) {
                images.insert(v, self.form(v)?);
            }
        }
        Ok(p.substitute(|s| s.as_jet().and_then(|v| images.get(&v).cloned())))
    }

    /// Exact rewrite of a reducible coordinate in terms of equation
    /// placeholders and reduced coordinates.
    fn in_equations_var(&mut self, v: JetVar) -> Result<JetPoly, SystemError> {
        if let Some(p) = self.eq_memo.get(&v) {
            return Ok(p.clone());
        }
        let (j, rule) = self.sys.rule_for(&v).expect("reducible");
        let rule = rule.clone();
        let (a, b) = (v.dx - rule.lead.0, v.dt - rule.lead.1);
        let dg = rule.g.d(a, b);
        let mut images = HashMap::new();
        for w in dg.jet_vars() {
            if self.sys.is_reducible(&w) {
                self.check(v, w)?;
                images.insert(w, self.in_equations_var(w)?);
            }
        }
        let rest = dg.substitute(|s| s.as_jet().and_then(|w| images.get(&w).cloned()));
        let out = JetPoly::var(Dep::equation(j), a, b) - rest;
        self.eq_memo.insert(v, out.clone());
        Ok(out)
    }

    pub fn in_equations(&mut self, p: &JetPoly) -> Result<JetPoly, SystemError> {
        let mut images = HashMap::new();
        for v in p.jet_vars() {
            if self.sys.is_reducible(&v) {
                images.insert(v, self.in_equations_var(v)?);
            }
        }
        Ok(p.substitute(|s| s.as_jet().and_then(|v| images.get(&v).cloned())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::poly::rat;

    fn u(a: u32, b: u32) -> JetPoly {
        JetPoly::var(Dep::U, a, b)
    }
    fn v(a: u32, b: u32) -> JetPoly {
        JetPoly::var(Dep::V, a, b)
    }

    fn dlw() -> EvolutionSystem {
        EvolutionSystem::evolution(
            "dlw",
            vec![
                (Dep::U, u(0, 0) * u(1, 0) + v(1, 0)),
                (Dep::V, u(1, 0) * v(0, 0) + u(0, 0) * v(1, 0) + u(3, 0).scale(&rat(1, 3))),
            ],
        )
    }

    #[test]
    fn first_order_rule() {
        let s = dlw();
        assert_eq!(s.reduce(&u(0, 1)).unwrap(), -(u(0, 0) * u(1, 0) + v(1, 0)));
    }

    #[test]
    fn mixed_derivative() {
        let s = dlw();
        let expected = -(u(1, 0).pow(2) + u(0, 0) * u(2, 0) + v(2, 0));
        assert_eq!(s.reduce(&u(1, 1)).unwrap(), expected);
    }

    #[test]
    fn untouched_when_reduced() {
        let s = dlw();
        let p = u(1, 0) * v(0, 0) + JetPoly::int(3);
        assert_eq!(s.reduce(&p).unwrap(), p);
    }

    #[test]
    fn second_time_derivative_is_t_free() {
        let s = dlw();
        let r = s.reduce(&(u(0, 2) + v(2, 2))).unwrap();
        assert!(r.jet_vars().iter().all(|j| j.dt == 0));
    }

    #[test]
    fn equations_recovered_exactly() {
        let s = dlw();
        let p = u(1, 1) * v(0, 0) + u(0, 2);
        let (p0, row) = s.express_in_equations(&p).unwrap();
        assert_eq!(p0, s.reduce(&p).unwrap());
        let eqs = s.equations();
        let mut back = p0.clone();
        for (j, entry) in row.iter().enumerate() {
            for ((a, b), c) in entry {
                back += c * &eqs[j].d(*a, *b);
            }
        }
        // Only the linear part is kept, so compare on shell and off shell
        // via the difference being quadratic in equations.
        let diff = &p - &back;
        assert!(s.reduce(&diff).unwrap().is_zero());
    }

    #[test]
    fn potential_keeps_pure_time_derivatives() {
        let q = |a, b| JetPoly::var(Dep::Q, a, b);
        let r = |a, b| JetPoly::var(Dep::R, a, b);
        let s = EvolutionSystem::potential(
            "pot",
            vec![
                (Dep::Q, q(1, 0) * q(2, 0) + r(2, 0)),
                (Dep::R, q(2, 0) * r(1, 0) + q(1, 0) * r(2, 0) + q(4, 0).scale(&rat(1, 3))),
            ],
        );
        let p = q(0, 1) * r(0, 2) + q(2, 1);
        let red = s.reduce(&p).unwrap();
        assert!(red.jet_vars().iter().all(|j| j.dt == 0 || j.dx == 0));
        assert!(red.contains(&Sym::jet(Dep::R, 0, 2)));
    }
}
