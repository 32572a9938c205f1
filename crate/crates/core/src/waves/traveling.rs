//! Traveling-wave reduction `u(x, t) = U(x - μt)` and first integrals.

use crate::conslaw::ConservationLaw;
use crate::jet::{Dep, EvolutionSystem, JetPoly, JetVar, Param, SolvedRule, Sym, SystemError};

/// Reduced ODE in `U(ξ), V(ξ)`; ξ-derivatives sit in the x slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TravelingWaveOde {
    pub mu: JetPoly,
    pub equations: Vec<JetPoly>,
    /// The equations solved for `V'` and `U'''`.
    pub system: EvolutionSystem,
}

pub fn mu() -> JetPoly {
    JetPoly::param(Param::MU)
}

fn profile(dep: Dep) -> Option<Dep> {
    match dep {
        Dep::U => Some(Dep::PROFILE_U),
        Dep::V => Some(Dep::PROFILE_V),
        _ => None,
    }
}

/// `u_(a,b) → (-μ)^b U^(a+b)`; `x`, `t` are left alone.
pub fn to_traveling(p: &JetPoly, mu: &JetPoly) -> JetPoly {
    let neg = -mu;
    p.substitute(|s| match s {
        Sym::Jet(v) => profile(v.dep).map(|d| &neg.pow(v.dt) * &JetPoly::var(d, v.dx + v.dt, 0)),
        _ => None,
    })
}

/// Solves each equation for its highest derivative of a still unassigned
/// profile; that derivative must enter linearly with a constant coefficient.
fn solved(eqs: &[JetPoly]) -> Option<Vec<SolvedRule>> {
    let mut order: Vec<usize> = (0..eqs.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(eqs[i].max_order()));
    let mut used = Vec::new();
    let mut rules = Vec::new();
    for i in order {
        let e = &eqs[i];
        let mut cands: Vec<JetVar> = e.jet_vars().into_iter().filter(|v| !used.contains(&v.dep)).collect();
        cands.sort_by_key(|v| std::cmp::Reverse(v.dx));
        let (lead, c) = cands.iter().find_map(|v| {
            let c = e.partial(&Sym::Jet(*v));
            c.as_constant().filter(|c| !num_traits::Zero::is_zero(c)).map(|c| (*v, c))
        })?;
        let inv = num_traits::Inv::inv(c);
        let g = &e.scale(&inv) - &JetPoly::jet(lead);
        used.push(lead.dep);
        rules.push(SolvedRule { dep: lead.dep, lead: (lead.dx, 0), g });
    }
    Some(rules)
}

pub fn reduce_traveling(sys: &EvolutionSystem, mu: &JetPoly) -> TravelingWaveOde {
    let equations: Vec<JetPoly> = sys.equations().iter().map(|e| to_traveling(e, mu)).collect();
    let rules = solved(&equations).expect("traveling equations are solvable for a leading derivative");
    TravelingWaveOde { mu: mu.clone(), equations, system: EvolutionSystem::with_rules("traveling", rules) }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FirstIntegralError {
    #[error("law {0} depends explicitly on x or t")]
    ExplicitCoordinate(String),
    #[error(transparent)]
    System(#[from] SystemError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstIntegral {
    pub expr: JetPoly,
    pub source_law: String,
    /// `d/dξ expr` modulo the ODE.
    pub residual: JetPoly,
}

/// `φ^x - μ φ^t` on traveling waves.
pub fn first_integral(cl: &ConservationLaw, ode: &TravelingWaveOde) -> Result<FirstIntegral, FirstIntegralError> {
    if cl.depends_on_coordinates() {
        return Err(FirstIntegralError::ExplicitCoordinate(cl.label.clone()));
    }
    let expr = to_traveling(&(&cl.flux - &(&ode.mu * &cl.density)), &ode.mu);
    let residual = ode.system.reduce(&expr.dx())?;
    Ok(FirstIntegral { expr, source_law: cl.label.clone(), residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{self, p};

    fn printed(label: &str) -> JetPoly {
        model::first_integrals_printed().into_iter().find(|(l, _)| *l == label).unwrap().1
    }

    fn law(label: &str) -> ConservationLaw {
        model::laws_printed().into_iter().find(|l| l.label == label).unwrap()
    }

    #[test]
    fn reduced_equations() {
        let ode = reduce_traveling(&model::dlw(), &mu());
        assert_eq!(ode.equations[0], p("(-1)*mu*U[1,0] + U[0,0]*U[1,0] + V[1,0]"));
        assert_eq!(ode.equations[1], p("(-1)*mu*V[1,0] + U[0,0]*V[1,0] + V[0,0]*U[1,0] + (1/3)*U[3,0]"));
        let still = reduce_traveling(&model::dlw(), &JetPoly::zero());
        assert_eq!(still.equations[0], p("U[0,0]*U[1,0] + V[1,0]"));
    }

    #[test]
    fn printed_first_integrals() {
        let ode = reduce_traveling(&model::dlw(), &mu());
        let c3 = first_integral(&law("eq32"), &ode).unwrap();
        assert_eq!(c3.expr, printed("C3"));
        assert!(c3.residual.is_zero());
        assert_eq!(first_integral(&law("eq33"), &ode).unwrap().expr, printed("C4"));
        assert_eq!(first_integral(&law("eq31").swapped("s"), &ode).unwrap().expr, printed("C2"));
        assert!(matches!(first_integral(&law("eq30"), &ode), Err(FirstIntegralError::ExplicitCoordinate(_))));
    }

    #[test]
    fn first_line_of_c1() {
        let ode = reduce_traveling(&model::dlw(), &mu());
        let c1 = first_integral(&model::law_eq29_corrected(), &ode).unwrap();
        assert!(c1.residual.is_zero());
        assert_eq!(c1.expr, printed("C1"));
        let raw = first_integral(&law("eq29"), &ode).unwrap();
        assert!(!raw.residual.is_zero());
        assert_eq!(&raw.expr - &c1.expr, p("(-1)*mu*V[0,0]*U[2,0]"));
    }
}
