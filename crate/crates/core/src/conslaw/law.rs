use serde::Serialize;

use crate::jet::{Dep, JetPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Jets of `u, v`.
    Physical,
    /// Jets of the potentials `q, r` with `u = q_x`, `v = r_x`.
    Potential,
}

impl Family {
    pub fn deps(self) -> [Dep; 2] {
        match self {
            Family::Physical => [Dep::U, Dep::V],
            Family::Potential => [Dep::Q, Dep::R],
        }
    }
}

/// `D_t density + D_x flux = 0` on solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConservationLaw {
    pub label: String,
    pub density: JetPoly,
    pub flux: JetPoly,
    pub family: Family,
}

impl ConservationLaw {
    pub fn new(label: &str, density: JetPoly, flux: JetPoly, family: Family) -> Self {
        ConservationLaw { label: label.to_string(), density, flux, family }
    }

    pub fn zero(label: &str, family: Family) -> Self {
        Self::new(label, JetPoly::zero(), JetPoly::zero(), family)
    }

    /// `D_t density + D_x flux` without reduction.
    pub fn divergence(&self) -> JetPoly {
        self.density.dt() + self.flux.dx()
    }

    /// Density and flux exchanged.
    pub fn swapped(&self, label: &str) -> Self {
        Self::new(label, self.flux.clone(), self.density.clone(), self.family)
    }

    pub fn negated(&self, label: &str) -> Self {
        Self::new(label, -&self.density, -&self.flux, self.family)
    }

    pub fn depends_on_coordinates(&self) -> bool {
        self.density.depends_on_coordinates() || self.flux.depends_on_coordinates()
    }

    /// Rewrites a physical law in potentials, `u → q_x`, `v → r_x`.
    pub fn to_potential(&self, label: &str) -> Self {
        let map = |p: &JetPoly| {
            p.map_jets(|j| match j.dep {
                Dep::U => crate::jet::JetVar::new(Dep::Q, j.dx + 1, j.dt),
                Dep::V => crate::jet::JetVar::new(Dep::R, j.dx + 1, j.dt),
                _ => j,
            })
        };
        Self::new(label, map(&self.density), map(&self.flux), Family::Potential)
    }
}
