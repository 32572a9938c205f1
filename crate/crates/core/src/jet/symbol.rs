//! Coordinates of the jet space: dependent-variable derivatives, the two
//! independent variables and named constant parameters.

use std::fmt;

/// Index of a dependent variable.
///
/// A small fixed registry is used so that every family (physical `u, v`,
/// potential `q, r`, the multiplier variables `w1, w2`, traveling-wave
/// profiles `U, V`, similarity profiles `f, g` and the equation placeholders
/// `E1, E2`) can coexist in one polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dep(pub u8);

const DEP_NAMES: [&str; 12] = ["u", "v", "q", "r", "w1", "w2", "U", "V", "f", "g", "E1", "E2"];

impl Dep {
    pub const U: Dep = Dep(0);
    pub const V: Dep = Dep(1);
    pub const Q: Dep = Dep(2);
    pub const R: Dep = Dep(3);
    pub const W1: Dep = Dep(4);
    pub const W2: Dep = Dep(5);
    /// Traveling-wave profile of `u`.
    pub const PROFILE_U: Dep = Dep(6);
    /// Traveling-wave profile of `v`.
    pub const PROFILE_V: Dep = Dep(7);
    pub const F: Dep = Dep(8);
    pub const G: Dep = Dep(9);
    /// Placeholder for the first equation of a system and its derivatives.
    pub const EQ1: Dep = Dep(10);
    pub const EQ2: Dep = Dep(11);

    pub fn name(self) -> &'static str {
        DEP_NAMES.get(self.0 as usize).copied().unwrap_or("?")
    }

    pub fn from_name(name: &str) -> Option<Dep> {
        DEP_NAMES.iter().position(|n| *n == name).map(|i| Dep(i as u8))
    }

    /// Equation placeholder for the `j`-th equation of a system.
    pub fn equation(j: usize) -> Dep {
        assert!(j < 2, "only two-component systems carry equation placeholders");
        Dep(Dep::EQ1.0 + j as u8)
    }

    pub fn is_equation(self) -> bool {
        self == Dep::EQ1 || self == Dep::EQ2
    }
}

impl fmt::Display for Dep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Symbolic constant parameter (wave speed, ansatz coefficients, ...).
/// Total derivatives annihilate parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Param(pub u8);

const PARAM_NAMES: [&str; 12] = ["mu", "a0", "a1", "b0", "b1", "b2", "T", "s3", "c1", "c2", "s", "si"];

impl Param {
    pub const MU: Param = Param(0);
    pub const A0: Param = Param(1);
    pub const A1: Param = Param(2);
    pub const B0: Param = Param(3);
    pub const B1: Param = Param(4);
    pub const B2: Param = Param(5);
    /// `tanh` of the traveling phase in the hyperbolic-tangent ansatz.
    pub const TANH: Param = Param(6);
    /// Square root of three, reduced with `s3^2 = 3`.
    pub const SQRT3: Param = Param(7);
    pub const C1: Param = Param(8);
    pub const C2: Param = Param(9);
    /// Square root of `t` in similarity reductions.
    pub const ROOT_T: Param = Param(10);
    /// Reciprocal of [`Param::ROOT_T`].
    pub const INV_ROOT_T: Param = Param(11);

    pub fn name(self) -> &'static str {
        PARAM_NAMES.get(self.0 as usize).copied().unwrap_or("?")
    }

    pub fn from_name(name: &str) -> Option<Param> {
        PARAM_NAMES.iter().position(|n| *n == name).map(|i| Param(i as u8))
    }
}

/// Independent variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    T,
}

/// Jet coordinate `dep` differentiated `dx` times in x and `dt` times in t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetVar {
    pub dep: Dep,
    pub dx: u32,
    pub dt: u32,
}

impl JetVar {
    pub const fn new(dep: Dep, dx: u32, dt: u32) -> Self {
        JetVar { dep, dx, dt }
    }

    pub fn base(dep: Dep) -> Self {
        JetVar::new(dep, 0, 0)
    }

    pub fn order(&self) -> u32 {
        self.dx + self.dt
    }

    pub fn lift(self, axis: Axis) -> Self {
        match axis {
            Axis::X => JetVar::new(self.dep, self.dx + 1, self.dt),
            Axis::T => JetVar::new(self.dep, self.dx, self.dt + 1),
        }
    }
}

impl fmt::Display for JetVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.dep, self.dx, self.dt)
    }
}

/// Generator of the polynomial ring.
///
/// The derived ordering puts jet coordinates first, then `x`, `t`, then
/// parameters; monomials compare their sorted factor lists with it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    Jet(JetVar),
    X,
    T,
    Param(Param),
}

impl Sym {
    pub fn jet(dep: Dep, dx: u32, dt: u32) -> Self {
        Sym::Jet(JetVar::new(dep, dx, dt))
    }

    pub fn as_jet(&self) -> Option<JetVar> {
        match self {
            Sym::Jet(v) => Some(*v),
            _ => None,
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::Jet(v) => v.fmt(f),
            Sym::X => f.write_str("x"),
            Sym::T => f.write_str("t"),
            Sym::Param(p) => f.write_str(p.name()),
        }
    }
}
