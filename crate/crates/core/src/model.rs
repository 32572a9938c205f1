//! The dispersive long-wave system and the catalogue of objects attached
//! to it, transcribed as given: generators, characteristics, adjoint
//! symmetries, conservation laws, Lagrangian data, flows, first integrals.
//!
//! Items marked "as printed" are kept verbatim even when they turn out to be
//! wrong; corrected variants are separate functions.

use crate::conslaw::law::{ConservationLaw, Family};
use crate::jet::{rat, Dep, EvolutionSystem, JetPoly, LinearDiffOp, Rat};
use crate::symmetry::point::PointSymmetry;

/// Parses a polynomial in canonical text form. Panics on malformed input,
/// which only happens for a bad literal in this file.
pub fn p(s: &str) -> JetPoly {
    s.parse().unwrap_or_else(|e| panic!("bad literal {s:?}: {e}"))
}

fn pair(a: &str, b: &str) -> Vec<JetPoly> {
    vec![p(a), p(b)]
}

/// `u_t + u u_x + v_x = 0`, `v_t + u_x v + u v_x + u_xxx/3 = 0`.
pub fn dlw() -> EvolutionSystem {
    EvolutionSystem::evolution(
        "dlw",
        vec![
            (Dep::U, p("u[0,0]*u[1,0] + v[1,0]")),
            (Dep::V, p("u[1,0]*v[0,0] + u[0,0]*v[1,0] + (1/3)*u[3,0]")),
        ],
    )
}

/// The system in potentials `u = q_x`, `v = r_x`, solved for `q_xt`, `r_xt`.
pub fn potential() -> EvolutionSystem {
    EvolutionSystem::potential(
        "dlw-potential",
        vec![
            (Dep::Q, p("q[1,0]*q[2,0] + r[2,0]")),
            (Dep::R, p("q[2,0]*r[1,0] + q[1,0]*r[2,0] + (1/3)*q[4,0]")),
        ],
    )
}

pub const UV: [Dep; 2] = [Dep::U, Dep::V];
pub const QR: [Dep; 2] = [Dep::Q, Dep::R];

fn field(xi_t: &str, xi_x: &str, eta_u: &str, eta_v: &str) -> PointSymmetry {
    PointSymmetry::new(p(xi_t), p(xi_x), vec![p(eta_u), p(eta_v)], UV.to_vec())
}

/// `X1 = ∂t`, `X2 = ∂x`, `X3 = t∂x + ∂u`, `X4 = (x/2)∂x + t∂t - (u/2)∂u - v∂v`.
pub fn generators() -> Vec<PointSymmetry> {
    vec![
        field("1", "0", "0", "0"),
        field("0", "1", "0", "0"),
        field("0", "t", "1", "0"),
        field("t", "(1/2)*x", "(-1/2)*u[0,0]", "(-1)*v[0,0]"),
    ]
}

/// Characteristics `P1..P4` as printed.
pub fn characteristics_printed() -> Vec<Vec<JetPoly>> {
    vec![
        pair("(-1)*u[0,1]", "(-1)*v[0,1]"),
        pair("(-1)*u[1,0]", "(-1)*v[1,0]"),
        pair("(1) + (-1)*t*u[1,0]", "(-1)*t*v[1,0]"),
        pair(
            "(-1/2)*u[0,0] + (-1/2)*x*u[1,0] + (-1)*t*u[0,1]",
            "(-1)*v[0,0] + (-1/2)*x*v[1,0] + (-1)*t*v[0,1]",
        ),
    ]
}

/// Reduced system from `X1 + X3` as printed (`f, g` functions of
/// `z = t²/2 - x`, stored in the `x` slot).
pub fn reduced_x1_x3_printed() -> Vec<JetPoly> {
    vec![
        p("(1) + f[1,0]*t + (-1)*t*f[1,0] + (-1)*f[0,0]*f[1,0] + (-1)*g[1,0]"),
        p("t*g[1,0] + (-1)*f[1,0]*g[0,0] + (-1)*t*g[1,0] + (-1)*f[0,0]*g[1,0] + (-1/3)*f[3,0]"),
    ]
}

/// Reduced system from `X2 + X4` as printed (`R = (x+2)/√t` stored in the
/// `x` slot).
pub fn reduced_x2_x4_printed() -> Vec<JetPoly> {
    vec![
        p("(-1/2)*x*f[1,0] + (-1/2)*f[0,0] + f[0,0]*f[1,0] + g[1,0]"),
        p("(-1)*g[0,0] + (-1/2)*x*g[1,0] + g[0,0]*f[1,0] + f[0,0]*g[1,0] + (1/3)*f[3,0]"),
    ]
}

/// A linear combination `Σ c_k B_k` over a numbered basis (0-based).
pub type Combo = Vec<(usize, Rat)>;

fn c(k: usize, n: i64, d: i64) -> (usize, Rat) {
    (k, rat(n, d))
}

/// Nonzero commutators `[X_i, X_j]` as printed, 0-based.
pub fn brackets_printed() -> Vec<(usize, usize, Combo)> {
    vec![
        (0, 2, vec![c(1, 1, 1)]),
        (0, 3, vec![c(0, 1, 1)]),
        (1, 3, vec![c(1, 1, 2)]),
        (2, 3, vec![c(2, -1, 2)]),
    ]
}

/// Nonzero commutators `[P_i, P_j]` as printed.
pub fn char_brackets_printed() -> Vec<(usize, usize, Combo)> {
    vec![
        (0, 2, vec![c(3, 1, 1)]),
        (0, 3, vec![c(0, 1, 1)]),
        (1, 3, vec![c(1, 1, 2)]),
        (2, 3, vec![c(2, -1, 2)]),
    ]
}

/// `E_i` as printed: entries `(j, k, c)` meaning `c l^j ∂/∂l^k`.
pub fn e_generators_printed() -> Vec<Vec<(usize, usize, Rat)>> {
    vec![
        vec![(2, 1, rat(1, 1)), (3, 0, rat(1, 1))],
        vec![(3, 1, rat(1, 2))],
        vec![(0, 1, rat(-1, 1))],
        vec![(0, 0, rat(-1, 1)), (1, 1, rat(-1, 2)), (2, 2, rat(-1, 2))],
    ]
}

/// Adjoint symmetries `Q1..Q6` as printed.
pub fn adjoint_symmetries_printed() -> Vec<Vec<JetPoly>> {
    vec![
        pair(
            "v[2,0] + (9/4)*v[0,0]^2 + (9/4)*u[0,0]^2*v[0,0] + (3/2)*u[0,0]*u[2,0] + (3/4)*u[1,0]^2",
            "u[2,0] + (3/4)*u[0,0]^3 + (9/2)*u[0,0]*v[0,0]",
        ),
        pair("t*v[0,0]", "t*u[0,0] + (-1)*x"),
        pair("t*v[0,0]", "(1/2)*u[0,0]^2 + v[0,0]"),
        pair("v[0,0]", "u[0,0]"),
        pair("1", "0"),
        pair("0", "1"),
    ]
}

/// `Q3` replaced by the variational gradient of the Hamiltonian, the only
/// adjoint symmetry with the printed second component and scaling weight.
pub fn q3_corrected() -> Vec<JetPoly> {
    pair("u[0,0]*v[0,0] + (1/3)*u[2,0]", "v[0,0] + (1/2)*u[0,0]^2")
}

/// `Q1..Q6` with the corrected `Q3`.
pub fn adjoint_symmetries() -> Vec<Vec<JetPoly>> {
    let mut qs = adjoint_symmetries_printed();
    qs[2] = q3_corrected();
    qs
}

/// Action table as printed: `table[i][j]` is the image of `Q_i` under `P_j`.
pub fn action_table_printed() -> Vec<Vec<Combo>> {
    let z = Vec::new;
    vec![
        vec![z(), z(), vec![c(2, 9, 2)], vec![c(0, -2, 1)]],
        vec![vec![c(3, 1, 1)], vec![c(5, -1, 1)], z(), z()],
        vec![z(), z(), vec![c(3, 1, 1)], vec![c(2, -3, 2)]],
        vec![z(), z(), vec![c(5, 1, 1)], vec![c(3, -1, 1)]],
        vec![z(), z(), z(), z()],
        vec![z(), z(), z(), z()],
    ]
}

/// `R_{P_i}` as printed.
pub fn r_p_printed() -> Vec<LinearDiffOp> {
    let diag = |terms: &[(u32, u32, &str)], terms2: &[(u32, u32, &str)]| {
        let mut op = LinearDiffOp::zero(2, 2);
        for (a, b, s) in terms {
            op.add(0, 0, *a, *b, p(s));
        }
        for (a, b, s) in terms2 {
            op.add(1, 1, *a, *b, p(s));
        }
        op
    };
    vec![
        diag(&[(0, 1, "(-1)")], &[(0, 1, "(-1)")]),
        diag(&[(1, 0, "(-1)")], &[(1, 0, "(-1)")]),
        diag(&[(1, 0, "(-1)*t")], &[(1, 0, "(-1)*t")]),
        diag(
            &[(0, 0, "(-3/2)"), (1, 0, "(-1/2)*x"), (0, 1, "(-1)*t")],
            &[(0, 0, "(-2)"), (1, 0, "(-1/2)*x"), (0, 1, "(-1)*t")],
        ),
    ]
}

/// One printed bracket `^{Q_fix}[Q_a, Q_b] = Σ c Q`.
#[derive(Debug, Clone)]
pub struct SqBracketPrinted {
    pub fix: usize,
    pub a: usize,
    pub b: usize,
    pub value: Combo,
}

pub fn sq_brackets_printed() -> Vec<SqBracketPrinted> {
    vec![
        SqBracketPrinted { fix: 0, a: 0, b: 2, value: vec![c(2, -1, 4)] },
        SqBracketPrinted { fix: 2, a: 2, b: 3, value: vec![c(3, 1, 3)] },
        SqBracketPrinted { fix: 3, a: 3, b: 5, value: vec![c(5, 1, 2)] },
    ]
}

fn law(label: &str, density: &str, flux: &str, family: Family) -> ConservationLaw {
    ConservationLaw::new(label, p(density), p(flux), family)
}

/// Laws obtained from `Q1`, `Q2`, `Q3`, `Q4`, `Q5+Q6`, as printed.
pub fn laws_printed() -> Vec<ConservationLaw> {
    use Family::Physical as Ph;
    vec![
        law(
            "eq29",
            "u[1,0]*v[1,0] + v[0,0]*u[2,0] + u[0,0]*v[2,0] + (3/4)*u[0,0]^3*v[0,0] + (9/4)*u[0,0]*v[0,0]^2 \
             + (3/4)*u[0,0]*u[1,0]^2 + (3/4)*u[0,0]^2*u[2,0]",
            "(27/8)*u[0,0]^2*v[0,0]^2 + (1/2)*v[1,0]^2 + (3/4)*v[0,0]^3 + (1/6)*u[2,0]^2 + (-1)*u[0,0]*v[1,1] \
             + (3/4)*u[0,0]^4*v[0,0] + (3/8)*u[0,0]^2*u[1,0]^2 + (1/4)*u[0,0]^3*u[2,0] \
             + (3/2)*u[0,0]*v[0,0]*u[2,0] + u[0,0]*u[1,0]*v[1,0] + (-1/4)*u[1,0]^2*v[0,0] \
             + (-3/4)*u[0,0]^2*u[1,1]",
            Ph,
        ),
        law(
            "eq30",
            "t*u[0,0]*v[0,0] + (-1)*x*v[0,0]",
            "(1/2)*t*v[0,0]^2 + (-1)*x*u[0,0]*v[0,0] + t*u[0,0]^2*v[0,0] + (1/3)*t*u[0,0]*u[2,0] \
             + (-1/6)*t*u[1,0]^2 + (-1/3)*x*u[2,0] + (1/3)*u[1,0]",
            Ph,
        ),
        law(
            "eq31",
            "v[0,0]^2*u[0,0] + (1/2)*u[0,0]^3*v[0,0] + (1/6)*u[0,0]^2*u[2,0] + (1/3)*v[0,0]*u[2,0] \
             + (1/3)*u[1,0]*u[0,1]",
            "(1/2)*v[0,0]^2 + (1/2)*u[0,0]^2*v[0,0] + (-1/6)*u[1,0]^2",
            Ph,
        ),
        law(
            "eq32",
            "u[0,0]*v[0,0]",
            "(1/2)*v[0,0]^2 + v[0,0]*u[0,0]^2 + (1/3)*u[0,0]*u[2,0] + (-1/6)*u[1,0]^2",
            Ph,
        ),
        law(
            "eq33",
            "u[0,0] + v[0,0]",
            "(1/2)*u[0,0]^2 + v[0,0] + u[0,0]*v[0,0] + (1/3)*u[2,0]",
            Ph,
        ),
    ]
}

/// `eq29` with `v u_xt` subtracted from the flux, which makes the pairing
/// with `Q1` exact off shell.
pub fn law_eq29_corrected() -> ConservationLaw {
    let l = laws_printed().remove(0);
    let flux = &l.flux - &p("v[0,0]*u[1,1]");
    ConservationLaw::new("eq29c", l.density, flux, Family::Physical)
}

/// Multiplier paired with each printed law (indices into `Q1..Q6`).
pub fn law_multipliers() -> Vec<(&'static str, Combo)> {
    vec![
        ("eq29", vec![c(0, 1, 1)]),
        ("eq30", vec![c(1, 1, 1)]),
        ("eq31", vec![c(2, 1, 1)]),
        ("eq32", vec![c(3, 1, 1)]),
        ("eq33", vec![c(4, 1, 1), c(5, 1, 1)]),
    ]
}

/// `L = -q_x r_t - r_x²/2 - q_x² r_x/2 + q_xx²/6`.
pub fn lagrangian() -> JetPoly {
    p("(-1)*q[1,0]*r[0,1] + (-1/2)*r[1,0]^2 + (-1/2)*q[1,0]^2*r[1,0] + (1/6)*q[2,0]^2")
}

/// Generalized symmetries `V1..V4` in potentials, as characteristics.
pub fn potential_symmetries() -> Vec<Vec<JetPoly>> {
    vec![
        pair("q[1,0]", "r[1,0]"),
        pair("q[0,1]", "r[0,1]"),
        pair("x + (-1)*t*q[1,0]", "(-1)*t*r[1,0]"),
        pair("t*q[0,1] + (1/2)*x*q[1,0]", "(1/2)*r[0,0] + t*r[0,1] + (1/2)*x*r[1,0]"),
    ]
}

/// `(A^x, A^t)` with `pr V L = D_x A^x + D_t A^t` for `V1..V3`.
pub fn noether_a() -> Vec<(JetPoly, JetPoly)> {
    vec![
        (lagrangian(), JetPoly::zero()),
        (JetPoly::zero(), lagrangian()),
        (
            p("t*q[1,0]*r[0,1] + (1/2)*t*r[1,0]^2 + (1/2)*t*q[1,0]^2*r[1,0] + (-1/6)*t*q[2,0]^2"),
            p("(-1)*r[0,0]"),
        ),
    ]
}

/// Flows from `V1..V3`, as printed (`f1` is the x-component).
pub fn noether_flows_printed() -> Vec<ConservationLaw> {
    use Family::Potential as Po;
    vec![
        law(
            "eq54",
            "(-1)*q[1,0]*r[1,0]",
            "(-1/2)*r[1,0]^2 + (-1)*q[1,0]^2*r[1,0] + (-1/3)*q[1,0]*q[3,0] + (1/6)*q[2,0]^2",
            Po,
        ),
        law(
            "eq55",
            "(1/2)*r[1,0]^2 + (1/2)*q[1,0]^2*r[1,0] + (-1/6)*q[2,0]^2",
            "(-1)*q[0,1]*r[0,1] + (-1)*r[0,1]*r[1,0] + (-1/2)*q[1,0]^2*r[0,1] + (-1)*q[0,1]*q[1,0]*r[1,0] \
             + (-1/3)*q[0,1]*q[3,0] + (1/3)*q[2,0]*q[1,1]",
            Po,
        ),
        law(
            "eq56",
            "t*q[1,0]*r[1,0] + r[0,0]",
            "(-1)*x*r[0,1] + (1/2)*t*r[1,0]^2 + (-1)*x*q[1,0]*r[1,0] + t*q[1,0]^2*r[1,0] + (-1/3)*x*q[3,0] \
             + (1/3)*t*q[1,0]*q[3,0] + (1/3)*q[2,0] + (-1/6)*t*q[2,0]^2",
            Po,
        ),
    ]
}

/// Ibragimov flows for `X1..X4` as printed, in the multiplier variables
/// `w1, w2` (density `C_t`, flux `C_x`).
pub fn ibragimov_flows_printed() -> Vec<ConservationLaw> {
    use Family::Physical as Ph;
    vec![
        law(
            "eq67",
            "(-1)*u[1,0]*w2[0,0] + (-1)*v[1,0]*w1[0,0]",
            "w1[0,0]*v[0,1] + w2[0,0]*u[0,1] + (-1/3)*u[1,0]*w1[2,0] + (1/3)*w1[1,0]*u[2,0]",
            Ph,
        ),
        law(
            "eq68",
            "w1[0,0]*u[1,0]*v[0,0] + w1[0,0]*v[1,0]*u[0,0] + (1/3)*w1[0,0]*u[3,0] + u[0,0]*w2[0,0]*u[1,0] \
             + w2[0,0]*v[1,0]",
            "(-1)*u[0,1]*v[0,0]*w1[0,0] + (-1)*u[0,0]*u[0,1]*w2[0,0] + (-1/3)*u[0,1]*w1[2,0] \
             + (-1)*u[0,0]*v[0,1]*w1[0,0] + (-1)*v[0,1]*w2[0,0] + (1/3)*u[1,1]*w1[1,0] \
             + (-1/3)*u[2,1]*w1[0,0]",
            Ph,
        ),
        law(
            "eq69",
            "w2[0,0] + (-1)*t*w2[0,0]*u[1,0] + (-1)*t*v[1,0]*w1[0,0]",
            "t*w1[0,0]*v[0,1] + t*w2[0,0]*u[0,1] + v[0,0]*w1[0,0] + u[0,0]*w2[0,0] + (1/3)*w1[2,0] \
             + (-1/3)*t*u[1,0]*w1[2,0] + (1/3)*t*u[2,0]*w1[1,0]",
            Ph,
        ),
        law(
            "eq70",
            "t*w1[0,0]*u[1,0]*v[0,0] + t*w1[0,0]*v[1,0]*u[0,0] + (1/3)*t*w1[0,0]*u[3,0] \
             + t*w2[0,0]*u[0,0]*u[1,0] + t*w2[0,0]*v[1,0] + (-1/2)*u[0,0]*w2[0,0] \
             + (-1/2)*x*w2[0,0]*u[1,0] + (-1)*v[0,0]*w1[0,0] + (-1/2)*x*w1[0,0]*v[1,0]",
            "(-1)*t*v[0,0]*u[0,1]*w1[0,0] + (-1)*t*u[0,1]*u[0,0]*w2[0,0] + (-1)*t*v[0,1]*u[0,0]*w1[0,0] \
             + (-1)*t*v[0,1]*w2[0,0] + (1/6)*x*w1[1,0]*u[2,0] + (1/3)*t*w1[1,0]*u[1,1] \
             + (-1/3)*t*w1[0,0]*u[2,1] + (1/2)*x*w1[0,0]*v[0,1] + (1/2)*x*w2[0,0]*u[0,1] \
             + (-3/2)*u[0,0]*v[0,0]*w1[0,0] + (-1/6)*x*u[1,0]*w1[2,0] + (-1/3)*t*u[0,1]*w1[2,0] \
             + (-1/2)*w2[0,0]*u[0,0]^2 + (-1/6)*u[0,0]*w1[2,0] + (-1)*v[0,0]*w2[0,0] \
             + (1/3)*w1[1,0]*u[1,0] + (-1/2)*w1[0,0]*u[2,0]",
            Ph,
        ),
    ]
}

/// `H = v²/2 + u²v/2 - u_x²/6`.
pub fn hamiltonian_density() -> JetPoly {
    p("(1/2)*v[0,0]^2 + (1/2)*u[0,0]^2*v[0,0] + (-1/6)*u[1,0]^2")
}

/// Printed gradient `(uv + u_xx/3, v + u²/2)`.
pub fn hamiltonian_gradient_printed() -> Vec<JetPoly> {
    q3_corrected()
}

/// `[[0, D_x], [D_x, 0]]`.
pub fn hamiltonian_operator() -> LinearDiffOp {
    let mut d = LinearDiffOp::zero(2, 2);
    d.add(0, 1, 1, 0, JetPoly::one());
    d.add(1, 0, 1, 0, JetPoly::one());
    d
}

/// Images of `P1..P4` under `D^{-1}`, as printed, written in potentials.
pub fn presymplectic_printed() -> Vec<Vec<JetPoly>> {
    vec![
        pair("(-1)*r[0,1]", "(-1)*q[0,1]"),
        pair("r[1,0]", "q[1,0]"),
        pair("(-1)*t*r[1,0]", "x + (-1)*t*q[1,0]"),
        pair(
            "(-1)*r[0,0] + (-1)*t*r[0,1] + (-1/2)*x*r[1,0] + r[0,0]",
            "(-1/2)*q[0,0] + (-1/2)*x*q[1,0] + q[0,0] + (-1)*t*q[0,1]",
        ),
    ]
}

/// Preimage of `P4` that does satisfy `D(Q) = P4`.
pub fn presymplectic_q4_corrected() -> Vec<JetPoly> {
    pair("(-1/2)*r[0,0] + (-1/2)*x*r[1,0] + (-1)*t*r[0,1]", "(-1/2)*x*q[1,0] + (-1)*t*q[0,1]")
}

/// Traveling-wave first integrals as printed. `C1` has two printed lines.
pub fn first_integrals_printed() -> Vec<(&'static str, JetPoly)> {
    vec![
        (
            "C1",
            p("(27/8)*U[0,0]^2*V[0,0]^2 + (1/2)*V[1,0]^2 + (3/4)*V[0,0]^3 + (1/6)*U[2,0]^2 + mu*U[0,0]*V[2,0] \
               + mu*V[0,0]*U[2,0] + (3/4)*U[0,0]^4*V[0,0] + (3/8)*U[0,0]^2*U[1,0]^2 + (1/4)*U[0,0]^3*U[2,0] \
               + (3/2)*U[0,0]*V[0,0]*U[2,0] + U[0,0]*U[1,0]*V[1,0] + (-1/4)*V[0,0]*U[1,0]^2 \
               + (3/4)*mu*U[0,0]^2*U[2,0] + (-1)*mu*U[1,0]*V[1,0] + (-1)*mu*V[0,0]*U[2,0] \
               + (-1)*mu*V[2,0]*U[0,0] + (-3/4)*mu*U[0,0]^3*V[0,0] + (-9/4)*mu*V[0,0]^2*U[0,0] \
               + (-3/4)*mu*U[0,0]*U[1,0]^2 + (-3/4)*mu*U[0,0]^2*U[2,0]"),
        ),
        (
            "C1'",
            p("(3/4)*U[0,0]^4*V[0,0] + (-3/4)*mu*U[0,0]^3*V[0,0] + (1/4)*U[0,0]^3*U[2,0] \
               + (27/8)*U[0,0]^2*V[0,0]^2 + (3/8)*U[0,0]^2*U[1,0]^2 + (-9/4)*mu*U[0,0]*V[0,0]^2 \
               + (-3/4)*mu*U[0,0]*U[1,0]^2 + (3/2)*U[0,0]*V[0,0]*U[2,0] + U[0,0]*U[1,0]*V[1,0] \
               + (3/4)*V[0,0]^3 + (-1/4)*V[0,0]*U[1,0]^2 + (-1)*mu*U[1,0]*V[1,0] + (1/6)*U[2,0]^2 \
               + (1/2)*V[1,0]^2"),
        ),
        (
            "C2",
            p("(1/2)*U[0,0]^3*V[0,0] + (-1/2)*mu*U[0,0]^2*V[0,0] + (1/6)*U[0,0]^2*U[2,0] + V[0,0]^2*U[0,0] \
               + (-1/2)*mu*V[0,0]^2 + (-1/6)*mu*U[1,0]^2 + (1/3)*V[0,0]*U[2,0]"),
        ),
        (
            "C3",
            p("(1/2)*V[0,0]^2 + U[0,0]^2*V[0,0] + (1/3)*U[0,0]*U[2,0] + (-1/6)*U[1,0]^2 + (-1)*mu*U[0,0]*V[0,0]"),
        ),
        (
            "C4",
            p("U[0,0]*V[0,0] + (1/3)*U[2,0] + (1/2)*U[0,0]^2 + V[0,0] + (-1)*mu*U[0,0] + (-1)*mu*V[0,0]"),
        ),
    ]
}

/// Coefficient equations of the tanh ansatz, as printed.
pub fn tanh_system_printed() -> Vec<JetPoly> {
    vec![
        p("(-64/3)*a1 + (-8)*mu*b1 + (8)*a1*b0 + (8)*b1*a0 + (-24)*a1*b2"),
        p("(-4)*mu*b1 + (-8)*mu*b2 + (4)*a1*b0 + (8)*a1*b1 + (12)*a1*b2 + (4)*a0*b1 + (8)*b2*a0 + (16/3)*a1"),
        p("(-4)*mu*b1 + (8)*mu*b2 + (4)*a1*b0 + (-8)*a1*b1 + (12)*a1*b2 + (4)*a0*b1 + (-8)*b2*a0 + (16/3)*a1"),
        p("(4)*a0*a1 + (-4)*mu*a1 + (4)*b1 + (4)*a1^2 + (8)*b2 + (4)*a1^2"),
        p("(4)*a0*a1 + (-4)*a1^2 + (4)*b1 + (-4)*mu*a1 + (-8)*b2"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_parse() {
        assert_eq!(generators().len(), 4);
        assert_eq!(adjoint_symmetries_printed().len(), 6);
        assert_eq!(laws_printed().len(), 5);
        assert_eq!(ibragimov_flows_printed().len(), 4);
        assert_eq!(first_integrals_printed().len(), 5);
        assert_eq!(tanh_system_printed().len(), 5);
        assert!(!lagrangian().is_zero());
    }

    #[test]
    fn printed_characteristics_match_generators() {
        let ps: Vec<_> = generators().iter().map(PointSymmetry::characteristic).collect();
        assert_eq!(ps, characteristics_printed());
    }

    #[test]
    fn both_printed_lines_of_c1_agree() {
        let fi = first_integrals_printed();
        assert_eq!(fi[0].1, fi[1].1);
    }

    #[test]
    fn u_t_reduces() {
        let r = dlw().reduce(&JetPoly::var(Dep::U, 0, 1)).unwrap();
        assert_eq!(r, p("(-1)*u[0,0]*u[1,0] + (-1)*v[1,0]"));
        let r = dlw().reduce(&JetPoly::var(Dep::U, 1, 1)).unwrap();
        assert_eq!(r, p("(-1)*u[1,0]^2 + (-1)*u[0,0]*u[2,0] + (-1)*v[2,0]"));
    }
}
