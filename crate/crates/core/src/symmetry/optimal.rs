//! Adjoint action on `l = (l¹, l², l³, l⁴)` and reduction of one-dimensional
//! subalgebras to class representatives.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::jet::{rat, Rat};

pub type Constants = Vec<Vec<Vec<Rat>>>;

/// Matrix `A_i` of the linear field `E_i`: `dl/da = A_i l`, with
/// `A_i[k][j] = c^k_{ij}`.
pub fn e_matrices(c: &Constants) -> Vec<Vec<Vec<Rat>>> {
    let n = c.len();
    (0..n)
        .map(|i| (0..n).map(|k| (0..n).map(|j| c[i][j][k].clone()).collect()).collect())
        .collect()
}

/// `E_i` as `(j, k, c)` triples meaning `c l^j ∂/∂l^k`.
pub fn e_terms(c: &Constants) -> Vec<Vec<(usize, usize, Rat)>> {
    let n = c.len();
    (0..n)
        .map(|i| {
            let mut v = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    if !c[i][j][k].is_zero() {
                        v.push((j, k, c[i][j][k].clone()));
                    }
                }
            }
            v
        })
        .collect()
}

fn mat_vec(a: &[Vec<Rat>], l: &[Rat]) -> Vec<Rat> {
    a.iter().map(|row| row.iter().zip(l).map(|(x, y)| x * y).sum()).collect()
}

/// `exp(a A) l` for nilpotent `A`, summed exactly. `None` if `A` is not
/// nilpotent.
pub fn nilpotent_flow(a_mat: &[Vec<Rat>], a: &Rat, l: &[Rat]) -> Option<Vec<Rat>> {
    let n = l.len();
    let mut out = l.to_vec();
    let mut term = l.to_vec();
    for k in 1..=n {
        term = mat_vec(a_mat, &term).into_iter().map(|x| x * a / Rat::from_integer(k.into())).collect();
        if term.iter().all(Zero::is_zero) {
            return Some(out);
        }
        for (o, t) in out.iter_mut().zip(&term) {
            *o += t;
        }
    }
    None
}

/// Logged step of the reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    T1(Rat),
    T2(Rat),
    T3(Rat),
    /// Scaling with `s = e^{-a/2}`, recorded through `s³` since `s` itself
    /// may be irrational.
    T4Cube(Rat),
}

/// `T1`: `l¹ += a l⁴`, `l² += a l³`.
pub fn t1(l: &[Rat], a: &Rat) -> Vec<Rat> {
    vec![&l[0] + a * &l[3], &l[1] + a * &l[2], l[2].clone(), l[3].clone()]
}

/// `T2`: `l² += (a/2) l⁴`.
pub fn t2(l: &[Rat], a: &Rat) -> Vec<Rat> {
    vec![l[0].clone(), &l[1] + a * &l[3] / rat(2, 1), l[2].clone(), l[3].clone()]
}

/// `T3`: `l² -= a l¹`, `l³ -= (a/2) l⁴`.
pub fn t3(l: &[Rat], a: &Rat) -> Vec<Rat> {
    vec![l[0].clone(), &l[1] - a * &l[0], &l[2] - a * &l[3] / rat(2, 1), l[3].clone()]
}

/// `T4` with `s = e^{-a/2} > 0`: `(s² l¹, s l², l³/s, l⁴)`.
pub fn t4(l: &[Rat], s: &Rat) -> Vec<Rat> {
    assert!(s.is_positive());
    vec![&l[0] * s * s, &l[1] * s, &l[2] / s, l[3].clone()]
}

/// Applies `T1..T4` in order; the fourth parameter is `s`.
pub fn adjoint_transformations(l: &[Rat], a: &[Rat; 4]) -> Vec<Rat> {
    let l = t1(l, &a[0]);
    let l = t2(&l, &a[1]);
    let l = t3(&l, &a[2]);
    t4(&l, &a[3])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Class {
    X1,
    X2,
    X3,
    X4,
    X1PlusX3,
    X1MinusX3,
}

impl Class {
    pub const ALL: [Class; 6] = [Class::X1, Class::X2, Class::X3, Class::X4, Class::X1PlusX3, Class::X1MinusX3];

    pub fn name(self) -> &'static str {
        match self {
            Class::X1 => "X1",
            Class::X2 => "X2",
            Class::X3 => "X3",
            Class::X4 => "X4",
            Class::X1PlusX3 => "X1+X3",
            Class::X1MinusX3 => "X1-X3",
        }
    }

    pub fn representative(self) -> Vec<Rat> {
        let v = |a: i64, b: i64, c: i64, d: i64| vec![rat(a, 1), rat(b, 1), rat(c, 1), rat(d, 1)];
        match self {
            Class::X1 => v(1, 0, 0, 0),
            Class::X2 => v(0, 1, 0, 0),
            Class::X3 => v(0, 0, 1, 0),
            Class::X4 => v(0, 0, 0, 1),
            Class::X1PlusX3 => v(1, 0, 1, 0),
            Class::X1MinusX3 => v(1, 0, -1, 0),
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub class: Class,
    pub log: Vec<Step>,
    /// Vector after the logged `T1..T3` steps, before scaling.
    pub reduced: Vec<Rat>,
    /// `reduced` divided by its leading nonzero entry.
    pub normalized: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("the zero vector spans no subalgebra")]
pub struct ZeroVector;

fn normalize(l: &[Rat]) -> Vec<Rat> {
    let lead = l.iter().find(|x| !x.is_zero()).cloned().unwrap_or_else(Rat::one);
    l.iter().map(|x| x / &lead).collect()
}

/// Case tree on `l⁴`, then `l¹`, then `l³`.
pub fn optimal_reduce(l: &[Rat]) -> Result<Reduction, ZeroVector> {
    if l.iter().all(Zero::is_zero) {
        return Err(ZeroVector);
    }
    let mut log = Vec::new();
    let mut l = l.to_vec();
    let class = if !l[3].is_zero() {
        let a = -&l[0] / &l[3];
        l = t1(&l, &a);
        log.push(Step::T1(a));
        let a = rat(2, 1) * &l[2] / &l[3];
        l = t3(&l, &a);
        log.push(Step::T3(a));
        let a = rat(-2, 1) * &l[1] / &l[3];
        l = t2(&l, &a);
        log.push(Step::T2(a));
        Class::X4
    } else if !l[0].is_zero() {
        let a = &l[1] / &l[0];
        l = t3(&l, &a);
        log.push(Step::T3(a));
        if l[2].is_zero() {
            Class::X1
        } else {
            let ratio = &l[2] / &l[0];
            log.push(Step::T4Cube(ratio.abs()));
            if ratio.is_positive() {
                Class::X1PlusX3
            } else {
                Class::X1MinusX3
            }
        }
    } else if !l[2].is_zero() {
        let a = -&l[1] / &l[2];
        l = t1(&l, &a);
        log.push(Step::T1(a));
        Class::X3
    } else {
        Class::X2
    };
    let normalized = normalize(&l);
    Ok(Reduction { class, log, reduced: l, normalized })
}

/// Replays the logged `T1..T3` steps.
pub fn replay(l: &[Rat], log: &[Step]) -> Vec<Rat> {
    log.iter().fold(l.to_vec(), |l, s| match s {
        Step::T1(a) => t1(&l, a),
        Step::T2(a) => t2(&l, a),
        Step::T3(a) => t3(&l, a),
        Step::T4Cube(_) => l,
    })
}

/// True when `r` reduces to the class it claims: the replayed log lands on
/// a multiple of the representative, or for `X1±X3` on `(l¹, 0, l³, 0)`
/// with the claimed sign of `l³/l¹`.
pub fn check_reduction(l: &[Rat], r: &Reduction) -> bool {
    let end = replay(l, &r.log);
    if end != r.reduced {
        return false;
    }
    match r.class {
        Class::X1PlusX3 | Class::X1MinusX3 => {
            let ok_shape = end[1].is_zero() && end[3].is_zero() && !end[0].is_zero() && !end[2].is_zero();
            let sign = (&end[2] / &end[0]).is_positive();
            ok_shape && sign == (r.class == Class::X1PlusX3)
        }
        c => r.normalized == c.representative(),
    }
}

/// Invariants of the adjoint action on projective classes: `l⁴ ≠ 0`, and
/// for `l⁴ = 0` the sign of `l¹ l³` and whether `l¹`, `l³` vanish. Distinct
/// values certify that two vectors are not conjugate.
pub fn invariant(l: &[Rat]) -> (bool, i8, bool, bool) {
    if !l[3].is_zero() {
        return (true, 0, false, false);
    }
    let s = (&l[0] * &l[2]).signum();
    let s = if s.is_positive() { 1 } else if s.is_negative() { -1 } else { 0 };
    (false, s, l[0].is_zero(), l[2].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model;
    use crate::symmetry::bracket::structure_constants;

    fn v(a: i64, b: i64, c: i64, d: i64) -> Vec<Rat> {
        vec![rat(a, 1), rat(b, 1), rat(c, 1), rat(d, 1)]
    }

    #[test]
    fn scaling_generator_alone() {
        assert_eq!(optimal_reduce(&v(0, 0, 0, 7)).unwrap().class, Class::X4);
    }

    #[test]
    fn case_one_without_x3() {
        let r = optimal_reduce(&v(1, 5, 0, 0)).unwrap();
        assert_eq!(r.class, Class::X1);
        assert_eq!(r.log, vec![Step::T3(rat(5, 1))]);
    }

    #[test]
    fn galilean_combination() {
        let r = optimal_reduce(&v(1, 0, 2, 0)).unwrap();
        assert_eq!(r.class, Class::X1PlusX3);
        assert!(check_reduction(&v(1, 0, 2, 0), &r));
        assert_eq!(optimal_reduce(&v(-1, 3, 2, 0)).unwrap().class, Class::X1MinusX3);
    }

    #[test]
    fn x2_plus_x4_is_conjugate_to_x4() {
        assert_eq!(optimal_reduce(&v(0, 1, 0, 1)).unwrap().class, Class::X4);
        assert_eq!(optimal_reduce(&v(0, 1, 1, 0)).unwrap().class, Class::X3);
    }

    #[test]
    fn transformations_are_flows_of_e() {
        let c = structure_constants(&model::generators()).unwrap();
        let a_mats = e_matrices(&c);
        let l = v(3, -2, 5, 7);
        let a = rat(2, 3);
        assert_eq!(nilpotent_flow(&a_mats[0], &a, &l).unwrap(), t1(&l, &a));
        assert_eq!(nilpotent_flow(&a_mats[1], &a, &l).unwrap(), t2(&l, &a));
        assert_eq!(nilpotent_flow(&a_mats[2], &a, &l).unwrap(), t3(&l, &a));
        // A_4 is diagonal (-1, -1/2, 1/2, 0)
        let d: Vec<Rat> = (0..4).map(|k| a_mats[3][k][k].clone()).collect();
        assert_eq!(d, vec![rat(-1, 1), rat(-1, 2), rat(1, 2), rat(0, 1)]);
        assert!(nilpotent_flow(&a_mats[3], &a, &l).is_none());
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(optimal_reduce(&v(0, 0, 0, 0)), Err(ZeroVector));
        assert_eq!(adjoint_transformations(&v(1, 2, 3, 4), &[rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]), v(1, 2, 3, 4));
    }
}
