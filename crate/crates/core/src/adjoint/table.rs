//! The action of `P1..P4` on `Q1..Q6` and the bracket it induces.

use num_traits::Zero;

use crate::jet::{EvolutionSystem, JetPoly, Rat, SystemError};
use crate::linalg;
use crate::symmetry::char_structure_constants;

use super::action1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error(transparent)]
    System(#[from] SystemError),
    #[error("image of Q{q} under P{p} leaves the span of the basis")]
    Decomposition { q: usize, p: usize, residue: Vec<JetPoly> },
}

/// `cells[i][j]` holds the coordinates of the image of `Q_i` under `P_j`
/// in the basis `qs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    pub cells: Vec<Vec<Vec<Rat>>>,
}

impl ActionTable {
    /// Matrix of `S_{Q_fix}: P_j ↦ action(P_j, Q_fix)`, `m[k][j]`.
    pub fn s_matrix(&self, fix: usize) -> Vec<Vec<Rat>> {
        let row = &self.cells[fix];
        let nq = row.first().map_or(0, Vec::len);
        (0..nq).map(|k| row.iter().map(|c| c[k].clone()).collect()).collect()
    }
}

pub fn build_action_table(
    ps: &[Vec<JetPoly>],
    qs: &[Vec<JetPoly>],
    sys: &EvolutionSystem,
) -> Result<ActionTable, TableError> {
    let mut cells = Vec::with_capacity(qs.len());
    for (i, q) in qs.iter().enumerate() {
        let mut row = Vec::with_capacity(ps.len());
        for (j, p) in ps.iter().enumerate() {
            let img = action1(p, q, sys)?;
            let c = linalg::decompose(&img, qs)
                .map_err(|residue| TableError::Decomposition { q: i + 1, p: j + 1, residue })?;
            row.push(c);
        }
        cells.push(row);
    }
    Ok(ActionTable { cells })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BracketError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("argument is not an adjoint symmetry in the basis")]
    OutsideBasis,
    #[error("argument is not in the range of S_Q{0}")]
    NotInRange(usize),
    #[error("kernel of S_Q{0} is not an ideal; the preimage class is ambiguous")]
    AmbiguousPreimage(usize),
    #[error("characteristics do not close under the bracket")]
    NotClosed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqBracket {
    /// Coordinates of the result in the `Q` basis.
    pub coords: Vec<Rat>,
    pub value: Vec<JetPoly>,
    /// Basis of `ker S_Q` in `P` coordinates.
    pub kernel: Vec<Vec<Rat>>,
}

fn mat_vec(m: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    m.iter().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

fn bracket_coords(c: &[Vec<Vec<Rat>>], x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    let n = c.len();
    let mut out = vec![Rat::zero(); n];
    for i in 0..n {
        for j in 0..n {
            let w = &x[i] * &y[j];
            if w.is_zero() {
                continue;
            }
            for (o, ck) in out.iter_mut().zip(&c[i][j]) {
                *o += &w * ck;
            }
        }
    }
    out
}

/// Whether the span of `kernel` is closed under bracketing with all of
/// `P1..Pn`.
pub fn kernel_is_ideal(c: &[Vec<Vec<Rat>>], kernel: &[Vec<Rat>]) -> bool {
    let n = c.len();
    let ker_t: Vec<Vec<Rat>> = (0..n).map(|r| kernel.iter().map(|k| k[r].clone()).collect()).collect();
    kernel.iter().all(|k| {
        (0..n).all(|j| {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::from_integer(1.into());
            let b = bracket_coords(c, k, &e);
            b.iter().all(Zero::is_zero) || linalg::solve(&ker_t, &b).is_some()
        })
    })
}

/// `S_Q([S_Q⁻¹ A, S_Q⁻¹ B])` with `Q = qs[fix]`. Preimages have zero
/// component on the free columns of `S_Q`, i.e. along the kernel.
pub fn sq_bracket(
    fix: usize,
    a: &[JetPoly],
    b: &[JetPoly],
    ps: &[Vec<JetPoly>],
    qs: &[Vec<JetPoly>],
    sys: &EvolutionSystem,
) -> Result<SqBracket, BracketError> {
    let table = build_action_table(ps, qs, sys)?;
    let c = char_structure_constants(ps, sys)
        .map_err(TableError::from)?
        .ok_or(BracketError::NotClosed)?;
    let m = table.s_matrix(fix);
    let kernel = linalg::kernel(&m, ps.len());
    if !kernel.is_empty() && !kernel_is_ideal(&c, &kernel) {
        return Err(BracketError::AmbiguousPreimage(fix + 1));
    }
    let pre = |w: &[JetPoly]| -> Result<Vec<Rat>, BracketError> {
        let coords = linalg::decompose(w, qs).map_err(|_| BracketError::OutsideBasis)?;
        linalg::solve(&m, &coords).ok_or(BracketError::NotInRange(fix + 1))
    };
    let x = pre(a)?;
    let y = pre(b)?;
    let coords = mat_vec(&m, &bracket_coords(&c, &x, &y));
    let value = linalg::combine(qs, &coords, sys.width());
    Ok(SqBracket { coords, value, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::rat;
    use crate::model;

    fn combo_vec(combo: &model::Combo, n: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        for (k, c) in combo {
            v[*k] = c.clone();
        }
        v
    }

    #[test]
    fn table_against_print() {
        let sys = model::dlw();
        let t = build_action_table(&model::characteristics_printed(), &model::adjoint_symmetries(), &sys).unwrap();
        let printed = model::action_table_printed();
        let mut mismatches = Vec::new();
        for i in 0..6 {
            for j in 0..4 {
                if t.cells[i][j] != combo_vec(&printed[i][j], 6) {
                    mismatches.push((i, j));
                }
            }
        }
        assert_eq!(mismatches, vec![(5, 3)]);
        let mut want = vec![Rat::zero(); 6];
        want[5] = rat(-1, 2);
        assert_eq!(t.cells[5][3], want);
    }

    #[test]
    fn table_entries_from_second_action() {
        let sys = model::dlw();
        let ps = model::characteristics_printed();
        let qs = model::adjoint_symmetries();
        for p in &ps {
            for q in &qs {
                assert_eq!(action1(p, q, &sys).unwrap(), super::super::action2(p, q, &sys).unwrap());
            }
        }
    }

    #[test]
    fn brackets() {
        let sys = model::dlw();
        let ps = model::characteristics_printed();
        let qs = model::adjoint_symmetries();
        let r = sq_bracket(0, &qs[0], &qs[2], &ps, &qs, &sys).unwrap();
        assert_eq!(r.coords, combo_vec(&vec![(2, rat(-1, 4))], 6));
        let r = sq_bracket(2, &qs[2], &qs[3], &ps, &qs, &sys).unwrap();
        assert_eq!(r.coords, combo_vec(&vec![(3, rat(-1, 3))], 6));
        let r = sq_bracket(3, &qs[3], &qs[5], &ps, &qs, &sys).unwrap();
        assert_eq!(r.coords, combo_vec(&vec![(5, rat(-1, 2))], 6));
        let r = sq_bracket(3, &qs[3], &qs[3], &ps, &qs, &sys).unwrap();
        assert!(r.value.iter().all(JetPoly::is_zero));
    }

    #[test]
    fn q2_kernel_is_not_an_ideal() {
        let sys = model::dlw();
        let ps = model::characteristics_printed();
        let qs = model::adjoint_symmetries();
        assert_eq!(sq_bracket(1, &qs[3], &qs[5], &ps, &qs, &sys), Err(BracketError::AmbiguousPreimage(2)));
    }

    #[test]
    fn outside_range() {
        let sys = model::dlw();
        let ps = model::characteristics_printed();
        let qs = model::adjoint_symmetries();
        assert_eq!(sq_bracket(0, &qs[1], &qs[2], &ps, &qs, &sys), Err(BracketError::NotInRange(1)));
    }
}
