//! Exact linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::jet::{JetPoly, Monomial, Rat};

/// Row echelon data: reduced rows and the pivot column of each.
struct Echelon {
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

fn rref(mut m: Vec<Vec<Rat>>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..m[i].len() {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Echelon { rows: m, pivots }
}

pub fn rank(a: &[Vec<Rat>]) -> usize {
    let ncols = a.first().map_or(0, Vec::len);
    rref(a.to_vec(), ncols).pivots.len()
}

/// Solves `a x = b`; free variables are set to zero. `None` if inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = a.first().map_or(0, Vec::len);
    let aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let e = rref(aug, ncols + 1);
    if e.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &c) in e.rows.iter().zip(&e.pivots) {
        x[c] = row[ncols].clone();
    }
    Some(x)
}

/// Basis of the null space of `a` (as column vectors).
pub fn kernel(a: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let e = rref(a.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (row, &c) in e.rows.iter().zip(&e.pivots) {
                v[c] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Coordinates of `target` in the span of `basis`, matching coefficients
/// of every (component, monomial) slot. `Err(residue)` when outside.
pub fn decompose(target: &[JetPoly], basis: &[Vec<JetPoly>]) -> Result<Vec<Rat>, Vec<JetPoly>> {
    let mut slots: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let note = |i: usize, p: &JetPoly, slots: &mut BTreeMap<(usize, Monomial), usize>| {
        for (m, _) in p.terms() {
            let n = slots.len();
            slots.entry((i, m.clone())).or_insert(n);
        }
    };
    for (i, p) in target.iter().enumerate() {
        note(i, p, &mut slots);
    }
    for b in basis {
        for (i, p) in b.iter().enumerate() {
            note(i, p, &mut slots);
        }
    }
    let mut a = vec![vec![Rat::zero(); basis.len()]; slots.len()];
    let mut rhs = vec![Rat::zero(); slots.len()];
    for (k, b) in basis.iter().enumerate() {
        for (i, p) in b.iter().enumerate() {
            for (m, c) in p.terms() {
                a[slots[&(i, m.clone())]][k] = c.clone();
            }
        }
    }
    for (i, p) in target.iter().enumerate() {
        for (m, c) in p.terms() {
            rhs[slots[&(i, m.clone())]] = c.clone();
        }
    }
    if basis.is_empty() {
        return if target.iter().all(JetPoly::is_zero) {
            Ok(Vec::new())
        } else {
            Err(target.to_vec())
        };
    }
    if slots.is_empty() {
        return Ok(vec![Rat::zero(); basis.len()]);
    }
    match solve(&a, &rhs) {
        Some(x) => Ok(x),
        None => Err(target.to_vec()),
    }
}

/// `Σ coeffs[k] · basis[k]`, component-wise.
pub fn combine(basis: &[Vec<JetPoly>], coeffs: &[Rat], width: usize) -> Vec<JetPoly> {
    let mut out = vec![JetPoly::zero(); width];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, p) in out.iter_mut().zip(b) {
            *o += p.scale(c);
        }
    }
    out
}
