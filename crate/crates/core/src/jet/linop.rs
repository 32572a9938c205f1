//! Matrix linear differential operators with jet-polynomial coefficients.

use std::collections::BTreeMap;

use super::poly::{int, JetPoly};
use super::symbol::{Dep, Sym};

/// One entry: `Σ coeff · D_x^a D_t^b`, keyed by `(a, b)`.
pub type OpEntry = BTreeMap<(u32, u32), JetPoly>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("operator with {cols} columns applied to a tuple of length {got}")]
pub struct DimensionError {
    pub cols: usize,
    pub got: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearDiffOp {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<OpEntry>>,
}

fn binomial(n: u32, k: u32) -> i64 {
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

fn push(entry: &mut OpEntry, key: (u32, u32), c: JetPoly) {
    if c.is_zero() {
        return;
    }
    let slot = entry.entry(key).or_default();
    *slot += c;
    if slot.is_zero() {
        entry.remove(&key);
    }
}

/// `D^{(a,b)} ∘ c` expanded as `Σ coeff · D^{(k,l)}`.
fn move_right(a: u32, b: u32, c: &JetPoly) -> OpEntry {
    let mut out = OpEntry::new();
    for k in 0..=a {
        for l in 0..=b {
            let coeff = c.d(a - k, b - l).scale(&int(binomial(a, k) * binomial(b, l)));
            push(&mut out, (k, l), coeff);
        }
    }
    out
}

fn compose_entries(left: &OpEntry, right: &OpEntry) -> OpEntry {
    let mut out = OpEntry::new();
    for ((a, b), c1) in left {
        for ((a2, b2), c2) in right {
            for ((k, l), c) in move_right(*a, *b, c2) {
                push(&mut out, (k + a2, l + b2), c1 * &c);
            }
        }
    }
    out
}

impl LinearDiffOp {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearDiffOp { rows, cols, entries: vec![vec![OpEntry::new(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut op = Self::zero(n, n);
        for i in 0..n {
            op.set(i, i, 0, 0, JetPoly::one());
        }
        op
    }

    pub fn from_rows(rows: Vec<Vec<OpEntry>>, cols: usize) -> Self {
        let n = rows.len();
        let mut op = Self::zero(n, cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, e) in row.into_iter().enumerate() {
                for (k, c) in e {
                    push(&mut op.entries[i][j], k, c);
                }
            }
        }
        op
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &OpEntry {
        &self.entries[i][j]
    }

    /// Adds `c · D_x^a D_t^b` to entry `(i, j)`.
    pub fn add(&mut self, i: usize, j: usize, a: u32, b: u32, c: JetPoly) {
        push(&mut self.entries[i][j], (a, b), c);
    }

    pub fn set(&mut self, i: usize, j: usize, a: u32, b: u32, c: JetPoly) {
        self.entries[i][j].remove(&(a, b));
        self.add(i, j, a, b, c);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(BTreeMap::is_empty)
    }

    pub fn apply(&self, w: &[JetPoly]) -> Result<Vec<JetPoly>, DimensionError> {
        if w.len() != self.cols {
            return Err(DimensionError { cols: self.cols, got: w.len() });
        }
        Ok(self
            .entries
            .iter()
            .map(|row| {
                let mut acc = JetPoly::zero();
                for (j, e) in row.iter().enumerate() {
                    for ((a, b), c) in e {
                        acc += c * &w[j].d(*a, *b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Formal adjoint: `(c D^α)* = (-D)^α ∘ c`, transposed.
    pub fn formal_adjoint(&self) -> LinearDiffOp {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for ((a, b), c) in &self.entries[i][j] {
                    let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
                    for (k, term) in move_right(*a, *b, c) {
                        push(&mut out.entries[j][i], k, term.scale_int(sign));
                    }
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearDiffOp) -> Result<LinearDiffOp, DimensionError> {
        if self.cols != other.rows {
            return Err(DimensionError { cols: self.cols, got: other.rows });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..other.cols {
                for j in 0..self.cols {
                    for (key, c) in compose_entries(&self.entries[i][j], &other.entries[j][k]) {
                        push(&mut out.entries[i][k], key, c);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> LinearDiffOp {
        self.map_coeffs(|c| -c)
    }

    pub fn sum(&self, other: &LinearDiffOp) -> LinearDiffOp {
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                for (k, c) in &other.entries[i][j] {
                    push(&mut out.entries[i][j], *k, c.clone());
                }
            }
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&JetPoly) -> JetPoly) -> LinearDiffOp {
        let mut out = Self::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for (k, c) in &self.entries[i][j] {
                    push(&mut out.entries[i][j], *k, f(c));
                }
            }
        }
        out
    }

    pub fn is_skew_adjoint(&self) -> bool {
        self.formal_adjoint() == self.neg()
    }

    /// Highest `a + b` appearing.
    pub fn order(&self) -> u32 {
        self.entries
            .iter()
            .flatten()
            .flat_map(|e| e.keys().map(|(a, b)| a + b))
            .max()
            .unwrap_or(0)
    }
}

/// Fréchet derivative of the tuple `f` in the dependent variables `deps`.
pub fn frechet(f: &[JetPoly], deps: &[Dep]) -> LinearDiffOp {
    let mut op = LinearDiffOp::zero(f.len(), deps.len());
    for (i, fi) in f.iter().enumerate() {
        for v in fi.jet_vars() {
            if let Some(j) = deps.iter().position(|d| *d == v.dep) {
                op.add(i, j, v.dx, v.dt, fi.partial(&Sym::Jet(v)));
            }
        }
    }
    op
}

/// Directional derivative `f'(p)`.
pub fn directional(f: &[JetPoly], deps: &[Dep], p: &[JetPoly]) -> Vec<JetPoly> {
    frechet(f, deps).apply(p).expect("direction has one entry per dependent variable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::euler::is_null_lagrangian;

    fn u(a: u32, b: u32) -> JetPoly {
        JetPoly::var(Dep::U, a, b)
    }
    fn v(a: u32, b: u32) -> JetPoly {
        JetPoly::var(Dep::V, a, b)
    }

    #[test]
    fn identity_applies_trivially() {
        let w = vec![u(0, 0), v(0, 0)];
        assert_eq!(LinearDiffOp::identity(2).apply(&w).unwrap(), w);
    }

    #[test]
    fn zero_annihilates() {
        let w = vec![u(2, 0), v(0, 1)];
        assert!(LinearDiffOp::zero(2, 2).apply(&w).unwrap().iter().all(JetPoly::is_zero));
    }

    #[test]
    fn width_mismatch() {
        assert!(LinearDiffOp::identity(2).apply(&[u(0, 0)]).is_err());
    }

    #[test]
    fn first_order_adjoint() {
        let mut op = LinearDiffOp::zero(2, 2);
        op.add(0, 0, 0, 1, JetPoly::int(-1));
        op.add(1, 1, 0, 1, JetPoly::int(-1));
        let mut expected = LinearDiffOp::zero(2, 2);
        expected.add(0, 0, 0, 1, JetPoly::one());
        expected.add(1, 1, 0, 1, JetPoly::one());
        assert_eq!(op.formal_adjoint(), expected);
    }

    #[test]
    fn transport_adjoint() {
        let mut op = LinearDiffOp::zero(1, 1);
        op.add(0, 0, 1, 0, u(0, 0));
        let mut expected = LinearDiffOp::zero(1, 1);
        expected.add(0, 0, 1, 0, -u(0, 0));
        expected.add(0, 0, 0, 0, -u(1, 0));
        assert_eq!(op.formal_adjoint(), expected);
    }

    #[test]
    fn bilinear_identity_small() {
        let mut op = LinearDiffOp::zero(2, 2);
        op.add(0, 1, 3, 0, u(0, 0) * v(1, 0));
        op.add(1, 0, 1, 1, v(0, 0));
        op.add(1, 1, 0, 0, u(2, 0));
        let w = vec![JetPoly::var(Dep::W1, 0, 0), JetPoly::var(Dep::W2, 0, 0)];
        let z = vec![JetPoly::var(Dep::Q, 0, 0), JetPoly::var(Dep::R, 0, 0)];
        let mw = op.apply(&w).unwrap();
        let mz = op.formal_adjoint().apply(&z).unwrap();
        let form = &z[0] * &mw[0] + &z[1] * &mw[1] - &w[0] * &mz[0] - &w[1] * &mz[1];
        assert!(is_null_lagrangian(&form, &[Dep::U, Dep::V, Dep::W1, Dep::W2, Dep::Q, Dep::R]));
    }

    #[test]
    fn composition_matches_application() {
        let mut a = LinearDiffOp::zero(1, 1);
        a.add(0, 0, 1, 0, u(0, 0));
        let mut b = LinearDiffOp::zero(1, 1);
        b.add(0, 0, 2, 0, v(0, 0));
        let w = vec![JetPoly::var(Dep::W1, 0, 0)];
        let lhs = a.compose(&b).unwrap().apply(&w).unwrap();
        let rhs = a.apply(&b.apply(&w).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
