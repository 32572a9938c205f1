//! Brackets of characteristics and structure constants.

use crate::jet::{directional, EvolutionSystem, JetPoly, Rat, SystemError};
use crate::linalg;

use super::point::{lie_bracket, PointSymmetry};

/// `[P, Q] = Q'(P) - P'(Q)`, with `P`, `Q` and the result reduced on shell.
///
/// With characteristics `η - ξ u_t - ξ u_x` this agrees with the vector
/// field bracket: the characteristic of `[X, Y]` is `[P_X, P_Y]`.
pub fn char_bracket(p: &[JetPoly], q: &[JetPoly], sys: &EvolutionSystem) -> Result<Vec<JetPoly>, SystemError> {
    let deps = sys.deps();
    let p = sys.reduce_all(p)?;
    let q = sys.reduce_all(q)?;
    let a = directional(&q, &deps, &p);
    let b = directional(&p, &deps, &q);
    let diff: Vec<JetPoly> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
    sys.reduce_all(&diff)
}

fn flatten(x: &PointSymmetry) -> Vec<JetPoly> {
    x.coefficients().cloned().collect()
}

/// `c[i][j][k]` with `[X_i, X_j] = Σ_k c[i][j][k] X_k`. `None` when some
/// bracket leaves the span.
pub fn structure_constants(gens: &[PointSymmetry]) -> Option<Vec<Vec<Vec<Rat>>>> {
    let basis: Vec<Vec<JetPoly>> = gens.iter().map(flatten).collect();
    let mut c = Vec::with_capacity(gens.len());
    for x in gens {
        let mut row = Vec::with_capacity(gens.len());
        for y in gens {
            let b = lie_bracket(x, y).ok()?;
            row.push(linalg::decompose(&flatten(&b), &basis).ok()?);
        }
        c.push(row);
    }
    Some(c)
}

/// Same table computed from characteristics with [`char_bracket`].
pub fn char_structure_constants(
    chars: &[Vec<JetPoly>],
    sys: &EvolutionSystem,
) -> Result<Option<Vec<Vec<Vec<Rat>>>>, SystemError> {
    let basis = chars.iter().map(|p| sys.reduce_all(p)).collect::<Result<Vec<_>, _>>()?;
    let mut c = Vec::with_capacity(chars.len());
    for p in chars {
        let mut row = Vec::with_capacity(chars.len());
        for q in chars {
            let b = char_bracket(p, q, sys)?;
            match linalg::decompose(&b, &basis) {
                Ok(v) => row.push(v),
                Err(_) => return Ok(None),
            }
        }
        c.push(row);
    }
    Ok(Some(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::rat;
    use crate::model;
    use num_traits::Zero;

    #[test]
    fn bracket_table() {
        let c = structure_constants(&model::generators()).unwrap();
        assert_eq!(c[0][2][1], rat(1, 1));
        assert_eq!(c[1][3][1], rat(1, 2));
        assert_eq!(c[2][3][2], rat(-1, 2));
        for (i, row) in c.iter().enumerate() {
            assert!(row[i].iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn characteristic_brackets_follow_vector_fields() {
        let sys = model::dlw();
        let chars = model::characteristics_printed();
        let cc = char_structure_constants(&chars, &sys).unwrap().unwrap();
        let c = structure_constants(&model::generators()).unwrap();
        assert_eq!(c, cc);
        // [P1, P3] = P2, not P4
        assert_eq!(cc[0][2], vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn self_bracket_vanishes() {
        let sys = model::dlw();
        let p = &model::characteristics_printed()[3];
        assert!(char_bracket(p, p, &sys).unwrap().iter().all(JetPoly::is_zero));
    }
}
