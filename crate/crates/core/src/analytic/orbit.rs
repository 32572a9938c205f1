//! One-parameter groups generated by `X1..X4` and the induced action on
//! solutions.

use super::expr::Expr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("no generator with id {0}; expected 1..=4")]
pub struct UnknownGenerator(pub usize);

/// A point `(x, t, u, v)`.
pub type Point = (f64, f64, f64, f64);

/// Image of a point under `G_id(eps)`.
pub fn group_orbit(id: usize, eps: f64, (x, t, u, v): Point) -> Result<Point, UnknownGenerator> {
    Ok(match id {
        1 => (x, t + eps, u, v),
        2 => (x + eps, t, u, v),
        3 => (x + t * eps, t, u + eps, v),
        4 => (x * (eps / 2.0).exp(), t * eps.exp(), u * (-eps / 2.0).exp(), v * (-eps).exp()),
        _ => return Err(UnknownGenerator(id)),
    })
}

fn e(eps: f64) -> Expr {
    // exact enough for residual checks; eps is a float by contract
    Expr::rat(num_rational::BigRational::from_float(eps).expect("finite epsilon"))
}

/// New solution `(ũ, ṽ)` whose graph is the image of the graph of
/// `(u, v)` under `G_id(eps)`.
pub fn transport(id: usize, eps: f64, sol: &[Expr]) -> Result<Vec<Expr>, UnknownGenerator> {
    let (x, t) = (Expr::x(), Expr::t());
    let (u, v) = (&sol[0], &sol[1]);
    Ok(match id {
        1 => vec![u.subst(&x, &(t.clone() - e(eps))), v.subst(&x, &(t - e(eps)))],
        2 => vec![u.subst(&(x.clone() - e(eps)), &t), v.subst(&(x - e(eps)), &t)],
        3 => {
            let xs = x - t.clone() * e(eps);
            vec![u.subst(&xs, &t) + e(eps), v.subst(&xs, &t)]
        }
        4 => {
            let xs = x * e(-eps / 2.0).exp();
            let ts = t * e(-eps).exp();
            vec![e(-eps / 2.0).exp() * u.subst(&xs, &ts), e(-eps).exp() * v.subst(&xs, &ts)]
        }
        _ => return Err(UnknownGenerator(id)),
    })
}

/// The solution-to-solution formulas exactly as printed; they differ from
/// [`transport`] in the sign of the `u` shift for `G3` and of the
/// amplitude exponents for `G4`.
pub fn transport_printed(id: usize, eps: f64, sol: &[Expr]) -> Result<Vec<Expr>, UnknownGenerator> {
    let (x, t) = (Expr::x(), Expr::t());
    let (u, v) = (&sol[0], &sol[1]);
    Ok(match id {
        3 => {
            let xs = x - t.clone() * e(eps);
            vec![u.subst(&xs, &t) - e(eps), v.subst(&xs, &t)]
        }
        4 => {
            let xs = x * e(-eps / 2.0).exp();
            let ts = t * e(-eps).exp();
            vec![e(eps / 2.0).exp() * u.subst(&xs, &ts), e(eps).exp() * v.subst(&xs, &ts)]
        }
        _ => transport(id, eps, sol)?,
    })
}
