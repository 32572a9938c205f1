//! Canonical text form of jet polynomials.
//!
//! `(-1/3)*u[3,0] + u[0,0]*v[1,0]`: terms in monomial order joined by
//! ` + `, a parenthesised rational coefficient unless it is 1 on a
//! non-constant monomial, factors joined by `*` with `^n` powers.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use super::poly::{JetPoly, Monomial, Rat};
use super::symbol::{Dep, JetVar, Param, Sym};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse jet polynomial near `{fragment}`: {reason}")]
pub struct ParseError {
    pub fragment: String,
    pub reason: &'static str,
}

fn err(fragment: &str, reason: &'static str) -> ParseError {
    ParseError { fragment: fragment.to_string(), reason }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (s, e)) in self.factors().iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for JetPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

fn parse_sym(s: &str) -> Result<Sym, ParseError> {
    if let Some(open) = s.find('[') {
        let name = &s[..open];
        let dep = Dep::from_name(name).ok_or_else(|| err(s, "unknown dependent variable"))?;
        let inner = s[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| err(s, "missing `]`"))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| err(s, "expected `[dx,dt]`"))?;
        let dx = a.trim().parse().map_err(|_| err(s, "bad x order"))?;
        let dt = b.trim().parse().map_err(|_| err(s, "bad t order"))?;
        return Ok(Sym::Jet(JetVar::new(dep, dx, dt)));
    }
    match s {
        "x" => Ok(Sym::X),
        "t" => Ok(Sym::T),
        _ => Param::from_name(s)
            .map(Sym::Param)
            .ok_or_else(|| err(s, "unknown symbol")),
    }
}

fn parse_term(term: &str) -> Result<(Monomial, Rat), ParseError> {
    let term = term.trim();
    let (coeff, rest) = if let Some(body) = term.strip_prefix('(') {
        let close = body.find(')').ok_or_else(|| err(term, "unclosed coefficient"))?;
        let c = Rat::from_str(body[..close].trim()).map_err(|_| err(term, "bad rational"))?;
        let rest = body[close + 1..].trim();
        let rest = if rest.is_empty() {
            ""
        } else {
            rest.strip_prefix('*').ok_or_else(|| err(term, "expected `*`"))?
        };
        (c, rest)
    } else {
        (Rat::one(), term)
    };
    if rest.is_empty() {
        return Ok((Monomial::one(), coeff));
    }
    let mut factors = Vec::new();
    for piece in rest.split('*') {
        let piece = piece.trim();
        let (base, exp) = match piece.split_once('^') {
            Some((b, e)) => (b, e.parse::<u32>().map_err(|_| err(piece, "bad exponent"))?),
            None => (piece, 1),
        };
        if base == "1" && exp == 1 {
            continue;
        }
        factors.push((parse_sym(base)?, exp));
    }
    Ok((Monomial::from_factors(factors), coeff))
}

impl FromStr for JetPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut out = JetPoly::zero();
        if s == "0" || s.is_empty() {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let (m, c) = parse_term(term)?;
            out.add_term(m, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::poly::rat;

    #[test]
    fn canonical_example() {
        let p = JetPoly::var(Dep::U, 3, 0).scale(&rat(-1, 3))
            + JetPoly::var(Dep::U, 0, 0) * JetPoly::var(Dep::V, 1, 0);
        assert_eq!(p.to_string(), "(-1/3)*u[3,0] + u[0,0]*v[1,0]");
        assert_eq!(p.to_string().parse::<JetPoly>().unwrap(), p);
    }

    #[test]
    fn constants_and_powers() {
        let p: JetPoly = "(3) + (2)*x*u[1,0]^2 + mu*t".parse().unwrap();
        assert_eq!(p.constant_term(), rat(3, 1));
        assert_eq!(p.to_string().parse::<JetPoly>().unwrap(), p);
        assert_eq!(JetPoly::zero().to_string(), "0");
    }

    #[test]
    fn rejects_garbage() {
        assert!("u[1]".parse::<JetPoly>().is_err());
        assert!("(1/0x)*u[0,0]".parse::<JetPoly>().is_err());
        assert!("zz".parse::<JetPoly>().is_err());
    }
}
