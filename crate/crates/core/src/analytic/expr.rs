//! Expression trees over elementary functions of `x`, `t` and named
//! parameters, with exact symbolic differentiation and guarded evaluation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::jet::{rat, rat_to_f64, Rat};

/// Denominators smaller than this are treated as poles.
pub const SINGULAR_GUARD: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Const(Rat),
    Param(String),
    X,
    T,
    Add(Vec<Expr>),
    Mul(Vec<Expr>),
    Div(Expr, Expr),
    Pow(Expr, i32),
    Exp(Expr),
    Tanh(Expr),
    Sech(Expr),
    Sqrt(Expr),
}

/// Shared immutable expression.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr(Rc<Node>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    T,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("parameter `{0}` is not bound")]
    Unbound(String),
    #[error("denominator {0:e} below the singularity guard")]
    Singular(f64),
    #[error("argument outside the domain: {0}")]
    Domain(String),
}

/// Parameter values used for evaluation.
#[derive(Debug, Clone, Default, PartialEq, serde::Serialize)]
pub struct Binding(pub BTreeMap<String, f64>);

impl Binding {
    pub fn new() -> Self {
        Binding::default()
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.0.get(name).copied()
    }
}

impl Expr {
    fn new(n: Node) -> Self {
        Expr(Rc::new(n))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn rat(c: Rat) -> Self {
        Expr::new(Node::Const(c))
    }

    pub fn int(n: i64) -> Self {
        Expr::rat(rat(n, 1))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Expr::rat(rat(n, d))
    }

    pub fn zero() -> Self {
        Expr::int(0)
    }

    pub fn one() -> Self {
        Expr::int(1)
    }

    pub fn param(name: &str) -> Self {
        Expr::new(Node::Param(name.to_string()))
    }

    pub fn x() -> Self {
        Expr::new(Node::X)
    }

    pub fn t() -> Self {
        Expr::new(Node::T)
    }

    pub fn as_const(&self) -> Option<&Rat> {
        match self.node() {
            Node::Const(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_const().is_some_and(Zero::is_zero)
    }

    pub fn sum(items: impl IntoIterator<Item = Expr>) -> Expr {
        let mut terms = Vec::new();
        let mut c = Rat::zero();
        for e in items {
            match e.node() {
                Node::Const(k) => c += k,
                Node::Add(inner) => {
                    for i in inner {
                        match i.node() {
                            Node::Const(k) => c += k,
                            _ => terms.push(i.clone()),
                        }
                    }
                }
                _ => terms.push(e),
            }
        }
        if !c.is_zero() {
            terms.push(Expr::rat(c));
        }
        match terms.len() {
            0 => Expr::zero(),
            1 => terms.pop().unwrap(),
            _ => Expr::new(Node::Add(terms)),
        }
    }

    pub fn product(items: impl IntoIterator<Item = Expr>) -> Expr {
        let mut factors = Vec::new();
        let mut c = Rat::one();
        for e in items {
            match e.node() {
                Node::Const(k) => c *= k,
                Node::Mul(inner) => {
                    for i in inner {
                        match i.node() {
                            Node::Const(k) => c *= k,
                            _ => factors.push(i.clone()),
                        }
                    }
                }
                _ => factors.push(e),
            }
        }
        if c.is_zero() {
            return Expr::zero();
        }
        if !c.is_one() {
            factors.insert(0, Expr::rat(c));
        }
        match factors.len() {
            0 => Expr::one(),
            1 => factors.pop().unwrap(),
            _ => Expr::new(Node::Mul(factors)),
        }
    }

    pub fn powi(&self, n: i32) -> Expr {
        match (n, self.node()) {
            (0, _) => Expr::one(),
            (1, _) => self.clone(),
            (_, Node::Const(c)) if n > 0 => Expr::rat(num_traits::pow(c.clone(), n as usize)),
            (_, Node::Pow(b, m)) => b.powi(m * n),
            _ => Expr::new(Node::Pow(self.clone(), n)),
        }
    }

    pub fn exp(&self) -> Expr {
        if self.is_zero() {
            return Expr::one();
        }
        Expr::new(Node::Exp(self.clone()))
    }

    pub fn tanh(&self) -> Expr {
        Expr::new(Node::Tanh(self.clone()))
    }

    pub fn sech(&self) -> Expr {
        Expr::new(Node::Sech(self.clone()))
    }

    pub fn sqrt(&self) -> Expr {
        Expr::new(Node::Sqrt(self.clone()))
    }

    /// Exact derivative in `x` or `t`.
    pub fn diff(&self, v: Var) -> Expr {
        match self.node() {
            Node::Const(_) | Node::Param(_) => Expr::zero(),
            Node::X => Expr::int((v == Var::X) as i64),
            Node::T => Expr::int((v == Var::T) as i64),
            Node::Add(ts) => Expr::sum(ts.iter().map(|e| e.diff(v))),
            Node::Mul(fs) => Expr::sum((0..fs.len()).map(|i| {
                let d = fs[i].diff(v);
                if d.is_zero() {
                    return Expr::zero();
                }
                Expr::product(fs.iter().enumerate().map(|(j, f)| if i == j { d.clone() } else { f.clone() }))
            })),
            Node::Div(a, b) => {
                let (da, db) = (a.diff(v), b.diff(v));
                if db.is_zero() {
                    return da / b.clone();
                }
                (da * b.clone() - a.clone() * db) / b.powi(2)
            }
            Node::Pow(a, n) => Expr::int(*n as i64) * a.powi(n - 1) * a.diff(v),
            Node::Exp(a) => self.clone() * a.diff(v),
            Node::Tanh(a) => a.sech().powi(2) * a.diff(v),
            Node::Sech(a) => -(self.clone() * a.tanh() * a.diff(v)),
            Node::Sqrt(a) => a.diff(v) / (Expr::int(2) * self.clone()),
        }
    }

    pub fn diff_n(&self, v: Var, n: u32) -> Expr {
        (0..n).fold(self.clone(), |e, _| e.diff(v))
    }

    /// Replaces `x` and `t` by the given expressions.
    pub fn subst(&self, x: &Expr, t: &Expr) -> Expr {
        let r = |e: &Expr| e.subst(x, t);
        match self.node() {
            Node::Const(_) | Node::Param(_) => self.clone(),
            Node::X => x.clone(),
            Node::T => t.clone(),
            Node::Add(ts) => Expr::sum(ts.iter().map(r)),
            Node::Mul(fs) => Expr::product(fs.iter().map(r)),
            Node::Div(a, b) => r(a) / r(b),
            Node::Pow(a, n) => r(a).powi(*n),
            Node::Exp(a) => r(a).exp(),
            Node::Tanh(a) => r(a).tanh(),
            Node::Sech(a) => r(a).sech(),
            Node::Sqrt(a) => r(a).sqrt(),
        }
    }

    /// Replaces named parameters by expressions.
    pub fn bind(&self, f: &dyn Fn(&str) -> Option<Expr>) -> Expr {
        let r = |e: &Expr| e.bind(f);
        match self.node() {
            Node::Param(n) => f(n).unwrap_or_else(|| self.clone()),
            Node::Const(_) | Node::X | Node::T => self.clone(),
            Node::Add(ts) => Expr::sum(ts.iter().map(r)),
            Node::Mul(fs) => Expr::product(fs.iter().map(r)),
            Node::Div(a, b) => r(a) / r(b),
            Node::Pow(a, n) => r(a).powi(*n),
            Node::Exp(a) => r(a).exp(),
            Node::Tanh(a) => r(a).tanh(),
            Node::Sech(a) => r(a).sech(),
            Node::Sqrt(a) => r(a).sqrt(),
        }
    }

    pub fn params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_params(&mut out);
        out
    }

    fn collect_params(&self, out: &mut BTreeSet<String>) {
        match self.node() {
            Node::Param(n) => {
                out.insert(n.clone());
            }
            Node::Const(_) | Node::X | Node::T => {}
            Node::Add(v) | Node::Mul(v) => v.iter().for_each(|e| e.collect_params(out)),
            Node::Div(a, b) => {
                a.collect_params(out);
                b.collect_params(out);
            }
            Node::Pow(a, _) | Node::Exp(a) | Node::Tanh(a) | Node::Sech(a) | Node::Sqrt(a) => a.collect_params(out),
        }
    }

    pub fn eval(&self, x: f64, t: f64, b: &Binding) -> Result<f64, EvalError> {
        let r = |e: &Expr| e.eval(x, t, b);
        let v = match self.node() {
            Node::Const(c) => rat_to_f64(c),
            Node::Param(n) => b.get(n).ok_or_else(|| EvalError::Unbound(n.clone()))?,
            Node::X => x,
            Node::T => t,
            Node::Add(ts) => ts.iter().map(r).sum::<Result<f64, _>>()?,
            Node::Mul(fs) => fs.iter().map(r).product::<Result<f64, _>>()?,
            Node::Div(a, d) => {
                let den = r(d)?;
                if den.abs() < SINGULAR_GUARD {
                    return Err(EvalError::Singular(den));
                }
                r(a)? / den
            }
            Node::Pow(a, n) => {
                let base = r(a)?;
                if *n < 0 && base.abs() < SINGULAR_GUARD {
                    return Err(EvalError::Singular(base));
                }
                base.powi(*n)
            }
            Node::Exp(a) => r(a)?.exp(),
            Node::Tanh(a) => r(a)?.tanh(),
            Node::Sech(a) => 1.0 / r(a)?.cosh(),
            Node::Sqrt(a) => {
                let arg = r(a)?;
                if arg < 0.0 {
                    return Err(EvalError::Domain(format!("sqrt of {arg}")));
                }
                arg.sqrt()
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(EvalError::Domain(format!("non-finite value in {self}")))
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, v: &[Expr], sep: &str| -> fmt::Result {
            f.write_str("(")?;
            for (i, e) in v.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")
        };
        match self.node() {
            Node::Const(c) => write!(f, "{c}"),
            Node::Param(n) => f.write_str(n),
            Node::X => f.write_str("x"),
            Node::T => f.write_str("t"),
            Node::Add(v) => join(f, v, " + "),
            Node::Mul(v) => join(f, v, "*"),
            Node::Div(a, b) => write!(f, "({a})/({b})"),
            Node::Pow(a, n) => write!(f, "({a})^{n}"),
            Node::Exp(a) => write!(f, "exp({a})"),
            Node::Tanh(a) => write!(f, "tanh({a})"),
            Node::Sech(a) => write!(f, "sech({a})"),
            Node::Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}

impl ops::Add for Expr {
    type Output = Expr;
    fn add(self, o: Expr) -> Expr {
        Expr::sum([self, o])
    }
}

impl ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, o: Expr) -> Expr {
        Expr::sum([self, -o])
    }
}

impl ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, o: Expr) -> Expr {
        Expr::product([self, o])
    }
}

impl ops::Div for Expr {
    type Output = Expr;
    fn div(self, o: Expr) -> Expr {
        if let Some(c) = o.as_const() {
            if !c.is_zero() {
                return Expr::rat(c.recip()) * self;
            }
        }
        if self.is_zero() {
            return Expr::zero();
        }
        Expr::new(Node::Div(self, o))
    }
}

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::int(-1) * self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn tanh_derivative() {
        let phase = Expr::x() - Expr::param("mu") * Expr::t();
        let d = phase.tanh().diff(Var::X);
        let b = Binding::new().with("mu", 1.5);
        let want = 1.0 / (0.3f64 - 1.5 * 0.2).cosh().powi(2);
        assert!(close(d.eval(0.3, 0.2, &b).unwrap(), want, 1e-14));
    }

    #[test]
    fn constants_differentiate_to_zero() {
        assert!(Expr::frac(2, 3).diff(Var::X).is_zero());
        assert!(Expr::param("c1").diff(Var::T).is_zero());
    }

    #[test]
    fn matches_finite_differences() {
        let e = (Expr::x() * Expr::t()).exp() / (Expr::one() + Expr::x().powi(2)) + (Expr::x() + Expr::t()).sech()
            - (Expr::t() + Expr::int(2)).sqrt() * Expr::x();
        let b = Binding::new();
        let h = 1e-5;
        for &(x, t) in &[(0.3, 0.7), (-1.2, 0.4), (2.0, 1.1)] {
            let dx = (e.eval(x + h, t, &b).unwrap() - e.eval(x - h, t, &b).unwrap()) / (2.0 * h);
            let dt = (e.eval(x, t + h, &b).unwrap() - e.eval(x, t - h, &b).unwrap()) / (2.0 * h);
            assert!(close(e.diff(Var::X).eval(x, t, &b).unwrap(), dx, 1e-6));
            assert!(close(e.diff(Var::T).eval(x, t, &b).unwrap(), dt, 1e-6));
        }
    }

    #[test]
    fn guards() {
        let b = Binding::new();
        assert!(matches!((Expr::one() / Expr::x()).eval(0.0, 0.0, &b), Err(EvalError::Singular(_))));
        assert!(matches!(Expr::x().sqrt().eval(-1.0, 0.0, &b), Err(EvalError::Domain(_))));
        assert!(matches!(Expr::param("k").eval(0.0, 0.0, &b), Err(EvalError::Unbound(_))));
    }
}
