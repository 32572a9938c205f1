use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::symbol::{Axis, Dep, JetVar, Param, Sym};

/// Exact rational coefficient.
pub type Rat = BigRational;

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Power product of generators with positive exponents, sorted by generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Sym, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn from_sym(s: Sym, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { factors: vec![(s, e)] }
        }
    }

    /// Builds a monomial from arbitrary factors, merging repeats.
    pub fn from_factors(fs: impl IntoIterator<Item = (Sym, u32)>) -> Self {
        let mut map: BTreeMap<Sym, u32> = BTreeMap::new();
        for (s, e) in fs {
            if e > 0 {
                *map.entry(s).or_insert(0) += e;
            }
        }
        Monomial { factors: map.into_iter().collect() }
    }

    pub fn factors(&self) -> &[(Sym, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, s: &Sym) -> u32 {
        self.factors
            .binary_search_by(|(f, _)| f.cmp(s))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = self.factors[i];
            let (b, eb) = other.factors[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// Removes one power of the factor at position `idx`.
    fn lower(&self, idx: usize) -> Monomial {
        let mut factors = self.factors.clone();
        if factors[idx].1 == 1 {
            factors.remove(idx);
        } else {
            factors[idx].1 -= 1;
        }
        Monomial { factors }
    }

    /// Splits off every factor matching `pred`.
    pub fn split(&self, pred: impl Fn(&Sym) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.factors.iter().partition(|(s, _)| pred(s));
        (Monomial { factors: a }, Monomial { factors: b })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    // Graded: total degree first, then the sorted factor lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

/// Polynomial over the jet space with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct JetPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl JetPoly {
    pub fn zero() -> Self {
        JetPoly::default()
    }

    pub fn one() -> Self {
        JetPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        JetPoly::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        JetPoly::constant(int(n))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        JetPoly::constant(rat(n, d))
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        JetPoly { terms }
    }

    pub fn sym(s: Sym) -> Self {
        JetPoly::term(Rat::one(), Monomial::from_sym(s, 1))
    }

    pub fn var(dep: Dep, dx: u32, dt: u32) -> Self {
        JetPoly::sym(Sym::jet(dep, dx, dt))
    }

    pub fn jet(v: JetVar) -> Self {
        JetPoly::sym(Sym::Jet(v))
    }

    pub fn x() -> Self {
        JetPoly::sym(Sym::X)
    }

    pub fn t() -> Self {
        JetPoly::sym(Sym::T)
    }

    pub fn param(p: Param) -> Self {
        JetPoly::sym(Sym::Param(p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> JetPoly {
        if c.is_zero() {
            return JetPoly::zero();
        }
        JetPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> JetPoly {
        self.scale(&int(n))
    }

    pub fn pow(&self, n: u32) -> JetPoly {
        let mut acc = JetPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn symbols(&self) -> BTreeSet<Sym> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(s, _)| *s))
            .collect()
    }

    pub fn jet_vars(&self) -> BTreeSet<JetVar> {
        self.symbols().into_iter().filter_map(|s| s.as_jet()).collect()
    }

    pub fn contains(&self, s: &Sym) -> bool {
        self.terms.keys().any(|m| m.exponent(s) > 0)
    }

    pub fn depends_on_coordinates(&self) -> bool {
        self.contains(&Sym::X) || self.contains(&Sym::T)
    }

    /// Highest total derivative order among the jet coordinates present.
    pub fn max_order(&self) -> u32 {
        self.jet_vars().iter().map(|v| v.order()).max().unwrap_or(0)
    }

    /// Ordinary partial derivative with respect to one generator.
    pub fn partial(&self, s: &Sym) -> JetPoly {
        let mut out = JetPoly::zero();
        for (m, c) in &self.terms {
            if let Ok(idx) = m.factors.binary_search_by(|(f, _)| f.cmp(s)) {
                let e = m.factors[idx].1;
                out.add_term(m.lower(idx), c * int(e as i64));
            }
        }
        out
    }

    /// Applies the derivation that sends each generator `s` to `rule(s)`,
    /// extended by the Leibniz rule.
    pub fn derive_with(&self, mut rule: impl FnMut(&Sym) -> JetPoly) -> JetPoly {
        let mut images: HashMap<Sym, JetPoly> = HashMap::new();
        let mut out = JetPoly::zero();
        for (m, c) in &self.terms {
            for (idx, (s, e)) in m.factors.iter().enumerate() {
                let img = images.entry(*s).or_insert_with(|| rule(s));
                if img.is_zero() {
                    continue;
                }
                let rest = m.lower(idx);
                let k = c * int(*e as i64);
                for (im, ic) in &img.terms {
                    out.add_term(rest.mul(im), &k * ic);
                }
            }
        }
        out
    }

    /// Total derivative `D_x` or `D_t`.
    pub fn total_derivative(&self, axis: Axis) -> JetPoly {
        self.derive_with(|s| match (s, axis) {
            (Sym::Jet(v), _) => JetPoly::jet(v.lift(axis)),
            (Sym::X, Axis::X) | (Sym::T, Axis::T) => JetPoly::one(),
            _ => JetPoly::zero(),
        })
    }

    pub fn dx(&self) -> JetPoly {
        self.total_derivative(Axis::X)
    }

    pub fn dt(&self) -> JetPoly {
        self.total_derivative(Axis::T)
    }

    /// `D_x^a D_t^b` applied to `self`.
    pub fn d(&self, a: u32, b: u32) -> JetPoly {
        let mut p = self.clone();
        for _ in 0..a {
            p = p.dx();
        }
        for _ in 0..b {
            p = p.dt();
        }
        p
    }

    /// Ring homomorphism replacing generators for which `f` returns a value.
    pub fn substitute(&self, mut f: impl FnMut(&Sym) -> Option<JetPoly>) -> JetPoly {
        let mut images: HashMap<Sym, Option<JetPoly>> = HashMap::new();
        let mut powers: HashMap<(Sym, u32), JetPoly> = HashMap::new();
        let mut out = JetPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = JetPoly::constant(c.clone());
            for (s, e) in &m.factors {
                let img = images.entry(*s).or_insert_with(|| f(s));
                match img {
                    None => kept.push((*s, *e)),
                    Some(p) => {
                        let pw = powers.entry((*s, *e)).or_insert_with(|| p.pow(*e));
                        acc = &acc * &*pw;
                    }
                }
            }
            let keep = Monomial { factors: kept };
            for (am, ac) in acc.terms {
                out.add_term(am.mul(&keep), ac);
            }
        }
        out
    }

    /// Renames jet coordinates; every factor must map to a jet coordinate.
    pub fn map_jets(&self, f: impl Fn(JetVar) -> JetVar) -> JetPoly {
        self.substitute(|s| s.as_jet().map(|v| JetPoly::jet(f(v))))
    }

    /// Floating-point evaluation with generator values supplied by `env`.
    pub fn eval(&self, mut env: impl FnMut(&Sym) -> f64) -> f64 {
        let mut cache: HashMap<Sym, f64> = HashMap::new();
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut term = rat_to_f64(c);
            for (s, e) in &m.factors {
                let val = *cache.entry(*s).or_insert_with(|| env(s));
                term *= val.powi(*e as i32);
            }
            total += term;
        }
        total
    }

    /// Groups terms by their total degree in the generators selected by `pred`.
    pub fn by_degree_in(&self, pred: impl Fn(&Sym) -> bool) -> BTreeMap<u32, JetPoly> {
        let mut out: BTreeMap<u32, JetPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d: u32 = m.factors.iter().filter(|(s, _)| pred(s)).map(|(_, e)| e).sum();
            out.entry(d).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// Coefficients of the powers of a single generator.
    pub fn coefficients_in(&self, s: &Sym) -> BTreeMap<u32, JetPoly> {
        let mut out: BTreeMap<u32, JetPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(s);
            let (_, rest) = m.split(|f| f == s);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Largest absolute coefficient, useful when reporting residual sizes.
    pub fn max_abs_coeff(&self) -> Rat {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Rat::zero)
    }
}

impl From<Rat> for JetPoly {
    fn from(c: Rat) -> Self {
        JetPoly::constant(c)
    }
}

impl From<Sym> for JetPoly {
    fn from(s: Sym) -> Self {
        JetPoly::sym(s)
    }
}

impl From<JetVar> for JetPoly {
    fn from(v: JetVar) -> Self {
        JetPoly::jet(v)
    }
}

impl<'a> AddAssign<&'a JetPoly> for JetPoly {
    fn add_assign(&mut self, rhs: &'a JetPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for JetPoly {
    fn add_assign(&mut self, rhs: JetPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a> SubAssign<&'a JetPoly> for JetPoly {
    fn sub_assign(&mut self, rhs: &'a JetPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign for JetPoly {
    fn sub_assign(&mut self, rhs: JetPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl<'b> Add<&'b JetPoly> for &JetPoly {
    type Output = JetPoly;
    fn add(self, rhs: &'b JetPoly) -> JetPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b JetPoly> for &JetPoly {
    type Output = JetPoly;
    fn sub(self, rhs: &'b JetPoly) -> JetPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'b> Mul<&'b JetPoly> for &JetPoly {
    type Output = JetPoly;
    fn mul(self, rhs: &'b JetPoly) -> JetPoly {
        let mut out = JetPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &JetPoly {
    type Output = JetPoly;
    fn neg(self) -> JetPoly {
        JetPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for JetPoly {
    type Output = JetPoly;
    fn neg(self) -> JetPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<JetPoly> for JetPoly {
            type Output = JetPoly;
            fn $method(self, rhs: JetPoly) -> JetPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a JetPoly> for JetPoly {
            type Output = JetPoly;
            fn $method(self, rhs: &'a JetPoly) -> JetPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<JetPoly> for &'a JetPoly {
            type Output = JetPoly;
            fn $method(self, rhs: JetPoly) -> JetPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for JetPoly {
    fn sum<I: Iterator<Item = JetPoly>>(iter: I) -> JetPoly {
        let mut acc = JetPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(dx: u32, dt: u32) -> JetPoly {
        JetPoly::var(Dep::U, dx, dt)
    }
    fn v(dx: u32, dt: u32) -> JetPoly {
        JetPoly::var(Dep::V, dx, dt)
    }

    #[test]
    fn leibniz_on_product() {
        let p = u(0, 0) * v(0, 0);
        assert_eq!(p.dx(), u(1, 0) * v(0, 0) + u(0, 0) * v(1, 0));
    }

    #[test]
    fn coordinate_lift() {
        assert_eq!(u(0, 0).dt(), u(0, 1));
    }

    #[test]
    fn explicit_x_differentiates() {
        let p = JetPoly::x() * u(1, 0).pow(2);
        let expected = u(1, 0).pow(2) + JetPoly::x() * u(1, 0) * u(2, 0) * JetPoly::int(2);
        assert_eq!(p.dx(), expected);
    }

    #[test]
    fn self_difference_is_empty() {
        let p = u(3, 0).scale(&rat(-1, 3)) + u(0, 0) * v(1, 0);
        assert!((&p - &p).is_empty());
    }

    #[test]
    fn parameters_are_constants() {
        let p = JetPoly::param(Param::MU) * u(1, 0);
        assert_eq!(p.dx(), JetPoly::param(Param::MU) * u(2, 0));
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let p = u(0, 0).pow(2) + v(1, 0);
        let s = p.substitute(|s| match s {
            Sym::Jet(j) if *j == JetVar::base(Dep::U) => Some(JetPoly::x() + JetPoly::one()),
            _ => None,
        });
        let x = JetPoly::x();
        assert_eq!(s, &x * &x + x.scale_int(2) + JetPoly::one() + v(1, 0));
    }

    #[test]
    fn grading_orders_terms() {
        let a = Monomial::from_sym(Sym::jet(Dep::U, 3, 0), 1);
        let b = Monomial::from_factors([(Sym::jet(Dep::U, 0, 0), 1), (Sym::jet(Dep::V, 1, 0), 1)]);
        assert!(a < b);
        assert!(Monomial::one() < a);
    }
}
