//! Exact sparse bivariate polynomials over arbitrary-precision rationals,
//! plus one-parameter deformation families.
//!
//! A [`GermPolynomial`] is a finite sum of terms `c * x^i * y^j` with nonzero
//! rational coefficients, stored canonically (at most one entry per exponent
//! pair, never a zero coefficient). A [`ParamPolynomial`] additionally lets
//! every coefficient be a polynomial in one deformation parameter `s`, so a
//! family like `x^4 - (y^2 + s*x)^2` can be manipulated exactly and
//! specialized at any rational value of `s`.

mod parser;
mod unipoly;

pub use parser::parse;
pub use unipoly::UniPoly;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exponent pair `(i, j)` standing for the monomial `x^i * y^j`.
///
/// Ordered graded-lexicographically (total degree first, then x-degree), so
/// iterating a `BTreeMap` keyed by exponents is deterministic and the least
/// element of a set is the graded-lex-least monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    pub i: u32,
    pub j: u32,
}

impl Exponent {
    pub const fn new(i: u32, j: u32) -> Self {
        Exponent { i, j }
    }

    pub fn total_degree(&self) -> u64 {
        u64::from(self.i) + u64::from(self.j)
    }

    pub fn is_origin(&self) -> bool {
        self.i == 0 && self.j == 0
    }

    fn checked_add(&self, other: &Exponent) -> Exponent {
        Exponent::new(
            self.i.checked_add(other.i).expect("x-exponent overflow"),
            self.j.checked_add(other.j).expect("y-exponent overflow"),
        )
    }

    fn render(&self) -> String {
        let var = |name: char, e: u32| match e {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{e}"),
        };
        let x = var('x', self.i);
        let y = var('y', self.j);
        match (x.is_empty(), y.is_empty()) {
            (true, true) => String::new(),
            (false, true) => x,
            (true, false) => y,
            (false, false) => format!("{x}*{y}"),
        }
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.i.cmp(&other.i))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One of the two curve variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// A plane-curve germ: an exact sparse polynomial in `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GermPolynomial {
    terms: BTreeMap<Exponent, BigRational>,
}

impl GermPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: Exponent, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        GermPolynomial { terms }
    }

    /// Sums duplicate exponents and drops zero coefficients.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        let mut p = Self::zero();
        for (exp, coeff) in terms {
            p.add_term(exp, coeff);
        }
        p
    }

    fn add_term(&mut self, exp: Exponent, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponent) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The exponent pairs of the nonzero terms.
    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().copied().collect()
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.contains_key(&Exponent::new(0, 0))
    }

    /// Checks that the polynomial is a genuine germ of a singular curve
    /// candidate: nonzero and vanishing at the origin.
    pub fn ensure_germ(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.has_constant_term() {
            return Err(Error::ConstantTerm);
        }
        Ok(())
    }

    /// Largest total degree among the terms, `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::total_degree).max()
    }

    /// Smallest total degree among the terms, `None` for zero.
    pub fn order(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::total_degree).min()
    }

    pub fn neg(&self) -> Self {
        GermPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (exp, coeff) in &other.terms {
            out.add_term(*exp, coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.checked_add(eb), ca * cb);
            }
        }
        out
    }

    /// Binary exponentiation; `pow(_, 0)` is the constant 1.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::monomial(Exponent::new(0, 0), BigRational::one());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact formal partial derivative.
    pub fn derivative(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (exp, coeff) in &self.terms {
            let (e, factor) = match var {
                Var::X => {
                    if exp.i == 0 {
                        continue;
                    }
                    (Exponent::new(exp.i - 1, exp.j), exp.i)
                }
                Var::Y => {
                    if exp.j == 0 {
                        continue;
                    }
                    (Exponent::new(exp.i, exp.j - 1), exp.j)
                }
            };
            out.add_term(e, coeff * BigRational::from_integer(factor.into()));
        }
        out
    }
}

impl fmt::Display for GermPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (exp, coeff) in self.terms.iter().rev() {
            let mono = exp.render();
            if out.is_empty() {
                if coeff.is_negative() {
                    // "-x^4" would parse as (-x)^4 under the input grammar,
                    // so a leading negative term keeps its coefficient.
                    out.push_str(&format!("-{}", unipoly::render_term(&-coeff, &mono, true)));
                } else {
                    out.push_str(&unipoly::render_term(coeff, &mono, false));
                }
            } else {
                let (sign, mag) = if coeff.is_negative() {
                    (" - ", -coeff)
                } else {
                    (" + ", coeff.clone())
                };
                out.push_str(sign);
                out.push_str(&unipoly::render_term(&mag, &mono, false));
            }
        }
        write!(f, "{out}")
    }
}

macro_rules! impl_ref_ops {
    ($ty:ty) => {
        impl std::ops::Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: Self) -> $ty {
                <$ty>::add(self, rhs)
            }
        }
        impl std::ops::Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: Self) -> $ty {
                <$ty>::sub(self, rhs)
            }
        }
        impl std::ops::Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: Self) -> $ty {
                <$ty>::mul(self, rhs)
            }
        }
        impl std::ops::Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                <$ty>::neg(self)
            }
        }
    };
}

impl_ref_ops!(GermPolynomial);
impl_ref_ops!(ParamPolynomial);

/// A one-parameter deformation family: a bivariate polynomial whose
/// coefficients are polynomials in the parameter `s`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamPolynomial {
    terms: BTreeMap<Exponent, UniPoly>,
}

impl ParamPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: Exponent, coeff: UniPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        ParamPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &UniPoly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exp: Exponent, coeff: UniPoly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&coeff);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn neg(&self) -> Self {
        ParamPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (exp, coeff) in &other.terms {
            out.add_term(*exp, coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.checked_add(eb), ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::monomial(Exponent::new(0, 0), UniPoly::one());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// True when some coefficient actually involves `s`.
    pub fn depends_on_parameter(&self) -> bool {
        self.terms.values().any(|c| c.as_constant().is_none())
    }

    /// Evaluates every coefficient at `s = s_value` and drops the zeros.
    pub fn substitute(&self, s_value: &BigRational) -> GermPolynomial {
        GermPolynomial::from_terms(
            self.terms
                .iter()
                .map(|(exp, coeff)| (*exp, coeff.eval(s_value))),
        )
    }

    /// Converts to a plain germ, rejecting genuine `s`-dependence.
    pub fn to_germ(&self) -> Result<GermPolynomial> {
        if self.depends_on_parameter() {
            return Err(Error::UnexpectedParameter);
        }
        Ok(GermPolynomial::from_terms(self.terms.iter().map(
            |(exp, coeff)| (*exp, coeff.as_constant().expect("constant coefficient")),
        )))
    }
}

impl From<GermPolynomial> for ParamPolynomial {
    fn from(g: GermPolynomial) -> Self {
        ParamPolynomial {
            terms: g
                .terms
                .into_iter()
                .map(|(e, c)| (e, UniPoly::constant(c)))
                .collect(),
        }
    }
}

impl fmt::Display for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (exp, coeff) in self.terms.iter().rev() {
            let mono = exp.render();
            // A coefficient that is a single power of s joins the monomial;
            // anything richer is parenthesized.
            let piece = render_param_term(coeff, &mono, out.is_empty());
            if out.is_empty() {
                out = piece;
            } else {
                out.push_str(&piece);
            }
        }
        write!(f, "{out}")
    }
}

fn render_param_term(coeff: &UniPoly, mono: &str, leading: bool) -> String {
    let single = single_power_of_s(coeff);
    match single {
        Some((k, c)) => {
            let s_part = match k {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{k}"),
            };
            let full_mono = match (s_part.is_empty(), mono.is_empty()) {
                (true, true) => String::new(),
                (false, true) => s_part,
                (true, false) => mono.to_string(),
                (false, false) => format!("{s_part}*{mono}"),
            };
            if leading {
                if c.is_negative() {
                    format!("-{}", unipoly::render_term(&-&c, &full_mono, true))
                } else {
                    unipoly::render_term(&c, &full_mono, false)
                }
            } else {
                let (sign, mag) = if c.is_negative() { (" - ", -&c) } else { (" + ", c.clone()) };
                format!("{sign}{}", unipoly::render_term(&mag, &full_mono, false))
            }
        }
        None => {
            let inner = coeff.render('s');
            let piece = if mono.is_empty() {
                format!("({inner})")
            } else {
                format!("({inner})*{mono}")
            };
            if leading {
                piece
            } else {
                format!(" + {piece}")
            }
        }
    }
}

/// `Some((k, c))` when the coefficient is exactly `c * s^k`.
fn single_power_of_s(coeff: &UniPoly) -> Option<(usize, BigRational)> {
    let nonzero: Vec<(usize, &BigRational)> = coeff
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    match nonzero.as_slice() {
        [(k, c)] => Some((*k, (*c).clone())),
        _ => None,
    }
}
