//! Dense univariate polynomials over the rationals.
//!
//! Used in two places: coefficients of a [`super::ParamPolynomial`] are
//! polynomials in the deformation parameter `s`, and the one-variable
//! polynomial attached to a Newton-polygon face lives here as well.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` multiplies the `k`-th power of the variable; the vector never
/// ends in a zero, so the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The variable itself (`s` or `t`).
    pub fn variable() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    /// Builds `c * t^k`.
    pub fn monomial(k: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(k.into()))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Monic remainder sequence GCD; the result is monic (or zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Remainder of Euclidean division by `divisor` (must be nonzero).
    pub fn rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.clone();
        while let Some(n) = rem.degree() {
            if n < d {
                break;
            }
            let factor = &rem.coeffs[n] / &lead;
            for k in 0..=d {
                let delta = &factor * &divisor.coeffs[k];
                rem.coeffs[n - d + k] -= delta;
            }
            rem.trim();
        }
        rem
    }

    fn into_monic(mut self) -> Self {
        if let Some(lead) = self.coeffs.last().cloned() {
            for c in &mut self.coeffs {
                *c /= &lead;
            }
        }
        self
    }

    /// True when the polynomial has no repeated roots, i.e. gcd with its
    /// derivative is a nonzero constant.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Renders with the given variable name, highest power first.
    pub fn render(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if out.is_empty() {
                if c.is_negative() {
                    // Keep unary minus away from powers: "-1*s^2", not "-s^2".
                    out.push_str(&format!("-{}", render_term(&-c, &mono, true)));
                } else {
                    out.push_str(&render_term(c, &mono, false));
                }
            } else {
                let (sign, mag) = if c.is_negative() { (" - ", -c) } else { (" + ", c.clone()) };
                out.push_str(sign);
                out.push_str(&render_term(&mag, &mono, false));
            }
        }
        out
    }
}

/// Renders `coeff * mono` with `coeff > 0`, omitting a unit coefficient
/// unless `force_coeff` is set or the monomial is empty.
pub(crate) fn render_term(coeff: &BigRational, mono: &str, force_coeff: bool) -> String {
    if mono.is_empty() {
        coeff.to_string()
    } else if coeff.is_one() && !force_coeff {
        mono.to_string()
    } else {
        format!("{coeff}*{mono}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&n| rat(n)).collect())
    }

    #[test]
    fn arithmetic_and_trim() {
        let p = poly(&[1, 2]);
        let q = poly(&[-1, -2]);
        assert!(p.add(&q).is_zero());
        assert_eq!(p.mul(&poly(&[0, 1])), poly(&[0, 1, 2]));
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn eval_horner() {
        // 1 - 2t + t^2 at t = 3 is 4
        let p = poly(&[1, -2, 1]);
        assert_eq!(p.eval(&rat(3)), rat(4));
    }

    #[test]
    fn derivative_drops_constant() {
        let p = poly(&[5, 3, 1]);
        assert_eq!(p.derivative(), poly(&[3, 2]));
        assert!(poly(&[7]).derivative().is_zero());
    }

    #[test]
    fn gcd_detects_repeated_roots() {
        // t^4 - 1 is squarefree
        assert!(poly(&[-1, 0, 0, 0, 1]).is_squarefree());
        // (t^2 - 1)^2 = 1 - 2t^2 + t^4 is not
        let sq = poly(&[1, 0, -2, 0, 1]);
        assert!(!sq.is_squarefree());
        assert_eq!(sq.gcd(&sq.derivative()).degree(), Some(2));
        // -(1 + t)^2
        let neg_sq = poly(&[-1, -2, -1]);
        assert!(!neg_sq.is_squarefree());
        assert_eq!(neg_sq.gcd(&neg_sq.derivative()).degree(), Some(1));
    }

    #[test]
    fn render_signs() {
        assert_eq!(poly(&[1, 0, -2]).render('t'), "-2*t^2 + 1");
        assert_eq!(poly(&[0, 1]).render('s'), "s");
        assert_eq!(UniPoly::zero().render('s'), "0");
    }
}
