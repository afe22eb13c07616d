//! Case analysis for the two-term germs `x^p - y^q`: the computable jump,
//! a conjectured value for the true jump, and an explicit deformation
//! family whose realized jump the Milnor oracle can check.
//!
//! The five cases partition all `p >= q >= 2`:
//!
//! 1. `gcd(p, q) = 1` — jump 1, realized by a single-monomial deformation.
//! 2. `p = q` with `q` prime — conjectured `q - 2` via `s*(x + y)^(q-1)`.
//! 3. `p = kq`, `k > 1`, `q` prime — conjectured `q - 1` via `s*x^(p-1)`.
//! 4. `p = kq` with `q` composite, `q = ab`, `a` its smallest prime
//!    divisor — conjectured `ab - b` via `x^p - (y^a + s*x^(ka-1))^b`.
//! 5. `1 < gcd(p, q) < q` — conjectured `gcd(p, q)`, realized by a
//!    single-monomial deformation.
//!
//! Only realized jumps are checked; minimality of the conjectured values is
//! never asserted.

use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::jump::{family_jump, nondegenerate_jump, one_slope_lambda};
use crate::poly::{parse, GermPolynomial, ParamPolynomial};

/// One classified pair `(p, q)` with its families and verification slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRecord {
    pub p: u32,
    pub q: u32,
    /// Which of the five cases applies.
    pub case_id: u8,
    pub d: u32,
    pub lambda_prime: u64,
    pub lambda_conjectured: u64,
    /// The deformation family exactly as the case prescribes it.
    pub family_text: String,
    pub family: ParamPolynomial,
    /// Realized jump of the family, filled in by [`verify_family`].
    pub verified_jump: Option<u64>,
}

impl ConjectureRecord {
    /// Whether the verified jump agrees with the conjectured value; `None`
    /// before verification.
    pub fn verified_matches(&self) -> Option<bool> {
        self.verified_jump.map(|j| j == self.lambda_conjectured)
    }
}

fn smallest_prime_divisor(n: u32) -> u32 {
    (2..).find(|k| n.is_multiple_of(*k)).expect("n >= 2 has a prime divisor")
}

fn power(name: char, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && smallest_prime_divisor(n) == n
}

/// Classifies `x^p - y^q` (arguments may come in either order) and builds
/// its deformation family; the record is not yet verified.
pub fn classify(p: u32, q: u32) -> Result<ConjectureRecord> {
    let (p, q) = if p >= q { (p, q) } else { (q, p) };
    if q < 2 {
        return Err(Error::InvalidSlopeExtents { p, q });
    }
    let d = p.gcd(&q);
    let lambda_prime = one_slope_lambda(p, q)?;

    let (case_id, lambda_conjectured, family_text) = if d == 1 {
        let witness = monomial_witness(p, q)?;
        (1, 1, format!("x^{p} - y^{q} + s*{witness}"))
    } else if p == q && is_prime(q) {
        let deformation = if q == 2 {
            "(x + y)".to_string()
        } else {
            format!("(x + y)^{}", q - 1)
        };
        (
            2,
            u64::from(q) - 2,
            format!("x^{q} + y^{q} + s*{deformation}"),
        )
    } else if d == q && is_prime(q) {
        (
            3,
            u64::from(q) - 1,
            format!("x^{p} + y^{q} + s*{}", power('x', p - 1)),
        )
    } else if d == q {
        let a = smallest_prime_divisor(q);
        let b = q / a;
        let k = p / q;
        (
            4,
            u64::from(a) * u64::from(b) - u64::from(b),
            format!("x^{p} - (y^{a} + s*{})^{b}", power('x', k * a - 1)),
        )
    } else {
        let witness = monomial_witness(p, q)?;
        (5, u64::from(d), format!("x^{p} - y^{q} + s*{witness}"))
    };

    let family = parse(&family_text).expect("generated family text parses");
    Ok(ConjectureRecord {
        p,
        q,
        case_id,
        d,
        lambda_prime,
        lambda_conjectured,
        family_text,
        family,
        verified_jump: None,
    })
}

/// The witness monomial of the candidate sweep on `x^p - y^q`, rendered for
/// a family text.
fn monomial_witness(p: u32, q: u32) -> Result<String> {
    let f = GermPolynomial::from_terms([
        (crate::poly::Exponent::new(p, 0), BigRational::from_integer(1.into())),
        (crate::poly::Exponent::new(0, q), BigRational::from_integer((-1).into())),
    ]);
    let report = nondegenerate_jump(&f)?;
    let witness = report.witness.expect("candidate sweep reports a witness");
    let x = power('x', witness.i);
    let y = power('y', witness.j);
    Ok(match (x.is_empty(), y.is_empty()) {
        (false, false) => format!("{x}*{y}"),
        (false, true) => x,
        (true, false) => y,
        (true, true) => unreachable!("witness is never the constant monomial"),
    })
}

/// Runs the record's family through the Milnor oracle and stores the
/// realized jump. A mismatch with the conjectured value is preserved, not
/// silently accepted; see [`ConjectureRecord::verified_matches`].
///
/// The family's own specialization at `s = 0` is the base germ, so records
/// whose case prints `x^q + y^q` are verified against that sign choice (the
/// Milnor number is blind to the sign flips relating the variants).
pub fn verify_family(
    mut rec: ConjectureRecord,
    s_values: &[BigRational],
) -> Result<ConjectureRecord> {
    let base = rec.family.substitute(&BigRational::from_integer(0.into()));
    let result = family_jump(&base, &rec.family, s_values)?;
    rec.verified_jump = Some(result.jump);
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn samples() -> Vec<BigRational> {
        vec![rat(1), BigRational::new(1.into(), 2.into())]
    }

    #[test]
    fn classification_examples() {
        let rec = classify(5, 3).unwrap();
        assert_eq!((rec.case_id, rec.lambda_prime, rec.lambda_conjectured), (1, 1, 1));

        let rec = classify(5, 5).unwrap();
        assert_eq!((rec.case_id, rec.lambda_prime, rec.lambda_conjectured), (2, 4, 3));
        assert_eq!(rec.family_text, "x^5 + y^5 + s*(x + y)^4");

        let rec = classify(10, 5).unwrap();
        assert_eq!((rec.case_id, rec.lambda_prime, rec.lambda_conjectured), (3, 4, 4));
        assert_eq!(rec.family_text, "x^10 + y^5 + s*x^9");

        let rec = classify(8, 4).unwrap();
        assert_eq!((rec.case_id, rec.lambda_prime, rec.lambda_conjectured), (4, 3, 2));
        assert_eq!(rec.family_text, "x^8 - (y^2 + s*x^3)^2");

        let rec = classify(12, 8).unwrap();
        assert_eq!((rec.case_id, rec.d, rec.lambda_prime, rec.lambda_conjectured), (5, 4, 4, 4));
    }

    #[test]
    fn homogeneous_quartic_is_case_four() {
        // q = 4 composite with k = 1: the family is the deformed quartic
        let rec = classify(4, 4).unwrap();
        assert_eq!(rec.case_id, 4);
        assert_eq!(rec.lambda_conjectured, 2);
        assert_eq!(rec.family_text, "x^4 - (y^2 + s*x)^2");
    }

    #[test]
    fn arguments_swap() {
        let rec = classify(3, 5).unwrap();
        assert_eq!((rec.p, rec.q), (5, 3));
        assert!(classify(3, 1).is_err());
    }

    #[test]
    fn classification_is_exhaustive_and_exclusive() {
        for p in 2..=30u32 {
            for q in 2..=p {
                let rec = classify(p, q).unwrap();
                let d = p.gcd(&q);
                let expected = if d == 1 {
                    1
                } else if p == q && is_prime(q) {
                    2
                } else if d == q && p > q && is_prime(q) {
                    3
                } else if d == q && !is_prime(q) {
                    4
                } else {
                    5
                };
                assert_eq!(rec.case_id, expected, "({p}, {q})");
                assert!(rec.lambda_conjectured <= rec.lambda_prime, "({p}, {q})");
            }
        }
    }

    #[test]
    fn verify_small_cases() {
        // x^3 + y^3 + s(x + y)^2 realizes jump 1 = q - 2
        let rec = verify_family(classify(3, 3).unwrap(), &samples()).unwrap();
        assert_eq!(rec.verified_jump, Some(1));
        assert_eq!(rec.verified_matches(), Some(true));

        // x^8 - (y^2 + s x^3)^2 realizes jump 2 = ab - b
        let rec = verify_family(classify(8, 4).unwrap(), &samples()).unwrap();
        assert_eq!(rec.verified_jump, Some(2));
        assert_eq!(rec.verified_matches(), Some(true));

        // x^4 + y^2 + s x^3 realizes jump 1 = q - 1
        let rec = verify_family(classify(4, 2).unwrap(), &samples()).unwrap();
        assert_eq!(rec.case_id, 3);
        assert_eq!(rec.verified_jump, Some(1));
        assert_eq!(rec.verified_matches(), Some(true));
    }

    #[test]
    fn smallest_prime_divisors() {
        assert_eq!(smallest_prime_divisor(4), 2);
        assert_eq!(smallest_prime_divisor(9), 3);
        assert_eq!(smallest_prime_divisor(49), 7);
        assert!(is_prime(2));
        assert!(is_prime(13));
        assert!(!is_prime(9));
    }
}
