//! The non-degenerate jump of a germ: the smallest nonzero drop of the
//! Milnor number over deformations whose members stay Newton non-degenerate.
//!
//! For a non-degenerate convenient germ the jump is found combinatorially:
//! sweep every candidate monomial strictly below the Newton polygon and take
//! the least nonzero drop of `nu`. For a degenerate germ, compare the true
//! Milnor number with `nu`; a positive gap is itself the jump, otherwise the
//! candidate sweep on the same polygon applies unchanged.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::newton::NewtonPolygon;
use crate::nondegen::is_nondegenerate;
use crate::oracle::milnor;
use crate::poly::{Exponent, GermPolynomial, ParamPolynomial};

/// Result of the jump computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpReport {
    pub lambda_prime: u64,
    /// A monomial achieving the minimum, when the candidate sweep produced
    /// the value: the lowest-degree achiever, x-heaviest on ties.
    pub witness: Option<Exponent>,
    /// Drop of `nu` for every candidate monomial (empty when the degenerate
    /// shortcut below applies).
    pub candidates: BTreeMap<Exponent, u64>,
    /// Populated when the germ is degenerate and the Milnor oracle was
    /// consulted.
    pub degenerate_path: Option<DegeneratePath>,
}

/// Oracle data recorded on the degenerate path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegeneratePath {
    pub mu: u64,
    pub nu: u64,
}

/// Monomials lying between the axes (inclusively) and the Newton polygon
/// (strictly): the search space of the jump minimization.
pub fn candidates(polygon: &NewtonPolygon) -> Result<BTreeSet<Exponent>> {
    let a = polygon.x_intercept().ok_or(Error::NotConvenient)?;
    let b = polygon.y_intercept().ok_or(Error::NotConvenient)?;
    let mut set = BTreeSet::new();
    for i in 0..a {
        for j in 0..b {
            let p = Exponent::new(i, j);
            if !p.is_origin() && !polygon.region_contains(p) {
                set.insert(p);
            }
        }
    }
    Ok(set)
}

/// Sweeps the candidate set and returns the least nonzero drop, its witness,
/// and the full candidate map.
///
/// Ties are broken deterministically: lowest total degree first, then the
/// x-heavier monomial (graded order with x before y), so the homogeneous
/// quartic reports `x^3` rather than `y^3`.
fn candidate_sweep(polygon: &NewtonPolygon) -> Result<(u64, Exponent, BTreeMap<Exponent, u64>)> {
    let witness_key = |drop: u64, e: Exponent| (drop, e.total_degree(), std::cmp::Reverse(e.i));
    let mut map = BTreeMap::new();
    let mut best: Option<(u64, Exponent)> = None;
    for monomial in candidates(polygon)? {
        let drop = polygon.delta_nu(monomial)?;
        if drop > 0
            && best.is_none_or(|(value, at)| {
                witness_key(drop, monomial) < witness_key(value, at)
            })
        {
            best = Some((drop, monomial));
        }
        map.insert(monomial, drop);
    }
    let (value, witness) = best.expect("a singular convenient polygon admits a positive drop");
    Ok((value, witness, map))
}

/// Computes the non-degenerate jump of a convenient singular germ.
pub fn nondegenerate_jump(f: &GermPolynomial) -> Result<JumpReport> {
    f.ensure_germ()?;
    let polygon = NewtonPolygon::of_germ(f)?;
    if !polygon.is_convenient() {
        return Err(Error::NotConvenient);
    }
    let report = is_nondegenerate(f)?;

    if report.overall {
        let nu = polygon.nu()?;
        if nu == 0 {
            return Err(Error::Smooth);
        }
        let (lambda_prime, witness, candidates) = candidate_sweep(&polygon)?;
        return Ok(JumpReport {
            lambda_prime,
            witness: Some(witness),
            candidates,
            degenerate_path: None,
        });
    }

    // Degenerate germ: measure its distance to the generic germ with the
    // same polygon.
    let mu = milnor(f, None)?.value().ok_or(Error::NonIsolated)?;
    if mu == 0 {
        return Err(Error::Smooth);
    }
    let nu = polygon.nu()?;
    debug_assert!(mu as i64 >= nu, "Milnor number dominates nu");
    let nu = nu as u64;
    let path = DegeneratePath { mu, nu };
    if mu > nu {
        return Ok(JumpReport {
            lambda_prime: mu - nu,
            witness: None,
            candidates: BTreeMap::new(),
            degenerate_path: Some(path),
        });
    }
    // Same Milnor number as the generic germ: the jump only depends on the
    // polygon, so the candidate sweep applies verbatim.
    let (lambda_prime, witness, candidates) = candidate_sweep(&polygon)?;
    Ok(JumpReport {
        lambda_prime,
        witness: Some(witness),
        candidates,
        degenerate_path: Some(path),
    })
}

/// Closed form of the jump for a one-slope polygon with extremities `x^p`
/// and `y^q`: `gcd(p, q)` when that is below `q`, else `q - 1`.
pub fn one_slope_lambda(p: u32, q: u32) -> Result<u64> {
    let (p, q) = if p >= q { (p, q) } else { (q, p) };
    if q < 2 {
        return Err(Error::InvalidSlopeExtents { p, q });
    }
    let d = p.gcd(&q);
    Ok(u64::from(if d < q { d } else { q - 1 }))
}

/// One face of a slope decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlopePart {
    /// Horizontal extent of the face.
    pub width: u32,
    /// Vertical extent of the face.
    pub height: u32,
    /// True when either extent is 1: a generic factor for this face is a
    /// smooth germ, whose jump is 1 by convention.
    pub smooth: bool,
    pub lambda: u64,
}

/// Face-by-face decomposition of a convenient polygon with the jump bounds
/// it implies for the whole germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeDecomposition {
    pub parts: Vec<SlopePart>,
    /// Which bound clause applies: 1 all parts smooth, 2 none smooth,
    /// 3 mixed.
    pub case_id: u8,
    /// Inclusive lower and upper bounds on the jump of the full germ.
    pub bounds: (u64, u64),
}

/// Decomposes a convenient polygon by its slopes and derives jump bounds:
/// all parts smooth pins the jump to 1; otherwise the jump lies between the
/// extreme per-part values, with one extra unit allowed in the mixed case.
pub fn decompose_slopes(polygon: &NewtonPolygon) -> Result<SlopeDecomposition> {
    if !polygon.is_convenient() {
        return Err(Error::NotConvenient);
    }
    let mut parts = Vec::new();
    for face in polygon.faces() {
        let width = face.width();
        let height = face.height();
        let smooth = width == 1 || height == 1;
        let lambda = if smooth {
            1
        } else {
            one_slope_lambda(width.max(height), width.min(height))?
        };
        parts.push(SlopePart {
            width,
            height,
            smooth,
            lambda,
        });
    }
    let all_smooth = parts.iter().all(|p| p.smooth);
    let none_smooth = parts.iter().all(|p| !p.smooth);
    let min = parts.iter().map(|p| p.lambda).min().expect("at least one face");
    let max = parts.iter().map(|p| p.lambda).max().expect("at least one face");
    let (case_id, bounds) = if all_smooth {
        (1, (1, 1))
    } else if none_smooth {
        (2, (min, max))
    } else {
        (3, (min, max + 1))
    };
    Ok(SlopeDecomposition {
        parts,
        case_id,
        bounds,
    })
}

/// Milnor numbers of a deformation family at sample parameter values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyJump {
    pub mu_base: u64,
    pub per_sample: BTreeMap<BigRational, u64>,
    /// `mu(f_0)` minus the generic member's Milnor number, the latter taken
    /// as the smallest sampled value (samples can only overestimate it).
    pub jump: u64,
}

/// Measures the jump realized by an explicit family against its base germ.
pub fn family_jump(
    f0: &GermPolynomial,
    family: &ParamPolynomial,
    s_values: &[BigRational],
) -> Result<FamilyJump> {
    if family.substitute(&BigRational::zero()) != *f0 {
        return Err(Error::FamilyBaseMismatch);
    }
    if !family.depends_on_parameter() {
        return Err(Error::ConstantFamily);
    }
    if s_values.is_empty() {
        return Err(Error::NoSamples);
    }
    if s_values.iter().any(Zero::is_zero) {
        return Err(Error::ZeroSampleValue);
    }
    let mu_base = milnor(f0, None)?.value().ok_or(Error::NonIsolated)?;
    let mut per_sample = BTreeMap::new();
    for s in s_values {
        let member = family.substitute(s);
        let mu = milnor(&member, None)?.value().ok_or(Error::NonIsolated)?;
        per_sample.insert(s.clone(), mu);
    }
    let generic = *per_sample.values().min().expect("nonempty samples");
    if generic > mu_base {
        return Err(Error::NonGenericSample);
    }
    Ok(FamilyJump {
        mu_base,
        per_sample,
        jump: mu_base - generic,
    })
}

/// Makes a non-convenient germ convenient without changing its Milnor
/// number, by appending the missing axis powers at degree `mu + 2` (finite
/// determinacy makes terms of that order invisible to `mu`).
pub fn stabilize(f: &GermPolynomial) -> Result<GermPolynomial> {
    f.ensure_germ()?;
    let mu = milnor(f, None)?.value().ok_or(Error::NonIsolated)?;
    let n = u32::try_from(mu + 2).expect("stabilization degree fits");
    let mut result = f.clone();
    let has_x_power = f.support().iter().any(|e| e.j == 0);
    let has_y_power = f.support().iter().any(|e| e.i == 0);
    if !has_x_power {
        result = result.add(&GermPolynomial::monomial(
            Exponent::new(n, 0),
            BigRational::from_integer(1.into()),
        ));
    }
    if !has_y_power {
        result = result.add(&GermPolynomial::monomial(
            Exponent::new(0, n),
            BigRational::from_integer(1.into()),
        ));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn germ(text: &str) -> GermPolynomial {
        parse(text).unwrap().to_germ().unwrap()
    }

    fn polygon_of(text: &str) -> NewtonPolygon {
        NewtonPolygon::of_germ(&germ(text)).unwrap()
    }

    fn e(i: u32, j: u32) -> Exponent {
        Exponent::new(i, j)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn candidate_sets() {
        let set = candidates(&polygon_of("x^4 - y^3")).unwrap();
        let expected: BTreeSet<Exponent> = [
            e(1, 0),
            e(2, 0),
            e(3, 0),
            e(0, 1),
            e(0, 2),
            e(1, 1),
            e(2, 1),
            e(1, 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(set, expected);

        let set = candidates(&polygon_of("x^2 + y^2")).unwrap();
        let expected: BTreeSet<Exponent> = [e(1, 0), e(0, 1)].into_iter().collect();
        assert_eq!(set, expected);

        assert_eq!(candidates(&polygon_of("x^4 - y^4")).unwrap().len(), 9);
        assert_eq!(
            candidates(&polygon_of("x^2*y + x*y^3")),
            Err(Error::NotConvenient)
        );
    }

    #[test]
    fn jump_of_homogeneous_quartic() {
        let report = nondegenerate_jump(&germ("x^4 - y^4")).unwrap();
        assert_eq!(report.lambda_prime, 3);
        assert_eq!(report.witness, Some(e(3, 0)));
        assert!(report.degenerate_path.is_none());
    }

    #[test]
    fn jump_of_cusp_like_quartic() {
        let report = nondegenerate_jump(&germ("x^4 - y^3")).unwrap();
        assert_eq!(report.lambda_prime, 1);
        assert_eq!(report.witness, Some(e(1, 2)));
        assert_eq!(report.candidates.get(&e(3, 0)), Some(&2));
    }

    #[test]
    fn degenerate_first_clause() {
        let report = nondegenerate_jump(&germ("x^4 - (y^2 + x)^2")).unwrap();
        assert_eq!(report.lambda_prime, 4);
        assert_eq!(report.witness, None);
        assert_eq!(
            report.degenerate_path,
            Some(DegeneratePath { mu: 7, nu: 3 })
        );
        assert!(report.candidates.is_empty());
    }

    #[test]
    fn multi_slope_examples() {
        let f = germ("(x^8 - y^6)(x^3 - y^2)");
        assert_eq!(nondegenerate_jump(&f).unwrap().lambda_prime, 2);
        let f = germ("(x + y^3)(x^4 + y^4)(x^2 + y)");
        assert_eq!(nondegenerate_jump(&f).unwrap().lambda_prime, 4);
    }

    #[test]
    fn jump_rejections() {
        assert_eq!(nondegenerate_jump(&germ("x + y^2")), Err(Error::Smooth));
        assert_eq!(
            nondegenerate_jump(&germ("x^2*y + x*y^3")),
            Err(Error::NotConvenient)
        );
        assert_eq!(nondegenerate_jump(&GermPolynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn one_slope_formula() {
        assert_eq!(one_slope_lambda(8, 6), Ok(2));
        assert_eq!(one_slope_lambda(4, 4), Ok(3));
        assert_eq!(one_slope_lambda(3, 2), Ok(1));
        assert_eq!(one_slope_lambda(5, 3), Ok(1));
        assert_eq!(one_slope_lambda(2, 3), Ok(1)); // arguments swap
        assert_eq!(
            one_slope_lambda(4, 1),
            Err(Error::InvalidSlopeExtents { p: 4, q: 1 })
        );
    }

    #[test]
    fn slope_decompositions() {
        let d = decompose_slopes(&polygon_of("(x + y^4)(x + y^2)(x^2 + y)")).unwrap();
        assert_eq!(d.parts.len(), 3);
        assert!(d.parts.iter().all(|p| p.smooth));
        assert_eq!(d.case_id, 1);
        assert_eq!(d.bounds, (1, 1));

        let d = decompose_slopes(&polygon_of("(x^8 - y^6)(x^3 - y^2)")).unwrap();
        assert_eq!(d.case_id, 2);
        assert_eq!(d.bounds, (1, 2));
        assert_eq!(
            d.parts.iter().map(|p| p.lambda).collect::<Vec<_>>(),
            vec![2, 1]
        );

        let d = decompose_slopes(&polygon_of("(x + y^3)(x^4 + y^4)(x^2 + y)")).unwrap();
        assert_eq!(d.case_id, 3);
        assert_eq!(d.bounds, (1, 4));
        let smooth_count = d.parts.iter().filter(|p| p.smooth).count();
        assert_eq!(smooth_count, 2);
    }

    #[test]
    fn family_jump_of_quartic() {
        let f0 = germ("x^4 - y^4");
        let family = parse("x^4 - (y^2 + s*x)^2").unwrap();
        let samples = vec![rat(1), BigRational::new(1.into(), 2.into())];
        let result = family_jump(&f0, &family, &samples).unwrap();
        assert_eq!(result.mu_base, 9);
        assert_eq!(result.jump, 2);
        assert!(result.per_sample.values().all(|&mu| mu == 7));
    }

    #[test]
    fn family_jump_of_cusp() {
        let f0 = germ("x^4 - y^3");
        let family = parse("x^4 - y^3 + s*x*y^2").unwrap();
        let result = family_jump(&f0, &family, &[rat(1)]).unwrap();
        assert_eq!(result.jump, 1);
    }

    #[test]
    fn family_jump_rejections() {
        let f0 = germ("x^4 - y^4");
        let constant = parse("x^4 - y^4 + s*0").unwrap();
        assert_eq!(
            family_jump(&f0, &constant, &[rat(1)]),
            Err(Error::ConstantFamily)
        );
        let family = parse("x^4 - (y^2 + s*x)^2").unwrap();
        assert_eq!(
            family_jump(&germ("x^4 - y^3"), &family, &[rat(1)]),
            Err(Error::FamilyBaseMismatch)
        );
        assert_eq!(
            family_jump(&f0, &family, &[rat(0)]),
            Err(Error::ZeroSampleValue)
        );
        assert_eq!(family_jump(&f0, &family, &[]), Err(Error::NoSamples));
    }

    #[test]
    fn stabilize_adds_missing_axis_powers() {
        // y(x^2 + y^2): isolated but not convenient; mu = 4
        let f = germ("x^2*y + y^3");
        let g = stabilize(&f).unwrap();
        let polygon = NewtonPolygon::of_germ(&g).unwrap();
        assert!(polygon.is_convenient());
        assert_eq!(g.coeff(&e(6, 0)), rat(1));
        assert_eq!(milnor(&g, None).unwrap().value(), Some(4));
        // already convenient: unchanged
        let f = germ("x^2 + y^2");
        assert_eq!(stabilize(&f).unwrap(), f);
    }

    #[test]
    fn degenerate_sweep_matches_generic_polygon() {
        // the candidate sweep only sees the polygon, so a degenerate germ
        // falling through to it reports exactly the generic values
        let degenerate = polygon_of("x^4 - 2*x^2*y^2 + y^4");
        let generic = polygon_of("x^4 + y^4");
        assert_eq!(
            candidate_sweep(&degenerate).unwrap(),
            candidate_sweep(&generic).unwrap()
        );
    }
}
