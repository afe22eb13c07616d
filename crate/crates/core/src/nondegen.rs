//! Face polynomials and the Newton non-degeneracy test, plus the branch
//! count and irreducibility criteria they unlock for convenient germs.
//!
//! A face is non-degenerate exactly when its one-variable polynomial
//! `P(t) = sum c_k t^k` is squarefree; since `P(0)` is the nonzero corner
//! coefficient, every root of `P` lies in the punctured plane, so the
//! squarefree test over the rationals decides the critical-point condition
//! without any root finding.

use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::newton::{FaceGeometry, NewtonPolygon};
use crate::poly::{GermPolynomial, UniPoly};

/// One compact face together with the coefficients of `f` along it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    geometry: FaceGeometry,
    coeffs: Vec<BigRational>,
}

impl Face {
    pub fn geometry(&self) -> &FaceGeometry {
        &self.geometry
    }

    /// Coefficients `c_0 ..= c_m` read from the high-`j` endpoint to the
    /// high-`i` endpoint; interior entries may be zero.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The one-variable polynomial `P(t) = sum c_k t^k` carried by the face.
    pub fn face_polynomial(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    /// True when `P(t)` is squarefree.
    pub fn is_nondegenerate(&self) -> bool {
        self.face_polynomial().is_squarefree()
    }

    /// Degree of `gcd(P, P')`; positive exactly in the degenerate case.
    pub fn degeneracy_witness_degree(&self) -> usize {
        let p = self.face_polynomial();
        p.gcd(&p.derivative()).degree().unwrap_or(0)
    }
}

/// Reads the coefficients of `f` along one face of its Newton polygon.
pub fn face_coefficients(f: &GermPolynomial, geometry: &FaceGeometry) -> Result<Face> {
    let support = f.support();
    if !support.contains(&geometry.start()) || !support.contains(&geometry.end()) {
        return Err(Error::FaceEndpointMissing);
    }
    let coeffs = geometry
        .lattice_points()
        .iter()
        .map(|p| f.coeff(p))
        .collect();
    Ok(Face { geometry: *geometry, coeffs })
}

/// Per-face verdict of the non-degeneracy test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceVerdict {
    pub face: Face,
    pub nondegenerate: bool,
    /// Degree of `gcd(P, P')` when the face is degenerate.
    pub witness_degree: Option<usize>,
}

/// Outcome of testing every compact face of a germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub faces: Vec<FaceVerdict>,
    pub overall: bool,
}

/// Tests Newton non-degeneracy of a germ, face by face.
///
/// A polygon without compact faces has nothing to test and passes.
pub fn is_nondegenerate(f: &GermPolynomial) -> Result<DegeneracyReport> {
    let polygon = NewtonPolygon::of_germ(f)?;
    let mut faces = Vec::new();
    let mut overall = true;
    for geometry in polygon.faces() {
        let face = face_coefficients(f, &geometry)?;
        let nondegenerate = face.is_nondegenerate();
        let witness_degree = (!nondegenerate).then(|| face.degeneracy_witness_degree());
        overall &= nondegenerate;
        faces.push(FaceVerdict {
            face,
            nondegenerate,
            witness_degree,
        });
    }
    Ok(DegeneracyReport { faces, overall })
}

/// Number of irreducible components of a convenient non-degenerate germ,
/// which equals the boundary lattice count of its polygon.
pub fn branch_count(f: &GermPolynomial) -> Result<u64> {
    let polygon = NewtonPolygon::of_germ(f)?;
    if !polygon.is_convenient() {
        return Err(Error::NotConvenient);
    }
    if !is_nondegenerate(f)?.overall {
        return Err(Error::Degenerate);
    }
    polygon.boundary_lattice_count()
}

/// True when a convenient non-degenerate germ is irreducible: one compact
/// face whose axis extremities `x^p`, `y^q` satisfy `gcd(p, q) = 1`.
pub fn is_irreducible_nd(f: &GermPolynomial) -> Result<bool> {
    let polygon = NewtonPolygon::of_germ(f)?;
    if !polygon.is_convenient() {
        return Err(Error::NotConvenient);
    }
    if !is_nondegenerate(f)?.overall {
        return Err(Error::Degenerate);
    }
    let faces = polygon.faces();
    if faces.len() != 1 {
        return Ok(false);
    }
    let a = polygon.x_intercept().expect("convenient polygon");
    let b = polygon.y_intercept().expect("convenient polygon");
    Ok(a.gcd(&b) == 1)
}
