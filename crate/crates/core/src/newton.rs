//! Newton polygons of plane-curve germs: the lower-left convex hull of the
//! support, convenience, axis intercepts, the lattice count `nu` and the
//! drop in `nu` caused by adding one monomial to the support.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::{Exponent, GermPolynomial};

/// One compact face of a Newton polygon, from its high-`j` endpoint to its
/// high-`i` endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceGeometry {
    start: Exponent,
    end: Exponent,
}

impl FaceGeometry {
    /// Horizontal extent of the face.
    pub fn width(&self) -> u32 {
        self.end.i - self.start.i
    }

    /// Vertical extent of the face.
    pub fn height(&self) -> u32 {
        self.start.j - self.end.j
    }

    pub fn start(&self) -> Exponent {
        self.start
    }

    pub fn end(&self) -> Exponent {
        self.end
    }

    /// Number of primitive lattice segments, `gcd(width, height)`.
    pub fn segment_count(&self) -> u32 {
        self.width().gcd(&self.height())
    }

    /// The primitive lattice step `(u, v)` meaning `(+u, -v)` along the face.
    pub fn primitive_step(&self) -> (u32, u32) {
        let m = self.segment_count();
        (self.width() / m, self.height() / m)
    }

    /// All lattice points on the face, endpoint to endpoint.
    pub fn lattice_points(&self) -> Vec<Exponent> {
        let m = self.segment_count();
        let (u, v) = self.primitive_step();
        (0..=m)
            .map(|k| Exponent::new(self.start.i + k * u, self.start.j - k * v))
            .collect()
    }
}

/// The Newton polygon of a support set: the compact faces of the convex hull
/// of the union of translated positive quadrants.
///
/// Vertices are stored with strictly increasing `i` and strictly decreasing
/// `j`; consecutive pairs are the compact faces, with strictly increasing
/// slopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<Exponent>,
}

impl NewtonPolygon {
    /// Builds the polygon of a support set.
    ///
    /// Points dominated componentwise by another support point, or lying on
    /// a face, are not vertices.
    pub fn from_support<I>(support: I) -> Result<Self>
    where
        I: IntoIterator<Item = Exponent>,
    {
        let points: BTreeSet<Exponent> = support.into_iter().collect();
        if points.is_empty() {
            return Err(Error::EmptySupport);
        }
        if points.contains(&Exponent::new(0, 0)) {
            return Err(Error::OriginInSupport);
        }

        // Keep only the minimal staircase: sort by (i, j) and keep points
        // whose j strictly undercuts everything to their left.
        let mut sorted: Vec<Exponent> = points.into_iter().collect();
        sorted.sort_by_key(|e| (e.i, e.j));
        let mut staircase: Vec<Exponent> = Vec::new();
        for p in sorted {
            match staircase.last() {
                Some(last) if last.i == p.i => {} // same column: smaller j already kept
                Some(last) if p.j >= last.j => {} // dominated by a point to the left
                _ => staircase.push(p),
            }
        }

        // Monotone chain over the staircase; slopes must strictly increase.
        let mut vertices: Vec<Exponent> = Vec::new();
        for p in staircase {
            while vertices.len() >= 2 {
                let a = vertices[vertices.len() - 2];
                let b = vertices[vertices.len() - 1];
                if cross(a, b, p) <= 0 {
                    vertices.pop();
                } else {
                    break;
                }
            }
            vertices.push(p);
        }
        Ok(NewtonPolygon { vertices })
    }

    /// Polygon of the support of a germ; the germ must be nonzero and vanish
    /// at the origin.
    pub fn of_germ(f: &GermPolynomial) -> Result<Self> {
        f.ensure_germ()?;
        Self::from_support(f.support())
    }

    pub fn vertices(&self) -> &[Exponent] {
        &self.vertices
    }

    /// Compact faces, steepest first.
    pub fn faces(&self) -> Vec<FaceGeometry> {
        self.vertices
            .windows(2)
            .map(|w| FaceGeometry {
                start: w[0],
                end: w[1],
            })
            .collect()
    }

    /// `a`: where the polygon region meets the x-axis, when it does.
    pub fn x_intercept(&self) -> Option<u32> {
        let last = self.vertices.last()?;
        (last.j == 0).then_some(last.i)
    }

    /// `b`: where the polygon region meets the y-axis, when it does.
    pub fn y_intercept(&self) -> Option<u32> {
        let first = self.vertices.first()?;
        (first.i == 0).then_some(first.j)
    }

    /// True when the polygon touches both coordinate axes.
    pub fn is_convenient(&self) -> bool {
        self.x_intercept().is_some() && self.y_intercept().is_some()
    }

    /// Twice the area bounded by the polygon and the axes (shoelace over the
    /// closed path through the origin); the bounded region only makes sense
    /// for convenient polygons.
    pub fn doubled_area(&self) -> u64 {
        let mut path: Vec<(i64, i64)> = vec![(0, 0)];
        path.extend(self.vertices.iter().map(|e| (i64::from(e.i), i64::from(e.j))));
        let mut sum: i64 = 0;
        for k in 0..path.len() {
            let (x1, y1) = path[k];
            let (x2, y2) = path[(k + 1) % path.len()];
            sum += x1 * y2 - x2 * y1;
        }
        sum.unsigned_abs()
    }

    /// The lattice invariant `2S - a - b + 1` of a convenient polygon.
    pub fn nu(&self) -> Result<i64> {
        let a = self.x_intercept().ok_or(Error::NotConvenient)?;
        let b = self.y_intercept().ok_or(Error::NotConvenient)?;
        let nu = self.doubled_area() as i64 - i64::from(a) - i64::from(b) + 1;
        debug_assert!(nu >= 0, "nu is the Milnor number of a generic germ");
        Ok(nu)
    }

    /// Membership test for the unbounded region spanned by the support
    /// (every point on or above the polygon, componentwise).
    pub fn region_contains(&self, p: Exponent) -> bool {
        let first = self.vertices.first().expect("polygon has a vertex");
        let last = self.vertices.last().expect("polygon has a vertex");
        if p.i < first.i || p.j < last.j {
            return false;
        }
        for face in self.faces() {
            // Supporting line: height * x + width * y = const; the region
            // lies on or above it.
            let w = i64::from(face.width());
            let h = i64::from(face.height());
            let c = h * i64::from(face.start.i) + w * i64::from(face.start.j);
            if h * i64::from(p.i) + w * i64::from(p.j) < c {
                return false;
            }
        }
        true
    }

    /// Drop in `nu` caused by adding `added` to the support, which is the
    /// lattice weight of the region between the old and new polygons.
    ///
    /// Returns 0 when `added` already lies in the polygon region.
    pub fn delta_nu(&self, added: Exponent) -> Result<u64> {
        if added.is_origin() {
            return Err(Error::OriginMonomial);
        }
        let before = self.nu()?;
        if self.region_contains(added) {
            return Ok(0);
        }
        let mut support: Vec<Exponent> = self.vertices.clone();
        support.push(added);
        let extended = NewtonPolygon::from_support(support)?;
        let after = extended.nu()?;
        debug_assert!(after <= before, "adding a point never increases nu");
        Ok((before - after) as u64)
    }

    /// Number of lattice points on the union of compact faces, minus one.
    pub fn boundary_lattice_count(&self) -> Result<u64> {
        let faces = self.faces();
        if faces.is_empty() {
            return Err(Error::NoCompactFace);
        }
        Ok(faces.iter().map(|f| u64::from(f.segment_count())).sum())
    }
}

/// Cross product of `b - a` and `c - b`; positive for a convex (left) turn.
fn cross(a: Exponent, b: Exponent, c: Exponent) -> i64 {
    let (abx, aby) = (
        i64::from(b.i) - i64::from(a.i),
        i64::from(b.j) - i64::from(a.j),
    );
    let (bcx, bcy) = (
        i64::from(c.i) - i64::from(b.i),
        i64::from(c.j) - i64::from(b.j),
    );
    abx * bcy - aby * bcx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn e(i: u32, j: u32) -> Exponent {
        Exponent::new(i, j)
    }

    fn polygon_of(text: &str) -> NewtonPolygon {
        NewtonPolygon::of_germ(&parse(text).unwrap().to_germ().unwrap()).unwrap()
    }

    #[test]
    fn hull_of_two_vertices() {
        let p = NewtonPolygon::from_support([e(4, 0), e(0, 3)]).unwrap();
        assert_eq!(p.vertices(), &[e(0, 3), e(4, 0)]);
        assert_eq!(p.faces().len(), 1);
    }

    #[test]
    fn hull_drops_face_and_dominated_points() {
        // (1,2) lies on the face (0,4)-(2,0); (4,0) is dominated by (2,0)
        let p = NewtonPolygon::from_support([e(4, 0), e(0, 4), e(1, 2), e(2, 0)]).unwrap();
        assert_eq!(p.vertices(), &[e(0, 4), e(2, 0)]);
    }

    #[test]
    fn single_point_support() {
        let p = NewtonPolygon::from_support([e(1, 1)]).unwrap();
        assert_eq!(p.vertices(), &[e(1, 1)]);
        assert!(p.faces().is_empty());
        assert!(!p.is_convenient());
        assert_eq!(p.boundary_lattice_count(), Err(Error::NoCompactFace));
    }

    #[test]
    fn hull_rejects_bad_support() {
        assert_eq!(
            NewtonPolygon::from_support(std::iter::empty()),
            Err(Error::EmptySupport)
        );
        assert_eq!(
            NewtonPolygon::from_support([e(0, 0), e(1, 0)]),
            Err(Error::OriginInSupport)
        );
    }

    #[test]
    fn convenience() {
        assert!(polygon_of("x^4 - y^3").is_convenient());
        assert!(!polygon_of("x^2*y + x*y^3").is_convenient());
        // pure power of x touches only the x-axis
        assert!(!NewtonPolygon::from_support([e(1, 0)]).unwrap().is_convenient());
    }

    #[test]
    fn nu_values() {
        assert_eq!(polygon_of("x^4 - y^4").nu(), Ok(9));
        assert_eq!(polygon_of("x^4 - y^3").nu(), Ok(6));
        assert_eq!(polygon_of("x^2 + y^2").nu(), Ok(1));
        assert_eq!(
            polygon_of("x^2*y + x*y^3").nu(),
            Err(Error::NotConvenient)
        );
    }

    #[test]
    fn nu_closed_form_one_slope() {
        // nu(x^p - y^q) = (p-1)(q-1)
        for p in 2..=12u32 {
            for q in 2..=p {
                let poly = NewtonPolygon::from_support([e(p, 0), e(0, q)]).unwrap();
                assert_eq!(poly.nu().unwrap(), i64::from(p - 1) * i64::from(q - 1));
            }
        }
    }

    #[test]
    fn delta_nu_examples() {
        assert_eq!(polygon_of("x^4 - y^4").delta_nu(e(3, 0)), Ok(3));
        assert_eq!(polygon_of("x^4 - y^3").delta_nu(e(3, 0)), Ok(2));
        assert_eq!(polygon_of("x^4 - y^3").delta_nu(e(1, 2)), Ok(1));
        // point on the face leaves the polygon unchanged
        assert_eq!(polygon_of("x^4 - y^4").delta_nu(e(2, 2)), Ok(0));
        assert_eq!(
            polygon_of("x^4 - y^4").delta_nu(e(0, 0)),
            Err(Error::OriginMonomial)
        );
    }

    #[test]
    fn hull_idempotence() {
        let p = polygon_of("x^4 - y^4 - 2*x*y^2 - x^2");
        let again = NewtonPolygon::from_support(p.vertices().iter().copied()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn boundary_lattice_counts() {
        assert_eq!(polygon_of("x^4 - y^4").boundary_lattice_count(), Ok(4));
        assert_eq!(polygon_of("x^4 - y^3").boundary_lattice_count(), Ok(1));
        let product = parse("(x^8 - y^6)(x^3 - y^2)").unwrap().to_germ().unwrap();
        let p = NewtonPolygon::of_germ(&product).unwrap();
        assert_eq!(p.boundary_lattice_count(), Ok(3));
    }

    #[test]
    fn face_geometry() {
        let p = polygon_of("x^4 - y^4");
        let faces = p.faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].segment_count(), 4);
        assert_eq!(faces[0].primitive_step(), (1, 1));
        assert_eq!(
            faces[0].lattice_points(),
            vec![e(0, 4), e(1, 3), e(2, 2), e(3, 1), e(4, 0)]
        );
    }

    #[test]
    fn region_membership() {
        let p = polygon_of("x^4 - y^3");
        assert!(p.region_contains(e(4, 0)));
        assert!(p.region_contains(e(2, 2))); // 3*2 + 4*2 = 14 >= 12
        assert!(!p.region_contains(e(1, 2))); // 3 + 8 = 11 < 12
        assert!(!p.region_contains(e(0, 0)));
    }
}
