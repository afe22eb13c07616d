//! Exact Milnor numbers by truncated linear algebra.
//!
//! The Milnor number of a germ `f` is the dimension of the local algebra
//! modulo the Jacobian ideal `(f_x, f_y)`. For each truncation degree `N`
//! we compute `d_N`, the codimension of the ideal's image in the space of
//! polynomials of degree below `N`. The sequence `d_N` is nondecreasing,
//! and once two consecutive values agree, Nakayama's lemma promotes the
//! equality `d_N = d_{N+1}` to `m^N` being contained in the Jacobian ideal,
//! so the stabilized value is exactly the Milnor number. Ranks are taken
//! over the integers by fraction-free (Bareiss) elimination; no floating
//! point or modular arithmetic is involved anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Exponent, GermPolynomial, Var};

/// How a Milnor computation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MilnorStatus {
    /// Isolated singular point; `mu` is the Milnor number.
    Ok,
    /// The origin is a regular point (`mu = 0`).
    Smooth,
    /// The dimension never stabilized below the cap: the singular locus is
    /// positive-dimensional.
    NonIsolated,
}

/// Milnor number with its stabilization certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MilnorResult {
    pub mu: u64,
    /// First truncation degree `N` with `d_N = d_{N+1}`; for a non-isolated
    /// singularity this is the cap at which the search gave up.
    pub stabilized_at: u32,
    pub status: MilnorStatus,
}

impl MilnorResult {
    /// The Milnor number, unless the singularity is not isolated.
    pub fn value(&self) -> Option<u64> {
        match self.status {
            MilnorStatus::Ok | MilnorStatus::Smooth => Some(self.mu),
            MilnorStatus::NonIsolated => None,
        }
    }
}

/// Computes the Milnor number of `f` at the origin.
///
/// `f` must vanish at the origin. The default cap on the truncation degree
/// is `(deg f - 1)^2 + 2`, enough to certify any isolated singularity of
/// that degree; hitting the cap demonstrates a non-isolated singular locus.
pub fn milnor(f: &GermPolynomial, cap: Option<u32>) -> Result<MilnorResult> {
    if f.has_constant_term() {
        return Err(Error::ConstantTerm);
    }
    let cap = cap.unwrap_or_else(|| {
        let d = f.total_degree().unwrap_or(0);
        let d = d.saturating_sub(1);
        (d * d + 2).min(u64::from(u32::MAX)) as u32
    });

    // Pairs (N, N+1) are inspected for N up to the cap, so the dimension is
    // evaluated one degree past it.
    let mut previous: Option<u64> = None;
    for n in 2..=cap.max(2).saturating_add(1) {
        let d_n = quotient_dimension(f, n);
        if let Some(prev) = previous {
            assert!(
                d_n >= prev,
                "truncated codimension must be nondecreasing ({prev} then {d_n} at N = {n})"
            );
            if d_n == prev {
                let status = if d_n == 0 {
                    MilnorStatus::Smooth
                } else {
                    MilnorStatus::Ok
                };
                return Ok(MilnorResult {
                    mu: d_n,
                    stabilized_at: n - 1,
                    status,
                });
            }
        }
        previous = Some(d_n);
    }
    Ok(MilnorResult {
        mu: previous.unwrap_or(0),
        stabilized_at: cap,
        status: MilnorStatus::NonIsolated,
    })
}

/// `d_N`: monomials of degree below `N` minus the rank of the truncation
/// matrix at `N`.
fn quotient_dimension(f: &GermPolynomial, n: u32) -> u64 {
    let matrix = truncation_matrix(f, n);
    matrix.columns.len() as u64 - matrix.exact_rank() as u64
}

/// The truncations of all multiples `x^a y^b * f_x` and `x^a y^b * f_y`
/// (`a + b <= N`) expressed over the monomial basis of degree below `N`.
#[derive(Debug, Clone)]
pub struct TruncationMatrix {
    pub truncation_degree: u32,
    /// Column labels in graded-lex order.
    pub columns: Vec<Exponent>,
    /// Primitive integer rows (denominators cleared, content divided out).
    pub rows: Vec<Vec<BigInt>>,
}

impl TruncationMatrix {
    /// Wraps explicit integer rows; used by tests and diagnostics.
    pub fn from_rows(truncation_degree: u32, columns: Vec<Exponent>, rows: Vec<Vec<BigInt>>) -> Self {
        TruncationMatrix {
            truncation_degree,
            columns,
            rows,
        }
    }

    /// Rank over the rationals, via fraction-free Gaussian elimination.
    pub fn exact_rank(&self) -> usize {
        bareiss_rank(self.rows.clone())
    }
}

/// Builds the truncation matrix of `f` at degree `n`.
pub fn truncation_matrix(f: &GermPolynomial, n: u32) -> TruncationMatrix {
    let columns = monomial_basis(n);
    let index = |e: &Exponent| columns.binary_search(e).ok();

    let generators = [f.derivative(Var::X), f.derivative(Var::Y)];
    let mut rows = Vec::new();
    for g in &generators {
        if g.is_zero() {
            continue;
        }
        let order = g.order().unwrap_or(0);
        for a in 0..=n {
            for b in 0..=(n - a) {
                // The row is identically zero once the multiplier pushes
                // every term of g past the truncation degree.
                if u64::from(a) + u64::from(b) + order >= u64::from(n) {
                    continue;
                }
                let mut row = vec![BigRational::zero(); columns.len()];
                let mut nonzero = false;
                for (exp, coeff) in g.terms() {
                    let shifted = Exponent::new(exp.i + a, exp.j + b);
                    if shifted.total_degree() >= u64::from(n) {
                        continue;
                    }
                    if let Some(k) = index(&shifted) {
                        row[k] += coeff;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(clear_denominators(&row));
                }
            }
        }
    }
    TruncationMatrix {
        truncation_degree: n,
        columns,
        rows,
    }
}

/// Monomials of total degree below `n`, in graded-lex order.
fn monomial_basis(n: u32) -> Vec<Exponent> {
    let mut basis = Vec::new();
    for d in 0..n {
        for i in 0..=d {
            basis.push(Exponent::new(i, d - i));
        }
    }
    basis.sort();
    basis
}

/// Scales a rational row to a primitive integer row.
fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for value in row {
        if !value.is_zero() {
            lcm = lcm.lcm(value.denom());
        }
    }
    let mut ints: Vec<BigInt> = row
        .iter()
        .map(|value| value.numer() * (&lcm / value.denom()))
        .collect();
    let mut content = BigInt::zero();
    for value in &ints {
        content = content.gcd(value);
    }
    if !content.is_zero() && !content.is_one() {
        for value in &mut ints {
            *value = &*value / &content;
        }
    }
    ints
}

/// Fraction-free elimination; entries stay integral because every update is
/// an exact minor divided by the previous pivot.
fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|row| row.iter().any(|v| !v.is_zero()));
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let nrows = rows.len();
    let mut prev_pivot = BigInt::one();
    let mut rank = 0;

    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // Smallest nonzero pivot keeps the intermediate minors modest.
        let pivot_row = (rank..nrows)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].magnitude().clone());
        let Some(pivot_row) = pivot_row else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (upper, lower) = rows.split_at_mut(rank + 1);
        let pivot_data = &upper[rank];
        let pivot = pivot_data[col].clone();

        for row in lower {
            if row.iter().skip(col).all(|v| v.is_zero()) {
                continue;
            }
            let lead = row[col].clone();
            for (dst, src) in row[col + 1..].iter_mut().zip(&pivot_data[col + 1..]) {
                *dst = (&*dst * &pivot - &lead * src) / &prev_pivot;
            }
            row[col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}
