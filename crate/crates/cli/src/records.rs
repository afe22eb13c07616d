//! Machine-readable records emitted by `--json`.
//!
//! Field names and declaration order are part of the output contract; the
//! golden tests pin them byte for byte.

use serde::Serialize;

use milnor_jump::conjectures::ConjectureRecord;
use milnor_jump::jump::{FamilyJump, JumpReport, SlopeDecomposition};
use milnor_jump::nondegen::DegeneracyReport;
use milnor_jump::oracle::{MilnorResult, MilnorStatus};
use milnor_jump::poly::Exponent;

/// A value that may be missing for a stated reason.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Field<T: Serialize> {
    Value(T),
    Unavailable { unavailable: String },
}

impl<T: Serialize> Field<T> {
    pub fn unavailable(reason: impl Into<String>) -> Self {
        Field::Unavailable {
            unavailable: reason.into(),
        }
    }
}

pub fn point(e: &Exponent) -> [u32; 2] {
    [e.i, e.j]
}

/// Monomial in input syntax, e.g. `x*y^2`.
pub fn monomial_text(e: &Exponent) -> String {
    let piece = |name: char, k: u32| match k {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{k}"),
    };
    let x = piece('x', e.i);
    let y = piece('y', e.j);
    match (x.is_empty(), y.is_empty()) {
        (true, true) => "1".to_string(),
        (false, true) => x,
        (true, false) => y,
        (false, false) => format!("{x}*{y}"),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MilnorJson {
    pub mu: u64,
    pub stabilized_at: u32,
    pub status: &'static str,
}

impl MilnorJson {
    pub fn from_result(r: &MilnorResult) -> Self {
        MilnorJson {
            mu: r.mu,
            stabilized_at: r.stabilized_at,
            status: match r.status {
                MilnorStatus::Ok => "ok",
                MilnorStatus::Smooth => "smooth",
                MilnorStatus::NonIsolated => "non_isolated",
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceJson {
    pub start: [u32; 2],
    pub end: [u32; 2],
    pub segments: u32,
    pub coeffs: Vec<String>,
    pub nondegenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_degree: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegeneracyJson {
    pub overall: bool,
    pub faces: Vec<FaceJson>,
}

impl DegeneracyJson {
    pub fn from_report(report: &DegeneracyReport) -> Self {
        DegeneracyJson {
            overall: report.overall,
            faces: report
                .faces
                .iter()
                .map(|verdict| FaceJson {
                    start: point(&verdict.face.geometry().start()),
                    end: point(&verdict.face.geometry().end()),
                    segments: verdict.face.geometry().segment_count(),
                    coeffs: verdict.face.coeffs().iter().map(|c| c.to_string()).collect(),
                    nondegenerate: verdict.nondegenerate,
                    witness_degree: verdict.witness_degree,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CandidateJson {
    pub monomial: String,
    pub exponent: [u32; 2],
    pub drop: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct JumpJson {
    pub lambda_prime: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_exponent: Option<[u32; 2]>,
    pub candidates: Vec<CandidateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate_path: Option<DegeneratePathJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegeneratePathJson {
    pub mu: u64,
    pub nu: u64,
}

impl JumpJson {
    pub fn from_report(report: &JumpReport) -> Self {
        JumpJson {
            lambda_prime: report.lambda_prime,
            witness: report.witness.as_ref().map(monomial_text),
            witness_exponent: report.witness.as_ref().map(point),
            candidates: report
                .candidates
                .iter()
                .map(|(e, drop)| CandidateJson {
                    monomial: monomial_text(e),
                    exponent: point(e),
                    drop: *drop,
                })
                .collect(),
            degenerate_path: report.degenerate_path.map(|p| DegeneratePathJson {
                mu: p.mu,
                nu: p.nu,
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SlopePartJson {
    pub width: u32,
    pub height: u32,
    pub smooth: bool,
    pub lambda: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SlopesJson {
    pub parts: Vec<SlopePartJson>,
    pub case: u8,
    pub bounds: [u64; 2],
}

impl SlopesJson {
    pub fn from_decomposition(d: &SlopeDecomposition) -> Self {
        SlopesJson {
            parts: d
                .parts
                .iter()
                .map(|p| SlopePartJson {
                    width: p.width,
                    height: p.height,
                    smooth: p.smooth,
                    lambda: p.lambda,
                })
                .collect(),
            case: d.case_id,
            bounds: [d.bounds.0, d.bounds.1],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisJson {
    pub input: String,
    pub germ: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized: Option<String>,
    pub support: Vec<[u32; 2]>,
    pub vertices: Vec<[u32; 2]>,
    pub convenient: bool,
    pub x_intercept: u32,
    pub y_intercept: u32,
    pub doubled_area: u64,
    pub nu: i64,
    pub nondegenerate: DegeneracyJson,
    pub mu: MilnorJson,
    pub branches: Field<u64>,
    pub irreducible: Field<bool>,
    pub jump: JumpJson,
    pub slopes: SlopesJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg_file: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleJson {
    pub s: String,
    pub mu: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeformJson {
    pub base: String,
    pub family: String,
    pub mu_base: u64,
    pub samples: Vec<SampleJson>,
    pub jump: u64,
}

impl DeformJson {
    pub fn new(base: String, family: String, result: &FamilyJump) -> Self {
        DeformJson {
            base,
            family,
            mu_base: result.mu_base,
            samples: result
                .per_sample
                .iter()
                .map(|(s, mu)| SampleJson {
                    s: s.to_string(),
                    mu: *mu,
                })
                .collect(),
            jump: result.jump,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureJson {
    pub p: u32,
    pub q: u32,
    pub case: u8,
    pub gcd: u32,
    pub lambda_prime: u64,
    pub lambda_conjectured: u64,
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified_jump: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified_matches: Option<bool>,
}

impl ConjectureJson {
    pub fn from_record(rec: &ConjectureRecord) -> Self {
        ConjectureJson {
            p: rec.p,
            q: rec.q,
            case: rec.case_id,
            gcd: rec.d,
            lambda_prime: rec.lambda_prime,
            lambda_conjectured: rec.lambda_conjectured,
            family: rec.family_text.clone(),
            verified_jump: rec.verified_jump,
            verified_matches: rec.verified_matches(),
        }
    }
}
