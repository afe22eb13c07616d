//! Human-readable rendering of the analysis records.

use crate::records::{
    AnalysisJson, ConjectureJson, DeformJson, Field, JumpJson, MilnorJson, SlopesJson,
};

fn fmt_point(p: &[u32; 2]) -> String {
    format!("({},{})", p[0], p[1])
}

pub fn milnor_line(m: &MilnorJson) -> String {
    match m.status {
        "ok" | "smooth" => format!("mu: {} (stabilized at N = {})", m.mu, m.stabilized_at),
        _ => "mu: not isolated".to_string(),
    }
}

pub fn jump_block(j: &JumpJson) -> String {
    let mut out = String::new();
    out.push_str(&format!("lambda': {}\n", j.lambda_prime));
    if let Some(w) = &j.witness {
        out.push_str(&format!("witness: {w}\n"));
    }
    if let Some(path) = &j.degenerate_path {
        out.push_str(&format!(
            "degenerate path: mu = {}, nu = {}, jump = mu - nu\n",
            path.mu, path.nu
        ));
    }
    if !j.candidates.is_empty() {
        out.push_str("candidates (monomial -> drop):\n");
        for c in &j.candidates {
            out.push_str(&format!("  {:<10} -> {}\n", c.monomial, c.drop));
        }
    }
    out
}

pub fn slopes_block(s: &SlopesJson) -> String {
    let mut out = String::new();
    out.push_str("slope decomposition:\n");
    for part in &s.parts {
        out.push_str(&format!(
            "  extent ({}, {}): {}lambda {}\n",
            part.width,
            part.height,
            if part.smooth { "smooth, " } else { "" },
            part.lambda
        ));
    }
    out.push_str(&format!(
        "bound clause {}: {} <= lambda' <= {}\n",
        s.case, s.bounds[0], s.bounds[1]
    ));
    out
}

pub fn analysis_text(a: &AnalysisJson, ascii_figure: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("germ: {}\n", a.germ));
    if let Some(note) = &a.stabilized {
        out.push_str(&format!("stabilized: {note}\n"));
    }
    out.push_str(&format!(
        "support: {}\n",
        a.support.iter().map(fmt_point).collect::<Vec<_>>().join(" ")
    ));
    out.push_str(&format!(
        "newton polygon: {}\n",
        a.vertices.iter().map(fmt_point).collect::<Vec<_>>().join(" -> ")
    ));
    out.push_str(&format!(
        "convenient: yes (a = {}, b = {}), doubled area 2S = {}\n",
        a.x_intercept, a.y_intercept, a.doubled_area
    ));
    out.push_str(&format!("nu: {}\n", a.nu));
    out.push_str(&format!(
        "non-degenerate: {}\n",
        if a.nondegenerate.overall { "yes" } else { "no" }
    ));
    for face in &a.nondegenerate.faces {
        out.push_str(&format!(
            "  face {}-{}: segments {}, coeffs [{}]{}\n",
            fmt_point(&face.start),
            fmt_point(&face.end),
            face.segments,
            face.coeffs.join(", "),
            match face.witness_degree {
                Some(d) => format!(", degenerate (gcd degree {d})"),
                None => ", squarefree".to_string(),
            }
        ));
    }
    out.push_str(&milnor_line(&a.mu));
    out.push('\n');
    match &a.branches {
        Field::Value(r) => out.push_str(&format!("branches: {r}\n")),
        Field::Unavailable { unavailable } => {
            out.push_str(&format!("branches: unavailable ({unavailable})\n"))
        }
    }
    match &a.irreducible {
        Field::Value(flag) => out.push_str(&format!(
            "irreducible: {}\n",
            if *flag { "yes" } else { "no" }
        )),
        Field::Unavailable { unavailable } => {
            out.push_str(&format!("irreducible: unavailable ({unavailable})\n"))
        }
    }
    out.push_str(&jump_block(&a.jump));
    out.push_str(&slopes_block(&a.slopes));
    if let Some(file) = &a.svg_file {
        out.push_str(&format!("figure written to {file}\n"));
    }
    out.push('\n');
    out.push_str(ascii_figure);
    out
}

pub fn deform_text(d: &DeformJson) -> String {
    let mut out = String::new();
    out.push_str(&format!("base germ: {}\n", d.base));
    out.push_str(&format!("family: {}\n", d.family));
    out.push_str(&format!("mu(f_0) = {}\n", d.mu_base));
    for sample in &d.samples {
        out.push_str(&format!("mu(f_s) at s = {:<6} = {}\n", sample.s, sample.mu));
    }
    out.push_str(&format!("jump: {}\n", d.jump));
    out.push_str("note: sampled jumps are realized values, not proofs of minimality\n");
    out
}

pub fn conjecture_text(c: &ConjectureJson) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "x^{} - y^{}: case {}, gcd {}\n",
        c.p, c.q, c.case, c.gcd
    ));
    out.push_str(&format!("lambda' (computable): {}\n", c.lambda_prime));
    out.push_str(&format!("lambda (conjectured): {}\n", c.lambda_conjectured));
    out.push_str(&format!("family: {}\n", c.family));
    if let Some(jump) = c.verified_jump {
        out.push_str(&format!("realized jump of the family: {jump}\n"));
        match c.verified_matches {
            Some(true) => out.push_str("verification: realized jump matches the conjectured value\n"),
            Some(false) => out.push_str(
                "WARNING: realized jump differs from the conjectured value\n",
            ),
            None => {}
        }
    }
    out
}

pub fn conjecture_grid_row(c: &ConjectureJson) -> String {
    let verified = match (c.verified_jump, c.verified_matches) {
        (Some(j), Some(true)) => format!("{j} ok"),
        (Some(j), Some(false)) => format!("{j} MISMATCH"),
        _ => "-".to_string(),
    };
    format!(
        "{:>3} {:>3}  case {}  gcd {:>2}  lambda' {:>3}  conjectured {:>3}  realized {:<10}  {}",
        c.p, c.q, c.case, c.gcd, c.lambda_prime, c.lambda_conjectured, verified, c.family
    )
}
