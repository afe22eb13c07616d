//! Newton-polygon figures: a standalone SVG with the lattice grid, and a
//! coarse ASCII counterpart for terminal output.
//!
//! Filled dots mark the support of the germ; hollow circles mark deformation
//! monomials (the witness prominently, other candidates faintly).

use milnor_jump::poly::Exponent;
use milnor_jump::NewtonPolygon;

pub struct Figure<'a> {
    pub support: &'a [Exponent],
    pub polygon: &'a NewtonPolygon,
    pub candidates: &'a [Exponent],
    pub witness: Option<Exponent>,
}

impl Figure<'_> {
    fn extent(&self) -> (u32, u32) {
        let mut max_i = 1;
        let mut max_j = 1;
        for e in self.support.iter().chain(self.candidates.iter()) {
            max_i = max_i.max(e.i);
            max_j = max_j.max(e.j);
        }
        if let Some(w) = self.witness {
            max_i = max_i.max(w.i);
            max_j = max_j.max(w.j);
        }
        (max_i, max_j)
    }

    /// Plain-text lattice: `*` support, `o` witness, `.` other candidates,
    /// `+` lattice points on the polygon, blank elsewhere.
    pub fn ascii(&self) -> String {
        let (max_i, max_j) = self.extent();
        let on_polygon: Vec<Exponent> = self
            .polygon
            .faces()
            .iter()
            .flat_map(|f| f.lattice_points())
            .collect();
        let mut out = String::new();
        out.push_str("  y\n");
        for j in (0..=max_j).rev() {
            out.push_str(&format!("{j:3} "));
            for i in 0..=max_i {
                let e = Exponent::new(i, j);
                let mark = if self.support.contains(&e) {
                    '*'
                } else if self.witness == Some(e) {
                    'o'
                } else if self.candidates.contains(&e) {
                    '.'
                } else if on_polygon.contains(&e) {
                    '+'
                } else {
                    ' '
                };
                out.push(' ');
                out.push(mark);
                out.push(' ');
            }
            out.push('\n');
        }
        out.push_str("    ");
        for i in 0..=max_i {
            out.push_str(&format!("{i:^3}"));
        }
        out.push_str(" x\n");
        out
    }

    /// Standalone SVG at a fixed integer pitch with labeled axes.
    pub fn svg(&self) -> String {
        const PITCH: i64 = 40;
        const MARGIN: i64 = 50;
        let (max_i, max_j) = self.extent();
        let (max_i, max_j) = (i64::from(max_i) + 1, i64::from(max_j) + 1);
        let width = 2 * MARGIN + max_i * PITCH;
        let height = 2 * MARGIN + max_j * PITCH;
        let px = |i: i64| MARGIN + i * PITCH;
        let py = |j: i64| height - MARGIN - j * PITCH;

        let mut svg = String::new();
        svg.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
             viewBox=\"0 0 {width} {height}\">\n"
        ));
        svg.push_str(&format!(
            "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
        ));

        // lattice grid
        for i in 0..=max_i {
            svg.push_str(&format!(
                "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#cccccc\"/>\n",
                px(i),
                py(0),
                py(max_j)
            ));
        }
        for j in 0..=max_j {
            svg.push_str(&format!(
                "  <line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"#cccccc\"/>\n",
                px(0),
                px(max_i),
                py(j)
            ));
        }

        // axes with arrowheads and labels
        let ax = px(max_i) + PITCH / 2;
        let ay = py(max_j) - PITCH / 2;
        svg.push_str(&format!(
            "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{ax}\" y2=\"{1}\" stroke=\"black\" stroke-width=\"2\"/>\n",
            px(0),
            py(0)
        ));
        svg.push_str(&format!(
            "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{ay}\" stroke=\"black\" stroke-width=\"2\"/>\n",
            px(0),
            py(0)
        ));
        svg.push_str(&format!(
            "  <polygon points=\"{0},{1} {2},{3} {2},{4}\" fill=\"black\"/>\n",
            ax + 10,
            py(0),
            ax,
            py(0) - 5,
            py(0) + 5
        ));
        svg.push_str(&format!(
            "  <polygon points=\"{0},{1} {2},{3} {4},{3}\" fill=\"black\"/>\n",
            px(0),
            ay - 10,
            px(0) - 5,
            ay,
            px(0) + 5
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"serif\" font-size=\"20\">x</text>\n",
            ax + 2,
            py(0) + 22
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"serif\" font-size=\"20\">y</text>\n",
            px(0) - 24,
            ay - 2
        ));

        // coordinate labels on the axes
        for i in 0..=max_i {
            svg.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-family=\"serif\" font-size=\"12\" \
                 text-anchor=\"middle\" fill=\"#555555\">{i}</text>\n",
                px(i),
                py(0) + 18
            ));
        }
        for j in 1..=max_j {
            svg.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-family=\"serif\" font-size=\"12\" \
                 text-anchor=\"end\" fill=\"#555555\">{j}</text>\n",
                px(0) - 8,
                py(j) + 4
            ));
        }

        // the polygon
        if self.polygon.vertices().len() >= 2 {
            let points: Vec<String> = self
                .polygon
                .vertices()
                .iter()
                .map(|v| format!("{},{}", px(i64::from(v.i)), py(i64::from(v.j))))
                .collect();
            svg.push_str(&format!(
                "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n",
                points.join(" ")
            ));
        }

        // candidates (faint), witness (hollow), support (filled)
        for e in self.candidates {
            if Some(*e) == self.witness {
                continue;
            }
            svg.push_str(&format!(
                "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"none\" stroke=\"#999999\"/>\n",
                px(i64::from(e.i)),
                py(i64::from(e.j))
            ));
        }
        if let Some(w) = self.witness {
            svg.push_str(&format!(
                "  <circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"white\" stroke=\"black\" \
                 stroke-width=\"2\"/>\n",
                px(i64::from(w.i)),
                py(i64::from(w.j))
            ));
        }
        for e in self.support {
            svg.push_str(&format!(
                "  <circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>\n",
                px(i64::from(e.i)),
                py(i64::from(e.j))
            ));
        }
        svg.push_str("</svg>\n");
        svg
    }
}
