//! Output documents and their JSON/CSV encodings.
//!
//! JSON floats use the shortest representation that parses back exactly.
//! CSV floats are written as `d.ddddddddddddddddde±x`, 17 significant digits.
//! Both encodings end lines with LF and finish with a newline.

use hadamard_core::bloch::{BlochPoint, Intersection, TrajectoryPoint};
use hadamard_core::verify::{DerivedFamily, ResidualReport};
use hadamard_core::{Complex, GateMatrix};
use serde::Serialize;

use crate::command::Format;

/// Header of the derived-family CSV.
pub const DERIVED_HEADER: [&str; 7] = ["theta", "phi", "gamma", "residual", "x", "y", "z"];
/// Header of the trajectory CSV.
pub const TRAJECTORY_HEADER: [&str; 7] = ["param", "x", "y", "z", "theta", "phi", "gamma"];
/// Header of the intersection CSV.
pub const INTERSECTION_HEADER: [&str; 11] = [
    "param", "x", "y", "z", "theta", "phi", "gamma", "a_re", "a_im", "b_re", "b_im",
];
/// Header of the gate-matrix CSV.
pub const GATE_HEADER: [&str; 4] = ["row", "col", "re", "im"];

/// A command's result, ready to encode.
#[derive(Clone, Debug)]
pub enum Document {
    /// `gates-show`
    Gate(GateMatrix),
    /// `check-unitarity`
    Unitarity {
        /// Canonical gate name.
        gate: String,
        /// `‖G†G − I‖∞`
        residual: f64,
        /// Threshold used for `pass`.
        tol: f64,
    },
    /// `verify`
    Residuals(ResidualReport),
    /// `derive`
    Derived {
        /// Canonical gate name.
        gate: String,
        /// Canonical template name.
        template: String,
        /// Oracle output.
        family: DerivedFamily,
    },
    /// `trajectory`
    Trajectory(Vec<TrajectoryPoint>),
    /// `intersect`
    Intersections(Vec<Intersection>),
}

#[derive(Serialize)]
struct Cx {
    re: f64,
    im: f64,
}

impl From<Complex> for Cx {
    fn from(z: Complex) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct UnitarityDoc<'a> {
    gate: &'a str,
    residual: f64,
    tol: f64,
    pass: bool,
}

#[derive(Serialize)]
struct ResidualDoc {
    row1: f64,
    row2: f64,
    pass: bool,
}

#[derive(Serialize)]
struct AcceptedRecord {
    theta: f64,
    phi: f64,
    gamma: f64,
    residual: f64,
    x: f64,
    y: f64,
    z: f64,
}

#[derive(Serialize)]
struct DerivedDoc<'a> {
    gate: &'a str,
    template: &'a str,
    convention: &'static str,
    grid: [usize; 3],
    tolerance: f64,
    empty: bool,
    accepted: Vec<AcceptedRecord>,
}

#[derive(Serialize)]
struct PointRecord {
    param: f64,
    x: f64,
    y: f64,
    z: f64,
    theta: f64,
    phi: f64,
    gamma: f64,
}

impl PointRecord {
    fn new(param: f64, p: &BlochPoint) -> Self {
        Self {
            param,
            x: p.x,
            y: p.y,
            z: p.z,
            theta: p.theta,
            phi: p.phi,
            gamma: p.gamma,
        }
    }

    fn fields(&self) -> [f64; 7] {
        [
            self.param, self.x, self.y, self.z, self.theta, self.phi, self.gamma,
        ]
    }
}

#[derive(Serialize)]
struct IntersectionRecord {
    #[serde(flatten)]
    point: PointRecord,
    a: Cx,
    b: Cx,
}

/// Formats a float for CSV with 17 significant digits.
pub fn csv_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("documents contain only finite numbers");
    s.push('\n');
    s
}

fn csv<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("ASCII output")
}

fn floats(xs: &[f64]) -> Vec<String> {
    xs.iter().copied().map(csv_float).collect()
}

fn accepted_records(family: &DerivedFamily) -> Vec<AcceptedRecord> {
    family
        .accepted
        .iter()
        .map(|p| {
            let b = p.bloch();
            AcceptedRecord {
                theta: p.theta,
                phi: p.phi,
                gamma: p.gamma,
                residual: p.residual,
                x: b.x,
                y: b.y,
                z: b.z,
            }
        })
        .collect()
}

impl Document {
    /// Encodes the document.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    fn to_json(&self) -> String {
        match self {
            Self::Gate(g) => json(&g.rows().map(|row| row.map(Cx::from))),
            Self::Unitarity {
                gate,
                residual,
                tol,
            } => json(&UnitarityDoc {
                gate,
                residual: *residual,
                tol: *tol,
                pass: *residual < *tol,
            }),
            Self::Residuals(r) => json(&ResidualDoc {
                row1: r.row1,
                row2: r.row2,
                pass: r.pass,
            }),
            Self::Derived {
                gate,
                template,
                family,
            } => json(&DerivedDoc {
                gate,
                template,
                convention: family.convention.as_str(),
                grid: [family.grid.n_theta, family.grid.n_phi, family.grid.n_gamma],
                tolerance: family.tolerance,
                empty: family.is_empty(),
                accepted: accepted_records(family),
            }),
            Self::Trajectory(points) => json(
                &points
                    .iter()
                    .map(|p| PointRecord::new(p.param, &p.point))
                    .collect::<Vec<_>>(),
            ),
            Self::Intersections(hits) => json(
                &hits
                    .iter()
                    .map(|h| IntersectionRecord {
                        point: PointRecord::new(h.param, &h.point),
                        a: h.state.a().into(),
                        b: h.state.b().into(),
                    })
                    .collect::<Vec<_>>(),
            ),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Self::Gate(g) => {
                let rows = g.rows();
                csv(
                    GATE_HEADER,
                    (0..2).flat_map(|r| {
                        (0..2).map(move |c| {
                            let z = rows[r][c];
                            vec![
                                r.to_string(),
                                c.to_string(),
                                csv_float(z.re),
                                csv_float(z.im),
                            ]
                        })
                    }),
                )
            }
            Self::Unitarity {
                gate,
                residual,
                tol,
            } => csv(
                ["gate", "residual", "tol", "pass"],
                [vec![
                    gate.clone(),
                    csv_float(*residual),
                    csv_float(*tol),
                    (residual < tol).to_string(),
                ]],
            ),
            Self::Residuals(r) => csv(
                ["row1", "row2", "pass"],
                [vec![
                    csv_float(r.row1),
                    csv_float(r.row2),
                    r.pass.to_string(),
                ]],
            ),
            Self::Derived { family, .. } => csv(
                DERIVED_HEADER,
                accepted_records(family)
                    .iter()
                    .map(|r| floats(&[r.theta, r.phi, r.gamma, r.residual, r.x, r.y, r.z])),
            ),
            Self::Trajectory(points) => csv(
                TRAJECTORY_HEADER,
                points
                    .iter()
                    .map(|p| floats(&PointRecord::new(p.param, &p.point).fields())),
            ),
            Self::Intersections(hits) => csv(
                INTERSECTION_HEADER,
                hits.iter().map(|h| {
                    let mut row = PointRecord::new(h.param, &h.point).fields().to_vec();
                    let (a, b) = (h.state.a(), h.state.b());
                    row.extend([a.re, a.im, b.re, b.im]);
                    floats(&row)
                }),
            ),
        }
    }
}
