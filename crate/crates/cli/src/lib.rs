//! Document building and rendering for the `dehnsurg` command line tool.
//!
//! Rational values are serialized as `"numerator/denominator"` strings in
//! lowest terms with a positive denominator, never as floats, so every
//! output format carries the exact values.

pub mod verify;

use dehnsurg_core::closed_form;
use dehnsurg_core::geometry::Rational;
use dehnsurg_core::repvar::{
    alexander_polynomial, arc_lift_base, bifurcation_points, jumping_points, RepVarError,
    TorusKnot,
};
use dehnsurg_core::surgery::{all_invariants, SurgeryError, SurgeryProblem};
use serde::{Deserialize, Serialize};

/// Exact rational as a `num/den` string.
pub fn show_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// One flat connection row of the invariant table.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct OutputRecord {
    pub q: u32,
    pub k: i64,
    pub ell: u32,
    pub i: u32,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub sf: i64,
    #[serde(rename = "sfZ")]
    pub sf_z: i64,
    pub integral: String,
    pub cs: String,
    pub rho: String,
}

/// Per-surgery SU(3) Casson data.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct CassonBlock {
    #[serde(rename = "lambdaPrime")]
    pub lambda_prime: i64,
    #[serde(rename = "lambdaDoublePrime")]
    pub lambda_double_prime: String,
    pub lambda: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct InvariantsDocument {
    pub q: u32,
    pub k: i64,
    pub records: Vec<OutputRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub casson: Option<CassonBlock>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ArcRow {
    pub ell: u32,
    #[serde(rename = "startX")]
    pub start_x: String,
    #[serde(rename = "startY")]
    pub start_y: String,
    #[serde(rename = "endX")]
    pub end_x: String,
    #[serde(rename = "endY")]
    pub end_y: String,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct RepvarDocument {
    pub p: u32,
    pub q: u32,
    pub alexander: String,
    #[serde(rename = "alexanderCoefficients")]
    pub alexander_coefficients: Vec<i64>,
    pub jumping: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bifurcation: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<ArcRow>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Builds the full invariant table for 1/k surgery on the (2,q) torus knot,
/// with the Casson block when the SU(3) counts are tabulated for q.
pub fn build_invariants_document(q: u32, k: i64) -> Result<InvariantsDocument, SurgeryError> {
    let prob = SurgeryProblem::new(q, k)?;
    let mut records = Vec::new();
    for (label, rec) in all_invariants(&prob)? {
        records.push(OutputRecord {
            q,
            k,
            ell: label.ell,
            i: label.i,
            a: rec.a,
            b: rec.b,
            c: rec.c,
            sf: rec.sf,
            sf_z: rec.sf_knot_complement,
            integral: show_rational(&rec.integral_term),
            cs: show_rational(&rec.cs),
            rho: show_rational(&rec.rho),
        });
    }
    let casson = closed_form::lambda_su3(q, k).ok().map(|c| CassonBlock {
        lambda_prime: c.lambda_prime,
        lambda_double_prime: show_rational(&c.lambda_double_prime),
        lambda: show_rational(&c.lambda),
    });
    Ok(InvariantsDocument {
        q,
        k,
        records,
        casson,
    })
}

/// Builds the representation variety description of the (p,q) torus knot:
/// Alexander polynomial and jumping points always, bifurcation points and
/// the unsheared arc lift table when p = 2.
pub fn build_repvar_document(p: u32, q: u32) -> Result<RepvarDocument, RepVarError> {
    let knot = TorusKnot::new(p, q)?;
    let alex = alexander_polynomial(&knot);
    let jumping = jumping_points(&knot)
        .points()
        .iter()
        .map(show_rational)
        .collect();
    let (bifurcation, arcs) = if p == 2 {
        let b = bifurcation_points(&knot)?
            .points()
            .iter()
            .map(show_rational)
            .collect();
        let mut rows = Vec::new();
        for ell in 1..=(q - 1) / 2 {
            let lift = arc_lift_base(q, ell)?;
            rows.push(ArcRow {
                ell,
                start_x: show_rational(&lift.start.x),
                start_y: show_rational(&lift.start.y),
                end_x: show_rational(&lift.end.x),
                end_y: show_rational(&lift.end.y),
            });
        }
        (Some(b), Some(rows))
    } else {
        (None, None)
    };
    Ok(RepvarDocument {
        p,
        q,
        alexander: alex.to_string(),
        alexander_coefficients: alex.coefficients().to_vec(),
        jumping,
        bifurcation,
        arcs,
    })
}

const RECORD_HEADER: [&str; 12] = [
    "q", "k", "ell", "i", "a", "b", "c", "sf", "sfZ", "integral", "cs", "rho",
];

fn record_cells(r: &OutputRecord) -> Vec<String> {
    vec![
        r.q.to_string(),
        r.k.to_string(),
        r.ell.to_string(),
        r.i.to_string(),
        r.a.to_string(),
        r.b.to_string(),
        r.c.to_string(),
        r.sf.to_string(),
        r.sf_z.to_string(),
        r.integral.clone(),
        r.cs.clone(),
        r.rho.clone(),
    ]
}

pub fn render_invariants(doc: &InvariantsDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&RECORD_HEADER.join(","));
            out.push('\n');
            for r in &doc.records {
                out.push_str(&record_cells(r).join(","));
                out.push('\n');
            }
            if let Some(c) = &doc.casson {
                out.push('\n');
                out.push_str("lambdaPrime,lambdaDoublePrime,lambda\n");
                out.push_str(&format!(
                    "{},{},{}\n",
                    c.lambda_prime, c.lambda_double_prime, c.lambda
                ));
            }
            out
        }
        Format::Pretty => {
            let mut out = if doc.k == 0 {
                format!(
                    "no surgery on the (2,{}) torus knot (k = 0 leaves the three-sphere)\n",
                    doc.q
                )
            } else {
                format!(
                    "1/{} surgery on the (2,{}) torus knot: {} flat connection(s)\n",
                    doc.k,
                    doc.q,
                    doc.records.len()
                )
            };
            let rows: Vec<Vec<String>> = doc.records.iter().map(record_cells).collect();
            out.push_str(&aligned_table(&RECORD_HEADER, &rows));
            match &doc.casson {
                Some(c) => {
                    out.push_str(&format!(
                        "lambda' = {}   lambda'' = {}   lambda = {}\n",
                        c.lambda_prime, c.lambda_double_prime, c.lambda
                    ));
                }
                None => {
                    out.push_str(
                        "SU(3) representation counts are not tabulated for this q; \
                         no Casson block\n",
                    );
                }
            }
            out
        }
    }
}

pub fn render_repvar(doc: &RepvarDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str("p,q,alexander\n");
            out.push_str(&format!("{},{},{}\n", doc.p, doc.q, doc.alexander));
            out.push_str("\njumping\n");
            for s in &doc.jumping {
                out.push_str(s);
                out.push('\n');
            }
            if let Some(b) = &doc.bifurcation {
                out.push_str("\nbifurcation\n");
                for s in b {
                    out.push_str(s);
                    out.push('\n');
                }
            }
            if let Some(arcs) = &doc.arcs {
                out.push_str("\nell,startX,startY,endX,endY\n");
                for a in arcs {
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        a.ell, a.start_x, a.start_y, a.end_x, a.end_y
                    ));
                }
            }
            out
        }
        Format::Pretty => {
            let mut out = format!("({},{}) torus knot\n", doc.p, doc.q);
            out.push_str(&format!("Alexander polynomial: {}\n", doc.alexander));
            out.push_str(&format!("jumping points:       {}\n", doc.jumping.join(", ")));
            if let Some(b) = &doc.bifurcation {
                out.push_str(&format!("bifurcation points:   {}\n", b.join(", ")));
            }
            if let Some(arcs) = &doc.arcs {
                out.push_str("arc lifts (unsheared, slope -2q):\n");
                let rows: Vec<Vec<String>> = arcs
                    .iter()
                    .map(|a| {
                        vec![
                            a.ell.to_string(),
                            format!("({}, {})", a.start_x, a.start_y),
                            format!("({}, {})", a.end_x, a.end_y),
                        ]
                    })
                    .collect();
                out.push_str(&aligned_table(&["ell", "start", "end"], &rows));
            }
            out
        }
    }
}

fn aligned_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let line: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:>width$}", c, width = widths[i]))
            .collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    };
    emit(
        &mut out,
        &header.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
    );
    for row in rows {
        emit(&mut out, row);
    }
    out
}
