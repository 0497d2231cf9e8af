//! The structured output document and its serialization.
//!
//! Numbers are printed with 17 significant digits (`{:.16e}`), enough to
//! reconstruct every double bit-exactly, and the document layout is fixed,
//! so identical inputs produce byte-identical output.

use std::io;

use biquat::{Biquaternion, CaseLabel, ComplexScalar, SolutionSet, VerificationReport};
use serde::Serialize;

pub type ComplexPair = [f64; 2];
pub type RootDoc = [ComplexPair; 4];

fn pair(z: ComplexScalar) -> ComplexPair {
    [z.re, z.im]
}

fn root(x: &Biquaternion) -> RootDoc {
    let [a0, a1, a2, a3] = x.components();
    [pair(a0), pair(a1), pair(a2), pair(a3)]
}

#[derive(Serialize)]
pub struct FamilyDoc {
    pub x0: ComplexPair,
    /// Required vector square of every member.
    pub c: ComplexPair,
    pub samples: Vec<RootDoc>,
}

#[derive(Serialize)]
pub struct BoundaryDoc {
    pub vec_part: bool,
    pub vec_square: bool,
    pub norm_form: bool,
    pub scalar_part: bool,
}

#[derive(Serialize)]
pub struct MetadataDoc {
    pub n: u32,
    pub branch: String,
    pub tol: f64,
    pub boundary_flags: BoundaryDoc,
}

#[derive(Serialize)]
pub struct VerificationDoc {
    pub pass: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    pub root_residuals: Vec<f64>,
    pub family_residuals: Vec<f64>,
}

#[derive(Serialize)]
pub struct ReportDoc {
    pub case: &'static str,
    pub case_description: &'static str,
    pub input: RootDoc,
    pub isolated: Vec<RootDoc>,
    pub families: Vec<FamilyDoc>,
    pub insoluble: Option<String>,
    pub metadata: MetadataDoc,
    pub verification: Option<VerificationDoc>,
}

impl ReportDoc {
    pub fn new(
        a: Biquaternion,
        set: &SolutionSet,
        samples_per_family: usize,
        verification: Option<&VerificationReport>,
    ) -> Self {
        let families = set
            .families
            .iter()
            .map(|f| FamilyDoc {
                x0: pair(f.x0),
                c: pair(f.c),
                samples: biquat::family_samples(f, samples_per_family, set.metadata.branch)
                    .iter()
                    .map(root)
                    .collect(),
            })
            .collect();
        ReportDoc {
            case: set.case.code(),
            case_description: set.case.describe(),
            input: root(&a),
            isolated: set.isolated.iter().map(root).collect(),
            families,
            insoluble: set.insoluble.clone(),
            metadata: MetadataDoc {
                n: set.metadata.n,
                branch: set.metadata.branch.to_string(),
                tol: set.metadata.tol,
                boundary_flags: BoundaryDoc {
                    vec_part: set.metadata.boundary.vec_part,
                    vec_square: set.metadata.boundary.vec_square,
                    norm_form: set.metadata.boundary.norm_form,
                    scalar_part: set.metadata.boundary.scalar_part,
                },
            },
            verification: verification.map(|v| VerificationDoc {
                pass: v.pass,
                max_residual: v.max_residual,
                tolerance: v.tolerance,
                root_residuals: v.root_residuals.clone(),
                family_residuals: v.family_residuals.clone(),
            }),
        }
    }
}

#[derive(Serialize)]
pub struct OracleDoc {
    pub mode: &'static str,
    pub seed: u64,
    pub n: u32,
    pub count: usize,
    pub trials: usize,
    pub pass: bool,
    pub max_recovery_distance: f64,
    pub tolerance: f64,
}

// serde_json's default float output is the shortest round-trip form, whose
// digit count varies; pinning {:.16e} keeps the byte layout uniform while
// still round-tripping exactly.
struct Sig17Formatter;

impl serde_json::ser::Formatter for Sig17Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes any document as a single JSON line with 17-significant-digit
/// floats.
pub fn to_json(doc: &impl Serialize) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sig17Formatter);
    doc.serialize(&mut ser)
        .expect("report serialization cannot fail");
    String::from_utf8(out).expect("serializer emits UTF-8")
}

/// Human-readable rendering of a solution set.
pub fn render_text(
    a: Biquaternion,
    set: &SolutionSet,
    samples_per_family: usize,
    verification: Option<&VerificationReport>,
) -> String {
    use std::fmt::Write;

    let mut out = String::new();
    let meta = &set.metadata;
    let _ = writeln!(out, "input A = {a}");
    let _ = writeln!(
        out,
        "case {}: n = {}, branch = {}, tol = {:e}",
        set.case, meta.n, meta.branch, meta.tol
    );
    if meta.boundary.any() {
        let _ = writeln!(
            out,
            "warning: classification near tolerance boundary; consider re-running with a different --tol"
        );
    }
    if let Some(reason) = &set.insoluble {
        let _ = writeln!(out, "insoluble: {reason}");
    }
    if !set.isolated.is_empty() {
        let _ = writeln!(out, "{} isolated root(s):", set.isolated.len());
        for (k, x) in set.isolated.iter().enumerate() {
            let _ = writeln!(out, "  X{} = {x}", k + 1);
        }
    }
    if !set.families.is_empty() {
        let _ = writeln!(out, "{} root family(ies):", set.families.len());
        for (k, f) in set.families.iter().enumerate() {
            let _ = writeln!(
                out,
                "  F{}: scalar part = {}, vector square = {}",
                k + 1,
                fmt_c(f.x0),
                fmt_c(f.c)
            );
            for x in biquat::family_samples(f, samples_per_family, meta.branch) {
                let _ = writeln!(out, "    sample {x}");
            }
        }
    }
    if set.case == CaseLabel::NilpotentSingular {
        let _ = writeln!(out, "0 roots exist for this input.");
    }
    if let Some(v) = verification {
        let _ = writeln!(
            out,
            "verification: max residual {:.3e} against tolerance {:e} -> {}",
            v.max_residual,
            v.tolerance,
            if v.pass { "PASS" } else { "FAIL" }
        );
    }
    out
}

fn fmt_c(z: ComplexScalar) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
