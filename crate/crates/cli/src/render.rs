//! Text grids for Hodge-Deligne diagrams: `p` runs left to right, `q`
//! bottom to top, zero cells print as `.`.

use std::fmt::Write;

use lmhs_core::{HodgeDeligneDiagram, LmhsSpec, NString};

pub fn diagram(d: &HodgeDeligneDiagram) -> String {
    let Some((p0, p1, q0, q1)) = d.bounds() else {
        return "(empty)\n".to_string();
    };
    let cell = d
        .iter()
        .map(|(_, m)| m.to_string().len())
        .chain((p0..=p1).map(|p| p.to_string().len()))
        .max()
        .unwrap_or(1);
    let label = (q0..=q1).map(|q| q.to_string().len()).max().unwrap_or(1);

    let mut out = String::new();
    writeln!(out, "{:>label$}", "q").unwrap();
    for q in (q0..=q1).rev() {
        let mut row = format!("{q:>label$} |");
        for p in p0..=p1 {
            let m = d.get((p, q));
            let text = if m == 0 { ".".to_string() } else { m.to_string() };
            write!(row, " {text:>cell$}").unwrap();
        }
        writeln!(out, "{}", row.trim_end()).unwrap();
    }
    let columns = (p1 - p0 + 1) as usize;
    writeln!(out, "{:label$} +{}", "", "-".repeat(columns * (cell + 1))).unwrap();
    let mut axis = format!("{:label$}  ", "");
    for p in p0..=p1 {
        write!(axis, " {p:>cell$}").unwrap();
    }
    writeln!(out, "{axis}  p").unwrap();
    out
}

fn eigen(s: &NString) -> String {
    format!("e({}/{})", s.exponent, s.order)
}

fn times(m: u64) -> String {
    if m == 1 {
        String::new()
    } else {
        format!(" x{m}")
    }
}

/// Grid of the limit plus the eigenvalue legend and one line per N-string
/// of length at least two.
pub fn lmhs(spec: &LmhsSpec) -> String {
    let mut out = diagram(&spec.diagram());
    let annotations = spec.eigen_annotations();
    if !annotations.is_empty() {
        writeln!(out, "eigenvalues of T (e(x) = exp(2 pi i x)), unipotent elsewhere:").unwrap();
        for ((p, q), entries) in &annotations {
            let parts: Vec<String> = entries
                .iter()
                .map(|&(a, d, m)| format!("e({a}/{d}){}", times(m)))
                .collect();
            writeln!(out, "  ({p},{q})  {}", parts.join(", ")).unwrap();
        }
    }
    for s in spec.strings().iter().filter(|s| s.length > 1) {
        let chain: Vec<String> = s.positions().map(|(p, q)| format!("({p},{q})")).collect();
        let tag = if s.is_unipotent() { String::new() } else { format!("  {}", eigen(s)) };
        writeln!(out, "N: {}{}{tag}", chain.join(" -> "), times(s.mult)).unwrap();
    }
    out
}

/// Compact `[[p, q, m], ...]` form, the same as in fixture files.
pub fn machine(d: &HodgeDeligneDiagram) -> String {
    serde_json::to_string(d).expect("diagrams serialize")
}
