use std::fmt::Write;
use std::path::{Path, PathBuf};

use lmhs_core::basechange::{base_change_lmhs, cyclotomic_refinement, invariant_gap, CyclotomicMultiset};
use lmhs_core::checks::{self, CheckSet};
use lmhs_core::degeneration::{shioda_assemble, solve_unknown, DegenerationError, DegenerationFixture, Position};
use lmhs_core::polydisk::koszul_complex;
use lmhs_core::quiver::{self, decompose_indecomposables, format_multiset, is_self_dual};
use lmhs_core::{parse_fixture, FixtureBody, FixtureFile, HodgeDeligneDiagram, Report, Verdict};
use serde::Serialize;

use crate::render;

/// Process exit status: 0 all pass, 1 some check failed, 2 bad input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Pass = 0,
    Fail = 1,
    Input = 2,
}

#[derive(Debug)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { exit: Exit::Input, message: message.into() }
    }

    fn failed(message: impl Into<String>) -> Self {
        CliError { exit: Exit::Fail, message: message.into() }
    }
}

pub struct Outcome {
    pub stdout: String,
    pub exit: Exit,
}

type CmdResult = Result<Outcome, CliError>;

#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn verdict(&self, v: Verdict) -> String {
        let (text, code) = match v {
            Verdict::Pass => ("pass", "32"),
            Verdict::Fail => ("FAIL", "31"),
            Verdict::Skipped => ("skip", "33"),
        };
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn report(&self, r: &Report) -> String {
        let mut out = String::new();
        for res in &r.results {
            let line = format!("{}  {:<28} {}", self.verdict(res.verdict), res.id, res.location);
            match &res.witness {
                Some(w) => writeln!(out, "{line}  [{w}]").unwrap(),
                None => writeln!(out, "{}", line.trim_end()).unwrap(),
            }
        }
        for n in &r.notes {
            writeln!(out, "note: {n}").unwrap();
        }
        out
    }
}

fn load(path: &Path) -> Result<FixtureFile, CliError> {
    parse_fixture(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn degeneration(file: &FixtureFile) -> Result<&DegenerationFixture, CliError> {
    match &file.body {
        FixtureBody::Degeneration(fx) => Ok(fx),
        other => Err(CliError::input(format!(
            "{}: expected a degeneration fixture, found {}",
            file.name,
            other.kind()
        ))),
    }
}

/// Per-file result of a batch run.
struct Checked {
    path: PathBuf,
    outcome: Result<(FixtureFile, Report), CliError>,
}

/// Checks independent fixtures on separate threads; results keep the
/// command-line order.
fn check_all(paths: &[PathBuf], which: &[CheckSet]) -> Vec<Checked> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = paths
            .iter()
            .map(|path| {
                scope.spawn(move || {
                    let outcome = load(path).and_then(|file| {
                        let report = checks::run(&file, which)
                            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                        Ok((file, report))
                    });
                    Checked { path: path.clone(), outcome }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    })
}

fn batch_exit(results: &[Checked]) -> Exit {
    results
        .iter()
        .map(|c| match &c.outcome {
            Err(e) => e.exit,
            Ok((_, r)) if r.passed() => Exit::Pass,
            Ok(_) => Exit::Fail,
        })
        .max()
        .unwrap_or(Exit::Pass)
}

pub fn check(paths: &[PathBuf], which: &[CheckSet], style: Style, stderr: &mut String) -> CmdResult {
    let results = check_all(paths, which);
    let mut out = String::new();
    for (i, c) in results.iter().enumerate() {
        match &c.outcome {
            Ok((file, report)) => {
                if i > 0 {
                    out.push('\n');
                }
                writeln!(out, "== {} ({})", file.name, c.path.display()).unwrap();
                out.push_str(&style.report(report));
                let v = if report.passed() { Verdict::Pass } else { Verdict::Fail };
                writeln!(out, "verdict: {}", style.verdict(v)).unwrap();
            }
            Err(e) => writeln!(stderr, "error: {}", e.message).unwrap(),
        }
    }
    Ok(Outcome { stdout: out, exit: batch_exit(&results) })
}

#[derive(Serialize)]
struct MachineReport<'a> {
    path: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<&'a str>,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a Report>,
}

pub fn report(paths: &[PathBuf], which: &[CheckSet], machine: bool, style: Style, stderr: &mut String) -> CmdResult {
    let results = check_all(paths, which);
    let exit = batch_exit(&results);
    let mut out = String::new();
    if machine {
        let rows: Vec<MachineReport> = results
            .iter()
            .map(|c| {
                let path = c.path.display().to_string();
                match &c.outcome {
                    Ok((file, report)) => MachineReport {
                        path,
                        name: Some(&file.name),
                        kind: Some(file.body.kind()),
                        passed: report.passed(),
                        error: None,
                        report: Some(report),
                    },
                    Err(e) => MachineReport {
                        path,
                        name: None,
                        kind: None,
                        passed: false,
                        error: Some(&e.message),
                        report: None,
                    },
                }
            })
            .collect();
        out = serde_json::to_string_pretty(&rows).expect("reports serialize");
        out.push('\n');
        return Ok(Outcome { stdout: out, exit });
    }
    writeln!(out, "{:<28} {:<16} {:>5} {:>5} {:>5}  verdict", "fixture", "kind", "pass", "fail", "skip").unwrap();
    for c in &results {
        match &c.outcome {
            Ok((file, report)) => {
                let count = |v| report.results.iter().filter(|r| r.verdict == v).count();
                let v = if report.passed() { Verdict::Pass } else { Verdict::Fail };
                writeln!(
                    out,
                    "{:<28} {:<16} {:>5} {:>5} {:>5}  {}",
                    file.name,
                    file.body.kind(),
                    count(Verdict::Pass),
                    count(Verdict::Fail),
                    count(Verdict::Skipped),
                    style.verdict(v)
                )
                .unwrap();
            }
            Err(e) => writeln!(stderr, "error: {}", e.message).unwrap(),
        }
    }
    Ok(Outcome { stdout: out, exit })
}

pub fn solve(path: &Path, k: i64, position: Position) -> CmdResult {
    let file = load(path)?;
    let fx = degeneration(&file)?;
    if fx.stores(k, position) {
        return Err(CliError::input(format!(
            "over-determined: {position} in degree {k} is already stored in {}; remove it from the fixture to solve for it",
            file.name
        )));
    }
    let d = solve_unknown(fx, k, position).map_err(|e| match e {
        DegenerationError::Negative { .. } | DegenerationError::Inconsistent { .. } => CliError::failed(e.to_string()),
        _ => CliError::input(e.to_string()),
    })?;
    let mut out = String::new();
    writeln!(out, "{position} in degree {k}, dimension {}", d.mass()).unwrap();
    out.push_str(&render::diagram(&d));
    writeln!(out, "diagram: {}", render::machine(&d)).unwrap();
    Ok(Outcome { stdout: out, exit: Exit::Pass })
}

pub fn render_diagram(text: &str) -> CmdResult {
    let d: HodgeDeligneDiagram =
        serde_json::from_str(text).map_err(|e| CliError::input(format!("bad diagram {text:?}: {e}")))?;
    Ok(Outcome { stdout: render::diagram(&d), exit: Exit::Pass })
}

fn section(out: &mut String, title: &str, body: &str) {
    if !out.is_empty() {
        out.push('\n');
    }
    writeln!(out, "{title}").unwrap();
    out.push_str(body);
}

pub fn render_fixture(path: &Path, degree: Option<i64>) -> CmdResult {
    let file = load(path)?;
    let mut out = String::new();
    let wanted = |k: i64| degree.is_none_or(|d| d == k);
    match &file.body {
        FixtureBody::Degeneration(fx) => {
            for (&k, data) in fx.degrees.iter().filter(|(&k, _)| wanted(k)) {
                if let Some(l) = &data.lmhs {
                    section(&mut out, &format!("H^{k} limit, dimension {}", l.dim()), &render::lmhs(l));
                }
                let stored = [
                    ("special fiber", &data.special_fiber),
                    ("phantom", &data.phantom),
                    ("vanishing", &data.vanishing),
                ];
                for (label, d) in stored {
                    if let Some(d) = d {
                        section(&mut out, &format!("H^{k} {label}"), &render::diagram(d));
                    }
                }
            }
        }
        FixtureBody::Tail(t) => section(&mut out, "vanishing cohomology", &render::diagram(&t.vanishing)),
        FixtureBody::LocalSystem(l) => {
            let Some(inputs) = &l.shioda else {
                return Err(CliError::input(format!("{}: no diagrams to render", file.name)));
            };
            let table = shioda_assemble(inputs);
            for (label, d) in &table.blocks {
                section(&mut out, label, &render::diagram(d));
            }
            section(&mut out, "total", &render::diagram(&table.total));
        }
        FixtureBody::MultiParameter(m) => {
            for e in m.strata.entries.iter().filter(|e| wanted(e.degree)) {
                let name = format!("stratum {:?}, degree {}", e.subset, e.degree);
                if let Some(h) = &e.lmhs {
                    section(&mut out, &format!("{name}, limit"), &render::diagram(&h.diagram()));
                }
                if let Some(inv) = &e.inv {
                    section(&mut out, &format!("{name}, invariants"), &render::diagram(inv));
                }
                for (l, d) in &e.ih {
                    section(&mut out, &format!("{name}, IH^{l}"), &render::diagram(d));
                }
            }
        }
        FixtureBody::Quiver(_) => {
            return Err(CliError::input(format!(
                "{}: quiver fixtures have no diagram; use quiver-decompose",
                file.name
            )))
        }
    }
    if out.is_empty() {
        out.push_str("(empty)\n");
    }
    Ok(Outcome { stdout: out, exit: Exit::Pass })
}

pub fn quiver_decompose(path: &Path) -> CmdResult {
    let file = load(path)?;
    let FixtureBody::Quiver(q) = &file.body else {
        return Err(CliError::input(format!("{}: expected a quiver fixture, found {}", file.name, file.body.kind())));
    };
    let rep = &q.rep;
    let violations = quiver::validate(rep);
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(CliError::input(format!("{}: invalid representation: {}", file.name, list.join("; "))));
    }
    let summands = decompose_indecomposables(rep).map_err(|e| CliError::input(e.to_string()))?;
    let split = quiver::decomposes(rep);
    let cs = quiver::cs_sequence(rep).exact();
    let lic = quiver::local_invariant_cycle(rep);
    let mut out = String::new();
    writeln!(out, "dim psi = {}, dim phi = {}", rep.psi_dim(), rep.phi_dim()).unwrap();
    writeln!(out, "summands: {}", format_multiset(&summands)).unwrap();
    writeln!(out, "decomposes: {split}").unwrap();
    writeln!(out, "cs exact: {cs}").unwrap();
    writeln!(out, "local invariant cycle: {lic}").unwrap();
    let agree = split == cs && cs == lic;
    match is_self_dual(&summands) {
        Ok(()) => writeln!(out, "self-dual: verdicts {}", if agree { "agree" } else { "DISAGREE" }).unwrap(),
        Err(e) => writeln!(out, "{e}; verdicts {}", if agree { "agree" } else { "differ" }).unwrap(),
    }
    let exit = if is_self_dual(&summands).is_ok() && !agree { Exit::Fail } else { Exit::Pass };
    Ok(Outcome { stdout: out, exit })
}

/// Parses `d:m,d:m,...`.
pub fn parse_multiset(text: &str) -> Result<CyclotomicMultiset, String> {
    let mut m = CyclotomicMultiset::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (d, count) = part.split_once(':').ok_or_else(|| format!("expected d:m, got {part:?}"))?;
        let d: u64 = d.trim().parse().map_err(|_| format!("bad order in {part:?}"))?;
        let count: u64 = count.trim().parse().map_err(|_| format!("bad multiplicity in {part:?}"))?;
        if d == 0 {
            return Err("orders start at 1".into());
        }
        *m.entry(d).or_default() += count;
    }
    Ok(m)
}

fn format_cyclotomic(m: &CyclotomicMultiset) -> String {
    let parts: Vec<String> = m.iter().filter(|(_, &c)| c > 0).map(|(d, c)| format!("{d}:{c}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(",")
    }
}

pub fn base_change(path: Option<&Path>, kappa: u64, refine: Option<&CyclotomicMultiset>) -> CmdResult {
    if kappa == 0 {
        return Err(CliError::input("kappa must be positive"));
    }
    let mut out = String::new();
    if let Some(path) = path {
        let file = load(path)?;
        let fx = degeneration(&file)?;
        writeln!(out, "{}: base change of order {kappa}", file.name).unwrap();
        for (k, data) in &fx.degrees {
            let Some(l) = &data.lmhs else { continue };
            let after = base_change_lmhs(l, kappa).map_err(|e| CliError::input(e.to_string()))?;
            let gap = invariant_gap(l, kappa).map_err(|e| CliError::input(e.to_string()))?;
            writeln!(out, "H^{k}").unwrap();
            writeln!(out, "  invariants before  {}", l.ker_t_minus_i()).unwrap();
            writeln!(out, "  invariants after   {}", after.ker_t_minus_i()).unwrap();
            writeln!(out, "  gap                {}  (dimension {})", gap, gap.mass()).unwrap();
        }
    }
    if let Some(m) = refine {
        let found = cyclotomic_refinement(m, kappa).map_err(|e| CliError::input(e.to_string()))?;
        writeln!(out, "refinements of {} along {kappa}: {}", format_cyclotomic(m), found.len()).unwrap();
        for n in &found {
            writeln!(out, "  {}", format_cyclotomic(n)).unwrap();
        }
    }
    Ok(Outcome { stdout: out, exit: Exit::Pass })
}

pub fn koszul(path: &Path, subset: &[usize], degree: Option<i64>, slot: Option<usize>) -> CmdResult {
    let file = load(path)?;
    let FixtureBody::MultiParameter(m) = &file.body else {
        return Err(CliError::input(format!(
            "{}: expected a multi_parameter fixture, found {}",
            file.name,
            file.body.kind()
        )));
    };
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    let candidates: Vec<_> = m
        .strata
        .entries
        .iter()
        .filter(|e| e.subset == subset && e.lmhs.is_some() && degree.is_none_or(|d| d == e.degree))
        .collect();
    let entry = match candidates.as_slice() {
        [e] => *e,
        [] => {
            return Err(CliError::input(format!(
                "{}: no stratum {subset:?} with a limit{}",
                file.name,
                degree.map(|d| format!(" in degree {d}")).unwrap_or_default()
            )))
        }
        _ => return Err(CliError::input("several degrees carry a limit on this stratum; pass --degree")),
    };
    let h = entry.lmhs.as_ref().expect("filtered on lmhs");
    let inv = h.invariant_part(&subset);
    let complex = koszul_complex(&inv, &subset).map_err(|e| CliError::input(e.to_string()))?;
    let mut out = String::new();
    writeln!(out, "stratum {subset:?}, degree {}, r = {}", entry.degree, m.strata.r).unwrap();
    let dims: Vec<String> = complex.term_dims().iter().map(|d| d.to_string()).collect();
    writeln!(out, "terms: {}", dims.join(" ")).unwrap();
    for l in 0..complex.terms.len() {
        writeln!(out, "  slot {l}: summands {:?}", complex.summand_dims(l)).unwrap();
    }
    let ranks: Vec<String> = complex.ranks().iter().map(|r| r.to_string()).collect();
    writeln!(out, "ranks: {}", ranks.join(" ")).unwrap();
    let slots: Vec<usize> = match slot {
        Some(l) if l >= complex.terms.len() => {
            return Err(CliError::input(format!("slot {l} outside 0..{}", complex.terms.len())))
        }
        Some(l) => vec![l],
        None => (0..complex.terms.len()).collect(),
    };
    for l in slots {
        let h = complex.cohomology(l);
        writeln!(out, "IH^{l} = {h}  (dimension {})", h.mass()).unwrap();
    }
    Ok(Outcome { stdout: out, exit: Exit::Pass })
}
