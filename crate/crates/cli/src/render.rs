//! Text and JSON rendering of verification reports.

use ha2kit::VerificationReport;

/// Output format of reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn indices(ix: &[usize]) -> String {
    let parts: Vec<String> = ix.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Verdict line, per-family counts and failing residuals; every residual when `verbose`.
pub fn text(rep: &VerificationReport, verbose: bool) -> String {
    let failing = rep.checks.iter().filter(|c| !c.pass).count();
    let mut out = format!(
        "{}: {} ({} checks, {} failing, {:.1} ms)\n",
        rep.title,
        if rep.passed() { "PASS" } else { "FAIL" },
        rep.checks.len(),
        failing,
        rep.elapsed_ms
    );
    for w in &rep.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    for fam in rep.families() {
        let (ok, all) = rep
            .checks
            .iter()
            .filter(|c| c.equation_id == fam)
            .fold((0, 0), |(ok, all), c| (ok + c.pass as usize, all + 1));
        out.push_str(&format!("  {fam}: {ok}/{all} vanish\n"));
    }
    for c in rep.checks.iter().filter(|c| verbose || !c.pass) {
        out.push_str(&format!(
            "  {} {}{} = {}\n",
            if c.pass { "ok  " } else { "FAIL" },
            c.equation_id,
            indices(&c.indices),
            c.residual
        ));
    }
    out
}

/// The report serialized as pretty JSON.
pub fn json(rep: &VerificationReport) -> String {
    let mut s = serde_json::to_string_pretty(rep).expect("reports serialize");
    s.push('\n');
    s
}

/// Renders in the requested format.
pub fn render(rep: &VerificationReport, format: Format, verbose: bool) -> String {
    match format {
        Format::Text => text(rep, verbose),
        Format::Json => json(rep),
    }
}
