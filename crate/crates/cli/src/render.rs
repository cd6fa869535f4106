//! Text and JSON renderings of suite reports.
//!
//! The JSON form is `SuiteReport` serialized with keys in declaration
//! order: `suite`, `input`, `sections` (each `subject` and `checks`, each
//! check `id`, `passed` and optionally `detail` and `witness` with
//! `indices`, `expected`, `actual`) and `wall_time_seconds`.

use hopf_trace::report::SuiteReport;

pub fn json(report: &SuiteReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<SuiteReport, serde_json::Error> {
    serde_json::from_str(text)
}

/// An aligned table, one row per section, with failing checks listed under
/// their section.
pub fn text(report: &SuiteReport) -> String {
    let rows: Vec<(String, String, &str)> = report
        .sections
        .iter()
        .map(|s| {
            let ok = s.checks.iter().filter(|c| c.passed).count();
            let status = if s.passed() { "PASS" } else { "FAIL" };
            (status.to_string(), format!("{ok}/{}", s.checks.len()), s.subject.as_str())
        })
        .collect();
    let width = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max("checks".len());
    let mut out = format!("suite {} on {}\n", report.suite, report.input);
    out.push_str(&format!("{:<6}  {:>width$}  section\n", "status", "checks"));
    for (section, (status, count, subject)) in report.sections.iter().zip(&rows) {
        out.push_str(&format!("{status:<6}  {count:>width$}  {subject}\n"));
        for c in section.failures() {
            out.push_str(&format!("{:<6}  {:>width$}    ✗ {}", "", "", c.id));
            if let Some(d) = &c.detail {
                out.push_str(&format!(": {d}"));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!(" at {:?}: expected {}, got {}", w.indices, w.expected, w.actual));
            }
            out.push('\n');
        }
    }
    let (ok, total) = report.counts();
    out.push_str(&format!(
        "{ok}/{total} checks passed in {} sections ({:.2}s): {}\n",
        report.sections.len(),
        report.wall_time_seconds,
        if report.passed() { "PASS" } else { "FAIL" }
    ));
    out
}
