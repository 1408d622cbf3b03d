//! Report rendering: human-readable text or machine-readable JSON.

use weakhopf::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

pub fn report_to_json(report: &Report) -> serde_json::Value {
    let checks: Vec<serde_json::Value> = report
        .checks
        .iter()
        .map(|c| {
            serde_json::json!({
                "id": c.id,
                "anchor": c.anchor,
                "pass": c.pass,
                "witness": c.witness.as_ref().map(|w| {
                    serde_json::json!({
                        "indices": w.indices,
                        "residual": w.residual.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    })
                }),
                "ms": c.millis,
            })
        })
        .collect();
    serde_json::json!({ "checks": checks, "pass": report.all_pass() })
}

pub fn print_report(report: &Report, format: ReportFormat) {
    match format {
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report_to_json(report)).expect("serializable")
            );
        }
        ReportFormat::Text => {
            for c in &report.checks {
                let verdict = if c.pass { "PASS" } else { "FAIL" };
                print!("[{verdict}] {} {} ({} ms)", c.id, c.anchor, c.millis);
                if let Some(w) = &c.witness {
                    let nonzero: Vec<String> = w
                        .residual
                        .iter()
                        .enumerate()
                        .filter(|(_, s)| !s.is_zero())
                        .take(4)
                        .map(|(i, s)| format!("[{i}]={s}"))
                        .collect();
                    print!(" witness at {:?}: {}", w.indices, nonzero.join(" "));
                }
                println!();
            }
        }
    }
}
