//! Sweep the main inequality over every labeled 3-connected graph on 4, 5,
//! and 6 vertices. The n = 7 catalog (225,096 graphs) runs in seconds too;
//! pass `7` as an argument to include it.
//!
//! Run with: cargo run --example exhaustive_sweep [-- 7]

use lambda_lab::report::{sweep_exhaustive, AnalyzeOptions};

fn main() -> lambda_lab::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let opts = AnalyzeOptions {
        summary_only: true,
        ..Default::default()
    };
    println!(
        "{:>2} {:>9} {:>9} {:>10} {:>6} {:>9} {:>9}",
        "n", "graphs", "verified", "violations", "tight", "min slack", "max slack"
    );
    for n in 4..=max_n.clamp(4, 7) {
        let out = sweep_exhaustive(n, &opts)?;
        let s = &out.report.summary;
        println!(
            "{:>2} {:>9} {:>9} {:>10} {:>6} {:>9} {:>9}",
            n,
            s.count,
            s.verified,
            s.violations,
            s.tight,
            s.min_slack.unwrap_or(0),
            s.max_slack.unwrap_or(0)
        );
        assert!(out.counterexamples.is_empty());
    }
    Ok(())
}
