//! Run the whole identity suite at default orders and print one line per
//! result.
//!
//! Run with: cargo run --release --example verify_theorems

use tfrac_lab::verify::verify_all;

fn main() {
    let start = std::time::Instant::now();
    let mut failures = 0;
    for report in verify_all() {
        println!(
            "{} {:<26} orders {:?} ({} ms){}",
            if report.pass { "PASS" } else { "FAIL" },
            report.id,
            report.orders_checked,
            report.wall_ms,
            report
                .detail
                .as_deref()
                .map(|d| format!(" — {d}"))
                .unwrap_or_default()
        );
        if !report.pass {
            failures += 1;
        }
    }
    println!("total wall time: {:.2?}", start.elapsed());
    if failures > 0 {
        eprintln!("{failures} identities failed");
        std::process::exit(1);
    }
}
