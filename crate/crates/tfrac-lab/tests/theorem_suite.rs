//! The identity suite at default orders is the primary regression gate:
//! every named result must pass.

use tfrac_lab::verify::verify_all;

#[test]
fn every_identity_passes_at_default_order() {
    let reports = verify_all();
    for report in &reports {
        println!(
            "{} {} orders={:?} ({} ms)",
            if report.pass { "PASS" } else { "FAIL" },
            report.id,
            report.orders_checked,
            report.wall_ms
        );
    }
    let failures: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    assert!(failures.is_empty(), "failing identities: {failures:?}");
}
