//! The quasi-affine parameter sweeps and offline OEIS lookups.
//!
//! Run with: cargo run --example oeis_sweep
//!
//! Lookups are served from the built-in fixtures (and the on-disk cache
//! named by TFRAC_OEIS_CACHE_DIR, if set); no network access happens here.

use tfrac_lab::oeis::{reproduce_table, sweep, OeisClient, SweepConfig};

fn main() {
    let first = sweep(&SweepConfig::first_sweep());
    let second = sweep(&SweepConfig::second_sweep());
    println!("first sweep:  {} tuples survive the filters", first.len());
    println!("second sweep: {} tuples survive the filters", second.len());

    // a few sequences from the 0/1 sweep
    println!("\nsample rows from the first sweep:");
    for (params, seq) in first.iter().take(4) {
        let terms: Vec<String> = seq.iter().take(8).map(|t| t.to_string()).collect();
        println!("  {params:?} -> {}", terms.join(", "));
    }

    // reproduce every published match offline
    println!("\nreplaying the published matches:");
    let client = OeisClient::offline_default();
    for row in reproduce_table(&client).unwrap() {
        println!(
            "  {} {:?} terms={} lookup={}  {}",
            row.a_number,
            row.params,
            if row.terms_match { "ok" } else { "MISMATCH" },
            if row.lookup_contains { "ok" } else { "MISS" },
            row.description
        );
    }
}
