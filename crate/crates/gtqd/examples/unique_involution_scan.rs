//! Cross-theorem scan: for every 3-cocycle class on Z/4, Z/6, Z/8 and Q8,
//! quotient by the unique involution and compare modularity with the
//! 2-generator test (class order divisible by |2-Sylow|).
//!
//!     cargo run --release --example unique_involution_scan

use gtqd::config::RunConfig;
use gtqd::survey::{unique_involution_cross_check, UNIQUE_INVOLUTION_GROUPS};

fn main() {
    let config = RunConfig::default();
    let report = unique_involution_cross_check(&UNIQUE_INVOLUTION_GROUPS, &config, 5);
    println!(
        "{:<6} {:>5} {:>11} {:>7} {:>7} {:>6} {:>7}",
        "group", "class", "class-order", "2-gen", "exists", "mtc", "robust"
    );
    for r in &report.rows {
        println!(
            "{:<6} {:>5} {:>11} {:>7} {:>7} {:>6} {:>7}",
            r.group,
            r.class_index,
            r.class_order,
            r.two_generator,
            r.exists,
            r.is_mtc.map(|b| b.to_string()).unwrap_or_default(),
            r.robust.map(|b| b.to_string()).unwrap_or_default(),
        );
    }
    println!("\nall rows agree: {}", report.all_pass);
}
