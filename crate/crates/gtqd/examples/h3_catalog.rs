//! Degree-3 cohomology of the catalog groups, with generator class orders.
//!
//! Capped at order 8 here to stay interactive; the library default cap is
//! 16 (dicyclic-12 takes a few minutes through the bar resolution).
//!
//!     cargo run --release --example h3_catalog

use gtqd::catalog;
use gtqd::cohomology::{class_order, h3};

fn main() {
    for name in catalog::names() {
        let group = catalog::by_name(name).unwrap();
        match h3(&group, group.order() as u64, 8) {
            Ok(result) => {
                let orders: Vec<u64> = result
                    .generators
                    .iter()
                    .map(|g| class_order(g).unwrap())
                    .collect();
                println!(
                    "{:<7} |G| = {:>2}: invariant factors {:?}, generator orders {:?}",
                    name,
                    group.order(),
                    result.invariant_factors,
                    orders
                );
            }
            Err(e) => println!("{:<7} |G| = {:>2}: skipped ({e})", name, group.order()),
        }
    }
}
