//! The untwisted double of Z/2: toric-code modular data.
//!
//! Four simple objects (vacuum, charge, flux, fermion), S with entries
//! ±1/2, T = diag(1, 1, 1, -1), and Z/2 × Z/2 fusion.
//!
//!     cargo run --release --example toric_code

use gtqd::cohomology::Cochain;
use gtqd::double::TwistedDouble;
use gtqd::group::FiniteGroup;
use gtqd::modular::{modular_data, SConvention};

fn main() {
    let z2 = FiniteGroup::cyclic(2);
    let omega = Cochain::zero(&z2, 3, 2);
    let double = TwistedDouble::new(omega).unwrap();
    let md = modular_data(&double, SConvention::Standard).unwrap();

    println!("rank: {}", md.rank());
    println!("modular: {}", md.modular);
    for (i, label) in md.labels.labels.iter().enumerate() {
        println!(
            "label {i}: flux {} (class size {}), degree {}, twist {}",
            label.class_rep, label.class_size, label.degree, md.t[i]
        );
    }
    println!("\nS =");
    for row in &md.s {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>6}")).collect();
        println!("  [{}]", cells.join(", "));
    }
    println!("\nfusion rules (i x j = k):");
    for &(i, j, k, n) in md.fusion.as_ref().unwrap() {
        if n == 1 && i <= j {
            println!("  {i} x {j} = {k}");
        }
    }
}
