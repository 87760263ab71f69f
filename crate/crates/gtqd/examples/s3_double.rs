//! The untwisted double of S3: the smallest nonabelian example, rank 8.
//!
//!     cargo run --release --example s3_double

use gtqd::catalog;
use gtqd::cohomology::Cochain;
use gtqd::double::TwistedDouble;
use gtqd::modular::{modular_data, SConvention};

fn main() {
    let s3 = catalog::by_name("s3").unwrap();
    let omega = Cochain::zero(&s3, 3, 6);
    let double = TwistedDouble::new(omega).unwrap();
    let md = modular_data(&double, SConvention::Standard).unwrap();

    println!("rank: {} (3 + 2 + 3 over the three classes)", md.rank());
    println!("quantum dimensions: {:?}", md.dims());
    println!("all modular axioms pass: {}", md.axioms.all_pass());
    println!("\nlabels (class rep, degree, twist):");
    for (i, l) in md.labels.labels.iter().enumerate() {
        println!("  {i}: rep {} deg {} twist {}", l.class_rep, l.degree, md.t[i]);
    }
    let fusion = md.fusion.as_ref().unwrap();
    println!("\nnonzero fusion coefficients: {}", fusion.len());
    // the two 3-dimensional dyons fuse with multiplicities
    let max_n = fusion.iter().map(|&(_, _, _, n)| n).max().unwrap();
    println!("largest fusion multiplicity: {max_n}");
}
