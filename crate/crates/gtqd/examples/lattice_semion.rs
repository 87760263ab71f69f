//! The discriminant form of the gram-[2] root lattice: the semion.
//!
//! The two cosets of the lattice in its dual give A = Z/2; the pipeline
//! produces a rank-2 MTC with S = (1/sqrt 2)[[1,1],[1,-1]] and a twist of
//! order 4.
//!
//!     cargo run --release --example lattice_semion

use gtqd::lattice::lattice_pipeline;

fn main() {
    let p = lattice_pipeline(vec![vec![2]]).unwrap();
    println!("discriminant group: Z/{}", p.data.group.order());
    println!("section of the nonzero coset: {:?}", p.data.section[1]);
    println!("omega(1,1,1) exponent: {} (mod {})", p.omega.eval(&[1, 1, 1]), p.omega.modulus());
    println!(
        "bicharacter (1|1) exponent: {} (mod {})",
        p.certificate.bicharacter_exponent(1, 1),
        p.certificate.lifted_modulus
    );
    println!("modular: {}", p.modular.modular);
    println!("twists: {:?}", p.modular.t.iter().map(|t| t.to_string()).collect::<Vec<_>>());
    println!("S =");
    for row in &p.modular.s {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }
}
