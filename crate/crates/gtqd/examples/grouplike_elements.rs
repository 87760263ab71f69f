//! Central grouplike elements of the twisted double of Z/4.
//!
//! Every pair (character of G, element of Z^omega) contributes one central
//! grouplike; the coproduct and centrality identities are verified for each.
//!
//!     cargo run --release --example grouplike_elements

use gtqd::cohomology::cyclic_cocycle;
use gtqd::group::FiniteGroup;
use gtqd::quotient::QuotientContext;

fn main() {
    let z4 = FiniteGroup::cyclic(4);
    for q in 0..4 {
        let ctx = QuotientContext::new(cyclic_cocycle(&z4, q), 24).unwrap();
        let b = ctx.b_omega();
        let z = ctx.z_omega();
        let grouplikes = ctx.central_grouplikes();
        println!(
            "q = {q}: B^omega = {:?}, Z^omega = {:?}, |Gamma_0| = {}",
            b,
            z,
            grouplikes.len()
        );
    }
    let ctx = QuotientContext::new(cyclic_cocycle(&z4, 1), 24).unwrap();
    println!("\nq = 1 grouplike coefficient exponents (mod {}):", ctx.lifted_modulus);
    for u in ctx.central_grouplikes().iter().take(4) {
        println!("  g = {}, chi = {:?}: {:?}", u.g, u.char_coords, u.coeffs);
    }
}
