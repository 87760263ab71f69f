//! Worked quotient: G = Z/4, A = {0, 2}, cyclic cocycles q = 1 and q = 2.
//!
//! For q = 1 the bicharacter is (2|2) = -1: the quotient is modular with a
//! rank-8 pointed category. For q = 2 it degenerates to +1. The certificate
//! carries the full tau/beta/nu tower; the generalized double is built
//! explicitly and its structure constants checked for well-definedness.
//!
//!     cargo run --release --example quotient_certificate

use gtqd::cohomology::cyclic_cocycle;
use gtqd::double::TwistedDouble;
use gtqd::group::FiniteGroup;
use gtqd::modular::{restricted_modular_data, SConvention};
use gtqd::quotient::{GeneralizedDouble, NuConvention, QuotientContext};

fn main() {
    let z4 = FiniteGroup::cyclic(4);
    for q in [1u64, 2] {
        let omega = cyclic_cocycle(&z4, q);
        let ctx = QuotientContext::new(omega.clone(), 24).unwrap();
        let cert = ctx
            .check_quotient_exists(&[2], NuConvention::Divide, None)
            .unwrap()
            .certificate()
            .expect("the quotient by the involution always exists here");
        println!("q = {q}:");
        println!("  tau_2 exponents (mod {}): {:?}", cert.lifted_modulus, cert.tau[&2]);
        println!("  nu(2) coordinates over the character group: {:?}", cert.nu[&2]);
        println!(
            "  (2|2) exponent {} of {} -> {}",
            cert.bicharacter_exponent(2, 2),
            cert.lifted_modulus,
            if cert.is_modular { "modular" } else { "degenerate" }
        );
        let gd = GeneralizedDouble::build(&ctx, &cert).unwrap();
        println!("  generalized double dimension: {}", gd.dimension());
        if cert.is_modular {
            let double = TwistedDouble::new(omega).unwrap();
            let md = restricted_modular_data(&double, &ctx, &cert, SConvention::Standard).unwrap();
            println!("  restricted modular data: rank {}, modular {}", md.rank(), md.modular);
        }
        println!();
    }
}
