//! Structure constants of a generalized double: D^omega(Z/2, Z/2) with the
//! nontrivial cocycle is the twisted dual group algebra — one coset, delta
//! product, associator given by omega.
//!
//!     cargo run --release --example generalized_double

use gtqd::cohomology::Cochain;
use gtqd::group::FiniteGroup;
use gtqd::quotient::{GeneralizedDouble, NuConvention, QuotientContext};

fn main() {
    let z2 = FiniteGroup::cyclic(2);
    let omega = Cochain::from_values(&z2, 3, 2, vec![1]);
    let ctx = QuotientContext::new(omega, 24).unwrap();
    let cert = ctx
        .check_quotient_exists(&[1], NuConvention::Divide, None)
        .unwrap()
        .certificate()
        .unwrap();
    println!("G = A = Z/2, nontrivial omega:");
    println!("  is_mtc: {} (the abelian cocycle is nondegenerate)", cert.is_modular);
    let gd = GeneralizedDouble::build(&ctx, &cert).unwrap();
    println!("  dimension |G|·|G/A| = {}", gd.dimension());
    for g in 0..2 {
        for h in 0..2 {
            match gd.product((g, 0), (h, 0)) {
                Some((e, (k, _))) => println!("  e_{g} · e_{h} = zeta^{e} e_{k}"),
                None => println!("  e_{g} · e_{h} = 0"),
            }
        }
    }
    println!("  associator exponent on (1,1,1): {}", ctx.double.associator_exponent(1, 1, 1));
}
