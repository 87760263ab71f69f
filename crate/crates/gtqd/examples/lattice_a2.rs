//! The A2 root lattice: discriminant group Z/3 and a rank-3 MTC.
//!
//! The displayed 3-cocycle is valued in ±1, hence cohomologically trivial
//! on a group of odd order — the discriminant form lives entirely in the
//! canonical tau/nu witnesses, whose bicharacter is the inverse linking
//! form. Also demonstrates cohomology-class independence of the section
//! and bicharacter choices.
//!
//!     cargo run --release --example lattice_a2

use gtqd::cohomology::class_order;
use gtqd::lattice::*;

fn main() {
    let gram = vec![vec![2, 1], vec![1, 2]];
    let p = lattice_pipeline(gram.clone()).unwrap();
    println!("discriminant group: Z/{}", p.data.group.order());
    println!("class order of omega: {}", class_order(&p.omega).unwrap());
    println!("is_mtc: {} (rank {})", p.certificate.is_modular, p.modular.rank());
    println!("fusion group invariants: {:?}", fusion_group_invariants(&p.modular));

    // independence of the choices
    let lattice = EvenLattice::new(gram).unwrap();
    let base = lattice_cocycle(&discriminant_group(&lattice), &build_c0(&lattice, 0).unwrap());
    let shifted = discriminant_group_with_shift(&lattice, Some(&[1, 1]));
    let other = lattice_cocycle(&shifted, &build_c0(&lattice, 0).unwrap());
    println!(
        "shifted section gives a cohomologous cocycle: {}",
        class_independence_check(&base, &other)
    );
}
