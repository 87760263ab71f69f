//! Dual-route check of the S-matrix: closed-form character sums against
//! the explicit matrix oracle (induced regular modules, idempotent
//! projectors, double braiding traces), for every cocycle class on Z/4.
//!
//!     cargo run --release --example braiding_oracle_check

use gtqd::cohomology::{h3, DEFAULT_H3_CAP};
use gtqd::double::TwistedDouble;
use gtqd::group::FiniteGroup;
use gtqd::modular::{modular_data, SConvention};
use gtqd::oracle::{braiding_oracle_matrix, verify_r_matrix, DEFAULT_ORACLE_CAP};

fn main() {
    let z4 = FiniteGroup::cyclic(4);
    let classes = h3(&z4, 4, DEFAULT_H3_CAP).unwrap();
    for (k, omega) in classes.class_representatives().into_iter().enumerate() {
        let double = TwistedDouble::new(omega).unwrap();
        assert_eq!(verify_r_matrix(&double), None, "R must commute with the coproduct");
        let md = modular_data(&double, SConvention::Standard).unwrap();
        let oracle =
            braiding_oracle_matrix(&double, &md.labels, SConvention::Standard, DEFAULT_ORACLE_CAP)
                .unwrap();
        let agree = (0..md.rank())
            .all(|i| (0..md.rank()).all(|j| oracle[i][j].eq_value(&md.s_unnormalized[i][j])));
        println!(
            "class {k}: rank {:>2}, R-matrix ok, oracle agreement: {}",
            md.rank(),
            agree
        );
        assert!(agree);
    }
}
