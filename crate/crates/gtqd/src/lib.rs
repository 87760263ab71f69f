//! gtqd — exact computation with twisted quantum doubles of finite groups.
//!
//! Given a finite group G, a normalized 3-cocycle ω on G valued in roots of
//! unity, and a central subgroup A, this crate
//!
//! * materializes the twisted double D^ω(G) (theta/gamma tables, product,
//!   coproduct, associator) and verifies its defining identities,
//! * decides whether the quotient D^ω(G, A) exists, producing an explicit
//!   certificate (the tau family, the beta 2-cocycle, a splitting nu, and
//!   the symmetric bicharacter on A whose nondegeneracy decides modularity),
//! * computes exact modular data (simple labels from projective characters
//!   of centralizers, S and T matrices over cyclotomic numbers, Verlinde
//!   fusion), with a brute-force braiding oracle as an independent check,
//! * builds discriminant-form input data from even lattices (section,
//!   alternating bicharacter, abelian 3-cocycle) and runs it through the
//!   same pipeline.
//!
//! Everything is exact: values live in ℤ/N exponent arithmetic or in
//! cyclotomic fields with rational coefficients. See the examples/ directory
//! for runnable walkthroughs of each capability, and the `gtqd` binary for a
//! batch CLI.

pub mod catalog;
pub mod cohomology;

pub mod config;
pub mod cyclo;
pub mod double;
pub mod group;
pub mod io;
pub mod lattice;


pub mod modn;
pub mod modular;
pub mod oracle;
pub mod projective;
pub mod quotient;
pub mod survey;





// re-exports are added as modules land

pub use cyclo::Cyclotomic;
pub use group::{FiniteGroup, GroupRef, Sylow2Type};


