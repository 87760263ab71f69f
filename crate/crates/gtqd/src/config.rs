//! Run configuration: size caps and convention flags shared by the CLI and
//! batch entry points.

use crate::modular::SConvention;
use crate::quotient::NuConvention;

#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// largest group order accepted anywhere
    pub group_order: usize,
    /// largest order for full H³ computation
    pub cohomology: usize,
    /// largest order for coboundary solving (quotient certificates)
    pub coboundary: usize,
    /// largest order for the brute-force braiding oracle
    pub oracle: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group_order: crate::catalog::DEFAULT_GROUP_CAP,
            cohomology: crate::cohomology::DEFAULT_H3_CAP,
            coboundary: crate::quotient::DEFAULT_COBOUNDARY_CAP,
            oracle: crate::oracle::DEFAULT_ORACLE_CAP,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<(), String> {
        if self.group_order == 0 || self.cohomology == 0 || self.coboundary == 0 || self.oracle == 0
        {
            return Err("caps must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Conventions {
    pub nu: NuConvention,
    pub s: SConvention,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunConfig {
    pub caps: Caps,
    pub conventions: Conventions,
    pub seed: u64,
}
