//! Named constructions, random families and JSON persistence.

mod io;
mod named;
mod random;
mod setcover;

use serde::{Deserialize, Serialize};

pub use io::{load_instance, load_realization, parse_json, read_file, save_instance, save_realization, write_file};
pub use named::{default_eps, gen_fig1, gen_thm21, gen_thm22};
pub use random::{
    gen_random_disjoint, gen_random_mincover, gen_random_minset, random_rhs, RandomDisjoint, RandomMinCover,
    RandomMinSet,
};
pub use setcover::{default_reduction_params, gen_setcover_reduction, SetCoverSource};

use crate::error::Result;
use crate::model::{Instance, Realization};
use crate::rational::Rational;

/// A generator family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorParams {
    Fig1,
    Thm21 { n: usize, tau: Rational, eps: Rational },
    Thm22 { n: usize, tau: Rational, eps: Rational },
    SetCoverReduction { source: SetCoverSource, w_r: Rational, delta: Rational, eps: Rational },
    RandomMinSet(RandomMinSet),
    RandomDisjoint(RandomDisjoint),
    RandomMinCover(RandomMinCover),
}

impl GeneratorParams {
    /// Builds the instance, plus the intended realization for constructions that have one.
    pub fn generate(&self) -> Result<(Instance, Option<Realization>)> {
        Ok(match self {
            GeneratorParams::Fig1 => {
                let (i, r) = gen_fig1();
                (i, Some(r))
            }
            GeneratorParams::Thm21 { n, tau, eps } => (gen_thm21(*n, tau, eps)?, None),
            GeneratorParams::Thm22 { n, tau, eps } => (gen_thm22(*n, tau, eps)?, None),
            GeneratorParams::SetCoverReduction { source, w_r, delta, eps } => {
                let (i, r) = gen_setcover_reduction(source, w_r, delta, eps)?;
                (i, Some(r))
            }
            GeneratorParams::RandomMinSet(p) => (gen_random_minset(p)?, None),
            GeneratorParams::RandomDisjoint(p) => (gen_random_disjoint(p)?, None),
            GeneratorParams::RandomMinCover(p) => (gen_random_mincover(p)?, None),
        })
    }
}
