use serde::{Deserialize, Serialize};

use super::exact::effective_demands;
use crate::covering::{offline_gamma, online_gamma};
use crate::error::Result;
use crate::model::{Instance, Kind, Realization};
use crate::rational::Rational;

/// `⌈ln x⌉`, and 0 for `x ≤ 1`.
pub fn ceil_ln(x: &Rational) -> u32 {
    if *x <= Rational::one() {
        return 0;
    }
    x.to_f64().ln().ceil() as u32
}

/// Greedy approximation factors of an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub gamma_online: Option<Rational>,
    pub gamma_offline: Option<Rational>,
    /// `⌈ln(γ·m·max b_S)⌉ + ⌈ln m⌉` at the offline `γ`, with `b_S = w* − L_S` (needs a realization).
    pub grset: Option<u32>,
    /// The same quantity at the online `γ`, comparable with `grsetu`.
    pub grset_online: Option<u32>,
    /// Realization-free bound at the online `γ`: `max U_S − min L_S` in place of `max b_S`, or
    /// the largest right-hand side for fixed demands.
    pub grsetu: Option<u32>,
    /// Multicover factor `⌈ln(γ·|elements|·max b_e)⌉ + ⌈ln |elements|⌉`.
    pub rho_prime: Option<u32>,
}

fn factor(gamma: &Rational, m: usize, max_demand: &Rational) -> u32 {
    let m_r = Rational::from(m);
    ceil_ln(&(gamma * &m_r * max_demand)) + ceil_ln(&m_r)
}

pub fn bounds(instance: &Instance, realization: Option<&Realization>) -> Result<BoundReport> {
    let m = instance.n_constraints();
    let gamma_online = online_gamma(instance).ok();
    let gamma_offline = realization.and_then(|r| offline_gamma(instance, r).ok());
    let realized_max = realization.map(|r| effective_demands(instance, r).into_iter().max().unwrap_or_default());
    let grset = match (&gamma_offline, &realized_max) {
        (Some(g), Some(b)) => Some(factor(g, m, b)),
        _ => None,
    };
    let grset_online = match (&gamma_online, &realized_max) {
        (Some(g), Some(b)) => Some(factor(g, m, b)),
        _ => None,
    };
    let prior_max = match instance.kind() {
        Kind::MinSet => {
            let hi = (0..m).map(|s| instance.set_upper(s)).max().unwrap_or_default();
            let lo = (0..m).map(|s| instance.set_lower(s)).min().unwrap_or_default();
            (hi - lo).pos()
        }
        _ => instance.rhs().iter().max().cloned().unwrap_or_default(),
    };
    let grsetu = gamma_online.as_ref().map(|g| factor(g, m, &prior_max));
    let rho_prime = match instance.kind() {
        Kind::MinCover => grsetu,
        _ => None,
    };
    Ok(BoundReport { gamma_online, gamma_offline, grset, grset_online, grsetu, rho_prime })
}
