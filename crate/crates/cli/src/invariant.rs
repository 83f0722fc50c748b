use clap::ValueEnum;
use tdtc_core::solvers::{self, InvariantResult};
use tdtc_core::verifiers::Universe;
use tdtc_core::{Graph, Result, SearchBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Invariant {
    #[value(name = "alpha")]
    Alpha,
    #[value(name = "chi")]
    Chi,
    #[value(name = "gamma_t")]
    GammaT,
    #[value(name = "chi_t_d")]
    ChiTD,
    #[value(name = "alpha_mix")]
    AlphaMix,
    #[value(name = "gamma_tm")]
    GammaTm,
    #[value(name = "chi_total")]
    ChiTotal,
    #[value(name = "chi_tt_d")]
    ChiTTD,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Alpha => "alpha",
            Invariant::Chi => "chi",
            Invariant::GammaT => "gamma_t",
            Invariant::ChiTD => "chi_t_d",
            Invariant::AlphaMix => "alpha_mix",
            Invariant::GammaTm => "gamma_tm",
            Invariant::ChiTotal => "chi_total",
            Invariant::ChiTTD => "chi_tt_d",
        }
    }

    /// Universe of the certificate.
    pub fn universe(self) -> Universe {
        match self {
            Invariant::AlphaMix | Invariant::GammaTm | Invariant::ChiTotal | Invariant::ChiTTD => Universe::Mixed,
            _ => Universe::Vertices,
        }
    }

    pub fn solve(self, g: &Graph, budget: SearchBudget) -> Result<InvariantResult> {
        Ok(match self {
            Invariant::Alpha => solvers::independence_number(g, budget),
            Invariant::Chi => solvers::chromatic_number(g, budget),
            Invariant::GammaT => solvers::total_domination_number(g, budget)?,
            Invariant::ChiTD => solvers::total_dominator_chromatic_number(g, budget)?,
            Invariant::AlphaMix => solvers::mixed_independence_number(g, budget),
            Invariant::GammaTm => solvers::total_mixed_domination_number(g, budget)?,
            Invariant::ChiTotal => solvers::total_chromatic_number(g, budget),
            Invariant::ChiTTD => solvers::tdtc_number(g, budget)?,
        })
    }
}
