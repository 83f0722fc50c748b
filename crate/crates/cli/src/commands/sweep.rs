use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use serde::Serialize;
use tdtc_core::closed_forms::{self, Family};
use tdtc_core::verifiers::{is_mixed_independent_set, is_tdtc, is_total_mixed_dominating_set};
use tdtc_core::{solvers, SearchBudget};

use crate::exit::{CliError, CliResult, FAILED, OK};
use crate::source::{emit, parse_family, BudgetArgs};
use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyInvariant {
    #[value(name = "chi_tt_d")]
    ChiTTD,
    #[value(name = "gamma_tm")]
    GammaTm,
    #[value(name = "alpha_mix")]
    AlphaMix,
}

impl FamilyInvariant {
    /// Largest n solved exactly when `--exact-up-to` is not given.
    fn default_exact_limit(self, family: Family) -> usize {
        match (self, family) {
            (FamilyInvariant::ChiTTD, Family::Cycle) => 9,
            (FamilyInvariant::ChiTTD, Family::Path) => 8,
            (FamilyInvariant::GammaTm, _) => 14,
            (FamilyInvariant::AlphaMix, _) => 25,
        }
    }
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    #[arg(long, value_enum, default_value_t = FamilyInvariant::ChiTTD)]
    invariant: FamilyInvariant,
    /// Run the exact solver for n up to this bound (0 disables it).
    /// Defaults: chi_tt_d 9 on cycles and 8 on paths, gamma_tm 14, alpha_mix 25.
    #[arg(long)]
    exact_up_to: Option<usize>,
    /// Build and verify the closed-form certificate for every row.
    #[arg(long)]
    certify: bool,
    /// Fill the elapsed_ms column (breaks byte-for-byte reproducibility).
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct SweepRow {
    family: Family,
    n: usize,
    formula_value: usize,
    solver_value: Option<usize>,
    certificate_classes: Option<usize>,
    agree: bool,
    status: &'static str,
    elapsed_ms: Option<String>,
}

pub fn run(args: SweepArgs) -> CliResult {
    if args.from < args.family.min_n() || args.from > args.to {
        return Err(CliError::new(
            crate::exit::DOMAIN,
            format!("need {} <= --from <= --to for {}", args.family.min_n(), args.family),
        ));
    }
    if !matches!(args.format, Format::Csv | Format::Json) {
        return Err(CliError::usage("sweep supports --format csv or json"));
    }
    let budget = args.budget.budget()?;
    let limit = args
        .exact_up_to
        .unwrap_or_else(|| args.invariant.default_exact_limit(args.family));
    let rows = (args.from..=args.to)
        .map(|n| row(&args, n, n <= limit, budget))
        .collect::<CliResult<Vec<_>>>()?;
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("json") + "\n",
        _ => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).expect("csv row");
            }
            String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8")
        }
    };
    emit(args.out.as_ref(), &text)?;
    Ok(if rows.iter().all(|r| r.agree) { OK } else { FAILED })
}

fn row(args: &SweepArgs, n: usize, exact: bool, budget: SearchBudget) -> CliResult<SweepRow> {
    let family = args.family;
    let start = Instant::now();
    let formula = match args.invariant {
        FamilyInvariant::ChiTTD => closed_forms::chi_tt(family, n)?,
        FamilyInvariant::GammaTm => closed_forms::gamma_tm(family, n)?,
        FamilyInvariant::AlphaMix => closed_forms::alpha_mix(family, n)?,
    }
    .value;
    let g = family.graph(n)?;
    let mut status = "formula-only";
    let mut solver_value = None;
    if exact {
        let r = match args.invariant {
            FamilyInvariant::ChiTTD => solvers::tdtc_number(&g, budget)?,
            FamilyInvariant::GammaTm => solvers::total_mixed_domination_number(&g, budget)?,
            FamilyInvariant::AlphaMix => solvers::mixed_independence_number(&g, budget),
        };
        if r.proven_optimal {
            status = "exact";
            solver_value = Some(r.value);
        } else {
            status = "budget-exhausted";
        }
    }
    let certificate_classes = if args.certify {
        let (size, valid) = match args.invariant {
            FamilyInvariant::ChiTTD => {
                let c = closed_forms::tdtc_certificate(family, n)?.coloring;
                (c.len(), is_tdtc(&g, &c)?.valid)
            }
            FamilyInvariant::GammaTm => {
                let s = closed_forms::min_tmds(family, n)?;
                (s.len(), is_total_mixed_dominating_set(&g, &s)?.valid)
            }
            FamilyInvariant::AlphaMix => {
                let s = closed_forms::max_mixed_independent_set(family, n)?;
                (s.len(), is_mixed_independent_set(&g, &s)?.valid)
            }
        };
        if !valid {
            status = "invalid-certificate";
        }
        valid.then_some(size)
    } else {
        None
    };
    let agree = status != "invalid-certificate"
        && solver_value.is_none_or(|v| v == formula)
        && certificate_classes.is_none_or(|c| c == formula);
    Ok(SweepRow {
        family,
        n,
        formula_value: formula,
        solver_value,
        certificate_classes,
        agree,
        status,
        elapsed_ms: args
            .timings
            .then(|| format!("{:.3}", start.elapsed().as_secs_f64() * 1e3)),
    })
}
