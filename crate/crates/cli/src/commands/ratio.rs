use std::path::PathBuf;

use clap::Args;
use serde::Serialize;
use tdtc_core::closed_forms::Family;
use tdtc_core::solvers;

use crate::exit::{CliError, CliResult, DOMAIN, OK};
use crate::source::{emit, parse_family, BudgetArgs};
use crate::Format;

#[derive(Args, Debug)]
pub struct RatioArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct RatioRow {
    family: Family,
    n: usize,
    chi_tt_d: Option<usize>,
    chi_t_d: Option<usize>,
    ratio: Option<String>,
    note: &'static str,
}

/// `χ^tt_d(G) / χ^t_d(G)`, both solved exactly; rows whose search runs out
/// of budget are kept with empty values and a note.
pub fn run(args: RatioArgs) -> CliResult {
    if args.from < args.family.min_n() || args.from > args.to {
        return Err(CliError::new(
            DOMAIN,
            format!("need {} <= --from <= --to for {}", args.family.min_n(), args.family),
        ));
    }
    if !matches!(args.format, Format::Csv | Format::Json) {
        return Err(CliError::usage("ratio supports --format csv or json"));
    }
    let budget = args.budget.budget()?;
    let mut rows = Vec::new();
    for n in args.from..=args.to {
        let g = args.family.graph(n)?;
        let tt = solvers::tdtc_number(&g, budget)?;
        let t = solvers::total_dominator_chromatic_number(&g, budget)?;
        rows.push(if tt.proven_optimal && t.proven_optimal {
            RatioRow {
                family: args.family,
                n,
                chi_tt_d: Some(tt.value),
                chi_t_d: Some(t.value),
                ratio: Some(format!("{:.4}", tt.value as f64 / t.value as f64)),
                note: "",
            }
        } else {
            RatioRow {
                family: args.family,
                n,
                chi_tt_d: None,
                chi_t_d: None,
                ratio: None,
                note: "budget exhausted",
            }
        });
    }
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
    Ok(OK)
}
