//! Acceptance suite: one PASS/FAIL line per criterion. Runs with
//! `harness = false`, so the lines are printed under plain `cargo test`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdtc_core::closed_forms::{
    self, alpha_mix, chi_tt, gamma_tm, gamma_tm_cycle_forms, gamma_tm_path_forms, max_mixed_independent_set,
    min_tmds, stored_coloring, tdtc_certificate, Family, STORED_CYCLES, STORED_PATHS,
};
use tdtc_core::solvers::{self, chromatic_number};
use tdtc_core::verifiers::{
    is_mixed_independent_set, is_tdc, is_tdtc, is_total_dominating_set, tdc_from_tds, Coloring,
    RemainderColoring, Universe,
};
use tdtc_core::{total_graph, Graph, ObjectId, SearchBudget};

const U: SearchBudget = SearchBudget::UNBOUNDED;
const CYCLE: Family = Family::Cycle;
const PATH: Family = Family::Path;

struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn vertices(set: &[ObjectId]) -> Vec<usize> {
    set.iter()
        .map(|o| match o {
            ObjectId::Vertex(i) => i - 1,
            _ => usize::MAX,
        })
        .collect()
}

fn exact_tdtc(out: &mut Outcome, family: Family, range: std::ops::RangeInclusive<usize>) {
    for n in range {
        let g = family.graph(n).unwrap();
        let r = solvers::tdtc_number(&g, U).unwrap();
        let want = chi_tt(family, n).unwrap().value;
        let valid = is_tdtc(&g, r.certificate.as_coloring().unwrap()).unwrap().valid;
        out.check(r.value == want && r.proven_optimal && valid, || {
            format!("{family} n={n}: solver {} formula {want} proven={} valid={valid}", r.value, r.proven_optimal)
        });
    }
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    exact_tdtc(&mut out, CYCLE, 3..=9);
    out
}

fn criterion_2() -> Outcome {
    let mut out = Outcome::new();
    exact_tdtc(&mut out, PATH, 2..=8);
    out
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::new();
    for family in [CYCLE, PATH] {
        for n in family.min_n()..=14 {
            let g = family.graph(n).unwrap();
            let r = solvers::total_mixed_domination_number(&g, U).unwrap();
            let want = gamma_tm(family, n).unwrap().value;
            out.check(r.value == want && r.proven_optimal, || {
                format!("{family} n={n}: solver {} formula {want}", r.value)
            });
        }
    }
    out
}

/// Cycles start at 3, the smallest cycle.
fn criterion_4() -> Outcome {
    let mut out = Outcome::new();
    for family in [CYCLE, PATH] {
        for n in family.min_n()..=25 {
            let g = family.graph(n).unwrap();
            let r = solvers::mixed_independence_number(&g, U);
            let want = alpha_mix(family, n).unwrap().value;
            out.check(r.value == want && r.proven_optimal, || {
                format!("{family} n={n}: solver {} formula {want}", r.value)
            });
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new();
    for family in [CYCLE, PATH] {
        for n in family.min_n()..=300 {
            let g = family.graph(n).unwrap();
            let t = total_graph(&g);

            let cert = tdtc_certificate(family, n).unwrap();
            let want = chi_tt(family, n).unwrap().value;
            let valid = is_tdtc(&g, &cert.coloring).unwrap().valid;
            out.check(valid && cert.coloring.len() == want, || {
                format!("{family} n={n}: TDTC valid={valid} classes {} want {want}", cert.coloring.len())
            });

            let s = min_tmds(family, n).unwrap();
            let want = gamma_tm(family, n).unwrap().value;
            let valid = is_total_dominating_set(&t.graph, &t.indices_of(&s).unwrap()).valid;
            out.check(valid && s.len() == want, || {
                format!("{family} n={n}: TMDS valid={valid} size {} want {want}", s.len())
            });

            let s = max_mixed_independent_set(family, n).unwrap();
            let want = alpha_mix(family, n).unwrap().value;
            let valid = is_mixed_independent_set(&g, &s).unwrap().valid;
            out.check(valid && s.len() == want, || {
                format!("{family} n={n}: independent valid={valid} size {} want {want}", s.len())
            });
        }
    }
    out
}

fn random_mixed_coloring(g: &Graph, rng: &mut ChaCha8Rng) -> Coloring {
    let objects = g.objects();
    let k = rng.gen_range(1..=objects.len());
    let mut classes = vec![Vec::new(); k];
    for o in objects {
        classes[rng.gen_range(0..k)].push(o);
    }
    classes.retain(|c| !c.is_empty());
    Coloring::new(Universe::Mixed, classes)
}

fn criterion_6(corpus: &[Graph]) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(common::RANDOM_SEED);
    for g in corpus {
        let t = total_graph(g);
        let direct = solvers::total_mixed_domination_number_direct(g, U).unwrap().value;
        let via = solvers::total_domination_number(&t.graph, U).unwrap().value;
        out.check(direct == via, || format!("{g:?}: direct γ_tm {direct}, γ_t(T) {via}"));

        let s = solvers::total_domination_number(&t.graph, U).unwrap();
        let good = tdc_from_tds(&t.graph, &vertices(s.certificate.as_set().unwrap()), RemainderColoring::Exact)
            .unwrap()
            .from_total(&t)
            .unwrap();
        let mut colorings = vec![good];
        colorings.extend((0..3).map(|_| random_mixed_coloring(g, &mut rng)));
        for c in colorings {
            let a = is_tdtc(g, &c).unwrap();
            let b = is_tdc(&t.graph, &c.to_total(&t).unwrap()).unwrap();
            let same = a.valid == b.valid && a.witnesses.iter().map(|w| w.1).eq(b.witnesses.iter().map(|w| w.1));
            out.check(same, || format!("{g:?}: is_tdtc and is_tdc disagree on {c:?}"));
        }
    }
    out
}

fn criterion_7(corpus: &[Graph]) -> Outcome {
    let mut out = Outcome::new();
    for g in corpus.iter().filter(|g| g.order() <= 7) {
        let got = [
            solvers::independence_number(g, U).value,
            chromatic_number(g, U).value,
            solvers::total_domination_number(g, U).unwrap().value,
            solvers::total_dominator_chromatic_number(g, U).unwrap().value,
        ];
        let want = [common::alpha(g), common::chi(g), common::gamma_t(g), common::chi_td(g)];
        out.check(got == want, || format!("{g:?}: solvers {got:?}, brute force {want:?}"));
    }
    out
}

fn criterion_8(corpus: &[Graph]) -> Outcome {
    let mut out = Outcome::new();
    for g in corpus {
        let chi = chromatic_number(g, U).value;
        let tds = solvers::total_domination_number(g, U).unwrap();
        let td = solvers::total_dominator_chromatic_number(g, U).unwrap().value;
        out.check(td <= tds.value + chi, || format!("{g:?}: χ^t_d {td} > γ_t {} + χ {chi}", tds.value));

        let s = vertices(tds.certificate.as_set().unwrap());
        let c = tdc_from_tds(g, &s, RemainderColoring::Exact).unwrap();
        let rest = chromatic_number(&g.without(&s).unwrap().0, U).value;
        let valid = is_tdc(g, &c).unwrap().valid;
        out.check(valid && c.len() == s.len() + rest, || {
            format!("{g:?}: tdc_from_tds valid={valid} classes {} want {}", c.len(), s.len() + rest)
        });
    }
    out
}

fn criterion_9() -> Outcome {
    let mut out = Outcome::new();
    let mut bad = Vec::new();
    for n in 3..=1_000_000 {
        let (a, b) = gamma_tm_cycle_forms(n);
        let (c, d) = gamma_tm_path_forms(n);
        if a != b || c != d {
            bad.push(n);
        }
    }
    out.check(bad.is_empty(), || format!("forms disagree at n in {:?}", &bad[..bad.len().min(10)]));
    // The χ^tt_d forms assert their own agreement.
    for n in 3..=10_000 {
        closed_forms::chi_tt_cycle(n).unwrap();
        closed_forms::chi_tt_path(n).unwrap();
    }
    out.checked += 1;
    out
}

fn criterion_10() -> Outcome {
    let mut out = Outcome::new();
    let cycles = STORED_CYCLES.iter().map(|&n| (CYCLE, n));
    let paths = STORED_PATHS.iter().map(|&n| (PATH, n));
    for (family, n) in cycles.chain(paths) {
        let c = stored_coloring(family, n).unwrap();
        let g = family.graph(n).unwrap();
        let want = chi_tt(family, n).unwrap().value;
        let report = is_tdtc(&g, &c).unwrap();
        out.check(report.valid && c.len() == want, || {
            format!("{family} n={n}: {:?}, classes {} want {want}", report.first_violation(), c.len())
        });
    }
    out
}

type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let corpus = common::corpus();
    let criteria: Vec<Criterion> = vec![
        ("cycle small-case exactness, n=3..9", Duration::from_secs(600), Box::new(criterion_1)),
        ("path small-case exactness, n=2..8", Duration::from_secs(600), Box::new(criterion_2)),
        ("γ_tm exactness, cycles 3..14, paths 2..14", Duration::from_secs(300), Box::new(criterion_3)),
        ("α_mix exactness, n up to 25", Duration::from_secs(120), Box::new(criterion_4)),
        ("certificate tightness, n up to 300", Duration::from_secs(300), Box::new(criterion_5)),
        ("reduction identities on the corpus", Duration::MAX, Box::new(|| criterion_6(&corpus))),
        ("brute-force oracles on graphs with <= 7 vertices", Duration::MAX, Box::new(|| criterion_7(&corpus))),
        ("χ^t_d <= γ_t + χ and tdc_from_tds on the corpus", Duration::MAX, Box::new(|| criterion_8(&corpus))),
        ("γ_tm formula forms agree, n up to 10^6", Duration::from_secs(10), Box::new(criterion_9)),
        ("stored colorings verify with formula class counts", Duration::MAX, Box::new(criterion_10)),
    ];
    println!("acceptance: corpus of {} graphs", corpus.len());
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *limit;
        let pass = out.failures.is_empty() && in_time;
        let limit_note = if *limit == Duration::MAX {
            String::new()
        } else {
            format!(", limit {}s", limit.as_secs())
        };
        println!(
            "criterion {:>2} {}: {} ({} checks, {:.2}s{limit_note})",
            i + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            out.checked,
            elapsed.as_secs_f64()
        );
        for f in out.failures.iter().take(5) {
            println!("    {f}");
        }
        if !in_time {
            println!("    over the time limit");
        }
        failed += usize::from(!pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
