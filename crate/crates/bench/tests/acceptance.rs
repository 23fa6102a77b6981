//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use spectrum_bench::{run_bench, BenchConfig, Decimal, ExperimentRow, Parameter, Problem};
use spectrum_core::bounds::{
    csc_bound, csc_bound_report, csc_precondition, csc_threshold_floor, generalized_gcd, inf_norm, tsc_bound,
};
use spectrum_core::generate::{gen_er_graph, named_graph};
use spectrum_core::interference::{potential_interference, vertex_interferences};
use spectrum_core::oracle::{exact_csc, exact_tsc, DEFAULT_CAP};
use spectrum_core::rational::{frac, int, to_f64};
use spectrum_core::solvers::{balanced_coloring, csc_dsatur, tsc_dsatur, TieBreak};
use spectrum_core::{Graph, Rational, RngSeed, Spectrum, Strategy};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

/// Collects violations; passes when there are none.
#[derive(Default)]
struct Violations(Vec<String>);

impl Violations {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn outcome(self, summary: String) -> Outcome {
        if self.0.is_empty() {
            Outcome::new(true, summary)
        } else {
            let shown: Vec<_> = self.0.iter().take(8).cloned().collect();
            Outcome::new(false, format!("{summary}; {} violation(s): {}", self.0.len(), shown.join(" | ")))
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn case_study() -> Outcome {
    let paw = named_graph("paw").unwrap();
    let (tsc, tsc_time) = timed(|| exact_tsc(&paw, &Spectrum::exp_decay2(3).unwrap(), 3, DEFAULT_CAP).unwrap());
    let (csc, csc_time) = timed(|| exact_csc(&paw, &Spectrum::exp_decay2(4).unwrap(), &int(1), DEFAULT_CAP).unwrap());
    let mut v = Violations::default();
    v.check(tsc.optimum == int(1), || format!("T3 = {}", tsc.optimum));
    v.check(csc.optimum == Some(3), || format!("chi1 = {:?}", csc.optimum));
    v.check(tsc_time < Duration::from_secs(1), || format!("T3 took {tsc_time:?}"));
    v.check(csc_time < Duration::from_secs(1), || format!("chi1 took {csc_time:?}"));
    v.outcome(format!(
        "paw: T3 = {}, chi1 = {:?} ({tsc_time:?}, {csc_time:?})",
        tsc.optimum, csc.optimum
    ))
}

fn bound_exactness() -> Outcome {
    let paw = named_graph("paw").unwrap();
    let w3 = Spectrum::exp_decay2(3).unwrap();
    let w4 = Spectrum::exp_decay2(4).unwrap();
    let tsc = tsc_bound(&paw, &w3, 3).unwrap();
    let csc = csc_bound_report(&paw, &w4, &int(1)).unwrap();
    let floor = csc_threshold_floor(&paw, &w4).unwrap();
    let mut v = Violations::default();
    v.check(tsc == int(2), || format!("tsc bound {tsc}"));
    v.check(csc.value == BigInt::from(7), || format!("csc bound {}", csc.value));
    v.check(!csc.precondition_holds, || "precondition reported true".into());
    v.check(floor == frac(51, 32), || format!("threshold floor {floor}"));
    v.outcome(format!(
        "tsc bound {tsc}, csc bound {} (precondition {}), threshold floor {floor}",
        csc.value, csc.precondition_holds
    ))
}

fn tightness() -> Outcome {
    let c5 = named_graph("cycle(5)").unwrap();
    let i2 = Spectrum::identity(2).unwrap();
    let i5 = Spectrum::identity(5).unwrap();
    let t2 = exact_tsc(&c5, &i2, 2, DEFAULT_CAP).unwrap().optimum;
    let tb = tsc_bound(&c5, &i2, 2).unwrap();
    let chi = exact_csc(&c5, &i5, &int(0), DEFAULT_CAP).unwrap().optimum;
    let cb = csc_bound(&c5, &i5, &int(0)).unwrap();
    let mut v = Violations::default();
    v.check(t2 == int(1) && t2 == tb, || format!("T2 {t2} vs bound {tb}"));
    v.check(chi == Some(3) && BigInt::from(3) == cb, || format!("chi0 {chi:?} vs bound {cb}"));
    v.outcome(format!("C5: T2 = {t2} = bound {tb}; chi0 = {chi:?}, bound {cb}"))
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    Decay2,
    Decay3,
    Identity,
    Dyadic,
}

fn spectrum_of(kind: Kind, size: usize, rng: &mut impl Rng) -> Spectrum {
    match kind {
        Kind::Decay2 => Spectrum::exp_decay2(size).unwrap(),
        Kind::Decay3 => Spectrum::exp_decay(size, &int(3)).unwrap(),
        Kind::Identity => Spectrum::identity(size).unwrap(),
        Kind::Dyadic => loop {
            let mut entries = vec![Rational::zero(); size * size];
            for i in 0..size {
                for j in i..size {
                    let w = frac(rng.gen_range(0..8), 1 << rng.gen_range(0..4));
                    entries[i * size + j] = w.clone();
                    entries[j * size + i] = w;
                }
            }
            if entries.iter().any(|w| !w.is_zero()) {
                break Spectrum::new(size, entries).unwrap();
            }
        },
    }
}

struct Instance {
    label: String,
    graph: Graph,
    /// Spectrum of size k for the threshold problem.
    tsc_spectrum: Spectrum,
    k: usize,
    /// Spectrum of size n for the chromatic problem.
    csc_spectrum: Spectrum,
}

/// 504 small instances: n in 2..=8, p in {0.2, 0.5, 0.8}, four spectrum
/// families, k in {2, 3, 4}, two graph seeds each.
fn small_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    let kinds = [Kind::Decay2, Kind::Decay3, Kind::Identity, Kind::Dyadic];
    let mut id = 0u64;
    for n in 2..=8usize {
        for (pi, &p) in [0.2, 0.5, 0.8].iter().enumerate() {
            for &kind in &kinds {
                for k in 2..=4usize {
                    for rep in 0..2u64 {
                        id += 1;
                        let seed = RngSeed(0xACCE).derive(&[n as u64, pi as u64, kind as u64, k as u64, rep]);
                        let mut rng = seed.derive(&[1]).rng();
                        out.push(Instance {
                            label: format!("#{id} n={n} p={p} {kind:?} k={k}"),
                            graph: gen_er_graph(n, p, seed).unwrap(),
                            tsc_spectrum: spectrum_of(kind, k, &mut rng),
                            k,
                            csc_spectrum: spectrum_of(kind, n, &mut rng),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Thresholds tried per instance: the precondition floor (at least 0), one
/// gcd step above it and half of it.
fn thresholds(inst: &Instance) -> Vec<Rational> {
    let floor = csc_threshold_floor(&inst.graph, &inst.csc_spectrum).unwrap().max(Rational::zero());
    let g = generalized_gcd(&inst.csc_spectrum).unwrap();
    let mut ts = vec![floor.clone(), &floor + &g];
    let below = &floor / int(2);
    if below >= Rational::zero() && below != floor {
        ts.push(below);
    }
    ts
}

fn bound_validity(instances: &[Instance]) -> Outcome {
    let mut v = Violations::default();
    let mut csc_checked = 0;
    for inst in instances {
        let opt = exact_tsc(&inst.graph, &inst.tsc_spectrum, inst.k, DEFAULT_CAP).unwrap().optimum;
        let bound = tsc_bound(&inst.graph, &inst.tsc_spectrum, inst.k).unwrap();
        v.check(opt <= bound, || format!("{}: T_k {opt} > bound {bound}", inst.label));
        for t in thresholds(inst) {
            if !csc_precondition(&inst.graph, &inst.csc_spectrum, &t) {
                continue;
            }
            csc_checked += 1;
            let chi = exact_csc(&inst.graph, &inst.csc_spectrum, &t, DEFAULT_CAP).unwrap().optimum;
            let cb = csc_bound(&inst.graph, &inst.csc_spectrum, &t).unwrap();
            v.check(chi.is_some_and(|c| BigInt::from(c) <= cb), || {
                format!("{} t={t}: chi {chi:?} vs bound {cb}", inst.label)
            });
        }
    }
    v.outcome(format!(
        "{} threshold instances, {csc_checked} chromatic instances with the precondition",
        instances.len()
    ))
}

fn balanced_invariants() -> Outcome {
    let mut v = Violations::default();
    let mut count = 0;
    let kinds = [Kind::Decay2, Kind::Decay3, Kind::Identity, Kind::Dyadic];
    for i in 0..600u64 {
        let seed = RngSeed(0xBA1A).derive(&[i]);
        let mut rng = seed.rng();
        let n = rng.gen_range(2..=30);
        let p = [0.2, 0.5, 0.8][rng.gen_range(0..3)];
        let k = rng.gen_range(2..=6);
        let kind = kinds[rng.gen_range(0..4)];
        let g = gen_er_graph(n, p, seed.derive(&[1])).unwrap();
        let s = spectrum_of(kind, k, &mut rng);
        let r = balanced_coloring(&g, &s, k, seed.derive(&[2])).unwrap();
        count += 1;
        let label = format!("#{i} n={n} p={p} {kind:?} k={k}");
        let actual = vertex_interferences(&g, &s, &r.coloring).unwrap();
        let norm = inf_norm(&s);
        for (u, iu) in actual.iter().enumerate() {
            let stuck = (1..=k).all(|j| *iu <= potential_interference(&g, &s, &r.coloring, u, j).unwrap());
            v.check(stuck, || format!("{label}: vertex {u} can improve"));
            let lhs = int(k as i64) * iu;
            let rhs = int(g.degree(u) as i64) * &norm;
            v.check(lhs <= rhs, || format!("{label}: vertex {u}: k*I = {lhs} > deg*norm = {rhs}"));
        }
        let bound = tsc_bound(&g, &s, k).unwrap();
        v.check(r.max_interference <= bound, || format!("{label}: max {} > bound {bound}", r.max_interference));
    }
    v.outcome(format!("{count} balanced colorings audited"))
}

fn heuristic_soundness(instances: &[Instance]) -> Outcome {
    let mut v = Violations::default();
    let mut csc_runs = 0;
    for (i, inst) in instances.iter().enumerate() {
        let seed = RngSeed(i as u64);
        let opt = exact_tsc(&inst.graph, &inst.tsc_spectrum, inst.k, DEFAULT_CAP).unwrap().optimum;
        for ties in [TieBreak::Seeded, TieBreak::LowestIndex] {
            let r = tsc_dsatur(&inst.graph, &inst.tsc_spectrum, inst.k, seed, ties).unwrap();
            v.check(r.max_interference >= opt, || {
                format!("{}: dsatur {} < optimum {opt}", inst.label, r.max_interference)
            });
        }
        for t in thresholds(inst) {
            let chi = exact_csc(&inst.graph, &inst.csc_spectrum, &t, DEFAULT_CAP).unwrap().optimum;
            let r = csc_dsatur(&inst.graph, &inst.csc_spectrum, &t, seed, TieBreak::Seeded).unwrap();
            csc_runs += 1;
            if r.feasible {
                v.check(chi.is_some_and(|c| r.distinct_colors >= c), || {
                    format!("{} t={t}: dsatur {} colors vs optimum {chi:?}", inst.label, r.distinct_colors)
                });
                let interferences = vertex_interferences(&inst.graph, &inst.csc_spectrum, &r.coloring).unwrap();
                v.check(interferences.iter().all(|x| *x <= t), || {
                    format!("{} t={t}: dsatur coloring exceeds t", inst.label)
                });
            }
        }
    }
    v.outcome(format!("{} threshold instances, {csc_runs} chromatic runs", instances.len()))
}

/// Published Table 1 (k = 4): n, p, bound, random, dsatur, harmony-based optimizer.
const TABLE_K4: [(usize, &str, f64, f64, f64, f64); 15] = [
    (60, "0.1", 6.7, 6.7, 4.1, 4.5),
    (60, "0.3", 14.9, 14.6, 10.9, 11.5),
    (60, "0.5", 21.0, 20.9, 17.8, 17.3),
    (60, "0.7", 27.3, 26.9, 23.4, 23.1),
    (60, "0.9", 32.5, 32.1, 28.8, 28.1),
    (70, "0.1", 7.4, 7.6, 4.8, 5.2),
    (70, "0.3", 17.1, 16.7, 13.1, 13.4),
    (70, "0.5", 25.1, 24.6, 20.6, 20.7),
    (70, "0.7", 32.0, 31.7, 27.4, 27.1),
    (70, "0.9", 37.7, 37.5, 33.5, 32.8),
    (80, "0.1", 8.3, 8.5, 5.7, 5.8),
    (80, "0.3", 19.1, 18.8, 15.3, 15.1),
    (80, "0.5", 28.6, 28.3, 24.1, 23.4),
    (80, "0.7", 35.8, 35.5, 30.6, 30.4),
    (80, "0.9", 43.4, 42.9, 38.0, 37.8),
];

fn avg(row: &ExperimentRow, s: Strategy) -> f64 {
    row.stats_for(s).and_then(|x| x.avg_f64()).unwrap_or(f64::NAN)
}

fn within(actual: f64, expected: f64, rel: f64) -> bool {
    (actual - expected).abs() <= rel * expected
}

fn table_k4(rows: &[ExperimentRow], elapsed: Duration) -> Outcome {
    let mut v = Violations::default();
    v.check(rows.len() == TABLE_K4.len(), || format!("{} rows", rows.len()));
    v.check(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"));
    let mut worst = [0.0f64; 4];
    for (row, &(n, p, bound, random, dsatur, harmony)) in rows.iter().zip(TABLE_K4.iter()) {
        let at = format!("n={n} p={p}");
        v.check(row.category.n == n && row.category.p.text == p, || format!("{at}: row order"));
        let got = [to_f64(&row.bound), avg(row, Strategy::Random), avg(row, Strategy::Dsatur), avg(row, Strategy::Harmony)];
        let want = [bound, random, dsatur, harmony];
        let tol = [0.05, 0.10, 0.15, 0.15];
        let names = ["bound", "random", "dsatur", "harmony"];
        for c in 0..4 {
            let rel = (got[c] - want[c]).abs() / want[c];
            worst[c] = worst[c].max(rel);
            v.check(within(got[c], want[c], tol[c]), || {
                format!("{at} {}: {:.2} vs {} (±{:.0}%)", names[c], got[c], want[c], tol[c] * 100.0)
            });
        }
    }
    v.outcome(format!(
        "{} rows in {:.0?}; worst relative deviation bound {:.1}%, random {:.1}%, dsatur {:.1}%, harmony {:.1}%",
        rows.len(),
        elapsed,
        worst[0] * 100.0,
        worst[1] * 100.0,
        worst[2] * 100.0,
        worst[3] * 100.0
    ))
}

fn table_csc_saturated() -> Outcome {
    let cfg = BenchConfig {
        p_values: vec![Decimal::parse("0.7").unwrap(), Decimal::parse("0.9").unwrap()],
        t_fractions: vec![Decimal::parse("0.75").unwrap()],
        ..BenchConfig::default()
    };
    let (rows, elapsed) = timed(|| run_bench(&cfg, Problem::Csc, |_| {}).unwrap());
    let mut v = Violations::default();
    let mut shown = Vec::new();
    for row in &rows {
        let d = avg(row, Strategy::Dsatur);
        let gap = row.gap_pct.as_ref().map_or(f64::NAN, to_f64);
        let at = format!("n={} p={}", row.category.n, row.category.p.text);
        shown.push(format!("{at}: dsatur {d:.2} gap {gap:.1}"));
        v.check((d - 3.0).abs() <= 0.2, || format!("{at}: dsatur avg {d:.3}"));
        v.check((gap - 40.0).abs() <= 2.0, || format!("{at}: gap {gap:.2}"));
    }
    v.outcome(format!("{} rows in {elapsed:.0?}: {}", rows.len(), shown.join(", ")))
}

fn best_avg(row: &ExperimentRow) -> Rational {
    row.best().and_then(|b| b.avg.clone()).unwrap()
}

fn trends(blocks: &[(usize, Vec<ExperimentRow>)]) -> Outcome {
    let mut v = Violations::default();
    for (k, rows) in blocks {
        for n in [60, 70, 80] {
            let block: Vec<&ExperimentRow> = rows.iter().filter(|r| r.category.n == n).collect();
            for pair in block.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                let at = format!("k={k} n={n} p {}→{}", a.category.p.text, b.category.p.text);
                v.check(best_avg(a) < best_avg(b), || {
                    format!("{at}: best avg {:.2} → {:.2}", to_f64(&best_avg(a)), to_f64(&best_avg(b)))
                });
                let (ga, gb) = (a.gap_pct.clone().unwrap(), b.gap_pct.clone().unwrap());
                v.check(gb < ga, || format!("{at}: gap {:.2} → {:.2}", to_f64(&ga), to_f64(&gb)));
            }
        }
    }
    v.outcome(format!(
        "k in {:?}: best average rises and gap narrows with p in every n block",
        blocks.iter().map(|(k, _)| *k).collect::<Vec<_>>()
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bench.cfg");
    std::fs::write(
        &config,
        "n = 30, 40\np = 0.3, 0.7\nk = 4, 6\nt = 0.5\ngraphs_per_category = 3\nrepetitions = 3\nevals = 3000\nmaster_seed = 11\n",
    )
    .unwrap();
    let mut v = Violations::default();
    let mut sizes = Vec::new();
    for problem in ["tsc", "csc"] {
        let mut reports = Vec::new();
        for run in 0..2 {
            let out = dir.path().join(format!("{problem}-{run}.csv"));
            let status = Command::new(env!("CARGO_BIN_EXE_spectrum-color"))
                .args(["bench", "--problem", problem, "--format", "csv", "--quiet", "--config"])
                .arg(&config)
                .arg("--out")
                .arg(&out)
                .status()
                .unwrap();
            v.check(status.success(), || format!("{problem} run {run} exited with {status}"));
            reports.push(std::fs::read(&out).unwrap_or_default());
        }
        sizes.push(reports[0].len());
        v.check(!reports[0].is_empty() && reports[0] == reports[1], || {
            format!("{problem} reports differ")
        });
    }
    v.outcome(format!("tsc and csc reports byte-identical ({} and {} bytes)", sizes[0], sizes[1]))
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    let mut record = |id, name, outcome: Outcome| {
        println!("{} criterion {id} ({name}): {}", if outcome.pass { "PASS" } else { "FAIL" }, outcome.detail);
        results.push((id, name, outcome));
    };

    record(1, "case study", case_study());
    record(2, "bound exactness", bound_exactness());
    record(3, "tightness", tightness());
    let instances = small_instances();
    record(4, "bound validity", bound_validity(&instances));
    record(5, "balanced invariants", balanced_invariants());
    record(6, "heuristic soundness", heuristic_soundness(&instances));

    let cfg_k4 = BenchConfig { k_values: vec![4], ..BenchConfig::default() };
    let (rows_k4, elapsed) = timed(|| run_bench(&cfg_k4, Problem::Tsc, |_| {}).unwrap());
    record(7, "threshold table, k = 4", table_k4(&rows_k4, elapsed));
    record(8, "chromatic table, t = 0.75np", table_csc_saturated());

    let mut blocks = vec![(4, rows_k4)];
    for k in [6, 11] {
        let cfg = BenchConfig { k_values: vec![k], ..BenchConfig::default() };
        let rows = run_bench(&cfg, Problem::Tsc, |_| {}).unwrap();
        debug_assert!(rows.iter().all(|r| r.parameter == Parameter::Colors(k)));
        blocks.push((k, rows));
    }
    record(9, "trends", trends(&blocks));
    record(10, "determinism", determinism());

    let failed: Vec<u32> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    println!(
        "acceptance: {} passed, {} failed{}",
        results.len() - failed.len(),
        failed.len(),
        if failed.is_empty() { String::new() } else { format!(" {failed:?}") }
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
