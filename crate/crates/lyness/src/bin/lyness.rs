//! Command-line front end: every library capability as a subcommand,
//! emitting aligned tables, CSV (versioned schema line + header), or JSON
//! (one object with a `schema_version` field). Output is deterministic for
//! a fixed command line and `--rng-seed`.

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use std::path::PathBuf;
use std::process::ExitCode;

use lyness::exact::{self, ExactPoint, ExactRational};
use lyness::frieze;
use lyness::invariant::{self, LevelCurve};
use lyness::map::{LynessParams, Point2};
use lyness::periodic::{self, SpecialPeriod};
use lyness::report::{fmt_f64_full, fmt_f64_table, render_table, Csv, Json};
use lyness::rotation::{self, PairVerdict, RotationOptions, SeedChoice, Trend};

#[derive(Parser)]
#[command(name = "lyness", version, about = "Dynamics of the generalized Lyness recurrence")]
struct Cli {
    /// Output format (default: table; special-level defaults to json).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Cap internal parallelism (overrides LYNESS_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for any randomized choices (e.g. a missing --seed point).
    #[arg(long, global = true, default_value_t = 0)]
    rng_seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Iterate the map from a seed point.
    Iterate {
        #[arg(long)]
        alpha: String,
        /// Seed point "x,y" (rationals allowed with --exact). Random if omitted.
        #[arg(long)]
        seed: Option<String>,
        /// Number of steps.
        #[arg(long, value_parser = parse_count)]
        n: u64,
        /// Iterate in exact rational arithmetic and detect exact closure.
        #[arg(long)]
        exact: bool,
        /// Bit cap for exact mode.
        #[arg(long, default_value_t = exact::DEFAULT_EXACT_BIT_CAP)]
        bit_cap: u64,
    },
    /// Evaluate the invariant at a point, or describe a level curve.
    Invariant {
        #[arg(long)]
        alpha: f64,
        /// Point "x,y" to evaluate V and its gradient at.
        #[arg(long, conflicts_with = "v")]
        point: Option<String>,
        /// Level v: report diagonal roots and the projected interval.
        #[arg(long)]
        v: Option<f64>,
        /// With --v, also emit this many orbit samples on the curve.
        #[arg(long, default_value_t = 0, value_parser = parse_count)]
        samples: u64,
    },
    /// Estimate the rotation number on one level curve.
    Rotation {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        v: f64,
        #[arg(long, value_parser = parse_count)]
        iters: u64,
        /// Explicit seed point "x,y" (default: far diagonal root).
        #[arg(long)]
        seed: Option<String>,
        /// Nearest-return refinement pass.
        #[arg(long)]
        refine: bool,
    },
    /// Rotation estimates on a geometric grid of levels, with a
    /// monotonicity report.
    ScanRho {
        #[arg(long)]
        alpha: f64,
        /// First level as a multiple of v_alpha.
        #[arg(long, default_value_t = 1.001)]
        v_min_mult: f64,
        #[arg(long, default_value_t = 1e4)]
        v_max: f64,
        #[arg(long, default_value_t = 50, value_parser = parse_count)]
        steps: u64,
        #[arg(long, default_value_t = 100_000, value_parser = parse_count)]
        iters: u64,
    },
    /// Achievable orbit periods q with their rotation numerators p.
    Periods {
        #[arg(long, default_value_t = 60)]
        q_max: u32,
    },
    /// The closed-form level carrying exact period-9 or period-11 orbits.
    SpecialLevel {
        #[arg(long)]
        period: u32,
        #[arg(long)]
        alpha: f64,
        /// Closure tolerance (relative).
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
    },
    /// The five exceptional levels of the completed cubic.
    Exceptional {
        #[arg(long)]
        alpha: f64,
    },
    /// Frieze patterns.
    Frieze {
        #[command(subcommand)]
        action: FriezeCommand,
    },
}

#[derive(Subcommand)]
enum FriezeCommand {
    /// Build a pattern from its diagonal and render the staggered table.
    Build {
        /// Comma-separated diagonal, e.g. 1,2,5,3,1,2,3,4,1.
        #[arg(long)]
        diagonal: String,
        /// Entries per row in the rendering (default: two periods).
        #[arg(long)]
        columns: Option<usize>,
    },
    /// Verify a whitespace-separated staggered grid from a file.
    Verify { file: PathBuf },
}

fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    let x: f64 = s.parse().map_err(|_| format!("invalid count {s:?}"))?;
    if x >= 0.0 && x.fract() == 0.0 && x <= u64::MAX as f64 {
        Ok(x as u64)
    } else {
        Err(format!("invalid count {s:?}"))
    }
}

fn parse_point(s: &str) -> Result<Point2, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected \"x,y\", got {s:?}"))?;
    let x: f64 = x.trim().parse().map_err(|_| format!("bad coordinate {x:?}"))?;
    let y: f64 = y.trim().parse().map_err(|_| format!("bad coordinate {y:?}"))?;
    Point2::new(x, y).map_err(|e| e.to_string())
}

fn parse_exact_point(s: &str) -> Result<ExactPoint, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected \"x,y\", got {s:?}"))?;
    let x = ExactRational::parse(x).map_err(|e| e.to_string())?;
    let y = ExactRational::parse(y).map_err(|e| e.to_string())?;
    Ok((x, y))
}

enum Failure {
    Domain(String),
    Io(String),
}

impl From<lyness::Error> for Failure {
    fn from(e: lyness::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("LYNESS_THREADS").ok().and_then(|s| s.parse().ok()));
    let mut verify_failed = false;
    let run = |verify_failed: &mut bool| -> Result<String, Failure> {
        match threads {
            Some(n) if n > 0 => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Failure::Domain(e.to_string()))?;
                pool.install(|| dispatch(&cli, verify_failed))
            }
            _ => dispatch(&cli, verify_failed),
        }
    };
    let text = match run(&mut verify_failed) {
        Ok(text) => text,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            return ExitCode::from(3);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("i/o error: {e}");
                return ExitCode::from(3);
            }
        }
        None => print!("{text}"),
    }
    if verify_failed {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn effective_format(cli: &Cli) -> Format {
    cli.format.unwrap_or(match cli.command {
        Command::SpecialLevel { .. } => Format::Json,
        _ => Format::Table,
    })
}

fn dispatch(cli: &Cli, verify_failed: &mut bool) -> Result<String, Failure> {
    match &cli.command {
        Command::Iterate { alpha, seed, n, exact, bit_cap } => {
            if *exact {
                iterate_exact_cmd(cli, alpha, seed.as_deref(), *n as usize, *bit_cap)
            } else {
                iterate_cmd(cli, alpha, seed.as_deref(), *n as usize)
            }
        }
        Command::Invariant { alpha, point, v, samples } => {
            invariant_cmd(cli, *alpha, point.as_deref(), *v, *samples as usize)
        }
        Command::Rotation { alpha, v, iters, seed, refine } => {
            rotation_cmd(cli, *alpha, *v, *iters, seed.as_deref(), *refine)
        }
        Command::ScanRho { alpha, v_min_mult, v_max, steps, iters } => {
            scan_cmd(cli, *alpha, *v_min_mult, *v_max, *steps as usize, *iters)
        }
        Command::Periods { q_max } => periods_cmd(cli, *q_max),
        Command::SpecialLevel { period, alpha, tolerance } => {
            special_level_cmd(cli, *period, *alpha, *tolerance)
        }
        Command::Exceptional { alpha } => exceptional_cmd(cli, *alpha),
        Command::Frieze { action } => match action {
            FriezeCommand::Build { diagonal, columns } => frieze_build_cmd(cli, diagonal, *columns),
            FriezeCommand::Verify { file } => frieze_verify_cmd(cli, file, verify_failed),
        },
    }
}

fn iterate_cmd(cli: &Cli, alpha: &str, seed: Option<&str>, n: usize) -> Result<String, Failure> {
    let alpha: f64 = alpha
        .parse()
        .map_err(|_| Failure::Domain(format!("bad alpha {alpha:?}")))?;
    let params = LynessParams::new(alpha)?;
    let seed = match seed {
        Some(s) => parse_point(s).map_err(Failure::Domain)?,
        None => {
            let mut rng = rand::rngs::StdRng::seed_from_u64(cli.rng_seed);
            Point2::new(rng.gen_range(0.5..5.0), rng.gen_range(0.5..5.0))?
        }
    };
    let orbit = params.iterate(seed, n);
    let rows: Vec<Vec<String>> = orbit
        .iterates
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let v = invariant::invariant_v(*p, &params);
            match effective_format(cli) {
                Format::Table => vec![
                    k.to_string(),
                    fmt_f64_table(p.x()),
                    fmt_f64_table(p.y()),
                    fmt_f64_table(v),
                ],
                _ => vec![k.to_string(), fmt_f64_full(p.x()), fmt_f64_full(p.y()), fmt_f64_full(v)],
            }
        })
        .collect();
    Ok(match effective_format(cli) {
        Format::Table => render_table(&["k", "x", "y", "V"], &rows),
        Format::Csv => {
            let mut csv = Csv::new("lyness.iterate.v1", &["k", "x", "y", "v"]);
            for row in rows {
                csv.row(&row);
            }
            csv.finish()
        }
        Format::Json => Json::command_object(
            "lyness.iterate.v1",
            vec![
                ("alpha", Json::Float(alpha)),
                ("seed", Json::Array(vec![Json::Float(seed.x()), Json::Float(seed.y())])),
                (
                    "orbit",
                    Json::Array(
                        orbit
                            .iterates
                            .iter()
                            .map(|p| Json::Array(vec![Json::Float(p.x()), Json::Float(p.y())]))
                            .collect(),
                    ),
                ),
            ],
        )
        .render(),
    })
}

fn iterate_exact_cmd(
    cli: &Cli,
    alpha: &str,
    seed: Option<&str>,
    n: usize,
    bit_cap: u64,
) -> Result<String, Failure> {
    let alpha = ExactRational::parse(alpha)?;
    let seed = match seed {
        Some(s) => parse_exact_point(s).map_err(Failure::Domain)?,
        None => {
            let mut rng = rand::rngs::StdRng::seed_from_u64(cli.rng_seed);
            (
                exact::random_positive_rational(&mut rng, 100),
                exact::random_positive_rational(&mut rng, 100),
            )
        }
    };
    let orbit = exact::iterate_exact(&seed, n, &alpha, Some(bit_cap))?;
    let period = orbit.iter().skip(1).position(|p| *p == seed).map(|k| k + 1);
    let rows: Vec<Vec<String>> = orbit
        .iter()
        .enumerate()
        .map(|(k, p)| vec![k.to_string(), p.0.to_string(), p.1.to_string()])
        .collect();
    Ok(match effective_format(cli) {
        Format::Table => {
            let mut out = render_table(&["k", "x", "y"], &rows);
            match period {
                Some(q) => out.push_str(&format!("period={q} exact\n")),
                None => out.push_str("no exact return within n steps\n"),
            }
            out
        }
        Format::Csv => {
            let mut csv = Csv::new("lyness.iterate-exact.v1", &["k", "x", "y"]);
            for row in rows {
                csv.row(&row);
            }
            csv.finish()
        }
        Format::Json => Json::command_object(
            "lyness.iterate-exact.v1",
            vec![
                ("alpha", Json::Str(alpha.to_string())),
                (
                    "seed",
                    Json::Array(vec![
                        Json::Str(seed.0.to_string()),
                        Json::Str(seed.1.to_string()),
                    ]),
                ),
                ("period", period.map_or(Json::Null, |q| Json::UInt(q as u64))),
                (
                    "orbit",
                    Json::Array(
                        orbit
                            .iter()
                            .map(|p| {
                                Json::Array(vec![
                                    Json::Str(p.0.to_string()),
                                    Json::Str(p.1.to_string()),
                                ])
                            })
                            .collect(),
                    ),
                ),
            ],
        )
        .render(),
    })
}

fn invariant_cmd(
    cli: &Cli,
    alpha: f64,
    point: Option<&str>,
    v: Option<f64>,
    samples: usize,
) -> Result<String, Failure> {
    let params = LynessParams::new(alpha)?;
    if let Some(point) = point {
        let p = parse_point(point).map_err(Failure::Domain)?;
        let value = invariant::invariant_v(p, &params);
        let (gx, gy) = invariant::gradient_v(p, &params);
        let hess = invariant::hessian_min_check(&params);
        return Ok(match effective_format(cli) {
            Format::Json => Json::command_object(
                "lyness.invariant.v1",
                vec![
                    ("alpha", Json::Float(alpha)),
                    ("point", Json::Array(vec![Json::Float(p.x()), Json::Float(p.y())])),
                    ("v", Json::Float(value)),
                    ("gradient", Json::Array(vec![Json::Float(gx), Json::Float(gy)])),
                    ("omega", Json::Float(params.omega())),
                    ("v_alpha", Json::Float(params.v_min())),
                    ("hessian_det_at_fixed_point", Json::Float(hess.determinant)),
                ],
            )
            .render(),
            _ => {
                let rows = vec![
                    vec!["V".to_string(), fmt_f64_full(value)],
                    vec!["dV/dx".to_string(), fmt_f64_full(gx)],
                    vec!["dV/dy".to_string(), fmt_f64_full(gy)],
                    vec!["omega".to_string(), fmt_f64_full(params.omega())],
                    vec!["v_alpha".to_string(), fmt_f64_full(params.v_min())],
                ];
                render_table(&["quantity", "value"], &rows)
            }
        });
    }
    let v = v.ok_or_else(|| Failure::Domain("pass --point or --v".to_string()))?;
    let curve = LevelCurve::new(params, v)?;
    let interval = curve.projected_interval()?;
    let mut sample_rows = Vec::new();
    if samples > 0 {
        let mut p = curve.diag_far_point();
        for k in 0..samples {
            sample_rows.push(vec![k.to_string(), fmt_f64_full(p.x()), fmt_f64_full(p.y())]);
            p = params.step(p);
        }
    }
    Ok(match effective_format(cli) {
        Format::Csv => {
            let mut csv = Csv::new("lyness.level-samples.v1", &["k", "x", "y"]);
            for row in sample_rows {
                csv.row(&row);
            }
            csv.finish()
        }
        Format::Json => Json::command_object(
            "lyness.level-curve.v1",
            vec![
                ("alpha", Json::Float(alpha)),
                ("v", Json::Float(v)),
                ("v_alpha", Json::Float(params.v_min())),
                ("diag_near", Json::Float(curve.diag_near())),
                ("diag_far", Json::Float(curve.diag_far())),
                ("interval_lo", Json::Float(interval.lo)),
                ("interval_hi", Json::Float(interval.hi)),
            ],
        )
        .render(),
        Format::Table => {
            let rows = vec![
                vec!["v".to_string(), fmt_f64_table(v)],
                vec!["v_alpha".to_string(), fmt_f64_table(params.v_min())],
                vec!["diag_near".to_string(), fmt_f64_table(curve.diag_near())],
                vec!["diag_far".to_string(), fmt_f64_table(curve.diag_far())],
                vec!["interval_lo".to_string(), fmt_f64_table(interval.lo)],
                vec!["interval_hi".to_string(), fmt_f64_table(interval.hi)],
            ];
            render_table(&["quantity", "value"], &rows)
        }
    })
}

fn rotation_cmd(
    cli: &Cli,
    alpha: f64,
    v: f64,
    iters: u64,
    seed: Option<&str>,
    refine: bool,
) -> Result<String, Failure> {
    let params = LynessParams::new(alpha)?;
    let choice = match seed {
        Some(s) => SeedChoice::Explicit(parse_point(s).map_err(Failure::Domain)?),
        None => SeedChoice::DiagonalFar,
    };
    let est =
        rotation::estimate_rotation_with(&params, v, iters, choice, RotationOptions { refine })?;
    Ok(match effective_format(cli) {
        Format::Csv => {
            let mut csv = Csv::new(
                "lyness.scan-rho.v1",
                &["alpha", "v", "rho", "n_iters", "stderr_bound"],
            );
            csv.row(&estimate_fields(&est));
            csv.finish()
        }
        Format::Json => Json::command_object(
            "lyness.rotation.v1",
            vec![
                ("alpha", Json::Float(est.alpha)),
                ("v", Json::Float(est.v)),
                ("rho", Json::Float(est.rho)),
                ("n_iters", Json::UInt(est.iterations)),
                ("stderr_bound", Json::Float(est.stderr_bound)),
            ],
        )
        .render(),
        Format::Table => {
            let rows = vec![
                vec!["rho".to_string(), fmt_f64_full(est.rho)],
                vec!["n_iters".to_string(), est.iterations.to_string()],
                vec!["stderr_bound".to_string(), fmt_f64_full(est.stderr_bound)],
                vec!["v".to_string(), fmt_f64_table(est.v)],
            ];
            render_table(&["quantity", "value"], &rows)
        }
    })
}

fn estimate_fields(est: &rotation::RotationEstimate) -> Vec<String> {
    vec![
        fmt_f64_full(est.alpha),
        fmt_f64_full(est.v),
        fmt_f64_full(est.rho),
        est.iterations.to_string(),
        fmt_f64_full(est.stderr_bound),
    ]
}

fn scan_cmd(
    cli: &Cli,
    alpha: f64,
    v_min_mult: f64,
    v_max: f64,
    steps: usize,
    iters: u64,
) -> Result<String, Failure> {
    let params = LynessParams::new(alpha)?;
    let grid = rotation::log_spaced_levels(&params, v_min_mult, v_max, steps);
    let scan = rotation::scan_rho(&params, &grid, iters)?;
    Ok(match effective_format(cli) {
        Format::Csv => {
            let mut csv = Csv::new(
                "lyness.scan-rho.v1",
                &["alpha", "v", "rho", "n_iters", "stderr_bound"],
            );
            for est in &scan.estimates {
                csv.row(&estimate_fields(est));
            }
            csv.finish()
        }
        Format::Json => Json::command_object(
            "lyness.scan-rho.v1",
            vec![
                ("alpha", Json::Float(alpha)),
                (
                    "estimates",
                    Json::Array(
                        scan.estimates
                            .iter()
                            .map(|e| {
                                Json::object(vec![
                                    ("v", Json::Float(e.v)),
                                    ("rho", Json::Float(e.rho)),
                                    ("n_iters", Json::UInt(e.iterations)),
                                    ("stderr_bound", Json::Float(e.stderr_bound)),
                                ])
                            })
                            .collect(),
                    ),
                ),
                ("expected_trend", Json::Str(trend_name(scan.report.expected).to_string())),
                ("violations", Json::UInt(scan.report.violations as u64)),
                ("indistinguishable", Json::UInt(scan.report.indistinguishable as u64)),
            ],
        )
        .render(),
        Format::Table => {
            let rows: Vec<Vec<String>> = scan
                .estimates
                .iter()
                .map(|e| {
                    vec![
                        fmt_f64_table(e.alpha),
                        fmt_f64_table(e.v),
                        fmt_f64_table(e.rho),
                        e.iterations.to_string(),
                        fmt_f64_full(e.stderr_bound),
                    ]
                })
                .collect();
            let mut out = render_table(&["alpha", "v", "rho", "n_iters", "stderr_bound"], &rows);
            let consistent = scan
                .report
                .verdicts
                .iter()
                .filter(|v| **v == PairVerdict::Consistent)
                .count();
            out.push_str(&format!(
                "trend: expected {}, {} consistent, {} indistinguishable, {} violations\n",
                trend_name(scan.report.expected),
                consistent,
                scan.report.indistinguishable,
                scan.report.violations,
            ));
            out
        }
    })
}

fn trend_name(t: Trend) -> &'static str {
    match t {
        Trend::Increasing => "increasing",
        Trend::Decreasing => "decreasing",
        Trend::Constant => "constant",
    }
}

fn periods_cmd(cli: &Cli, q_max: u32) -> Result<String, Failure> {
    let witnesses = periodic::period_set(q_max);
    let p_join = |ps: &[u32]| {
        if ps.is_empty() {
            "-".to_string()
        } else {
            ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        }
    };
    Ok(match effective_format(cli) {
        Format::Table => {
            let rows: Vec<Vec<String>> = witnesses
                .iter()
                .map(|w| vec![w.q.to_string(), p_join(&w.p_list)])
                .collect();
            render_table(&["q", "p"], &rows)
        }
        Format::Csv => {
            let mut csv = Csv::new("lyness.periods.v1", &["q", "p_list"]);
            for w in &witnesses {
                csv.row(&[w.q.to_string(), p_join(&w.p_list).replace(',', ";")]);
            }
            csv.finish()
        }
        Format::Json => Json::command_object(
            "lyness.periods.v1",
            vec![
                ("q_max", Json::UInt(q_max as u64)),
                (
                    "witnesses",
                    Json::Array(
                        witnesses
                            .iter()
                            .map(|w| {
                                Json::object(vec![
                                    ("q", Json::UInt(w.q as u64)),
                                    (
                                        "p_list",
                                        Json::Array(
                                            w.p_list.iter().map(|&p| Json::UInt(p as u64)).collect(),
                                        ),
                                    ),
                                ])
                            })
                            .collect(),
                    ),
                ),
            ],
        )
        .render(),
    })
}

fn special_level_cmd(cli: &Cli, period: u32, alpha: f64, tolerance: f64) -> Result<String, Failure> {
    let period = SpecialPeriod::try_from(period)?;
    let level = periodic::special_level(period, alpha)?;
    let closure = if level.valid {
        Some(periodic::verify_closure(&level, tolerance)?)
    } else {
        None
    };
    let alpha_crit = periodic::critical_alpha(period);
    Ok(match effective_format(cli) {
        Format::Json => Json::command_object(
            "lyness.special-level.v1",
            vec![
                ("period", Json::UInt(period.value() as u64)),
                ("alpha", Json::Float(alpha)),
                ("critical_alpha", Json::Float(alpha_crit)),
                ("v_bar", Json::Float(level.v_bar)),
                ("valid", Json::Bool(level.valid)),
                ("lambda_far", level.lambda_far.map_or(Json::Null, Json::Float)),
                (
                    "closure_residual",
                    closure
                        .as_ref()
                        .map_or(Json::Null, |c| Json::Float(c.closure_residual)),
                ),
                (
                    "principal",
                    closure.as_ref().map_or(Json::Null, |c| Json::Bool(c.principal)),
                ),
            ],
        )
        .render(),
        _ => {
            let mut rows = vec![
                vec!["period".to_string(), period.value().to_string()],
                vec!["alpha".to_string(), fmt_f64_full(alpha)],
                vec!["critical_alpha".to_string(), fmt_f64_full(alpha_crit)],
                vec!["v_bar".to_string(), fmt_f64_full(level.v_bar)],
                vec!["valid".to_string(), level.valid.to_string()],
            ];
            if let Some(l) = level.lambda_far {
                rows.push(vec!["lambda_far".to_string(), fmt_f64_full(l)]);
            }
            if let Some(c) = &closure {
                rows.push(vec![
                    "closure_residual".to_string(),
                    fmt_f64_full(c.closure_residual),
                ]);
                rows.push(vec!["principal".to_string(), c.principal.to_string()]);
            }
            render_table(&["quantity", "value"], &rows)
        }
    })
}

fn exceptional_cmd(cli: &Cli, alpha: f64) -> Result<String, Failure> {
    let params = LynessParams::new(alpha)?;
    let levels = invariant::exceptional_levels(&params)?;
    Ok(match effective_format(cli) {
        Format::Json => Json::command_object(
            "lyness.exceptional.v1",
            vec![
                ("alpha", Json::Float(alpha)),
                ("v_zero", Json::Float(levels.v_zero)),
                ("v_infinity", Json::Str("infinity".to_string())),
                ("v_line_conic", Json::Float(levels.v_line_conic)),
                ("v_alpha", Json::Float(levels.v_min)),
                ("v_prime", Json::Float(levels.v_prime)),
            ],
        )
        .render(),
        _ => {
            let rows = vec![
                vec!["v_zero".to_string(), fmt_f64_full(levels.v_zero)],
                vec!["v_infinity".to_string(), "infinity".to_string()],
                vec!["v_line_conic".to_string(), fmt_f64_full(levels.v_line_conic)],
                vec!["v_alpha".to_string(), fmt_f64_full(levels.v_min)],
                vec!["v_prime".to_string(), fmt_f64_full(levels.v_prime)],
            ];
            render_table(&["level", "value"], &rows)
        }
    })
}

fn frieze_build_cmd(cli: &Cli, diagonal: &str, columns: Option<usize>) -> Result<String, Failure> {
    let seed: Vec<ExactRational> = diagonal
        .split(',')
        .map(ExactRational::parse)
        .collect::<Result<_, _>>()?;
    let pattern = frieze::build_from_diagonal(&seed)?;
    let columns = columns.unwrap_or(2 * pattern.order());
    Ok(match effective_format(cli) {
        Format::Json => Json::command_object(
            "lyness.frieze.v1",
            vec![
                ("order", Json::UInt(pattern.order() as u64)),
                (
                    "quiddity",
                    Json::Array(
                        pattern
                            .quiddity_row()
                            .iter()
                            .map(|a| Json::Str(a.to_string()))
                            .collect(),
                    ),
                ),
                ("integer", Json::Bool(pattern.is_integer())),
                (
                    "rows",
                    Json::Array(
                        (0..=pattern.order())
                            .map(|m| {
                                Json::Array(
                                    pattern
                                        .row(m, columns)
                                        .iter()
                                        .map(|e| Json::Str(e.to_string()))
                                        .collect(),
                                )
                            })
                            .collect(),
                    ),
                ),
            ],
        )
        .render(),
        _ => pattern.render_staggered(columns),
    })
}

fn frieze_verify_cmd(cli: &Cli, file: &PathBuf, verify_failed: &mut bool) -> Result<String, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Io(e.to_string()))?;
    let grid = frieze::parse_staggered_grid(&text)?;
    let report = frieze::verify_pattern(&grid)?;
    if !report.is_valid() {
        *verify_failed = true;
    }
    Ok(match effective_format(cli) {
        Format::Json => Json::command_object(
            "lyness.frieze-verify.v1",
            vec![
                ("order", Json::UInt(report.order as u64)),
                ("valid", Json::Bool(report.is_valid())),
                (
                    "violations",
                    Json::Array(
                        report
                            .violations
                            .iter()
                            .map(|v| Json::Str(format!("{v:?}")))
                            .collect(),
                    ),
                ),
            ],
        )
        .render(),
        _ => {
            let mut out = format!(
                "order {} pattern: {}\n",
                report.order,
                if report.is_valid() { "valid" } else { "INVALID" }
            );
            for v in &report.violations {
                out.push_str(&format!("  {v:?}\n"));
            }
            out
        }
    })
}
