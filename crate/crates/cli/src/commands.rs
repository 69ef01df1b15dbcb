use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use lunebound::bounds::serialize_cap;
use lunebound::lune::equality_report;
use lunebound::verify::{perturb_lune_test, run_inequality_suite, PerturbationReport, SamplerConfig, SuiteSummary, TrialRecord};
use lunebound::{build_lune, perimeter_cap, reverse_bound, BoundCase, BoundQuery, BoundResult, Error};
use serde::Serialize;

use crate::{Failure, Format, SpaceArgs, SweepArgs, VerifyArgs};

type Outcome = Result<(), Failure>;

/// The five cases run by `verify` when no space is given, with k = 1.
const CANONICAL: [(f64, f64); 5] = [(0.0, 1.0), (1.0, 1.0), (-1.0, 2.0), (-1.0, 1.0), (-1.0, 0.5)];

#[derive(Serialize)]
struct BoundOutput {
    c: f64,
    lambda: f64,
    #[serde(rename = "L")]
    length: f64,
    #[serde(flatten)]
    result: BoundResult,
}

fn print_json(value: &impl Serialize) -> Outcome {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn write_json(path: &Path, value: &impl Serialize) -> Outcome {
    let mut out = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

pub fn bound(space: &SpaceArgs, lambda: f64, length: f64) -> Outcome {
    let c = space.required()?;
    let result = reverse_bound(&BoundQuery::new(c, lambda, length))?;
    print_json(&BoundOutput {
        c,
        lambda,
        length,
        result,
    })
}

pub fn lune(space: &SpaceArgs, lambda: f64, length: f64, out: Option<&Path>) -> Outcome {
    let c = space.required()?;
    let curve = build_lune(c, lambda, length)?;
    let report = equality_report(&curve, lambda)?;
    if report.smooth_circle {
        eprintln!("note: L is at the cap; the lune degenerates to a smooth circle");
    }
    match out {
        Some(path) => {
            write_json(path, &curve)?;
            print_json(&report)?;
        }
        None => {
            #[derive(Serialize)]
            struct Both<'a> {
                curve: &'a lunebound::ClosedCurve,
                report: &'a lunebound::lune::EqualityReport,
            }
            print_json(&Both {
                curve: &curve,
                report: &report,
            })?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(report.failures.join("; ")))
    }
}

#[derive(Serialize)]
struct CaseRecord<'a> {
    c: f64,
    lambda: f64,
    #[serde(flatten)]
    record: &'a TrialRecord,
}

#[derive(Serialize)]
struct VerifyOutput {
    ok: bool,
    suites: Vec<SuiteSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    perturbations: Vec<PerturbationReport>,
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    if args.trials == 0 {
        return Err(Error::input("--trials must be at least 1").into());
    }
    let cases: Vec<(f64, f64)> = match (args.space.curvature()?, args.lambda) {
        (Some(c), Some(lambda)) => vec![(c, lambda)],
        (None, None) => CANONICAL.to_vec(),
        (Some(_), None) => return Err(Error::input("--lambda is required with a space").into()),
        (None, Some(_)) => return Err(Error::input("--lambda needs a space (--c or --geometry)").into()),
    };
    let mut records = match &args.records {
        Some(path) => Some(BufWriter::new(File::create(path)?)),
        None => None,
    };
    let mut output = VerifyOutput {
        ok: true,
        suites: Vec::new(),
        perturbations: Vec::new(),
    };
    for (c, lambda) in cases {
        let mut config = SamplerConfig::new(c, lambda);
        config.trials = args.trials;
        config.seed = args.seed;
        config.bound_bias = args.bound_bias;
        let suite = run_inequality_suite(&config)?;
        if let Some(out) = records.as_mut() {
            for record in &suite.records {
                serde_json::to_writer(&mut *out, &CaseRecord { c, lambda, record }).map_err(std::io::Error::from)?;
                out.write_all(b"\n")?;
            }
        }
        output.ok &= suite.summary.ok;
        output.suites.push(suite.summary);

        if args.perturbations > 0 {
            let length = match args.perturb_length {
                Some(l) => l,
                None => {
                    let cap = perimeter_cap(c, lambda)?;
                    if cap.is_finite() {
                        0.5 * cap
                    } else {
                        4.0 / lambda
                    }
                }
            };
            let report = perturb_lune_test(c, lambda, length, args.perturbations, args.magnitude, args.seed)?;
            output.ok &= report.ok;
            output.perturbations.push(report);
        }
    }
    if let Some(mut out) = records {
        out.flush()?;
    }
    if let Some(path) = &args.summary {
        write_json(path, &output)?;
    }
    print_json(&output)?;
    if output.ok {
        Ok(())
    } else {
        let failed: Vec<String> = output
            .suites
            .iter()
            .filter(|s| !s.ok)
            .map(|s| format!("c={} λ={}: {} failures, skip rate {}", s.c, s.lambda, s.failed, s.skip_rate))
            .chain(
                output
                    .perturbations
                    .iter()
                    .filter(|p| !p.ok)
                    .map(|p| format!("lune perturbation c={} λ={}: min slack {:e}", p.c, p.lambda, p.min_slack)),
            )
            .collect();
        Err(Failure::Verification(failed.join("; ")))
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepRow {
    pub c: f64,
    pub lambda: f64,
    #[serde(rename = "L")]
    pub length: f64,
    #[serde(rename = "F_min")]
    pub f_min: f64,
    #[serde(serialize_with = "serialize_cap")]
    pub cap: f64,
    pub case: BoundCase,
}

/// Rows for the half-open grid `(L_min, L_max]`, and the number of grid
/// points dropped for lying above the cap.
pub fn sweep_rows(c: f64, lambdas: &[f64], min: f64, max: f64, steps: usize) -> lunebound::Result<(Vec<SweepRow>, usize)> {
    if lambdas.is_empty() {
        return Err(Error::input("at least one --lambda is required"));
    }
    if steps == 0 {
        return Err(Error::input("--steps must be at least 1"));
    }
    if !(min >= 0.0) || !(max > min) || !max.is_finite() {
        return Err(Error::input(format!("perimeter grid ({min}, {max}] is empty or invalid")));
    }
    let mut rows = Vec::new();
    let mut omitted = 0;
    for &lambda in lambdas {
        for i in 1..=steps {
            let length = if i == steps {
                max
            } else {
                min + (max - min) * i as f64 / steps as f64
            };
            match reverse_bound(&BoundQuery::new(c, lambda, length)) {
                Ok(b) => rows.push(SweepRow {
                    c,
                    lambda,
                    length,
                    f_min: b.f_min,
                    cap: b.cap,
                    case: b.case,
                }),
                Err(Error::AboveCap { .. }) => omitted += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok((rows, omitted))
}

fn write_csv(out: &mut impl Write, rows: &[SweepRow]) -> std::io::Result<()> {
    writeln!(out, "c,lambda,L,F_min,cap,case")?;
    for r in rows {
        // Display for f64 is the shortest string that round-trips
        writeln!(out, "{},{},{},{},{},{}", r.c, r.lambda, r.length, r.f_min, r.cap, r.case)?;
    }
    Ok(())
}

pub fn sweep(args: &SweepArgs) -> Outcome {
    let c = args.space.required()?;
    let (rows, omitted) = sweep_rows(c, &args.lambda, args.length_min, args.length_max, args.steps)?;
    let mut out: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(std::io::stdout().lock()),
    };
    match args.format {
        Format::Csv => write_csv(&mut out, &rows)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &rows).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    if omitted > 0 {
        eprintln!("warning: {omitted} grid points above the perimeter cap omitted");
    }
    Ok(())
}
