use std::path::Path;

use k3fix::catalog::admissible_orders;
use k3fix::exactmath::cyclotomic_poly;
use k3fix::intsolve::{
    check_certificate, explain_certificate, integer_feasibility, nonneg_enumerate, parse_relations,
    rational_solve, relation_implied, Feasibility, Verdict, ORDER60_RELATIONS,
};
use k3fix::lefschetz::{build_system_with, residual_is_zero, verify_fixed_config, RotationPolicy};
use k3fix::{FixedConfig, LinearSystem};
use rayon::prelude::*;

use crate::args::{Command, Format, Target};
use crate::report::*;
use crate::{CliError, EXIT_FINDING, EXIT_INTERNAL, EXIT_OK, RELATIONS_ENV};

const PHI_60: &str = "x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1";

type Outcomes = Result<(u8, Outcome), CliError>;

pub fn execute(command: Command, echo: Vec<String>) -> Result<(u8, String), CliError> {
    let (format, result) = match command {
        Command::Orders { max_phi, output } => (output.format, orders(max_phi)),
        Command::System { target, output } => (output.format, system(&target)),
        Command::Analyze {
            order,
            rot,
            allow_impure,
            all,
            max_phi,
            input,
            output,
        } => {
            let policy = policy(allow_impure);
            let result = match (order, input) {
                (_, Some(path)) => analyze_file(&path),
                (Some(order), None) => analyze(order, rot, policy),
                (None, None) if all => sweep(max_phi, rot, policy),
                (None, None) => unreachable!("clap requires --order, --all or --input"),
            };
            (output.format, result)
        }
        Command::Verify {
            target,
            points,
            curve_n,
            output,
        } => (output.format, verify(&target, &points, curve_n)),
        Command::Search {
            target,
            max_points,
            n_min,
            n_max,
            output,
        } => (output.format, search(&target, max_points, n_min, n_max)),
        Command::CheckPaper { output } => (output.format, check_paper()),
    };
    let (code, result) = result?;
    let report = Report {
        command: echo,
        result,
    };
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    Ok((code, text))
}

fn policy(allow_impure: bool) -> RotationPolicy {
    if allow_impure {
        RotationPolicy::AllowImpure
    } else {
        RotationPolicy::Pure
    }
}

fn orders(max_phi: u64) -> Outcomes {
    let table = admissible_orders(max_phi)?;
    let rows = table
        .rows()
        .iter()
        .map(|(&phi, orders)| TableRow {
            phi,
            orders: orders.clone(),
        })
        .collect();
    Ok((EXIT_OK, Outcome::Table(TableDump { max_phi, rows })))
}

fn system(t: &Target) -> Outcomes {
    let sys = build_system_with(t.order, t.rot, policy(t.allow_impure))?;
    Ok((
        EXIT_OK,
        Outcome::System(SystemDump::from_linear(t.order, t.rot, sys.linear())),
    ))
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Feasible => EXIT_OK,
        Verdict::IntegerInfeasible | Verdict::RationalInconsistent => EXIT_FINDING,
    }
}

/// Feasibility of one system, with every certificate rechecked.
fn analysis(order: u64, rot: u64, sys: &LinearSystem) -> Result<(Verdict, AnalysisDump), CliError> {
    let f = integer_feasibility(sys);
    let mut dump = AnalysisDump {
        order,
        rot,
        verdict: f.verdict().as_str().to_string(),
        rank: rational_solve(sys).solved().map(|s| s.rank),
        certificate: None,
        obstruction: None,
        obstruction_aliased: None,
        witness: None,
    };
    match &f {
        Feasibility::RationalInconsistent => {}
        Feasibility::IntegerInfeasible { certificate } => {
            if !check_certificate(sys, certificate)? {
                return Err(CliError::Internal(format!(
                    "certificate for N={order} r={rot} does not check"
                )));
            }
            dump.certificate = Some(certificate.iter().map(ToString::to_string).collect());
            dump.obstruction = Some(explain_certificate(sys, certificate)?);
            if !sys.aliases().is_empty() {
                let labels = (0..sys.cols())
                    .map(|c| sys.alias_of(c).unwrap_or(&sys.labels()[c]).to_string())
                    .collect();
                let aliased = LinearSystem::new(labels, sys.matrix().to_vec(), sys.rhs().to_vec())?;
                dump.obstruction_aliased = Some(explain_certificate(&aliased, certificate)?);
            }
        }
        Feasibility::Feasible { witness } => {
            dump.witness = Some(
                sys.labels()
                    .iter()
                    .zip(witness)
                    .map(|(label, v)| Assignment {
                        label: label.clone(),
                        value: v.to_string(),
                    })
                    .collect(),
            );
        }
    }
    Ok((f.verdict(), dump))
}

fn analyze(order: u64, rot: u64, policy: RotationPolicy) -> Outcomes {
    let sys = build_system_with(order, rot, policy)?;
    let (verdict, dump) = analysis(order, rot, sys.linear())?;
    Ok((verdict_code(verdict), Outcome::Analysis(dump)))
}

fn analyze_file(path: &Path) -> Outcomes {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let dump = read_system_json(&text)?;
    let sys = dump.to_linear()?;
    let (verdict, result) = analysis(dump.order, dump.rot, &sys)?;
    Ok((verdict_code(verdict), Outcome::Analysis(result)))
}

/// Accepts either a full `system --format json` report or a bare system.
pub fn read_system_json(text: &str) -> Result<SystemDump, CliError> {
    if let Ok(report) = serde_json::from_str::<Report>(text) {
        return match report.result {
            Outcome::System(s) => Ok(s),
            _ => Err(CliError::Usage(
                "the report does not contain a system".into(),
            )),
        };
    }
    serde_json::from_str::<SystemDump>(text)
        .map_err(|e| CliError::Usage(format!("malformed system JSON: {e}")))
}

/// Exit code is [`EXIT_FINDING`] if any order lacks an integer solution.
fn sweep(max_phi: u64, rot: u64, policy: RotationPolicy) -> Outcomes {
    let orders = admissible_orders(max_phi)?.orders();
    let results = orders
        .par_iter()
        .map(|&order| {
            let sys = build_system_with(order, rot, policy)?;
            analysis(order, rot, sys.linear())
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let code = results
        .iter()
        .map(|(v, _)| verdict_code(*v))
        .max()
        .unwrap_or(EXIT_OK);
    let results = results.into_iter().map(|(_, d)| d).collect();
    Ok((
        code,
        Outcome::Sweep(SweepDump {
            max_phi,
            rot,
            results,
        }),
    ))
}

/// Parses `"a,b:count[;a,b:count]..."`.
fn parse_points(spec: &str) -> Result<Vec<(u64, u64, u64)>, CliError> {
    let bad = |item: &str| CliError::Usage(format!("bad point spec `{item}`, expected a,b:count"));
    spec.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (ab, count) = item.split_once(':').ok_or_else(|| bad(item))?;
            let (a, b) = ab.split_once(',').ok_or_else(|| bad(item))?;
            let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad(item));
            Ok((num(a)?, num(b)?, num(count)?))
        })
        .collect()
}

fn verify(t: &Target, points: &str, curve_n: Option<i64>) -> Outcomes {
    let triples = parse_points(points)?;
    let cfg = FixedConfig::from_triples(t.order, t.rot, &triples, curve_n)?;
    let residual = verify_fixed_config(t.order, t.rot, &cfg)?;
    let pass = residual_is_zero(&residual);
    let dump = ResidualDump {
        order: t.order,
        rot: t.rot,
        config: cfg.to_string(),
        residual: residual.to_string(),
        coords: residual.coords().iter().map(ToString::to_string).collect(),
        status: if pass { "PASS" } else { "FAIL" }.to_string(),
    };
    Ok((
        if pass { EXIT_OK } else { EXIT_FINDING },
        Outcome::Residual(dump),
    ))
}

fn search(t: &Target, max_points: u64, n_min: i64, n_max: i64) -> Outcomes {
    if n_min > n_max {
        return Err(CliError::Usage(format!(
            "--n-min {n_min} exceeds --n-max {n_max}"
        )));
    }
    let sys = build_system_with(t.order, t.rot, policy(t.allow_impure))?;
    let configs = nonneg_enumerate(&sys, max_points, n_min..=n_max)
        .into_iter()
        .map(|cfg| ConfigDump {
            points: cfg
                .multiplicities()
                .iter()
                .map(|(p, &count)| PointCount {
                    a: p.a(),
                    b: p.b(),
                    count,
                })
                .collect(),
            n: cfg.curve_n(),
            total_points: cfg.total_points(),
        })
        .collect();
    let dump = SearchDump {
        order: t.order,
        rot: t.rot,
        max_points,
        n_range: sys.has_curve_unknown().then_some((n_min, n_max)),
        configs,
    };
    Ok((EXIT_OK, Outcome::Configs(dump)))
}

fn relations_source() -> Result<(String, String), CliError> {
    match std::env::var_os(RELATIONS_ENV) {
        Some(path) => {
            let path = Path::new(&path);
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok((path.display().to_string(), text))
        }
        None => Ok(("built-in".to_string(), ORDER60_RELATIONS.to_string())),
    }
}

fn check_paper() -> Outcomes {
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        })
    };

    let phi = cyclotomic_poly(60)?.to_string();
    check(
        "cyclotomic polynomial",
        phi == PHI_60,
        format!("Phi_60 = {phi}"),
    );

    let sys = build_system_with(60, 1, RotationPolicy::Pure)?;
    let (rows, cols) = (sys.linear().rows(), sys.linear().cols());
    check(
        "system shape",
        (rows, cols) == (16, 30),
        format!("{rows} equations in {cols} unknowns"),
    );

    let (source, text) = relations_source()?;
    let relations = parse_relations(&text)?;
    let implied = relations
        .iter()
        .map(|r| relation_implied(sys.linear(), r))
        .collect::<Result<Vec<bool>, _>>()?
        .into_iter()
        .filter(|&b| b)
        .count();
    check(
        "solved relations",
        !relations.is_empty() && implied == relations.len(),
        format!("{implied}/{} implied ({source})", relations.len()),
    );

    let (verdict, result) = analysis(60, 1, sys.linear())?;
    let infeasible = verdict == Verdict::IntegerInfeasible;
    let detail = match &result.obstruction_aliased {
        Some(s) => format!(
            "{} (rank {}); {s}",
            result.verdict,
            result.rank.unwrap_or(0)
        ),
        None => result.verdict.clone(),
    };
    check("integer feasibility", infeasible, detail);

    let all = checks.iter().all(|c| c.passed);
    let conclusion = if all {
        "no K3 surface admits a purely non-symplectic automorphism of order 60".to_string()
    } else {
        "reproduction failed".to_string()
    };
    let code = if all { EXIT_OK } else { EXIT_INTERNAL };
    Ok((code, Outcome::CheckPaper(CheckDump { checks, conclusion })))
}
