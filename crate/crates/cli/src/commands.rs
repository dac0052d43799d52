use std::path::Path;

use qhslab::groups::Group;
use qhslab::grover::{
    closed_form_success, cyclic_grover_instance, grover_iteration_count, grover_run,
    grover_sample_many, no_info_experiment_cyclic, no_info_experiment_symmetric,
};
use qhslab::hsp::{grover_hsp, verify_hidden_structure, HspInstance};
use qhslab::qsim::{
    group_fourier_matrix, qrand_distribution, sample_counts, weak_marginal, LabelLayout,
    OutcomeDistribution,
};
use qhslab::repr::complete_irrep_set;
use qhslab::shor::{
    choose_q, gcd, pow_mod, shor_factor, shor_outcome_distribution, validate_factor_modulus,
    MAX_FACTOR_MODULUS,
};
use qhslab::{Matrix, NoInfoReport};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::record::{Check, Outcome};
use crate::{Format, GroupChoice, GroverArgs, IrrepsArgs, NoinfoArgs, QrandArgs, ShorArgs};

/// Largest cyclic group whose irreps are tabulated with full orthogonality checks.
pub const MAX_IRREPS_CYCLIC: usize = 256;
pub const MAX_GROVER_QUBITS: u32 = 22;
pub const MAX_NOINFO_CYCLIC: usize = 4096;
const RESIDUAL_TOLERANCE: f64 = 1e-9;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn json_only(format: Format, command: &str) -> CliResult<()> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(usage(format!(
            "--format csv is not available for `{command}`; use qrand or noinfo"
        ))),
    }
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("results serialize")
}

fn chosen_group(choice: &GroupChoice) -> CliResult<Group> {
    match (choice.sym, choice.cyclic) {
        (Some(n), None) => Ok(Group::symmetric(n)?),
        (None, Some(q)) => Ok(Group::cyclic(q)?),
        _ => Err(usage("exactly one of --sym or --cyclic is required")),
    }
}

fn cap(what: &'static str, size: usize, limit: usize) -> CliResult<()> {
    if size > limit {
        return Err(qhslab::Error::TooLarge {
            what,
            size,
            cap: limit,
        }
        .into());
    }
    Ok(())
}

pub fn irreps(args: &IrrepsArgs, format: Format) -> CliResult<Outcome> {
    json_only(format, "irreps")?;
    let group = chosen_group(&args.group)?;
    if let Group::Cyclic { n } = group {
        cap("cyclic order for irreps", n, MAX_IRREPS_CYCLIC)?;
    }
    let irreps = complete_irrep_set::<f64>(group)?;
    let order = group.order();

    // Homomorphism on a generating set: (g, s) for every g and every generator s.
    let generators: Vec<usize> = match group {
        Group::Symmetric { n } => (0..n.saturating_sub(1))
            .map(|k| {
                group.permutation_index(
                    &qhslab::groups::transposition(k, k + 1, n).expect("in range"),
                )
            })
            .collect::<qhslab::Result<_>>()?,
        Group::Cyclic { n } => vec![1 % n],
    };
    let mut homomorphism: f64 = 0.0;
    let mut unitarity: f64 = 0.0;
    for gamma in &irreps {
        let table = gamma.table();
        for g in 0..order {
            unitarity = unitarity.max(table[g].unitarity_residual());
            for &s in &generators {
                homomorphism = homomorphism
                    .max((&table[g] * &table[s]).max_abs_diff(&table[group.multiply(g, s)]));
            }
        }
    }
    // Rows of the Fourier matrix are orthonormal exactly when the Schur relations hold.
    let fourier = group_fourier_matrix::<f64>(group)?;
    let orthogonality = (&fourier * &fourier.adjoint()).max_abs_diff(&Matrix::identity(order));

    let degrees: Vec<usize> = irreps.iter().map(|g| g.degree()).collect();
    let sum_sq: usize = degrees.iter().map(|d| d * d).sum();
    if sum_sq != order || homomorphism.max(unitarity).max(orthogonality) >= RESIDUAL_TOLERANCE {
        return Err(CliError::Invariant(format!(
            "representation checks failed for {group}: sum d^2 = {sum_sq}, residuals {homomorphism:e}, {unitarity:e}, {orthogonality:e}"
        )));
    }
    let mut results = json!({
        "group": group,
        "name": group.to_string(),
        "order": order,
        "labels": irreps.iter().map(|g| g.label().to_string()).collect::<Vec<_>>(),
        "degrees": degrees,
        "sum_sq": sum_sq,
        "residuals": {
            "homomorphism": homomorphism,
            "unitarity": unitarity,
            "orthogonality": orthogonality,
        },
    });
    if args.tables {
        results["tables"] = to_value(&irreps.iter().map(|g| g.export()).collect::<Vec<_>>());
    }
    Ok(Outcome::json(results, Vec::new()))
}

fn require<T: Copy>(value: Option<T>, flag: &str, source: &str) -> CliResult<T> {
    value.ok_or_else(|| usage(format!("{source} needs {flag}")))
}

fn forbid<T>(value: &Option<T>, flag: &str, source: &str) -> CliResult<()> {
    match value {
        Some(_) => Err(usage(format!("{flag} does not apply to {source}"))),
        None => Ok(()),
    }
}

fn read_instance(path: &Path) -> CliResult<HspInstance> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let inst: HspInstance = serde_json::from_str(&text).map_err(|source| CliError::Instance {
        path: path.to_path_buf(),
        source,
    })?;
    if let Some(k) = inst.claimed_hidden() {
        verify_hidden_structure(&inst, k)?;
    }
    Ok(inst)
}

/// The distribution requested by `qrand`, with a description of its instance.
fn qrand_target(args: &QrandArgs) -> CliResult<(OutcomeDistribution<f64>, Value)> {
    if !args.constant {
        forbid(&args.cyclic, "--cyclic", "this instance")?;
        forbid(&args.sym, "--sym", "this instance")?;
    }
    if args.grover_sym.is_none() && args.grover_cyclic.is_none() {
        forbid(&args.j0, "--j0", "this instance")?;
    }
    if args.shor.is_none() {
        forbid(&args.base, "--base", "this instance")?;
    }
    let describe = |inst: &HspInstance, kind: &str| {
        json!({
            "source": kind,
            "group": inst.group(),
            "target_size": inst.target_size(),
            "hidden": inst.claimed_hidden(),
        })
    };
    if let Some(n) = args.grover_sym {
        let inst = grover_hsp(n, require(args.j0, "--j0", "--grover-sym")?)?;
        LabelLayout::new(inst.group())?;
        return Ok((qrand_distribution(&inst)?, describe(&inst, "grover-sym")));
    }
    if let Some(n) = args.grover_cyclic {
        cap(
            "cyclic order for qrand",
            n,
            qhslab::groups::MAX_CYCLIC_ORDER,
        )?;
        let (inst, _) = cyclic_grover_instance(n, require(args.j0, "--j0", "--grover-cyclic")?)?;
        return Ok((qrand_distribution(&inst)?, describe(&inst, "grover-cyclic")));
    }
    if let Some(n) = args.shor {
        let a = require(args.base, "--base", "--shor")?;
        if !(3..=MAX_FACTOR_MODULUS).contains(&n) {
            return Err(usage(format!(
                "--shor needs 3 <= N <= {MAX_FACTOR_MODULUS}"
            )));
        }
        if gcd(a, n) != 1 || a >= n || a == 0 {
            return Err(usage(format!(
                "--base must lie in 1..N and be coprime to N = {n}"
            )));
        }
        let q = choose_q(n) as usize;
        let dist = OutcomeDistribution::new(
            LabelLayout::new(Group::cyclic(q)?)?,
            shor_outcome_distribution(n, a)?,
        )?;
        dist.check_normalized()?;
        let desc = json!({ "source": "shor", "N": n, "a": a, "Q": q });
        return Ok((dist, desc));
    }
    if args.constant {
        let group = match (args.cyclic, args.sym) {
            (Some(q), None) => Group::cyclic(q)?,
            (None, Some(n)) => Group::symmetric(n)?,
            _ => return Err(usage("--constant needs exactly one of --cyclic or --sym")),
        };
        let inst = HspInstance::constant(group);
        LabelLayout::new(group)?;
        return Ok((qrand_distribution(&inst)?, describe(&inst, "constant")));
    }
    let path = args
        .instance
        .as_ref()
        .ok_or_else(|| usage("no instance given"))?;
    let inst = read_instance(path)?;
    LabelLayout::new(inst.group())?;
    Ok((qrand_distribution(&inst)?, describe(&inst, "file")))
}

pub fn qrand(args: &QrandArgs, format: Format) -> CliResult<Outcome> {
    if format == Format::Csv && args.shots.is_some() {
        return Err(usage("--shots is only reported in JSON output"));
    }
    let (dist, instance) = qrand_target(args)?;
    if format == Format::Csv {
        let mut buf = Vec::new();
        dist.write_csv(&mut buf)?;
        let csv = String::from_utf8(buf).expect("CSV is UTF-8");
        return Ok(Outcome {
            results: Value::Null,
            checks: Vec::new(),
            csv: Some(csv),
        });
    }
    let mut results = json!({
        "instance": instance,
        "total": dist.total(),
        "support_size": dist.support(1e-15).len(),
        "distribution": dist,
    });
    if let Group::Symmetric { .. } = dist.group() {
        results["weak_marginal"] = to_value(&weak_marginal(&dist));
    }
    if let Some(shots) = args.shots {
        let counts = sample_counts(&dist, args.seed, shots);
        let layout = dist.layout();
        let observed: Vec<Value> = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(pos, &c)| {
                let mut row = to_value(&layout.describe(layout.label_at(pos)));
                row["count"] = json!(c);
                row
            })
            .collect();
        results["samples"] = json!({ "seed": args.seed, "shots": shots, "counts": observed });
    }
    Ok(Outcome::json(results, Vec::new()))
}

pub fn shor(args: &ShorArgs, format: Format) -> CliResult<Outcome> {
    json_only(format, "shor")?;
    validate_factor_modulus(args.n)?;
    if args.rounds == 0 {
        return Err(usage("--rounds must be at least 1"));
    }
    let run = shor_factor(args.n, args.seed, args.rounds)?;
    let factored = matches!(run.factors, Some((p, q)) if p * q == args.n && p > 1 && q > 1);
    let bad_periods: Vec<u64> = run
        .rounds
        .iter()
        .filter_map(|r| r.period.filter(|&p| pow_mod(r.a, p, args.n) != 1))
        .collect();
    let checks = vec![
        Check::new(
            "nontrivial factorization within the round budget",
            factored,
            format!(
                "{} of {} rounds used, factors {:?}",
                run.rounds.len(),
                args.rounds,
                run.factors
            ),
        ),
        Check::new(
            "every recovered period P satisfies a^P = 1 mod N",
            bad_periods.is_empty(),
            format!("violations: {bad_periods:?}"),
        ),
    ];
    Ok(Outcome::json(to_value(&run), checks))
}

pub fn grover(args: &GroverArgs, format: Format) -> CliResult<Outcome> {
    json_only(format, "grover")?;
    if args.qubits == 0 || args.qubits > MAX_GROVER_QUBITS {
        return Err(usage(format!("--n must lie in 1..={MAX_GROVER_QUBITS}")));
    }
    let n = 1usize << args.qubits;
    if args.j0 >= n {
        return Err(usage(format!("--j0 must be below 2^n = {n}")));
    }
    let out = grover_run::<f64>(n, args.j0)?;
    let k = grover_iteration_count(n);
    let bound = 1.0 - 1.0 / n as f64;
    let closed = closed_form_success::<f64>(n, k);
    let mut checks = vec![
        Check::new(
            "success probability >= 1 - 1/N",
            out.success_probability >= bound - 1e-12,
            format!("{} vs bound {bound}", out.success_probability),
        ),
        Check::new(
            "success probability equals sin^2((2K+1) asin(1/sqrt N))",
            (out.success_probability - closed).abs() < 1e-9,
            format!(
                "simulated {}, closed form {closed}",
                out.success_probability
            ),
        ),
    ];
    let mut results = json!({
        "N": n,
        "j0": args.j0,
        "iterations": out.iterations,
        "success_probability": out.success_probability,
        "closed_form": closed,
        "bound": bound,
    });
    if args.shots > 0 {
        let draws = grover_sample_many(n, args.j0, args.seed, args.shots)?;
        let hits = draws.iter().filter(|&&d| d == args.j0).count();
        let p = out.success_probability;
        let sigma = (args.shots as f64 * p * (1.0 - p)).sqrt();
        let floor = args.shots as f64 * bound - 3.0 * sigma;
        checks.push(Check::new(
            "hit count >= shots * (1 - 1/N) within binomial 3 sigma",
            hits as f64 >= floor,
            format!("{hits} hits of {}, floor {floor:.2}", args.shots),
        ));
        results["samples"] = json!({
            "seed": args.seed,
            "shots": args.shots,
            "hits": hits,
            "hit_rate": hits as f64 / args.shots as f64,
            "sigma": sigma,
        });
    }
    Ok(Outcome::json(results, checks))
}

pub fn noinfo(args: &NoinfoArgs, format: Format) -> CliResult<Outcome> {
    let report: NoInfoReport = match (args.group.sym, args.group.cyclic) {
        (Some(n), None) => no_info_experiment_symmetric(n)?,
        (None, Some(n)) => {
            cap("cyclic no-information N", n, MAX_NOINFO_CYCLIC)?;
            no_info_experiment_cyclic(n)?
        }
        _ => return Err(usage("exactly one of --sym or --cyclic is required")),
    };
    let mut checks = Vec::new();
    match args.group.sym {
        Some(_) => checks.push(Check::new(
            "weak marginals agree across j0",
            report.max_marginal_deviation < 1e-9,
            format!("max marginal deviation {:e}", report.max_marginal_deviation),
        )),
        None => {
            let closed = report.closed_form_deviation.unwrap_or(f64::INFINITY);
            checks.push(Check::new(
                "distributions agree across j0",
                report.max_distribution_deviation < 1e-12,
                format!("max deviation {:e}", report.max_distribution_deviation),
            ));
            checks.push(Check::new(
                "distribution equals ((N-1)^2+1)/N^2 at 0 and 2/N^2 elsewhere",
                closed < 1e-12,
                format!("max deviation {closed:e}"),
            ));
            let fibers_ok = report
                .runs
                .iter()
                .all(|r| r.j0 == 0 || r.push_matches_search_oracle == Some(true));
            checks.push(Check::new(
                "pushed oracle fibers equal those of f(j) = [j = j0] for j0 != 0",
                fibers_ok,
                String::new(),
            ));
        }
    }
    if format == Format::Csv {
        let mut buf = Vec::new();
        report.write_marginals_csv(&mut buf)?;
        let csv = String::from_utf8(buf).expect("CSV is UTF-8");
        return Ok(Outcome {
            results: Value::Null,
            checks,
            csv: Some(csv),
        });
    }
    let mut results = to_value(&report);
    if args.summary {
        if let Some(runs) = results["runs"].as_array_mut() {
            for run in runs {
                run.as_object_mut()
                    .expect("run is an object")
                    .remove("distribution");
            }
        }
    }
    Ok(Outcome::json(results, checks))
}
