mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex;
use qhslab::groups::{
    factorial, left_cosets_with_representatives, normal_core, stabilizer_coset_representatives,
    stabilizer_subgroup, Group,
};
use qhslab::grover::{
    closed_form_success, cyclic_closed_form, cyclic_grover_instance, grover_iteration_count,
    grover_run, no_info_experiment_symmetric,
};
use qhslab::hsp::shor_hsp;
use qhslab::qsim::{
    group_fourier_matrix, phi_distribution, qrand_distribution, qrand_distribution_unitary,
};
use qhslab::repr::complete_irrep_set;
use qhslab::shor::{choose_q, gcd, recover_period, shor_factor};

use common::{brute_order, instance_family};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self {
            passed,
            detail: detail.into(),
        }
    }
}

fn with_budget(outcome: Outcome, elapsed: Duration, budget: Option<Duration>) -> Outcome {
    match budget {
        Some(b) if elapsed > b => Outcome::new(
            false,
            format!("{}; over the {:?} budget", outcome.detail, b),
        ),
        _ => outcome,
    }
}

fn grover_bound() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut exact_n4 = f64::NAN;
    for n in 2..=12u32 {
        let size = 1usize << n;
        let mut min_p = f64::INFINITY;
        for j0 in [0, size / 3, size - 1] {
            let out = grover_run::<f64>(size, j0).unwrap();
            min_p = min_p.min(out.success_probability);
            if size == 4 && j0 == 0 {
                exact_n4 = out.success_probability;
            }
        }
        worst = worst.min(min_p - (1.0 - 1.0 / size as f64));
    }
    let passed = worst >= 0.0 && (exact_n4 - 1.0).abs() < 1e-12;
    Outcome::new(
        passed,
        format!("min margin over 1-1/N = {worst:.3e}; N=4 success = {exact_n4:.15}"),
    )
}

fn grover_closed_form() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 1..=12u32 {
        let size = 1usize << n;
        let k = grover_iteration_count(size);
        let analytic = ((2 * k + 1) as f64 * (1.0 / (size as f64).sqrt()).asin())
            .sin()
            .powi(2);
        for j0 in [0, size / 2, size - 1] {
            let out = grover_run::<f64>(size, j0).unwrap();
            worst = worst.max((out.success_probability - analytic).abs());
            worst = worst.max((closed_form_success::<f64>(size, k) - analytic).abs());
        }
    }
    Outcome::new(
        worst < 1e-9,
        format!("max |simulated - sin^2((2K+1)θ)| = {worst:.3e}"),
    )
}

fn shor_end_to_end() -> Outcome {
    let mut lines = Vec::new();
    let mut passed = true;
    for n in [15u64, 21, 33, 35] {
        let mut successes = 0;
        let mut bad_periods = 0;
        for seed in 0..100 {
            let run = shor_factor(n, seed, 20).unwrap();
            for round in &run.rounds {
                if let Some(p) = round.period {
                    if p != brute_order(round.a, n) {
                        bad_periods += 1;
                    }
                }
            }
            if let Some((p, q)) = run.factors {
                if p * q == n && p > 1 && q > 1 {
                    successes += 1;
                }
            }
        }
        passed &= successes >= 99 && bad_periods == 0;
        lines.push(format!(
            "N={n}: {successes}/100, {bad_periods} wrong periods"
        ));
    }
    Outcome::new(passed, lines.join("; "))
}

fn continued_fraction_guarantee() -> Outcome {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for n in 3..=50u64 {
        let q = choose_q(n);
        for a in (2..n).filter(|&a| gcd(a, n) == 1) {
            let p = brute_order(a, n);
            if !q.is_multiple_of(p) {
                continue;
            }
            let dist = qrand_distribution::<f64>(&shor_hsp(n, a).unwrap()).unwrap();
            for (y, &prob) in dist.probabilities().iter().enumerate() {
                if prob < 1e-12 {
                    continue;
                }
                let y = y as u64;
                assert_eq!(y * p % q, 0, "support off the lattice");
                if gcd(y * p / q, p) != 1 {
                    continue;
                }
                checked += 1;
                if recover_period(y, q, n, a) != Some(p) {
                    failures.push(format!("N={n} a={a} y={y}"));
                }
            }
        }
    }
    Outcome::new(
        failures.is_empty() && checked > 0,
        format!(
            "{checked} (N, a, y) triples checked; failures: {:?}",
            failures.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn representation_suite() -> Outcome {
    let mut worst_hom: f64 = 0.0;
    let mut worst_unit: f64 = 0.0;
    let mut worst_schur: f64 = 0.0;
    let mut worst_fourier: f64 = 0.0;
    let mut dims_ok = true;
    for n in 3..=5 {
        let group = Group::symmetric(n).unwrap();
        let order = group.order();
        let irreps = complete_irrep_set::<f64>(group).unwrap();
        dims_ok &= irreps
            .iter()
            .map(|g| g.degree() * g.degree())
            .sum::<usize>()
            == order;
        for gamma in &irreps {
            let table = gamma.table();
            for g in 0..order {
                worst_unit = worst_unit.max(table[g].unitarity_residual());
                for h in 0..order {
                    let prod = &table[g] * &table[h];
                    worst_hom = worst_hom.max(prod.max_abs_diff(&table[group.multiply(g, h)]));
                }
            }
        }
        for (a, ga) in irreps.iter().enumerate() {
            for (b, gb) in irreps.iter().enumerate() {
                let (da, db) = (ga.degree(), gb.degree());
                for i in 0..da {
                    for j in 0..da {
                        for k in 0..db {
                            for l in 0..db {
                                let s: Complex<f64> = (0..order)
                                    .map(|g| ga.table()[g][(i, j)] * gb.table()[g][(k, l)].conj())
                                    .sum();
                                let expected = if a == b && i == k && j == l {
                                    order as f64 / da as f64
                                } else {
                                    0.0
                                };
                                worst_schur =
                                    worst_schur.max((s - Complex::new(expected, 0.0)).norm());
                            }
                        }
                    }
                }
            }
        }
        worst_fourier = worst_fourier.max(
            group_fourier_matrix::<f64>(group)
                .unwrap()
                .unitarity_residual(),
        );
    }
    let passed = dims_ok
        && worst_hom < 1e-9
        && worst_unit < 1e-9
        && worst_schur < 1e-9
        && worst_fourier < 1e-9;
    Outcome::new(
        passed,
        format!(
            "sum d^2 = |G|: {dims_ok}; homomorphism {worst_hom:.1e}, unitarity {worst_unit:.1e}, Schur {worst_schur:.1e}, Fourier {worst_fourier:.1e}"
        ),
    )
}

fn qrand_dual_path() -> Outcome {
    let family = instance_family(120);
    let mut worst_diff: f64 = 0.0;
    let mut worst_norm: f64 = 0.0;
    let mut worst_name = String::new();
    for (name, inst) in &family {
        let closed = phi_distribution::<f64>(inst).unwrap();
        let routed = qrand_distribution::<f64>(inst).unwrap();
        let unitary = qrand_distribution_unitary::<f64>(inst).unwrap();
        let diff = closed
            .max_abs_diff(&unitary)
            .max(routed.max_abs_diff(&unitary));
        if diff > worst_diff {
            worst_diff = diff;
            worst_name.clone_from(name);
        }
        for d in [&closed, &routed, &unitary] {
            worst_norm = worst_norm.max((d.total() - 1.0).abs());
        }
    }
    Outcome::new(
        worst_diff < 1e-9 && worst_norm < 1e-9,
        format!(
            "{} instances; max path difference {worst_diff:.1e} ({worst_name}); max |sum - 1| {worst_norm:.1e}",
            family.len()
        ),
    )
}

fn coset_proposition() -> Outcome {
    let mut passed = true;
    let mut cases = 0;
    for n in 3..=6 {
        let group = Group::symmetric(n).unwrap();
        for j0 in 0..n {
            let k = stabilizer_subgroup(n, j0).unwrap();
            let reps: Vec<usize> = stabilizer_coset_representatives(n, j0)
                .unwrap()
                .iter()
                .map(|p| group.permutation_index(p).unwrap())
                .collect();
            let cosets = left_cosets_with_representatives(&k, &reps).unwrap();
            let mut seen = vec![0u8; group.order()];
            for c in &cosets {
                for &g in c.members() {
                    seen[g] += 1;
                }
            }
            let distinct = (0..cosets.len())
                .all(|a| (a + 1..cosets.len()).all(|b| !cosets[a].same_as(&cosets[b])));
            passed &= cosets.len() == n
                && distinct
                && cosets.iter().all(|c| c.len() == factorial(n - 1))
                && seen.iter().all(|&s| s == 1);
            cases += 1;
        }
    }
    Outcome::new(passed, format!("{cases} (N, j0) cases, N = 3..6"))
}

fn normal_core_trivial() -> Outcome {
    let mut passed = true;
    let mut cases = 0;
    for n in 3..=6 {
        for j0 in 0..n {
            passed &= normal_core(&stabilizer_subgroup(n, j0).unwrap()).is_trivial();
            cases += 1;
        }
    }
    Outcome::new(passed, format!("{cases} (N, j0) cases, N = 3..6"))
}

fn no_info_cyclic() -> Outcome {
    let mut worst_closed: f64 = 0.0;
    let mut worst_cross: f64 = 0.0;
    let mut push_ok = true;
    for n in 2..=1024usize {
        let mut reference: Option<Vec<f64>> = None;
        for j0 in 0..n {
            let (inst, matches) = cyclic_grover_instance(n, j0).unwrap();
            push_ok &= j0 == 0 || matches;
            let dist = qrand_distribution::<f64>(&inst).unwrap();
            let p = dist.probabilities();
            for (y, &py) in p.iter().enumerate() {
                worst_closed = worst_closed.max((py - cyclic_closed_form::<f64>(n, y)).abs());
            }
            match &reference {
                None => reference = Some(p.to_vec()),
                Some(r) => {
                    worst_cross = worst_cross.max(
                        r.iter()
                            .zip(p)
                            .map(|(a, b)| (a - b).abs())
                            .fold(0.0, f64::max),
                    )
                }
            }
        }
    }
    Outcome::new(
        worst_closed < 1e-12 && worst_cross < 1e-12 && push_ok,
        format!(
            "N = 2..1024, all j0: max closed-form deviation {worst_closed:.1e}, cross-j0 {worst_cross:.1e}, pushed fibers match: {push_ok}"
        ),
    )
}

fn no_info_symmetric() -> Outcome {
    let mut passed = true;
    let mut notes = Vec::new();
    for n in 3..=5 {
        let report = no_info_experiment_symmetric::<f64>(n).unwrap();
        passed &= report.max_marginal_deviation < 1e-9;
        notes.push(format!(
            "N={n}: marginal spread {:.1e}, full spread {:.1e}",
            report.max_marginal_deviation, report.max_distribution_deviation
        ));
        if n == 3 {
            let m = &report.runs[0].marginal;
            let got = [
                m.of_partition(&[3]).unwrap(),
                m.of_partition(&[1, 1, 1]).unwrap(),
                m.of_partition(&[2, 1]).unwrap(),
            ];
            let expected = [1.0 / 3.0, 0.0, 2.0 / 3.0];
            passed &= got.iter().zip(expected).all(|(g, e)| (g - e).abs() < 1e-9);
            notes.push(format!(
                "N=3 (trivial, sign, standard) = ({:.6}, {:.6}, {:.6})",
                got[0], got[1], got[2]
            ));
        }
    }
    Outcome::new(passed, notes.join("; "))
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "C1 grover success bound",
            grover_bound,
            Some(Duration::from_secs(5)),
        ),
        ("C2 grover closed form", grover_closed_form, None),
        (
            "C3 shor end-to-end",
            shor_end_to_end,
            Some(Duration::from_secs(30)),
        ),
        (
            "C4 continued-fraction guarantee",
            continued_fraction_guarantee,
            None,
        ),
        (
            "C5 representation suite",
            representation_suite,
            Some(Duration::from_secs(60)),
        ),
        ("C6 qrand dual-path equivalence", qrand_dual_path, None),
        ("C7 stabilizer coset proposition", coset_proposition, None),
        ("C8 normal core of stabilizers", normal_core_trivial, None),
        ("C9 no-information, cyclic form", no_info_cyclic, None),
        (
            "C10 no-information, symmetric form",
            no_info_symmetric,
            None,
        ),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = with_budget(outcome, elapsed, budget);
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} {name}: {} [{} ms]",
            outcome.detail,
            elapsed.as_millis()
        );
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
