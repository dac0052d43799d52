mod common;

use proptest::prelude::*;
use qhslab::shor::{
    choose_q, convergents, multiplicative_order, pow_mod, recover_period, shor_factor,
    shor_outcome_distribution, validate_factor_modulus,
};

use common::{brute_order, gcd};

#[test]
fn multiplicative_order_matches_brute_force() {
    for n in 2..200u64 {
        for a in (1..n).filter(|&a| gcd(a, n) == 1) {
            assert_eq!(multiplicative_order(a, n).unwrap(), brute_order(a, n));
        }
    }
}

#[test]
fn documented_recoveries() {
    assert_eq!(recover_period(128, 256, 15, 4), Some(2));
    assert_eq!(recover_period(0, 256, 15, 2), None);
    assert_eq!(recover_period(64, 256, 15, 2), Some(4));
    assert_eq!(recover_period(192, 256, 15, 7), Some(4));
}

proptest! {
    #[test]
    fn recovered_periods_satisfy_the_congruence(n in 3u64..200, a in 2u64..200, y in 0u64..65536) {
        prop_assume!(a < n && gcd(a, n) == 1);
        let q = choose_q(n);
        if let Some(p) = recover_period(y % q, q, n, a) {
            prop_assert_eq!(pow_mod(a, p, n), 1);
            prop_assert_eq!(p, brute_order(a, n));
        }
    }

    #[test]
    fn convergents_approach_the_fraction(y in 0u64..4096, q in 1u64..4097) {
        prop_assume!(y < q);
        let cs = convergents(y, q);
        let last = cs.last().unwrap();
        prop_assert_eq!(last.numerator * q, y * last.denominator);
        for w in cs.windows(2) {
            prop_assert!(w[0].denominator <= w[1].denominator);
        }
    }
}

#[test]
fn samples_lie_on_the_lattice_when_the_period_divides_q() {
    for n in 3..=50u64 {
        let q = choose_q(n);
        for a in (2..n).filter(|&a| gcd(a, n) == 1) {
            let p = brute_order(a, n);
            if !q.is_multiple_of(p) {
                continue;
            }
            let dist = shor_outcome_distribution::<f64>(n, a).unwrap();
            for (y, &prob) in dist.iter().enumerate() {
                if prob > 1e-12 {
                    assert_eq!((y as u64) % (q / p), 0);
                    assert!((prob - 1.0 / p as f64).abs() < 1e-9);
                }
            }
        }
    }
}

/// Probability mass of `y` values from which the true order is recovered,
/// for every `(N, a)` with `N ≤ 50` whose order does not divide `Q`.
#[test]
fn recovery_probability_when_the_period_does_not_divide_q() {
    let mut worst = (1.0f64, 0u64, 0u64);
    let mut instances = 0;
    for n in 3..=50u64 {
        let q = choose_q(n);
        for a in (2..n).filter(|&a| gcd(a, n) == 1) {
            let p = brute_order(a, n);
            if q.is_multiple_of(p) {
                continue;
            }
            instances += 1;
            let dist = shor_outcome_distribution::<f64>(n, a).unwrap();
            let mass: f64 = dist
                .iter()
                .enumerate()
                .filter(|&(y, _)| recover_period(y as u64, q, n, a) == Some(p))
                .map(|(_, &prob)| prob)
                .sum();
            if mass < worst.0 {
                worst = (mass, n, a);
            }
        }
    }
    println!(
        "{instances} instances; lowest recovery probability {:.4} at N={} a={}",
        worst.0, worst.1, worst.2
    );
    assert!(worst.0 >= 0.4);
}

#[test]
fn analytic_and_simulated_distributions_agree() {
    use qhslab::hsp::shor_hsp;
    use qhslab::qsim::qrand_distribution;
    use qhslab::shor::periodic_oracle_distribution;
    for (n, a) in [(15u64, 7u64), (21, 2), (33, 5), (35, 3), (39, 7)] {
        let q = choose_q(n);
        let sim = qrand_distribution::<f64>(&shor_hsp(n, a).unwrap()).unwrap();
        let analytic = periodic_oracle_distribution::<f64>(q, brute_order(a, n));
        let diff = sim
            .probabilities()
            .iter()
            .zip(&analytic)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(diff < 1e-12, "N={n} a={a}: {diff}");
    }
}

#[test]
fn factoring_is_deterministic_and_correct() {
    for n in [15u64, 21, 33, 35, 39, 51, 55, 57, 65, 77, 91, 143] {
        let run = shor_factor(n, 2024, 30).unwrap();
        assert_eq!(run, shor_factor(n, 2024, 30).unwrap());
        let (p, q) = run.clone().into_factors().unwrap();
        assert_eq!(p * q, n);
        assert!(p > 1 && p <= q);
        let last = run.rounds.last().unwrap();
        assert!(last.accepted);
        assert_eq!(last.period, Some(brute_order(last.a, n)));
    }
}

#[test]
fn large_modulus_uses_the_analytic_route() {
    let run = shor_factor(667, 3, 20).unwrap();
    assert_eq!(run.q, 1 << 19);
    assert_eq!(run.factors, Some((23, 29)));
}

#[test]
fn run_log_json_shape() {
    let run = shor_factor(15, 7, 20).unwrap();
    let v = serde_json::to_value(&run).unwrap();
    assert_eq!(v["N"], 15);
    assert_eq!(v["Q"], 256);
    assert_eq!(v["factors"], serde_json::json!([3, 5]));
    let round = &v["rounds"][0];
    for key in ["y", "convergents", "period", "accepted"] {
        assert!(round.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn invalid_moduli() {
    for n in [1u64, 2, 4, 9, 13, 16, 25, 27, 49, 97, 4097] {
        assert!(validate_factor_modulus(n).is_err(), "{n}");
        assert!(shor_factor(n, 0, 5).is_err());
    }
}
