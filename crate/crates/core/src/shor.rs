//! Shor's algorithm on the pushed oracle `Z_Q → Z_N^×`: QRand sampling of a
//! character `y/Q`, continued-fraction recovery of the period, and factoring.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hsp::shor_hsp;
use crate::qsim::{inverse_cdf, qrand_distribution};
use crate::scalar::Real;

/// Above this `Q` the outcome distribution is evaluated from closed-form
/// geometric sums instead of transforming the oracle table.
pub const DENSE_Q_LIMIT: u64 = 1 << 12;

/// Candidate periods are also tried at `k·P` for `k` up to this bound.
pub const MAX_PERIOD_MULTIPLE: u64 = 6;

/// Largest modulus accepted by [`shor_factor`].
pub const MAX_FACTOR_MODULUS: u64 = 4096;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// The unique power of two with `N² ≤ Q < 2N²`.
pub fn choose_q(n: u64) -> u64 {
    (n * n).next_power_of_two()
}

/// Least `P ≥ 1` with `a^P ≡ 1 (mod N)`, by brute force.
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64> {
    if n < 2 || gcd(a, n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    let a = a % n;
    let mut x = a;
    let mut p = 1;
    while x != 1 {
        x = (x as u128 * a as u128 % n as u128) as u64;
        p += 1;
    }
    Ok(p)
}

/// Continued-fraction convergent `d/P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Convergent {
    pub numerator: u64,
    pub denominator: u64,
}

/// All convergents of `y/Q`, in order.
pub fn convergents(y: u64, q: u64) -> Vec<Convergent> {
    // (h_{n-2}, h_{n-1}) and (k_{n-2}, k_{n-1})
    let (mut h2, mut h1) = (0u64, 1u64);
    let (mut k2, mut k1) = (1u64, 0u64);
    let (mut num, mut den) = (y, q);
    let mut out = Vec::new();
    while den != 0 {
        let a = num / den;
        let (h, k) = (a * h1 + h2, a * k1 + k2);
        (h2, h1) = (h1, h);
        (k2, k1) = (k1, k);
        out.push(Convergent {
            numerator: h,
            denominator: k,
        });
        (num, den) = (den, num % den);
    }
    out
}

/// `|y/Q − d/P| ≤ 1/(2P²)` in exact integer arithmetic.
pub fn is_close_convergent(y: u64, q: u64, c: Convergent) -> bool {
    let lhs = 2
        * c.denominator as i128
        * (y as i128 * c.denominator as i128 - c.numerator as i128 * q as i128).abs();
    lhs <= q as i128
}

/// Shrinks a verified multiple `m` of `ord_N(a)` to the order itself by
/// dividing out prime factors while `a^(m/p) ≡ 1` still holds.
pub fn reduce_to_order(a: u64, mut m: u64, n: u64) -> u64 {
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            while m.is_multiple_of(p) && pow_mod(a, m / p, n) == 1 {
                m /= p;
            }
        }
        p += 1;
    }
    if rest > 1 && m.is_multiple_of(rest) && pow_mod(a, m / rest, n) == 1 {
        m /= rest;
    }
    m
}

/// Period from a measured `y`: the least verified `k·P` over convergents
/// `d/P` of `y/Q` with `P < N` that satisfy the closeness bound, reduced to
/// the exact order.
///
/// A `0/P` convergent says nothing about the period, so it is only tested at `k = 1`.
pub fn recover_period(y: u64, q: u64, n: u64, a: u64) -> Option<u64> {
    if gcd(a, n) != 1 {
        return None;
    }
    let mut best: Option<u64> = None;
    for c in convergents(y, q) {
        if c.denominator >= n {
            break;
        }
        if !is_close_convergent(y, q, c) {
            continue;
        }
        let multiples = if c.numerator == 0 {
            1
        } else {
            MAX_PERIOD_MULTIPLE
        };
        if let Some(p) = (1..=multiples)
            .map(|k| k * c.denominator)
            .find(|&p| pow_mod(a, p, n) == 1)
        {
            best = Some(best.map_or(p, |b| b.min(p)));
        }
    }
    best.map(|m| reduce_to_order(a, m, n))
}

/// Exact distribution of `y` for an oracle on `Z_Q` with exact period `P`
/// (distinct values within one period): for each residue class the fiber
/// contributes the geometric sum `|Σ_{l<L} exp(−2πi·l·yP/Q)|²`.
pub fn periodic_oracle_distribution<T: Real>(q: u64, period: u64) -> Vec<T> {
    let base = q / period;
    let extra = q % period;
    let q_f = q as f64;
    let weight = |len: u64, x: u64| -> f64 {
        // sin²(π·L·x/Q)/sin²(π·x/Q), reducing L·x mod Q first
        let num =
            (std::f64::consts::PI * ((len as u128 * x as u128) % q as u128) as f64 / q_f).sin();
        let den = (std::f64::consts::PI * x as f64 / q_f).sin();
        (num * num) / (den * den)
    };
    (0..q)
        .map(|y| {
            let x = ((y as u128 * period as u128) % q as u128) as u64;
            let total = if x == 0 {
                (extra * (base + 1) * (base + 1) + (period - extra) * base * base) as f64
            } else {
                extra as f64 * weight(base + 1, x) + (period - extra) as f64 * weight(base, x)
            };
            T::from_f64_lossy(total / (q_f * q_f))
        })
        .collect()
}

/// Exact distribution of the measured `y` for `shor_hsp(N, a)`.
pub fn shor_outcome_distribution<T: Real>(n: u64, a: u64) -> Result<Vec<T>> {
    let q = choose_q(n);
    if q <= DENSE_Q_LIMIT {
        let dist = qrand_distribution::<T>(&shor_hsp(n, a)?)?;
        Ok(dist.probabilities().to_vec())
    } else {
        if gcd(a, n) != 1 {
            return Err(Error::NotCoprime { a, n });
        }
        Ok(periodic_oracle_distribution(q, multiplicative_order(a, n)?))
    }
}

/// One attempt of the factoring loop.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShorRound {
    pub index: usize,
    pub a: u64,
    /// Draws of `a` sharing a factor with `N`, as `(a, gcd)`; these are redrawn.
    pub skipped_non_coprime: Vec<(u64, u64)>,
    pub y: u64,
    pub convergents: Vec<Convergent>,
    pub period: Option<u64>,
    pub accepted: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShorRun {
    #[serde(rename = "N")]
    pub n: u64,
    /// Base of the accepted round, if any.
    pub a: Option<u64>,
    #[serde(rename = "Q")]
    pub q: u64,
    pub rounds: Vec<ShorRound>,
    pub factors: Option<(u64, u64)>,
}

impl ShorRun {
    pub fn into_factors(self) -> Result<(u64, u64)> {
        self.factors
            .ok_or(Error::RoundsExhausted(self.rounds.len()))
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn is_prime_power(n: u64) -> bool {
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap_or(n);
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

pub fn validate_factor_modulus(n: u64) -> Result<()> {
    if n < 15 || n.is_multiple_of(2) {
        return Err(Error::InvalidModulus {
            n,
            reason: "must be an odd composite",
        });
    }
    if n > MAX_FACTOR_MODULUS {
        return Err(Error::TooLarge {
            what: "modulus N",
            size: n as usize,
            cap: MAX_FACTOR_MODULUS as usize,
        });
    }
    if is_prime(n) {
        return Err(Error::InvalidModulus {
            n,
            reason: "is prime",
        });
    }
    if is_prime_power(n) {
        return Err(Error::InvalidModulus {
            n,
            reason: "is a prime power",
        });
    }
    Ok(())
}

/// Shor's factoring loop. Round `r` draws from its own ChaCha stream of `seed`,
/// so rounds are reproducible independently of one another.
pub fn shor_factor(n: u64, seed: u64, max_rounds: usize) -> Result<ShorRun> {
    validate_factor_modulus(n)?;
    let q = choose_q(n);
    let mut cache: HashMap<u64, Vec<f64>> = HashMap::new();
    let mut run = ShorRun {
        n,
        a: None,
        q,
        rounds: Vec::new(),
        factors: None,
    };
    for index in 0..max_rounds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index as u64);
        let mut skipped = Vec::new();
        let a = loop {
            let a = rng.gen_range(2..n);
            match gcd(a, n) {
                1 => break a,
                g => skipped.push((a, g)),
            }
        };
        let dist = match cache.get(&a) {
            Some(d) => d,
            None => cache
                .entry(a)
                .or_insert(shor_outcome_distribution::<f64>(n, a)?),
        };
        let y = inverse_cdf(dist, rng.gen::<f64>()) as u64;
        let period = recover_period(y, q, n, a);
        let mut round = ShorRound {
            index,
            a,
            skipped_non_coprime: skipped,
            y,
            convergents: convergents(y, q),
            period,
            accepted: false,
            note: String::new(),
        };
        match period {
            None => round.note = "no period recovered".into(),
            Some(p) if p % 2 == 1 => round.note = format!("odd period {p}"),
            Some(p) => {
                let half = pow_mod(a, p / 2, n);
                if half == n - 1 {
                    round.note = format!("a^(P/2) = -1 mod N for P = {p}");
                } else {
                    let f = [gcd(half + n - 1, n), gcd(half + 1, n)]
                        .into_iter()
                        .find(|&f| f > 1 && f < n);
                    match f {
                        Some(f) => {
                            let pair = (f.min(n / f), f.max(n / f));
                            round.accepted = true;
                            round.note = format!("factored with P = {p}");
                            run.factors = Some(pair);
                            run.a = Some(a);
                        }
                        None => round.note = format!("trivial gcd for P = {p}"),
                    }
                }
            }
        }
        let done = round.accepted;
        run.rounds.push(round);
        if done {
            break;
        }
    }
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_to_order() {
        assert_eq!(reduce_to_order(20, 160, 33), 10);
        assert_eq!(reduce_to_order(2, 4, 15), 4);
        assert_eq!(reduce_to_order(7, 4 * 9 * 5, 15), 4);
        assert_eq!(recover_period(1856, 2048, 33, 20), Some(10));
        for n in 3..60u64 {
            for a in (2..n).filter(|&a| gcd(a, n) == 1) {
                let ord = multiplicative_order(a, n).unwrap();
                for k in 1..8 {
                    assert_eq!(reduce_to_order(a, k * ord, n), ord);
                }
            }
        }
    }

    #[test]
    fn choose_q_examples() {
        assert_eq!(choose_q(15), 256);
        assert_eq!(choose_q(21), 512);
        assert_eq!(choose_q(2), 4);
        for n in 2..200u64 {
            let q = choose_q(n);
            assert!(q.is_power_of_two() && n * n <= q && q < 2 * n * n);
        }
    }

    #[test]
    fn convergent_examples() {
        let c = convergents(64, 256);
        assert_eq!(
            c.last().unwrap(),
            &Convergent {
                numerator: 1,
                denominator: 4
            }
        );
        assert_eq!(
            convergents(0, 256),
            vec![Convergent {
                numerator: 0,
                denominator: 1
            }]
        );
        assert!(convergents(85, 256).contains(&Convergent {
            numerator: 1,
            denominator: 3
        }));
        assert!(is_close_convergent(
            85,
            256,
            Convergent {
                numerator: 1,
                denominator: 3
            }
        ));
    }

    #[test]
    fn convergents_are_reduced_and_increasing() {
        for y in 0..512 {
            let cs = convergents(y, 512);
            assert!(cs
                .windows(2)
                .all(|w| w[0].denominator < w[1].denominator || w[0].numerator == 0));
            for c in &cs {
                assert_eq!(gcd(c.numerator, c.denominator), 1);
            }
            let last = cs.last().unwrap();
            assert_eq!(last.numerator * 512, y * last.denominator);
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(2, 15).unwrap(), 4);
        assert_eq!(multiplicative_order(4, 15).unwrap(), 2);
        assert_eq!(multiplicative_order(1, 15).unwrap(), 1);
        assert!(multiplicative_order(6, 15).is_err());
    }

    #[test]
    fn recover_period_examples() {
        assert_eq!(recover_period(192, 256, 15, 2), Some(4));
        assert_eq!(recover_period(0, 256, 15, 2), None);
        assert_eq!(recover_period(64, 256, 15, 7), Some(4));
        assert_eq!(recover_period(0, 256, 15, 1), Some(1));
    }

    #[test]
    fn analytic_and_fft_distributions_agree() {
        for (n, a) in [(15u64, 2u64), (21, 2), (33, 5), (35, 3), (39, 7)] {
            let fft = qrand_distribution::<f64>(&shor_hsp(n, a).unwrap()).unwrap();
            let analytic = periodic_oracle_distribution::<f64>(
                choose_q(n),
                multiplicative_order(a, n).unwrap(),
            );
            let diff = fft
                .probabilities()
                .iter()
                .zip(&analytic)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            assert!(diff < 1e-12, "N={n} a={a}: {diff}");
        }
    }

    #[test]
    fn analytic_distribution_sums_to_one_for_large_q() {
        let total: f64 = shor_outcome_distribution::<f64>(91, 2)
            .unwrap()
            .iter()
            .sum();
        assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn factor_modulus_validation() {
        assert!(matches!(
            shor_factor(9, 0, 5),
            Err(Error::InvalidModulus { .. })
        ));
        assert!(matches!(
            shor_factor(16, 0, 5),
            Err(Error::InvalidModulus { .. })
        ));
        assert!(matches!(
            shor_factor(13, 0, 5),
            Err(Error::InvalidModulus { .. })
        ));
        assert!(matches!(
            shor_factor(27, 0, 5),
            Err(Error::InvalidModulus { .. })
        ));
        assert!(validate_factor_modulus(45).is_ok());
    }

    #[test]
    fn factors_small_moduli() {
        assert_eq!(shor_factor(15, 3, 20).unwrap().factors, Some((3, 5)));
        assert_eq!(shor_factor(21, 3, 20).unwrap().factors, Some((3, 7)));
    }

    #[test]
    fn run_is_deterministic_and_exhaustion_is_reported() {
        assert_eq!(
            shor_factor(33, 11, 20).unwrap(),
            shor_factor(33, 11, 20).unwrap()
        );
        let run = shor_factor(35, 0, 0).unwrap();
        assert_eq!(run.into_factors(), Err(Error::RoundsExhausted(0)));
    }
}
