#![allow(dead_code)]

use qhslab::groups::{left_cosets, stabilizer_subgroup, Group, Permutation, Subgroup};
use qhslab::hsp::{grover_hsp, HspInstance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The oracle `g ↦ index of the left coset of K containing g`.
pub fn coset_instance(k: &Subgroup) -> HspInstance {
    let group = k.group();
    let cosets = left_cosets(k);
    let mut oracle = vec![0; group.order()];
    for (c, coset) in cosets.iter().enumerate() {
        for &g in coset.members() {
            oracle[g] = c;
        }
    }
    HspInstance::new(group, cosets.len(), oracle, Some(k.clone())).unwrap()
}

/// Subgroup generated by the given elements (closure under multiplication).
pub fn generated(group: Group, gens: &[usize]) -> Subgroup {
    let mut elems = vec![group.identity()];
    let mut frontier = elems.clone();
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = group.multiply(x, s);
            if !elems.contains(&y) {
                elems.push(y);
                frontier.push(y);
            }
        }
    }
    Subgroup::new(group, elems).unwrap()
}

pub fn random_oracle(group: Group, target: usize, seed: u64) -> HspInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let oracle = (0..group.order())
        .map(|_| rng.gen_range(0..target))
        .collect();
    HspInstance::new(group, target, oracle, None).unwrap()
}

/// Every instance family exercised for the two QRand routes, over all groups of order at most `max_order`.
pub fn instance_family(max_order: usize) -> Vec<(String, HspInstance)> {
    let mut out = Vec::new();
    for q in 1..=max_order {
        let group = Group::cyclic(q).unwrap();
        out.push((format!("Z_{q} constant"), HspInstance::constant(group)));
        for d in (1..=q).filter(|d| q % d == 0) {
            let k = generated(group, &[d % q]);
            out.push((format!("Z_{q} cosets of <{d}>"), coset_instance(&k)));
        }
        for j0 in [0, q / 2, q - 1] {
            let oracle = (0..q).map(|j| usize::from(j == j0)).collect();
            out.push((
                format!("Z_{q} search j0={j0}"),
                HspInstance::new(group, 2, oracle, None).unwrap(),
            ));
        }
        out.push((format!("Z_{q} random"), random_oracle(group, 3, q as u64)));
    }
    for n in 1..=6 {
        let group = Group::symmetric(n).unwrap();
        if group.order() > max_order {
            break;
        }
        out.push((format!("S_{n} constant"), HspInstance::constant(group)));
        out.push((
            format!("S_{n} injective"),
            coset_instance(&Subgroup::trivial(group)),
        ));
        let even: Vec<usize> = (0..group.order())
            .filter(|&g| group.permutation(g).unwrap().sign() == 1)
            .collect();
        out.push((
            format!("S_{n} cosets of A_{n}"),
            coset_instance(&Subgroup::new(group, even).unwrap()),
        ));
        for j0 in 0..n {
            out.push((format!("S_{n} grover j0={j0}"), grover_hsp(n, j0).unwrap()));
            out.push((
                format!("S_{n} cosets of Stab_{j0}"),
                coset_instance(&stabilizer_subgroup(n, j0).unwrap()),
            ));
        }
        if n >= 2 {
            let cycle: Vec<usize> = (1..n).chain([0]).collect();
            let c = group
                .permutation_index(&Permutation::new(cycle).unwrap())
                .unwrap();
            out.push((
                format!("S_{n} cosets of <n-cycle>"),
                coset_instance(&generated(group, &[c])),
            ));
            let t = group
                .permutation_index(&Permutation::transposition(0, 1, n).unwrap())
                .unwrap();
            out.push((
                format!("S_{n} cosets of <(0 1)>"),
                coset_instance(&generated(group, &[t])),
            ));
        }
        for seed in 0..3 {
            out.push((
                format!("S_{n} random #{seed}"),
                random_oracle(group, 4, 1000 + seed),
            ));
        }
    }
    out
}

/// `ord_N(a)` by repeated multiplication.
pub fn brute_order(a: u64, n: u64) -> u64 {
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = x * a % n;
        k += 1;
    }
    k
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
