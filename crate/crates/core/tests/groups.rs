mod common;

use proptest::prelude::*;
use qhslab::groups::{
    are_conjugate, factorial, left_cosets, left_cosets_with_representatives,
    stabilizer_coset_representatives, stabilizer_subgroup, Group, Permutation, Subgroup,
};
use qhslab::hsp::{
    fibers, grover_hsp, push, push_grover_oracle, verify_hidden_structure, PushSpec,
};

use common::{coset_instance, generated};

fn perm_strategy(n: usize) -> impl Strategy<Value = usize> {
    0..factorial(n)
}

proptest! {
    #[test]
    fn composition_is_associative_in_s6(g in perm_strategy(6), h in perm_strategy(6), k in perm_strategy(6)) {
        let s6 = Group::symmetric(6).unwrap();
        prop_assert_eq!(s6.multiply(s6.multiply(g, h), k), s6.multiply(g, s6.multiply(h, k)));
    }

    #[test]
    fn composition_matches_pointwise_definition(g in perm_strategy(5), h in perm_strategy(5)) {
        let (pg, ph) = (Permutation::unrank(5, g), Permutation::unrank(5, h));
        let gh = pg.compose(&ph).unwrap();
        for x in 0..5 {
            prop_assert_eq!(gh.apply(x), pg.apply(ph.apply(x)));
        }
    }

    #[test]
    fn cosets_of_generated_subgroups_partition(a in perm_strategy(5), b in perm_strategy(5)) {
        let s5 = Group::symmetric(5).unwrap();
        let k = generated(s5, &[a, b]);
        let cosets = left_cosets(&k);
        let mut hits = vec![0; s5.order()];
        for c in &cosets {
            prop_assert_eq!(c.len(), k.order());
            for &g in c.members() {
                hits[g] += 1;
            }
        }
        prop_assert!(hits.iter().all(|&h| h == 1));
        prop_assert_eq!(cosets.len() * k.order(), 120);
    }

    #[test]
    fn coset_oracles_reveal_their_subgroup(a in perm_strategy(4)) {
        let s4 = Group::symmetric(4).unwrap();
        let k = generated(s4, &[a]);
        let inst = coset_instance(&k);
        let hidden = verify_hidden_structure(&inst, &k).unwrap();
        prop_assert_eq!(inst.distinct_values(), k.index_in_parent());
        prop_assert_eq!(hidden.cosets().len(), k.index_in_parent());
    }
}

#[test]
fn associativity_exhaustive_up_to_s4() {
    for n in 1..=4 {
        let g = Group::symmetric(n).unwrap();
        let m = g.order();
        for a in 0..m {
            for b in 0..m {
                let ab = g.multiply(a, b);
                for c in 0..m {
                    assert_eq!(g.multiply(ab, c), g.multiply(a, g.multiply(b, c)));
                }
            }
        }
    }
}

#[test]
fn stabilizer_orders() {
    for n in 1..=6 {
        for j0 in 0..n {
            assert_eq!(
                stabilizer_subgroup(n, j0).unwrap().order() * n,
                factorial(n)
            );
        }
    }
}

#[test]
fn proposition_representatives_hit_each_coset_once() {
    for n in 2..=6 {
        let group = Group::symmetric(n).unwrap();
        for j0 in 0..n {
            let k = stabilizer_subgroup(n, j0).unwrap();
            let reps: Vec<usize> = stabilizer_coset_representatives(n, j0)
                .unwrap()
                .iter()
                .map(|p| group.permutation_index(p).unwrap())
                .collect();
            let cosets = left_cosets_with_representatives(&k, &reps).unwrap();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(
                        cosets[a].same_as(&cosets[b]),
                        a == b,
                        "N={n} j0={j0} k={a} l={b}"
                    );
                }
            }
        }
    }
}

#[test]
fn stabilizers_are_mutually_conjugate() {
    let n = 5;
    let group = Group::symmetric(n).unwrap();
    let base = stabilizer_subgroup(n, 0).unwrap();
    for j in 1..n {
        let target = stabilizer_subgroup(n, j).unwrap();
        let g = are_conjugate(&base, &target)
            .unwrap()
            .expect("stabilizers are conjugate");
        assert_eq!(base.conjugate_by(g), target);
        assert_eq!(group.permutation(g).unwrap().apply(0), j);
    }
    let even: Vec<usize> = (0..group.order())
        .filter(|&g| group.permutation(g).unwrap().sign() == 1)
        .collect();
    let a5 = Subgroup::new(group, even).unwrap();
    assert!(a5.is_normal());
    assert_eq!(are_conjugate(&base, &a5).unwrap(), None);
}

#[test]
fn grover_oracle_is_constant_exactly_on_stabilizer_cosets() {
    for n in 1..=4 {
        let group = Group::symmetric(n).unwrap();
        for j0 in 0..n {
            let inst = grover_hsp(n, j0).unwrap();
            let k = stabilizer_subgroup(n, j0).unwrap();
            for g in 0..group.order() {
                for h in 0..group.order() {
                    let same_coset = k.contains(group.multiply(group.inverse(g), h));
                    assert_eq!(inst.value(g) == inst.value(h), same_coset);
                }
            }
            verify_hidden_structure(&inst, &k).unwrap();
        }
    }
}

#[test]
fn push_is_precomposition_with_the_section() {
    for n in 1..=5 {
        let spec = PushSpec::stabilizer_quotient(n).unwrap();
        let group = Group::symmetric(n).unwrap();
        for j0 in 0..n {
            let inst = grover_hsp(n, j0).unwrap();
            let pushed = push(&inst, &spec).unwrap();
            for x in 0..n {
                let tau = group
                    .permutation_index(&Permutation::transposition(0, x, n).unwrap())
                    .unwrap();
                assert_eq!(pushed.values[x], inst.value(tau));
            }
            assert_eq!(pushed.values, push_grover_oracle(n, j0).unwrap());
        }
    }
}

#[test]
fn pushed_grover_fibers_split_off_the_marked_label() {
    for n in 2..=40 {
        for j0 in 1..n {
            let f = fibers(&push_grover_oracle(n, j0).unwrap());
            let rest: Vec<usize> = (0..n).filter(|&j| j != j0).collect();
            let mut expected = vec![vec![j0], rest];
            expected.sort();
            assert_eq!(f, expected);
        }
    }
}
