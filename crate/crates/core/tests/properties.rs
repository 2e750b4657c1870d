use std::collections::HashMap;

use cycle_mixer::abacus::{
    abacus_sign, core_and_quotient, default_bead_count, reconstruct, rim_tableau_count, to_abacus,
};
use cycle_mixer::bratteli::{mn_induce, mn_restrict, tensor_power, VirtualDecomposition};
use cycle_mixer::characters::{character_value, class_size, CycleType};
use cycle_mixer::numbers::factorial;
use cycle_mixer::partition::partitions_of;
use cycle_mixer::sim::{count_j_cycles, sample_step};
use cycle_mixer::walk::WalkKind;
use cycle_mixer::{BigInt, BigUint, Partition};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn partition_upto(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

// (λ ⊢ n, μ ⊢ n − j, j)
fn adjoint_pair() -> impl Strategy<Value = (Partition, Partition, usize)> {
    (partition_upto(10), 1usize..4).prop_filter("j < n", |(l, j)| *j < l.size()).prop_flat_map(|(l, j)| {
        let smaller = partitions_of(l.size() - j);
        (0..smaller.len()).prop_map(move |i| (l.clone(), smaller[i].clone(), j))
    })
}

fn cells(p: &Partition) -> Vec<(usize, usize)> {
    p.cells().collect()
}

// Tableau count by stripping hooks one at a time; independent of the abacus.
fn strip_count(lambda: &Partition, j: usize, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
    if lambda.is_empty() {
        return BigUint::one();
    }
    if let Some(v) = memo.get(lambda) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for h in lambda.removable_rim_hooks(j) {
        total += strip_count(&h.inner, j, memo);
    }
    memo.insert(lambda.clone(), total.clone());
    total
}

#[test]
fn sum_of_squared_dimensions_is_group_order() {
    for n in 0..=12 {
        let s: BigUint = partitions_of(n).iter().map(|l| l.dimension().pow(2)).sum();
        assert_eq!(s, factorial(n), "n = {n}");
    }
}

#[test]
fn character_rows_are_orthonormal() {
    for n in 1..=8 {
        let classes = CycleType::all(n);
        for lambda in partitions_of(n) {
            let norm: BigInt = classes
                .iter()
                .map(|mu| {
                    let x = character_value(&lambda, mu).unwrap();
                    BigInt::from(class_size(mu)) * &x * &x
                })
                .sum();
            assert_eq!(norm, BigInt::from(factorial(n)), "{lambda}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partition_invariants(lambda in partition_upto(14)) {
        let parts = lambda.parts();
        prop_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(parts.iter().all(|&x| x >= 1));
        prop_assert_eq!(lambda.size(), parts.iter().sum::<usize>());
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.dimension(), lambda.conjugate().dimension());
    }

    #[test]
    fn rim_hook_invariants(lambda in partition_upto(14), j in 1usize..6) {
        for h in lambda.removable_rim_hooks(j) {
            prop_assert_eq!(&h.outer, &lambda);
            prop_assert!(h.outer.contains(&h.inner));
            prop_assert_eq!(h.length, j);
            prop_assert_eq!(h.outer.size() - h.inner.size(), j);
            let skew: Vec<(usize, usize)> =
                cells(&h.outer).into_iter().filter(|&(r, c)| !(r < h.inner.len() && c < h.inner.part(r))).collect();
            let rows: std::collections::BTreeSet<usize> = skew.iter().map(|c| c.0).collect();
            prop_assert_eq!(h.leg_length, rows.len() - 1);
            // no 2x2 block
            for &(r, c) in &skew {
                let has = |rr, cc| skew.contains(&(rr, cc));
                prop_assert!(!(has(r + 1, c) && has(r, c + 1) && has(r + 1, c + 1)));
            }
            // edgewise connected
            let mut seen = vec![skew[0]];
            let mut stack = vec![skew[0]];
            while let Some((r, c)) = stack.pop() {
                for nb in [(r + 1, c), (r, c + 1), (r.wrapping_sub(1), c), (r, c.wrapping_sub(1))] {
                    if skew.contains(&nb) && !seen.contains(&nb) {
                        seen.push(nb);
                        stack.push(nb);
                    }
                }
            }
            prop_assert_eq!(seen.len(), skew.len());
            // adding the same hook back
            let adds = h.inner.addable_rim_hooks(j);
            prop_assert!(adds.iter().any(|a| a.outer == lambda && a.leg_length == h.leg_length));
        }
    }

    #[test]
    fn one_step_murnaghan_nakayama(lambda in partition_upto(12), j in 1usize..6) {
        let n = lambda.size();
        prop_assume!(j <= n);
        let mu = CycleType::single_cycle(j, n).unwrap();
        let mut expect = BigInt::zero();
        for h in lambda.removable_rim_hooks(j) {
            let d = BigInt::from(h.inner.dimension());
            if h.is_odd() { expect -= d } else { expect += d }
        }
        prop_assert_eq!(character_value(&lambda, &mu).unwrap(), expect);
        prop_assert_eq!(character_value(&lambda, &CycleType::identity(n)).unwrap(), BigInt::from(lambda.dimension()));
    }

    #[test]
    fn abacus_roundtrip(lambda in partition_upto(16), j in 1usize..6, extra in 0usize..4) {
        let beads = default_bead_count(&lambda, j) + extra * j;
        let ab = to_abacus(&lambda, j, beads).unwrap();
        prop_assert_eq!(ab.decode(), lambda.clone());
        let qc = core_and_quotient(&lambda, j).unwrap();
        prop_assert_eq!((lambda.size() - qc.core.size()) % j, 0);
        prop_assert_eq!(qc.quotient_size(), (lambda.size() - qc.core.size()) / j);
        prop_assert!(qc.core.removable_rim_hooks(j).is_empty());
        prop_assert_eq!(reconstruct(&qc, j).unwrap(), lambda);
    }

    #[test]
    fn rim_tableau_count_matches_stripping(lambda in partition_upto(16), j in 1usize..5) {
        let mut memo = HashMap::new();
        prop_assert_eq!(rim_tableau_count(&lambda, j).unwrap(), strip_count(&lambda, j, &mut memo));
    }

    #[test]
    fn abacus_sign_is_product_of_leg_signs(lambda in partition_upto(16), j in 1usize..5) {
        // every rim-hook tableau of λ carries the same sign (−1)^{Σ legs}
        let qc = core_and_quotient(&lambda, j).unwrap();
        prop_assume!(qc.core.is_empty());
        let mut legs = 0usize;
        let mut cur = lambda.clone();
        while !cur.is_empty() {
            let h = cur.removable_rim_hooks(j).into_iter().next().unwrap();
            legs += h.leg_length;
            cur = h.inner;
        }
        let want = if legs.is_multiple_of(2) { 1 } else { -1 };
        prop_assert_eq!(abacus_sign(&lambda, j).unwrap().sign, want);
    }

    #[test]
    fn restriction_and_induction_are_adjoint((lambda, mu, j) in adjoint_pair()) {
        let res = mn_restrict(&VirtualDecomposition::irreducible(lambda.clone()), j).unwrap();
        let ind = mn_induce(&VirtualDecomposition::irreducible(mu.clone()), j).unwrap();
        prop_assert_eq!(res.coefficient(&mu), ind.coefficient(&lambda));
        for (_, c) in res.terms().chain(ind.terms()) {
            prop_assert!(!c.is_zero());
        }
    }
}

#[test]
fn tensor_power_is_the_character_of_psi_j_to_the_r() {
    for (n, j, r) in [(6, 1, 3), (7, 2, 2), (8, 2, 2), (9, 3, 2), (8, 1, 2), (10, 2, 3)] {
        let d = tensor_power(n, j, r).unwrap();
        for (lambda, _) in d.terms() {
            assert_eq!(lambda.size(), n);
        }
        for mu in CycleType::all(n) {
            let got: BigInt = d.terms().map(|(l, c)| c * character_value(l, &mu).unwrap()).sum();
            let psi = BigInt::from(j * mu.multiplicity(j));
            assert_eq!(got, psi.pow(r as u32), "n={n} j={j} r={r} μ={:?}", mu.partition());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sampled_steps_are_permutations(n in 3usize..40, i in 2usize..6, seed in any::<u64>(), steps in 1usize..30) {
        prop_assume!(i <= n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut state: Vec<u32> = (0..n as u32).collect();
        for s in 0..steps {
            let kind = if s % 2 == 0 { WalkKind::Star } else { WalkKind::ICycle(i) };
            let next = sample_step(&state, kind, &mut rng);
            let mut sorted = next.clone();
            sorted.sort();
            prop_assert_eq!(sorted, (0..n as u32).collect::<Vec<_>>());
            // next = g · state with g of cycle type (len, 1^{n-len})
            let mut g = vec![0u32; n];
            for x in 0..n {
                g[state[x] as usize] = next[x];
            }
            let len = kind.step_length();
            prop_assert_eq!(count_j_cycles(&g, len), 1);
            prop_assert_eq!(count_j_cycles(&g, 1), n - len);
            if kind == WalkKind::Star {
                prop_assert_ne!(g[0], 0);
            }
            state = next;
        }
        let total: usize = (1..=n).map(|j| j * count_j_cycles(&state, j)).sum();
        prop_assert_eq!(total, n);
    }
}
