use proptest::prelude::*;

use rimhook::crystal::{
    e_op, epsilon, f_op, phi, reduce, signature, Model, Sign, SignatureEntry, Word,
};
use rimhook::ladder::ladder_occupancy;
use rimhook::{is_generalized_l_partition, is_jm, regularize, BoxCoord, Ell, Partition};

fn arb_partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(1..=n.max(1), 0..=n).prop_map(move |mut v| {
            // Greedy cut of the random parts down to rank <= n.
            v.sort_unstable_by(|a, b| b.cmp(a));
            let mut left = n;
            let parts: Vec<usize> = v
                .into_iter()
                .map_while(|x| {
                    let take = x.min(left);
                    left -= take;
                    (take > 0).then_some(take)
                })
                .collect();
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).unwrap()
        })
    })
}

fn arb_ell() -> impl Strategy<Value = Ell> {
    (3usize..=6).prop_map(|l| Ell::new(l).unwrap())
}

fn arb_model() -> impl Strategy<Value = Model> {
    prop_oneof![Just(Model::MisraMiwa), Just(Model::Ladder)]
}

/// Cancels a randomly chosen adjacent `-+` pair until none is left.
fn reduce_by_random_deletion(mut signs: Vec<Sign>, picks: &[usize]) -> Vec<Sign> {
    let mut k = 0;
    loop {
        let pairs: Vec<usize> = (0..signs.len().saturating_sub(1))
            .filter(|&j| signs[j] == Sign::Minus && signs[j + 1] == Sign::Plus)
            .collect();
        if pairs.is_empty() {
            return signs;
        }
        let j = pairs[picks.get(k).copied().unwrap_or(0) % pairs.len()];
        k += 1;
        signs.drain(j..j + 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn conjugate_is_an_involution(p in arb_partition(30)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().rank(), p.rank());
    }

    #[test]
    fn hooks_transpose(p in arb_partition(30)) {
        let c = p.conjugate();
        for b in p.boxes() {
            let t = BoxCoord::new(b.col, b.row);
            prop_assert_eq!(p.hook_length(b).unwrap(), c.hook_length(t).unwrap());
        }
    }

    #[test]
    fn regularize_properties(p in arb_partition(30), ell in arb_ell()) {
        let r = regularize(&p, ell);
        prop_assert!(r.is_regular(ell));
        prop_assert_eq!(r.rank(), p.rank());
        prop_assert_eq!(regularize(&r, ell), r.clone());
        prop_assert_eq!(ladder_occupancy(&r, ell), ladder_occupancy(&p, ell));
        prop_assert_eq!(r == p, p.is_regular(ell));
    }

    #[test]
    fn reduction_is_order_independent(
        raw in proptest::collection::vec(any::<bool>(), 0..24),
        picks in proptest::collection::vec(any::<usize>(), 24),
    ) {
        let signs: Vec<Sign> = raw.iter().map(|&b| if b { Sign::Plus } else { Sign::Minus }).collect();
        let w = Word {
            model: Model::MisraMiwa,
            residue: 0,
            reduced: false,
            entries: signs
                .iter()
                .enumerate()
                .map(|(k, &sign)| SignatureEntry { sign, cell: BoxCoord::new(k + 1, 1) })
                .collect(),
        };
        prop_assert_eq!(reduce(&w).signs(), reduce_by_random_deletion(signs, &picks));
    }

    #[test]
    fn operators_are_inverse(p in arb_partition(25), ell in arb_ell(), model in arb_model(), i in 0usize..6) {
        let i = i % ell.get();
        if let Some(q) = f_op(&p, i, ell, model) {
            prop_assert_eq!(e_op(&q, i, ell, model), Some(p.clone()));
            prop_assert_eq!(phi(&q, i, ell, model) + 1, phi(&p, i, ell, model));
            prop_assert_eq!(epsilon(&q, i, ell, model), epsilon(&p, i, ell, model) + 1);
        } else {
            prop_assert_eq!(phi(&p, i, ell, model), 0);
        }
        if let Some(q) = e_op(&p, i, ell, model) {
            prop_assert_eq!(f_op(&q, i, ell, model), Some(p.clone()));
            prop_assert_eq!(epsilon(&q, i, ell, model) + 1, epsilon(&p, i, ell, model));
        } else {
            prop_assert_eq!(epsilon(&p, i, ell, model), 0);
        }
    }

    #[test]
    fn signature_counts_boxes(p in arb_partition(25), ell in arb_ell(), model in arb_model(), i in 0usize..6) {
        let i = i % ell.get();
        let w = signature(&p, i, ell, model);
        let addable = p.addable_boxes().into_iter().filter(|b| b.residue(ell) == i).count();
        prop_assert_eq!(w.count(Sign::Plus), addable);
    }

    #[test]
    fn jm_is_transpose_symmetric(p in arb_partition(20), ell in arb_ell()) {
        let c = p.conjugate();
        prop_assert_eq!(is_jm(&p, ell), is_jm(&c, ell));
        prop_assert_eq!(is_generalized_l_partition(&p, ell), is_generalized_l_partition(&c, ell));
    }
}
