use proptest::prelude::*;
use proptest::sample::subsequence;

use subcount::arith::gcd;
use subcount::group::Element;
use subcount::lattice::is_normal;
use subcount::similarity::similar;
use subcount::structure::{center, decompose};
use subcount::{all_subgroups, are_isomorphic, count_subgroups, Group, GroupSpec};

fn small_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1usize..=16).prop_map(GroupSpec::Cyclic),
        (2usize..=8).prop_map(|n| GroupSpec::Dihedral(2 * n)),
        Just(GroupSpec::Quaternion(8)),
        Just(GroupSpec::Quaternion(16)),
        Just(GroupSpec::Alternating(4)),
        Just(GroupSpec::Symmetric(3)),
        Just(GroupSpec::Symmetric(4)),
        Just(GroupSpec::Semidirect { actor: 4, base: 3, multiplier: 2 }),
        Just(GroupSpec::Semidirect { actor: 3, base: 7, multiplier: 2 }),
    ]
}

/// Same group with element `i` renumbered to `rest[i - 1]` (a permutation of
/// `1..n`; the identity stays at 0).
fn relabel(g: &Group, rest: &[usize]) -> Group {
    let n = g.order();
    let mut sigma = vec![0usize];
    sigma.extend_from_slice(rest);
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(Element::new(a), Element::new(b)).index();
            table[sigma[a] * n + sigma[b]] = sigma[ab] as u16;
        }
    }
    Group::from_table(table, Vec::new(), "relabelled").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabelling_preserves_structure(spec in small_spec(), seed in any::<u64>()) {
        let g = spec.build().unwrap();
        let mut rest: Vec<usize> = (1..g.order()).collect();
        // Deterministic shuffle from the seed.
        let mut s = seed | 1;
        for i in (1..rest.len()).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            rest.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let h = relabel(&g, &rest);
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert_eq!(count_subgroups(&g), count_subgroups(&h));
        prop_assert!(similar(&g, &h).unwrap());
    }

    #[test]
    fn coprime_products_multiply(a in small_spec(), b in small_spec()) {
        let g = a.build().unwrap();
        let h = b.build().unwrap();
        prop_assume!(gcd(g.order() as u64, h.order() as u64) == 1);
        prop_assume!(g.order() * h.order() <= 512);
        let gh = Group::direct_product(&g, &h).unwrap();
        prop_assert_eq!(count_subgroups(&gh), count_subgroups(&g) * count_subgroups(&h));
    }

    #[test]
    fn lattice_basics(spec in small_spec()) {
        let g = spec.build().unwrap();
        let lat = all_subgroups(&g);
        let subs = lat.subgroups();
        prop_assert_eq!(subs.first().unwrap().order(), 1);
        prop_assert_eq!(subs.last().unwrap().order(), g.order());
        for h in subs {
            prop_assert_eq!(g.order() % h.order(), 0);
            prop_assert_eq!(h.is_normal_cached(), Some(is_normal(&g, h).unwrap()));
        }
        let z = center(&g);
        prop_assert!(is_normal(&g, &z).unwrap());
        prop_assert!(lat.position(z.members()).is_some());
        for (small, big) in lat.covering_edges() {
            prop_assert!(subs[small].is_subgroup_of(&subs[big]));
        }
    }

    #[test]
    fn decomposition_orders(spec in small_spec(), extra in subsequence(vec![5usize, 7, 11, 13], 0..=2)) {
        let mut g = spec.build().unwrap();
        for p in extra {
            if g.order() % p != 0 && g.order() * p <= 512 {
                g = Group::direct_product(&g, &Group::cyclic(p).unwrap()).unwrap();
            }
        }
        let d = decompose(&g).unwrap();
        let stripped: usize = d.stripped.iter().map(|&(p, n)| (p as usize).pow(n)).product();
        prop_assert_eq!(d.tilde.order() * stripped, g.order());
        prop_assert!(decompose(&d.tilde).unwrap().stripped.is_empty());
    }
}
