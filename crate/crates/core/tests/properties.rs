use proptest::prelude::*;

use schmidt::blocks::{
    gamma_big_u, gamma_big_u_inverse, gamma_u, gamma_u_inverse, is_sigma_admissible, BlockFamily, BlockType,
};
use schmidt::colored::{color_sequence, phi_s, phi_s_inverse};
use schmidt::oracle::BlockEnum;
use schmidt::params::Params;
use schmidt::partitions::{is_member, FamilyTag, IndexSet, OverPartition, PartValue};
use schmidt::series::{Caps, Poly, Series, Var};

/// Random over-partitions: sizes sorted down, each distinct size may end in
/// an overlined copy.
fn over_partition() -> impl Strategy<Value = OverPartition> {
    (
        prop::collection::vec(1u64..9, 0..8),
        prop::collection::vec(any::<bool>(), 8),
    )
        .prop_map(|(mut sizes, bars)| {
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let mut parts: Vec<PartValue> = sizes.iter().map(|&k| PartValue::plain(k)).collect();
            for i in 0..parts.len() {
                let last_of_size = i + 1 == parts.len() || parts[i + 1].size() != parts[i].size();
                if last_of_size && bars[i] {
                    parts[i] = PartValue::bar(parts[i].size());
                }
            }
            OverPartition::new(parts).expect("valid over-partition")
        })
}

fn part_value() -> impl Strategy<Value = PartValue> {
    (0u64..4, any::<bool>()).prop_map(|(k, b)| {
        if b && k > 0 {
            PartValue::bar(k)
        } else {
            PartValue::plain(k)
        }
    })
}

fn index_set() -> impl Strategy<Value = IndexSet> {
    prop_oneof![
        Just(IndexSet::odds()),
        Just(IndexSet::tri1()),
        Just(IndexSet::all()),
        Just(IndexSet::squares())
    ]
}

fn series(caps: Caps) -> impl Strategy<Value = Series> {
    prop::collection::vec((0u32..=caps.q, 0u32..3, -3i64..4), 0..6).prop_map(move |terms| {
        let mut s = Series::zero(caps);
        for (d, v, c) in terms {
            let p = if v == 0 {
                Poly::constant(c)
            } else {
                Poly::var(Var::Sym('x', v)).scale(&c.into())
            };
            s = s.add(&Series::term(p, d, caps)).unwrap();
        }
        s
    })
}

proptest! {
    #[test]
    fn conjugation_is_a_weight_preserving_involution(lambda in over_partition()) {
        let mu = lambda.conjugate();
        prop_assert_eq!(mu.weight(), lambda.weight());
        prop_assert_eq!(mu.conjugate(), lambda.clone());
        prop_assert_eq!(mu.len() as u64, lambda.max_size());
    }

    #[test]
    fn conjugation_swaps_distinct_and_flat(lambda in over_partition()) {
        let mu = lambda.conjugate();
        prop_assert_eq!(is_member(&lambda, FamilyTag::Dbar), is_member(&mu, FamilyTag::Fbar));
    }

    #[test]
    fn text_form_round_trips(lambda in over_partition()) {
        let back: OverPartition = lambda.to_string().parse().unwrap();
        prop_assert_eq!(back, lambda);
    }

    #[test]
    fn phi_s_preserves_weight_and_colors(lambda in over_partition(), s in index_set()) {
        let mu = phi_s(&lambda, &s);
        prop_assert_eq!(mu.weight(), lambda.s_weight(&s));
        prop_assert_eq!(mu.monomial(), color_sequence(&lambda));
        prop_assert_eq!(phi_s_inverse(&mu).unwrap(), lambda);
    }

    #[test]
    fn gamma_u_round_trips(lambda in prop::collection::vec(part_value(), 1..5)) {
        if let Ok((sigma, mu)) = gamma_u(&lambda) {
            prop_assert!(mu.windows(2).all(|p| p[0] >= p[1]));
            prop_assert_eq!(gamma_u_inverse(&sigma, &mu).unwrap(), lambda);
        }
    }

    #[test]
    fn gamma_big_u_round_trips(pick in 0usize..10_000, u in prop_oneof![Just("Unk(2,1)"), Just("Unk(3,1)"), Just("U=1,(2)*")]) {
        let u: BlockType = u.parse().unwrap();
        let all = BlockEnum::new(u.clone(), BlockFamily::Pbar, IndexSet::all(), 7).collect().unwrap();
        let (lambda, _) = &all[pick % all.len()];
        let (sigma, mu) = gamma_big_u(lambda, &u).unwrap();
        prop_assert!(is_sigma_admissible(&sigma, &u, &mu));
        prop_assert_eq!(&gamma_big_u_inverse(&sigma, &mu, &u).unwrap(), lambda);
    }

    #[test]
    fn series_ring_laws(a in series(Caps::unbounded(5)), b in series(Caps::unbounded(5)), c in series(Caps::unbounded(5))) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn geometric_factors_cancel(a in series(Caps::bounded(6, 3)), k in 1u32..4, v in 1u32..3) {
        let x = Poly::var(Var::Sym('x', v));
        let mut s = a.clone();
        s.div_one_minus(&x, k).unwrap();
        s.mul_one_minus(&x, k);
        prop_assert_eq!(s, a);
    }

    #[test]
    fn params_round_trip(m in 1u64..6, s in 1u64..6, variant in prop_oneof![Just("literal"), Just("corrected")]) {
        let p = Params::new().set("m", m).set("s", s).set("variant", variant);
        let back: Params = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }
}
