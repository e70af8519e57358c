use elnet::exactla::{rat, Rational};
use elnet::lamdimer::{build_bipartite, k_invariant};
use elnet::netmodel::{generate, Kind};
use elnet::response::{invariants_check, response_matrix, update_bridge, update_spike};
use elnet::sympl::{lagrangian_check, omega_of, q_operator};
use elnet::{ElectricalNetwork, Move};
use proptest::prelude::*;

fn weight() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn moves(n: usize, len: usize) -> impl Strategy<Value = Vec<Move>> {
    prop::collection::vec((1..=n, weight(), any::<bool>()), 0..=len).prop_map(|v| {
        v.into_iter()
            .map(|(k, t, spike)| {
                if spike {
                    Move::Spike { k, t }
                } else {
                    Move::Bridge { k, t }
                }
            })
            .collect()
    })
}

fn network(
    n_range: std::ops::RangeInclusive<usize>,
    len: usize,
) -> impl Strategy<Value = ElectricalNetwork> {
    n_range.prop_flat_map(move |n| {
        moves(n, len).prop_map(move |ms| {
            ms.iter()
                .try_fold(ElectricalNetwork::empty(n).unwrap(), |net, mv| {
                    net.apply(mv)
                })
                .unwrap()
        })
    })
}

fn euler(net: &ElectricalNetwork) -> i64 {
    let f = net.faces().regions.len() as i64;
    net.vertex_count() as i64 - (net.edges().len() + net.n()) as i64 + f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn surgeries_preserve_validity(net in network(2..=5, 10), k in 1usize..=5, t in weight()) {
        let k = (k - 1) % net.n() + 1;
        for mv in [Move::Spike { k, t: t.clone() }, Move::Bridge { k, t: t.clone() }] {
            let out = net.apply(&mv).unwrap();
            prop_assert_eq!(euler(&out), 2);
            let reparsed = ElectricalNetwork::from_json(&out.to_json()).unwrap();
            prop_assert_eq!(reparsed, out);
        }
        prop_assert_eq!(euler(&net), 2);
    }

    #[test]
    fn response_invariants_and_updates(net in network(3..=5, 10), k in 1usize..=5, t in weight()) {
        let k = (k - 1) % net.n() + 1;
        let m = response_matrix(&net);
        prop_assert!(invariants_check(&m).is_ok());
        prop_assert_eq!(update_bridge(&m, k, &t), response_matrix(&net.add_bridge(k, &t).unwrap()));
        prop_assert_eq!(update_spike(&m, k, &t), response_matrix(&net.add_spike(k, &t).unwrap()));
    }

    #[test]
    fn lagrangian_point_is_killed_by_q(net in network(3..=4, 8)) {
        let p = omega_of(&net).unwrap();
        prop_assert!(lagrangian_check(&p).is_ok());
        let q = q_operator(net.n()).unwrap();
        prop_assert!((&p.pluecker_tilde().as_row() * &q).is_zero());
    }

    #[test]
    fn dimer_k_is_n_minus_one(net in network(2..=5, 8)) {
        prop_assert_eq!(k_invariant(&build_bipartite(&net)).unwrap(), net.n() - 1);
    }
}

#[test]
fn generated_moves_are_reproducible() {
    let a = generate(Kind::Moves, 4, 7, 6, None).unwrap().to_json();
    let b = generate(Kind::Moves, 4, 7, 6, None).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn triangle_faces() {
    let net = generate(Kind::Triangle, 3, 0, 0, None).unwrap();
    let f = net.faces();
    let disk: Vec<_> = f.disk_regions().collect();
    assert_eq!(disk.len(), 4);
    let central = disk
        .iter()
        .filter(|&&r| f.regions[r].arcs.is_empty())
        .count();
    assert_eq!(central, 1);
}
