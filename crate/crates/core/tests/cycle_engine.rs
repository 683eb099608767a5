mod common;

use common::{insertion_bound_violations, labelled, multi_insertion_trial, up_to_isomorphism};
use cyclab::conditions::satisfies_pair_condition;
use cyclab::cycles::{
    classify_external_vertex, cycle_spectrum, cycles_of_length, degree_sum_bound_check, find_3_cycle, find_bypass,
    find_n_minus_1_cycle, find_triangle, has_cycle_of_length, insert_path, is_pancyclic, lemma8_structure_check,
    longest_nonhamiltonian_cycle, longest_two_way_path, minimum_gap_bypass, multi_insert, ExternalVertexClass,
    FinderError, Host, Lemma8Outcome, PreconditionError, ProofMode,
};
use cyclab::family::{gen_bicomplete, gen_complete, gen_cycle};
use cyclab::{Digraph, FamilyKind, FamilyLabel, VertexCycle, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cycle_host(v: &[usize]) -> Host {
    Host::Cycle(VertexCycle::new(v.to_vec()))
}

#[test]
fn oracle_examples() {
    let c5 = gen_cycle(5);
    assert_eq!(has_cycle_of_length(&c5, 5).unwrap().to_vec(), vec![0, 1, 2, 3, 4]);
    assert!((2..5).all(|k| has_cycle_of_length(&c5, k).is_none()));
    let k22 = gen_bicomplete(2);
    assert!(has_cycle_of_length(&k22, 3).is_none());
    assert!(has_cycle_of_length(&k22, 4).is_some());
    assert!(has_cycle_of_length(&gen_complete(3), 3).is_some());
    for m in 1..=4 {
        assert_eq!(cycle_spectrum(&gen_bicomplete(m)), (1..=m).map(|i| 2 * i).collect::<Vec<_>>());
        assert_eq!(is_pancyclic(&gen_bicomplete(m)), m == 1);
    }
    for n in 4..8 {
        assert_eq!(cycle_spectrum(&gen_cycle(n)), vec![n]);
        assert!(!is_pancyclic(&gen_cycle(n)));
    }
    assert_eq!(cycle_spectrum(&gen_complete(3)), vec![2, 3]);
    assert!(is_pancyclic(&gen_complete(3)));
}

/// Longest two-way path by trying every vertex sequence.
fn longest_two_way_by_search(d: &Digraph) -> usize {
    fn grow(d: &Digraph, seq: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(seq.len() - 1);
        let last = *seq.last().unwrap();
        for v in 0..d.order() {
            if !seq.contains(&v) && d.has_arc(last, v) && d.has_arc(v, last) {
                seq.push(v);
                grow(d, seq, best);
                seq.pop();
            }
        }
    }
    let mut best = 0;
    for s in 0..d.order() {
        grow(d, &mut vec![s], &mut best);
    }
    best
}

#[test]
fn two_way_path_examples() {
    assert_eq!(longest_two_way_path(&gen_cycle(5)).length(), 0);
    assert_eq!(longest_two_way_path(&gen_complete(2)).length(), 1);
    let k22 = longest_two_way_path(&gen_bicomplete(2));
    assert_eq!(k22.length(), 3);
    assert_eq!(longest_two_way_by_search(&gen_bicomplete(2)), 3);
    assert!(k22.validates(&gen_bicomplete(2)));
}

#[test]
fn longest_two_way_path_matches_search() {
    for n in 1..=5 {
        let digraphs: Box<dyn Iterator<Item = Digraph>> =
            if n <= 4 { Box::new(labelled(n)) } else { up_to_isomorphism(5) };
        for d in digraphs {
            let path = longest_two_way_path(&d);
            assert!(path.validates(&d));
            assert_eq!(path.length(), longest_two_way_by_search(&d), "{d:?}");
        }
    }
}

#[test]
fn degree_sum_bound_examples() {
    let bound = degree_sum_bound_check(&gen_bicomplete(2), 0, 2).unwrap();
    assert_eq!(bound.degree_sum, 8);
    assert!(bound.bound_holds && bound.equality && bound.all_pairs_two);
    assert!(matches!(
        degree_sum_bound_check(&gen_cycle(4), 0, 1),
        Err(PreconditionError::MissingTwoCycle { .. })
    ));
    // a pendant two-way arc keeps the digraph strong; a one-way pendant arc does not
    let two_way_pendant = Digraph::new(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
    let bound = degree_sum_bound_check(&two_way_pendant, 0, 1).unwrap();
    assert!(bound.bound_holds && bound.equality && bound.all_pairs_two);
    let one_way_pendant = Digraph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
    assert_eq!(degree_sum_bound_check(&one_way_pendant, 0, 1), Err(PreconditionError::NotStrong));
    assert_eq!(degree_sum_bound_check(&gen_complete(3), 0, 1), Err(PreconditionError::HasThreeCycle));
}

#[test]
fn degree_sum_bound_on_triangle_free_strong_digraphs() {
    let mut checked = 0;
    for n in 2..=5 {
        for d in labelled(n).filter(|d| d.is_strong() && find_triangle(d).is_none()) {
            for (u, v) in d.arcs().filter(|&(u, v)| u < v && d.has_arc(v, u)) {
                let bound = degree_sum_bound_check(&d, u, v).unwrap();
                let sum = d.degree(u) + d.degree(v);
                let pair = VertexSet::singleton(u).with(v);
                let all_two = (0..n).filter(|x| !pair.contains(*x)).all(|x| d.degree_into(x, pair) == 2);
                assert!(sum <= 2 * n && bound.bound_holds, "{d:?}");
                assert_eq!(bound.degree_sum, sum);
                assert_eq!(sum == 2 * n, all_two, "{d:?}");
                assert_eq!(bound.equality, sum == 2 * n);
                assert_eq!(bound.all_pairs_two, all_two);
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn triangle_finder_examples() {
    let k3 = find_3_cycle(&gen_complete(3), ProofMode::Verify).unwrap();
    assert!(k3.is_found() && k3.validates(&gen_complete(3)));
    let k22 = find_3_cycle(&gen_bicomplete(2), ProofMode::Verify).unwrap();
    assert_eq!(k22.family().unwrap().kind(), FamilyKind::Bicomplete);
    let c5 = find_3_cycle(&gen_cycle(5), ProofMode::Verify).unwrap();
    match c5.family().unwrap() {
        FamilyLabel::RoundLsd { decomposition, .. } => assert_eq!(decomposition.max_block(), 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn bypass_examples() {
    let mut arcs: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
    arcs.extend([(0, 4), (4, 2)]);
    let d = Digraph::new(5, arcs.clone()).unwrap();
    let c = VertexCycle::new(vec![0, 1, 2, 3]);
    let b = find_bypass(&d, &c).unwrap();
    assert_eq!((b.path.to_vec(), b.gap_length), (vec![0, 4, 2], 2));
    assert!(b.validates(&d));
    assert!(find_bypass(&gen_cycle(6), &VertexCycle::new((0..6).collect())).is_none());
    arcs.extend([(1, 5), (5, 2)]);
    let d = Digraph::new(6, arcs).unwrap();
    assert_eq!(minimum_gap_bypass(&d, &c).unwrap().gap_length, 1);
}

#[test]
fn insertion_examples() {
    let triangle = [(0, 1), (1, 2), (2, 0)];
    let with = |extra: &[(usize, usize)]| Digraph::new(5, triangle.iter().chain(extra).copied()).unwrap();
    let q = cycle_host(&[0, 1, 2]);
    assert_eq!(insert_path(&with(&[(0, 4), (4, 1)]), &[4], &q).unwrap(), Some(cycle_host(&[0, 4, 1, 2])));
    assert_eq!(insert_path(&with(&[(0, 4)]), &[4], &q).unwrap(), None);
    assert_eq!(multi_insert(&with(&[(0, 3), (3, 4)]), &[3, 4], &q).unwrap(), None);

    let mut arcs: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
    arcs.extend([(4, 5), (1, 4), (5, 2)]);
    let d = Digraph::new(6, arcs).unwrap();
    let six = insert_path(&d, &[4, 5], &cycle_host(&[0, 1, 2, 3])).unwrap().unwrap();
    assert!(six.validates(&d) && six.vertices().len() == 6);

    let mut arcs: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
    arcs.extend([(4, 5), (0, 4), (4, 1), (2, 5), (5, 3)]);
    let d = Digraph::new(6, arcs).unwrap();
    let q = cycle_host(&[0, 1, 2, 3]);
    assert_eq!(insert_path(&d, &[4, 5], &q).unwrap(), None);
    let merged = multi_insert(&d, &[4, 5], &q).unwrap().unwrap();
    assert!(merged.validates(&d));
    assert_eq!(merged.vertices().iter().collect::<VertexSet>(), d.vertices());
}

#[test]
fn constructed_multi_insertions_succeed() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let (d, p, q) = multi_insertion_trial(&mut rng);
        let merged = multi_insert(&d, &p, &q).unwrap().expect("a working split was planted");
        assert!(merged.validates(&d));
        let expected: VertexSet = p.iter().chain(q.vertices()).copied().collect();
        let got: VertexSet = merged.vertices().iter().copied().collect();
        assert_eq!((got, merged.vertices().len()), (expected, expected.len()));
        if let (Host::Path(before), Host::Path(after)) = (&q, &merged) {
            assert_eq!((before.first(), before.last()), (after.first(), after.last()));
        }
        if let Some(whole) = insert_path(&d, &p, &q).unwrap() {
            assert_eq!(whole, merged);
        }
    }
}

#[test]
fn vertex_insertion_degree_bounds() {
    for n in 3..=5 {
        let digraphs: Box<dyn Iterator<Item = Digraph>> =
            if n <= 4 { Box::new(labelled(n)) } else { up_to_isomorphism(5) };
        for d in digraphs {
            assert_eq!(insertion_bound_violations(&d), Vec::<String>::new());
        }
    }
}

#[test]
fn external_vertex_examples() {
    let k33 = gen_bicomplete(3);
    let c = VertexCycle::new(vec![0, 3, 1, 4]);
    assert_eq!(classify_external_vertex(&k33, &c, 2), Ok(ExternalVertexClass::HighDegree));
    let lonely = Digraph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    assert_eq!(
        classify_external_vertex(&lonely, &VertexCycle::new(vec![0, 1, 2]), 4),
        Err(FinderError::Precondition(PreconditionError::NotAdjacentToCycle(4)))
    );
}

#[test]
fn external_vertices_of_longest_nonhamiltonian_cycles() {
    let mut checked = 0;
    for n in 4..=6 {
        let digraphs: Box<dyn Iterator<Item = Digraph>> =
            if n <= 5 { Box::new(labelled(n)) } else { up_to_isomorphism(6) };
        for d in digraphs.filter(|d| d.is_strong() && satisfies_pair_condition(d)) {
            let Some(longest) = longest_nonhamiltonian_cycle(&d) else { continue };
            let k = longest.length();
            if k + 2 > n {
                continue;
            }
            for c in cycles_of_length(&d, k) {
                let on = c.vertex_set();
                for w in d.vertices().difference(on).iter().filter(|&w| !d.neighbors(w).is_disjoint(on)) {
                    let class = classify_external_vertex(&d, &c, w).unwrap();
                    let expected = if d.degree(w) >= n {
                        ExternalVertexClass::HighDegree
                    } else if on.is_subset(d.out_neighbors(w)) {
                        ExternalVertexClass::FullOut
                    } else {
                        assert!(on.is_subset(d.in_neighbors(w)), "{d:?} {c:?} {w}");
                        ExternalVertexClass::FullIn
                    };
                    assert_eq!(class, expected);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn long_cycle_finder_examples() {
    for n in 4..9 {
        let c = find_n_minus_1_cycle(&gen_cycle(n), ProofMode::Verify).unwrap();
        assert_eq!(c.family().unwrap().kind(), FamilyKind::PureCycle);
    }
    for m in 2..5 {
        let c = find_n_minus_1_cycle(&gen_bicomplete(m), ProofMode::Verify).unwrap();
        assert_eq!(c.family().unwrap().kind(), FamilyKind::Bicomplete);
        assert!(c.validates(&gen_bicomplete(m)));
    }
    assert_eq!(
        find_n_minus_1_cycle(&gen_complete(3), ProofMode::Verify),
        Err(FinderError::Precondition(PreconditionError::OrderTooSmall { n: 3, min: 4 }))
    );
}

#[test]
fn near_hamiltonian_structure_examples() {
    let k33 = gen_bicomplete(3);
    let got = lemma8_structure_check(&k33, &VertexCycle::new(vec![0, 3, 1, 4]), 2, 5).unwrap();
    assert_eq!(got, Lemma8Outcome::Bicomplete { parts: [vec![0, 1, 2], vec![3, 4, 5]] });
    let k6 = gen_complete(6);
    let got = lemma8_structure_check(&k6, &VertexCycle::new(vec![0, 1, 2, 3]), 4, 5).unwrap();
    assert_eq!(got, Lemma8Outcome::NotApplicable);
}

#[test]
fn near_hamiltonian_structure_below_six_vertices() {
    for n in 4..=5 {
        for d in labelled(n).filter(Digraph::is_strong) {
            for c in cycles_of_length(&d, n - 2) {
                let off = d.vertices().difference(c.vertex_set()).to_vec();
                let outcome = lemma8_structure_check(&d, &c, off[0], off[1]).unwrap();
                if outcome != Lemma8Outcome::NotApplicable {
                    assert_eq!(n % 2, 0, "{d:?}");
                }
            }
        }
    }
}

#[test]
fn finders_agree_with_the_oracle_up_to_five_vertices() {
    for n in 3..=5 {
        for d in labelled(n).filter(|d| d.is_strong() && satisfies_pair_condition(d)) {
            for mode in [ProofMode::Fast, ProofMode::Verify] {
                let three = find_3_cycle(&d, mode).unwrap();
                assert!(three.validates(&d));
                assert_eq!(three.is_found(), has_cycle_of_length(&d, 3).is_some(), "{d:?}");
                if n >= 4 {
                    let long = find_n_minus_1_cycle(&d, mode).unwrap();
                    assert!(long.validates(&d));
                    assert_eq!(long.target_length, n - 1);
                    assert_eq!(long.is_found(), has_cycle_of_length(&d, n - 1).is_some(), "{d:?}");
                }
            }
        }
    }
}
