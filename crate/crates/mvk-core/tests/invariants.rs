mod common;

use common::*;
use mvk_core::algebra::{automorphism_group, commuting_automorphism_tuples, MultiplicationTable, Permutation};
use mvk_core::constructions::{alexander_16, dihedral_quandle, q4};
use mvk_core::diagram::{builtin_diagram, builtin_with_labels, k_family, Diagram};
use mvk_core::invariants::{
    cocycle_invariant, coloring_oracle, count_colorings, distinguish, enumerate_colorings, invariant_profile, is_operator_cocycle,
    CocycleTable, InvariantError, OperatorQuandle,
};
use proptest::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

const BUDGET: u128 = 10_000_000;

fn op(q: MultiplicationTable, a: Permutation, b: Permutation) -> OperatorQuandle {
    OperatorQuandle::with(q, &[("α", a), ("β", b)]).unwrap()
}

fn id(n: usize) -> Permutation {
    Permutation::identity(n)
}

fn z2_squared() -> MultiplicationTable {
    MultiplicationTable::from_fn(4, |x, y| x ^ y).unwrap().with_labels(["0", "1", "t", "t^-1"].map(String::from).to_vec()).unwrap()
}

/// `φ(x,y) = y(x-y)^2` in `Z2[t]/(t^2+t+1)`, computed from the ring.
fn q4_phi() -> CocycleTable {
    // Elements as bit pairs (c0, c1); t^2 = 1 + t.
    let mul = |a: usize, b: usize| {
        let (a0, a1, b0, b1) = (a & 1, a >> 1 & 1, b & 1, b >> 1 & 1);
        let c0 = (a0 & b0) ^ (a1 & b1);
        let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        c0 | c1 << 1
    };
    let rows = (0..4).map(|x| (0..4).map(|y| mul(y, mul(x ^ y, x ^ y))).collect()).collect();
    CocycleTable::new(z2_squared(), rows).unwrap()
}

fn theta_group() -> Vec<Permutation> {
    vec![id(4), theta(), theta().inverse()]
}

#[test]
fn printed_coloring_counts() {
    let d21 = builtin_diagram("2_1").unwrap();
    let d32 = builtin_diagram("3_2").unwrap();
    let q = || OperatorQuandle::with(q4(), &[("α", id(4))]).unwrap();
    let qt = || OperatorQuandle::with(q4(), &[("α", theta().inverse())]).unwrap();
    assert_eq!(count_colorings(&d21, &q()).unwrap(), 4);
    assert_eq!(count_colorings(&d21, &qt()).unwrap(), 1);
    assert_eq!(count_colorings(&d32, &q()).unwrap(), 4);
    assert_eq!(count_colorings(&d32, &qt()).unwrap(), 1);
    let d35 = builtin_diagram("3_5").unwrap();
    assert_eq!(count_colorings(&d35, &op(cq_5_2(), id(5), omega())).unwrap(), 1);
    assert_eq!(count_colorings(&d35, &op(cq_5_2(), omega(), id(5))).unwrap(), 5);
    let sp = builtin_diagram("special_pair_left").unwrap();
    assert_eq!(count_colorings(&sp, &op(alexander_16(), sigma(), tau())).unwrap(), 16);
    assert_eq!(count_colorings(&sp, &op(alexander_16(), tau(), sigma())).unwrap(), 1);
}

#[test]
fn four_colorings_of_3_7() {
    let d = builtin_diagram("3_7").unwrap();
    let oq = op(q4(), theta(), theta().inverse());
    let cs = enumerate_colorings(&d, &oq).unwrap();
    assert_eq!(cs.len(), 4);
    // a: the semiarc after the first symbol; b: the one after the fourth.
    let seeds: BTreeSet<(usize, usize)> = cs.iter().map(|c| (c.colors[0][0], c.colors[0][3])).collect();
    let expected: BTreeSet<(usize, usize)> = [(0, 0), (2, 0), (1, 0), (3, 0)].into_iter().collect();
    assert_eq!(seeds, expected);
    let mut sorted = cs.clone();
    sorted.sort();
    assert_eq!(cs, sorted);
}

#[test]
fn unknot_has_one_free_semiarc() {
    let u = builtin_diagram("unknot").unwrap();
    for n in 1..=7 {
        let oq = OperatorQuandle::new(dihedral_quandle(n), BTreeMap::new()).unwrap();
        assert_eq!(count_colorings(&u, &oq).unwrap(), n as u64);
        assert_eq!(coloring_oracle(&u, &oq, BUDGET).unwrap(), n as u64);
    }
    let phi = q4_phi();
    let oq = op(q4(), theta(), theta().inverse());
    let r = cocycle_invariant(&u, &oq, &phi).unwrap();
    assert_eq!(r.terms, BTreeMap::from([(phi.identity(), 4)]));
}

#[test]
fn missing_operator_is_an_error() {
    let d = builtin_diagram("3_7").unwrap();
    let oq = OperatorQuandle::with(q4(), &[("α", id(4))]).unwrap();
    assert_eq!(count_colorings(&d, &oq), Err(InvariantError::MissingOperator("β".into())));
}

#[test]
fn operators_must_be_commuting_automorphisms() {
    let not_aut = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
    assert!(automorphism_group(&q4()).iter().all(|p| *p != not_aut));
    assert!(matches!(OperatorQuandle::with(q4(), &[("α", not_aut)]), Err(InvariantError::NotAutomorphism(_))));
    let auts = automorphism_group(&q4());
    let (a, b) = auts.iter().flat_map(|a| auts.iter().map(move |b| (a, b))).find(|(a, b)| !a.commutes_with(b)).unwrap();
    assert!(matches!(OperatorQuandle::with(q4(), &[("α", a.clone()), ("β", b.clone())]), Err(InvariantError::NotCommuting(..))));
}

#[test]
fn phi_compatible_exactly_with_theta_subgroup() {
    let phi = q4_phi();
    assert_eq!(phi.phi(), &[vec![0, 1, 1, 1], vec![0, 0, 3, 2], vec![0, 2, 0, 3], vec![0, 3, 2, 0]]);
    let group = theta_group();
    for a in automorphism_group(&q4()) {
        let oq = OperatorQuandle::with(q4(), &[("α", a.clone())]).unwrap();
        assert_eq!(is_operator_cocycle(&oq, &phi), group.contains(&a), "{a:?}");
    }
    for a in &group {
        for b in &group {
            assert!(is_operator_cocycle(&op(q4(), a.clone(), b.clone()), &phi));
        }
    }
}

#[test]
fn printed_phi_entry_is_not_a_cocycle() {
    let mut rows = q4_phi().phi().to_vec();
    rows[3][1] = 2;
    let bad = CocycleTable::new(z2_squared(), rows).unwrap();
    let oq = OperatorQuandle::new(q4(), BTreeMap::new()).unwrap();
    assert!(!is_operator_cocycle(&oq, &bad));
    let d = builtin_diagram("3_7").unwrap();
    assert_eq!(cocycle_invariant(&d, &op(q4(), theta(), theta().inverse()), &bad), Err(InvariantError::CocycleCheck));
}

#[test]
fn trivial_cocycle_counts_colorings() {
    let trivial = CocycleTable::new(z2_squared(), vec![vec![0; 5]; 5]).unwrap();
    for name in ["2_1", "3_1", "3_5", "3_7"] {
        let d = builtin_diagram(name).unwrap();
        let auts = automorphism_group(&cq_5_2());
        for t in commuting_automorphism_tuples(&auts, 2, false) {
            let oq = op(cq_5_2(), auts[t[0]].clone(), auts[t[1]].clone());
            assert!(is_operator_cocycle(&oq, &trivial));
            let r = cocycle_invariant(&d, &oq, &trivial).unwrap();
            let n = count_colorings(&d, &oq).unwrap();
            let expected = if n == 0 { BTreeMap::new() } else { BTreeMap::from([(0, n)]) };
            assert_eq!(r.terms, expected);
        }
    }
}

#[test]
fn cocycle_total_is_the_coloring_count() {
    let phi = q4_phi();
    let group = theta_group();
    for name in ["2_1", "3_1", "3_2", "3_3", "3_4", "3_5", "3_6", "3_7", "special_pair_left"] {
        let d = builtin_diagram(name).unwrap();
        for a in &group {
            for b in &group {
                let oq = op(q4(), a.clone(), b.clone());
                let r = cocycle_invariant(&d, &oq, &phi).unwrap();
                assert_eq!(r.total(), count_colorings(&d, &oq).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn cocycle_on_3_7() {
    let phi = q4_phi();
    let d = builtin_diagram("3_7").unwrap();
    let ab = cocycle_invariant(&d, &op(q4(), theta(), theta().inverse()), &phi).unwrap();
    let ba = cocycle_invariant(&d, &op(q4(), theta().inverse(), theta()), &phi).unwrap();
    assert_eq!(ab.total(), 4);
    assert_eq!(ba.total(), 4);
    assert_eq!(ab.display(&phi).to_string(), "{e:4}");
    assert_eq!(ba.display(&phi).to_string(), "{e:4}");
}

#[test]
fn k_family_counts() {
    let plus_one = |p: usize| Permutation::from_images((0..p).map(|x| (x + 1) % p).collect()).unwrap();
    for p in [3usize, 5, 7] {
        let oq = op(dihedral_quandle(p), id(p), plus_one(p));
        assert_eq!(count_colorings(&k_family(p, "α", "β"), &oq).unwrap(), p as u64, "K({p}) over Z_{p}");
        for q in [3usize, 5, 7] {
            if q > p {
                assert_eq!(count_colorings(&k_family(q, "α", "β"), &oq).unwrap(), 0, "K({q}) over Z_{p}");
            }
        }
    }
    let k3 = builtin_diagram("K(3)").unwrap();
    assert_eq!(k3.classical_count(), 1);
    assert_eq!(k3.virtual_count(), 6);
    let oq = op(dihedral_quandle(3), id(3), plus_one(3));
    assert_eq!(k3.semiarc_count(), 14);
    assert_eq!(coloring_oracle(&k3, &oq, BUDGET).unwrap(), 3);
    assert!(matches!(coloring_oracle(&k3, &oq, 1000), Err(InvariantError::Budget { .. })));
}

/// The closure `a * β^n α^-n (a) = a` over dihedral Z_p with `α = id`, `β = +1`.
#[test]
fn k_family_matches_closure_condition() {
    for p in [3usize, 4, 5, 6, 7] {
        let q = dihedral_quandle(p);
        let oq = op(q.clone(), id(p), Permutation::from_images((0..p).map(|x| (x + 1) % p).collect()).unwrap());
        for n in 0..=6 {
            let expected = (0..p).filter(|&a| q.op(a, (a + n) % p) == a).count() as u64;
            assert_eq!(count_colorings(&k_family(n, "α", "β"), &oq).unwrap(), expected, "K({n}) over Z_{p}");
        }
    }
}

/// Up to five evenly spaced commuting pairs per quandle.
fn battery() -> Vec<OperatorQuandle> {
    let mut out = Vec::new();
    for q in [q4(), cq_5_2(), dihedral_quandle(3), dihedral_quandle(4)] {
        let auts = automorphism_group(&q);
        let tuples = commuting_automorphism_tuples(&auts, 2, false);
        let step = tuples.len().div_ceil(5);
        for t in tuples.iter().step_by(step) {
            out.push(op(q.clone(), auts[t[0]].clone(), auts[t[1]].clone()));
        }
    }
    out
}

fn fixtures() -> Vec<(String, Diagram)> {
    let mut names: Vec<String> =
        ["unknot", "2_1", "3_1", "3_2", "3_3", "3_4", "3_5", "3_6", "3_7", "special_pair_left", "special_pair_right"]
            .map(String::from)
            .to_vec();
    names.extend(["K(1)", "K(2)"].map(String::from));
    names.into_iter().map(|n| (n.clone(), builtin_diagram(&n).unwrap())).collect()
}

#[test]
fn counts_match_oracle_within_budget() {
    let mut checked = 0;
    for (name, d) in fixtures() {
        for oq in battery() {
            let size = (oq.quandle().order() as u128).checked_pow(d.semiarc_count() as u32);
            if size.is_none_or(|s| s > BUDGET) {
                assert!(matches!(coloring_oracle(&d, &oq, BUDGET), Err(InvariantError::Budget { .. })));
                continue;
            }
            assert_eq!(count_colorings(&d, &oq).unwrap(), coloring_oracle(&d, &oq, BUDGET).unwrap(), "{name}");
            checked += 1;
        }
    }
    assert!(checked > 60, "{checked}");
}

#[test]
fn retyping_with_permuted_operators() {
    let phi = q4_phi();
    for (name, d) in fixtures() {
        if d.types().len() < 2 {
            continue;
        }
        let swap: BTreeMap<String, String> = [("α", "β"), ("β", "α")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let r = d.retype(&swap).unwrap();
        for oq in battery() {
            let ops = oq.operators();
            let swapped = op(oq.quandle().clone(), ops["β"].clone(), ops["α"].clone());
            assert_eq!(count_colorings(&d, &oq).unwrap(), count_colorings(&r, &swapped).unwrap(), "{name}");
        }
        let renamed: BTreeMap<String, String> = [("α", "x"), ("β", "y")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let r = d.retype(&renamed).unwrap();
        let oq = op(q4(), theta(), theta().inverse());
        let oq2 = OperatorQuandle::with(q4(), &[("x", theta()), ("y", theta().inverse())]).unwrap();
        assert_eq!(cocycle_invariant(&d, &oq, &phi).unwrap(), cocycle_invariant(&r, &oq2, &phi).unwrap());
    }
}

#[test]
fn retyping_3_5_swaps_the_example_values() {
    let d = builtin_diagram("3_5").unwrap();
    let swapped = builtin_with_labels("3_5", "β", "α").unwrap();
    let oq = op(cq_5_2(), id(5), omega());
    assert_eq!(count_colorings(&d, &oq).unwrap(), 1);
    assert_eq!(count_colorings(&swapped, &oq).unwrap(), 5);
}

#[test]
fn distinguish_examples() {
    let a = builtin_with_labels("2_1", "α", "β").unwrap();
    let b = builtin_with_labels("2_1", "β", "α").unwrap();
    let r = distinguish(&a, &b, &q4(), None).unwrap();
    assert!(r.distinguished());
    assert!(r.differences.iter().any(|x| (x.left.as_str(), x.right.as_str()) == ("4", "1")));
    for (name, d) in fixtures() {
        let r = distinguish(&d, &d, &q4(), Some(&q4_phi())).unwrap();
        assert!(!r.distinguished(), "{name}");
        assert!(r.assignments > 0);
    }
    let r = distinguish(&k_family(3, "α", "β"), &k_family(5, "α", "β"), &dihedral_quandle(3), None).unwrap();
    assert!(r.differences.iter().any(|x| x.invariant == "col" && x.left == "3" && x.right == "0"));
}

#[test]
fn profiles_separate_schemes() {
    let names_all = ["3_1", "3_4"];
    for name in names_all {
        let p = invariant_profile(&builtin_diagram(name).unwrap(), &q4(), 2).unwrap();
        assert_eq!(p.schemes.len(), 10);
        assert!(p.undistinguished_pairs().is_empty(), "{name}: {:?}", p.undistinguished_pairs());
    }
    for name in ["3_5", "3_7"] {
        let p = invariant_profile(&builtin_diagram(name).unwrap(), &q4(), 2).unwrap();
        let (i, j) = (p.scheme_index(&[1, 2]).unwrap(), p.scheme_index(&[2, 1]).unwrap());
        assert_eq!(p.values[i], p.values[j], "{name}");
    }
    let p = invariant_profile(&builtin_diagram("2_1").unwrap(), &cq_5_2(), 1).unwrap();
    assert_eq!(p.schemes, vec![vec![1], vec![2]]);
}

#[test]
fn profile_entries_are_counts() {
    let d = builtin_diagram("3_1").unwrap();
    let p = invariant_profile(&d, &q4(), 2).unwrap();
    assert_eq!(p.tuples.len(), 24);
    for (s, u) in p.schemes.iter().enumerate() {
        for (t, tuple) in p.tuples.iter().enumerate() {
            let oq = op(q4(), p.automorphisms[tuple[u[0] - 1]].clone(), p.automorphisms[tuple[u[1] - 1]].clone());
            assert_eq!(p.values[s][t], coloring_oracle(&d, &oq, BUDGET).unwrap());
        }
    }
    let three = Diagram::new(vec!["a".into(), "b".into(), "c".into()], vec![]);
    assert!(three.is_err() || invariant_profile(&three.unwrap(), &q4(), 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn random_operators_agree_with_oracle(f in 0usize..13, qi in 0usize..4, pick in any::<u64>()) {
        let (name, d) = fixtures().swap_remove(f);
        let q = [q4(), cq_5_2(), dihedral_quandle(3), dihedral_quandle(5)][qi].clone();
        let auts = automorphism_group(&q);
        let tuples = commuting_automorphism_tuples(&auts, 2, false);
        let t = &tuples[(pick % tuples.len() as u64) as usize];
        let oq = op(q.clone(), auts[t[0]].clone(), auts[t[1]].clone());
        match coloring_oracle(&d, &oq, BUDGET) {
            Ok(n) => prop_assert_eq!(count_colorings(&d, &oq).unwrap(), n, "{}", name),
            Err(InvariantError::Budget { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }
}
