//! Acceptance suite: one test per acceptance criterion, runnable on its own
//! with `cargo test --test acceptance`. Each test prints a summary line
//! (visible with --nocapture); the harness result line is the verdict.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use semigroups::{
    apery_set, apery_update_along_edge, brute_force_irreducibles, brute_force_semigroups,
    class_floor, enumerate_irreducibles, enumerate_semigroups, expand_class,
    expand_class_with_genus, kunz_vector, parent, path_to_root, root, satisfies_irreducible_system,
    satisfies_membership_system, GeneratorSet, KunzVector, NumericalSemigroup, OracleConfig,
};

fn sg(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(&GeneratorSet::new(gens).expect("valid generators"))
}

#[test]
fn criterion_1_count_reproduction() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_semigroup-enum"))
        .args(["enumerate", "11", "25", "--count"])
        .output()
        .expect("binary should spawn");
    let elapsed = start.elapsed();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "896");
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget is 5s");
    println!("criterion 1: pass (enumerate 11 25 --count = 896 in {elapsed:?})");
}

#[test]
fn criterion_2_class_expansion_members() {
    let expansion = expand_class(&sg(&[5, 7, 9, 11])).expect("seed meets the class hypotheses");
    assert_eq!(expansion.members().len(), 12);
    let added: BTreeSet<Vec<i64>> =
        (0..12).map(|i| expansion.added_elements(i)).collect();
    let expected: BTreeSet<Vec<i64>> = [
        vec![],
        vec![9],
        vec![11],
        vec![12],
        vec![7, 12],
        vec![9, 11],
        vec![9, 12],
        vec![11, 12],
        vec![7, 9, 12],
        vec![7, 11, 12],
        vec![9, 11, 12],
        vec![7, 9, 11, 12],
    ]
    .into_iter()
    .collect();
    assert_eq!(added, expected);
    println!("criterion 2: pass (class of <5,7,9,11> has the 12 expected added-element sets)");
}

#[test]
fn criterion_3_path_to_root() {
    let path = path_to_root(&sg(&[6, 8, 9]));
    let expected =
        vec![sg(&[6, 8, 9]), sg(&[6, 9, 11, 14, 16]), sg(&[6, 10, 11, 14, 15])];
    assert_eq!(path, expected);
    assert_eq!(root(6, 19).unwrap(), sg(&[6, 10, 11, 14, 15]));
    println!("criterion 3: pass (<6,8,9> climbs to the (6,19) root in two steps)");
}

#[test]
fn criterion_4_genus_restricted_expansion() {
    let got = expand_class_with_genus(&sg(&[5, 7, 9, 11]), 10).unwrap();
    let expected =
        vec![sg(&[5, 9, 16, 17]), sg(&[5, 11, 14, 17, 18]), sg(&[5, 12, 14, 16, 18])];
    assert_eq!(got, expected);
    println!("criterion 4: pass (genus-10 members of the class are the 3 expected ones)");
}

#[test]
fn criterion_5_oracle_equivalence_and_scale_invariants() {
    let start = Instant::now();
    let cfg = OracleConfig::new();
    let mut families = 0;
    for f in 1..=18 {
        let all = brute_force_semigroups(f, &cfg).unwrap();
        for m in 1..=f + 1 {
            let expected: Vec<NumericalSemigroup> =
                all.iter().filter(|s| s.multiplicity() == m).cloned().collect();
            let got = enumerate_semigroups(m, f).unwrap();
            assert_eq!(got, expected, "family mismatch at m={m}, F={f}");
            families += 1;
        }
    }

    // Full-scale run checked by invariants rather than wall time.
    let tree = enumerate_irreducibles(20, 70).unwrap();
    assert!(tree.len() > 1);
    for (i, node) in tree.nodes().iter().enumerate() {
        assert_eq!(node.multiplicity(), 20);
        assert_eq!(node.frobenius(), 70);
        assert!(node.is_irreducible());
        assert!(satisfies_irreducible_system(&kunz_vector(node).unwrap(), 70));
        match tree.parent_index(i) {
            Some(p) => assert_eq!(parent(node).as_ref(), Some(&tree.nodes()[p])),
            None => {
                assert_eq!(i, 0);
                assert!(parent(node).is_none());
            }
        }
    }
    let distinct: BTreeSet<&NumericalSemigroup> = tree.nodes().iter().collect();
    assert_eq!(distinct.len(), tree.len(), "tree nodes repeat");
    println!(
        "criterion 5: pass ({families} families match the oracle; |I(20,70)| = {} with all invariants holding; {:?} total)",
        tree.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_6_depth_two_closed_form() {
    let mut pairs = 0;
    for m in 2..=12 {
        for f in m + 1..2 * m {
            let count = enumerate_semigroups(m, f).unwrap().len();
            assert_eq!(count, 1usize << (f - m - 1), "wrong count at m={m}, F={f}");
            pairs += 1;
        }
    }
    println!("criterion 6: pass ({pairs} depth-two families have 2^(F-m-1) members)");
}

/// All vectors with 1 <= q_i <= (F+m-i)/m + 1, one step past every bound the
/// membership system can impose.
fn kunz_box(m: i64, f: i64) -> Vec<Vec<i64>> {
    let dims: Vec<i64> = (1..m).map(|i| (f + m - i).div_euclid(m) + 1).collect();
    let mut out = Vec::new();
    let mut cur: Vec<i64> = vec![1; dims.len()];
    loop {
        out.push(cur.clone());
        let mut k = 0;
        loop {
            if k == cur.len() {
                return out;
            }
            if cur[k] < dims[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 1;
            k += 1;
        }
    }
}

#[test]
fn criterion_7_kunz_systems_match_oracle() {
    let cfg = OracleConfig::new();
    let mut swept = 0;
    let mut boxed = 0;
    for f in 1..=16 {
        let members = brute_force_semigroups(f, &cfg).unwrap();
        let irreducibles = brute_force_irreducibles(f, &cfg).unwrap();
        for s in &members {
            let v = kunz_vector(s).unwrap();
            assert!(satisfies_membership_system(&v, f), "member rejected: {s:?}");
            assert_eq!(
                satisfies_irreducible_system(&v, f),
                irreducibles.binary_search(s).is_ok(),
                "irreducibility verdict differs at F={f} for {s:?}"
            );
            swept += 1;
        }
        for m in 2..=6 {
            let member_vecs: BTreeSet<Vec<i64>> = members
                .iter()
                .filter(|s| s.multiplicity() == m)
                .map(|s| kunz_vector(s).unwrap().coords().to_vec())
                .collect();
            let irr_vecs: BTreeSet<Vec<i64>> = irreducibles
                .iter()
                .filter(|s| s.multiplicity() == m)
                .map(|s| kunz_vector(s).unwrap().coords().to_vec())
                .collect();
            for coords in kunz_box(m, f) {
                let v = KunzVector::new(m, coords.clone()).unwrap();
                assert_eq!(
                    satisfies_membership_system(&v, f),
                    member_vecs.contains(&coords),
                    "membership verdict differs for m={m}, F={f}, coords {coords:?}"
                );
                assert_eq!(
                    satisfies_irreducible_system(&v, f),
                    irr_vecs.contains(&coords),
                    "irreducibility verdict differs for m={m}, F={f}, coords {coords:?}"
                );
                boxed += 1;
            }
        }
    }
    println!("criterion 7: pass ({swept} member vectors swept, {boxed} box vectors cross-checked, zero mismatches)");
}

#[test]
fn criterion_8_apery_edge_identity() {
    let mut edges = 0;
    for (m, f) in [(5, 13), (6, 19), (7, 16), (11, 25)] {
        let tree = enumerate_irreducibles(m, f).unwrap();
        for (p, c) in tree.edges() {
            let child = &tree.nodes()[c];
            let updated = apery_update_along_edge(
                &apery_set(child, m).unwrap(),
                child.ratio().unwrap(),
                m,
                f,
            )
            .unwrap();
            assert_eq!(
                updated,
                apery_set(&tree.nodes()[p], m).unwrap(),
                "edge formula differs at m={m}, F={f}, edge ({p}, {c})"
            );
            edges += 1;
        }
    }
    println!("criterion 8: pass (Apery update formula matches direct computation on {edges} edges)");
}

#[test]
fn criterion_9_structural_invariants() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (m, f) in [(5, 13), (6, 19), (7, 16), (11, 25)] {
        let tree = enumerate_irreducibles(m, f).unwrap();
        let target_genus = (f + 2) / 2;
        let mut classes: Vec<Vec<NumericalSemigroup>> = Vec::new();
        for node in tree.nodes() {
            assert_eq!(node.genus(), target_genus, "node genus off at m={m}, F={f}");
            let floor = class_floor(node).unwrap();
            for g in floor.minimal_generators().iter() {
                assert!(2 * g < f || g > f, "floor generator {g} sits in [F/2, F]");
            }
            classes.push(expand_class(node).unwrap().members().to_vec());
        }
        for _ in 0..1000 {
            let class = &classes[rng.gen_range(0..classes.len())];
            let a = &class[rng.gen_range(0..class.len())];
            let b = &class[rng.gen_range(0..class.len())];
            let union: Vec<i64> = a
                .small_elements()
                .iter()
                .chain(b.small_elements())
                .copied()
                .collect::<BTreeSet<i64>>()
                .into_iter()
                .collect();
            let inter: Vec<i64> = a
                .small_elements()
                .iter()
                .filter(|x| b.contains(**x))
                .copied()
                .collect();
            let u = NumericalSemigroup::from_small_elements(&union, f)
                .expect("union of class members is a semigroup");
            let i = NumericalSemigroup::from_small_elements(&inter, f)
                .expect("intersection of class members is a semigroup");
            assert!(class.binary_search(&u).is_ok(), "union left the class");
            assert!(class.binary_search(&i).is_ok(), "intersection left the class");
        }
    }
    println!("criterion 9: pass (genus, homogeneous floors, and union/intersection closure hold)");
}
