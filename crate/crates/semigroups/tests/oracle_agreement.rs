//! Cross-validation of the enumeration pipeline against the independent
//! gap-set oracle at small Frobenius numbers. The heavyweight sweeps live in
//! the CLI crate's acceptance suite; these keep the library honest on its
//! own.

use semigroups::{
    brute_force_irreducibles, brute_force_semigroups, enumerate_by_genus, enumerate_irreducibles,
    enumerate_semigroups, genus_range, irreducible_closure, irreducible_exists, kunz_vector,
    satisfies_irreducible_system, satisfies_membership_system, theta, OracleConfig,
};

#[test]
fn pipeline_matches_oracle_for_every_multiplicity() {
    let cfg = OracleConfig::new();
    for f in 1..=14 {
        for m in 1..=f + 1 {
            let pipeline = enumerate_semigroups(m, f).unwrap();
            let oracle =
                brute_force_semigroups(f, &cfg.clone().with_multiplicity(m)).unwrap();
            assert_eq!(pipeline, oracle, "mismatch at m={m}, F={f}");
        }
    }
}

#[test]
fn tree_matches_oracle_irreducibles() {
    let cfg = OracleConfig::new();
    for f in 3..=14 {
        for m in 2..=f + 1 {
            let oracle =
                brute_force_irreducibles(f, &cfg.clone().with_multiplicity(m)).unwrap();
            assert_eq!(irreducible_exists(m, f), !oracle.is_empty(), "existence at m={m}, F={f}");
            if oracle.is_empty() {
                continue;
            }
            let mut nodes = enumerate_irreducibles(m, f).unwrap().nodes().to_vec();
            nodes.sort();
            assert_eq!(nodes, oracle, "tree mismatch at m={m}, F={f}");
        }
    }
}

#[test]
fn genus_enumeration_matches_oracle() {
    let cfg = OracleConfig::new();
    for m in 2..=6 {
        for g in 2..=7 {
            let direct = enumerate_by_genus(m, g, None).unwrap();
            let mut swept = Vec::new();
            // Sweep every F the oracle can reach, not just the window, so a
            // wrong window would surface as a miss.
            for f in 1..=13 {
                swept.extend(
                    brute_force_semigroups(
                        f,
                        &cfg.clone().with_multiplicity(m).with_genus(g),
                    )
                    .unwrap(),
                );
            }
            swept.sort();
            assert_eq!(direct, swept, "genus mismatch at m={m}, g={g}");
            // The window only covers m <= g; m = g + 1 is the closed-form
            // case {0, m, ->} with F = g.
            if m <= g {
                for s in &direct {
                    assert!(genus_range(m, g).contains(&s.frobenius()));
                }
            }
        }
    }
}

#[test]
fn classes_tile_each_family() {
    // Floors, closures and θ all agree with the class structure on every
    // oracle-produced member deep enough for the machinery.
    let cfg = OracleConfig::new();
    for f in 7..=13 {
        for m in 3..=(f - 1) / 2 {
            for s in brute_force_semigroups(f, &cfg.clone().with_multiplicity(m)).unwrap() {
                let seed = irreducible_closure(&s);
                assert!(seed.is_irreducible());
                assert_eq!(seed.frobenius(), s.frobenius());
                assert_eq!(theta(&seed), theta(&s), "closure must preserve θ at m={m}, F={f}");
                let exp = semigroups::expand_class(&seed).unwrap();
                assert!(exp.members().contains(&s), "class must recover its member");
            }
        }
    }
}

#[test]
fn kunz_systems_match_oracle_membership() {
    let cfg = OracleConfig::new();
    let mut by_frobenius = Vec::new();
    for f in 1..=10 {
        by_frobenius.push((f, brute_force_semigroups(f, &cfg).unwrap()));
    }
    for (f_actual, family) in &by_frobenius {
        for s in family {
            if s.multiplicity() < 2 {
                continue;
            }
            let v = kunz_vector(s).unwrap();
            let irreducible = s.is_irreducible();
            for (f_target, _) in &by_frobenius {
                let member = f_target == f_actual;
                assert_eq!(
                    satisfies_membership_system(&v, *f_target),
                    member,
                    "membership system joint on F={f_actual} vs target {f_target}"
                );
                assert_eq!(
                    satisfies_irreducible_system(&v, *f_target),
                    member && irreducible,
                    "irreducible system joint on F={f_actual} vs target {f_target}"
                );
            }
        }
    }
}
