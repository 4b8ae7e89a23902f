//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line with its timing (run with `--nocapture` to see them).
//! Every tolerance and time budget is pinned here.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use bouquet::census::{check_census, load_census, Count};
use bouquet::cone::{check_good, cone_invariants, GoodCone};
use bouquet::contact::{metric_matrix, verify_identities, CatalogId, FD_TOLERANCE};
use bouquet::equiv::are_equivalent;
use bouquet::join::{sphere_join_cone, wz_family, SphereBundle, WzFamily};
use bouquet::lattice::IntMatrix;
use bouquet::links::{
    brieskorn_weights, dim_moduli, dim_transverse_complex_family, h0_count, sylvester_sequence,
    SylvesterConvention, WeightedLinkData,
};
use bouquet::polygon::{
    cup_injectivity_check, epsilon_generic, heptagon_presentation, polygon_dimension,
    quotient_class_reduce, relation_rank, PolygonSpaceData,
};

/// Runs a criterion body, asserts its time budget, and prints the verdict.
fn criterion<F: FnOnce()>(number: u32, name: &str, budget: Duration, body: F) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {number} ({name}) took {elapsed:?}, budget {budget:?}"
    );
    println!("acceptance criterion {number:2} [{name}]: PASS in {elapsed:?}");
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let out = bouquet::cli::run(std::iter::once("bouquet").chain(args.iter().copied()));
    let v = serde_json::from_str(&out.stdout).expect("CLI emits valid JSON");
    (out.exit_code, v)
}

#[test]
fn acceptance_01_gysin_reproduction() {
    // Warm path once; the budget covers the computation itself.
    let (code, v) = cli_json(&[
        "bundle",
        "gysin",
        "--base",
        "1,7,15,7,1",
        "--ranks",
        "1,7",
        "--duality",
    ]);
    assert_eq!(code, 0);
    criterion(1, "gysin reproduction", Duration::from_millis(1), || {
        let ranks = bouquet::polygon::duality_complete_ranks(&[1, 7, 15, 7, 1], &[1, 7]).unwrap();
        let input = bouquet::polygon::GysinInput::new(vec![1, 7, 15, 7, 1], ranks).unwrap();
        let betti = bouquet::polygon::gysin_betti(&input);
        assert_eq!(betti, vec![1, 0, 6, 0, 8, 8, 0, 6, 0, 1]);
        assert_eq!(
            v["betti"],
            serde_json::json!([1, 0, 6, 0, 8, 8, 0, 6, 0, 1])
        );
    });
}

#[test]
fn acceptance_02_c1_reduction() {
    criterion(2, "c1 reduction", Duration::from_millis(10), || {
        let cls: Vec<BigInt> = [5, 2, 2, 2, 2, 2, 2]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        let omega: Vec<BigInt> = [9, 2, 2, 4, 4, 6, 6]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        let reduced = quotient_class_reduce(&cls, &omega).unwrap();
        let expected: Vec<BigInt> = [-4, 0, 0, -2, -2, -4, -4]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(reduced.representative, expected);
        assert!(!reduced.is_zero_in_quotient);
        assert!(
            reduced.is_even_in_quotient,
            "mod-2 reduction must vanish (spin)"
        );
    });
}

#[test]
fn acceptance_03_weighted_link_cross_check() {
    criterion(
        3,
        "weighted-link pipeline",
        Duration::from_millis(10),
        || {
            let data = brieskorn_weights(&[5, 3, 2, 2, 2]).unwrap();
            assert_eq!(data.degree(), &BigUint::from(30u32));
            assert_eq!(data.weights(), &[6u32, 10, 15, 15, 15].map(BigUint::from));
            assert_eq!(h0_count(&data).unwrap(), BigUint::from(8u32));
            assert_eq!(
                dim_transverse_complex_family(&data).unwrap(),
                BigInt::from(3)
            );
            assert_eq!(dim_moduli(&data, 3).unwrap(), BigInt::zero());

            // Second member of the family: degree 66, same family dimension.
            let data = brieskorn_weights(&[11, 3, 2, 2, 2]).unwrap();
            assert_eq!(data.degree(), &BigUint::from(66u32));
            assert_eq!(
                dim_transverse_complex_family(&data).unwrap(),
                BigInt::from(3)
            );
        },
    );
}

#[test]
fn acceptance_04_sylvester_value() {
    criterion(4, "sylvester value", Duration::from_millis(10), || {
        let seq = sylvester_sequence(8, SylvesterConvention::A).unwrap();
        let quoted = BigUint::from(10650056950807u64);
        assert!(
            seq.contains(&quoted),
            "sequence must contain the quoted value"
        );
        assert_eq!(seq[0], BigUint::from(2u32));
    });
}

#[test]
fn acceptance_05_bouquet_formulas() {
    criterion(5, "bouquet formulas", Duration::from_millis(50), || {
        let r = wz_family(WzFamily::D { k1: 7, k2: 2 }).unwrap();
        assert_eq!(r.bouquet_size, 4);

        // Twenty (l, e) cases cross-checked against direct enumeration of
        // the smallest integer at least e/(l-e).
        let mut cases = 0;
        for l in 2u64..=9 {
            for e in 1..l {
                if cases == 20 {
                    break;
                }
                let r = wz_family(WzFamily::TildeD { l, e }).unwrap();
                let enumerated = (0..=e).find(|j| j * (l - e) >= e).expect("bounded search");
                assert_eq!(r.bouquet_size, enumerated, "l={l}, e={e}");
                cases += 1;
            }
        }
        assert_eq!(cases, 20);

        // Parity rule on ten pairs: even l on the trivial bundle, odd l on
        // the non-trivial one.
        let pairs = [
            (2u64, 1u64),
            (3, 1),
            (3, 2),
            (4, 1),
            (4, 3),
            (5, 2),
            (5, 4),
            (6, 5),
            (7, 3),
            (8, 5),
        ];
        for (l, e) in pairs {
            let r = wz_family(WzFamily::TildeD { l, e }).unwrap();
            let expected = if l % 2 == 0 {
                SphereBundle::Trivial
            } else {
                SphereBundle::NonTrivial
            };
            assert_eq!(r.manifold, expected, "l={l}, e={e}");
            assert_eq!(r.c1_invariant, Some(l as i64 - 2 * e as i64));
        }
    });
}

#[test]
fn acceptance_06_cone_invariants() {
    criterion(6, "cone invariants", Duration::from_secs(1), || {
        // Every coprime sphere join with parameters up to five.
        let mut joins = 0;
        for k1 in 1u64..=5 {
            for k2 in 1u64..=5 {
                if num_integer::gcd(k1, k2) != 1 {
                    continue;
                }
                let cone = sphere_join_cone(k1, k2).unwrap();
                assert!(check_good(&cone).unwrap().good, "join ({k1},{k2})");
                let inv = cone_invariants(&cone).unwrap();
                assert!(inv.pi1.is_trivial(), "join ({k1},{k2})");
                assert_eq!(inv.pi2_rank, 1);
                assert_eq!(
                    inv.facet_count as i64 - cone.ambient_rank() as i64,
                    inv.pi2_rank
                );
                joins += 1;
            }
        }
        assert!(
            joins >= 19,
            "expected all coprime pairs up to 5, got {joins}"
        );

        // Lens cones: pi_1 = Z/p read off the Smith normal form.
        for p in 1i64..=9 {
            let cone = GoodCone::from_i64(&[&[1, 0], &[-1, p]]).unwrap();
            let inv = cone_invariants(&cone).unwrap();
            assert_eq!(inv.pi2_rank, 0);
            if p == 1 {
                assert!(inv.pi1.is_trivial());
            } else {
                assert_eq!(inv.pi1.invariant_factors, vec![BigInt::from(p)]);
            }
        }
    });
}

fn random_unimodular(dim: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
    let mut u = IntMatrix::identity(dim);
    for _ in 0..6 {
        let r = rng.gen_range(0..dim);
        let mut c = rng.gen_range(0..dim);
        while c == r {
            c = rng.gen_range(0..dim);
        }
        let q = rng.gen_range(-2i64..=2);
        let mut shear = IntMatrix::identity(dim);
        shear.set(r, c, BigInt::from(q));
        u = u.mul(&shear);
    }
    u
}

#[test]
fn acceptance_07_equivalence_soundness() {
    criterion(7, "equivalence soundness", Duration::from_secs(30), || {
        let test_cones = [
            GoodCone::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap(),
            sphere_join_cone(1, 1).unwrap(),
            sphere_join_cone(7, 2).unwrap(),
            sphere_join_cone(5, 2).unwrap(),
            GoodCone::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 1]]).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for cone in &test_cones {
            for _ in 0..100 {
                let u = random_unimodular(cone.ambient_rank(), &mut rng);
                let moved = cone.transform(&u).unwrap();
                let eq = are_equivalent(cone, &moved).unwrap();
                assert!(eq.equivalent, "unimodular image must be equivalent");
                // The witness is verified inside are_equivalent; double-check
                // the set equality here anyway.
                let l = eq.witness.expect("witness accompanies equivalence");
                let mut image: Vec<Vec<BigInt>> = cone
                    .facet_normals()
                    .iter()
                    .map(|nu| l.mul_vec(nu))
                    .collect();
                image.sort();
                let mut target = moved.facet_normals().to_vec();
                target.sort();
                assert_eq!(image, target, "witness must map normals onto normals");
                // Equivalent cones share invariants.
                let a = cone_invariants(cone).unwrap();
                let b = cone_invariants(&moved).unwrap();
                assert_eq!(a.pi1, b.pi1);
                assert_eq!(a.pi2_rank, b.pi2_rank);
            }
        }
        let seven_two = sphere_join_cone(7, 2).unwrap();
        let five_two = sphere_join_cone(5, 2).unwrap();
        assert!(!are_equivalent(&seven_two, &five_two).unwrap().equivalent);
    });
}

#[test]
fn acceptance_08_h0_oracle_equivalence() {
    criterion(8, "h0 oracle equivalence", Duration::from_secs(60), || {
        fn brute_force(w: &[u64], d: u64) -> u64 {
            match w {
                [] => (d == 0) as u64,
                [first, rest @ ..] => {
                    let mut count = 0;
                    let mut a = 0;
                    while a * first <= d {
                        count += brute_force(rest, d - a * first);
                        a += 1;
                    }
                    count
                }
            }
        }
        fn weight_tuples(len: usize) -> Vec<Vec<u64>> {
            let mut out = vec![vec![]];
            for _ in 0..len {
                let mut next = Vec::new();
                for t in &out {
                    for w in 1..=9u64 {
                        let mut t2 = t.clone();
                        t2.push(w);
                        next.push(t2);
                    }
                }
                out = next;
            }
            out
        }
        let mut checked = 0u64;
        for len in 1..=4usize {
            for w in weight_tuples(len) {
                for d in 1..=40u64 {
                    let data = WeightedLinkData::from_u64(&w, d).unwrap();
                    let expected = brute_force(&w, d);
                    assert_eq!(
                        h0_count(&data).unwrap(),
                        BigUint::from(expected),
                        "w={w:?}, d={d}"
                    );
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, (9 + 81 + 729 + 6561) * 40);
    });
}

#[test]
fn acceptance_09_identity_suite() {
    criterion(9, "identity suite", Duration::from_secs(10), || {
        let entries = [
            CatalogId::T3 { k: 1 },
            CatalogId::T3 { k: 2 },
            CatalogId::T3 { k: 3 },
            CatalogId::OvertwistedS3 { k: 0 },
            CatalogId::OvertwistedS3 { k: 1 },
            CatalogId::OvertwistedS3 { k: 2 },
            CatalogId::UnitSphereBundle { n: 1 },
            CatalogId::UnitSphereBundle { n: 2 },
        ];
        for entry in entries {
            let report = verify_identities(&entry, 200, 42, 1e-9).unwrap();
            assert!(
                report.all_passed,
                "{entry}: {:?}",
                report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            );
            let fd = report
                .checks
                .iter()
                .find(|c| c.name == "deta_finite_difference")
                .unwrap();
            assert!(fd.max_residual <= FD_TOLERANCE);
        }
        // The contact metric of the first tight torus structure is flat.
        let g = metric_matrix(&CatalogId::T3 { k: 1 }, &[0.7, 1.9, 4.2]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((g[i][j] - expected).abs() <= 1e-9);
            }
        }
    });
}

#[test]
fn acceptance_10_heptagon_algebra() {
    criterion(10, "heptagon algebra", Duration::from_secs(1), || {
        let h = heptagon_presentation();
        assert_eq!(relation_rank(&h.presentation), 12);
        assert_eq!(
            cup_injectivity_check(&h.presentation, &h.omega).unwrap(),
            (true, 7)
        );
        let heptagon = PolygonSpaceData::new(
            [1u64, 1, 2, 2, 3, 3, 3]
                .iter()
                .map(|&a| BigRational::from_integer(BigInt::from(a)))
                .collect(),
        )
        .unwrap();
        assert!(epsilon_generic(&heptagon).unwrap());
        assert_eq!(polygon_dimension(7).unwrap(), 8);
    });
}

#[test]
fn acceptance_11_census_integrity() {
    criterion(11, "census integrity", Duration::from_secs(1), || {
        let records = load_census();
        for report in check_census(&records) {
            assert!(
                report.consistent,
                "{}: {:?}",
                report.structure, report.violations
            );
        }
        // Family records agree with recomputation through the join module.
        let mut recomputed = 0;
        for record in &records {
            if let Some(p) = record.wz_params {
                let family = match p.family {
                    bouquet::census::WzFamilyTag::D => WzFamily::D { k1: p.a, k2: p.b },
                    bouquet::census::WzFamilyTag::TildeD => WzFamily::TildeD { l: p.a, e: p.b },
                };
                let fresh = wz_family(family).unwrap();
                assert_eq!(record.n_reeb, Count::AtLeast(fresh.bouquet_size));
                assert_eq!(record.manifold, fresh.manifold.to_string());
                recomputed += 1;
            }
        }
        assert!(recomputed >= 9, "expected at least nine family records");
    });
}
