//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Criterion 10e is expected to fail: the perturbed-orbit generator multiset
//! provably exceeds the Morse–Bott chain ranks in the window degrees
//! (2ℓ+2)N + {−1, 0, 1, 2} — that excess is exactly what forces the
//! nontrivial differentials there — so the asserted multiset equality cannot
//! hold. The test states the required equality honestly and reports the
//! actual relationship in its failure message.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use brieskorn::*;

fn tuple(raw: &[u64]) -> ExponentTuple {
    ExponentTuple::new(raw.iter().copied()).unwrap()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_str(n: &str, d: &str) -> Rational {
    Rational::new(BigInt::from_str(n).unwrap(), BigInt::from_str(d).unwrap())
}

fn pass(line: &str) {
    println!("PASS: {line}");
}

#[test]
fn criterion_01_signature_of_the_78k_family() {
    let b = Budget::DEFAULT;
    let start = Instant::now();
    let counts = signature_counts_fast(&tuple(&[79, 13, 6, 3, 3]), b).unwrap();
    let first = start.elapsed();
    assert_eq!(counts.sigma_plus, 12272);
    assert_eq!(counts.sigma_minus, 6448);
    assert_eq!(counts.signature(), 5824);
    assert!(first < Duration::from_secs(1), "took {first:?}");
    for k in [2u64, 3] {
        let start = Instant::now();
        let direct = signature_counts_fast(&tuple(&[78 * k + 1, 13, 6, 3, 3]), b).unwrap();
        let elapsed = start.elapsed();
        assert_eq!(direct, counts.scaled(k as u128), "k = {k}");
        assert!(elapsed < Duration::from_secs(5), "k = {k} took {elapsed:?}");
    }
    pass("criterion 1 - sigma(79,13,6,3,3) = (12272, 6448), 5824; k = 2, 3 scale exactly");
}

#[test]
fn criterion_02_signature_of_13_11_7_4_3() {
    let start = Instant::now();
    let counts = signature_counts_fast(&tuple(&[13, 11, 7, 4, 3]), Budget::DEFAULT).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(counts.signature(), 1344);
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass("criterion 2 - sigma(13,11,7,4,3) = 1344");
}

#[test]
fn criterion_03_chi_m_closed_form_and_stratum_table() {
    let b = Budget::DEFAULT;
    for k in 1u64..=5 {
        let result = mean_euler_characteristic(&tuple(&[78 * k + 1, 13, 6, 3, 3]), b).unwrap();
        let expected = rat(71 + 3198 * k as i64, 142 - 1092 * k as i64);
        assert_eq!(result.value, expected, "k = {k}");
    }
    // the nine rows at k = 1: sub-tuple, period/(pi/2), chi^S1, frequency
    let result = mean_euler_characteristic(&tuple(&[79, 13, 6, 3, 3]), b).unwrap();
    let mut rows: Vec<(Vec<u64>, u128, i128, u128)> = result
        .strata
        .iter()
        .map(|s| (s.exponents.clone(), s.period, s.chi_s1, s.frequency))
        .collect();
    rows.sort();
    let mut expected = vec![
        (vec![79, 13, 6, 3, 3], 78 * 79, 4, 1),
        (vec![13, 6, 3, 3], 78, 3, 78),
        (vec![79, 6, 3, 3], 6 * 79, 3, 12),
        (vec![6, 3, 3], 6, 0, 12 * 78),
        (vec![79, 13, 3, 3], 39 * 79, 3, 1),
        (vec![13, 3, 3], 39, 2, 78),
        (vec![79, 3, 3], 3 * 79, 2, 12),
        (vec![3, 3], 3, 3, 12 * 78),
        (vec![79, 13], 13 * 79, 1, 4),
    ];
    expected.sort();
    assert_eq!(rows, expected);
    pass("criterion 3 - chi_m((78k+1,13,6,3,3)) = (71+3198k)/(142-1092k) for k = 1..5; all nine stratum rows reproduced");
}

#[test]
fn criterion_04_chi_m_of_13_11_7_4_3_and_connected_sums() {
    let b = Budget::DEFAULT;
    let chi = mean_euler_characteristic(&tuple(&[13, 11, 7, 4, 3]), b)
        .unwrap()
        .value;
    assert_eq!(chi, rat(-3047, 2546));
    for k in 1u64..=10 {
        let sum = chi_m_connected_sum(&[(chi.clone(), k as u128)], 4).unwrap();
        assert_eq!(sum, rat(-1, 2) - rat(1774 * k as i64, 2546), "k = {k}");
    }
    pass("criterion 4 - chi_m(13,11,7,4,3) = -3047/2546; k-fold sums follow -1/2 - 1774k/2546");
}

#[test]
fn criterion_05_search_reproduces_the_published_rows() {
    let start = Instant::now();
    let hits = search_exotic_spheres(4, 8, Budget::DEFAULT).unwrap();
    let rows: Vec<Vec<u64>> = hits.iter().map(|h| h.tuple.exponents().to_vec()).collect();
    assert_eq!(
        rows,
        vec![
            vec![11, 7, 5, 5, 4],
            vec![11, 11, 7, 4, 3],
            vec![13, 11, 7, 4, 3],
            vec![11, 10, 9, 8, 2],
            vec![17, 16, 5, 4, 3],
            vec![21, 13, 5, 4, 3],
        ]
    );
    let high = search_exotic_spheres(26, 26, Budget::DEFAULT).unwrap();
    assert_eq!(high.len(), 1);
    assert_eq!(high[0].tuple.exponents(), &[79, 13, 6, 3, 3]);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    pass("criterion 5 - search s in [4,8] gives the six known rows; s = 26 gives (79,13,6,3,3)");
}

/// Non-blocking stretch goal: the full table for s <= 60.
/// Run with `cargo test -p brieskorn --test acceptance -- --ignored`.
#[test]
#[ignore = "stretch goal, a few minutes of enumeration"]
fn criterion_05_stretch_full_table_to_s_60() {
    let hits = search_exotic_spheres(1, 60, Budget::DEFAULT).unwrap();
    let mut by_s: BTreeMap<u64, Vec<Vec<u64>>> = BTreeMap::new();
    for h in &hits {
        by_s.entry(h.s).or_default().push(h.tuple.exponents().to_vec());
    }
    let expected: &[(u64, &[&[u64]])] = &[
        (4, &[&[11, 7, 5, 5, 4]]),
        (5, &[&[11, 11, 7, 4, 3]]),
        (6, &[&[13, 11, 7, 4, 3]]),
        (7, &[&[11, 10, 9, 8, 2]]),
        (8, &[&[17, 16, 5, 4, 3], &[21, 13, 5, 4, 3]]),
        (10, &[&[26, 13, 5, 4, 3], &[41, 6, 5, 4, 4]]),
        (12, &[&[25, 11, 7, 7, 2], &[28, 11, 9, 3, 3], &[37, 11, 5, 4, 3], &[46, 7, 5, 5, 3]]),
        (
            14,
            &[
                &[22, 17, 7, 6, 2],
                &[25, 13, 8, 6, 2],
                &[29, 16, 7, 3, 3],
                &[31, 13, 8, 3, 3],
                &[31, 15, 7, 3, 3],
                &[37, 11, 8, 3, 3],
                &[43, 11, 5, 4, 3],
            ],
        ),
        (15, &[&[25, 16, 7, 6, 2]]),
        (16, &[&[33, 13, 7, 6, 2]]),
        (18, &[&[37, 13, 7, 6, 2]]),
        (20, &[&[21, 17, 16, 4, 2]]),
        (21, &[&[43, 11, 10, 5, 2], &[43, 19, 6, 3, 3]]),
        (22, &[&[25, 23, 11, 4, 2], &[45, 13, 7, 6, 2]]),
        (23, &[&[31, 24, 7, 5, 2]]),
        (
            24,
            &[&[31, 17, 13, 4, 2], &[31, 25, 7, 5, 2], &[91, 9, 5, 4, 3], &[97, 7, 6, 4, 3]],
        ),
        (25, &[&[31, 21, 11, 4, 2]]),
        (26, &[&[79, 13, 6, 3, 3]]),
        (27, &[&[37, 16, 13, 4, 2], &[37, 19, 11, 4, 2], &[46, 19, 7, 5, 2]]),
        (28, &[&[64, 11, 9, 5, 2], &[71, 9, 7, 7, 2]]),
        (30, &[&[41, 19, 11, 4, 2]]),
        (33, &[&[41, 23, 10, 4, 2]]),
        (
            34,
            &[&[35, 31, 9, 4, 2], &[52, 17, 11, 4, 2], &[86, 17, 4, 4, 3], &[103, 11, 7, 3, 3]],
        ),
        (36, &[&[37, 31, 9, 4, 2], &[91, 17, 4, 4, 3]]),
        (39, &[&[79, 16, 7, 5, 2]]),
        (40, &[&[101, 17, 4, 4, 3]]),
        (42, &[&[113, 16, 4, 4, 3]]),
        (43, &[&[44, 37, 6, 5, 2]]),
        (44, &[&[49, 34, 6, 5, 2], &[89, 16, 7, 5, 2]]),
        (45, &[&[136, 11, 7, 3, 3]]),
        (46, &[&[93, 16, 7, 5, 2]]),
        (48, &[&[97, 16, 7, 5, 2]]),
        (49, &[&[148, 11, 7, 3, 3]]),
        (50, &[&[121, 13, 6, 6, 2]]),
        (52, &[&[131, 10, 9, 5, 2], &[157, 13, 6, 3, 3]]),
        (54, &[&[73, 28, 6, 5, 2]]),
        (57, &[&[91, 20, 9, 4, 2]]),
        (60, &[&[91, 31, 5, 3, 3]]),
    ];
    let expected: BTreeMap<u64, Vec<Vec<u64>>> = expected
        .iter()
        .map(|&(s, rows)| {
            let mut rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
            rows.sort();
            (s, rows)
        })
        .collect();
    assert_eq!(by_s, expected);
    pass("criterion 5 (stretch) - full table agreement for s <= 60");
}

#[test]
fn criterion_06_almost_contact_values_and_sums() {
    let b = Budget::DEFAULT;
    let m1 = almost_contact_class(&tuple(&[11, 9, 9, 5, 3]), b).unwrap();
    let m2 = almost_contact_class(&tuple(&[13, 10, 9, 3, 3]), b).unwrap();
    let m3 = almost_contact_class(&tuple(&[167, 3, 2, 2, 2]), b).unwrap();
    assert_eq!(m1.primary, BigInt::from(-40));
    assert_eq!(m2.primary, BigInt::from(72));
    assert_eq!(m3.primary, BigInt::from(194));
    let m4 = connected_sum_ac(&[(m1, 2), (m2, 1)], 4).unwrap();
    assert_eq!(m4.primary, BigInt::from(-8));
    let m5 = connected_sum_ac(&[(m4.clone(), 24), (m3, 1)], 4).unwrap();
    assert_eq!(m5.primary, BigInt::from(2));
    let m6 = connected_sum_ac(&[(m4, 1), (m5, 3)], 4).unwrap();
    assert_eq!(m6.primary, BigInt::from(-2));
    pass("criterion 6 - ac values -40, 72, 194 and connected sums -8, +2, -2");
}

#[test]
fn criterion_07_constants() {
    assert_eq!(sigma_m_const(2), BigInt::from(224));
    assert_eq!(sigma_m_const(3), BigInt::from(7936));
    assert_eq!(sigma_m_const(4), BigInt::from(65024));
    let inv = rat(1, 4) / s_m_const(2);
    assert_eq!(inv, rat(45, 28));
    pass("criterion 7 - sigma_2 = 224, sigma_3 = 7936, sigma_4 = 65024, 1/(4 S_2) = 45/28");
}

#[test]
fn criterion_08_dimension_11_combination() {
    let b = Budget::DEFAULT;
    let sigma2 = tuple(&[72 * 496 + 1, 9, 8, 8, 8, 8, 8]);
    let start = Instant::now();
    let counts = signature_counts_fast(&sigma2, b).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(counts.mu, 9_680_832 * 496);
    assert_eq!(counts.signature(), -1_060_560 * 496);
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");

    let ac2 = almost_contact_class(&sigma2, b).unwrap();
    assert_eq!(ac2.primary, BigInt::from(-396_387_936i64));

    let sigma1 = tuple(&[5953, 3, 2, 2, 2, 2, 2]);
    let combo = find_trivial_ac_combo(&sigma1, &sigma2, b).unwrap();
    assert_eq!(combo.chi_m, rat_str("-3345510952696507", "12695042650"));
    assert!(combo.ac_total.is_zero());
    pass("criterion 8 - dim 11: mu and sigma scale by 496, ac_2 = -396387936, combo chi_m = -3345510952696507/12695042650");
}

#[test]
fn criterion_09_dimension_15_combination() {
    let b = Budget::DEFAULT;
    // per-k signature reading: sigma(91, 10, 9^7) = 86754800 at k = 1
    let per_k = signature_counts_fast(&tuple(&[91, 10, 9, 9, 9, 9, 9, 9, 9]), b).unwrap();
    assert_eq!(per_k.signature(), 86_754_800);
    assert_eq!(per_k.mu, 1_698_693_120);

    let sigma2 = tuple(&[90 * 4064 + 1, 10, 9, 9, 9, 9, 9, 9, 9]);
    let ac2 = almost_contact_class(&sigma2, b).unwrap();
    assert_eq!(ac2.primary, BigInt::from(-172_412_979_840i64));

    // Sigma_1 at k = sigma_4/8 = 8128
    let sigma1 = tuple(&[6 * 8128 + 1, 3, 2, 2, 2, 2, 2, 2, 2]);
    let combo = find_trivial_ac_combo(&sigma1, &sigma2, b).unwrap();
    assert_eq!(
        combo.chi_m,
        rat_str("744637007679318226185", "6671235576398")
    );
    assert!(combo.ac_total.is_zero());
    pass("criterion 9 - dim 15: ac_2 = -172412979840, combo chi_m = 744637007679318226185/6671235576398");
}

#[test]
fn criterion_10a_fast_equals_naive_on_random_tuples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let caps = [40u64, 25, 12, 8, 6];
    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(2..=6usize); // tuple has n + 1 entries
        let cap = caps[n - 2];
        let raw: Vec<u64> = (0..=n).map(|_| rng.gen_range(2..=cap)).collect();
        let t = match ExponentTuple::new(raw) {
            Ok(t) => t,
            Err(_) => continue,
        };
        if t.milnor_number() > 200_000 {
            continue;
        }
        let fast = signature_counts_fast(&t, Budget::DEFAULT).unwrap();
        let naive = signature_counts_naive(&t, Budget::DEFAULT).unwrap();
        assert_eq!(fast, naive, "{t}");
        assert_eq!(fast.sigma_plus + fast.sigma_minus + fast.sigma_zero, fast.mu);
        checked += 1;
    }
    pass("criterion 10a - fast = naive on 200 random tuples with mu <= 2*10^5");
}

#[test]
fn criterion_10b_partition_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..100 {
        let n = rng.gen_range(2..=5usize);
        let raw: Vec<u64> = (0..=n).map(|_| rng.gen_range(2..=12u64)).collect();
        let t = ExponentTuple::new(raw).unwrap();
        let c = signature_counts_fast(&t, Budget::DEFAULT).unwrap();
        assert_eq!(c.sigma_plus + c.sigma_minus + c.sigma_zero, c.mu, "{t}");
        assert_eq!(c.mu, t.milnor_number());
    }
    pass("criterion 10b - sigma^+ + sigma^- + sigma^0 = mu");
}

#[test]
fn criterion_10c_permutation_invariance() {
    let b = Budget::DEFAULT;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..100 {
        let n = rng.gen_range(3..=5usize);
        let raw: Vec<u64> = (0..=n).map(|_| rng.gen_range(2..=10u64)).collect();
        let mut first = raw.clone();
        let mut second = raw.clone();
        first.shuffle(&mut rng);
        second.shuffle(&mut rng);
        let ta = ExponentTuple::new(first).unwrap();
        let tb = ExponentTuple::new(second).unwrap();
        assert_eq!(ta, tb);
        assert_eq!(ta.milnor_number(), tb.milnor_number());
        assert_eq!(
            signature_counts_fast(&ta, b).unwrap(),
            signature_counts_fast(&tb, b).unwrap()
        );
        assert_eq!(
            sphere_criterion(&ta).unwrap().condition,
            sphere_criterion(&tb).unwrap().condition
        );
        assert_eq!(principal_rs_index(&ta).unwrap(), principal_rs_index(&tb).unwrap());
        let chi_a = mean_euler_characteristic(&ta, b);
        let chi_b = mean_euler_characteristic(&tb, b);
        match (chi_a, chi_b) {
            (Ok(x), Ok(y)) => assert_eq!(x.value, y.value),
            (Err(x), Err(y)) => assert_eq!(x, y),
            other => panic!("permutation changed chi_m availability: {other:?}"),
        }
    }
    pass("criterion 10c - invariants agree on 100 random permutation pairs");
}

#[test]
fn criterion_10d_search_hits_have_zero_middle_betti() {
    let b = Budget::DEFAULT;
    let mut hits = search_exotic_spheres(4, 8, b).unwrap();
    hits.extend(search_exotic_spheres(26, 26, b).unwrap());
    assert!(!hits.is_empty());
    for hit in &hits {
        assert!(hit.sphere);
        assert_eq!(middle_betti(&hit.tuple, b).unwrap(), 0, "{}", hit.tuple);
        // and, n being even, the sphere's signature is divisible by 8
        assert_eq!(hit.counts.signature() % 8, 0);
    }
    pass("criterion 10d - every search hit is a sphere with middle Betti number 0");
}

/// The criterion as specified: the multiset {cz, cz+1} over all perturbed
/// orbits equals the Morse–Bott chain-rank multiset for l in {2, 3, 4},
/// degrees <= 60. The two complexes genuinely differ in the window degrees
/// (2l+2)N + {-1, 0, 1, 2} — the perturbed one has exactly one more
/// generator there, which is what makes the differentials in those degrees
/// nontrivial — so this equality cannot hold; the companion unit test
/// `floer::tests::generators_versus_chain_ranks` pins the true relationship.
#[test]
fn criterion_10e_cz_and_morse_bott_degree_multisets() {
    let mut failures = Vec::new();
    for ell in [2u64, 3, 4] {
        let chain = sc_plus_ranks(ell, 3, 60).unwrap();
        let mut perturbed: BTreeMap<i64, u64> = BTreeMap::new();
        for kind in [
            OrbitKind::GammaPlus,
            OrbitKind::GammaMinus,
            OrbitKind::GammaZeroPlus,
            OrbitKind::GammaZeroMinus,
        ] {
            for multiplicity in 1.. {
                let cz = ustilovsky_cz(ell, OrbitLabel::new(kind, multiplicity)).unwrap();
                if cz > 60 {
                    break;
                }
                *perturbed.entry(cz as i64).or_insert(0) += 1;
                if cz < 60 {
                    *perturbed.entry(cz as i64 + 1).or_insert(0) += 1;
                }
            }
        }
        let chain_map: BTreeMap<i64, u64> = chain.iter().collect();
        if perturbed != chain_map {
            let diff: Vec<i64> = (0..=60)
                .filter(|d| perturbed.get(d).copied().unwrap_or(0) != chain.rank(*d))
                .collect();
            failures.push((ell, diff));
        }
    }
    if !failures.is_empty() {
        eprintln!("FAIL: criterion 10e - perturbed and Morse-Bott multisets differ:");
        for (ell, degrees) in &failures {
            eprintln!(
                "  l = {ell}: mismatch at degrees {degrees:?} (the window degrees (2l+2)N + {{-1,0,1,2}}, where the perturbed complex has one extra generator)"
            );
        }
        panic!("criterion 10e cannot hold; see the notes above and the module tests");
    }
    pass("criterion 10e - CZ/Morse-Bott degree multisets agree");
}

#[test]
fn criterion_10f_homology_dominated_by_chain_ranks() {
    for ell in 1..=5u64 {
        let chain = sc_plus_ranks(ell, 3, 80).unwrap();
        let homology = sh_plus_dim5(ell, 80).unwrap();
        for d in 0..=80 {
            assert!(
                homology.rank(d) <= chain.rank(d),
                "ell = {ell}, degree {d}"
            );
        }
    }
    pass("criterion 10f - sh_plus_dim5 <= sc_plus_ranks degreewise for l <= 5, degrees <= 80");
}

#[test]
fn criterion_10g_branch_indices_specialize_at_p_two() {
    for ell in 1..=6u64 {
        for n in 1..=50u64 {
            for (kind_p, kind) in [
                (OrbitKind::GammaPlus, OrbitKind::GammaPlus),
                (OrbitKind::GammaMinus, OrbitKind::GammaMinus),
                (OrbitKind::GammaZeroBranch(0), OrbitKind::GammaZeroPlus),
                (OrbitKind::GammaZeroBranch(1), OrbitKind::GammaZeroMinus),
            ] {
                assert_eq!(
                    ustilovsky_cz_p(ell, 2, OrbitLabel::new(kind_p, n)).unwrap(),
                    ustilovsky_cz(ell, OrbitLabel::new(kind, n)).unwrap(),
                    "ell = {ell}, N = {n}"
                );
            }
        }
    }
    pass("criterion 10g - ustilovsky_cz_p at p = 2 specializes to ustilovsky_cz for N <= 50");
}
