//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its elapsed time (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance here is exact (zero tolerance) and every stated time
//! budget is asserted.

use std::time::{Duration, Instant};

use denumerant::{
    brute_force_count, brute_force_rk, check_counterexample, classify, count, count_bounds,
    count_pairwise_coprime, count_sawtooth, count_two_var, delta_k, floor_sum, gamma_k,
    rk_general, rk_pairwise, rk_scan_limit, rk_setwise, threshold_m, AlphaBeta, BigInt,
    CategoryReason, CategoryTag, ThresholdVariant,
};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn check_budget(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{name}: {elapsed:?} exceeded the {budget:?} budget"
    );
    println!("ACCEPTANCE {name}: PASS ({elapsed:?})");
}

/// Deterministic xorshift generator for the randomized sweeps.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Criterion 1: golden reproduction of the worked (37, 23, 16) instance.
#[test]
fn criterion_1_golden_reproduction() {
    let started = Instant::now();
    let (a, b, c) = (big(37), big(23), big(16));

    let ab = AlphaBeta::new(&a, &b, &c).unwrap();
    assert_eq!(ab.two_alpha, big(76));
    assert_eq!(ab.beta, big(27232));
    assert_eq!(
        threshold_m(&a, &b, &c, ThresholdVariant::Summary).unwrap(),
        big(157291918)
    );

    // k = 157295111: γ = δ = 2069614, category II
    let k = big(157295111);
    assert_eq!(gamma_k(&a, &b, &c, &k).unwrap(), big(2069614));
    assert_eq!(delta_k(&a, &b, &c, &k).unwrap(), big(2069614));
    let cat = classify(&a, &b, &c, &k, ThresholdVariant::Summary).unwrap();
    assert_eq!(cat.tag, CategoryTag::CategoryII);
    assert_eq!(cat.reason, CategoryReason::GammaEqualsDelta);

    // k = 157295072: γ = 2069614, δ = 2069613, count(γ) = k, category I,
    // member set {2069614}
    let k = big(157295072);
    assert_eq!(gamma_k(&a, &b, &c, &k).unwrap(), big(2069614));
    assert_eq!(delta_k(&a, &b, &c, &k).unwrap(), big(2069613));
    assert_eq!(
        count_pairwise_coprime(&a, &b, &c, &big(2069614)).unwrap(),
        big(157295072)
    );
    let cat = classify(&a, &b, &c, &k, ThresholdVariant::Summary).unwrap();
    assert_eq!(cat.tag, CategoryTag::CategoryI);
    let rk = rk_pairwise(&a, &b, &c, &k, ThresholdVariant::Summary).unwrap();
    assert_eq!(rk.members, vec![big(2069614)]);

    // k = 157294925: γ = 2069613, δ = 2069612, count(γ) = 157294920 ≠ k,
    // category II
    let k = big(157294925);
    assert_eq!(gamma_k(&a, &b, &c, &k).unwrap(), big(2069613));
    assert_eq!(delta_k(&a, &b, &c, &k).unwrap(), big(2069612));
    assert_eq!(
        count_pairwise_coprime(&a, &b, &c, &big(2069613)).unwrap(),
        big(157294920)
    );
    let cat = classify(&a, &b, &c, &k, ThresholdVariant::Summary).unwrap();
    assert_eq!(cat.tag, CategoryTag::CategoryII);
    assert_eq!(cat.reason, CategoryReason::CountMismatch);
    assert_eq!(cat.count_at_gamma, Some(big(157294920)));

    // the six worked floor sums
    assert_eq!(floor_sum(&big(3), &big(13), &big(37)).unwrap(), big(1));
    assert_eq!(floor_sum(&big(3), &big(11), &big(23)).unwrap(), big(1));
    assert_eq!(floor_sum(&big(9), &big(3), &big(16)).unwrap(), big(4));
    assert_eq!(floor_sum(&big(32), &big(13), &big(37)).unwrap(), big(170));
    assert_eq!(floor_sum(&big(16), &big(11), &big(23)).unwrap(), big(56));
    assert_eq!(floor_sum(&big(6), &big(3), &big(16)).unwrap(), big(1));

    check_budget("1 golden reproduction", started, Duration::from_secs(1));
}

/// Criterion 2: end-to-end reproduction of the (191, 131, 117; 67529)
/// counterexample.
#[test]
fn criterion_2_counterexample_reproduction() {
    let started = Instant::now();
    let (a, b, c, n) = (big(191), big(131), big(117), big(67529));

    let report = check_counterexample(&a, &b, &c, &n).unwrap();
    assert_eq!(report.profile.n1, 4);
    assert_eq!(report.profile.n2, 3);
    assert_eq!(report.profile.n3, 3);
    assert_eq!(report.profile.nhat, 10);
    assert_eq!(report.consequence_bound, big(360));

    let iv = report.bound_interval.as_ref().expect("pairwise coprime");
    assert_eq!(iv.integer_floor, big(565));
    assert_eq!(iv.integer_ceil, big(1003));

    assert!(iv.contains(&report.exact_count));
    assert!(report.exact_count > big(360));
    assert!(!report.conjecture_consequence_holds);

    // the exact count is confirmed by the semi-analytic oracle within 0.1 s
    let oracle_started = Instant::now();
    let oracle = brute_force_count(191, 131, 117, 67529).unwrap();
    assert!(
        oracle_started.elapsed() < Duration::from_millis(100),
        "oracle took {:?}",
        oracle_started.elapsed()
    );
    assert_eq!(BigInt::from(oracle), report.exact_count);

    check_budget("2 counterexample reproduction", started, Duration::from_secs(1));
}

/// Criterion 3: both closed forms, the brute-force oracle, and the strict
/// bounds agree on every pairwise-coprime triple with 1 ≤ a < b < c ≤ 15 and
/// every n ≤ 1000.
#[test]
fn criterion_3_oracle_equivalence_sweep() {
    let started = Instant::now();
    let mut instances = 0u64;
    for a in 1u64..=15 {
        for b in (a + 1)..=15 {
            if gcd(a, b) != 1 {
                continue;
            }
            for c in (b + 1)..=15 {
                if gcd(b, c) != 1 || gcd(a, c) != 1 {
                    continue;
                }
                let (ab, bb, cb) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
                for n in 0u64..=1000 {
                    let nb = BigInt::from(n);
                    let brute = BigInt::from(brute_force_count(a, b, c, n).unwrap());
                    let formula = count_pairwise_coprime(&ab, &bb, &cb, &nb).unwrap();
                    let sawtooth = count_sawtooth(&ab, &bb, &cb, &nb).unwrap();
                    assert_eq!(formula, brute, "formula at ({a}, {b}, {c}; {n})");
                    assert_eq!(sawtooth, brute, "sawtooth at ({a}, {b}, {c}; {n})");
                    let iv = count_bounds(&ab, &bb, &cb, &nb).unwrap();
                    assert!(iv.contains(&brute), "bounds at ({a}, {b}, {c}; {n})");
                    instances += 1;
                }
            }
        }
    }
    assert!(instances > 100_000, "sweep covered {instances} instances");
    check_budget("3 oracle equivalence sweep", started, Duration::from_secs(60));
}

/// Criterion 4: the reduction dispatcher matches brute force on 500 random
/// setwise-coprime (but not pairwise-coprime) triples, plus 100 scaled
/// triples exercising the divisibility short-circuit.
#[test]
fn criterion_4_reduction_sweep() {
    let started = Instant::now();
    let mut rng = Rng(0x5eed_cafe_f00d_1234);

    let mut done = 0;
    while done < 500 {
        let a = rng.below(60) + 1;
        let b = rng.below(60) + 1;
        let c = rng.below(60) + 1;
        let g = gcd(gcd(a, b), c);
        let pairwise = gcd(a, b) == 1 && gcd(b, c) == 1 && gcd(a, c) == 1;
        if g != 1 || pairwise {
            continue;
        }
        let n = rng.below(5001);
        let brute = BigInt::from(brute_force_count(a, b, c, n).unwrap());
        let got = count(
            &BigInt::from(a),
            &BigInt::from(b),
            &BigInt::from(c),
            &BigInt::from(n),
        )
        .unwrap();
        assert_eq!(got, brute, "({a}, {b}, {c}; {n})");
        done += 1;
    }

    let mut done = 0;
    while done < 100 {
        let g = rng.below(4) + 2; // 2..=5
        let a = (rng.below(12) + 1) * g;
        let b = (rng.below(12) + 1) * g;
        let c = (rng.below(12) + 1) * g;
        let n = rng.below(5001);
        let brute = BigInt::from(brute_force_count(a, b, c, n).unwrap());
        let got = count(
            &BigInt::from(a),
            &BigInt::from(b),
            &BigInt::from(c),
            &BigInt::from(n),
        )
        .unwrap();
        assert_eq!(got, brute, "scaled ({a}, {b}, {c}; {n})");
        done += 1;
    }

    check_budget("4 reduction sweep", started, Duration::from_secs(60));
}

/// Criterion 5: for four small triples and 50 consecutive k starting at the
/// theorem3 threshold, the solved member set equals a full scan up to the
/// bound-derived limit, and γ_k − δ_k ∈ {0, 1} throughout.
#[test]
fn criterion_5_rk_small_instances() {
    let started = Instant::now();
    for (a, b, c) in [(1i64, 2, 3), (1, 3, 4), (2, 3, 5), (3, 4, 5)] {
        let (ab, bb, cb) = (big(a), big(b), big(c));
        let m = threshold_m(&ab, &bb, &cb, ThresholdVariant::Theorem3).unwrap();
        for off in 0i64..50 {
            let k = &m + big(off);
            let solved = rk_pairwise(&ab, &bb, &cb, &k, ThresholdVariant::Theorem3).unwrap();
            let t_max = rk_scan_limit(&ab, &bb, &cb, &k).unwrap();
            let scanned = brute_force_rk(&ab, &bb, &cb, &k, &t_max).unwrap();
            assert_eq!(
                solved.members, scanned,
                "members at ({a}, {b}, {c}), k = {k}"
            );
            let diff = gamma_k(&ab, &bb, &cb, &k).unwrap() - delta_k(&ab, &bb, &cb, &k).unwrap();
            assert!(
                diff == big(0) || diff == big(1),
                "γ − δ = {diff} at ({a}, {b}, {c}), k = {k}"
            );
        }
    }
    check_budget("5 rk small instances", started, Duration::from_secs(120));
}

/// Criterion 6: setwise family structure on (6, 10, 15) for ten category I
/// values of k, and the doubling relation to (12, 20, 30).
#[test]
fn criterion_6_setwise_general_consistency() {
    let started = Instant::now();
    let (a, b, c) = (big(6), big(10), big(15));
    // k values with exactly k representations achievable for the reduced
    // (1, 1, 1) triple: k = C(t+2, 2) for t = 2..=11, all ≥ M' = 4.
    let ks: Vec<i64> = (2i64..=11).map(|t| (t + 2) * (t + 1) / 2).collect();
    assert_eq!(ks.len(), 10);
    for k in ks {
        let kb = big(k);
        let r = rk_setwise(&a, &b, &c, &kb, ThresholdVariant::Theorem3).unwrap();
        assert!(r.category.is_category_i(), "k = {k} must be category I");
        assert_eq!(r.c_stat, big(30), "c_stat at k = {k}");
        assert_eq!(r.members.len(), 30);
        let sum: BigInt = r.members.iter().sum();
        assert_eq!(r.s_stat, sum, "s_stat at k = {k}");
        for m in &r.members {
            assert_eq!(count(&a, &b, &c, m).unwrap(), kb, "member {m} at k = {k}");
        }

        let doubled = rk_general(&big(12), &big(20), &big(30), &kb, ThresholdVariant::Theorem3)
            .unwrap();
        let expect: Vec<BigInt> = r.members.iter().map(|m| m * 2).collect();
        assert_eq!(doubled.members, expect, "doubling at k = {k}");
    }
    check_budget("6 setwise/general consistency", started, Duration::from_secs(60));
}

/// Criterion 7: the floor-sum kernel runs in far under a millisecond per call
/// at 10^18-scale arguments, and the counter survives n = 10^18 with
/// coefficients up to 10^6.
#[test]
fn criterion_7_kernel_performance() {
    let started = Instant::now();

    let mut rng = Rng(0xfee1_600d_dead_beef);
    let base = 1_000_000_000_000_000_000u64; // 10^18
    let calls = 1000u32;
    let mut sink = BigInt::from(0);
    let timer = Instant::now();
    for _ in 0..calls {
        let q = BigInt::from(base - rng.below(1_000_000));
        let p = BigInt::from(base - rng.below(1_000_000));
        let m = BigInt::from(base - rng.below(1_000_000));
        sink += floor_sum(&q, &p, &m).unwrap();
    }
    let per_call = timer.elapsed() / calls;
    assert!(
        per_call < Duration::from_millis(1),
        "floor_sum averaged {per_call:?} per call"
    );
    assert!(sink > BigInt::from(0));

    // pairwise-coprime million-scale coefficients, n = 10^18; the value must
    // sit strictly inside its own bound window (an exactness check, not just
    // absence of panic)
    let (a, b, c) = (big(999_983), big(999_979), big(999_961));
    let n = BigInt::from(base);
    let value = count(&a, &b, &c, &n).unwrap();
    let iv = count_bounds(&a, &b, &c, &n).unwrap();
    assert!(iv.contains(&value));
    // and the evaluation is permutation-stable
    assert_eq!(count(&c, &a, &b, &n).unwrap(), value);

    check_budget("7 kernel performance", started, Duration::from_secs(1));
}

/// Criterion 8: the two-variable counter equals a naive walk for all coprime
/// a < b ≤ 50 and n ≤ 5000.
#[test]
fn criterion_8_popoviciu_validation() {
    let started = Instant::now();
    for a in 1u64..=50 {
        for b in (a + 1)..=50 {
            if gcd(a, b) != 1 {
                continue;
            }
            let (ab, bb) = (BigInt::from(a), BigInt::from(b));
            for n in 0u64..=5000 {
                let mut naive = 0u64;
                let mut y = 0u64;
                while a * y <= n {
                    if (n - a * y).is_multiple_of(b) {
                        naive += 1;
                    }
                    y += 1;
                }
                let got = count_two_var(&ab, &bb, &BigInt::from(n)).unwrap();
                assert_eq!(got, BigInt::from(naive), "({a}, {b}; {n})");
            }
        }
    }
    check_budget("8 popoviciu validation", started, Duration::from_secs(30));
}
