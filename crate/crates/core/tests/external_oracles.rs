use disco_core::{ari, noise_to_singletons, pearson, Clustering, Error};
use proptest::prelude::*;

fn c(v: &[i64]) -> Clustering {
    Clustering::from_labels(v.to_vec()).unwrap()
}

/// Adjusted Rand index by enumerating every pair of points.
fn ari_by_pairs(a: &[i64], b: &[i64]) -> f64 {
    let n = a.len();
    let (mut both, mut only_a, mut only_b, mut pairs) = (0.0, 0.0, 0.0, 0.0);
    for i in 0..n {
        for j in i + 1..n {
            let sa = a[i] == a[j];
            let sb = b[i] == b[j];
            pairs += 1.0;
            if sa && sb {
                both += 1.0;
            }
            if sa {
                only_a += 1.0;
            }
            if sb {
                only_b += 1.0;
            }
        }
    }
    let expected = only_a * only_b / pairs;
    let max = (only_a + only_b) / 2.0;
    if max == expected {
        return if same_partition(a, b) { 1.0 } else { 0.0 };
    }
    (both - expected) / (max - expected)
}

fn same_partition(a: &[i64], b: &[i64]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] == a[j]) == (b[i] == b[j])))
}

fn textbook_pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let cov: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = y.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}

#[test]
fn hand_examples() {
    assert_eq!(ari(&c(&[0, 0, 1, 1]), &c(&[0, 0, 1, 1])).unwrap(), 1.0);
    // Pairs: one agreeing same-pair, three agreeing different-pairs of six; ARI is exactly 0.
    assert_eq!(ari(&c(&[0, 0, 1, 1]), &c(&[0, 0, 0, 1])).unwrap(), 0.0);
    assert_eq!(ari_by_pairs(&[0, 0, 1, 1], &[0, 0, 0, 1]), 0.0);
}

#[test]
fn all_singletons_against_anything() {
    let singletons = c(&[0, 1, 2, 3, 4, 5]);
    for other in [[0, 0, 0, 1, 1, 1], [0, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 1]] {
        assert_eq!(ari(&singletons, &c(&other)).unwrap(), 0.0);
        assert_eq!(ari_by_pairs(&[0, 1, 2, 3, 4, 5], &other), 0.0);
    }
    assert_eq!(ari(&singletons, &singletons).unwrap(), 1.0);
}

#[test]
fn noise_becomes_singletons() {
    let out = noise_to_singletons(&c(&[0, 0, -1, -1, -1]));
    assert_eq!(out.cluster_count(), 4);
    assert!(out.noise().is_empty());
    let clean = c(&[0, 1, 1]);
    assert_eq!(noise_to_singletons(&clean), clean);
    assert_eq!(noise_to_singletons(&c(&[-1, -1, -1])).cluster_count(), 3);
}

#[test]
fn pearson_cases() {
    let xs = [1.0, 2.0, 4.0, 7.0, 11.0];
    let up: Vec<f64> = xs.iter().map(|x| 2.0 * x + 1.0).collect();
    let down: Vec<f64> = xs.iter().map(|x| -x).collect();
    assert!((pearson(&xs, &up).unwrap() - 1.0).abs() < 1e-15);
    assert!((pearson(&xs, &down).unwrap() + 1.0).abs() < 1e-15);
    let ys = [0.3, -1.2, 2.5, 0.9, 4.4];
    assert!((pearson(&xs, &ys).unwrap() - textbook_pearson(&xs, &ys)).abs() < 1e-12);
    assert!(matches!(
        pearson(&xs, &[1.0; 5]),
        Err(Error::UndefinedCorrelation(_))
    ));
    assert!(pearson(&xs, &ys[..3]).is_err());
}

fn labels(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..4, n)
}

proptest! {
    #[test]
    fn ari_matches_pair_counting((a, b) in (2usize..=8).prop_flat_map(|n| (labels(n), labels(n)))) {
        let ours = ari(&c(&a), &c(&b)).unwrap();
        prop_assert!((ours - ari_by_pairs(&a, &b)).abs() < 1e-12, "{} vs {}", ours, ari_by_pairs(&a, &b));
    }

    #[test]
    fn ari_is_symmetric_and_relabeling_invariant(
        (a, b) in (2usize..=30).prop_flat_map(|n| (labels(n), labels(n))),
        shift in 1i64..100,
    ) {
        let ab = ari(&c(&a), &c(&b)).unwrap();
        prop_assert_eq!(ab, ari(&c(&b), &c(&a)).unwrap());
        let renamed: Vec<i64> = a.iter().map(|l| (3 - l) * 7 + shift).collect();
        prop_assert!((ab - ari(&c(&renamed), &c(&b)).unwrap()).abs() < 1e-12);
        prop_assert!(ab <= 1.0);
    }

    #[test]
    fn pearson_is_affine_invariant(
        pairs in prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 3..40),
        scale in 0.1f64..10.0,
        offset in -50.0f64..50.0,
    ) {
        let (xs, ys): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        if let Ok(r) = pearson(&xs, &ys) {
            let moved: Vec<f64> = xs.iter().map(|x| scale * x + offset).collect();
            let r2 = pearson(&moved, &ys).unwrap();
            prop_assert!((r - r2).abs() < 1e-9);
            prop_assert!((-1.0..=1.0).contains(&r));
        }
    }
}
