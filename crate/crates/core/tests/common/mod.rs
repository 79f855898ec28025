#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use windowshift::bwb::{twisted_action, BwbClass, Permutation, Weight};
use windowshift::Partition;

pub fn p(rows: &[usize]) -> Partition {
    Partition::from_rows(rows)
}

/// Partitions with at most `max_h` rows of length at most `max_w`.
pub fn partition_in(max_w: usize, max_h: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_w, 0..=max_h).prop_map(|mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_rows(&rows)
    })
}

/// Weyl's product formula for `dim 𝕊^λ ℂ^n`.
pub fn weyl_dimension(lambda: &Partition, n: usize) -> u64 {
    if lambda.height() > n {
        return 0;
    }
    let l: Vec<i64> = (0..n).map(|i| lambda.row(i) as i64).collect();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..n {
        for j in i + 1..n {
            num *= l[i] - l[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    u64::try_from(num / den).unwrap()
}

/// Whether `nu / lambda` is a horizontal strip.
pub fn is_horizontal_strip(nu: &Partition, lambda: &Partition) -> bool {
    if !nu.contains(lambda) {
        return false;
    }
    (0..nu.height()).all(|i| i + 1 >= nu.height() || nu.row(i + 1) <= lambda.row(i))
}

/// BWB classification by trying every permutation.
pub fn classify_bruteforce(alpha: &Weight) -> BwbClass {
    let r = alpha.len();
    let mut hits: Vec<(Permutation, Weight)> = Permutation::all(r)
        .into_iter()
        .filter_map(|w| {
            let image = twisted_action(&w, alpha).unwrap();
            image.is_dominant().then_some((w, image))
        })
        .collect();
    match hits.len() {
        0 => BwbClass::NonRegular,
        1 => {
            let (w, rep) = hits.pop().unwrap();
            if w.length() == 0 {
                BwbClass::Dominant
            } else {
                BwbClass::Regular {
                    length: w.length(),
                    w,
                    dominant_rep: rep,
                }
            }
        }
        n => panic!("{n} permutations make {alpha:?} dominant"),
    }
}

/// The closed form of the `k`-th staircase diagram.
pub fn staircase_closed_form(seed: &Partition, r: usize, k: usize) -> Partition {
    let h = seed.column_height(k);
    let mut rows = Vec::with_capacity(r);
    for i in 0..h {
        rows.push(seed.row(i));
    }
    rows.push(k);
    for i in h..r - 1 {
        rows.push(seed.row(i) + 1);
    }
    Partition::new(rows).expect("closed form is a partition")
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
