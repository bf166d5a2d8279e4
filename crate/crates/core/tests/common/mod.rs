#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use umvue::corpus::random_model;
use umvue::linalg::RatMatrix;
use umvue::model::{coefficient_matrix, CategoricalModel, Statistic};
use umvue::partition::Partition;
use umvue::rational::{rat, Rational};

/// Shape of the `i`-th model of the random suite: N in 2..=6, degree in
/// 1..=4, one or two parameters.
pub fn suite_shape(i: u64) -> (usize, u32, usize) {
    let n = 2 + (i % 5) as usize;
    let deg = 1 + ((i / 5) % 4) as u32;
    let params = 1 + ((i / 20) % 2) as usize;
    (n, deg, params)
}

pub fn suite_model(i: u64) -> CategoricalModel {
    let (n, deg, params) = suite_shape(i);
    random_model(1000 + i, n, deg, params).expect("suite model generates")
}

/// All set partitions of `0..n`, via restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn go(k: usize, n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<Partition>) {
        if k == n {
            out.push(Partition::from_labels(labels));
            return;
        }
        for l in 0..=max + 1 {
            labels.push(l);
            go(k + 1, n, labels, max.max(l), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![Partition::singletons(0)];
    }
    let mut labels = vec![0];
    go(1, n, &mut labels, 0, &mut out);
    out
}

fn rank_of(c: &RatMatrix, cols: &[usize]) -> usize {
    c.select_columns(cols).rank()
}

/// Finest partition of the columns whose block spans form a direct sum,
/// found by exhaustive search over all set partitions. Panics if the finest
/// one is not unique.
pub fn brute_force_mve(m: &CategoricalModel) -> Partition {
    let (_, c) = coefficient_matrix(m);
    let total = c.rank();
    let direct: Vec<Partition> = all_partitions(m.len())
        .into_iter()
        .filter(|p| p.blocks().iter().map(|b| rank_of(&c, b)).sum::<usize>() == total)
        .collect();
    let best = direct.iter().map(Partition::num_blocks).max().unwrap();
    let finest: Vec<&Partition> = direct.iter().filter(|p| p.num_blocks() == best).collect();
    assert_eq!(
        finest.len(),
        1,
        "finest direct-sum partition must be unique"
    );
    finest[0].clone()
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn random_statistic(rng: &mut ChaCha8Rng, n: usize) -> Statistic {
    Statistic::new((0..n).map(|_| small_rational(rng)).collect())
}

pub fn random_measurable(rng: &mut ChaCha8Rng, p: &Partition) -> Statistic {
    let vals: Vec<Rational> = (0..p.num_blocks()).map(|_| small_rational(rng)).collect();
    p.lift(&vals)
}

/// Merges blocks of `p` at random.
pub fn random_coarsening(rng: &mut ChaCha8Rng, p: &Partition) -> Partition {
    let r = p.num_blocks();
    let groups = rng.gen_range(1..=r);
    let group_of: Vec<usize> = (0..r).map(|_| rng.gen_range(0..groups)).collect();
    let labels: Vec<usize> = p.block_labels().iter().map(|&j| group_of[j]).collect();
    Partition::from_labels(&labels)
}

/// Renames the parameters of a random model away from `theta`/`eta`.
pub fn renamed(m: &CategoricalModel) -> CategoricalModel {
    let mut out = m.clone();
    for (from, to) in [("theta", "phi"), ("eta", "psi")] {
        if out.parameters().iter().any(|p| p == from) {
            out = out.rename_parameter(from, to).unwrap();
        }
    }
    out
}

pub fn permute_model(m: &CategoricalModel, perm: &[usize]) -> CategoricalModel {
    let domain: BTreeMap<_, _> = m.domain().clone();
    CategoricalModel::new(
        m.parameters().to_vec(),
        domain,
        perm.iter().map(|&k| m.support()[k].clone()).collect(),
        perm.iter().map(|&k| m.pmf()[k].clone()).collect(),
    )
    .unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}
