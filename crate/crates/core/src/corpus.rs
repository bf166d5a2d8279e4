//! Built-in models and a seeded random model generator.
//!
//! | name             | integer params | model |
//! |------------------|----------------|-------|
//! | `four-cell`      | –              | `θ, θ², θ+θ², 1−2θ−2θ²` on `θ ∈ (0, 1/4)` |
//! | `bernoulli`      | –              | `θ, 1−θ` on `(0, 1)` |
//! | `binomial`       | `n` (def. 2)   | `C(n,k) θ^k (1−θ)^(n−k)`, `k = 0..n` |
//! | `constant`       | `N` (def. 2)   | `1/N` on each of `N` cells, no parameters |
//! | `lehmann-trunc`  | `K` (def. 2)   | truncated Lehmann family, see below |
//! | `two-param-demo` | –              | `θη, θ(1−η), θ², 1−θ−θ²` on `θ ∈ (0, 1/2), η ∈ (0, 1)` |
//!
//! # Truncated Lehmann family
//!
//! Lehmann's family lives on `{-1, 0, 1, 2, ...}` with `P(X = -1) = θ` and
//! `P(X = k) = (1−θ)² θ^k`. Only finite supports are representable, so
//! `lehmann-trunc(K)` keeps the cells `-1, 0, .., K-1` and lumps the tail into a
//! cell `T` with probability `(1−θ) θ^K`. The total is
//! `θ + (1−θ)(1−θ^K) + (1−θ)θ^K = 1` exactly.
//!
//! Contrast note: the truncation changes the answer. For the infinite family
//! the UMVUE algebra is generated by the two sets `{0}` and `{-1, 1, 2, ...}`,
//! because every unbiased estimator of zero is a multiple of `x`. After
//! truncation the pmf polynomials are linearly independent, so there is no
//! non-zero unbiased estimator of zero, the family is complete, and the MVE
//! partition is all singletons:
//!
//! ```
//! use std::collections::BTreeMap;
//! use umvue::corpus::corpus_model;
//! use umvue::matroid::mve_partition;
//!
//! let m = corpus_model("lehmann-trunc", &BTreeMap::from([("K".into(), 2)])).unwrap();
//! assert_eq!(m.support(), ["-1", "0", "1", "T"]);
//! assert!(mve_partition(&m).unwrap().is_singletons());
//! ```
//!
//! # Two-parameter demo
//!
//! With both parameters free, the four pmf polynomials are independent and
//! the model is complete. Fixing `η = η*` makes `p_1 = η*θ` and
//! `p_2 = (1−η*)θ` proportional, so each slice has the extra zero-mean
//! statistic `(1−η*, −η*, 0, 0)` and MVE partition `{{1,2},{3},{4}}`.

use std::collections::BTreeMap;

use num_integer::binomial;
use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{interval, CategoricalModel, Interval};
use crate::poly::{Monomial, Polynomial};
use crate::rational::{int, rat, Rational};

pub const NAMES: &[&str] = &[
    "four-cell",
    "bernoulli",
    "binomial",
    "constant",
    "lehmann-trunc",
    "two-param-demo",
];

/// Attempt budget for [`random_model`].
pub const RANDOM_RETRY_BUDGET: usize = 1000;

fn theta() -> Polynomial {
    Polynomial::var("theta")
}

fn one_minus(p: &Polynomial) -> Polynomial {
    &Polynomial::one() - p
}

fn one_param(
    dom: Interval,
    support: Vec<String>,
    pmf: Vec<Polynomial>,
) -> Result<CategoricalModel> {
    CategoricalModel::new(
        vec!["theta".into()],
        BTreeMap::from([("theta".into(), dom)]),
        support,
        pmf,
    )
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|k| k.to_string()).collect()
}

fn int_param(
    params: &BTreeMap<String, i64>,
    key: &str,
    default: i64,
    min: i64,
    max: i64,
) -> Result<i64> {
    let v = params.get(key).copied().unwrap_or(default);
    if v < min || v > max {
        return Err(Error::BadParam(format!(
            "{key} = {v} must be in {min}..={max}"
        )));
    }
    Ok(v)
}

fn check_keys(params: &BTreeMap<String, i64>, allowed: &[&str]) -> Result<()> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::BadParam(format!("unexpected parameter {k:?}"))),
        None => Ok(()),
    }
}

pub fn corpus_model(name: &str, params: &BTreeMap<String, i64>) -> Result<CategoricalModel> {
    let t = theta();
    match name {
        "four-cell" | "paper-2-3" => {
            check_keys(params, &[])?;
            let t2 = t.pow(2);
            let p4 = &one_minus(&t.scale(&int(2))) - &t2.scale(&int(2));
            one_param(
                interval((0, 1), (1, 4)),
                numbered(4),
                vec![t.clone(), t2.clone(), &t + &t2, p4],
            )
        }
        "bernoulli" => {
            check_keys(params, &[])?;
            one_param(
                interval((0, 1), (1, 1)),
                vec!["1".into(), "0".into()],
                vec![t.clone(), one_minus(&t)],
            )
        }
        "binomial" => {
            check_keys(params, &["n"])?;
            let n = int_param(params, "n", 2, 1, 30)? as u32;
            let pmf = (0..=n)
                .map(|k| {
                    let c = int(binomial(n as i64, k as i64));
                    (&t.pow(k) * &one_minus(&t).pow(n - k)).scale(&c)
                })
                .collect();
            one_param(
                interval((0, 1), (1, 1)),
                (0..=n).map(|k| k.to_string()).collect(),
                pmf,
            )
        }
        "constant" => {
            check_keys(params, &["N"])?;
            let n = int_param(params, "N", 2, 1, 1000)?;
            CategoricalModel::new(
                vec![],
                BTreeMap::new(),
                numbered(n as usize),
                vec![Polynomial::constant(rat(1, n)); n as usize],
            )
        }
        "lehmann-trunc" => {
            check_keys(params, &["K"])?;
            let k_max = int_param(params, "K", 2, 1, 64)? as u32;
            let tail = one_minus(&t);
            let sq = tail.pow(2);
            let mut support = vec!["-1".to_string()];
            let mut pmf = vec![t.clone()];
            for k in 0..k_max {
                support.push(k.to_string());
                pmf.push(&sq * &t.pow(k));
            }
            support.push("T".into());
            pmf.push(&tail * &t.pow(k_max));
            one_param(interval((0, 1), (1, 1)), support, pmf)
        }
        "two-param-demo" => {
            check_keys(params, &[])?;
            let eta = Polynomial::var("eta");
            let t2 = t.pow(2);
            CategoricalModel::new(
                vec!["theta".into(), "eta".into()],
                BTreeMap::from([
                    ("theta".into(), interval((0, 1), (1, 2))),
                    ("eta".into(), interval((0, 1), (1, 1))),
                ]),
                numbered(4),
                vec![
                    &t * &eta,
                    &t * &one_minus(&eta),
                    t2.clone(),
                    &one_minus(&t) - &t2,
                ],
            )
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

const RANDOM_PARAMS: [&str; 2] = ["theta", "eta"];

fn monomials_up_to(params: &[&str], max_degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for d in 1..=max_degree {
        match params {
            [a] => out.push(Monomial::power(a, d)),
            [a, b] => out.extend((0..=d).map(|i| Monomial::from_exponents([(*a, i), (*b, d - i)]))),
            _ => unreachable!(),
        }
    }
    out
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> Rational {
    let num = *[-3, -2, -1, 1, 2, 3].choose(rng).unwrap();
    rat(num, rng.gen_range(1..=4))
}

/// A model with `n` cells whose first `n - 1` pmf entries are random
/// low-degree polynomials (positive on the sample grid) and whose last entry
/// is `1 − Σ others`. Some cells are planted as sums or positive multiples of
/// earlier ones so that non-trivial partitions show up often. Deterministic
/// in `seed`; parameters are `theta` and optionally `eta`, each on `[0, 1]`.
pub fn random_model(
    seed: u64,
    n: usize,
    max_degree: u32,
    n_params: usize,
) -> Result<CategoricalModel> {
    if n < 2 {
        return Err(Error::BadParam(format!("N = {n} must be at least 2")));
    }
    if max_degree < 1 {
        return Err(Error::BadParam("max_degree must be at least 1".into()));
    }
    if !(1..=2).contains(&n_params) {
        return Err(Error::BadParam(format!(
            "n_params = {n_params} must be 1 or 2"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = &RANDOM_PARAMS[..n_params];
    let parameters: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let domain: BTreeMap<String, Interval> = parameters
        .iter()
        .map(|p| (p.clone(), interval((0, 1), (1, 1))))
        .collect();
    // the validation grid, used to pick positive cells and a safe scale
    let grid = CategoricalModel::new_unchecked(parameters.clone(), domain.clone(), vec![], vec![])
        .sample_points();
    let eval_all = |p: &Polynomial| -> Vec<Rational> {
        grid.iter()
            .map(|pt| p.evaluate(pt).expect("bound"))
            .collect()
    };
    let monos = monomials_up_to(names, max_degree);

    let mut attempts = 0;
    let mut base: Vec<Polynomial> = Vec::with_capacity(n - 1);
    while base.len() < n - 1 {
        let k = base.len();
        if k >= 2 && rng.gen_ratio(1, 3) {
            let (a, b) = (rng.gen_range(0..k), rng.gen_range(0..k));
            if a != b {
                base.push(&base[a] + &base[b]);
                continue;
            }
        }
        if k >= 1 && rng.gen_ratio(1, 6) {
            let a = rng.gen_range(0..k);
            let c = [rat(1, 2), rat(1, 1), rat(2, 1)]
                .choose(&mut rng)
                .unwrap()
                .clone();
            base.push(base[a].scale(&c));
            continue;
        }
        attempts += 1;
        if attempts > RANDOM_RETRY_BUDGET {
            return Err(Error::GenerationFailed(RANDOM_RETRY_BUDGET));
        }
        let n_terms = rng.gen_range(1..=3.min(monos.len()));
        let mut p = Polynomial::zero();
        for m in monos.choose_multiple(&mut rng, n_terms) {
            p = p + Polynomial::term(random_coefficient(&mut rng), m.clone());
        }
        if rng.gen_bool(0.5) {
            p = p + Polynomial::constant(int(rng.gen_range(1..=3)));
        }
        if !p.is_zero() && eval_all(&p).iter().all(Signed::is_positive) {
            base.push(p);
        }
    }

    let total: Polynomial = base.iter().sum();
    let peak = eval_all(&total)
        .into_iter()
        .max()
        .expect("grid is non-empty");
    let scale = Rational::one() / (int(2) * peak.ceil());
    let mut pmf: Vec<Polynomial> = base.iter().map(|p| p.scale(&scale)).collect();
    let rest = &Polynomial::one() - &pmf.iter().sum::<Polynomial>();
    pmf.push(rest);
    CategoricalModel::new(parameters, domain, numbered(n), pmf)
}
