//! Zero-mean statistics, the UMVUE criterion, sufficiency and completeness.
//!
//! Parameters range over a box with non-empty interior, so a polynomial that
//! vanishes on the parameter set vanishes identically. Every "for all θ"
//! condition below is therefore a coefficient-wise zero test, decided exactly.
//! Second-moment conditions are vacuous on a finite support and are not checked.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::matroid::mve_partition;
use crate::model::{check_len, coefficient_matrix, CategoricalModel, Statistic};
use crate::partition::{Partition, UnionFind};
use crate::poly::{monomial_basis, Polynomial};
use crate::rational::Rational;

/// Basis of the unbiased estimators of zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroMeanBasis {
    pub vectors: Vec<Statistic>,
}

impl ZeroMeanBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

pub fn zero_mean_space(m: &CategoricalModel) -> ZeroMeanBasis {
    let (_, c) = coefficient_matrix(m);
    ZeroMeanBasis {
        vectors: c.null_space().into_iter().map(Statistic::new).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UmvueVerdict {
    Umvue,
    /// `E_θ(g·witness)` is the nonzero `residual`, so `g` is correlated with
    /// the zero-mean statistic `witness`.
    NotUmvue {
        witness: Statistic,
        residual: Polynomial,
    },
}

impl UmvueVerdict {
    pub fn is_umvue(&self) -> bool {
        matches!(self, UmvueVerdict::Umvue)
    }
}

/// `g` is a UMVUE iff `E_θ(gχ) ≡ 0` for every zero-mean `χ`.
///
/// `χ ↦ E_θ(gχ)` is linear, so testing a basis of the zero-mean space is enough.
pub fn is_umvue(m: &CategoricalModel, g: &Statistic) -> Result<UmvueVerdict> {
    check_len(m, g)?;
    for chi in zero_mean_space(m).vectors {
        let residual = g.hadamard(&chi).expectation(m)?;
        if !residual.is_zero() {
            return Ok(UmvueVerdict::NotUmvue {
                witness: chi,
                residual,
            });
        }
    }
    Ok(UmvueVerdict::Umvue)
}

/// `π_j = Σ_{k ∈ I_j} p_k` over the MVE blocks `I_j`; their span is the set
/// of parametric functions that have a UMVUE.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmvueFunctionals {
    pub partition: Partition,
    pub pi: Vec<Polynomial>,
}

pub fn block_sums(m: &CategoricalModel, p: &Partition) -> Vec<Polynomial> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|&k| &m.pmf()[k]).sum())
        .collect()
}

pub fn umvue_functionals(m: &CategoricalModel) -> Result<UmvueFunctionals> {
    let partition = mve_partition(m)?;
    let pi = block_sums(m, &partition);
    Ok(UmvueFunctionals { partition, pi })
}

fn positively_proportional(a: &[Rational], b: &[Rational]) -> bool {
    let Some(i) = b.iter().position(|v| !v.is_zero()) else {
        return a.iter().all(Zero::is_zero);
    };
    let c = &a[i] / &b[i];
    c.is_positive() && a.iter().zip(b).all(|(x, y)| *x == &c * y)
}

/// Classes of pmf entries that are positive multiples of each other.
pub fn minimal_sufficient_partition(m: &CategoricalModel) -> Partition {
    let (_, c) = coefficient_matrix(m);
    let cols: Vec<Vec<Rational>> = (0..c.cols()).map(|j| c.column(j)).collect();
    let mut uf = UnionFind::new(cols.len());
    for k in 0..cols.len() {
        for l in k + 1..cols.len() {
            if positively_proportional(&cols[k], &cols[l]) {
                uf.union(k, l);
            }
        }
    }
    uf.into_partition()
}

/// Sufficient iff the conditional law given the block is parameter-free,
/// i.e. pmf entries inside each block are pairwise positively proportional.
pub fn is_sufficient(m: &CategoricalModel, p: &Partition) -> Result<bool> {
    crate::partition::refines(p, &minimal_sufficient_partition(m))
}

/// Complete iff the block sums are linearly independent: no non-zero
/// block-measurable statistic has mean identically zero.
pub fn is_complete(m: &CategoricalModel, p: &Partition) -> Result<bool> {
    if p.ground_size() != m.len() {
        return Err(Error::GroundSetMismatch {
            left: p.ground_size(),
            right: m.len(),
        });
    }
    let sums = block_sums(m, p);
    let basis = monomial_basis(&sums);
    let cols: Vec<Vec<Rational>> = sums
        .iter()
        .map(|s| s.coeff_vector(&basis).expect("basis covers block sums"))
        .collect();
    Ok(RatMatrix::from_columns(basis.len(), &cols).rank() == p.num_blocks())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Estimate {
    Umvue(Statistic),
    /// The target is estimable but has no UMVUE.
    NoUmvue,
    /// The target is outside the span of the pmf entries.
    NotEstimable,
}

/// The UMVUE of `target(θ)`, when there is one.
pub fn umvue_for(m: &CategoricalModel, target: &Polynomial) -> Result<Estimate> {
    let basis = monomial_basis(m.pmf().iter().chain(std::iter::once(target)));
    let t = target.coeff_vector(&basis)?;
    let coords = |ps: &[Polynomial]| -> RatMatrix {
        let cols: Vec<Vec<Rational>> = ps
            .iter()
            .map(|p| p.coeff_vector(&basis).expect("basis covers all"))
            .collect();
        RatMatrix::from_columns(basis.len(), &cols)
    };
    if coords(m.pmf()).solve(&t).is_none() {
        return Ok(Estimate::NotEstimable);
    }
    let funcs = umvue_functionals(m)?;
    Ok(match coords(&funcs.pi).solve(&t) {
        Some(c) => Estimate::Umvue(funcs.partition.lift(&c)),
        None => Estimate::NoUmvue,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::model::interval;
    use crate::rational::{int, rat};

    fn theta_model(pmf: &[&str]) -> CategoricalModel {
        let params = vec!["theta".to_string()];
        CategoricalModel::new(
            params.clone(),
            [("theta".to_string(), interval((0, 1), (1, 4)))].into(),
            (1..=pmf.len()).map(|k| k.to_string()).collect(),
            pmf.iter()
                .map(|e| parse_poly(e, &params).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn four_cell() -> CategoricalModel {
        theta_model(&[
            "theta",
            "theta^2",
            "theta + theta^2",
            "1 - 2*theta - 2*theta^2",
        ])
    }

    fn binomial2() -> CategoricalModel {
        theta_model(&["(1 - theta)^2", "2*theta*(1 - theta)", "theta^2"])
    }

    fn constant2() -> CategoricalModel {
        CategoricalModel::new(
            vec![],
            Default::default(),
            vec!["a".into(), "b".into()],
            vec![Polynomial::constant(rat(1, 2)); 2],
        )
        .unwrap()
    }

    fn stat(v: &[i64]) -> Statistic {
        Statistic::new(v.iter().map(|&x| int(x)).collect())
    }

    fn poly(s: &str) -> Polynomial {
        parse_poly(s, &["theta".to_string()]).unwrap()
    }

    #[test]
    fn zero_mean_space_examples() {
        assert_eq!(
            zero_mean_space(&four_cell()).vectors,
            vec![stat(&[1, 1, -1, 0])]
        );
        // p_1 + p_2 - p_3 expands to zero
        let m = four_cell();
        let e = &(&m.pmf()[0] + &m.pmf()[1]) - &m.pmf()[2];
        assert!(e.is_zero());
        assert_eq!(zero_mean_space(&binomial2()).dim(), 0);
        assert_eq!(zero_mean_space(&constant2()).vectors, vec![stat(&[1, -1])]);
    }

    #[test]
    fn is_umvue_examples() {
        let m = four_cell();
        assert!(is_umvue(&m, &stat(&[1, 1, 1, 0])).unwrap().is_umvue());
        assert_eq!(
            is_umvue(&m, &stat(&[1, 0, 0, 0])).unwrap(),
            UmvueVerdict::NotUmvue {
                witness: stat(&[1, 1, -1, 0]),
                residual: poly("theta"),
            }
        );
        for model in [four_cell(), binomial2(), constant2()] {
            let g = Statistic::constant(model.len(), rat(-7, 3));
            assert!(is_umvue(&model, &g).unwrap().is_umvue());
        }
        assert!(is_umvue(&m, &stat(&[1, 2])).is_err());
    }

    #[test]
    fn umvue_functionals_examples() {
        let f = umvue_functionals(&four_cell()).unwrap();
        assert_eq!(
            f.pi,
            vec![poly("2*theta + 2*theta^2"), poly("1 - 2*theta - 2*theta^2")]
        );

        let f = umvue_functionals(&binomial2()).unwrap();
        assert_eq!(f.pi, binomial2().pmf().to_vec());

        let f = umvue_functionals(&constant2()).unwrap();
        assert_eq!(f.pi, vec![Polynomial::one()]);
    }

    #[test]
    fn minimal_sufficiency_examples() {
        assert!(minimal_sufficient_partition(&four_cell()).is_singletons());
        let m = theta_model(&["1/2*theta", "1/2*theta", "1 - theta"]);
        assert_eq!(minimal_sufficient_partition(&m).to_string(), "{{1,2},{3}}");
        assert!(minimal_sufficient_partition(&binomial2()).is_singletons());
    }

    #[test]
    fn sufficiency_examples() {
        let m = four_cell();
        assert!(is_sufficient(&m, &Partition::singletons(4)).unwrap());
        let p = Partition::new(4, vec![vec![0, 1, 2], vec![3]]).unwrap();
        assert!(!is_sufficient(&m, &p).unwrap());
        let m2 = theta_model(&["1/2*theta", "1/2*theta", "1 - theta"]);
        let p2 = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(is_sufficient(&m2, &p2).unwrap());
        assert!(is_sufficient(&m2, &Partition::singletons(4)).is_err());
    }

    #[test]
    fn completeness_examples() {
        assert!(is_complete(&binomial2(), &Partition::singletons(3)).unwrap());
        assert!(!is_complete(&four_cell(), &Partition::singletons(4)).unwrap());
        for model in [four_cell(), binomial2(), constant2()] {
            assert!(is_complete(&model, &Partition::whole(model.len())).unwrap());
        }
        assert!(is_complete(&binomial2(), &Partition::singletons(2)).is_err());
    }

    #[test]
    fn umvue_for_examples() {
        let m = four_cell();
        assert_eq!(
            umvue_for(&m, &poly("1 - 2*theta - 2*theta^2")).unwrap(),
            Estimate::Umvue(stat(&[0, 0, 0, 1]))
        );
        assert_eq!(umvue_for(&m, &poly("theta")).unwrap(), Estimate::NoUmvue);
        assert_eq!(
            umvue_for(&m, &poly("theta^3")).unwrap(),
            Estimate::NotEstimable
        );
        assert_eq!(
            umvue_for(&m, &poly("theta + theta^2")).unwrap(),
            Estimate::Umvue(Statistic::new(vec![
                rat(1, 2),
                rat(1, 2),
                rat(1, 2),
                int(0)
            ]))
        );
        for model in [four_cell(), binomial2(), constant2()] {
            assert_eq!(
                umvue_for(&model, &Polynomial::one()).unwrap(),
                Estimate::Umvue(Statistic::constant(model.len(), int(1)))
            );
        }
    }
}
