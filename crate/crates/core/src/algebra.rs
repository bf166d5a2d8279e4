//! Model combinators: independent products and parameter slices.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::CategoricalModel;
use crate::partition::Partition;
use crate::rational::Rational;

/// Index of the pair `(k, l)` in a product support, row-major.
pub fn pair_index(k: usize, l: usize, n2: usize) -> usize {
    k * n2 + l
}

/// Joint model of independent `X₁ ~ m1` and `X₂ ~ m2`, parameterized by both
/// parameter vectors. Support labels are `"a⊗b"`, ordered row-major.
pub fn product_model(m1: &CategoricalModel, m2: &CategoricalModel) -> Result<CategoricalModel> {
    if let Some(p) = m1.parameters().iter().find(|p| m2.parameters().contains(p)) {
        return Err(Error::ParameterCollision(p.clone()));
    }
    let mut support = Vec::with_capacity(m1.len() * m2.len());
    let mut pmf = Vec::with_capacity(m1.len() * m2.len());
    for (a, p) in m1.support().iter().zip(m1.pmf()) {
        for (b, q) in m2.support().iter().zip(m2.pmf()) {
            support.push(format!("{a}⊗{b}"));
            pmf.push(p * q);
        }
    }
    let parameters = m1
        .parameters()
        .iter()
        .chain(m2.parameters())
        .cloned()
        .collect();
    let domain = m1
        .domain()
        .iter()
        .chain(m2.domain())
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    CategoricalModel::new(parameters, domain, support, pmf)
}

/// Blocks `I_a × J_b` of the product support.
pub fn product_partition(p1: &Partition, p2: &Partition) -> Partition {
    let n2 = p2.ground_size();
    let blocks = p1
        .blocks()
        .iter()
        .flat_map(|a| {
            p2.blocks().iter().map(move |b| {
                a.iter()
                    .flat_map(|&k| b.iter().map(move |&l| pair_index(k, l, n2)))
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    Partition::new(p1.ground_size() * n2, blocks).expect("product of partitions is a partition")
}

/// Fixes some parameters at interior values. The result is revalidated, since
/// a slice can hit a zero of some `p_k`.
pub fn slice_model(
    m: &CategoricalModel,
    bindings: &BTreeMap<String, Rational>,
) -> Result<CategoricalModel> {
    for (name, value) in bindings {
        let Some(iv) = m.domain().get(name) else {
            return Err(Error::UnknownParameter(name.clone()));
        };
        if !iv.contains_strictly(value) {
            return Err(Error::OutOfDomain {
                name: name.clone(),
                value: Box::new(value.clone()),
                lo: Box::new(iv.lo.clone()),
                hi: Box::new(iv.hi.clone()),
            });
        }
    }
    let free: Vec<String> = m
        .parameters()
        .iter()
        .filter(|p| !bindings.contains_key(*p))
        .cloned()
        .collect();
    if free.is_empty() {
        return Err(Error::NoFreeParameters);
    }
    let domain = m
        .domain()
        .iter()
        .filter(|(k, _)| !bindings.contains_key(*k))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let pmf = m.pmf().iter().map(|p| p.substitute(bindings)).collect();
    CategoricalModel::new(free, domain, m.support().to_vec(), pmf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::model::interval;
    use crate::poly::Polynomial;
    use crate::rational::rat;

    fn bernoulli(param: &str) -> CategoricalModel {
        let params = vec![param.to_string()];
        CategoricalModel::new(
            params.clone(),
            [(param.to_string(), interval((0, 1), (1, 1)))].into(),
            vec!["1".into(), "0".into()],
            vec![
                parse_poly(param, &params).unwrap(),
                parse_poly(&format!("1 - {param}"), &params).unwrap(),
            ],
        )
        .unwrap()
    }

    fn polys(exprs: &[&str], params: &[&str]) -> Vec<Polynomial> {
        let params: Vec<String> = params.iter().map(|s| s.to_string()).collect();
        exprs
            .iter()
            .map(|e| parse_poly(e, &params).unwrap())
            .collect()
    }

    #[test]
    fn bernoulli_product() {
        let m = product_model(&bernoulli("theta"), &bernoulli("eta")).unwrap();
        assert_eq!(m.support(), ["1⊗1", "1⊗0", "0⊗1", "0⊗0"]);
        assert_eq!(
            m.pmf(),
            polys(
                &[
                    "theta*eta",
                    "theta*(1-eta)",
                    "(1-theta)*eta",
                    "(1-theta)*(1-eta)"
                ],
                &["theta", "eta"]
            )
        );
        assert_eq!(m.parameters(), ["theta", "eta"]);
    }

    #[test]
    fn product_with_point_mass_is_identity() {
        let point = CategoricalModel::new(
            vec![],
            BTreeMap::new(),
            vec!["*".into()],
            vec![Polynomial::one()],
        )
        .unwrap();
        let m = bernoulli("theta");
        let prod = product_model(&m, &point).unwrap();
        assert_eq!(prod.pmf(), m.pmf());
        assert_eq!(prod.parameters(), m.parameters());
    }

    #[test]
    fn parameter_collision() {
        assert_eq!(
            product_model(&bernoulli("theta"), &bernoulli("theta")),
            Err(Error::ParameterCollision("theta".into()))
        );
    }

    #[test]
    fn product_partition_examples() {
        let s = product_partition(&Partition::singletons(2), &Partition::singletons(3));
        assert!(s.is_singletons());
        let p = product_partition(&Partition::whole(2), &Partition::singletons(2));
        // (1,1),(2,1) and (1,2),(2,2)
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1, 3]]);
        let a = Partition::new(4, vec![vec![0, 1, 2], vec![3]]).unwrap();
        let p = product_partition(&a, &Partition::whole(2));
        let sizes: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
        assert_eq!(sizes, [6, 2]);
    }

    #[test]
    fn slice_bernoulli_product() {
        let m = product_model(&bernoulli("theta"), &bernoulli("eta")).unwrap();
        let s = slice_model(&m, &BTreeMap::from([("eta".into(), rat(1, 3))])).unwrap();
        assert_eq!(s.parameters(), ["theta"]);
        assert_eq!(
            s.pmf(),
            polys(
                &["1/3*theta", "2/3*theta", "(1-theta)*1/3", "2/3*(1-theta)"],
                &["theta"]
            )
        );
    }

    #[test]
    fn slice_errors() {
        let m = product_model(&bernoulli("theta"), &bernoulli("eta")).unwrap();
        let at = |k: &str, v: Rational| BTreeMap::from([(k.to_string(), v)]);
        assert!(matches!(
            slice_model(&m, &at("eta", rat(1, 1))),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            slice_model(&m, &at("eta", rat(0, 1))),
            Err(Error::OutOfDomain { .. })
        ));
        assert_eq!(
            slice_model(&m, &at("zeta", rat(1, 2))),
            Err(Error::UnknownParameter("zeta".into()))
        );
        let both = BTreeMap::from([("eta".into(), rat(1, 2)), ("theta".into(), rat(1, 2))]);
        assert_eq!(slice_model(&m, &both), Err(Error::NoFreeParameters));
    }

    #[test]
    fn slice_hitting_a_zero_is_rejected() {
        // positive on the sampled grid, but p_1 vanishes along eta = 1/4
        let params = vec!["theta".to_string(), "eta".to_string()];
        let pmf = polys(
            &["theta*(eta - 1/4)^2", "1 - theta*(eta - 1/4)^2"],
            &["theta", "eta"],
        );
        let m = CategoricalModel::new(
            params,
            [
                ("theta".to_string(), interval((0, 1), (1, 1))),
                ("eta".to_string(), interval((0, 1), (1, 1))),
            ]
            .into(),
            vec!["a".into(), "b".into()],
            pmf,
        )
        .unwrap();
        let at = BTreeMap::from([("eta".to_string(), rat(1, 4))]);
        assert_eq!(slice_model(&m, &at), Err(Error::ZeroComponent(0)));
    }
}
