//! Finite categorical models with polynomial probabilities.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::parse_poly;
use crate::linalg::RatMatrix;
use crate::poly::{monomial_basis, Monomial, Polynomial};
use crate::rational::{parse_rational, rat, Rational};

/// Number of interior sample points per parameter used for the positivity check.
pub const POSITIVITY_GRID: i64 = 5;

/// Closed interval `[lo, hi]` with `lo < hi`. Parameters live in its interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        Interval { lo, hi }
    }

    pub fn contains_strictly(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// `lo + (hi - lo) * i / (POSITIVITY_GRID + 1)` for `i = 1..=POSITIVITY_GRID`.
    pub fn interior_grid(&self) -> Vec<Rational> {
        let width = &self.hi - &self.lo;
        (1..=POSITIVITY_GRID)
            .map(|i| &self.lo + &width * rat(i, POSITIVITY_GRID + 1))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoricalModel {
    support: Vec<String>,
    pmf: Vec<Polynomial>,
    parameters: Vec<String>,
    domain: BTreeMap<String, Interval>,
}

/// What a successful validation checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub support_size: usize,
    /// Positivity is only sampled at these many grid points, never proven.
    pub positivity_points: usize,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "valid: N = {}, exact normalization, sampled positivity at {} points",
            self.support_size, self.positivity_points
        )
    }
}

impl CategoricalModel {
    /// Builds and validates a model.
    pub fn new(
        parameters: Vec<String>,
        domain: BTreeMap<String, Interval>,
        support: Vec<String>,
        pmf: Vec<Polynomial>,
    ) -> Result<Self> {
        let m = CategoricalModel {
            support,
            pmf,
            parameters,
            domain,
        };
        validate_model(&m)?;
        Ok(m)
    }

    /// Skips validation. Analyses on an invalid model are meaningless; use
    /// [`validate_model`] before trusting results.
    pub fn new_unchecked(
        parameters: Vec<String>,
        domain: BTreeMap<String, Interval>,
        support: Vec<String>,
        pmf: Vec<Polynomial>,
    ) -> Self {
        CategoricalModel {
            support,
            pmf,
            parameters,
            domain,
        }
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> &[String] {
        &self.support
    }

    pub fn pmf(&self) -> &[Polynomial] {
        &self.pmf
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn domain(&self) -> &BTreeMap<String, Interval> {
        &self.domain
    }

    /// Relabels the support; the new labels must stay distinct.
    pub fn with_support(mut self, support: Vec<String>) -> Result<Self> {
        if support.len() != self.len() {
            return Err(Error::PmfLengthMismatch {
                support: support.len(),
                pmf: self.len(),
            });
        }
        self.support = support;
        validate_model(&self)?;
        Ok(self)
    }

    /// Renames a parameter everywhere in the model.
    pub fn rename_parameter(&self, from: &str, to: &str) -> Result<Self> {
        if !self.parameters.iter().any(|p| p == from) {
            return Err(Error::UnknownParameter(from.to_string()));
        }
        if from != to && self.parameters.iter().any(|p| p == to) {
            return Err(Error::DuplicateParameter(to.to_string()));
        }
        let swap = |s: &String| if s == from { to.to_string() } else { s.clone() };
        Ok(CategoricalModel {
            support: self.support.clone(),
            pmf: self.pmf.iter().map(|p| p.rename(from, to)).collect(),
            parameters: self.parameters.iter().map(swap).collect(),
            domain: self
                .domain
                .iter()
                .map(|(k, v)| (swap(k), v.clone()))
                .collect(),
        })
    }

    /// The positivity sample grid: cartesian product of each parameter's
    /// interior grid, in declared parameter order.
    pub fn sample_points(&self) -> Vec<BTreeMap<String, Rational>> {
        let mut points = vec![BTreeMap::new()];
        for name in &self.parameters {
            let grid = self.domain[name].interior_grid();
            points = points
                .into_iter()
                .flat_map(|pt| {
                    grid.iter().map(move |v| {
                        let mut q = pt.clone();
                        q.insert(name.clone(), v.clone());
                        q
                    })
                })
                .collect();
        }
        points
    }

    pub fn to_file(&self) -> ModelFile {
        ModelFile {
            parameters: self.parameters.clone(),
            domain: self
                .domain
                .iter()
                .map(|(k, iv)| (k.clone(), [iv.lo.to_string(), iv.hi.to_string()]))
                .collect(),
            support: self.support.clone(),
            pmf: self.pmf.iter().map(|p| p.to_string()).collect(),
        }
    }

    pub fn from_file(file: &ModelFile) -> Result<Self> {
        let mut domain = BTreeMap::new();
        for (name, [lo, hi]) in &file.domain {
            domain.insert(
                name.clone(),
                Interval::new(parse_rational(lo)?, parse_rational(hi)?),
            );
        }
        let pmf = file
            .pmf
            .iter()
            .map(|e| parse_poly(e, &file.parameters))
            .collect::<Result<Vec<_>>>()?;
        CategoricalModel::new(file.parameters.clone(), domain, file.support.clone(), pmf)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("model serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(s)?;
        Self::from_file(&file)
    }
}

/// On-disk model format. Rationals and polynomials are strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub parameters: Vec<String>,
    pub domain: BTreeMap<String, [String; 2]>,
    pub support: Vec<String>,
    pub pmf: Vec<String>,
}

fn format_point(pt: &BTreeMap<String, Rational>) -> String {
    if pt.is_empty() {
        return "(no parameters)".into();
    }
    pt.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn validate_model(m: &CategoricalModel) -> Result<ValidationReport> {
    if m.support.is_empty() {
        return Err(Error::EmptySupport);
    }
    if m.support.len() != m.pmf.len() {
        return Err(Error::PmfLengthMismatch {
            support: m.support.len(),
            pmf: m.pmf.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for label in &m.support {
        if !seen.insert(label) {
            return Err(Error::DuplicateLabel(label.clone()));
        }
    }
    let mut params = BTreeSet::new();
    for p in &m.parameters {
        if !params.insert(p.as_str()) {
            return Err(Error::DuplicateParameter(p.clone()));
        }
        match m.domain.get(p) {
            None => {
                return Err(Error::BadDomain {
                    name: p.clone(),
                    reason: "no interval given".into(),
                })
            }
            Some(iv) if iv.lo >= iv.hi => {
                return Err(Error::BadDomain {
                    name: p.clone(),
                    reason: format!("need lo < hi, got [{}, {}]", iv.lo, iv.hi),
                })
            }
            Some(_) => {}
        }
    }
    if let Some(extra) = m.domain.keys().find(|k| !params.contains(k.as_str())) {
        return Err(Error::BadDomain {
            name: extra.clone(),
            reason: "not a declared parameter".into(),
        });
    }
    for p in &m.pmf {
        if let Some(u) = p
            .parameters()
            .into_iter()
            .find(|u| !params.contains(u.as_str()))
        {
            return Err(Error::UnknownParameter(u));
        }
    }
    if let Some(k) = m.pmf.iter().position(Polynomial::is_zero) {
        return Err(Error::ZeroComponent(k));
    }
    let residual = &m.pmf.iter().sum::<Polynomial>() - &Polynomial::one();
    if !residual.is_zero() {
        return Err(Error::NotNormalized {
            residual: Box::new(residual),
        });
    }
    let points = m.sample_points();
    for pt in &points {
        for (k, p) in m.pmf.iter().enumerate() {
            let v = p.evaluate(pt).expect("all parameters bound");
            if !v.is_positive() {
                return Err(Error::NonPositive {
                    index: k,
                    point: format_point(pt),
                });
            }
        }
    }
    Ok(ValidationReport {
        support_size: m.len(),
        positivity_points: points.len(),
    })
}

/// Monomial basis (canonical order) and the matrix whose column `k` holds the
/// coordinates of `p_{k+1}` in it.
pub fn coefficient_matrix(m: &CategoricalModel) -> (Vec<Monomial>, RatMatrix) {
    let basis = monomial_basis(&m.pmf);
    let cols: Vec<Vec<Rational>> = m
        .pmf
        .iter()
        .map(|p| p.coeff_vector(&basis).expect("basis covers every pmf"))
        .collect();
    let c = RatMatrix::from_columns(basis.len(), &cols);
    (basis, c)
}

/// A real-valued function on the support, one exact value per support point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Statistic(pub Vec<Rational>);

impl Statistic {
    pub fn new(values: Vec<Rational>) -> Self {
        Statistic(values)
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Statistic(vec![c; n])
    }

    pub fn indicator(n: usize, set: &[usize]) -> Self {
        let mut v = vec![Rational::zero(); n];
        for &k in set {
            v[k] = Rational::one();
        }
        Statistic(v)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn hadamard(&self, other: &Statistic) -> Statistic {
        Statistic(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    pub fn linear_combination(
        a: &Rational,
        g: &Statistic,
        b: &Rational,
        h: &Statistic,
    ) -> Statistic {
        Statistic(g.0.iter().zip(&h.0).map(|(x, y)| a * x + b * y).collect())
    }

    /// `E_θ g(X) = Σ_k g(k) p_k(θ)`.
    pub fn expectation(&self, m: &CategoricalModel) -> Result<Polynomial> {
        check_len(m, self)?;
        Ok(self
            .0
            .iter()
            .zip(m.pmf())
            .filter(|(g, _)| !g.is_zero())
            .map(|(g, p)| p.scale(g))
            .sum())
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::rational::format_list(&self.0))
    }
}

pub(crate) fn check_len(m: &CategoricalModel, g: &Statistic) -> Result<()> {
    if g.len() != m.len() {
        return Err(Error::LengthMismatch {
            expected: m.len(),
            got: g.len(),
        });
    }
    Ok(())
}

/// `[lo.0/lo.1, hi.0/hi.1]`.
pub fn interval(lo: (i64, i64), hi: (i64, i64)) -> Interval {
    Interval::new(rat(lo.0, lo.1), rat(hi.0, hi.1))
}
