//! Analysis reports, as JSON and as plain text.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::{
    is_complete, minimal_sufficient_partition, umvue_functionals, zero_mean_space,
};
use crate::error::Result;
use crate::model::CategoricalModel;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDigest {
    pub n: usize,
    pub parameters: Vec<String>,
    pub domain: BTreeMap<String, [String; 2]>,
    pub support: Vec<String>,
}

/// Everything the analysis computes for one model. Partitions list support
/// labels; rationals and polynomials are canonical strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub model: ModelDigest,
    pub mve_partition: Vec<Vec<String>>,
    pub zero_mean_basis: Vec<Vec<String>>,
    pub umvue_functionals: Vec<String>,
    pub minimal_sufficient_partition: Vec<Vec<String>>,
    pub is_minimal_sufficient_complete: bool,
    pub is_mve_equal_minimal_sufficient: bool,
}

fn labelled(m: &CategoricalModel, p: &Partition) -> Vec<Vec<String>> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|&k| m.support()[k].clone()).collect())
        .collect()
}

pub fn analyze(m: &CategoricalModel) -> Result<AnalysisReport> {
    let file = m.to_file();
    let funcs = umvue_functionals(m)?;
    let minimal = minimal_sufficient_partition(m);
    Ok(AnalysisReport {
        model: ModelDigest {
            n: m.len(),
            parameters: file.parameters,
            domain: file.domain,
            support: file.support,
        },
        mve_partition: labelled(m, &funcs.partition),
        zero_mean_basis: zero_mean_space(m)
            .vectors
            .iter()
            .map(|v| v.values().iter().map(|x| x.to_string()).collect())
            .collect(),
        umvue_functionals: funcs.pi.iter().map(|p| p.to_string()).collect(),
        minimal_sufficient_partition: labelled(m, &minimal),
        is_minimal_sufficient_complete: is_complete(m, &minimal)?,
        is_mve_equal_minimal_sufficient: funcs.partition == minimal,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_text(&self) -> String {
        let blocks = |p: &[Vec<String>]| {
            p.iter()
                .map(|b| format!("{{{}}}", b.join(",")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut s = String::new();
        let dom: Vec<String> = self
            .model
            .parameters
            .iter()
            .map(|p| {
                let [lo, hi] = &self.model.domain[p];
                format!("{p} in ({lo}, {hi})")
            })
            .collect();
        let dom = if dom.is_empty() {
            "none".to_string()
        } else {
            dom.join(", ")
        };
        writeln!(s, "support size: {}", self.model.n).unwrap();
        writeln!(s, "parameters: {dom}").unwrap();
        writeln!(s, "MVE partition: {}", blocks(&self.mve_partition)).unwrap();
        writeln!(s, "zero-mean basis (dim {}):", self.zero_mean_basis.len()).unwrap();
        for v in &self.zero_mean_basis {
            writeln!(s, "  ({})", v.join(", ")).unwrap();
        }
        writeln!(s, "functionals with a UMVUE span:").unwrap();
        for (j, p) in self.umvue_functionals.iter().enumerate() {
            writeln!(s, "  pi_{} = {p}", j + 1).unwrap();
        }
        writeln!(
            s,
            "minimal sufficient partition: {}",
            blocks(&self.minimal_sufficient_partition)
        )
        .unwrap();
        writeln!(
            s,
            "minimal sufficient statistic complete: {}",
            yes_no(self.is_minimal_sufficient_complete)
        )
        .unwrap();
        writeln!(
            s,
            "MVE partition equals minimal sufficient partition: {}",
            yes_no(self.is_mve_equal_minimal_sufficient)
        )
        .unwrap();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus_model;

    #[test]
    fn four_cell_report() {
        let m = corpus_model("four-cell", &BTreeMap::new()).unwrap();
        let r = analyze(&m).unwrap();
        assert_eq!(r.mve_partition, vec![vec!["1", "2", "3"], vec!["4"]]);
        assert_eq!(r.zero_mean_basis, vec![vec!["1", "1", "-1", "0"]]);
        assert_eq!(
            r.umvue_functionals,
            ["2*theta + 2*theta^2", "1 - 2*theta - 2*theta^2"]
        );
        assert_eq!(r.minimal_sufficient_partition.len(), 4);
        assert!(!r.is_minimal_sufficient_complete);
        assert!(!r.is_mve_equal_minimal_sufficient);
        assert_eq!(AnalysisReport::from_json(&r.to_json()).unwrap(), r);
        assert!(r.to_text().contains("MVE partition: {1,2,3} {4}\n"));
    }

    #[test]
    fn complete_family_report() {
        let m = corpus_model("binomial", &BTreeMap::from([("n".into(), 2)])).unwrap();
        let r = analyze(&m).unwrap();
        assert!(r.zero_mean_basis.is_empty());
        assert!(r.is_minimal_sufficient_complete);
        assert!(r.is_mve_equal_minimal_sufficient);
    }
}
