//! Fix the nuisance parameter of the two-parameter demo at several interior
//! values. Statistics measurable with respect to the common coarsening of the
//! slice partitions are UMVUEs of the full model.

use std::collections::BTreeMap;

use umvue::algebra::slice_model;
use umvue::analysis::is_umvue;
use umvue::corpus::corpus_model;
use umvue::matroid::mve_partition;
use umvue::partition::common_coarsening;
use umvue::rational::rat;
use umvue::Statistic;

fn main() -> umvue::Result<()> {
    let m = corpus_model("two-param-demo", &BTreeMap::new())?;
    println!(
        "full model MVE partition: {}",
        mve_partition(&m)?.one_based()
    );

    let mut slices = Vec::new();
    for k in 1..=5 {
        let bind = BTreeMap::from([("eta".to_string(), rat(k, 6))]);
        let s = slice_model(&m, &bind)?;
        let p = mve_partition(&s)?;
        println!(
            "eta = {}: pmf [{}], MVE {}",
            rat(k, 6),
            pmf(&s),
            p.one_based()
        );
        slices.push(p);
    }
    let q = common_coarsening(&slices)?;
    println!("common coarsening: {}", q.one_based());
    for block in q.blocks() {
        let g = Statistic::indicator(m.len(), block);
        println!(
            "indicator ({g}) UMVUE in full model: {}",
            is_umvue(&m, &g)?.is_umvue()
        );
    }
    Ok(())
}

fn pmf(m: &umvue::CategoricalModel) -> String {
    m.pmf()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
