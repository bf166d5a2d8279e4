//! Truncations of Lehmann's family are complete for every tail cut, unlike the
//! infinite family whose UMVUE algebra is generated by `{0}` and the rest.

use std::collections::BTreeMap;

use umvue::analysis::{is_complete, zero_mean_space};
use umvue::corpus::corpus_model;
use umvue::matroid::mve_partition;

fn main() -> umvue::Result<()> {
    for k in 1..=6 {
        let m = corpus_model("lehmann-trunc", &BTreeMap::from([("K".to_string(), k)]))?;
        let p = mve_partition(&m)?;
        println!(
            "K = {k}: support {:?}, zero-mean dim {}, MVE {}, complete {}",
            m.support(),
            zero_mean_space(&m).dim(),
            p.render(|i| m.support()[i].clone()),
            is_complete(&m, &p)?,
        );
    }
    Ok(())
}
