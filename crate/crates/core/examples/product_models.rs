//! Independent products: the product of the two MVE partitions is an MVE
//! partition of the product model, though the product model may be finer.

use std::collections::BTreeMap;

use umvue::algebra::{product_model, product_partition};
use umvue::corpus::corpus_model;
use umvue::matroid::mve_partition;
use umvue::partition::refines;

fn main() -> umvue::Result<()> {
    let a = corpus_model("four-cell", &BTreeMap::new())?;
    let b = corpus_model("bernoulli", &BTreeMap::new())?.rename_parameter("theta", "phi")?;
    let prod = product_model(&a, &b)?;

    let joint = mve_partition(&prod)?;
    let pp = product_partition(&mve_partition(&a)?, &mve_partition(&b)?);
    let label = |k: usize| prod.support()[k].clone();
    println!("product support: {}", prod.support().join(" "));
    println!("product of MVE partitions: {}", pp.render(label));
    println!("MVE partition of product:  {}", joint.render(label));
    println!(
        "every block is a union of product-model blocks: {}",
        refines(&joint, &pp)?
    );
    Ok(())
}
