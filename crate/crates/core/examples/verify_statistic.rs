//! Decide whether given statistics are UMVUEs. A failing statistic comes with
//! the zero-mean statistic it correlates with and the non-zero expectation.

use std::collections::BTreeMap;

use umvue::analysis::{is_umvue, UmvueVerdict};
use umvue::corpus::corpus_model;
use umvue::rational::parse_rational_list;
use umvue::Statistic;

fn main() -> umvue::Result<()> {
    let m = corpus_model("four-cell", &BTreeMap::new())?;
    for text in ["1,0,0,0", "1,1,1,0", "3,3,3,-1/2"] {
        let g = Statistic::new(parse_rational_list(text)?);
        match is_umvue(&m, &g)? {
            UmvueVerdict::Umvue => println!("({g}) is a UMVUE of {}", g.expectation(&m)?),
            UmvueVerdict::NotUmvue { witness, residual } => {
                println!("({g}) is not a UMVUE: E[g * ({witness})] = {residual}")
            }
        }
    }
    Ok(())
}
