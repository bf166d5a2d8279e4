//! Find the UMVUE of a polynomial target, or explain why there is none.

use std::collections::BTreeMap;

use umvue::analysis::{umvue_for, umvue_functionals, Estimate};
use umvue::corpus::corpus_model;
use umvue::expr::parse_poly;

fn main() -> umvue::Result<()> {
    let m = corpus_model("four-cell", &BTreeMap::new())?;
    let span = umvue_functionals(&m)?;
    let pis: Vec<String> = span.pi.iter().map(|p| p.to_string()).collect();
    println!("targets with a UMVUE: span of [{}]", pis.join("; "));
    for target in [
        "1",
        "theta + theta^2",
        "5 - 2*theta^2 - 2*theta",
        "theta",
        "theta^2",
        "theta^3",
    ] {
        let t = parse_poly(target, m.parameters())?;
        let shown = t.to_string();
        match umvue_for(&m, &t)? {
            Estimate::Umvue(g) => println!("{shown:>26}: UMVUE ({g})"),
            Estimate::NoUmvue => println!("{shown:>26}: unbiasedly estimable, no UMVUE"),
            Estimate::NotEstimable => println!("{shown:>26}: not estimable"),
        }
    }
    Ok(())
}
