//! Full analysis of the four-cell model: MVE partition, zero-mean statistics,
//! the functionals that admit a UMVUE, and the sufficiency diagnostics.

use std::collections::BTreeMap;

use umvue::corpus::corpus_model;
use umvue::report::analyze;

fn main() -> umvue::Result<()> {
    let m = corpus_model("four-cell", &BTreeMap::new())?;
    let report = analyze(&m)?;
    print!("{}", report.to_text());
    println!();
    print!("{}", report.to_json());
    Ok(())
}
