//! Seeded random models with planted structure, checked against the MVE
//! partition, minimal sufficiency and completeness.

use umvue::analysis::{is_complete, minimal_sufficient_partition};
use umvue::corpus::random_model;
use umvue::matroid::mve_partition;

fn main() -> umvue::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    for s in seed..seed + 8 {
        let m = random_model(s, 5, 3, 1 + (s % 2) as usize)?;
        let mve = mve_partition(&m)?;
        let ms = minimal_sufficient_partition(&m);
        println!("seed {s}");
        for (label, p) in m.support().iter().zip(m.pmf()) {
            println!("  p_{label} = {p}");
        }
        println!(
            "  MVE {}  minimal sufficient {}  complete(minimal) {}",
            mve.one_based(),
            ms.one_based(),
            is_complete(&m, &ms)?
        );
    }
    Ok(())
}
