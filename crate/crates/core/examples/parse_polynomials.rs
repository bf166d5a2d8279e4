//! Polynomial expressions: parsing, canonical printing and error positions.

use umvue::expr::{format_poly, parse_poly};

fn main() {
    let params = vec!["theta".to_string(), "eta".to_string()];
    for src in [
        "1 - 2*theta - 2*theta^2",
        "(1-theta)^2 * theta",
        "theta*eta*(-1/2) + eta^2",
        "theta^0",
        "2 theta",
        "theta/2",
        "kappa + 1",
        "1/0",
    ] {
        match parse_poly(src, &params) {
            Ok(p) => println!("{src:>26} => {}", format_poly(&p)),
            Err(e) => println!("{src:>26} => error: {e}"),
        }
    }
}
