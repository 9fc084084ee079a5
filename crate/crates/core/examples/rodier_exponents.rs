//! Exponent vectors of GL(4) parameters and their place in the list of
//! families that can occur without full induction.

use gsp4_transfer::satake::{exponents, rodier_class, GL4Param, PlaceData, UnramChar};
use num_rational::Ratio;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = 5;
    let place = PlaceData::new(q)?;
    let half = |n: i64, d: i64| UnramChar::exact(q, Ratio::new(n, d), Ratio::new(0, 1));
    let cases = [
        (
            "(-1/2, -1/5, 1/5, 1/2)",
            [half(1, 2), half(1, 5), half(-1, 5), half(-1, 2)],
        ),
        (
            "(-1/2, -1/2, 1/2, 1/2)",
            [half(1, 2), half(1, 2), half(-1, 2), half(-1, 2)],
        ),
        (
            "(-3/2, -1/2, 1/2, 3/2)",
            [half(3, 2), half(1, 2), half(-1, 2), half(-3, 2)],
        ),
        (
            "(-1/2, -3/10, 3/10, 1/2)",
            [half(1, 2), half(3, 10), half(-3, 10), half(-1, 2)],
        ),
    ];
    for (label, entries) in cases {
        let e = exponents(&GL4Param::new(entries), place);
        let exact = rodier_class(&e, 1e-9);
        let float = rodier_class(&e.to_float(), 1e-9);
        println!(
            "{label:26} -> {:?} (float mode agrees: {})",
            exact,
            exact.agrees_with(&float, 1e-9)
        );
    }
    Ok(())
}
