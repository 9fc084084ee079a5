//! Numerical pole orders from truncated Euler products on seeded synthetic
//! Satake data, next to the symbolic orders they should reproduce.

use gsp4_transfer::isobaric::{
    pole_case_analysis, transfer, CharId, CuspidalSymbol, GSp4Descriptor, Registry,
};
use gsp4_transfer::lfunc::{
    estimate_pole_order, primes_up_to, synthetic::rebind, with_synthetic_data, EstimatorConfig,
    SyntheticConfig,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x: u64 = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(100_000);
    let mut reg = Registry::new();
    for id in ["f", "g", "h"] {
        reg.add(CuspidalSymbol::new(id, 2, id, CharId::trivial()))?;
    }
    reg.add(CuspidalSymbol::new("P", 4, "P", CharId::trivial()))?;
    let sym = |id: &str| reg.get(&id.into()).unwrap();
    let fg = GSp4Descriptor::from_gso(sym("f"), sym("g"), CharId::trivial())?;
    let fh = GSp4Descriptor::from_gso(sym("f"), sym("h"), CharId::trivial())?;
    let p = GSp4Descriptor::generic(sym("P"), CharId::trivial())?;

    let filled = with_synthetic_data(
        &reg,
        &SyntheticConfig {
            seed: 1,
            primes: primes_up_to(x),
        },
    )?;
    let cfg = EstimatorConfig {
        x,
        ..Default::default()
    };
    for (a, b) in [(&fg, &fg), (&fg, &fh), (&fg, &p)] {
        let symbolic = pole_case_analysis(a, b, &reg)?;
        let r1 = rebind(&transfer(a)?.rep, &filled)?;
        let r2 = rebind(&transfer(b)?.rep, &filled)?;
        let est = estimate_pole_order(&r1, &r2, &cfg)?;
        println!(
            "{} x {}: symbolic {}, estimate {:.3} (slope vs log 1/(s-1): {:.3})",
            r1, r2, symbolic.report.order, est.estimate, est.slope_vs_log_inverse_distance
        );
    }
    Ok(())
}
