//! Symbolic pole orders at s = 1 of L(s, Pi1 x Pi2) for transfers to GL(4),
//! including the double pole when both representations come from the same
//! pair of GL(2) forms.

use std::sync::Arc;

use gsp4_transfer::isobaric::{
    pole_case_analysis, transfer, CharId, CuspidalSymbol, GSp4Descriptor, Registry,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut reg = Registry::new();
    let mut add =
        |id: &str, degree: usize| -> Result<Arc<CuspidalSymbol>, Box<dyn std::error::Error>> {
            Ok(reg.add(CuspidalSymbol::new(id, degree, id, CharId::trivial()))?)
        };
    let (f, g, h) = (add("f", 2)?, add("g", 2)?, add("h", 2)?);
    let big = add("P", 4)?;

    let fg = GSp4Descriptor::from_gso(f.clone(), g.clone(), CharId::trivial())?;
    let fh = GSp4Descriptor::from_gso(f, h, CharId::trivial())?;
    let generic = GSp4Descriptor::generic(big, CharId::trivial())?;
    println!("transfer of the lift of f x g: {}", transfer(&fg)?.rep);

    for (name, a, b) in [
        ("f+g vs f+g", &fg, &fg),
        ("f+g vs f+h", &fg, &fh),
        ("f+g vs P", &fg, &generic),
        ("P vs P", &generic, &generic),
    ] {
        let analysis = pole_case_analysis(a, b, &reg)?;
        println!(
            "{name:12} case {:?}, order {}, dual pairs {:?}",
            analysis.case, analysis.report.order, analysis.report.witnesses
        );
    }

    // Equal constituents are refused: the lift would no longer be cuspidal.
    let g2 = reg.get(&"g".into())?;
    println!(
        "g x g: {}",
        GSp4Descriptor::from_gso(g2.clone(), g2, CharId::trivial()).unwrap_err()
    );
    Ok(())
}
