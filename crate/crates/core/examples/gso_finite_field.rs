//! Exhaustive check over F_q that X -> t(g1) X g2 maps GL(2) x GL(2) onto
//! GSO(4) with kernel {(cI, c^-1 I)}. Pass q (3, 5 or 7) as an argument.

use gsp4_transfer::similitude::{beta_map, is_gso, verify_gso_structure, Mat2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(3);
    let g1 = Mat2::new([[1, 2], [0, 1]], q)?;
    let g2 = Mat2::new([[2, 0], [1, 1]], q)?;
    let e = beta_map(&g1, &g2)?;
    println!(
        "beta(g1, g2): lambda = {}, det = {}, in GSO: {}",
        e.lambda().value(),
        e.det().value(),
        is_gso(&e)
    );

    let start = std::time::Instant::now();
    let report = verify_gso_structure(q)?;
    for c in &report.checks {
        println!(
            "[{}] {:16} {}",
            if c.passed { "ok" } else { "FAIL" },
            c.id,
            c.detail
        );
    }
    println!(
        "|GO(4)| = {}, |GSO(4)| = {}, {:.2?}",
        report.go_size,
        report.gso_size,
        start.elapsed()
    );
    Ok(())
}
