//! Hecke eigenvalues of the discriminant form from its product expansion,
//! normalized Satake parameters, and an optional CSV dump.
//! Usage: delta_eigenvalues [N] [out.csv]

use gsp4_transfer::lfunc::{delta_eigenvalues, io::write_eigenvalue_csv};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map(|a| a.parse()).transpose()?.unwrap_or(50);
    let table = delta_eigenvalues(n);
    for row in table.rows.iter().take(8) {
        println!(
            "p = {:3}  a_p = {:>14}  |alpha| = {:.12}  alpha = {:.6}",
            row.p,
            row.a_p,
            row.alpha.norm(),
            row.alpha
        );
    }
    let worst = table
        .rows
        .iter()
        .map(|r| {
            (r.alpha.norm() - 1.0)
                .abs()
                .max((r.beta.norm() - 1.0).abs())
        })
        .fold(0.0, f64::max);
    println!(
        "{} primes, max ||alpha| - 1| = {worst:.2e}",
        table.rows.len()
    );
    if let Some(path) = args.next() {
        write_eigenvalue_csv(&table, std::fs::File::create(&path)?)?;
        println!("wrote {path}");
    }
    Ok(())
}
