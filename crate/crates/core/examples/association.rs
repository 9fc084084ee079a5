//! Recover how two lists of cuspidal symbols match up from their local data
//! alone, and watch a single corrupted place break the match.

use std::collections::BTreeMap;
use std::sync::Arc;

use gsp4_transfer::isobaric::{associate_match, CharId, CuspidalSymbol};
use gsp4_transfer::lfunc::{primes_up_to, sample_sato_tate};
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let places: Vec<u64> = primes_up_to(80).into_iter().take(20).collect();
    let first: Vec<Arc<CuspidalSymbol>> = (0..5)
        .map(|i| {
            let id = format!("f{i}");
            Arc::new(
                CuspidalSymbol::new(id.as_str(), 2, id.as_str(), CharId::trivial())
                    .with_local(sample_sato_tate(i, &places)),
            )
        })
        .collect();
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(7);
    let mut order: Vec<usize> = (0..first.len()).collect();
    order.shuffle(&mut rng);
    let mut second: Vec<Arc<CuspidalSymbol>> = order.iter().map(|&i| first[i].clone()).collect();
    println!("shuffle:   {order:?}");
    println!(
        "recovered: {:?}",
        associate_match(&first, &second, &places)?
    );

    let mut local: BTreeMap<u64, Vec<Complex64>> = second[0].local.clone();
    local.insert(
        places[7],
        vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)],
    );
    second[0] = Arc::new(CuspidalSymbol::new("bad", 2, "bad", CharId::trivial()).with_local(local));
    println!(
        "after corrupting q = {}: {:?}",
        places[7],
        associate_match(&first, &second, &places)?
    );
    Ok(())
}
