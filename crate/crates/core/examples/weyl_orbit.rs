//! The order-8 group acting on four inducing characters (chi11, chi21, chi12,
//! chi22): it permutes within and swaps the two GL(2) blocks, so the GL(4)
//! parameter of the lift is the same along the whole orbit.

use gsp4_transfer::satake::{
    gsp4_to_gl4_embed, multiset_eq, theta_lift_params, weyl_orbit, GL2Param, UnramChar, MATCH_TOL,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = UnramChar::real;
    // chi11 chi21 = chi12 chi22 = 6, so the two blocks share a central value.
    let quad = [r(2.0)?, r(3.0)?, r(1.5)?, r(4.0)?];
    let lift = |t: &[UnramChar; 4]| -> Result<_, Box<dyn std::error::Error>> {
        let p = theta_lift_params(&GL2Param::new(t[0], t[1]), &GL2Param::new(t[2], t[3]))?;
        Ok(gsp4_to_gl4_embed(&p))
    };
    let base = lift(&quad)?;
    let orbit = weyl_orbit(&quad);
    println!("orbit size {}", orbit.len());
    for t in &orbit {
        let same = multiset_eq(lift(t)?.entries(), base.entries(), MATCH_TOL);
        println!(
            "{:?}  same GL(4) parameter: {same}",
            t.map(|c| c.value().re)
        );
    }
    let degenerate = [r(2.0)?, r(3.0)?, r(2.0)?, r(3.0)?];
    println!(
        "orbit of (2, 3, 2, 3) has size {}",
        weyl_orbit(&degenerate).len()
    );
    Ok(())
}
