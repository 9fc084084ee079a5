//! Follow one pair of unramified GL(2) parameters through
//! GL(2) x GL(2) -> GSO(4) -> GSp(4) -> GL(4), and check that embedding the
//! theta-lift parameter agrees with the torus-coordinate transfer.

use gsp4_transfer::satake::{
    check_selfdual_twist, gsp4_to_gl4_embed, multiset_eq, theta_lift_params, transfer_gsp4_to_gl4,
    GL2Param, UnramChar, MATCH_TOL,
};
use num_rational::Ratio;

fn show(v: &[UnramChar]) -> String {
    let parts: Vec<String> = v.iter().map(|c| format!("{:.4}", c.value())).collect();
    format!("({})", parts.join(", "))
}

fn main() {
    let q = 7;
    // alpha1 beta1 = alpha2 beta2 = q^(1/3) e^(2 pi i / 5): a shared central value.
    let c = |r: (i64, i64), t: (i64, i64)| {
        UnramChar::exact(q, Ratio::new(r.0, r.1), Ratio::new(t.0, t.1))
    };
    let p1 = GL2Param::new(c((1, 2), (1, 7)), c((-1, 6), (2, 35)));
    let p2 = GL2Param::new(c((1, 4), (1, 3)), c((1, 12), (-2, 15)));
    println!("pi1 = {}", show(&p1.entries()));
    println!("pi2 = {}", show(&p2.entries()));
    println!(
        "central values: {:.4} and {:.4}",
        p1.mu().value(),
        p2.mu().value()
    );

    let gsp4 = theta_lift_params(&p1, &p2).expect("central values agree");
    println!(
        "GSp(4) parameter (x1, x2, y2, y1) = {}",
        show(&gsp4.to_tuple())
    );

    let embedded = gsp4_to_gl4_embed(&gsp4);
    let direct = transfer_gsp4_to_gl4(gsp4.mu(), p1.alpha, p2.alpha);
    println!("GL(4) parameter  = {}", show(embedded.entries()));
    println!(
        "commuting diagram: {}",
        multiset_eq(embedded.entries(), direct.entries(), MATCH_TOL)
    );
    println!(
        "product = mu^2: {}",
        embedded.product().matches(&gsp4.mu().powi(2), MATCH_TOL)
    );
    println!(
        "self-dual up to mu: {}",
        check_selfdual_twist(&embedded, gsp4.mu())
    );
}
