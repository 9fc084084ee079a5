//! The order-8 group acting on `(chi11, chi21, chi12, chi22)`.
//!
//! Generated by `sigma1`, swapping `chi11 <-> chi21`, and `tau`, swapping
//! `chi_j1 <-> chi_j2` for `j = 1, 2`.

/// `chi11 <-> chi21`.
pub fn sigma1<T: Clone>(t: &[T; 4]) -> [T; 4] {
    [t[1].clone(), t[0].clone(), t[2].clone(), t[3].clone()]
}

/// `chi11 <-> chi12` and `chi21 <-> chi22`.
pub fn tau<T: Clone>(t: &[T; 4]) -> [T; 4] {
    [t[2].clone(), t[3].clone(), t[0].clone(), t[1].clone()]
}

/// Orbit of `quad` under the group generated by [`sigma1`] and [`tau`],
/// listed in breadth-first discovery order starting with `quad` itself.
pub fn weyl_orbit<T: Clone + PartialEq>(quad: &[T; 4]) -> Vec<[T; 4]> {
    let mut orbit = vec![quad.clone()];
    let mut frontier = 0;
    while frontier < orbit.len() {
        let cur = orbit[frontier].clone();
        frontier += 1;
        for next in [sigma1(&cur), tau(&cur)] {
            if !orbit.contains(&next) {
                orbit.push(next);
            }
        }
    }
    orbit
}

/// The eight group elements as permutations of positions, found by closing
/// the generators. Useful for checking the group order.
pub fn weyl_group_elements() -> Vec<[usize; 4]> {
    weyl_orbit(&[0usize, 1, 2, 3])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_has_order_eight() {
        assert_eq!(weyl_group_elements().len(), 8);
    }

    #[test]
    fn generators_are_involutions() {
        let q = ['a', 'b', 'c', 'd'];
        assert_eq!(sigma1(&sigma1(&q)), q);
        assert_eq!(tau(&tau(&q)), q);
    }

    #[test]
    fn fixed_point_orbit() {
        assert_eq!(weyl_orbit(&['a'; 4]).len(), 1);
    }

    #[test]
    fn abab_has_orbit_four() {
        let orbit = weyl_orbit(&['a', 'b', 'a', 'b']);
        assert_eq!(orbit.len(), 4);
        for t in [
            ['a', 'b', 'a', 'b'],
            ['b', 'a', 'a', 'b'],
            ['a', 'b', 'b', 'a'],
            ['b', 'a', 'b', 'a'],
        ] {
            assert!(orbit.contains(&t));
        }
    }

    #[test]
    fn orbit_is_closed_and_idempotent() {
        let orbit = weyl_orbit(&[1, 2, 3, 4]);
        for t in &orbit {
            let again = weyl_orbit(t);
            assert_eq!(again.len(), orbit.len());
            assert!(again.iter().all(|x| orbit.contains(x)));
        }
    }
}
