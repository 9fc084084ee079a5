//! The map `beta: GL2 x GL2 -> GSO(4)`, `X -> tg1 X g2`, and the orthogonal
//! similitude group of `B = I4` over F_q.
//!
//! `beta(g1, g2)` scales `det X` by `det g1 det g2`, so it is a similitude of
//! the determinant form on `M2`, whose polarization is
//! `<X, Y> = (x11 y22 + x22 y11 - x12 y21 - x21 y12) / 2`. Matrices are written
//! in a basis of `M2` that is orthonormal for this form,
//!
//! ```text
//! F1 = I,  F2 = [[0, 1], [-1, 0]],  F3 = [[a, b], [b, -a]],  F4 = [[-b, a], [a, b]]
//! ```
//!
//! with `a^2 + b^2 = -1`, so the Gram matrix is `I4` and similitudes are the
//! matrices with `tm m = lambda I4`.

use rayon::prelude::*;

use super::field::FFScalar;
use super::matrix::{Mat2, Mat4};
use super::GroupError;

/// A 4x4 matrix over F_q together with its similitude factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimilitudeElement {
    m: Mat4,
    lambda: u8,
}

impl SimilitudeElement {
    pub fn new(m: Mat4, lambda: FFScalar) -> Result<Self, GroupError> {
        if lambda.is_zero() || lambda.modulus() != m.modulus() {
            return Err(GroupError::NotASimilitude);
        }
        if m.gram().scalar_value() != Some(lambda.value()) {
            return Err(GroupError::NotASimilitude);
        }
        Ok(SimilitudeElement {
            m,
            lambda: lambda.value() as u8,
        })
    }

    /// Reads `lambda` off the Gram matrix.
    pub fn from_matrix(m: Mat4) -> Result<Self, GroupError> {
        match m.gram().scalar_value() {
            Some(l) if l != 0 => Ok(SimilitudeElement { m, lambda: l as u8 }),
            _ => Err(GroupError::NotASimilitude),
        }
    }

    pub fn identity(q: u32) -> Result<Self, GroupError> {
        Self::from_matrix(Mat4::identity(q)?)
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    pub fn lambda(&self) -> FFScalar {
        FFScalar::reduce(self.lambda as i64, self.m.modulus())
    }

    pub fn det(&self) -> FFScalar {
        self.m.det()
    }

    pub fn mul(&self, other: &SimilitudeElement) -> SimilitudeElement {
        SimilitudeElement {
            m: self.m.mul(&other.m),
            lambda: (self.lambda() * other.lambda()).value() as u8,
        }
    }

    pub fn key(&self) -> u64 {
        self.m.key()
    }
}

/// `det g = lambda(g)^2`.
pub fn is_gso(e: &SimilitudeElement) -> bool {
    e.det() == e.lambda() * e.lambda()
}

/// Orthonormal basis of `(M2, det)` over F_q.
#[derive(Clone, Debug)]
pub struct DetFormBasis {
    q: u32,
    basis: [[i64; 4]; 4],
    half: i64,
}

impl DetFormBasis {
    pub fn new(q: u32) -> Result<Self, GroupError> {
        if !super::field::is_odd_prime(q) || q >= 256 {
            return Err(GroupError::UnsupportedModulus(q));
        }
        let n = q as i64;
        // every element of F_q is a sum of two squares
        let (a, b) = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| (a * a + b * b + 1) % n == 0)
            .expect("-1 is a sum of two squares mod an odd prime");
        let half = (n + 1) / 2;
        Ok(DetFormBasis {
            q,
            basis: [[1, 0, 0, 1], [0, 1, -1, 0], [a, b, b, -a], [-b, a, a, b]],
            half,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    pub fn basis(&self) -> [Mat2; 4] {
        self.basis.map(|f| Mat2::from_raw(f, self.q))
    }

    fn pairing(&self, x: &[i64; 4], y: &[i64; 4]) -> i64 {
        let n = self.q as i64;
        let s = x[0] * y[3] + x[3] * y[0] - x[1] * y[2] - x[2] * y[1];
        (s.rem_euclid(n) * self.half) % n
    }

    /// Matrix of `X -> tg1 X g2` in the orthonormal basis, with
    /// `lambda = det g1 det g2`.
    pub fn beta(&self, g1: &Mat2, g2: &Mat2) -> Result<SimilitudeElement, GroupError> {
        if g1.modulus() != self.q || g2.modulus() != self.q {
            return Err(GroupError::UnsupportedModulus(g1.modulus()));
        }
        if !g1.is_invertible() || !g2.is_invertible() {
            return Err(GroupError::Singular);
        }
        Ok(self.beta_unchecked(g1, g2))
    }

    pub(crate) fn beta_unchecked(&self, g1: &Mat2, g2: &Mat2) -> SimilitudeElement {
        let t1 = g1.transpose();
        let mut a = [0i64; 16];
        for (j, f) in self.basis.iter().enumerate() {
            let image = t1.mul(&Mat2::from_raw(*f, self.q)).mul(g2).raw();
            for (i, e) in self.basis.iter().enumerate() {
                a[4 * i + j] = self.pairing(e, &image);
            }
        }
        let lambda = g1.det() * g2.det();
        SimilitudeElement {
            m: Mat4::from_raw(a, self.q),
            lambda: lambda.value() as u8,
        }
    }
}

/// `beta(g1, g2)`; errors on singular input.
pub fn beta_map(g1: &Mat2, g2: &Mat2) -> Result<SimilitudeElement, GroupError> {
    DetFormBasis::new(g1.modulus())?.beta(g1, g2)
}

fn vectors_with_norm(q: u32, norm: i64) -> Vec<[i64; 4]> {
    let n = q as i64;
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if (a * a + b * b + c * c + d * d - norm).rem_euclid(n) == 0 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn dot(u: &[i64; 4], v: &[i64; 4], q: i64) -> i64 {
    (u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]).rem_euclid(q)
}

fn columns_to_matrix(cols: &[[i64; 4]; 4], q: u32) -> Mat4 {
    let mut a = [0i64; 16];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..4 {
            a[4 * i + j] = col[i];
        }
    }
    Mat4::from_raw(a, q)
}

/// GO(4, F_q) for `B = I4`, `q` in {3, 5, 7}.
///
/// Order: `lambda` ascending, then columns lexicographically (first column
/// outermost). The first column is scanned in parallel; the result does not
/// depend on the partitioning.
pub fn enumerate_go4(q: u32) -> Result<Vec<SimilitudeElement>, GroupError> {
    if ![3, 5, 7].contains(&q) {
        return Err(GroupError::UnsupportedModulus(q));
    }
    let n = q as i64;
    let mut out = Vec::new();
    for lambda in 1..n {
        let shell = vectors_with_norm(q, lambda);
        let per_first: Vec<Vec<SimilitudeElement>> = shell
            .par_iter()
            .map(|c1| {
                let mut found = Vec::new();
                for c2 in shell.iter().filter(|v| dot(c1, v, n) == 0) {
                    for c3 in shell
                        .iter()
                        .filter(|v| dot(c1, v, n) == 0 && dot(c2, v, n) == 0)
                    {
                        for c4 in shell.iter().filter(|v| {
                            dot(c1, v, n) == 0 && dot(c2, v, n) == 0 && dot(c3, v, n) == 0
                        }) {
                            found.push(SimilitudeElement {
                                m: columns_to_matrix(&[*c1, *c2, *c3, *c4], q),
                                lambda: lambda as u8,
                            });
                        }
                    }
                }
                found
            })
            .collect();
        out.extend(per_first.into_iter().flatten());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::similitude::matrix::gl2;

    #[test]
    fn basis_is_orthonormal() {
        for q in [3u32, 5, 7, 11, 13] {
            let b = DetFormBasis::new(q).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    let want = if i == j { 1 } else { 0 };
                    assert_eq!(
                        b.pairing(&b.basis[i], &b.basis[j]),
                        want,
                        "q={q} i={i} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn beta_identity_and_kernel() {
        for q in [3u32, 5, 7] {
            let id = Mat2::identity(q).unwrap();
            let e = beta_map(&id, &id).unwrap();
            assert_eq!(e.matrix(), &Mat4::identity(q).unwrap());
            assert_eq!(e.lambda().value(), 1);
            for c in 1..q as i64 {
                let cinv = FFScalar::new(c, q).unwrap().inv().unwrap().value() as i64;
                let e = beta_map(
                    &Mat2::scalar(c, q).unwrap(),
                    &Mat2::scalar(cinv, q).unwrap(),
                )
                .unwrap();
                assert_eq!(e.matrix(), &Mat4::identity(q).unwrap());
                assert_eq!(e.lambda().value(), 1);
            }
        }
    }

    #[test]
    fn beta_output_is_gso_with_squared_det() {
        let q = 5;
        let basis = DetFormBasis::new(q).unwrap();
        let g = gl2(q);
        for (k, g1) in g.iter().enumerate().step_by(37) {
            let g2 = &g[(k * 13 + 5) % g.len()];
            let e = basis.beta(g1, g2).unwrap();
            assert!(SimilitudeElement::new(*e.matrix(), e.lambda()).is_ok());
            let l = g1.det() * g2.det();
            assert_eq!(e.lambda(), l);
            assert_eq!(e.det(), l * l);
            assert!(is_gso(&e));
        }
    }

    #[test]
    fn beta_rejects_singular() {
        let s = Mat2::new([[1, 2], [2, 4]], 7).unwrap();
        let id = Mat2::identity(7).unwrap();
        assert_eq!(beta_map(&s, &id), Err(GroupError::Singular));
    }

    #[test]
    fn reflection_is_not_gso() {
        let r = SimilitudeElement::from_matrix(Mat4::diag([1, 1, 1, -1], 5).unwrap()).unwrap();
        assert_eq!(r.lambda().value(), 1);
        assert_eq!(r.det().value(), 4);
        assert!(!is_gso(&r));
        assert!(is_gso(&SimilitudeElement::identity(5).unwrap()));
    }

    #[test]
    fn go4_over_f3() {
        let all = enumerate_go4(3).unwrap();
        assert_eq!(all.len(), 2304);
        assert!(all.contains(&SimilitudeElement::identity(3).unwrap()));
        for e in &all {
            assert!(SimilitudeElement::new(*e.matrix(), e.lambda()).is_ok());
        }
        let keys: std::collections::HashSet<u64> = all.iter().map(|e| e.key()).collect();
        assert_eq!(keys.len(), all.len());
        assert_eq!(all.iter().filter(|e| is_gso(e)).count(), 1152);
    }

    #[test]
    fn go4_rejects_unsupported_q() {
        assert!(enumerate_go4(4).is_err());
        assert!(enumerate_go4(11).is_err());
    }

    #[test]
    fn non_similitude_rejected() {
        let m = Mat4::diag([1, 2, 1, 1], 5).unwrap();
        assert_eq!(
            SimilitudeElement::from_matrix(m),
            Err(GroupError::NotASimilitude)
        );
        let id = Mat4::identity(5).unwrap();
        assert!(SimilitudeElement::new(id, FFScalar::new(2, 5).unwrap()).is_err());
    }
}
