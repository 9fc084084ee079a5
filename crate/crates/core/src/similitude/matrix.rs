//! Small matrices over F_q, stored row-major as residues.

use super::field::{is_odd_prime, FFScalar};
use super::GroupError;

#[inline]
fn md(x: i64, q: u32) -> u8 {
    x.rem_euclid(q as i64) as u8
}

fn check_modulus(q: u32) -> Result<(), GroupError> {
    if is_odd_prime(q) && q < 256 {
        Ok(())
    } else {
        Err(GroupError::UnsupportedModulus(q))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    q: u8,
    a: [u8; 4],
}

impl Mat2 {
    pub fn new(entries: [[i64; 2]; 2], q: u32) -> Result<Self, GroupError> {
        check_modulus(q)?;
        Ok(Self::from_raw(
            [entries[0][0], entries[0][1], entries[1][0], entries[1][1]],
            q,
        ))
    }

    pub(crate) fn from_raw(a: [i64; 4], q: u32) -> Self {
        Mat2 {
            q: q as u8,
            a: a.map(|x| md(x, q)),
        }
    }

    pub fn identity(q: u32) -> Result<Self, GroupError> {
        Self::new([[1, 0], [0, 1]], q)
    }

    pub fn scalar(c: i64, q: u32) -> Result<Self, GroupError> {
        Self::new([[c, 0], [0, c]], q)
    }

    pub fn modulus(&self) -> u32 {
        self.q as u32
    }

    pub fn entry(&self, i: usize, j: usize) -> FFScalar {
        FFScalar::reduce(self.a[2 * i + j] as i64, self.q as u32)
    }

    pub(crate) fn raw(&self) -> [i64; 4] {
        self.a.map(|x| x as i64)
    }

    pub fn det(&self) -> FFScalar {
        let [a, b, c, d] = self.raw();
        FFScalar::reduce(a * d - b * c, self.q as u32)
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn transpose(&self) -> Mat2 {
        let [a, b, c, d] = self.a;
        Mat2 {
            q: self.q,
            a: [a, c, b, d],
        }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = self.raw();
        let [e, f, g, h] = o.raw();
        Mat2::from_raw(
            [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
            self.q as u32,
        )
    }

    /// Scalar matrix value `c` if `self = c I`.
    pub fn scalar_value(&self) -> Option<u32> {
        let [a, b, c, d] = self.a;
        (b == 0 && c == 0 && a == d).then_some(a as u32)
    }
}

/// All of GL(2, F_q) in lexicographic order of `(a, b, c, d)`.
pub fn gl2(q: u32) -> Vec<Mat2> {
    let n = q as i64;
    let mut out = Vec::with_capacity(((q * q - 1) * (q * q - q)) as usize);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if (a * d - b * c).rem_euclid(n) != 0 {
                        out.push(Mat2::from_raw([a, b, c, d], q));
                    }
                }
            }
        }
    }
    out
}

/// Order of GL(2, F_q).
pub fn gl2_order(q: u64) -> u64 {
    (q * q - 1) * (q * q - q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat4 {
    q: u8,
    a: [u8; 16],
}

impl Mat4 {
    pub fn new(rows: [[i64; 4]; 4], q: u32) -> Result<Self, GroupError> {
        check_modulus(q)?;
        let mut a = [0i64; 16];
        for i in 0..4 {
            for j in 0..4 {
                a[4 * i + j] = rows[i][j];
            }
        }
        Ok(Self::from_raw(a, q))
    }

    pub(crate) fn from_raw(a: [i64; 16], q: u32) -> Self {
        Mat4 {
            q: q as u8,
            a: a.map(|x| md(x, q)),
        }
    }

    pub fn identity(q: u32) -> Result<Self, GroupError> {
        Self::diag([1, 1, 1, 1], q)
    }

    pub fn diag(d: [i64; 4], q: u32) -> Result<Self, GroupError> {
        let mut rows = [[0i64; 4]; 4];
        for i in 0..4 {
            rows[i][i] = d[i];
        }
        Self::new(rows, q)
    }

    pub fn modulus(&self) -> u32 {
        self.q as u32
    }

    pub fn entry(&self, i: usize, j: usize) -> FFScalar {
        FFScalar::reduce(self.a[4 * i + j] as i64, self.q as u32)
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> i64 {
        self.a[4 * i + j] as i64
    }

    pub fn transpose(&self) -> Mat4 {
        let mut a = [0u8; 16];
        for i in 0..4 {
            for j in 0..4 {
                a[4 * j + i] = self.a[4 * i + j];
            }
        }
        Mat4 { q: self.q, a }
    }

    pub fn mul(&self, o: &Mat4) -> Mat4 {
        let mut a = [0i64; 16];
        for i in 0..4 {
            for j in 0..4 {
                a[4 * i + j] = (0..4).map(|k| self.at(i, k) * o.at(k, j)).sum();
            }
        }
        Mat4::from_raw(a, self.q as u32)
    }

    /// `tm * m`.
    pub fn gram(&self) -> Mat4 {
        self.transpose().mul(self)
    }

    pub fn det(&self) -> FFScalar {
        let q = self.q as i64;
        let mut m: [[i64; 4]; 4] = [[0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = self.at(i, j);
            }
        }
        let mut det = 1i64;
        for col in 0..4 {
            let Some(piv) = (col..4).find(|&r| m[r][col] != 0) else {
                return FFScalar::reduce(0, q as u32);
            };
            if piv != col {
                m.swap(piv, col);
                det = -det;
            }
            det = det * m[col][col] % q;
            let inv = FFScalar::reduce(m[col][col], q as u32)
                .inv()
                .expect("nonzero pivot")
                .value() as i64;
            for r in col + 1..4 {
                let f = m[r][col] * inv % q;
                if f != 0 {
                    for c in col..4 {
                        m[r][c] = (m[r][c] - f * m[col][c]).rem_euclid(q);
                    }
                }
            }
        }
        FFScalar::reduce(det, q as u32)
    }

    /// `Some(c)` when the matrix is `c I`.
    pub fn scalar_value(&self) -> Option<u32> {
        let c = self.a[0];
        (0..4)
            .all(|i| (0..4).all(|j| self.a[4 * i + j] == if i == j { c } else { 0 }))
            .then_some(c as u32)
    }

    /// Injective base-q encoding of the entries, for set comparisons.
    pub fn key(&self) -> u64 {
        self.a
            .iter()
            .fold(0u64, |acc, &x| acc * self.q as u64 + x as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_orders() {
        for q in [3u32, 5, 7] {
            assert_eq!(gl2(q).len() as u64, gl2_order(q as u64));
        }
        assert_eq!(gl2_order(3), 48);
        assert_eq!(gl2_order(5), 480);
    }

    #[test]
    fn det4_by_elimination_matches_permutation_sum() {
        let m = Mat4::new([[1, 2, 0, 3], [4, 1, 1, 0], [0, 2, 3, 1], [2, 0, 1, 4]], 7).unwrap();
        // Leibniz over all 24 permutations
        let mut total = 0i64;
        let perms = permutations4();
        for (p, sign) in perms {
            let mut t = sign;
            for i in 0..4 {
                t *= m.entry(i, p[i]).value() as i64;
            }
            total += t;
        }
        assert_eq!(m.det().value() as i64, total.rem_euclid(7));
    }

    fn permutations4() -> Vec<([usize; 4], i64)> {
        let mut out = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let p = [a, b, c, d];
                        let mut seen = [false; 4];
                        if p.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                            let mut inv = 0;
                            for i in 0..4 {
                                for j in i + 1..4 {
                                    if p[i] > p[j] {
                                        inv += 1;
                                    }
                                }
                            }
                            out.push((p, if inv % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn keys_are_injective_on_small_sample() {
        let a = Mat4::diag([1, 2, 3, 4], 5).unwrap();
        let b = Mat4::diag([1, 2, 4, 3], 5).unwrap();
        assert_ne!(a.key(), b.key());
        assert_eq!(a.transpose().key(), a.key());
    }
}
