//! Which induction shapes `(n_i, r_i)` a transfer from GSp(4) can have.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::IsobaricError;
use crate::satake::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeRejection {
    /// `sum n_i r_i != 0`.
    NotUnitary,
    /// Last block is a character: twisting by its dual gives a pole at
    /// `1 - r_t` on one side and an entire function on the other.
    TwistPole,
    /// Last block has degree 3; passing to contragredients turns it into the
    /// degree-1 case.
    ContragredientReduction,
    /// Last block has degree 2 but a nonzero exponent.
    NonzeroExponent,
    /// `(1, 1, 2)`: all exponents vanish, then twisting by the first block
    /// yields a pole against an entire function.
    ThreeConstituents,
}

impl fmt::Display for ShapeRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeRejection::NotUnitary => "sum of n_i r_i is nonzero",
            ShapeRejection::TwistPole => "last block has degree 1 (twist-pole contradiction)",
            ShapeRejection::ContragredientReduction => {
                "last block has degree 3 (contragredient reduces to degree 1)"
            }
            ShapeRejection::NonzeroExponent => "degree-2 last block with nonzero exponent",
            ShapeRejection::ThreeConstituents => "three blocks (1,1,2) force a pole contradiction",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "snake_case")]
pub enum ShapeVerdict {
    Admissible,
    Rejected(ShapeRejection),
}

/// Admissible iff the shape is `(4; 0)` or `(2, 2; 0, 0)`.
///
/// Blocks are ordered by descending exponent; ties keep the caller's order.
pub fn validate_transfer_shape(shape: &[(usize, Rational)]) -> Result<ShapeVerdict, IsobaricError> {
    if shape.is_empty() || shape.iter().any(|&(n, _)| !(1..=4).contains(&n)) {
        return Err(IsobaricError::Malformed(format!(
            "block degrees must lie in 1..=4: {shape:?}"
        )));
    }
    let total: usize = shape.iter().map(|&(n, _)| n).sum();
    if total != 4 {
        return Err(IsobaricError::Malformed(format!(
            "block degrees sum to {total}, not 4"
        )));
    }
    let weighted = shape
        .iter()
        .fold(Rational::zero(), |acc, &(n, r)| acc + r * n as i64);
    if !weighted.is_zero() {
        return Ok(ShapeVerdict::Rejected(ShapeRejection::NotUnitary));
    }
    let mut sorted = shape.to_vec();
    sorted.sort_by_key(|t| std::cmp::Reverse(t.1));
    let (n_t, r_t) = *sorted.last().unwrap();
    let verdict = match n_t {
        1 => ShapeVerdict::Rejected(ShapeRejection::TwistPole),
        3 => ShapeVerdict::Rejected(ShapeRejection::ContragredientReduction),
        2 if !r_t.is_zero() => ShapeVerdict::Rejected(ShapeRejection::NonzeroExponent),
        2 if sorted.len() == 3 => ShapeVerdict::Rejected(ShapeRejection::ThreeConstituents),
        // (2, 2) with r_2 = 0 forces r_1 = 0; (4) forces r_1 = 0
        _ => ShapeVerdict::Admissible,
    };
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn z() -> Rational {
        Rational::zero()
    }

    #[test]
    fn admissible_shapes() {
        assert_eq!(
            validate_transfer_shape(&[(4, z())]).unwrap(),
            ShapeVerdict::Admissible
        );
        assert_eq!(
            validate_transfer_shape(&[(2, z()), (2, z())]).unwrap(),
            ShapeVerdict::Admissible
        );
    }

    #[test]
    fn rejected_shapes() {
        use ShapeRejection::*;
        let v = |s: &[(usize, Rational)]| validate_transfer_shape(s).unwrap();
        assert_eq!(
            v(&[(1, r(3, 4)), (3, r(-1, 4))]),
            ShapeVerdict::Rejected(ContragredientReduction)
        );
        assert_eq!(
            v(&[(3, r(1, 4)), (1, r(-3, 4))]),
            ShapeVerdict::Rejected(TwistPole)
        );
        assert_eq!(
            v(&[(2, r(1, 2)), (2, r(-1, 2))]),
            ShapeVerdict::Rejected(NonzeroExponent)
        );
        assert_eq!(
            v(&[(1, z()), (1, z()), (2, z())]),
            ShapeVerdict::Rejected(ThreeConstituents)
        );
        assert_eq!(
            v(&[(1, r(1, 2)), (1, r(-1, 2)), (2, z())]),
            ShapeVerdict::Rejected(TwistPole)
        );
        assert_eq!(
            v(&[(1, z()), (1, z()), (1, z()), (1, z())]),
            ShapeVerdict::Rejected(TwistPole)
        );
        assert_eq!(v(&[(4, r(1, 2))]), ShapeVerdict::Rejected(NotUnitary));
        assert_eq!(
            v(&[(2, r(1, 2)), (2, z())]),
            ShapeVerdict::Rejected(NotUnitary)
        );
    }

    #[test]
    fn input_order_is_normalized() {
        let v = validate_transfer_shape(&[(3, r(-1, 4)), (1, r(3, 4))]).unwrap();
        assert_eq!(
            v,
            ShapeVerdict::Rejected(ShapeRejection::ContragredientReduction)
        );
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            validate_transfer_shape(&[(2, z())]),
            Err(IsobaricError::Malformed(_))
        ));
        assert!(matches!(
            validate_transfer_shape(&[]),
            Err(IsobaricError::Malformed(_))
        ));
        assert!(matches!(
            validate_transfer_shape(&[(5, z())]),
            Err(IsobaricError::Malformed(_))
        ));
    }
}
