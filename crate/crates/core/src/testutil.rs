//! Catalog fixtures shared across unit tests.

use crate::algebra::{Algebra, BinaryTable};
use crate::linalg::{LinearMap, Vector};
use crate::rational::Rational;

/// Cross-product bracket on R^3: e1*e2 = e3, e2*e3 = e1, e3*e1 = e2, skew.
pub(crate) fn so3() -> Algebra {
    let table = BinaryTable::from_fn(3, |i, j| {
        if i == j {
            return Vector::zero(3);
        }
        let k = 3 - i - j;
        let sign = if (j + 3 - i) % 3 == 1 { 1 } else { -1 };
        Vector::basis(3, k).scale(&Rational::from(sign))
    });
    Algebra::new("so3", 3, Some(table), None).unwrap()
}

/// Commutator bracket of the imaginary octonions: for each oriented line
/// (a, b, c) of the Fano plane below, e_a * e_b = 2 e_c and cyclically,
/// skew otherwise. The standard non-Lie Malcev algebra.
pub(crate) fn octonion_bracket() -> Algebra {
    let lines = [
        (0, 1, 3),
        (1, 2, 4),
        (2, 3, 5),
        (3, 4, 6),
        (4, 5, 0),
        (5, 6, 1),
        (6, 0, 2),
    ];
    let mut table = BinaryTable::zero(7);
    for (a, b, c) in lines {
        for ((x, y), z) in [((a, b), c), ((b, c), a), ((c, a), b)] {
            table.set(x, y, Vector::basis(7, z).scale(&Rational::from(2)));
            table.set(y, x, Vector::basis(7, z).scale(&Rational::from(-2)));
        }
    }
    Algebra::new("octonion-bracket", 7, Some(table), None).unwrap()
}

/// The basis rotation e1 -> e2 -> e3 -> e1, an automorphism of `so3`.
pub(crate) fn cyclic3() -> LinearMap {
    LinearMap::permutation(&[1, 2, 0])
}
