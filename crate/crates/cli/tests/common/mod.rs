//! Fixtures shared by the cli integration suites.

#![allow(dead_code)]

use std::path::PathBuf;

use homly_cli::parse_algebra;
use homly_core::algebra::{Algebra, BinaryTable};
use homly_core::linalg::{LinearMap, Vector};
use homly_core::rational::Rational;

pub fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

pub fn read_catalog(name: &str) -> String {
    let path = catalog_dir().join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn load_catalog(name: &str) -> Algebra {
    parse_algebra(&read_catalog(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Cross-product bracket on R^3, independently rebuilt for comparison
/// against the shipped catalog file.
pub fn so3() -> Algebra {
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

/// Commutator bracket of the imaginary octonions over the Fano lines
/// (i, i+1, i+3) mod 7.
pub fn octonion_bracket() -> Algebra {
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

pub fn cyclic3() -> LinearMap {
    LinearMap::permutation(&[1, 2, 0])
}

/// so3 with the bracket of e1 and e2 bent to e1 + e3: still skew, but the
/// Malcev-family identities all fail on it.
pub fn perturbed_so3() -> Algebra {
    let a = so3();
    let mut table = a.binary().unwrap().clone();
    let bent = Vector::basis(3, 0).add(&Vector::basis(3, 2));
    table.set(0, 1, bent.clone());
    table.set(1, 0, bent.neg());
    Algebra::new("so3-perturbed", 3, Some(table), None).unwrap()
}
