//! Structure-constant models of binary-ternary Hom-algebras.
//!
//! A `BinaryTable` stores the products of basis pairs, a `TernaryTable` the
//! products of basis triples; both extend multilinearly to arbitrary
//! vectors. An `Algebra` bundles the two optional tables with a twisting
//! map. An absent table is semantically the zero operation.
//!
//! All identities checked by this library are multilinear in their element
//! variables once the twisting map is fixed, so exhaustive verification
//! over basis tuples is a complete and exact decision procedure.

use std::fmt;

use crate::error::Error;
use crate::linalg::{LinearMap, Vector};
use crate::rational::Rational;
use crate::report::{AxiomCheck, CheckOptions, CheckReport};

/// Structure constants of a bilinear operation: `product(i, j)` is the
/// coordinate vector of `e_i * e_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryTable {
    dim: usize,
    products: Vec<Vector>, // products[i * dim + j]
}

impl BinaryTable {
    pub fn zero(dim: usize) -> Self {
        BinaryTable {
            dim,
            products: vec![Vector::zero(dim); dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                debug_assert_eq!(v.dim(), dim);
                products.push(v);
            }
        }
        BinaryTable { dim, products }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.products[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.dim(), self.dim);
        self.products[i * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.products.iter().all(Vector::is_zero)
    }

    /// Entrywise antisymmetry `e_i * e_j = -(e_j * e_i)`.
    pub fn is_skew(&self) -> bool {
        for i in 0..self.dim {
            for j in i..self.dim {
                if !self.product(i, j).add(self.product(j, i)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Bilinear extension of the table.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        debug_assert_eq!(x.dim(), self.dim);
        debug_assert_eq!(y.dim(), self.dim);
        let mut out = Vector::zero(self.dim);
        for i in 0..self.dim {
            let xi = &x[i];
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let yj = &y[j];
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled(&(xi * yj), self.product(i, j));
            }
        }
        out
    }

    /// Pre-composes the chosen slots with linear maps:
    /// the result's `(i, j)` entry is `(m1 e_i) * (m2 e_j)`.
    pub fn pull(&self, m1: Option<&LinearMap>, m2: Option<&LinearMap>) -> BinaryTable {
        let mut out = self.clone();
        if let Some(m) = m1 {
            if !m.is_identity() {
                out = out.pull_slot(0, m);
            }
        }
        if let Some(m) = m2 {
            if !m.is_identity() {
                out = out.pull_slot(1, m);
            }
        }
        out
    }

    fn pull_slot(&self, slot: usize, m: &LinearMap) -> BinaryTable {
        let n = self.dim;
        BinaryTable::from_fn(n, |i, j| {
            let moved = if slot == 0 { i } else { j };
            let mut acc = Vector::zero(n);
            for p in 0..n {
                let coeff = m.entry(p, moved);
                if coeff.is_zero() {
                    continue;
                }
                let src = if slot == 0 {
                    self.product(p, j)
                } else {
                    self.product(i, p)
                };
                acc.add_scaled(coeff, src);
            }
            acc
        })
    }

    /// Post-composes with a linear map: entry `(i, j)` becomes `m(e_i * e_j)`.
    pub fn map_outputs(&self, m: &LinearMap) -> BinaryTable {
        if m.is_identity() {
            return self.clone();
        }
        BinaryTable::from_fn(self.dim, |i, j| {
            m.apply(self.product(i, j)).expect("table dims match map")
        })
    }
}

impl fmt::Debug for BinaryTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryTable[dim {}]", self.dim)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.product(i, j);
                if !p.is_zero() {
                    writeln!(f, "  ({i},{j}) -> {p:?}")?;
                }
            }
        }
        Ok(())
    }
}

/// Structure constants of a trilinear operation.
#[derive(Clone, PartialEq, Eq)]
pub struct TernaryTable {
    dim: usize,
    products: Vec<Vector>, // products[(i * dim + j) * dim + k]
}

impl TernaryTable {
    pub fn zero(dim: usize) -> Self {
        TernaryTable {
            dim,
            products: vec![Vector::zero(dim); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Vector) -> Self {
        let mut products = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = f(i, j, k);
                    debug_assert_eq!(v.dim(), dim);
                    products.push(v);
                }
            }
        }
        TernaryTable { dim, products }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.products[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Vector) {
        assert_eq!(v.dim(), self.dim);
        self.products[(i * self.dim + j) * self.dim + k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.products.iter().all(Vector::is_zero)
    }

    /// Trilinear extension of the table.
    pub fn eval(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        debug_assert_eq!(x.dim(), self.dim);
        let mut out = Vector::zero(self.dim);
        for i in 0..self.dim {
            let xi = &x[i];
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let yj = &y[j];
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for k in 0..self.dim {
                    let zk = &z[k];
                    if zk.is_zero() {
                        continue;
                    }
                    out.add_scaled(&(&xy * zk), self.product(i, j, k));
                }
            }
        }
        out
    }

    /// Pre-composes the chosen slots with linear maps, one contraction per
    /// slot; `None` leaves a slot untouched.
    pub fn pull(
        &self,
        m1: Option<&LinearMap>,
        m2: Option<&LinearMap>,
        m3: Option<&LinearMap>,
    ) -> TernaryTable {
        let mut out = self.clone();
        for (slot, m) in [m1, m2, m3].into_iter().enumerate() {
            if let Some(m) = m {
                if !m.is_identity() {
                    out = out.pull_slot(slot, m);
                }
            }
        }
        out
    }

    fn pull_slot(&self, slot: usize, m: &LinearMap) -> TernaryTable {
        let n = self.dim;
        TernaryTable::from_fn(n, |i, j, k| {
            let moved = [i, j, k][slot];
            let mut acc = Vector::zero(n);
            for p in 0..n {
                let coeff = m.entry(p, moved);
                if coeff.is_zero() {
                    continue;
                }
                let src = match slot {
                    0 => self.product(p, j, k),
                    1 => self.product(i, p, k),
                    _ => self.product(i, j, p),
                };
                acc.add_scaled(coeff, src);
            }
            acc
        })
    }

    pub fn map_outputs(&self, m: &LinearMap) -> TernaryTable {
        if m.is_identity() {
            return self.clone();
        }
        TernaryTable::from_fn(self.dim, |i, j, k| {
            m.apply(self.product(i, j, k))
                .expect("table dims match map")
        })
    }
}

impl fmt::Debug for TernaryTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TernaryTable[dim {}]", self.dim)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let p = self.product(i, j, k);
                    if !p.is_zero() {
                        writeln!(f, "  ({i},{j},{k}) -> {p:?}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A finite-dimensional binary-ternary Hom-algebra presented by structure
/// constants on a fixed basis, together with its twisting map.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    dim: usize,
    basis: Vec<String>,
    binary: Option<BinaryTable>,
    ternary: Option<TernaryTable>,
    alpha: LinearMap,
}

impl Algebra {
    /// Builds an algebra with default basis labels `e1..en` and the
    /// identity twisting map.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        binary: Option<BinaryTable>,
        ternary: Option<TernaryTable>,
    ) -> Result<Self, Error> {
        if let Some(t) = &binary {
            if t.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: t.dim(),
                });
            }
        }
        if let Some(t) = &ternary {
            if t.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: t.dim(),
                });
            }
        }
        Ok(Algebra {
            name: name.into(),
            dim,
            basis: (1..=dim).map(|i| format!("e{i}")).collect(),
            binary,
            ternary,
            alpha: LinearMap::identity(dim),
        })
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<Self, Error> {
        if basis.len() != self.dim {
            return Err(Error::BadBasis);
        }
        for (i, a) in basis.iter().enumerate() {
            if basis[..i].contains(a) {
                return Err(Error::BadBasis);
            }
        }
        self.basis = basis;
        Ok(self)
    }

    pub fn with_alpha(mut self, alpha: LinearMap) -> Result<Self, Error> {
        if alpha.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: alpha.dim(),
            });
        }
        self.alpha = alpha;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn binary(&self) -> Option<&BinaryTable> {
        self.binary.as_ref()
    }

    pub fn ternary(&self) -> Option<&TernaryTable> {
        self.ternary.as_ref()
    }

    /// The binary table, or a suite-inapplicable error naming the caller.
    pub fn require_binary(&self, context: &'static str) -> Result<&BinaryTable, Error> {
        self.binary.as_ref().ok_or(Error::MissingTable {
            context,
            table: "binary",
        })
    }

    /// The ternary table, or a suite-inapplicable error naming the caller.
    pub fn require_ternary(&self, context: &'static str) -> Result<&TernaryTable, Error> {
        self.ternary.as_ref().ok_or(Error::MissingTable {
            context,
            table: "ternary",
        })
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.dim, i)
    }

    fn check_element(&self, x: &Vector) -> Result<(), Error> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    /// Binary product of two elements; an absent table is the zero operation.
    pub fn eval_binary(&self, x: &Vector, y: &Vector) -> Result<Vector, Error> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(match &self.binary {
            Some(t) => t.eval(x, y),
            None => Vector::zero(self.dim),
        })
    }

    /// Ternary product of three elements; an absent table is the zero operation.
    pub fn eval_ternary(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        self.check_element(x)?;
        self.check_element(y)?;
        self.check_element(z)?;
        Ok(match &self.ternary {
            Some(t) => t.eval(x, y, z),
            None => Vector::zero(self.dim),
        })
    }

    /// Checks that the twisting map is an endomorphism of both operations.
    /// Bilinearity and trilinearity make basis pairs and triples sufficient.
    pub fn is_multiplicative(&self, opts: &CheckOptions) -> CheckReport {
        let verdicts = morphism_verdicts(self, &self.alpha, "mult-binary", "mult-ternary", opts);
        CheckReport::new("multiplicativity", verdicts)
    }
}

/// Shared sweep behind the multiplicativity and endomorphism checks:
/// `m(e_i * e_j) = m(e_i) * m(e_j)` on all pairs and the ternary analogue
/// on all triples. Absent tables skip their half with zero tuples checked.
pub(crate) fn morphism_verdicts(
    a: &Algebra,
    m: &LinearMap,
    binary_id: &str,
    ternary_id: &str,
    opts: &CheckOptions,
) -> Vec<crate::report::AxiomVerdict> {
    let n = a.dim();
    let mut bin = AxiomCheck::new(binary_id, opts);
    if let Some(c) = a.binary() {
        let lhs = c.map_outputs(m);
        let rhs = c.pull(Some(m), Some(m));
        for i in 0..n {
            for j in 0..n {
                bin.record(&[i, j], lhs.product(i, j).sub(rhs.product(i, j)));
            }
        }
    }
    let mut ter = AxiomCheck::new(ternary_id, opts);
    if let Some(d) = a.ternary() {
        let lhs = d.map_outputs(m);
        let rhs = d.pull(Some(m), Some(m), Some(m));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    ter.record(&[i, j, k], lhs.product(i, j, k).sub(rhs.product(i, j, k)));
                }
            }
        }
    }
    vec![bin.finish(), ter.finish()]
}

/// Structural equality: equal dimensions, entrywise-equal tables with an
/// absent table counting as zero, and equal twisting maps. Names and basis
/// labels are not compared.
pub fn algebras_equal(a: &Algebra, b: &Algebra) -> bool {
    if a.dim() != b.dim() || a.alpha() != b.alpha() {
        return false;
    }
    let bin_eq = match (a.binary(), b.binary()) {
        (Some(x), Some(y)) => x == y,
        (Some(x), None) | (None, Some(x)) => x.is_zero(),
        (None, None) => true,
    };
    if !bin_eq {
        return false;
    }
    match (a.ternary(), b.ternary()) {
        (Some(x), Some(y)) => x == y,
        (Some(x), None) | (None, Some(x)) => x.is_zero(),
        (None, None) => true,
    }
}

/// Options for `random_algebra`.
#[derive(Clone, Copy, Debug, Default)]
pub struct RandomOptions {
    /// Force the binary table antisymmetric with zero diagonal.
    pub skew_binary: bool,
    /// Also generate a ternary table.
    pub with_ternary: bool,
    /// Draw a random twisting map instead of the identity.
    pub random_alpha: bool,
}

/// Deterministic seeded algebra generator; structure constants are integers
/// in `[-3, 3]`. Fuel for property tests.
pub fn random_algebra(dim: usize, seed: u64, opts: RandomOptions) -> Algebra {
    let mut rng = SplitMix64::new(seed);
    let draw = |rng: &mut SplitMix64| Rational::from(rng.int_in(-3, 3));

    let mut binary = BinaryTable::zero(dim);
    if opts.skew_binary {
        for i in 0..dim {
            for j in (i + 1)..dim {
                let v = Vector::from_coords((0..dim).map(|_| draw(&mut rng)).collect());
                binary.set(j, i, v.neg());
                binary.set(i, j, v);
            }
        }
    } else {
        for i in 0..dim {
            for j in 0..dim {
                let v = Vector::from_coords((0..dim).map(|_| draw(&mut rng)).collect());
                binary.set(i, j, v);
            }
        }
    }

    let ternary = opts.with_ternary.then(|| {
        let mut t = TernaryTable::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = Vector::from_coords((0..dim).map(|_| draw(&mut rng)).collect());
                    t.set(i, j, k, v);
                }
            }
        }
        t
    });

    let alpha = if opts.random_alpha {
        LinearMap::from_fn(dim, |_, _| draw(&mut rng))
    } else {
        LinearMap::identity(dim)
    };

    Algebra::new(format!("random-d{dim}-s{seed}"), dim, Some(binary), ternary)
        .expect("tables built at the requested dimension")
        .with_alpha(alpha)
        .expect("alpha built at the requested dimension")
}

/// Deterministic PRNG so generated algebras are reproducible across
/// platforms and releases.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::so3;

    fn e(i: usize) -> Vector {
        Vector::basis(3, i)
    }

    #[test]
    fn so3_table_readout() {
        let a = so3();
        assert_eq!(a.eval_binary(&e(0), &e(1)).unwrap(), e(2));
        assert_eq!(a.eval_binary(&e(1), &e(2)).unwrap(), e(0));
        assert_eq!(a.eval_binary(&e(2), &e(0)).unwrap(), e(1));
        assert_eq!(a.eval_binary(&e(1), &e(0)).unwrap(), e(2).neg());
        assert!(a.binary().unwrap().is_skew());
    }

    #[test]
    fn eval_binary_bilinear() {
        let a = so3();
        // (2e1 + e2) * e2 = 2e3
        let x = Vector::from_ints(&[2, 1, 0]);
        assert_eq!(
            a.eval_binary(&x, &e(1)).unwrap(),
            e(2).scale(&Rational::from(2))
        );
    }

    #[test]
    fn eval_zero_and_absent_tables() {
        let z = Algebra::new("z", 2, None, None).unwrap();
        let x = Vector::from_ints(&[1, 2]);
        assert!(z.eval_binary(&x, &x).unwrap().is_zero());
        assert!(z.eval_ternary(&x, &x, &x).unwrap().is_zero());
    }

    #[test]
    fn eval_ternary_readout_and_trilinearity() {
        let mut t = TernaryTable::zero(3);
        t.set(0, 1, 2, Vector::basis(3, 0));
        let a = Algebra::new("t", 3, None, Some(t)).unwrap();
        assert_eq!(a.eval_ternary(&e(0), &e(1), &e(2)).unwrap(), e(0));
        let y = e(1).scale(&Rational::from(3));
        assert_eq!(
            a.eval_ternary(&e(0), &y, &e(2)).unwrap(),
            e(0).scale(&Rational::from(3))
        );
    }

    #[test]
    fn eval_dimension_mismatch() {
        let a = so3();
        let bad = Vector::zero(2);
        assert!(matches!(
            a.eval_binary(&bad, &bad),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn multiplicative_identity_always_passes() {
        let a = so3();
        assert!(a.is_multiplicative(&CheckOptions::default()).passed);
    }

    #[test]
    fn multiplicative_cyclic_rotation_passes() {
        let a = so3()
            .with_alpha(LinearMap::permutation(&[1, 2, 0]))
            .unwrap();
        assert!(a.is_multiplicative(&CheckOptions::default()).passed);
    }

    #[test]
    fn multiplicative_diagonal_fails_with_first_pair() {
        let alpha = LinearMap::from_rows(vec![
            vec![Rational::from(2), Rational::from(0), Rational::from(0)],
            vec![Rational::from(0), Rational::from(1), Rational::from(0)],
            vec![Rational::from(0), Rational::from(0), Rational::from(1)],
        ])
        .unwrap();
        let a = so3().with_alpha(alpha).unwrap();
        let report = a.is_multiplicative(&CheckOptions::default());
        assert!(!report.passed);
        // alpha(e1*e2) = e3 but alpha(e1)*alpha(e2) = 2e3
        let (axiom, tuple) = report.first_failure().unwrap();
        assert_eq!(axiom, "mult-binary");
        assert_eq!(tuple, &[0, 1]);
        let cx = &report.axiom("mult-binary").unwrap().counterexamples[0];
        assert_eq!(cx.residual, e(2).neg());
    }

    #[test]
    fn random_algebra_is_deterministic() {
        let opts = RandomOptions {
            skew_binary: true,
            with_ternary: true,
            random_alpha: true,
        };
        let a = random_algebra(3, 42, opts);
        let b = random_algebra(3, 42, opts);
        assert!(algebras_equal(&a, &b));
        let c = random_algebra(3, 43, opts);
        assert!(!algebras_equal(&a, &c));
    }

    #[test]
    fn random_skew_is_skew() {
        for seed in 0..20 {
            let a = random_algebra(
                4,
                seed,
                RandomOptions {
                    skew_binary: true,
                    ..Default::default()
                },
            );
            assert!(a.binary().unwrap().is_skew());
        }
    }

    #[test]
    fn random_dim_zero_is_empty() {
        let a = random_algebra(0, 1, RandomOptions::default());
        assert_eq!(a.dim(), 0);
        assert!(a.is_multiplicative(&CheckOptions::default()).passed);
    }

    #[test]
    fn identity_twist_is_always_multiplicative() {
        for seed in 0..20 {
            let a = random_algebra(
                3,
                seed,
                RandomOptions {
                    with_ternary: true,
                    ..Default::default()
                },
            );
            assert!(a.is_multiplicative(&CheckOptions::default()).passed);
        }
    }

    #[test]
    fn equality_treats_absent_as_zero() {
        let zero_table = Algebra::new("a", 2, Some(BinaryTable::zero(2)), None).unwrap();
        let absent = Algebra::new("b", 2, None, None).unwrap();
        assert!(algebras_equal(&zero_table, &absent));
        assert!(algebras_equal(&absent, &zero_table));

        let a = so3();
        assert!(algebras_equal(&a, &a));
        let mut flipped = a.binary().unwrap().clone();
        flipped.set(0, 1, Vector::basis(3, 2).neg());
        let b = Algebra::new("so3-flipped", 3, Some(flipped), None).unwrap();
        assert!(!algebras_equal(&a, &b));
    }

    #[test]
    fn multilinearity_on_random_algebras() {
        for seed in 0..10 {
            let a = random_algebra(
                3,
                seed,
                RandomOptions {
                    with_ternary: true,
                    ..Default::default()
                },
            );
            let s = Rational::new(2, 3).unwrap();
            let x = Vector::from_ints(&[1, -2, 3]);
            let xp = Vector::from_ints(&[0, 1, -1]);
            let y = Vector::from_ints(&[2, 0, -1]);
            let z = Vector::from_ints(&[1, 1, 1]);

            let lhs = a.eval_binary(&x.scale(&s).add(&xp), &y).unwrap();
            let rhs = a
                .eval_binary(&x, &y)
                .unwrap()
                .scale(&s)
                .add(&a.eval_binary(&xp, &y).unwrap());
            assert_eq!(lhs, rhs);

            for slot in 0..3 {
                let args = |v: &Vector| -> [Vector; 3] {
                    let mut arr = [x.clone(), y.clone(), z.clone()];
                    arr[slot] = v.clone();
                    arr
                };
                let [p, q, r] = args(&x.scale(&s).add(&xp));
                let lhs = a.eval_ternary(&p, &q, &r).unwrap();
                let [p1, q1, r1] = args(&x);
                let [p2, q2, r2] = args(&xp);
                let rhs = a
                    .eval_ternary(&p1, &q1, &r1)
                    .unwrap()
                    .scale(&s)
                    .add(&a.eval_ternary(&p2, &q2, &r2).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
