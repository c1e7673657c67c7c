//! Derived operations and twisting constructions.
//!
//! Everything here produces a new table or algebra from existing ones.
//! Constructions verify their preconditions eagerly (endomorphism,
//! commutation, input axiom suites) and fail loudly rather than handing
//! garbage to downstream suites.

use crate::algebra::{Algebra, BinaryTable, TernaryTable};
use crate::error::Error;
use crate::linalg::{contract, LinearMap};
use crate::morphism::is_endomorphism;
use crate::report::{CheckOptions, CheckReport};
use crate::suites::{check_hom_jacobi, check_hom_ly, check_hom_malcev, check_ly, B6Mode};

fn suite_failure(report: &CheckReport) -> Error {
    let (axiom, tuple) = report
        .first_failure()
        .map(|(a, t)| (a.to_string(), t.to_vec()))
        .unwrap_or_default();
    Error::InputFailsSuite {
        suite: report.suite_id.clone(),
        axiom,
        tuple,
    }
}

fn endo_failure(report: &CheckReport) -> Error {
    let (axiom, tuple) = report
        .first_failure()
        .map(|(a, t)| (a.to_string(), t.to_vec()))
        .unwrap_or_default();
    Error::NotEndomorphism { axiom, tuple }
}

/// Table of the commutator `[x,y] = x·y − y·x`; skew by construction.
pub fn commutator_product(a: &Algebra) -> Result<BinaryTable, Error> {
    let c = a.require_binary("construction commutator")?;
    Ok(BinaryTable::from_fn(a.dim(), |i, j| {
        c.product(i, j).sub(c.product(j, i))
    }))
}

/// Table of the twisted associator `as(x,y,z) = (x·y)·α(z) − α(x)·(y·z)`.
pub fn hom_associator(a: &Algebra) -> Result<TernaryTable, Error> {
    let c = a.require_binary("construction hom-associator")?;
    let alpha = a.alpha();
    let n = a.dim();
    let c_ra = c.pull(None, Some(alpha));
    let c_ar = c.pull(Some(alpha), None);
    Ok(TernaryTable::from_fn(n, |i, j, k| {
        contract(n, c.product(i, j), |r| c_ra.product(r, k)).sub(&contract(
            n,
            c.product(j, k),
            |r| c_ar.product(i, r),
        ))
    }))
}

/// The triple system carried by any binary Hom-algebra:
/// `[x,y,z] = [[x,y], α(z)] − as(x,y,z) + as(y,x,z)`, with the commutator
/// bracket and twisted associator of the product. The result keeps the
/// input's twisting map and has no binary table.
pub fn triple_system_from_product(a: &Algebra) -> Result<Algebra, Error> {
    let _ = a.require_binary("construction triple-system")?;
    let alpha = a.alpha();
    let n = a.dim();
    let comm = commutator_product(a)?;
    let comm_ra = comm.pull(None, Some(alpha));
    let assoc = hom_associator(a)?;
    let table = TernaryTable::from_fn(n, |i, j, k| {
        contract(n, comm.product(i, j), |r| comm_ra.product(r, k))
            .sub(assoc.product(i, j, k))
            .add(assoc.product(j, i, k))
    });
    Algebra::new(format!("{}-triple", a.name()), n, None, Some(table))?
        .with_basis(a.basis().to_vec())?
        .with_alpha(alpha.clone())
}

/// Table of the twisted Jacobian `J_α(x,y,z) = σ[[x,y], α(z)]` of a binary
/// table, where the bracket is the table itself.
pub(crate) fn jacobian_table(c: &BinaryTable, alpha: &LinearMap) -> TernaryTable {
    let n = c.dim();
    let c_ra = c.pull(None, Some(alpha));
    let term = |i: usize, j: usize, k: usize| contract(n, c.product(i, j), |r| c_ra.product(r, k));
    TernaryTable::from_fn(n, |i, j, k| {
        term(i, j, k).add(&term(j, k, i)).add(&term(k, i, j))
    })
}

/// `J_α(x,y,z) = [[x,y],α(z)] + [[y,z],α(x)] + [[z,x],α(y)]` as a table.
pub fn hom_jacobian(a: &Algebra) -> Result<TernaryTable, Error> {
    let c = a.require_binary("construction hom-jacobian")?;
    Ok(jacobian_table(c, a.alpha()))
}

/// Classical derived ternary operation of a binary product:
/// `(x*y)*z − (y*z)*x − (z*x)*y`.
pub(crate) fn derived_ternary_table(c: &BinaryTable) -> TernaryTable {
    let n = c.dim();
    let term = |i: usize, j: usize, k: usize| contract(n, c.product(i, j), |r| c.product(r, k));
    TernaryTable::from_fn(n, |i, j, k| {
        term(i, j, k).sub(&term(j, k, i)).sub(&term(k, i, j))
    })
}

/// See `derived_ternary_table`.
pub fn derived_ternary(a: &Algebra) -> Result<TernaryTable, Error> {
    let c = a.require_binary("construction derived-ternary")?;
    Ok(derived_ternary_table(c))
}

/// Twisted derived ternary operation
/// `{x,y,z} = −J_α(x,y,z) + 2[[x,y], α(z)]
///          = [[x,y],α(z)] − [[y,z],α(x)] − [[z,x],α(y)]`.
/// Coincides with the classical derived ternary when `α = id`.
pub(crate) fn twisted_derived_ternary_table(c: &BinaryTable, alpha: &LinearMap) -> TernaryTable {
    let n = c.dim();
    let c_ra = c.pull(None, Some(alpha));
    let term = |i: usize, j: usize, k: usize| contract(n, c.product(i, j), |r| c_ra.product(r, k));
    TernaryTable::from_fn(n, |i, j, k| {
        term(i, j, k).sub(&term(j, k, i)).sub(&term(k, i, j))
    })
}

/// See `twisted_derived_ternary_table`.
pub fn twisted_derived_ternary(a: &Algebra) -> Result<TernaryTable, Error> {
    let c = a.require_binary("construction twisted-derived-ternary")?;
    Ok(twisted_derived_ternary_table(c, a.alpha()))
}

/// Twists both operations along an endomorphism `β` commuting with the
/// algebra's twisting map: `x *' y = β(x*y)`, `{x,y,z}' = β²({x,y,z})`,
/// and the twisting map becomes `β∘α`. Both preconditions are verified.
pub fn yau_twist(a: &Algebra, beta: &LinearMap) -> Result<Algebra, Error> {
    let endo = is_endomorphism(a, beta, &CheckOptions::default())?;
    if !endo.passed {
        return Err(endo_failure(&endo));
    }
    if !beta.commutes_with(a.alpha())? {
        return Err(Error::NonCommutingTwist);
    }
    let beta2 = beta.power(2);
    let binary = a.binary().map(|c| c.map_outputs(beta));
    let ternary = a.ternary().map(|d| d.map_outputs(&beta2));
    let alpha = beta.compose(a.alpha())?;
    Algebra::new(format!("{}-twist", a.name()), a.dim(), binary, ternary)?
        .with_basis(a.basis().to_vec())?
        .with_alpha(alpha)
}

/// Twists a classical Lie-Yamaguti algebra along an endomorphism of both
/// its operations; the result's twisting map is `β`. The input is verified
/// to satisfy the classical axioms first.
pub fn twist_ly(a: &Algebra, beta: &LinearMap) -> Result<Algebra, Error> {
    let untwisted = a.clone().with_alpha(LinearMap::identity(a.dim()))?;
    let ly = check_ly(&untwisted, &CheckOptions::default())?;
    if !ly.passed {
        return Err(suite_failure(&ly));
    }
    yau_twist(&untwisted, beta)
}

/// Builds a twisted Lie-Yamaguti algebra from a Malcev product and a binary
/// endomorphism `β`: `x *' y = β(x*y)` and the ternary operation is `β²` of
/// the classical derived ternary. Only the binary endomorphism property is
/// assumed; the ternary one follows from it.
pub fn twist_malcev(a: &Algebra, beta: &LinearMap) -> Result<Algebra, Error> {
    let c = a.require_binary("construction twist-malcev")?;
    let untwisted =
        Algebra::new(a.name(), a.dim(), Some(c.clone()), None)?.with_basis(a.basis().to_vec())?;
    let malcev = check_hom_malcev(&untwisted, &CheckOptions::default())?;
    if !malcev.passed {
        return Err(suite_failure(&malcev));
    }
    let endo = is_endomorphism(&untwisted, beta, &CheckOptions::default())?;
    if !endo.passed {
        return Err(endo_failure(&endo));
    }
    let binary = c.map_outputs(beta);
    let ternary = derived_ternary_table(c).map_outputs(&beta.power(2));
    Algebra::new(
        format!("{}-twist", a.name()),
        a.dim(),
        Some(binary),
        Some(ternary),
    )?
    .with_basis(a.basis().to_vec())?
    .with_alpha(beta.clone())
}

/// Equips a Lie algebra with the ternary operation `{x,y,z} = [[x,y],z]`,
/// yielding a classical Lie-Yamaguti algebra.
pub fn lie_to_ly(a: &Algebra) -> Result<Algebra, Error> {
    let c = a.require_binary("construction lie-to-ly")?;
    let n = a.dim();
    let untwisted = Algebra::new(a.name(), n, Some(c.clone()), None)?;
    let lie = check_hom_jacobi(&untwisted, &CheckOptions::default())?;
    if !lie.passed {
        return Err(suite_failure(&lie));
    }
    let table = TernaryTable::from_fn(n, |i, j, k| {
        contract(n, c.product(i, j), |r| c.product(r, k))
    });
    Algebra::new(format!("{}-ly", a.name()), n, Some(c.clone()), Some(table))?
        .with_basis(a.basis().to_vec())
}

/// Whether a twisted-Malcev-passing algebra carries the full twisted
/// Lie-Yamaguti structure once its ternary operation is the twisted derived
/// one. Returns the per-axiom report without asserting a verdict; the
/// answer is not known in general.
pub fn probe_hom_ly_from_hom_malcev(
    a: &Algebra,
    opts: &CheckOptions,
) -> Result<CheckReport, Error> {
    let c = a.require_binary("probe")?;
    let malcev = check_hom_malcev(a, opts)?;
    if !malcev.passed {
        return Err(suite_failure(&malcev));
    }
    let ternary = twisted_derived_ternary_table(c, a.alpha());
    let assembled = Algebra::new(
        format!("{}-probe", a.name()),
        a.dim(),
        Some(c.clone()),
        Some(ternary),
    )?
    .with_basis(a.basis().to_vec())?
    .with_alpha(a.alpha().clone())?;
    check_hom_ly(&assembled, B6Mode::Strict, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{algebras_equal, random_algebra, RandomOptions};
    use crate::linalg::Vector;
    use crate::rational::Rational;
    use crate::suites::{check_hom_triple, check_ly};
    use crate::testutil::{cyclic3, octonion_bracket, so3};

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn commutator_of_commutative_products_vanishes() {
        // e1·e1 = e2, all else zero: single-generator symmetric
        let mut c = BinaryTable::zero(2);
        c.set(0, 0, Vector::basis(2, 1));
        let a = Algebra::new("a", 2, Some(c), None).unwrap();
        assert!(commutator_product(&a).unwrap().is_zero());
    }

    #[test]
    fn commutator_of_one_sided_product() {
        // e1·e2 = e1, e2·e1 = 0
        let mut c = BinaryTable::zero(2);
        c.set(0, 1, Vector::basis(2, 0));
        let a = Algebra::new("a", 2, Some(c), None).unwrap();
        let k = commutator_product(&a).unwrap();
        assert_eq!(*k.product(0, 1), Vector::basis(2, 0));
        assert_eq!(*k.product(1, 0), Vector::basis(2, 0).neg());
        assert!(k.is_skew());
    }

    #[test]
    fn commutator_requires_binary() {
        let a = Algebra::new("a", 2, None, None).unwrap();
        assert!(matches!(
            commutator_product(&a),
            Err(Error::MissingTable {
                table: "binary",
                ..
            })
        ));
    }

    #[test]
    fn associator_vanishes_for_associative_products() {
        let mut c = BinaryTable::zero(1);
        c.set(0, 0, Vector::basis(1, 0));
        let a = Algebra::new("a", 1, Some(c), None).unwrap();
        assert!(hom_associator(&a).unwrap().is_zero());

        let zero = Algebra::new("z", 3, Some(BinaryTable::zero(3)), None).unwrap();
        assert!(hom_associator(&zero).unwrap().is_zero());
    }

    #[test]
    fn associator_with_doubling_twist() {
        // e1·e1 = e1, alpha = 2·id: (e1 e1)·α(e1) − α(e1)·(e1 e1) = 0
        let mut c = BinaryTable::zero(1);
        c.set(0, 0, Vector::basis(1, 0));
        let a = Algebra::new("a", 1, Some(c), None)
            .unwrap()
            .with_alpha(LinearMap::scalar(1, &Rational::from(2)))
            .unwrap();
        assert!(hom_associator(&a).unwrap().is_zero());
    }

    #[test]
    fn triple_system_from_zero_product_is_zero() {
        let zero = Algebra::new("z", 3, Some(BinaryTable::zero(3)), None).unwrap();
        let t = triple_system_from_product(&zero).unwrap();
        assert!(t.binary().is_none());
        assert!(t.ternary().unwrap().is_zero());
        assert!(check_hom_triple(&t, &opts()).unwrap().passed);
    }

    #[test]
    fn hom_jacobian_vanishes_exactly_for_lie_inputs() {
        assert!(hom_jacobian(&so3()).unwrap().is_zero());
        let zero = Algebra::new("z", 3, Some(BinaryTable::zero(3)), None).unwrap();
        assert!(hom_jacobian(&zero).unwrap().is_zero());
        assert!(!hom_jacobian(&octonion_bracket()).unwrap().is_zero());
    }

    #[test]
    fn twisted_derived_ternary_reduces_at_identity() {
        for seed in 0..10 {
            let a = random_algebra(3, seed, RandomOptions::default());
            assert_eq!(
                twisted_derived_ternary(&a).unwrap(),
                derived_ternary(&a).unwrap()
            );
        }
    }

    #[test]
    fn yau_twist_by_identity_and_zero() {
        let a = twist_malcev(&so3(), &cyclic3()).unwrap();
        let unchanged = yau_twist(&a, &LinearMap::identity(3)).unwrap();
        assert!(algebras_equal(&a, &unchanged));

        let zeroed = yau_twist(&a, &LinearMap::zeros(3)).unwrap();
        assert!(zeroed.binary().unwrap().is_zero());
        assert!(zeroed.ternary().unwrap().is_zero());
        assert!(zeroed.alpha().is_zero());
    }

    #[test]
    fn yau_twist_rejects_non_endomorphisms() {
        let swap = LinearMap::permutation(&[1, 0, 2]);
        assert!(matches!(
            yau_twist(&so3(), &swap),
            Err(Error::NotEndomorphism { .. })
        ));
    }

    #[test]
    fn yau_twist_rejects_non_commuting_maps() {
        let mut alpha = LinearMap::zeros(3);
        alpha.set_entry(0, 0, Rational::from(1));
        alpha.set_entry(1, 1, Rational::from(2));
        alpha.set_entry(2, 2, Rational::from(3));
        let a = so3().with_alpha(alpha).unwrap();
        assert!(matches!(
            yau_twist(&a, &cyclic3()),
            Err(Error::NonCommutingTwist)
        ));
    }

    #[test]
    fn twist_ly_specializes_yau_twist() {
        let ly = lie_to_ly(&so3()).unwrap();
        let twisted = twist_ly(&ly, &cyclic3()).unwrap();
        let via_yau = yau_twist(&ly, &cyclic3()).unwrap();
        assert!(algebras_equal(&twisted, &via_yau));
        assert_eq!(twisted.alpha(), &cyclic3());

        let by_identity = twist_ly(&ly, &LinearMap::identity(3)).unwrap();
        assert!(algebras_equal(&ly, &by_identity));

        let by_zero = twist_ly(&ly, &LinearMap::zeros(3)).unwrap();
        assert!(by_zero.binary().unwrap().is_zero());
    }

    #[test]
    fn twist_ly_rejects_non_ly_inputs() {
        let a = random_algebra(
            3,
            0,
            RandomOptions {
                with_ternary: true,
                ..Default::default()
            },
        );
        assert!(matches!(
            twist_ly(&a, &LinearMap::identity(3)),
            Err(Error::InputFailsSuite { .. })
        ));
    }

    #[test]
    fn twist_malcev_rejects_bad_inputs() {
        // a random skew algebra is (all but surely) not Malcev
        let a = random_algebra(
            3,
            1,
            RandomOptions {
                skew_binary: true,
                ..Default::default()
            },
        );
        assert!(matches!(
            twist_malcev(&a, &LinearMap::identity(3)),
            Err(Error::InputFailsSuite { .. })
        ));
        let swap = LinearMap::permutation(&[1, 0, 2]);
        assert!(matches!(
            twist_malcev(&so3(), &swap),
            Err(Error::NotEndomorphism { .. })
        ));
    }

    #[test]
    fn lie_to_ly_examples() {
        let abelian = Algebra::new("ab", 2, Some(BinaryTable::zero(2)), None).unwrap();
        let ly = lie_to_ly(&abelian).unwrap();
        assert!(ly.ternary().unwrap().is_zero());
        assert!(check_ly(&ly, &opts()).unwrap().passed);

        let so3_ly = lie_to_ly(&so3()).unwrap();
        assert!(check_ly(&so3_ly, &opts()).unwrap().passed);

        // not equal to the twisted-Malcev construction: tables differ,
        // but both satisfy the classical axioms
        let cor = twist_malcev(&so3(), &LinearMap::identity(3)).unwrap();
        assert!(!algebras_equal(&so3_ly, &cor));
        assert!(check_ly(&cor, &opts()).unwrap().passed);

        assert!(matches!(
            lie_to_ly(&octonion_bracket()),
            Err(Error::InputFailsSuite { .. })
        ));
    }

    #[test]
    fn probe_accepts_malcev_inputs_only() {
        let report = probe_hom_ly_from_hom_malcev(&so3(), &opts()).unwrap();
        assert!(report.passed);

        let zero = Algebra::new("z", 2, Some(BinaryTable::zero(2)), None).unwrap();
        assert!(probe_hom_ly_from_hom_malcev(&zero, &opts()).unwrap().passed);

        let a = random_algebra(
            3,
            1,
            RandomOptions {
                skew_binary: true,
                ..Default::default()
            },
        );
        assert!(matches!(
            probe_hom_ly_from_hom_malcev(&a, &opts()),
            Err(Error::InputFailsSuite { .. })
        ));
    }
}
