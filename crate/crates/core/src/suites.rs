//! Exhaustive checkers for every supported axiom system.
//!
//! Each checker sweeps the full basis-tuple space of its axioms and records
//! exact residuals. Residual conventions:
//!
//! * skew axioms report `x*y + y*x` (resp. `{x,y,z} + {y,x,z}`);
//! * cyclic-sum axioms report the cyclic sum itself;
//! * equational axioms report left side minus right side.
//!
//! Twisted identities are evaluated through precomputed "pulled" tables
//! (tables of the composite multilinear maps, e.g. `{α²(e_i), α²(e_j), e_k}`),
//! so each tuple costs a handful of scalar contractions instead of a full
//! trilinear evaluation.

use crate::algebra::{morphism_verdicts, Algebra, BinaryTable, TernaryTable};
use crate::construct::{
    commutator_product, hom_associator, jacobian_table, twisted_derived_ternary_table,
};
use crate::error::Error;
use crate::linalg::{contract, LinearMap};
use crate::report::{AxiomCheck, AxiomVerdict, CheckOptions, CheckReport};

/// Which reading of the fourth compatibility axiom a Hom-LY check uses.
///
/// The printed form pairs the cyclic sum of `{x*y, α(z), α(u)}` with that of
/// `{z*y, α(x), α(u)}`; for any skew binary table the two sums cancel
/// termwise, so the printed form carries no information and does not reduce
/// to the classical axiom at `α = id`. The strict form drops the second sum
/// and does reduce. Strict is the default everywhere.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum B6Mode {
    #[default]
    Strict,
    Printed,
}

fn skew_binary_verdict(id: &str, c: &BinaryTable, opts: &CheckOptions) -> AxiomVerdict {
    let n = c.dim();
    let mut check = AxiomCheck::new(id, opts);
    for i in 0..n {
        for j in 0..n {
            check.record(&[i, j], c.product(i, j).add(c.product(j, i)));
        }
    }
    check.finish()
}

fn skew12_ternary_verdict(id: &str, d: &TernaryTable, opts: &CheckOptions) -> AxiomVerdict {
    let n = d.dim();
    let mut check = AxiomCheck::new(id, opts);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                check.record(&[i, j, k], d.product(i, j, k).add(d.product(j, i, k)));
            }
        }
    }
    check.finish()
}

fn cyclic_sum_ternary_verdict(id: &str, d: &TernaryTable, opts: &CheckOptions) -> AxiomVerdict {
    let n = d.dim();
    let mut check = AxiomCheck::new(id, opts);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut res = d.product(i, j, k).add(d.product(j, k, i));
                res.add_assign(d.product(k, i, j));
                check.record(&[i, j, k], res);
            }
        }
    }
    check.finish()
}

/// The six element axioms shared by the classical and twisted
/// Lie-Yamaguti checks; the classical case is `alpha = id`.
fn ly_family_verdicts(
    c: &BinaryTable,
    d: &TernaryTable,
    alpha: &LinearMap,
    ids: [&str; 6],
    b6: B6Mode,
    opts: &CheckOptions,
) -> Vec<AxiomVerdict> {
    let n = c.dim();
    let alpha2 = alpha.power(2);
    let alpha4 = alpha.power(4);

    let mut verdicts = Vec::with_capacity(6);
    verdicts.push(skew_binary_verdict(ids[0], c, opts));
    verdicts.push(skew12_ternary_verdict(ids[1], d, opts));

    // σ[(x*y)*α(z) + {x,y,z}] = 0
    let c_ra = c.pull(None, Some(alpha)); // e_r * α(e_k)
    let ll = TernaryTable::from_fn(n, |i, j, k| {
        contract(n, c.product(i, j), |r| c_ra.product(r, k))
    });
    {
        let mut check = AxiomCheck::new(ids[2], opts);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut res = ll.product(i, j, k).add(ll.product(j, k, i));
                    res.add_assign(ll.product(k, i, j));
                    res.add_assign(d.product(i, j, k));
                    res.add_assign(d.product(j, k, i));
                    res.add_assign(d.product(k, i, j));
                    check.record(&[i, j, k], res);
                }
            }
        }
        verdicts.push(check.finish());
    }

    // strict: σ{x*y, α(z), α(u)} = 0
    // printed: σ[{x*y, α(z), α(u)} + {z*y, α(x), α(u)}] = 0
    let d_a23 = d.pull(None, Some(alpha), Some(alpha)); // {e_r, α(e_k), α(e_l)}
    {
        let term = |i: usize, j: usize, k: usize, l: usize| {
            contract(n, c.product(i, j), |r| d_a23.product(r, k, l))
        };
        let mut check = AxiomCheck::new(ids[3], opts);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut res = term(i, j, k, l);
                        res.add_assign(&term(j, k, i, l));
                        res.add_assign(&term(k, i, j, l));
                        if b6 == B6Mode::Printed {
                            res.add_assign(&term(k, j, i, l));
                            res.add_assign(&term(i, k, j, l));
                            res.add_assign(&term(j, i, k, l));
                        }
                        check.record(&[i, j, k, l], res);
                    }
                }
            }
        }
        verdicts.push(check.finish());
    }

    // {α(x), α(y), u*v} = {x,y,u} * α²(v) + α²(u) * {x,y,v}
    let d_aa1 = d.pull(Some(alpha), Some(alpha), None); // {α(e_i), α(e_j), e_r}
    let c_ra2 = c.pull(None, Some(&alpha2)); // e_r * α²(e_l)
    let c_a2r = c.pull(Some(&alpha2), None); // α²(e_k) * e_r
    {
        let mut check = AxiomCheck::new(ids[4], opts);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut res = contract(n, c.product(k, l), |r| d_aa1.product(i, j, r));
                        res.sub_assign(&contract(n, d.product(i, j, k), |r| c_ra2.product(r, l)));
                        res.sub_assign(&contract(n, d.product(i, j, l), |r| c_a2r.product(k, r)));
                        check.record(&[i, j, k, l], res);
                    }
                }
            }
        }
        verdicts.push(check.finish());
    }

    // {α²(x), α²(y), {α²(u), α²(v), w}}
    //   = {{x,y,α²(u)}, α⁴(v), α²(w)} + {α⁴(u), {x,y,α²(v)}, α²(w)}
    //     + {α⁴(u), α⁴(v), {x,y,w}}
    let p22 = d.pull(Some(&alpha2), Some(&alpha2), None);
    let p3 = d.pull(None, None, Some(&alpha2));
    let p42 = d.pull(None, Some(&alpha4), Some(&alpha2));
    let p4b = d.pull(Some(&alpha4), None, Some(&alpha2));
    let p44 = d.pull(Some(&alpha4), Some(&alpha4), None);
    {
        let mut check = AxiomCheck::new(ids[5], opts);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for m in 0..n {
                            let mut res =
                                contract(n, p22.product(k, l, m), |r| p22.product(i, j, r));
                            res.sub_assign(&contract(n, p3.product(i, j, k), |r| {
                                p42.product(r, l, m)
                            }));
                            res.sub_assign(&contract(n, p3.product(i, j, l), |r| {
                                p4b.product(k, r, m)
                            }));
                            res.sub_assign(&contract(n, d.product(i, j, m), |r| {
                                p44.product(k, l, r)
                            }));
                            check.record(&[i, j, k, l, m], res);
                        }
                    }
                }
            }
        }
        verdicts.push(check.finish());
    }

    verdicts
}

/// Classical Lie-Yamaguti axioms; the algebra's twisting map is ignored.
pub fn check_ly(a: &Algebra, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let c = a.require_binary("suite ly")?;
    let d = a.require_ternary("suite ly")?;
    let id = LinearMap::identity(a.dim());
    let verdicts = ly_family_verdicts(
        c,
        d,
        &id,
        ["A1", "A2", "A3", "A4", "A5", "A6"],
        B6Mode::Strict,
        opts,
    );
    Ok(CheckReport::new("ly", verdicts))
}

/// Twisted Lie-Yamaguti axioms, multiplicativity included.
pub fn check_hom_ly(a: &Algebra, b6: B6Mode, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let c = a.require_binary("suite hom-ly")?;
    let d = a.require_ternary("suite hom-ly")?;
    let mut verdicts = morphism_verdicts(a, a.alpha(), "B1", "B2", opts);
    verdicts.extend(ly_family_verdicts(
        c,
        d,
        a.alpha(),
        ["B3", "B4", "B5", "B6", "B7", "B8"],
        b6,
        opts,
    ));
    let suite_id = match b6 {
        B6Mode::Strict => "hom-ly",
        B6Mode::Printed => "hom-ly-printed-b6",
    };
    Ok(CheckReport::new(suite_id, verdicts))
}

fn nambu_verdict(
    id: &str,
    d: &TernaryTable,
    alpha: &LinearMap,
    opts: &CheckOptions,
) -> AxiomVerdict {
    let n = d.dim();
    let q12 = d.pull(Some(alpha), Some(alpha), None);
    let q23 = d.pull(None, Some(alpha), Some(alpha));
    let q13 = d.pull(Some(alpha), None, Some(alpha));
    let mut check = AxiomCheck::new(id, opts);
    // tuple order (x, y, u, v, w)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let mut res = contract(n, d.product(k, l, m), |r| q12.product(i, j, r));
                        res.sub_assign(&contract(n, d.product(i, j, k), |r| q23.product(r, l, m)));
                        res.sub_assign(&contract(n, d.product(i, j, l), |r| q13.product(k, r, m)));
                        res.sub_assign(&contract(n, d.product(i, j, m), |r| q12.product(k, l, r)));
                        check.record(&[i, j, k, l, m], res);
                    }
                }
            }
        }
    }
    check.finish()
}

/// Twisted derivation law for the ternary operation, checked with the
/// algebra's own twisting map.
pub fn check_hom_nambu(a: &Algebra, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let d = a.require_ternary("suite hom-nambu")?;
    let verdict = nambu_verdict("hom-nambu", d, a.alpha(), opts);
    Ok(CheckReport::new("hom-nambu", vec![verdict]))
}

fn ternary_multiplicativity_info(a: &Algebra, opts: &CheckOptions) -> Vec<AxiomVerdict> {
    morphism_verdicts(a, a.alpha(), "mult-binary", "mult-ternary", opts)
        .into_iter()
        .filter(|v| v.axiom_id == "mult-ternary")
        .collect()
}

/// Skewness in the first two slots plus vanishing cyclic sum.
/// Multiplicativity is reported informationally and never fails the suite.
pub fn check_hom_triple(a: &Algebra, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let d = a.require_ternary("suite hom-triple")?;
    let verdicts = vec![
        skew12_ternary_verdict("skew-12", d, opts),
        cyclic_sum_ternary_verdict("cyclic-sum", d, opts),
    ];
    Ok(CheckReport::with_info(
        "hom-triple",
        verdicts,
        ternary_multiplicativity_info(a, opts),
    ))
}

/// Hom-triple axioms together with the twisted derivation law.
pub fn check_hom_lie_triple(a: &Algebra, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let d = a.require_ternary("suite hom-lts")?;
    let verdicts = vec![
        skew12_ternary_verdict("skew-12", d, opts),
        cyclic_sum_ternary_verdict("cyclic-sum", d, opts),
        nambu_verdict("hom-nambu", d, a.alpha(), opts),
    ];
    Ok(CheckReport::with_info(
        "hom-lts",
        verdicts,
        ternary_multiplicativity_info(a, opts),
    ))
}

/// Relates the cyclic sums of the commutator bracket and the twisted
/// associator of a (not necessarily skew) binary product:
/// `σ[[x,y], α(z)] = σ as(x,y,z) − σ as(y,x,z)`.
/// Holds identically for any bilinear product and linear map.
pub fn check_hom_akivis(a: &Algebra, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let _ = a.require_binary("suite hom-akivis")?;
    let alpha = a.alpha();
    let n = a.dim();

    let comm = commutator_product(a)?;
    let jk = jacobian_table(&comm, alpha);
    let assoc = hom_associator(a)?;

    let mut check = AxiomCheck::new("hom-akivis", opts);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut res = jk.product(i, j, k).clone();
                res.sub_assign(assoc.product(i, j, k));
                res.sub_assign(assoc.product(j, k, i));
                res.sub_assign(assoc.product(k, i, j));
                res.add_assign(assoc.product(j, i, k));
                res.add_assign(assoc.product(k, j, i));
                res.add_assign(assoc.product(i, k, j));
                check.record(&[i, j, k], res);
            }
        }
    }
    Ok(CheckReport::new("hom-akivis", vec![check.finish()]))
}

/// Skewness plus the twisted Jacobi identity `σ[(x*y)*α(z)] = 0`.
pub fn check_hom_jacobi(a: &Algebra, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let c = a.require_binary("suite hom-lie")?;
    let alpha = a.alpha();
    let n = a.dim();
    let c_ra = c.pull(None, Some(alpha));
    let ll = TernaryTable::from_fn(n, |i, j, k| {
        contract(n, c.product(i, j), |r| c_ra.product(r, k))
    });
    let mut check = AxiomCheck::new("hom-jacobi", opts);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut res = ll.product(i, j, k).add(ll.product(j, k, i));
                res.add_assign(ll.product(k, i, j));
                check.record(&[i, j, k], res);
            }
        }
    }
    let verdicts = vec![skew_binary_verdict("skew", c, opts), check.finish()];
    Ok(CheckReport::new("hom-lie", verdicts))
}

/// Skewness plus the twisted Malcev identity
/// `J_α(α(x), α(y), [x,z]) = [J_α(x,y,z), α²(x)]`.
pub fn check_hom_malcev(a: &Algebra, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let c = a.require_binary("suite hom-malcev")?;
    let alpha = a.alpha();
    let n = a.dim();
    let alpha2 = alpha.power(2);
    let jt = jacobian_table(c, alpha);
    let jp = jt.pull(Some(alpha), Some(alpha), None);
    let c_ra2 = c.pull(None, Some(&alpha2));

    let mut check = AxiomCheck::new("hom-malcev", opts);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut res = contract(n, c.product(i, k), |r| jp.product(i, j, r));
                res.sub_assign(&contract(n, jt.product(i, j, k), |r| c_ra2.product(r, i)));
                check.record(&[i, j, k], res);
            }
        }
    }
    let verdicts = vec![skew_binary_verdict("skew", c, opts), check.finish()];
    Ok(CheckReport::new("hom-malcev", verdicts))
}

/// Skewness plus the linearized form of the twisted Malcev identity:
/// `J_α(α(x),α(y),[u,v]) = [J_α(x,y,u),α²(v)] + [α²(u),J_α(x,y,v)]
///  − 2 J_α(α(u),α(v),[x,y])`.
pub fn check_eq44(a: &Algebra, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let c = a.require_binary("suite eq44")?;
    let alpha = a.alpha();
    let n = a.dim();
    let alpha2 = alpha.power(2);
    let jt = jacobian_table(c, alpha);
    let jp = jt.pull(Some(alpha), Some(alpha), None);
    let c_ra2 = c.pull(None, Some(&alpha2));
    let c_a2r = c.pull(Some(&alpha2), None);
    let two = crate::rational::Rational::from(2);

    let mut check = AxiomCheck::new("eq44", opts);
    // tuple order (x, y, u, v)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut res = contract(n, c.product(k, l), |r| jp.product(i, j, r));
                    res.sub_assign(&contract(n, jt.product(i, j, k), |r| c_ra2.product(r, l)));
                    res.sub_assign(&contract(n, jt.product(i, j, l), |r| c_a2r.product(k, r)));
                    res.add_assign(
                        &contract(n, c.product(i, j), |r| jp.product(k, l, r)).scale(&two),
                    );
                    check.record(&[i, j, k, l], res);
                }
            }
        }
    }
    let verdicts = vec![skew_binary_verdict("skew", c, opts), check.finish()];
    Ok(CheckReport::new("eq44", verdicts))
}

/// Skewness plus the derivation-style identity
/// `{α(x),α(y),[u,v]} = [{x,y,u},α²(v)] + [α²(u),{x,y,v}]`,
/// where the ternary operation is formed internally from the binary one as
/// `−J_α(x,y,z) + 2[[x,y],α(z)]`.
pub fn check_eq45(a: &Algebra, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let c = a.require_binary("suite eq45")?;
    let alpha = a.alpha();
    let n = a.dim();
    let alpha2 = alpha.power(2);
    let t = twisted_derived_ternary_table(c, alpha);
    let tp = t.pull(Some(alpha), Some(alpha), None);
    let c_ra2 = c.pull(None, Some(&alpha2));
    let c_a2r = c.pull(Some(&alpha2), None);

    let mut check = AxiomCheck::new("eq45", opts);
    // tuple order (x, y, u, v)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut res = contract(n, c.product(k, l), |r| tp.product(i, j, r));
                    res.sub_assign(&contract(n, t.product(i, j, k), |r| c_ra2.product(r, l)));
                    res.sub_assign(&contract(n, t.product(i, j, l), |r| c_a2r.product(k, r)));
                    check.record(&[i, j, k, l], res);
                }
            }
        }
    }
    let verdicts = vec![skew_binary_verdict("skew", c, opts), check.finish()];
    Ok(CheckReport::new("eq45", verdicts))
}

/// All suite identifiers accepted by `run_suite`, in dispatch order.
pub const SUITE_IDS: [&str; 13] = [
    "ly",
    "hom-ly",
    "hom-ly-printed-b6",
    "hom-nambu",
    "hom-triple",
    "hom-lts",
    "hom-akivis",
    "hom-lie",
    "hom-malcev",
    "eq44",
    "eq45",
    "multiplicativity",
    "all",
];

/// Dispatches a suite by identifier. `"all"` runs every suite applicable to
/// the algebra's table layout and aggregates the verdicts under prefixed
/// axiom identifiers.
pub fn run_suite(
    a: &Algebra,
    suite_id: &str,
    b6: B6Mode,
    opts: &CheckOptions,
) -> Result<CheckReport, Error> {
    match suite_id {
        "ly" => check_ly(a, opts),
        "hom-ly" => check_hom_ly(a, b6, opts),
        "hom-ly-printed-b6" => check_hom_ly(a, B6Mode::Printed, opts),
        "hom-nambu" => check_hom_nambu(a, opts),
        "hom-triple" => check_hom_triple(a, opts),
        "hom-lts" => check_hom_lie_triple(a, opts),
        "hom-akivis" => check_hom_akivis(a, opts),
        "hom-lie" => check_hom_jacobi(a, opts),
        "hom-malcev" => check_hom_malcev(a, opts),
        "eq44" => check_eq44(a, opts),
        "eq45" => check_eq45(a, opts),
        "multiplicativity" => Ok(a.is_multiplicative(opts)),
        "all" => run_all(a, b6, opts),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

fn run_all(a: &Algebra, b6: B6Mode, opts: &CheckOptions) -> Result<CheckReport, Error> {
    let has_binary = a.binary().is_some();
    let has_ternary = a.ternary().is_some();
    let mut ids: Vec<&str> = vec!["multiplicativity"];
    if has_binary && has_ternary {
        ids.extend(["ly", "hom-ly"]);
    }
    if has_ternary {
        ids.extend(["hom-nambu", "hom-triple", "hom-lts"]);
    }
    if has_binary {
        ids.extend(["hom-akivis", "hom-lie", "hom-malcev", "eq44", "eq45"]);
    }

    let mut axioms = Vec::new();
    let mut infos = Vec::new();
    for id in ids {
        let report = run_suite(a, id, b6, opts)?;
        let prefix = |mut v: AxiomVerdict| {
            v.axiom_id = format!("{}/{}", report.suite_id, v.axiom_id);
            v
        };
        axioms.extend(report.axiom_verdicts.clone().into_iter().map(prefix));
        infos.extend(report.info_verdicts.clone().into_iter().map(prefix));
    }
    Ok(CheckReport::with_info("all", axioms, infos))
}
