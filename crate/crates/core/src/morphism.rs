//! Endomorphism verification and small-scale candidate search.
//!
//! There is no general endomorphism solver here (that is a polynomial
//! system problem); the search space is restricted to finite, explicitly
//! generated candidate families, which is all the twisting constructions
//! need at desk scale.

use std::collections::HashSet;
use std::fmt;

use crate::algebra::{morphism_verdicts, Algebra};
use crate::error::Error;
use crate::linalg::LinearMap;
use crate::rational::Rational;
use crate::report::{CheckOptions, CheckReport};

/// Generation cap for candidate families, counted in maps.
pub const DEFAULT_CANDIDATE_CAP: usize = 50_000;

/// Where a candidate family came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    User,
    Permutation,
    SignedPermutation,
    Scalar,
    DiagonalGrid,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::User => "user",
            Provenance::Permutation => "permutation",
            Provenance::SignedPermutation => "signed-permutation",
            Provenance::Scalar => "scalar",
            Provenance::DiagonalGrid => "diagonal-grid",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "user" => Provenance::User,
            "permutation" => Provenance::Permutation,
            "signed-permutation" => Provenance::SignedPermutation,
            "scalar" => Provenance::Scalar,
            "diagonal-grid" => Provenance::DiagonalGrid,
            _ => return None,
        })
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A deduplicated, order-preserving family of square maps of one dimension.
#[derive(Clone, Debug)]
pub struct CandidateSet {
    dim: usize,
    maps: Vec<LinearMap>,
    provenance: Provenance,
}

impl CandidateSet {
    pub fn new(dim: usize, maps: Vec<LinearMap>, provenance: Provenance) -> Result<Self, Error> {
        let mut seen = HashSet::new();
        let mut kept = Vec::with_capacity(maps.len());
        for m in maps {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.dim(),
                });
            }
            if seen.insert(m.clone()) {
                kept.push(m);
            }
        }
        Ok(CandidateSet {
            dim,
            maps: kept,
            provenance,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn maps(&self) -> &[LinearMap] {
        &self.maps
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// Verifies `β(e_i * e_j) = β(e_i) * β(e_j)` on all pairs and the ternary
/// analogue on all triples; absent tables skip their half.
pub fn is_endomorphism(
    a: &Algebra,
    beta: &LinearMap,
    opts: &CheckOptions,
) -> Result<CheckReport, Error> {
    if beta.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: beta.dim(),
        });
    }
    let verdicts = morphism_verdicts(a, beta, "endo-binary", "endo-ternary", opts);
    Ok(CheckReport::new("endomorphism", verdicts))
}

/// The subset of candidates that are endomorphisms of the algebra, in input
/// order; optionally also requires commutation with the algebra's twisting
/// map (the hypothesis every twist construction needs).
pub fn filter_endomorphisms(
    a: &Algebra,
    cands: &CandidateSet,
    require_commute_with_alpha: bool,
) -> Result<CandidateSet, Error> {
    if cands.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: cands.dim(),
        });
    }
    let opts = CheckOptions {
        max_counterexamples: 1,
    };
    let mut kept = Vec::new();
    for m in cands.maps() {
        if !is_endomorphism(a, m, &opts)?.passed {
            continue;
        }
        if require_commute_with_alpha && !m.commutes_with(a.alpha())? {
            continue;
        }
        kept.push(m.clone());
    }
    CandidateSet::new(cands.dim(), kept, cands.provenance())
}

/// All (optionally signed) permutation matrices of the dimension, in
/// lexicographic order. Families larger than the cap are refused up front.
pub fn permutation_candidates(
    dim: usize,
    signed: bool,
    cap: Option<usize>,
) -> Result<CandidateSet, Error> {
    let cap = cap.unwrap_or(DEFAULT_CANDIDATE_CAP) as u128;
    let mut count: u128 = 1;
    for i in 1..=dim {
        count = count.saturating_mul(i as u128);
    }
    if signed {
        count = count.saturating_mul(1u128 << dim.min(127));
    }
    if count > cap {
        return Err(Error::TooManyCandidates { count, cap });
    }

    let mut maps = Vec::with_capacity(count as usize);
    for perm in permutations_lex(dim) {
        if signed {
            for mask in 0..(1u64 << dim) {
                let mut m = LinearMap::zeros(dim);
                for (j, &pj) in perm.iter().enumerate() {
                    let sign = if mask >> j & 1 == 1 { -1 } else { 1 };
                    m.set_entry(pj, j, Rational::from(sign));
                }
                maps.push(m);
            }
        } else {
            maps.push(LinearMap::permutation(&perm));
        }
    }
    let provenance = if signed {
        Provenance::SignedPermutation
    } else {
        Provenance::Permutation
    };
    CandidateSet::new(dim, maps, provenance)
}

fn permutations_lex(dim: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(dim);
    let mut used = vec![false; dim];
    fn rec(dim: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == dim {
            out.push(current.clone());
            return;
        }
        for i in 0..dim {
            if !used[i] {
                used[i] = true;
                current.push(i);
                rec(dim, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(dim, &mut current, &mut used, &mut out);
    out
}

/// Scalar multiples of the identity, deduplicated.
pub fn scalar_candidates(dim: usize, values: &[Rational]) -> CandidateSet {
    let maps = values
        .iter()
        .map(|c| LinearMap::scalar(dim, c))
        .collect::<Vec<_>>();
    CandidateSet::new(dim, maps, Provenance::Scalar).expect("scalar maps share the dimension")
}
