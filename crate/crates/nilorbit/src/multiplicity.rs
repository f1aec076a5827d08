//! Multiplicity of an irreducible representation in the ring of regular
//! functions on the normalization of a nilpotent orbit closure.
//!
//! The engine evaluates the Euler-characteristic form of Bott-Borel-Weil
//! induction: the multiplicity of the dual of V_lambda equals
//! `sum_w sgn(w) * (multiplicity of E_{w(lambda+rho)-rho} in S(o))`,
//! summed over Weyl elements sending lambda+rho to an L-dominant shifted
//! weight. The formally infinite sum over S(o) truncates at degree
//! floor(lambda(h)/2): every weight of S^k(o) pairs with h to at least 2k,
//! while (w(lambda+rho)-rho)(h) <= lambda(h) because h is dominant and
//! w(lambda+rho) <= lambda+rho in the dominance order.
//!
//! A second, fully independent path ([`bruteforce_multiplicity_g2`])
//! enumerates Weyl elements against the closed-form constituent list of the
//! G2 model grading and never touches the symmetric-algebra machinery.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::grading::{Grading, LeviWeight};
use crate::rootsys::{RootSystem, Weight, WeylElement};
use crate::sym::{levi_irrep_extract, sym_power_multiset};
use crate::Error;

/// Levi-constituent decomposition of S^0(o) .. S^k_max(o), computed once and
/// shared read-only across weights.
#[derive(Clone, Debug)]
pub struct SymDecomposition {
    per_degree: Vec<BTreeMap<Weight, u64>>,
}

impl SymDecomposition {
    pub fn up_to(g: &Grading, k_max: u32) -> Result<SymDecomposition, Error> {
        let mut per_degree = Vec::with_capacity(k_max as usize + 1);
        for k in 0..=k_max {
            let multiset = sym_power_multiset(g.o_space(), g.ambient_rank(), k);
            let constituents = levi_irrep_extract(&multiset, g.levi())?;
            per_degree.push(
                constituents
                    .into_iter()
                    .map(|c| (c.mu.full, c.multiplicity))
                    .collect(),
            );
        }
        Ok(SymDecomposition { per_degree })
    }

    pub fn k_max(&self) -> u32 {
        (self.per_degree.len() - 1) as u32
    }

    pub fn constituent_multiplicity(&self, k: u32, mu: &Weight) -> u64 {
        self.per_degree[k as usize].get(mu).copied().unwrap_or(0)
    }

    pub fn degree(&self, k: u32) -> &BTreeMap<Weight, u64> {
        &self.per_degree[k as usize]
    }
}

/// One contributing (Weyl element, degree) pair of the alternating sum.
#[derive(Clone, Debug)]
pub struct Term {
    pub w: WeylElement,
    pub mu: LeviWeight,
    /// Symmetric-power degree the constituent was found in.
    pub degree: u32,
    /// Grading excess mu(h) - 2*degree; for the model orbit this is the
    /// number of twisted-standard factors q of the constituent.
    pub q: i64,
    pub s_mult: u64,
    pub signed: i64,
}

/// The full audit of one multiplicity evaluation.
#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    pub lambda: Weight,
    pub lambda_dual: Weight,
    pub total: i64,
    pub terms: Vec<Term>,
    pub k_bound: u32,
}

/// Degree cutoff that makes the alternating sum finite: floor(lambda(h)/2).
pub fn truncation_bound(g: &Grading, lambda: &Weight) -> Result<u32, Error> {
    if lambda.rank() != g.ambient_rank() || !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let pairing = g.h().pairing(lambda);
    debug_assert!(pairing >= 0, "dominant pairs non-negatively with dominant");
    Ok((pairing / 2) as u32)
}

/// Multiplicity of the dual of V_lambda in the function ring, with the
/// contributing terms. Convenience wrapper that decomposes S(o) up to the
/// truncation bound first.
pub fn multiplicity(
    rs: &RootSystem,
    g: &Grading,
    lambda: &Weight,
) -> Result<MultiplicityReport, Error> {
    let k_bound = truncation_bound(g, lambda)?;
    let sd = SymDecomposition::up_to(g, k_bound)?;
    multiplicity_with(rs, g, &sd, lambda)
}

/// Multiplicity evaluation against a pre-computed decomposition.
pub fn multiplicity_with(
    rs: &RootSystem,
    g: &Grading,
    sd: &SymDecomposition,
    lambda: &Weight,
) -> Result<MultiplicityReport, Error> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let k_bound = truncation_bound(g, lambda)?;
    assert!(
        sd.k_max() >= k_bound,
        "decomposition truncated below the required bound"
    );
    let weyl = rs.weyl()?;
    let shifted = lambda.add(rs.rho());
    let mut terms = Vec::new();
    let mut total = 0i64;
    for w in weyl {
        let mu = w.apply(&shifted).sub(rs.rho());
        let lw = g.levi().levi_weight(&mu);
        if !lw.is_levi_dominant() {
            continue;
        }
        for k in 0..=k_bound {
            let s_mult = sd.constituent_multiplicity(k, &mu);
            if s_mult == 0 {
                continue;
            }
            let signed = w.sign * s_mult as i64;
            total += signed;
            terms.push(Term {
                w: w.clone(),
                mu: lw.clone(),
                degree: k,
                q: lw.h_value - 2 * k as i64,
                s_mult,
                signed,
            });
        }
    }
    Ok(MultiplicityReport {
        lambda: lambda.clone(),
        lambda_dual: rs.dual_weight(lambda)?,
        total,
        terms,
        k_bound,
    })
}

/// The set of Weyl elements contributing to the alternating sum for lambda,
/// in (length, matrix) order. For the G2 model grading this is exactly the
/// identity, for every dominant lambda.
pub fn s_lambda_set(
    rs: &RootSystem,
    g: &Grading,
    lambda: &Weight,
) -> Result<Vec<WeylElement>, Error> {
    let report = multiplicity(rs, g, lambda)?;
    let mut out: Vec<WeylElement> = Vec::new();
    for term in report.terms {
        if !out.contains(&term.w) {
            out.push(term.w);
        }
    }
    Ok(out)
}

/// One solution found by the brute-force enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BruteForceSolution {
    pub w_length: u32,
    pub sign: i64,
    pub degree: u32,
    pub q: u32,
}

#[derive(Clone, Debug)]
pub struct BruteForceReport {
    pub lambda: Weight,
    pub total: i64,
    pub solutions: Vec<BruteForceSolution>,
}

/// Brute-force multiplicity for the G2 model orbit: enumerate every Weyl
/// element and every pair k >= q >= 0 up to the truncation bound, and count
/// sign-weighted solutions of `w(lambda+rho) - rho = (2k+q)a + (k+q)b`
/// (ambient coordinates (k-q, q)). Deliberately independent of the grading
/// and symmetric-algebra machinery; the model coweight pairing is inlined.
pub fn bruteforce_multiplicity_g2(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<BruteForceReport, Error> {
    if rs.label() != "G2" {
        return Err(Error::InvalidInput(format!(
            "brute-force path is specific to G2, got {}",
            rs.label()
        )));
    }
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    // lambda(h) for the model coweight h = 2 h_alpha + 3 h_beta.
    let lambda_h = 2 * lambda.0[0] + 3 * lambda.0[1];
    let k_bound = (lambda_h / 2) as u32;
    let weyl = rs.weyl()?;
    let shifted = lambda.add(rs.rho());
    let mut total = 0i64;
    let mut solutions = Vec::new();
    for w in weyl {
        let target = w.apply(&shifted).sub(rs.rho());
        for k in 0..=k_bound {
            for q in 0..=k {
                if target == Weight(vec![(k - q) as i64, q as i64]) {
                    total += w.sign;
                    solutions.push(BruteForceSolution {
                        w_length: w.length,
                        sign: w.sign,
                        degree: k,
                        q,
                    });
                }
            }
        }
    }
    Ok(BruteForceReport {
        lambda: lambda.clone(),
        total,
        solutions,
    })
}

/// One row of the model-orbit verification sweep.
#[derive(Clone, Debug)]
pub struct VerifyRow {
    pub lambda: Weight,
    pub multiplicity: i64,
    pub bruteforce: i64,
    pub agree: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub bound: u32,
    pub rows: Vec<VerifyRow>,
    pub pass: bool,
}

/// All dominant weights of the given rank with coordinate sum at most
/// `bound`, ordered by (sum, lexicographic).
pub fn dominant_weights_up_to(rank: usize, bound: u32) -> Vec<Weight> {
    fn rec(rank: usize, remaining: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if prefix.len() == rank {
            out.push(Weight(prefix.clone()));
            return;
        }
        for c in 0..=remaining {
            prefix.push(c);
            rec(rank, remaining - c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=bound as i64 {
        let mut batch = Vec::new();
        rec(rank, total, &mut Vec::new(), &mut batch);
        batch.retain(|w| w.coord_sum() == total);
        batch.sort();
        out.extend(batch);
    }
    out
}

/// Sweep every dominant weight with coordinate sum <= bound through both
/// multiplicity paths. Passes exactly when every weight reports (1, 1):
/// the defining property of a model orbit. Weights are distributed across
/// worker threads; the output order is independent of scheduling.
pub fn verify_model(rs: &RootSystem, g: &Grading, bound: u32) -> Result<VerifyOutcome, Error> {
    if bound < 1 {
        return Err(Error::InvalidInput("bound must be at least 1".into()));
    }
    if rs.label() != "G2" {
        return Err(Error::InvalidInput(
            "the model verification sweep is defined on G2".into(),
        ));
    }
    let lambdas = dominant_weights_up_to(rs.rank(), bound);
    let k_needed = lambdas
        .iter()
        .map(|l| truncation_bound(g, l))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let sd = SymDecomposition::up_to(g, k_needed)?;
    let rows: Vec<VerifyRow> = lambdas
        .par_iter()
        .map(|lambda| {
            let report = multiplicity_with(rs, g, &sd, lambda)?;
            let brute = bruteforce_multiplicity_g2(rs, lambda)?;
            Ok(VerifyRow {
                lambda: lambda.clone(),
                multiplicity: report.total,
                bruteforce: brute.total,
                agree: report.total == brute.total,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let pass = rows
        .iter()
        .all(|r| r.multiplicity == 1 && r.bruteforce == 1 && r.agree);
    Ok(VerifyOutcome { bound, rows, pass })
}
