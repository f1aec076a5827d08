//! Symmetric powers of the degree >= 2 space as weight multisets, and their
//! decomposition into Levi irreducibles.
//!
//! Two independent routes produce the same decomposition for the G2 model
//! grading: generic antisymmetrization over the Levi Weyl group
//! ([`levi_irrep_extract`]), and the closed form
//! ([`g2_closed_form_sk`]) that lists one constituent for each pair
//! k >= q >= 0 with ambient highest weight (k-q, q).

use std::collections::BTreeMap;

use crate::grading::{Grading, LeviData, LeviWeight};
use crate::rootsys::Weight;
use crate::Error;

/// Weights with multiplicities, keyed by full ambient coordinates so that
/// central characters are never conflated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightMultiset {
    pub entries: BTreeMap<Weight, u64>,
    /// The symmetric power this multiset came from, when applicable.
    pub degree: Option<u32>,
}

impl WeightMultiset {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// An irreducible Levi constituent with its multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeviConstituent {
    /// The L-dominant highest weight.
    pub mu: LeviWeight,
    pub multiplicity: u64,
    /// (k, q) when produced by the G2 closed form.
    pub tag: Option<(u32, u32)>,
}

/// Weight multiset of the k-th symmetric power of the space spanned by the
/// given weights: all degree-k monomials, i.e. combinations with repetition.
pub fn sym_power_multiset(o: &[LeviWeight], ambient_rank: usize, k: u32) -> WeightMultiset {
    let k = k as usize;
    let mut dp: Vec<BTreeMap<Weight, u64>> = (0..=k).map(|_| BTreeMap::new()).collect();
    dp[0].insert(Weight::zero(ambient_rank), 1);
    for w in o {
        for deg in 1..=k {
            let (lo, hi) = dp.split_at_mut(deg);
            let prev = &lo[deg - 1];
            let cur = &mut hi[0];
            for (wt, &m) in prev {
                *cur.entry(wt.add(&w.full)).or_insert(0) += m;
            }
        }
    }
    WeightMultiset {
        entries: dp.pop().expect("dp has k+1 levels"),
        degree: Some(k as u32),
    }
}

/// Decompose a Levi-invariant weight multiset into irreducible Levi
/// constituents by antisymmetrizing over the Levi Weyl group:
/// `mult(mu) = sum_w sgn(w) * m[w(mu + rho_L) - rho_L]`.
///
/// The input must be invariant under the Levi Weyl group; a negative
/// alternating sum signals a multiset that is not a genuine character.
pub fn levi_irrep_extract(
    m: &WeightMultiset,
    levi: &LeviData,
) -> Result<Vec<LeviConstituent>, Error> {
    for w in &levi.elements {
        if w.length == 0 {
            continue;
        }
        for (wt, &mult) in &m.entries {
            if m.get(&w.apply(wt)) != mult {
                return Err(Error::NotWeylInvariant(format!(
                    "multiset not Levi-invariant at {wt}"
                )));
            }
        }
    }

    let mut constituents = Vec::new();
    for mu in m.entries.keys() {
        if levi.restrict(mu).iter().any(|&c| c < 0) {
            continue;
        }
        // Work with doubled coordinates: rho_L itself may be half-integral,
        // but w(mu + rho_L) - rho_L is always a weight.
        let doubled = mu.scale(2).add(&levi.two_rho);
        let mut total: i128 = 0;
        for w in &levi.elements {
            let image = w.apply(&doubled).sub(&levi.two_rho);
            assert!(
                image.0.iter().all(|&c| c % 2 == 0),
                "shifted Levi action must stay integral"
            );
            let half = Weight(image.0.iter().map(|&c| c / 2).collect());
            total += w.sign as i128 * m.get(&half) as i128;
        }
        if total < 0 {
            return Err(Error::NegativeMultiplicity(format!(
                "alternating sum at {mu} is {total}"
            )));
        }
        if total > 0 {
            constituents.push(LeviConstituent {
                mu: levi.levi_weight(mu),
                multiplicity: total as u64,
                tag: None,
            });
        }
    }
    debug_assert_eq!(
        expand_constituents(levi, &constituents)
            .expect("constituents re-expand")
            .entries,
        m.entries,
        "extraction must reproduce the input multiset"
    );
    Ok(constituents)
}

/// Full weight multiset (in ambient coordinates) of the irreducible Levi
/// representation with L-dominant highest weight `mu`. Runs the Freudenthal
/// recursion on the abstract Levi system and lifts the result back along the
/// Levi simple roots, keeping the central directions of `mu` fixed.
pub fn levi_irrep_weights(levi: &LeviData, mu: &Weight) -> Result<WeightMultiset, Error> {
    let restricted = Weight(levi.restrict(mu));
    if !restricted.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let inner = levi.system.freudenthal_multiplicities(&restricted)?;
    let mut entries = BTreeMap::new();
    for (nu, &mult) in &inner.entries {
        let diff = restricted.sub(nu);
        let coeffs = levi
            .system
            .simple_coords(&diff)
            .expect("Levi weight differences lie in the Levi root lattice");
        let mut ambient = mu.clone();
        for (c, root) in coeffs.iter().zip(&levi.simple_fund) {
            ambient = ambient.add_scaled(root, -c);
        }
        entries.insert(ambient, mult);
    }
    Ok(WeightMultiset {
        entries,
        degree: None,
    })
}

/// Re-expand constituents through the Levi character map; inverse of
/// [`levi_irrep_extract`] on genuine characters.
pub fn expand_constituents(
    levi: &LeviData,
    constituents: &[LeviConstituent],
) -> Result<WeightMultiset, Error> {
    let mut entries: BTreeMap<Weight, u64> = BTreeMap::new();
    for c in constituents {
        let weights = levi_irrep_weights(levi, &c.mu.full)?;
        for (wt, &m) in &weights.entries {
            *entries.entry(wt.clone()).or_insert(0) += m * c.multiplicity;
        }
    }
    Ok(WeightMultiset {
        entries,
        degree: None,
    })
}

/// The closed-form decomposition of the k-th symmetric power for the G2
/// model grading: one constituent for each q = 0..k, with ambient highest
/// weight (k-q, q), grading degree 2k+q, and Levi coordinate q.
pub fn g2_closed_form_sk(k: u32) -> Vec<LeviConstituent> {
    (0..=k)
        .map(|q| LeviConstituent {
            mu: LeviWeight {
                full: Weight(vec![(k - q) as i64, q as i64]),
                h_value: (2 * k + q) as i64,
                levi_coords: vec![q as i64],
            },
            multiplicity: 1,
            tag: Some((k, q)),
        })
        .collect()
}

/// Compare the generic extraction of S^k against the closed form, as
/// multisets of (highest weight, multiplicity). True exactly when the two
/// routes agree; the G2 model grading makes this true for every k.
pub fn verify_sk_equality(g: &Grading, k: u32) -> Result<bool, Error> {
    let multiset = sym_power_multiset(g.o_space(), g.ambient_rank(), k);
    let extracted = levi_irrep_extract(&multiset, g.levi())?;
    let mut lhs: Vec<(Weight, u64)> = extracted
        .iter()
        .map(|c| (c.mu.full.clone(), c.multiplicity))
        .collect();
    let mut rhs: Vec<(Weight, u64)> = g2_closed_form_sk(k)
        .iter()
        .map(|c| (c.mu.full.clone(), c.multiplicity))
        .collect();
    lhs.sort();
    rhs.sort();
    Ok(lhs == rhs)
}
