//! Root-system and Weyl-group kernel in exact integer arithmetic.
//!
//! Conventions, fixed once for the whole crate:
//! - `cartan[i][j] = alpha_i(h_{alpha_j})`: pairing of simple root i with
//!   simple coroot j. Row i of the Cartan matrix is alpha_i written in
//!   fundamental-weight coordinates.
//! - A [`Weight`] stores fundamental-weight coordinates; coordinate i is the
//!   pairing with the i-th simple coroot, so dominance is a sign check.
//! - A [`Root`] carries its expansion over the simple roots, its fundamental
//!   coordinates, and the coroot-lattice coordinates of its coroot, so that
//!   every pairing `lambda(h_gamma)` is an integer dot product.
//!
//! The Weyl group is materialized as explicit integer matrices whenever its
//! order fits under [`WEYL_ENUMERATION_LIMIT`]; larger groups leave the root
//! data usable and report `Unsupported` on access.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::linalg;
use crate::sym::WeightMultiset;
use crate::Error;

/// Weyl groups above this order are not enumerated.
pub const WEYL_ENUMERATION_LIMIT: u128 = 1_000_000;

/// Safety cap for root enumeration from a raw Cartan matrix; every finite
/// type of rank <= 8 closes far below this.
const ROOT_ENUMERATION_CAP: usize = 10_000;

/// The simple series labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn from_letter(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            'F' => Some(Series::F),
            'G' => Some(Series::G),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    /// Ranks accepted for this series (canonical labels only, rank <= 8).
    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Series::A => (1..=8).contains(&rank),
            Series::B | Series::C => (2..=8).contains(&rank),
            Series::D => (4..=8).contains(&rank),
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Dominant iff every pairing with a simple coroot is non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn coord_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Integer pairing against coroot-lattice coordinates.
    pub fn pair(&self, coroot: &[i64]) -> i64 {
        self.0.iter().zip(coroot).map(|(&a, &b)| a * b).sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|&a| -a).collect())
    }

    pub fn add_scaled(&self, other: &Weight, c: i64) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + c * b)
                .collect(),
        )
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|&a| c * a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A root with its three exact coordinate systems.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    /// Coefficients over the simple roots; all of one sign.
    pub simple: Vec<i64>,
    /// Fundamental-weight coordinates (`simple` pushed through Cartan rows).
    pub fund: Weight,
    /// The coroot, in simple-coroot coordinates.
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.simple.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root {
            simple: self.simple.iter().map(|&c| -c).collect(),
            fund: self.fund.neg(),
            coroot: self.coroot.iter().map(|&c| -c).collect(),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.simple.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A Weyl-group element as an integer matrix acting on fundamental-weight
/// coordinates (column vectors).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub length: u32,
    pub sign: i64,
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        WeylElement {
            matrix: linalg::identity(rank),
            length: 0,
            sign: 1,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == linalg::identity(self.matrix.len())
    }

    /// The linear action on a weight.
    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(linalg::mat_vec(&self.matrix, &w.0))
    }
}

/// Exact root datum for a simple (or reducible, when built from a raw Cartan
/// matrix) finite root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    rho: Weight,
    weyl: Option<Vec<WeylElement>>,
    weyl_order: u128,
    /// Scaled W-invariant symmetric form on weights (adjugate(cartan) times
    /// the symmetrizer); any positive multiple works for Freudenthal.
    form: Vec<Vec<i128>>,
}

impl RootSystem {
    /// Construct the root system for a simple type. The Weyl group is
    /// materialized only when its order is at most [`WEYL_ENUMERATION_LIMIT`];
    /// construction itself succeeds for every supported type.
    pub fn build(series: Series, rank: usize) -> Result<RootSystem, Error> {
        if !series.valid_rank(rank) {
            return Err(Error::InvalidType(format!("{}{}", series.letter(), rank)));
        }
        let cartan = cartan_matrix(series, rank);
        let order = classical_weyl_order(series, rank);
        let label = format!("{}{}", series.letter(), rank);
        let mut rs = Self::from_parts(cartan, label, Some(order))?;
        if let Some(weyl) = &rs.weyl {
            // Cross-check enumeration against the classical order formula.
            assert_eq!(weyl.len() as u128, order, "Weyl enumeration mismatch");
        }
        rs.weyl_order = order;
        Ok(rs)
    }

    /// Shorthand for the G2 system used throughout the orbit computations.
    pub fn g2() -> RootSystem {
        Self::build(Series::G, 2).expect("G2 is always constructible")
    }

    /// Construct from a raw generalized Cartan matrix. Enumeration is capped,
    /// so non-finite types are rejected rather than looping.
    pub fn from_cartan(cartan: Vec<Vec<i64>>, label: String) -> Result<RootSystem, Error> {
        Self::from_parts(cartan, label, None)
    }

    fn from_parts(
        cartan: Vec<Vec<i64>>,
        label: String,
        known_order: Option<u128>,
    ) -> Result<RootSystem, Error> {
        let rank = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank || row[i] != 2 {
                return Err(Error::InvalidType(label));
            }
            for (j, &v) in row.iter().enumerate() {
                if i != j && (v > 0 || (v == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::InvalidType(label));
                }
            }
        }

        let simple_roots: Vec<Weight> = cartan.iter().map(|row| Weight(row.clone())).collect();
        let positive_roots = enumerate_positive_roots(&cartan, &label)?;

        // rho two ways: all-ones in fundamental coordinates, and half the sum
        // of the positive roots. They must agree exactly.
        let rho = Weight(vec![1; rank]);
        let mut sum = Weight::zero(rank);
        for r in &positive_roots {
            sum = sum.add(&r.fund);
        }
        assert_eq!(
            sum,
            rho.scale(2),
            "half-sum of positive roots disagrees with all-ones rho"
        );

        let enumerate = match known_order {
            Some(order) => order <= WEYL_ENUMERATION_LIMIT,
            None => true,
        };
        let weyl = if enumerate {
            Some(enumerate_weyl(&cartan)?)
        } else {
            None
        };
        let weyl_order = match (&weyl, known_order) {
            (_, Some(order)) => order,
            (Some(w), None) => w.len() as u128,
            (None, None) => unreachable!(),
        };

        let wide: Vec<Vec<i128>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| x as i128).collect())
            .collect();
        let d = linalg::symmetrizer(&cartan);
        let adj = linalg::adjugate(&wide);
        let det = linalg::det(&wide);
        assert!(det > 0, "Cartan determinant must be positive");
        let form: Vec<Vec<i128>> = (0..rank)
            .map(|i| (0..rank).map(|j| adj[i][j] * d[j] as i128).collect())
            .collect();
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(form[i][j], form[j][i], "invariant form must be symmetric");
            }
        }

        Ok(RootSystem {
            label,
            rank,
            cartan,
            simple_roots,
            positive_roots,
            rho,
            weyl,
            weyl_order,
            form,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// All roots, positives first.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut v = self.positive_roots.clone();
        v.extend(self.positive_roots.iter().map(Root::negated));
        v
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    /// The full Weyl group, sorted by (length, matrix); identity first.
    pub fn weyl(&self) -> Result<&[WeylElement], Error> {
        self.weyl
            .as_deref()
            .ok_or(Error::Unsupported(self.weyl_order))
    }

    /// True iff every coordinate of `w` is non-negative.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.rank() == self.rank && w.is_dominant()
    }

    /// Scaled invariant inner product of two weights.
    pub fn form_pairing(&self, x: &Weight, y: &Weight) -> i128 {
        let mut acc = 0i128;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += x.0[i] as i128 * self.form[i][j] * y.0[j] as i128;
            }
        }
        acc
    }

    /// Simple-root coordinates of a weight-lattice element, when they are
    /// integral (i.e. when the element lies in the root lattice).
    pub fn simple_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        if self.rank == 0 {
            return Some(vec![]);
        }
        let mut at: Vec<Vec<i64>> = vec![vec![0; self.rank]; self.rank];
        for i in 0..self.rank {
            for j in 0..self.rank {
                at[i][j] = self.cartan[j][i];
            }
        }
        linalg::solve_integral(&at, &w.0)
    }

    /// Apply the simple reflection `s_i`.
    pub fn simple_reflect(&self, w: &Weight, i: usize) -> Weight {
        w.add_scaled(&self.simple_roots[i], -w.0[i])
    }

    /// The dominant representative of the W-orbit of `w`.
    pub fn dominantize(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        let mut steps = 0u64;
        loop {
            match cur.0.iter().position(|&c| c < 0) {
                Some(i) => {
                    cur = self.simple_reflect(&cur, i);
                    steps += 1;
                    assert!(steps < 1_000_000, "dominantization did not terminate");
                }
                None => return cur,
            }
        }
    }

    /// The longest Weyl element.
    pub fn longest_element(&self) -> Result<&WeylElement, Error> {
        let weyl = self.weyl()?;
        let max = weyl
            .iter()
            .max_by_key(|w| w.length)
            .expect("Weyl group is never empty");
        Ok(max)
    }

    /// The highest weight of the dual representation: `-w0(lambda)`.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight, Error> {
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let w0 = self.longest_element()?;
        Ok(w0.apply(lambda).neg())
    }

    /// Dimension of the irreducible with highest weight `lambda`, by the
    /// product formula over positive coroots, in exact rationals.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u128, Error> {
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let shifted = lambda.add(&self.rho);
        let mut num = 1i128;
        let mut den = 1i128;
        for root in &self.positive_roots {
            num *= shifted.pair(&root.coroot) as i128;
            den *= self.rho.pair(&root.coroot) as i128;
            let g = linalg::gcd(num, den);
            num /= g;
            den /= g;
        }
        assert_eq!(den, 1, "Weyl dimension must be integral");
        assert!(num > 0);
        Ok(num as u128)
    }

    /// Full weight multiset of the irreducible with highest weight `lambda`,
    /// by the Freudenthal recursion. Independent of every other character
    /// computation in this crate.
    pub fn freudenthal_multiplicities(&self, lambda: &Weight) -> Result<WeightMultiset, Error> {
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let weyl = self.weyl()?;
        let w0 = self.longest_element()?.clone();

        // Dominant weights of V_lambda: exactly the dominant mu with
        // lambda - mu in the non-negative root lattice. The simple-root
        // coordinates of lambda - mu are bounded by those of lambda - w0(lambda).
        let span = lambda.sub(&w0.apply(lambda));
        let bound = self
            .simple_coords(&span)
            .expect("lambda - w0(lambda) lies in the root lattice");
        let mut dominant: Vec<(Vec<i64>, Weight)> = Vec::new();
        let mut counters = vec![0i64; self.rank];
        'outer: loop {
            let mut mu = lambda.clone();
            for (i, &c) in counters.iter().enumerate() {
                mu = mu.add_scaled(&self.simple_roots[i], -c);
            }
            if mu.is_dominant() {
                dominant.push((counters.clone(), mu));
            }
            // odometer over the box [0, bound]
            for i in 0..self.rank {
                if counters[i] < bound[i] {
                    counters[i] += 1;
                    continue 'outer;
                }
                counters[i] = 0;
            }
            break;
        }
        dominant.sort_by_key(|(c, _)| (c.iter().sum::<i64>(), c.clone()));

        let mut mult: HashMap<Weight, u128> = HashMap::new();
        let lam_norm = {
            let s = lambda.add(&self.rho);
            self.form_pairing(&s, &s)
        };
        for (idx, (_, mu)) in dominant.iter().enumerate() {
            if idx == 0 {
                assert_eq!(mu, lambda);
                mult.insert(mu.clone(), 1);
                continue;
            }
            let shifted = mu.add(&self.rho);
            let denom = lam_norm - self.form_pairing(&shifted, &shifted);
            assert!(denom > 0, "Freudenthal denominator must be positive");
            let mut num = 0i128;
            for root in &self.positive_roots {
                let mut j = 1i64;
                loop {
                    let nu = mu.add_scaled(&root.fund, j);
                    let rep = self.dominantize(&nu);
                    match mult.get(&rep) {
                        Some(&m) => num += 2 * m as i128 * self.form_pairing(&nu, &root.fund),
                        None => break,
                    }
                    j += 1;
                }
            }
            assert_eq!(num % denom, 0, "Freudenthal recursion must be exact");
            let m = num / denom;
            assert!(m >= 0);
            if m > 0 {
                mult.insert(mu.clone(), m as u128);
            }
        }

        // Expand each dominant multiplicity over its Weyl orbit.
        let mut entries: BTreeMap<Weight, u64> = BTreeMap::new();
        for (mu, &m) in &mult {
            for w in weyl {
                entries.entry(w.apply(mu)).or_insert(m as u64);
            }
        }
        Ok(WeightMultiset {
            entries,
            degree: None,
        })
    }
}

/// Enumerate the positive roots by closing the simple roots under simple
/// reflections, tracking all three coordinate systems.
fn enumerate_positive_roots(cartan: &[Vec<i64>], label: &str) -> Result<Vec<Root>, Error> {
    let rank = cartan.len();
    let mut seen: HashMap<Vec<i64>, Root> = HashMap::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for i in 0..rank {
        let mut simple = vec![0i64; rank];
        simple[i] = 1;
        let mut coroot = vec![0i64; rank];
        coroot[i] = 1;
        let root = Root {
            simple: simple.clone(),
            fund: Weight(cartan[i].clone()),
            coroot,
        };
        seen.insert(simple, root.clone());
        queue.push_back(root);
    }
    while let Some(root) = queue.pop_front() {
        for i in 0..rank {
            let pairing = root.fund.0[i];
            let mut simple = root.simple.clone();
            simple[i] -= pairing;
            if simple.iter().any(|&c| c < 0) || seen.contains_key(&simple) {
                continue;
            }
            let fund = root.fund.add_scaled(&Weight(cartan[i].to_vec()), -pairing);
            let mut coroot = root.coroot.clone();
            let co_pairing: i64 = (0..rank).map(|j| cartan[i][j] * root.coroot[j]).sum();
            coroot[i] -= co_pairing;
            let new = Root {
                simple: simple.clone(),
                fund,
                coroot,
            };
            if seen.len() >= ROOT_ENUMERATION_CAP {
                return Err(Error::InvalidType(format!(
                    "{label}: root enumeration did not close (not finite type?)"
                )));
            }
            seen.insert(simple, new.clone());
            queue.push_back(new);
        }
    }
    let mut roots: Vec<Root> = seen.into_values().collect();
    roots.sort_by_key(|r| (r.height(), r.simple.clone()));
    for r in &roots {
        // <gamma, gamma's coroot> = 2 for every root.
        assert_eq!(r.fund.pair(&r.coroot), 2);
    }
    Ok(roots)
}

/// Matrix of the simple reflection s_i on fundamental coordinates:
/// `x |-> x - x_i * alpha_i`, i.e. column i of the identity is replaced by
/// `e_i - (row i of the Cartan matrix)`.
pub(crate) fn simple_reflection_matrix(cartan: &[Vec<i64>], i: usize) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut m = linalg::identity(rank);
    for j in 0..rank {
        m[j][i] = if i == j { -1 } else { -cartan[i][j] };
    }
    m
}

/// Breadth-first closure of a set of reflection generators, with word
/// lengths and signs (verified against determinants); sorted by
/// (length, matrix), identity first.
pub(crate) fn enumerate_reflection_group(
    rank: usize,
    gens: &[Vec<Vec<i64>>],
) -> Result<Vec<WeylElement>, Error> {
    let mut lengths: HashMap<Vec<Vec<i64>>, u32> = HashMap::new();
    let identity = linalg::identity(rank);
    lengths.insert(identity.clone(), 0);
    let mut queue = VecDeque::from([identity]);
    while let Some(m) = queue.pop_front() {
        let len = lengths[&m];
        for g in gens {
            let next = linalg::mat_mul(&m, g);
            if !lengths.contains_key(&next) {
                if lengths.len() as u128 >= WEYL_ENUMERATION_LIMIT {
                    return Err(Error::Unsupported(WEYL_ENUMERATION_LIMIT));
                }
                lengths.insert(next.clone(), len + 1);
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<WeylElement> = lengths
        .into_iter()
        .map(|(matrix, length)| {
            let wide: Vec<Vec<i128>> = matrix
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect();
            let det = linalg::det(&wide);
            let sign = if length % 2 == 0 { 1 } else { -1 };
            assert_eq!(det, sign as i128, "sign must equal the determinant");
            WeylElement {
                matrix,
                length,
                sign,
            }
        })
        .collect();
    elements.sort_by(|a, b| (a.length, &a.matrix).cmp(&(b.length, &b.matrix)));
    Ok(elements)
}

/// The full Weyl group of a Cartan matrix.
fn enumerate_weyl(cartan: &[Vec<i64>]) -> Result<Vec<WeylElement>, Error> {
    let gens: Vec<Vec<Vec<i64>>> = (0..cartan.len())
        .map(|i| simple_reflection_matrix(cartan, i))
        .collect();
    enumerate_reflection_group(cartan.len(), &gens)
}

fn factorial(n: u128) -> u128 {
    (1..=n).product::<u128>().max(1)
}

fn classical_weyl_order(series: Series, rank: usize) -> u128 {
    let n = rank as u128;
    match series {
        Series::A => factorial(n + 1),
        Series::B | Series::C => (1u128 << n) * factorial(n),
        Series::D => (1u128 << (n - 1)) * factorial(n),
        Series::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            8 => 696_729_600,
            _ => unreachable!(),
        },
        Series::F => 1_152,
        Series::G => 12,
    }
}

/// Cartan matrices in the Bourbaki numbering, under the convention
/// `cartan[i][j] = alpha_i(h_{alpha_j})`.
fn cartan_matrix(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let mut chain = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match series {
        Series::A => {
            for i in 0..n - 1 {
                chain(i, i + 1);
            }
        }
        Series::B => {
            for i in 0..n - 1 {
                chain(i, i + 1);
            }
            a[n - 2][n - 1] = -2;
        }
        Series::C => {
            for i in 0..n - 1 {
                chain(i, i + 1);
            }
            a[n - 1][n - 2] = -2;
        }
        Series::D => {
            for i in 0..n - 2 {
                chain(i, i + 1);
            }
            chain(n - 3, n - 1);
        }
        Series::E => {
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
            chain(0, 2);
            for i in 2..n - 1 {
                chain(i, i + 1);
            }
            chain(1, 3);
        }
        Series::F => {
            chain(0, 1);
            chain(2, 3);
            a[1][2] = -2;
            a[2][1] = -1;
        }
        Series::G => {
            a[0][1] = -1;
            a[1][0] = -3;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_cartan_convention() {
        let rs = RootSystem::g2();
        // index 0 = alpha (short), index 1 = beta (long):
        // alpha(h_beta) = -1, beta(h_alpha) = -3.
        assert_eq!(rs.cartan(), &[vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn root_counts_match_classical_tables() {
        // (series, rank, total roots, Weyl order)
        let table = [
            (Series::A, 1, 2, 2u128),
            (Series::A, 2, 6, 6),
            (Series::A, 3, 12, 24),
            (Series::B, 2, 8, 8),
            (Series::C, 3, 18, 48),
            (Series::D, 4, 24, 192),
            (Series::F, 4, 48, 1_152),
            (Series::G, 2, 12, 12),
        ];
        for (series, rank, roots, order) in table {
            let rs = RootSystem::build(series, rank).unwrap();
            assert_eq!(rs.num_roots(), roots, "{}", rs.label());
            assert_eq!(rs.weyl_order(), order, "{}", rs.label());
            assert_eq!(rs.weyl().unwrap().len() as u128, order, "{}", rs.label());
        }
    }

    #[test]
    fn root_coordinate_systems_consistent() {
        for rs in [
            RootSystem::g2(),
            RootSystem::build(Series::B, 2).unwrap(),
            RootSystem::build(Series::F, 4).unwrap(),
        ] {
            for r in rs.positive_roots() {
                // fund = simple pushed through the Cartan rows
                let mut fund = Weight::zero(rs.rank());
                for (i, &c) in r.simple.iter().enumerate() {
                    fund = fund.add_scaled(&rs.simple_roots()[i], c);
                }
                assert_eq!(fund, r.fund);
                assert!(r.is_positive());
                assert_eq!(r.fund.pair(&r.coroot), 2);
            }
        }
    }

    #[test]
    fn larger_types_construct_without_weyl() {
        // root counts still match the classical tables even when the Weyl
        // group is left unmaterialized
        let e7 = RootSystem::build(Series::E, 7).unwrap();
        assert_eq!(e7.num_roots(), 126);
        assert!(e7.weyl().is_err());
        let b8 = RootSystem::build(Series::B, 8).unwrap();
        assert_eq!(b8.num_roots(), 128);
        assert!(b8.weyl().is_err());
        let e6 = RootSystem::build(Series::E, 6).unwrap();
        assert_eq!(e6.num_roots(), 72);
        assert_eq!(e6.weyl().unwrap().len(), 51_840);
    }

    #[test]
    fn rho_is_all_ones() {
        for (series, rank) in [
            (Series::A, 1),
            (Series::A, 2),
            (Series::G, 2),
            (Series::F, 4),
        ] {
            let rs = RootSystem::build(series, rank).unwrap();
            assert_eq!(rs.rho(), &Weight(vec![1; rank]));
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(matches!(
            RootSystem::build(Series::G, 3),
            Err(Error::InvalidType(_))
        ));
        assert!(matches!(
            RootSystem::build(Series::A, 9),
            Err(Error::InvalidType(_))
        ));
        assert!(matches!(
            RootSystem::build(Series::D, 3),
            Err(Error::InvalidType(_))
        ));
    }

    #[test]
    fn large_weyl_groups_not_enumerated() {
        let rs = RootSystem::build(Series::E, 8).unwrap();
        assert_eq!(rs.num_roots(), 240);
        assert_eq!(rs.weyl_order(), 696_729_600);
        assert!(matches!(rs.weyl(), Err(Error::Unsupported(_))));
        assert!(matches!(
            rs.freudenthal_multiplicities(&Weight(vec![0; 8])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn g2_positive_roots_explicit() {
        let rs = RootSystem::g2();
        let simples: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.simple.clone())
            .collect();
        assert_eq!(
            simples,
            vec![
                vec![0, 1], // beta
                vec![1, 0], // alpha
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![3, 2],
            ]
        );
        // fundamental coordinates of 2a+b and 3a+2b
        let by_simple = |s: &[i64]| {
            rs.positive_roots()
                .iter()
                .find(|r| r.simple == s)
                .unwrap()
                .fund
                .clone()
        };
        assert_eq!(by_simple(&[2, 1]), Weight(vec![1, 0]));
        assert_eq!(by_simple(&[3, 2]), Weight(vec![0, 1]));
    }

    #[test]
    fn simple_reflection_permutes_other_positives() {
        for rs in [RootSystem::g2(), RootSystem::build(Series::A, 2).unwrap()] {
            for i in 0..rs.rank() {
                let alpha_i = rs.simple_roots()[i].clone();
                assert_eq!(rs.simple_reflect(&alpha_i, i), alpha_i.neg());
                let mut others: Vec<Weight> = rs
                    .positive_roots()
                    .iter()
                    .map(|r| r.fund.clone())
                    .filter(|f| *f != alpha_i)
                    .collect();
                let mut images: Vec<Weight> =
                    others.iter().map(|f| rs.simple_reflect(f, i)).collect();
                others.sort();
                images.sort();
                assert_eq!(others, images);
            }
        }
    }

    #[test]
    fn weyl_signs_and_inverses() {
        let rs = RootSystem::g2();
        let weyl = rs.weyl().unwrap();
        assert_eq!(weyl.len(), 12);
        assert!(weyl[0].is_identity());
        for w in weyl {
            assert_eq!(w.sign, if w.length % 2 == 0 { 1 } else { -1 });
            // group closure: some element is the inverse
            assert!(weyl
                .iter()
                .any(|v| linalg::mat_mul(&w.matrix, &v.matrix) == linalg::identity(2)));
        }
        // matrices permute the set of roots
        let root_set: std::collections::HashSet<Weight> =
            rs.all_roots().iter().map(|r| r.fund.clone()).collect();
        for w in weyl {
            for r in rs.all_roots() {
                assert!(root_set.contains(&w.apply(&r.fund)));
            }
        }
    }

    #[test]
    fn apply_examples() {
        let rs = RootSystem::g2();
        let id = WeylElement::identity(2);
        assert_eq!(id.apply(&Weight(vec![3, 5])), Weight(vec![3, 5]));
        // s_alpha(omega_1) = omega_1 - alpha = (-1, 1)
        assert_eq!(
            rs.simple_reflect(&Weight(vec![1, 0]), 0),
            Weight(vec![-1, 1])
        );
        // s_beta((0,1)) = (0,1) - beta = (3, -1)
        assert_eq!(
            rs.simple_reflect(&Weight(vec![0, 1]), 1),
            Weight(vec![3, -1])
        );
    }

    #[test]
    fn dominance() {
        let rs = RootSystem::g2();
        assert!(rs.is_dominant(&Weight(vec![1, 0])));
        assert!(rs.is_dominant(&Weight(vec![0, 0])));
        assert!(!rs.is_dominant(&Weight(vec![-1, 2])));
    }

    #[test]
    fn weyl_dimensions_g2() {
        let rs = RootSystem::g2();
        assert_eq!(rs.weyl_dimension(&Weight(vec![0, 0])).unwrap(), 1);
        assert_eq!(rs.weyl_dimension(&Weight(vec![1, 0])).unwrap(), 7);
        assert_eq!(rs.weyl_dimension(&Weight(vec![0, 1])).unwrap(), 14);
        assert!(matches!(
            rs.weyl_dimension(&Weight(vec![-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn freudenthal_trivial_and_a1() {
        let g2 = RootSystem::g2();
        let triv = g2.freudenthal_multiplicities(&Weight(vec![0, 0])).unwrap();
        assert_eq!(triv.entries.len(), 1);
        assert_eq!(triv.entries[&Weight(vec![0, 0])], 1);

        let a1 = RootSystem::build(Series::A, 1).unwrap();
        let m = a1.freudenthal_multiplicities(&Weight(vec![2])).unwrap();
        let expect: Vec<(Weight, u64)> = vec![
            (Weight(vec![-2]), 1),
            (Weight(vec![0]), 1),
            (Weight(vec![2]), 1),
        ];
        assert_eq!(m.entries.into_iter().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn freudenthal_g2_seven_dimensional() {
        let rs = RootSystem::g2();
        let m = rs.freudenthal_multiplicities(&Weight(vec![1, 0])).unwrap();
        assert_eq!(m.total(), 7);
        // zero weight once, plus the six short roots
        assert_eq!(m.entries[&Weight(vec![0, 0])], 1);
        let shorts = [[1i64, 0], [-1, 1], [2, -1]];
        for s in shorts {
            assert_eq!(m.entries[&Weight(s.to_vec())], 1);
            assert_eq!(m.entries[&Weight(s.iter().map(|&c| -c).collect())], 1);
        }
        assert_eq!(m.entries.len(), 7);
    }

    #[test]
    fn freudenthal_adjoints_have_zero_weight_mult_rank() {
        // adjoint of G2 is V_{(0,1)}: dim 14, zero weight multiplicity 2
        let g2 = RootSystem::g2();
        let m = g2.freudenthal_multiplicities(&Weight(vec![0, 1])).unwrap();
        assert_eq!(m.total(), 14);
        assert_eq!(m.entries[&Weight(vec![0, 0])], 2);
        // adjoint of A2 is V_{(1,1)}: dim 8, zero weight multiplicity 2
        let a2 = RootSystem::build(Series::A, 2).unwrap();
        let m = a2.freudenthal_multiplicities(&Weight(vec![1, 1])).unwrap();
        assert_eq!(m.total(), 8);
        assert_eq!(m.entries[&Weight(vec![0, 0])], 2);
    }

    #[test]
    fn freudenthal_total_matches_weyl_dimension() {
        let rs = RootSystem::g2();
        for a in 0..=6i64 {
            for b in 0..=(6 - a) {
                let lam = Weight(vec![a, b]);
                let m = rs.freudenthal_multiplicities(&lam).unwrap();
                assert_eq!(m.total() as u128, rs.weyl_dimension(&lam).unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn freudenthal_multisets_weyl_invariant() {
        let rs = RootSystem::g2();
        let weyl = rs.weyl().unwrap();
        for lam in [Weight(vec![1, 0]), Weight(vec![0, 1]), Weight(vec![2, 1])] {
            let m = rs.freudenthal_multiplicities(&lam).unwrap();
            for w in weyl {
                for (wt, &mult) in &m.entries {
                    assert_eq!(m.entries[&w.apply(wt)], mult);
                }
            }
        }
    }

    #[test]
    fn dual_weights() {
        let g2 = RootSystem::g2();
        for a in 0..=3i64 {
            for b in 0..=3i64 {
                let lam = Weight(vec![a, b]);
                assert_eq!(g2.dual_weight(&lam).unwrap(), lam);
            }
        }
        let a1 = RootSystem::build(Series::A, 1).unwrap();
        assert_eq!(a1.dual_weight(&Weight(vec![3])).unwrap(), Weight(vec![3]));
        let a2 = RootSystem::build(Series::A, 2).unwrap();
        assert_eq!(
            a2.dual_weight(&Weight(vec![1, 0])).unwrap(),
            Weight(vec![0, 1])
        );
    }

    #[test]
    fn from_cartan_rejects_affine() {
        // affine A1: root strings never close
        let err = RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]], "affine".into());
        assert!(err.is_err());
    }

    #[test]
    fn rank_zero_system() {
        let rs = RootSystem::from_cartan(vec![], "L0".into()).unwrap();
        assert_eq!(rs.num_roots(), 0);
        assert_eq!(rs.weyl().unwrap().len(), 1);
        let m = rs.freudenthal_multiplicities(&Weight(vec![])).unwrap();
        assert_eq!(m.total(), 1);
    }
}
