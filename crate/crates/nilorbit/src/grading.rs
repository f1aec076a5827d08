//! Eigenspace gradings of a root system induced by a weighted Dynkin diagram.
//!
//! The diagram labels determine a dominant coweight h (the semisimple member
//! of the standard triple); pairing roots against h grades the algebra. The
//! zero piece is the Levi, the positive pieces the nilradical, and the pieces
//! in degree >= 2 span the space whose symmetric algebra carries the orbit's
//! function ring.

use std::collections::BTreeMap;

use crate::linalg;
use crate::rootsys::{self, Root, RootSystem, Weight, WeylElement};
use crate::Error;

/// A coweight in simple-coroot coordinates: `h = sum c_i h_{alpha_i}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    /// `w(h)`, an integer for every weight-lattice element.
    pub fn pairing(&self, w: &Weight) -> i64 {
        w.pair(&self.0)
    }
}

/// An ambient weight together with its grading degree and its pairings
/// against the Levi's simple coroots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LeviWeight {
    /// Ambient fundamental-weight coordinates.
    pub full: Weight,
    /// Pairing with h (the grading degree; the central character direction).
    pub h_value: i64,
    /// Pairings with the Levi's simple coroots.
    pub levi_coords: Vec<i64>,
}

impl LeviWeight {
    pub fn is_levi_dominant(&self) -> bool {
        self.levi_coords.iter().all(|&c| c >= 0)
    }
}

/// The Levi subgroup's combinatorial data, extracted from the zero piece.
#[derive(Clone, Debug)]
pub struct LeviData {
    /// Ambient indices of the simple roots labeled zero.
    pub node_indices: Vec<usize>,
    /// Abstract root system of the semisimple part (rank = node count).
    pub system: RootSystem,
    /// The Levi Weyl group acting on ambient coordinates, sorted by
    /// (length, matrix); identity first.
    pub elements: Vec<WeylElement>,
    /// Sum of the Levi's positive roots, in ambient coordinates.
    pub two_rho: Weight,
    /// Ambient fundamental coordinates of the Levi simple roots.
    pub simple_fund: Vec<Weight>,
    /// The grading coweight (Levi-invariant central direction).
    pub h: Coweight,
}

impl LeviData {
    pub fn rank(&self) -> usize {
        self.node_indices.len()
    }

    /// Restrict an ambient weight to Levi coordinates.
    pub fn restrict(&self, w: &Weight) -> Vec<i64> {
        self.node_indices.iter().map(|&i| w.0[i]).collect()
    }

    /// Attach grading and Levi data to an ambient weight.
    pub fn levi_weight(&self, w: &Weight) -> LeviWeight {
        LeviWeight {
            h_value: self.h.pairing(w),
            levi_coords: self.restrict(w),
            full: w.clone(),
        }
    }
}

/// The grading of a root system by a coweight.
#[derive(Clone, Debug)]
pub struct Grading {
    ambient_label: String,
    ambient_rank: usize,
    h: Coweight,
    labels: Vec<i64>,
    pieces: BTreeMap<i64, Vec<Root>>,
    levi: LeviData,
    o_weights: Vec<LeviWeight>,
}

/// Dimension audit of the grading and the induced bundle space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DimsReport {
    pub dim_g: usize,
    pub dim_levi: usize,
    pub dim_nilradical: usize,
    pub dim_parabolic: usize,
    /// dim of the flag variety K/Q.
    pub dim_flag: usize,
    pub dim_o: usize,
    /// dim of the bundle total space: dim K/Q + dim o.
    pub dim_z: usize,
}

/// Solve for the coweight h with `alpha_j(h) = labels[j]` for every simple
/// root. Labels must be non-negative; a non-integral solution means the
/// diagram is not a weighted Dynkin diagram under this convention.
pub fn coweight_from_diagram(rs: &RootSystem, labels: &[i64]) -> Result<Coweight, Error> {
    if labels.len() != rs.rank() {
        return Err(Error::InvalidInput(format!(
            "diagram has {} labels for rank {}",
            labels.len(),
            rs.rank()
        )));
    }
    if labels.iter().any(|&l| l < 0) {
        return Err(Error::InvalidInput(
            "diagram labels must be non-negative".into(),
        ));
    }
    // Genuine weighted diagrams use labels in {0,1,2}; anything integral is
    // accepted, but a hard cap keeps downstream pairings far from overflow.
    if labels.iter().any(|&l| l > 1_000_000) {
        return Err(Error::InvalidInput(
            "diagram labels above 1000000 are not supported".into(),
        ));
    }
    let coords = linalg::solve_integral(rs.cartan(), labels).ok_or_else(|| {
        Error::NotInCoweightLattice(format!(
            "labels {labels:?} have no integral coroot solution"
        ))
    })?;
    Ok(Coweight(coords))
}

/// Grade all roots by their pairing with h and extract the Levi and the
/// degree >= 2 weight data.
pub fn grade_roots(rs: &RootSystem, h: &Coweight) -> Result<Grading, Error> {
    let mut pieces: BTreeMap<i64, Vec<Root>> = BTreeMap::new();
    for root in rs.all_roots() {
        pieces.entry(h.pairing(&root.fund)).or_default().push(root);
    }
    for list in pieces.values_mut() {
        list.sort_by_key(|r| r.simple.clone());
    }

    let labels: Vec<i64> = rs.simple_roots().iter().map(|a| h.pairing(a)).collect();
    let node_indices: Vec<usize> = labels
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 0)
        .map(|(i, _)| i)
        .collect();

    let sub_cartan: Vec<Vec<i64>> = node_indices
        .iter()
        .map(|&i| node_indices.iter().map(|&j| rs.cartan()[i][j]).collect())
        .collect();
    let system = RootSystem::from_cartan(sub_cartan, format!("{}-levi", rs.label()))?;

    // For a dominant coweight, the zero-labeled simple roots generate every
    // zero-graded root.
    let zero_count = pieces.get(&0).map_or(0, |v| v.len());
    assert_eq!(
        zero_count,
        system.num_roots(),
        "Levi subsystem must account for the whole zero piece"
    );

    let elements = enumerate_subgroup(rs, &node_indices)?;
    let two_rho = pieces
        .get(&0)
        .map(|v| {
            v.iter()
                .filter(|r| r.is_positive())
                .fold(Weight::zero(rs.rank()), |acc, r| acc.add(&r.fund))
        })
        .unwrap_or_else(|| Weight::zero(rs.rank()));
    let simple_fund: Vec<Weight> = node_indices
        .iter()
        .map(|&i| rs.simple_roots()[i].clone())
        .collect();

    let levi = LeviData {
        node_indices,
        system,
        elements,
        two_rho,
        simple_fund,
        h: h.clone(),
    };

    let mut o_weights: Vec<LeviWeight> = pieces
        .iter()
        .filter(|(&m, _)| m >= 2)
        .flat_map(|(_, roots)| roots.iter().map(|r| levi.levi_weight(&r.fund)))
        .collect();
    o_weights.sort_by_key(|w| (w.h_value, w.full.clone()));

    Ok(Grading {
        ambient_label: rs.label().to_string(),
        ambient_rank: rs.rank(),
        h: h.clone(),
        labels,
        pieces,
        levi,
        o_weights,
    })
}

/// The parabolic subgroup of W generated by the simple reflections at the
/// given node indices, acting on ambient coordinates. Word lengths are
/// subgroup lengths, which agree with ambient ones for standard parabolics.
fn enumerate_subgroup(rs: &RootSystem, nodes: &[usize]) -> Result<Vec<WeylElement>, Error> {
    let gens: Vec<Vec<Vec<i64>>> = nodes
        .iter()
        .map(|&i| rootsys::simple_reflection_matrix(rs.cartan(), i))
        .collect();
    rootsys::enumerate_reflection_group(rs.rank(), &gens)
}

impl Grading {
    pub fn ambient_label(&self) -> &str {
        &self.ambient_label
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn h(&self) -> &Coweight {
        &self.h
    }

    /// The diagram labels recovered from h (round-trips the construction).
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn pieces(&self) -> &BTreeMap<i64, Vec<Root>> {
        &self.pieces
    }

    pub fn levi(&self) -> &LeviData {
        &self.levi
    }

    /// Weights of the degree >= 2 space, sorted by (degree, coordinates).
    pub fn o_space(&self) -> &[LeviWeight] {
        &self.o_weights
    }

    /// True for the grading this crate's model verification targets: the
    /// G2 diagram with labels (1, 0).
    pub fn is_g2_model(&self) -> bool {
        self.ambient_label == "G2" && self.labels == [1, 0]
    }

    pub fn dims_report(&self) -> DimsReport {
        let total_roots: usize = self.pieces.values().map(Vec::len).sum();
        let zero = self.pieces.get(&0).map_or(0, Vec::len);
        let positive: usize = self
            .pieces
            .iter()
            .filter(|(&m, _)| m > 0)
            .map(|(_, v)| v.len())
            .sum();
        let dim_g = self.ambient_rank + total_roots;
        let dim_levi = self.ambient_rank + zero;
        let dim_parabolic = dim_levi + positive;
        let dim_flag = dim_g - dim_parabolic;
        let dim_o = self.o_weights.len();
        DimsReport {
            dim_g,
            dim_levi,
            dim_nilradical: positive,
            dim_parabolic,
            dim_flag,
            dim_o,
            dim_z: dim_flag + dim_o,
        }
    }
}

/// Convenience: grading of the G2 system by the (1,0) diagram.
pub fn g2_model_grading(rs: &RootSystem) -> Grading {
    let h = coweight_from_diagram(rs, &[1, 0]).expect("the model diagram is integral");
    grade_roots(rs, &h).expect("the model grading always builds")
}
