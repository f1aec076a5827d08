//! Machine-readable report schemas.
//!
//! Every report embeds the Cartan matrix and the diagram it was computed
//! from, so results are auditable without the invoking command line. Field
//! order is fixed by declaration, values are integers, strings, and
//! booleans only, and serialization is deterministic: a report re-parsed
//! and re-serialized is byte-identical.

use serde::{Deserialize, Serialize};

use crate::grading::Grading;
use crate::multiplicity::{MultiplicityReport, VerifyOutcome};
use crate::rootsys::RootSystem;
use crate::sym::LeviConstituent;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermReport {
    pub w_length: u32,
    pub sign: i64,
    pub mu_fund: Vec<i64>,
    pub k: u32,
    pub q: i64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComputeReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub cartan: Vec<Vec<i64>>,
    pub diagram: Vec<i64>,
    pub lambda: Vec<i64>,
    pub lambda_dual: Vec<i64>,
    pub k_bound: u32,
    pub total: i64,
    pub terms: Vec<TermReport>,
}

impl ComputeReport {
    pub fn build(rs: &RootSystem, g: &Grading, rep: &MultiplicityReport) -> ComputeReport {
        ComputeReport {
            type_label: rs.label().to_string(),
            cartan: rs.cartan().to_vec(),
            diagram: g.labels().to_vec(),
            lambda: rep.lambda.0.clone(),
            lambda_dual: rep.lambda_dual.0.clone(),
            k_bound: rep.k_bound,
            total: rep.total,
            terms: rep
                .terms
                .iter()
                .map(|t| TermReport {
                    w_length: t.w.length,
                    sign: t.w.sign,
                    mu_fund: t.mu.full.0.clone(),
                    k: t.degree,
                    q: t.q,
                })
                .collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PieceReport {
    pub degree: i64,
    /// Simple-root coordinates of the roots in this eigenspace.
    pub roots: Vec<Vec<i64>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OWeightReport {
    pub fund: Vec<i64>,
    pub h_value: i64,
    pub levi: Vec<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DimsJson {
    pub dim_g: usize,
    pub dim_levi: usize,
    pub dim_nilradical: usize,
    pub dim_parabolic: usize,
    pub dim_flag: usize,
    pub dim_o: usize,
    pub dim_z: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GradingReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub cartan: Vec<Vec<i64>>,
    pub diagram: Vec<i64>,
    /// The coweight h in simple-coroot coordinates.
    pub h: Vec<i64>,
    pub pieces: Vec<PieceReport>,
    pub levi_roots: Vec<Vec<i64>>,
    pub o_weights: Vec<OWeightReport>,
    pub dims: DimsJson,
}

impl GradingReport {
    pub fn build(rs: &RootSystem, g: &Grading) -> GradingReport {
        let dims = g.dims_report();
        GradingReport {
            type_label: rs.label().to_string(),
            cartan: rs.cartan().to_vec(),
            diagram: g.labels().to_vec(),
            h: g.h().0.clone(),
            pieces: g
                .pieces()
                .iter()
                .map(|(&degree, roots)| PieceReport {
                    degree,
                    roots: roots.iter().map(|r| r.simple.clone()).collect(),
                })
                .collect(),
            levi_roots: g
                .pieces()
                .get(&0)
                .map(|v| v.iter().map(|r| r.simple.clone()).collect())
                .unwrap_or_default(),
            o_weights: g
                .o_space()
                .iter()
                .map(|w| OWeightReport {
                    fund: w.full.0.clone(),
                    h_value: w.h_value,
                    levi: w.levi_coords.clone(),
                })
                .collect(),
            dims: DimsJson {
                dim_g: dims.dim_g,
                dim_levi: dims.dim_levi,
                dim_nilradical: dims.dim_nilradical,
                dim_parabolic: dims.dim_parabolic,
                dim_flag: dims.dim_flag,
                dim_o: dims.dim_o,
                dim_z: dims.dim_z,
            },
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerifyRowReport {
    pub lambda: Vec<i64>,
    pub multiplicity: i64,
    pub bruteforce: i64,
    pub agree: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub cartan: Vec<Vec<i64>>,
    pub diagram: Vec<i64>,
    pub bound: u32,
    pub rows: Vec<VerifyRowReport>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn build(rs: &RootSystem, g: &Grading, outcome: &VerifyOutcome) -> VerifyReport {
        VerifyReport {
            type_label: rs.label().to_string(),
            cartan: rs.cartan().to_vec(),
            diagram: g.labels().to_vec(),
            bound: outcome.bound,
            rows: outcome
                .rows
                .iter()
                .map(|r| VerifyRowReport {
                    lambda: r.lambda.0.clone(),
                    multiplicity: r.multiplicity,
                    bruteforce: r.bruteforce,
                    agree: r.agree,
                })
                .collect(),
            pass: outcome.pass,
        }
    }

    /// CSV rendering: `lambda1,..,lambdaN,multiplicity,bruteforce,agree`.
    pub fn to_csv(&self) -> String {
        let rank = self.diagram.len();
        let mut out = String::new();
        for i in 1..=rank {
            out.push_str(&format!("lambda{i},"));
        }
        out.push_str("multiplicity,bruteforce,agree\n");
        for row in &self.rows {
            for c in &row.lambda {
                out.push_str(&format!("{c},"));
            }
            out.push_str(&format!(
                "{},{},{}\n",
                row.multiplicity, row.bruteforce, row.agree
            ));
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkConstituentReport {
    pub mu_fund: Vec<i64>,
    pub mult: u64,
    pub k: u32,
    pub q: i64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkRowReport {
    pub k: u32,
    pub multiset_size: u64,
    pub constituents: Vec<SkConstituentReport>,
    pub equal: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkTableReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub cartan: Vec<Vec<i64>>,
    pub diagram: Vec<i64>,
    pub k_max: u32,
    pub rows: Vec<SkRowReport>,
    pub all_equal: bool,
}

impl SkTableReport {
    pub fn row(
        k: u32,
        multiset_size: u64,
        constituents: &[LeviConstituent],
        equal: bool,
    ) -> SkRowReport {
        SkRowReport {
            k,
            multiset_size,
            constituents: constituents
                .iter()
                .map(|c| SkConstituentReport {
                    mu_fund: c.mu.full.0.clone(),
                    mult: c.multiplicity,
                    k,
                    q: c.mu.h_value - 2 * k as i64,
                })
                .collect(),
            equal,
        }
    }

    /// CSV rendering: one row per degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,multiset_size,constituents,equal\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.k,
                row.multiset_size,
                row.constituents.len(),
                row.equal
            ));
        }
        out
    }

    pub fn build(
        rs: &RootSystem,
        g: &Grading,
        k_max: u32,
        rows: Vec<SkRowReport>,
        all_equal: bool,
    ) -> SkTableReport {
        SkTableReport {
            type_label: rs.label().to_string(),
            cartan: rs.cartan().to_vec(),
            diagram: g.labels().to_vec(),
            k_max,
            rows,
            all_equal,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::g2_model_grading;
    use crate::multiplicity::multiplicity;
    use crate::rootsys::Weight;

    #[test]
    fn compute_report_round_trips_byte_identically() {
        let rs = RootSystem::g2();
        let g = g2_model_grading(&rs);
        let rep = multiplicity(&rs, &g, &Weight(vec![2, 1])).unwrap();
        let report = ComputeReport::build(&rs, &g, &rep);
        let json = serde_json::to_string(&report).unwrap();
        let parsed: ComputeReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(serde_json::to_string(&parsed).unwrap(), json);
        // fixed key order, starting with the self-describing context
        assert!(json.starts_with("{\"type\":\"G2\",\"cartan\":[[2,-1],[-3,2]],\"diagram\":[1,0]"));
    }

    #[test]
    fn verify_csv_header() {
        let rs = RootSystem::g2();
        let g = g2_model_grading(&rs);
        let outcome = crate::multiplicity::verify_model(&rs, &g, 1).unwrap();
        let csv = VerifyReport::build(&rs, &g, &outcome).to_csv();
        assert!(csv.starts_with("lambda1,lambda2,multiplicity,bruteforce,agree\n"));
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.lines().skip(1).all(|l| l.ends_with(",1,1,true")));
    }
}
