//! Ground-truth registry: the family tables, the 26 Fano polygons, the
//! defective candidates, degenerations and MMP data, shipped as JSON.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{parse_family_name, parse_rat};
use crate::lattice::Rat;
use crate::mmp::{parse_path, MMPState, Prune, MmpRoot};

pub const EMBEDDED: &str = include_str!("../data/registry.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Registry {
    pub families: Vec<FamilyRecord>,
    pub polygons: Vec<PolygonRecord>,
    pub defective: Vec<DefectiveRow>,
    pub degree_bounds: Vec<DegreeBound>,
    pub degenerations: Vec<Degeneration>,
    pub mmp: Vec<MmpRecord>,
    pub excluded_by_mmp: Vec<KdPair>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyRecord {
    pub name: String,
    pub fano_index: i64,
    pub h0: i64,
    pub r: i64,
    pub moduli: i64,
    /// "0" or "Z/n": fundamental group of the smooth locus
    pub pi1: String,
    pub toric_degeneration: bool,
    pub construction: Construction,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Construction {
    /// Complete intersection in a GIT toric variety; bundles and nef
    /// generators are column vectors.
    ToricCi { weights: Vec<Vec<i64>>, bundles: Vec<Vec<i64>>, nef: Vec<Vec<i64>> },
    WeightedGrassmannian { doubled_weights: Vec<i64>, bundles: Vec<i64> },
    Pfaffian(PfaffianData),
    Nonsimplicial(NonsimplicialData),
    /// Quotient of a toric surface by μ_order, given by its cover
    ToricQuotient { weights: Vec<Vec<i64>>, nef: Vec<Vec<i64>>, polygon: u32, order: i64 },
    /// Hypersurface in P³ modulo μ_order
    CubicQuotient { order: i64, weights: Vec<i64>, degree: i64, invariant_monomials: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PfaffianData {
    pub labels: Vec<String>,
    pub weights: Vec<Vec<i64>>,
    /// indices of the columns generating the nef cone
    pub nef_columns: Vec<usize>,
    pub bundles: Vec<Vec<i64>>,
    pub twist: Vec<i64>,
    /// strict upper triangle of the antisymmetric matrix, row by row
    pub upper: Vec<Vec<String>>,
    pub equations: Vec<String>,
    pub anticanonical: Vec<i64>,
    pub chart_count: usize,
    pub singular_charts: Vec<ChartCensus>,
    pub on_surface: OnSurface,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartCensus {
    pub order: i64,
    pub weights: Vec<i64>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OnSurface {
    pub order: i64,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NonsimplicialData {
    pub labels: Vec<String>,
    /// x_0..x_4 as monomials in the Cox coordinates
    pub basis: Vec<String>,
    pub simplicial_chart: SimplicialChart,
    pub octahedral_chart: OctahedralChart,
    /// z_0..z_4
    pub embedding: Vec<String>,
    /// weights of x and z in P(2^5, 3^5)
    pub embedding_degrees: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialChart {
    pub cone: Vec<String>,
    pub index: i64,
    pub weights: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OctahedralChart {
    pub cone: Vec<String>,
    pub index: i64,
    pub torus_weights: Vec<Vec<i64>>,
    pub mu2_weights: Vec<i64>,
    pub cube: Vec<String>,
    pub cube_mu2_weights: Vec<i64>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonRecord {
    pub id: u32,
    pub vertices: Vec<[i64; 2]>,
    pub n: i64,
    pub k: i64,
    pub deforms_to: String,
}

/// A row of the "necessarily defective possibilities" table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefectiveRow {
    pub k: i64,
    pub d: String,
    pub r: i64,
    pub sigma_at_least: i64,
    pub occurs: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeBound {
    pub k: i64,
    pub d_min: String,
    pub d_max: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Degeneration {
    pub polygon: u32,
    pub family: String,
    pub source_labels: Vec<String>,
    /// lattice points of the polygon the source monomials come from
    pub source: Vec<[i64; 2]>,
    pub ambient_labels: Vec<String>,
    pub ambient_weights: Vec<Vec<i64>>,
    pub substitution: std::collections::BTreeMap<String, String>,
    pub relation: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MmpRecord {
    pub family: String,
    pub sequences: Vec<String>,
    pub prunes: Vec<PruneRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PruneRecord {
    pub path: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KdPair {
    pub k: i64,
    pub d: String,
}

/// Prune reason codes and the prose they stand for.
pub const PRUNE_REASONS: &[(&str, &str)] = &[
    ("available-earlier", "the contraction would already have been available one step earlier"),
    ("smaller-k", "the branch continues as the settled tree for fewer 1/3(1,1) points, whose next move was available earlier"),
    ("k4-no-e6", "k=4 case: \"we claim that (E.6) does not occur\""),
    ("k4-case3", "k=4 Case 3: (E.4)+(E.4)+(E.5)+(E.5) does not occur"),
    ("figure-k2", "k=2 tree of possibilities: branch eliminated in the figure"),
    ("figure-k3", "k=3 tree of possibilities: branch eliminated in the figure"),
    ("figure-k5", "k=5 tree of possibilities: branch eliminated in the figure"),
];

pub fn prune_citation(code: &str) -> Option<&'static str> {
    PRUNE_REASONS.iter().find(|(c, _)| *c == code).map(|(_, t)| *t)
}

fn schema(record: impl Into<String>, field: &str, msg: impl Into<String>) -> Error {
    Error::SchemaError { record: record.into(), field: field.to_string(), msg: msg.into() }
}

impl Registry {
    pub fn embedded() -> Result<Self> {
        Self::from_json(EMBEDDED)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {}", path.display(), e)))?;
        Self::from_json(&s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let reg: Registry = serde_json::from_str(s).map_err(|e| schema("registry", "json", e.to_string()))?;
        reg.validate()?;
        Ok(reg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("registry serializes")
    }

    pub fn family(&self, name: &str) -> Option<&FamilyRecord> {
        self.families.iter().find(|f| f.name == name)
    }

    pub fn polygon(&self, id: u32) -> Option<&PolygonRecord> {
        self.polygons.iter().find(|p| p.id == id)
    }

    /// Structural checks only; mathematical consistency is `verify`'s job.
    pub fn validate(&self) -> Result<()> {
        if self.families.len() != 29 {
            return Err(schema("families", "len", format!("expected 29 records, found {}", self.families.len())));
        }
        let mut names = BTreeSet::new();
        for f in &self.families {
            let (series, _, _) = parse_family_name(&f.name).map_err(|e| schema(&f.name, "name", e.to_string()))?;
            if !matches!(series, 'X' | 'B' | 'S') {
                return Err(schema(&f.name, "name", "series must be X, B or S"));
            }
            if !names.insert(f.name.clone()) {
                return Err(schema(&f.name, "name", "duplicate family name"));
            }
            if f.pi1 != "0" && !f.pi1.strip_prefix("Z/").is_some_and(|n| n.parse::<u32>().is_ok_and(|n| n > 1)) {
                return Err(schema(&f.name, "pi1", "expected \"0\" or \"Z/n\""));
            }
            if f.fano_index < 1 {
                return Err(schema(&f.name, "fano_index", "must be positive"));
            }
        }
        if self.polygons.len() != 26 {
            return Err(schema("polygons", "len", format!("expected 26 records, found {}", self.polygons.len())));
        }
        let mut ids = BTreeSet::new();
        for p in &self.polygons {
            let rec = format!("polygon {}", p.id);
            if !(1..=26).contains(&p.id) || !ids.insert(p.id) {
                return Err(schema(&rec, "id", "ids must be 1..26 and unique"));
            }
            if !names.contains(&p.deforms_to) {
                return Err(schema(&rec, "deforms_to", format!("unknown family {}", p.deforms_to)));
            }
        }
        for row in &self.defective {
            parse_rat(&row.d).map_err(|e| schema(format!("defective k={}", row.k), "d", e.to_string()))?;
        }
        for b in &self.degree_bounds {
            for (field, v) in [("d_min", &b.d_min), ("d_max", &b.d_max)] {
                parse_rat(v).map_err(|e| schema(format!("degree bound k={}", b.k), field, e.to_string()))?;
            }
        }
        for p in &self.excluded_by_mmp {
            parse_rat(&p.d).map_err(|e| schema(format!("excluded k={}", p.k), "d", e.to_string()))?;
        }
        for g in &self.degenerations {
            let rec = format!("degeneration P{}", g.polygon);
            if !names.contains(&g.family) {
                return Err(schema(&rec, "family", format!("unknown family {}", g.family)));
            }
            if g.source.len() != g.source_labels.len() {
                return Err(schema(&rec, "source", "one lattice point per source label"));
            }
        }
        for m in &self.mmp {
            if !names.contains(&m.family) {
                return Err(schema(&m.family, "mmp.family", "unknown family"));
            }
            for s in &m.sequences {
                parse_path(s).map_err(|e| schema(&m.family, "mmp.sequences", e.to_string()))?;
            }
            for p in &m.prunes {
                parse_path(&p.path).map_err(|e| schema(&m.family, "mmp.prunes.path", e.to_string()))?;
                if prune_citation(&p.reason).is_none() {
                    return Err(schema(&m.family, "mmp.prunes.reason", format!("unknown reason code {:?}", p.reason)));
                }
            }
        }
        Ok(())
    }

    /// (k, K², r) of a family, K² from the name.
    pub fn family_kd(&self, f: &FamilyRecord) -> (i64, Rat) {
        let (_, k, d) = parse_family_name(&f.name).expect("validated");
        (k, d)
    }

    /// Roots of the no-floating-curve theorem, with state read off the table row.
    pub fn mmp_roots(&self) -> Result<Vec<MmpRoot>> {
        let mut out = Vec::new();
        for m in &self.mmp {
            let f = self.family(&m.family).expect("validated");
            let (k, d) = self.family_kd(f);
            let k = u32::try_from(k).map_err(|_| schema(&f.name, "name", "k must be positive"))?;
            let state = MMPState::from_family(k, &d, f.r)?;
            let sequences = m.sequences.iter().map(|s| parse_path(s)).collect::<Result<Vec<_>>>()?;
            let prunes = m
                .prunes
                .iter()
                .map(|p| Ok(Prune { path: parse_path(&p.path)?, citation: prune_citation(&p.reason).expect("validated").to_string() }))
                .collect::<Result<Vec<_>>>()?;
            out.push(MmpRoot { family: m.family.clone(), state, sequences, prunes });
        }
        Ok(out)
    }
}
