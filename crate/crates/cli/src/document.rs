use std::fmt::Write as _;

use rephom_core::{ModulePresentation, PolyMatrix, RingSpec};
use serde::Serialize;

use crate::args::{Command, Request};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub request: RequestRecord,
    /// Absent when the budget ran out before the ring and complex were built.
    pub ring: Option<RingRecord>,
    pub complex: Option<ComplexRecord>,
    pub homology: Vec<DegreeRecord>,
    pub truncated: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RequestRecord {
    pub subcommand: String,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alg: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lie: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link_model: Option<String>,
    pub field: String,
    pub prune: bool,
    pub hilbert: Option<u32>,
    pub fitting: bool,
    pub time_budget: Option<u64>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct VariableRecord {
    pub name: String,
    pub degree: u32,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RingRecord {
    pub field: String,
    pub variables: Vec<VariableRecord>,
    pub relations: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ComplexRecord {
    pub ranks: Vec<usize>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct MatrixRecord {
    pub rows: usize,
    pub cols: usize,
    /// Row-major.
    pub entries: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct DegreeRecord {
    pub degree: i64,
    pub generator_rank: usize,
    pub relations: MatrixRecord,
    pub zero: bool,
    pub hilbert: Option<Vec<u64>>,
    /// `fitting[i]` generates `Fitt_i`.
    pub fitting: Option<Vec<Vec<String>>>,
}

impl RequestRecord {
    pub fn from_request(r: &Request) -> RequestRecord {
        let mut rec = RequestRecord {
            subcommand: r.command.name().to_string(),
            size: 0,
            genus: None,
            group: None,
            alg: None,
            lie: None,
            link: None,
            link_model: None,
            field: r.field.to_string(),
            prune: r.prune,
            hilbert: r.hilbert,
            fitting: r.fitting,
            time_budget: r.time_budget,
        };
        match &r.command {
            Command::SurfaceGroup { size, genus, group } => {
                rec.size = *size;
                rec.genus = Some(*genus);
                rec.group = Some(group.to_string());
            }
            Command::SurfaceAlg { size, genus, alg } => {
                rec.size = *size;
                rec.genus = Some(*genus);
                rec.alg = Some(alg.to_string());
            }
            Command::SurfaceLie { size, lie } => {
                rec.size = *size;
                rec.lie = Some(lie.to_string());
            }
            Command::Link {
                size,
                link,
                group,
                model,
            } => {
                rec.size = *size;
                rec.link = Some(link.to_string());
                rec.group = Some(group.to_string());
                rec.link_model = Some(model.to_string());
            }
        }
        rec
    }
}

impl RingRecord {
    pub fn from_ring(ring: &RingSpec) -> RingRecord {
        RingRecord {
            field: ring.field().to_string(),
            variables: ring
                .variables()
                .iter()
                .map(|v| VariableRecord {
                    name: v.name.clone(),
                    degree: v.degree,
                })
                .collect(),
            relations: ring.relations().iter().map(|r| ring.render(r)).collect(),
        }
    }
}

impl MatrixRecord {
    pub fn from_matrix(m: &PolyMatrix, ring: &RingSpec) -> MatrixRecord {
        MatrixRecord {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|p| ring.render(p)).collect(),
        }
    }
}

/// Per-degree facts computed alongside the presentation.
pub struct DegreeFacts<'a> {
    pub module: &'a ModulePresentation,
    pub zero: bool,
    pub hilbert: Option<Vec<u64>>,
    pub fitting: Option<Vec<Vec<rephom_core::Polynomial>>>,
}

impl DegreeRecord {
    pub fn new(f: &DegreeFacts, ring: &RingSpec) -> DegreeRecord {
        DegreeRecord {
            degree: f.module.homological_degree(),
            generator_rank: f.module.generator_rank(),
            relations: MatrixRecord::from_matrix(f.module.relations(), ring),
            zero: f.zero,
            hilbert: f.hilbert.clone(),
            fitting: f.fitting.as_ref().map(|ideals| {
                ideals
                    .iter()
                    .map(|gens| gens.iter().map(|g| ring.render(g)).collect())
                    .collect()
            }),
        }
    }
}

/// `H_i = cokernel | ... |` blocks, one per computed degree.
pub fn render_text(ring: &RingSpec, facts: &[DegreeFacts], truncated: bool) -> String {
    let mut out = String::new();
    for f in facts {
        let label = format!("H_{} = ", f.module.homological_degree());
        let pad = " ".repeat(label.len());
        let m = f.module;
        if f.zero {
            let _ = writeln!(out, "{label}0");
        } else if m.is_free() {
            let _ = writeln!(out, "{label}({})^{}", ring_name(ring), m.generator_rank());
        } else {
            let rows = m.relations().render_rows(ring, true);
            for (k, row) in rows.iter().enumerate() {
                if k == 0 {
                    let _ = writeln!(out, "{label}cokernel {row}");
                } else {
                    let _ = writeln!(out, "{pad}         {row}");
                }
            }
        }
        if let Some(h) = &f.hilbert {
            let vals: Vec<String> = h.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "{pad}hilbert: {}", vals.join(" "));
        }
        if let Some(fit) = &f.fitting {
            for (i, gens) in fit.iter().enumerate() {
                let gens: Vec<String> = gens.iter().map(|g| ring.render(g)).collect();
                let _ = writeln!(out, "{pad}Fitt_{i} = ({})", gens.join(", "));
            }
        }
    }
    if truncated {
        out.push_str(&crate::run::truncation_marker(facts.len()));
    }
    out
}

fn ring_name(ring: &RingSpec) -> String {
    let names: Vec<&str> = ring.variable_names().collect();
    let mut s = format!("{}[{}]", ring.field(), names.join(", "));
    if ring.has_relations() {
        let rels: Vec<String> = ring
            .relations()
            .iter()
            .map(|r| ring.render_compact(r))
            .collect();
        let _ = write!(s, "/({})", rels.join(", "));
    }
    s
}
