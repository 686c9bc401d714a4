use std::time::{Duration, Instant};

use rephom_core::{
    fitting_ideals_with, hilbert_function, is_zero_module_with, link_rep_homology_with,
    surface_rep_homology_alg_with, surface_rep_homology_group_with, surface_rep_homology_lie_with,
    Budget, Error, RepHomology, RepOptions,
};

use crate::args::{Command, Format, Request};
use crate::document::{
    render_text, ComplexRecord, DegreeFacts, DegreeRecord, RequestRecord, ResultDocument,
    RingRecord, SCHEMA_VERSION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

/// Set to anything but `0` or the empty string for progress lines on stderr.
pub const VERBOSE_ENV: &str = "REPHOM_VERBOSE";

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
    pub document: Option<ResultDocument>,
}

fn compute(r: &Request, options: &RepOptions) -> Result<RepHomology, Error> {
    match &r.command {
        Command::SurfaceGroup { size, genus, group } => {
            surface_rep_homology_group_with(*size, *genus, *group, options)
        }
        Command::SurfaceAlg { size, genus, alg } => {
            surface_rep_homology_alg_with(*size, *genus, *alg, options)
        }
        Command::SurfaceLie { size, lie } => surface_rep_homology_lie_with(*size, *lie, options),
        Command::Link {
            size,
            link,
            group,
            model,
        } => link_rep_homology_with(link, *size, *group, *model, options),
    }
}

fn verbose_from_env() -> bool {
    std::env::var(VERBOSE_ENV).is_ok_and(|v| !v.is_empty() && v != "0")
}

struct Progress {
    on: bool,
    start: Instant,
    lines: String,
}

impl Progress {
    fn note(&mut self, msg: impl AsRef<str>) {
        if self.on {
            let ms = self.start.elapsed().as_millis();
            self.lines
                .push_str(&format!("[{ms:>8} ms] {}\n", msg.as_ref()));
        }
    }
}

/// Runs `r`, reading `REPHOM_VERBOSE` from the environment.
pub fn run(r: &Request) -> Outcome {
    run_with_verbosity(r, verbose_from_env())
}

pub fn run_with_verbosity(r: &Request, verbose: bool) -> Outcome {
    let mut progress = Progress {
        on: verbose,
        start: Instant::now(),
        lines: String::new(),
    };
    let budget = r.time_budget.map_or_else(Budget::unlimited, |s| {
        Budget::with_timeout(Duration::from_secs(s))
    });
    let options = RepOptions {
        field: r.field,
        prune: r.prune,
        budget,
    };
    progress.note(format!("start {}", r.command.name()));

    let result = match compute(r, &options) {
        Ok(res) => res,
        Err(Error::Timeout) => {
            progress.note("budget exhausted before homology");
            let document = ResultDocument {
                schema_version: SCHEMA_VERSION,
                request: RequestRecord::from_request(r),
                ring: None,
                complex: None,
                homology: Vec::new(),
                truncated: true,
            };
            let stdout = match r.format {
                Format::Text => truncation_marker(0),
                Format::Json => to_json(&document),
            };
            return Outcome {
                stdout,
                stderr: progress.lines + "time budget exceeded; output is partial\n",
                exit_code: EXIT_TIMEOUT,
                document: Some(document),
            };
        }
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: progress.lines + &format!("error: {e}\n"),
                exit_code: EXIT_ERROR,
                document: None,
            }
        }
    };
    progress.note(format!(
        "complex ranks {:?}, {} homology module(s)",
        result.complex.ranks(),
        result.homology.len()
    ));

    let mut truncated = result.truncated;
    let mut facts = Vec::with_capacity(result.homology.len());
    for module in &result.homology {
        let zero = match is_zero_module_with(module, &budget) {
            Ok(z) => z,
            Err(Error::Timeout) => {
                truncated = true;
                break;
            }
            Err(e) => {
                return Outcome {
                    stdout: String::new(),
                    stderr: progress.lines + &format!("error: {e}\n"),
                    exit_code: EXIT_ERROR,
                    document: None,
                }
            }
        };
        let hilbert = match r.hilbert {
            Some(d) => hilbert_function(module, d).ok().map(|h| h.values),
            None => None,
        };
        let fitting = if r.fitting {
            match fitting_ideals_with(module, &budget) {
                Ok(f) => Some(f),
                Err(Error::Timeout) => {
                    truncated = true;
                    break;
                }
                Err(_) => None,
            }
        } else {
            None
        };
        progress.note(format!(
            "H_{}: rank {}, zero {zero}",
            module.homological_degree(),
            module.generator_rank()
        ));
        facts.push(DegreeFacts {
            module,
            zero,
            hilbert,
            fitting,
        });
    }

    let ring = &result.ring;
    let document = ResultDocument {
        schema_version: SCHEMA_VERSION,
        request: RequestRecord::from_request(r),
        ring: Some(RingRecord::from_ring(ring)),
        complex: Some(ComplexRecord {
            ranks: result.complex.ranks().to_vec(),
        }),
        homology: facts.iter().map(|f| DegreeRecord::new(f, ring)).collect(),
        truncated,
    };
    let stdout = match r.format {
        Format::Text => render_text(ring, &facts, truncated),
        Format::Json => to_json(&document),
    };
    progress.note("done");
    let mut stderr = progress.lines;
    if truncated {
        stderr.push_str("time budget exceeded; output is partial\n");
    }
    Outcome {
        stdout,
        stderr,
        exit_code: if truncated { EXIT_TIMEOUT } else { EXIT_OK },
        document: Some(document),
    }
}

fn to_json(document: &ResultDocument) -> String {
    let mut s = serde_json::to_string_pretty(document).expect("document serializes");
    s.push('\n');
    s
}

pub(crate) fn truncation_marker(completed: usize) -> String {
    format!("-- truncated: time budget exhausted after {completed} degree(s)\n")
}
