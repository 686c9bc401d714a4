use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rephom_core::{AlgType, Field, GroupType, Link, LinkModel};

#[derive(Parser, Debug)]
#[command(
    name = "rephom",
    version,
    about = "Representation homology of surfaces and link complements"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Genus-g surface with coefficients in a matrix group.
    SurfaceGroup {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        genus: usize,
        /// GL, SL, Unipotent (U) or Borel (B).
        #[arg(long, default_value = "GL")]
        group: GroupType,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Genus-g surface with coefficients in a matrix Lie algebra.
    SurfaceAlg {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        genus: usize,
        /// gl, sl, nilpotent or borel.
        #[arg(long)]
        alg: AlgType,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// The two-dimensional abelian Lie algebra with coefficients in a matrix Lie algebra.
    SurfaceLie {
        #[arg(long)]
        size: usize,
        /// gl, sl, nilpotent or borel.
        #[arg(long)]
        lie: AlgType,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Complement of a link given as a closed braid.
    Link {
        #[arg(long)]
        size: usize,
        /// trefoil, figure-eight, unknot, or `link(n, {w1,...,wk})`.
        #[arg(long, conflicts_with_all = ["braid_index", "word"], required_unless_present = "braid_index")]
        name: Option<Link>,
        #[arg(long, requires = "word")]
        braid_index: Option<usize>,
        /// Comma-separated braid word; negative entries are inverse generators.
        #[arg(long, requires = "braid_index", allow_hyphen_values = true)]
        word: Option<String>,
        /// GL, SL, Unipotent (U) or Borel (B).
        #[arg(long, default_value = "GL")]
        group: GroupType,
        #[arg(long, value_enum, default_value_t = ModelArg::TwoTuple)]
        link_model: ModelArg,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// QQ or Fp:<prime>.
    #[arg(long, default_value = "QQ")]
    field: Field,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    no_prune: bool,
    /// Report Hilbert functions up to this degree (graded cases only).
    #[arg(long, value_name = "D")]
    hilbert: Option<u32>,
    /// Report Fitting ideals of every homology module.
    #[arg(long)]
    fitting: bool,
    /// Wall-clock limit in seconds.
    #[arg(long, value_name = "SECONDS")]
    time_budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    TwoTuple,
    FixedPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    SurfaceGroup {
        size: usize,
        genus: usize,
        group: GroupType,
    },
    SurfaceAlg {
        size: usize,
        genus: usize,
        alg: AlgType,
    },
    SurfaceLie {
        size: usize,
        lie: AlgType,
    },
    Link {
        size: usize,
        link: Link,
        group: GroupType,
        model: LinkModel,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::SurfaceGroup { .. } => "surface-group",
            Command::SurfaceAlg { .. } => "surface-alg",
            Command::SurfaceLie { .. } => "surface-lie",
            Command::Link { .. } => "link",
        }
    }
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub command: Command,
    pub field: Field,
    pub format: Format,
    pub prune: bool,
    pub hilbert: Option<u32>,
    pub fitting: bool,
    pub time_budget: Option<u64>,
}

/// Parses a full argv (program name first).
pub fn parse_args<I, T>(argv: I) -> Result<Request, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let (command, common) = match cli.command {
        CliCommand::SurfaceGroup {
            size,
            genus,
            group,
            common,
        } => (Command::SurfaceGroup { size, genus, group }, common),
        CliCommand::SurfaceAlg {
            size,
            genus,
            alg,
            common,
        } => (Command::SurfaceAlg { size, genus, alg }, common),
        CliCommand::SurfaceLie { size, lie, common } => (Command::SurfaceLie { size, lie }, common),
        CliCommand::Link {
            size,
            name,
            braid_index,
            word,
            group,
            link_model,
            common,
        } => {
            let link = match (name, braid_index, word) {
                (Some(l), _, _) => l,
                (None, Some(n), Some(w)) => parse_word_link(n, &w)?,
                _ => unreachable!("clap enforces a link specification"),
            };
            let model = match link_model {
                ModelArg::TwoTuple => LinkModel::TwoTuple,
                ModelArg::FixedPoint => LinkModel::FixedPoint,
            };
            (
                Command::Link {
                    size,
                    link,
                    group,
                    model,
                },
                common,
            )
        }
    };
    Ok(Request {
        command,
        field: common.field,
        format: common.format,
        prune: !common.no_prune,
        hilbert: common.hilbert,
        fitting: common.fitting,
        time_budget: common.time_budget,
    })
}

fn parse_word_link(n: usize, word: &str) -> Result<Link, clap::Error> {
    let invalid =
        |msg: String| clap::Error::raw(clap::error::ErrorKind::ValueValidation, msg + "\n");
    let entries = if word.trim().is_empty() {
        Vec::new()
    } else {
        word.split(',')
            .map(|w| {
                w.trim()
                    .parse::<i32>()
                    .map_err(|_| invalid(format!("bad braid word entry '{w}'")))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    rephom_core::make_link(n, entries).map_err(|e| invalid(e.to_string()))
}

/// Arguments that parse back to `r`, program name first.
pub fn render(r: &Request) -> Vec<String> {
    let mut out = vec!["rephom".to_string(), r.command.name().to_string()];
    let mut flag = |k: &str, v: String| {
        out.push(format!("--{k}"));
        out.push(v);
    };
    match &r.command {
        Command::SurfaceGroup { size, genus, group } => {
            flag("size", size.to_string());
            flag("genus", genus.to_string());
            flag("group", group.to_string());
        }
        Command::SurfaceAlg { size, genus, alg } => {
            flag("size", size.to_string());
            flag("genus", genus.to_string());
            flag("alg", alg.to_string());
        }
        Command::SurfaceLie { size, lie } => {
            flag("size", size.to_string());
            flag("lie", lie.to_string());
        }
        Command::Link {
            size,
            link,
            group,
            model,
        } => {
            flag("size", size.to_string());
            flag("name", link.to_string());
            flag("group", group.to_string());
            flag("link-model", model.to_string());
        }
    }
    flag("field", r.field.to_string());
    flag(
        "format",
        match r.format {
            Format::Text => "text",
            Format::Json => "json",
        }
        .to_string(),
    );
    if let Some(d) = r.hilbert {
        flag("hilbert", d.to_string());
    }
    if let Some(s) = r.time_budget {
        flag("time-budget", s.to_string());
    }
    if !r.prune {
        out.push("--no-prune".into());
    }
    if r.fitting {
        out.push("--fitting".into());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Request, clap::Error> {
        parse_args(std::iter::once("rephom").chain(s.split_whitespace()))
    }

    #[test]
    fn documented_call_shapes() {
        let r = parse("surface-group --size 3 --genus 1 --group U").unwrap();
        assert_eq!(
            r.command,
            Command::SurfaceGroup {
                size: 3,
                genus: 1,
                group: GroupType::Unipotent
            }
        );
        assert_eq!(
            (r.field, r.format, r.prune),
            (Field::Rational, Format::Text, true)
        );
        let r = parse("surface-group --size 2 --genus 1").unwrap();
        assert_eq!(
            r.command,
            Command::SurfaceGroup {
                size: 2,
                genus: 1,
                group: GroupType::GL
            }
        );
        let r = parse("link --name trefoil --size 3 --group U").unwrap();
        assert_eq!(
            r.command,
            Command::Link {
                size: 3,
                link: Link::trefoil(),
                group: GroupType::Unipotent,
                model: LinkModel::TwoTuple
            }
        );
    }

    #[test]
    fn inline_links() {
        let r = parse("link --size 2 --braid-index 3 --word 1,-2,1,-2").unwrap();
        assert!(
            matches!(r.command, Command::Link { ref link, .. } if *link == Link::figure_eight())
        );
        let r = parse_args([
            "rephom",
            "link",
            "--size",
            "2",
            "--name",
            "link(2, {1,1,1})",
        ])
        .unwrap();
        assert!(matches!(r.command, Command::Link { ref link, .. } if *link == Link::trefoil()));
        assert!(parse("link --size 2 --braid-index 2 --word 2").is_err());
        assert!(parse("link --size 2").is_err());
        assert!(parse("link --size 2 --name trefoil --braid-index 2 --word 1").is_err());
    }

    #[test]
    fn invalid_combinations() {
        assert!(parse("surface-group --size 2 --name trefoil").is_err());
        assert!(parse("surface-alg --size 2").is_err());
        assert!(parse("surface-group --size 2 --field Fp:4").is_err());
        assert!(parse("surface-group --size 2 --frobnicate").is_err());
        let e = parse("surface-group --size 2 --group Q").unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn render_examples_round_trip() {
        for s in [
            "surface-group --size 3 --genus 2 --group B --hilbert 4 --fitting",
            "surface-lie --size 2 --lie sl --format json --no-prune --field Fp:101",
            "link --name figure-eight --size 2 --group SL --time-budget 5 --link-model fixed-point",
            "link --name unknot --size 3 --group B",
        ] {
            let r = parse(s).unwrap();
            assert_eq!(parse_args(render(&r)).unwrap(), r, "{s}");
        }
    }
}
