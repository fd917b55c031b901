mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde_json::{json, Value};

use positroid_core::convert::representations;
use positroid_core::lediagram::le_from_path;
use positroid_core::matrix::ColumnProfile;
use positroid_core::necklace::necklace_from_bases;
use positroid_core::plabic::{build_plabic, local_moves, perfect_orientations, trip_permutation, PlabicGraph, Site};
use positroid_core::polytope::{hrep_general, hrep_refined};
use positroid_core::positroid::positroid_of_path;
use positroid_core::routes::count_methods;
use positroid_core::verify::{checks, verify_type, Caps, VerifyOptions, COUNT_CHECK};
use positroid_core::{enumerate_paths, DyckPath, Error};

#[derive(Parser)]
#[command(name = "positroid-lab", version, about = "Rational Dyck positroids in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug)]
struct Type {
    m: usize,
    d: usize,
}

fn parse_type(s: &str) -> Result<Type, String> {
    let (m, d) = s.split_once(',').ok_or("expected M,D")?;
    let m: usize = m.trim().parse().map_err(|_| format!("bad m in {s:?}"))?;
    let d: usize = d.trim().parse().map_err(|_| format!("bad d in {s:?}"))?;
    if m == 0 || d == 0 {
        return Err("m and d must be positive".into());
    }
    Ok(Type { m, d })
}

#[derive(Args)]
struct TypeArg {
    /// Path type as M,D: M east steps and D north steps.
    #[arg(long = "type", value_parser = parse_type)]
    ty: Type,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum System {
    General,
    Refined,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// List every path of a type in lexicographic order.
    Enumerate {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Count the paths of a type.
    Count {
        #[command(flatten)]
        ty: TypeArg,
        /// formula, bizley, enumerate, or all. Defaults to formula for
        /// coprime types and bizley otherwise.
        #[arg(long)]
        method: Option<String>,
    },
    /// Convert a path to another representation.
    Convert {
        #[arg(required_unless_present = "list_targets")]
        path: Option<String>,
        /// Target representation; see --list-targets.
        #[arg(long, required_unless_present = "list_targets")]
        to: Option<String>,
        /// Check the path against this type.
        #[arg(long = "type", value_parser = parse_type)]
        ty: Option<Type>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        list_targets: bool,
    },
    /// Cross-check all representations of every path of a type.
    Verify {
        /// Path type as M,D: M east steps and D north steps.
        #[arg(long = "type", value_parser = parse_type, required_unless_present = "list_checks")]
        ty: Option<Type>,
        /// Comma-separated checks to leave out.
        #[arg(long, value_delimiter = ',')]
        skip: Vec<String>,
        /// Cap every check family at this d+m (overrides POSITROID_LAB_MAX_N).
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        list_checks: bool,
    },
    /// Inequality descriptions of a path's basis polytope.
    Polytope {
        path: String,
        #[arg(long, value_enum, default_value = "both")]
        system: System,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Drop vacuous and repeated rows.
        #[arg(long)]
        prune: bool,
    },
    /// Inspect plabic graphs and apply local moves.
    Plabic {
        /// Build the tree graph of this path.
        #[arg(long, conflicts_with = "graph", required_unless_present_any = ["graph", "list_moves"])]
        path: Option<String>,
        /// Read a graph in JSON form ("-" for stdin).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Move to apply; see --list-moves.
        #[arg(long, requires = "site")]
        r#move: Option<String>,
        /// Site for --move as JSON, e.g. '{"site":"edge","edge":3}'.
        #[arg(long)]
        site: Option<String>,
        /// Print the sites of every move instead of the graph.
        #[arg(long)]
        list_sites: bool,
        #[arg(long)]
        list_moves: bool,
        /// Draw the k-th perfect orientation (svg only).
        #[arg(long)]
        orientation: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::Overflow(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.as_bytes());
            if !out.ends_with('\n') && !out.is_empty() {
                let _ = stdout.write_all(b"\n");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

fn parse_path(s: &str, ty: Option<Type>) -> Result<DyckPath, Failure> {
    let p = match ty {
        Some(t) => DyckPath::parse_with_type(s, t.m, t.d)?,
        None => s.parse::<DyckPath>()?,
    };
    Ok(p)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Enumerate { ty, format } => {
            let paths = enumerate_paths(ty.ty.m, ty.ty.d)?;
            match format {
                Format::Json => Ok(serde_json::to_string(&paths).expect("paths serialize")),
                Format::Text => Ok(paths.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n")),
                Format::Svg => Err(Failure::Usage("enumerate has no svg form".into())),
            }
        }
        Command::Count { ty, method } => count(ty.ty, method.as_deref()),
        Command::Convert { path, to, ty, format, list_targets } => {
            let reg = representations();
            if list_targets {
                return Ok(reg.iter().map(|r| format!("{:<18} {}", r.name(), r.description())).collect::<Vec<_>>().join("\n"));
            }
            let p = parse_path(&path.expect("clap enforces a path"), ty)?;
            let target = to.expect("clap enforces --to");
            let rep = reg.get(&target)?;
            match format {
                Format::Json => Ok(serde_json::to_string(&rep.to_json(&p)?).expect("values serialize")),
                Format::Text => Ok(rep.to_text(&p)?),
                Format::Svg => match target.as_str() {
                    "matrix" | "extended" => Ok(svg::path_svg(&p)),
                    "le" => Ok(svg::le_svg(&le_from_path(&p))),
                    "plabic" => Ok(svg::plabic_svg(&build_plabic(&p), None)),
                    other => Err(Failure::Usage(format!("no svg form for {other}"))),
                },
            }
        }
        Command::Verify { ty, skip, max_n, format, list_checks } => {
            if list_checks {
                let mut lines = vec![format!("{COUNT_CHECK:<18} enumeration agrees with the closed form")];
                lines.extend(checks().iter().map(|c| format!("{:<18} {}", c.name(), c.description())));
                return Ok(lines.join("\n"));
            }
            let caps = match max_n {
                Some(n) => Caps::uniform(n),
                None => Caps::from_env()?,
            };
            let ty = ty.expect("clap requires --type without --list-checks");
            let report = verify_type(ty.m, ty.d, &VerifyOptions { caps, skip })?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
                Format::Text => report.to_string(),
                Format::Svg => return Err(Failure::Usage("verify has no svg form".into())),
            };
            if report.ok() {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
        Command::Polytope { path, system, format, prune } => {
            let p = parse_path(&path, None)?;
            let mut systems = Vec::new();
            if system != System::Refined {
                let h = hrep_general(&necklace_from_bases(&positroid_of_path(&p)?)?);
                systems.push(("general", h));
            }
            if system != System::General {
                systems.push(("refined", hrep_refined(&ColumnProfile::from_path(&p))?));
            }
            if prune {
                systems = systems.into_iter().map(|(k, h)| (k, h.pruned())).collect();
            }
            match format {
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    for (k, h) in &systems {
                        obj.insert(k.to_string(), serde_json::to_value(h).expect("systems serialize"));
                    }
                    Ok(serde_json::to_string(&obj).expect("systems serialize"))
                }
                Format::Text => Ok(systems
                    .iter()
                    .map(|(k, h)| format!("# {k}\n{h}"))
                    .collect::<Vec<_>>()
                    .join("\n")),
                Format::Svg => Err(Failure::Usage("polytope has no svg form".into())),
            }
        }
        Command::Plabic { path, graph, r#move, site, list_sites, list_moves, orientation, format } => {
            let moves = local_moves();
            if list_moves {
                return Ok(moves
                    .iter()
                    .map(|m| {
                        let note = if m.preserves_trips() { "" } else { " (may change trips)" };
                        format!("{:<14} {}{note}", m.name(), m.description())
                    })
                    .collect::<Vec<_>>()
                    .join("\n"));
            }
            let mut g = match (path, graph) {
                (Some(p), _) => build_plabic(&parse_path(&p, None)?),
                (None, Some(file)) => read_graph(&file)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            if let Some(name) = r#move {
                let site: Site = serde_json::from_str(site.as_deref().expect("clap enforces --site"))
                    .map_err(|e| Failure::Usage(format!("bad site: {e}")))?;
                g = moves.get(&name)?.apply(&g, &site)?;
            }
            if list_sites {
                let mut obj = serde_json::Map::new();
                for m in moves.iter() {
                    obj.insert(m.name().into(), serde_json::to_value(m.sites(&g)).expect("sites serialize"));
                }
                return Ok(serde_json::to_string(&obj).expect("sites serialize"));
            }
            match format {
                Format::Json => Ok(serde_json::to_string(&g).expect("graphs serialize")),
                Format::Text => {
                    let v = json!({
                        "graph": g,
                        "trip": trip_permutation(&g).cycle_string(),
                    });
                    Ok(pretty(&v))
                }
                Format::Svg => {
                    let all;
                    let chosen = match orientation {
                        Some(k) => {
                            all = perfect_orientations(&g);
                            Some(all.get(k).ok_or_else(|| {
                                Failure::Usage(format!("only {} perfect orientations", all.len()))
                            })?)
                        }
                        None => None,
                    };
                    Ok(svg::plabic_svg(&g, chosen))
                }
            }
        }
    }
}

fn read_graph(file: &PathBuf) -> Result<PlabicGraph, Failure> {
    let text = if file.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Usage(e.to_string()))?
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad graph: {e}")))
}

fn count(ty: Type, method: Option<&str>) -> Outcome {
    let (m, d) = (ty.m as u64, ty.d as u64);
    let reg = count_methods();
    let coprime = m.gcd(&d) == 1;
    match method {
        Some("all") => {
            let cap = Caps::from_env()?.counting;
            let mut lines = Vec::new();
            let mut values = Vec::new();
            for method in reg.iter() {
                if method.name() == "formula" && !coprime {
                    continue;
                }
                if method.name() == "enumerate" && ty.m + ty.d > cap {
                    lines.push(format!("{:<10} skipped (d+m > {cap})", method.name()));
                    continue;
                }
                let v = method.count(m, d)?;
                lines.push(format!("{:<10} {v}", method.name()));
                values.push(v);
            }
            let text = lines.join("\n");
            if values.windows(2).all(|w| w[0] == w[1]) {
                Ok(text)
            } else {
                Err(Failure::Verification(format!("{text}\nmethods disagree")))
            }
        }
        Some(name) => Ok(reg.get(name)?.count(m, d)?.to_string()),
        None => {
            let name = if coprime { "formula" } else { "bizley" };
            Ok(reg.get(name)?.count(m, d)?.to_string())
        }
    }
}
