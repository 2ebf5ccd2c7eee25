use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mereon::cliffknot::{knot_csv, knot_obj, TorusKnotSpec, DEFAULT_SAMPLES};
use mereon::mckay::{analyse, DEFAULT_SEED};
use mereon::model::Model;
use mereon::polytopes::{to_json, to_obj, to_ply, Polyhedron};
use mereon::goldfield::OrderedField;
use mereon::quatgroup::{BinaryGroup, GroupLabel};
use mereon::shadow::{inner_icosahedron_mesh, projected_points};
use mereon::tables::{build_table, TableName};
use mereon::verify::{run_verify, Fault, VerifyOptions};

#[derive(Parser)]
#[command(name = "mereon", version, about = "Exact golden-field geometry of the Mereon polyhedra and the 600-cell shadow")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output directory; must already exist.
    #[arg(long, global = true, env = "MEREON_OUT", default_value = ".")]
    out: PathBuf,
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Samples per knot curve.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Seed of the character-table eigen-splitting.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Md,
    Obj,
    Ply,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check and write verify.json (and verify.txt with --format text).
    Verify {
        #[arg(long, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Regenerate a reference table.
    Report {
        #[arg(value_parser = parse_table)]
        table: TableName,
    },
    /// Write a mesh or point set.
    Mesh {
        name: MeshName,
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        q: u32,
    },
    /// Character table and McKay graph of a binary group.
    Mckay {
        #[arg(value_parser = parse_group)]
        group: GroupLabel,
    },
    /// Sample a torus knot on the Clifford torus and project it.
    Knot {
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        q: u32,
    },
    /// Elements, orders and conjugacy classes of a binary group as JSON.
    Group {
        #[arg(value_parser = parse_group)]
        group: GroupLabel,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    M144pVertex,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeshName {
    M144p,
    M120p,
    Disdyakis,
    Cell600Projection,
    Cell24Projection,
    InnerIcosahedron,
    Knot,
}

fn parse_table(s: &str) -> Result<TableName, String> {
    s.parse().map_err(|e: mereon::tables::TableError| e.to_string())
}

fn parse_group(s: &str) -> Result<GroupLabel, String> {
    s.parse().map_err(|_| format!("unknown group {s:?}; expected 2T, 2O or 2I"))
}

enum Failure {
    Usage(String),
    Run(String),
}

fn run_err<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Run(e.to_string())
}

fn write(dir: &Path, file: &str, contents: &str) -> Result<(), Failure> {
    let path = dir.join(file);
    fs::write(&path, contents).map_err(|e| Failure::Run(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn mesh_text<F: OrderedField>(p: &Polyhedron<F>, format: Format) -> Result<(String, &'static str), Failure> {
    match format {
        Format::Obj => Ok((to_obj(p), "obj")),
        Format::Ply => Ok((to_ply(p), "ply")),
        Format::Json => Ok((to_json(p), "json")),
        _ => Err(Failure::Usage("mesh formats are obj, ply and json".into())),
    }
}

fn group_json<F: OrderedField>(g: &BinaryGroup<F>) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(&g.export()).map_err(run_err)?;
    s.push('\n');
    Ok(s)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let c = &cli.common;
    if !c.out.is_dir() {
        return Err(Failure::Usage(format!("output directory {} does not exist", c.out.display())));
    }
    match cli.command {
        Command::Verify { inject_fault } => {
            let options = VerifyOptions {
                samples: c.samples,
                seed: c.seed,
                fault: inject_fault.map(|FaultArg::M144pVertex| Fault::CorruptM144pVertex),
            };
            let report = run_verify(&options).map_err(run_err)?;
            write(&c.out, "verify.json", &report.to_json())?;
            if c.format == Some(Format::Text) {
                write(&c.out, "verify.txt", &report.to_text())?;
            }
            print!("{}", report.to_text());
            if let Some(first) = report.failures().first() {
                eprintln!("first failure: {} (expected {}, got {})", first.name, first.expected, first.actual);
            }
            Ok(report.pass)
        }
        Command::Report { table } => {
            let model = Model::build().map_err(run_err)?;
            let t = build_table(table, &model).map_err(run_err)?;
            match c.format.unwrap_or(Format::Csv) {
                Format::Csv => write(&c.out, &format!("{table}.csv"), &t.to_csv())?,
                Format::Md => write(&c.out, &format!("{table}.md"), &t.to_markdown())?,
                _ => return Err(Failure::Usage("report formats are csv and md".into())),
            }
            Ok(true)
        }
        Command::Mesh { name, p, q } => {
            let format = c.format.unwrap_or(Format::Obj);
            if let MeshName::Knot = name {
                let spec = TorusKnotSpec::new(p, q).map_err(|e| Failure::Usage(e.to_string()))?;
                return knot(&c.out, spec, c.samples, format);
            }
            let model = Model::build().map_err(run_err)?;
            let (text, ext, stem) = match name {
                MeshName::M144p => mesh_text(&model.m144p.polyhedron, format).map(|(t, e)| (t, e, "m144p"))?,
                MeshName::M120p => mesh_text(model.m120p(), format).map(|(t, e)| (t, e, "m120p"))?,
                MeshName::Disdyakis => mesh_text(&model.disdyakis, format).map(|(t, e)| (t, e, "disdyakis"))?,
                MeshName::Cell600Projection => {
                    let pts = projected_points("cell600-projection", &model.two_i, model.m120p());
                    mesh_text(&pts, format).map(|(t, e)| (t, e, "cell600-projection"))?
                }
                MeshName::Cell24Projection => {
                    let pts = projected_points("cell24-projection", &model.two_t, model.m120p());
                    mesh_text(&pts, format).map(|(t, e)| (t, e, "cell24-projection"))?
                }
                MeshName::InnerIcosahedron => {
                    let m = inner_icosahedron_mesh(&model.two_i).map_err(run_err)?;
                    mesh_text(&m, format).map(|(t, e)| (t, e, "inner-icosahedron"))?
                }
                MeshName::Knot => unreachable!("handled above"),
            };
            write(&c.out, &format!("{stem}.{ext}"), &text)?;
            Ok(true)
        }
        Command::Mckay { group } => {
            let model = Model::build().map_err(run_err)?;
            let res = match group {
                GroupLabel::Tetrahedral => analyse(&model.two_t, c.seed),
                GroupLabel::Octahedral => analyse(&model.two_o, c.seed),
                GroupLabel::Icosahedral => analyse(&model.two_i, c.seed),
            };
            let (data, table, graph) = res.map_err(run_err)?;
            let stem = group.name();
            match c.format.unwrap_or(Format::Dot) {
                Format::Dot => write(&c.out, &format!("mckay-{stem}.dot"), &graph.to_dot())?,
                Format::Csv => {
                    write(&c.out, &format!("characters-{stem}.csv"), &table.to_csv(&data))?;
                    write(&c.out, &format!("mckay-{stem}.csv"), &graph.to_csv())?;
                }
                Format::Json => {
                    let v = serde_json::json!({ "classes": data, "characters": table, "graph": graph });
                    let mut s = serde_json::to_string_pretty(&v).map_err(run_err)?;
                    s.push('\n');
                    write(&c.out, &format!("mckay-{stem}.json"), &s)?;
                }
                _ => return Err(Failure::Usage("mckay formats are dot, csv and json".into())),
            }
            println!("{stem}: {} ({} irreps, dims {:?})", graph.label, table.dims.len(), table.dims);
            Ok(true)
        }
        Command::Knot { p, q } => {
            let spec = TorusKnotSpec::new(p, q).map_err(|e| Failure::Usage(e.to_string()))?;
            knot(&c.out, spec, c.samples, c.format.unwrap_or(Format::Obj))
        }
        Command::Group { group } => {
            let model = Model::build().map_err(run_err)?;
            let text = match group {
                GroupLabel::Tetrahedral => group_json(&model.two_t)?,
                GroupLabel::Octahedral => group_json(&model.two_o)?,
                GroupLabel::Icosahedral => group_json(&model.two_i)?,
            };
            write(&c.out, &format!("group-{}.json", group.name()), &text)?;
            Ok(true)
        }
    }
}

fn knot(out: &Path, spec: TorusKnotSpec, samples: usize, format: Format) -> Result<bool, Failure> {
    if samples < spec.min_samples() {
        return Err(Failure::Usage(format!("--samples must be at least {}", spec.min_samples())));
    }
    let stem = format!("knot-{}-{}", spec.p, spec.q);
    match format {
        Format::Obj => write(out, &format!("{stem}.obj"), &knot_obj(spec, samples).map_err(run_err)?)?,
        Format::Csv => write(out, &format!("{stem}.csv"), &knot_csv(spec, samples).map_err(run_err)?)?,
        _ => return Err(Failure::Usage("knot formats are obj and csv".into())),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
