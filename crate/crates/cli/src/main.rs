use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ctmgraph::automorphism::aut_group;
use ctmgraph::boundary::{boundary, cone};
use ctmgraph::enumeration::{enumerate_cached, EnumerationRequest};
use ctmgraph::fixtures::{self, Fixture};
use ctmgraph::invariants::{faces, gurau_degree, jackets};
use ctmgraph::io::{self as gio, GraphDocument, GraphValue};
use ctmgraph::pi1::{abelianization, gagliardi_presentation_with, tietze_simplify, GroupPresentation};
use ctmgraph::realization::realize;
use ctmgraph::surgery::{connected_sum, connected_sum_open, pretzel, remove_dipole, separatrix, EdgeRef};
use ctmgraph::wti::{free_energy_terms, sde_two_point_terms, y_expansion};
use ctmgraph::{ColoredGraph, DisconnectedGraph, InteractionModel, OpenFeynmanGraph};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "ctmgraph", version, about = "Colored graphs of colored tensor models")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// A graph document path, `-` for standard input, or `@name` for a built-in fixture.
#[derive(Args)]
struct Input {
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check a document's invariants.
    Validate(Input),
    /// Boundary graph of an open graph. A document without prop0 is read as its cone.
    Boundary {
        #[command(flatten)]
        input: Input,
        /// Print the canonical encoding instead of a document.
        #[arg(long)]
        canonical: bool,
    },
    /// Degree (sum of jacket genera).
    Degree(Input),
    /// Genus of every jacket.
    Jackets(Input),
    /// Face counts per color pair.
    Faces(Input),
    /// Colored automorphism group.
    Aut(Input),
    /// Connected sum along two edges of the same color.
    Connsum {
        first: String,
        second: String,
        #[arg(long)]
        color: usize,
        /// White endpoints, `w1,w2` (0-based).
        #[arg(long, value_parser = pair)]
        whites: (usize, usize),
    },
    /// Remove the dipole at an edge.
    RemoveEdge {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        color: usize,
        /// White endpoint (0-based).
        #[arg(long)]
        white: usize,
    },
    /// Cone over a closed graph.
    Cone(Input),
    /// A quartic melonic Feynman graph with the given boundary.
    Realize(Input),
    /// The four-leg separatrix, or with `--closed` its closed form.
    Separatrix {
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long)]
        closed: bool,
    },
    /// Isomorphism classes of graphs.
    Enumerate {
        #[arg(long)]
        colors: usize,
        /// Number of vertices (even).
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Fundamental group presentation of a crystallization.
    Pi1 {
        #[command(flatten)]
        input: Input,
        /// The two colors `i,j` whose complement residues give the generators.
        #[arg(long, value_parser = pair, default_value = "1,2")]
        drop_colors: (usize, usize),
        /// Generator set to the identity (1-based, default last).
        #[arg(long)]
        kill: Option<usize>,
        /// Omitted cycle (0-based, default last).
        #[arg(long)]
        drop_cycle: Option<usize>,
        /// Apply Tietze simplification.
        #[arg(long)]
        simplify: bool,
    },
    /// Abelianized fundamental group of a crystallization.
    Abelianize {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = pair, default_value = "1,2")]
        drop_colors: (usize, usize),
    },
    /// Singular Ward-Takahashi terms.
    WtiY {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        color: usize,
    },
    /// Free-energy expansion terms.
    FeTerms {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Terms of the two-point Schwinger-Dyson equation.
    SdeTerms {
        #[arg(long, default_value_t = 3)]
        rank: usize,
    },
    /// DOT description for Graphviz.
    Dot(Input),
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Phi4,
}

#[derive(Args)]
struct ModelArgs {
    #[arg(long, value_enum, default_value = "phi4")]
    model: Model,
    #[arg(long)]
    rank: usize,
    /// Largest number of sources (even).
    #[arg(long)]
    order: usize,
}

impl ModelArgs {
    fn model(&self) -> InteractionModel {
        match self.model {
            Model::Phi4 => InteractionModel::phi4_melonic(self.rank),
        }
    }
}

fn pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected two comma-separated integers")?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<ctmgraph::Error> for Failure {
    fn from(e: ctmgraph::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Text for the terminal and the same result as JSON.
struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Result<Output, Failure> {
    Ok(Output {
        text: text.into(),
        json,
    })
}

fn read_text(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(input).map_err(|e| Failure::Domain(format!("{input}: {e}")))
    }
}

fn load(input: &str) -> Result<GraphValue, Failure> {
    if let Some(name) = input.strip_prefix('@') {
        return match fixtures::named(name) {
            Some(Fixture::Closed(g)) => Ok(GraphValue::Closed(g)),
            Some(Fixture::Open(g)) => Ok(GraphValue::Open(g)),
            None => Err(Failure::Usage(format!(
                "unknown fixture @{name}; known: {}",
                fixtures::NAMES.join(", ")
            ))),
        };
    }
    Ok(gio::parse(&read_text(input)?)?)
}

/// A closed graph; a vacuum open graph is read with color 0 first.
fn load_closed(input: &str) -> Result<ColoredGraph, Failure> {
    match load(input)? {
        GraphValue::Closed(g) => Ok(g),
        GraphValue::Open(g) => g
            .to_closed()
            .ok_or_else(|| Failure::Domain("expected a closed graph, found external legs".into())),
    }
}

fn doc_output(doc: GraphDocument) -> Result<Output, Failure> {
    let json = serde_json::to_value(&doc).expect("documents serialize");
    out(gio::serialize(&doc), json)
}

fn closed_doc(g: &ColoredGraph) -> Result<Output, Failure> {
    doc_output(GraphDocument::from_closed(g))
}

fn open_doc(g: &OpenFeynmanGraph) -> Result<Output, Failure> {
    doc_output(GraphDocument::from_open(g))
}

fn run(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Validate(i) => {
            let doc = if let Some(name) = i.input.strip_prefix('@') {
                let v = load(&format!("@{name}"))?;
                GraphDocument::from_value(&v)
            } else {
                gio::parse_document(&read_text(&i.input)?)?
            };
            let report = gio::validate_document(&doc)?;
            let violations: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
            let json = json!({
                "valid": report.is_valid(),
                "violations": violations,
                "external_legs": report.external_legs,
            });
            if !report.is_valid() {
                return Err(Failure::Domain(if violations.is_empty() {
                    "invalid".into()
                } else {
                    format!("invalid: {}", violations.join("; "))
                }));
            }
            let kind = if doc.prop0.is_some() {
                format!("open graph, {} external legs", report.external_legs)
            } else {
                "closed graph".into()
            };
            out(format!("valid {kind}"), json)
        }
        Command::Boundary { input, canonical } => {
            let g = load(&input.input)?.to_open();
            let b = boundary(&g).graph;
            let code = b.canonical_code().to_string();
            if canonical {
                out(code.clone(), json!({ "canonical": code }))
            } else {
                closed_doc(&b)
            }
        }
        Command::Degree(i) => {
            let r = gurau_degree(&load_closed(&i.input)?)?;
            let genera: Vec<u64> = r.jackets.iter().map(|j| j.genus).collect();
            out(
                r.to_string(),
                json!({
                    "omega": r.omega.to_string(),
                    "face_formula_omega": r.face_formula_omega.to_string(),
                    "jackets": genera,
                    "total_faces": r.total_faces,
                }),
            )
        }
        Command::Jackets(i) => {
            let js = jackets(&load_closed(&i.input)?)?;
            let text: Vec<String> = js
                .iter()
                .map(|j| format!("{} faces {} chi {} genus {}", j.label(), j.face_count, j.euler_characteristic, j.genus))
                .collect();
            let json: Vec<Value> = js
                .iter()
                .map(|j| {
                    json!({
                        "order": j.cycle_class,
                        "faces": j.face_count,
                        "euler_characteristic": j.euler_characteristic,
                        "genus": j.genus,
                    })
                })
                .collect();
            out(text.join("\n"), Value::Array(json))
        }
        Command::Faces(i) => {
            let f = faces(&load_closed(&i.input)?);
            let mut text: Vec<String> = f.by_pair.iter().map(|((c, d), n)| format!("{c}{d} {n}")).collect();
            text.push(format!("total {}", f.total()));
            let pairs: serde_json::Map<String, Value> =
                f.by_pair.iter().map(|((c, d), n)| (format!("{c},{d}"), json!(n))).collect();
            out(text.join("\n"), json!({ "pairs": pairs, "total": f.total() }))
        }
        Command::Aut(i) => {
            let a = aut_group(&load_closed(&i.input)?);
            let gens: Vec<String> = a.generators.iter().map(ToString::to_string).collect();
            let mut text = format!("order {}", a.order);
            for g in &gens {
                text.push_str(&format!("\ngenerator {g}"));
            }
            out(text, json!({ "order": a.order.to_string(), "generators": gens }))
        }
        Command::Connsum {
            first,
            second,
            color,
            whites,
        } => {
            let (e1, e2) = (EdgeRef::new(color, whites.0), EdgeRef::new(color, whites.1));
            match (load(&first)?, load(&second)?) {
                (GraphValue::Closed(a), GraphValue::Closed(b)) if color > 0 => {
                    closed_doc(&connected_sum(&a, e1, &b, e2)?)
                }
                (a, b) => open_doc(&connected_sum_open(&a.to_open(), e1, &b.to_open(), e2)?),
            }
        }
        Command::RemoveEdge { input, color, white } => {
            let r = remove_dipole(&load_closed(&input.input)?, EdgeRef::new(color, white))?;
            let mut o = closed_doc(&r.graph)?;
            o.json = json!({
                "residual": o.json,
                "parallel_colors": r.parallel_colors,
                "removed_white": r.removed_white,
                "removed_black": r.removed_black,
            });
            Ok(o)
        }
        Command::Cone(i) => open_doc(&cone(&load_closed(&i.input)?)),
        Command::Realize(i) => {
            let b = DisconnectedGraph::from_graph(&load_closed(&i.input)?);
            open_doc(&realize(&b)?)
        }
        Command::Separatrix { rank, closed } => {
            let g = if closed { pretzel(rank)? } else { separatrix(rank)? };
            open_doc(&g)
        }
        Command::Enumerate {
            colors,
            vertices,
            connected,
            count_only,
            out: path,
            jobs,
        } => {
            if vertices % 2 != 0 || vertices == 0 {
                return Err(Failure::Usage(format!("--vertices must be a positive even number, got {vertices}")));
            }
            let mut req = if connected {
                EnumerationRequest::connected(colors, vertices / 2)
            } else {
                EnumerationRequest::all(colors, vertices / 2)
            };
            req.jobs = jobs;
            let graphs = enumerate_cached(&req, gio::cache_dir_from_env().as_deref())?;
            let n = graphs.len();
            if let Some(path) = path {
                gio::write_corpus(&path, &graphs)?;
                return out(n.to_string(), json!({ "count": n, "out": path.display().to_string() }));
            }
            if count_only {
                return out(n.to_string(), json!({ "count": n }));
            }
            let docs: Vec<GraphDocument> = graphs.iter().map(GraphDocument::from_closed).collect();
            let text: Vec<String> = docs.iter().map(gio::serialize).collect();
            out(text.join("\n"), json!({ "count": n, "graphs": docs }))
        }
        Command::Pi1 {
            input,
            drop_colors: (i, j),
            kill,
            drop_cycle,
            simplify,
        } => {
            let g = load_closed(&input.input)?;
            let mut p = gagliardi_presentation_with(&g, i, j, kill, drop_cycle)?.presentation;
            if simplify {
                p = tietze_simplify(&p);
            }
            out(presentation_text(&p), json!({ "generators": p.generators, "relators": p.relators }))
        }
        Command::Abelianize {
            input,
            drop_colors: (i, j),
        } => {
            let g = load_closed(&input.input)?;
            let a = abelianization(&gagliardi_presentation_with(&g, i, j, None, None)?.presentation);
            out(a.to_string(), json!({ "free_rank": a.free_rank, "torsion": a.torsion }))
        }
        Command::WtiY { model, color } => {
            let terms = y_expansion(&model.model(), color, model.order)?;
            let text: Vec<String> = terms.iter().map(|t| t.record()).collect();
            let json: Vec<Value> = terms
                .iter()
                .map(|t| {
                    json!({
                        "coefficient": t.coefficient.to_string(),
                        "order": t.order,
                        "boundary": t.boundary.canonical_code().to_string(),
                        "r": t.core.r,
                        "a": t.core.a,
                        "residual": t.residual().canonical_code().to_string(),
                        "parallel_colors": t.core.parallel_colors,
                        "z": t.core.z_string(),
                    })
                })
                .collect();
            out(text.join("\n"), Value::Array(json))
        }
        Command::FeTerms { model } => {
            let terms = free_energy_terms(&model.model(), model.order)?;
            let text: Vec<String> = terms
                .iter()
                .map(|t| {
                    format!(
                        "coeff={} order={} components={} boundary={}",
                        t.coefficient,
                        t.order,
                        t.boundary.component_count(),
                        t.boundary.canonical_code()
                    )
                })
                .collect();
            let json: Vec<Value> = terms
                .iter()
                .map(|t| {
                    json!({
                        "coefficient": t.coefficient.to_string(),
                        "order": t.order,
                        "components": t.boundary.component_count(),
                        "boundary": t.boundary.canonical_code().to_string(),
                    })
                })
                .collect();
            out(text.join("\n"), Value::Array(json))
        }
        Command::SdeTerms { rank } => {
            let inv = sde_two_point_terms(rank)?;
            let mut text = vec![format!("prefactor {}", inv.prefactor)];
            text.extend(inv.terms.iter().map(ToString::to_string));
            let terms: Vec<Value> = inv
                .terms
                .iter()
                .map(|t| {
                    json!({
                        "category": format!("{:?}", t.category),
                        "color": t.color,
                        "weight": t.weight,
                        "function": t.function,
                        "arguments": t.arguments,
                        "summed": t.summed,
                        "kernel": t.kernel,
                        "subtracted": t.subtracted,
                        "factor": t.factor,
                        "prefactored": t.prefactored,
                    })
                })
                .collect();
            out(
                text.join("\n"),
                json!({ "prefactor": inv.prefactor, "counts": inv.category_counts(), "terms": terms }),
            )
        }
        Command::Dot(i) => {
            let v = load(&i.input)?;
            let dot = gio::to_dot(&v);
            out(dot.trim_end().to_string(), json!({ "dot": dot }))
        }
    }
}

fn presentation_text(p: &GroupPresentation) -> String {
    let gens: Vec<String> = (1..=p.generators).map(|k| format!("g{k}")).collect();
    let mut lines = vec![format!("generators {}", gens.join(" "))];
    for r in &p.relators {
        let letters: Vec<String> = r.iter().map(ToString::to_string).collect();
        lines.push(format!("relator {}", letters.join(" ")));
    }
    lines.join("\n")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(o) => {
            let text = if cli.json {
                serde_json::to_string(&o.json).expect("json")
            } else {
                o.text
            };
            let mut stdout = io::stdout().lock();
            if writeln!(stdout, "{text}").is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
