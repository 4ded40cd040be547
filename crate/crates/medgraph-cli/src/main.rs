use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use medgraph::classes::{check_class, EmbeddingTarget, LabeledEmbedding};
use medgraph::function::{is_p_connected, local_median_set_p, median_function, median_set};
use medgraph::generators::{benzenoid, generate, FamilySpec};
use medgraph::io;
use medgraph::lp::{brute_force_oracle, compute_p, DEFAULT_ORACLE_BUDGET};
use medgraph::rational::fmt_q;
use medgraph::suites::run_suite;
use medgraph::{Error, Graph};

#[derive(Parser)]
#[command(name = "medgraph", version, about = "Medians, local medians and the invariant p(G) of graphs")]
struct Cli {
    /// Worker threads for per-pair LP work.
    #[arg(long, global = true, env = "MEDGRAPH_JOBS")]
    jobs: Option<usize>,
    /// Output format; text renders the same report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Verb {
    /// Generate a named family and write it as a graph file.
    Gen {
        family: String,
        params: Vec<u64>,
        #[arg(short = 'o', long)]
        output: PathBuf,
        /// Also write the family's labeled embedding.
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Hexagon coordinates for the `benzenoid` family.
        #[arg(long)]
        benzenoid_spec: Option<PathBuf>,
    },
    /// Median and local-median sets of a profile.
    Median {
        graph: PathBuf,
        profile: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        p: u32,
    },
    /// The least p with G^p-connected medians.
    Pvalue {
        graph: PathBuf,
        /// Restrict LP columns to J(u,v).
        #[arg(long)]
        restrict_j: bool,
        /// Cross-check with the brute-force oracle at this maximum weight.
        #[arg(long, value_name = "MAX_WEIGHT")]
        oracle: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        oracle_budget: u64,
    },
    /// Recognize a graph class.
    Check {
        class: String,
        graph: PathBuf,
        #[arg(long)]
        embedding: Option<PathBuf>,
    },
    /// Run an acceptance suite, or `all`.
    VerifyPaper { suite: String },
}

#[derive(Serialize)]
struct RunReport {
    verb: &'static str,
    inputs: Value,
    result: Value,
    wall_time_ms: u128,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

// library errors all stem from the inputs
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    io::parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// Result payload and whether the verb succeeded.
fn run(verb: &Verb) -> Result<(&'static str, Value, Value, bool), Failure> {
    match verb {
        Verb::Gen { family, params, output, labels, benzenoid_spec } => {
            let inputs = json!({ "family": family, "params": params, "output": output });
            let (g, embedding): (Graph, Option<LabeledEmbedding>) = if family == "benzenoid" {
                let spec_path =
                    benzenoid_spec.as_ref().ok_or_else(|| Failure::Usage("benzenoid needs --benzenoid-spec".into()))?;
                let spec = io::parse_benzenoid_spec(&read(spec_path)?)?;
                (benzenoid(&spec)?.graph, None)
            } else {
                generate(&FamilySpec::parse(family, params)?)?
            };
            write(output, &io::write_graph(&g))?;
            if let Some(path) = labels {
                let e = embedding.ok_or_else(|| Failure::Usage(format!("family {family} has no labeled embedding")))?;
                write(path, &io::write_labels(&e))?;
            }
            let result = json!({ "n": g.n(), "m": g.edge_count(), "diameter": g.diameter() });
            Ok(("gen", inputs, result, true))
        }
        Verb::Median { graph, profile, p } => {
            let inputs = json!({ "graph": graph, "profile": profile, "p": p });
            let g = load_graph(graph)?;
            let pi = io::parse_profile(&read(profile)?)?;
            pi.check_support(&g)?;
            let f = median_function(&g, &pi);
            let med = median_set(&g, &pi);
            let lmed = local_median_set_p(&g, &pi, *p);
            let result = json!({
                "min_value": fmt_q(f.min_value().expect("nonempty graph")),
                "median_set": med,
                "local_median_set": lmed,
                "median_set_p_connected": is_p_connected(&g, &med, *p),
            });
            Ok(("median", inputs, result, true))
        }
        Verb::Pvalue { graph, restrict_j, oracle, oracle_budget } => {
            let inputs = json!({ "graph": graph, "restrict_j": restrict_j, "oracle": oracle });
            let g = load_graph(graph)?;
            let report = compute_p(&g, *restrict_j);
            let mut result = to_value(&report);
            if let Some(w) = oracle {
                let mut levels = Vec::new();
                let mut agree = true;
                for level in &report.levels {
                    let entry = match brute_force_oracle(&g, level.p, *w, *oracle_budget) {
                        Ok(hit) => {
                            let ok = hit.is_none() || !level.connected;
                            agree &= ok;
                            json!({ "p": level.p, "lp_connected": level.connected, "hit": hit, "agree": ok })
                        }
                        Err(e) => json!({ "p": level.p, "lp_connected": level.connected, "error": e.to_string() }),
                    };
                    levels.push(entry);
                }
                result["oracle"] = json!({ "max_weight": w, "levels": levels, "agree": agree });
            }
            Ok(("pvalue", inputs, result, true))
        }
        Verb::Check { class, graph, embedding } => {
            let inputs = json!({ "class": class, "graph": graph, "embedding": embedding });
            let g = load_graph(graph)?;
            let labels = match embedding {
                Some(path) => {
                    let (labels, target) = io::parse_labels(&read(path)?, g.n())?;
                    // without a `target` line the class decides
                    let target = target.unwrap_or(match class.as_str() {
                        "johnson-medians" => EmbeddingTarget::Johnson(labels.first().map_or(0, Vec::len)),
                        "halved-cube-medians" => EmbeddingTarget::HalvedCube,
                        _ => EmbeddingTarget::Hypercube,
                    });
                    Some(LabeledEmbedding::new(labels, target))
                }
                None => None,
            };
            let verdict = check_class(class, &g, labels.as_ref())?;
            Ok(("check", inputs, to_value(&verdict), true))
        }
        Verb::VerifyPaper { suite } => {
            let report = run_suite(suite)?;
            let passed = report.passed;
            Ok(("verify-paper", json!({ "suite": suite }), to_value(&report), passed))
        }
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for i in items {
                            out.push_str(&format!("{pad}  -\n"));
                            render_text(i, indent + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {x}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{v}\n")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match run(&cli.verb) {
        Ok((verb, inputs, result, ok)) => {
            let report = RunReport { verb, inputs, result, wall_time_ms: start.elapsed().as_millis() };
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize")),
                Format::Text => {
                    let mut out = String::new();
                    render_text(&to_value(&report), 0, &mut out);
                    print!("{out}");
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
