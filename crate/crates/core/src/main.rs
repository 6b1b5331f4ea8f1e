//! Command-line front end: exact invariants, products, formulas, bounds,
//! witness constructions, the verification harness and the equality hunt.
//!
//! Exit codes: 0 all checks pass, 1 a counterexample was found, 2 usage or
//! input error. `LEXDOM_WORKERS` caps the worker threads of corpus sweeps.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use lexdom::constructions::{
    default_dominating_pair, hk_witness, path_scheme_gamma2, scheme_cardinality,
    small_value_witness, two_universal_witness, universal_lift_witness,
};
use lexdom::formulas::{gamma_x2_lex_bounds, gamma_x2_lex_formula};
use lexdom::graph::{graph_from_spec, parse_graph6, write_graph6, FamilySpec, Graph, VertexSet};
use lexdom::product::lex_product;
use lexdom::solvers::{
    enumerate_minimum_sets, exact_invariant, min_witness, validate, InvariantKind, SolverError,
    Witness,
};
use lexdom::verify::{
    emit_csv, emit_json, emit_markdown, hunt_equality, run_all, run_check, CheckId, CorpusSpec,
};

#[derive(Parser)]
#[command(
    name = "lexdom",
    version,
    about = "Exact double-domination toolkit for lexicographic product graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an exact invariant of one graph
    Invariant {
        /// graph6 line, family spec like `path:7`, or `family:path:7`
        #[arg(long)]
        graph: String,
        /// one of g, gt, gx2, g2t, rho, gtr, gtr2
        #[arg(long)]
        kind: String,
        /// include an optimal witness
        #[arg(long)]
        witness: bool,
        /// count every optimal witness
        #[arg(long = "all-min")]
        all_min: bool,
    },
    /// Build a lexicographic product and print its graph6 line plus an
    /// indexing sidecar
    Product {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// graph6 (line plus sidecar) or json (single object)
        #[arg(long, default_value = "graph6")]
        emit: String,
    },
    /// Evaluate the closed product formula for a family first factor
    Formula {
        /// family spec, e.g. `path:7` or `family:cycle:9`
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Intersect every applicable bound on the product value
    Bounds {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Build a witness construction and validate it
    Construct {
        /// path-g2, small-value, two-universal, universal-lift, or hk
        #[arg(long)]
        scheme: String,
        /// path length for path-g2
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        h: Option<String>,
        /// small-value condition number 1..=6
        #[arg(long)]
        case: Option<u8>,
        /// dominating pair for path-g2, e.g. `1,2` (default: smallest)
        #[arg(long)]
        pair: Option<String>,
        /// single-dot vertex for path-g2 (default: smallest of the pair)
        #[arg(long)]
        single: Option<usize>,
        /// cycle length for hk
        #[arg(long)]
        k: Option<usize>,
        /// block sizes for hk, e.g. `3,2,3,2`
        #[arg(long)]
        blocks: Option<String>,
        #[arg(long, default_value = "json")]
        emit: String,
    },
    /// Run theorem checks over a corpus
    Verify {
        /// run a single check, e.g. V6 (default: all sixteen)
        #[arg(long)]
        check: Option<String>,
        /// `default` or a path to a graph6 file (one graph per line)
        #[arg(long, default_value = "default")]
        corpus: String,
        /// product order cap
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value = "json")]
        format: String,
        /// key=value corpus overrides
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Scan single graphs for double domination meeting total Roman {2}
    Hunt {
        /// `default` or a path to a graph6 file
        #[arg(long, default_value = "default")]
        corpus: String,
        /// max order of enumerated graphs
        #[arg(long)]
        nmax: Option<usize>,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Ok(workers) = std::env::var("LEXDOM_WORKERS") {
        if let Ok(count) = workers.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(count).build_global();
        }
    }
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Invariant { graph, kind, witness, all_min } => {
            let g = graph_from_spec(&graph).map_err(|e| e.to_string())?;
            let kind = InvariantKind::from_code(&kind)
                .ok_or_else(|| format!("unknown invariant kind `{kind}`"))?;
            let mut out = json!({ "graph": write_graph6(&g), "kind": kind.code() });
            match exact_invariant(&g, kind) {
                Ok(value) => {
                    out["value"] = json!(value);
                    if witness {
                        match min_witness(&g, kind).map_err(|e| e.to_string())? {
                            Witness::Set(s) => out["witness"] = json!(s.to_vec()),
                            Witness::Function(f) => out["witness"] = json!(f.values()),
                        }
                    }
                    if all_min {
                        let all = enumerate_minimum_sets(&g, kind).map_err(|e| e.to_string())?;
                        out["count"] = json!(all.len());
                    }
                }
                Err(SolverError::Infeasible { reason, .. }) => {
                    out["infeasible"] = json!(reason);
                }
                Err(other) => return Err(other.to_string()),
            }
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            Ok(0)
        }
        Command::Product { g, h, emit } => {
            let g = graph_from_spec(&g).map_err(|e| e.to_string())?;
            let h = graph_from_spec(&h).map_err(|e| e.to_string())?;
            let (product, idx) = lex_product(&g, &h).map_err(|e| e.to_string())?;
            let line = write_graph6(&product);
            let sidecar = json!({
                "n_g": idx.n_g(),
                "n_h": idx.n_h(),
                "order": idx.len(),
                "encoding": "row-major"
            });
            match emit.as_str() {
                "graph6" => {
                    println!("{line}");
                    println!("{sidecar}");
                }
                "json" => {
                    let mut out = sidecar;
                    out["graph6"] = json!(line);
                    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
                }
                other => return Err(format!("unknown emit format `{other}`")),
            }
            Ok(0)
        }
        Command::Formula { g, h } => {
            let spec: FamilySpec = g
                .strip_prefix("family:")
                .unwrap_or(&g)
                .parse()
                .map_err(|e: lexdom::graph::GraphError| e.to_string())?;
            let h = graph_from_spec(&h).map_err(|e| e.to_string())?;
            let result = gamma_x2_lex_formula(&spec, &h).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&result).expect("serializable"));
            Ok(0)
        }
        Command::Bounds { g, h } => {
            let g = graph_from_spec(&g).map_err(|e| e.to_string())?;
            let h = graph_from_spec(&h).map_err(|e| e.to_string())?;
            let report = gamma_x2_lex_bounds(&g, &h).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            Ok(0)
        }
        Command::Construct { scheme, n, g, h, case, pair, single, k, blocks, emit } => {
            if emit != "json" {
                return Err(format!("unknown emit format `{emit}`"));
            }
            let out = run_construct(&scheme, n, g, h, case, pair, single, k, blocks)?;
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            Ok(0)
        }
        Command::Verify { check, corpus, cap, format, config } => {
            let mut spec = CorpusSpec::default();
            if let Some(path) = config {
                apply_config(&mut spec, &path)?;
            }
            if corpus != "default" {
                spec.file_graphs = Some(read_graph6_file(&corpus)?);
            }
            if let Some(cap) = cap {
                spec.product_cap = cap;
            }
            let corpus = spec.build().map_err(|e| e.to_string())?;
            let reports = match check {
                Some(id) => vec![run_check(id.parse::<CheckId>()?, &corpus)],
                None => run_all(&corpus),
            };
            let text = match format.as_str() {
                "json" => emit_json(&reports),
                "csv" => emit_csv(&reports),
                "markdown" => emit_markdown(&reports),
                other => return Err(format!("unknown report format `{other}`")),
            };
            println!("{text}");
            Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
        }
        Command::Hunt { corpus, nmax } => {
            let mut spec = CorpusSpec::default();
            if corpus != "default" {
                spec.file_graphs = Some(read_graph6_file(&corpus)?);
            }
            if let Some(nmax) = nmax {
                spec.single_max = nmax;
            }
            let corpus = spec.build().map_err(|e| e.to_string())?;
            let hits = hunt_equality(&corpus);
            println!("{}", serde_json::to_string_pretty(&hits).expect("serializable"));
            Ok(0)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_construct(
    scheme: &str,
    n: Option<usize>,
    g: Option<String>,
    h: Option<String>,
    case: Option<u8>,
    pair: Option<String>,
    single: Option<usize>,
    k: Option<usize>,
    blocks: Option<String>,
) -> Result<serde_json::Value, String> {
    let need = |opt: Option<String>, what: &str| -> Result<Graph, String> {
        let text = opt.ok_or_else(|| format!("--{what} is required for this scheme"))?;
        graph_from_spec(&text).map_err(|e| e.to_string())
    };
    let parse_list = |text: &str| -> Result<Vec<usize>, String> {
        text.split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| e.to_string()))
            .collect()
    };
    match scheme {
        "path-g2" => {
            let n = n.ok_or("--n is required for path-g2")?;
            let h = need(h, "h")?;
            let (dom_pair, dot) = match pair {
                Some(text) => {
                    let set: VertexSet = parse_list(&text)?.into_iter().collect();
                    (set, single.unwrap_or(set.min().unwrap_or(0)))
                }
                None => {
                    let (set, first) = default_dominating_pair(&h).map_err(|e| e.to_string())?;
                    (set, single.unwrap_or(first))
                }
            };
            let witness = path_scheme_gamma2(n, &h, dom_pair, dot).map_err(|e| e.to_string())?;
            let path = FamilySpec::Path(n).build().map_err(|e| e.to_string())?;
            let (product, _) = lex_product(&path, &h).map_err(|e| e.to_string())?;
            let valid = validate(&product, InvariantKind::DoubleDomination, &Witness::Set(witness));
            Ok(json!({
                "scheme": "path-g2",
                "n": n,
                "kind": InvariantKind::DoubleDomination.code(),
                "witness": witness.to_vec(),
                "cardinality": witness.len(),
                "claimed_cardinality": scheme_cardinality(n),
                "valid": valid,
            }))
        }
        "small-value" => {
            let g = need(g, "g")?;
            let h = need(h, "h")?;
            let case = case.ok_or("--case 1..=6 is required for small-value")?;
            let witness = small_value_witness(&g, &h, case).map_err(|e| e.to_string())?;
            let (product, _) = lex_product(&g, &h).map_err(|e| e.to_string())?;
            let valid = validate(&product, InvariantKind::DoubleDomination, &Witness::Set(witness));
            Ok(json!({
                "scheme": "small-value",
                "case": case,
                "kind": InvariantKind::DoubleDomination.code(),
                "witness": witness.to_vec(),
                "cardinality": witness.len(),
                "valid": valid,
            }))
        }
        "two-universal" => {
            let g = need(g, "g")?;
            let h = need(h, "h")?;
            let witness = two_universal_witness(&g, &h).map_err(|e| e.to_string())?;
            let (product, _) = lex_product(&g, &h).map_err(|e| e.to_string())?;
            let valid = validate(&product, InvariantKind::DoubleDomination, &Witness::Set(witness));
            Ok(json!({
                "scheme": "two-universal",
                "kind": InvariantKind::DoubleDomination.code(),
                "witness": witness.to_vec(),
                "cardinality": witness.len(),
                "valid": valid,
            }))
        }
        "universal-lift" => {
            let g = need(g, "g")?;
            let h = need(h, "h")?;
            let witness = universal_lift_witness(&g, &h).map_err(|e| e.to_string())?;
            let (product, _) = lex_product(&g, &h).map_err(|e| e.to_string())?;
            let weight = witness.weight();
            let valid = validate(
                &product,
                InvariantKind::TotalRomanTwo,
                &Witness::Function(witness.clone()),
            );
            Ok(json!({
                "scheme": "universal-lift",
                "kind": InvariantKind::TotalRomanTwo.code(),
                "witness": witness.values(),
                "weight": weight,
                "valid": valid,
            }))
        }
        "hk" => {
            let k = k.ok_or("--k is required for hk")?;
            let blocks = parse_list(&blocks.ok_or("--blocks is required for hk")?)?;
            let witness = hk_witness(k, &blocks).map_err(|e| e.to_string())?;
            let graph = FamilySpec::Hk { k, blocks }.build().map_err(|e| e.to_string())?;
            let valid = validate(&graph, InvariantKind::DoubleTotalDomination, &Witness::Set(witness));
            Ok(json!({
                "scheme": "hk",
                "kind": InvariantKind::DoubleTotalDomination.code(),
                "witness": witness.to_vec(),
                "cardinality": witness.len(),
                "valid": valid,
            }))
        }
        other => Err(format!("unknown scheme `{other}`")),
    }
}

fn apply_config(spec: &mut CorpusSpec, path: &PathBuf) -> Result<(), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| format!("{}:{}: expected an integer", path.display(), lineno + 1))?;
        match key.trim() {
            "single_max" => spec.single_max = value,
            "pair_g_max" => spec.pair_g_max = value,
            "pair_h_max" => spec.pair_h_max = value,
            "grid_max" => spec.grid_max = value,
            "product_cap" | "cap" => spec.product_cap = value,
            "minset_cap" => spec.minset_cap = value,
            "projection_cap" => spec.projection_cap = value,
            "function_cap" => spec.function_cap = value,
            other => return Err(format!("{}:{}: unknown key `{other}`", path.display(), lineno + 1)),
        }
    }
    Ok(())
}

fn read_graph6_file(path: &str) -> Result<Vec<Graph>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let mut graphs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| format!("{path}:{}: {e}", lineno + 1))?;
        graphs.push(g);
    }
    Ok(graphs)
}
