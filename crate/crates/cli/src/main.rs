//! Batch verification runs over drawing files.
//!
//! Exit codes: 0 the checked property holds (or the construction
//! succeeded), 1 the property fails and the report carries a witness,
//! 2 usage or input error, 3 a search budget was exhausted.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use plext::builder::{self, QuadFamily, ThreeMatchingClass};
use plext::discharge::{self, ChargeElement, Non5ExtCertificate, Rule};
use plext::drawing::{self, EmbeddingMode, OnePlanarDrawing};
use plext::matching::{self, MatchingError};
use plext::{BuilderError, Graph, Matching};

use report::{Format, InputInfo, Report};

#[derive(Parser)]
#[command(
    name = "plext",
    version,
    about = "Matching extendability workbench for 1-planar drawings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for parallel per-vertex audits
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Node budget for the perfect-matching counter
    #[arg(long, global = true, default_value_t = matching::DEFAULT_COUNT_BUDGET)]
    max_nodes: u64,
    /// Cycle budget for barrier-cycle enumeration
    #[arg(long, global = true, default_value_t = builder::DEFAULT_CYCLE_BUDGET)]
    max_cycles: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Check structural validity of a drawing
    Validate { file: PathBuf },
    /// Size, degree, crossing and face statistics
    Stats { file: PathBuf },
    /// Decide n-extendability; exit 1 carries the first failing matching
    CheckExtendable {
        #[arg(long)]
        n: usize,
        file: PathBuf,
    },
    /// Decide k-factor-criticality; exit 1 carries the first failing set
    CheckCritical {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Count perfect matchings exactly
    CountPm { file: PathBuf },
    /// Build the optimal drawing over a 3-connected quadrangulation
    BuildOptimal {
        /// `cube` or `pdw:N`
        #[arg(long, conflicts_with = "from")]
        generator: Option<String>,
        /// Quadrangulation file (crossing-free drawing with rot lines)
        #[arg(long)]
        from: Option<PathBuf>,
        /// Write the drawing here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate barrier cycles up to a length bound
    FindBarrierCycles {
        #[arg(long)]
        max_len: usize,
        file: PathBuf,
    },
    /// Extract the non-extendable 3-matching of an optimal drawing
    #[command(name = "witness-3ext")]
    Witness3ext { file: PathBuf },
    /// Classify a 3-matching given by edge ids
    #[command(name = "classify-3matching")]
    Classify3matching {
        #[arg(long, value_delimiter = ',')]
        edges: Vec<usize>,
        file: PathBuf,
    },
    /// Run the charge audit and print the ledger
    AuditDischarge { file: PathBuf },
    /// Certify non-5-extendability
    CertifyNon5ext { file: PathBuf },
}

enum Outcome {
    Holds(Value),
    Fails(Value),
    InputError(String),
    ResourceLimit(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (outcome, input) = pool.install(|| run(&cli));
    let (code, outcome_value) = match outcome {
        Outcome::Holds(v) => (0u8, v),
        Outcome::Fails(v) => (1, v),
        Outcome::InputError(msg) => {
            eprintln!("error: {msg}");
            (2, report::outcome_error(msg))
        }
        Outcome::ResourceLimit(msg) => {
            eprintln!("error: {msg}");
            (3, report::outcome_error(msg))
        }
    };
    let mut rep = Report::new(command_echo, input, outcome_value);
    rep.timing_ms = start.elapsed().as_millis();
    print!("{}", rep.render(cli.format));
    ExitCode::from(code)
}

fn run(cli: &Cli) -> (Outcome, Option<InputInfo>) {
    match &cli.command {
        Command::Validate { file } => with_drawing(file, |d| cmd_validate(d)),
        Command::Stats { file } => with_drawing(file, |d| cmd_stats(d)),
        Command::CheckExtendable { n, file } => with_drawing(file, |d| cmd_extendable(d, *n)),
        Command::CheckCritical { k, file } => with_drawing(file, |d| cmd_critical(d, *k)),
        Command::CountPm { file } => with_drawing(file, |d| cmd_count_pm(d, cli.max_nodes)),
        Command::BuildOptimal {
            generator,
            from,
            output,
        } => cmd_build_optimal(generator.as_deref(), from.as_deref(), output.as_deref()),
        Command::FindBarrierCycles { max_len, file } => {
            with_drawing(file, |d| cmd_barrier(d, *max_len, cli.max_cycles))
        }
        Command::Witness3ext { file } => with_drawing(file, |d| cmd_witness(d)),
        Command::Classify3matching { edges, file } => {
            with_drawing(file, |d| cmd_classify(d, edges))
        }
        Command::AuditDischarge { file } => with_drawing(file, |d| cmd_audit(d)),
        Command::CertifyNon5ext { file } => with_drawing(file, |d| cmd_certify(d)),
    }
}

fn with_drawing(
    path: &Path,
    f: impl FnOnce(&OnePlanarDrawing) -> Outcome,
) -> (Outcome, Option<InputInfo>) {
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => {
            return (
                Outcome::InputError(format!("{}: {e}", path.display())),
                None,
            )
        }
    };
    let info = InputInfo::new(path, &bytes);
    let text = match String::from_utf8(bytes) {
        Ok(t) => t,
        Err(e) => return (Outcome::InputError(e.to_string()), Some(info)),
    };
    let drawing = match plext::parse_drawing(&text) {
        Ok(d) => d,
        Err(e) => {
            return (
                Outcome::InputError(format!("{}:{e}", path.display())),
                Some(info),
            )
        }
    };
    (f(&drawing), Some(info))
}

fn violation_string(v: &drawing::Violation) -> String {
    use drawing::Violation::*;
    match v {
        DoubleCrossed { edge } => format!("edge {edge} appears in more than one crossing pair"),
        SelfPaired { edge } => format!("edge {edge} is paired with itself"),
        CrossingSharesEndpoint {
            first,
            second,
            vertex,
        } => format!("crossing edges {first} and {second} share endpoint {vertex}"),
        MinDegreeAboveSeven { min_degree } => {
            format!("minimum degree {min_degree} exceeds 7, impossible in a 1-planar drawing")
        }
        RotationMismatch { vertex } => {
            format!("rotation at vertex {vertex} does not list its incident edges")
        }
        RotationNotPlanar => "rotation does not describe a sphere embedding".to_string(),
    }
}

fn cmd_validate(d: &OnePlanarDrawing) -> Outcome {
    let report = drawing::validate_drawing(d);
    let strings: Vec<String> = report.violations.iter().map(violation_string).collect();
    let value = json!({
        "valid": report.is_valid(),
        "violations": strings,
    });
    if report.is_valid() {
        Outcome::Holds(value)
    } else {
        Outcome::Fails(value)
    }
}

fn embedding_string(mode: EmbeddingMode) -> &'static str {
    match mode {
        EmbeddingMode::Supplied => "supplied",
        EmbeddingMode::Computed => "computed",
    }
}

fn cmd_stats(d: &OnePlanarDrawing) -> Outcome {
    let g = d.graph();
    let mut value = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "crossings": d.crossings().len(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "connected": g.is_connected(),
        "optimal": d.is_optimal(),
    });
    if g.vertex_count() >= 2 {
        if let Ok(kappa) = plext::vertex_connectivity(g) {
            value["connectivity"] = json!(kappa);
        }
    }
    if drawing::validate_drawing(d).is_valid() {
        if let Ok(a) = drawing::build_associated(d) {
            let false3 = a
                .faces()
                .iter()
                .filter(|f| f.degree() == 3 && f.is_false())
                .count();
            value["associated"] = json!({
                "vertices": a.graph().vertex_count(),
                "edges": a.graph().edge_count(),
                "faces": a.faces().len(),
                "false_3_faces": false3,
                "embedding": embedding_string(a.embedding_mode()),
            });
        }
    }
    Outcome::Holds(value)
}

fn matching_json(g: &Graph, m: &Matching) -> Value {
    let endpoints: Vec<Value> = m
        .edge_ids()
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            json!([u, v])
        })
        .collect();
    json!({ "edges": m.edge_ids(), "endpoints": endpoints })
}

fn cmd_extendable(d: &OnePlanarDrawing, n: usize) -> Outcome {
    let g = d.graph();
    match matching::is_n_extendable(g, n) {
        Ok(v) => {
            let mut value = json!({
                "n": n,
                "extendable": v.extendable,
                "checked_count": v.checked_count,
            });
            if let Some(w) = &v.witness {
                value["witness"] = matching_json(g, w);
            }
            if v.extendable {
                Outcome::Holds(value)
            } else {
                Outcome::Fails(value)
            }
        }
        Err(e) => Outcome::InputError(e.to_string()),
    }
}

fn cmd_critical(d: &OnePlanarDrawing, k: usize) -> Outcome {
    match matching::is_k_factor_critical(d.graph(), k) {
        Ok(v) => {
            let mut value = json!({ "k": k, "critical": v.critical });
            if let Some(w) = &v.witness {
                value["witness"] = json!(w.ids());
            }
            if v.critical {
                Outcome::Holds(value)
            } else {
                Outcome::Fails(value)
            }
        }
        Err(e) => Outcome::InputError(e.to_string()),
    }
}

fn cmd_count_pm(d: &OnePlanarDrawing, max_nodes: u64) -> Outcome {
    match matching::count_perfect_matchings_with_budget(d.graph(), max_nodes) {
        Ok(count) => Outcome::Holds(json!({ "perfect_matchings": count })),
        Err(MatchingError::ResourceLimit(b)) => {
            Outcome::ResourceLimit(format!("node budget {b} exhausted"))
        }
        Err(e) => Outcome::InputError(e.to_string()),
    }
}

fn parse_generator(spec: &str) -> Result<QuadFamily, String> {
    if spec == "cube" {
        return Ok(QuadFamily::Cube);
    }
    if let Some(n) = spec.strip_prefix("pdw:") {
        let n: usize = n
            .parse()
            .map_err(|_| format!("bad pseudo-double-wheel size `{n}`"))?;
        return Ok(QuadFamily::PseudoDoubleWheel(n));
    }
    Err(format!("unknown generator `{spec}`; use cube or pdw:N"))
}

fn cmd_build_optimal(
    generator: Option<&str>,
    from: Option<&Path>,
    output: Option<&Path>,
) -> (Outcome, Option<InputInfo>) {
    let (quad, input) = match (generator, from) {
        (Some(spec), None) => {
            let family = match parse_generator(spec) {
                Ok(f) => f,
                Err(e) => return (Outcome::InputError(e), None),
            };
            match builder::generate_quadrangulation(family) {
                Ok(q) => (q, None),
                Err(e) => return (Outcome::InputError(e.to_string()), None),
            }
        }
        (None, Some(path)) => {
            let bytes = match std::fs::read(path) {
                Ok(b) => b,
                Err(e) => {
                    return (
                        Outcome::InputError(format!("{}: {e}", path.display())),
                        None,
                    )
                }
            };
            let info = InputInfo::new(path, &bytes);
            let text = match String::from_utf8(bytes) {
                Ok(t) => t,
                Err(e) => return (Outcome::InputError(e.to_string()), Some(info)),
            };
            let d = match plext::parse_drawing(&text) {
                Ok(d) => d,
                Err(e) => {
                    return (
                        Outcome::InputError(format!("{}:{e}", path.display())),
                        Some(info),
                    )
                }
            };
            match builder::Quadrangulation::from_plane_drawing(&d) {
                Ok(q) => (q, Some(info)),
                Err(e) => return (Outcome::InputError(e.to_string()), Some(info)),
            }
        }
        _ => {
            return (
                Outcome::InputError("build-optimal needs exactly one of --generator or --from".into()),
                None,
            )
        }
    };
    match builder::optimal_from_quadrangulation(&quad) {
        Ok(d) => {
            let text = plext::serialize_drawing(&d);
            let mut value = json!({
                "vertices": d.graph().vertex_count(),
                "edges": d.graph().edge_count(),
                "crossings": d.crossings().len(),
            });
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        return (
                            Outcome::InputError(format!("{}: {e}", path.display())),
                            input,
                        );
                    }
                    value["output"] = json!(path.display().to_string());
                }
                None => {
                    value["drawing"] = json!(text);
                }
            }
            (Outcome::Holds(value), input)
        }
        Err(e @ (BuilderError::NotThreeConnected { .. } | BuilderError::MultiEdge { .. })) => (
            Outcome::Fails(json!({ "constructed": false, "reason": e.to_string() })),
            input,
        ),
        Err(e) => (Outcome::InputError(e.to_string()), input),
    }
}

fn barrier_json(b: &builder::BarrierCycle) -> Value {
    json!({
        "cycle": b.cycle,
        "inside": b.inside.ids(),
        "outside": b.outside.ids(),
    })
}

fn cmd_barrier(d: &OnePlanarDrawing, max_len: usize, max_cycles: u64) -> Outcome {
    match builder::barrier_cycle_search_with_budget(d, max_len, max_cycles) {
        Ok(cycles) => {
            let value = json!({
                "max_len": max_len,
                "count": cycles.len(),
                "barrier_cycles": cycles.iter().map(barrier_json).collect::<Vec<_>>(),
            });
            if cycles.is_empty() {
                Outcome::Fails(value)
            } else {
                Outcome::Holds(value)
            }
        }
        Err(BuilderError::ResourceLimit(b)) => {
            Outcome::ResourceLimit(format!("cycle budget {b} exhausted"))
        }
        Err(e) => Outcome::InputError(e.to_string()),
    }
}

fn cmd_witness(d: &OnePlanarDrawing) -> Outcome {
    match builder::three_matching_witness(d) {
        Ok(m) => {
            let g = d.graph();
            let covered = m.vertices(g);
            let isolated: Vec<usize> = (0..g.vertex_count())
                .filter(|&v| !covered.contains(v) && g.neighbors(v).all(|w| covered.contains(w)))
                .collect();
            let mut value = json!({ "witness": matching_json(g, &m) });
            value["isolates"] = json!(isolated);
            Outcome::Holds(value)
        }
        Err(e) => Outcome::InputError(e.to_string()),
    }
}

fn cmd_classify(d: &OnePlanarDrawing, edges: &[usize]) -> Outcome {
    let m = match Matching::new(d.graph(), edges.to_vec()) {
        Ok(m) => m,
        Err(e) => return Outcome::InputError(e.to_string()),
    };
    match builder::classify_3matching(d, &m) {
        Ok(ThreeMatchingClass::Extendable) => {
            Outcome::Holds(json!({ "class": "extendable" }))
        }
        Ok(ThreeMatchingClass::BlockedByBarrier(b)) => Outcome::Fails(json!({
            "class": "blocked_by_barrier",
            "barrier": barrier_json(&b),
        })),
        Err(
            e @ (BuilderError::PreconditionFailed(_) | BuilderError::TheoremViolation(_)),
        ) => Outcome::InputError(e.to_string()),
        Err(e) => Outcome::InputError(e.to_string()),
    }
}

fn element_string(e: ChargeElement) -> String {
    match e {
        ChargeElement::Vertex(v) => format!("vertex {v}"),
        ChargeElement::Face(f) => format!("face {f}"),
    }
}

fn cmd_audit(d: &OnePlanarDrawing) -> Outcome {
    let a = match drawing::build_associated(d) {
        Ok(a) => a,
        Err(e) => return Outcome::InputError(e.to_string()),
    };
    let initial = match discharge::initial_charge(&a) {
        Ok(c) => c,
        Err(e) => return Outcome::InputError(e.to_string()),
    };
    let final_charges = discharge::apply_rules(&a, &initial);
    let transfers = discharge::transfers(&a);

    let mut ledger = Vec::new();
    for v in 0..a.graph().vertex_count() {
        let given: Vec<Value> = transfers
            .iter()
            .filter(|t| t.from_vertex == v)
            .map(|t| {
                json!({
                    "to": element_string(ChargeElement::Face(t.to_face)),
                    "amount": t.amount.to_string(),
                    "rule": rule_string(t.rule),
                })
            })
            .collect();
        ledger.push(json!({
            "element": element_string(ChargeElement::Vertex(v)),
            "initial": initial.vertex_charge[v].to_string(),
            "transfers": given,
            "final": final_charges.vertex_charge[v].to_string(),
        }));
    }
    for f in 0..a.faces().len() {
        let received: Vec<Value> = transfers
            .iter()
            .filter(|t| t.to_face == f)
            .map(|t| {
                json!({
                    "from": element_string(ChargeElement::Vertex(t.from_vertex)),
                    "amount": t.amount.to_string(),
                    "rule": rule_string(t.rule),
                })
            })
            .collect();
        ledger.push(json!({
            "element": element_string(ChargeElement::Face(f)),
            "initial": initial.face_charge[f].to_string(),
            "transfers": received,
            "final": final_charges.face_charge[f].to_string(),
        }));
    }
    let negative: Vec<Value> = discharge::negative_report(&final_charges)
        .into_iter()
        .map(|(e, q)| json!({ "element": element_string(e), "charge": q.to_string() }))
        .collect();

    let claims = match discharge::claims_audit(&a, d.graph()) {
        Ok(reports) => reports
            .into_iter()
            .map(|r| {
                json!({
                    "vertex": r.vertex,
                    "degree": r.degree,
                    "true_3_faces": r.true3,
                    "false_3_faces": r.false3,
                    "violations": r.violated.len(),
                    "certificate": r.certificate.map(|c| matching_json(d.graph(), &c.matching_in_neighborhood)),
                })
            })
            .collect::<Vec<_>>(),
        Err(e) => return Outcome::InputError(e.to_string()),
    };

    let ok = initial.total().to_string() == "-20" && final_charges.total().to_string() == "-20";
    let value = json!({
        "initial_total": initial.total().to_string(),
        "final_total": final_charges.total().to_string(),
        "embedding": embedding_string(a.embedding_mode()),
        "negative": negative,
        "vertex_audits": claims,
        "ledger": ledger,
    });
    if ok {
        Outcome::Holds(value)
    } else {
        Outcome::Fails(value)
    }
}

fn rule_string(r: Rule) -> &'static str {
    match r {
        Rule::FromFalseVertex => "false-vertex",
        Rule::FromHighDegreeVertex => "high-degree-vertex",
    }
}

fn cmd_certify(d: &OnePlanarDrawing) -> Outcome {
    match discharge::non5ext_certificate(d) {
        Some(Non5ExtCertificate::OrderBound { order }) => Outcome::Holds(json!({
            "certificate": "order_bound",
            "order": order,
        })),
        Some(Non5ExtCertificate::ConnectivityBound { connectivity }) => Outcome::Holds(json!({
            "certificate": "connectivity_bound",
            "connectivity": connectivity,
        })),
        Some(Non5ExtCertificate::Dean(c)) => Outcome::Holds(json!({
            "certificate": "neighborhood_matching",
            "vertex": c.vertex,
            "t": c.t,
            "matching": matching_json(d.graph(), &c.matching_in_neighborhood),
        })),
        None => Outcome::Fails(json!({ "certificate": "none_found" })),
    }
}
