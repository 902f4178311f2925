//! Command-line surface for the wellcover library.

use wellcover_cli::{formats, graph6};

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use wellcover::cover::{basify, find_basic_clique_cover_guarded, COVER_GUARD};
use wellcover::edge_ring::{edge_ring, wellcovered_via_zero_divisors};
use wellcover::enumerate::graphs_of_order;
use wellcover::graph::{ENUM_HARD_CAP, ORACLE_GUARD};
use wellcover::simplicial::FACE_GUARD;
use wellcover::wellcovered::{
    check_ravindra, check_well_covered, conjecture_hunt_stream,
    verify_spartite_consequences, HuntReport, HUNT_GUARD,
};
use wellcover::{BasicCliqueCover, Error, Graph, Result, SimplicialComplex};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "wellcover", version, about = "Well-covered graph recognition via clique covers")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Emit machine-readable JSON instead of prose.
    #[arg(long, global = true)]
    json: bool,

    /// Raise the resource guards to their hard caps.
    #[arg(long, global = true, env = "WELLCOVER_FORCE")]
    force: bool,

    /// Guard for exhaustive per-graph routines (vertices).
    #[arg(long, global = true, env = "WELLCOVER_MAX_N")]
    max_n: Option<usize>,

    /// Guard for face enumeration in simplicial complexes.
    #[arg(long, global = true, env = "WELLCOVER_MAX_FACES")]
    max_faces: Option<usize>,

    /// Worker thread count for the parallel sweeps.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Seed for randomized corpora (bench).
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Graph input format.
    #[arg(long, global = true, value_enum, default_value_t = GraphFormat::Auto)]
    format: GraphFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Auto,
    Edgelist,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive well-coveredness oracle over all maximal independent sets.
    Oracle { graph: PathBuf },

    /// Decide well-coveredness through a basic clique cover, by the
    /// domination criterion and its zero-divisor reformulation.
    Check {
        graph: PathBuf,
        /// Clique cover file (one clique per line); found if omitted.
        #[arg(long)]
        cover: Option<PathBuf>,
    },

    /// Find a basic clique cover, or report that none exists.
    Cover { graph: PathBuf },

    /// Build the non-comparability graph of a complex given by facets.
    Subdivide {
        facets: PathBuf,
        /// Cross-check purity of the complex against well-coveredness of
        /// the derived graph.
        #[arg(long)]
        check: bool,
    },

    /// Test whether a linear form is a zero-divisor in the edge ring.
    Zerodiv {
        graph: PathBuf,
        /// The form, e.g. `x3+x7` or `2*x1-1/3*x4`.
        #[arg(long)]
        form: String,
    },

    /// Minimal primes of the edge ideal (= minimal vertex covers).
    Primes { graph: PathBuf },

    /// Ravindra's criterion for bipartite graphs.
    Ravindra { graph: PathBuf },

    /// Verify the s-partite consequences (equal parts, pairwise perfect
    /// matchings) on a well-covered graph with uniform clique size.
    Spartite {
        graph: PathBuf,
        /// Partition file: one part per line.
        #[arg(long)]
        parts: PathBuf,
    },

    /// Sweep all graphs up to a given order for conjecture counterexamples
    /// and shortcut disagreements.
    Hunt {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Write one JSON record per order to this file.
        #[arg(long)]
        stream: Option<PathBuf>,
    },

    /// Time oracle vs checker vs zero-divisor path on random derived
    /// graphs; CSV output.
    Bench {
        /// Ground-set size for the random complexes.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.opts.workers {
        // Picked up by rayon when its global pool is first touched.
        std::env::set_var("RAYON_NUM_THREADS", w.to_string());
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceGuard { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

impl GlobalOpts {
    fn oracle_guard(&self) -> usize {
        if self.force {
            ENUM_HARD_CAP
        } else {
            self.max_n.unwrap_or(ORACLE_GUARD)
        }
    }

    fn cover_guard(&self) -> usize {
        if self.force {
            ENUM_HARD_CAP
        } else {
            self.max_n.unwrap_or(COVER_GUARD)
        }
    }

    fn face_guard(&self) -> usize {
        if self.force {
            usize::MAX
        } else {
            self.max_faces.unwrap_or(FACE_GUARD)
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    let io = |e: std::io::Error| Error::InvalidInput(format!("{}: {e}", path.display()));
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let text = read_input(path)?;
    let format = match format {
        GraphFormat::Auto => {
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            if first.split_whitespace().count() >= 2 {
                GraphFormat::Edgelist
            } else {
                GraphFormat::Graph6
            }
        }
        other => other,
    };
    match format {
        GraphFormat::Edgelist => formats::parse_edgelist(&text),
        GraphFormat::Graph6 => graph6::decode(text.trim()),
        GraphFormat::Auto => unreachable!(),
    }
}

/// Wrap a command payload in the versioned certificate envelope.
fn emit(opts: &GlobalOpts, command: &str, started: Instant, payload: Value, human: &str) {
    if opts.json {
        let mut envelope = json!({
            "schema": SCHEMA_VERSION,
            "command": command,
            "elapsed_us": started.elapsed().as_micros() as u64,
        });
        envelope
            .as_object_mut()
            .unwrap()
            .extend(payload.as_object().cloned().unwrap_or_default());
        println!("{}", serde_json::to_string_pretty(&envelope).unwrap());
    } else {
        println!("{}", human.trim_end());
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap()
}

fn run(cli: &Cli) -> Result<u8> {
    let opts = &cli.opts;
    let started = Instant::now();
    match &cli.command {
        Command::Oracle { graph } => {
            let g = load_graph(graph, opts.format)?;
            let verdict = g.is_well_covered_oracle_guarded(opts.oracle_guard())?;
            let human = match verdict.common_size {
                Some(k) => format!(
                    "well-covered: all {} maximal independent sets have size {k}",
                    verdict.count
                ),
                None => {
                    let (big, small) = verdict.witnesses.as_ref().unwrap();
                    format!(
                        "not well-covered: maximal independent sets {:?} (size {}) and {:?} (size {})",
                        big, big.len(), small, small.len()
                    )
                }
            };
            emit(opts, "oracle", started, to_value(&verdict), &human);
            Ok(0)
        }

        Command::Check { graph, cover } => {
            let g = load_graph(graph, opts.format)?;
            let cover = resolve_cover(&g, cover.as_deref(), opts)?;
            let verdict = check_well_covered(&g, &cover)?;
            let algebraic = wellcovered_via_zero_divisors(&g, &cover)?;
            let oracle = if g.n() <= opts.oracle_guard() {
                Some(g.is_well_covered_oracle_guarded(opts.oracle_guard())?)
            } else {
                None
            };
            let mut disagreement = Vec::new();
            if verdict.well_covered != algebraic.well_covered {
                disagreement.push("domination checker vs zero-divisor checker");
            }
            if let Some(o) = &oracle {
                if o.well_covered != verdict.well_covered {
                    disagreement.push("checker vs oracle");
                }
            }
            let payload = json!({
                "well_covered": verdict.well_covered,
                "alpha": verdict.alpha,
                "cover": to_value(&cover),
                "verdict": to_value(&verdict),
                "zero_divisor_verdict": to_value(&algebraic),
                "oracle": oracle.as_ref().map(to_value),
                "disagreement": disagreement,
            });
            let mut human = format!(
                "{} (alpha = {}, cover of {} cliques, both criteria agree)",
                if verdict.well_covered { "well-covered" } else { "not well-covered" },
                verdict.alpha,
                cover.cliques.len()
            );
            if !disagreement.is_empty() {
                human = format!("CROSS-CHECK DISAGREEMENT: {}", disagreement.join("; "));
            }
            emit(opts, "check", started, payload, &human);
            Ok(if disagreement.is_empty() { 0 } else { 3 })
        }

        Command::Cover { graph } => {
            let g = load_graph(graph, opts.format)?;
            let found = find_basic_clique_cover_guarded(&g, opts.cover_guard())?;
            let alpha = g.alpha()?;
            let payload = json!({
                "alpha": alpha,
                "in_class": found.is_some(),
                "cover": found.as_ref().map(to_value),
            });
            let human = match &found {
                Some(c) => format!(
                    "basic clique cover with {} cliques: {:?}",
                    c.cliques.len(),
                    c.cliques
                ),
                None => format!(
                    "no basic clique cover: the vertices cannot be partitioned into alpha = {alpha} cliques"
                ),
            };
            emit(opts, "cover", started, payload, &human);
            Ok(0)
        }

        Command::Subdivide { facets, check } => {
            let text = read_input(facets)?;
            let delta = formats::parse_facets(&text, false)?;
            for &v in delta.repaired() {
                eprintln!("note: vertex {v} appears in no facet; added as a singleton facet");
            }
            let (g, map, cover) =
                delta.noncomparability_graph_guarded(opts.face_guard())?;
            let g6 = (g.n() <= 62).then(|| graph6::encode(&g).unwrap());
            let mut disagreement = Vec::new();
            let cross = if *check {
                let verdict = check_well_covered(&g, &cover)?;
                if verdict.well_covered != delta.is_pure() {
                    disagreement.push("purity vs domination checker");
                }
                if g.n() <= opts.oracle_guard() {
                    let o = g.is_well_covered_oracle_guarded(opts.oracle_guard())?;
                    if o.well_covered != delta.is_pure() {
                        disagreement.push("purity vs oracle");
                    }
                }
                Some(verdict)
            } else {
                None
            };
            let payload = json!({
                "pure": delta.is_pure(),
                "faces": to_value(&map.faces()),
                "edgelist": formats::render_edgelist(&g),
                "graph6": g6,
                "cover": to_value(&cover),
                "check": cross.as_ref().map(to_value),
                "disagreement": disagreement,
            });
            let mut human = String::new();
            human.push_str(&format!("# faces, in vertex order\n"));
            for (i, f) in map.faces().iter().enumerate() {
                human.push_str(&format!("# {i}: {f:?}\n"));
            }
            human.push_str(&formats::render_edgelist(&g));
            if let Some(g6) = &g6 {
                human.push_str(&format!("graph6: {g6}\n"));
            }
            human.push_str(&format!(
                "cover levels: {:?}\n",
                cover.cliques.iter().map(|c| c.len()).collect::<Vec<_>>()
            ));
            if *check {
                human.push_str(&format!(
                    "purity cross-check: pure={}, agreement={}\n",
                    delta.is_pure(),
                    disagreement.is_empty()
                ));
            }
            emit(opts, "subdivide", started, payload, &human);
            Ok(if disagreement.is_empty() { 0 } else { 3 })
        }

        Command::Zerodiv { graph, form } => {
            let g = load_graph(graph, opts.format)?;
            let f = formats::parse_linear_form(form)?;
            let witness = edge_ring(&g).linear_zero_divisor(&f)?;
            let payload = json!({
                "form": to_value(&f),
                "zero_divisor": witness.is_some(),
                "witness": witness.as_ref().map(to_value),
            });
            let human = match &witness {
                Some(m) => format!("zero-divisor: witness monomial {m}"),
                None => "not a zero-divisor".into(),
            };
            emit(opts, "zerodiv", started, payload, &human);
            Ok(0)
        }

        Command::Primes { graph } => {
            let g = load_graph(graph, opts.format)?;
            let primes = edge_ring(&g).minimal_primes_guarded(opts.oracle_guard())?;
            let human = primes
                .iter()
                .map(|p| {
                    let vars: Vec<String> = p.iter().map(|v| format!("x{v}")).collect();
                    format!("({})", vars.join(", "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(
                opts,
                "primes",
                started,
                json!({ "minimal_primes": to_value(&primes) }),
                &human,
            );
            Ok(0)
        }

        Command::Ravindra { graph } => {
            let g = load_graph(graph, opts.format)?;
            let outcome = check_ravindra(&g)?;
            let human = format!("{outcome:?}");
            emit(
                opts,
                "ravindra",
                started,
                json!({ "outcome": to_value(&outcome) }),
                &human,
            );
            Ok(0)
        }

        Command::Spartite { graph, parts } => {
            let g = load_graph(graph, opts.format)?;
            let parts = formats::parse_vertex_sets(&read_input(parts)?)?;
            let outcome = verify_spartite_consequences(&g, &parts)?;
            let human = format!("{outcome:?}");
            emit(
                opts,
                "spartite",
                started,
                json!({ "outcome": to_value(&outcome) }),
                &human,
            );
            Ok(0)
        }

        Command::Hunt { max_n, stream } => {
            let limit = if opts.force {
                wellcover::enumerate::CANON_GUARD
            } else {
                HUNT_GUARD
            };
            if *max_n > limit {
                return Err(Error::ResourceGuard {
                    what: "conjecture hunt enumeration",
                    limit,
                    actual: *max_n,
                });
            }
            let mut writer: Option<std::fs::File> = stream
                .as_ref()
                .map(|p| {
                    std::fs::File::create(p).map_err(|e| {
                        Error::InvalidInput(format!("{}: {e}", p.display()))
                    })
                })
                .transpose()?;
            let mut reports: Vec<(usize, HuntReport)> = Vec::new();
            for n in 1..=*max_n {
                let report = conjecture_hunt_stream(graphs_of_order(n)?);
                if let Some(w) = &mut writer {
                    use std::io::Write as _;
                    let record = json!({
                        "schema": SCHEMA_VERSION,
                        "n": n,
                        "report": to_value(&report),
                    });
                    writeln!(w, "{record}").map_err(|e| {
                        Error::InvalidInput(format!("stream write failed: {e}"))
                    })?;
                }
                reports.push((n, report));
            }
            let scanned: usize = reports.iter().map(|(_, r)| r.scanned).sum();
            let premise: usize = reports.iter().map(|(_, r)| r.premise_satisfying).sum();
            let counterexamples: Vec<Value> = reports
                .iter()
                .flat_map(|(_, r)| r.counterexamples.iter().map(to_value))
                .collect();
            let audits: Vec<Value> = reports
                .iter()
                .map(|(n, r)| json!({ "n": n, "audit": to_value(&r.shortcut_audit) }))
                .collect();
            let disagreements: usize = reports
                .iter()
                .map(|(_, r)| r.shortcut_audit.disagreements.len())
                .sum();
            let violations: usize = reports
                .iter()
                .map(|(_, r)| r.shortcut_audit.one_directional_violations)
                .sum();
            let payload = json!({
                "max_n": max_n,
                "scanned": scanned,
                "premise_satisfying": premise,
                "counterexamples": counterexamples,
                "shortcut_audits": audits,
            });
            let human = format!(
                "scanned {scanned} graphs up to n = {max_n}; {premise} satisfied the premises; \
                 {} counterexamples; shortcut audit: {disagreements} disagreements, \
                 {violations} one-directional violations",
                counterexamples.len()
            );
            emit(opts, "hunt", started, payload, &human);
            Ok(if violations == 0 { 0 } else { 3 })
        }

        Command::Bench { max_n } => {
            let rows = bench_rows(*max_n, opts.seed)?;
            let mut csv = String::from("id,n_vertices,oracle_us,checker_us,zerodiv_us,agreement\n");
            for r in &rows {
                csv.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.id, r.n_vertices, r.oracle_us, r.checker_us, r.zerodiv_us, r.agreement
                ));
            }
            let all_agree = rows.iter().all(|r| r.agreement);
            if opts.json {
                let payload = json!({
                    "rows": rows.iter().map(|r| json!({
                        "id": r.id,
                        "n_vertices": r.n_vertices,
                        "oracle_us": r.oracle_us,
                        "checker_us": r.checker_us,
                        "zerodiv_us": r.zerodiv_us,
                        "agreement": r.agreement,
                    })).collect::<Vec<_>>(),
                });
                emit(opts, "bench", started, payload, &csv);
            } else {
                print!("{csv}");
            }
            Ok(if all_agree { 0 } else { 3 })
        }
    }
}

fn resolve_cover(
    g: &Graph,
    cover: Option<&Path>,
    opts: &GlobalOpts,
) -> Result<BasicCliqueCover> {
    match cover {
        Some(path) => {
            let raw = formats::parse_cover(&read_input(path)?)?;
            basify(g, &raw)
        }
        None => find_basic_clique_cover_guarded(g, opts.cover_guard())?.ok_or_else(|| {
            Error::Precondition(
                "the graph admits no basic clique cover; the domination criterion does not apply"
                    .into(),
            )
        }),
    }
}

struct BenchRow {
    id: String,
    n_vertices: usize,
    oracle_us: u128,
    checker_us: u128,
    zerodiv_us: u128,
    agreement: bool,
}

/// Wall-clock median of five runs, in microseconds.
fn median_us<T>(mut f: impl FnMut() -> Result<T>) -> Result<(T, u128)> {
    let mut times = Vec::with_capacity(5);
    let mut last = None;
    for _ in 0..5 {
        let t = Instant::now();
        last = Some(f()?);
        times.push(t.elapsed().as_micros());
    }
    times.sort_unstable();
    Ok((last.unwrap(), times[2]))
}

fn bench_rows(max_n: usize, seed: u64) -> Result<Vec<BenchRow>> {
    if max_n > 8 {
        return Err(Error::ResourceGuard {
            what: "bench ground-set size",
            limit: 8,
            actual: max_n,
        });
    }
    let ground = max_n.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut id = 0;
    while rows.len() < 12 {
        let k = rng.gen_range(1..=ground);
        let facets: Vec<_> = (0..k)
            .map(|_| {
                let bits = rng.gen_range(1..(1u64 << ground));
                (0..ground).filter(|&v| bits & (1 << v) != 0).collect()
            })
            .collect();
        let delta = SimplicialComplex::from_facets(ground, facets)?;
        let faces = delta.faces();
        if faces.len() > 12 {
            continue;
        }
        let (g, _, cover) = delta.noncomparability_graph()?;
        let (oracle, oracle_us) = median_us(|| g.is_well_covered_oracle())?;
        let (verdict, checker_us) = median_us(|| check_well_covered(&g, &cover))?;
        let (algebraic, zerodiv_us) =
            median_us(|| wellcovered_via_zero_divisors(&g, &cover))?;
        rows.push(BenchRow {
            id: format!("delta{id}"),
            n_vertices: g.n(),
            oracle_us,
            checker_us,
            zerodiv_us,
            agreement: oracle.well_covered == verdict.well_covered
                && verdict.well_covered == algebraic.well_covered,
        });
        id += 1;
    }
    Ok(rows)
}
