use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use flowroots::audit::{
    audit_graph, classify_g_and_g0, compute_invariants, nroot, xi_enclosure, xi_lower_bound,
    AuditConfig,
};
use flowroots::flow::{chromatic_poly, flow_poly, flow_poly_traced};
use flowroots::graph::{build_dual, FaceStructure, MultiGraph};
use flowroots::num_rational::BigRational;
use flowroots::poly::{parse_rational, refine_root, root_profile, IntPoly};
use flowroots::search::{run_search, EnumBounds, Filter, SearchConfig, DEFAULT_WORK_CAP};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "flowroots",
    version,
    about = "Exact flow polynomials of small multigraphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Width bound for root enclosures (p/q, decimal or 1e-9 style).
    #[arg(long, global = true, default_value = "1e-12")]
    tol: String,
    /// Worker threads for `search` (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Flow polynomial F(G, x).
    Flow {
        file: PathBuf,
        /// Also print the reduction trace.
        #[arg(long)]
        trace: bool,
    },
    /// Chromatic polynomial P(G, x).
    Chromatic { file: PathBuf },
    /// Real-root profile of F (or P with --chromatic).
    Roots {
        file: PathBuf,
        #[arg(long)]
        chromatic: bool,
    },
    /// Counting invariants of a connected bridgeless graph.
    Invariants { file: PathBuf },
    /// Membership in G and G0.
    Classify { file: PathBuf },
    /// Run every audit.
    Audit {
        file: PathBuf,
        /// Faces of a plane embedding, enabling the dual-chordality check.
        #[arg(long)]
        faces: Option<PathBuf>,
    },
    /// Build the plane dual from a faces file.
    Dual {
        file: PathBuf,
        faces: PathBuf,
        /// Verify P(G, x) = x F(G*, x).
        #[arg(long)]
        check: bool,
    },
    /// Enumerate, filter and audit small connected multigraphs.
    Search {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 8)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_multiplicity: usize,
        /// bridgeless | three-edge-connected | in-G | in-G0 | nonintegral-roots
        #[arg(long = "filter")]
        filters: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_WORK_CAP)]
        work_cap: f64,
    },
    /// Print xi_k or nroot(k).
    Constants { kind: ConstKind, k: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstKind {
    Xi,
    Nroot,
}

/// An error carrying its exit code.
struct Exit {
    code: u8,
    err: anyhow::Error,
}

impl From<anyhow::Error> for Exit {
    fn from(err: anyhow::Error) -> Self {
        Exit { code: 1, err }
    }
}

fn parse_error(err: anyhow::Error) -> Exit {
    Exit { code: 3, err }
}

/// Exit code of a command that ran to completion.
type Outcome = Result<u8, Exit>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit { code, err }) => {
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let tol = parse_rational(&cli.tol).map_err(|e| parse_error(anyhow::anyhow!("--tol: {e}")))?;
    if tol <= BigRational::from_integer(0.into()) {
        return Err(parse_error(anyhow::anyhow!("--tol must be positive")));
    }
    let out = Printer { format: cli.format };
    match &cli.cmd {
        Cmd::Flow { file, trace } => {
            let g = read_graph(file)?;
            if *trace {
                let (f, t) = flow_poly_traced(&g);
                out.emit(
                    json!({ "coeffs": f, "trace": t.steps() }),
                    format!("{f}\n{}\n{}", coeff_list(&f), t.to_text().trim_end()),
                );
            } else {
                let f = flow_poly(&g);
                out.emit(json!({ "coeffs": f }), format!("{f}\n{}", coeff_list(&f)));
            }
            Ok(0)
        }
        Cmd::Chromatic { file } => {
            let p = chromatic_poly(&read_graph(file)?);
            out.emit(json!({ "coeffs": p }), format!("{p}\n{}", coeff_list(&p)));
            Ok(0)
        }
        Cmd::Roots { file, chromatic } => {
            let g = read_graph(file)?;
            let p = if *chromatic {
                chromatic_poly(&g)
            } else {
                flow_poly(&g)
            };
            if p.is_zero() {
                return Err(anyhow::anyhow!("polynomial is identically zero").into());
            }
            let mut prof = root_profile(&p, &tol).context("root profile")?;
            for r in &mut prof.isolated {
                r.interval = refine_root(&p, r.interval.clone(), &tol);
            }
            let mut text = format!("polynomial: {p}\n");
            let ints: Vec<String> = prof
                .integer_roots
                .iter()
                .map(|(v, k)| {
                    if *k == 1 {
                        v.to_string()
                    } else {
                        format!("{v} (x{k})")
                    }
                })
                .collect();
            text.push_str(&format!("integer roots: {}\n", ints.join(", ")));
            for iv in &prof.isolated {
                text.push_str(&format!(
                    "non-integer root in {} (~{:.12}, multiplicity {})\n",
                    iv.interval,
                    iv.interval.approx(),
                    iv.multiplicity
                ));
            }
            text.push_str(&format!(
                "real roots: {} of {}; real-rooted: {}\nroots in (1,2): {}; omega in {}",
                prof.real_root_count, prof.degree, prof.real_rooted, prof.count_in_1_2, prof.omega
            ));
            out.emit(serde_json::to_value(&prof).unwrap(), text);
            Ok(0)
        }
        Cmd::Invariants { file } => {
            let inv = compute_invariants(&read_graph(file)?).context("invariants")?;
            let mut text = format!(
                "n={} m={} r={} alpha={} gamma={} k={} b={}\nv_hist={:?}",
                inv.n, inv.m, inv.r, inv.alpha, inv.gamma, inv.k, inv.b, inv.v_hist
            );
            if let Some(d) = &inv.mean_degree_w {
                text.push_str(&format!("\nmean_degree_w={d}"));
            }
            out.emit(serde_json::to_value(&inv).unwrap(), text);
            Ok(0)
        }
        Cmd::Classify { file } => {
            let g = read_graph(file)?;
            let f = flow_poly(&g);
            let prof = if f.is_zero() {
                None
            } else {
                Some(root_profile(&f, &tol).context("root profile")?)
            };
            let c = classify_g_and_g0(&g, &f, prof.as_ref());
            let text = format!(
                "in_G={} in_G0={} integral_roots={}\nbridgeless={} real_rooted={} nonseparable={} \
                 three_edge_connected={} proper_three_cut={} deletions_nonseparable={}",
                c.in_g,
                c.in_g0,
                c.integral_roots,
                c.bridgeless,
                c.real_rooted,
                c.nonseparable,
                c.three_edge_connected,
                c.proper_three_cut,
                c.deletions_nonseparable
            );
            out.emit(serde_json::to_value(&c).unwrap(), text);
            Ok(0)
        }
        Cmd::Audit { file, faces } => {
            let g = read_graph(file)?;
            let faces = match faces.as_deref() {
                Some(path) => {
                    let fs = read_faces(path)?;
                    fs.validate(&g)
                        .map_err(|e| parse_error(anyhow::anyhow!("{}: {e}", path.display())))?;
                    Some(fs)
                }
                None => None,
            };
            let cfg = AuditConfig::with_tol(tol).context("tolerance")?;
            let report = audit_graph(&g, faces.as_ref(), &cfg).context("audit")?;
            out.emit(
                serde_json::to_value(&report).unwrap(),
                report.to_text().trim_end().into(),
            );
            Ok(if report.has_failure() { 2 } else { 0 })
        }
        Cmd::Dual { file, faces, check } => {
            let g = read_graph(file)?;
            let fs = read_faces(faces)?;
            let d = build_dual(&g, &fs)
                .map_err(|e| parse_error(anyhow::anyhow!("{}: {e}", faces.display())))?;
            let mut j = json!({ "n": d.vertex_count(), "m": d.edge_count(), "edges": d.edges() });
            let mut text = d.to_edge_list().trim_end().to_string();
            let mut code = 0;
            if *check {
                let p = chromatic_poly(&g);
                let rhs = &IntPoly::linear(0) * &flow_poly(&d);
                let ok = p == rhs;
                j["check"] = json!({ "pass": ok, "chromatic": p, "x_times_dual_flow": rhs });
                text.push_str(&format!(
                    "\n# check P(G) = x F(G*): {}\n# P(G)     = {p}\n# x F(G*)  = {rhs}",
                    if ok { "pass" } else { "FAIL" }
                ));
                if !ok {
                    code = 2;
                }
            }
            out.emit(j, text);
            Ok(code)
        }
        Cmd::Search {
            max_vertices,
            max_edges,
            max_multiplicity,
            filters,
            work_cap,
        } => {
            let filters = filters
                .iter()
                .map(|s| s.parse::<Filter>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| parse_error(e.into()))?;
            let cfg = SearchConfig {
                bounds: EnumBounds {
                    max_vertices: *max_vertices,
                    max_edges: *max_edges,
                    max_multiplicity: *max_multiplicity,
                },
                filters,
                workers: cli.workers,
                tol,
                work_cap: *work_cap,
            };
            let outcome = run_search(&cfg).context("search")?;
            let stdout = io::stdout();
            let mut w = io::BufWriter::new(stdout.lock());
            for r in &outcome.reports {
                match out.format {
                    Format::Json => writeln!(w, "{}", serde_json::to_string(r).unwrap()),
                    Format::Text => writeln!(w, "{}\n", r.to_text().trim_end()),
                }
                .context("write")?;
            }
            match out.format {
                Format::Json => writeln!(
                    w,
                    "{}",
                    json!({ "summary": serde_json::to_value(&outcome.summary).unwrap() })
                ),
                Format::Text => write!(w, "{}", outcome.summary.to_text()),
            }
            .context("write")?;
            w.flush().context("write")?;
            Ok(if outcome.summary.falsifications.is_empty() {
                0
            } else {
                2
            })
        }
        Cmd::Constants { kind, k } => {
            let k = *k;
            match kind {
                ConstKind::Xi if k >= 6 => {
                    let lb = xi_lower_bound();
                    out.emit(
                        json!({ "k": k, "lower_bound": lb.to_string() }),
                        format!("xi_{k}: lower bound {lb}"),
                    );
                }
                ConstKind::Xi => {
                    if k < 3 {
                        return Err(anyhow::anyhow!("xi needs k >= 3, got {k}").into());
                    }
                    let iv = xi_enclosure(k, &tol).context("xi enclosure")?;
                    out.emit(
                        json!({ "k": k, "lo": iv.lo.to_string(), "hi": iv.hi.to_string(), "approx": iv.approx() }),
                        format!("xi_{k} in {iv}\n~ {:.12}", iv.approx()),
                    );
                }
                ConstKind::Nroot => {
                    let v = nroot(k).context("nroot")?;
                    out.emit(json!({ "k": k, "nroot": v }), v.to_string());
                }
            }
            Ok(0)
        }
    }
}

struct Printer {
    format: Format,
}

impl Printer {
    fn emit(&self, json: Value, text: String) {
        // a closed pipe downstream is not an error worth reporting
        let mut out = io::stdout().lock();
        let _ = match self.format {
            Format::Json => writeln!(out, "{json}"),
            Format::Text => writeln!(out, "{text}"),
        };
    }
}

fn coeff_list(p: &IntPoly) -> String {
    format!("[{}]", p.to_strings().join(", "))
}

fn read_text(path: &Path) -> Result<String, Exit> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Exit::from)
}

fn read_graph(path: &Path) -> Result<MultiGraph, Exit> {
    read_text(path)?
        .parse::<MultiGraph>()
        .map_err(|e| parse_error(anyhow::anyhow!("{}: {e}", path.display())))
}

fn read_faces(path: &Path) -> Result<FaceStructure, Exit> {
    FaceStructure::parse(&read_text(path)?)
        .map_err(|e| parse_error(anyhow::anyhow!("{}: {e}", path.display())))
}
