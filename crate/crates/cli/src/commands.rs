//! Command dispatch. Every command returns its full output so that tests
//! can drive it in-process.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use wgamma_core::adjacency::{esser_harary_charpoly, part_size_multiset, DEFAULT_TOLERANCE};
use wgamma_core::arith;
use wgamma_core::graph::EdgeSet;
use wgamma_core::laplacian::{multipartite_laplacian_charpoly, zn_report};
use wgamma_core::oracle::{
    adjacency_matrix, bruteforce_wgamma, charpoly_exact, laplacian_matrix, mohar_join_check,
    mohar_sample, spanning_trees_oracle, verify_adjacency_multiplicities,
    verify_laplacian_spectrum, MAX_CHARPOLY_DIM,
};
use wgamma_core::ring::{LocalRingSpec, ProductRing, DEFAULT_ELEMENT_CAP};
use wgamma_core::structure::{classify_vertices, multipartite_shape, structural_edge_set};
use wgamma_core::Error;

use crate::parse::parse_ring_spec;
use crate::report::{to_json, Analysis, Report};
use crate::CliError;

/// Largest graph `export` will write out.
pub const MAX_EXPORT_VERTICES: u64 = 2000;
/// Largest `n` range `table` will scan.
pub const MAX_TABLE_SPAN: u64 = 100_000;
/// Graph pairs drawn for the join-formula check in `verify`.
const VERIFY_JOIN_PAIRS: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "wgamma",
    version,
    about = "Weakly zero-divisor graphs of finite commutative rings",
    after_help = "Ring specs: \"Z/12\", \"Z/4 x Z/3\", \"GF(4) x Z/5\", \"F2[x]/(x^2)\".\n\
                  Exit codes: 0 ok, 1 domain error, 2 parse error, 3 cap exceeded."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Bracket width for secular roots
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE, allow_negative_numbers = true)]
    pub tol: f64,
    /// Element cap for commands that enumerate the ring
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP)]
    pub cap: u64,
    /// Seed for the sampled join-formula check in `verify`
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Field indices, part sizes and multipartite shape
    Structure { ring: String },
    /// Laplacian spectrum, algebraic connectivity, spanning trees
    Laplacian { ring: String },
    /// Adjacency spectrum with certified secular-root brackets
    Adjacency { ring: String },
    /// Spanning-tree count
    Trees { ring: String },
    /// Check every closed form against brute force and exact linear algebra
    Verify { ring: String },
    /// Laplacian data of Z/n for composite n in a range
    Table {
        from: u64,
        to: u64,
        /// Restrict to these n
        #[arg(long, value_delimiter = ',')]
        only: Vec<u64>,
    },
    /// Write the graph as DOT or an edge list
    Export {
        ring: String,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Edges,
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Structure { ring } => {
            let a = Analysis::new(&parse(ring)?, None)?;
            Ok(Outcome::ok(if cli.json {
                to_json(&a.report(None))
            } else {
                a.structure_text()
            }))
        }
        Command::Laplacian { ring } => {
            let a = Analysis::new(&parse(ring)?, None)?;
            Ok(Outcome::ok(if cli.json {
                to_json(&a.report(None))
            } else {
                a.laplacian_text()
            }))
        }
        Command::Adjacency { ring } => {
            let a = Analysis::new(&parse(ring)?, Some(cli.tol))?;
            Ok(Outcome::ok(if cli.json {
                to_json(&a.report(None))
            } else {
                a.adjacency_text()
            }))
        }
        Command::Trees { ring } => {
            let a = Analysis::new(&parse(ring)?, None)?;
            if let Err(e) = &a.tau {
                return Err(e.clone().into());
            }
            Ok(Outcome::ok(if cli.json {
                to_json(&a.report(None))
            } else {
                format!(
                    "ring: {}\nspanning trees: {}\n",
                    a.ring_name(),
                    a.tau_text()
                )
            }))
        }
        Command::Verify { ring } => verify(cli, &parse(ring)?),
        Command::Table { from, to, only } => table(cli, *from, *to, only),
        Command::Export { ring, format } => export(cli, &parse(ring)?, *format),
    }
}

fn parse(text: &str) -> Result<Vec<LocalRingSpec>, CliError> {
    Ok(parse_ring_spec(text)?)
}

/// One line of a verification certificate.
struct Line {
    passed: Option<bool>,
    text: String,
}

fn verify(cli: &Cli, specs: &[LocalRingSpec]) -> Result<Outcome, CliError> {
    let a = Analysis::new(specs, Some(cli.tol))?;
    let ring = ProductRing::with_cap(specs, cli.cap)?;
    let mut lines: Vec<Line> = Vec::new();
    let mut push = |passed: Option<bool>, text: String| lines.push(Line { passed, text });

    let g = bruteforce_wgamma(&ring);
    let labeling = classify_vertices(&ring);
    let shape = multipartite_shape(&a.structure);
    let structural = structural_edge_set(&shape, &labeling)?;
    push(
        Some(structural == g.edges),
        format!(
            "structure: brute-force graph is {} ({} vertices, {} edges)",
            shape,
            g.vertices.len(),
            g.edges.edge_count()
        ),
    );

    let report = verify_laplacian_spectrum(&g.edges, &a.spectrum)?;
    for c in &report.checks {
        push(
            Some(c.passed),
            format!("laplacian {}: {}", c.name, c.detail),
        );
    }

    let oracle_tau = spanning_trees_oracle(&g.edges)?;
    let tau_ok = a.tau.as_ref().ok() == Some(&oracle_tau);
    push(
        Some(tau_ok),
        format!(
            "spanning trees: determinant {oracle_tau}, closed form {}",
            a.tau_text()
        ),
    );

    let adjacency = a.adjacency.as_ref().expect("requested above");
    let ms = part_size_multiset(&shape);
    let report = verify_adjacency_multiplicities(&g.edges, &adjacency.nullity(), &ms)?;
    for c in &report.checks {
        push(
            Some(c.passed),
            format!("adjacency {}: {}", c.name, c.detail),
        );
    }

    if g.vertices.len() <= MAX_CHARPOLY_DIM {
        let l = charpoly_exact(&laplacian_matrix(&g.edges))?;
        push(
            Some(l == multipartite_laplacian_charpoly(&shape)? && l == a.spectrum.to_polynomial()?),
            "laplacian characteristic polynomial splits as the closed-form spectrum".into(),
        );
        let adj = charpoly_exact(&adjacency_matrix(&g.edges))?;
        push(
            Some(adj == esser_harary_charpoly(&shape)?),
            "adjacency characteristic polynomial equals the multipartite formula".into(),
        );
    } else {
        push(
            None,
            format!("characteristic polynomials skipped: N above {MAX_CHARPOLY_DIM}"),
        );
    }

    let pairs = mohar_sample(cli.seed, VERIFY_JOIN_PAIRS, 6);
    let mut joins_ok = true;
    for (x, y) in &pairs {
        joins_ok &= mohar_join_check(x, y)?.passed();
    }
    push(
        Some(joins_ok),
        format!(
            "join formula: {} seeded graph pairs (seed {})",
            pairs.len(),
            cli.seed
        ),
    );

    let passed = lines.iter().all(|l| l.passed != Some(false));
    if cli.json {
        return Ok(Outcome {
            stdout: to_json(&a.report(Some(passed))),
            stderr: String::new(),
            code: if passed { 0 } else { 1 },
        });
    }
    let mut out = format!("ring: {}\n{}\n", a.ring_name(), a.summary_line());
    for l in &lines {
        let tag = match l.passed {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "skip",
        };
        out += &format!("[{tag}] {}\n", l.text);
    }
    out += &format!("spanning trees: {oracle_tau}\n");
    out += if passed { "PASS\n" } else { "FAIL\n" };
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code: if passed { 0 } else { 1 },
    })
}

#[derive(Serialize)]
struct TableJson {
    rows: Vec<Report>,
}

fn table(cli: &Cli, from: u64, to: u64, only: &[u64]) -> Result<Outcome, CliError> {
    if from > to {
        return Err(Error::InvalidArgument(format!("empty range {from}..{to}")).into());
    }
    if to - from > MAX_TABLE_SPAN {
        return Err(Error::TooLarge {
            what: "table range",
            dim: (to - from).to_string(),
            limit: MAX_TABLE_SPAN,
        }
        .into());
    }
    let ns: Vec<u64> = (from.max(4)..=to)
        .filter(|&n| !arith::is_prime(n))
        .filter(|n| only.is_empty() || only.contains(n))
        .collect();
    if cli.json {
        let rows = ns
            .iter()
            .map(|&n| Ok(Analysis::new(&LocalRingSpec::crt_factors(n)?, None)?.report(None)))
            .collect::<Result<Vec<_>, Error>>()?;
        return Ok(Outcome::ok(to_json(&TableJson { rows })));
    }
    let mut out = format!(
        "{:<6}{:<6}{:<6}{:<7}{}\n",
        "n", "N", "|F|", "|V_0|", "Laplacian spectrum"
    );
    for n in ns {
        let r = zn_report(n)?;
        out += &format!(
            "{:<6}{:<6}{:<6}{:<7}{}\n",
            n,
            r.total,
            r.field_indices.len(),
            r.v0_size,
            r.spectrum
        );
    }
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct ExportJson {
    #[serde(flatten)]
    report: Report,
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

fn export(cli: &Cli, specs: &[LocalRingSpec], format: ExportFormat) -> Result<Outcome, CliError> {
    let a = Analysis::new(specs, None)?;
    let n = a.structure.total();
    if *n > BigUint::from(MAX_EXPORT_VERTICES) {
        return Err(Error::TooLarge {
            what: "graph export",
            dim: n.to_string(),
            limit: MAX_EXPORT_VERTICES,
        }
        .into());
    }
    let (labels, edges) = match ProductRing::with_cap(specs, cli.cap) {
        Ok(ring) => {
            let labeling = classify_vertices(&ring);
            let edges = structural_edge_set(&multipartite_shape(&a.structure), &labeling)?;
            let labels = labeling
                .entries
                .iter()
                .map(|(x, _)| ring.format_element(x))
                .collect();
            (labels, edges)
        }
        Err(Error::CapExceeded { .. }) => part_labeled_graph(&a),
        Err(e) => return Err(e.into()),
    };
    let name = a.ring_name();
    let stdout = if cli.json {
        to_json(&ExportJson {
            report: a.report(None),
            vertices: labels,
            edges: edges.edges().to_vec(),
        })
    } else {
        match format {
            ExportFormat::Dot => {
                let mut s = format!("graph wgamma {{\n  // {name}\n");
                for (i, l) in labels.iter().enumerate() {
                    s += &format!("  {i} [label=\"{l}\"];\n");
                }
                for (i, j) in edges.edges() {
                    s += &format!("  {i} -- {j};\n");
                }
                s + "}\n"
            }
            ExportFormat::Edges => {
                let mut s = format!(
                    "# {name}: {} vertices, {} edges\n",
                    labels.len(),
                    edges.edge_count()
                );
                for (i, l) in labels.iter().enumerate() {
                    s += &format!("# {i} {l}\n");
                }
                for (i, j) in edges.edges() {
                    s += &format!("{i} {j}\n");
                }
                s
            }
        }
    };
    Ok(Outcome::ok(stdout))
}

/// Vertices named by part (`V1.0`, ..., `V0.3`) when the ring is too big
/// to enumerate.
fn part_labeled_graph(a: &Analysis) -> (Vec<String>, EdgeSet) {
    let mut labels = Vec::new();
    let mut part_of = Vec::new();
    for (k, size) in a.structure.part_sizes() {
        let size = u64::try_from(size).expect("bounded by the export limit");
        for i in 0..size {
            labels.push(format!("V{}.{i}", k + 1));
            part_of.push(Some(*k));
        }
    }
    let v0 = u64::try_from(a.structure.v0_size()).expect("bounded by the export limit");
    for i in 0..v0 {
        labels.push(format!("V0.{i}"));
        part_of.push(None);
    }
    let n = labels.len();
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| part_of[i] != part_of[j] || part_of[i].is_none());
    (
        labels,
        EdgeSet::new(n, edges).expect("indices are in range"),
    )
}
