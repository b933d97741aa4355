//! `chordsep`: chord separated collections, plabic tilings and graphs, and
//! fine zonotopal tilings of Z(n,3) from the command line.
//!
//! Data goes to stdout (or `--out`), diagnostics to stderr. Exit codes:
//! 0 success, 1 domain error, 2 usage error.

mod render;

use chordsep::collection::{CompletionOrder, SeparatedCollection, SeparationKind};
use chordsep::json::{CollectionDoc, FamilyDoc, GraphDoc, TilingDoc, ZonotopalDoc};
use chordsep::plabic_graph::dualize;
use chordsep::plabic_tiling::{Color, TriangulatedPlabicTiling};
use chordsep::subset::{GroundSet, Subset};
use chordsep::zonotope::{assemble, CyclicConfig, ValidateOpts};
use chordsep::{oracle, Error};
use clap::{Parser, Subcommand, ValueEnum};
use render::{Embedding, RenderSpec};
use serde_json::json;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "chordsep", version, about = "Chord separation, plabic tilings/graphs, and zonotopal tilings of Z(n,3)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Chord,
    Weak,
    Strong,
}

impl From<KindArg> for SeparationKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Chord => SeparationKind::Chord,
            KindArg::Weak => SeparationKind::Weak,
            KindArg::Strong => SeparationKind::Strong,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Collections,
    Tilings,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbeddingArg {
    #[value(name = "regular-ngon")]
    RegularNgon,
    #[value(name = "moment")]
    Moment,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a collection document for pairwise separation
    Check { file: PathBuf },
    /// Greedily complete a collection to maximal-by-inclusion
    Complete {
        #[arg(long)]
        n: u8,
        /// Candidate order seed; canonical (cardinality, mask) order if absent
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "chord")]
        kind: KindArg,
        /// Seed collection document to extend (empty if absent)
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Purity report of a maximal collection
    Purity { file: PathBuf },
    /// Plabic tiling of one level of a collection
    Tile {
        file: PathBuf,
        #[arg(long)]
        level: u8,
        /// Emit the canonical triangulation from the ambient collection
        #[arg(long)]
        triangulate: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual plabic graph of a triangulated tiling document
    Dualize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Strands, permutation, reducedness, and face labels of a graph
    Strands { file: PathBuf },
    /// Apply a move to a plabic graph
    Move {
        file: PathBuf,
        /// Square move at a face, e.g. --square F3
        #[arg(long)]
        square: Option<String>,
        /// White trivalent flip at an edge, e.g. --m1 E4
        #[arg(long, visible_alias = "m1-contract", visible_alias = "m1-uncontract")]
        m1: Option<String>,
        /// Black trivalent flip at an edge
        #[arg(long, visible_alias = "m3-contract", visible_alias = "m3-uncontract")]
        m3: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Assemble a zonotopal tiling from a family document
    Assemble {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mutate a zonotopal tiling at (S, Q)
    Mutate {
        file: PathBuf,
        /// Base set, e.g. --S 2 or --S 1,4 (empty if absent)
        #[arg(long = "S")]
        s: Option<String>,
        /// Four indices, e.g. --Q 1,3,5,4
        #[arg(long = "Q")]
        q: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Layered validation of a zonotopal tiling document
    Validate {
        file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        points: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Ziegler image: the quadruples witnessed by the vertex labels
    Ziegler { file: PathBuf },
    /// Enumerate all maximal collections or all tilings
    Enumerate {
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum)]
        what: WhatArg,
        /// Directory for JSON-lines output (stdout if absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for the mutation closure
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Render a tiling, graph, or zonotopal document to SVG
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, value_enum, default_value = "regular-ngon")]
        embedding: EmbeddingArg,
        /// Suppress vertex labels
        #[arg(long)]
        no_labels: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn read(path: &PathBuf) -> Result<String, AnyError> {
    Ok(fs::read_to_string(path)?)
}

fn emit(out: &Option<PathBuf>, data: &str) -> Result<(), AnyError> {
    match out {
        Some(path) => fs::write(path, data)?,
        None => println!("{data}"),
    }
    Ok(())
}

fn parse_id(spec: &str, prefix: char) -> Result<usize, AnyError> {
    let trimmed = spec
        .trim_start_matches(prefix)
        .trim_start_matches(prefix.to_ascii_lowercase());
    Ok(trimmed.parse::<usize>()?)
}

fn parse_subset(spec: &Option<String>) -> Result<Subset, AnyError> {
    let Some(text) = spec else {
        return Ok(Subset::EMPTY);
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Subset::EMPTY);
    }
    let elems: Vec<u8> = trimmed
        .split(',')
        .map(|p| p.trim().parse::<u8>())
        .collect::<Result<_, _>>()?;
    Ok(Subset::try_from_elems(&elems)?)
}

fn run(cli: Cli) -> Result<(), AnyError> {
    match cli.cmd {
        Cmd::Check { file } => {
            let doc: CollectionDoc = serde_json::from_str(&read(&file)?)?;
            let c = doc.to_collection()?;
            match c.violation_witness() {
                None => {
                    println!("{}", json!({"ok": true, "size": c.len()}));
                    Ok(())
                }
                Some((s, t, w)) => {
                    eprintln!(
                        "not pairwise separated: {:?} vs {:?}, witness {:?}",
                        s.to_vec(),
                        t.to_vec(),
                        w.map(|w| w.as_array())
                    );
                    Err(Box::new(Error::NotPairwiseSeparated(
                        s.to_vec(),
                        t.to_vec(),
                    )))
                }
            }
        }
        Cmd::Complete {
            n,
            seed,
            kind,
            from,
            out,
        } => {
            let g = GroundSet::new(n)?;
            let base = match from {
                Some(path) => {
                    let doc: CollectionDoc = serde_json::from_str(&read(&path)?)?;
                    doc.to_collection()?
                }
                None => SeparatedCollection::empty(g, kind.into()),
            };
            let order = match seed {
                Some(s) => CompletionOrder::Seeded(s),
                None => CompletionOrder::Canonical,
            };
            let done = base.complete_to_maximal(order)?;
            emit(&out, &serde_json::to_string_pretty(&CollectionDoc::from_collection(&done))?)
        }
        Cmd::Purity { file } => {
            let doc: CollectionDoc = serde_json::from_str(&read(&file)?)?;
            let report = doc.to_collection()?.purity_report()?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            if report.is_pure {
                Ok(())
            } else {
                Err(Box::new(Error::InvalidTiling(
                    "collection is maximal but not pure".into(),
                )))
            }
        }
        Cmd::Tile {
            file,
            level,
            triangulate,
            out,
        } => {
            let doc: CollectionDoc = serde_json::from_str(&read(&file)?)?;
            let c = doc.to_collection()?;
            let text = if triangulate {
                let t = TriangulatedPlabicTiling::triangulate_level(&c, level)?;
                serde_json::to_string_pretty(&TilingDoc::from_triangulated(&t))?
            } else {
                let slice = c.level_slice(level)?;
                let t = chordsep::plabic_tiling::PlabicTiling::build(&slice)?;
                serde_json::to_string_pretty(&TilingDoc::from_plabic(&t))?
            };
            emit(&out, &text)
        }
        Cmd::Dualize { file, out } => {
            let doc: TilingDoc = serde_json::from_str(&read(&file)?)?;
            let t = doc.to_triangulated()?;
            let dual = dualize(&t)?;
            emit(&out, &serde_json::to_string_pretty(&GraphDoc::from_graph(&dual.graph))?)
        }
        Cmd::Strands { file } => {
            let doc: GraphDoc = serde_json::from_str(&read(&file)?)?;
            let g = doc.to_graph()?;
            let strands = g.strands();
            let report = g.reducedness();
            let labels = g.face_labels().ok();
            let payload = json!({
                "permutation": g.strand_permutation(),
                "reduced": report.is_reduced(),
                "closed_strands": strands.closed.len(),
                "fixed_point_without_leaf": report.fixed_point_without_leaf,
                "has_essential_self_intersection": report.essential_self_intersection.is_some(),
                "has_bad_double_crossing": report.bad_double_crossing.is_some(),
                "strands": strands.open.iter().map(|s| json!({
                    "start": s.start,
                    "end": s.end,
                    "edges": s.halves.iter().map(|h| h / 2).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "faces": g.faces().iter().enumerate().map(|(i, _)| json!({
                    "id": format!("F{i}"),
                    "label": labels.as_ref().map(|l| l[i].to_vec()),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&payload)?);
            Ok(())
        }
        Cmd::Move {
            file,
            square,
            m1,
            m3,
            out,
        } => {
            let doc: GraphDoc = serde_json::from_str(&read(&file)?)?;
            let g = doc.to_graph()?;
            let chosen = [square.is_some(), m1.is_some(), m3.is_some()]
                .iter()
                .filter(|b| **b)
                .count();
            if chosen != 1 {
                return Err("pass exactly one of --square, --m1, --m3".into());
            }
            let moved = if let Some(f) = square {
                g.square_move(parse_id(&f, 'F')?)?
            } else if let Some(e) = m1 {
                g.flip_move(parse_id(&e, 'E')?, Color::White)?
            } else {
                g.flip_move(parse_id(&m3.unwrap(), 'E')?, Color::Black)?
            };
            emit(&out, &serde_json::to_string_pretty(&GraphDoc::from_graph(&moved))?)
        }
        Cmd::Assemble { file, out } => {
            let doc: FamilyDoc = serde_json::from_str(&read(&file)?)?;
            let family = doc.to_family()?;
            let config = CyclicConfig::standard(GroundSet::new(doc.n)?);
            let z = assemble(&config, &family)?;
            emit(&out, &serde_json::to_string_pretty(&ZonotopalDoc::from_tiling(&z))?)
        }
        Cmd::Mutate { file, s, q, out } => {
            let doc: ZonotopalDoc = serde_json::from_str(&read(&file)?)?;
            let z = doc.to_tiling()?;
            let base = parse_subset(&s)?;
            let quad = parse_subset(&Some(q))?;
            let qv = quad.to_vec();
            if qv.len() != 4 {
                return Err("--Q needs four distinct indices".into());
            }
            let mutated = z.mutate(base, [qv[0], qv[1], qv[2], qv[3]])?;
            emit(&out, &serde_json::to_string_pretty(&ZonotopalDoc::from_tiling(&mutated))?)
        }
        Cmd::Validate { file, points, seed } => {
            let doc: ZonotopalDoc = serde_json::from_str(&read(&file)?)?;
            let z = doc.to_tiling()?;
            let opts = ValidateOpts { points, seed };
            #[cfg(feature = "parallel")]
            let report = z.par_validate(opts);
            #[cfg(not(feature = "parallel"))]
            let report = z.validate(opts);
            println!("{}", serde_json::to_string_pretty(&report)?);
            if report.is_valid() {
                Ok(())
            } else {
                Err(Box::new(Error::InvalidTiling("validation failed".into())))
            }
        }
        Cmd::Ziegler { file } => {
            let doc: ZonotopalDoc = serde_json::from_str(&read(&file)?)?;
            let phi = doc.to_tiling()?.ziegler_map()?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "size": phi.len(),
                    "quadruples": phi.iter().collect::<Vec<_>>(),
                }))?
            );
            Ok(())
        }
        Cmd::Enumerate { n, what, out, jobs } => {
            #[cfg(feature = "parallel")]
            if let Some(j) = jobs {
                oracle::configure_jobs(j);
            }
            #[cfg(not(feature = "parallel"))]
            let _ = jobs;
            let g = GroundSet::new(n)?;
            let (name, lines) = match what {
                WhatArg::Collections => {
                    let e = oracle::enumerate_maximal_collections(g)?;
                    let lines: Vec<String> = e
                        .items
                        .iter()
                        .map(|c| serde_json::to_string(&CollectionDoc::from_collection(c)))
                        .collect::<Result<_, _>>()?;
                    ("collections", lines)
                }
                WhatArg::Tilings => {
                    #[cfg(feature = "parallel")]
                    let e = oracle::par_enumerate_tilings(g)?;
                    #[cfg(not(feature = "parallel"))]
                    let e = oracle::enumerate_tilings(g)?;
                    let lines: Vec<String> = e
                        .items
                        .iter()
                        .map(|z| serde_json::to_string(&ZonotopalDoc::from_tiling(z)))
                        .collect::<Result<_, _>>()?;
                    ("tilings", lines)
                }
            };
            eprintln!("{} {}: {}", name, n, lines.len());
            match out {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    fs::write(dir.join(format!("{name}-n{n}.jsonl")), lines.join("\n") + "\n")?;
                }
                None => {
                    for line in lines {
                        println!("{line}");
                    }
                }
            }
            Ok(())
        }
        Cmd::Render {
            file,
            svg,
            embedding,
            no_labels,
        } => {
            let spec = RenderSpec {
                embedding: match embedding {
                    EmbeddingArg::RegularNgon => Embedding::RegularNgon,
                    EmbeddingArg::Moment => Embedding::MomentCurveProjection,
                },
                labels: !no_labels,
                ..Default::default()
            };
            let text = read(&file)?;
            let out = render::render_any(&text, &spec)?;
            fs::write(svg, out)?;
            Ok(())
        }
    }
}
