//! File formats, exporters and the command-line driver.
//!
//! Maniplex files:
//!
//! ```text
//! # comment
//! maniplex rank=2 flags=6
//! r0: 1 0 3 2 5 4
//! r1: 5 2 1 4 3 0
//! ```
//!
//! Map files list one face per line as a vertex cycle:
//!
//! ```text
//! map vertices=4
//! 0 1 2
//! 0 3 1
//! 0 2 3
//! 1 3 2
//! ```

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::constructions::{map_from_faces, ConstructionError, MapSpec, Named};
use crate::enumerate::{canonical_code, enumerate_oriented_stg3, enumerate_stg, verify_census, StgFilter};
use crate::flagcore::FlagGraph;
use crate::oriented::{
    aut_plus_with, chirality_cross_check, classify_oriented, oriented_digraph, oriented_quotient, orientation,
    OrientedError, OrientedStg,
};
use crate::stg::{classify, quotient, transitivity_profile, Slot, SymmetryTypeGraph};
use crate::symmetry::aut_group;
use crate::walkgen::{closure, format_word, realize_generators, reduce_generators};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn format_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError { line, message: message.into() }
}

/// Non-blank lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

/// Parses `keyword a=1 b=2` into the values of `keys`, in order.
fn parse_header(line: usize, text: &str, keyword: &str, keys: &[&str]) -> Result<Vec<usize>, FormatError> {
    let mut words = text.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(format_error(line, format!("expected header `{keyword} ...`")));
    }
    let mut values = vec![None; keys.len()];
    for w in words {
        let (key, value) = w
            .split_once('=')
            .ok_or_else(|| format_error(line, format!("malformed header field `{w}`")))?;
        let slot = keys
            .iter()
            .position(|&k| k == key)
            .ok_or_else(|| format_error(line, format!("unknown header field `{key}`")))?;
        let value = value
            .parse()
            .map_err(|_| format_error(line, format!("header field `{key}` is not a number")))?;
        if values[slot].replace(value).is_some() {
            return Err(format_error(line, format!("header field `{key}` repeated")));
        }
    }
    keys.iter()
        .zip(values)
        .map(|(k, v)| v.ok_or_else(|| format_error(line, format!("header lacks `{k}=`"))))
        .collect()
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|w| w.parse().map_err(|_| format_error(line, format!("`{w}` is not a non-negative integer"))))
        .collect()
}

/// Parses a maniplex file. Only the shape is checked here; call
/// [`FlagGraph::validate`] for the axioms.
pub fn parse_maniplex_file(text: &str) -> Result<FlagGraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| format_error(1, "empty file"))?;
    let values = parse_header(hl, header, "maniplex", &["rank", "flags"])?;
    let (rank, flags) = (values[0], values[1]);
    if rank == 0 || flags == 0 {
        return Err(format_error(hl, "rank and flags must be positive"));
    }
    let mut tables: Vec<Option<Vec<usize>>> = vec![None; rank];
    for (line, text) in lines {
        let (label, rest) = text
            .split_once(':')
            .ok_or_else(|| format_error(line, "expected `r<i>: ...`"))?;
        let colour: usize = label
            .trim()
            .strip_prefix('r')
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| format_error(line, format!("bad colour label `{}`", label.trim())))?;
        if colour >= rank {
            return Err(format_error(line, format!("colour {colour} out of range for rank {rank}")));
        }
        let row = parse_numbers(line, rest)?;
        if row.len() != flags {
            return Err(format_error(line, format!("r{colour} has {} entries, expected {flags}", row.len())));
        }
        if let Some(&bad) = row.iter().find(|&&f| f >= flags) {
            return Err(format_error(line, format!("flag {bad} out of range")));
        }
        if tables[colour].replace(row).is_some() {
            return Err(format_error(line, format!("r{colour} given twice")));
        }
    }
    let tables = tables
        .into_iter()
        .enumerate()
        .map(|(c, t)| t.ok_or_else(|| format_error(hl, format!("missing r{c}"))))
        .collect::<Result<Vec<_>, _>>()?;
    FlagGraph::from_tables(tables).map_err(|e| format_error(hl, e.to_string()))
}

pub fn write_maniplex_file(g: &FlagGraph) -> String {
    let mut out = format!("maniplex rank={} flags={}\n", g.rank(), g.flag_count());
    for (c, table) in g.tables().iter().enumerate() {
        let row: Vec<String> = table.iter().map(|f| f.to_string()).collect();
        let _ = writeln!(out, "r{c}: {}", row.join(" "));
    }
    out
}

pub fn parse_map_file(text: &str) -> Result<MapSpec, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| format_error(1, "empty file"))?;
    let vertex_count = parse_header(hl, header, "map", &["vertices"])?[0];
    let faces = lines.map(|(line, text)| parse_numbers(line, text)).collect::<Result<Vec<_>, _>>()?;
    Ok(MapSpec { vertex_count, faces })
}

const PALETTE: [&str; 8] = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999"];

fn colour_attr(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

/// DOT rendering of a symmetry type graph; semi-edges become dashed
/// self-arcs tagged `semi`.
pub fn stg_dot(t: &SymmetryTypeGraph) -> String {
    let mut out = String::from("graph stg {\n  node [shape=circle];\n");
    for u in 0..t.vertex_count() {
        let _ = writeln!(out, "  v{u};");
    }
    for (u, v, i) in t.edges() {
        let _ = writeln!(out, "  v{u} -- v{v} [label=\"{i}\", color=\"{}\"];", colour_attr(i));
    }
    for (u, i) in t.semi_edges() {
        let _ = writeln!(
            out,
            "  v{u} -- v{u} [label=\"{i}\", color=\"{}\", style=dashed, taillabel=\"semi\"];",
            colour_attr(i)
        );
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of an oriented di-graph: undirected colours without arrow
/// heads, darts as arcs.
pub fn oriented_dot(ot: &OrientedStg) -> String {
    let dart = ot.n_colours() - 2;
    let mut out = String::from("digraph oriented_stg {\n  node [shape=circle];\n");
    for u in 0..ot.vertex_count() {
        let _ = writeln!(out, "  v{u};");
    }
    for (i, s) in ot.undirected.iter().enumerate() {
        for (u, &v) in s.iter().enumerate() {
            if v > u {
                let _ = writeln!(out, "  v{u} -> v{v} [dir=none, label=\"{i}\", color=\"{}\"];", colour_attr(i));
            } else if v == u {
                let _ = writeln!(
                    out,
                    "  v{u} -> v{u} [dir=none, label=\"{i}\", color=\"{}\", style=dashed, taillabel=\"semi\"];",
                    colour_attr(i)
                );
            }
        }
    }
    for (u, &v) in ot.rot.iter().enumerate() {
        let _ = writeln!(out, "  v{u} -> v{v} [label=\"{dart}\", color=\"{}\"];", colour_attr(dart));
    }
    out.push_str("}\n");
    out
}

fn slot_text(s: Slot) -> String {
    match s {
        Slot::Semi => "semi".into(),
        Slot::Edge(v) => format!("v{v}"),
    }
}

pub fn slot_table_text(t: &SymmetryTypeGraph) -> String {
    let mut out = String::new();
    for (u, row) in t.slots().into_iter().enumerate() {
        let cells: Vec<String> = row.into_iter().enumerate().map(|(i, s)| format!("{i}:{}", slot_text(s))).collect();
        let _ = writeln!(out, "  v{u}: {}", cells.join(" "));
    }
    out
}

fn oriented_table_text(ot: &OrientedStg) -> String {
    let mut out = String::new();
    for u in 0..ot.vertex_count() {
        let mut cells: Vec<String> = ot
            .undirected
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{i}:{}", if s[u] == u { "semi".to_string() } else { format!("v{}", s[u]) }))
            .collect();
        let target = ot.rot[u];
        cells.push(format!("{}:{}", ot.n_colours() - 2, if target == u { "loop".to_string() } else { format!("->v{target}") }));
        let _ = writeln!(out, "  v{u}: {}", cells.join(" "));
    }
    out
}

#[derive(Parser, Debug)]
#[command(name = "maniplex", version, about = "Symmetry type graphs of maniplexes and polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyse a maniplex file, map file, or named construction.
    Analyze {
        /// A path, or a construction such as `cube`, `prism:3`, `torus44:1,2`.
        input: String,
        #[arg(long)]
        json: bool,
        /// Write the symmetry type graph (and oriented one) in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        generators: bool,
        #[arg(long)]
        oriented: bool,
    },
    /// List admissible symmetry type graphs.
    Enumerate {
        #[arg(long = "colors", alias = "colours")]
        colors: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        fully_transitive: bool,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// List three-vertex oriented symmetry type di-graphs.
    Oriented3 {
        #[arg(long = "colors", alias = "colours")]
        colors: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Write the flag graph of a named construction.
    Construct {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in census checks.
    Census {
        #[arg(long)]
        json: bool,
    },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn fail(code: i32, message: impl ToString) -> Failure {
    Failure { code, message: message.to_string() }
}

/// Loads a flag graph from a file path or a construction name.
pub fn load_input(input: &str) -> Result<FlagGraph, Failure> {
    let path = std::path::Path::new(input);
    let g = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| fail(EXIT_PARSE, format!("{input}: {e}")))?;
        let first = content_lines(&text).next().map(|(_, l)| l).unwrap_or("");
        if first.starts_with("map") {
            let spec = parse_map_file(&text).map_err(|e| fail(EXIT_PARSE, format!("{input}: {e}")))?;
            return map_from_faces(&spec).map_err(|e| match e {
                ConstructionError::Invalid(report) => fail(EXIT_INVALID, report),
                other => fail(EXIT_INVALID, other),
            });
        }
        parse_maniplex_file(&text).map_err(|e| fail(EXIT_PARSE, format!("{input}: {e}")))?
    } else {
        let named: Named = input.parse().map_err(|e: ConstructionError| fail(EXIT_PARSE, e))?;
        named.build().map_err(|e| match e {
            ConstructionError::Invalid(report) => fail(EXIT_INVALID, report),
            other => fail(EXIT_PARSE, other),
        })?
    };
    let report = g.validate();
    if !report.is_valid() {
        return Err(fail(EXIT_INVALID, report));
    }
    Ok(g)
}

/// Everything `analyze` reports, in the JSON schema.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input: String,
    pub rank: usize,
    pub flags: usize,
    pub aut_order: usize,
    pub orbit_count: usize,
    pub stg: SymmetryTypeGraphJson,
    pub class: String,
    pub non_transitive: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<GeneratorsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oriented: Option<OrientedJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymmetryTypeGraphJson {
    pub vertices: usize,
    pub colours: usize,
    pub slots: Vec<Vec<Slot>>,
    pub code: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorJson {
    pub word: Vec<usize>,
    pub permutation: Vec<usize>,
    pub cycles: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorsJson {
    pub spanning_walk: Vec<usize>,
    pub raw_count: usize,
    pub reduced: Vec<GeneratorJson>,
    pub closure_order: usize,
    pub closure_matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrientedJson {
    pub orientable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut_plus_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chiral_a_la_conway: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stg: Option<OrientedStg>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

/// Runs the analysis behind `analyze`, returning the report and the DOT
/// text (symmetry type graph, then the oriented one if requested).
pub fn analyze(input: &str, generators: bool, oriented: bool) -> Result<(AnalysisReport, String), Failure> {
    let g = load_input(input)?;
    let a = aut_group(&g);
    let t = quotient(&g, &a);
    let class = classify(&t).map_err(|e| fail(EXIT_INTERNAL, e))?;
    let mut dot = stg_dot(&t);

    let generators = if generators {
        let raw = realize_generators(&g, &a, &t).map_err(|e| fail(EXIT_INTERNAL, e))?;
        let reduced = reduce_generators(&raw);
        let group = closure(&reduced.automorphisms, g.flag_count());
        Some(GeneratorsJson {
            spanning_walk: raw.spanning_walk.word(),
            raw_count: raw.automorphisms.len(),
            reduced: reduced
                .words
                .iter()
                .zip(&reduced.automorphisms)
                .map(|(w, alpha)| GeneratorJson {
                    word: w.clone(),
                    permutation: alpha.image.clone(),
                    cycles: alpha.cycle_notation(),
                })
                .collect(),
            closure_order: group.len(),
            closure_matches: group == a.elements,
        })
    } else {
        None
    };

    let oriented = if oriented {
        match orientation(&g) {
            None => Some(OrientedJson {
                orientable: false,
                aut_plus_order: None,
                index: None,
                chiral_a_la_conway: None,
                stg: None,
                class: None,
            }),
            Some(o) => {
                let d = oriented_digraph(&g, &o).map_err(|e| fail(EXIT_PARSE, e))?;
                let plus = aut_plus_with(&a, &o).map_err(|e| fail(EXIT_INTERNAL, e))?;
                let chiral = chirality_cross_check(&plus, &t).map_err(|e: OrientedError| fail(EXIT_INTERNAL, e))?;
                let ot = oriented_quotient(&d, &plus);
                dot.push_str(&oriented_dot(&ot));
                Some(OrientedJson {
                    orientable: true,
                    aut_plus_order: Some(plus.group.order()),
                    index: Some(plus.index),
                    chiral_a_la_conway: Some(chiral),
                    class: Some(classify_oriented(&ot).to_string()),
                    stg: Some(ot),
                })
            }
        }
    } else {
        None
    };

    let report = AnalysisReport {
        schema: 1,
        input: input.to_string(),
        rank: g.rank(),
        flags: g.flag_count(),
        aut_order: a.order(),
        orbit_count: a.orbit_count,
        stg: SymmetryTypeGraphJson {
            vertices: t.vertex_count(),
            colours: t.n_colours(),
            slots: t.slots(),
            code: canonical_code(&t).to_string(),
        },
        class: class.to_string(),
        non_transitive: transitivity_profile(&t).iter().collect(),
        generators,
        oriented,
    };
    Ok((report, dot))
}

fn analysis_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {}", r.input);
    let _ = writeln!(out, "rank: {}", r.rank);
    let _ = writeln!(out, "flags: {}", r.flags);
    let _ = writeln!(out, "|Aut|: {}", r.aut_order);
    let _ = writeln!(out, "flag orbits (k): {}", r.orbit_count);
    let _ = writeln!(out, "class: {}", r.class);
    let profile: crate::ColourSet = r.non_transitive.iter().copied().collect();
    let _ = writeln!(out, "non-transitive ranks: {profile}");
    let t = SymmetryTypeGraph::from_slots(&r.stg.slots).expect("report holds a valid graph");
    let _ = write!(out, "symmetry type graph:\n{}", slot_table_text(&t));
    if let Some(gens) = &r.generators {
        let _ = writeln!(out, "spanning walk: [{}]", format_word(&gens.spanning_walk));
        let _ = writeln!(out, "generators ({} raw, {} after reduction):", gens.raw_count, gens.reduced.len());
        for g in &gens.reduced {
            let _ = writeln!(out, "  {}  {}", format_word(&g.word), g.cycles);
        }
        let verdict = if gens.closure_matches { "matches |Aut|" } else { "MISMATCH" };
        let _ = writeln!(out, "closure order: {} ({verdict})", gens.closure_order);
    }
    if let Some(o) = &r.oriented {
        let _ = writeln!(out, "orientable: {}", o.orientable);
        if let (Some(order), Some(index), Some(chiral), Some(ot), Some(class)) =
            (o.aut_plus_order, o.index, o.chiral_a_la_conway, &o.stg, &o.class)
        {
            let _ = writeln!(out, "|Aut+|: {order} (index {index})");
            let _ = writeln!(out, "chiral-a-la-Conway: {chiral}");
            let _ = writeln!(out, "oriented class: {class}");
            let _ = write!(out, "oriented symmetry type graph:\n{}", oriented_table_text(ot));
        }
    }
    out
}

fn enumerate_command(
    out: &mut dyn Write,
    colors: usize,
    vertices: usize,
    filter: StgFilter,
    count_only: bool,
    csv: Option<PathBuf>,
) -> Result<(), Failure> {
    if colors == 0 || vertices == 0 {
        return Err(fail(EXIT_PARSE, "--colors and --vertices must be at least 1"));
    }
    if colors > 64 || vertices > 7 {
        return Err(fail(EXIT_PARSE, "supported range: --colors up to 64, --vertices up to 7"));
    }
    let graphs = enumerate_stg(colors, vertices, filter);
    let io = |e: std::io::Error| fail(EXIT_INTERNAL, e);
    if count_only {
        writeln!(out, "{}", graphs.len()).map_err(io)?;
    } else {
        writeln!(out, "count: {}", graphs.len()).map_err(io)?;
        for t in &graphs {
            let class = classify(t).map(|c| c.to_string()).unwrap_or_else(|e| e.to_string());
            writeln!(
                out,
                "{} class={} non-transitive={}\n{}",
                canonical_code(t),
                class,
                transitivity_profile(t),
                slot_table_text(t)
            )
            .map_err(io)?;
        }
    }
    if let Some(path) = csv {
        let csv_err = |e: csv::Error| fail(EXIT_INTERNAL, format!("{}: {e}", path.display()));
        let mut w = csv::Writer::from_path(&path).map_err(csv_err)?;
        w.write_record(["code", "class", "non_transitive", "slots"]).map_err(csv_err)?;
        for t in &graphs {
            let class = classify(t).map(|c| c.to_string()).unwrap_or_default();
            let slots: Vec<String> = t
                .slots()
                .iter()
                .map(|row| row.iter().map(|&s| slot_text(s)).collect::<Vec<_>>().join(" "))
                .collect();
            let row = [canonical_code(t).to_string(), class, transitivity_profile(t).to_string(), slots.join(" | ")];
            w.write_record(&row).map_err(csv_err)?;
        }
        w.flush().map_err(io)?;
    }
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| fail(EXIT_INTERNAL, e);
    match cli.command {
        Command::Analyze { input, json: as_json, dot, generators, oriented } => {
            let (report, dot_text) = analyze(&input, generators, oriented)?;
            if let Some(path) = dot {
                std::fs::write(&path, dot_text).map_err(|e| fail(EXIT_INTERNAL, format!("{}: {e}", path.display())))?;
            }
            if as_json {
                let text = serde_json::to_string_pretty(&report).map_err(|e| fail(EXIT_INTERNAL, e))?;
                writeln!(out, "{text}").map_err(io)?;
            } else {
                write!(out, "{}", analysis_text(&report)).map_err(io)?;
            }
            if report.generators.as_ref().is_some_and(|g| !g.closure_matches) {
                return Err(fail(EXIT_INTERNAL, "generated group differs from the automorphism group"));
            }
        }
        Command::Enumerate { colors, vertices, fully_transitive, bipartite, count_only, csv } => {
            let filter = StgFilter { fully_transitive, bipartite, no_semi_edges: false };
            enumerate_command(out, colors, vertices, filter, count_only, csv)?;
        }
        Command::Oriented3 { colors, count_only } => {
            if colors < 4 {
                return Err(fail(EXIT_PARSE, "--colors must be at least 4"));
            }
            let entries = enumerate_oriented_stg3(colors);
            if count_only {
                writeln!(out, "{}", entries.len()).map_err(io)?;
            } else {
                writeln!(out, "count: {}", entries.len()).map_err(io)?;
                for e in &entries {
                    writeln!(out, "{} {:?}\n{}", e.code, e.family, oriented_table_text(&e.graph)).map_err(io)?;
                }
            }
        }
        Command::Construct { name, out: path } => {
            let named: Named = name.parse().map_err(|e: ConstructionError| fail(EXIT_PARSE, e))?;
            let g = named.build().map_err(|e| fail(EXIT_PARSE, e))?;
            let text = write_maniplex_file(&g);
            match path {
                Some(p) => std::fs::write(&p, text).map_err(|e| fail(EXIT_INTERNAL, format!("{}: {e}", p.display())))?,
                None => write!(out, "{text}").map_err(io)?,
            }
        }
        Command::Census { json: as_json } => {
            let report = verify_census();
            if as_json {
                let value = json!({ "schema": 1, "report": report, "all_passed": report.all_passed() });
                writeln!(out, "{}", serde_json::to_string_pretty(&value).map_err(|e| fail(EXIT_INTERNAL, e))?).map_err(io)?;
            } else {
                write!(out, "{report}").map_err(io)?;
            }
            if !report.all_passed() {
                return Err(fail(EXIT_INTERNAL, "census checks failed"));
            }
        }
    }
    Ok(())
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
