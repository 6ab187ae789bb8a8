use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use o3clips::class::{ClassLabel, ClassSet, LabelError, Order, TypeKind};
use o3clips::clips::{
    cell_grid, check_cells, table_cell, ClipsEngine, ClipsQuery, ColumnFamily, MethodChoice, MethodRegistry,
    RowFamily, SweepConfig,
};
use o3clips::concrete::{axis_catalog, materialize, seeded_rotation, RotationElement};
use o3clips::piezo::{compute_piez, golden_piezlaw, read_catalog, CatalogDiff, PrintedList};

/// Clips of conjugacy classes of closed O(3) subgroups.
#[derive(Debug, Parser)]
#[command(name = "o3clips", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate [LHS] o [RHS].
    Clips {
        lhs: String,
        rhs: String,
        /// symbolic, oracle, grid, or both (symbolic and oracle, compared).
        #[arg(long, default_value = "symbolic")]
        method: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the type III x (type II) table cells for concrete parameters.
    Table {
        /// Column parameters, `A..B` (inclusive).
        #[arg(long, default_value = "1..8")]
        n_range: String,
        /// Row parameters, `A..B` (inclusive).
        #[arg(long, default_value = "2..8")]
        m_range: String,
        /// Column families, comma separated (Z2n^-, Dn^z, D2n^d, O^-, O(2)^-).
        #[arg(long, value_delimiter = ',')]
        columns: Vec<String>,
        /// Row families, comma separated (Zm+Z2c, Dm+Z2c, T+Z2c, O+Z2c, I+Z2c, SO(2)+Z2c, O(2)+Z2c).
        #[arg(long, value_delimiter = ',')]
        rows: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the closed forms with explicit intersection on every cell.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[arg(long, default_value_t = 8)]
        m_max: u32,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Isotropy classes of the piezoelectricity law, compared with the published list.
    Piez {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Expected list, one label per line (defaults to the published list).
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Facts about a class: kind, order, axes.
    Info { label: String },
    /// Dump the elements of a finite group, one row-major matrix per line.
    Materialize {
        label: String,
        /// Conjugate the reference group by a seeded random rotation.
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Status> {
    match command {
        Command::Clips { lhs, rhs, method, format } => cmd_clips(&lhs, &rhs, &method, format),
        Command::Table { n_range, m_range, columns, rows, format } => {
            cmd_table(&n_range, &m_range, &columns, &rows, format)
        }
        Command::Verify { n_max, m_max, seed, format } => cmd_verify(n_max, m_max, seed, format),
        Command::Piez { format, golden } => cmd_piez(format, golden),
        Command::Info { label } => cmd_info(&label),
        Command::Materialize { label, seed } => cmd_materialize(&label, seed),
    }
}

/// Parses a label, pointing at the offending byte on failure.
fn parse(text: &str) -> Result<ClassLabel> {
    text.parse::<ClassLabel>().map_err(|err| {
        let pos = match &err {
            LabelError::Syntax { pos, .. } | LabelError::Semantic { pos, .. } => Some(*pos),
            LabelError::Degenerate(_) => None,
        };
        let mut msg = format!("cannot parse '{text}': {err}");
        if let Some(pos) = pos {
            let col = text.trim_start().get(..pos).map_or(pos, |s| s.chars().count());
            let _ = write!(msg, "\n  {}\n  {}^", text.trim(), " ".repeat(col));
        }
        anyhow!(msg)
    })
}

fn require_format(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if !allowed.contains(&format) {
        bail!("{command} does not support --format {format:?}");
    }
    Ok(())
}

fn labels_json(set: &ClassSet) -> serde_json::Value {
    json!(set.labels())
}

fn cmd_clips(lhs: &str, rhs: &str, method: &str, format: Format) -> Result<Status> {
    require_format(format, &[Format::Text, Format::Json], "clips")?;
    let (a, b) = (parse(lhs)?, parse(rhs)?);
    let choice: MethodChoice = method.parse().expect("infallible");
    let registry = MethodRegistry::default();
    if let MethodChoice::Single(name) = &choice {
        if registry.get(name).is_err() {
            let names = registry.names().join(", ");
            bail!("unknown method '{name}' (expected {names} or both)");
        }
    }
    let engine = ClipsEngine::default();
    let outcome = ClipsQuery { lhs: a, rhs: b, method: choice }.run(&engine, &registry)?;
    let agreement = outcome.agreement();
    match format {
        Format::Json => {
            let mut doc = json!({
                "op": "clips",
                "lhs": a.to_string(),
                "rhs": b.to_string(),
                "result": labels_json(&outcome.results[0].1),
            });
            if let Some(agree) = agreement {
                let methods: serde_json::Map<String, serde_json::Value> =
                    outcome.results.iter().map(|(name, set)| (name.clone(), labels_json(set))).collect();
                doc["methods"] = methods.into();
                doc["match"] = agree.into();
            }
            println!("{doc}");
        }
        _ => {
            if agreement.is_some() {
                for (name, set) in &outcome.results {
                    println!("{name}: {set}");
                }
            } else {
                println!("{}", outcome.results[0].1);
            }
            match agreement {
                Some(true) => println!("MATCH"),
                Some(false) => println!("MISMATCH"),
                None => {}
            }
        }
    }
    Ok(if agreement == Some(false) { Status::Mismatch } else { Status::Ok })
}

/// Parses `A..B` or `A..=B` (both inclusive) or a single integer.
fn parse_range(text: &str) -> Result<RangeInclusive<u32>> {
    let bad = || anyhow!("invalid range '{text}' (expected A..B)");
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo.trim(), hi.trim().trim_start_matches('=')),
        None => (text.trim(), text.trim()),
    };
    let lo: u32 = lo.parse().map_err(|_| bad())?;
    let hi: u32 = hi.parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

fn parse_families<T: Copy>(
    names: &[String],
    all: &[T],
    lookup: impl Fn(&str) -> Option<T>,
    what: &str,
) -> Result<Vec<T>> {
    if names.is_empty() {
        return Ok(all.to_vec());
    }
    names
        .iter()
        .map(|name| lookup(name).ok_or_else(|| anyhow!("unknown {what} '{name}'")))
        .collect()
}

fn cmd_table(n_range: &str, m_range: &str, columns: &[String], rows: &[String], format: Format) -> Result<Status> {
    let (n_range, m_range) = (parse_range(n_range)?, parse_range(m_range)?);
    let columns = parse_families(columns, &ColumnFamily::ALL, ColumnFamily::from_name, "column")?;
    let rows = parse_families(rows, &RowFamily::ALL, RowFamily::from_name, "row")?;
    let cells = if n_range.is_empty() || m_range.is_empty() {
        Vec::new()
    } else {
        cell_grid(&rows, &columns, m_range, n_range)
    };
    let header = ["row", "m", "column", "n", "branch", "template", "result", "published"];
    let mut records = Vec::new();
    for coord in cells {
        let cell = table_cell(coord.row, coord.column, coord.m, coord.n)?;
        let param = |parametrized: bool, k: u32| if parametrized { k.to_string() } else { String::new() };
        records.push([
            coord.row.label(coord.m)?.to_string(),
            param(coord.row.is_parametrized(), coord.m),
            coord.column.label(coord.n)?.to_string(),
            param(coord.column.is_parametrized(), coord.n),
            cell.branch.to_string(),
            cell.template,
            cell.result.to_string(),
            cell.published.to_string(),
        ]);
    }
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in &records {
                let note = if r[6] == r[7] { String::new() } else { format!("  (published: {})", r[7]) };
                writeln!(out, "[{}] o [{}]  [{}]  {}{note}", r[2], r[0], r[4], r[6])?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", header.join(","))?;
            for r in &records {
                let fields: Vec<String> = r.iter().map(|f| csv_field(f)).collect();
                writeln!(out, "{}", fields.join(","))?;
            }
        }
        Format::Markdown => {
            writeln!(out, "| {} |", header.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(header.len()))?;
            for r in &records {
                let fields: Vec<String> = r.iter().map(|f| f.replace('|', "\\|")).collect();
                writeln!(out, "| {} |", fields.join(" | "))?;
            }
        }
        Format::Json => {
            let docs: Vec<serde_json::Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "row": r[0], "m": r[1].parse::<u32>().ok(),
                        "column": r[2], "n": r[3].parse::<u32>().ok(),
                        "branch": r[4], "template": r[5],
                        "result": r[6].split_whitespace().collect::<Vec<_>>(),
                        "published": r[7].split_whitespace().collect::<Vec<_>>(),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::from(docs))?;
        }
    }
    print!("{out}");
    Ok(Status::Ok)
}

fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn cmd_verify(n_max: u32, m_max: u32, seed: Option<u64>, format: Format) -> Result<Status> {
    require_format(format, &[Format::Text, Format::Json], "verify")?;
    let mut config = SweepConfig::default();
    if let Some(seed) = seed {
        config.seed = seed;
    }
    let engine = ClipsEngine::new(config);
    let cells = cell_grid(&RowFamily::ALL, &ColumnFamily::ALL, 2..=m_max, 1..=n_max);
    let reports = check_cells(&engine, &cells)?;
    let failed = reports.iter().filter(|r| !r.matches()).count();
    let corrected = reports.iter().filter(|r| r.published != r.symbolic).count();
    if format == Format::Json {
        println!("{}", serde_json::to_string(&json!({ "cells": reports, "mismatches": failed, "corrected": corrected }))?);
    } else {
        for r in &reports {
            let verdict = if r.matches() { "MATCH" } else { "MISMATCH" };
            let mut line = format!("{verdict} [{}] o [{}] [{}] symbolic={{{}}}", r.column_label, r.row_label, r.branch, r.symbolic);
            if !r.matches() {
                write!(line, " oracle={{{}}}", r.oracle)?;
            }
            if r.published != r.symbolic {
                write!(line, " published={{{}}}", r.published)?;
            }
            println!("{line}");
        }
        if failed == 0 {
            println!("all {} cells match ({corrected} differ from the published cells)", reports.len());
        } else {
            println!("{failed} of {} cells mismatch", reports.len());
        }
    }
    Ok(if failed == 0 { Status::Ok } else { Status::Mismatch })
}

fn cmd_piez(format: Format, golden: Option<PathBuf>) -> Result<Status> {
    require_format(format, &[Format::Text, Format::Json], "piez")?;
    let expected: PrintedList = match &golden {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            read_catalog(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?
        }
        None => golden_piezlaw(),
    };
    let engine = ClipsEngine::default();
    let (catalog, sum) = compute_piez(&engine)?;
    let diff = CatalogDiff::new(&sum, &expected.canonical);
    let mut report = String::new();
    writeln!(
        report,
        "expected list: {} printed names, {} distinct classes",
        expected.printed.len(),
        expected.canonical.len()
    )?;
    for (class, names) in &expected.collisions {
        writeln!(report, "collision: {} all denote {class}", names.join(", "))?;
    }
    write!(report, "{diff}")?;
    if diff.is_empty() {
        writeln!(report, "MATCHES the expected list ({} classes)", catalog.classes.len())?;
    } else {
        writeln!(report, "MISMATCH: computed {} classes, expected {}", catalog.classes.len(), expected.canonical.len())?;
    }
    match format {
        Format::Json => {
            println!("{}", labels_json(&catalog.classes));
            eprint!("{report}");
        }
        _ => {
            for label in &catalog.classes {
                println!("{label}");
            }
            print!("{report}");
        }
    }
    Ok(if diff.is_empty() { Status::Ok } else { Status::Mismatch })
}

fn cmd_info(text: &str) -> Result<Status> {
    let label = parse(text)?;
    println!("label: {label}");
    let kind = match label.kind() {
        TypeKind::I => "I (rotations only)",
        TypeKind::II => "II (contains -Id)",
        TypeKind::III => "III (improper elements, no -Id)",
    };
    println!("type: {kind}");
    match label.order() {
        Order::Finite(k) => println!("order: {k}"),
        Order::Infinite => println!("order: infinite"),
    }
    let rotations = ClassLabel::TypeI(label.rotation_part()).canonicalize()?;
    println!("rotation subgroup: {rotations}");
    if !label.is_finite() {
        println!("axes: one continuous symmetry axis; clips are evaluated from membership rules");
        return Ok(Status::Ok);
    }
    let catalog = axis_catalog(label)?;
    if let Some(primary) = catalog.primary_axes.first() {
        let twist =
            if primary.is_twisted() { format!(" ({} proper)", primary.proper_fold) } else { String::new() };
        println!("primary axis: {}-fold{twist}", primary.fold);
    }
    let summary: Vec<String> =
        catalog.fold_summary().iter().map(|(fold, count)| format!("{count} x {fold}-fold")).collect();
    println!("axes: {}", if summary.is_empty() { "none".to_string() } else { summary.join(", ") });
    Ok(Status::Ok)
}

fn cmd_materialize(text: &str, seed: Option<u64>) -> Result<Status> {
    let label = parse(text)?;
    if !label.is_finite() {
        bail!(
            "{label} is infinite and has no element list; its clips are computed from membership rules \
             (try `o3clips clips {label} <OTHER>` or `o3clips info {label}`)"
        );
    }
    let orientation = seed.map_or_else(RotationElement::identity, seeded_rotation);
    let group = materialize(label, &orientation).map_err(|e| anyhow!(e))?;
    let mut out = format!("# label={label} order={}\n", group.len());
    for element in group.elements() {
        let m = element.matrix();
        let entries: Vec<String> =
            (0..3).flat_map(|i| (0..3).map(move |j| format!("{:.16e}", m[(i, j)]))).collect();
        writeln!(out, "{}", entries.join(" "))?;
    }
    print!("{out}");
    Ok(Status::Ok)
}
