//! Batch analysis of a semigroup family into a JSONL file.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use apery_core::semigroup::canonical_key;
use apery_core::SweepConfig;
use log::{info, warn};
use rayon::prelude::*;
use serde::Serialize;

use crate::analyze::{run_analyze, AnalyzeOptions};
use crate::record::ReportRecord;

/// Records computed in parallel before being appended in order.
const BATCH: usize = 32;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    /// Semigroups in range that pass the filters.
    pub matched: usize,
    /// Already present in the output file.
    pub skipped_existing: usize,
    pub written: usize,
    /// Records flagging a WLP failure among the conjecture quotients.
    pub counterexamples: Vec<String>,
    pub warnings: Vec<String>,
}

/// Keys already in `path`. A corrupt last line (an interrupted append) is
/// cut off with a warning; corruption anywhere else is an error.
fn existing_keys(path: &Path, warnings: &mut Vec<String>) -> Result<BTreeSet<String>> {
    let mut keys = BTreeSet::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(keys),
        Err(e) => return Err(e).with_context(|| format!("reading {}", path.display())),
    };
    let mut reader = BufReader::new(file);
    let mut offset = 0u64;
    let mut line = String::new();
    let mut bad: Option<(usize, u64, String)> = None;
    let mut lineno = 0;
    loop {
        line.clear();
        let n = reader.read_line(&mut line)?;
        if n == 0 {
            break;
        }
        lineno += 1;
        if let Some((at, _, msg)) = &bad {
            bail!(crate::InputError(format!(
                "{}: line {at} is corrupt ({msg}) and is not the last line",
                path.display()
            )));
        }
        let complete = line.ends_with('\n');
        match ReportRecord::from_json(line.trim_end()) {
            Ok(r) if complete => {
                keys.insert(r.key);
            }
            Ok(_) => bad = Some((lineno, offset, "missing newline".into())),
            Err(e) => bad = Some((lineno, offset, e.to_string())),
        }
        offset += n as u64;
    }
    if let Some((at, start, msg)) = bad {
        let w = format!(
            "{}: ignoring corrupt trailing line {at} ({msg})",
            path.display()
        );
        warn!("{w}");
        warnings.push(w);
        OpenOptions::new().write(true).open(path)?.set_len(start)?;
    }
    Ok(keys)
}

/// Enumerates `config`, analyzes every new semigroup and appends one JSON
/// line each. Every line is written with a single call and flushed.
pub fn run_sweep(config: &SweepConfig, opts: &AnalyzeOptions) -> Result<SweepSummary> {
    config.validate()?;
    let mut summary = SweepSummary::default();
    let path = config.output.as_deref();
    let done = match path {
        Some(p) if config.resume => existing_keys(p, &mut summary.warnings)?,
        Some(p) => {
            if p.metadata().map(|m| m.len() > 0).unwrap_or(false) {
                bail!(crate::InputError(format!(
                    "{} already exists; pass --resume to continue it",
                    p.display()
                )));
            }
            BTreeSet::new()
        }
        None => BTreeSet::new(),
    };
    let semigroups = config.semigroups()?;
    summary.matched = semigroups.len();
    let todo: Vec<Vec<u64>> = semigroups
        .iter()
        .map(|s| s.generators().to_vec())
        .filter(|g| !done.contains(&canonical_key(g)))
        .collect();
    summary.skipped_existing = summary.matched - todo.len();
    if summary.skipped_existing > 0 {
        info!(
            "skipping {} semigroups already in the output",
            summary.skipped_existing
        );
    }

    let mut out: Box<dyn Write> = match path {
        Some(p) => Box::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(p)
                .with_context(|| format!("opening {}", p.display()))?,
        ),
        None => Box::new(std::io::stdout()),
    };
    for batch in todo.chunks(BATCH) {
        let records: Vec<Result<ReportRecord>> =
            batch.par_iter().map(|g| run_analyze(g, opts)).collect();
        for (g, record) in batch.iter().zip(records) {
            let record = record.with_context(|| format!("analyzing <{}>", canonical_key(g)))?;
            if record.conjecture.as_ref().is_some_and(|c| c.counterexample) {
                warn!("WLP failure among the colon quotients of <{}>", record.key);
                summary.counterexamples.push(record.key.clone());
            }
            let mut line = record.to_json_line()?;
            line.push('\n');
            out.write_all(line.as_bytes())?;
            out.flush()?;
            summary.written += 1;
        }
    }
    Ok(summary)
}
