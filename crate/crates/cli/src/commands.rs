//! Dispatch of the subcommands.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use apery_core::algebra::build_algebra;
use apery_core::inverse::{
    divided_power_form, dual_socle_generator, mixed_hessian, polynomial_determinant,
};
use apery_core::lefschetz::conjecture_check;
use apery_core::polymatrix::DETERMINANT_LIMIT;
use apery_core::seed::task_rng;
use apery_core::semigroup::compute_beta_gamma_with;
use apery_core::{DualAlgebraView, Error, NumericalSemigroup, SparsePoly};
use serde::Serialize;

use crate::analyze::{defining_ideal, parse_generators, semigroup_section, AnalyzeOptions};
use crate::record::{Classification, IdealSource, QuotientSection, SemigroupSection};
use crate::{render, run_analyze, run_from_dual, run_sweep, Cli, Command, Common, Format};

/// Writes either the JSON form or the text form of a result.
fn emit<T: Serialize>(common: &Common, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    let body = match common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value)?;
            s.push('\n');
            s
        }
        Format::Text => text(),
    };
    write_out(common.out.as_deref(), &body)
}

fn write_out(path: Option<&Path>, body: &str) -> Result<()> {
    match path {
        Some(p) => {
            let mut f = File::create(p).with_context(|| format!("creating {}", p.display()))?;
            f.write_all(body.as_bytes())?;
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn semigroup(gens: &str) -> Result<NumericalSemigroup> {
    Ok(NumericalSemigroup::new(&parse_generators(gens)?)?)
}

#[derive(Serialize)]
struct AperyElement {
    element: u64,
    order: u32,
    maximal_representations: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct AperyOutput {
    generators: Vec<u64>,
    multiplicity: u64,
    frobenius: i64,
    socle_degree: u32,
    m_pure_symmetric: bool,
    hilbert: Vec<usize>,
    elements: Vec<AperyElement>,
}

#[derive(Serialize)]
struct DualOutput {
    generators: Vec<u64>,
    dual_generator: String,
    differential_generator: String,
    hilbert: Vec<usize>,
}

#[derive(Serialize)]
struct HessianOutput {
    polynomial: String,
    d: usize,
    t: usize,
    row_basis: Vec<String>,
    col_basis: Vec<String>,
    entries: Vec<Vec<String>>,
    generic_rank: usize,
    required_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    determinant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct ClassifyOutput {
    generators: Vec<u64>,
    #[serde(flatten)]
    semigroup: SemigroupSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    ideal_source: Option<IdealSource>,
    #[serde(skip_serializing_if = "Option::is_none")]
    defining_ideal: Option<apery_core::IdealDescription>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

fn hessian_output(f: SparsePoly, d: usize, t: usize, seed: u64) -> Result<HessianOutput> {
    let view = DualAlgebraView::new(f)?;
    let top = view.socle_degree();
    if d > top || t > top {
        return Err(Error::DegreeOutOfRange(format!(
            "degrees ({d},{t}) exceed the socle degree {top}"
        ))
        .into());
    }
    let h = mixed_hessian(view.generator(), d, t, view.basis(d), view.basis(t))?;
    let rank = h
        .matrix
        .generic_rank_with(&mut task_rng(seed, &[d as u64, t as u64]));
    let (rows, cols) = (h.matrix.rows(), h.matrix.cols());
    let (determinant, note) = if rows != cols {
        (None, None)
    } else if rows <= DETERMINANT_LIMIT {
        (Some(polynomial_determinant(&h)?.to_string()), None)
    } else {
        (
            None,
            Some(format!(
                "determinant not expanded above {DETERMINANT_LIMIT}x{DETERMINANT_LIMIT}"
            )),
        )
    };
    Ok(HessianOutput {
        polynomial: view.generator().to_string(),
        d,
        t,
        row_basis: h.row_labels(),
        col_basis: h.col_labels(),
        entries: h
            .matrix
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect(),
        generic_rank: rank.rank,
        required_rank: rows.min(cols),
        determinant,
        note,
    })
}

pub fn run(cli: Cli, seed: u64) -> Result<()> {
    match cli.command {
        Command::Analyze {
            gens,
            method,
            timings,
            common,
        } => {
            let opts = AnalyzeOptions {
                method,
                seed,
                timings,
                quotients: true,
            };
            let record = run_analyze(&parse_generators(&gens.gens)?, &opts)?;
            emit(&common, &record, || render::record_text(&record))
        }
        Command::FromDual {
            poly,
            method,
            timings,
            common,
        } => {
            let opts = AnalyzeOptions {
                method,
                seed,
                timings,
                quotients: false,
            };
            let record = run_from_dual(&poly, &opts)?;
            emit(&common, &record, || render::record_text(&record))
        }
        Command::Sweep(args) => {
            let opts = AnalyzeOptions {
                method: args.method,
                seed,
                timings: args.timings,
                quotients: true,
            };
            let summary = run_sweep(&args.config(), &opts)?;
            eprintln!("sweep: {}", serde_json::to_string(&summary)?);
            Ok(())
        }
        Command::Apery { gens, common } => {
            let sg = semigroup(&gens.gens)?;
            let table = sg.apery_set();
            let out = AperyOutput {
                generators: sg.generators().to_vec(),
                multiplicity: sg.multiplicity(),
                frobenius: sg.frobenius(),
                socle_degree: table.socle_degree,
                m_pure_symmetric: table.m_pure_symmetry().symmetric,
                hilbert: table.order_counts(),
                elements: table
                    .elements
                    .iter()
                    .zip(&table.orders)
                    .zip(&table.max_reps)
                    .map(|((&element, &order), reps)| AperyElement {
                        element,
                        order,
                        maximal_representations: reps.iter().map(|r| r.exponents.clone()).collect(),
                    })
                    .collect(),
            };
            emit(&common, &out, || {
                let mut s = format!(
                    "S = {}, Frobenius number {}, M-pure symmetric {}\n",
                    sg, out.frobenius, out.m_pure_symmetric
                );
                for e in &out.elements {
                    let reps: Vec<String> = e
                        .maximal_representations
                        .iter()
                        .map(|r| format!("{r:?}"))
                        .collect();
                    s.push_str(&format!(
                        "{:>6}  order {:>2}  {}\n",
                        e.element,
                        e.order,
                        reps.join(" ")
                    ));
                }
                s
            })
        }
        Command::Dual { gens, common } => {
            let sg = semigroup(&gens.gens)?;
            let table = sg.apery_set();
            let f = dual_socle_generator(&table)?;
            let view = DualAlgebraView::new(divided_power_form(&f))?;
            let out = DualOutput {
                generators: sg.generators().to_vec(),
                dual_generator: f.to_string(),
                differential_generator: view.generator().to_string(),
                hilbert: view.hilbert(),
            };
            emit(&common, &out, || {
                format!(
                    "F = {}\nunder differentiation: {}\n",
                    out.dual_generator, out.differential_generator
                )
            })
        }
        Command::Hessian {
            gens,
            poly,
            d,
            t,
            common,
        } => {
            let f = match (gens, poly) {
                (_, Some(p)) => SparsePoly::parse(&p)?,
                (Some(g), None) => {
                    divided_power_form(&dual_socle_generator(&semigroup(&g)?.apery_set())?)
                }
                (None, None) => unreachable!("clap requires --gens or --poly"),
            };
            let out = hessian_output(f, d, t.unwrap_or(d), seed)?;
            emit(&common, &out, || {
                let mut s = format!("Hess^({},{}) of {}\n", out.d, out.t, out.polynomial);
                s.push_str(&render::matrix_text(
                    &out.row_basis,
                    &out.col_basis,
                    &out.entries,
                ));
                s.push_str(&format!(
                    "rank {}/{}\n",
                    out.generic_rank, out.required_rank
                ));
                if let Some(det) = &out.determinant {
                    s.push_str(&format!("det = {det}\n"));
                }
                if let Some(n) = &out.note {
                    s.push_str(&format!("note: {n}\n"));
                }
                s
            })
        }
        Command::Classify { gens, common } => {
            let sg = semigroup(&gens.gens)?;
            let table = sg.apery_set();
            let frame = compute_beta_gamma_with(&sg, &table);
            let section = semigroup_section(&sg, &table, &frame);
            let alg = build_algebra(&table).to_graded();
            let mut notes = Vec::new();
            let (ideal_source, ideal) =
                defining_ideal(&sg, &frame, section.classification, &alg, &mut notes)?;
            let out = ClassifyOutput {
                generators: sg.generators().to_vec(),
                semigroup: section,
                ideal_source,
                defining_ideal: ideal,
                notes,
            };
            emit(&common, &out, || {
                let mut s = format!("S = {sg}: {}\n", out.semigroup.classification.as_str());
                let b = &out.semigroup.boxes;
                s.push_str(&format!(
                    "|Ap| = {}, |Gamma| = {}, |B| = {}\n",
                    b.apery_size, b.gamma_size, b.b_size
                ));
                if let Some(i) = &out.defining_ideal {
                    s.push_str(&format!("I = ({})\n", i.generator_strings().join(", ")));
                }
                s
            })
        }
        Command::QuotientChain { gens, common } => {
            let sg = semigroup(&gens.gens)?;
            let opts = AnalyzeOptions {
                seed,
                ..AnalyzeOptions::default()
            };
            let mut rng = task_rng(opts.seed, sg.generators());
            let table = sg.apery_set();
            let frame = compute_beta_gamma_with(&sg, &table);
            let section = semigroup_section(&sg, &table, &frame);
            let out = match section.classification {
                Classification::MonomialCi | Classification::Ci => {
                    QuotientSection::Ci(Box::new(apery_core::lefschetz::quotient_condition_ci(&sg, &mut rng)?))
                }
                Classification::Codim3Structured => QuotientSection::Codim3(Box::new(
                    apery_core::lefschetz::quotient_condition_codim3(&sg, &mut rng)?,
                )),
                Classification::Other => {
                    return Err(Error::NotApplicable(format!(
                        "{sg} is neither a complete intersection nor an M-pure symmetric 4-generated semigroup"
                    ))
                    .into())
                }
            };
            emit(&common, &out, || render::quotient_text(&out))
        }
        Command::Conjecture { gens, common } => {
            let sg = semigroup(&gens.gens)?;
            let out = conjecture_check(&sg, &mut task_rng(seed, sg.generators()))?;
            emit(&common, &out, || {
                let mut s = format!("S = {sg}\n");
                for q in &out.quotients {
                    s.push_str(&format!(
                        "A/(0 : {}): hilbert {:?}, Gorenstein {}, WLP {:?}\n",
                        q.variable, q.hilbert, q.gorenstein, q.wlp.verdict
                    ));
                }
                if out.counterexample {
                    s.push_str("COUNTEREXAMPLE: some quotient fails the WLP\n");
                }
                s
            })
        }
    }
}
