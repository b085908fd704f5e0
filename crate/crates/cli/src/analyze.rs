//! The full pipeline behind `analyze` and `from-dual`.

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::Result;
use apery_core::algebra::ideal::BRUTE_FORCE_LIMIT;
use apery_core::algebra::{
    brute_force_relations, build_algebra, ci_tilde_ideal, codim3_defining_ideal,
};
use apery_core::inverse::{divided_power_form, dual_socle_generator};
use apery_core::lefschetz::{
    conjecture_check, quotient_condition_ci, quotient_condition_codim3, slp_by_hessian_with,
    slp_by_ranks_with, wlp_by_hessian_with, wlp_by_ranks_with,
};
use apery_core::seed::task_rng;
use apery_core::semigroup::{canonical_key, compute_beta_gamma_with, AperyTable, FrameData};
use apery_core::{
    DualAlgebraView, Error, GradedAlgebra, IdealDescription, NumericalSemigroup, SparsePoly,
};
use clap::ValueEnum;
use rand_chacha::ChaCha8Rng;

use crate::record::{
    AperyEntry, Classification, Frame, IdealSource, PropertySection, QuotientSection, ReportRecord,
    SemigroupSection, Source, SCHEMA_VERSION,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Ranks,
    Hessian,
    Both,
}

impl MethodChoice {
    fn ranks(self) -> bool {
        self != MethodChoice::Hessian
    }

    fn hessian(self) -> bool {
        self != MethodChoice::Ranks
    }
}

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub method: MethodChoice,
    pub seed: u64,
    pub timings: bool,
    /// Run the quotient-condition and conjecture checks.
    pub quotients: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            method: MethodChoice::Both,
            seed: 0,
            timings: false,
            quotients: true,
        }
    }
}

struct Clock {
    enabled: bool,
    last: Instant,
    laps: BTreeMap<String, u64>,
}

impl Clock {
    fn new(enabled: bool) -> Self {
        Clock {
            enabled,
            last: Instant::now(),
            laps: BTreeMap::new(),
        }
    }

    fn lap(&mut self, stage: &str) {
        if self.enabled {
            let now = Instant::now();
            self.laps
                .insert(stage.to_string(), (now - self.last).as_micros() as u64);
            self.last = now;
        }
    }

    fn finish(self) -> Option<BTreeMap<String, u64>> {
        self.enabled.then_some(self.laps)
    }
}

pub fn parse_generators(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad generator {t:?} in {text:?}")).into())
        })
        .collect()
}

pub fn classify(
    sg: &NumericalSemigroup,
    m_pure: bool,
    ci: bool,
    monomial_ci: bool,
) -> Classification {
    if monomial_ci {
        Classification::MonomialCi
    } else if ci {
        Classification::Ci
    } else if m_pure && sg.embedding_dimension() == 4 {
        Classification::Codim3Structured
    } else {
        Classification::Other
    }
}

pub fn semigroup_section(
    sg: &NumericalSemigroup,
    table: &AperyTable,
    frame: &FrameData,
) -> SemigroupSection {
    let m_pure = table.m_pure_symmetry().symmetric;
    SemigroupSection {
        multiplicity: sg.multiplicity(),
        frobenius: sg.frobenius(),
        apery: table
            .elements
            .iter()
            .zip(&table.orders)
            .map(|(&element, &order)| AperyEntry { element, order })
            .collect(),
        m_pure_symmetric: m_pure,
        frame: Frame {
            beta: frame.beta.clone(),
            gamma: frame.gamma.clone(),
            rho: frame.rho.clone(),
        },
        boxes: frame.box_report(),
        classification: classify(
            sg,
            m_pure,
            frame.is_complete_intersection(),
            frame.is_monomial_ci(),
        ),
    }
}

/// The binomial ideal for complete intersections, the codimension-3
/// construction, or relations found by linear algebra for small algebras.
pub fn defining_ideal(
    sg: &NumericalSemigroup,
    frame: &FrameData,
    classification: Classification,
    alg: &GradedAlgebra,
    notes: &mut Vec<String>,
) -> Result<(Option<IdealSource>, Option<IdealDescription>)> {
    Ok(match classification {
        Classification::MonomialCi | Classification::Ci => {
            (Some(IdealSource::Binomial), Some(ci_tilde_ideal(frame)))
        }
        Classification::Codim3Structured => (
            Some(IdealSource::Codim3Construction),
            Some(codim3_defining_ideal(sg)?),
        ),
        Classification::Other if alg.dim() <= BRUTE_FORCE_LIMIT => (
            Some(IdealSource::LinearAlgebra),
            Some(brute_force_relations(alg, alg.socle_degree() + 1)?),
        ),
        Classification::Other => {
            notes.push(format!(
                "defining ideal skipped: dimension above {BRUTE_FORCE_LIMIT}"
            ));
            (None, None)
        }
    })
}

fn properties(
    alg: Option<&GradedAlgebra>,
    view: Option<&DualAlgebraView>,
    rng: &mut ChaCha8Rng,
) -> Result<(PropertySection, PropertySection)> {
    let wlp = PropertySection::new(
        alg.map(|a| wlp_by_ranks_with(a, rng)),
        view.map(|v| wlp_by_hessian_with(v, rng)),
    )?;
    let slp = PropertySection::new(
        alg.map(|a| slp_by_ranks_with(a, rng)),
        view.map(|v| slp_by_hessian_with(v, rng)),
    )?;
    Ok((wlp, slp))
}

fn hess1_zero(slp: &PropertySection, wlp: &PropertySection) -> Option<bool> {
    slp.hessian
        .iter()
        .chain(&wlp.hessian)
        .find_map(|r| r.first_hessian_vanishes())
}

/// Semigroup → Apéry set → algebra → `F` → classification → WLP/SLP →
/// quotient chains.
pub fn run_analyze(gens: &[u64], opts: &AnalyzeOptions) -> Result<ReportRecord> {
    let mut clock = Clock::new(opts.timings);
    let mut notes = Vec::new();
    let sg = NumericalSemigroup::new(gens)?;
    let gens = sg.generators().to_vec();
    let mut rng = task_rng(opts.seed, &gens);
    let table = sg.apery_set();
    let frame = compute_beta_gamma_with(&sg, &table);
    let m_pure = table.m_pure_symmetry().symmetric;
    let ci = frame.is_complete_intersection();
    let classification = classify(&sg, m_pure, ci, frame.is_monomial_ci());
    clock.lap("semigroup");

    let alg = build_algebra(&table).to_graded();
    let (ideal_source, defining_ideal) =
        defining_ideal(&sg, &frame, classification, &alg, &mut notes)?;
    clock.lap("algebra");

    let (dual_generator, view) = if m_pure {
        let f = dual_socle_generator(&table)?;
        let view = DualAlgebraView::new(divided_power_form(&f))?;
        (Some(f), Some(view))
    } else {
        if opts.method == MethodChoice::Hessian {
            return Err(Error::NotGorenstein.into());
        }
        if opts.method.hessian() {
            notes.push("hessian methods skipped: the algebra is not Gorenstein".into());
        }
        (None, None)
    };
    clock.lap("dual");

    let (wlp, slp) = properties(
        opts.method.ranks().then_some(&alg),
        view.as_ref().filter(|_| opts.method.hessian()),
        &mut rng,
    )?;
    clock.lap("lefschetz");

    let mut quotient_chain = None;
    let mut conjecture = None;
    if opts.quotients {
        quotient_chain = match classification {
            Classification::MonomialCi | Classification::Ci => {
                soft(quotient_condition_ci(&sg, &mut rng), &mut notes)?
                    .map(|r| QuotientSection::Ci(Box::new(r)))
            }
            Classification::Codim3Structured => {
                soft(quotient_condition_codim3(&sg, &mut rng), &mut notes)?
                    .map(|r| QuotientSection::Codim3(Box::new(r)))
            }
            Classification::Other => None,
        };
        clock.lap("quotient_chain");
        if ci || sg.embedding_dimension() == 4 {
            conjecture = soft(conjecture_check(&sg, &mut rng), &mut notes)?;
        }
        clock.lap("conjecture");
    }

    Ok(ReportRecord {
        schema_version: SCHEMA_VERSION,
        key: canonical_key(&gens),
        seed: opts.seed,
        semigroup: Some(semigroup_section(&sg, &table, &frame)),
        source: Source::Semigroup { generators: gens },
        hilbert: alg.hilbert(),
        socle_degree: alg.socle_degree(),
        gorenstein: m_pure,
        dual_generator: dual_generator.map(|f| f.to_string()),
        differential_generator: view.as_ref().map(|v| v.generator().to_string()),
        ideal_source,
        defining_ideal,
        hess1_zero: hess1_zero(&slp, &wlp),
        wlp: Some(wlp),
        slp: Some(slp),
        quotient_chain,
        conjecture,
        notes,
        timings: clock.finish(),
    })
}

/// Size limits inside optional stages become notes; other errors propagate.
fn soft<T>(r: apery_core::Result<T>, notes: &mut Vec<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::SizeLimit(_)) => {
            notes.push(e.to_string());
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

/// `A = Q/Ann(F)` for an arbitrary homogeneous `F`; the Hessian method
/// always runs, ranks on the linear model when requested.
pub fn run_from_dual(poly: &str, opts: &AnalyzeOptions) -> Result<ReportRecord> {
    let mut clock = Clock::new(opts.timings);
    let f = SparsePoly::parse(poly)?;
    let view = DualAlgebraView::new(f)?;
    let key = view.generator().to_string();
    let byte_key: Vec<u64> = key.bytes().map(u64::from).collect();
    let mut rng = task_rng(opts.seed, &byte_key);
    clock.lap("dual");
    let alg = if opts.method.ranks() {
        Some(view.to_graded()?)
    } else {
        None
    };
    clock.lap("algebra");
    let (wlp, slp) = properties(alg.as_ref(), Some(&view), &mut rng)?;
    clock.lap("lefschetz");
    Ok(ReportRecord {
        schema_version: SCHEMA_VERSION,
        source: Source::Dual {
            polynomial: key.clone(),
            variables: view.vars().to_vec(),
        },
        key,
        seed: opts.seed,
        semigroup: None,
        hilbert: view.hilbert(),
        socle_degree: view.socle_degree(),
        gorenstein: true,
        dual_generator: None,
        differential_generator: Some(view.generator().to_string()),
        ideal_source: None,
        defining_ideal: None,
        hess1_zero: hess1_zero(&slp, &wlp),
        wlp: Some(wlp),
        slp: Some(slp),
        quotient_chain: None,
        conjecture: None,
        notes: Vec::new(),
        timings: clock.finish(),
    })
}
