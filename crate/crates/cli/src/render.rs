//! Human-readable rendering.

use std::fmt::Write;

use apery_core::LefschetzReport;

use crate::record::{PropertySection, QuotientSection, ReportRecord, Source};

/// Largest matrix printed in full.
pub const MATRIX_LIMIT: usize = 10;

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn verdict(v: apery_core::Verdict) -> &'static str {
    match v {
        apery_core::Verdict::Holds => "holds",
        apery_core::Verdict::Fails => "fails",
        apery_core::Verdict::Inconclusive => "inconclusive",
    }
}

fn method_line(out: &mut String, name: &str, r: &LefschetzReport) {
    let _ = write!(out, "    {name}: {}", verdict(r.verdict));
    if let Some(w) = &r.witness {
        let _ = write!(out, "  (witness L = ({}))", w.join(", "));
    }
    if r.probabilistic {
        out.push_str("  [probabilistic]");
    }
    out.push('\n');
    for m in &r.maps {
        let _ = writeln!(
            out,
            "      x L^{} : A_{} -> A_{}  {}x{}  rank {}/{} ({:?}){}",
            m.power,
            m.from_degree,
            m.from_degree + m.power,
            m.rows,
            m.cols,
            m.generic_rank,
            m.required_rank,
            m.rank_method,
            if m.decisive { "" } else { "  not decisive" }
        );
    }
    for h in &r.hessians {
        let _ = writeln!(
            out,
            "      Hess^({},{})  {}x{}  rank {}/{} ({:?})",
            h.d, h.t, h.rows, h.cols, h.generic_rank, h.required_rank, h.rank_method
        );
    }
    if let Some(n) = &r.note {
        let _ = writeln!(out, "      note: {n}");
    }
}

fn property(out: &mut String, name: &str, p: &PropertySection) {
    let _ = writeln!(out, "{name}: {}", verdict(p.verdict));
    if let Some(r) = &p.ranks {
        method_line(out, "ranks", r);
    }
    if let Some(r) = &p.hessian {
        method_line(out, "hessian", r);
    }
}

pub fn quotient_text(q: &QuotientSection) -> String {
    let mut out = String::new();
    match q {
        QuotientSection::Ci(r) => {
            let _ = writeln!(
                out,
                "complete intersection, gamma = ({}), D = {}",
                join(&r.gamma),
                r.socle_degree
            );
            let _ = writeln!(out, "  gamma criterion: {}", r.gamma_criterion);
            if let (Some(n), Some(e)) = (r.n, r.e) {
                let _ = writeln!(
                    out,
                    "  B = K[x]/({}), N = {n}, E = {e}",
                    join(r.b_generators.as_deref().unwrap_or(&[]))
                );
                let _ = writeln!(
                    out,
                    "  A = B/(0 : {}^{})",
                    r.colon_generator.as_deref().unwrap_or("?"),
                    r.c
                );
            }
            if let Some(chain) = &r.chain {
                chain_text(&mut out, chain);
            }
        }
        QuotientSection::Codim3(r) => {
            let _ = writeln!(
                out,
                "codimension 3, I = ({})",
                r.ideal.generator_strings().join(", ")
            );
            let _ = writeln!(
                out,
                "  G: hilbert ({}), degree criterion {}",
                join(&r.g_hilbert),
                r.g_degree_criterion
            );
            let _ = writeln!(
                out,
                "  A: hilbert ({}), identification verified {}",
                join(&r.a_hilbert),
                r.identification_verified
            );
            chain_text(&mut out, &r.chain);
        }
    }
    out
}

fn chain_text(out: &mut String, chain: &apery_core::lefschetz::QuotientChainReport) {
    let _ = writeln!(
        out,
        "  base: hilbert ({}), WLP {}",
        join(&chain.base_hilbert),
        verdict(chain.base_wlp.verdict)
    );
    for s in &chain.steps {
        let _ = writeln!(
            out,
            "  step {} (0 : {}): ({}) -> ({})  {:?}{}",
            s.step,
            s.variable,
            join(&s.hilbert_before),
            join(&s.hilbert_after),
            s.conclusion,
            s.direct_check
                .as_ref()
                .map(|d| format!(", direct check {}", verdict(d.verdict)))
                .unwrap_or_default()
        );
    }
    let _ = writeln!(
        out,
        "  final: hilbert ({}), WLP {}",
        join(&chain.final_hilbert),
        verdict(chain.final_wlp)
    );
}

pub fn record_text(r: &ReportRecord) -> String {
    let mut out = String::new();
    match &r.source {
        Source::Semigroup { generators } => {
            let _ = writeln!(out, "S = <{}>", join(generators));
        }
        Source::Dual { polynomial, .. } => {
            let _ = writeln!(out, "F = {polynomial}");
        }
    }
    if let Some(s) = &r.semigroup {
        let _ = writeln!(
            out,
            "multiplicity {}, Frobenius number {}",
            s.multiplicity, s.frobenius
        );
        let ap: Vec<String> = s
            .apery
            .iter()
            .map(|e| format!("{}[{}]", e.element, e.order))
            .collect();
        let _ = writeln!(out, "Ap = {{{}}}", ap.join(", "));
        let _ = writeln!(out, "M-pure symmetric: {}", s.m_pure_symmetric);
        let _ = writeln!(
            out,
            "beta = ({}), gamma = ({}), rho = ({})",
            join(&s.frame.beta),
            join(&s.frame.gamma),
            join(&s.frame.rho)
        );
        let _ = writeln!(
            out,
            "|Ap| = {}, |Gamma| = {}, |B| = {}",
            s.boxes.apery_size, s.boxes.gamma_size, s.boxes.b_size
        );
        let _ = writeln!(out, "classification: {}", s.classification.as_str());
    }
    let _ = writeln!(
        out,
        "hilbert: ({}), socle degree {}",
        join(&r.hilbert),
        r.socle_degree
    );
    if let Some(ideal) = &r.defining_ideal {
        let _ = writeln!(
            out,
            "defining ideal: ({})",
            ideal.generator_strings().join(", ")
        );
    }
    if let Some(f) = &r.dual_generator {
        let _ = writeln!(out, "dual generator: {f}");
    }
    if let Some(p) = &r.wlp {
        property(&mut out, "WLP", p);
    }
    if let Some(p) = &r.slp {
        property(&mut out, "SLP", p);
    }
    if let Some(z) = r.hess1_zero {
        let _ = writeln!(out, "hess^1 identically zero: {z}");
    }
    if let Some(q) = &r.quotient_chain {
        out.push_str("quotient condition:\n");
        out.push_str(&quotient_text(q));
    }
    if let Some(c) = &r.conjecture {
        let _ = writeln!(
            out,
            "colon quotients A/(0 : x): {}{}",
            c.quotients
                .iter()
                .map(|q| format!(
                    "{} ({}) WLP {}",
                    q.variable,
                    join(&q.hilbert),
                    verdict(q.wlp.verdict)
                ))
                .collect::<Vec<_>>()
                .join("; "),
            if c.counterexample {
                "  ** COUNTEREXAMPLE **"
            } else {
                ""
            }
        );
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    if let Some(t) = &r.timings {
        let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v}us")).collect();
        let _ = writeln!(out, "timings: {}", parts.join(", "));
    }
    out
}

/// A labelled matrix, or a note when it exceeds [`MATRIX_LIMIT`].
pub fn matrix_text(rows: &[String], cols: &[String], entries: &[Vec<String>]) -> String {
    if rows.len() > MATRIX_LIMIT || cols.len() > MATRIX_LIMIT {
        return format!(
            "({}x{} matrix not shown; use --format json)\n",
            rows.len(),
            cols.len()
        );
    }
    let mut cells = vec![std::iter::once(String::new())
        .chain(cols.iter().cloned())
        .collect::<Vec<_>>()];
    for (label, row) in rows.iter().zip(entries) {
        cells.push(
            std::iter::once(label.clone())
                .chain(row.iter().cloned())
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..=cols.len())
        .map(|j| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}", w = *w))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}
