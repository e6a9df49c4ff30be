//! Whole-drawing analysis reports and corpus summaries.

use serde::Serialize;

use crate::analysis::{
    check_counting_relations, check_crossing_k4, check_exceptional_structure, check_face_lemma,
    check_min_degree, find_hermits, is_maximal, skeleton, CheckReport, EdgeClass,
};
use crate::bounds::audit_drawing_bound;
use crate::certify::{certify, check_inequality, verify_certificate};
use crate::drawing::OnePlaneDrawing;

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub maximal: bool,
    pub checks: Vec<CheckReport>,
    pub stats: Option<crate::analysis::SkeletonStats>,
    pub drawing_stats: Option<crate::analysis::DrawingStats>,
    pub inequality_holds: Option<bool>,
    pub bound_pass: Option<bool>,
    pub slack: Option<String>,
    pub all_pass: bool,
}

/// Runs the full checker pipeline on one drawing.
pub fn analyze(d: &OnePlaneDrawing) -> AnalysisReport {
    let mut checks = Vec::new();
    let maximal = is_maximal(d).is_none();
    checks.push(CheckReport::new(
        "maximal",
        if maximal {
            vec![]
        } else {
            vec!["an edge can still be added".into()]
        },
    ));
    if !maximal {
        return AnalysisReport {
            maximal,
            all_pass: false,
            checks,
            stats: None,
            drawing_stats: None,
            inequality_holds: None,
            bound_pass: None,
            slack: None,
        };
    }
    checks.push(check_face_lemma(d));
    checks.push(check_min_degree(d));
    checks.push(check_crossing_k4(d));
    let (_, hermit_report) = find_hermits(d);
    checks.push(hermit_report);
    let mut stats = None;
    let mut drawing_stats = None;
    let mut inequality_holds = None;
    match skeleton(d) {
        Err(e) => checks.push(CheckReport::new("skeleton", vec![e.to_string()])),
        Ok(sk) => {
            checks.push(CheckReport::new("skeleton", vec![]));
            for e in sk.drawing.edges() {
                if sk.classes[e as usize] == EdgeClass::Exceptional {
                    match check_exceptional_structure(&sk.drawing, e) {
                        Ok(r) => checks.push(r),
                        Err(err) => checks.push(CheckReport::new(
                            "exceptional_structure",
                            vec![err.to_string()],
                        )),
                    }
                }
            }
            inequality_holds = Some(check_inequality(&sk.stats));
            stats = Some(sk.stats);
            drawing_stats = Some(sk.drawing_stats);
        }
    }
    match check_counting_relations(d) {
        Ok(r) => checks.push(r),
        Err(e) => checks.push(CheckReport::new("counting_relations", vec![e.to_string()])),
    }
    let (bound_pass, slack) = match audit_drawing_bound(d) {
        Ok(a) => (Some(a.pass), Some(a.slack.to_string())),
        Err(e) => {
            checks.push(CheckReport::new("density_bound", vec![e]));
            (None, None)
        }
    };
    if let Some(pass) = bound_pass {
        checks.push(CheckReport::new(
            "density_bound",
            if pass { vec![] } else { vec!["edge count below the bound".into()] },
        ));
    }
    let all_pass = checks.iter().all(|c| c.passed())
        && inequality_holds.unwrap_or(false)
        && bound_pass.unwrap_or(false);
    AnalysisReport {
        maximal,
        checks,
        stats,
        drawing_stats,
        inequality_holds,
        bound_pass,
        slack,
        all_pass,
    }
}

#[derive(Debug, Serialize)]
pub struct CorpusRow {
    pub name: String,
    pub big_n: usize,
    pub big_e: usize,
    pub h: usize,
    pub n: usize,
    pub p: usize,
    pub e: usize,
    pub c: usize,
    pub slack: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct CorpusSummary {
    pub rows: Vec<CorpusRow>,
    pub min_slack: Option<String>,
    pub min_density: Option<String>,
    pub all_pass: bool,
}

/// Summarizes a batch of named drawings.
pub fn summarize(entries: &[(String, OnePlaneDrawing)]) -> CorpusSummary {
    let mut rows = Vec::new();
    let mut min_slack: Option<num_rational::Rational64> = None;
    let mut min_density: Option<num_rational::Rational64> = None;
    for (name, d) in entries {
        let sk = match skeleton(d) {
            Ok(sk) => sk,
            Err(_) => continue,
        };
        let audit = match audit_drawing_bound(d) {
            Ok(a) => a,
            Err(_) => continue,
        };
        if min_slack.map_or(true, |m| audit.slack < m) {
            min_slack = Some(audit.slack);
        }
        if min_density.map_or(true, |m| audit.density < m) {
            min_density = Some(audit.density);
        }
        rows.push(CorpusRow {
            name: name.clone(),
            big_n: sk.drawing_stats.big_n,
            big_e: sk.drawing_stats.big_e,
            h: sk.drawing_stats.h,
            n: sk.stats.n,
            p: sk.stats.p,
            e: sk.stats.e,
            c: sk.stats.c,
            slack: audit.slack.to_string(),
            pass: audit.pass,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    CorpusSummary {
        rows,
        min_slack: min_slack.map(|m| m.to_string()),
        min_density: min_density.map(|m| m.to_string()),
        all_pass,
    }
}

pub fn summary_csv(s: &CorpusSummary) -> String {
    let mut out = String::from("name,N,E,h,n,p,e,c,slack,pass\n");
    for r in &s.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.name, r.big_n, r.big_e, r.h, r.n, r.p, r.e, r.c, r.slack, r.pass
        ));
    }
    out
}

/// Certify one drawing end-to-end, verifying the result.
pub fn certify_report(d: &OnePlaneDrawing) -> Result<crate::certify::Certificate, crate::error::CertifyError> {
    let sk = skeleton(d)?;
    let cert = certify(&sk.drawing)?;
    verify_certificate(&sk.drawing, &cert)?;
    Ok(cert)
}
