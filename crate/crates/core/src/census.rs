//! Exhaustive enumeration of maximal drawings for tiny vertex counts.
//!
//! Every valid drawing on n vertices arises from the edgeless drawing by
//! single-edge insertions (peeling any edge of a valid drawing leaves a
//! valid drawing, and the witness move set covers every combinatorial
//! placement), so a breadth-first closure over insertion moves with
//! canonical-form deduplication visits every drawing class exactly once.
//! The maximal ones form the census.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::canon::{canonical_document, canonical_key, CanonicalKey};
use crate::drawing::{Document, OnePlaneDrawing};
use crate::error::AnalysisError;
use crate::insert::{add_edge, witnesses};
use crate::saturate::{edgeless, random_maximal, saturate};

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationResult {
    pub n: usize,
    /// Minimum edge count among maximal drawings.
    pub e_prime: usize,
    /// Edge count -> number of canonical maximal drawings.
    pub histogram: BTreeMap<usize, usize>,
    pub drawing_count: usize,
    /// Distinct underlying abstract graphs among the census.
    pub graph_count: usize,
    pub drawings: Vec<Document>,
}

/// Exhaustively enumerates all maximal drawings on `n` vertices up to
/// isomorphism (including reflection). Hard-capped at n <= 6.
pub fn enumerate_maximal(n: usize) -> Result<EnumerationResult, AnalysisError> {
    if !(4..=6).contains(&n) {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "enumeration supports 4 <= n <= 6, got {n}"
        )));
    }
    let start = edgeless(n);
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    seen.insert(canonical_key(&start));
    let mut frontier = vec![start];
    let mut maximal: Vec<OnePlaneDrawing> = Vec::new();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for d in &frontier {
            let ws = witnesses(d);
            if ws.is_empty() {
                maximal.push(d.clone());
                continue;
            }
            for w in &ws {
                let child = add_edge(d, w).expect("witnesses are applicable");
                let key = canonical_key(&child);
                if seen.insert(key) {
                    next.push(child);
                }
            }
        }
        frontier = next;
    }

    let mut docs: Vec<(String, Document, usize, Vec<u8>)> = maximal
        .iter()
        .map(|d| {
            let doc = canonical_document(d);
            let text = serde_json::to_string(&doc).expect("canonical document");
            (text, doc, d.edge_count(), abstract_graph_key(d))
        })
        .collect();
    docs.sort_by(|a, b| (a.2, &a.0).cmp(&(b.2, &b.0)));

    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut graphs: HashSet<Vec<u8>> = HashSet::new();
    for (_, _, e, g) in &docs {
        *histogram.entry(*e).or_insert(0) += 1;
        graphs.insert(g.clone());
    }
    let e_prime = docs.first().map(|x| x.2).unwrap_or(0);
    Ok(EnumerationResult {
        n,
        e_prime,
        histogram,
        drawing_count: docs.len(),
        graph_count: graphs.len(),
        drawings: docs.into_iter().map(|x| x.1).collect(),
    })
}

/// Canonical key of the underlying abstract graph: the least adjacency
/// bitmap over all vertex relabelings. Brute force; fine for n <= 6.
pub fn abstract_graph_key(d: &OnePlaneDrawing) -> Vec<u8> {
    let n = d.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for e in d.edges() {
        let (u, v) = d.endpoints_of(e);
        adj[u as usize][v as usize] = true;
        adj[v as usize][u as usize] = true;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u8>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut bits = Vec::with_capacity(n * n / 8 + 1);
        let mut acc = 0u8;
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                acc = (acc << 1) | (adj[p[i]][p[j]] as u8);
                k += 1;
                if k == 8 {
                    bits.push(acc);
                    acc = 0;
                    k = 0;
                }
            }
        }
        if k > 0 {
            bits.push(acc << (8 - k));
        }
        if best.as_ref().map_or(true, |b| bits < *b) {
            best = Some(bits);
        }
    });
    best.unwrap_or_default()
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Searches for a maximal drawing whose skeleton contains an uncrossed
/// edge in no K4. Seeds the search with random saturations and with
/// saturated weakenings of the four templates; the budget counts
/// saturation runs.
pub fn find_exceptional_example(budget: usize) -> Result<OnePlaneDrawing, AnalysisError> {
    let mut tried = 0usize;
    // Template-derived candidates: drop one outer edge, re-saturate.
    for t in 1..=4u8 {
        let template = crate::generate::ExceptionalTemplate::from_index(t).unwrap();
        if let Ok(base) = crate::generate::gen_exceptional(template) {
            for seed in 0..3u64 {
                if tried >= budget {
                    break;
                }
                tried += 1;
                let last = (base.edge_count() - 1) as u32;
                let weakened = base.without_edge(last).expect("edge removal");
                let cand = saturate(&weakened, seed);
                if verified_exceptional(&cand) {
                    return Ok(cand);
                }
            }
        }
    }
    // Plain corpus search.
    let mut n = 9usize;
    let mut seed = 1000u64;
    while tried < budget {
        tried += 1;
        let cand = random_maximal(n, seed);
        if verified_exceptional(&cand) {
            return Ok(cand);
        }
        seed += 1;
        n = 9 + (seed as usize % 5);
    }
    Err(AnalysisError::SkeletonDegenerate(format!(
        "no exceptional example found within budget {budget}"
    )))
}

fn verified_exceptional(d: &OnePlaneDrawing) -> bool {
    if crate::analysis::is_maximal(d).is_some() {
        return false;
    }
    match crate::analysis::skeleton(d) {
        Err(_) => false,
        Ok(sk) => {
            if sk.stats.e == 0 {
                return false;
            }
            let except: Vec<u32> = sk
                .drawing
                .edges()
                .filter(|&e| sk.classes[e as usize] == crate::analysis::EdgeClass::Exceptional)
                .collect();
            except.iter().all(|&e| {
                crate::analysis::check_exceptional_structure(&sk.drawing, e)
                    .map(|r| r.passed())
                    .unwrap_or(false)
            })
        }
    }
}
