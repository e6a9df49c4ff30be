//! Structure analysis of maximal drawings: maximality decision, face and
//! degree lemma checks, crossing completions, hermits, the skeleton,
//! edge classification, exceptional-edge structure, the K4 network, and
//! the counting relations.
//!
//! Checkers never repair anything: violations are collected and reported,
//! since a genuine violation would falsify the structure theory this
//! toolkit encodes.

use serde::Serialize;

use crate::drawing::{EdgeId, OnePlaneDrawing, VertexId};
use crate::error::AnalysisError;
use crate::insert::{first_witness, InsertionWitness};
use crate::planar::Planarization;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Crossing,
    Plain,
    Exceptional,
}

/// Skeleton counts: vertices, crossing edges, plain edges, exceptional
/// edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SkeletonStats {
    pub n: usize,
    pub c: usize,
    pub p: usize,
    pub e: usize,
}

/// Whole-drawing counts: vertices, edges, hermits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DrawingStats {
    pub big_n: usize,
    pub big_e: usize,
    pub h: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: &'static str,
    pub witnesses: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &str, witnesses: Vec<String>) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            status: if witnesses.is_empty() { "pass" } else { "fail" },
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Decides drawing-level maximality; a `Some` result is an addable-edge
/// witness.
pub fn is_maximal(d: &OnePlaneDrawing) -> Option<InsertionWitness> {
    first_witness(d)
}

/// Both clauses of the face lemma: at least two real vertices on every
/// face boundary, and any two vertices sharing a face are adjacent.
pub fn check_face_lemma(d: &OnePlaneDrawing) -> CheckReport {
    let p = Planarization::build(d).expect("valid drawing");
    let mut witnesses = Vec::new();
    for (fid, f) in p.faces.iter().enumerate() {
        if f.real_vertices.len() < 2 {
            witnesses.push(format!(
                "face {fid} has {} real vertices: {:?}",
                f.real_vertices.len(),
                f.real_vertices.iter().map(|&v| d.vertex_name(v)).collect::<Vec<_>>()
            ));
        }
        for i in 0..f.real_vertices.len() {
            for j in (i + 1)..f.real_vertices.len() {
                let (u, v) = (f.real_vertices[i], f.real_vertices[j]);
                if !d.are_adjacent(u, v) {
                    witnesses.push(format!(
                        "face {fid} has non-adjacent vertices `{}` and `{}`",
                        d.vertex_name(u),
                        d.vertex_name(v)
                    ));
                }
            }
        }
    }
    CheckReport::new("face_lemma", witnesses)
}

/// No isolated vertices, no degree-1 vertices.
pub fn check_min_degree(d: &OnePlaneDrawing) -> CheckReport {
    let witnesses = d
        .vertices()
        .filter(|&v| d.degree(v) < 2)
        .map(|v| format!("vertex `{}` has degree {}", d.vertex_name(v), d.degree(v)))
        .collect();
    CheckReport::new("min_degree", witnesses)
}

/// Every crossing pair spans a K4.
pub fn check_crossing_k4(d: &OnePlaneDrawing) -> CheckReport {
    let mut witnesses = Vec::new();
    for cr in d.crossings() {
        let (a, b) = d.endpoints_of(cr.edges[0]);
        let (c, dd) = d.endpoints_of(cr.edges[1]);
        let quad = [a, b, c, dd];
        for i in 0..4 {
            for j in (i + 1)..4 {
                if !d.are_adjacent(quad[i], quad[j]) {
                    witnesses.push(format!(
                        "crossing `{}`x`{}`: vertices {{{},{},{},{}}} miss edge `{}`-`{}`",
                        d.edge_name(cr.edges[0]),
                        d.edge_name(cr.edges[1]),
                        d.vertex_name(a),
                        d.vertex_name(b),
                        d.vertex_name(c),
                        d.vertex_name(dd),
                        d.vertex_name(quad[i]),
                        d.vertex_name(quad[j]),
                    ));
                }
            }
        }
    }
    CheckReport::new("crossing_k4", witnesses)
}

pub fn hermits(d: &OnePlaneDrawing) -> Vec<VertexId> {
    d.vertices().filter(|&v| d.degree(v) == 2).collect()
}

/// Degree-2 vertices together with their structural surroundings: both
/// incident edges uncrossed, the neighbors adjacent, and after removing
/// the hermit, its edges and the neighbor edge, the face where the hermit
/// sat has only the two neighbors on its boundary.
pub fn find_hermits(d: &OnePlaneDrawing) -> (Vec<VertexId>, CheckReport) {
    let hs = hermits(d);
    let mut witnesses = Vec::new();
    for &h in &hs {
        if let Err(msg) = check_one_hermit(d, h) {
            witnesses.push(msg);
        }
    }
    (hs, CheckReport::new("hermit_structure", witnesses))
}

fn check_one_hermit(d: &OnePlaneDrawing, h: VertexId) -> Result<(), String> {
    let hname = d.vertex_name(h).to_string();
    let rot = d.rotation(h);
    let (hu, hv) = (rot[0], rot[1]);
    let u = d.other_end(hu, h);
    let v = d.other_end(hv, h);
    if u == v {
        return Err(format!("hermit `{hname}`: parallel edges to one neighbor"));
    }
    for (e, w) in [(hu, u), (hv, v)] {
        if d.is_crossed(e) {
            return Err(format!(
                "hermit `{hname}`: edge to `{}` is crossed",
                d.vertex_name(w)
            ));
        }
    }
    let uv = match d.edge_between(u, v) {
        Some(e) => e,
        None => {
            return Err(format!(
                "hermit `{hname}`: neighbors `{}` and `{}` not adjacent",
                d.vertex_name(u),
                d.vertex_name(v)
            ))
        }
    };

    // Remove h (with hu, hv) and uv; find the face where h sat.
    let keep: Vec<VertexId> = d.vertices().filter(|&x| x != h).collect();
    let uv_name = d.edge_name(uv).to_string();
    let reduced = d
        .induced(&keep)
        .map_err(|e| format!("hermit `{hname}`: reduction failed: {e}"))?;
    let uv_red = reduced
        .edges()
        .find(|&e| reduced.edge_name(e) == uv_name)
        .expect("neighbor edge survives vertex removal");
    let reduced = reduced
        .without_edge(uv_red)
        .map_err(|e| format!("hermit `{hname}`: reduction failed: {e}"))?;

    // Anchor: a surviving dart on one of h's face walks, identified by
    // (edge name, real origin). Removals only merge faces, so the region
    // around h stays on that dart's side.
    let p = Planarization::build(d).expect("valid drawing");
    let removed = [
        d.edge_name(hu).to_string(),
        d.edge_name(hv).to_string(),
        uv_name.clone(),
    ];
    let mut anchors: Vec<(String, String)> = Vec::new();
    for i in 0..2 {
        let fid = p.corner_face(h, i);
        for &dart in &p.faces[fid as usize].walk {
            let arc = &p.arcs[(dart / 2) as usize];
            let ename = d.edge_name(arc.edge).to_string();
            if removed.contains(&ename) {
                continue;
            }
            let origin = p.origin[dart as usize];
            if let crate::planar::Node::Real(w) = p.nodes[origin as usize] {
                // Outgoing dart along `ename` at `w`.
                anchors.push((ename, d.vertex_name(w).to_string()));
                break;
            }
        }
    }
    if anchors.is_empty() {
        // Degenerate shape: nothing remains around h but the neighbors.
        if reduced.vertex_count() == 2 && reduced.edge_count() == 0 {
            return Ok(());
        }
        return Err(format!(
            "hermit `{hname}`: no surviving boundary anchor and remainder is nontrivial"
        ));
    }

    let rp = Planarization::build(&reduced).expect("valid drawing");
    let mut face_ids = Vec::new();
    for (ename, wname) in &anchors {
        let w = reduced
            .vertices()
            .find(|&x| reduced.vertex_name(x) == wname)
            .expect("vertex survives");
        let e = reduced
            .edges()
            .find(|&x| reduced.edge_name(x) == ename)
            .expect("edge survives");
        let pos = reduced.rotation(w).iter().position(|&x| x == e).unwrap();
        let dart = rp.vertex_darts[w as usize][pos];
        face_ids.push(rp.face_of_dart[dart as usize]);
    }
    face_ids.dedup();
    if face_ids.len() != 1 {
        return Err(format!(
            "hermit `{hname}`: the two sides did not merge into one face"
        ));
    }
    let face = &rp.faces[face_ids[0] as usize];
    let mut expect = vec![u, v];
    expect.sort_unstable();
    let names: Vec<&str> = face.real_vertices.iter().map(|&x| reduced.vertex_name(x)).collect();
    let expect_names: Vec<&str> = expect
        .iter()
        .map(|&x| d.vertex_name(x))
        .collect();
    let mut sorted_names = names.clone();
    sorted_names.sort_unstable();
    let mut sorted_expect = expect_names.clone();
    sorted_expect.sort_unstable();
    if sorted_names != sorted_expect {
        return Err(format!(
            "hermit `{hname}`: surrounding face has vertices {sorted_names:?}, expected {sorted_expect:?}"
        ));
    }
    Ok(())
}

/// Skeleton output: the reduced drawing plus both count tuples.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub drawing: OnePlaneDrawing,
    pub stats: SkeletonStats,
    pub drawing_stats: DrawingStats,
    pub classes: Vec<EdgeClass>,
}

/// Removes every hermit with its two edges in one pass, then checks the
/// result is still maximal with minimum degree 3 and that the count
/// identities hold exactly.
pub fn skeleton(d: &OnePlaneDrawing) -> Result<Skeleton, AnalysisError> {
    let hs = hermits(d);
    let keep: Vec<VertexId> = d.vertices().filter(|v| !hs.contains(v)).collect();
    let reduced = d.induced(&keep).map_err(AnalysisError::Drawing)?;
    if let Some(v) = reduced.vertices().find(|&v| reduced.degree(v) < 3) {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "vertex `{}` has degree {} after hermit removal",
            reduced.vertex_name(v),
            reduced.degree(v)
        )));
    }
    if let Some(w) = is_maximal(&reduced) {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "hermit removal left an addable pair {}-{}",
            reduced.vertex_name(w.u),
            reduced.vertex_name(w.v)
        )));
    }
    let (classes, stats) = classify_edges(&reduced);
    let h = hs.len();
    let drawing_stats = DrawingStats {
        big_n: d.vertex_count(),
        big_e: d.edge_count(),
        h,
    };
    // N = n + h and E = p + e + c + 2h, exactly.
    if drawing_stats.big_n != stats.n + h
        || drawing_stats.big_e != stats.p + stats.e + stats.c + 2 * h
    {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "count identities failed: N={} vs n+h={}, E={} vs p+e+c+2h={}",
            drawing_stats.big_n,
            stats.n + h,
            drawing_stats.big_e,
            stats.p + stats.e + stats.c + 2 * h
        )));
    }
    Ok(Skeleton { drawing: reduced, stats, drawing_stats, classes })
}

/// Classifies every edge of a skeleton as crossing, plain, or exceptional.
/// K4 membership is decided in the abstract graph: two joined common
/// neighbors.
pub fn classify_edges(skel: &OnePlaneDrawing) -> (Vec<EdgeClass>, SkeletonStats) {
    let classes: Vec<EdgeClass> = skel
        .edges()
        .map(|e| {
            if skel.is_crossed(e) {
                EdgeClass::Crossing
            } else if edge_in_k4(skel, e) {
                EdgeClass::Plain
            } else {
                EdgeClass::Exceptional
            }
        })
        .collect();
    let c = classes.iter().filter(|&&x| x == EdgeClass::Crossing).count();
    let p = classes.iter().filter(|&&x| x == EdgeClass::Plain).count();
    let e = classes.iter().filter(|&&x| x == EdgeClass::Exceptional).count();
    (classes, SkeletonStats { n: skel.vertex_count(), c, p, e })
}

pub fn edge_in_k4(g: &OnePlaneDrawing, e: EdgeId) -> bool {
    let (u, v) = g.endpoints_of(e);
    let mut common: Vec<VertexId> = g
        .neighbors(u)
        .filter(|&x| x != v && g.are_adjacent(x, v))
        .collect();
    common.sort_unstable();
    common.dedup();
    for i in 0..common.len() {
        for j in (i + 1)..common.len() {
            if g.are_adjacent(common[i], common[j]) {
                return true;
            }
        }
    }
    false
}

/// Structure of one exceptional edge: distinct flanking faces, both with
/// exactly the vertex set {a, b, f} for a common apex f, and af, bf
/// present and non-exceptional.
pub fn check_exceptional_structure(
    skel: &OnePlaneDrawing,
    ab: EdgeId,
) -> Result<CheckReport, AnalysisError> {
    let (classes, _) = classify_edges(skel);
    if classes[ab as usize] != EdgeClass::Exceptional {
        return Err(AnalysisError::NotExceptional(skel.edge_name(ab).to_string()));
    }
    let (a, b) = skel.endpoints_of(ab);
    let p = Planarization::build(skel).expect("valid drawing");
    let mut witnesses = Vec::new();
    let (f1, f2) = p.edge_sides(ab).expect("exceptional edges are uncrossed");
    if f1 == f2 {
        witnesses.push(format!(
            "edge `{}` has the same face on both sides",
            skel.edge_name(ab)
        ));
        return Ok(CheckReport::new("exceptional_structure", witnesses));
    }
    let mut apexes = Vec::new();
    for fid in [f1, f2] {
        let verts = &p.faces[fid as usize].real_vertices;
        if verts.len() != 3 || !verts.contains(&a) || !verts.contains(&b) {
            witnesses.push(format!(
                "face {fid} flanking `{}` has vertices {:?}, expected exactly {{{}, {}, apex}}",
                skel.edge_name(ab),
                verts.iter().map(|&v| skel.vertex_name(v)).collect::<Vec<_>>(),
                skel.vertex_name(a),
                skel.vertex_name(b),
            ));
            continue;
        }
        apexes.push(*verts.iter().find(|&&v| v != a && v != b).unwrap());
    }
    if apexes.len() == 2 && apexes[0] != apexes[1] {
        witnesses.push(format!(
            "apexes differ: `{}` vs `{}`",
            skel.vertex_name(apexes[0]),
            skel.vertex_name(apexes[1])
        ));
    }
    if let Some(&f) = apexes.first() {
        for x in [a, b] {
            match skel.edge_between(x, f) {
                None => witnesses.push(format!(
                    "edge `{}`-`{}` missing",
                    skel.vertex_name(x),
                    skel.vertex_name(f)
                )),
                Some(xf) => {
                    if classes[xf as usize] == EdgeClass::Exceptional {
                        witnesses.push(format!(
                            "edge `{}` is exceptional but must not be",
                            skel.edge_name(xf)
                        ));
                    }
                }
            }
        }
    }
    Ok(CheckReport::new("exceptional_structure", witnesses))
}

/// The auxiliary graph over K4 subgraphs, adjacent when sharing a vertex.
#[derive(Debug, Clone, Serialize)]
pub struct K4Network {
    pub k4s: Vec<[VertexId; 4]>,
    pub links: Vec<(usize, usize)>,
    pub connected: bool,
}

pub fn k4_subgraphs(g: &OnePlaneDrawing) -> Vec<[VertexId; 4]> {
    let n = g.vertex_count() as VertexId;
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if !g.are_adjacent(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if !g.are_adjacent(a, c) || !g.are_adjacent(b, c) {
                    continue;
                }
                for e in (c + 1)..n {
                    if g.are_adjacent(a, e) && g.are_adjacent(b, e) && g.are_adjacent(c, e) {
                        out.push([a, b, c, e]);
                    }
                }
            }
        }
    }
    out
}

pub fn k4_network(skel: &OnePlaneDrawing) -> K4Network {
    let k4s = k4_subgraphs(skel);
    let mut links = Vec::new();
    for i in 0..k4s.len() {
        for j in (i + 1)..k4s.len() {
            if k4s[i].iter().any(|v| k4s[j].contains(v)) {
                links.push((i, j));
            }
        }
    }
    let connected = {
        if k4s.is_empty() {
            false
        } else {
            let mut seen = vec![false; k4s.len()];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(i) = stack.pop() {
                for &(x, y) in &links {
                    let other = if x == i {
                        Some(y)
                    } else if y == i {
                        Some(x)
                    } else {
                        None
                    };
                    if let Some(o) = other {
                        if !seen[o] {
                            seen[o] = true;
                            stack.push(o);
                        }
                    }
                }
            }
            seen.iter().all(|&s| s)
        }
    };
    K4Network { k4s, links, connected }
}

/// The counting relations tying hermits to crossings and exceptional
/// edges: c >= h, c >= e, c - e >= h.
pub fn check_counting_relations(d: &OnePlaneDrawing) -> Result<CheckReport, AnalysisError> {
    let sk = skeleton(d)?;
    let h = sk.drawing_stats.h;
    let (c, e) = (sk.stats.c, sk.stats.e);
    let mut witnesses = Vec::new();
    if c < h {
        witnesses.push(format!("c = {c} < h = {h}"));
    }
    if c < e {
        witnesses.push(format!("c = {c} < e = {e}"));
    }
    if c < e + h {
        witnesses.push(format!("c - e = {} < h = {h}", c as i64 - e as i64));
    }
    Ok(CheckReport::new("counting_relations", witnesses))
}
