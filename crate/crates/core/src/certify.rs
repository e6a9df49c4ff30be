//! Certificates for the edge-count inequality of skeletons.
//!
//! A certificate records a recursive decomposition along no-K4 edges into
//! pieces without them, and for each piece an incremental build-up from a
//! K4 by four growth operations, with the quantity 9p + 7c - (20n - 30)
//! tracked at every step. Verification recomputes every count from
//! scratch and accepts no recorded number on faith.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::analysis::{
    check_exceptional_structure, classify_edges, is_maximal, k4_subgraphs, EdgeClass,
    SkeletonStats,
};
use crate::drawing::{EdgeId, OnePlaneDrawing, VertexId};
use crate::error::CertifyError;
use crate::planar::Planarization;

/// Exact integer inequality on skeleton counts.
pub fn check_inequality(stats: &SkeletonStats) -> bool {
    9 * stats.p as i64 + 10 * stats.e as i64 + 7 * stats.c as i64 >= 20 * stats.n as i64 - 30
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Certificate {
    pub nodes: Vec<CertNode>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertNode {
    pub id: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    #[serde(flatten)]
    pub kind: NodeKind,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NodeKind {
    Split {
        edge: String,
        a: String,
        b: String,
        apex: String,
        left: usize,
        right: usize,
    },
    Leaf {
        seed: Vec<String>,
        steps: Vec<SweepStep>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SweepStep {
    pub op: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k4_pair: Option<[Vec<String>; 2]>,
    pub added_vertices: Vec<String>,
    pub added_edges: Vec<String>,
    pub delta_lhs: i64,
    pub delta_rhs: i64,
}

/// Produces a verified-by-construction certificate for a skeleton.
pub fn certify(skel: &OnePlaneDrawing) -> Result<Certificate, CertifyError> {
    if skel.vertex_count() < 4 {
        return Err(CertifyError::Decompose(format!(
            "skeleton has {} vertices, need at least 4",
            skel.vertex_count()
        )));
    }
    if let Some(v) = skel.vertices().find(|&v| skel.degree(v) < 3) {
        return Err(CertifyError::Decompose(format!(
            "vertex `{}` has degree {} in the skeleton",
            skel.vertex_name(v),
            skel.degree(v)
        )));
    }
    if let Some(w) = is_maximal(skel) {
        return Err(CertifyError::Decompose(format!(
            "skeleton is not maximal: addable pair {}-{}",
            skel.vertex_name(w.u),
            skel.vertex_name(w.v)
        )));
    }
    let mut nodes = Vec::new();
    build_node(skel, &mut nodes)?;
    Ok(Certificate { nodes })
}

fn piece_names(piece: &OnePlaneDrawing) -> (Vec<String>, Vec<String>) {
    let mut vs: Vec<String> = piece.vertices().map(|v| piece.vertex_name(v).to_string()).collect();
    let mut es: Vec<String> = piece.edges().map(|e| piece.edge_name(e).to_string()).collect();
    vs.sort();
    es.sort();
    (vs, es)
}

fn build_node(piece: &OnePlaneDrawing, nodes: &mut Vec<CertNode>) -> Result<usize, CertifyError> {
    let id = nodes.len();
    let (vs, es) = piece_names(piece);
    nodes.push(CertNode {
        id,
        vertices: vs,
        edges: es,
        kind: NodeKind::Leaf { seed: Vec::new(), steps: Vec::new() },
    });
    let (classes, stats) = classify_edges(piece);
    if stats.e == 0 {
        let (seed, steps) = sweep(piece)?;
        nodes[id].kind = NodeKind::Leaf {
            seed: seed.iter().map(|&v| piece.vertex_name(v).to_string()).collect(),
            steps,
        };
        return Ok(id);
    }
    let ab = piece
        .edges()
        .find(|&e| classes[e as usize] == EdgeClass::Exceptional)
        .expect("e > 0");
    let (g1, g2, apex) = split_along(piece, ab)?;
    verify_split_identities(piece, &g1, &g2)?;
    let (a, b) = piece.endpoints_of(ab);
    let left = build_node(&g1, nodes)?;
    let right = build_node(&g2, nodes)?;
    nodes[id].kind = NodeKind::Split {
        edge: piece.edge_name(ab).to_string(),
        a: piece.vertex_name(a).to_string(),
        b: piece.vertex_name(b).to_string(),
        apex: piece.vertex_name(apex).to_string(),
        left,
        right,
    };
    Ok(id)
}

/// Splits a piece along an exceptional edge ab at its apex f: the two
/// sides of the flanking faces share only f. Returns (a-side, b-side,
/// apex).
fn split_along(
    piece: &OnePlaneDrawing,
    ab: EdgeId,
) -> Result<(OnePlaneDrawing, OnePlaneDrawing, VertexId), CertifyError> {
    let report = check_exceptional_structure(piece, ab)?;
    if !report.passed() {
        return Err(CertifyError::Decompose(format!(
            "edge `{}` fails the flanking structure: {:?}",
            piece.edge_name(ab),
            report.witnesses
        )));
    }
    let (a, b) = piece.endpoints_of(ab);
    let p = Planarization::build(piece).map_err(CertifyError::Drawing)?;
    let (f1, _) = p.edge_sides(ab).expect("exceptional edges are uncrossed");
    let apex = *p.faces[f1 as usize]
        .real_vertices
        .iter()
        .find(|&&v| v != a && v != b)
        .expect("structure check passed");

    // Components of piece - ab - apex.
    let n = piece.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0usize;
    for start in piece.vertices() {
        if start == apex || comp[start as usize] != usize::MAX {
            continue;
        }
        let cid = next;
        next += 1;
        let mut stack = vec![start];
        comp[start as usize] = cid;
        while let Some(x) = stack.pop() {
            for e in piece.rotation(x) {
                if *e == ab {
                    continue;
                }
                let y = piece.other_end(*e, x);
                if y == apex || comp[y as usize] != usize::MAX {
                    continue;
                }
                comp[y as usize] = cid;
                stack.push(y);
            }
        }
    }
    if next != 2 {
        return Err(CertifyError::Decompose(format!(
            "removing `{}` and apex `{}` leaves {} components, expected 2",
            piece.edge_name(ab),
            piece.vertex_name(apex),
            next
        )));
    }
    let ca = comp[a as usize];
    if comp[b as usize] == ca {
        return Err(CertifyError::Decompose(format!(
            "endpoints of `{}` are not separated by the apex",
            piece.edge_name(ab)
        )));
    }
    let side = |cid: usize| -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = piece
            .vertices()
            .filter(|&v| v == apex || comp[v as usize] == cid)
            .collect();
        vs.sort_unstable();
        vs
    };
    let g1 = piece.induced(&side(ca)).map_err(CertifyError::Drawing)?;
    let g2 = piece.induced(&side(1 - ca)).map_err(CertifyError::Drawing)?;
    for (g, tag) in [(&g1, "a-side"), (&g2, "b-side")] {
        if g.vertex_count() < 4 {
            return Err(CertifyError::Decompose(format!(
                "{tag} piece has {} vertices, expected at least 4",
                g.vertex_count()
            )));
        }
        if let Some(v) = g.vertices().find(|&v| g.degree(v) < 3) {
            return Err(CertifyError::Decompose(format!(
                "{tag} piece vertex `{}` has degree {}",
                g.vertex_name(v),
                g.degree(v)
            )));
        }
        if let Some(w) = is_maximal(g) {
            return Err(CertifyError::Decompose(format!(
                "{tag} piece is not maximal: addable pair {}-{}",
                g.vertex_name(w.u),
                g.vertex_name(w.v)
            )));
        }
    }
    Ok((g1, g2, apex))
}

fn verify_split_identities(
    piece: &OnePlaneDrawing,
    g1: &OnePlaneDrawing,
    g2: &OnePlaneDrawing,
) -> Result<(), CertifyError> {
    let (_, s) = classify_edges(piece);
    let (_, s1) = classify_edges(g1);
    let (_, s2) = classify_edges(g2);
    let ok = s1.e + s2.e + 1 == s.e
        && s1.n + s2.n == s.n + 1
        && s1.p + s2.p == s.p
        && s1.c + s2.c == s.c;
    if !ok {
        return Err(CertifyError::Decompose(format!(
            "split identities failed: whole {s:?}, sides {s1:?} / {s2:?}"
        )));
    }
    Ok(())
}

/// Growing subgraph during a sweep.
#[derive(Debug, Clone)]
struct Grow {
    verts: BTreeSet<VertexId>,
    edges: BTreeSet<EdgeId>,
}

impl Grow {
    /// Counts with crossings relative to the subgraph: an edge counts as
    /// crossing only when its partner is also inside.
    fn ledger(&self, leaf: &OnePlaneDrawing) -> (i64, i64) {
        let mut c = 0i64;
        for &e in &self.edges {
            if let Some(p) = leaf.crossing_partner(e) {
                if self.edges.contains(&p) {
                    c += 1;
                }
            }
        }
        let p = self.edges.len() as i64 - c;
        let n = self.verts.len() as i64;
        (9 * p + 7 * c, 20 * n - 30)
    }
}

/// Runs the four-operation sweep on a piece without exceptional edges,
/// returning the seed K4 and the step list.
pub fn sweep(leaf: &OnePlaneDrawing) -> Result<(Vec<VertexId>, Vec<SweepStep>), CertifyError> {
    let (classes, stats) = classify_edges(leaf);
    let _ = classes;
    if stats.e != 0 {
        return Err(CertifyError::Decompose(format!(
            "sweep requires a piece without exceptional edges, found {}",
            stats.e
        )));
    }
    let quads = k4_subgraphs(leaf);
    let seed = quads
        .iter()
        .min()
        .copied()
        .ok_or_else(|| CertifyError::SweepStuck("piece has no K4 to seed from".into()))?;
    let mut g = Grow { verts: BTreeSet::new(), edges: BTreeSet::new() };
    for &v in &seed {
        g.verts.insert(v);
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            let e = leaf
                .edge_between(seed[i], seed[j])
                .expect("K4 edges present");
            g.edges.insert(e);
        }
    }
    let (mut lhs, mut rhs) = g.ledger(leaf);
    if lhs < rhs {
        return Err(CertifyError::SweepStuck(format!(
            "seed ledger violated: {lhs} < {rhs}"
        )));
    }
    let mut steps = Vec::new();
    let total_e = leaf.edge_count();
    let total_v = leaf.vertex_count();
    let cap = total_e + total_v + 4;
    while g.edges.len() != total_e || g.verts.len() != total_v {
        if steps.len() > cap {
            return Err(CertifyError::SweepStuck("sweep exceeded step budget".into()));
        }
        let step = next_step(leaf, &quads, &mut g)?;
        let (nl, nr) = g.ledger(leaf);
        let step = SweepStep {
            delta_lhs: nl - lhs,
            delta_rhs: nr - rhs,
            ..step
        };
        if step.delta_lhs < step.delta_rhs {
            return Err(CertifyError::SweepStuck(format!(
                "op{} step increases the right side faster: {} < {} (after {} steps)",
                step.op,
                step.delta_lhs,
                step.delta_rhs,
                steps.len()
            )));
        }
        lhs = nl;
        rhs = nr;
        if lhs < rhs {
            return Err(CertifyError::SweepStuck(format!(
                "ledger violated after op{}: {lhs} < {rhs}",
                step.op
            )));
        }
        steps.push(step);
    }
    Ok((seed.to_vec(), steps))
}

fn names_of(leaf: &OnePlaneDrawing, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| leaf.vertex_name(v).to_string()).collect()
}

fn next_step(
    leaf: &OnePlaneDrawing,
    quads: &[[VertexId; 4]],
    g: &mut Grow,
) -> Result<SweepStep, CertifyError> {
    // Operation 1: an edge between two old vertices.
    for e in leaf.edges() {
        if g.edges.contains(&e) {
            continue;
        }
        let (u, v) = leaf.endpoints_of(e);
        if g.verts.contains(&u) && g.verts.contains(&v) {
            g.edges.insert(e);
            return Ok(SweepStep {
                op: 1,
                case: None,
                k4_pair: None,
                added_vertices: vec![],
                added_edges: vec![leaf.edge_name(e).to_string()],
                delta_lhs: 0,
                delta_rhs: 0,
            });
        }
    }
    // Operation 2: one new vertex with a K4 on three old vertices; add
    // every such K4 for that vertex.
    for x in leaf.vertices() {
        if g.verts.contains(&x) {
            continue;
        }
        let mine: Vec<&[VertexId; 4]> = quads
            .iter()
            .filter(|q| q.contains(&x) && q.iter().filter(|v| g.verts.contains(v)).count() == 3)
            .collect();
        if mine.is_empty() {
            continue;
        }
        let mut added = BTreeSet::new();
        for q in mine {
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let e = leaf.edge_between(q[i], q[j]).expect("K4 edges present");
                    if !g.edges.contains(&e) {
                        let (eu, ev) = leaf.endpoints_of(e);
                        if eu != x && ev != x {
                            return Err(CertifyError::SweepStuck(format!(
                                "op2 found missing old-old edge `{}`; operation 1 should have fired",
                                leaf.edge_name(e)
                            )));
                        }
                        added.insert(e);
                    }
                }
            }
        }
        g.verts.insert(x);
        for &e in &added {
            g.edges.insert(e);
        }
        return Ok(SweepStep {
            op: 2,
            case: None,
            k4_pair: None,
            added_vertices: vec![leaf.vertex_name(x).to_string()],
            added_edges: added.iter().map(|&e| leaf.edge_name(e).to_string()).collect(),
            delta_lhs: 0,
            delta_rhs: 0,
        });
    }
    // Operation 3: two new vertices with a K4 on two old vertices.
    let news: Vec<VertexId> = leaf.vertices().filter(|v| !g.verts.contains(v)).collect();
    for (i, &x) in news.iter().enumerate() {
        for &y in &news[(i + 1)..] {
            let mine: Vec<&[VertexId; 4]> = quads
                .iter()
                .filter(|q| {
                    q.contains(&x)
                        && q.contains(&y)
                        && q.iter().filter(|v| g.verts.contains(v)).count() == 2
                })
                .collect();
            if mine.is_empty() {
                continue;
            }
            let mut added = BTreeSet::new();
            for q in mine {
                for a in 0..4 {
                    for b in (a + 1)..4 {
                        let e = leaf.edge_between(q[a], q[b]).expect("K4 edges present");
                        if !g.edges.contains(&e) {
                            let (eu, ev) = leaf.endpoints_of(e);
                            let touches_new =
                                eu == x || ev == x || eu == y || ev == y;
                            if !touches_new {
                                return Err(CertifyError::SweepStuck(format!(
                                    "op3 found missing old-old edge `{}`",
                                    leaf.edge_name(e)
                                )));
                            }
                            added.insert(e);
                        }
                    }
                }
            }
            g.verts.insert(x);
            g.verts.insert(y);
            for &e in &added {
                g.edges.insert(e);
            }
            return Ok(SweepStep {
                op: 3,
                case: None,
                k4_pair: None,
                added_vertices: vec![
                    leaf.vertex_name(x).to_string(),
                    leaf.vertex_name(y).to_string(),
                ],
                added_edges: added.iter().map(|&e| leaf.edge_name(e).to_string()).collect(),
                delta_lhs: 0,
                delta_rhs: 0,
            });
        }
    }
    // Operation 4: discovered from a boundary vertex with an old and a new
    // neighbor consecutive in rotation.
    op4_step(leaf, quads, g)
}

fn op4_step(
    leaf: &OnePlaneDrawing,
    quads: &[[VertexId; 4]],
    g: &mut Grow,
) -> Result<SweepStep, CertifyError> {
    let one_old_quad = |must: &[VertexId], g: &Grow| -> Option<[VertexId; 4]> {
        quads
            .iter()
            .filter(|q| {
                must.iter().all(|v| q.contains(v))
                    && q.iter().filter(|v| g.verts.contains(v)).count() == 1
            })
            .min()
            .copied()
    };
    for u in leaf.vertices().filter(|v| g.verts.contains(v)) {
        let rot = leaf.rotation(u);
        if !rot
            .iter()
            .any(|&e| !g.verts.contains(&leaf.other_end(e, u)))
        {
            continue;
        }
        for i in 0..rot.len() {
            let e1 = rot[i];
            let e2 = rot[(i + 1) % rot.len()];
            let n1 = leaf.other_end(e1, u);
            let n2 = leaf.other_end(e2, u);
            let (v, w, uv, uw) = match (g.verts.contains(&n1), g.verts.contains(&n2)) {
                (true, false) => (n1, n2, e1, e2),
                (false, true) => (n2, n1, e2, e1),
                _ => continue,
            };
            let step = op4_case(leaf, quads, g, u, v, w, uv, uw, &one_old_quad)?;
            return Ok(step);
        }
    }
    Err(CertifyError::SweepStuck(
        "no operation applicable while the subgraph is incomplete".into(),
    ))
}

#[allow(clippy::too_many_arguments)]
fn op4_case(
    leaf: &OnePlaneDrawing,
    quads: &[[VertexId; 4]],
    g: &mut Grow,
    u: VertexId,
    v: VertexId,
    w: VertexId,
    uv: EdgeId,
    uw: EdgeId,
    one_old_quad: &dyn Fn(&[VertexId], &Grow) -> Option<[VertexId; 4]>,
) -> Result<SweepStep, CertifyError> {
    let name = |x: VertexId| leaf.vertex_name(x).to_string();
    let quad_of = |a: VertexId, b: VertexId, c: VertexId, d: VertexId| -> Option<[VertexId; 4]> {
        let mut q = [a, b, c, d];
        q.sort_unstable();
        quads.iter().find(|&&x| x == q).copied()
    };
    let (case, ka, kb);
    match (leaf.is_crossed(uv), leaf.is_crossed(uw)) {
        (false, false) => {
            case = 1;
            ka = one_old_quad(&[u, w], g).ok_or_else(|| {
                CertifyError::SweepStuck(format!(
                    "case 1: no K4 on `{}`-`{}` with one old vertex",
                    name(u),
                    name(w)
                ))
            })?;
            if !leaf.are_adjacent(v, w) {
                return Err(CertifyError::SweepStuck(format!(
                    "case 1: consecutive neighbors `{}` and `{}` of `{}` are not adjacent",
                    name(v),
                    name(w),
                    name(u)
                )));
            }
            kb = one_old_quad(&[v, w], g).ok_or_else(|| {
                CertifyError::SweepStuck(format!(
                    "case 1: no K4 on `{}`-`{}` with one old vertex",
                    name(v),
                    name(w)
                ))
            })?;
        }
        (false, true) => {
            case = 2;
            let partner = leaf.crossing_partner(uw).unwrap();
            let (p, q) = leaf.endpoints_of(partner);
            if g.verts.contains(&p) || g.verts.contains(&q) {
                return Err(CertifyError::SweepStuck(format!(
                    "case 2: crossing partner of `{}` touches the old subgraph",
                    leaf.edge_name(uw)
                )));
            }
            ka = quad_of(u, w, p, q).ok_or_else(|| {
                CertifyError::SweepStuck(format!(
                    "case 2: crossing pair `{}`x`{}` spans no K4",
                    leaf.edge_name(uw),
                    leaf.edge_name(partner)
                ))
            })?;
            let a1 = [p.min(q), p.max(q)]
                .into_iter()
                .find(|&x| leaf.are_adjacent(v, x))
                .ok_or_else(|| {
                    CertifyError::SweepStuck(format!(
                        "case 2: `{}` adjacent to neither crossing endpoint",
                        name(v)
                    ))
                })?;
            kb = one_old_quad(&[v, a1], g).ok_or_else(|| {
                CertifyError::SweepStuck(format!(
                    "case 2: no K4 on `{}`-`{}` with one old vertex",
                    name(v),
                    name(a1)
                ))
            })?;
        }
        (true, false) => {
            case = 3;
            let partner = leaf.crossing_partner(uv).unwrap();
            let (p, q) = leaf.endpoints_of(partner);
            if !g.verts.contains(&p) || !g.verts.contains(&q) {
                return Err(CertifyError::SweepStuck(format!(
                    "case 3: crossing partner of `{}` leaves the old subgraph",
                    leaf.edge_name(uv)
                )));
            }
            let a1 = [p.min(q), p.max(q)]
                .into_iter()
                .find(|&x| leaf.are_adjacent(w, x))
                .ok_or_else(|| {
                    CertifyError::SweepStuck(format!(
                        "case 3: `{}` adjacent to neither crossing endpoint",
                        name(w)
                    ))
                })?;
            ka = one_old_quad(&[u, w], g).ok_or_else(|| {
                CertifyError::SweepStuck(format!(
                    "case 3: no K4 on `{}`-`{}` with one old vertex",
                    name(u),
                    name(w)
                ))
            })?;
            kb = one_old_quad(&[a1, w], g).ok_or_else(|| {
                CertifyError::SweepStuck(format!(
                    "case 3: no K4 on `{}`-`{}` with one old vertex",
                    name(a1),
                    name(w)
                ))
            })?;
        }
        (true, true) => {
            case = 4;
            let pw = leaf.crossing_partner(uw).unwrap();
            let (p, q) = leaf.endpoints_of(pw);
            if g.verts.contains(&p) || g.verts.contains(&q) {
                return Err(CertifyError::SweepStuck(
                    "case 4: partner of the outward crossing edge is old".into(),
                ));
            }
            let pv = leaf.crossing_partner(uv).unwrap();
            let (r, s) = leaf.endpoints_of(pv);
            if !g.verts.contains(&r) || !g.verts.contains(&s) {
                return Err(CertifyError::SweepStuck(
                    "case 4: partner of the inward crossing edge is new".into(),
                ));
            }
            ka = quad_of(u, w, p, q).ok_or_else(|| {
                CertifyError::SweepStuck("case 4: crossing pair spans no K4".into())
            })?;
            let mut pick = None;
            'outer: for a1 in [p.min(q), p.max(q)] {
                for c1 in [r.min(s), r.max(s)] {
                    if leaf.are_adjacent(a1, c1) {
                        pick = Some((a1, c1));
                        break 'outer;
                    }
                }
            }
            let (a1, c1) = pick.ok_or_else(|| {
                CertifyError::SweepStuck(
                    "case 4: no edge between the two crossing partners".into(),
                )
            })?;
            kb = one_old_quad(&[a1, c1], g).ok_or_else(|| {
                CertifyError::SweepStuck(format!(
                    "case 4: no K4 on `{}`-`{}` with one old vertex",
                    name(a1),
                    name(c1)
                ))
            })?;
        }
    }

    let mut added_vertices = BTreeSet::new();
    let mut added_edges = BTreeSet::new();
    for quad in [&ka, &kb] {
        for &x in quad.iter() {
            if !g.verts.contains(&x) {
                added_vertices.insert(x);
            }
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                let e = leaf.edge_between(quad[i], quad[j]).expect("K4 edges present");
                if !g.edges.contains(&e) {
                    added_edges.insert(e);
                }
            }
        }
    }
    for &x in &added_vertices {
        g.verts.insert(x);
    }
    for &e in &added_edges {
        g.edges.insert(e);
    }
    Ok(SweepStep {
        op: 4,
        case: Some(case),
        k4_pair: Some([names_of(leaf, &ka), names_of(leaf, &kb)]),
        added_vertices: added_vertices.iter().map(|&x| names_of(leaf, &[x])[0].clone()).collect(),
        added_edges: added_edges.iter().map(|&e| leaf.edge_name(e).to_string()).collect(),
        delta_lhs: 0,
        delta_rhs: 0,
    })
}

/// Independent verification: reconstructs every subgraph, recounts every
/// ledger from scratch, re-derives the split data, and finally checks the
/// inequality on the skeleton itself.
pub fn verify_certificate(skel: &OnePlaneDrawing, cert: &Certificate) -> Result<(), CertifyError> {
    if cert.nodes.is_empty() {
        return Err(CertifyError::Invalid { at: "root".into(), reason: "empty certificate".into() });
    }
    verify_node(skel, cert, 0)?;
    let (_, stats) = classify_edges(skel);
    if !check_inequality(&stats) {
        return Err(CertifyError::Invalid {
            at: "root".into(),
            reason: format!("inequality fails on the skeleton: {stats:?}"),
        });
    }
    Ok(())
}

fn verify_node(piece: &OnePlaneDrawing, cert: &Certificate, id: usize) -> Result<(), CertifyError> {
    let node = cert
        .nodes
        .get(id)
        .ok_or_else(|| CertifyError::Invalid { at: format!("node {id}"), reason: "missing".into() })?;
    let (vs, es) = piece_names(piece);
    if node.vertices != vs || node.edges != es {
        return Err(CertifyError::Invalid {
            at: format!("node {id}"),
            reason: "recorded piece does not match the reconstructed piece".into(),
        });
    }
    match &node.kind {
        NodeKind::Split { edge, a, b, apex, left, right } => {
            let ab = piece
                .edges()
                .find(|&e| piece.edge_name(e) == edge)
                .ok_or_else(|| CertifyError::Invalid {
                    at: format!("node {id}"),
                    reason: format!("split edge `{edge}` not in piece"),
                })?;
            let (ea, eb) = piece.endpoints_of(ab);
            let mut got = [piece.vertex_name(ea).to_string(), piece.vertex_name(eb).to_string()];
            got.sort();
            let mut want = [a.clone(), b.clone()];
            want.sort();
            if got != want {
                return Err(CertifyError::Invalid {
                    at: format!("node {id}"),
                    reason: "split edge endpoints mismatch".into(),
                });
            }
            let (g1, g2, apex_v) = split_along(piece, ab).map_err(|e| CertifyError::Invalid {
                at: format!("node {id}"),
                reason: format!("split re-derivation failed: {e}"),
            })?;
            if piece.vertex_name(apex_v) != apex {
                return Err(CertifyError::Invalid {
                    at: format!("node {id}"),
                    reason: "apex mismatch".into(),
                });
            }
            verify_split_identities(piece, &g1, &g2).map_err(|e| CertifyError::Invalid {
                at: format!("node {id}"),
                reason: e.to_string(),
            })?;
            // The a-side piece is the one containing `a`.
            let a_in_g1 = g1.vertices().any(|v| g1.vertex_name(v) == a.as_str());
            let (la, lb) = if a_in_g1 { (g1, g2) } else { (g2, g1) };
            verify_node(&la, cert, *left)?;
            verify_node(&lb, cert, *right)?;
            Ok(())
        }
        NodeKind::Leaf { seed, steps } => verify_leaf(piece, id, seed, steps),
    }
}

fn verify_leaf(
    piece: &OnePlaneDrawing,
    id: usize,
    seed: &[String],
    steps: &[SweepStep],
) -> Result<(), CertifyError> {
    let at = |i: Option<usize>| match i {
        None => format!("node {id} seed"),
        Some(k) => format!("node {id} step {k}"),
    };
    let fail = |i: Option<usize>, reason: String| CertifyError::Invalid { at: at(i), reason };
    let (classes, stats) = classify_edges(piece);
    let _ = classes;
    if stats.e != 0 {
        return Err(fail(None, format!("leaf piece has {} exceptional edges", stats.e)));
    }
    if stats.n < 4 {
        return Err(fail(None, "leaf piece too small".into()));
    }
    let vid = |name: &str| piece.vertices().find(|&v| piece.vertex_name(v) == name);
    if seed.len() != 4 {
        return Err(fail(None, "seed is not a 4-set".into()));
    }
    let mut g = Grow { verts: BTreeSet::new(), edges: BTreeSet::new() };
    let mut seed_ids = Vec::new();
    for s in seed {
        let v = vid(s).ok_or_else(|| fail(None, format!("seed vertex `{s}` missing")))?;
        seed_ids.push(v);
        g.verts.insert(v);
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            let e = piece
                .edge_between(seed_ids[i], seed_ids[j])
                .ok_or_else(|| fail(None, "seed does not span a K4".into()))?;
            g.edges.insert(e);
        }
    }
    let (mut lhs, mut rhs) = g.ledger(piece);
    if lhs < rhs {
        return Err(fail(None, format!("seed ledger violated: {lhs} < {rhs}")));
    }
    for (k, step) in steps.iter().enumerate() {
        let kk = Some(k);
        let mut new_vs = Vec::new();
        for nm in &step.added_vertices {
            let v = vid(nm).ok_or_else(|| fail(kk, format!("vertex `{nm}` missing")))?;
            if g.verts.contains(&v) {
                return Err(fail(kk, format!("vertex `{nm}` already present")));
            }
            new_vs.push(v);
        }
        let mut new_es = Vec::new();
        for nm in &step.added_edges {
            let e = piece
                .edges()
                .find(|&e| piece.edge_name(e) == nm)
                .ok_or_else(|| fail(kk, format!("edge `{nm}` missing from piece")))?;
            if g.edges.contains(&e) {
                return Err(fail(kk, format!("edge `{nm}` already present")));
            }
            new_es.push(e);
        }
        match step.op {
            1 => {
                if !new_vs.is_empty() {
                    return Err(fail(kk, "operation 1 adds no vertices".into()));
                }
                if new_es.len() != 1 {
                    return Err(fail(kk, "operation 1 adds exactly one edge".into()));
                }
                let (u, v) = piece.endpoints_of(new_es[0]);
                if !g.verts.contains(&u) || !g.verts.contains(&v) {
                    return Err(fail(kk, "operation 1 edge must join old vertices".into()));
                }
            }
            2 => {
                if new_vs.len() != 1 {
                    return Err(fail(kk, "operation 2 adds exactly one vertex".into()));
                }
                let x = new_vs[0];
                for &e in &new_es {
                    let (u, v) = piece.endpoints_of(e);
                    if u != x && v != x {
                        return Err(fail(kk, "operation 2 edges must touch the new vertex".into()));
                    }
                    let other = piece.other_end(e, x);
                    if !g.verts.contains(&other) {
                        return Err(fail(kk, "operation 2 edges must reach old vertices".into()));
                    }
                }
            }
            3 => {
                if new_vs.len() != 2 {
                    return Err(fail(kk, "operation 3 adds exactly two vertices".into()));
                }
                for &e in &new_es {
                    let (u, v) = piece.endpoints_of(e);
                    if !new_vs.contains(&u) && !new_vs.contains(&v) {
                        return Err(fail(kk, "operation 3 edges must touch a new vertex".into()));
                    }
                    for x in [u, v] {
                        if !new_vs.contains(&x) && !g.verts.contains(&x) {
                            return Err(fail(kk, "operation 3 edge endpoint outside subgraph".into()));
                        }
                    }
                }
            }
            4 => {
                let pair = step
                    .k4_pair
                    .as_ref()
                    .ok_or_else(|| fail(kk, "operation 4 must record its K4 pair".into()))?;
                let mut union_v = BTreeSet::new();
                let mut union_e = BTreeSet::new();
                let mut quad_ids = Vec::new();
                for quad in pair {
                    if quad.len() != 4 {
                        return Err(fail(kk, "recorded K4 is not a 4-set".into()));
                    }
                    let ids: Vec<VertexId> = quad
                        .iter()
                        .map(|nm| vid(nm).ok_or_else(|| fail(kk, format!("K4 vertex `{nm}` missing"))))
                        .collect::<Result<_, _>>()?;
                    let old = ids.iter().filter(|v| g.verts.contains(v)).count();
                    if old != 1 {
                        return Err(fail(
                            kk,
                            format!("operation 4 K4 has {old} old vertices, expected 1"),
                        ));
                    }
                    for i in 0..4 {
                        for j in (i + 1)..4 {
                            let e = piece.edge_between(ids[i], ids[j]).ok_or_else(|| {
                                fail(kk, "recorded K4 misses an edge".into())
                            })?;
                            union_e.insert(e);
                        }
                    }
                    for &v in &ids {
                        union_v.insert(v);
                    }
                    quad_ids.push(ids);
                }
                let share_new = quad_ids[0]
                    .iter()
                    .any(|v| quad_ids[1].contains(v) && !g.verts.contains(v));
                if !share_new {
                    return Err(fail(kk, "operation 4 K4s must share a new vertex".into()));
                }
                let expect_vs: BTreeSet<VertexId> =
                    union_v.iter().copied().filter(|v| !g.verts.contains(v)).collect();
                let got_vs: BTreeSet<VertexId> = new_vs.iter().copied().collect();
                if expect_vs != got_vs {
                    return Err(fail(kk, "operation 4 vertex set mismatch".into()));
                }
                let expect_es: BTreeSet<EdgeId> =
                    union_e.iter().copied().filter(|e| !g.edges.contains(e)).collect();
                let got_es: BTreeSet<EdgeId> = new_es.iter().copied().collect();
                if expect_es != got_es {
                    return Err(fail(kk, "operation 4 edge set mismatch".into()));
                }
            }
            other => return Err(fail(kk, format!("unknown operation {other}"))),
        }
        for v in new_vs {
            g.verts.insert(v);
        }
        for e in new_es {
            g.edges.insert(e);
        }
        let (nl, nr) = g.ledger(piece);
        if nl - lhs != step.delta_lhs || nr - rhs != step.delta_rhs {
            return Err(fail(
                kk,
                format!(
                    "recorded deltas ({}, {}) disagree with recount ({}, {})",
                    step.delta_lhs,
                    step.delta_rhs,
                    nl - lhs,
                    nr - rhs
                ),
            ));
        }
        if step.delta_lhs < step.delta_rhs {
            return Err(fail(
                kk,
                format!("step gains {} on the left but {} on the right", step.delta_lhs, step.delta_rhs),
            ));
        }
        lhs = nl;
        rhs = nr;
        if lhs < rhs {
            return Err(fail(kk, format!("ledger violated: {lhs} < {rhs}")));
        }
    }
    if g.verts.len() != piece.vertex_count() || g.edges.len() != piece.edge_count() {
        return Err(fail(
            None,
            format!(
                "sweep covers {}/{} vertices and {}/{} edges",
                g.verts.len(),
                piece.vertex_count(),
                g.edges.len(),
                piece.edge_count()
            ),
        ));
    }
    Ok(())
}

/// Full pipeline: skeleton extraction, certification, verification.
pub fn certify_drawing(d: &OnePlaneDrawing) -> Result<(Certificate, SkeletonStats), CertifyError> {
    let sk = crate::analysis::skeleton(d)?;
    let cert = certify(&sk.drawing)?;
    verify_certificate(&sk.drawing, &cert)?;
    Ok((cert, sk.stats))
}
