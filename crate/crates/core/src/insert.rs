//! Edge insertion with explicit placement witnesses.
//!
//! An edge can be added to a drawing either inside a face (no crossing),
//! across exactly one currently uncrossed edge not incident to its ends,
//! or as a bridge between two components. A witness pins the insertion
//! down to rotation corners, so results are deterministic.

use serde::Serialize;

use crate::drawing::{Crossing, EdgeId, OnePlaneDrawing, SegmentEnd, VertexId};
use crate::error::DrawingError;
use crate::planar::{FaceId, Planarization};

/// Where the new edge end attaches at a vertex: after rotation corner
/// `idx` (the sector between rotation entries `idx` and `idx+1`), or at an
/// isolated vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum At {
    Corner { idx: usize },
    Isolated,
}

impl At {
    fn key(&self) -> usize {
        match self {
            At::Isolated => usize::MAX,
            At::Corner { idx } => *idx,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// Both corners on one face; drawn without crossing.
    Face { face: FaceId },
    /// Crosses `edge` once. `from_side` tells whether `u`'s corner lies on
    /// the side of the edge's stored from->to orientation.
    Cross { edge: EdgeId, from_side: bool, face_u: FaceId, face_v: FaceId },
    /// Connects two components; drawn without crossing.
    Bridge,
}

impl WitnessKind {
    fn key(&self) -> (u8, u32, u8) {
        match self {
            WitnessKind::Face { face } => (0, *face, 0),
            WitnessKind::Cross { edge, from_side, .. } => (1, *edge, *from_side as u8),
            WitnessKind::Bridge => (2, 0, 0),
        }
    }
}

/// A placement witness for inserting edge `u`-`v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InsertionWitness {
    pub u: VertexId,
    pub v: VertexId,
    pub at_u: At,
    pub at_v: At,
    pub kind: WitnessKind,
}

impl InsertionWitness {
    fn sort_key(&self) -> (VertexId, VertexId, (u8, u32, u8), usize, usize) {
        (self.u, self.v, self.kind.key(), self.at_u.key(), self.at_v.key())
    }
}

/// Applies a witness, returning the grown drawing. The new edge is named
/// after the current edge count. Fails on invalid witnesses; validity of
/// the result (including sphericity) is checked from scratch.
pub fn add_edge(d: &OnePlaneDrawing, w: &InsertionWitness) -> Result<OnePlaneDrawing, DrawingError> {
    if w.u == w.v {
        return Err(DrawingError::InvalidWitness("loop insertion".into()));
    }
    if d.are_adjacent(w.u, w.v) {
        return Err(DrawingError::EdgeAlreadyPresent(
            d.vertex_name(w.u).to_string(),
            d.vertex_name(w.v).to_string(),
        ));
    }
    let new_edge = d.edge_count() as EdgeId;
    let vertex_names: Vec<String> = d.vertices().map(|v| d.vertex_name(v).to_string()).collect();
    let mut edge_names: Vec<String> = d.edges().map(|e| d.edge_name(e).to_string()).collect();
    let mut name = format!("e{}", d.edge_count());
    while edge_names.contains(&name) {
        name.push('x');
    }
    edge_names.push(name);
    let mut endpoints: Vec<(VertexId, VertexId)> = d.edges().map(|e| d.endpoints_of(e)).collect();
    endpoints.push((w.u, w.v));
    let mut crossings: Vec<Crossing> = d.crossings().to_vec();
    if let WitnessKind::Cross { edge, from_side, .. } = w.kind {
        if d.is_crossed(edge) {
            return Err(DrawingError::InvalidWitness(format!(
                "edge `{}` is already crossed",
                d.edge_name(edge)
            )));
        }
        let (a, b) = d.endpoints_of(edge);
        if a == w.u || a == w.v || b == w.u || b == w.v {
            return Err(DrawingError::InvalidWitness(
                "crossed edge incident to an endpoint of the new edge".into(),
            ));
        }
        // Orient the crossed edge c -> dd so that u's corner lies to its
        // left; the counterclockwise order at the new crossing is then
        // [toward dd, toward u, toward c, toward v]. A dart's face sits on
        // its right, so `from_side` (u on the from->to side) means u is
        // left of to->from.
        let (c, dd) = if from_side { (b, a) } else { (a, b) };
        crossings.push(Crossing {
            edges: [edge, new_edge],
            rotation: [
                SegmentEnd { edge, toward: dd },
                SegmentEnd { edge: new_edge, toward: w.u },
                SegmentEnd { edge, toward: c },
                SegmentEnd { edge: new_edge, toward: w.v },
            ],
        });
    }
    let mut rotations: Vec<Vec<EdgeId>> = d.vertices().map(|v| d.rotation(v).to_vec()).collect();
    for (vtx, at) in [(w.u, w.at_u), (w.v, w.at_v)] {
        let rot = &mut rotations[vtx as usize];
        match at {
            At::Isolated => {
                if !rot.is_empty() {
                    return Err(DrawingError::InvalidWitness(format!(
                        "vertex `{}` is not isolated",
                        d.vertex_name(vtx)
                    )));
                }
                rot.push(new_edge);
            }
            At::Corner { idx } => {
                if idx >= rot.len() {
                    return Err(DrawingError::InvalidWitness(format!(
                        "corner {} out of range at `{}`",
                        idx,
                        d.vertex_name(vtx)
                    )));
                }
                rot.insert(idx + 1, new_edge);
            }
        }
    }
    OnePlaneDrawing::new(vertex_names, edge_names, endpoints, crossings, rotations)
}

/// Whether two chords of a disk, given by boundary positions on a cycle
/// of length `m`, interleave (and hence would cross inside the disk).
fn chords_interleave(c1: (usize, usize), c2: (usize, usize), m: usize) -> bool {
    let inside = |x: usize, a: usize, b: usize| -> bool {
        // strictly between a and b going forward around the cycle
        let span = (b + m - a) % m;
        let off = (x + m - a) % m;
        off > 0 && off < span
    };
    inside(c2.0, c1.0, c1.1) != inside(c2.1, c1.0, c1.1)
}

/// All placement witnesses available in `d`, at corner granularity, in a
/// canonical order. Empty exactly when the drawing is maximal.
pub fn witnesses(d: &OnePlaneDrawing) -> Vec<InsertionWitness> {
    let p = Planarization::build(d).expect("valid drawing");
    witnesses_with(d, &p)
}

pub fn witnesses_with(d: &OnePlaneDrawing, p: &Planarization) -> Vec<InsertionWitness> {
    let n = d.vertex_count();
    // Corner (v, i) lies between rotation entries i and i+1 and hosts the
    // face whose walk leaves v along entry i+1. Record its walk position
    // for the chord tests below; boundary points get even labels, arc
    // interiors odd ones.
    let mut face_corners: Vec<Vec<(VertexId, usize, usize)>> = vec![Vec::new(); p.faces.len()];
    let mut dart_pos: Vec<usize> = vec![usize::MAX; p.arcs.len() * 2];
    for (fid, f) in p.faces.iter().enumerate() {
        let _ = fid;
        for (j, &dart) in f.walk.iter().enumerate() {
            dart_pos[dart as usize] = j;
        }
    }
    for v in 0..n {
        let deg = p.vertex_darts[v].len();
        for i in 0..deg {
            let f = p.corner_face(v as VertexId, i);
            let leave = p.vertex_darts[v][(i + 1) % deg];
            face_corners[f as usize].push((v as VertexId, i, 2 * dart_pos[leave as usize]));
        }
    }

    let mut out = Vec::new();

    for (fid, corners) in face_corners.iter().enumerate() {
        for a in 0..corners.len() {
            for b in (a + 1)..corners.len() {
                let (v1, i1, _) = corners[a];
                let (v2, i2, _) = corners[b];
                if v1 == v2 || d.are_adjacent(v1, v2) {
                    continue;
                }
                let (u, au, v, av) =
                    if v1 < v2 { (v1, i1, v2, i2) } else { (v2, i2, v1, i1) };
                out.push(InsertionWitness {
                    u,
                    v,
                    at_u: At::Corner { idx: au },
                    at_v: At::Corner { idx: av },
                    kind: WitnessKind::Face { face: fid as FaceId },
                });
            }
        }
    }

    // Components of the planarization: crossings glue drawings together,
    // so only vertices in distinct map components can be re-embedded
    // freely relative to each other.
    let (comp_of, comp_count) = {
        let mut node_comp = vec![usize::MAX; p.nodes.len()];
        let mut next = 0usize;
        for start in 0..p.nodes.len() {
            if node_comp[start] != usize::MAX {
                continue;
            }
            let id = next;
            next += 1;
            node_comp[start] = id;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for a in &p.arcs {
                    for (s, t) in [(a.from, a.to), (a.to, a.from)] {
                        if s as usize == x && node_comp[t as usize] == usize::MAX {
                            node_comp[t as usize] = id;
                            stack.push(t as usize);
                        }
                    }
                }
            }
        }
        let comp_of: Vec<usize> = (0..n).map(|v| node_comp[v]).collect();
        (comp_of, next)
    };
    let attach = |v: VertexId| -> Vec<(usize, At)> {
        let deg = d.degree(v);
        if deg == 0 {
            vec![(usize::MAX, At::Isolated)]
        } else {
            (0..deg).map(|i| (i, At::Corner { idx: i })).collect()
        }
    };

    for e in d.edges().filter(|&e| !d.is_crossed(e)) {
        let (a, b) = d.endpoints_of(e);
        let comp_e = comp_of[a as usize];
        let arc = p.whole_arc[e as usize].unwrap();
        let from_dart = arc * 2;
        let to_dart = arc * 2 + 1;
        // The u role approaches the side faced by `s_approach`; the other
        // endpoint emerges on the other side. Both chiralities arise by
        // swapping the approach dart. A vertex of another component can
        // take either role at any of its corners: its component embeds
        // freely into the face the role requires.
        for (s_approach, s_exit, from_side) in
            [(from_dart, to_dart, true), (to_dart, from_dart, false)]
        {
            let fa = p.face_of_dart[s_approach as usize];
            let fb = p.face_of_dart[s_exit as usize];
            // (vertex, corner, walk position or MAX when placed freely)
            let mut u_cands: Vec<(VertexId, At, usize)> = face_corners[fa as usize]
                .iter()
                .map(|&(v, i, pos)| (v, At::Corner { idx: i }, pos))
                .collect();
            let mut v_cands: Vec<(VertexId, At, usize)> = face_corners[fb as usize]
                .iter()
                .map(|&(v, i, pos)| (v, At::Corner { idx: i }, pos))
                .collect();
            if comp_count > 1 {
                for v in 0..n as VertexId {
                    if comp_of[v as usize] != comp_e {
                        for (_, at) in attach(v) {
                            u_cands.push((v, at, usize::MAX));
                            v_cands.push((v, at, usize::MAX));
                        }
                    }
                }
            }
            for &(vu, au, pu) in &u_cands {
                if vu == a || vu == b {
                    continue;
                }
                for &(vv, av, pv) in &v_cands {
                    if vv == a || vv == b || vu >= vv || d.are_adjacent(vu, vv) {
                        continue;
                    }
                    let u_out = comp_of[vu as usize] != comp_e;
                    let v_out = comp_of[vv as usize] != comp_e;
                    if u_out && v_out && comp_of[vu as usize] == comp_of[vv as usize] {
                        continue;
                    }
                    if !u_out && !v_out && fa == fb {
                        // Same face on both sides: the two curve pieces are
                        // chords of one disk and must not interleave.
                        let m = 2 * p.faces[fa as usize].walk.len();
                        let c1 = (pu, 2 * dart_pos[s_approach as usize] + 1);
                        let c2 = (2 * dart_pos[s_exit as usize] + 1, pv);
                        if chords_interleave(c1, c2, m) {
                            continue;
                        }
                    }
                    out.push(InsertionWitness {
                        u: vu,
                        v: vv,
                        at_u: au,
                        at_v: av,
                        kind: WitnessKind::Cross { edge: e, from_side, face_u: fa, face_v: fb },
                    });
                }
            }
        }
    }

    if comp_count > 1 {
        for u in 0..n as VertexId {
            for v in (u + 1)..n as VertexId {
                if comp_of[u as usize] == comp_of[v as usize] {
                    continue;
                }
                for (_, au) in attach(u) {
                    for (_, av) in attach(v) {
                        out.push(InsertionWitness { u, v, at_u: au, at_v: av, kind: WitnessKind::Bridge });
                    }
                }
            }
        }
    }

    out.sort_by_key(|w| w.sort_key());
    out
}

/// First witness in canonical order, or `None` when maximal.
pub fn first_witness(d: &OnePlaneDrawing) -> Option<InsertionWitness> {
    witnesses(d).into_iter().next()
}

/// Brute-force maximality oracle: attempts every conceivable single-edge
/// insertion (all corner pairs; uncrossed insertion; both chiralities of
/// every crossing target) and validates each candidate drawing from
/// scratch. Independent of the face-witness logic above.
pub fn oracle_is_maximal(d: &OnePlaneDrawing) -> bool {
    let n = d.vertex_count() as VertexId;
    let attach = |v: VertexId| -> Vec<At> {
        let deg = d.degree(v);
        if deg == 0 {
            vec![At::Isolated]
        } else {
            (0..deg).map(|i| At::Corner { idx: i }).collect()
        }
    };
    let uncrossed: Vec<EdgeId> = d.edges().filter(|&e| !d.is_crossed(e)).collect();
    for u in 0..n {
        for v in (u + 1)..n {
            if d.are_adjacent(u, v) {
                continue;
            }
            for &au in &attach(u) {
                for &av in &attach(v) {
                    let mut kinds: Vec<WitnessKind> = vec![WitnessKind::Bridge];
                    for &e in &uncrossed {
                        let (a, b) = d.endpoints_of(e);
                        if a == u || a == v || b == u || b == v {
                            continue;
                        }
                        for from_side in [true, false] {
                            kinds.push(WitnessKind::Cross {
                                edge: e,
                                from_side,
                                face_u: 0,
                                face_v: 0,
                            });
                        }
                    }
                    for kind in kinds {
                        let w = InsertionWitness { u, v, at_u: au, at_v: av, kind };
                        if add_edge(d, &w).is_ok() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
