//! Planarization of a drawing: each crossing becomes a degree-4 dummy node,
//! each crossed edge two arcs. Faces are the orbits of the face-successor
//! permutation, and Euler's relation per component certifies that the
//! rotation system describes a sphere embedding.

use crate::drawing::{CrossingId, EdgeId, OnePlaneDrawing, VertexId};
use crate::error::DrawingError;

pub type DartId = u32;
pub type FaceId = u32;
pub type NodeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    Real(VertexId),
    Dummy(CrossingId),
}

/// One arc of the planar map, with its provenance in the drawing.
#[derive(Debug, Clone, Copy)]
pub struct Arc {
    pub from: NodeId,
    pub to: NodeId,
    pub edge: EdgeId,
}

/// A face: its boundary walk as a cyclic dart sequence plus the real
/// vertices and dummies met along it.
#[derive(Debug, Clone)]
pub struct Face {
    pub walk: Vec<DartId>,
    pub real_vertices: Vec<VertexId>,
    pub dummies: Vec<CrossingId>,
}

impl Face {
    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.real_vertices.binary_search(&v).is_ok()
    }
}

#[derive(Debug, Clone)]
pub struct Planarization {
    pub nodes: Vec<Node>,
    pub arcs: Vec<Arc>,
    /// rot_next[d]: next outgoing dart counterclockwise around origin(d).
    pub rot_next: Vec<DartId>,
    pub origin: Vec<NodeId>,
    pub faces: Vec<Face>,
    pub face_of_dart: Vec<FaceId>,
    /// Outgoing darts per real vertex, in rotation order (parallel to the
    /// drawing's rotation lists). Empty for isolated vertices.
    pub vertex_darts: Vec<Vec<DartId>>,
    /// For an uncrossed edge, its single arc; for a crossed edge, none.
    pub whole_arc: Vec<Option<u32>>,
    /// For a crossed edge (u, v): the u-side arc and the v-side arc.
    pub half_arcs: Vec<Option<(u32, u32)>>,
    /// Number of isolated real vertices (own trivial components).
    pub isolated: usize,
}

impl Planarization {
    pub fn twin(d: DartId) -> DartId {
        d ^ 1
    }

    pub fn dart_target(&self, d: DartId) -> NodeId {
        let a = &self.arcs[(d / 2) as usize];
        if d % 2 == 0 {
            a.to
        } else {
            a.from
        }
    }

    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_next[Self::twin(d) as usize] as DartId
    }

    /// Builds the planar map and checks Euler's relation on every
    /// component. Fails if the rotation system is not spherical.
    pub fn build(d: &OnePlaneDrawing) -> Result<Planarization, DrawingError> {
        let nv = d.vertex_count();
        let mut nodes: Vec<Node> = (0..nv as VertexId).map(Node::Real).collect();
        let dummy_base = nv as NodeId;
        for c in 0..d.crossing_count() as CrossingId {
            nodes.push(Node::Dummy(c));
        }

        let mut arcs: Vec<Arc> = Vec::new();
        let mut whole_arc = vec![None; d.edge_count()];
        let mut half_arcs = vec![None; d.edge_count()];
        for e in d.edges() {
            let (u, v) = d.endpoints_of(e);
            match d.crossing_of(e) {
                None => {
                    whole_arc[e as usize] = Some(arcs.len() as u32);
                    arcs.push(Arc { from: u, to: v, edge: e });
                }
                Some(c) => {
                    let x = dummy_base + c;
                    let a1 = arcs.len() as u32;
                    arcs.push(Arc { from: u, to: x, edge: e });
                    let a2 = arcs.len() as u32;
                    arcs.push(Arc { from: x, to: v, edge: e });
                    half_arcs[e as usize] = Some((a1, a2));
                }
            }
        }

        let dart_count = arcs.len() * 2;
        let mut origin = vec![0 as NodeId; dart_count];
        for (ai, a) in arcs.iter().enumerate() {
            origin[ai * 2] = a.from;
            origin[ai * 2 + 1] = a.to;
        }

        // Outgoing dart at a real vertex for a given incident edge.
        let out_dart = |e: EdgeId, v: VertexId| -> DartId {
            match whole_arc[e as usize] {
                Some(a) => {
                    if arcs[a as usize].from == v {
                        a * 2
                    } else {
                        a * 2 + 1
                    }
                }
                None => {
                    let (a1, a2) = half_arcs[e as usize].unwrap();
                    if arcs[a1 as usize].from == v {
                        a1 * 2
                    } else {
                        a2 * 2 + 1
                    }
                }
            }
        };

        let mut rot_next = vec![0 as DartId; dart_count];
        let mut vertex_darts = vec![Vec::new(); nv];
        let mut isolated = 0usize;
        for v in d.vertices() {
            let rot = d.rotation(v);
            if rot.is_empty() {
                isolated += 1;
                continue;
            }
            let darts: Vec<DartId> = rot.iter().map(|&e| out_dart(e, v)).collect();
            for i in 0..darts.len() {
                rot_next[darts[i] as usize] = darts[(i + 1) % darts.len()];
            }
            vertex_darts[v as usize] = darts;
        }
        for (c, cr) in d.crossings().iter().enumerate() {
            let x = dummy_base + c as CrossingId;
            let darts: Vec<DartId> = cr
                .rotation
                .iter()
                .map(|s| {
                    let (a1, a2) = half_arcs[s.edge as usize].unwrap();
                    // Segment toward endpoint `toward`: dart leaving x.
                    let (u, _v) = d.endpoints_of(s.edge);
                    if s.toward == u {
                        a1 * 2 + 1
                    } else {
                        a2 * 2
                    }
                })
                .collect();
            debug_assert_eq!(darts.len(), 4);
            for i in 0..4 {
                rot_next[darts[i] as usize] = darts[(i + 1) % 4];
            }
            let _ = x;
        }

        // Face orbits of d -> rot_next[twin(d)].
        let mut face_of_dart = vec![u32::MAX; dart_count];
        let mut faces: Vec<Face> = Vec::new();
        for start in 0..dart_count as DartId {
            if face_of_dart[start as usize] != u32::MAX {
                continue;
            }
            let fid = faces.len() as FaceId;
            let mut walk = Vec::new();
            let mut cur = start;
            loop {
                face_of_dart[cur as usize] = fid;
                walk.push(cur);
                cur = rot_next[Self::twin(cur) as usize];
                if cur == start {
                    break;
                }
            }
            let mut real_vertices: Vec<VertexId> = Vec::new();
            let mut dummies: Vec<CrossingId> = Vec::new();
            for &dd in &walk {
                match nodes[origin[dd as usize] as usize] {
                    Node::Real(v) => real_vertices.push(v),
                    Node::Dummy(c) => dummies.push(c),
                }
            }
            real_vertices.sort_unstable();
            real_vertices.dedup();
            dummies.sort_unstable();
            dummies.dedup();
            faces.push(Face { walk, real_vertices, dummies });
        }

        let p = Planarization {
            nodes,
            arcs,
            rot_next,
            origin,
            faces,
            face_of_dart,
            vertex_darts,
            whole_arc,
            half_arcs,
            isolated,
        };
        p.check_euler()?;
        Ok(p)
    }

    /// Per-component Euler check: nodes - arcs + faces = 2. Isolated real
    /// vertices are their own trivially spherical components.
    fn check_euler(&self) -> Result<(), DrawingError> {
        let n = self.nodes.len();
        let mut comp = vec![usize::MAX; n];
        let mut next_comp = 0usize;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = next_comp;
            next_comp += 1;
            comp[start] = id;
            let mut stack = vec![start as NodeId];
            while let Some(x) = stack.pop() {
                for d in self.node_darts(x) {
                    let y = self.dart_target(d);
                    if comp[y as usize] == usize::MAX {
                        comp[y as usize] = id;
                        stack.push(y);
                    }
                }
            }
        }
        let mut nodes_in = vec![0usize; next_comp];
        let mut arcs_in = vec![0usize; next_comp];
        let mut faces_in = vec![0usize; next_comp];
        for (i, &c) in comp.iter().enumerate() {
            let _ = i;
            nodes_in[c] += 1;
        }
        for a in &self.arcs {
            arcs_in[comp[a.from as usize]] += 1;
        }
        for f in &self.faces {
            let rep = self.origin[f.walk[0] as usize];
            faces_in[comp[rep as usize]] += 1;
        }
        for c in 0..next_comp {
            if arcs_in[c] == 0 {
                // Isolated node: the single face around it is not
                // materialized; Euler holds as 1 - 0 + 1 = 2.
                continue;
            }
            if nodes_in[c] + faces_in[c] != arcs_in[c] + 2 {
                return Err(DrawingError::NotPlanar {
                    nodes: nodes_in[c],
                    arcs: arcs_in[c],
                    faces: faces_in[c],
                });
            }
        }
        Ok(())
    }

    fn node_darts(&self, x: NodeId) -> Vec<DartId> {
        match self.nodes[x as usize] {
            Node::Real(v) => self.vertex_darts[v as usize].clone(),
            Node::Dummy(_) => {
                // Dummies always have degree 4; find via arcs.
                let mut out = Vec::with_capacity(4);
                for (ai, a) in self.arcs.iter().enumerate() {
                    if a.from == x {
                        out.push(ai as u32 * 2);
                    }
                    if a.to == x {
                        out.push(ai as u32 * 2 + 1);
                    }
                }
                out
            }
        }
    }

    /// The face at corner `i` of vertex `v`: the sector between rotation
    /// entries `i` and `i+1`. That sector hosts the face whose walk
    /// arrives along entry `i`'s arc and leaves along entry `i+1`, which
    /// is the orbit of the `i+1` dart. Meaningless for isolated vertices.
    pub fn corner_face(&self, v: VertexId, i: usize) -> FaceId {
        let darts = &self.vertex_darts[v as usize];
        let d = darts[(i + 1) % darts.len()];
        self.face_of_dart[d as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertex_darts[v as usize].len()
    }

    /// The two face sides of an uncrossed edge: (face of the u->v dart,
    /// face of the v->u dart) where (u, v) are the stored endpoints.
    pub fn edge_sides(&self, e: EdgeId) -> Option<(FaceId, FaceId)> {
        let a = self.whole_arc[e as usize]?;
        Some((
            self.face_of_dart[(a * 2) as usize],
            self.face_of_dart[(a * 2 + 1) as usize],
        ))
    }

    /// Face count; isolated vertices contribute no materialized face.
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Sum of boundary walk lengths; equals twice the arc count.
    pub fn total_walk_length(&self) -> usize {
        self.faces.iter().map(|f| f.walk.len()).sum()
    }

    /// Component ids of real vertices in the abstract sense (isolated
    /// vertices included), used to detect disconnected drawings.
    pub fn real_components(d: &OnePlaneDrawing) -> Vec<Vec<VertexId>> {
        d.components()
    }
}
