//! The central drawing representation: an abstract simple graph together
//! with a crossing pairing and a rotation system.
//!
//! A drawing lives on the sphere; there is no distinguished outer face.
//! Edge crossings are recorded as unordered pairs of edge ids, and the
//! cyclic order of the four segment ends around every crossing is part of
//! the data, so the embedding is fully combinatorial.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::DrawingError;

pub type VertexId = u32;
pub type EdgeId = u32;
pub type CrossingId = u32;

/// One of the four segment ends around a crossing: the edge it belongs to
/// and the endpoint that segment leads to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SegmentEnd {
    pub edge: EdgeId,
    pub toward: VertexId,
}

/// A transversal crossing between two edges, with the counterclockwise
/// order of its four segment ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub edges: [EdgeId; 2],
    pub rotation: [SegmentEnd; 4],
}

/// A 1-plane drawing: simple graph, crossing pairing, rotation system.
///
/// Immutable by convention; edits produce new values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePlaneDrawing {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    endpoints: Vec<(VertexId, VertexId)>,
    crossings: Vec<Crossing>,
    rotations: Vec<Vec<EdgeId>>,
    /// Per edge: the crossing it participates in, if any.
    crossed_by: Vec<Option<CrossingId>>,
}

impl OnePlaneDrawing {
    /// Builds and validates a drawing from raw parts. Rotation lists are in
    /// counterclockwise order per vertex; crossing rotations likewise.
    pub fn new(
        vertex_names: Vec<String>,
        edge_names: Vec<String>,
        endpoints: Vec<(VertexId, VertexId)>,
        crossings: Vec<Crossing>,
        rotations: Vec<Vec<EdgeId>>,
    ) -> Result<Self, DrawingError> {
        let mut crossed_by = vec![None; endpoints.len()];
        for (ci, cr) in crossings.iter().enumerate() {
            for &e in &cr.edges {
                if e as usize >= endpoints.len() {
                    return Err(DrawingError::UnknownEdge(format!("#{e}")));
                }
                if crossed_by[e as usize].is_some() {
                    return Err(DrawingError::EdgeInTwoCrossings(edge_names[e as usize].clone()));
                }
                crossed_by[e as usize] = Some(ci as CrossingId);
            }
        }
        let d = OnePlaneDrawing {
            vertex_names,
            edge_names,
            endpoints,
            crossings,
            rotations,
            crossed_by,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count() as VertexId).into_iter()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_count() as EdgeId).into_iter()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v as usize]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e as usize]
    }

    pub fn endpoints_of(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.endpoints[e as usize]
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints_of(e);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotations[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v as usize].len()
    }

    pub fn crossing(&self, c: CrossingId) -> &Crossing {
        &self.crossings[c as usize]
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_of(&self, e: EdgeId) -> Option<CrossingId> {
        self.crossed_by[e as usize]
    }

    pub fn is_crossed(&self, e: EdgeId) -> bool {
        self.crossed_by[e as usize].is_some()
    }

    /// The edge crossing `e`, if any.
    pub fn crossing_partner(&self, e: EdgeId) -> Option<EdgeId> {
        self.crossed_by[e as usize].map(|c| {
            let [a, b] = self.crossings[c as usize].edges;
            if a == e {
                b
            } else {
                a
            }
        })
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.rotations[u as usize]
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == v && {
                let (a, b) = self.endpoints_of(e);
                (a == u && b == v) || (a == v && b == u)
            })
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations[v as usize].iter().map(move |&e| self.other_end(e, v))
    }

    /// Full invariant check: simple graph, 1-plane crossing pairing,
    /// disjoint crossing endpoints, alternating crossing rotations,
    /// consistent vertex rotations, and sphericity of the rotation system.
    pub fn validate(&self) -> Result<(), DrawingError> {
        let n = self.vertex_count();
        for (ei, &(u, v)) in self.endpoints.iter().enumerate() {
            if u as usize >= n || v as usize >= n {
                return Err(DrawingError::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(DrawingError::LoopEdge(
                    self.edge_names[ei].clone(),
                    self.vertex_names[u as usize].clone(),
                ));
            }
        }
        let mut seen: BTreeMap<(VertexId, VertexId), EdgeId> = BTreeMap::new();
        for (ei, &(u, v)) in self.endpoints.iter().enumerate() {
            let key = (u.min(v), u.max(v));
            if let Some(&other) = seen.get(&key) {
                return Err(DrawingError::ParallelEdge(
                    self.edge_names[other as usize].clone(),
                    self.edge_names[ei].clone(),
                    self.vertex_names[u.min(v) as usize].clone(),
                    self.vertex_names[u.max(v) as usize].clone(),
                ));
            }
            seen.insert(key, ei as EdgeId);
        }

        for cr in &self.crossings {
            let [e1, e2] = cr.edges;
            let (a, b) = self.endpoints_of(e1);
            let (c, d) = self.endpoints_of(e2);
            for shared in [a, b] {
                if shared == c || shared == d {
                    return Err(DrawingError::AdjacentEdgesCross(
                        self.edge_names[e1 as usize].clone(),
                        self.edge_names[e2 as usize].clone(),
                        self.vertex_names[shared as usize].clone(),
                    ));
                }
            }
            // Alternation: consecutive segment ends belong to different edges.
            for i in 0..4 {
                let here = cr.rotation[i].edge;
                let next = cr.rotation[(i + 1) % 4].edge;
                if here == next || !cr.edges.contains(&here) {
                    return Err(DrawingError::CrossingNotAlternating(
                        self.edge_names[e1 as usize].clone(),
                        self.edge_names[e2 as usize].clone(),
                    ));
                }
            }
            let mut ends: Vec<(EdgeId, VertexId)> =
                cr.rotation.iter().map(|s| (s.edge, s.toward)).collect();
            ends.sort_unstable();
            let mut expect = vec![(e1, a), (e1, b), (e2, c), (e2, d)];
            expect.sort_unstable();
            if ends != expect {
                return Err(DrawingError::CrossingEndsMismatch(
                    self.edge_names[e1 as usize].clone(),
                    self.edge_names[e2 as usize].clone(),
                ));
            }
        }

        // Rotations: each vertex lists exactly its incident edges, once each.
        for v in 0..n as VertexId {
            let rot = &self.rotations[v as usize];
            for &e in rot {
                if e as usize >= self.edge_count() {
                    return Err(DrawingError::UnknownEdge(format!("#{e}")));
                }
                let (a, b) = self.endpoints_of(e);
                if a != v && b != v {
                    return Err(DrawingError::RotationForeignEdge(
                        self.vertex_names[v as usize].clone(),
                        self.edge_names[e as usize].clone(),
                    ));
                }
            }
            for &e in rot {
                let count = rot.iter().filter(|&&x| x == e).count();
                if count != 1 {
                    return Err(DrawingError::RotationMultiplicity(
                        self.vertex_names[v as usize].clone(),
                        self.edge_names[e as usize].clone(),
                        count,
                    ));
                }
            }
        }
        for (ei, &(u, v)) in self.endpoints.iter().enumerate() {
            for w in [u, v] {
                if !self.rotations[w as usize].contains(&(ei as EdgeId)) {
                    return Err(DrawingError::RotationMultiplicity(
                        self.vertex_names[w as usize].clone(),
                        self.edge_names[ei].clone(),
                        0,
                    ));
                }
            }
        }

        // Sphericity: Euler's relation must hold on every component of the
        // planarization.
        crate::planar::Planarization::build(self).map(|_| ())
    }

    /// Abstract-graph adjacency sets, ignoring the embedding.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(u, v) in &self.endpoints {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Connected components of the underlying abstract graph, each sorted.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; n];
        let mut parts: Vec<Vec<VertexId>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = vec![start as VertexId];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if comp[y as usize] == usize::MAX {
                        comp[y as usize] = id;
                        stack.push(y as usize);
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            parts.push(members);
        }
        parts
    }

    /// Restriction to a vertex subset: keeps edges with both ends inside,
    /// crossings with both edges kept, and the induced rotation orders.
    /// Vertex and edge names are preserved.
    pub fn induced(&self, keep: &[VertexId]) -> Result<OnePlaneDrawing, DrawingError> {
        let mut vmap = vec![None; self.vertex_count()];
        let mut names = Vec::with_capacity(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            vmap[v as usize] = Some(i as VertexId);
            names.push(self.vertex_names[v as usize].clone());
        }
        let mut emap = vec![None; self.edge_count()];
        let mut endpoints = Vec::new();
        let mut edge_names = Vec::new();
        for e in self.edges() {
            let (u, v) = self.endpoints_of(e);
            if let (Some(nu), Some(nv)) = (vmap[u as usize], vmap[v as usize]) {
                emap[e as usize] = Some(endpoints.len() as EdgeId);
                endpoints.push((nu, nv));
                edge_names.push(self.edge_names[e as usize].clone());
            }
        }
        let mut crossings = Vec::new();
        for cr in &self.crossings {
            let [e1, e2] = cr.edges;
            if let (Some(n1), Some(n2)) = (emap[e1 as usize], emap[e2 as usize]) {
                let rotation = cr.rotation.map(|s| SegmentEnd {
                    edge: emap[s.edge as usize].unwrap(),
                    toward: vmap[s.toward as usize].unwrap(),
                });
                crossings.push(Crossing { edges: [n1, n2], rotation });
            }
        }
        let mut rotations = Vec::with_capacity(keep.len());
        for &v in keep {
            let rot: Vec<EdgeId> = self.rotations[v as usize]
                .iter()
                .filter_map(|&e| emap[e as usize])
                .collect();
            rotations.push(rot);
        }
        OnePlaneDrawing::new(names, edge_names, endpoints, crossings, rotations)
    }

    /// Drops one edge, keeping everything else in place. If the edge was
    /// crossed its partner becomes uncrossed.
    pub fn without_edge(&self, e: EdgeId) -> Result<OnePlaneDrawing, DrawingError> {
        let mut emap = vec![None; self.edge_count()];
        let mut endpoints = Vec::new();
        let mut edge_names = Vec::new();
        for x in self.edges() {
            if x == e {
                continue;
            }
            emap[x as usize] = Some(endpoints.len() as EdgeId);
            endpoints.push(self.endpoints_of(x));
            edge_names.push(self.edge_names[x as usize].clone());
        }
        let mut crossings = Vec::new();
        for cr in &self.crossings {
            if cr.edges.contains(&e) {
                continue;
            }
            let rotation = cr.rotation.map(|s| SegmentEnd {
                edge: emap[s.edge as usize].unwrap(),
                toward: s.toward,
            });
            crossings.push(Crossing {
                edges: [emap[cr.edges[0] as usize].unwrap(), emap[cr.edges[1] as usize].unwrap()],
                rotation,
            });
        }
        let rotations = self
            .rotations
            .iter()
            .map(|rot| rot.iter().filter_map(|&x| emap[x as usize]).collect())
            .collect();
        OnePlaneDrawing::new(
            self.vertex_names.clone(),
            edge_names,
            endpoints,
            crossings,
            rotations,
        )
    }

    /// Document round trip, preserving names and order.
    pub fn to_document(&self) -> Document {
        Document {
            version: 1,
            vertices: self.vertex_names.clone(),
            edges: self
                .edges()
                .map(|e| {
                    let (u, v) = self.endpoints_of(e);
                    DocEdge {
                        id: self.edge_names[e as usize].clone(),
                        u: self.vertex_names[u as usize].clone(),
                        v: self.vertex_names[v as usize].clone(),
                    }
                })
                .collect(),
            crossings: self
                .crossings
                .iter()
                .map(|cr| DocCrossing {
                    e1: self.edge_names[cr.edges[0] as usize].clone(),
                    e2: self.edge_names[cr.edges[1] as usize].clone(),
                    rotation: cr
                        .rotation
                        .iter()
                        .map(|s| DocSegmentEnd {
                            edge: self.edge_names[s.edge as usize].clone(),
                            toward: self.vertex_names[s.toward as usize].clone(),
                        })
                        .collect(),
                })
                .collect(),
            rotations: self
                .vertices()
                .map(|v| {
                    (
                        self.vertex_names[v as usize].clone(),
                        self.rotations[v as usize]
                            .iter()
                            .map(|&e| self.edge_names[e as usize].clone())
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &Document) -> Result<OnePlaneDrawing, DrawingError> {
        if doc.version != 1 {
            return Err(DrawingError::Version(doc.version));
        }
        let mut vid: BTreeMap<&str, VertexId> = BTreeMap::new();
        for (i, name) in doc.vertices.iter().enumerate() {
            if vid.insert(name, i as VertexId).is_some() {
                return Err(DrawingError::DuplicateVertex(name.clone()));
            }
        }
        let mut eid: BTreeMap<&str, EdgeId> = BTreeMap::new();
        let mut endpoints = Vec::new();
        let mut edge_names = Vec::new();
        for (i, e) in doc.edges.iter().enumerate() {
            if eid.insert(&e.id, i as EdgeId).is_some() {
                return Err(DrawingError::DuplicateEdge(e.id.clone()));
            }
            let u = *vid.get(e.u.as_str()).ok_or_else(|| DrawingError::UnknownVertex(e.u.clone()))?;
            let v = *vid.get(e.v.as_str()).ok_or_else(|| DrawingError::UnknownVertex(e.v.clone()))?;
            endpoints.push((u, v));
            edge_names.push(e.id.clone());
        }
        let mut crossings = Vec::new();
        for c in &doc.crossings {
            let e1 = *eid.get(c.e1.as_str()).ok_or_else(|| DrawingError::UnknownEdge(c.e1.clone()))?;
            let e2 = *eid.get(c.e2.as_str()).ok_or_else(|| DrawingError::UnknownEdge(c.e2.clone()))?;
            if c.rotation.len() != 4 {
                return Err(DrawingError::Malformed(format!(
                    "crossing of `{}` and `{}` must list 4 segment ends",
                    c.e1, c.e2
                )));
            }
            let mut rotation = [SegmentEnd { edge: 0, toward: 0 }; 4];
            for (i, s) in c.rotation.iter().enumerate() {
                let edge =
                    *eid.get(s.edge.as_str()).ok_or_else(|| DrawingError::UnknownEdge(s.edge.clone()))?;
                let toward = *vid
                    .get(s.toward.as_str())
                    .ok_or_else(|| DrawingError::UnknownVertex(s.toward.clone()))?;
                rotation[i] = SegmentEnd { edge, toward };
            }
            crossings.push(Crossing { edges: [e1, e2], rotation });
        }
        let mut rotations = vec![Vec::new(); doc.vertices.len()];
        for (vname, edges) in &doc.rotations {
            let v = *vid
                .get(vname.as_str())
                .ok_or_else(|| DrawingError::UnknownVertex(vname.clone()))?;
            let mut rot = Vec::with_capacity(edges.len());
            for ename in edges {
                rot.push(
                    *eid.get(ename.as_str())
                        .ok_or_else(|| DrawingError::UnknownEdge(ename.clone()))?,
                );
            }
            rotations[v as usize] = rot;
        }
        OnePlaneDrawing::new(doc.vertices.clone(), edge_names, endpoints, crossings, rotations)
    }

    pub fn parse(text: &str) -> Result<OnePlaneDrawing, DrawingError> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| DrawingError::Malformed(e.to_string()))?;
        OnePlaneDrawing::from_document(&doc)
    }

    pub fn serialize(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serialization")
    }
}

/// On-disk drawing document (`.opg.json`).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Document {
    pub version: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<DocEdge>,
    pub crossings: Vec<DocCrossing>,
    pub rotations: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DocEdge {
    pub id: String,
    pub u: String,
    pub v: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DocCrossing {
    pub e1: String,
    pub e2: String,
    pub rotation: Vec<DocSegmentEnd>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DocSegmentEnd {
    pub edge: String,
    pub toward: String,
}

/// Convenience constructor used by generators and tests: vertices named
/// `v0..`, edges named `e0..` in the given order, rotations by index.
pub fn build_drawing(
    n: usize,
    edges: &[(u32, u32)],
    crossings: &[(u32, u32, [SegmentEnd; 4])],
    rotations: &[Vec<u32>],
) -> Result<OnePlaneDrawing, DrawingError> {
    let vertex_names = (0..n).map(|i| format!("v{i}")).collect();
    let edge_names = (0..edges.len()).map(|i| format!("e{i}")).collect();
    let crossing_list = crossings
        .iter()
        .map(|&(a, b, rotation)| Crossing { edges: [a, b], rotation })
        .collect();
    OnePlaneDrawing::new(
        vertex_names,
        edge_names,
        edges.to_vec(),
        crossing_list,
        rotations.iter().map(|r| r.clone()).collect(),
    )
}
