//! Canonical forms for drawings, used for isomorphism tests and census
//! deduplication. Two drawings are considered the same when their
//! planarizations are isomorphic as combinatorial maps with dummy nodes
//! marked, allowing global reflection.
//!
//! The canonical key is the lexicographically least relabeling code over
//! all root darts and both orientations, per connected component;
//! component codes are sorted and concatenated.

use std::collections::BTreeMap;

use crate::drawing::{Document, OnePlaneDrawing};
use crate::planar::{Node, Planarization};

/// Opaque canonical key; equal keys mean isomorphic drawings (up to
/// relabeling and reflection).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u32>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.0.len() * 4);
        for x in &self.0 {
            out.extend_from_slice(&x.to_le_bytes());
        }
        out
    }
}

struct MapView {
    rot_next: Vec<u32>,
    rot_prev: Vec<u32>,
    /// 0 = real vertex, 1 = dummy.
    kind: Vec<u8>,
    dart_count: usize,
}

impl MapView {
    fn new(p: &Planarization) -> MapView {
        let dart_count = p.arcs.len() * 2;
        let mut rot_prev = vec![0u32; dart_count];
        for d in 0..dart_count {
            rot_prev[p.rot_next[d] as usize] = d as u32;
        }
        let kind = (0..dart_count)
            .map(|d| match p.nodes[p.origin[d] as usize] {
                Node::Real(_) => 0u8,
                Node::Dummy(_) => 1u8,
            })
            .collect();
        MapView { rot_next: p.rot_next.clone(), rot_prev, kind, dart_count }
    }

    fn step(&self, d: u32, rev: bool) -> u32 {
        if rev {
            self.rot_prev[d as usize]
        } else {
            self.rot_next[d as usize]
        }
    }
}

/// BFS relabeling code from a root dart. Emits, per dart in label order:
/// (label of rotation successor, label of twin, origin kind). Streams with
/// early abort against `best`.
fn rooted_code(
    view: &MapView,
    comp_darts: &[u32],
    root: u32,
    rev: bool,
    best: Option<&[u32]>,
    labels: &mut Vec<u32>,
    order: &mut Vec<u32>,
) -> Option<Vec<u32>> {
    labels.clear();
    labels.resize(view.dart_count, u32::MAX);
    order.clear();
    labels[root as usize] = 0;
    order.push(root);
    let mut out: Vec<u32> = Vec::with_capacity(comp_darts.len() * 3);
    let mut next_label = 1u32;
    let mut i = 0usize;
    let mut undecided = true;
    while i < order.len() {
        let d = order[i];
        i += 1;
        let s = view.step(d, rev);
        if labels[s as usize] == u32::MAX {
            labels[s as usize] = next_label;
            next_label += 1;
            order.push(s);
        }
        let t = d ^ 1;
        if labels[t as usize] == u32::MAX {
            labels[t as usize] = next_label;
            next_label += 1;
            order.push(t);
        }
        out.push(labels[s as usize]);
        out.push(labels[t as usize]);
        out.push(view.kind[d as usize] as u32);
        if undecided {
            if let Some(b) = best {
                let start = (i - 1) * 3;
                let chunk = &out[start..];
                match chunk.cmp(&b[start..start + 3]) {
                    std::cmp::Ordering::Greater => return None,
                    std::cmp::Ordering::Less => undecided = false,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    Some(out)
}

fn component_code(view: &MapView, comp_darts: &[u32]) -> (Vec<u32>, u32, bool) {
    let mut best: Option<Vec<u32>> = None;
    let mut best_root = comp_darts[0];
    let mut best_rev = false;
    let mut labels = Vec::new();
    let mut order = Vec::new();
    for &root in comp_darts {
        for rev in [false, true] {
            if let Some(code) =
                rooted_code(view, comp_darts, root, rev, best.as_deref(), &mut labels, &mut order)
            {
                let better = match &best {
                    None => true,
                    Some(b) => code < *b,
                };
                if better {
                    best = Some(code);
                    best_root = root;
                    best_rev = rev;
                }
            }
        }
    }
    (best.expect("nonempty component"), best_root, best_rev)
}

fn dart_components(p: &Planarization) -> Vec<Vec<u32>> {
    let dart_count = p.arcs.len() * 2;
    let mut comp = vec![usize::MAX; dart_count];
    let mut parts: Vec<Vec<u32>> = Vec::new();
    for start in 0..dart_count {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut stack = vec![start as u32];
        comp[start] = id;
        let mut members = vec![start as u32];
        while let Some(d) = stack.pop() {
            for nb in [d ^ 1, p.rot_next[d as usize]] {
                if comp[nb as usize] == usize::MAX {
                    comp[nb as usize] = id;
                    stack.push(nb);
                    members.push(nb);
                }
            }
        }
        parts.push(members);
    }
    parts
}

/// Canonical key of a drawing.
pub fn canonical_key(d: &OnePlaneDrawing) -> CanonicalKey {
    let p = Planarization::build(d).expect("valid drawing");
    let view = MapView::new(&p);
    let mut codes: Vec<Vec<u32>> = dart_components(&p)
        .iter()
        .map(|comp| component_code(&view, comp).0)
        .collect();
    codes.sort();
    let mut out = Vec::new();
    out.push(p.isolated as u32);
    for c in codes {
        out.push(u32::MAX); // component separator
        out.extend(c);
    }
    CanonicalKey(out)
}

/// Canonical document: a relabeled, order-normalized document that is
/// byte-identical for isomorphic drawings.
pub fn canonical_document(d: &OnePlaneDrawing) -> Document {
    let p = Planarization::build(d).expect("valid drawing");
    let view = MapView::new(&p);
    let mut comps = dart_components(&p);
    let mut coded: Vec<(Vec<u32>, u32, bool)> =
        comps.drain(..).map(|comp| component_code(&view, &comp)).collect();
    coded.sort_by(|a, b| a.0.cmp(&b.0));

    // Global dart order: winning traversals of components in code order.
    let dart_count = p.arcs.len() * 2;
    let mut global = vec![u32::MAX; dart_count];
    let mut order: Vec<u32> = Vec::new();
    for (_, root, rev) in &coded {
        let mut i = order.len();
        global[*root as usize] = order.len() as u32;
        order.push(*root);
        while i < order.len() {
            let dd = order[i];
            i += 1;
            for nb in [view.step(dd, *rev), dd ^ 1] {
                if global[nb as usize] == u32::MAX {
                    global[nb as usize] = order.len() as u32;
                    order.push(nb);
                }
            }
        }
    }
    let rev_of_dart = {
        // Reflection flag per component, indexed by dart.
        let mut flags = vec![false; dart_count];
        for (_, root, rev) in &coded {
            if !*rev {
                continue;
            }
            let mut stack = vec![*root];
            let mut seen = vec![false; dart_count];
            seen[*root as usize] = true;
            while let Some(dd) = stack.pop() {
                flags[dd as usize] = true;
                for nb in [p.rot_next[dd as usize], dd ^ 1] {
                    if !seen[nb as usize] {
                        seen[nb as usize] = true;
                        stack.push(nb);
                    }
                }
            }
        }
        flags
    };

    // Vertex order: first-visit order of real origins, then isolated.
    let mut vname: Vec<Option<u32>> = vec![None; d.vertex_count()];
    let mut vorder: Vec<u32> = Vec::new();
    for &dd in &order {
        if let Node::Real(v) = p.nodes[p.origin[dd as usize] as usize] {
            if vname[v as usize].is_none() {
                vname[v as usize] = Some(vorder.len() as u32);
                vorder.push(v);
            }
        }
    }
    let mut isolated: Vec<u32> = d
        .vertices()
        .filter(|&v| d.rotation(v).is_empty())
        .collect();
    isolated.sort_unstable();
    for v in isolated {
        vname[v as usize] = Some(vorder.len() as u32);
        vorder.push(v);
    }

    // Edge order: by least global dart label over the edge's arcs.
    let mut ekey: Vec<(u32, u32)> = d
        .edges()
        .map(|e| {
            let mut m = u32::MAX;
            match p.whole_arc[e as usize] {
                Some(a) => {
                    m = m.min(global[(a * 2) as usize]).min(global[(a * 2 + 1) as usize]);
                }
                None => {
                    let (a1, a2) = p.half_arcs[e as usize].unwrap();
                    for a in [a1, a2] {
                        m = m.min(global[(a * 2) as usize]).min(global[(a * 2 + 1) as usize]);
                    }
                }
            }
            (m, e)
        })
        .collect();
    ekey.sort_unstable();
    let mut ename: Vec<u32> = vec![0; d.edge_count()];
    for (i, &(_, e)) in ekey.iter().enumerate() {
        ename[e as usize] = i as u32;
    }

    let width = vorder.len().saturating_sub(1).to_string().len().max(1);
    let ewidth = ekey.len().saturating_sub(1).to_string().len().max(1);
    let vlabel = |v: u32| format!("v{:0width$}", vname[v as usize].unwrap(), width = width);
    let elabel = |e: u32| format!("e{:0ewidth$}", ename[e as usize], ewidth = ewidth);

    let vertices: Vec<String> = (0..vorder.len()).map(|i| format!("v{i:0width$}")).collect();
    let edges: Vec<crate::drawing::DocEdge> = ekey
        .iter()
        .map(|&(_, e)| {
            let (u, v) = d.endpoints_of(e);
            let (mut nu, mut nv) = (vlabel(u), vlabel(v));
            if nu > nv {
                std::mem::swap(&mut nu, &mut nv);
            }
            crate::drawing::DocEdge { id: elabel(e), u: nu, v: nv }
        })
        .collect();

    // Crossings ordered by least involved edge label; rotation re-anchored
    // at the least segment end and oriented per the reflection flag.
    let mut crossings: Vec<crate::drawing::DocCrossing> = d
        .crossings()
        .iter()
        .enumerate()
        .map(|(ci, cr)| {
            let (a1, _) = p.half_arcs[cr.edges[0] as usize].unwrap();
            let any_dart = a1 * 2 + 1; // dart at the dummy
            let rev = rev_of_dart[any_dart as usize];
            let _ = ci;
            let mut rot: Vec<crate::drawing::DocSegmentEnd> = cr
                .rotation
                .iter()
                .map(|s| crate::drawing::DocSegmentEnd {
                    edge: elabel(s.edge),
                    toward: vlabel(s.toward),
                })
                .collect();
            if rev {
                rot.reverse();
            }
            // Re-anchor at the lexicographically least entry.
            let k = (0..4)
                .min_by_key(|&i| (rot[i].edge.clone(), rot[i].toward.clone()))
                .unwrap();
            rot.rotate_left(k);
            let mut ids = [elabel(cr.edges[0]), elabel(cr.edges[1])];
            ids.sort();
            let [i1, i2] = ids;
            crate::drawing::DocCrossing { e1: i1, e2: i2, rotation: rot }
        })
        .collect();
    crossings.sort_by(|a, b| (&a.e1, &a.e2).cmp(&(&b.e1, &b.e2)));

    // Rotations: per vertex, oriented by reflection flag, anchored at the
    // least edge label.
    let mut rotations: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for v in d.vertices() {
        let rot = d.rotation(v);
        let mut names: Vec<String> = rot.iter().map(|&e| elabel(e)).collect();
        if !names.is_empty() {
            let any_dart = p.vertex_darts[v as usize][0];
            if rev_of_dart[any_dart as usize] {
                names.reverse();
            }
            let k = (0..names.len()).min_by_key(|&i| names[i].clone()).unwrap();
            names.rotate_left(k);
        }
        rotations.insert(vlabel(v as u32), names);
    }

    Document { version: 1, vertices, edges, crossings, rotations }
}

/// Canonical textual form, stable across isomorphic inputs.
pub fn canonical_text(d: &OnePlaneDrawing) -> String {
    serde_json::to_string_pretty(&canonical_document(d)).expect("canonical document")
}
