//! Straight-line SVG rendering of the planarization. The outer face is
//! pinned to a regular polygon and interior nodes settle at the average
//! of their neighbors; crossings are drawn as plain intersections with no
//! dummy marker, hermits get a highlighted class.

use std::fmt::Write as _;

use crate::analysis::hermits;
use crate::drawing::OnePlaneDrawing;
use crate::planar::{Node, Planarization};

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;

/// Renders a drawing to SVG text. Deterministic for a given input.
pub fn render_svg(d: &OnePlaneDrawing) -> String {
    let p = Planarization::build(d).expect("valid drawing");
    let n = p.nodes.len();
    let mut fallback = false;
    let pos = if n == 0 {
        Vec::new()
    } else {
        match tutte_positions(&p) {
            Some(pos) => pos,
            None => {
                fallback = true;
                layered_positions(&p)
            }
        }
    };
    // Degenerate layouts (coincident nodes) fall back too.
    let degenerate = {
        let mut bad = pos.is_empty() && n > 0;
        'outer: for i in 0..pos.len() {
            for j in (i + 1)..pos.len() {
                let dx = pos[i].0 - pos[j].0;
                let dy = pos[i].1 - pos[j].1;
                if (dx * dx + dy * dy).sqrt() < 1e-6 {
                    bad = true;
                    break 'outer;
                }
            }
        }
        bad
    };
    let pos = if degenerate && !fallback {
        fallback = true;
        layered_positions(&p)
    } else {
        pos
    };

    let hermit_set = hermits(d);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        svg,
        "<!-- layout:{} nodes:{} arcs:{} faces:{} -->",
        if fallback { "fallback" } else { "tutte" },
        p.nodes.len(),
        p.arcs.len(),
        p.faces.len()
    );
    for a in &p.arcs {
        let (x1, y1) = pos[a.from as usize];
        let (x2, y2) = pos[a.to as usize];
        let _ = writeln!(
            svg,
            r#"<line class="arc" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1.5"/>"#
        );
    }
    for (i, node) in p.nodes.iter().enumerate() {
        if let Node::Real(v) = node {
            let (x, y) = pos[i];
            let class = if hermit_set.contains(v) { "vertex hermit" } else { "vertex" };
            let fill = if hermit_set.contains(v) { "tomato" } else { "steelblue" };
            let _ = writeln!(
                svg,
                r#"<circle class="{class}" cx="{x:.2}" cy="{y:.2}" r="6" fill="{fill}"/>"#
            );
            let _ = writeln!(
                svg,
                r#"<text x="{:.2}" y="{:.2}" font-size="12">{}</text>"#,
                x + 8.0,
                y - 8.0,
                d.vertex_name(*v)
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn tutte_positions(p: &Planarization) -> Option<Vec<(f64, f64)>> {
    let n = p.nodes.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if p.faces.is_empty() {
        return None;
    }
    // Outer face: longest boundary walk, lowest id on ties.
    let outer = (0..p.faces.len())
        .max_by_key(|&f| (p.faces[f].walk.len(), usize::MAX - f))
        .unwrap();
    let mut ring: Vec<u32> = Vec::new();
    for &dart in &p.faces[outer].walk {
        let o = p.origin[dart as usize];
        if !ring.contains(&o) {
            ring.push(o);
        }
    }
    if ring.len() < 3 {
        return None;
    }
    let center = SIZE / 2.0;
    let radius = center - MARGIN;
    let mut fixed = vec![None; n];
    for (i, &v) in ring.iter().enumerate() {
        let ang = std::f64::consts::TAU * i as f64 / ring.len() as f64;
        fixed[v as usize] = Some((center + radius * ang.cos(), center + radius * ang.sin()));
    }
    // Neighbor lists.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in &p.arcs {
        adj[a.from as usize].push(a.to as usize);
        adj[a.to as usize].push(a.from as usize);
    }
    let free: Vec<usize> = (0..n).filter(|&i| fixed[i].is_none()).collect();
    if free.is_empty() {
        return Some(fixed.into_iter().map(|f| f.unwrap()).collect());
    }
    let index: Vec<usize> = {
        let mut idx = vec![usize::MAX; n];
        for (k, &i) in free.iter().enumerate() {
            idx[i] = k;
        }
        idx
    };
    let m = free.len();
    // Solve L x = b for both coordinates by Gaussian elimination.
    let mut a = vec![vec![0f64; m + 2]; m];
    for (k, &i) in free.iter().enumerate() {
        let deg = adj[i].len() as f64;
        if deg == 0.0 {
            return None;
        }
        a[k][k] = deg;
        for &nb in &adj[i] {
            match fixed[nb] {
                Some((x, y)) => {
                    a[k][m] += x;
                    a[k][m + 1] += y;
                }
                None => {
                    a[k][index[nb]] -= 1.0;
                }
            }
        }
    }
    for col in 0..m {
        let pivot = (col..m).max_by(|&r1, &r2| {
            a[r1][col].abs().partial_cmp(&a[r2][col].abs()).unwrap()
        })?;
        if a[pivot][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, pivot);
        let pv = a[col][col];
        for k in col..m + 2 {
            a[col][k] /= pv;
        }
        for r in 0..m {
            if r != col && a[r][col].abs() > 1e-15 {
                let f = a[r][col];
                for k in col..m + 2 {
                    a[r][k] -= f * a[col][k];
                }
            }
        }
    }
    let mut out = vec![(0f64, 0f64); n];
    for i in 0..n {
        match fixed[i] {
            Some(xy) => out[i] = xy,
            None => out[i] = (a[index[i]][m], a[index[i]][m + 1]),
        }
    }
    Some(out)
}

fn layered_positions(p: &Planarization) -> Vec<(f64, f64)> {
    let n = p.nodes.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in &p.arcs {
        adj[a.from as usize].push(a.to as usize);
        adj[a.to as usize].push(a.from as usize);
    }
    let mut layer = vec![usize::MAX; n];
    let mut layers: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if layer[start] != usize::MAX {
            continue;
        }
        let mut queue = std::collections::VecDeque::new();
        layer[start] = 0;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            let l = layer[x];
            if layers.len() <= l {
                layers.resize(l + 1, Vec::new());
            }
            layers[l].push(x);
            for &nb in &adj[x] {
                if layer[nb] == usize::MAX {
                    layer[nb] = l + 1;
                    queue.push_back(nb);
                }
            }
        }
    }
    let rows = layers.len().max(1) as f64;
    let mut out = vec![(0f64, 0f64); n];
    for (li, nodes) in layers.iter().enumerate() {
        let cols = nodes.len().max(1) as f64;
        for (ci, &x) in nodes.iter().enumerate() {
            out[x] = (
                MARGIN + (SIZE - 2.0 * MARGIN) * (ci as f64 + 0.5) / cols,
                MARGIN + (SIZE - 2.0 * MARGIN) * (li as f64 + 0.5) / rows,
            );
        }
    }
    out
}
