use oneplane_core::canon::canonical_key;
use oneplane_core::drawing::{Crossing, OnePlaneDrawing, SegmentEnd};
use oneplane_core::insert::{add_edge, witnesses};
use oneplane_core::saturate::edgeless;
use std::collections::HashSet;

// Independent route: every labeled simple graph, every pairing of
// vertex-disjoint edges into crossings, every rotation system (all cyclic
// orders per vertex, both chiralities per crossing), validity-filtered.
fn direct_valid_states(n: usize) -> HashSet<oneplane_core::canon::CanonicalKey> {
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .collect();
    let mut out = HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(u32, u32)> = (0..pairs.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| pairs[i])
            .collect();
        let m = edges.len();
        // all matchings of vertex-disjoint edge pairs
        let mut matchings: Vec<Vec<(u32, u32)>> = vec![vec![]];
        fn extend(
            edges: &[(u32, u32)],
            from: usize,
            used: &mut Vec<bool>,
            cur: &mut Vec<(u32, u32)>,
            all: &mut Vec<Vec<(u32, u32)>>,
        ) {
            for i in from..edges.len() {
                if used[i] {
                    continue;
                }
                for j in (i + 1)..edges.len() {
                    if used[j] {
                        continue;
                    }
                    let (a, b) = edges[i];
                    let (c, d) = edges[j];
                    if a == c || a == d || b == c || b == d {
                        continue;
                    }
                    used[i] = true;
                    used[j] = true;
                    cur.push((i as u32, j as u32));
                    all.push(cur.clone());
                    extend(edges, i + 1, used, cur, all);
                    cur.pop();
                    used[i] = false;
                    used[j] = false;
                }
            }
        }
        let mut used = vec![false; m];
        let mut cur = vec![];
        extend(&edges, 0, &mut used, &mut cur, &mut matchings);

        for matching in &matchings {
            // rotation systems: per-vertex permutations of incident edges
            // with the first incident edge fixed (cyclic classes).
            let mut incident: Vec<Vec<u32>> = vec![vec![]; n];
            for (ei, &(u, v)) in edges.iter().enumerate() {
                incident[u as usize].push(ei as u32);
                incident[v as usize].push(ei as u32);
            }
            let mut rotation_options: Vec<Vec<Vec<u32>>> = Vec::new();
            for inc in &incident {
                if inc.len() <= 2 {
                    rotation_options.push(vec![inc.clone()]);
                    continue;
                }
                let mut opts = Vec::new();
                let first = inc[0];
                let rest: Vec<u32> = inc[1..].to_vec();
                permutations(&rest, &mut |perm| {
                    let mut rot = vec![first];
                    rot.extend_from_slice(perm);
                    opts.push(rot);
                });
                rotation_options.push(opts);
            }
            let chirality_count = 1usize << matching.len();
            let mut idx = vec![0usize; n];
            loop {
                let rotations: Vec<Vec<u32>> =
                    (0..n).map(|v| rotation_options[v][idx[v]].clone()).collect();
                for ch in 0..chirality_count {
                    let crossings: Vec<(u32, u32, [SegmentEnd; 4])> = matching
                        .iter()
                        .enumerate()
                        .map(|(k, &(i, j))| {
                            let (a, b) = edges[i as usize];
                            let (c, d) = edges[j as usize];
                            let (x, y) = if ch & (1 << k) != 0 { (c, d) } else { (d, c) };
                            (
                                i,
                                j,
                                [
                                    SegmentEnd { edge: i, toward: b },
                                    SegmentEnd { edge: j, toward: x },
                                    SegmentEnd { edge: i, toward: a },
                                    SegmentEnd { edge: j, toward: y },
                                ],
                            )
                        })
                        .collect();
                    let crossing_structs: Vec<Crossing> = crossings
                        .iter()
                        .map(|&(i, j, rotation)| Crossing { edges: [i, j], rotation })
                        .collect();
                    if let Ok(d) = OnePlaneDrawing::new(
                        (0..n).map(|i| format!("v{i}")).collect(),
                        (0..m).map(|i| format!("e{i}")).collect(),
                        edges.clone(),
                        crossing_structs,
                        rotations.clone(),
                    ) {
                        out.insert(canonical_key(&d));
                    }
                }
                // odometer
                let mut v = 0;
                loop {
                    if v == n {
                        break;
                    }
                    idx[v] += 1;
                    if idx[v] < rotation_options[v].len() {
                        break;
                    }
                    idx[v] = 0;
                    v += 1;
                }
                if v == n {
                    break;
                }
            }
        }
    }
    out
}

fn permutations(items: &[u32], f: &mut impl FnMut(&[u32])) {
    let mut v = items.to_vec();
    fn rec(v: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            rec(v, k + 1, f);
            v.swap(k, i);
        }
    }
    rec(&mut v, 0, f);
}

fn bfs_valid_states(n: usize) -> HashSet<oneplane_core::canon::CanonicalKey> {
    let start = edgeless(n);
    let mut seen = HashSet::new();
    seen.insert(canonical_key(&start));
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for d in &frontier {
            for w in &witnesses(d) {
                let child = add_edge(d, w).expect("sound witness");
                if seen.insert(canonical_key(&child)) {
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    seen
}

fn main() {
    for n in [4usize, 5] {
        let direct = direct_valid_states(n);
        let bfs = bfs_valid_states(n);
        let missing: Vec<_> = direct.difference(&bfs).collect();
        let extra: Vec<_> = bfs.difference(&direct).collect();
        println!(
            "n={}: direct={} bfs={} missing_from_bfs={} extra_in_bfs={}",
            n,
            direct.len(),
            bfs.len(),
            missing.len(),
            extra.len()
        );
    }
}
