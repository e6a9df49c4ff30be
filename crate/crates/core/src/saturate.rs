//! Saturation: grow a drawing by witness-guided edge insertion until no
//! edge can be added. Terminates because the edge count strictly
//! increases and is bounded by 4N - 8.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::drawing::OnePlaneDrawing;
use crate::insert::{add_edge, witnesses};

/// The drawing with `n` vertices and no edges.
pub fn edgeless(n: usize) -> OnePlaneDrawing {
    crate::drawing::build_drawing(n, &[], &[], &vec![Vec::new(); n]).expect("edgeless drawing")
}

/// Deterministic saturation: always the first witness in canonical order.
pub fn saturate_canonical(d: &OnePlaneDrawing) -> OnePlaneDrawing {
    let mut cur = d.clone();
    loop {
        let ws = witnesses(&cur);
        match ws.first() {
            None => return cur,
            Some(w) => cur = add_edge(&cur, w).expect("witnesses are applicable"),
        }
    }
}

/// Seeded saturation: a pseudo-random witness at each step. The same seed
/// always produces the same drawing.
pub fn saturate(d: &OnePlaneDrawing, seed: u64) -> OnePlaneDrawing {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    loop {
        let ws = witnesses(&cur);
        if ws.is_empty() {
            return cur;
        }
        let w = &ws[rng.gen_range(0..ws.len())];
        cur = add_edge(&cur, w).expect("witnesses are applicable");
    }
}

/// A random maximal drawing on `n` vertices.
pub fn random_maximal(n: usize, seed: u64) -> OnePlaneDrawing {
    saturate(&edgeless(n), seed)
}

/// The standard corpus: `count` maximal drawings with vertex counts
/// cycling over `lo..=hi`, seeds starting at `base_seed`.
pub fn corpus(count: usize, lo: usize, hi: usize, base_seed: u64) -> Vec<OnePlaneDrawing> {
    (0..count)
        .map(|i| {
            let n = lo + (i % (hi - lo + 1));
            random_maximal(n, base_seed + i as u64)
        })
        .collect()
}
