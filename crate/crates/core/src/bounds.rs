//! Exact-rational edge-density bounds.
//!
//! The fixed minimization problem: minimize
//!     F(p, e, c, h, n) = p + e + c - (20/9) n - (2/9) h
//! subject to c - e >= h, 9p + 10e + 7c >= 20n - 30, all variables >= 0.
//! Two independent routes compute the minimum: a shift-and-reduce replay
//! (move weight from e into p and h, then saturate h, then sit on the
//! inequality boundary) and a generic vertex/ray enumeration of the
//! polyhedron. No floating point anywhere in this module.

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::analysis::is_maximal;
use crate::drawing::OnePlaneDrawing;

pub type Rat = Rational64;

fn rat(n: i64, d: i64) -> Rat {
    Rational64::new(n, d)
}

/// Reference slopes from earlier work, for comparison tables.
#[derive(Debug, Clone, Serialize)]
pub struct ReferenceBounds {
    pub lower_planar: Rat,
    pub upper_planar: Rat,
    pub lower_plane: Rat,
    pub upper_plane: Rat,
    pub new_lower: Rat,
    pub max_slope: Rat,
    pub max_offset: Rat,
}

impl Default for ReferenceBounds {
    fn default() -> Self {
        ReferenceBounds {
            lower_planar: rat(28, 13),
            upper_planar: rat(45, 17),
            lower_plane: rat(21, 10),
            upper_plane: rat(7, 3),
            new_lower: rat(20, 9),
            max_slope: rat(4, 1),
            max_offset: rat(-8, 1),
        }
    }
}

impl ReferenceBounds {
    /// The slopes are strictly ordered.
    pub fn ordered(&self) -> bool {
        self.lower_plane < self.lower_planar
            && self.lower_planar < self.new_lower
            && self.new_lower < self.upper_plane
            && self.upper_plane < self.upper_planar
            && self.upper_planar < self.max_slope
    }
}

/// Objective F at a point (p, e, c, h, n).
pub fn objective(x: &[Rat; 5]) -> Rat {
    x[0] + x[1] + x[2] - rat(20, 9) * x[4] - rat(2, 9) * x[3]
}

/// Feasibility of the two structural constraints plus nonnegativity.
pub fn feasible(x: &[Rat; 5]) -> bool {
    let [p, e, c, h, n] = *x;
    x.iter().all(|v| !v.is_negative())
        && c - e >= h
        && rat(9, 1) * p + rat(10, 1) * e + rat(7, 1) * c >= rat(20, 1) * n - rat(30, 1)
}

/// One application of the weight-shift: e' = e - (9/10)t, p' = p + t,
/// h' = h + (9/10)t. Preserves both constraints and lowers F by t/10.
pub fn shift_point(x: &[Rat; 5], t: Rat) -> [Rat; 5] {
    let [p, e, c, h, n] = *x;
    [p + t, e - rat(9, 10) * t, c, h + rat(9, 10) * t, n]
}

#[derive(Debug, Clone, Serialize)]
pub struct ShiftCheck {
    pub point: [Rat; 5],
    pub epsilon: Rat,
    pub constraints_preserved: bool,
    pub objective_drop: Rat,
}

/// Exact verification of the shift on one feasible point.
pub fn check_shift(x: &[Rat; 5], t: Rat) -> ShiftCheck {
    let y = shift_point(x, t);
    let [p, e, c, h, _] = *x;
    let [p2, e2, c2, h2, _] = y;
    let g1_same = (c - e - h) == (c2 - e2 - h2);
    let g2_same = rat(9, 1) * p + rat(10, 1) * e + rat(7, 1) * c
        == rat(9, 1) * p2 + rat(10, 1) * e2 + rat(7, 1) * c2;
    ShiftCheck {
        point: *x,
        epsilon: t,
        constraints_preserved: g1_same && g2_same && feasible(&y),
        objective_drop: objective(x) - objective(&y),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimizeResult {
    pub minimum: Rat,
    pub replay_route: Rat,
    pub vertex_route: Rat,
    pub minimizer: [Rat; 5],
    pub vertices_inspected: usize,
    pub rays_inspected: usize,
    pub shift_checks: Vec<ShiftCheck>,
}

/// Replay route: after shifting all weight out of e, raising h to c, the
/// objective becomes p + (7/9)c - (20/9)n over 9p + 7c >= 20n - 30, whose
/// value on the boundary is the constant -10/3 and larger above it.
fn minimize_replay() -> (Rat, Vec<ShiftCheck>) {
    let mut checks = Vec::new();
    // Sample feasible points with e > 0 and the full shift that zeroes e.
    let samples: [[Rat; 5]; 3] = [
        [rat(0, 1), rat(9, 1), rat(12, 1), rat(1, 1), rat(4, 1)],
        [rat(4, 1), rat(1, 1), rat(2, 1), rat(0, 1), rat(4, 1)],
        [rat(10, 1), rat(3, 1), rat(5, 1), rat(2, 1), rat(6, 1)],
    ];
    for x in &samples {
        assert!(feasible(x), "sample must be feasible");
        let full = x[1] * rat(10, 9);
        for t in [rat(1, 2) * full, full] {
            let check = check_shift(x, t);
            assert!(check.constraints_preserved, "shift must preserve feasibility");
            assert_eq!(check.objective_drop, t * rat(1, 10), "shift drop is t/10");
            checks.push(check);
        }
    }
    // With e = 0 and h = c the reduced objective on the boundary
    // 9p + 7c = 20n - 30 is (20n - 30)/9 - (20/9)n = -30/9.
    let boundary_value = rat(-30, 9);
    assert_eq!(boundary_value, rat(-10, 3));
    (boundary_value, checks)
}

/// Gaussian elimination over the rationals: solves a (rows x 5) system
/// with the given right-hand side. Returns None if the system is not
/// uniquely solvable.
fn solve5(rows: &[[Rat; 5]], rhs: &[Rat]) -> Option<[Rat; 5]> {
    let m = rows.len();
    if m != 5 {
        return None;
    }
    let mut a: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut row: Vec<Rat> = r.to_vec();
            row.push(b);
            row
        })
        .collect();
    for col in 0..5 {
        let pivot = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let pv = a[col][col];
        for k in col..6 {
            a[col][k] = a[col][k] / pv;
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for k in col..6 {
                    a[r][k] = a[r][k] - f * a[col][k];
                }
            }
        }
    }
    let mut out = [Rat::zero(); 5];
    for i in 0..5 {
        out[i] = a[i][5];
    }
    Some(out)
}

/// Nullspace direction of a (4 x 5) rational system, if one-dimensional.
fn nullspace_dir(rows: &[[Rat; 5]]) -> Option<[Rat; 5]> {
    let mut a: Vec<Vec<Rat>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..5 {
        if let Some(r) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) {
            a.swap(rank, r);
            let pv = a[rank][col];
            for k in 0..5 {
                a[rank][k] = a[rank][k] / pv;
            }
            for rr in 0..a.len() {
                if rr != rank && !a[rr][col].is_zero() {
                    let f = a[rr][col];
                    for k in 0..5 {
                        a[rr][k] = a[rr][k] - f * a[rank][k];
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
    }
    if rank != 4 {
        return None;
    }
    let free = (0..5).find(|c| !pivots.contains(c))?;
    let mut dir = [Rat::zero(); 5];
    dir[free] = Rat::from_integer(1);
    for (row, &pc) in pivots.iter().enumerate() {
        dir[pc] = -a[row][free];
    }
    Some(dir)
}

/// The seven constraint rows as (normal, offset) with the meaning
/// normal . x + offset >= 0.
fn constraint_rows() -> Vec<([Rat; 5], Rat)> {
    let z = Rat::zero;
    let one = || Rat::from_integer(1);
    let mut rows = vec![
        // c - e - h >= 0
        ([z(), -one(), one(), -one(), z()], z()),
        // 9p + 10e + 7c - 20n + 30 >= 0
        (
            [
                Rat::from_integer(9),
                Rat::from_integer(10),
                Rat::from_integer(7),
                z(),
                Rat::from_integer(-20),
            ],
            Rat::from_integer(30),
        ),
    ];
    for i in 0..5 {
        let mut r = [z(); 5];
        r[i] = one();
        rows.push((r, z()));
    }
    rows
}

/// Vertex/ray enumeration route.
fn minimize_vertices() -> (Rat, [Rat; 5], usize, usize) {
    let rows = constraint_rows();
    let idx: Vec<usize> = (0..rows.len()).collect();
    let mut best: Option<(Rat, [Rat; 5])> = None;
    let mut vertices = 0usize;

    // All 5-subsets: candidate vertices.
    for a in 0..idx.len() {
        for b in (a + 1)..idx.len() {
            for c in (b + 1)..idx.len() {
                for d in (c + 1)..idx.len() {
                    for e in (d + 1)..idx.len() {
                        let pick = [a, b, c, d, e];
                        let sys: Vec<[Rat; 5]> = pick.iter().map(|&i| rows[i].0).collect();
                        let rhs: Vec<Rat> = pick.iter().map(|&i| -rows[i].1).collect();
                        if let Some(x) = solve5(&sys, &rhs) {
                            if feasible(&x) {
                                vertices += 1;
                                let f = objective(&x);
                                if best.as_ref().map_or(true, |(bf, _)| f < *bf) {
                                    best = Some((f, x));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // All 4-subsets: candidate extreme rays of the recession cone. The
    // objective must be nonnegative along every one, otherwise F would be
    // unbounded below.
    let mut rays = 0usize;
    for a in 0..idx.len() {
        for b in (a + 1)..idx.len() {
            for c in (b + 1)..idx.len() {
                for d in (c + 1)..idx.len() {
                    let sys: Vec<[Rat; 5]> = [a, b, c, d].iter().map(|&i| rows[i].0).collect();
                    if let Some(dir) = nullspace_dir(&sys) {
                        for cand in [dir, dir.map(|v| -v)] {
                            let cone_ok = cand.iter().all(|v| !v.is_negative())
                                && {
                                    let g1 = cand[2] - cand[1] - cand[3];
                                    let g2 = Rat::from_integer(9) * cand[0]
                                        + Rat::from_integer(10) * cand[1]
                                        + Rat::from_integer(7) * cand[2]
                                        - Rat::from_integer(20) * cand[4];
                                    !g1.is_negative() && !g2.is_negative()
                                };
                            if cone_ok && cand.iter().any(|v| !v.is_zero()) {
                                rays += 1;
                                assert!(
                                    !objective(&cand).is_negative(),
                                    "objective must be bounded below along every recession ray"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    let (f, x) = best.expect("polyhedron has vertices");
    (f, x, vertices, rays)
}

/// Computes the exact minimum of F by both routes and cross-checks them.
pub fn minimize_f() -> MinimizeResult {
    let (replay, shift_checks) = minimize_replay();
    let (vertex, minimizer, vertices_inspected, rays_inspected) = minimize_vertices();
    assert_eq!(replay, vertex, "the two routes must agree");
    MinimizeResult {
        minimum: vertex,
        replay_route: replay,
        vertex_route: vertex,
        minimizer,
        vertices_inspected,
        rays_inspected,
        shift_checks,
    }
}

/// The drawing-level lower bound 20N/9 - 10/3, defined for N >= 4.
pub fn density_lower_bound(n: u64) -> Result<Rat, String> {
    if n < 4 {
        return Err(format!("bound requires N >= 4, got {n}"));
    }
    Ok(rat(20, 9) * Rat::from_integer(n as i64) - rat(10, 3))
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundAudit {
    pub big_n: usize,
    pub big_e: usize,
    pub bound: Rat,
    pub slack: Rat,
    pub pass: bool,
    /// Edge count per vertex against the reference slopes.
    pub density: Rat,
    pub reference: ReferenceBounds,
}

/// Exact audit of one maximal drawing against the density bound.
pub fn audit_drawing_bound(d: &OnePlaneDrawing) -> Result<BoundAudit, String> {
    if d.vertex_count() < 4 {
        return Err(format!("audit requires N >= 4, got {}", d.vertex_count()));
    }
    if is_maximal(d).is_some() {
        return Err("audit requires a maximal drawing".into());
    }
    let big_n = d.vertex_count();
    let big_e = d.edge_count();
    let bound = density_lower_bound(big_n as u64)?;
    let slack = Rat::from_integer(big_e as i64) - bound;
    Ok(BoundAudit {
        big_n,
        big_e,
        bound,
        slack,
        pass: !slack.is_negative(),
        density: rat(big_e as i64, big_n as i64),
        reference: ReferenceBounds::default(),
    })
}
