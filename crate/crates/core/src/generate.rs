//! Fixture constructors: the two K4 drawings, a hermit gadget, and four
//! maximal drawings realizing the possible flanking patterns of an
//! uncrossed edge that belongs to no K4.
//!
//! Every constructor validates its output and re-checks the structural
//! property it promises; a failure is surfaced, never patched over.

use crate::analysis::{classify_edges, find_hermits, is_maximal, EdgeClass};
use crate::drawing::{build_drawing, OnePlaneDrawing, SegmentEnd, VertexId};
use crate::error::AnalysisError;
use crate::insert::first_witness;
use crate::saturate::saturate_canonical;

fn seg(edge: u32, toward: u32) -> SegmentEnd {
    SegmentEnd { edge, toward }
}

/// K4 on four vertices, either crossing-free or with its single crossing.
pub fn gen_k4(crossed: bool) -> OnePlaneDrawing {
    if !crossed {
        // Triangle 0-1-2 with 3 inside.
        build_drawing(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            &[],
            &[
                vec![0, 2, 1],
                vec![3, 4, 0],
                vec![1, 5, 3],
                vec![5, 2, 4],
            ],
        )
        .expect("plane K4")
    } else {
        // 4-cycle 0-1-2-3 with crossing diagonals 0-2 and 1-3.
        build_drawing(
            4,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)],
            &[(4, 5, [seg(4, 2), seg(5, 3), seg(4, 0), seg(5, 1)])],
            &[
                vec![0, 4, 3],
                vec![1, 5, 0],
                vec![2, 4, 1],
                vec![2, 3, 5],
            ],
        )
        .expect("crossed K4")
    }
}

/// Core of the hermit gadget: a degree-2 vertex flanked above by a
/// crossing pair, with its neighbor edge below and a second crossing pair
/// under that. Saturation completes the outside without ever reaching the
/// hermit.
fn hermit_core() -> OnePlaneDrawing {
    // u=0, v=1, h=2, x1=3, y1=4, x2=5, y2=6
    // e0=hu e1=hv e2=uv e3=ux1 e4=uy1 e5=vx1 e6=vy1 e7=x1y1
    // e8=ux2 e9=uy2 e10=vx2 e11=vy2 e12=x2y2
    build_drawing(
        7,
        &[
            (2, 0),
            (2, 1),
            (0, 1),
            (0, 3),
            (0, 4),
            (1, 3),
            (1, 4),
            (3, 4),
            (0, 5),
            (0, 6),
            (1, 5),
            (1, 6),
            (5, 6),
        ],
        &[
            (3, 6, [seg(6, 1), seg(3, 3), seg(6, 4), seg(3, 0)]),
            (8, 11, [seg(8, 5), seg(11, 1), seg(8, 0), seg(11, 6)]),
        ],
        &[
            vec![2, 0, 3, 4, 9, 8],
            vec![5, 6, 1, 2, 11, 10],
            vec![0, 1],
            vec![7, 3, 5],
            vec![7, 4, 6],
            vec![10, 8, 12],
            vec![12, 11, 9],
        ],
    )
    .expect("hermit core")
}

/// A maximal drawing with exactly one hermit, produced by saturating the
/// hermit core deterministically and verifying the hermit survives with
/// its full surrounding structure.
pub fn gen_hermit_gadget() -> Result<OnePlaneDrawing, AnalysisError> {
    let d = saturate_canonical(&hermit_core());
    if is_maximal(&d).is_some() {
        return Err(AnalysisError::SkeletonDegenerate(
            "hermit gadget saturation did not reach a maximal drawing".into(),
        ));
    }
    let (hs, report) = find_hermits(&d);
    if hs.len() != 1 || d.vertex_name(hs[0]) != "v2" {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "hermit gadget has hermits {:?}, expected exactly v2",
            hs.iter().map(|&h| d.vertex_name(h)).collect::<Vec<_>>()
        )));
    }
    if !report.passed() {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "hermit structure checks failed: {:?}",
            report.witnesses
        )));
    }
    Ok(d)
}

/// Flanking pattern of the uncrossed no-K4 edge ab produced by
/// `gen_exceptional`: where the edges af and bf sit relative to the two
/// faces flanking ab.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionalTemplate {
    /// af and bf both bound the same flanking face (a triangle).
    BothSameFace = 1,
    /// af bounds one flanking face, bf the other.
    OppositeFaces = 2,
    /// af bounds a flanking face; bf is drawn elsewhere (crossed).
    OneAside = 3,
    /// Neither af nor bf touches the flanking faces; both are crossed.
    BothAside = 4,
}

impl ExceptionalTemplate {
    pub fn from_index(i: u8) -> Option<ExceptionalTemplate> {
        match i {
            1 => Some(ExceptionalTemplate::BothSameFace),
            2 => Some(ExceptionalTemplate::OppositeFaces),
            3 => Some(ExceptionalTemplate::OneAside),
            4 => Some(ExceptionalTemplate::BothAside),
            _ => None,
        }
    }
}

fn template_both_aside() -> OnePlaneDrawing {
    // a=0 b=1 f=2 s1=3 t1=4 s3=5 t3=6 s2=7 t2=8 s4=9 t4=10
    let edges: &[(u32, u32)] = &[
        (0, 1),   // e0 ab
        (0, 2),   // e1 af  x t1t3
        (1, 2),   // e2 bf  x t2t4
        (0, 3),   // e3 as1 x ft1
        (2, 4),   // e4 ft1
        (2, 3),   // e5 fs1
        (3, 4),   // e6 s1t1
        (0, 4),   // e7 at1
        (0, 5),   // e8 as3 x ft3
        (2, 6),   // e9 ft3
        (2, 5),   // e10 fs3
        (5, 6),   // e11 s3t3
        (0, 6),   // e12 at3
        (4, 6),   // e13 t1t3
        (1, 7),   // e14 bs2 x ft2
        (2, 8),   // e15 ft2
        (2, 7),   // e16 fs2
        (7, 8),   // e17 s2t2
        (1, 8),   // e18 bt2
        (1, 9),   // e19 bs4 x ft4
        (2, 10),  // e20 ft4
        (2, 9),   // e21 fs4
        (9, 10),  // e22 s4t4
        (1, 10),  // e23 bt4
        (8, 10),  // e24 t2t4
    ];
    let crossings = &[
        (3u32, 4u32, [seg(4, 2), seg(3, 0), seg(4, 4), seg(3, 3)]),
        (8, 9, [seg(8, 0), seg(9, 2), seg(8, 5), seg(9, 6)]),
        (1, 13, [seg(13, 4), seg(1, 0), seg(13, 6), seg(1, 2)]),
        (14, 15, [seg(14, 1), seg(15, 2), seg(14, 7), seg(15, 8)]),
        (19, 20, [seg(20, 2), seg(19, 1), seg(20, 10), seg(19, 9)]),
        (2, 24, [seg(2, 1), seg(24, 8), seg(2, 2), seg(24, 10)]),
    ];
    let rotations: &[Vec<u32>] = &[
        vec![0, 8, 12, 1, 7, 3],
        vec![0, 14, 18, 2, 23, 19],
        vec![4, 5, 1, 10, 9, 20, 21, 2, 16, 15],
        vec![5, 3, 6],
        vec![6, 4, 7, 13],
        vec![8, 10, 11],
        vec![13, 12, 9, 11],
        vec![14, 16, 17],
        vec![15, 17, 24, 18],
        vec![19, 22, 21],
        vec![20, 23, 24, 22],
    ];
    build_drawing(11, edges, crossings, rotations).expect("both-aside template")
}

fn template_opposite_faces() -> OnePlaneDrawing {
    // a=0 b=1 f=2 s3=3 t3=4 w=5 s2=6 t2=7 w'=8
    let edges: &[(u32, u32)] = &[
        (0, 1), // e0 ab
        (0, 2), // e1 af
        (1, 2), // e2 bf
        (0, 3), // e3 as3 x ft3
        (2, 4), // e4 ft3
        (2, 3), // e5 fs3
        (3, 4), // e6 s3t3
        (0, 4), // e7 at3 x fw
        (2, 5), // e8 fw
        (0, 5), // e9 aw
        (4, 5), // e10 t3w
        (1, 6), // e11 bs2 x ft2
        (2, 7), // e12 ft2
        (2, 6), // e13 fs2
        (6, 7), // e14 s2t2
        (1, 7), // e15 bt2 x fw'
        (2, 8), // e16 fw'
        (1, 8), // e17 bw'
        (7, 8), // e18 t2w'
    ];
    let crossings = &[
        (3u32, 4u32, [seg(3, 0), seg(4, 2), seg(3, 3), seg(4, 4)]),
        (7, 8, [seg(8, 2), seg(7, 0), seg(8, 5), seg(7, 4)]),
        (11, 12, [seg(11, 1), seg(12, 2), seg(11, 6), seg(12, 7)]),
        (15, 16, [seg(16, 2), seg(15, 1), seg(16, 8), seg(15, 7)]),
    ];
    let rotations: &[Vec<u32>] = &[
        vec![0, 3, 9, 7, 1],
        vec![0, 11, 17, 15, 2],
        vec![12, 1, 8, 5, 4, 2, 16, 13],
        vec![3, 5, 6],
        vec![6, 7, 10, 4],
        vec![8, 9, 10],
        vec![11, 13, 14],
        vec![14, 15, 18, 12],
        vec![16, 17, 18],
    ];
    build_drawing(9, edges, crossings, rotations).expect("opposite-faces template")
}

fn template_both_same_face() -> OnePlaneDrawing {
    // a=0 b=1 f=2 s3=3 t3=4 w=5 s4=6 t4=7 w'=8
    let edges: &[(u32, u32)] = &[
        (0, 1), // e0 ab
        (0, 2), // e1 af
        (1, 2), // e2 bf
        (0, 3), // e3 as3 x ft3
        (2, 4), // e4 ft3
        (2, 3), // e5 fs3
        (3, 4), // e6 s3t3
        (0, 4), // e7 at3 x fw
        (2, 5), // e8 fw
        (0, 5), // e9 aw
        (4, 5), // e10 t3w
        (1, 6), // e11 bs4 x ft4
        (2, 7), // e12 ft4
        (2, 6), // e13 fs4
        (6, 7), // e14 s4t4
        (1, 7), // e15 bt4 x fw'
        (2, 8), // e16 fw'
        (1, 8), // e17 bw'
        (7, 8), // e18 t4w'
    ];
    let crossings = &[
        (3u32, 4u32, [seg(3, 0), seg(4, 2), seg(3, 3), seg(4, 4)]),
        (7, 8, [seg(8, 2), seg(7, 0), seg(8, 5), seg(7, 4)]),
        (11, 12, [seg(12, 2), seg(11, 1), seg(12, 7), seg(11, 6)]),
        (15, 16, [seg(16, 2), seg(15, 7), seg(16, 8), seg(15, 1)]),
    ];
    let rotations: &[Vec<u32>] = &[
        vec![0, 3, 9, 7, 1],
        vec![0, 2, 15, 17, 11],
        vec![2, 1, 8, 5, 4, 12, 13, 16],
        vec![3, 5, 6],
        vec![6, 7, 10, 4],
        vec![8, 9, 10],
        vec![11, 14, 13],
        vec![12, 18, 15, 14],
        vec![16, 18, 17],
    ];
    build_drawing(9, edges, crossings, rotations).expect("same-face template")
}

fn template_one_aside() -> OnePlaneDrawing {
    // a=0 b=1 f=2 s3=3 t3=4 w=5 s2=6 t2=7 s4=8 t4=9
    let edges: &[(u32, u32)] = &[
        (0, 1), // e0 ab
        (0, 2), // e1 af
        (1, 2), // e2 bf x t2t4
        (0, 3), // e3 as3 x ft3
        (2, 4), // e4 ft3
        (2, 3), // e5 fs3
        (3, 4), // e6 s3t3
        (0, 4), // e7 at3 x fw
        (2, 5), // e8 fw
        (0, 5), // e9 aw
        (4, 5), // e10 t3w
        (1, 6), // e11 bs2 x ft2
        (2, 7), // e12 ft2
        (2, 6), // e13 fs2
        (6, 7), // e14 s2t2
        (1, 7), // e15 bt2
        (1, 8), // e16 bs4 x ft4
        (2, 9), // e17 ft4
        (2, 8), // e18 fs4
        (8, 9), // e19 s4t4
        (1, 9), // e20 bt4
        (7, 9), // e21 t2t4
    ];
    let crossings = &[
        (3u32, 4u32, [seg(3, 0), seg(4, 2), seg(3, 3), seg(4, 4)]),
        (7, 8, [seg(8, 2), seg(7, 0), seg(8, 5), seg(7, 4)]),
        (11, 12, [seg(11, 1), seg(12, 2), seg(11, 6), seg(12, 7)]),
        (16, 17, [seg(17, 2), seg(16, 1), seg(17, 9), seg(16, 8)]),
        (2, 21, [seg(2, 1), seg(21, 7), seg(2, 2), seg(21, 9)]),
    ];
    let rotations: &[Vec<u32>] = &[
        vec![0, 3, 9, 7, 1],
        vec![0, 11, 15, 2, 20, 16],
        vec![12, 1, 8, 5, 4, 17, 18, 2, 13],
        vec![3, 5, 6],
        vec![6, 7, 10, 4],
        vec![8, 9, 10],
        vec![11, 13, 14],
        vec![12, 14, 21, 15],
        vec![16, 19, 18],
        vec![17, 20, 21, 19],
    ];
    build_drawing(10, edges, crossings, rotations).expect("one-aside template")
}

/// Builds the requested maximal drawing in which the edge `e0` = ab is
/// uncrossed yet contained in no K4. Verified before returning: the
/// result is maximal, ab classifies as exceptional, and the flanking
/// pattern matches the requested template.
pub fn gen_exceptional(template: ExceptionalTemplate) -> Result<OnePlaneDrawing, AnalysisError> {
    let d = match template {
        ExceptionalTemplate::BothSameFace => template_both_same_face(),
        ExceptionalTemplate::OppositeFaces => template_opposite_faces(),
        ExceptionalTemplate::OneAside => template_one_aside(),
        ExceptionalTemplate::BothAside => template_both_aside(),
    };
    if let Some(w) = first_witness(&d) {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "template {:?} is not maximal: addable pair {}-{}",
            template,
            d.vertex_name(w.u),
            d.vertex_name(w.v)
        )));
    }
    verify_exceptional_pattern(&d, template)?;
    Ok(d)
}

/// Checks that edge e0 (= ab) is exceptional and that the positions of af
/// and bf relative to the faces flanking ab realize the template.
fn verify_exceptional_pattern(
    d: &OnePlaneDrawing,
    template: ExceptionalTemplate,
) -> Result<(), AnalysisError> {
    let (classes, stats) = classify_edges(d);
    if classes[0] != EdgeClass::Exceptional {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "edge `{}` is {:?}, not exceptional (stats {:?})",
            d.edge_name(0),
            classes[0],
            stats
        )));
    }
    let p = crate::planar::Planarization::build(d).map_err(AnalysisError::Drawing)?;
    let (f1, f2) = p.edge_sides(0).expect("ab uncrossed");
    let on = |edge: Option<u32>, face: u32| -> bool {
        match edge {
            None => false,
            Some(e) => match p.edge_sides(e) {
                None => false,
                Some((x, y)) => x == face || y == face,
            },
        }
    };
    let (a, b) = d.endpoints_of(0);
    let f_apex = {
        let verts = &p.faces[f1 as usize].real_vertices;
        *verts.iter().find(|&&v| v != a && v != b).ok_or_else(|| {
            AnalysisError::SkeletonDegenerate("flanking face lacks an apex".into())
        })?
    };
    let af = d.edge_between(a, f_apex);
    let bf = d.edge_between(b, f_apex);
    let af_on = on(af, f1) || on(af, f2);
    let bf_on = on(bf, f1) || on(bf, f2);
    let af_f1 = on(af, f1);
    let bf_f1 = on(bf, f1);
    let pattern_ok = match template {
        ExceptionalTemplate::BothSameFace => {
            af_on && bf_on && ((af_f1 && bf_f1) || (!af_f1 && !bf_f1))
        }
        ExceptionalTemplate::OppositeFaces => af_on && bf_on && (af_f1 != bf_f1),
        ExceptionalTemplate::OneAside => af_on != bf_on,
        ExceptionalTemplate::BothAside => !af_on && !bf_on,
    };
    if !pattern_ok {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "template {:?} pattern mismatch: af on flank={af_on} (f1={af_f1}), bf on flank={bf_on} (f1={bf_f1})",
            template
        )));
    }
    Ok(())
}

/// A maximal drawing whose skeleton has two no-K4 edges chained through a
/// shared apex: v0-v1 and v1-v2, both flanked by triangle faces with apex
/// v3. Decomposing it splits twice into three pieces.
pub fn gen_double_exceptional() -> Result<OnePlaneDrawing, AnalysisError> {
    // a=0 b=1 c=2 f=3 s3=4 t3=5 w=6 s4=7 t4=8 s6=9 t6=10 s7=11 t7=12 w2=13
    let edges: &[(u32, u32)] = &[
        (0, 1),   // e0 ab
        (1, 2),   // e1 bc
        (0, 3),   // e2 af
        (1, 3),   // e3 bf
        (2, 3),   // e4 cf
        (0, 4),   // e5 as3 x ft3
        (3, 5),   // e6 ft3
        (3, 4),   // e7 fs3
        (4, 5),   // e8 s3t3
        (0, 5),   // e9 at3 x fw
        (3, 6),   // e10 fw
        (0, 6),   // e11 aw
        (5, 6),   // e12 t3w
        (1, 7),   // e13 bs4 x ft4
        (3, 8),   // e14 ft4
        (3, 7),   // e15 fs4
        (7, 8),   // e16 s4t4
        (1, 8),   // e17 bt4
        (1, 9),   // e18 bs6 x ft6
        (3, 10),  // e19 ft6
        (3, 9),   // e20 fs6
        (9, 10),  // e21 s6t6
        (1, 10),  // e22 bt6
        (8, 10),  // e23 t4t6
        (2, 11),  // e24 cs7 x ft7
        (3, 12),  // e25 ft7
        (3, 11),  // e26 fs7
        (11, 12), // e27 s7t7
        (2, 12),  // e28 ct7 x fw2
        (3, 13),  // e29 fw2
        (2, 13),  // e30 cw2
        (12, 13), // e31 t7w2
        (7, 9),   // e32 s4s6
        (7, 10),  // e33 s4t6 x t4s6
        (8, 9),   // e34 t4s6
    ];
    let crossings = &[
        (5u32, 6u32, [seg(5, 0), seg(6, 3), seg(5, 4), seg(6, 5)]),
        (9, 10, [seg(10, 3), seg(9, 0), seg(10, 6), seg(9, 5)]),
        (13, 14, [seg(14, 3), seg(13, 1), seg(14, 8), seg(13, 7)]),
        (18, 19, [seg(18, 1), seg(19, 3), seg(18, 9), seg(19, 10)]),
        (24, 25, [seg(24, 2), seg(25, 12), seg(24, 11), seg(25, 3)]),
        (28, 29, [seg(28, 2), seg(29, 3), seg(28, 12), seg(29, 13)]),
        (33, 34, [seg(33, 7), seg(34, 8), seg(33, 10), seg(34, 9)]),
    ];
    let rotations: &[Vec<u32>] = &[
        vec![0, 5, 11, 9, 2],
        vec![0, 3, 1, 18, 22, 17, 13],
        vec![24, 1, 4, 28, 30],
        vec![3, 2, 10, 7, 6, 14, 15, 20, 19, 25, 26, 29, 4],
        vec![5, 7, 8],
        vec![8, 9, 12, 6],
        vec![10, 11, 12],
        vec![13, 16, 33, 32, 15],
        vec![14, 17, 23, 34, 16],
        vec![18, 20, 32, 34, 21],
        vec![19, 21, 33, 23, 22],
        vec![24, 27, 26],
        vec![28, 27, 25, 31],
        vec![30, 29, 31],
    ];
    let d = build_drawing(14, edges, crossings, rotations).map_err(AnalysisError::Drawing)?;
    if let Some(w) = first_witness(&d) {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "double chain is not maximal: addable pair {}-{}",
            d.vertex_name(w.u),
            d.vertex_name(w.v)
        )));
    }
    let (classes, stats) = classify_edges(&d);
    if stats.e != 2
        || classes[0] != EdgeClass::Exceptional
        || classes[1] != EdgeClass::Exceptional
    {
        return Err(AnalysisError::SkeletonDegenerate(format!(
            "double chain classifies as {stats:?}"
        )));
    }
    Ok(d)
}

/// All K4 vertex ids of a drawing named, convenience for tests.
pub fn vertex_by_name(d: &OnePlaneDrawing, name: &str) -> Option<VertexId> {
    d.vertices().find(|&v| d.vertex_name(v) == name)
}
