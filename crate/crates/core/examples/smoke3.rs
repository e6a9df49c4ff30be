use oneplane_core::insert::*;
use oneplane_core::planar::Planarization;
use oneplane_core::drawing::build_drawing;

fn seg(edge: u32, toward: u32) -> oneplane_core::drawing::SegmentEnd {
    oneplane_core::drawing::SegmentEnd { edge, toward }
}

fn main() {
    let core = build_drawing(
        7,
        &[(2,0),(2,1),(0,1),(0,3),(0,4),(1,3),(1,4),(3,4),(0,5),(0,6),(1,5),(1,6),(5,6)],
        &[
            (3, 6, [seg(6,1), seg(3,3), seg(6,4), seg(3,0)]),
            (8, 11, [seg(8,5), seg(11,1), seg(8,0), seg(11,6)]),
        ],
        &[
            vec![2,0,3,4,9,8],
            vec![5,6,1,2,11,10],
            vec![0,1],
            vec![7,3,5],
            vec![7,4,6],
            vec![10,8,12],
            vec![12,11,9],
        ],
    ).unwrap();
    let p = Planarization::build(&core).unwrap();
    println!("core: nodes={} arcs={} faces={}", p.nodes.len(), p.arcs.len(), p.faces.len());
    for (i, f) in p.faces.iter().enumerate() {
        println!("  face {i}: reals={:?} dummies={:?}", f.real_vertices, f.dummies);
    }
    let ws = witnesses(&core);
    for w in &ws {
        let ok = add_edge(&core, w).is_ok();
        println!("{:?} -> ok={}", w, ok);
    }
}
