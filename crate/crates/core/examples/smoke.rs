use oneplane_core::analysis::*;
use oneplane_core::generate::*;
use oneplane_core::insert::*;
use oneplane_core::planar::Planarization;

fn main() {
    let k4p = gen_k4(false);
    let p = Planarization::build(&k4p).unwrap();
    println!("plane K4: nodes={} arcs={} faces={}", p.nodes.len(), p.arcs.len(), p.faces.len());
    let k4x = gen_k4(true);
    let p = Planarization::build(&k4x).unwrap();
    println!("crossed K4: nodes={} arcs={} faces={}", p.nodes.len(), p.arcs.len(), p.faces.len());
    for (i, f) in p.faces.iter().enumerate() {
        println!("  face {i}: reals={:?} dummies={:?} walk_len={}", f.real_vertices, f.dummies, f.walk.len());
    }
    println!("plane K4 maximal: {:?}", is_maximal(&gen_k4(false)).is_none());
    println!("crossed K4 maximal: {:?}", is_maximal(&k4x).is_none());
    let (classes, stats) = classify_edges(&k4x);
    println!("crossed K4 classes: {:?} stats: {:?}", classes, stats);
    let (classes, stats) = classify_edges(&gen_k4(false));
    println!("plane K4 classes: {:?} stats: {:?}", classes, stats);
    // C4 cycle should not be maximal
    let c4 = oneplane_core::drawing::build_drawing(
        4,
        &[(0,1),(1,2),(2,3),(3,0)],
        &[],
        &[vec![0,3],vec![1,0],vec![2,1],vec![3,2]],
    ).unwrap();
    println!("C4 witnesses: {}", witnesses(&c4).len());
    println!("C4 oracle max: {}", oracle_is_maximal(&c4));
    println!("K4x oracle max: {}", oracle_is_maximal(&k4x));
}
