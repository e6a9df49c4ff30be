use oneplane_core::census::*;
use oneplane_core::insert::oracle_is_maximal;
use oneplane_core::drawing::OnePlaneDrawing;
use std::time::Instant;

fn main() {
    for n in [4usize, 5] {
        let t0 = Instant::now();
        let res = enumerate_maximal(n).unwrap();
        println!("n={}: e'={} drawings={} graphs={} hist={:?} in {:?}",
            n, res.e_prime, res.drawing_count, res.graph_count, res.histogram, t0.elapsed());
        // oracle agreement
        let t0 = Instant::now();
        let mut bad = 0;
        for doc in &res.drawings {
            let d = OnePlaneDrawing::from_document(doc).unwrap();
            if !oracle_is_maximal(&d) { bad += 1; }
        }
        println!("  oracle agreement: {} disagreements in {:?}", bad, t0.elapsed());
    }
}
