use oneplane_core::census::*;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let res = enumerate_maximal(6).unwrap();
    println!("n=6: e'={} drawings={} graphs={} in {:?}", res.e_prime, res.drawing_count, res.graph_count, t0.elapsed());
    println!("hist: {:?}", res.histogram);
}
