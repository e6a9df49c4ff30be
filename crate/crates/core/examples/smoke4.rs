use oneplane_core::insert::*;
use oneplane_core::saturate::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn main() {
    let mut rng = ChaCha20Rng::seed_from_u64(2);
    let mut cur = edgeless(8);
    loop {
        let ws = witnesses(&cur);
        if ws.is_empty() { break; }
        let w = &ws[rng.gen_range(0..ws.len())];
        match add_edge(&cur, w) {
            Ok(next) => cur = next,
            Err(e) => {
                println!("FAILING witness: {:?}", w);
                println!("error: {e}");
                println!("drawing: {}", cur.serialize());
                break;
            }
        }
    }
}
