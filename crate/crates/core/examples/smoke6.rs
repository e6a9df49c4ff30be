use oneplane_core::insert::*;
use oneplane_core::canon::canonical_key;
use oneplane_core::saturate::edgeless;
use std::collections::HashSet;

fn main() {
    let start = edgeless(5);
    let mut seen = HashSet::new();
    seen.insert(canonical_key(&start));
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for d in &frontier {
            let ws = witnesses(d);
            for w in &ws {
                match add_edge(d, w) {
                    Ok(child) => {
                        if seen.insert(canonical_key(&child)) {
                            next.push(child);
                        }
                    }
                    Err(e) => {
                        println!("UNSOUND witness: {:?}", w);
                        println!("error: {e}");
                        println!("drawing:\n{}", d.serialize());
                        return;
                    }
                }
            }
        }
        frontier = next;
    }
    println!("all sound, states={}", seen.len());
}
