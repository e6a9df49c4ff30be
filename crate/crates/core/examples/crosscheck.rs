use oneplane_core::canon::canonical_key;
use oneplane_core::census::*;
use oneplane_core::drawing::OnePlaneDrawing;
use oneplane_core::saturate::*;
use std::collections::HashSet;

fn main() {
    for n in [4usize, 5, 6] {
        let res = enumerate_maximal(n).unwrap();
        let census: HashSet<_> = res.drawings.iter()
            .map(|doc| canonical_key(&OnePlaneDrawing::from_document(doc).unwrap()))
            .collect();
        let mut sampled = HashSet::new();
        let mut outside = 0;
        for seed in 0..20000u64 {
            let d = random_maximal(n, seed);
            let k = canonical_key(&d);
            if !census.contains(&k) { outside += 1; }
            sampled.insert(k);
        }
        println!("n={}: census={} sampled_distinct={} outside={}", n, census.len(), sampled.len(), outside);
    }
}
