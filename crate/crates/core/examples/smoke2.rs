use oneplane_core::analysis::*;
use oneplane_core::generate::*;
use oneplane_core::saturate::*;

fn main() {
    // Hermit gadget
    match gen_hermit_gadget() {
        Ok(d) => {
            println!("hermit gadget: N={} E={} crossings={}", d.vertex_count(), d.edge_count(), d.crossing_count());
            let (hs, rep) = find_hermits(&d);
            println!("hermits: {:?} report: {} {:?}", hs, rep.status, rep.witnesses);
            match skeleton(&d) {
                Ok(sk) => println!("skeleton: stats={:?} dstats={:?}", sk.stats, sk.drawing_stats),
                Err(e) => println!("skeleton error: {e}"),
            }
            match check_counting_relations(&d) {
                Ok(r) => println!("counting: {} {:?}", r.status, r.witnesses),
                Err(e) => println!("counting error: {e}"),
            }
        }
        Err(e) => println!("HERMIT GADGET FAILED: {e}"),
    }
    // Random saturation on 8 vertices
    for seed in 0..3u64 {
        let d = random_maximal(8, seed);
        println!("saturated n=8 seed={}: E={} crossings={} maximal={}", seed, d.edge_count(), d.crossing_count(), is_maximal(&d).is_none());
        let fl = check_face_lemma(&d);
        let md = check_min_degree(&d);
        let ck = check_crossing_k4(&d);
        let (_, hr) = find_hermits(&d);
        println!("  face:{} deg:{} ck4:{} hermit:{}", fl.status, md.status, ck.status, hr.status);
        match skeleton(&d) {
            Ok(sk) => println!("  skeleton stats={:?}", sk.stats),
            Err(e) => println!("  skeleton ERR: {e}"),
        }
    }
}
