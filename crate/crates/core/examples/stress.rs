use oneplane_core::analysis::*;
use oneplane_core::bounds::audit_drawing_bound;
use oneplane_core::certify::*;
use oneplane_core::saturate::*;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let corpus = corpus(200, 5, 15, 0);
    println!("corpus built in {:?}", t0.elapsed());
    let t0 = Instant::now();
    let mut fails = 0;
    for (i, d) in corpus.iter().enumerate() {
        let mut bad = Vec::new();
        if is_maximal(d).is_some() { bad.push("maximal"); }
        if !check_face_lemma(d).passed() { bad.push("face"); }
        if !check_min_degree(d).passed() { bad.push("deg"); }
        if !check_crossing_k4(d).passed() { bad.push("ck4"); }
        let (_, hr) = find_hermits(d);
        if !hr.passed() { bad.push("hermit"); }
        match skeleton(d) {
            Err(_) => bad.push("skeleton"),
            Ok(sk) => {
                for e in sk.drawing.edges() {
                    if sk.classes[e as usize] == EdgeClass::Exceptional {
                        match check_exceptional_structure(&sk.drawing, e) {
                            Ok(r) if r.passed() => {}
                            _ => bad.push("exc"),
                        }
                    }
                }
                if !check_inequality(&sk.stats) { bad.push("ineq"); }
            }
        }
        match check_counting_relations(d) {
            Ok(r) if r.passed() => {}
            _ => bad.push("count"),
        }
        if audit_drawing_bound(d).map(|a| !a.pass).unwrap_or(true) { bad.push("bound"); }
        if !bad.is_empty() {
            fails += 1;
            println!("corpus[{i}] N={} E={}: FAIL {:?}", d.vertex_count(), d.edge_count(), bad);
        }
    }
    println!("lemma suite: {} failures in {:?}", fails, t0.elapsed());
    let t0 = Instant::now();
    let mut cert_fails = 0;
    for (i, d) in corpus.iter().enumerate() {
        match certify_drawing(d) {
            Ok(_) => {}
            Err(e) => {
                cert_fails += 1;
                println!("corpus[{i}] N={}: CERT FAIL: {e}", d.vertex_count());
            }
        }
    }
    println!("certificates: {} failures in {:?}", cert_fails, t0.elapsed());
}
