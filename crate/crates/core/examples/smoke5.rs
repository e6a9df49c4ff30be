use oneplane_core::analysis::*;
use oneplane_core::certify::*;
use oneplane_core::generate::*;

fn main() {
    for t in 1..=4u8 {
        let template = ExceptionalTemplate::from_index(t).unwrap();
        match gen_exceptional(template) {
            Ok(d) => {
                let (_, stats) = classify_edges(&d);
                println!("template {t}: OK N={} E={} stats={:?}", d.vertex_count(), d.edge_count(), stats);
                let rep = check_exceptional_structure(&d, 0).unwrap();
                println!("  structure: {} {:?}", rep.status, rep.witnesses);
                match certify(&d) {
                    Ok(cert) => {
                        let v = verify_certificate(&d, &cert);
                        println!("  certify: {} nodes, verify: {:?}", cert.nodes.len(), v.is_ok());
                        if let Err(e) = v { println!("    VERIFY ERR: {e}"); }
                    }
                    Err(e) => println!("  CERTIFY ERR: {e}"),
                }
            }
            Err(e) => println!("template {t}: FAILED: {e}"),
        }
    }
    // Certifier on K4s and hermit skeleton
    let k4x = gen_k4(true);
    let cert = certify(&k4x).unwrap();
    println!("crossed K4 cert: {} nodes, steps: {:?}", cert.nodes.len(),
        match &cert.nodes[0].kind { NodeKind::Leaf{steps, ..} => steps.len(), _ => 999 });
    println!("verify: {:?}", verify_certificate(&k4x, &cert).is_ok());
    let hg = gen_hermit_gadget().unwrap();
    let sk = skeleton(&hg).unwrap();
    match certify(&sk.drawing) {
        Ok(cert) => {
            println!("hermit skeleton cert nodes={} verify={:?}", cert.nodes.len(), verify_certificate(&sk.drawing, &cert).is_ok());
            if let NodeKind::Leaf{steps, ..} = &cert.nodes[0].kind {
                for s in steps { println!("  op{} case{:?} dv={:?} de={:?} dl={} dr={}", s.op, s.case, s.added_vertices, s.added_edges, s.delta_lhs, s.delta_rhs); }
            }
        }
        Err(e) => println!("hermit cert ERR: {e}"),
    }
}
