use oneplane_core::certify::*;
use oneplane_core::generate::*;

fn main() {
    match gen_double_exceptional() {
        Ok(d) => {
            println!("double: N={} E={} OK", d.vertex_count(), d.edge_count());
            match certify(&d) {
                Ok(cert) => {
                    let leaves = cert.nodes.iter().filter(|n| matches!(n.kind, NodeKind::Leaf{..})).count();
                    let splits = cert.nodes.iter().filter(|n| matches!(n.kind, NodeKind::Split{..})).count();
                    println!("cert: {} nodes ({} splits, {} leaves), verify: {:?}",
                        cert.nodes.len(), splits, leaves, verify_certificate(&d, &cert).is_ok());
                }
                Err(e) => println!("CERT ERR: {e}"),
            }
        }
        Err(e) => println!("DOUBLE FAILED: {e}"),
    }
}
