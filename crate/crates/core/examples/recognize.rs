//! Recognition on random bipartite graphs: which ones are biconvex, which of
//! those admit a straight ordering, and what the cross pairs look like.

use biconvex::generators::gen_random_bipartite;
use biconvex::ordering::{
    find_biconvex_ordering, find_biconvex_s_ordering, find_cross_pairs, is_rectified,
};
use biconvex::Error;

pub fn main() {
    let (mut connected, mut biconvex, mut straight) = (0, 0, 0);
    for seed in 0..40 {
        let g = gen_random_bipartite(4, 5, 0.55, seed).unwrap();
        let verdict = match find_biconvex_ordering(&g, 10_000) {
            Err(Error::NotConnected) => continue,
            Err(Error::ProvablyNone) => {
                connected += 1;
                "not biconvex".to_string()
            }
            Err(e) => panic!("seed {seed}: {e}"),
            Ok(d) => {
                connected += 1;
                biconvex += 1;
                let pairs = find_cross_pairs(&g, &d);
                let open = pairs.iter().filter(|p| !is_rectified(&g, p)).count();
                let s = find_biconvex_s_ordering(&g, 10_000);
                straight += usize::from(s.is_ok());
                format!(
                    "A {:?} B {:?}, {} cross pairs ({open} unrectified), straight ordering: {}",
                    d.order_a(),
                    d.order_b(),
                    pairs.len(),
                    s.map(|s| format!("A {:?} B {:?}", s.order_a(), s.order_b()))
                        .unwrap_or_else(|e| e.to_string())
                )
            }
        };
        println!("seed {seed:2}: {} edges, {verdict}", g.edge_count());
    }
    println!("{connected} connected, {biconvex} biconvex, {straight} with a straight ordering");
    assert_eq!(biconvex, straight);
}
