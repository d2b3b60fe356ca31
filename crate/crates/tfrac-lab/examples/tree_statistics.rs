//! Traversal orders and the level / croix / nid statistics on the two
//! worked sample trees.
//!
//! Run with: cargo run --example tree_statistics

use tfrac_lab::trees::{
    all_vertex_stats, irt_vertex_stats, node_type_counts, samples, traversal_order, Traversal,
};

fn main() {
    let t = samples::sample_binary_8();
    println!("binary sample: {t}");
    let order = traversal_order(&t, Traversal::Inorder).unwrap();
    println!("inorder: {order:?}");
    println!("node types: {:?}", node_type_counts(&t, false));
    println!("\n v | type | lev | croix | nid");
    let stats = all_vertex_stats(&t, Traversal::Inorder).unwrap();
    for (v, s) in &stats {
        println!(
            "{:>2} | {:>4} | {:>3} | {:>5} | {:>3}",
            v, s.node_type, s.lev, s.croix, s.nid
        );
    }

    let t = samples::sample_irt_16();
    println!("\ninterval-labeled sample: {t}");
    let pre = traversal_order(&t, Traversal::Preorder).unwrap();
    let pretty: Vec<String> = pre
        .iter()
        .map(|&i| {
            let v = t.vertex(i);
            if v.lo == v.hi {
                format!("{{{}}}", v.lo)
            } else {
                format!("{{{}..{}}}", v.lo, v.hi)
            }
        })
        .collect();
    println!("preorder: {}", pretty.join(" "));
    println!("node types: {:?}", node_type_counts(&t, false));
    println!("\n labels | type | lev | croix | nid | surplus");
    let stats = irt_vertex_stats(&t, Traversal::Preorder).unwrap();
    for i in 0..t.num_vertices() {
        let v = t.vertex(i);
        let s = &stats[&i];
        println!(
            "{:>7} | {:>4} | {:>3} | {:>5} | {:>3} | {:>7}",
            format!("{}..{}", v.lo, v.hi),
            s.node_type,
            s.lev,
            s.croix,
            s.nid,
            s.label_surplus
        );
    }
    // the level always splits into crossings plus nestings
    assert!(stats.values().all(|s| s.lev == s.croix + s.nid));
}
