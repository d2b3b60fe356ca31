//! Exhaustive enumeration of the three tree families, plus the contraction
//! bijection to binary multilabeled trees.
//!
//! Run with: cargo run --example enumerate_trees

use tfrac_lab::trees::{
    enumerate_irt, enumerate_rt, for_each_binary, for_each_irt, for_each_rt, rt_to_multilabeled,
};

fn main() {
    println!("== counts ==");
    print!("increasing binary trees:     ");
    for n in 0..=8 {
        let mut c = 0u64;
        for_each_binary(n, &mut |_| c += 1);
        print!("{c} ");
    }
    println!();
    print!("restricted ternary trees:    ");
    for n in 0..=9 {
        let mut c = 0u64;
        for_each_rt(n, &mut |_| c += 1);
        print!("{c} ");
    }
    println!();
    print!("interval-labeled trees:      ");
    for n in 0..=8 {
        let mut c = 0u64;
        for_each_irt(n, &mut |_| c += 1);
        print!("{c} ");
    }
    println!();

    println!("\n== the three restricted ternary trees on two vertices ==");
    for t in enumerate_rt(2) {
        println!("  {t}");
    }

    println!("\n== the six interval-labeled trees on the label set [0,2] ==");
    for t in enumerate_irt(2) {
        println!("  {t}");
    }

    println!("\n== middle chains contract to multilabeled vertices ==");
    for t in enumerate_rt(3) {
        let ml = rt_to_multilabeled(&t);
        if ml.num_vertices() < 3 {
            println!("  {t}  ->  {ml}");
        }
    }
}
