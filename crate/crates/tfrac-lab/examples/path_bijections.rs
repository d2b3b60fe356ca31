//! The two tree-to-path bijections and the permutation correspondence,
//! with their inverse constructions and weight transport.
//!
//! Run with: cargo run --example path_bijections

use tfrac_lab::biject::{
    bt_to_permutation, irt_to_labeled_schroder, labeled_motzkin_to_rt, labeled_schroder_to_irt,
    permutation_to_bt, rt_to_labeled_motzkin, schroder_step_weights, schroder_weight_of_tree,
};
use tfrac_lab::treepoly::MasterWeights;
use tfrac_lab::trees::{enumerate_irt, enumerate_rt, samples, Traversal};

fn main() {
    println!("== restricted ternary trees <-> labeled Motzkin paths ==");
    let alg = Traversal::Preorder;
    for t in enumerate_rt(3) {
        let lp = rt_to_labeled_motzkin(&t, alg);
        let back = labeled_motzkin_to_rt(&lp, alg).unwrap();
        assert_eq!(back, t);
        println!("{t}  ->  steps {:?} labels {:?}", lp.path.steps, lp.labels);
    }
    println!("(roundtrip checked on all 11 trees)");

    println!("\n== interval-labeled trees <-> labeled Schroder paths ==");
    let t = samples::sample_irt_16();
    let lp = irt_to_labeled_schroder(&t, alg);
    println!(
        "the worked sample maps to a path of length {}:",
        lp.path.length()
    );
    print!("{}", lp.path.render());
    assert_eq!(labeled_schroder_to_irt(&lp, alg).unwrap(), t);
    println!("and replays back to the same tree");

    // weight transport: the product of step weights equals the product of
    // vertex weights, tree by tree
    println!("\n== weight transport ==");
    let w = MasterWeights::symbolic();
    let scheme = schroder_step_weights(&w);
    for t in enumerate_irt(3) {
        let lp = irt_to_labeled_schroder(&t, alg);
        assert_eq!(
            scheme.path_weight(&lp),
            schroder_weight_of_tree(&t, &w, alg)
        );
    }
    println!("path weight = tree weight on every interval-labeled tree with 4 labels");

    println!("\n== binary trees <-> permutations ==");
    let t = samples::sample_binary_8();
    let sigma = bt_to_permutation(&t);
    println!("the binary sample reads off as {:?}", sigma.word());
    assert_eq!(permutation_to_bt(&sigma), t);
    println!("and rebuilds from its word");
}
