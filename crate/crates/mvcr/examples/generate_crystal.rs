//! Generates MV(λ) with its LBZ crystal structure and prints the nodes,
//! their Lusztig data, and the f-edges.
//!
//! Run with: `cargo run --example generate_crystal`

use mvcr::mvcrystal::{LusztigDatum, MvCrystal, MvPolytope};
use mvcr::rootdata::{Coweight, WeylGroup};

fn main() -> mvcr::Result<()> {
    let group = WeylGroup::parse("A2")?;
    let lambda = Coweight::new(vec![1, 1]);
    let crystal = MvCrystal::generate(&group, &lambda)?;
    let base = group.move_graph().words()[0].clone();

    println!(
        "MV(λ) for A2, λ = {lambda}: {} nodes (adjoint representation)",
        crystal.len()
    );
    println!(
        "{:>4} {:>8} {:>10} {:>7} {:>7}  edges",
        "node", "wt", "n(121)", "ε1,ε2", "φ1,φ2"
    );
    for (k, p) in crystal.nodes().iter().enumerate() {
        let n = p.lusztig(&group, &base);
        let edges: Vec<String> = (0..group.rank())
            .filter_map(|j| crystal.f_idx(k, j).map(|t| format!("f{} -> {t}", j + 1)))
            .collect();
        println!(
            "{k:>4} {:>8} {:>10} {:>7} {:>7}  {}",
            p.wt(&group).to_string(),
            format!("{:?}", n.lengths()),
            format!("{},{}", p.epsilon(&group, 0), p.epsilon(&group, 1)),
            format!("{},{}", p.phi(&group, 0), p.phi(&group, 1)),
            edges.join(", ")
        );
    }

    // crystal operators act on the first Lusztig coordinate of a word
    // starting with j; f_j dies exactly when φ_j = 0
    let top = crystal.node(crystal.highest());
    let down = top.f(&group, 0).expect("φ1(P_λ) = 1");
    println!("\nf1(P_λ) has wt {}", down.wt(&group));
    assert_eq!(down.e(&group, 0).as_ref(), Some(top));

    // a Lusztig datum that leaves Conv(W·λ) is rejected
    let word = group.try_reduced_word(&[0, 1, 0]).unwrap();
    let too_big = LusztigDatum::new(&group, word, vec![2, 2, 2])?;
    match MvPolytope::from_lusztig(&group, &lambda, &too_big) {
        Err(e) => println!("n = (2,2,2) is not a Lusztig datum for MV(λ): {e}"),
        Ok(_) => unreachable!(),
    }

    // ... but is one for MV(2λ), where it describes the large hexagon
    let word = group.try_reduced_word(&[0, 1, 0]).unwrap();
    let big = MvPolytope::from_lusztig(
        &group,
        &lambda.scaled(2),
        &LusztigDatum::new(&group, word, vec![2, 2, 2])?,
    )?;
    println!("in MV(2λ) it is the polytope with wt = {}", big.wt(&group));

    // weight multiset
    println!("\nweight multiset:");
    for (wt, mult) in crystal.weight_multiset(&group) {
        println!("  {wt} x{mult}");
    }
    Ok(())
}
