//! Demazure crystals MV_x(λ): string enumeration vs. the inductive
//! recursion, divided-difference characters, and the opposite-Demazure
//! containment criterion.
//!
//! Run with: `cargo run --example demazure_sets`

use mvcr::demazure::{
    demazure_character, demazure_set, demazure_set_recursive, opposite_demazure_member,
};
use mvcr::extremal::extremal_polytope;
use mvcr::mvcrystal::MvCrystal;
use mvcr::rootdata::{Coweight, WeylGroup};

fn main() -> mvcr::Result<()> {
    let group = WeylGroup::parse("A2")?;
    let lambda = Coweight::new(vec![1, 1]);
    let crystal = MvCrystal::generate(&group, &lambda)?;

    println!("Demazure crystals inside MV(λ), λ = {lambda}:");
    for x in group.all() {
        let set = demazure_set(&group, &crystal, x)?;
        let recursive = demazure_set_recursive(&group, &crystal, x)?;
        assert_eq!(set, recursive);
        let weights: Vec<String> = set
            .members
            .iter()
            .map(|&k| crystal.node(k).wt(&group).to_string())
            .collect();
        println!(
            "  x = {:<3}: |MV_x(λ)| = {} with weights {}",
            group.elt_string(x),
            set.len(),
            weights.join(" ")
        );
    }

    // the Demazure operator character matches the member weights
    let s1 = group.gen(0);
    let character = demazure_character(&group, s1, &lambda)?;
    println!("\ncharacter of V_s1(λ):");
    for (wt, mult) in &character {
        println!("  {wt} x{mult}");
    }

    // P ⊆ P_{x·λ} holds for Demazure members; the converse fails
    let x = group.mul(group.gen(0), group.gen(1));
    let set = demazure_set(&group, &crystal, x)?;
    let extremal = extremal_polytope(&group, x, &lambda)?;
    println!("\nx = {}:", group.elt_string(x));
    for (k, p) in crystal.nodes().iter().enumerate() {
        let inside = extremal.polytope().contains(&group, p.polytope());
        let member = set.contains(k);
        let note = match (member, inside) {
            (true, true) => "member, contained (corollary)",
            (false, true) => "NOT a member but contained (converse fails)",
            (false, false) => "outside",
            (true, false) => unreachable!("contradicts the corollary"),
        };
        println!("  node {k}: {note}");
    }

    // opposite Demazure membership is exactly the reverse containment
    let hexagon = crystal.node(crystal.lowest(&group));
    println!(
        "\nhexagon ∈ MV^x(λ) for x = {}: {}",
        group.elt_string(x),
        opposite_demazure_member(&group, hexagon, x)?
    );
    Ok(())
}
