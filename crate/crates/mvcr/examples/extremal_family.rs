//! Extremal MV polytopes `P_{x·λ} = Conv(W_{≤x}·λ)`: min-lex subwords,
//! y-sequences, the extremal family, and Bruhat monotonicity.
//!
//! Run with: `cargo run --example extremal_family`

use mvcr::extremal::{extremal_polytope, min_lex_subword, y_sequence, ExtremalFamily};
use mvcr::mvcrystal::MvCrystal;
use mvcr::rootdata::{Coweight, WeylGroup};

fn main() -> mvcr::Result<()> {
    let group = WeylGroup::parse("A2")?;
    let lambda = Coweight::new(vec![1, 1]);

    // the min-lex subword machinery behind the GGMS datum of P_{x·λ}
    let word = group.try_reduced_word(&[0, 1, 0]).unwrap();
    for x in group.all() {
        let positions = min_lex_subword(&group, x, &word);
        let seq = y_sequence(&group, x, &word);
        let ys: Vec<String> = seq.y.iter().map(|&y| group.elt_string(y)).collect();
        println!(
            "x = {:<3}: min S(xw0, 121) = {:?}, y = [{}]",
            group.elt_string(x),
            positions,
            ys.join(" ")
        );
    }

    println!("\nextremal polytopes and their vertex sets:");
    for x in group.all() {
        let p = extremal_polytope(&group, x, &lambda)?;
        let mut verts: Vec<String> = p.datum().vertices().iter().map(|v| v.to_string()).collect();
        verts.sort();
        verts.dedup();
        println!(
            "  P_(x·λ) for x = {:<3}: wt = {:>7}, vertices {}",
            group.elt_string(x),
            p.wt(&group).to_string(),
            verts.join(" ")
        );
    }

    // Bruhat monotonicity: x <= y implies P_{x·λ} ⊆ P_{y·λ}
    let s1 = group.gen(0);
    let p_s1 = extremal_polytope(&group, s1, &lambda)?;
    let p_w0 = extremal_polytope(&group, group.longest(), &lambda)?;
    println!(
        "\nP_(s1·λ) ⊆ P_(w0·λ): {}",
        p_w0.polytope().contains(&group, p_s1.polytope())
    );

    // which crystal nodes are extremal?
    let crystal = MvCrystal::generate(&group, &lambda)?;
    let family = ExtremalFamily::new(&group, &lambda)?;
    for (k, p) in crystal.nodes().iter().enumerate() {
        match family.is_extremal(p) {
            Some(x) => println!(
                "node {k} (wt {}) = P_(x·λ), x = {}",
                p.wt(&group),
                group.elt_string(x)
            ),
            None => println!("node {k} (wt {}) is not extremal", p.wt(&group)),
        }
    }
    Ok(())
}
