//! Tour of the root-system kernel: Cartan data, Weyl group enumeration,
//! reduced words, the 2-/3-move graph, and Bruhat order.
//!
//! Run with: `cargo run --example root_systems`

use mvcr::rootdata::{CartanDatum, Coweight, WeylGroup};

fn main() -> mvcr::Result<()> {
    for spec in ["A1", "A1xA1", "A2", "A3", "D4"] {
        let group = WeylGroup::parse(spec)?;
        let w0 = group.longest();
        println!(
            "{spec:>6}: |W| = {:>3}, roots = {:>2}, l(w0) = {:>2}, |R(w0)| = {}",
            group.size(),
            group.num_roots(),
            group.length(w0),
            group.move_graph().len()
        );
    }

    // non-simply-laced types are rejected up front
    match CartanDatum::parse("B2") {
        Err(e) => println!("\nB2 is rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let group = WeylGroup::parse("A2")?;
    println!("\nA2 elements in canonical (length, ShortLex) order:");
    for w in group.all() {
        print!("  {}", group.elt_string(w));
    }
    println!();

    println!("\nreduced words of w0 and the moves between them:");
    for (i, word) in group.move_graph().words().iter().enumerate() {
        println!("  [{i}] {}", group.word_to_string(word.letters()));
        for &(target, mv) in group.move_graph().neighbors(i) {
            println!("      --{mv}--> [{target}]");
        }
    }

    // Bruhat order: s1 s2 <= w0 but s1, s2 are incomparable
    let s1 = group.gen(0);
    let s2 = group.gen(1);
    println!(
        "\nBruhat: s1s2 <= w0: {}",
        group.bruhat_leq(group.mul(s1, s2), group.longest())
    );
    println!("Bruhat: s1 <= s2:   {}", group.bruhat_leq(s1, s2));

    // reflections act on coweights by v - <v, alpha> h
    let lambda = Coweight::new(vec![1, 1]);
    println!("\ns1 · (1,1) = {}", group.act(s1, &lambda));
    println!("w0 · (1,1) = {}", group.act(group.longest(), &lambda));

    // minimal coset representatives for a stabilized weight
    let fundamental = Coweight::new(vec![1, 0]);
    let reps: Vec<String> = group
        .min_coset_reps(&fundamental)?
        .iter()
        .map(|&w| group.elt_string(w))
        .collect();
    println!("W^λ_min for λ = (1,0): {reps:?}");
    Ok(())
}
