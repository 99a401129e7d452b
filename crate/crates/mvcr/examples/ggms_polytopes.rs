//! GGMS data and pseudo-Weyl polytopes: validity, edge lengths, Minkowski
//! sums, dilation, and exact containment without any floating point.
//!
//! Run with: `cargo run --example ggms_polytopes`

use mvcr::polytope::{self, GgmsDatum, PseudoWeylPolytope};
use mvcr::rootdata::{Coweight, WeylGroup};

fn main() -> mvcr::Result<()> {
    let group = WeylGroup::parse("A2")?;
    let lambda = Coweight::new(vec![1, 1]);

    // the hexagon Conv(W·λ) as a GGMS datum: μ_w = w·w0·λ
    let hexagon = PseudoWeylPolytope::new(GgmsDatum::new(
        &group,
        group
            .all()
            .map(|w| group.act(group.mul(w, group.longest()), &lambda))
            .collect(),
    )?);
    println!("hexagon vertices (by chamber):");
    for w in group.all() {
        println!("  μ_{:<3} = {}", group.elt_string(w), hexagon.vertex(w));
    }

    let word = group.try_reduced_word(&[0, 1, 0]).unwrap();
    println!(
        "edge lengths along (1,2,1): {:?}",
        hexagon.edge_lengths(&group, &word)?
    );

    // a sign violation fails the GGMS test
    let g1 = WeylGroup::parse("A1")?;
    let bad = vec![g1.cartan().coroot(0), Coweight::zero(1)];
    println!("A1 datum (h1, 0) is GGMS: {}", polytope::is_ggms(&g1, &bad));

    // Minkowski sums act componentwise on data
    let point = PseudoWeylPolytope::new(GgmsDatum::constant(&group, &lambda));
    let shifted = hexagon.minkowski_sum(&point);
    println!(
        "hexagon + {{λ}}: lowest vertex {} -> {}",
        hexagon.vertex(group.identity()),
        shifted.vertex(group.identity())
    );

    // dilation equals iterated Minkowski sum
    let doubled = hexagon.scale(2);
    assert_eq!(doubled, hexagon.minkowski_sum(&hexagon));
    println!("2·hexagon == hexagon + hexagon");

    // exact containment through the cone description
    println!(
        "hexagon ⊇ {{0}}: {}",
        hexagon.contains(
            &group,
            &PseudoWeylPolytope::new(GgmsDatum::constant(&group, &Coweight::zero(2)))
        )
    );
    println!("{{λ}} ⊇ hexagon: {}", point.contains(&group, &hexagon));
    if let Some((vertex_chamber, cone_chamber)) = point.containment_violation(&group, &hexagon) {
        println!(
            "  witness: vertex μ_{} = {} violates the cone at chamber {}",
            group.elt_string(vertex_chamber),
            hexagon.vertex(vertex_chamber),
            group.elt_string(cone_chamber)
        );
    }

    // hull membership for arbitrary rational points
    println!(
        "(1,0) in Conv(W·λ): {}",
        polytope::in_worbit_hull(&group, &Coweight::new(vec![1, 0]), &lambda)?
    );
    println!(
        "2λ in Conv(W·λ): {}",
        polytope::in_worbit_hull(&group, &lambda.scaled(2), &lambda)?
    );

    // the {word: coords} JSON form round-trips
    let json = hexagon.datum().to_json(&group);
    let back = GgmsDatum::from_json(&group, &json)?;
    assert_eq!(&back, hexagon.datum());
    println!("JSON round-trip OK: {}", serde_json::to_string(&json)?);
    Ok(())
}
