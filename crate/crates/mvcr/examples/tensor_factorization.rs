//! Tensor products of MV crystals: component decomposition, the maps
//! S_N / G_N / K_N, extremal factorizations, and the LS paths they induce.
//!
//! Run with: `cargo run --example tensor_factorization`

use mvcr::extremal::ExtremalFamily;
use mvcr::mvcrystal::MvCrystal;
use mvcr::rootdata::{Coweight, WeylGroup};
use mvcr::tensorops::{
    decompose, extremal_factorization, k_multiple, ls_path, s_multiple, TensorCrystal,
};

fn main() -> mvcr::Result<()> {
    let group = WeylGroup::parse("A2")?;

    // decompose MV(λ2) ⊗ MV(λ1) into connected components
    let l = Coweight::new(vec![1, 0]);
    let c = MvCrystal::generate(&group, &l)?;
    let tensor = TensorCrystal::new(vec![&c, &c]);
    println!("MV((1,0)) ⊗ MV((1,0)) decomposes as:");
    for comp in decompose(&group, &tensor)? {
        println!(
            "  highest weight {} (copy #{}), highest node {:?}",
            comp.lambda, comp.index, comp.highest.idx
        );
    }

    // dilation: S_N scales GGMS data, weights, and string statistics
    let lambda = Coweight::new(vec![1, 1]);
    let crystal = MvCrystal::generate(&group, &lambda)?;
    let node = crystal.lowest(&group);
    let scaled = s_multiple(&group, crystal.node(node), 3);
    println!(
        "\nS_3(hexagon): wt {} -> {}",
        crystal.node(node).wt(&group),
        scaled.wt(&group)
    );

    // K_N = G_N ∘ S_N lands in MV(λ)^{⊗N}
    let image = k_multiple(&group, &crystal, node, 2)?;
    println!("K_2(hexagon) factor node ids: {:?}", image.idx);

    // every node factors into extremal polytopes for some N
    let family = ExtremalFamily::new(&group, &lambda)?;
    println!("\nextremal factorizations in MV(λ), λ = (1,1):");
    for k in 0..crystal.len() {
        let f = extremal_factorization(&group, &crystal, &family, k, 24)?;
        let xs: Vec<String> = f.xs.iter().map(|&x| group.elt_string(x)).collect();
        let path = ls_path(&group, &lambda, &f, crystal.node(k).wt(&group))?;
        let dirs: Vec<String> = path.directions.iter().map(|d| d.to_string()).collect();
        let breaks: Vec<String> = path.breakpoints.iter().map(|b| b.to_string()).collect();
        println!(
            "  node {k}: N = {}, x = ({}), LS path directions [{}] at t = [{}]",
            f.n,
            xs.join(", "),
            dirs.join(", "),
            breaks.join(", ")
        );
    }
    Ok(())
}
