//! Runs the full verification battery on a desk-scale instance and prints
//! the per-suite summaries. This is the library-level equivalent of
//! `mvcr verify all --cartan A2 --lambda 1,1`.
//!
//! Run with: `cargo run --example verify_theorems`

use mvcr::rootdata::{Coweight, WeylGroup};
use mvcr::verify;

fn main() -> mvcr::Result<()> {
    let group = WeylGroup::parse("A2")?;
    let lambda = Coweight::new(vec![1, 1]);

    let mut reports = vec![
        verify::crystal_sanity(&group, &lambda)?,
        verify::verify_demazure(&group, &lambda)?,
        verify::verify_multiples(&group, &lambda, &[2, 3])?,
        verify::verify_k_multiple_diagram(&group, &lambda, &[2])?,
    ];
    for x in group.min_coset_reps(&lambda)? {
        reports.push(verify::verify_main_theorem(&group, &lambda, x, 24)?);
        reports.push(verify::verify_corollary(&group, &lambda, x)?);
    }
    let fund1 = Coweight::new(vec![1, 0]);
    let fund2 = Coweight::new(vec![0, 1]);
    reports.push(verify::verify_tensor_estimate(
        &group, &fund1, &fund1, false,
    )?);
    reports.push(verify::verify_min_ext(&group, &fund1, &fund2)?);

    let mut all_ok = true;
    for r in &reports {
        let status = if r.all_pass() { "ok " } else { "FAIL" };
        all_ok &= r.all_pass();
        println!(
            "[{status}] {:<10} x={:<4} pass={:<3} fail={} inconclusive={} converse_examples={} ({} ms)",
            r.theorem,
            r.x.as_deref().unwrap_or("-"),
            r.summary.pass,
            r.summary.fail,
            r.summary.inconclusive,
            r.converse.len(),
            r.summary.wall_ms
        );
    }

    // a sample pass witness: the factorization certificate of some node
    if let Some(main) = reports
        .iter()
        .find(|r| r.theorem == "main" && !r.instances.is_empty())
    {
        println!(
            "\nsample witness from `{}` (x = {:?}):",
            main.theorem, main.x
        );
        let instance = main.instances.last().unwrap();
        println!("  {} -> {:?}", instance.id, instance.witness);
    }

    assert!(all_ok, "all suites must pass on A2 (1,1)");
    println!("\nall {} suites passed", reports.len());
    Ok(())
}
