//! Exports crystal graphs as Graphviz DOT and JSON files.
//!
//! Run with: `cargo run --example export_dot`
//! Then e.g.: `dot -Tpng /tmp/mvcr-exports/a2_adjoint.dot -o crystal.png`

use std::fs;
use std::path::PathBuf;

use mvcr::mvcrystal::MvCrystal;
use mvcr::rootdata::{Coweight, WeylGroup};

fn main() -> mvcr::Result<()> {
    let out_dir = PathBuf::from("/tmp/mvcr-exports");
    fs::create_dir_all(&out_dir)?;

    let jobs: &[(&str, Vec<i64>, &str)] = &[
        ("A2", vec![1, 1], "a2_adjoint"),
        ("A2", vec![2, 0], "a2_sym2"),
        ("A3", vec![1, 0, 0], "a3_vector"),
        ("A1xA1", vec![1, 1], "a1a1_box"),
    ];
    for (spec, lambda, name) in jobs {
        let group = WeylGroup::parse(spec)?;
        let lambda = Coweight::new(lambda.clone());
        let crystal = MvCrystal::generate(&group, &lambda)?;

        let dot_path = out_dir.join(format!("{name}.dot"));
        fs::write(&dot_path, crystal.to_dot(&group))?;

        let json_path = out_dir.join(format!("{name}.json"));
        fs::write(
            &json_path,
            serde_json::to_string_pretty(&crystal.to_json(&group))?,
        )?;

        // everything written is re-importable
        let text = fs::read_to_string(&json_path)?;
        let value: serde_json::Value = serde_json::from_str(&text)?;
        let back = MvCrystal::from_json(&group, &value)?;
        assert_eq!(back.len(), crystal.len());

        println!(
            "{spec} λ={lambda}: {} nodes -> {} / {}",
            crystal.len(),
            dot_path.display(),
            json_path.display()
        );
    }
    Ok(())
}
