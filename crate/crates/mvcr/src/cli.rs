//! Command-line front end: configuration, batch verification, and
//! crystal/polytope export.
//!
//! Weyl elements are entered as words in the generators (`"121"` or
//! `"1,2,1"`, `"e"` for the identity) and canonicalized internally.
//! `λ` is entered in fundamental-coweight coordinates — the same basis the
//! library uses everywhere. A config file (TOML or JSON) can mirror every
//! flag; explicit flags win. `MVCR_NMAX` is the fallback for `--nmax`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::demazure::{demazure_set, opposite_demazure_member};
use crate::extremal::ExtremalFamily;
use crate::mvcrystal::MvCrystal;
use crate::rootdata::{Coweight, WeylElt, WeylGroup};
use crate::verify::{self, VerificationReport};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "mvcr",
    about = "Exact MV-polytope combinatorics: crystals, Demazure sets, and theorem verification",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate MV(lambda) and export it as JSON, DOT or TSV.
    Crystal(CommonArgs),
    /// Run a theorem suite: main, corollary, tensor, minext, sanity, or all.
    Verify {
        /// main | corollary | tensor | minext | sanity | all
        theorem: String,
        #[command(flatten)]
        args: CommonArgs,
    },
    /// List the members of a Demazure crystal MV_x(lambda).
    Demazure(CommonArgs),
}

#[derive(Args, Debug, Default, Clone)]
pub struct CommonArgs {
    /// Cartan type string such as A2, D4 or A1xA1.
    #[arg(long)]
    cartan: Option<String>,
    /// Dominant coweight in fundamental-coweight coordinates, e.g. 1,1.
    #[arg(long)]
    lambda: Option<String>,
    /// Weyl element as a word in the generators, e.g. 121 or 1,2,1.
    #[arg(long)]
    x: Option<String>,
    /// First tensor weight (tensor/minext suites).
    #[arg(long)]
    lambda1: Option<String>,
    /// Second tensor weight (tensor/minext suites).
    #[arg(long)]
    lambda2: Option<String>,
    /// Cap for the K_N factorization search.
    #[arg(long, env = "MVCR_NMAX")]
    nmax: Option<u32>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
    /// json | dot | tsv
    #[arg(long)]
    format: Option<String>,
    /// Worker threads for instance-level parallelism (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Also scan tensor components whose second factor is not extremal.
    #[arg(long)]
    conjecture: bool,
    /// TOML or JSON file mirroring these flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    cartan: Option<String>,
    lambda: Option<String>,
    x: Option<String>,
    lambda1: Option<String>,
    lambda2: Option<String>,
    nmax: Option<u32>,
    output: Option<PathBuf>,
    format: Option<String>,
    jobs: Option<usize>,
    conjecture: Option<bool>,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Json,
    Dot,
    Tsv,
}

/// Fully resolved and validated run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub cartan: String,
    pub lambda: Vec<i64>,
    pub x: Option<String>,
    pub lambda1: Option<Vec<i64>>,
    pub lambda2: Option<Vec<i64>>,
    pub n_max: u32,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    pub jobs: usize,
    pub conjecture: bool,
}

fn config_err(field: &str, message: impl Into<String>) -> Error {
    Error::Config {
        field: field.into(),
        message: message.into(),
    }
}

fn parse_coords(field: &str, s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| config_err(field, format!("`{t}` is not an integer")))
        })
        .collect()
}

impl RunConfig {
    /// Merges config-file values under explicit flags and validates every
    /// field against the chosen Cartan datum.
    pub fn resolve(args: &CommonArgs) -> Result<RunConfig> {
        let file: FileConfig = match &args.config {
            None => FileConfig::default(),
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                if path.extension().and_then(|e| e.to_str()) == Some("json") {
                    serde_json::from_str(&text).map_err(|e| config_err("config", e.to_string()))?
                } else {
                    toml::from_str(&text).map_err(|e| config_err("config", e.to_string()))?
                }
            }
        };
        let cartan = args
            .cartan
            .clone()
            .or(file.cartan)
            .ok_or_else(|| config_err("cartan", "missing (e.g. --cartan A2)"))?;
        let group = WeylGroup::parse(&cartan)?;
        let rank = group.rank();

        let lambda_str = args.lambda.clone().or(file.lambda);
        let lambda = match &lambda_str {
            Some(s) => parse_coords("lambda", s)?,
            None => vec![0; rank],
        };
        let check_weight = |field: &str, v: &[i64]| -> Result<()> {
            if v.len() != rank {
                return Err(config_err(field, format!("expected {rank} coordinates")));
            }
            if v.iter().any(|&c| c < 0) {
                return Err(config_err(field, "coweight must be dominant"));
            }
            Ok(())
        };
        check_weight("lambda", &lambda)?;

        let x = args.x.clone().or(file.x);
        if let Some(word) = &x {
            group.parse_word(word)?;
        }
        let lambda1 = match args.lambda1.clone().or(file.lambda1) {
            Some(s) => {
                let v = parse_coords("lambda1", &s)?;
                check_weight("lambda1", &v)?;
                Some(v)
            }
            None => None,
        };
        let lambda2 = match args.lambda2.clone().or(file.lambda2) {
            Some(s) => {
                let v = parse_coords("lambda2", &s)?;
                check_weight("lambda2", &v)?;
                Some(v)
            }
            None => None,
        };
        let format = match args.format.clone().or(file.format).as_deref() {
            None | Some("json") => OutputFormat::Json,
            Some("dot") => OutputFormat::Dot,
            Some("tsv") => OutputFormat::Tsv,
            Some(other) => {
                return Err(config_err(
                    "format",
                    format!("`{other}` is not json|dot|tsv"),
                ))
            }
        };
        let n_max = args.nmax.or(file.nmax).unwrap_or(24);
        if n_max == 0 {
            return Err(config_err("nmax", "must be at least 1"));
        }
        Ok(RunConfig {
            cartan,
            lambda,
            x,
            lambda1,
            lambda2,
            n_max,
            output: args.output.clone().or(file.output),
            format,
            jobs: args.jobs.or(file.jobs).unwrap_or(0),
            conjecture: args.conjecture || file.conjecture.unwrap_or(false),
        })
    }

    fn group(&self) -> Result<WeylGroup> {
        WeylGroup::parse(&self.cartan)
    }

    fn lambda_cw(&self) -> Coweight {
        Coweight::new(self.lambda.clone())
    }

    fn x_elt(&self, group: &WeylGroup) -> Result<Option<WeylElt>> {
        match &self.x {
            None => Ok(None),
            Some(word) => Ok(Some(group.eval_word(&group.parse_word(word)?))),
        }
    }

    fn init_pool(&self) {
        if self.jobs > 0 {
            // best effort: the global pool may already exist
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build_global();
        }
    }
}

fn emit(config: &RunConfig, payload: &str) -> Result<()> {
    match &config.output {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(payload.as_bytes())?;
            if !payload.ends_with('\n') {
                out.write_all(b"\n")?;
            }
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, payload)?;
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// crystal
// ---------------------------------------------------------------------------

/// Renders MV(lambda) in the configured format.
pub fn cmd_crystal(config: &RunConfig) -> Result<String> {
    let group = config.group()?;
    let crystal = MvCrystal::generate(&group, &config.lambda_cw())?;
    let base = group.move_graph().words()[0].clone();
    Ok(match config.format {
        OutputFormat::Json => serde_json::to_string_pretty(&crystal.to_json(&group))?,
        OutputFormat::Dot => crystal.to_dot(&group),
        OutputFormat::Tsv => {
            let mut rows = vec![{
                let mut header = vec!["id".to_string(), "weight".into(), "lusztig".into()];
                for j in 1..=group.rank() {
                    header.push(format!("eps{j}"));
                    header.push(format!("phi{j}"));
                    header.push(format!("f{j}"));
                }
                header.join("\t")
            }];
            for (k, p) in crystal.nodes().iter().enumerate() {
                let mut row = vec![
                    k.to_string(),
                    p.wt(&group).to_string(),
                    format!("{:?}", p.lusztig(&group, &base).lengths()),
                ];
                for j in 0..group.rank() {
                    row.push(p.epsilon(&group, j).to_string());
                    row.push(p.phi(&group, j).to_string());
                    row.push(
                        crystal
                            .f_idx(k, j)
                            .map(|t| t.to_string())
                            .unwrap_or_else(|| "-".into()),
                    );
                }
                rows.push(row.join("\t"));
            }
            rows.join("\n")
        }
    })
}

// ---------------------------------------------------------------------------
// demazure
// ---------------------------------------------------------------------------

/// Lists MV_x(lambda): member nodes, Lusztig data on the base word,
/// extremality flags, and containment against `P_{x·λ}`.
pub fn cmd_demazure(config: &RunConfig) -> Result<String> {
    let group = config.group()?;
    let lambda = config.lambda_cw();
    let crystal = MvCrystal::generate(&group, &lambda)?;
    let x = config
        .x_elt(&group)?
        .ok_or_else(|| config_err("x", "demazure needs --x"))?;
    let rep = group.min_coset_rep_of(x, &lambda)?;
    if rep != x {
        eprintln!(
            "note: x = {} reduced to its minimal coset representative {}",
            group.elt_string(x),
            group.elt_string(rep)
        );
    }
    let set = demazure_set(&group, &crystal, rep)?;
    let family = ExtremalFamily::new(&group, &lambda)?;
    let base = group.move_graph().words()[0].clone();
    let extremal_x = crate::extremal::extremal_polytope(&group, rep, &lambda)?;

    let mut members = Vec::new();
    for &k in &set.members {
        let p = crystal.node(k);
        members.push(json!({
            "node": k,
            "weight": p.wt(&group).coords,
            "lusztig": p.lusztig(&group, &base).lengths(),
            "extremal": family.is_extremal(p).map(|w| group.elt_string(w)),
            "contained_in_extremal": extremal_x.polytope().contains(&group, p.polytope()),
            "opposite_member": opposite_demazure_member(&group, p, rep)?,
        }));
    }
    let doc = json!({
        "cartan": group.cartan().descriptor(),
        "lambda": lambda.coords,
        "x": group.elt_string(rep),
        "base_word": group.word_to_string(base.letters()),
        "members": members,
    });
    Ok(match config.format {
        OutputFormat::Json => serde_json::to_string_pretty(&doc)?,
        OutputFormat::Tsv => {
            let mut rows =
                vec!["node\tweight\tlusztig\textremal\tcontained_in_extremal".to_string()];
            for m in doc["members"].as_array().unwrap() {
                rows.push(format!(
                    "{}\t{}\t{}\t{}\t{}",
                    m["node"],
                    m["weight"],
                    m["lusztig"],
                    m["extremal"].as_str().unwrap_or("-"),
                    m["contained_in_extremal"]
                ));
            }
            rows.join("\n")
        }
        OutputFormat::Dot => {
            return Err(config_err("format", "demazure listings support json|tsv"))
        }
    })
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn x_range(group: &WeylGroup, config: &RunConfig, lambda: &Coweight) -> Result<Vec<WeylElt>> {
    match config.x_elt(group)? {
        Some(x) => Ok(vec![group.min_coset_rep_of(x, lambda)?]),
        None => group.min_coset_reps(lambda),
    }
}

fn tensor_pair(config: &RunConfig) -> (Vec<i64>, Vec<i64>) {
    let l1 = config
        .lambda1
        .clone()
        .unwrap_or_else(|| config.lambda.clone());
    let l2 = config
        .lambda2
        .clone()
        .unwrap_or_else(|| config.lambda.clone());
    (l1, l2)
}

/// Runs the selected theorem suite(s) and returns the reports.
pub fn run_verify(theorem: &str, config: &RunConfig) -> Result<Vec<VerificationReport>> {
    let group = config.group()?;
    let lambda = config.lambda_cw();
    let mut reports = Vec::new();
    let theorems: Vec<&str> = match theorem {
        "all" => vec![
            "sanity",
            "demazure",
            "main",
            "corollary",
            "tensor",
            "minext",
        ],
        name => vec![name],
    };
    for name in theorems {
        match name {
            "main" => {
                for x in x_range(&group, config, &lambda)? {
                    reports.push(verify::verify_main_theorem(
                        &group,
                        &lambda,
                        x,
                        config.n_max,
                    )?);
                }
            }
            "corollary" => {
                for x in x_range(&group, config, &lambda)? {
                    reports.push(verify::verify_corollary(&group, &lambda, x)?);
                }
            }
            "tensor" => {
                let (l1, l2) = tensor_pair(config);
                reports.push(verify::verify_tensor_estimate(
                    &group,
                    &Coweight::new(l1),
                    &Coweight::new(l2),
                    config.conjecture,
                )?);
            }
            "minext" => {
                let (l1, l2) = tensor_pair(config);
                reports.push(verify::verify_min_ext(
                    &group,
                    &Coweight::new(l1),
                    &Coweight::new(l2),
                )?);
            }
            "sanity" => reports.push(verify::crystal_sanity(&group, &lambda)?),
            "demazure" => reports.push(verify::verify_demazure(&group, &lambda)?),
            other => {
                return Err(config_err(
                    "theorem",
                    format!("`{other}` is not main|corollary|tensor|minext|sanity|all"),
                ))
            }
        }
    }
    Ok(reports)
}

/// Exit code policy: 1 on any fail, else 2 on any inconclusive, else 0.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.has_fail()) {
        1
    } else if reports.iter().any(|r| r.has_inconclusive()) {
        2
    } else {
        0
    }
}

fn render_reports(config: &RunConfig, reports: &[VerificationReport]) -> Result<String> {
    Ok(match config.format {
        OutputFormat::Json => serde_json::to_string_pretty(&Value::Array(
            reports
                .iter()
                .map(|r| serde_json::to_value(r).unwrap())
                .collect(),
        ))?,
        OutputFormat::Tsv => {
            let mut rows = vec!["theorem\tx\tinstance\tstatus".to_string()];
            for r in reports {
                for i in &r.instances {
                    rows.push(format!(
                        "{}\t{}\t{}\t{:?}",
                        r.theorem,
                        r.x.as_deref().unwrap_or("-"),
                        i.id,
                        i.status
                    ));
                }
            }
            rows.join("\n")
        }
        OutputFormat::Dot => {
            return Err(config_err(
                "format",
                "verification reports support json|tsv",
            ))
        }
    })
}

fn summarize(reports: &[VerificationReport]) {
    for r in reports {
        let mut line = format!("{}: cartan={} lambda={:?}", r.theorem, r.cartan, r.lambda);
        if let Some(x) = &r.x {
            line.push_str(&format!(" x={x}"));
        }
        if let Some(l2) = &r.lambda2 {
            line.push_str(&format!(" lambda2={l2:?}"));
        }
        line.push_str(&format!(
            " -> pass={} fail={} inconclusive={}",
            r.summary.pass, r.summary.fail, r.summary.inconclusive
        ));
        if !r.converse.is_empty() {
            line.push_str(&format!(" converse_examples={}", r.converse.len()));
        }
        line.push_str(&format!(" ({} ms)", r.summary.wall_ms));
        eprintln!("{line}");
    }
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

/// Parses arguments, runs the command, and returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Crystal(args) => {
            let config = RunConfig::resolve(&args)?;
            config.init_pool();
            let payload = cmd_crystal(&config)?;
            emit(&config, &payload)?;
            Ok(0)
        }
        Command::Demazure(args) => {
            let config = RunConfig::resolve(&args)?;
            config.init_pool();
            let payload = cmd_demazure(&config)?;
            emit(&config, &payload)?;
            Ok(0)
        }
        Command::Verify { theorem, args } => {
            let config = RunConfig::resolve(&args)?;
            config.init_pool();
            let reports = run_verify(&theorem, &config)?;
            let payload = render_reports(&config, &reports)?;
            emit(&config, &payload)?;
            summarize(&reports);
            for r in &reports {
                for i in &r.instances {
                    if i.status == verify::Status::Inconclusive {
                        eprintln!(
                            "inconclusive: {} instance {} ({:?})",
                            r.theorem, i.id, i.witness
                        );
                    }
                }
            }
            Ok(exit_code(&reports))
        }
    }
}

/// Round-trips exported verification reports (used by tests and tooling).
pub fn parse_reports(text: &str) -> Result<Vec<VerificationReport>> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(pairs: &[(&str, &str)]) -> CommonArgs {
        let mut a = CommonArgs::default();
        for (k, v) in pairs {
            match *k {
                "cartan" => a.cartan = Some(v.to_string()),
                "lambda" => a.lambda = Some(v.to_string()),
                "x" => a.x = Some(v.to_string()),
                "lambda1" => a.lambda1 = Some(v.to_string()),
                "lambda2" => a.lambda2 = Some(v.to_string()),
                "nmax" => a.nmax = Some(v.parse().unwrap()),
                "format" => a.format = Some(v.to_string()),
                _ => panic!("unknown key {k}"),
            }
        }
        a
    }

    #[test]
    fn resolve_validates_fields() {
        let ok = RunConfig::resolve(&args(&[("cartan", "A2"), ("lambda", "1,1")])).unwrap();
        assert_eq!(ok.lambda, vec![1, 1]);
        assert_eq!(ok.n_max, 24);

        let missing = RunConfig::resolve(&args(&[("lambda", "1,1")]));
        assert!(matches!(missing, Err(Error::Config { field, .. }) if field == "cartan"));

        let bad_rank = RunConfig::resolve(&args(&[("cartan", "A2"), ("lambda", "1")]));
        assert!(matches!(bad_rank, Err(Error::Config { field, .. }) if field == "lambda"));

        let not_dominant = RunConfig::resolve(&args(&[("cartan", "A2"), ("lambda", "-1,0")]));
        assert!(matches!(not_dominant, Err(Error::Config { field, .. }) if field == "lambda"));

        let bad_format = RunConfig::resolve(&args(&[
            ("cartan", "A2"),
            ("lambda", "1,1"),
            ("format", "yaml"),
        ]));
        assert!(matches!(bad_format, Err(Error::Config { field, .. }) if field == "format"));

        let b2 = RunConfig::resolve(&args(&[("cartan", "B2"), ("lambda", "1,1")]));
        assert!(matches!(b2, Err(Error::NonSimplyLaced(_))));
    }

    #[test]
    fn crystal_outputs() {
        let config = RunConfig::resolve(&args(&[("cartan", "A2"), ("lambda", "1,1")])).unwrap();
        let json_text = cmd_crystal(&config).unwrap();
        let value: Value = serde_json::from_str(&json_text).unwrap();
        assert_eq!(value["nodes"].as_array().unwrap().len(), 8);
        // re-import round-trips
        let group = WeylGroup::parse("A2").unwrap();
        let back = MvCrystal::from_json(&group, &value).unwrap();
        assert_eq!(back.len(), 8);

        let dot_config = RunConfig::resolve(&args(&[
            ("cartan", "A2"),
            ("lambda", "1,1"),
            ("format", "dot"),
        ]))
        .unwrap();
        let dot = cmd_crystal(&dot_config).unwrap();
        assert!(dot.starts_with("digraph"));

        let zero = RunConfig::resolve(&args(&[("cartan", "A2"), ("lambda", "0,0")])).unwrap();
        let v: Value = serde_json::from_str(&cmd_crystal(&zero).unwrap()).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn output_is_byte_stable() {
        let config = RunConfig::resolve(&args(&[("cartan", "A2"), ("lambda", "1,1")])).unwrap();
        assert_eq!(cmd_crystal(&config).unwrap(), cmd_crystal(&config).unwrap());
        let reports1 = run_verify("corollary", &config).unwrap();
        let reports2 = run_verify("corollary", &config).unwrap();
        let r1 = render_reports(&config, &reports1).unwrap();
        let r2 = render_reports(&config, &reports2).unwrap();
        // wall time differs; compare with the timing stripped
        let strip = |s: &str| {
            s.lines()
                .filter(|l| !l.contains("wall_ms"))
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(strip(&r1), strip(&r2));
    }

    #[test]
    fn demazure_listing() {
        let config =
            RunConfig::resolve(&args(&[("cartan", "A2"), ("lambda", "1,1"), ("x", "1")])).unwrap();
        let text = cmd_demazure(&config).unwrap();
        let doc: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["members"].as_array().unwrap().len(), 2);
        assert!(doc["members"]
            .as_array()
            .unwrap()
            .iter()
            .all(|m| m["contained_in_extremal"] == json!(true)));
        // the listing re-imports to the library object it came from
        let group = WeylGroup::parse("A2").unwrap();
        let lambda = Coweight::new(vec![1, 1]);
        let crystal = MvCrystal::generate(&group, &lambda).unwrap();
        let x = group.eval_word(&group.parse_word(doc["x"].as_str().unwrap()).unwrap());
        let rebuilt = demazure_set(&group, &crystal, x).unwrap();
        let listed: Vec<usize> = doc["members"]
            .as_array()
            .unwrap()
            .iter()
            .map(|m| m["node"].as_u64().unwrap() as usize)
            .collect();
        assert_eq!(rebuilt.members, listed);
    }

    #[test]
    fn verify_all_passes_on_a2() {
        let config = RunConfig::resolve(&args(&[
            ("cartan", "A2"),
            ("lambda", "1,1"),
            ("nmax", "24"),
        ]))
        .unwrap();
        let reports = run_verify("all", &config).unwrap();
        assert_eq!(exit_code(&reports), 0, "{reports:?}");
        let text = render_reports(&config, &reports).unwrap();
        let back = parse_reports(&text).unwrap();
        assert_eq!(back.len(), reports.len());
    }

    #[test]
    fn nmax_cap_reports_inconclusive() {
        let config = RunConfig::resolve(&args(&[
            ("cartan", "A2"),
            ("lambda", "1,1"),
            ("nmax", "1"),
            ("x", "121"),
        ]))
        .unwrap();
        let reports = run_verify("main", &config).unwrap();
        assert_eq!(exit_code(&reports), 2);
        assert!(reports[0].has_inconclusive());
        assert!(!reports[0].has_fail());
    }

    #[test]
    fn config_file_merges_under_flags() {
        let dir = std::env::temp_dir().join("mvcr-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.toml");
        std::fs::write(&path, "cartan = \"A2\"\nlambda = \"1,0\"\nnmax = 7\n").unwrap();
        let mut a = args(&[("lambda", "1,1")]);
        a.config = Some(path);
        let config = RunConfig::resolve(&a).unwrap();
        assert_eq!(config.cartan, "A2");
        assert_eq!(config.lambda, vec![1, 1]); // flag wins
        assert_eq!(config.n_max, 7);
    }
}
