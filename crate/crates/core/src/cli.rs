//! The `licci` command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::formats::{
    classify, enumerate_dynkin, format_of, listed_dynkin_formats, ResolutionFormat,
};
use crate::generators::{example, gorenstein_ideal, minors_2x2};
use crate::groebner::{hilbert, Ideal};
use crate::io::{ideal_to_json, read_ideal, read_matrix};
use crate::licci::{
    artinian_obstruction, check_dynkin_unobstructed, compressed_check, hu_obstruction,
    verify_prop_m, verify_prop_n, verify_reduction_table, SweepReport,
};
use crate::linkage::{
    direct_link, find_generic_link, link_by_move, realize_format, verify_move_algebra, FormatMove,
    LinkStep, RegularSequence,
};
use crate::poly::{Field, Ring};
use crate::resolution::{grade_and_perfection, resolve};
use crate::worked::{reproduce, Expected};

#[derive(Parser, Debug)]
#[command(
    name = "licci",
    version,
    about = "Resolutions, linkage and Dynkin formats of grade-3 perfect ideals"
)]
pub struct Cli {
    /// Coefficient field: QQ or Fp:<prime>.
    #[arg(long, global = true, default_value = "QQ")]
    pub field: String,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimal graded free resolution, format and Dynkin class.
    Resolve(IdealSource),
    /// Direct link by a given or a random regular sequence.
    Link {
        #[command(flatten)]
        source: IdealSource,
        /// The sequence, `p1;p2;p3`.
        #[arg(long, conflicts_with_all = ["degrees", "move_"])]
        seq: Option<String>,
        /// Degrees of a random sequence, `d1,d2,d3`.
        #[arg(long, value_delimiter = ',', conflicts_with = "move_")]
        degrees: Option<Vec<u32>>,
        /// A single-link format move, P22a or P22b.
        #[arg(long = "move", id = "move_")]
        move_: Option<FormatMove>,
    },
    /// Builds an ideal of the given format by a chain of links.
    Realize {
        #[arg(long)]
        format: ResolutionFormat,
    },
    /// Dynkin class and graph of a format `1,m,f2,n`.
    Classify { format: ResolutionFormat },
    /// The numerical obstruction to being licci.
    LicciCheck(IdealSource),
    /// Generates ideals.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Exhaustive checks.
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
    /// Runs the worked linkage chains against expected values.
    Reproduce {
        /// Expected values to use instead of the built-in ones.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct IdealSource {
    /// Generators, `p1;p2;...`, in X, Y, Z.
    #[arg(long)]
    pub gens: Option<String>,
    /// A JSON ideal file.
    #[arg(long)]
    pub ideal: Option<PathBuf>,
    /// A built-in example: N2, I_3_4, J_3_4, I_3_7, J_3_7.
    #[arg(long)]
    pub example: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// Submaximal Pfaffians of a random linear skew matrix.
    Gorenstein {
        #[arg(long)]
        m: usize,
    },
    /// 2x2 minors of a matrix of linear forms read from JSON.
    Minors {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// A built-in example ideal.
    Example { name: String },
}

#[derive(Subcommand, Debug)]
pub enum VerifyKind {
    /// Hilbert-function estimates for the E-type formats.
    Props {
        #[arg(long, default_value_t = 200)]
        smax: i64,
    },
    /// Dynkin formats by classification against the closed-form list.
    DynkinList {
        #[arg(long, default_value_t = 50)]
        max_m: usize,
        #[arg(long, default_value_t = 50)]
        max_n: usize,
    },
    /// Two-link moves against their single links, and the reduction table.
    Moves {
        #[arg(long, default_value_t = 30)]
        max: usize,
    },
}

/// Output of one command: text or JSON, and whether every check passed.
struct Outcome {
    text: String,
    json: Value,
    passed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome {
            text,
            json,
            passed: true,
        }
    }
}

/// Parses `args` (program name first), runs the command and writes its
/// report to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = if cli.json {
                let mut doc = outcome.json;
                doc["schema"] = json!(1);
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                )
            } else {
                writeln!(out, "{}", outcome.text.trim_end())
            };
            if written.is_err() {
                return 2;
            }
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) | Error::RetriesExhausted { .. } | Error::Internal(_) => 1,
        _ => 2,
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let field = Field::parse_tag(&cli.field)?;
    if cli.jobs == 0 {
        return Err(Error::Precondition("--jobs must be positive".into()));
    }
    // A pool may already exist when running inside another program.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build_global();
    match &cli.command {
        Command::Resolve(src) => cmd_resolve(&load(src, field)?),
        Command::Link {
            source,
            seq,
            degrees,
            move_,
        } => cmd_link(
            &load(source, field)?,
            seq.as_deref(),
            degrees.as_deref(),
            *move_,
            cli.seed,
        ),
        Command::Realize { format } => cmd_realize(*format, field, cli.seed),
        Command::Classify { format } => Ok(cmd_classify(*format)),
        Command::LicciCheck(src) => cmd_licci_check(&load(src, field)?),
        Command::Gen { kind } => cmd_gen(kind, field, cli.seed),
        Command::Verify { kind } => cmd_verify(kind),
        Command::Reproduce { expected } => cmd_reproduce(expected.as_ref(), field),
    }
}

fn load(src: &IdealSource, field: Field) -> Result<Ideal> {
    if let Some(gens) = &src.gens {
        let ring = Ring::xyz(field);
        let list: Vec<&str> = gens
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        Ideal::from_strs(&ring, &list)
    } else if let Some(path) = &src.ideal {
        read_ideal(path, Some(field))
    } else if let Some(name) = &src.example {
        example(name, field)
    } else {
        Err(Error::Precondition("no ideal given".into()))
    }
}

fn gens_text(ideal: &Ideal) -> String {
    ideal
        .gens()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

fn cmd_resolve(ideal: &Ideal) -> Result<Outcome> {
    let table = resolve(ideal)?.betti_table();
    let mut text = format!("{table}\ntwists: {}\n", table.compact());
    let mut doc =
        json!({"command": "resolve", "ideal": ideal_to_json(ideal), "betti": table.to_json()});
    if let Ok(f) = format_of(&table) {
        let class = classify(f);
        text.push_str(&format!("format: {f}\nclass: {class}\n"));
        doc["format"] = f.to_json();
    }
    Ok(Outcome::ok(text, doc))
}

fn step_text(step: &LinkStep) -> String {
    let fmt = |f: Option<ResolutionFormat>| f.map_or("-".to_string(), |f| f.to_string());
    let seq: Vec<String> = step
        .sequence
        .elements()
        .iter()
        .map(ToString::to_string)
        .collect();
    let mut text = format!(
        "{} --[{}]--> {}",
        fmt(step.source_format()),
        seq.join("; "),
        fmt(step.target_format())
    );
    if step.terminal {
        text.push_str(" (unit ideal)");
    } else {
        text.push_str(&format!(
            "\n  linked ideal: {}",
            gens_text(&step.target.minimalized())
        ));
        if let Some(t) = &step.target_table {
            text.push_str(&format!("\n  twists: {}", t.compact()));
        }
        text.push_str(&format!(
            "\n  predicted: {}, double link: {}",
            fmt(step.predicted),
            if step.double_link_verified {
                "ok"
            } else {
                "FAILED"
            }
        ));
    }
    text
}

fn cmd_link(
    ideal: &Ideal,
    seq: Option<&str>,
    degrees: Option<&[u32]>,
    mv: Option<FormatMove>,
    seed: u64,
) -> Result<Outcome> {
    let step = match (seq, degrees, mv) {
        (Some(seq), _, _) => direct_link(ideal, &RegularSequence::parse(seq, ideal.ring())?)?,
        (_, Some(&[a, b, c]), _) => find_generic_link(ideal, [a, b, c], seed)?,
        (_, Some(_), _) => return Err(Error::Precondition("--degrees needs three values".into())),
        (_, _, Some(mv)) => link_by_move(ideal, mv, seed)?,
        _ => {
            return Err(Error::Precondition(
                "give --seq, --degrees or --move".into(),
            ))
        }
    };
    let passed = step.terminal || step.double_link_verified;
    Ok(Outcome {
        text: step_text(&step),
        json: json!({"command": "link", "steps": [step.to_json()]}),
        passed,
    })
}

fn cmd_realize(format: ResolutionFormat, field: Field, seed: u64) -> Result<Outcome> {
    let ring = Ring::xyz(field);
    let r = realize_format(format, &ring, seed)?;
    let mut text = format!("start: Gorenstein {}\n", r.start);
    for step in &r.steps {
        text.push_str(&step_text(step));
        text.push('\n');
    }
    let table = resolve(&r.ideal)?.betti_table();
    let reached = format_of(&table)?;
    text.push_str(&format!(
        "result: {}\nformat: {reached}\n",
        gens_text(&r.ideal)
    ));
    let passed = reached == format && r.steps.iter().all(|s| s.double_link_verified);
    Ok(Outcome {
        text,
        json: json!({
            "command": "realize",
            "format": format.to_json(),
            "start": r.start.ranks(),
            "steps": r.steps.iter().map(LinkStep::to_json).collect::<Vec<_>>(),
            "ideal": ideal_to_json(&r.ideal),
            "betti": table.to_json(),
        }),
        passed,
    })
}

fn cmd_classify(f: ResolutionFormat) -> Outcome {
    let class = classify(f);
    let graph = f.graph();
    let text = format!("{f}: {class}, arms {:?}\n{}\n", graph.arms, graph.render());
    let mut doc = f.to_json();
    doc["command"] = json!("classify");
    Outcome::ok(text, doc)
}

fn cmd_licci_check(ideal: &Ideal) -> Result<Outcome> {
    let table = resolve(ideal)?.betti_table();
    let perfection = grade_and_perfection(ideal)?;
    if perfection.grade != 3 || !perfection.is_perfect {
        return Err(Error::Precondition(format!(
            "not a grade-3 perfect ideal (grade {}, projective dimension {})",
            perfection.grade, perfection.projective_dimension
        )));
    }
    let f = format_of(&table)?;
    let report = hu_obstruction(&table)?;
    let mut text = format!(
        "format: {f} ({})\ntwists: {}\nd_1,1 = {}, d_3,n = {}, margin = {}\nverdict: {:?}\n",
        classify(f),
        table.compact(),
        report.d_min,
        report.d_top,
        report.margin,
        report.verdict
    );
    let mut doc = json!({
        "command": "licci-check",
        "format": f.to_json(),
        "betti": table.to_json(),
        "obstruction": report,
    });
    let mut passed = true;
    if ideal.is_artinian() && ideal.ring().num_vars() == 3 {
        let verdict = artinian_obstruction(ideal)?;
        let profile = compressed_check(ideal)?;
        text.push_str(&format!(
            "hilbert function: {:?}\nsocle polynomial: {:?}\ncompressed: {}\n",
            profile.hilbert, profile.socle_coefficients, profile.is_compressed
        ));
        if verdict != report.verdict {
            passed = false;
            text.push_str("socle-degree form of the test disagrees\n");
        }
        doc["compressed"] = serde_json::to_value(&profile)?;
        doc["hilbert"] = json!(hilbert(ideal)?.values);
    }
    if let Ok(unobstructed) = check_dynkin_unobstructed(&table) {
        text.push_str(&format!("d_3,n > d_1,1 + d_1,2: {unobstructed}\n"));
        if !unobstructed {
            passed = false;
            text.push_str("counterexample to the E-type estimate\n");
        }
        doc["unobstructed"] = json!(unobstructed);
    }
    Ok(Outcome {
        text,
        json: doc,
        passed,
    })
}

fn cmd_gen(kind: &GenKind, field: Field, seed: u64) -> Result<Outcome> {
    let ideal = match kind {
        GenKind::Gorenstein { m } => gorenstein_ideal(*m, &Ring::xyz(field), seed)?,
        GenKind::Minors { matrix } => minors_2x2(&read_matrix(matrix, Some(field))?)?,
        GenKind::Example { name } => example(name, field)?,
    };
    let mut doc = ideal_to_json(&ideal);
    doc["command"] = json!("gen");
    Ok(Outcome::ok(format!("{}\n", gens_text(&ideal)), doc))
}

fn sweep_text(r: &SweepReport) -> String {
    let mut text = format!(
        "{}: {} checks, {} failures, s <= {}: {}\n",
        r.statement,
        r.checks,
        r.failures.len(),
        r.s_max,
        if r.passed() { "PASS" } else { "FAIL" }
    );
    for f in r.failures.iter().take(10) {
        text.push_str(&format!(
            "  s = {}, d = {}, {}, {}: {}\n",
            f.s, f.d, f.case, f.check, f.detail
        ));
    }
    if r.failures.len() > 10 {
        text.push_str(&format!("  ... {} more\n", r.failures.len() - 10));
    }
    text
}

fn cmd_verify(kind: &VerifyKind) -> Result<Outcome> {
    match kind {
        VerifyKind::Props { smax } => {
            let reports = [verify_prop_m(*smax)?, verify_prop_n(*smax)?];
            let passed = reports.iter().all(SweepReport::passed);
            Ok(Outcome {
                text: reports.iter().map(sweep_text).collect(),
                json: json!({"command": "verify props", "passed": passed, "reports": reports}),
                passed,
            })
        }
        VerifyKind::DynkinList { max_m, max_n } => {
            if *max_m < 3 || *max_n < 1 {
                return Err(Error::Precondition(
                    "bounds need max-m >= 3 and max-n >= 1".into(),
                ));
            }
            let found = enumerate_dynkin(*max_m, *max_n, true);
            let listed = listed_dynkin_formats(*max_m, *max_n);
            let passed = found == listed;
            let mut text = String::new();
            for (f, c) in &found {
                text.push_str(&format!("{f} {c}\n"));
            }
            text.push_str(&format!(
                "{} realizable Dynkin formats; list agrees: {}\n",
                found.len(),
                if passed { "PASS" } else { "FAIL" }
            ));
            let entries: Vec<Value> = found
                .iter()
                .map(|(f, c)| json!({"format": f.ranks(), "class": c.to_string()}))
                .collect();
            Ok(Outcome {
                text,
                json: json!({"command": "verify dynkin-list", "passed": passed, "formats": entries}),
                passed,
            })
        }
        VerifyKind::Moves { max } => {
            let mut failures = verify_move_algebra(*max);
            failures.extend(verify_reduction_table(*max));
            let passed = failures.is_empty();
            let mut text: String = failures.iter().map(|f| format!("{f}\n")).collect();
            text.push_str(&format!(
                "move compositions and reduction table up to {max}: {}\n",
                if passed { "PASS" } else { "FAIL" }
            ));
            Ok(Outcome {
                text,
                json: json!({"command": "verify moves", "passed": passed, "failures": failures}),
                passed,
            })
        }
    }
}

fn cmd_reproduce(expected: Option<&PathBuf>, field: Field) -> Result<Outcome> {
    let expected = match expected {
        Some(path) => Expected::from_json(&std::fs::read_to_string(path)?)?,
        None => Expected::builtin(),
    };
    let reports = reproduce(&expected, field)?;
    let passed = reports.iter().all(|r| r.passed);
    let text = reports.iter().map(|r| format!("{r}\n")).collect();
    Ok(Outcome {
        text,
        json: json!({"command": "reproduce", "passed": passed, "results": reports}),
        passed,
    })
}
