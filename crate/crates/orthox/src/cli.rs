//! The `orthox` command line.

use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use orthox_core::checks::run_checks;
use orthox_core::{
    band_diagram, canonical_inverse, classify_relation, idempotents_window, infer_family,
    is_idempotent, multiply, parse_word, reduce, related, verify_reducer, y_image, Bound, Element,
    FamilySpec, Green, Relation, YImage,
};
use serde_json::json;

use crate::json;
use crate::render::{band_dot, band_text, eggbox_grid, grid_ascii, EggboxWindow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Dot,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "orthox",
    version,
    about = "Compute in bisimple monogenic orthodox semigroups"
)]
struct Cli {
    /// Combinatorial family O(n,m), written n,m (each a positive integer or inf)
    #[arg(long, global = true, value_name = "N,M", value_parser = parse_pair, conflicts_with = "group_case")]
    family: Option<(Bound, Bound)>,

    /// Group case 1-4 (1: neither absorption, 2: ab^2=b, 3: a^2b=a, 4: both)
    #[arg(long, global = true, value_name = "C", value_parser = clap::value_parser!(u8).range(1..=4))]
    group_case: Option<u8>,

    /// Order of a in a group case
    #[arg(long, global = true, value_name = "D", value_parser = parse_bound, requires = "group_case")]
    order: Option<Bound>,

    #[arg(long, global = true, value_enum, default_value = "ascii")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical form of a word
    Reduce { word: String },
    /// Product of two or more words
    Mul {
        #[arg(num_args = 2.., required = true)]
        words: Vec<String>,
    },
    /// Canonical inverse (the mirrored canonical word)
    Inv { word: String },
    /// Whether two words name the same element
    Eq { u: String, v: String },
    /// Green's relation test
    Green {
        #[arg(long, value_parser = parse_green)]
        rel: Green,
        u: String,
        v: String,
    },
    /// Idempotency test, or the idempotents of a window when no word is given
    Idem {
        word: Option<String>,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// Eggbox picture around the center cell ab
    Eggbox {
        /// Rows up, rows down, columns left, columns right
        #[arg(long, value_name = "U,D,L,R", value_parser = parse_window, default_value = "3,3,3,3")]
        window: EggboxWindow,
        /// Members listed per H-class in group cases
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
    /// Band of idempotents with its natural order and R/L pairs
    Band {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,
    },
    /// Image under the least inverse congruence
    Image { word: String },
    /// Classify the relation u = v added to O(inf,inf)
    Classify { u: String, v: String },
    /// Recognize the family presented by extra relations
    Infer {
        #[arg(long = "rel", value_name = "U=V")]
        rels: Vec<String>,
    },
    /// Compare the reducer with brute-force closure and run property checks
    Verify {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
        max_len: u64,
        /// Length cap for the closure (default max-len + 4)
        #[arg(long)]
        cap: Option<u64>,
    },
}

fn parse_bound(s: &str) -> Result<Bound, String> {
    s.parse::<Bound>().map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<(Bound, Bound), String> {
    let (n, m) = s.split_once(',').ok_or("expected n,m")?;
    Ok((parse_bound(n)?, parse_bound(m)?))
}

fn parse_green(s: &str) -> Result<Green, String> {
    s.parse::<Green>().map_err(|e| e.to_string())
}

fn parse_window(s: &str) -> Result<EggboxWindow, String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad window count {p:?}"))
        })
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [u, d, l, r] => Ok(EggboxWindow::new(u, d, l, r)),
        _ => Err("expected four counts u,d,l,r".into()),
    }
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<orthox_core::Error> for Failure {
    fn from(e: orthox_core::Error) -> Failure {
        let debug = format!("{e:?}");
        let name = debug
            .split(['(', ' '])
            .next()
            .unwrap_or("Error")
            .to_string();
        Failure::Domain(format!("{name}: {e}"))
    }
}

impl From<crate::render::RenderError> for Failure {
    fn from(e: crate::render::RenderError) -> Failure {
        Failure::Domain(format!("WindowExceedsBounds: {e}"))
    }
}

struct Ctx {
    family: FamilySpec,
    format: Format,
    out: String,
    err: String,
}

impl Ctx {
    fn element(&self, text: &str) -> Result<Element, Failure> {
        Ok(reduce(&parse_word(text)?, self.family))
    }

    fn no_dot(&self) -> Result<(), Failure> {
        if self.format == Format::Dot {
            return Err(Failure::Usage(
                "--format dot is only available for band".into(),
            ));
        }
        Ok(())
    }

    fn emit_json(&mut self, v: serde_json::Value) {
        self.out.push_str(&v.to_string());
        self.out.push('\n');
    }

    fn emit_element(&mut self, x: &Element) -> Result<(), Failure> {
        self.no_dot()?;
        match self.format {
            Format::Json => self.emit_json(json::element(x)),
            _ => {
                let _ = writeln!(self.out, "{x}");
            }
        }
        Ok(())
    }

    fn emit_bool(&mut self, key: &str, b: bool) -> Result<(), Failure> {
        self.no_dot()?;
        match self.format {
            Format::Json => self.emit_json(json!({ key: b })),
            _ => {
                let _ = writeln!(self.out, "{b}");
            }
        }
        Ok(())
    }
}

fn family_of(cli: &Cli) -> FamilySpec {
    match (cli.family, cli.group_case) {
        (Some((n, m)), _) => FamilySpec::combinatorial(n, m),
        (None, Some(c)) => FamilySpec::group_case(c, cli.order.unwrap_or(Bound::Infinite))
            .expect("case range checked"),
        (None, None) => FamilySpec::free(),
    }
}

fn execute(cli: Cli, ctx: &mut Ctx) -> Result<(), Failure> {
    match cli.command {
        Command::Reduce { word } => {
            let x = ctx.element(&word)?;
            ctx.emit_element(&x)
        }
        Command::Mul { words } => {
            let mut acc = ctx.element(&words[0])?;
            for w in &words[1..] {
                acc = multiply(&acc, &ctx.element(w)?)?;
            }
            ctx.emit_element(&acc)
        }
        Command::Inv { word } => {
            let x = canonical_inverse(&ctx.element(&word)?);
            ctx.emit_element(&x)
        }
        Command::Eq { u, v } => {
            let same = ctx.element(&u)? == ctx.element(&v)?;
            ctx.emit_bool("equal", same)
        }
        Command::Green { rel, u, v } => {
            let b = related(&ctx.element(&u)?, &ctx.element(&v)?, rel)?;
            ctx.emit_bool("related", b)
        }
        Command::Idem { word: Some(w), .. } => {
            let b = is_idempotent(&ctx.element(&w)?);
            ctx.emit_bool("idempotent", b)
        }
        Command::Idem { word: None, bound } => {
            ctx.no_dot()?;
            let es = idempotents_window(ctx.family, bound);
            match ctx.format {
                Format::Json => ctx.emit_json(json::elements(&es)),
                _ => {
                    for e in &es {
                        let _ = writeln!(ctx.out, "{e}");
                    }
                }
            }
            Ok(())
        }
        Command::Eggbox { window, reps } => {
            ctx.no_dot()?;
            let grid = eggbox_grid(ctx.family, &window, reps)?;
            match ctx.format {
                Format::Json => {
                    ctx.emit_json(json!({ "family": json::family(ctx.family), "rows": grid }))
                }
                _ => ctx.out.push_str(&grid_ascii(&grid)),
            }
            Ok(())
        }
        Command::Band { bound } => {
            match ctx.format {
                Format::Dot => ctx.out.push_str(&band_dot(ctx.family, bound)),
                Format::Json => ctx.emit_json(json::band(&band_diagram(ctx.family, bound))),
                Format::Ascii => ctx.out.push_str(&band_text(ctx.family, bound)),
            }
            Ok(())
        }
        Command::Image { word } => {
            ctx.no_dot()?;
            let img = y_image(&ctx.element(&word)?);
            match ctx.format {
                Format::Json => ctx.emit_json(json::y_image(&img)),
                _ => {
                    let _ = match img {
                        YImage::Bicyclic(_) => {
                            let (m, n) = img.bicyclic_exponents().expect("bicyclic");
                            writeln!(ctx.out, "b^{m}a^{n} = {img}")
                        }
                        YImage::Cyclic { .. } => writeln!(ctx.out, "{img}"),
                    };
                }
            }
            Ok(())
        }
        Command::Classify { u, v } => {
            ctx.no_dot()?;
            let c = classify_relation(&parse_word(&u)?, &parse_word(&v)?);
            match ctx.format {
                Format::Json => ctx.emit_json(json::relation_class(c)),
                _ => {
                    let _ = writeln!(ctx.out, "{c}");
                }
            }
            Ok(())
        }
        Command::Infer { rels } => {
            ctx.no_dot()?;
            let rels: Vec<Relation> = rels.iter().map(|r| r.parse()).collect::<Result<_, _>>()?;
            let f = infer_family(&rels)?;
            match ctx.format {
                Format::Json => ctx.emit_json(json::family(f)),
                _ => {
                    let _ = writeln!(ctx.out, "{f}");
                }
            }
            Ok(())
        }
        Command::Verify { max_len, cap } => {
            ctx.no_dot()?;
            let max_len = max_len as usize;
            let cap = cap.map_or(max_len + 4, |c| c as usize);
            let report = verify_reducer(ctx.family, max_len, cap)?;
            let checks = run_checks(ctx.family);
            match ctx.format {
                Format::Json => {
                    ctx.emit_json(json::verify(ctx.family, max_len, cap, &report, &checks))
                }
                _ => {
                    let out = &mut ctx.out;
                    let _ = writeln!(out, "family: {}", ctx.family);
                    let _ = writeln!(
                        out,
                        "words: {} (length <= {max_len}, cap {cap})",
                        report.words
                    );
                    let _ = writeln!(out, "agreements: {}", report.agreements);
                    let _ = writeln!(out, "closure classes: {}", report.closure_classes);
                    let _ = writeln!(out, "reducer classes: {}", report.reducer_classes);
                    for (u, v) in &report.reducer_splits_closure {
                        let _ =
                            writeln!(out, "MISMATCH closure merges {u} and {v}, reducer does not");
                    }
                    for (u, v) in &report.closure_splits_reducer {
                        let _ =
                            writeln!(out, "MISMATCH reducer merges {u} and {v}, closure does not");
                    }
                    let _ = writeln!(out, "cap warning: {}", report.cap_warning);
                    for c in &checks {
                        let mark = if c.passed { "ok" } else { "FAILED" };
                        let _ = writeln!(out, "check {}: {mark} ({})", c.name, c.detail);
                    }
                }
            }
            if report.cap_warning {
                let _ = writeln!(
                    ctx.err,
                    "warning: cap {cap} is too small for complete closure"
                );
            }
            let failed: Vec<&str> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name)
                .collect();
            if !report.is_exact() || !failed.is_empty() {
                return Err(Failure::Domain(format!(
                    "verification failed ({} mismatches, failed checks: {:?})",
                    report.reducer_splits_closure.len() + report.closure_splits_reducer.len(),
                    failed
                )));
            }
            Ok(())
        }
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut ctx = Ctx {
        family: family_of(&cli),
        format: cli.format,
        out: String::new(),
        err: String::new(),
    };
    let code = match execute(cli, &mut ctx) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            2
        }
    };
    Outcome {
        code,
        stdout: ctx.out,
        stderr: ctx.err,
    }
}
