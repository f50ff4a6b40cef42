//! Command-line front end for braid classification and conjugacy.
//!
//! Words use the text format `s<i>` / `S<i>` for the Artin generators and
//! their inverses, with an optional `n=<strands>` header (default 4, or 3
//! for `sss3`). Curves use literals `n=.. coords=[..] enclosed=..` or the
//! shorthand `round:i-j`. Arguments starting with `@` name fixture files
//! with one word per line and `#` comments.
//!
//! Exit codes: 0 success, 2 parse error, 3 precondition violation.

use braid_core::{
    act, b3_sss_enumerate, blow_up, complexity_upto, conjugate_nonpa, normal_form, nt_type,
    round_curve, BraidWord, ConjugacyAnswer, Curve, Error, NTType, PeriodicBase,
};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "braid",
    about = "Garside normal forms, Nielsen-Thurston classification of 4-braids, and conjugacy",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Include sliding traces in the output where applicable.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Left normal form of a braid word.
    Nf {
        /// Braid word (default n=4 unless a `n=` header is present).
        word: String,
        /// Strand count when the word has no header.
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Nielsen-Thurston type of a 4-braid.
    Type { word: String },
    /// Conjugacy of two 4-braids (complete unless both are pseudo-Anosov).
    Conj { left: String, right: String },
    /// Full super summit set of a 3-braid.
    Sss3 { word: String },
    /// Image of a curve under a braid word.
    CurveAct { curve: String, word: String },
    /// Curve complexity, searched up to a bound.
    Complexity {
        curve: String,
        #[arg(long, default_value_t = 3)]
        upto: usize,
    },
    /// Blow-up of a pure 4-braid at a puncture.
    Blowup {
        word: String,
        #[arg(short, long)]
        puncture: usize,
    },
}

fn parse_word(text: &str, default_n: usize) -> Result<BraidWord, Error> {
    if let Some(path) = text.strip_prefix('@') {
        let content = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
        let mut words = Vec::new();
        for line in content.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                words.push(BraidWord::parse_with_default(line, default_n)?);
            }
        }
        let mut it = words.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Parse(format!("{path} holds no words")))?;
        return it.try_fold(first, |acc, w| acc.concat(&w));
    }
    BraidWord::parse_with_default(text, default_n)
}

fn parse_curve(text: &str) -> Result<Curve, Error> {
    if let Some(spec) = text.strip_prefix("round:") {
        let parts: Vec<&str> = spec.split(['-', ',']).collect();
        let nums: Vec<usize> = parts
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad round curve `{text}`")))
            })
            .collect::<Result<_, _>>()?;
        return match nums[..] {
            [i, j] => round_curve(4, i, j),
            [n, i, j] => round_curve(n, i, j),
            _ => Err(Error::Parse(format!("bad round curve `{text}`"))),
        };
    }
    Curve::parse_literal(text)
}

fn factors_text(nf: &braid_core::NormalForm) -> String {
    nf.factors()
        .iter()
        .map(|f| f.to_word().tokens())
        .collect::<Vec<_>>()
        .join(" | ")
}

fn nf_json(nf: &braid_core::NormalForm) -> Value {
    json!({
        "n": nf.n(),
        "p": nf.inf(),
        "sup": nf.sup(),
        "canonical_length": nf.canonical_length(),
        "factors": nf.factors().iter().map(|f| f.to_word().tokens()).collect::<Vec<_>>(),
        "word": nf.as_word().to_text(),
    })
}

fn periodic_base_name(base: PeriodicBase) -> &'static str {
    match base {
        PeriodicBase::FullTwist => "full-twist",
        PeriodicBase::DeltaRoot => "delta-root",
        PeriodicBase::GammaRoot => "gamma-root",
    }
}

fn run(cli: &Cli) -> Result<(String, Value), Error> {
    match &cli.command {
        Command::Nf { word, n } => {
            let w = parse_word(word, *n)?;
            let nf = normal_form(&w);
            let text = format!("p={}, factors=[{}]", nf.inf(), factors_text(&nf));
            Ok((text, nf_json(&nf)))
        }
        Command::Type { word } => {
            let w = parse_word(word, 4)?;
            match nt_type(&w)? {
                NTType::Periodic(d) => {
                    let base = periodic_base_name(d.base);
                    Ok((
                        format!("Periodic base={base} exponent={}", d.exponent),
                        json!({ "tag": "Periodic", "base": base, "exponent": d.exponent }),
                    ))
                }
                NTType::Reducible(wit) => {
                    let branch = match wit.branch {
                        braid_core::ReducibleBranch::Direct => "direct".to_string(),
                        braid_core::ReducibleBranch::BlowUp(j) => format!("blow-up({j})"),
                    };
                    let mut text = format!(
                        "Reducible branch={branch} pure-power={}\n  curve: {}\n  conjugator: {}",
                        wit.pure_exponent,
                        wit.curve.to_literal(),
                        wit.conjugator.to_text()
                    );
                    if cli.trace {
                        let braid = wit.branch_braid(&w)?;
                        let (_, _, trace) = braid_core::sliding::sss_representative(&braid);
                        text.push_str(&format!("\n  trace: {} slidings", trace.steps.len()));
                        for step in &trace.steps {
                            text.push_str(&format!(
                                "\n    conj {} -> p={} len={}",
                                step.conjugator.to_word().tokens(),
                                step.result.inf(),
                                step.result.canonical_length()
                            ));
                        }
                    }
                    let v = json!({
                        "tag": "Reducible",
                        "branch": branch,
                        "pure_power": wit.pure_exponent,
                        "curve": wit.curve.to_literal(),
                        "conjugator": wit.conjugator.to_text(),
                        "detected": wit.detected.iter().map(|c| c.to_literal()).collect::<Vec<_>>(),
                    });
                    Ok((text, v))
                }
                NTType::PseudoAnosov => {
                    Ok(("PseudoAnosov".to_string(), json!({ "tag": "PseudoAnosov" })))
                }
            }
        }
        Command::Conj { left, right } => {
            let a = parse_word(left, 4)?;
            let b = parse_word(right, 4)?;
            match conjugate_nonpa(&a, &b)? {
                ConjugacyAnswer::Conjugate(g) => {
                    let text = format!("Conjugate\n  witness: {}", g.to_text());
                    Ok((
                        text,
                        json!({ "verdict": "Conjugate", "witness": g.to_text() }),
                    ))
                }
                ConjugacyAnswer::NotConjugate(o) => Ok((
                    format!("NotConjugate obstruction={}", o.name()),
                    json!({ "verdict": "NotConjugate", "obstruction": o.name() }),
                )),
                ConjugacyAnswer::UndecidedBothPseudoAnosov => Ok((
                    "Undecided (both pseudo-Anosov)".to_string(),
                    json!({ "verdict": "Undecided" }),
                )),
            }
        }
        Command::Sss3 { word } => {
            let w = parse_word(word, 3)?;
            let sss = b3_sss_enumerate(&w)?;
            let mut text = format!("{} summit elements", sss.len());
            let mut items = Vec::new();
            for e in sss.elements() {
                let conj = sss.conjugator_to(e).expect("recorded");
                text.push_str(&format!(
                    "\n  p={}, factors=[{}]  conjugator: {}",
                    e.inf(),
                    factors_text(e),
                    conj.to_text()
                ));
                items.push(json!({
                    "normal_form": nf_json(e),
                    "conjugator": conj.to_text(),
                }));
            }
            Ok((text, json!({ "size": sss.len(), "elements": items })))
        }
        Command::CurveAct { curve, word } => {
            let c = parse_curve(curve)?;
            let w = parse_word(word, c.n())?;
            let img = act(&c, &w)?;
            Ok((img.to_literal(), json!({ "curve": img.to_literal() })))
        }
        Command::Complexity { curve, upto } => {
            let c = parse_curve(curve)?;
            match complexity_upto(&c, *upto) {
                Some(k) => Ok((format!("complexity={k}"), json!({ "complexity": k }))),
                None => Ok((
                    format!("complexity>{upto}"),
                    json!({ "complexity": null, "searched_upto": upto }),
                )),
            }
        }
        Command::Blowup { word, puncture } => {
            let w = parse_word(word, 4)?;
            let blown = blow_up(&w, *puncture)?;
            Ok((blown.to_text(), json!({ "word": blown.to_text() })))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, value)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}
