//! `stabgeom`: construct, validate, measure and verify stabilizer codes.
//!
//! Exit codes: 0 success or true, 1 the checked property is false, 2 usage or input error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use stabgeom::clifford::form_preservation_suite;
use stabgeom::statevector::{self, conjugate_pauli, generator_unitary};
use stabgeom::{
    builtin, codespace_basis, css_from_classical, distance, gv_rate, quadratic_residue_code, synthesize_encoding,
    verify_kl_conditions, weight_t_error_set, BitMatrix, CliffordKind, DistanceOptions, Error, PauliElement,
    StabilizerCode, SympVector,
};

#[derive(Parser, Debug)]
#[command(
    name = "stabgeom",
    version,
    about = "Stabilizer codes over binary symplectic geometry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check commutation, independence and (with --strict) total singularity.
    Validate {
        /// Code file path or `builtin:<name>`.
        source: String,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive minimum-weight search over the dual of the stabilizer.
    Distance(DistanceArgs),
    /// Build a code and write it in the code file format.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Dump an orthonormal basis of one stabilizer eigenspace (n <= 12).
    Codewords {
        source: String,
        /// One `+` or `-` per generator; defaults to the signs in the code file.
        #[arg(long, allow_hyphen_values = true)]
        character: Option<String>,
    },
    /// Check that every error of weight at most t is correctable.
    Correctable {
        source: String,
        #[arg(long)]
        t: usize,
        /// Also check the conditions on explicit codewords (n <= 10).
        #[arg(long)]
        statevector: bool,
    },
    /// Asymptotic rate 1 - 2δ log2(3) - H2(2δ).
    GvRate {
        #[arg(long, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long)]
        json: bool,
    },
    /// Check that the Clifford generators preserve the symplectic and quadratic forms.
    CliffordCheck {
        #[arg(long)]
        n: usize,
    },
    /// Print a symplectic encoder for the code and its generator word.
    EncodeMap { source: String },
}

#[derive(Args, Debug)]
struct DistanceArgs {
    source: String,
    /// Report the minimum over S-perp minus S instead of S-perp minus 0.
    #[arg(long)]
    exclude_stabilizer: bool,
    #[arg(long, env = "STABGEOM_WORKERS")]
    workers: Option<usize>,
    /// Stop after this many vectors; the result is then only an upper bound.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Quadratic-residue code for a prime p = 5 mod 8.
    Qr {
        #[arg(long)]
        p: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// CSS code from a dual-containing classical code given by generator rows.
    Css {
        #[arg(long)]
        classical: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// A failure mapped to exit code 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<(String, bool), InputError>;

fn load_code(source: &str) -> Result<StabilizerCode, InputError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return Ok(builtin(name)?);
    }
    let text = fs::read_to_string(source).map_err(|e| InputError(format!("{source}: {e}")))?;
    StabilizerCode::parse(&text).map_err(|e| InputError(format!("{source}: {e}")))
}

fn load_classical(path: &Path) -> Result<BitMatrix, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let rows: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    if rows.is_empty() {
        return Err(InputError(format!("{}: no generator rows", path.display())));
    }
    BitMatrix::from_strs(&rows).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write_or_return(text: String, output: Option<&Path>) -> CmdResult {
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            Ok((format!("wrote {}\n", path.display()), true))
        }
        None => Ok((text, true)),
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |d| d.to_string())
}

fn opt_vec(v: &Option<SympVector>) -> String {
    v.as_ref().map_or_else(|| "none".to_string(), ToString::to_string)
}

fn cmd_validate(source: &str, strict: bool, as_json: bool) -> CmdResult {
    let code = load_code(source)?;
    let report = code.validate(strict);
    let ok = report.is_valid();
    if as_json {
        let value = json!({
            "n": code.n(),
            "k": code.encoded_qubits(),
            "dim_S": code.dim_s(),
            "strict": strict,
            "valid": ok,
            "non_commuting": report.non_commuting,
            "singular_violations": report.singular_violations,
        });
        return Ok((format!("{value}\n"), ok));
    }
    let mut out = String::new();
    writeln!(
        out,
        "n = {}, generators = {}, dim S = {}, encoded qubits = {}",
        code.n(),
        report.generator_count,
        report.rank,
        code.encoded_qubits()
    )
    .unwrap();
    writeln!(out, "dim S-perp = {}", code.dual_basis().len()).unwrap();
    writeln!(
        out,
        "mode: {}",
        if strict {
            "strict (totally singular)"
        } else {
            "alternating form only"
        }
    )
    .unwrap();
    writeln!(out, "{}: {}", if ok { "valid" } else { "invalid" }, report.summary()).unwrap();
    Ok((out, ok))
}

fn cmd_distance(args: &DistanceArgs) -> CmdResult {
    let code = load_code(&args.source)?;
    let options = DistanceOptions {
        budget: args.budget,
        workers: args.workers,
    };
    let r = distance(&code, &options)?;
    let (headline, witness) = if args.exclude_stabilizer {
        (r.min_weight_dual_minus_s, &r.witness_dual_minus_s)
    } else {
        (r.min_weight_dual, &r.witness_dual)
    };
    if args.json {
        let value = json!({
            "n": r.n,
            "k": r.k,
            "dim_S": r.dim_s,
            "d_dual": r.min_weight_dual,
            "d_dual_minus_S": r.min_weight_dual_minus_s,
            "witness": witness,
            "witness_dual": r.witness_dual,
            "witness_dual_minus_S": r.witness_dual_minus_s,
            "vectors_scanned": r.vectors_scanned,
            "complete": r.complete,
        });
        return Ok((format!("{value}\n"), r.complete));
    }
    let mut out = String::new();
    let bound = if r.complete {
        ""
    } else {
        " (upper bound; search incomplete)"
    };
    writeln!(out, "minimum weight: {}{bound}", opt(headline)).unwrap();
    writeln!(out, "witness: {}", opt_vec(witness)).unwrap();
    writeln!(
        out,
        "n = {}, k = {}, dim S = {}, dim S-perp = {}",
        r.n, r.k, r.dim_s, r.dim_dual
    )
    .unwrap();
    writeln!(
        out,
        "min weight S-perp \\ 0: {} (witness {})",
        opt(r.min_weight_dual),
        opt_vec(&r.witness_dual)
    )
    .unwrap();
    writeln!(
        out,
        "min weight S-perp \\ S: {} (witness {})",
        opt(r.min_weight_dual_minus_s),
        opt_vec(&r.witness_dual_minus_s)
    )
    .unwrap();
    writeln!(out, "vectors scanned: {}", r.vectors_scanned).unwrap();
    writeln!(out, "complete: {}", r.complete).unwrap();
    Ok((out, r.complete))
}

fn cmd_construct(kind: &Construct) -> CmdResult {
    match kind {
        Construct::Qr { p, output } => {
            let code = quadratic_residue_code(*p)?;
            let text = format!("# quadratic-residue code, p = {p}\n{}", code.to_text());
            write_or_return(text, output.as_deref())
        }
        Construct::Css { classical, output } => {
            let g = load_classical(classical)?;
            let code = css_from_classical(&g, g.col_count())?;
            let text = format!("# CSS code from {}\n{}", classical.display(), code.to_text());
            write_or_return(text, output.as_deref())
        }
    }
}

fn parse_character(text: &str, count: usize) -> Result<Vec<bool>, InputError> {
    let signs: Vec<bool> = text
        .chars()
        .map(|c| match c {
            '+' => Ok(false),
            '-' => Ok(true),
            other => Err(InputError(format!("character must use '+' and '-', found {other:?}"))),
        })
        .collect::<Result<_, _>>()?;
    if signs.len() != count {
        return Err(InputError(format!(
            "character has {} signs but the code has {count} generators",
            signs.len()
        )));
    }
    Ok(signs)
}

fn cmd_codewords(source: &str, character: Option<&str>) -> CmdResult {
    let code = load_code(source)?;
    let character = match character {
        Some(c) => parse_character(c, code.generators().len())?,
        None => code.negative_signs().to_vec(),
    };
    let basis = codespace_basis(&code, &character)?;
    let mut out = String::new();
    for (i, c) in basis.iter().enumerate() {
        let nonzero = c.amplitudes().iter().filter(|a| a.norm() > 1e-9).count();
        writeln!(out, "# codeword {i}: {nonzero} terms, amplitude 1/sqrt({nonzero})").unwrap();
        out.push_str(&c.dump());
    }
    Ok((out, true))
}

fn cmd_correctable(source: &str, t: usize, statevector_check: bool) -> CmdResult {
    let code = load_code(source)?;
    if statevector_check && code.n() > statevector::MAX_KL_QUBITS {
        return Err(InputError(format!(
            "--statevector needs n <= {}, code has n = {}",
            statevector::MAX_KL_QUBITS,
            code.n()
        )));
    }
    let errors = weight_t_error_set(code.n(), t)?;
    let geo = code.correctable(&errors)?;
    let mut out = String::new();
    writeln!(out, "errors of weight <= {t}: {}", errors.len()).unwrap();
    match geo.failing_pair {
        None => writeln!(out, "geometric check: correctable").unwrap(),
        Some((i, j)) => writeln!(
            out,
            "geometric check: not correctable; {} and {} have product {} in S-perp \\ S",
            errors[i],
            errors[j],
            opt_vec(&geo.product)
        )
        .unwrap(),
    }
    let mut ok = geo.correctable;
    if statevector_check {
        let character = code.negative_signs().to_vec();
        let kl = verify_kl_conditions(&code, &character, &errors)?;
        match &kl.violation {
            None => writeln!(
                out,
                "state-vector check: conditions hold ({} products)",
                kl.products_checked
            )
            .unwrap(),
            Some(v) => writeln!(
                out,
                "state-vector check: violated for {} and {} on codewords {} and {} (value {:.3e}{:+.3e}i)",
                errors[v.errors.0], errors[v.errors.1], v.codewords.0, v.codewords.1, v.value.re, v.value.im
            )
            .unwrap(),
        }
        if kl.satisfied != geo.correctable {
            writeln!(out, "DISAGREEMENT between geometric and state-vector verdicts").unwrap();
            ok = false;
        }
    }
    Ok((out, ok))
}

fn cmd_gv_rate(delta: f64, as_json: bool) -> CmdResult {
    let r = gv_rate(delta)?;
    if as_json {
        return Ok((format!("{}\n", json!({ "delta": delta, "rate": r })), true));
    }
    Ok((format!("{r:?}\n"), true))
}

fn cmd_clifford_check(n: usize) -> CmdResult {
    let checks = form_preservation_suite(n)?;
    let mut out = String::new();
    let mut ok = true;
    for c in &checks {
        let kind = match c.generator.kind() {
            CliffordKind::Real => "real",
            CliffordKind::Complex => "complex",
        };
        let q = match &c.quadratic_witness {
            None => "Q preserved".to_string(),
            Some(w) => format!("Q changes on {w}"),
        };
        let form = if c.preserves_form {
            "form preserved"
        } else {
            "FORM BROKEN"
        };
        let status = if c.passed() { "PASS" } else { "FAIL" };
        ok &= c.passed();
        writeln!(out, "{status} [{kind}] {}: {form}, {q}", c.generator).unwrap();
    }
    if n <= 3 {
        let mut mismatches = 0usize;
        for c in &checks {
            let u = generator_unitary(&c.generator, n)?;
            let action = c.generator.action(n)?;
            for bits in 0u64..(1 << (2 * n)) {
                let v = SympVector::from_bits(&stabgeom::BitVec::from_u64(2 * n, bits))?;
                let image = conjugate_pauli(&u, &PauliElement::from_vector(v.clone()))?;
                if image.map(|e| e.vector().clone()) != Some(action.apply(&v)?) {
                    mismatches += 1;
                }
            }
        }
        let status = if mismatches == 0 { "PASS" } else { "FAIL" };
        ok &= mismatches == 0;
        writeln!(
            out,
            "{status} conjugation consistency over all 4^{n} elements: {mismatches} mismatches"
        )
        .unwrap();
    }
    Ok((out, ok))
}

fn cmd_encode_map(source: &str) -> CmdResult {
    let code = load_code(source)?;
    let g = synthesize_encoding(&code)?;
    let mut out = String::new();
    writeln!(
        out,
        "# encoder on n = {}: span{{(0|e_i) : i < {}}} -> span(S); rows are images of (e_1|0)..(e_n|0), (0|e_1)..(0|e_n)",
        code.n(),
        code.dim_s()
    )
    .unwrap();
    writeln!(out, "# preserves alternating form: {}", g.preserves_form()).unwrap();
    writeln!(out, "{g}").unwrap();
    writeln!(out, "# word ({} generators)", g.word().len()).unwrap();
    out.push_str(&g.word_text());
    Ok((out, true))
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Validate { source, strict, json } => cmd_validate(source, *strict, *json),
        Command::Distance(args) => cmd_distance(args),
        Command::Construct { kind } => cmd_construct(kind),
        Command::Codewords { source, character } => cmd_codewords(source, character.as_deref()),
        Command::Correctable { source, t, statevector } => cmd_correctable(source, *t, *statevector),
        Command::GvRate { delta, json } => cmd_gv_rate(*delta, *json),
        Command::CliffordCheck { n } => cmd_clifford_check(*n),
        Command::EncodeMap { source } => cmd_encode_map(source),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
