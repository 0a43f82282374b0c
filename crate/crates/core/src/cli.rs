//! Command-line front end. Every subcommand builds a [`Report`] that renders
//! either as text or as JSON of the shape `{input, result, warnings, version}`.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::apolarity::{
    annihilating_scheme_probe, colon_dual, quotient_by_linear_hf, ArtinAlgebra, DualGenerator,
    Presentation,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::lefschetz::{
    generic_verdict, hessian_det_at, jordan_type, mult_rank, search_almost_map, verdict_at,
    LefschetzVerdict,
};
use crate::poly::{LinearForm, Monomial, Polynomial};
use crate::sequences::{
    conjugate_partition, enumerate_gorenstein_sequences, invariants_in, is_codim3_gorenstein_sequence,
    is_si_sequence, theorem_coverage, HilbertFunction,
};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "artinian", version, about = "Exact Lefschetz computations for graded Artinian algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Characteristic: 0 for the rationals or a prime.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    /// Number of variables (1 to 4).
    #[arg(long, default_value_t = 3)]
    pub vars: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PresentationArgs {
    /// Dual generator in X, Y, Z, W, e.g. "X^4+Y^2*Z^2".
    #[arg(long)]
    pub dual: Option<String>,
    /// Monomial ideal generators, e.g. "x^3,y^3,z^2".
    #[arg(long)]
    pub ideal: Option<String>,
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[command(flatten)]
    pub presentation: PresentationArgs,
}

#[derive(Debug, Args)]
pub struct DualArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Dual generator in X, Y, Z, W.
    #[arg(long)]
    pub dual: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Linear form such as "x+2*y-z", or "generic" to search.
    #[arg(long, default_value = "generic")]
    pub ell: String,
    /// Number of linear forms tried by the generic search.
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function and its invariants.
    Hf {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Weak, strong and almost-strong Lefschetz verdict.
    Lefschetz {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Jordan type of multiplication by a linear form.
    Jordan {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Determinants of higher Hessians at points.
    Hessian {
        #[command(flatten)]
        dual: DualArgs,
        /// Degree i of the Hessian; all i <= j/2 when omitted.
        #[arg(long)]
        degree: Option<usize>,
        /// Evaluation point such as "1,2,-1"; repeatable.
        #[arg(long = "point", required = true)]
        points: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Successive colon ideals Ann(F) : omega via omega o F.
    Colon {
        #[command(flatten)]
        dual: DualArgs,
        /// Homogeneous element of R such as "x" or "y*z"; repeatable.
        #[arg(long = "omega", required = true)]
        omegas: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Ideal generated by the low-degree part of Ann(F).
    SchemeProbe {
        #[command(flatten)]
        dual: DualArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Codimension-three Gorenstein sequences.
    Sequences {
        #[command(subcommand)]
        action: SequenceAction,
    },
    /// Sample forms and test l^{j-2}: A_1 -> A_{j-1}.
    AlmostSearch {
        #[command(flatten)]
        field: FieldArgs,
        /// Socle degree of the sampled forms.
        #[arg(long)]
        socle: usize,
        #[arg(long, default_value_t = 10)]
        forms: usize,
        /// Number of random monomials per form.
        #[arg(long, default_value_t = 6)]
        terms: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Reproduce the fixed list of worked examples.
    PaperExamples {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum SequenceAction {
    /// Test one sequence.
    Check {
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List all sequences within bounds.
    Enumerate {
        #[arg(long)]
        max_sperner: usize,
        #[arg(long)]
        max_socle: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Table row covering a sequence.
    Classify {
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

impl Command {
    fn format(&self) -> Format {
        match self {
            Command::Hf { format, .. }
            | Command::Lefschetz { format, .. }
            | Command::Jordan { format, .. }
            | Command::Hessian { format, .. }
            | Command::Colon { format, .. }
            | Command::SchemeProbe { format, .. }
            | Command::AlmostSearch { format, .. }
            | Command::PaperExamples { format } => *format,
            Command::Sequences { action } => match action {
                SequenceAction::Check { format, .. }
                | SequenceAction::Enumerate { format, .. }
                | SequenceAction::Classify { format, .. } => *format,
            },
        }
    }
}

/// Result of one command before rendering.
#[derive(Debug, Serialize)]
pub struct Report {
    pub input: Value,
    pub result: Value,
    pub warnings: Vec<String>,
    pub version: u32,
    #[serde(skip)]
    pub text: String,
    /// Non-zero when the command ran but its checks did not all pass.
    #[serde(skip)]
    pub exit_code: i32,
}

impl Report {
    fn new(input: Value, result: Value, text: String) -> Self {
        Report {
            input,
            result,
            warnings: Vec::new(),
            version: SCHEMA_VERSION,
            text,
            exit_code: 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = self.text.clone();
                for w in &self.warnings {
                    let _ = writeln!(s, "warning: {w}");
                }
                s
            }
        }
    }
}

/// Parses arguments, runs the command and returns `(stdout, stderr, exit code)`.
pub fn run_args<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            return if code == 0 {
                (rendered, String::new(), 0)
            } else {
                (String::new(), rendered, 2)
            };
        }
    };
    let format = cli.command.format();
    match run(&cli.command) {
        Ok(report) => (report.render(format), String::new(), report.exit_code),
        Err(e) => (String::new(), format!("error: {e}\n"), e.exit_code()),
    }
}

fn field_of(args: &FieldArgs) -> Result<FieldSpec> {
    crate::poly::check_varcount(args.vars)?;
    FieldSpec::new(args.characteristic)
}

fn build_algebra(args: &AlgebraArgs) -> Result<(ArtinAlgebra, Value)> {
    let field = field_of(&args.field)?;
    let r = args.field.vars;
    let mut input = json!({ "char": args.field.characteristic, "vars": r });
    let a = match (&args.presentation.dual, &args.presentation.ideal) {
        (Some(text), None) => {
            input["dual"] = json!(text);
            ArtinAlgebra::from_dual(DualGenerator::parse(text, r, field)?)?
        }
        (None, Some(text)) => {
            input["ideal"] = json!(text);
            ArtinAlgebra::parse_monomial_ideal(text, r, field)?
        }
        _ => {
            return Err(Error::Precondition(
                "give exactly one of --dual and --ideal".into(),
            ))
        }
    };
    Ok((a, input))
}

fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar> {
    let p = Polynomial::parse(text, 1, field)?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(Error::Syntax {
            position: 0,
            message: format!("`{text}` is not a constant"),
        });
    }
    Ok(p.coefficient(&Monomial::one(1)))
}

fn parse_point(text: &str, r: usize, field: FieldSpec) -> Result<Vec<Scalar>> {
    let coords = text
        .split(',')
        .map(|c| parse_scalar(c, field))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != r {
        return Err(Error::Syntax {
            position: 0,
            message: format!("point `{text}` needs {r} coordinates"),
        });
    }
    Ok(coords)
}

pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Hf { algebra, .. } => run_hf(algebra),
        Command::Lefschetz { algebra, search, .. } => run_lefschetz(algebra, search),
        Command::Jordan { algebra, search, .. } => run_jordan(algebra, search),
        Command::Hessian {
            dual,
            degree,
            points,
            ..
        } => run_hessian(dual, *degree, points),
        Command::Colon { dual, omegas, .. } => run_colon(dual, omegas),
        Command::SchemeProbe { dual, .. } => run_scheme_probe(dual),
        Command::Sequences { action } => run_sequences(action),
        Command::AlmostSearch {
            field,
            socle,
            forms,
            terms,
            trials,
            seed,
            ..
        } => run_almost_search(field, *socle, *forms, *terms, *trials, *seed),
        Command::PaperExamples { .. } => run_paper_examples(),
    }
}

/// Table tag for Gorenstein sequences in three variables, or `None`.
fn coverage(t: &HilbertFunction) -> Result<Option<String>> {
    if t.get(1) != 3 || !is_codim3_gorenstein_sequence(t)? {
        return Ok(None);
    }
    Ok(Some(theorem_coverage(t)?.to_string()))
}

fn run_hf(args: &AlgebraArgs) -> Result<Report> {
    let (a, input) = build_algebra(args)?;
    let t = a.hilbert_function();
    let inv = invariants_in(t, a.varcount());
    let tag = coverage(t)?;
    let mut text = String::new();
    let _ = writeln!(text, "T = {t}");
    let _ = writeln!(text, "dimension = {}", a.dimension());
    let _ = writeln!(
        text,
        "j = {}, s = {}, order = {}, tau = {}, multiplicity = {}",
        inv.socle_degree, inv.sperner, inv.order, inv.tau, inv.multiplicity
    );
    let _ = writeln!(text, "symmetric = {}, unimodal = {}", inv.symmetric, inv.unimodal);
    let _ = writeln!(text, "gorenstein = {}", a.is_gorenstein());
    if let Some(tag) = &tag {
        let _ = writeln!(text, "coverage = {tag}");
    }
    let result = json!({
        "hilbert_function": t,
        "dimension": a.dimension(),
        "invariants": inv,
        "gorenstein": a.is_gorenstein(),
        "coverage": tag,
    });
    Ok(Report::new(input, result, text))
}

fn resolve_form(a: &ArtinAlgebra, search: &SearchArgs) -> Result<Option<LinearForm>> {
    if search.ell.trim().eq_ignore_ascii_case("generic") {
        return Ok(None);
    }
    let ell = LinearForm::parse(&search.ell, a.varcount(), a.field())?;
    if ell.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(Some(ell))
}

fn verdict_for(a: &ArtinAlgebra, search: &SearchArgs) -> Result<LefschetzVerdict> {
    match resolve_form(a, search)? {
        Some(ell) => verdict_at(a, &ell),
        None => generic_verdict(a, search.trials, search.seed),
    }
}

fn show_opt(b: Option<bool>) -> String {
    b.map_or_else(|| "n/a".to_string(), |b| b.to_string())
}

fn write_verdict(text: &mut String, v: &LefschetzVerdict) {
    let _ = writeln!(text, "witness = {}", v.witness);
    let _ = writeln!(text, "weak maps l: A_i -> A_(i+1)");
    for e in &v.weak_maps {
        let _ = writeln!(text, "  i={} rank {} of {}{}", e.i, e.rank, e.target, if e.full { "" } else { "  NOT FULL" });
    }
    let _ = writeln!(text, "strong maps l^k: A_i -> A_(i+k)");
    for e in &v.strong_maps {
        let _ = writeln!(
            text,
            "  i={} k={} rank {} of {}{}",
            e.i,
            e.k,
            e.rank,
            e.target,
            if e.full { "" } else { "  NOT FULL" }
        );
    }
    let _ = writeln!(text, "wl = {}, sl = {}, almost_sl = {}", v.wl, show_opt(v.sl), show_opt(v.almost_sl));
    if let Some(s) = &v.search {
        let _ = writeln!(
            text,
            "generic search: {} trial(s), witness on trial {}{}{}",
            s.trials_used,
            s.witness_trial,
            if s.decisive { ", decisive" } else { "" },
            if s.exhaustive { ", exhaustive over the prime field" } else { "" }
        );
    }
}

fn run_lefschetz(args: &AlgebraArgs, search: &SearchArgs) -> Result<Report> {
    let (a, mut input) = build_algebra(args)?;
    input["ell"] = json!(search.ell);
    input["trials"] = json!(search.trials);
    input["seed"] = json!(search.seed);
    let t = a.hilbert_function();
    let v = verdict_for(&a, search)?;
    let jt = jordan_type(&a, &v.witness)?;
    let tag = coverage(t)?;
    let mut warnings = v.notes.clone();

    let mut hessians = Vec::new();
    if let Presentation::Dual(f) = a.presentation() {
        let p = a.field().characteristic();
        if p != 0 && p <= a.socle_degree() as u64 {
            warnings.push(format!(
                "Hessian determinants skipped: characteristic {p} does not exceed j = {}",
                a.socle_degree()
            ));
        } else {
            for i in 0..=a.socle_degree() / 2 {
                let det = hessian_det_at(f, i, v.witness.coefficients())?;
                hessians.push(json!({ "i": i, "det": det.to_string() }));
            }
        }
    }

    let mut text = String::new();
    let _ = writeln!(text, "T = {t}");
    write_verdict(&mut text, &v);
    let _ = writeln!(text, "jordan type = {jt}");
    let _ = writeln!(text, "conjugate of T = {}", conjugate_partition(t));
    for h in &hessians {
        let _ = writeln!(text, "det Hess^{} at witness = {}", h["i"], h["det"].as_str().unwrap_or(""));
    }
    if let Some(tag) = &tag {
        let _ = writeln!(text, "coverage = {tag}");
    }
    let result = json!({
        "hilbert_function": t,
        "verdict": v,
        "jordan_type": jt,
        "conjugate": conjugate_partition(t),
        "hessian_dets": hessians,
        "coverage": tag,
    });
    if tag.is_some() && a.field().characteristic() > 0 {
        warnings.push("coverage tags describe characteristic 0 results".into());
    }
    let mut report = Report::new(input, result, text);
    report.warnings = warnings;
    Ok(report)
}

fn run_jordan(args: &AlgebraArgs, search: &SearchArgs) -> Result<Report> {
    let (a, mut input) = build_algebra(args)?;
    input["ell"] = json!(search.ell);
    input["trials"] = json!(search.trials);
    input["seed"] = json!(search.seed);
    let ell = match resolve_form(&a, search)? {
        Some(ell) => ell,
        None => generic_verdict(&a, search.trials, search.seed)?.witness,
    };
    let jt = jordan_type(&a, &ell)?;
    let text = format!("witness = {ell}\njordan type = {jt}\n");
    Ok(Report::new(input, json!({ "witness": ell, "jordan_type": jt }), text))
}

fn run_hessian(args: &DualArgs, degree: Option<usize>, points: &[String]) -> Result<Report> {
    let field = field_of(&args.field)?;
    let r = args.field.vars;
    let f = DualGenerator::parse(&args.dual, r, field)?;
    let input = json!({
        "char": args.field.characteristic,
        "vars": r,
        "dual": args.dual,
        "degree": degree,
        "points": points,
    });
    let degrees: Vec<usize> = match degree {
        Some(i) => vec![i],
        None => (0..=f.socle_degree() / 2).collect(),
    };
    let mut rows = Vec::new();
    let mut text = String::new();
    for p in points {
        let point = parse_point(p, r, field)?;
        for &i in &degrees {
            let det = hessian_det_at(&f, i, &point)?;
            let _ = writeln!(text, "det Hess^{i} at ({p}) = {det}");
            rows.push(json!({ "point": p, "i": i, "det": det.to_string() }));
        }
    }
    Ok(Report::new(input, json!({ "determinants": rows }), text))
}

fn run_colon(args: &DualArgs, omegas: &[String]) -> Result<Report> {
    let field = field_of(&args.field)?;
    let r = args.field.vars;
    let mut f = DualGenerator::parse(&args.dual, r, field)?;
    let input = json!({
        "char": args.field.characteristic,
        "vars": r,
        "dual": args.dual,
        "omegas": omegas,
    });
    let mut chain = Vec::new();
    let mut text = String::new();
    let a = ArtinAlgebra::from_dual(f.clone())?;
    let _ = writeln!(text, "F = {}  T = {}", f.form(), a.hilbert_function());
    chain.push(json!({ "generator": f.form(), "hilbert_function": a.hilbert_function() }));
    for w in omegas {
        let omega = Polynomial::parse(w, r, field)?;
        let g = colon_dual(&omega, &f)?;
        let b = ArtinAlgebra::from_dual(g.clone())?;
        let mut entry = json!({
            "omega": w,
            "generator": g.form(),
            "hilbert_function": b.hilbert_function(),
        });
        let _ = writeln!(text, "{w} o F = {}  T = {}", g.form(), b.hilbert_function());
        // For a linear omega, A/(omega) has dim T(A)_i - T(B)_(i-1) in degree i.
        if let Ok(ell) = LinearForm::from_polynomial(&omega) {
            let prev = ArtinAlgebra::from_dual(f.clone())?;
            let c = quotient_by_linear_hf(&prev, &ell)?;
            let _ = writeln!(text, "  quotient by {w}: T = {c}");
            entry["quotient_hilbert_function"] = json!(c);
        }
        chain.push(entry);
        f = g;
    }
    Ok(Report::new(input, json!({ "chain": chain }), text))
}

fn run_scheme_probe(args: &DualArgs) -> Result<Report> {
    let field = field_of(&args.field)?;
    let r = args.field.vars;
    let f = DualGenerator::parse(&args.dual, r, field)?;
    let input = json!({ "char": args.field.characteristic, "vars": r, "dual": args.dual });
    let probe = annihilating_scheme_probe(&f)?;
    let mut text = String::new();
    let _ = writeln!(text, "s = {}, tau = {}", probe.sperner, probe.tau);
    let gens: Vec<String> = probe.generators.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "generators: {}", gens.join(", "));
    let _ = writeln!(text, "HF(R/J) = {:?} (expected {:?})", probe.quotient_hilbert, probe.expected_hilbert);
    let _ = writeln!(text, "hilbert_stable = {}", probe.hilbert_stable);
    let _ = writeln!(text, "degreewise_saturated = {}", probe.degreewise_saturated);
    match probe.middle_zone {
        Some((lo, hi)) => {
            let _ = writeln!(
                text,
                "J_t = Ann(F)_t for {lo} <= t <= {hi}: {}",
                probe.matches_annihilator_in_middle
            );
        }
        None => {
            let _ = writeln!(text, "middle zone is empty");
        }
    }
    Ok(Report::new(input, serde_json::to_value(&probe).expect("probe serializes"), text))
}

fn parse_sequence(text: &str) -> Result<HilbertFunction> {
    text.parse()
}

fn run_sequences(action: &SequenceAction) -> Result<Report> {
    match action {
        SequenceAction::Check { seq, .. } => {
            let t = parse_sequence(seq)?;
            let inv = invariants_in(&t, 3);
            let si = is_si_sequence(&t);
            let gor = t.get(1) == 3 && is_codim3_gorenstein_sequence(&t)?;
            let text = format!(
                "T = {t}\nsi_sequence = {si}\ngorenstein_codim3 = {gor}\nj = {}, s = {}, order = {}, tau = {}, multiplicity = {}\n",
                inv.socle_degree, inv.sperner, inv.order, inv.tau, inv.multiplicity
            );
            Ok(Report::new(
                json!({ "seq": seq }),
                json!({ "sequence": t, "si_sequence": si, "gorenstein_codim3": gor, "invariants": inv }),
                text,
            ))
        }
        SequenceAction::Enumerate {
            max_sperner,
            max_socle,
            ..
        } => {
            let list = enumerate_gorenstein_sequences(*max_sperner, *max_socle)?;
            let mut text = String::new();
            for t in &list {
                let _ = writeln!(text, "{t}");
            }
            let _ = writeln!(text, "count = {}", list.len());
            Ok(Report::new(
                json!({ "max_sperner": max_sperner, "max_socle": max_socle }),
                json!({ "count": list.len(), "sequences": list }),
                text,
            ))
        }
        SequenceAction::Classify { seq, .. } => {
            let t = parse_sequence(seq)?;
            let tag = theorem_coverage(&t)?;
            Ok(Report::new(
                json!({ "seq": seq }),
                json!({ "sequence": t, "coverage": tag }),
                format!("T = {t}\ncoverage = {tag}\n"),
            ))
        }
    }
}

fn run_almost_search(
    args: &FieldArgs,
    socle: usize,
    forms: usize,
    terms: usize,
    trials: usize,
    seed: u64,
) -> Result<Report> {
    let field = field_of(args)?;
    let samples = search_almost_map(field, args.vars, socle, forms, terms, trials, seed)?;
    let failures = samples.iter().filter(|s| !s.full).count();
    let mut text = String::new();
    for s in &samples {
        let _ = writeln!(
            text,
            "F = {}  T = {:?}  rank {} of {}{}",
            s.form,
            s.hilbert,
            s.rank,
            s.target,
            if s.full { "" } else { "  no witness" }
        );
    }
    let _ = writeln!(text, "forms without a witness: {failures} of {}", samples.len());
    let mut report = Report::new(
        json!({
            "char": args.characteristic,
            "vars": args.vars,
            "socle": socle,
            "forms": forms,
            "terms": terms,
            "trials": trials,
            "seed": seed,
        }),
        json!({ "samples": samples, "without_witness": failures }),
        text,
    );
    if field.characteristic() > 0 {
        report
            .warnings
            .push("finite prime field: a missing witness does not decide the infinite-field question".into());
    }
    Ok(report)
}

/// One item of the worked-example suite.
#[derive(Clone, Debug, Serialize)]
pub struct ExampleCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, pass: bool, detail: String) -> ExampleCheck {
    ExampleCheck {
        name: name.to_string(),
        pass,
        detail,
    }
}

fn ideal(text: &str, r: usize, p: u64) -> Result<ArtinAlgebra> {
    ArtinAlgebra::parse_monomial_ideal(text, r, FieldSpec::new(p)?)
}

/// The fixed suite of worked examples: four characteristic-p monomial
/// complete intersections and a family of spot checks in characteristic 0.
pub fn paper_examples() -> Result<Vec<ExampleCheck>> {
    let mut out = Vec::new();

    let a = ideal("x^3,y^3,z^2", 3, 3)?;
    let ell = LinearForm::all_ones(a.field(), 3);
    let rank = mult_rank(&a, &ell, 1, 3)?;
    let g = generic_verdict(&a, 1, 0)?;
    out.push(check(
        "char 3, (x^3,y^3,z^2)",
        a.hilbert_function().values() == [1, 3, 5, 5, 3, 1] && rank == 0 && !g.wl && g.is_decisive(),
        format!(
            "T = {}, rank(l^3: A_1 -> A_4) = {rank}, wl = {}, decisive = {}",
            a.hilbert_function(),
            g.wl,
            g.is_decisive()
        ),
    ));

    let b = ideal("x^4,y^4", 2, 2)?;
    let ell = LinearForm::all_ones(b.field(), 2);
    let rank = mult_rank(&b, &ell, 2, 2)?;
    let v = verdict_at(&b, &ell)?;
    out.push(check(
        "char 2, (x^4,y^4)",
        b.hilbert_function().values() == [1, 2, 3, 4, 3, 2, 1] && rank == 2 && v.almost_sl == Some(false),
        format!(
            "T = {}, rank(l^2: A_2 -> A_4) = {rank}, almost_sl = {}",
            b.hilbert_function(),
            show_opt(v.almost_sl)
        ),
    ));

    let c = ideal("x^3,y^3,z^4", 3, 3)?;
    let ell = LinearForm::all_ones(c.field(), 3);
    let rank = mult_rank(&c, &ell, 2, 3)?;
    let v = verdict_at(&c, &ell)?;
    out.push(check(
        "char 3, (x^3,y^3,z^4)",
        c.hilbert_function().values() == [1, 3, 6, 8, 8, 6, 3, 1] && rank == 3 && v.almost_sl == Some(false),
        format!(
            "T = {}, rank(l^3: A_2 -> A_5) = {rank}, almost_sl = {}",
            c.hilbert_function(),
            show_opt(v.almost_sl)
        ),
    ));

    let d = ideal("x^3,y^3,z^14", 3, 13)?;
    let field = d.field();
    let ell = LinearForm::all_ones(field, 3);
    let l = ell.to_polynomial();
    let z2 = Polynomial::parse("z^2", 3, field)?;
    let killed = d.contains(&z2.multiply(&l.power(13))?)?;
    let top = d.normal_form(&l.power(17))?;
    let coefficient = top.coefficient(&Monomial::new(vec![2, 2, 13]));
    let v = verdict_at(&d, &ell)?;
    let failing: Vec<usize> = (0..=8)
        .filter(|&i| v.strong_maps.iter().any(|e| e.i == 8 - i && !e.full))
        .collect();
    out.push(check(
        "char 13, (x^3,y^3,z^14)",
        killed
            && !top.is_zero()
            && coefficient == field.from_u64(6)
            && failing == [5, 6, 7]
            && v.almost_sl == Some(false),
        format!(
            "z^2 l^13 in I: {killed}; l^17 = {top}; l^(2i+1): A_(8-i) -> A_(9+i) not full for i in {failing:?}; almost_sl = {}",
            show_opt(v.almost_sl)
        ),
    ));

    let q = FieldSpec::RATIONALS;
    let rows: [(&str, &str); 6] = [
        ("(1,3,3,3,1)", "X^4 + Y^4 + Z^4"),
        ("(1,3,4,3,1)", "X^4 + Y^2*Z^2"),
        ("(1,3,5,3,1)", "X^4 + Y^4 + X^2*Z^2 + Y^2*Z^2 + Z^4"),
        ("(1,3,3,3,3,1)", "X^5 + Y^5 + Z^5"),
        ("(1,3,6,6,3,1)", "X^5 + Y^5 + Z^5 + X^2*Y^2*Z + X*Y^2*Z^2 + X^2*Y*Z^2 + X^3*Y*Z"),
        ("(1,3,4,4,3,1)", "X^5 + Y^3*Z^2"),
    ];
    for (expected, text) in rows {
        let f = DualGenerator::parse(text, 3, q)?;
        let a = ArtinAlgebra::from_dual(f)?;
        let t = a.hilbert_function();
        let tag = coverage(t)?;
        let v = generic_verdict(&a, 20, 0)?;
        out.push(check(
            &format!("char 0, F = {text}"),
            t.to_string() == expected && v.sl == Some(true) && tag.is_some(),
            format!(
                "T = {t} (expected {expected}), sl = {}, coverage = {}",
                show_opt(v.sl),
                tag.as_deref().unwrap_or("none")
            ),
        ));
    }
    Ok(out)
}

fn run_paper_examples() -> Result<Report> {
    let checks = paper_examples()?;
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(text, "{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let all = checks.iter().all(|c| c.pass);
    let mut report = Report::new(json!({}), json!({ "checks": checks, "all_pass": all }), text);
    if !all {
        report.exit_code = 4;
    }
    Ok(report)
}
