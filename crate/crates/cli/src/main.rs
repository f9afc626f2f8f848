use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semihyp::algebra::{contracted_algebra, RadicalReport};
use semihyp::classify::{analyze, Analysis, FactorReport};
use semihyp::rees::fixture_names;
use semihyp::semigroup::enumerate_semigroups;
use semihyp::{block_structure, classify, fixture, Error, FieldSpec, FiniteSemigroup, Regime, Verdict};

/// Hyperbolicity of rational semigroup algebras of finite semigroups.
#[derive(Parser, Debug)]
#[command(name = "semihyp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of a text report.
    #[arg(long, global = true)]
    json: bool,
    /// Adjoin an identity when the input has none.
    #[arg(long, global = true)]
    adjoin_identity: bool,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a Cayley table is a semigroup.
    Validate { input: String },
    /// Principal series, factor tags and the radical of the contracted algebra.
    Analyze { input: String },
    /// Principal series only.
    Series { input: String },
    /// Decide hyperbolicity over the rationals.
    Classify { input: String },
    /// Decide hyperbolicity over Q(sqrt(-d)).
    ClassifyQuad {
        input: String,
        #[arg(long, required = true)]
        d: i64,
    },
    /// Locate the T2 / T2hat / T2prime block of a non-semisimple semigroup.
    Block { input: String },
    /// Structure constants of the contracted algebra.
    Algebra { input: String },
    /// Stream all semigroups of a given order, up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Classify over Q(sqrt(-d)) instead of the rationals.
        #[arg(long)]
        d: Option<i64>,
    },
    /// List the built-in fixtures, or print one.
    Fixtures { name: Option<String> },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Filter {
    All,
    Hyperbolic,
    NilpotentFreeSemisimple,
    SemisimpleWithNilpotents,
    NonSemisimple,
    NotHyperbolic,
}

impl Filter {
    fn keeps(self, v: &Verdict) -> bool {
        match self {
            Filter::All => true,
            Filter::Hyperbolic => v.hyperbolic,
            Filter::NilpotentFreeSemisimple => v.regime == Regime::NilpotentFreeSemisimple,
            Filter::SemisimpleWithNilpotents => v.regime == Regime::SemisimpleWithNilpotents,
            Filter::NonSemisimple => v.regime == Regime::NonSemisimple,
            Filter::NotHyperbolic => v.regime == Regime::NotHyperbolic,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InternalInconsistency(_) => 2,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

fn load(input: &str, adjoin_identity: bool) -> Result<FiniteSemigroup, Error> {
    let s = if let Some(name) = input.strip_prefix("fixtures:") {
        fixture(name)?
    } else {
        let text = if input == "-" {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            buf
        } else {
            fs::read_to_string(input).map_err(|e| Error::Parse(format!("{input}: {e}")))?
        };
        FiniteSemigroup::parse_any(&text)?
    };
    Ok(if adjoin_identity { s.with_identity().0 } else { s })
}

fn labels(s: &FiniteSemigroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.label(x)).collect()
}

fn series_json(a: &Analysis) -> Value {
    let t = &a.series.semigroup;
    let factors: Vec<Value> = a
        .series
        .factors
        .iter()
        .zip(&a.factors)
        .map(|(f, r)| {
            json!({
                "elements": labels(t, &f.elements),
                "kind": f.kind.short(),
                "tag": r.tag,
                "detail": r.detail,
            })
        })
        .collect();
    json!({
        "zero_adjoined": a.series.zero_adjoined,
        "ideals": a.series.ideals.iter().map(|i| labels(t, i)).collect::<Vec<_>>(),
        "factors": factors,
    })
}

fn series_text(a: &Analysis, out: &mut String) {
    let t = &a.series.semigroup;
    if a.series.zero_adjoined {
        out.push_str("(zero adjoined)\n");
    }
    out.push_str("series:\n");
    for (i, (f, r)) in a.series.factors.iter().zip(&a.factors).enumerate() {
        out.push_str(&format!(
            "  S{} ({} elements)  {}  tag {:?} [{}]  J-class {{{}}}\n",
            i + 1,
            a.series.ideals[i].len(),
            f.kind.short(),
            r.tag,
            r.detail,
            labels(t, &f.elements).join(", ")
        ));
    }
    out.push_str(&format!("  S{} = {{{}}}\n", a.series.factors.len() + 1, t.label(t.zero().expect("zero"))));
}

fn radical_text(r: &RadicalReport, labels: &[String], out: &mut String) {
    out.push_str(&format!(
        "radical: dim {}, nilpotency index {}, J^2 {}, {}\n",
        r.dim,
        r.nilpotency_index,
        if r.j_squared_zero { "= 0" } else { "!= 0" },
        if r.central { "central" } else { "not central" }
    ));
    for v in &r.basis {
        let terms: Vec<String> =
            v.iter().zip(labels).filter(|(c, _)| c.as_str() != "0").map(|(c, l)| format!("{c}*{l}")).collect();
        out.push_str(&format!("  {}\n", terms.join(" + ")));
    }
}

fn verdict_text(v: &Verdict, a: &Analysis, field: &str, out: &mut String) {
    out.push_str(&format!("field: {field}\n"));
    out.push_str(&format!("hyperbolic: {}\n", if v.hyperbolic { "yes" } else { "no" }));
    out.push_str(&format!("regime: {}\n", v.regime));
    if let Some(q) = &v.quadratic {
        match q.row {
            Some(row) => out.push_str(&format!("table row: {row:?}\n")),
            None => out.push_str("table row: none\n"),
        }
    }
    if let Some(u) = v.units_finite {
        out.push_str(&format!("unit group finite: {u}\n"));
    }
    series_text(a, out);
    if let Some(viol) = &v.violation {
        out.push_str(&format!("violation ({:?}): {} at factors {:?}\n", viol.kind, viol.message, viol.factors));
    }
    out.push_str(&format!(
        "oracle: radical dim {}, J^2 {}, unital {}\n",
        v.oracle.radical_dim,
        if v.oracle.j_squared_zero { "= 0" } else { "!= 0" },
        v.oracle.unital
    ));
}

fn verdict_json(v: &Verdict, a: &Analysis) -> Value {
    let mut value = serde_json::to_value(v).expect("verdicts serialize");
    value["series"] = series_json(a);
    value
}

fn contracted_labels(a: &Analysis) -> Vec<String> {
    let t = &a.series.semigroup;
    let theta = t.zero().expect("zero");
    t.elements().filter(|&x| x != theta).map(|x| t.label(x)).collect()
}

fn factor_line(f: &FactorReport) -> String {
    format!("{:?}({})", f.tag, f.detail)
}

struct Output {
    json: bool,
    adjoin_identity: bool,
}

impl Output {
    fn run(&self, command: &Command, sink: &mut dyn Write) -> Result<(), Error> {
        let mut text = String::new();
        let value: Value = match command {
            Command::Validate { input } => {
                let s = load(input, self.adjoin_identity)?;
                let id = s.identity().map(|x| s.label(x));
                let zero = s.zero().map(|x| s.label(x));
                text = format!(
                    "valid semigroup of order {}\nzero: {}\nidentity: {}\ncommutative: {}\ngroup: {}\ninverse: {}\n",
                    s.order(),
                    zero.as_deref().unwrap_or("none"),
                    id.as_deref().unwrap_or("none"),
                    s.is_commutative(),
                    s.is_group(),
                    s.is_inverse()
                );
                json!({
                    "valid": true,
                    "order": s.order(),
                    "zero": zero,
                    "identity": id,
                    "commutative": s.is_commutative(),
                    "group": s.is_group(),
                    "inverse": s.is_inverse(),
                })
            }
            Command::Series { input } => {
                let a = analyze(&load(input, self.adjoin_identity)?)?;
                series_text(&a, &mut text);
                series_json(&a)
            }
            Command::Analyze { input } => {
                let a = analyze(&load(input, self.adjoin_identity)?)?;
                let rad = RadicalReport::from(&a.radical);
                series_text(&a, &mut text);
                radical_text(&rad, &contracted_labels(&a), &mut text);
                json!({ "series": series_json(&a), "radical": rad })
            }
            Command::Classify { input } => {
                let s = load(input, self.adjoin_identity)?;
                let v = classify(&s, FieldSpec::Rationals)?;
                let a = analyze(&s)?;
                verdict_text(&v, &a, "Q", &mut text);
                verdict_json(&v, &a)
            }
            Command::ClassifyQuad { input, d } => {
                let s = load(input, self.adjoin_identity)?;
                let v = classify(&s, FieldSpec::quadratic(*d)?)?;
                let a = analyze(&s)?;
                verdict_text(&v, &a, &format!("Q(sqrt(-{d}))"), &mut text);
                verdict_json(&v, &a)
            }
            Command::Block { input } => {
                let s = load(input, self.adjoin_identity)?;
                let b = block_structure(&s)?;
                let (t, _) = s.with_zero();
                text = format!("block: {:?}\n", b.tag);
                if let Some(w) = &b.witnesses {
                    text.push_str(&format!("e1 = {}, en = {}, j0 = {}\n", t.label(w.e1), t.label(w.en), t.label(w.j0)));
                    if let Some(e3) = w.e3 {
                        text.push_str(&format!("e3 = {}\n", t.label(e3)));
                    }
                }
                serde_json::to_value(b).expect("blocks serialize")
            }
            Command::Algebra { input } => {
                let s = load(input, self.adjoin_identity)?;
                let (t, _) = s.with_zero();
                let alg = contracted_algebra(&t)?;
                let dump = alg.dump()?;
                text = format!("contracted algebra of dimension {}\n", dump.dim);
                for &(i, j, k, num, den) in &dump.structure {
                    let c = if den == 1 { num.to_string() } else { format!("{num}/{den}") };
                    let (li, lj, lk) = (&dump.labels[i], &dump.labels[j], &dump.labels[k]);
                    text.push_str(&format!("  {li}*{lj} = {c}*{lk}\n"));
                }
                match &dump.unity {
                    Some(u) => text.push_str(&format!("unity: [{}]\n", u.join(", "))),
                    None => text.push_str("unity: none\n"),
                }
                serde_json::to_value(&dump).expect("dumps serialize")
            }
            Command::Enumerate { order, filter, d } => return self.enumerate(*order, *filter, *d, sink),
            Command::Fixtures { name: Some(name) } => {
                let s = fixture(name)?;
                text = s.to_text();
                serde_json::from_str(&s.to_json()).expect("Cayley JSON")
            }
            Command::Fixtures { name: None } => {
                let names = fixture_names();
                text = names.iter().map(|n| format!("{n}\n")).collect();
                json!(names)
            }
        };
        let rendered = if self.json { format!("{value}\n") } else { text };
        sink.write_all(rendered.as_bytes()).map_err(|e| Error::Parse(format!("write: {e}")))
    }

    fn enumerate(&self, order: usize, filter: Filter, d: Option<i64>, sink: &mut dyn Write) -> Result<(), Error> {
        let field = match d {
            Some(d) => FieldSpec::quadratic(d)?,
            None => FieldSpec::Rationals,
        };
        let (mut kept, mut skipped) = (0usize, 0usize);
        let mut failure = None;
        let total = enumerate_semigroups(order, |s| {
            if failure.is_some() {
                return;
            }
            let s = if self.adjoin_identity { s.with_identity().0 } else { s.clone() };
            let v = match classify(&s, field) {
                Ok(v) => v,
                Err(Error::NonUnital) => {
                    skipped += 1;
                    return;
                }
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            };
            if !filter.keeps(&v) {
                return;
            }
            kept += 1;
            let line = if self.json {
                let table: Value = serde_json::from_str(&s.to_json()).expect("Cayley JSON");
                format!("{}\n", json!({ "semigroup": table, "hyperbolic": v.hyperbolic, "regime": v.regime }))
            } else {
                let rows: Vec<String> =
                    s.rows().iter().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect();
                let factors: Vec<String> = v.factors.iter().map(factor_line).collect();
                format!("{} | {} | {}\n", rows.join(" / "), v.regime, factors.join(", "))
            };
            if let Err(e) = sink.write_all(line.as_bytes()) {
                failure = Some(Error::Parse(format!("write: {e}")));
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        eprintln!("{total} classes of order {order}; {kept} listed; {skipped} skipped as non-unital");
        Ok(())
    }
}

fn report_error(e: &Error, json: bool) {
    if json {
        println!("{}", json!({ "error": { "kind": error_kind(e), "message": e.to_string() } }));
    }
    eprintln!("error: {e}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let runner = Output { json: cli.json, adjoin_identity: cli.adjoin_identity };
    let result = match &cli.out {
        Some(path) => match fs::File::create(path) {
            Ok(mut f) => runner.run(&cli.command, &mut f),
            Err(e) => Err(Error::Parse(format!("{}: {e}", path.display()))),
        },
        None => runner.run(&cli.command, &mut io::stdout().lock()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            report_error(&e, cli.json);
            ExitCode::from(exit_code(&e))
        }
    }
}
