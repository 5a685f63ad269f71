//! The `foliate` command line: parse a field and a 1-form, run one analysis, print a report.
//!
//! Every command renders either as plain text or, with `--format tree`, as one JSON document.
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Read;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classification::{
    classify_convex, degenerate_along_line, invariant_lines, table1, verify_theorem_a,
    verify_theorem_b_support, Report,
};
use crate::foliation::{
    inflection_divisor, larger_field, local_invariants, FoliationError, Line, ProjFoliation,
};
use crate::homogeneous::{catalog, cs_polynomial, hom_type, CatalogName, HomFoliation};
use crate::numeric::NumberField;
use crate::polynomial::Divisor;
use crate::text::{format_form, parse_field, parse_form_with, ParsedForm};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Tree,
}

#[derive(Debug, Parser)]
#[command(name = "foliate", version, about = "Exact invariants of foliations of the projective plane")]
pub struct Args {
    /// Field declaration, e.g. `Q(w): w^2 + w + 1 = 0`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// `INPUT` is a form (`omega = ... dx + ... dy`), a file holding one, a catalog name, or `-`
/// (the default) for standard input.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singular points, inflection curve, invariant lines and, for homogeneous data, the type.
    Analyze { input: Option<String> },
    /// Type of a homogeneous foliation.
    Type { input: Option<String> },
    /// Whether every leaf that is not a line has no inflection point.
    Convex { input: Option<String> },
    /// The inflection curve split into invariant lines and the rest.
    Inflection { input: Option<String> },
    /// Camacho–Sad polynomial of a homogeneous foliation.
    CsPoly { input: Option<String> },
    /// Invariant lines and the singular points on them.
    Lines { input: Option<String> },
    /// Homogeneous foliation obtained along an invariant line.
    Degenerate {
        input: Option<String>,
        /// Line coefficients `a,b,c` of `a x + b y + c z`.
        #[arg(long)]
        line: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// List the named foliations, or print one.
    Catalog { name: Option<String> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    TheoremA,
    TheoremB,
}

/// Shared state of one invocation.
#[derive(Clone, Debug)]
pub struct Session {
    pub field: NumberField,
    pub format: Format,
    pub definitions: BTreeMap<String, ParsedForm>,
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Rendered {
    text: String,
    tree: Value,
    passed: bool,
}

#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Res<T> = Result<T, InputError>;

impl Session {
    pub fn new(field: NumberField, format: Format) -> Self {
        Session {
            field,
            format,
            definitions: BTreeMap::new(),
        }
    }

    /// Reads a form from text, a file, a catalog name or `stdin`, and promotes it to the
    /// session field.
    fn load(&mut self, input: Option<&str>, stdin: &mut dyn Read) -> Res<ParsedForm> {
        let raw = match input {
            None | Some("-") => {
                let mut s = String::new();
                stdin.read_to_string(&mut s)?;
                s
            }
            Some(s) if !s.contains('=') && !s.contains(" d") && Path::new(s).is_file() => {
                std::fs::read_to_string(s)?
            }
            Some(s) => s.to_string(),
        };
        let key = raw.trim().to_string();
        if let Some(f) = self.definitions.get(&key) {
            return Ok(f.clone());
        }
        let parsed = match key.parse::<CatalogName>() {
            Ok(name) => {
                let e = catalog(name, &self.field)?;
                ParsedForm {
                    field: self.field.clone(),
                    coefficients: vec![e.a, e.b],
                }
            }
            Err(_) => parse_form_with(&raw, Some(&self.field))?,
        };
        let field = larger_field(&parsed.field, &self.field)?;
        let coefficients = parsed
            .coefficients
            .iter()
            .map(|c| c.promote(&field))
            .collect::<Result<Vec<_>, _>>()?;
        let form = ParsedForm { field, coefficients };
        self.definitions.insert(key, form.clone());
        Ok(form)
    }

    fn execute(&mut self, command: &Command, stdin: &mut dyn Read) -> Res<Rendered> {
        match command {
            Command::Analyze { input } => {
                let form = self.load(input.as_deref(), stdin)?;
                analyze(&form)
            }
            Command::Type { input } => type_of(&self.load(input.as_deref(), stdin)?),
            Command::Convex { input } => convex(&self.load(input.as_deref(), stdin)?),
            Command::Inflection { input } => inflection(&self.load(input.as_deref(), stdin)?),
            Command::CsPoly { input } => cs_poly(&self.load(input.as_deref(), stdin)?),
            Command::Lines { input } => lines(&self.load(input.as_deref(), stdin)?),
            Command::Degenerate { input, line } => {
                let form = self.load(input.as_deref(), stdin)?;
                degenerate(&form, line)
            }
            Command::Verify { suite } => Ok(verify(*suite)),
            Command::Catalog { name } => self.catalog(name.as_deref()),
        }
    }

    fn catalog(&self, name: Option<&str>) -> Res<Rendered> {
        match name {
            None => {
                let mut names: Vec<String> = [
                    CatalogName::Fermat(4),
                    CatalogName::H0(4),
                    CatalogName::H1(4),
                    CatalogName::F1(4),
                    CatalogName::F2(4),
                    CatalogName::Omega3Family { degree: 5, nu: 2 },
                ]
                .iter()
                .chain(CatalogName::ALL_FIXED.iter())
                .map(|n| n.to_string())
                .collect();
                names.sort();
                Ok(Rendered {
                    text: names.join("\n"),
                    tree: json!({ "command": "catalog", "names": names }),
                    passed: true,
                })
            }
            Some(n) => {
                let name: CatalogName = n.parse()?;
                let e = catalog(name, &self.field)?;
                let text = format_form(&self.field, &[e.a.clone(), e.b.clone()]);
                Ok(Rendered {
                    tree: json!({
                        "command": "catalog",
                        "name": name.to_string(),
                        "field": self.field.to_string(),
                        "a": e.a.to_string(),
                        "b": e.b.to_string(),
                        "form": text,
                    }),
                    text,
                    passed: true,
                })
            }
        }
    }
}

fn foliation_of(form: &ParsedForm) -> Res<ProjFoliation> {
    Ok(form.foliation()?)
}

fn homogeneous_of(form: &ParsedForm) -> Res<HomFoliation> {
    match form.coefficients.as_slice() {
        [a, b] => Ok(HomFoliation::new(a.clone(), b.clone())?),
        _ => Err(InputError("expected an affine form A dx + B dy with homogeneous A, B".into())),
    }
}

fn divisor_tree(d: &Divisor) -> Value {
    Value::Array(
        d.factors()
            .iter()
            .map(|(p, e)| json!({ "factor": p.to_string(), "multiplicity": e }))
            .collect(),
    )
}

fn divisor_text(d: &Divisor) -> String {
    if d.is_empty() {
        "1".into()
    } else {
        d.to_string()
    }
}

fn analyze(form: &ParsedForm) -> Res<Rendered> {
    let f = foliation_of(form)?;
    let field = f.field().clone();
    let inv = invariant_lines(&f, &field)?;
    let mut text = vec![
        format!("field: {}", field),
        format!("degree: {}", f.degree()),
        format_form(&field, &form.coefficients),
        format!(
            "singular points: {} found, total Milnor number {} of {}",
            inv.singular.points.len(),
            inv.singular.milnor_total(),
            inv.singular.expected_total
        ),
    ];
    let mut points = Vec::new();
    for p in &inv.singular.points {
        let l = local_invariants(&inv.foliation, p, &inv.lines_through(p))?;
        let bb = l.bb.as_ref().map(|b| b.to_string());
        let cs: Vec<Value> = l
            .lines
            .iter()
            .map(|i| json!({ "line": i.line.to_string(), "cs": i.cs.as_ref().map(|c| c.to_string()) }))
            .collect();
        text.push(format!(
            "  {}  mu {}  nu {}  tau {}  lines {}{}",
            p,
            l.mu,
            l.nu,
            l.tau,
            l.sigma,
            bb.as_ref().map(|b| format!("  BB {b}")).unwrap_or_default()
        ));
        points.push(json!({
            "point": p.to_string(),
            "chart": l.chart.name(),
            "mu": l.mu,
            "nu": l.nu,
            "tau": l.tau,
            "sigma": l.sigma,
            "radial": l.is_radial(),
            "bb": bb,
            "cs": cs,
        }));
    }
    if !inv.singular.unresolved.is_empty() {
        text.push("  (some singular points lie outside the field)".into());
    }
    let mut tree = json!({
        "command": "analyze",
        "field": field.to_string(),
        "degree": f.degree(),
        "form": format_form(&field, &form.coefficients),
        "singular_points": points,
        "milnor_total": inv.singular.milnor_total(),
        "expected_milnor_total": inv.singular.expected_total,
        "invariant_lines": inv.lines.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "lines_complete": inv.complete,
    });
    text.push(format!(
        "invariant lines: {}{}",
        inv.lines.len(),
        if inv.complete { "" } else { " (partial)" }
    ));
    match inflection_divisor(&f) {
        Ok(d) => {
            let convex = d.transverse_part.is_empty();
            text.push(format!("inflection curve: invariant {}", divisor_text(&d.invariant_part)));
            text.push(format!("inflection curve: transverse {}", divisor_text(&d.transverse_part)));
            text.push(format!("convex: {}", if convex { "yes" } else { "no" }));
            tree["convex"] = json!(convex);
            tree["inflection_invariant"] = divisor_tree(&d.invariant_part);
            tree["inflection_transverse"] = divisor_tree(&d.transverse_part);
        }
        Err(FoliationError::EveryLeafIsLinear) => {
            text.push("inflection curve: identically zero, every leaf is a line".into());
            tree["convex"] = json!(true);
        }
        Err(e) => return Err(e.into()),
    }
    if let Ok(h) = homogeneous_of(form) {
        if let Ok(t) = hom_type(&h) {
            text.push(format!("type: {t}"));
            tree["type"] = json!(t.to_string());
        }
        if let Ok(p) = cs_polynomial(&h) {
            text.push(format!("Camacho-Sad polynomial: {p}"));
            tree["cs_polynomial"] = json!(p.to_string());
        }
    }
    Ok(Rendered {
        text: text.join("\n"),
        tree,
        passed: true,
    })
}

fn type_of(form: &ParsedForm) -> Res<Rendered> {
    let h = homogeneous_of(form)?;
    let t = hom_type(&h)?;
    Ok(Rendered {
        text: t.to_string(),
        tree: json!({
            "command": "type",
            "type": t.to_string(),
            "radial": t.r,
            "transverse": t.t,
            "convex": t.is_convex(),
        }),
        passed: true,
    })
}

fn convex(form: &ParsedForm) -> Res<Rendered> {
    let f = foliation_of(form)?;
    let (convex, transverse) = match inflection_divisor(&f) {
        Ok(d) => (d.transverse_part.is_empty(), d.transverse_part),
        Err(FoliationError::EveryLeafIsLinear) => (true, Divisor::new()),
        Err(e) => return Err(e.into()),
    };
    let mut text = vec![if convex { "convex" } else { "non-convex" }.to_string()];
    for (p, e) in transverse.factors() {
        let what = if p.total_degree() == Some(1) {
            Line::from_form(p).map(|l| format!("line {l}")).unwrap_or_else(|_| p.to_string())
        } else {
            format!("curve {p}")
        };
        text.push(format!("  transverse {what}, multiplicity {e}"));
    }
    Ok(Rendered {
        text: text.join("\n"),
        tree: json!({
            "command": "convex",
            "convex": convex,
            "transverse": divisor_tree(&transverse),
        }),
        passed: true,
    })
}

fn inflection(form: &ParsedForm) -> Res<Rendered> {
    let f = foliation_of(form)?;
    let d = inflection_divisor(&f)?;
    let text = [
        format!("degree: {}", d.polynomial.total_degree().unwrap_or(0)),
        format!("invariant: {}", divisor_text(&d.invariant_part)),
        format!("transverse: {}", divisor_text(&d.transverse_part)),
    ];
    Ok(Rendered {
        text: text.join("\n"),
        tree: json!({
            "command": "inflection",
            "polynomial": d.polynomial.to_string(),
            "invariant": divisor_tree(&d.invariant_part),
            "transverse": divisor_tree(&d.transverse_part),
        }),
        passed: true,
    })
}

fn cs_poly(form: &ParsedForm) -> Res<Rendered> {
    let h = homogeneous_of(form)?;
    let p = cs_polynomial(&h)?;
    Ok(Rendered {
        text: p.to_string(),
        tree: json!({ "command": "cs-poly", "field": h.field().to_string(), "polynomial": p.to_string() }),
        passed: true,
    })
}

fn lines(form: &ParsedForm) -> Res<Rendered> {
    let f = foliation_of(form)?;
    let inv = invariant_lines(&f, f.field())?;
    let mut text: Vec<String> = inv.lines.iter().map(|l| l.to_string()).collect();
    text.push(format!(
        "{} invariant lines{}",
        inv.lines.len(),
        if inv.complete { "" } else { " (partial)" }
    ));
    let incidence: Vec<Value> = inv
        .incidence
        .iter()
        .map(|(p, n)| json!({ "point": p.to_string(), "lines": n }))
        .collect();
    Ok(Rendered {
        text: text.join("\n"),
        tree: json!({
            "command": "lines",
            "lines": inv.lines.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "complete": inv.complete,
            "incidence": incidence,
        }),
        passed: true,
    })
}

fn degenerate(form: &ParsedForm, line: &str) -> Res<Rendered> {
    let f = foliation_of(form)?;
    let line = Line::parse_coefficients(line, f.field())?;
    let r = degenerate_along_line(&f, &line)?;
    let field = r.hom.field().clone();
    let hom_text = format_form(&field, &[r.hom.a().clone(), r.hom.b().clone()]);
    let t = hom_type(&r.hom).map(|t| t.to_string()).ok();
    let cs = cs_polynomial(&r.hom).map(|p| p.to_string()).ok();
    let row = classify_convex(&r.hom).ok().and_then(|m| m.unique());
    let checks = serde_json::to_value(r.checks)?;
    let mut text = vec![format!("line: {}", r.line), hom_text.clone()];
    text.push(format!("type: {}", t.clone().unwrap_or_else(|| "unavailable".into())));
    text.push(format!("Camacho-Sad polynomial: {}", cs.clone().unwrap_or_else(|| "unavailable".into())));
    text.push(match row {
        Some(i) => format!("class: {}", table1()[i - 1].representative),
        None => "class: none of the five".into(),
    });
    if let Value::Object(m) = &checks {
        for (k, v) in m {
            text.push(format!("  [{}] {k}", if v == &json!(true) { "pass" } else { "FAIL" }));
        }
    }
    let points: Vec<Value> = r
        .points
        .iter()
        .map(|p| {
            json!({
                "point": p.point.to_string(),
                "tau": p.tau,
                "hom_tau": p.hom_tau,
                "hom_mu": p.hom_mu,
                "cs": p.cs.as_ref().map(|c| c.to_string()),
                "hom_cs": p.hom_cs.as_ref().map(|c| c.to_string()),
            })
        })
        .collect();
    Ok(Rendered {
        text: text.join("\n"),
        tree: json!({
            "command": "degenerate",
            "line": r.line.to_string(),
            "form": hom_text,
            "type": t,
            "cs_polynomial": cs,
            "class": row.map(|i| table1()[i - 1].representative.to_string()),
            "points": points,
            "checks": checks,
        }),
        passed: r.checks.all(),
    })
}

fn verify(suite: Suite) -> Rendered {
    let report: Report = match suite {
        Suite::TheoremA => verify_theorem_a(),
        Suite::TheoremB => verify_theorem_b_support(),
    };
    Rendered {
        text: report.to_string(),
        tree: json!({
            "command": "verify",
            "title": report.title,
            "passed": report.all_passed(),
            "checks": serde_json::to_value(&report.checks).unwrap_or(Value::Null),
        }),
        passed: report.all_passed(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: msg, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: msg }
            };
        }
    };
    let field = match args.field.as_deref().map(parse_field).transpose() {
        Ok(f) => f.unwrap_or_else(NumberField::rationals),
        Err(e) => return input_error(e.to_string()),
    };
    let mut session = Session::new(field, args.format);
    match session.execute(&args.command, stdin) {
        Ok(r) => {
            let body = match session.format {
                Format::Text => r.text,
                Format::Tree => serde_json::to_string_pretty(&r.tree).expect("json"),
            };
            Outcome {
                code: if r.passed { 0 } else { 1 },
                stdout: body + "\n",
                stderr: String::new(),
            }
        }
        Err(InputError(msg)) => input_error(msg),
    }
}

fn input_error(msg: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}
