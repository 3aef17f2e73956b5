//! Command-line front end. [`run_args`] parses arguments and returns the
//! exit status with the text that would be printed, so the binary is a
//! thin wrapper and tests can drive it in-process.

pub mod input;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::basis::{ideal_equal, Ideal};
use crate::deform::{homogenized_ideal_unchecked, tangent_cone};
use crate::error::Error;
use crate::hilbert::{hilbert_series, local_hilbert_series, HilbertData};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::spectrum::{a_sdim, connected_in_codim, local_dimension, min_primes_general, sdim};
use crate::verify::{self, ExampleReport};

use input::{format_problem, parse_field, parse_order, parse_problem, Problem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis for a global order
    Gb,
    /// Standard basis in the localization at the origin
    StdBasis,
    /// Tangent cone (ideal of initial forms)
    TangentCone,
    /// Homogenization hom(I) with its certificates
    Homogenize,
    /// Hilbert series and coefficients (of the associated graded ring when the input is not homogeneous)
    Hilbert,
    /// Minimal primes through the origin
    MinPrimes,
    /// The graph on minimal primes for a given s
    Gamma,
    /// Connectedness in codimension s
    Connectedness,
    /// Smallest dimension of a minimal prime
    Sdim,
    /// Full report on the family p_n and the non-reduced example
    VerifyPaper,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::StdBasis => "std-basis",
            Command::TangentCone => "tangent-cone",
            Command::Homogenize => "homogenize",
            Command::Hilbert => "hilbert",
            Command::MinPrimes => "min-primes",
            Command::Gamma => "gamma",
            Command::Connectedness => "connectedness",
            Command::Sdim => "sdim",
            Command::VerifyPaper => "verify-paper",
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "tancone", version, about = "Tangent cones, homogenization and Hilbert-Samuel data of local rings")]
pub struct Job {
    #[command(subcommand)]
    pub command: Command,
    /// Coefficient field: Q, Fp (p = 32003) or Fp:<p>
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Monomial order: degrevlex (dp), lex (lp) or negdegrevlex (ds)
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Codimension parameter for gamma and connectedness
    #[arg(long, global = true)]
    pub s: Option<usize>,
    /// Use the family member p_n as input
    #[arg(long, global = true, alias = "n-family")]
    pub n: Option<u32>,
    /// Truncation degree for local comparisons
    #[arg(long, global = true)]
    pub truncation: Option<u32>,
    /// Emit one JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Problem file
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Problem text given directly
    #[arg(long, global = true)]
    pub inline: Option<String>,
}

/// Exit status and output of one job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    inputs: Map<String, Value>,
    results: Map<String, Value>,
    certificates: Vec<Value>,
    verdicts: Map<String, Value>,
    status: &'static str,
}

impl Report {
    fn new() -> Self {
        Report { inputs: Map::new(), results: Map::new(), certificates: Vec::new(), verdicts: Map::new(), status: "ok" }
    }

    fn result(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.into(), v.into());
    }

    fn certificate(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        let detail = detail.into();
        self.certificates.push(json!({ "name": name, "holds": holds, "detail": detail }));
        if !holds {
            self.status = "property-failure";
        }
    }

    fn code(&self) -> i32 {
        if self.status == "property-failure" {
            EXIT_PROPERTY_FAILURE
        } else {
            EXIT_OK
        }
    }
}

fn root_cause(e: &Error) -> &Error {
    match e {
        Error::Stage { source, .. } => root_cause(source),
        other => other,
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match root_cause(e) {
        Error::CertificateFailed { .. } => EXIT_PROPERTY_FAILURE,
        Error::CannotCertify(_) => EXIT_OK,
        _ => EXIT_INPUT_ERROR,
    }
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|x| Value::String(x.to_string())).collect())
}

fn input_error(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn load(job: &Job) -> Result<Problem, Error> {
    let field = job.field.as_deref().map(parse_field).transpose()?;
    let order = job.order.as_deref().map(parse_order).transpose()?;
    let sources = [job.input.is_some(), job.inline.is_some(), job.n.is_some()].iter().filter(|&&b| b).count();
    if sources != 1 {
        return Err(input_error("give exactly one of --input, --inline or --n"));
    }
    let text = if let Some(n) = job.n {
        let ideal = verify::build_example(n)?;
        format_problem(ideal.ring(), ideal.generators())
    } else if let Some(path) = &job.input {
        std::fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?
    } else {
        job.inline.clone().unwrap()
    };
    parse_problem(&text, field, order)
}

fn hilbert_value(h: &HilbertData) -> Value {
    json!({
        "numerator": h.numerator_string(),
        "numerator_coefficients": strings(&h.numerator),
        "dim": h.dim,
        "e": strings(&h.e),
        "derivatives": strings(&h.derivatives),
        "multiplicity": h.multiplicity().map(|m| m.to_string()),
        "hilbert_polynomial": h.hf_polynomial.to_string(),
        "hilbert_samuel_polynomial": h.hs_polynomial.to_string(),
    })
}

fn require_s(job: &Job) -> Result<usize, Error> {
    job.s.ok_or_else(|| input_error(format!("{} needs --s", job.command.name())))
}

fn execute(job: &Job, rep: &mut Report) -> Result<(), Error> {
    if job.command == Command::VerifyPaper {
        let n = job.n.ok_or_else(|| input_error("verify-paper needs --n"))?;
        rep.inputs.insert("n".into(), json!(n));
        return verify_paper(n, rep);
    }
    let problem = load(job)?;
    let ideal = Ideal::new(&problem.ring, problem.generators.clone())?;
    rep.inputs.insert("ring".into(), json!(problem.ring.to_string()));
    rep.inputs.insert("order".into(), json!(problem.ring.order().name()));
    rep.inputs.insert("ideal".into(), strings(ideal.generators()));
    if let Some(n) = job.n {
        rep.inputs.insert("n".into(), json!(n));
    }
    match job.command {
        Command::Gb => {
            if problem.ring.order().is_local() {
                return Err(input_error("gb needs a global order; use std-basis for local orders"));
            }
            let gb = ideal.groebner()?;
            rep.result("basis", strings(gb.generators()));
            rep.result("leading_monomials", strings(gb.generators().iter().map(|g| {
                Polynomial::monomial(g.ring(), g.ring().field().one(), g.leading_monomial().unwrap().clone())
            })));
        }
        Command::StdBasis => {
            let ideal = if job.order.is_some() { ideal } else { ideal.with_order(MonomialOrder::NegDegRevLex) };
            let sb = ideal.standard_basis()?;
            rep.inputs.insert("order".into(), json!(sb.ring().order().name()));
            rep.result("basis", strings(sb.generators()));
        }
        Command::TangentCone => {
            let cone = tangent_cone(&ideal)?;
            rep.result("tangent_cone", strings(cone.generators()));
            if let Some(n) = job.n {
                let expected = verify::expected_tangent_cone(n).in_ring(cone.ring());
                let holds = ideal_equal(&cone, &expected)?;
                rep.certificate("in(p_n) = (x^2, x*y, y^2, y*z^n - x*w^n)", holds, format!("computed {cone}"));
            }
        }
        Command::Homogenize => {
            let h = homogenized_ideal_unchecked(&ideal, job.truncation)?;
            rep.result("ring", h.extended_ring.to_string());
            rep.result("generators", strings(&h.generators));
            rep.result("t_weight_degree", strings(&h.t_weight_degree));
            rep.result("truncation", h.truncation);
            for c in &h.certificates {
                rep.certificate(c.identity, c.holds, c.detail.clone());
            }
        }
        Command::Hilbert => {
            let graded = ideal.is_homogeneous();
            let h = if graded { hilbert_series(&ideal)? } else { local_hilbert_series(&ideal)? };
            rep.result("graded_input", graded);
            rep.result("hilbert", hilbert_value(&h));
        }
        Command::MinPrimes => match min_primes_general(&ideal) {
            Ok(primes) => {
                let list: Vec<Value> = primes
                    .iter()
                    .map(|p| json!({ "ideal": p.ideal.to_string(), "kind": p.kind.name(), "dim": p.dim }))
                    .collect();
                rep.result("primes", list);
                rep.result("certification", json!({ "declined": false }));
            }
            Err(e) if e.is_cannot_certify() => {
                rep.status = "cannot-certify";
                rep.result("certification", json!({ "declined": true, "reason": e.to_string() }));
            }
            Err(e) => return Err(e),
        },
        Command::Gamma | Command::Connectedness => {
            let s = require_s(job)?;
            rep.inputs.insert("s".into(), json!(s));
            let c = match connected_in_codim(&ideal, s) {
                Ok(c) => c,
                Err(e) if e.is_cannot_certify() => {
                    rep.status = "cannot-certify";
                    rep.result("certification", json!({ "declined": true, "reason": e.to_string() }));
                    return Ok(());
                }
                Err(e) => return Err(e),
            };
            rep.result("dim", json!(c.d));
            rep.result("vertices", strings(c.graph.vertices.iter().map(|p| &p.ideal)));
            rep.result("edges", json!(c.graph.edges()));
            if job.command == Command::Gamma {
                rep.result("pair_dims", json!(c.graph.pair_dims));
                rep.result("components", json!(c.graph.components()));
            } else {
                let witness: Vec<Vec<String>> = c
                    .graph
                    .components()
                    .iter()
                    .map(|comp| comp.iter().map(|&k| c.graph.vertices[k].ideal.to_string()).collect())
                    .collect();
                let detail = if c.connected { String::new() } else { format!("components {witness:?}") };
                rep.certificate(&format!("connected in codimension {s}"), c.connected, detail);
            }
            rep.verdicts.insert("connected".into(), json!(c.connected));
            rep.verdicts.insert("partition_check".into(), json!(c.partition_check));
            rep.verdicts.insert("analytically_irreducible".into(), json!(c.analytically_irreducible));
        }
        Command::Sdim => {
            let value = match sdim(&ideal) {
                Ok(v) => v,
                Err(e) if e.is_cannot_certify() => {
                    rep.status = "cannot-certify";
                    rep.result("certification", json!({ "declined": true, "reason": e.to_string() }));
                    return Ok(());
                }
                Err(e) => return Err(e),
            };
            rep.result("sdim", json!(value));
            rep.result("dim", json!(local_dimension(&ideal)?));
            if ideal.is_monomial() {
                rep.result("a_sdim", json!(a_sdim(&ideal)?));
            }
        }
        Command::VerifyPaper => unreachable!(),
    }
    Ok(())
}

fn verify_paper(n: u32, rep: &mut Report) -> Result<(), Error> {
    let report: ExampleReport = verify::verify_example(n)?;
    let counter = verify::verify_counterexample()?;
    let ni = i64::from(n);
    let mut expected_h = vec!["1".to_string(), "2".into()];
    expected_h.extend((2..=ni).map(|_| "0".to_string()));
    expected_h.push("-1".into());
    let h: Vec<String> = report.hilbert.numerator.iter().map(|c| c.to_string()).collect();
    rep.certificate("parametrization annihilates p_n", report.parametrization_vanishes, "");
    rep.certificate("tangent cone = (x^2, x*y, y^2, y*z^n - x*w^n)", true, report.tangent_cone.to_string());
    rep.certificate("radical of the tangent cone = (x, y)", report.radical_check.equal, format!("{:?}", report.radical_check));
    rep.certificate("tangent cone is saturated", report.saturated_at_irrelevant, "");
    rep.certificate("h(t) = 1 + 2t - t^(n+1)", h == expected_h, report.hilbert.numerator_string());
    rep.certificate("length k[x,y,z,w]/(x,y,z^n,w^n) = n^2", report.n_squared == u64::from(n * n), report.n_squared.to_string());
    rep.certificate("e1(q) = -n", report.goto_nishida.e1_of_q == -ni, report.goto_nishida.e1_of_q.to_string());
    rep.certificate("resolution maps compose to zero", report.resolution.ok, format!("{:?}", report.resolution.witness));
    rep.certificate(
        "jacobian minors and isolated singularity",
        report.jacobian.minor_24_14_expected && report.jacobian.minor_13_34_expected && report.jacobian.z_in_radical && report.jacobian.w_in_radical,
        format!("[24|14] = {}, [13|34] = {}", report.jacobian.minor_24_14, report.jacobian.minor_13_34),
    );
    rep.certificate("tangent cone connected in codim 1, ring not", counter.exhibits_gap(), "");
    for i in &report.verdicts {
        rep.verdicts.insert(
            i.name.into(),
            json!({ "holds": i.holds, "lhs": i.lhs.to_string(), "relation": i.relation(), "rhs": i.rhs.to_string() }),
        );
    }
    if let Some(s) = &report.corrected.strict {
        rep.verdicts.insert(s.name.into(), json!({ "holds": s.holds, "lhs": s.lhs.to_string(), "relation": s.relation(), "rhs": s.rhs.to_string() }));
    }
    rep.result("example", report.to_json());
    rep.result("counterexample", counter.to_json());
    Ok(())
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for i in items {
                            out.push_str(&format!("{pad}  - {}\n", scalar(i)));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

fn text_report(command: &str, rep: &Report) -> String {
    let mut out = format!("command: {command}\nstatus: {}\n", rep.status);
    render(&Value::Object(rep.inputs.clone()), 0, &mut out);
    if !rep.results.is_empty() {
        out.push_str("results:\n");
        render(&Value::Object(rep.results.clone()), 1, &mut out);
    }
    if !rep.certificates.is_empty() {
        out.push_str("certificates:\n");
        for c in &rep.certificates {
            if c["holds"] == json!(true) {
                out.push_str(&format!("  holds: {}\n", scalar(&c["name"])));
            } else {
                out.push_str(&format!("  FAILS: {}\n    witness: {}\n", scalar(&c["name"]), scalar(&c["detail"])));
            }
        }
    }
    if !rep.verdicts.is_empty() {
        out.push_str("verdicts:\n");
        render(&Value::Object(rep.verdicts.clone()), 1, &mut out);
    }
    out
}

/// Runs a parsed job.
pub fn run(job: &Job) -> Outcome {
    let command = job.command.name();
    let mut rep = Report::new();
    match execute(job, &mut rep) {
        Ok(()) => {
            let stdout = if job.json {
                let doc = json!({
                    "command": command,
                    "status": rep.status,
                    "inputs": rep.inputs,
                    "results": rep.results,
                    "certificates": rep.certificates,
                    "verdicts": rep.verdicts,
                });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            } else {
                text_report(command, &rep)
            };
            Outcome { code: rep.code(), stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = exit_code_for(&e);
            let status = if code == EXIT_INPUT_ERROR { "input-error" } else { "property-failure" };
            let stdout = if job.json {
                let doc = json!({ "command": command, "status": status, "inputs": rep.inputs, "error": e.to_string() });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            } else {
                String::new()
            };
            Outcome { code, stdout, stderr: format!("error: {e}\n") }
        }
    }
}

/// Parses command-line arguments (including the program name) and runs them.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Job::try_parse_from(args) {
        Ok(job) => run(&job),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
    }
}
