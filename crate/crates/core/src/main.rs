//! Command-line front end: exact decisions, thresholds, frontier
//! parametrization, certificates, and the numeric cross-check oracle.
//!
//! One JSON object is printed on standard output; diagnostics go to
//! standard error. Exact scalars appear as fraction strings, floating
//! approximations in separate `*_approx` fields. Exit codes: 0 for
//! holds/valid, 1 for fails/invalid, 2 for usage or parse errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use serde_json::{json, Map, Value};

use symquartic::certificates::{
    certify, from_json_str, to_canonical_json, verify, CertificateError, VerifyOutcome,
};
use symquartic::exactmath::{parse_rational, rat, rat_i, rat_to_f64, ExactReal, Rational, UniPoly};
use symquartic::forms::{decide, Counterexample, Domain, QuarticForm, Verdict};
use symquartic::frontier::{bmin_real, cmin_nonneg, param_point, BoundKind, BoundResult, CminOutcome};
use symquartic::oracle::{find_counterexample, numeric_min, VerdictHint};

const SCHEMA_VERSION: u32 = 1;

const USAGE: &str = "usage: symquartic <command> [flags]

commands:
  decide  --a R --b R --c R --domain real|nonneg [--certify]
  bmin    --a R --c R [--eps R]
  cmin    --a R --b R [--eps R]
  param   --a R --t R
  certify --a R --b R --c R --domain real|nonneg [--out FILE]
  verify  --cert FILE [--a R --b R --c R]
  oracle  --a R --b R --c R --domain real|nonneg [--budget N] [--seed N]

scalars (R) are exact: integers, fractions like -7/3, or decimals like 2.09
(converted exactly). One JSON object is printed on standard output.";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok((value, code)) => {
            println!("{value}");
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            println!("{}", json!({ "schema_version": SCHEMA_VERSION, "error": msg }));
            ExitCode::from(2)
        }
    }
}

struct Flags {
    values: BTreeMap<String, String>,
    switches: Vec<String>,
}

impl Flags {
    fn parse(args: &[String], switch_names: &[&str]) -> Result<Flags, String> {
        let mut values = BTreeMap::new();
        let mut switches = Vec::new();
        let mut i = 0;
        while i < args.len() {
            let arg = &args[i];
            let name = arg
                .strip_prefix("--")
                .ok_or_else(|| format!("unexpected argument '{arg}'"))?;
            if switch_names.contains(&name) {
                switches.push(name.to_string());
                i += 1;
            } else {
                let value = args
                    .get(i + 1)
                    .ok_or_else(|| format!("flag --{name} needs a value"))?;
                if values.insert(name.to_string(), value.clone()).is_some() {
                    return Err(format!("flag --{name} given twice"));
                }
                i += 2;
            }
        }
        Ok(Flags { values, switches })
    }

    fn check_allowed(&self, allowed: &[&str]) -> Result<(), String> {
        for name in self.values.keys().chain(self.switches.iter()) {
            if !allowed.contains(&name.as_str()) {
                return Err(format!("unknown flag --{name}"));
            }
        }
        Ok(())
    }

    fn rational(&self, name: &str) -> Result<Rational, String> {
        let raw = self
            .values
            .get(name)
            .ok_or_else(|| format!("missing required flag --{name}"))?;
        parse_rational(raw).map_err(|e| format!("--{name}: {e}"))
    }

    fn domain(&self) -> Result<Domain, String> {
        let raw = self
            .values
            .get("domain")
            .ok_or("missing required flag --domain")?;
        match raw.as_str() {
            "real" | "reals" => Ok(Domain::Reals),
            "nonneg" | "nonneg-orthant" => Ok(Domain::NonnegOrthant),
            other => Err(format!("--domain must be real or nonneg, got '{other}'")),
        }
    }

    fn eps(&self) -> Result<Rational, String> {
        match self.values.get("eps") {
            None => Ok(rat(1, 1_000_000_000_000)),
            Some(raw) => {
                let eps = parse_rational(raw).map_err(|e| format!("--eps: {e}"))?;
                if eps <= rat_i(0) {
                    return Err("--eps must be positive".into());
                }
                Ok(eps)
            }
        }
    }

    fn integer(&self, name: &str, default: u64) -> Result<u64, String> {
        match self.values.get(name) {
            None => Ok(default),
            Some(raw) => raw
                .parse::<u64>()
                .map_err(|_| format!("--{name} must be a nonnegative integer")),
        }
    }
}

fn run(args: &[String]) -> Result<(Value, u8), String> {
    let Some(command) = args.first() else {
        return Err("no command given".into());
    };
    let rest = &args[1..];
    match command.as_str() {
        "decide" => cmd_decide(rest),
        "bmin" => cmd_bmin(rest),
        "cmin" => cmd_cmin(rest),
        "param" => cmd_param(rest),
        "certify" => cmd_certify(rest),
        "verify" => cmd_verify(rest),
        "oracle" => cmd_oracle(rest),
        other => Err(format!("unknown command '{other}'")),
    }
}

fn rat_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn poly_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rat_json).collect())
}

fn exact_json(v: &ExactReal) -> Value {
    match v {
        ExactReal::Rational(r) => rat_json(r),
        ExactReal::Algebraic(x) => {
            let (lo, hi) = x.interval();
            json!({
                "defining": poly_json(x.defining()),
                "interval": [rat_json(lo), rat_json(hi)],
            })
        }
    }
}

fn exact_approx(v: &ExactReal, eps: &Rational) -> f64 {
    rat_to_f64(&v.approx(eps))
}

fn domain_json(d: Domain) -> Value {
    Value::String(
        match d {
            Domain::Reals => "real",
            Domain::NonnegOrthant => "nonneg",
        }
        .into(),
    )
}

fn counterexample_json(ce: &Counterexample) -> Value {
    json!({
        "point": ce.point.iter().map(rat_json).collect::<Vec<_>>(),
        "point_approx": ce.point.iter().map(rat_to_f64).collect::<Vec<_>>(),
        "value": rat_json(&ce.value),
        "value_approx": rat_to_f64(&ce.value),
    })
}

fn form_inputs(form: &QuarticForm) -> Value {
    json!({
        "a": rat_json(&form.a),
        "b": rat_json(&form.b),
        "c": rat_json(&form.c),
    })
}

fn cmd_decide(args: &[String]) -> Result<(Value, u8), String> {
    let flags = Flags::parse(args, &["certify"])?;
    flags.check_allowed(&["a", "b", "c", "domain", "certify"])?;
    let form = QuarticForm::new(flags.rational("a")?, flags.rational("b")?, flags.rational("c")?);
    let domain = flags.domain()?;
    let want_cert = flags.switches.iter().any(|s| s == "certify");

    let verdict = decide(&form, domain);
    let mut out = Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!("decide"));
    out.insert("inputs".into(), form_inputs(&form));
    out.insert("domain".into(), domain_json(domain));
    let code = match &verdict {
        Verdict::Holds => {
            out.insert("holds".into(), json!(true));
            if want_cert {
                match certify(&form, domain) {
                    Ok(cert) => {
                        let cert_value: Value = serde_json::from_str(&to_canonical_json(&cert))
                            .expect("canonical certificate JSON always parses");
                        out.insert("certificate".into(), cert_value);
                    }
                    Err(e) => {
                        eprintln!("certificate construction failed: {e}");
                        out.insert("certificate_unavailable".into(), json!(true));
                    }
                }
            }
            0
        }
        Verdict::Fails(ce) => {
            out.insert("holds".into(), json!(false));
            out.insert("counterexample".into(), counterexample_json(ce));
            1
        }
    };
    Ok((Value::Object(out), code))
}

fn bound_json(out: &mut Map<String, Value>, bound: &BoundResult, eps: &Rational) {
    match &bound.kind {
        BoundKind::ClosedForm => {
            out.insert("kind".into(), json!("closed-form"));
        }
        BoundKind::Parametric { t } => {
            out.insert("kind".into(), json!("parametric"));
            out.insert("t".into(), exact_json(t));
            out.insert("t_approx".into(), json!(exact_approx(t, eps)));
        }
    }
    match &bound.value {
        ExactReal::Rational(r) => {
            out.insert("value".into(), rat_json(r));
        }
        ExactReal::Algebraic(_) => {}
    }
    if let Some(defining) = &bound.defining {
        out.insert("defining_polynomial".into(), poly_json(defining));
    }
    out.insert("value_approx".into(), json!(rat_to_f64(&bound.approx)));
    out.insert(
        "equality_point".into(),
        Value::Array(bound.equality_point.iter().map(exact_json).collect()),
    );
    out.insert(
        "equality_point_approx".into(),
        json!(bound
            .equality_point
            .iter()
            .map(|v| exact_approx(v, eps))
            .collect::<Vec<_>>()),
    );
}

fn cmd_bmin(args: &[String]) -> Result<(Value, u8), String> {
    let flags = Flags::parse(args, &[])?;
    flags.check_allowed(&["a", "c", "eps"])?;
    let a = flags.rational("a")?;
    let c = flags.rational("c")?;
    let eps = flags.eps()?;
    let bound = bmin_real(&a, &c, &eps);
    let mut out = Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!("bmin"));
    out.insert(
        "inputs".into(),
        json!({ "a": rat_json(&a), "c": rat_json(&c), "eps": rat_json(&eps) }),
    );
    bound_json(&mut out, &bound, &eps);
    Ok((Value::Object(out), 0))
}

fn cmd_cmin(args: &[String]) -> Result<(Value, u8), String> {
    let flags = Flags::parse(args, &[])?;
    flags.check_allowed(&["a", "b", "eps"])?;
    let a = flags.rational("a")?;
    let b = flags.rational("b")?;
    let eps = flags.eps()?;
    let mut out = Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!("cmin"));
    out.insert(
        "inputs".into(),
        json!({ "a": rat_json(&a), "b": rat_json(&b), "eps": rat_json(&eps) }),
    );
    match cmin_nonneg(&a, &b, &eps) {
        CminOutcome::Bound(bound) => {
            bound_json(&mut out, &bound, &eps);
        }
        CminOutcome::Infeasible { required_b } => {
            out.insert("infeasible".into(), json!(true));
            out.insert("required_b".into(), rat_json(&required_b));
            out.insert("required_b_approx".into(), json!(rat_to_f64(&required_b)));
        }
    }
    Ok((Value::Object(out), 0))
}

fn cmd_param(args: &[String]) -> Result<(Value, u8), String> {
    let flags = Flags::parse(args, &[])?;
    flags.check_allowed(&["a", "t"])?;
    let a = flags.rational("a")?;
    let t = flags.rational("t")?;
    let pp = param_point(&a, &t).map_err(|e| format!("--t: {e}"))?;

    let in_range = |domain: Domain| -> bool {
        symquartic::frontier::case_intervals(&a, domain)
            .map(|ivs| ivs.iter().any(|iv| iv.contains_rational(&t)))
            .unwrap_or(false)
    };

    let mut out = Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!("param"));
    out.insert(
        "inputs".into(),
        json!({ "a": rat_json(&a), "t": rat_json(&t) }),
    );
    out.insert("b".into(), rat_json(&pp.bt));
    out.insert("b_approx".into(), json!(rat_to_f64(&pp.bt)));
    out.insert("c".into(), rat_json(&pp.ct));
    out.insert("c_approx".into(), json!(rat_to_f64(&pp.ct)));
    out.insert("p".into(), rat_json(&pp.p));
    out.insert("p_approx".into(), json!(rat_to_f64(&pp.p)));
    out.insert("q".into(), rat_json(&pp.q));
    out.insert("q_approx".into(), json!(rat_to_f64(&pp.q)));
    match &pp.k {
        Some(k) => {
            out.insert("k".into(), rat_json(k));
            out.insert("k_approx".into(), json!(rat_to_f64(k)));
        }
        None => {
            out.insert("k".into(), Value::Null);
        }
    }
    out.insert(
        "in_real_frontier_range".into(),
        json!(in_range(Domain::Reals)),
    );
    out.insert(
        "in_nonneg_frontier_range".into(),
        json!(in_range(Domain::NonnegOrthant)),
    );
    Ok((Value::Object(out), 0))
}

fn cmd_certify(args: &[String]) -> Result<(Value, u8), String> {
    let flags = Flags::parse(args, &[])?;
    flags.check_allowed(&["a", "b", "c", "domain", "out"])?;
    let form = QuarticForm::new(flags.rational("a")?, flags.rational("b")?, flags.rational("c")?);
    let domain = flags.domain()?;
    match certify(&form, domain) {
        Ok(cert) => {
            let canonical = to_canonical_json(&cert);
            if let Some(path) = flags.values.get("out") {
                std::fs::write(path, format!("{canonical}\n"))
                    .map_err(|e| format!("cannot write {path}: {e}"))?;
                eprintln!("certificate written to {path}");
            }
            let value: Value = serde_json::from_str(&canonical)
                .expect("canonical certificate JSON always parses");
            Ok((value, 0))
        }
        Err(CertificateError::DoesNotHold) => Ok((
            json!({
                "schema_version": SCHEMA_VERSION,
                "command": "certify",
                "inputs": form_inputs(&form),
                "domain": domain_json(domain),
                "holds": false,
                "error": "the form is not nonnegative on the requested domain",
            }),
            1,
        )),
        Err(CertificateError::PreconditionViolated(what)) => Err(what.to_string()),
    }
}

fn cmd_verify(args: &[String]) -> Result<(Value, u8), String> {
    let flags = Flags::parse(args, &[])?;
    flags.check_allowed(&["cert", "a", "b", "c"])?;
    let path = flags
        .values
        .get("cert")
        .ok_or("missing required flag --cert")?;
    let raw = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let cert = from_json_str(&raw).map_err(|e| format!("malformed certificate: {e}"))?;

    let has_form_flags = ["a", "b", "c"].iter().any(|k| flags.values.contains_key(*k));
    let target = if has_form_flags {
        QuarticForm::new(flags.rational("a")?, flags.rational("b")?, flags.rational("c")?)
    } else {
        cert.form.clone()
    };

    let mut out = Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!("verify"));
    out.insert("inputs".into(), form_inputs(&target));
    out.insert("domain".into(), domain_json(cert.domain));
    out.insert("kind".into(), json!(cert.kind.as_str()));
    match verify(&cert, &target) {
        VerifyOutcome::Valid => {
            out.insert("valid".into(), json!(true));
            Ok((Value::Object(out), 0))
        }
        VerifyOutcome::Invalid(reason) => {
            out.insert("valid".into(), json!(false));
            out.insert("reason".into(), json!(reason));
            Ok((Value::Object(out), 1))
        }
    }
}

fn cmd_oracle(args: &[String]) -> Result<(Value, u8), String> {
    let flags = Flags::parse(args, &[])?;
    flags.check_allowed(&["a", "b", "c", "domain", "budget", "seed"])?;
    let form = QuarticForm::new(flags.rational("a")?, flags.rational("b")?, flags.rational("c")?);
    let domain = flags.domain()?;
    let budget = flags.integer("budget", 10_000)?;
    if budget == 0 {
        return Err("--budget must be at least 1".into());
    }
    let seed = flags.integer("seed", 0)?;

    let report = numeric_min(&form, domain, budget, seed);
    let counterexample = find_counterexample(&form, domain, budget, seed);

    let mut out = Map::new();
    out.insert("schema_version".into(), json!(SCHEMA_VERSION));
    out.insert("command".into(), json!("oracle"));
    out.insert("inputs".into(), form_inputs(&form));
    out.insert("domain".into(), domain_json(domain));
    out.insert("budget".into(), json!(budget));
    out.insert("seed".into(), json!(seed));
    out.insert("min_estimate".into(), json!(report.min_estimate));
    out.insert("argmin".into(), json!(report.argmin.to_vec()));
    out.insert("samples".into(), json!(report.samples));
    out.insert(
        "hint".into(),
        json!(match report.hint {
            VerdictHint::LikelyHolds => "likely-holds",
            VerdictHint::LikelyFails => "likely-fails",
        }),
    );
    if let Some(ce) = counterexample {
        out.insert("counterexample".into(), counterexample_json(&ce));
    }
    Ok((Value::Object(out), 0))
}
