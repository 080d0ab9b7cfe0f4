use autoform_core::classify::{classify, isomorphism_solve, pullback_check, pullback_search, zero_divisor_bound, Newness};
use autoform_core::formal::{
    constant_solutions, formal_solution, local_order, normal_form, ramification_exponent, Case, Chart, Point,
};
use autoform_core::{Classification, Embedding, Error, Mobius, OneForm, Poly, RationalFunction};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::parse::{parse_constant, parse_form, parse_function, parse_ode};
use crate::render::Names;
use crate::session::Session;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Decompose,
    Divisor,
    Residues,
    Pullback,
    Search,
    Isom,
    Solve,
    Local,
    Report,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub forms: Vec<String>,
    pub odes: Vec<String>,
    pub alg: Option<String>,
    pub syms: Vec<String>,
    pub at: Option<String>,
    pub terms: u64,
    pub via: Vec<String>,
    pub max_degree: usize,
}

/// Text and JSON renderings of one command's result.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub text: String,
    pub json: Map<String, Value>,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, v: Value) {
        self.json.insert(key.into(), v);
    }
}

struct Input {
    text: String,
    form: OneForm,
}

fn inputs(opts: &Options, session: &Session) -> Result<Vec<Input>, CliError> {
    let mut out = Vec::new();
    for s in &opts.forms {
        out.push(Input { text: s.clone(), form: parse_form(s, &session.scope)? });
    }
    for s in &opts.odes {
        out.push(Input { text: s.clone(), form: parse_ode(s, &session.scope)? });
    }
    if out.is_empty() {
        return Err(CliError::Usage("give a form with --form or an equation with --ode".into()));
    }
    if out.iter().any(|i| i.form.is_zero()) {
        return Err(CliError::Core(Error::ZeroForm));
    }
    Ok(out)
}

fn single(inputs: Vec<Input>) -> Result<Input, CliError> {
    match <[Input; 1]>::try_from(inputs) {
        Ok([i]) => Ok(i),
        Err(_) => Err(CliError::Usage("this command takes exactly one form".into())),
    }
}

pub fn run(cmd: Command, opts: &Options) -> Result<Report, CliError> {
    let session = Session::new(opts.alg.as_deref(), &opts.syms)?;
    let names = &session.names;
    let inputs = inputs(opts, &session)?;
    let mut r = Report::default();
    r.set("input", Value::Array(inputs.iter().map(|i| json!(i.text)).collect()));
    if !session.field().is_rationals() {
        r.set("field", names.field_json(session.field()));
    }
    let via = opts.via.iter().map(|s| parse_function(s, &session.scope)).collect::<Result<Vec<_>, _>>()?;
    match cmd {
        Command::Isom => isom(&mut r, names, &inputs)?,
        Command::Report => report(&mut r, names, &inputs, opts)?,
        _ => {
            let input = single(inputs)?;
            let w = &input.form;
            match cmd {
                Command::Classify => {
                    let (text, c, newness) = classification(names, w, opts.max_degree, &via)?;
                    r.line(text);
                    r.set("classification", c);
                    if let Some(n) = newness {
                        r.set("newness", n);
                    }
                }
                Command::Decompose => decompose(&mut r, names, w)?,
                Command::Divisor => {
                    let d = w.divisor()?;
                    r.line(names.divisor(&d));
                    r.set("divisor", names.divisor_json(&d));
                }
                Command::Residues => residues(&mut r, names, w)?,
                Command::Pullback => {
                    let [f] = via.as_slice() else {
                        return Err(CliError::Usage("pullback needs exactly one --via map".into()));
                    };
                    let eta = pullback_check(w, f)?;
                    match &eta {
                        Some(eta) => r.line(format!("pullback along {}: {}", names.function(f), names.form(eta))),
                        None => r.line(format!("not a pullback along {}", names.function(f))),
                    }
                    r.set("newness", json!({ "via": names.function(f), "eta": eta.map(|e| names.form(&e)) }));
                }
                Command::Search => {
                    let (text, n) = search(names, w, opts.max_degree, &via)?;
                    r.text.push_str(&text);
                    r.set("newness", n);
                }
                Command::Solve => solve(&mut r, names, w, &session, opts)?,
                Command::Local => local(&mut r, names, w, &session, opts)?,
                Command::Isom | Command::Report => unreachable!(),
            }
        }
    }
    r.set("errors", json!([]));
    Ok(r)
}

fn embedding_note(names: &Names, e: &Embedding) -> Option<String> {
    (!e.is_identity()).then(|| format!("where {} = 0", names.field(e.target())))
}

fn classification(
    names: &Names,
    w: &OneForm,
    max_degree: usize,
    via: &[RationalFunction],
) -> Result<(String, Value, Option<Value>), CliError> {
    Ok(match classify(w)? {
        Classification::Exact { v } => {
            let text = format!("exact; v = {}", names.function(&v));
            (text, json!({ "type": "exact", "v": names.function(&v) }), None)
        }
        Classification::Exponential { c, f, embedding } => {
            let mut text = format!("exponential; c = {}, f = {}", names.number(&c), names.function(&f));
            if let Some(note) = embedding_note(names, &embedding) {
                text = format!("{text} {note}");
            }
            let j = json!({
                "type": "exponential",
                "c": names.number_json(&c),
                "f": names.function(&f),
                "field": names.field_json(embedding.target()),
            });
            (text, j, None)
        }
        Classification::GeneralType => {
            let result = pullback_search(w, max_degree, via)?;
            let text = match (&result.verdict, result.hits.first()) {
                (Newness::ProvenNew, _) => format!("general type; new (zero-divisor degree {})", result.bound),
                (Newness::Old, Some((f, _))) => format!("general type; old (pullback along {})", names.function(f)),
                _ => format!("general type; undecided (zero-divisor degree {})", result.bound),
            };
            (text, json!({ "type": "general" }), Some(newness_json(names, &result)))
        }
    })
}

fn newness_json(names: &Names, s: &autoform_core::classify::SearchResult) -> Value {
    let verdict = match s.verdict {
        Newness::Old => "old",
        Newness::ProvenNew => "new",
        Newness::Undecided => "undecided",
    };
    json!({
        "verdict": verdict,
        "proof": s.verdict != Newness::Undecided,
        "zero_divisor_degree": s.bound,
        "hits": s.hits.iter().map(|(f, eta)| json!({ "via": names.function(f), "eta": names.form(eta) })).collect::<Vec<_>>(),
    })
}

fn search(names: &Names, w: &OneForm, max_degree: usize, via: &[RationalFunction]) -> Result<(String, Value), CliError> {
    let result = pullback_search(w, max_degree, via)?;
    let mut text = match result.verdict {
        Newness::Old => "old\n".to_string(),
        Newness::ProvenNew => format!("new (proof: general type, zero-divisor degree {})\n", result.bound),
        Newness::Undecided => format!("undecided (no pullback found; zero-divisor degree {})\n", result.bound),
    };
    for (f, eta) in &result.hits {
        text.push_str(&format!("{} <- {}\n", names.function(f), names.form(eta)));
    }
    Ok((text, newness_json(names, &result)))
}

fn decompose(r: &mut Report, names: &Names, w: &OneForm) -> Result<(), CliError> {
    let d = w.log_decompose()?;
    r.line(format!("v = {}", names.function(&d.v)));
    let mut terms = Vec::new();
    for (a, t) in d.basis.iter().zip(&d.terms) {
        let u = names.function(&t.u);
        let a_text = names.number(a);
        let a_text = if a_text.contains(' ') { format!("({a_text})") } else { a_text };
        r.line(format!("{a_text} · d({u})/({u}), divisor {}", names.divisor(&t.divisor)));
        terms.push(json!({
            "coefficient": names.number_json(a),
            "u": u,
            "divisor": names.divisor_json(&t.divisor),
        }));
    }
    if let Some(note) = embedding_note(names, &d.embedding) {
        r.line(note);
    }
    r.set(
        "decomposition",
        json!({ "v": names.function(&d.v), "terms": terms, "field": names.field_json(&d.field) }),
    );
    Ok(())
}

fn residues(r: &mut Report, names: &Names, w: &OneForm) -> Result<(), CliError> {
    let mut out = Vec::new();
    for res in w.residues()? {
        let point = names.point(&res.point);
        let trace = res.trace();
        match res.value() {
            Some(v) => {
                r.line(format!("res[{point}] = {}", names.number(&v)));
                out.push(json!({ "point": point, "residue": names.number_json(&v), "trace": names.number_json(&trace) }));
            }
            None => {
                let class = names.poly(&res.class, "x");
                r.line(format!("res[{point}] = {class} mod ({point}), trace {}", names.number(&trace)));
                out.push(json!({ "point": point, "class": class, "trace": names.number_json(&trace) }));
            }
        }
    }
    r.set("residues", Value::Array(out));
    Ok(())
}

fn mobius_json(names: &Names, m: &Mobius) -> Value {
    let matrix: Vec<Value> = [&m.a, &m.b, &m.c, &m.d].into_iter().map(|x| names.number_json(x)).collect();
    json!({
        "map": names.function(&m.to_rational_function()),
        "matrix": matrix,
    })
}

fn isom(r: &mut Report, names: &Names, inputs: &[Input]) -> Result<(), CliError> {
    let [a, b] = inputs else {
        return Err(CliError::Usage("isom takes exactly two forms".into()));
    };
    let maps = isomorphism_solve(&a.form, &b.form)?;
    if maps.is_empty() {
        r.line("no isomorphism");
    }
    for m in &maps {
        let note = if m.field() == a.form.field() { String::new() } else { format!(" where {} = 0", names.field(m.field())) };
        r.line(format!("x -> {}{note}", names.function(&m.to_rational_function())));
    }
    r.set("isomorphisms", Value::Array(maps.iter().map(|m| mobius_json(names, m)).collect()));
    Ok(())
}

fn parse_point(text: &str, session: &Session) -> Result<Point, CliError> {
    match text.trim() {
        "inf" | "infinity" | "∞" => Ok(Point::Infinity),
        t => Ok(Point::Finite(parse_constant(t, &session.scope)?)),
    }
}

fn point_text(names: &Names, p: &Point) -> String {
    match p {
        Point::Infinity => "inf".into(),
        Point::Finite(a) => names.number(a),
    }
}

fn at(opts: &Options) -> Result<&str, CliError> {
    opts.at.as_deref().ok_or_else(|| CliError::Usage("this command needs --at".into()))
}

fn solve(r: &mut Report, names: &Names, w: &OneForm, session: &Session, opts: &Options) -> Result<(), CliError> {
    let p = parse_point(at(opts)?, session)?;
    let s = formal_solution(w, &p, opts.terms)?;
    r.line(names.series(&s));
    if let Some(note) = embedding_note(names, &s.embedding) {
        r.line(note);
    }
    let coefficients: Vec<Value> = s
        .coeffs
        .iter()
        .map(|(k, c)| json!({ "exponent": format!("{k}/{}", s.e), "value": names.number_json(c) }))
        .collect();
    r.set(
        "solutions",
        json!({
            "point": point_text(names, &p),
            "chart": match s.chart { Chart::X => "x", Chart::InverseX => "1/x" },
            "e": s.e,
            "order": s.order,
            "constant": s.is_constant(),
            "field": names.field_json(&s.field),
            "series": names.series(&s),
            "coefficients": coefficients,
        }),
    );
    Ok(())
}

fn local(r: &mut Report, names: &Names, w: &OneForm, session: &Session, opts: &Options) -> Result<(), CliError> {
    let p = parse_point(at(opts)?, session)?;
    let order = local_order(w, &p.to_closed())?;
    let nf = normal_form(w, &p, opts.terms.max(1) as usize)?;
    let c = nf.local.c.as_ref().map(|c| names.number(c));
    let (case, normal) = match nf.local.case {
        Case::I => ("I", format!("D(T) = {}*T", c.clone().unwrap_or_default())),
        Case::II => ("II", format!("D(T) = T^{order}")),
        Case::III => ("III", format!("D(T) = T^{order} + {}*T^{}", c.clone().unwrap_or_default(), 2 * order - 1)),
    };
    let t = Poly::from_coeffs(&nf.field, nf.parameter.clone());
    let t_text = format!("{} + O(t^{})", names.ascending(&t, "t"), nf.parameter.len());
    let e_p = if order < 0 { 1 - order } else { 1 };
    r.line(format!("order {order}, case {case}: {normal}"));
    r.line(format!("T = {t_text}"));
    if let Some(note) = embedding_note(names, &nf.embedding) {
        r.line(note);
    }
    let mut j = json!({
        "point": point_text(names, &p),
        "order": order,
        "case": case,
        "normal_form": normal,
        "parameter": t_text,
        "e": e_p,
        "field": names.field_json(&nf.field),
    });
    if let Some(c) = &nf.local.c {
        j["c"] = names.number_json(c);
    }
    r.set("solutions", j);
    Ok(())
}

fn report(r: &mut Report, names: &Names, inputs: &[Input], opts: &Options) -> Result<(), CliError> {
    let mut docs = Vec::new();
    let mut general = Vec::new();
    for (i, input) in inputs.iter().enumerate() {
        let w = &input.form;
        let (text, class, newness) = classification(names, w, opts.max_degree, &[])?;
        let d = w.log_decompose()?;
        let divisor = w.divisor()?;
        let constants = constant_solutions(w)?;
        let e = ramification_exponent(w)?;
        let bound = zero_divisor_bound(w)?;
        r.line(format!("form {}: {}", i + 1, names.form(w)));
        r.line(format!("  classification: {text}"));
        r.line(format!("  zero-divisor degree: {bound}"));
        r.line(format!("  divisor: {}", names.divisor(&divisor)));
        r.line(format!("  v = {}", names.function(&d.v)));
        for (a, t) in d.basis.iter().zip(&d.terms) {
            r.line(format!("  log term: {} with divisor {}", names.number(a), names.divisor(&t.divisor)));
        }
        let consts: Vec<String> = constants.iter().map(|p| format!("[{}]", names.point(p))).collect();
        r.line(format!("  constant solutions: {}", if consts.is_empty() { "none".into() } else { consts.join(", ") }));
        r.line(format!("  ramification exponent: {e}"));
        if matches!(class["type"].as_str(), Some("general")) {
            general.push(i);
        }
        let terms: Vec<Value> = d
            .basis
            .iter()
            .zip(&d.terms)
            .map(|(a, t)| json!({ "coefficient": names.number_json(a), "u": names.function(&t.u), "divisor": names.divisor_json(&t.divisor) }))
            .collect();
        docs.push(json!({
            "input": input.text,
            "classification": class,
            "newness": newness,
            "decomposition": { "v": names.function(&d.v), "terms": terms, "field": names.field_json(&d.field) },
            "divisor": names.divisor_json(&divisor),
            "solutions": {
                "constant": consts,
                "ramification_exponent": e,
                "zero_divisor_degree": bound,
            },
        }));
    }
    let mut isos = Vec::new();
    for (x, &i) in general.iter().enumerate() {
        for &j in &general[x + 1..] {
            let maps = isomorphism_solve(&inputs[i].form, &inputs[j].form)?;
            let shown: Vec<String> = maps.iter().map(|m| names.function(&m.to_rational_function())).collect();
            r.line(format!(
                "isomorphisms form {} <- form {}: {}",
                i + 1,
                j + 1,
                if shown.is_empty() { "none".into() } else { shown.join(", ") }
            ));
            isos.push(json!({ "forms": [i + 1, j + 1], "maps": maps.iter().map(|m| mobius_json(names, m)).collect::<Vec<_>>() }));
        }
    }
    r.set("reports", Value::Array(docs));
    r.set("isomorphisms", Value::Array(isos));
    Ok(())
}

