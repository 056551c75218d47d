//! Executes parsed commands and wraps every result, including failures, in
//! a [`Report`].

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;
use weylkit::dixmier::{
    automorphism_decision, centralizer_poly, corresponding_involution_on_t, default_bound, extension_search,
    gamma_delta_check, gh_check, membership, restriction_check, symmetric_image_pipeline, symmetrize_search,
    Bounded, ImagePair, SearchPool,
};
use weylkit::maps::{
    alpha_family, alpha_family_invert, check_involution, conjugate_involution, word_invert, word_to_map,
};
use weylkit::parse::{parse_comm_with, parse_scalar, parse_weyl_with, ParseOptions};
use weylkit::plane::{alpha_jc_check, involution_classify, jacobian, jvdk_factor, Classification};
use weylkit::{AlgebraMap, CommPoly, GeneratorWord, Involution, Kind, PlaneMap, WeylPoly};

use crate::command::{Cli, Command, GlobalOpts, KindArg, Variant};
use crate::report::{Bound, Report, ERROR, NOT_FOUND};
use crate::selftest;

pub const DEFAULT_PIPELINE_BOUND: u32 = 12;
pub const DEFAULT_WORD_LENGTH: usize = 2;
pub const DEFAULT_POOL_DEGREE: usize = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] weylkit::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("self-test failed: {0}")]
    SelftestFailed(String),
}

impl CliError {
    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.tag(),
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::SelftestFailed(_) => "selftest-failed",
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// A successful result before timing is attached.
struct Outcome {
    outcome: String,
    payload: Map<String, Value>,
    bound: Option<Bound>,
}

fn outcome(tag: &str, payload: Value) -> Outcome {
    let Value::Object(payload) = payload else {
        panic!("payload must be a JSON object");
    };
    Outcome {
        outcome: tag.to_string(),
        payload,
        bound: None,
    }
}

impl Outcome {
    fn with_bound(mut self, b: Bound) -> Self {
        self.bound = Some(b);
        self
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn weyl(s: &str) -> Result<WeylPoly> {
    Ok(parse_weyl_with(s, ParseOptions::from_env())?)
}

fn comm(s: &str) -> Result<CommPoly> {
    Ok(parse_comm_with(s, ParseOptions::from_env())?)
}

fn word(s: &str) -> Result<GeneratorWord> {
    Ok(s.parse()?)
}

fn pair(p: &str, q: &str) -> Result<ImagePair> {
    Ok(ImagePair::new(weyl(p)?, weyl(q)?)?)
}

/// Splits `a; b`, optionally wrapped in parentheses.
fn split_map_spec(spec: &str) -> Result<(&str, &str)> {
    let t = spec.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .filter(|inner| inner.contains(';'))
        .unwrap_or(t);
    let parts: Vec<&str> = t.split(';').collect();
    match parts.as_slice() {
        [a, b] => Ok((a.trim(), b.trim())),
        _ => Err(CliError::Usage(format!(
            "expected a map `imgX; imgY` or a name, got `{spec}`"
        ))),
    }
}

/// `alpha`, `beta`, or the images `imgX; imgY` of an anti-automorphism.
pub fn involution(spec: &str) -> Result<Involution> {
    match spec.trim() {
        "alpha" => Ok(Involution::alpha()),
        "beta" => Ok(Involution::beta()),
        _ => {
            let (x, y) = split_map_spec(spec)?;
            Ok(Involution::new(AlgebraMap::new(weyl(x)?, weyl(y)?, Kind::Anti)?)?)
        }
    }
}

/// `swap`, `id`, or the images `p; q`.
pub fn plane_map(spec: &str) -> Result<PlaneMap> {
    match spec.trim() {
        "swap" => Ok(PlaneMap::swap()),
        "id" => Ok(PlaneMap::identity()),
        _ => {
            let (p, q) = split_map_spec(spec)?;
            Ok(PlaneMap::new(comm(p)?, comm(q)?))
        }
    }
}

fn kind(k: KindArg) -> Kind {
    match k {
        KindArg::Homo => Kind::Homo,
        KindArg::Anti => Kind::Anti,
    }
}

fn images(f: &AlgebraMap) -> Value {
    json!({"imgX": f.img_x(), "imgY": f.img_y()})
}

fn pool(opts: &GlobalOpts) -> SearchPool {
    SearchPool::with_degree(opts.pool_degree.unwrap_or(DEFAULT_POOL_DEGREE))
}

fn not_found(b: Bound) -> Outcome {
    outcome(NOT_FOUND, json!({})).with_bound(b)
}

fn execute(cmd: &Command, opts: &GlobalOpts) -> Result<Outcome> {
    Ok(match cmd {
        Command::Eval { expr, commutative } => {
            let value = if *commutative {
                comm(expr)?.to_string()
            } else {
                weyl(expr)?.to_string()
            };
            outcome("value", json!({ "value": value }))
        }
        Command::CheckEndo { p, q } | Command::CheckAnti { p, q } => {
            let (p, q) = (weyl(p)?, weyl(q)?);
            let c = q.commutator(&p);
            let anti = matches!(cmd, Command::CheckAnti { .. });
            let target = if anti { -WeylPoly::one() } else { WeylPoly::one() };
            let tag = match (c == target, anti) {
                (true, false) => "valid-endomorphism",
                (true, true) => "valid-anti-endomorphism",
                (false, _) => "invalid-relation",
            };
            outcome(tag, json!({"commutator": c, "imgX": p, "imgY": q}))
        }
        Command::CheckInvolution { p, q, kind: k } => {
            let f = AlgebraMap::new(weyl(p)?, weyl(q)?, kind(*k))?;
            let square = f.compose(&f);
            let tag = if check_involution(&f) {
                "involution"
            } else {
                "not-involution"
            };
            outcome(
                tag,
                json!({"map": f, "square": images(&square), "kind": f.kind()}),
            )
        }
        Command::Conjugate { involution: i, word: w } => {
            let (iota, w) = (involution(i)?, word(w)?);
            let c = conjugate_involution(&iota, &w)?;
            outcome(
                "involution",
                json!({"involution": c.map(), "word": w.to_string()}),
            )
        }
        Command::SymSkew { expr, involution: i } => {
            let (u, iota) = (weyl(expr)?, involution(i)?);
            let (s, k) = iota.sym_skew_decompose(&u);
            outcome("decomposition", json!({"sym": s, "skew": k}))
        }
        Command::AlphaFamily { a, b, c, variant } => {
            let (a, b) = (parse_scalar(a)?, parse_scalar(b)?);
            let c = c.iter().map(|s| parse_scalar(s)).collect::<weylkit::Result<Vec<_>>>()?;
            let variant = match variant {
                Variant::Endo => Kind::Homo,
                Variant::Anti => Kind::Anti,
            };
            let f = alpha_family(&a, &b, &c, variant)?;
            let mut payload = json!({"map": f, "commutesWithAlpha": f.commutes_with_alpha()});
            if variant == Kind::Homo {
                payload["inverse"] = to_value(&alpha_family_invert(&f)?);
            }
            outcome("family-member", payload)
        }
        Command::Centralizer { p, c } => {
            let (p, c) = (weyl(p)?, weyl(c)?);
            let h = centralizer_poly(&p, &c)?;
            outcome("polynomial", json!({ "h": h }))
        }
        Command::Membership { w, p, q } => {
            let (w, pair) = (weyl(w)?, pair(p, q)?);
            let d = opts.bound.unwrap_or_else(|| default_bound(&w, &pair));
            match membership(&w, &pair, d) {
                Bounded::Found(t) => outcome("found", json!({ "table": t })).with_bound(Bound::degree(d)),
                Bounded::NotFoundUpTo(d) => not_found(Bound::degree(d)),
            }
        }
        Command::AutoDecide { p, q } => {
            let pair = pair(p, q)?;
            let d = opts.bound.unwrap_or_else(|| {
                default_bound(&WeylPoly::x(), &pair).max(default_bound(&WeylPoly::y(), &pair))
            });
            match automorphism_decision(&pair, d) {
                Bounded::Found(c) => {
                    outcome("certificate", json!({ "certificate": c })).with_bound(Bound::degree(d))
                }
                Bounded::NotFoundUpTo(d) => not_found(Bound::degree(d)),
            }
        }
        Command::GammaDelta { fx, fy, gamma, delta } => {
            let f = AlgebraMap::new(weyl(fx)?, weyl(fy)?, Kind::Homo)?;
            let (g, d) = (involution(gamma)?, involution(delta)?);
            let tag = if gamma_delta_check(&f, &g, &d) {
                "holds"
            } else {
                "fails"
            };
            outcome(
                tag,
                json!({
                    "fGamma": images(&f.compose(g.map())),
                    "deltaF": images(&d.map().compose(&f)),
                }),
            )
        }
        Command::GhCheck { fx, fy, g, h, kind: k } => {
            let f = AlgebraMap::new(weyl(fx)?, weyl(fy)?, kind(*k))?;
            let (g, h) = (word(g)?, word(h)?);
            let composite = word_to_map(&h).compose(&f).compose(&word_to_map(&word_invert(&g)));
            outcome(gh_check(&f, &g, &h).as_str(), json!({ "composite": composite }))
        }
        Command::Restriction { p, q, involution: i } => {
            let (pair, e) = (pair(p, q)?, involution(i)?);
            let d = opts.bound.unwrap_or_else(|| {
                default_bound(&e.apply(pair.p()), &pair).max(default_bound(&e.apply(pair.q()), &pair))
            });
            match restriction_check(&pair, &e, d) {
                Bounded::Found(r) => {
                    let (ep, eq) = corresponding_involution_on_t(&e, &pair);
                    outcome(
                        "restricts",
                        json!({"witnesses": r, "onImage": {"P": ep, "Q": eq}}),
                    )
                    .with_bound(Bound::degree(d))
                }
                Bounded::NotFoundUpTo(d) => not_found(Bound::degree(d)),
            }
        }
        Command::ExtensionSearch { p, q } => {
            let pair = pair(p, q)?;
            let l = opts.word_length.unwrap_or(DEFAULT_WORD_LENGTH);
            let b = Bound::length(l as u32);
            match extension_search(&pair, l, &pool(opts)) {
                Bounded::Found(w) => {
                    let gamma = conjugate_involution(&Involution::alpha(), &w)?;
                    outcome(
                        "found",
                        json!({"word": w.to_string(), "involution": gamma.map()}),
                    )
                    .with_bound(b)
                }
                Bounded::NotFoundUpTo(_) => not_found(b),
            }
        }
        Command::SymPipeline {
            p,
            q,
            involution: i,
            which,
            parity,
        } => {
            let (pair, e) = (pair(p, q)?, involution(i)?);
            let d = opts.bound.unwrap_or(DEFAULT_PIPELINE_BOUND);
            let r = symmetric_image_pipeline(&pair, &e, d, *which, *parity)?;
            match r.decision {
                Bounded::Found(c) => outcome(
                    "certificate",
                    json!({"trace": r.trace, "certificate": c}),
                )
                .with_bound(Bound::degree(d)),
                Bounded::NotFoundUpTo(d) => {
                    let mut o = not_found(Bound::degree(d));
                    o.payload.insert("trace".into(), to_value(&r.trace));
                    o
                }
            }
        }
        Command::SymmetrizeSearch { p, q, which } => {
            let pair = pair(p, q)?;
            let l = opts.word_length.unwrap_or(DEFAULT_WORD_LENGTH);
            let b = Bound::length(l as u32);
            match symmetrize_search(&pair, *which, l, &pool(opts)) {
                Bounded::Found((w, parity)) => {
                    let image = word_to_map(&w).apply(pair.select(*which));
                    outcome(
                        "found",
                        json!({"word": w.to_string(), "parity": parity, "image": image}),
                    )
                    .with_bound(b)
                }
                Bounded::NotFoundUpTo(_) => not_found(b),
            }
        }
        Command::KxyJacobian { p, q } => {
            let f = PlaneMap::new(comm(p)?, comm(q)?);
            outcome("jacobian", json!({ "jacobian": jacobian(&f) }))
        }
        Command::KxyFactor { p, q } => {
            let f = PlaneMap::new(comm(p)?, comm(q)?);
            let w = jvdk_factor(&f)?;
            outcome(
                "factorization",
                json!({"word": w.to_string(), "letters": w, "length": w.len()}),
            )
        }
        Command::KxyClassify { p, q } => {
            let f = PlaneMap::new(comm(p)?, comm(q)?);
            let class = involution_classify(&f)?;
            let mut payload = json!({ "classification": class });
            let tag = match &class {
                Classification::AlphaClass { conjugator } => {
                    payload["conjugator"] = json!(conjugator.to_string());
                    payload["jacobian"] = to_value(&jacobian(&f));
                    "alpha-class"
                }
                Classification::MinusIdentityClass { conjugator, .. } => {
                    if let Some(w) = conjugator {
                        payload["conjugator"] = json!(w.to_string());
                    }
                    payload["jacobian"] = to_value(&jacobian(&f));
                    payload["note"] = json!("order-two map with Jacobian 1, so not conjugate to the swap");
                    "minus-identity-class"
                }
                Classification::NotInvolution => "not-involution",
            };
            outcome(tag, payload)
        }
        Command::KxyJcCheck { f, gamma, delta } => {
            let (f, g, d) = (plane_map(f)?, plane_map(gamma)?, plane_map(delta)?);
            let (j, commutes) = alpha_jc_check(&f, &g, &d)?;
            let tag = if commutes { "commutes" } else { "does-not-commute" };
            outcome(tag, json!({"jacobian": j, "commutes": commutes}))
        }
        Command::Selftest { cases } => {
            let seed = opts.seed.unwrap_or(0);
            let results = selftest::run(seed, *cases);
            let failed: Vec<&str> = results.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            if !failed.is_empty() {
                return Err(CliError::SelftestFailed(failed.join(", ")));
            }
            let checks: Map<String, Value> = results
                .iter()
                .map(|(n, _)| (n.to_string(), json!("passed")))
                .collect();
            outcome(
                "passed",
                json!({"checks": checks, "seed": seed, "cases": cases}),
            )
        }
        Command::Schema => outcome("schema", json!({ "schema": schema() })),
        Command::Batch { .. } => {
            return Err(CliError::Usage("batch files cannot contain batch commands".into()));
        }
    })
}

pub fn schema() -> Value {
    serde_json::from_str(crate::SCHEMA).expect("bundled schema is valid JSON")
}

fn error_payload(e: &CliError) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("message".into(), json!(e.to_string()));
    m.insert("kind".into(), json!(e.tag()));
    if let CliError::Core(weylkit::Error::Parse(p)) = e {
        m.insert("position".into(), json!(p.position));
        m.insert("expected".into(), json!(p.expected));
    }
    m
}

pub fn error_report(verb: &str, e: &CliError) -> Report {
    Report {
        verb: verb.to_string(),
        outcome: ERROR.into(),
        payload: error_payload(e),
        bound: None,
        millis: 0,
    }
}

/// Runs a single (non-batch) command.
pub fn run(cli: &Cli) -> Report {
    let start = Instant::now();
    let result = execute(&cli.command, &cli.opts);
    let millis = start.elapsed().as_millis() as u64;
    match result {
        Ok(o) => Report {
            verb: cli.command.verb().to_string(),
            outcome: o.outcome,
            payload: o.payload,
            bound: o.bound,
            millis,
        },
        Err(e) => Report {
            millis,
            ..error_report(cli.command.verb(), &e)
        },
    }
}

/// Runs the commands in `text`, one per line, skipping blank lines and
/// `#` comments. Commands run in parallel; reports keep input order.
pub fn run_batch(text: &str) -> Vec<Report> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    lines
        .par_iter()
        .map(|line| match Cli::parse_line(line) {
            Ok(cli) => run(&cli),
            // The line has no valid verb to report under.
            Err(msg) => error_report("batch", &CliError::Usage(format!("`{line}`: {msg}"))),
        })
        .collect()
}

/// Reads a batch file, `-` meaning standard input.
pub fn read_batch(path: &str) -> Result<String> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    };
    if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}
