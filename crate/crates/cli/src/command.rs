//! Command-line grammar. Expressions are kept as written and parsed when
//! the command runs, so that malformed input produces an error report with
//! a position rather than a usage message.

use clap::{Args, Parser, Subcommand, ValueEnum};
use weylkit::dixmier::{Parity, Which};

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(
    name = "weylkit",
    version,
    about = "Exact computations in the first Weyl algebra and the affine plane"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Default)]
pub struct GlobalOpts {
    /// Search radius D for membership: products P^i Q^j with i*deg P + j*deg Q <= D.
    #[arg(long, global = true, value_name = "D")]
    pub bound: Option<u32>,
    /// Maximum word length L for word searches.
    #[arg(long = "word-length", global = true, value_name = "L")]
    pub word_length: Option<usize>,
    /// Maximum degree of triangular letters in word searches.
    #[arg(long = "pool-degree", global = true, value_name = "N")]
    pub pool_degree: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KindArg {
    #[default]
    Homo,
    Anti,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    #[default]
    Endo,
    Anti,
}

/// Involutions are given as `alpha`, `beta` or `imgX; imgY`.
#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Normal-order a Weyl expression in X, Y, or expand one in commuting x, y.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Read the expression in commuting variables x, y.
        #[arg(long)]
        commutative: bool,
    },
    /// Check that (P, Q) defines an endomorphism: [Q, P] = 1.
    CheckEndo {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Check that (P, Q) defines an anti-endomorphism: [Q, P] = -1.
    CheckAnti {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Check whether the map X -> P, Y -> Q is an involution.
    CheckInvolution {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value_t = KindArg::Anti)]
        kind: KindArg,
    },
    /// Conjugate an involution by a generator word: w^-1 . i . w.
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        involution: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Split an element into symmetric and skew parts.
    SymSkew {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value = "alpha", allow_hyphen_values = true)]
        involution: String,
    },
    /// Build a member of the alpha-commuting family aX + bY + sum c_j (X - Y)^(2j).
    AlphaFamily {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Coefficients c_0, c_1, ... separated by commas.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Vec<String>,
        #[arg(long, value_enum, default_value_t = Variant::Endo)]
        variant: Variant,
    },
    /// Write C, commuting with P, as a polynomial h(P).
    Centralizer {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Search for W as a combination of P^i Q^j.
    Membership {
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Search for X and Y in the subalgebra generated by P, Q.
    AutoDecide {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Check f . gamma = delta . f for the homomorphism X -> FX, Y -> FY.
    GammaDelta {
        #[arg(allow_hyphen_values = true)]
        fx: String,
        #[arg(allow_hyphen_values = true)]
        fy: String,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
        #[arg(allow_hyphen_values = true)]
        delta: String,
    },
    /// Classify h . f . g^-1 for generator words g, h.
    GhCheck {
        #[arg(allow_hyphen_values = true)]
        fx: String,
        #[arg(allow_hyphen_values = true)]
        fy: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(long, value_enum, default_value_t = KindArg::Homo)]
        kind: KindArg,
    },
    /// Check that an involution maps P and Q back into their subalgebra.
    Restriction {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "alpha", allow_hyphen_values = true)]
        involution: String,
    },
    /// Search for a conjugate of alpha exchanging P and Q.
    ExtensionSearch {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Certify (P, Q) as an automorphism from a symmetric or skew image.
    #[command(alias = "dixmier-sym-pipeline")]
    SymPipeline {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "alpha", allow_hyphen_values = true)]
        involution: String,
        #[arg(long, default_value = "P")]
        which: Which,
        #[arg(long, default_value = "sym")]
        parity: Parity,
    },
    /// Search for a word making one image alpha-symmetric or alpha-skew.
    SymmetrizeSearch {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "P")]
        which: Which,
    },
    /// Jacobian determinant of the plane map x -> p, y -> q.
    KxyJacobian {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Factor a plane automorphism into affine and triangular letters.
    KxyFactor {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Classify a plane involution up to conjugacy.
    KxyClassify {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Jacobian of f and whether f . gamma = delta . f; maps are `p; q`.
    KxyJcCheck {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
        #[arg(allow_hyphen_values = true)]
        delta: String,
    },
    /// Run commands from a file (or `-` for stdin), one per line.
    Batch { file: String },
    /// Run randomized consistency checks.
    Selftest {
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
    /// Print the JSON schema of reports.
    Schema,
}

impl Command {
    /// The subcommand name as typed on the command line.
    pub fn verb(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::CheckEndo { .. } => "check-endo",
            Command::CheckAnti { .. } => "check-anti",
            Command::CheckInvolution { .. } => "check-involution",
            Command::Conjugate { .. } => "conjugate",
            Command::SymSkew { .. } => "sym-skew",
            Command::AlphaFamily { .. } => "alpha-family",
            Command::Centralizer { .. } => "centralizer",
            Command::Membership { .. } => "membership",
            Command::AutoDecide { .. } => "auto-decide",
            Command::GammaDelta { .. } => "gamma-delta",
            Command::GhCheck { .. } => "gh-check",
            Command::Restriction { .. } => "restriction",
            Command::ExtensionSearch { .. } => "extension-search",
            Command::SymPipeline { .. } => "sym-pipeline",
            Command::SymmetrizeSearch { .. } => "symmetrize-search",
            Command::KxyJacobian { .. } => "kxy-jacobian",
            Command::KxyFactor { .. } => "kxy-factor",
            Command::KxyClassify { .. } => "kxy-classify",
            Command::KxyJcCheck { .. } => "kxy-jc-check",
            Command::Batch { .. } => "batch",
            Command::Selftest { .. } => "selftest",
            Command::Schema => "schema",
        }
    }

    /// Options (name, value) and positional arguments, in grammar order.
    fn parts(&self) -> (Vec<(&'static str, Option<String>)>, Vec<String>) {
        let s = |v: &String| v.clone();
        match self {
            Command::Eval { expr, commutative } => {
                let flags = if *commutative {
                    vec![("--commutative", None)]
                } else {
                    vec![]
                };
                (flags, vec![s(expr)])
            }
            Command::CheckEndo { p, q }
            | Command::CheckAnti { p, q }
            | Command::AutoDecide { p, q }
            | Command::ExtensionSearch { p, q }
            | Command::KxyJacobian { p, q }
            | Command::KxyFactor { p, q }
            | Command::KxyClassify { p, q } => (vec![], vec![s(p), s(q)]),
            Command::CheckInvolution { p, q, kind } => {
                (vec![("--kind", Some(kind_text(*kind).into()))], vec![s(p), s(q)])
            }
            Command::Conjugate { involution, word } => (vec![], vec![s(involution), s(word)]),
            Command::SymSkew { expr, involution } => {
                (vec![("--involution", Some(s(involution)))], vec![s(expr)])
            }
            Command::AlphaFamily { a, b, c, variant } => {
                let mut flags = vec![("--a", Some(s(a))), ("--b", Some(s(b)))];
                if !c.is_empty() {
                    flags.push(("--c", Some(c.join(","))));
                }
                let v = match variant {
                    Variant::Endo => "endo",
                    Variant::Anti => "anti",
                };
                flags.push(("--variant", Some(v.into())));
                (flags, vec![])
            }
            Command::Centralizer { p, c } => (vec![], vec![s(p), s(c)]),
            Command::Membership { w, p, q } => (vec![], vec![s(w), s(p), s(q)]),
            Command::GammaDelta { fx, fy, gamma, delta } => {
                (vec![], vec![s(fx), s(fy), s(gamma), s(delta)])
            }
            Command::GhCheck { fx, fy, g, h, kind } => (
                vec![("--kind", Some(kind_text(*kind).into()))],
                vec![s(fx), s(fy), s(g), s(h)],
            ),
            Command::Restriction { p, q, involution } => {
                (vec![("--involution", Some(s(involution)))], vec![s(p), s(q)])
            }
            Command::SymPipeline {
                p,
                q,
                involution,
                which,
                parity,
            } => (
                vec![
                    ("--involution", Some(s(involution))),
                    ("--which", Some(which.to_string())),
                    ("--parity", Some(parity.to_string())),
                ],
                vec![s(p), s(q)],
            ),
            Command::SymmetrizeSearch { p, q, which } => {
                (vec![("--which", Some(which.to_string()))], vec![s(p), s(q)])
            }
            Command::KxyJcCheck { f, gamma, delta } => (vec![], vec![s(f), s(gamma), s(delta)]),
            Command::Batch { file } => (vec![], vec![s(file)]),
            Command::Selftest { cases } => (vec![("--cases", Some(cases.to_string()))], vec![]),
            Command::Schema => (vec![], vec![]),
        }
    }
}

fn kind_text(k: KindArg) -> &'static str {
    match k {
        KindArg::Homo => "homo",
        KindArg::Anti => "anti",
    }
}

impl Cli {
    /// Parses one command line (without the program name).
    pub fn parse_line(line: &str) -> Result<Cli, String> {
        let words = shlex::split(line).ok_or_else(|| format!("unbalanced quotes in `{line}`"))?;
        Cli::try_parse_from(std::iter::once("weylkit".to_string()).chain(words))
            .map_err(|e| e.to_string().trim_end().to_string())
    }

    /// A command line that [`Cli::parse_line`] reads back as `self`.
    pub fn to_line(&self) -> String {
        let mut words: Vec<String> = vec![self.command.verb().to_string()];
        let o = &self.opts;
        if let Some(d) = o.bound {
            words.extend(["--bound".into(), d.to_string()]);
        }
        if let Some(l) = o.word_length {
            words.extend(["--word-length".into(), l.to_string()]);
        }
        if let Some(n) = o.pool_degree {
            words.extend(["--pool-degree".into(), n.to_string()]);
        }
        if o.format == Format::Json {
            words.extend(["--format".into(), "json".into()]);
        }
        if let Some(s) = o.seed {
            words.extend(["--seed".into(), s.to_string()]);
        }
        let (flags, positional) = self.command.parts();
        for (name, value) in flags {
            // `=` keeps values such as `-1/2` from reading as flags.
            words.push(match value {
                Some(v) => format!("{name}={v}"),
                None => name.to_string(),
            });
        }
        if !positional.is_empty() {
            words.push("--".into());
            words.extend(positional);
        }
        shlex::try_join(words.iter().map(String::as_str)).expect("arguments contain no NUL bytes")
    }
}
