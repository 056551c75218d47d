use proptest::prelude::*;
use weylkit::dixmier::{Parity, Which};
use weylkit_cli::command::{Cli, Command, Format, GlobalOpts, KindArg, Variant};
use weylkit_cli::{run_batch, Status};

// Printable text including quotes, spaces, semicolons and leading dashes.
fn arg() -> impl Strategy<Value = String> {
    "[ -~]{0,12}"
}

fn nonempty_no_comma() -> impl Strategy<Value = String> {
    "[ -+\\--~]{1,8}"
}

fn kind() -> impl Strategy<Value = KindArg> {
    prop_oneof![Just(KindArg::Homo), Just(KindArg::Anti)]
}

fn which() -> impl Strategy<Value = Which> {
    prop_oneof![Just(Which::P), Just(Which::Q)]
}

fn command() -> impl Strategy<Value = Command> {
    prop_oneof![
        (arg(), any::<bool>()).prop_map(|(expr, commutative)| Command::Eval { expr, commutative }),
        (arg(), arg()).prop_map(|(p, q)| Command::CheckEndo { p, q }),
        (arg(), arg()).prop_map(|(p, q)| Command::CheckAnti { p, q }),
        (arg(), arg(), kind()).prop_map(|(p, q, kind)| Command::CheckInvolution { p, q, kind }),
        (arg(), arg()).prop_map(|(involution, word)| Command::Conjugate { involution, word }),
        (arg(), arg()).prop_map(|(expr, involution)| Command::SymSkew { expr, involution }),
        (
            arg(),
            arg(),
            prop::collection::vec(nonempty_no_comma(), 0..4),
            prop_oneof![Just(Variant::Endo), Just(Variant::Anti)]
        )
            .prop_map(|(a, b, c, variant)| Command::AlphaFamily { a, b, c, variant }),
        (arg(), arg()).prop_map(|(p, c)| Command::Centralizer { p, c }),
        (arg(), arg(), arg()).prop_map(|(w, p, q)| Command::Membership { w, p, q }),
        (arg(), arg()).prop_map(|(p, q)| Command::AutoDecide { p, q }),
        (arg(), arg(), arg(), arg()).prop_map(|(fx, fy, gamma, delta)| Command::GammaDelta {
            fx,
            fy,
            gamma,
            delta
        }),
        (arg(), arg(), arg(), arg(), kind()).prop_map(|(fx, fy, g, h, kind)| Command::GhCheck {
            fx,
            fy,
            g,
            h,
            kind
        }),
        (arg(), arg(), arg()).prop_map(|(p, q, involution)| Command::Restriction { p, q, involution }),
        (arg(), arg()).prop_map(|(p, q)| Command::ExtensionSearch { p, q }),
        (
            arg(),
            arg(),
            arg(),
            which(),
            prop_oneof![Just(Parity::Sym), Just(Parity::Skew)]
        )
            .prop_map(|(p, q, involution, which, parity)| Command::SymPipeline {
                p,
                q,
                involution,
                which,
                parity
            }),
        (arg(), arg(), which()).prop_map(|(p, q, which)| Command::SymmetrizeSearch { p, q, which }),
        (arg(), arg()).prop_map(|(p, q)| Command::KxyJacobian { p, q }),
        (arg(), arg()).prop_map(|(p, q)| Command::KxyFactor { p, q }),
        (arg(), arg()).prop_map(|(p, q)| Command::KxyClassify { p, q }),
        (arg(), arg(), arg()).prop_map(|(f, gamma, delta)| Command::KxyJcCheck { f, gamma, delta }),
        arg().prop_map(|file| Command::Batch { file }),
        (0usize..100).prop_map(|cases| Command::Selftest { cases }),
        Just(Command::Schema),
    ]
}

fn opts() -> impl Strategy<Value = GlobalOpts> {
    (
        prop::option::of(0u32..40),
        prop::option::of(0usize..5),
        prop::option::of(0usize..5),
        any::<bool>(),
        prop::option::of(any::<u64>()),
    )
        .prop_map(|(bound, word_length, pool_degree, json, seed)| GlobalOpts {
            bound,
            word_length,
            pool_degree,
            format: if json { Format::Json } else { Format::Text },
            seed,
        })
}

proptest! {
    #[test]
    fn command_lines_round_trip(opts in opts(), command in command()) {
        let cli = Cli { opts, command };
        let line = cli.to_line();
        prop_assert_eq!(Cli::parse_line(&line), Ok(cli), "line: {}", line);
    }
}

#[test]
fn documented_invocations_parse() {
    let cli = Cli::parse_line("check-involution Y X --kind anti").unwrap();
    assert_eq!(
        cli.command,
        Command::CheckInvolution {
            p: "Y".into(),
            q: "X".into(),
            kind: KindArg::Anti
        }
    );
    let cli = Cli::parse_line("dixmier-sym-pipeline \"(X+Y)/2\" \"Y-X\" --involution alpha").unwrap();
    assert_eq!(cli.command.verb(), "sym-pipeline");
    let cli = Cli::parse_line("kxy-classify -x -y --format json").unwrap();
    assert_eq!(cli.opts.format, Format::Json);
    assert!(Cli::parse_line("no-such-verb X").is_err());
}

#[test]
fn batch_keeps_order_and_reports_each_line() {
    let text = "\
# comment
eval \"X*Y\"

membership Y X \"Y+X^2\" --bound 1
eval \"X*(\"
no-such-verb
check-anti Y X
";
    let reports = run_batch(text);
    let summary: Vec<(&str, &str)> = reports.iter().map(|r| (r.verb.as_str(), r.outcome.as_str())).collect();
    assert_eq!(
        summary,
        [
            ("eval", "value"),
            ("membership", "not-found-up-to"),
            ("eval", "error"),
            ("batch", "error"),
            ("check-anti", "valid-anti-endomorphism"),
        ]
    );
    let worst = reports.iter().map(|r| r.status()).max();
    assert_eq!(worst, Some(Status::Error));
    assert_eq!(reports[1].exit_code(), 2);
}
