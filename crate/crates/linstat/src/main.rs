use clap::{Arg, ArgAction, Command};
use linstat::config::{schema, ValueKind, SUBCOMMANDS};
use std::collections::BTreeMap;
use std::path::PathBuf;

fn about(sub: &str) -> &'static str {
    match sub {
        "sample" => "Draw eigenvalue batches and write them as CSV or binary",
        "functionals" => "Print kappa, mu and K for a test function",
        "clt-run" => "Kolmogorov-Smirnov distances over an n sweep with the n^(1/d) bound constant",
        "charfn" => "Characteristic function gaps against the Gaussian, with exact values for small n",
        "cov" => "Joint covariance of Chebyshev linear statistics",
        "rh-verify" => "Residuals of the Riemann-Hilbert parametrix identities",
        _ => "",
    }
}

fn cli() -> Command {
    let mut cmd = Command::new("linstat")
        .version(env!("CARGO_PKG_VERSION"))
        .about("Linear eigenvalue statistics of GUE, LUE and JUE")
        .after_help("Exit codes: 0 ok, 2 config, 3 degenerate input, 4 verification breach, 5 numeric failure.\nLINSTAT_THREADS sets the worker count.")
        .subcommand_required(true);
    for sub in SUBCOMMANDS {
        let mut sc = Command::new(sub).about(about(sub)).arg(
            Arg::new("config")
                .long("config")
                .value_name("FILE")
                .help("key = value file or manifest.json of an earlier run; flags win"),
        );
        for k in schema(sub) {
            let help = format!("{} [default: {}]", k.help, k.default);
            let arg = Arg::new(k.key).long(k.key).help(help);
            let arg = if k.kind == ValueKind::Bool {
                arg.action(ArgAction::SetTrue)
            } else {
                arg.value_name("VALUE").allow_hyphen_values(true)
            };
            sc = sc.arg(arg);
        }
        cmd = cmd.subcommand(sc);
    }
    cmd
}

fn main() {
    let matches = match cli().try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let (sub, m) = matches.subcommand().expect("subcommand required");
    let mut flags = BTreeMap::new();
    for k in schema(sub) {
        if k.kind == ValueKind::Bool {
            if m.get_flag(k.key) {
                flags.insert(k.key.to_string(), "true".to_string());
            }
        } else if let Some(v) = m.get_one::<String>(k.key) {
            flags.insert(k.key.to_string(), v.clone());
        }
    }
    let config = m.get_one::<String>("config").map(PathBuf::from);
    let (code, text) = linstat::execute(sub, config.as_deref(), flags);
    if code == 0 {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
    std::process::exit(code);
}
