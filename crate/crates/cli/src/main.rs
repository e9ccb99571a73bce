use anncat_cli::run::{exit_code, render, run, Cli, RunError};
use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let go = || run(&cli);
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(go),
            Err(e) => Err(RunError::Input(format!("cannot start {n} workers: {e}"))),
        },
        None => go(),
    };
    let code = exit_code(&result);
    match &result {
        Ok(o) => print!("{}", render(o, cli.report)),
        Err(RunError::Input(m)) => eprintln!("error: {m}"),
        Err(RunError::Failed(m)) => eprintln!("failed: {m}"),
    }
    ExitCode::from(code as u8)
}
