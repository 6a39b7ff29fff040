use std::io::Write;

use purple_ramsey_cli::{execute, parse_args, CliError};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let plan = match parse_args(std::env::args_os()) {
        Ok(p) => p,
        Err(CliError::Clap(e)) => e.exit(),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match execute(&plan, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    std::process::exit(code);
}
