use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let inv = degen::cli::run(std::env::args_os());
    print!("{}", inv.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", inv.stderr);
    ExitCode::from(inv.status as u8)
}
