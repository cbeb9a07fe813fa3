use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let max_width = std::env::var(hexatile::cli::MAX_WIDTH_VAR).ok();
    let code = hexatile::cli::run(std::env::args_os(), max_width.as_deref(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
