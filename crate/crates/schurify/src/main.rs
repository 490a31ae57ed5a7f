use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = schurify::cli::run_args(std::env::args_os());
    let result = if !out.error {
        std::io::stdout().write_all(out.text.as_bytes())
    } else {
        std::io::stderr().write_all(out.text.as_bytes())
    };
    if result.is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(out.code as u8)
}
