use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(powersum::cli::run())
}
