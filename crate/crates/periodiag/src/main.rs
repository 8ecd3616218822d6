use std::process::ExitCode;

fn main() -> ExitCode {
    periodiag::cli::main_entry()
}
