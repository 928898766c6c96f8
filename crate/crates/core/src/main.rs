use std::process::ExitCode;

fn main() -> ExitCode {
    matroid_ears::cli::main()
}
