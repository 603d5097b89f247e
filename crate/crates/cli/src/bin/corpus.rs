use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut argv: Vec<String> = std::env::args().collect();
    argv[0] = "corpus".to_string();
    let (code, text) = coalg_cli::run_command(&argv);
    let _ = if code >= coalg_cli::EXIT_INVALID { std::io::stderr().write_all(text.as_bytes()) } else { std::io::stdout().write_all(text.as_bytes()) };
    ExitCode::from(code as u8)
}
