use std::io::Write;

fn main() {
    let outcome = antiample::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(outcome.stdout.as_bytes()).expect("write to stdout");
    stdout.flush().expect("flush stdout");
    std::process::exit(outcome.exit_code);
}
