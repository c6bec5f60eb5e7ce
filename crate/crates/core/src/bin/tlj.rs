use std::io::Write;

fn main() {
    let (code, out) = tlj_core::cli::run(std::env::args_os());
    let mut stream: Box<dyn Write> = if code == 0 || code == 1 { Box::new(std::io::stdout()) } else { Box::new(std::io::stderr()) };
    let _ = stream.write_all(out.as_bytes());
    std::process::exit(code);
}
