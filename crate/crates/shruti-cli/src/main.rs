use std::io;

fn main() {
    let code = shruti_cli::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
