use std::io::{self, Write};

fn main() {
    let code = {
        let mut out = io::stdout().lock();
        let code = alliance_tools::cli::run(std::env::args_os(), &mut io::stdin().lock(), &mut out, &mut io::stderr());
        let _ = out.flush();
        code
    };
    std::process::exit(code);
}
