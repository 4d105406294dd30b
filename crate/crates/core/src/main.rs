use std::io;

fn main() {
    let code = svreg::cli::execute(
        std::env::args_os(),
        io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
