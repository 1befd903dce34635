use std::io::Write;

fn main() {
    let out = tri_moduli_cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
