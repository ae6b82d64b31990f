use std::io::Write;

fn main() {
    let env_dir = std::env::var_os(symcoef_cli::CACHE_ENV).map(Into::into);
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = symcoef_cli::run(
        std::env::args_os(),
        env_dir,
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
