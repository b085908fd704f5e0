use clap::Parser;

use apery_cli::{commands, exit_code, Cli};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = apery_core::seed::root_seed()
        .map_err(anyhow::Error::from)
        .and_then(|seed| commands::run(cli, seed));
    if let Err(e) = result {
        eprintln!("error: {e:#}");
        std::process::exit(exit_code(&e));
    }
}
