use clap::Parser;

fn main() {
    let cli = harmonics_cli::Cli::parse();
    std::process::exit(harmonics_cli::run(cli));
}
