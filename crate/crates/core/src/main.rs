use clap::Parser;

fn main() {
    std::process::exit(hypercut::cli::run(hypercut::cli::Cli::parse()));
}
