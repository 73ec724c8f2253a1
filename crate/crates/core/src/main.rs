use clap::Parser;

fn main() {
    let cli = invgen::cli::Cli::parse();
    std::process::exit(invgen::cli::run(cli));
}
