use clap::Parser;

fn main() {
    let cli = gelfand::cli::Cli::parse();
    std::process::exit(gelfand::cli::run(cli));
}
