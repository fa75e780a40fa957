use clap::Parser;

use delannoy_cli::args::Cli;
use delannoy_cli::exec;

fn main() {
    // clap exits 2 on usage errors and 0 for --help/--version
    let cli = Cli::parse();
    std::process::exit(exec::execute(&cli));
}
