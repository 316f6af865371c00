use clap::error::ErrorKind;
use clap::Parser;
use ripcert_cli::{exit, run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // exit code 2 is reserved for invariant violations
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => exit::OK,
                _ => exit::OTHER,
            };
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}
