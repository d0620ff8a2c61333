use std::process::ExitCode;

use modring_cli::emf::EmfCli;

fn main() -> ExitCode {
    modring_cli::main_for::<EmfCli>()
}
