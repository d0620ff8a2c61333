use std::process::ExitCode;

use modring_cli::bw::BwCli;

fn main() -> ExitCode {
    modring_cli::main_for::<BwCli>()
}
