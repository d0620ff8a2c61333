use std::process::ExitCode;

use modring_cli::amf::AmfCli;

fn main() -> ExitCode {
    modring_cli::main_for::<AmfCli>()
}
