use std::process::ExitCode;

fn main() -> ExitCode {
    let result = dyck_poset_cli::run(std::env::args_os());
    if result.exit_code == 0 {
        print!("{}", result.payload);
    } else {
        eprint!("{}", result.payload);
    }
    ExitCode::from(result.exit_code as u8)
}
