fn main() -> std::process::ExitCode {
    smbicat::cli::main_with_args(std::env::args_os())
}
