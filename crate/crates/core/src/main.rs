fn main() {
    std::process::exit(asd_eta::cli::main_with_args(std::env::args_os()));
}
