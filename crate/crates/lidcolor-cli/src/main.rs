fn main() {
    std::process::exit(lidcolor_cli::run(std::env::args_os()));
}
