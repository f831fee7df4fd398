fn main() {
    std::process::exit(weingarten_cli::run(std::env::args_os()));
}
