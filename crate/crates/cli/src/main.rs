fn main() {
    std::process::exit(lrc_cli::run(std::env::args_os()));
}
