fn main() {
    std::process::exit(suq11::cli::run(std::env::args_os()));
}
