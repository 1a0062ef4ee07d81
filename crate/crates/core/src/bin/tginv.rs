fn main() {
    std::process::exit(tensor_ginv::cli::run(std::env::args_os()));
}
