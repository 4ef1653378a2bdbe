fn main() {
    std::process::exit(k3w::run(std::env::args_os()));
}
