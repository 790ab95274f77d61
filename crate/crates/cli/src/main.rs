fn main() {
    std::process::exit(curr::app::run(std::env::args_os()));
}
