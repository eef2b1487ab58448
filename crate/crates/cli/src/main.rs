fn main() {
    std::process::exit(convex_eq::run(std::env::args_os()));
}
