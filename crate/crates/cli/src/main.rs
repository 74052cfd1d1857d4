fn main() {
    std::process::exit(kfree_cli::app::main_with(std::env::args_os()));
}
