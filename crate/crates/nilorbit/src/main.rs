use std::process;

fn main() {
    process::exit(nilorbit::cli::run());
}
