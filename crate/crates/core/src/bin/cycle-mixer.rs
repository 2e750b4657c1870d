fn main() {
    std::process::exit(cycle_mixer::cli::main());
}
