fn main() {
    std::process::exit(rooted_partitions::cli::main());
}
