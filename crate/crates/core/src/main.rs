fn main() { std::process::exit(hapsched::sim::cli_main(std::env::args().skip(1).collect())); }
