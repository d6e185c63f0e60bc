fn main() { std::process::exit(cyquiv::cli::main_entry()); }
