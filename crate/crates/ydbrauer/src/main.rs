fn main() {
    std::process::exit(ydbrauer::cli::main_entry());
}
