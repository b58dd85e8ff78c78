fn main() {
    std::process::exit(johnson_crc::cli::run());
}
