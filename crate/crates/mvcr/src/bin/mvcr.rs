fn main() {
    std::process::exit(mvcr::cli::main_entry());
}
