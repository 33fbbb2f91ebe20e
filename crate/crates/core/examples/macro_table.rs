//! Exhaustive derived-move check over minimal hosts, as a TSV table.
fn main() {
    let report = twisted_gauss::verify_macro_table();
    print!("{}", report.to_table());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
