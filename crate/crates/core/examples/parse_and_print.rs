//! Parse Gauss codes, report counts, print them back.
use twisted_gauss::{parse_gauss_code, print_gauss_code};

fn main() {
    for code in ["O1+U1+", "U1-O2-U3+O4+U2-O1-bU4+bO3+", "bb", "", "O1+U1-", "O1+"] {
        match parse_gauss_code(code) {
            Ok(d) => println!("{code:?}: {} chords, {} bars -> {}", d.chord_count(), d.bar_count(), print_gauss_code(&d)),
            Err(e) => println!("{code:?}: error: {e}"),
        }
    }
}
