//! Reduce a diagram to the trivial one and print the certificate trace.
use twisted_gauss::{parse_gauss_code, unknot, verify_trace, write_trace};

fn main() {
    let code = std::env::args().nth(1).unwrap_or_else(|| "U1-O2-U3+O4+U2-O1-bU4+bO3+".into());
    let d = parse_gauss_code(&code).expect("valid code");
    let t = unknot(&d);
    print!("{}", write_trace(&t));
    verify_trace(&t).expect("certificate replays");
    eprintln!("{} steps, terminal {:?}", t.len(), t.terminal.to_string());
}
